//! Congruence closure, quotients, coinserters, disjoint unions, lax
//! pushouts, and copowers.
//!
//! ```bash
//! cargo run -p ordkit --example quotients_and_colimits
//! ```

use ordkit::colimits::{
    check_coinserter_universal, coinserter, congruence_closure, copower, disjoint_union, lax_pushout, quotient,
};
use ordkit::limits::lax_kernel;
use ordkit::poset::{FinPoset, MonotoneMap};
use ordkit::subobject::Relation;
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();
    let chain = FinPoset::chain(2);
    let antichain = FinPoset::antichain(2);

    // Closing a relation into a congruence: forcing a <= b on the
    // antichain adds exactly that pair; forcing 1 <= 0 on the chain
    // collapses everything by transitivity and antisymmetry.
    let forced = congruence_closure(&antichain, &Relation::from_ids(&antichain, &antichain, [("a", "b")])?)?;
    println!("closure of a~b on the antichain: {forced:?}");
    let collapsed = congruence_closure(&chain, &Relation::from_ids(&chain, &chain, [("1", "0")])?)?;
    println!("closure of 1~0 on the chain:     {collapsed:?}");

    // Quotients: classes of mutually related elements, ordered by the
    // congruence. The quotient map's lax kernel is the congruence.
    let (carrier, q) = quotient(&forced);
    println!("antichain / (a~b): {carrier:?} via {q:?}");
    assert_eq!(lax_kernel(&q), forced.as_relation());
    let (point, _) = quotient(&collapsed);
    println!("chain / (1~0): {point:?}");

    // Coinserters: the universal arrow u with f;u <= g;u. Picking the
    // two points of the antichain orders them.
    let one = FinPoset::one();
    let pick_a = MonotoneMap::from_ids(one.clone(), antichain.clone(), [("*", "a")])?;
    let pick_b = MonotoneMap::from_ids(one.clone(), antichain.clone(), [("*", "b")])?;
    let (ordered, u) = coinserter(&pick_a, &pick_b)?;
    println!("\ncoinserter forcing a <= b: {ordered:?}");
    for t in [FinPoset::one(), chain.clone(), FinPoset::vee()] {
        let report = check_coinserter_universal(&pick_a, &pick_b, &ordered, &u, &t, &caps)?;
        println!("  universal property at {t:?}: {:?}", report.verdict);
    }

    // Disjoint unions keep the summands incomparable.
    let (sum, _, _) = disjoint_union(&chain, &chain);
    println!("\nC2 + C2: {sum:?}");

    // The lax pushout of the point along itself is the two-chain; its
    // characterizing conditions are checked and reported.
    let id = MonotoneMap::identity(&one);
    let po = lax_pushout(&id, &id)?;
    println!("lax pushout of 1 -> 1 along itself: {:?}", po.carrier);
    for c in &po.conditions {
        println!("  {} ... {:?}", c.claim, c.verdict);
    }

    // Gluing two chains at the bottom: transitivity forces an extra
    // cross pair, so the exact-witness condition fails and says so.
    let pick_0 = MonotoneMap::from_ids(one, chain.clone(), [("*", "0")])?;
    let po = lax_pushout(&pick_0, &pick_0)?;
    println!("\ntwo chains glued under 0: {:?}", po.carrier);
    for c in &po.conditions {
        println!("  {} ... {:?}", c.claim, c.verdict);
    }

    // Copowers are tensors with discrete posets.
    let cp = copower(["s", "t"], &chain, &caps)?;
    println!("\n{{s,t}} . C2: {cp:?}");
    Ok(())
}
