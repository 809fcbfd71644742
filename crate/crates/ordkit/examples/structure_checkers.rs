//! The structural decision procedures: projectivity with lifting,
//! discrete generation, order-filtrality, compactness, separation,
//! representability of complemented upsets, and the preservation
//! implications.
//!
//! ```bash
//! cargo run -p ordkit --example structure_checkers
//! ```

use ordkit::checkers::{
    check_cu_representable, check_discrete_generator, check_preservation_lemmas, discrete_cover,
    is_compact_fin, is_order_filtral, is_projective_fin, is_separated_fin, lift_through, CompactnessMode,
};
use ordkit::enumerate::all_posets_up_to;
use ordkit::poset::{FinPoset, MonotoneMap};
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();
    let chain = FinPoset::chain(2);
    let vee = FinPoset::vee();

    // Projective = discrete; the chain fails with the discrete cover as
    // the counterexample, and discrete posets come with a lifting
    // procedure.
    let p = is_projective_fin(&chain);
    println!("C2 projective: {} (counterexample cover: {:?})", p.projective, p.counterexample);
    let a2 = FinPoset::antichain(2);
    let e = discrete_cover(&chain);
    let m = MonotoneMap::from_ids(a2.clone(), chain.clone(), [("a", "0"), ("b", "1")])?;
    let lift = lift_through(&a2, &e, &m)?;
    println!("lift of {m:?} through the discrete cover: {lift:?}");

    // The point is a discrete generator: its copower indexed by the
    // points of X covers X.
    let (canonical, report) = check_discrete_generator(&vee, &caps)?;
    println!("\ndiscrete generator arrow onto V: {canonical:?} ({:?})", report.verdict);

    // Order-filtrality, compactness, separation: all three hold for
    // every finite poset; here swept over everything with up to 4
    // elements.
    let mut all_pass = true;
    for x in all_posets_up_to(4) {
        all_pass &= is_order_filtral(&x, &caps)?.passed();
        all_pass &= is_compact_fin(&x, CompactnessMode::FiniteLatticeShortcut, &caps)?.passed();
        all_pass &= is_separated_fin(&x, &caps)?.passed();
    }
    println!("\nfiltral + compact + separated over all posets with <= 4 elements: {all_pass}");

    // The definitional form of compactness, checked exhaustively over
    // codirected subsets on a small instance.
    let r = is_compact_fin(&vee, CompactnessMode::Exhaustive { max_members: 12 }, &caps)?;
    println!("exhaustive compactness on V: {:?}", r.verdict);

    // Complemented upsets are the maps into the two-chain.
    let r = check_cu_representable(&vee, &caps)?;
    println!("CU(V) is represented by maps into C2: {:?}", r.verdict);

    // The preservation implications, instantiated on a surjection.
    let collapse = MonotoneMap::from_ids(a2, chain, [("a", "0"), ("b", "1")])?;
    for r in check_preservation_lemmas(&collapse, &caps)? {
        println!("{} ... {:?}", r.claim, r.verdict);
    }
    Ok(())
}
