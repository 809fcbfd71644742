//! Finite weighted limits: products and equalizers as conical cases,
//! cotensors and lax pullbacks through nontrivial weights, and the
//! opt-in universal-property verification.
//!
//! ```bash
//! cargo run -p ordkit --example weighted_limits
//! ```

use ordkit::limits::{
    check_universal_property, epi_diagonal, lax_kernel, lax_pullback, weighted_limit, FiniteDiagram, Weight,
};
use ordkit::poset::{FinPoset, MonotoneMap};
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();
    let chain = FinPoset::chain(2);

    // Conical weight on a two-node edgeless diagram: the product.
    let d = FiniteDiagram::new(vec![("a".into(), chain.clone()), ("b".into(), chain.clone())]);
    let w = Weight::conical(&d);
    let (product, _) = weighted_limit(&d, &w, &caps)?;
    println!("C2 x C2 as a weighted limit: {product:?}");

    // Weighting a single node by the chain: the cotensor, whose points
    // are comparable pairs.
    let d = FiniteDiagram::new(vec![("x".into(), chain.clone())]);
    let w = Weight::new(&d, vec![chain.clone()], vec![])?;
    let (cotensor, cone) = weighted_limit(&d, &w, &caps)?;
    println!("cotensor C2 ^ C2: {cotensor:?}");

    // The representing property, verified against every small apex.
    for t in [FinPoset::one(), chain.clone(), FinPoset::antichain(2)] {
        let report = check_universal_property(&d, &w, &cotensor, &cone, &t, &caps)?;
        println!("  universal property at {t:?}: {:?}", report.verdict);
    }

    // Equalizers: a parallel pair with the conical weight.
    let id = MonotoneMap::identity(&chain);
    let const1 = MonotoneMap::constant(&chain, &chain, 1);
    let mut d = FiniteDiagram::new(vec![("x".into(), chain.clone()), ("y".into(), chain.clone())]);
    d.add_edge(0, 1, id.clone())?;
    d.add_edge(0, 1, const1.clone())?;
    let (equalizer, _) = weighted_limit(&d, &Weight::conical(&d), &caps)?;
    println!("equalizer of id and const-1: {equalizer:?}");

    // Lax pullbacks: pairs whose images are comparable rather than
    // equal. Along the identity they carve out the order itself.
    let (comma, _, _) = lax_pullback(&id, &id)?;
    println!("lax pullback of id along id: {comma:?}");

    // The lax kernel of a map relates whatever the map fails to
    // separate; for the collapse of the antichain it is a 3-pair
    // relation, and the epi-diagonal is the order as a subobject.
    let collapse = MonotoneMap::from_ids(
        FinPoset::antichain(2),
        chain.clone(),
        [("a", "0"), ("b", "1")],
    )?;
    println!("lax kernel of the collapse: {:?}", lax_kernel(&collapse));
    println!("epi-diagonal of C2: {:?}", epi_diagonal(&chain));
    Ok(())
}
