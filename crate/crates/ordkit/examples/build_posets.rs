//! Constructing finite posets and monotone maps, classifying maps,
//! enumerating hom-posets, and rendering Hasse diagrams.
//!
//! ```bash
//! cargo run -p ordkit --example build_posets
//! ```

use ordkit::io::to_dot;
use ordkit::poset::{classify, hom_poset, tensor, FinPoset, MonotoneMap};
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();

    // Posets are built from elements and order pairs; the closure is
    // taken automatically, and cycles are rejected.
    let chain = FinPoset::new(["0", "1"], [("0", "1")])?;
    let vee = FinPoset::new(["x", "y", "z"], [("x", "z"), ("y", "z")])?;
    println!("chain: {chain:?}");
    println!("vee:   {vee:?}");
    let cycle = FinPoset::new(["a", "b"], [("a", "b"), ("b", "a")]);
    println!("a cycle is refused: {}", cycle.unwrap_err());

    // Maps are checked for monotonicity on construction.
    let collapse = MonotoneMap::from_ids(vee.clone(), chain.clone(), [("x", "0"), ("y", "0"), ("z", "1")])?;
    println!("\ncollapse: {collapse:?}");
    let classes = classify(&collapse);
    println!("classified: {classes:?}");

    // The two-element antichain maps onto the chain without embedding:
    // a bijective monotone map need not be an isomorphism.
    let antichain = FinPoset::antichain(2);
    let relabel = MonotoneMap::from_ids(antichain.clone(), chain.clone(), [("a", "0"), ("b", "1")])?;
    let classes = classify(&relabel);
    println!("bijective but not iso: injection={}, surjection={}, embedding={}", classes.injection, classes.surjection, classes.embedding);

    // Hom-posets enumerate every monotone map once, under the pointwise
    // order. Maps V -> 2 are exactly the upsets of V.
    let h = hom_poset(&vee, &chain, &caps)?;
    println!("\n|hom(V, C2)| = {} maps:", h.len());
    for k in 0..h.len() {
        println!("  {:?}", h.get(k));
    }

    // Tensors: P . X is the product poset; P = C2 gives the object with
    // two comparable copies of X.
    let two_copies = tensor(&chain, &vee, &caps)?;
    println!("\ntensor C2 . V has {} elements", two_copies.len());

    // Hasse diagram (covers only), suitable for graphviz.
    println!("\n{}", to_dot(&vee));
    Ok(())
}
