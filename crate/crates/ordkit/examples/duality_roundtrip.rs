//! Finite duality: upset lattices, filters, prime filters, the Birkhoff
//! round trips, the finite order compactification, and the
//! point/ultrafilter comparison.
//!
//! ```bash
//! cargo run -p ordkit --example duality_roundtrip
//! ```

use ordkit::duality::{filters, nachbin_fin, prime_filters, upset_dl, xi_fin, DistLattice};
use ordkit::poset::FinPoset;
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();
    let vee = FinPoset::vee();

    // The lattice of upsets, with explicit meet/join tables validated
    // for distributivity on construction.
    let up = upset_dl(&vee, &caps)?;
    println!("Up(V) has {} elements: {:?}", up.lattice.len(), up.lattice.carrier());

    // Filters are enumerated genuinely (meet-closed upsets); for a
    // finite lattice they are exactly the principal ones, which comes
    // back as a verified witness.
    let filt = filters(&up.lattice, &caps)?;
    println!(
        "Filt(Up(V)): {} filters, principal gives an order-isomorphism: {}",
        filt.count(),
        filt.principal_is_iso
    );

    // Prime filters of the upset lattice recover the poset: the finite
    // compactification is the identity up to isomorphism.
    let primes = prime_filters(&up.lattice, &caps)?;
    println!("prime filters of Up(V): {:?}", primes.poset);
    let (compactified, unit) = nachbin_fin(&vee, &caps)?;
    println!("compactification of V: {compactified:?}, unit is iso: {}", unit.is_iso());

    // The lattice-side round trip through join-irreducibles.
    let three_chain = DistLattice::from_poset(FinPoset::chain(3))?;
    let irreducibles = three_chain.join_irreducibles_poset();
    println!("\njoin-irreducibles of the 3-chain: {irreducibles:?}");
    let back = upset_dl(&irreducibles.opposite(), &caps)?;
    println!("upsets of their opposite: {} elements (the 3-chain again)", back.lattice.len());

    // Non-lattices and non-distributive lattices are rejected.
    let m3 = FinPoset::new(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )?;
    println!("\nM3 is refused: {}", DistLattice::from_poset(m3).unwrap_err());

    // Ultrafilters of a five-element powerset biject with the set, and
    // the comparison with points of the copower is the bijection
    // computed through classifying maps.
    let xi = xi_fin(["a", "b", "c", "d", "e"], &caps)?;
    println!(
        "\n|S| = 5: {} ultrafilters, point comparison bijective: {}",
        xi.ultrafilters.count(),
        xi.bijective
    );
    Ok(())
}
