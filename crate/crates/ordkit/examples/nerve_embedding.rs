//! The nerve over a projective cover: enumerating natural
//! transformations between nerves and verifying that the embedding is
//! fully faithful, plus the presentation of an object as a quotient of
//! a representable.
//!
//! ```bash
//! cargo run -p ordkit --example nerve_embedding
//! ```

use ordkit::presheaf::{
    check_nerve_fully_faithful, check_nerve_presentation, enumerate_nat_transformations,
    full_subcategory_of_finpos, nerve,
};
use ordkit::poset::FinPoset;
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();

    // A five-object full subcategory of the finite-poset world. The
    // discrete objects are projective and cover everything, so they
    // form a projective cover.
    let cat = full_subcategory_of_finpos(
        vec![
            ("1".into(), FinPoset::one()),
            ("A2".into(), FinPoset::antichain(2)),
            ("C2".into(), FinPoset::chain(2)),
            ("V".into(), FinPoset::vee()),
            ("D3".into(), FinPoset::discrete(["p", "q", "r"])?),
        ],
        &caps,
    )?;
    let family: Vec<usize> = (0..cat.object_count()).filter(|&i| cat.object(i).is_discrete()).collect();
    let names: Vec<&str> = family.iter().map(|&i| cat.object_name(i)).collect();
    println!("covering family: {names:?}");

    // The nerve of V over the family: hom-posets as carriers.
    let v = cat.object_index("V")?;
    let n = nerve(&cat, &family, v);
    for (k, &p) in family.iter().enumerate() {
        println!("N(V)({}) has {} elements", cat.object_name(p), n.carrier(&cat, k).len());
    }

    // Natural transformations N(C2) -> N(V) correspond to maps C2 -> V.
    let c2 = cat.object_index("C2")?;
    let nats = enumerate_nat_transformations(&cat, &family, c2, v, &caps)?;
    println!(
        "\nNat(N(C2), N(V)): {} transformations vs {} arrows",
        nats.len(),
        cat.hom(c2, v).len()
    );

    // Fully faithful across every object pair.
    let reports = check_nerve_fully_faithful(&cat, &family, &caps)?;
    let all = reports.iter().all(|r| r.passed());
    println!("nerve fully faithful on all {} pairs: {all}", reports.len());

    // The essential-image shape on a sample: C2 is presented as a
    // quotient of a representable by a congruence covered by another
    // representable.
    let r = check_nerve_presentation(&cat, &family, c2, &caps)?;
    println!("presentation of C2: {:?}", r.verdict);
    Ok(())
}
