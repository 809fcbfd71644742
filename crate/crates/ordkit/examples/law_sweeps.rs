//! Randomized law sweeps with reproducible seeds: orthogonality
//! fillers, Beck-Chevalley, and Frobenius, reported as JSON lines.
//!
//! ```bash
//! cargo run -p ordkit --example law_sweeps
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ordkit::enumerate::{random_orthogonality_instance, random_pullback_square};
use ordkit::subobject::{check_beck_chevalley, check_frobenius, check_orthogonality};
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    // Orthogonality: every commuting square with a surjective top and
    // an embedding at the bottom has exactly one monotone filler.
    for k in 0..5 {
        let inst = random_orthogonality_instance(&mut rng, 4, &caps)?;
        let report = check_orthogonality(
            &inst.f,
            &inst.u,
            &inst.v,
            &inst.i,
            inst.above.as_ref().map(|(a, b)| (a, b)),
            &format!("sample {k}"),
            &caps,
        )?;
        println!("{}", report.to_json_line());
    }

    // Beck-Chevalley and Frobenius over random pullback squares, every
    // subobject swept per instance.
    for _ in 0..5 {
        let square = random_pullback_square(&mut rng, 4, &caps)?;
        println!("{}", check_beck_chevalley(&square)?.to_json_line());
        println!("{}", check_frobenius(&square.bottom).to_json_line());
    }
    Ok(())
}
