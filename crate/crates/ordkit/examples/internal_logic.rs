//! The internal language: signatures, parsing, semantic entailment with
//! counterexample witnesses, and compositional substitution.
//!
//! ```bash
//! cargo run -p ordkit --example internal_logic
//! ```

use ordkit::logic::{
    entails, interpret_formula, parse_formula, parse_sequent, pullback_interpretation, substitute, Context,
    Signature, Term,
};
use ordkit::poset::{tensor, FinPoset};
use ordkit::Caps;

fn main() -> ordkit::Result<()> {
    let caps = Caps::default();

    // A one-sort signature over the two-chain.
    let mut sig = Signature::new();
    sig.add_sort("C2", FinPoset::chain(2))?;

    // Antisymmetry holds semantically: interpretations are compared as
    // subobjects of the context product.
    let sequent = parse_sequent("x <= y /\\ y <= x |- x = y", &sig, None)?;
    println!("antisymmetry: {:?}", entails(&sig, &sequent, &caps)?);

    // A failing sequent comes back with its least counterexample.
    let sequent = parse_sequent("top |- x <= y", &sig, None)?;
    println!("top |- x <= y: {:?}", entails(&sig, &sequent, &caps)?);

    // Formulas interpret to subobjects; the order atom recovers the
    // order relation inside the square.
    let (formula, ctx) = parse_formula("x <= y", &sig, None)?;
    let interpretation = interpret_formula(&sig, &ctx, &formula, &caps)?;
    println!("[[x <= y]] over C2 x C2 = {interpretation:?}");

    // The two-constants object: the tensor 2.1, with both points named.
    let two = tensor(&FinPoset::chain(2), &FinPoset::one(), &caps)?;
    let (zero, one) = (two.id(0).to_string(), two.id(1).to_string());
    let mut sig2 = Signature::new();
    sig2.add_sort("two", two)?;
    sig2.add_constant("0", "two", &zero)?;
    sig2.add_constant("1", "two", &one)?;
    for text in ["|- x = 0 \\/ x = 1", "|- 0 <= 1", "1 <= 0 |- bot"] {
        let sequent = parse_sequent(text, &sig2, None)?;
        println!("{text}  ~>  holds = {}", entails(&sig2, &sequent, &caps)?.holds);
    }

    // Existential quantification: every x has something above it.
    let sequent = parse_sequent("top |- exists y:C2. x <= y", &sig, None)?;
    println!("exists-an-upper-bound: {:?}", entails(&sig, &sequent, &caps)?.holds);

    // Substitution is compositional: substituting syntactically and
    // interpreting equals pulling the interpretation back along the
    // bindings.
    let source = Context::with(vec![("x".into(), 0), ("y".into(), 0)]);
    let target = Context::with(vec![("z".into(), 0)]);
    let (phi, _) = parse_formula("x <= y", &sig, Some(&source))?;
    let bindings = [Term::Var(0), Term::Var(0)];
    let substituted = substitute(&sig, &source, &phi, &bindings, &target)?;
    let direct = interpret_formula(&sig, &target, &substituted, &caps)?;
    let pulled = pullback_interpretation(&sig, &source, &phi, &bindings, &target, &caps)?;
    println!("\n[[ (x <= y)[z/x, z/y] ]] = {direct:?}");
    println!("pullback along the bindings = {pulled:?}");
    assert_eq!(direct, pulled);
    Ok(())
}
