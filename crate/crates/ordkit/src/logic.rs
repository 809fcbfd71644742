//! The coherent internal language: terms, formulas, sequents, and their
//! semantic interpretation as subobjects.
//!
//! A signature declares sorts (posets), predicates (subobjects of sort
//! products), operations (monotone maps), and constants (0-ary
//! operations). Formulas are built from `top`, `bot`, conjunction,
//! disjunction, equality, order atoms, predicate application, and
//! existential quantification; the connectives are interpreted by meets,
//! joins, pullbacks of the diagonal and of the order subobject, and
//! direct images along projections. Entailment is inclusion of the
//! interpreted subobjects, with a minimal counterexample tuple on
//! failure.
//!
//! Grammar (ASCII connectives):
//!
//! ```text
//! sequent := [formula] "|-" formula
//! formula := disjunct { "\/" disjunct }
//! disjunct := conjunct { "/\" conjunct }
//! conjunct := "top" | "bot" | "(" formula ")"
//!           | "exists" var ":" sort "." formula      (body extends right)
//!           | term ("=" | "<=") term
//!           | pred [ "(" term { "," term } ")" ]
//! term := var | constant | op "(" term { "," term } ")"
//! ```
//!
//! Contexts are ordered; the product of a context is built left to
//! right, and an untyped source context is inferred from first
//! occurrences when possible.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::limits::epi_diagonal;
use crate::poset::{FinPoset, MonotoneMap, Product};
use crate::subobject::{direct_image, inverse_image, Subobject};

// ---------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------

/// A declared predicate: a subobject of a product of sorts.
pub struct PredicateDecl {
    pub name: String,
    pub arg_sorts: Vec<usize>,
    pub interpretation: Subobject,
}

/// A declared operation: a monotone map from a product of sorts.
/// Constants are 0-ary operations.
pub struct OperationDecl {
    pub name: String,
    pub arg_sorts: Vec<usize>,
    pub result_sort: usize,
    pub interpretation: MonotoneMap,
}

/// A finite first-order signature over poset sorts.
#[derive(Default)]
pub struct Signature {
    sorts: Vec<(String, FinPoset)>,
    predicates: Vec<PredicateDecl>,
    operations: Vec<OperationDecl>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    fn check_fresh(&self, name: &str) -> Result<()> {
        let taken = self.sorts.iter().any(|(n, _)| n == name)
            || self.predicates.iter().any(|p| p.name == name)
            || self.operations.iter().any(|o| o.name == name);
        if taken {
            return Err(Error::Signature(format!("name {name:?} is already declared")));
        }
        Ok(())
    }

    pub fn add_sort(&mut self, name: impl Into<String>, poset: FinPoset) -> Result<&mut Signature> {
        let name = name.into();
        self.check_fresh(&name)?;
        self.sorts.push((name, poset));
        Ok(self)
    }

    pub fn sort_index(&self, name: &str) -> Result<usize> {
        self.sorts
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::Signature(format!("unknown sort {name:?}")))
    }

    pub fn sort(&self, index: usize) -> &FinPoset {
        &self.sorts[index].1
    }

    pub fn sort_name(&self, index: usize) -> &str {
        &self.sorts[index].0
    }

    pub fn sort_count(&self) -> usize {
        self.sorts.len()
    }

    pub(crate) fn product_of(&self, sorts: &[usize]) -> Product {
        let factors: Vec<&FinPoset> = sorts.iter().map(|&s| self.sort(s)).collect();
        Product::new(&factors)
    }

    /// Declares a predicate by the tuples it contains.
    pub fn add_predicate<'a>(
        &mut self,
        name: impl Into<String>,
        arg_sorts: &[&str],
        tuples: impl IntoIterator<Item = &'a [&'a str]>,
    ) -> Result<&mut Signature> {
        let name = name.into();
        self.check_fresh(&name)?;
        let args: Vec<usize> = arg_sorts.iter().map(|s| self.sort_index(s)).collect::<Result<_>>()?;
        let product = self.product_of(&args);
        let mut members = Vec::new();
        for tuple in tuples {
            if tuple.len() != args.len() {
                return Err(Error::Signature(format!(
                    "predicate {name:?} expects {} arguments",
                    args.len()
                )));
            }
            let coords: Vec<usize> = tuple
                .iter()
                .zip(&args)
                .map(|(id, &s)| self.sort(s).index_of(id))
                .collect::<Result<_>>()?;
            members.push(product.flat(&coords));
        }
        self.predicates.push(PredicateDecl {
            name,
            arg_sorts: args,
            interpretation: Subobject::new(&product.poset, members),
        });
        Ok(self)
    }

    /// Declares a predicate from an existing subobject of the product of
    /// the argument sorts.
    pub fn add_predicate_subobject(
        &mut self,
        name: impl Into<String>,
        arg_sorts: &[&str],
        interpretation: Subobject,
    ) -> Result<&mut Signature> {
        let name = name.into();
        self.check_fresh(&name)?;
        let args: Vec<usize> = arg_sorts.iter().map(|s| self.sort_index(s)).collect::<Result<_>>()?;
        let product = self.product_of(&args);
        if interpretation.ambient() != &product.poset {
            return Err(Error::Signature(format!(
                "predicate {name:?} must be a subobject of the product of its argument sorts"
            )));
        }
        self.predicates.push(PredicateDecl {
            name,
            arg_sorts: args,
            interpretation,
        });
        Ok(self)
    }

    /// Declares an operation by its value table on argument tuples.
    pub fn add_operation<'a>(
        &mut self,
        name: impl Into<String>,
        arg_sorts: &[&str],
        result_sort: &str,
        table: impl IntoIterator<Item = (&'a [&'a str], &'a str)>,
    ) -> Result<&mut Signature> {
        let name = name.into();
        self.check_fresh(&name)?;
        let args: Vec<usize> = arg_sorts.iter().map(|s| self.sort_index(s)).collect::<Result<_>>()?;
        let result = self.sort_index(result_sort)?;
        let product = self.product_of(&args);
        let mut assign = vec![usize::MAX; product.poset.len()];
        for (tuple, value) in table {
            if tuple.len() != args.len() {
                return Err(Error::Signature(format!(
                    "operation {name:?} expects {} arguments",
                    args.len()
                )));
            }
            let coords: Vec<usize> = tuple
                .iter()
                .zip(&args)
                .map(|(id, &s)| self.sort(s).index_of(id))
                .collect::<Result<_>>()?;
            assign[product.flat(&coords)] = self.sort(result).index_of(value)?;
        }
        if let Some(missing) = assign.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Signature(format!(
                "operation {name:?} is missing a value at {}",
                product.poset.id(missing)
            )));
        }
        let map = MonotoneMap::new(product.poset, self.sort(result).clone(), assign)?;
        self.operations.push(OperationDecl {
            name,
            arg_sorts: args,
            result_sort: result,
            interpretation: map,
        });
        Ok(self)
    }

    /// Declares an operation from an existing monotone map out of the
    /// product of the argument sorts.
    pub fn add_operation_map(
        &mut self,
        name: impl Into<String>,
        arg_sorts: &[&str],
        result_sort: &str,
        map: MonotoneMap,
    ) -> Result<&mut Signature> {
        let name = name.into();
        self.check_fresh(&name)?;
        let args: Vec<usize> = arg_sorts.iter().map(|s| self.sort_index(s)).collect::<Result<_>>()?;
        let result = self.sort_index(result_sort)?;
        let product = self.product_of(&args);
        if map.dom() != &product.poset || map.cod() != self.sort(result) {
            return Err(Error::Signature(format!(
                "operation {name:?} must map the product of its argument sorts to its result sort"
            )));
        }
        self.operations.push(OperationDecl {
            name,
            arg_sorts: args,
            result_sort: result,
            interpretation: map,
        });
        Ok(self)
    }

    /// Declares a constant: a point of a sort, as a 0-ary operation.
    pub fn add_constant(&mut self, name: impl Into<String>, sort: &str, value: &str) -> Result<&mut Signature> {
        let name: String = name.into();
        self.add_operation(name, &[], sort, [([].as_slice(), value)])?;
        Ok(self)
    }

    pub fn predicate_index(&self, name: &str) -> Option<usize> {
        self.predicates.iter().position(|p| p.name == name)
    }

    pub fn predicate(&self, index: usize) -> &PredicateDecl {
        &self.predicates[index]
    }

    pub fn operation_index(&self, name: &str) -> Option<usize> {
        self.operations.iter().position(|o| o.name == name)
    }

    pub fn operation(&self, index: usize) -> &OperationDecl {
        &self.operations[index]
    }
}

// ---------------------------------------------------------------------
// Syntax
// ---------------------------------------------------------------------

/// An ordered, typed variable context.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Context {
    vars: Vec<(String, usize)>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn with(vars: Vec<(String, usize)>) -> Context {
        Context { vars }
    }

    pub fn push(&mut self, name: impl Into<String>, sort: usize) {
        self.vars.push((name.into(), sort));
    }

    pub fn extended(&self, name: impl Into<String>, sort: usize) -> Context {
        let mut c = self.clone();
        c.push(name, sort);
        c
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, level: usize) -> (&str, usize) {
        let (n, s) = &self.vars[level];
        (n, *s)
    }

    /// Innermost binding of `name`, for shadowing.
    pub fn resolve(&self, name: &str) -> Option<usize> {
        self.vars.iter().rposition(|(n, _)| n == name)
    }

    pub fn sorts(&self) -> Vec<usize> {
        self.vars.iter().map(|(_, s)| *s).collect()
    }

    /// The context product, built left to right.
    pub fn product(&self, sig: &Signature) -> Product {
        sig.product_of(&self.sorts())
    }
}

/// Terms over a signature, with variables as context levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    App(usize, Vec<Term>),
}

impl Term {
    pub fn sort(&self, sig: &Signature, ctx: &Context) -> usize {
        match self {
            Term::Var(level) => ctx.var(*level).1,
            Term::App(op, _) => sig.operation(*op).result_sort,
        }
    }
}

/// Coherent formulas: no negation, no implication, no universal
/// quantifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Eq(Term, Term),
    Le(Term, Term),
    Pred(usize, Vec<Term>),
    /// The bound variable extends the context at the end for the body.
    Exists {
        var: String,
        sort: usize,
        body: Box<Formula>,
    },
}

/// Two formulas in a shared context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequent {
    pub context: Context,
    pub lhs: Formula,
    pub rhs: Formula,
}

// ---------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------

/// Interprets a term as a monotone map from the context product to its
/// sort: variables become projections, applications become composites.
pub fn interpret_term(sig: &Signature, ctx: &Context, term: &Term, caps: &Caps) -> Result<MonotoneMap> {
    let product = context_product(sig, ctx, caps)?;
    interpret_term_in(sig, ctx, &product, term)
}

fn context_product(sig: &Signature, ctx: &Context, caps: &Caps) -> Result<Product> {
    let mut bound = 1u64;
    for s in ctx.sorts() {
        bound = bound.saturating_mul(sig.sort(s).len() as u64);
    }
    caps.check_steps("context product", bound)?;
    Ok(ctx.product(sig))
}

fn interpret_term_in(sig: &Signature, ctx: &Context, product: &Product, term: &Term) -> Result<MonotoneMap> {
    match term {
        Term::Var(level) => Ok(product.projection(*level, sig.sort(ctx.var(*level).1))),
        Term::App(op, args) => {
            let decl = sig.operation(*op);
            if args.is_empty() {
                // A constant ignores the context entirely.
                let value = decl.interpretation.apply(0);
                return Ok(MonotoneMap::constant(&product.poset, sig.sort(decl.result_sort), value));
            }
            let interps: Vec<MonotoneMap> = args
                .iter()
                .map(|t| interpret_term_in(sig, ctx, product, t))
                .collect::<Result<_>>()?;
            let arg_product = sig.product_of(&decl.arg_sorts);
            let refs: Vec<&MonotoneMap> = interps.iter().collect();
            arg_product.tuple(&refs)?.then(&decl.interpretation)
        }
    }
}

/// Interprets a formula as a subobject of the context product,
/// structurally: atoms pull the order, diagonal, or predicate back along
/// term tuples; conjunction and disjunction are meet and join; the
/// existential is a direct image along the projection that drops the
/// bound coordinate.
pub fn interpret_formula(sig: &Signature, ctx: &Context, formula: &Formula, caps: &Caps) -> Result<Subobject> {
    let product = context_product(sig, ctx, caps)?;
    match formula {
        Formula::Top => Ok(Subobject::full(&product.poset)),
        Formula::Bot => Ok(Subobject::bottom(&product.poset)),
        Formula::And(a, b) => {
            interpret_formula(sig, ctx, a, caps)?.meet(&interpret_formula(sig, ctx, b, caps)?)
        }
        Formula::Or(a, b) => {
            interpret_formula(sig, ctx, a, caps)?.join(&interpret_formula(sig, ctx, b, caps)?)
        }
        Formula::Eq(t1, t2) => {
            let y = sig.sort(check_same_sort(sig, ctx, t1, t2)?);
            let pair = pair_map(sig, ctx, &product, t1, t2)?;
            let square = Product::new(&[y, y]);
            let diagonal = Subobject::new(&square.poset, (0..y.len()).map(|i| square.flat(&[i, i])));
            inverse_image(&pair, &diagonal)
        }
        Formula::Le(t1, t2) => {
            let y = sig.sort(check_same_sort(sig, ctx, t1, t2)?);
            let pair = pair_map(sig, ctx, &product, t1, t2)?;
            inverse_image(&pair, &epi_diagonal(y))
        }
        Formula::Pred(p, args) => {
            let decl = sig.predicate(*p);
            if args.is_empty() {
                // A 0-ary predicate is a truth value: full or empty.
                return Ok(if decl.interpretation.is_full() {
                    Subobject::full(&product.poset)
                } else {
                    Subobject::bottom(&product.poset)
                });
            }
            let interps: Vec<MonotoneMap> = args
                .iter()
                .map(|t| interpret_term_in(sig, ctx, &product, t))
                .collect::<Result<_>>()?;
            let arg_product = sig.product_of(&decl.arg_sorts);
            let refs: Vec<&MonotoneMap> = interps.iter().collect();
            inverse_image(&arg_product.tuple(&refs)?, &decl.interpretation)
        }
        Formula::Exists { var, sort, body } => {
            let inner_ctx = ctx.extended(var.clone(), *sort);
            let inner = interpret_formula(sig, &inner_ctx, body, caps)?;
            let inner_product = context_product(sig, &inner_ctx, caps)?;
            // Projection dropping the bound (last) coordinate.
            let assign: Vec<usize> = (0..inner_product.poset.len())
                .map(|i| {
                    let mut coords = inner_product.coords(i);
                    coords.pop();
                    product.flat(&coords)
                })
                .collect();
            let projection = MonotoneMap::new(inner_product.poset.clone(), product.poset.clone(), assign)?;
            direct_image(&projection, &inner)
        }
    }
}

fn check_same_sort(sig: &Signature, ctx: &Context, t1: &Term, t2: &Term) -> Result<usize> {
    let s1 = t1.sort(sig, ctx);
    let s2 = t2.sort(sig, ctx);
    if s1 != s2 {
        return Err(Error::SortMismatch(format!(
            "comparing a {} with a {}",
            sig.sort_name(s1),
            sig.sort_name(s2)
        )));
    }
    Ok(s1)
}

fn pair_map(sig: &Signature, ctx: &Context, product: &Product, t1: &Term, t2: &Term) -> Result<MonotoneMap> {
    let y = sig.sort(check_same_sort(sig, ctx, t1, t2)?);
    let square = Product::new(&[y, y]);
    let m1 = interpret_term_in(sig, ctx, product, t1)?;
    let m2 = interpret_term_in(sig, ctx, product, t2)?;
    square.tuple(&[&m1, &m2])
}

/// The outcome of an entailment check, with a least counterexample
/// tuple when the inclusion fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    /// For failures: one context tuple inside the left side but outside
    /// the right, as `(variable, element)` pairs.
    pub witness: Option<Vec<(String, String)>>,
}

/// `phi |- psi` holds when the interpretation of `phi` is included in
/// that of `psi`.
pub fn entails(sig: &Signature, sequent: &Sequent, caps: &Caps) -> Result<Entailment> {
    let lhs = interpret_formula(sig, &sequent.context, &sequent.lhs, caps)?;
    let rhs = interpret_formula(sig, &sequent.context, &sequent.rhs, caps)?;
    if lhs.leq(&rhs)? {
        return Ok(Entailment {
            holds: true,
            witness: None,
        });
    }
    let product = sequent.context.product(sig);
    let bad = lhs
        .indices()
        .into_iter()
        .find(|&i| !rhs.contains(i))
        .expect("inclusion failed, so a witness exists");
    let coords = product.coords(bad);
    let witness = coords
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let (name, sort) = sequent.context.var(k);
            (name.to_string(), sig.sort(sort).id(c).to_string())
        })
        .collect();
    Ok(Entailment {
        holds: false,
        witness: Some(witness),
    })
}

// ---------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------

/// Simultaneously substitutes `bindings[k]` (a term over `target`) for
/// context variable `k` of `source`. Bound variables are levels, so no
/// capture can occur; the bound variable of an existential becomes the
/// last level of the extended target context.
pub fn substitute(
    sig: &Signature,
    source: &Context,
    formula: &Formula,
    bindings: &[Term],
    target: &Context,
) -> Result<Formula> {
    if bindings.len() != source.len() {
        return Err(Error::SortMismatch(format!(
            "substitution needs {} terms, got {}",
            source.len(),
            bindings.len()
        )));
    }
    for (k, t) in bindings.iter().enumerate() {
        let expected = source.var(k).1;
        let actual = t.sort(sig, target);
        if expected != actual {
            return Err(Error::SortMismatch(format!(
                "binding for {:?} has sort {} but needs {}",
                source.var(k).0,
                sig.sort_name(actual),
                sig.sort_name(expected)
            )));
        }
    }
    Ok(substitute_formula(formula, bindings, target.len()))
}

fn substitute_formula(formula: &Formula, bindings: &[Term], target_len: usize) -> Formula {
    match formula {
        Formula::Top => Formula::Top,
        Formula::Bot => Formula::Bot,
        Formula::And(a, b) => Formula::And(
            Box::new(substitute_formula(a, bindings, target_len)),
            Box::new(substitute_formula(b, bindings, target_len)),
        ),
        Formula::Or(a, b) => Formula::Or(
            Box::new(substitute_formula(a, bindings, target_len)),
            Box::new(substitute_formula(b, bindings, target_len)),
        ),
        Formula::Eq(t1, t2) => Formula::Eq(substitute_term(t1, bindings), substitute_term(t2, bindings)),
        Formula::Le(t1, t2) => Formula::Le(substitute_term(t1, bindings), substitute_term(t2, bindings)),
        Formula::Pred(p, args) => {
            Formula::Pred(*p, args.iter().map(|t| substitute_term(t, bindings)).collect())
        }
        Formula::Exists { var, sort, body } => {
            // Inside the binder the source context gains a level, which
            // maps to the new last level of the target context.
            let extended: Vec<Term> = bindings
                .iter()
                .cloned()
                .chain(std::iter::once(Term::Var(target_len)))
                .collect();
            Formula::Exists {
                var: var.clone(),
                sort: *sort,
                body: Box::new(substitute_formula(body, &extended, target_len + 1)),
            }
        }
    }
}

fn substitute_term(term: &Term, bindings: &[Term]) -> Term {
    match term {
        Term::Var(level) => bindings[*level].clone(),
        Term::App(op, args) => Term::App(*op, args.iter().map(|t| substitute_term(t, bindings)).collect()),
    }
}

/// The semantic route for substitution: the pullback of the formula's
/// interpretation along the tuple of the bindings' interpretations.
/// Compositionality says this equals interpreting the substituted
/// formula; the law suite sweeps that equation.
pub fn pullback_interpretation(
    sig: &Signature,
    source: &Context,
    formula: &Formula,
    bindings: &[Term],
    target: &Context,
    caps: &Caps,
) -> Result<Subobject> {
    let source_product = context_product(sig, source, caps)?;
    let target_product = context_product(sig, target, caps)?;
    let interps: Vec<MonotoneMap> = bindings
        .iter()
        .map(|t| interpret_term_in(sig, target, &target_product, t))
        .collect::<Result<_>>()?;
    let refs: Vec<&MonotoneMap> = interps.iter().collect();
    let tuple = if bindings.is_empty() {
        MonotoneMap::constant(&target_product.poset, &source_product.poset, 0)
    } else {
        source_product.tuple(&refs)?
    };
    let base = interpret_formula(sig, source, formula, caps)?;
    inverse_image(&tuple, &base)
}

mod parser;
pub use parser::{parse_context, parse_formula, parse_sequent, parse_term};

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn chain_sig() -> Signature {
        let mut sig = Signature::new();
        sig.add_sort("C2", FinPoset::chain(2)).unwrap();
        sig
    }

    #[test]
    fn variables_are_projections() {
        let sig = chain_sig();
        let ctx = Context::with(vec![("x".into(), 0)]);
        let m = interpret_term(&sig, &ctx, &Term::Var(0), &caps()).unwrap();
        assert_eq!(m, MonotoneMap::identity(&FinPoset::chain(2)));

        let ctx = Context::with(vec![("x".into(), 0), ("y".into(), 0)]);
        let m = interpret_term(&sig, &ctx, &Term::Var(0), &caps()).unwrap();
        assert_eq!(m.assignment(), &[0, 0, 1, 1]);
    }

    #[test]
    fn application_composes() {
        // f(g(x)) interprets as x ; g ; f.
        let mut sig = chain_sig();
        sig.add_operation("g", &["C2"], "C2", [(["0"].as_slice(), "1"), (["1"].as_slice(), "1")])
            .unwrap();
        sig.add_operation("f", &["C2"], "C2", [(["0"].as_slice(), "0"), (["1"].as_slice(), "1")])
            .unwrap();
        let ctx = Context::with(vec![("x".into(), 0)]);
        let g = sig.operation_index("g").unwrap();
        let f = sig.operation_index("f").unwrap();
        let term = Term::App(f, vec![Term::App(g, vec![Term::Var(0)])]);
        let m = interpret_term(&sig, &ctx, &term, &caps()).unwrap();
        assert_eq!(m.assignment(), &[1, 1]);
    }

    #[test]
    fn order_atom_matches_epi_diagonal() {
        let sig = chain_sig();
        let ctx = Context::with(vec![("x".into(), 0), ("y".into(), 0)]);
        let le = interpret_formula(&sig, &ctx, &Formula::Le(Term::Var(0), Term::Var(1)), &caps()).unwrap();
        assert_eq!(le.ids(), vec!["(0,0)", "(0,1)", "(1,1)"]);
    }

    #[test]
    fn top_bot_and_exists() {
        let sig = chain_sig();
        let ctx = Context::with(vec![("x".into(), 0)]);
        assert!(interpret_formula(&sig, &ctx, &Formula::Top, &caps()).unwrap().is_full());
        assert!(interpret_formula(&sig, &ctx, &Formula::Bot, &caps()).unwrap().is_empty());

        // exists y. x <= y holds everywhere: take y = 1.
        let phi = Formula::Exists {
            var: "y".into(),
            sort: 0,
            body: Box::new(Formula::Le(Term::Var(0), Term::Var(1))),
        };
        assert!(interpret_formula(&sig, &ctx, &phi, &caps()).unwrap().is_full());
    }

    #[test]
    fn antisymmetry_entails() {
        let sig = chain_sig();
        let seq = parse_sequent("x <= y /\\ y <= x |- x = y", &sig, None).unwrap();
        let r = entails(&sig, &seq, &caps()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn failing_entailment_has_minimal_witness() {
        let sig = chain_sig();
        let seq = parse_sequent("top |- x <= y", &sig, None).unwrap();
        let r = entails(&sig, &seq, &caps()).unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.witness.unwrap(),
            vec![("x".to_string(), "1".to_string()), ("y".to_string(), "0".to_string())]
        );
    }

    #[test]
    fn two_constants_cover_the_two_chain() {
        // Over the tensor 2.1 with its constants, every x is 0 or 1.
        let mut sig = Signature::new();
        let two = crate::poset::tensor(&FinPoset::chain(2), &FinPoset::one(), &caps()).unwrap();
        let zero_id = two.id(0).to_string();
        let one_id = two.id(1).to_string();
        sig.add_sort("two", two).unwrap();
        sig.add_constant("c0", "two", &zero_id).unwrap();
        sig.add_constant("c1", "two", &one_id).unwrap();
        let seq = parse_sequent("|- x = c0 \\/ x = c1", &sig, None).unwrap();
        assert!(entails(&sig, &seq, &caps()).unwrap().holds);
        // And the two constants are ordered, strictly.
        let ctx = Context::with(vec![("x".into(), 0)]);
        let seq = parse_sequent("|- c0 <= c1", &sig, Some(&ctx)).unwrap();
        assert!(entails(&sig, &seq, &caps()).unwrap().holds);
        let seq = parse_sequent("c1 <= c0 |- bot", &sig, Some(&ctx)).unwrap();
        assert!(entails(&sig, &seq, &caps()).unwrap().holds);
    }

    #[test]
    fn substitution_examples() {
        let sig = chain_sig();
        // phi = (x <= y), bind y := x: reflexivity makes it full.
        let source = Context::with(vec![("x".into(), 0), ("y".into(), 0)]);
        let target = Context::with(vec![("x".into(), 0)]);
        let phi = Formula::Le(Term::Var(0), Term::Var(1));
        let out = substitute(&sig, &source, &phi, &[Term::Var(0), Term::Var(0)], &target).unwrap();
        assert!(interpret_formula(&sig, &target, &out, &caps()).unwrap().is_full());

        // Compositionality on this instance.
        let via_pullback =
            pullback_interpretation(&sig, &source, &phi, &[Term::Var(0), Term::Var(0)], &target, &caps()).unwrap();
        assert_eq!(interpret_formula(&sig, &target, &out, &caps()).unwrap(), via_pullback);
    }

    #[test]
    fn substitution_with_constant() {
        let mut sig = chain_sig();
        sig.add_constant("zero", "C2", "0").unwrap();
        let zero = sig.operation_index("zero").unwrap();
        let source = Context::with(vec![("x".into(), 0), ("y".into(), 0)]);
        let target = Context::with(vec![("y".into(), 0)]);
        let phi = Formula::Le(Term::Var(0), Term::Var(1));
        // Bind x := zero, y := y.
        let out = substitute(&sig, &source, &phi, &[Term::App(zero, vec![]), Term::Var(0)], &target).unwrap();
        assert!(interpret_formula(&sig, &target, &out, &caps()).unwrap().is_full());
    }

    #[test]
    fn substitution_under_binder() {
        let sig = chain_sig();
        // phi = exists z. x <= z, bind x := y over a fresh context.
        let source = Context::with(vec![("x".into(), 0)]);
        let target = Context::with(vec![("y".into(), 0)]);
        let phi = Formula::Exists {
            var: "z".into(),
            sort: 0,
            body: Box::new(Formula::Le(Term::Var(0), Term::Var(1))),
        };
        let out = substitute(&sig, &source, &phi, &[Term::Var(0)], &target).unwrap();
        let direct = interpret_formula(&sig, &target, &out, &caps()).unwrap();
        let pulled = pullback_interpretation(&sig, &source, &phi, &[Term::Var(0)], &target, &caps()).unwrap();
        assert_eq!(direct, pulled);
    }

    #[test]
    fn surjectivity_in_the_internal_language() {
        // f is a surjection exactly when |- exists x. f(x) = y.
        let mut sig = Signature::new();
        sig.add_sort("A", FinPoset::antichain(2)).unwrap();
        sig.add_sort("B", FinPoset::chain(2)).unwrap();
        sig.add_operation("f", &["A"], "B", [(["a"].as_slice(), "0"), (["b"].as_slice(), "1")])
            .unwrap();
        let seq = parse_sequent("top |- exists x:A. f(x) = y", &sig, None).unwrap();
        assert!(entails(&sig, &seq, &caps()).unwrap().holds);

        let mut sig = Signature::new();
        sig.add_sort("A", FinPoset::one()).unwrap();
        sig.add_sort("B", FinPoset::chain(2)).unwrap();
        sig.add_operation("f", &["A"], "B", [(["*"].as_slice(), "0")]).unwrap();
        let seq = parse_sequent("top |- exists x:A. f(x) = y", &sig, None).unwrap();
        let r = entails(&sig, &seq, &caps()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap(), vec![("y".to_string(), "1".to_string())]);
    }
}
