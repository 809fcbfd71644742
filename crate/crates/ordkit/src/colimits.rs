//! Congruences, quotients, coinserters, disjoint unions, lax pushouts,
//! and copowers.
//!
//! A congruence is a transitive relation containing the order; its
//! quotient identifies mutually related elements and orders classes by
//! the relation, making the quotient map a surjection whose lax kernel
//! is exactly the congruence. Coinserters and lax pushouts reduce to
//! congruence closure followed by a quotient.

use crate::bitrel::BitRel;
use crate::caps::Caps;
use crate::error::{CongruenceAxiom, Error, Result};
use crate::poset::{hom_poset, tensor, FinPoset, MonotoneMap};
use crate::report::Report;
use crate::subobject::Relation;

/// A transitive relation on a poset that contains the order.
#[derive(Clone, PartialEq, Eq)]
pub struct Congruence {
    base: FinPoset,
    rel: BitRel,
}

impl Congruence {
    /// Validates the two congruence axioms, reporting the first failing
    /// one with a witness pair.
    pub fn new(relation: &Relation) -> Result<Congruence> {
        if relation.src() != relation.dst() {
            return Err(Error::TypeMismatch("a congruence relates a poset to itself".into()));
        }
        let base = relation.src().clone();
        for i in 0..base.len() {
            for j in 0..base.len() {
                if base.leq(i, j) && !relation.contains(i, j) {
                    return Err(Error::NotACongruence {
                        axiom: CongruenceAxiom::ContainsOrder,
                        witness: (base.id(i).into(), base.id(j).into()),
                    });
                }
            }
        }
        if !relation.bitrel().is_transitive() {
            let w = first_transitivity_gap(relation).unwrap();
            return Err(Error::NotACongruence {
                axiom: CongruenceAxiom::Transitive,
                witness: (base.id(w.0).into(), base.id(w.1).into()),
            });
        }
        Ok(Congruence {
            rel: relation.bitrel().clone(),
            base,
        })
    }

    pub fn base(&self) -> &FinPoset {
        &self.base
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    pub fn as_relation(&self) -> Relation {
        Relation::from_bitrel(&self.base, &self.base, self.rel.clone())
    }

    /// The order relation itself: the least congruence.
    pub fn least(base: &FinPoset) -> Congruence {
        Congruence {
            base: base.clone(),
            rel: base.relation().clone(),
        }
    }
}

impl std::fmt::Debug for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Congruence{:?}", self.as_relation())
    }
}

fn first_transitivity_gap(r: &Relation) -> Option<(usize, usize)> {
    let n = r.src().len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r.contains(i, j) && r.contains(j, k) && !r.contains(i, k) {
                    return Some((i, k));
                }
            }
        }
    }
    None
}

/// The least congruence containing `r`: the fixpoint of
/// `R |-> [<=] \/ R \/ (R ; R)`, reached in at most `|X|^2` rounds.
pub fn congruence_closure(x: &FinPoset, r: &Relation) -> Result<Congruence> {
    if r.src() != x || r.dst() != x {
        return Err(Error::TypeMismatch("relation must live on the poset being closed".into()));
    }
    let mut current = r.bitrel().clone();
    current.union_with(x.relation());
    loop {
        let mut next = current.compose(&current);
        next.union_with(&current);
        next.union_with(x.relation());
        if next == current {
            break;
        }
        current = next;
    }
    Ok(Congruence {
        base: x.clone(),
        rel: current,
    })
}

/// The quotient of a poset by a congruence: classes of mutually related
/// elements, ordered by the congruence, named by their least
/// representative. The returned map is surjective and its lax kernel is
/// the congruence.
pub fn quotient(c: &Congruence) -> (FinPoset, MonotoneMap) {
    let base = c.base();
    let n = base.len();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let k = reps.len();
        class_of[i] = k;
        // Lexicographically least id in the class names it.
        let mut rep = i;
        for j in i + 1..n {
            if c.contains(i, j) && c.contains(j, i) {
                class_of[j] = k;
                if base.id(j) < base.id(rep) {
                    rep = j;
                }
            }
        }
        reps.push(rep);
    }
    let ids: Vec<String> = reps.iter().map(|&r| base.id(r).to_string()).collect();
    let pairs = (0..reps.len()).flat_map(|a| {
        let reps = &reps;
        (0..reps.len()).filter_map(move |b| c.contains(reps[a], reps[b]).then_some((a, b)))
    });
    let carrier = FinPoset::from_pairs(ids, pairs.collect::<Vec<_>>())
        .expect("congruence quotients are antisymmetric by construction");
    let q = MonotoneMap::new_unchecked(base.clone(), carrier.clone(), class_of);
    (carrier, q)
}

/// Quotient by an arbitrary relation, validating the congruence axioms
/// first.
pub fn quotient_by(x: &FinPoset, r: &Relation) -> Result<(FinPoset, MonotoneMap)> {
    if r.src() != x || r.dst() != x {
        return Err(Error::TypeMismatch("relation must live on the poset being quotiented".into()));
    }
    Ok(quotient(&Congruence::new(r)?))
}

/// The coinserter of a parallel pair `f, g : Y => X`: the universal
/// arrow `u` out of `X` with `f;u <= g;u`. Computed as the quotient of
/// `X` by the congruence closure of `{(f(y), g(y))}`.
pub fn coinserter(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPoset, MonotoneMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::TypeMismatch("coinserter needs a parallel pair".into()));
    }
    let x = f.cod();
    let forced = Relation::new(x, x, (0..f.dom().len()).map(|y| (f.apply(y), g.apply(y))));
    let c = congruence_closure(x, &forced)?;
    Ok(quotient(&c))
}

/// Checks the coinserter universal property against one apex: maps
/// `u : X -> T` with `f;u <= g;u` correspond order-isomorphically to
/// maps out of the coinserter.
pub fn check_coinserter_universal(
    f: &MonotoneMap,
    g: &MonotoneMap,
    carrier: &FinPoset,
    q: &MonotoneMap,
    t: &FinPoset,
    caps: &Caps,
) -> Result<Report> {
    let instance = format!("coinserter of {f:?}, {g:?} against {t:?}");
    let from_x = hom_poset(f.cod(), t, caps)?;
    let compatible: Vec<usize> = (0..from_x.len())
        .filter(|&k| {
            let u = from_x.get(k);
            (0..f.dom().len()).all(|y| t.leq(u.apply(f.apply(y)), u.apply(g.apply(y))))
        })
        .collect();
    let from_q = hom_poset(carrier, t, caps)?;
    if from_q.len() != compatible.len() {
        return Ok(Report::fail(
            "coinserter-universal",
            instance,
            serde_json::json!({ "maps_from_quotient": from_q.len(), "compatible_maps": compatible.len() }),
        ));
    }
    // h |-> q;h is injective (q is epi) and lands in the compatible set;
    // check it is onto and an order-iso.
    let mut seen = Vec::new();
    for h in 0..from_q.len() {
        let composite = q.then(&from_q.get(h))?;
        let k = from_x.position_of(&composite).unwrap();
        if !compatible.contains(&k) || seen.contains(&k) {
            return Ok(Report::fail(
                "coinserter-universal",
                instance,
                serde_json::json!({ "composite_not_matched": format!("{composite:?}") }),
            ));
        }
        seen.push(k);
    }
    for a in 0..from_q.len() {
        for b in 0..from_q.len() {
            if from_q.le(a, b) != from_x.le(seen[a], seen[b]) {
                return Ok(Report::fail(
                    "coinserter-universal",
                    instance,
                    serde_json::json!({ "order_mismatch": [a, b] }),
                ));
            }
        }
    }
    Ok(Report::pass("coinserter-universal", instance))
}

/// The disjoint union of two posets with its two embeddings: no order
/// across the summands. Ids are preserved where possible, prefixed with
/// `l.`/`r.` on collision.
pub fn disjoint_union(a: &FinPoset, b: &FinPoset) -> (FinPoset, MonotoneMap, MonotoneMap) {
    let collision = a.elements().iter().any(|e| b.elements().iter().any(|f| e == f));
    let name = |side: &str, id: &str| {
        if collision {
            format!("{side}.{id}")
        } else {
            id.to_string()
        }
    };
    let ids: Vec<String> = a
        .elements()
        .iter()
        .map(|e| name("l", e))
        .chain(b.elements().iter().map(|e| name("r", e)))
        .collect();
    let na = a.len();
    let pairs = a
        .order_pairs()
        .into_iter()
        .chain(b.order_pairs().into_iter().map(|(i, j)| (na + i, na + j)));
    let carrier = FinPoset::from_pairs(ids, pairs.collect::<Vec<_>>()).expect("summand orders are already posets");
    let inl = MonotoneMap::new_unchecked(a.clone(), carrier.clone(), (0..na).collect());
    let inr = MonotoneMap::new_unchecked(b.clone(), carrier.clone(), (na..na + b.len()).collect());
    (carrier, inl, inr)
}

/// The three internal-language conditions for a disjoint union: the
/// injections cover, and elements of different summands are
/// incomparable both ways.
pub fn check_disjoint_union_axioms(carrier: &FinPoset, inl: &MonotoneMap, inr: &MonotoneMap) -> Vec<Report> {
    let instance = format!("{carrier:?}");
    let la: Vec<usize> = inl.image_indices();
    let rb: Vec<usize> = inr.image_indices();
    let covered = (0..carrier.len()).all(|i| la.contains(&i) || rb.contains(&i));
    let mut reports = vec![if covered {
        Report::pass("disjoint-union-covers", instance.clone())
    } else {
        Report::fail("disjoint-union-covers", instance.clone(), serde_json::json!({}))
    }];
    let mut no_up = true;
    let mut no_down = true;
    for &i in &la {
        for &j in &rb {
            no_up &= !carrier.leq(i, j);
            no_down &= !carrier.leq(j, i);
        }
    }
    reports.push(if no_up {
        Report::pass("disjoint-union-no-left-below-right", instance.clone())
    } else {
        Report::fail("disjoint-union-no-left-below-right", instance.clone(), serde_json::json!({}))
    });
    reports.push(if no_down {
        Report::pass("disjoint-union-no-right-below-left", instance.clone())
    } else {
        Report::fail("disjoint-union-no-right-below-left", instance, serde_json::json!({}))
    });
    reports
}

/// Checks the coproduct universal property of a disjoint union against
/// one apex: `hom(A+B, T) ~ hom(A, T) x hom(B, T)` as posets.
pub fn check_coproduct_universal(
    carrier: &FinPoset,
    inl: &MonotoneMap,
    inr: &MonotoneMap,
    t: &FinPoset,
    caps: &Caps,
) -> Result<Report> {
    let instance = format!("coproduct {carrier:?} against {t:?}");
    let from_sum = hom_poset(carrier, t, caps)?;
    let from_a = hom_poset(inl.dom(), t, caps)?;
    let from_b = hom_poset(inr.dom(), t, caps)?;
    if from_sum.len() != from_a.len() * from_b.len() {
        return Ok(Report::fail(
            "coproduct-universal",
            instance,
            serde_json::json!({
                "from_sum": from_sum.len(),
                "product_of_parts": from_a.len() * from_b.len(),
            }),
        ));
    }
    let mut keys = Vec::new();
    for h in 0..from_sum.len() {
        let hm = from_sum.get(h);
        let ka = from_a.position_of(&inl.then(&hm)?).unwrap();
        let kb = from_b.position_of(&inr.then(&hm)?).unwrap();
        if keys.contains(&(ka, kb)) {
            return Ok(Report::fail(
                "coproduct-universal",
                instance,
                serde_json::json!({ "collision": [ka, kb] }),
            ));
        }
        keys.push((ka, kb));
    }
    for a in 0..keys.len() {
        for b in 0..keys.len() {
            let lhs = from_sum.le(a, b);
            let rhs = from_a.le(keys[a].0, keys[b].0) && from_b.le(keys[a].1, keys[b].1);
            if lhs != rhs {
                return Ok(Report::fail(
                    "coproduct-universal",
                    instance,
                    serde_json::json!({ "order_mismatch": [a, b] }),
                ));
            }
        }
    }
    Ok(Report::pass("coproduct-universal", instance))
}

/// A computed lax pushout: the carrier, the two canonical maps, and the
/// post-hoc reports for the characterizing conditions (the maps can fail
/// to be embeddings in degenerate collapses, which is reported rather
/// than raised).
pub struct LaxPushout {
    pub carrier: FinPoset,
    pub from_left: MonotoneMap,
    pub from_right: MonotoneMap,
    pub conditions: Vec<Report>,
}

/// The lax pushout of `f : R -> A` and `g : R -> B`: the quotient of
/// `A + B` by the congruence closure of `{(inl(f(r)), inr(g(r)))}`.
pub fn lax_pushout(f: &MonotoneMap, g: &MonotoneMap) -> Result<LaxPushout> {
    if f.dom() != g.dom() {
        return Err(Error::TypeMismatch("lax pushout needs a common domain".into()));
    }
    let (sum, inl, inr) = disjoint_union(f.cod(), g.cod());
    let forced = Relation::new(
        &sum,
        &sum,
        (0..f.dom().len()).map(|r| (inl.apply(f.apply(r)), inr.apply(g.apply(r)))),
    );
    let c = congruence_closure(&sum, &forced)?;
    let (carrier, q) = quotient(&c);
    let from_left = inl.then(&q)?;
    let from_right = inr.then(&q)?;

    let mut conditions = Vec::new();
    let instance = format!("lax pushout of {f:?} and {g:?}");
    let covered = {
        let im: Vec<usize> = from_left.image_indices().into_iter().chain(from_right.image_indices()).collect();
        (0..carrier.len()).all(|i| im.contains(&i))
    };
    conditions.push(verdict_report("lax-pushout-covers", &instance, covered, None));
    conditions.push(verdict_report(
        "lax-pushout-left-embedding",
        &instance,
        from_left.is_embedding(),
        None,
    ));
    conditions.push(verdict_report(
        "lax-pushout-right-embedding",
        &instance,
        from_right.is_embedding(),
        None,
    ));
    // (ii): iota_A(a) <= iota_B(b) only when witnessed by some r with
    // f(r) = a and g(r) = b; (iii) is the converse.
    let mut related_needs_witness = (true, None);
    let mut witness_forces_related = (true, None);
    for a in 0..f.cod().len() {
        for b in 0..g.cod().len() {
            let related = carrier.leq(from_left.apply(a), from_right.apply(b));
            let witnessed = (0..f.dom().len()).any(|r| f.apply(r) == a && g.apply(r) == b);
            let pair = serde_json::json!({ "a": f.cod().id(a), "b": g.cod().id(b) });
            if related && !witnessed && related_needs_witness.0 {
                related_needs_witness = (false, Some(pair.clone()));
            }
            if witnessed && !related && witness_forces_related.0 {
                witness_forces_related = (false, Some(pair));
            }
        }
    }
    conditions.push(verdict_report(
        "lax-pushout-cross-pairs-witnessed",
        &instance,
        related_needs_witness.0,
        related_needs_witness.1,
    ));
    conditions.push(verdict_report(
        "lax-pushout-witnesses-force-order",
        &instance,
        witness_forces_related.0,
        witness_forces_related.1,
    ));
    Ok(LaxPushout {
        carrier,
        from_left,
        from_right,
        conditions,
    })
}

fn verdict_report(claim: &str, instance: &str, ok: bool, witness: Option<serde_json::Value>) -> Report {
    if ok {
        Report::pass(claim, instance)
    } else {
        Report::fail(claim, instance, witness.unwrap_or(serde_json::json!({})))
    }
}

/// Checks the representing property of a lax pushout against one apex:
/// pairs `(u : A -> T, v : B -> T)` with `f;u <= g;v` correspond
/// order-isomorphically to maps out of the pushout.
pub fn check_lax_pushout_universal(
    f: &MonotoneMap,
    g: &MonotoneMap,
    po: &LaxPushout,
    t: &FinPoset,
    caps: &Caps,
) -> Result<Report> {
    let instance = format!("lax pushout of {f:?}, {g:?} against {t:?}");
    let from_a = hom_poset(f.cod(), t, caps)?;
    let from_b = hom_poset(g.cod(), t, caps)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for ua in 0..from_a.len() {
        for vb in 0..from_b.len() {
            let u = from_a.get(ua);
            let v = from_b.get(vb);
            if (0..f.dom().len()).all(|r| t.leq(u.apply(f.apply(r)), v.apply(g.apply(r)))) {
                pairs.push((ua, vb));
            }
        }
    }
    let from_po = hom_poset(&po.carrier, t, caps)?;
    if from_po.len() != pairs.len() {
        return Ok(Report::fail(
            "lax-pushout-universal",
            instance,
            serde_json::json!({ "maps_from_pushout": from_po.len(), "compatible_pairs": pairs.len() }),
        ));
    }
    let mut keys = Vec::new();
    for h in 0..from_po.len() {
        let hm = from_po.get(h);
        let ka = from_a.position_of(&po.from_left.then(&hm)?).unwrap();
        let kb = from_b.position_of(&po.from_right.then(&hm)?).unwrap();
        if !pairs.contains(&(ka, kb)) || keys.contains(&(ka, kb)) {
            return Ok(Report::fail(
                "lax-pushout-universal",
                instance,
                serde_json::json!({ "unmatched_or_duplicated": [ka, kb] }),
            ));
        }
        keys.push((ka, kb));
    }
    for a in 0..keys.len() {
        for b in 0..keys.len() {
            let lhs = from_po.le(a, b);
            let rhs = from_a.le(keys[a].0, keys[b].0) && from_b.le(keys[a].1, keys[b].1);
            if lhs != rhs {
                return Ok(Report::fail(
                    "lax-pushout-universal",
                    instance,
                    serde_json::json!({ "order_mismatch": [a, b] }),
                ));
            }
        }
    }
    Ok(Report::pass("lax-pushout-universal", instance))
}

/// The copower `S . X`: the tensor with the discrete poset on `S`.
pub fn copower<S: Into<String>>(
    names: impl IntoIterator<Item = S>,
    x: &FinPoset,
    caps: &Caps,
) -> Result<FinPoset> {
    let discrete = FinPoset::discrete(names)?;
    tensor(&discrete, x, caps)
}
