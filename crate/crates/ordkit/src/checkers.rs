//! Decision procedures for the structural predicates: projectivity,
//! discrete generators, order-filtrality, compactness, separation, and
//! representability of the complemented-upset lattice.
//!
//! Checkers return [`Report`]s with witnesses where they exist, so a
//! sweep over many instances aggregates into a machine-diffable law
//! concordance.

use crate::caps::Caps;
use crate::duality::{enumerate_filters, filters};
use crate::error::{Error, Result};
use crate::poset::{hom_poset, tensor, FinPoset, MonotoneMap};
use crate::report::Report;
use crate::subobject::{all_subobjects, cu_lattice, inverse_image, relation_to_morphism, Relation, Subobject};

/// Whether a poset is projective, with a counterexample cover when not.
pub struct Projectivity {
    pub projective: bool,
    /// For non-projective posets: the cover by the discrete poset on
    /// the same elements, along which the identity has no lift.
    pub counterexample: Option<MonotoneMap>,
}

/// The discrete poset on the elements of `p`, with its canonical
/// surjection onto `p`.
pub fn discrete_cover(p: &FinPoset) -> MonotoneMap {
    let discrete = FinPoset::discrete(p.elements().to_vec()).unwrap();
    MonotoneMap::new_unchecked(discrete, p.clone(), (0..p.len()).collect())
}

/// A poset is projective exactly when it is discrete. For discrete
/// posets, [`lift_through`] is the lifting procedure; otherwise the
/// discrete cover witnesses failure: the identity has no monotone
/// section through it.
pub fn is_projective_fin(p: &FinPoset) -> Projectivity {
    if p.is_discrete() {
        return Projectivity {
            projective: true,
            counterexample: None,
        };
    }
    let cover = discrete_cover(p);
    // No monotone section: the only candidate assignment is the
    // identity, which is monotone into a discrete poset only if p is.
    debug_assert!({
        let sections = hom_poset(p, cover.dom(), &Caps::default()).unwrap();
        (0..sections.len()).all(|k| {
            sections.get(k).then(&cover).unwrap() != MonotoneMap::identity(p)
        })
    });
    Projectivity {
        projective: false,
        counterexample: Some(cover),
    }
}

/// Lifts `m : P -> B` through a surjection `e : A ->> B` when `P` is
/// projective (discrete), picking the least preimage at each point.
pub fn lift_through(p: &FinPoset, e: &MonotoneMap, m: &MonotoneMap) -> Result<MonotoneMap> {
    if !p.is_discrete() {
        return Err(Error::HypothesisFailure(format!("{p:?} is not projective")));
    }
    if m.dom() != p || m.cod() != e.cod() {
        return Err(Error::TypeMismatch("lift needs m : P -> cod(e)".into()));
    }
    if !e.is_surjection() {
        return Err(Error::HypothesisFailure("lifts go through surjections".into()));
    }
    let assign: Vec<usize> = (0..p.len())
        .map(|x| (0..e.dom().len()).find(|&a| e.apply(a) == m.apply(x)).unwrap())
        .collect();
    MonotoneMap::new(p.clone(), e.dom().clone(), assign)
}

/// Builds the canonical arrow `|hom(1, X)| . 1 -> X` and confirms it is
/// a surjection (the terminal object is a discrete generator here).
pub fn check_discrete_generator(x: &FinPoset, caps: &Caps) -> Result<(MonotoneMap, Report)> {
    let points = hom_poset(&FinPoset::one(), x, caps)?;
    let names: Vec<String> = (0..points.len()).map(|k| x.id(points.get(k).apply(0)).to_string()).collect();
    let copower = crate::colimits::copower(names, &FinPoset::one(), caps)?;
    let assign: Vec<usize> = (0..points.len()).map(|k| points.get(k).apply(0)).collect();
    let canonical = MonotoneMap::new(copower, x.clone(), assign)?;
    let report = if canonical.is_surjection() {
        Report::pass("discrete-generator-covers", format!("{x:?}"))
    } else {
        Report::fail(
            "discrete-generator-covers",
            format!("{x:?}"),
            serde_json::json!({ "missed": canonical.cod().len() - canonical.image_indices().len() }),
        )
    };
    Ok((canonical, report))
}

/// Decides order-filtrality: whether `U |-> {V in CU(X) : U <= V}` is an
/// order-isomorphism from `Up(X)` onto the filters of `CU(X)` under
/// reverse inclusion.
pub fn is_order_filtral(x: &FinPoset, caps: &Caps) -> Result<Report> {
    let instance = format!("{x:?}");
    let cu = cu_lattice(x, caps)?;
    // In this category every subobject is complemented, so Up(X) and
    // CU(X) share a carrier; the comparison map is still computed from
    // the definition.
    let filt = filters(&cu.up.lattice, caps)?;
    let up_size = cu.up.sets.len();
    if filt.filters.len() != up_size {
        return Ok(Report::fail(
            "order-filtral",
            instance,
            serde_json::json!({ "up_size": up_size, "filter_count": filt.filters.len() }),
        ));
    }
    // U |-> the filter of CU-members containing U.
    let mut images = Vec::with_capacity(up_size);
    for u in 0..up_size {
        let f = crate::bitrel::BitSetN::from_indices(
            cu.up.sets.len(),
            (0..cu.up.sets.len()).filter(|&v| cu.up.sets[u].is_subset_of(&cu.up.sets[v])),
        );
        match filt.filters.iter().position(|g| *g == f) {
            Some(k) => images.push(k),
            None => {
                return Ok(Report::fail(
                    "order-filtral",
                    instance,
                    serde_json::json!({ "upset_without_filter_image": u }),
                ))
            }
        }
    }
    let mut seen = vec![false; filt.filters.len()];
    let injective = images.iter().all(|&k| !std::mem::replace(&mut seen[k], true));
    let order_iso = (0..up_size).all(|a| {
        (0..up_size).all(|b| {
            cu.up.sets[a].is_subset_of(&cu.up.sets[b]) == filt.poset.leq(images[a], images[b])
        })
    });
    if injective && order_iso {
        Ok(Report::pass("order-filtral", instance))
    } else {
        Ok(Report::fail(
            "order-filtral",
            instance,
            serde_json::json!({ "injective": injective, "order_iso": order_iso }),
        ))
    }
}

/// How to check compactness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompactnessMode {
    /// Verify the premises of the finite-lattice argument: `CU(X)` has a
    /// bottom and is closed under binary meets, so every codirected set
    /// contains its meet.
    FiniteLatticeShortcut,
    /// Enumerate every codirected subset of `CU(X)` with at most this
    /// many members and check the definition directly.
    Exhaustive { max_members: usize },
}

/// Compactness: every codirected set of complemented upsets whose meet
/// is empty contains the empty subobject.
pub fn is_compact_fin(x: &FinPoset, mode: CompactnessMode, caps: &Caps) -> Result<Report> {
    let instance = format!("{x:?}");
    let cu = cu_lattice(x, caps)?;
    let l = &cu.up.lattice;
    match mode {
        CompactnessMode::FiniteLatticeShortcut => {
            // Bottom of CU(X) is the empty subobject.
            if !cu.up.sets[l.bottom()].is_empty() {
                return Ok(Report::fail(
                    "compact",
                    instance,
                    serde_json::json!({ "reason": "bottom of CU is not the empty subobject" }),
                ));
            }
            // CU is closed under binary meets: intersections of its
            // members are again members.
            for a in 0..l.len() {
                for b in 0..l.len() {
                    let meet_set = cu.up.sets[a].intersection(&cu.up.sets[b]);
                    if cu.up.sets[l.meet(a, b)] != meet_set {
                        return Ok(Report::fail(
                            "compact",
                            instance,
                            serde_json::json!({ "reason": "CU not closed under intersections", "pair": [a, b] }),
                        ));
                    }
                }
            }
            Ok(Report {
                witness: Some(serde_json::json!({
                    "argument": "finite lattice of complemented upsets: a codirected set contains its meet"
                })),
                ..Report::pass("compact", instance)
            })
        }
        CompactnessMode::Exhaustive { max_members } => {
            let n = l.len();
            let mut budget: u64 = 0;
            let mut binom: u64 = 1;
            for k in 0..=max_members.min(n) {
                budget = budget.saturating_add(binom);
                binom = binom.saturating_mul((n - k) as u64) / (k as u64 + 1);
            }
            caps.check_steps("codirected subset enumeration", budget)?;
            let mut subset: Vec<usize> = Vec::new();
            let bad = find_codirected_counterexample(l, max_members, 0, &mut subset);
            match bad {
                None => Ok(Report::pass("compact", instance)),
                Some(gamma) => Ok(Report::fail(
                    "compact",
                    instance,
                    serde_json::json!({ "codirected": gamma }),
                )),
            }
        }
    }
}

fn find_codirected_counterexample(
    l: &crate::duality::DistLattice,
    max_members: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if !subset.is_empty() {
        let codirected = subset
            .iter()
            .all(|&a| subset.iter().all(|&b| subset.iter().any(|&c| l.leq(c, l.meet(a, b)))));
        if codirected {
            let meet = subset.iter().copied().reduce(|a, b| l.meet(a, b)).unwrap();
            if meet == l.bottom() && !subset.contains(&l.bottom()) {
                return Some(subset.clone());
            }
        }
    }
    if subset.len() == max_members {
        return None;
    }
    for next in start..l.len() {
        subset.push(next);
        if let Some(w) = find_codirected_counterexample(l, max_members, next + 1, subset) {
            return Some(w);
        }
        subset.pop();
    }
    None
}

/// Separation: any two distinct points are split by a complemented
/// upset.
pub fn is_separated_fin(x: &FinPoset, caps: &Caps) -> Result<Report> {
    let instance = format!("{x:?}");
    let cu = cu_lattice(x, caps)?;
    for p in 0..x.len() {
        for q in 0..x.len() {
            if p == q {
                continue;
            }
            let split = cu.up.sets.iter().any(|u| u.contains(p) != u.contains(q));
            if !split {
                return Ok(Report::fail(
                    "separated",
                    instance,
                    serde_json::json!({ "points": [x.id(p), x.id(q)] }),
                ));
            }
        }
    }
    Ok(Report::pass("separated", instance))
}

/// Checks that `CU(X)` is the poset of maps into the two-chain: the
/// assignment `f |-> f^{-1}(1)` must be an order-isomorphism, and its
/// inverse must be the relation construction from the complement
/// witness.
pub fn check_cu_representable(x: &FinPoset, caps: &Caps) -> Result<Report> {
    let instance = format!("{x:?}");
    let cu = cu_lattice(x, caps)?;
    let two = tensor(&FinPoset::chain(2), &FinPoset::one(), caps)?;
    let one_of_two = Subobject::new(&two, [1]);
    let maps = hom_poset(x, &two, caps)?;
    if maps.len() != cu.up.sets.len() {
        return Ok(Report::fail(
            "cu-representable",
            instance,
            serde_json::json!({ "maps": maps.len(), "cu": cu.up.sets.len() }),
        ));
    }
    // Forward: f |-> f^{-1}(1).
    let mut images = Vec::with_capacity(maps.len());
    for k in 0..maps.len() {
        let f = maps.get(k);
        let u = inverse_image(&f, &one_of_two)?;
        match cu.up.index_of(&u) {
            Some(i) => images.push(i),
            None => {
                return Ok(Report::fail(
                    "cu-representable",
                    instance,
                    serde_json::json!({ "preimage_not_in_cu": u.ids() }),
                ))
            }
        }
    }
    let mut seen = vec![false; cu.up.sets.len()];
    let injective = images.iter().all(|&i| !std::mem::replace(&mut seen[i], true));
    let order_iso = (0..maps.len()).all(|a| {
        (0..maps.len()).all(|b| maps.le(a, b) == cu.up.sets[images[a]].is_subset_of(&cu.up.sets[images[b]]))
    });
    if !injective || !order_iso {
        return Ok(Report::fail(
            "cu-representable",
            instance,
            serde_json::json!({ "injective": injective, "order_iso": order_iso }),
        ));
    }
    // Backward: the relation construction inverts it.
    for i in 0..cu.up.sets.len() {
        let u = cu.up.subobject(i);
        let d = &cu.complements[i];
        let rel = Relation::new(
            x,
            &two,
            u.indices()
                .into_iter()
                .map(|a| (a, 1usize))
                .chain(d.indices().into_iter().map(|a| (a, 0usize))),
        );
        let classifier = relation_to_morphism(&rel)?;
        let back = inverse_image(&classifier, &one_of_two)?;
        if cu.up.index_of(&back) != Some(i) {
            return Ok(Report::fail(
                "cu-representable",
                instance,
                serde_json::json!({ "construction_failed_at": u.ids() }),
            ));
        }
    }
    Ok(Report::pass("cu-representable", instance))
}

/// Instantiates the two preservation implications on a map: surjections
/// preserve compactness forward, injections reflect separation.
pub fn check_preservation_lemmas(f: &MonotoneMap, caps: &Caps) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    let instance = format!("{f:?}");
    if f.is_surjection() {
        let dom_compact = is_compact_fin(f.dom(), CompactnessMode::FiniteLatticeShortcut, caps)?.passed();
        let cod_compact = is_compact_fin(f.cod(), CompactnessMode::FiniteLatticeShortcut, caps)?.passed();
        reports.push(if !dom_compact || cod_compact {
            Report::pass("surjection-image-compact", instance.clone())
        } else {
            Report::fail("surjection-image-compact", instance.clone(), serde_json::json!({}))
        });
    } else {
        reports.push(Report::pass("surjection-image-compact", format!("{instance} (vacuous: not a surjection)")));
    }
    if f.is_injection() {
        let cod_separated = is_separated_fin(f.cod(), caps)?.passed();
        let dom_separated = is_separated_fin(f.dom(), caps)?.passed();
        reports.push(if !cod_separated || dom_separated {
            Report::pass("injection-domain-separated", instance)
        } else {
            Report::fail("injection-domain-separated", instance, serde_json::json!({}))
        });
    } else {
        reports.push(Report::pass("injection-domain-separated", format!("{instance} (vacuous: not an injection)")));
    }
    Ok(reports)
}

/// Well-pointedness at one object: a subobject is everything exactly
/// when every point factors through it.
pub fn check_well_pointed(x: &FinPoset) -> Report {
    let instance = format!("{x:?}");
    for phi in all_subobjects(x) {
        let all_points_factor = (0..x.len()).all(|p| phi.contains(p));
        if (phi.is_full()) != all_points_factor {
            return Report::fail(
                "well-pointed",
                instance,
                serde_json::json!({ "subobject": phi.ids() }),
            );
        }
    }
    Report::pass("well-pointed", instance)
}

/// Are `enumerate_filters` and the principal filters in bijection?
/// Grounds the finite case of the filter-completion comparison.
pub fn check_filters_principal(l: &crate::duality::DistLattice, caps: &Caps) -> Result<Report> {
    let all = enumerate_filters(l, caps)?;
    let report = if all.len() == l.len() {
        Report::pass("filters-are-principal", format!("{l:?}"))
    } else {
        Report::fail(
            "filters-are-principal",
            format!("{l:?}"),
            serde_json::json!({ "filters": all.len(), "elements": l.len() }),
        )
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn projectivity_examples() {
        assert!(is_projective_fin(&FinPoset::antichain(2)).projective);
        assert!(is_projective_fin(&FinPoset::one()).projective);
        let p = is_projective_fin(&FinPoset::chain(2));
        assert!(!p.projective);
        let cover = p.counterexample.unwrap();
        assert!(cover.is_surjection());
        assert!(cover.dom().is_discrete());
    }

    #[test]
    fn lifting_through_surjections() {
        // Lift a -> 0, b -> 1 through the discrete cover of C2.
        let a2 = FinPoset::antichain(2);
        let c2 = FinPoset::chain(2);
        let e = discrete_cover(&c2);
        let m = MonotoneMap::from_ids(a2.clone(), c2, [("a", "0"), ("b", "1")]).unwrap();
        let l = lift_through(&a2, &e, &m).unwrap();
        assert_eq!(l.then(&e).unwrap(), m);

        // Non-discrete P is refused.
        let c2 = FinPoset::chain(2);
        let err = lift_through(&c2, &e, &MonotoneMap::identity(&c2)).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailure(_)));
    }

    #[test]
    fn discrete_generator_examples() {
        let (canonical, report) = check_discrete_generator(&FinPoset::vee(), &caps()).unwrap();
        assert!(report.passed());
        assert_eq!(canonical.dom().len(), 3);
        assert!(canonical.dom().is_discrete());

        let (canonical, report) = check_discrete_generator(&FinPoset::empty(), &caps()).unwrap();
        assert!(report.passed());
        assert!(canonical.dom().is_empty());

        let (canonical, report) = check_discrete_generator(&FinPoset::chain(2), &caps()).unwrap();
        assert!(report.passed());
        assert!(canonical.is_surjection() && !canonical.is_embedding());
    }

    #[test]
    fn order_filtral_examples() {
        assert!(is_order_filtral(&FinPoset::one(), &caps()).unwrap().passed());
        let v = FinPoset::vee();
        assert!(is_order_filtral(&v, &caps()).unwrap().passed());
        // |Up(V)| = |Filt(CU(V))| = 5.
        let cu = cu_lattice(&v, &caps()).unwrap();
        assert_eq!(cu.up.sets.len(), 5);
        assert_eq!(enumerate_filters(&cu.up.lattice, &caps()).unwrap().len(), 5);
    }

    #[test]
    fn compact_and_separated_examples() {
        for x in [FinPoset::empty(), FinPoset::one(), FinPoset::chain(3), FinPoset::vee()] {
            assert!(is_compact_fin(&x, CompactnessMode::FiniteLatticeShortcut, &caps())
                .unwrap()
                .passed());
            assert!(is_separated_fin(&x, &caps()).unwrap().passed());
        }
        // The definitional form, exhaustively, on a small poset.
        let r = is_compact_fin(
            &FinPoset::vee(),
            CompactnessMode::Exhaustive { max_members: 12 },
            &caps(),
        )
        .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn cu_representable_examples() {
        for x in [FinPoset::vee(), FinPoset::one(), FinPoset::antichain(2)] {
            assert!(check_cu_representable(&x, &caps()).unwrap().passed());
        }
    }

    #[test]
    fn preservation_examples() {
        let a2 = FinPoset::antichain(2);
        let c2 = FinPoset::chain(2);
        let f = MonotoneMap::from_ids(a2, c2.clone(), [("a", "0"), ("b", "1")]).unwrap();
        assert!(check_preservation_lemmas(&f, &caps()).unwrap().iter().all(Report::passed));

        let incl = MonotoneMap::from_ids(FinPoset::one(), c2, [("*", "0")]).unwrap();
        assert!(check_preservation_lemmas(&incl, &caps()).unwrap().iter().all(Report::passed));
    }

    #[test]
    fn well_pointedness_small() {
        for x in [FinPoset::empty(), FinPoset::one(), FinPoset::vee()] {
            assert!(check_well_pointed(&x).passed());
        }
    }
}
