//! Finite poset-enriched categories, presheaves, and the nerve.
//!
//! The base categories here are full subcategories of the finite-poset
//! world: objects are posets, hom-posets are enumerated, composition is
//! tabulated and validated (associativity, units, monotonicity in both
//! arguments). The nerve of an object over a chosen family of objects
//! is the presheaf of hom-posets; natural transformations between
//! nerves are enumerated by backtracking with naturality pruning, which
//! is what makes the fully-faithfulness check finite.

use crate::caps::Caps;
use crate::checkers::is_projective_fin;
use crate::colimits::Congruence;
use crate::error::{Error, Result};
use crate::poset::{hom_poset, FinPoset, HomPoset, MonotoneMap};
use crate::report::Report;
use crate::subobject::Relation;

/// A finite category enriched in posets: named poset objects, complete
/// hom-posets, tabulated composition.
pub struct FinEnrichedCategory {
    objects: Vec<(String, FinPoset)>,
    homs: Vec<Vec<HomPoset>>,
    identities: Vec<usize>,
    /// `comp[i][j][k][f][g]` is the index of `f;g` in `homs[i][k]`.
    comp: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
}

impl FinEnrichedCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, i: usize) -> &FinPoset {
        &self.objects[i].1
    }

    pub fn object_name(&self, i: usize) -> &str {
        &self.objects[i].0
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomPoset {
        &self.homs[i][j]
    }

    pub fn identity(&self, i: usize) -> usize {
        self.identities[i]
    }

    pub fn compose_idx(&self, i: usize, j: usize, k: usize, f: usize, g: usize) -> usize {
        self.comp[i][j][k][f][g]
    }
}

/// Builds the full subcategory of finite posets on the given objects:
/// hom-posets enumerated, composition by function composition. The
/// category laws are validated before returning.
pub fn full_subcategory_of_finpos(objects: Vec<(String, FinPoset)>, caps: &Caps) -> Result<FinEnrichedCategory> {
    let n = objects.len();
    let mut homs: Vec<Vec<HomPoset>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(hom_poset(&objects[i].1, &objects[j].1, caps)?);
        }
        homs.push(row);
    }
    let identities: Vec<usize> = (0..n)
        .map(|i| {
            homs[i][i]
                .position_of(&MonotoneMap::identity(&objects[i].1))
                .expect("the identity is monotone")
        })
        .collect();
    let mut comp: Vec<Vec<Vec<Vec<Vec<usize>>>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut plane = Vec::with_capacity(n);
        for j in 0..n {
            let mut line = Vec::with_capacity(n);
            for k in 0..n {
                let mut table = vec![vec![0usize; homs[j][k].len()]; homs[i][j].len()];
                for (f, row) in table.iter_mut().enumerate() {
                    let fm = homs[i][j].get(f);
                    for (g, slot) in row.iter_mut().enumerate() {
                        let gm = homs[j][k].get(g);
                        *slot = homs[i][k]
                            .position_of(&fm.then(&gm)?)
                            .expect("composites of monotone maps are monotone");
                    }
                }
                line.push(table);
            }
            plane.push(line);
        }
        comp.push(plane);
    }
    let cat = FinEnrichedCategory {
        objects,
        homs,
        identities,
        comp,
    };
    validate_category(&cat)?;
    Ok(cat)
}

fn validate_category(cat: &FinEnrichedCategory) -> Result<()> {
    let n = cat.object_count();
    // Unit laws.
    for i in 0..n {
        for j in 0..n {
            for f in 0..cat.hom(i, j).len() {
                if cat.compose_idx(i, i, j, cat.identity(i), f) != f
                    || cat.compose_idx(i, j, j, f, cat.identity(j)) != f
                {
                    return Err(Error::Invalid("identity laws failed".into()));
                }
            }
        }
    }
    // Associativity.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for f in 0..cat.hom(i, j).len() {
                        for g in 0..cat.hom(j, k).len() {
                            let fg = cat.compose_idx(i, j, k, f, g);
                            for h in 0..cat.hom(k, l).len() {
                                let gh = cat.compose_idx(j, k, l, g, h);
                                if cat.compose_idx(i, k, l, fg, h) != cat.compose_idx(i, j, l, f, gh) {
                                    return Err(Error::Invalid("associativity failed".into()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Composition is monotone in both arguments.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let hij = cat.hom(i, j);
                let hjk = cat.hom(j, k);
                let hik = cat.hom(i, k);
                for f in 0..hij.len() {
                    for f2 in 0..hij.len() {
                        if !hij.le(f, f2) {
                            continue;
                        }
                        for g in 0..hjk.len() {
                            for g2 in 0..hjk.len() {
                                if hjk.le(g, g2)
                                    && !hik.le(cat.compose_idx(i, j, k, f, g), cat.compose_idx(i, j, k, f2, g2))
                                {
                                    return Err(Error::Invalid("composition is not order-preserving".into()));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The nerve of `object` over the family `ps`: at each `p` in `ps` the
/// hom-poset into `object`, with action by precomposition.
pub struct Nerve {
    pub ps: Vec<usize>,
    pub object: usize,
}

impl Nerve {
    /// The carrier at family position `k`, as a hom-poset.
    pub fn carrier<'a>(&self, cat: &'a FinEnrichedCategory, k: usize) -> &'a HomPoset {
        cat.hom(self.ps[k], self.object)
    }

    /// The carrier at family position `k`, materialized as a poset.
    pub fn carrier_poset(&self, cat: &FinEnrichedCategory, k: usize, caps: &Caps) -> Result<FinPoset> {
        self.carrier(cat, k).as_poset(caps)
    }

    /// Precomposition action of arrow `h : ps[a] -> ps[b]` on the nerve:
    /// an index map from the carrier at `b` to the carrier at `a`.
    pub fn action(&self, cat: &FinEnrichedCategory, a: usize, b: usize, h: usize) -> Vec<usize> {
        let (pa, pb) = (self.ps[a], self.ps[b]);
        (0..cat.hom(pb, self.object).len())
            .map(|g| cat.compose_idx(pa, pb, self.object, h, g))
            .collect()
    }
}

pub fn nerve(cat: &FinEnrichedCategory, ps: &[usize], object: usize) -> Nerve {
    debug_assert!(object < cat.object_count() && ps.iter().all(|&p| p < cat.object_count()));
    Nerve {
        ps: ps.to_vec(),
        object,
    }
}

/// A natural transformation between two nerves, stored as one index map
/// per family position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransformation {
    /// `components[k][g]` is the image (an index in `hom(ps[k], Y)`) of
    /// the element `g` of `hom(ps[k], X)`.
    pub components: Vec<Vec<usize>>,
}

/// Enumerates all natural transformations `N(X) -> N(Y)` over `ps`, by
/// assigning component values in order of increasing carrier size and
/// pruning against monotonicity and every naturality square whose two
/// sides are already decided.
pub fn enumerate_nat_transformations(
    cat: &FinEnrichedCategory,
    ps: &[usize],
    x: usize,
    y: usize,
    caps: &Caps,
) -> Result<Vec<NatTransformation>> {
    let m = ps.len();
    let from_x: Vec<&HomPoset> = (0..m).map(|k| cat.hom(ps[k], x)).collect();
    let into_y: Vec<&HomPoset> = (0..m).map(|k| cat.hom(ps[k], y)).collect();

    // Components small-first, so that point-like components pin the
    // rest through naturality.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&k| (from_x[k].len(), k));
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for &k in &order {
        for g in 0..from_x[k].len() {
            slots.push((k, g));
        }
    }
    // Naturality pruning cuts the worst case down; enforce a node
    // budget rather than the a-priori product.
    let mut budget = caps.max_steps;
    let mut assigned: Vec<Vec<Option<usize>>> = (0..m).map(|k| vec![None; from_x[k].len()]).collect();
    let mut out = Vec::new();
    nat_rec(cat, ps, x, y, &from_x, &into_y, &slots, 0, &mut assigned, &mut out, &mut budget)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn nat_rec(
    cat: &FinEnrichedCategory,
    ps: &[usize],
    x: usize,
    y: usize,
    from_x: &[&HomPoset],
    into_y: &[&HomPoset],
    slots: &[(usize, usize)],
    pos: usize,
    assigned: &mut Vec<Vec<Option<usize>>>,
    out: &mut Vec<NatTransformation>,
    budget: &mut u64,
) -> Result<()> {
    if *budget == 0 {
        return Err(Error::SizeLimit {
            what: "natural transformation search".into(),
            size: u64::MAX,
            cap: 0,
        });
    }
    *budget -= 1;
    if pos == slots.len() {
        out.push(NatTransformation {
            components: assigned
                .iter()
                .map(|c| c.iter().map(|v| v.unwrap()).collect())
                .collect(),
        });
        return Ok(());
    }
    let (k, g) = slots[pos];
    'candidates: for v in 0..into_y[k].len() {
        // Monotonicity within component k.
        for g2 in 0..from_x[k].len() {
            if let Some(v2) = assigned[k][g2] {
                if from_x[k].le(g, g2) && !into_y[k].le(v, v2) {
                    continue 'candidates;
                }
                if from_x[k].le(g2, g) && !into_y[k].le(v2, v) {
                    continue 'candidates;
                }
            }
        }
        // Naturality squares whose other corner is decided. An arrow
        // h : ps[a] -> ps[k] forces F_a(h;g) = h;F_k(g).
        for a in 0..ps.len() {
            for h in 0..cat.hom(ps[a], ps[k]).len() {
                let hg = cat.compose_idx(ps[a], ps[k], x, h, g);
                if let Some(fa_hg) = assigned[a][hg] {
                    if fa_hg != cat.compose_idx(ps[a], ps[k], y, h, v) {
                        continue 'candidates;
                    }
                }
            }
            // Arrows h : ps[k] -> ps[a] force F_k(h;g2) = h;F_a(g2) at
            // every g2 with h;g2 = g.
            for h in 0..cat.hom(ps[k], ps[a]).len() {
                for g2 in 0..from_x[a].len() {
                    if cat.compose_idx(ps[k], ps[a], x, h, g2) != g {
                        continue;
                    }
                    if let Some(fa_g2) = assigned[a][g2] {
                        if cat.compose_idx(ps[k], ps[a], y, h, fa_g2) != v {
                            continue 'candidates;
                        }
                    }
                }
            }
        }
        assigned[k][g] = Some(v);
        nat_rec(cat, ps, x, y, from_x, into_y, slots, pos + 1, assigned, out, budget)?;
        assigned[k][g] = None;
    }
    Ok(())
}

/// Componentwise pointwise order on natural transformations.
pub fn nat_le(
    cat: &FinEnrichedCategory,
    ps: &[usize],
    y: usize,
    f: &NatTransformation,
    g: &NatTransformation,
) -> bool {
    f.components.iter().zip(&g.components).enumerate().all(|(k, (fc, gc))| {
        fc.iter().zip(gc).all(|(&a, &b)| cat.hom(ps[k], y).le(a, b))
    })
}

/// Checks the nerve hypotheses (objects of `ps` projective, every object
/// covered by one of them) and then verifies, pair by pair, that the
/// nerve gives order-bijections `hom(X, Y) ~ Nat(N(X), N(Y))`.
pub fn check_nerve_fully_faithful(cat: &FinEnrichedCategory, ps: &[usize], caps: &Caps) -> Result<Vec<Report>> {
    for &p in ps {
        if !is_projective_fin(cat.object(p)).projective {
            return Err(Error::HypothesisFailure(format!(
                "object {} in the cover family is not projective",
                cat.object_name(p)
            )));
        }
    }
    for x in 0..cat.object_count() {
        let covered = ps.iter().any(|&p| {
            let h = cat.hom(p, x);
            (0..h.len()).any(|f| h.get(f).is_surjection())
        });
        if !covered {
            return Err(Error::HypothesisFailure(format!(
                "object {} is not covered by the family",
                cat.object_name(x)
            )));
        }
    }

    let mut reports = Vec::new();
    for x in 0..cat.object_count() {
        for y in 0..cat.object_count() {
            let instance = format!("{} -> {}", cat.object_name(x), cat.object_name(y));
            let nats = enumerate_nat_transformations(cat, ps, x, y, caps)?;
            let arrows = cat.hom(x, y);
            if nats.len() != arrows.len() {
                reports.push(Report::fail(
                    "nerve-fully-faithful",
                    instance,
                    serde_json::json!({ "arrows": arrows.len(), "transformations": nats.len() }),
                ));
                continue;
            }
            // The canonical comparison: f |-> (g |-> g;f).
            let mut images = Vec::with_capacity(arrows.len());
            let mut ok = true;
            for f in 0..arrows.len() {
                let image = NatTransformation {
                    components: (0..ps.len())
                        .map(|k| {
                            (0..cat.hom(ps[k], x).len())
                                .map(|g| cat.compose_idx(ps[k], x, y, g, f))
                                .collect()
                        })
                        .collect(),
                };
                if !nats.contains(&image) || images.contains(&image) {
                    ok = false;
                }
                images.push(image);
            }
            if ok {
                for f in 0..arrows.len() {
                    for f2 in 0..arrows.len() {
                        if arrows.le(f, f2) != nat_le(cat, ps, y, &images[f], &images[f2]) {
                            ok = false;
                        }
                    }
                }
            }
            reports.push(if ok {
                Report::pass("nerve-fully-faithful", instance)
            } else {
                Report::fail("nerve-fully-faithful", instance, serde_json::json!({}))
            });
        }
    }
    Ok(reports)
}

/// The sampled essential-image check: presents an object as a quotient
/// of a representable by a congruence covered by another representable,
/// and verifies the presentation componentwise.
///
/// Picks a cover `q : P ->> X` with `P` in the family, covers the lax
/// kernel of `q` by some `Q` in the family, and checks at every `R` in
/// the family that the image relation `{(h;a, h;b)}` is a congruence on
/// `hom(R, P)` equal to the lax kernel of `-;q`, whose quotient has the
/// shape of `hom(R, X)`.
pub fn check_nerve_presentation(
    cat: &FinEnrichedCategory,
    ps: &[usize],
    x: usize,
    caps: &Caps,
) -> Result<Report> {
    let instance = format!("presentation of {}", cat.object_name(x));
    // A cover q : P ->> X from the family.
    let (p, q_idx) = ps
        .iter()
        .find_map(|&p| {
            let h = cat.hom(p, x);
            (0..h.len()).find(|&f| h.get(f).is_surjection()).map(|f| (p, f))
        })
        .ok_or_else(|| Error::HypothesisFailure(format!("{} is not covered", cat.object_name(x))))?;
    let q = cat.hom(p, x).get(q_idx);

    // The lax kernel of q as a poset, and a cover of it from the family.
    let kernel = crate::limits::lax_kernel(&q);
    let pairs: Vec<(usize, usize)> = kernel.pairs();
    let kernel_poset = {
        let prod = crate::poset::Product::new(&[cat.object(p), cat.object(p)]);
        let members: Vec<usize> = pairs.iter().map(|&(a, b)| prod.flat(&[a, b])).collect();
        crate::subobject::Subobject::new(&prod.poset, members).as_poset()
    };
    let cover = ps.iter().find_map(|&qq| {
        let h = hom_poset(cat.object(qq), &kernel_poset, caps).ok()?;
        (0..h.len()).find(|&c| h.get(c).is_surjection()).map(|c| (qq, h.get(c)))
    });
    let (qq, c) = match cover {
        Some(found) => found,
        None => {
            return Ok(Report::fail(
                "nerve-presentation",
                instance,
                serde_json::json!({ "reason": "no family object covers the lax kernel" }),
            ))
        }
    };
    // The two induced arrows a, b : Q -> P.
    let a_assign: Vec<usize> = (0..cat.object(qq).len()).map(|r| pairs[c.apply(r)].0).collect();
    let b_assign: Vec<usize> = (0..cat.object(qq).len()).map(|r| pairs[c.apply(r)].1).collect();
    let a = MonotoneMap::new(cat.object(qq).clone(), cat.object(p).clone(), a_assign)?;
    let b = MonotoneMap::new(cat.object(qq).clone(), cat.object(p).clone(), b_assign)?;
    let a_idx = cat.hom(qq, p).position_of(&a).unwrap();
    let b_idx = cat.hom(qq, p).position_of(&b).unwrap();

    // Componentwise: image relation = lax kernel of -;q, a congruence
    // whose quotient matches hom(R, X).
    for &r in ps {
        let hom_rp = cat.hom(r, p).as_poset(caps)?;
        let image_pairs: Vec<(usize, usize)> = (0..cat.hom(r, qq).len())
            .map(|h| {
                (
                    cat.compose_idx(r, qq, p, h, a_idx),
                    cat.compose_idx(r, qq, p, h, b_idx),
                )
            })
            .collect();
        let image_rel = Relation::new(&hom_rp, &hom_rp, image_pairs);
        let congruence = match Congruence::new(&image_rel) {
            Ok(c) => c,
            Err(e) => {
                return Ok(Report::fail(
                    "nerve-presentation",
                    instance,
                    serde_json::json!({ "component": cat.object_name(r), "not_a_congruence": e.to_string() }),
                ))
            }
        };
        let kernel_pairs: Vec<(usize, usize)> = (0..cat.hom(r, p).len())
            .flat_map(|u| {
                (0..cat.hom(r, p).len())
                    .filter(move |&v| {
                        let uq = cat.compose_idx(r, p, x, u, q_idx);
                        let vq = cat.compose_idx(r, p, x, v, q_idx);
                        cat.hom(r, x).le(uq, vq)
                    })
                    .map(move |v| (u, v))
            })
            .collect();
        let kernel_rel = Relation::new(&hom_rp, &hom_rp, kernel_pairs);
        if kernel_rel != image_rel {
            return Ok(Report::fail(
                "nerve-presentation",
                instance,
                serde_json::json!({ "component": cat.object_name(r), "reason": "image is not the lax kernel" }),
            ));
        }
        let (quot, _) = crate::colimits::quotient(&congruence);
        let hom_rx = cat.hom(r, x);
        if quot.len() != hom_rx.len() {
            return Ok(Report::fail(
                "nerve-presentation",
                instance,
                serde_json::json!({ "component": cat.object_name(r), "quotient": quot.len(), "hom": hom_rx.len() }),
            ));
        }
    }
    Ok(Report::pass("nerve-presentation", instance))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn demo_cat() -> FinEnrichedCategory {
        full_subcategory_of_finpos(
            vec![
                ("1".into(), FinPoset::one()),
                ("C2".into(), FinPoset::chain(2)),
                ("A2".into(), FinPoset::antichain(2)),
            ],
            &caps(),
        )
        .unwrap()
    }

    #[test]
    fn full_subcategory_examples() {
        let cat = demo_cat();
        assert_eq!(cat.hom(2, 2).len(), 4); // hom(A2, A2)
        assert_eq!(cat.hom(0, 0).len(), 1);

        let tiny = full_subcategory_of_finpos(vec![("1".into(), FinPoset::one())], &caps()).unwrap();
        assert_eq!(tiny.object_count(), 1);
        assert_eq!(tiny.hom(0, 0).len(), 1);
    }

    #[test]
    fn nerve_carriers_are_hom_posets() {
        let cat = demo_cat();
        let n = nerve(&cat, &[0, 2], 1); // N(C2) over {1, A2}
        assert_eq!(n.carrier(&cat, 0).len(), 2); // hom(1, C2) = C2
        assert_eq!(n.carrier(&cat, 1).len(), 4); // hom(A2, C2): the square

        // X in the family: the representable.
        let n = nerve(&cat, &[0, 2], 2);
        assert_eq!(n.carrier(&cat, 1).len(), 4);

        // X = 1: constant singleton.
        let n = nerve(&cat, &[0, 2], 0);
        assert_eq!(n.carrier(&cat, 0).len(), 1);
        assert_eq!(n.carrier(&cat, 1).len(), 1);
    }

    #[test]
    fn nerve_fully_faithful_on_demo() {
        let cat = demo_cat();
        let reports = check_nerve_fully_faithful(&cat, &[0, 2], &caps()).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(Report::passed), "{reports:?}");
    }

    #[test]
    fn hypothesis_failures_are_reported() {
        // Family {1} covers neither C2 nor A2; C2 is hit first.
        let cat = demo_cat();
        let err = check_nerve_fully_faithful(&cat, &[0], &caps()).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailure(m) if m.contains("not covered")));

        // A non-projective family member.
        let err = check_nerve_fully_faithful(&cat, &[0, 1, 2], &caps()).unwrap_err();
        assert!(matches!(err, Error::HypothesisFailure(m) if m.contains("C2")));
    }

    #[test]
    fn yoneda_case_is_fully_faithful() {
        // Family = all (discrete) objects.
        let cat = full_subcategory_of_finpos(
            vec![("1".into(), FinPoset::one()), ("A2".into(), FinPoset::antichain(2))],
            &caps(),
        )
        .unwrap();
        let reports = check_nerve_fully_faithful(&cat, &[0, 1], &caps()).unwrap();
        assert!(reports.iter().all(Report::passed));
    }

    #[test]
    fn presentation_of_the_chain() {
        // C2 is covered by A2; the lax kernel of that cover is a
        // discrete 3-element poset, covered by D3.
        let cat = full_subcategory_of_finpos(
            vec![
                ("1".into(), FinPoset::one()),
                ("C2".into(), FinPoset::chain(2)),
                ("A2".into(), FinPoset::antichain(2)),
                ("D3".into(), FinPoset::discrete(["p", "q", "r"]).unwrap()),
            ],
            &caps(),
        )
        .unwrap();
        let r = check_nerve_presentation(&cat, &[0, 2, 3], 1, &caps()).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
