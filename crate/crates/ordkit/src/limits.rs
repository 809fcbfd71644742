//! Finite weighted limits over finite graphs.
//!
//! A weighted limit is carved out of the product of copies of the
//! diagram nodes, one copy per weight element: tuples `(x_{i,w})` that
//! are monotone in `w` and compatible with the diagram edges. Conical
//! limits (products, equalizers, pullbacks) are the trivially-weighted
//! case and are also provided directly; lax pullbacks and lax kernels
//! arrive through chain-shaped weights.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poset::{hom_poset, FinPoset, MonotoneMap, Product};
use crate::report::Report;
use crate::subobject::{Relation, Subobject};

/// A diagram over a finite graph: named nodes carrying posets, edges
/// carrying monotone maps.
pub struct FiniteDiagram {
    nodes: Vec<(String, FinPoset)>,
    edges: Vec<(usize, usize, MonotoneMap)>,
}

impl FiniteDiagram {
    pub fn new(nodes: Vec<(String, FinPoset)>) -> FiniteDiagram {
        FiniteDiagram { nodes, edges: vec![] }
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, map: MonotoneMap) -> Result<()> {
        if map.dom() != &self.nodes[src].1 || map.cod() != &self.nodes[dst].1 {
            return Err(Error::TypeMismatch("edge map must run between its endpoints".into()));
        }
        self.edges.push((src, dst, map));
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> &FinPoset {
        &self.nodes[i].1
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.nodes[i].0
    }

    pub fn node_index(&self, name: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn edges(&self) -> &[(usize, usize, MonotoneMap)] {
        &self.edges
    }
}

/// A weight: one poset per node, one monotone map per edge, covariant
/// along the graph.
pub struct Weight {
    nodes: Vec<FinPoset>,
    edges: Vec<MonotoneMap>,
}

impl Weight {
    pub fn new(diagram: &FiniteDiagram, nodes: Vec<FinPoset>, edges: Vec<MonotoneMap>) -> Result<Weight> {
        if nodes.len() != diagram.node_count() || edges.len() != diagram.edges().len() {
            return Err(Error::TypeMismatch("weight shape must match the diagram".into()));
        }
        for (k, (src, dst, _)) in diagram.edges().iter().enumerate() {
            if edges[k].dom() != &nodes[*src] || edges[k].cod() != &nodes[*dst] {
                return Err(Error::TypeMismatch("weight edge map must run between its node weights".into()));
            }
        }
        Ok(Weight { nodes, edges })
    }

    /// The conical weight: every node weighted by the point.
    pub fn conical(diagram: &FiniteDiagram) -> Weight {
        let one = FinPoset::one();
        Weight {
            nodes: vec![one.clone(); diagram.node_count()],
            edges: diagram.edges().iter().map(|_| MonotoneMap::identity(&one)).collect(),
        }
    }

    pub fn node(&self, i: usize) -> &FinPoset {
        &self.nodes[i]
    }

    pub fn edge(&self, k: usize) -> &MonotoneMap {
        &self.edges[k]
    }
}

/// A cone over a weighted diagram: one leg per node and weight element.
pub struct Cone {
    pub apex: FinPoset,
    /// `legs[i][w]` is the leg at node `i`, weight element `w`.
    pub legs: Vec<Vec<MonotoneMap>>,
}

impl Cone {
    /// Checks the cone conditions: legs monotone in the weight element
    /// and compatible with the diagram edges.
    pub fn validate(&self, diagram: &FiniteDiagram, weight: &Weight) -> Result<()> {
        for i in 0..diagram.node_count() {
            if self.legs[i].len() != weight.node(i).len() {
                return Err(Error::TypeMismatch("cone needs one leg per weight element".into()));
            }
            for leg in &self.legs[i] {
                if leg.dom() != &self.apex || leg.cod() != diagram.node(i) {
                    return Err(Error::TypeMismatch("cone leg has the wrong type".into()));
                }
            }
            for w in 0..weight.node(i).len() {
                for w2 in 0..weight.node(i).len() {
                    if weight.node(i).leq(w, w2) && !self.legs[i][w].le(&self.legs[i][w2]) {
                        return Err(Error::Invalid("cone legs are not monotone in the weight".into()));
                    }
                }
            }
        }
        for (k, (src, dst, f)) in diagram.edges().iter().enumerate() {
            for w in 0..weight.node(*src).len() {
                let lhs = self.legs[*src][w].then(f)?;
                let rhs = &self.legs[*dst][weight.edge(k).apply(w)];
                if &lhs != rhs {
                    return Err(Error::Invalid("cone legs are not compatible with an edge".into()));
                }
            }
        }
        Ok(())
    }
}

/// Slots of the ambient product: one `(node, weight element)` pair each.
fn slots(diagram: &FiniteDiagram, weight: &Weight) -> Vec<(usize, usize)> {
    (0..diagram.node_count())
        .flat_map(|i| (0..weight.node(i).len()).map(move |w| (i, w)))
        .collect()
}

/// Computes the weighted limit of a diagram: the sub-poset of tuples
/// `(x_{i,w})` with `x_{i,w} <= x_{i,w'}` whenever `w <= w'` and
/// `F(f)(x_{i,w}) = x_{j,W(f)(w)}` for every edge `f : i -> j`, together
/// with its projection cone. Carrier elements are canonical tuples in
/// lexicographic order.
pub fn weighted_limit(diagram: &FiniteDiagram, weight: &Weight, caps: &Caps) -> Result<(FinPoset, Cone)> {
    let slots = slots(diagram, weight);
    let mut bound = 1u64;
    for &(i, _) in &slots {
        bound = bound.saturating_mul(diagram.node(i).len() as u64);
    }
    caps.check_steps("weighted limit enumeration", bound)?;

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![0usize; slots.len()];
    enumerate_tuples(diagram, weight, &slots, 0, &mut current, &mut tuples);
    // Lexicographic because the backtracking tries values in order, but
    // make the invariant explicit.
    tuples.sort();

    let ids: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(&slots).map(|(&x, &(i, _))| diagram.node(i).id(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let pairs = (0..tuples.len()).flat_map(|a| {
        let tuples = &tuples;
        let slots = &slots;
        (0..tuples.len()).filter_map(move |b| {
            tuples[a]
                .iter()
                .zip(&tuples[b])
                .zip(slots)
                .all(|((&x, &y), &(i, _))| diagram.node(i).leq(x, y))
                .then_some((a, b))
        })
    });
    let carrier = FinPoset::from_pairs(ids, pairs.collect::<Vec<_>>())?;

    let mut legs: Vec<Vec<MonotoneMap>> = (0..diagram.node_count()).map(|_| vec![]).collect();
    for (s, &(i, _)) in slots.iter().enumerate() {
        let assign: Vec<usize> = tuples.iter().map(|t| t[s]).collect();
        legs[i].push(MonotoneMap::new(carrier.clone(), diagram.node(i).clone(), assign)?);
    }
    let cone = Cone {
        apex: carrier.clone(),
        legs,
    };
    Ok((carrier, cone))
}

fn enumerate_tuples(
    diagram: &FiniteDiagram,
    weight: &Weight,
    slots: &[(usize, usize)],
    pos: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == slots.len() {
        out.push(current.clone());
        return;
    }
    let (i, w) = slots[pos];
    'values: for x in 0..diagram.node(i).len() {
        current[pos] = x;
        // Weight monotonicity against already-placed slots of node i.
        for (p, &(i2, w2)) in slots[..pos].iter().enumerate() {
            if i2 != i {
                continue;
            }
            if weight.node(i).leq(w2, w) && !diagram.node(i).leq(current[p], x) {
                continue 'values;
            }
            if weight.node(i).leq(w, w2) && !diagram.node(i).leq(x, current[p]) {
                continue 'values;
            }
        }
        // Edge equations whose slots are both placed.
        for (k, (src, dst, f)) in diagram.edges().iter().enumerate() {
            for ws in 0..weight.node(*src).len() {
                let s_src = slots.iter().position(|&(a, b)| (a, b) == (*src, ws)).unwrap();
                let wd = weight.edge(k).apply(ws);
                let s_dst = slots.iter().position(|&(a, b)| (a, b) == (*dst, wd)).unwrap();
                if s_src <= pos && s_dst <= pos && f.apply(current[s_src]) != current[s_dst] {
                    continue 'values;
                }
            }
        }
        enumerate_tuples(diagram, weight, slots, pos + 1, current, out);
    }
}

/// The conical product of finitely many posets, with projections.
pub fn product(factors: &[&FinPoset], caps: &Caps) -> Result<(FinPoset, Vec<MonotoneMap>)> {
    let mut bound = 1u64;
    for f in factors {
        bound = bound.saturating_mul(f.len() as u64);
    }
    caps.check_steps("product carrier", bound)?;
    let p = Product::new(factors);
    let projections = factors.iter().enumerate().map(|(k, f)| p.projection(k, f)).collect();
    Ok((p.poset, projections))
}

/// The equalizer `{x : f(x) = g(x)}` with its inclusion.
pub fn equalizer(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPoset, MonotoneMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::TypeMismatch("equalizer needs a parallel pair".into()));
    }
    let members: Vec<usize> = (0..f.dom().len()).filter(|&x| f.apply(x) == g.apply(x)).collect();
    let sub = Subobject::new(f.dom(), members);
    Ok((sub.as_poset(), sub.inclusion()))
}

/// The conical pullback `{(x, z) : f(x) = g(z)}` with its legs.
pub fn pullback(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPoset, MonotoneMap, MonotoneMap)> {
    if f.cod() != g.cod() {
        return Err(Error::TypeMismatch("pullback needs a common codomain".into()));
    }
    let prod = Product::new(&[f.dom(), g.dom()]);
    let members: Vec<usize> = (0..prod.poset.len())
        .filter(|&p| {
            let c = prod.coords(p);
            f.apply(c[0]) == g.apply(c[1])
        })
        .collect();
    let sub = Subobject::new(&prod.poset, members);
    let carrier = sub.as_poset();
    let to_x: Vec<usize> = sub.indices().iter().map(|&p| prod.coords(p)[0]).collect();
    let to_z: Vec<usize> = sub.indices().iter().map(|&p| prod.coords(p)[1]).collect();
    Ok((
        carrier.clone(),
        MonotoneMap::new_unchecked(carrier.clone(), f.dom().clone(), to_x),
        MonotoneMap::new_unchecked(carrier, g.dom().clone(), to_z),
    ))
}

/// The lax pullback `{(x, z) : f(x) <= g(z)}` with its legs.
pub fn lax_pullback(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPoset, MonotoneMap, MonotoneMap)> {
    if f.cod() != g.cod() {
        return Err(Error::TypeMismatch("lax pullback needs a common codomain".into()));
    }
    let prod = Product::new(&[f.dom(), g.dom()]);
    let members: Vec<usize> = (0..prod.poset.len())
        .filter(|&p| {
            let c = prod.coords(p);
            f.cod().leq(f.apply(c[0]), g.apply(c[1]))
        })
        .collect();
    let sub = Subobject::new(&prod.poset, members);
    let carrier = sub.as_poset();
    let to_x: Vec<usize> = sub.indices().iter().map(|&p| prod.coords(p)[0]).collect();
    let to_z: Vec<usize> = sub.indices().iter().map(|&p| prod.coords(p)[1]).collect();
    Ok((
        carrier.clone(),
        MonotoneMap::new_unchecked(carrier.clone(), f.dom().clone(), to_x),
        MonotoneMap::new_unchecked(carrier, g.dom().clone(), to_z),
    ))
}

/// The lax kernel `{(x, x') : f(x) <= f(x')}` as a relation on the
/// domain; the lax pullback of `f` along itself.
pub fn lax_kernel(f: &MonotoneMap) -> Relation {
    Relation::new(
        f.dom(),
        f.dom(),
        (0..f.dom().len()).flat_map(|x| {
            (0..f.dom().len()).filter_map(move |x2| f.cod().leq(f.apply(x), f.apply(x2)).then_some((x, x2)))
        }),
    )
}

/// The order of `x` as a subobject of `x . x`: the epi-diagonal. Equals
/// the lax kernel of the identity, embedded in the product.
pub fn epi_diagonal(x: &FinPoset) -> Subobject {
    let prod = Product::new(&[x, x]);
    let kernel = lax_kernel(&MonotoneMap::identity(x));
    Subobject::new(
        &prod.poset,
        kernel.pairs().into_iter().map(|(a, b)| prod.flat(&[a, b])),
    )
}

/// Verifies the representing property of a computed weighted limit
/// against one candidate apex: cones from `t` must correspond
/// order-isomorphically to maps `t -> limit`.
pub fn check_universal_property(
    diagram: &FiniteDiagram,
    weight: &Weight,
    limit: &FinPoset,
    cone: &Cone,
    t: &FinPoset,
    caps: &Caps,
) -> Result<Report> {
    let instance = format!("apex {t:?}");
    let homs: Vec<_> = (0..diagram.node_count())
        .map(|i| hom_poset(t, diagram.node(i), caps))
        .collect::<Result<_>>()?;
    let slots = slots(diagram, weight);

    // All cones from t, as per-slot hom indices.
    let mut cones: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![0usize; slots.len()];
    enumerate_cones(diagram, weight, &slots, &homs, 0, &mut current, &mut cones);

    let into_limit = hom_poset(t, limit, caps)?;
    if into_limit.len() != cones.len() {
        return Ok(Report::fail(
            "weighted-limit-universal",
            instance,
            serde_json::json!({
                "maps_into_limit": into_limit.len(),
                "cones": cones.len(),
            }),
        ));
    }

    // h |-> (h; leg_{i,w}) must be an order-isomorphism onto the cones.
    let mut images: Vec<Vec<usize>> = Vec::new();
    for h in 0..into_limit.len() {
        let hm = into_limit.get(h);
        let key: Vec<usize> = slots
            .iter()
            .map(|&(i, w)| {
                let composite = hm.then(&cone.legs[i][w]).unwrap();
                homs[i].position_of(&composite).unwrap()
            })
            .collect();
        if !cones.contains(&key) {
            return Ok(Report::fail(
                "weighted-limit-universal",
                instance,
                serde_json::json!({ "unmatched_map": format!("{hm:?}") }),
            ));
        }
        images.push(key);
    }
    for (a, ka) in images.iter().enumerate() {
        for (b, kb) in images.iter().enumerate() {
            let maps_le = into_limit.le(a, b);
            let cones_le = ka
                .iter()
                .zip(kb)
                .zip(&slots)
                .all(|((&fa, &fb), &(i, _))| homs[i].le(fa, fb));
            if maps_le != cones_le {
                return Ok(Report::fail(
                    "weighted-limit-universal",
                    instance,
                    serde_json::json!({
                        "pair": [a, b],
                        "maps_le": maps_le,
                        "cones_le": cones_le,
                    }),
                ));
            }
        }
    }
    let distinct: std::collections::BTreeSet<_> = images.iter().collect();
    if distinct.len() != images.len() {
        return Ok(Report::fail(
            "weighted-limit-universal",
            instance,
            serde_json::json!({ "reason": "two maps induce the same cone" }),
        ));
    }
    Ok(Report::pass("weighted-limit-universal", instance))
}

fn enumerate_cones(
    diagram: &FiniteDiagram,
    weight: &Weight,
    slots: &[(usize, usize)],
    homs: &[crate::poset::HomPoset],
    pos: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == slots.len() {
        out.push(current.clone());
        return;
    }
    let (i, w) = slots[pos];
    'candidates: for cand in 0..homs[i].len() {
        current[pos] = cand;
        for (p, &(i2, w2)) in slots[..pos].iter().enumerate() {
            if i2 != i {
                continue;
            }
            if weight.node(i).leq(w2, w) && !homs[i].le(current[p], cand) {
                continue 'candidates;
            }
            if weight.node(i).leq(w, w2) && !homs[i].le(cand, current[p]) {
                continue 'candidates;
            }
        }
        for (k, (src, dst, f)) in diagram.edges().iter().enumerate() {
            for ws in 0..weight.node(*src).len() {
                let s_src = slots.iter().position(|&(a, b)| (a, b) == (*src, ws)).unwrap();
                let wd = weight.edge(k).apply(ws);
                let s_dst = slots.iter().position(|&(a, b)| (a, b) == (*dst, wd)).unwrap();
                if s_src <= pos && s_dst <= pos {
                    let lhs = homs[*src].get(current[s_src]).then(f).unwrap();
                    if homs[*dst].position_of(&lhs) != Some(current[s_dst]) {
                        continue 'candidates;
                    }
                }
            }
        }
        enumerate_cones(diagram, weight, slots, homs, pos + 1, current, out);
    }
}
