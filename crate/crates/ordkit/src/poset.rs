//! Finite posets, monotone maps, and hom-posets.
//!
//! A [`FinPoset`] stores named elements and a reflexive-transitive-
//! antisymmetric relation, kept closed so `leq` is a bit test. Monotone
//! maps are total assignments checked on construction. [`HomPoset`]
//! enumerates every monotone map between two posets exactly once and
//! carries the pointwise order.

use crate::bitrel::{BitRel, BitSetN};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A finite poset with named elements and a closed order relation.
#[derive(Clone, PartialEq, Eq)]
pub struct FinPoset {
    elements: Vec<String>,
    rel: BitRel,
}

impl FinPoset {
    /// Builds a poset from element names and order pairs (covers or
    /// arbitrary pairs; the reflexive-transitive closure is taken).
    ///
    /// Fails with [`Error::Cycle`] if the closure relates two distinct
    /// elements both ways, and with [`Error::DuplicateElement`] if names
    /// repeat.
    pub fn new<S: Into<String>>(
        elements: impl IntoIterator<Item = S>,
        pairs: impl IntoIterator<Item = (S, S)>,
    ) -> Result<FinPoset> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        let index = |name: &str| {
            elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let mut rel = BitRel::new(elements.len(), elements.len());
        for (a, b) in pairs {
            let (a, b) = (a.into(), b.into());
            rel.set(index(&a)?, index(&b)?);
        }
        FinPoset::from_relation(elements, rel)
    }

    /// Same as [`FinPoset::new`] but with index pairs.
    pub fn from_pairs(
        elements: impl IntoIterator<Item = impl Into<String>>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<FinPoset> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut rel = BitRel::new(elements.len(), elements.len());
        for (a, b) in pairs {
            rel.set(a, b);
        }
        FinPoset::from_relation(elements, rel)
    }

    fn from_relation(elements: Vec<String>, mut rel: BitRel) -> Result<FinPoset> {
        rel.close();
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if rel.get(i, j) && rel.get(j, i) {
                    return Err(Error::Cycle(elements[i].clone(), elements[j].clone()));
                }
            }
        }
        Ok(FinPoset { elements, rel })
    }

    /// The empty poset.
    pub fn empty() -> FinPoset {
        FinPoset {
            elements: vec![],
            rel: BitRel::new(0, 0),
        }
    }

    /// The one-element poset; its point is named `*`.
    pub fn one() -> FinPoset {
        FinPoset::new(["*"], []).unwrap()
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> FinPoset {
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FinPoset::from_pairs(elements, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The discrete poset on `a`, `b`, `c`, ...
    pub fn antichain(n: usize) -> FinPoset {
        assert!(n <= 26, "antichain names run a..z");
        let elements: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        FinPoset::from_pairs(elements, []).unwrap()
    }

    /// The discrete poset on the given names.
    pub fn discrete<S: Into<String>>(elements: impl IntoIterator<Item = S>) -> Result<FinPoset> {
        FinPoset::new(elements, [])
    }

    /// `x <= z`, `y <= z`, with `x` and `y` incomparable.
    pub fn vee() -> FinPoset {
        FinPoset::new(["x", "y", "z"], [("x", "z"), ("y", "z")]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn id(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn leq_ids(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(a)?, self.index_of(b)?))
    }

    /// All order pairs `(i, j)` with `i <= j`, reflexive ones included.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        self.rel.iter_pairs().collect()
    }

    pub(crate) fn relation(&self) -> &BitRel {
        &self.rel
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| !self.lt(i, j)))
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.lt(i, j) && !(0..self.len()).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Same elements, reversed order.
    pub fn opposite(&self) -> FinPoset {
        let mut rel = BitRel::new(self.len(), self.len());
        for (i, j) in self.rel.iter_pairs() {
            rel.set(j, i);
        }
        FinPoset {
            elements: self.elements.clone(),
            rel,
        }
    }

    /// Indices in a linear extension (smaller elements first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        // Sort by height (longest chain below); x < y forces a strictly
        // smaller height for x.
        let mut height = vec![0usize; self.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..self.len() {
                for j in 0..self.len() {
                    if self.lt(i, j) && height[j] < height[i] + 1 {
                        height[j] = height[i] + 1;
                        changed = true;
                    }
                }
            }
        }
        order.sort_by_key(|&i| (height[i], i));
        order
    }

    /// The induced sub-poset on `members` (ids preserved).
    pub fn induced(&self, members: &[usize]) -> FinPoset {
        let elements: Vec<String> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let mut rel = BitRel::new(members.len(), members.len());
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                if self.leq(i, j) {
                    rel.set(a, b);
                }
            }
        }
        FinPoset { elements, rel }
    }

    /// Is `set` upward closed?
    pub(crate) fn is_upset(&self, set: &BitSetN) -> bool {
        set.iter().all(|i| (0..self.len()).all(|j| !self.leq(i, j) || set.contains(j)))
    }

    /// All upward-closed subsets, sorted by size then membership.
    pub(crate) fn upsets(&self) -> Vec<BitSetN> {
        let ext = self.linear_extension();
        // Maximal elements first; including x then only requires checking
        // the already-decided elements above it.
        let order: Vec<usize> = ext.into_iter().rev().collect();
        let mut out = Vec::new();
        let mut current = BitSetN::empty(self.len());
        self.upsets_rec(&order, 0, &mut current, &mut out);
        out.sort_by_key(|s| (s.count(), s.iter().collect::<Vec<_>>()));
        out
    }

    fn upsets_rec(&self, order: &[usize], pos: usize, current: &mut BitSetN, out: &mut Vec<BitSetN>) {
        if pos == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[pos];
        self.upsets_rec(order, pos + 1, current, out);
        let allowed = (0..self.len()).all(|j| !self.lt(x, j) || current.contains(j));
        if allowed {
            current.insert(x);
            self.upsets_rec(order, pos + 1, current, out);
            current.remove(x);
        }
    }
}

impl std::fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinPoset[")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, " |")?;
        for (i, j) in self.covers() {
            write!(f, " {}<{}", self.elements[i], self.elements[j])?;
        }
        write!(f, "]")
    }
}

/// A product of finitely many posets, with componentwise order.
///
/// Elements are tuples; the flat index runs with the last coordinate
/// fastest. The empty product is the one-element poset.
pub struct Product {
    pub poset: FinPoset,
    radices: Vec<usize>,
}

impl Product {
    pub fn new(factors: &[&FinPoset]) -> Product {
        let radices: Vec<usize> = factors.iter().map(|p| p.len()).collect();
        // The empty product is the one-element poset.
        let total: usize = if factors.is_empty() { 1 } else { radices.iter().product() };
        let mut elements = Vec::with_capacity(total);
        for flat in 0..total {
            let coords = Self::coords_of(&radices, flat);
            match factors.len() {
                0 => elements.push("*".to_string()),
                1 => elements.push(factors[0].id(coords[0]).to_string()),
                _ => {
                    let parts: Vec<&str> = coords.iter().zip(factors).map(|(&c, p)| p.id(c)).collect();
                    elements.push(format!("({})", parts.join(",")));
                }
            }
        }
        let mut rel = BitRel::new(total, total);
        for i in 0..total {
            let ic = Self::coords_of(&radices, i);
            for j in 0..total {
                let jc = Self::coords_of(&radices, j);
                if ic.iter().zip(&jc).zip(factors).all(|((&a, &b), p)| p.leq(a, b)) {
                    rel.set(i, j);
                }
            }
        }
        Product {
            poset: FinPoset { elements, rel },
            radices,
        }
    }

    fn coords_of(radices: &[usize], mut flat: usize) -> Vec<usize> {
        let mut coords = vec![0; radices.len()];
        for k in (0..radices.len()).rev() {
            coords[k] = flat % radices[k];
            flat /= radices[k];
        }
        coords
    }

    pub fn arity(&self) -> usize {
        self.radices.len()
    }

    pub fn flat(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.radices.len());
        coords.iter().zip(&self.radices).fold(0, |acc, (&c, &r)| acc * r + c)
    }

    pub fn coords(&self, flat: usize) -> Vec<usize> {
        Self::coords_of(&self.radices, flat)
    }

    /// The projection onto factor `k`.
    pub fn projection(&self, k: usize, factor: &FinPoset) -> MonotoneMap {
        let assign: Vec<usize> = (0..self.poset.len()).map(|i| self.coords(i)[k]).collect();
        MonotoneMap::new_unchecked(self.poset.clone(), factor.clone(), assign)
    }

    /// Pairs maps with a common domain into a map to the product.
    pub fn tuple(&self, maps: &[&MonotoneMap]) -> Result<MonotoneMap> {
        if maps.len() != self.radices.len() {
            return Err(Error::TypeMismatch(format!(
                "tupling {} maps into a {}-fold product",
                maps.len(),
                self.radices.len()
            )));
        }
        let dom = match maps.first() {
            Some(m) => m.dom().clone(),
            None => return Err(Error::TypeMismatch("tupling zero maps needs a domain".into())),
        };
        for m in maps {
            if *m.dom() != dom {
                return Err(Error::TypeMismatch("tupled maps must share a domain".into()));
            }
        }
        let assign: Vec<usize> = (0..dom.len())
            .map(|x| {
                let coords: Vec<usize> = maps.iter().map(|m| m.apply(x)).collect();
                self.flat(&coords)
            })
            .collect();
        Ok(MonotoneMap::new_unchecked(dom, self.poset.clone(), assign))
    }
}

/// The tensor `P . X`: the product poset with componentwise order.
///
/// Its universal property `hom(P.X, Y) ~ Pos(P, hom(X, Y))` is exercised
/// by the law suite.
pub fn tensor(p: &FinPoset, x: &FinPoset, caps: &Caps) -> Result<FinPoset> {
    caps.check_poset("tensor carrier", p.len().saturating_mul(x.len()))?;
    Ok(Product::new(&[p, x]).poset)
}

/// An order-preserving map between finite posets.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    dom: FinPoset,
    cod: FinPoset,
    assign: Vec<usize>,
}

impl MonotoneMap {
    /// Builds a map from an index assignment, checking monotonicity.
    pub fn new(dom: FinPoset, cod: FinPoset, assign: Vec<usize>) -> Result<MonotoneMap> {
        if assign.len() != dom.len() {
            return Err(Error::TypeMismatch(format!(
                "assignment covers {} of {} elements",
                assign.len(),
                dom.len()
            )));
        }
        if let Some(&v) = assign.iter().find(|&&v| v >= cod.len()) {
            return Err(Error::TypeMismatch(format!("assignment hits out-of-range index {v}")));
        }
        for i in 0..dom.len() {
            for j in 0..dom.len() {
                if dom.leq(i, j) && !cod.leq(assign[i], assign[j]) {
                    return Err(Error::NotMonotone {
                        x: dom.id(i).into(),
                        y: dom.id(j).into(),
                        fx: cod.id(assign[i]).into(),
                        fy: cod.id(assign[j]).into(),
                    });
                }
            }
        }
        Ok(MonotoneMap { dom, cod, assign })
    }

    /// Builds a map from an `id -> id` table.
    pub fn from_ids<'a>(
        dom: FinPoset,
        cod: FinPoset,
        table: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<MonotoneMap> {
        let mut assign = vec![usize::MAX; dom.len()];
        for (a, b) in table {
            assign[dom.index_of(a)?] = cod.index_of(b)?;
        }
        if let Some(i) = assign.iter().position(|&v| v == usize::MAX) {
            return Err(Error::NotTotal {
                element: dom.id(i).into(),
            });
        }
        MonotoneMap::new(dom, cod, assign)
    }

    pub(crate) fn new_unchecked(dom: FinPoset, cod: FinPoset, assign: Vec<usize>) -> MonotoneMap {
        debug_assert!(MonotoneMap::new(dom.clone(), cod.clone(), assign.clone()).is_ok());
        MonotoneMap { dom, cod, assign }
    }

    pub fn identity(x: &FinPoset) -> MonotoneMap {
        MonotoneMap::new_unchecked(x.clone(), x.clone(), (0..x.len()).collect())
    }

    /// The constant map at element `value` of `cod`.
    pub fn constant(dom: &FinPoset, cod: &FinPoset, value: usize) -> MonotoneMap {
        assert!(value < cod.len());
        MonotoneMap::new_unchecked(dom.clone(), cod.clone(), vec![value; dom.len()])
    }

    pub fn dom(&self) -> &FinPoset {
        &self.dom
    }

    pub fn cod(&self) -> &FinPoset {
        &self.cod
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.assign[i]
    }

    pub fn apply_id(&self, a: &str) -> Result<&str> {
        Ok(self.cod.id(self.assign[self.dom.index_of(a)?]))
    }

    /// Diagrammatic composition: `self` first, then `g`.
    pub fn then(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if self.cod != g.dom {
            return Err(Error::TypeMismatch(
                "codomain of the first map must match the domain of the second".into(),
            ));
        }
        let assign = self.assign.iter().map(|&i| g.assign[i]).collect();
        Ok(MonotoneMap::new_unchecked(self.dom.clone(), g.cod.clone(), assign))
    }

    /// Pointwise comparison with another map of the same type.
    pub fn le(&self, other: &MonotoneMap) -> bool {
        debug_assert!(self.dom == other.dom && self.cod == other.cod);
        self.assign
            .iter()
            .zip(&other.assign)
            .all(|(&a, &b)| self.cod.leq(a, b))
    }

    /// Image as a sorted set of codomain indices.
    pub fn image_indices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.cod.len()];
        for &v in &self.assign {
            seen[v] = true;
        }
        (0..self.cod.len()).filter(|&i| seen[i]).collect()
    }

    pub fn is_surjection(&self) -> bool {
        self.image_indices().len() == self.cod.len()
    }

    pub fn is_injection(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.assign.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_embedding(&self) -> bool {
        (0..self.dom.len()).all(|i| {
            (0..self.dom.len())
                .all(|j| !self.cod.leq(self.assign[i], self.assign[j]) || self.dom.leq(i, j))
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_surjection() && self.is_embedding()
    }
}

impl std::fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, &v) in self.assign.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", self.dom.id(i), self.cod.id(v))?;
        }
        write!(f, "]")
    }
}

/// Diagrammatic composition: `(f; g)(x) = g(f(x))`.
pub fn compose(f: &MonotoneMap, g: &MonotoneMap) -> Result<MonotoneMap> {
    f.then(g)
}

/// How a monotone map sits in the surjection/embedding landscape.
///
/// Isomorphisms are exactly the surjective embeddings, so `iso` is
/// derived from the other two flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClasses {
    pub embedding: bool,
    pub injection: bool,
    pub surjection: bool,
    pub iso: bool,
}

pub fn classify(f: &MonotoneMap) -> MapClasses {
    let embedding = f.is_embedding();
    let surjection = f.is_surjection();
    MapClasses {
        embedding,
        injection: f.is_injection(),
        surjection,
        iso: embedding && surjection,
    }
}

/// The poset of all monotone maps `dom -> cod` under the pointwise order.
///
/// Assignments are stored raw (sorted lexicographically) rather than as
/// `MonotoneMap` values; `get` materializes one on demand.
pub struct HomPoset {
    dom: FinPoset,
    cod: FinPoset,
    assigns: Vec<Vec<usize>>,
}

impl HomPoset {
    pub fn dom(&self) -> &FinPoset {
        &self.dom
    }

    pub fn cod(&self) -> &FinPoset {
        &self.cod
    }

    pub fn len(&self) -> usize {
        self.assigns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assigns.is_empty()
    }

    pub fn assignments(&self) -> &[Vec<usize>] {
        &self.assigns
    }

    pub fn get(&self, i: usize) -> MonotoneMap {
        MonotoneMap::new_unchecked(self.dom.clone(), self.cod.clone(), self.assigns[i].clone())
    }

    pub fn position_of(&self, f: &MonotoneMap) -> Option<usize> {
        debug_assert!(*f.dom() == self.dom && *f.cod() == self.cod);
        self.assigns.binary_search_by(|a| a.as_slice().cmp(f.assignment())).ok()
    }

    /// Pointwise order between maps `i` and `j`.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.assigns[i]
            .iter()
            .zip(&self.assigns[j])
            .all(|(&a, &b)| self.cod.leq(a, b))
    }

    /// The full pointwise order, bit-packed: word `w` of `rows[f]` holds
    /// the maps `g` with `f <= g` at bit positions `64w..`.
    ///
    /// Built per domain element: bucket maps by their value there, join
    /// buckets upward along the codomain order, and intersect across the
    /// domain. Costs `O(|dom| * n^2 / 64)` instead of `O(|dom| * n^2)`.
    pub fn order_rows(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let words = n.div_ceil(64).max(1);
        if self.dom.is_empty() {
            return vec![vec![mask_last(n, words); words]; n];
        }
        // dominators[d][v] = set of maps g with v <= g(d).
        let mut dominators: Vec<Vec<Vec<u64>>> = Vec::with_capacity(self.dom.len());
        for d in 0..self.dom.len() {
            let mut buckets = vec![vec![0u64; words]; self.cod.len()];
            for (g, a) in self.assigns.iter().enumerate() {
                buckets[a[d]][g / 64] |= 1 << (g % 64);
            }
            let mut dom_sets = vec![vec![0u64; words]; self.cod.len()];
            for v in 0..self.cod.len() {
                for w in 0..self.cod.len() {
                    if self.cod.leq(v, w) {
                        for k in 0..words {
                            dom_sets[v][k] |= buckets[w][k];
                        }
                    }
                }
            }
            dominators.push(dom_sets);
        }
        (0..n)
            .map(|f| {
                let mut row = vec![u64::MAX; words];
                for d in 0..self.dom.len() {
                    for (k, w) in dominators[d][self.assigns[f][d]].iter().enumerate() {
                        row[k] &= w;
                    }
                }
                if let Some(last) = row.last_mut() {
                    *last &= mask_last(n, words);
                }
                row
            })
            .collect()
    }

    /// Materializes the hom-poset as a `FinPoset` whose element names
    /// describe the assignments.
    pub fn as_poset(&self, caps: &Caps) -> Result<FinPoset> {
        caps.check_steps("hom-poset order matrix", (self.len() as u64).saturating_mul(self.len() as u64))?;
        let elements: Vec<String> = self
            .assigns
            .iter()
            .map(|a| {
                let parts: Vec<String> = a
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| format!("{}:{}", self.dom.id(i), self.cod.id(v)))
                    .collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        let mut rel = BitRel::new(self.len(), self.len());
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.le(i, j) {
                    rel.set(i, j);
                }
            }
        }
        Ok(FinPoset { elements, rel })
    }
}

/// Enumerates all monotone maps `x -> y`, sorted by assignment.
///
/// Backtracks over a linear extension of `x` so that non-monotone
/// prefixes are pruned early. Fails with `SizeLimit` when `|y|^|x|`
/// exceeds the step budget.
pub fn hom_poset(x: &FinPoset, y: &FinPoset, caps: &Caps) -> Result<HomPoset> {
    let bound = (y.len() as u64)
        .checked_pow(x.len() as u32)
        .unwrap_or(u64::MAX);
    caps.check_steps("hom-poset enumeration", bound)?;

    let ext = x.linear_extension();
    let mut assigns: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![0usize; x.len()];
    if x.is_empty() {
        assigns.push(vec![]);
    } else if !y.is_empty() {
        hom_rec(x, y, &ext, 0, &mut current, &mut assigns);
    }
    assigns.sort();
    Ok(HomPoset {
        dom: x.clone(),
        cod: y.clone(),
        assigns,
    })
}

fn mask_last(n: usize, words: usize) -> u64 {
    if n > 0 && n.is_multiple_of(64) && words == n / 64 {
        u64::MAX
    } else {
        (1u64 << (n % 64)) - 1
    }
}

fn hom_rec(
    x: &FinPoset,
    y: &FinPoset,
    ext: &[usize],
    pos: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == ext.len() {
        out.push(current.clone());
        return;
    }
    let d = ext[pos];
    'candidates: for v in 0..y.len() {
        // Earlier elements in the extension are never strictly above d.
        for &e in &ext[..pos] {
            if x.leq(e, d) && !y.leq(current[e], v) {
                continue 'candidates;
            }
        }
        current[d] = v;
        hom_rec(x, y, ext, pos + 1, current, out);
    }
}
