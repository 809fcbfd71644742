//! Exhaustive and randomized generators for sweeps.
//!
//! Labeled posets are enumerated by deciding each unordered pair
//! (incomparable, `i < j`, or `j < i`) and keeping the transitive
//! candidates; random posets are drawn by closing a random DAG oriented
//! along a random permutation, which never violates antisymmetry.

use rand::prelude::*;

use crate::bitrel::BitRel;
use crate::caps::Caps;
use crate::colimits::Congruence;
use crate::error::Result;
use crate::poset::{hom_poset, FinPoset, MonotoneMap};
use crate::subobject::{Relation, Subobject};


/// All labeled posets on elements `0..n`, in a deterministic order.
///
/// Counts for n = 0..=5: 1, 1, 3, 19, 219, 4231.
pub fn all_posets(n: usize) -> Vec<FinPoset> {
    assert!(n <= 6, "labeled poset enumeration is meant for n <= 6");
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut states = vec![0u8; pairs.len()];
    loop {
        let mut rel = BitRel::identity(n);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            match states[k] {
                1 => rel.set(i, j),
                2 => rel.set(j, i),
                _ => {}
            }
        }
        if rel.is_transitive() {
            out.push(FinPoset::from_pairs(ids.clone(), rel.iter_pairs().collect::<Vec<_>>()).unwrap());
        }
        // Odometer over the 3^(n choose 2) pair states.
        let mut k = 0;
        loop {
            if k == states.len() {
                return out;
            }
            states[k] += 1;
            if states[k] < 3 {
                break;
            }
            states[k] = 0;
            k += 1;
        }
    }
}

/// All labeled posets of every size up to `n` inclusive.
pub fn all_posets_up_to(n: usize) -> Vec<FinPoset> {
    (0..=n).flat_map(all_posets).collect()
}

/// A random poset on `n` elements: a random DAG oriented along a random
/// permutation, closed.
pub fn random_poset(rng: &mut impl Rng, n: usize, edge_prob: f64) -> FinPoset {
    let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_prob) {
                pairs.push((perm[a], perm[b]));
            }
        }
    }
    FinPoset::from_pairs(ids, pairs).expect("edges follow a permutation, so no cycles")
}

/// A uniformly random monotone map, if any exists.
pub fn random_map(rng: &mut impl Rng, x: &FinPoset, y: &FinPoset, caps: &Caps) -> Result<Option<MonotoneMap>> {
    let h = hom_poset(x, y, caps)?;
    if h.is_empty() {
        return Ok(None);
    }
    Ok(Some(h.get(rng.gen_range(0..h.len()))))
}

/// A uniformly random monotone surjection, if any exists.
pub fn random_surjection(
    rng: &mut impl Rng,
    x: &FinPoset,
    y: &FinPoset,
    caps: &Caps,
) -> Result<Option<MonotoneMap>> {
    let h = hom_poset(x, y, caps)?;
    let surjective: Vec<usize> = (0..h.len())
        .filter(|&k| {
            let mut seen = vec![false; y.len()];
            for &v in &h.assignments()[k] {
                seen[v] = true;
            }
            seen.iter().all(|&s| s)
        })
        .collect();
    if surjective.is_empty() {
        return Ok(None);
    }
    Ok(Some(h.get(surjective[rng.gen_range(0..surjective.len())])))
}

/// A uniformly random subobject.
pub fn random_subobject(rng: &mut impl Rng, x: &FinPoset) -> Subobject {
    Subobject::new(x, (0..x.len()).filter(|_| rng.gen_bool(0.5)))
}

/// All congruences on `x`: transitive supersets of the order.
pub fn all_congruences(x: &FinPoset) -> Vec<Congruence> {
    let n = x.len();
    assert!(n <= 5, "congruence enumeration is exponential in the free pairs");
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !x.leq(i, j))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut rel = x.relation().clone();
        for (k, &(i, j)) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel.set(i, j);
            }
        }
        if rel.is_transitive() {
            let relation = Relation::from_bitrel(x, x, rel);
            out.push(Congruence::new(&relation).unwrap());
        }
    }
    out
}

/// A commuting square with a surjective top and an embedding at the
/// bottom, for orthogonality sweeps: `f;v = u;i`.
pub struct OrthogonalityInstance {
    pub f: MonotoneMap,
    pub u: MonotoneMap,
    pub v: MonotoneMap,
    pub i: MonotoneMap,
    /// A second square above the first (`u <= u2`, `v <= v2`), when one
    /// exists, for the filler-monotonicity claim.
    pub above: Option<(MonotoneMap, MonotoneMap)>,
}

/// Draws a random orthogonality instance with parts of at most
/// `max_size` elements.
pub fn random_orthogonality_instance(
    rng: &mut impl Rng,
    max_size: usize,
    caps: &Caps,
) -> Result<OrthogonalityInstance> {
    loop {
        let nb = rng.gen_range(1..=max_size);
        let b = random_poset(rng, nb, 0.4);
        let na = rng.gen_range(b.len()..=max_size);
        let a = random_poset(rng, na, 0.3);
        let Some(f) = random_surjection(rng, &a, &b, caps)? else {
            continue;
        };
        let ny = rng.gen_range(1..=max_size);
        let y = random_poset(rng, ny, 0.4);
        let members: Vec<usize> = (0..y.len()).filter(|_| rng.gen_bool(0.6)).collect();
        if members.is_empty() {
            continue;
        }
        let x = Subobject::new(&y, members);
        let i = x.inclusion();
        let Some(through) = random_map(rng, &b, &x.as_poset(), caps)? else {
            continue;
        };
        let u = f.then(&through)?;
        let v = through.then(&i)?;
        // A comparable square above, when the hom-poset offers one.
        let homs = hom_poset(&b, &x.as_poset(), caps)?;
        let k = homs.position_of(&through).unwrap();
        let above = (0..homs.len())
            .find(|&j| j != k && homs.le(k, j))
            .map(|j| {
                let t2 = homs.get(j);
                Ok::<_, crate::error::Error>((f.then(&t2)?, t2.then(&i)?))
            })
            .transpose()?;
        return Ok(OrthogonalityInstance { f, u, v, i, above });
    }
}

/// Draws a random pullback square (top and left are the projections of
/// the pullback of random `f`, `g`).
pub fn random_pullback_square(rng: &mut impl Rng, max_size: usize, caps: &Caps) -> Result<crate::subobject::Square> {
    loop {
        let ny = rng.gen_range(1..=max_size);
        let y = random_poset(rng, ny, 0.4);
        let nx = rng.gen_range(0..=max_size);
        let x = random_poset(rng, nx, 0.4);
        let nz = rng.gen_range(0..=max_size);
        let z = random_poset(rng, nz, 0.4);
        let (Some(f), Some(g)) = (random_map(rng, &x, &y, caps)?, random_map(rng, &z, &y, caps)?) else {
            continue;
        };
        let (_, to_x, to_z) = crate::limits::pullback(&f, &g)?;
        return Ok(crate::subobject::Square {
            top: to_z,
            left: to_x,
            bottom: f,
            right: g,
        });
    }
}
