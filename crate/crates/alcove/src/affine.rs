//! The affine Weyl group relative to a level `p`: reflections in the dot
//! action, alcove location by per-root band indices, enumeration of the
//! restricted dominant part of a linkage orbit, and the closed-form linked
//! family for `B2`.
//!
//! A reflecting hyperplane is `<x, alpha_vee> = n p` for a positive root
//! `alpha` and an integer `n`; everything acts on shifted coordinates.

use std::collections::{HashSet, VecDeque};

use num::rational::Rational64;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, ShiftedWeight, TypeLabel};

/// The alcove containing a p-regular weight, located by integer bands:
/// `band[alpha] = n` means `(n-1) p < <x, alpha_vee> < n p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alcove {
    bands: Vec<i64>,
    p: i64,
}

impl Alcove {
    pub fn new(bands: Vec<i64>, p: i64) -> Alcove {
        Alcove { bands, p }
    }

    pub fn bands(&self) -> &[i64] {
        &self.bands
    }

    pub fn level(&self) -> i64 {
        self.p
    }

    /// The lowest dominant alcove has every band equal to 1.
    pub fn is_lowest(&self) -> bool {
        self.bands.iter().all(|&b| b == 1)
    }

    /// Does a weight with the given pairings lie strictly inside?
    pub fn contains_pairings(&self, pairings: &[i64]) -> bool {
        self.bands.len() == pairings.len()
            && self
                .bands
                .iter()
                .zip(pairings)
                .all(|(&n, &t)| (n - 1) * self.p < t && t < n * self.p)
    }
}

/// Reflect `w` in the hyperplane `<x, alpha_vee> = n p` (dot action; the
/// rho shift is built into the coordinates).
pub fn affine_reflect(
    rs: &RootSystem,
    w: &ShiftedWeight,
    root_idx: usize,
    n: i64,
    p: i64,
) -> Result<ShiftedWeight> {
    if root_idx >= rs.num_positive_roots() {
        return Err(Error::RootIndex { index: root_idx, count: rs.num_positive_roots() });
    }
    let t = rs.pairing_unchecked(w, root_idx) - n * p;
    let mut c = w.coords().to_vec();
    for (k, v) in rs.root_as_weight(root_idx).iter().enumerate() {
        c[k] -= t * v;
    }
    Ok(ShiftedWeight::new(c))
}

/// True iff no positive-root pairing of `w` is divisible by `p`.
pub fn is_p_regular(rs: &RootSystem, w: &ShiftedWeight, p: i64) -> bool {
    (0..rs.num_positive_roots()).all(|i| rs.pairing_unchecked(w, i) % p != 0)
}

/// Locate the alcove of a p-regular weight.
pub fn alcove_of(rs: &RootSystem, w: &ShiftedWeight, p: i64) -> Result<Alcove> {
    if !is_p_regular(rs, w, p) {
        return Err(Error::PSingular { coords: w.coords().to_vec(), p });
    }
    let bands = (0..rs.num_positive_roots())
        .map(|i| rs.pairing_unchecked(w, i).div_euclid(p) + 1)
        .collect();
    Ok(Alcove::new(bands, p))
}

/// True iff `w` is in the open lowest dominant alcove at level `p`: every
/// positive-root pairing strictly between 0 and p.
pub fn in_lowest_alcove(rs: &RootSystem, w: &ShiftedWeight, p: i64) -> bool {
    (0..rs.num_positive_roots()).all(|i| {
        let t = rs.pairing_unchecked(w, i);
        0 < t && t < p
    })
}

/// The dominant regular, restricted, p-regular members of a linkage orbit.
#[derive(Clone, Debug)]
pub struct OrbitSlice {
    pub base: ShiftedWeight,
    pub p: i64,
    /// Sorted, pairwise distinct members with their alcoves.
    pub members: Vec<(ShiftedWeight, Alcove)>,
}

impl OrbitSlice {
    pub fn weights(&self) -> Vec<ShiftedWeight> {
        self.members.iter().map(|(w, _)| w.clone()).collect()
    }
}

/// Enumerate the dominant regular, restricted (all coordinates <= p),
/// p-regular weights linked to `base` under the dot action.
///
/// Breadth-first closure under all affine reflections adjacent to the
/// current pairings, pruned to a window of 2p per coordinate; the result
/// does not depend on which orbit member is given as base.
pub fn dot_orbit_restricted(rs: &RootSystem, base: &ShiftedWeight, p: i64) -> Result<OrbitSlice> {
    if !base.is_dominant_regular() {
        return Err(Error::NotDominantRegular { coords: base.coords().to_vec() });
    }
    if !is_p_regular(rs, base, p) {
        return Err(Error::PSingular { coords: base.coords().to_vec(), p });
    }
    let window = 2 * p;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(base.coords().to_vec());
    queue.push_back(base.clone());
    let mut members = Vec::new();
    while let Some(w) = queue.pop_front() {
        let restricted = w.coords().iter().all(|&c| 1 <= c && c <= p);
        if restricted && is_p_regular(rs, &w, p) {
            members.push(w.clone());
        }
        for idx in 0..rs.num_positive_roots() {
            let t = rs.pairing_unchecked(&w, idx);
            let lo = t.div_euclid(p);
            for n in [lo, lo + 1] {
                let next = affine_reflect(rs, &w, idx, n, p)?;
                if next.coords().iter().any(|&c| c.abs() > window) {
                    continue;
                }
                if seen.insert(next.coords().to_vec()) {
                    queue.push_back(next);
                }
            }
        }
    }
    members.sort();
    members.dedup();
    let members = members
        .into_iter()
        .map(|w| {
            let a = alcove_of(rs, &w, p).expect("members are p-regular");
            (w, a)
        })
        .collect();
    Ok(OrbitSlice { base: base.clone(), p, members })
}

/// The five closed-form linked weights of a `B2` lowest-alcove base, by
/// alcove label. `a`, `b`, `d` are the restricted orbit members besides the
/// base; `c` and `e` lie in the linkage orbit but outside the restricted box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedFamily {
    pub base: ShiftedWeight,
    pub p: i64,
    pub a: ShiftedWeight,
    pub b: ShiftedWeight,
    pub c: ShiftedWeight,
    pub d: ShiftedWeight,
    pub e: ShiftedWeight,
}

/// Alcove band constants of the family, per label, for roots in the order
/// `(alpha1, alpha2, alpha1+alpha2, alpha1+2alpha2)`.
pub const FAMILY_BANDS: [(char, [i64; 4]); 5] = [
    ('A', [1, 1, 2, 1]),
    ('B', [1, 1, 2, 2]),
    ('C', [1, 2, 2, 2]),
    ('D', [1, 1, 3, 2]),
    ('E', [1, 2, 3, 2]),
];

impl LinkedFamily {
    pub fn labeled(&self) -> [(char, &ShiftedWeight); 5] {
        [('A', &self.a), ('B', &self.b), ('C', &self.c), ('D', &self.d), ('E', &self.e)]
    }

    pub fn bands_for(label: char) -> Option<[i64; 4]> {
        FAMILY_BANDS.iter().find(|(l, _)| *l == label).map(|(_, b)| *b)
    }
}

/// Closed-form linked family for a `B2` base `(r, s)` in the open lowest
/// alcove (`r, s >= 1` and `2r + s < p`):
///
/// ```text
/// A = (p-r-s, s)      B = (p-r-s, 2r+s)   C = (r, 2p-2r-s)
/// D = (p-r, 2r+s)     E = (r+s, 2p-2r-s)
/// ```
pub fn b2_linked_family(base: &ShiftedWeight, p: i64) -> Result<LinkedFamily> {
    if base.rank() != 2 {
        return Err(Error::RankUnsupported { what: "b2_linked_family", rank: base.rank(), max: 2 });
    }
    let (r, s) = (base.coords()[0], base.coords()[1]);
    if !(r >= 1 && s >= 1 && 2 * r + s < p) {
        return Err(Error::OutsideLowestAlcove { coords: base.coords().to_vec(), p });
    }
    Ok(LinkedFamily {
        base: base.clone(),
        p,
        a: ShiftedWeight::from_pair(p - r - s, s),
        b: ShiftedWeight::from_pair(p - r - s, 2 * r + s),
        c: ShiftedWeight::from_pair(r, 2 * p - 2 * r - s),
        d: ShiftedWeight::from_pair(p - r, 2 * r + s),
        e: ShiftedWeight::from_pair(r + s, 2 * p - 2 * r - s),
    })
}

/// Translate a rank-2 `B2` weight by `p` times the second fundamental
/// weight: `(r, s) -> (r, s + p)`.
pub fn translate_by_p_omega2(w: &ShiftedWeight, p: i64) -> ShiftedWeight {
    assert_eq!(w.rank(), 2, "translate_by_p_omega2 is a rank-2 B2 operation");
    ShiftedWeight::from_pair(w.coords()[0], w.coords()[1] + p)
}

/// A realizable alcove together with a rational interior sample point (in
/// shifted coordinates).
#[derive(Clone, Debug)]
pub struct AlcoveSample {
    pub alcove: Alcove,
    pub sample: [Rational64; 2],
}

/// Enumerate all realizable alcoves (rank 2 only) whose bands lie within the
/// given inclusive per-root window, each with a rational interior point.
///
/// Feasibility of a band vector is decided exactly: the candidate open
/// polygon is intersected from the band strips, its vertices computed in
/// rational arithmetic, and the vertex centroid checked against every strict
/// inequality.
pub fn enumerate_alcoves(
    rs: &RootSystem,
    p: i64,
    window: &[(i64, i64)],
) -> Result<Vec<AlcoveSample>> {
    if rs.rank() != 2 {
        return Err(Error::RankUnsupported { what: "enumerate_alcoves", rank: rs.rank(), max: 2 });
    }
    let k = rs.num_positive_roots();
    assert_eq!(window.len(), k, "window needs one band range per positive root");
    let rows: Vec<[i64; 2]> = rs
        .coroot_pairing_rows()
        .iter()
        .map(|r| [r[0], r[1]])
        .collect();

    let mut out = Vec::new();
    let mut bands = vec![0i64; k];
    enumerate_rec(&rows, p, window, 0, &mut bands, &mut out);
    Ok(out)
}

fn enumerate_rec(
    rows: &[[i64; 2]],
    p: i64,
    window: &[(i64, i64)],
    i: usize,
    bands: &mut Vec<i64>,
    out: &mut Vec<AlcoveSample>,
) {
    if i == rows.len() {
        if let Some(sample) = interior_point(rows, p, bands) {
            out.push(AlcoveSample { alcove: Alcove::new(bands.clone(), p), sample });
        }
        return;
    }
    for n in window[i].0..=window[i].1 {
        bands[i] = n;
        enumerate_rec(rows, p, window, i + 1, bands, out);
    }
}

/// Interior point of the open polygon `(n-1)p < row . x < n p`, if nonempty.
fn interior_point(rows: &[[i64; 2]], p: i64, bands: &[i64]) -> Option<[Rational64; 2]> {
    // Boundary lines row . x = b for b in {(n-1)p, np}.
    let mut lines: Vec<([i64; 2], i64)> = Vec::new();
    for (row, &n) in rows.iter().zip(bands) {
        lines.push((*row, (n - 1) * p));
        lines.push((*row, n * p));
    }
    let inside_weak = |x: &[Rational64; 2]| {
        rows.iter().zip(bands).all(|(row, &n)| {
            let t = Rational64::from(row[0]) * x[0] + Rational64::from(row[1]) * x[1];
            Rational64::from((n - 1) * p) <= t && t <= Rational64::from(n * p)
        })
    };
    let inside_strict = |x: &[Rational64; 2]| {
        rows.iter().zip(bands).all(|(row, &n)| {
            let t = Rational64::from(row[0]) * x[0] + Rational64::from(row[1]) * x[1];
            Rational64::from((n - 1) * p) < t && t < Rational64::from(n * p)
        })
    };

    let mut vertices: Vec<[Rational64; 2]> = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            let (ra, ca) = lines[a];
            let (rb, cb) = lines[b];
            let det = ra[0] * rb[1] - ra[1] * rb[0];
            if det == 0 {
                continue;
            }
            let x = Rational64::new(ca * rb[1] - cb * ra[1], det);
            let y = Rational64::new(ra[0] * cb - rb[0] * ca, det);
            let v = [x, y];
            if inside_weak(&v) && !vertices.contains(&v) {
                vertices.push(v);
            }
        }
    }
    if vertices.len() < 3 {
        return None;
    }
    let n = Rational64::from(vertices.len() as i64);
    let cx = vertices.iter().map(|v| v[0]).sum::<Rational64>() / n;
    let cy = vertices.iter().map(|v| v[1]).sum::<Rational64>() / n;
    let c = [cx, cy];
    if inside_strict(&c) {
        Some(c)
    } else {
        None
    }
}

/// Build the `B2` root system (repeated callers in figures and verify).
pub fn b2_system() -> RootSystem {
    crate::rootsys::build_root_system(TypeLabel::B, 2).expect("B2 is valid")
}
