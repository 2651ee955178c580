//! The dimension-formula engine: symbolic Weyl-style formulas, the closed
//! formulas for the four simple modules of a generic `B2` minimal-orbit
//! block, the delta function with its alternating-sum pattern, p-power
//! divisibility checks, minimization over the lowest alcove, and the static
//! registry of known orbit cases.

use std::fmt;

use num::bigint::BigInt;
use num::traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::{b2_linked_family, in_lowest_alcove, LinkedFamily};
use crate::error::{Error, Result};
use crate::rootsys::{PartType, RootSystem, ShiftedWeight, TypeLabel};

/// One affine-linear factor `a . coords + k p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFactor {
    pub a: Vec<i64>,
    pub k: i64,
}

impl AffineFactor {
    pub fn eval(&self, w: &ShiftedWeight, p: i64) -> i64 {
        self.a.iter().zip(w.coords()).map(|(a, x)| a * x).sum::<i64>() + self.k * p
    }
}

/// An exact symbolic dimension formula: a product of affine-linear factors
/// times `p^d` over a constant denominator.
///
/// Serializes as `{"factors": [{"a": [...], "k": ...}], "d": ..., "den": ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionFormula {
    pub factors: Vec<AffineFactor>,
    #[serde(rename = "d")]
    pub p_power: u32,
    #[serde(rename = "den")]
    pub denominator: i64,
}

impl DimensionFormula {
    /// Exact evaluation; errors when the denominator does not divide,
    /// carrying the rational value.
    pub fn evaluate(&self, w: &ShiftedWeight, p: i64) -> Result<BigInt> {
        let mut num = BigInt::one();
        for f in &self.factors {
            num *= BigInt::from(f.eval(w, p));
        }
        num *= Pow::pow(&BigInt::from(p), self.p_power);
        let den = BigInt::from(self.denominator);
        let (q, r) = num::Integer::div_rem(&num, &den);
        if !r.is_zero() {
            return Err(Error::InexactDivision { numerator: num, denominator: den });
        }
        Ok(q)
    }

    /// Weyl's dimension formula as a `DimensionFormula` (d = 0, denominator
    /// the product of coroot heights).
    pub fn weyl(rs: &RootSystem) -> DimensionFormula {
        let factors = rs
            .coroot_pairing_rows()
            .iter()
            .map(|row| AffineFactor { a: row.clone(), k: 0 })
            .collect();
        let denominator = rs.rho_pairings().iter().product();
        DimensionFormula { factors, p_power: 0, denominator }
    }

    /// The four closed dimension formulas of the generic `B2` minimal-orbit
    /// block, in terms of the lowest-alcove base `(r, s)`:
    ///
    /// ```text
    /// A: s (p - 2r - s) p^2 / 2      B: 2r * p * p^2 / 2
    /// C: (2p - s)(p - 2r - s) p^2 / 2   D: s (p + 2r + s) p^2 / 2
    /// ```
    pub fn b2_block(label: char) -> Option<DimensionFormula> {
        let factors = match label {
            'A' => vec![
                AffineFactor { a: vec![0, 1], k: 0 },
                AffineFactor { a: vec![-2, -1], k: 1 },
            ],
            'B' => vec![
                AffineFactor { a: vec![2, 0], k: 0 },
                AffineFactor { a: vec![0, 0], k: 1 },
            ],
            'C' => vec![
                AffineFactor { a: vec![0, -1], k: 2 },
                AffineFactor { a: vec![-2, -1], k: 1 },
            ],
            'D' => vec![
                AffineFactor { a: vec![0, 1], k: 0 },
                AffineFactor { a: vec![2, 1], k: 1 },
            ],
            _ => return None,
        };
        Some(DimensionFormula { factors, p_power: 2, denominator: 2 })
    }

    /// `delta(r, s) = s (2r + s - p) p^2 / 2` as a formula object.
    pub fn b2_delta() -> DimensionFormula {
        DimensionFormula {
            factors: vec![
                AffineFactor { a: vec![0, 1], k: 0 },
                AffineFactor { a: vec![2, 1], k: -1 },
            ],
            p_power: 2,
            denominator: 2,
        }
    }

    /// The translated delta `(s - p)(2r + s - 2p) p^2 / 2`.
    pub fn b2_delta_cell() -> DimensionFormula {
        DimensionFormula {
            factors: vec![
                AffineFactor { a: vec![0, 1], k: -1 },
                AffineFactor { a: vec![2, 1], k: -2 },
            ],
            p_power: 2,
            denominator: 2,
        }
    }
}

/// Trial-division primality for the small levels used here.
pub fn is_odd_prime(p: i64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn require_odd_prime(p: i64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::BadLevel { p, reason: "must be an odd prime" })
    }
}

/// `delta(r, s) = s (2r + s - p) p^2 / 2`, total on all integer weights.
/// A formal dimension: may be zero (exactly on `s = 0` and `2r + s = p`)
/// or negative (below those walls).
pub fn delta_b2(r: i64, s: i64, p: i64) -> Result<BigInt> {
    require_odd_prime(p)?;
    let prod = BigInt::from(s) * BigInt::from(2 * r + s - p);
    // s (2r+s-p) is even for every odd p: if s is odd then 2r+s-p is even.
    let (q, rem) = num::Integer::div_rem(&(prod * BigInt::from(p) * BigInt::from(p)), &BigInt::from(2));
    assert!(rem.is_zero(), "delta numerator parity");
    Ok(q)
}

/// The translated delta `(s - p)(2r + s - 2p) p^2 / 2`, vanishing exactly on
/// `s = p` and `2r + s = 2p`; satisfies
/// `delta_b2_cell(r, s + p) = delta_b2(r, s)` for all integers.
pub fn delta_b2_cell(r: i64, s: i64, p: i64) -> Result<BigInt> {
    require_odd_prime(p)?;
    let prod = BigInt::from(s - p) * BigInt::from(2 * r + s - 2 * p);
    let (q, rem) = num::Integer::div_rem(&(prod * BigInt::from(p) * BigInt::from(p)), &BigInt::from(2));
    assert!(rem.is_zero(), "delta numerator parity");
    Ok(q)
}

/// A generic block of the `B2` minimal nilpotent orbit: four simple-module
/// dimensions labeled by the alcoves `A, B, C, D`, the closed-form linked
/// weights, and the delta values at those weights.
#[derive(Clone, Debug)]
pub struct B2Block {
    pub base: ShiftedWeight,
    pub p: i64,
    /// Dimensions in label order `A, B, C, D`.
    pub dims: [BigInt; 4],
    pub linked: LinkedFamily,
    /// `delta` at the linked weights `A, B, C, D`.
    pub deltas: [BigInt; 4],
}

/// Compute the block over a p-regular base in the open lowest alcove.
pub fn jantzen_b2_block(rs: &RootSystem, base: &ShiftedWeight, p: i64) -> Result<B2Block> {
    require_odd_prime(p)?;
    if rs.label() != TypeLabel::B || rs.rank() != 2 {
        return Err(Error::InvalidType { label: rs.name(), rank: rs.rank() as i64 });
    }
    if !in_lowest_alcove(rs, base, p) {
        return Err(Error::OutsideLowestAlcove { coords: base.coords().to_vec(), p });
    }
    let linked = b2_linked_family(base, p)?;
    let mut dims: Vec<BigInt> = Vec::with_capacity(4);
    for label in ['A', 'B', 'C', 'D'] {
        let f = DimensionFormula::b2_block(label).unwrap();
        dims.push(f.evaluate(base, p)?);
    }
    let deltas: Vec<BigInt> = [&linked.a, &linked.b, &linked.c, &linked.d]
        .iter()
        .map(|w| delta_b2(w.coords()[0], w.coords()[1], p))
        .collect::<Result<_>>()?;
    let dims: [BigInt; 4] = dims.try_into().unwrap();
    let deltas: [BigInt; 4] = deltas.try_into().unwrap();
    for d in &dims {
        debug_assert!(d.is_positive());
    }
    debug_assert!(premet_check(&dims, p, 2));
    Ok(B2Block { base: base.clone(), p, dims, linked, deltas })
}

/// The alternating-sum pattern relating block dimensions to delta values:
/// rows of the matrix act on the column `(delta_A, delta_B, delta_C, delta_D)`.
pub const PATTERN_MATRIX: [[i64; 4]; 4] = [
    [1, 0, 0, 0],
    [-1, 1, 0, 0],
    [1, -1, 1, 0],
    [1, -1, 0, 1],
];

#[derive(Clone, Debug)]
pub struct PatternSolution {
    pub matrix: [[i64; 4]; 4],
    pub verified: bool,
}

fn apply_matrix(m: &[[i64; 4]; 4], v: &[BigInt; 4]) -> [BigInt; 4] {
    let mut out = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for (i, row) in m.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (j, c) in row.iter().enumerate() {
            acc += BigInt::from(*c) * &v[j];
        }
        out[i] = acc;
    }
    out
}

/// Verify `PATTERN_MATRIX . deltas = dims` exactly for a block. On mismatch
/// the error exposes both sides.
pub fn solve_pattern(block: &B2Block) -> Result<PatternSolution> {
    let rhs = apply_matrix(&PATTERN_MATRIX, &block.deltas);
    if rhs != block.dims {
        return Err(Error::PatternMismatch { lhs: block.dims.to_vec(), rhs: rhs.to_vec() });
    }
    Ok(PatternSolution { matrix: PATTERN_MATRIX, verified: true })
}

/// Discovery mode: all lower-unitriangular matrices with entries in
/// `{-1, 0, 1}` mapping the block's deltas to its dims. The fixed pattern is
/// expected to be the unique solution on a generic block.
pub fn discover_pattern(block: &B2Block) -> Vec<[[i64; 4]; 4]> {
    let mut out = Vec::new();
    let positions = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)];
    let mut entries = [0i64; 6];
    loop {
        let mut m = [[0i64; 4]; 4];
        for i in 0..4 {
            m[i][i] = 1;
        }
        for (slot, &(i, j)) in positions.iter().enumerate() {
            m[i][j] = entries[slot];
        }
        if apply_matrix(&m, &block.deltas) == block.dims {
            out.push(m);
        }
        // next assignment in {-1, 0, 1}^6
        let mut pos = 0;
        loop {
            if pos == entries.len() {
                return out;
            }
            entries[pos] += 1;
            if entries[pos] > 1 {
                entries[pos] = -1;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

/// True iff `p^d` divides every entry.
pub fn premet_check(dims: &[BigInt], p: i64, d: u32) -> bool {
    let q = Pow::pow(&BigInt::from(p), d);
    dims.iter().all(|x| (x % &q).is_zero())
}

#[derive(Clone, Debug)]
pub struct Minimum {
    pub value: BigInt,
    pub weights: Vec<ShiftedWeight>,
}

/// Exhaustive minimization of a formula's positive values over the open
/// lowest alcove at level `p`. Errors when the region is empty (p below the
/// Coxeter number).
pub fn minimize_formula(f: &DimensionFormula, rs: &RootSystem, p: i64) -> Result<Minimum> {
    let rank = rs.rank();
    let mut best: Option<(BigInt, Vec<ShiftedWeight>)> = None;
    let mut coords = vec![1i64; rank];
    let mut empty = true;
    'scan: loop {
        let w = ShiftedWeight::new(coords.clone());
        if in_lowest_alcove(rs, &w, p) {
            empty = false;
            let v = f.evaluate(&w, p)?;
            if v.is_positive() {
                match &mut best {
                    None => best = Some((v, vec![w])),
                    Some((m, ws)) => {
                        if &v < m {
                            *m = v;
                            *ws = vec![w];
                        } else if &v == m {
                            ws.push(w);
                        }
                    }
                }
            }
        }
        // odometer over [1, p-1]^rank
        let mut pos = 0;
        loop {
            if pos == rank {
                break 'scan;
            }
            coords[pos] += 1;
            if coords[pos] > p - 1 {
                coords[pos] = 1;
                pos += 1;
            } else {
                break;
            }
        }
    }
    if empty {
        return Err(Error::EmptyRegion { p, coxeter_number: rs.coxeter_number() });
    }
    let (value, mut weights) =
        best.ok_or(Error::EmptyRegion { p, coxeter_number: rs.coxeter_number() })?;
    weights.sort();
    Ok(Minimum { value, weights })
}

// ---------------------------------------------------------------------------
// Case registry
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankSpec {
    Fixed(usize),
    AtLeast(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseScope {
    Simple(TypeLabel, RankSpec),
    AnySimple,
}

/// `d` as a function of the number of positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DExpr {
    Const(i64),
    NMinus(i64),
}

impl DExpr {
    pub fn eval(&self, n: i64) -> i64 {
        match self {
            DExpr::Const(d) => *d,
            DExpr::NMinus(k) => n - k,
        }
    }
}

impl fmt::Display for DExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DExpr::Const(d) => write!(f, "{d}"),
            DExpr::NMinus(0) => write!(f, "N"),
            DExpr::NMinus(k) => write!(f, "N-{k}"),
        }
    }
}

/// A known nilpotent-orbit case: the orbit invariants `(N, d)`, standard
/// Levi data when applicable, the expected hyperplane configuration when one
/// is known, and non-normative notes.
#[derive(Clone, Debug)]
pub struct CaseRecord {
    pub name: &'static str,
    pub scope: CaseScope,
    pub orbit: &'static str,
    /// `N` for fixed-rank records; families derive it from the rank.
    pub n: Option<i64>,
    pub d: DExpr,
    pub levi_subset: Option<&'static str>,
    pub component_group_caveat: bool,
    pub expected_configs: Vec<Vec<PartType>>,
    pub notes: Vec<&'static str>,
}

impl CaseRecord {
    pub fn d_value(&self) -> Option<i64> {
        self.n.map(|n| self.d.eval(n))
    }
}

fn part(label: TypeLabel, rank: usize) -> PartType {
    PartType { label, rank }
}

/// The static registry of known cases.
pub fn case_registry() -> Vec<CaseRecord> {
    use TypeLabel::*;
    vec![
        CaseRecord {
            name: "B2 minimal",
            scope: CaseScope::Simple(B, RankSpec::Fixed(2)),
            orbit: "minimal",
            n: Some(4),
            d: DExpr::Const(2),
            levi_subset: Some("{alpha1}"),
            component_group_caveat: false,
            expected_configs: vec![vec![part(A, 1), part(A, 1)]],
            notes: vec![
                "two orthogonal lower hyperplanes (s = 0 and 2r + s = p), an A1 x A1 configuration",
                "alcove E is expected to carry the simple module of alcove A with alternating sum \
                 3 delta_A; the coefficient 3 is conjectural and never asserted by the verify suites",
            ],
        },
        CaseRecord {
            name: "A3 minimal",
            scope: CaseScope::Simple(A, RankSpec::Fixed(3)),
            orbit: "minimal",
            n: Some(6),
            d: DExpr::Const(3),
            levi_subset: None,
            component_group_caveat: false,
            expected_configs: vec![vec![part(A, 2)]],
            notes: vec![
                "two symmetrically placed A2 configurations of lower hyperplanes; \
                 no unique lowest alcove in the canonical left cell",
            ],
        },
        CaseRecord {
            name: "A3 middle",
            scope: CaseScope::Simple(A, RankSpec::Fixed(3)),
            orbit: "middle",
            n: Some(6),
            d: DExpr::Const(4),
            levi_subset: None,
            component_group_caveat: false,
            expected_configs: vec![],
            notes: vec![],
        },
        CaseRecord {
            name: "G2 (d=3)",
            scope: CaseScope::Simple(G, RankSpec::Fixed(2)),
            orbit: "d=3",
            n: Some(6),
            d: DExpr::Const(3),
            levi_subset: None,
            component_group_caveat: true,
            expected_configs: vec![],
            notes: vec!["results less complete, as in the subregular case"],
        },
        CaseRecord {
            name: "G2 (d=4)",
            scope: CaseScope::Simple(G, RankSpec::Fixed(2)),
            orbit: "d=4",
            n: Some(6),
            d: DExpr::Const(4),
            levi_subset: None,
            component_group_caveat: false,
            expected_configs: vec![],
            notes: vec![],
        },
        CaseRecord {
            name: "E8 minimal",
            scope: CaseScope::Simple(E, RankSpec::Fixed(8)),
            orbit: "minimal",
            n: Some(120),
            d: DExpr::Const(29),
            levi_subset: None,
            component_group_caveat: false,
            expected_configs: vec![vec![part(A, 7), part(E, 7)]],
            notes: vec![
                "the 91 non-p factors may combine 28 positive roots of an A7 with 63 of an E7, \
                 both subdiagrams of the extended Dynkin diagram",
            ],
        },
        CaseRecord {
            name: "subregular",
            scope: CaseScope::AnySimple,
            orbit: "subregular",
            n: None,
            d: DExpr::NMinus(1),
            levi_subset: None,
            component_group_caveat: true,
            expected_configs: vec![],
            notes: vec![
                "with two root lengths the number of simple modules per block is less certain",
                "a nontrivial component group may permute nonisomorphic simple modules of equal \
                 dimension (seen for B2 and G2); each intersection of a left cell with its \
                 inverse should correspond to a component-group orbit in the simple modules of \
                 a block",
            ],
        },
        CaseRecord {
            name: "Cn standard Levi",
            scope: CaseScope::Simple(C, RankSpec::AtLeast(3)),
            orbit: "standard Levi I = C_{n-1}",
            n: None,
            d: DExpr::NMinus(2),
            levi_subset: Some("C_{n-1}"),
            component_group_caveat: true,
            expected_configs: vec![],
            notes: vec!["results less complete, as in the subregular case"],
        },
        CaseRecord {
            name: "Dn standard Levi",
            scope: CaseScope::Simple(D, RankSpec::AtLeast(4)),
            orbit: "standard Levi I = D_{n-1}",
            n: None,
            d: DExpr::NMinus(2),
            levi_subset: Some("D_{n-1}"),
            component_group_caveat: false,
            expected_configs: vec![],
            notes: vec![],
        },
        CaseRecord {
            name: "regular",
            scope: CaseScope::AnySimple,
            orbit: "regular",
            n: None,
            d: DExpr::NMinus(0),
            levi_subset: None,
            component_group_caveat: false,
            expected_configs: vec![],
            notes: vec!["every simple module has the maximum dimension p^N"],
        },
    ]
}

/// Find a registry record by type and orbit name.
pub fn find_case(label: TypeLabel, rank: usize, orbit: &str) -> Option<CaseRecord> {
    case_registry().into_iter().find(|rec| {
        rec.orbit == orbit
            && match rec.scope {
                CaseScope::Simple(l, RankSpec::Fixed(r)) => l == label && r == rank,
                CaseScope::Simple(l, RankSpec::AtLeast(r)) => l == label && rank >= r,
                CaseScope::AnySimple => true,
            }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::b2_system;

    fn w(r: i64, s: i64) -> ShiftedWeight {
        ShiftedWeight::from_pair(r, s)
    }

    #[test]
    fn weyl_formula_as_dimension_formula() {
        let rs = b2_system();
        let f = DimensionFormula::weyl(&rs);
        assert_eq!(f.denominator, 6);
        assert_eq!(f.p_power, 0);
        assert_eq!(f.evaluate(&w(2, 1), 5).unwrap(), BigInt::from(5));
        assert_eq!(f.evaluate(&w(2, 1), 99).unwrap(), BigInt::from(5));
    }

    #[test]
    fn delta_a_formula_examples() {
        let f = DimensionFormula::b2_delta();
        assert_eq!(f.evaluate(&w(3, 1), 5).unwrap(), BigInt::from(25));
        // on the wall 2r + s = p the factor vanishes
        assert_eq!(f.evaluate(&w(2, 1), 5).unwrap(), BigInt::from(0));
    }

    #[test]
    fn inexact_division_is_reported() {
        let f = DimensionFormula {
            factors: vec![AffineFactor { a: vec![1, 0], k: 0 }],
            p_power: 0,
            denominator: 2,
        };
        match f.evaluate(&w(1, 1), 5) {
            Err(Error::InexactDivision { numerator, denominator }) => {
                assert_eq!(numerator, BigInt::from(1));
                assert_eq!(denominator, BigInt::from(2));
            }
            other => panic!("expected inexact division, got {other:?}"),
        }
    }

    #[test]
    fn formula_json_round_trip() {
        let f = DimensionFormula::b2_block('A').unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"factors\""));
        assert!(json.contains("\"d\":2"));
        assert!(json.contains("\"den\":2"));
        let back: DimensionFormula = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn block_examples() {
        let rs = b2_system();
        let b = jantzen_b2_block(&rs, &w(1, 1), 5).unwrap();
        assert_eq!(
            b.dims,
            [BigInt::from(25), BigInt::from(125), BigInt::from(225), BigInt::from(100)]
        );
        let b = jantzen_b2_block(&rs, &w(1, 1), 7).unwrap();
        assert_eq!(
            b.dims,
            [BigInt::from(98), BigInt::from(343), BigInt::from(1274), BigInt::from(245)]
        );
        let b = jantzen_b2_block(&rs, &w(1, 2), 5).unwrap();
        assert_eq!(
            b.dims,
            [BigInt::from(25), BigInt::from(125), BigInt::from(100), BigInt::from(225)]
        );
    }

    #[test]
    fn block_rejects_bad_input() {
        let rs = b2_system();
        assert!(jantzen_b2_block(&rs, &w(2, 2), 5).is_err()); // 2r+s = 6 > 5
        assert!(jantzen_b2_block(&rs, &w(1, 1), 4).is_err()); // p not prime
        assert!(jantzen_b2_block(&rs, &w(1, 1), 9).is_err());
    }

    #[test]
    fn delta_values_p5() {
        let cases = [
            ((3, 1), 25),
            ((3, 3), 150),
            ((1, 7), 350),
            ((4, 3), 225),
            ((2, 7), 525),
            ((1, 1), -25),
        ];
        for ((r, s), want) in cases {
            assert_eq!(delta_b2(r, s, 5).unwrap(), BigInt::from(want), "delta({r},{s})");
        }
    }

    #[test]
    fn delta_vanishing_locus() {
        for p in [5, 7] {
            for r in -8..8 {
                assert!(delta_b2(r, 0, p).unwrap().is_zero());
                for s in -8..8 {
                    let zero = delta_b2(r, s, p).unwrap().is_zero();
                    assert_eq!(zero, s == 0 || 2 * r + s == p, "p={p} ({r},{s})");
                    let zero_cell = delta_b2_cell(r, s, p).unwrap().is_zero();
                    assert_eq!(zero_cell, s == p || 2 * r + s == 2 * p, "cell p={p} ({r},{s})");
                }
            }
        }
    }

    #[test]
    fn delta_cell_examples() {
        assert_eq!(delta_b2_cell(3, 6, 5).unwrap(), BigInt::from(25));
        for r in -4..9 {
            assert!(delta_b2_cell(r, 5, 5).unwrap().is_zero());
        }
    }

    #[test]
    fn delta_cell_translation_identity() {
        for p in [5i64, 7] {
            for r in -3 * p..=3 * p {
                for s in -3 * p..=3 * p {
                    assert_eq!(
                        delta_b2_cell(r, s + p, p).unwrap(),
                        delta_b2(r, s, p).unwrap(),
                        "p={p} ({r},{s})"
                    );
                }
            }
        }
    }

    #[test]
    fn pattern_holds_and_is_unique_on_generic_block() {
        let rs = b2_system();
        let block = jantzen_b2_block(&rs, &w(1, 1), 5).unwrap();
        assert_eq!(
            block.deltas,
            [BigInt::from(25), BigInt::from(150), BigInt::from(350), BigInt::from(225)]
        );
        let sol = solve_pattern(&block).unwrap();
        assert!(sol.verified);
        assert_eq!(sol.matrix, PATTERN_MATRIX);
        let found = discover_pattern(&block);
        assert_eq!(found, vec![PATTERN_MATRIX]);

        let block7 = jantzen_b2_block(&rs, &w(1, 1), 7).unwrap();
        assert!(solve_pattern(&block7).is_ok());
    }

    #[test]
    fn pattern_identities_are_polynomial() {
        // The four alternating-sum identities hold as polynomial identities
        // in (r, s, p); checked on a grid larger than the total degree,
        // including non-prime p, with doubled values to avoid division.
        let d2 = |r: i128, s: i128, p: i128| s * (2 * r + s - p) * p * p;
        for r in -2..6i128 {
            for s in -2..6i128 {
                for p in 2..10i128 {
                    let a = (p - r - s, s);
                    let b = (p - r - s, 2 * r + s);
                    let c = (r, 2 * p - 2 * r - s);
                    let d = (p - r, 2 * r + s);
                    let da = d2(a.0, a.1, p);
                    let db = d2(b.0, b.1, p);
                    let dc = d2(c.0, c.1, p);
                    let dd = d2(d.0, d.1, p);
                    assert_eq!(da, s * (p - 2 * r - s) * p * p);
                    assert_eq!(db - da, 2 * p * r * p * p);
                    assert_eq!(dc - db + da, (2 * p - s) * (p - 2 * r - s) * p * p);
                    assert_eq!(dd - db + da, s * (p + 2 * r + s) * p * p);
                }
            }
        }
    }

    #[test]
    fn premet_examples() {
        let dims = [BigInt::from(25), BigInt::from(125), BigInt::from(225), BigInt::from(100)];
        assert!(premet_check(&dims, 5, 2));
        assert!(!premet_check(&[BigInt::from(5)], 5, 2));
        // regular orbit: every dim p^N is divisible by p^N
        let pn = Pow::pow(&BigInt::from(7), 9u32);
        assert!(premet_check(&[pn.clone(), pn], 7, 9));
    }

    #[test]
    fn minimum_examples() {
        let rs = b2_system();
        let f = DimensionFormula::b2_block('A').unwrap();
        let m = minimize_formula(&f, &rs, 5).unwrap();
        assert_eq!(m.value, BigInt::from(25));
        assert_eq!(m.weights, vec![w(1, 1), w(1, 2)]);
        let m = minimize_formula(&f, &rs, 7).unwrap();
        assert_eq!(m.value, BigInt::from(49));
        assert_eq!(m.weights, vec![w(2, 1), w(2, 2)]);
        match minimize_formula(&f, &rs, 3) {
            Err(Error::EmptyRegion { p: 3, coxeter_number: 4 }) => {}
            other => panic!("expected empty region, got {other:?}"),
        }
    }

    #[test]
    fn minimum_attained_at_stated_weights() {
        let rs = b2_system();
        let f = DimensionFormula::b2_block('A').unwrap();
        for p in [5i64, 7, 11, 13] {
            let m = minimize_formula(&f, &rs, p).unwrap();
            assert_eq!(m.value, BigInt::from(p * p));
            assert_eq!(m.weights, vec![w((p - 3) / 2, 1), w((p - 3) / 2, 2)]);
        }
    }

    #[test]
    fn registry_lookups() {
        let b2min = find_case(TypeLabel::B, 2, "minimal").unwrap();
        assert_eq!(b2min.n, Some(4));
        assert_eq!(b2min.d_value(), Some(2));
        assert_eq!(
            b2min.expected_configs,
            vec![vec![part(TypeLabel::A, 1), part(TypeLabel::A, 1)]]
        );
        assert_eq!(b2min.levi_subset, Some("{alpha1}"));

        let e8min = find_case(TypeLabel::E, 8, "minimal").unwrap();
        assert_eq!(e8min.n, Some(120));
        assert_eq!(e8min.d_value(), Some(29));
        assert_eq!(e8min.n.unwrap() - e8min.d_value().unwrap(), 91);

        let cn = find_case(TypeLabel::C, 5, "standard Levi I = C_{n-1}").unwrap();
        assert_eq!(cn.d, DExpr::NMinus(2));
        assert_eq!(cn.d.eval(25), 23);

        let a3min = find_case(TypeLabel::A, 3, "minimal").unwrap();
        assert_eq!(a3min.n.unwrap() - a3min.d_value().unwrap(), 3);
        assert!(a3min.notes[0].contains("two symmetrically placed"));
    }

    #[test]
    fn registry_d_within_bounds() {
        for rec in case_registry() {
            if let (Some(n), Some(d)) = (rec.n, rec.d_value()) {
                assert!(0 <= d && d <= n, "{}: d={d} N={n}", rec.name);
            }
        }
    }
}
