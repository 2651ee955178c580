//! Root-system combinatorics: Cartan data, positive roots, coroot pairings,
//! Weyl's dimension formula, and induced subdiagrams of the extended Dynkin
//! diagram.
//!
//! Conventions used throughout the crate:
//!
//! * `cartan[i][j]` is `<alpha_j, alpha_i_vee>`, so row `i` is the functional
//!   given by the `i`-th simple coroot.
//! * Simple roots are numbered as in Bourbaki. In particular for `B2` the
//!   first simple root is long and the second is short.
//! * Weights are stored rho-shifted: the coordinate vector of a weight `w`
//!   is `(<w, alpha_1_vee>, ..., <w, alpha_n_vee>)`, so `rho` itself is the
//!   all-ones vector. Dominant regular means every coordinate is >= 1.
//! * Positive roots are ordered by height, then by coordinate vector
//!   (largest first within a height level), which puts the simple roots
//!   first in index order.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::{Error, Result};

/// The seven families of simple root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub fn as_char(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<TypeLabel> {
        match c.to_ascii_uppercase() {
            'A' => Some(TypeLabel::A),
            'B' => Some(TypeLabel::B),
            'C' => Some(TypeLabel::C),
            'D' => Some(TypeLabel::D),
            'E' => Some(TypeLabel::E),
            'F' => Some(TypeLabel::F),
            'G' => Some(TypeLabel::G),
            _ => None,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parse a compact name like `"B2"` or `"E8"` into `(label, rank)`.
pub fn parse_type(s: &str) -> Result<(TypeLabel, usize)> {
    let mut chars = s.chars();
    let head = chars.next().and_then(TypeLabel::from_char);
    let rank: Option<usize> = chars.as_str().parse().ok();
    match (head, rank) {
        (Some(label), Some(rank)) if rank > 0 => Ok((label, rank)),
        _ => Err(Error::InvalidType { label: s.to_string(), rank: -1 }),
    }
}

/// Number of positive roots for a valid `(label, rank)` pair.
pub fn positive_root_count(label: TypeLabel, rank: usize) -> i64 {
    let n = rank as i64;
    match label {
        TypeLabel::A => n * (n + 1) / 2,
        TypeLabel::B | TypeLabel::C => n * n,
        TypeLabel::D => n * (n - 1),
        TypeLabel::E => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!("invalid E rank"),
        },
        TypeLabel::F => 24,
        TypeLabel::G => 6,
    }
}

/// A rho-shifted weight: coordinate `i` is `<lambda + rho, alpha_i_vee>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedWeight {
    coords: Vec<i64>,
}

impl ShiftedWeight {
    pub fn new(coords: Vec<i64>) -> ShiftedWeight {
        ShiftedWeight { coords }
    }

    /// Rank-2 convenience constructor in Jantzen's `(r, s)` style.
    pub fn from_pair(r: i64, s: i64) -> ShiftedWeight {
        ShiftedWeight { coords: vec![r, s] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant_regular(&self) -> bool {
        self.coords.iter().all(|&c| c >= 1)
    }
}

impl fmt::Debug for ShiftedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ShiftedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A simple root system with all derived combinatorial data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i)` on the scale where short roots have length 1.
    simple_len2: Vec<i64>,
    /// Positive roots as simple-root coordinate vectors.
    positive_roots: Vec<Vec<i64>>,
    /// Row `c(alpha)` per positive root: `<x, alpha_vee> = sum c_i x_i`.
    coroot_pairings: Vec<Vec<i64>>,
    /// Shifted-coordinate vector `(<alpha, alpha_i_vee>)_i` per positive root,
    /// used to move weights by multiples of the root.
    weight_vectors: Vec<Vec<i64>>,
    coxeter_number: i64,
    highest_root: usize,
    highest_short_root: usize,
    /// `ext_row[j] = <alpha_j, alpha_0_vee>`, `ext_col[j] = <alpha_0, alpha_j_vee>`
    /// for the affine node `alpha_0 = -theta`.
    ext_row: Vec<i64>,
    ext_col: Vec<i64>,
}

/// Build the root system for `(label, rank)`.
///
/// Valid ranks: A n>=1, B n>=2, C n>=2, D n>=4, E in {6,7,8}, F4, G2, all
/// capped at rank 8 so the extended diagram has at most 9 nodes.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystem> {
    let (cartan, simple_len2) = cartan_matrix(label, rank)
        .ok_or(Error::InvalidType { label: label.to_string(), rank: rank as i64 })?;

    // Symmetrized form: gram[i][j] = 2 (alpha_i, alpha_j) = cartan[i][j] * simple_len2[i].
    let mut gram = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            gram[i][j] = cartan[i][j] * simple_len2[i];
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            assert_eq!(gram[i][j], gram[j][i], "cartan/length data must symmetrize");
        }
    }

    // Positive roots by the standard root-string closure, level by level.
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut levels: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut first: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        seen.insert(c.clone());
        first.push(c);
    }
    levels.push(first);
    loop {
        let prev = levels.last().unwrap().clone();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &prev {
            for i in 0..rank {
                // <beta, alpha_i_vee>
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                // how far the alpha_i-string extends below beta
                let mut down = 0i64;
                let mut gamma = beta.clone();
                loop {
                    gamma[i] -= 1;
                    if gamma[i] < 0 || !seen.contains(&gamma) {
                        break;
                    }
                    down += 1;
                }
                if down - pairing >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    let mut positive_roots: Vec<Vec<i64>> = Vec::new();
    for level in &mut levels {
        level.sort();
        level.reverse();
        positive_roots.extend(level.iter().cloned());
    }
    let n = positive_roots.len() as i64;
    assert_eq!(n, positive_root_count(label, rank), "positive-root count for {label}{rank}");

    // Highest root: the unique root on the top height level.
    assert_eq!(levels.last().unwrap().len(), 1, "top height level must be a single root");
    let highest_root = positive_roots.len() - 1;
    let coxeter_number = levels.len() as i64 + 1;

    // Coroot pairing rows.
    let mut coroot_pairings = Vec::with_capacity(positive_roots.len());
    for beta in &positive_roots {
        let d2: i64 = (0..rank)
            .map(|i| (0..rank).map(|j| beta[i] * beta[j] * gram[i][j]).sum::<i64>())
            .sum();
        assert!(d2 > 0);
        let mut row = vec![0i64; rank];
        for i in 0..rank {
            let num = beta[i] * gram[i][i];
            assert_eq!(num % d2, 0, "coroot coefficients must be integral");
            row[i] = num / d2;
        }
        coroot_pairings.push(row);
    }

    // Shifted-coordinate image of each root: (A c)_i = <beta, alpha_i_vee>.
    let weight_vectors: Vec<Vec<i64>> = positive_roots
        .iter()
        .map(|beta| {
            (0..rank)
                .map(|i| (0..rank).map(|j| cartan[i][j] * beta[j]).sum())
                .collect()
        })
        .collect();

    // Highest short root = root whose coroot has maximal height.
    let coheight = |row: &Vec<i64>| row.iter().sum::<i64>();
    let max_coheight = coroot_pairings.iter().map(coheight).max().unwrap();
    let shorts: Vec<usize> = (0..positive_roots.len())
        .filter(|&i| coheight(&coroot_pairings[i]) == max_coheight)
        .collect();
    assert_eq!(shorts.len(), 1, "highest coroot must be unique");
    let highest_short_root = shorts[0];

    // Affine node alpha_0 = -theta.
    let theta_row = &coroot_pairings[highest_root];
    let ext_row: Vec<i64> = (0..rank)
        .map(|j| -(0..rank).map(|i| theta_row[i] * cartan[i][j]).sum::<i64>())
        .collect();
    let ext_col: Vec<i64> = weight_vectors[highest_root].iter().map(|v| -v).collect();

    // Simple roots come first and have standard-basis coroot rows.
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        assert_eq!(positive_roots[i], e);
        assert_eq!(coroot_pairings[i], e);
    }

    Ok(RootSystem {
        label,
        rank,
        cartan,
        simple_len2,
        positive_roots,
        coroot_pairings,
        weight_vectors,
        coxeter_number,
        highest_root,
        highest_short_root,
        ext_row,
        ext_col,
    })
}

/// Bourbaki Cartan matrix (`cartan[i][j] = <alpha_j, alpha_i_vee>`) and
/// squared simple-root lengths on the short = 1 scale. `None` for invalid
/// pairs.
fn cartan_matrix(label: TypeLabel, rank: usize) -> Option<(Vec<Vec<i64>>, Vec<i64>)> {
    if rank == 0 || rank > 8 {
        return None;
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, edges: &[(usize, usize)]| {
        for &(i, j) in edges {
            a[i][j] = -1;
            a[j][i] = -1;
        }
    };
    let path: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let len2;
    match (label, rank) {
        (TypeLabel::A, _) => {
            chain(&mut a, &path);
            len2 = vec![1; n];
        }
        (TypeLabel::B, r) if r >= 2 => {
            chain(&mut a, &path);
            // alpha_n short: <alpha_{n-1}, alpha_n_vee> = -2
            a[n - 1][n - 2] = -2;
            let mut l = vec![2; n];
            l[n - 1] = 1;
            len2 = l;
        }
        (TypeLabel::C, r) if r >= 2 => {
            chain(&mut a, &path);
            a[n - 2][n - 1] = -2;
            let mut l = vec![1; n];
            l[n - 1] = 2;
            len2 = l;
        }
        (TypeLabel::D, r) if r >= 4 => {
            let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 1));
            chain(&mut a, &edges);
            len2 = vec![1; n];
        }
        (TypeLabel::E, 6..=8) => {
            // chain 1-3-4-5-..., node 2 hangs off node 4 (Bourbaki numbering)
            let mut edges: Vec<(usize, usize)> = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                edges.push((i, i + 1));
            }
            chain(&mut a, &edges);
            len2 = vec![1; n];
        }
        (TypeLabel::F, 4) => {
            chain(&mut a, &path);
            // alpha_2 long, alpha_3 short
            a[2][1] = -2;
            len2 = vec![2, 2, 1, 1];
        }
        (TypeLabel::G, 2) => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
            len2 = vec![1, 3];
        }
        _ => return None,
    }
    Some((a, len2))
}

impl RootSystem {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Number of positive roots `N`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn coroot_pairing_rows(&self) -> &[Vec<i64>] {
        &self.coroot_pairings
    }

    /// Shifted-coordinate image of positive root `idx`.
    pub fn root_as_weight(&self, idx: usize) -> &[i64] {
        &self.weight_vectors[idx]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root
    }

    /// Index of the highest short root; its coroot is the highest coroot, so
    /// the hyperplane `<x, alpha_vee> = p` bounds the lowest alcove above.
    pub fn highest_short_root_index(&self) -> usize {
        self.highest_short_root
    }

    /// Simple-root coordinates of the lowest root `-theta` (the affine node
    /// of the extended Dynkin diagram).
    pub fn lowest_root_coefficients(&self) -> Vec<i64> {
        self.positive_roots[self.highest_root].iter().map(|c| -c).collect()
    }

    /// `<x, alpha_vee>` for positive root `idx`, exactly.
    pub fn pairing(&self, w: &ShiftedWeight, idx: usize) -> Result<i64> {
        if idx >= self.positive_roots.len() {
            return Err(Error::RootIndex { index: idx, count: self.positive_roots.len() });
        }
        Ok(self.pairing_unchecked(w, idx))
    }

    pub(crate) fn pairing_unchecked(&self, w: &ShiftedWeight, idx: usize) -> i64 {
        self.coroot_pairings[idx]
            .iter()
            .zip(w.coords())
            .map(|(c, x)| c * x)
            .sum()
    }

    /// All positive-root pairings of `w`, in root order.
    pub fn pairings(&self, w: &ShiftedWeight) -> Vec<i64> {
        (0..self.positive_roots.len()).map(|i| self.pairing_unchecked(w, i)).collect()
    }

    /// `<rho, alpha_vee>` per positive root (the coroot heights).
    pub fn rho_pairings(&self) -> Vec<i64> {
        self.coroot_pairings.iter().map(|row| row.iter().sum()).collect()
    }

    /// Weyl's dimension formula at a dominant regular shifted weight: the
    /// exact quotient of pairing products. Arbitrary precision.
    pub fn weyl_dim(&self, w: &ShiftedWeight) -> Result<BigInt> {
        if !w.is_dominant_regular() {
            return Err(Error::NotDominantRegular { coords: w.coords().to_vec() });
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..self.positive_roots.len() {
            num *= BigInt::from(self.pairing_unchecked(w, i));
            den *= BigInt::from(self.coroot_pairings[i].iter().sum::<i64>());
        }
        let (q, r) = num::Integer::div_rem(&num, &den);
        if !r.is_zero() {
            return Err(Error::InexactDivision { numerator: num, denominator: den });
        }
        Ok(q)
    }

    /// Apply the simple reflection `s_i` to shifted coordinates.
    pub fn simple_reflect(&self, w: &ShiftedWeight, i: usize) -> ShiftedWeight {
        let t = w.coords()[i];
        let mut c = w.coords().to_vec();
        for (k, v) in self.weight_vectors[i].iter().enumerate() {
            c[k] -= t * v;
        }
        ShiftedWeight::new(c)
    }

    /// Doubled inner product `2 (x, beta)` of a weight given in shifted
    /// coordinates with positive root `beta`, on the short-root = 1 scale.
    pub(crate) fn doubled_weight_root_product(&self, x: &[i64], idx: usize) -> i64 {
        self.positive_roots[idx]
            .iter()
            .enumerate()
            .map(|(j, c)| c * x[j] * self.simple_len2[j])
            .sum()
    }

    /// Pairings of the affine node with the finite nodes: per `j`, the pair
    /// `(<alpha_j, alpha_0_vee>, <alpha_0, alpha_j_vee>)`.
    pub fn extended_node_pairings(&self) -> Vec<(i64, i64)> {
        (0..self.rank).map(|j| (self.ext_row[j], self.ext_col[j])).collect()
    }
}

/// Dimension of the irreducible highest-weight module by Freudenthal's
/// multiplicity formula, summed over Weyl orbits of dominant weights.
///
/// This shares no code path with [`RootSystem::weyl_dim`] (no quotient of
/// pairing products anywhere) and serves as an independent cross-check at
/// desk scale. Cost grows quickly with the weight; intended for rank <= 3.
pub fn freudenthal_dim(rs: &RootSystem, w: &ShiftedWeight) -> Result<BigInt> {
    if !w.is_dominant_regular() {
        return Err(Error::NotDominantRegular { coords: w.coords().to_vec() });
    }
    let rank = rs.rank();
    if rank > 3 {
        return Err(Error::RankUnsupported { what: "freudenthal_dim", rank, max: 3 });
    }
    let lambda: Vec<i64> = w.coords().iter().map(|c| c - 1).collect();
    let bound = 3 * (lambda.iter().sum::<i64>() + 2) + 6;

    // Dominant weights mu with lambda - mu = sum k_i alpha_i, k_i >= 0.
    let mut dominant: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut kvec = vec![0i64; rank];
    loop {
        let mu: Vec<i64> = (0..rank)
            .map(|i| lambda[i] - (0..rank).map(|j| rs.cartan[i][j] * kvec[j]).sum::<i64>())
            .collect();
        if mu.iter().all(|&c| c >= 0) {
            dominant.push((mu, kvec.clone()));
        }
        // odometer over [0, bound]^rank
        let mut pos = 0;
        loop {
            if pos == rank {
                break;
            }
            kvec[pos] += 1;
            if kvec[pos] > bound {
                kvec[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
        if pos == rank {
            break;
        }
    }
    dominant.sort_by_key(|(_, k)| (k.iter().sum::<i64>(), k.clone()));

    // Reflect an arbitrary weight into the dominant chamber.
    let dominate = |mut mu: Vec<i64>| -> Vec<i64> {
        'outer: loop {
            for i in 0..rank {
                if mu[i] < 0 {
                    let t = mu[i];
                    for (k, v) in rs.root_as_weight(i).iter().enumerate() {
                        mu[k] -= t * v;
                    }
                    continue 'outer;
                }
            }
            return mu;
        }
    };

    let mut mult: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    mult.insert(lambda.clone(), BigInt::one());
    for (mu, kv) in dominant.iter().skip(1) {
        // D = 2 (lambda + mu + 2 rho, lambda - mu) via the root expansion:
        // 2 (x, alpha_j) = x_j * (alpha_j, alpha_j) for x in shifted coords.
        let lm2r: Vec<i64> = (0..rank).map(|i| lambda[i] + mu[i] + 2).collect();
        let d: i64 = (0..rank).map(|j| kv[j] * lm2r[j] * rs.simple_len2[j]).sum();
        assert!(d > 0, "freudenthal denominator must be positive below lambda");

        // rhs = sum over alpha > 0, k >= 1 of m(mu + k alpha) * 2 (mu + k alpha, alpha)
        let mut rhs = BigInt::zero();
        for a in 0..rs.num_positive_roots() {
            let va = rs.root_as_weight(a).to_vec();
            for k in 1..=bound {
                let shifted: Vec<i64> = (0..rank).map(|i| mu[i] + k * va[i]).collect();
                let dom = dominate(shifted.clone());
                if let Some(m) = mult.get(&dom) {
                    if !m.is_zero() {
                        let ip = rs.doubled_weight_root_product(&shifted, a);
                        rhs += m * BigInt::from(ip);
                    }
                }
            }
        }
        // m(mu) * D/2 = rhs/2, so m(mu) = rhs / (D/2) = 2 rhs / D.
        let (q, r) = num::Integer::div_rem(&(rhs * BigInt::from(2)), &BigInt::from(d));
        assert!(r.is_zero(), "freudenthal multiplicity must be integral");
        mult.insert(mu.clone(), q);
    }

    // Sum multiplicities over full Weyl orbits.
    let mut dim = BigInt::zero();
    for (mu, _) in &dominant {
        let m = mult.get(mu).cloned().unwrap_or_else(BigInt::zero);
        if m.is_zero() {
            continue;
        }
        let mut orbit: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = vec![mu.clone()];
        orbit.insert(mu.clone());
        while let Some(x) = queue.pop() {
            for i in 0..rank {
                let t = x[i];
                let mut y = x.clone();
                for (k, v) in rs.root_as_weight(i).iter().enumerate() {
                    y[k] -= t * v;
                }
                if orbit.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        dim += m * BigInt::from(orbit.len() as i64);
    }
    Ok(dim)
}

// ---------------------------------------------------------------------------
// Extended Dynkin diagram subsystem search
// ---------------------------------------------------------------------------

/// One part of a configuration: a simple type and rank, e.g. `A7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartType {
    pub label: TypeLabel,
    pub rank: usize,
}

impl PartType {
    pub fn num_positive_roots(&self) -> i64 {
        positive_root_count(self.label, self.rank)
    }
}

impl fmt::Display for PartType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

/// A multiset of subdiagram types whose positive-root counts sum to a target.
///
/// Each part arises as a connected induced subdiagram of the extended Dynkin
/// diagram. `disjoint_embeddable` records whether all parts can also be
/// realized simultaneously on pairwise disjoint, pairwise non-adjacent node
/// sets (a genuine orthogonal decomposition); parts are allowed to overlap
/// when the diagram is too small to separate them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemConfiguration {
    pub parts: Vec<PartType>,
    pub total_positive_roots: i64,
    pub disjoint_embeddable: bool,
}

impl fmt::Display for SubsystemConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// The extended Dynkin diagram as Cartan-entry data over `rank + 1` nodes
/// (node 0 = affine node).
struct ExtendedDiagram {
    nodes: usize,
    /// entry[i][j] = <alpha_j, alpha_i_vee> on extended indices.
    entry: Vec<Vec<i64>>,
}

impl ExtendedDiagram {
    fn new(rs: &RootSystem) -> ExtendedDiagram {
        let n = rs.rank();
        let ext = rs.extended_node_pairings();
        let mut entry = vec![vec![0i64; n + 1]; n + 1];
        entry[0][0] = 2;
        for j in 0..n {
            entry[0][j + 1] = ext[j].0;
            entry[j + 1][0] = ext[j].1;
            for k in 0..n {
                entry[j + 1][k + 1] = rs.cartan[j][k];
            }
        }
        ExtendedDiagram { nodes: n + 1, entry }
    }

    fn bond(&self, i: usize, j: usize) -> i64 {
        self.entry[i][j] * self.entry[j][i]
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.bond(i, j) != 0
    }

    fn subset_connected(&self, mask: u32) -> bool {
        let nodes: Vec<usize> = (0..self.nodes).filter(|i| mask & (1 << i) != 0).collect();
        if nodes.is_empty() {
            return false;
        }
        let mut seen = 1u32 << nodes[0];
        let mut queue = vec![nodes[0]];
        while let Some(v) = queue.pop() {
            for &u in &nodes {
                if seen & (1 << u) == 0 && self.adjacent(v, u) {
                    seen |= 1 << u;
                    queue.push(u);
                }
            }
        }
        nodes.iter().all(|&u| seen & (1 << u) != 0)
    }

    /// Classify a connected induced subdiagram to a finite simple type, or
    /// `None` when the subdiagram is not of finite type.
    fn classify(&self, mask: u32) -> Option<PartType> {
        let nodes: Vec<usize> = (0..self.nodes).filter(|i| mask & (1 << i) != 0).collect();
        let k = nodes.len();
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let bond = self.bond(nodes[a], nodes[b]);
                if bond != 0 {
                    edges.push((a, b, bond));
                }
            }
        }
        if edges.len() != k - 1 {
            return None; // cycles never classify; finite diagrams are trees
        }
        if edges.iter().any(|&(_, _, b)| b >= 4) {
            return None;
        }
        let triples = edges.iter().filter(|&&(_, _, b)| b == 3).count();
        let doubles = edges.iter().filter(|&&(_, _, b)| b == 2).count();
        let mut degree = vec![0usize; k];
        for &(a, b, _) in &edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let part = if triples == 1 && doubles == 0 && k == 2 {
            Some(PartType { label: TypeLabel::G, rank: 2 })
        } else if triples > 0 {
            None
        } else if doubles == 1 {
            if degree.iter().any(|&d| d > 2) {
                return None;
            }
            let &(a, b, _) = edges.iter().find(|&&(_, _, bond)| bond == 2).unwrap();
            if k == 2 {
                // A 2-node double bond is B2 = C2; B is the canonical label.
                Some(PartType { label: TypeLabel::B, rank: 2 })
            } else {
                let terminal = |x: usize| degree[x] == 1;
                if terminal(a) || terminal(b) {
                    // entry[x][y] = -2 means alpha_y is the long root of the
                    // pair; B_k ends in a short root, C_k in a long one.
                    let (end, inner) = if terminal(a) { (a, b) } else { (b, a) };
                    if self.entry[nodes[inner]][nodes[end]] == -2 {
                        Some(PartType { label: TypeLabel::C, rank: k })
                    } else {
                        Some(PartType { label: TypeLabel::B, rank: k })
                    }
                } else if k == 4 {
                    Some(PartType { label: TypeLabel::F, rank: 4 })
                } else {
                    None
                }
            }
        } else {
            // Simply laced tree.
            let branch: Vec<usize> = (0..k).filter(|&i| degree[i] > 2).collect();
            match branch.len() {
                0 => Some(PartType { label: TypeLabel::A, rank: k }),
                1 if degree[branch[0]] == 3 => {
                    let adj: Vec<Vec<usize>> = (0..k)
                        .map(|i| {
                            edges
                                .iter()
                                .filter_map(|&(a, b, _)| {
                                    if a == i {
                                        Some(b)
                                    } else if b == i {
                                        Some(a)
                                    } else {
                                        None
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    let mut legs = Vec::new();
                    for &start in &adj[branch[0]] {
                        let mut len = 1usize;
                        let mut prev = branch[0];
                        let mut cur = start;
                        while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        legs.push(len);
                    }
                    legs.sort();
                    match legs.as_slice() {
                        [1, 1, m] => Some(PartType { label: TypeLabel::D, rank: m + 3 }),
                        [1, 2, 2] => Some(PartType { label: TypeLabel::E, rank: 6 }),
                        [1, 2, 3] => Some(PartType { label: TypeLabel::E, rank: 7 }),
                        [1, 2, 4] => Some(PartType { label: TypeLabel::E, rank: 8 }),
                        _ => None,
                    }
                }
                _ => None,
            }
        };
        if let Some(p) = part {
            // Finite type iff the sub-Cartan is positive definite.
            debug_assert!(
                leading_minors_positive(&self.sub_cartan(&nodes)),
                "classified {p} must have positive definite Cartan"
            );
        }
        part
    }

    fn sub_cartan(&self, nodes: &[usize]) -> Vec<Vec<i64>> {
        nodes
            .iter()
            .map(|&a| nodes.iter().map(|&b| self.entry[a][b]).collect())
            .collect()
    }
}

/// All leading principal minors positive (Bareiss fraction-free pivots).
fn leading_minors_positive(m: &[Vec<i64>]) -> bool {
    let k = m.len();
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut prev = 1i64;
    for r in 0..k {
        if a[r][r] <= 0 {
            return false; // pivot r is the r+1-st leading minor over prev
        }
        for i in r + 1..k {
            for j in r + 1..k {
                a[i][j] = (a[i][j] * a[r][r] - a[i][r] * a[r][j]) / prev;
            }
        }
        prev = a[r][r];
    }
    true
}

/// Exhaustive list of subsystem configurations with the given total number
/// of positive roots and at most `max_parts` parts. Parts are connected
/// induced subdiagrams of the extended Dynkin diagram; the output is
/// duplicate-free in canonical sorted order.
pub fn subsystem_configurations(
    rs: &RootSystem,
    target: i64,
    max_parts: usize,
) -> Vec<SubsystemConfiguration> {
    let diagram = ExtendedDiagram::new(rs);
    let mut realizations: BTreeMap<PartType, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << diagram.nodes) {
        if !diagram.subset_connected(mask) {
            continue;
        }
        if let Some(part) = diagram.classify(mask) {
            realizations.entry(part).or_default().push(mask);
        }
    }
    let types: Vec<PartType> = realizations.keys().cloned().collect();

    fn search(
        types: &[PartType],
        from: usize,
        remaining: i64,
        slots: usize,
        current: &mut Vec<PartType>,
        out: &mut Vec<Vec<PartType>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for i in from..types.len() {
            let n = types[i].num_positive_roots();
            if n <= remaining {
                current.push(types[i]);
                search(types, i, remaining - n, slots - 1, current, out);
                current.pop();
            }
        }
    }
    let mut raw: Vec<Vec<PartType>> = Vec::new();
    search(&types, 0, target, max_parts, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.dedup();

    raw.into_iter()
        .map(|parts| SubsystemConfiguration {
            total_positive_roots: parts.iter().map(|p| p.num_positive_roots()).sum(),
            disjoint_embeddable: disjointly_embeddable(&diagram, &realizations, &parts),
            parts,
        })
        .collect()
}

/// Can all parts be placed on pairwise disjoint, pairwise non-adjacent node
/// sets? Then their union is an induced subdiagram with exactly these
/// components, i.e. a genuine orthogonal subsystem.
fn disjointly_embeddable(
    diagram: &ExtendedDiagram,
    realizations: &BTreeMap<PartType, Vec<u32>>,
    parts: &[PartType],
) -> bool {
    fn closed_neighborhood(diagram: &ExtendedDiagram, mask: u32) -> u32 {
        let mut out = mask;
        for i in 0..diagram.nodes {
            if mask & (1 << i) != 0 {
                for j in 0..diagram.nodes {
                    if diagram.adjacent(i, j) {
                        out |= 1 << j;
                    }
                }
            }
        }
        out
    }
    fn place(
        diagram: &ExtendedDiagram,
        realizations: &BTreeMap<PartType, Vec<u32>>,
        parts: &[PartType],
        used: u32,
    ) -> bool {
        let Some((first, rest)) = parts.split_first() else {
            return true;
        };
        for &mask in &realizations[first] {
            if closed_neighborhood(diagram, mask) & used == 0
                && place(diagram, realizations, rest, used | mask)
            {
                return true;
            }
        }
        false
    }
    place(diagram, realizations, parts, 0)
}

/// The distinct connected part types embeddable in the extended diagram.
pub fn embeddable_part_types(rs: &RootSystem) -> Vec<PartType> {
    let diagram = ExtendedDiagram::new(rs);
    let mut set = BTreeSet::new();
    for mask in 1u32..(1 << diagram.nodes) {
        if diagram.subset_connected(mask) {
            if let Some(part) = diagram.classify(mask) {
                set.insert(part);
            }
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> RootSystem {
        build_root_system(TypeLabel::B, 2).unwrap()
    }

    #[test]
    fn counts_match_known_values() {
        let cases = [
            (TypeLabel::A, 3, 6),
            (TypeLabel::B, 2, 4),
            (TypeLabel::B, 3, 9),
            (TypeLabel::C, 3, 9),
            (TypeLabel::D, 4, 12),
            (TypeLabel::G, 2, 6),
            (TypeLabel::F, 4, 24),
            (TypeLabel::E, 6, 36),
            (TypeLabel::E, 7, 63),
            (TypeLabel::E, 8, 120),
        ];
        for (label, rank, n) in cases {
            let rs = build_root_system(label, rank).unwrap();
            assert_eq!(rs.num_positive_roots(), n, "{label}{rank}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_system(TypeLabel::E, 5).is_err());
        assert!(build_root_system(TypeLabel::F, 3).is_err());
        assert!(build_root_system(TypeLabel::G, 3).is_err());
        assert!(build_root_system(TypeLabel::D, 3).is_err());
        assert!(build_root_system(TypeLabel::B, 1).is_err());
        assert!(build_root_system(TypeLabel::A, 9).is_err());
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(b2().coxeter_number(), 4);
        assert_eq!(build_root_system(TypeLabel::A, 3).unwrap().coxeter_number(), 4);
        assert_eq!(build_root_system(TypeLabel::G, 2).unwrap().coxeter_number(), 6);
        assert_eq!(build_root_system(TypeLabel::E, 8).unwrap().coxeter_number(), 30);
        assert_eq!(build_root_system(TypeLabel::F, 4).unwrap().coxeter_number(), 12);
    }

    #[test]
    fn b2_root_order_and_pairings() {
        let rs = b2();
        assert_eq!(
            rs.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
        // rows: alpha1 -> r, alpha2 -> s, alpha1+alpha2 -> 2r+s, alpha1+2alpha2 -> r+s
        assert_eq!(
            rs.coroot_pairing_rows(),
            &[vec![1, 0], vec![0, 1], vec![2, 1], vec![1, 1]]
        );
        let w = ShiftedWeight::from_pair(1, 1);
        assert_eq!(rs.pairing(&w, 2).unwrap(), 3);
        assert_eq!(rs.pairing(&w, 3).unwrap(), 2);
        assert_eq!(rs.pairing(&w, 0).unwrap(), 1);
        assert!(rs.pairing(&w, 4).is_err());
    }

    #[test]
    fn rho_pairing_of_simple_roots_is_one() {
        for (label, rank) in
            [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2), (TypeLabel::E, 8)]
        {
            let rs = build_root_system(label, rank).unwrap();
            let rho = ShiftedWeight::new(vec![1; rank]);
            for i in 0..rank {
                assert_eq!(rs.pairing(&rho, i).unwrap(), 1);
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        let rs = b2();
        assert_eq!(rs.weyl_dim(&ShiftedWeight::from_pair(1, 1)).unwrap(), BigInt::from(1));
        assert_eq!(rs.weyl_dim(&ShiftedWeight::from_pair(2, 2)).unwrap(), BigInt::from(16));
        assert_eq!(rs.weyl_dim(&ShiftedWeight::from_pair(2, 1)).unwrap(), BigInt::from(5));
        let a2 = build_root_system(TypeLabel::A, 2).unwrap();
        assert_eq!(a2.weyl_dim(&ShiftedWeight::from_pair(2, 2)).unwrap(), BigInt::from(8));
        assert!(rs.weyl_dim(&ShiftedWeight::from_pair(0, 3)).is_err());
    }

    #[test]
    fn weyl_dim_at_rho_shift_is_power_of_two() {
        use num::traits::Pow;
        for (label, rank) in
            [(TypeLabel::A, 1), (TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::G, 2)]
        {
            let rs = build_root_system(label, rank).unwrap();
            let two_rho = ShiftedWeight::new(vec![2; rank]);
            let expect = Pow::pow(&BigInt::from(2), rs.num_positive_roots() as u32);
            assert_eq!(rs.weyl_dim(&two_rho).unwrap(), expect);
        }
    }

    #[test]
    fn g2_fundamental_dimensions() {
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        assert_eq!(g2.weyl_dim(&ShiftedWeight::from_pair(2, 1)).unwrap(), BigInt::from(7));
        assert_eq!(g2.weyl_dim(&ShiftedWeight::from_pair(1, 2)).unwrap(), BigInt::from(14));
    }

    #[test]
    fn freudenthal_agrees_with_weyl() {
        let rs = b2();
        for (r, s) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            let w = ShiftedWeight::from_pair(r, s);
            assert_eq!(
                freudenthal_dim(&rs, &w).unwrap(),
                rs.weyl_dim(&w).unwrap(),
                "B2 ({r},{s})"
            );
        }
        let a2 = build_root_system(TypeLabel::A, 2).unwrap();
        assert_eq!(
            freudenthal_dim(&a2, &ShiftedWeight::from_pair(2, 2)).unwrap(),
            BigInt::from(8)
        );
        let g2 = build_root_system(TypeLabel::G, 2).unwrap();
        assert_eq!(
            freudenthal_dim(&g2, &ShiftedWeight::from_pair(2, 1)).unwrap(),
            BigInt::from(7)
        );
    }

    #[test]
    fn numerator_alternates_under_weyl_group() {
        // |numerator| is W-invariant and its sign is det(g), checked by full
        // enumeration of the rank-2 Weyl groups.
        for (label, rank, order) in
            [(TypeLabel::A, 2, 6), (TypeLabel::B, 2, 8), (TypeLabel::G, 2, 12)]
        {
            let rs = build_root_system(label, rank).unwrap();
            let w = ShiftedWeight::from_pair(3, 2);
            let numerator = |x: &ShiftedWeight| -> i64 { rs.pairings(x).iter().product() };
            let base = numerator(&w);
            let mut seen: HashSet<Vec<i64>> = HashSet::new();
            let mut queue = vec![(w.clone(), 1i64)];
            seen.insert(w.coords().to_vec());
            while let Some((x, sign)) = queue.pop() {
                assert_eq!(numerator(&x), sign * base);
                for i in 0..rank {
                    let y = rs.simple_reflect(&x, i);
                    if seen.insert(y.coords().to_vec()) {
                        queue.push((y, -sign));
                    }
                }
            }
            assert_eq!(seen.len(), order, "{label}{rank} Weyl group order");
        }
    }

    #[test]
    fn e8_configurations_contain_a7_e7() {
        let rs = build_root_system(TypeLabel::E, 8).unwrap();
        let configs = subsystem_configurations(&rs, 91, 2);
        let want = vec![
            PartType { label: TypeLabel::A, rank: 7 },
            PartType { label: TypeLabel::E, rank: 7 },
        ];
        assert!(configs.iter().any(|c| c.parts == want), "configs: {configs:?}");
    }

    #[test]
    fn b2_configurations_contain_a1_a1() {
        let configs = subsystem_configurations(&b2(), 2, 2);
        let want = vec![
            PartType { label: TypeLabel::A, rank: 1 },
            PartType { label: TypeLabel::A, rank: 1 },
        ];
        assert!(configs.iter().any(|c| c.parts == want && c.disjoint_embeddable));
    }

    #[test]
    fn a3_configurations_contain_a2() {
        let rs = build_root_system(TypeLabel::A, 3).unwrap();
        let configs = subsystem_configurations(&rs, 3, 2);
        let want = vec![PartType { label: TypeLabel::A, rank: 2 }];
        assert!(configs.iter().any(|c| c.parts == want));
    }

    #[test]
    fn full_type_is_always_a_configuration() {
        for (label, rank) in [
            (TypeLabel::A, 3),
            (TypeLabel::B, 2),
            (TypeLabel::B, 3),
            (TypeLabel::C, 3),
            (TypeLabel::D, 4),
            (TypeLabel::G, 2),
            (TypeLabel::F, 4),
            (TypeLabel::E, 6),
            (TypeLabel::E, 8),
        ] {
            let rs = build_root_system(label, rank).unwrap();
            let n = rs.num_positive_roots() as i64;
            let configs = subsystem_configurations(&rs, n, 1);
            let want = vec![PartType { label, rank }];
            assert!(configs.iter().any(|c| c.parts == want), "{label}{rank}: {configs:?}");
        }
    }

    #[test]
    fn empty_when_no_configuration_exists() {
        let rs = build_root_system(TypeLabel::A, 3).unwrap();
        assert!(subsystem_configurations(&rs, 5, 2).is_empty());
    }
}
