//! Root systems of the simple Lie algebras, built from Cartan data.
//!
//! Node indices are 1-based throughout the public API. Roots are stored as
//! integer vectors over the simple roots, weights as integer vectors over the
//! fundamental weights.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8)
    }

    fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            other => other.fixed_rank().unwrap_or(1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("unknown Lie type `{0}`")]
    UnknownType(String),
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no Euclidean realization is provided for {0}")]
    Unsupported(LieType),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// A simple Lie type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub const G2: LieType = LieType { family: Family::G2, rank: 2 };
    pub const F4: LieType = LieType { family: Family::F4, rank: 4 };
    pub const E6: LieType = LieType { family: Family::E6, rank: 6 };
    pub const E7: LieType = LieType { family: Family::E7, rank: 7 };
    pub const E8: LieType = LieType { family: Family::E8, rank: 8 };

    pub const EXCEPTIONAL: [LieType; 5] =
        [LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8];

    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank() && rank <= MAX_CLASSICAL_RANK,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootSystemError::RankOutOfRange { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_exceptional() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}{}", self.family, self.rank)
        }
    }
}

impl FromStr for LieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || RootSystemError::UnknownType(s.to_string());
        match s {
            "G2" => return Ok(LieType::G2),
            "F4" => return Ok(LieType::F4),
            "E6" => return Ok(LieType::E6),
            "E7" => return Ok(LieType::E7),
            "E8" => return Ok(LieType::E8),
            _ => {}
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let rank: usize = digits.parse().map_err(|_| unknown())?;
        LieType::new(family, rank)
    }
}

/// Coordinates over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of the fundamental weight of node `j` (1-based).
    pub fn coeff(&self, j: usize) -> i64 {
        self.0[j - 1]
    }
}

/// Cartan matrix with `c[i][j] = <alpha_i, alpha_j^vee>`, so that
/// `alpha_i = sum_j c[i][j] Lambda_j`.
pub fn cartan_matrix(lt: LieType) -> Vec<Vec<i64>> {
    let n = lt.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    match lt.family {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::G2 => link(1, 2),
        Family::F4 => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::E6 => {
            for i in 1..5 {
                link(i, i + 1);
            }
            link(3, 6);
        }
        Family::E7 => {
            for i in 1..6 {
                link(i, i + 1);
            }
            link(4, 7);
        }
        Family::E8 => {
            for i in 1..7 {
                link(i, i + 1);
            }
            link(5, 8);
        }
    }
    match lt.family {
        Family::B => c[n - 2][n - 1] = -2,
        Family::C => c[n - 1][n - 2] = -2,
        Family::G2 => c[0][1] = -3,
        Family::F4 => c[1][2] = -2,
        _ => {}
    }
    c
}

/// Sum of positive roots for the exceptional types, used as a
/// construction-time check of the enumeration conventions.
pub fn reference_two_sigma(lt: LieType) -> Option<&'static [i64]> {
    match lt.family {
        Family::G2 => Some(&[6, 10]),
        Family::F4 => Some(&[16, 30, 42, 22]),
        Family::E6 => Some(&[16, 30, 42, 30, 16, 22]),
        Family::E7 => Some(&[27, 52, 75, 96, 66, 34, 49]),
        Family::E8 => Some(&[58, 114, 168, 220, 270, 182, 92, 136]),
        _ => None,
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    highest_root: Vec<i64>,
    two_sigma: Vec<i64>,
}

impl RootSystem {
    pub fn new(lt: LieType) -> Result<Self, RootSystemError> {
        let cartan = cartan_matrix(lt);
        let positive_roots = generate_positive_roots(&cartan);
        let index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let highest_root = positive_roots
            .last()
            .cloned()
            .ok_or_else(|| RootSystemError::Inconsistent("no positive roots".into()))?;
        let n = lt.rank;
        let mut two_sigma = vec![0i64; n];
        for r in &positive_roots {
            for (s, x) in two_sigma.iter_mut().zip(r) {
                *s += x;
            }
        }
        let rs = RootSystem {
            lie_type: lt,
            cartan,
            positive_roots,
            index,
            highest_root,
            two_sigma,
        };
        rs.self_check()?;
        Ok(rs)
    }

    fn self_check(&self) -> Result<(), RootSystemError> {
        let lt = self.lie_type;
        if self.positive_roots.len() != lt.positive_root_count() {
            return Err(RootSystemError::Inconsistent(format!(
                "{lt}: generated {} positive roots, expected {}",
                self.positive_roots.len(),
                lt.positive_root_count()
            )));
        }
        let h = height(&self.highest_root);
        if self.positive_roots.iter().filter(|r| height(r) == h).count() != 1 {
            return Err(RootSystemError::Inconsistent(format!("{lt}: highest root not unique")));
        }
        let twos = vec![2i64; lt.rank];
        if self.to_weight_coords(&self.two_sigma)?.0 != twos {
            return Err(RootSystemError::Inconsistent(format!(
                "{lt}: 2 sigma is not 2 times the sum of fundamental weights"
            )));
        }
        if let Some(reference) = reference_two_sigma(lt) {
            if self.two_sigma != reference || self.to_weight_coords(reference)?.0 != twos {
                return Err(RootSystemError::Inconsistent(format!(
                    "{lt}: node enumeration disagrees with the reference 2 sigma"
                )));
            }
        }
        Ok(())
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, lexicographically within a height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    pub fn dynkin_marks(&self) -> &[i64] {
        &self.highest_root
    }

    /// Sum of all positive roots, in simple-root coordinates.
    pub fn two_sigma_g(&self) -> &[i64] {
        &self.two_sigma
    }

    /// `coords_j = sum_i v_i c_ij`.
    pub fn to_weight_coords(&self, v: &[i64]) -> Result<WeightVector, RootSystemError> {
        let n = self.rank();
        if v.len() != n {
            return Err(RootSystemError::LengthMismatch { expected: n, got: v.len() });
        }
        let coords = (0..n)
            .map(|j| (0..n).map(|i| v[i] * self.cartan[i][j]).sum())
            .collect();
        Ok(WeightVector(coords))
    }

    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        automorphisms_of(&self.cartan)
    }
}

pub fn build_root_system(lt: LieType) -> Result<RootSystem, RootSystemError> {
    RootSystem::new(lt)
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn generate_positive_roots(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let unit = |i: usize| {
        let mut e = vec![0i64; n];
        e[i] = 1;
        e
    };
    let mut seen: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut level: Vec<Vec<i64>> = seen.iter().cloned().collect();
    let mut all = level.clone();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for alpha in &level {
            for i in 0..n {
                let mut q = 0;
                let mut down = alpha.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !seen.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                let pairing: i64 = (0..n).map(|j| alpha[j] * c[j][i]).sum();
                if q - pairing > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
        seen.extend(level.iter().cloned());
        all.extend(level.iter().cloned());
    }
    all
}

/// Node permutations `p` with `c[p(i)][p(j)] = c[i][j]`. Entry `p[i - 1]` is
/// the image of node `i`; the identity comes first.
pub fn automorphisms_of(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_perm(c, &mut perm, &mut used, &mut out);
    out.into_iter()
        .map(|p| p.into_iter().map(|x| x + 1).collect())
        .collect()
}

fn extend_perm(c: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let n = c.len();
    let k = perm.len();
    if k == n {
        out.push(perm.clone());
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let fits = (0..k).all(|j| c[cand][perm[j]] == c[k][j] && c[perm[j]][cand] == c[j][k]);
        if fits {
            used[cand] = true;
            perm.push(cand);
            extend_perm(c, perm, used, out);
            perm.pop();
            used[cand] = false;
        }
    }
}

/// Apply a node permutation (as returned by [`automorphisms_of`]) to a vector
/// indexed by nodes.
pub fn permute_coords(perm: &[usize], v: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[perm[i] - 1] = x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "B4", "C2", "D3", "G2", "F4", "E6", "E7", "E8", "A32"] {
            assert_eq!(s.parse::<LieType>().unwrap().to_string(), s);
        }
        for s in ["A0", "B1", "C1", "D2", "E9", "G3", "A33", "X3", "A", "A-1", ""] {
            assert!(s.parse::<LieType>().is_err(), "{s}");
        }
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix(LieType::new(Family::A, 1).unwrap()), vec![vec![2]]);
        assert_eq!(cartan_matrix(LieType::G2), vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(
            cartan_matrix(LieType::F4),
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn g2_roots() {
        let g = rs("G2");
        let want: Vec<Vec<i64>> =
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 3]];
        let mut got = g.positive_roots().to_vec();
        got.sort();
        let mut want_sorted = want.clone();
        want_sorted.sort();
        assert_eq!(got, want_sorted);
        assert_eq!(g.highest_root(), &[2, 3]);
        assert_eq!(g.two_sigma_g(), &[6, 10]);
    }

    #[test]
    fn a2_and_a1() {
        let a2 = rs("A2");
        let mut got = a2.positive_roots().to_vec();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(rs("A1").two_sigma_g(), &[1]);
    }

    #[test]
    fn weight_coords() {
        let g = rs("G2");
        assert_eq!(g.to_weight_coords(&[6, 10]).unwrap().0, vec![2, 2]);
        assert_eq!(g.to_weight_coords(&[0, 0]).unwrap().0, vec![0, 0]);
        assert!(g.to_weight_coords(&[1]).is_err());
        let f = rs("F4");
        assert_eq!(f.to_weight_coords(&[15, 30, 42, 22]).unwrap().0, vec![0, 3, 2, 2]);
    }

    #[test]
    fn e8_marks() {
        let e = rs("E8");
        assert_eq!(e.positive_roots().len(), 120);
        assert_eq!(e.dynkin_marks(), &[2, 3, 4, 5, 6, 4, 2, 3]);
    }

    #[test]
    fn automorphism_groups() {
        let count = |s: &str| rs(s).diagram_automorphisms().len();
        assert_eq!(rs("A3").diagram_automorphisms(), vec![vec![1, 2, 3], vec![3, 2, 1]]);
        assert_eq!(count("E7"), 1);
        assert_eq!(count("E8"), 1);
        assert_eq!(count("E6"), 2);
        assert_eq!(count("D4"), 6);
        assert_eq!(count("D5"), 2);
        assert_eq!(count("B5"), 1);
        assert_eq!(count("G2"), 1);
        assert_eq!(count("F4"), 1);
        for p in rs("D4").diagram_automorphisms() {
            assert_eq!(p[1], 2);
        }
    }
}
