//! Painted Dynkin diagrams and the invariants of the flag manifolds they
//! describe: Koszul form, T-roots, Betti number, dimension, signatures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::rootsys::{RootSystem, RootSystemError, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("every node is white; no flag manifold")]
    NoBlackNode,
    #[error("Koszul form has coefficient {value} on white node {node}")]
    WhiteNonVanishing { node: usize, value: i64 },
    #[error("operation needs exactly one black node, found {0}")]
    NotBettiOne(usize),
    #[error("sign assignment has no entry for T-root {0:?}")]
    MissingSign(Vec<i64>),
    #[error("sign assignment has an entry for {0:?}, which is not a T-root")]
    ExtraSign(Vec<i64>),
    #[error("permutation does not fit rank {0}")]
    BadPermutation(usize),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Koszul form of the standard invariant complex structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulForm {
    pub root_coords: Vec<i64>,
    pub weight_coords: WeightVector,
    /// Coefficients on the black nodes, ascending node order.
    pub koszul_vector: Vec<i64>,
}

/// T-root multiplicities keyed by black-coordinate tuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TRootTable {
    pub entries: BTreeMap<Vec<i64>, usize>,
}

impl TRootTable {
    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.values().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone)]
pub struct Painting {
    rs: Arc<RootSystem>,
    white: Vec<usize>,
    black: Vec<usize>,
    koszul: KoszulForm,
}

pub fn make_painting<I>(rs: &Arc<RootSystem>, white: I) -> Result<Painting, FlagError>
where
    I: IntoIterator<Item = usize>,
{
    Painting::new(rs, white)
}

impl Painting {
    pub fn new<I>(rs: &Arc<RootSystem>, white: I) -> Result<Self, FlagError>
    where
        I: IntoIterator<Item = usize>,
    {
        let rank = rs.rank();
        let white: BTreeSet<usize> = white.into_iter().collect();
        if let Some(&node) = white.iter().find(|&&j| j == 0 || j > rank) {
            return Err(FlagError::NodeOutOfRange { node, rank });
        }
        if white.len() == rank {
            return Err(FlagError::NoBlackNode);
        }
        let black: Vec<usize> = (1..=rank).filter(|j| !white.contains(j)).collect();
        let white: Vec<usize> = white.into_iter().collect();
        let koszul = compute_koszul(rs, &white, &black)?;
        Ok(Painting { rs: Arc::clone(rs), white, black, koszul })
    }

    pub fn from_black<I>(rs: &Arc<RootSystem>, black: I) -> Result<Self, FlagError>
    where
        I: IntoIterator<Item = usize>,
    {
        let rank = rs.rank();
        let black: BTreeSet<usize> = black.into_iter().collect();
        if let Some(&node) = black.iter().find(|&&j| j == 0 || j > rank) {
            return Err(FlagError::NodeOutOfRange { node, rank });
        }
        Painting::new(rs, (1..=rank).filter(|j| !black.contains(j)))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    pub fn is_black(&self, node: usize) -> bool {
        self.black.binary_search(&node).is_ok()
    }

    pub fn second_betti(&self) -> usize {
        self.black.len()
    }

    fn black_coords(&self, root: &[i64]) -> Vec<i64> {
        self.black.iter().map(|&j| root[j - 1]).collect()
    }

    /// Positive roots of the stabilizer: all black coordinates vanish.
    pub fn subsystem_positive_roots(&self) -> Vec<Vec<i64>> {
        self.rs
            .positive_roots()
            .iter()
            .filter(|r| self.black.iter().all(|&j| r[j - 1] == 0))
            .cloned()
            .collect()
    }

    /// Complementary positive roots: some black coordinate is nonzero.
    pub fn complementary_roots(&self) -> Vec<Vec<i64>> {
        self.rs
            .positive_roots()
            .iter()
            .filter(|r| self.black.iter().any(|&j| r[j - 1] != 0))
            .cloned()
            .collect()
    }

    pub fn koszul_form(&self) -> &KoszulForm {
        &self.koszul
    }

    pub fn koszul_vector(&self) -> &[i64] {
        &self.koszul.koszul_vector
    }

    /// Spin and metaplectic structures exist under the same condition.
    pub fn is_spin(&self) -> bool {
        self.koszul.koszul_vector.iter().all(|k| k % 2 == 0)
    }

    pub fn is_metaplectic(&self) -> bool {
        self.is_spin()
    }

    pub fn t_root_table(&self) -> TRootTable {
        let mut entries = BTreeMap::new();
        for r in self.complementary_roots() {
            *entries.entry(self.black_coords(&r)).or_insert(0) += 1;
        }
        TRootTable { entries }
    }

    pub fn real_dimension(&self) -> usize {
        2 * self.complementary_roots().len()
    }

    /// Signature `(2 N_-, 2 N_+)` of the invariant metric with the given
    /// signs on the positive T-roots.
    pub fn metric_signature(
        &self,
        signs: &BTreeMap<Vec<i64>, Sign>,
    ) -> Result<(usize, usize), FlagError> {
        let table = self.t_root_table();
        if let Some(extra) = signs.keys().find(|k| !table.entries.contains_key(*k)) {
            return Err(FlagError::ExtraSign(extra.clone()));
        }
        let (mut minus, mut plus) = (0, 0);
        for (key, d) in &table.entries {
            match signs.get(key) {
                Some(Sign::Minus) => minus += d,
                Some(Sign::Plus) => plus += d,
                None => return Err(FlagError::MissingSign(key.clone())),
            }
        }
        Ok((2 * minus, 2 * plus))
    }

    /// Sum of the complementary roots whose black coordinates add up to
    /// `level`, in weight coordinates.
    pub fn level_sum(&self, level: i64) -> WeightVector {
        let mut sum = vec![0i64; self.rs.rank()];
        for r in self.complementary_roots() {
            if self.black.iter().map(|&j| r[j - 1]).sum::<i64>() == level {
                for (s, x) in sum.iter_mut().zip(&r) {
                    *s += x;
                }
            }
        }
        self.rs
            .to_weight_coords(&sum)
            .expect("sum has the rank of its root system")
    }

    /// Level-one sum for a painting with a single black node.
    pub fn level_one_sum(&self) -> Result<WeightVector, FlagError> {
        if self.black.len() != 1 {
            return Err(FlagError::NotBettiOne(self.black.len()));
        }
        Ok(self.level_sum(1))
    }

    /// Image under a node permutation (`perm[i - 1]` is the image of `i`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Painting, FlagError> {
        let rank = self.rs.rank();
        let mut seen = vec![false; rank];
        for &p in perm {
            if p == 0 || p > rank || std::mem::replace(&mut seen[p - 1], true) {
                return Err(FlagError::BadPermutation(rank));
            }
        }
        if perm.len() != rank {
            return Err(FlagError::BadPermutation(rank));
        }
        Painting::new(&self.rs, self.white.iter().map(|&w| perm[w - 1]))
    }

    /// Lexicographically least white set among the diagram-automorphism
    /// images of this painting.
    pub fn canonical_white(&self) -> Vec<usize> {
        self.rs
            .diagram_automorphisms()
            .iter()
            .map(|p| {
                let mut w: Vec<usize> = self.white.iter().map(|&x| p[x - 1]).collect();
                w.sort_unstable();
                w
            })
            .min()
            .unwrap_or_else(|| self.white.clone())
    }
}

impl PartialEq for Painting {
    fn eq(&self, other: &Self) -> bool {
        self.rs.lie_type() == other.rs.lie_type() && self.white == other.white
    }
}

impl Eq for Painting {}

impl fmt::Display for Painting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.rs.lie_type())?;
        for (i, w) in self.white.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

fn compute_koszul(rs: &RootSystem, white: &[usize], black: &[usize]) -> Result<KoszulForm, FlagError> {
    let mut root_coords = rs.two_sigma_g().to_vec();
    for r in rs.positive_roots() {
        if black.iter().all(|&j| r[j - 1] == 0) {
            for (s, x) in root_coords.iter_mut().zip(r) {
                *s -= x;
            }
        }
    }
    let weight_coords = rs.to_weight_coords(&root_coords)?;
    for &w in white {
        let value = weight_coords.coeff(w);
        if value != 0 {
            return Err(FlagError::WhiteNonVanishing { node: w, value });
        }
    }
    let koszul_vector = black.iter().map(|&j| weight_coords.coeff(j)).collect();
    Ok(KoszulForm { root_coords, weight_coords, koszul_vector })
}

/// Every painting with at least one black node, ordered by white bitmask.
pub fn all_paintings(rs: &Arc<RootSystem>) -> Vec<Painting> {
    let n = rs.rank();
    (0u64..(1u64 << n) - 1)
        .map(|mask| {
            let white = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1);
            Painting::new(rs, white).expect("white set is a proper subset")
        })
        .collect()
}

/// One painting per diagram-automorphism orbit, keeping the canonical
/// representative.
pub fn automorphism_representatives(rs: &Arc<RootSystem>) -> Vec<Painting> {
    all_paintings(rs)
        .into_iter()
        .filter(|p| p.canonical_white() == p.white())
        .collect()
}
