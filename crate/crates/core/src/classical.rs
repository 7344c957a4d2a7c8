//! Parametrized flag manifolds of the classical groups.
//!
//! A family is described by `n0` isolated black nodes, blocks `n_1..n_s`
//! (each at least 2) and, for B/C/D, a white tail of length `r`. Koszul
//! vectors are available three ways: a closed form, a walk over the white
//! strings of the diagram, and the general root-system computation.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::flag::{FlagError, Painting};
use crate::rootsys::{Family, LieType, RootSystem, RootSystemError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
}

impl ClassicalFamily {
    pub const ALL: [ClassicalFamily; 4] =
        [ClassicalFamily::A, ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D];

    pub fn family(self) -> Family {
        match self {
            ClassicalFamily::A => Family::A,
            ClassicalFamily::B => Family::B,
            ClassicalFamily::C => Family::C,
            ClassicalFamily::D => Family::D,
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.family().fmt(f)
    }
}

impl FromStr for ClassicalFamily {
    type Err = ClassicalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(ClassicalFamily::A),
            "B" | "b" => Ok(ClassicalFamily::B),
            "C" | "c" => Ok(ClassicalFamily::C),
            "D" | "d" => Ok(ClassicalFamily::D),
            other => Err(ClassicalError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("unknown classical family `{0}`")]
    UnknownFamily(String),
    #[error("block size {0} is below 2; isolated black nodes belong in n0")]
    BlockTooSmall(usize),
    #[error("family A has no tail, got r = {0}")]
    TailNotAllowed(usize),
    #[error("family D does not allow r = 1")]
    TailOfOne,
    #[error("parameters give no black node")]
    NoBlackNode,
    #[error("derived rank {rank} is out of range for family {family}")]
    Rank { family: ClassicalFamily, rank: usize },
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalParams {
    family: ClassicalFamily,
    n0: usize,
    blocks: Vec<usize>,
    r: usize,
    rank: usize,
}

impl ClassicalParams {
    pub fn new(
        family: ClassicalFamily,
        n0: usize,
        blocks: Vec<usize>,
        r: usize,
    ) -> Result<Self, ClassicalError> {
        if let Some(&b) = blocks.iter().find(|&&b| b < 2) {
            return Err(ClassicalError::BlockTooSmall(b));
        }
        let s = blocks.len();
        let total = n0 + blocks.iter().sum::<usize>();
        let (rank, black_count) = match family {
            ClassicalFamily::A => {
                if r != 0 {
                    return Err(ClassicalError::TailNotAllowed(r));
                }
                (total.saturating_sub(1), (n0 + s).saturating_sub(1))
            }
            _ => {
                if family == ClassicalFamily::D && r == 1 {
                    return Err(ClassicalError::TailOfOne);
                }
                (total + r, n0 + s)
            }
        };
        if black_count == 0 {
            return Err(ClassicalError::NoBlackNode);
        }
        if LieType::new(family.family(), rank).is_err() {
            return Err(ClassicalError::Rank { family, rank });
        }
        Ok(ClassicalParams { family, n0, blocks, r, rank })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lie_type(&self) -> LieType {
        LieType::new(self.family.family(), self.rank).expect("rank checked at construction")
    }

    /// Black nodes of the standard painting, ascending.
    pub fn black_nodes(&self) -> Vec<usize> {
        let seq: Vec<usize> = std::iter::repeat_n(1, self.n0)
            .chain(self.blocks.iter().copied())
            .collect();
        let mut pos = 0;
        let mut black = Vec::with_capacity(seq.len());
        for (i, step) in seq.iter().enumerate() {
            pos += step;
            if self.family == ClassicalFamily::A && i + 1 == seq.len() {
                break;
            }
            black.push(pos);
        }
        black
    }

    /// Value attached to the last block in the closed formulas.
    fn last_block(&self) -> i64 {
        self.blocks.last().map_or(1, |&b| b as i64)
    }
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}{}[n0={}, blocks=({})", self.family, self.rank, self.n0, blocks.join(","))?;
        if self.family != ClassicalFamily::A {
            write!(f, ", r={}", self.r)?;
        }
        f.write_str("]")
    }
}

pub fn standard_painting(params: &ClassicalParams) -> Result<Painting, ClassicalError> {
    let rs = Arc::new(RootSystem::new(params.lie_type())?);
    standard_painting_in(params, &rs)
}

/// Standard painting over an already built root system of the right type.
pub fn standard_painting_in(
    params: &ClassicalParams,
    rs: &Arc<RootSystem>,
) -> Result<Painting, ClassicalError> {
    if rs.lie_type() != params.lie_type() {
        return Err(ClassicalError::Rank { family: params.family, rank: rs.rank() });
    }
    Ok(Painting::from_black(rs, params.black_nodes())?)
}

pub fn koszul_closed_form(params: &ClassicalParams) -> Vec<i64> {
    let blocks: Vec<i64> = params.blocks.iter().map(|&b| b as i64).collect();
    let mut k = Vec::new();
    if params.n0 >= 1 {
        k.extend(std::iter::repeat_n(2, params.n0 - 1));
        if let Some(&first) = blocks.first() {
            k.push(1 + first);
        }
    }
    k.extend(blocks.windows(2).map(|w| w[0] + w[1]));
    let a = params.last_block();
    let r = params.r as i64;
    let s = blocks.len();
    match params.family {
        ClassicalFamily::A => {}
        ClassicalFamily::B => k.push(if r > 0 { a + 2 * r } else { 2 * a }),
        ClassicalFamily::C => k.push(a + 2 * r + 1),
        ClassicalFamily::D => k.push(match (r, s) {
            (0, 0) => 2,
            (0, _) => 2 * (a - 1),
            _ => a + 2 * r - 1,
        }),
    }
    k
}

/// Koszul numbers from the white strings next to each black node.
pub fn koszul_string_count(params: &ClassicalParams) -> Vec<i64> {
    let n = params.rank;
    let black = params.black_nodes();
    let is_black = |j: usize| black.binary_search(&j).is_ok();
    let adjacency = diagram_edges(params.family, n);
    let neighbours = |j: usize| -> Vec<usize> {
        adjacency
            .iter()
            .filter_map(|&(a, b)| if a == j { Some(b) } else if b == j { Some(a) } else { None })
            .collect()
    };
    let component = |start: usize| -> Vec<usize> {
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in neighbours(x) {
                if !is_black(y) && !seen.contains(&y) {
                    seen.push(y);
                    stack.push(y);
                }
            }
        }
        seen
    };
    black
        .iter()
        .map(|&j| {
            let b: i64 = neighbours(j)
                .into_iter()
                .filter(|&x| !is_black(x))
                .map(|x| string_weight(params.family, n, j, &component(x)))
                .sum();
            2 + b
        })
        .collect()
}

fn string_weight(family: ClassicalFamily, n: usize, black: usize, string: &[usize]) -> i64 {
    let size = string.len() as i64;
    let has = |x: usize| string.contains(&x);
    match family {
        ClassicalFamily::A => size,
        ClassicalFamily::B if black == n => 2 * size,
        ClassicalFamily::B if has(n) => 2 * size - 1,
        ClassicalFamily::C if has(n) => 2 * size,
        ClassicalFamily::D if has(n - 2) && (has(n - 1) || black == n - 1) && (has(n) || black == n) => {
            2 * (size - 1)
        }
        _ => size,
    }
}

fn diagram_edges(family: ClassicalFamily, n: usize) -> Vec<(usize, usize)> {
    match family {
        ClassicalFamily::D => {
            let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        _ => (1..n).map(|i| (i, i + 1)).collect(),
    }
}

/// Koszul vector of the standard painting from the root system.
pub fn koszul_general(params: &ClassicalParams) -> Result<Vec<i64>, ClassicalError> {
    Ok(standard_painting(params)?.koszul_vector().to_vec())
}

/// Case analysis of the spin criterion for the classical families.
pub fn spin_closed_form(params: &ClassicalParams) -> bool {
    let all_odd = params.blocks.iter().all(|b| b % 2 == 1);
    let all_even = params.blocks.iter().all(|b| b % 2 == 0);
    let same_parity = all_odd || all_even;
    let (n0, r) = (params.n0, params.r);
    match params.family {
        ClassicalFamily::A => {
            if n0 > 0 {
                all_odd
            } else {
                same_parity
            }
        }
        ClassicalFamily::B => match (n0 > 0, r > 0) {
            (true, true) => false,
            (true, false) => all_odd,
            (false, true) => all_even,
            (false, false) => same_parity,
        },
        ClassicalFamily::C => all_odd,
        ClassicalFamily::D => {
            if n0 > 0 || r > 0 {
                all_odd
            } else {
                same_parity
            }
        }
    }
}

/// Every valid parameter set of the family with rank in `1..=max_rank`.
pub fn enumerate_params(family: ClassicalFamily, max_rank: usize) -> Vec<ClassicalParams> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        let budget = match family {
            ClassicalFamily::A => rank + 1,
            _ => rank,
        };
        for n0 in 0..=budget {
            let r_max = if family == ClassicalFamily::A { 0 } else { budget - n0 };
            for r in 0..=r_max {
                for blocks in compositions(budget - n0 - r) {
                    if let Ok(p) = ClassicalParams::new(family, n0, blocks, r) {
                        debug_assert_eq!(p.rank, rank);
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Ordered compositions of `m` into parts of size at least 2.
fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 2..=m {
        for mut rest in compositions(m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
