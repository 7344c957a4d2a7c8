//! Text notation `GROUP(j1,...,ju)` for paintings, listing the white nodes.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::flag::{FlagError, Painting};
use crate::rootsys::{LieType, RootSystem, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecParseError {
    #[error("malformed flag spec `{0}`: expected GROUP(j1,...,ju)")]
    Syntax(String),
    #[error("bad node index `{0}`")]
    BadIndex(String),
    #[error("node {node} listed twice")]
    Duplicate { node: usize },
    #[error("node {node} is out of range 1..={rank}")]
    OutOfRange { node: usize, rank: usize },
    #[error(transparent)]
    Group(#[from] RootSystemError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagSpec {
    pub lie_type: LieType,
    /// White nodes, ascending.
    pub white: Vec<usize>,
}

impl FlagSpec {
    pub fn new(lie_type: LieType, white: &[usize]) -> Result<Self, SpecParseError> {
        let mut sorted = white.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(SpecParseError::Duplicate { node: w[0] });
        }
        let rank = lie_type.rank();
        if let Some(&node) = sorted.iter().find(|&&j| j == 0 || j > rank) {
            return Err(SpecParseError::OutOfRange { node, rank });
        }
        Ok(FlagSpec { lie_type, white: sorted })
    }

    /// Spec whose white nodes are the complement of `black`.
    pub fn from_black(lie_type: LieType, black: &[usize]) -> Result<Self, SpecParseError> {
        let complement = FlagSpec::new(lie_type, black)?;
        let white: Vec<usize> =
            (1..=lie_type.rank()).filter(|j| !complement.white.contains(j)).collect();
        FlagSpec::new(lie_type, &white)
    }

    pub fn painting(&self) -> Result<Painting, FlagError> {
        let rs = Arc::new(RootSystem::new(self.lie_type)?);
        Painting::new(&rs, self.white.iter().copied())
    }

    pub fn painting_in(&self, rs: &Arc<RootSystem>) -> Result<Painting, FlagError> {
        Painting::new(rs, self.white.iter().copied())
    }
}

pub fn parse_flag_spec(text: &str) -> Result<FlagSpec, SpecParseError> {
    text.parse()
}

impl FromStr for FlagSpec {
    type Err = SpecParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = || SpecParseError::Syntax(text.to_string());
        let (group, rest) = compact.split_once('(').ok_or_else(syntax)?;
        let inner = rest.strip_suffix(')').ok_or_else(syntax)?;
        if group.is_empty() || inner.contains(['(', ')']) {
            return Err(syntax());
        }
        let lie_type: LieType = group.parse()?;
        let white = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(SpecParseError::BadIndex(t.to_string()));
                    }
                    t.parse::<usize>().map_err(|_| SpecParseError::BadIndex(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        FlagSpec::new(lie_type, &white)
    }
}

impl fmt::Display for FlagSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let white: Vec<String> = self.white.iter().map(|w| w.to_string()).collect();
        write!(f, "{}({})", self.lie_type, white.join(","))
    }
}

/// Render a weight as `5Λ1 + 6Λ4` (`5L_1 + 6L_4` in ASCII mode).
pub fn render_weight(coords: &[i64], ascii: bool) -> String {
    let symbol = if ascii { "L_" } else { "Λ" };
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match c {
            1 => format!("{symbol}{}", i + 1),
            -1 => format!("-{symbol}{}", i + 1),
            _ => format!("{c}{symbol}{}", i + 1),
        })
        .collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.join(" + ").replace("+ -", "- ")
}

/// Render a vector over simple roots as `6α1 + 10α2` (`6a_1 + 10a_2`).
pub fn render_root_combination(coords: &[i64], ascii: bool) -> String {
    render_weight(coords, ascii).replace('Λ', "α").replace("L_", "a_")
}
