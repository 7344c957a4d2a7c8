//! Report types behind the `flagspin` binary.
//!
//! Every JSON report declares its fields in alphabetical order, so emitting
//! a report, re-parsing it (typed or as a generic `Value`) and emitting again
//! gives identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use flagspin::classical::{self, ClassicalError};
use flagspin::cspace::{self, CSpaceError};
use flagspin::fixtures::{RegressionReport, RowOutcome};
use flagspin::notation::{render_root_combination, render_weight};
use flagspin::{ClassicalParams, Painting};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TRootEntry {
    pub multiplicity: usize,
    pub root: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagReport {
    pub b2: usize,
    pub d: usize,
    pub dim: usize,
    pub group: String,
    pub koszul_root: Vec<i64>,
    pub koszul_vector: Vec<i64>,
    pub koszul_weight: Vec<i64>,
    pub spin: bool,
    pub t_roots: Vec<TRootEntry>,
    pub white: Vec<usize>,
}

impl FlagReport {
    pub fn new(p: &Painting) -> Self {
        let form = p.koszul_form();
        FlagReport {
            b2: p.second_betti(),
            d: p.t_root_table().d(),
            dim: p.real_dimension(),
            group: p.root_system().lie_type().to_string(),
            koszul_root: form.root_coords.clone(),
            koszul_vector: form.koszul_vector.clone(),
            koszul_weight: form.weight_coords.0.clone(),
            spin: p.is_spin(),
            t_roots: p
                .t_root_table()
                .entries
                .into_iter()
                .map(|(root, multiplicity)| TRootEntry { multiplicity, root })
                .collect(),
            white: p.white().to_vec(),
        }
    }

    pub fn render(&self, black: &[usize], ascii: bool) -> String {
        let mut s = String::new();
        let white: Vec<String> = self.white.iter().map(|j| j.to_string()).collect();
        let _ = writeln!(s, "flag       {}({})", self.group, white.join(","));
        let _ = writeln!(s, "black      {black:?}");
        let _ = writeln!(s, "b2         {}", self.b2);
        let _ = writeln!(s, "real dim   {}", self.dim);
        let _ = writeln!(s, "koszul     {}", render_weight(&self.koszul_weight, ascii));
        let _ = writeln!(s, "  roots    {}", render_root_combination(&self.koszul_root, ascii));
        let _ = writeln!(s, "  vector   {:?}", self.koszul_vector);
        let _ = writeln!(s, "d          {}", self.d);
        let _ = writeln!(s, "t-roots");
        for t in &self.t_roots {
            let _ = writeln!(s, "  {:?}  x{}", t.root, t.multiplicity);
        }
        let verdict = if self.spin { "yes" } else { "no" };
        let _ = writeln!(s, "spin       {verdict}");
        let _ = write!(s, "metaplectic {verdict}");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub agree: bool,
    pub blocks: Vec<usize>,
    pub closed_form: Vec<i64>,
    pub family: String,
    pub general: Vec<i64>,
    pub group: String,
    pub n0: usize,
    pub r: usize,
    pub spin_closed_form: bool,
    pub spin_parity: bool,
    pub string_count: Vec<i64>,
    pub white: Vec<usize>,
}

impl ClassicalReport {
    pub fn new(params: &ClassicalParams) -> Result<Self, ClassicalError> {
        let painting = classical::standard_painting(params)?;
        let closed_form = classical::koszul_closed_form(params);
        let string_count = classical::koszul_string_count(params);
        let general = painting.koszul_vector().to_vec();
        Ok(ClassicalReport {
            agree: closed_form == general && string_count == general,
            blocks: params.blocks().to_vec(),
            closed_form,
            family: params.family().to_string(),
            general,
            group: params.lie_type().to_string(),
            n0: params.n0(),
            r: params.r(),
            spin_closed_form: classical::spin_closed_form(params),
            spin_parity: painting.is_spin(),
            string_count,
            white: painting.white().to_vec(),
        })
    }

    pub fn render(&self, black: &[usize]) -> String {
        let mut s = String::new();
        let white: Vec<String> = self.white.iter().map(|j| j.to_string()).collect();
        let _ = writeln!(s, "flag          {}({})", self.group, white.join(","));
        let _ = writeln!(s, "black         {black:?}");
        let _ = writeln!(s, "closed form   {:?}", self.closed_form);
        let _ = writeln!(s, "string count  {:?}", self.string_count);
        let _ = writeln!(s, "general       {:?}", self.general);
        let _ = writeln!(s, "              {}", if self.agree { "AGREE" } else { "DISAGREE" });
        let _ = writeln!(s, "spin (table)  {}", self.spin_closed_form);
        let _ = write!(s, "spin (parity) {}", self.spin_parity);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CSpaceReport {
    pub b2: usize,
    pub base: String,
    pub c1_zero: bool,
    pub fiber_dim: usize,
    pub p1: Vec<Vec<i64>>,
    pub spin: bool,
    pub t0: Vec<Vec<i64>>,
}

impl CSpaceReport {
    pub fn new(base: &Painting, rows: &[Vec<i64>]) -> Result<Self, CSpaceError> {
        let cs = cspace::make_cspace(base, rows)?;
        Ok(CSpaceReport {
            b2: cs.second_betti(),
            base: base.to_string(),
            c1_zero: cs.has_trivial_c1()?,
            fiber_dim: cs.fiber_dim(),
            p1: cs.p1().vectors().to_vec(),
            spin: cs.is_spin()?,
            t0: rows.to_vec(),
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "base        {}", self.base);
        let _ = writeln!(s, "t0 rows     {:?}", self.t0);
        let _ = writeln!(s, "fiber       T^{}", self.fiber_dim);
        let _ = writeln!(s, "b2(M)       {}", self.b2);
        let _ = writeln!(s, "P1 basis    {:?}", self.p1);
        let _ = writeln!(s, "spin        {}", self.spin);
        let _ = write!(s, "c1 = 0      {}", self.c1_zero);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub fiber_dim: usize,
    pub pi0: Vec<usize>,
    pub pi1: Vec<usize>,
    pub spin: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub base: String,
    pub constructions: Vec<Construction>,
}

impl ConstructReport {
    pub fn new(base: &Painting) -> Result<Self, CSpaceError> {
        let constructions = cspace::construct_spin_cspaces(base)?
            .into_iter()
            .map(|r| {
                Ok(Construction {
                    fiber_dim: r.fiber_dim,
                    spin: r.cspace.is_spin()?,
                    pi0: r.pi0,
                    pi1: r.pi1,
                })
            })
            .collect::<Result<Vec<_>, CSpaceError>>()?;
        Ok(ConstructReport { base: base.to_string(), constructions })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "base {}: {} constructions", self.base, self.constructions.len());
        for c in &self.constructions {
            let _ = write!(
                s,
                "\n  kill {:?}, keep {:?}  ->  T^{} bundle, spin {}",
                c.pi0, c.pi1, c.fiber_dim, c.spin
            );
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchLine {
    pub computed: serde_json::Value,
    pub expected: serde_json::Value,
    pub field: String,
    pub index: usize,
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinListLine {
    pub added: Vec<Vec<usize>>,
    pub group: String,
    pub ok: bool,
    pub removed: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub ok: bool,
    pub per_group: std::collections::BTreeMap<String, usize>,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegressSummary {
    pub census: Option<CensusLine>,
    pub mismatches: Vec<MismatchLine>,
    pub ok: bool,
    pub rows: usize,
    pub rows_via_discrepancy: Vec<String>,
    pub spin_lists: Vec<SpinListLine>,
}

impl RegressSummary {
    pub fn new(report: &RegressionReport) -> Self {
        let mismatches = report
            .rows
            .iter()
            .flat_map(|r: &RowOutcome| {
                r.mismatches.iter().map(move |m| MismatchLine {
                    computed: m.computed.clone(),
                    expected: m.expected.clone(),
                    field: m.field.to_string(),
                    index: r.index,
                    spec: r.spec.clone(),
                })
            })
            .collect();
        RegressSummary {
            census: report.census.as_ref().map(|c| CensusLine {
                ok: c.ok(),
                per_group: c.per_group.clone(),
                total: c.total,
            }),
            mismatches,
            ok: report.ok(),
            rows: report.rows.len(),
            rows_via_discrepancy: report
                .rows
                .iter()
                .filter(|r| !r.via_discrepancy.is_empty())
                .map(|r| r.spec.clone())
                .collect(),
            spin_lists: report
                .spin_lists
                .iter()
                .map(|s| SpinListLine {
                    added: s.added.clone(),
                    group: s.group.clone(),
                    ok: s.ok(),
                    removed: s.removed.clone(),
                })
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let bad = self.mismatches.iter().map(|m| m.index).collect::<std::collections::BTreeSet<_>>();
        let _ = writeln!(s, "rows        {} checked, {} mismatched", self.rows, bad.len());
        for m in &self.mismatches {
            let _ = writeln!(
                s,
                "  MISMATCH #{} {} {}: expected {}, computed {}",
                m.index, m.spec, m.field, m.expected, m.computed
            );
        }
        if !self.rows_via_discrepancy.is_empty() {
            let _ = writeln!(s, "discrepancy-listed rows: {}", self.rows_via_discrepancy.join(" "));
        }
        for l in &self.spin_lists {
            let _ = writeln!(
                s,
                "spin list {:<3} {}  added {:?} removed {:?}",
                l.group,
                if l.ok { "ok" } else { "MISMATCH" },
                l.added,
                l.removed
            );
        }
        if let Some(c) = &self.census {
            let parts: Vec<String> = c.per_group.iter().map(|(g, n)| format!("{g} {n}")).collect();
            let _ = writeln!(
                s,
                "census      {} fibrations ({}) {}",
                c.total,
                parts.join(", "),
                if c.ok { "ok" } else { "MISMATCH" }
            );
        }
        let _ = write!(s, "{}", if self.ok { "PASS" } else { "FAIL" });
        s
    }
}

/// Parse `--t0` text: rows separated by `;`, entries by `,`. Empty text means
/// no rows.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    compact
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|t| t.parse::<i64>().map_err(|_| format!("bad t0 entry `{t}`")))
                .collect()
        })
        .collect()
}

/// Parse `--blocks 2,3`; empty text means no blocks.
pub fn parse_blocks(text: &str) -> Result<Vec<usize>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    compact
        .split(',')
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad block size `{t}`")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(parse_rows("1,0,0").unwrap(), vec![vec![1, 0, 0]]);
        assert_eq!(parse_rows(" 1, -2 ; 3,4 ").unwrap(), vec![vec![1, -2], vec![3, 4]]);
        assert!(parse_rows("").unwrap().is_empty());
        assert!(parse_rows("1,,2").is_err());
        assert!(parse_rows("1;x").is_err());
    }

    #[test]
    fn blocks() {
        assert_eq!(parse_blocks("2,3").unwrap(), vec![2, 3]);
        assert!(parse_blocks("").unwrap().is_empty());
        assert!(parse_blocks("2,-1").is_err());
    }
}
