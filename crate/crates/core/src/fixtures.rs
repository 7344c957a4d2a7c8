//! Transcribed tables as JSON fixtures, and the regression that recomputes
//! every row.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::classical::{self, ClassicalFamily, ClassicalParams};
use crate::cspace;
use crate::flag::Painting;
use crate::notation::FlagSpec;
use crate::rootsys::{LieType, RootSystem};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read fixture: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse fixture: {0}")]
    Json(#[from] serde_json::Error),
    #[error("fixture row {index} ({spec}): {reason}")]
    Row { index: usize, spec: String, reason: String },
    #[error("invalid fixture: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsFixture {
    pub n0: usize,
    pub blocks: Vec<usize>,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub group: String,
    pub rank: usize,
    pub white: Vec<usize>,
    pub b2: usize,
    pub d: usize,
    /// Coefficients of the Koszul form on the black nodes.
    pub koszul: BTreeMap<usize, i64>,
    pub spin: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsFixture>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FixtureRow {
    pub fn flag_spec(&self) -> Result<FlagSpec, String> {
        let lie_type: LieType = self.group.parse().map_err(|e| format!("{e}"))?;
        if lie_type.rank() != self.rank {
            return Err(format!("group {} has rank {}, row says {}", lie_type, lie_type.rank(), self.rank));
        }
        FlagSpec::new(lie_type, &self.white).map_err(|e| e.to_string())
    }

    pub fn spec_string(&self) -> String {
        let white: Vec<String> = self.white.iter().map(|w| w.to_string()).collect();
        format!("{}({})", self.group, white.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    B2,
    D,
    Koszul,
    Spin,
    ClosedForm,
    StringCount,
    SpinClosedForm,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Field::B2 => "b2",
            Field::D => "d",
            Field::Koszul => "koszul",
            Field::Spin => "spin",
            Field::ClosedForm => "closed_form",
            Field::StringCount => "string_count",
            Field::SpinClosedForm => "spin_closed_form",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub spec: String,
    pub field: Field,
    pub paper_value: Value,
    pub oracle_value: Value,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinLists {
    /// White sets classified as spin, per exceptional group.
    pub theorem: BTreeMap<String, Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFixture {
    pub per_group: BTreeMap<String, usize>,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FixtureDoc {
    #[serde(default)]
    pub rows: Vec<FixtureRow>,
    #[serde(default)]
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin_lists: Option<SpinLists>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusFixture>,
}

impl FixtureDoc {
    pub fn load(path: impl AsRef<Path>) -> Result<Self, FixtureError> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn discrepancy(&self, spec: &str, field: Field) -> Option<&Discrepancy> {
        self.discrepancies.iter().find(|d| d.spec == spec && d.field == field)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldMismatch {
    pub field: Field,
    pub expected: Value,
    pub computed: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RowOutcome {
    pub index: usize,
    pub spec: String,
    pub b2: usize,
    pub d: usize,
    pub koszul: BTreeMap<usize, i64>,
    pub spin: bool,
    /// Fields whose expected value came from the discrepancy list.
    pub via_discrepancy: Vec<Field>,
    pub mismatches: Vec<FieldMismatch>,
}

impl RowOutcome {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinListOutcome {
    pub group: String,
    /// Computed spin but absent from the classification.
    pub added: Vec<Vec<usize>>,
    /// Listed in the classification but computed non-spin.
    pub removed: Vec<Vec<usize>>,
    pub expected_added: Vec<Vec<usize>>,
    pub expected_removed: Vec<Vec<usize>>,
}

impl SpinListOutcome {
    pub fn ok(&self) -> bool {
        self.added == self.expected_added && self.removed == self.expected_removed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOutcome {
    pub per_group: BTreeMap<String, usize>,
    pub total: usize,
    pub expected: CensusFixture,
}

impl CensusOutcome {
    pub fn ok(&self) -> bool {
        self.per_group == self.expected.per_group && self.total == self.expected.total
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionReport {
    pub rows: Vec<RowOutcome>,
    pub spin_lists: Vec<SpinListOutcome>,
    pub census: Option<CensusOutcome>,
}

impl RegressionReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(RowOutcome::ok)
            && self.spin_lists.iter().all(SpinListOutcome::ok)
            && self.census.as_ref().is_none_or(CensusOutcome::ok)
    }

    pub fn mismatch_count(&self) -> usize {
        self.rows.iter().filter(|r| !r.ok()).count()
            + self.spin_lists.iter().filter(|s| !s.ok()).count()
            + usize::from(self.census.as_ref().is_some_and(|c| !c.ok()))
    }
}

/// Root systems shared across the rows of one regression run.
#[derive(Default)]
struct Cache {
    systems: HashMap<LieType, Arc<RootSystem>>,
}

impl Cache {
    fn get(&mut self, lt: LieType) -> Arc<RootSystem> {
        Arc::clone(
            self.systems
                .entry(lt)
                .or_insert_with(|| Arc::new(RootSystem::new(lt).expect("supported type"))),
        )
    }
}

pub fn run_regression(doc: &FixtureDoc) -> Result<RegressionReport, FixtureError> {
    let mut cache = Cache::default();
    let mut rows = Vec::with_capacity(doc.rows.len());
    let mut paintings: Vec<Painting> = Vec::with_capacity(doc.rows.len());
    let known: BTreeSet<String> = doc.rows.iter().map(FixtureRow::spec_string).collect();
    if let Some(d) = doc.discrepancies.iter().find(|d| !known.contains(&d.spec)) {
        return Err(FixtureError::Invalid(format!("discrepancy for unknown row {}", d.spec)));
    }
    for (index, row) in doc.rows.iter().enumerate() {
        let spec = row.spec_string();
        let row_err = |reason: String| FixtureError::Row { index, spec: spec.clone(), reason };
        let fs = row.flag_spec().map_err(row_err)?;
        let painting = fs
            .painting_in(&cache.get(fs.lie_type))
            .map_err(|e| row_err(e.to_string()))?;
        rows.push(check_row(doc, index, row, &painting)?);
        paintings.push(painting);
    }
    let spin_lists = match &doc.spin_lists {
        Some(lists) => check_spin_lists(doc, lists, &paintings)?,
        None => Vec::new(),
    };
    let census = match &doc.census {
        Some(expected) => Some(check_census(expected, &paintings)?),
        None => None,
    };
    Ok(RegressionReport { rows, spin_lists, census })
}

fn check_row(
    doc: &FixtureDoc,
    index: usize,
    row: &FixtureRow,
    painting: &Painting,
) -> Result<RowOutcome, FixtureError> {
    let spec = row.spec_string();
    let koszul: BTreeMap<usize, i64> = painting
        .black()
        .iter()
        .copied()
        .zip(painting.koszul_vector().iter().copied())
        .collect();
    let b2 = painting.second_betti();
    let d = painting.t_root_table().d();
    let spin = painting.is_spin();
    let mut out = RowOutcome {
        index,
        spec: spec.clone(),
        b2,
        d,
        koszul: koszul.clone(),
        spin,
        via_discrepancy: Vec::new(),
        mismatches: Vec::new(),
    };
    let mut compare = |field: Field, paper: Value, computed: Value| -> Result<(), FixtureError> {
        let expected = match doc.discrepancy(&spec, field) {
            Some(disc) => {
                if disc.paper_value != paper {
                    return Err(FixtureError::Row {
                        index,
                        spec: spec.clone(),
                        reason: format!("discrepancy on {field} quotes {} but the row has {}", disc.paper_value, paper),
                    });
                }
                out.via_discrepancy.push(field);
                disc.oracle_value.clone()
            }
            None => paper,
        };
        if expected != computed {
            out.mismatches.push(FieldMismatch { field, expected, computed });
        }
        Ok(())
    };
    compare(Field::B2, Value::from(row.b2), Value::from(b2))?;
    compare(Field::D, Value::from(row.d), Value::from(d))?;
    compare(Field::Koszul, koszul_value(&row.koszul), koszul_value(&koszul))?;
    compare(Field::Spin, Value::from(row.spin), Value::from(spin))?;
    if let Some(pf) = &row.params {
        let family: ClassicalFamily = row.group[..1].parse().map_err(|e: classical::ClassicalError| {
            FixtureError::Row { index, spec: spec.clone(), reason: e.to_string() }
        })?;
        let params = ClassicalParams::new(family, pf.n0, pf.blocks.clone(), pf.r).map_err(|e| {
            FixtureError::Row { index, spec: spec.clone(), reason: e.to_string() }
        })?;
        if params.black_nodes() != painting.black() {
            return Err(FixtureError::Row {
                index,
                spec: spec.clone(),
                reason: format!("parameters {params} do not describe this painting"),
            });
        }
        let general = Value::from(painting.koszul_vector().to_vec());
        compare(Field::ClosedForm, general.clone(), Value::from(classical::koszul_closed_form(&params)))?;
        compare(Field::StringCount, general, Value::from(classical::koszul_string_count(&params)))?;
        compare(
            Field::SpinClosedForm,
            Value::from(spin),
            Value::from(classical::spin_closed_form(&params)),
        )?;
    }
    Ok(out)
}

fn koszul_value(map: &BTreeMap<usize, i64>) -> Value {
    serde_json::to_value(map).expect("map of integers serializes")
}

fn check_spin_lists(
    doc: &FixtureDoc,
    lists: &SpinLists,
    paintings: &[Painting],
) -> Result<Vec<SpinListOutcome>, FixtureError> {
    let mut out = Vec::new();
    for (group, listed) in &lists.theorem {
        let lt: LieType = group
            .parse()
            .map_err(|e| FixtureError::Invalid(format!("spin list group {group}: {e}")))?;
        let of_group: Vec<&Painting> =
            paintings.iter().filter(|p| p.root_system().lie_type() == lt).collect();
        let rs = match of_group.first() {
            Some(p) => Arc::clone(p.root_system()),
            None => return Err(FixtureError::Invalid(format!("no rows for spin list group {group}"))),
        };
        let computed: BTreeSet<Vec<usize>> =
            of_group.iter().filter(|p| p.is_spin()).map(|p| p.canonical_white()).collect();
        let mut theorem = BTreeSet::new();
        for white in listed {
            let p = Painting::new(&rs, white.iter().copied())
                .map_err(|e| FixtureError::Invalid(format!("spin list entry {white:?}: {e}")))?;
            theorem.insert(p.canonical_white());
        }
        let mut expected_added = Vec::new();
        let mut expected_removed = Vec::new();
        for disc in doc.discrepancies.iter().filter(|d| d.field == Field::Spin) {
            let fs: FlagSpec = disc
                .spec
                .parse()
                .map_err(|e| FixtureError::Invalid(format!("discrepancy spec {}: {e}", disc.spec)))?;
            if fs.lie_type != lt {
                continue;
            }
            let white = Painting::new(&rs, fs.white.iter().copied())
                .map_err(|e| FixtureError::Invalid(e.to_string()))?
                .canonical_white();
            match (disc.paper_value.as_bool(), disc.oracle_value.as_bool()) {
                (Some(false), Some(true)) => expected_added.push(white),
                (Some(true), Some(false)) => expected_removed.push(white),
                _ => {
                    return Err(FixtureError::Invalid(format!(
                        "spin discrepancy for {} must flip a boolean",
                        disc.spec
                    )))
                }
            }
        }
        expected_added.sort();
        expected_removed.sort();
        out.push(SpinListOutcome {
            group: group.clone(),
            added: computed.difference(&theorem).cloned().collect(),
            removed: theorem.difference(&computed).cloned().collect(),
            expected_added,
            expected_removed,
        });
    }
    Ok(out)
}

fn check_census(expected: &CensusFixture, paintings: &[Painting]) -> Result<CensusOutcome, FixtureError> {
    let mut per_group = BTreeMap::new();
    for group in expected.per_group.keys() {
        let lt: LieType = group
            .parse()
            .map_err(|e| FixtureError::Invalid(format!("census group {group}: {e}")))?;
        let spin: Vec<Painting> = paintings
            .iter()
            .filter(|p| p.root_system().lie_type() == lt && p.is_spin())
            .cloned()
            .collect();
        let fibrations = cspace::enumerate_spin_fibrations(lt, &spin)
            .map_err(|e| FixtureError::Invalid(e.to_string()))?;
        per_group.insert(group.clone(), fibrations.len());
    }
    let total = per_group.values().sum();
    Ok(CensusOutcome { per_group, total, expected: expected.clone() })
}
