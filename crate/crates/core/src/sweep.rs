//! Exhaustive verification sweeps over all partitions up to a size bound.
//!
//! Each property suite runs on every partition from
//! [`enumerate_partitions`]; partitions are processed on a worker pool and
//! results are reassembled in enumeration order, so reports are identical
//! for a fixed configuration.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::closedforms::{
    catalan_sweep, knuth_sweep, reflected_square_identity_check, square_check, staircase_check,
};
use crate::error::Error;
use crate::gram::{cofactor_systems, identities_report};
use crate::lgv::{
    contiguous_selections, determinant_one_report, enumerate_disjoint_systems,
    is_unique_hook_system, sample_noncontiguous, scan_noncontiguous, unit_selections_of,
    verify_lgv, ExploratoryFinding, Verdict, DEFAULT_SYSTEM_BUDGET,
};
use crate::partition::{enumerate_partitions, Partition};
use crate::patharray::{
    count_paths, enumerate_paths, path_count_array, PathCountArray, DEFAULT_PATH_LIMIT,
};
use crate::report::{Check, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Dynamic-programming counts against exhaustive path enumeration.
    ArrayOracle,
    /// Unit-corner blocks, Gram determinants, elimination against expansion.
    Dets,
    /// Determinants against signed disjoint-system counts; hook uniqueness.
    LgvOracle,
    /// Pairing, conjugate pairing, cofactor minors, orthonormality.
    Identities,
    /// Staircase, square, Knuth and Catalan closed forms.
    ClosedForms,
    /// The conjugate shape's array is the transpose.
    Duality,
    /// Dropping a first row or column shifts the array.
    Truncation,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::ArrayOracle,
        Property::Dets,
        Property::LgvOracle,
        Property::Identities,
        Property::ClosedForms,
        Property::Duality,
        Property::Truncation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::ArrayOracle => "array-oracle",
            Property::Dets => "dets",
            Property::LgvOracle => "lgv-oracle",
            Property::Identities => "identities",
            Property::ClosedForms => "closed-forms",
            Property::Duality => "duality",
            Property::Truncation => "truncation",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property {s:?}"))
    }
}

/// Exploratory scan of non-contiguous unit-corner selections. Findings are
/// reported but never count as violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploreConfig {
    pub max_order: usize,
    /// `Some((samples, seed))` samples per partition instead of scanning
    /// exhaustively.
    pub sampling: Option<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_cells: usize,
    pub properties: BTreeSet<Property>,
    pub path_budget: usize,
    pub system_budget: u64,
    /// Largest block order checked by the LGV oracle.
    pub lgv_max_order: usize,
    #[serde(skip)]
    pub workers: Option<usize>,
    pub explore: Option<ExploreConfig>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_cells: 10,
            properties: Property::ALL.into_iter().collect(),
            path_budget: DEFAULT_PATH_LIMIT,
            system_budget: DEFAULT_SYSTEM_BUDGET,
            lgv_max_order: 3,
            workers: None,
            explore: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.properties.is_empty() {
            return Err("no properties selected".into());
        }
        if self.path_budget == 0 || self.system_budget == 0 {
            return Err("budgets must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: Option<Property>,
    pub checks: u64,
    pub failures: Vec<String>,
    pub inconclusive: Vec<String>,
}

impl PropertyResult {
    fn merge(&mut self, other: PropertyResult) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.inconclusive.extend(other.inconclusive);
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn absorb_report(&mut self, label: &str, report: &VerificationReport) {
        self.checks += report.checks.len() as u64;
        for failed in report.failures() {
            self.failures
                .push(format!("{label}: {}", describe_check(failed)));
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn describe_check(check: &Check) -> String {
    match check {
        Check::Determinant {
            rows, cols, det, ..
        } => {
            format!("rows {rows:?} cols {cols:?} det {det}")
        }
        Check::Identity(inst) => {
            let params: Vec<String> = inst
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{} [{}] lhs {} rhs {}",
                inst.name,
                params.join(","),
                inst.lhs,
                inst.rhs
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub partitions: usize,
    pub results: Vec<PropertyResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exploratory: Vec<ExploratoryFinding>,
    pub pass: bool,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.results.iter().map(|r| r.failures.len()).sum()
    }

    pub fn inconclusive(&self) -> usize {
        self.results.iter().map(|r| r.inconclusive.len()).sum()
    }
}

/// Runs the configured sweep, on a dedicated pool when `workers` is set.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, String> {
    config.validate()?;
    match config.workers {
        Some(workers) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| e.to_string())?;
            Ok(pool.install(|| sweep(config)))
        }
        None => Ok(sweep(config)),
    }
}

fn sweep(config: &SweepConfig) -> SweepReport {
    let partitions: Vec<Partition> = enumerate_partitions(config.max_cells).collect();
    let per_partition: Vec<Vec<PropertyResult>> = partitions
        .par_iter()
        .map(|shape| {
            let d = path_count_array(shape);
            config
                .properties
                .iter()
                .map(|&prop| run_property(prop, &d, config))
                .collect()
        })
        .collect();

    let mut results: Vec<PropertyResult> = config
        .properties
        .iter()
        .map(|&p| PropertyResult {
            property: Some(p),
            ..Default::default()
        })
        .collect();
    for row in per_partition {
        for (acc, r) in results.iter_mut().zip(row) {
            acc.merge(r);
        }
    }
    if let Some(acc) = results
        .iter_mut()
        .find(|r| r.property == Some(Property::ClosedForms))
    {
        acc.merge(closed_forms());
    }

    let exploratory = match &config.explore {
        Some(explore) => partitions
            .par_iter()
            .map(|shape| match explore.sampling {
                Some((samples, seed)) => {
                    sample_noncontiguous(shape, explore.max_order, samples, seed)
                }
                None => scan_noncontiguous(shape, explore.max_order),
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect(),
        None => Vec::new(),
    };

    let pass = results.iter().all(PropertyResult::pass);
    SweepReport {
        config: config.clone(),
        partitions: partitions.len(),
        results,
        exploratory,
        pass,
    }
}

fn run_property(prop: Property, d: &PathCountArray, config: &SweepConfig) -> PropertyResult {
    let shape = d.shape();
    let mut out = PropertyResult::default();
    match prop {
        Property::ArrayOracle => array_oracle(d, config.path_budget, &mut out),
        Property::Dets => {
            out.absorb_report(&format!("[{shape}]"), &determinant_one_report(d));
            for sel in contiguous_selections(shape, shape.durfee()) {
                let m = d.submatrix(&sel);
                if m.order() <= 4 {
                    out.check(m.determinant() == m.determinant_by_expansion(), || {
                        format!("[{shape}] elimination disagrees with expansion on {sel:?}")
                    });
                }
            }
        }
        Property::LgvOracle => lgv_oracle(d, config, &mut out),
        Property::Identities => {
            out.absorb_report(&format!("[{shape}]"), &identities_report(d));
        }
        // Shape independent; handled once per sweep.
        Property::ClosedForms => {}
        Property::Duality => {
            let conj = path_count_array(&shape.conjugate());
            out.check(conj == d.transpose(), || {
                format!("[{shape}] conjugate array is not the transpose")
            });
        }
        Property::Truncation => truncation(d, &mut out),
    }
    out
}

fn array_oracle(d: &PathCountArray, limit: usize, out: &mut PropertyResult) {
    let shape = d.shape();
    let boxes: Vec<_> = shape.boxes().collect();
    for &from in &boxes {
        for &to in &boxes {
            let dp = count_paths(shape, from, to).expect("boxes of the shape");
            match enumerate_paths(shape, from, to, limit) {
                Ok(paths) => out.check(dp == paths.len().into(), || {
                    format!("[{shape}] {from}->{to}: dp {dp} vs {} paths", paths.len())
                }),
                Err(Error::PathLimitExceeded { .. }) => out
                    .inconclusive
                    .push(format!("[{shape}] {from}->{to}: path limit exceeded")),
                Err(e) => out.failures.push(format!("[{shape}] {from}->{to}: {e}")),
            }
        }
    }
    for b in &boxes {
        let foot = shape.foot(b.col).expect("column of a box");
        let end = shape.row_end(b.row).expect("row of a box");
        let direct = count_paths(shape, foot, end).expect("boxes of the shape");
        out.check(&direct == d.at(b.row, b.col), || {
            format!(
                "[{shape}] D{b} = {} but direct count is {direct}",
                d.at(b.row, b.col)
            )
        });
    }
}

fn lgv_oracle(d: &PathCountArray, config: &SweepConfig, out: &mut PropertyResult) {
    let shape = d.shape();
    let budget = config.system_budget;
    for sel in contiguous_selections(shape, config.lgv_max_order) {
        match verify_lgv(shape, &sel, budget) {
            Ok(report) => match report.verdict {
                Verdict::Equal => out.check(true, String::new),
                Verdict::Unequal => out.check(false, || {
                    format!(
                        "[{shape}] {sel:?}: det {} vs signed count {:?}",
                        report.determinant, report.signed_count
                    )
                }),
                Verdict::Inconclusive => out
                    .inconclusive
                    .push(format!("[{shape}] {sel:?}: system budget exhausted")),
            },
            Err(e) => out.failures.push(format!("[{shape}] {sel:?}: {e}")),
        }
    }
    for sel in unit_selections_of(d) {
        match enumerate_disjoint_systems(shape, sel.cols(), sel.rows(), budget) {
            Ok(systems) => out.check(is_unique_hook_system(&systems), || {
                format!(
                    "[{shape}] {sel:?}: not a unique hook system ({} systems)",
                    systems.len()
                )
            }),
            Err(Error::SystemBudgetExceeded { .. }) => out
                .inconclusive
                .push(format!("[{shape}] {sel:?}: system budget exhausted")),
            Err(e) => out.failures.push(format!("[{shape}] {sel:?}: {e}")),
        }
    }
    let n = shape.durfee();
    for j in 1..=n {
        for i in j..=n {
            let expected = crate::gram::basis_coefficient(shape, i, j).expect("indices in range");
            match cofactor_systems(shape, i, j, budget) {
                Ok((identity_only, count)) => {
                    out.check(identity_only && expected == count.into(), || {
                        format!(
                            "[{shape}] cofactor ({i},{j}): {count} systems, identity only {identity_only}, expected {expected}"
                        )
                    })
                }
                Err(Error::SystemBudgetExceeded { .. }) => out
                    .inconclusive
                    .push(format!("[{shape}] cofactor ({i},{j}): system budget exhausted")),
                Err(e) => out.failures.push(format!("[{shape}] cofactor ({i},{j}): {e}")),
            }
        }
    }
}

fn truncation(d: &PathCountArray, out: &mut PropertyResult) {
    let shape = d.shape();
    if shape.num_rows() >= 1 {
        let cut = path_count_array(&shape.truncate(1, 0).expect("has a row"));
        let ok = cut
            .shape()
            .boxes()
            .all(|b| cut.at(b.row, b.col) == d.at(b.row + 1, b.col));
        out.check(ok, || {
            format!("[{shape}] first-row truncation shifts incorrectly")
        });
    }
    let cut = path_count_array(&shape.truncate(0, 1).expect("no rows dropped"));
    let ok = cut
        .shape()
        .boxes()
        .all(|b| cut.at(b.row, b.col) == d.at(b.row, b.col + 1));
    out.check(ok, || {
        format!("[{shape}] first-column truncation shifts incorrectly")
    });

    for rows in 0..=shape.num_rows() {
        for cols in 0..=shape.num_cols() {
            let once = shape.truncate(rows, cols).expect("rows in range");
            let twice = shape
                .truncate(rows, 0)
                .and_then(|q| q.truncate(0, cols))
                .expect("rows in range");
            out.check(once == twice, || {
                format!("[{shape}] truncate({rows},{cols}) is not a composition")
            });
        }
    }
    out.check(d.is_monotone() || d.shape().is_empty(), || {
        format!("[{shape}] array is not monotone along rows and columns")
    });
}

fn closed_forms() -> PropertyResult {
    let mut out = PropertyResult::default();
    for n in 0..=3 {
        out.absorb_report(&format!("staircase n={n}"), &staircase_check(n));
    }
    for n in 1..=6 {
        out.absorb_report(&format!("square n={n}"), &square_check(n));
    }
    let mut reflected = VerificationReport::new(Some("reflected-square"), Partition::empty());
    for i in 0..=8 {
        for j in 0..=8 {
            reflected.push_identity(reflected_square_identity_check(i, j));
        }
    }
    out.absorb_report("reflected-square", &reflected);
    out.absorb_report("knuth", &knuth_sweep(8));
    out.absorb_report("catalan", &catalan_sweep(30));
    out
}
