//! Path matrices, non-intersecting path systems and the determinant-one
//! certificate.
//!
//! Sources are column feet `(λ'_j, j)` and sinks are row ends `(i, λ_i)`.
//! A path matrix has one row per sink and one column per source, so its
//! `(r, s)` entry is `D_{rows[r], cols[s]}`. This is the transpose of the
//! source-by-sink convention, which leaves every determinant unchanged.

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::partition::{BoxCoord, Partition};
use crate::patharray::{path_count_array, LatticePath, PathCountArray};
use crate::report::{decimal, Check, VerificationReport};

/// Default cap on states visited by [`enumerate_disjoint_systems`].
pub const DEFAULT_SYSTEM_BUDGET: u64 = 10_000_000;

/// A square choice of sink rows and source columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Selection {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Selection {
    /// Rows and columns must be strictly increasing, of equal nonzero length,
    /// and the box `(max row, max col)` must lie in the diagram. Every other
    /// `(row, col)` pair is then a box as well.
    pub fn new(shape: &Partition, rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidSelection(format!(
                "need equally many rows and columns, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&rows) || !increasing(&cols) {
            return Err(Error::InvalidSelection(
                "rows and columns must be strictly increasing".into(),
            ));
        }
        let corner = BoxCoord::new(rows[rows.len() - 1], cols[cols.len() - 1]);
        if rows[0] == 0 || cols[0] == 0 || !shape.contains(corner) {
            return Err(Error::InvalidSelection(format!(
                "corner box {corner} is outside the diagram"
            )));
        }
        Ok(Selection { rows, cols })
    }

    /// The `order × order` block whose top-left box is `(row, col)`.
    pub fn contiguous(shape: &Partition, row: usize, col: usize, order: usize) -> Result<Self> {
        Selection::new(
            shape,
            (row..row + order).collect(),
            (col..col + order).collect(),
        )
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn corner(&self) -> BoxCoord {
        BoxCoord::new(
            self.rows[self.rows.len() - 1],
            self.cols[self.cols.len() - 1],
        )
    }

    pub fn is_contiguous(&self) -> bool {
        let run = |v: &[usize]| v.windows(2).all(|w| w[1] == w[0] + 1);
        run(&self.rows) && run(&self.cols)
    }
}

impl PathCountArray {
    /// Path matrix of a selection: entry `(r, s)` is `D_{rows[r], cols[s]}`.
    pub fn submatrix(&self, sel: &Selection) -> ExactMatrix {
        let rows = sel
            .rows
            .iter()
            .map(|&i| sel.cols.iter().map(|&j| self.at(i, j).clone()).collect())
            .collect();
        ExactMatrix::from_rows(rows).expect("selection is square")
    }
}

pub fn path_matrix(shape: &Partition, sel: &Selection) -> Result<ExactMatrix> {
    // Re-validate: a selection built for another shape may not fit this one.
    let sel = Selection::new(shape, sel.rows.clone(), sel.cols.clone())?;
    Ok(path_count_array(shape).submatrix(&sel))
}

pub fn determinant(m: &ExactMatrix) -> BigInt {
    m.determinant()
}

/// A tuple of pairwise box-disjoint paths, one per source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointSystem {
    /// `permutation[k]` is the index of the sink reached from source `k`.
    pub permutation: Vec<usize>,
    pub paths: Vec<LatticePath>,
    pub sign: i8,
}

impl DisjointSystem {
    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(k, &t)| k == t)
    }

    pub fn all_hooks(&self) -> bool {
        self.paths.iter().all(LatticePath::is_hook)
    }
}

pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Every vertex-disjoint path system from the feet of `sources` (columns) to
/// the ends of `sinks` (rows), over every permutation.
///
/// Sources are routed left to right; a box already used by an earlier path
/// is never entered again. Systems come out ordered by permutation (sinks
/// tried in index order) and then by north-first path order.
pub fn enumerate_disjoint_systems(
    shape: &Partition,
    sources: &[usize],
    sinks: &[usize],
    budget: u64,
) -> Result<Vec<DisjointSystem>> {
    if sources.len() != sinks.len() {
        return Err(Error::InvalidSelection(format!(
            "{} sources but {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    let feet = sources
        .iter()
        .map(|&j| {
            shape
                .foot(j)
                .ok_or_else(|| Error::InvalidSelection(format!("column {j} has no foot")))
        })
        .collect::<Result<Vec<_>>>()?;
    let ends = sinks
        .iter()
        .map(|&i| {
            shape
                .row_end(i)
                .ok_or_else(|| Error::InvalidSelection(format!("row {i} has no end")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut search = SystemSearch {
        shape,
        feet,
        ends,
        occupied: (1..=shape.num_rows())
            .map(|i| vec![false; shape.row_len(i)])
            .collect(),
        used: vec![false; sinks.len()],
        permutation: Vec::new(),
        paths: Vec::new(),
        current: Vec::new(),
        visited: 0,
        budget,
        found: Vec::new(),
    };
    search.place(0)?;
    Ok(search.found)
}

struct SystemSearch<'a> {
    shape: &'a Partition,
    feet: Vec<BoxCoord>,
    ends: Vec<BoxCoord>,
    occupied: Vec<Vec<bool>>,
    used: Vec<bool>,
    permutation: Vec<usize>,
    paths: Vec<LatticePath>,
    current: Vec<BoxCoord>,
    visited: u64,
    budget: u64,
    found: Vec<DisjointSystem>,
}

impl SystemSearch<'_> {
    fn is_free(&self, b: BoxCoord) -> bool {
        !self.occupied[b.row - 1][b.col - 1]
    }

    fn mark(&mut self, path: &[BoxCoord], value: bool) {
        for b in path {
            self.occupied[b.row - 1][b.col - 1] = value;
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            Err(Error::SystemBudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn place(&mut self, source: usize) -> Result<()> {
        self.tick()?;
        if source == self.feet.len() {
            let permutation = self.permutation.clone();
            let sign = permutation_sign(&permutation);
            self.found.push(DisjointSystem {
                permutation,
                paths: self.paths.clone(),
                sign,
            });
            return Ok(());
        }
        let from = self.feet[source];
        if !self.is_free(from) {
            return Ok(());
        }
        for sink in 0..self.ends.len() {
            if self.used[sink] {
                continue;
            }
            let to = self.ends[sink];
            if to.row > from.row || to.col < from.col || !self.is_free(to) {
                continue;
            }
            self.used[sink] = true;
            self.permutation.push(sink);
            self.current.push(from);
            let res = self.route(source, to);
            self.current.pop();
            self.permutation.pop();
            self.used[sink] = false;
            res?;
        }
        Ok(())
    }

    /// Extends `current` towards `to` through free boxes; each completed path
    /// is committed and the next source placed.
    fn route(&mut self, source: usize, to: BoxCoord) -> Result<()> {
        self.tick()?;
        let here = *self.current.last().expect("route starts at a foot");
        if here == to {
            let path = std::mem::take(&mut self.current);
            self.mark(&path, true);
            self.paths.push(LatticePath::new(self.shape, path.clone())?);
            let res = self.place(source + 1);
            self.paths.pop();
            self.mark(&path, false);
            self.current = path;
            return res;
        }
        for next in [here.north(), Some(here.east())].into_iter().flatten() {
            if next.row < to.row
                || next.col > to.col
                || !self.shape.contains(next)
                || !self.is_free(next)
            {
                continue;
            }
            self.current.push(next);
            let res = self.route(source, to);
            self.current.pop();
            res?;
        }
        Ok(())
    }
}

/// Sum of signs over all disjoint systems.
pub fn signed_count(systems: &[DisjointSystem]) -> BigInt {
    systems.iter().map(|s| BigInt::from(s.sign)).sum()
}

/// True when there is exactly one system, routed by the identity, made of
/// hook paths.
pub fn is_unique_hook_system(systems: &[DisjointSystem]) -> bool {
    matches!(systems, [only] if only.is_identity() && only.all_hooks())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
    /// The enumeration budget ran out before the signed count was known.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LgvReport {
    pub selection: Selection,
    #[serde(serialize_with = "decimal")]
    pub determinant: BigInt,
    #[serde(serialize_with = "decimal_opt")]
    pub signed_count: Option<BigInt>,
    pub systems: Option<usize>,
    pub verdict: Verdict,
}

fn decimal_opt<S: serde::Serializer>(
    value: &Option<BigInt>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => serializer.collect_str(v),
        None => serializer.serialize_none(),
    }
}

/// Compares the determinant of the path matrix with the signed count of
/// disjoint path systems.
pub fn verify_lgv(shape: &Partition, sel: &Selection, budget: u64) -> Result<LgvReport> {
    let determinant = path_matrix(shape, sel)?.determinant();
    let (signed, systems, verdict) =
        match enumerate_disjoint_systems(shape, &sel.cols, &sel.rows, budget) {
            Ok(systems) => {
                let signed = signed_count(&systems);
                let verdict = if signed == determinant {
                    Verdict::Equal
                } else {
                    Verdict::Unequal
                };
                (Some(signed), Some(systems.len()), verdict)
            }
            Err(Error::SystemBudgetExceeded { .. }) => (None, None, Verdict::Inconclusive),
            Err(e) => return Err(e),
        };
    Ok(LgvReport {
        selection: sel.clone(),
        determinant,
        signed_count: signed,
        systems,
        verdict,
    })
}

/// Every contiguous square block whose lower-right entry is 1, ordered by
/// block order, then top row, then left column.
pub fn se_unit_selections(shape: &Partition) -> Vec<Selection> {
    let d = path_count_array(shape);
    unit_selections_of(&d)
}

pub(crate) fn unit_selections_of(d: &PathCountArray) -> Vec<Selection> {
    let shape = d.shape();
    let mut out = Vec::new();
    let max_order = shape.durfee();
    for order in 1..=max_order {
        for b in shape.boxes() {
            if b.row < order || b.col < order || !d.at(b.row, b.col).is_one() {
                continue;
            }
            let sel = Selection::contiguous(shape, b.row + 1 - order, b.col + 1 - order, order)
                .expect("block below a box of the diagram");
            out.push(sel);
        }
    }
    out
}

/// Every contiguous square block of order at most `max_order`, in the same
/// order as [`se_unit_selections`].
pub fn contiguous_selections(shape: &Partition, max_order: usize) -> Vec<Selection> {
    let mut out = Vec::new();
    for order in 1..=max_order.min(shape.durfee()) {
        for b in shape.boxes() {
            if b.row >= order && b.col >= order {
                out.push(
                    Selection::contiguous(shape, b.row + 1 - order, b.col + 1 - order, order)
                        .expect("block below a box of the diagram"),
                );
            }
        }
    }
    out
}

/// Determinant of every contiguous unit-corner block; passes iff all are 1.
pub fn check_determinant_one(shape: &Partition) -> VerificationReport {
    let d = path_count_array(shape);
    determinant_one_report(&d)
}

pub(crate) fn determinant_one_report(d: &PathCountArray) -> VerificationReport {
    let mut report = VerificationReport::new(None, d.shape().clone());
    for sel in unit_selections_of(d) {
        let det = d.submatrix(&sel).determinant();
        let pass = det.is_one();
        report.push(Check::Determinant {
            rows: sel.rows,
            cols: sel.cols,
            det,
            pass,
        });
    }
    report
}

/// A non-contiguous unit-corner block found by the exploratory scanner.
/// These lie outside the certified property whatever their determinant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploratoryFinding {
    pub partition: Partition,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(serialize_with = "decimal")]
    pub det: BigInt,
    pub det_is_one: bool,
    pub certified: bool,
}

fn finding(d: &PathCountArray, sel: &Selection) -> ExploratoryFinding {
    let det = d.submatrix(sel).determinant();
    ExploratoryFinding {
        partition: d.shape().clone(),
        rows: sel.rows.clone(),
        cols: sel.cols.clone(),
        det_is_one: det.is_one(),
        det,
        certified: false,
    }
}

/// Exhaustively scans non-contiguous square selections up to `max_order`
/// with a unit lower-right entry.
pub fn scan_noncontiguous(shape: &Partition, max_order: usize) -> Vec<ExploratoryFinding> {
    let d = path_count_array(shape);
    let mut out = Vec::new();
    for order in 1..=max_order {
        for rows in increasing_subsets(shape.num_rows(), order) {
            let last_row = rows[order - 1];
            for cols in increasing_subsets(shape.row_len(last_row), order) {
                if !d.at(last_row, cols[order - 1]).is_one() {
                    continue;
                }
                let sel = Selection {
                    rows: rows.clone(),
                    cols,
                };
                if !sel.is_contiguous() {
                    out.push(finding(&d, &sel));
                }
            }
        }
    }
    out
}

/// Draws `samples` random square selections (order up to `max_order`) with a
/// unit lower-right entry and keeps the non-contiguous ones. Deterministic
/// for a fixed seed.
pub fn sample_noncontiguous(
    shape: &Partition,
    max_order: usize,
    samples: usize,
    seed: u64,
) -> Vec<ExploratoryFinding> {
    let d = path_count_array(shape);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let top = max_order.min(shape.num_rows()).min(shape.num_cols());
    if top == 0 {
        return out;
    }
    for _ in 0..samples {
        let order = rng.gen_range(1..=top);
        let mut rows = sample(&mut rng, shape.num_rows(), order).into_vec();
        rows.sort_unstable();
        let last_row = rows[order - 1] + 1;
        let width = shape.row_len(last_row);
        if width < order {
            continue;
        }
        let mut cols = sample(&mut rng, width, order).into_vec();
        cols.sort_unstable();
        let sel = Selection {
            rows: rows.into_iter().map(|r| r + 1).collect(),
            cols: cols.into_iter().map(|c| c + 1).collect(),
        };
        if d.entry(sel.corner()).is_ok_and(|v| v.is_one()) && !sel.is_contiguous() {
            out.push(finding(&d, &sel));
        }
    }
    out
}

/// Strictly increasing `k`-subsets of `1..=n` in lexicographic order.
fn increasing_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sel(shape: &Partition, rows: &[usize], cols: &[usize]) -> Selection {
        Selection::new(shape, rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn selection_validation() {
        let shape = p(&[5, 4, 3, 3]);
        assert!(Selection::new(&shape, vec![], vec![]).is_err());
        assert!(Selection::new(&shape, vec![1, 2], vec![1]).is_err());
        assert!(Selection::new(&shape, vec![2, 1], vec![1, 2]).is_err());
        assert!(Selection::new(&shape, vec![1, 4], vec![1, 4]).is_err());
        assert!(Selection::new(&shape, vec![0], vec![1]).is_err());
        assert!(sel(&shape, &[1, 3], &[1, 3]).corner() == BoxCoord::new(3, 3));
        assert!(!sel(&shape, &[1, 3], &[1, 3]).is_contiguous());
        assert!(sel(&shape, &[2, 3], &[1, 2]).is_contiguous());
    }

    #[test]
    fn path_matrix_examples() {
        let shape = p(&[5, 4, 3, 3]);
        assert_eq!(
            path_matrix(&shape, &sel(&shape, &[1, 2, 3], &[1, 2, 3])).unwrap(),
            m(&[&[16, 7, 2], &[6, 3, 1], &[3, 2, 1]])
        );
        assert_eq!(
            path_matrix(&shape, &sel(&shape, &[4], &[1])).unwrap(),
            m(&[&[1]])
        );
        assert_eq!(
            path_matrix(&shape, &sel(&shape, &[1, 2], &[3, 4])).unwrap(),
            m(&[&[2, 1], &[1, 1]])
        );
        let wide = sel(&shape, &[1], &[5]);
        assert!(path_matrix(&p(&[2]), &wide).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&m(&[&[16, 7, 2], &[6, 3, 1], &[3, 2, 1]])),
            BigInt::one()
        );
        assert_eq!(determinant(&m(&[&[1]])), BigInt::one());
        assert_eq!(determinant(&m(&[&[16, 2], &[3, 1]])), BigInt::from(10));
    }

    #[test]
    fn unique_hook_system_for_the_three_by_three() {
        let shape = p(&[5, 4, 3, 3]);
        let systems =
            enumerate_disjoint_systems(&shape, &[1, 2, 3], &[1, 2, 3], DEFAULT_SYSTEM_BUDGET)
                .unwrap();
        assert_eq!(systems.len(), 1);
        let only = &systems[0];
        assert!(only.is_identity());
        assert!(only.all_hooks());
        assert_eq!(only.sign, 1);
        let b = BoxCoord::new;
        assert_eq!(
            only.paths[0].boxes(),
            &[
                b(4, 1),
                b(3, 1),
                b(2, 1),
                b(1, 1),
                b(1, 2),
                b(1, 3),
                b(1, 4),
                b(1, 5)
            ]
        );
        assert_eq!(
            only.paths[1].boxes(),
            &[b(4, 2), b(3, 2), b(2, 2), b(2, 3), b(2, 4)]
        );
        assert_eq!(only.paths[2].boxes(), &[b(4, 3), b(3, 3)]);
        assert!(is_unique_hook_system(&systems));
    }

    #[test]
    fn single_source_system() {
        let shape = p(&[5, 4, 3, 3]);
        let systems =
            enumerate_disjoint_systems(&shape, &[1], &[4], DEFAULT_SYSTEM_BUDGET).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(
            systems[0].paths[0].boxes(),
            &[
                BoxCoord::new(4, 1),
                BoxCoord::new(4, 2),
                BoxCoord::new(4, 3)
            ]
        );
    }

    #[test]
    fn signed_count_matches_non_unit_determinant() {
        let shape = p(&[5, 4, 3, 3]);
        let systems =
            enumerate_disjoint_systems(&shape, &[1, 3], &[1, 3], DEFAULT_SYSTEM_BUDGET).unwrap();
        assert_eq!(signed_count(&systems), BigInt::from(10));
        assert!(!is_unique_hook_system(&systems));
    }

    #[test]
    fn mismatched_sources_and_sinks() {
        let shape = p(&[2, 2]);
        assert!(enumerate_disjoint_systems(&shape, &[1], &[1, 2], 100).is_err());
        assert!(enumerate_disjoint_systems(&shape, &[3], &[1], 100).is_err());
    }

    #[test]
    fn budget_gives_inconclusive() {
        let shape = p(&[5, 4, 3, 3]);
        let s = sel(&shape, &[1, 2, 3], &[1, 2, 3]);
        let report = verify_lgv(&shape, &s, 3).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert_eq!(report.signed_count, None);
    }

    #[test]
    fn verify_lgv_examples() {
        let shape = p(&[5, 4, 3, 3]);
        let r = verify_lgv(
            &shape,
            &sel(&shape, &[1, 2, 3], &[1, 2, 3]),
            DEFAULT_SYSTEM_BUDGET,
        )
        .unwrap();
        assert_eq!(
            (r.determinant.clone(), r.verdict),
            (BigInt::one(), Verdict::Equal)
        );
        let one = p(&[1]);
        let r = verify_lgv(&one, &sel(&one, &[1], &[1]), DEFAULT_SYSTEM_BUDGET).unwrap();
        assert_eq!(r.signed_count, Some(BigInt::one()));
        let r = verify_lgv(
            &shape,
            &sel(&shape, &[1, 3], &[1, 3]),
            DEFAULT_SYSTEM_BUDGET,
        )
        .unwrap();
        assert_eq!(r.determinant, BigInt::from(10));
        assert_eq!(r.signed_count, Some(BigInt::from(10)));
        assert_eq!(r.verdict, Verdict::Equal);
    }

    #[test]
    fn unit_selections() {
        let shape = p(&[5, 4, 3, 3]);
        let all = se_unit_selections(&shape);
        assert!(all.contains(&sel(&shape, &[1, 2, 3], &[1, 2, 3])));
        assert!(all.contains(&sel(&shape, &[2, 3, 4], &[1, 2, 3])));
        assert!(all.iter().all(Selection::is_contiguous));

        let one = p(&[1]);
        assert_eq!(se_unit_selections(&one), vec![sel(&one, &[1], &[1])]);

        let square = p(&[2, 2]);
        assert_eq!(
            se_unit_selections(&square),
            vec![
                sel(&square, &[1], &[2]),
                sel(&square, &[2], &[1]),
                sel(&square, &[2], &[2]),
                sel(&square, &[1, 2], &[1, 2]),
            ]
        );
    }

    #[test]
    fn determinant_one_reports() {
        assert!(check_determinant_one(&p(&[5, 4, 3, 3])).pass);
        let empty = check_determinant_one(&Partition::empty());
        assert!(empty.pass && empty.checks.is_empty());
        let stair = check_determinant_one(&p(&[3, 2, 1]));
        assert!(stair.pass);
        assert!(stair.checks.contains(&Check::Determinant {
            rows: vec![1, 2],
            cols: vec![1, 2],
            det: BigInt::one(),
            pass: true
        }));
    }

    #[test]
    fn report_json_shape() {
        let report = check_determinant_one(&p(&[1]));
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"partition":[1],"checks":[{"rows":[1],"cols":[1],"det":"1","pass":true}],"pass":true}"#
        );
    }

    #[test]
    fn noncontiguous_scan_flags_the_counterexample() {
        let shape = p(&[5, 4, 3, 3]);
        let found = scan_noncontiguous(&shape, 2);
        let hit = found
            .iter()
            .find(|f| f.rows == [1, 3] && f.cols == [1, 3])
            .expect("rows {1,3} x cols {1,3} is scanned");
        assert_eq!(hit.det, BigInt::from(10));
        assert!(!hit.det_is_one && !hit.certified);
        assert!(found.iter().all(|f| !f.certified));
    }

    #[test]
    fn sampling_is_deterministic() {
        let shape = p(&[5, 4, 3, 3]);
        let a = sample_noncontiguous(&shape, 3, 200, 7);
        let b = sample_noncontiguous(&shape, 3, 200, 7);
        assert_eq!(a, b);
        assert!(!a.is_empty());
        let exhaustive = scan_noncontiguous(&shape, 3);
        assert!(a.iter().all(|f| exhaustive.contains(f)));
    }

    #[test]
    fn subsets() {
        assert_eq!(
            increasing_subsets(3, 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(increasing_subsets(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(increasing_subsets(4, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
        assert_eq!(permutation_sign(&[]), 1);
    }
}
