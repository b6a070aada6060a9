//! Partitions and their Young diagrams.
//!
//! A partition is stored as its nonzero parts `λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ`. Row `i`
//! of the diagram holds `λ_i` boxes, and column `j` holds `λ'_j` boxes where
//! `λ'` is the conjugate partition. All public indices are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, `(row, col)` with both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// The box one step north, if the row index stays positive.
    pub fn north(self) -> Option<BoxCoord> {
        (self.row > 1).then(|| BoxCoord::new(self.row - 1, self.col))
    }

    pub fn east(self) -> BoxCoord {
        BoxCoord::new(self.row, self.col + 1)
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` as a weakly decreasing sequence of positive integers.
    ///
    /// The offending index in an error is 1-based.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        for (k, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::NonPositivePart { index: k + 1 });
            }
            if k > 0 && part > parts[k - 1] {
                return Err(Error::NotWeaklyDecreasing { index: k + 1 });
            }
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but for signed input, rejecting negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (k, &part) in parts.iter().enumerate() {
            if part <= 0 {
                return Err(Error::NonPositivePart { index: k + 1 });
            }
            out.push(part as usize);
        }
        Partition::new(out)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Staircase `(m, m-1, …, 1)`.
    pub fn staircase(m: usize) -> Self {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i`, or 0 past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// `λ'_j`, the height of column `j`.
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&part| part >= col).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (1..=self.num_cols()).map(|j| self.col_len(j)).collect(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side of the Durfee square: the largest `n` with `λ_n ≥ n`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(k, &part)| part > k)
            .count()
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.row_len(b.row)
    }

    pub(crate) fn require(&self, b: BoxCoord) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::OutsideDiagram(b))
        }
    }

    /// Lowest box of column `col`, `(λ'_j, j)`.
    pub fn foot(&self, col: usize) -> Option<BoxCoord> {
        let height = self.col_len(col);
        (height > 0).then(|| BoxCoord::new(height, col))
    }

    /// Rightmost box of row `row`, `(i, λ_i)`.
    pub fn row_end(&self, row: usize) -> Option<BoxCoord> {
        let len = self.row_len(row);
        (len > 0).then(|| BoxCoord::new(row, len))
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (1..=len).map(move |col| BoxCoord::new(k + 1, col)))
    }

    /// Removes the first `drop_rows` rows and the first `drop_cols` columns.
    pub fn truncate(&self, drop_rows: usize, drop_cols: usize) -> Result<Partition> {
        if drop_rows > self.num_rows() {
            return Err(Error::TooManyRowsDropped {
                requested: drop_rows,
                available: self.num_rows(),
            });
        }
        let parts = self.parts[drop_rows..]
            .iter()
            .filter(|&&part| part > drop_cols)
            .map(|&part| part - drop_cols)
            .collect();
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated text form, e.g. `"5,4,3,3"`. The empty string
/// (after trimming) is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (k, piece) in s.split(',').enumerate() {
            let piece = piece.trim();
            let value: i64 = piece.parse().map_err(|_| Error::ParsePart {
                index: k + 1,
                text: piece.to_string(),
            })?;
            parts.push(value);
        }
        Partition::from_signed(&parts)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Every partition with at most `max_cells` boxes, ordered by size and then
/// by descending lexicographic order of the parts.
pub fn enumerate_partitions(max_cells: usize) -> Partitions {
    Partitions {
        max_cells,
        size: 0,
        current: Some(Vec::new()),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    max_cells: usize,
    size: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = match next_descending(&parts) {
            Some(next) => Some(next),
            None if self.size < self.max_cells => {
                self.size += 1;
                Some(vec![self.size])
            }
            None => None,
        };
        Some(Partition { parts })
    }
}

/// Successor of `parts` in descending lexicographic order among partitions of
/// the same size.
fn next_descending(parts: &[usize]) -> Option<Vec<usize>> {
    let pivot = parts.iter().rposition(|&part| part > 1)?;
    let mut next = parts[..pivot].to_vec();
    let value = parts[pivot] - 1;
    next.push(value);
    // Everything after the pivot is a run of ones, plus the unit taken away.
    let mut rest = parts.len() - pivot;
    while rest > 0 {
        let piece = rest.min(value);
        next.push(piece);
        rest -= piece;
    }
    Some(next)
}
