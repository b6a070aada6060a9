//! Monotone lattice paths inside a Young diagram and the path-count array.
//!
//! A path moves box to box using north steps (row − 1) and east steps
//! (col + 1) and never leaves the diagram. `D_{i,j}` is the number of such
//! paths from the foot of column `j` to the end of row `i`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{BoxCoord, Partition};

/// Default cap for [`enumerate_paths`].
pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticePath {
    boxes: Vec<BoxCoord>,
}

impl LatticePath {
    /// Checks step shape and diagram membership.
    pub fn new(shape: &Partition, boxes: Vec<BoxCoord>) -> Result<Self> {
        if boxes.is_empty() {
            return Err(Error::InvalidSelection(
                "a path needs at least one box".into(),
            ));
        }
        for &b in &boxes {
            shape.require(b)?;
        }
        for pair in boxes.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.north() != Some(b) && a.east() != b {
                return Err(Error::InvalidSelection(format!(
                    "step {a} -> {b} is neither north nor east"
                )));
            }
        }
        Ok(LatticePath { boxes })
    }

    pub fn boxes(&self) -> &[BoxCoord] {
        &self.boxes
    }

    pub fn start(&self) -> BoxCoord {
        self.boxes[0]
    }

    pub fn end(&self) -> BoxCoord {
        self.boxes[self.boxes.len() - 1]
    }

    /// True when every north step precedes every east step.
    pub fn is_hook(&self) -> bool {
        let mut seen_east = false;
        for pair in self.boxes.windows(2) {
            if pair[1].row == pair[0].row {
                seen_east = true;
            } else if seen_east {
                return false;
            }
        }
        true
    }
}

/// Number of monotone paths from `from` to `to` inside the diagram.
pub fn count_paths(shape: &Partition, from: BoxCoord, to: BoxCoord) -> Result<BigInt> {
    shape.require(from)?;
    shape.require(to)?;
    if to.row > from.row || to.col < from.col {
        return Ok(BigInt::zero());
    }
    // ways[r][c] over the bounding rectangle, rows from.row down to to.row.
    let width = to.col - from.col + 1;
    let mut below: Vec<BigInt> = vec![BigInt::zero(); width];
    for row in (to.row..=from.row).rev() {
        let mut current: Vec<BigInt> = vec![BigInt::zero(); width];
        for offset in 0..width {
            let col = from.col + offset;
            if !shape.contains(BoxCoord::new(row, col)) {
                continue;
            }
            if row == from.row && col == from.col {
                current[offset] = BigInt::one();
                continue;
            }
            let mut ways = below[offset].clone();
            if offset > 0 {
                ways += &current[offset - 1];
            }
            current[offset] = ways;
        }
        below = current;
    }
    Ok(below[width - 1].clone())
}

/// All monotone paths from `from` to `to`, north steps tried before east
/// steps. Fails with [`Error::PathLimitExceeded`] once more than `limit`
/// paths exist.
pub fn enumerate_paths(
    shape: &Partition,
    from: BoxCoord,
    to: BoxCoord,
    limit: usize,
) -> Result<Vec<LatticePath>> {
    shape.require(from)?;
    shape.require(to)?;
    let mut out = Vec::new();
    let mut stack = vec![from];
    walk(shape, to, &mut stack, &mut out, limit)?;
    Ok(out)
}

fn walk(
    shape: &Partition,
    to: BoxCoord,
    stack: &mut Vec<BoxCoord>,
    out: &mut Vec<LatticePath>,
    limit: usize,
) -> Result<()> {
    let here = *stack.last().expect("path stack is never empty");
    if here == to {
        if out.len() == limit {
            return Err(Error::PathLimitExceeded { limit });
        }
        out.push(LatticePath {
            boxes: stack.clone(),
        });
        return Ok(());
    }
    let steps = [here.north(), Some(here.east())];
    for next in steps.into_iter().flatten() {
        if next.row < to.row || next.col > to.col || !shape.contains(next) {
            continue;
        }
        stack.push(next);
        let res = walk(shape, to, stack, out, limit);
        stack.pop();
        res?;
    }
    Ok(())
}

/// The ragged array `D` over the boxes of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountArray {
    shape: Partition,
    rows: Vec<Vec<BigInt>>,
}

impl PathCountArray {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `D_{i,j}` for a box of the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<&BigInt> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?)
    }

    /// `D_{i,j}`; panics outside the shape.
    pub fn at(&self, row: usize, col: usize) -> &BigInt {
        self.get(row, col)
            .unwrap_or_else(|| panic!("box ({row},{col}) is outside the diagram"))
    }

    pub fn entry(&self, b: BoxCoord) -> Result<&BigInt> {
        self.get(b.row, b.col).ok_or(Error::OutsideDiagram(b))
    }

    /// Array of the conjugate shape obtained by transposing this one.
    pub fn transpose(&self) -> PathCountArray {
        let shape = self.shape.conjugate();
        let rows = (1..=shape.num_rows())
            .map(|i| {
                (1..=shape.row_len(i))
                    .map(|j| self.at(j, i).clone())
                    .collect()
            })
            .collect();
        PathCountArray { shape, rows }
    }

    /// Entries weakly decrease along every row and down every column.
    pub fn is_monotone(&self) -> bool {
        self.shape.boxes().all(|b| {
            let here = self.at(b.row, b.col);
            let right = self.get(b.row, b.col + 1).is_none_or(|v| v <= here);
            let down = self.get(b.row + 1, b.col).is_none_or(|v| v <= here);
            right && down
        })
    }

    /// Right-aligned text table, one line per row.
    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PathCountArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `{"shape": [..], "rows": [["16","7",..],..]}` with decimal strings.
impl Serialize for PathCountArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(BigInt::to_string).collect())
            .collect();
        let mut st = serializer.serialize_struct("PathCountArray", 2)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

// Below this many rows the pool overhead outweighs the work.
const PARALLEL_ROWS: usize = 64;

/// Builds `D` with one backward pass per row end.
///
/// For a target `(i, λ_i)` the pass fills `f(box) = f(north) + f(east)` over
/// rows `i..` with `f(target) = 1`; then `D_{i,j} = f(foot of column j)`.
pub fn path_count_array(shape: &Partition) -> PathCountArray {
    let rows = if shape.num_rows() >= PARALLEL_ROWS {
        (1..=shape.num_rows())
            .into_par_iter()
            .map(|i| row_of_counts(shape, i))
            .collect()
    } else {
        (1..=shape.num_rows())
            .map(|i| row_of_counts(shape, i))
            .collect()
    };
    PathCountArray {
        shape: shape.clone(),
        rows,
    }
}

fn row_of_counts(shape: &Partition, target_row: usize) -> Vec<BigInt> {
    let target_len = shape.row_len(target_row);
    let mut above: Vec<BigInt> = Vec::new();
    let mut feet = vec![BigInt::zero(); target_len];
    for row in target_row..=shape.num_rows() {
        let len = shape.row_len(row);
        let mut current = vec![BigInt::zero(); len];
        for col in (1..=len).rev() {
            let value = if row == target_row {
                if col == target_len {
                    BigInt::one()
                } else {
                    current[col].clone()
                }
            } else {
                let mut v = above[col - 1].clone();
                if col < len {
                    v += &current[col];
                }
                v
            };
            if shape.col_len(col) == row {
                feet[col - 1] = value.clone();
            }
            current[col - 1] = value;
        }
        above = current;
    }
    feet
}
