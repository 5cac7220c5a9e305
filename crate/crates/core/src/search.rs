//! Exhaustive search for operators with entries drawn from a finite grid.
//!
//! Candidates are enumerated in row-major lexicographic order of their
//! entries (with the grid sorted ascending) and results keep that order in
//! both execution modes.

use std::cmp::Ordering;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::nijenhuis::torsion_witness;
use crate::operators::is_rota_baxter;
use crate::scalar::{int, Scalar};
use crate::smatrix::s_bracket;

/// Upper bound on the number of candidates a single search may visit.
pub const MAX_CANDIDATES: u64 = 2_000_000;

/// A finite sorted set of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    values: Vec<Scalar>,
}

impl Grid {
    pub fn new(mut values: Vec<Scalar>) -> Self {
        values.sort();
        values.dedup();
        Grid { values }
    }

    /// All `p/q` in `[lo, hi]` with `q` from `denominators`.
    pub fn range(lo: i64, hi: i64, denominators: &[i64]) -> Result<Self> {
        if lo > hi {
            return Err(Error::pre(format!("empty grid range {lo}..{hi}")));
        }
        if denominators.is_empty() || denominators.iter().any(|&q| q <= 0) {
            return Err(Error::pre("denominators must be positive"));
        }
        let mut values = Vec::new();
        for &q in denominators {
            for p in lo * q..=hi * q {
                values.push(Scalar::new(p.into(), q.into()));
            }
        }
        Ok(Self::new(values))
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Default for Grid {
    /// `{−2, −1, 0, 1, 2}`.
    fn default() -> Self {
        Grid::new((-2..=2).map(int).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise runs
    /// sequentially.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Nijenhuis,
    RotaBaxter(Scalar),
    /// Symmetric matrices only; the grid fills the upper triangle.
    SMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub candidates: u64,
    pub matches: Vec<Matrix>,
}

fn free_entries(n: usize, target: &Target) -> usize {
    match target {
        Target::SMatrix => n * (n + 1) / 2,
        _ => n * n,
    }
}

fn candidate_count(k: usize, slots: usize) -> Option<u64> {
    (k as u64).checked_pow(u32::try_from(slots).ok()?)
}

fn decode(index: u64, n: usize, grid: &[Scalar], target: &Target) -> Matrix {
    let k = grid.len() as u64;
    let slots = free_entries(n, target);
    let mut digits = vec![0usize; slots];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = (rest % k) as usize;
        rest /= k;
    }
    let mut rows = vec![vec![crate::scalar::zero(); n]; n];
    match target {
        Target::SMatrix => {
            let mut pos = 0;
            for i in 0..n {
                for j in i..n {
                    rows[i][j] = grid[digits[pos]].clone();
                    rows[j][i] = grid[digits[pos]].clone();
                    pos += 1;
                }
            }
        }
        _ => {
            for (pos, d) in digits.iter().enumerate() {
                rows[pos / n][pos % n] = grid[*d].clone();
            }
        }
    }
    Matrix::from_rows(rows).expect("square candidate")
}

fn accepts(a: &Algebra, m: &Matrix, target: &Target) -> bool {
    match target {
        Target::Nijenhuis => torsion_witness(a, m).is_none(),
        Target::RotaBaxter(w) => is_rota_baxter(a, m, w).map(|v| v.holds).unwrap_or(false),
        Target::SMatrix => s_bracket(a, m, m).map(|b| b.is_zero()).unwrap_or(false),
    }
}

#[cfg(feature = "parallel")]
fn run_parallel(total: u64, f: impl Fn(u64) -> Option<Matrix> + Sync + Send) -> Vec<Matrix> {
    use rayon::prelude::*;
    (0..total).into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(total: u64, f: impl Fn(u64) -> Option<Matrix> + Sync + Send) -> Vec<Matrix> {
    run_sequential(total, f)
}

fn run_sequential(total: u64, f: impl Fn(u64) -> Option<Matrix>) -> Vec<Matrix> {
    (0..total).filter_map(f).collect()
}

/// All grid matrices meeting `target` on `a`.
///
/// Exceeding [`MAX_CANDIDATES`] is a resource error.
pub fn search(a: &Algebra, target: &Target, grid: &Grid, exec: Execution) -> Result<SearchResult> {
    if grid.is_empty() {
        return Err(Error::pre("grid is empty"));
    }
    let n = a.dim();
    let slots = free_entries(n, target);
    let total = candidate_count(grid.len(), slots)
        .filter(|&t| t <= MAX_CANDIDATES)
        .ok_or_else(|| {
            Error::Resource(format!(
                "{} grid values over {slots} entries exceeds the limit of {MAX_CANDIDATES} candidates",
                grid.len()
            ))
        })?;
    let values = grid.values();
    let test = |i: u64| {
        let m = decode(i, n, values, target);
        accepts(a, &m, target).then_some(m)
    };
    let matches = match exec {
        Execution::Sequential => run_sequential(total, test),
        Execution::Parallel => run_parallel(total, test),
    };
    Ok(SearchResult {
        candidates: total,
        matches,
    })
}

/// Row-major lexicographic comparison of entries.
pub fn compare_entries(x: &Matrix, y: &Matrix) -> Ordering {
    x.entries().cmp(y.entries())
}

/// Every candidate matrix of the grid, in search order.
pub fn enumerate(n: usize, grid: &Grid) -> Result<Vec<Matrix>> {
    let total = candidate_count(grid.len(), n * n)
        .filter(|&t| t <= MAX_CANDIDATES)
        .ok_or_else(|| Error::Resource("grid enumeration too large".into()))?;
    Ok((0..total).map(|i| decode(i, n, grid.values(), &Target::Nijenhuis)).collect())
}
