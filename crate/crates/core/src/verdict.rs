//! Witness-carrying results for structural predicates.

use std::fmt;

use crate::linalg::Vector;
use crate::scalar::format_vector;

/// The first place where an identity fails.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Which identity failed.
    pub condition: String,
    /// Basis indices (0-based) at which it fails.
    pub at: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Witness {
    pub fn new(condition: impl Into<String>, at: Vec<usize>, lhs: Vector, rhs: Vector) -> Self {
        Witness {
            condition: condition.into(),
            at,
            lhs,
            rhs,
        }
    }

    /// A witness for a condition that is not an identity over basis tuples.
    pub fn note(condition: impl Into<String>) -> Self {
        Self::new(condition, Vec::new(), Vec::new(), Vec::new())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.condition)?;
        if !self.at.is_empty() {
            let at: Vec<String> = self.at.iter().map(|i| format!("e{}", i + 1)).collect();
            write!(f, " fails at ({})", at.join(","))?;
        }
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            write!(
                f,
                ": lhs {} vs rhs {}",
                format_vector(&self.lhs),
                format_vector(&self.rhs)
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    pub fn from_bool(holds: bool, condition: &str) -> Self {
        if holds {
            Self::pass()
        } else {
            Self::fail(Witness::note(condition))
        }
    }

    /// Evaluates `next` only if `self` holds.
    pub fn and_then<E>(self, next: impl FnOnce() -> Result<Verdict, E>) -> Result<Verdict, E> {
        if self.holds {
            next()
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.holds, &self.witness) {
            (true, _) => write!(f, "holds"),
            (false, Some(w)) => write!(f, "fails: {w}"),
            (false, None) => write!(f, "fails"),
        }
    }
}

/// Odometer over all tuples in `[0, n)^arity`, lexicographic.
pub(crate) fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut idx = vec![0usize; arity];
    if n == 0 && arity > 0 {
        return;
    }
    loop {
        if !f(&idx) {
            return;
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Checks `lhs(t) == rhs(t)` over every basis tuple `t`, stopping at the
/// first mismatch.
pub(crate) fn check_identity(
    condition: &str,
    n: usize,
    arity: usize,
    mut sides: impl FnMut(&[usize]) -> (Vector, Vector),
) -> Verdict {
    let mut verdict = Verdict::pass();
    for_each_tuple(n, arity, |t| {
        let (lhs, rhs) = sides(t);
        if lhs != rhs {
            verdict = Verdict::fail(Witness::new(condition, t.to_vec(), lhs, rhs));
            false
        } else {
            true
        }
    });
    verdict
}

/// Entrywise `lhs == rhs` for two matrices of the same shape; the witness
/// is the first differing `(row, column)`.
pub(crate) fn matrix_identity(condition: &str, lhs: &crate::linalg::Matrix, rhs: &crate::linalg::Matrix) -> Verdict {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let (l, r) = (&lhs.row(i)[j], &rhs.row(i)[j]);
            if l != r {
                return Verdict::fail(Witness::new(condition, vec![i, j], vec![l.clone()], vec![r.clone()]));
            }
        }
    }
    Verdict::pass()
}

/// Turns a failed verdict on a derived identity into a consistency error.
pub(crate) fn require(v: Verdict, what: &str) -> crate::error::Result<()> {
    if v.holds {
        Ok(())
    } else {
        let detail = v.witness.map(|w| w.to_string()).unwrap_or_default();
        Err(crate::error::Error::consistency(format!("{what}: {detail}")))
    }
}
