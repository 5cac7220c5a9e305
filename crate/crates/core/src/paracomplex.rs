//! Para-complex structures: eigensplittings, quadratic pre-Lie algebras,
//! the pre-Lie algebra of a symplectic Lie algebra, para-Kähler and
//! para-complex pseudo-Hessian structures.
//!
//! Bilinear forms are matrices with `ω(x, y) = x^T W y`.

use crate::algebra::{check_lie, check_pre_lie, sub_adjacent, Algebra, Kind};
use crate::cohomology::is_lie_two_cocycle;
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Vector};
use crate::nijenhuis::{deformed_algebra, deformed_product, is_nijenhuis};
use crate::scalar::{int, Scalar};
use crate::smatrix::is_pseudo_hessian;
use crate::verdict::{check_identity, matrix_identity, require, Verdict, Witness};

/// Bases of the `+1` and `−1` eigenspaces of an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub plus: Vec<Vector>,
    pub minus: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParacomplexReport {
    pub verdict: Verdict,
    /// Present when the verdict holds.
    pub splitting: Option<Splitting>,
}

fn check_square(a: &Algebra, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::dim(format!("{what} does not match the algebra dimension {}", a.dim())));
    }
    Ok(())
}

fn form(w: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    dot(x, &w.apply(y))
}

fn in_span(basis: &[Vector], v: &[Scalar]) -> bool {
    let n = v.len();
    if basis.is_empty() {
        return v.iter().all(|c| c == &int(0));
    }
    let span = Matrix::from_columns(n, basis).expect("columns of equal length");
    let mut cols = basis.to_vec();
    cols.push(v.to_vec());
    let extended = Matrix::from_columns(n, &cols).expect("columns of equal length");
    extended.rank() == span.rank()
}

/// Whether `span(basis)` is closed under the product.
fn closure(a: &Algebra, basis: &[Vector], name: &str) -> Verdict {
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let p = a.mul(u, v);
            if !in_span(basis, &p) {
                return Verdict::fail(Witness::new(
                    format!("{name} is closed under the product"),
                    vec![i, j],
                    p,
                    Vec::new(),
                ));
            }
        }
    }
    Verdict::pass()
}

fn isotropy(w: &Matrix, basis: &[Vector], name: &str) -> Verdict {
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let value = form(w, u, v);
            if value != int(0) {
                return Verdict::fail(Witness::new(
                    format!("{name} is isotropic"),
                    vec![i, j],
                    vec![value],
                    vec![int(0)],
                ));
            }
        }
    }
    Verdict::pass()
}

/// `ω(N x, y) = −ω(x, N y)`, i.e. `N^T W = −W N`.
pub fn is_anti_compatible(w: &Matrix, n: &Matrix) -> Verdict {
    matrix_identity("w(Nx, y) = -w(x, Ny)", &(&n.transpose() * w), &(w * n).scale(&int(-1)))
}

/// `N` Nijenhuis, `N² = Id` and `dim ker(N − Id) = dim ker(N + Id)`.
///
/// On success the eigenspace bases are returned and both are verified to be
/// subalgebras.
pub fn is_paracomplex(a: &Algebra, n: &Matrix) -> Result<ParacomplexReport> {
    check_square(a, n, "operator")?;
    let dim = a.dim();
    let fail = |verdict| Ok(ParacomplexReport { verdict, splitting: None });
    let sq = matrix_identity("N^2 = Id", &(n * n), &Matrix::identity(dim));
    if !sq.holds {
        return fail(sq);
    }
    let id = Matrix::identity(dim);
    let plus = (n - &id).kernel();
    let minus = (n + &id).kernel();
    if plus.len() != minus.len() {
        return fail(Verdict::fail(Witness::note(format!(
            "eigenspace dimensions differ: {} for +1, {} for -1",
            plus.len(),
            minus.len()
        ))));
    }
    let v = is_nijenhuis(a, n)?;
    if !v.holds {
        return fail(v);
    }
    require(closure(a, &plus, "+1 eigenspace"), "eigenspaces of a para-complex structure must be subalgebras")?;
    require(closure(a, &minus, "-1 eigenspace"), "eigenspaces of a para-complex structure must be subalgebras")?;
    Ok(ParacomplexReport {
        verdict: v,
        splitting: Some(Splitting { plus, minus }),
    })
}

fn require_skew(w: &Matrix, what: &str) -> Result<()> {
    if !w.is_square() || !w.is_skew() {
        return Err(Error::pre(format!("{what} must be skew-symmetric")));
    }
    Ok(())
}

/// `ω(x·y, z) + ω(y, [x,z]) = 0` on all basis triples, with `ω` nondegenerate.
pub fn is_quadratic(a: &Algebra, w: &Matrix) -> Result<Verdict> {
    check_square(a, w, "form")?;
    require_skew(w, "form")?;
    let pre_lie = check_pre_lie(a);
    if !pre_lie.holds {
        return Err(Error::pre(format!("quadratic structure needs a pre-Lie algebra: {pre_lie}")));
    }
    if !w.is_invertible() {
        return Ok(Verdict::fail(Witness::note("form is degenerate")));
    }
    let dim = a.dim();
    let cols: Vec<Vector> = (0..dim).map(|i| w.column(i)).collect();
    Ok(check_identity("w(x·y, z) + w(y, [x,z]) = 0", dim, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = dot(a.mul_basis(x, y), &cols[z]);
        let br = crate::linalg::sub_vec(a.mul_basis(x, z), a.mul_basis(z, x));
        let rhs = -dot(w.row(y), &br);
        (vec![lhs], vec![rhs])
    }))
}

fn require_symplectic(lie: &Algebra, w: &Matrix) -> Result<()> {
    check_square(lie, w, "form")?;
    require_skew(w, "form")?;
    let v = check_lie(lie);
    if !v.holds {
        return Err(Error::pre(format!("not a Lie algebra: {v}")));
    }
    if !w.is_invertible() {
        return Err(Error::pre("form is degenerate"));
    }
    let v = is_lie_two_cocycle(lie, w)?;
    if !v.holds {
        return Err(Error::pre(format!("form is not a 2-cocycle: {v}")));
    }
    Ok(())
}

/// The pre-Lie product with `ω(x·y, z) = −ω(y, [x,z])` on a symplectic Lie
/// algebra, solved column by column.
pub fn prelie_from_symplectic(lie: &Algebra, w: &Matrix) -> Result<Algebra> {
    require_symplectic(lie, w)?;
    let prod = prelie_from_symplectic_unchecked(lie, w)?;
    require(check_pre_lie(&prod), "product from a symplectic form must be pre-Lie")?;
    if sub_adjacent(&prod)?.product() != lie.product() {
        return Err(Error::consistency("commutator of the derived product must be the Lie bracket"));
    }
    require(is_quadratic(&prod, w)?, "derived product must be quadratic for the same form")?;
    Ok(prod)
}

fn prelie_from_symplectic_unchecked(lie: &Algebra, w: &Matrix) -> Result<Algebra> {
    let dim = lie.dim();
    // ω(v, e_z) = (W^T v)_z, so v = (W^T)^{-1} c.
    let solve = w.transpose().inverse()?;
    Ok(Algebra::from_table(dim, Kind::PreLie, |x, y| {
        let c: Vector = (0..dim).map(|z| -dot(w.row(y), lie.mul_basis(x, z))).collect();
        solve.apply(&c)
    }))
}

/// `(A, ω, N)` is para-complex quadratic: `(A, ω)` quadratic (checked as a
/// precondition), `N` para-complex on `A` and anti-compatible with `ω`.
pub fn is_paracomplex_quadratic(a: &Algebra, w: &Matrix, n: &Matrix) -> Result<Verdict> {
    let q = is_quadratic(a, w)?;
    if !q.holds {
        return Err(Error::pre(format!("not a quadratic pre-Lie algebra: {q}")));
    }
    let p = is_paracomplex(a, n)?;
    if !p.verdict.holds {
        return Ok(p.verdict);
    }
    Ok(is_anti_compatible(w, n))
}

/// `(L, ω, N)` is para-Kähler: `(L, ω)` symplectic (checked as a
/// precondition), `N` para-complex on `L` and anti-compatible with `ω`.
///
/// When it holds, the following are verified: the pre-Lie algebra of
/// `(L, ω)` with the same `N` is para-complex quadratic, `(L, [·,·]_N, ω, N)`
/// is again para-Kähler, and the pre-Lie algebra of `(L, [·,·]_N, ω)` is `·_N`.
pub fn is_para_kahler(lie: &Algebra, w: &Matrix, n: &Matrix) -> Result<Verdict> {
    require_symplectic(lie, w)?;
    let v = para_kahler_conditions(lie, w, n)?;
    if !v.holds {
        return Ok(v);
    }
    let prod = prelie_from_symplectic(lie, w)?;
    require(
        is_paracomplex_quadratic(&prod, w, n)?,
        "para-Kähler structure must give a para-complex quadratic pre-Lie algebra",
    )?;
    let lie_n = deformed_algebra(lie, n)?.with_kind(Kind::Lie);
    require(check_lie(&lie_n), "deformed bracket must be Lie")?;
    require(is_lie_two_cocycle(&lie_n, w)?, "form must be a 2-cocycle for the deformed bracket")?;
    require(para_kahler_conditions(&lie_n, w, n)?, "deformed bracket must be para-Kähler")?;
    let from_deformed = prelie_from_symplectic(&lie_n, w)?;
    if from_deformed.product() != &deformed_product(&prod, n)? {
        return Err(Error::consistency(
            "pre-Lie algebra of the deformed bracket must be the deformed product",
        ));
    }
    Ok(v)
}

fn para_kahler_conditions(lie: &Algebra, w: &Matrix, n: &Matrix) -> Result<Verdict> {
    let p = is_paracomplex(lie, n)?;
    if !p.verdict.holds {
        return Ok(p.verdict);
    }
    Ok(is_anti_compatible(w, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// A skew form, for para-complex quadratic structures.
    Quadratic,
    /// A symmetric form, for para-complex pseudo-Hessian structures.
    Hessian,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Quadratic => "quadratic",
            Flavor::Hessian => "hessian",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "quadratic" => Some(Flavor::Quadratic),
            "hessian" => Some(Flavor::Hessian),
            _ => None,
        }
    }
}

/// `N(x + y) = x − y` for `x ∈ span(plus)`, `y ∈ span(minus)`.
///
/// Both spans must be isotropic subalgebras of equal dimension forming a
/// direct sum. The returned verdict says whether the full structure holds,
/// that is whether `(A, ω, N)` is para-complex quadratic (for
/// [`Flavor::Quadratic`]) or `(B, N)` is para-complex pseudo-Hessian (for
/// [`Flavor::Hessian`]). The para-complex and anti-compatibility conditions
/// themselves always hold and are verified.
pub fn paracomplex_from_splitting(
    a: &Algebra,
    plus: &[Vector],
    minus: &[Vector],
    w: &Matrix,
    flavor: Flavor,
) -> Result<(Matrix, Verdict)> {
    let dim = a.dim();
    check_square(a, w, "form")?;
    match flavor {
        Flavor::Quadratic => require_skew(w, "form")?,
        Flavor::Hessian => {
            if !w.is_symmetric() {
                return Err(Error::pre("form must be symmetric"));
            }
        }
    }
    if plus.len() != minus.len() || plus.len() + minus.len() != dim {
        return Err(Error::pre("subspaces must have equal dimension and together span the algebra"));
    }
    if plus.iter().chain(minus).any(|v| v.len() != dim) {
        return Err(Error::dim("basis vectors do not match the algebra dimension"));
    }
    let cols: Vec<Vector> = plus.iter().chain(minus).cloned().collect();
    let p = Matrix::from_columns(dim, &cols)?;
    if !p.is_invertible() {
        return Err(Error::pre("subspaces are not complementary"));
    }
    for (basis, name) in [(plus, "first subspace"), (minus, "second subspace")] {
        let v = closure(a, basis, name);
        if !v.holds {
            return Err(Error::pre(format!("not a subalgebra: {v}")));
        }
        let v = isotropy(w, basis, name);
        if !v.holds {
            return Err(Error::pre(format!("not isotropic: {v}")));
        }
    }
    let signs: Vec<Scalar> = (0..dim).map(|i| if i < plus.len() { int(1) } else { int(-1) }).collect();
    let n = &(&p * &Matrix::diagonal(&signs)) * &p.inverse()?;
    require(is_paracomplex(a, &n)?.verdict, "operator from a splitting must be para-complex")?;
    require(is_anti_compatible(w, &n), "operator from an isotropic splitting must be anti-compatible")?;
    let verdict = match flavor {
        Flavor::Quadratic => {
            let q = is_quadratic(a, w)?;
            if q.holds {
                is_paracomplex_quadratic(a, w, &n)?
            } else {
                q
            }
        }
        Flavor::Hessian => is_paracomplex_pseudo_hessian(a, w, &n)?,
    };
    Ok((n, verdict))
}

/// `B` pseudo-Hessian, `N` para-complex and `B(Nx, y) = −B(x, Ny)`.
///
/// When it holds, `ω(x, y) = B(x, Ny)` is verified to be skew with
/// `ω(Nx, Ny) = −ω(x, y)`.
pub fn is_paracomplex_pseudo_hessian(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<Verdict> {
    check_square(a, b, "form")?;
    if !b.is_symmetric() {
        return Ok(Verdict::fail(Witness::note("form is not symmetric")));
    }
    let v = is_pseudo_hessian(a, b)?;
    if !v.holds {
        return Ok(v);
    }
    let p = is_paracomplex(a, n)?;
    if !p.verdict.holds {
        return Ok(p.verdict);
    }
    let v = is_anti_compatible(b, n);
    if v.holds {
        let w = b * n;
        require(Verdict::from_bool(w.is_skew(), "w(x,y) = B(x,Ny) is skew"), "derived form must be skew")?;
        require(
            matrix_identity("w(Nx, Ny) = -w(x, y)", &(&(&n.transpose() * &w) * n), &w.scale(&int(-1))),
            "derived form must be anti-invariant under N",
        )?;
    }
    Ok(v)
}
