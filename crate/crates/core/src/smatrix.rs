//! s-matrices, the dual pre-Lie products they define, pseudo-Hessian and
//! pseudo-Hessian-Nijenhuis structures, and the passages between them.
//!
//! A symmetric tensor `r ∈ Sym²(g)` is stored as the matrix of
//! `r♯ : g* → g` in the dual basis, and a bilinear form `B` as the matrix
//! with `B(x, y) = x^T B y`. With these conventions `B = (r♯)⁻¹` is the
//! form attached to an invertible `r`.

use crate::algebra::{
    check_pre_lie, dual_representation, sub_adjacent_unchecked, trivial_representation, Algebra,
    Kind, Representation,
};
use crate::cohomology::{coboundary, vanishes};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, dot, sub_vec, Matrix, Vector};
use crate::nijenhuis::{check_deformation, deformed_product, is_nijenhuis, DeformationReport};
use crate::operators::{is_o_operator, LDendriform};
use crate::scalar::{frac, Scalar};
use crate::tensor::{Arg, Cochain, MultiMap};
use crate::verdict::{check_identity, matrix_identity, require, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Skew => "skew",
        }
    }
}

/// A bilinear form `B(x, y) = x^T M y` with a declared symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self> {
        let ok = match symmetry {
            Symmetry::Symmetric => matrix.is_symmetric(),
            Symmetry::Skew => matrix.is_skew(),
        };
        if !matrix.is_square() || !ok {
            return Err(Error::pre(format!("form is not {}", symmetry.as_str())));
        }
        Ok(BilinearForm { matrix, symmetry })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.matrix.apply(y))
    }
}

fn require_symmetric(r: &Matrix, what: &str) -> Result<()> {
    if !r.is_square() || !r.is_symmetric() {
        return Err(Error::pre(format!("{what} must be a symmetric matrix")));
    }
    Ok(())
}

fn check_shape(a: &Algebra, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::dim(format!(
            "{what} is {}x{}, algebra has dimension {}",
            m.rows(),
            m.cols(),
            a.dim()
        )));
    }
    Ok(())
}

/// `⟦r₁, r₂⟧(ξ, η, ζ)` on dual basis triples, as a scalar-valued map with
/// three arguments, skew in the first two.
pub fn s_bracket(a: &Algebra, r1: &Matrix, r2: &Matrix) -> Result<Cochain> {
    check_shape(a, r1, "first tensor")?;
    check_shape(a, r2, "second tensor")?;
    require_symmetric(r1, "first tensor")?;
    require_symmetric(r2, "second tensor")?;
    let n = a.dim();
    let c1: Vec<Vector> = (0..n).map(|j| r1.column(j)).collect();
    let c2: Vec<Vector> = (0..n).map(|j| r2.column(j)).collect();
    let half = frac(1, 2);
    let mixed = |x: &[Vector], y: &[Vector], i: usize, j: usize| a.mul(&x[i], &y[j]);
    let map = MultiMap::from_fn(n, 1, 2, |t| {
        let (xi, eta, zeta) = (t[0], t[1], t[2]);
        let first = &mixed(&c1, &c2, eta, zeta)[xi] + &mixed(&c2, &c1, eta, zeta)[xi];
        let second = &mixed(&c1, &c2, xi, zeta)[eta] + &mixed(&c2, &c1, xi, zeta)[eta];
        let br1 = a.commutator(&c1[xi], &c2[eta]);
        let br2 = a.commutator(&c2[xi], &c1[eta]);
        let third = &br1[zeta] + &br2[zeta];
        vec![(-first + second + third) * &half]
    });
    Cochain::new(map).map_err(|e| Error::consistency(format!("s-bracket is not skew: {e}")))
}

/// `ξ ·_r η = ad*_{r♯ξ} η − R*_{r♯η} ξ` on `g*`, without checking that `r`
/// is an s-matrix.
fn dual_product_unchecked(a: &Algebra, dual: &Representation, r: &Matrix) -> Algebra {
    let n = a.dim();
    Algebra::from_table(n, Kind::Unchecked, |i, j| {
        let ri = r.column(i);
        let rj = r.column(j);
        let v = dual.rho(&ri).apply(&basis_vector(n, j));
        let w = dual.mu(&rj).apply(&basis_vector(n, i));
        crate::linalg::add_vec(&v, &w)
    })
}

/// `r♯(ξ ·_r η) = r♯ξ · r♯η` on dual basis pairs.
fn morphism_identity(a: &Algebra, dual_alg: &Algebra, r: &Matrix) -> Verdict {
    check_identity("r(xi ·_r eta) = r(xi)·r(eta)", a.dim(), 2, |t| {
        (
            r.apply(dual_alg.mul_basis(t[0], t[1])),
            a.mul(&r.column(t[0]), &r.column(t[1])),
        )
    })
}

/// Whether `⟦r, r⟧ = 0`. When it holds, the morphism identity for `·_r`
/// and the O-operator property of `r♯` for the dual representation are
/// verified as consequences.
pub fn is_s_matrix(a: &Algebra, r: &Matrix) -> Result<Verdict> {
    let b = s_bracket(a, r, r)?;
    let v = vanishes("s-equation [[r,r]] = 0", b.as_map());
    if v.holds {
        let dual = dual_representation(a);
        let prod = dual_product_unchecked(a, &dual, r);
        require(morphism_identity(a, &prod, r), "s-matrix must give a morphism from the dual product")?;
        require(is_o_operator(a, &dual, r)?, "s-matrix must be an O-operator for the dual representation")?;
    }
    Ok(v)
}

/// Whether `r₁` and `r₂` are s-matrices with `⟦r₁, r₂⟧ = 0`.
pub fn are_compatible_s_matrices(a: &Algebra, r1: &Matrix, r2: &Matrix) -> Result<Verdict> {
    for (name, r) in [("first", r1), ("second", r2)] {
        let v = is_s_matrix(a, r)?;
        if !v.holds {
            return Ok(Verdict::fail(Witness::note(format!("{name} tensor is not an s-matrix: {v}"))));
        }
    }
    let b = s_bracket(a, r1, r2)?;
    Ok(vanishes("compatibility [[r1,r2]] = 0", b.as_map()))
}

/// The pre-Lie product `·_r` on `g*` for an s-matrix `r`.
pub fn dual_product(a: &Algebra, r: &Matrix) -> Result<Algebra> {
    let v = is_s_matrix(a, r)?;
    if !v.holds {
        return Err(Error::pre(format!("not an s-matrix: {v}")));
    }
    let dual = dual_representation(a);
    let prod = dual_product_unchecked(a, &dual, r).with_kind(Kind::PreLie);
    require(check_pre_lie(&prod), "dual product of an s-matrix must be pre-Lie")?;
    Ok(prod)
}

/// `d^T B` for the trivial one-dimensional representation:
/// `(x, y, z) ↦ −B(y, x·z) + B(x, y·z) − B([x,y], z)`.
pub fn hessian_coboundary(a: &Algebra, b: &Matrix) -> Result<Cochain> {
    check_shape(a, b, "form")?;
    let phi = Cochain::new_unchecked(MultiMap::from_bilinear_form(b));
    coboundary(a, &trivial_representation(a, 1), &phi)
}

/// Whether `B` is a symmetric nondegenerate form with `d^T B = 0`.
pub fn is_pseudo_hessian(a: &Algebra, b: &Matrix) -> Result<Verdict> {
    check_shape(a, b, "form")?;
    require_symmetric(b, "form")?;
    if !b.is_invertible() {
        return Ok(Verdict::fail(Witness::note("form is degenerate")));
    }
    let d = hessian_coboundary(a, b)?;
    Ok(vanishes("d^T B = 0", d.as_map()))
}

/// `B = (r♯)⁻¹` for an invertible symmetric `r`.
pub fn hessian_from_r(a: &Algebra, r: &Matrix) -> Result<Matrix> {
    check_shape(a, r, "tensor")?;
    require_symmetric(r, "tensor")?;
    let b = r.inverse()?;
    if is_s_matrix(a, r)?.holds {
        require(is_pseudo_hessian(a, &b)?, "inverse of an s-matrix must be pseudo-Hessian")?;
    }
    Ok(b)
}

/// `r♯ = B⁻¹` for a nondegenerate symmetric form.
pub fn r_from_hessian(a: &Algebra, b: &Matrix) -> Result<Matrix> {
    check_shape(a, b, "form")?;
    require_symmetric(b, "form")?;
    let r = b.inverse()?;
    if is_pseudo_hessian(a, b)?.holds {
        require(is_s_matrix(a, &r)?, "inverse of a pseudo-Hessian form must be an s-matrix")?;
    }
    Ok(r)
}

/// `B(Nx, y) = B(x, Ny)`, i.e. `N^T B = B N`.
pub fn is_self_adjoint(b: &Matrix, n: &Matrix) -> Verdict {
    matrix_identity("B(Nx, y) = B(x, Ny)", &(&n.transpose() * b), &(b * n))
}

/// `B_k(x, y) = B(x, N^k y)` as a matrix, `B N^k`.
fn form_power(b: &Matrix, n: &Matrix, k: i32) -> Result<Matrix> {
    Ok(b * &n.powi(k)?)
}

/// `B` pseudo-Hessian, `N` an invertible Nijenhuis operator,
/// `B(Nx, y) = B(x, Ny)` and `d^T B₁ = 0`.
pub fn is_pseudo_hessian_nijenhuis(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<Verdict> {
    check_shape(a, n, "operator")?;
    let v = is_pseudo_hessian(a, b)?;
    if !v.holds {
        return Ok(v);
    }
    if !n.is_invertible() {
        return Ok(Verdict::fail(Witness::note("operator is not invertible")));
    }
    let v = is_nijenhuis(a, n)?;
    if !v.holds {
        return Ok(v);
    }
    let v = is_self_adjoint(b, n);
    if !v.holds {
        return Ok(v);
    }
    let d1 = hessian_coboundary(a, &form_power(b, n, 1)?)?;
    Ok(vanishes("d^T B_1 = 0", d1.as_map()))
}

fn require_phn(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<()> {
    let v = is_pseudo_hessian_nijenhuis(a, b, n)?;
    if !v.holds {
        return Err(Error::pre(format!("not a pseudo-Hessian-Nijenhuis structure: {v}")));
    }
    Ok(())
}

/// `B_k = B N^k` for a pseudo-Hessian-Nijenhuis structure; every `B_k` is
/// again pseudo-Hessian.
pub fn hessian_sequence(a: &Algebra, b: &Matrix, n: &Matrix, k: i32) -> Result<Matrix> {
    require_phn(a, b, n)?;
    let bk = form_power(b, n, k)?;
    require(is_pseudo_hessian(a, &bk)?, "forms of the sequence must be pseudo-Hessian")?;
    Ok(bk)
}

fn require_compatible(a: &Algebra, r1: &Matrix, r2: &Matrix) -> Result<()> {
    let v = are_compatible_s_matrices(a, r1, r2)?;
    if !v.holds {
        return Err(Error::pre(format!("s-matrices are not compatible: {v}")));
    }
    Ok(())
}

/// `s_n♯ = (r₂♯ (r₁♯)⁻¹)^n r₁♯`; `s₀ = r₁`, `s₁ = r₂`.
pub fn s_sequence(a: &Algebra, r1: &Matrix, r2: &Matrix, n: i32) -> Result<Matrix> {
    require_compatible(a, r1, r2)?;
    let inv = r1.inverse()?;
    let step = r2 * &inv;
    let s = &step.powi(n)? * r1;
    require(is_s_matrix(a, &s)?, "members of the s-matrix sequence must be s-matrices")?;
    Ok(s)
}

/// `(B, N) = ((r₁♯)⁻¹, r₁♯ (r₂♯)⁻¹)` for compatible invertible s-matrices.
pub fn phn_bridge(a: &Algebra, r1: &Matrix, r2: &Matrix) -> Result<(Matrix, Matrix)> {
    require_compatible(a, r1, r2)?;
    let b = r1.inverse()?;
    let n = r1 * &r2.inverse()?;
    require(
        is_pseudo_hessian_nijenhuis(a, &b, &n)?,
        "compatible invertible s-matrices must give a pseudo-Hessian-Nijenhuis structure",
    )?;
    Ok((b, n))
}

/// `(r₁♯, r₂♯) = (B⁻¹, N⁻¹ B⁻¹)` for a pseudo-Hessian-Nijenhuis structure.
pub fn phn_to_smatrices(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<(Matrix, Matrix)> {
    require_phn(a, b, n)?;
    let r1 = b.inverse()?;
    let r2 = &n.inverse()? * &r1;
    require(
        are_compatible_s_matrices(a, &r1, &r2)?,
        "a pseudo-Hessian-Nijenhuis structure must give compatible s-matrices",
    )?;
    Ok((r1, r2))
}

#[derive(Debug, Clone)]
pub struct DualNijenhuis {
    /// `(g*, ·_{r₂})`.
    pub algebra: Algebra,
    /// `N* = (r₂♯)⁻¹ r₁♯`.
    pub operator: Matrix,
    /// The deformation of `·_{r₂}` by `·_{r₁}`.
    pub deformation: DeformationReport,
}

/// `N* = (r₂♯)⁻¹ r₁♯` on `(g*, ·_{r₂})`; it is Nijenhuis and its deformed
/// product is `·_{r₁}`.
pub fn dual_nijenhuis(a: &Algebra, r1: &Matrix, r2: &Matrix) -> Result<DualNijenhuis> {
    require_compatible(a, r1, r2)?;
    let star = &r2.inverse()? * r1;
    let g2 = dual_product(a, r2)?;
    let g1 = dual_product(a, r1)?;
    require(is_nijenhuis(&g2, &star)?, "N* must be Nijenhuis on the dual product")?;
    let deformed = deformed_product(&g2, &star)?;
    if &deformed != g1.product() {
        return Err(Error::consistency("deformed dual product must equal the product of r1"));
    }
    let deformation = check_deformation(&g2, g1.product())?;
    if !deformation.is_deformation {
        return Err(Error::consistency("the product of r1 must deform the product of r2"));
    }
    Ok(DualNijenhuis {
        algebra: g2,
        operator: star,
        deformation,
    })
}

/// The two L-dendriform structures of a pseudo-Hessian-Nijenhuis algebra,
/// defined through the form:
/// `B(x ▷₂ y, z) = −B(Ny, x·N⁻¹z − N⁻¹z·x)`, `B(x ◁₂ y, z) = −B(Ny, N⁻¹z·x)`,
/// and the same with `N = Id` for the first structure.
pub fn phn_l_dendriform_pair(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<(LDendriform, LDendriform)> {
    require_phn(a, b, n)?;
    let first = form_l_dendriform(a, b, &Matrix::identity(a.dim()))?;
    let second = form_l_dendriform(a, b, n)?;
    Ok((first, second))
}

fn form_l_dendriform(a: &Algebra, b: &Matrix, n: &Matrix) -> Result<LDendriform> {
    let dim = a.dim();
    let binv = b.inverse()?;
    let ninv = n.inverse()?;
    let form = |x: &[Scalar], y: &[Scalar]| dot(x, &b.apply(y));
    let solve = |w: Vector| binv.apply(&w);
    let succ = MultiMap::from_fn(dim, dim, 1, |t| {
        let ny = n.column(t[1]);
        let w: Vector = (0..dim)
            .map(|z| {
                let nz = ninv.column(z);
                let br = a.commutator(&basis_vector(dim, t[0]), &nz);
                -form(&ny, &br)
            })
            .collect();
        solve(w)
    });
    let prec = MultiMap::from_fn(dim, dim, 1, |t| {
        let ny = n.column(t[1]);
        let w: Vector = (0..dim)
            .map(|z| {
                let nz = ninv.column(z);
                let p = a.product().eval(&[Arg::Vector(&nz), Arg::Basis(t[0])]);
                -form(&ny, &p)
            })
            .collect();
        solve(w)
    });
    LDendriform::new(succ, prec)
}

/// Both sides of
/// `d^T B_{k+1}(x,y,z) = d^T B_k(Nx,y,z) + d^T B_k(x,Ny,z) − d^T B_{k−1}(Nx,Ny,z)
///   − B([Nx,Ny] − N([Nx,y] + [x,Ny] − N[x,y]), N^{k−1} z)`,
/// compared on all basis triples.
pub fn hessian_recursion(a: &Algebra, b: &Matrix, n: &Matrix, k: i32) -> Result<Verdict> {
    check_shape(a, b, "form")?;
    check_shape(a, n, "operator")?;
    let dim = a.dim();
    let d_next = hessian_coboundary(a, &form_power(b, n, k + 1)?)?;
    let d_k = hessian_coboundary(a, &form_power(b, n, k)?)?;
    let d_prev = hessian_coboundary(a, &form_power(b, n, k - 1)?)?;
    let nk1 = n.powi(k - 1)?;
    let lie = sub_adjacent_unchecked(a)?;
    let lie_n = deformed_product(&lie, n)?;
    Ok(check_identity("recursion for d^T B_k", dim, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let nx = n.column(x);
        let ny = n.column(y);
        let lhs = d_next.value(t).to_vec();
        let mut rhs = d_k.eval(&[Arg::Vector(&nx), Arg::Basis(y), Arg::Basis(z)]);
        rhs = crate::linalg::add_vec(&rhs, &d_k.eval(&[Arg::Basis(x), Arg::Vector(&ny), Arg::Basis(z)]));
        rhs = sub_vec(&rhs, &d_prev.eval(&[Arg::Vector(&nx), Arg::Vector(&ny), Arg::Basis(z)]));
        let torsion = sub_vec(&lie.mul(&nx, &ny), &n.apply(lie_n.value(&[x, y])));
        let term = dot(&torsion, &b.apply(&nk1.column(z)));
        rhs[0] -= term;
        (lhs, rhs)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::operators::{are_compatible_l_dendriform, is_l_dendriform, l_dendriform_on_algebra};

    fn a2() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::PreLie,
            &[(1, 0, vec![int(-1), int(0)]), (1, 1, vec![int(0), int(1)])],
        )
        .unwrap()
    }

    fn a3() -> Algebra {
        Algebra::from_entries(
            3,
            Kind::PreLie,
            &[(2, 1, vec![int(0), int(1), int(0)]), (2, 2, vec![int(0), int(0), int(-1)])],
        )
        .unwrap()
    }

    fn swap() -> Matrix {
        Matrix::from_ints(&[[0, 1], [1, 0]])
    }

    fn n2() -> Matrix {
        Matrix::from_ints(&[[1, 1], [0, 1]])
    }

    #[test]
    fn s_bracket_examples() {
        let a = a2();
        assert!(s_bracket(&a, &swap(), &swap()).unwrap().is_zero());
        assert!(s_bracket(&a, &Matrix::zeros(2, 2), &Matrix::zeros(2, 2)).unwrap().is_zero());
        let id = s_bracket(&a, &Matrix::identity(2), &Matrix::identity(2)).unwrap();
        assert_eq!(id.value(&[0, 1, 0]), &[int(2)]);
    }

    #[test]
    fn s_matrix_examples() {
        let a = a2();
        assert!(is_s_matrix(&a, &swap()).unwrap().holds);
        assert!(is_s_matrix(&a, &Matrix::zeros(2, 2)).unwrap().holds);
        assert!(!is_s_matrix(&a, &Matrix::identity(2)).unwrap().holds);
        let skew = Matrix::from_ints(&[[0, 1], [-1, 0]]);
        assert!(matches!(is_s_matrix(&a, &skew), Err(Error::Precondition(_))));
    }

    #[test]
    fn dual_product_examples() {
        let a = a2();
        let d = dual_product(&a, &swap()).unwrap();
        assert_eq!(d.mul_basis(0, 0), &[int(1), int(0)]);
        assert_eq!(swap().apply(d.mul_basis(0, 0)), vec![int(0), int(1)]);
        assert!(dual_product(&a, &Matrix::zeros(2, 2)).unwrap().product().is_zero());
        assert!(matches!(dual_product(&a, &Matrix::identity(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn hessian_round_trip() {
        let a = a2();
        let b = hessian_from_r(&a, &swap()).unwrap();
        assert_eq!(b, swap());
        assert_eq!(r_from_hessian(&a, &b).unwrap(), swap());
        let z = Algebra::zero(2, Kind::PreLie);
        assert_eq!(hessian_from_r(&z, &Matrix::identity(2)).unwrap(), Matrix::identity(2));
        assert!(matches!(hessian_from_r(&a, &Matrix::zeros(2, 2)), Err(Error::Singular(_))));
    }

    #[test]
    fn phn_examples() {
        let a = a2();
        assert!(is_pseudo_hessian_nijenhuis(&a, &swap(), &n2()).unwrap().holds);
        let b = Matrix::from_ints(&[[0, 2], [2, -1]]);
        assert!(is_pseudo_hessian_nijenhuis(&a, &b, &Matrix::from_ints(&[[3, -1], [0, 3]])).unwrap().holds);
        let v = is_pseudo_hessian_nijenhuis(&a, &swap(), &Matrix::from_ints(&[[0, 1], [0, 0]])).unwrap();
        assert!(!v.holds);
        let b3 = Matrix::from_ints(&[[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
        let n3 = Matrix::from_ints(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]]);
        assert!(is_pseudo_hessian_nijenhuis(&a3(), &b3, &n3).unwrap().holds);
    }

    #[test]
    fn sequences() {
        let a = a2();
        let b1 = hessian_sequence(&a, &swap(), &n2(), 1).unwrap();
        assert_eq!(b1, Matrix::from_ints(&[[0, 1], [1, 1]]));
        assert_eq!(hessian_sequence(&a, &swap(), &n2(), 0).unwrap(), swap());
        for k in -2..=3 {
            hessian_sequence(&a, &swap(), &n2(), k).unwrap();
        }
        let r1 = swap();
        let r2 = &n2().inverse().unwrap() * &r1;
        assert_eq!(s_sequence(&a, &r1, &r2, 0).unwrap(), r1);
        assert_eq!(s_sequence(&a, &r1, &r2, 1).unwrap(), r2);
        for k in -2..=3 {
            s_sequence(&a, &r1, &r2, k).unwrap();
        }
    }

    #[test]
    fn bridges() {
        let a = a2();
        let (r1, r2) = phn_to_smatrices(&a, &swap(), &n2()).unwrap();
        assert_eq!(r1, swap());
        assert_eq!(r2, &n2().inverse().unwrap() * &swap());
        let (b, n) = phn_bridge(&a, &r1, &r2).unwrap();
        assert_eq!(b, swap());
        assert_eq!(n, n2());
        let (_, n) = phn_bridge(&a, &r1, &r1).unwrap();
        assert_eq!(n, Matrix::identity(2));
    }

    #[test]
    fn dual_nijenhuis_examples() {
        let a = a2();
        let r1 = swap();
        let r2 = &n2().inverse().unwrap() * &r1;
        let d = dual_nijenhuis(&a, &r1, &r2).unwrap();
        assert_eq!(d.operator, Matrix::from_ints(&[[1, 0], [1, 1]]));
        let d = dual_nijenhuis(&a, &r1, &r1).unwrap();
        assert_eq!(d.operator, Matrix::identity(2));
        let d = dual_nijenhuis(&a, &Matrix::zeros(2, 2), &r1).unwrap();
        assert!(d.operator.is_zero());
    }

    #[test]
    fn form_dendriform_matches_o_operator_route() {
        let a = a2();
        let (r1, r2) = phn_to_smatrices(&a, &swap(), &n2()).unwrap();
        let (d1, d2) = phn_l_dendriform_pair(&a, &swap(), &n2()).unwrap();
        let dual = dual_representation(&a);
        assert_eq!(d1, l_dendriform_on_algebra(&a, &dual, &r1).unwrap());
        assert_eq!(d2, l_dendriform_on_algebra(&a, &dual, &r2).unwrap());
        assert!(is_l_dendriform(&d1).holds && is_l_dendriform(&d2).holds);
        assert!(are_compatible_l_dendriform(&d1, &d2).unwrap().holds);
    }

    #[test]
    fn recursion_identity() {
        let a = a2();
        for k in 0..=2 {
            assert!(hessian_recursion(&a, &swap(), &n2(), k).unwrap().holds);
        }
        // Also for a non-Nijenhuis operator, where the torsion term is active.
        let m = Matrix::from_ints(&[[1, 0], [1, 1]]);
        for k in 0..=2 {
            assert!(hessian_recursion(&a, &swap(), &m, k).unwrap().holds, "k={k}");
        }
    }

    #[test]
    fn bracket_bilinearity() {
        let a = a2();
        let r1 = Matrix::from_ints(&[[1, 2], [2, -1]]);
        let r2 = Matrix::from_ints(&[[0, 3], [3, 5]]);
        assert_eq!(s_bracket(&a, &r1, &r2).unwrap(), s_bracket(&a, &r2, &r1).unwrap());
        let sum = &r1 + &r2;
        let lhs = s_bracket(&a, &sum, &sum).unwrap();
        let rhs = &(&s_bracket(&a, &r1, &r1).unwrap() + &s_bracket(&a, &r1, &r2).unwrap().scale(&int(2)))
            + &s_bracket(&a, &r2, &r2).unwrap();
        assert_eq!(lhs, rhs);
        let f = BilinearForm::new(r1.clone(), Symmetry::Symmetric).unwrap();
        assert_eq!(f.eval(&basis_vector(2, 0), &basis_vector(2, 1)), int(2));
        assert!(BilinearForm::new(r1, Symmetry::Skew).is_err());
    }
}
