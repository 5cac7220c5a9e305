//! Algebras given by structure constants, their structural checks,
//! multiplication operators and representations.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_vec, basis_vector, sub_vec, Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::{Arg, Cochain, MultiMap};
use crate::verdict::{check_identity, require, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    PreLie,
    Lie,
    Associative,
    Unchecked,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::PreLie => "pre-lie",
            Kind::Lie => "lie",
            Kind::Associative => "associative",
            Kind::Unchecked => "unchecked",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "pre-lie" => Some(Kind::PreLie),
            "lie" => Some(Kind::Lie),
            "associative" => Some(Kind::Associative),
            "unchecked" => Some(Kind::Unchecked),
            _ => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite-dimensional algebra `e_i · e_j = Σ_k c_{ij}^k e_k`.
///
/// The kind tag is not validated by [`Algebra::new`]; use
/// [`Algebra::verified`] or [`Algebra::check_kind`] when it matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    product: Cochain,
    kind: Kind,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(kind: Kind, product: MultiMap) -> Result<Self> {
        if product.degree() != 1 {
            return Err(Error::dim(format!(
                "product must be bilinear, got degree {}",
                product.degree()
            )));
        }
        if product.codim() != product.dim() {
            return Err(Error::dim("product must take values in the algebra"));
        }
        Ok(Algebra {
            product: Cochain::new_unchecked(product),
            kind,
            labels: None,
        })
    }

    /// Builds and validates the kind; a failing identity is a precondition error.
    pub fn verified(kind: Kind, product: MultiMap) -> Result<Self> {
        let a = Self::new(kind, product)?;
        let v = a.check_kind();
        if !v.holds {
            return Err(Error::pre(format!("algebra is not {kind}: {v}")));
        }
        Ok(a)
    }

    /// From the values of `e_i · e_j`.
    pub fn from_table(dim: usize, kind: Kind, f: impl Fn(usize, usize) -> Vector) -> Self {
        let m = MultiMap::from_fn(dim, dim, 1, |t| f(t[0], t[1]));
        Self::new(kind, m).expect("square bilinear table")
    }

    /// From the nonzero products, `(i, j, coordinates of e_i · e_j)`.
    pub fn from_entries(dim: usize, kind: Kind, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut m = MultiMap::zero(dim, dim, 1);
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim || v.len() != dim {
                return Err(Error::dim(format!("product entry ({i},{j}) out of shape")));
            }
            m.value_mut(&[*i, *j]).clone_from_slice(v);
        }
        Self::new(kind, m)
    }

    pub fn zero(dim: usize, kind: Kind) -> Self {
        Self::new(kind, MultiMap::zero(dim, dim, 1)).expect("square")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn product(&self) -> &Cochain {
        &self.product
    }

    /// `e_i · e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.product.value(&[i, j])
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.product.eval(&[Arg::Vector(x), Arg::Vector(y)])
    }

    /// `x·y − y·x`.
    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        sub_vec(&self.mul(x, y), &self.mul(y, x))
    }

    /// `L_x : y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.product.eval(&[Arg::Vector(x), Arg::Basis(j)]))
            .collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    /// `R_x : y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.product.eval(&[Arg::Basis(j), Arg::Vector(x)]))
            .collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left_mult(&basis_vector(self.dim(), i))
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        self.right_mult(&basis_vector(self.dim(), i))
    }

    /// Re-checks the identity promised by the kind tag.
    pub fn check_kind(&self) -> Verdict {
        match self.kind {
            Kind::PreLie => check_pre_lie(self),
            Kind::Lie => check_lie(self),
            Kind::Associative => check_associative(self),
            Kind::Unchecked => Verdict::pass(),
        }
    }

    pub(crate) fn require_kind(&self, kind: Kind, op: &str) -> Result<()> {
        let v = match kind {
            Kind::PreLie => check_pre_lie(self),
            Kind::Lie => check_lie(self),
            Kind::Associative => check_associative(self),
            Kind::Unchecked => Verdict::pass(),
        };
        if v.holds {
            Ok(())
        } else {
            Err(Error::pre(format!("{op} needs a {kind} algebra: {v}")))
        }
    }
}

/// `(x·y)·z − x·(y·z)` on basis vectors.
pub fn associator(a: &Algebra, i: usize, j: usize, k: usize) -> Vector {
    let n = a.dim();
    let xy = a.mul_basis(i, j);
    let yz = a.mul_basis(j, k);
    let left = a.product.eval(&[Arg::Vector(xy), Arg::Basis(k)]);
    let right = a.product.eval(&[Arg::Basis(i), Arg::Vector(yz)]);
    debug_assert_eq!(left.len(), n);
    sub_vec(&left, &right)
}

/// Left-symmetry of the associator over all basis triples.
pub fn check_pre_lie(a: &Algebra) -> Verdict {
    check_identity("associator symmetry (x,y,z) = (y,x,z)", a.dim(), 3, |t| {
        (associator(a, t[0], t[1], t[2]), associator(a, t[1], t[0], t[2]))
    })
}

pub fn check_associative(a: &Algebra) -> Verdict {
    let zero = vec![Scalar::zero(); a.dim()];
    check_identity("associativity (x·y)·z = x·(y·z)", a.dim(), 3, |t| {
        (associator(a, t[0], t[1], t[2]), zero.clone())
    })
}

/// Skew-symmetry and the Jacobi identity.
pub fn check_lie(a: &Algebra) -> Verdict {
    let n = a.dim();
    let skew = check_identity("skew-symmetry [x,y] = -[y,x]", n, 2, |t| {
        let yx: Vector = a.mul_basis(t[1], t[0]).iter().map(|c| -c).collect();
        (a.mul_basis(t[0], t[1]).to_vec(), yx)
    });
    if !skew.holds {
        return skew;
    }
    let zero = vec![Scalar::zero(); n];
    check_identity("Jacobi identity", n, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let term = |a1: usize, b: usize, c: usize| {
            a.product.eval(&[Arg::Basis(a1), Arg::Vector(a.mul_basis(b, c))])
        };
        let s = add_vec(&add_vec(&term(x, y, z), &term(y, z, x)), &term(z, x, y));
        (s, zero.clone())
    })
}

/// The sub-adjacent Lie algebra `[x,y]^c = x·y − y·x`.
pub fn sub_adjacent(a: &Algebra) -> Result<Algebra> {
    a.require_kind(Kind::PreLie, "sub-adjacent Lie algebra")?;
    sub_adjacent_unchecked(a)
}

/// The commutator algebra of any product; Jacobi is verified as a
/// postcondition only when the input is pre-Lie.
pub(crate) fn sub_adjacent_unchecked(a: &Algebra) -> Result<Algebra> {
    let n = a.dim();
    let lie = Algebra::from_table(n, Kind::Lie, |i, j| {
        sub_vec(a.mul_basis(i, j), a.mul_basis(j, i))
    });
    let lie = match a.labels() {
        Some(l) => lie.with_labels(l.to_vec()),
        None => lie,
    };
    if check_pre_lie(a).holds {
        require(check_lie(&lie), "commutator of a pre-Lie product must be Lie")?;
    }
    Ok(lie)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepOrigin {
    Regular,
    Dual,
    Trivial,
    Custom,
}

impl RepOrigin {
    pub fn as_str(self) -> &'static str {
        match self {
            RepOrigin::Regular => "regular",
            RepOrigin::Dual => "dual",
            RepOrigin::Trivial => "trivial",
            RepOrigin::Custom => "custom",
        }
    }
}

/// A pair of matrix families `ρ(e_i)`, `μ(e_i)` acting on `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dim_v: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    origin: RepOrigin,
}

impl Representation {
    pub fn new(dim_v: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        if rho.len() != mu.len() {
            return Err(Error::dim(format!(
                "rho has {} matrices, mu has {}",
                rho.len(),
                mu.len()
            )));
        }
        for (name, fam) in [("rho", &rho), ("mu", &mu)] {
            for (i, m) in fam.iter().enumerate() {
                if m.rows() != dim_v || m.cols() != dim_v {
                    return Err(Error::dim(format!(
                        "{name}(e{}) is {}x{}, expected {dim_v}x{dim_v}",
                        i + 1,
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(Representation {
            dim_v,
            rho,
            mu,
            origin: RepOrigin::Custom,
        })
    }

    fn tagged(mut self, origin: RepOrigin) -> Self {
        self.origin = origin;
        self
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// Number of algebra basis elements the families are indexed by.
    pub fn base_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn origin(&self) -> RepOrigin {
        self.origin
    }

    pub fn rho_basis(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu_basis(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        combine(self.dim_v, x, &self.rho)
    }

    pub fn mu(&self, x: &[Scalar]) -> Matrix {
        combine(self.dim_v, x, &self.mu)
    }

    fn check_base(&self, a: &Algebra) -> Result<()> {
        if self.base_dim() != a.dim() {
            return Err(Error::dim(format!(
                "representation indexed by {} elements, algebra has dimension {}",
                self.base_dim(),
                a.dim()
            )));
        }
        Ok(())
    }
}

fn combine(m: usize, x: &[Scalar], mats: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (c, mat) in x.iter().zip(mats) {
        if !c.is_zero() {
            out = &out + &mat.scale(c);
        }
    }
    out
}

/// `(L, R)` acting on the algebra itself.
pub fn regular_representation(a: &Algebra) -> Representation {
    let n = a.dim();
    let rho = (0..n).map(|i| a.left_basis(i)).collect();
    let mu = (0..n).map(|i| a.right_basis(i)).collect();
    Representation::new(n, rho, mu)
        .expect("square")
        .tagged(RepOrigin::Regular)
}

/// `(ad* = L* − R*, −R*)` on the dual space, where `L*_x = −L_x^T` and
/// `R*_x = −R_x^T` in the dual basis.
pub fn dual_representation(a: &Algebra) -> Representation {
    let n = a.dim();
    let rho = (0..n)
        .map(|i| -(&a.left_basis(i) - &a.right_basis(i)).transpose())
        .collect();
    let mu = (0..n).map(|i| a.right_basis(i).transpose()).collect();
    Representation::new(n, rho, mu)
        .expect("square")
        .tagged(RepOrigin::Dual)
}

/// Zero maps on an `m`-dimensional space.
pub fn trivial_representation(a: &Algebra, m: usize) -> Representation {
    let z = vec![Matrix::zeros(m, m); a.dim()];
    Representation::new(m, z.clone(), z)
        .expect("square")
        .tagged(RepOrigin::Trivial)
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// `ρ` represents the sub-adjacent Lie algebra, and
/// `ρ(x)μ(y) − μ(y)ρ(x) = μ(x·y) − μ(y)μ(x)`.
pub fn check_representation(a: &Algebra, rep: &Representation) -> Result<Verdict> {
    rep.check_base(a)?;
    let n = a.dim();
    let lie_rep = check_identity("rho([x,y]) = [rho(x), rho(y)]", n, 2, |t| {
        let (i, j) = (t[0], t[1]);
        let br = sub_vec(a.mul_basis(i, j), a.mul_basis(j, i));
        let lhs = rep.rho(&br);
        let rhs = &(&rep.rho[i] * &rep.rho[j]) - &(&rep.rho[j] * &rep.rho[i]);
        (flatten(&lhs), flatten(&rhs))
    });
    if !lie_rep.holds {
        return Ok(lie_rep);
    }
    Ok(check_identity(
        "rho(x)mu(y) - mu(y)rho(x) = mu(x·y) - mu(y)mu(x)",
        n,
        2,
        |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = &(&rep.rho[i] * &rep.mu[j]) - &(&rep.mu[j] * &rep.rho[i]);
            let rhs = &rep.mu(a.mul_basis(i, j)) - &(&rep.mu[j] * &rep.mu[i]);
            (flatten(&lhs), flatten(&rhs))
        },
    ))
}

/// `(x₁+v₁)⋆(x₂+v₂) = x₁·x₂ + ρ(x₁)v₂ + μ(x₂)v₁` without validating the
/// representation. Basis: the algebra first, then `V`.
pub fn semidirect_product_unchecked(a: &Algebra, rep: &Representation) -> Result<Algebra> {
    rep.check_base(a)?;
    let n = a.dim();
    let m = rep.dim_v();
    let total = n + m;
    let mut prod = MultiMap::zero(total, total, 1);
    for i in 0..n {
        for j in 0..n {
            prod.value_mut(&[i, j])[..n].clone_from_slice(a.mul_basis(i, j));
        }
        for v in 0..m {
            let out = prod.value_mut(&[i, n + v]);
            for (w, slot) in out[n..].iter_mut().enumerate() {
                *slot = rep.rho[i][(w, v)].clone();
            }
            let out = prod.value_mut(&[n + v, i]);
            for (w, slot) in out[n..].iter_mut().enumerate() {
                *slot = rep.mu[i][(w, v)].clone();
            }
        }
    }
    Algebra::new(Kind::Unchecked, prod)
}

/// The semidirect product pre-Lie algebra `g ⋉ V`.
pub fn semidirect_product(a: &Algebra, rep: &Representation) -> Result<Algebra> {
    let v = check_representation(a, rep)?;
    if !v.holds {
        return Err(Error::pre(format!("invalid representation: {v}")));
    }
    let s = semidirect_product_unchecked(a, rep)?.with_kind(Kind::PreLie);
    require(
        check_pre_lie(&s),
        "semidirect product of a representation must be pre-Lie",
    )?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    pub(crate) fn a2() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::PreLie,
            &[(1, 0, vec![int(-1), int(0)]), (1, 1, vec![int(0), int(1)])],
        )
        .unwrap()
    }

    #[test]
    fn a2_is_pre_lie() {
        assert!(check_pre_lie(&a2()).holds);
        assert!(check_pre_lie(&Algebra::zero(3, Kind::PreLie)).holds);
    }

    #[test]
    fn witness_for_non_pre_lie() {
        let a = Algebra::from_entries(2, Kind::Unchecked, &[(0, 1, vec![int(1), int(0)])]).unwrap();
        let v = check_pre_lie(&a);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.at, vec![0, 1, 1]);
        assert_eq!(w.lhs, vec![int(1), int(0)]);
        assert_eq!(w.rhs, vec![int(0), int(0)]);
    }

    #[test]
    fn sub_adjacent_of_a2() {
        let l = sub_adjacent(&a2()).unwrap();
        assert_eq!(l.mul_basis(1, 0), &[int(-1), int(0)]);
        assert_eq!(l.mul_basis(0, 1), &[int(1), int(0)]);
        assert_eq!(l.mul_basis(1, 1), &[int(0), int(0)]);
        // A commutative pre-Lie product has abelian commutator.
        let c = Algebra::from_entries(1, Kind::PreLie, &[(0, 0, vec![int(1)])]).unwrap();
        assert!(sub_adjacent(&c).unwrap().product().is_zero());
    }

    #[test]
    fn sub_adjacent_rejects_non_pre_lie() {
        let a = Algebra::from_entries(2, Kind::Unchecked, &[(0, 1, vec![int(1), int(0)])]).unwrap();
        assert!(matches!(sub_adjacent(&a), Err(Error::Precondition(_))));
    }

    #[test]
    fn regular_and_dual_reps_of_a2() {
        let a = a2();
        let reg = regular_representation(&a);
        assert_eq!(reg.rho_basis()[1], Matrix::from_ints(&[[-1, 0], [0, 1]]));
        let dual = dual_representation(&a);
        assert_eq!(dual.rho_basis()[1].column(0), vec![int(1), int(0)]);
        assert!(check_representation(&a, &reg).unwrap().holds);
        assert!(check_representation(&a, &dual).unwrap().holds);
        assert!(check_representation(&a, &trivial_representation(&a, 1)).unwrap().holds);
    }

    #[test]
    fn left_left_is_not_a_representation() {
        let a = a2();
        let reg = regular_representation(&a);
        let bad = Representation::new(2, reg.rho_basis().to_vec(), reg.rho_basis().to_vec()).unwrap();
        let v = check_representation(&a, &bad).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().condition.contains("mu(x·y)"));
    }

    #[test]
    fn zero_algebra_reps_are_valid() {
        let z = Algebra::zero(2, Kind::PreLie);
        assert!(check_representation(&z, &regular_representation(&z)).unwrap().holds);
        assert!(check_representation(&z, &dual_representation(&z)).unwrap().holds);
        let s = semidirect_product(&z, &trivial_representation(&z, 3)).unwrap();
        assert_eq!(s.dim(), 5);
        assert!(s.product().is_zero());
    }

    #[test]
    fn semidirect_with_trivial_line() {
        let a = a2();
        let s = semidirect_product(&a, &trivial_representation(&a, 1)).unwrap();
        let expect = Algebra::from_entries(
            3,
            Kind::PreLie,
            &[
                (1, 0, vec![int(-1), int(0), int(0)]),
                (1, 1, vec![int(0), int(1), int(0)]),
            ],
        )
        .unwrap();
        assert_eq!(s.product(), expect.product());
    }

    #[test]
    fn semidirect_with_regular_is_pre_lie() {
        let a = a2();
        let s = semidirect_product(&a, &regular_representation(&a)).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_pre_lie(&s).holds);
    }

    #[test]
    fn representation_shape_errors() {
        let a = a2();
        let r = Representation::new(1, vec![Matrix::zeros(1, 1)], vec![Matrix::zeros(1, 1)]).unwrap();
        assert!(matches!(check_representation(&a, &r), Err(Error::Dimension(_))));
        assert!(Representation::new(2, vec![Matrix::zeros(1, 1)], vec![Matrix::zeros(1, 1)]).is_err());
    }

    #[test]
    fn lie_check() {
        let l = sub_adjacent(&a2()).unwrap();
        assert!(check_lie(&l).holds);
        assert!(!check_lie(&a2()).holds);
        assert!(!check_associative(&a2()).holds);
    }
}
