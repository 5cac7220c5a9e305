//! Recipes that produce pre-Lie and Novikov algebras from other data, and
//! how Nijenhuis operators pass through them.
//!
//! - `x ·^r y = [r(x), y]` from a solution of the operator form of the
//!   classical Yang-Baxter equation on a Lie algebra.
//! - `x ·^a y = ⟨x,y⟩a + ⟨x,a⟩y` from a scalar product (the Burgers product).
//! - `x ·^R y = R(x)∗y − y∗R(x) − x∗y` from a Rota-Baxter type operator on an
//!   associative algebra.
//! - `x ·^s y = x∗D(y) + s x∗y` and `x ·^α y = x∗D(y) + α∗x∗y` from a
//!   derivation of a commutative associative algebra.

use crate::algebra::{check_associative, check_lie, check_pre_lie, sub_adjacent, Algebra, Kind};
use crate::cohomology::vanishes;
use crate::error::{Error, Result};
use crate::linalg::{add_vec, dot, scale_vec, sub_vec, Matrix, Vector};
use crate::nijenhuis::{deformed_product, is_nijenhuis, torsion};
use crate::scalar::Scalar;
use crate::verdict::{check_identity, require, Verdict};

/// Named verdicts for the separate claims of a statement.
#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub items: Vec<(String, Verdict)>,
}

impl PropositionReport {
    fn new() -> Self {
        PropositionReport { items: Vec::new() }
    }

    fn push(&mut self, name: &str, v: Verdict) {
        self.items.push((name.to_string(), v));
    }

    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|(_, v)| v.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

fn check_operator(a: &Algebra, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::dim(format!("{what} does not match the algebra dimension {}", a.dim())));
    }
    Ok(())
}

fn require_lie(a: &Algebra) -> Result<()> {
    let v = check_lie(a);
    if !v.holds {
        return Err(Error::pre(format!("not a Lie algebra: {v}")));
    }
    Ok(())
}

fn require_associative(a: &Algebra) -> Result<()> {
    let v = check_associative(a);
    if !v.holds {
        return Err(Error::pre(format!("not an associative algebra: {v}")));
    }
    Ok(())
}

fn require_commuting(x: &Matrix, y: &Matrix, what: &str) -> Result<()> {
    if x * y != y * x {
        return Err(Error::pre(format!("{what} must commute")));
    }
    Ok(())
}

fn require_nijenhuis(a: &Algebra, n: &Matrix) -> Result<()> {
    let v = is_nijenhuis(a, n)?;
    if !v.holds {
        return Err(Error::pre(format!("operator is not Nijenhuis: {v}")));
    }
    Ok(())
}

fn same_product(name: &str, a: &Algebra, b: &Algebra) -> Verdict {
    check_identity(name, a.dim(), 2, |t| {
        (a.mul_basis(t[0], t[1]).to_vec(), b.mul_basis(t[0], t[1]).to_vec())
    })
}

fn nijenhuis_verdict(a: &Algebra, n: &Matrix) -> Result<Verdict> {
    Ok(vanishes("Nijenhuis torsion vanishes", torsion(a, n)?.as_map()))
}

/// The deformed product `x ∗_N y = N(x)∗y + x∗N(y) − N(x∗y)` of an
/// associative algebra by a Nijenhuis operator; it is again associative.
pub fn deformed_associative(assoc: &Algebra, n: &Matrix) -> Result<Algebra> {
    require_associative(assoc)?;
    check_operator(assoc, n, "operator")?;
    require_nijenhuis(assoc, n)?;
    let a = Algebra::new(Kind::Associative, deformed_product(assoc, n)?.into_map())?;
    require(check_associative(&a), "deformed product must be associative")?;
    Ok(a)
}

/// `[r(x), r(y)] = r([r(x), y] + [x, r(y)])` on all basis pairs.
pub fn satisfies_cybe(lie: &Algebra, r: &Matrix) -> Verdict {
    let dim = lie.dim();
    check_identity("[r(x),r(y)] = r([r(x),y] + [x,r(y)])", dim, 2, |t| {
        let rx = r.column(t[0]);
        let ry = r.column(t[1]);
        let x = crate::linalg::basis_vector(dim, t[0]);
        let y = crate::linalg::basis_vector(dim, t[1]);
        let inner = add_vec(&lie.mul(&rx, &y), &lie.mul(&x, &ry));
        (lie.mul(&rx, &ry), r.apply(&inner))
    })
}

fn cybe_product(lie: &Algebra, r: &Matrix) -> Algebra {
    Algebra::from_table(lie.dim(), Kind::PreLie, |i, j| {
        lie.mul(&r.column(i), &crate::linalg::basis_vector(lie.dim(), j))
    })
}

/// `x ·^r y = [r(x), y]`.
pub fn prelie_from_cybe(lie: &Algebra, r: &Matrix) -> Result<Algebra> {
    require_lie(lie)?;
    check_operator(lie, r, "operator")?;
    let v = satisfies_cybe(lie, r);
    if !v.holds {
        return Err(Error::pre(format!("operator does not solve the Yang-Baxter equation: {v}")));
    }
    let a = cybe_product(lie, r);
    require(check_pre_lie(&a), "Yang-Baxter product must be pre-Lie")?;
    Ok(a)
}

/// For `r` solving the Yang-Baxter equation and `N` Nijenhuis on the Lie
/// algebra with `N r = r N`: `r` solves it for `[·,·]_N`, `N` is Nijenhuis
/// on `·^r`, and `x ·^r_N y = [r(x), y]_N`.
pub fn cybe_nijenhuis(lie: &Algebra, r: &Matrix, n: &Matrix) -> Result<PropositionReport> {
    let a = prelie_from_cybe(lie, r)?;
    check_operator(lie, n, "operator")?;
    require_nijenhuis(lie, n)?;
    require_commuting(n, r, "N and r")?;
    let lie_n = Algebra::new(Kind::Lie, deformed_product(lie, n)?.into_map())?;
    let mut report = PropositionReport::new();
    report.push("r solves the Yang-Baxter equation for the deformed bracket", satisfies_cybe(&lie_n, r));
    report.push("N is Nijenhuis on the Yang-Baxter product", nijenhuis_verdict(&a, n)?);
    let deformed = Algebra::new(Kind::Unchecked, deformed_product(&a, n)?.into_map())?;
    report.push(
        "deformed Yang-Baxter product is [r(x), y]_N",
        same_product("x ·_N y = [r(x), y]_N", &deformed, &cybe_product(&lie_n, r)),
    );
    Ok(report)
}

/// `R(x)∗R(y) + R(x∗y) = R(R(x)∗y + x∗R(y))` on all basis pairs.
pub fn satisfies_rb_identity(assoc: &Algebra, r: &Matrix) -> Verdict {
    let dim = assoc.dim();
    check_identity("R(x)*R(y) + R(x*y) = R(R(x)*y + x*R(y))", dim, 2, |t| {
        let rx = r.column(t[0]);
        let ry = r.column(t[1]);
        let x = crate::linalg::basis_vector(dim, t[0]);
        let y = crate::linalg::basis_vector(dim, t[1]);
        let lhs = add_vec(&assoc.mul(&rx, &ry), &r.apply(assoc.mul_basis(t[0], t[1])));
        let inner = add_vec(&assoc.mul(&rx, &y), &assoc.mul(&x, &ry));
        (lhs, r.apply(&inner))
    })
}

fn rb_product(assoc: &Algebra, r: &Matrix) -> Algebra {
    let dim = assoc.dim();
    Algebra::from_table(dim, Kind::PreLie, |i, j| {
        let rx = r.column(i);
        let y = crate::linalg::basis_vector(dim, j);
        let s = sub_vec(&assoc.mul(&rx, &y), &assoc.mul(&y, &rx));
        sub_vec(&s, assoc.mul_basis(i, j))
    })
}

/// `x ·^R y = R(x)∗y − y∗R(x) − x∗y`.
pub fn prelie_from_rb_assoc(assoc: &Algebra, r: &Matrix) -> Result<Algebra> {
    require_associative(assoc)?;
    check_operator(assoc, r, "operator")?;
    let v = satisfies_rb_identity(assoc, r);
    if !v.holds {
        return Err(Error::pre(format!("operator fails the Rota-Baxter identity: {v}")));
    }
    let a = rb_product(assoc, r);
    require(check_pre_lie(&a), "Rota-Baxter product must be pre-Lie")?;
    Ok(a)
}

/// For `R` as in [`prelie_from_rb_assoc`] and `N` Nijenhuis on `(g, ∗)` with
/// `R N = N R`: `R` satisfies the identity on `(g, ∗_N)`, `N` is Nijenhuis
/// on `·^R`, and `·^R_N` is the recipe applied to `(∗_N, R)`.
pub fn rb_assoc_nijenhuis(assoc: &Algebra, r: &Matrix, n: &Matrix) -> Result<PropositionReport> {
    let a = prelie_from_rb_assoc(assoc, r)?;
    check_operator(assoc, n, "operator")?;
    require_commuting(r, n, "R and N")?;
    let star_n = deformed_associative(assoc, n)?;
    let mut report = PropositionReport::new();
    report.push("R satisfies the Rota-Baxter identity on the deformed product", satisfies_rb_identity(&star_n, r));
    report.push("N is Nijenhuis on the Rota-Baxter product", nijenhuis_verdict(&a, n)?);
    let deformed = Algebra::new(Kind::Unchecked, deformed_product(&a, n)?.into_map())?;
    report.push(
        "deformed Rota-Baxter product is the recipe on the deformed product",
        same_product("x ·_N y = R(x)*_N y - y*_N R(x) - x*_N y", &deformed, &rb_product(&star_n, r)),
    );
    Ok(report)
}

fn burgers_unchecked(a: &[Scalar], g: &Matrix) -> Algebra {
    let n = a.len();
    Algebra::from_table(n, Kind::PreLie, |i, j| {
        let x = crate::linalg::basis_vector(n, i);
        let y = crate::linalg::basis_vector(n, j);
        let xy = dot(&x, &g.apply(&y));
        let xa = dot(&x, &g.apply(a));
        add_vec(&scale_vec(&xy, a), &scale_vec(&xa, &y))
    })
}

fn check_burgers_input(n: usize, a: &[Scalar], g: &Matrix) -> Result<()> {
    if a.len() != n || g.rows() != n || g.cols() != n {
        return Err(Error::dim("vector and scalar product must have dimension n"));
    }
    if !g.is_symmetric() {
        return Err(Error::pre("scalar product must be symmetric"));
    }
    if !g.is_invertible() {
        return Err(Error::pre("scalar product is degenerate"));
    }
    Ok(())
}

/// `x ·^a y = ⟨x,y⟩a + ⟨x,a⟩y` with `⟨x,y⟩ = x^T G y`.
pub fn burgers_prelie(n: usize, a: &[Scalar], g: &Matrix) -> Result<Algebra> {
    check_burgers_input(n, a, g)?;
    let p = burgers_unchecked(a, g);
    require(check_pre_lie(&p), "Burgers product must be pre-Lie")?;
    Ok(p)
}

/// Every operator is Nijenhuis on the commutator of a Burgers product.
pub fn burgers_lie_nijenhuis(a: &[Scalar], g: &Matrix, n: &Matrix) -> Result<Verdict> {
    let p = burgers_prelie(a.len(), a, g)?;
    check_operator(&p, n, "operator")?;
    let lie = sub_adjacent(&p)?;
    nijenhuis_verdict(&lie, n)
}

/// `⟨N(x), y⟩ = −⟨x, N(y)⟩`, i.e. `N^T G = −G N`.
pub fn is_g_skew(g: &Matrix, n: &Matrix) -> bool {
    &n.transpose() * g == (g * n).scale(&crate::scalar::int(-1))
}

/// For `G`-skew `N` on a Burgers product: `N` is Nijenhuis iff
/// `⟨Nx,Ny⟩a = −⟨x,y⟩N²(a)`, and `x ·^a_N y = −x ·^{N(a)} y`.
pub fn burgers_skew_nijenhuis(a: &[Scalar], g: &Matrix, n: &Matrix) -> Result<PropositionReport> {
    let p = burgers_prelie(a.len(), a, g)?;
    check_operator(&p, n, "operator")?;
    if !is_g_skew(g, n) {
        return Err(Error::pre("operator must be skew for the scalar product"));
    }
    let dim = a.len();
    let n2a = n.apply(&n.apply(a));
    let criterion = check_identity("<Nx,Ny>a = -<x,y>N^2(a)", dim, 2, |t| {
        let nx = n.column(t[0]);
        let ny = n.column(t[1]);
        let lhs = scale_vec(&dot(&nx, &g.apply(&ny)), a);
        let rhs = scale_vec(&-g.row(t[0])[t[1]].clone(), &n2a);
        (lhs, rhs)
    });
    let nij = nijenhuis_verdict(&p, n)?;
    let mut report = PropositionReport::new();
    report.push(
        "Nijenhuis iff the criterion holds",
        Verdict::from_bool(nij.holds == criterion.holds, "Nijenhuis iff <Nx,Ny>a = -<x,y>N^2(a)"),
    );
    report.push("criterion <Nx,Ny>a = -<x,y>N^2(a)", criterion);
    report.push("N is Nijenhuis on the Burgers product", nij);
    let deformed = Algebra::new(Kind::Unchecked, deformed_product(&p, n)?.into_map())?;
    let na = scale_vec(&crate::scalar::int(-1), &n.apply(a));
    report.push(
        "deformed Burgers product is the Burgers product of -N(a)",
        same_product("x ·^a_N y = -x ·^{N(a)} y", &deformed, &burgers_unchecked(&na, g)),
    );
    Ok(report)
}

fn require_commutative_associative(comm: &Algebra) -> Result<()> {
    require_associative(comm)?;
    let dim = comm.dim();
    let v = check_identity("x*y = y*x", dim, 2, |t| {
        (comm.mul_basis(t[0], t[1]).to_vec(), comm.mul_basis(t[1], t[0]).to_vec())
    });
    if !v.holds {
        return Err(Error::pre(format!("algebra is not commutative: {v}")));
    }
    Ok(())
}

/// `D(x∗y) = D(x)∗y + x∗D(y)` on all basis pairs.
pub fn is_derivation(a: &Algebra, d: &Matrix) -> Verdict {
    let dim = a.dim();
    check_identity("D(x*y) = D(x)*y + x*D(y)", dim, 2, |t| {
        let x = crate::linalg::basis_vector(dim, t[0]);
        let y = crate::linalg::basis_vector(dim, t[1]);
        let rhs = add_vec(&a.mul(&d.column(t[0]), &y), &a.mul(&x, &d.column(t[1])));
        (d.apply(a.mul_basis(t[0], t[1])), rhs)
    })
}

/// `R_x R_y = R_y R_x` for all basis pairs.
pub fn check_novikov(a: &Algebra) -> Verdict {
    let dim = a.dim();
    let rights: Vec<Matrix> = (0..dim).map(|i| a.right_basis(i)).collect();
    check_identity("R_x R_y = R_y R_x", dim, 2, |t| {
        let lhs = &rights[t[0]] * &rights[t[1]];
        let rhs = &rights[t[1]] * &rights[t[0]];
        (lhs.entries().to_vec(), rhs.entries().to_vec())
    })
}

fn novikov_product(comm: &Algebra, d: &Matrix, s: &Scalar, alpha: Option<&[Scalar]>) -> Algebra {
    let dim = comm.dim();
    Algebra::from_table(dim, Kind::PreLie, |i, j| {
        let x = crate::linalg::basis_vector(dim, i);
        let first = comm.mul(&x, &d.column(j));
        let second = match alpha {
            Some(al) => comm.mul(al, comm.mul_basis(i, j)),
            None => scale_vec(s, comm.mul_basis(i, j)),
        };
        add_vec(&first, &second)
    })
}

fn check_derivation_input(comm: &Algebra, d: &Matrix) -> Result<()> {
    require_commutative_associative(comm)?;
    check_operator(comm, d, "derivation")?;
    let v = is_derivation(comm, d);
    if !v.holds {
        return Err(Error::pre(format!("not a derivation: {v}")));
    }
    Ok(())
}

fn finish_novikov(a: Algebra) -> Result<Algebra> {
    require(check_pre_lie(&a), "derivation product must be pre-Lie")?;
    require(check_novikov(&a), "derivation product must be Novikov")?;
    Ok(a)
}

/// `x ·^s y = x∗D(y) + s x∗y`, a Novikov algebra.
pub fn novikov_from_derivation(comm: &Algebra, d: &Matrix, s: &Scalar) -> Result<Algebra> {
    check_derivation_input(comm, d)?;
    finish_novikov(novikov_product(comm, d, s, None))
}

/// `x ·^α y = x∗D(y) + α∗x∗y`, a Novikov algebra.
pub fn novikov_from_derivation_with(comm: &Algebra, d: &Matrix, alpha: &[Scalar]) -> Result<Algebra> {
    check_derivation_input(comm, d)?;
    if alpha.len() != comm.dim() {
        return Err(Error::dim("element does not match the algebra dimension"));
    }
    finish_novikov(novikov_product(comm, d, &crate::scalar::zero(), Some(alpha)))
}

fn novikov_report(
    comm: &Algebra,
    d: &Matrix,
    n: &Matrix,
    s: &Scalar,
    alpha: Option<&[Scalar]>,
    report: &mut PropositionReport,
) -> Result<()> {
    let a = novikov_product(comm, d, s, alpha);
    let star_n = deformed_associative(comm, n)?;
    report.push("D is a derivation of the deformed product", is_derivation(&star_n, d));
    report.push("N is Nijenhuis on the derivation product", nijenhuis_verdict(&a, n)?);
    let deformed = Algebra::new(Kind::Unchecked, deformed_product(&a, n)?.into_map())?;
    // The α-term keeps the original product outside: α∗(x ∗_N y).
    let recipe = match alpha {
        None => novikov_product(&star_n, d, s, None),
        Some(al) => Algebra::from_table(comm.dim(), Kind::Unchecked, |i, j| {
            let x = crate::linalg::basis_vector(comm.dim(), i);
            add_vec(&star_n.mul(&x, &d.column(j)), &comm.mul(al, star_n.mul_basis(i, j)))
        }),
    };
    report.push(
        "deformed derivation product is the recipe on the deformed product",
        same_product("x ·_N y = x *_N D(y) + s x *_N y", &deformed, &recipe),
    );
    Ok(())
}

/// For a derivation `D` and a Nijenhuis `N` on `(g, ∗)` with `D N = N D`:
/// `D` is a derivation of `∗_N`, `N` is Nijenhuis on `·^s`, and `·^s_N` is
/// the recipe applied to `(∗_N, D, s)`.
pub fn novikov_nijenhuis(comm: &Algebra, d: &Matrix, s: &Scalar, n: &Matrix) -> Result<PropositionReport> {
    novikov_from_derivation(comm, d, s)?;
    check_operator(comm, n, "operator")?;
    require_commuting(d, n, "D and N")?;
    let mut report = PropositionReport::new();
    novikov_report(comm, d, n, s, None, &mut report)?;
    Ok(report)
}

/// The same three claims for `·^α`, under the additional hypothesis
/// `N(α∗x∗y) = α∗N(x∗y)`, which is reported as the first item. The other
/// items are evaluated whether or not it holds.
pub fn novikov_nijenhuis_with(comm: &Algebra, d: &Matrix, alpha: &[Scalar], n: &Matrix) -> Result<PropositionReport> {
    novikov_from_derivation_with(comm, d, alpha)?;
    check_operator(comm, n, "operator")?;
    require_commuting(d, n, "D and N")?;
    let dim = comm.dim();
    let hypothesis = check_identity("N(a*x*y) = a*N(x*y)", dim, 2, |t| {
        let xy = comm.mul_basis(t[0], t[1]);
        (n.apply(&comm.mul(alpha, xy)), comm.mul(alpha, &n.apply(xy)))
    });
    let mut report = PropositionReport::new();
    report.push("hypothesis N(a*x*y) = a*N(x*y)", hypothesis);
    novikov_report(comm, d, n, &crate::scalar::zero(), Some(alpha), &mut report)?;
    Ok(report)
}

/// Truncated polynomials `K[x]/(x^n)` with basis `1, x, …, x^{n−1}`.
pub fn truncated_polynomials(n: usize) -> Algebra {
    Algebra::from_table(n, Kind::Associative, |i, j| {
        let mut v: Vector = vec![crate::scalar::zero(); n];
        if i + j < n {
            v[i + j] = crate::scalar::one();
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;
    use crate::scalar::{frac, int};

    fn lie_ab() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::Lie,
            &[(0, 1, vec![int(0), int(1)]), (1, 0, vec![int(0), int(-1)])],
        )
        .unwrap()
    }

    fn assoc2() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::Associative,
            &[(0, 0, vec![int(1), int(0)]), (0, 1, vec![int(0), int(1)])],
        )
        .unwrap()
    }

    fn diag(v: &[i64]) -> Matrix {
        Matrix::diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn cybe_examples() {
        let a = prelie_from_cybe(&lie_ab(), &diag(&[1, 0])).unwrap();
        let expected = Algebra::from_entries(2, Kind::PreLie, &[(0, 1, vec![int(0), int(1)])]).unwrap();
        assert_eq!(a.product(), expected.product());
        assert!(prelie_from_cybe(&lie_ab(), &Matrix::zeros(2, 2)).unwrap().product().is_zero());
        let abelian = Algebra::zero(2, Kind::Lie);
        let r = Matrix::from_ints(&[[1, 2], [3, 4]]);
        assert!(prelie_from_cybe(&abelian, &r).unwrap().product().is_zero());
        assert!(matches!(prelie_from_cybe(&lie_ab(), &diag(&[0, 1])), Err(Error::Precondition(_))));
    }

    #[test]
    fn cybe_nijenhuis_report() {
        let rep = cybe_nijenhuis(&lie_ab(), &diag(&[1, 0]), &diag(&[2, 5])).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        let not_commuting = Matrix::from_ints(&[[1, 1], [0, 1]]);
        assert!(cybe_nijenhuis(&lie_ab(), &diag(&[1, 0]), &not_commuting).is_err());
    }

    #[test]
    fn rb_assoc_examples() {
        let a = prelie_from_rb_assoc(&assoc2(), &diag(&[1, 0])).unwrap();
        let expected = Algebra::from_entries(2, Kind::PreLie, &[(0, 0, vec![int(-1), int(0)])]).unwrap();
        assert_eq!(a.product(), expected.product());
        let id = prelie_from_rb_assoc(&assoc2(), &Matrix::identity(2)).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(id.mul_basis(i, j), scale_vec(&int(-1), assoc2().mul_basis(j, i)));
            }
        }
        let zero = prelie_from_rb_assoc(&assoc2(), &Matrix::zeros(2, 2)).unwrap();
        assert_eq!(zero.product(), &-assoc2().product().clone());
    }

    #[test]
    fn rb_assoc_nijenhuis_report() {
        for (x, y) in [(2, 3), (-1, 4), (0, 1)] {
            let rep = rb_assoc_nijenhuis(&assoc2(), &diag(&[1, 0]), &diag(&[x, y])).unwrap();
            assert!(rep.all_hold(), "{rep:?}");
        }
    }

    #[test]
    fn burgers_examples() {
        let p = burgers_prelie(2, &basis_vector(2, 0), &Matrix::identity(2)).unwrap();
        assert_eq!(p.mul_basis(0, 0), &[int(2), int(0)]);
        assert_eq!(p.mul_basis(0, 1), &[int(0), int(1)]);
        assert_eq!(p.mul_basis(1, 1), &[int(1), int(0)]);
        assert_eq!(p.mul_basis(1, 0), &[int(0), int(0)]);
        assert!(burgers_prelie(2, &[int(0), int(0)], &Matrix::identity(2)).unwrap().product().is_zero());
        let one = burgers_prelie(1, &[int(1)], &Matrix::identity(1)).unwrap();
        assert_eq!(one.mul_basis(0, 0), &[int(2)]);
        assert!(burgers_prelie(2, &basis_vector(2, 0), &Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn burgers_rotation() {
        let rot = Matrix::from_ints(&[[0, -1], [1, 0]]);
        let a = basis_vector(2, 0);
        let rep = burgers_skew_nijenhuis(&a, &Matrix::identity(2), &rot).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        assert!(burgers_lie_nijenhuis(&a, &Matrix::identity(2), &Matrix::from_ints(&[[1, 2], [3, 4]])).unwrap().holds);
        assert!(burgers_skew_nijenhuis(&a, &Matrix::identity(2), &Matrix::identity(2)).is_err());
        // A G-skew operator where the criterion fails and so does the Nijenhuis condition.
        let g = Matrix::identity(3);
        let k = Matrix::from_ints(&[[0, -1, 0], [1, 0, 0], [0, 0, 0]]);
        let rep = burgers_skew_nijenhuis(&basis_vector(3, 2), &g, &k).unwrap();
        assert!(rep.get("Nijenhuis iff the criterion holds").unwrap().holds);
        assert!(!rep.get("criterion <Nx,Ny>a = -<x,y>N^2(a)").unwrap().holds);
    }

    fn euler(n: usize) -> Matrix {
        Matrix::diagonal(&(0..n).map(|i| int(i as i64)).collect::<Vec<_>>())
    }

    #[test]
    fn novikov_examples() {
        let comm = truncated_polynomials(3);
        let d = euler(3);
        let a = novikov_from_derivation(&comm, &d, &int(0)).unwrap();
        assert_eq!(a.mul_basis(1, 1), &[int(0), int(0), int(1)]);
        assert_eq!(a.mul_basis(0, 2), &[int(0), int(0), int(2)]);
        assert_eq!(a.mul_basis(1, 2), &[int(0), int(0), int(0)]);
        let d_dx = Matrix::from_ints(&[[0, 1, 0], [0, 0, 2], [0, 0, 0]]);
        assert!(!is_derivation(&comm, &d_dx).holds);
        assert!(matches!(novikov_from_derivation(&comm, &d_dx, &int(0)), Err(Error::Precondition(_))));
        let s1 = novikov_from_derivation(&comm, &Matrix::zeros(3, 3), &int(1)).unwrap();
        assert_eq!(s1.product(), comm.product());
        let z = Algebra::zero(2, Kind::Associative);
        assert!(novikov_from_derivation(&z, &Matrix::identity(2), &frac(7, 3)).unwrap().product().is_zero());
    }

    #[test]
    fn novikov_nijenhuis_report() {
        let comm = truncated_polynomials(3);
        for s in [int(0), int(1), frac(-2, 3)] {
            let rep = novikov_nijenhuis(&comm, &euler(3), &s, &Matrix::scalar(3, int(2))).unwrap();
            assert!(rep.all_hold(), "{rep:?}");
        }
    }

    #[test]
    fn novikov_variant_report() {
        let comm = truncated_polynomials(3);
        let alpha = basis_vector(3, 1);
        let rep = novikov_nijenhuis_with(&comm, &euler(3), &alpha, &Matrix::scalar(3, int(2))).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
    }

    #[test]
    fn deformed_associative_product() {
        let a = deformed_associative(&assoc2(), &diag(&[2, 3])).unwrap();
        assert_eq!(a.mul_basis(0, 0), &[int(2), int(0)]);
        // x*y = x_1 y, so every operator is Nijenhuis here.
        assert!(deformed_associative(&assoc2(), &Matrix::from_ints(&[[0, 1], [1, 0]])).is_ok());
        let d_dx = Matrix::from_ints(&[[0, 1, 0], [0, 0, 2], [0, 0, 0]]);
        assert!(matches!(deformed_associative(&truncated_polynomials(3), &d_dx), Err(Error::Precondition(_))));
    }
}
