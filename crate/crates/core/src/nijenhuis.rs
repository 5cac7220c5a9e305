//! Deformed products, Nijenhuis torsion, deformations and their
//! equivalence, and polynomials in an operator.

use num_traits::Zero;

use crate::algebra::{
    check_associative, check_lie, check_pre_lie, regular_representation, sub_adjacent_unchecked,
    Algebra, Kind,
};
use crate::cohomology::{is_cocycle, vanishes};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, sub_vec, Matrix, Vector};
use crate::scalar::{frac, Scalar};
use crate::tensor::{c_bracket, diamond, Arg, Cochain, MultiMap};
use crate::verdict::{check_identity, require, Verdict};

/// Sample parameters at which a polynomial identity in `t` is evaluated.
/// Both sides of the identities checked here have degree at most 3 in `t`,
/// so agreement at four distinct values forces agreement of polynomials.
pub const SAMPLE_T: [(i64, i64); 4] = [(1, 1), (-1, 1), (1, 2), (3, 1)];

fn sample_t() -> Vec<Scalar> {
    SAMPLE_T.iter().map(|&(p, q)| frac(p, q)).collect()
}

fn check_operator(a: &Algebra, n: &Matrix) -> Result<()> {
    if n.rows() != a.dim() || n.cols() != a.dim() {
        return Err(Error::dim(format!(
            "operator is {}x{}, algebra has dimension {}",
            n.rows(),
            n.cols(),
            a.dim()
        )));
    }
    Ok(())
}

/// Multiplies matrices through a product: `(x, y) ↦ π(Ax, By)`.
fn transform_args(p: &MultiMap, a: &Matrix, b: &Matrix) -> MultiMap {
    let cols_a: Vec<Vector> = (0..p.dim()).map(|j| a.column(j)).collect();
    let cols_b: Vec<Vector> = (0..p.dim()).map(|j| b.column(j)).collect();
    MultiMap::from_fn(p.dim(), p.codim(), 1, |t| {
        p.eval(&[Arg::Vector(&cols_a[t[0]]), Arg::Vector(&cols_b[t[1]])])
    })
}

/// `x ·_N y = N(x)·y + x·N(y) − N(x·y)`, which equals `[π, N]^C`.
pub fn deformed_product(a: &Algebra, n: &Matrix) -> Result<Cochain> {
    check_operator(a, n)?;
    let dim = a.dim();
    let nc: Vec<Vector> = (0..dim).map(|j| n.column(j)).collect();
    let pi = a.product();
    let map = MultiMap::from_fn(dim, dim, 1, |t| {
        let (i, j) = (t[0], t[1]);
        let s = add_vec(&pi.eval_at(&[j], 0, &nc[i]), &pi.eval_at(&[i], 1, &nc[j]));
        sub_vec(&s, &n.apply(a.mul_basis(i, j)))
    });
    Ok(Cochain::new_unchecked(map))
}

/// The algebra with product `·_N`, tagged unchecked.
pub fn deformed_algebra(a: &Algebra, n: &Matrix) -> Result<Algebra> {
    Algebra::new(Kind::Unchecked, deformed_product(a, n)?.into_map())
}

fn torsion_direct(a: &Algebra, n: &Matrix, pn: &Cochain) -> Cochain {
    let dim = a.dim();
    let nn = transform_args(a.product(), n, n);
    let map = MultiMap::from_fn(dim, dim, 1, |t| sub_vec(&n.apply(pn.value(t)), nn.value(t)));
    Cochain::new_unchecked(map)
}

/// `T(x,y) = N(x ·_N y) − N(x)·N(y)`, cross-checked against
/// `½([π, N⋄N]^C + [N, [π,N]^C]^C)`.
pub fn torsion(a: &Algebra, n: &Matrix) -> Result<Cochain> {
    let pn = deformed_product(a, n)?;
    let direct = torsion_direct(a, n, &pn);
    let nc = Cochain::from_operator(n);
    let pi = a.product();
    let via_bracket = &c_bracket(pi, &diamond(&nc, &nc)?)? + &c_bracket(&nc, &c_bracket(pi, &nc)?)?;
    if via_bracket.scale(&frac(1, 2)) != direct {
        return Err(Error::consistency("torsion formulas disagree"));
    }
    Ok(direct)
}

/// First basis pair where the torsion is nonzero, without cross-checks.
/// This is the inner loop of the grid search.
pub fn torsion_witness(a: &Algebra, n: &Matrix) -> Option<(usize, usize)> {
    let dim = a.dim();
    let nc: Vec<Vector> = (0..dim).map(|j| n.column(j)).collect();
    let pi = a.product();
    for i in 0..dim {
        for j in 0..dim {
            let nx_y = pi.eval_at(&[j], 0, &nc[i]);
            let x_ny = pi.eval_at(&[i], 1, &nc[j]);
            let pn = sub_vec(&add_vec(&nx_y, &x_ny), &n.apply(a.mul_basis(i, j)));
            let lhs = n.apply(&pn);
            let rhs = pi.eval(&[Arg::Vector(&nc[i]), Arg::Vector(&nc[j])]);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether the torsion vanishes.
///
/// When it does, the consequences are verified and a violation is reported
/// as a consistency error: `N` is a morphism `(g, ·_N) → (g, ·)`, `·_N` has
/// the kind of `·` (pre-Lie, Lie or associative), and for pre-Lie input `N`
/// is also Nijenhuis on the sub-adjacent Lie algebra with
/// `[x,y]_N = x ·_N y − y ·_N x`.
pub fn is_nijenhuis(a: &Algebra, n: &Matrix) -> Result<Verdict> {
    let t = torsion(a, n)?;
    let v = vanishes("Nijenhuis torsion N(x ·_N y) - N(x)·N(y) = 0", &t);
    if !v.holds {
        return Ok(v);
    }
    let pn = deformed_product(a, n)?;
    let deformed = Algebra::new(Kind::Unchecked, pn.clone().into_map())?;
    let dim = a.dim();
    let morphism = check_identity("N(x ·_N y) = N(x)·N(y)", dim, 2, |t| {
        let nx = n.column(t[0]);
        let ny = n.column(t[1]);
        (n.apply(pn.value(t)), a.mul(&nx, &ny))
    });
    require(morphism, "Nijenhuis operator must be a morphism from the deformed product")?;
    if check_pre_lie(a).holds {
        require(check_pre_lie(&deformed), "deformed product of a Nijenhuis operator must be pre-Lie")?;
        let lie = sub_adjacent_unchecked(a)?;
        require(
            vanishes("Nijenhuis torsion on the commutator", torsion(&lie, n)?.as_map()),
            "Nijenhuis operator must be Nijenhuis on the sub-adjacent Lie algebra",
        )?;
        let lie_n = deformed_product(&lie, n)?;
        let commutator = check_identity("[x,y]_N = x ·_N y - y ·_N x", dim, 2, |t| {
            (lie_n.value(t).to_vec(), sub_vec(pn.value(t), pn.value(&[t[1], t[0]])))
        });
        require(commutator, "deformed commutator must match the deformed bracket")?;
    }
    if check_lie(a).holds {
        require(check_lie(&deformed), "deformed bracket of a Nijenhuis operator must be Lie")?;
    }
    if check_associative(a).holds {
        require(
            check_associative(&deformed),
            "deformed product of a Nijenhuis operator must be associative",
        )?;
    }
    Ok(v)
}

fn product_plus(a: &Algebra, omega: &MultiMap, t: &Scalar) -> Result<Algebra> {
    let sum = a.product().try_add(&omega.scale(t))?;
    Algebra::new(Kind::Unchecked, sum)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformationReport {
    /// `δω = 0` for the regular representation.
    pub is_cocycle: Verdict,
    /// `[ω, ω]^C = 0`.
    pub is_square_zero: Verdict,
    pub is_deformation: bool,
}

fn check_bilinear(a: &Algebra, omega: &Cochain) -> Result<()> {
    if omega.degree() != 1 || omega.dim() != a.dim() || omega.codim() != a.dim() {
        return Err(Error::dim("deformation cochain must be a bilinear product on the algebra"));
    }
    Ok(())
}

/// Whether `π + tω` is a pre-Lie product for every `t`.
pub fn check_deformation(a: &Algebra, omega: &Cochain) -> Result<DeformationReport> {
    check_bilinear(a, omega)?;
    let cocycle = is_cocycle(a, &regular_representation(a), omega)?;
    let square = vanishes("[omega, omega]^C = 0", c_bracket(omega, omega)?.as_map());
    let is_deformation = cocycle.holds && square.holds;
    if is_deformation {
        for t in sample_t() {
            let pt = product_plus(a, omega, &t)?;
            require(check_pre_lie(&pt), "a deformation must be pre-Lie at every parameter")?;
        }
    }
    Ok(DeformationReport {
        is_cocycle: cocycle,
        is_square_zero: square,
        is_deformation,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    /// `ω − ω′ = x·N(y) + N(x)·y − N(x·y)`.
    pub exact: Verdict,
    /// `Nω(x,y) = ω′(x,Ny) + ω′(Nx,y) + Nx·Ny`.
    pub second_order: Verdict,
    /// `ω′(Nx, Ny) = 0`.
    pub third_order: Verdict,
    pub equivalent: bool,
}

/// Whether `Id + tN` intertwines `π + tω` and `π + tω′` for every `t`.
///
/// When the three equations hold, the intertwining identity itself is
/// evaluated at the sample parameters; its two sides are polynomials of
/// degree at most 3 in `t`, so four samples decide it.
pub fn check_equivalence(
    a: &Algebra,
    omega: &Cochain,
    omega_prime: &Cochain,
    n: &Matrix,
) -> Result<EquivalenceReport> {
    check_bilinear(a, omega)?;
    check_bilinear(a, omega_prime)?;
    check_operator(a, n)?;
    let dim = a.dim();
    let pn = deformed_product(a, n)?;
    let nc: Vec<Vector> = (0..dim).map(|j| n.column(j)).collect();
    let exact = check_identity("omega - omega' = dN", dim, 2, |t| {
        (sub_vec(omega.value(t), omega_prime.value(t)), pn.value(t).to_vec())
    });
    let second_order = check_identity(
        "N omega(x,y) = omega'(x,Ny) + omega'(Nx,y) + Nx·Ny",
        dim,
        2,
        |t| {
            let (i, j) = (t[0], t[1]);
            let rhs = add_vec(
                &add_vec(
                    &omega_prime.eval_at(&[i], 1, &nc[j]),
                    &omega_prime.eval_at(&[j], 0, &nc[i]),
                ),
                &a.mul(&nc[i], &nc[j]),
            );
            (n.apply(omega.value(t)), rhs)
        },
    );
    let zero = vec![Scalar::zero(); dim];
    let third_order = check_identity("omega'(Nx, Ny) = 0", dim, 2, |t| {
        (
            omega_prime.eval(&[Arg::Vector(&nc[t[0]]), Arg::Vector(&nc[t[1]])]),
            zero.clone(),
        )
    });
    let equivalent = exact.holds && second_order.holds && third_order.holds;
    if equivalent {
        for t in sample_t() {
            let phi = &Matrix::identity(dim) + &n.scale(&t);
            let src = product_plus(a, omega, &t)?;
            let dst = product_plus(a, omega_prime, &t)?;
            let dst_phi = transform_args(dst.product(), &phi, &phi);
            let v = check_identity("(Id+tN) pi_t(x,y) = pi'_t((Id+tN)x, (Id+tN)y)", dim, 2, |t| {
                (phi.apply(src.mul_basis(t[0], t[1])), dst_phi.value(t).to_vec())
            });
            require(v, "equivalence equations must give an intertwining family")?;
        }
    }
    Ok(EquivalenceReport {
        exact,
        second_order,
        third_order,
        equivalent,
    })
}

/// `Σ_k c_k N^{min_exp + k}`. Negative exponents need an invertible `N`.
pub fn operator_polynomial(n: &Matrix, min_exp: i32, coeffs: &[Scalar]) -> Result<Matrix> {
    if !n.is_square() {
        return Err(Error::dim("operator must be square"));
    }
    let dim = n.rows();
    let mut out = Matrix::zeros(dim, dim);
    if coeffs.iter().all(Zero::is_zero) {
        return Ok(out);
    }
    if min_exp < 0 && !n.is_invertible() {
        return Err(Error::Singular(
            "negative powers need an invertible operator".into(),
        ));
    }
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = min_exp + k as i32;
        out = &out + &n.powi(e)?.scale(c);
    }
    Ok(out)
}

/// `N^j x · N^k y − N^k(N^j x · y) − N^j(x · N^k y) + N^{j+k}(x·y) = 0`.
pub fn power_identity(a: &Algebra, n: &Matrix, j: i32, k: i32) -> Result<Verdict> {
    check_operator(a, n)?;
    let nj = n.powi(j)?;
    let nk = n.powi(k)?;
    let njk = n.powi(j + k)?;
    let dim = a.dim();
    let zero = vec![Scalar::zero(); dim];
    Ok(check_identity(
        "N^j x·N^k y - N^k(N^j x·y) - N^j(x·N^k y) + N^(j+k)(x·y) = 0",
        dim,
        2,
        |t| {
            let x = nj.column(t[0]);
            let y = nk.column(t[1]);
            let mut s = a.mul(&x, &y);
            s = sub_vec(&s, &nk.apply(&a.product().eval_at(&[t[1]], 0, &x)));
            s = sub_vec(&s, &nj.apply(&a.product().eval_at(&[t[0]], 1, &y)));
            s = add_vec(&s, &njk.apply(a.mul_basis(t[0], t[1])));
            (s, zero.clone())
        },
    ))
}

/// `[π + π_N, π + π_N]^C`, which vanishes for Nijenhuis `N`.
pub fn compatible_sum_square(a: &Algebra, n: &Matrix) -> Result<Cochain> {
    let sum = a.product() + &deformed_product(a, n)?;
    c_bracket(&sum, &sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::coboundary;
    use crate::scalar::int;

    fn a2() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::PreLie,
            &[(1, 0, vec![int(-1), int(0)]), (1, 1, vec![int(0), int(1)])],
        )
        .unwrap()
    }

    fn family(c: i64, d: i64) -> Matrix {
        Matrix::from_ints(&[[c, d], [0, c]])
    }

    #[test]
    fn deformed_product_of_family() {
        let pn = deformed_product(&a2(), &family(1, 1)).unwrap();
        assert_eq!(pn.value(&[1, 0]), &[int(-1), int(0)]);
        assert_eq!(pn.value(&[1, 1]), &[int(-2), int(1)]);
        let a = a2();
        assert_eq!(&deformed_product(&a, &Matrix::identity(2)).unwrap(), a.product());
        assert!(deformed_product(&a, &Matrix::zeros(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn torsion_examples() {
        let a = a2();
        let t = torsion(&a, &Matrix::from_ints(&[[0, 0], [1, 0]])).unwrap();
        assert_eq!(t.value(&[0, 0]), &[int(0), int(-2)]);
        assert!(torsion(&a, &Matrix::identity(2)).unwrap().is_zero());
        for (c, d) in [(1, 1), (-1, 2), (0, 1), (3, -1), (2, 0)] {
            assert!(torsion(&a, &family(c, d)).unwrap().is_zero(), "c={c} d={d}");
        }
    }

    #[test]
    fn nijenhuis_examples() {
        let a = a2();
        assert!(is_nijenhuis(&a, &family(1, 1)).unwrap().holds);
        let v = is_nijenhuis(&a, &Matrix::from_ints(&[[0, 0], [1, 0]])).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().at, vec![0, 0]);
        assert!(is_nijenhuis(&a, &Matrix::from_ints(&[[0, 1], [0, 0]])).unwrap().holds);
        assert_eq!(torsion_witness(&a, &Matrix::from_ints(&[[0, 0], [1, 0]])), Some((0, 0)));
        assert_eq!(torsion_witness(&a, &family(2, 3)), None);
    }

    #[test]
    fn trivial_deformation_from_nijenhuis() {
        let a = a2();
        let n = family(1, 1);
        let omega = coboundary(&a, &regular_representation(&a), &Cochain::from_operator(&n)).unwrap();
        assert!(check_deformation(&a, &omega).unwrap().is_deformation);
        let zero = Cochain::zero(2, 2, 1);
        assert!(check_equivalence(&a, &omega, &zero, &n).unwrap().equivalent);
    }

    #[test]
    fn product_is_its_own_deformation() {
        let a = a2();
        let r = check_deformation(&a, a.product()).unwrap();
        assert!(r.is_deformation);
    }

    #[test]
    fn symmetrized_product_report() {
        // ω(x,y) = x·y + y·x on A2, flags compared with direct brackets.
        let a = a2();
        let sym = Cochain::new_unchecked(MultiMap::from_fn(2, 2, 1, |t| {
            add_vec(a.mul_basis(t[0], t[1]), a.mul_basis(t[1], t[0]))
        }));
        let r = check_deformation(&a, &sym).unwrap();
        let closed = c_bracket(a.product(), &sym).unwrap().is_zero();
        let square = c_bracket(&sym, &sym).unwrap().is_zero();
        assert_eq!(r.is_cocycle.holds, closed);
        assert_eq!(r.is_square_zero.holds, square);
        assert_eq!(r.is_deformation, closed && square);
    }

    #[test]
    fn equivalence_with_zero_operator() {
        let a = a2();
        let w = a.product().clone();
        let r = check_equivalence(&a, &w, &w, &Matrix::zeros(2, 2)).unwrap();
        assert!(r.equivalent);
    }

    #[test]
    fn non_nijenhuis_gives_no_trivial_deformation() {
        let a = a2();
        let n = Matrix::from_ints(&[[0, 0], [1, 0]]);
        let omega = deformed_product(&a, &n).unwrap();
        let zero = Cochain::zero(2, 2, 1);
        let r = check_equivalence(&a, &omega, &zero, &n).unwrap();
        assert!(r.exact.holds);
        assert!(!r.second_order.holds);
        assert!(!r.equivalent);
    }

    #[test]
    fn polynomials_of_the_family() {
        let n = family(1, 1);
        let sq = operator_polynomial(&n, 0, &[int(0), int(0), int(1)]).unwrap();
        assert_eq!(sq, family(1, 2));
        assert_eq!(operator_polynomial(&n, 0, &[int(1)]).unwrap(), Matrix::identity(2));
        let inv = operator_polynomial(&n, -1, &[int(1)]).unwrap();
        assert_eq!(inv, family(1, -1));
        let a = a2();
        assert!(is_nijenhuis(&a, &sq).unwrap().holds);
        assert!(is_nijenhuis(&a, &inv).unwrap().holds);
        let singular = Matrix::from_ints(&[[0, 1], [0, 0]]);
        assert!(matches!(operator_polynomial(&singular, -1, &[int(1)]), Err(Error::Singular(_))));
    }

    #[test]
    fn power_identity_on_family() {
        let a = a2();
        let n = family(2, 1);
        for j in -2..=3 {
            for k in -2..=3 {
                assert!(power_identity(&a, &n, j, k).unwrap().holds, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn operator_shape_error() {
        assert!(matches!(deformed_product(&a2(), &Matrix::identity(3)), Err(Error::Dimension(_))));
    }
}
