//! Coboundary operators of pre-Lie cohomology with coefficients in a
//! representation, plus the Hochschild and Lie 2-cocycle checks.

use num_traits::Zero;

use crate::algebra::{
    check_associative, check_lie, check_pre_lie, check_representation, regular_representation,
    Algebra, RepOrigin, Representation,
};
use crate::error::{Error, Result};
use crate::linalg::{sub_vec, Matrix, Vector};
use crate::scalar::{one, sign, Scalar};
use crate::tensor::{c_bracket, gerstenhaber_bracket, guard, Cochain, MultiMap};
use crate::verdict::{check_identity, Verdict};

fn accumulate(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

fn without(x: &[usize], skip: &[usize]) -> Vec<usize> {
    x.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &v)| v)
        .collect()
}

/// Coboundary `d φ` of a `V`-valued cochain of stored degree `p`
/// (`p + 1` arguments) for the representation `rep`.
///
/// For the regular representation the result is also computed as
/// `(−1)^p [π, φ]^C` and the two must agree.
pub fn coboundary(a: &Algebra, rep: &Representation, phi: &Cochain) -> Result<Cochain> {
    let n = a.dim();
    if phi.dim() != n {
        return Err(Error::dim(format!(
            "cochain is defined on dimension {}, algebra has dimension {n}",
            phi.dim()
        )));
    }
    if phi.codim() != rep.dim_v() {
        return Err(Error::dim(format!(
            "cochain takes values in dimension {}, representation space has dimension {}",
            phi.codim(),
            rep.dim_v()
        )));
    }
    let p = phi.degree();
    guard(n, p + 1)?;
    let pre_lie = check_pre_lie(a);
    if !pre_lie.holds {
        return Err(Error::pre(format!("coboundary needs a pre-Lie algebra: {pre_lie}")));
    }
    let valid = check_representation(a, rep)?;
    if !valid.holds {
        return Err(Error::pre(format!("invalid representation: {valid}")));
    }
    let d = coboundary_formula(a, rep, phi);
    if rep.origin() == RepOrigin::Regular && *rep == regular_representation(a) {
        let via_bracket = c_bracket(a.product(), phi)?.scale(&sign(p));
        if via_bracket != d {
            return Err(Error::consistency(
                "coboundary disagrees with the bracket formula for the regular representation",
            ));
        }
    }
    Ok(d)
}

fn coboundary_formula(a: &Algebra, rep: &Representation, phi: &Cochain) -> Cochain {
    let dim = a.dim();
    let k = phi.arity();
    let m = rep.dim_v();
    let map = MultiMap::from_fn(dim, m, k, |x| {
        let last = x[k];
        let mut acc = vec![Scalar::zero(); m];
        for i in 0..k {
            let s = sign(i);
            let v = phi.value(&without(x, &[i]));
            accumulate(&mut acc, &s, &rep.rho_basis()[x[i]].apply(v));

            let mut args = without(&x[..k], &[i]);
            args.push(x[i]);
            let v = phi.value(&args);
            accumulate(&mut acc, &s, &rep.mu_basis()[last].apply(v));

            let prod = a.mul_basis(x[i], last);
            let v = phi.eval_at(&without(&x[..k], &[i]), k - 1, prod);
            accumulate(&mut acc, &-s, &v);
        }
        for i in 0..k {
            for j in i + 1..k {
                let br = sub_vec(a.mul_basis(x[i], x[j]), a.mul_basis(x[j], x[i]));
                let v = phi.eval_at(&without(x, &[i, j]), 0, &br);
                accumulate(&mut acc, &sign(i + j), &v);
            }
        }
        acc
    });
    Cochain::new_unchecked(map)
}

/// A pass verdict if `map` is zero, else the first nonzero value.
pub(crate) fn vanishes(condition: &str, map: &MultiMap) -> Verdict {
    let zero = vec![Scalar::zero(); map.codim()];
    check_identity(condition, map.dim(), map.arity(), |t| {
        (map.value(t).to_vec(), zero.clone())
    })
}

/// Whether `d φ = 0`.
pub fn is_cocycle(a: &Algebra, rep: &Representation, phi: &Cochain) -> Result<Verdict> {
    let d = coboundary(a, rep, phi)?;
    Ok(vanishes("cocycle condition d(phi) = 0", &d))
}

/// Explicit Hochschild coboundary of a multilinear map on an associative
/// algebra:
/// `x_1 P(x_2..) + Σ_i (−1)^i P(.., x_i x_{i+1}, ..) + (−1)^{k+1} P(x_1..x_k) x_{k+1}`.
pub fn hochschild_coboundary(a: &Algebra, p_map: &MultiMap) -> Result<MultiMap> {
    let v = check_associative(a);
    if !v.holds {
        return Err(Error::pre(format!("Hochschild coboundary needs an associative algebra: {v}")));
    }
    let n = a.dim();
    if p_map.dim() != n || p_map.codim() != n {
        return Err(Error::dim("map must be an endomorphism-valued map on the algebra"));
    }
    let k = p_map.arity();
    guard(n, k)?;
    let prod = a.product();
    Ok(MultiMap::from_fn(n, n, k, |x| {
        let mut acc = prod.eval_at(&[x[0]], 1, p_map.value(&x[1..]));
        for i in 0..k {
            let mut args = x[..i].to_vec();
            args.extend_from_slice(&x[i + 2..]);
            let v = p_map.eval_at(&args, i, a.mul_basis(x[i], x[i + 1]));
            accumulate(&mut acc, &sign(i + 1), &v);
        }
        let tail = prod.eval_at(&[x[k]], 0, p_map.value(&x[..k]));
        accumulate(&mut acc, &sign(k + 1), &tail);
        acc
    }))
}

/// `(−1)^p [π, P]^G` for an associative product; agrees with
/// [`hochschild_coboundary`].
pub fn hochschild_via_bracket(a: &Algebra, p_map: &MultiMap) -> Result<MultiMap> {
    let g = gerstenhaber_bracket(a.product(), p_map)?;
    Ok(g.scale(&sign(p_map.degree())))
}

/// `ω([x,y],z) + ω([z,x],y) + ω([y,z],x) = 0` for a bilinear form
/// `ω(x,y) = x^T M y` on a Lie algebra.
pub fn is_lie_two_cocycle(lie: &Algebra, omega: &Matrix) -> Result<Verdict> {
    let n = lie.dim();
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::dim("form does not match the algebra dimension"));
    }
    let v = check_lie(lie);
    if !v.holds {
        return Err(Error::pre(format!("Lie 2-cocycle check needs a Lie algebra: {v}")));
    }
    let form = MultiMap::from_bilinear_form(omega);
    Ok(check_identity(
        "Lie 2-cocycle omega([x,y],z) + omega([z,x],y) + omega([y,z],x) = 0",
        n,
        3,
        |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let term = |a1: usize, b: usize, c: usize| form.eval_at(&[c], 0, lie.mul_basis(a1, b));
            let mut s: Vector = term(x, y, z);
            accumulate(&mut s, &one(), &term(z, x, y));
            accumulate(&mut s, &one(), &term(y, z, x));
            (s, vec![Scalar::zero()])
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_representation, trivial_representation, Kind};
    use crate::scalar::int;

    fn a2() -> Algebra {
        Algebra::from_entries(
            2,
            Kind::PreLie,
            &[(1, 0, vec![int(-1), int(0)]), (1, 1, vec![int(0), int(1)])],
        )
        .unwrap()
    }

    #[test]
    fn coboundary_of_identity_is_product() {
        let a = a2();
        let id = Cochain::from_operator(&Matrix::identity(2));
        let d = coboundary(&a, &regular_representation(&a), &id).unwrap();
        assert_eq!(&d, a.product());
    }

    #[test]
    fn hessian_form_is_closed() {
        let a = a2();
        let b = Matrix::from_ints(&[[0, 2], [2, 3]]);
        let phi = Cochain::new(MultiMap::from_bilinear_form(&b)).unwrap();
        let rep = trivial_representation(&a, 1);
        assert!(is_cocycle(&a, &rep, &phi).unwrap().holds);
        let bad = Cochain::new(MultiMap::from_bilinear_form(&Matrix::from_ints(&[[1, 0], [0, 0]]))).unwrap();
        assert!(!is_cocycle(&a, &rep, &bad).unwrap().holds);
    }

    #[test]
    fn d_squared_vanishes_for_operators() {
        let a = a2();
        let reg = regular_representation(&a);
        let n = Cochain::from_operator(&Matrix::from_ints(&[[1, 2], [3, 4]]));
        let d = coboundary(&a, &reg, &n).unwrap();
        assert!(is_cocycle(&a, &reg, &d).unwrap().holds);
        let dual = dual_representation(&a);
        let phi = Cochain::new(MultiMap::from_fn(2, 2, 1, |t| vec![int(t[0] as i64 + 1), int(t[1] as i64 - 1)])).unwrap();
        let d = coboundary(&a, &dual, &phi).unwrap();
        assert!(is_cocycle(&a, &dual, &d).unwrap().holds);
    }

    #[test]
    fn shape_errors() {
        let a = a2();
        let phi = Cochain::zero(2, 3, 1);
        assert!(matches!(coboundary(&a, &regular_representation(&a), &phi), Err(Error::Dimension(_))));
        let big = Cochain::zero(2, 2, 4);
        assert!(matches!(coboundary(&a, &regular_representation(&a), &big), Err(Error::Resource(_))));
    }

    #[test]
    fn hochschild_agrees_with_bracket() {
        // K[x]/(x^2) with basis 1, x.
        let a = Algebra::from_entries(
            2,
            Kind::Associative,
            &[(0, 0, vec![int(1), int(0)]), (0, 1, vec![int(0), int(1)]), (1, 0, vec![int(0), int(1)])],
        )
        .unwrap();
        let p = MultiMap::from_fn(2, 2, 1, |t| vec![int(t[0] as i64 * 2 - 1), int(t[1] as i64 + 3)]);
        assert_eq!(hochschild_coboundary(&a, &p).unwrap(), hochschild_via_bracket(&a, &p).unwrap());
        let n = MultiMap::from_operator(&Matrix::from_ints(&[[0, 1], [2, 5]]));
        assert_eq!(hochschild_coboundary(&a, &n).unwrap(), hochschild_via_bracket(&a, &n).unwrap());
    }
}
