//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles recompute identities straight from structure constants and
//! never call the predicate they are checked against.

#![allow(dead_code)]

use num_traits::Zero;
use prelie::algebra::{check_pre_lie, Algebra, Kind};
use prelie::document::Document;
use prelie::linalg::{add_vec, sub_vec, Matrix, Vector};
use prelie::scalar::{frac, int, Scalar};
use prelie::tensor::{Cochain, MultiMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, sometimes a half.
pub fn small(rng: &mut impl Rng) -> Scalar {
    match rng.gen_range(0..10) {
        0 => frac(rng.gen_range(-3..=3), 2),
        _ => int(rng.gen_range(-2..=2)),
    }
}

/// Zero with probability `1 - density`, otherwise [`small`].
pub fn sparse(rng: &mut impl Rng, density: f64) -> Scalar {
    if rng.gen_bool(density) {
        small(rng)
    } else {
        Scalar::zero()
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| small(rng)).collect()).collect();
    Matrix::from_rows(data).unwrap()
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_product(rng: &mut impl Rng, n: usize, density: f64) -> Algebra {
    let table: Vec<Vec<Vector>> = (0..n)
        .map(|_| (0..n).map(|_| (0..n).map(|_| sparse(rng, density)).collect()).collect())
        .collect();
    Algebra::from_table(n, Kind::Unchecked, |i, j| table[i][j].clone())
}

/// Structure constants in the basis `f_j = P e_j`.
pub fn change_basis(a: &Algebra, p: &Matrix) -> Algebra {
    let inv = p.inverse().unwrap();
    Algebra::from_table(a.dim(), a.kind(), |i, j| inv.apply(&a.mul(&p.column(i), &p.column(j))))
}

pub fn fixture(name: &str) -> Document {
    prelie::fixtures::load(name).unwrap()
}

/// Every built-in pre-Lie algebra of dimension at most 4.
pub fn prelie_pool() -> Vec<Algebra> {
    prelie::fixtures::FIXTURES
        .iter()
        .map(|(name, _)| fixture(name).algebra)
        .filter(|a| a.dim() <= 4 && pre_lie_oracle(a))
        .map(|a| a.with_kind(Kind::PreLie))
        .collect()
}

/// A pool algebra in a random basis.
pub fn random_prelie(rng: &mut impl Rng, max_dim: usize) -> Algebra {
    let pool: Vec<Algebra> = prelie_pool().into_iter().filter(|a| a.dim() <= max_dim).collect();
    let a = &pool[rng.gen_range(0..pool.len())];
    let p = random_invertible(rng, a.dim());
    change_basis(a, &p)
}

/// A random map of degree `p` (`p + 1` arguments) made skew in the first
/// `p` arguments by antisymmetrizing pairs; `p ≤ 2`.
pub fn random_cochain(rng: &mut impl Rng, n: usize, m: usize, p: usize, density: f64) -> Cochain {
    assert!(p <= 2);
    let raw = MultiMap::from_fn(n, m, p, |_| (0..m).map(|_| sparse(rng, density)).collect());
    let map = if p == 2 {
        MultiMap::from_fn(n, m, 2, |t| sub_vec(raw.value(t), raw.value(&[t[1], t[0], t[2]])))
    } else {
        raw
    };
    Cochain::new(map).unwrap()
}

pub fn basis(n: usize, i: usize) -> Vector {
    prelie::linalg::basis_vector(n, i)
}

/// `(xy)z − x(yz) = (yx)z − y(xz)` on basis triples.
pub fn pre_lie_oracle(a: &Algebra) -> bool {
    let n = a.dim();
    let assoc = |i: usize, j: usize, k: usize| {
        let xy = a.mul(&basis(n, i), &basis(n, j));
        let yz = a.mul(&basis(n, j), &basis(n, k));
        sub_vec(&a.mul(&xy, &basis(n, k)), &a.mul(&basis(n, i), &yz))
    };
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| assoc(i, j, k) == assoc(j, i, k))))
}

/// `N(N(x)y + xN(y) − N(xy)) = N(x)N(y)` on basis pairs.
pub fn nijenhuis_oracle(a: &Algebra, n: &Matrix) -> bool {
    let d = a.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let (x, y) = (basis(d, i), basis(d, j));
            let (nx, ny) = (n.apply(&x), n.apply(&y));
            let inner = sub_vec(&add_vec(&a.mul(&nx, &y), &a.mul(&x, &ny)), &n.apply(&a.mul(&x, &y)));
            n.apply(&inner) == a.mul(&nx, &ny)
        })
    })
}

/// `R(x)R(y) = R(R(x)y + xR(y) + λxy)` on basis pairs.
pub fn rota_baxter_oracle(a: &Algebra, r: &Matrix, weight: &Scalar) -> bool {
    let d = a.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let (x, y) = (basis(d, i), basis(d, j));
            let (rx, ry) = (r.apply(&x), r.apply(&y));
            let xy: Vector = a.mul(&x, &y).iter().map(|c| c * weight).collect();
            let inner = add_vec(&add_vec(&a.mul(&rx, &y), &a.mul(&x, &ry)), &xy);
            r.apply(&inner) == a.mul(&rx, &ry)
        })
    })
}

/// `N(x)y + xN(y) − N(xy)` as a table.
pub fn deformed_table(a: &Algebra, n: &Matrix) -> Algebra {
    let d = a.dim();
    Algebra::from_table(d, Kind::Unchecked, |i, j| {
        let (x, y) = (basis(d, i), basis(d, j));
        sub_vec(
            &add_vec(&a.mul(&n.apply(&x), &y), &a.mul(&x, &n.apply(&y))),
            &n.apply(&a.mul(&x, &y)),
        )
    })
}

/// Pass-through for checks that should be run on pre-Lie inputs.
pub fn is_pre_lie(a: &Algebra) -> bool {
    check_pre_lie(a).holds
}
