//! Dense multilinear maps and the graded brackets built from them.
//!
//! A [`MultiMap`] of degree `p` takes `p + 1` arguments from an
//! `n`-dimensional space and returns a vector of a `m`-dimensional space.
//! Coefficients are stored densely: the entry for basis arguments
//! `(i_1, ..., i_{p+1})` and output coordinate `k` lives at
//! `((i_1 * n + i_2) * n + ... + i_{p+1}) * m + k`.
//!
//! A [`Cochain`] is a multimap that is skew-symmetric in its first `p`
//! arguments. Bilinear products are cochains of degree 1 and linear
//! operators are cochains of degree 0.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{factorial, sign, Scalar};
use crate::verdict::for_each_tuple;

/// Highest total degree accepted by the cochain kernels.
pub const MAX_DEGREE: usize = 4;
/// Highest dimension accepted by the cochain kernels.
pub const MAX_DIM: usize = 10;

pub(crate) fn guard(dim: usize, degree: usize) -> Result<()> {
    if degree > MAX_DEGREE {
        return Err(Error::Resource(format!(
            "degree {degree} exceeds the limit {MAX_DEGREE}"
        )));
    }
    if dim > MAX_DIM {
        return Err(Error::Resource(format!(
            "dimension {dim} exceeds the limit {MAX_DIM}"
        )));
    }
    Ok(())
}

/// One argument of a multilinear evaluation.
#[derive(Debug, Clone, Copy)]
pub enum Arg<'a> {
    Basis(usize),
    Vector(&'a [Scalar]),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiMap {
    dim: usize,
    codim: usize,
    arity: usize,
    coeffs: Vec<Scalar>,
}

impl std::fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MultiMap(dim={}, codim={}, degree={}, nonzero={})",
            self.dim,
            self.codim,
            self.degree(),
            self.coeffs.iter().filter(|c| !c.is_zero()).count()
        )
    }
}

impl MultiMap {
    pub fn zero(dim: usize, codim: usize, degree: usize) -> Self {
        let len = dim.pow(degree as u32 + 1) * codim;
        MultiMap {
            dim,
            codim,
            arity: degree + 1,
            coeffs: vec![Scalar::zero(); len],
        }
    }

    /// Builds a map from its values on basis tuples.
    pub fn from_fn(
        dim: usize,
        codim: usize,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> Vector,
    ) -> Self {
        let mut out = Self::zero(dim, codim, degree);
        let mut offset = 0;
        for_each_tuple(dim, degree + 1, |t| {
            let v = f(t);
            assert_eq!(v.len(), codim, "value has wrong length");
            for (k, x) in v.into_iter().enumerate() {
                out.coeffs[offset + k] = x;
            }
            offset += codim;
            true
        });
        out
    }

    /// Wraps a linear operator (column convention) as a degree-0 map.
    pub fn from_operator(m: &Matrix) -> Self {
        Self::from_fn(m.cols(), m.rows(), 0, |t| m.column(t[0]))
    }

    /// The matrix of a degree-0 map.
    pub fn to_operator(&self) -> Matrix {
        assert_eq!(self.arity, 1, "not a degree-0 map");
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.value(&[j]).to_vec()).collect();
        Matrix::from_columns(self.codim, &cols).expect("consistent shape")
    }

    /// Wraps a bilinear form `B(x, y) = x^T M y` as a scalar-valued map.
    pub fn from_bilinear_form(m: &Matrix) -> Self {
        Self::from_fn(m.rows(), 1, 1, |t| vec![m[(t[0], t[1])].clone()])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn degree(&self) -> usize {
        self.arity - 1
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arity);
        let mut o = 0;
        for &i in idx {
            debug_assert!(i < self.dim);
            o = o * self.dim + i;
        }
        o * self.codim
    }

    /// Value on basis arguments.
    pub fn value(&self, idx: &[usize]) -> &[Scalar] {
        let o = self.offset(idx);
        &self.coeffs[o..o + self.codim]
    }

    pub fn value_mut(&mut self, idx: &[usize]) -> &mut [Scalar] {
        let o = self.offset(idx);
        &mut self.coeffs[o..o + self.codim]
    }

    /// Multilinear evaluation on a mix of basis and general arguments.
    pub fn eval(&self, args: &[Arg<'_>]) -> Vector {
        assert_eq!(args.len(), self.arity, "wrong number of arguments");
        let mut out = vec![Scalar::zero(); self.codim];
        // Per argument: the list of (basis index, coefficient) it expands to.
        let expansions: Vec<Vec<(usize, Option<&Scalar>)>> = args
            .iter()
            .map(|a| match a {
                Arg::Basis(i) => vec![(*i, None)],
                Arg::Vector(v) => {
                    assert_eq!(v.len(), self.dim, "argument has wrong length");
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, Some(c)))
                        .collect()
                }
            })
            .collect();
        if expansions.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pick = vec![0usize; self.arity];
        let mut idx = vec![0usize; self.arity];
        loop {
            let mut weight: Option<Scalar> = None;
            for (slot, exp) in expansions.iter().enumerate() {
                let (i, c) = exp[pick[slot]];
                idx[slot] = i;
                if let Some(c) = c {
                    weight = Some(match weight {
                        None => c.clone(),
                        Some(w) => w * c,
                    });
                }
            }
            let val = self.value(&idx);
            for (o, v) in out.iter_mut().zip(val) {
                if v.is_zero() {
                    continue;
                }
                match &weight {
                    None => *o += v,
                    Some(w) => *o += v * w,
                }
            }
            let mut slot = self.arity;
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pick[slot] += 1;
                if pick[slot] < expansions[slot].len() {
                    break;
                }
                pick[slot] = 0;
            }
        }
    }

    /// Evaluation on basis arguments with one general vector at `pos`.
    pub fn eval_at(&self, basis: &[usize], pos: usize, v: &[Scalar]) -> Vector {
        let mut args: Vec<Arg<'_>> = basis.iter().map(|&i| Arg::Basis(i)).collect();
        args.insert(pos, Arg::Vector(v));
        self.eval(&args)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        MultiMap {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.dim, self.codim, self.arity) != (other.dim, other.codim, other.arity) {
            return Err(Error::dim(format!(
                "shapes (dim {}, codim {}, degree {}) and (dim {}, codim {}, degree {})",
                self.dim,
                self.codim,
                self.degree(),
                other.dim,
                other.codim,
                other.degree()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(MultiMap {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    /// Applies a linear map `codim -> k` to every value.
    pub fn post_compose(&self, m: &Matrix) -> Result<Self> {
        if m.cols() != self.codim {
            return Err(Error::dim("post-composition shape mismatch"));
        }
        Ok(Self::from_fn(self.dim, m.rows(), self.degree(), |t| {
            m.apply(self.value(t))
        }))
    }

    /// Whether swapping any two of the first `p` arguments negates the
    /// value. Returns the first offending pair of positions and tuple.
    pub fn skew_violation(&self) -> Option<(usize, usize, Vec<usize>)> {
        let p = self.degree();
        if p < 2 {
            return None;
        }
        let mut found = None;
        for_each_tuple(self.dim, self.arity, |t| {
            for a in 0..p {
                for b in a + 1..p {
                    if t[a] > t[b] {
                        continue;
                    }
                    let mut s = t.to_vec();
                    s.swap(a, b);
                    let lhs = self.value(t);
                    let rhs = self.value(&s);
                    let ok = lhs.iter().zip(rhs).all(|(x, y)| (x + y).is_zero());
                    if !ok {
                        found = Some((a, b, t.to_vec()));
                        return false;
                    }
                }
            }
            true
        });
        found
    }
}

impl Add for &MultiMap {
    type Output = MultiMap;

    fn add(self, rhs: &MultiMap) -> MultiMap {
        self.try_add(rhs).expect("shapes agree")
    }
}

impl Sub for &MultiMap {
    type Output = MultiMap;

    fn sub(self, rhs: &MultiMap) -> MultiMap {
        self.try_add(&-rhs.clone()).expect("shapes agree")
    }
}

impl Neg for MultiMap {
    type Output = MultiMap;

    fn neg(self) -> MultiMap {
        MultiMap {
            coeffs: self.coeffs.into_iter().map(|x| -x).collect(),
            ..self
        }
    }
}

/// A multimap skew-symmetric in its first `p` arguments.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cochain(MultiMap);

impl Cochain {
    /// Validates skew-symmetry of the leading arguments.
    pub fn new(map: MultiMap) -> Result<Self> {
        if let Some((a, b, t)) = map.skew_violation() {
            return Err(Error::NotSkew(format!(
                "swapping arguments {} and {} at {:?} does not negate the value",
                a + 1,
                b + 1,
                t
            )));
        }
        Ok(Cochain(map))
    }

    /// Wraps a map already known to be skew (degree ≤ 1 is always skew).
    pub(crate) fn new_unchecked(map: MultiMap) -> Self {
        Cochain(map)
    }

    pub fn zero(dim: usize, codim: usize, degree: usize) -> Self {
        Cochain(MultiMap::zero(dim, codim, degree))
    }

    pub fn from_operator(m: &Matrix) -> Self {
        Cochain(MultiMap::from_operator(m))
    }

    pub fn as_map(&self) -> &MultiMap {
        &self.0
    }

    pub fn into_map(self) -> MultiMap {
        self.0
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Cochain(self.0.scale(c))
    }
}

impl std::ops::Deref for Cochain {
    type Target = MultiMap;

    fn deref(&self) -> &MultiMap {
        &self.0
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    fn add(self, rhs: &Cochain) -> Cochain {
        Cochain(&self.0 + &rhs.0)
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        Cochain(&self.0 - &rhs.0)
    }
}

impl Neg for Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        Cochain(-self.0)
    }
}

/// Permutations of `0..k` paired with their signs.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, inversions % 2 == 1)
        })
        .collect()
}

fn binomial(p: usize, q: usize) -> Scalar {
    factorial(p + q) / (factorial(p) * factorial(q))
}

/// `P ∘ Q`: the sum over insertion slots of `Q` into `P`, with the sign
/// `(-1)^{(i-1) q}` for insertion at slot `i`.
pub fn compose_circle(p_map: &MultiMap, q_map: &MultiMap) -> Result<MultiMap> {
    if p_map.dim != q_map.dim || q_map.codim != q_map.dim {
        return Err(Error::dim(format!(
            "cannot compose: outer map on dim {}, inner map dim {} -> {}",
            p_map.dim, q_map.dim, q_map.codim
        )));
    }
    let (p, q) = (p_map.degree(), q_map.degree());
    guard(p_map.dim, p + q)?;
    let n = p_map.dim;
    Ok(MultiMap::from_fn(n, p_map.codim, p + q, |x| {
        let mut acc = vec![Scalar::zero(); p_map.codim];
        for i in 0..=p {
            let inner = q_map.value(&x[i..i + q + 1]);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            let mut outer_args: Vec<usize> = x[..i].to_vec();
            outer_args.extend_from_slice(&x[i + q + 1..]);
            let term = p_map.eval_at(&outer_args, i, inner);
            let s = sign(i * q);
            for (a, t) in acc.iter_mut().zip(term) {
                *a += &s * t;
            }
        }
        acc
    }))
}

/// `[P, Q]^G = P ∘ Q − (−1)^{pq} Q ∘ P`.
pub fn gerstenhaber_bracket(p_map: &MultiMap, q_map: &MultiMap) -> Result<MultiMap> {
    if p_map.codim != p_map.dim || q_map.codim != q_map.dim {
        return Err(Error::dim("Gerstenhaber bracket needs endomorphism-valued maps"));
    }
    let pq = compose_circle(p_map, q_map)?;
    let qp = compose_circle(q_map, p_map)?;
    let s = sign(p_map.degree() * q_map.degree());
    Ok(&pq - &qp.scale(&s))
}

/// Projection onto maps skew in the first `p` arguments:
/// `α(P)(x_1..x_{p+1}) = (1/p!) Σ_σ sgn(σ) P(x_σ(1)..x_σ(p), x_{p+1})`.
pub fn alternator(p_map: &MultiMap) -> Cochain {
    let p = p_map.degree();
    if p < 2 {
        return Cochain(p_map.clone());
    }
    let perms = signed_permutations(p);
    let norm = factorial(p).recip();
    let map = MultiMap::from_fn(p_map.dim, p_map.codim, p, |x| {
        let mut acc = vec![Scalar::zero(); p_map.codim];
        let mut y = x.to_vec();
        for (perm, odd) in &perms {
            for (slot, &src) in perm.iter().enumerate() {
                y[slot] = x[src];
            }
            for (a, v) in acc.iter_mut().zip(p_map.value(&y)) {
                if *odd {
                    *a -= v;
                } else {
                    *a += v;
                }
            }
        }
        acc.iter().map(|a| a * &norm).collect()
    });
    Cochain(map)
}

/// `P ⋄ Q = ((p+q)! / (p! q!)) α(P ∘ Q)`.
pub fn diamond(p_c: &Cochain, q_c: &Cochain) -> Result<Cochain> {
    let (p, q) = (p_c.degree(), q_c.degree());
    guard(p_c.dim(), p + q)?;
    let circ = compose_circle(p_c, q_c)?;
    Ok(alternator(&circ).scale(&binomial(p, q)))
}

/// `[P, Q]^C = ((p+q)! / (p! q!)) α([P, Q]^G)`.
pub fn c_bracket(p_c: &Cochain, q_c: &Cochain) -> Result<Cochain> {
    let (p, q) = (p_c.degree(), q_c.degree());
    guard(p_c.dim(), p + q)?;
    let g = gerstenhaber_bracket(p_c, q_c)?;
    Ok(alternator(&g).scale(&binomial(p, q)))
}

/// `P ⋄ Q` through the signed sum over shuffles instead of the projection.
/// Used only to cross-check [`diamond`]. Requires `p ≥ 1`.
pub fn diamond_expanded(p_c: &Cochain, q_c: &Cochain) -> Result<Cochain> {
    let (p, q) = (p_c.degree(), q_c.degree());
    if p == 0 {
        return Err(Error::pre("expanded diamond product needs p >= 1"));
    }
    if p_c.dim() != q_c.dim() || q_c.codim() != q_c.dim() {
        return Err(Error::dim("diamond operands disagree in dimension"));
    }
    guard(p_c.dim(), p + q)?;
    let n = p_c.dim();
    let k = p + q;
    let perms = signed_permutations(k);
    let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    let eps = sign(p * q);
    let map = MultiMap::from_fn(n, p_c.codim(), k, |x| {
        let last = x[k];
        let mut acc = vec![Scalar::zero(); p_c.codim()];
        for (perm, odd) in &perms {
            let sgn = if *odd { -Scalar::from_integer(1.into()) } else { Scalar::from_integer(1.into()) };
            let xs: Vec<usize> = perm.iter().map(|&i| x[i]).collect();
            if increasing(&perm[..q]) && increasing(&perm[q + 1..]) {
                let inner = q_c.value(&xs[..=q]).to_vec();
                let mut rest = xs[q + 1..].to_vec();
                rest.push(last);
                let term = p_c.eval_at(&rest, 0, &inner);
                for (a, t) in acc.iter_mut().zip(term) {
                    *a += &sgn * t;
                }
            }
            if increasing(&perm[..p]) && increasing(&perm[p..]) {
                let mut inner_args = xs[p..].to_vec();
                inner_args.push(last);
                let inner = q_c.value(&inner_args).to_vec();
                let term = p_c.eval_at(&xs[..p], p, &inner);
                for (a, t) in acc.iter_mut().zip(term) {
                    *a += &eps * &sgn * t;
                }
            }
        }
        acc
    });
    Ok(Cochain(map))
}
