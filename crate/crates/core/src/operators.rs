//! O-operators, Rota-Baxter operators, their lifts to semidirect products,
//! compatible pairs and the L-dendriform algebras they induce.

use num_traits::Zero;

use crate::algebra::{check_pre_lie, check_representation, semidirect_product, Algebra, Kind, Representation};
use crate::error::{Error, Result};
use crate::linalg::{add_vec, basis_vector, sub_vec, Matrix, Vector};
use crate::nijenhuis::is_nijenhuis;
use crate::scalar::{int, Scalar};
use crate::tensor::{Arg, MultiMap};
use crate::verdict::{check_identity, require, Verdict};

/// Coefficient pairs used to cross-check "for all `k₁, k₂`" statements.
/// Every pair has `k₁ k₂ ≠ 0`, so the mixed term is never suppressed.
pub const SAMPLE_PAIRS: [(i64, i64); 3] = [(1, 1), (1, -1), (2, 3)];

fn check_map(a: &Algebra, rep: &Representation, t: &Matrix) -> Result<()> {
    if rep.base_dim() != a.dim() {
        return Err(Error::dim("representation does not match the algebra"));
    }
    if t.rows() != a.dim() || t.cols() != rep.dim_v() {
        return Err(Error::dim(format!(
            "map is {}x{}, expected {}x{} (V -> g)",
            t.rows(),
            t.cols(),
            a.dim(),
            rep.dim_v()
        )));
    }
    Ok(())
}

fn require_rep(a: &Algebra, rep: &Representation) -> Result<()> {
    let v = check_representation(a, rep)?;
    if !v.holds {
        return Err(Error::pre(format!("invalid representation: {v}")));
    }
    Ok(())
}

/// `ρ(T u) v + μ(T v) u` for basis vectors `u, v` of `V`.
fn o_inner(rep: &Representation, t: &Matrix, u: usize, v: usize) -> Vector {
    let m = rep.dim_v();
    let tu = t.column(u);
    let tv = t.column(v);
    add_vec(
        &rep.rho(&tu).apply(&basis_vector(m, v)),
        &rep.mu(&tv).apply(&basis_vector(m, u)),
    )
}

/// `T(u)·T(v) = T(ρ(T u) v + μ(T v) u)` on all basis pairs of `V`.
pub fn is_o_operator(a: &Algebra, rep: &Representation, t: &Matrix) -> Result<Verdict> {
    check_map(a, rep, t)?;
    require_rep(a, rep)?;
    Ok(o_identity(a, rep, t))
}

fn o_identity(a: &Algebra, rep: &Representation, t: &Matrix) -> Verdict {
    check_identity("T(u)·T(v) = T(rho(Tu)v + mu(Tv)u)", rep.dim_v(), 2, |p| {
        let (u, v) = (p[0], p[1]);
        (a.mul(&t.column(u), &t.column(v)), t.apply(&o_inner(rep, t, u, v)))
    })
}

/// `R(x)·R(y) = R(R(x)·y + x·R(y)) + λ R(x·y)`.
pub fn is_rota_baxter(a: &Algebra, r: &Matrix, weight: &Scalar) -> Result<Verdict> {
    let n = a.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::dim("operator does not match the algebra"));
    }
    let cols: Vec<Vector> = (0..n).map(|j| r.column(j)).collect();
    let pi = a.product();
    Ok(check_identity(
        "R(x)·R(y) = R(R(x)·y + x·R(y)) + weight R(x·y)",
        n,
        2,
        |p| {
            let (i, j) = (p[0], p[1]);
            let lhs = a.mul(&cols[i], &cols[j]);
            let inner = add_vec(&pi.eval_at(&[j], 0, &cols[i]), &pi.eval_at(&[i], 1, &cols[j]));
            let mut rhs = r.apply(&inner);
            if !weight.is_zero() {
                let w: Vector = r.apply(a.mul_basis(i, j)).iter().map(|c| c * weight).collect();
                rhs = add_vec(&rhs, &w);
            }
            (lhs, rhs)
        },
    ))
}

/// Relation between the Nijenhuis condition and Rota-Baxter conditions for
/// operators with a quadratic relation:
/// - `N² = 0`: Nijenhuis iff Rota-Baxter of weight 0;
/// - `N² = N`: Nijenhuis iff Rota-Baxter of weight −1;
/// - `N² = Id`: Nijenhuis iff `N + Id` has weight −2, iff `N − Id` has weight 2.
///
/// `None` when `N` satisfies none of the three relations; otherwise a
/// verdict on whether the equivalence holds for this `N`.
pub fn rota_baxter_correspondence(a: &Algebra, n: &Matrix) -> Result<Option<Verdict>> {
    let dim = a.dim();
    let sq = n * n;
    let id = Matrix::identity(dim);
    let nij = crate::nijenhuis::torsion_witness(a, n).is_none();
    let agree = |holds: bool, what: &str| Verdict::from_bool(holds == nij, what);
    if sq.is_zero() {
        let rb = is_rota_baxter(a, n, &int(0))?.holds;
        return Ok(Some(agree(rb, "N^2 = 0: Nijenhuis iff Rota-Baxter of weight 0")));
    }
    if sq == *n {
        let rb = is_rota_baxter(a, n, &int(-1))?.holds;
        return Ok(Some(agree(rb, "N^2 = N: Nijenhuis iff Rota-Baxter of weight -1")));
    }
    if sq == id {
        let plus = is_rota_baxter(a, &(n + &id), &int(-2))?.holds;
        let minus = is_rota_baxter(a, &(n - &id), &int(2))?.holds;
        let v = agree(plus, "N^2 = Id: Nijenhuis iff N + Id is Rota-Baxter of weight -2");
        if !v.holds {
            return Ok(Some(v));
        }
        return Ok(Some(agree(minus, "N^2 = Id: Nijenhuis iff N - Id is Rota-Baxter of weight 2")));
    }
    Ok(None)
}

/// Which block operator to build on `g ⋉ V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftMode {
    /// `(0 T; 0 −λ Id)`, checked as a Rota-Baxter operator of weight `λ`.
    RotaBaxter(Scalar),
    /// `(0 T; 0 0)`, checked as a Nijenhuis operator.
    Nilpotent,
    /// `(0 T; 0 Id)`, checked as a Nijenhuis operator.
    Idempotent,
}

/// Block operator `(0 T; 0 D)` on `g ⋉ V`, basis `g` first.
pub fn block_operator(n: usize, t: &Matrix, corner: &Scalar) -> Matrix {
    let m = t.cols();
    let mut out = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..m {
            out[(i, n + j)] = t[(i, j)].clone();
        }
    }
    for j in 0..m {
        out[(n + j, n + j)] = corner.clone();
    }
    out
}

/// The lifted operator on the semidirect product and its verdict.
pub fn lift_to_semidirect(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    mode: &LiftMode,
) -> Result<(Algebra, Matrix, Verdict)> {
    check_map(a, rep, t)?;
    let s = semidirect_product(a, rep)?;
    let n = a.dim();
    Ok(match mode {
        LiftMode::RotaBaxter(w) => {
            let op = block_operator(n, t, &-w.clone());
            let v = is_rota_baxter(&s, &op, w)?;
            (s, op, v)
        }
        LiftMode::Nilpotent => {
            let op = block_operator(n, t, &Scalar::zero());
            let v = is_nijenhuis(&s, &op)?;
            (s, op, v)
        }
        LiftMode::Idempotent => {
            let op = block_operator(n, t, &int(1));
            let v = is_nijenhuis(&s, &op)?;
            (s, op, v)
        }
    })
}

/// The mixed identity
/// `T₁u·T₂v + T₂u·T₁v = T₁(ρ(T₂u)v + μ(T₂v)u) + T₂(ρ(T₁u)v + μ(T₁v)u)`.
fn mixed_o_identity(a: &Algebra, rep: &Representation, t1: &Matrix, t2: &Matrix) -> Verdict {
    check_identity(
        "T1u·T2v + T2u·T1v = T1(rho(T2u)v + mu(T2v)u) + T2(rho(T1u)v + mu(T1v)u)",
        rep.dim_v(),
        2,
        |p| {
            let (u, v) = (p[0], p[1]);
            let lhs = add_vec(
                &a.mul(&t1.column(u), &t2.column(v)),
                &a.mul(&t2.column(u), &t1.column(v)),
            );
            let rhs = add_vec(
                &t1.apply(&o_inner(rep, t2, u, v)),
                &t2.apply(&o_inner(rep, t1, u, v)),
            );
            (lhs, rhs)
        },
    )
}

/// Whether every combination `k₁T₁ + k₂T₂` is an O-operator, decided by
/// the mixed identity and cross-checked at [`SAMPLE_PAIRS`].
pub fn are_compatible_o_operators(
    a: &Algebra,
    rep: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<Verdict> {
    for (name, t) in [("first", t1), ("second", t2)] {
        let v = is_o_operator(a, rep, t)?;
        if !v.holds {
            return Err(Error::pre(format!("{name} map is not an O-operator: {v}")));
        }
    }
    let v = mixed_o_identity(a, rep, t1, t2);
    for (k1, k2) in SAMPLE_PAIRS {
        let comb = &t1.scale(&int(k1)) + &t2.scale(&int(k2));
        if o_identity(a, rep, &comb).holds != v.holds {
            return Err(Error::consistency(
                "mixed O-operator identity disagrees with sampled combinations",
            ));
        }
    }
    Ok(v)
}

/// `N(NTu·Tv + Tu·NTv) = N(T(ρ(NTu)v + μ(NTv)u) + NT(ρ(Tu)v + μ(Tv)u))`,
/// which for Nijenhuis `N` and O-operator `T` decides whether `N∘T` is an
/// O-operator.
pub fn composite_o_condition(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
    n: &Matrix,
) -> Result<Verdict> {
    check_map(a, rep, t)?;
    let nt = n.try_mul(t)?;
    Ok(check_identity(
        "N(NTu·Tv + Tu·NTv) = N(T(rho(NTu)v + mu(NTv)u) + NT(rho(Tu)v + mu(Tv)u))",
        rep.dim_v(),
        2,
        |p| {
            let (u, v) = (p[0], p[1]);
            let lhs = n.apply(&add_vec(
                &a.mul(&nt.column(u), &t.column(v)),
                &a.mul(&t.column(u), &nt.column(v)),
            ));
            let rhs = n.apply(&add_vec(
                &t.apply(&o_inner(rep, &nt, u, v)),
                &nt.apply(&o_inner(rep, t, u, v)),
            ));
            (lhs, rhs)
        },
    ))
}

/// `T₁ ∘ T₂⁻¹` for compatible O-operators with `T₂` invertible.
pub fn nijenhuis_from_compatible(
    a: &Algebra,
    rep: &Representation,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<Matrix> {
    check_map(a, rep, t1)?;
    check_map(a, rep, t2)?;
    let inv = t2.inverse()?;
    let v = are_compatible_o_operators(a, rep, t1, t2)?;
    if !v.holds {
        return Err(Error::pre(format!("O-operators are not compatible: {v}")));
    }
    let n = t1.try_mul(&inv)?;
    require(is_nijenhuis(a, &n)?, "quotient of compatible O-operators must be Nijenhuis")?;
    Ok(n)
}

/// Two products `▷` and `◁` on one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LDendriform {
    succ: MultiMap,
    prec: MultiMap,
}

impl LDendriform {
    pub fn new(succ: MultiMap, prec: MultiMap) -> Result<Self> {
        for m in [&succ, &prec] {
            if m.degree() != 1 || m.codim() != m.dim() {
                return Err(Error::dim("L-dendriform products must be bilinear on one space"));
            }
        }
        if succ.dim() != prec.dim() {
            return Err(Error::dim("L-dendriform products live on different spaces"));
        }
        Ok(LDendriform { succ, prec })
    }

    pub fn zero(dim: usize) -> Self {
        LDendriform {
            succ: MultiMap::zero(dim, dim, 1),
            prec: MultiMap::zero(dim, dim, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }

    /// `▷`.
    pub fn succ(&self) -> &MultiMap {
        &self.succ
    }

    /// `◁`.
    pub fn prec(&self) -> &MultiMap {
        &self.prec
    }

    fn combine(&self, k1: &Scalar, other: &Self, k2: &Scalar) -> Self {
        LDendriform {
            succ: &self.succ.scale(k1) + &other.succ.scale(k2),
            prec: &self.prec.scale(k1) + &other.prec.scale(k2),
        }
    }

    /// The vertical product `x ▷ y − y ◁ x`.
    pub fn vertical(&self) -> Algebra {
        let n = self.dim();
        Algebra::from_table(n, Kind::Unchecked, |i, j| {
            sub_vec(self.succ.value(&[i, j]), self.prec.value(&[j, i]))
        })
    }
}

/// `op(x, y)` where `x` is a vector and `y` a basis index.
fn apply_vb(op: &MultiMap, x: &[Scalar], j: usize) -> Vector {
    op.eval(&[Arg::Vector(x), Arg::Basis(j)])
}

/// `op(x, y)` where `x` is a basis index and `y` a vector.
fn apply_bv(op: &MultiMap, i: usize, y: &[Scalar]) -> Vector {
    op.eval(&[Arg::Basis(i), Arg::Vector(y)])
}

/// Sum over `(outer, inner)` of both axioms, so that passing `(D, D)` gives
/// the axioms of `D` and passing `(D₁, D₂)` and `(D₂, D₁)` gives the mixed
/// identities of a compatible pair.
fn axiom_terms(pairs: &[(&LDendriform, &LDendriform)], t: &[usize]) -> [(Vector, Vector); 2] {
    let (x, y, z) = (t[0], t[1], t[2]);
    let n = pairs[0].0.dim();
    let zero = vec![Scalar::zero(); n];
    let mut l1 = zero.clone();
    let mut r1 = zero.clone();
    let mut l2 = zero.clone();
    let mut r2 = zero;
    for (outer, inner) in pairs {
        let (os, op) = (&outer.succ, &outer.prec);
        let (is, ip) = (&inner.succ, &inner.prec);
        // x▷(y▷z) = (x▷y)▷z + (x◁y)▷z + y▷(x▷z) − (y◁x)▷z − (y▷x)▷z
        l1 = add_vec(&l1, &apply_bv(os, x, is.value(&[y, z])));
        let mut r = apply_vb(os, is.value(&[x, y]), z);
        r = add_vec(&r, &apply_vb(os, ip.value(&[x, y]), z));
        r = add_vec(&r, &apply_bv(os, y, is.value(&[x, z])));
        r = sub_vec(&r, &apply_vb(os, ip.value(&[y, x]), z));
        r = sub_vec(&r, &apply_vb(os, is.value(&[y, x]), z));
        r1 = add_vec(&r1, &r);
        // x▷(y◁z) = (x▷y)◁z + y◁(x▷z) + y◁(x◁z) − (y◁x)◁z
        l2 = add_vec(&l2, &apply_bv(os, x, ip.value(&[y, z])));
        let mut r = apply_vb(op, is.value(&[x, y]), z);
        r = add_vec(&r, &apply_bv(op, y, is.value(&[x, z])));
        r = add_vec(&r, &apply_bv(op, y, ip.value(&[x, z])));
        r = sub_vec(&r, &apply_vb(op, ip.value(&[y, x]), z));
        r2 = add_vec(&r2, &r);
    }
    [(l1, r1), (l2, r2)]
}

fn axioms(pairs: &[(&LDendriform, &LDendriform)], names: [&str; 2]) -> Verdict {
    let n = pairs[0].0.dim();
    for (k, name) in names.iter().enumerate() {
        let v = check_identity(name, n, 3, |t| axiom_terms(pairs, t)[k].clone());
        if !v.holds {
            return v;
        }
    }
    Verdict::pass()
}

const AXIOMS: [&str; 2] = [
    "x>(y>z) = (x>y)>z + (x<y)>z + y>(x>z) - (y<x)>z - (y>x)>z",
    "x>(y<z) = (x>y)<z + y<(x>z) + y<(x<z) - (y<x)<z",
];

pub fn is_l_dendriform(d: &LDendriform) -> Verdict {
    axioms(&[(d, d)], AXIOMS)
}

/// Whether `k₁D₁ + k₂D₂` is L-dendriform for all `k₁, k₂`: both are
/// L-dendriform and the mixed identities hold. Cross-checked at
/// [`SAMPLE_PAIRS`].
pub fn are_compatible_l_dendriform(d1: &LDendriform, d2: &LDendriform) -> Result<Verdict> {
    if d1.dim() != d2.dim() {
        return Err(Error::dim("L-dendriform algebras live on different spaces"));
    }
    let mut v = is_l_dendriform(d1);
    if v.holds {
        v = is_l_dendriform(d2);
    }
    if v.holds {
        v = axioms(
            &[(d1, d2), (d2, d1)],
            [
                "mixed form of x>(y>z) = (x>y)>z + (x<y)>z + y>(x>z) - (y<x)>z - (y>x)>z",
                "mixed form of x>(y<z) = (x>y)<z + y<(x>z) + y<(x<z) - (y<x)<z",
            ],
        );
    }
    for (k1, k2) in SAMPLE_PAIRS {
        let comb = d1.combine(&int(k1), d2, &int(k2));
        let sampled = is_l_dendriform(&comb).holds;
        if v.holds && !sampled {
            return Err(Error::consistency(
                "compatible L-dendriform pair has a non-L-dendriform combination",
            ));
        }
    }
    Ok(v)
}

/// `u ▷ v = ρ(T u) v`, `u ◁ v = −μ(T u) v` on `V`.
pub fn l_dendriform_from_o_operator(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
) -> Result<LDendriform> {
    let v = is_o_operator(a, rep, t)?;
    if !v.holds {
        return Err(Error::pre(format!("map is not an O-operator: {v}")));
    }
    let m = rep.dim_v();
    let rho_t: Vec<Matrix> = (0..m).map(|u| rep.rho(&t.column(u))).collect();
    let mu_t: Vec<Matrix> = (0..m).map(|u| rep.mu(&t.column(u))).collect();
    let succ = MultiMap::from_fn(m, m, 1, |p| rho_t[p[0]].column(p[1]));
    let prec = MultiMap::from_fn(m, m, 1, |p| mu_t[p[0]].column(p[1]).iter().map(|c| -c).collect());
    let d = LDendriform::new(succ, prec)?;
    require(is_l_dendriform(&d), "O-operator must induce an L-dendriform algebra")?;
    require(
        check_pre_lie(&d.vertical()),
        "vertical product of an L-dendriform algebra must be pre-Lie",
    )?;
    Ok(d)
}

/// `x ▷ y = T ρ(x) T⁻¹ y`, `x ◁ y = −T μ(x) T⁻¹ y` on `g`, for invertible `T`.
pub fn l_dendriform_on_algebra(
    a: &Algebra,
    rep: &Representation,
    t: &Matrix,
) -> Result<LDendriform> {
    let v = is_o_operator(a, rep, t)?;
    if !v.holds {
        return Err(Error::pre(format!("map is not an O-operator: {v}")));
    }
    let inv = t.inverse()?;
    let n = a.dim();
    let conj = |m: &Matrix| -> Matrix { &(t * m) * &inv };
    let rho_c: Vec<Matrix> = rep.rho_basis().iter().map(conj).collect();
    let mu_c: Vec<Matrix> = rep.mu_basis().iter().map(conj).collect();
    let succ = MultiMap::from_fn(n, n, 1, |p| rho_c[p[0]].column(p[1]));
    let prec = MultiMap::from_fn(n, n, 1, |p| mu_c[p[0]].column(p[1]).iter().map(|c| -c).collect());
    let d = LDendriform::new(succ, prec)?;
    require(is_l_dendriform(&d), "transported L-dendriform structure must satisfy the axioms")?;
    Ok(d)
}
