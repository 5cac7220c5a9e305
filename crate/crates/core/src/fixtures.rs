//! The built-in fixture corpus and the checks run on each fixture.

use crate::algebra::{check_associative, check_lie, check_pre_lie, dual_representation, regular_representation, sub_adjacent};
use crate::cohomology::{coboundary, is_lie_two_cocycle};
use crate::constructions::{
    burgers_lie_nijenhuis, burgers_prelie, burgers_skew_nijenhuis, cybe_nijenhuis, novikov_from_derivation,
    novikov_from_derivation_with, novikov_nijenhuis, novikov_nijenhuis_with, prelie_from_cybe, prelie_from_rb_assoc,
    rb_assoc_nijenhuis, PropositionReport,
};
use crate::document::{parse_document, Document};
use crate::error::{Error, Result};
use crate::linalg::{basis_vector, Matrix};
use crate::nijenhuis::{check_deformation, check_equivalence, is_nijenhuis, power_identity};
use crate::operators::{
    are_compatible_l_dendriform, is_l_dendriform, is_rota_baxter, l_dendriform_on_algebra, rota_baxter_correspondence,
};
use crate::paracomplex::{
    is_para_kahler, is_paracomplex_quadratic, is_quadratic, paracomplex_from_splitting, prelie_from_symplectic, Flavor,
};
use crate::report::{sort_records, CheckRecord};
use crate::scalar::int;
use crate::search::{enumerate, Execution, Grid};
use crate::smatrix::{
    are_compatible_s_matrices, dual_nijenhuis, is_pseudo_hessian, is_pseudo_hessian_nijenhuis,
    phn_bridge, phn_l_dendriform_pair, phn_to_smatrices,
};
use crate::tensor::Cochain;
use crate::verdict::{Verdict, Witness};

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name, ".json")))
    };
}

/// `(name, JSON text)` of every built-in fixture, sorted by name.
pub const FIXTURES: [(&str, &str); 16] = [
    fixture!("a2_phn"),
    fixture!("a3_phn"),
    fixture!("burgers"),
    fixture!("cybe"),
    fixture!("novikov"),
    fixture!("para_kahler_lie"),
    fixture!("para_kahler_prelie"),
    fixture!("rb_assoc"),
    fixture!("rb_left_unit_2"),
    fixture!("rb_left_unit_3"),
    fixture!("rb_plane_a"),
    fixture!("rb_plane_b"),
    fixture!("rb_right_unit_2"),
    fixture!("rb_right_unit_3"),
    fixture!("rb_space_a"),
    fixture!("rb_space_b"),
];

pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Result<Document> {
    let text = fixture_text(name).ok_or_else(|| Error::Parse(format!("no fixture named '{name}'")))?;
    parse_document(text)
}

type Check = (String, Result<Verdict>);

fn check(name: &str, r: Result<Verdict>) -> Check {
    (name.to_string(), r)
}

/// Passes when `v` fails: used for operators that must be rejected.
fn rejected(v: Verdict, what: &str) -> Verdict {
    if v.holds {
        Verdict::fail(Witness::note(format!("{what} was accepted")))
    } else {
        Verdict::pass()
    }
}

fn report_verdict(r: Result<PropositionReport>) -> Result<Verdict> {
    let r = r?;
    Ok(match r.items.iter().find(|(_, v)| !v.holds) {
        None => Verdict::pass(),
        Some((name, v)) => Verdict::fail(Witness::note(format!("{name}: {v}"))),
    })
}

fn column(m: &Matrix) -> Vec<crate::scalar::Scalar> {
    m.column(0)
}

/// The weight-zero Rota-Baxter operators on the grid are exactly the
/// square-zero ones.
pub fn rota_baxter_square_zero_claim(doc: &Document, grid: &Grid) -> Result<Verdict> {
    let a = &doc.algebra;
    for m in enumerate(a.dim(), grid)? {
        let rb = is_rota_baxter(a, &m, &int(0))?.holds;
        if rb != (&m * &m).is_zero() {
            return Ok(Verdict::fail(Witness::new(
                "Rota-Baxter of weight 0 iff R^2 = 0",
                Vec::new(),
                m.entries().to_vec(),
                Vec::new(),
            )));
        }
    }
    Ok(Verdict::pass())
}

/// The quadratic-relation correspondences of [`rota_baxter_correspondence`]
/// over every grid operator.
pub fn correspondence_on_grid(doc: &Document, grid: &Grid) -> Result<Verdict> {
    for m in enumerate(doc.algebra.dim(), grid)? {
        if let Some(v) = rota_baxter_correspondence(&doc.algebra, &m)? {
            if !v.holds {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::pass())
}

fn deformation_by_coboundary(doc: &Document, n: &Matrix) -> Result<Verdict> {
    let a = &doc.algebra;
    let omega = coboundary(a, &regular_representation(a), &Cochain::from_operator(n))?;
    let d = check_deformation(a, &omega)?;
    if !d.is_deformation {
        return Ok(Verdict::fail(Witness::note("dN is not a deformation")));
    }
    let zero = Cochain::zero(a.dim(), a.dim(), 1);
    let e = check_equivalence(a, &omega, &zero, n)?;
    Ok(Verdict::from_bool(e.equivalent, "deformation by dN is trivial"))
}

fn powers(doc: &Document, n: &Matrix) -> Result<Verdict> {
    let ks: Vec<i32> = if n.is_invertible() { vec![-3, -2, -1, 1, 2, 3] } else { vec![1, 2, 3] };
    for &j in &ks {
        for &k in &ks {
            let v = power_identity(&doc.algebra, n, j, k)?;
            if !v.holds {
                return Ok(v);
            }
        }
    }
    Ok(Verdict::pass())
}

fn phn_checks(doc: &Document) -> Result<Vec<Check>> {
    let a = &doc.algebra;
    let b = doc.form("B")?.matrix();
    let n = doc.operator("N")?;
    let mut out = vec![
        check("pre-Lie", Ok(check_pre_lie(a))),
        check("B is pseudo-Hessian", is_pseudo_hessian(a, b)),
        check("N is Nijenhuis", is_nijenhuis(a, n)),
        check("(B, N) is pseudo-Hessian-Nijenhuis", is_pseudo_hessian_nijenhuis(a, b, n)),
        check("deformation by dN is trivial", deformation_by_coboundary(doc, n)),
        check("power identities for N", powers(doc, n)),
    ];
    let round_trip = phn_to_smatrices(a, b, n).and_then(|(r1, r2)| {
        let (b2, n2) = phn_bridge(a, &r1, &r2)?;
        Ok(Verdict::from_bool(&b2 == b && &n2 == n, "s-matrices map back to (B, N)"))
    });
    out.push(check("s-matrix round trip", round_trip));
    Ok(out)
}

fn a2_checks(doc: &Document) -> Result<Vec<Check>> {
    let a = &doc.algebra;
    let mut out = phn_checks(doc)?;
    let (r1, r2) = (doc.tensor("r1")?, doc.tensor("r2")?);
    out.push(check("N_bad is rejected", is_nijenhuis(a, doc.operator("N_bad")?).map(|v| rejected(v, "N_bad"))));
    out.push(check("r1, r2 are compatible s-matrices", are_compatible_s_matrices(a, r1, r2)));
    let dual = dual_nijenhuis(a, r1, r2).map(|d| {
        Verdict::from_bool(d.deformation.is_deformation, "product of r1 deforms the product of r2")
    });
    out.push(check("dual Nijenhuis operator", dual));
    let b = doc.form("B")?.matrix();
    let n = doc.operator("N")?;
    let dend = phn_l_dendriform_pair(a, b, n).and_then(|(d1, d2)| {
        let rep = dual_representation(a);
        let same = d1 == l_dendriform_on_algebra(a, &rep, r1)? && d2 == l_dendriform_on_algebra(a, &rep, r2)?;
        if !same {
            return Ok(Verdict::fail(Witness::note("form-defined structures differ from the O-operator ones")));
        }
        let v = is_l_dendriform(&d1).and_then(|| Ok::<_, Error>(is_l_dendriform(&d2)))?;
        v.and_then(|| are_compatible_l_dendriform(&d1, &d2))
    });
    out.push(check("compatible L-dendriform pair", dend));
    Ok(out)
}

fn rb_family_checks(doc: &Document) -> Result<Vec<Check>> {
    let a = &doc.algebra;
    let r = doc.operator("R")?;
    let grid = if a.dim() <= 2 { Grid::default() } else { Grid::range(-1, 1, &[1])? };
    let mut out = vec![
        check("pre-Lie", Ok(check_pre_lie(a))),
        check("R is Rota-Baxter of weight 0", is_rota_baxter(a, r, &int(0))),
        check("R is Nijenhuis", is_nijenhuis(a, r)),
        check("weight-zero Rota-Baxter iff square zero on grid", rota_baxter_square_zero_claim(doc, &grid)),
    ];
    if a.dim() <= 2 {
        out.push(check("Nijenhuis and Rota-Baxter correspondences on grid", correspondence_on_grid(doc, &grid)));
    }
    Ok(out)
}

fn para_kahler_lie_checks(doc: &Document) -> Result<Vec<Check>> {
    let lie = &doc.algebra;
    let w = doc.form("omega")?.matrix();
    let expected = load("para_kahler_prelie")?;
    let derived = prelie_from_symplectic(lie, w).map(|p| {
        Verdict::from_bool(p.product() == expected.algebra.product(), "derived product matches the stored table")
    });
    Ok(vec![
        check("Lie", Ok(check_lie(lie))),
        check("omega is a 2-cocycle", is_lie_two_cocycle(lie, w)),
        check("derived pre-Lie product", derived),
        check("para-Kähler with N1", is_para_kahler(lie, w, doc.operator("N1")?)),
        check("para-Kähler with N2", is_para_kahler(lie, w, doc.operator("N2")?)),
    ])
}

fn para_kahler_prelie_checks(doc: &Document) -> Result<Vec<Check>> {
    let a = &doc.algebra;
    let w = doc.form("omega")?.matrix();
    let n1 = doc.operator("N1")?;
    let e = |i| basis_vector(4, i);
    let split = paracomplex_from_splitting(a, &[e(0), e(1)], &[e(2), e(3)], w, Flavor::Quadratic)
        .map(|(n, v)| if &n == n1 { v } else { Verdict::fail(Witness::note("splitting does not recover N1")) });
    let lie = sub_adjacent(a).map(|l| {
        let stored = load("para_kahler_lie").expect("built-in fixture");
        Verdict::from_bool(l.product() == stored.algebra.product(), "commutator matches the Lie fixture")
    });
    Ok(vec![
        check("pre-Lie", Ok(check_pre_lie(a))),
        check("quadratic", is_quadratic(a, w)),
        check("para-complex quadratic with N1", is_paracomplex_quadratic(a, w, n1)),
        check("para-complex quadratic with N2", is_paracomplex_quadratic(a, w, doc.operator("N2")?)),
        check("splitting recovers N1", split),
        check("commutator is the Lie bracket", lie),
    ])
}

fn cybe_checks(doc: &Document) -> Result<Vec<Check>> {
    let lie = &doc.algebra;
    let r = doc.operator("r")?;
    let n = doc.operator("N")?;
    Ok(vec![
        check("Lie", Ok(check_lie(lie))),
        check("Yang-Baxter product is pre-Lie", prelie_from_cybe(lie, r).map(|a| check_pre_lie(&a))),
        check("Nijenhuis operator passes through", report_verdict(cybe_nijenhuis(lie, r, n))),
    ])
}

fn rb_assoc_checks(doc: &Document) -> Result<Vec<Check>> {
    let assoc = &doc.algebra;
    let r = doc.operator("R")?;
    let n = doc.operator("N")?;
    Ok(vec![
        check("associative", Ok(check_associative(assoc))),
        check("Rota-Baxter product is pre-Lie", prelie_from_rb_assoc(assoc, r).map(|a| check_pre_lie(&a))),
        check("Nijenhuis operator passes through", report_verdict(rb_assoc_nijenhuis(assoc, r, n))),
    ])
}

fn burgers_checks(doc: &Document) -> Result<Vec<Check>> {
    let a_vec = column(doc.map("a")?);
    let g = doc.form("G")?.matrix();
    let rot = doc.operator("rotation")?;
    let n = doc.algebra.dim();
    let recipe = burgers_prelie(n, &a_vec, g).map(|p| {
        Verdict::from_bool(p.product() == doc.algebra.product(), "recipe matches the stored product")
    });
    let any = Matrix::from_ints(&[[1, 2], [-3, 4]]);
    Ok(vec![
        check("pre-Lie", Ok(check_pre_lie(&doc.algebra))),
        check("Burgers recipe", recipe),
        check("every operator is Nijenhuis on the commutator", burgers_lie_nijenhuis(&a_vec, g, &any)),
        check("skew rotation", report_verdict(burgers_skew_nijenhuis(&a_vec, g, rot))),
    ])
}

fn novikov_checks(doc: &Document) -> Result<Vec<Check>> {
    let comm = &doc.algebra;
    let d = doc.operator("D")?;
    let n = doc.operator("N")?;
    let alpha = column(doc.map("alpha")?);
    let mut out = vec![check("associative", Ok(check_associative(comm)))];
    for s in [int(0), int(1)] {
        let name = format!("Novikov product s = {s}");
        out.push(check(&name, novikov_from_derivation(comm, d, &s).map(|a| check_pre_lie(&a))));
        let name = format!("Nijenhuis operator passes through, s = {s}");
        out.push(check(&name, report_verdict(novikov_nijenhuis(comm, d, &s, n))));
    }
    out.push(check("Novikov product with alpha", novikov_from_derivation_with(comm, d, &alpha).map(|a| check_pre_lie(&a))));
    out.push(check("Nijenhuis operator passes through, alpha", report_verdict(novikov_nijenhuis_with(comm, d, &alpha, n))));
    Ok(out)
}

fn checks_for(name: &str, doc: &Document) -> Result<Vec<Check>> {
    match name {
        "a2_phn" => a2_checks(doc),
        "a3_phn" => phn_checks(doc),
        "para_kahler_lie" => para_kahler_lie_checks(doc),
        "para_kahler_prelie" => para_kahler_prelie_checks(doc),
        "cybe" => cybe_checks(doc),
        "rb_assoc" => rb_assoc_checks(doc),
        "burgers" => burgers_checks(doc),
        "novikov" => novikov_checks(doc),
        _ if name.starts_with("rb_") => rb_family_checks(doc),
        _ => Ok(Vec::new()),
    }
}

fn run_one(name: &str, text: &str) -> Vec<CheckRecord> {
    let doc = match parse_document(text) {
        Ok(d) => d,
        Err(e) => return vec![CheckRecord::from_result(name, "parse", "", Err(e))],
    };
    let reference = doc.origin.clone().unwrap_or_default();
    match checks_for(name, &doc) {
        Ok(list) => list
            .into_iter()
            .map(|(c, r)| CheckRecord::from_result(name, &c, &reference, r))
            .collect(),
        Err(e) => vec![CheckRecord::from_result(name, "setup", &reference, Err(e))],
    }
}

/// Runs every built-in check, sorted by fixture then check name.
pub fn run_fixture_checks(exec: Execution) -> Vec<CheckRecord> {
    let mut records: Vec<CheckRecord> = match exec {
        Execution::Sequential => FIXTURES.iter().flat_map(|(n, t)| run_one(n, t)).collect(),
        Execution::Parallel => run_parallel(),
    };
    sort_records(&mut records);
    records
}

#[cfg(feature = "parallel")]
fn run_parallel() -> Vec<CheckRecord> {
    use rayon::prelude::*;
    FIXTURES.par_iter().flat_map_iter(|(n, t)| run_one(n, t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel() -> Vec<CheckRecord> {
    FIXTURES.iter().flat_map(|(n, t)| run_one(n, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::serialize_document;
    use crate::report::format_text;

    #[test]
    fn every_fixture_is_canonical() {
        for (name, text) in FIXTURES {
            let doc = parse_document(text).unwrap();
            assert_eq!(serialize_document(&doc), text, "{name}");
        }
    }

    #[test]
    fn every_fixture_check_passes() {
        let records = run_fixture_checks(Execution::Parallel);
        assert!(records.iter().all(|r| r.passed()), "{}", format_text(&records));
        assert_eq!(records, run_fixture_checks(Execution::Sequential));
    }
}
