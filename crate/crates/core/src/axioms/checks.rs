use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebroid::{interior, FormField, Side};
use crate::doubled::{DoubledRealization, DoubledSection, FluxTensor};
use crate::error::Error;
use crate::generic::find_witness;
use crate::poly::{eta_pairing, DoubledIndex, Poly, PolyAcc, Var};

use super::family::{ExplicitData, GenericSectionFamily, Sampler};
use super::jacobiator::jacobiator_and_t;
use super::report::{AxiomReport, CheckId, ClassificationLabel, Status};

/// Generic inputs and the labelled residual components they produce.
pub(crate) struct Trial {
    pub inputs: Vec<(String, Poly)>,
    pub residual: Vec<(String, Poly)>,
}

fn terms(residual: &[(String, Poly)]) -> usize {
    residual.iter().map(|(_, p)| p.num_terms()).sum()
}

/// Where the test data of a check comes from.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Source<'a> {
    Generic(&'a GenericSectionFamily),
    Explicit(&'a ExplicitData),
}

/// Evaluates `build` on generic data of degree `0, 1, .., k` and stops at the
/// first nonzero residual. PASS requires a zero residual at degree `k`.
fn escalate(
    id: CheckId,
    r: &DoubledRealization,
    src: Source<'_>,
    sections_needed: usize,
    build: impl Fn(&mut Sampler) -> Result<Trial, Error>,
) -> Result<AxiomReport, Error> {
    let family = match src {
        Source::Generic(f) => f,
        Source::Explicit(data) => {
            let trial = build(&mut data.sampler(r))?;
            let n = terms(&trial.residual);
            let report = match find_witness(&trial.residual, &trial.inputs) {
                Some(w) => AxiomReport::fail(id, None, w, n),
                None if n == 0 => AxiomReport::pass(id, None),
                None => return Err(Error::Precondition(format!("{id}: nonzero residual without a witness"))),
            };
            return Ok(report.with_note("explicit data"));
        }
    };
    if family.count < sections_needed {
        return Ok(AxiomReport::skipped(
            id,
            format!("needs {sections_needed} generic sections, family has {}", family.count),
        ));
    }
    for degree in 0..=family.degree {
        let mut s = family.sampler(r, degree);
        let trial = build(&mut s)?;
        let n = terms(&trial.residual);
        if n > 0 {
            let w = find_witness(&trial.residual, &trial.inputs)
                .ok_or_else(|| Error::Precondition(format!("{id}: nonzero residual without a witness")))?;
            return Ok(AxiomReport::fail(id, Some(degree), w, n));
        }
    }
    Ok(AxiomReport::pass(id, Some(family.degree)))
}

/// Witness search over residuals that carry no generic inputs.
fn direct(id: CheckId, residual: Vec<(String, Poly)>) -> AxiomReport {
    let n = terms(&residual);
    match find_witness(&residual, &[]) {
        Some(w) => AxiomReport::fail(id, None, w, n),
        None => AxiomReport::pass(id, None),
    }
}

fn sections(s: &mut Sampler, n: usize) -> Result<Vec<DoubledSection>, Error> {
    (0..n).map(|_| s.section()).collect()
}

fn section_inputs(es: &[DoubledSection]) -> Vec<(String, Poly)> {
    es.iter().enumerate().flat_map(|(i, e)| e.labelled(&format!("e{}", i + 1))).collect()
}

fn c1_trial(r: &DoubledRealization, flux: Option<&FluxTensor>, s: &mut Sampler) -> Result<Trial, Error> {
    let es = sections(s, 3)?;
    let (jac, t) = jacobiator_and_t(r, flux, &es[0], &es[1], &es[2])?;
    let res = &jac - &r.d_op(&t);
    Ok(Trial { inputs: section_inputs(&es), residual: res.labelled("Jac-DT") })
}

fn c2_trial(r: &DoubledRealization, flux: Option<&FluxTensor>, s: &mut Sampler) -> Result<Trial, Error> {
    let es = sections(s, 2)?;
    let f = s.function()?;
    let b = r.bracket(flux, &es[0], &es[1])?;
    let lhs = r.apply(&b, &f);
    let rhs = r.rho_v(&es[0]).bracket(&r.rho_v(&es[1])).apply(&f);
    let mut inputs = section_inputs(&es);
    inputs.push(("f".into(), f));
    Ok(Trial { inputs, residual: vec![("(rho[e1,e2] - [rho e1, rho e2]) f".into(), &lhs - &rhs)] })
}

fn c3_trial(r: &DoubledRealization, flux: Option<&FluxTensor>, s: &mut Sampler) -> Result<Trial, Error> {
    let es = sections(s, 2)?;
    let f = s.function()?;
    let (lhs, plain) = rayon::join(|| r.bracket(flux, &es[0], &es[1].scale(&f)), || r.bracket(flux, &es[0], &es[1]));
    let mut res = &lhs? - &plain?.scale(&f);
    res = &res - &es[1].scale(&r.apply(&es[0], &f));
    res = &res + &r.d_op(&f).scale(&r.pair(&es[0], &es[1]));
    let mut inputs = section_inputs(&es);
    inputs.push(("f".into(), f));
    Ok(Trial { inputs, residual: res.labelled("Leibniz") })
}

fn c4_trial(r: &DoubledRealization, s: &mut Sampler) -> Result<Trial, Error> {
    let f = s.function()?;
    let g = s.function()?;
    // 2 <Df, Dg>_+ = rho_V(Df) g
    let res = r.pair(&r.d_op(&f), &r.d_op(&g)).scale(&crate::poly::Rational::from_int(2));
    Ok(Trial { inputs: vec![("f".into(), f), ("g".into(), g)], residual: vec![("2<Df,Dg>".into(), res)] })
}

fn c5_trial(r: &DoubledRealization, flux: Option<&FluxTensor>, s: &mut Sampler) -> Result<Trial, Error> {
    let es = sections(s, 3)?;
    let (e1, e2, e3) = (&es[0], &es[1], &es[2]);
    let (b12, b13) = rayon::join(|| r.bracket(flux, e1, e2), || r.bracket(flux, e1, e3));
    let left = &b12? + &r.d_op(&r.pair(e1, e2));
    let right = &b13? + &r.d_op(&r.pair(e1, e3));
    let (first, (second, third)) =
        rayon::join(|| r.apply(e1, &r.pair(e2, e3)), || rayon::join(|| r.pair(&left, e3), || r.pair(e2, &right)));
    let mut acc = PolyAcc::new();
    acc.add(&first);
    acc.sub(&second);
    acc.sub(&third);
    Ok(Trial { inputs: section_inputs(&es), residual: vec![("metric compatibility".into(), acc.finish())] })
}

/// Axioms C1..C5 (and their Vaisman names V1 = C3, V2 = C5) on generic
/// admissible data, with the twisted bracket when `flux` is given.
pub fn check_axiom(
    r: &DoubledRealization,
    id: CheckId,
    family: &GenericSectionFamily,
    flux: Option<&FluxTensor>,
) -> Result<AxiomReport, Error> {
    axiom(r, id, Source::Generic(family), flux)
}

fn axiom(r: &DoubledRealization, id: CheckId, family: Source<'_>, flux: Option<&FluxTensor>) -> Result<AxiomReport, Error> {
    match id {
        CheckId::C1 => escalate(id, r, family, 3, |s| c1_trial(r, flux, s)),
        CheckId::C2 => escalate(id, r, family, 2, |s| c2_trial(r, flux, s)),
        CheckId::C3 | CheckId::V1 => escalate(id, r, family, 2, |s| c3_trial(r, flux, s)),
        CheckId::C4 => escalate(id, r, family, 0, |s| c4_trial(r, s)),
        CheckId::C5 | CheckId::V2 => escalate(id, r, family, 3, |s| c5_trial(r, flux, s)),
        other => Err(Error::UnknownCheck(format!("{other} is not an axiom"))),
    }
}

fn form_labelled(name: &str, w: &FormField) -> Vec<(String, Poly)> {
    w.components()
        .map(|(idx, p)| {
            let ix: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            (format!("{name}[{}]", ix.join(",")), p.clone())
        })
        .collect()
}

/// `d_*` as a derivation of the Schouten bracket of `E`, and `d` of that of
/// `E*`, on generic admissible vectors, forms and functions.
///
/// Degree-1 pairs test `d_*[X,Y] = [d_*X, Y] + [X, d_*Y]`; pairs with a
/// function test `d_*[X,f] = [d_*X, f] + [X, d_*f]` with `[P, f] = -i_{df} P`.
pub fn check_derivation_condition(r: &DoubledRealization, family: &GenericSectionFamily) -> Result<AxiomReport, Error> {
    derivation(r, Source::Generic(family))
}

fn derivation(r: &DoubledRealization, family: Source<'_>) -> Result<AxiomReport, Error> {
    escalate(CheckId::Derivation, r, family, 2, |s| {
        let (e, es) = (r.e(), r.estar());
        let x = s.vector()?;
        let y = s.vector()?;
        let xi = s.form()?;
        let eta = s.form()?;
        let f = s.section_function()?;

        let dx = es.d(&x.as_form())?;
        let dy = es.d(&y.as_form())?;
        let vv = &(&es.d(&e.bracket(&x, &y)?.as_form())? - &e.schouten(&x, &dy)?) + &e.schouten(&y, &dx)?;
        let vf = &(&es.d_function(&e.apply(&x, &f)) + &interior(&e.d_function(&f), &dx)?.as_vector())
            - &e.bracket(&x, &es.d_function(&f))?;

        let dxi = e.d(&xi.as_form())?;
        let deta = e.d(&eta.as_form())?;
        let ff = &(&e.d(&es.bracket(&xi, &eta)?.as_form())? - &es.schouten(&xi, &deta)?) + &es.schouten(&eta, &dxi)?;
        let ffn = &(&e.d_function(&es.apply(&xi, &f)) + &interior(&es.d_function(&f), &dxi)?.as_vector())
            - &es.bracket(&xi, &e.d_function(&f))?;

        let mut residual = form_labelled("d*[X,Y]", &vv);
        residual.extend(vf.comps().iter().enumerate().map(|(i, p)| (format!("d*[X,f]^{}", i + 1), p.clone())));
        residual.extend(form_labelled("d[xi,eta]", &ff));
        residual.extend(ffn.comps().iter().enumerate().map(|(i, p)| (format!("d[xi,f]_{}", i + 1), p.clone())));
        let mut inputs = Vec::new();
        for (name, v) in [("X", &x), ("Y", &y), ("xi", &xi), ("eta", &eta)] {
            inputs.extend(v.comps().iter().enumerate().map(|(i, p)| (format!("{name}_{}", i + 1), p.clone())));
        }
        inputs.push(("f".into(), f));
        Ok(Trial { inputs, residual })
    })
}

/// Which class of objects the relaxed strong constraint is tested on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongLevel {
    Functions,
    Vectors,
    Forms,
}

/// `eta^{MN} d_M f d_N g` with `g` a function, a vector component or a form
/// component. Only meaningful for block-diagonal anchors.
pub fn check_strong_constraint(r: &DoubledRealization, level: StrongLevel, family: &GenericSectionFamily) -> Result<AxiomReport, Error> {
    strong(r, level, Source::Generic(family))
}

fn strong(r: &DoubledRealization, level: StrongLevel, family: Source<'_>) -> Result<AxiomReport, Error> {
    let id = match level {
        StrongLevel::Functions => CheckId::StrongFn,
        StrongLevel::Vectors => CheckId::StrongVec,
        StrongLevel::Forms => CheckId::StrongForm,
    };
    if !(r.e().anchor_within_block(false) && r.estar().anchor_within_block(true)) {
        return Ok(AxiomReport::skipped(id, "anchors are not block-diagonal; the flat strong constraint does not apply"));
    }
    let d = r.dim();
    escalate(id, r, family, 0, |s| {
        let f = s.function()?;
        let (name, targets) = match level {
            StrongLevel::Functions => ("g", vec![s.function()?]),
            StrongLevel::Vectors => ("X", s.vector()?.comps().to_vec()),
            StrongLevel::Forms => ("xi", s.form()?.comps().to_vec()),
        };
        let residual = targets
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let label = if level == StrongLevel::Functions { "eta(df,dg)".to_string() } else { format!("eta(df,d{name}_{})", i + 1) };
                (label, eta_pairing(&f, g, d))
            })
            .collect();
        let mut inputs = vec![("f".to_string(), f)];
        if level == StrongLevel::Functions {
            inputs.push((name.to_string(), targets[0].clone()));
        } else {
            inputs.extend(targets.into_iter().enumerate().map(|(i, p)| (format!("{name}_{}", i + 1), p)));
        }
        Ok(Trial { inputs, residual })
    })
}

/// Entrywise `rho_E rho_E*^* + rho_E* rho_E^* = 0`.
pub fn check_anchor_antisymmetry(r: &DoubledRealization) -> AxiomReport {
    let s = r.anchor_symmetric_part();
    let n = s.len();
    let mut residual = Vec::new();
    for m in 0..n {
        for k in m..n {
            residual.push((format!("S^({},{})", r.chart_index(m), r.chart_index(k)), s[m][k].clone()));
        }
    }
    direct(CheckId::AnchorAntisym, residual)
}

fn triple_label(m: usize, n: usize, l: usize) -> String {
    format!("({},{},{})", m + 1, n + 1, l + 1)
}

/// `F_{MNL} + F_{MLN} = 0` with all slots lowered.
pub fn check_twist_v2(flux: &FluxTensor) -> AxiomReport {
    let s = 2 * flux.dim();
    let mut residual = Vec::new();
    for m in 0..s {
        for n in 0..s {
            for l in n..s {
                let v = flux.lowered(m, n, l) + flux.lowered(m, l, n);
                if !v.is_zero() {
                    residual.push((format!("F_MNL + F_MLN at (M,N,L) = {}", triple_label(m, n, l)), v));
                }
            }
        }
    }
    direct(CheckId::TwistV2, residual)
}

/// Division-free determinant by cofactor expansion memoized on column sets.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    fn rec(m: &[Vec<Poly>], row: usize, used: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        if row == m.len() {
            return Poly::one();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = PolyAcc::new();
        let mut free_before = 0;
        for c in 0..m.len() {
            if used & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = rec(m, row + 1, used | (1 << c), memo);
                let sign = if free_before % 2 == 0 { 1 } else { -1 };
                acc.add_scaled_product(&m[row][c], &minor, &crate::poly::Rational::from_int(sign));
            }
            free_before += 1;
        }
        let out = acc.finish();
        memo.insert(used, out.clone());
        out
    }
    assert!(m.len() < 64, "matrix too large");
    rec(m, 0, 0, &mut HashMap::new())
}

/// `(rho_V)^P_L F_{MN}^L = 0` entrywise; the note records `det rho_V`.
pub fn check_twist_c2(r: &DoubledRealization, flux: &FluxTensor) -> AxiomReport {
    let rho = r.rho_v_matrix();
    let s = 2 * r.dim();
    let mut residual = Vec::new();
    for m in 0..s {
        for n in 0..s {
            for p in 0..s {
                let mut acc = PolyAcc::new();
                for (l, rl) in rho[p].iter().enumerate() {
                    acc.add_product(rl, flux.get(m, n, l));
                }
                let v = acc.finish();
                if !v.is_zero() {
                    residual.push((format!("rho_V F at (M,N) = ({},{}), row {}", m + 1, n + 1, r.chart_index(p)), v));
                }
            }
        }
    }
    let det = determinant(&rho);
    let mut report = direct(CheckId::TwistC2, residual).with_note(format!("det rho_V = {det}"));
    if !flux.is_zero() && !det.is_zero() {
        report = report.with_note("rho_V is invertible and F != 0, so no twist can satisfy this condition");
    }
    report
}

/// The flux read as a one-sided 3-form: `H` on `E` from the `(X, X, xi)`
/// slots or `R` on `E*` from the `(xi, xi, X)` slots.
fn one_sided_form(flux: &FluxTensor) -> Result<Option<(Side, FormField)>, String> {
    let d = flux.dim();
    let entries: Vec<(usize, usize, usize)> = flux.entries().map(|(m, n, l, _)| (m, n, l)).collect();
    if entries.is_empty() {
        return Ok(None);
    }
    let h_slots = entries.iter().all(|&(m, n, l)| m < d && n < d && l >= d);
    let r_slots = entries.iter().all(|&(m, n, l)| m >= d && n >= d && l < d);
    let side = if h_slots {
        Side::E
    } else if r_slots {
        Side::EStar
    } else {
        return Err("mixed flux components; only pure H-type or R-type fluxes are handled".into());
    };
    let read = |a: usize, b: usize, c: usize| match side {
        Side::E => flux.get(a, b, d + c),
        Side::EStar => flux.get(d + a, d + b, c),
    };
    let form = FormField::from_fn(side, d, 3, |t| read(t[0], t[1], t[2]).clone()).map_err(|e| e.to_string())?;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if form.get(&[a, b, c]) != *read(a, b, c) {
                    return Err(format!("flux is not totally antisymmetric at {}", triple_label(a, b, c)));
                }
            }
        }
    }
    Ok(Some((side, form)))
}

/// `dH = 0` (or `d_* R = 0`), plus a cross-check that the twisted Jacobiator
/// defect `Jac_F - D T_F` equals `-i_X3 i_X2 i_X1 dH` on generic admissible
/// sections whenever the untwisted bracket satisfies C1.
///
/// `i_X3 i_X2 i_X1 dH` is the 1-form `dH(X1, X2, X3, .)`. The overall minus
/// comes from `[e1,e2]_F = [e1,e2]_C + e1^M e2^N F_MN^L` together with
/// `H = H_abc` on increasing triples.
pub fn check_bianchi(r: &DoubledRealization, flux: &FluxTensor, family: &GenericSectionFamily) -> Result<AxiomReport, Error> {
    let (side, form) = match one_sided_form(flux) {
        Ok(Some(x)) => x,
        Ok(None) => return Ok(AxiomReport::pass(CheckId::Bianchi, None).with_note("flux is zero")),
        Err(why) => return Ok(AxiomReport::skipped(CheckId::Bianchi, why)),
    };
    let (alg, name) = match side {
        Side::E => (r.e(), "dH"),
        Side::EStar => (r.estar(), "d*R"),
    };
    let dh = alg.d(&form)?;
    let mut report = direct(CheckId::Bianchi, form_labelled(name, &dh));

    if family.count < 3 {
        return Ok(report.with_note("cross-check skipped: needs 3 generic sections"));
    }
    let mut s = family.sampler(r, family.degree);
    let es = sections(&mut s, 3)?;
    let (e1, e2, e3) = (&es[0], &es[1], &es[2]);
    let ((jac, t), (jac_f, t_f)) = {
        let (a, b) = rayon::join(|| jacobiator_and_t(r, None, e1, e2, e3), || jacobiator_and_t(r, Some(flux), e1, e2, e3));
        (a?, b?)
    };
    if !(&jac - &r.d_op(&t)).is_zero() {
        return Ok(report.with_note("cross-check not applicable: the untwisted bracket violates C1"));
    }
    let defect = &jac_f - &r.d_op(&t_f);
    let target = match side {
        Side::E => {
            let w = interior(&e3.x, &interior(&e2.x, &interior(&e1.x, &dh)?)?)?;
            DoubledSection::from_xi(-&w.as_vector())
        }
        Side::EStar => {
            let w = interior(&e3.xi, &interior(&e2.xi, &interior(&e1.xi, &dh)?)?)?;
            DoubledSection::from_x(-&w.as_vector())
        }
    };
    let mismatch = &defect - &target;
    if mismatch.is_zero() {
        report = report.with_note(format!("Jac_F - D T_F = -i_X3 i_X2 i_X1 {name} on generic degree-{} sections", family.degree));
    } else {
        let n = terms(&mismatch.labelled("mismatch"));
        let w = find_witness(&mismatch.labelled("Jac_F - D T_F + iii dF"), &section_inputs(&es)).expect("nonzero");
        report = AxiomReport::fail(CheckId::Bianchi, Some(family.degree), w, n)
            .with_note(format!("twisted Jacobiator defect differs from the contraction of {name}"));
    }
    report.note = Some(format!("{}; T_F = 1/3 (<[e1,e2]_F, e3>_+ + c.p.)", report.note.take().unwrap_or_default()));
    Ok(report)
}

/// Statuses of C1..C5 folded into a family label, with the reports that
/// produced it.
#[derive(Debug, Clone)]
pub struct Classification {
    pub label: ClassificationLabel,
    pub reports: Vec<AxiomReport>,
    pub diagnostic: Option<String>,
}

pub fn classify(r: &DoubledRealization, family: &GenericSectionFamily, flux: Option<&FluxTensor>) -> Result<Classification, Error> {
    let ids = [CheckId::C1, CheckId::C2, CheckId::C3, CheckId::C4, CheckId::C5];
    let reports: Vec<AxiomReport> = ids.par_iter().map(|&id| check_axiom(r, id, family, flux)).collect::<Result<_, _>>()?;
    let ok = |i: usize| reports[i].status == Status::Pass;
    let label = ClassificationLabel::from_axioms(ok(0), ok(1), ok(2), ok(3), ok(4));
    let diagnostic = (ok(0) && !(ok(1) && ok(3))).then(|| {
        "C1 holds while C2 or C4 fails; for a doubled C-bracket the Jacobi identity forces the derivation \
         condition, which implies C2 and C4, so this combination indicates an inconsistency"
            .to_string()
    });
    Ok(Classification { label, reports, diagnostic })
}

/// Violations of C5 => C3, C2 => C4 and derivation => {C1, C2, C4} among the
/// given reports. Checks that are absent or not PASS/FAIL are ignored.
///
/// With `unrestricted_data` the reports describe the operators themselves
/// rather than their restriction to admissible data, and C2 => anchor-antisym
/// is checked as well.
pub fn check_implications(reports: &[AxiomReport], unrestricted_data: bool) -> Vec<String> {
    let status = |id: CheckId| reports.iter().find(|r| r.id == id).map(|r| r.status);
    let mut out = Vec::new();
    let mut implies = |a: CheckId, b: CheckId| {
        if status(a) == Some(Status::Pass) && status(b) == Some(Status::Fail) {
            out.push(format!("{a} passes but {b} fails"));
        }
    };
    implies(CheckId::C5, CheckId::C3);
    implies(CheckId::C2, CheckId::C4);
    implies(CheckId::Derivation, CheckId::C1);
    implies(CheckId::Derivation, CheckId::C2);
    implies(CheckId::Derivation, CheckId::C4);
    if unrestricted_data {
        implies(CheckId::C2, CheckId::AnchorAntisym);
    }
    out
}

/// The coordinates a generic function may use, for callers building data.
pub fn coordinate_vars(dim: usize) -> Vec<Var> {
    DoubledIndex::all(dim).map(DoubledIndex::var).collect()
}

fn require_quadratic(r: &DoubledRealization) -> Result<(), Error> {
    for alg in [r.e(), r.estar()] {
        if !alg.has_zero_anchor() || !alg.has_constant_structure() {
            return Err(Error::Precondition(format!(
                "quadratic checks need zero anchors and constant structure functions; {} does not qualify",
                alg.side()
            )));
        }
    }
    Ok(())
}

/// Checks of the quadratic Lie algebra obtained from zero anchors and
/// constant structure constants: Jacobi on constant sections, `C(infinity)`
/// bilinearity and ad-invariance of `<,>_+`.
pub fn check_quadratic(r: &DoubledRealization, id: CheckId, family: &GenericSectionFamily) -> Result<AxiomReport, Error> {
    require_quadratic(r)?;
    let constants = GenericSectionFamily { degree: 0, ..*family };
    match id {
        CheckId::QuadraticJacobi => escalate(id, r, Source::Generic(&constants), 3, |s| {
            let es = sections(s, 3)?;
            let (jac, _) = jacobiator_and_t(r, None, &es[0], &es[1], &es[2])?;
            Ok(Trial { inputs: section_inputs(&es), residual: jac.labelled("Jac") })
        }),
        CheckId::QuadraticBilinear => escalate(id, r, Source::Generic(&constants), 2, |s| {
            let es = sections(s, 2)?;
            let f = s.poly_in(&coordinate_vars(r.dim()), family.degree.max(1))?;
            let res = &r.c_bracket(&es[0], &es[1].scale(&f))? - &r.c_bracket(&es[0], &es[1])?.scale(&f);
            let mut inputs = section_inputs(&es);
            inputs.push(("f".into(), f));
            Ok(Trial { inputs, residual: res.labelled("[e1,f e2] - f[e1,e2]") })
        }),
        CheckId::QuadraticAdInvariance => escalate(id, r, Source::Generic(&constants), 3, |s| {
            let es = sections(s, 3)?;
            let (e1, e2, e3) = (&es[0], &es[1], &es[2]);
            let res = &r.pair(&r.c_bracket(e1, e2)?, e3) + &r.pair(e2, &r.c_bracket(e1, e3)?);
            Ok(Trial { inputs: section_inputs(&es), residual: vec![("<[e1,e2],e3> + <e2,[e1,e3]>".into(), res)] })
        }),
        other => Err(Error::UnknownCheck(format!("{other} is not a quadratic check"))),
    }
}

/// Antisymmetry and Jacobi identity of `{g, f} = rho_E(d_* g) f`.
pub fn check_poisson(r: &DoubledRealization, id: CheckId, family: &GenericSectionFamily) -> Result<AxiomReport, Error> {
    poisson(r, id, Source::Generic(family))
}

fn poisson(r: &DoubledRealization, id: CheckId, family: Source<'_>) -> Result<AxiomReport, Error> {
    match id {
        CheckId::PoissonAntisym => escalate(id, r, family, 0, |s| {
            let f = s.function()?;
            let g = s.function()?;
            let res = &r.poisson_bracket(&g, &f) + &r.poisson_bracket(&f, &g);
            Ok(Trial { inputs: vec![("f".into(), f), ("g".into(), g)], residual: vec![("{g,f} + {f,g}".into(), res)] })
        }),
        CheckId::PoissonJacobi => escalate(id, r, family, 0, |s| {
            let f = s.function()?;
            let g = s.function()?;
            let h = s.function()?;
            let pb = |a: &Poly, b: &Poly| r.poisson_bracket(a, b);
            let mut acc = PolyAcc::new();
            acc.add(&pb(&f, &pb(&g, &h)));
            acc.add(&pb(&g, &pb(&h, &f)));
            acc.add(&pb(&h, &pb(&f, &g)));
            Ok(Trial {
                inputs: vec![("f".into(), f), ("g".into(), g), ("h".into(), h)],
                residual: vec![("{f,{g,h}} + c.p.".into(), acc.finish())],
            })
        }),
        other => Err(Error::UnknownCheck(format!("{other} is not a Poisson check"))),
    }
}

/// Runs any check by id. Flux-dependent checks are SKIPPED without a flux.
pub fn run_check(
    r: &DoubledRealization,
    id: CheckId,
    family: &GenericSectionFamily,
    flux: Option<&FluxTensor>,
) -> Result<AxiomReport, Error> {
    match id {
        CheckId::C1 | CheckId::C2 | CheckId::C3 | CheckId::C4 | CheckId::C5 | CheckId::V1 | CheckId::V2 => {
            check_axiom(r, id, family, flux)
        }
        CheckId::Derivation => check_derivation_condition(r, family),
        CheckId::StrongFn => check_strong_constraint(r, StrongLevel::Functions, family),
        CheckId::StrongVec => check_strong_constraint(r, StrongLevel::Vectors, family),
        CheckId::StrongForm => check_strong_constraint(r, StrongLevel::Forms, family),
        CheckId::AnchorAntisym => Ok(check_anchor_antisymmetry(r)),
        CheckId::TwistV2 | CheckId::TwistC2 | CheckId::Bianchi => match flux {
            None => Ok(AxiomReport::skipped(id, "no flux given")),
            Some(fl) if id == CheckId::TwistV2 => Ok(check_twist_v2(fl)),
            Some(fl) if id == CheckId::TwistC2 => Ok(check_twist_c2(r, fl)),
            Some(fl) => check_bianchi(r, fl, family),
        },
        CheckId::QuadraticJacobi | CheckId::QuadraticBilinear | CheckId::QuadraticAdInvariance => {
            check_quadratic(r, id, family)
        }
        CheckId::PoissonAntisym | CheckId::PoissonJacobi => check_poisson(r, id, family),
    }
}

/// Runs a check on explicit sections and functions instead of a generic
/// family. Checks that only make sense generically are SKIPPED.
pub fn run_check_explicit(
    r: &DoubledRealization,
    id: CheckId,
    data: &ExplicitData,
    flux: Option<&FluxTensor>,
) -> Result<AxiomReport, Error> {
    let src = Source::Explicit(data);
    match id {
        CheckId::C1 | CheckId::C2 | CheckId::C3 | CheckId::C4 | CheckId::C5 | CheckId::V1 | CheckId::V2 => {
            axiom(r, id, src, flux)
        }
        CheckId::Derivation => derivation(r, src),
        CheckId::StrongFn => strong(r, StrongLevel::Functions, src),
        CheckId::StrongVec => strong(r, StrongLevel::Vectors, src),
        CheckId::StrongForm => strong(r, StrongLevel::Forms, src),
        CheckId::PoissonAntisym | CheckId::PoissonJacobi => poisson(r, id, src),
        _ => Ok(AxiomReport::skipped(id, "not evaluated on explicit data")),
    }
}
