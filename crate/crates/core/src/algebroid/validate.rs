use crate::error::Error;
use crate::generic::{find_witness, generic_poly, ParamPool, Witness};
use crate::poly::{DoubledIndex, Poly, Var};

use super::fields::VectorField;
use super::frame::FrameAlgebroid;

/// Outcome of [`validate_lie_algebroid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Pass,
    Fail { identity: &'static str, witness: Witness },
}

impl Validation {
    pub fn passed(&self) -> bool {
        matches!(self, Validation::Pass)
    }
}

fn generic_field(a: &FrameAlgebroid, vars: &[Var], degree: u32, pool: &mut ParamPool) -> Result<VectorField, Error> {
    let comps = (0..a.dim()).map(|_| generic_poly(vars, degree, pool)).collect::<Result<_, _>>()?;
    Ok(VectorField::new(a.side(), comps))
}

fn labelled(name: &str, v: &VectorField) -> Vec<(String, Poly)> {
    v.comps().iter().enumerate().map(|(i, c)| (format!("{name}^{}", i + 1), c.clone())).collect()
}

/// Checks, on generic fields with coefficients of degree `<= degree` in all
/// chart coordinates: the Jacobi identity, the anchor homomorphism and the
/// Leibniz rule, in that order. Returns the first failure.
pub fn validate_lie_algebroid(a: &FrameAlgebroid, degree: u32) -> Result<Validation, Error> {
    let d = a.dim();
    let vars: Vec<Var> = DoubledIndex::all(d).map(DoubledIndex::var).collect();
    let mut pool = ParamPool::new(0);
    let x = generic_field(a, &vars, degree, &mut pool)?;
    let y = generic_field(a, &vars, degree, &mut pool)?;
    let z = generic_field(a, &vars, degree, &mut pool)?;
    let f = generic_poly(&vars, degree, &mut pool)?;

    let mut inputs = labelled("X", &x);
    inputs.extend(labelled("Y", &y));
    inputs.extend(labelled("Z", &z));

    let xy = a.bracket(&x, &y)?;
    let jac = &(&a.bracket(&xy, &z)? + &a.bracket(&a.bracket(&y, &z)?, &x)?) + &a.bracket(&a.bracket(&z, &x)?, &y)?;
    if let Some(w) = find_witness(&labelled("Jac", &jac), &inputs) {
        return Ok(Validation::Fail { identity: "Jacobi", witness: w });
    }

    let hom = &a.anchor_of(&xy) - &a.anchor_of(&x).bracket(&a.anchor_of(&y));
    let hom_res: Vec<(String, Poly)> = hom
        .comps()
        .iter()
        .enumerate()
        .map(|(m, c)| (format!("hom^{}", DoubledIndex::from_flat(m, d)), c.clone()))
        .collect();
    if let Some(w) = find_witness(&hom_res, &inputs[..2 * d]) {
        return Ok(Validation::Fail { identity: "anchor homomorphism", witness: w });
    }

    let fy = y.scale(&f);
    let leib = &(&a.bracket(&x, &fy)? - &xy.scale(&f)) - &y.scale(&a.apply(&x, &f));
    let mut leib_inputs = inputs[..2 * d].to_vec();
    leib_inputs.push(("f".into(), f));
    if let Some(w) = find_witness(&labelled("Leibniz", &leib), &leib_inputs) {
        return Ok(Validation::Fail { identity: "Leibniz", witness: w });
    }
    Ok(Validation::Pass)
}
