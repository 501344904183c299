//! Generic test data with fresh parameters, and witness extraction from
//! nonzero residuals.

use std::fmt;

use crate::error::Error;
use crate::poly::{Monomial, Poly, PolyAcc, Rational, Var};

/// Upper bound on parameters a single check may allocate.
pub const PARAM_BUDGET: usize = 1 << 22;

/// Hands out parameter variables that never repeat.
#[derive(Debug, Clone)]
pub struct ParamPool {
    next: usize,
    limit: usize,
}

impl ParamPool {
    pub fn new(start: usize) -> ParamPool {
        ParamPool { next: start, limit: start.saturating_add(PARAM_BUDGET) }
    }

    pub fn fresh(&mut self) -> Result<Var, Error> {
        if self.next >= self.limit || self.next > crate::poly::MAX_VAR_INDEX {
            return Err(Error::ParamBudget { limit: PARAM_BUDGET });
        }
        let v = Var::param(self.next);
        self.next += 1;
        Ok(v)
    }

    pub fn used(&self) -> usize {
        self.next
    }
}

/// All monomials of total degree `<= degree` in `vars`, graded then
/// lexicographic in the order of `vars`.
pub fn monomials_up_to(vars: &[Var], degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut layer: Vec<(Monomial, usize)> = vec![(Monomial::one(), 0)];
    for _ in 0..degree {
        let mut next = Vec::new();
        for (m, start) in &layer {
            for (i, &v) in vars.iter().enumerate().skip(*start) {
                next.push((m.mul(&Monomial::var(v)), i));
            }
        }
        out.extend(next.iter().map(|(m, _)| m.clone()));
        layer = next;
    }
    out
}

/// `sum_m p_m * m` over [`monomials_up_to`], one fresh parameter per monomial.
pub fn generic_poly(vars: &[Var], degree: u32, pool: &mut ParamPool) -> Result<Poly, Error> {
    let mut acc = PolyAcc::new();
    for m in monomials_up_to(vars, degree) {
        let p = pool.fresh()?;
        acc.push(m.mul(&Monomial::var(p)), Rational::one());
    }
    Ok(acc.finish())
}

/// A concrete counterexample: parameter-free inputs, the residual component
/// that survives, and a coordinate point where it is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<(String, String)>,
    pub component: String,
    pub residual: Poly,
    pub point: Vec<(Var, Rational)>,
    pub value: Rational,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let point: Vec<String> = self.point.iter().map(|(v, x)| format!("{v} = {x}")).collect();
        write!(f, "{{{}}} gives {} = {}", inputs.join(", "), self.component, self.residual)?;
        if self.residual.is_constant() {
            return Ok(());
        }
        write!(f, " (= {} at {{{}}})", self.value, point.join(", "))
    }
}

/// Builds a witness for the first nonzero component of `residual`.
///
/// Parameter monomials of that component are tried in lexicographic order of
/// their sorted index lists; the chosen parameters are set to 1 and all others
/// to 0. The specialized residual is then evaluated on the integer grid
/// `0..=deg` (all zeros first) until it is nonzero.
pub fn find_witness(residual: &[(String, Poly)], inputs: &[(String, Poly)]) -> Option<Witness> {
    let (label, r) = residual.iter().find(|(_, p)| !p.is_zero())?;
    let mut candidates: Vec<Vec<Var>> = r
        .split_by_params()
        .into_iter()
        .map(|(m, _)| m.factors().iter().flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize)).collect())
        .collect();
    candidates.sort();
    candidates.dedup();
    for scale in 1..=3i64 {
        for cand in &candidates {
            let value = |v: Var| -> Option<Rational> {
                if !v.is_param() {
                    None
                } else if cand.contains(&v) {
                    Some(Rational::from_int(scale))
                } else {
                    Some(Rational::zero())
                }
            };
            let special = r.substitute(value);
            if special.is_zero() {
                continue;
            }
            let (point, val) = nonzero_point(&special)?;
            let shown = inputs
                .iter()
                .map(|(k, p)| (k.clone(), p.substitute(value)))
                .filter(|(_, p)| !p.is_zero())
                .map(|(k, p)| (k, p.to_string()))
                .collect();
            return Some(Witness {
                inputs: shown,
                component: label.clone(),
                residual: special,
                point,
                value: val,
            });
        }
    }
    None
}

/// Smallest grid point (odometer order) where a nonzero parameter-free
/// polynomial does not vanish. A nonzero polynomial of degree `d` cannot
/// vanish on all of `{0..d}^n`.
pub fn nonzero_point(p: &Poly) -> Option<(Vec<(Var, Rational)>, Rational)> {
    let vars: Vec<Var> = p.vars().into_iter().collect();
    let bound = p.total_degree() as i64;
    let mut digits = vec![0i64; vars.len()];
    loop {
        let val = p.eval(|v| match vars.iter().position(|&w| w == v) {
            Some(i) => Rational::from_int(digits[i]),
            None => Rational::zero(),
        });
        if !val.is_zero() {
            let point = vars.iter().zip(&digits).map(|(&v, &d)| (v, Rational::from_int(d))).collect();
            return Some((point, val));
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return None;
            }
            digits[i] += 1;
            if digits[i] <= bound {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_expr;

    #[test]
    fn monomial_layout_is_graded() {
        let vars = [Var::x(0), Var::xt(0)];
        let ms: Vec<String> = monomials_up_to(&vars, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, ["1", "x1", "xt1", "x1^2", "x1*xt1", "xt1^2"]);
    }

    #[test]
    fn pool_never_repeats() {
        let mut pool = ParamPool::new(5);
        let a = generic_poly(&[Var::x(0)], 1, &mut pool).unwrap();
        let b = generic_poly(&[Var::x(0)], 1, &mut pool).unwrap();
        let params = |p: &Poly| p.vars().into_iter().filter(|v| v.is_param()).collect::<std::collections::BTreeSet<_>>();
        assert!(params(&a).is_disjoint(&params(&b)));
        assert_eq!(pool.used(), 9);
    }

    #[test]
    fn witness_prefers_smallest_parameter_list() {
        // p2*p6 + p3*p5 with f = p1 + p2 x1 + p3 xt1, g = p4 + p5 x1 + p6 xt1.
        let f = parse_expr("p1 + p2*x1 + p3*xt1", 1, 6).unwrap();
        let g = parse_expr("p4 + p5*x1 + p6*xt1", 1, 6).unwrap();
        let r = parse_expr("p2*p6 + p3*p5", 1, 6).unwrap();
        let w = find_witness(&[("r".into(), r)], &[("f".into(), f), ("g".into(), g)]).unwrap();
        assert_eq!(w.inputs, vec![("f".to_string(), "x1".to_string()), ("g".to_string(), "xt1".to_string())]);
        assert_eq!(w.value, Rational::one());
    }

    #[test]
    fn grid_search_finds_nonroot() {
        let p = parse_expr("x1*(x1 - 1)*xt1", 1, 0).unwrap();
        let (point, v) = nonzero_point(&p).unwrap();
        assert!(!v.is_zero());
        assert_eq!(point[0].1, Rational::from_int(2));
    }
}
