//! Bracket, differential, contraction and Lie derivatives of a frame
//! algebroid.

use crate::error::Error;
use crate::poly::{Poly, PolyAcc};

use super::fields::{increasing_tuples, FormField, VectorField, MAX_FORM_DEGREE};
use super::frame::FrameAlgebroid;

impl FrameAlgebroid {
    /// `[X,Y]^k = rho(X) Y^k - rho(Y) X^k + C^k_{ij} X^i Y^j`.
    pub fn bracket(&self, x: &VectorField, y: &VectorField) -> Result<VectorField, Error> {
        self.check_side(x.on())?;
        self.check_side(y.on())?;
        self.check_dim("bracket operand", x.dim())?;
        self.check_dim("bracket operand", y.dim())?;
        let structure = self.nonzero_structure();
        let comps = (0..self.dim())
            .map(|k| {
                let mut acc = PolyAcc::new();
                acc.add(&self.apply(x, y.comp(k)));
                acc.sub(&self.apply(y, x.comp(k)));
                for &(i, j, kk, c) in &structure {
                    if kk == k && !x.comp(i).is_zero() && !y.comp(j).is_zero() {
                        acc.add_product(&(c * x.comp(i)), y.comp(j));
                    }
                }
                acc.finish()
            })
            .collect();
        Ok(VectorField::new(self.side(), comps))
    }

    /// The algebroid differential on forms of this algebroid (`d` for `E`,
    /// `d_*` for `E*`).
    pub fn d(&self, w: &FormField) -> Result<FormField, Error> {
        self.check_side(w.on())?;
        self.check_dim("form", w.dim())?;
        let p = w.degree();
        if p + 1 > MAX_FORM_DEGREE {
            return Err(Error::UnsupportedDegree { op: "d", degree: p });
        }
        let structure = self.nonzero_structure();
        FormField::from_fn(w.on(), self.dim(), p + 1, |idx| {
            let mut acc = PolyAcc::new();
            let mut rest = Vec::with_capacity(p + 1);
            for a in 0..=p {
                rest.clear();
                rest.extend(idx.iter().enumerate().filter(|&(t, _)| t != a).map(|(_, &v)| v));
                let term = self.frame_derivative(idx[a], &w.get(&rest));
                if a % 2 == 0 {
                    acc.add(&term);
                } else {
                    acc.sub(&term);
                }
            }
            for a in 0..=p {
                for b in (a + 1)..=p {
                    let positive = (a + b) % 2 == 0;
                    for &(i, j, k, c) in &structure {
                        if i != idx[a] || j != idx[b] {
                            continue;
                        }
                        rest.clear();
                        rest.push(k);
                        rest.extend(idx.iter().enumerate().filter(|&(t, _)| t != a && t != b).map(|(_, &v)| v));
                        let val = w.get(&rest);
                        if val.is_zero() {
                            continue;
                        }
                        let prod = c * &val;
                        if positive {
                            acc.add(&prod);
                        } else {
                            acc.sub(&prod);
                        }
                    }
                }
            }
            acc.finish()
        })
    }

    /// Cartan formula `L_v w = i_v d w + d i_v w` on forms of this algebroid.
    pub fn lie_derivative(&self, v: &VectorField, w: &FormField) -> Result<FormField, Error> {
        self.check_side(v.on())?;
        self.check_side(w.on())?;
        if w.degree() + 1 > MAX_FORM_DEGREE {
            return Err(Error::UnsupportedDegree { op: "lie_derivative", degree: w.degree() });
        }
        let first = interior(v, &self.d(w)?)?;
        if w.degree() == 0 {
            return Ok(first);
        }
        Ok(&first + &self.d(&interior(v, w)?)?)
    }

    /// `[v, W]_S` for a multivector `W` of this algebroid (a form of the dual
    /// side) of degree at most 2, i.e. the Lie derivative of `W` along `v`:
    /// `(L_v W)^I = rho(v) W^I - sum_r M^{i_r}_l W^{..l..}` with
    /// `M^i_l = rho(a_l) v^i - v^j C^i_{jl}`.
    pub fn schouten(&self, v: &VectorField, w: &FormField) -> Result<FormField, Error> {
        self.check_side(v.on())?;
        if w.on() != self.side().dual() {
            return Err(Error::SideMismatch { expected: self.side().dual(), found: w.on() });
        }
        if w.degree() > 2 {
            return Err(Error::UnsupportedDegree { op: "schouten", degree: w.degree() });
        }
        let d = self.dim();
        let structure = self.nonzero_structure();
        // m[i][l] = M^i_l
        let m: Vec<Vec<Poly>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|l| {
                        let mut acc = PolyAcc::new();
                        acc.add(&self.frame_derivative(l, v.comp(i)));
                        for &(j, ll, ii, c) in &structure {
                            if ii == i && ll == l {
                                acc.add_scaled_product(c, v.comp(j), &crate::poly::Rational::from_int(-1));
                            }
                        }
                        acc.finish()
                    })
                    .collect()
            })
            .collect();
        FormField::from_fn(w.on(), d, w.degree(), |idx| {
            let mut acc = PolyAcc::new();
            acc.add(&self.apply(v, &w.get(idx)));
            let mut sub = idx.to_vec();
            for r in 0..idx.len() {
                for (l, row) in (0..d).map(|l| (l, &m[idx[r]][l])) {
                    if row.is_zero() {
                        continue;
                    }
                    sub[r] = l;
                    let val = w.get(&sub);
                    if !val.is_zero() {
                        acc.add_scaled_product(row, &val, &crate::poly::Rational::from_int(-1));
                    }
                }
                sub[r] = idx[r];
            }
            acc.finish()
        })
    }

    /// Convenience: the differential of a function as a section of the dual
    /// algebroid (`d f` in `E*` for `E`, `d_* f` in `E` for `E*`).
    pub fn d_function(&self, f: &Poly) -> VectorField {
        VectorField::new(self.side().dual(), (0..self.dim()).map(|i| self.frame_derivative(i, f)).collect())
    }
}

/// `(i_v w)_J = v^i w_{iJ}`: contraction into the first slot.
pub fn interior(v: &VectorField, w: &FormField) -> Result<FormField, Error> {
    if w.degree() == 0 {
        return Err(Error::UnsupportedDegree { op: "interior_product", degree: 0 });
    }
    if v.on() != w.on() {
        return Err(Error::SideMismatch { expected: w.on(), found: v.on() });
    }
    if v.dim() != w.dim() {
        return Err(Error::DimensionMismatch { what: "interior product".into(), expected: w.dim(), found: v.dim() });
    }
    let d = w.dim();
    let mut idx = Vec::with_capacity(w.degree());
    let tuples = increasing_tuples(d, w.degree() - 1);
    let mut out = FormField::zero(w.on(), d, w.degree() - 1)?;
    for t in tuples {
        let mut acc = PolyAcc::new();
        for i in 0..d {
            if v.comp(i).is_zero() || t.contains(&i) {
                continue;
            }
            idx.clear();
            idx.push(i);
            idx.extend_from_slice(&t);
            let val = w.get(&idx);
            if !val.is_zero() {
                acc.add_product(v.comp(i), &val);
            }
        }
        out.set(&t, acc.finish())?;
    }
    Ok(out)
}
