use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::poly::{DoubledIndex, Poly, PolyAcc, Rational};

use super::frame::Side;

/// A section of `E` (components `X^mu`) or of `E*` (components `xi_mu`) in
/// the global frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    on: Side,
    comps: Vec<Poly>,
}

impl VectorField {
    pub fn new(on: Side, comps: Vec<Poly>) -> VectorField {
        VectorField { on, comps }
    }

    pub fn zero(on: Side, dim: usize) -> VectorField {
        VectorField { on, comps: vec![Poly::zero(); dim] }
    }

    /// The frame element `a_i` (0-based).
    pub fn basis(on: Side, dim: usize, i: usize) -> VectorField {
        let mut v = VectorField::zero(on, dim);
        v.comps[i] = Poly::one();
        v
    }

    pub fn on(&self) -> Side {
        self.on
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comp(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, f: &Poly) -> VectorField {
        VectorField { on: self.on, comps: self.comps.iter().map(|c| c * f).collect() }
    }

    pub fn scale_rat(&self, c: &Rational) -> VectorField {
        VectorField { on: self.on, comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> VectorField {
        VectorField { on: self.on, comps: self.comps.iter().map(f).collect() }
    }

    /// The same components read as a 1-form of the dual algebroid.
    pub fn as_form(&self) -> FormField {
        let mut comps = BTreeMap::new();
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                comps.insert(vec![i], c.clone());
            }
        }
        FormField { on: self.on.dual(), dim: self.dim(), degree: 1, comps }
    }

    /// `<xi, X>` for a pair on opposite sides.
    pub fn contract(&self, other: &VectorField) -> Poly {
        debug_assert_ne!(self.on, other.on);
        let mut acc = PolyAcc::new();
        for (a, b) in self.comps.iter().zip(&other.comps) {
            acc.add_product(a, b);
        }
        acc.finish()
    }
}

fn zip_comps(a: &[Poly], b: &[Poly], f: impl Fn(&Poly, &Poly) -> Poly) -> Vec<Poly> {
    assert_eq!(a.len(), b.len(), "component count mismatch");
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

impl std::ops::Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.on, rhs.on, "adding fields on different sides");
        VectorField { on: self.on, comps: zip_comps(&self.comps, &rhs.comps, |x, y| x + y) }
    }
}

impl std::ops::Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.on, rhs.on, "subtracting fields on different sides");
        VectorField { on: self.on, comps: zip_comps(&self.comps, &rhs.comps, |x, y| x - y) }
    }
}

impl std::ops::Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        self.map(|c| -c)
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A vector field on the doubled chart, components along `d_M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangentField {
    comps: Vec<Poly>,
}

impl TangentField {
    pub fn new(comps: Vec<Poly>) -> TangentField {
        assert!(comps.len() % 2 == 0, "tangent fields have 2D components");
        TangentField { comps }
    }

    pub fn zero(dim: usize) -> TangentField {
        TangentField { comps: vec![Poly::zero(); 2 * dim] }
    }

    pub fn dim(&self) -> usize {
        self.comps.len() / 2
    }

    pub fn comp(&self, m: usize) -> &Poly {
        &self.comps[m]
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// `V^M d_M f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let d = self.dim();
        let mut acc = PolyAcc::new();
        for (m, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                acc.add_product(c, &f.partial(DoubledIndex::from_flat(m, d)));
            }
        }
        acc.finish()
    }

    /// The Lie bracket of vector fields on the chart.
    pub fn bracket(&self, other: &TangentField) -> TangentField {
        let comps = (0..self.comps.len())
            .map(|m| {
                let mut acc = PolyAcc::new();
                acc.add(&self.apply(&other.comps[m]));
                acc.sub(&other.apply(&self.comps[m]));
                acc.finish()
            })
            .collect();
        TangentField { comps }
    }

    pub fn scale_rat(&self, c: &Rational) -> TangentField {
        TangentField { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }
}

impl std::ops::Add for &TangentField {
    type Output = TangentField;
    fn add(self, rhs: &TangentField) -> TangentField {
        TangentField { comps: zip_comps(&self.comps, &rhs.comps, |x, y| x + y) }
    }
}

impl std::ops::Sub for &TangentField {
    type Output = TangentField;
    fn sub(self, rhs: &TangentField) -> TangentField {
        TangentField { comps: zip_comps(&self.comps, &rhs.comps, |x, y| x - y) }
    }
}

/// Largest supported form degree.
pub const MAX_FORM_DEGREE: usize = 4;

/// A `p`-form of the algebroid `on`: a section of `wedge^p` of its dual.
///
/// A form on `E*` is a multivector of `E` and vice versa. Components are kept
/// for strictly increasing index tuples only; zeros are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormField {
    on: Side,
    dim: usize,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(negative)
    }
}

/// Strictly increasing `p`-tuples from `0..dim` in lexicographic order.
pub fn increasing_tuples(dim: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, dim: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(i + 1, dim, p, cur, out);
            cur.pop();
        }
    }
    rec(0, dim, p, &mut cur, &mut out);
    out
}

impl FormField {
    pub fn zero(on: Side, dim: usize, degree: usize) -> Result<FormField, Error> {
        if degree > MAX_FORM_DEGREE {
            return Err(Error::UnsupportedDegree { op: "form", degree });
        }
        Ok(FormField { on, dim, degree, comps: BTreeMap::new() })
    }

    pub fn scalar(on: Side, dim: usize, f: Poly) -> FormField {
        let mut comps = BTreeMap::new();
        if !f.is_zero() {
            comps.insert(Vec::new(), f);
        }
        FormField { on, dim, degree: 0, comps }
    }

    /// Fills every increasing tuple from `f`.
    pub fn from_fn(on: Side, dim: usize, degree: usize, f: impl Fn(&[usize]) -> Poly) -> Result<FormField, Error> {
        let mut out = FormField::zero(on, dim, degree)?;
        for t in increasing_tuples(dim, degree) {
            let v = f(&t);
            if !v.is_zero() {
                out.comps.insert(t, v);
            }
        }
        Ok(out)
    }

    pub fn on(&self) -> Side {
        self.on
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Component for an arbitrary index tuple, antisymmetrized.
    pub fn get(&self, idx: &[usize]) -> Poly {
        debug_assert_eq!(idx.len(), self.degree);
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            None => Poly::zero(),
            Some(neg) => match self.comps.get(&key) {
                None => Poly::zero(),
                Some(v) if neg => -v,
                Some(v) => v.clone(),
            },
        }
    }

    /// Sets the component for `idx` (and, implicitly, all its permutations).
    pub fn set(&mut self, idx: &[usize], value: Poly) -> Result<(), Error> {
        if idx.len() != self.degree {
            return Err(Error::DimensionMismatch { what: "form index tuple".into(), expected: self.degree, found: idx.len() });
        }
        if let Some(&i) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange { what: "form index".into(), index: i + 1 });
        }
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            None if value.is_zero() => Ok(()),
            None => Err(Error::Precondition("repeated index in a form component".into())),
            Some(neg) => {
                let v = if neg { -value } else { value };
                if v.is_zero() {
                    self.comps.remove(&key);
                } else {
                    self.comps.insert(key, v);
                }
                Ok(())
            }
        }
    }

    /// Stored components, increasing tuples only.
    pub fn components(&self) -> impl Iterator<Item = (&[usize], &Poly)> {
        self.comps.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn as_scalar(&self) -> Poly {
        assert_eq!(self.degree, 0, "not a scalar");
        self.get(&[])
    }

    /// A 1-form of `A` read as a section of the dual algebroid.
    pub fn as_vector(&self) -> VectorField {
        assert_eq!(self.degree, 1, "not a 1-form");
        VectorField::new(self.on.dual(), (0..self.dim).map(|i| self.get(&[i])).collect())
    }

    pub fn scale(&self, f: &Poly) -> FormField {
        self.map(|c| c * f)
    }

    pub fn scale_rat(&self, c: &Rational) -> FormField {
        self.map(|p| p.scale(c))
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> FormField {
        let comps = self
            .comps
            .iter()
            .map(|(k, v)| (k.clone(), f(v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        FormField { on: self.on, dim: self.dim, degree: self.degree, comps }
    }

    fn combine(&self, other: &FormField, negate: bool) -> FormField {
        assert_eq!((self.on, self.dim, self.degree), (other.on, other.dim, other.degree), "incompatible forms");
        let mut comps = self.comps.clone();
        for (k, v) in &other.comps {
            let entry = comps.remove(k).unwrap_or_default();
            let s = if negate { &entry - v } else { &entry + v };
            if !s.is_zero() {
                comps.insert(k.clone(), s);
            }
        }
        FormField { on: self.on, dim: self.dim, degree: self.degree, comps }
    }
}

impl std::ops::Add for &FormField {
    type Output = FormField;
    fn add(self, rhs: &FormField) -> FormField {
        self.combine(rhs, false)
    }
}

impl std::ops::Sub for &FormField {
    type Output = FormField;
    fn sub(self, rhs: &FormField) -> FormField {
        self.combine(rhs, true)
    }
}

impl std::ops::Neg for &FormField {
    type Output = FormField;
    fn neg(self) -> FormField {
        self.map(|c| -c)
    }
}
