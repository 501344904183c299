use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::{DoubledIndex, Var};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are kept sorted by monomial with no zero coefficients and no repeated
/// monomials, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Rational::from_int(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Poly {
        let mut acc = PolyAcc::new();
        for (m, c) in terms {
            acc.push(m, c);
        }
        acc.finish()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|(m, _)| m.vars()).collect()
    }

    /// True when no coordinate variable occurs (parameters may).
    pub fn is_coordinate_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.vars().all(Var::is_param))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Poly {
        let mut acc = PolyAcc::new();
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derivative(v) {
                acc.push(dm, c * &Rational::from_int(e as i64));
            }
        }
        acc.finish()
    }

    /// Partial derivative along a doubled-chart direction.
    pub fn partial(&self, index: DoubledIndex) -> Poly {
        self.derivative(index.var())
    }

    /// Substitutes rational values for the variables `value` maps; the rest
    /// stay symbolic.
    pub fn substitute(&self, value: impl Fn(Var) -> Option<Rational>) -> Poly {
        let mut acc = PolyAcc::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                match value(v) {
                    Some(x) => coeff = &coeff * &x.pow(e),
                    None => kept.push((v, e)),
                }
                if coeff.is_zero() {
                    break;
                }
            }
            if !coeff.is_zero() {
                acc.push(Monomial::from_pairs(kept), coeff);
            }
        }
        acc.finish()
    }

    /// Replaces each variable by a polynomial (`None` keeps it).
    pub fn compose(&self, image: impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut acc = PolyAcc::new();
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.factors() {
                match image(v) {
                    Some(p) => prod = &prod * &p.pow(e),
                    None => kept.push((v, e)),
                }
            }
            let rest = Poly::term(Monomial::from_pairs(kept), Rational::one());
            acc.add_product(&prod, &rest);
        }
        acc.finish()
    }

    /// Full evaluation; variables missing from `value` count as zero.
    pub fn eval(&self, value: impl Fn(Var) -> Rational) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                t = &t * &value(v).pow(e);
            }
            total = &total + &t;
        }
        total
    }

    /// Groups terms by their parameter part: `sum_k P_k(params) * Q_k(coords)`
    /// returned as `(P_k monomial, Q_k)` pairs in monomial order.
    pub fn split_by_params(&self) -> Vec<(Monomial, Poly)> {
        let mut groups: std::collections::BTreeMap<Monomial, PolyAcc> = Default::default();
        for (m, c) in &self.terms {
            let (p, q) = m.split_params();
            groups.entry(p).or_default().push(q, c.clone());
        }
        groups.into_iter().map(|(p, acc)| (p, acc.finish())).collect()
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Poly { terms: out }
    }
}

/// Accumulates unnormalized terms and canonicalizes once at the end; much
/// cheaper than a chain of binary additions.
#[derive(Default)]
pub struct PolyAcc {
    terms: Vec<(Monomial, Rational)>,
}

impl PolyAcc {
    pub fn new() -> PolyAcc {
        PolyAcc { terms: Vec::new() }
    }

    pub fn push(&mut self, m: Monomial, c: Rational) {
        if !c.is_zero() {
            self.terms.push((m, c));
        }
    }

    pub fn add(&mut self, p: &Poly) {
        self.terms.extend(p.terms.iter().cloned());
    }

    pub fn add_scaled(&mut self, p: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.terms.extend(p.terms.iter().map(|(m, k)| (m.clone(), k * c)));
    }

    pub fn sub(&mut self, p: &Poly) {
        self.terms.extend(p.terms.iter().map(|(m, c)| (m.clone(), -c)));
    }

    /// Adds `a * b`.
    pub fn add_product(&mut self, a: &Poly, b: &Poly) {
        self.add_scaled_product(a, b, &Rational::one());
    }

    /// Adds `c * a * b`.
    pub fn add_scaled_product(&mut self, a: &Poly, b: &Poly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.terms.reserve(a.terms.len() * b.terms.len());
        let unit = c.is_one();
        for (ma, ca) in &a.terms {
            let cac = if unit { ca.clone() } else { ca * c };
            for (mb, cb) in &b.terms {
                self.terms.push((ma.mul(mb), &cac * cb));
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn finish(mut self) -> Poly {
        if self.terms.is_empty() {
            return Poly::zero();
        }
        // Sorting a permutation keeps the (large) terms in place; each one
        // is then moved exactly once.
        let mut order: Vec<u32> = (0..self.terms.len() as u32).collect();
        order.sort_unstable_by(|&a, &b| self.terms[a as usize].0.cmp(&self.terms[b as usize].0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(self.terms.len());
        for i in order {
            let (m, c) = std::mem::replace(&mut self.terms[i as usize], (Monomial::one(), Rational::zero()));
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => {
                    if out.last().is_some_and(|l| l.1.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc = PolyAcc::new();
        acc.add_product(self, rhs);
        acc.finish()
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl fmt::Display for Poly {
    /// Prints in the expression grammar, highest total degree first, so the
    /// output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<&(Monomial, Rational)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(&b.0)));
        for (i, (m, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// `eta^{MN} d_M f d_N g` on the flat doubled chart of dimension `dim`.
pub fn eta_pairing(f: &Poly, g: &Poly, dim: usize) -> Poly {
    let mut acc = PolyAcc::new();
    for mu in 0..dim {
        let (x, xt) = (DoubledIndex::X(mu), DoubledIndex::Xt(mu));
        acc.add_product(&f.partial(x), &g.partial(xt));
        acc.add_product(&f.partial(xt), &g.partial(x));
    }
    acc.finish()
}
