use std::fmt;

use crate::algebroid::{Side, VectorField};
use crate::poly::{Poly, Rational};

/// A section `e = X + xi` of `E + E*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubledSection {
    pub x: VectorField,
    pub xi: VectorField,
}

impl DoubledSection {
    pub fn new(x: VectorField, xi: VectorField) -> DoubledSection {
        assert_eq!(x.on(), Side::E, "X must be a section of E");
        assert_eq!(xi.on(), Side::EStar, "xi must be a section of E*");
        assert_eq!(x.dim(), xi.dim(), "X and xi must have the same rank");
        DoubledSection { x, xi }
    }

    pub fn zero(dim: usize) -> DoubledSection {
        DoubledSection { x: VectorField::zero(Side::E, dim), xi: VectorField::zero(Side::EStar, dim) }
    }

    /// From the `2D` frame components `e^M = (X^1..X^D, xi_1..xi_D)`.
    pub fn from_components(comps: Vec<Poly>) -> DoubledSection {
        assert!(comps.len() % 2 == 0, "doubled sections have 2D components");
        let d = comps.len() / 2;
        let mut it = comps.into_iter();
        let x: Vec<Poly> = it.by_ref().take(d).collect();
        let xi: Vec<Poly> = it.collect();
        DoubledSection::new(VectorField::new(Side::E, x), VectorField::new(Side::EStar, xi))
    }

    /// Pure `E` part.
    pub fn from_x(x: VectorField) -> DoubledSection {
        let d = x.dim();
        DoubledSection::new(x, VectorField::zero(Side::EStar, d))
    }

    /// Pure `E*` part.
    pub fn from_xi(xi: VectorField) -> DoubledSection {
        let d = xi.dim();
        DoubledSection::new(VectorField::zero(Side::E, d), xi)
    }

    /// The frame element `e_M`.
    pub fn basis(dim: usize, m: usize) -> DoubledSection {
        let mut comps = vec![Poly::zero(); 2 * dim];
        comps[m] = Poly::one();
        DoubledSection::from_components(comps)
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn component(&self, m: usize) -> &Poly {
        let d = self.dim();
        if m < d {
            self.x.comp(m)
        } else {
            self.xi.comp(m - d)
        }
    }

    pub fn components(&self) -> Vec<Poly> {
        self.x.comps().iter().chain(self.xi.comps()).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.xi.is_zero()
    }

    pub fn scale(&self, f: &Poly) -> DoubledSection {
        DoubledSection { x: self.x.scale(f), xi: self.xi.scale(f) }
    }

    pub fn scale_rat(&self, c: &Rational) -> DoubledSection {
        DoubledSection { x: self.x.scale_rat(c), xi: self.xi.scale_rat(c) }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly + Copy) -> DoubledSection {
        DoubledSection { x: self.x.map(f), xi: self.xi.map(f) }
    }

    /// `(label, component)` pairs, `X^mu` then `xi_mu`, for residual reports.
    pub fn labelled(&self, name: &str) -> Vec<(String, Poly)> {
        let d = self.dim();
        (0..2 * d)
            .map(|m| {
                let label = if m < d { format!("{name}.X^{}", m + 1) } else { format!("{name}.xi_{}", m - d + 1) };
                (label, self.component(m).clone())
            })
            .collect()
    }
}

impl std::ops::Add for &DoubledSection {
    type Output = DoubledSection;
    fn add(self, rhs: &DoubledSection) -> DoubledSection {
        DoubledSection { x: &self.x + &rhs.x, xi: &self.xi + &rhs.xi }
    }
}

impl std::ops::Sub for &DoubledSection {
    type Output = DoubledSection;
    fn sub(self, rhs: &DoubledSection) -> DoubledSection {
        DoubledSection { x: &self.x - &rhs.x, xi: &self.xi - &rhs.xi }
    }
}

impl std::ops::Neg for &DoubledSection {
    type Output = DoubledSection;
    fn neg(self) -> DoubledSection {
        DoubledSection { x: -&self.x, xi: -&self.xi }
    }
}

impl fmt::Display for DoubledSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X = {}, xi = {}", self.x, self.xi)
    }
}
