use crate::algebroid::{FrameAlgebroid, Side, TangentField, VectorField};
use crate::error::Error;
use crate::poly::{DoubledIndex, Poly, PolyAcc, Rational};

use super::admissibility::Admissibility;
use super::flux::FluxTensor;
use super::section::DoubledSection;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairingSign {
    Plus,
    Minus,
}

/// `E + E*` for a pair of frame algebroids of equal rank, together with the
/// admissibility rule for test data.
///
/// Construction runs the exact frame-level Lie algebroid check on both
/// members, so every value of this type is a genuine pair of Lie algebroids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledRealization {
    dim: usize,
    e: FrameAlgebroid,
    estar: FrameAlgebroid,
    admissibility: Admissibility,
}

impl DoubledRealization {
    pub fn new(e: FrameAlgebroid, estar: FrameAlgebroid, admissibility: Admissibility) -> Result<Self, Error> {
        if e.side() != Side::E {
            return Err(Error::SideMismatch { expected: Side::E, found: e.side() });
        }
        if estar.side() != Side::EStar {
            return Err(Error::SideMismatch { expected: Side::EStar, found: estar.side() });
        }
        if e.dim() != estar.dim() {
            return Err(Error::DimensionMismatch { what: "rank of E*".into(), expected: e.dim(), found: estar.dim() });
        }
        e.check_frame()?;
        estar.check_frame()?;
        Ok(DoubledRealization { dim: e.dim(), e, estar, admissibility })
    }

    /// Coordinate algebroids on both sides: `rho_E = d_mu`, `rho_E* = dt^mu`.
    pub fn flat(dim: usize, admissibility: Admissibility) -> DoubledRealization {
        DoubledRealization::new(
            FrameAlgebroid::coordinate(Side::E, dim),
            FrameAlgebroid::coordinate(Side::EStar, dim),
            admissibility,
        )
        .expect("coordinate algebroids are valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn e(&self) -> &FrameAlgebroid {
        &self.e
    }

    pub fn estar(&self) -> &FrameAlgebroid {
        &self.estar
    }

    pub fn admissibility(&self) -> &Admissibility {
        &self.admissibility
    }

    pub fn with_admissibility(&self, admissibility: Admissibility) -> DoubledRealization {
        DoubledRealization { admissibility, ..self.clone() }
    }

    fn algebroid(&self, side: Side) -> &FrameAlgebroid {
        match side {
            Side::E => &self.e,
            Side::EStar => &self.estar,
        }
    }

    /// `1/2 (<xi1, X2> +- <xi2, X1>)`.
    pub fn pairing(&self, sign: PairingSign, e1: &DoubledSection, e2: &DoubledSection) -> Poly {
        let mut acc = PolyAcc::new();
        let half = Rational::new(1, 2);
        let neg_half = Rational::new(-1, 2);
        for mu in 0..self.dim {
            acc.add_scaled_product(e1.xi.comp(mu), e2.x.comp(mu), &half);
            let s = match sign {
                PairingSign::Plus => &half,
                PairingSign::Minus => &neg_half,
            };
            acc.add_scaled_product(e2.xi.comp(mu), e1.x.comp(mu), s);
        }
        acc.finish()
    }

    /// `<e1, e2>_+`.
    pub fn pair(&self, e1: &DoubledSection, e2: &DoubledSection) -> Poly {
        self.pairing(PairingSign::Plus, e1, e2)
    }

    /// `rho_V(e) = rho_E(X) + rho_E*(xi)`.
    pub fn rho_v(&self, e: &DoubledSection) -> TangentField {
        &self.e.anchor_of(&e.x) + &self.estar.anchor_of(&e.xi)
    }

    /// `rho_V(e) . f`.
    pub fn apply(&self, e: &DoubledSection, f: &Poly) -> Poly {
        &self.e.apply(&e.x, f) + &self.estar.apply(&e.xi, f)
    }

    /// `rho_V` as a `2D x 2D` matrix: row = chart index, column = frame
    /// component `e^L`.
    pub fn rho_v_matrix(&self) -> Vec<Vec<Poly>> {
        let d = self.dim;
        (0..2 * d)
            .map(|m| {
                (0..2 * d)
                    .map(|l| if l < d { self.e.anchor(m, l).clone() } else { self.estar.anchor(m, l - d).clone() })
                    .collect()
            })
            .collect()
    }

    /// `D f = d_* f + d f`, characterized by `<D f, e>_+ = 1/2 rho_V(e) f`.
    pub fn d_op(&self, f: &Poly) -> DoubledSection {
        DoubledSection::new(self.estar.d_function(f), self.e.d_function(f))
    }

    /// Lie derivative of a section of the opposite algebroid: `L_v w` with
    /// `w` read as a 1-form of the algebroid of `v` (Cartan formula).
    pub fn lie_on_dual(&self, v: &VectorField, w: &VectorField) -> Result<VectorField, Error> {
        let a = self.algebroid(v.on());
        Ok(a.lie_derivative(v, &w.as_form())?.as_vector())
    }

    /// The C-bracket:
    /// `X = [X1,X2]_E + L_xi1 X2 - L_xi2 X1 - d_* <e1,e2>_-`,
    /// `xi = [xi1,xi2]_E* + L_X1 xi2 - L_X2 xi1 + d <e1,e2>_-`.
    pub fn c_bracket(&self, e1: &DoubledSection, e2: &DoubledSection) -> Result<DoubledSection, Error> {
        let minus = self.pairing(PairingSign::Minus, e1, e2);
        let mut x = self.e.bracket(&e1.x, &e2.x)?;
        x = &x + &self.lie_on_dual(&e1.xi, &e2.x)?;
        x = &x - &self.lie_on_dual(&e2.xi, &e1.x)?;
        x = &x - &self.estar.d_function(&minus);
        let mut xi = self.estar.bracket(&e1.xi, &e2.xi)?;
        xi = &xi + &self.lie_on_dual(&e1.x, &e2.xi)?;
        xi = &xi - &self.lie_on_dual(&e2.x, &e1.xi)?;
        xi = &xi + &self.e.d_function(&minus);
        Ok(DoubledSection::new(x, xi))
    }

    /// `[e1, e2]_F = [e1, e2]_C + i_{e2} i_{e1} F`.
    pub fn twisted_c_bracket(&self, flux: &FluxTensor, e1: &DoubledSection, e2: &DoubledSection) -> Result<DoubledSection, Error> {
        if flux.dim() != self.dim {
            return Err(Error::DimensionMismatch { what: "flux tensor".into(), expected: self.dim, found: flux.dim() });
        }
        Ok(&self.c_bracket(e1, e2)? + &flux.contract(e1, e2))
    }

    /// The bracket in use: twisted when a flux is given.
    pub fn bracket(&self, flux: Option<&FluxTensor>, e1: &DoubledSection, e2: &DoubledSection) -> Result<DoubledSection, Error> {
        match flux {
            Some(f) => self.twisted_c_bracket(f, e1, e2),
            None => self.c_bracket(e1, e2),
        }
    }

    /// `pi^{MN} = sum_i rho_E^M_i rho_E*^N_i`, the matrix of
    /// `rho_E rho_E*^*` on the chart.
    pub fn pi_matrix(&self) -> Vec<Vec<Poly>> {
        let d = self.dim;
        (0..2 * d)
            .map(|m| {
                (0..2 * d)
                    .map(|n| {
                        let mut acc = PolyAcc::new();
                        for i in 0..d {
                            acc.add_product(self.e.anchor(m, i), self.estar.anchor(n, i));
                        }
                        acc.finish()
                    })
                    .collect()
            })
            .collect()
    }

    /// `rho_E rho_E*^* + rho_E* rho_E^*`, i.e. `pi + pi^T`.
    pub fn anchor_symmetric_part(&self) -> Vec<Vec<Poly>> {
        let pi = self.pi_matrix();
        let n = pi.len();
        (0..n).map(|m| (0..n).map(|k| &pi[m][k] + &pi[k][m]).collect()).collect()
    }

    /// `{g, f} = pi(d_* g)[f] = pi^{MN} d_N g d_M f`.
    pub fn poisson_bracket(&self, g: &Poly, f: &Poly) -> Poly {
        // rho_E(d_* g) applied to f.
        self.e.apply(&self.estar.d_function(g), f)
    }

    /// The chart partial `d_M` as used by residual labels.
    pub fn chart_index(&self, m: usize) -> DoubledIndex {
        DoubledIndex::from_flat(m, self.dim)
    }
}
