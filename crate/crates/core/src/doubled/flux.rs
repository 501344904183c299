use crate::error::Error;
use crate::poly::{Poly, PolyAcc};

use super::section::DoubledSection;

/// A doubled `(2,1)`-tensor `F_{MN}^L`.
///
/// The last slot follows the frame split: `L < D` is the `E` direction
/// (`F_{MN}^l`), `L >= D` the `E*` direction (`F_{MNl}`). No symmetry is
/// imposed; the twist conditions are checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FluxTensor {
    dim: usize,
    data: Vec<Poly>,
}

impl FluxTensor {
    pub fn zero(dim: usize) -> FluxTensor {
        let n = 2 * dim;
        FluxTensor { dim, data: vec![Poly::zero(); n * n * n] }
    }

    /// From sparse 0-based `(M, N, L, value)` entries; later entries for the
    /// same slot overwrite earlier ones.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Poly)]) -> Result<FluxTensor, Error> {
        let mut f = FluxTensor::zero(dim);
        for (m, n, l, v) in entries {
            f.set(*m, *n, *l, v.clone())?;
        }
        Ok(f)
    }

    /// `F_{mu nu rho} = H_{mu nu rho}` in the slots `(X, X, xi)`.
    pub fn h_type(dim: usize, h: impl Fn(usize, usize, usize) -> Poly) -> FluxTensor {
        let mut f = FluxTensor::zero(dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    f.set(a, b, dim + c, h(a, b, c)).expect("in range");
                }
            }
        }
        f
    }

    /// `F^{mu nu rho} = R^{mu nu rho}` in the slots `(xi, xi, X)`.
    pub fn r_type(dim: usize, r: impl Fn(usize, usize, usize) -> Poly) -> FluxTensor {
        let mut f = FluxTensor::zero(dim);
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    f.set(dim + a, dim + b, c, r(a, b, c)).expect("in range");
                }
            }
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, m: usize, n: usize, l: usize) -> usize {
        let s = 2 * self.dim;
        (m * s + n) * s + l
    }

    pub fn get(&self, m: usize, n: usize, l: usize) -> &Poly {
        &self.data[self.offset(m, n, l)]
    }

    pub fn set(&mut self, m: usize, n: usize, l: usize, v: Poly) -> Result<(), Error> {
        let s = 2 * self.dim;
        if let Some(&bad) = [m, n, l].iter().find(|&&i| i >= s) {
            return Err(Error::IndexOutOfRange { what: "flux tensor".into(), index: bad + 1 });
        }
        let o = self.offset(m, n, l);
        self.data[o] = v;
        Ok(())
    }

    /// All three slots lowered with the flat metric, which swaps the blocks
    /// of the last slot.
    pub fn lowered(&self, m: usize, n: usize, l: usize) -> &Poly {
        let d = self.dim;
        let swapped = if l < d { l + d } else { l - d };
        self.get(m, n, swapped)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// Nonzero entries as `(M, N, L, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Poly)> {
        let s = 2 * self.dim;
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(o, v)| (o / (s * s), (o / s) % s, o % s, v))
    }

    /// `i_{e2} i_{e1} F = e1^M e2^N F_{MN}^L`, split into the `E` and `E*`
    /// parts by the last slot.
    pub fn contract(&self, e1: &DoubledSection, e2: &DoubledSection) -> DoubledSection {
        let s = 2 * self.dim;
        let c1 = e1.components();
        let c2 = e2.components();
        let mut accs: Vec<PolyAcc> = (0..s).map(|_| PolyAcc::new()).collect();
        for (m, n, l, v) in self.entries() {
            if c1[m].is_zero() || c2[n].is_zero() {
                continue;
            }
            accs[l].add_product(&(&c1[m] * &c2[n]), v);
        }
        DoubledSection::from_components(accs.into_iter().map(PolyAcc::finish).collect())
    }
}
