use crate::error::Error;
use crate::poly::{Poly, PolyAcc, Rational};

use super::fields::TangentField;

/// An endomorphism `K` of the chart tangent bundle with `K^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParaComplexStructure {
    k: Vec<Vec<Poly>>,
}

impl ParaComplexStructure {
    /// Rejects matrices that are not `2D x 2D` or do not square to the
    /// identity exactly.
    pub fn new(k: Vec<Vec<Poly>>) -> Result<Self, Error> {
        let n = k.len();
        if n % 2 != 0 {
            return Err(Error::DimensionMismatch { what: "para-complex structure rows".into(), expected: n + 1, found: n });
        }
        if let Some(row) = k.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { what: "para-complex structure columns".into(), expected: n, found: row.len() });
        }
        for (r, row) in k.iter().enumerate() {
            for c in 0..n {
                let mut acc = PolyAcc::new();
                for (m, entry) in row.iter().enumerate() {
                    acc.add_product(entry, &k[m][c]);
                }
                let sq = acc.finish();
                let expected = if r == c { Poly::one() } else { Poly::zero() };
                if sq != expected {
                    return Err(Error::NotParaComplex { row: r + 1, col: c + 1 });
                }
            }
        }
        Ok(ParaComplexStructure { k })
    }

    /// `diag(1, .., 1, -1, .., -1)`: `+1` on the `x` block, `-1` on the `xt` block.
    pub fn standard(dim: usize) -> ParaComplexStructure {
        let n = 2 * dim;
        let k = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| match (r == c, r < dim) {
                        (true, true) => Poly::one(),
                        (true, false) => Poly::int(-1),
                        _ => Poly::zero(),
                    })
                    .collect()
            })
            .collect();
        ParaComplexStructure { k }
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.k[r][c]
    }

    pub fn apply(&self, x: &TangentField) -> TangentField {
        let comps = self
            .k
            .iter()
            .map(|row| {
                let mut acc = PolyAcc::new();
                for (e, c) in row.iter().zip(x.comps()) {
                    acc.add_product(e, c);
                }
                acc.finish()
            })
            .collect();
        TangentField::new(comps)
    }

    /// `N_K(X,Y) = 1/4 ([KX,KY] + [X,Y] - K([KX,Y] + [X,KY]))`.
    pub fn nijenhuis(&self, x: &TangentField, y: &TangentField) -> Result<TangentField, Error> {
        let n = self.k.len();
        for f in [x, y] {
            if f.comps().len() != n {
                return Err(Error::DimensionMismatch { what: "tangent field".into(), expected: n, found: f.comps().len() });
            }
        }
        let (kx, ky) = (self.apply(x), self.apply(y));
        let first = &kx.bracket(&ky) + &x.bracket(y);
        let mixed = self.apply(&(&kx.bracket(y) + &x.bracket(&ky)));
        Ok((&first - &mixed).scale_rat(&Rational::new(1, 4)))
    }
}
