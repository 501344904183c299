use std::fmt;

use crate::error::Error;
use crate::poly::{DoubledIndex, Poly, PolyAcc};

use super::fields::{TangentField, VectorField};

/// Which member of the dual pair an object belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    E,
    EStar,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::E => Side::EStar,
            Side::EStar => Side::E,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::E => "E",
            Side::EStar => "E*",
        })
    }
}

/// A Lie algebroid of rank `D` in a global frame `a_1..a_D` over the flat
/// doubled chart.
///
/// `anchor[M][i]` is the `M`-th chart component of `rho(a_i)`, and
/// `[a_i, a_j] = C^k_{ij} a_k` with `structure(i, j, k) = C^k_{ij}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameAlgebroid {
    side: Side,
    dim: usize,
    anchor: Vec<Vec<Poly>>,
    c: Vec<Vec<Vec<Poly>>>,
}

impl FrameAlgebroid {
    /// Builds from an anchor matrix (`2D` rows, `D` columns) and sparse
    /// structure functions `(i, j, k, C^k_{ij})`, 0-based. Each entry also
    /// fixes `C^k_{ji} = -C^k_{ij}`; contradictory or diagonal entries are
    /// rejected.
    pub fn new(side: Side, dim: usize, anchor: Vec<Vec<Poly>>, structure: &[(usize, usize, usize, Poly)]) -> Result<Self, Error> {
        if anchor.len() != 2 * dim {
            return Err(Error::DimensionMismatch { what: format!("anchor rows of {side}"), expected: 2 * dim, found: anchor.len() });
        }
        if let Some(row) = anchor.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch { what: format!("anchor columns of {side}"), expected: dim, found: row.len() });
        }
        let mut c = vec![vec![vec![Poly::zero(); dim]; dim]; dim];
        let mut set = vec![vec![vec![false; dim]; dim]; dim];
        for (i, j, k, val) in structure {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::IndexOutOfRange { what: format!("structure functions of {side}"), index: i.max(j).max(k) + 1 });
            }
            if i == j {
                if !val.is_zero() {
                    return Err(Error::StructureFunctions(format!("C^{}_{{{}{}}} must vanish", k + 1, i + 1, j + 1)));
                }
                continue;
            }
            for (a, b, v) in [(i, j, val.clone()), (j, i, -val)] {
                if set[a][b][k] && c[a][b][k] != v {
                    return Err(Error::StructureFunctions(format!(
                        "conflicting values for C^{}_{{{}{}}}",
                        k + 1,
                        i + 1,
                        j + 1
                    )));
                }
                set[a][b][k] = true;
                c[a][b][k] = v;
            }
        }
        Ok(FrameAlgebroid { side, dim, anchor, c })
    }

    /// Anchor `rho(a_mu) = d_mu` on `E` and `rho(a^mu) = dt^mu` on `E*`, with
    /// vanishing structure functions.
    pub fn coordinate(side: Side, dim: usize) -> FrameAlgebroid {
        let mut anchor = vec![vec![Poly::zero(); dim]; 2 * dim];
        for mu in 0..dim {
            let row = match side {
                Side::E => mu,
                Side::EStar => dim + mu,
            };
            anchor[row][mu] = Poly::one();
        }
        FrameAlgebroid::new(side, dim, anchor, &[]).expect("well-formed")
    }

    /// Zero anchor, zero bracket.
    pub fn trivial(side: Side, dim: usize) -> FrameAlgebroid {
        FrameAlgebroid::new(side, dim, vec![vec![Poly::zero(); dim]; 2 * dim], &[]).expect("well-formed")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn anchor(&self, m: usize, i: usize) -> &Poly {
        &self.anchor[m][i]
    }

    pub fn anchor_matrix(&self) -> &[Vec<Poly>] {
        &self.anchor
    }

    /// `C^k_{ij}`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.c[i][j][k]
    }

    pub fn has_zero_anchor(&self) -> bool {
        self.anchor.iter().flatten().all(Poly::is_zero)
    }

    pub fn has_constant_structure(&self) -> bool {
        self.c.iter().flatten().flatten().all(Poly::is_coordinate_free)
    }

    /// True when every anchor entry outside the rows of the given chart block
    /// vanishes (`X` block for `E`-type directions, `Xt` block otherwise).
    pub fn anchor_within_block(&self, xt_block: bool) -> bool {
        self.anchor.iter().enumerate().all(|(m, row)| {
            let in_block = (m >= self.dim) == xt_block;
            in_block || row.iter().all(Poly::is_zero)
        })
    }

    /// `rho(a_i) . f`.
    pub fn frame_derivative(&self, i: usize, f: &Poly) -> Poly {
        // Coordinate-like frames: a single constant entry in the column.
        let mut nonzero = (0..2 * self.dim).filter(|&m| !self.anchor[m][i].is_zero());
        if let (Some(m), None) = (nonzero.next(), nonzero.next()) {
            if let Some(c) = self.anchor[m][i].as_constant() {
                let df = f.partial(DoubledIndex::from_flat(m, self.dim));
                return if c.is_one() { df } else { df.scale(&c) };
            }
        }
        let mut acc = PolyAcc::new();
        for m in 0..2 * self.dim {
            let r = &self.anchor[m][i];
            if r.is_zero() {
                continue;
            }
            let df = f.partial(DoubledIndex::from_flat(m, self.dim));
            acc.add_product(r, &df);
        }
        acc.finish()
    }

    /// `rho(v) . f`.
    pub fn apply(&self, v: &VectorField, f: &Poly) -> Poly {
        let mut acc = PolyAcc::new();
        for i in 0..self.dim {
            if v.comp(i).is_zero() {
                continue;
            }
            acc.add_product(v.comp(i), &self.frame_derivative(i, f));
        }
        acc.finish()
    }

    /// `rho(v)` as a vector field on the doubled chart.
    pub fn anchor_of(&self, v: &VectorField) -> TangentField {
        let comps = (0..2 * self.dim)
            .map(|m| {
                let mut acc = PolyAcc::new();
                for i in 0..self.dim {
                    acc.add_product(&self.anchor[m][i], v.comp(i));
                }
                acc.finish()
            })
            .collect();
        TangentField::new(comps)
    }

    /// `rho(a_i)` as a chart vector field.
    pub fn frame_anchor(&self, i: usize) -> TangentField {
        TangentField::new((0..2 * self.dim).map(|m| self.anchor[m][i].clone()).collect())
    }

    pub(crate) fn check_side(&self, found: Side) -> Result<(), Error> {
        if found != self.side {
            return Err(Error::SideMismatch { expected: self.side, found });
        }
        Ok(())
    }

    pub(crate) fn check_dim(&self, what: &str, found: usize) -> Result<(), Error> {
        if found != self.dim {
            return Err(Error::DimensionMismatch { what: what.to_string(), expected: self.dim, found });
        }
        Ok(())
    }

    /// Exact frame-level check: anchor homomorphism on every frame pair and
    /// the Jacobi identity on every frame triple. Once the anchor is a
    /// homomorphism the Jacobiator is tensorial, so this decides whether the
    /// data define a Lie algebroid.
    pub fn check_frame(&self) -> Result<(), Error> {
        let d = self.dim;
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = self.frame_anchor(i).bracket(&self.frame_anchor(j));
                for m in 0..2 * d {
                    let mut acc = PolyAcc::new();
                    for k in 0..d {
                        acc.add_product(&self.c[i][j][k], &self.anchor[m][k]);
                    }
                    let diff = &acc.finish() - lhs.comp(m);
                    if !diff.is_zero() {
                        return Err(Error::NotLieAlgebroid {
                            side: self.side,
                            identity: "anchor homomorphism",
                            detail: format!(
                                "rho([a{}, a{}]) - [rho a{}, rho a{}] has component {} = {}",
                                i + 1,
                                j + 1,
                                i + 1,
                                j + 1,
                                DoubledIndex::from_flat(m, d),
                                diff
                            ),
                        });
                    }
                }
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                for l in (j + 1)..d {
                    for m in 0..d {
                        let mut acc = PolyAcc::new();
                        for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                            for k in 0..d {
                                acc.add_product(&self.c[a][b][k], &self.c[k][c][m]);
                            }
                            acc.sub(&self.frame_derivative(c, &self.c[a][b][m]));
                        }
                        let jac = acc.finish();
                        if !jac.is_zero() {
                            return Err(Error::NotLieAlgebroid {
                                side: self.side,
                                identity: "Jacobi",
                                detail: format!(
                                    "component {} of the Jacobiator of (a{}, a{}, a{}) is {}",
                                    m + 1,
                                    i + 1,
                                    j + 1,
                                    l + 1,
                                    jac
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure functions with scalar factor, for sparse loops.
    pub(crate) fn nonzero_structure(&self) -> Vec<(usize, usize, usize, &Poly)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out.push((i, j, k, &self.c[i][j][k]));
                    }
                }
            }
        }
        out
    }
}
