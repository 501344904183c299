use std::fmt;

/// Kind of an indeterminate in the function ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    /// Ordinary coordinate `x^mu`.
    X,
    /// Winding coordinate `xt_mu`.
    Xt,
    /// Parameter indeterminate; constant under every partial derivative.
    Param,
}

/// An indeterminate, packed into a `u32`: two kind bits above a 30-bit index.
///
/// Indices are 0-based here and 1-based in the textual grammar (`x1`, `xt1`,
/// `p1`). The derived order puts all `x` before all `xt` before all params.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

const KIND_SHIFT: u32 = 30;
const INDEX_MASK: u32 = (1 << KIND_SHIFT) - 1;

/// Largest usable index for any variable kind.
pub const MAX_VAR_INDEX: usize = INDEX_MASK as usize;

impl Var {
    fn pack(kind: u32, index: usize) -> Var {
        assert!(index <= MAX_VAR_INDEX, "variable index {index} out of range");
        Var((kind << KIND_SHIFT) | index as u32)
    }

    pub fn x(index: usize) -> Var {
        Var::pack(0, index)
    }

    pub fn xt(index: usize) -> Var {
        Var::pack(1, index)
    }

    pub fn param(index: usize) -> Var {
        Var::pack(2, index)
    }

    pub fn kind(self) -> VarKind {
        match self.0 >> KIND_SHIFT {
            0 => VarKind::X,
            1 => VarKind::Xt,
            _ => VarKind::Param,
        }
    }

    pub fn index(self) -> usize {
        (self.0 & INDEX_MASK) as usize
    }

    pub fn is_param(self) -> bool {
        self.kind() == VarKind::Param
    }

    pub fn is_coord(self) -> bool {
        !self.is_param()
    }

    /// The doubled index of a coordinate, `None` for parameters.
    pub fn doubled_index(self) -> Option<DoubledIndex> {
        match self.kind() {
            VarKind::X => Some(DoubledIndex::X(self.index())),
            VarKind::Xt => Some(DoubledIndex::Xt(self.index())),
            VarKind::Param => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind() {
            VarKind::X => "x",
            VarKind::Xt => "xt",
            VarKind::Param => "p",
        };
        write!(f, "{prefix}{}", self.index() + 1)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Index `M` of the doubled chart. `X(mu)` is the flat index `mu`, `Xt(mu)`
/// is `D + mu`; the flat metric eta pairs `X(mu)` with `Xt(mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoubledIndex {
    X(usize),
    Xt(usize),
}

impl DoubledIndex {
    /// From a 0-based flat index in `0..2*dim`.
    pub fn from_flat(m: usize, dim: usize) -> DoubledIndex {
        assert!(m < 2 * dim, "doubled index {m} out of range for D = {dim}");
        if m < dim {
            DoubledIndex::X(m)
        } else {
            DoubledIndex::Xt(m - dim)
        }
    }

    pub fn flat(self, dim: usize) -> usize {
        match self {
            DoubledIndex::X(mu) => mu,
            DoubledIndex::Xt(mu) => dim + mu,
        }
    }

    /// Raising or lowering with the flat eta swaps the two blocks.
    pub fn dual(self) -> DoubledIndex {
        match self {
            DoubledIndex::X(mu) => DoubledIndex::Xt(mu),
            DoubledIndex::Xt(mu) => DoubledIndex::X(mu),
        }
    }

    pub fn var(self) -> Var {
        match self {
            DoubledIndex::X(mu) => Var::x(mu),
            DoubledIndex::Xt(mu) => Var::xt(mu),
        }
    }

    pub fn all(dim: usize) -> impl Iterator<Item = DoubledIndex> {
        (0..2 * dim).map(move |m| DoubledIndex::from_flat(m, dim))
    }
}

impl fmt::Display for DoubledIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoubledIndex::X(mu) => write!(f, "d_{}", mu + 1),
            DoubledIndex::Xt(mu) => write!(f, "dt^{}", mu + 1),
        }
    }
}
