//! Exact polynomial arithmetic in the doubled coordinates `x^mu`, `xt_mu` and
//! free parameters.

mod monomial;
mod parse;
#[allow(clippy::module_inception)]
mod poly;
mod rational;
mod var;

pub use monomial::Monomial;
pub use parse::{parse_expr, ParseError};
pub use poly::{eta_pairing, Poly, PolyAcc};
pub use rational::{ParseRationalError, Rational};
pub use var::{DoubledIndex, Var, VarKind, MAX_VAR_INDEX};
