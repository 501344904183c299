#![allow(dead_code)]

use courant_core::*;
use proptest::prelude::*;

pub fn p(src: &str, dim: usize) -> Poly {
    parse_expr(src, dim, 0).unwrap()
}

pub fn coords(dim: usize) -> Vec<Var> {
    DoubledIndex::all(dim).map(DoubledIndex::var).collect()
}

/// Small random polynomials: up to `max_terms` monomials of degree <= 2 in
/// `vars` with coefficients in -3..=3.
pub fn poly_in(vars: Vec<Var>, max_terms: usize) -> impl Strategy<Value = Poly> {
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0..n, 0..=2), -3i64..=3), 0..=max_terms).prop_map(move |terms| {
        let mut out = Poly::zero();
        for (idx, c) in terms {
            let mut m = Poly::int(c);
            for i in idx {
                m = &m * &Poly::var(vars[i]);
            }
            out = &out + &m;
        }
        out
    })
}

pub fn polys(vars: Vec<Var>, count: usize) -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec(poly_in(vars, 3), count)
}

pub fn vector(on: Side, dim: usize, vars: Vec<Var>) -> impl Strategy<Value = VectorField> {
    polys(vars, dim).prop_map(move |c| VectorField::new(on, c))
}

pub fn section(dim: usize, vars: Vec<Var>) -> impl Strategy<Value = DoubledSection> {
    (polys(vars.clone(), dim), polys(vars, dim))
        .prop_map(|(x, xi)| DoubledSection::new(VectorField::new(Side::E, x), VectorField::new(Side::EStar, xi)))
}

pub fn x_vars(dim: usize) -> Vec<Var> {
    (0..dim).map(Var::x).collect()
}

/// Zero anchor, `[a1, a2] = a3`.
pub fn heisenberg(side: Side) -> FrameAlgebroid {
    FrameAlgebroid::new(side, 3, vec![vec![Poly::zero(); 3]; 6], &[(0, 1, 2, Poly::one())]).unwrap()
}

fn eps(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Coordinate `E` and an `E*` anchored by the linear Poisson bivector
/// `beta^{ij} = eps^{ijk} x_k`, with `C_*^{ij}_k = d_k beta^{ij}`.
pub fn beta_realization(adm: Admissibility) -> DoubledRealization {
    let d = 3;
    let mut anchor = vec![vec![Poly::zero(); d]; 2 * d];
    for i in 0..d {
        for j in 0..d {
            let mut b = Poly::zero();
            for k in 0..d {
                b = &b + &Poly::var(Var::x(k)).scale(&Rational::from_int(eps(i, j, k)));
            }
            anchor[j][i] = b;
        }
    }
    let mut c = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                if eps(i, j, k) != 0 {
                    c.push((i, j, k, Poly::int(eps(i, j, k))));
                }
            }
        }
    }
    let estar = FrameAlgebroid::new(Side::EStar, d, anchor, &c).unwrap();
    DoubledRealization::new(FrameAlgebroid::coordinate(Side::E, d), estar, adm).unwrap()
}

pub fn trivial_dual(dim: usize, adm: Admissibility) -> DoubledRealization {
    DoubledRealization::new(FrameAlgebroid::coordinate(Side::E, dim), FrameAlgebroid::trivial(Side::EStar, dim), adm).unwrap()
}
