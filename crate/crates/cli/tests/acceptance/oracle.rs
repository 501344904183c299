//! Brute-force expander for the flat double, written directly in components.
//!
//! Nothing here calls the engine: polynomials are sparse maps from exponent
//! maps to big rationals, and every operator is spelled out index by index.
//! Variable `i < D` is `x_i`, `D + i` is `xt_i`, and `PARAM_BASE + p` is a
//! parameter (constant under all derivatives).

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub const PARAM_BASE: usize = 1 << 20;

type Mono = BTreeMap<usize, u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct P(BTreeMap<Mono, BigRational>);

impl P {
    pub fn zero() -> P {
        P::default()
    }

    pub fn constant(c: BigRational) -> P {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Mono::new(), c);
        }
        P(m)
    }

    pub fn int(n: i64) -> P {
        P::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn half() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2))
    }

    pub fn var(v: usize) -> P {
        P::term(Mono::from([(v, 1)]), BigRational::one())
    }

    pub fn term(m: Mono, c: BigRational) -> P {
        let mut p = P::zero();
        p.push(m, c);
        p
    }

    pub fn push(&mut self, m: Mono, c: BigRational) {
        let slot = self.0.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.0.iter()
    }

    pub fn scale(&self, c: &BigRational) -> P {
        let mut out = P::zero();
        for (m, k) in &self.0 {
            out.push(m.clone(), k * c);
        }
        out
    }

    /// Partial derivative in variable `v`.
    pub fn diff(&self, v: usize) -> P {
        let mut out = P::zero();
        for (m, c) in &self.0 {
            if let Some(&e) = m.get(&v) {
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(&v);
                } else {
                    m2.insert(v, e - 1);
                }
                out.push(m2, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }
}

impl Add for &P {
    type Output = P;
    fn add(self, o: &P) -> P {
        let mut out = self.clone();
        for (m, c) in &o.0 {
            out.push(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &P {
    type Output = P;
    fn neg(self) -> P {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &P {
    type Output = P;
    fn sub(self, o: &P) -> P {
        self + &(-o)
    }
}

impl Mul for &P {
    type Output = P;
    fn mul(self, o: &P) -> P {
        let mut out = P::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &o.0 {
                let mut m = a.clone();
                for (v, e) in b {
                    *m.entry(*v).or_insert(0) += e;
                }
                out.push(m, ca * cb);
            }
        }
        out
    }
}

fn sum(it: impl IntoIterator<Item = P>) -> P {
    it.into_iter().fold(P::zero(), |a, b| &a + &b)
}

/// A section `X + xi` of the flat double: `x[i]` along `d_i`, `xi[i]` along `dt^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sec {
    pub x: Vec<P>,
    pub xi: Vec<P>,
}

impl Sec {
    fn add(&self, o: &Sec) -> Sec {
        Sec {
            x: self.x.iter().zip(&o.x).map(|(a, b)| a + b).collect(),
            xi: self.xi.iter().zip(&o.xi).map(|(a, b)| a + b).collect(),
        }
    }

    fn sub(&self, o: &Sec) -> Sec {
        Sec {
            x: self.x.iter().zip(&o.x).map(|(a, b)| a - b).collect(),
            xi: self.xi.iter().zip(&o.xi).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().chain(&self.xi).all(P::is_zero)
    }
}

/// The flat double of rank `d`: `E` anchored by `d_i`, `E*` by `dt^i`, no
/// structure constants.
pub struct Flat {
    pub d: usize,
}

type Two = Vec<Vec<P>>;

impl Flat {
    fn dx(&self, f: &P, i: usize) -> P {
        f.diff(i)
    }

    fn dxt(&self, f: &P, i: usize) -> P {
        f.diff(self.d + i)
    }

    /// `[X, Y]^k = X^i d_i Y^k - Y^i d_i X^k`.
    pub fn bracket_e(&self, x: &[P], y: &[P]) -> Vec<P> {
        (0..self.d)
            .map(|k| sum((0..self.d).map(|i| &(&x[i] * &self.dx(&y[k], i)) - &(&y[i] * &self.dx(&x[k], i)))))
            .collect()
    }

    /// `[xi, eta]_k = xi_i dt^i eta_k - eta_i dt^i xi_k`.
    pub fn bracket_estar(&self, a: &[P], b: &[P]) -> Vec<P> {
        (0..self.d)
            .map(|k| sum((0..self.d).map(|i| &(&a[i] * &self.dxt(&b[k], i)) - &(&b[i] * &self.dxt(&a[k], i)))))
            .collect()
    }

    /// `(L_X xi)_j = X^i d_i xi_j + xi_i d_j X^i`.
    pub fn lie_x_on_form(&self, x: &[P], xi: &[P]) -> Vec<P> {
        (0..self.d)
            .map(|j| sum((0..self.d).map(|i| &(&x[i] * &self.dx(&xi[j], i)) + &(&xi[i] * &self.dx(&x[i], j)))))
            .collect()
    }

    /// `(L_xi X)^j = xi_i dt^i X^j + X^i dt^j xi_i`.
    pub fn lie_xi_on_vector(&self, xi: &[P], x: &[P]) -> Vec<P> {
        (0..self.d)
            .map(|j| sum((0..self.d).map(|i| &(&xi[i] * &self.dxt(&x[j], i)) + &(&x[i] * &self.dxt(&xi[i], j)))))
            .collect()
    }

    pub fn grad(&self, f: &P) -> Vec<P> {
        (0..self.d).map(|i| self.dx(f, i)).collect()
    }

    pub fn grad_t(&self, f: &P) -> Vec<P> {
        (0..self.d).map(|i| self.dxt(f, i)).collect()
    }

    /// `(d xi)_{ij} = d_i xi_j - d_j xi_i`.
    fn d_form(&self, xi: &[P]) -> Two {
        (0..self.d).map(|i| (0..self.d).map(|j| &self.dx(&xi[j], i) - &self.dx(&xi[i], j)).collect()).collect()
    }

    /// `(d_* X)^{ij} = dt^i X^j - dt^j X^i`.
    fn dstar_vector(&self, x: &[P]) -> Two {
        (0..self.d).map(|i| (0..self.d).map(|j| &self.dxt(&x[j], i) - &self.dxt(&x[i], j)).collect()).collect()
    }

    /// Lie derivative along `V` of a skew 2-tensor with both indices of the
    /// type `V` pushes forward, using the partials `del`:
    /// `V^i del_i W^{jk} - W^{ik} del_i V^j - W^{ji} del_i V^k`.
    fn lie_two(&self, v: &[P], w: &Two, del: impl Fn(&P, usize) -> P) -> Two {
        (0..self.d)
            .map(|j| {
                (0..self.d)
                    .map(|k| {
                        sum((0..self.d).map(|i| {
                            let a = &v[i] * &del(&w[j][k], i);
                            let b = &w[i][k] * &del(&v[j], i);
                            let c = &w[j][i] * &del(&v[k], i);
                            &(&a - &b) - &c
                        }))
                    })
                    .collect()
            })
            .collect()
    }

    /// `(i_v W)_k = v^j W_{jk}`.
    fn contract_first(&self, v: &[P], w: &Two) -> Vec<P> {
        (0..self.d).map(|k| sum((0..self.d).map(|j| &v[j] * &w[j][k]))).collect()
    }

    fn add2(a: &Two, b: &Two) -> Two {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p + q).collect()).collect()
    }

    fn sub2(a: &Two, b: &Two) -> Two {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p - q).collect()).collect()
    }

    fn dot(a: &[P], b: &[P]) -> P {
        sum(a.iter().zip(b).map(|(p, q)| p * q))
    }

    /// `<e1,e2>_- = 1/2 (xi1(X2) - xi2(X1))`.
    pub fn pair_minus(&self, e1: &Sec, e2: &Sec) -> P {
        (&Flat::dot(&e1.xi, &e2.x) - &Flat::dot(&e2.xi, &e1.x)).scale(&P::half())
    }

    /// `<e1,e2>_+ = 1/2 (xi1(X2) + xi2(X1))`.
    pub fn pair_plus(&self, e1: &Sec, e2: &Sec) -> P {
        (&Flat::dot(&e1.xi, &e2.x) + &Flat::dot(&e2.xi, &e1.x)).scale(&P::half())
    }

    /// `D f = d_* f + d f`, so that `<Df, e>_+ = 1/2 rho(e) f`.
    pub fn d_op(&self, f: &P) -> Sec {
        Sec { x: self.grad_t(f), xi: self.grad(f) }
    }

    /// The C-bracket, term by term:
    /// `[X1,X2] + L_xi1 X2 - L_xi2 X1 - d_* <e1,e2>_-`
    /// `+ [xi1,xi2] + L_X1 xi2 - L_X2 xi1 + d <e1,e2>_-`.
    pub fn c_bracket(&self, e1: &Sec, e2: &Sec) -> Sec {
        let g = self.pair_minus(e1, e2);
        let dg = self.grad(&g);
        let dsg = self.grad_t(&g);
        let a = self.bracket_e(&e1.x, &e2.x);
        let b = self.lie_xi_on_vector(&e1.xi, &e2.x);
        let c = self.lie_xi_on_vector(&e2.xi, &e1.x);
        let x = (0..self.d).map(|k| &(&(&a[k] + &b[k]) - &c[k]) - &dsg[k]).collect();
        let a = self.bracket_estar(&e1.xi, &e2.xi);
        let b = self.lie_x_on_form(&e1.x, &e2.xi);
        let c = self.lie_x_on_form(&e2.x, &e1.xi);
        let xi = (0..self.d).map(|k| &(&(&a[k] + &b[k]) - &c[k]) + &dg[k]).collect();
        Sec { x, xi }
    }

    /// The standard Courant bracket on `TM + T*M` for fields depending on
    /// `x` only: `[X,Y] + L_X eta - L_Y xi - 1/2 d(i_X eta - i_Y xi)`.
    pub fn courant(&self, e1: &Sec, e2: &Sec) -> Sec {
        let x = self.bracket_e(&e1.x, &e2.x);
        let a = self.lie_x_on_form(&e1.x, &e2.xi);
        let b = self.lie_x_on_form(&e2.x, &e1.xi);
        let h = (&Flat::dot(&e2.xi, &e1.x) - &Flat::dot(&e1.xi, &e2.x)).scale(&P::half());
        let dh = self.grad(&h);
        let xi = (0..self.d).map(|k| &(&a[k] - &b[k]) - &dh[k]).collect();
        Sec { x, xi }
    }

    /// `J1` and `J2` for the ordered triple, expanded in components.
    pub fn j1_j2(&self, e1: &Sec, e2: &Sec, e3: &Sec) -> (Sec, Sec) {
        let dxt = |f: &P, i: usize| self.dxt(f, i);
        let dx = |f: &P, i: usize| self.dx(f, i);

        // d[xi1,xi2] - L_xi1 d xi2 + L_xi2 d xi1, an E-2-form; L_xi acts as
        // the E* Lie derivative of bivectors.
        let w = Flat::add2(
            &Flat::sub2(
                &self.d_form(&self.bracket_estar(&e1.xi, &e2.xi)),
                &self.lie_two(&e1.xi, &self.d_form(&e2.xi), dxt),
            ),
            &self.lie_two(&e2.xi, &self.d_form(&e1.xi), dxt),
        );
        let j1_xi = self.contract_first(&e3.x, &w);

        let w = Flat::add2(
            &Flat::sub2(
                &self.dstar_vector(&self.bracket_e(&e1.x, &e2.x)),
                &self.lie_two(&e1.x, &self.dstar_vector(&e2.x), dx),
            ),
            &self.lie_two(&e2.x, &self.dstar_vector(&e1.x), dx),
        );
        let j1_x = self.contract_first(&e3.xi, &w);

        let g = self.pair_minus(e1, e2);
        let (dg, dsg) = (self.grad(&g), self.grad_t(&g));
        let a = self.lie_x_on_form(&dsg, &e3.xi);
        let b = self.bracket_estar(&dg, &e3.xi);
        let j2_xi = (0..self.d).map(|k| &a[k] + &b[k]).collect();
        let a = self.lie_xi_on_vector(&dg, &e3.x);
        let b = self.bracket_e(&dsg, &e3.x);
        let j2_x = (0..self.d).map(|k| -&(&a[k] + &b[k])).collect();

        (Sec { x: j1_x, xi: j1_xi }, Sec { x: j2_x, xi: j2_xi })
    }

    /// `[[e1,e2],e3] + c.p.` and `T = 1/3 (<[e1,e2],e3>_+ + c.p.)`.
    pub fn jacobiator_and_t(&self, e: [&Sec; 3]) -> (Sec, P) {
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let mut jac: Option<Sec> = None;
        let mut t = P::zero();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let ab = self.c_bracket(e[a], e[b]);
            t = &t + &self.pair_plus(&ab, e[c]);
            let outer = self.c_bracket(&ab, e[c]);
            jac = Some(match jac {
                None => outer,
                Some(j) => j.add(&outer),
            });
        }
        (jac.expect("three terms"), t.scale(&third))
    }

    /// `Jac - D T + (J1 + J2 + c.p.)`.
    pub fn decomposition_residual(&self, e: [&Sec; 3]) -> Sec {
        let (jac, t) = self.jacobiator_and_t(e);
        let mut out = jac.sub(&self.d_op(&t));
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let (j1, j2) = self.j1_j2(e[a], e[b], e[c]);
            out = out.add(&j1).add(&j2);
        }
        out
    }
}
