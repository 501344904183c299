use crate::algebroid::interior;
use crate::doubled::{DoubledRealization, DoubledSection, FluxTensor, PairingSign};
use crate::error::Error;
use crate::poly::{Poly, PolyAcc, Rational};

/// The three brackets `[e1,e2]`, `[e2,e3]`, `[e3,e1]`, computed in parallel.
pub(crate) fn cyclic_brackets(
    r: &DoubledRealization,
    flux: Option<&FluxTensor>,
    e: [&DoubledSection; 3],
) -> Result<[DoubledSection; 3], Error> {
    let (b12, (b23, b31)) = rayon::join(
        || r.bracket(flux, e[0], e[1]),
        || rayon::join(|| r.bracket(flux, e[1], e[2]), || r.bracket(flux, e[2], e[0])),
    );
    Ok([b12?, b23?, b31?])
}

/// `[[e1,e2],e3] + c.p.` and `T = 1/3 (<[e1,e2],e3>_+ + c.p.)` for the
/// bracket in use (twisted when `flux` is given, which makes `T` into `T_F`).
pub fn jacobiator_and_t(
    r: &DoubledRealization,
    flux: Option<&FluxTensor>,
    e1: &DoubledSection,
    e2: &DoubledSection,
    e3: &DoubledSection,
) -> Result<(DoubledSection, Poly), Error> {
    let [b12, b23, b31] = cyclic_brackets(r, flux, [e1, e2, e3])?;
    let (outer, t) = rayon::join(
        || -> Result<DoubledSection, Error> {
            let (a, (b, c)) = rayon::join(
                || r.bracket(flux, &b12, e3),
                || rayon::join(|| r.bracket(flux, &b23, e1), || r.bracket(flux, &b31, e2)),
            );
            Ok(&(&a? + &b?) + &c?)
        },
        || {
            let mut acc = PolyAcc::new();
            acc.add(&r.pair(&b12, e3));
            acc.add(&r.pair(&b23, e1));
            acc.add(&r.pair(&b31, e2));
            acc.finish().scale(&Rational::new(1, 3))
        },
    );
    Ok((outer?, t))
}

pub fn jacobiator(
    r: &DoubledRealization,
    flux: Option<&FluxTensor>,
    e1: &DoubledSection,
    e2: &DoubledSection,
    e3: &DoubledSection,
) -> Result<DoubledSection, Error> {
    Ok(jacobiator_and_t(r, flux, e1, e2, e3)?.0)
}

pub fn t_scalar(
    r: &DoubledRealization,
    flux: Option<&FluxTensor>,
    e1: &DoubledSection,
    e2: &DoubledSection,
    e3: &DoubledSection,
) -> Result<Poly, Error> {
    Ok(jacobiator_and_t(r, flux, e1, e2, e3)?.1)
}

/// `J1` and `J2` for the ordered triple `(e1, e2, e3)`:
///
/// `J1 = i_X3 (d[xi1,xi2] - L_xi1 d xi2 + L_xi2 d xi1)
///     + i_xi3 (d_*[X1,X2] - L_X1 d_* X2 + L_X2 d_* X1)`,
/// `J2 = (L_{d_* g} xi3 + [d g, xi3]) - (L_{d g} X3 + [d_* g, X3])`,
/// with `g = <e1,e2>_-`. The Lie derivatives on 2-forms are Schouten
/// derivatives of the opposite algebroid.
pub fn compute_j1_j2(
    r: &DoubledRealization,
    e1: &DoubledSection,
    e2: &DoubledSection,
    e3: &DoubledSection,
) -> Result<(DoubledSection, DoubledSection), Error> {
    let (e, es) = (r.e(), r.estar());

    let dxi1 = e.d(&e1.xi.as_form())?;
    let dxi2 = e.d(&e2.xi.as_form())?;
    let inner_xi = &(&e.d(&es.bracket(&e1.xi, &e2.xi)?.as_form())? - &es.schouten(&e1.xi, &dxi2)?) + &es.schouten(&e2.xi, &dxi1)?;
    let j1_xi = interior(&e3.x, &inner_xi)?.as_vector();

    let dx1 = es.d(&e1.x.as_form())?;
    let dx2 = es.d(&e2.x.as_form())?;
    let inner_x = &(&es.d(&e.bracket(&e1.x, &e2.x)?.as_form())? - &e.schouten(&e1.x, &dx2)?) + &e.schouten(&e2.x, &dx1)?;
    let j1_x = interior(&e3.xi, &inner_x)?.as_vector();

    let g = r.pairing(PairingSign::Minus, e1, e2);
    let dstar_g = es.d_function(&g);
    let d_g = e.d_function(&g);
    let j2_xi = &r.lie_on_dual(&dstar_g, &e3.xi)? + &es.bracket(&d_g, &e3.xi)?;
    let j2_x = -&(&r.lie_on_dual(&d_g, &e3.x)? + &e.bracket(&dstar_g, &e3.x)?);

    Ok((DoubledSection::new(j1_x, j1_xi), DoubledSection::new(j2_x, j2_xi)))
}

/// `Jac - D T + (J1 + J2 + c.p.)`, which vanishes identically.
pub fn decomposition_residual(
    r: &DoubledRealization,
    e1: &DoubledSection,
    e2: &DoubledSection,
    e3: &DoubledSection,
) -> Result<DoubledSection, Error> {
    let (jac, t) = jacobiator_and_t(r, None, e1, e2, e3)?;
    let mut out = &jac - &r.d_op(&t);
    for (a, b, c) in [(e1, e2, e3), (e2, e3, e1), (e3, e1, e2)] {
        let (j1, j2) = compute_j1_j2(r, a, b, c)?;
        out = &(&out + &j1) + &j2;
    }
    Ok(out)
}
