mod common;

use common::{coords, p, poly_in};
use courant_core::*;
use proptest::prelude::*;

#[test]
fn parses_reference_expressions() {
    assert!(p("0", 2).is_zero());
    let f = p("x1*xt1 - 1/2", 2);
    let expected = &(&Poly::var(Var::x(0)) * &Poly::var(Var::xt(0))) - &Poly::constant(Rational::new(1, 2));
    assert_eq!(f, expected);
    assert_eq!(p("(x1+xt2)^2", 2), p("x1^2 + 2*x1*xt2 + xt2^2", 2));
}

#[test]
fn partial_derivatives() {
    let x1 = DoubledIndex::X(0);
    assert_eq!(p("x1*xt1", 1).partial(x1), p("xt1", 1));
    assert!(Poly::constant(Rational::new(7, 3)).partial(x1).is_zero());
    assert!(Poly::var(Var::param(4)).partial(DoubledIndex::Xt(0)).is_zero());
    let f = p("x1^2*xt2", 2);
    for m in DoubledIndex::all(2) {
        for n in DoubledIndex::all(2) {
            assert!((&f.partial(m).partial(n) - &f.partial(n).partial(m)).is_zero());
        }
    }
}

#[test]
fn eta_pairing_reference_values() {
    assert_eq!(eta_pairing(&p("x1", 1), &p("xt1", 1), 1), Poly::one());
    assert!(eta_pairing(&p("x1", 2), &p("x2", 2), 2).is_zero());
    // d_1(x1 xt1) dt^1(x1 xt1) counted twice: 2 xt1 x1.
    let f = p("x1*xt1", 1);
    assert_eq!(eta_pairing(&f, &f, 1), p("2*x1*xt1", 1));
}

#[test]
fn parse_errors_carry_positions() {
    assert!(matches!(parse_expr("x0", 2, 0), Err(ParseError::IndexOutOfRange { pos: 0, .. })));
    assert!(matches!(parse_expr("x3", 2, 0), Err(ParseError::IndexOutOfRange { .. })));
    assert!(matches!(parse_expr("1 +", 2, 0), Err(ParseError::UnexpectedEnd { .. })));
    assert!(matches!(parse_expr("x1^x2", 2, 0), Err(ParseError::BadExponent { .. })));
    assert!(matches!(parse_expr("1/0", 2, 0), Err(ParseError::ZeroDenominator { .. })));
}

fn three() -> impl Strategy<Value = (Poly, Poly, Poly)> {
    (poly_in(coords(2), 4), poly_in(coords(2), 4), poly_in(coords(2), 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms((a, b, c) in three()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn partial_is_a_derivation((a, b, _) in three()) {
        for m in DoubledIndex::all(2) {
            let lhs = (&a * &b).partial(m);
            let rhs = &(&a.partial(m) * &b) + &(&a * &b.partial(m));
            prop_assert_eq!(lhs, rhs);
            for n in DoubledIndex::all(2) {
                prop_assert_eq!(a.partial(m).partial(n), a.partial(n).partial(m));
            }
        }
    }

    #[test]
    fn eta_pairing_is_symmetric((a, b, _) in three()) {
        prop_assert_eq!(eta_pairing(&a, &b, 2), eta_pairing(&b, &a, 2));
    }

    #[test]
    fn display_round_trips((a, b, _) in three()) {
        let f = &(&a * &b) + &Poly::constant(Rational::new(-5, 7));
        prop_assert_eq!(parse_expr(&f.to_string(), 2, 0).unwrap(), f);
    }
}
