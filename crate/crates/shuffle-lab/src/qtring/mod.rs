//! Exact arithmetic over Q(q,t): bivariate polynomials with big-rational
//! coefficients and their quotient field, kept in canonical reduced form so
//! that structural equality is mathematical equality.

mod poly;
mod rat;
mod text;

pub use poly::{Exp, QtPoly};
pub use rat::{coeff, QtRat};

use crate::error::{Error, Result};

/// Coefficient type: arbitrary-precision rationals.
pub type Coeff = num_rational::BigRational;

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32) -> QtPoly {
    QtPoly::from_terms((0..n).map(|i| (Exp::new(i, 0), Coeff::from_integer(1.into()))))
}

/// `[m]_q / [d]_q`, defined when `d | m`, in which case it is the polynomial
/// `1 + q^d + q^(2d) + ... + q^(m-d)`.
pub fn q_int_ratio(m: u32, d: u32) -> Result<QtRat> {
    if d == 0 || m % d != 0 {
        return Err(Error::NonDivisible { dividend: m, divisor: d });
    }
    let poly = QtPoly::from_terms(
        (0..m / d).map(|i| (Exp::new(i * d, 0), Coeff::from_integer(1.into()))),
    );
    Ok(QtRat::from_poly(poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> QtRat {
        QtRat::var_q()
    }

    fn t() -> QtRat {
        QtRat::var_t()
    }

    fn int(n: i64) -> QtRat {
        QtRat::from_int(n)
    }

    #[test]
    fn product_of_one_minus_q_and_one_minus_t_is_m() {
        let lhs = (int(1) - q()) * (int(1) - t());
        assert_eq!(lhs.as_poly().unwrap(), &QtPoly::big_m(1));
        assert_eq!(lhs.to_string(), "1 - 1*q - 1*t + 1*q*t | 1");
    }

    #[test]
    fn additive_inverse_cancels() {
        for x in [q(), (q() + t()).recip(), int(-3) * t().pow(2)] {
            assert!((&x + &(-&x)).is_zero());
        }
    }

    #[test]
    fn qt_over_qt_minus_one_times_reciprocal_factor_is_minus_one() {
        let qt = q() * t();
        let a = qt.clone() / (qt.clone() - int(1));
        let b = (int(1) - qt.clone()) / qt;
        assert_eq!(a * b, int(-1));
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(0), QtPoly::zero());
        assert_eq!(q_integer(1), QtPoly::one());
        assert_eq!(q_integer(3).to_string(), "1 + 1*q + 1*q^2");
        assert_eq!(q_int_ratio(2, 1).unwrap().to_string(), "1 + 1*q | 1");
        assert_eq!(q_int_ratio(6, 2).unwrap().to_string(), "1 + 1*q^2 + 1*q^4 | 1");
        assert!(q_int_ratio(3, 2).is_err());
    }

    #[test]
    fn specialize_at_q_one() {
        let one = Coeff::from_integer(1.into());
        // 1 + q + q t -> 2 + t
        let x = int(1) + q() + q() * t();
        let s = x.specialize(Some(&one), None).unwrap();
        assert_eq!(s.to_string(), "2 + 1*t | 1");
        // M -> 0
        let m = QtRat::from_poly(QtPoly::big_m(1));
        assert!(m.specialize(Some(&one), None).unwrap().is_zero());
        // (1 - q^2)/(1 - q) reduces before substitution, so no pole
        let frac = (int(1) - q().pow(2)) / (int(1) - q());
        assert_eq!(frac.specialize(Some(&one), None).unwrap(), int(2));
        // a genuine pole is reported
        let pole = int(1) / (int(1) - q());
        assert!(matches!(pole.specialize(Some(&one), None), Err(Error::Pole)));
    }

    #[test]
    fn checked_div_by_zero() {
        assert!(matches!(q().checked_div(&QtRat::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn gcd_reduction_is_canonical() {
        // (q^2 - t^2) / (q - t) = q + t
        let num = q().pow(2) - t().pow(2);
        let den = q() - t();
        let r = num / den;
        assert_eq!(r.to_string(), "1*q + 1*t | 1");
    }

    fn arb_coeff() -> impl Strategy<Value = Coeff> {
        (-6i64..7, 1i64..4).prop_map(|(n, d)| coeff(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec((0u32..4, 0u32..4, arb_coeff()), 0..5).prop_map(|terms| {
            QtPoly::from_terms(terms.into_iter().map(|(q, t, c)| (Exp::new(q, t), c)))
        })
    }

    fn arb_rat() -> impl Strategy<Value = QtRat> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| QtRat::new(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_form_is_idempotent(x in arb_rat()) {
            let renorm = QtRat::new(x.num().clone(), x.den().clone());
            prop_assert_eq!(&renorm, &x);
        }

        #[test]
        fn ring_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn swap_is_involutive_ring_automorphism(a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
            prop_assert_eq!((&a * &b).swap_qt(), a.swap_qt() * b.swap_qt());
            prop_assert_eq!((&a + &b).swap_qt(), a.swap_qt() + b.swap_qt());
        }

        #[test]
        fn text_round_trip_is_bit_exact(a in arb_rat()) {
            let s = a.to_string();
            let back: QtRat = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_rat(), b in arb_rat()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }
}
