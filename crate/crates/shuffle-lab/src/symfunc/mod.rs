//! Symmetric functions of bounded degree over Q(q,t): partitions, the
//! standard bases with exact transition tables, the Hall pairing, skewing,
//! the omega involution, and plethystic evaluation.

mod ctx;
mod partition;
mod schur;
mod symf;
mod tables;

pub use ctx::{SymCtx, DEFAULT_DEGREE_BOUND};
pub use partition::{
    compositions_of, partitions_of, weak_compositions, Composition, Partition,
};
pub use schur::{allowable_compositions, jacobi_trudi, schur_rect_h_expansion};
pub use symf::{Basis, SymF};

pub(crate) use ctx::lift_matvec;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::{coeff, QtRat};
    use proptest::prelude::*;

    fn ctx() -> SymCtx {
        SymCtx::new(8)
    }

    fn elem(basis: Basis, parts: &[u32]) -> SymF {
        SymF::basis_elem(basis, Partition::new(parts.to_vec()))
    }

    #[test]
    fn to_basis_examples() {
        let c = ctx();
        // e_1 = m_1
        let e1 = elem(Basis::Elementary, &[1]);
        assert_eq!(c.to_basis(&e1, Basis::Monomial).unwrap(), elem(Basis::Monomial, &[1]));
        // h_2 = s_2 (Jacobi-Trudi gives s_2 = h_2)
        let h2 = elem(Basis::Homogeneous, &[2]);
        assert_eq!(c.to_basis(&h2, Basis::Schur).unwrap(), elem(Basis::Schur, &[2]));
        // p_2 = m_2 by direct expansion in two variables
        let p2 = elem(Basis::Power, &[2]);
        assert_eq!(c.to_basis(&p2, Basis::Monomial).unwrap(), elem(Basis::Monomial, &[2]));
    }

    #[test]
    fn mul_examples() {
        let c = ctx();
        // 1 * f = f
        let f = elem(Basis::Schur, &[2, 1]);
        assert_eq!(c.mul(&SymF::one(Basis::Schur), &f).unwrap(), f);
        // h_1 h_1 = m_2 + 2 m_11
        let h1 = elem(Basis::Monomial, &[1]);
        let sq = c.mul(&h1, &h1).unwrap();
        assert_eq!(sq.coeff(&Partition::single(2)), QtRat::from_int(1));
        assert_eq!(sq.coeff(&Partition::new(vec![1, 1])), QtRat::from_int(2));
        // e_1 e_1 = s_2 + s_11
        let e1 = elem(Basis::Schur, &[1]);
        let sq = c.mul(&e1, &e1).unwrap();
        assert_eq!(sq, elem(Basis::Schur, &[2]).add(&elem(Basis::Schur, &[1, 1])));
    }

    #[test]
    fn hall_examples() {
        let c = ctx();
        let s21 = elem(Basis::Schur, &[2, 1]);
        assert_eq!(c.hall_inner(&s21, &s21).unwrap(), QtRat::from_int(1));
        let s2 = elem(Basis::Schur, &[2]);
        let s11 = elem(Basis::Schur, &[1, 1]);
        assert!(c.hall_inner(&s2, &s11).unwrap().is_zero());
        // <h_2, m_2> = 1 via the Schur route
        let h2 = elem(Basis::Homogeneous, &[2]);
        let m2 = elem(Basis::Monomial, &[2]);
        assert_eq!(c.hall_inner(&h2, &m2).unwrap(), QtRat::from_int(1));
        // cross-degree pairing vanishes
        assert!(c.hall_inner(&h2, &elem(Basis::Schur, &[1])).unwrap().is_zero());
    }

    #[test]
    fn perp_examples() {
        let c = ctx();
        let h1 = elem(Basis::Homogeneous, &[1]);
        let h2 = elem(Basis::Homogeneous, &[2]);
        assert_eq!(c.perp(&h1, &h2).unwrap(), h1);
        let s21 = elem(Basis::Schur, &[2, 1]);
        assert_eq!(c.perp(&s21, &s21).unwrap(), SymF::one(Basis::Schur));
        // e_1^perp s_2 = s_1 (Pieri)
        let e1 = elem(Basis::Elementary, &[1]);
        let s2 = elem(Basis::Schur, &[2]);
        assert_eq!(c.perp(&e1, &s2).unwrap(), elem(Basis::Schur, &[1]));
    }

    #[test]
    fn omega_swaps_e_and_h() {
        let c = ctx();
        for n in 1..=4 {
            let en = elem(Basis::Elementary, &[n]);
            let hn = elem(Basis::Homogeneous, &[n]);
            assert!(c.equal(&c.omega(&en).unwrap(), &hn).unwrap());
        }
        // omega p_3 = p_3 (odd power sum)
        let p3 = elem(Basis::Power, &[3]);
        assert_eq!(c.omega(&p3).unwrap(), p3);
    }

    #[test]
    fn pleth_eval_examples() {
        let c = ctx();
        // e_2[1 + q] = q, from e_2 = (p_1^2 - p_2)/2
        let e2 = elem(Basis::Elementary, &[2]);
        let alphabet = |k: u32| QtRat::from_int(1) + QtRat::monomial_pow(k as i64, 0);
        assert_eq!(c.pleth_eval(&e2, &alphabet).unwrap(), QtRat::var_q());
        // e_1[1] = 1 and e_1 at the empty alphabet
        let e1 = elem(Basis::Elementary, &[1]);
        assert_eq!(c.pleth_eval(&e1, &|_| QtRat::from_int(1)).unwrap(), QtRat::from_int(1));
        assert!(c.pleth_eval(&e1, &|_| QtRat::zero()).unwrap().is_zero());
    }

    #[test]
    fn pleth_transform_examples() {
        let c = ctx();
        // p_1[(1-qt)/(qt) X] scales p_1 by (1-qt)/(qt)
        let p1 = elem(Basis::Power, &[1]);
        let qt = QtRat::var_q() * QtRat::var_t();
        let scale = (QtRat::from_int(1) - qt.clone()) / qt.clone();
        let rule = |k: u32| {
            let qtk = QtRat::monomial_pow(k as i64, k as i64);
            Ok((QtRat::from_int(1) - qtk.clone()) / qtk)
        };
        let out = c.pleth_transform(&p1, &rule).unwrap();
        assert_eq!(out, p1.scale(&scale));
        // e_2 transform scales p_11 by the square and p_2 by the level-2 value
        let e2 = elem(Basis::Elementary, &[2]);
        let out = c.to_basis(&c.pleth_transform(&e2, &rule).unwrap(), Basis::Power).unwrap();
        let expected_p11 = coeff(1, 2) ;
        let p11 = out.coeff(&Partition::new(vec![1, 1]));
        assert_eq!(p11, QtRat::from_rational(expected_p11) * scale.clone() * scale.clone());
    }

    fn arb_symf(max_deg: u32) -> impl Strategy<Value = SymF> {
        let bases = prop_oneof![
            Just(Basis::Monomial),
            Just(Basis::Schur),
            Just(Basis::Homogeneous),
            Just(Basis::Elementary),
            Just(Basis::Power),
        ];
        (
            bases,
            proptest::collection::vec(
                (proptest::collection::vec(1u32..=4, 0..4), -4i64..5, 0u32..2, 0u32..2),
                0..4,
            ),
        )
            .prop_map(move |(basis, raw)| {
                let mut f = SymF::zero(basis);
                for (parts, n, qe, te) in raw {
                    let p = Partition::new(parts);
                    if p.size() <= max_deg {
                        let c = QtRat::from_int(n) * QtRat::monomial_pow(qe as i64, te as i64);
                        f.add_term(p, c);
                    }
                }
                f
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn basis_round_trips(f in arb_symf(6), target in prop_oneof![
            Just(Basis::Monomial), Just(Basis::Schur), Just(Basis::Homogeneous),
            Just(Basis::Elementary), Just(Basis::Power)
        ]) {
            let c = ctx();
            let there = c.to_basis(&f, target).unwrap();
            let back = c.to_basis(&there, f.basis()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn perp_is_adjoint_to_multiplication(f in arb_symf(3), g in arb_symf(6), h in arb_symf(3)) {
            let c = ctx();
            // <f^perp g, h> = <g, f h>
            let lhs = c.hall_inner(&c.perp(&f, &g).unwrap(), &h).unwrap();
            let rhs = c.hall_inner(&g, &c.mul(&f, &h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn omega_is_hall_isometry_and_involution(f in arb_symf(5), g in arb_symf(5)) {
            let c = ctx();
            let of = c.omega(&f).unwrap();
            let og = c.omega(&g).unwrap();
            prop_assert_eq!(c.omega(&of).unwrap(), f.clone());
            prop_assert_eq!(c.hall_inner(&of, &og).unwrap(), c.hall_inner(&f, &g).unwrap());
        }
    }

    #[test]
    fn rect_expansion_matches_jacobi_trudi_mod_high_h() {
        let c = ctx();
        for m in 1..=4u32 {
            for k in 0..=3u32 {
                if (m - 1) * k > c.degree_bound() {
                    continue;
                }
                let rect = schur_rect_h_expansion(m, k);
                let jt = jacobi_trudi(&Partition::rectangle(m - 1, k));
                let diff = rect.sub(&jt);
                for (p, coeff) in diff.terms() {
                    assert!(
                        p.parts().iter().any(|&part| part > m),
                        "difference has a low term h{p} = {coeff} at m={m}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_overflow_is_reported() {
        let c = SymCtx::new(3);
        let h2 = elem(Basis::Homogeneous, &[2]);
        let h4 = c.mul(&h2, &h2);
        assert!(matches!(h4, Err(crate::error::Error::DegreeOverflow { .. })));
    }
}
