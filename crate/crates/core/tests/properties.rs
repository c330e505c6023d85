//! Property-based tests over randomized algebra inputs.

use proptest::collection::vec;
use proptest::prelude::*;

use ntate::laurent::{LaurentPoly, Part, RingTag, Var};
use ntate::localized::LocalizedLaurent;
use ntate::parse::parse_laurent;
use ntate::rational::rat_int;
use ntate::tate::{boundary, rota_baxter_check};

fn poly(var: Var, exps: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = LaurentPoly> {
    vec((exps, -9i64..=9), 0..=5).prop_map(move |terms| {
        LaurentPoly::from_terms(
            var,
            RingTag::Integral,
            terms.into_iter().map(|(e, c)| (e, rat_int(c))),
        )
        .unwrap()
    })
}

fn cpoly() -> impl Strategy<Value = LaurentPoly> {
    poly(Var::C, -8..=8)
}

proptest! {
    #[test]
    fn ring_axioms(x in cpoly(), y in cpoly(), z in cpoly()) {
        // commutativity
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        // associativity
        prop_assert_eq!(
            x.add(&y).unwrap().add(&z).unwrap(),
            x.add(&y.add(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y).unwrap().mul(&z).unwrap(),
            x.mul(&y.mul(&z).unwrap()).unwrap()
        );
        // distributivity
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        // units and inverses
        let one = LaurentPoly::one(Var::C, RingTag::Integral);
        prop_assert_eq!(x.mul(&one).unwrap(), x.clone());
        prop_assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn projection_parts_are_closed_under_mul(x in cpoly(), y in cpoly()) {
        let neg = x.project(Part::Neg).mul(&y.project(Part::Neg)).unwrap();
        prop_assert_eq!(neg.project(Part::Neg), neg.clone());
        let pos = x.project(Part::NonNeg).mul(&y.project(Part::NonNeg)).unwrap();
        prop_assert_eq!(pos.project(Part::NonNeg), pos.clone());
    }

    #[test]
    fn parser_printer_round_trip(x in cpoly()) {
        let printed = x.to_string();
        prop_assert_eq!(parse_laurent(&printed).unwrap(), x);
    }

    #[test]
    fn rota_baxter_identity(x in cpoly(), y in cpoly()) {
        prop_assert!(rota_baxter_check(&x, &y).unwrap());
    }

    #[test]
    fn boundary_respects_c_multiplication(k in 1i64..=64) {
        // ∂(c · c^{-k-1}) = ∂(c^{-k}) = b_{k-1}
        let c = LaurentPoly::monomial(Var::C, RingTag::Integral, 1, rat_int(1)).unwrap();
        let deep = LaurentPoly::monomial(Var::C, RingTag::Integral, -k - 1, rat_int(1)).unwrap();
        let prod = c.mul(&deep).unwrap();
        prop_assert_eq!(
            boundary(&prod),
            ntate::divided::DividedPower::basis((k - 1) as u64)
        );
    }

    #[test]
    fn loc_normalize_idempotent(num in poly(Var::Q, -4..=6), m in 0u32..=4) {
        let l = LocalizedLaurent::normalize(num, m).unwrap();
        let again = LocalizedLaurent::normalize(l.num().clone(), l.pole_order()).unwrap();
        prop_assert_eq!(l, again);
    }

    #[test]
    fn loc_normalize_multiplicative(
        a in poly(Var::Q, -4..=6),
        b in poly(Var::Q, -4..=6),
        m in 0u32..=3,
        n in 0u32..=3,
    ) {
        let la = LocalizedLaurent::normalize(a.clone(), m).unwrap();
        let lb = LocalizedLaurent::normalize(b.clone(), n).unwrap();
        let direct = LocalizedLaurent::normalize(a.mul(&b).unwrap(), m + n).unwrap();
        prop_assert_eq!(la.mul(&lb).unwrap(), direct);
    }

    #[test]
    fn heisenberg_commutator_on_qb(x in vec((0i64..=8, -9i64..=9), 0..=5)) {
        // [d/db, b·] = id on Q[b]
        let p = LaurentPoly::from_terms(
            Var::B,
            RingTag::Rational,
            x.into_iter().map(|(e, c)| (e, rat_int(c))),
        )
        .unwrap();
        let b = LaurentPoly::monomial(Var::B, RingTag::Rational, 1, rat_int(1)).unwrap();
        let dm = b.mul(&p).unwrap().derivative();
        let md = b.mul(&p.derivative()).unwrap();
        prop_assert_eq!(dm.sub(&md).unwrap(), p);
    }
}
