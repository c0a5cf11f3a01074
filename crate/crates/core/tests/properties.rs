use proptest::prelude::*;

use orthorec_core::diffop::{DiffOp, XPoly};
use orthorec_core::families::FamilySpec;
use orthorec_core::fraction::Fraction;
use orthorec_core::oracle::BasisPrefix;
use orthorec_core::parse::parse_operator;
use orthorec_core::rec::{mclm, RecOp};
use orthorec_core::scalar::{gcd, nonneg_integer_roots, Poly, RatFunc, Var, N};
use orthorec_core::shift::ShiftOp;

fn poly_n(c: &[i64]) -> Poly {
    let n = Poly::var(N);
    c.iter().rev().fold(Poly::zero(), |acc, &a| &(&acc * &n) + &Poly::int(a))
}

fn arb_poly(deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..=deg + 1).prop_map(|c| poly_n(&c))
}

fn arb_param_poly() -> impl Strategy<Value = Poly> {
    let a = Poly::var(Var::param("pa").unwrap());
    (arb_poly(2), arb_poly(1)).prop_map(move |(p, q)| &p + &(&q * &a))
}

/// Shift operators with polynomial coefficients and nonzero leading term.
fn arb_shift(max_order: usize) -> impl Strategy<Value = ShiftOp> {
    prop::collection::vec(arb_poly(2), 1..=max_order + 1).prop_filter_map("zero leading", |cs| {
        let op = ShiftOp::from_polys(&cs);
        (!op.is_zero()).then_some(op)
    })
}

fn arb_xpoly(deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(-5i64..=5, 1..=deg + 1).prop_map(|c| XPoly::from_ints(&c))
}

fn arb_diffop() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(arb_xpoly(2), 1..=3).prop_map(DiffOp::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_and_is_maximal(a in arb_param_poly(), b in arb_param_poly(), c in arb_param_poly()) {
        prop_assume!(!c.is_zero());
        let g = gcd(&(&a * &c), &(&b * &c));
        if !(a.is_zero() && b.is_zero()) {
            prop_assert!((&a * &c).div_exact(&g).is_some());
            prop_assert!((&b * &c).div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c).is_some() || g.div_exact(&(-&c)).is_some());
        }
    }

    #[test]
    fn ratfunc_field_laws(a in arb_param_poly(), b in arb_poly(2), c in arb_param_poly()) {
        prop_assume!(!b.is_zero());
        let x = RatFunc::new(a, b.clone()).unwrap();
        let y = RatFunc::from_poly(c);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&(&x * &y) * &RatFunc::from_poly(b.clone()), &(&x * &RatFunc::from_poly(b)) * &y);
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x);
        }
    }

    #[test]
    fn shift_product_is_associative(a in arb_shift(2), b in arb_shift(2), c in arb_shift(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn right_division_reconstructs(a in arb_shift(3), b in arb_shift(2)) {
        let (q, r) = a.right_divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.order() < b.order());
    }

    #[test]
    fn lclm_is_a_common_multiple(a in arb_shift(2), b in arb_shift(2)) {
        let (l, u, v) = a.lclm_ext(&b).unwrap();
        prop_assert_eq!(&u * &a, l.clone());
        prop_assert_eq!(&v * &b, l.clone());
        prop_assert!(l.order() <= a.order() + b.order());
        prop_assert!(l.lc().is_one());
    }

    #[test]
    fn gcrd_and_gcld_divide(a in arb_shift(2), b in arb_shift(2), c in arb_shift(1)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcrd(&bc).unwrap();
        prop_assert!(ac.right_div_exact(&g).is_ok());
        prop_assert!(bc.right_div_exact(&g).is_ok());
        prop_assert!(g.right_div_exact(&c).is_ok());
        let (ca, cb) = (&c * &a, &c * &b);
        let h = ca.gcld(&cb).unwrap();
        prop_assert!(h.order() >= c.order());
        prop_assert!(ca.adjoint().right_div_exact(&h.adjoint()).is_ok());
    }

    #[test]
    fn adjoint_is_an_involutive_antimorphism(a in arb_shift(2), b in arb_shift(2)) {
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
    }

    #[test]
    fn mclm_stays_in_rec(a in arb_shift(1), b in arb_shift(1)) {
        let (a, b) = (RecOp::new(a).unwrap(), RecOp::new(b).unwrap());
        let (m, u, v) = mclm(&a, &b).unwrap();
        prop_assert_eq!(u.mul(&a), m.clone());
        prop_assert_eq!(v.mul(&b), m.clone());
        prop_assert!(RecOp::new(m.as_shift().clone()).is_ok());
    }

    #[test]
    fn fraction_normal_form_is_idempotent(a in arb_shift(2), b in arb_shift(2), c in 1i64..6, m in 1i64..4) {
        let f = Fraction::new(RecOp::new(a).unwrap(), RecOp::new(b).unwrap());
        let again = Fraction::new(f.num().clone(), f.den().clone());
        prop_assert_eq!(&again, &f);
        // m n + c has no root in N, so it is a unit of Rec
        let unit = poly_n(&[c, m]);
        prop_assert!(f.scale_poly(&unit).equiv(&f));
    }

    #[test]
    fn parser_round_trips(l in arb_diffop()) {
        let text = l.to_string();
        prop_assert_eq!(parse_operator(&text).unwrap(), l);
    }

    #[test]
    fn composition_matches_application(a in arb_diffop(), b in arb_diffop(), f in arb_xpoly(6)) {
        prop_assert_eq!((&a * &b).apply(&f), a.apply(&b.apply(&f)));
        let q = a.left_form();
        let back = q.iter().enumerate().fold(DiffOp::zero(), |acc, (k, qk)| {
            &acc + &(&d_pow(k) * &DiffOp::scalar(qk.clone()))
        });
        prop_assert_eq!(back, a);
    }

    #[test]
    fn integer_roots_match_construction(
        roots in prop::collection::vec((0u64..1_000_000_000_000, 1u32..3), 0..4),
        neg in prop::collection::vec(1i64..1000, 0..3),
        lead in 1i64..50,
        quad in 1i64..1_000_000,
    ) {
        let mut p = poly_n(&[quad, 0, lead]);
        for &(r, m) in &roots {
            p = &p * &(Poly::var(N) - Poly::constant(r.into())).pow(m);
        }
        for &c in &neg {
            p = &p * &poly_n(&[c, 1]);
        }
        let mut want: std::collections::BTreeMap<u64, u32> = Default::default();
        for &(r, m) in &roots {
            *want.entry(r).or_default() += m;
        }
        prop_assert_eq!(nonneg_integer_roots(&p), want.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn expansion_inverts_reconstruction(c in prop::collection::vec(-6i64..=6, 1..=9), which in 0usize..4) {
        let spec = [FamilySpec::chebyshev(), FamilySpec::hermite(), FamilySpec::parse("jacobi:1/2,1/3").unwrap(), FamilySpec::parse("laguerre:2").unwrap()][which].clone();
        let basis = BasisPrefix::build(&spec, 10).unwrap();
        let f = XPoly::from_ints(&c);
        let u = basis.expand(&f).unwrap();
        prop_assert_eq!(basis.reconstruct(&u), f);
    }
}

fn d_pow(k: usize) -> DiffOp {
    (0..k).fold(DiffOp::scalar(XPoly::one()), |acc, _| &acc * &DiffOp::d())
}
