mod common;

use common::nr;
use orthorec_core::diffop::XPoly;
use orthorec_core::families::FamilySpec;
use orthorec_core::fraction::Fraction;
use orthorec_core::oracle::{check_pair, BasisPrefix};
use orthorec_core::rec::RecOp;
use orthorec_core::scalar::RatFunc;
use orthorec_core::shift::ShiftOp;

fn q(num: &str, den: &str) -> RatFunc {
    &nr(num) / &nr(den)
}

fn rec(cs: Vec<RatFunc>) -> RecOp {
    RecOp::new(ShiftOp::new(cs)).unwrap()
}

fn s() -> RecOp {
    RecOp::s_pow(1)
}

#[test]
fn chebyshev_table_entries() {
    let c = FamilySpec::chebyshev();
    assert_eq!(c.x_num, rec(vec![q("1", "2"), nr("0"), q("1", "2")]));
    assert_eq!(c.d_den, rec(vec![q("1", "2*(n+1)"), nr("0"), q("-1", "2*(n+1)")]));
    let theta = Fraction::new(rec(vec![q("-n", "2"), nr("0"), q("n+2", "2")]), s());
    assert_eq!(c.theta_pair().unwrap(), theta);
}

#[test]
fn hermite_table_entries() {
    let h = FamilySpec::hermite();
    assert_eq!(h.x_num, rec(vec![q("1", "2"), nr("0"), nr("n+2")]));
    assert_eq!(h.d_den, rec(vec![q("1", "2*(n+1)")]));
    assert!(h.theta_pair().is_err());
    assert!(h.endpoint_pair(1).is_err());
}

#[test]
fn gegenbauer_and_jacobi_theta_rows() {
    let g = FamilySpec::parse("gegenbauer:lambda").unwrap();
    let want = Fraction::new(
        rec(vec![
            q("-n*(n+1)", "2*(n+lambda)"),
            nr("0"),
            q("(n+1+2*lambda)*(n+2+2*lambda)", "2*(n+2+lambda)"),
        ]),
        s(),
    );
    assert_eq!(g.theta_pair().unwrap(), want);
    let j = FamilySpec::parse("jacobi:alpha,beta").unwrap();
    let sum = "alpha+beta";
    let want = Fraction::new(
        rec(vec![
            q(&format!("-2*n*(n+1)*(n+1+{sum})"), &format!("(2*n+1+{sum})*(2*n+2+{sum})")),
            q(&format!("2*(alpha-beta)*(n+1)*(n+2+{sum})"), &format!("(2*n+2+{sum})*(2*n+4+{sum})")),
            q(
                &format!("2*(n+2+alpha)*(n+2+beta)*(n+3+{sum})"),
                &format!("(2*n+4+{sum})*(2*n+5+{sum})"),
            ),
        ]),
        s(),
    );
    assert_eq!(j.theta_pair().unwrap(), want);
}

#[test]
fn jacobi_degenerate_theta_constant() {
    let j = FamilySpec::parse("jacobi:-1/2,-1/2").unwrap();
    let theta = j.theta_pair_generic().unwrap();
    let want = Fraction::new(rec(vec![q("-n*(n+1)", "2*n+1"), nr("0"), q("2*n+3", "4")]), s());
    assert!(theta.equiv(&want));
}

#[test]
fn laguerre_theta_is_first_order() {
    let l = FamilySpec::parse("laguerre:alpha").unwrap();
    let want = Fraction::new(rec(vec![nr("n"), nr("-(n+1+alpha)")]), RecOp::one());
    assert_eq!(l.theta_pair().unwrap(), want);
    let generic = Fraction::new(rec(vec![nr("0"), nr("n+1"), nr("-(n+2+alpha)")]), s());
    assert_eq!(l.theta_pair_generic().unwrap(), generic);
}

#[test]
fn chebyshev_endpoint_plus_closed_form() {
    let c = FamilySpec::chebyshev();
    let want = Fraction::new(rec(vec![nr("n"), nr("n+1")]), rec(vec![nr("1"), nr("-1")]));
    assert!(c.endpoint_pair(1).unwrap().equiv(&want));
}

fn endpoint_holds(spec: &FamilySpec, eps: i8, fr: &Fraction) -> bool {
    let basis = BasisPrefix::build(spec, 10).unwrap();
    let w = XPoly::from_ints(&[1, eps as i64]);
    (0..8).all(|j| {
        let psi = &basis.polys()[j];
        check_pair(fr, psi, &(&w * &psi.derivative()), &basis).unwrap()
    })
}

#[test]
fn wrong_endpoint_denominators_fail_the_oracle() {
    // right numerator, wrong denominator
    let g = FamilySpec::parse("gegenbauer:lambda").unwrap();
    let num = rec(vec![nr("-n*(lambda+n+1)"), nr("(2*lambda+n+1)*(lambda+n)")]);
    let wrong = Fraction::new(num.clone(), rec(vec![nr("(lambda+n+2)*(lambda+n+1)"), nr("-(lambda+n)")]));
    assert!(!endpoint_holds(&g, -1, &wrong));
    let stored = g.endpoint_pair(-1).unwrap();
    assert!(endpoint_holds(&g, -1, &stored));
    assert!(stored.equiv(&Fraction::new(num, rec(vec![nr("lambda+n+1"), nr("lambda+n")]))));
    // Chebyshev, eps = -1: denominator with the wrong sign
    let c = FamilySpec::chebyshev();
    let wrong = Fraction::new(rec(vec![nr("n"), nr("-(n+1)")]), rec(vec![nr("1"), nr("1")]));
    assert!(!endpoint_holds(&c, -1, &wrong));
    assert!(endpoint_holds(&c, -1, &c.endpoint_pair(-1).unwrap()));
}

#[test]
fn jacobi_endpoint_specializes_to_legendre() {
    let j = FamilySpec::parse("jacobi:0,0").unwrap();
    let g = FamilySpec::parse("gegenbauer:1/2").unwrap();
    for eps in [1, -1] {
        assert!(j.endpoint_pair(eps).unwrap().equiv(&g.endpoint_pair(eps).unwrap()));
    }
}

#[test]
fn psi_one_satisfies_the_eigen_equation() {
    let j = FamilySpec::parse("jacobi:alpha,beta").unwrap();
    let psi1 = &j.seeds[1];
    let lam1 = j.lambda.eval_int(orthorec_core::scalar::N, &1.into()).unwrap();
    let r = &(&j.tau * &psi1.derivative()) + &psi1.scale(&lam1);
    assert!(r.is_zero());
}

#[test]
fn jacobi_degenerate_sum_uses_doubled_first_coefficient() {
    for name in ["jacobi:-1/2,-1/2", "jacobi:-1/3,-2/3"] {
        let j = FamilySpec::parse(name).unwrap();
        assert!(j.doubled_first);
        let basis = BasisPrefix::build(&j, 6).unwrap();
        let ok = check_pair(&j.x_pair(), &XPoly::one(), &XPoly::x(), &basis).unwrap();
        assert!(ok, "{name}");
    }
}
