//! Classical orthogonal polynomial families: Sturm-Liouville data, the pairs
//! for multiplication by `x` and differentiation, the pairs for `sigma d/dx`
//! and `(1 + eps x) d/dx`, and the three-term recurrence used by the oracle.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::diffop::XPoly;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::rec::RecOp;
use crate::scalar::{RatFunc, Var, N};
use crate::shift::ShiftOp;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Chebyshev,
    Gegenbauer,
    Jacobi,
    Laguerre,
    Hermite,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Chebyshev => "chebyshev",
            Kind::Gegenbauer => "gegenbauer",
            Kind::Jacobi => "jacobi",
            Kind::Laguerre => "laguerre",
            Kind::Hermite => "hermite",
        }
    }

    fn arity(self) -> usize {
        match self {
            Kind::Chebyshev | Kind::Hermite => 0,
            Kind::Gegenbauer | Kind::Laguerre => 1,
            Kind::Jacobi => 2,
        }
    }
}

/// `psi_{n+1} = (a(n) x + b(n)) psi_n - c(n) psi_{n-1}` for `n >= 1`.
#[derive(Clone, Debug)]
pub struct ThreeTerm {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
}

#[derive(Clone, Debug)]
pub struct FamilySpec {
    kind: Kind,
    params: Vec<(String, RatFunc)>,
    pub sigma: XPoly,
    pub tau: XPoly,
    /// `lambda_n` as a polynomial in `n`.
    pub lambda: RatFunc,
    pub x_num: RecOp,
    pub d_den: RecOp,
    pub theta: Option<Fraction>,
    pub three_term: ThreeTerm,
    /// `psi_0` and `psi_1`.
    pub seeds: [XPoly; 2],
    /// `h_{n+1} / h_n`.
    pub h_ratio: RatFunc,
    /// Chebyshev sequences carry twice the coefficient of `T_0` at index 0.
    pub doubled_first: bool,
}

fn n() -> RatFunc {
    RatFunc::var(N)
}

fn k(c: i64) -> RatFunc {
    RatFunc::int(c)
}

fn nk(c: i64) -> RatFunc {
    &n() + &k(c)
}

fn half() -> RatFunc {
    RatFunc::frac(1, 2)
}

fn rec(cs: Vec<RatFunc>) -> RecOp {
    RecOp::new(ShiftOp::new(cs)).expect("family operator lies in Rec")
}

fn xpoly(cs: Vec<RatFunc>) -> XPoly {
    XPoly::new(cs)
}

/// Parses a family parameter: an identifier becomes a symbol, a numeral
/// such as `3`, `-1/2` specialises.
pub fn parse_param(s: &str) -> Result<(String, RatFunc)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::UnknownFamily("empty parameter".into()));
    }
    if s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
        let v = Var::param(s)?;
        return Ok((s.to_string(), RatFunc::var(v)));
    }
    let q = parse_rational(s).ok_or_else(|| Error::UnknownFamily(format!("bad parameter value '{s}'")))?;
    Ok((s.to_string(), RatFunc::rational(&q)))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl FamilySpec {
    /// Parses `chebyshev`, `gegenbauer:lambda`, `jacobi:alpha,beta`,
    /// `laguerre:alpha` or `hermite`.
    pub fn parse(spec: &str) -> Result<FamilySpec> {
        let (name, rest) = match spec.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b)),
            None => (spec.trim(), None),
        };
        let kind = match name.to_ascii_lowercase().as_str() {
            "chebyshev" => Kind::Chebyshev,
            "gegenbauer" => Kind::Gegenbauer,
            "jacobi" => Kind::Jacobi,
            "laguerre" => Kind::Laguerre,
            "hermite" => Kind::Hermite,
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        let params = match rest {
            Some(r) => r.split(',').map(parse_param).collect::<Result<Vec<_>>>()?,
            None => match kind {
                Kind::Gegenbauer => vec![parse_param("lambda")?],
                Kind::Laguerre => vec![parse_param("alpha")?],
                Kind::Jacobi => vec![parse_param("alpha")?, parse_param("beta")?],
                _ => vec![],
            },
        };
        if params.len() != kind.arity() {
            return Err(Error::UnknownFamily(format!(
                "{} takes {} parameter(s), got {}",
                kind.name(),
                kind.arity(),
                params.len()
            )));
        }
        FamilySpec::build(kind, params)
    }

    pub fn chebyshev() -> FamilySpec {
        FamilySpec::build(Kind::Chebyshev, vec![]).expect("no parameters")
    }

    pub fn hermite() -> FamilySpec {
        FamilySpec::build(Kind::Hermite, vec![]).expect("no parameters")
    }

    pub fn gegenbauer(lambda: RatFunc) -> Result<FamilySpec> {
        FamilySpec::build(Kind::Gegenbauer, vec![(lambda.to_string(), lambda)])
    }

    pub fn jacobi(alpha: RatFunc, beta: RatFunc) -> Result<FamilySpec> {
        FamilySpec::build(Kind::Jacobi, vec![(alpha.to_string(), alpha), (beta.to_string(), beta)])
    }

    pub fn laguerre(alpha: RatFunc) -> Result<FamilySpec> {
        FamilySpec::build(Kind::Laguerre, vec![(alpha.to_string(), alpha)])
    }

    fn build(kind: Kind, params: Vec<(String, RatFunc)>) -> Result<FamilySpec> {
        check_admissible(kind, &params)?;
        let p = |i: usize| params[i].1.clone();
        let one_minus_x2 = xpoly(vec![k(1), k(0), k(-1)]);
        let mut spec = match kind {
            Kind::Chebyshev => FamilySpec {
                kind,
                params: params.clone(),
                sigma: one_minus_x2,
                tau: xpoly(vec![k(0), k(-1)]),
                lambda: &n() * &n(),
                x_num: rec(vec![half(), k(0), half()]),
                d_den: rec(vec![&k(1) / &(&k(2) * &nk(1)), k(0), &k(-1) / &(&k(2) * &nk(1))]),
                theta: None,
                three_term: ThreeTerm { a: k(2), b: k(0), c: k(1) },
                seeds: [XPoly::one(), XPoly::x()],
                h_ratio: k(1),
                doubled_first: true,
            },
            Kind::Gegenbauer => {
                let l = p(0);
                let nl = |c: i64| &nk(c) + &l;
                let two_l = &k(2) * &l;
                FamilySpec {
                    kind,
                    params: params.clone(),
                    sigma: one_minus_x2,
                    tau: xpoly(vec![k(0), -&(&two_l + &k(1))]),
                    lambda: &n() * &(&n() + &two_l),
                    x_num: rec(vec![
                        &nk(1) / &(&k(2) * &nl(0)),
                        k(0),
                        &(&nk(1) + &two_l) / &(&k(2) * &nl(2)),
                    ]),
                    d_den: rec(vec![&k(1) / &(&k(2) * &nl(0)), k(0), &k(-1) / &(&k(2) * &nl(2))]),
                    theta: None,
                    three_term: ThreeTerm {
                        a: &(&k(2) * &nl(0)) / &nk(1),
                        b: k(0),
                        c: &(&nk(-1) + &two_l) / &nk(1),
                    },
                    seeds: [XPoly::one(), xpoly(vec![k(0), two_l.clone()])],
                    h_ratio: &(&(&n() + &two_l) * &nl(0)) / &(&nl(1) * &nk(1)),
                    doubled_first: false,
                }
            }
            Kind::Jacobi => {
                let (a, b) = (p(0), p(1));
                let s = &a + &b;
                let ns = |c: i64| &nk(c) + &s;
                let tns = |c: i64| &(&k(2) * &n()) + &(&k(c) + &s);
                let na = |c: i64| &nk(c) + &a;
                let nb = |c: i64| &nk(c) + &b;
                let three = {
                    let d = &(&(&k(2) * &nk(1)) * &ns(1)) * &tns(0);
                    ThreeTerm {
                        a: &(&(&tns(1) * &tns(2)) * &tns(0)) / &d,
                        b: &(&tns(1) * &(&(&a * &a) - &(&b * &b))) / &d,
                        c: &(&(&(&k(2) * &na(0)) * &nb(0)) * &tns(2)) / &d,
                    }
                };
                FamilySpec {
                    kind,
                    params: params.clone(),
                    sigma: one_minus_x2,
                    tau: xpoly(vec![&b - &a, -&(&s + &k(2))]),
                    lambda: &n() * &ns(1),
                    x_num: rec(vec![
                        &(&(&k(2) * &nk(1)) * &ns(1)) / &(&tns(1) * &tns(2)),
                        &(&(&b * &b) - &(&a * &a)) / &(&tns(2) * &tns(4)),
                        &(&(&k(2) * &na(2)) * &nb(2)) / &(&tns(4) * &tns(5)),
                    ]),
                    d_den: rec(vec![
                        &(&k(2) * &ns(1)) / &(&tns(1) * &tns(2)),
                        &(&k(2) * &(&a - &b)) / &(&tns(2) * &tns(4)),
                        &(&(&k(-2) * &na(2)) * &nb(2)) / &(&(&ns(2) * &tns(4)) * &tns(5)),
                    ]),
                    theta: None,
                    three_term: three,
                    seeds: [
                        XPoly::one(),
                        xpoly(vec![&(&a - &b) / &k(2), &(&s + &k(2)) / &k(2)]),
                    ],
                    h_ratio: &(&(&na(1) * &nb(1)) * &tns(1)) / &(&(&tns(3) * &ns(1)) * &nk(1)),
                    // at a+b+1 = 0 the simplified tables use h_0/2, as for Chebyshev
                    doubled_first: (&s + &k(1)).is_zero(),
                }
            }
            Kind::Laguerre => {
                let a = p(0);
                let na = |c: i64| &nk(c) + &a;
                FamilySpec {
                    kind,
                    params: params.clone(),
                    sigma: XPoly::x(),
                    tau: xpoly(vec![&a + &k(1), k(-1)]),
                    lambda: n(),
                    x_num: rec(vec![-&nk(1), &(&k(2) * &n()) + &(&a + &k(3)), -&na(2)]),
                    d_den: rec(vec![k(-1), k(1)]),
                    theta: Some(Fraction::new(rec(vec![n(), -&na(1)]), RecOp::one())),
                    three_term: ThreeTerm {
                        a: &k(-1) / &nk(1),
                        b: &(&(&k(2) * &n()) + &(&a + &k(1))) / &nk(1),
                        c: &na(0) / &nk(1),
                    },
                    seeds: [XPoly::one(), xpoly(vec![&a + &k(1), k(-1)])],
                    h_ratio: &na(1) / &nk(1),
                    doubled_first: false,
                }
            }
            Kind::Hermite => FamilySpec {
                kind,
                params: params.clone(),
                sigma: XPoly::one(),
                tau: xpoly(vec![k(0), k(-2)]),
                lambda: &k(2) * &n(),
                x_num: rec(vec![half(), k(0), nk(2)]),
                d_den: rec(vec![&k(1) / &(&k(2) * &nk(1))]),
                theta: None,
                three_term: ThreeTerm { a: k(2), b: k(0), c: &k(2) * &n() },
                seeds: [XPoly::one(), xpoly(vec![k(0), k(2)])],
                h_ratio: &k(2) * &nk(1),
                doubled_first: false,
            },
        };
        if kind != Kind::Laguerre && kind != Kind::Hermite {
            spec.theta = Some(spec.theta_pair_generic()?);
        }
        Ok(spec)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn params(&self) -> &[(String, RatFunc)] {
        &self.params
    }

    /// `(X_num, S_n)`.
    pub fn x_pair(&self) -> Fraction {
        Fraction::new(self.x_num.clone(), RecOp::s_pow(1))
    }

    /// `(S_n, D_den)`.
    pub fn d_pair(&self) -> Fraction {
        Fraction::new(RecOp::s_pow(1), self.d_den.clone())
    }

    /// `(-lambda_{n+1} D_den - a1 X_num - a0 S_n, S_n)` with `tau = a1 x + a0`.
    pub fn theta_pair_generic(&self) -> Result<Fraction> {
        if self.sigma.is_constant() {
            return Err(Error::Unsupported(format!("{} has constant sigma", self.kind.name())));
        }
        let a0 = self.tau.coeff(0);
        let a1 = self.tau.coeff(1);
        let lam1 = self.lambda.shift(N, 1);
        let num = &(&self.d_den.scale_left(&-&lam1) - &self.x_num.scale_left(&a1)) - &ShiftOp::monomial(a0, 1);
        Ok(Fraction::new(RecOp::new(num)?, RecOp::s_pow(1)))
    }

    pub fn theta_pair(&self) -> Result<Fraction> {
        self.theta
            .clone()
            .ok_or_else(|| Error::Unsupported(format!("{} has no sigma d/dx pair", self.kind.name())))
    }

    /// The pair for `(1 + eps x) d/dx` on Jacobi, Gegenbauer and Chebyshev:
    /// `num . [psi_n](f) = den . [psi_n]((1 + eps x) f')`.
    pub fn endpoint_pair(&self, eps: i8) -> Result<Fraction> {
        if eps != 1 && eps != -1 {
            return Err(Error::Precondition("eps must be 1 or -1".into()));
        }
        let e = k(eps as i64);
        let (num, den) = match self.kind {
            Kind::Chebyshev => (vec![-&n(), -&(&e * &nk(1))], vec![-&e, k(1)]),
            Kind::Gegenbauer => {
                let l = self.params[0].1.clone();
                let nl = |c: i64| &nk(c) + &l;
                (
                    vec![-&(&n() * &nl(1)), -&(&(&e * &(&nl(1) + &l)) * &nl(0))],
                    vec![-&(&e * &nl(1)), nl(0)],
                )
            }
            Kind::Jacobi => {
                let (a, b) = (self.params[0].1.clone(), self.params[1].1.clone());
                let s = &a + &b;
                // the parameter at the opposite endpoint
                let far = if eps == 1 { b } else { a };
                let big_a = &(&nk(1) + &far) * &(&(&k(2) * &n()) + &(&s + &k(1)));
                let big_b = &(&nk(1) + &s) * &(&(&k(2) * &n()) + &(&s + &k(3)));
                (
                    vec![-&(&n() * &big_b), -&(&(&e * &(&nk(2) + &s)) * &big_a)],
                    vec![-&(&e * &big_b), big_a],
                )
            }
            _ => return Err(Error::Unsupported(format!("no endpoint pair for {}", self.kind.name()))),
        };
        Ok(Fraction::new(RecOp::new(ShiftOp::new(num))?, RecOp::new(ShiftOp::new(den))?))
    }

    /// `D_den(n+i-1) ... D_den(n+1) D_den(n)`.
    pub fn d_den_power(&self, i: usize) -> RecOp {
        let mut acc = ShiftOp::one();
        for j in 0..i {
            acc = &acc * &self.d_den.shift_arg((i - 1 - j) as i64);
        }
        RecOp::new(acc).expect("product of Rec operators")
    }
}

fn check_admissible(kind: Kind, params: &[(String, RatFunc)]) -> Result<()> {
    let val = |i: usize| params[i].1.as_rational();
    let minus_one = BigRational::from_integer((-1).into());
    match kind {
        Kind::Gegenbauer => {
            if let Some(l) = val(0) {
                let half = BigRational::new((-1).into(), 2.into());
                if l <= half || l.is_zero() {
                    return Err(Error::Inadmissible(format!("gegenbauer needs lambda > -1/2 and lambda != 0, got {l}")));
                }
            }
        }
        Kind::Jacobi | Kind::Laguerre => {
            for i in 0..params.len() {
                if let Some(v) = val(i) {
                    if v <= minus_one {
                        return Err(Error::Inadmissible(format!("{} needs parameters > -1, got {v}", kind.name())));
                    }
                }
            }
        }
        _ => {}
    }
    for (_, p) in params {
        if p.contains(N) || p.contains(crate::scalar::X) {
            return Err(Error::InvalidSymbol("family parameters cannot involve n or x".into()));
        }
    }
    Ok(())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(_, v)| v.to_string()).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basis_strings() {
        assert_eq!(FamilySpec::parse("chebyshev").unwrap().kind(), Kind::Chebyshev);
        let g = FamilySpec::parse("gegenbauer:1/2").unwrap();
        assert_eq!(g.params()[0].1, RatFunc::frac(1, 2));
        assert!(matches!(FamilySpec::parse("gegenbauer:-1/2"), Err(Error::Inadmissible(_))));
        assert!(matches!(FamilySpec::parse("gegenbauer:0"), Err(Error::Inadmissible(_))));
        assert!(matches!(FamilySpec::parse("jacobi:-1,0"), Err(Error::Inadmissible(_))));
        assert!(matches!(FamilySpec::parse("bessel"), Err(Error::UnknownFamily(_))));
        assert!(FamilySpec::parse("jacobi:0").is_err());
        assert!(FamilySpec::parse("laguerre:n").is_err());
        assert_eq!(FamilySpec::parse("jacobi:alpha,beta").unwrap().to_string(), "jacobi:alpha,beta");
    }

    #[test]
    fn jacobi_degenerate_sum_simplifies() {
        let j = FamilySpec::parse("jacobi:-1/2,-1/2").unwrap();
        assert_eq!(j.x_num.coeff(0), &nk(1) / &(&(&k(2) * &n()) + &k(1)));
        assert_eq!(j.d_den.coeff(0), &k(1) / &(&(&k(2) * &n()) + &k(1)));
    }

    #[test]
    fn laguerre_generic_theta_is_reducible() {
        let l = FamilySpec::parse("laguerre:alpha").unwrap();
        let g = l.theta_pair_generic().unwrap();
        assert!(!g.is_irreducible().unwrap());
        assert!(l.theta_pair().unwrap().is_irreducible().unwrap());
    }
}
