//! From a differential operator to a fraction of recurrence operators:
//! Horner evaluations through the pairs of a basis, the combination of the
//! left and right schemes, and the singular variants.

use std::fmt;

use crate::diffop::{DiffOp, XPoly};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::fraction::Fraction;
use crate::rec::{exact_right_divide, ext_gcd_with_s_power, strip_s_left_all, RecOp};
use crate::scalar::{gcd_many, nat_part, zn_split, Poly, RatFunc, N};
use crate::shift::ShiftOp;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Auto,
    Standard,
    Theta,
    Endpoint(i8),
    Taylor,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        Ok(match s {
            "auto" => Mode::Auto,
            "standard" => Mode::Standard,
            "theta" => Mode::Theta,
            "endpoint:+1" | "endpoint:1" => Mode::Endpoint(1),
            "endpoint:-1" => Mode::Endpoint(-1),
            "taylor" => Mode::Taylor,
            _ => return Err(Error::Unsupported(format!("unknown mode '{s}'"))),
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Auto => f.write_str("auto"),
            Mode::Standard => f.write_str("standard"),
            Mode::Theta => f.write_str("theta"),
            Mode::Endpoint(e) => write!(f, "endpoint:{}", if *e > 0 { "+1" } else { "-1" }),
            Mode::Taylor => f.write_str("taylor"),
        }
    }
}

/// The hypotheses under which the numerator annihilates the coefficients
/// of a solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub mode: Mode,
    pub order: usize,
    pub family: String,
    pub conditions: Vec<String>,
}

/// How the standard algorithm reached its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `gcd(p_r, sigma) = 1`: left Horner is already irreducible.
    LeftHorner,
    /// Right Horner output with no common power of `S_n`.
    RightHorner,
    /// Right Horner output with `S_n^l` stripped and recombined; records
    /// whether the final multiplier `c(n)` was a unit of Rec.
    Combined { ell: usize, c_is_unit: bool },
    /// Singular or Taylor modes.
    Direct,
}

#[derive(Clone, Debug)]
pub struct RecurrenceResult {
    pub fraction: Fraction,
    /// Coefficient of `u(n+k)` at index `k`, integer polynomials.
    pub recurrence: Vec<Poly>,
    pub hypotheses: HypothesisReport,
    pub mode: Mode,
    pub basis: String,
    pub route: Route,
}

/// The images of `x` and of the derivation used by a Horner scheme.
#[derive(Clone, Debug)]
pub struct Pairs {
    pub x: Fraction,
    pub d: Fraction,
}

impl Pairs {
    pub fn standard(spec: &FamilySpec) -> Pairs {
        Pairs { x: spec.x_pair(), d: spec.d_pair() }
    }

    /// `x -> (1, S_n)`, `d/dx -> ((n+1) S_n, 1)`.
    pub fn taylor() -> Pairs {
        let n1 = &RatFunc::var(N) + &RatFunc::one();
        Pairs {
            x: Fraction::new(RecOp::one(), RecOp::s_pow(1)),
            d: Fraction::new(RecOp::new(ShiftOp::monomial(n1, 1)).expect("in Rec"), RecOp::one()),
        }
    }
}

/// Right Horner evaluation of a polynomial in `x`.
pub fn horner_poly(p: &XPoly, x: &Fraction) -> Result<Fraction> {
    let Some(d) = p.degree() else {
        return Ok(Fraction::zero());
    };
    let mut s = Fraction::scalar(p.coeff(d))?;
    for i in (0..d).rev() {
        s = s.mul(x)?;
        let c = p.coeff(i);
        if !c.is_zero() {
            s = s.add(&Fraction::scalar(c)?)?;
        }
    }
    Ok(s)
}

/// `(...(p_r D + p_{r-1}) D + ...) D + p_0` through the pairs.
pub fn right_horner_coeffs(p: &[XPoly], pairs: &Pairs) -> Result<Fraction> {
    let r = p.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroOperator)?;
    let mut s = horner_poly(&p[r], &pairs.x)?;
    for i in (0..r).rev() {
        s = s.mul(&pairs.d)?;
        if !p[i].is_zero() {
            s = s.add(&horner_poly(&p[i], &pairs.x)?)?;
        }
    }
    Ok(s)
}

/// `D(...D(D q_r + q_{r-1}) ...) + q_0` through the pairs.
pub fn left_horner_coeffs(q: &[XPoly], pairs: &Pairs) -> Result<Fraction> {
    let r = q.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroOperator)?;
    let mut s = horner_poly(&q[r], &pairs.x)?;
    for i in (0..r).rev() {
        s = pairs.d.mul(&s)?;
        if !q[i].is_zero() {
            s = s.add(&horner_poly(&q[i], &pairs.x)?)?;
        }
    }
    Ok(s)
}

pub fn right_horner(l: &DiffOp, spec: &FamilySpec) -> Result<Fraction> {
    right_horner_coeffs(l.coeffs(), &Pairs::standard(spec))
}

pub fn left_horner(l: &DiffOp, spec: &FamilySpec) -> Result<Fraction> {
    left_horner_coeffs(&l.left_form(), &Pairs::standard(spec))
}

/// The left Horner pair written out directly:
/// `(sum_k S^{m - d_k + k} D_den,{r-k}(n + d_k) Q_k, S^m D_den,r)` with
/// `(Q_k, S^{d_k})` the Horner pair of `q_k` and `m = max (d_k - k)^+`.
pub fn left_horner_closed_form(l: &DiffOp, spec: &FamilySpec) -> Result<Fraction> {
    let q = l.left_form();
    let r = q.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroOperator)?;
    let x = spec.x_pair();
    let m = q
        .iter()
        .enumerate()
        .filter_map(|(k, qk)| qk.degree().map(|d| d.saturating_sub(k)))
        .max()
        .unwrap_or(0);
    let mut num = ShiftOp::zero();
    for (k, qk) in q.iter().enumerate() {
        let Some(dk) = qk.degree() else { continue };
        let hk = horner_poly(qk, &x)?;
        debug_assert_eq!(hk.den().as_shift(), &ShiftOp::s_pow(dk));
        let dd = spec.d_den_power(r - k).shift_arg(dk as i64);
        num = &num + &(&ShiftOp::s_pow(m + k - dk) * &(&dd * hk.num().as_shift()));
    }
    let den = &ShiftOp::s_pow(m) * spec.d_den_power(r).as_shift();
    Ok(Fraction::new(RecOp::new(num)?, RecOp::new(den)?))
}

fn min_valuation(f: &Fraction) -> usize {
    match (f.num().valuation(), f.den().valuation()) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => 0,
    }
}

/// Irreducible fraction for `L` in a classical basis.
pub fn main(l: &DiffOp, spec: &FamilySpec) -> Result<(Fraction, Route)> {
    if l.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let r = l.order();
    if l.lc().gcd(&spec.sigma).is_constant() {
        return Ok((left_horner(l, spec)?, Route::LeftHorner));
    }
    let h = right_horner(l, spec)?;
    let ell = min_valuation(&h);
    if ell == 0 {
        return Ok((h, Route::RightHorner));
    }
    let (ab, _q) = strip_s_left_all(&[h.num(), h.den()], ell)?;
    let (a, b) = (&ab[0], &ab[1]);
    let vb = b.valuation().ok_or(Error::ZeroOperator)?;
    let target = RecOp::new(&ShiftOp::s_pow(vb) * spec.d_den_power(r).as_shift())?;
    let (g, _qt) = exact_right_divide(&target, b)?;
    let (_u, _v, c) = ext_gcd_with_s_power(g.as_shift(), ell)?;
    let c_is_unit = nat_part(&c).is_one();
    let out = Fraction::new(a.scale_poly(&c), b.scale_poly(&c));
    Ok((out, Route::Combined { ell, c_is_unit }))
}

/// Right Horner over `x` and the `sigma d/dx` pair; needs `sigma^k | p_k`.
pub fn theta_main(l: &DiffOp, spec: &FamilySpec) -> Result<Fraction> {
    let theta = spec.theta_pair()?;
    let q = l.theta_form(&spec.sigma).map_err(|e| match e {
        Error::Hypothesis(m) => Error::Hypothesis(format!(
            "{m}; sigma^k must divide p_k for theta mode (left-multiply the operator by a power of sigma)"
        )),
        e => e,
    })?;
    right_horner_coeffs(&q, &Pairs { x: spec.x_pair(), d: theta })
}

/// Right Horner over `x` and the `(1 + eps x) d/dx` pair; needs
/// `(1 + eps x)^k | p_k`. The result need not be irreducible.
pub fn endpoint_main(l: &DiffOp, spec: &FamilySpec, eps: i8) -> Result<Fraction> {
    let pair = spec.endpoint_pair(eps)?;
    let tau = XPoly::from_ints(&[1, eps as i64]);
    let q = l.theta_form(&tau)?;
    right_horner_coeffs(&q, &Pairs { x: spec.x_pair(), d: pair })
}

/// Taylor pair by right Horner evaluation of `sum p_i(x) D^i`.
pub fn taylor_fraction(l: &DiffOp) -> Result<Fraction> {
    right_horner_coeffs(l.coeffs(), &Pairs::taylor())
}

/// Taylor pair by left Horner evaluation of `sum D^i q_i(x)`.
pub fn taylor_left_fraction(l: &DiffOp) -> Result<Fraction> {
    left_horner_coeffs(&l.left_form(), &Pairs::taylor())
}

/// Runs the algorithm selected by `mode`. `spec` may be `None` only for
/// Taylor mode.
pub fn recurrence_for(l: &DiffOp, spec: Option<&FamilySpec>, mode: Mode) -> Result<RecurrenceResult> {
    if l.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let r = l.order();
    let need = || spec.ok_or_else(|| Error::Unsupported(format!("mode {mode} needs an orthogonal basis")));
    let (fraction, route, basis, conditions) = match mode {
        Mode::Auto | Mode::Standard => {
            let s = need()?;
            let (f, route) = main(l, s)?;
            let cond = vec![format!("the sequences ([psi_n](f^(j))) exist for j = 0..{r}")];
            (f, route, s.to_string(), cond)
        }
        Mode::Theta => {
            let s = need()?;
            let f = theta_main(l, s)?;
            let cond = vec![
                format!("sigma^k divides p_k for k = 0..{r} with sigma = {} (checked)", s.sigma),
                format!("the sequences ([psi_n](sigma^k f^(k))) exist for k = 0..{r}"),
            ];
            (f, Route::Direct, s.to_string(), cond)
        }
        Mode::Endpoint(e) => {
            let s = need()?;
            let f = endpoint_main(l, s, e)?;
            let t = if e > 0 { "1+x" } else { "1-x" };
            let cond = vec![
                format!("({t})^k divides p_k for k = 0..{r} (checked)"),
                format!("the sequences ([psi_n](({t})^k f^(k))) exist for k = 0..{r}"),
                "the fraction is not guaranteed to be irreducible".to_string(),
            ];
            (f, Route::Direct, s.to_string(), cond)
        }
        Mode::Taylor => {
            let f = taylor_left_fraction(l)?;
            let cond = vec!["f is a formal power series at x = 0".to_string()];
            (f, Route::Direct, "taylor".to_string(), cond)
        }
    };
    Ok(RecurrenceResult {
        recurrence: normalize_recurrence(fraction.num().as_shift()),
        hypotheses: HypothesisReport { mode, order: r, family: basis.clone(), conditions },
        fraction,
        mode,
        basis,
        route,
    })
}

/// Numerator coefficients as integer polynomials, divided by their Z_N
/// content and signed so the top coefficient leads positively.
pub fn normalize_recurrence(op: &ShiftOp) -> Vec<Poly> {
    if op.is_zero() {
        return Vec::new();
    }
    let mut den = Poly::one();
    for c in op.coeffs() {
        den = crate::scalar::lcm(&den, c.den());
    }
    let polys: Vec<Poly> = op.coeffs().iter().map(|c| c.num() * &den.div_exact(c.den()).expect("lcm")).collect();
    let g = gcd_many(polys.iter().filter(|p| !p.is_zero()));
    let (mut unit, _) = zn_split(&g);
    let top = polys.last().expect("nonzero");
    if top.div_exact(&unit).expect("content").display_sign() < 0 {
        unit = -unit;
    }
    polys.iter().map(|p| p.div_exact(&unit).expect("content")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    fn n() -> RatFunc {
        RatFunc::var(N)
    }

    fn rec(cs: Vec<RatFunc>) -> RecOp {
        RecOp::new(ShiftOp::new(cs)).unwrap()
    }

    #[test]
    fn taylor_example_pairs() {
        // x D - 2
        let l = DiffOp::new(vec![xp(&[-2]), xp(&[0, 1])]);
        let right = taylor_fraction(&l).unwrap();
        assert_eq!(right, Fraction::new(rec(vec![RatFunc::zero(), &n() - &RatFunc::one()]), RecOp::s_pow(1)));
        let left = taylor_left_fraction(&l).unwrap();
        assert_eq!(left, Fraction::new(rec(vec![&n() - &RatFunc::int(2)]), RecOp::one()));
    }

    #[test]
    fn exp_over_chebyshev() {
        let l = DiffOp::new(vec![xp(&[-1]), xp(&[1])]);
        let spec = FamilySpec::chebyshev();
        let rh = right_horner(&l, &spec).unwrap();
        let two_n1 = &RatFunc::int(2) * &(&n() + &RatFunc::one());
        let expected = Fraction::new(
            rec(vec![RatFunc::int(-1), two_n1, RatFunc::one()]),
            rec(vec![RatFunc::one(), RatFunc::zero(), RatFunc::int(-1)]),
        );
        assert!(rh.equiv(&expected));
        let (m, route) = main(&l, &spec).unwrap();
        assert_eq!(route, Route::LeftHorner);
        assert!(m.is_irreducible().unwrap());
        assert!(left_horner_closed_form(&l, &spec).unwrap().equiv(&left_horner(&l, &spec).unwrap()));
    }

    #[test]
    fn recurrence_sign_and_content() {
        let op = ShiftOp::new(vec![RatFunc::int(-1), &RatFunc::int(2) * &(&n() + &RatFunc::one())]);
        let r = normalize_recurrence(&op);
        assert_eq!(r[0], Poly::int(-1));
        assert_eq!(r[1], &Poly::int(2) * &(Poly::var(N) + Poly::one()));
    }
}
