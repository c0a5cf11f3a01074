//! Reduced quotients of integer polynomials.
//!
//! One type serves as the parameter field K, as K(n) and as K(x): which
//! variables may occur is a convention of the caller.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::{gcd, normalize_sign};
use super::poly::Poly;
use super::symbols::Var;
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` over Z and `den` of positive leading
/// coefficient; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(c: i64) -> RatFunc {
        RatFunc::from_poly(Poly::int(c))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn rational(q: &BigRational) -> RatFunc {
        RatFunc::from_ints(q.numer().clone(), q.denom().clone())
    }

    pub fn frac(p: i64, q: i64) -> RatFunc {
        RatFunc::from_ints(BigInt::from(p), BigInt::from(q))
    }

    fn from_ints(p: BigInt, q: BigInt) -> RatFunc {
        assert!(!q.is_zero(), "zero denominator");
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        RatFunc { num: Poly::constant(p), den: Poly::constant(q) }
    }

    /// Reduces `num/den`; fails on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = if let Some(c) = den.as_constant() {
            Poly::constant(num.int_content().gcd(&c))
        } else {
            gcd(&num, &den)
        };
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.lead_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(self.num.as_constant()?, self.den.as_constant()?))
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn var_mask(&self) -> u16 {
        self.num.var_mask() | self.den.var_mask()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Substitutes `v -> v + k`.
    pub fn shift(&self, v: Var, k: i64) -> RatFunc {
        if k == 0 {
            return self.clone();
        }
        // a shift is a ring automorphism, so the quotient stays reduced
        RatFunc { num: self.num.shift(v, k), den: self.den.shift(v, k) }.fix_sign()
    }

    /// Substitutes `v -> -v + k`.
    pub fn reflect(&self, v: Var, k: i64) -> RatFunc {
        let k = BigInt::from(k);
        RatFunc { num: self.num.affine(v, true, &k), den: self.den.affine(v, true, &k) }.fix_sign()
    }

    fn fix_sign(self) -> RatFunc {
        if self.den.lead_coeff().is_negative() {
            RatFunc { num: -self.num, den: -self.den }
        } else {
            self
        }
    }

    pub fn derivative(&self, v: Var) -> RatFunc {
        if !self.contains(v) {
            return RatFunc::zero();
        }
        let num = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        RatFunc::reduce(num, &self.den * &self.den)
    }

    /// Substitutes `v -> value`; fails if the denominator vanishes.
    pub fn eval_int(&self, v: Var, value: &BigInt) -> Result<RatFunc> {
        let den = self.den.eval_int(v, value);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.num.eval_int(v, value), den))
    }

    /// Substitutes `v -> value`; fails if the denominator vanishes.
    pub fn subst(&self, v: Var, value: &BigRational) -> Result<RatFunc> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let (num, qn) = self.num.eval_rational(v, value);
        let (den, qd) = self.den.eval_rational(v, value);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num/qn divided by den/qd
        Ok(RatFunc::reduce(num.scale(&qd), den.scale(&qn)))
    }

    /// Evaluates all variables to rationals; `None` on a pole.
    pub fn eval_all(&self, vals: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval_all(vals);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_all(vals) / d)
    }

    /// Sign of the leading coefficient of the numerator in display order.
    pub fn display_sign(&self) -> i32 {
        self.num.display_sign()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            // gcd(num, b*d) = 1 when gcd(b, d) = 1
            return RatFunc { num, den: &self.den * &o.den }.fix_sign_or_zero();
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = gcd(&num, &g);
        let den = &(&self.den * &d1);
        if g2.is_one() {
            RatFunc { num, den: den.clone() }.fix_sign()
        } else {
            RatFunc { num: num.div_exact(&g2).expect("gcd divides"), den: den.div_exact(&g2).expect("gcd divides") }
                .fix_sign()
        }
    }
}

impl RatFunc {
    fn fix_sign_or_zero(self) -> RatFunc {
        if self.num.is_zero() {
            RatFunc::zero()
        } else {
            self.fix_sign()
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: Poly::one() };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc { num: &a * &c, den: normalize_sign(&b * &d) }.fix_sign()
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::inv`] for a checked variant.
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = crate::render::poly_to_string(&self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = crate::render::poly_to_string(&self.den);
        let wrap = |s: String, p: &Poly| {
            let (m, c) = &p.terms()[0];
            if p.len() > 1 || (!m.is_one() && !c.is_one()) {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(num, &self.num), wrap(den, &self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::symbols::N;

    fn n() -> RatFunc {
        RatFunc::var(N)
    }

    #[test]
    fn field_arithmetic() {
        let a = &RatFunc::one() / &(&n() + &RatFunc::one());
        let b = &RatFunc::one() / &n();
        let s = &a + &b;
        // 1/(n+1) + 1/n = (2n+1)/(n(n+1))
        let expect = RatFunc::new(
            Poly::var(N).scale(&2.into()) + Poly::one(),
            &Poly::var(N) * &(Poly::var(N) + Poly::one()),
        )
        .unwrap();
        assert_eq!(s, expect);
        assert_eq!(&s - &b, a);
        assert_eq!(&(&s * &n()) / &n(), s);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn shift_keeps_reduced_form() {
        let a = &RatFunc::one() / &(&n() - &RatFunc::int(2));
        let s = a.shift(N, 2);
        assert_eq!(s, &RatFunc::one() / &n());
        let r = a.reflect(N, 0);
        assert_eq!(r, &RatFunc::int(-1) / &(&n() + &RatFunc::int(2)));
    }

    #[test]
    fn evaluation_detects_poles() {
        let a = &RatFunc::one() / &(&n() - &RatFunc::int(2));
        assert!(a.eval_int(N, &BigInt::from(2)).is_err());
        assert_eq!(a.eval_int(N, &BigInt::from(4)).unwrap(), RatFunc::frac(1, 2));
    }
}
