//! Pairs `(A, B)` of Rec operators standing for the relation `A u = B v`
//! between two sequences, with the sum and composition rules built from
//! minimal common left multiples.
//!
//! A pair is only ever normalised by units of Rec (polynomials and rational
//! functions without roots on N). Common left factors are never cancelled:
//! that would change which sequences the pair relates.

use std::fmt;

use crate::error::{Error, Result};
use crate::rec::{mclm, RecOp};
use crate::scalar::{gcd_many, lcm, zn_split, Poly, RatFunc};
use crate::shift::ShiftOp;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fraction {
    num: RecOp,
    den: RecOp,
}

impl Fraction {
    /// Normalises by the Rec unit that makes all coefficients integer
    /// polynomials whose common content has only roots on N, with a sign
    /// fixed by the leading coefficient of the denominator.
    pub fn new(num: RecOp, den: RecOp) -> Fraction {
        if num.is_zero() && den.is_zero() {
            return Fraction { num, den };
        }
        let all: Vec<&RatFunc> = num.coeffs().iter().chain(den.coeffs()).collect();
        let mut l = Poly::one();
        for c in &all {
            if !c.den().is_one() {
                l = lcm(&l, c.den());
            }
        }
        let clear = |op: &RecOp| -> Vec<Poly> {
            op.coeffs()
                .iter()
                .map(|c| if l.is_one() { c.num().clone() } else { c.num() * &l.div_exact(c.den()).expect("lcm") })
                .collect()
        };
        let mut pn = clear(&num);
        let mut pd = clear(&den);
        let mut sorted: Vec<&Poly> = pn.iter().chain(pd.iter()).filter(|p| !p.is_zero()).collect();
        sorted.sort_by_key(|p| p.len());
        let g = gcd_many(sorted);
        let (unit, _) = zn_split(&g);
        let lead = if den.is_zero() { pn.last() } else { pd.last() };
        let unit = match lead {
            Some(p) if p.div_exact(&unit).expect("content divides").display_sign() < 0 => -unit,
            _ => unit,
        };
        if !unit.is_one() {
            pn = pn.iter().map(|p| p.div_exact(&unit).expect("content divides")).collect();
            pd = pd.iter().map(|p| p.div_exact(&unit).expect("content divides")).collect();
        }
        Fraction {
            num: RecOp::trusted(ShiftOp::from_polys(&pn)),
            den: RecOp::trusted(ShiftOp::from_polys(&pd)),
        }
    }

    /// The additive identity `(0, 1)`.
    pub fn zero() -> Fraction {
        Fraction::new(RecOp::zero(), RecOp::one())
    }

    /// The pair `(a, 1)` for a multiplication by a scalar.
    pub fn scalar(c: RatFunc) -> Result<Fraction> {
        Ok(Fraction::new(RecOp::new(ShiftOp::scalar(c))?, RecOp::one()))
    }

    pub fn num(&self) -> &RecOp {
        &self.num
    }

    pub fn den(&self) -> &RecOp {
        &self.den
    }

    pub fn order(&self) -> usize {
        self.num.order().max(self.den.order())
    }

    pub fn is_null(&self) -> bool {
        self.num.is_zero() && self.den.is_zero()
    }

    /// `(p1,p2) + (q1,q2) = (U p1 + V q1, M)` with `U p2 = V q2 = M`.
    pub fn add(&self, o: &Fraction) -> Result<Fraction> {
        if self.is_null() || o.is_null() {
            return Ok(Fraction::new(RecOp::zero(), RecOp::zero()));
        }
        if self.den.is_zero() || o.den.is_zero() {
            return Err(Error::Unsupported("sum with a zero denominator".into()));
        }
        let (m, u, v) = mclm(&self.den, &o.den)?;
        let num = u.mul(&self.num).add(&v.mul(&o.num));
        Ok(Fraction::new(num, m))
    }

    /// Composition: if `self` relates `v` to `w` and `o` relates `u` to `v`,
    /// the result relates `u` to `w`.
    pub fn mul(&self, o: &Fraction) -> Result<Fraction> {
        if self.is_null() || o.is_null() {
            return Ok(Fraction::new(RecOp::zero(), RecOp::zero()));
        }
        if self.num.is_zero() {
            return Ok(self.clone());
        }
        if o.den.is_zero() {
            return Err(Error::Unsupported("product with a zero denominator".into()));
        }
        let (_, x, y) = mclm(&o.den, &self.num)?;
        Ok(Fraction::new(x.mul(&o.num), y.mul(&self.den)))
    }

    /// Left multiplication of both members by a polynomial.
    pub fn scale_poly(&self, p: &Poly) -> Fraction {
        Fraction::new(self.num.scale_poly(p), self.den.scale_poly(p))
    }

    /// No common left factor of positive degree.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.num.is_zero() && self.den.is_zero() {
            return Ok(false);
        }
        Ok(self.num.gcld(&self.den)?.order() == 0)
    }

    /// Equality up to a unit of Rec.
    pub fn equiv(&self, o: &Fraction) -> bool {
        Fraction::new(self.num.clone(), self.den.clone()) == Fraction::new(o.num.clone(), o.den.clone())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::N;

    fn n() -> RatFunc {
        RatFunc::var(N)
    }

    fn c(k: i64) -> RatFunc {
        RatFunc::int(k)
    }

    fn rec(cs: Vec<RatFunc>) -> RecOp {
        RecOp::new(ShiftOp::new(cs)).unwrap()
    }

    fn frac(a: Vec<RatFunc>, b: Vec<RatFunc>) -> Fraction {
        Fraction::new(rec(a), rec(b))
    }

    #[test]
    fn normal_form_clears_units_only() {
        // (S/(2(n+1)), 1/(n+1)) ~ (S, 2)
        let f = frac(vec![c(0), &c(1) / &(&c(2) * &(&n() + &c(1)))], vec![&c(1) / &(&n() + &c(1))]);
        assert_eq!(f, frac(vec![c(0), c(1)], vec![c(2)]));
        // a factor n is not a unit and stays
        let g = frac(vec![n()], vec![&n() * &(&n() + &c(3))]);
        assert_eq!(g.num().coeff(0), n());
        assert_eq!(g.den().coeff(0), &n() * &(&n() + &c(3)));
    }

    #[test]
    fn zero_is_neutral() {
        let f = frac(vec![c(1), n()], vec![c(0), c(1)]);
        assert!(Fraction::zero().add(&f).unwrap().equiv(&f));
        assert!(f.add(&Fraction::zero()).unwrap().equiv(&f));
    }

    #[test]
    fn sum_with_common_denominator() {
        let s = rec(vec![c(0), c(1)]);
        let f = Fraction::new(rec(vec![c(1)]), s.clone());
        let g = Fraction::new(rec(vec![n()]), s.clone());
        let h = f.add(&g).unwrap();
        assert!(h.equiv(&Fraction::new(rec(vec![&n() + &c(1)]), s)));
    }

    #[test]
    fn composition_with_identity() {
        let f = frac(vec![c(1), n()], vec![c(2), c(0), c(1)]);
        let one = frac(vec![c(1)], vec![c(1)]);
        assert!(f.mul(&one).unwrap().equiv(&f));
        assert!(one.mul(&f).unwrap().equiv(&f));
    }

    #[test]
    fn irreducibility() {
        let f = frac(vec![c(1), c(1)], vec![c(0), c(1)]);
        assert!(f.is_irreducible().unwrap());
        let common = rec(vec![c(1), n()]);
        let g = Fraction::new(common.mul(&rec(vec![c(1), c(1)])), common.mul(&rec(vec![c(0), c(1)])));
        assert!(!g.is_irreducible().unwrap());
    }
}
