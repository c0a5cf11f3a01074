//! Brute-force verification: the basis polynomials from the three-term
//! recurrence, exact expansion of polynomials in that basis, and the check
//! `num . [psi_n](f) = den . [psi_n](L f)` on finite prefixes.

use crate::diffop::{DiffOp, XPoly};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::fraction::Fraction;
use crate::scalar::{RatFunc, N};
use crate::shift::ShiftOp;

/// `psi_0 .. psi_N`, or the monomials for the Taylor basis.
#[derive(Clone, Debug)]
pub struct BasisPrefix {
    polys: Vec<XPoly>,
    doubled_first: bool,
}

impl BasisPrefix {
    pub fn build(spec: &FamilySpec, len: usize) -> Result<BasisPrefix> {
        if len == 0 {
            return Err(Error::Precondition("basis prefix needs N >= 1".into()));
        }
        let mut polys = vec![spec.seeds[0].clone(), spec.seeds[1].clone()];
        let t = &spec.three_term;
        for i in 1..len {
            let idx = num_bigint::BigInt::from(i);
            let a = t.a.eval_int(N, &idx)?;
            let b = t.b.eval_int(N, &idx)?;
            let c = t.c.eval_int(N, &idx)?;
            let lin = XPoly::new(vec![b, a]);
            let next = &(&lin * &polys[i]) - &polys[i - 1].scale(&c);
            polys.push(next);
        }
        polys.truncate(len + 1);
        Ok(BasisPrefix { polys, doubled_first: spec.doubled_first })
    }

    pub fn taylor(len: usize) -> BasisPrefix {
        let polys = (0..=len).map(|i| XPoly::x().pow(i as u32)).collect();
        BasisPrefix { polys, doubled_first: false }
    }

    pub fn polys(&self) -> &[XPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coefficients `c_0 .. c_N` of `f`, with `c_0` doubled for Chebyshev.
    pub fn expand(&self, f: &XPoly) -> Result<Vec<RatFunc>> {
        let nmax = self.len();
        if f.degree().is_some_and(|d| d > nmax) {
            return Err(Error::Precondition(format!("degree exceeds basis prefix length {nmax}")));
        }
        let mut rem = f.clone();
        let mut c = vec![RatFunc::zero(); nmax + 1];
        while let Some(d) = rem.degree() {
            let p = &self.polys[d];
            let ck = &rem.lc() / &p.lc();
            rem = &rem - &p.scale(&ck);
            debug_assert!(rem.degree().is_none_or(|e| e < d));
            c[d] = ck;
        }
        if self.doubled_first {
            c[0] = &c[0] * &RatFunc::int(2);
        }
        Ok(c)
    }

    /// Inverse of [`BasisPrefix::expand`].
    pub fn reconstruct(&self, c: &[RatFunc]) -> XPoly {
        let mut acc = XPoly::zero();
        for (i, ci) in c.iter().enumerate() {
            let ci = if i == 0 && self.doubled_first { ci / &RatFunc::int(2) } else { ci.clone() };
            acc = &acc + &self.polys[i].scale(&ci);
        }
        acc
    }
}

/// `sigma psi_k'' + tau psi_k' + lambda_k psi_k`.
pub fn sl_residual(spec: &FamilySpec, psi: &XPoly, k: usize) -> Result<XPoly> {
    let lam = spec.lambda.eval_int(N, &k.into())?;
    let d1 = psi.derivative();
    let d2 = d1.derivative();
    Ok(&(&(&spec.sigma * &d2) + &(&spec.tau * &d1)) + &psi.scale(&lam))
}

/// Residual sequence `num . u - den . v`, zero-padded so that every index
/// `0 ..= len` is checked.
pub fn relation_residual(num: &ShiftOp, den: &ShiftOp, u: &[RatFunc], v: &[RatFunc]) -> Result<Vec<RatFunc>> {
    let len = u.len().max(v.len());
    let order = num.order().max(den.order());
    let pad = |s: &[RatFunc]| {
        let mut s = s.to_vec();
        s.resize(len + order, RatFunc::zero());
        s
    };
    let a = num.apply(&pad(u), 0)?;
    let b = den.apply(&pad(v), 0)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

/// True iff `num . [psi_n](f) = den . [psi_n](L f)` at every index up to the
/// prefix length. Both sequences are finitely supported, so this is exact.
pub fn check_relation(fr: &Fraction, l: &DiffOp, f: &XPoly, basis: &BasisPrefix) -> Result<bool> {
    let lf = l.apply(f);
    check_pair(fr, f, &lf, basis)
}

/// True iff `num . [psi_n](f) = den . [psi_n](g)`.
pub fn check_pair(fr: &Fraction, f: &XPoly, g: &XPoly, basis: &BasisPrefix) -> Result<bool> {
    let u = basis.expand(f)?;
    let v = basis.expand(g)?;
    Ok(relation_residual(fr.num(), fr.den(), &u, &v)?.iter().all(|r| r.is_zero()))
}

/// True iff `op . u = 0` at every index, `u` zero-padded.
pub fn annihilates(op: &ShiftOp, u: &[RatFunc]) -> Result<bool> {
    Ok(relation_residual(op, &ShiftOp::zero(), u, &[])?.iter().all(|r| r.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    #[test]
    fn chebyshev_and_hermite_prefixes() {
        let b = BasisPrefix::build(&FamilySpec::chebyshev(), 3).unwrap();
        assert_eq!(b.polys(), &[xp(&[1]), xp(&[0, 1]), xp(&[-1, 0, 2]), xp(&[0, -3, 0, 4])]);
        let h = BasisPrefix::build(&FamilySpec::hermite(), 2).unwrap();
        assert_eq!(h.polys(), &[xp(&[1]), xp(&[0, 2]), xp(&[-2, 0, 4])]);
    }

    #[test]
    fn chebyshev_expansion_doubles_first() {
        let b = BasisPrefix::build(&FamilySpec::chebyshev(), 4).unwrap();
        let c = b.expand(&xp(&[0, 0, 1])).unwrap();
        assert_eq!(c[..3], [RatFunc::one(), RatFunc::zero(), RatFunc::frac(1, 2)]);
        assert_eq!(b.reconstruct(&c), xp(&[0, 0, 1]));
    }

    #[test]
    fn mutated_relation_fails() {
        // ((n+1) S, 1) maps [x^n] f to [x^n] f'
        let b = BasisPrefix::taylor(6);
        let fr = Fraction::new(
            crate::rec::RecOp::new(ShiftOp::new(vec![RatFunc::zero(), &RatFunc::var(N) + &RatFunc::one()])).unwrap(),
            crate::rec::RecOp::one(),
        );
        let f = xp(&[3, 1, 4, 1, 5]);
        assert!(check_relation(&fr, &DiffOp::d(), &f, &b).unwrap());
        let bad = Fraction::new(
            crate::rec::RecOp::new(ShiftOp::new(vec![RatFunc::one(), &RatFunc::var(N) + &RatFunc::one()])).unwrap(),
            crate::rec::RecOp::one(),
        );
        assert!(!check_relation(&bad, &DiffOp::d(), &f, &b).unwrap());
    }
}
