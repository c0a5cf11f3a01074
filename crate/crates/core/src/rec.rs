//! Rec: shift operators whose coefficient denominators have no root in the
//! nonnegative integers. Such operators map sequences indexed by N to
//! sequences indexed by N.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::scalar::npoly::{merge_roots, nat_poly, nonneg_integer_roots};
use crate::scalar::{Poly, RatFunc};
use crate::shift::ShiftOp;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RecOp(ShiftOp);

impl RecOp {
    /// Checks that every denominator lies in Z_N.
    pub fn new(op: ShiftOp) -> Result<RecOp> {
        if let Some(&(k, _)) = nat_poles(&op).first() {
            return Err(Error::NotRec(k));
        }
        Ok(RecOp(op))
    }

    pub(crate) fn trusted(op: ShiftOp) -> RecOp {
        debug_assert!(nat_poles(&op).is_empty(), "not in Rec: {op}");
        RecOp(op)
    }

    pub fn zero() -> RecOp {
        RecOp(ShiftOp::zero())
    }

    pub fn one() -> RecOp {
        RecOp(ShiftOp::one())
    }

    pub fn s_pow(k: usize) -> RecOp {
        RecOp(ShiftOp::s_pow(k))
    }

    pub fn as_shift(&self) -> &ShiftOp {
        &self.0
    }

    pub fn into_shift(self) -> ShiftOp {
        self.0
    }

    pub fn mul(&self, o: &RecOp) -> RecOp {
        RecOp(&self.0 * &o.0)
    }

    pub fn add(&self, o: &RecOp) -> RecOp {
        RecOp(&self.0 + &o.0)
    }

    pub fn neg(&self) -> RecOp {
        RecOp(-&self.0)
    }

    /// Multiplies on the left by a polynomial in `n` and the parameters.
    pub fn scale_poly(&self, p: &Poly) -> RecOp {
        RecOp(self.0.scale_left(&RatFunc::from_poly(p.clone())))
    }

    /// Formal left quotient by `S_n^l` made integral: the coefficients
    /// `a_{j+l}(n-l)` times the minimal `q(n) = prod (n-k)^m` clearing the
    /// poles this creates on N. Requires `S_n^l` to divide on the left.
    pub fn strip_s_left(&self, l: usize) -> Result<(RecOp, Poly)> {
        let (mut v, q) = strip_s_left_all(&[self], l)?;
        Ok((v.pop().expect("one operator"), q))
    }
}

impl Deref for RecOp {
    type Target = ShiftOp;
    fn deref(&self) -> &ShiftOp {
        &self.0
    }
}

impl fmt::Display for RecOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Poles on N of the coefficients, merged over all coefficients.
pub fn nat_poles(op: &ShiftOp) -> Vec<(u64, u32)> {
    let mut roots = Vec::new();
    for c in op.coeffs() {
        if !c.den().is_one() {
            roots = merge_roots(&roots, &nonneg_integer_roots(c.den()));
        }
    }
    roots
}

/// Minimal monic `q = prod (n-k)^m` with `q * op` in Rec for every `op`.
pub fn clearing_factor(ops: &[&ShiftOp]) -> Poly {
    let mut roots = Vec::new();
    for op in ops {
        roots = merge_roots(&roots, &nat_poles(op));
    }
    nat_poly(&roots)
}

/// Joint version of [`RecOp::strip_s_left`] with a common `q`.
pub fn strip_s_left_all(ops: &[&RecOp], l: usize) -> Result<(Vec<RecOp>, Poly)> {
    let mut stripped = Vec::with_capacity(ops.len());
    for op in ops {
        if op.valuation().is_some_and(|v| v < l) {
            return Err(Error::NotDivisible("S_n power does not divide on the left"));
        }
        let coeffs: Vec<RatFunc> = op.coeffs().iter().skip(l).map(|c| c.shift(crate::scalar::N, -(l as i64))).collect();
        stripped.push(ShiftOp::new(coeffs));
    }
    let refs: Vec<&ShiftOp> = stripped.iter().collect();
    let q = clearing_factor(&refs);
    let qr = RatFunc::from_poly(q.clone());
    Ok((stripped.into_iter().map(|s| RecOp::trusted(s.scale_left(&qr))).collect(), q))
}

/// Minimal common left multiple in Rec: `(M, U, V)` with `U a = V b = M`,
/// `M = d * lclm` for the least `d = prod (n-k)^m` making `U` and `V` lie in
/// Rec. `U` and `V` are left coprime.
pub fn mclm(a: &RecOp, b: &RecOp) -> Result<(RecOp, RecOp, RecOp)> {
    let (l, u, v) = a.0.lclm_ext(&b.0)?;
    let d = RatFunc::from_poly(clearing_factor(&[&u, &v]));
    Ok((
        RecOp::trusted(l.scale_left(&d)),
        RecOp::trusted(u.scale_left(&d)),
        RecOp::trusted(v.scale_left(&d)),
    ))
}

/// `(G, q)` with `q a = G b`, `G` in Rec and `q = prod (n-k)^m` minimal.
pub fn exact_right_divide(a: &RecOp, b: &RecOp) -> Result<(RecOp, Poly)> {
    let g = a.0.right_div_exact(&b.0)?;
    let q = clearing_factor(&[&g]);
    Ok((RecOp::trusted(g.scale_left(&RatFunc::from_poly(q.clone()))), q))
}

/// Solves `U g + V S_n^l = 1` in the shift algebra and returns `(U, V, c)`
/// where `c` is the lcm of the coefficient denominators of `U` and `V`.
/// Fails if `g` and `S_n^l` have a nontrivial common right divisor.
pub fn ext_gcd_with_s_power(g: &ShiftOp, l: usize) -> Result<(ShiftOp, ShiftOp, Poly)> {
    let (gg, u, v) = g.xgcrd(&ShiftOp::s_pow(l))?;
    if gg.order() != 0 {
        return Err(Error::Precondition("operator is not coprime to S_n".into()));
    }
    let mut c = Poly::one();
    for x in u.coeffs().iter().chain(v.coeffs()) {
        if !x.den().is_one() {
            c = crate::scalar::lcm(&c, x.den());
        }
    }
    Ok((u, v, c))
}
