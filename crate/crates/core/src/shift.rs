//! The shift algebra K(n)<S_n> with `S_n q(n) = q(n+1) S_n`.
//!
//! Euclidean algorithms run on primitive polynomial-coefficient remainders
//! (pseudo-division with the shifted leading coefficients reduced by their
//! gcd); Bézout cofactors are carried with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{gcd, gcd_many, lcm, Poly, RatFunc, N};

/// `coeffs[j]` is the coefficient of `S_n^j`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ShiftOp {
    coeffs: Vec<RatFunc>,
}

impl ShiftOp {
    pub fn zero() -> ShiftOp {
        ShiftOp { coeffs: Vec::new() }
    }

    pub fn one() -> ShiftOp {
        ShiftOp::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> ShiftOp {
        ShiftOp::new(vec![c])
    }

    /// `S_n^k`.
    pub fn s_pow(k: usize) -> ShiftOp {
        ShiftOp::monomial(RatFunc::one(), k)
    }

    /// `c S_n^k`.
    pub fn monomial(c: RatFunc, k: usize) -> ShiftOp {
        let mut coeffs = vec![RatFunc::zero(); k];
        coeffs.push(c);
        ShiftOp::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<RatFunc>) -> ShiftOp {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ShiftOp { coeffs }
    }

    pub fn from_polys(p: &[Poly]) -> ShiftOp {
        ShiftOp::new(p.iter().cloned().map(RatFunc::from_poly).collect())
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> RatFunc {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero operator counted as degree 0.
    pub fn order(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> RatFunc {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest power of `S_n` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `c * self`.
    pub fn scale_left(&self, c: &RatFunc) -> ShiftOp {
        if c.is_one() {
            return self.clone();
        }
        ShiftOp::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self * c`.
    pub fn scale_right(&self, c: &RatFunc) -> ShiftOp {
        ShiftOp::new(self.coeffs.iter().enumerate().map(|(i, a)| a * &c.shift(N, i as i64)).collect())
    }

    /// `A(n + k, S_n)`.
    pub fn shift_arg(&self, k: i64) -> ShiftOp {
        ShiftOp { coeffs: self.coeffs.iter().map(|a| a.shift(N, k)).collect() }
    }

    /// Left multiplication by `S_n^k`.
    pub fn mul_s_left(&self, k: usize) -> ShiftOp {
        let mut coeffs = vec![RatFunc::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|a| a.shift(N, k as i64)));
        ShiftOp::new(coeffs)
    }

    pub fn monic(&self) -> Result<ShiftOp> {
        let inv = self.lc().inv().map_err(|_| Error::ZeroOperator)?;
        Ok(self.scale_left(&inv))
    }

    /// The anti-automorphism `n -> -n`, `S_n -> S_n`; an involution that
    /// exchanges left and right divisibility.
    pub fn adjoint(&self) -> ShiftOp {
        ShiftOp {
            coeffs: self.coeffs.iter().enumerate().map(|(j, a)| a.reflect(N, -(j as i64))).collect(),
        }
    }

    /// `(Q, R)` with `self = Q B + R` and `deg R < deg B`.
    pub fn right_divmod(&self, b: &ShiftOp) -> Result<(ShiftOp, ShiftOp)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lb = b.lc();
        let mut r = self.clone();
        let mut q = vec![RatFunc::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let k = dr - db;
            let t = &r.lc() / &lb.shift(N, k as i64);
            r = &r - &b.mul_s_left(k).scale_left(&t);
            q[k] = t;
            // guard against a nonvanishing top term from inexact cancellation
            if r.degree() == Some(dr) {
                return Err(Error::NotDivisible("leading term did not cancel"));
            }
        }
        Ok((ShiftOp::new(q), r))
    }

    /// `Q` with `self = Q B`, if the remainder vanishes.
    pub fn right_div_exact(&self, b: &ShiftOp) -> Result<ShiftOp> {
        let (q, r) = self.right_divmod(b)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible("nonzero right remainder"));
        }
        Ok(q)
    }

    /// Monic greatest common right divisor.
    pub fn gcrd(&self, b: &ShiftOp) -> Result<ShiftOp> {
        if self.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return self.monic();
        }
        Ok(euclid(self, b, false).gcrd)
    }

    /// Monic greatest common left divisor, via the adjoint.
    pub fn gcld(&self, b: &ShiftOp) -> Result<ShiftOp> {
        self.adjoint().gcrd(&b.adjoint())?.adjoint().monic()
    }

    /// `(G, X, Y)` with `self X + b Y = G`, `G` the monic gcld.
    pub fn gcld_ext(&self, b: &ShiftOp) -> Result<(ShiftOp, ShiftOp, ShiftOp)> {
        let (g, s, t) = self.adjoint().xgcrd(&b.adjoint())?;
        Ok((g.adjoint(), s.adjoint(), t.adjoint()))
    }

    /// `(G, U, V)` with `U self + V b = G`, `G` the monic gcrd.
    pub fn xgcrd(&self, b: &ShiftOp) -> Result<(ShiftOp, ShiftOp, ShiftOp)> {
        if self.is_zero() || b.is_zero() {
            return Err(Error::ZeroOperator);
        }
        let e = euclid(self, b, true);
        Ok((e.gcrd, e.s, e.t))
    }

    /// Monic least common left multiple `L` with cofactors, `U self = V b = L`.
    pub fn lclm_ext(&self, b: &ShiftOp) -> Result<(ShiftOp, ShiftOp, ShiftOp)> {
        if self.is_zero() || b.is_zero() {
            return Err(Error::ZeroOperator);
        }
        if let Some(r) = lclm_fast(self, b) {
            return Ok(r);
        }
        if let Some((l, v, u)) = lclm_fast(b, self) {
            return Ok((l, u, v));
        }
        let e = euclid(self, b, true);
        let u = e.u;
        let v = -&e.v;
        let l = &u * self;
        let inv = l.lc().inv()?;
        Ok((l.scale_left(&inv), u.scale_left(&inv), v.scale_left(&inv)))
    }

    pub fn lclm(&self, b: &ShiftOp) -> Result<ShiftOp> {
        Ok(self.lclm_ext(b)?.0)
    }

    /// Applies the operator to a sequence prefix whose first entry has
    /// index `offset`: `v_i = sum_j a_j(i) u_{i+j}`.
    pub fn apply(&self, u: &[RatFunc], offset: i64) -> Result<Vec<RatFunc>> {
        let d = self.order();
        if u.len() <= d {
            return Err(Error::InsufficientPrefix { need: d + 1, have: u.len() });
        }
        let mut out = Vec::with_capacity(u.len() - d);
        for i in 0..u.len() - d {
            let idx = BigInt::from(offset + i as i64);
            let mut acc = RatFunc::zero();
            for (j, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() || u[i + j].is_zero() {
                    continue;
                }
                acc = &acc + &(&a.eval_int(N, &idx)? * &u[i + j]);
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// `lclm(a, c S^j)` in closed form when `b = c S^j` is a monomial.
fn lclm_fast(a: &ShiftOp, b: &ShiftOp) -> Option<(ShiftOp, ShiftOp, ShiftOp)> {
    let j = b.degree()?;
    if b.valuation()? != j {
        return None;
    }
    let c = b.lc();
    let v = a.valuation()?;
    let (u, vv, l) = if j <= v {
        // b already right-divides a
        let u = ShiftOp::one();
        let q = ShiftOp::new(a.coeffs[j..].to_vec());
        (u, q.scale_right(&c.inv().ok()?), a.clone())
    } else {
        // a = a' S^v with a' coprime to S; lclm = S^(j-v) a
        let m = j - v;
        let a_hat = ShiftOp::new(a.coeffs[v..].to_vec());
        let u = ShiftOp::s_pow(m);
        let vv = a_hat.shift_arg(m as i64).scale_right(&c.inv().ok()?);
        (u, vv, a.mul_s_left(m))
    };
    let inv = l.lc().inv().ok()?;
    Some((l.scale_left(&inv), u.scale_left(&inv), vv.scale_left(&inv)))
}

struct Euclid {
    gcrd: ShiftOp,
    /// `s a + t b = gcrd`
    s: ShiftOp,
    t: ShiftOp,
    /// `u a + v b = 0` with `u a` of minimal degree
    u: ShiftOp,
    v: ShiftOp,
}

type PolyOp = Vec<Poly>;

/// Primitive polynomial form: `(p, kappa)` with `p = kappa * a`.
fn primitive_form(a: &ShiftOp) -> (PolyOp, RatFunc) {
    let mut den = Poly::one();
    for c in &a.coeffs {
        if !c.den().is_one() {
            den = lcm(&den, c.den());
        }
    }
    let mut p: PolyOp = a
        .coeffs
        .iter()
        .map(|c| if den.is_one() { c.num().clone() } else { c.num() * &den.div_exact(c.den()).expect("lcm") })
        .collect();
    let g = content(&p);
    if !g.is_one() {
        p = p.iter().map(|c| c.div_exact(&g).expect("content divides")).collect();
    }
    let kappa = RatFunc::new(den, g).expect("nonzero content");
    (p, kappa)
}

fn content(p: &[Poly]) -> Poly {
    let mut sorted: Vec<&Poly> = p.iter().filter(|c| !c.is_zero()).collect();
    sorted.sort_by_key(|c| c.len());
    let g = gcd_many(sorted);
    // keep the sign of the leading coefficient positive
    let lead = p.iter().rev().find(|c| !c.is_zero()).map(|c| c.lead_coeff()).unwrap_or_default();
    if lead < BigInt::from(0) {
        -g
    } else {
        g
    }
}

fn trim(p: &mut PolyOp) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo right division `c a = q b + r` with polynomial multiplier `c`.
fn pseudo_divmod(a: &PolyOp, b: &PolyOp) -> (Poly, PolyOp, PolyOp) {
    let db = b.len() - 1;
    let mut r = a.clone();
    let mut q: PolyOp = vec![Poly::zero(); a.len().saturating_sub(db)];
    let mut c = Poly::one();
    let mut shifted: Vec<Option<PolyOp>> = vec![None; q.len()];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let k = dr - db;
        let sb = shifted[k].get_or_insert_with(|| b.iter().map(|x| x.shift(N, k as i64)).collect());
        let lbk = &sb[db];
        let lr = r[dr].clone();
        let g = gcd(&lr, lbk);
        let am = lbk.div_exact(&g).expect("gcd divides");
        let bm = lr.div_exact(&g).expect("gcd divides");
        if !am.is_one() {
            for x in r.iter_mut() {
                *x = &*x * &am;
            }
            for x in q.iter_mut() {
                *x = &*x * &am;
            }
            c = &c * &am;
        }
        for (j, bj) in sb.iter().enumerate() {
            r[j + k] = &r[j + k] - &(&bm * bj);
        }
        debug_assert!(r[dr].is_zero());
        q[k] = &q[k] + &bm;
        trim(&mut r);
    }
    (c, q, r)
}

fn euclid(a: &ShiftOp, b: &ShiftOp, track: bool) -> Euclid {
    let (mut r0, k0) = primitive_form(a);
    let (mut r1, k1) = primitive_form(b);
    let mut s0 = ShiftOp::scalar(k0);
    let mut t0 = ShiftOp::zero();
    let mut s1 = ShiftOp::zero();
    let mut t1 = ShiftOp::scalar(k1);
    loop {
        let (c, q, r) = pseudo_divmod(&r0, &r1);
        let (s2, t2) = if track {
            let cq = RatFunc::from_poly(c);
            let qs = ShiftOp::from_polys(&q);
            (&s0.scale_left(&cq) - &(&qs * &s1), &t0.scale_left(&cq) - &(&qs * &t1))
        } else {
            (ShiftOp::zero(), ShiftOp::zero())
        };
        if r.is_empty() {
            let g = ShiftOp::from_polys(&r1);
            let inv = g.lc().inv().expect("nonzero");
            return Euclid {
                gcrd: g.scale_left(&inv),
                s: s1.scale_left(&inv),
                t: t1.scale_left(&inv),
                u: s2,
                v: t2,
            };
        }
        let g = content(&r);
        let r: PolyOp = r.iter().map(|x| x.div_exact(&g).expect("content divides")).collect();
        let (s2, t2) = if track && !g.is_one() {
            let gi = RatFunc::new(Poly::one(), g).expect("nonzero");
            (s2.scale_left(&gi), t2.scale_left(&gi))
        } else {
            (s2, t2)
        };
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
}

impl Add for &ShiftOp {
    type Output = ShiftOp;
    fn add(self, o: &ShiftOp) -> ShiftOp {
        let n = self.coeffs.len().max(o.coeffs.len());
        ShiftOp::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &ShiftOp {
    type Output = ShiftOp;
    fn sub(self, o: &ShiftOp) -> ShiftOp {
        let n = self.coeffs.len().max(o.coeffs.len());
        ShiftOp::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &ShiftOp {
    type Output = ShiftOp;
    fn neg(self) -> ShiftOp {
        ShiftOp { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &ShiftOp {
    type Output = ShiftOp;
    fn mul(self, o: &ShiftOp) -> ShiftOp {
        if self.is_zero() || o.is_zero() {
            return ShiftOp::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * &b.shift(N, i as i64));
            }
        }
        ShiftOp::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ShiftOp {
            type Output = ShiftOp;
            fn $m(self, o: ShiftOp) -> ShiftOp {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ShiftOp {
    type Output = ShiftOp;
    fn neg(self) -> ShiftOp {
        -&self
    }
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*S")?,
                _ => write!(f, "({c})*S^{j}")?,
            }
        }
        Ok(())
    }
}
