//! Linear differential operators with polynomial coefficients, K[x]<d/dx>.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{gcd_many, lcm, Poly, RatFunc, X};

/// Dense polynomial in `x` over K: `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct XPoly {
    coeffs: Vec<RatFunc>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<RatFunc>) -> XPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> XPoly {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> XPoly {
        XPoly::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> XPoly {
        XPoly::new(vec![c])
    }

    pub fn x() -> XPoly {
        XPoly::new(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(c: &[i64]) -> XPoly {
        XPoly::new(c.iter().map(|&k| RatFunc::int(k)).collect())
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> RatFunc {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> XPoly {
        XPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &RatFunc::int(i as i64)).collect())
    }

    pub fn scale(&self, c: &RatFunc) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> XPoly {
        let mut r = XPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn divmod(&self, b: &XPoly) -> Result<(XPoly, XPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv = b.lc().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![RatFunc::zero(); r.len().saturating_sub(db)];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let t = r.last().unwrap() * &inv;
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[j + k] = &r[j + k] - &(&t * bj);
            }
            r.pop();
            q[k] = t;
        }
        Ok((XPoly::new(q), XPoly::new(r)))
    }

    pub fn div_exact(&self, b: &XPoly) -> Option<XPoly> {
        let (q, r) = self.divmod(b).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd over K.
    pub fn gcd(&self, b: &XPoly) -> XPoly {
        let (mut a, mut b) = (self.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divmod(&b).expect("nonzero").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.lc().inv().expect("nonzero");
        a.scale(&inv)
    }

    /// The element of K(x) as a single rational function.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &RatFunc::var(X)) + c;
        }
        acc
    }

    /// Reads a polynomial in `x`; fails if `x` occurs in the denominator.
    pub fn from_ratfunc(r: &RatFunc) -> Result<XPoly> {
        if r.den().contains(X) {
            return Err(Error::Precondition("not a polynomial in x".into()));
        }
        let den = RatFunc::from_poly(r.den().clone());
        Ok(XPoly::new(r.num().coeffs_in(X).into_iter().map(|c| &RatFunc::from_poly(c) / &den).collect()))
    }

    pub fn eval(&self, x: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, o: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, o: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, o: &XPoly) -> XPoly {
        if self.is_zero() || o.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::new(out)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfunc())
    }
}

/// `sum_i p_i(x) D^i`, coefficients on the left.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DiffOp {
    coeffs: Vec<XPoly>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<XPoly>) -> DiffOp {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> DiffOp {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn scalar(p: XPoly) -> DiffOp {
        DiffOp::new(vec![p])
    }

    pub fn d() -> DiffOp {
        DiffOp::new(vec![XPoly::zero(), XPoly::one()])
    }

    pub fn x() -> DiffOp {
        DiffOp::scalar(XPoly::x())
    }

    pub fn coeffs(&self) -> &[XPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> XPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> XPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// `D^i q` written with coefficients on the left.
    fn d_pow_times(i: usize, q: &XPoly) -> DiffOp {
        let mut coeffs = vec![XPoly::zero(); i + 1];
        let mut dq = q.clone();
        let mut binom = BigInt::one();
        for k in 0..=i {
            coeffs[i - k] = dq.scale(&RatFunc::from_poly(Poly::constant(binom.clone())));
            dq = dq.derivative();
            binom = binom * BigInt::from(i - k) / BigInt::from(k + 1);
        }
        DiffOp::new(coeffs)
    }

    /// Coefficients `q_i` with `self = sum_i D^i q_i`.
    pub fn left_form(&self) -> Vec<XPoly> {
        let mut rem = self.clone();
        let mut q = vec![XPoly::zero(); self.coeffs.len()];
        for i in (0..self.coeffs.len()).rev() {
            let qi = rem.coeff(i);
            if !qi.is_zero() {
                rem = &rem - &DiffOp::d_pow_times(i, &qi);
            }
            q[i] = qi;
        }
        debug_assert!(rem.is_zero());
        q
    }

    /// Coefficients `q_k` with `self = sum_k q_k (s D)^k`; requires `s^k` to
    /// divide the coefficient of `D^k`.
    pub fn theta_form(&self, s: &XPoly) -> Result<Vec<XPoly>> {
        let theta = &DiffOp::scalar(s.clone()) * &DiffOp::d();
        let mut powers = vec![DiffOp::scalar(XPoly::one())];
        for k in 1..self.coeffs.len() {
            let next = &powers[k - 1] * &theta;
            powers.push(next);
        }
        let mut rem = self.clone();
        let mut q = vec![XPoly::zero(); self.coeffs.len()];
        for k in (0..self.coeffs.len()).rev() {
            let c = rem.coeff(k);
            if c.is_zero() {
                continue;
            }
            let sk = s.pow(k as u32);
            let qk = c.div_exact(&sk).ok_or_else(|| {
                Error::Hypothesis(format!("({}) ^ {k} does not divide the coefficient of Dx^{k}", s))
            })?;
            rem = &rem - &(&DiffOp::scalar(qk.clone()) * &powers[k]);
            q[k] = qk;
        }
        debug_assert!(rem.is_zero());
        Ok(q)
    }

    /// `sum_i p_i f^(i)`.
    pub fn apply(&self, f: &XPoly) -> XPoly {
        let mut acc = XPoly::zero();
        let mut df = f.clone();
        for p in &self.coeffs {
            acc = &acc + &(p * &df);
            df = df.derivative();
        }
        acc
    }

    /// Operator whose solutions span the products of solutions of `self` and
    /// `o`: coefficients polynomial in `x`, primitive, sign normalised.
    pub fn symmetric_product(&self, o: &DiffOp) -> Result<DiffOp> {
        let (r1, r2) = (self.order(), o.order());
        if r1 == 0 || r2 == 0 {
            return Err(Error::Precondition("symmetric product needs positive orders".into()));
        }
        let red = |op: &DiffOp| -> Vec<RatFunc> {
            let lc = op.lc().to_ratfunc();
            (0..op.order()).map(|i| &op.coeff(i).to_ratfunc() / &lc).collect()
        };
        let (a1, a2) = (red(self), red(o));
        let dim = r1 * r2;
        let derive = |v: &[RatFunc]| -> Vec<RatFunc> {
            let mut out: Vec<RatFunc> = v.iter().map(|c| c.derivative(X)).collect();
            for a in 0..r1 {
                for b in 0..r2 {
                    let c = &v[a * r2 + b];
                    if c.is_zero() {
                        continue;
                    }
                    // y1^(a+1) y2^(b)
                    if a + 1 < r1 {
                        out[(a + 1) * r2 + b] = &out[(a + 1) * r2 + b] + c;
                    } else {
                        for (i, ai) in a1.iter().enumerate() {
                            out[i * r2 + b] = &out[i * r2 + b] - &(c * ai);
                        }
                    }
                    // y1^(a) y2^(b+1)
                    if b + 1 < r2 {
                        out[a * r2 + b + 1] = &out[a * r2 + b + 1] + c;
                    } else {
                        for (j, aj) in a2.iter().enumerate() {
                            out[a * r2 + j] = &out[a * r2 + j] - &(c * aj);
                        }
                    }
                }
            }
            out
        };
        // echelon rows: (pivot, vector, combination of v_0..v_k)
        let mut rows: Vec<(usize, Vec<RatFunc>, Vec<RatFunc>)> = Vec::new();
        let mut v = vec![RatFunc::zero(); dim];
        v[0] = RatFunc::one();
        for k in 0..=dim {
            let mut w = v.clone();
            let mut comb = vec![RatFunc::zero(); k + 1];
            comb[k] = RatFunc::one();
            for (p, rv, rc) in &rows {
                if w[*p].is_zero() {
                    continue;
                }
                let f = &w[*p] / &rv[*p];
                for i in 0..dim {
                    if !rv[i].is_zero() {
                        w[i] = &w[i] - &(&f * &rv[i]);
                    }
                }
                for (i, c) in rc.iter().enumerate() {
                    comb[i] = &comb[i] - &(&f * c);
                }
            }
            match w.iter().position(|c| !c.is_zero()) {
                Some(p) => rows.push((p, w, comb)),
                None => return normalize_op(&comb),
            }
            v = derive(&v);
        }
        Err(Error::Precondition("no relation found in symmetric product".into()))
    }
}

/// Clears denominators of `sum c_i D^i` and removes the content.
fn normalize_op(c: &[RatFunc]) -> Result<DiffOp> {
    let mut den = Poly::one();
    for x in c {
        den = lcm(&den, x.den());
    }
    let polys: Vec<Poly> = c.iter().map(|x| x.num() * &den.div_exact(x.den()).expect("lcm")).collect();
    let mut g = gcd_many(polys.iter().filter(|p| !p.is_zero()));
    let lead = polys.iter().rev().find(|p| !p.is_zero()).ok_or(Error::ZeroOperator)?;
    if lead.div_exact(&g).expect("content").display_sign() < 0 {
        g = -g;
    }
    let coeffs = polys
        .iter()
        .map(|p| XPoly::from_ratfunc(&RatFunc::from_poly(p.div_exact(&g).expect("content"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiffOp::new(coeffs))
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, o: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(o.coeffs.len());
        DiffOp::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, o: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(o.coeffs.len());
        DiffOp::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, o: &DiffOp) -> DiffOp {
        let mut acc = DiffOp::zero();
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in o.coeffs.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                // p D^i q D^j
                let inner = DiffOp::d_pow_times(i, q);
                let mut coeffs = vec![XPoly::zero(); j];
                coeffs.extend(inner.coeffs.iter().map(|c| p * c));
                acc = &acc + &DiffOp::new(coeffs);
            }
        }
        acc
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*Dx")?,
                _ => write!(f, "({c})*Dx^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reads an integer polynomial in the shared variable space as a polynomial in `x`.
pub fn xpoly_from_poly(p: &Poly) -> XPoly {
    XPoly::new(p.coeffs_in(X).into_iter().map(RatFunc::from_poly).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    #[test]
    fn leibniz_rule() {
        // D x = x D + 1
        let dx = &DiffOp::d() * &DiffOp::x();
        assert_eq!(dx, DiffOp::new(vec![xp(&[1]), xp(&[0, 1])]));
    }

    #[test]
    fn left_form_roundtrip() {
        let l = DiffOp::new(vec![xp(&[-2]), xp(&[0, 1]), xp(&[1, 0, -1])]);
        let q = l.left_form();
        let mut back = DiffOp::zero();
        for (i, qi) in q.iter().enumerate() {
            back = &back + &DiffOp::d_pow_times(i, qi);
        }
        assert_eq!(back, l);
    }

    #[test]
    fn theta_form_of_nested_operator() {
        // (1-x^2)((1-x^2) D^2 - x D) = theta^2 + x theta with sigma = 1-x^2
        let s = xp(&[1, 0, -1]);
        let l = &DiffOp::scalar(s.clone()) * &DiffOp::new(vec![xp(&[0]), xp(&[0, -1]), s.clone()]);
        let q = l.theta_form(&s).unwrap();
        assert_eq!(q, vec![XPoly::zero(), xp(&[0, 1]), xp(&[1])]);
        assert!(DiffOp::new(vec![xp(&[0]), xp(&[0, 1])]).theta_form(&s).is_err());
    }

    #[test]
    fn symmetric_product_of_exponentials() {
        // y' = y and y' = 2y: product satisfies y' = 3y
        let a = DiffOp::new(vec![xp(&[-1]), xp(&[1])]);
        let b = DiffOp::new(vec![xp(&[-2]), xp(&[1])]);
        assert_eq!(a.symmetric_product(&b).unwrap(), DiffOp::new(vec![xp(&[-3]), xp(&[1])]));
    }

    #[test]
    fn gcd_over_k() {
        let s = xp(&[1, 0, -1]);
        assert_eq!(xp(&[1, -1]).gcd(&s), xp(&[-1, 1]));
        assert_eq!(xp(&[0, 1]).gcd(&s), xp(&[1]));
    }
}
