//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::symbols::{Var, MAX_VARS};

/// Exponent vector, graded-lexicographic order on slot indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    pub fn var(v: Var, e: u16) -> Mono {
        let mut m = Mono::default();
        m.0[v.index()] = e;
        m
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn get(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with(mut self, v: Var, e: u16) -> Mono {
        self.0[v.index()] = e;
        self
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.0[i] += o.0[i];
        }
        r
    }

    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut r = *self;
        for i in 0..MAX_VARS {
            if r.0[i] < o.0[i] {
                return None;
            }
            r.0[i] -= o.0[i];
        }
        Some(r)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mask(&self) -> u16 {
        let mut m = 0u16;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial over Z; terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Poly {
        Poly { terms: vec![(Mono::var(v, 1), BigInt::one())] }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from terms in any order, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, BigInt)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    fn from_map(map: HashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.total()).unwrap_or(0)
    }

    pub fn degree(&self, v: Var) -> u16 {
        self.terms.iter().map(|t| t.0.get(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> u16 {
        self.terms.iter().map(|t| t.0.get(v)).min().unwrap_or(0)
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(&self) -> u16 {
        self.terms.iter().fold(0, |m, t| m | t.0.mask())
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.get(v) > 0)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// Exact division by an integer; panics in debug builds if inexact.
    pub fn div_int(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    debug_assert!((a % c).is_zero());
                    (*m, a / c)
                })
                .collect(),
        }
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            if self.terms.iter().all(|(_, a)| (a % &c).is_zero()) {
                return Some(Poly { terms: self.terms.iter().map(|(m, a)| (*m, a / &c)).collect() });
            }
            return None;
        }
        if d.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (m, a) in &self.terms {
                let q = m.div(dm)?;
                let (qc, r) = a.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((q, qc));
            }
            return Some(Poly { terms: out });
        }
        // cheap degree filter
        let dl = &d.terms[0];
        for i in 0..MAX_VARS {
            let v = Var::from_index(i);
            if d.degree(v) > self.degree(v) {
                return None;
            }
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = rm.div(&dl.0)?;
            let (qc, r) = rc.div_rem(&dl.1);
            if !r.is_zero() {
                return None;
            }
            let sub = d.mul_mono(&qm, &qc);
            rem = &rem - &sub;
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `v`: index `i` holds the coefficient of `v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.get(v) as usize;
            buckets[e].push((m.with(v, 0), c.clone()));
        }
        // all terms of a bucket share the v-exponent, so the order survives
        buckets.into_iter().map(|terms| Poly { terms }).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = *m;
                m2.0[v.index()] += i as u16;
                terms.push((m2, a.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn derivative(&self, v: Var) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.get(v) > 0)
                .map(|(m, c)| (m.with(v, m.get(v) - 1), c * BigInt::from(m.get(v))))
                .collect(),
        )
    }

    /// Substitutes `v -> sign*v + k`.
    pub fn affine(&self, v: Var, negate: bool, k: &BigInt) -> Poly {
        if !self.contains(v) {
            return self.clone();
        }
        if k.is_zero() && !negate {
            return self.clone();
        }
        let maxd = self.degree(v) as usize;
        let mut kp = vec![BigInt::one(); maxd + 1];
        for i in 1..=maxd {
            kp[i] = &kp[i - 1] * k;
        }
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(self.len() * 2);
        for (m, c) in &self.terms {
            let e = m.get(v) as usize;
            let base = m.with(v, 0);
            let mut binom = BigInt::one();
            for i in 0..=e {
                // coefficient of v^i in (sign*v + k)^e
                let mut t = c * &binom * &kp[e - i];
                if negate && i % 2 == 1 {
                    t = -t;
                }
                if !t.is_zero() {
                    *map.entry(base.with(v, i as u16)).or_default() += t;
                }
                binom = binom * BigInt::from(e - i) / BigInt::from(i + 1);
            }
        }
        Poly::from_map(map)
    }

    pub fn shift(&self, v: Var, k: i64) -> Poly {
        self.affine(v, false, &BigInt::from(k))
    }

    /// Substitutes `v -> value`.
    pub fn eval_int(&self, v: Var, value: &BigInt) -> Poly {
        if !self.contains(v) {
            return self.clone();
        }
        let maxd = self.degree(v) as usize;
        let mut pw = vec![BigInt::one(); maxd + 1];
        for i in 1..=maxd {
            pw[i] = &pw[i - 1] * value;
        }
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with(v, 0), c * &pw[m.get(v) as usize]))
                .collect(),
        )
    }

    /// Substitutes `v -> p/q`; returns `(num, q^deg)` with `self(p/q) = num / q^deg`.
    pub fn eval_rational(&self, v: Var, value: &BigRational) -> (Poly, BigInt) {
        let d = self.degree(v) as usize;
        let p = value.numer();
        let q = value.denom();
        let mut pp = vec![BigInt::one(); d + 1];
        let mut qp = vec![BigInt::one(); d + 1];
        for i in 1..=d {
            pp[i] = &pp[i - 1] * p;
            qp[i] = &qp[i - 1] * q;
        }
        let num = Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let e = m.get(v) as usize;
                    (m.with(v, 0), c * &pp[e] * &qp[d - e])
                })
                .collect(),
        );
        (num, qp[d].clone())
    }

    /// Evaluates every variable; `vals[i]` is the value of slot `i`.
    pub fn eval_all(&self, vals: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(vals[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Sign of the leading coefficient in the display order.
    pub fn display_sign(&self) -> i32 {
        match self.display_lead() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    fn display_lead(&self) -> Option<&BigInt> {
        let order = super::symbols::display_order();
        self.terms
            .iter()
            .max_by(|a, b| display_cmp(&a.0, &b.0, &order))
            .map(|t| &t.1)
    }

    pub fn is_sorted_canonical(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0 > w[1].0) && self.terms.iter().all(|t| !t.1.is_zero())
    }
}

/// Display order on monomials: degree in `n` first, then total degree,
/// then lexicographic on the display slot order.
pub fn display_cmp(a: &Mono, b: &Mono, order: &[usize]) -> Ordering {
    a.0[0]
        .cmp(&b.0[0])
        .then_with(|| a.total().cmp(&b.total()))
        .then_with(|| {
            for &i in order {
                let c = a.0[i].cmp(&b.0[i]);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        match a.terms[i].0.cmp(&b.terms[j].0) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (m, c) = &b.terms[j];
                out.push((*m, if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
                if !c.is_zero() {
                    out.push((a.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    for (m, c) in &b.terms[j..] {
        out.push((*m, if negate_b { -c } else { c.clone() }));
    }
    Poly { terms: out }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        merge(self, o, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        merge(self, o, true)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_mono(m, c);
        }
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                *map.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Poly::from_map(map)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$m(&o)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                (&self).$m(o)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
