//! Polynomials in `n` over the parameter field, seen through their roots at
//! nonnegative integers.
//!
//! Parameters are transcendental, so `p(k) = 0` must hold identically in
//! them. Grouping the terms of `p` by parameter monomial gives polynomials in
//! `Q[n]` whose gcd carries every such root with its multiplicity.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::gcd;
use super::poly::{Mono, Poly};
use super::ratfunc::RatFunc;
use super::symbols::N;

/// Largest candidate examined by the linear root scan.
const SCAN_LIMIT: u64 = 2_000_000;

/// Roots of `p` in `{0, 1, 2, ...}` with multiplicities, sorted ascending.
pub fn nonneg_integer_roots(p: &Poly) -> Vec<(u64, u32)> {
    if p.is_zero() || !p.contains(N) {
        return Vec::new();
    }
    let g = integer_part(p);
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); g.degree(N) as usize + 1];
    for (m, c) in g.terms() {
        coeffs[m.get(N) as usize] = c.clone();
    }
    integer_roots_dense(coeffs)
}

/// Gcd over Z[n] of the coefficients of `p` with respect to the parameters.
fn integer_part(p: &Poly) -> Poly {
    let mut groups: HashMap<Mono, Vec<(Mono, BigInt)>> = HashMap::new();
    for (m, c) in p.terms() {
        let key = m.with(N, 0);
        groups.entry(key).or_default().push((Mono::var(N, m.get(N)), c.clone()));
    }
    let mut parts: Vec<Poly> = groups.into_values().map(Poly::from_terms).collect();
    parts.sort_by_key(|q| (q.len(), q.degree(N)));
    let mut g = Poly::zero();
    for q in &parts {
        g = gcd(&g, q);
        if !g.contains(N) {
            return Poly::one();
        }
    }
    g
}

fn eval_dense(c: &[BigInt], k: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = acc * k + a;
    }
    acc
}

/// Divides by `n - k`, assuming `k` is a root.
fn deflate(c: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    let d = c.len() - 1;
    let mut out = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for i in (1..=d).rev() {
        carry = &c[i] + carry * k;
        out[i - 1] = carry.clone();
    }
    out
}

fn integer_roots_dense(mut c: Vec<BigInt>) -> Vec<(u64, u32)> {
    let mut roots = Vec::new();
    let zeros = c.iter().take_while(|a| a.is_zero()).count();
    if zeros > 0 {
        roots.push((0, zeros as u32));
        c.drain(..zeros);
    }
    if c.len() <= 1 {
        return roots;
    }
    let c0 = c[0].abs();
    let lead = c.last().unwrap().abs();
    // Cauchy bound for integer roots
    let bound = c[..c.len() - 1].iter().map(|a| a.abs()).max().unwrap_or_default() / &lead + BigInt::one();
    let limit = bound.min(c0.clone());
    let candidates: Vec<BigInt> = match limit.to_u64() {
        Some(l) if l <= SCAN_LIMIT => (1..=l).map(BigInt::from).filter(|k| (&c0 % k).is_zero()).collect(),
        _ => padic_candidates(&c, &limit),
    };
    for k in candidates {
        let mut mult = 0u32;
        while c.len() > 1 && eval_dense(&c, &k).is_zero() {
            c = deflate(&c, &k);
            mult += 1;
        }
        if mult > 0 {
            roots.push((k.to_u64().expect("root fits in u64"), mult));
        }
        if c.len() <= 1 {
            break;
        }
    }
    roots
}

fn dense_to_poly(c: &[BigInt]) -> Poly {
    Poly::from_terms(c.iter().enumerate().map(|(i, a)| (Mono::var(N, i as u16), a.clone())).collect())
}

fn poly_to_dense(p: &Poly) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); p.degree(N) as usize + 1];
    for (m, a) in p.terms() {
        c[m.get(N) as usize] = a.clone();
    }
    c
}

fn derivative_dense(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect()
}

fn eval_mod(c: &[BigInt], k: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = (acc * k + a) % m;
    }
    ((acc % m) + m) % m
}

fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| ((e.x % m) + m) % m)
}

/// Candidates in `[1, limit]` for integer roots, found as lifts of the
/// simple roots of the squarefree part modulo a small prime.
fn padic_candidates(c: &[BigInt], limit: &BigInt) -> Vec<BigInt> {
    let f = dense_to_poly(c);
    let g = gcd(&f, &f.derivative(N));
    let sqf = poly_to_dense(&f.div_exact(&g).expect("gcd divides"));
    let d = derivative_dense(&sqf);
    let lead = sqf.last().expect("nonconstant").clone();
    // only primes dividing the discriminant or the leading coefficient are skipped
    for p in (3u32..).filter(|&q| (2..q).take_while(|i| i * i <= q).all(|i| q % i != 0)) {
        let pm = BigInt::from(p);
        if (&lead % &pm).is_zero() {
            continue;
        }
        let small: Vec<BigInt> = (0..p).map(BigInt::from).filter(|r| eval_mod(&sqf, r, &pm).is_zero()).collect();
        if small.iter().any(|r| eval_mod(&d, r, &pm).is_zero()) {
            continue;
        }
        let mut out = Vec::new();
        for r0 in small {
            let (mut r, mut m) = (r0, pm.clone());
            while &m <= limit {
                m = &m * &m;
                let inv = inv_mod(&eval_mod(&d, &r, &m), &m).expect("simple root mod p");
                r = ((&r - eval_mod(&sqf, &r, &m) * inv) % &m + &m) % &m;
            }
            if !r.is_zero() && &r <= limit {
                out.push(r);
            }
        }
        out.sort();
        return out;
    }
    unreachable!("some prime is good")
}

/// `prod (n - k)^m` over the given roots.
pub fn nat_poly(roots: &[(u64, u32)]) -> Poly {
    let mut p = Poly::one();
    for &(k, m) in roots {
        let f = Poly::var(N) - Poly::constant(BigInt::from(k));
        p = &p * &f.pow(m);
    }
    p
}

/// The factor of `p` made of its roots at nonnegative integers.
pub fn nat_part(p: &Poly) -> Poly {
    nat_poly(&nonneg_integer_roots(p))
}

/// Splits `p = unit * nat` with `nat = prod (n - k)^m` and `unit` in Z_N.
pub fn zn_split(p: &Poly) -> (Poly, Poly) {
    let nat = nat_part(p);
    let unit = p.div_exact(&nat).expect("root factors divide");
    (unit, nat)
}

/// True if `p` has no root in the nonnegative integers.
pub fn is_zn(p: &Poly) -> bool {
    !p.is_zero() && nonneg_integer_roots(p).is_empty()
}

/// Lcm of root multiplicities: the smallest `prod (n - k)^m` divisible by
/// both factorisations.
pub fn merge_roots(a: &[(u64, u32)], b: &[(u64, u32)]) -> Vec<(u64, u32)> {
    let mut map: std::collections::BTreeMap<u64, u32> = a.iter().copied().collect();
    for &(k, m) in b {
        let e = map.entry(k).or_insert(0);
        *e = (*e).max(m);
    }
    map.into_iter().collect()
}

/// Nonnegative-integer roots of a denominator, i.e. the poles a rational
/// function in `n` has on the naturals.
pub fn nat_poles(r: &RatFunc) -> Vec<(u64, u32)> {
    nonneg_integer_roots(r.den())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::symbols::Var;

    fn n() -> Poly {
        Poly::var(N)
    }

    #[test]
    fn roots_of_integer_polynomial() {
        // n^2 (n-3)^2 (n+1)(2n-1)
        let p = &(&(&n() * &n()) * &(n() - Poly::int(3)).pow(2)) * &(&(n() + Poly::one()) * &(n().scale(&2.into()) - Poly::one()));
        assert_eq!(nonneg_integer_roots(&p), vec![(0, 2), (3, 2)]);
        let (unit, nat) = zn_split(&p);
        assert_eq!(&unit * &nat, p);
        assert!(is_zn(&unit));
    }

    #[test]
    fn parameters_are_transcendental() {
        let a = Poly::var(Var::param("np_alpha").unwrap());
        // (n - 2)(n + alpha): the root alpha = -n is not identically zero
        let p = &(n() - Poly::int(2)) * &(&n() + &a);
        assert_eq!(nonneg_integer_roots(&p), vec![(2, 1)]);
        assert!(is_zn(&(&n() + &a)));
        assert!(!is_zn(&Poly::zero()));
    }

    #[test]
    fn large_roots_are_lifted() {
        // (n - 5000000)(n + 7)
        let p = &(n() - Poly::int(5_000_000)) * &(n() + Poly::int(7));
        assert_eq!(nonneg_integer_roots(&p), vec![(5_000_000, 1)]);
        // (n - 123456789)^2 (3n + 1) (n^2 + 10^30)
        let big = Poly::constant(BigInt::from(10).pow(30));
        let p = &(&(n() - Poly::int(123_456_789)).pow(2) * &(n().scale(&3.into()) + Poly::one())) * &(&(&n() * &n()) + &big);
        assert_eq!(nonneg_integer_roots(&p), vec![(123_456_789, 2)]);
    }
}
