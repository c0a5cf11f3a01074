//! Multivariate gcd over Z.
//!
//! Recursive content/primitive-part decomposition with a subresultant PRS in
//! the chosen main variable. A modular image (one random evaluation point,
//! prime 2^61-1) certifies coprimality cheaply, which is the common case.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use super::poly::Poly;
use super::symbols::{Var, MAX_VARS};

const P: u64 = (1u64 << 61) - 1;

thread_local! {
    static RNG: RefCell<SmallRng> = RefCell::new(SmallRng::seed_from_u64(0x5eed_0f_0a11));
}

/// Gcd with nonnegative integer content and positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ca = a.int_content();
    let cb = b.int_content();
    let gi = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Poly::constant(gi);
    }
    let pa = normalize_sign(a.div_int(&ca));
    let pb = normalize_sign(b.div_int(&cb));
    gcd_prim(&pa, &pb).scale(&gi)
}

pub fn gcd_many<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Poly {
    let mut g = Poly::zero();
    for p in polys {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    let q = a.div_exact(&g).expect("gcd divides");
    normalize_sign(&q * b)
}

pub fn normalize_sign(p: Poly) -> Poly {
    if p.lead_coeff().is_negative() {
        -p
    } else {
        p
    }
}

fn primitive(p: &Poly) -> Poly {
    let c = p.int_content();
    normalize_sign(p.div_int(&c))
}

/// Gcd of the coefficients of `p` with respect to `v`.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let mut coeffs: Vec<Poly> = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    gcd_many(coeffs.iter())
}

fn gcd_prim(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let ma = a.var_mask();
    let mb = b.var_mask();
    if ma != mb {
        let only = ma ^ mb;
        let v = Var::from_index(only.trailing_zeros() as usize);
        let (with, without) = if ma & (1 << v.index()) != 0 { (a, b) } else { (b, a) };
        let mut coeffs: Vec<Poly> = with.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
        coeffs.sort_by_key(|c| c.len());
        let mut g = without.clone();
        for c in &coeffs {
            g = primitive(&gcd(c, &g));
            if g.is_constant() {
                return Poly::one();
            }
        }
        return g;
    }

    let v = (0..MAX_VARS)
        .filter(|i| ma & (1 << i) != 0)
        .map(Var::from_index)
        .min_by_key(|&v| (a.degree(v).max(b.degree(v)), a.degree(v) + b.degree(v)))
        .expect("non-constant");

    let single_var = ma.count_ones() == 1;
    let (ca, cb) = if single_var {
        (Poly::one(), Poly::one())
    } else {
        (content_in(a, v), content_in(b, v))
    };
    let cg = if single_var { Poly::one() } else { primitive(&gcd(&ca, &cb)) };
    let pa = if ca.is_one() { a.clone() } else { a.div_exact(&ca).expect("content divides") };
    let pb = if cb.is_one() { b.clone() } else { b.div_exact(&cb).expect("content divides") };
    if pa.degree(v) == 0 || pb.degree(v) == 0 {
        return cg;
    }

    match modular_gcd_degree(&pa, &pb, v) {
        Some(0) => return cg,
        Some(d) => {
            if d == pb.degree(v) as usize && pa.degree(v) >= pb.degree(v) && pa.div_exact(&pb).is_some() {
                return normalize_sign(&cg * &pb);
            }
            if d == pa.degree(v) as usize && pb.div_exact(&pa).is_some() {
                return normalize_sign(&cg * &pa);
            }
        }
        None => {}
    }

    let g = subresultant(&pa, &pb, v);
    if g.degree(v) == 0 {
        return cg;
    }
    let gc = content_in(&g, v);
    let g = primitive(&g.div_exact(&gc).expect("content divides"));
    normalize_sign(&cg * &g)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = c.mod_floor(&p);
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn eval_mod(p: &Poly, v: Var, point: &[u64; MAX_VARS]) -> Vec<u64> {
    let mut out = vec![0u64; p.degree(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = reduce(c);
        for (i, &e) in m.0.iter().enumerate() {
            if i != v.index() && e > 0 {
                t = mulmod(t, powmod(point[i], e as u64));
            }
        }
        let k = m.get(v) as usize;
        out[k] = addmod(out[k], t);
    }
    out
}

fn trim_mod(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 && b[0] == 0 {
            return a.len() - 1;
        }
        if b.len() == 1 {
            return 0;
        }
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let q = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[j + shift] = submod(a[j + shift], mulmod(q, bj));
            }
            a.pop();
            trim_mod(&mut a);
            if a.is_empty() {
                a.push(0);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Degree in `v` of the gcd of a modular image, an upper bound for the true
/// degree. `None` if no good evaluation point was found.
fn modular_gcd_degree(a: &Poly, b: &Poly, v: Var) -> Option<usize> {
    for _ in 0..3 {
        let mut point = [0u64; MAX_VARS];
        RNG.with(|r| {
            let mut r = r.borrow_mut();
            for slot in point.iter_mut() {
                *slot = r.gen_range(2..P - 1);
            }
        });
        let ea = eval_mod(a, v, &point);
        let eb = eval_mod(b, v, &point);
        if *ea.last().unwrap() == 0 || *eb.last().unwrap() == 0 {
            continue;
        }
        return Some(gcd_degree_mod(ea, eb));
    }
    None
}

type Dense = Vec<Poly>;

fn trim(p: &mut Dense) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn is_zero_dense(p: &Dense) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = b.len() - 1;
    let lb = &b[db];
    let e = a.len() - b.len() + 1;
    let mut r = a.clone();
    let mut steps = 0;
    while r.len() >= b.len() && !is_zero_dense(&r) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let k = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[j + k] = &r[j + k] - &(&lr * bj);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(Poly::zero());
        }
        trim(&mut r);
        steps += 1;
    }
    if steps < e {
        let f = lb.pow((e - steps) as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Last nonzero subresultant remainder of `a` and `b` viewed in `v`.
fn subresultant(a: &Poly, b: &Poly, v: Var) -> Poly {
    let mut f1: Dense = a.coeffs_in(v);
    let mut f2: Dense = b.coeffs_in(v);
    if f1.len() < f2.len() {
        std::mem::swap(&mut f1, &mut f2);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = (f1.len() - f2.len()) as u32;
        let r = prem(&f1, &f2);
        if is_zero_dense(&r) {
            return Poly::from_coeffs_in(v, &f2);
        }
        if r.len() == 1 {
            return Poly::one();
        }
        let div = &g * &h.pow(d);
        let r: Dense = r.iter().map(|c| c.div_exact(&div).expect("subresultant division")).collect();
        f1 = f2;
        f2 = r;
        g = f1.last().unwrap().clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant h"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::symbols::{N, X};

    fn v(name: &str) -> Poly {
        Poly::var(Var::param(name).unwrap())
    }

    #[test]
    fn univariate_gcd() {
        let n = Poly::var(N);
        let a = &(&n - &Poly::int(1)) * &(&n + &Poly::int(2));
        let b = &(&n - &Poly::int(1)) * &(&n + &Poly::int(5));
        assert_eq!(gcd(&a, &b), &n - &Poly::int(1));
        assert_eq!(gcd(&a.scale(&6.into()), &b.scale(&4.into())), (&n - &Poly::int(1)).scale(&2.into()));
    }

    #[test]
    fn multivariate_gcd() {
        let a_ = v("gcd_a");
        let b_ = v("gcd_b");
        let n = Poly::var(N);
        let common = &(&n + &a_) * &(&b_ - &Poly::int(3));
        let p = &common * &(&(&n * &n) + &b_);
        let q = &common * &(&a_ * &n - &Poly::one());
        let g = gcd(&p, &q);
        assert_eq!(g, normalize_sign(common.clone()));
        let x = Poly::var(X);
        assert!(gcd(&(&x + &a_), &(&x + &b_)).is_one());
    }

    #[test]
    fn gcd_with_variable_in_one_argument_only() {
        let a_ = v("gcd_c");
        let n = Poly::var(N);
        let p = &(&n + &Poly::one()) * &(&a_ * &n + &Poly::one());
        let q = &n + &Poly::one();
        assert_eq!(gcd(&p, &q), q);
        let r = &(&(&n + &Poly::one()) * &a_) + &(&n + &Poly::one());
        assert_eq!(gcd(&r, &(&(&n + &Poly::one()) * &(&n - &Poly::one()))), q);
    }

    #[test]
    fn subresultant_path() {
        // a common factor that the modular test cannot certify away
        let a_ = v("gcd_d");
        let n = Poly::var(N);
        let f = &(&n * &n) + &(&a_ * &n) + &Poly::one();
        let p = &(&f * &f) * &(&n - &a_);
        let q = &f * &(&(&n * &n * &n) + &a_);
        assert_eq!(gcd(&p, &q), normalize_sign(f));
    }
}
