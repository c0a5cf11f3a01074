#![allow(dead_code)]

use orthorec_core::diffop::{DiffOp, XPoly};
use orthorec_core::parse::parse_xpoly;
use orthorec_core::scalar::{Poly, RatFunc, N, X};
use rand::rngs::SmallRng;
use rand::Rng;

/// Parses a polynomial in `n` and parameters. `n` is read through the
/// `x` slot of the operator parser and moved back afterwards.
pub fn np(s: &str) -> Poly {
    let mut out = String::new();
    let b: Vec<char> = s.chars().collect();
    for (i, &c) in b.iter().enumerate() {
        let word = |j: Option<usize>| j.and_then(|j| b.get(j)).is_some_and(|d| d.is_ascii_alphanumeric() || *d == '_');
        if c == 'n' && !word(i.checked_sub(1)) && !word(Some(i + 1)) {
            out.push('x');
        } else {
            out.push(c);
        }
    }
    let r = parse_xpoly(&out).expect("expected polynomial").to_ratfunc();
    assert!(r.den().is_constant(), "integer polynomial expected");
    let cs = r.num().coeffs_in(X);
    Poly::from_coeffs_in(N, &cs)
}

pub fn nr(s: &str) -> RatFunc {
    RatFunc::from_poly(np(s))
}

pub fn rand_xpoly(rng: &mut SmallRng, deg: usize, bound: i64) -> XPoly {
    let d = rng.gen_range(0..=deg);
    XPoly::from_ints(&(0..=d).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

pub fn nonzero_xpoly(rng: &mut SmallRng, deg: usize, bound: i64) -> XPoly {
    loop {
        let p = rand_xpoly(rng, deg, bound);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random operator of order 1..=3 with coefficients of degree <= 3. When
/// `through` is given the leading coefficient is a multiple of it.
pub fn rand_op(rng: &mut SmallRng, through: Option<&XPoly>) -> DiffOp {
    let r = rng.gen_range(1..=3);
    let mut cs: Vec<XPoly> = (0..r).map(|_| rand_xpoly(rng, 3, 3)).collect();
    let lead = match through {
        Some(s) => {
            let room = 3 - s.degree().unwrap_or(0);
            s * &nonzero_xpoly(rng, room, 3)
        }
        None => nonzero_xpoly(rng, 3, 3),
    };
    cs.push(lead);
    DiffOp::new(cs)
}
