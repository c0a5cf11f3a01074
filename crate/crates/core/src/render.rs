//! Text rendering of polynomials and recurrences.

use num_traits::{One, Signed};

use crate::scalar::poly::{display_cmp, Poly};
use crate::scalar::symbols::{display_order, Var};

/// Expanded form, terms by descending degree in `n`, parameters by name.
pub fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let order = display_order();
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|a, b| display_cmp(&b.0, &a.0, &order));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let a = c.abs();
        let mut factors: Vec<String> = Vec::new();
        for &slot in &order {
            let e = m.0[slot];
            if e == 0 {
                continue;
            }
            let name = Var::from_index(slot).name();
            factors.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        if factors.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

/// `k*(p)` with the integer content `k` and the sign pulled out; returns
/// the sign separately.
fn factored(p: &Poly) -> (bool, String) {
    let neg = p.display_sign() < 0;
    let content = p.int_content();
    let rest = p.div_int(&if neg { -content.clone() } else { content.clone() });
    if rest.is_one() {
        return (neg, content.to_string());
    }
    let body = poly_to_string(&rest);
    let body = if rest.len() > 1 { format!("({body})") } else { body };
    if content.is_one() {
        (neg, body)
    } else {
        (neg, format!("{content}*{body}"))
    }
}

fn index(name: &str, k: usize) -> String {
    if k == 0 {
        format!("{name}(n)")
    } else {
        format!("{name}(n+{k})")
    }
}

/// `c_k*u(n+k) + ... + c_0*u(n) = 0`, highest shift first.
pub fn recurrence_text(coeffs: &[Poly], name: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, s) = factored(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if s == "1" {
            out.push_str(&index(name, k));
        } else {
            out.push_str(&format!("{s}*{}", index(name, k)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = 0");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::N;

    #[test]
    fn recurrence_lines() {
        let n = Poly::var(N);
        let r = [Poly::int(-1), &Poly::int(2) * &(&n + &Poly::one())];
        assert_eq!(recurrence_text(&r, "u"), "2*(n+1)*u(n+1) - u(n) = 0");
        let r = [-(&(&Poly::int(2) * &n) + &Poly::one()), Poly::zero(), &(&Poly::int(2) * &n) + &Poly::int(3)];
        assert_eq!(recurrence_text(&r, "c"), "(2*n+3)*c(n+2) - (2*n+1)*c(n) = 0");
        assert_eq!(recurrence_text(&[n.clone()], "u"), "n*u(n) = 0");
    }
}
