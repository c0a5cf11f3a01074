//! Exact scalars: integer polynomials in `n`, `x` and the parameters, and
//! their reduced quotients.

pub mod gcd;
pub mod npoly;
pub mod poly;
pub mod ratfunc;
pub mod symbols;

pub use gcd::{gcd, gcd_many, lcm};
pub use npoly::{is_zn, nat_part, nonneg_integer_roots, zn_split};
pub use poly::{Mono, Poly};
pub use ratfunc::RatFunc;
pub use symbols::{Var, N, X};
