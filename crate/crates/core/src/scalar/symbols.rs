//! Process-wide symbol table.
//!
//! Every polynomial in the crate lives in the same variable space: slot 0 is
//! the recurrence index `n`, slot 1 is the differential variable `x`, and the
//! remaining slots are parameters interned on first use. Parameters are
//! treated as algebraically independent transcendentals.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Maximum number of variables, `n` and `x` included.
pub const MAX_VARS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u8);

/// The recurrence index.
pub const N: Var = Var(0);
/// The variable of the differential operator.
pub const X: Var = Var(1);

fn table() -> &'static RwLock<Vec<String>> {
    static TABLE: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec!["n".to_string(), "x".to_string()]))
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Var {
    /// Interns a parameter name. `n`, `x` and `Dx` are reserved.
    pub fn param(name: &str) -> Result<Var> {
        if matches!(name, "n" | "x" | "Dx") {
            return Err(Error::ReservedSymbol(name.to_string()));
        }
        if !valid_identifier(name) {
            return Err(Error::InvalidSymbol(name.to_string()));
        }
        if let Some(v) = Var::lookup(name) {
            return Ok(v);
        }
        let mut t = table().write().unwrap_or_else(|e| e.into_inner());
        if let Some(i) = t.iter().position(|s| s == name) {
            return Ok(Var(i as u8));
        }
        if t.len() >= MAX_VARS {
            return Err(Error::TooManySymbols(MAX_VARS - 2));
        }
        t.push(name.to_string());
        Ok(Var((t.len() - 1) as u8))
    }

    pub fn lookup(name: &str) -> Option<Var> {
        let t = table().read().unwrap_or_else(|e| e.into_inner());
        t.iter().position(|s| s == name).map(|i| Var(i as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Var {
        debug_assert!(i < MAX_VARS);
        Var(i as u8)
    }

    pub fn name(self) -> String {
        let t = table().read().unwrap_or_else(|e| e.into_inner());
        t[self.index()].clone()
    }

    pub fn is_param(self) -> bool {
        self.0 >= 2
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Variable slots in display order: `n`, `x`, then parameters by name.
///
/// Rendering and sign normalisation use this order so that output does not
/// depend on the order in which symbols happened to be interned.
pub fn display_order() -> Vec<usize> {
    let t = table().read().unwrap_or_else(|e| e.into_inner());
    let mut params: Vec<usize> = (2..t.len()).collect();
    params.sort_by(|&a, &b| t[a].cmp(&t[b]));
    let mut order = vec![0, 1];
    order.extend(params);
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_names_rejected() {
        assert!(Var::param("n").is_err());
        assert!(Var::param("x").is_err());
        assert!(Var::param("Dx").is_err());
        assert!(Var::param("2a").is_err());
    }

    #[test]
    fn interning_is_stable() {
        let a = Var::param("sym_test_a").unwrap();
        let b = Var::param("sym_test_a").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.name(), "sym_test_a");
        assert!(a.is_param());
    }
}
