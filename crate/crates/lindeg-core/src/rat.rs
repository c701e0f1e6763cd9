//! Arbitrary-precision rational scalars.
//!
//! All exact arithmetic in the crate goes through this alias; introducing
//! a float anywhere would make tie detection meaningless.

use num::BigInt;
pub use num::BigRational as Rat;

use crate::error::{usage, Result};

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or a plain integer string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| usage(format!("invalid rational '{s}': {e}")))
}

/// Canonical string form: `"p"` when the denominator is one, else `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}
