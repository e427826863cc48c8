//! Exact arithmetic kernel: integer and rational polynomials, polynomials and
//! truncated power series over F_p, resultants, and prime utilities.

mod int_poly;
mod mod_poly;
pub mod modp;
pub mod primes;
mod rat_poly;
mod resultant;
mod series;

use std::fmt;

use num_rational::BigRational;

pub use int_poly::IntPoly;
pub use mod_poly::{quotient_pow, squarefree_part_mod_p, ModPoly};
pub use rat_poly::RatPoly;
pub use resultant::{resultant_formal, resultant_z};
pub use series::{series_inverse, SeriesPrefix};

use crate::error::Result;

/// Monic gcd over Q.
pub fn poly_gcd_q(f: &RatPoly, g: &RatPoly) -> RatPoly {
    f.gcd(g)
}

/// `(content, primitive)` with `f = content * primitive`.
pub fn content_primitive(f: &RatPoly) -> Result<(BigRational, IntPoly)> {
    f.content_primitive()
}

/// Render coefficients (lowest degree first) as `3*x^2 - x + 1/2`.
///
/// The output re-parses to the same polynomial with the CLI grammar.
pub(crate) fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: Vec<String>, var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (negative, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { '-' } else { '+' })?;
        }
        first = false;
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        match (mag, mono.is_empty()) {
            (m, true) => write!(f, "{m}")?,
            ("1", false) => write!(f, "{mono}")?,
            (m, false) => write!(f, "{m}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
