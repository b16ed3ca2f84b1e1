//! Parsing of user-supplied spinors from comma-separated complex literals.
//!
//! Each component is `a+bi`, `a` or `bi` with an `i` suffix (lowercase, no
//! `j`); whitespace is tolerated anywhere. Scientific notation works in
//! both parts, e.g. `1e-3 - 2.5e-7i`.

use helicity_core::numerics::C64;
use helicity_core::DiracSpinor;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpinorParseError {
    #[error("expected exactly four comma-separated components, got {got}")]
    WrongArity { got: usize },
    #[error("invalid complex literal `{token}` at component {position}: {reason}")]
    Invalid {
        token: String,
        position: usize,
        reason: String,
    },
}

/// Parses four comma-separated complex literals into an (unnormalized)
/// Dirac spinor.
pub fn parse_spinor(text: &str) -> Result<DiracSpinor, SpinorParseError> {
    let tokens: Vec<&str> = text.split(',').collect();
    if tokens.len() != 4 {
        return Err(SpinorParseError::WrongArity { got: tokens.len() });
    }
    let mut components = [C64::new(0.0, 0.0); 4];
    for (position, token) in tokens.iter().enumerate() {
        components[position] =
            parse_complex(token).map_err(|reason| SpinorParseError::Invalid {
                token: token.trim().to_string(),
                position,
                reason,
            })?;
    }
    Ok(DiracSpinor::new(
        components[0],
        components[1],
        components[2],
        components[3],
    ))
}

/// Parses one complex literal.
pub fn parse_complex(token: &str) -> Result<C64, String> {
    let s: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty component".to_string());
    }
    match s.strip_suffix('i') {
        Some(body) => match split_at_sign(body) {
            Some((re_part, im_part)) => {
                Ok(C64::new(parse_real(re_part)?, parse_imag_coeff(im_part)?))
            }
            None => Ok(C64::new(0.0, parse_imag_coeff(body)?)),
        },
        None => Ok(C64::new(parse_real(&s)?, 0.0)),
    }
}

/// Splits `a+b` / `a-b` at the sign separating the two parts, scanning from
/// the right and skipping exponent signs (`1e-5+2e-7` splits at the `+`).
fn split_at_sign(s: &str) -> Option<(&str, &str)> {
    let bytes = s.as_bytes();
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            return Some((&s[..i], &s[i..]));
        }
    }
    None
}

/// Imaginary coefficient in front of `i`; an empty or bare-sign coefficient
/// means 1.
fn parse_imag_coeff(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s),
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let value: f64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a real number"))?;
    if !value.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(value)
}
