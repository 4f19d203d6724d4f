//! `"p/q"` string handling for rationals and serde adapters for the JSON
//! schemas used by certificates.
//!
//! Every rational that crosses a JSON or CLI boundary is written as
//! `"p/q"` with a reduced fraction and positive denominator, `"0/1"`
//! included. Parsing additionally accepts a bare integer `"p"`.

use crate::error::{Error, Result};
use crate::{Int, Rat};
use num_traits::Zero;
use std::str::FromStr;

pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    let (num_s, den_s) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = Int::from_str(num_s).map_err(|_| bad())?;
    let d = Int::from_str(den_s).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Shorthand constructor for literals; panics on malformed input.
pub fn rat(s: &str) -> Rat {
    parse_rat(s).expect("literal rational")
}

/// Serde adapter: a single `Rat` as a `"p/q"` string.
pub mod rat_str {
    use super::{parse_rat, rat_string};
    use crate::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vec<Rat>` as a list of `"p/q"` strings.
pub mod rat_vec {
    use super::{parse_rat, rat_string};
    use crate::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| rat_string(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter: a rational polynomial as its coefficient strings, lowest
/// degree first.
pub mod poly_coeffs {
    use super::{parse_rat, rat_string};
    use crate::poly::Polynomial;
    use crate::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        p: &Polynomial<Rat>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(p.coeffs().iter().map(|r| rat_string(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Polynomial<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<Rat>, D::Error>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Serde adapter: `Int` as a decimal string.
pub mod int_str {
    use crate::Int;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(n: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Int, D::Error> {
        let raw = String::deserialize(d)?;
        Int::from_str(raw.trim()).map_err(serde::de::Error::custom)
    }
}
