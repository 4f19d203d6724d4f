//! Argument parsing beyond clap: classes and fields given inline or as
//! JSON files, embedding subsets, base points, and the failure type that
//! fixes the process exit codes.

use ndindex::chi::{IntersectionForm, NumClass};
use ndindex::qstr::parse_rat;
use ndindex::totally_real::{make_field, TotallyRealField, UpperHalfPoint};
use ndindex::{Int, QPoly, Rat};
use serde::Deserialize;
use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;

/// Classified failure: domain errors (exit 1) mean the inputs were
/// understood but the computation refuses them; malformed errors (exit 2)
/// mean the inputs could not be read at all; a verification mismatch
/// (exit 1) means a certificate does not reproduce.
#[derive(Debug)]
pub enum Failure {
    Domain(ndindex::Error),
    Malformed(String),
    Mismatch { target: String },
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) | Failure::Mismatch { .. } => 1,
            Failure::Malformed(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Malformed(msg) => write!(f, "{msg}"),
            Failure::Mismatch { target } => {
                write!(f, "`{target}` document failed verification: recomputation differs")
            }
        }
    }
}

impl From<ndindex::Error> for Failure {
    fn from(e: ndindex::Error) -> Self {
        Failure::Domain(e)
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))
}

pub fn read_form(path: &Path) -> Result<IntersectionForm, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Malformed(format!("malformed form file {}: {e}", path.display())))
}

fn parse_inline_rats(spec: &str) -> Option<Vec<Rat>> {
    spec.split(',').map(|tok| parse_rat(tok).ok()).collect()
}

/// A class is either inline comma-separated rationals or a path to a JSON
/// file `{"coeffs": ["p/q", ...]}`; inline parsing is tried first.
pub fn parse_class(spec: &str) -> Result<NumClass, Failure> {
    if let Some(coeffs) = parse_inline_rats(spec) {
        return Ok(NumClass::new(coeffs));
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Failure::Malformed(format!(
            "`{spec}` is neither a comma-separated class nor an existing file"
        )));
    }
    let text = read_text(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Malformed(format!("malformed class file {spec}: {e}")))
}

#[derive(Deserialize)]
struct FieldDoc {
    f: Vec<i64>,
}

/// A defining polynomial is either inline coefficients in descending
/// degree order (`"1,0,-2"` is `t^2 - 2`) or a path to a JSON file
/// `{"f": [...]}` with integer coefficients in ascending order. The
/// result is validated as a field either way.
pub fn parse_field(spec: &str) -> Result<TotallyRealField, Failure> {
    let poly = if let Some(mut coeffs) = parse_inline_rats(spec) {
        coeffs.reverse();
        QPoly::new(coeffs)
    } else {
        let path = Path::new(spec);
        if !path.exists() {
            return Err(Failure::Malformed(format!(
                "`{spec}` is neither a coefficient list nor an existing file"
            )));
        }
        let text = read_text(path)?;
        let doc: FieldDoc = serde_json::from_str(&text)
            .map_err(|e| Failure::Malformed(format!("malformed field file {spec}: {e}")))?;
        QPoly::new(
            doc.f
                .into_iter()
                .map(|c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    };
    Ok(make_field(&poly)?)
}

/// Comma-separated 1-based embedding indices; an empty or blank string is
/// the empty set.
pub fn parse_subset(spec: &str) -> Result<BTreeSet<usize>, Failure> {
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Ok(BTreeSet::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Malformed(format!("malformed embedding index `{tok}`")))
        })
        .collect()
}

/// Semicolon-separated upper-half-plane points, each `"re,im"`.
pub fn parse_base_points(spec: &str) -> Result<Vec<UpperHalfPoint>, Failure> {
    spec.split(';')
        .map(|pair| {
            let (re_s, im_s) = pair.split_once(',').ok_or_else(|| {
                Failure::Malformed(format!("malformed base point `{pair}`, expected `re,im`"))
            })?;
            let parse = |tok: &str| {
                parse_rat(tok).map_err(|_| {
                    Failure::Malformed(format!("malformed base point coordinate `{tok}`"))
                })
            };
            let re = parse(re_s)?;
            let im = parse(im_s)?;
            Ok(UpperHalfPoint::new(re, im)?)
        })
        .collect()
}

/// The search cap: the `NDINDEX_MAX_ITERS` environment variable overrides
/// the command-line flag when set.
pub fn effective_cap(flag: u32) -> Result<u32, Failure> {
    match std::env::var("NDINDEX_MAX_ITERS") {
        Ok(raw) => raw.trim().parse::<u32>().map_err(|_| {
            Failure::Malformed(format!(
                "NDINDEX_MAX_ITERS must be a nonnegative integer, got `{raw}`"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(flag),
        Err(e) => Err(Failure::Malformed(format!("NDINDEX_MAX_ITERS: {e}"))),
    }
}
