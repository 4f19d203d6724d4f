//! Intersection forms and numerical classes: the Euler characteristic as an
//! exact homogeneous degree-`g` polynomial in the class coefficients.
//!
//! A form stores the nonzero monomial integrals of a fixed basis of classes,
//! keyed by exponent vector. For a class `sum a_i eta_i` the Euler
//! characteristic is
//!
//! ```text
//! chi = sum over stored monomials  I_l / (l_1! * ... * l_m!) * prod a_i^{l_i}
//! ```
//!
//! with missing monomials read as zero. Restricting `chi` to a line gives
//! the rational polynomial whose real roots drive every index computation
//! downstream.

use crate::error::{Error, Result};
use crate::qstr::rat_string;
use crate::{Int, QPoly, Rat};
use num_traits::{One, ToPrimitive, Zero};
use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Exact `n!`.
pub(crate) fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn key_string(expo: &[u32]) -> String {
    expo.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Rational vector of coefficients over a form's basis.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumClass {
    #[serde(with = "crate::qstr::rat_vec")]
    coeffs: Vec<Rat>,
}

impl NumClass {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        NumClass { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        NumClass {
            coeffs: coeffs.iter().map(|&c| Rat::from(Int::from(c))).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        NumClass {
            coeffs: vec![Rat::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    fn zip_with(&self, other: &NumClass, f: impl Fn(&Rat, &Rat) -> Rat) -> NumClass {
        assert_eq!(self.dim(), other.dim(), "class dimensions differ");
        NumClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &NumClass) -> NumClass {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &NumClass) -> NumClass {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> NumClass {
        NumClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> NumClass {
        NumClass {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> NumClass {
        self.scale(&Rat::from(Int::from(k)))
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rat_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumClass{self}")
    }
}

/// Intersection data of degree `g` over a named basis: the sparse map from
/// exponent vectors to monomial integrals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionForm {
    g: usize,
    basis: Vec<String>,
    monomials: BTreeMap<Vec<u32>, Int>,
}

impl IntersectionForm {
    /// Validates the key shape: every exponent vector must have one entry
    /// per basis element and total degree `g`. Zero values are dropped so
    /// equal forms compare equal.
    pub fn new(
        g: usize,
        basis: Vec<String>,
        monomials: BTreeMap<Vec<u32>, Int>,
    ) -> Result<Self> {
        if g == 0 {
            return Err(Error::BadForm("degree g must be positive".into()));
        }
        if basis.is_empty() {
            return Err(Error::BadForm("basis must be nonempty".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &basis {
            if name.trim().is_empty() {
                return Err(Error::BadForm("basis names must be nonempty".into()));
            }
            if !seen.insert(name) {
                return Err(Error::BadForm(format!("duplicate basis name `{name}`")));
            }
        }
        let m = basis.len();
        let mut kept = BTreeMap::new();
        for (expo, value) in monomials {
            if expo.len() != m {
                return Err(Error::BadForm(format!(
                    "monomial key `{}` has {} entries, expected {}",
                    key_string(&expo),
                    expo.len(),
                    m
                )));
            }
            let total: u32 = expo.iter().sum();
            if total as usize != g {
                return Err(Error::BadForm(format!(
                    "monomial key `{}` has degree {}, expected {}",
                    key_string(&expo),
                    total,
                    g
                )));
            }
            if !value.is_zero() {
                kept.insert(expo, value);
            }
        }
        Ok(IntersectionForm {
            g,
            basis,
            monomials: kept,
        })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// Number of basis elements.
    pub fn m(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn monomials(&self) -> &BTreeMap<Vec<u32>, Int> {
        &self.monomials
    }

    pub fn check_dims(&self, class: &NumClass) -> Result<()> {
        if class.dim() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: class.dim(),
            });
        }
        Ok(())
    }

    /// Euler characteristic of a class, exactly.
    pub fn euler_char(&self, class: &NumClass) -> Result<Rat> {
        self.check_dims(class)?;
        let mut chi = Rat::zero();
        for (expo, value) in &self.monomials {
            let mut term = Rat::from(value.clone());
            for (e, a) in expo.iter().zip(class.coeffs()) {
                if *e > 0 {
                    term *= rat_pow(a, *e);
                }
            }
            let mut denom = Int::one();
            for e in expo {
                denom *= factorial(*e as usize);
            }
            chi += term / Rat::from(denom);
        }
        Ok(chi)
    }

    /// `chi(t * direction + offset)` as an exact polynomial in `t` of
    /// degree at most `g`; the degree-`g` coefficient is `chi(direction)`.
    pub fn chi_affine_line(&self, direction: &NumClass, offset: &NumClass) -> Result<QPoly> {
        self.check_dims(direction)?;
        self.check_dims(offset)?;
        let mut total = QPoly::zero();
        for (expo, value) in &self.monomials {
            let mut term = QPoly::one();
            for ((e, d), o) in expo.iter().zip(direction.coeffs()).zip(offset.coeffs()) {
                if *e > 0 {
                    let line = QPoly::new(vec![o.clone(), d.clone()]);
                    term = &term * &line.pow(*e);
                }
            }
            let mut denom = Int::one();
            for e in expo {
                denom *= factorial(*e as usize);
            }
            let scale = Rat::from(value.clone()) / Rat::from(denom);
            total = &total + &term.scale(&scale);
        }
        Ok(total)
    }

    /// `chi(t*eta + (1-t)*xi)` as an exact polynomial in `t`: the Euler
    /// characteristic along the segment from `xi` (t = 0) to `eta` (t = 1).
    pub fn chi_restricted_to_line(&self, eta: &NumClass, xi: &NumClass) -> Result<QPoly> {
        self.check_dims(eta)?;
        self.check_dims(xi)?;
        self.chi_affine_line(&eta.sub(xi), xi)
    }

    /// Sanity report: chi of each basis class, plus a data-entry heuristic
    /// that flags the form when chi fails to be an integer on every nonzero
    /// integral class in a small coordinate box.
    pub fn validate_form(&self) -> Result<FormValidation> {
        let m = self.m();
        let mut basis_chi = Vec::with_capacity(m);
        for (i, name) in self.basis.iter().enumerate() {
            let mut coeffs = vec![Rat::zero(); m];
            coeffs[i] = Rat::one();
            let chi = self.euler_char(&NumClass::new(coeffs))?;
            basis_chi.push(BasisChi {
                name: name.clone(),
                chi,
            });
        }
        let radius: i64 = if 5f64.powi(m as i32) <= 800.0 {
            2
        } else {
            1
        };
        let mut suspicious = true;
        let mut probes = 0usize;
        let mut probe = vec![-radius; m];
        loop {
            if probe.iter().any(|&c| c != 0) {
                probes += 1;
                let class = NumClass::new(
                    probe.iter().map(|&c| Rat::from(Int::from(c))).collect(),
                );
                if self.euler_char(&class)?.denom().is_one() {
                    suspicious = false;
                    break;
                }
            }
            let mut k = 0;
            loop {
                if k == m {
                    break;
                }
                probe[k] += 1;
                if probe[k] <= radius {
                    break;
                }
                probe[k] = -radius;
                k += 1;
            }
            if k == m {
                break;
            }
        }
        Ok(FormValidation {
            g: self.g,
            m,
            basis_chi,
            integrality_suspicious: suspicious,
            probe_radius: radius,
            probes,
        })
    }
}

/// Euler characteristic of one basis class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisChi {
    pub name: String,
    #[serde(with = "crate::qstr::rat_str")]
    pub chi: Rat,
}

/// Result of [`IntersectionForm::validate_form`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormValidation {
    pub g: usize,
    pub m: usize,
    pub basis_chi: Vec<BasisChi>,
    /// True when chi was a non-integer on every probed integral class,
    /// which usually means the monomial values were normalized twice.
    pub integrality_suspicious: bool,
    pub probe_radius: i64,
    pub probes: usize,
}

impl Serialize for IntersectionForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let mut mono = BTreeMap::new();
        for (expo, value) in &self.monomials {
            let v = value
                .to_i64()
                .ok_or_else(|| S::Error::custom("monomial integral exceeds i64"))?;
            mono.insert(key_string(expo), v);
        }
        let mut st = s.serialize_struct("IntersectionForm", 3)?;
        st.serialize_field("g", &self.g)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("monomials", &mono)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct FormDoc {
    g: usize,
    basis: Vec<String>,
    monomials: BTreeMap<String, i64>,
}

impl<'de> Deserialize<'de> for IntersectionForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = FormDoc::deserialize(d)?;
        let mut monomials = BTreeMap::new();
        for (key, value) in doc.monomials {
            let expo = key
                .split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| {
                        de::Error::custom(format!("malformed monomial key `{key}`"))
                    })
                })
                .collect::<std::result::Result<Vec<u32>, D::Error>>()?;
            monomials.insert(expo, Int::from(value));
        }
        IntersectionForm::new(doc.g, doc.basis, monomials).map_err(de::Error::custom)
    }
}
