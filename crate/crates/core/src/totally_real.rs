//! Totally real number fields with certified real embeddings.
//!
//! A field is presented by a monic square-free integer polynomial whose
//! roots are all real; its embeddings are the isolating intervals of those
//! roots in ascending order. Elements live on the power basis, and every
//! sign question is answered exactly: zeros are detected through a gcd
//! with the defining polynomial, and nonzero signs are certified on a
//! refined interval that the value polynomial cannot vanish on.
//!
//! Field values are immutable; refinement always works on local copies of
//! the embedding intervals, so identical queries return identical
//! certificates and sharing a field across threads is safe.

use crate::error::{Error, Result};
use crate::inertia::Inertia;
use crate::poly::Polynomial;
use crate::qstr::{int_str, rat_str, rat_vec};
use crate::roots::{
    isolate_real_roots, refine_interval, IsolatingInterval, OpenInterval, SturmChain,
};
use crate::scalar::sign;
use crate::{Int, QPoly, Rat};
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;

/// Iteration cap for the rounding search when the caller does not supply
/// one. Desk-scale instances settle within a handful of rounds.
pub const DEFAULT_SEARCH_CAP: u32 = 64;

/// Number field presented by a monic square-free integer polynomial with
/// all roots real, together with isolating intervals for those roots in
/// ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct TotallyRealField {
    defining_poly: QPoly,
    degree: usize,
    embeddings: Vec<IsolatingInterval<Rat>>,
}

/// Element of the field on the power basis `1, theta, ..., theta^(g-1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldElement {
    #[serde(with = "rat_vec")]
    coords: Vec<Rat>,
}

impl FieldElement {
    pub fn new(coords: Vec<Rat>) -> Self {
        FieldElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        FieldElement {
            coords: coords
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Whether every coordinate is an integer, i.e. the element lies in
    /// the order generated by the power basis.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

/// Verifies the field axioms and isolates the real embeddings.
pub fn make_field(f: &QPoly) -> Result<TotallyRealField> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.degree().expect("nonzero polynomial");
    if degree == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let monic = f.leading().expect("nonzero polynomial").is_one();
    if !monic || f.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::NotMonicInteger);
    }
    if !f.is_squarefree()? {
        return Err(Error::NotSquareFree);
    }
    let embeddings = isolate_real_roots(f)?;
    if embeddings.len() != degree {
        return Err(Error::NotTotallyReal {
            found: embeddings.len(),
            degree,
        });
    }
    Ok(TotallyRealField {
        defining_poly: f.clone(),
        degree,
        embeddings,
    })
}

impl TotallyRealField {
    pub fn defining_poly(&self) -> &QPoly {
        &self.defining_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Isolating intervals of the real embeddings, ascending.
    pub fn embeddings(&self) -> &[IsolatingInterval<Rat>] {
        &self.embeddings
    }

    fn check_len(&self, elem: &FieldElement) -> Result<()> {
        if elem.coords.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: elem.coords.len(),
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::new(vec![Rat::zero(); self.degree])
    }

    pub fn one(&self) -> FieldElement {
        let mut coords = vec![Rat::zero(); self.degree];
        coords[0] = Rat::one();
        FieldElement::new(coords)
    }

    /// The class of `t`, reduced when the field has degree 1.
    pub fn generator(&self) -> FieldElement {
        if self.degree == 1 {
            let root = -self.defining_poly.coeff(0);
            return FieldElement::new(vec![root]);
        }
        let mut coords = vec![Rat::zero(); self.degree];
        coords[1] = Rat::one();
        FieldElement::new(coords)
    }

    /// The value polynomial of an element, of degree below the field
    /// degree.
    pub fn element_poly(&self, elem: &FieldElement) -> Result<QPoly> {
        self.check_len(elem)?;
        Ok(Polynomial::new(elem.coords.clone()))
    }

    fn reduce(&self, poly: QPoly) -> FieldElement {
        let (_, rem) = poly
            .div_rem(&self.defining_poly)
            .expect("defining polynomial is nonzero");
        let mut coords = rem.coeffs().to_vec();
        coords.resize(self.degree, Rat::zero());
        FieldElement::new(coords)
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(FieldElement::new(
            x.coords
                .iter()
                .zip(&y.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check_len(x)?;
        Ok(FieldElement::new(x.coords.iter().map(|a| -a).collect()))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        let product = &self.element_poly(x)? * &self.element_poly(y)?;
        Ok(self.reduce(product))
    }
}

/// Sign of one real embedding value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "-" => Ok(Sign::Negative),
            "0" => Ok(Sign::Zero),
            "+" => Ok(Sign::Positive),
            other => Err(de::Error::custom(format!("unknown sign `{other}`"))),
        }
    }
}

/// Sign of one embedding value together with the refined root bracket on
/// which it was certified.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingSign {
    pub sign: Sign,
    #[serde(with = "rat_str")]
    pub lo: Rat,
    #[serde(with = "rat_str")]
    pub hi: Rat,
}

/// Certified signs of an element under all real embeddings, ascending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignPattern {
    pub signs: Vec<EmbeddingSign>,
}

impl SignPattern {
    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Sign at the k-th embedding, 0-based ascending.
    pub fn sign(&self, k: usize) -> Sign {
        self.signs[k].sign
    }

    pub fn symbols(&self) -> Vec<Sign> {
        self.signs.iter().map(|s| s.sign).collect()
    }

    pub fn negative_count(&self) -> usize {
        self.signs
            .iter()
            .filter(|s| s.sign == Sign::Negative)
            .count()
    }

    pub fn has_zero(&self) -> bool {
        self.signs.iter().any(|s| s.sign == Sign::Zero)
    }
}

/// Certifies the sign of an element under every embedding.
///
/// Exact zeros are the embeddings whose root also divides the value
/// polynomial, found through the gcd with the defining polynomial. For
/// the rest, the embedding bracket is refined until the value polynomial
/// has no root inside and the same nonzero sign at both endpoints.
pub fn sign_pattern(field: &TotallyRealField, elem: &FieldElement) -> Result<SignPattern> {
    let value = field.element_poly(elem)?;
    if value.is_zero() {
        let signs = field
            .embeddings
            .iter()
            .map(|iv| EmbeddingSign {
                sign: Sign::Zero,
                lo: iv.lo().clone(),
                hi: iv.hi().clone(),
            })
            .collect();
        return Ok(SignPattern { signs });
    }
    let shared = field.defining_poly.gcd(&value);
    let shared_chain = if shared.degree() > Some(0) {
        Some(SturmChain::new(&shared)?)
    } else {
        None
    };
    let value_chain = SturmChain::new(&value)?;
    let mut signs = Vec::with_capacity(field.degree);
    for interval in &field.embeddings {
        let open = OpenInterval::finite(interval.lo().clone(), interval.hi().clone());
        if let Some(chain) = &shared_chain {
            // The interval isolates one root of the defining polynomial,
            // so a shared root inside it is the embedding itself.
            if chain.count_distinct_in(&open) == 1 {
                signs.push(EmbeddingSign {
                    sign: Sign::Zero,
                    lo: interval.lo().clone(),
                    hi: interval.hi().clone(),
                });
                continue;
            }
        }
        let mut bracket = interval.clone();
        loop {
            let open = OpenInterval::finite(bracket.lo().clone(), bracket.hi().clone());
            let at_lo = sign(&value.eval(bracket.lo()));
            let at_hi = sign(&value.eval(bracket.hi()));
            if at_lo == at_hi && at_lo != 0 && value_chain.count_distinct_in(&open) == 0 {
                signs.push(EmbeddingSign {
                    sign: if at_lo > 0 {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    },
                    lo: bracket.lo().clone(),
                    hi: bracket.hi().clone(),
                });
                break;
            }
            let half = bracket.width() / (Rat::one() + Rat::one());
            bracket = refine_interval(&bracket, &half);
        }
    }
    Ok(SignPattern { signs })
}

/// Trace of the multiplication-by-`elem` map on the power basis.
pub fn trace(field: &TotallyRealField, elem: &FieldElement) -> Result<Rat> {
    field.check_len(elem)?;
    let mut total = Rat::zero();
    let mut current = elem.clone();
    for k in 0..field.degree {
        total += current.coords[k].clone();
        if k + 1 < field.degree {
            current = field.mul(&current, &field.generator())?;
        }
    }
    Ok(total)
}

/// `Tr(eta alpha zeta) - Tr(eta beta gamma)`, the imaginary part of the
/// associated Hermitian pairing on a pair of lattice vectors; an integer
/// whenever all inputs have integer coordinates.
pub fn imaginary_pairing(
    field: &TotallyRealField,
    eta: &FieldElement,
    x: (&FieldElement, &FieldElement),
    y: (&FieldElement, &FieldElement),
) -> Result<Rat> {
    let (alpha, beta) = x;
    let (gamma, zeta) = y;
    let left = trace(field, &field.mul(&field.mul(eta, alpha)?, zeta)?)?;
    let right = trace(field, &field.mul(&field.mul(eta, beta)?, gamma)?)?;
    Ok(left - right)
}

/// Pair of integral elements whose embedding signs realize two disjoint
/// negativity sets, with the certified patterns and the schedule round
/// that produced them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairSearchCertificate {
    pub eta: FieldElement,
    pub beta: FieldElement,
    pub eta_pattern: SignPattern,
    pub beta_pattern: SignPattern,
    pub sum_pattern: SignPattern,
    pub iterations: u32,
}

fn check_subsets(
    degree: usize,
    i_set: &BTreeSet<usize>,
    j_set: &BTreeSet<usize>,
) -> Result<()> {
    let in_range = |set: &BTreeSet<usize>| set.iter().all(|&k| 1 <= k && k <= degree);
    if !in_range(i_set) || !in_range(j_set) || i_set.intersection(j_set).next().is_some() {
        return Err(Error::BadEmbeddingSubsets);
    }
    Ok(())
}

/// Solves a square rational system by elimination; `None` when singular.
fn solve_linear(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        for r in k + 1..n {
            let factor = &a[r][k] / &a[k][k];
            for c in k..n {
                let delta = &factor * &a[k][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[k];
            b[r] -= delta;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for c in k + 1..n {
            acc -= &a[k][c] * &x[c];
        }
        x[k] = acc / a[k][k].clone();
    }
    Some(x)
}

/// Finds integral elements `eta` and `beta` whose signs are negative
/// exactly on `i_set` and `j_set` respectively and whose sum is negative
/// on the union, by solving for target values at approximate roots,
/// rounding a scaled solution into the order, and verifying the signs
/// exactly. Each failed round doubles both the root precision and the
/// scale.
///
/// Subsets are 1-based embedding indices and must be disjoint.
pub fn find_pair_with_signs(
    field: &TotallyRealField,
    i_set: &BTreeSet<usize>,
    j_set: &BTreeSet<usize>,
    max_iters: u32,
) -> Result<PairSearchCertificate> {
    check_subsets(field.degree, i_set, j_set)?;
    let g = field.degree;
    let target = |negatives: &BTreeSet<usize>, k: usize| {
        if negatives.contains(&(k + 1)) {
            -Rat::from_integer(Int::from(3))
        } else {
            Rat::one()
        }
    };

    let mut width = Rat::new(Int::one(), Int::from(16));
    let mut scale = Int::one();
    for iteration in 0..max_iters {
        let nodes: Vec<Rat> = field
            .embeddings
            .iter()
            .map(|iv| refine_interval(iv, &width).midpoint())
            .collect();
        let vandermonde: Vec<Vec<Rat>> = nodes
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(g);
                let mut power = Rat::one();
                for _ in 0..g {
                    row.push(power.clone());
                    power *= x;
                }
                row
            })
            .collect();
        let eta_rhs: Vec<Rat> = (0..g).map(|k| target(i_set, k)).collect();
        let beta_rhs: Vec<Rat> = (0..g).map(|k| target(j_set, k)).collect();
        let solved = solve_linear(vandermonde.clone(), eta_rhs)
            .zip(solve_linear(vandermonde, beta_rhs));
        if let Some((eta_coeffs, beta_coeffs)) = solved {
            let round = |coeffs: Vec<Rat>| {
                FieldElement::new(
                    coeffs
                        .into_iter()
                        .map(|c| (c * Rat::from_integer(scale.clone())).round())
                        .collect(),
                )
            };
            let eta = round(eta_coeffs);
            let beta = round(beta_coeffs);
            if let Some(certificate) =
                verify_pair(field, eta, beta, i_set, j_set, iteration)?
            {
                return Ok(certificate);
            }
        }
        width /= Rat::from_integer(Int::from(2));
        scale *= 2;
    }
    Err(Error::SearchCapExceeded {
        iterations: max_iters as u64,
        width: width.to_string(),
        scale: scale.to_string(),
    })
}

/// Independent predicate check of a candidate pair; everything is
/// recomputed from certified sign patterns, nothing is trusted from the
/// search path.
fn verify_pair(
    field: &TotallyRealField,
    eta: FieldElement,
    beta: FieldElement,
    i_set: &BTreeSet<usize>,
    j_set: &BTreeSet<usize>,
    iteration: u32,
) -> Result<Option<PairSearchCertificate>> {
    let eta_pattern = sign_pattern(field, &eta)?;
    let beta_pattern = sign_pattern(field, &beta)?;
    let sum_pattern = sign_pattern(field, &field.add(&eta, &beta)?)?;
    let matches = |pattern: &SignPattern, negatives: &BTreeSet<usize>| {
        (0..field.degree).all(|k| match pattern.sign(k) {
            Sign::Negative => negatives.contains(&(k + 1)),
            Sign::Positive => !negatives.contains(&(k + 1)),
            Sign::Zero => false,
        })
    };
    let union_negative = (0..field.degree).all(|k| {
        let in_union = i_set.contains(&(k + 1)) || j_set.contains(&(k + 1));
        !in_union || sum_pattern.sign(k) == Sign::Negative
    });
    let ok = matches(&eta_pattern, i_set)
        && matches(&beta_pattern, j_set)
        && union_negative
        && !sum_pattern.has_zero();
    Ok(ok.then_some(PairSearchCertificate {
        eta,
        beta,
        eta_pattern,
        beta_pattern,
        sum_pattern,
        iterations: iteration,
    }))
}

/// Point of the upper half plane with rational coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperHalfPoint {
    #[serde(with = "rat_str")]
    re: Rat,
    #[serde(with = "rat_str")]
    im: Rat,
}

impl UpperHalfPoint {
    pub fn new(re: Rat, im: Rat) -> Result<Self> {
        if im <= Rat::zero() {
            return Err(Error::NotUpperHalf);
        }
        Ok(UpperHalfPoint { re, im })
    }

    /// The point `i`.
    pub fn imaginary_unit() -> Self {
        UpperHalfPoint {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }
}

impl<'de> Deserialize<'de> for UpperHalfPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            re: String,
            im: String,
        }
        let doc = Doc::deserialize(d)?;
        let re = crate::qstr::parse_rat(&doc.re).map_err(de::Error::custom)?;
        let im = crate::qstr::parse_rat(&doc.im).map_err(de::Error::custom)?;
        UpperHalfPoint::new(re, im).map_err(de::Error::custom)
    }
}

/// One diagonal entry of the associated Hermitian form: a rational
/// enclosure of the embedding value divided by the imaginary part, with
/// its certified sign.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalEntry {
    pub sign: Sign,
    #[serde(with = "rat_str")]
    pub lo: Rat,
    #[serde(with = "rat_str")]
    pub hi: Rat,
}

/// Diagonal description and inertia of the Hermitian form attached to an
/// element and a tuple of upper-half-plane points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermitianFormReport {
    pub entries: Vec<DiagonalEntry>,
    pub inertia: Inertia,
}

/// Evaluates a polynomial over an interval by Horner's rule in interval
/// arithmetic; the result encloses every value on the interval.
fn interval_eval(poly: &QPoly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc_lo = Rat::zero();
    let mut acc_hi = Rat::zero();
    for c in poly.coeffs().iter().rev() {
        let products = [
            acc_lo.clone() * lo.clone(),
            acc_lo.clone() * hi.clone(),
            acc_hi.clone() * lo.clone(),
            acc_hi.clone() * hi.clone(),
        ];
        acc_lo = products.iter().min().expect("nonempty").clone() + c.clone();
        acc_hi = products.iter().max().expect("nonempty").clone() + c.clone();
    }
    (acc_lo, acc_hi)
}

/// Encloses the value of `poly` at the k-th embedding in a sign-definite
/// rational interval. The value must be nonzero there.
fn enclose_embedding_value(
    field: &TotallyRealField,
    poly: &QPoly,
    k: usize,
) -> (Rat, Rat) {
    let mut bracket = field.embeddings[k].clone();
    loop {
        let (lo, hi) = interval_eval(poly, bracket.lo(), bracket.hi());
        if lo > Rat::zero() || hi < Rat::zero() {
            return (lo, hi);
        }
        let half = bracket.width() / (Rat::one() + Rat::one());
        bracket = refine_interval(&bracket, &half);
    }
}

/// Builds the diagonal Hermitian form with entries `sigma_k(eta) / Im
/// z_k` and reads its inertia off the sign pattern; the result cannot
/// depend on `z`, whose imaginary parts are positive.
pub fn hermitian_form_index(
    field: &TotallyRealField,
    eta: &FieldElement,
    z: &[UpperHalfPoint],
) -> Result<HermitianFormReport> {
    if z.len() != field.degree {
        return Err(Error::DimensionMismatch {
            expected: field.degree,
            got: z.len(),
        });
    }
    let pattern = sign_pattern(field, eta)?;
    if pattern.has_zero() {
        return Err(Error::DegenerateHermitianForm);
    }
    let value = field.element_poly(eta)?;
    let entries = (0..field.degree)
        .map(|k| {
            let (lo, hi) = enclose_embedding_value(field, &value, k);
            DiagonalEntry {
                sign: pattern.sign(k),
                lo: lo / z[k].im(),
                hi: hi / z[k].im(),
            }
        })
        .collect();
    let negative = pattern.negative_count();
    Ok(HermitianFormReport {
        entries,
        inertia: Inertia {
            positive: field.degree - negative,
            negative,
            zero: 0,
        },
    })
}

/// Full certificate that the field admits a pair of elements whose three
/// Hermitian forms have exactly `p`, `q`, and `p + q` negative
/// eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExistenceReport {
    pub p: usize,
    pub q: usize,
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    pub search: PairSearchCertificate,
    pub h_eta: HermitianFormReport,
    pub h_beta: HermitianFormReport,
    pub h_sum: HermitianFormReport,
}

/// Realizes negative-eigenvalue counts `(p, q, p + q)` on the first `p`
/// and next `q` embeddings and verifies the three Hermitian forms
/// independently of the search.
pub fn existence_report(
    field: &TotallyRealField,
    z: &[UpperHalfPoint],
    p: usize,
    q: usize,
    max_iters: u32,
) -> Result<ExistenceReport> {
    if p + q > field.degree {
        return Err(Error::BadInput(format!(
            "p + q = {} exceeds the field degree {}",
            p + q,
            field.degree
        )));
    }
    if z.len() != field.degree {
        return Err(Error::DimensionMismatch {
            expected: field.degree,
            got: z.len(),
        });
    }
    let i_set: BTreeSet<usize> = (1..=p).collect();
    let j_set: BTreeSet<usize> = (p + 1..=p + q).collect();
    let search = find_pair_with_signs(field, &i_set, &j_set, max_iters)?;
    let h_eta = hermitian_form_index(field, &search.eta, z)?;
    let h_beta = hermitian_form_index(field, &search.beta, z)?;
    let sum = field.add(&search.eta, &search.beta)?;
    let h_sum = hermitian_form_index(field, &sum, z)?;
    if h_eta.inertia.negative != p
        || h_beta.inertia.negative != q
        || h_sum.inertia.negative != p + q
    {
        return Err(Error::InconsistentData);
    }
    Ok(ExistenceReport {
        p,
        q,
        i_set: i_set.into_iter().collect(),
        j_set: j_set.into_iter().collect(),
        search,
        h_eta,
        h_beta,
        h_sum,
    })
}

/// Indices of the semi-homogeneous bundles built from two elements and
/// their product level `m`: each bundle index is `m` times the
/// negative-conjugate count, and additivity compares the counts of the
/// two elements with that of their sum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SemihomogeneousReport {
    pub m: u32,
    pub i_eta: usize,
    pub i_gamma: usize,
    pub i_sum: usize,
    #[serde(with = "int_str")]
    pub bundle_eta: Int,
    #[serde(with = "int_str")]
    pub bundle_gamma: Int,
    #[serde(with = "int_str")]
    pub bundle_sum: Int,
    pub additive: bool,
}

pub fn semihomogeneous_index_report(
    field: &TotallyRealField,
    m: u32,
    eta: &FieldElement,
    gamma: &FieldElement,
) -> Result<SemihomogeneousReport> {
    if m == 0 {
        return Err(Error::BadInput("the level m must be positive".into()));
    }
    let counts = [eta.clone(), gamma.clone(), field.add(eta, gamma)?]
        .iter()
        .map(|elem| {
            let pattern = sign_pattern(field, elem)?;
            if pattern.has_zero() {
                return Err(Error::DegenerateElement);
            }
            Ok(pattern.negative_count())
        })
        .collect::<Result<Vec<usize>>>()?;
    let (i_eta, i_gamma, i_sum) = (counts[0], counts[1], counts[2]);
    Ok(SemihomogeneousReport {
        m,
        i_eta,
        i_gamma,
        i_sum,
        bundle_eta: Int::from(m) * Int::from(i_eta),
        bundle_gamma: Int::from(m) * Int::from(i_gamma),
        bundle_sum: Int::from(m) * Int::from(i_sum),
        additive: i_eta + i_gamma == i_sum,
    })
}
