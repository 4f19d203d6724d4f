//! Cohomological index computations on numerical classes: root-counting
//! index certificates, the pair index condition, index constancy along
//! segments, stability thresholds for one-parameter families, the
//! asymptotic cohomology value, and the cup-product surjectivity bound.
//!
//! The index of a non-degenerate class is the number of positive roots,
//! counted with multiplicity, of the polynomial obtained by moving the
//! class along an ample direction. Every operation here returns a
//! certificate carrying the polynomial and counts it relied on, so that a
//! verifier can recompute the claim from scratch.

use crate::chi::{factorial, IntersectionForm, NumClass};
use crate::error::{Error, Result};
use crate::qstr::{int_str, poly_coeffs, rat_str};
use crate::roots::{
    cauchy_root_bound, count_real_roots, isolate_real_roots, refine_interval, IsolatingInterval,
    OpenInterval,
};
use crate::scalar::sign;
use crate::{Int, QPoly, Rat};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Proof object for one index computation: the displacement polynomial,
/// its exact root counts, and the index they determine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexCertificate {
    pub class: NumClass,
    pub ample_ref: NumClass,
    #[serde(with = "rat_str")]
    pub chi: Rat,
    #[serde(with = "poly_coeffs")]
    pub poly: QPoly,
    pub real_root_count_with_mult: usize,
    pub positive_root_count_with_mult: usize,
    pub index: usize,
}

/// Computes the index of a non-degenerate class as the number of positive
/// roots, with multiplicity, of `P(N) = chi(N * ample + eta)`.
///
/// Whether the reference class is genuinely ample cannot be decided from
/// the form alone; the necessary conditions checked here are `chi(ample) >
/// 0` and that `P` has all real roots, and a violation of the latter is
/// reported as inconsistent input data.
pub fn mumford_index(
    form: &IntersectionForm,
    ample: &NumClass,
    eta: &NumClass,
) -> Result<IndexCertificate> {
    if form.euler_char(ample)? <= Rat::zero() {
        return Err(Error::ReferenceNotAmple);
    }
    let chi = form.euler_char(eta)?;
    if chi.is_zero() {
        return Err(Error::DegenerateClass);
    }
    let poly = form.chi_affine_line(ample, eta)?;
    let g = form.g();
    debug_assert_eq!(poly.degree(), Some(g), "leading coefficient is chi(ample)");
    let real = count_real_roots(&poly, &OpenInterval::all(), true)?;
    if real != g {
        return Err(Error::InconsistentData);
    }
    let positive = count_real_roots(&poly, &OpenInterval::positive(), true)?;
    debug_assert_eq!(
        sign(&chi),
        if positive % 2 == 0 { 1 } else { -1 },
        "a fully real monic-positive polynomial fixes the sign of P(0)"
    );
    Ok(IndexCertificate {
        class: eta.clone(),
        ample_ref: ample.clone(),
        chi,
        poly,
        real_root_count_with_mult: real,
        positive_root_count_with_mult: positive,
        index: positive,
    })
}

fn optional_index(
    form: &IntersectionForm,
    ample: &NumClass,
    class: &NumClass,
) -> Result<Option<usize>> {
    match mumford_index(form, ample, class) {
        Ok(cert) => Ok(Some(cert.index)),
        Err(Error::DegenerateClass) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Euler characteristics and indices of two classes and their sum, plus
/// whether the indices exist and add up.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    #[serde(with = "rat_str")]
    pub chi_l: Rat,
    #[serde(with = "rat_str")]
    pub chi_m: Rat,
    #[serde(with = "rat_str")]
    pub chi_lm: Rat,
    pub i_l: Option<usize>,
    pub i_m: Option<usize>,
    pub i_lm: Option<usize>,
    pub holds: bool,
}

/// Checks the pair index condition: all three Euler characteristics
/// nonzero and the index of the sum equal to the sum of the indices.
/// Degeneracy is reported in the verdict rather than as an error.
pub fn pair_index_condition(
    form: &IntersectionForm,
    ample: &NumClass,
    l: &NumClass,
    m: &NumClass,
) -> Result<PairReport> {
    form.check_dims(l)?;
    form.check_dims(m)?;
    let sum = l.add(m);
    let i_l = optional_index(form, ample, l)?;
    let i_m = optional_index(form, ample, m)?;
    let i_lm = optional_index(form, ample, &sum)?;
    let holds = match (i_l, i_m, i_lm) {
        (Some(a), Some(b), Some(c)) => a + b == c,
        _ => false,
    };
    Ok(PairReport {
        chi_l: form.euler_char(l)?,
        chi_m: form.euler_char(m)?,
        chi_lm: form.euler_char(&sum)?,
        i_l,
        i_m,
        i_lm,
        holds,
    })
}

/// Rational bracket around one interior zero of a segment polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootWindow {
    #[serde(with = "rat_str")]
    pub lo: Rat,
    #[serde(with = "rat_str")]
    pub hi: Rat,
}

/// Outcome of a segment check: either the Euler characteristic never
/// vanishes between the endpoints and the index is constant, or the
/// interior zeros are isolated and returned.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum SegmentVerdict {
    ConstantIndex { index: usize },
    VanishesOnSegment { roots: Vec<RootWindow> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentReport {
    #[serde(with = "poly_coeffs")]
    pub poly_on_segment: QPoly,
    pub roots_in_unit_interval: usize,
    pub verdict: SegmentVerdict,
}

/// Decides whether the index is constant on the straight segment from
/// `xi` (at t = 0) to `eta` (at t = 1) by counting the zeros of
/// `chi(t eta + (1 - t) xi)` on the unit interval.
///
/// When the count is zero the endpoint indices are recomputed
/// independently and must agree; disagreement means the form data is not
/// geometric and is reported as an error rather than certified.
pub fn segment_index(
    form: &IntersectionForm,
    ample: &NumClass,
    eta: &NumClass,
    xi: &NumClass,
) -> Result<SegmentReport> {
    if form.euler_char(eta)?.is_zero() || form.euler_char(xi)?.is_zero() {
        return Err(Error::DegenerateClass);
    }
    let poly = form.chi_restricted_to_line(eta, xi)?;
    // The values at t = 0 and t = 1 are the endpoint Euler characteristics,
    // both nonzero, so every zero on [0, 1] is interior and the open
    // interval carries the full count.
    let unit = OpenInterval::finite(Rat::zero(), Rat::one());
    let count = count_real_roots(&poly, &unit, false)?;
    let verdict = if count == 0 {
        let at_one = mumford_index(form, ample, eta)?.index;
        let at_zero = mumford_index(form, ample, xi)?.index;
        if at_one != at_zero {
            return Err(Error::InconsistentData);
        }
        SegmentVerdict::ConstantIndex { index: at_one }
    } else {
        let squarefree = poly.squarefree_part()?;
        let mut roots = Vec::new();
        for interval in isolate_real_roots(&squarefree)? {
            if let Some(window) = clip_to_unit(interval) {
                roots.push(window);
            }
        }
        debug_assert_eq!(roots.len(), count);
        SegmentVerdict::VanishesOnSegment { roots }
    };
    Ok(SegmentReport {
        poly_on_segment: poly,
        roots_in_unit_interval: count,
        verdict,
    })
}

/// Refines a bracket until it sits inside `[0, 1]` or misses it entirely;
/// 0 and 1 are non-roots, so the dichotomy is eventually decided.
fn clip_to_unit(interval: IsolatingInterval<Rat>) -> Option<RootWindow> {
    let mut iv = interval;
    loop {
        if iv.lo() >= &Rat::zero() && iv.hi() <= &Rat::one() {
            return Some(RootWindow {
                lo: iv.lo().clone(),
                hi: iv.hi().clone(),
            });
        }
        if iv.hi() <= &Rat::zero() || iv.lo() >= &Rat::one() {
            return None;
        }
        let half = iv.width() / (Rat::one() + Rat::one());
        iv = refine_interval(&iv, &half);
    }
}

/// One integer sample of the family `a eta + xi` at or below the root
/// bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckedPoint {
    #[serde(with = "int_str")]
    pub a: Int,
    #[serde(with = "rat_str")]
    pub chi: Rat,
    pub index: Option<usize>,
    pub passes: bool,
}

/// Certificate that `chi(a eta + xi)` is nonzero with index equal to the
/// index of `eta` for every integer `a >= a0`, and that `a0` is minimal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdCertificate {
    pub eta: NumClass,
    pub xi: NumClass,
    pub reference_index: usize,
    #[serde(with = "rat_str")]
    pub bound_used: Rat,
    #[serde(with = "int_str")]
    pub a0: Int,
    pub checked_range: Vec<CheckedPoint>,
    #[serde(with = "int_str")]
    pub segment_witness_a: Int,
    pub segment: SegmentReport,
}

/// Finds the minimal positive integer `a0` such that every integer
/// `a >= a0` satisfies `chi(a eta + xi) != 0` and index equal to the index
/// of `eta`.
///
/// Integers up to the Cauchy root bound of `Q(a) = chi(a eta + xi)` are
/// checked one by one. Beyond the bound `Q` cannot vanish, and a single
/// segment certificate at the witness `floor(bound) + 1` settles all
/// larger `a` at once: by homogeneity the index of `a eta + xi` equals the
/// index of `eta + xi / a`, and the segment from `eta` to `eta + xi / a`
/// shrinks into the witness segment as `a` grows.
pub fn stability_threshold(
    form: &IntersectionForm,
    ample: &NumClass,
    eta: &NumClass,
    xi: &NumClass,
) -> Result<ThresholdCertificate> {
    form.check_dims(eta)?;
    form.check_dims(xi)?;
    if !eta.is_integral() || !xi.is_integral() {
        return Err(Error::NonIntegralClass);
    }
    let reference = mumford_index(form, ample, eta)?;
    let family = form.chi_affine_line(eta, xi)?;
    let bound = cauchy_root_bound(&family)?;
    let ceil_bound = bound.ceil().to_integer();

    let mut checked_range = Vec::new();
    let mut last_failure = Int::zero();
    let mut a = Int::one();
    while a <= ceil_bound {
        let class = eta.scale(&Rat::from_integer(a.clone())).add(xi);
        let chi = form.euler_char(&class)?;
        let index = if chi.is_zero() {
            None
        } else {
            Some(mumford_index(form, ample, &class)?.index)
        };
        let passes = index == Some(reference.index);
        if !passes {
            last_failure = a.clone();
        }
        checked_range.push(CheckedPoint {
            a: a.clone(),
            chi,
            index,
            passes,
        });
        a += 1;
    }

    let witness: Int = bound.floor().to_integer() + 1;
    let far_end = eta.add(&xi.scale(&Rat::new(Int::one(), witness.clone())));
    let segment = segment_index(form, ample, &far_end, eta)?;
    match &segment.verdict {
        SegmentVerdict::ConstantIndex { index } if *index == reference.index => {}
        _ => return Err(Error::InconsistentData),
    }
    if last_failure >= witness {
        return Err(Error::InconsistentData);
    }
    Ok(ThresholdCertificate {
        eta: eta.clone(),
        xi: xi.clone(),
        reference_index: reference.index,
        bound_used: bound,
        a0: last_failure + 1,
        checked_range,
        segment_witness_a: witness,
        segment,
    })
}

/// Asymptotic cohomology of a class in degree `q`: `g! chi(eta) (-1)^q`
/// when `chi(eta)` is nonzero and `q` is the index of `eta`, and zero
/// otherwise. The result is never negative.
pub fn hhat(
    form: &IntersectionForm,
    ample: &NumClass,
    eta: &NumClass,
    q: usize,
) -> Result<Rat> {
    let g = form.g();
    if q > g {
        return Err(Error::BadInput(format!(
            "cohomological degree {q} exceeds the top degree {g}"
        )));
    }
    let chi = form.euler_char(eta)?;
    if chi.is_zero() {
        return Ok(Rat::zero());
    }
    if mumford_index(form, ample, eta)?.index != q {
        return Ok(Rat::zero());
    }
    let magnitude = Rat::from_integer(factorial(g)) * chi;
    let value = if q % 2 == 1 { -magnitude } else { magnitude };
    debug_assert!(value >= Rat::zero());
    Ok(value)
}

/// Whether twisting by large powers of the class kills cohomology above
/// degree `q`; for a non-degenerate class this is exactly index at most
/// `q`.
pub fn naive_q_ample(
    form: &IntersectionForm,
    ample: &NumClass,
    eta: &NumClass,
    q: usize,
) -> Result<bool> {
    Ok(mumford_index(form, ample, eta)?.index <= q)
}

/// Minimal positive integer `n` with
/// `n^g |chi(l)| |chi(m)| >= |chi(l + m)|`, the dimension obstruction
/// below which the cup-product map of the n-th powers cannot be
/// surjective. Requires the pair index condition.
pub fn surjectivity_lower_bound(
    form: &IntersectionForm,
    ample: &NumClass,
    l: &NumClass,
    m: &NumClass,
) -> Result<Int> {
    let pair = pair_index_condition(form, ample, l, m)?;
    if !pair.holds {
        return Err(Error::PairConditionFails);
    }
    let ratio = pair.chi_lm.abs() / (pair.chi_l.abs() * pair.chi_m.abs());
    let g = u32::try_from(form.g()).expect("degree fits in u32");
    let (numer, denom) = (ratio.numer().clone(), ratio.denom().clone());
    // The floor root of the integer part of the ratio is at most one short
    // of the answer, so the scan below takes at most two steps.
    let mut n = numer.div_floor(&denom).nth_root(g);
    if n < Int::one() {
        n = Int::one();
    }
    while Pow::pow(&n, g) * &denom < numer {
        n += 1;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic_product::{
        closed_form_index, intersection_form, standard_ample, ProductClass,
    };
    use crate::qstr::rat;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn setup() -> (IntersectionForm, NumClass) {
        (intersection_form(), standard_ample())
    }

    fn qpoly(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| rat(&c.to_string())).collect())
    }

    #[test]
    fn index_of_the_three_chamber_representatives() {
        let (form, ample) = setup();

        let cert = mumford_index(&form, &ample, &NumClass::from_ints(&[-3, 0, 1])).unwrap();
        assert_eq!(cert.poly, qpoly(&[-1, -3, 1]));
        assert_eq!(cert.chi, rat("-1"));
        assert_eq!(cert.real_root_count_with_mult, 2);
        assert_eq!(cert.positive_root_count_with_mult, 1);
        assert_eq!(cert.index, 1);

        let cert = mumford_index(&form, &ample, &NumClass::from_ints(&[1, 1, 0])).unwrap();
        assert_eq!(cert.poly, qpoly(&[1, 2, 1]));
        assert_eq!(cert.index, 0);

        let cert = mumford_index(&form, &ample, &NumClass::from_ints(&[-1, -1, 0])).unwrap();
        assert_eq!(cert.poly, qpoly(&[1, -2, 1]));
        assert_eq!(cert.positive_root_count_with_mult, 2);
        assert_eq!(cert.index, 2);
    }

    #[test]
    fn index_error_paths() {
        let (form, ample) = setup();
        assert_eq!(
            mumford_index(&form, &ample, &NumClass::from_ints(&[1, 0, 0])),
            Err(Error::DegenerateClass)
        );
        assert_eq!(
            mumford_index(
                &form,
                &NumClass::from_ints(&[1, 0, 0]),
                &NumClass::from_ints(&[1, 1, 0])
            ),
            Err(Error::ReferenceNotAmple)
        );

        // A positive-definite form is not geometric: the displacement
        // polynomial N^2 + 1 has no real roots at all.
        let mut monomials = BTreeMap::new();
        monomials.insert(vec![2, 0], Int::from(2));
        monomials.insert(vec![0, 2], Int::from(2));
        let definite =
            IntersectionForm::new(2, vec!["x".into(), "y".into()], monomials).unwrap();
        assert_eq!(
            mumford_index(
                &definite,
                &NumClass::from_ints(&[1, 0]),
                &NumClass::from_ints(&[0, 1])
            ),
            Err(Error::InconsistentData)
        );
    }

    #[test]
    fn index_works_on_rational_classes() {
        let (form, ample) = setup();
        let half = NumClass::new(vec![rat("-3/2"), rat("0"), rat("1/2")]);
        let cert = mumford_index(&form, &ample, &half).unwrap();
        assert_eq!(cert.index, 1);
        assert_eq!(cert.chi, rat("-1/4"));
    }

    #[test]
    fn pair_condition_on_the_worked_examples() {
        let (form, ample) = setup();

        let report = pair_index_condition(
            &form,
            &ample,
            &NumClass::from_ints(&[-3, 0, 1]),
            &NumClass::from_ints(&[1, -1, 0]),
        )
        .unwrap();
        assert_eq!(
            (report.chi_l, report.chi_m, report.chi_lm),
            (rat("-1"), rat("-1"), rat("1"))
        );
        assert_eq!((report.i_l, report.i_m, report.i_lm), (Some(1), Some(1), Some(2)));
        assert!(report.holds);

        let report = pair_index_condition(
            &form,
            &ample,
            &NumClass::from_ints(&[1, 1, 0]),
            &NumClass::from_ints(&[-1, -1, 0]),
        )
        .unwrap();
        assert!(report.chi_lm.is_zero());
        assert_eq!(report.i_lm, None);
        assert!(!report.holds);

        let report = pair_index_condition(
            &form,
            &ample,
            &NumClass::from_ints(&[1, 1, 0]),
            &NumClass::from_ints(&[3, 3, 0]),
        )
        .unwrap();
        assert_eq!(
            (report.chi_l, report.chi_m, report.chi_lm),
            (rat("1"), rat("9"), rat("16"))
        );
        assert_eq!((report.i_l, report.i_m, report.i_lm), (Some(0), Some(0), Some(0)));
        assert!(report.holds);
    }

    #[test]
    fn segment_between_nearby_ample_classes_is_constant() {
        let (form, ample) = setup();
        let report = segment_index(
            &form,
            &ample,
            &NumClass::from_ints(&[1, 1, 0]),
            &NumClass::from_ints(&[2, 2, 0]),
        )
        .unwrap();
        assert_eq!(report.poly_on_segment, qpoly(&[4, -4, 1]));
        assert_eq!(report.roots_in_unit_interval, 0);
        assert_eq!(report.verdict, SegmentVerdict::ConstantIndex { index: 0 });
    }

    #[test]
    fn segment_through_the_degenerate_wall_reports_the_crossing() {
        let (form, ample) = setup();
        let report = segment_index(
            &form,
            &ample,
            &NumClass::from_ints(&[1, 1, 0]),
            &NumClass::from_ints(&[-1, -1, 0]),
        )
        .unwrap();
        assert_eq!(report.poly_on_segment, qpoly(&[1, -4, 4]));
        assert_eq!(report.roots_in_unit_interval, 1);
        match &report.verdict {
            SegmentVerdict::VanishesOnSegment { roots } => {
                assert_eq!(roots.len(), 1);
                let half = rat("1/2");
                assert!(roots[0].lo <= half && half <= roots[0].hi);
                assert!(roots[0].lo >= rat("0") && roots[0].hi <= rat("1"));
            }
            other => panic!("expected a crossing, got {other:?}"),
        }
    }

    #[test]
    fn segment_with_equal_endpoints_and_degenerate_endpoints() {
        let (form, ample) = setup();
        let eta = NumClass::from_ints(&[-3, 0, 1]);
        let report = segment_index(&form, &ample, &eta, &eta).unwrap();
        assert_eq!(report.verdict, SegmentVerdict::ConstantIndex { index: 1 });

        assert_eq!(
            segment_index(&form, &ample, &eta, &NumClass::from_ints(&[1, 0, 0])),
            Err(Error::DegenerateClass)
        );
    }

    #[test]
    fn threshold_certificate_for_the_vanishing_family() {
        let (form, ample) = setup();
        let cert = stability_threshold(
            &form,
            &ample,
            &NumClass::from_ints(&[1, 1, 0]),
            &NumClass::from_ints(&[-5, 0, 0]),
        )
        .unwrap();
        assert_eq!(cert.reference_index, 0);
        assert_eq!(cert.bound_used, rat("6"));
        assert_eq!(cert.a0, Int::from(6));
        assert_eq!(cert.checked_range.len(), 6);

        let at_five = &cert.checked_range[4];
        assert_eq!(at_five.a, Int::from(5));
        assert!(at_five.chi.is_zero());
        assert_eq!(at_five.index, None);
        assert!(!at_five.passes);

        let at_six = &cert.checked_range[5];
        assert!(at_six.passes);
        assert_eq!(at_six.index, Some(0));

        assert_eq!(cert.segment_witness_a, Int::from(7));
        assert!(matches!(
            cert.segment.verdict,
            SegmentVerdict::ConstantIndex { index: 0 }
        ));
    }

    #[test]
    fn threshold_is_immediate_for_the_zero_perturbation() {
        let (form, ample) = setup();
        let cert = stability_threshold(
            &form,
            &ample,
            &NumClass::from_ints(&[-3, 0, 1]),
            &NumClass::from_ints(&[0, 0, 0]),
        )
        .unwrap();
        assert_eq!(cert.a0, Int::from(1));
        assert!(cert.checked_range.iter().all(|p| p.passes));
    }

    #[test]
    fn threshold_with_an_index_flip_below_the_bound() {
        // The family chi(a eta + xi) = -a^2 + 3a - 1 is positive at a = 1
        // and 2, where the classes sit in the wrong chamber with index 2,
        // and stays negative with the right index from a = 3 on.
        let (form, ample) = setup();
        let cert = stability_threshold(
            &form,
            &ample,
            &NumClass::from_ints(&[-3, 0, 1]),
            &NumClass::from_ints(&[1, -1, 0]),
        )
        .unwrap();
        assert_eq!(cert.reference_index, 1);
        assert_eq!(cert.bound_used, rat("4"));
        assert_eq!(cert.a0, Int::from(3));
        let verdicts: Vec<(Option<usize>, bool)> = cert
            .checked_range
            .iter()
            .map(|p| (p.index, p.passes))
            .collect();
        assert_eq!(
            verdicts,
            vec![
                (Some(2), false),
                (Some(2), false),
                (Some(1), true),
                (Some(1), true),
            ]
        );
    }

    #[test]
    fn threshold_rejects_non_integral_and_degenerate_input() {
        let (form, ample) = setup();
        assert_eq!(
            stability_threshold(
                &form,
                &ample,
                &NumClass::new(vec![rat("1/2"), rat("1"), rat("0")]),
                &NumClass::from_ints(&[1, 0, 0]),
            ),
            Err(Error::NonIntegralClass)
        );
        assert_eq!(
            stability_threshold(
                &form,
                &ample,
                &NumClass::from_ints(&[1, 0, 0]),
                &NumClass::from_ints(&[0, 1, 0]),
            ),
            Err(Error::DegenerateClass)
        );
    }

    #[test]
    fn asymptotic_cohomology_concentrates_in_the_index_degree() {
        let (form, ample) = setup();
        let eta = NumClass::from_ints(&[-3, 0, 1]);
        assert_eq!(hhat(&form, &ample, &eta, 1).unwrap(), rat("2"));
        assert_eq!(hhat(&form, &ample, &eta, 0).unwrap(), rat("0"));
        assert_eq!(hhat(&form, &ample, &eta, 2).unwrap(), rat("0"));
        assert_eq!(
            hhat(&form, &ample, &NumClass::from_ints(&[1, 0, 0]), 1).unwrap(),
            rat("0")
        );
        assert!(hhat(&form, &ample, &eta, 3).is_err());
    }

    #[test]
    fn naive_ampleness_thresholds_at_the_index() {
        let (form, ample) = setup();
        assert!(naive_q_ample(&form, &ample, &NumClass::from_ints(&[1, 1, 0]), 0).unwrap());
        assert!(!naive_q_ample(&form, &ample, &NumClass::from_ints(&[-3, 0, 1]), 0).unwrap());
        assert!(naive_q_ample(&form, &ample, &NumClass::from_ints(&[-3, 0, 1]), 1).unwrap());
        assert!(!naive_q_ample(&form, &ample, &NumClass::from_ints(&[-1, -1, 0]), 1).unwrap());
        assert!(naive_q_ample(&form, &ample, &NumClass::from_ints(&[-1, -1, 0]), 2).unwrap());
        assert_eq!(
            naive_q_ample(&form, &ample, &NumClass::from_ints(&[1, 0, 0]), 0),
            Err(Error::DegenerateClass)
        );
    }

    #[test]
    fn surjectivity_bound_for_the_cup_product_family() {
        let (form, ample) = setup();
        let other = NumClass::from_ints(&[1, -1, 0]);
        for (m, expected) in [(3i64, 1), (4, 2), (6, 2), (11, 3), (27, 5)] {
            let l = NumClass::from_ints(&[-m, 0, 1]);
            assert_eq!(
                surjectivity_lower_bound(&form, &ample, &l, &other).unwrap(),
                Int::from(expected),
                "level m = {m}"
            );
        }
        assert_eq!(
            surjectivity_lower_bound(
                &form,
                &ample,
                &NumClass::from_ints(&[1, 1, 0]),
                &NumClass::from_ints(&[-1, -1, 0])
            ),
            Err(Error::PairConditionFails)
        );
    }

    fn arb_nondegenerate() -> impl Strategy<Value = NumClass> {
        (-9i64..=9, -9i64..=9, -9i64..=9)
            .prop_map(|(a, b, c)| NumClass::from_ints(&[a, b, c]))
            .prop_filter("nonzero chi", |class| {
                !ProductClass::from_class(class).unwrap().discriminant().is_zero()
            })
    }

    proptest! {
        /// The index is invariant under positive integer scaling.
        #[test]
        fn scaling_invariance(eta in arb_nondegenerate(), k in 1i64..=5) {
            let (form, ample) = setup();
            let base = mumford_index(&form, &ample, &eta).unwrap().index;
            let scaled = mumford_index(&form, &ample, &eta.scale_int(k)).unwrap().index;
            prop_assert_eq!(base, scaled);
        }

        /// Negation flips the index to its complement.
        #[test]
        fn duality_under_negation(eta in arb_nondegenerate()) {
            let (form, ample) = setup();
            let base = mumford_index(&form, &ample, &eta).unwrap().index;
            let flipped = mumford_index(&form, &ample, &eta.neg()).unwrap().index;
            prop_assert_eq!(base + flipped, 2);
        }

        /// Any reference class of index 0 gives the same answer.
        #[test]
        fn reference_independence(eta in arb_nondegenerate(), which in 0usize..4) {
            let (form, ample) = setup();
            let alternates = [[1i64, 1, 0], [2, 3, 0], [1, 2, 1], [3, 1, 1]];
            let alt = NumClass::from_ints(&alternates[which]);
            let base = mumford_index(&form, &ample, &eta).unwrap().index;
            let other = mumford_index(&form, &alt, &eta).unwrap().index;
            prop_assert_eq!(base, other);
        }

        /// A constant-index verdict always matches the independently
        /// computed chamber of both endpoints.
        #[test]
        fn segment_soundness(eta in arb_nondegenerate(), xi in arb_nondegenerate()) {
            let (form, ample) = setup();
            let report = segment_index(&form, &ample, &eta, &xi).unwrap();
            if let SegmentVerdict::ConstantIndex { index } = report.verdict {
                let left = closed_form_index(&ProductClass::from_class(&eta).unwrap()).unwrap();
                let right = closed_form_index(&ProductClass::from_class(&xi).unwrap()).unwrap();
                prop_assert_eq!(index, left);
                prop_assert_eq!(index, right);
            }
        }

        /// The certified threshold equals the one found by brute force
        /// over the finite window that provably contains it.
        #[test]
        fn threshold_matches_brute_force(
            eta in arb_nondegenerate(),
            xi in (-9i64..=9, -9i64..=9, -9i64..=9)
                .prop_map(|(a, b, c)| NumClass::from_ints(&[a, b, c])),
        ) {
            let (form, ample) = setup();
            let cert = stability_threshold(&form, &ample, &eta, &xi).unwrap();
            let reference = mumford_index(&form, &ample, &eta).unwrap().index;
            let top = cert.bound_used.ceil().to_integer() + 5;
            let mut brute = Int::one();
            let mut a = Int::one();
            while a <= top {
                let class = eta.scale(&Rat::from_integer(a.clone())).add(&xi);
                let chi = form.euler_char(&class).unwrap();
                let passes = !chi.is_zero()
                    && mumford_index(&form, &ample, &class).unwrap().index == reference;
                if !passes {
                    brute = a.clone() + 1;
                }
                a += 1;
            }
            prop_assert_eq!(cert.a0, brute);
        }

        /// Scaling the class scales the asymptotic cohomology by k^g.
        #[test]
        fn hhat_homogeneity(eta in arb_nondegenerate(), k in 1i64..=4, q in 0usize..=2) {
            let (form, ample) = setup();
            let base = hhat(&form, &ample, &eta, q).unwrap();
            let scaled = hhat(&form, &ample, &eta.scale_int(k), q).unwrap();
            prop_assert_eq!(scaled, base * rat(&(k * k).to_string()));
        }
    }
}
