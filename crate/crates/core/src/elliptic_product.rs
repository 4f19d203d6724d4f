//! The product of two elliptic curves as a self-contained worked example:
//! a fixed rank-3 intersection form, a closed-form index trichotomy, and
//! the dimension, rank, and first-Chern-class bookkeeping of the standard
//! cup-product family on that surface.

use crate::chi::{IntersectionForm, NumClass};
use crate::error::{Error, Result};
use crate::index::mumford_index;
use crate::qstr::{int_str, rat_str};
use crate::{Int, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Numerical class `a f1 + b f2 + c gamma` on the product surface, where
/// `f1` and `f2` are the two fiber classes and `gamma` is the difference of
/// the graph of the identity and both fibers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductClass {
    #[serde(with = "rat_str")]
    pub a: Rat,
    #[serde(with = "rat_str")]
    pub b: Rat,
    #[serde(with = "rat_str")]
    pub c: Rat,
}

impl ProductClass {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        ProductClass { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        ProductClass {
            a: Rat::from_integer(Int::from(a)),
            b: Rat::from_integer(Int::from(b)),
            c: Rat::from_integer(Int::from(c)),
        }
    }

    pub fn to_class(&self) -> NumClass {
        NumClass::new(vec![self.a.clone(), self.b.clone(), self.c.clone()])
    }

    pub fn from_class(class: &NumClass) -> Result<Self> {
        if class.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                got: class.dim(),
            });
        }
        let c = class.coeffs();
        Ok(ProductClass::new(c[0].clone(), c[1].clone(), c[2].clone()))
    }

    /// `ab - c^2`, which is both the Euler characteristic of the class and
    /// the discriminant deciding the index trichotomy.
    pub fn discriminant(&self) -> Rat {
        self.a.clone() * self.b.clone() - self.c.clone() * self.c.clone()
    }
}

/// Intersection form of the product of two elliptic curves without extra
/// correspondences: `f1 f2 = 1`, `gamma^2 = -2`, all other degree-2
/// monomials zero, so that the Euler characteristic is `ab - c^2`.
pub fn intersection_form() -> IntersectionForm {
    let mut monomials = BTreeMap::new();
    monomials.insert(vec![1, 1, 0], Int::from(1));
    monomials.insert(vec![0, 0, 2], Int::from(-2));
    IntersectionForm::new(
        2,
        vec!["f1".into(), "f2".into(), "gamma".into()],
        monomials,
    )
    .expect("the fixed product-surface form is well formed")
}

/// The ample reference class `f1 + f2` used throughout this module.
pub fn standard_ample() -> NumClass {
    NumClass::from_ints(&[1, 1, 0])
}

/// Index of a non-degenerate class read off the chamber structure of the
/// rank-3 lattice: 1 when `ab - c^2 < 0`, otherwise 0 or 2 according to
/// the sign of `a + b`.
pub fn closed_form_index(class: &ProductClass) -> Result<usize> {
    let d = class.discriminant();
    if d.is_zero() {
        return Err(Error::DegenerateClass);
    }
    if d < Rat::zero() {
        return Ok(1);
    }
    // d > 0 forces ab > c^2 >= 0, so a and b share a strict sign and a + b
    // cannot vanish.
    if self_sum(class) > Rat::zero() {
        Ok(0)
    } else {
        Ok(2)
    }
}

fn self_sum(class: &ProductClass) -> Rat {
    class.a.clone() + class.b.clone()
}

/// First cohomology of the n-th powers of the two bundles in the level-m
/// cup-product family, and second cohomology of their tensor product.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionCounts {
    pub m: u32,
    pub n: u32,
    #[serde(with = "int_str")]
    pub h1_l: Int,
    #[serde(with = "int_str")]
    pub h1_m: Int,
    #[serde(with = "int_str")]
    pub h2_lm: Int,
}

fn family_classes(m: u32) -> (ProductClass, ProductClass) {
    let l = ProductClass::from_ints(-(m as i64), 0, 1);
    let other = ProductClass::from_ints(1, -1, 0);
    (l, other)
}

fn abs_integer_chi(form: &IntersectionForm, class: &NumClass) -> Result<Int> {
    let chi = form.euler_char(class)?;
    assert!(chi.is_integer(), "integral classes have integer chi here");
    Ok(chi.to_integer().abs())
}

/// Computes the cohomology dimensions `(n^2, n^2, n^2 (m - 2))` of the
/// level-m family from the form itself, checking the indices (1, 1, 2)
/// that concentrate each dimension in a single degree.
pub fn dimension_counts(m: u32, n: u32) -> Result<DimensionCounts> {
    if m < 3 {
        return Err(Error::BadInput(
            "the cup-product family needs m >= 3".into(),
        ));
    }
    if n == 0 {
        return Err(Error::BadInput("the power n must be positive".into()));
    }
    let form = intersection_form();
    let (l, other) = family_classes(m);
    let nl = l.to_class().scale_int(n as i64);
    let nm = other.to_class().scale_int(n as i64);
    let nsum = nl.add(&nm);
    for (class, expected) in [(&nl, 1), (&nm, 1), (&nsum, 2)] {
        let idx = closed_form_index(&ProductClass::from_class(class)?)?;
        assert_eq!(idx, expected, "family index is pinned by the chamber");
    }
    Ok(DimensionCounts {
        m,
        n,
        h1_l: abs_integer_chi(&form, &nl)?,
        h1_m: abs_integer_chi(&form, &nm)?,
        h2_lm: abs_integer_chi(&form, &nsum)?,
    })
}

/// Rank and first Chern class of the pushforward bundle attached to the
/// level-m family: rank `|chi(L + M)| = m - 2` and
/// `ch1 = chi(M) L + chi(L) M`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PushforwardReport {
    pub m: u32,
    #[serde(with = "int_str")]
    pub rank: Int,
    pub ch1: ProductClass,
}

pub fn pushforward_report(m: u32) -> Result<PushforwardReport> {
    if m < 3 {
        return Err(Error::BadInput(
            "the cup-product family needs m >= 3".into(),
        ));
    }
    let form = intersection_form();
    let (l, other) = family_classes(m);
    let chi_l = form.euler_char(&l.to_class())?;
    let chi_m = form.euler_char(&other.to_class())?;
    let rank = abs_integer_chi(&form, &l.to_class().add(&other.to_class()))?;
    let ch1 = l.to_class().scale(&chi_m).add(&other.to_class().scale(&chi_l));
    Ok(PushforwardReport {
        m,
        rank,
        ch1: ProductClass::from_class(&ch1)?,
    })
}

/// Tally of an exhaustive integer-box sweep comparing the closed-form
/// classification with the root-counting index on every non-degenerate
/// class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub radius: u32,
    pub classes: usize,
    pub degenerate: usize,
    pub by_index: [usize; 3],
    pub oracle_agreements: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DemoReport {
    pub sweep: SweepSummary,
    pub dimensions: Vec<DimensionCounts>,
    pub pushforwards: Vec<PushforwardReport>,
}

/// Sweeps the integer box of the given radius, classifies every
/// non-degenerate class both by the closed form and by root counting, and
/// tabulates dimension and pushforward data for levels `3..=m_max`.
pub fn demo_report(radius: u32, m_max: u32, n_max: u32) -> Result<DemoReport> {
    if m_max < 3 {
        return Err(Error::BadInput("m_max must be at least 3".into()));
    }
    if n_max == 0 {
        return Err(Error::BadInput("n_max must be positive".into()));
    }
    let form = intersection_form();
    let ample = standard_ample();
    let r = radius as i64;
    let mut classes = 0usize;
    let mut degenerate = 0usize;
    let mut by_index = [0usize; 3];
    let mut oracle_agreements = 0usize;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let class = ProductClass::from_ints(a, b, c);
                if class.discriminant().is_zero() {
                    degenerate += 1;
                    continue;
                }
                classes += 1;
                let closed = closed_form_index(&class)?;
                by_index[closed] += 1;
                let cert = mumford_index(&form, &ample, &class.to_class())?;
                if cert.index == closed {
                    oracle_agreements += 1;
                } else {
                    return Err(Error::InconsistentData);
                }
            }
        }
    }
    let mut dimensions = Vec::new();
    let mut pushforwards = Vec::new();
    for m in 3..=m_max {
        for n in 1..=n_max {
            dimensions.push(dimension_counts(m, n)?);
        }
        pushforwards.push(pushforward_report(m)?);
    }
    Ok(DemoReport {
        sweep: SweepSummary {
            radius,
            classes,
            degenerate,
            by_index,
            oracle_agreements,
        },
        dimensions,
        pushforwards,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstr::rat;
    use proptest::prelude::*;

    #[test]
    fn form_matches_the_closed_euler_characteristic() {
        let form = intersection_form();
        assert_eq!(form.g(), 2);
        assert_eq!(form.m(), 3);
        let chi = |a: i64, b: i64, c: i64| {
            form.euler_char(&NumClass::from_ints(&[a, b, c])).unwrap()
        };
        assert_eq!(chi(1, 1, 0), rat("1"));
        assert_eq!(chi(0, 0, 1), rat("-1"));
        assert_eq!(chi(1, 0, 0), rat("0"));
        assert_eq!(chi(-3, 0, 1), rat("-1"));
    }

    #[test]
    fn trichotomy_on_representative_classes() {
        assert_eq!(
            closed_form_index(&ProductClass::from_ints(-3, 0, 1)).unwrap(),
            1
        );
        assert_eq!(
            closed_form_index(&ProductClass::from_ints(1, 1, 0)).unwrap(),
            0
        );
        assert_eq!(
            closed_form_index(&ProductClass::from_ints(-1, -1, 0)).unwrap(),
            2
        );
        assert_eq!(
            closed_form_index(&ProductClass::from_ints(1, 0, 0)),
            Err(Error::DegenerateClass)
        );
    }

    #[test]
    fn sign_law_is_visible_in_the_closed_form() {
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    let class = ProductClass::from_ints(a, b, c);
                    let d = class.discriminant();
                    if d.is_zero() {
                        continue;
                    }
                    let idx = closed_form_index(&class).unwrap();
                    assert_eq!(idx == 1, d < Rat::zero());
                    if d > Rat::zero() {
                        assert!(!self_sum(&class).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_counts_match_the_printed_formulae() {
        let triple = |m, n| {
            let counts = dimension_counts(m, n).unwrap();
            (counts.h1_l, counts.h1_m, counts.h2_lm)
        };
        assert_eq!(
            triple(3, 1),
            (Int::from(1), Int::from(1), Int::from(1))
        );
        assert_eq!(
            triple(6, 2),
            (Int::from(4), Int::from(4), Int::from(16))
        );
        assert_eq!(
            triple(4, 1),
            (Int::from(1), Int::from(1), Int::from(2))
        );
        assert!(dimension_counts(2, 1).is_err());
        assert!(dimension_counts(5, 0).is_err());
    }

    #[test]
    fn pushforward_rank_and_chern_class() {
        let report = pushforward_report(3).unwrap();
        assert_eq!(report.rank, Int::from(1));
        assert_eq!(report.ch1, ProductClass::from_ints(2, 1, -1));
        assert_ne!(report.ch1, ProductClass::from_ints(0, 0, 0));

        assert_eq!(pushforward_report(4).unwrap().rank, Int::from(2));
        for m in 3..=9u32 {
            let r = pushforward_report(m).unwrap();
            assert_eq!(r.rank, Int::from(m as i64 - 2));
            assert_eq!(r.ch1, ProductClass::from_ints(m as i64 - 1, 1, -1));
        }
        assert!(pushforward_report(2).is_err());
    }

    #[test]
    fn demo_report_tallies_are_consistent() {
        let report = demo_report(2, 4, 2).unwrap();
        assert_eq!(
            report.sweep.classes + report.sweep.degenerate,
            5usize.pow(3)
        );
        assert_eq!(report.sweep.oracle_agreements, report.sweep.classes);
        assert_eq!(
            report.sweep.by_index.iter().sum::<usize>(),
            report.sweep.classes
        );
        assert_eq!(report.dimensions.len(), 4);
        assert_eq!(report.pushforwards.len(), 2);
    }

    proptest! {
        /// Every non-degenerate rational class lands in exactly one chamber
        /// and the chamber determines the sign of chi.
        #[test]
        fn trichotomy_is_total_and_sign_consistent(
            an in -40i64..=40, bn in -40i64..=40, cn in -40i64..=40,
            d in 1i64..=4,
        ) {
            let class = ProductClass::new(
                Rat::new(an.into(), d.into()),
                Rat::new(bn.into(), d.into()),
                Rat::new(cn.into(), d.into()),
            );
            let disc = class.discriminant();
            prop_assume!(!disc.is_zero());
            let idx = closed_form_index(&class).unwrap();
            prop_assert!(idx <= 2);
            prop_assert_eq!(idx == 1, disc < Rat::zero());
            prop_assert_eq!(idx % 2 == 0, disc > Rat::zero());
        }
    }
}
