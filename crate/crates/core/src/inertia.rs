//! Exact inertia of Hermitian matrices with Gaussian-rational entries.
//!
//! The characteristic polynomial is computed by fraction-free elimination,
//! so its coefficients are exact rationals, and the eigenvalue sign counts
//! come from root counting on that polynomial. No numerical linear algebra
//! is involved anywhere.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::qstr::{parse_rat, rat_string};
use crate::roots::{count_real_roots, OpenInterval};
use crate::scalar::GaussRat;
use crate::Rat;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Square matrix equal to its own conjugate transpose, with Gaussian
/// rational entries. The diagonal is forced real by the defining symmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Vec<GaussRat>>,
}

impl HermitianMatrix {
    /// Validating constructor: the matrix must be square, nonempty, and
    /// equal to its conjugate transpose.
    pub fn new(entries: Vec<Vec<GaussRat>>) -> Result<Self> {
        let dim = entries.len();
        if dim == 0 {
            return Err(Error::BadInput("empty matrix".into()));
        }
        if entries.iter().any(|row| row.len() != dim) {
            return Err(Error::BadInput("matrix is not square".into()));
        }
        for j in 0..dim {
            for k in j..dim {
                if entries[j][k] != entries[k][j].conj() {
                    return Err(Error::NotHermitian);
                }
            }
        }
        Ok(HermitianMatrix { dim, entries })
    }

    /// Diagonal matrix with the given real entries.
    pub fn from_diagonal(diagonal: &[Rat]) -> Result<Self> {
        let dim = diagonal.len();
        let entries = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|k| {
                        if j == k {
                            GaussRat::from_real(diagonal[j].clone())
                        } else {
                            GaussRat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        HermitianMatrix::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, j: usize, k: usize) -> &GaussRat {
        &self.entries[j][k]
    }

    pub fn add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let entries = (0..self.dim)
            .map(|j| {
                (0..self.dim)
                    .map(|k| self.entries[j][k].clone() + other.entries[j][k].clone())
                    .collect()
            })
            .collect();
        HermitianMatrix::new(entries)
    }
}

impl Serialize for HermitianMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[String; 2]>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| [rat_string(&e.re), rat_string(&e.im)])
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("HermitianMatrix", 2)?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("entries", &rows)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for HermitianMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            dim: usize,
            entries: Vec<Vec<[String; 2]>>,
        }
        let doc = Doc::deserialize(d)?;
        let entries = doc
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|[re, im]| {
                        Ok(GaussRat::new(
                            parse_rat(re).map_err(de::Error::custom)?,
                            parse_rat(im).map_err(de::Error::custom)?,
                        ))
                    })
                    .collect::<std::result::Result<Vec<GaussRat>, D::Error>>()
            })
            .collect::<std::result::Result<Vec<Vec<GaussRat>>, D::Error>>()?;
        let matrix = HermitianMatrix::new(entries).map_err(de::Error::custom)?;
        if matrix.dim() != doc.dim {
            return Err(de::Error::custom("declared dim does not match entries"));
        }
        Ok(matrix)
    }
}

/// Eigenvalue sign counts of a Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Characteristic polynomial `det(lambda I - H)`, computed by fraction-free
/// elimination over Gaussian-rational polynomials; the result is monic with
/// rational coefficients.
pub fn char_poly(h: &HermitianMatrix) -> Result<Polynomial<Rat>> {
    let n = h.dim();
    let mut m: Vec<Vec<Polynomial<GaussRat>>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    let neg = -h.entry(j, k).clone();
                    if j == k {
                        Polynomial::new(vec![neg, GaussRat::one()])
                    } else {
                        Polynomial::constant(neg)
                    }
                })
                .collect()
        })
        .collect();

    let mut flipped = false;
    let mut prev: Polynomial<GaussRat> = Polynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    flipped = !flipped;
                }
                None => return Ok(Polynomial::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let scaled = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = scaled.exact_div(&prev);
            }
            m[i][k] = Polynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = if flipped {
        -&m[n - 1][n - 1]
    } else {
        m[n - 1][n - 1].clone()
    };
    let coeffs = det
        .coeffs()
        .iter()
        .map(|c| {
            assert!(
                c.im.is_zero(),
                "Hermitian characteristic polynomials are real"
            );
            c.re.clone()
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Counts positive, negative, and zero eigenvalues with multiplicity. The
/// zero count is the valuation of the characteristic polynomial at the
/// origin; the rest comes from root counting. A real-root total short of
/// the dimension means the input was not Hermitian after all and is
/// reported as inconsistent.
pub fn inertia_of(h: &HermitianMatrix) -> Result<Inertia> {
    let cp = char_poly(h)?;
    let zero = cp
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    let nonzero_part = Polynomial::new(cp.coeffs()[zero..].to_vec());
    let positive = count_real_roots(&nonzero_part, &OpenInterval::positive(), true)?;
    let negative = count_real_roots(&nonzero_part, &OpenInterval::negative(), true)?;
    if positive + negative + zero != h.dim() {
        return Err(Error::InconsistentData);
    }
    Ok(Inertia {
        positive,
        negative,
        zero,
    })
}

/// Inertia of two Hermitian matrices and their sum, with the verdict of
/// the negative-count bookkeeping: all three non-degenerate and negative
/// counts exactly `p`, `q`, and `p + q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InertiaSumCheck {
    pub first: Inertia,
    pub second: Inertia,
    pub sum: Inertia,
    pub holds: bool,
}

pub fn inertia_sum_check(
    h1: &HermitianMatrix,
    h2: &HermitianMatrix,
    p: usize,
    q: usize,
) -> Result<InertiaSumCheck> {
    let first = inertia_of(h1)?;
    let second = inertia_of(h2)?;
    let sum = inertia_of(&h1.add(h2)?)?;
    let non_degenerate = first.zero == 0 && second.zero == 0 && sum.zero == 0;
    let holds = non_degenerate
        && first.negative == p
        && second.negative == q
        && sum.negative == p + q;
    Ok(InertiaSumCheck {
        first,
        second,
        sum,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstr::rat;
    use proptest::prelude::*;

    fn real(x: i64) -> GaussRat {
        GaussRat::from_real(rat(&x.to_string()))
    }

    fn diag(values: &[i64]) -> HermitianMatrix {
        let reals: Vec<Rat> = values.iter().map(|&v| rat(&v.to_string())).collect();
        HermitianMatrix::from_diagonal(&reals).unwrap()
    }

    fn qpoly(coeffs: &[i64]) -> Polynomial<Rat> {
        Polynomial::new(coeffs.iter().map(|&c| rat(&c.to_string())).collect())
    }

    #[test]
    fn characteristic_polynomials_of_small_matrices() {
        assert_eq!(char_poly(&diag(&[1, -1])).unwrap(), qpoly(&[-1, 0, 1]));

        let flip = HermitianMatrix::new(vec![
            vec![real(0), real(1)],
            vec![real(1), real(0)],
        ])
        .unwrap();
        assert_eq!(char_poly(&flip).unwrap(), qpoly(&[-1, 0, 1]));

        let imaginary = HermitianMatrix::new(vec![
            vec![GaussRat::zero(), GaussRat::i()],
            vec![-GaussRat::i(), GaussRat::zero()],
        ])
        .unwrap();
        assert_eq!(char_poly(&imaginary).unwrap(), qpoly(&[-1, 0, 1]));

        let shifted = HermitianMatrix::new(vec![
            vec![real(2), real(1)],
            vec![real(1), real(2)],
        ])
        .unwrap();
        assert_eq!(char_poly(&shifted).unwrap(), qpoly(&[3, -4, 1]));
    }

    #[test]
    fn rejects_non_hermitian_input() {
        assert_eq!(
            HermitianMatrix::new(vec![
                vec![real(0), real(1)],
                vec![real(2), real(0)],
            ]),
            Err(Error::NotHermitian)
        );
        assert_eq!(
            HermitianMatrix::new(vec![vec![GaussRat::i()]]),
            Err(Error::NotHermitian)
        );
        assert_eq!(
            HermitianMatrix::new(vec![
                vec![GaussRat::zero(), GaussRat::i()],
                vec![GaussRat::i(), GaussRat::zero()],
            ]),
            Err(Error::NotHermitian)
        );
        assert!(HermitianMatrix::new(vec![]).is_err());
        assert!(HermitianMatrix::new(vec![vec![real(1), real(2)]]).is_err());
    }

    #[test]
    fn inertia_of_examples() {
        let tally = |i: Inertia| (i.positive, i.negative, i.zero);
        assert_eq!(tally(inertia_of(&diag(&[2, 3])).unwrap()), (2, 0, 0));
        let shifted = HermitianMatrix::new(vec![
            vec![real(2), real(1)],
            vec![real(1), real(2)],
        ])
        .unwrap();
        assert_eq!(tally(inertia_of(&shifted).unwrap()), (2, 0, 0));
        assert_eq!(tally(inertia_of(&diag(&[1, -1, 0])).unwrap()), (1, 1, 1));
        assert_eq!(tally(inertia_of(&diag(&[0, 0])).unwrap()), (0, 0, 2));
    }

    #[test]
    fn sum_check_on_the_three_bookkeeping_cases() {
        let report = inertia_sum_check(&diag(&[-1, 1]), &diag(&[1, -1]), 1, 1).unwrap();
        assert_eq!(report.sum.zero, 2);
        assert!(!report.holds);

        let report = inertia_sum_check(&diag(&[-3, 1]), &diag(&[1, -3]), 1, 1).unwrap();
        assert_eq!(
            (report.first.negative, report.second.negative, report.sum.negative),
            (1, 1, 2)
        );
        assert!(report.holds);

        let report = inertia_sum_check(&diag(&[1, 1]), &diag(&[1, 1]), 0, 0).unwrap();
        assert!(report.holds);

        assert_eq!(
            inertia_sum_check(&diag(&[1]), &diag(&[1, 1]), 0, 0),
            Err(Error::DimensionMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn serialization_uses_re_im_string_pairs() {
        let imaginary = HermitianMatrix::new(vec![
            vec![GaussRat::zero(), GaussRat::i()],
            vec![-GaussRat::i(), GaussRat::zero()],
        ])
        .unwrap();
        let text = serde_json::to_string(&imaginary).unwrap();
        assert_eq!(
            text,
            r#"{"dim":2,"entries":[[["0/1","0/1"],["0/1","1/1"]],[["0/1","-1/1"],["0/1","0/1"]]]}"#
        );
        let back: HermitianMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, imaginary);

        let tampered = text.replace("\"dim\":2", "\"dim\":3");
        assert!(serde_json::from_str::<HermitianMatrix>(&tampered).is_err());
        let broken =
            r#"{"dim":2,"entries":[[["0/1","0/1"],["0/1","1/1"]],[["0/1","1/1"],["0/1","0/1"]]]}"#;
        assert!(serde_json::from_str::<HermitianMatrix>(broken).is_err());
    }

    fn arb_hermitian(max_dim: usize) -> impl Strategy<Value = HermitianMatrix> {
        (1..=max_dim)
            .prop_flat_map(|n| {
                let lower = proptest::collection::vec((-6i64..=6, -6i64..=6), n * n);
                let diagonal = proptest::collection::vec(-6i64..=6, n);
                (Just(n), lower, diagonal)
            })
            .prop_map(|(n, lower, diagonal)| {
                let mut entries = vec![vec![GaussRat::zero(); n]; n];
                for j in 0..n {
                    entries[j][j] = real(diagonal[j]);
                    for k in 0..j {
                        let (re, im) = lower[j * n + k];
                        let value = GaussRat::new(
                            rat(&re.to_string()),
                            rat(&im.to_string()),
                        );
                        entries[j][k] = value.clone();
                        entries[k][j] = value.conj();
                    }
                }
                HermitianMatrix::new(entries).unwrap()
            })
    }

    proptest! {
        /// Every Hermitian matrix has a full real spectrum: the three
        /// counts always account for the whole dimension.
        #[test]
        fn counts_exhaust_the_dimension(h in arb_hermitian(4)) {
            let inertia = inertia_of(&h).unwrap();
            prop_assert_eq!(
                inertia.positive + inertia.negative + inertia.zero,
                h.dim()
            );
            let cp = char_poly(&h).unwrap();
            prop_assert_eq!(cp.degree(), Some(h.dim()));
            prop_assert_eq!(cp.leading().unwrap(), &rat("1"));
        }

        /// On diagonal matrices the inertia is the sign tally of the
        /// diagonal.
        #[test]
        fn diagonal_inertia_is_the_sign_tally(
            values in proptest::collection::vec(-9i64..=9, 1..6),
        ) {
            let inertia = inertia_of(&diag(&values)).unwrap();
            prop_assert_eq!(
                inertia.positive,
                values.iter().filter(|&&v| v > 0).count()
            );
            prop_assert_eq!(
                inertia.negative,
                values.iter().filter(|&&v| v < 0).count()
            );
            prop_assert_eq!(
                inertia.zero,
                values.iter().filter(|&&v| v == 0).count()
            );
        }

        /// Negating the matrix swaps the positive and negative counts.
        #[test]
        fn negation_swaps_the_counts(h in arb_hermitian(4)) {
            let negated = HermitianMatrix::new(
                (0..h.dim())
                    .map(|j| (0..h.dim()).map(|k| -h.entry(j, k).clone()).collect())
                    .collect(),
            )
            .unwrap();
            let a = inertia_of(&h).unwrap();
            let b = inertia_of(&negated).unwrap();
            prop_assert_eq!(a.positive, b.negative);
            prop_assert_eq!(a.negative, b.positive);
            prop_assert_eq!(a.zero, b.zero);
        }
    }
}
