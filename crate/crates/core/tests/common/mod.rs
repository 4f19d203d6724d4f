//! Shared helpers for the integration suite: an independent inertia
//! oracle based on congruence pivoting, and seeded random generators for
//! matrices and classes.

use ndindex::inertia::{HermitianMatrix, Inertia};
use ndindex::scalar::GaussRat;
use ndindex::{Int, Rat};
use num_traits::Zero;
use rand::Rng;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn random_rat<R: Rng>(rng: &mut R, numer_bound: i64, denom_bound: i64) -> Rat {
    let n = rng.random_range(-numer_bound..=numer_bound);
    let d = rng.random_range(1..=denom_bound);
    Rat::new(Int::from(n), Int::from(d))
}

fn random_gauss<R: Rng>(rng: &mut R) -> GaussRat {
    GaussRat::new(random_rat(rng, 3, 2), random_rat(rng, 3, 2))
}

/// Counts eigenvalue signs by congruence reduction alone: nonzero
/// diagonal pivots contribute their sign and are eliminated through the
/// Schur complement; an all-zero diagonal falls back to a hyperbolic
/// 2-by-2 block, which contributes one sign of each kind.
pub fn pivot_sign_inertia(a: Vec<Vec<Rat>>) -> Inertia {
    let n = a.len();
    if n == 0 {
        return Inertia {
            positive: 0,
            negative: 0,
            zero: 0,
        };
    }
    if let Some(k) = (0..n).find(|&k| !a[k][k].is_zero()) {
        let pivot = a[k][k].clone();
        let rest: Vec<usize> = (0..n).filter(|&r| r != k).collect();
        let reduced: Vec<Vec<Rat>> = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - &a[r][k] * &a[k][c] / &pivot)
                    .collect()
            })
            .collect();
        let mut sub = pivot_sign_inertia(reduced);
        if pivot > Rat::zero() {
            sub.positive += 1;
        } else {
            sub.negative += 1;
        }
        return sub;
    }
    let off_diagonal = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !a[i][j].is_zero());
    let Some((i, j)) = off_diagonal else {
        return Inertia {
            positive: 0,
            negative: 0,
            zero: n,
        };
    };
    let t = a[i][j].clone();
    let rest: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
    let reduced: Vec<Vec<Rat>> = rest
        .iter()
        .map(|&r| {
            rest.iter()
                .map(|&c| &a[r][c] - (&a[r][i] * &a[j][c] + &a[r][j] * &a[i][c]) / &t)
                .collect()
        })
        .collect();
    let mut sub = pivot_sign_inertia(reduced);
    sub.positive += 1;
    sub.negative += 1;
    sub
}

/// Random rational symmetric matrix; roughly a third of the draws zero
/// out the last row and column so singular signatures show up too.
pub fn random_symmetric<R: Rng>(rng: &mut R, dim: usize) -> Vec<Vec<Rat>> {
    let mut entries = vec![vec![Rat::zero(); dim]; dim];
    for j in 0..dim {
        for k in j..dim {
            let value = random_rat(rng, 3, 3);
            entries[j][k] = value.clone();
            entries[k][j] = value;
        }
    }
    if dim > 1 && rng.random_range(0..3) == 0 {
        for r in 0..dim {
            entries[r][dim - 1] = Rat::zero();
            entries[dim - 1][r] = Rat::zero();
        }
    }
    entries
}

pub fn symmetric_to_hermitian(entries: &[Vec<Rat>]) -> HermitianMatrix {
    let rows = entries
        .iter()
        .map(|row| row.iter().map(|v| GaussRat::from_real(v.clone())).collect())
        .collect();
    HermitianMatrix::new(rows).expect("symmetric matrices are Hermitian")
}

/// Random Hermitian matrix with Gaussian rational off-diagonal entries.
pub fn random_hermitian<R: Rng>(rng: &mut R, dim: usize) -> HermitianMatrix {
    let mut entries = vec![vec![GaussRat::zero(); dim]; dim];
    for j in 0..dim {
        entries[j][j] = GaussRat::from_real(random_rat(rng, 3, 3));
        for k in j + 1..dim {
            let value = random_gauss(rng);
            entries[k][j] = value.conj();
            entries[j][k] = value;
        }
    }
    HermitianMatrix::new(entries).expect("mirrored entries are Hermitian")
}

fn gauss_identity(dim: usize) -> Vec<Vec<GaussRat>> {
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    if r == c {
                        GaussRat::from_real(rat_int(1))
                    } else {
                        GaussRat::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Random invertible matrix built as a product of unit triangular
/// factors.
pub fn random_invertible<R: Rng>(rng: &mut R, dim: usize) -> Vec<Vec<GaussRat>> {
    let mut upper = gauss_identity(dim);
    let mut lower = gauss_identity(dim);
    for r in 0..dim {
        for c in r + 1..dim {
            upper[r][c] = random_gauss(rng);
            lower[c][r] = random_gauss(rng);
        }
    }
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|c| {
                    let mut acc = GaussRat::zero();
                    for k in 0..dim {
                        acc = acc + lower[r][k].clone() * upper[k][c].clone();
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Conjugate-transpose congruence `S* H S`; the validating constructor
/// re-checks that the result is Hermitian.
pub fn congruence_transform(s: &[Vec<GaussRat>], h: &HermitianMatrix) -> HermitianMatrix {
    let n = h.dim();
    let mut hs = vec![vec![GaussRat::zero(); n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = GaussRat::zero();
            for k in 0..n {
                acc = acc + h.entry(r, k).clone() * s[k][c].clone();
            }
            hs[r][c] = acc;
        }
    }
    let rows = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = GaussRat::zero();
                    for k in 0..n {
                        acc = acc + s[k][r].conj() * hs[k][c].clone();
                    }
                    acc
                })
                .collect()
        })
        .collect();
    HermitianMatrix::new(rows).expect("congruence preserves the Hermitian property")
}
