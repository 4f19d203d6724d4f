//! Scalar traits for the exact polynomial and matrix cores, plus the
//! Gaussian rational scalar used for Hermitian matrices.
//!
//! Everything downstream is generic over these traits; the crate root pins
//! the concrete instantiations (`Rat` for ordered work, [`GaussRat`] for
//! complex entries). There is deliberately no floating point scalar: sign
//! queries drive every algorithm here, and those must be exact.

use crate::Rat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Commutative ring scalar: enough for polynomial and matrix arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Field scalar: a ring with exact division.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = Self> {}

/// Ordered field scalar: exact sign queries, the home of root counting.
pub trait OrderedField: Field + PartialOrd {}

impl<T> OrderedField for T where T: Field + PartialOrd {}

/// Exact sign of `x`: -1, 0, or 1.
pub fn sign<T: OrderedField>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if *x > T::zero() {
        1
    } else {
        -1
    }
}

/// Absolute value in any ordered field.
pub fn abs<T: OrderedField>(x: &T) -> T {
    if *x < T::zero() {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Gaussian rational `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_real(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{}{}{}i", self.re, if self.im < Rat::zero() { "" } else { "+" }, self.im)
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let c = rhs.conj();
        let p = self * c;
        GaussRat {
            re: p.re / n.clone(),
            im: p.im / n,
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qstr::rat;

    #[test]
    fn gaussian_field_ops() {
        let z = GaussRat::new(rat("1"), rat("2"));
        let w = GaussRat::new(rat("3"), rat("-1"));
        let p = z.clone() * w.clone();
        assert_eq!(p, GaussRat::new(rat("5"), rat("5")));
        let q = p / w.clone();
        assert_eq!(q, z);
        assert_eq!(z.clone() * z.conj(), GaussRat::from_real(rat("5")));
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = GaussRat::i();
        assert_eq!(i.clone() * i, GaussRat::from_real(rat("-1")));
    }

    #[test]
    fn signs() {
        assert_eq!(sign(&rat("-7/3")), -1);
        assert_eq!(sign(&rat("0")), 0);
        assert_eq!(sign(&rat("2/5")), 1);
        assert_eq!(abs(&rat("-7/3")), rat("7/3"));
    }
}
