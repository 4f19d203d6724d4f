//! Real root counting, isolation, and refinement through Sturm chains.
//!
//! Every query works on open intervals whose endpoints are rationals or
//! infinite, and every answer is exact: signs come from rational
//! arithmetic, never from approximation. Multiplicities are recovered by
//! running the square-free decomposition first and weighting each factor's
//! distinct-root count.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{abs, sign, OrderedField};
use std::cmp::Ordering;

/// One end of an open interval on the real line.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: OrderedField> Endpoint<T> {
    fn cmp_ends(&self, other: &Endpoint<T>) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.partial_cmp(b).expect("ordered field"),
        }
    }
}

/// Open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpenInterval<T> {
    pub lo: Endpoint<T>,
    pub hi: Endpoint<T>,
}

impl<T: OrderedField> OpenInterval<T> {
    pub fn new(lo: Endpoint<T>, hi: Endpoint<T>) -> Self {
        OpenInterval { lo, hi }
    }

    pub fn finite(lo: T, hi: T) -> Self {
        OpenInterval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::Finite(hi),
        }
    }

    /// The whole real line.
    pub fn all() -> Self {
        OpenInterval {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
        }
    }

    /// `(0, +inf)`.
    pub fn positive() -> Self {
        OpenInterval {
            lo: Endpoint::Finite(T::zero()),
            hi: Endpoint::PosInf,
        }
    }

    /// `(-inf, 0)`.
    pub fn negative() -> Self {
        OpenInterval {
            lo: Endpoint::NegInf,
            hi: Endpoint::Finite(T::zero()),
        }
    }

    fn is_empty(&self) -> bool {
        self.lo.cmp_ends(&self.hi) != Ordering::Less
    }
}

/// Sturm chain of a nonzero polynomial.
///
/// The first entry is the monic square-free part, the second its
/// derivative, and each later entry is the negated remainder of the two
/// before it; the last nonzero entry is a constant. Entries are rescaled by
/// positive constants, which leaves every sign query unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain<T> {
    polynomials: Vec<Polynomial<T>>,
    squarefree_part: Polynomial<T>,
}

fn scale_to_unit_lead<T: OrderedField>(p: Polynomial<T>) -> Polynomial<T> {
    match p.leading() {
        None => p,
        Some(lc) => {
            let a = abs(lc);
            p.scale(&(T::one() / a))
        }
    }
}

impl<T: OrderedField> SturmChain<T> {
    pub fn new(p: &Polynomial<T>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.squarefree_part()?;
        let mut polynomials = vec![sf.clone()];
        if sf.degree() > Some(0) {
            polynomials.push(scale_to_unit_lead(sf.derivative()));
            loop {
                let n = polynomials.len();
                let (_, r) = polynomials[n - 2].div_rem(&polynomials[n - 1])?;
                if r.is_zero() {
                    break;
                }
                polynomials.push(scale_to_unit_lead(-&r));
            }
        }
        Ok(SturmChain {
            polynomials,
            squarefree_part: sf,
        })
    }

    pub fn polynomials(&self) -> &[Polynomial<T>] {
        &self.polynomials
    }

    /// Monic product of the distinct irreducible factors of the input.
    pub fn squarefree_part(&self) -> &Polynomial<T> {
        &self.squarefree_part
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign_changes_at(&self, x: &T) -> usize {
        Self::changes(self.polynomials.iter().map(|p| sign(&p.eval(x))))
    }

    fn sign_changes_at_end(&self, e: &Endpoint<T>) -> usize {
        match e {
            Endpoint::Finite(x) => self.sign_changes_at(x),
            Endpoint::PosInf => Self::changes(
                self.polynomials
                    .iter()
                    .map(|p| sign(p.leading().expect("chain entries are nonzero"))),
            ),
            Endpoint::NegInf => Self::changes(self.polynomials.iter().map(|p| {
                let s = sign(p.leading().expect("chain entries are nonzero"));
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            })),
        }
    }

    /// Number of distinct real roots of the underlying polynomial in the
    /// open interval.
    pub fn count_distinct_in(&self, interval: &OpenInterval<T>) -> usize {
        if self.is_constant() || interval.is_empty() {
            return 0;
        }
        let v_lo = self.sign_changes_at_end(&interval.lo);
        let v_hi = self.sign_changes_at_end(&interval.hi);
        // With zero values dropped from the sign sequence, the difference
        // counts roots in the half-open interval (lo, hi].
        let mut count = v_lo
            .checked_sub(v_hi)
            .expect("sign changes decrease left to right");
        if let Endpoint::Finite(b) = &interval.hi {
            if self.squarefree_part.eval(b).is_zero() {
                count -= 1;
            }
        }
        count
    }

    fn is_constant(&self) -> bool {
        self.squarefree_part.degree() == Some(0)
    }
}

/// Open interval `(lo, hi)` isolating exactly one real root of a
/// square-free polynomial; neither endpoint is a root.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval<T> {
    lo: T,
    hi: T,
    polynomial: Polynomial<T>,
}

impl<T: OrderedField> IsolatingInterval<T> {
    /// Validating constructor for externally supplied data.
    pub fn new(lo: T, hi: T, polynomial: Polynomial<T>) -> Result<Self> {
        if polynomial.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !polynomial.is_squarefree()? {
            return Err(Error::NotSquareFree);
        }
        if lo >= hi {
            return Err(Error::BadInput("empty isolating interval".into()));
        }
        if polynomial.eval(&lo).is_zero() || polynomial.eval(&hi).is_zero() {
            return Err(Error::BadInput("isolating interval endpoint is a root".into()));
        }
        let chain = SturmChain::new(&polynomial)?;
        let interval = OpenInterval::finite(lo.clone(), hi.clone());
        if chain.count_distinct_in(&interval) != 1 {
            return Err(Error::BadInput(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(IsolatingInterval { lo, hi, polynomial })
    }

    fn unchecked(lo: T, hi: T, polynomial: Polynomial<T>) -> Self {
        IsolatingInterval { lo, hi, polynomial }
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn polynomial(&self) -> &Polynomial<T> {
        &self.polynomial
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.lo.clone() + self.hi.clone()) / two::<T>()
    }

    /// Whether `x` lies strictly inside the interval.
    pub fn contains(&self, x: &T) -> bool {
        self.lo < *x && *x < self.hi
    }
}

fn two<T: OrderedField>() -> T {
    T::one() + T::one()
}

/// Counts the real roots of `p` in an open interval, distinct by default,
/// with multiplicity on request.
pub fn count_real_roots<T: OrderedField>(
    p: &Polynomial<T>,
    interval: &OpenInterval<T>,
    with_multiplicity: bool,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !with_multiplicity || p.is_squarefree()? {
        return Ok(SturmChain::new(p)?.count_distinct_in(interval));
    }
    let mut total = 0usize;
    for part in p.squarefree_decompose()? {
        let distinct = SturmChain::new(&part.factor)?.count_distinct_in(interval);
        total += part.multiplicity as usize * distinct;
    }
    Ok(total)
}

/// Strict bound on the magnitude of every root: `1 + max |a_i| / |a_d|`
/// over the non-leading coefficients.
pub fn cauchy_root_bound<T: OrderedField>(p: &Polynomial<T>) -> Result<T> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = p.degree().expect("nonzero polynomial");
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = abs(p.leading().expect("nonzero polynomial"));
    let mut max = T::zero();
    for c in &p.coeffs()[..d] {
        let m = abs(c) / lead.clone();
        if m > max {
            max = m;
        }
    }
    Ok(T::one() + max)
}

/// Isolates all real roots of a square-free polynomial into disjoint open
/// intervals with non-root rational endpoints, sorted in increasing order.
pub fn isolate_real_roots<T: OrderedField>(
    p: &Polynomial<T>,
) -> Result<Vec<IsolatingInterval<T>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree()? {
        return Err(Error::NotSquareFree);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(p)?;
    let bound = cauchy_root_bound(p)?;
    let mut out = Vec::new();
    split(&chain, -bound.clone(), bound, &mut out);
    Ok(out
        .into_iter()
        .map(|(lo, hi)| IsolatingInterval::unchecked(lo, hi, chain.squarefree_part().clone()))
        .collect())
}

/// Recursive bisection; both endpoints are known non-roots.
fn split<T: OrderedField>(chain: &SturmChain<T>, lo: T, hi: T, out: &mut Vec<(T, T)>) {
    let count = chain.count_distinct_in(&OpenInterval::finite(lo.clone(), hi.clone()));
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (lo.clone() + hi.clone()) / two::<T>();
            if chain.squarefree_part().eval(&mid).is_zero() {
                // The midpoint is itself a root; carve out a bracket around
                // it that contains no other root and recurse on both sides.
                let mut delta = (hi.clone() - lo.clone()) / (two::<T>() * two::<T>());
                loop {
                    let a = mid.clone() - delta.clone();
                    let b = mid.clone() + delta.clone();
                    let f = chain.squarefree_part();
                    if !f.eval(&a).is_zero()
                        && !f.eval(&b).is_zero()
                        && chain.count_distinct_in(&OpenInterval::finite(a.clone(), b.clone()))
                            == 1
                    {
                        split(chain, lo, a.clone(), out);
                        out.push((a, b.clone()));
                        split(chain, b, hi, out);
                        return;
                    }
                    delta = delta / two::<T>();
                }
            }
            split(chain, lo, mid.clone(), out);
            split(chain, mid, hi, out);
        }
    }
}

/// Shrinks an isolating interval below `width_bound` by sign bisection,
/// keeping the same unique root strictly inside and both endpoints
/// non-roots.
pub fn refine_interval<T: OrderedField>(
    interval: &IsolatingInterval<T>,
    width_bound: &T,
) -> IsolatingInterval<T> {
    assert!(
        *width_bound > T::zero(),
        "refinement width bound must be positive"
    );
    let p = interval.polynomial().clone();
    let mut lo = interval.lo().clone();
    let mut hi = interval.hi().clone();
    while hi.clone() - lo.clone() > *width_bound {
        let mid = (lo.clone() + hi.clone()) / two::<T>();
        let at_mid = p.eval(&mid);
        if at_mid.is_zero() {
            // The midpoint is the isolated root; pull both ends toward it.
            lo = (lo + mid.clone()) / two::<T>();
            hi = (mid + hi) / two::<T>();
        } else if sign(&p.eval(&lo)) != sign(&at_mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    IsolatingInterval::unchecked(lo, hi, p)
}
