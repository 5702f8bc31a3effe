use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// `None` when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| ExactRational(BigRational::new(num, den)))
    }

    pub fn from_integer(value: BigInt) -> Self {
        ExactRational(BigRational::from_integer(value))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Nearest `f64`; stays finite for huge numerators and denominators as
    /// long as the quotient itself is representable.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Always `p/q`, including `q = 1`.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = ExactRational::new(BigInt::from(27), BigInt::from(9)).unwrap();
        assert_eq!(r.to_string(), "3/1");
        let r = ExactRational::new(BigInt::from(100), BigInt::from(-18)).unwrap();
        assert_eq!(r.to_string(), "-50/9");
        assert!(ExactRational::new(BigInt::from(1), BigInt::zero()).is_none());
    }

    #[test]
    fn ordering_and_float() {
        let a = ExactRational::new(BigInt::from(4), BigInt::from(3)).unwrap();
        let b = ExactRational::from_integer(BigInt::from(1));
        assert!(a > b);
        assert!((a.to_f64() - 4.0 / 3.0).abs() < 1e-15);
        let huge = BigInt::from(10).pow(400);
        let r = ExactRational::new(&huge * 3, huge * 2).unwrap();
        assert_eq!(r.to_f64(), 1.5);
    }
}
