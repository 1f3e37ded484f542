//! Exact integer and rational kernel.
//!
//! Everything here is exact. `Count` values never round, and the quadratic
//! extension used for the Hermite route keeps `ω² = -t` symbolic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("domain error: {0}")]
    Domain(String),
}

pub fn divisors(d: usize) -> Result<Vec<usize>, ArithError> {
    if d == 0 {
        return Err(ArithError::Domain("divisors of 0".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut r = 1;
    while r * r <= d {
        if d.is_multiple_of(r) {
            small.push(r);
            if r * r != d {
                large.push(d / r);
            }
        }
        r += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(n: usize) -> Result<Count, ArithError> {
    if n == 0 {
        return Err(ArithError::Domain("euler_phi(0)".into()));
    }
    let mut rest = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(Count::from(phi))
}

/// `k!! = k (k-2) ... 1` for odd `k`, with `(-1)!! = 1`.
pub fn odd_double_factorial(k: i64) -> Result<Count, ArithError> {
    if k < -1 || k % 2 == 0 {
        return Err(ArithError::Domain(format!(
            "odd_double_factorial needs odd k >= -1, got {k}"
        )));
    }
    Ok((1..=k)
        .step_by(2)
        .fold(Count::one(), |acc, x| acc * x as u64))
}

/// `(2j - 1)!!`, the number of perfect matchings on `2j` points.
pub fn pairings(j: usize) -> Count {
    (1..j as u64).fold(Count::one(), |acc, x| acc * (2 * x + 1))
}

pub fn factorial(n: usize) -> Count {
    (2..=n as u64).fold(Count::one(), |acc, x| acc * x)
}

pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so division is exact
    (0..k).fold(Count::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: &Count, exp: usize) -> Count {
    num_traits::pow(base.clone(), exp)
}

/// Converts a rational to a `Count` if it is a non-negative integer.
pub fn rational_to_count(q: &Rational) -> Option<Count> {
    if q.is_integer() && !q.is_negative() {
        q.to_integer().to_biguint()
    } else {
        None
    }
}

pub fn count_to_rational(c: &Count) -> Rational {
    Rational::from_integer(BigInt::from(c.clone()))
}

/// Element `a + b·ω` of the quadratic extension of the rationals by `ω`,
/// where `ω² = -t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub t: u32,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, t: u32) -> Self {
        assert!(t > 0, "QuadExt needs t > 0");
        QuadExt { a, b, t }
    }

    pub fn from_rational(a: Rational, t: u32) -> Self {
        Self::new(a, Rational::zero(), t)
    }

    pub fn from_int(a: i64, t: u32) -> Self {
        Self::from_rational(Rational::from_integer(a.into()), t)
    }

    /// The generator `ω`.
    pub fn omega(t: u32) -> Self {
        Self::new(Rational::zero(), Rational::one(), t)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a + bω ↦ a - bω`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), self.t)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, self.t)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::from_int(1, self.t);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.t, other.t,
            "QuadExt operands from different extensions"
        );
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.check_same_field(rhs);
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b, self.t)
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.check_same_field(rhs);
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b, self.t)
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.check_same_field(rhs);
        let t = Rational::from_integer(self.t.into());
        // (a + bω)(c + dω) = (ac - t·bd) + (ad + bc)ω
        let a = &self.a * &rhs.a - t * (&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::new(a, b, self.t)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.a.clone(), -self.b.clone(), self.t)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·ω (ω² = -{})", self.a, self.b, self.t)
    }
}

/// `gcd` on machine integers, used for rotation orbit sizes.
pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_phi(n: usize) -> usize {
        (1..=n).filter(|&k| gcd(k, n) == 1).count()
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn divisors_match_filter() {
        for d in 1..=300 {
            let brute: Vec<usize> = (1..=d).filter(|r| d % r == 0).collect();
            assert_eq!(divisors(d).unwrap(), brute);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), Count::from(1u32));
        assert_eq!(euler_phi(6).unwrap(), Count::from(2u32));
        assert_eq!(euler_phi(12).unwrap(), Count::from(4u32));
        assert!(euler_phi(0).is_err());
        for n in 1..=500 {
            assert_eq!(euler_phi(n).unwrap(), Count::from(brute_phi(n)), "n={n}");
        }
    }

    #[test]
    fn totient_sum_identity() {
        for n in 1..=200 {
            let total = divisors(n)
                .unwrap()
                .into_iter()
                .fold(Count::zero(), |acc, d| acc + euler_phi(n / d).unwrap());
            assert_eq!(total, Count::from(n));
        }
    }

    #[test]
    fn double_factorial() {
        assert_eq!(odd_double_factorial(-1).unwrap(), Count::one());
        assert_eq!(odd_double_factorial(1).unwrap(), Count::one());
        assert_eq!(odd_double_factorial(5).unwrap(), Count::from(15u32));
        assert!(odd_double_factorial(4).is_err());
        assert!(odd_double_factorial(-3).is_err());
        for j in 0..=50usize {
            let lhs = odd_double_factorial(2 * j as i64 - 1).unwrap()
                * pow(&Count::from(2u32), j)
                * factorial(j);
            assert_eq!(lhs, factorial(2 * j));
            assert_eq!(pairings(j), odd_double_factorial(2 * j as i64 - 1).unwrap());
        }
    }

    #[test]
    fn binomial_examples_and_pascal() {
        assert_eq!(binomial(4, 2), Count::from(6u32));
        assert_eq!(binomial(7, 4), Count::from(35u32));
        assert_eq!(binomial(3, 5), Count::zero());
        for n in 0..=100 {
            assert_eq!(binomial(n, 0), Count::one());
        }
        for n in 1..=100 {
            for k in 1..=100 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn zero_to_the_zero() {
        assert_eq!(pow(&Count::zero(), 0), Count::one());
        assert_eq!(pow(&Count::zero(), 3), Count::zero());
    }

    #[test]
    fn omega_squared() {
        for t in [1, 2, 4, 7] {
            let w = QuadExt::omega(t);
            assert_eq!(&w * &w, QuadExt::from_int(-(t as i64), t));
            assert_eq!(w.pow(4), QuadExt::from_int((t * t) as i64, t));
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn quad(t: u32) -> impl Strategy<Value = QuadExt> {
        (small_rational(), small_rational()).prop_map(move |(a, b)| QuadExt::new(a, b, t))
    }

    fn quad_pair() -> impl Strategy<Value = (QuadExt, QuadExt)> {
        prop::sample::select(vec![1u32, 2, 4]).prop_flat_map(|t| (quad(t), quad(t)))
    }

    proptest! {
        #[test]
        fn conjugation_is_a_ring_homomorphism((x, y) in quad_pair()) {
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            // the norm is rational
            prop_assert!((&x * &x.conj()).is_rational());
        }

        #[test]
        fn rational_sum_is_canonical_and_round_trips(
            a in small_rational(),
            b in small_rational(),
        ) {
            let s = &a + &b;
            let reduced = Rational::new(s.numer().clone(), s.denom().clone());
            prop_assert_eq!(s.numer(), reduced.numer());
            prop_assert_eq!(s.denom(), reduced.denom());
            prop_assert!(s.denom().is_positive());
            let printed = s.to_string();
            prop_assert_eq!(printed.parse::<Rational>().unwrap(), s);
        }
    }
}
