//! Truncated formal power series over exact rationals.

use num_traits::{One, Zero};

use crate::arith::{factorial, rational_to_count, Count, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// Coefficient `n` is `a(n) / n!`.
    Egf,
    /// Coefficient `n` is `a(n)`.
    Ogf,
}

/// Coefficients of `x^0 ..= x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coefficients: Vec<Rational>,
    pub kind: SeriesKind,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl SeriesPrefix {
    /// Builds a prefix of order `order` from the leading coefficients of a
    /// polynomial, padding with zeros or truncating as needed.
    pub fn from_poly(poly: &[i64], order: usize, kind: SeriesKind) -> Self {
        let coefficients = (0..=order)
            .map(|n| poly.get(n).map_or_else(Rational::zero, |&c| rat(c)))
            .collect();
        SeriesPrefix { coefficients, kind }
    }

    /// Highest power retained.
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coefficients[n]
    }

    /// The sequence term at `n`: the coefficient itself for an OGF, `n!` times
    /// it for an EGF. `None` if it is not a non-negative integer.
    pub fn term(&self, n: usize) -> Option<Count> {
        let c = self.coeff(n);
        match self.kind {
            SeriesKind::Ogf => rational_to_count(c),
            SeriesKind::Egf => {
                let scaled = c * Rational::from_integer(factorial(n).into());
                rational_to_count(&scaled)
            }
        }
    }

    pub fn terms(&self) -> Option<Vec<Count>> {
        (0..=self.order()).map(|n| self.term(n)).collect()
    }

    pub fn mul(&self, other: &SeriesPrefix) -> SeriesPrefix {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|n| {
                (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + self.coeff(k) * other.coeff(n - k)
                })
            })
            .collect();
        SeriesPrefix {
            coefficients,
            kind: self.kind,
        }
    }

    /// `self / divisor`; the divisor must have a non-zero constant term.
    pub fn div(&self, divisor: &SeriesPrefix) -> Option<SeriesPrefix> {
        let lead = divisor.coeff(0);
        if lead.is_zero() {
            return None;
        }
        let order = self.order().min(divisor.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let partial = (1..=n).fold(self.coeff(n).clone(), |acc, k| {
                acc - divisor.coeff(k) * &q[n - k]
            });
            q.push(partial / lead);
        }
        Some(SeriesPrefix {
            coefficients: q,
            kind: self.kind,
        })
    }

    /// `exp(self)`; the constant term must be zero.
    ///
    /// Uses `n·e_n = Σ_{k=1..n} k·g_k·e_{n-k}`, which follows from `E' = G'E`.
    pub fn exp(&self) -> Option<SeriesPrefix> {
        if !self.coeff(0).is_zero() {
            return None;
        }
        let order = self.order();
        let mut e: Vec<Rational> = vec![Rational::one()];
        for n in 1..=order {
            let sum = (1..=n).fold(Rational::zero(), |acc, k| {
                acc + rat(k as i64) * self.coeff(k) * &e[n - k]
            });
            e.push(sum / rat(n as i64));
        }
        Some(SeriesPrefix {
            coefficients: e,
            kind: self.kind,
        })
    }
}

/// `(1 + c·x)^alpha` through `x^order` by the generalized binomial series.
pub fn binomial_series(
    alpha: &Rational,
    c: &Rational,
    order: usize,
    kind: SeriesKind,
) -> SeriesPrefix {
    let mut coefficients = Vec::with_capacity(order + 1);
    // binom(alpha, n) · c^n, built incrementally
    let mut term = Rational::one();
    coefficients.push(term.clone());
    for n in 1..=order {
        let k = rat(n as i64);
        term = term * (alpha - (&k - Rational::one())) / &k * c;
        coefficients.push(term.clone());
    }
    SeriesPrefix { coefficients, kind }
}
