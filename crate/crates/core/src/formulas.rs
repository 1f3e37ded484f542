//! Closed-form counts of one-vertex (pre-)maps.
//!
//! The count for a type and valence `d` is the orbit count of the dihedral
//! group `D_d` acting on decorated matchings of `d` points on a circle:
//!
//! ```text
//! pi(d) = (F(d) + R(d)) / 2d
//! ```
//!
//! where `F` sums fixed points over the `d` reflections and `R` over the `d`
//! rotations. Reflection fixed points reduce to the sequence `f(n)` with
//! `f(n) = s·f(n-1) + 2t(n-1)·f(n-2)`, `f(0) = 1`, `f(1) = s`, which is
//! computed here four independent ways (recurrence, explicit sum,
//! exponential generating function `exp(s·x + t·x²)`, Hermite polynomials).

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{
    binomial, divisors, euler_phi, factorial, odd_double_factorial, pairings, pow,
    rational_to_count, ArithError, Count, QuadExt, Rational,
};
use crate::series::{binomial_series, SeriesKind, SeriesPrefix};
use crate::typesys::MapType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("domain error: {0}")]
    Domain(String),
    /// Two routes that must agree did not; always an implementation bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

fn count(n: u64) -> Count {
    Count::from(n)
}

fn require_positive(what: &str, d: usize) -> Result<(), FormulaError> {
    if d == 0 {
        Err(FormulaError::Domain(format!("{what} needs valence d >= 1")))
    } else {
        Ok(())
    }
}

/// `f(0..=n)` by the distinguished-element recurrence.
pub fn f_rec_prefix(ty: MapType, n: usize) -> Vec<Count> {
    let p = ty.params();
    let mut f = Vec::with_capacity(n + 1);
    f.push(Count::one());
    if n >= 1 {
        f.push(count(p.s.into()));
    }
    for k in 2..=n {
        let next = &f[k - 1] * p.s + &f[k - 2] * (2 * u64::from(p.t) * (k as u64 - 1));
        f.push(next);
    }
    f
}

pub fn f_rec(ty: MapType, n: usize) -> Count {
    f_rec_prefix(ty, n).pop().expect("prefix is never empty")
}

/// `f(n) = n! Σ_{2j<=n} s^(n-2j) t^j / ((n-2j)! j!)`.
pub fn f_sum(ty: MapType, n: usize) -> Count {
    let p = ty.params();
    let s = count(p.s.into());
    let t = count(p.t.into());
    let n_fact = factorial(n);
    (0..=n / 2).fold(Count::zero(), |acc, j| {
        let (q, r) = n_fact.div_rem(&(factorial(n - 2 * j) * factorial(j)));
        debug_assert!(r.is_zero());
        acc + q * pow(&s, n - 2 * j) * pow(&t, j)
    })
}

/// Exact coefficients of `exp(s·x + t·x²)` through `x^order`.
pub fn f_egf(ty: MapType, order: usize) -> SeriesPrefix {
    let p = ty.params();
    let exponent = SeriesPrefix::from_poly(&[0, p.s.into(), p.t.into()], order, SeriesKind::Egf);
    exponent.exp().expect("exponent has zero constant term")
}

/// `f(n) = (i√t)^n · H_n(s / (2i√t))`, evaluated in `Q(ω)` with `ω = i√t`.
pub fn f_hermite(ty: MapType, n: usize) -> Result<Count, FormulaError> {
    let p = ty.params();
    let t = p.t;
    // 1/ω = -ω/t, so s/(2ω) = -(s / 2t)·ω
    let z = QuadExt::new(
        Rational::zero(),
        -Rational::new(p.s.into(), (2 * t).into()),
        t,
    );
    let two_z = z.scale(&Rational::from_integer(2.into()));
    let mut prev = QuadExt::from_int(1, t);
    let mut cur = two_z.clone();
    let h = if n == 0 {
        prev
    } else {
        for k in 1..n {
            let next = &(&two_z * &cur) - &prev.scale(&Rational::from_integer((2 * k).into()));
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    };
    let value = &QuadExt::omega(t).pow(n) * &h;
    if !value.is_rational() {
        return Err(FormulaError::Consistency(format!(
            "Hermite value for {ty}, n={n} has non-zero ω part: {value}"
        )));
    }
    rational_to_count(&value.a).ok_or_else(|| {
        FormulaError::Consistency(format!(
            "Hermite value for {ty}, n={n} is not a non-negative integer: {}",
            value.a
        ))
    })
}

/// Total fixed points of the `d` reflections.
pub fn reflection_total(ty: MapType, d: usize) -> Result<Count, FormulaError> {
    require_positive("reflection_total", d)?;
    let p = ty.params();
    Ok(if d.is_multiple_of(2) {
        let half = d / 2;
        let f = f_rec_prefix(ty, half);
        (&f[half] + &f[half - 1] * p.m) * half
    } else if ty.graph_only {
        Count::zero()
    } else {
        f_rec(ty, (d - 1) / 2) * d
    })
}

/// Ways an orbit of a rotation with `r` orbits can be matched to itself or
/// left unmatched.
pub fn orbit_weight(ty: MapType, r: usize, d: usize) -> Result<Count, FormulaError> {
    if r == 0 || d == 0 || !d.is_multiple_of(r) {
        return Err(FormulaError::Domain(format!("{r} is not a divisor of {d}")));
    }
    // for odd d the antipodal case never applies
    let antipodal = d.is_multiple_of(2) && (d / 2).is_multiple_of(r);
    Ok(match (antipodal, ty.graph_only) {
        (true, _) => count(ty.params().s.into()),
        (false, true) => Count::zero(),
        (false, false) => Count::one(),
    })
}

/// Fixed points of one rotation with `r = gcd(d, k)` orbits.
pub fn rotation_fixed(ty: MapType, d: usize, r: usize) -> Result<Count, FormulaError> {
    let w = orbit_weight(ty, r, d)?;
    let cross = count(u64::from(ty.params().t) * (d / r) as u64);
    Ok((0..=r / 2).fold(Count::zero(), |acc, j| {
        acc + binomial(r, 2 * j) * pairings(j) * pow(&cross, j) * pow(&w, r - 2 * j)
    }))
}

/// Contribution of the `φ(d/r)` rotations whose orbit count is `r`.
pub fn rotation_term(ty: MapType, d: usize, r: usize) -> Result<Count, FormulaError> {
    let fixed = rotation_fixed(ty, d, r)?;
    Ok(euler_phi(d / r)? * fixed)
}

/// Total fixed points of the `d` rotations.
pub fn rotation_total(ty: MapType, d: usize) -> Result<Count, FormulaError> {
    require_positive("rotation_total", d)?;
    divisors(d)?
        .into_iter()
        .try_fold(Count::zero(), |acc, r| Ok(acc + rotation_term(ty, d, r)?))
}

/// Number of non-isomorphic one-vertex (pre-)maps of type `ty` and valence `d`.
pub fn pi(ty: MapType, d: usize) -> Result<Count, FormulaError> {
    require_positive("pi", d)?;
    let total = reflection_total(ty, d)? + rotation_total(ty, d)?;
    let (q, r) = total.div_rem(&count(2 * d as u64));
    if !r.is_zero() {
        return Err(FormulaError::Consistency(format!(
            "orbit sum {total} for {ty}, d={d} is not divisible by {}",
            2 * d
        )));
    }
    Ok(q)
}

/// Number of involutions of a `d`-set, i.e. all matchings of `K_d`.
pub fn involution_count(d: usize) -> Result<Count, FormulaError> {
    let by_sum = (0..=d / 2).fold(Count::zero(), |acc, k| {
        acc + binomial(d, 2 * k) * pairings(k)
    });
    let mut prev = Count::one();
    let mut cur = Count::one();
    for n in 2..=d {
        let next = &cur + &prev * (n as u64 - 1);
        prev = std::mem::replace(&mut cur, next);
    }
    if by_sum != cur {
        return Err(FormulaError::Consistency(format!(
            "involution count of {d}: sum {by_sum} != recurrence {cur}"
        )));
    }
    Ok(by_sum)
}

/// One-vertex pre-graphs of valence `d`; determined by the loop count.
pub fn pregraph_count(d: usize) -> Count {
    count(1 + (d / 2) as u64)
}

/// One-vertex graphs of valence `d`: one if `d` is even, none otherwise.
pub fn graph_count(d: usize) -> Count {
    count(u64::from(d.is_multiple_of(2)))
}

fn require_zero_s(ty: MapType, what: &str) -> Result<(), FormulaError> {
    if ty.params().s != 0 {
        return Err(FormulaError::Domain(format!(
            "{what} only applies to sDG and SDG, got {ty}"
        )));
    }
    Ok(())
}

fn require_even(what: &str, d: usize) -> Result<(), FormulaError> {
    if !d.is_multiple_of(2) {
        return Err(FormulaError::Domain(format!(
            "{what} needs even d, got {d}"
        )));
    }
    Ok(())
}

/// `f(d) = (2t)^(d/2)·(d-1)!!` for the two types with `s = 0`, even `d`.
pub fn closed_form_f(ty: MapType, d: usize) -> Result<Count, FormulaError> {
    require_zero_s(ty, "closed_form_f")?;
    require_even("closed_form_f", d)?;
    // 2^d for t=2, (2√2)^d = 8^(d/2) for t=4
    let base = count(2 * u64::from(ty.params().t));
    Ok(pow(&base, d / 2) * odd_double_factorial(d as i64 - 1)?)
}

/// Single-sum rotation total for the two types with `s = 0`, even `d`.
pub fn rotation_total_reduced(ty: MapType, d: usize) -> Result<Count, FormulaError> {
    require_zero_s(ty, "rotation_total_reduced")?;
    require_even("rotation_total_reduced", d)?;
    require_positive("rotation_total_reduced", d)?;
    let t = u64::from(ty.params().t);
    divisors(d)?
        .into_iter()
        .filter(|r| r % 2 == 0)
        .try_fold(Count::zero(), |acc, r| {
            let base = count(t * (d / r) as u64);
            Ok(acc + euler_phi(d / r)? * odd_double_factorial(r as i64 - 1)? * pow(&base, r / 2))
        })
}

/// Outcome of comparing a generating-function expansion against a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCheck {
    pub checked: usize,
    pub first_mismatch: Option<usize>,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    fn run(range: impl IntoIterator<Item = usize>, mut agree: impl FnMut(usize) -> bool) -> Self {
        let mut checked = 0;
        for n in range {
            checked += 1;
            if !agree(n) {
                return SeriesCheck {
                    checked,
                    first_mismatch: Some(n),
                };
            }
        }
        SeriesCheck {
            checked,
            first_mismatch: None,
        }
    }
}

/// Expands `(1 - sqrt(1 - 4t·x)) / 2t` and checks `n!·[x^n] = f(2n-2)` for
/// `n = 1..=order`.
pub fn special_ogf_check(ty: MapType, order: usize) -> Result<SeriesCheck, FormulaError> {
    require_zero_s(ty, "special_ogf_check")?;
    let t = i64::from(ty.params().t);
    let half = Rational::new(1.into(), 2.into());
    let root = binomial_series(
        &half,
        &Rational::from_integer((-4 * t).into()),
        order,
        SeriesKind::Egf,
    );
    let scale = Rational::from_integer((2 * t).into());
    let coefficients = root
        .coefficients
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let one = if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            (one - c) / &scale
        })
        .collect();
    let series = SeriesPrefix {
        coefficients,
        kind: SeriesKind::Egf,
    };
    let f = f_rec_prefix(ty, 2 * order.max(1) - 2);
    Ok(SeriesCheck::run(1..=order, |n| {
        series.term(n).as_ref() == Some(&f[2 * n - 2])
    }))
}

/// Expands `P(x) = 1/((1-x)²(1+x))` and `G(x) = 1/(1-x²)` by exact division
/// and compares with the pre-graph and graph counts for `d = 0..=order`.
pub fn pg_ogf_check(order: usize) -> SeriesCheck {
    let one = SeriesPrefix::from_poly(&[1], order, SeriesKind::Ogf);
    // (1-x)²(1+x) = 1 - x - x² + x³
    let p_den = SeriesPrefix::from_poly(&[1, -1, -1, 1], order, SeriesKind::Ogf);
    let g_den = SeriesPrefix::from_poly(&[1, 0, -1], order, SeriesKind::Ogf);
    let p = one.div(&p_den).expect("unit constant term");
    let g = one.div(&g_den).expect("unit constant term");
    SeriesCheck::run(0..=order, |d| {
        p.term(d) == Some(pregraph_count(d)) && g.term(d) == Some(graph_count(d))
    })
}

/// Checks `i(d) = d!·[x^d] exp(x + x²/2)` for `d = 0..=order`.
pub fn involution_egf_check(order: usize) -> Result<SeriesCheck, FormulaError> {
    let mut exponent = SeriesPrefix::from_poly(&[0, 1], order, SeriesKind::Egf);
    if order >= 2 {
        exponent.coefficients[2] = Rational::new(1.into(), 2.into());
    }
    let egf = exponent.exp().expect("zero constant term");
    let values: Vec<Count> = (0..=order)
        .map(involution_count)
        .collect::<Result<_, _>>()?;
    Ok(SeriesCheck::run(0..=order, |d| {
        egf.term(d).as_ref() == Some(&values[d])
    }))
}
