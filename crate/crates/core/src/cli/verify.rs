use super::CliError;
use crate::arith::{gcd, Count};
use crate::formulas::{self, FormulaError};
use crate::oracle::{self, SymmetryKind};
use crate::typesys::MapType;

/// Largest valence checked by default.
pub const DEFAULT_MAX: usize = 8;
/// Largest valence checked with the expensive flag.
pub const EXPENSIVE_MAX: usize = 10;
/// Range of the four-way `f` agreement check.
pub const F_AGREEMENT_MAX: usize = 60;

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, line: String) {
        if ok {
            self.passed += 1;
            self.lines.push(format!("OK   {line}"));
        } else {
            self.failed += 1;
            self.lines.push(format!("FAIL {line}"));
        }
    }

    pub fn render(&self) -> String {
        let mut out: String = self.lines.iter().map(|l| format!("{l}\n")).collect();
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.passed, self.failed
        ));
        out
    }
}

fn show<E: std::fmt::Display>(r: &Result<Count, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error({e})"),
    }
}

pub fn run_verify(d_max: usize, expensive: bool) -> Result<VerifyReport, CliError> {
    run_verify_with(d_max, expensive, formulas::pi)
}

/// Like [`run_verify`] with the closed-form count supplied by the caller.
pub fn run_verify_with<P>(d_max: usize, expensive: bool, pi: P) -> Result<VerifyReport, CliError>
where
    P: Fn(MapType, usize) -> Result<Count, FormulaError>,
{
    let limit = if expensive {
        EXPENSIVE_MAX
    } else {
        DEFAULT_MAX
    };
    if d_max == 0 || d_max > limit {
        return Err(CliError::Usage(format!(
            "--d-max must be in 1..={limit}{}",
            if expensive {
                ""
            } else {
                " (use --expensive for up to 10)"
            }
        )));
    }
    let mut report = VerifyReport::default();

    for d in 1..=d_max {
        for ty in MapType::ALL {
            let burnside = oracle::orbit_count_burnside(ty, d);
            let canonical = oracle::orbit_count_canonical(ty, d);
            let formula = pi(ty, d);
            let agree = matches!((&burnside, &canonical, &formula),
                (Ok(a), Ok(b), Ok(c)) if a == b && b == c);
            let line = if agree {
                format!("{ty} d={d} value={}", show(&formula))
            } else {
                format!(
                    "{ty} d={d} formula={} burnside={} canonical={}",
                    show(&formula),
                    show(&burnside),
                    show(&canonical)
                )
            };
            report.record(agree, line);
        }
    }

    let (refl_bad, rot_bad) = structure_failures(d_max)?;
    let refl_ok = refl_bad.is_empty();
    let rot_ok = rot_bad.is_empty();
    for line in refl_bad.into_iter().chain(rot_bad) {
        report.lines.push(format!("  {line}"));
    }
    report.record(
        refl_ok,
        format!("reflection fixed points match f and m·f terms (8 types, d <= {d_max})"),
    );
    report.record(
        rot_ok,
        format!("rotation fixed points match per-divisor terms (8 types, d <= {d_max})"),
    );

    let f_failures = f_agreement_failures(F_AGREEMENT_MAX);
    let f_ok = f_failures.is_empty();
    for line in f_failures {
        report.lines.push(format!("  {line}"));
    }
    report.record(
        f_ok,
        format!("recurrence, sum, EGF and Hermite agree on f (8 types, n <= {F_AGREEMENT_MAX})"),
    );
    Ok(report)
}

/// Compares oracle fixed-point counts with the reflection and rotation terms.
/// Returns mismatch descriptions for reflections and for rotations.
pub fn structure_failures(d_max: usize) -> Result<(Vec<String>, Vec<String>), CliError> {
    let mut refl = Vec::new();
    let mut rot = Vec::new();
    for ty in MapType::ALL {
        let p = ty.params();
        for d in 1..=d_max {
            let counts = oracle::fixed_counts(ty, d)?;
            let f = formulas::f_rec_prefix(ty, d / 2);
            for (sigma, n) in counts
                .iter()
                .filter(|(s, _)| s.kind == SymmetryKind::Reflection)
            {
                let expected = if d % 2 == 1 {
                    if ty.graph_only {
                        Count::from(0u32)
                    } else {
                        f[(d - 1) / 2].clone()
                    }
                } else if sigma.is_median() {
                    f[d / 2].clone()
                } else {
                    &f[d / 2 - 1] * p.m
                };
                if *n != expected {
                    refl.push(format!(
                        "{ty} d={d} reflection {}: oracle {n}, expected {expected}",
                        sigma.index
                    ));
                }
            }
            for r in crate::arith::divisors(d).map_err(FormulaError::from)? {
                let fixed: Vec<&Count> = counts
                    .iter()
                    .filter(|(s, _)| s.kind == SymmetryKind::Rotation && gcd(d, s.index) == r)
                    .map(|(_, n)| n)
                    .collect();
                if fixed.windows(2).any(|w| w[0] != w[1]) {
                    rot.push(format!(
                        "{ty} d={d} r={r}: fixed counts differ within gcd class"
                    ));
                }
                let total: Count = fixed.into_iter().sum();
                let expected = formulas::rotation_term(ty, d, r)?;
                if total != expected {
                    rot.push(format!(
                        "{ty} d={d} r={r}: oracle {total}, expected {expected}"
                    ));
                }
            }
        }
    }
    Ok((refl, rot))
}

/// Disagreements among the four routes to `f(n)`.
pub fn f_agreement_failures(n_max: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for ty in MapType::ALL {
        let rec = formulas::f_rec_prefix(ty, n_max);
        let egf = formulas::f_egf(ty, n_max);
        for (n, by_rec) in rec.iter().enumerate() {
            let by_sum = formulas::f_sum(ty, n);
            let by_egf = egf.term(n);
            let by_hermite = formulas::f_hermite(ty, n);
            let ok = &by_sum == by_rec
                && by_egf.as_ref() == Some(by_rec)
                && by_hermite.as_ref().ok() == Some(by_rec);
            if !ok {
                failures.push(format!(
                    "{ty} n={n}: rec={by_rec} sum={by_sum} egf={} hermite={}",
                    by_egf.map_or_else(|| "non-integer".into(), |v| v.to_string()),
                    show(&by_hermite)
                ));
            }
        }
    }
    failures
}
