//! End-to-end check of the `PSmith` record: three role/filler pairs in a
//! 4-bit algebra, encoded, unbound, traced in the 16x16 Pauli
//! representation and cleaned up.
//!
//! The symbolic weights are instantiated as `alpha = 2`, `beta = 3`,
//! `gamma = 5` so every sign and the `beta`/`gamma` collision on `e_1111`
//! stay visible.

use num_complex::Complex64;

use crate::blade::{blade_inverse, BladeIndex};
use crate::cartan::{blade_matrix, rep, ComplexMatrix};
use crate::codec::{ga_decode, ga_encode, table_from_parts, SymbolTable};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// The fixture is pinned to four tensor factors.
pub const FIXTURE_FACTORS: usize = 4;

pub const ALPHA: f64 = 2.0;
pub const BETA: f64 = 3.0;
pub const GAMMA: f64 = 5.0;

const MATRIX_TOLERANCE: f64 = 1e-9;

pub const PAIRS: [(&str, &str); 3] = [("name", "Pat"), ("sex", "male"), ("age", "66")];

/// Roles `name = 1010`, `sex = 0111`, `age = 1011`; fillers `Pat = 1100`,
/// `male = 1000`, `66 = 0100`.
pub fn fixture_table() -> SymbolTable {
    table_from_parts(
        4,
        2,
        &[("name", "1010"), ("sex", "0111"), ("age", "1011")],
        &[("Pat", "1100"), ("male", "1000"), ("66", "0100")],
    )
    .expect("fixture table is valid")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    /// `trace_product(e_Pat, Pat')`, 16 alpha when the table is intact.
    pub trace_value: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn mv(terms: &[(f64, &str)]) -> Multivector {
    Multivector::from_terms(4, terms.iter().map(|&(c, s)| (c, s.parse().unwrap())))
        .expect("literal fixture")
}

fn b(s: &str) -> BladeIndex {
    s.parse().expect("literal fixture")
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.0.push(Check {
            name,
            passed,
            detail,
        });
    }

    fn mv(&mut self, name: &'static str, got: &Multivector, want: &Multivector) {
        let ok = got == want;
        self.push(name, ok, format!("got {got}, expected {want}"));
    }
}

/// Runs the fixture checks against the pinned table.
pub fn verify(factors: usize) -> Result<VerifyReport> {
    verify_table(&fixture_table(), factors)
}

/// Runs the fixture checks against `table`, which must define the fixture's
/// role and filler names. Expected values are the fixed worked-example
/// values, so a tampered table fails.
pub fn verify_table(table: &SymbolTable, factors: usize) -> Result<VerifyReport> {
    if factors != FIXTURE_FACTORS {
        return Err(Error::RepresentationTooSmall {
            dim: table.n(),
            factors,
            needed: FIXTURE_FACTORS,
        });
    }
    let mut checks = Checks(Vec::new());
    let weights = [ALPHA, BETA, GAMMA];

    let record = ga_encode(table, &PAIRS, Some(&weights))?;
    let payload = record.as_ga()?;
    checks.mv(
        "encoded record",
        payload,
        &mv(&[(ALPHA, "0110"), (GAMMA - BETA, "1111")]),
    );

    // Left multiplication by e_name without the inverse sign.
    let name = Multivector::from_blade(&table.role("name")?.clone().into(), 1.0);
    let pat_noisy = name.gp(payload)?;
    checks.mv(
        "unbound name",
        &pat_noisy,
        &mv(&[(-ALPHA, "1100"), (GAMMA - BETA, "0101")]),
    );

    let decoded = ga_decode(&record, table, "name")?;
    let inverse_sign = f64::from(blade_inverse(table.role("name")?).sign());
    checks.mv(
        "inverse unbinding",
        &decoded.raw,
        &pat_noisy.scale(inverse_sign),
    );

    let pat = Multivector::from_blade(&table.filler("Pat")?.clone().into(), 1.0);
    let trace_value = pat.trace_product(&pat_noisy, factors)?;
    checks.push(
        "trace scalar product",
        trace_value == 16.0 * ALPHA,
        format!("got {trace_value}, expected {}", 16.0 * ALPHA),
    );

    let others: Vec<(String, f64)> = ["male", "66"]
        .iter()
        .map(|f| {
            let e = Multivector::from_blade(&table.filler(f)?.clone().into(), 1.0);
            Ok((f.to_string(), e.trace_product(&pat_noisy, factors)?))
        })
        .collect::<Result<_>>()?;
    checks.push(
        "other fillers orthogonal",
        others.iter().all(|(_, v)| *v == 0.0),
        format!("{others:?}"),
    );

    let matrix_trace = rep(&pat, factors)?
        .try_mul(&rep(&pat_noisy, factors)?)?
        .trace();
    let matrix_ok = (matrix_trace - Complex64::new(trace_value, 0.0)).norm() <= MATRIX_TOLERANCE;
    checks.push(
        "matrix trace agrees",
        matrix_ok,
        format!("Tr(rep(e_Pat) rep(Pat')) = {matrix_trace}, algebraic {trace_value}"),
    );

    let mut summed = ComplexMatrix::zeros(1 << factors)?;
    for ((r, f), w) in PAIRS.iter().zip(weights) {
        let bound = rep(
            &Multivector::from_blade(&table.role(r)?.clone().into(), w),
            factors,
        )?
        .try_mul(&blade_matrix(table.filler(f)?, factors)?)?;
        summed = summed.try_add(&bound)?;
    }
    let record_diff = rep(payload, factors)?.max_abs_diff(&summed);
    checks.push(
        "matrix record agrees",
        record_diff <= MATRIX_TOLERANCE,
        format!("max entry difference {record_diff:e}"),
    );

    let e14 = blade_matrix(&b("1001"), factors)?;
    let i = Complex64::new(0.0, 1.0);
    let printed: Vec<Complex64> = [i, -i, -i, i].iter().cycle().take(16).copied().collect();
    let diag_ok = e14.approx_eq(&ComplexMatrix::diagonal(&printed)?, MATRIX_TOLERANCE)
        && e14.trace().norm() <= MATRIX_TOLERANCE;
    checks.push(
        "e1e4 traceless diagonal",
        diag_ok,
        format!("trace {}", e14.trace()),
    );

    checks.push(
        "clean-up selects Pat",
        decoded.filler == "Pat" && !decoded.ambiguous,
        format!(
            "winner {} with score {} (ambiguous: {})",
            decoded.filler, decoded.score, decoded.ambiguous
        ),
    );

    Ok(VerifyReport {
        checks: checks.0,
        trace_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_fixture_passes() {
        let report = verify(FIXTURE_FACTORS).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.trace_value, 32.0);
    }

    #[test]
    fn other_factor_counts_are_rejected() {
        assert!(verify(3).is_err());
        assert!(verify(5).is_err());
    }

    #[test]
    fn tampered_role_fails_first_at_the_record() {
        let table = table_from_parts(
            4,
            2,
            &[("name", "1010"), ("sex", "1011"), ("age", "0111")],
            &[("Pat", "1100"), ("male", "1000"), ("66", "0100")],
        )
        .unwrap();
        let report = verify_table(&table, FIXTURE_FACTORS).unwrap();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "encoded record");
    }
}
