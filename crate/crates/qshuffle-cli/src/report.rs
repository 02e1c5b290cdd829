//! The `verify` orchestrator and its report.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use qshuffle::hecke::{
    b2r, c_factorization_check, r2b, r2r, recursion_check, RegularRep, RightAction,
};
use qshuffle::markov::{mallows, transition_matrix};
use qshuffle::qpoly::{rational_compact, Rational};
use qshuffle::seminormal::{seminormal_suite, AdmissibleQ, SeminormalReport};
use qshuffle::spectra::{
    b_charpoly_factored, bruteforce_charpoly, build_eigenbasis, evaluate_factored, kernel_basis,
    r2r_charpoly_factored, specht_route_charpoly, straightening_scalar, strip_vanishing_check,
    ShuffleOp,
};
use qshuffle::symmetric::derangement_count;
use qshuffle::tableaux::{
    count_syt, desarrangement_count, enumerate_syt, horizontal_strips, Partition, SkewShape,
};

use crate::error::{CliError, Result};

/// Largest `n` accepted by `verify`.
pub const MAX_VERIFY_N: usize = 5;

/// Stated in every report: what a passing run does and does not establish.
pub const SCOPE_NOTE: &str = "Identities in the Hecke algebra are checked symbolically in q; \
everything else is checked exactly at the listed rational q values and the given n. \
Statements for all complex q follow only through polynomial identity arguments \
(agreement at enough points for the degrees involved), not from this run alone.";

/// How characteristic polynomials are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// From the `n! × n!` regular representation matrix.
    Regular,
    /// As `∏_λ charpoly(op|_{S^λ})^{f^λ}` over seminormal Specht modules.
    Specht,
}

impl FromStr for Route {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "regular" => Ok(Route::Regular),
            "specht" => Ok(Route::Specht),
            other => Err(CliError::Usage(format!(
                "unknown route {other:?} (regular, specht)"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    /// The invariant being checked, in symbols.
    pub statement: String,
    pub q0: Option<String>,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub n: usize,
    pub q_values: Vec<String>,
    pub route: Route,
    pub scope_note: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_md(&self) -> String {
        let qs = self.q_values.join(", ");
        let mut out = format!(
            "## {} (n = {}, q ∈ {{{qs}}}, route {:?})\n\nversion {}\n\n| check | q | status | ms | detail |\n|---|---|---|---|---|\n",
            self.suite, self.n, self.route, self.version
        );
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                c.id,
                c.q0.as_deref().unwrap_or("symbolic"),
                if c.passed { "pass" } else { "FAIL" },
                c.elapsed_ms,
                c.detail
            ));
        }
        out.push_str(&format!("\n{}\n", self.scope_note));
        out
    }
}

type CheckOutcome = qshuffle::error::Result<(bool, String)>;

fn run_check(
    id: &str,
    statement: &str,
    q0: Option<&Rational>,
    f: impl FnOnce() -> CheckOutcome,
) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckResult {
        id: id.to_string(),
        statement: statement.to_string(),
        q0: q0.map(rational_compact),
        passed,
        elapsed_ms: start.elapsed().as_millis(),
        detail,
    }
}

fn failures_detail(failures: &[String], what: &str) -> (bool, String) {
    if failures.is_empty() {
        (true, format!("all {what}"))
    } else {
        (false, format!("failed for {}", failures.join(", ")))
    }
}

fn hecke_checks(n: usize, out: &mut Vec<CheckResult>) {
    if n >= 2 {
        out.push(run_check(
            "hecke.recursion",
            "B_n R_n = (q R_{n-1} + [n]_q + q^n J_n) B_n",
            None,
            || Ok((recursion_check(n)?, "exact identity in H_n(q)".into())),
        ));
    }
    out.push(run_check(
        "hecke.c_factorization",
        "C_j^(n) = m_(1^j, n-j) x_(j, n-j) = x_(j, 1^(n-j))",
        None,
        || {
            let bad: Vec<String> = (0..=n)
                .filter(|&j| !c_factorization_check(j, n).unwrap_or(false))
                .map(|j| format!("j={j}"))
                .collect();
            Ok(failures_detail(&bad, "0 ≤ j ≤ n"))
        },
    ));
}

fn seminormal_checks(n: usize, q0: &Rational, out: &mut Vec<CheckResult>) {
    type Pick = fn(&SeminormalReport) -> bool;
    let parts: [(&str, &str, Pick); 4] = [
        (
            "seminormal.relations",
            "generator matrices on S^λ satisfy the Hecke relations",
            |r| r.relations,
        ),
        (
            "seminormal.idempotents",
            "Σ_t p_t = 1 and Σ_t rank p_t = dim W^λ (complete, orthogonal)",
            |r| r.idempotents,
        ),
        (
            "seminormal.jucys_murphy",
            "w_t J_m = [c_{t,m}]_q w_t",
            |r| r.jucys_murphy,
        ),
        (
            "seminormal.dipper_james",
            "T_{s_i} on units matches the seminormal formula",
            |r| r.dipper_james,
        ),
    ];
    // one suite run per shape feeds all four rows, each carrying the shared time
    let start = Instant::now();
    let reports: Vec<(Partition, qshuffle::error::Result<SeminormalReport>)> = Partition::all(n)
        .into_iter()
        .map(|lam| {
            let r = seminormal_suite(&lam, q0);
            (lam, r)
        })
        .collect();
    let elapsed_ms = start.elapsed().as_millis();
    for (id, statement, pick) in parts {
        let mut bad = Vec::new();
        for (lam, r) in &reports {
            match r {
                Ok(r) if pick(r) => {}
                Ok(_) => bad.push(lam.to_string()),
                Err(e) => bad.push(format!("{lam} ({e})")),
            }
        }
        let (passed, detail) = failures_detail(&bad, "λ ⊢ n");
        out.push(CheckResult {
            id: id.to_string(),
            statement: statement.to_string(),
            q0: Some(rational_compact(q0)),
            passed,
            elapsed_ms,
            detail: format!("{detail} (shared run)"),
        });
    }
}

fn spectra_checks(n: usize, q0: &Rational, route: Route, out: &mut Vec<CheckResult>) {
    let positive = *q0 > Rational::from_integer(0.into());
    if positive && n <= 4 {
        out.push(run_check(
            "spectra.straightening",
            "w_{t(s)} C_{|μ|} = α_t w_{t^{λ/μ}(s)} C_{|μ|} with α_t independent of s",
            Some(q0),
            || {
                let mut bad = Vec::new();
                for lam in Partition::all(n) {
                    for mu in horizontal_strips(&lam) {
                        for t in enumerate_syt(&SkewShape::new(lam.clone(), mu.clone())?) {
                            if straightening_scalar(&t, q0)?.is_none() {
                                bad.push(format!("{lam}/{mu} {:?}", t.rows()));
                            }
                        }
                    }
                }
                Ok(failures_detail(&bad, "strip tableaux"))
            },
        ));
    }
    out.push(run_check(
        "spectra.strip_vanishing",
        "u Φ_t C_{|μ|} p_λ = 0 when λ/μ is not a horizontal strip",
        Some(q0),
        || {
            let mut bad = Vec::new();
            let mut count = 0;
            for lam in Partition::all(n) {
                for k in 0..n {
                    for mu in Partition::all(k) {
                        if !lam.contains(&mu)
                            || SkewShape::new(lam.clone(), mu.clone())?.is_horizontal_strip()
                        {
                            continue;
                        }
                        count += 1;
                        if !strip_vanishing_check(&lam, &mu, q0)? {
                            bad.push(format!("{lam}/{mu}"));
                        }
                    }
                }
            }
            Ok(failures_detail(&bad, &format!("{count} non-strip pairs")))
        },
    ));
    out.push(run_check(
        "spectra.kernel_dimensions",
        "dim ker(R_n|S^λ) = d^λ and Σ_λ f^λ d^λ = d_n",
        Some(q0),
        || {
            let mut bad = Vec::new();
            let mut total = 0;
            for lam in Partition::all(n) {
                let k = kernel_basis(&lam, q0)?.len();
                if k != desarrangement_count(&lam) {
                    bad.push(format!("{lam}: {k}"));
                }
                total += k * count_syt(&lam);
            }
            if total != derangement_count(n) as usize {
                bad.push(format!("Σ f^λ d^λ = {total}"));
            }
            Ok(failures_detail(&bad, "λ ⊢ n"))
        },
    ));
    if positive {
        out.push(run_check(
            "spectra.eigenbasis",
            "𝔅_λ is a basis of S^λ of R_n-eigenvectors with eigenvalues 𝓔_{λ/μ}",
            Some(q0),
            || {
                let mut bad = Vec::new();
                for lam in Partition::all(n) {
                    if let Err(e) = build_eigenbasis(&lam, q0) {
                        bad.push(format!("{lam} ({e})"));
                    }
                }
                Ok(failures_detail(&bad, "λ ⊢ n"))
            },
        ));
    }
    let r2r_expected = || evaluate_factored(&r2r_charpoly_factored(n)?, q0);
    let b_expected = || evaluate_factored(&b_charpoly_factored(n)?, q0);
    match route {
        Route::Regular => {
            out.push(run_check(
                "spectra.r2r_charpoly",
                "charpoly of R_n on H_n = Π (y - 𝓔_{λ/μ})^{f^λ d^μ}",
                Some(q0),
                || {
                    Ok((
                        bruteforce_charpoly(&r2r(n), q0)? == r2r_expected()?,
                        "regular representation".into(),
                    ))
                },
            ));
            out.push(run_check(
                "spectra.b_charpoly",
                "charpoly of B_n and B*_n on H_n = Π (y - [n-j]_q)^{C(n,j) d_j}",
                Some(q0),
                || {
                    let e = b_expected()?;
                    Ok((
                        bruteforce_charpoly(&b2r(n), q0)? == e
                            && bruteforce_charpoly(&r2b(n), q0)? == e,
                        "regular representation".into(),
                    ))
                },
            ));
        }
        Route::Specht => {
            out.push(run_check(
                "spectra.r2r_charpoly",
                "charpoly of R_n on H_n = Π (y - 𝓔_{λ/μ})^{f^λ d^μ}",
                Some(q0),
                || {
                    Ok((
                        specht_route_charpoly(ShuffleOp::RandomToRandom, n, q0)? == r2r_expected()?,
                        "Π_λ charpoly(R_n|S^λ)^{f^λ}".into(),
                    ))
                },
            ));
            out.push(run_check(
                "spectra.b_charpoly",
                "charpoly of B_n and B*_n on H_n = Π (y - [n-j]_q)^{C(n,j) d_j}",
                Some(q0),
                || {
                    let e = b_expected()?;
                    Ok((
                        specht_route_charpoly(ShuffleOp::BottomToRandom, n, q0)? == e
                            && specht_route_charpoly(ShuffleOp::RandomToBottom, n, q0)? == e,
                        "Π_λ charpoly(op|S^λ)^{f^λ}".into(),
                    ))
                },
            ));
        }
    }
}

/// Runs every suite for `n` at each `q0`.
pub fn run_verify(n: usize, q_list: &[Rational], route: Route) -> Result<VerificationReport> {
    if n == 0 || n > MAX_VERIFY_N {
        return Err(CliError::Usage(format!(
            "verify needs 1 ≤ n ≤ {MAX_VERIFY_N}, got {n}"
        )));
    }
    for q0 in q_list {
        AdmissibleQ::new(q0.clone(), n)?;
    }
    let mut checks = Vec::new();
    hecke_checks(n, &mut checks);
    for q0 in q_list {
        checks.push(run_check(
            "hecke.relations",
            "T_i^2 = (q-1) T_i + q, braid and commutation relations on the regular representation",
            Some(q0),
            || {
                let rep = RegularRep::new(n, q0.clone())?;
                Ok(match rep.check_relations() {
                    Ok(()) => (true, format!("{} × {} matrices", rep.dim(), rep.dim())),
                    Err(e) => (false, e),
                })
            },
        ));
        seminormal_checks(n, q0, &mut checks);
        spectra_checks(n, q0, route, &mut checks);
        if *q0 >= Rational::from_integer(1.into()) {
            checks.push(run_check(
                "markov.stationarity",
                "π P = π for π(w) ∝ q^{ℓ(w)}",
                Some(q0),
                || {
                    let p = transition_matrix(n, q0)?;
                    let pi = mallows(n, q0)?;
                    Ok((pi.step(&p) == pi, "exact".into()))
                },
            ));
        }
    }
    Ok(VerificationReport {
        suite: "verify".into(),
        version: crate::VERSION.into(),
        n,
        q_values: q_list.iter().map(rational_compact).collect(),
        route,
        scope_note: SCOPE_NOTE.into(),
        checks,
    })
}
