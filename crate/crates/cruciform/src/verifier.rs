//! Adjudication of the closed-form product formulas against the exact
//! counting engines.
//!
//! Each suite sweeps a parameter family, computes the tiling count with the
//! engines and the corresponding closed form, and records one ledger entry
//! per instance. A formula that disagrees with the engines on even one
//! instance is reported as refuted *as printed* — the engines are
//! cross-checked against each other, so a systematic discrepancy points at
//! the printed constant, and the suite then fits an affine law to the
//! observed power-of-two discrepancies to document the correction.

use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::closed_forms::{
    conjecture_value, corollary_value, cruciform_value, elbow_value, half_square_value,
    krattenthaler_value, t_region_value,
};
use crate::dualgraph::intruded_ar_graph;
use crate::engines::{count, count_kasteleyn, count_transfer, BigCount, Engine};
use crate::exact::ExactScaled;
use crate::geometry::{
    build_cruciform, build_di_francesco, build_elbow, build_half_square, build_t_region,
    CruciformParams, Region,
};

/// Outcome of a single formula-versus-count comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    FormulaUndefined,
    EngineSkipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::FormulaUndefined => "formula_undefined",
            Status::EngineSkipped => "engine_skipped",
        })
    }
}

/// Suite-level conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every compared instance matched exactly.
    Confirmed,
    /// At least one instance contradicts the printed formula while the
    /// engines agree among themselves.
    RefutedAsPrinted,
    /// Diagnostic only; no pass/fail claim.
    Undecided,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::RefutedAsPrinted => "refuted-as-printed",
            Verdict::Undecided => "undecided",
        })
    }
}

/// One compared instance.
#[derive(Debug, Clone, Serialize)]
pub struct LedgerEntry {
    pub suite: String,
    pub params: String,
    pub count: String,
    pub formula_pow2: String,
    pub formula_rational: String,
    pub ratio: String,
    pub status: Status,
}

/// One suite of comparisons with its conclusion and free-form notes.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub verdict: Verdict,
    pub hard_failure: bool,
    pub notes: Vec<String>,
    pub entries: Vec<LedgerEntry>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            verdict: Verdict::Undecided,
            hard_failure: false,
            notes: Vec::new(),
            entries: Vec::new(),
        }
    }

    pub fn matches(&self) -> usize {
        self.entries.iter().filter(|e| e.status == Status::Match).count()
    }

    pub fn mismatches(&self) -> usize {
        self.entries.iter().filter(|e| e.status == Status::Mismatch).count()
    }

    /// Compare an engine count against a formula value and record the entry.
    /// Returns the base-2 exponent of formula/count when that ratio is a
    /// pure power of two (the usual shape of a misprinted prefactor).
    fn compare(
        &mut self,
        params: String,
        count: &BigCount,
        formula: Option<&ExactScaled>,
    ) -> Option<Ratio<i64>> {
        let (status, formula_pow2, formula_rational, ratio, exponent) = match formula {
            None => (
                Status::FormulaUndefined,
                String::from("undefined"),
                String::from("undefined"),
                String::from("undefined"),
                None,
            ),
            Some(f) => {
                let doc = f.to_doc();
                if count.is_zero() {
                    let matches = f.odd_part().is_zero();
                    (
                        if matches { Status::Match } else { Status::Mismatch },
                        doc.pow2,
                        doc.rational,
                        String::from("undefined (count = 0)"),
                        None,
                    )
                } else {
                    let ratio = f.clone() / ExactScaled::from_biguint(count);
                    let matches = ratio == ExactScaled::one();
                    let exponent = if !matches && ratio.is_pow2() {
                        Some(ratio.exponent())
                    } else {
                        None
                    };
                    (
                        if matches { Status::Match } else { Status::Mismatch },
                        doc.pow2,
                        doc.rational,
                        format!("{ratio}"),
                        exponent,
                    )
                }
            }
        };
        self.entries.push(LedgerEntry {
            suite: self.name.clone(),
            params,
            count: count.to_string(),
            formula_pow2,
            formula_rational,
            ratio,
            status,
        });
        exponent
    }

    fn conclude(&mut self) {
        self.verdict = if self.hard_failure {
            Verdict::Undecided
        } else if self.mismatches() > 0 {
            Verdict::RefutedAsPrinted
        } else if self.matches() > 0 {
            Verdict::Confirmed
        } else {
            Verdict::Undecided
        };
    }
}

/// The full adjudication report.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn hard_failure(&self) -> bool {
        self.suites.iter().any(|s| s.hard_failure)
    }

    pub fn any_refuted(&self) -> bool {
        self.suites.iter().any(|s| s.verdict == Verdict::RefutedAsPrinted)
    }

    /// Process exit code: 0 all confirmed, 2 when some printed formula is
    /// refuted, 1 on internal (engine) failure.
    pub fn exit_code(&self) -> i32 {
        if self.hard_failure() {
            1
        } else if self.any_refuted() {
            2
        } else {
            0
        }
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "suite,params,count,formula_pow2,formula_rational,ratio,status\n",
        );
        for s in &self.suites {
            for e in &s.entries {
                for field in [
                    &e.suite,
                    &e.params,
                    &e.count,
                    &e.formula_pow2,
                    &e.formula_rational,
                    &e.ratio,
                ] {
                    out.push('"');
                    out.push_str(&field.replace('"', "\"\""));
                    out.push_str("\",");
                }
                out.push_str(&e.status.to_string());
                out.push('\n');
            }
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out.push_str(&format!(
                "{}: {} ({} match, {} mismatch, {} entries)\n",
                s.name,
                s.verdict,
                s.matches(),
                s.mismatches(),
                s.entries.len()
            ));
            for n in &s.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        out
    }
}

/// All balanced, structurally valid parameter tuples with `m <= max_m`,
/// `n <= max_n`, and every pier length bounded by `pier` in absolute value.
fn balanced_tuples(max_m: i64, max_n: i64, pier: i64) -> Vec<(i64, i64, i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for n in 0..=max_n {
            for a in 0..=m.min(pier) {
                for c in 0..=m.min(pier) {
                    for b in -pier..=pier {
                        let d = m + n - 1 - a - b - c;
                        if !(-pier..=pier).contains(&d) {
                            continue;
                        }
                        if CruciformParams::new(m, n, a, b, c, d).is_ok() {
                            out.push((m, n, a, b, c, d));
                        }
                    }
                }
            }
        }
    }
    out
}

fn cruciform_region(t: (i64, i64, i64, i64, i64, i64)) -> Region {
    let (m, n, a, b, c, d) = t;
    build_cruciform(CruciformParams::new(m, n, a, b, c, d).expect("validated tuple"))
        .expect("validated tuple builds")
}

fn tuple_params(t: (i64, i64, i64, i64, i64, i64)) -> String {
    format!("m={},n={},a={},b={},c={},d={}", t.0, t.1, t.2, t.3, t.4, t.5)
}

/// Count with the automatic engine and cross-check with the transfer
/// engine; records a hard failure note on disagreement.
fn checked_count(report: &mut SuiteReport, region: &Region, params: &str) -> BigCount {
    let auto = count(region, Engine::Auto).expect("auto engine is total");
    if let Ok(transfer) = count_transfer(region) {
        if transfer != auto {
            report.hard_failure = true;
            report.notes.push(format!(
                "ENGINE DISAGREEMENT at {params}: auto={auto} transfer={transfer}"
            ));
        }
    }
    auto
}

/// Exact affine fit `target = sum(coeff_i * var_i) + const` over integer
/// parameter vectors, via Gaussian elimination on the normal equations.
/// Returns a printable law only when the fit is exact on every sample.
pub fn affine_fit(names: &[&str], samples: &[(Vec<i64>, Ratio<i64>)]) -> Option<String> {
    if samples.is_empty() {
        return None;
    }
    let k = names.len() + 1;
    let rat = |v: i64| BigRational::from_integer(v.into());
    let rows: Vec<(Vec<BigRational>, BigRational)> = samples
        .iter()
        .map(|(params, target)| {
            let mut row: Vec<BigRational> = params.iter().map(|&p| rat(p)).collect();
            row.push(BigRational::one());
            let t = BigRational::new((*target.numer()).into(), (*target.denom()).into());
            (row, t)
        })
        .collect();
    // normal equations: (A^T A) x = A^T b
    let mut m = vec![vec![BigRational::zero(); k + 1]; k];
    for (row, t) in &rows {
        for i in 0..k {
            for j in 0..k {
                m[i][j] += &row[i] * &row[j];
            }
            m[i][k] += &row[i] * t;
        }
    }
    // elimination with column skipping; dependent columns get coefficient 0
    let mut pivot_of_col = vec![None; k];
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..k).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..=k {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..k {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=k {
                    m[i][j] = &m[i][j] - &f * &m[r][j];
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == k {
            break;
        }
    }
    let solution: Vec<BigRational> = (0..k)
        .map(|c| match pivot_of_col[c] {
            Some(r) => m[r][k].clone(),
            None => BigRational::zero(),
        })
        .collect();
    // exact-fit validation
    for (row, t) in &rows {
        let predicted: BigRational = row.iter().zip(&solution).map(|(a, x)| a * x).sum();
        if &predicted != t {
            return None;
        }
    }
    let mut terms = Vec::new();
    for (i, name) in names.iter().enumerate() {
        if !solution[i].is_zero() {
            terms.push(format!("({})*{}", solution[i], name));
        }
    }
    if !solution[k - 1].is_zero() || terms.is_empty() {
        terms.push(format!("({})", solution[k - 1]));
    }
    Some(terms.join(" + "))
}

fn note_fit(report: &mut SuiteReport, what: &str, names: &[&str], samples: &[(Vec<i64>, Ratio<i64>)]) {
    if samples.is_empty() {
        return;
    }
    match affine_fit(names, samples) {
        Some(law) => report.notes.push(format!(
            "{what}: log2(formula/count) fits {law} exactly on all {} power-of-two discrepancies",
            samples.len()
        )),
        None => report.notes.push(format!(
            "{what}: {} power-of-two discrepancies, no exact affine law in {:?}",
            samples.len(),
            names
        )),
    }
}

/// Printed cruciform product formula versus exact counts over every
/// balanced tuple with m,n <= 3 and pier lengths in [-3,3].
pub fn verify_cruciform_formula() -> SuiteReport {
    let mut report = SuiteReport::new("cruciform_formula");
    let mut discrepancies = Vec::new();
    let mut corrected_ok = 0usize;
    let mut corrected_bad = 0usize;
    for t in balanced_tuples(3, 3, 3) {
        let (m, n, a, b, c, d) = t;
        let region = cruciform_region(t);
        let params = tuple_params(t);
        let cnt = checked_count(&mut report, &region, &params);
        let formula = cruciform_value(m, n, a, b, c, d).ok();
        if let Some(exp) = report.compare(params, &cnt, formula.as_ref()) {
            discrepancies.push((vec![m, n, a, b, c, d], exp));
        }
        // candidate correction: flip the sign of the (a+c)(b+d)/2 exponent
        // term, i.e. divide the printed value by 2^{(a+c)(b+d)}
        if let (Some(f), false) = (formula, cnt.is_zero()) {
            let corrected = f / ExactScaled::pow2(Ratio::from_integer((a + c) * (b + d)));
            if corrected == ExactScaled::from_biguint(&cnt) {
                corrected_ok += 1;
            } else {
                corrected_bad += 1;
            }
        }
    }
    note_fit(
        &mut report,
        "cruciform formula",
        &["m", "n", "a", "b", "c", "d"],
        &discrepancies,
    );
    report.notes.push(format!(
        "candidate correction: replacing the exponent term +(a+c)(b+d)/2 by -(a+c)(b+d)/2 \
         reproduces the exact count on {corrected_ok} of {} swept tuples",
        corrected_ok + corrected_bad
    ));
    report.conclude();
    report
}

/// Printed elbow product formula versus exact counts for all balanced
/// elbow regions with n <= 4.
pub fn verify_elbow_formula() -> SuiteReport {
    let mut report = SuiteReport::new("elbow_formula");
    let mut discrepancies = Vec::new();
    for n in 1..=4i64 {
        for a in 0..=n {
            let b = n - a;
            let Ok(region) = build_elbow(n, a, b) else {
                continue;
            };
            let params = format!("n={n},a={a},b={b}");
            let cnt = checked_count(&mut report, &region, &params);
            let formula = elbow_value(n, a, b).ok();
            if let Some(exp) = report.compare(params, &cnt, formula.as_ref()) {
                discrepancies.push((vec![n, a, b], exp));
            }
        }
    }
    note_fit(&mut report, "elbow formula", &["n", "a", "b"], &discrepancies);
    report.conclude();
    report
}

/// Count-level complementation step: M(C_{m,n}) = 2^{n-a-c-2} M(C_{m+1,n-1})
/// with every pier shifted by one, checked on exact counts.
pub fn verify_complementation_counts() -> SuiteReport {
    let mut report = SuiteReport::new("complementation_counts");
    for t in balanced_tuples(2, 3, 2) {
        let (m, n, a, b, c, d) = t;
        if n < 1 {
            continue;
        }
        let Ok(comp_params) = CruciformParams::new(m + 1, n - 1, a + 1, b - 1, c + 1, d - 1)
        else {
            continue;
        };
        let region = cruciform_region(t);
        let comp = build_cruciform(comp_params).expect("validated tuple builds");
        let params = format!("{} -> {}", tuple_params(t), tuple_params((m + 1, n - 1, a + 1, b - 1, c + 1, d - 1)));
        let cnt = checked_count(&mut report, &region, &params);
        let comp_cnt = checked_count(&mut report, &comp, &params);
        let e = n - a - c - 2;
        // claimed value of M(C) in terms of the complement's count
        let claimed = if comp_cnt.is_zero() {
            report.entries.push(LedgerEntry {
                suite: report.name.clone(),
                params,
                count: cnt.to_string(),
                formula_pow2: String::from("0"),
                formula_rational: String::from("0"),
                ratio: String::from("undefined (complement count = 0)"),
                status: if cnt.is_zero() { Status::Match } else { Status::Mismatch },
            });
            continue;
        } else {
            Some(ExactScaled::from_biguint(&comp_cnt) * ExactScaled::pow2(Ratio::from_integer(e)))
        };
        report.compare(params, &cnt, claimed.as_ref());
    }
    report.conclude();
    report
}

/// Formula-level consistency of the printed cruciform formula with the
/// printed complementation step. The ratio of the two formula values is
/// always a pure power of two; this suite compares its exponent against the
/// printed step exponent n-a-c-2 and fits the observed exponent as an
/// affine law in (m,n,a,c).
pub fn verify_complementation_chain() -> SuiteReport {
    let mut report = SuiteReport::new("complementation_chain");
    let mut tuples = balanced_tuples(5, 4, 3);
    tuples.push((9, 6, 3, 4, 5, 2)); // worked instance with a known step value
    let mut observed = Vec::new();
    for t in tuples {
        let (m, n, a, b, c, d) = t;
        if n < 1 || CruciformParams::new(m + 1, n - 1, a + 1, b - 1, c + 1, d - 1).is_err() {
            continue;
        }
        let (Ok(lhs), Ok(rhs)) = (
            cruciform_value(m, n, a, b, c, d),
            cruciform_value(m + 1, n - 1, a + 1, b - 1, c + 1, d - 1),
        ) else {
            continue;
        };
        let ratio = lhs / rhs;
        let params = tuple_params(t);
        let printed = Ratio::from_integer(n - a - c - 2);
        let status = if ratio.is_pow2() && ratio.exponent() == printed {
            Status::Match
        } else {
            Status::Mismatch
        };
        if ratio.is_pow2() {
            observed.push((vec![m, n, a, c], ratio.exponent()));
        }
        report.entries.push(LedgerEntry {
            suite: report.name.clone(),
            params,
            count: String::from("(formula-level)"),
            formula_pow2: format!("step exponent printed: {printed}"),
            formula_rational: format!("step exponent from formula: {}", ratio.exponent()),
            ratio: format!("{ratio}"),
            status,
        });
    }
    note_fit(
        &mut report,
        "formula-implied step exponent",
        &["m", "n", "a", "c"],
        &observed,
    );
    if let Some(law) = affine_fit(
        &["m", "n", "a", "c"],
        &observed
            .iter()
            .map(|(p, e)| (p.clone(), *e - Ratio::from_integer(p[1] - p[2] - p[3] - 2)))
            .collect::<Vec<_>>(),
    ) {
        report.notes.push(format!(
            "difference to the printed exponent n-a-c-2 fits {law}; the two agree exactly on the locus where that expression vanishes"
        ));
    }
    report.conclude();
    report
}

/// Printed doubly intruded Aztec rectangle formula versus exact counts of
/// the corresponding graphs.
pub fn verify_intruded_formula() -> SuiteReport {
    let mut report = SuiteReport::new("intruded_rectangle_formula");
    let mut discrepancies = Vec::new();
    let mut corrected_chain_ok = 0usize;
    let mut corrected_chain_bad = 0usize;
    for t in balanced_tuples(3, 3, 3) {
        let (m, n, a, b, c, d) = t;
        if m + n > 3 {
            continue;
        }
        let Ok(graph) = intruded_ar_graph(m + n, 2 * n + a + c + 1, n + a, n - d, n - b) else {
            continue;
        };
        let region = graph.to_region("intruded");
        let params = format!(
            "M={},N={},k={},p={},q={} (from {})",
            m + n,
            2 * n + a + c + 1,
            n + a,
            n - d,
            n - b,
            tuple_params(t)
        );
        let cnt = checked_count(&mut report, &region, &params);
        let formula = krattenthaler_value(m, n, a, b, c, d).ok();
        if let Some(exp) = report.compare(params, &cnt, formula.as_ref()) {
            discrepancies.push((vec![m, n, a, b, c, d], exp));
        }
        // cross-check: the sign-corrected cruciform value divided by the
        // telescoped step prefactor must equal the graph count exactly
        if !cnt.is_zero() {
            if let Ok(f) = cruciform_value(m, n, a, b, c, d) {
                let chain = n * (n - a - c - 2) - 3 * n * (n - 1) / 2;
                let truth = f
                    / ExactScaled::pow2(Ratio::from_integer((a + c) * (b + d)))
                    / ExactScaled::pow2(Ratio::from_integer(chain));
                if truth == ExactScaled::from_biguint(&cnt) {
                    corrected_chain_ok += 1;
                } else {
                    corrected_chain_bad += 1;
                }
            }
        }
    }
    let nonpow2 = report
        .entries
        .iter()
        .filter(|e| e.status == Status::Mismatch)
        .count()
        - discrepancies.len();
    note_fit(
        &mut report,
        "intruded rectangle formula",
        &["m", "n", "a", "b", "c", "d"],
        &discrepancies,
    );
    report.notes.push(format!(
        "{nonpow2} discrepancies are not powers of two (stray odd factors), so the printed \
         value is off in the hyperfactorial part as well, not just in the exponent"
    ));
    report.notes.push(format!(
        "the sign-corrected cruciform formula divided by the telescoped step prefactor \
         2^(n(n-a-c-2)-3n(n-1)/2) equals the graph count on {corrected_chain_ok} of {} tuples",
        corrected_chain_ok + corrected_chain_bad
    ));
    report.conclude();
    report
}

/// Count-level telescoped complementation: M(C_{m,n}) equals
/// 2^{n(n-a-c-2)-3n(n-1)/2} times the count of the fully reduced n=0
/// cruciform (the doubly intruded rectangle).
pub fn verify_reduction_chain() -> SuiteReport {
    let mut report = SuiteReport::new("reduction_chain");
    for t in balanced_tuples(2, 3, 2) {
        let (m, n, a, b, c, d) = t;
        if n < 1 || CruciformParams::new(m + n, 0, a + n, b - n, c + n, d - n).is_err() {
            continue;
        }
        let region = cruciform_region(t);
        let reduced = cruciform_region((m + n, 0, a + n, b - n, c + n, d - n));
        let params = tuple_params(t);
        let cnt = checked_count(&mut report, &region, &params);
        let reduced_cnt = checked_count(&mut report, &reduced, &params);
        let e = n * (n - a - c - 2) - 3 * n * (n - 1) / 2;
        let claimed = if reduced_cnt.is_zero() {
            if cnt.is_zero() {
                continue;
            }
            None
        } else {
            Some(ExactScaled::from_biguint(&reduced_cnt) * ExactScaled::pow2(Ratio::from_integer(e)))
        };
        report.compare(params, &cnt, claimed.as_ref());
    }
    report.conclude();
    report
}

/// Splitting of a full-pier cruciform into an Aztec diamond and a T-region:
/// checked both on exact counts (small cases) and at formula level.
pub fn verify_splitting() -> SuiteReport {
    let mut report = SuiteReport::new("splitting");
    let mut formula_checked = 0usize;
    for m in 1..=8i64 {
        for n in 0..=8i64 {
            for b in -3..=3i64 {
                for c in 0..=m.min(3) {
                    let d = m + n - 1 - m - b - c;
                    if CruciformParams::new(m, n, m, b, c, d).is_err() {
                        continue;
                    }
                    let lhs = cruciform_value(m, n, m, b, c, d);
                    let rhs = t_region_value(m, n, b, c, d)
                        .map(|v| v * ExactScaled::pow2(Ratio::from_integer(m * (m + 1) / 2)));
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) => {
                            formula_checked += 1;
                            if l != r {
                                report.hard_failure = true;
                                report.notes.push(format!(
                                    "formula-level splitting violated at m={m},n={n},b={b},c={c},d={d}"
                                ));
                            }
                        }
                        _ => continue,
                    }
                    if m > 2 || n > 2 {
                        continue;
                    }
                    // count-level check on the small instances
                    let region = cruciform_region((m, n, m, b, c, d));
                    let t_region = build_t_region(m, n, b, c, d).expect("valid t-region");
                    let params = format!("m={m},n={n},b={b},c={c},d={d}");
                    let cnt = checked_count(&mut report, &region, &params);
                    let t_cnt = checked_count(&mut report, &t_region, &params);
                    let claimed = if t_cnt.is_zero() {
                        if cnt.is_zero() {
                            continue;
                        }
                        None
                    } else {
                        Some(
                            ExactScaled::from_biguint(&t_cnt)
                                * ExactScaled::pow2(Ratio::from_integer(m * (m + 1) / 2)),
                        )
                    };
                    report.compare(params, &cnt, claimed.as_ref());
                }
            }
        }
    }
    report.notes.push(format!(
        "formula-level splitting identity verified on {formula_checked} parameter tuples"
    ));
    report.conclude();
    report
}

/// Conjectured product formula for the T-shaped regions versus exact counts.
pub fn verify_conjecture() -> SuiteReport {
    let mut report = SuiteReport::new("conjecture");
    for n in 1..=5i64 {
        let region = build_di_francesco(n).expect("valid order");
        let params = format!("n={n}");
        let cnt = checked_count(&mut report, &region, &params);
        let formula = conjecture_value(n).ok().map(|v| ExactScaled::from_biguint(&v));
        report.compare(params, &cnt, formula.as_ref());
    }
    report.conclude();
    report
}

/// The divisibility statement: the T-region count divides the stated elbow
/// count, plus the identity between the stated value and the elbow formula.
pub fn verify_divisibility() -> SuiteReport {
    let mut report = SuiteReport::new("divisibility");
    for n in 1..=3i64 {
        let region = build_di_francesco(n).expect("valid order");
        let params = format!("n={n}");
        let cnt = checked_count(&mut report, &region, &params);
        let bound = corollary_value(n)
            .ok()
            .and_then(|v| v.to_biguint());
        match bound {
            Some(b) if !cnt.is_zero() => {
                let divides = (&b % &cnt).is_zero();
                report.entries.push(LedgerEntry {
                    suite: report.name.clone(),
                    params,
                    count: cnt.to_string(),
                    formula_pow2: b.to_string(),
                    formula_rational: format!("quotient {}", &b / &cnt),
                    ratio: String::from("(divisibility)"),
                    status: if divides { Status::Match } else { Status::Mismatch },
                });
            }
            _ => {
                report.entries.push(LedgerEntry {
                    suite: report.name.clone(),
                    params,
                    count: cnt.to_string(),
                    formula_pow2: String::from("undefined"),
                    formula_rational: String::from("undefined"),
                    ratio: String::from("undefined"),
                    status: Status::FormulaUndefined,
                });
            }
        }
    }
    let mut identity_ok = true;
    for n in 1..=30i64 {
        let lhs = corollary_value(n);
        let rhs = elbow_value(2 * n - 1, n - 1, n);
        if !matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r) {
            identity_ok = false;
            report.hard_failure = true;
        }
    }
    report.notes.push(if identity_ok {
        String::from("stated divisor equals the elbow formula at (2n-1, n-1, n) for n <= 30")
    } else {
        String::from("stated divisor DISAGREES with the elbow formula specialization")
    });
    report.conclude();
    report
}

/// Cross-engine agreement over a corpus of regions.
pub fn verify_engines() -> SuiteReport {
    let mut report = SuiteReport::new("engines");
    let mut corpus: Vec<Region> = Vec::new();
    for n in 1..=4 {
        corpus.push(crate::geometry::build_aztec_diamond(n).expect("valid"));
    }
    corpus.push(crate::geometry::build_aztec_rectangle(2, 3).expect("valid"));
    for (w, h) in [(2, 3), (4, 4), (3, 6), (8, 8)] {
        corpus.push(crate::geometry::build_rectangle(w, h).expect("valid"));
    }
    for t in [(1, 1, 1, 0, 0, 0), (1, 1, 0, 1, 1, -1), (2, 1, 1, 1, 0, 0), (2, 0, 2, -1, 1, -1)] {
        corpus.push(cruciform_region(t));
    }
    corpus.push(build_elbow(2, 1, 1).expect("valid"));
    corpus.push(build_half_square(2).expect("valid"));
    corpus.push(build_half_square(3).expect("valid"));
    corpus.push(build_t_region(1, 1, 0, 0, 0).expect("valid"));
    corpus.push(build_di_francesco(2).expect("valid"));
    for region in corpus {
        let params = format!("{} ({} cells)", region.label(), region.len());
        let auto = count(&region, Engine::Auto).expect("auto engine is total");
        let mut results = vec![("auto", auto.clone())];
        if let Ok(t) = count_transfer(&region) {
            results.push(("transfer", t));
        }
        if region.is_simply_connected() {
            if let Ok(k) = count_kasteleyn(&region) {
                results.push(("kasteleyn", k));
            }
        }
        if region.len() <= 40 {
            let brute = count(&region, Engine::Brute).expect("within budget");
            results.push(("brute", brute));
        }
        let agree = results.iter().all(|(_, v)| *v == auto);
        if !agree {
            report.hard_failure = true;
            report.notes.push(format!(
                "ENGINE DISAGREEMENT at {params}: {:?}",
                results.iter().map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>()
            ));
        }
        report.entries.push(LedgerEntry {
            suite: report.name.clone(),
            params,
            count: auto.to_string(),
            formula_pow2: format!("{} engines", results.len()),
            formula_rational: String::from("(cross-check)"),
            ratio: String::from("(cross-check)"),
            status: if agree { Status::Match } else { Status::Mismatch },
        });
    }
    report.conclude();
    report
}

/// Diagnostic (non-gating): the trigonometric half-square product does not
/// enclose the exact integer counts; the interval evaluations are recorded
/// as notes.
pub fn verify_half_square_diagnostic() -> SuiteReport {
    let mut report = SuiteReport::new("half_square_diagnostic");
    for n in 2..=4u32 {
        let region = build_half_square(n as i64).expect("valid order");
        let cnt = count(&region, Engine::Auto).expect("auto engine is total");
        let interval = half_square_value(n, 192);
        let lo = interval.midpoint_f64();
        report.notes.push(format!(
            "n={n}: exact count {cnt}, trigonometric product evaluates near {lo:.6} (interval width {:.2e}); unique enclosed integer: {:?}",
            interval.width().to_f64().unwrap_or(f64::NAN),
            interval.unique_integer().map(|i| i.to_string()),
        ));
    }
    report.verdict = Verdict::Undecided;
    report
}

/// Run every suite.
pub fn verify_all() -> VerificationReport {
    VerificationReport {
        suites: vec![
            verify_engines(),
            verify_cruciform_formula(),
            verify_elbow_formula(),
            verify_complementation_counts(),
            verify_complementation_chain(),
            verify_intruded_formula(),
            verify_reduction_chain(),
            verify_splitting(),
            verify_conjecture(),
            verify_divisibility(),
            verify_half_square_diagnostic(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_fit_recovers_law() {
        let samples: Vec<(Vec<i64>, Ratio<i64>)> = (0..4)
            .flat_map(|m| (0..4).map(move |n| (vec![m, n], Ratio::from_integer(2 * m - n + 3))))
            .collect();
        let law = affine_fit(&["m", "n"], &samples).unwrap();
        assert!(law.contains("(2)*m"), "{law}");
        assert!(law.contains("(-1)*n"), "{law}");
        assert!(law.contains("(3)"), "{law}");
        // non-affine data has no exact fit
        let bad: Vec<(Vec<i64>, Ratio<i64>)> = (0..5)
            .map(|m| (vec![m], Ratio::from_integer(m * m)))
            .collect();
        assert!(affine_fit(&["m"], &bad).is_none());
    }

    #[test]
    fn engines_suite_is_clean() {
        let r = verify_engines();
        assert!(!r.hard_failure, "{:?}", r.notes);
        assert_eq!(r.verdict, Verdict::Confirmed);
    }

    #[test]
    fn elbow_suite_confirms() {
        let r = verify_elbow_formula();
        assert!(!r.hard_failure, "{:?}", r.notes);
        assert_eq!(r.mismatches(), 0, "{:?}", r.entries);
        assert_eq!(r.verdict, Verdict::Confirmed);
    }

    #[test]
    fn complementation_counts_confirm() {
        let r = verify_complementation_counts();
        assert!(!r.hard_failure, "{:?}", r.notes);
        assert_eq!(r.verdict, Verdict::Confirmed, "{:?}", r.entries);
    }

    #[test]
    fn conjecture_suite_confirms() {
        let r = verify_conjecture();
        assert_eq!(r.verdict, Verdict::Confirmed, "{:?}", r.entries);
        let counts: Vec<&str> = r.entries.iter().map(|e| e.count.as_str()).collect();
        assert_eq!(counts, ["1", "4", "60", "3328", "678912"]);
    }

    #[test]
    fn report_serializes() {
        let report = VerificationReport {
            suites: vec![verify_conjecture()],
        };
        let json = report.to_json();
        assert!(json.contains("\"conjecture\""));
        let csv = report.to_csv();
        assert!(csv.starts_with("suite,params,"));
        assert_eq!(csv.lines().count(), 6);
        assert_eq!(report.exit_code(), 0);
    }
}
