//! The full verification suite behind `arithcorr verify`.

use std::collections::BTreeMap;

use arithcorr::arith::arithmetic_autocorr;
use arithcorr::blocks::autocorr_via_blocks;
use arithcorr::closedform::{
    brute_count_one_start, brute_count_zero_start, predict_acorr, predict_distribution, run_count,
    weighted_sum,
};
use arithcorr::gf2m::{FieldContext, Polynomial};
use arithcorr::sequences::{m_sequence, BinarySequence};
use arithcorr::DistributionTable;
use rayon::prelude::*;
use serde::Serialize;

/// Field enumeration checks are skipped above this degree.
pub const BRUTE_FORCE_MAX_DEGREE: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub m: u32,
    pub poly: String,
    pub check: &'static str,
    pub status: Status,
    pub detail: String,
}

/// One disagreement between routes, or between a route and a predicted value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub m: u32,
    pub poly: String,
    pub check: &'static str,
    pub tau: Option<usize>,
    pub values: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<CheckRow>,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
}

impl RunReport {
    pub fn new(command: &str, parameters: BTreeMap<String, String>) -> Self {
        RunReport {
            command: command.to_string(),
            parameters,
            results: Vec::new(),
            status: Status::Pass,
            mismatches: Vec::new(),
        }
    }

    /// Appends a check row; `status` follows the mismatch list.
    pub fn record(&mut self, row: CheckRow, mismatches: Vec<Mismatch>) {
        self.mismatches.extend(mismatches);
        self.results.push(row);
        let failed =
            !self.mismatches.is_empty() || self.results.iter().any(|r| r.status == Status::Fail);
        self.status = Status::from_ok(!failed);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,poly,check,status,detail\n");
        for r in &self.results {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.m,
                r.poly,
                r.check,
                r.status.as_str(),
                r.detail
            ));
        }
        for mm in &self.mismatches {
            let values = mm
                .values
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            let tau = mm.tau.map(|t| t.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "mismatch,{},{},{},{tau},{values}\n",
                mm.m, mm.poly, mm.check
            ));
        }
        let failed = self
            .results
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count();
        out.push_str(&format!(
            "summary,{} checks,{} failed,{},\n",
            self.results.len(),
            failed,
            self.status.as_str()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Per-shift values from the three routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RouteRow {
    pub tau: usize,
    pub direct: i64,
    pub blocks: i64,
    pub closed: i64,
}

impl RouteRow {
    pub fn agrees(&self) -> bool {
        self.direct == self.blocks && self.blocks == self.closed
    }
}

pub fn route_row(
    ctx: &FieldContext,
    s: &BinarySequence,
    tau: usize,
) -> arithcorr::Result<RouteRow> {
    Ok(RouteRow {
        tau,
        direct: arithmetic_autocorr(s, tau)?,
        blocks: autocorr_via_blocks(s, &s.rotate(tau))?,
        closed: predict_acorr(ctx, tau)?.predicted,
    })
}

/// All shifts, sorted by `τ` regardless of evaluation order.
pub fn route_rows(ctx: &FieldContext, s: &BinarySequence) -> arithcorr::Result<Vec<RouteRow>> {
    (1..s.period())
        .into_par_iter()
        .map(|tau| route_row(ctx, s, tau))
        .collect()
}

fn table_values(table: &DistributionTable) -> BTreeMap<String, i64> {
    table
        .entries()
        .map(|(v, c)| (v.to_string(), c as i64))
        .collect()
}

/// Runs every check for one field and appends rows to `report`.
pub fn verify_field(ctx: &FieldContext, report: &mut RunReport) {
    let m = ctx.m();
    let poly = ctx.modulus().to_string();
    let s = m_sequence(ctx);
    let n = s.period();
    let row = |check: &'static str, ok: bool, detail: String| CheckRow {
        m,
        poly: poly.clone(),
        check,
        status: Status::from_ok(ok),
        detail,
    };
    let mismatch =
        |check: &'static str, tau: Option<usize>, values: BTreeMap<String, i64>| Mismatch {
            m,
            poly: poly.clone(),
            check,
            tau,
            values,
        };

    // three routes
    let rows = route_rows(ctx, &s).expect("m-sequence shifts are valid");
    let bad: Vec<Mismatch> = rows
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| {
            let values = [
                ("direct", r.direct),
                ("blocks", r.blocks),
                ("closed", r.closed),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
            mismatch("three_way", Some(r.tau), values)
        })
        .collect();
    report.record(
        row(
            "three_way",
            bad.is_empty(),
            format!("{} shifts", rows.len()),
        ),
        bad,
    );

    // distribution
    let empirical: DistributionTable = rows.iter().map(|r| r.direct).collect();
    let expected = predict_distribution(m);
    let ok = empirical == expected;
    let bad = if ok {
        Vec::new()
    } else {
        vec![mismatch("distribution", None, table_values(&empirical))]
    };
    let detail = empirical
        .entries()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect::<Vec<_>>()
        .join(";");
    report.record(row("distribution", ok, detail), bad);

    // bound and its attainment
    let bound = (1i64 << (m - 1)) - 1;
    let within = rows.iter().all(|r| r.direct.abs() <= bound);
    let attained = empirical.multiplicity(bound) == 1 && empirical.multiplicity(-bound) == 1;
    report.record(
        row(
            "max_abs_bound",
            within && attained,
            format!("bound {bound}"),
        ),
        Vec::new(),
    );

    // balance and pattern distribution
    let patterns_ok = (1..=m as usize).all(|l| {
        s.pattern_histogram(l)
            .map(|hist| {
                hist.iter().enumerate().all(|(value, &count)| {
                    count == (1usize << (m as usize - l)) - (value == 0) as usize
                })
            })
            .unwrap_or(false)
    });
    report.record(
        row("pattern_distribution", patterns_ok, format!("l=1..{m}")),
        Vec::new(),
    );

    let classical_bad: Vec<Mismatch> = (1..n)
        .into_par_iter()
        .filter_map(|tau| {
            let c = s.classical_autocorr(tau);
            (c != -1).then(|| {
                mismatch(
                    "classical",
                    Some(tau),
                    BTreeMap::from([("value".to_string(), c)]),
                )
            })
        })
        .collect();
    report.record(
        row(
            "classical",
            classical_bad.is_empty(),
            "all shifts -1".into(),
        ),
        classical_bad,
    );

    if m <= BRUTE_FORCE_MAX_DEGREE {
        let bad: Vec<Mismatch> = (1..n)
            .into_par_iter()
            .flat_map_iter(|tau| run_count_mismatches(ctx, tau))
            .map(|(tau, values)| mismatch("run_counts", Some(tau), values))
            .collect();
        report.record(
            row("run_counts", bad.is_empty(), "field enumeration".into()),
            bad,
        );
    }
}

fn run_count_mismatches(ctx: &FieldContext, tau: usize) -> Vec<(usize, BTreeMap<String, i64>)> {
    let m = ctx.m();
    let quarter = 1i64 << (m - 2);
    let zero_start: Vec<i64> = (0..m)
        .map(|l| brute_count_zero_start(ctx, tau, l).unwrap() as i64)
        .collect();
    let sum_zero: i64 = zero_start.iter().sum();
    let sum_one: i64 = (0..m)
        .map(|l| brute_count_one_start(ctx, tau, l).unwrap() as i64)
        .sum();
    let mut out = Vec::new();
    if sum_zero != quarter || sum_one != quarter {
        out.push((
            tau,
            BTreeMap::from([
                ("sum_zero_start".to_string(), sum_zero),
                ("sum_one_start".to_string(), sum_one),
                ("expected".to_string(), quarter),
            ]),
        ));
    }
    for l in 1..m {
        let closed = run_count(ctx, tau, l).map(|v| v as i64).unwrap_or(-1);
        if closed != zero_start[l as usize] {
            out.push((
                tau,
                BTreeMap::from([
                    ("l".to_string(), l as i64),
                    ("closed".to_string(), closed),
                    ("brute".to_string(), zero_start[l as usize]),
                ]),
            ));
        }
    }
    let weighted: i64 = zero_start
        .iter()
        .enumerate()
        .map(|(l, c)| l as i64 * c)
        .sum();
    let formula = weighted_sum(ctx, tau).unwrap();
    if weighted != formula {
        out.push((
            tau,
            BTreeMap::from([
                ("weighted_brute".to_string(), weighted),
                ("weighted_formula".to_string(), formula),
            ]),
        ));
    }
    out
}

/// Builds each field and runs [`verify_field`] on it; a polynomial that
/// fails validation is reported as a failed `field` check.
pub fn verify(fields: &[(u32, Polynomial)], parameters: BTreeMap<String, String>) -> RunReport {
    let mut report = RunReport::new("verify", parameters);
    for &(m, poly) in fields {
        match FieldContext::new(m, poly) {
            Ok(ctx) => verify_field(&ctx, &mut report),
            Err(e) => report.record(
                CheckRow {
                    m,
                    poly: poly.to_string(),
                    check: "field",
                    status: Status::Fail,
                    detail: e.to_string(),
                },
                Vec::new(),
            ),
        }
    }
    report
}
