//! The cross-check battery behind `xaviers verify`: brute-force census
//! against series and formula, codec bijectivity, decomposition round
//! trips, word classification, drop idempotence and the series identities.

use std::fmt;

use num_bigint::BigInt;

use crate::bijection::{
    compose_half, compose_pyramid, compose_xavier, decompose_half, decompose_pyramid,
    decompose_xavier, PyramidCase, XavierCase,
};
use crate::creature::Creature;
use crate::enumerate::{census_row, levels};
use crate::error::Result;
use crate::series::{series_h, series_p, series_x, verify_identities};
use crate::word::{decode, encode, Word};
use crate::xavier::{canonical_drop, Xavier};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn outcome(name: impl Into<String>, failures: Vec<String>, ok_detail: String) -> CheckOutcome {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail
    } else {
        let shown: Vec<_> = failures.iter().take(3).cloned().collect();
        format!("{} failure(s), e.g. {}", failures.len(), shown.join("; "))
    };
    CheckOutcome {
        name: name.into(),
        passed,
        detail,
    }
}

/// Runs every check over all objects with at most `max_pieces` pieces and
/// the series identities at `series_order`.
pub fn run_battery(max_pieces: usize, series_order: usize) -> Result<Vec<CheckOutcome>> {
    let all: Vec<Vec<Xavier>> = levels().take(max_pieces).collect();
    let order = max_pieces.max(1);
    let (h, p, x) = (series_h(order)?, series_p(order)?, series_x(order)?);

    let mut report = Vec::new();

    let mut failures = Vec::new();
    for (i, level) in all.iter().enumerate() {
        let n = i + 1;
        let row = census_row(n, level);
        let formula = BigInt::from(3).pow(n as u32 - 1);
        for (what, brute, series) in [
            ("xaviers", row.xaviers, x.coeff(n).clone()),
            ("pyramids", row.pyramids, p.coeff(n).clone()),
            ("half-pyramids", row.half_pyramids, h.coeff(n).clone()),
        ] {
            if BigInt::from(brute) != series {
                failures.push(format!("n={n} {what}: brute {brute} vs series {series}"));
            }
        }
        if BigInt::from(row.xaviers) != formula {
            failures.push(format!(
                "n={n}: brute {} vs 3^{} = {formula}",
                row.xaviers,
                n - 1
            ));
        }
    }
    report.push(outcome(
        "census: brute force = series = 3^(n-1)",
        failures,
        format!("n = 1..{max_pieces}"),
    ));

    let mut failures = Vec::new();
    for (i, level) in all.iter().enumerate() {
        let mut decoded = Vec::with_capacity(level.len());
        for w in Word::all(i) {
            let x = decode(&w)?;
            if encode(&x) != w {
                failures.push(format!("encode(decode({w})) = {}", encode(&x)));
            }
            decoded.push(x);
        }
        decoded.sort_unstable();
        decoded.dedup();
        if decoded != *level {
            failures.push(format!(
                "n={}: decode image has {} distinct xaviers, brute force {}",
                i + 1,
                decoded.len(),
                level.len()
            ));
        }
        for x in level {
            let w = encode(x);
            if w.len() + 1 != x.len() || decode(&w)? != *x {
                failures.push(format!("decode(encode({x})) != {x}"));
            }
        }
    }
    report.push(outcome(
        "codec: decode is a bijection onto the census",
        failures,
        String::new(),
    ));

    let mut failures = Vec::new();
    for x in all.iter().flatten() {
        let creature = Creature::from_xavier(x);
        if creature.piece_count() != x.len() || creature.to_xavier()? != *x {
            failures.push(format!("creature round trip for {x}"));
        }
        match decompose_xavier(x) {
            XavierCase::Pyramid(p) => {
                if *p != *x {
                    failures.push(format!("xavier split lost pieces of {x}"));
                }
                match decompose_pyramid(&p) {
                    PyramidCase::Half(h) => {
                        let case = decompose_half(&h);
                        if case.piece_count() != h.len() || compose_half(&case)? != h {
                            failures.push(format!("half-pyramid round trip for {x}"));
                        }
                    }
                    PyramidCase::Split { half, rest } => {
                        if half.len() + rest.len() != p.len() || compose_pyramid(&half, &rest)? != p
                        {
                            failures.push(format!("pyramid round trip for {x}"));
                        }
                    }
                }
            }
            XavierCase::Split { half, rest } => {
                if half.len() + rest.len() != x.len() || compose_xavier(&half, &rest)? != *x {
                    failures.push(format!("xavier round trip for {x}"));
                }
            }
        }
    }
    report.push(outcome(
        "round trips: decompositions and creatures",
        failures,
        String::new(),
    ));

    let mut failures = Vec::new();
    for i in 0..max_pieces {
        for w in Word::all(i) {
            let predicted = w.classify();
            let actual = decode(&w)?.classify().shape;
            if predicted != actual {
                failures.push(format!("{w}: predicted {predicted:?}, got {actual:?}"));
            }
        }
    }
    report.push(outcome(
        "word classification by prefix sums",
        failures,
        String::new(),
    ));

    let mut failures = Vec::new();
    for x in all.iter().flatten() {
        if canonical_drop(x.pieces())? != *x {
            failures.push(format!("drop moved {x}"));
        }
        if x.pieces()
            .iter()
            .any(|q| (i64::from(q.floor) + q.pos).rem_euclid(2) != 0)
        {
            failures.push(format!("parity broken in {x}"));
        }
    }
    report.push(outcome(
        "drop idempotence and parity",
        failures,
        String::new(),
    ));

    let identities = verify_identities(series_order)?;
    let failures = identities
        .checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.name.to_string())
        .collect();
    report.push(outcome(
        "series identities",
        failures,
        format!(
            "{} identities mod z^{}",
            identities.checks.len(),
            series_order + 1
        ),
    ));

    Ok(report)
}
