//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p xaviers --test acceptance`.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use xaviers::bijection::{
    compose_half, compose_pyramid, compose_xavier, decompose_half, decompose_pyramid,
    decompose_xavier, PyramidCase, XavierCase,
};
use xaviers::creature::Creature;
use xaviers::document::parse_xavier;
use xaviers::enumerate::{census_row, levels};
use xaviers::render::{render_ascii, render_svg, RenderOptions};
use xaviers::series::{series_h, series_p, series_x, verify_identities};
use xaviers::xavier::canonical_drop;
use xaviers::{decode, encode, HalfPyramid, Pyramid, Word, Xavier};

const BIN: &str = env!("CARGO_BIN_EXE_xaviers");

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("xaviers {args:?} exited with {}", out.status)
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// Brute-force levels 1..=n, shared by the exhaustive criteria.
fn census_levels(n: usize) -> Vec<Vec<Xavier>> {
    levels().take(n).collect()
}

fn theorem_reproduction() -> Check {
    let started = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=11usize {
        let printed = cli(&["count", "--pieces", &n.to_string(), "--method", "brute"])?;
        let expected = 3u64.pow(n as u32 - 1);
        ensure(printed.trim() == expected.to_string(), || {
            format!("n={n}: printed {:?}, expected {expected}", printed.trim())
        })?;
        counts.push(expected);
    }
    let took = within(Duration::from_secs(60), started)?;
    Ok(format!("counts {counts:?} in {took:.2?}"))
}

/// Words of length n-1 with non-negative prefix sums (and total zero for the
/// half-pyramid column), counted by direct enumeration.
fn prefix_sum_counts(n: usize) -> (u64, u64) {
    let (mut nonneg, mut balanced) = (0, 0);
    for w in Word::all(n - 1) {
        let mut sum = 0i32;
        let mut ok = true;
        for l in w.letters() {
            sum += i32::from(l.value());
            ok &= sum >= 0;
        }
        if ok {
            nonneg += 1;
            if sum == 0 {
                balanced += 1;
            }
        }
    }
    (nonneg, balanced)
}

fn sequence_identifications() -> Check {
    const HALF: [u64; 10] = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835];
    const PYRAMIDS: [u64; 10] = [1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046];
    let h = series_h(10).map_err(|e| e.to_string())?;
    let p = series_p(10).map_err(|e| e.to_string())?;
    for (i, level) in census_levels(10).iter().enumerate() {
        let n = i + 1;
        let row = census_row(n, level);
        let (nonneg, balanced) = prefix_sum_counts(n);
        ensure(
            row.half_pyramids == HALF[i]
                && *h.coeff(n) == BigInt::from(HALF[i])
                && balanced == HALF[i],
            || {
                format!(
                    "half-pyramids n={n}: brute {}, series {}, words {balanced}",
                    row.half_pyramids,
                    h.coeff(n)
                )
            },
        )?;
        ensure(
            row.pyramids == PYRAMIDS[i]
                && *p.coeff(n) == BigInt::from(PYRAMIDS[i])
                && nonneg == PYRAMIDS[i],
            || {
                format!(
                    "pyramids n={n}: brute {}, series {}, words {nonneg}",
                    row.pyramids,
                    p.coeff(n)
                )
            },
        )?;
    }
    Ok("half-pyramids and pyramids n=1..10 match recurrences".into())
}

fn bijectivity() -> Check {
    let started = Instant::now();
    let all = census_levels(8);
    for (n, level) in all.iter().enumerate() {
        let mut image = Vec::new();
        for w in Word::all(n) {
            let x = decode(&w).map_err(|e| e.to_string())?;
            ensure(x.len() == n + 1, || {
                format!("decode({w}) has {} pieces", x.len())
            })?;
            ensure(
                Xavier::canonicalize(x.pieces()).ok().as_ref() == Some(&x),
                || format!("decode({w}) = {x} is not a valid canonical xavier"),
            )?;
            ensure(encode(&x) == w, || {
                format!("encode(decode({w})) = {}", encode(&x))
            })?;
            image.push(x);
        }
        image.sort();
        image.dedup();
        ensure(image.len() == 3usize.pow(n as u32), || {
            format!("n={n}: {} distinct images", image.len())
        })?;
        ensure(image == *level, || {
            format!("n={n}: image differs from the census")
        })?;
        for x in level {
            ensure(decode(&encode(x)).ok().as_ref() == Some(x), || {
                format!("decode(encode({x})) differs")
            })?;
        }
    }
    let took = within(Duration::from_secs(30), started)?;
    Ok(format!("words of length 0..7, {took:.2?}"))
}

fn round_trips() -> Check {
    let (mut halves, mut pyramids, mut xaviers) = (0, 0, 0);
    for x in census_levels(8).into_iter().flatten() {
        xaviers += 1;
        let c = Creature::from_xavier(&x);
        ensure(c.piece_count() == x.len(), || {
            format!("creature size for {x}")
        })?;
        ensure(c.to_xavier().ok().as_ref() == Some(&x), || {
            format!("creature round trip {x}")
        })?;

        match decompose_xavier(&x) {
            XavierCase::Pyramid(_) => {}
            XavierCase::Split { half, rest } => {
                ensure(half.len() + rest.len() == x.len(), || {
                    format!("bp3 weight {x}")
                })?;
                ensure(
                    compose_xavier(&half, &rest).ok().as_ref() == Some(&x),
                    || format!("bp3 round trip {x}"),
                )?;
            }
        }
        if let Ok(p) = Pyramid::try_from(x.clone()) {
            pyramids += 1;
            match decompose_pyramid(&p) {
                PyramidCase::Half(h) => ensure(*h == *p, || format!("bp2 half case {x}"))?,
                PyramidCase::Split { half, rest } => {
                    ensure(half.len() + rest.len() == p.len(), || {
                        format!("bp2 weight {x}")
                    })?;
                    ensure(
                        compose_pyramid(&half, &rest).ok().as_ref() == Some(&p),
                        || format!("bp2 round trip {x}"),
                    )?;
                }
            }
        }
        if let Ok(h) = HalfPyramid::try_from(x.clone()) {
            halves += 1;
            let case = decompose_half(&h);
            ensure(case.piece_count() == h.len(), || format!("bp1 weight {x}"))?;
            ensure(compose_half(&case).ok().as_ref() == Some(&h), || {
                format!("bp1 round trip {x}")
            })?;
        }
    }
    Ok(format!(
        "{halves} half-pyramids, {pyramids} pyramids, {xaviers} xaviers"
    ))
}

fn word_classification() -> Check {
    let mut checked = 0;
    for n in 0..=7 {
        for w in Word::all(n) {
            let actual = decode(&w).map_err(|e| e.to_string())?.classify().shape;
            ensure(w.classify() == actual, || {
                format!("{w}: predicted {:?}, actual {actual:?}", w.classify())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} words"))
}

fn series_identities() -> Check {
    let started = Instant::now();
    let report = verify_identities(100).map_err(|e| e.to_string())?;
    let failed: Vec<_> = report
        .checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.name)
        .collect();
    ensure(failed.is_empty(), || format!("failed: {failed:?}"))?;
    ensure(report.checks.len() >= 8, || "missing identities".into())?;
    let x = series_x(61).map_err(|e| e.to_string())?;
    ensure(*x.coeff(61) == BigInt::from(3).pow(60), || {
        format!("[z^61]X = {}", x.coeff(61))
    })?;
    let took = within(Duration::from_secs(5), started)?;
    Ok(format!(
        "{} identities at N=100, [z^61]X = 3^60, {took:.2?}",
        report.checks.len()
    ))
}

fn uniform_sampling() -> Check {
    let args = [
        "sample", "--pieces", "3", "--count", "9000", "--seed", "20120810",
    ];
    let first = cli(&args)?;
    let second = cli(&args)?;
    ensure(first == second, || "replay differs".into())?;

    let mut counts: BTreeMap<Xavier, u32> = BTreeMap::new();
    for line in first.lines() {
        *counts
            .entry(parse_xavier(line).map_err(|e| e.to_string())?)
            .or_default() += 1;
    }
    ensure(counts.len() == 9, || {
        format!("{} distinct samples", counts.len())
    })?;
    let (lo, hi) = (
        counts.values().min().unwrap(),
        counts.values().max().unwrap(),
    );
    ensure(counts.values().all(|&c| (850..=1150).contains(&c)), || {
        format!("counts {:?}", counts.values().collect::<Vec<_>>())
    })?;
    Ok(format!(
        "9 classes, counts in [{lo}, {hi}], replay byte-identical"
    ))
}

fn drop_idempotence() -> Check {
    let mut checked = 0;
    for x in census_levels(8).into_iter().flatten() {
        ensure(canonical_drop(x.pieces()).ok().as_ref() == Some(&x), || {
            format!("drop moved {x}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} xaviers"))
}

fn rendering() -> Check {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let opts = RenderOptions::default();
    let names = ["singleton", "row2", "left2", "right2", "forked3"];
    for name in names {
        let read = |ext: &str| {
            std::fs::read_to_string(golden.join(format!("{name}.{ext}")))
                .map_err(|e| format!("{name}.{ext}: {e}"))
        };
        let x = parse_xavier(&read("json")?).map_err(|e| e.to_string())?;
        ensure(render_ascii(&x, &opts) + "\n" == read("txt")?, || {
            format!("{name}.txt differs")
        })?;
        ensure(render_svg(&x, &opts) == read("svg")?, || {
            format!("{name}.svg differs")
        })?;
    }
    let mut seen = BTreeMap::new();
    for x in census_levels(6).into_iter().flatten() {
        if let Some(other) = seen.insert(render_ascii(&x, &opts), x.clone()) {
            return Err(format!("{x} and {other} render identically"));
        }
    }
    Ok(format!(
        "{} golden pairs, ASCII injective on {} xaviers",
        names.len(),
        seen.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "AC1 theorem reproduction (brute count = 3^(n-1), n=1..11)",
            theorem_reproduction,
        ),
        (
            "AC2 sequence identifications (Motzkin / pyramid counts)",
            sequence_identifications,
        ),
        ("AC3 codec bijectivity (n <= 7)", bijectivity),
        ("AC4 decomposition round trips (<= 8 pieces)", round_trips),
        ("AC5 word classification (|w| <= 7)", word_classification),
        ("AC6 series identities (N = 100)", series_identities),
        (
            "AC7 uniform sampling (9000 draws, 3 pieces)",
            uniform_sampling,
        ),
        ("AC8 drop idempotence (<= 8 pieces)", drop_idempotence),
        ("AC9 rendering goldens and injectivity", rendering),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all {} acceptance criteria passed", criteria.len());
}
