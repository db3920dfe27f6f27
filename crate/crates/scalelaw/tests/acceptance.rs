//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see them).

use std::process::Command;
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scalelaw::timing_csv::{parse_timing_csv, timing_records_to_csv, CsvError};
use scalelaw_core::{
    amdahl_limit, amdahl_speedup, fit_two_part_model, generate_timings, gustafson_speedup,
    MisspecSpec, NoiseSpec, ScalingScenario, SerialFraction, SpeedupBound, TimingRecord,
    TwoPartModel,
};

fn report(criterion: u32, description: &str, pass: bool) {
    println!(
        "criterion {criterion}: {} — {description}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {description}");
}

fn beta_grid() -> Vec<f64> {
    (0..=100).map(|k| f64::from(k) / 100.0).collect()
}

fn p_grid() -> Vec<u32> {
    (1..=1024).collect()
}

/// Criterion 1: the textbook fixtures hold exactly — a program that is half
/// serial can be accelerated at most twice, one tenth serial at most ten
/// times.
#[test]
fn criterion_1_limit_fixtures_are_exact() {
    let half = amdahl_limit(&SerialFraction::base(1.0 / 2.0).unwrap()).unwrap();
    let tenth = amdahl_limit(&SerialFraction::base(1.0 / 10.0).unwrap()).unwrap();
    report(
        1,
        "amdahl_limit(1/2) = 2 and amdahl_limit(1/10) = 10 exactly",
        half == SpeedupBound::Finite(2.0) && tenth == SpeedupBound::Finite(10.0),
    );
}

/// Criterion 2: over beta in {0, 0.01, ..., 1.00} and p in {1, ..., 1024},
/// the two laws agree within a relative 1e-12 after frame conversion.
#[test]
fn criterion_2_law_equivalence_over_the_grid() {
    let started = Instant::now();
    let mut max_deviation = 0.0f64;
    for &beta in &beta_grid() {
        let base = SerialFraction::base(beta).unwrap();
        for &p in &p_grid() {
            let amdahl = amdahl_speedup(&base, p).unwrap();
            let gustafson = gustafson_speedup(&base.to_on_p(p).unwrap(), p).unwrap();
            max_deviation = max_deviation.max((amdahl - gustafson).abs() / amdahl);
        }
    }
    let elapsed = started.elapsed();
    report(
        2,
        &format!(
            "max relative deviation {max_deviation:e} <= 1e-12 across 101x1024 grid \
             in {elapsed:?} (< 1 s)"
        ),
        max_deviation <= 1e-12 && elapsed.as_secs_f64() < 1.0,
    );
}

/// Criterion 3: converting base -> on-p -> base is the identity within an
/// absolute 1e-12 over the same grid.
#[test]
fn criterion_3_frame_conversion_round_trip() {
    let mut max_error = 0.0f64;
    for &beta in &beta_grid() {
        let base = SerialFraction::base(beta).unwrap();
        for &p in &p_grid() {
            let back = base.to_on_p(p).unwrap().to_base().unwrap();
            max_error = max_error.max((back.value() - beta).abs());
        }
    }
    report(
        3,
        &format!("max round-trip error {max_error:e} <= 1e-12"),
        max_error <= 1e-12,
    );
}

/// Criterion 4: for 50 seeded random models with T_s, W in (0, 100], a fit
/// to noise-free timings at p in {1,2,4,8,16,32} recovers both parameters
/// within a relative 1e-9.
#[test]
fn criterion_4_estimator_recovers_random_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e1a4);
    let mut max_relative_error = 0.0f64;
    for _ in 0..50 {
        // 1 - random() lies in (0, 1], so both parameters are positive.
        let serial = 100.0 * (1.0 - rng.random::<f64>());
        let work = 100.0 * (1.0 - rng.random::<f64>());
        let truth = TwoPartModel::new(serial, work).unwrap();
        let records: Vec<TimingRecord> = [1u32, 2, 4, 8, 16, 32]
            .iter()
            .map(|&p| TimingRecord::new(1, p, truth.total_time(p).unwrap()).unwrap())
            .collect();
        let fit = fit_two_part_model(&records).unwrap();
        max_relative_error = max_relative_error
            .max((fit.model.serial_time() - serial).abs() / serial)
            .max((fit.model.parallel_work() - work).abs() / work);
    }
    report(
        4,
        &format!("worst relative parameter error {max_relative_error:e} <= 1e-9 over 50 models"),
        max_relative_error <= 1e-9,
    );
}

/// Criterion 5: with a fixed serial time (beta_s = 0.1) the speedup on 64
/// processors climbs strictly with the problem size and crosses 63.9 at
/// N* = 4473, found beforehand by direct search over the closed form.
#[test]
fn criterion_5_speedup_approaches_the_processor_count() {
    const FROZEN_N_STAR: u64 = 4473;
    let started = Instant::now();
    let scenario = ScalingScenario::fixed_serial(0.1, 1.0).unwrap();
    let speedup_at = |n: u64| amdahl_speedup(&scenario.serial_fraction_at(n).unwrap(), 64).unwrap();

    // Independent search for the first n whose speedup clears 63.9.
    let mut searched = 1u64;
    while speedup_at(searched) <= 63.9 {
        searched += 1;
        assert!(searched <= 1_000_000, "no n below 10^6 reaches 63.9");
    }

    let mut strictly_increasing = true;
    let mut previous = speedup_at(1);
    for n in 2..=FROZEN_N_STAR {
        let current = speedup_at(n);
        if current <= previous {
            strictly_increasing = false;
            break;
        }
        previous = current;
    }

    let elapsed = started.elapsed();
    report(
        5,
        &format!(
            "S(n, 64) strictly increasing, first exceeds 63.9 at n = {searched} \
             (frozen oracle {FROZEN_N_STAR}, S = {}) in {elapsed:?} (< 1 s)",
            speedup_at(searched)
        ),
        searched == FROZEN_N_STAR
            && strictly_increasing
            && speedup_at(FROZEN_N_STAR) > 63.9
            && elapsed.as_secs_f64() < 1.0,
    );
}

/// Criterion 6: with 1% multiplicative noise and six distinct processor
/// counts, the fitted serial time lands within 5% of the generator's in at
/// least 95 of 100 seeded trials.
#[test]
fn criterion_6_noise_robustness() {
    // FixedSerial beta_s = 0.2, T(1,1) = 10 at n = 1: T_s = 2, W = 8.
    let scenario = ScalingScenario::fixed_serial(0.2, 10.0).unwrap();
    let truth = scenario.model_at(1).unwrap();
    let mut hits = 0u32;
    for seed in 0..100u64 {
        let noise = NoiseSpec::multiplicative(0.01, seed).unwrap();
        let records = generate_timings(
            &scenario,
            &[1],
            &[1, 2, 4, 8, 16, 32],
            &noise,
            &MisspecSpec::none(),
        )
        .unwrap();
        let fit = fit_two_part_model(&records).unwrap();
        let relative_error =
            (fit.model.serial_time() - truth.serial_time()).abs() / truth.serial_time();
        if relative_error <= 0.05 {
            hits += 1;
        }
    }
    report(
        6,
        &format!("fitted T_s within 5% of truth in {hits}/100 seeded trials (need >= 95)"),
        hits >= 95,
    );
}

fn scalelaw(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_scalelaw"))
        .args(args)
        .output()
        .expect("binary should run")
}

/// Criterion 7: the CSV schema behaves as documented (including a parse ->
/// emit -> parse round trip) and the CLI honors the exit-code contract.
#[test]
fn criterion_7_csv_and_cli_contract() {
    // Parse examples.
    let records = parse_timing_csv("n,p,time\n100,1,10.0\n100,4,4.0".as_bytes()).unwrap();
    let two_rows = records.len() == 2
        && (records[0].n(), records[0].p(), records[0].time()) == (100, 1, 10.0)
        && (records[1].n(), records[1].p(), records[1].time()) == (100, 4, 4.0);

    let missing = matches!(
        parse_timing_csv("p,time\n1,10.0".as_bytes()),
        Err(CsvError::MissingColumn("n"))
    );
    let row_error = matches!(
        parse_timing_csv("n,p,time\n100,4,-1.0".as_bytes()),
        Err(CsvError::Row { row: 2, .. })
    );

    // Round trip through the emitter.
    let reparsed = parse_timing_csv(timing_records_to_csv(&records).as_bytes()).unwrap();
    let round_trips = reparsed == records;

    // CLI examples.
    let limit = scalelaw(&["limit", "--beta", "0.5"]);
    let limit_ok =
        limit.status.code() == Some(0) && String::from_utf8_lossy(&limit.stdout).trim() == "2";

    let verify = scalelaw(&["verify", "--beta-steps", "101", "--p-max", "1024"]);
    let verify_stdout = String::from_utf8_lossy(&verify.stdout).to_string();
    let reported_deviation: f64 = verify_stdout
        .lines()
        .find_map(|line| line.strip_prefix("max_relative_deviation"))
        .and_then(|rest| rest.trim().parse().ok())
        .unwrap_or(f64::INFINITY);
    let verify_ok = verify.status.code() == Some(0) && reported_deviation <= 1e-12;

    let dir = tempfile::tempdir().unwrap();
    let one_row = dir.path().join("one_row.csv");
    std::fs::write(&one_row, "n,p,time\n100,1,10.0\n").unwrap();
    let fit = scalelaw(&["fit", "--input", one_row.to_str().unwrap()]);
    let fit_stderr = String::from_utf8_lossy(&fit.stderr).to_string();
    let fit_ok = fit.status.code() == Some(1) && fit_stderr.contains("insufficient data");

    report(
        7,
        &format!(
            "CSV parse/round-trip ok; limit -> \"2\" (exit 0); verify deviation \
             {reported_deviation:e} (exit 0); fit on one row -> exit 1 with \
             insufficient-data message"
        ),
        two_rows && missing && row_error && round_trips && limit_ok && verify_ok && fit_ok,
    );
}
