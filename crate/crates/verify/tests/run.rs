use groth_core::Permutation;
use groth_verify::{run, Check, Outcome, RunConfig};

#[test]
fn s3_everything_passes() {
    let out = run(&RunConfig::new(3)).unwrap();
    let report = out.report;
    assert_eq!(report.summary.records, 6);
    assert!(report.all_pass());
    assert_eq!(report.exit_code(), 0);
    let words: Vec<&str> = report.results.iter().map(|r| r.permutation.as_str()).collect();
    assert_eq!(words, ["123", "132", "213", "231", "312", "321"]);
    assert!(report.results.iter().all(|r| r.checks.len() == Check::ALL.len()));
}

#[test]
fn s4_oracle_and_euler() {
    let report = run(&RunConfig::new(4).with_checks(&[Check::Oracle, Check::Euler])).unwrap().report;
    assert_eq!(report.summary.tallies[&Check::Oracle].pass, 24);
    assert_eq!(report.summary.tallies[&Check::Euler].pass, 24);
}

#[test]
fn single_permutation() {
    let mut config = RunConfig::new(5).with_checks(&[Check::Conj1, Check::Conj3, Check::Coeff, Check::Mobius]);
    config.perm = Some("15324".parse().unwrap());
    let out = run(&config).unwrap();
    assert_eq!(out.report.results.len(), 1);
    let record = &out.report.results[0];
    assert_eq!(record.permutation, "15324");
    assert_eq!(record.degree, 6);
    assert!(record.checks.values().all(|o| matches!(o, Outcome::Pass { .. })));
    // lazy table: only the chain down from 15324 is computed
    assert!(out.stats.groth.steps < 120);
    assert_eq!(out.report.meta.perm.as_deref(), Some("15324"));
}

#[test]
fn mobius_skips_non_zero_one() {
    let mut config = RunConfig::new(5).with_checks(&[Check::Mobius]);
    config.perm = Some("12543".parse::<Permutation>().unwrap());
    let report = run(&config).unwrap().report;
    assert!(matches!(report.results[0].checks[&Check::Mobius], Outcome::Skipped { .. }));
    assert!(report.all_pass());
}

#[test]
fn timings_are_opt_in() {
    let mut config = RunConfig::new(3);
    assert!(!run(&config).unwrap().report.to_json().contains("micros"));
    config.timings = true;
    let json = run(&config).unwrap().report.to_json();
    assert!(json.contains("micros") && json.contains("wall_millis"));
}

#[test]
fn jobs_do_not_change_the_report() {
    let json = |jobs| {
        let mut config = RunConfig::new(4);
        config.jobs = jobs;
        run(&config).unwrap().report.to_json()
    };
    assert_eq!(json(1), json(3));
}

#[test]
fn warm_cache_skips_computation() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = RunConfig::new(4);
    config.cache_dir = Some(dir.path().to_path_buf());
    let cold = run(&config).unwrap();
    assert!(!cold.stats.groth.loaded && cold.stats.groth.steps > 0);
    assert!(dir.path().join("groth-n4-G.cache").exists());
    let warm = run(&config).unwrap();
    assert!(warm.stats.groth.loaded);
    assert_eq!(warm.stats.groth.steps, 0);
    assert_eq!(warm.stats.schub.map(|s| s.steps), Some(0));
    assert_eq!(cold.report.to_json(), warm.report.to_json());
}

#[test]
fn out_of_range_is_a_config_error() {
    assert!(matches!(run(&RunConfig::new(1)), Err(groth_verify::RunError::Config(_))));
}
