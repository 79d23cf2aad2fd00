//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are printed even when everything passes; exits 1 if any line fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use groth_core::perm::{grassmannian_shape, is_fireworks, is_zero_one, rajcode, rajcode_fireworks, rothe_diagram};
use groth_core::pipe::{interior_euler_check, pd_polynomial};
use groth_core::poly::{check_leading_term, grothendieck};
use groth_core::polytope::{
    check_escobar_yong, grassmannian_pair, grassmannian_par, recover_pair, LatticeSet,
};
use groth_core::{Flavor, Permutation, PolynomialTable, SparsePolynomial, Verdict, WeightVector};
use groth_verify::format::one_line;
use groth_verify::{run, Check, Outcome, Report, RunConfig};

type Checked = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn table(n: usize, flavor: Flavor) -> PolynomialTable {
    PolynomialTable::build(n, flavor).expect("table builds")
}

fn build(n: usize, terms: &[(i64, &[u8])]) -> SparsePolynomial {
    let terms = terms.iter().map(|&(c, e)| {
        let mut full = e.to_vec();
        full.resize(n, 0);
        (WeightVector::from_slice(&full).unwrap(), c)
    });
    SparsePolynomial::from_terms(n, terms).unwrap()
}

fn golden_15324() -> Checked {
    let expected = build(
        5,
        &[
            (1, &[0, 3, 1]),
            (1, &[1, 2, 1]),
            (1, &[1, 3, 0]),
            (1, &[2, 1, 1]),
            (1, &[2, 2, 0]),
            (1, &[3, 0, 1]),
            (1, &[3, 1, 0]),
            (-2, &[1, 3, 1]),
            (-2, &[2, 2, 1]),
            (-2, &[3, 1, 1]),
            (-1, &[2, 3, 0]),
            (-1, &[3, 2, 0]),
            (1, &[2, 3, 1]),
            (1, &[3, 2, 1]),
        ],
    );
    let g = grothendieck(&"15324".parse().unwrap()).map_err(|e| e.to_string())?;
    ensure!(g == expected, "got {g:?}");
    let by_degree: Vec<(u32, usize)> = (4..=6).map(|d| (d, g.graded_component(d).num_terms())).collect();
    ensure!(by_degree == [(4, 7), (5, 5), (6, 2)], "graded sizes {by_degree:?}");
    Ok(format!("{} terms, graded 7/5/2", g.num_terms()))
}

fn golden_351624() -> Checked {
    // the full display: 8 positive terms in degree 7, 7 in degree 8, 2 in degree 9
    let expected = build(
        6,
        &[
            (1, &[2, 3, 0, 2]),
            (1, &[2, 3, 1, 1]),
            (1, &[2, 3, 2, 0]),
            (1, &[3, 2, 0, 2]),
            (1, &[3, 2, 1, 1]),
            (1, &[3, 2, 2, 0]),
            (1, &[3, 3, 0, 1]),
            (1, &[3, 3, 1, 0]),
            (-1, &[2, 3, 1, 2]),
            (-1, &[2, 3, 2, 1]),
            (-1, &[3, 2, 1, 2]),
            (-1, &[3, 2, 2, 1]),
            (-2, &[3, 3, 0, 2]),
            (-2, &[3, 3, 2, 0]),
            (-3, &[3, 3, 1, 1]),
            (2, &[3, 3, 1, 2]),
            (2, &[3, 3, 2, 1]),
        ],
    );
    let g = grothendieck(&"351624".parse().unwrap()).map_err(|e| e.to_string())?;
    ensure!(g == expected, "got {g:?}");
    Ok(format!("{} terms (display has 17, not 15), coefficients -2,-3,-2 and 2,2 present", g.num_terms()))
}

fn oracle_s5() -> Checked {
    let mut compared = 0;
    for flavor in [Flavor::Grothendieck, Flavor::Schubert] {
        let t = table(5, flavor);
        for (w, p) in t.iter() {
            let pd = pd_polynomial(w, flavor).map_err(|e| e.to_string())?;
            ensure!(&pd == p, "{w} {flavor:?}");
            compared += 1;
        }
    }
    ensure!(compared == 240, "compared {compared}");
    Ok("120 x 2 flavors equal".into())
}

fn principal_specialization() -> Checked {
    let t = table(6, Flavor::Grothendieck);
    for (w, g) in t.iter() {
        ensure!(g.principal_specialization() == Ok(1), "{w}");
    }
    for w in Permutation::all(4) {
        ensure!(interior_euler_check(&w) == Ok(1), "euler {w}");
    }
    Ok(format!("{} in S_6 specialize to 1, euler 1 on S_4", t.len()))
}

fn leading_term() -> Checked {
    let t = table(6, Flavor::Grothendieck);
    for (w, g) in t.iter() {
        let code = rajcode(w).map_err(|e| e.to_string())?;
        ensure!(g.degree() == Ok(code.degree()), "{w} degree");
        ensure!(g.leading_exponent() == Some(&code), "{w} leading");
        ensure!(check_leading_term(w, g) == Ok(Verdict::Pass), "{w} check");
    }
    Ok("720 of 720".into())
}

fn divisibility() -> Checked {
    let t = table(6, Flavor::Grothendieck);
    let mut steps = 0;
    for (w, g) in t.iter() {
        let closure = rothe_diagram(w).upper_closure();
        let top = closure.weight().map_err(|e| e.to_string())?;
        ensure!(g.support().iter().all(|a| a.dominated_by(&top)), "{w} upward");
        ensure!(g.degree().unwrap() as usize <= closure.len(), "{w} degree");
        for (beta, _) in g.terms().filter(|(b, _)| b.degree() as usize > w.length()) {
            let down = (0..beta.len()).filter_map(|i| beta.decremented(i)).any(|a| g.contains(&a));
            ensure!(down, "{w} downward at {beta}");
            steps += 1;
        }
    }
    Ok(format!("720 upward, {steps} downward steps"))
}

fn fireworks() -> Checked {
    let t = table(6, Flavor::Grothendieck);
    let mut count = 0;
    for (w, g) in t.iter().filter(|(w, _)| is_fireworks(w)) {
        count += 1;
        let weight = rothe_diagram(w).upper_closure().weight().map_err(|e| e.to_string())?;
        let top = g.top_component().map_err(|e| e.to_string())?;
        ensure!(top.support() == [weight], "{w} top support");
        ensure!(rajcode(w).as_ref() == Ok(&weight), "{w} closure");
        ensure!(rajcode_fireworks(w).as_ref() == Ok(&weight), "{w} recursion");
    }
    ensure!(count == 203, "{count} fireworks");
    Ok(format!("{count} fireworks"))
}

/// Direct simulation of the growth rule: northmost row that keeps a partition
/// and has grown less than its 0-based index.
fn par_oracle(lambda: &[u32]) -> Vec<Vec<u32>> {
    let mut mu = lambda.to_vec();
    let mut out = vec![mu.clone()];
    'grow: loop {
        for k in 0..mu.len() {
            let fits = k == 0 || mu[k - 1] > mu[k];
            if fits && mu[k] - lambda[k] < k as u32 {
                mu[k] += 1;
                out.push(mu.clone());
                continue 'grow;
            }
        }
        return out;
    }
}

fn grassmannian() -> Checked {
    let t = table(6, Flavor::Grothendieck);
    let mut count = 0;
    for (w, g) in t.iter() {
        let Some(shape) = grassmannian_shape(w) else { continue };
        count += 1;
        let ey = check_escobar_yong(w, g).map_err(|e| e.to_string())?;
        ensure!(ey.verdict.is_pass(), "{w} escobar-yong {:?}", ey.verdict);
        let seq = grassmannian_par(&shape.partition);
        let pair = grassmannian_pair(seq.first(), seq.last()).map_err(|e| e.to_string())?;
        ensure!(pair.is_paramodular(), "{w} not paramodular");
        let supp = LatticeSet::support_of(g).restricted(shape.descent).ok_or(format!("{w} tail"))?;
        ensure!(recover_pair(&supp).as_ref() == Ok(&pair), "{w} pair");
    }
    ensure!(count == 57, "{count} grassmannian");
    let seq: Vec<Vec<u32>> = grassmannian_par(&[5, 5, 1, 1]).iter().map(<[u32]>::to_vec).collect();
    let expected = [[5, 5, 1, 1], [5, 5, 2, 1], [5, 5, 3, 1], [5, 5, 3, 2], [5, 5, 3, 3]];
    ensure!(seq == expected && seq == par_oracle(&[5, 5, 1, 1]), "Par(5,5,1,1) = {seq:?}");
    Ok(format!("{count} grassmannian, Par(5,5,1,1) has {} partitions", seq.len()))
}

fn verify(n: usize, checks: &[Check]) -> Result<Report, String> {
    let mut config = RunConfig::new(n).with_checks(checks);
    config.jobs = std::thread::available_parallelism().map_or(1, usize::from);
    run(&config).map(|o| o.report).map_err(|e| e.to_string())
}

fn outcome<'a>(report: &'a Report, word: &str, check: Check) -> &'a Outcome {
    let record = report.results.iter().find(|r| r.permutation == word).unwrap();
    &record.checks[&check]
}

fn conjecture_suite() -> Checked {
    use Check::*;
    let s6 = verify(6, &[Conj1, Conj2, Conj3, Conj4, Coeff, Mobius])?;
    ensure!(s6.summary.records == 720, "records {}", s6.summary.records);
    for c in [Conj1, Conj2, Conj3, Conj4, Coeff] {
        ensure!(s6.summary.tallies[&c].pass == 720, "{} {:?}", c.name(), s6.summary.tallies[&c]);
    }
    let zero_one = Permutation::all(6).filter(is_zero_one).count();
    for w in Permutation::all(6) {
        let word = one_line(&w);
        let o = outcome(&s6, &word, Mobius);
        if is_zero_one(&w) {
            ensure!(matches!(o, Outcome::Pass { .. }), "mobius {word} {o:?}");
        } else {
            ensure!(matches!(o, Outcome::Skipped { .. }), "mobius {word} {o:?}");
        }
    }
    let s5 = verify(5, &[Superset, Fms])?;
    ensure!(s5.all_pass(), "S_5 failures {:?}", s5.summary.failures);
    ensure!(s5.summary.tallies[&Superset].pass == 120 && s5.summary.tallies[&Fms].pass == 120, "S_5 tallies");
    Ok(format!("S_6 conj1-4/coeff 720 each, mobius {zero_one} zero-one; S_5 superset/fms 120 each"))
}

fn implications() -> Checked {
    use Check::*;
    let s6 = verify(6, &[Conj1, Conj2, Conj3, Conj4])?;
    let pass = |r: &groth_verify::report::Record, c| matches!(r.checks[&c], Outcome::Pass { .. });
    for r in &s6.results {
        ensure!(!(pass(r, Conj1) && pass(r, Conj3)) || pass(r, Conj2), "{} conj1+3 !=> conj2", r.permutation);
        ensure!(!pass(r, Conj4) || pass(r, Conj3), "{} conj4 !=> conj3", r.permutation);
    }
    Ok(format!("{} records consistent", s6.results.len()))
}

fn determinism() -> Checked {
    let json = |jobs: usize, dir: Option<&std::path::Path>| -> Result<(String, usize), String> {
        let mut config = RunConfig::new(5);
        config.jobs = jobs;
        config.cache_dir = dir.map(Into::into);
        let out = run(&config).map_err(|e| e.to_string())?;
        Ok((out.report.to_json(), out.stats.groth.steps))
    };
    let (one, _) = json(1, None)?;
    let (four, _) = json(4, None)?;
    ensure!(one == four, "jobs 1 and 4 differ");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (cold, cold_steps) = json(4, Some(dir.path()))?;
    let (warm, warm_steps) = json(1, Some(dir.path()))?;
    ensure!(cold_steps > 0 && warm_steps == 0, "steps cold {cold_steps} warm {warm_steps}");
    ensure!(cold == one && warm == one, "cache changed the report");
    Ok(format!("{} bytes identical across jobs 1/4 and cold/warm cache", one.len()))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [(&str, fn() -> Checked, Duration); 11] = [
        ("golden 15324", golden_15324, secs(1)),
        ("golden 351624", golden_351624, secs(1)),
        ("pipe dream oracle S_5", oracle_s5, secs(60)),
        ("principal specialization S_6", principal_specialization, secs(60)),
        ("leading term S_6", leading_term, Duration::MAX),
        ("divisibility S_6", divisibility, Duration::MAX),
        ("fireworks S_6", fireworks, Duration::MAX),
        ("grassmannian S_6", grassmannian, Duration::MAX),
        ("conjecture suite", conjecture_suite, secs(600)),
        ("implications S_6", implications, Duration::MAX),
        ("determinism n=5", determinism, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > limit {
                Err(format!("{detail}, but took {elapsed:.2?} (limit {limit:?})"))
            } else {
                Ok(detail)
            }
        });
        let (status, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {name:<30} {elapsed:>10.2?}  {detail}", i + 1);
    }
    println!("acceptance: {} of 11 passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
