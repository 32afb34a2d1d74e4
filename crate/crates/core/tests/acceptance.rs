//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use hsbraid::braid::{
    bell_basis, bell_state, braid_relation_deviations, r_from_exponential, r_from_pauli, r_matrix, realize_with,
    verify_braid_relations, verify_yang_baxter, yang_baxter_deviation, BraidWord,
};
use hsbraid::linalg::{Matrix, QubitSubset, StateVector};
use hsbraid::pauli::{hs_decompose, hs_decompose_naive, hs_reconstruct, HsDecomposition, PauliString};
use hsbraid::separability::{
    build_separable_decomposition, criterion_verdict, full_weight_sum, ppt_check, ppt_min_eigenvalue, werner_state,
    Verdict,
};
use hsbraid::states::{bell_singlet, ghz};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn string(s: &str) -> PauliString {
    s.parse().expect("valid Pauli string")
}

fn subset(indices: &[usize], n: usize) -> QubitSubset {
    QubitSubset::new(indices.to_vec(), n).expect("valid subset")
}

/// Translates the three-qubit symbols `G_abc`, `t_bc`, `o_ac`, `f_ab`
/// (digits 1, 2, 3 for X, Y, Z) into Pauli strings.
fn symbol(label: &str) -> PauliString {
    let letter = |c: char| match c {
        '1' => 'X',
        '2' => 'Y',
        '3' => 'Z',
        _ => panic!("bad digit in {label}"),
    };
    let digits: Vec<char> = label[1..].chars().map(letter).collect();
    let s: String = match &label[..1] {
        "G" => digits.iter().collect(),
        "t" => format!("I{}{}", digits[0], digits[1]),
        "o" => format!("{}I{}", digits[0], digits[1]),
        "f" => format!("{}{}I", digits[0], digits[1]),
        _ => panic!("bad symbol {label}"),
    };
    string(&s)
}

fn werner_threshold() -> Outcome {
    let start = Instant::now();
    let cut = subset(&[1], 2);
    for k in 0..=100 {
        let p = k as f64 / 100.0;
        let rho = werner_state(p).map_err(|e| e.to_string())?;
        let v = criterion_verdict(&rho, 1e-9).map_err(|e| e.to_string())?;
        let separable = v.verdict == Verdict::Separable;
        ensure(separable == (p <= 1.0 / 3.0 + 1e-9), || format!("p = {p}: verdict {}", v.verdict))?;
        let ppt = ppt_check(&rho, &cut, 1e-9).map_err(|e| e.to_string())?;
        ensure(separable == ppt, || format!("p = {p}: criterion {separable}, ppt {ppt}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("101 grid points agree with PPT in {elapsed:?}"))
}

fn ghz_table() -> Outcome {
    let d = hs_decompose(&ghz::<f64>(3).unwrap().outer().unwrap()).unwrap();
    let expected = [
        ("III", 1.0),
        ("XYY", -1.0),
        ("YXY", -1.0),
        ("YYX", -1.0),
        ("IZZ", 1.0),
        ("ZIZ", 1.0),
        ("ZZI", 1.0),
        ("XXX", 1.0),
    ];
    for (s, c) in expected {
        let got = d.get(&string(s));
        ensure((got - c).abs() < 1e-12, || format!("{s} = {got}, expected {c}"))?;
    }
    let listed: Vec<usize> = expected.iter().map(|(s, _)| string(s).index()).collect();
    let stray = (0..64).filter(|i| !listed.contains(i)).map(|i| d.get_index(i).abs()).fold(0.0, f64::max);
    ensure(stray < 1e-12, || format!("unlisted coefficient of magnitude {stray:e}"))?;
    Ok(format!("7 signed entries match, 56 others below {stray:.1e}"))
}

fn reduced_ghz() -> Outcome {
    let rho = ghz::<f64>(3).unwrap().outer().unwrap();
    let reduced = rho.partial_trace(&subset(&[2], 3)).unwrap();
    let d = hs_decompose(&reduced).unwrap();
    for i in 0..16 {
        let s = PauliString::from_index(i, 2);
        let expected = if matches!(s.to_string().as_str(), "II" | "ZZ") { 1.0 } else { 0.0 };
        ensure((d.get_index(i) - expected).abs() < 1e-12, || format!("{s} = {}", d.get_index(i)))?;
    }
    let v = criterion_verdict(&reduced, 1e-9).unwrap();
    ensure((v.sum_abs - 1.0).abs() < 1e-12, || format!("sum = {}", v.sum_abs))?;
    ensure(v.verdict == Verdict::Separable, || format!("verdict {}", v.verdict))?;
    let cert = build_separable_decomposition(&d).map_err(|e| e.to_string())?;
    let audit = cert.audit(&reduced).unwrap();
    ensure(audit.reconstruction_error < 1e-10, || format!("reconstruction error {:e}", audit.reconstruction_error))?;
    Ok(format!(
        "{{II:1, ZZ:1}}, sum 1, separable, certificate of {} terms off by {:.1e}",
        cert.terms().len(),
        audit.reconstruction_error
    ))
}

fn singlet_maximality() -> Outcome {
    let singlet = bell_singlet::<f64>().outer().unwrap();
    let sum = full_weight_sum(&hs_decompose(&singlet).unwrap());
    ensure((sum - 3.0).abs() < 1e-12, || format!("sum = {sum}"))?;
    let diff = werner_state(1.0).unwrap().max_abs_diff(&singlet);
    ensure(diff < 1e-12, || format!("werner(1) differs from the singlet by {diff:e}"))?;
    let min = ppt_min_eigenvalue(&singlet, &subset(&[1], 2)).unwrap();
    ensure((min + 0.5).abs() < 1e-9, || format!("PPT min eigenvalue {min}"))?;
    Ok(format!("sum {sum:.12}, werner(1) off by {diff:.1e}, PPT min eigenvalue {min:.12}"))
}

fn braid_relations() -> Outcome {
    let start = Instant::now();
    let r = r_matrix::<f64>();
    let mut worst = 0.0f64;
    for n in 3..=6 {
        let dev = braid_relation_deviations(&r, n).map_err(|e| e.to_string())?.max_deviation();
        worst = worst.max(dev);
        ensure(verify_braid_relations(n, 1e-12), || format!("n = {n}: deviation {dev:e}"))?;
    }
    let yb = yang_baxter_deviation(&r).unwrap();
    ensure(verify_yang_baxter(1e-12), || format!("Yang-Baxter deviation {yb:e}"))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("n = 3..6 worst deviation {worst:.1e}, Yang-Baxter {yb:.1e}, {elapsed:?}"))
}

fn three_forms_of_r() -> Outcome {
    let forms = [("entries", r_matrix::<f64>()), ("pauli", r_from_pauli()), ("exponential", r_from_exponential())];
    let mut worst = 0.0f64;
    for (i, (na, a)) in forms.iter().enumerate() {
        for (nb, b) in &forms[i + 1..] {
            let d = a.max_abs_diff(b);
            worst = worst.max(d);
            ensure(d < 1e-12, || format!("{na} vs {nb}: {d:e}"))?;
        }
    }
    Ok(format!("pairwise max difference {worst:.1e}"))
}

fn braid_bell_basis() -> Outcome {
    let basis = bell_basis::<f64>(3).unwrap();
    let mut report = Vec::new();
    let mut failures = Vec::new();

    let gram = basis.orthonormality_deviation();
    report.push(format!("gram {}", if gram < 1e-12 { "ok" } else { "off" }));
    if gram >= 1e-12 {
        failures.push(format!("Gram matrix off identity by {gram:e}"));
    }

    let tables: [(usize, &[(&str, f64)]); 3] = [
        (1, &[("G113", -1.0), ("G311", -1.0), ("G131", -1.0), ("t22", 1.0), ("o11", 1.0), ("f33", 1.0), ("G333", 1.0)]),
        (
            3,
            &[
                ("G333", -1.0),
                ("G311", -1.0),
                ("G131", -1.0),
                ("t22", -1.0),
                ("o11", -1.0),
                ("f33", -1.0),
                ("G113", 1.0),
            ],
        ),
        (7, &[("t22", -1.0), ("G131", -1.0), ("o11", 1.0), ("f33", 1.0), ("G333", 1.0), ("G113", 1.0), ("G311", 1.0)]),
    ];
    for (i, table) in tables {
        let d = hs_decompose(&bell_state::<f64>(3, i).unwrap().outer().unwrap()).unwrap();
        let wrong: Vec<String> = table
            .iter()
            .filter_map(|&(label, c)| {
                let s = symbol(label);
                let got = d.get(&s);
                ((got - c).abs() >= 1e-12).then(|| format!("{label}={s} is {got:+.0}, table {c:+.0}"))
            })
            .collect();
        report.push(format!("B{i} {}/{}", table.len() - wrong.len(), table.len()));
        if !wrong.is_empty() {
            failures.push(format!("B{i}: {}", wrong.join(", ")));
        }
    }

    for (k, state) in basis.states().iter().enumerate() {
        let rho = state.outer().unwrap();
        let sum = full_weight_sum(&hs_decompose(&rho).unwrap());
        if (sum - 4.0).abs() >= 1e-12 {
            failures.push(format!("B{}: sum |G| = {sum}", k + 1));
        }
        for traced in 0..3 {
            let reduced = rho.partial_trace(&subset(&[traced], 3)).unwrap();
            let v = criterion_verdict(&reduced, 1e-9).unwrap();
            if v.verdict != Verdict::Separable {
                failures.push(format!("B{} tracing qubit {traced}: {}", k + 1, v.verdict));
            }
        }
    }
    report.push("sum |G| = 4 and pairs separable".to_string());
    if failures.is_empty() {
        Ok(report.join(", "))
    } else {
        let best = convention_scores(&tables).into_iter().max_by_key(|(_, hits)| *hits).expect("four conventions");
        Err(format!(
            "[{}] {}; best of 4 bit/word-order conventions is {} with {}/21 entries",
            report.join(", "),
            failures.join("; "),
            best.0,
            best.1
        ))
    }
}

/// Scores the literal tables under both qubit orders and both word orders.
/// Flipping the qubit order swaps the two tensor factors of R and reverses
/// the bits of the starting column.
fn convention_scores(tables: &[(usize, &[(&str, f64)]); 3]) -> Vec<(String, usize)> {
    let swap = Matrix::<f64>::from_real_rows(&[
        &[1.0, 0.0, 0.0, 0.0],
        &[0.0, 0.0, 1.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
        &[0.0, 0.0, 0.0, 1.0],
    ])
    .unwrap();
    let r = r_matrix::<f64>();
    let r_flipped = swap.matmul(&r).unwrap().matmul(&swap).unwrap();
    let mut scores = Vec::new();
    for (bits, r) in [("msb-first", &r), ("lsb-first", &r_flipped)] {
        for words in ["g1 g2", "g2 g1"] {
            let u = realize_with(r, &BraidWord::parse(3, words).unwrap()).unwrap();
            let mut hits = 0;
            for &(i, table) in tables {
                let column = if bits == "msb-first" { i - 1 } else { ((i - 1) as u8).reverse_bits() as usize >> 5 };
                let state = u.apply(&StateVector::basis(8, column).unwrap()).unwrap();
                let d = hs_decompose(&state.outer().unwrap()).unwrap();
                hits += table.iter().filter(|&&(label, c)| (d.get(&symbol(label)) - c).abs() < 1e-12).count();
            }
            scores.push((format!("{bits} {words}"), hits));
        }
    }
    scores
}

fn round_trip() -> Outcome {
    let mut r = rng(8);
    let (mut worst_round, mut worst_naive) = (0.0f64, 0.0f64);
    for n in 2..=4 {
        for _ in 0..100 {
            let rho = random_density(n, &mut r);
            let d = hs_decompose(&rho).unwrap();
            worst_round = worst_round.max(hs_reconstruct(&d).unwrap().max_abs_diff(&rho));
            if n <= 3 {
                worst_naive = worst_naive.max(d.max_abs_diff(&hs_decompose_naive(&rho).unwrap()));
            }
        }
    }
    ensure(worst_round < 1e-10, || format!("round trip off by {worst_round:e}"))?;
    ensure(worst_naive < 1e-12, || format!("fast vs naive off by {worst_naive:e}"))?;
    Ok(format!("300 states, round trip {worst_round:.1e}, fast vs naive {worst_naive:.1e}"))
}

fn certificate_soundness() -> Outcome {
    let mut r = rng(9);
    let mut worst = 0.0f64;
    for trial in 0..100 {
        let n = r.gen_range(2..=4);
        let full: Vec<PauliString> =
            (0..1usize << (2 * n)).map(|i| PauliString::from_index(i, n)).filter(|s| s.weight() == n).collect();
        let k = r.gen_range(1..=6);
        let raw: Vec<(PauliString, f64)> =
            (0..k).map(|_| (full[r.gen_range(0..full.len())].clone(), r.gen_range(-1.0..1.0))).collect();
        let total = r.gen_range(0.0..=1.0);
        let norm: f64 = raw.iter().map(|(_, v)| v.abs()).sum();
        let entries = raw.into_iter().map(|(s, v)| (s, v / norm * total)).chain([(PauliString::identity(n), 1.0)]);
        let d = HsDecomposition::from_entries(n, entries).unwrap();
        let cert = build_separable_decomposition(&d).map_err(|e| format!("trial {trial}: {e}"))?;
        let audit = cert.audit(&hs_reconstruct(&d).unwrap()).unwrap();
        worst = worst.max(audit.worst());
        ensure(audit.holds(1e-10), || format!("trial {trial}: {audit:?}"))?;
    }
    Ok(format!("100 coefficient sets, worst invariant residual {worst:.1e}"))
}

/// `<GHZ_n| P |GHZ_n>`: Z/I strings with an even number of Z give 1, strings
/// of only X and Y give `cos(pi #Y / 2)`, everything else vanishes.
fn ghz_coefficient(s: &PauliString) -> f64 {
    let text = s.to_string();
    if text.chars().all(|c| c == 'I' || c == 'Z') {
        if text.matches('Z').count().is_multiple_of(2) {
            1.0
        } else {
            0.0
        }
    } else if text.chars().all(|c| c == 'X' || c == 'Y') {
        match text.matches('Y').count() % 4 {
            0 => 1.0,
            2 => -1.0,
            _ => 0.0,
        }
    } else {
        0.0
    }
}

fn scale_check() -> Outcome {
    // the closed form is first confirmed against brute-force traces
    let small = hs_decompose_naive(&ghz::<f64>(4).unwrap().outer().unwrap()).unwrap();
    for i in 0..256 {
        let s = PauliString::from_index(i, 4);
        ensure((small.get_index(i) - ghz_coefficient(&s)).abs() < 1e-12, || format!("n = 4 closed form wrong at {s}"))?;
    }

    let start = Instant::now();
    let d = hs_decompose(&ghz::<f64>(8).unwrap().outer().unwrap()).unwrap();
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    let mut nonzero = 0;
    for i in 0..1usize << 16 {
        let s = PauliString::from_index(i, 8);
        let (got, want) = (d.get_index(i), ghz_coefficient(&s));
        ensure((got - want).abs() < 1e-12, || format!("{s} = {got}, expected {want}"))?;
        if s.weight() == 1 {
            ensure(got.abs() < 1e-12, || format!("weight-1 coefficient {s} = {got}"))?;
        }
        nonzero += usize::from(want != 0.0);
    }
    ensure(nonzero == 256, || format!("{nonzero} nonzero coefficients"))?;

    let basis = bell_basis::<f64>(4).unwrap();
    let gram = basis.orthonormality_deviation();
    ensure(basis.states().len() == 16, || format!("{} states", basis.states().len()))?;
    ensure(gram < 1e-12, || format!("n = 4 Gram off identity by {gram:e}"))?;
    let id: Matrix<f64> = Matrix::identity(16);
    ensure(basis.gram().approx_eq(&id, 1e-12), || "n = 4 Gram matrix".to_string())?;
    Ok(format!("ghz(8) in {elapsed:?}, 128 Z-type + 128 XY-type nonzero, 16-state basis off by {gram:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Werner threshold", werner_threshold),
        ("GHZ table", ghz_table),
        ("reduced GHZ", reduced_ghz),
        ("singlet maximality", singlet_maximality),
        ("braid relations", braid_relations),
        ("three forms of R", three_forms_of_r),
        ("braid Bell basis", braid_bell_basis),
        ("round trip", round_trip),
        ("certificate soundness", certificate_soundness),
        ("scale check", scale_check),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
