use std::io::Write;

use hsbraid::braid::{bell_basis, braid_relation_deviations, r_matrix, yang_baxter_deviation};
use hsbraid::linalg::QubitSubset;
use hsbraid::pauli::hs_decompose;
use hsbraid::separability::{
    certify, correlation_report, criterion_verdict, ppt_min_eigenvalue, validate_density, werner_state,
    CorrelationReportJson, SeparableDecomposition, Verdict,
};
use hsbraid::states::StateSpec;
use serde_json::{json, Value};

use crate::render::{bloch, bloch_text, coefficient_json, coefficient_lines, complex, signed};
use crate::{Cli, CliError, Command, Status};

type Out<'a> = &'a mut dyn Write;

pub fn run(cli: &Cli, out: Out) -> Result<Status, CliError> {
    match &cli.command {
        Command::Decompose { state, full } => decompose(&state.spec, *full, cli, out),
        Command::Separability { state, certificate } => separability(&state.spec, *certificate, cli, out),
        Command::Report { state } => report(&state.spec, cli, out),
        Command::BraidCheck { n } => braid_check(*n, cli, out),
        Command::BellStates { n, full } => bell_states(*n, *full, cli, out),
        Command::WernerScan { steps } => werner_scan(*steps as usize, cli, out),
    }
}

fn load(spec: &StateSpec) -> Result<hsbraid::linalg::Matrix<f64>, CliError> {
    spec.density().map_err(|source| CliError::State { spec: spec.to_string(), source })
}

fn emit(out: Out, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("JSON values always serialize"))?;
    Ok(())
}

fn decompose(spec: &StateSpec, full: bool, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let rho = load(spec)?;
    validate_density(&rho, cli.tol)?;
    let d = hs_decompose(&rho)?;
    if cli.json {
        let mut v = coefficient_json(&d, full)?;
        v["state"] = json!(spec.to_string());
        emit(out, &v)?;
    } else {
        writeln!(out, "state {spec} ({} qubits)", d.n())?;
        for line in coefficient_lines(&d, full)? {
            writeln!(out, "{line}")?;
        }
    }
    Ok(Status::Ok)
}

/// Bipartitions checked with PPT: `{B}` for two qubits, every single qubit
/// against the rest otherwise.
fn ppt_cuts(n: usize) -> Vec<QubitSubset> {
    if n == 2 {
        vec![QubitSubset::new(vec![1], 2).expect("valid cut")]
    } else {
        (0..n).map(|q| QubitSubset::new(vec![q], n).expect("valid cut")).collect()
    }
}

fn certificate_json(cert: &SeparableDecomposition<f64>) -> Result<Value, CliError> {
    let terms = cert
        .terms()
        .iter()
        .map(|t| {
            let factors = t.factors.iter().map(bloch).collect::<hsbraid::Result<Vec<_>>>()?;
            Ok(json!({ "weight": t.weight, "bloch": factors }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(json!({ "n": cert.n(), "weight_sum": cert.weight_sum(), "terms": terms }))
}

fn separability(spec: &StateSpec, certificate: bool, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let rho = load(spec)?;
    let v = criterion_verdict(&rho, cli.tol)?;
    let n = rho.qubits()?;
    let cuts: Vec<(QubitSubset, f64)> = if n >= 2 {
        ppt_cuts(n)
            .into_iter()
            .map(|c| Ok((c.clone(), ppt_min_eigenvalue(&rho, &c)?)))
            .collect::<hsbraid::Result<_>>()?
    } else {
        Vec::new()
    };
    let cert = if certificate { certify(&rho, cli.tol)? } else { None };

    if cli.json {
        let ppt: Vec<Value> = cuts
            .iter()
            .map(|(c, min)| json!({ "cut": c.indices(), "min_eigenvalue": min, "ppt": *min >= -cli.tol }))
            .collect();
        let mut value = json!({
            "state": spec.to_string(),
            "n": n,
            "sum_abs": v.sum_abs,
            "verdict": v.verdict,
            "reason": v.reason,
            "ppt": ppt,
        });
        if certificate {
            value["certificate"] = match &cert {
                Some(c) => certificate_json(c)?,
                None => Value::Null,
            };
        }
        emit(out, &value)?;
        return Ok(Status::Ok);
    }

    writeln!(out, "state {spec} ({n} qubits)")?;
    writeln!(out, "sum |full-weight| = {:.6}", v.sum_abs)?;
    writeln!(out, "verdict: {} ({})", v.verdict, v.reason)?;
    for (c, min) in &cuts {
        let label = if *min >= -cli.tol { "ppt" } else { "npt" };
        writeln!(out, "ppt {}|{}: {label} (min eigenvalue {})", c.complement(), c, signed(*min))?;
    }
    if n == 2 && !cuts.is_empty() {
        let ppt = cuts[0].1 >= -cli.tol;
        let agrees = match v.verdict {
            Verdict::Separable => ppt,
            Verdict::EntangledByCriterion => !ppt,
            Verdict::Inapplicable => true,
        };
        if v.verdict != Verdict::Inapplicable {
            writeln!(out, "ppt {} the criterion", if agrees { "agrees with" } else { "disagrees with" })?;
        }
    }
    if certificate {
        match &cert {
            Some(c) => {
                writeln!(out, "certificate: {} product terms, weights sum to {:.6}", c.terms().len(), c.weight_sum())?;
                for t in c.terms() {
                    let factors =
                        t.factors.iter().map(|f| bloch(f).map(bloch_text)).collect::<hsbraid::Result<Vec<_>>>()?;
                    writeln!(out, "  {:.6}  {}", t.weight, factors.join(" ⊗ "))?;
                }
            }
            None => writeln!(out, "certificate: none")?,
        }
    }
    Ok(Status::Ok)
}

fn report(spec: &StateSpec, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let rho = load(spec)?;
    let r = correlation_report(&rho, cli.tol)?;
    if cli.json {
        let mut value = serde_json::to_value(CorrelationReportJson::from(&r)).expect("report serializes");
        value["state"] = json!(spec.to_string());
        emit(out, &value)?;
        return Ok(Status::Ok);
    }
    writeln!(out, "state {spec} ({} qubits)", r.n)?;
    writeln!(out, "{:<8} {:>10}  verdict", "kept", "sum_abs")?;
    for e in &r.entries {
        writeln!(out, "{:<8} {:>10.6}  {}", e.kept.to_string(), e.verdict.sum_abs, e.verdict.verdict)?;
    }
    writeln!(out, "single qubits: {}", hsbraid::separability::SINGLE_QUBIT_NOTE)?;
    Ok(Status::Ok)
}

fn braid_check(n: usize, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let r = r_matrix::<f64>();
    let check = braid_relation_deviations(&r, n)?;
    let yb = yang_baxter_deviation(&r)?;
    let pass = check.passes(cli.tol) && yb <= cli.tol;
    if cli.json {
        emit(
            out,
            &json!({
                "n": n,
                "far_commutation": check.far_commutation,
                "adjacent": check.adjacent,
                "inverse": check.inverse,
                "yang_baxter": yb,
                "tol": cli.tol,
                "pass": pass,
            }),
        )?;
    } else {
        writeln!(out, "braid relations on {n} qubits")?;
        writeln!(out, "  far commutation  {:.3e}", check.far_commutation)?;
        writeln!(out, "  adjacent braid   {:.3e}", check.adjacent)?;
        writeln!(out, "  inverse          {:.3e}", check.inverse)?;
        writeln!(out, "  yang-baxter      {:.3e}", yb)?;
        writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    }
    Ok(if pass { Status::Ok } else { Status::CheckFailed })
}

fn bell_states(n: usize, full: bool, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let basis = bell_basis::<f64>(n)?;
    let gram = basis.orthonormality_deviation();
    let orthonormal = gram <= cli.tol;
    let tables = basis.states().iter().map(|s| hs_decompose(&s.outer()?)).collect::<hsbraid::Result<Vec<_>>>()?;

    if cli.json {
        let states = basis
            .states()
            .iter()
            .zip(&tables)
            .enumerate()
            .map(|(k, (s, d))| {
                Ok(json!({
                    "index": k + 1,
                    "amplitudes": serde_json::to_value(hsbraid::linalg::StateVectorJson::from(s)).expect("vector serializes"),
                    "coefficients": coefficient_json(d, full)?,
                }))
            })
            .collect::<Result<Vec<Value>, CliError>>()?;
        emit(out, &json!({ "n": n, "gram_deviation": gram, "orthonormal": orthonormal, "states": states }))?;
    } else {
        writeln!(out, "braid Bell basis on {n} qubits: {} states", basis.states().len())?;
        writeln!(out, "gram deviation {gram:.3e} ({})", if orthonormal { "orthonormal" } else { "NOT orthonormal" })?;
        for (k, (s, d)) in basis.states().iter().zip(&tables).enumerate() {
            writeln!(out, "B{}", k + 1)?;
            for (idx, a) in s.amplitudes().iter().enumerate() {
                if a.norm() >= hsbraid::pauli::REPORT_THRESHOLD {
                    writeln!(out, "  |{idx:0n$b}>  {}", complex(*a))?;
                }
            }
            for line in coefficient_lines(d, full)? {
                writeln!(out, "  {line}")?;
            }
        }
    }
    Ok(if orthonormal { Status::Ok } else { Status::CheckFailed })
}

fn werner_scan(steps: usize, cli: &Cli, out: Out) -> Result<Status, CliError> {
    let cut = QubitSubset::new(vec![1], 2)?;
    let mut rows = Vec::with_capacity(steps);
    let mut all_agree = true;
    for k in 0..steps {
        let p = k as f64 / (steps - 1) as f64;
        let rho = werner_state(p)?;
        let v = criterion_verdict(&rho, cli.tol)?;
        let min = ppt_min_eigenvalue(&rho, &cut)?;
        let ppt = min >= -cli.tol;
        let agree = (v.verdict == Verdict::Separable) == ppt;
        all_agree &= agree;
        rows.push((p, v.sum_abs, v.verdict, ppt, agree));
    }
    if cli.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(p, s, v, ppt, agree)| json!({ "p": p, "sum_abs": s, "verdict": v, "ppt": ppt, "agree": agree }))
            .collect();
        emit(out, &json!({ "steps": steps, "rows": rows, "agree": all_agree }))?;
    } else {
        writeln!(out, "{:>8} {:>10}  {:<24} {:<5} agree", "p", "sum_abs", "verdict", "ppt")?;
        for (p, s, v, ppt, agree) in &rows {
            writeln!(
                out,
                "{p:>8.4} {s:>10.6}  {:<24} {:<5} {}",
                v.to_string(),
                if *ppt { "yes" } else { "no" },
                if *agree { "yes" } else { "NO" }
            )?;
        }
    }
    Ok(if all_agree { Status::Ok } else { Status::CheckFailed })
}
