use hsbraid::linalg::Matrix;
use hsbraid::pauli::{conventional_label, pauli_matrix, HsDecomposition, Pauli, REPORT_THRESHOLD};
use hsbraid::scalar::Scalar;
use hsbraid::Result;
use serde_json::{json, Map, Value};

pub fn signed(v: f64) -> String {
    format!("{v:+.6}")
}

pub fn complex(z: Scalar<f64>) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

/// Coefficient lines grouped by weight, with the conventional names where
/// they exist.
pub fn coefficient_lines(d: &HsDecomposition<f64>, full: bool) -> Result<Vec<String>> {
    let n = d.n();
    let named = n == 2 || n == 3;
    let mut lines = Vec::new();
    for w in 0..=n {
        let entries = d.by_weight(w, full)?;
        if entries.is_empty() {
            continue;
        }
        lines.push(format!("weight {w}"));
        for (s, c) in entries {
            let label = if named { conventional_label(&s).unwrap_or_default() } else { String::new() };
            if named {
                lines.push(format!("  {s}  {label:<5} {}", signed(c)));
            } else {
                lines.push(format!("  {s}  {}", signed(c)));
            }
        }
    }
    Ok(lines)
}

/// `{"n", "coeffs"}` with an extra `"labels"` map for two and three qubits.
pub fn coefficient_json(d: &HsDecomposition<f64>, full: bool) -> Result<Value> {
    let table = d.to_json(REPORT_THRESHOLD, full);
    let mut out = Map::new();
    out.insert("n".into(), json!(table.n));
    if table.n == 2 || table.n == 3 {
        let labels: Map<String, Value> = table
            .coeffs
            .keys()
            .filter_map(|k| {
                let s = k.parse().ok()?;
                conventional_label(&s).map(|l| (k.clone(), Value::String(l)))
            })
            .collect();
        out.insert("coeffs".into(), Value::Object(table.coeffs));
        out.insert("labels".into(), Value::Object(labels));
    } else {
        out.insert("coeffs".into(), Value::Object(table.coeffs));
    }
    Ok(Value::Object(out))
}

/// Bloch vector `(Tr fX, Tr fY, Tr fZ)` of a single-qubit factor.
pub fn bloch(f: &Matrix<f64>) -> Result<[f64; 3]> {
    let mut r = [0.0; 3];
    for (slot, p) in r.iter_mut().zip([Pauli::X, Pauli::Y, Pauli::Z]) {
        *slot = f.matmul(&pauli_matrix(p))?.trace().re;
    }
    Ok(r)
}

pub fn bloch_text(r: [f64; 3]) -> String {
    let nonzero: Vec<(usize, f64)> =
        r.iter().copied().enumerate().filter(|(_, v)| v.abs() >= REPORT_THRESHOLD).collect();
    match nonzero.as_slice() {
        [] => "I/2".into(),
        [(axis, v)] if (v.abs() - 1.0).abs() < REPORT_THRESHOLD => {
            format!("{}{}", if *v > 0.0 { '+' } else { '-' }, ['X', 'Y', 'Z'][*axis])
        }
        _ => format!("({:.6}, {:.6}, {:.6})", r[0], r[1], r[2]),
    }
}
