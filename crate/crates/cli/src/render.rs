//! Plain-text tables and JSON values for command output.

use bayes_stp::{ExtReal, NormalGame, ProfileSpace};
use serde_json::{json, Value};

/// Four decimals, trailing zeros dropped.
pub fn num(x: f64) -> String {
    if x == f64::NEG_INFINITY {
        return "-inf".into();
    }
    let s = format!("{x:.4}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" { "0".into() } else { s.into() }
}

pub fn ext(x: ExtReal) -> String {
    num(x.to_f64())
}

pub fn ext_json(row: &[ExtReal]) -> Value {
    Value::Array(row.iter().map(|x| x.value().map_or(Value::Null, |v| json!(v))).collect())
}

pub fn profile(p: &[usize]) -> String {
    let inner: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

/// Right-aligned columns separated by two spaces.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |r: &[String]| {
        let cells: Vec<String> = r.iter().zip(&width).map(|(c, &w)| format!("{c:>w$}")).collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// Player 1 down the side, player 2 across, cells `u1, u2`.
pub fn bimatrix(g: &NormalGame, labels: [&dyn Fn(usize) -> String; 2]) -> String {
    let c = g.cardinalities();
    let mut header = vec!["1 \\ 2".to_string()];
    header.extend((1..=c[1]).map(labels[1]));
    let rows: Vec<Vec<String>> = (1..=c[0])
        .map(|x| {
            let mut r = vec![labels[0](x)];
            r.extend((1..=c[1]).map(|y| {
                let a = [x, y];
                format!("{}, {}", ext(g.payoff(1, &a).unwrap()), ext(g.payoff(2, &a).unwrap()))
            }));
            r
        })
        .collect();
    table(&header, &rows)
}

/// One line per profile with every player's payoff.
pub fn payoff_list(g: &NormalGame, label: &dyn Fn(&[usize]) -> String) -> String {
    let n = g.players();
    let mut header = vec!["profile".to_string()];
    header.extend((1..=n).map(|i| format!("u{i}")));
    let rows: Vec<Vec<String>> = g
        .space()
        .iter()
        .map(|a| {
            let mut r = vec![label(&a)];
            r.extend((1..=n).map(|i| ext(g.payoff(i, &a).unwrap())));
            r
        })
        .collect();
    table(&header, &rows)
}

/// `value` per profile of `space`, skipping `-inf` cells.
pub fn vector_table(space: &ProfileSpace, values: &[ExtReal], label: &str) -> String {
    let rows: Vec<Vec<String>> = space
        .iter()
        .zip(values)
        .filter(|(_, v)| v.is_finite())
        .map(|(p, v)| vec![profile(&p), ext(*v)])
        .collect();
    table(&["profile".into(), label.into()], &rows)
}
