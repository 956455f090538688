//! Renderers for the optimal-reflection-count table.

use dihedral_growth::counting::OptimalTable;
use serde_json::{json, Value};

fn cell_text(cell: &[usize]) -> String {
    cell.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Markdown table; diagonal cells (`n == k`) are bold.
pub fn to_markdown(table: &OptimalTable) -> String {
    let mut out = String::new();
    out.push_str("| n \\ k |");
    for k in table.k_values() {
        out.push_str(&format!(" {k} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in table.k_values() {
        out.push_str(" --- |");
    }
    out.push('\n');
    for (n_idx, n) in table.n_values().iter().enumerate() {
        out.push_str(&format!("| {n} |"));
        for (k_idx, k) in table.k_values().iter().enumerate() {
            let text = cell_text(table.cell(n_idx, k_idx));
            if n == k {
                out.push_str(&format!(" **{text}** |"));
            } else {
                out.push_str(&format!(" {text} |"));
            }
        }
        out.push('\n');
    }
    out
}

pub fn to_csv(table: &OptimalTable) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n".to_string()];
    header.extend(table.k_values().iter().map(|k| k.to_string()));
    writer.write_record(&header).expect("in-memory write");
    for (n_idx, n) in table.n_values().iter().enumerate() {
        let mut row = vec![n.to_string()];
        for k_idx in 0..table.k_values().len() {
            row.push(cell_text(table.cell(n_idx, k_idx)));
        }
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is UTF-8")
}

pub fn to_json(table: &OptimalTable) -> Value {
    let rows: Vec<Value> = table
        .n_values()
        .iter()
        .enumerate()
        .map(|(n_idx, n)| {
            let cells: Vec<Value> = (0..table.k_values().len())
                .map(|k_idx| {
                    Value::Array(
                        table
                            .cell(n_idx, k_idx)
                            .iter()
                            .map(|p| Value::String(p.to_string()))
                            .collect(),
                    )
                })
                .collect();
            json!({ "n": n.to_string(), "cells": cells })
        })
        .collect();
    json!({
        "k_values": table.k_values().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
        "n_values": table.n_values().iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "rows": rows,
    })
}
