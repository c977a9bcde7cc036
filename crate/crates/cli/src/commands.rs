//! Subcommand implementations: file I/O, dispatch into the library, and
//! JSON / table rendering.

use std::path::Path;

use serde_json::{json, Value};

use superyang::bethe::{BAESystem, BetheError};
use superyang::diffop::build_operator;
use superyang::gl11::{irreducible_qchar_detailed, reflect_qchar, Gl11Error};
use superyang::json as sj;
use superyang::lweight::{LWeight, LWeightError};
use superyang::parity::ParitySeq;
use superyang::partition::Partition;
use superyang::qchar::QChar;
use superyang::reflection::{reflect as reflect_op, reflect_to as reflect_to_op, ReflectionError};
use superyang::tableaux::{enumerate_ssyt_capped, STableau, SkewDiagram, TableauxError};

use crate::config::{Config, Format};

pub enum Output {
    Text(String),
}

/// A failed command: `name` is the machine-readable error identifier carried
/// verbatim from the originating module.
pub struct AppError {
    pub name: String,
    pub message: String,
}

impl AppError {
    fn new(name: &str, message: impl Into<String>) -> Self {
        AppError {
            name: name.to_string(),
            message: message.into(),
        }
    }
}

macro_rules! from_error {
    ($ty:ty) => {
        impl From<$ty> for AppError {
            fn from(e: $ty) -> Self {
                AppError::new(e.name(), e.to_string())
            }
        }
    };
}

from_error!(sj::JsonError);
from_error!(ReflectionError);
from_error!(Gl11Error);
from_error!(TableauxError);
from_error!(BetheError);
from_error!(LWeightError);

fn read_json(path: &Path) -> Result<Value, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::new("Io", format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text)
        .map_err(|e| AppError::new("MalformedJson", format!("{}: {}", path.display(), e)))
}

fn load_lweight(path: &Path) -> Result<LWeight, AppError> {
    Ok(sj::lweight_from_json(&read_json(path)?)?)
}

fn load_qchar(path: &Path) -> Result<QChar, AppError> {
    Ok(sj::qchar_from_json(&read_json(path)?)?)
}

fn load_system(path: &Path) -> Result<BAESystem, AppError> {
    Ok(sj::system_from_json(&read_json(path)?)?)
}

fn parse_parity(text: &str) -> Result<ParitySeq, AppError> {
    text.parse::<ParitySeq>()
        .map_err(|e| AppError::new("InvalidParity", e.to_string()))
}

fn parse_partition(text: &str) -> Result<Partition, AppError> {
    text.parse::<Partition>()
        .map_err(|e| AppError::new("InvalidPartition", e.to_string()))
}

fn check_node(z: &LWeight, node: usize) -> Result<(), AppError> {
    if node == 0 || node >= z.parity().len() {
        return Err(AppError::new(
            "NodeOutOfRange",
            format!("node must be between 1 and {}", z.parity().len() - 1),
        ));
    }
    Ok(())
}

fn render(v: &Value) -> Output {
    Output::Text(sj::to_string_pretty(v))
}

fn lweight_table(z: &LWeight) -> String {
    let mut out = format!("parity: {}", z.parity());
    for (i, c) in z.components().iter().enumerate() {
        out.push_str(&format!("\nzeta_{} = {}", i + 1, c));
    }
    out
}

fn qchar_table(q: &QChar) -> String {
    let mut out = format!("parity: {}\nmult  lweight", q.parity());
    for (z, mult) in q.terms() {
        out.push_str(&format!("\n{:<5} {}", mult, z));
    }
    out.push_str(&format!("\ndimension: {}", q.dim()));
    out
}

pub fn reflect(config: &Config, path: &Path, node: usize) -> Result<Output, AppError> {
    let z = load_lweight(path)?;
    check_node(&z, node)?;
    let reflected = reflect_op(&z, node)?;
    Ok(match config.output_format {
        Format::Json => render(&sj::lweight_to_json(&reflected)),
        Format::Table => Output::Text(lweight_table(&reflected)),
    })
}

pub fn reflect_to(config: &Config, path: &Path, target: &str) -> Result<Output, AppError> {
    let z = load_lweight(path)?;
    let target = parse_parity(target)?;
    let reflected = reflect_to_op(&z, &target)?;
    Ok(match config.output_format {
        Format::Json => render(&sj::lweight_to_json(&reflected)),
        Format::Table => Output::Text(lweight_table(&reflected)),
    })
}

pub fn qchar11(config: &Config, path: &Path) -> Result<Output, AppError> {
    let z = load_lweight(path)?;
    let detail = irreducible_qchar_detailed(&z)?;
    Ok(match config.output_format {
        Format::Json => {
            let mut v = sj::qchar_to_json(&detail.chi);
            let obj = v.as_object_mut().unwrap();
            obj.insert("ratio_degree".into(), json!(detail.ratio_degree));
            obj.insert("collided".into(), json!(detail.collided));
            render(&v)
        }
        Format::Table => {
            let mut out = qchar_table(&detail.chi);
            out.push_str(&format!(
                "\nratio degree: {}\ncollided: {}",
                detail.ratio_degree, detail.collided
            ));
            Output::Text(out)
        }
    })
}

pub fn qchar_reflect(config: &Config, path: &Path) -> Result<Output, AppError> {
    let q = load_qchar(path)?;
    let reflected = reflect_qchar(&q)?;
    Ok(match config.output_format {
        Format::Json => render(&sj::qchar_to_json(&reflected)),
        Format::Table => Output::Text(qchar_table(&reflected)),
    })
}

fn tableau_grid(s: &ParitySeq, t: &STableau) -> String {
    let letters = s.alphabet_order();
    let d = t.diagram();
    let cells = d.cells();
    let mut lines = Vec::new();
    let mut idx = 0;
    for row in 1..=d.outer().length() {
        let mut line = String::new();
        for col in 1..=d.outer().part(row) {
            if col <= d.inner().part(row) {
                line.push_str("  .");
            } else {
                debug_assert_eq!(cells[idx].row, row);
                let entry = t.entries()[idx];
                line.push_str(&format!("{:>3}", letters[entry - 1].to_string()));
                idx += 1;
            }
        }
        lines.push(line);
    }
    lines.join("\n")
}

#[allow(clippy::too_many_arguments)]
pub fn skew_char(
    config: &Config,
    outer: &str,
    inner: &str,
    parity: &str,
    count: bool,
    list_tableaux: bool,
    cap: Option<usize>,
) -> Result<Output, AppError> {
    let outer = parse_partition(outer)?;
    let inner = parse_partition(inner)?;
    let s = parse_parity(parity)?;
    let diagram = SkewDiagram::new(outer, inner)?;
    let cap = cap.unwrap_or(config.tableau_cap);
    let tableaux = enumerate_ssyt_capped(&s, &diagram, cap)?;

    if count {
        return Ok(match config.output_format {
            Format::Json => render(&json!({
                "outer": diagram.outer().to_string(),
                "inner": diagram.inner().to_string(),
                "parity": s.to_string(),
                "count": tableaux.len(),
            })),
            Format::Table => Output::Text(format!("count: {}", tableaux.len())),
        });
    }

    if list_tableaux {
        return Ok(match config.output_format {
            Format::Json => {
                let cells: Vec<Value> = diagram
                    .cells()
                    .iter()
                    .map(|c| json!({"row": c.row, "col": c.col, "content": c.content()}))
                    .collect();
                let fillings: Vec<Value> = tableaux
                    .iter()
                    .map(|t| Value::Array(t.entries().iter().map(|&e| json!(e)).collect()))
                    .collect();
                render(&json!({
                    "outer": diagram.outer().to_string(),
                    "inner": diagram.inner().to_string(),
                    "parity": s.to_string(),
                    "cells": cells,
                    "tableaux": fillings,
                }))
            }
            Format::Table => {
                let grids: Vec<String> = tableaux.iter().map(|t| tableau_grid(&s, t)).collect();
                Output::Text(format!(
                    "{} tableaux of shape {}\n\n{}",
                    tableaux.len(),
                    diagram,
                    grids.join("\n\n")
                ))
            }
        });
    }

    let mut chi = QChar::zero(s.clone());
    for t in &tableaux {
        chi.add_term(t.lweight(&s), 1).unwrap();
    }
    Ok(match config.output_format {
        Format::Json => render(&sj::qchar_to_json(&chi)),
        Format::Table => Output::Text(qchar_table(&chi)),
    })
}

/// Per-node report: divisibility at odd nodes, residuals at the rational
/// roots of y_i, and whether the two views agree.
fn node_report(sys: &BAESystem, node: usize) -> Value {
    let odd = sys.parity().is_odd_node(node);
    let divisible = if odd {
        Some(sys.divisibility(node).expect("odd node"))
    } else {
        None
    };

    let y = sys.y_at(node);
    let (roots, core) = y.split_rational_roots().expect("y_i is monic, nonzero");
    let mut residuals = Vec::new();
    let mut all_zero = Some(true);
    if core.degree() > 0 {
        all_zero = None;
    }
    for root in roots.roots() {
        match sys.residual(node, root) {
            Ok(v) => {
                if !v.is_zero() {
                    all_zero = all_zero.map(|_| false);
                }
                residuals.push(json!({"root": root.to_string(), "residual": v.to_string()}));
            }
            Err(e) => {
                all_zero = None;
                residuals.push(json!({"root": root.to_string(), "pole": e.to_string()}));
            }
        }
    }
    let agree = match (divisible, all_zero) {
        (Some(d), Some(z)) => Some(d == z),
        _ => None,
    };
    json!({
        "node": node,
        "odd": odd,
        "divisible": divisible,
        "y_splits": core.degree() == 0,
        "residuals": residuals,
        "residuals_zero": all_zero,
        "agree": agree,
    })
}

pub fn bae_check(config: &Config, path: &Path, node: Option<usize>) -> Result<Output, AppError> {
    let sys = load_system(path)?;
    let nodes: Vec<usize> = match node {
        Some(n) => {
            if n == 0 || n >= sys.parity().len() {
                return Err(AppError::new(
                    "NodeOutOfRange",
                    format!("node must be between 1 and {}", sys.parity().len() - 1),
                ));
            }
            vec![n]
        }
        None => (1..sys.parity().len()).collect(),
    };
    let reports: Vec<Value> = nodes.iter().map(|&n| node_report(&sys, n)).collect();
    let v = json!({
        "parity": sys.parity().to_string(),
        "nodes": reports,
    });
    Ok(match config.output_format {
        Format::Json => render(&v),
        Format::Table => {
            let mut out = format!(
                "parity: {}\nnode  odd    divisible  residuals_zero  agree",
                sys.parity()
            );
            for r in v["nodes"].as_array().unwrap() {
                out.push_str(&format!(
                    "\n{:<5} {:<6} {:<10} {:<15} {}",
                    r["node"], r["odd"], r["divisible"], r["residuals_zero"], r["agree"]
                ));
            }
            Output::Text(out)
        }
    })
}

pub fn bae_reproduce(config: &Config, path: &Path, node: usize) -> Result<Output, AppError> {
    let sys = load_system(path)?;
    if node == 0 || node >= sys.parity().len() {
        return Err(AppError::new(
            "NodeOutOfRange",
            format!("node must be between 1 and {}", sys.parity().len() - 1),
        ));
    }
    let reproduced = sys.reproduce(node)?;
    Ok(match config.output_format {
        Format::Json => render(&sj::system_to_json(&reproduced)),
        Format::Table => {
            let mut out = lweight_table(reproduced.zeta());
            for (i, y) in reproduced.y().iter().enumerate() {
                out.push_str(&format!("\ny_{} = {}", i + 1, y));
            }
            Output::Text(out)
        }
    })
}

pub fn diffop_compare(
    config: &Config,
    before: &Path,
    after: &Path,
    order: Option<usize>,
) -> Result<Output, AppError> {
    let before = load_system(before)?;
    let after = load_system(after)?;
    let order = order.unwrap_or(config.truncation_order);
    let lhs = build_operator(before.zeta(), before.y(), order);
    let rhs = build_operator(after.zeta(), after.y(), order);
    let mismatch = lhs.first_mismatch(&rhs);
    let v = json!({
        "equal": mismatch.is_none(),
        "order": order,
        "first_mismatch": mismatch,
    });
    Ok(match config.output_format {
        Format::Json => render(&v),
        Format::Table => Output::Text(format!(
            "equal: {} (order {}){}",
            mismatch.is_none(),
            order,
            mismatch
                .map(|r| format!(", first mismatch at D^{}", r))
                .unwrap_or_default()
        )),
    })
}

pub fn finite_dim(config: &Config, path: &Path) -> Result<Output, AppError> {
    let z = load_lweight(path)?;
    let finite = z.finite_dim_check()?;
    Ok(match config.output_format {
        Format::Json => render(&json!({
            "parity": z.parity().to_string(),
            "finite_dimensional": finite,
        })),
        Format::Table => Output::Text(format!("finite_dimensional: {}", finite)),
    })
}
