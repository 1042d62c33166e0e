use std::fs;
use std::io::Write;
use std::str::FromStr;

use anyhow::{Context, Result};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{Map, Number, Value};
use springer_core::kappa::{decode, encode, KappaCode};
use springer_core::moves::MoveGraph;
use springer_core::poincare::{
    betti_numbers, chi_enumeration, chi_recursive, chi_sum, chi_t, BettiPolynomial, BettiTable,
    Method,
};
use springer_core::rho::{relabel_component, RhoSequence};
use springer_core::tableau::{
    enumerate_row_standard, enumerate_standard, Partition, RowStandardTableau, StandardTableau,
};

use crate::{Command, Format, RunConfig};

pub fn run(command: &Command, config: &RunConfig) -> Result<()> {
    match command {
        Command::Betti => cmd_betti(config),
        Command::Poincare { tableau } => cmd_poincare(config, tableau.as_deref()),
        Command::Tableaux {
            standard_only,
            max_inversions,
        } => cmd_tableaux(config, *standard_only, *max_inversions),
        Command::Graph => cmd_graph(config),
        Command::Encode { tableau } => cmd_encode(config, tableau),
        Command::Decode { tableau, kappa } => cmd_decode(config, tableau, kappa),
        Command::Table { n_max } => cmd_table(config, *n_max),
        Command::Relabel { rho } => cmd_relabel(config, rho),
    }
}

/// Exact JSON number; relies on serde_json's arbitrary precision.
fn number(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal digits"))
}

fn numbers(ns: &[BigUint]) -> Value {
    Value::Array(ns.iter().map(number).collect())
}

fn spaced(ns: &[BigUint]) -> String {
    ns.iter()
        .map(|b| b.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn betti_json(table: &BettiTable) -> Value {
    let mut obj = Map::new();
    obj.insert("shape".into(), serde_json::json!(table.shape.parts()));
    obj.insert("n".into(), serde_json::json!(table.shape.size()));
    obj.insert("dim".into(), serde_json::json!(table.dim));
    obj.insert(
        "poincare_by_codim".into(),
        numbers(table.poincare_by_codim.coeffs()),
    );
    obj.insert("betti".into(), numbers(&table.betti));
    obj.insert("num_standard".into(), number(&table.num_standard));
    obj.insert(
        "num_row_standard".into(),
        Value::String(table.num_row_standard.to_string()),
    );
    obj.insert("method".into(), Value::String(table.method.to_string()));
    obj.insert(
        "agreement".into(),
        table.agreement.map_or(Value::Null, Value::Bool),
    );
    Value::Object(obj)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn agreement_text(agreement: Option<bool>) -> &'static str {
    match agreement {
        Some(true) => "all methods agree",
        Some(false) => "METHODS DISAGREE",
        None => "single method, not cross-checked",
    }
}

fn cmd_betti(config: &RunConfig) -> Result<()> {
    let table = betti_numbers(config.shape(), config.method, config.cap)?;
    let mut out = config.writer()?;
    match config.format {
        Format::Json => write_json(&mut out, &betti_json(&table))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["m", "betti", "codim", "cells"])?;
            for (m, b) in table.betti.iter().enumerate() {
                let codim = table.dim - m;
                let cells = table.poincare_by_codim.coeff(codim);
                w.write_record([
                    m.to_string(),
                    b.to_string(),
                    codim.to_string(),
                    cells.to_string(),
                ])?;
            }
            w.flush()?;
        }
        _ => {
            writeln!(out, "shape: ({})", table.shape)?;
            writeln!(out, "n: {}", table.shape.size())?;
            writeln!(out, "dim: {}", table.dim)?;
            writeln!(
                out,
                "poincare (by codimension): {}",
                table.poincare_by_codim
            )?;
            writeln!(out, "betti b_0..b_{}: {}", table.dim, spaced(&table.betti))?;
            writeln!(out, "standard tableaux: {}", table.num_standard)?;
            writeln!(out, "row-standard tableaux: {}", table.num_row_standard)?;
            writeln!(out, "method: {}", table.method)?;
            writeln!(out, "agreement: {}", agreement_text(table.agreement))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn shape_polynomial(shape: &Partition, method: Method, cap: u64) -> Result<BettiPolynomial> {
    Ok(match method {
        Method::Enumeration => chi_enumeration(shape, cap)?,
        Method::ProductSum => chi_sum(shape, cap)?,
        Method::Recursion => chi_recursive(shape),
        Method::All => betti_numbers(shape, method, cap)?.poincare_by_codim,
    })
}

fn cmd_poincare(config: &RunConfig, tableau: Option<&str>) -> Result<()> {
    let (subject, chi) = match tableau {
        Some(t) => {
            let t: StandardTableau = t.parse()?;
            if let Some(shape) = &config.shape {
                if shape != t.shape() {
                    return Err(springer_core::Error::ShapeMismatch {
                        left: shape.to_string(),
                        right: t.shape().to_string(),
                    }
                    .into());
                }
            }
            (("tableau", t.to_string()), chi_t(&t))
        }
        None => {
            let shape = config.shape.as_ref().ok_or_else(|| {
                crate::UsageError("poincare requires --shape or --tableau".into())
            })?;
            (
                ("shape", shape.to_string()),
                shape_polynomial(shape, config.method, config.cap)?,
            )
        }
    };
    let mut out = config.writer()?;
    match config.format {
        Format::Json => {
            let mut obj = Map::new();
            obj.insert(subject.0.into(), Value::String(subject.1));
            obj.insert("poincare_by_codim".into(), numbers(chi.coeffs()));
            obj.insert("text".into(), Value::String(chi.to_string()));
            write_json(&mut out, &Value::Object(obj))?;
        }
        _ => writeln!(out, "{chi}")?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_tableaux(
    config: &RunConfig,
    standard_only: bool,
    max_inversions: Option<usize>,
) -> Result<()> {
    let shape = config.shape();
    let all: Box<dyn Iterator<Item = RowStandardTableau>> = if standard_only {
        Box::new(enumerate_standard(shape, config.cap)?.map(StandardTableau::into_row_standard))
    } else {
        Box::new(enumerate_row_standard(shape, config.cap)?)
    };
    let selected = all
        .map(|t| {
            let k = t.n_inv();
            (t, k)
        })
        .filter(|&(_, k)| max_inversions.is_none_or(|m| k <= m));
    let mut out = config.writer()?;
    match config.format {
        Format::Json => {
            let list: Vec<Value> = selected
                .map(|(t, k)| serde_json::json!({ "tableau": t.to_string(), "n_inv": k }))
                .collect();
            write_json(&mut out, &list)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["tableau", "n_inv"])?;
            for (t, k) in selected {
                w.write_record([t.to_string(), k.to_string()])?;
            }
            w.flush()?;
        }
        _ => {
            for (t, k) in selected {
                writeln!(out, "{t} n_inv={k}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_graph(config: &RunConfig) -> Result<()> {
    let graph = MoveGraph::build(config.shape(), config.cap)?;
    let mut out = config.writer()?;
    match config.format {
        Format::Json => {
            let vertices: Vec<Value> = graph
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, t)| {
                    serde_json::json!({
                        "id": id,
                        "tableau": t.to_string(),
                        "n_inv": t.n_inv(),
                        "component": graph.component_of(id),
                    })
                })
                .collect();
            let edges: Vec<Value> = graph
                .edges()
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "a": e.a,
                        "b": e.b,
                        "labels_from_a": e.labels_from_a,
                        "labels_from_b": e.labels_from_b,
                    })
                })
                .collect();
            let value = serde_json::json!({
                "shape": graph.shape().parts(),
                "vertices": vertices,
                "edges": edges,
                "component_sizes": graph.component_sizes(),
            });
            write_json(&mut out, &value)?;
        }
        Format::Text => {
            writeln!(out, "shape: ({})", graph.shape())?;
            writeln!(out, "vertices: {}", graph.vertices().len())?;
            writeln!(out, "edges: {}", graph.edges().len())?;
            writeln!(out, "components: {}", graph.num_components())?;
            for (c, size) in graph.component_sizes().iter().enumerate() {
                let root = (0..graph.vertices().len())
                    .find(|&v| graph.component_of(v) == c && graph.vertices()[v].n_inv() == 0)
                    .map(|v| graph.vertices()[v].to_string())
                    .unwrap_or_default();
                writeln!(out, "  component {c}: {size} vertices, standard {root}")?;
            }
        }
        _ => out.write_all(graph.to_dot().as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_encode(config: &RunConfig, tableau: &str) -> Result<()> {
    let tau: RowStandardTableau = tableau.parse()?;
    let (t, code) = encode(&tau);
    let mut out = config.writer()?;
    match config.format {
        Format::Json => write_json(
            &mut out,
            &serde_json::json!({
                "tableau": tau.to_string(),
                "standard": t.to_string(),
                "kappa": code.0,
                "n_inv": tau.n_inv(),
            }),
        )?,
        _ => {
            writeln!(out, "T = {t}")?;
            writeln!(out, "kappa = {code}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_decode(config: &RunConfig, tableau: &str, kappa: &str) -> Result<()> {
    let t: StandardTableau = tableau.parse()?;
    let code: KappaCode = kappa.parse()?;
    let tau = decode(&t, &code)?;
    let mut out = config.writer()?;
    match config.format {
        Format::Json => write_json(
            &mut out,
            &serde_json::json!({
                "standard": t.to_string(),
                "kappa": code.0,
                "tableau": tau.to_string(),
                "n_inv": tau.n_inv(),
            }),
        )?,
        _ => writeln!(out, "{tau} n_inv={}", tau.n_inv())?,
    }
    out.flush()?;
    Ok(())
}

const TABLE_FILE: &str = "betti_table.csv";
const TABLE_JSON_FILE: &str = "betti_table.json";

fn cmd_table(config: &RunConfig, n_max: usize) -> Result<()> {
    let mut tables = Vec::new();
    for n in 0..=n_max {
        for shape in Partition::all_of(n) {
            tables.push(betti_numbers(&shape, config.method, config.cap)?);
        }
    }
    let mut out: Box<dyn Write> = match &config.out {
        Some(dir) => {
            fs::create_dir_all(dir)
                .with_context(|| format!("creating output directory {}", dir.display()))?;
            let name = if config.format == Format::Json {
                TABLE_JSON_FILE
            } else {
                TABLE_FILE
            };
            let path = dir.join(name);
            let file =
                fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            Box::new(std::io::BufWriter::new(file))
        }
        None => Box::new(std::io::BufWriter::new(std::io::stdout().lock())),
    };
    if config.format == Format::Json {
        let list: Vec<Value> = tables.iter().map(betti_json).collect();
        write_json(&mut out, &list)?;
    } else {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record([
            "shape",
            "n",
            "dim",
            "betti",
            "poincare_by_codim",
            "num_standard",
            "num_row_standard",
            "method",
            "agreement",
        ])?;
        for t in &tables {
            w.write_record([
                t.shape.to_string(),
                t.shape.size().to_string(),
                t.dim.to_string(),
                spaced(&t.betti),
                spaced(t.poincare_by_codim.coeffs()),
                t.num_standard.to_string(),
                t.num_row_standard.to_string(),
                t.method.to_string(),
                t.agreement.map_or(String::new(), |a| a.to_string()),
            ])?;
        }
        w.flush()?;
    }
    out.flush()?;
    Ok(())
}

fn resolve_rho(spec: &str, n: usize) -> Result<RhoSequence> {
    let rho = match spec.trim() {
        "spaltenstein" => RhoSequence::spaltenstein(n),
        "dual" => RhoSequence::dual_chain(n),
        other => other.parse()?,
    };
    if rho.n() != n {
        return Err(springer_core::Error::ShapeMismatch {
            left: format!("rho of length {}", rho.n()),
            right: format!("shape of size {n}"),
        }
        .into());
    }
    Ok(rho)
}

fn cmd_relabel(config: &RunConfig, rho: &str) -> Result<()> {
    let shape = config.shape();
    let rho = resolve_rho(rho, shape.size())?;
    let pairs = enumerate_standard(shape, config.cap)?
        .map(|t| relabel_component(&t, &rho).map(|s| (t, s)))
        .collect::<springer_core::Result<Vec<_>>>()?;
    let mut out = config.writer()?;
    match config.format {
        Format::Json => {
            let map: Map<String, Value> = pairs
                .iter()
                .map(|(t, s)| (t.to_string(), Value::String(s.to_string())))
                .collect();
            write_json(&mut out, &map)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["T", "S"])?;
            for (t, s) in &pairs {
                w.write_record([t.to_string(), s.to_string()])?;
            }
            w.flush()?;
        }
        _ => {
            writeln!(out, "rho = {rho}")?;
            for (t, s) in &pairs {
                writeln!(out, "{t} -> {s}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
