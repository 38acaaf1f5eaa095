//! Records emitted by the binary and their three renderings.

use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use flagcav_core::closed_forms::HookData;
use flagcav_core::{AmplenessReport, CycleParam, PeriodReport, RealFormCase};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Engine,
    Closed,
    Both,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Engine => "engine",
            Method::Closed => "closed",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

/// One ampleness result. `extremal_count` and `witness` come from the
/// engine and are absent for `--method closed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub case: String,
    pub params: BTreeMap<String, usize>,
    pub cycle: Vec<usize>,
    pub primed: bool,
    pub ind: usize,
    pub dim_cycle: usize,
    pub codim: usize,
    pub ampleness: usize,
    pub concavity_degree: usize,
    pub method: String,
    pub extremal_count: Option<usize>,
    pub witness: Option<String>,
}

impl OutputRecord {
    pub fn header() -> Vec<&'static str> {
        vec![
            "case",
            "params",
            "cycle",
            "primed",
            "ind",
            "dim_cycle",
            "codim",
            "ampleness",
            "concavity_degree",
            "method",
            "extremal_count",
            "witness",
        ]
    }

    pub fn from_engine(r: &AmplenessReport, method: Method) -> Self {
        let mut rec = Self::from_parts(&r.case, &r.cycle, r.ind, r.dim_cycle, r.codim, method);
        rec.extremal_count = Some(r.extremal_count);
        rec.witness = Some(r.witness.to_string());
        rec
    }

    pub fn from_parts(
        case: &RealFormCase,
        cycle: &CycleParam,
        ind: usize,
        dim_cycle: usize,
        codim: usize,
        method: Method,
    ) -> Self {
        let ampleness = dim_cycle - ind;
        OutputRecord {
            case: case.token().to_string(),
            params: case
                .params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            cycle: cycle.subset.clone(),
            primed: cycle.primed,
            ind,
            dim_cycle,
            codim,
            ampleness,
            concavity_degree: codim + ampleness + 1,
            method: method.tag().to_string(),
            extremal_count: None,
            witness: None,
        }
    }

    pub fn cells(&self) -> Vec<String> {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        vec![
            self.case.clone(),
            params.join(","),
            join(&self.cycle),
            self.primed.to_string(),
            self.ind.to_string(),
            self.dim_cycle.to_string(),
            self.codim.to_string(),
            self.ampleness.to_string(),
            self.concavity_degree.to_string(),
            self.method.clone(),
            self.extremal_count
                .map(|n| n.to_string())
                .unwrap_or_default(),
            self.witness.clone().unwrap_or_default(),
        ]
    }
}

/// A period-domain result: the ampleness record of the reduced case plus
/// the Hodge data it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodRecord {
    #[serde(flatten)]
    pub record: OutputRecord,
    pub weight: usize,
    pub hodge: Vec<usize>,
    pub group: String,
    pub marked: Vec<usize>,
    pub cycle_dim: Option<usize>,
}

impl PeriodRecord {
    pub fn new(r: &PeriodReport) -> Self {
        PeriodRecord {
            record: OutputRecord::from_engine(&r.engine, Method::Both),
            weight: r.model.hodge.weight(),
            hodge: r.model.hodge.upper(),
            group: r.model.group.to_string(),
            marked: r.model.marked.clone(),
            cycle_dim: r.cycle_dim,
        }
    }

    pub fn header() -> Vec<&'static str> {
        let mut h = OutputRecord::header();
        h.extend(["weight", "hodge", "group", "marked", "cycle_dim"]);
        h
    }

    pub fn cells(&self) -> Vec<String> {
        let mut c = self.record.cells();
        c.extend([
            self.weight.to_string(),
            join(&self.hodge),
            self.group.clone(),
            join(&self.marked),
            self.cycle_dim.map(|d| d.to_string()).unwrap_or_default(),
        ]);
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookRecord {
    pub p: usize,
    pub q: usize,
    pub j: Vec<usize>,
    pub h_plus: usize,
    pub h_minus: usize,
    pub i_plus: i64,
    pub i_minus: i64,
    pub diagram: String,
}

impl HookRecord {
    pub fn new(h: &HookData, diagram: String) -> Self {
        HookRecord {
            p: h.p,
            q: h.q,
            j: h.subset.clone(),
            h_plus: h.min_colored_hook,
            h_minus: h.max_uncolored_hook,
            i_plus: h.plus_value,
            i_minus: h.minus_value,
            diagram,
        }
    }

    pub fn header() -> Vec<&'static str> {
        vec!["p", "q", "j", "h_plus", "h_minus", "i_plus", "i_minus"]
    }

    pub fn cells(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.q.to_string(),
            join(&self.j),
            self.h_plus.to_string(),
            self.h_minus.to_string(),
            self.i_plus.to_string(),
            self.i_minus.to_string(),
        ]
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Render rows in the requested format. `json` is the serialized payload;
/// a single record is a JSON object, a listing a JSON array.
pub fn emit(
    out: &mut impl Write,
    format: Format,
    header: &[&str],
    rows: &[Vec<String>],
    json: &serde_json::Value,
) -> Result<(), CliError> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json)?;
            s.push('\n');
            s
        }
        Format::Table => table(header, rows),
        Format::Csv => csv_text(header, rows)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}
