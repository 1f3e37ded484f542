use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use super::CliError;
use crate::arith::Count;
use crate::formulas;
use crate::typesys::MapType;

pub const MAX_TABLE_VALENCE: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Half-edges allowed; every valence `1..=d_max`.
    Premaps,
    /// No half-edges; even valences `2..=d_max` only.
    Maps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableSpec {
    pub family: Family,
    pub d_max: usize,
    pub format: Format,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Premaps => "premaps",
            Family::Maps => "maps",
        }
    }

    pub fn types(self) -> [MapType; 4] {
        match self {
            Family::Premaps => MapType::premap_types(),
            Family::Maps => MapType::map_types(),
        }
    }

    pub fn valences(self, d_max: usize) -> Vec<usize> {
        match self {
            Family::Premaps => (1..=d_max).collect(),
            Family::Maps => (2..=d_max).step_by(2).collect(),
        }
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "premaps" => Ok(Family::Premaps),
            "maps" => Ok(Family::Maps),
            other => Err(format!("unknown family {other:?} (premaps, maps)")),
        }
    }
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!("unknown format {other:?} (tsv, csv, json, latex)")),
        }
    }
}

fn latex_symbol(ty: MapType) -> String {
    let bar = |on: bool, letter: char| {
        if on {
            letter.to_string()
        } else {
            format!("\\bar {letter}")
        }
    };
    format!(
        "$\\pi_{{{} {} {}}}(d)$",
        bar(ty.signed, 'S'),
        bar(ty.directed, 'D'),
        bar(ty.graph_only, 'G')
    )
}

/// Rows of `(d, [four cells])` in table order.
pub fn table_rows(family: Family, d_max: usize) -> Result<Vec<(usize, Vec<Count>)>, CliError> {
    let types = family.types();
    family
        .valences(d_max)
        .into_par_iter()
        .map(|d| {
            let cells = types
                .iter()
                .map(|&ty| formulas::pi(ty, d))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((d, cells))
        })
        .collect()
}

pub fn render_table(spec: &TableSpec) -> Result<String, CliError> {
    if spec.d_max == 0 || spec.d_max > MAX_TABLE_VALENCE {
        return Err(CliError::Usage(format!(
            "--d-max must be in 1..={MAX_TABLE_VALENCE}, got {}",
            spec.d_max
        )));
    }
    let rows = table_rows(spec.family, spec.d_max)?;
    let codes: Vec<String> = spec.family.types().iter().map(|t| t.code()).collect();
    let mut out = String::new();
    match spec.format {
        Format::Tsv | Format::Csv => {
            let sep = if spec.format == Format::Tsv {
                "\t"
            } else {
                ","
            };
            writeln!(out, "d{sep}{}", codes.join(sep)).unwrap();
            for (d, cells) in &rows {
                let cells: Vec<String> = cells.iter().map(Count::to_string).collect();
                writeln!(out, "{d}{sep}{}", cells.join(sep)).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(d, cells)| {
                    json!({
                        "d": d,
                        "values": cells.iter().map(Count::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "family": spec.family.name(),
                "columns": codes,
                "rows": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).unwrap();
        }
        Format::Latex => {
            let headers: Vec<String> = spec.family.types().into_iter().map(latex_symbol).collect();
            writeln!(out, "\\begin{{tabular}}{{r|rrrr}}").unwrap();
            writeln!(out, "$d$ & {} \\\\", headers.join(" & ")).unwrap();
            writeln!(out, "\\hline").unwrap();
            for (d, cells) in &rows {
                let cells: Vec<String> = cells.iter().map(Count::to_string).collect();
                writeln!(out, "{d} & {} \\\\", cells.join(" & ")).unwrap();
            }
            writeln!(out, "\\end{{tabular}}").unwrap();
        }
    }
    Ok(out)
}
