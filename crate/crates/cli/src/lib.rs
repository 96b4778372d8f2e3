//! File formats, report rendering and the command runner behind the
//! `cmtate` binary.

pub mod error;
pub mod input;
pub mod report;

use std::path::PathBuf;

use cmtate::{
    analyze, census_bounded, cm_type_pair_gset, enumerate_frobenius_functions_bounded, hazama_datum,
    orbit_factorization, reduce_cm_type, CmGaloisDatum, FrobeniusFunction, DEFAULT_ENUMERATION_CAP,
};
use serde::Serialize;

pub use crate::error::CliError;
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Analyze,
    Census,
    Hazama,
    Reduce,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Enumerate => "enumerate",
            Command::Analyze => "analyze",
            Command::Census => "census",
            Command::Hazama => "hazama",
            Command::Reduce => "reduce",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumSource {
    Builtin(String),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub source: DatumSource,
    pub format: OutputFormat,
    pub enumeration_cap: u128,
    /// Values on the canonical `ι`-orbit representatives (`--f`).
    pub top_values: Option<Vec<u32>>,
    pub all: bool,
}

impl RunConfig {
    pub fn new(command: Command, source: DatumSource) -> Self {
        RunConfig {
            command,
            source,
            format: OutputFormat::Json,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            top_values: None,
            all: false,
        }
    }
}

/// Parses `"0,1,2"`.
pub fn parse_top_values(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|v| v.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("bad --f value {v:?}"))))
        .collect()
}

pub fn load(source: &DatumSource) -> Result<CmGaloisDatum, CliError> {
    match source {
        DatumSource::Builtin(name) => input::builtin_datum(name),
        DatumSource::File(path) => input::read_datum(path),
    }
}

/// Runs one command and returns the full report text.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    if config.enumeration_cap < 1 {
        return Err(CliError::Usage("--cap must be at least 1".into()));
    }
    let datum = load(&config.source)?;
    let hash = input::datum_hash(&datum);
    match config.command {
        Command::Census => census_report(config, &datum, hash),
        Command::Enumerate => enumerate_report(config, &datum, hash),
        Command::Analyze => analyze_report(config, &datum, hash),
        Command::Reduce => reduce_report(config, &datum, hash),
        Command::Hazama => hazama_report(config, &datum, hash),
    }
}

fn json<T: Serialize>(command: Command, datum_hash: String, body: T) -> Result<String, CliError> {
    let envelope = Envelope { tool: TOOL, version: VERSION, command: command.name(), datum_hash, body };
    let mut text = serde_json::to_string_pretty(&envelope).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for mut row in rows {
        row.push(VERSION.to_string());
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

fn census_report(config: &RunConfig, datum: &CmGaloisDatum, hash: String) -> Result<String, CliError> {
    let r = census_bounded(datum, config.enumeration_cap)?;
    let body = CensusBody {
        group_order: r.group_order,
        d: r.local_degree,
        t: r.half_count,
        enumerated: r.enumerated_count,
        dplus1_pow_t: big_number(Some(r.formula_dplus1_pow_t)),
        t_pow_d: big_number(r.formula_t_pow_d),
        isolated_pair_count: r.isolated_pair_count,
        isolated_pair_formula: closed_form(r.formula_isolated_pair),
    };
    match config.format {
        OutputFormat::Json => json(Command::Census, hash, body),
        OutputFormat::Csv => csv_text(
            &[
                "datum_hash",
                "group_order",
                "d",
                "t",
                "enumerated",
                "dplus1_pow_t",
                "t_pow_d",
                "isolated_pair_count",
                "isolated_pair_formula",
                "version",
            ],
            vec![vec![
                hash,
                body.group_order.to_string(),
                body.d.to_string(),
                body.t.to_string(),
                body.enumerated.to_string(),
                cell(&body.dplus1_pow_t),
                cell(&body.t_pow_d),
                body.isolated_pair_count.to_string(),
                cell(&body.isolated_pair_formula),
            ]],
        ),
    }
}

/// The `--f` function, or every enumerated function under `--all`.
fn selected_functions(config: &RunConfig, datum: &CmGaloisDatum) -> Result<Vec<FrobeniusFunction>, CliError> {
    match (&config.top_values, config.all) {
        (Some(_), true) => Err(CliError::Usage("--f and --all are mutually exclusive".into())),
        (Some(top), false) => Ok(vec![FrobeniusFunction::from_top_values(datum, top)?]),
        (None, true) => Ok(enumerate_frobenius_functions_bounded(datum, config.enumeration_cap)?),
        (None, false) => Err(CliError::Usage("analyze needs --f V1,V2,... or --all".into())),
    }
}

fn analyze_report(config: &RunConfig, datum: &CmGaloisDatum, hash: String) -> Result<String, CliError> {
    let mut reports = Vec::new();
    for f in selected_functions(config, datum)? {
        let r = analyze(datum, &f)?;
        reports.push(TateReportJson::new(f.top_values(datum), f.values().to_vec(), &r));
    }
    match config.format {
        OutputFormat::Json => {
            json(Command::Analyze, hash, AnalyzeBody { d: datum.local_degree(), t: datum.half_count(), reports })
        }
        OutputFormat::Csv => csv_text(
            &[
                "datum_hash",
                "top_values",
                "H_index",
                "s",
                "dim_L",
                "dim_P",
                "exotic",
                "kowalski_independent",
                "version",
            ],
            reports
                .iter()
                .map(|r| {
                    vec![
                        hash.clone(),
                        join(&r.f),
                        r.h_index.to_string(),
                        r.s.to_string(),
                        r.dim_l.to_string(),
                        r.dim_p.to_string(),
                        r.exotic.to_string(),
                        r.kowalski_independent.to_string(),
                    ]
                })
                .collect(),
        ),
    }
}

fn enumerate_report(config: &RunConfig, datum: &CmGaloisDatum, hash: String) -> Result<String, CliError> {
    let functions: Vec<FunctionJson> = enumerate_frobenius_functions_bounded(datum, config.enumeration_cap)?
        .iter()
        .map(|f| FunctionJson { top_values: f.top_values(datum), values: f.values().to_vec() })
        .collect();
    match config.format {
        OutputFormat::Json => json(
            Command::Enumerate,
            hash,
            EnumerateBody { d: datum.local_degree(), t: datum.half_count(), count: functions.len(), functions },
        ),
        OutputFormat::Csv => csv_text(
            &["datum_hash", "index", "top_values", "values", "version"],
            functions
                .iter()
                .enumerate()
                .map(|(i, f)| vec![hash.clone(), i.to_string(), join(&f.top_values), join(&f.values)])
                .collect(),
        ),
    }
}

fn reduce_report(config: &RunConfig, datum: &CmGaloisDatum, hash: String) -> Result<String, CliError> {
    let (types, pair) = cm_type_pair_gset(datum.group(), datum.iota())?;
    let mut reductions = Vec::with_capacity(types.len());
    for (k, phi) in types.iter().enumerate() {
        let f = reduce_cm_type(datum, phi)?;
        reductions.push(ReductionJson {
            cm_type: phi.members().to_vec(),
            plus: pair.is_plus(k),
            top_values: f.top_values(datum),
            values: f.values().to_vec(),
        });
    }
    match config.format {
        OutputFormat::Json => {
            json(Command::Reduce, hash, ReduceBody { d: datum.local_degree(), t: datum.half_count(), reductions })
        }
        OutputFormat::Csv => csv_text(
            &["datum_hash", "cm_type", "plus", "values", "version"],
            reductions
                .iter()
                .map(|r| vec![hash.clone(), join(&r.cm_type), r.plus.to_string(), join(&r.values)])
                .collect(),
        ),
    }
}

/// Identity first, then the smallest element of each remaining `ι`-coset.
pub fn default_ordering(datum: &CmGaloisDatum) -> Vec<usize> {
    let g = datum.group();
    let (e, iota) = (g.identity(), datum.iota());
    std::iter::once(e).chain(g.elements().filter(|&x| x != e && x != iota && x < g.mul(iota, x))).collect()
}

fn hazama_report(config: &RunConfig, datum: &CmGaloisDatum, hash: String) -> Result<String, CliError> {
    let ordering = default_ordering(datum);
    let h = hazama_datum(datum.group(), datum.iota(), &ordering)?;
    let orbits: Vec<OrbitJson> = orbit_factorization(h.pair())?
        .iter()
        .map(|o| OrbitJson {
            size: o.points.len(),
            plus_size: o.plus_points.len(),
            stabilizer_order: o.stabilizer.order(),
        })
        .collect();
    let c = h.representation().checks();
    let body = HazamaBody {
        m: h.m(),
        dimension: h.dimension(),
        ordering,
        orbits,
        rho_checks: RhoChecksJson {
            homomorphism: c.homomorphism,
            iota_minus_one: c.iota_minus_one,
            hyperplane_transitive: c.hyperplane_transitive,
            faithful: c.faithful,
        },
    };
    match config.format {
        OutputFormat::Json => json(Command::Hazama, hash, body),
        OutputFormat::Csv => csv_text(
            &["datum_hash", "m", "dimension", "orbit", "size", "plus_size", "stabilizer_order", "version"],
            body.orbits
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    vec![
                        hash.clone(),
                        body.m.to_string(),
                        body.dimension.to_string(),
                        i.to_string(),
                        o.size.to_string(),
                        o.plus_size.to_string(),
                        o.stabilizer_order.to_string(),
                    ]
                })
                .collect(),
        ),
    }
}
