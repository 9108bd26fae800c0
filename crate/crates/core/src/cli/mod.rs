//! Command-line front end.

pub mod parse;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::decomposition::{primary_decomposition, Support};
use crate::family::{self, FamilyParams};
use crate::ideal::{mu_quotient, MonomialIdeal};
use crate::polyhedra::{self, HPolyhedron};
use crate::quasipoly;
use crate::symbolic;
use crate::Error;

pub use parse::{parse_ideal, parse_vars, ParseError};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Algebraic: primary decomposition, powers and intersections.
    General,
    /// Closed forms for `(x^a, y) ∩ (y^b, z) ∩ (z^c, x)`.
    Family,
    /// Lattice points of scaled Newton and symbolic polyhedra.
    Polyhedral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Primary decomposition as JSON.
    Decompose,
    /// Ordinary power I^n.
    Power { n: u32 },
    /// Symbolic power I^(n).
    Sympower { n: u32 },
    /// Integral closure.
    Closure,
    /// Symbolic defect over the n-range.
    Sdef,
    /// Integral symbolic defect over the n-range.
    Isdef,
    /// Inequalities of the Newton polyhedron.
    NpHrep,
    /// Inequalities of the symbolic polyhedron.
    SpHrep,
    /// Fits a quasi-polynomial to CSV rows `n,value`.
    Fit,
    /// Closed-form sdef table for the three-parameter family given by --abc.
    Family,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "symdefect",
    version,
    about = "Symbolic powers and symbolic defects of monomial ideals"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Variable names in coordinate order.
    #[arg(long, global = true, default_value = "x,y,z", value_parser = parse_var_list)]
    pub vars: VarList,

    /// Ideal expression, e.g. "(x^2,y) & (y^3,z)".
    #[arg(long, global = true)]
    pub ideal: Option<String>,

    #[arg(long, global = true, default_value_t = 1)]
    pub from: u32,

    #[arg(long, global = true, default_value_t = 8)]
    pub to: u32,

    #[arg(long, global = true, value_enum, default_value_t = Engine::General)]
    pub engine: Engine,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Family parameters a b c.
    #[arg(long, global = true, num_args = 3, value_names = ["A", "B", "C"])]
    pub abc: Option<Vec<u32>>,

    /// CSV input for `fit`; standard input when absent.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 6)]
    pub max_period: u64,

    #[arg(long, global = true, default_value_t = 2)]
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarList(pub Vec<String>);

fn parse_var_list(s: &str) -> Result<VarList, String> {
    let v = parse_vars(s);
    if v.is_empty() {
        return Err("at least one variable is required".into());
    }
    Ok(VarList(v))
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    NoFit(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::NoFit(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::NoFit(m) => write!(f, "{m}"),
            CliError::Invariant(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoFit { .. } => CliError::NoFit(e.to_string()),
            Error::NotContained(_) | Error::NotMaximalSupport(_) => {
                CliError::Invariant(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

impl RunConfig {
    fn names(&self) -> &[String] {
        &self.vars.0
    }

    fn range(&self) -> CliResult<std::ops::RangeInclusive<u32>> {
        if self.from == 0 || self.from > self.to {
            return Err(CliError::Input(format!(
                "n-range must satisfy 1 <= from <= to, got {}..{}",
                self.from, self.to
            )));
        }
        Ok(self.from..=self.to)
    }

    fn parsed_ideal(&self) -> CliResult<MonomialIdeal> {
        let text = self
            .ideal
            .as_deref()
            .ok_or_else(|| CliError::Input("--ideal is required for this command".into()))?;
        Ok(parse_ideal(text, self.names())?)
    }

    fn params(&self) -> CliResult<Option<FamilyParams>> {
        match &self.abc {
            None => Ok(None),
            Some(v) => Ok(Some(FamilyParams::new(v[0], v[1], v[2])?)),
        }
    }
}

/// Family parameters for `ideal`: from --abc when given (and then checked
/// against the ideal), otherwise recognized from the generators.
fn family_params_for(config: &RunConfig, ideal: &MonomialIdeal) -> CliResult<FamilyParams> {
    if let Some(p) = config.params()? {
        if ideal.arity() != 3 || family::family_ideal(p) != *ideal {
            return Err(CliError::Input(format!(
                "the ideal is not the family ideal for ({}, {}, {})",
                p.a, p.b, p.c
            )));
        }
        return Ok(p);
    }
    recognize_family(ideal).ok_or_else(|| {
        CliError::Input(
            "engine 'family' needs an ideal of the form (x^a,y) & (y^b,z) & (z^c,x)".into(),
        )
    })
}

fn recognize_family(ideal: &MonomialIdeal) -> Option<FamilyParams> {
    if ideal.arity() != 3 {
        return None;
    }
    let m = ideal.max_exponents();
    // a, b, c are the largest exponents of x, y, z unless a parameter is 1
    let candidate = |k: usize| {
        if m[k] >= 2 {
            vec![m[k]]
        } else {
            vec![1, m[k].max(1)]
        }
    };
    for &a in &candidate(0) {
        for &b in &candidate(1) {
            for &c in &candidate(2) {
                let p = FamilyParams::new(a, b, c).ok()?;
                if family::family_ideal(p) == *ideal {
                    return Some(p);
                }
            }
        }
    }
    None
}

fn support_names(s: &Support, names: &[String]) -> Vec<String> {
    s.iter().map(|&i| names[i].clone()).collect()
}

fn ideal_output(ideal: &MonomialIdeal, config: &RunConfig) -> CliResult<String> {
    let names = config.names();
    match config.format {
        Format::Json => {
            let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.as_slice()).collect();
            to_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "vars": names,
                "ideal": ideal.format_with(names),
                "generators": gens,
            }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(names).map_err(io_err)?;
            for g in ideal.generators() {
                w.write_record(g.as_slice().iter().map(|e| e.to_string()))
                    .map_err(io_err)?;
            }
            finish_csv(w)
        }
    }
}

fn table_output(rows: &[(u32, usize)], config: &RunConfig) -> CliResult<String> {
    match config.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|&(n, v)| json!({"n": n, "value": v}))
                .collect();
            to_json(&json!({"schema_version": SCHEMA_VERSION, "rows": rows}))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "value"]).map_err(io_err)?;
            for (n, v) in rows {
                w.write_record([n.to_string(), v.to_string()])
                    .map_err(io_err)?;
            }
            finish_csv(w)
        }
    }
}

#[derive(Serialize)]
struct HrepJson<'a> {
    schema_version: &'static str,
    vars: &'a [String],
    arity: usize,
    rows: &'a [polyhedra::HRow],
    nonneg: bool,
}

fn hrep_output(h: &HPolyhedron, config: &RunConfig) -> CliResult<String> {
    match config.format {
        Format::Json => to_json(&HrepJson {
            schema_version: SCHEMA_VERSION,
            vars: config.names(),
            arity: h.arity(),
            rows: h.rows(),
            nonneg: true,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = config.names().to_vec();
            header.push("rhs".into());
            w.write_record(&header).map_err(io_err)?;
            for r in h.rows() {
                let mut rec: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
                rec.push(r.rhs.to_string());
                w.write_record(&rec).map_err(io_err)?;
            }
            finish_csv(w)
        }
    }
}

fn to_json(v: &impl Serialize) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Invariant(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn io_err(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> CliResult<String> {
    let bytes = w.into_inner().map_err(io_err)?;
    String::from_utf8(bytes).map_err(|e| CliError::Invariant(e.to_string()))
}

fn read_fit_input(text: &str) -> CliResult<BTreeMap<u64, i64>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = BTreeMap::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(io_err)?;
        if rec.len() != 2 {
            return Err(CliError::Input(format!(
                "row {}: expected two columns n,value",
                line + 1
            )));
        }
        if line == 0 && rec[0].eq_ignore_ascii_case("n") {
            continue;
        }
        let n: u64 = rec[0]
            .parse()
            .map_err(|_| CliError::Input(format!("row {}: bad n '{}'", line + 1, &rec[0])))?;
        let v: i64 = rec[1]
            .parse()
            .map_err(|_| CliError::Input(format!("row {}: bad value '{}'", line + 1, &rec[1])))?;
        if values.insert(n, v).is_some() {
            return Err(CliError::Input(format!(
                "row {}: duplicate n = {n}",
                line + 1
            )));
        }
    }
    Ok(values)
}

fn fit_output(fit: &quasipoly::Fit) -> CliResult<String> {
    let q = &fit.quasi;
    let strs =
        |v: &[crate::polyhedra::lp::Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    let branches: Vec<Vec<String>> = q.branches().iter().map(|b| strs(b)).collect();
    to_json(&json!({
        "schema_version": SCHEMA_VERSION,
        "period": q.period(),
        "onset": q.onset(),
        "degree": q.degree(),
        "branches": branches,
        "leading_coefficients": strs(&q.leading_coefficients()),
        "window_limited": fit.window_limited,
    }))
}

fn family_output(p: FamilyParams, rows: &[(u32, usize)], config: &RunConfig) -> CliResult<String> {
    let v = family::vertex_p(p);
    let period = family::quasi_period(p);
    let lead = family::leading_coefficient(p);
    match config.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|&(n, v)| json!({"n": n, "value": v}))
                .collect();
            to_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "abc": [p.a, p.b, p.c],
                "vertex": [v.alpha.to_string(), v.beta.to_string(), v.gamma.to_string()],
                "quasi_period": period,
                "leading_coefficient": lead.to_string(),
                "rows": rows,
            }))
        }
        Format::Csv => {
            let mut head = format!(
                "# abc={},{},{}\n# quasi_period={period}\n# leading_coefficient={lead}\n",
                p.a, p.b, p.c
            );
            head.push_str(&table_output(rows, config)?);
            Ok(head)
        }
    }
}

/// Runs the command and returns its output text.
pub fn execute(config: &RunConfig, stdin: &mut dyn Read) -> CliResult<String> {
    let names = config.names();
    match &config.command {
        Command::Decompose => {
            let ideal = config.parsed_ideal()?;
            let d = primary_decomposition(&ideal)?;
            let components: Vec<_> = d
                .components()
                .iter()
                .map(|c| json!({"support": support_names(&c.support, names), "ideal": c.ideal.format_with(names)}))
                .collect();
            let max: Vec<_> = d
                .max_supports()
                .iter()
                .map(|s| support_names(s, names))
                .collect();
            to_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "vars": names,
                "ideal": ideal.format_with(names),
                "components": components,
                "max_supports": max,
                "embedded_primes": d.has_embedded_primes(),
            }))
        }
        Command::Power { n } => ideal_output(&config.parsed_ideal()?.power(*n)?, config),
        Command::Sympower { n } => {
            let ideal = config.parsed_ideal()?;
            let sym = symbolic::symbolic_power(&ideal, *n)?;
            if !sym.contains_ideal(&ideal.power(*n)?)? {
                return Err(CliError::Invariant(format!(
                    "I^{n} is not contained in I^({n})"
                )));
            }
            ideal_output(&sym, config)
        }
        Command::Closure => ideal_output(
            &polyhedra::integral_closure(&config.parsed_ideal()?)?,
            config,
        ),
        Command::Sdef => {
            let ideal = config.parsed_ideal()?;
            let rows = match config.engine {
                Engine::General => config
                    .range()?
                    .map(|n| Ok((n, symbolic::sdef(&ideal, n)?)))
                    .collect::<CliResult<Vec<_>>>()?,
                Engine::Family => {
                    let p = family_params_for(config, &ideal)?;
                    config.range()?.map(|n| Ok((n, family::family_sdef(p, n)?))).collect::<CliResult<Vec<_>>>()?
                }
                Engine::Polyhedral => {
                    return Err(CliError::Input(
                        "engine 'polyhedral' computes isdef only; use --engine general or family for sdef".into(),
                    ))
                }
            };
            table_output(&rows, config)
        }
        Command::Isdef => {
            let ideal = config.parsed_ideal()?;
            let rows = match config.engine {
                Engine::General => config
                    .range()?
                    .map(|n| {
                        let sym =
                            polyhedra::integral_closure(&symbolic::symbolic_power(&ideal, n)?)?;
                        let pow = polyhedra::integral_closure(&ideal.power(n)?)?;
                        Ok((n, mu_quotient(&sym, &pow)?))
                    })
                    .collect::<CliResult<Vec<_>>>()?,
                Engine::Polyhedral => config
                    .range()?
                    .map(|n| Ok((n, polyhedra::isdef(&ideal, n)?)))
                    .collect::<CliResult<Vec<_>>>()?,
                // isdef = sdef on this family, since its powers are integrally closed
                Engine::Family => {
                    let p = family_params_for(config, &ideal)?;
                    config
                        .range()?
                        .map(|n| Ok((n, family::family_sdef(p, n)?)))
                        .collect::<CliResult<Vec<_>>>()?
                }
            };
            table_output(&rows, config)
        }
        Command::NpHrep => {
            let h = polyhedra::hrep(&polyhedra::np_of(&config.parsed_ideal()?)?)?;
            hrep_output(&h, config)
        }
        Command::SpHrep => {
            let h = polyhedra::sp_of(&config.parsed_ideal()?)?.hrep()?;
            hrep_output(&h, config)
        }
        Command::Fit => {
            let text = match &config.input {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
                None => {
                    let mut s = String::new();
                    stdin.read_to_string(&mut s).map_err(io_err)?;
                    s
                }
            };
            let values = read_fit_input(&text)?;
            fit_output(&quasipoly::fit(
                &values,
                config.max_period,
                config.max_degree,
            )?)
        }
        Command::Family => {
            let p = config
                .params()?
                .ok_or_else(|| CliError::Input("family needs --abc a b c".into()))?;
            let rows = config
                .range()?
                .map(|n| Ok((n, family::family_sdef(p, n)?)))
                .collect::<CliResult<Vec<_>>>()?;
            family_output(p, &rows, config)
        }
    }
}

/// Executes and writes the result; returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    let result = execute(config, &mut std::io::stdin()).and_then(|out| match &config.out {
        Some(path) => std::fs::write(path, out)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(out.as_bytes()).map_err(io_err),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("symdefect: {e}");
            e.exit_code()
        }
    }
}

/// Parses arguments (including the program name) and runs.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            code
        }
    }
}
