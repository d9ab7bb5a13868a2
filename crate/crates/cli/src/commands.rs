//! Subcommand bodies. Each returns a wire payload; the binary and the HTTP service only
//! differ in how they deliver it.

use std::fmt::Write as _;

use thiserror::Error;

use luminous_core::board::{Config, GridDims};
use luminous_core::matrices::{build_a, build_a_gf2};
use luminous_core::solver::{self, LightsOut, DEFAULT_ENUMERATION_CAP};
use luminous_core::spectral::det_report;
use luminous_core::{classify, Error as CoreError};

use crate::wire::{
    BoardJson, CriterionJson, DetJson, HintJson, HintRequest, MatrixJson, PressSet, SolveReportJson, SolveRequest,
    SweepJson,
};

/// Overrides the per-side grid cap.
pub const SIZE_LIMIT_ENV: &str = "LUMINOUS_SIZE_LIMIT";

/// Largest nullity for which `--all` lists every solution.
pub const MAX_LISTED_NULLITY: usize = 16;

/// Largest accepted `--cap`.
pub const MAX_ENUMERATION_CAP: usize = 32;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type AppResult<T> = Result<T, AppError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_side: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_side: luminous_core::board::DEFAULT_MAX_SIDE,
        }
    }
}

impl Limits {
    pub fn from_env() -> AppResult<Self> {
        match std::env::var(SIZE_LIMIT_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(max_side) if max_side > 0 => Ok(Self { max_side }),
                _ => Err(AppError::Usage(format!("{SIZE_LIMIT_ENV} must be a positive integer, got {v:?}"))),
            },
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn dims(&self, rows: usize, cols: usize) -> AppResult<GridDims> {
        Ok(GridDims::with_limit(rows, cols, self.max_side)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Field {
    Int,
    Gf2,
}

pub struct MatrixDump {
    pub text: String,
    pub json: MatrixJson,
}

pub fn matrix(limits: &Limits, rows: usize, cols: usize, field: Field) -> AppResult<MatrixDump> {
    let dims = limits.dims(rows, cols)?;
    let entries: Vec<Vec<i64>> = match field {
        Field::Int => {
            let a = build_a::<i64>(dims);
            a.as_slice().chunks(a.cols()).map(<[i64]>::to_vec).collect()
        }
        Field::Gf2 => {
            let a = build_a_gf2(dims);
            (0..a.rows())
                .map(|r| (0..a.cols()).map(|c| i64::from(a.get(r, c))).collect())
                .collect()
        }
    };
    let mut text = String::new();
    for row in &entries {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        text.push_str(&line.join(" "));
        text.push('\n');
    }
    let field = match field {
        Field::Int => "int",
        Field::Gf2 => "gf2",
    };
    Ok(MatrixDump {
        text,
        json: MatrixJson {
            rows,
            cols,
            field: field.to_owned(),
            matrix: entries,
        },
    })
}

pub fn det(limits: &Limits, rows: usize, cols: usize) -> AppResult<DetJson> {
    let dims = limits.dims(rows, cols)?;
    Ok(DetJson::new(rows, cols, &det_report(dims)?))
}

pub fn criterion(rows: usize, cols: usize) -> AppResult<CriterionJson> {
    Ok(CriterionJson::new(rows, cols, &classify(rows, cols)?))
}

fn parse_config(limits: &Limits, rows: usize, cols: usize, config: &str) -> AppResult<Config> {
    let dims = limits.dims(rows, cols)?;
    Ok(Config::parse(dims, config.trim())?)
}

pub fn solve(limits: &Limits, req: &SolveRequest) -> AppResult<SolveReportJson> {
    let cap = req.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    if cap > MAX_ENUMERATION_CAP {
        return Err(AppError::Usage(format!("cap must be at most {MAX_ENUMERATION_CAP}, got {cap}")));
    }
    let config = parse_config(limits, req.rows, req.cols, &req.config)?;
    let game = LightsOut::new(config.dims());
    let report = game.solve(&config, cap)?;
    let solutions = if req.all {
        let all = game.all_solutions(&config, MAX_LISTED_NULLITY)?;
        Some(all.iter().map(PressSet::from).collect())
    } else {
        None
    };
    Ok(SolveReportJson::new(config.to_bit_string(), &report, solutions))
}

pub fn hint(limits: &Limits, req: &HintRequest) -> AppResult<HintJson> {
    let config = parse_config(limits, req.rows, req.cols, &req.config)?;
    let game = LightsOut::new(config.dims());
    Ok(HintJson {
        rows: req.rows,
        cols: req.cols,
        solvable: game.is_solvable(&config)?,
        hint: game.hint(&config, DEFAULT_ENUMERATION_CAP)?,
    })
}

pub fn board(limits: &Limits, rows: usize, cols: usize, seed: u64) -> AppResult<BoardJson> {
    let dims = limits.dims(rows, cols)?;
    let game = LightsOut::new(dims);
    let (config, _) = game.random_solvable(seed)?;
    Ok(BoardJson {
        rows,
        cols,
        seed,
        config: config.to_bit_string(),
        solvable: game.is_solvable(&config)?,
    })
}

pub fn sweep(limits: &Limits, max: usize) -> AppResult<SweepJson> {
    if max > limits.max_side {
        return Err(CoreError::SizeLimit {
            what: "sweep bound",
            actual: max,
            limit: limits.max_side,
        }
        .into());
    }
    Ok(SweepJson::from(&solver::sweep(max)?))
}

/// Plain-text table for `sweep --format text`.
pub fn sweep_text(s: &SweepJson) -> String {
    let mut out = String::new();
    let parity = |p: &Option<String>| p.clone().unwrap_or_else(|| "-".into());
    let _ = writeln!(out, "{:>3} {:>3}  {:<11} {:<8} {:>7}  {:<10}", "m", "n", "closed-form", "conds", "nullity", "det parity");
    for r in &s.table {
        let verdict = if r.singular { "singular" } else { "nonsingular" };
        let _ = writeln!(
            out,
            "{:>3} {:>3}  {:<11} {:<8} {:>7}  {:<10}",
            r.m,
            r.n,
            verdict,
            r.conditions.join(","),
            r.nullity,
            parity(&r.det_parity)
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "discrepancies (closed form nonsingular, GF(2) nullity > 0): {}",
        s.discrepancies.len()
    );
    for r in &s.discrepancies {
        let _ = writeln!(out, "  {}x{}  nullity {}  det parity {}", r.m, r.n, r.nullity, parity(&r.det_parity));
    }
    let _ = writeln!(out, "violations (closed form singular, GF(2) nullity 0): {}", s.violations.len());
    for r in &s.violations {
        let _ = writeln!(out, "  {}x{}", r.m, r.n);
    }
    let _ = writeln!(out, "parity mismatches: {}", s.parity_mismatches.len());
    for r in &s.parity_mismatches {
        let _ = writeln!(out, "  {}x{}", r.m, r.n);
    }
    out
}
