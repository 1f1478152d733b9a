use std::path::Path;

use num_bigint::BigInt;
use prlab_core::search::SolutionSystem;
use prlab_core::{Coloring, FiniteSet, IntMatrix, OmegaTerm, PeriodicSet, Poly};

use crate::args::SystemArgs;
use crate::CliError;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub fn poly(text: &str) -> Result<Poly, CliError> {
    Ok(Poly::parse(text)?)
}

pub fn term(text: &str) -> Result<OmegaTerm, CliError> {
    Ok(OmegaTerm::parse(text)?)
}

pub fn finite_set(text: &str) -> Result<FiniteSet, CliError> {
    Ok(FiniteSet::parse(text)?)
}

/// A periodic-set description, or a plain finite list.
pub fn periodic_set(text: &str) -> Result<PeriodicSet, CliError> {
    if text.contains('=') {
        Ok(PeriodicSet::parse(text)?)
    } else {
        Ok(PeriodicSet::from_finite(&finite_set(text)?))
    }
}

pub fn coloring(path: &Path, lo: i64) -> Result<Coloring, CliError> {
    Ok(Coloring::parse(&read_file(path)?, lo)?)
}

pub fn matrix(path: &Path) -> Result<IntMatrix, CliError> {
    Ok(IntMatrix::parse(&read_file(path)?)?)
}

/// Comma separated values of any parseable type.
pub fn list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| usage(format!("`{t}` is not a valid {what}"))))
        .collect()
}

pub fn big_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    list(text, "integer")
}

pub fn system(args: &SystemArgs) -> Result<SolutionSystem, CliError> {
    let src = &args.source;
    let s = if let Some(p) = &src.poly {
        SolutionSystem::poly(poly(p)?)
    } else if let Some(path) = &src.matrix {
        SolutionSystem::matrix(matrix(path)?)
    } else if let Some(k) = src.ap {
        SolutionSystem::ap(k)
    } else {
        return Err(usage("one of --poly, --matrix or --ap is required"));
    };
    Ok(s.injective(args.injective))
}

pub fn system_label(args: &SystemArgs) -> String {
    let src = &args.source;
    let base = if let Some(p) = &src.poly {
        format!("poly {p}")
    } else if let Some(path) = &src.matrix {
        format!("matrix {}", path.display())
    } else {
        format!("ap {}", src.ap.unwrap_or(0))
    };
    if args.injective {
        format!("{base} (injective)")
    } else {
        base
    }
}
