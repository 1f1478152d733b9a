use std::path::Path;

use prlab_core::rado::{self, AffineVerdict, ColumnsVerdict, LinearVerdict};
use serde_json::{json, Value};

use crate::envelope::{int, ints, Report, Status};
use crate::input::{self, usage};
use crate::CliError;

pub fn check_matrix(file: &Path) -> Result<Report, CliError> {
    let m = input::matrix(file)?;
    let result = json!({ "rows": m.rows(), "cols": m.cols() });
    Ok(match rado::columns_condition(&m)? {
        ColumnsVerdict::Satisfied(cert) => {
            let combos: Vec<Value> = cert
                .combinations
                .iter()
                .map(|c| Value::Array(c.iter().map(|(j, q)| json!([j + 1, q.to_string()])).collect()))
                .collect();
            let blocks: Vec<Vec<usize>> = cert.blocks.iter().map(|b| b.iter().map(|j| j + 1).collect()).collect();
            let mut r = Report::new(Status::Positive, "PR", "rado-columns-condition")
                .result(result)
                .certificate(json!({ "blocks": blocks, "combinations": combos }));
            for (t, b) in blocks.iter().enumerate() {
                r = r.line(format!("block {}: columns {:?}", t + 1, b));
            }
            r
        }
        ColumnsVerdict::NotSatisfied => Report::new(Status::Negative, "not_PR", "rado-columns-condition")
            .result(result)
            .line("no ordered column partition satisfies the columns condition"),
    })
}

pub fn check_linear(text: &str) -> Result<Report, CliError> {
    let p = input::poly(text)?;
    Ok(match rado::linear_pr(&p)? {
        LinearVerdict::Pr { subset } => Report::new(Status::Positive, "PR", "rado-single-equation")
            .result(json!({ "equation": p.to_string() }))
            .certificate(json!({ "subset": subset }))
            .line(format!("J = {{{}}}", subset.join(", "))),
        LinearVerdict::NotPr { prime } => Report::new(Status::Negative, "not_PR", "rado-single-equation")
            .result(json!({ "equation": p.to_string() }))
            .certificate(json!({ "blocking_prime": prime }))
            .line(format!("blocking prime {prime}: the smod({prime}) coloring has no monochromatic solution")),
    })
}

pub fn check_affine(text: &str) -> Result<Report, CliError> {
    let p = input::poly(text)?;
    let base = json!({ "equation": p.to_string() });
    Ok(match rado::affine_pr(&p)? {
        AffineVerdict::ConstantSolution { k } => Report::new(Status::Positive, "PR", "affine-single-equation")
            .result(base)
            .certificate(json!({ "constant_solution": int(&k) }))
            .line(format!("every variable equal to {k} is a solution")),
        AffineVerdict::Parametric { z, subset } => Report::new(Status::Positive, "PR", "affine-single-equation")
            .result(base)
            .certificate(json!({ "z": int(&z), "subset": subset }))
            .line(format!("z = {z}, J = {{{}}}", subset.join(", "))),
        AffineVerdict::NotPr => Report::new(Status::Negative, "not_PR", "affine-single-equation")
            .result(base)
            .line("neither a constant solution nor a parametric family exists"),
    })
}

pub fn smod(p: u64, n: u64) -> Result<Report, CliError> {
    let v = rado::smod(p, n)?;
    Ok(Report::new(Status::Positive, "ok", "last-nonzero-digit")
        .result(json!({ "p": p, "n": n, "smod": v }))
        .line(format!("smod({p}, {n}) = {v}")))
}

pub fn blocking_prime(text: &str) -> Result<Report, CliError> {
    let cs = input::big_list(text)?;
    if cs.is_empty() {
        return Err(usage("at least one coefficient is required"));
    }
    let result = json!({ "coefficients": ints(&cs) });
    Ok(match rado::blocking_prime(&cs)? {
        Some(p) => Report::new(Status::Positive, "found", "rado-single-equation")
            .result(result)
            .certificate(json!({ "prime": p }))
            .line(format!("prime {p} divides no nonempty subset sum")),
        None => Report::new(Status::Negative, "none", "rado-single-equation")
            .result(result)
            .line("some nonempty subset sums to zero, so no prime blocks"),
    })
}

pub fn parametric(text: &str, subset: &str) -> Result<Report, CliError> {
    let p = input::poly(text)?;
    let vars = p.variables_in_order();
    let names = subset
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if (1..=vars.len()).contains(&i) => Ok(vars[i - 1].clone()),
            Ok(i) => Err(usage(format!("position {i} is outside 1..={}", vars.len()))),
            Err(_) => Ok(t.to_string()),
        })
        .collect::<Result<Vec<String>, CliError>>()?;
    let sol = rado::parametric_solution(&p, &names)?;
    let assignment: Vec<String> = sol.assignment().iter().map(|s| s.to_string()).collect();
    let expansion = sol.expansion();
    let mut r = Report::new(Status::Positive, "ok", "bezout-parametric-family")
        .result(json!({
            "variables": sol.variables,
            "coefficients": ints(&sol.coefficients),
            "assignment": assignment,
            "bezout": ints(&sol.zs),
            "m": int(&sol.m),
            "c": int(&sol.c),
            "d": int(&sol.d),
            "z": int(&sol.z),
            "constant": sol.constant,
        }))
        .certificate(json!({ "expansion": expansion.to_string() }));
    for (v, s) in sol.variables.iter().zip(&assignment) {
        r = r.line(format!("{v} = {s}"));
    }
    Ok(r.line(format!("sum of c_i * s_i = {expansion}")))
}
