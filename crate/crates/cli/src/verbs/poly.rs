use prlab_core::polyreg::{self, Justification, PrStatus, PrVerdict, TransformKind};
use serde_json::{json, Value};

use crate::args::PolyCmd;
use crate::envelope::{Report, Status};
use crate::input::{self, usage};
use crate::CliError;

fn justification_json(j: &Justification) -> Value {
    match j {
        Justification::None { reason } => json!({ "reason": reason }),
        Justification::ExclusiveReduct { exclusive, reduct, subset } => {
            json!({ "exclusive": exclusive, "reduct": reduct.to_string(), "subset": subset })
        }
        Justification::HomogeneousReduct { reduct, prime } => json!({ "reduct": reduct.to_string(), "prime": prime }),
        Justification::LinearZeroSum { subset } => json!({ "subset": subset }),
        Justification::ExponentSums { left, right } => json!({ "left": left, "right": right }),
        Justification::Construction { linear, subsets, n } => {
            json!({ "linear": linear.to_string(), "subsets": subsets, "n": n })
        }
        Justification::DisjointProduct { factor, cofactor, factor_verdict } => json!({
            "factor": factor.to_string(),
            "cofactor": cofactor.to_string(),
            "factor_verdict": verdict_json(factor_verdict),
        }),
        Justification::Factors { factors, verdicts } => json!({
            "factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        }),
        Justification::Reciprocal { source, source_verdict } => {
            json!({ "source": source.to_string(), "source_verdict": verdict_json(source_verdict) })
        }
    }
}

fn verdict_json(v: &PrVerdict) -> Value {
    json!({
        "status": v.status.name(),
        "justification": v.justification.tag(),
        "details": justification_json(&v.justification),
    })
}

fn status_of(s: PrStatus) -> Status {
    match s {
        PrStatus::IprCertified | PrStatus::PrCertified => Status::Positive,
        PrStatus::NotPrCertified => Status::Negative,
        PrStatus::Unknown => Status::Unknown,
    }
}

/// Report for a polynomial together with the verdict certifying it.
fn verdict_report(poly: &str, v: &PrVerdict) -> Report {
    let r = Report::new(status_of(v.status), v.status.name(), v.justification.tag())
        .result(json!({ "polynomial": poly, "verdict": verdict_json(v) }))
        .line(format!("polynomial: {poly}"));
    match &v.justification {
        Justification::None { reason } => r.line(format!("reason: {reason}")),
        j => r.certificate(justification_json(j)).line(format!("justification: {}", j.tag())),
    }
}

fn u32_list(text: &str) -> Result<Vec<u32>, CliError> {
    input::list(text, "exponent")
}

pub fn run(cmd: PolyCmd) -> Result<Report, CliError> {
    match cmd {
        PolyCmd::Reduct { expr } => {
            let p = input::poly(&expr)?;
            let r = polyreg::reduct(&p)?;
            Ok(Report::new(Status::Positive, "ok", "monomial-reduct")
                .result(json!({ "polynomial": p.to_string(), "reduct": r.to_string() }))
                .line(format!("reduct: {r}")))
        }
        PolyCmd::Exclusive { expr } => {
            let p = input::poly(&expr)?;
            let sets = polyreg::exclusive_sets(&p)?;
            let mut r = Report::new(
                if sets.is_empty() { Status::Negative } else { Status::Positive },
                if sets.is_empty() { "none" } else { "found" },
                "exclusive-variable-sets",
            )
            .result(json!({ "polynomial": p.to_string(), "exclusive_sets": sets }));
            for s in &sets {
                r = r.line(format!("{{{}}}", s.join(", ")));
            }
            Ok(r)
        }
        PolyCmd::Check { expr } => {
            let p = input::poly(&expr)?;
            let v = polyreg::check(&p)?;
            Ok(verdict_report(&p.to_string(), &v))
        }
        PolyCmd::Construct3513 { linear, subsets, n } => {
            let lin = input::poly(&linear)?;
            let parsed = subsets
                .split('|')
                .map(|part| input::list::<usize>(part, "index"))
                .collect::<Result<Vec<_>, _>>()?;
            let (p, v) = polyreg::construct_3513(&lin, &parsed, n)?;
            Ok(verdict_report(&p.to_string(), &v))
        }
        PolyCmd::Reciprocal { expr } => {
            let p = input::poly(&expr)?;
            let (q, v) = polyreg::reciprocal(&p)?;
            let mut r = verdict_report(&q.to_string(), &v);
            if let Value::Object(m) = &mut r.result {
                m.insert("source".into(), json!(p.to_string()));
            }
            // Computing the reciprocal always succeeds; the verdict only says what transfers.
            r.status = Status::Positive;
            Ok(r.line(format!("reciprocal: {q}")))
        }
        PolyCmd::Transform { expr, negate, power } => {
            let p = input::poly(&expr)?;
            let kind = match (negate, power) {
                (true, None) => TransformKind::NegateVars,
                (false, Some(z)) => TransformKind::Power(z),
                _ => return Err(usage("exactly one of --negate and --power is required")),
            };
            let (q, domain) = polyreg::transform(&p, kind)?;
            Ok(Report::new(Status::Positive, "ok", "variable-substitution")
                .result(json!({ "polynomial": p.to_string(), "transformed": q.to_string(), "domain": domain }))
                .line(format!("transformed: {q}"))
                .line(format!("regularity transfers over the {domain}")))
        }
        PolyCmd::Expsum { left, right } => {
            let (q, v) = polyreg::exp_sum_ipr(&u32_list(&left)?, &u32_list(&right)?)?;
            Ok(verdict_report(&q.to_string(), &v))
        }
        PolyCmd::Invariance { expr } => {
            let p = input::poly(&expr)?;
            let f = polyreg::invariance(&p)?;
            Ok(Report::new(Status::Positive, "ok", "invariance-identities")
                .result(json!({
                    "polynomial": p.to_string(),
                    "translation_invariant": f.translation_invariant,
                    "dilation_invariant": f.dilation_invariant,
                    "additive": f.additive,
                    "multiplicative": f.multiplicative,
                }))
                .line(format!("translation invariant: {}", f.translation_invariant))
                .line(format!("dilation invariant: {}", f.dilation_invariant))
                .line(format!("additive: {}", f.additive))
                .line(format!("multiplicative: {}", f.multiplicative)))
        }
    }
}
