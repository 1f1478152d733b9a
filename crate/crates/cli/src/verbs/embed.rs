use prlab_core::embed::{self, Family, FamilySpec};
use prlab_core::FiniteSet;
use serde_json::json;

use crate::args::EmbedCmd;
use crate::envelope::{Report, Status};
use crate::input::{self, usage};
use crate::CliError;

fn spec_for(family: &str, bounds: Option<&str>, default_hi: u64) -> Result<FamilySpec, CliError> {
    let fam = Family::parse(family)?;
    Ok(match bounds {
        Some(b) => FamilySpec::parse_bounds(fam, b, default_hi)?,
        None => FamilySpec::uniform(fam, default_hi),
    })
}

pub fn run(cmd: EmbedCmd) -> Result<Report, CliError> {
    match cmd {
        EmbedCmd::Fe { finite, inside, periodic, in_periodic } => match (finite, inside, periodic, in_periodic) {
            (Some(f), Some(b), None, None) => {
                let (f, b) = (input::finite_set(&f)?, input::finite_set(&b)?);
                let shift = embed::fe_shift(&f, &b)?;
                let base = json!({ "finite": f.as_slice(), "in": b.as_slice(), "shift": shift });
                Ok(match shift {
                    Some(n) => Report::new(Status::Positive, "embeds", "finite-embeddability-shift")
                        .result(base)
                        .certificate(json!({ "shift": n }))
                        .line(format!("{f} + {n} is a subset of {b}")),
                    None => Report::new(Status::Negative, "does-not-embed", "finite-embeddability-shift")
                        .result(base)
                        .line(format!("no shift of {f} lies inside {b}")),
                })
            }
            (None, None, Some(a), Some(b)) => {
                let (a, b) = (input::periodic_set(&a)?, input::periodic_set(&b)?);
                let yes = embed::fe_periodic(&a, &b);
                let r = if yes {
                    Report::new(Status::Positive, "embeds", "periodic-embeddability")
                } else {
                    Report::new(Status::Negative, "does-not-embed", "periodic-embeddability")
                };
                Ok(r.result(json!({ "set": a.to_string(), "in": b.to_string(), "embeds": yes })))
            }
            _ => Err(usage("use either --finite with --in, or --periodic with --in-periodic")),
        },
        EmbedCmd::Classify { spec } => {
            let a = input::periodic_set(&spec)?;
            let c = embed::classify(&a);
            Ok(Report::new(Status::Positive, "ok", "periodic-classification")
                .result(json!({
                    "set": a.to_string(),
                    "thick": c.thick,
                    "syndetic": c.syndetic,
                    "piecewise_syndetic": c.piecewise_syndetic,
                    "finite": c.finite,
                }))
                .line(format!("thick: {}", c.thick))
                .line(format!("syndetic: {}", c.syndetic))
                .line(format!("piecewise syndetic: {}", c.piecewise_syndetic))
                .line(format!("finite: {}", c.finite)))
        }
        EmbedCmd::Bd { spec } => {
            let a = input::periodic_set(&spec)?;
            let d = embed::bd(&a);
            Ok(Report::new(Status::Positive, "ok", "residue-density")
                .result(json!({ "set": a.to_string(), "bd": d.to_string() }))
                .line(format!("BD = {d}")))
        }
        EmbedCmd::Fmap { set, inside, family, bounds } => {
            let (f, b) = (input::finite_set(&set)?, input::finite_set(&inside)?);
            let spec = spec_for(&family, bounds.as_deref(), b.largest().unwrap_or(0))?;
            let found = embed::fmap_witness(&f, &b, &spec)?;
            let base = json!({ "set": f.as_slice(), "in": b.as_slice(), "family": spec.family.name() });
            let r = match found {
                Some(params) => {
                    let image = spec.family.image(&params, &f).map(|s| s.as_slice().to_vec());
                    Report::new(Status::Positive, "maps", "family-mappability")
                        .result(base)
                        .certificate(json!({ "parameters": params, "names": spec.family.param_names(), "image": image }))
                        .line(format!("parameters {params:?} map {f} into {b}"))
                }
                None => Report::new(Status::Unknown, "none-within-bounds", "family-mappability")
                    .result(base)
                    .line(format!("no parameters within {spec} map {f} into {b}")),
            };
            Ok(r.bound("parameters", spec.to_string()))
        }
        EmbedCmd::Apmax { set, len } => {
            let window: FiniteSet = if set.contains('=') {
                // An eventually periodic set: past the threshold, `len` consecutive
                // members of one residue class decide the question.
                let a = input::periodic_set(&set)?;
                a.window(0, a.threshold() + a.period() * (len as u64 + 1))
            } else {
                input::finite_set(&set)?
            };
            let yes = embed::a_maximal_probe(&window, len)?;
            let r = if yes {
                Report::new(Status::Positive, "contains-ap", "ap-affinity-probe")
            } else {
                Report::new(Status::Negative, "no-ap", "ap-affinity-probe")
            };
            Ok(r.result(json!({ "len": len, "window_size": window.len(), "contains_ap": yes })))
        }
        EmbedCmd::ProbeFamily { family, bounds, samples } => {
            let sets = samples.split('|').map(input::finite_set).collect::<Result<Vec<_>, _>>()?;
            let default_hi = sets.iter().filter_map(FiniteSet::largest).max().unwrap_or(1);
            let spec = spec_for(&family, bounds.as_deref(), default_hi)?;
            let rep = embed::wellstructured_probe(&spec, &sets)?;
            let trans = rep.transitivity.as_ref().map(|t| json!({ "f": t.f, "g": t.g, "set": t.set.as_slice() }));
            let refl = rep.reflexivity.as_ref().map(|s| s.as_slice().to_vec());
            let found = trans.is_some() || refl.is_some();
            let mut r = if found {
                Report::new(Status::Negative, "counterexample", "well-structured-probe")
            } else {
                Report::new(Status::Unknown, "no-counterexample-within-bounds", "well-structured-probe")
            };
            r = r.result(json!({
                "family": spec.family.name(),
                "pairs_checked": rep.pairs_checked,
                "skipped_overflow": rep.skipped_overflow,
            }));
            if found {
                r = r.certificate(json!({ "transitivity": trans, "reflexivity": refl }));
            }
            if let Some(t) = &rep.transitivity {
                r = r.line(format!("transitivity fails: f = {:?}, g = {:?}, F = {}", t.f, t.g, t.set));
            }
            if let Some(s) = &rep.reflexivity {
                r = r.line(format!("reflexivity fails on {s}"));
            }
            Ok(r.line(format!("{} pairs checked, {} skipped for overflow", rep.pairs_checked, rep.skipped_overflow))
                .bound("parameters", spec.to_string()))
        }
    }
}
