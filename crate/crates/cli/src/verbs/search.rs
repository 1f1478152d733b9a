use prlab_core::search::{self, SearchOutcome};
use prlab_core::Coloring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{SearchCmd, VdwCmd};
use crate::envelope::{Report, Status};
use crate::input;
use crate::{CliError, Context};

fn coloring_json(c: &Coloring) -> Value {
    json!({ "lo": c.lo(), "hi": c.hi(), "colors": c.colors(), "classes": c.classes() })
}

fn classes_text(c: &Coloring) -> String {
    let parts: Vec<String> = c
        .classes()
        .iter()
        .filter(|cl| !cl.is_empty())
        .map(|cl| format!("{{{}}}", cl.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    parts.join(" / ")
}

pub fn run(ctx: &Context, cmd: SearchCmd) -> Result<Report, CliError> {
    let opts = ctx.search;
    match cmd {
        SearchCmd::GoodColoring { system, n, r } => {
            let s = input::system(&system)?;
            let outcome = search::good_coloring(&s, n, r, opts)?;
            let base = json!({ "system": input::system_label(&system), "n": n, "r": r, "nodes": outcome.nodes() });
            Ok(match outcome {
                SearchOutcome::Good { coloring, .. } => Report::new(Status::Positive, "good", "exhaustive-coloring-search")
                    .result(base)
                    .certificate(coloring_json(&coloring))
                    .line(format!("good coloring of [1,{n}]: {coloring}"))
                    .line(format!("classes: {}", classes_text(&coloring))),
                SearchOutcome::Forced { .. } => Report::new(Status::Negative, "forced", "exhaustive-coloring-search")
                    .result(base)
                    .line(format!("every {r}-coloring of [1,{n}] has a monochromatic solution")),
            }
            .bound("max_nodes", opts.max_nodes))
        }
        SearchCmd::ForcingNumber { system, r, max } => {
            let s = input::system(&system)?;
            let fr = search::forcing_number(&s, r, max, opts)?;
            let mut report = match fr.n {
                Some(n) => Report::new(Status::Positive, "forced", "exhaustive-coloring-search")
                    .line(format!("forcing number: {n}")),
                None => Report::new(Status::Unknown, "not-forced-within-bound", "exhaustive-coloring-search")
                    .line(format!("every n <= {max} admits a good {r}-coloring")),
            };
            report = report.result(json!({
                "system": input::system_label(&system),
                "r": r,
                "n": fr.n,
                "nodes": fr.nodes,
            }));
            if let Some(c) = &fr.last_good {
                report = report
                    .certificate(json!({ "last_good": coloring_json(c) }))
                    .line(format!("good coloring of [1,{}]: {c}", c.hi()))
                    .line(format!("classes: {}", classes_text(c)));
            }
            Ok(report.bound("max", max).bound("max_nodes", opts.max_nodes))
        }
        SearchCmd::Witness { system, coloring } => {
            let s = input::system(&system)?;
            let c = input::coloring(&coloring, 1)?;
            let base = json!({ "system": input::system_label(&system), "n": c.hi() });
            Ok(match search::mono_witness(&c, &s)? {
                Some(w) => Report::new(Status::Positive, "monochromatic", "coloring-witness")
                    .result(base)
                    .certificate(json!({ "solution": w, "color": c.color(w[0] as i64) }))
                    .line(format!("monochromatic solution {w:?}")),
                None => Report::new(Status::Negative, "none", "coloring-witness")
                    .result(base)
                    .line("no monochromatic solution"),
            })
        }
    }
}

/// Independent check that `t` is a 3-term progression in one color.
fn is_mono_ap(c: &Coloring, (a, b, e): (u64, u64, u64)) -> bool {
    a < b && b - a == e.wrapping_sub(b) && e > b && {
        let col = c.color(a as i64);
        col.is_some() && col == c.color(b as i64) && col == c.color(e as i64)
    }
}

pub fn vdw(ctx: &Context, cmd: VdwCmd) -> Result<Report, CliError> {
    match cmd {
        VdwCmd::Extract325 { coloring } => {
            let c = input::coloring(&coloring, 0)?;
            let t = search::vdw325_extract(&c)?;
            let ok = is_mono_ap(&c, t);
            Ok(Report::new(if ok { Status::Positive } else { Status::Negative }, "monochromatic-ap", "vdw-325-block-argument")
                .result(json!({ "progression": [t.0, t.1, t.2], "color": c.color(t.0 as i64), "checked": ok }))
                .line(format!("monochromatic progression {} {} {}", t.0, t.1, t.2)))
        }
        VdwCmd::Check325 { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut failures = 0u64;
            for _ in 0..samples {
                let colors: Vec<u32> = (0..325).map(|_| rng.gen_range(1..=2)).collect();
                let c = Coloring::new(0, colors, 2)?;
                if !search::vdw325_extract(&c).map(|t| is_mono_ap(&c, t)).unwrap_or(false) {
                    failures += 1;
                }
            }
            let status = if failures == 0 { Status::Positive } else { Status::Negative };
            Ok(Report::new(status, if failures == 0 { "all-confirmed" } else { "failures" }, "vdw-325-block-argument")
                .result(json!({ "samples": samples, "failures": failures, "seed": ctx.seed }))
                .line(format!("{} of {samples} random colorings confirmed", samples - failures)))
        }
    }
}
