use prlab_core::omega::{self, check_identity, IdentityInputs, IDENTITY_ITEMS};
use prlab_core::OmegaTerm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::args::OmegaCmd;
use crate::envelope::{Report, Status};
use crate::input;
use crate::{CliError, Context};

const ATOMS: [&str; 3] = ["a", "b", "c"];

/// Terms of depth at most `depth` over three atoms and the naturals 1..=9.
fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> OmegaTerm {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.3) {
            OmegaTerm::nat(rng.gen_range(1..=9))
        } else {
            OmegaTerm::atom(ATOMS[rng.gen_range(0..ATOMS.len())])
        };
    }
    match rng.gen_range(0..3) {
        0 => OmegaTerm::star(random_term(rng, depth - 1), rng.gen_range(1..=3)),
        1 => OmegaTerm::sum(random_term(rng, depth - 1), random_term(rng, depth - 1)),
        _ => OmegaTerm::prod(random_term(rng, depth - 1), random_term(rng, depth - 1)),
    }
}

fn random_inputs(rng: &mut ChaCha8Rng) -> IdentityInputs {
    IdentityInputs {
        alpha: random_term(rng, 3),
        beta: random_term(rng, 3),
        gamma: random_term(rng, 3),
        delta: random_term(rng, 3),
        n: rng.gen_range(1..=9),
    }
}

fn bool_report(yes: bool, pos: &str, neg: &str) -> Report {
    if yes {
        Report::new(Status::Positive, pos, "star-canonical-form")
    } else {
        Report::new(Status::Negative, neg, "star-canonical-form")
    }
}

pub fn run(ctx: &Context, cmd: OmegaCmd) -> Result<Report, CliError> {
    match cmd {
        OmegaCmd::Eval { term } => {
            let t = input::term(&term)?;
            let c = t.canonical();
            Ok(Report::new(Status::Positive, "ok", "star-canonical-form")
                .result(json!({ "term": t.to_string(), "canonical": c.to_string(), "height": t.height() }))
                .line(format!("canonical: {c}"))
                .line(format!("height: {}", t.height())))
        }
        OmegaCmd::Eq { left, right } => {
            let (l, r) = (input::term(&left)?, input::term(&right)?);
            let same = omega::term_eq(&l, &r);
            Ok(bool_report(same, "equal", "different")
                .result(json!({
                    "left": l.canonical().to_string(),
                    "right": r.canonical().to_string(),
                    "equal": same,
                }))
                .line(format!("{} {} {}", l.canonical(), if same { "==" } else { "!=" }, r.canonical())))
        }
        OmegaCmd::Tensorized { terms } => {
            let ts = terms.split(';').map(input::term).collect::<Result<Vec<_>, _>>()?;
            let out = omega::tensorized(&ts)?;
            let shown: Vec<String> = out.iter().map(|t| t.canonical().to_string()).collect();
            Ok(Report::new(Status::Positive, "ok", "tensor-shift")
                .result(json!({ "tensorized": shown }))
                .line(format!("({})", shown.join(", "))))
        }
        OmegaCmd::Rpair { left, right } => {
            let (l, r) = (input::term(&left)?, input::term(&right)?);
            let yes = omega::tensor_pair_r(&l, &r);
            Ok(bool_report(yes, "tensor-pair", "not-tensor-pair")
                .result(json!({ "left": l.to_string(), "right": r.to_string(), "height_left": l.height(), "tensor_pair": yes })))
        }
        OmegaCmd::Verify354 { c, d, ledger } => {
            let c: Vec<u64> = input::list(&c, "coefficient")?;
            let d: Vec<u64> = input::list(&d, "coefficient")?;
            let v = omega::verify_sum_zero_tables(&c, &d)?;
            let lines: Vec<String> = v.ledger.iter().map(|l| l.to_string()).collect();
            let ok = v.zero_check && v.distinct_check;
            let mut r = Report::new(if ok { Status::Positive } else { Status::Negative }, if ok { "verified" } else { "failed" }, "sum-zero-tables")
                .result(json!({
                    "c": v.c,
                    "d": v.d,
                    "xi": v.xi.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "eta": v.eta.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "zero_check": v.zero_check,
                    "distinct_check": v.distinct_check,
                    "degenerate": v.degenerate,
                }))
                .certificate(json!({ "ledger": lines }));
            if ledger {
                for l in &lines {
                    r = r.line(l.clone());
                }
            }
            Ok(r.line(format!("zero_check: {}", v.zero_check)).line(format!("distinct_check: {}", v.distinct_check)))
        }
        OmegaCmd::Identities { count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let attempts = count.saturating_mul(200).max(1);
            let mut rows = Vec::new();
            let mut all_ok = true;
            let mut r = Report::new(Status::Positive, "all-passed", "heart-diamond-identities");
            for item in IDENTITY_ITEMS {
                let (mut checked, mut failed, mut tries) = (0u64, 0u64, 0u64);
                while checked < count && tries < attempts {
                    tries += 1;
                    match check_identity(item, &random_inputs(&mut rng)) {
                        Some(true) => checked += 1,
                        Some(false) => {
                            checked += 1;
                            failed += 1;
                        }
                        None => {}
                    }
                }
                all_ok &= failed == 0 && checked == count;
                rows.push(json!({ "item": item, "checked": checked, "failed": failed }));
                r = r.line(format!("item {item}: {checked} checked, {failed} failed"));
            }
            if !all_ok {
                r.status = Status::Negative;
                r.verdict = "failures".into();
            }
            Ok(r.result(json!({ "items": rows, "seed": ctx.seed, "count": count, "excluded": [10, 17] }))
                .line("item 10 (inequality) and item 17 (ultrafilter equivalence) are not term identities"))
        }
    }
}
