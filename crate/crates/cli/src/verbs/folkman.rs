use prlab_core::folkman;
use prlab_core::rado::{columns_condition, verify_columns_certificate, ColumnsVerdict};
use serde_json::json;

use crate::args::FolkmanCmd;
use crate::envelope::{Report, Status};
use crate::input;
use crate::CliError;

pub fn run(cmd: FolkmanCmd) -> Result<Report, CliError> {
    match cmd {
        FolkmanCmd::Fs { set } => {
            let s = input::finite_set(&set)?;
            let sums = folkman::fs(&s)?;
            Ok(Report::new(Status::Positive, "ok", "finite-sums")
                .result(json!({ "set": s.as_slice(), "finite_sums": sums.as_slice() }))
                .line(format!("FS{s} = {sums}"))
                .bound("max_set_size", folkman::MAX_FS_SIZE))
        }
        FolkmanCmd::Matrix { n, check } => {
            let m = folkman::folkman_matrix(n)?;
            let rows: Vec<Vec<String>> =
                (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
            let mut report = Report::new(Status::Positive, "ok", "folkman-matrix")
                .result(json!({ "n": n, "rows": m.rows(), "cols": m.cols(), "matrix": rows }));
            for line in m.to_string().lines() {
                report = report.line(line.to_string());
            }
            if check {
                let verdict = columns_condition(&m)?;
                let ok = match &verdict {
                    ColumnsVerdict::Satisfied(cert) => verify_columns_certificate(&m, cert),
                    ColumnsVerdict::NotSatisfied => false,
                };
                report.verdict = if ok { "PR".into() } else { "not_PR".into() };
                report.status = if ok { Status::Positive } else { Status::Negative };
                report.provenance = "rado-columns-condition";
                report = report
                    .certificate(json!({ "columns_condition": ok }))
                    .line(format!("columns condition: {}", if ok { "satisfied" } else { "not satisfied" }));
            }
            Ok(report)
        }
        FolkmanCmd::WeakMono { coloring, set } => {
            let c = input::coloring(&coloring, 1)?;
            let s = input::finite_set(&set)?;
            let yes = folkman::weakly_monochromatic(&c, &s)?;
            Ok(Report::new(
                if yes { Status::Positive } else { Status::Negative },
                if yes { "weakly-monochromatic" } else { "not-weakly-monochromatic" },
                "finite-sums",
            )
            .result(json!({ "set": s.as_slice(), "weakly_monochromatic": yes })))
        }
    }
}
