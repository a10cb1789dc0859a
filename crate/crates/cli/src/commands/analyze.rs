use std::path::PathBuf;

use interp_core::intsets::{
    banach_density_profile, gap_sequence, gap_syndeticity_table, longest_gap, piecewise_syndetic_certificate,
    syndetic_certificate, thick_certificate, Certificate,
};
use serde_json::json;

use super::{parse_set, scale, Timer};
use crate::report::{RunReport, Verdict};
use crate::{usage, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Generator spec, e.g. "kind=powers base=2".
    #[arg(long)]
    set: String,
    /// Window `[1, N]`.
    #[arg(long)]
    n: u64,
    /// Gap bound g.
    #[arg(long, value_parser = scale)]
    syndetic: Option<u64>,
    /// Run length L.
    #[arg(long, value_parser = scale)]
    thick: Option<u64>,
    /// Gap bound g and run length L.
    #[arg(long = "pw-syndetic", num_args = 2, value_names = ["G", "L"], value_parser = scale)]
    pw_syndetic: Option<Vec<u64>>,
    /// Gap-syndeticity table for n-gaps.
    #[arg(long = "gap-table", value_parser = scale)]
    gap_table: Option<u64>,
    /// Summarize the gaps between consecutive elements.
    #[arg(long)]
    gaps: bool,
    /// Upper Banach density profile.
    #[arg(long)]
    banach: bool,
    /// Largest window length in the density profile; defaults to N/2.
    #[arg(long = "n-max")]
    n_max: Option<u64>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
}

pub fn run(a: Args) -> Outcome {
    let _t = Timer::start("analyze");
    let set = parse_set(&a.set)?;
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let mut r = RunReport::new("analyze", None);
    r.param("set", set.to_spec_string());
    r.param("n", a.n);
    let mut certs: Vec<(&str, Certificate)> = Vec::new();
    if let Some(g) = a.syndetic {
        r.param("syndetic", json!({ "g": g }));
        certs.push(("syndetic", syndetic_certificate(&set, a.n, g)?));
    }
    if let Some(l) = a.thick {
        r.param("thick", json!({ "L": l }));
        certs.push(("thick", thick_certificate(&set, a.n, l)?));
    }
    if let Some(gl) = &a.pw_syndetic {
        r.param("pw_syndetic", json!({ "g": gl[0], "L": gl[1] }));
        certs.push(("piecewise-syndetic", piecewise_syndetic_certificate(&set, a.n, gl[0], gl[1])?));
    }
    if let Some(n) = a.gap_table {
        r.param("gap_table", json!({ "n": n }));
        certs.push(("gap-syndeticity", gap_syndeticity_table(&set, a.n, n)?));
    }
    for (name, c) in certs {
        r.verdict(Verdict::new(name, c.holds(), c));
    }
    if a.gaps {
        let gaps = gap_sequence(&set, a.n)?;
        r.result(
            "gaps",
            json!({
                "count": gaps.len(),
                "min": gaps.iter().min(),
                "max": gaps.iter().max(),
                "longest_nonmember_run": longest_gap(&set, a.n)?,
            }),
        );
    }
    if a.banach {
        let n_max = a.n_max.unwrap_or(a.n / 2).max(1);
        r.param("n_max", n_max);
        r.result("banach", banach_density_profile(&set, a.n, n_max)?);
    }
    r.emit(a.report.as_deref())?;
    Ok(r.all_hold())
}
