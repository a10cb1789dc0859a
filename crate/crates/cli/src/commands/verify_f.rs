use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use interp_core::io::write_set_file;
use interp_core::recurrence::{build_f, verify_shift_ip, verify_sum_free, INDEX_FAMILY};

use super::{range_list, List, Timer};
use crate::report::{RunReport, Verdict};
use crate::{usage, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Window `[1, N]`.
    #[arg(long)]
    n: u64,
    /// Largest number of generators summed in the shift-IP check.
    #[arg(long)]
    depth: usize,
    /// Shifts n for which `F − n` must contain the truncated IP-set.
    #[arg(long, value_parser = range_list)]
    shifts: List,
    /// Directory for `f.set` and `report.json`; the report goes to stdout when omitted.
    #[arg(long = "out-dir")]
    out_dir: Option<PathBuf>,
}

pub fn run(a: Args) -> Outcome {
    let _t = Timer::start("verify-f");
    let shifts: Vec<u64> = a.shifts.0;
    if shifts.is_empty() {
        return Err(usage("--shifts names no shifts"));
    }
    let f = build_f(a.n)?;
    let values = f.values();
    let mut r = RunReport::new("verify-f", None);
    r.param("n", a.n);
    r.param("depth", a.depth);
    r.param("shifts", &shifts);
    r.param("index_family", INDEX_FAMILY);
    r.verdict(Verdict::new("structure", f.check_structure(), serde_json::json!({ "elements": values.len() })));
    let sf = verify_sum_free(&values, a.n);
    r.verdict(Verdict::new("sum-free", sf.holds, &sf));
    for n in shifts {
        let n = u32::try_from(n).map_err(|_| usage(format!("shift {n} is too large")))?;
        let v = verify_shift_ip(&f, n, a.depth, a.n)?;
        r.verdict(Verdict::new(format!("shift-ip-{n}"), v.holds, &v));
    }
    r.result("elements", &f.elements);
    match &a.out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            write_set_file(&dir.join("f.set"), &values)?;
            r.outputs.push("f.set".into());
            r.emit(Some(&dir.join("report.json")))?;
        }
        None => r.emit(None)?,
    }
    Ok(r.all_hold())
}
