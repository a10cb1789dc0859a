use std::fmt::Write;
use std::path::PathBuf;

use interp_core::entropy_count::{brute_force_count_with_limit, growth_rate_profile, DEFAULT_ENUMERATION_LIMIT};
use interp_core::io::write_atomic;
use interp_core::rational::parse_rational;
use num_bigint::BigUint;

use super::{range_list, List, Timer};
use crate::{usage, Outcome};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Word lengths: `a..b`, `a..=b` or a comma list.
    #[arg(long, value_parser = range_list)]
    m: List,
    /// Zero-density bound δ as `p/q` or a decimal.
    #[arg(long)]
    delta: String,
    /// Alphabet size.
    #[arg(long)]
    k: u32,
    /// Cross-check every count by enumeration.
    #[arg(long)]
    oracle: bool,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(a: Args) -> Outcome {
    let _t = Timer::start("count");
    let delta = parse_rational(&a.delta).map_err(|e| usage(format!("--delta: {e}")))?;
    let ms: Vec<u64> = a.m.0;
    if ms.is_empty() {
        return Err(usage("--m names no lengths"));
    }
    if a.oracle {
        if let Some(&m) = ms.iter().find(|&&m| (a.k as f64).powf(m as f64) > DEFAULT_ENUMERATION_LIMIT as f64) {
            return Err(usage(format!(
                "--oracle refuses k^m = {}^{m} > {DEFAULT_ENUMERATION_LIMIT}",
                a.k
            )));
        }
    }
    let profile = growth_rate_profile(delta, a.k, &ms)?;
    let mut csv = String::from("m,count,log_rate,analytic_limit,inf_so_far");
    csv.push_str(if a.oracle { ",oracle_count,oracle_match\n" } else { "\n" });
    let mut all_match = true;
    for p in &profile.points {
        let r = &p.result;
        write!(csv, "{},{},{},{},{}", r.m, r.count, r.log_rate, r.analytic_limit, p.inf_so_far)?;
        if a.oracle {
            let m = u32::try_from(r.m).map_err(|_| usage("m too large for enumeration"))?;
            let brute = brute_force_count_with_limit(m, delta, a.k, DEFAULT_ENUMERATION_LIMIT)?;
            let ok = BigUint::from(brute) == r.count;
            all_match &= ok;
            write!(csv, ",{brute},{ok}")?;
        }
        csv.push('\n');
    }
    match &a.out {
        Some(path) => write_atomic(path, csv.as_bytes())?,
        None => print!("{csv}"),
    }
    Ok(all_match)
}
