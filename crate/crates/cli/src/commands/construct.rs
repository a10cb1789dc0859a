use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use interp_core::constructors::{
    block_report, check_coherence, extend_zero, mixing_extend, mutation_fault, restriction_mismatches,
    strictly_ergodic_construct, sturmian_factor_bound, sturmian_interpolate, totally_minimal_construct,
    zero_extension_bound, ConstructionTrace, ErgodicConfig, InterpolationProblem, MembershipOracle, MinimalConfig,
    MixingOutcome,
};
use interp_core::intsets::SetKind;
use interp_core::io::{write_atomic, write_word_file};
use interp_core::words::{count_factors, SymbolWord};
use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::json;

use super::{parse_set, Timer};
use crate::report::{decimal_strings, RunReport, Verdict};
use crate::{usage, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Zero,
    Sturmian,
    Mixing,
    Minimal,
    Ergodic,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    kind: Kind,
    /// JSON problem file with `set`, `k`, `bound` and `f`.
    #[arg(long)]
    problem: PathBuf,
    #[arg(long = "out-dir")]
    out_dir: PathBuf,
    /// Required whenever `f` is random or the construction samples.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of levels above level 0 (minimal, ergodic).
    #[arg(long)]
    levels: Option<usize>,
    /// Sample-family cap per level (minimal, ergodic).
    #[arg(long = "sample-cap")]
    sample_cap: Option<usize>,
    /// Universal-word order (mixing).
    #[arg(long)]
    order: Option<usize>,
    /// Largest factor length checked (zero, sturmian).
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Mutated anchors per level that the membership oracle must reject (minimal).
    #[arg(long, default_value_t = 0)]
    faults: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    set: String,
    k: usize,
    bound: u64,
    f: FunctionFile,
}

#[derive(Debug, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum FunctionFile {
    Pairs { pairs: Vec<(u64, u8)> },
    Random { random: String },
    Constant { constant: u8 },
    Cyclic { cyclic: bool },
}

fn load_problem(path: &Path, seed: Option<u64>) -> anyhow::Result<InterpolationProblem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let p: ProblemFile =
        serde_json::from_str(&text).map_err(|e| usage(format!("problem file {}: {e}", path.display())))?;
    let set = parse_set(&p.set)?;
    let problem = match p.f {
        FunctionFile::Pairs { pairs } => InterpolationProblem::new(set, p.k, p.bound, pairs),
        FunctionFile::Random { random } if random == "uniform" => {
            let seed = seed.ok_or_else(|| usage("f is random: pass --seed"))?;
            InterpolationProblem::uniform(set, p.k, p.bound, seed)
        }
        FunctionFile::Random { random } => return Err(usage(format!("unknown distribution {random:?}"))),
        FunctionFile::Constant { constant } => InterpolationProblem::constant(set, p.k, p.bound, constant),
        FunctionFile::Cyclic { cyclic: true } => InterpolationProblem::cyclic(set, p.k, p.bound),
        FunctionFile::Cyclic { cyclic: false } => return Err(usage("\"cyclic\": false names no function")),
    };
    problem.map_err(|e| usage(format!("problem file {}: {e}", path.display())))
}

struct Out<'a> {
    dir: &'a Path,
    report: RunReport,
}

impl Out<'_> {
    fn word(&mut self, name: &str, w: &SymbolWord) -> anyhow::Result<()> {
        write_word_file(&self.dir.join(name), w)?;
        self.report.outputs.push(name.into());
        Ok(())
    }

    fn json(&mut self, name: &str, v: serde_json::Value) -> anyhow::Result<()> {
        let mut s = serde_json::to_string_pretty(&decimal_strings(v))?;
        s.push('\n');
        write_atomic(&self.dir.join(name), s.as_bytes())?;
        self.report.outputs.push(name.into());
        Ok(())
    }

    fn restriction(&mut self, x: &SymbolWord, problem: &InterpolationProblem) -> anyhow::Result<()> {
        let bad = restriction_mismatches(x, problem)?;
        self.report.verdict(Verdict::new("restriction", bad.is_empty(), json!({ "mismatches": bad })));
        Ok(())
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| usage(format!("--kind {kind} needs {flag}")))
}

pub fn run(a: Args) -> Outcome {
    let _t = Timer::start("construct");
    let problem = load_problem(&a.problem, a.seed)?;
    fs::create_dir_all(&a.out_dir).with_context(|| format!("creating {}", a.out_dir.display()))?;
    let mut out = Out { dir: &a.out_dir, report: RunReport::new("construct", a.seed) };
    out.report.param("kind", format!("{:?}", a.kind).to_lowercase());
    out.report.param("set", problem.set().to_spec_string());
    out.report.param("k", problem.k());
    out.report.param("bound", problem.bound());
    out.report.param("f", problem.pairs());
    match a.kind {
        Kind::Zero => zero(&a, &problem, &mut out)?,
        Kind::Sturmian => sturmian(&a, &problem, &mut out)?,
        Kind::Mixing => mixing(&a, &problem, &mut out)?,
        Kind::Minimal => minimal(&a, &problem, &mut out)?,
        Kind::Ergodic => ergodic(&a, &problem, &mut out)?,
    }
    let report = out.report;
    report.emit(Some(&a.out_dir.join("report.json")))?;
    Ok(report.all_hold())
}

fn zero(a: &Args, problem: &InterpolationProblem, out: &mut Out) -> anyhow::Result<()> {
    let n_max = need(a.n_max, "--n-max", "zero")?;
    out.report.param("n_max", n_max);
    let z = extend_zero(problem, n_max)?;
    out.word("x.word", &z.word)?;
    out.restriction(&z.word, problem)?;
    let mut rows = Vec::new();
    let mut holds = true;
    for m in 1..=n_max {
        match zero_extension_bound(problem, &z.word, m) {
            Ok((p, cap)) => {
                holds &= BigUint::from(p) <= cap;
                rows.push(json!({ "m": m, "p": p, "bound": cap.to_string() }));
            }
            Err(interp_core::Error::InvalidParameter(why)) => {
                rows.push(json!({ "m": m, "p": null, "bound": null, "skipped": why }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    out.report.verdict(Verdict::new("complexity-bound", holds, rows));
    out.report.result("profile", &z.profile);
    Ok(())
}

fn sturmian(a: &Args, problem: &InterpolationProblem, out: &mut Out) -> anyhow::Result<()> {
    let n_max = need(a.n_max, "--n-max", "sturmian")?;
    let SetKind::SturmianFloor { cf } = problem.set().kind() else {
        return Err(usage("--kind sturmian needs a set of kind=sturmian"));
    };
    out.report.param("n_max", n_max);
    let x = sturmian_interpolate(cf, problem.pairs(), problem.k(), problem.bound())?;
    out.word("x.word", &x)?;
    out.restriction(&x, problem)?;
    let off_support: Vec<u64> = (1..=x.len() as u64)
        .filter(|&i| x.at(i) != Some(0) && problem.value_at(i).is_none())
        .collect();
    out.report.verdict(Verdict::new("zero-off-S", off_support.is_empty(), json!({ "violations": off_support })));
    let delta = cf.value();
    let mut rows = Vec::new();
    let mut holds = true;
    for m in 1..=n_max.min(x.len()) {
        let p = count_factors(&x, m)?;
        let cap = sturmian_factor_bound(m as u64, delta, problem.k() as u32);
        holds &= BigUint::from(p) <= cap;
        rows.push(json!({ "m": m, "p": p, "bound": cap.to_string() }));
    }
    out.report.verdict(Verdict::new("factor-bound", holds, rows));
    Ok(())
}

fn mixing(a: &Args, problem: &InterpolationProblem, out: &mut Out) -> anyhow::Result<()> {
    let order = need(a.order, "--order", "mixing")?;
    out.report.param("order", order);
    match mixing_extend(problem, order)? {
        MixingOutcome::Extended(e) => {
            out.word("x.word", &e.word)?;
            out.restriction(&e.word, problem)?;
            let found = count_factors(&e.word, order)?;
            let all = (problem.k() as u64).pow(order as u32);
            out.report.verdict(Verdict::new(
                "all-words-present",
                found == all,
                json!({ "order": order, "found": found, "expected": all }),
            ));
            out.json(
                "extension.json",
                json!({ "universal": e.universal.to_string(), "intervals": e.intervals, "cover_order": e.cover_order }),
            )?;
        }
        MixingOutcome::Refused { certificate } => {
            out.json("refusal.json", serde_json::to_value(&certificate)?)?;
            out.report.verdict(Verdict::new("gaps-available", false, certificate));
        }
    }
    Ok(())
}

fn coherence(trace: &ConstructionTrace, out: &mut Out) {
    let c = check_coherence(trace);
    out.report.verdict(Verdict::new("coherence", c.holds(trace.kind), &c));
}

fn write_trace(trace: &ConstructionTrace, out: &mut Out) -> anyhow::Result<()> {
    let mut levels = Vec::new();
    for (i, l) in trace.levels.iter().enumerate() {
        let anchor = format!("w{i}.word");
        out.word(&anchor, &l.anchor)?;
        let primed = match &l.primed_anchor {
            Some(w) => {
                let name = format!("w{i}-primed.word");
                out.word(&name, w)?;
                Some(name)
            }
            None => None,
        };
        levels.push(json!({
            "m": l.m,
            "anchor": anchor,
            "primed_anchor": primed,
            "samples": l.samples.len(),
            "primed_samples": l.primed_samples.len(),
            "samples_capped": l.samples_capped,
            "v": l.v.as_ref().map(|v| v.to_string()),
        }));
    }
    let filled: Vec<usize> = trace.filling_history.iter().map(|x| x.filled_count()).collect();
    out.json(
        "trace.json",
        json!({ "kind": trace.kind, "alphabet": trace.alphabet, "coverage": trace.coverage(), "levels": levels, "filled_per_stage": filled }),
    )?;
    out.word("x.word", &trace.result)
}

fn minimal(a: &Args, problem: &InterpolationProblem, out: &mut Out) -> anyhow::Result<()> {
    let seed = need(a.seed, "--seed", "minimal")?;
    let mut config = MinimalConfig { seed, ..MinimalConfig::default() };
    config.levels = a.levels.unwrap_or(config.levels);
    config.sample_cap = a.sample_cap.unwrap_or(config.sample_cap);
    out.report.param("config", &config);
    out.report.param("faults", a.faults);
    let trace = totally_minimal_construct(problem, &config)?;
    write_trace(&trace, out)?;
    coherence(&trace, out);
    out.restriction(&trace.result, problem)?;
    let mut oracle = MembershipOracle::new(&trace);
    let mut rows = Vec::new();
    let mut holds = true;
    for (lvl, l) in trace.levels.iter().enumerate().skip(1) {
        let anchor = oracle.is_member(l.anchor.symbols(), lvl)?;
        let primed = match &l.primed_anchor {
            Some(w) => oracle.is_member(w.symbols(), lvl)?,
            None => true,
        };
        holds &= anchor && primed;
        rows.push(json!({ "level": lvl, "anchor": anchor, "primed_anchor": primed }));
    }
    let fin = trace.final_level();
    let m = trace.levels[fin].m as usize;
    let mut blocks_ok = 0usize;
    let blocks: Vec<&[u8]> = trace.result.symbols().chunks_exact(m).collect();
    for b in &blocks {
        blocks_ok += oracle.is_member(b, fin)? as usize;
    }
    holds &= blocks_ok == blocks.len();
    out.report.verdict(Verdict::new(
        "membership",
        holds,
        json!({ "anchors": rows, "final_blocks": blocks.len(), "final_blocks_member": blocks_ok }),
    ));
    if a.faults > 0 {
        let mut rejected = 0u64;
        let mut tried = 0u64;
        for lvl in 1..=fin {
            for i in 0..a.faults {
                let (bad, _) = mutation_fault(&trace.levels[lvl].anchor, lvl, &trace, seed ^ (1000 * lvl as u64 + i))?;
                tried += 1;
                rejected += !oracle.is_member(bad.symbols(), lvl)? as u64;
            }
        }
        out.report.verdict(Verdict::new(
            "mutations-rejected",
            rejected == tried,
            json!({ "tried": tried, "rejected": rejected }),
        ));
    }
    Ok(())
}

fn ergodic(a: &Args, problem: &InterpolationProblem, out: &mut Out) -> anyhow::Result<()> {
    let seed = need(a.seed, "--seed", "ergodic")?;
    let mut config = ErgodicConfig { seed, ..ErgodicConfig::default() };
    config.levels = a.levels.unwrap_or(config.levels);
    config.sample_cap = a.sample_cap.unwrap_or(config.sample_cap);
    out.report.param("config", &config);
    let trace = strictly_ergodic_construct(problem, &config)?;
    write_trace(&trace, out)?;
    coherence(&trace, out);
    out.restriction(&trace.result, problem)?;
    let fin = trace.final_level();
    let reports = if fin >= 2 {
        (1..fin).map(|lvl| block_report(trace.result.symbols(), lvl, &trace)).collect::<Result<Vec<_>, _>>()?
    } else {
        vec![block_report(trace.result.symbols(), 0, &trace)?]
    };
    let holds = reports.iter().all(|r| r.holds());
    out.report.verdict(Verdict::new("block-frequencies", holds, reports));
    Ok(())
}
