use std::path::PathBuf;

use interp_core::io::read_word_file;
use interp_core::rational::parse_rational;
use interp_core::words::{complexity_profile, entropy_estimate, is_balanced, mechanical_word, SymbolWord};
use serde_json::json;

use super::Timer;
use crate::report::{RunReport, Verdict};
use crate::{usage, Outcome};

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["word", "mechanical"])))]
pub struct Args {
    /// Word file (`k=<k>` header, then symbols).
    #[arg(long)]
    word: Option<PathBuf>,
    /// Generate the mechanical word of slope δ instead.
    #[arg(long, requires = "len")]
    mechanical: Option<String>,
    /// Length of the generated word.
    #[arg(long)]
    len: Option<usize>,
    /// Largest factor length, at most half the word length.
    #[arg(long = "n-max")]
    n_max: usize,
    /// Check balance for every factor length up to n-max.
    #[arg(long)]
    balanced: bool,
    #[arg(long)]
    report: Option<PathBuf>,
}

pub fn run(a: Args) -> Outcome {
    let _t = Timer::start("word-stats");
    let mut r = RunReport::new("word-stats", None);
    let w: SymbolWord = match (&a.word, &a.mechanical) {
        (Some(path), _) => {
            r.param("word", path.display().to_string());
            read_word_file(path).map_err(|e| usage(e.to_string()))?
        }
        (None, Some(delta)) => {
            let d = parse_rational(delta).map_err(|e| usage(format!("--mechanical: {e}")))?;
            let len = a.len.expect("clap enforces --len");
            r.param("mechanical", d.to_string());
            r.param("len", len);
            mechanical_word(d, len)?
        }
        (None, None) => unreachable!("clap enforces a source"),
    };
    r.param("n_max", a.n_max);
    let profile = complexity_profile(&w, a.n_max)?;
    let estimate = entropy_estimate(&profile)?;
    if a.balanced {
        let unbalanced = (1..=a.n_max).filter_map(|n| is_balanced(&w, n).map(|b| (!b).then_some(n)).transpose());
        let unbalanced = unbalanced.collect::<Result<Vec<_>, _>>()?;
        r.verdict(Verdict::new("balanced", unbalanced.is_empty(), json!({ "unbalanced_lengths": unbalanced })));
    }
    r.result("length", w.len());
    r.result("alphabet", w.alphabet());
    r.result("profile", &profile);
    r.result("entropy", estimate);
    r.emit(a.report.as_deref())?;
    Ok(r.all_hold())
}
