pub mod analyze;
pub mod construct;
pub mod count;
pub mod verify_f;
pub mod word_stats;

use std::time::Instant;

use crate::usage;

/// Accepts `3` as well as the labelled form `g=3`.
pub fn scale(s: &str) -> Result<u64, String> {
    let v = s.split_once('=').map_or(s, |(_, v)| v);
    v.trim().parse().map_err(|_| format!("expected a positive integer, got {s:?}"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct List(pub Vec<u64>);

/// `a..b`, `a..=b` or a comma list.
pub fn range_list(s: &str) -> Result<List, String> {
    parse_list(s).map(List)
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    let bad = || format!("expected a..b, a..=b or a comma list, got {s:?}");
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..=") {
        return Ok((num(a)?..=num(b)?).collect());
    }
    if let Some((a, b)) = s.split_once("..") {
        return Ok((num(a)?..num(b)?).collect());
    }
    s.split(',').map(num).collect()
}

pub fn parse_set(spec: &str) -> anyhow::Result<interp_core::intsets::IntegerSetModel> {
    spec.parse().map_err(|e| usage(format!("set spec {spec:?}: {e}")))
}

pub struct Timer {
    command: &'static str,
    start: Instant,
}

impl Timer {
    pub fn start(command: &'static str) -> Self {
        Timer { command, start: Instant::now() }
    }
}

impl Drop for Timer {
    fn drop(&mut self) {
        eprintln!("{}: {:.3}s", self.command, self.start.elapsed().as_secs_f64());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scales_and_ranges() {
        assert_eq!(scale("g=3"), Ok(3));
        assert_eq!(scale("10"), Ok(10));
        assert!(scale("g=").is_err());
        assert_eq!(parse_list("1..4"), Ok(vec![1, 2, 3]));
        assert_eq!(parse_list("1..=3"), Ok(vec![1, 2, 3]));
        assert_eq!(range_list("10,50,100"), Ok(List(vec![10, 50, 100])));
        assert!(range_list("1..x").is_err());
    }
}
