//! The `key=value` generator grammar, e.g. `kind=ap a=3 b=0`,
//! `kind=sturmian cf=0,2,2,2`, `kind=powers base=2`.
//!
//! Parts joined by `|` form a union; `shift=t` on a part translates it.

use std::collections::BTreeMap;
use std::str::FromStr;

use super::IntegerSetModel;
use crate::rational::{parse_rational, ContinuedFraction};
use crate::{Error, Result};

impl FromStr for IntegerSetModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::Parse(format!("empty part in set spec {s:?}")));
        }
        let mut models = parts.into_iter().map(parse_part).collect::<Result<Vec<_>>>()?;
        if models.len() == 1 {
            Ok(models.pop().expect("one part"))
        } else {
            IntegerSetModel::union(models)
        }
    }
}

fn parse_part(s: &str) -> Result<IntegerSetModel> {
    let mut kv = BTreeMap::new();
    for tok in s.split_whitespace() {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
        if kv.insert(k, v).is_some() {
            return Err(Error::Parse(format!("duplicate key {k:?}")));
        }
    }
    let kind = kv.remove("kind").ok_or_else(|| Error::Parse(format!("missing kind= in {s:?}")))?;
    let shift = kv.remove("shift").map(|v| parse_num::<i64>("shift", v)).transpose()?;
    let mut take = |key: &str| kv.remove(key).ok_or_else(|| Error::Parse(format!("kind={kind} needs {key}=")));

    let model = match kind {
        "ap" => IntegerSetModel::arithmetic(parse_num("a", take("a")?)?, parse_num("b", take("b")?)?)?,
        "powers" => IntegerSetModel::powers(parse_num("base", take("base")?)?)?,
        "monomial" => IntegerSetModel::monomial(parse_num("exp", take("exp")?)?)?,
        "sturmian" => {
            let cf = match (kv.remove("cf"), kv.remove("delta")) {
                (Some(cf), None) => cf.parse::<ContinuedFraction>()?,
                (None, Some(d)) => ContinuedFraction::of_rational(parse_rational(d)?),
                _ => return Err(Error::Parse("kind=sturmian needs exactly one of cf= or delta=".into())),
            };
            IntegerSetModel::sturmian(cf)?
        }
        "explicit" => {
            let values = parse_list(take("values")?)?;
            let window = match kv.remove("window") {
                Some(w) => parse_num("window", w)?,
                None => values.iter().copied().max().unwrap_or(0),
            };
            IntegerSetModel::explicit(values, window)?
        }
        "file" => {
            let path = take("path")?;
            let values = crate::io::read_set_file(std::path::Path::new(path))?;
            let window = match kv.remove("window") {
                Some(w) => parse_num("window", w)?,
                None => values.last().copied().unwrap_or(0),
            };
            IntegerSetModel::explicit(values, window)?
        }
        "sums" => IntegerSetModel::finite_sums(parse_list(take("gens")?)?, parse_num("depth", take("depth")?)?)?,
        other => return Err(Error::Parse(format!("unknown set kind {other:?}"))),
    };
    if let Some(extra) = kv.keys().next() {
        return Err(Error::Parse(format!("unexpected key {extra:?} for kind={kind}")));
    }
    match shift {
        Some(t) => model.shift(t),
        None => Ok(model),
    }
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("bad value for {key}: {v:?}")))
}

fn parse_list(v: &str) -> Result<Vec<u64>> {
    if v.is_empty() {
        return Ok(Vec::new());
    }
    v.split(',').map(|t| parse_num("list element", t)).collect()
}
