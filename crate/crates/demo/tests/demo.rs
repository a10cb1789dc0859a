use interp_demo::{banach_profile_json, growth_rates_json, sturmian_complexity_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn sturmian_rows_match_n_plus_one() {
    let v = parse(sturmian_complexity_json("0,2,2,2,2,2,2,2,2,2", 5000, 40).unwrap());
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 40);
    assert!(rows.iter().all(|r| r["p"] == r["sturmian"]));
    assert_eq!(v["prefix"].as_str().unwrap().len(), 120);
    assert!(sturmian_complexity_json("0,x", 100, 10).is_err());
    assert!(sturmian_complexity_json("0,2", 1_000_000, 10).is_err());
}

#[test]
fn banach_rows_for_progressions_and_powers() {
    let v = parse(banach_profile_json("kind=ap a=4 b=1", 10_000, 1024).unwrap());
    assert_eq!(v["exact"], "1/4");
    let last = v["rows"].as_array().unwrap().last().unwrap();
    assert_eq!(last["n"], 1024);
    assert_eq!(last["count"], 256);
    let v = parse(banach_profile_json("kind=powers base=2", 1 << 20, 1 << 19).unwrap());
    assert!(v["rows"].as_array().unwrap().last().unwrap()["density"].as_f64().unwrap() < 1e-4);
    assert!(banach_profile_json("kind=nope", 100, 10).is_err());
    assert!(banach_profile_json("kind=ap a=2 b=0", 100, 80).is_err());
}

#[test]
fn growth_rates_rise_toward_the_limit() {
    let v = parse(growth_rates_json("1/2", 2, 400, 50).unwrap());
    let limit = v["limit"].as_f64().unwrap();
    let rates: Vec<f64> = v["rows"].as_array().unwrap().iter().map(|r| r["rate"].as_f64().unwrap()).collect();
    assert_eq!(rates.len(), 8);
    assert!(rates.windows(2).all(|w| w[0] < w[1]));
    assert!(rates.iter().all(|&r| r < limit));
    assert!(growth_rates_json("3/4", 2, 100, 10).is_err());
    assert!(growth_rates_json("1/2", 2, 100, 0).is_err());
}
