//! JSON rendering of a region report.

use super::pipeline::{approx, RegionReport};
use crate::arith::rat_to_string;
use serde::Serialize;
use serde_json::value::RawValue;

/// 17 significant digits, which round-trips every f64.
fn float(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { format!("{x:.16e}") } else { "null".to_string() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

#[derive(Serialize)]
struct BoundsJson {
    lemma1: u128,
    theorem2: u128,
    theorem1: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    corollary1: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corollary2: Option<u128>,
}

#[derive(Serialize)]
struct PointJson {
    r: String,
    p: String,
    r_approx: Box<RawValue>,
    p_approx: Box<RawValue>,
    stable: usize,
    unstable: usize,
    region: usize,
}

#[derive(Serialize)]
struct ComponentJson {
    source: &'static str,
    poly: String,
    isolated: bool,
    separating: bool,
}

#[derive(Serialize)]
struct ReportJson {
    border: String,
    degree: u32,
    bounds: BoundsJson,
    points: Vec<PointJson>,
    region_count: usize,
    has_stable_region: bool,
    components: Vec<ComponentJson>,
    warnings: Vec<String>,
}

/// Pretty-printed report with a fixed key order.
pub fn emit_json(rep: &RegionReport) -> String {
    let b = &rep.bounds;
    let doc = ReportJson {
        border: rep.border.h.to_string(),
        degree: rep.degree(),
        bounds: BoundsJson {
            lemma1: b.lemma1,
            theorem2: b.theorem2,
            theorem1: b.theorem1,
            corollary1: b.corollary1,
            corollary2: b.corollary2,
        },
        points: rep
            .points
            .iter()
            .map(|pt| {
                let (x, y) = approx(pt);
                PointJson {
                    r: rat_to_string(&pt.r),
                    p: rat_to_string(&pt.p),
                    r_approx: float(x),
                    p_approx: float(y),
                    stable: pt.stable,
                    unstable: pt.unstable,
                    region: pt.region,
                }
            })
            .collect(),
        region_count: rep.region_count,
        has_stable_region: rep.has_stable_region,
        components: rep
            .components
            .iter()
            .map(|c| ComponentJson {
                source: c.source.as_str(),
                poly: c.poly.to_string(),
                isolated: c.isolated,
                separating: c.separating,
            })
            .collect(),
        warnings: rep.warnings.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use crate::cli::parse::parse_input;
    use crate::cli::pipeline::run_pipeline;
    use serde_json::Value;

    fn report(text: &str) -> RegionReport {
        run_pipeline(&parse_input(text).unwrap()).unwrap()
    }

    #[test]
    fn key_order() {
        let text = emit_json(&report("poly: s + r"));
        let keys = ["\"border\"", "\"degree\"", "\"bounds\"", "\"points\"", "\"region_count\"", "\"has_stable_region\""];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(text.find("\"lemma1\"").unwrap() < text.find("\"theorem2\"").unwrap());
        let pk = ["\"r\"", "\"p\"", "\"r_approx\"", "\"p_approx\"", "\"stable\"", "\"unstable\"", "\"region\""];
        let pos: Vec<usize> = pk.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn round_trip() {
        let rep = report("poly: s^2 + r*s + p - 1/3");
        let v: Value = serde_json::from_str(&emit_json(&rep)).unwrap();
        assert_eq!(v["border"].as_str().unwrap(), rep.border.h.to_string());
        assert_eq!(v["region_count"].as_u64().unwrap() as usize, rep.region_count);
        let pts = v["points"].as_array().unwrap();
        assert_eq!(pts.len(), rep.points.len());
        for (j, pt) in pts.iter().zip(&rep.points) {
            assert_eq!(parse_rational(j["r"].as_str().unwrap()).unwrap(), pt.r);
            assert_eq!(parse_rational(j["p"].as_str().unwrap()).unwrap(), pt.p);
            assert_eq!(j["r_approx"].as_f64().unwrap(), approx(pt).0);
            assert_eq!(j["p_approx"].as_f64().unwrap(), approx(pt).1);
            assert_eq!(j["stable"].as_u64().unwrap() as usize, pt.stable);
            assert_eq!(j["region"].as_u64().unwrap() as usize, pt.region);
        }
    }

    #[test]
    fn empty_border_single_point() {
        let v: Value = serde_json::from_str(&emit_json(&report("poly: s + 1 + 0*r"))).unwrap();
        assert_eq!(v["region_count"], 1);
        assert_eq!(v["points"].as_array().unwrap().len(), 1);
        assert_eq!(v["has_stable_region"], true);
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(float(0.1).get(), "1.0000000000000001e-1");
        assert_eq!(float(-2.5).get(), "-2.5000000000000000e0");
    }
}
