//! WebAssembly bindings for the lattice explorer in `www/`. Every export
//! returns a JSON string and throws the error message on failure.

use serde::Serialize;
use twoabs::lab::RingCtx;
use twoabs::{classify_z, parse_ideal, Caps, ClassificationReport, FactoredInteger, OracleCheck, RingDescriptor};
use wasm_bindgen::prelude::*;

/// Bounds kept small enough for an interactive page.
const CAPS: Caps = Caps {
    ring: 512,
    cubic: 512,
    lattice: 128,
};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Node {
    index: usize,
    label: String,
    size: usize,
    /// Length of the longest chain from the zero ideal.
    height: usize,
    report: Option<ClassificationReport>,
}

#[derive(Serialize)]
struct Lattice {
    ring: String,
    size: u32,
    nodes: Vec<Node>,
    covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ZReport {
    report: ClassificationReport,
    oracle: String,
}

fn label(gens: &[u64]) -> String {
    match gens {
        [g] => format!("({g})"),
        _ => {
            let gs: Vec<String> = gens.iter().map(u64::to_string).collect();
            format!("[{}]", gs.join(","))
        }
    }
}

fn context(ring: &str) -> Result<RingCtx, String> {
    let desc: RingDescriptor = ring.parse().map_err(|e: twoabs::Error| e.to_string())?;
    RingCtx::build(&desc, &CAPS).map_err(|e| e.to_string())
}

pub fn lattice_json(ring: &str) -> Result<String, String> {
    let ctx = context(ring)?;
    let lattice = ctx.lattice();
    let covers = lattice.covers();
    let mut height = vec![0usize; lattice.len()];
    for &(i, j) in &covers {
        height[j] = height[j].max(height[i] + 1);
    }
    let mut nodes = Vec::new();
    for (i, &height) in height.iter().enumerate() {
        let report = if i == ctx.top() {
            None
        } else {
            Some(ctx.report(i).map_err(|e| e.to_string())?)
        };
        nodes.push(Node {
            index: i,
            label: label(&ctx.generators(i)),
            size: lattice.get(i).len(),
            height,
            report,
        });
    }
    let out = Lattice {
        ring: ctx.ring().to_string(),
        size: ctx.ring().size(),
        nodes,
        covers,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

pub fn classify_json(ring: &str, ideal: &str) -> Result<String, String> {
    let ctx = context(ring)?;
    let q = parse_ideal(ctx.ring(), ideal).map_err(|e| e.to_string())?;
    if !q.is_proper() {
        return Err(twoabs::Error::ImproperIdeal.to_string());
    }
    let i = ctx.index(q.elements());
    Ok(ctx.report(i).map_err(|e| e.to_string())?.to_json())
}

pub fn zideal_json(n: &str) -> Result<String, String> {
    let f: FactoredInteger = n.parse().map_err(|e: twoabs::Error| e.to_string())?;
    let (report, check) = classify_z(&f, &CAPS).map_err(|e| e.to_string())?;
    let oracle = match check {
        OracleCheck::Agreed { modulus } => format!("agrees with the zero ideal of Z/{modulus}"),
        OracleCheck::Skipped { modulus, cap } => format!("Z/{modulus} is above the scan cap {cap}"),
        OracleCheck::Analytic => "not applicable to 0Z".to_string(),
    };
    serde_json::to_string(&ZReport { report, oracle }).map_err(|e| e.to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Ideals of `ring` with their classifications and Hasse covers.
#[wasm_bindgen]
pub fn lattice(ring: &str) -> Result<String, JsValue> {
    js(lattice_json(ring))
}

/// Classification report for one proper ideal.
#[wasm_bindgen]
pub fn classify(ring: &str, ideal: &str) -> Result<String, JsValue> {
    js(classify_json(ring, ideal))
}

/// Classification of `nZ` with the oracle status.
#[wasm_bindgen]
pub fn zideal(n: &str) -> Result<String, JsValue> {
    js(zideal_json(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn lattice_of_z12() {
        let v = parse(&lattice_json("zn:12").unwrap());
        let nodes = v["nodes"].as_array().unwrap();
        assert_eq!(nodes.len(), 6);
        assert_eq!(v["covers"].as_array().unwrap().len(), 7);
        let heights: Vec<u64> = nodes.iter().map(|n| n["height"].as_u64().unwrap()).collect();
        assert_eq!(heights, [0, 1, 1, 2, 2, 3]);
        assert_eq!(nodes[0]["label"], "(0)");
        assert_eq!(nodes[0]["report"]["orders"]["twoOrd"], 2);
        assert!(nodes[5]["report"].is_null());
    }

    #[test]
    fn classify_matches_the_library() {
        let v = parse(&classify_json("zn:6", "(0)").unwrap());
        assert_eq!(v["flags"]["special"], true);
        let v = parse(&classify_json("idz:(zn:2)^2", "(0)").unwrap());
        assert_eq!(v["orders"]["ord"], 2);
        assert!(classify_json("zn:6", "(1)").is_err());
    }

    #[test]
    fn zideal_reports_the_oracle() {
        let v = parse(&zideal_json("12").unwrap());
        assert_eq!(v["report"]["flags"]["twoAbsorbingPrimary"], true);
        assert_eq!(v["oracle"], "agrees with the zero ideal of Z/12");
        let v = parse(&zideal_json("2^2*3*5").unwrap());
        assert_eq!(v["report"]["flags"]["twoAbsorbingPrimary"], false);
    }

    #[test]
    fn errors_are_messages() {
        assert!(lattice_json("zn:").unwrap_err().contains("parse error"));
        assert!(lattice_json("zn:1000").unwrap_err().contains("exceeds cap"));
        assert!(zideal_json("x").is_err());
    }
}
