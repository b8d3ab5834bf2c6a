use super::{DimVector, Quiver, Side};
use crate::error::{bail, Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    name: String,
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize, Default)]
struct InvolutionJson {
    #[serde(default)]
    vertices: BTreeMap<String, String>,
    #[serde(default)]
    arrows: BTreeMap<String, String>,
    /// Optional explicit choice of the `+` side; defaults to the earlier-declared member.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    plus: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<InvolutionJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sigma: BTreeMap<String, i8>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    varsigma: BTreeMap<String, i8>,
}

pub(super) fn quiver_from_json(text: &str) -> Result<Quiver> {
    let raw: QuiverJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("quiver JSON: {}", e)))?;
    let arrows = raw.arrows.into_iter().map(|a| (a.name, a.src, a.tgt)).collect();
    let mut q = Quiver::new(raw.vertices, arrows)?;
    let Some(inv) = raw.involution else {
        if !raw.sigma.is_empty() || !raw.varsigma.is_empty() {
            bail!(Structure, "sigma/varsigma given without an involution");
        }
        return Ok(q);
    };
    let vm: Vec<(&str, &str)> = inv.vertices.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let am: Vec<(&str, &str)> = inv.arrows.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let sg: Vec<(&str, i8)> = raw.sigma.iter().map(|(a, s)| (a.as_str(), *s)).collect();
    let vs: Vec<(&str, i8)> = raw.varsigma.iter().map(|(a, s)| (a.as_str(), *s)).collect();
    let mut pv = Vec::new();
    let mut pa = Vec::new();
    for name in &inv.plus {
        if q.vertices.contains(name) {
            pv.push(name.as_str());
        } else if q.arrows.iter().any(|a| &a.name == name) {
            pa.push(name.as_str());
        } else {
            bail!(Structure, "unknown name {:?} in plus list", name);
        }
    }
    let data = q.build_involution(&vm, &am, &sg, &vs, &pv, &pa)?;
    let report = q.validate_duality(&data);
    if !report.is_empty() {
        let msgs: Vec<String> = report.iter().map(|v| v.to_string()).collect();
        bail!(Argument, "invalid duality structure: {}", msgs.join("; "));
    }
    q.involution = Some(data);
    Ok(q)
}

pub(super) fn quiver_to_json(q: &Quiver) -> Value {
    let arrows = q
        .arrows
        .iter()
        .map(|a| ArrowJson { name: a.name.clone(), src: q.vertices[a.src].clone(), tgt: q.vertices[a.tgt].clone() })
        .collect();
    let mut out = QuiverJson {
        vertices: q.vertices.clone(),
        arrows,
        involution: None,
        sigma: BTreeMap::new(),
        varsigma: BTreeMap::new(),
    };
    if let Some(inv) = &q.involution {
        let mut ij = InvolutionJson::default();
        for (i, &j) in inv.vertex_map.iter().enumerate() {
            ij.vertices.insert(q.vertices[i].clone(), q.vertices[j].clone());
            if inv.vertex_side[i] == Side::Plus {
                ij.plus.push(q.vertices[i].clone());
            }
            out.sigma.insert(q.vertices[i].clone(), inv.sigma[i]);
        }
        for (a, &b) in inv.arrow_map.iter().enumerate() {
            ij.arrows.insert(q.arrows[a].name.clone(), q.arrows[b].name.clone());
            if inv.arrow_side[a] == Side::Plus {
                ij.plus.push(q.arrows[a].name.clone());
            }
            out.varsigma.insert(q.arrows[a].name.clone(), inv.varsigma[a]);
        }
        out.involution = Some(ij);
    }
    serde_json::to_value(out).expect("quiver JSON serialization cannot fail")
}

/// Reads `{"vertex": n, ...}`; unlisted vertices are zero.
pub(super) fn dim_from_json(q: &Quiver, v: &Value) -> Result<DimVector> {
    let Value::Object(map) = v else {
        bail!(Parse, "dimension vector JSON must be an object");
    };
    let mut out = DimVector::zero(q.n_vertices());
    for (name, val) in map {
        let i = q.vertex_index(name)?;
        match val.as_u64() {
            Some(n) if n <= u32::MAX as u64 => out.0[i] = n as u32,
            _ => bail!(Parse, "entry for {:?} must be a nonnegative integer", name),
        }
    }
    Ok(out)
}

pub fn dim_to_json(q: &Quiver, d: &DimVector) -> Value {
    let mut map = Map::new();
    for (i, name) in q.vertices.iter().enumerate() {
        map.insert(name.clone(), Value::from(d.get(i)));
    }
    Value::Object(map)
}
