//! Instance JSON: `{"kind":..., "dim":..., "objects":[...]}` with balls as
//! `{"c":[...],"r":x}`, triangles as `{"p":[[x,y],...]}`, and ellipses as
//! `{"c":[x,y],"a":x,"b":x,"theta":x}`. Round-trips are lossless: floats are
//! emitted in shortest-exact decimal form.

use super::{GeomError, GeomObject, GeometricInstance};
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    kind: String,
    dim: usize,
    objects: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn save_instance(inst: &GeometricInstance) -> String {
    let kind = inst.kind().unwrap_or("balls").to_string();
    let dim = inst.dim().unwrap_or(2);
    let objects = inst
        .objects()
        .iter()
        .map(|o| match o {
            GeomObject::Ball { center, radius } => json!({"c": center, "r": radius}),
            GeomObject::Triangle { pts } => json!({"p": pts}),
            GeomObject::Ellipse { center, a, b, theta } => {
                json!({"c": center, "a": a, "b": b, "theta": theta})
            }
        })
        .collect();
    let doc = InstanceJson {
        kind,
        dim,
        objects,
        labels: inst.labels().map(|l| l.to_vec()),
    };
    serde_json::to_string_pretty(&doc).expect("instance serializes")
}

pub fn load_instance(s: &str) -> Result<GeometricInstance, GeomError> {
    let doc: InstanceJson =
        serde_json::from_str(s).map_err(|e| GeomError::Parse(e.to_string()))?;
    let mut objects = Vec::with_capacity(doc.objects.len());
    for (index, value) in doc.objects.iter().enumerate() {
        let obj = parse_object(&doc.kind, value)
            .map_err(|reason| GeomError::BadObject { index, reason })?;
        if obj.dim() != doc.dim {
            return Err(GeomError::BadObject {
                index,
                reason: format!("dimension {} does not match header dim {}", obj.dim(), doc.dim),
            });
        }
        objects.push(obj);
    }
    let inst = GeometricInstance::new(objects)?;
    Ok(match doc.labels {
        Some(labels) if labels.len() == inst.len() => inst.with_labels(labels),
        Some(_) => return Err(GeomError::Parse("labels length mismatch".into())),
        None => inst,
    })
}

fn parse_object(kind: &str, value: &serde_json::Value) -> Result<GeomObject, String> {
    let f = |v: &serde_json::Value, field: &str| -> Result<f64, String> {
        v.get(field)
            .and_then(|x| x.as_f64())
            .ok_or_else(|| format!("missing or non-numeric field '{field}'"))
    };
    match kind {
        "balls" => {
            let center = value
                .get("c")
                .and_then(|c| c.as_array())
                .ok_or("missing center array 'c'")?
                .iter()
                .map(|x| x.as_f64().ok_or("non-numeric center coordinate"))
                .collect::<Result<Vec<f64>, _>>()?;
            Ok(GeomObject::Ball {
                center,
                radius: f(value, "r")?,
            })
        }
        "triangles" => {
            let pts_raw = value
                .get("p")
                .and_then(|p| p.as_array())
                .ok_or("missing points array 'p'")?;
            if pts_raw.len() != 3 {
                return Err("triangle needs exactly 3 points".into());
            }
            let mut pts = [[0.0; 2]; 3];
            for (i, p) in pts_raw.iter().enumerate() {
                let xy = p.as_array().ok_or("point is not an array")?;
                if xy.len() != 2 {
                    return Err("point must have 2 coordinates".into());
                }
                for (j, c) in xy.iter().enumerate() {
                    pts[i][j] = c.as_f64().ok_or("non-numeric point coordinate")?;
                }
            }
            Ok(GeomObject::Triangle { pts })
        }
        "ellipses" => {
            let c = value
                .get("c")
                .and_then(|c| c.as_array())
                .ok_or("missing center array 'c'")?;
            if c.len() != 2 {
                return Err("ellipse center must have 2 coordinates".into());
            }
            Ok(GeomObject::Ellipse {
                center: [
                    c[0].as_f64().ok_or("non-numeric center coordinate")?,
                    c[1].as_f64().ok_or("non-numeric center coordinate")?,
                ],
                a: f(value, "a")?,
                b: f(value, "b")?,
                theta: f(value, "theta")?,
            })
        }
        other => Err(format!("unknown kind '{other}'")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_all_variants() {
        let cases = [
            GeometricInstance::new(vec![
                GeomObject::ball(vec![0.1, 0.2, 0.3], 1.5),
                GeomObject::ball(vec![1.0 / 3.0, 2.0f64.sqrt(), -7.25], 0.25),
            ])
            .unwrap(),
            GeometricInstance::new(vec![GeomObject::Triangle {
                pts: [[0.0, 0.0], [4.0, 0.0], [2.0, 3.0]],
            }])
            .unwrap(),
            GeometricInstance::new(vec![GeomObject::Ellipse {
                center: [0.5, -0.5],
                a: 2.0,
                b: 1.0,
                theta: std::f64::consts::FRAC_PI_3,
            }])
            .unwrap()
            .with_labels(vec!["e0".into()]),
        ];
        for inst in cases {
            let reloaded = load_instance(&save_instance(&inst)).unwrap();
            assert_eq!(reloaded, inst);
            assert_eq!(reloaded.labels(), inst.labels());
        }
    }

    #[test]
    fn dimension_mismatch_names_object() {
        let doc = r#"{"kind":"balls","dim":3,"objects":[{"c":[0,0,0],"r":1},{"c":[0,0],"r":1}]}"#;
        match load_instance(doc) {
            Err(GeomError::BadObject { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected BadObject, got {other:?}"),
        }
    }

    #[test]
    fn schema_violations_error() {
        assert!(load_instance("{}").is_err());
        assert!(load_instance(r#"{"kind":"balls","dim":2,"objects":[{"r":1}]}"#).is_err());
        assert!(load_instance(r#"{"kind":"widgets","dim":2,"objects":[{}]}"#).is_err());
    }
}
