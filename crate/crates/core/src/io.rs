//! JSON files and short textual specs for groups, homomorphisms, algebras
//! and diagrams. The algebra layout is documented in `docs/algebra-schema.md`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::group::{Elem, GroupError, GroupHom, GroupTable, RawGroup};
use crate::heegaard::{lens_pq_diagram, s1_x_s2_diagram, ColoredDiagram, Crossing, CrossingId, HeegaardDiagram};
use crate::hopf::{build_function_hopf, build_kac_paljutkin, coopposite, opposite, HopfParts, HopfPiCoalgebra, StructureError};
use crate::invariant::InvariantValue;
use crate::scalar::Scalar;
use crate::tensor::DenseTensor;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Spec(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

pub fn read_text(path: impl AsRef<Path>) -> Result<String, IoError> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn parse_count(text: &str, what: &str) -> Result<usize, IoError> {
    text.parse().map_err(|_| IoError::Spec(format!("{what}: expected a positive integer, got {text:?}")))
}

/// `cyclic:N`, `symmetric:N`, `trivial`, an inline JSON table, or a path to one.
pub fn parse_group_spec(spec: &str) -> Result<GroupTable, IoError> {
    let spec = spec.trim();
    if let Some(n) = spec.strip_prefix("cyclic:") {
        return Ok(GroupTable::cyclic(parse_count(n, "cyclic group order")?)?);
    }
    if let Some(n) = spec.strip_prefix("symmetric:") {
        return Ok(GroupTable::symmetric(parse_count(n, "symmetric group degree")?)?);
    }
    if spec == "trivial" {
        return Ok(GroupTable::trivial());
    }
    let text = if spec.starts_with('{') { spec.to_string() } else { read_text(spec)? };
    let raw: RawGroup = serde_json::from_str(&text)?;
    Ok(GroupTable::from_table(raw.names, raw.mul)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Spec(String),
    Table(RawGroup),
}

impl GroupRef {
    pub fn resolve(&self) -> Result<GroupTable, IoError> {
        match self {
            GroupRef::Spec(s) => parse_group_spec(s),
            GroupRef::Table(raw) => Ok(GroupTable::from_table(raw.names.clone(), raw.mul.clone())?),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct HomFile {
    source: GroupRef,
    target: GroupRef,
    image: Vec<String>,
}

/// `sign:N` (`sign3` for `S₃`), `mod:N:M`, `trivial:N`, `id:<group spec>`, or a
/// JSON file `{"source", "target", "image"}` with images given by name.
pub fn parse_phi_spec(spec: &str) -> Result<GroupHom, IoError> {
    let spec = spec.trim();
    if spec == "sign3" {
        return Ok(GroupHom::sign(3)?);
    }
    if let Some(n) = spec.strip_prefix("sign:") {
        return Ok(GroupHom::sign(parse_count(n, "sign degree")?)?);
    }
    if let Some(rest) = spec.strip_prefix("mod:") {
        let (n, m) = rest.split_once(':').ok_or_else(|| IoError::Spec(format!("expected mod:N:M, got {spec:?}")))?;
        return Ok(GroupHom::reduction(parse_count(n, "mod source")?, parse_count(m, "mod target")?)?);
    }
    if let Some(n) = spec.strip_prefix("trivial:") {
        return Ok(GroupHom::to_trivial(GroupTable::cyclic(parse_count(n, "cyclic order")?)?));
    }
    if let Some(g) = spec.strip_prefix("id:") {
        return Ok(GroupHom::identity(parse_group_spec(g)?));
    }
    let file: HomFile = serde_json::from_str(&read_text(spec)?)?;
    let (source, target) = (file.source.resolve()?, file.target.resolve()?);
    let image = file.image.iter().map(|n| target.index_of(n)).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom::new(source, target, image)?)
}

/// `kac-paljutkin`, `function:<phi spec>`, optionally prefixed by `op:` or
/// `cop:`, or a path to an algebra JSON file.
pub fn parse_algebra_spec(spec: &str) -> Result<HopfPiCoalgebra, IoError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("op:") {
        return Ok(opposite(&parse_algebra_spec(rest)?)?);
    }
    if let Some(rest) = spec.strip_prefix("cop:") {
        return Ok(coopposite(&parse_algebra_spec(rest)?)?);
    }
    if spec == "kac-paljutkin" {
        return Ok(build_kac_paljutkin());
    }
    if let Some(phi) = spec.strip_prefix("function:") {
        return Ok(build_function_hopf(&parse_phi_spec(phi)?)?);
    }
    algebra_from_json(&read_text(spec)?)
}

fn tensor_to_json(t: &DenseTensor) -> Value {
    fn rec(shape: &[usize], data: &[Scalar]) -> Value {
        match shape.split_first() {
            None => json!(data[0].to_string()),
            Some((&n, rest)) => {
                let step = rest.iter().product::<usize>();
                Value::Array((0..n).map(|k| rec(rest, &data[k * step..(k + 1) * step])).collect())
            }
        }
    }
    rec(t.shape(), t.data())
}

fn tensor_from_json(v: Option<&Value>, shape: &[usize], what: &str) -> Result<DenseTensor, IoError> {
    let Some(v) = v else {
        if shape.contains(&0) {
            return Ok(DenseTensor::zeros(shape));
        }
        return Err(IoError::Spec(format!("{what}: missing tensor of shape {shape:?}")));
    };
    fn rec(v: &Value, shape: &[usize], out: &mut Vec<Scalar>, what: &str) -> Result<(), IoError> {
        match shape.split_first() {
            None => {
                let s: Scalar = serde_json::from_value(v.clone())
                    .map_err(|e| IoError::Spec(format!("{what}: bad scalar {v}: {e}")))?;
                out.push(s);
                Ok(())
            }
            Some((&n, rest)) => {
                let arr = v.as_array().filter(|a| a.len() == n).ok_or_else(|| {
                    IoError::Spec(format!("{what}: expected an array of length {n} at depth for shape {shape:?}"))
                })?;
                arr.iter().try_for_each(|x| rec(x, rest, out, what))
            }
        }
    }
    let mut data = Vec::with_capacity(shape.iter().product());
    rec(v, shape, &mut data, what)?;
    Ok(DenseTensor::from_vec(shape, data).expect("length matches shape"))
}

fn per_element<'a>(g: &GroupTable, f: impl Fn(Elem) -> &'a DenseTensor) -> Value {
    Value::Object(
        g.elements().filter(|&a| !f(a).is_empty()).map(|a| (g.name(a).to_string(), tensor_to_json(f(a)))).collect(),
    )
}

fn per_pair<'a>(g: &GroupTable, f: impl Fn(Elem, Elem) -> &'a DenseTensor) -> Value {
    Value::Object(
        g.elements()
            .filter_map(|a| {
                let inner = per_element(g, |b| f(a, b));
                (!inner.as_object().expect("object").is_empty()).then(|| (g.name(a).to_string(), inner))
            })
            .collect(),
    )
}

/// Serializes an algebra with tensors of zero size omitted.
pub fn algebra_to_json(h: &HopfPiCoalgebra) -> Value {
    let g = h.pi();
    let mut out = json!({
        "name": h.name(),
        "group": g.to_raw(),
        "dim": Value::Object(g.elements().map(|a| (g.name(a).to_string(), json!(h.dim(a)))).collect()),
        "mul": per_element(g, |a| h.mul(a)),
        "unit": per_element(g, |a| h.unit(a)),
        "delta": per_pair(g, |a, b| h.delta(a, b)),
        "counit": tensor_to_json(h.counit()),
        "antipode": per_element(g, |a| h.antipode(a)),
    });
    if h.has_crossing() {
        out["crossing"] = per_pair(g, |b, a| h.crossing(b, a).expect("present"));
    }
    out
}

pub fn algebra_from_json(text: &str) -> Result<HopfPiCoalgebra, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let group: GroupRef = serde_json::from_value(v.get("group").cloned().ok_or_else(|| IoError::Spec("missing \"group\"".into()))?)?;
    let pi = group.resolve()?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("algebra").to_string();
    let names = pi.names().to_vec();
    let dims_obj = v.get("dim").and_then(Value::as_object).ok_or_else(|| IoError::Spec("missing \"dim\" object".into()))?;
    for key in dims_obj.keys() {
        pi.index_of(key)?;
    }
    let dim: Vec<usize> = names
        .iter()
        .map(|a| dims_obj.get(a).map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| IoError::Spec(format!("dim[{a}] is not a count")))).unwrap_or(Ok(0)))
        .collect::<Result<_, _>>()?;
    let field = |key: &str| v.get(key);
    let sub = |key: &str, a: &str| field(key).and_then(|x| x.get(a));
    let sub2 = |key: &str, a: &str, b: &str| field(key).and_then(|x| x.get(a)).and_then(|x| x.get(b));
    let mut mul = Vec::new();
    let mut unit = Vec::new();
    let mut antipode = Vec::new();
    let mut delta = Vec::new();
    for a in pi.elements() {
        let (na, d) = (&names[a], dim[a]);
        mul.push(tensor_from_json(sub("mul", na), &[d, d, d], &format!("mul[{na}]"))?);
        unit.push(tensor_from_json(sub("unit", na), &[d], &format!("unit[{na}]"))?);
        let di = dim[pi.inv(a)];
        antipode.push(tensor_from_json(sub("antipode", na), &[di, d], &format!("antipode[{na}]"))?);
        let mut row = Vec::new();
        for b in pi.elements() {
            let nb = &names[b];
            let shape = [dim[pi.mul(a, b)], d, dim[b]];
            row.push(tensor_from_json(sub2("delta", na, nb), &shape, &format!("delta[{na}][{nb}]"))?);
        }
        delta.push(row);
    }
    let counit = tensor_from_json(field("counit"), &[dim[pi.identity()]], "counit")?;
    let crossing = match field("crossing") {
        None | Some(Value::Null) => None,
        Some(_) => {
            let mut cr = Vec::new();
            for b in pi.elements() {
                let mut row = Vec::new();
                for a in pi.elements() {
                    let shape = [dim[pi.conjugate(a, b)], dim[a]];
                    let what = format!("crossing[{}][{}]", names[b], names[a]);
                    row.push(tensor_from_json(sub2("crossing", &names[b], &names[a]), &shape, &what)?);
                }
                cr.push(row);
            }
            Some(cr)
        }
    };
    Ok(HopfPiCoalgebra::from_parts(HopfParts { name, pi, dim, mul, unit, delta, counit, antipode, crossing })?)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DiagramFile {
    genus: usize,
    crossings: Vec<Crossing>,
    upper_orders: Vec<Vec<CrossingId>>,
    lower_orders: Vec<Vec<CrossingId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<String>>,
}

/// A diagram and its color names, if the file has any.
pub fn diagram_from_json(text: &str) -> Result<(HeegaardDiagram, Option<Vec<String>>), IoError> {
    let f: DiagramFile = serde_json::from_str(text)?;
    let d = HeegaardDiagram { genus: f.genus, crossings: f.crossings, upper_orders: f.upper_orders, lower_orders: f.lower_orders };
    Ok((d, f.colors))
}

pub fn diagram_to_json(d: &HeegaardDiagram, colors: Option<&[String]>) -> Value {
    serde_json::to_value(DiagramFile {
        genus: d.genus,
        crossings: d.crossings.clone(),
        upper_orders: d.upper_orders.clone(),
        lower_orders: d.lower_orders.clone(),
        colors: colors.map(<[String]>::to_vec),
    })
    .expect("plain data")
}

pub fn colored_to_json(d: &ColoredDiagram, pi: &GroupTable) -> Value {
    let names: Vec<String> = d.colors.iter().map(|&a| pi.name(a).to_string()).collect();
    diagram_to_json(&d.diagram, Some(&names))
}

/// `lens:P`, `lens:P:Q`, `s1xs2`, or a path to a diagram JSON file.
pub fn parse_diagram_spec(spec: &str) -> Result<(HeegaardDiagram, Option<Vec<String>>), IoError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("lens:") {
        let (p, q) = match rest.split_once(':') {
            Some((p, q)) => (parse_count(p, "lens p")?, parse_count(q, "lens q")?),
            None => (parse_count(rest, "lens p")?, 1),
        };
        return Ok((lens_pq_diagram(p, q).map_err(|e| IoError::Spec(e.to_string()))?, None));
    }
    if spec == "s1xs2" {
        return Ok((s1_x_s2_diagram(), None));
    }
    diagram_from_json(&read_text(spec)?)
}

/// Resolves color names; without names every circle gets the identity.
pub fn resolve_colors(d: &HeegaardDiagram, names: Option<&[String]>, pi: &GroupTable) -> Result<Vec<Elem>, IoError> {
    match names {
        None => Ok(vec![pi.identity(); d.genus]),
        Some(names) => Ok(names.iter().map(|n| pi.index_of(n.trim())).collect::<Result<_, _>>()?),
    }
}

/// `{"Z", "K", "genus", "colors"}` with colors given by name.
pub fn invariant_record(v: &InvariantValue, d: &ColoredDiagram, pi: &GroupTable) -> Value {
    json!({
        "Z": v.z.to_string(),
        "K": v.k.to_string(),
        "genus": d.genus(),
        "colors": d.colors.iter().map(|&a| pi.name(a)).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{identity_crossing, validate_hopf};

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("cyclic:4").unwrap().order(), 4);
        assert_eq!(parse_group_spec("symmetric:3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("trivial").unwrap().order(), 1);
        let inline = r#"{"names": ["e", "a"], "mul": [[0, 1], [1, 0]]}"#;
        assert_eq!(parse_group_spec(inline).unwrap().name(1), "a");
        assert!(matches!(parse_group_spec("cyclic:x"), Err(IoError::Spec(_))));
        assert!(matches!(parse_group_spec("/no/such/file.json"), Err(IoError::Read { .. })));
    }

    #[test]
    fn phi_specs() {
        assert_eq!(parse_phi_spec("sign3").unwrap(), GroupHom::sign(3).unwrap());
        assert_eq!(parse_phi_spec("mod:4:2").unwrap(), GroupHom::reduction(4, 2).unwrap());
        assert_eq!(parse_phi_spec("trivial:5").unwrap().target.order(), 1);
        assert_eq!(parse_phi_spec("id:symmetric:3").unwrap().source.order(), 6);
    }

    #[test]
    fn algebra_roundtrip() {
        for h in [
            identity_crossing(build_kac_paljutkin()).unwrap(),
            parse_algebra_spec("function:sign3").unwrap(),
            parse_algebra_spec("cop:function:mod:4:2").unwrap(),
            build_function_hopf(&GroupHom::new(GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(4).unwrap(), vec![0, 2]).unwrap()).unwrap(),
        ] {
            let text = serde_json::to_string(&algebra_to_json(&h)).unwrap();
            let back = algebra_from_json(&text).unwrap();
            assert_eq!(back, h);
            assert!(validate_hopf(&back).passed());
        }
    }

    #[test]
    fn bad_algebra_files() {
        let mut v = algebra_to_json(&build_kac_paljutkin());
        v["mul"]["0"][0][0] = json!(["1"]);
        assert!(matches!(algebra_from_json(&v.to_string()), Err(IoError::Spec(_))));
        let mut v = algebra_to_json(&build_kac_paljutkin());
        v["counit"][0] = json!("1/0");
        assert!(matches!(algebra_from_json(&v.to_string()), Err(IoError::Spec(_))));
        let mut v = algebra_to_json(&build_kac_paljutkin());
        v["dim"]["7"] = json!(1);
        assert!(matches!(algebra_from_json(&v.to_string()), Err(IoError::Group(_))));
    }

    #[test]
    fn diagram_roundtrip() {
        let (d, colors) = parse_diagram_spec("lens:5:2").unwrap();
        assert!(colors.is_none());
        let names = vec!["0".to_string()];
        let text = diagram_to_json(&d, Some(&names)).to_string();
        assert!(text.contains(r#""sign":1"#));
        let (back, colors) = diagram_from_json(&text).unwrap();
        assert_eq!(back, d);
        let pi = GroupTable::cyclic(5).unwrap();
        assert_eq!(resolve_colors(&back, colors.as_deref(), &pi).unwrap(), vec![0]);
    }
}
