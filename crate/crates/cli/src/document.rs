//! JSON geometry documents.
//!
//! A document is `{"kind": "curve" | "region", "dimension": d, "id": "...",
//! "payload": ...}`. Curve payloads are vertex arrays `[[x, y, ...], ...]`;
//! region payloads are `{"outer": ring, "holes": [ring, ...]}` with each ring
//! a vertex array. A file may hold one document or an array of them.

use elastic_core::vc::GeometryObject;
use elastic_core::{PolygonalCurve, PolygonalRegion, Ring, Tolerance};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{source_name}: invalid JSON at line {line}, column {column}: {message}")]
    Syntax {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{source_name}: {path}: {message}")]
    Field {
        source_name: String,
        path: String,
        message: String,
    },
    #[error("{source_name}: document '{id}': {error}")]
    Geometry {
        source_name: String,
        id: String,
        error: elastic_core::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Curve,
    Region,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Curve => "curve",
            Kind::Region => "region",
        }
    }
}

pub type Vertices = Vec<Vec<f64>>;

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Curve(Vertices),
    Region { outer: Vertices, holes: Vec<Vertices> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometryDocument {
    pub id: String,
    pub dimension: usize,
    pub payload: Payload,
}

struct Ctx<'a> {
    source: &'a str,
}

impl Ctx<'_> {
    fn err(&self, path: &str, message: impl Into<String>) -> DocumentError {
        DocumentError::Field {
            source_name: self.source.to_string(),
            path: path.to_string(),
            message: message.into(),
        }
    }

    fn object<'v>(&self, v: &'v Value, path: &str) -> Result<&'v Map<String, Value>, DocumentError> {
        v.as_object().ok_or_else(|| self.err(path, "expected an object"))
    }

    fn field<'v>(&self, obj: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value, DocumentError> {
        obj.get(key)
            .ok_or_else(|| self.err(path, format!("missing field '{key}'")))
    }

    fn vertices(&self, v: &Value, dim: usize, path: &str) -> Result<Vertices, DocumentError> {
        let arr = v
            .as_array()
            .ok_or_else(|| self.err(path, "expected an array of vertices"))?;
        arr.iter()
            .enumerate()
            .map(|(i, vertex)| {
                let vpath = format!("{path}[{i}]");
                let coords = vertex
                    .as_array()
                    .ok_or_else(|| self.err(&vpath, "expected an array of numbers"))?;
                if coords.len() != dim {
                    return Err(self.err(
                        &vpath,
                        format!("dimension mismatch: expected {dim} coordinates, found {}", coords.len()),
                    ));
                }
                coords
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        c.as_f64()
                            .ok_or_else(|| self.err(&format!("{vpath}[{j}]"), "expected a number"))
                    })
                    .collect()
            })
            .collect()
    }

    fn document(&self, v: &Value, path: &str) -> Result<GeometryDocument, DocumentError> {
        let obj = self.object(v, path)?;
        let kind = match self.field(obj, "kind", path)?.as_str() {
            Some("curve") => Kind::Curve,
            Some("region") => Kind::Region,
            _ => return Err(self.err(&format!("{path}.kind"), "expected \"curve\" or \"region\"")),
        };
        let dimension = self
            .field(obj, "dimension", path)?
            .as_u64()
            .filter(|&d| d >= 1)
            .ok_or_else(|| self.err(&format!("{path}.dimension"), "expected a positive integer"))?
            as usize;
        let id = match obj.get("id") {
            None => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(self.err(&format!("{path}.id"), "expected a string")),
        };
        let ppath = format!("{path}.payload");
        let payload = self.field(obj, "payload", path)?;
        let payload = match kind {
            Kind::Curve => Payload::Curve(self.vertices(payload, dimension, &ppath)?),
            Kind::Region => {
                if dimension != 2 {
                    return Err(self.err(&format!("{path}.dimension"), "regions must have dimension 2"));
                }
                let p = self.object(payload, &ppath)?;
                let outer = self.vertices(self.field(p, "outer", &ppath)?, 2, &format!("{ppath}.outer"))?;
                let holes = match p.get("holes") {
                    None => Vec::new(),
                    Some(h) => h
                        .as_array()
                        .ok_or_else(|| self.err(&format!("{ppath}.holes"), "expected an array of rings"))?
                        .iter()
                        .enumerate()
                        .map(|(i, ring)| self.vertices(ring, 2, &format!("{ppath}.holes[{i}]")))
                        .collect::<Result<_, _>>()?,
                };
                Payload::Region { outer, holes }
            }
        };
        Ok(GeometryDocument { id, dimension, payload })
    }
}

fn syntax(source: &str, e: serde_json::Error) -> DocumentError {
    DocumentError::Syntax {
        source_name: source.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses one document or an array of documents from `text`. `source`
/// names the input in error messages.
pub fn parse_documents(text: &str, source: &str) -> Result<Vec<GeometryDocument>, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| syntax(source, e))?;
    let ctx = Ctx { source };
    match &value {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, v)| ctx.document(v, &format!("$[{i}]")))
            .collect(),
        _ => Ok(vec![ctx.document(&value, "$")?]),
    }
}

/// Parses exactly one document.
pub fn parse_document(text: &str, source: &str) -> Result<GeometryDocument, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| syntax(source, e))?;
    Ctx { source }.document(&value, "$")
}

fn ring(vertices: &Vertices) -> elastic_core::Result<Ring> {
    Ring::from_xy(&vertices.iter().map(|v| (v[0], v[1])).collect::<Vec<_>>())
}

fn vertex_array(points: impl Iterator<Item = Vec<f64>>) -> Vertices {
    points.collect()
}

impl GeometryDocument {
    pub fn kind(&self) -> Kind {
        match self.payload {
            Payload::Curve(_) => Kind::Curve,
            Payload::Region { .. } => Kind::Region,
        }
    }

    pub fn to_json(&self) -> Value {
        let payload = match &self.payload {
            Payload::Curve(v) => json!(v),
            Payload::Region { outer, holes } => json!({ "outer": outer, "holes": holes }),
        };
        json!({
            "kind": self.kind().name(),
            "dimension": self.dimension,
            "id": self.id,
            "payload": payload,
        })
    }

    /// Builds the library object, validating regions with `tol`.
    pub fn to_object(&self, tol: &Tolerance, source: &str) -> Result<GeometryObject, DocumentError> {
        let wrap = |error| DocumentError::Geometry {
            source_name: source.to_string(),
            id: self.id.clone(),
            error,
        };
        match &self.payload {
            Payload::Curve(v) => PolygonalCurve::from_coords(v.iter().cloned())
                .map(GeometryObject::Curve)
                .map_err(wrap),
            Payload::Region { outer, holes } => {
                let outer = ring(outer).map_err(wrap)?;
                let holes = holes.iter().map(ring).collect::<Result<Vec<_>, _>>().map_err(wrap)?;
                PolygonalRegion::with_tolerance(outer, holes, tol)
                    .map(GeometryObject::Region)
                    .map_err(wrap)
            }
        }
    }

    pub fn from_object(id: impl Into<String>, object: &GeometryObject) -> Self {
        let coords = |p: &elastic_core::Point| p.coords().to_vec();
        let (dimension, payload) = match object {
            GeometryObject::Curve(c) => (c.dim(), Payload::Curve(vertex_array(c.vertices().iter().map(coords)))),
            GeometryObject::Region(r) => (
                2,
                Payload::Region {
                    outer: vertex_array(r.outer().vertices().iter().map(coords)),
                    holes: r
                        .holes()
                        .iter()
                        .map(|h| vertex_array(h.vertices().iter().map(coords)))
                        .collect(),
                },
            ),
        };
        Self {
            id: id.into(),
            dimension,
            payload,
        }
    }
}
