//! JSON patch documents. Exact tuples are authoritative; `xy` is derived.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golden::{ratio, Rational};
use crate::lattice::Coord5;
use crate::recipes::RecipeMeta;
use crate::tiling::{Patch, Tile, TileKind};

pub const SCHEMA_VERSION: u32 = 1;
pub const SCALE_NOTE: &str = "xy in units of sqrt(2/5)";

/// Integer coefficients serialize as numbers, others as "p/q".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Frac(String),
}

impl Coefficient {
    fn from_ratio(r: &Rational) -> Self {
        if r.is_integer() {
            Coefficient::Int(r.to_integer())
        } else {
            Coefficient::Frac(format!("{}/{}", r.numer(), r.denom()))
        }
    }

    fn to_ratio(&self) -> Result<Rational> {
        match self {
            Coefficient::Int(n) => Ok(ratio(*n, 1)),
            Coefficient::Frac(s) => {
                let bad = || Error::SchemaError(format!("bad coefficient {s:?}"));
                let (p, q) = s.split_once('/').ok_or_else(bad)?;
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(ratio(p, q))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TileDocument {
    pub kind: String,
    pub vertices: Vec<[Coefficient; 5]>,
    pub xy: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MetaDocument {
    pub recipe: String,
    pub generators: Vec<String>,
    pub radius: Option<f64>,
    pub conflicts: usize,
    pub skipped: usize,
}

impl From<&RecipeMeta> for MetaDocument {
    fn from(m: &RecipeMeta) -> Self {
        Self {
            recipe: m.recipe.clone(),
            generators: m.generators.clone(),
            radius: m.radius,
            conflicts: m.conflicts,
            skipped: m.skipped,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatchDocument {
    pub schema: u32,
    pub scale: String,
    pub tiles: Vec<TileDocument>,
    pub meta: MetaDocument,
}

fn xy(v: &Coord5) -> [f64; 2] {
    let (x, y) = v.par();
    let unit = crate::tiling::growth::edge_length();
    [x / unit, y / unit]
}

pub fn export_json(p: &Patch, meta: MetaDocument) -> PatchDocument {
    let tiles = p
        .tiles()
        .map(|t| TileDocument {
            kind: t.kind.name().to_string(),
            vertices: t
                .vertices()
                .iter()
                .map(|v| {
                    let c = v.coeffs();
                    std::array::from_fn(|i| Coefficient::from_ratio(&c[i]))
                })
                .collect(),
            xy: t.vertices().iter().map(xy).collect(),
        })
        .collect();
    PatchDocument {
        schema: SCHEMA_VERSION,
        scale: SCALE_NOTE.to_string(),
        tiles,
        meta,
    }
}

pub fn import_json(doc: &PatchDocument) -> Result<Patch> {
    if doc.schema != SCHEMA_VERSION {
        return Err(Error::SchemaError(format!("unsupported schema {}", doc.schema)));
    }
    let mut tiles = Vec::with_capacity(doc.tiles.len());
    for (i, td) in doc.tiles.iter().enumerate() {
        let kind: TileKind = td.kind.parse().map_err(Error::SchemaError)?;
        if td.vertices.len() < 3 || td.xy.len() != td.vertices.len() {
            return Err(Error::SchemaError(format!("tile {i}: bad vertex list")));
        }
        let mut verts = Vec::with_capacity(td.vertices.len());
        for v in &td.vertices {
            let mut c = [ratio(0, 1); 5];
            for (slot, x) in c.iter_mut().zip(v) {
                *slot = x.to_ratio()?;
            }
            verts.push(Coord5::new(c));
        }
        let tile = Tile::new(kind, verts, "");
        if tile.area() != kind.area() {
            return Err(Error::SchemaError(format!("tile {i}: area does not match {kind}")));
        }
        tiles.push(tile);
    }
    let n = tiles.len();
    let (patch, report) = Patch::from_tiles(tiles);
    if !report.conflicts.is_empty() {
        return Err(Error::SchemaError(format!("{} overlapping tiles", report.len())));
    }
    if patch.len() + report.degenerate != n {
        return Err(Error::SchemaError("duplicate tiles".into()));
    }
    Ok(patch)
}

pub fn to_string(doc: &PatchDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

pub fn from_str(s: &str) -> Result<PatchDocument> {
    serde_json::from_str(s).map_err(|e| Error::SchemaError(e.to_string()))
}
