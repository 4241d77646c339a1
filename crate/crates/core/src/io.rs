//! Structure documents: one JSON schema with a `kind` discriminator.
//!
//! ```text
//! {"kind":"algebra","version":1,"name":"Z4","data":{"size":4,"zero":0,"add":[[..]],"neg":[..]}}
//! ```
//!
//! Kinds and their `data` fields, in canonical order:
//!
//! - `algebra`: `size`, `zero`, `add`, `neg`, then `binary` (list of
//!   `{name, opposite, table}`), `unary` (list of `{name, map}`) and
//!   `identities` (list of equation strings), each omitted when empty
//! - `groupoid`: `objects`, `src`, `tgt`, `identity`, `comp` (triples
//!   `[a, b, a∘b]`)
//! - `internal`: `arrows`, `objects` (algebra data), `groupoid`
//! - `xmod`: `A`, `B` (algebra data), `alpha`, `dot` (rows indexed by B),
//!   `star` (list of `{name, table}`, omitted when empty)
//! - `action`: `base` (a groupoid or internal document), `set_size`,
//!   `theta`, `phi` (triples `[x, a, xa]`), and `set_alg` exactly when the
//!   base is internal
//! - `morphism`: `source`, `target` (both groupoid or both internal
//!   documents), `arrow_map`, `object_map`, optional `basepoint` and the
//!   optional claim `covering`
//! - `xmod-morphism`: `source`, `target` (xmod documents), `f1`, `f2` and
//!   the optional claim `cover`
//!
//! Parsing checks shapes and cross-references only; axioms are left to
//! the validators.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{BinaryOp, Identity, OpAlgebra, Table, UnaryOp};
use crate::groupoid::{FinGroupoid, GpdAction, GpdMorphism};
use crate::internal::{InternalAction, InternalGroupoid, InternalMorphism};
use crate::xmod::{CrossedModule, XModMorphism};

pub const VERSION: u64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },
}

impl DocError {
    fn schema(field: &str, message: impl Into<String>) -> Self {
        DocError::Schema {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

type DResult<T> = std::result::Result<T, DocError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(OpAlgebra),
    Groupoid(FinGroupoid),
    Internal(InternalGroupoid),
    XMod(CrossedModule),
    Action(GpdAction),
    InternalAction(InternalAction),
    Morphism {
        map: GpdMorphism,
        basepoint: Option<usize>,
        covering: Option<bool>,
    },
    InternalMorphism {
        map: InternalMorphism,
        basepoint: Option<usize>,
        covering: Option<bool>,
    },
    XModMorphism {
        map: XModMorphism,
        cover: Option<bool>,
    },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Groupoid(_) => "groupoid",
            Structure::Internal(_) => "internal",
            Structure::XMod(_) => "xmod",
            Structure::Action(_) | Structure::InternalAction(_) => "action",
            Structure::Morphism { .. } | Structure::InternalMorphism { .. } => "morphism",
            Structure::XModMorphism { .. } => "xmod-morphism",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub comment: Option<String>,
    pub structure: Structure,
}

impl Document {
    pub fn new(structure: Structure) -> Self {
        Document {
            name: None,
            comment: None,
            structure,
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_comment(mut self, comment: &str) -> Self {
        self.comment = Some(comment.to_string());
        self
    }
}

pub fn parse(text: &str) -> DResult<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    document(&v, "")
}

/// Canonical text: fixed field order, no whitespace, trailing newline.
pub fn serialize(doc: &Document) -> String {
    let mut s = to_value(doc).to_string();
    s.push('\n');
    s
}

pub fn to_value(doc: &Document) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(doc.structure.kind()));
    m.insert("version".into(), json!(VERSION));
    if let Some(n) = &doc.name {
        m.insert("name".into(), json!(n));
    }
    if let Some(c) = &doc.comment {
        m.insert("comment".into(), json!(c));
    }
    m.insert("data".into(), data_value(&doc.structure));
    Value::Object(m)
}

fn nested(s: Structure) -> Value {
    to_value(&Document::new(s))
}

fn data_value(s: &Structure) -> Value {
    match s {
        Structure::Algebra(a) => alg_value(a),
        Structure::Groupoid(g) => gpd_value(g),
        Structure::Internal(g) => internal_value(g),
        Structure::XMod(x) => xmod_value(x),
        Structure::Action(a) => action_value(nested(Structure::Groupoid(a.groupoid.clone())), a, None),
        Structure::InternalAction(a) => action_value(
            nested(Structure::Internal(a.internal.clone())),
            &a.action,
            Some(alg_value(&a.set_alg)),
        ),
        Structure::Morphism {
            map,
            basepoint,
            covering,
        } => morphism_value(
            nested(Structure::Groupoid(map.source.clone())),
            nested(Structure::Groupoid(map.target.clone())),
            &map.arrow_map,
            &map.object_map,
            *basepoint,
            *covering,
        ),
        Structure::InternalMorphism {
            map,
            basepoint,
            covering,
        } => morphism_value(
            nested(Structure::Internal(map.source.clone())),
            nested(Structure::Internal(map.target.clone())),
            &map.arrow_map,
            &map.object_map,
            *basepoint,
            *covering,
        ),
        Structure::XModMorphism { map, cover } => {
            let mut m = Map::new();
            m.insert("source".into(), nested(Structure::XMod(map.source.clone())));
            m.insert("target".into(), nested(Structure::XMod(map.target.clone())));
            m.insert("f1".into(), json!(map.f1));
            m.insert("f2".into(), json!(map.f2));
            if let Some(c) = cover {
                m.insert("cover".into(), json!(c));
            }
            Value::Object(m)
        }
    }
}

fn alg_value(a: &OpAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("size".into(), json!(a.size()));
    m.insert("zero".into(), json!(a.zero()));
    m.insert("add".into(), json!(a.add_table()));
    m.insert("neg".into(), json!(a.neg_map()));
    if !a.binary_ops().is_empty() {
        let ops: Vec<Value> = a
            .binary_ops()
            .iter()
            .map(|op| json!({"name": op.name, "opposite": op.opposite, "table": op.table}))
            .collect();
        m.insert("binary".into(), Value::Array(ops));
    }
    if !a.unary_ops().is_empty() {
        let ops: Vec<Value> = a
            .unary_ops()
            .iter()
            .map(|op| json!({"name": op.name, "map": op.map}))
            .collect();
        m.insert("unary".into(), Value::Array(ops));
    }
    if !a.identities().is_empty() {
        let ids: Vec<Value> = a.identities().iter().map(|i| json!(i.text())).collect();
        m.insert("identities".into(), Value::Array(ids));
    }
    Value::Object(m)
}

fn gpd_value(g: &FinGroupoid) -> Value {
    let comp: Vec<[usize; 3]> = g.comp_table().iter().map(|(&(a, b), &c)| [a, b, c]).collect();
    json!({
        "objects": g.n_objects(),
        "src": g.src_map(),
        "tgt": g.tgt_map(),
        "identity": g.identity_map(),
        "comp": comp,
    })
}

fn internal_value(g: &InternalGroupoid) -> Value {
    json!({
        "arrows": alg_value(&g.arrow_alg),
        "objects": alg_value(&g.object_alg),
        "groupoid": gpd_value(&g.gpd),
    })
}

fn xmod_value(x: &CrossedModule) -> Value {
    let mut m = Map::new();
    m.insert("A".into(), alg_value(x.a()));
    m.insert("B".into(), alg_value(x.b()));
    m.insert("alpha".into(), json!(x.alpha));
    m.insert("dot".into(), json!(x.action.dot_table()));
    if !x.action.star_tables().is_empty() {
        let stars: Vec<Value> = x
            .action
            .star_tables()
            .iter()
            .map(|(n, t)| json!({"name": n, "table": t}))
            .collect();
        m.insert("star".into(), Value::Array(stars));
    }
    Value::Object(m)
}

fn action_value(base: Value, a: &GpdAction, set_alg: Option<Value>) -> Value {
    let phi: Vec<[usize; 3]> = a.phi.iter().map(|(&(x, p), &y)| [x, p, y]).collect();
    let mut m = Map::new();
    m.insert("base".into(), base);
    m.insert("set_size".into(), json!(a.set_size));
    m.insert("theta".into(), json!(a.theta));
    m.insert("phi".into(), json!(phi));
    if let Some(s) = set_alg {
        m.insert("set_alg".into(), s);
    }
    Value::Object(m)
}

fn morphism_value(
    source: Value,
    target: Value,
    arrow_map: &[usize],
    object_map: &[usize],
    basepoint: Option<usize>,
    covering: Option<bool>,
) -> Value {
    let mut m = Map::new();
    m.insert("source".into(), source);
    m.insert("target".into(), target);
    m.insert("arrow_map".into(), json!(arrow_map));
    m.insert("object_map".into(), json!(object_map));
    if let Some(b) = basepoint {
        m.insert("basepoint".into(), json!(b));
    }
    if let Some(c) = covering {
        m.insert("covering".into(), json!(c));
    }
    Value::Object(m)
}

// ---- reading ----

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

/// An object with exactly the listed keys, the optional ones possibly
/// missing.
struct Obj<'a> {
    map: &'a Map<String, Value>,
    path: String,
}

impl<'a> Obj<'a> {
    fn new(v: &'a Value, path: &str, required: &[&str], optional: &[&str]) -> DResult<Self> {
        let map = v
            .as_object()
            .ok_or_else(|| DocError::schema(path_or(path, "document"), "expected an object"))?;
        for k in map.keys() {
            if !required.contains(&k.as_str()) && !optional.contains(&k.as_str()) {
                return Err(DocError::schema(&join(path, k), "unknown field"));
            }
        }
        for k in required {
            if !map.contains_key(*k) {
                return Err(DocError::schema(&join(path, k), "missing field"));
            }
        }
        Ok(Obj {
            map,
            path: path.to_string(),
        })
    }

    fn field(&self, k: &str) -> String {
        join(&self.path, k)
    }

    fn get(&self, k: &str) -> Option<&'a Value> {
        self.map.get(k)
    }

    fn req(&self, k: &str) -> &'a Value {
        &self.map[k]
    }

    fn uint(&self, k: &str) -> DResult<usize> {
        uint(self.req(k), &self.field(k))
    }

    fn uints(&self, k: &str) -> DResult<Vec<usize>> {
        uints(self.req(k), &self.field(k))
    }

    fn table(&self, k: &str) -> DResult<Table> {
        table(self.req(k), &self.field(k))
    }

    fn triples(&self, k: &str) -> DResult<Vec<(usize, usize, usize)>> {
        let f = self.field(k);
        let rows = array(self.req(k), &f)?;
        rows.iter()
            .map(|r| match uints(r, &f)?[..] {
                [a, b, c] => Ok((a, b, c)),
                _ => Err(DocError::schema(&f, "expected triples")),
            })
            .collect()
    }

    fn opt_uint(&self, k: &str) -> DResult<Option<usize>> {
        self.get(k).map(|v| uint(v, &self.field(k))).transpose()
    }

    fn opt_bool(&self, k: &str) -> DResult<Option<bool>> {
        self.get(k)
            .map(|v| {
                v.as_bool()
                    .ok_or_else(|| DocError::schema(&self.field(k), "expected a boolean"))
            })
            .transpose()
    }

    fn string(&self, k: &str) -> DResult<String> {
        string(self.req(k), &self.field(k))
    }
}

fn path_or<'a>(path: &'a str, default: &'a str) -> &'a str {
    if path.is_empty() {
        default
    } else {
        path
    }
}

fn uint(v: &Value, field: &str) -> DResult<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| DocError::schema(field, "expected a non-negative integer"))
}

fn array<'a>(v: &'a Value, field: &str) -> DResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| DocError::schema(field, "expected an array"))
}

fn uints(v: &Value, field: &str) -> DResult<Vec<usize>> {
    array(v, field)?.iter().map(|x| uint(x, field)).collect()
}

fn table(v: &Value, field: &str) -> DResult<Table> {
    array(v, field)?.iter().map(|r| uints(r, field)).collect()
}

fn check_shape(t: &Table, rows: usize, cols: usize, range: usize, field: &str, what: &str) -> DResult<()> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        return Err(DocError::schema(
            field,
            format!("`{what}` must be a {rows}x{cols} table"),
        ));
    }
    if t.iter().flatten().any(|&x| x >= range) {
        return Err(DocError::schema(
            field,
            format!("`{what}` has an entry out of range 0..{range}"),
        ));
    }
    Ok(())
}

fn string(v: &Value, field: &str) -> DResult<String> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| DocError::schema(field, "expected a string"))
}

/// Construction errors name a table or operation; they are reported
/// against that field under `path`.
fn built<T>(r: crate::Result<T>, path: &str, fallback: &str) -> DResult<T> {
    r.map_err(|e| match e {
        crate::Error::MalformedTable { what, detail } => DocError::schema(&join(path, &what), detail),
        other => DocError::schema(&join(path, fallback), other.to_string()),
    })
}

fn document(v: &Value, path: &str) -> DResult<Document> {
    let o = Obj::new(v, path, &["kind", "version", "data"], &["name", "comment"])?;
    let version = o.uint("version")?;
    if version as u64 != VERSION {
        return Err(DocError::schema(
            &o.field("version"),
            format!("unsupported version {version}"),
        ));
    }
    let name = o.get("name").map(|v| string(v, &o.field("name"))).transpose()?;
    let comment = o.get("comment").map(|v| string(v, &o.field("comment"))).transpose()?;
    let kind = o.string("kind")?;
    let data = o.req("data");
    let dp = path;
    let structure = match kind.as_str() {
        "algebra" => Structure::Algebra(read_alg(data, dp)?),
        "groupoid" => Structure::Groupoid(read_gpd(data, dp)?),
        "internal" => Structure::Internal(read_internal(data, dp)?),
        "xmod" => Structure::XMod(read_xmod(data, dp)?),
        "action" => read_action(data, dp)?,
        "morphism" => read_morphism(data, dp)?,
        "xmod-morphism" => read_xmod_morphism(data, dp)?,
        other => return Err(DocError::schema(&o.field("kind"), format!("unknown kind `{other}`"))),
    };
    Ok(Document {
        name,
        comment,
        structure,
    })
}

fn read_alg(v: &Value, path: &str) -> DResult<OpAlgebra> {
    let o = Obj::new(
        v,
        path,
        &["size", "zero", "add", "neg"],
        &["binary", "unary", "identities"],
    )?;
    let n = o.uint("size")?;
    let mut binary = Vec::new();
    if let Some(ops) = o.get("binary") {
        let f = o.field("binary");
        for op in array(ops, &f)? {
            let p = Obj::new(op, &f, &["name", "opposite", "table"], &[])?;
            let (name, table) = (p.string("name")?, p.table("table")?);
            check_shape(&table, n, n, n, &f, &name)?;
            binary.push(BinaryOp {
                opposite: p.string("opposite")?,
                name,
                table,
            });
        }
    }
    let mut unary = Vec::new();
    if let Some(ops) = o.get("unary") {
        let f = o.field("unary");
        for op in array(ops, &f)? {
            let p = Obj::new(op, &f, &["name", "map"], &[])?;
            let (name, map) = (p.string("name")?, p.uints("map")?);
            check_shape(&vec![map.clone()], 1, n, n, &f, &name)?;
            unary.push(UnaryOp { name, map });
        }
    }
    let mut identities = Vec::new();
    if let Some(ids) = o.get("identities") {
        let f = o.field("identities");
        for id in array(ids, &f)? {
            identities.push(built(Identity::parse(&string(id, &f)?), path, "identities")?);
        }
    }
    built(
        OpAlgebra::from_parts(
            n,
            o.uint("zero")?,
            o.table("add")?,
            o.uints("neg")?,
            binary,
            unary,
            identities,
        ),
        path,
        "identities",
    )
}

fn read_gpd(v: &Value, path: &str) -> DResult<FinGroupoid> {
    let o = Obj::new(v, path, &["objects", "src", "tgt", "identity", "comp"], &[])?;
    built(
        FinGroupoid::new(
            o.uint("objects")?,
            o.uints("src")?,
            o.uints("tgt")?,
            o.uints("identity")?,
            o.triples("comp")?,
        ),
        path,
        "comp",
    )
}

fn read_internal(v: &Value, path: &str) -> DResult<InternalGroupoid> {
    let o = Obj::new(v, path, &["arrows", "objects", "groupoid"], &[])?;
    let ar = read_alg(o.req("arrows"), &o.field("arrows"))?;
    let ob = read_alg(o.req("objects"), &o.field("objects"))?;
    let g = read_gpd(o.req("groupoid"), &o.field("groupoid"))?;
    built(InternalGroupoid::new(g, ar, ob), path, "groupoid")
}

fn read_xmod(v: &Value, path: &str) -> DResult<CrossedModule> {
    let o = Obj::new(v, path, &["A", "B", "alpha", "dot"], &["star"])?;
    let a = read_alg(o.req("A"), &o.field("A"))?;
    let b = read_alg(o.req("B"), &o.field("B"))?;
    let mut stars = Vec::new();
    if let Some(s) = o.get("star") {
        let f = o.field("star");
        for st in array(s, &f)? {
            let p = Obj::new(st, &f, &["name", "table"], &[])?;
            let (name, table) = (p.string("name")?, p.table("table")?);
            check_shape(&table, b.size(), a.size(), a.size(), &f, &name)?;
            stars.push((name, table));
        }
    }
    built(
        CrossedModule::new(a, b, o.uints("alpha")?, o.table("dot")?, stars),
        path,
        "star",
    )
}

fn read_action(v: &Value, path: &str) -> DResult<Structure> {
    let o = Obj::new(v, path, &["base", "set_size", "theta", "phi"], &["set_alg"])?;
    let base = document(o.req("base"), &o.field("base"))?.structure;
    let (g, internal) = match base {
        Structure::Groupoid(g) => (g, None),
        Structure::Internal(i) => (i.gpd.clone(), Some(i)),
        _ => {
            return Err(DocError::schema(
                &o.field("base"),
                "expected a groupoid or internal document",
            ))
        }
    };
    let act = built(
        GpdAction::new(g, o.uint("set_size")?, o.uints("theta")?, o.triples("phi")?),
        path,
        "phi",
    )?;
    match (internal, o.get("set_alg")) {
        (None, None) => Ok(Structure::Action(act)),
        (Some(i), Some(s)) => {
            let set_alg = read_alg(s, &o.field("set_alg"))?;
            Ok(Structure::InternalAction(built(
                InternalAction::new(i, act, set_alg),
                path,
                "set_alg",
            )?))
        }
        (None, Some(_)) => Err(DocError::schema(
            &o.field("set_alg"),
            "only allowed over an internal base",
        )),
        (Some(_), None) => Err(DocError::schema(&o.field("set_alg"), "required over an internal base")),
    }
}

fn read_morphism(v: &Value, path: &str) -> DResult<Structure> {
    let o = Obj::new(
        v,
        path,
        &["source", "target", "arrow_map", "object_map"],
        &["basepoint", "covering"],
    )?;
    let s = document(o.req("source"), &o.field("source"))?.structure;
    let t = document(o.req("target"), &o.field("target"))?.structure;
    let (am, om) = (o.uints("arrow_map")?, o.uints("object_map")?);
    let basepoint = o.opt_uint("basepoint")?;
    let covering = o.opt_bool("covering")?;
    let structure = match (s, t) {
        (Structure::Groupoid(s), Structure::Groupoid(t)) => Structure::Morphism {
            map: built(GpdMorphism::new(s, t, am, om), path, "arrow_map")?,
            basepoint,
            covering,
        },
        (Structure::Internal(s), Structure::Internal(t)) => Structure::InternalMorphism {
            map: built(InternalMorphism::new(s, t, am, om), path, "arrow_map")?,
            basepoint,
            covering,
        },
        _ => {
            return Err(DocError::schema(
                &o.field("target"),
                "source and target must both be groupoid or both internal documents",
            ))
        }
    };
    let n_obj = match &structure {
        Structure::Morphism { map, .. } => map.source.n_objects(),
        Structure::InternalMorphism { map, .. } => map.source.gpd.n_objects(),
        _ => unreachable!(),
    };
    if basepoint.is_some_and(|b| b >= n_obj) {
        return Err(DocError::schema(&o.field("basepoint"), "not an object of the source"));
    }
    Ok(structure)
}

fn read_xmod_morphism(v: &Value, path: &str) -> DResult<Structure> {
    let o = Obj::new(v, path, &["source", "target", "f1", "f2"], &["cover"])?;
    let s = document(o.req("source"), &o.field("source"))?.structure;
    let t = document(o.req("target"), &o.field("target"))?.structure;
    let (Structure::XMod(s), Structure::XMod(t)) = (s, t) else {
        return Err(DocError::schema(&o.field("source"), "expected xmod documents"));
    };
    Ok(Structure::XModMorphism {
        map: built(XModMorphism::new(s, t, o.uints("f1")?, o.uints("f2")?), path, "f1")?,
        cover: o.opt_bool("cover")?,
    })
}
