//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::path::PathBuf;

use opgroupoid::cli::{run_command, Report};
use opgroupoid::io::{self, Document, Structure};
use opgroupoid::oracle::{self, Subject};
use rand::Rng;
use serde_json::Value;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// The shipped corpus files, parsed, in file-name order.
pub fn corpus_files() -> Vec<(String, Document)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let stem = p.file_stem().unwrap().to_string_lossy().into_owned();
            (stem, io::parse(&text).unwrap())
        })
        .collect()
}

pub fn subject(s: &Structure) -> Subject<'_> {
    match s {
        Structure::Algebra(a) => Subject::Algebra(a),
        Structure::Groupoid(g) => Subject::Groupoid(g),
        Structure::Internal(g) => Subject::Internal(g),
        Structure::XMod(x) => Subject::XMod(x),
        Structure::Action(a) => Subject::Action(a),
        Structure::InternalAction(a) => Subject::InternalAction(a),
        Structure::Morphism { map, covering, .. } => Subject::Morphism(map, *covering),
        Structure::InternalMorphism { map, covering, .. } => Subject::InternalMorphism(map, *covering),
        Structure::XModMorphism { map, cover } => Subject::XModMorphism(map, *cover),
    }
}

fn bijective(m: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    m.len() == n && m.iter().all(|&y| y < n && !std::mem::replace(&mut seen[y], true))
}

/// Brute-force verdict on a document, claims included.
pub fn oracle_valid(s: &Structure) -> bool {
    match s {
        Structure::Algebra(a) => oracle::brute_algebra_ok(a),
        Structure::Groupoid(g) => oracle::brute_groupoid_ok(g),
        Structure::Internal(g) => oracle::brute_internal_ok(g),
        Structure::XMod(x) => oracle::brute_xmod_ok(x),
        Structure::Action(a) => oracle::brute_action_ok(a),
        Structure::InternalAction(a) => oracle::brute_internal_action_ok(a),
        Structure::Morphism { map, covering, .. } => {
            oracle::brute_morphism_ok(map) && covering.is_none_or(|c| oracle::brute_check_covering(map) == c)
        }
        Structure::InternalMorphism { map, covering, .. } => {
            oracle::brute_internal_morphism_ok(map)
                && covering.is_none_or(|c| oracle::brute_check_covering(&map.underlying().unwrap()) == c)
        }
        Structure::XModMorphism { map, cover } => {
            oracle::brute_xmod_morphism_ok(map) && cover.is_none_or(|c| bijective(&map.f1, map.target.a().size()) == c)
        }
    }
}

/// Every counterexample in `r` that does not re-verify against `s`.
pub fn unverified<'a>(s: &Structure, r: &'a Report) -> Vec<&'a opgroupoid::Violation> {
    r.checks
        .iter()
        .flat_map(|c| &c.counterexamples)
        .filter(|v| !oracle::recheck(subject(s), v))
        .collect()
}

pub fn run_on(doc: &Document, args: &[&str]) -> Report {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    std::fs::write(&path, io::serialize(doc)).unwrap();
    run_text(&std::fs::read_to_string(&path).unwrap(), args)
}

/// Runs `opgroupoid <args[0]> <file> <args[1..]>` on document text.
pub fn run_text(text: &str, args: &[&str]) -> Report {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    std::fs::write(&path, text).unwrap();
    let mut argv = vec![
        "opgroupoid".to_string(),
        args[0].to_string(),
        path.display().to_string(),
    ];
    argv.extend(args[1..].iter().map(|s| s.to_string()));
    run_command(argv)
}

/// Integers sitting inside arrays of a document value: table entries,
/// maps and triples. Scalar header fields such as sizes are left alone.
pub fn table_entries(v: &Value) -> Vec<Vec<PathStep>> {
    fn walk(v: &Value, path: &mut Vec<PathStep>, in_array: bool, out: &mut Vec<Vec<PathStep>>) {
        match v {
            Value::Number(_) if in_array => out.push(path.clone()),
            Value::Array(items) => {
                for (i, x) in items.iter().enumerate() {
                    path.push(PathStep::Index(i));
                    walk(x, path, true, out);
                    path.pop();
                }
            }
            Value::Object(m) => {
                for (k, x) in m {
                    path.push(PathStep::Key(k.clone()));
                    walk(x, path, false, out);
                    path.pop();
                }
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    walk(v, &mut Vec::new(), false, &mut out);
    out
}

#[derive(Clone, Debug)]
pub enum PathStep {
    Key(String),
    Index(usize),
}

pub fn at_mut<'a>(v: &'a mut Value, path: &[PathStep]) -> &'a mut Value {
    path.iter().fold(v, |v, s| match s {
        PathStep::Key(k) => &mut v[k.as_str()],
        PathStep::Index(i) => &mut v[*i],
    })
}

/// Replaces one table entry by a different value no larger than the
/// largest entry of the same array family, so most mutants stay in range.
pub fn mutate(doc: &Document, rng: &mut impl Rng) -> (String, String) {
    let mut v = io::to_value(doc);
    let entries = table_entries(&v);
    let path = &entries[rng.gen_range(0..entries.len())];
    let family: Vec<&Vec<PathStep>> = entries
        .iter()
        .filter(|p| {
            p.len() == path.len()
                && p.iter().zip(path.iter()).all(|(a, b)| match (a, b) {
                    (PathStep::Key(x), PathStep::Key(y)) => x == y,
                    _ => true,
                })
        })
        .collect();
    let bound = family
        .iter()
        .map(|p| at_mut(&mut v.clone(), p).as_u64().unwrap())
        .max()
        .unwrap_or(0)
        .max(1);
    let slot = at_mut(&mut v, path);
    let old = slot.as_u64().unwrap();
    let mut new = rng.gen_range(0..=bound);
    if new == old {
        new = (old + 1) % (bound + 1);
    }
    *slot = Value::from(new);
    let where_ = path
        .iter()
        .map(|s| match s {
            PathStep::Key(k) => k.clone(),
            PathStep::Index(i) => i.to_string(),
        })
        .collect::<Vec<_>>()
        .join(".");
    (format!("{v}\n"), format!("{where_}: {old} -> {new}"))
}
