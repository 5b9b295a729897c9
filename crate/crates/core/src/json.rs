//! JSON forms of the library's values.
//!
//! ```text
//! Algebra            {"atoms": ["a1", "a2", ...]}
//! Event              ["a1", "a3"]                      (labels in atom order)
//! Assessment         {"algebra": ..., "levels": [[event, ...], ...]}   lowest first
//! SignedMeasure      {"weights": {"a1": "3/4", ...}}   (key order = atom order)
//! Grid               {"ring_bounds_sq": ["0", "1/4", "1"], "n_sectors": 4}
//! Region             [[ring, sector], ...]
//! SweptRegion        {"cells": region, "angle": "p/q"}
//! ```
//!
//! Rationals are written as `"p/q"` strings in lowest terms.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Event};
use crate::assessment::Assessment;
use crate::decompose::{BayesianRep, HahnPair, JordanPair};
use crate::disk::{DiskMeasure, PolarGrid, Region, SweptRegion};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::quotient::QuotientAlgebra;
use crate::rational::{self, Rational};
use crate::repsolve::RepresentationResult;

pub fn q(x: &Rational) -> Value {
    Value::String(rational::format(x))
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        other => Err(Error::Parse(format!("expected a \"p/q\" string, got {other}"))),
    }
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    json!({ "atoms": alg.labels() })
}

#[derive(Deserialize)]
struct AlgebraInput {
    atoms: Vec<String>,
}

pub fn parse_algebra(v: &Value) -> Result<Algebra> {
    let input = AlgebraInput::deserialize(v)?;
    Algebra::new(input.atoms)
}

pub fn event_to_json(alg: &Algebra, e: Event) -> Value {
    json!(alg.event_labels(e))
}

pub fn parse_event(alg: &Algebra, v: &Value) -> Result<Event> {
    let labels = Vec::<String>::deserialize(v)?;
    alg.event_from_labels(&labels)
}

pub fn events_to_json(alg: &Algebra, events: &[Event]) -> Value {
    Value::Array(events.iter().map(|&e| event_to_json(alg, e)).collect())
}

pub fn assessment_to_json(a: &Assessment) -> Value {
    let alg = a.algebra();
    let levels: Vec<Value> = a.level_members().iter().map(|l| events_to_json(alg, l)).collect();
    json!({ "algebra": algebra_to_json(alg), "levels": levels })
}

pub fn parse_assessment(v: &Value) -> Result<Assessment> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("assessment must be a JSON object".into()))?;
    let alg = parse_algebra(obj.get("algebra").ok_or_else(|| Error::Parse("missing \"algebra\"".into()))?)?;
    let levels = obj
        .get("levels")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing \"levels\" array".into()))?;
    let levels = levels
        .iter()
        .map(|level| {
            level
                .as_array()
                .ok_or_else(|| Error::Parse("each level must be an array of events".into()))?
                .iter()
                .map(|e| parse_event(&alg, e))
                .collect::<Result<Vec<Event>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Assessment::from_levels(alg, &levels)
}

pub fn measure_to_json(mu: &SignedMeasure) -> Value {
    let mut weights = Map::new();
    for (label, w) in mu.algebra().labels().iter().zip(mu.weights()) {
        weights.insert(label.clone(), q(w));
    }
    json!({ "weights": weights })
}

/// Reads `{"weights": {...}}`. Atom order follows the key order of the
/// weights object unless an explicit `"atoms"` list is given.
pub fn parse_measure(v: &Value) -> Result<SignedMeasure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("measure must be a JSON object".into()))?;
    let weights = obj
        .get("weights")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("missing \"weights\" object".into()))?;
    let labels: Vec<String> = match obj.get("atoms") {
        Some(atoms) => Vec::<String>::deserialize(atoms)?,
        None => weights.keys().cloned().collect(),
    };
    if labels.len() != weights.len() {
        return Err(Error::Parse("\"atoms\" and \"weights\" list different atoms".into()));
    }
    let alg = Algebra::new(labels)?;
    let ws = alg
        .labels()
        .iter()
        .map(|l| {
            weights
                .get(l)
                .ok_or_else(|| Error::Parse(format!("no weight for atom {l:?}")))
                .and_then(parse_rational)
        })
        .collect::<Result<Vec<_>>>()?;
    SignedMeasure::new(alg, ws)
}

/// An assessment given either directly or as a measure to induce it from.
pub fn parse_assessment_or_measure(v: &Value) -> Result<(Assessment, Option<SignedMeasure>)> {
    if v.get("weights").is_some() {
        let mu = parse_measure(v)?;
        Ok((Assessment::induced(&mu)?, Some(mu)))
    } else {
        Ok((parse_assessment(v)?, None))
    }
}

pub fn representation_to_json(r: &RepresentationResult) -> Value {
    json!({
        "status": r.status.as_str(),
        "measure": r.measure.as_ref().map(measure_to_json),
        "solution_dimension": r.solution_dimension,
        "class_values": r.class_values.as_ref().map(|vs| vs.iter().map(q).collect::<Vec<_>>()),
    })
}

pub fn hahn_to_json(alg: &Algebra, h: &HahnPair) -> Value {
    json!({ "pos": event_to_json(alg, h.pos), "neg": event_to_json(alg, h.neg) })
}

pub fn jordan_to_json(jp: &JordanPair) -> Value {
    json!({ "mu0": measure_to_json(&jp.mu0), "mu1": measure_to_json(&jp.mu1) })
}

pub fn bayes_to_json(rep: &BayesianRep) -> Value {
    json!({
        "mu0": measure_to_json(&rep.mu0),
        "mu1": measure_to_json(&rep.mu1),
        "guess": event_to_json(rep.mu0.algebra(), rep.guess),
        "p": q(&rep.p),
    })
}

pub fn quotient_to_json(qa: &QuotientAlgebra) -> Value {
    let alg = qa.source().algebra();
    let classes: Vec<Value> = qa.classes().iter().map(|c| events_to_json(alg, c)).collect();
    let representatives: Vec<Value> = (0..qa.class_count())
        .map(|c| event_to_json(alg, qa.representative(c)))
        .collect();
    json!({
        "null_part": event_to_json(alg, qa.null_part()),
        "classes": classes,
        "representatives": representatives,
        "levels": qa.levels(),
    })
}

pub fn grid_to_json(grid: &PolarGrid) -> Value {
    json!({
        "ring_bounds_sq": grid.ring_bounds_sq().iter().map(q).collect::<Vec<_>>(),
        "n_sectors": grid.n_sectors(),
    })
}

#[derive(Deserialize)]
struct GridInput {
    ring_bounds_sq: Vec<Value>,
    n_sectors: usize,
}

pub fn parse_grid(v: &Value) -> Result<PolarGrid> {
    let input = GridInput::deserialize(v)?;
    let bounds = input.ring_bounds_sq.iter().map(parse_rational).collect::<Result<Vec<_>>>()?;
    PolarGrid::new(bounds, input.n_sectors)
}

pub fn region_to_json(grid: &PolarGrid, r: &Region) -> Value {
    Value::Array(
        r.cells()
            .map(|c| {
                let (ring, sector) = grid.cell_position(c);
                json!([ring, sector])
            })
            .collect(),
    )
}

pub fn parse_region(grid: &PolarGrid, v: &Value) -> Result<Region> {
    let cells = Vec::<(usize, usize)>::deserialize(v)?;
    grid.region(cells)
}

pub fn swept_to_json(grid: &PolarGrid, s: &SweptRegion) -> Value {
    json!({ "cells": region_to_json(grid, &s.base), "angle": q(&s.angle) })
}

pub fn disk_measure_to_json(m: &DiskMeasure) -> Value {
    json!({ "cell_mass": m.cell_mass().iter().map(q).collect::<Vec<_>>() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assessment_round_trip() {
        let mu = SignedMeasure::from_ints(&[1, -1, 2]).unwrap();
        let a = Assessment::induced(&mu).unwrap();
        let v = assessment_to_json(&a);
        assert_eq!(parse_assessment(&v).unwrap(), a);
    }

    #[test]
    fn measure_keeps_key_order_and_rationals() {
        let v: Value = serde_json::from_str(r#"{"weights": {"z": "3/4", "a": "-1/2", "m": "0"}}"#).unwrap();
        let mu = parse_measure(&v).unwrap();
        assert_eq!(mu.algebra().labels(), &["z", "a", "m"]);
        assert_eq!(mu.weight(1), &rational::ratio(-1, 2));
        assert_eq!(
            serde_json::to_string(&measure_to_json(&mu)).unwrap(),
            r#"{"weights":{"z":"3/4","a":"-1/2","m":"0/1"}}"#
        );
    }

    #[test]
    fn explicit_atom_order_wins() {
        let v: Value =
            serde_json::from_str(r#"{"atoms": ["b", "a"], "weights": {"a": "1", "b": "2"}}"#).unwrap();
        let mu = parse_measure(&v).unwrap();
        assert_eq!(mu.weights(), &[rational::int(2), rational::int(1)]);
    }

    #[test]
    fn grid_and_region_forms() {
        let v: Value = serde_json::from_str(r#"{"ring_bounds_sq": ["0", "1/4", "1"], "n_sectors": 4}"#).unwrap();
        let grid = parse_grid(&v).unwrap();
        assert_eq!(grid, PolarGrid::default_grid());
        let r = parse_region(&grid, &json!([[1, 0], [0, 3]])).unwrap();
        assert_eq!(region_to_json(&grid, &r), json!([[0, 3], [1, 0]]));
        assert!(parse_region(&grid, &json!([[2, 0]])).is_err());
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        assert!(parse_measure(&json!({"weights": {"a": "1/0"}})).is_err());
        assert!(parse_assessment(&json!({"levels": []})).is_err());
        assert!(parse_event(&Algebra::with_atoms(2).unwrap(), &json!(["a9"])).is_err());
    }
}
