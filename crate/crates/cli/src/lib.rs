//! Command implementations behind the `sinfer` binary.
//!
//! Each command reads one JSON document and produces a [`CommandReport`].
//! Reports are built from ordered maps only, so identical inputs always
//! serialize to identical bytes.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use signed_inference::assessment::DEFAULT_VIOLATION_LIMIT;
use signed_inference::decompose::{self, ZeroPolicy};
use signed_inference::disk::{self, DiskMeasure, PolarGrid, Region};
use signed_inference::json as sj;
use signed_inference::quotient;
use signed_inference::rational::{self, Rational};
use signed_inference::{solve_representation, Assessment, Error, Event, RepresentationStatus, SignedMeasure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Axioms,
    Solve,
    Decompose,
    Bayes,
    Quotient,
    Archery,
    Knife,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Axioms => "axioms",
            Command::Solve => "solve",
            Command::Decompose => "decompose",
            Command::Bayes => "bayes",
            Command::Quotient => "quotient",
            Command::Archery => "archery",
            Command::Knife => "knife",
        }
    }

    fn needs_input(self) -> bool {
        self != Command::Archery
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Infeasible,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Infeasible => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
}

impl CommandReport {
    fn error(command: Command, diagnostic: String) -> Self {
        Self {
            command: command.name().into(),
            status: Status::Error,
            payload: None,
            diagnostics: vec![diagnostic],
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("status".into(), json!(self.status.as_str()));
        if let Some(p) = &self.payload {
            obj.insert("payload".into(), p.clone());
        }
        obj.insert("diagnostics".into(), json!(self.diagnostics));
        Value::Object(obj)
    }
}

/// Options shared by all commands.
#[derive(Clone, Debug)]
pub struct Flags {
    pub zero_policy: ZeroPolicy,
    pub p: Option<Vec<Rational>>,
    pub grid: Option<PathBuf>,
    pub max_violations: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Self {
            zero_policy: ZeroPolicy::ToPos,
            p: None,
            grid: None,
            max_violations: DEFAULT_VIOLATION_LIMIT,
        }
    }
}

/// What a command body can fail with.
enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn describe(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(msg) => msg.clone(),
        }
    }
}

type Outcome = std::result::Result<(Status, Value), Failure>;

/// Runs `command` on the JSON file at `input`. `archery` takes no input.
pub fn run(command: Command, input: Option<&Path>, flags: &Flags) -> CommandReport {
    let doc = match (input, command.needs_input()) {
        (Some(path), _) => match read_json(path) {
            Ok(v) => Some(v),
            Err(f) => return CommandReport::error(command, f.describe()),
        },
        (None, true) => {
            return CommandReport::error(command, format!("command {} needs an input file", command.name()))
        }
        (None, false) => None,
    };
    run_value(command, doc.as_ref(), flags)
}

/// Runs `command` on an already parsed document.
pub fn run_value(command: Command, doc: Option<&Value>, flags: &Flags) -> CommandReport {
    let outcome = (|| -> Outcome {
        let grid = load_grid(flags)?;
        let input = || doc.ok_or_else(|| Failure::Io(format!("command {} needs an input file", command.name())));
        match command {
            Command::Axioms => axioms(input()?, flags),
            Command::Solve => solve(input()?),
            Command::Decompose => decompose_cmd(input()?, flags),
            Command::Bayes => bayes(input()?, flags),
            Command::Quotient => quotient_cmd(input()?),
            Command::Archery => archery(&grid),
            Command::Knife => knife_cmd(input()?, &grid),
        }
    })();
    match outcome {
        Ok((status, payload)) => CommandReport {
            command: command.name().into(),
            status,
            payload: Some(payload),
            diagnostics: Vec::new(),
        },
        Err(f) => CommandReport::error(command, f.describe()),
    }
}

/// Runs `command` on every `*.json` file of `dir`, in file-name order, with
/// the files evaluated concurrently.
pub fn run_batch(command: Command, dir: &Path, flags: &Flags) -> std::result::Result<Vec<(String, CommandReport)>, String> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("cannot read batch directory {}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = files
            .iter()
            .map(|path| scope.spawn(move || run(command, Some(path), flags)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("command thread panicked"))
            .collect::<Vec<_>>()
    });
    Ok(files
        .iter()
        .map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned())
        .zip(reports)
        .collect())
}

pub fn batch_to_json(reports: &[(String, CommandReport)]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|(file, r)| {
                let mut obj = Map::new();
                obj.insert("file".into(), json!(file));
                if let Value::Object(fields) = r.to_json() {
                    obj.extend(fields);
                }
                Value::Object(obj)
            })
            .collect(),
    )
}

/// Worst status of a batch: error beats infeasible beats ok.
pub fn batch_status(reports: &[(String, CommandReport)]) -> Status {
    let statuses = reports.iter().map(|(_, r)| r.status);
    if statuses.clone().any(|s| s == Status::Error) {
        Status::Error
    } else if statuses.clone().any(|s| s == Status::Infeasible) {
        Status::Infeasible
    } else {
        Status::Ok
    }
}

pub fn parse_p_list(items: &[String]) -> std::result::Result<Vec<Rational>, String> {
    items
        .iter()
        .map(|s| rational::parse(s.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Core(Error::from(e)))
}

fn load_grid(flags: &Flags) -> std::result::Result<PolarGrid, Failure> {
    match &flags.grid {
        None => Ok(PolarGrid::default_grid()),
        Some(path) => Ok(sj::parse_grid(&read_json(path)?)?),
    }
}

fn violations_json<T>(v: &signed_inference::Violations<T>, item: impl Fn(&T) -> Value) -> Value {
    json!({
        "holds": v.is_empty(),
        "total": v.total,
        "truncated": v.truncated(),
        "violations": v.items.iter().map(item).collect::<Vec<_>>(),
    })
}

fn axioms(doc: &Value, flags: &Flags) -> Outcome {
    let (a, _) = sj::parse_assessment_or_measure(doc)?;
    let alg = a.algebra();
    let ev = |e: Event| sj::event_to_json(alg, e);
    let separability = a.check_separability_limited(flags.max_violations);
    let monotonicity = a.check_monotonicity_limited(flags.max_violations);
    let sign_table: Vec<Value> = alg
        .enumerate_events()?
        .into_iter()
        .map(|e| {
            let s = a.sign_classify(e);
            json!({
                "event": ev(e),
                "sign": s.base.as_str(),
                "purely_non_negative": s.purely_non_negative,
                "purely_null": s.purely_null,
                "purely_non_positive": s.purely_non_positive,
                "thoroughly_positive": s.thoroughly_positive,
                "thoroughly_negative": s.thoroughly_negative,
            })
        })
        .collect();
    let payload = json!({
        "assessment": sj::assessment_to_json(&a),
        // Assessments are stored as a rank per event, so completeness and
        // transitivity hold by construction.
        "order": { "holds": true },
        "separability": violations_json(&separability, |&(x, y, z)| json!([ev(x), ev(y), ev(z)])),
        "monotonicity": violations_json(&monotonicity, |&(x, y)| json!([ev(x), ev(y)])),
        "nondegeneracy": { "holds": a.check_nondegeneracy() },
        "absoluteness": { "holds": a.check_absoluteness() },
        "top_ranked": sj::events_to_json(alg, &a.top_ranked()),
        "sign_table": sign_table,
    });
    Ok((Status::Ok, payload))
}

fn solve(doc: &Value) -> Outcome {
    let (a, _) = sj::parse_assessment_or_measure(doc)?;
    let r = solve_representation(&a)?;
    let status = if r.status == RepresentationStatus::Infeasible {
        Status::Infeasible
    } else {
        Status::Ok
    };
    Ok((status, sj::representation_to_json(&r)))
}

/// The normalized measure behind an input, solving for one if only a
/// ranking is given.
fn measure_of(doc: &Value) -> std::result::Result<Result<SignedMeasure, Value>, Failure> {
    let (a, mu) = sj::parse_assessment_or_measure(doc)?;
    match mu {
        Some(mu) => Ok(Ok(mu.normalize()?)),
        None => {
            let r = solve_representation(&a)?;
            match r.measure {
                Some(m) => Ok(Ok(m)),
                None => Ok(Err(sj::representation_to_json(&r))),
            }
        }
    }
}

fn decompose_cmd(doc: &Value, flags: &Flags) -> Outcome {
    let mu = match measure_of(doc)? {
        Ok(mu) => mu,
        Err(rep) => return Ok((Status::Infeasible, json!({ "representation": rep }))),
    };
    let alg = mu.algebra();
    let a = Assessment::induced(&mu)?;
    let pairs = decompose::hahn(&mu, flags.zero_policy)?;
    let hahn: Vec<Value> = pairs
        .iter()
        .map(|h| {
            let mut v = sj::hahn_to_json(alg, h);
            v["check_hahn"] = json!(a.check_hahn(h.pos, h.neg).holds());
            v
        })
        .collect();
    let jp = decompose::jordan(&mu)?;
    let sup_formula = decompose::verify_jordan_sup_formula(&mu, &jp)?;
    let payload = json!({
        "measure": sj::measure_to_json(&mu),
        "hahn": hahn,
        "jordan": sj::jordan_to_json(&jp),
        "sup_formula_holds": sup_formula,
    });
    Ok((Status::Ok, payload))
}

fn bayes(doc: &Value, flags: &Flags) -> Outcome {
    let mu = match measure_of(doc)? {
        Ok(mu) => mu,
        Err(rep) => return Ok((Status::Infeasible, json!({ "representation": rep }))),
    };
    let alg = mu.algebra();
    let guess = match doc.get("guess") {
        Some(g) => Some(sj::parse_event(alg, g)?),
        None => None,
    };
    let a = Assessment::induced(&mu)?;
    let ps = flags.p.clone().unwrap_or_else(decompose::p_grid);
    let mut family = Vec::new();
    for p in &ps {
        let rep = decompose::bayes_family(&mu, p, guess)?;
        let check = decompose::verify_bayesian(&a, &rep.mu0, &rep.mu1, rep.guess)?;
        family.push(json!({
            "p": sj::q(p),
            "representation": sj::bayes_to_json(&rep),
            "verification": bayes_report_json(alg, &check),
        }));
    }
    let payload = json!({
        "measure": sj::measure_to_json(&mu),
        "hahn_positive": sj::event_to_json(alg, decompose::default_hahn(&mu).pos),
        "family": family,
    });
    Ok((Status::Ok, payload))
}

fn bayes_report_json(alg: &signed_inference::Algebra, r: &decompose::BayesianReport) -> Value {
    json!({
        "holds": r.holds(),
        "probability_measures": r.probability_measures,
        "ranking": r.ranking,
        "prior_mass_in_unit": r.prior_mass_in_unit,
        "conditional": r.conditional,
        "conditional_witness": r.conditional_witness.map(|e| sj::event_to_json(alg, e)),
    })
}

fn quotient_cmd(doc: &Value) -> Outcome {
    let (a, _) = sj::parse_assessment_or_measure(doc)?;
    let q = quotient::null_quotient(&a)?;
    let mut payload = sj::quotient_to_json(&q);
    payload["purely_null_classes"] = json!(q.purely_null_classes());
    payload["lattice_laws_hold"] = json!(q.lattice_law_violations().is_empty());
    payload["ranking_preserved"] = json!(q.ranking_violations().is_empty());
    Ok((Status::Ok, payload))
}

fn archery(grid: &PolarGrid) -> Outcome {
    let m = disk::archery_measures(grid)?;
    let b = grid.bullseye();
    let outside = grid.outside_bullseye();
    let full = grid.full();

    let mut measures = Map::new();
    let mut bullseye_mass = Map::new();
    for (name, dm) in m.named() {
        measures.insert(name.into(), sj::disk_measure_to_json(dm));
        bullseye_mass.insert(format!("{name}(B)"), sj::q(&dm.measure_of(&b)?));
    }

    let scores = json!({
        "S": sj::q(&m.score(&full)?),
        "B": sj::q(&m.score(&b)?),
        "S\\B": sj::q(&m.score(&outside)?),
    });
    let conditioning = json!({
        "bayes_condition(μ_H, S\\B) = μ_VL": m.high.bayes_condition(&outside)? == m.very_low,
        "jeffrey(μ_H, B, 1/4) = μ_L": m.high.jeffrey(&b, &rational::ratio(1, 4))? == m.low,
        "μ_L = μℓ": m.low == m.lebesgue,
    });

    let diff = m.score_measure()?.export_to_algebra()?.normalize()?;
    let second = m.low_minus_high()?.export_to_algebra()?.normalize()?;
    let alg = diff.algebra().clone();
    let a = Assessment::induced(&diff)?;
    let outside_event = outside.to_event()?;
    let top = a.top_ranked();
    let top_match = top.iter().all(|&e| a.approx_equivalent(e, outside_event))
        && alg.enumerate_events()?.into_iter().all(|e| {
            !a.approx_equivalent(e, outside_event) || a.rank(e) == a.rank(outside_event)
        });

    let jp = decompose::jordan(&diff)?;
    let bullseye_cells = m.bullseye.export_to_algebra()?;
    let outside_cells = m.outside.export_to_algebra()?;
    let density = decompose::radon_nikodym_density(&m.high.export_to_algebra()?, &m.very_low.export_to_algebra()?)?;

    let mut family = Vec::new();
    for p in [rational::ratio(23, 100), rational::ratio(73, 150)] {
        let rep = decompose::bayes_family(&diff, &p, None)?;
        let check = decompose::verify_bayesian(&a, &rep.mu0, &rep.mu1, rep.guess)?;
        let mut entry = json!({
            "p": sj::q(&p),
            "representation": sj::bayes_to_json(&rep),
            "verification": bayes_report_json(&alg, &check),
        });
        if p == rational::ratio(23, 100) {
            entry["mu0 = μ_H"] = json!(rep.mu0 == m.high.export_to_algebra()?);
        }
        family.push(entry);
    }

    let annul = disk::annulment_by_knife(&m.score_measure()?, &outside, &b)?;

    let mut payload = Map::new();
    payload.insert("grid".into(), sj::grid_to_json(grid));
    payload.insert("bullseye".into(), sj::region_to_json(grid, &b));
    payload.extend(bullseye_mass);
    payload.insert("measures".into(), Value::Object(measures));
    payload.insert("scores".into(), scores);
    payload.insert("conditioning".into(), conditioning);
    payload.insert(
        "export".into(),
        json!({
            "normalized_difference": sj::measure_to_json(&diff),
            "second_scenario_identical": diff == second,
            "assessments_equal": Assessment::induced(&second)? == a,
            "top_ranked": top.iter().map(|&e| sj::region_to_json(grid, &Region::from_event(grid, e))).collect::<Vec<_>>(),
            "top_ranked_approx_equivalent_to_S\\B": top_match,
        }),
    );
    payload.insert(
        "decomposition".into(),
        json!({
            "jordan": sj::jordan_to_json(&jp),
            "mu0 = μ_B": jp.mu0 == bullseye_cells,
            "mu1 = μ_S\\B": jp.mu1 == outside_cells,
            "density_μ_VL_wrt_μ_H": density.iter().map(sj::q).collect::<Vec<_>>(),
        }),
    );
    payload.insert("family".into(), Value::Array(family));
    payload.insert(
        "annulment".into(),
        json!({
            "swept": sj::swept_to_json(grid, &annul),
            "score_mass": sj::q(&annul.measure_under(&m.score_measure()?)?),
        }),
    );
    Ok((Status::Ok, Value::Object(payload)))
}

/// Input: `{"measure": name | {"cell_mass": [...]}, "region": [[r, s], ...], "v": q | [q, ...]}`.
/// A `"grid"` object in the input overrides the `--grid` flag.
fn knife_cmd(doc: &Value, grid: &PolarGrid) -> Outcome {
    let grid = match doc.get("grid") {
        Some(g) => sj::parse_grid(g)?,
        None => grid.clone(),
    };
    let measure = match doc.get("measure") {
        None => DiskMeasure::lebesgue(&grid),
        Some(Value::String(name)) => {
            let named = disk::archery_measures(&grid)?;
            named
                .named()
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| (*m).clone())
                .ok_or_else(|| Error::Parse(format!("unknown measure name {name:?}")))?
        }
        Some(obj) => {
            let masses = obj
                .get("cell_mass")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("\"measure\" must be a name or {\"cell_mass\": [...]}".into()))?
                .iter()
                .map(sj::parse_rational)
                .collect::<signed_inference::Result<Vec<_>>>()?;
            DiskMeasure::new(grid.clone(), masses)?
        }
    };
    let region = match doc.get("region") {
        Some(r) => sj::parse_region(&grid, r)?,
        None => grid.full(),
    };
    let vs: Vec<Rational> = match doc.get("v") {
        Some(Value::Array(items)) => items.iter().map(sj::parse_rational).collect::<signed_inference::Result<_>>()?,
        Some(v) => vec![sj::parse_rational(v)?],
        None => return Err(Error::Parse("missing \"v\"".into()).into()),
    };
    let mut sweeps = Vec::new();
    for v in &vs {
        let s = disk::knife(&measure, &region, v)?;
        let mut entry = sj::swept_to_json(&grid, &s);
        entry["v"] = sj::q(v);
        entry["mass"] = sj::q(&s.measure_under(&measure)?);
        sweeps.push(entry);
    }
    let payload = json!({
        "grid": sj::grid_to_json(&grid),
        "region_mass": sj::q(&measure.measure_of(&region)?),
        "sweeps": sweeps,
    });
    Ok((Status::Ok, payload))
}
