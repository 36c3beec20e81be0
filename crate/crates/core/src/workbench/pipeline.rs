use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::austransform::{verify_higher_auslander, VerifyOptions};
use crate::error::{Error, Result};
use crate::nabelian::{check_axioms, SamplingPolicy, SubcategorySpec};
use crate::quivrep::enumerate_indecomposables;
use crate::tilting::{search_cluster_tilting, Ambient, SearchOutcome};

use super::cache::{Cache, EnumerationRecord};
use super::canonical::{canonical_value, to_canonical_json};
use super::instance::Instance;

pub const REPORT_SCHEMA: &str = "hiaus-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    CheckAxioms,
    FindCt,
    VerifyAuslander,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::FindCt => "find-ct",
            Command::VerifyAuslander => "verify-auslander",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubcategoryChoice {
    /// `all` for n = 1, otherwise the first cluster tilting subcategory found.
    Auto,
    All,
    Named(String),
}

impl std::str::FromStr for SubcategoryChoice {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "auto" => SubcategoryChoice::Auto,
            "all" => SubcategoryChoice::All,
            other => SubcategoryChoice::Named(other.to_string()),
        })
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Overrides the instance's `n`.
    pub n: Option<usize>,
    pub seed: u64,
    pub subcategory: SubcategoryChoice,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { n: None, seed: 0, subcategory: SubcategoryChoice::Auto, timings: false }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub pass: bool,
    pub report: Value,
}

impl Outcome {
    pub fn json(&self) -> String {
        to_canonical_json(&self.report).expect("reports are plain JSON")
    }

    pub fn text(&self) -> String {
        super::render::render_text(&self.report)
    }
}

struct Timer {
    enabled: bool,
    start: Instant,
    stages: Map<String, Value>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer { enabled, start: Instant::now(), stages: Map::new() }
    }

    fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if self.enabled {
            self.stages.insert(name.into(), json!(t.elapsed().as_secs_f64() * 1000.0));
        }
        out
    }

    fn finish(mut self) -> Option<Value> {
        if !self.enabled {
            return None;
        }
        self.stages.insert("total".into(), json!(self.start.elapsed().as_secs_f64() * 1000.0));
        Some(Value::Object(self.stages))
    }
}

/// Enumerates the ambient indecomposables, through the cache.
pub fn ambient(instance: &Instance, seed: u64, cache: &mut Cache) -> Result<Ambient> {
    let alg = instance.algebra.clone();
    let opts = instance.enumeration_options();
    let material = format!(
        "{}\n{}\n{:?}\n{}",
        instance.algebra_digest()?,
        opts.dim_bound,
        opts.declared_max_dim,
        opts.budget
    );
    let record = cache.get_or_compute("enumeration", &format!("{material}\n{seed}"), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(EnumerationRecord::of(&enumerate_indecomposables(&alg, &opts, &mut rng)))
    })?;
    let enumeration = record.to_enumeration(&alg)?;
    Ok(Ambient::new(alg, &enumeration))
}

fn named(instance: &Instance, ambient: &Ambient, name: &str, seed: u64) -> Result<SubcategorySpec> {
    let labels = instance.file.subcategories.get(name).ok_or_else(|| Error::Parse {
        location: "subcategories".into(),
        message: format!(
            "no subcategory named `{name}`; declared: {:?}",
            instance.file.subcategories.keys().collect::<Vec<_>>()
        ),
    })?;
    let mut idx = Vec::new();
    for l in labels {
        let i = ambient.index_of(l).ok_or_else(|| Error::Parse {
            location: format!("subcategories.{name}"),
            message: format!("unknown indecomposable `{l}`; known: {}", ambient.labels.join(", ")),
        })?;
        idx.push(i);
    }
    ambient.subcategory(name, &idx, seed)
}

enum Resolved {
    Found(SubcategorySpec),
    /// Auto selection with no cluster tilting subcategory.
    None(SearchOutcome),
}

fn resolve(
    instance: &Instance,
    ambient: &Ambient,
    n: usize,
    opts: &RunOptions,
    search: Option<&SearchOutcome>,
) -> Result<Resolved> {
    match &opts.subcategory {
        SubcategoryChoice::All => Ok(Resolved::Found(ambient.everything(opts.seed)?)),
        SubcategoryChoice::Named(name) => Ok(Resolved::Found(named(instance, ambient, name, opts.seed)?)),
        SubcategoryChoice::Auto if n == 1 => Ok(Resolved::Found(ambient.everything(opts.seed)?)),
        SubcategoryChoice::Auto => {
            let owned;
            let s = match search {
                Some(s) => s,
                None => {
                    owned = search_cluster_tilting(ambient, n, opts.seed)?;
                    &owned
                }
            };
            match s.certificates.first() {
                Some(c) => Ok(Resolved::Found(c.spec.clone())),
                None => Ok(Resolved::None(s.clone())),
            }
        }
    }
}

fn choice_name(c: &SubcategoryChoice) -> String {
    match c {
        SubcategoryChoice::Auto => "auto".into(),
        SubcategoryChoice::All => "all".into(),
        SubcategoryChoice::Named(s) => s.clone(),
    }
}

fn no_subcategory(search: &SearchOutcome) -> Result<Value> {
    Ok(json!({
        "pass": false,
        "reason": format!("no {}-cluster tilting subcategory among {} ambient indecomposables", search.n, search.ambient.len()),
        "search": canonical_value(search)?,
    }))
}

fn check_axioms_section(spec: &SubcategorySpec, n: usize, seed: u64) -> Result<(bool, Value)> {
    let r = check_axioms(spec, n, &SamplingPolicy::new(seed))?;
    Ok((r.pass, canonical_value(&r)?))
}

fn find_ct_section(search: &SearchOutcome, seed: u64) -> Result<(bool, Value)> {
    let mut cross = Vec::new();
    let mut pass = !search.certificates.is_empty();
    for c in &search.certificates {
        let r = check_axioms(&c.spec, search.n, &SamplingPolicy::new(seed))?;
        if !r.pass {
            return Err(Error::InvariantViolation(format!(
                "certified {}-cluster tilting subcategory {} fails the {}-abelian axioms",
                search.n,
                c.spec.name(),
                search.n
            )));
        }
        pass &= c.cluster_tilting;
        cross.push(json!({
            "subcategory": c.spec.name(),
            "members": c.subcategory.members,
            "axioms": canonical_value(&r)?,
        }));
    }
    let found: Vec<Value> = search
        .certificates
        .iter()
        .map(|c| json!({"name": c.spec.name(), "members": c.subcategory.members, "size": c.spec.len()}))
        .collect();
    Ok((
        pass,
        json!({
            "pass": pass,
            "count": search.certificates.len(),
            "found": found,
            "search": canonical_value(search)?,
            "axiom_cross_checks": cross,
        }),
    ))
}

fn verify_section(instance: &Instance, spec: &SubcategorySpec, n: usize, ambient: &Ambient, seed: u64) -> Result<(bool, Value)> {
    let opts = VerifyOptions { instance: instance.name().to_string(), gamma_dim_bound: instance.file.gamma_dim_bound, seed };
    let r = verify_higher_auslander(spec, n, ambient, &opts)?;
    Ok((r.pass, canonical_value(&r)?))
}

fn envelope<T: Serialize>(instance: &Instance, command: Command, n: usize, opts: &RunOptions, pass: bool, result: &T) -> Result<Map<String, Value>> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(REPORT_SCHEMA));
    m.insert("command".into(), json!(command.name()));
    m.insert("instance".into(), json!(instance.name()));
    m.insert("instance_sha256".into(), json!(instance.digest()?));
    m.insert("n".into(), json!(n));
    m.insert("seed".into(), json!(opts.seed));
    m.insert("subcategory_choice".into(), json!(choice_name(&opts.subcategory)));
    m.insert("pass".into(), json!(pass));
    m.insert("result".into(), canonical_value(result)?);
    Ok(m)
}

/// Runs one command. Verdict failures give `pass = false`; errors are
/// internal failures.
pub fn run(command: Command, instance: &Instance, opts: &RunOptions, cache: &mut Cache) -> Result<Outcome> {
    let n = opts.n.unwrap_or(instance.file.n);
    if n == 0 {
        return Err(Error::Parse { location: "--n".into(), message: "n must be at least 1".into() });
    }
    let mut timer = Timer::new(opts.timings);
    let ambient = timer.stage("enumeration", || ambient(instance, opts.seed, cache))?;
    let (pass, result) = match command {
        Command::CheckAxioms => match resolve(instance, &ambient, n, opts, None)? {
            Resolved::Found(spec) => timer.stage("check_axioms", || check_axioms_section(&spec, n, opts.seed))?,
            Resolved::None(s) => (false, no_subcategory(&s)?),
        },
        Command::FindCt => {
            let search = timer.stage("search", || search_cluster_tilting(&ambient, n, opts.seed))?;
            timer.stage("cross_check", || find_ct_section(&search, opts.seed))?
        }
        Command::VerifyAuslander => match resolve(instance, &ambient, n, opts, None)? {
            Resolved::Found(spec) => timer.stage("verify", || verify_section(instance, &spec, n, &ambient, opts.seed))?,
            Resolved::None(s) => (false, no_subcategory(&s)?),
        },
        Command::Report => {
            let search = timer.stage("search", || search_cluster_tilting(&ambient, n, opts.seed))?;
            let (ct_pass, ct) = timer.stage("cross_check", || find_ct_section(&search, opts.seed))?;
            let mut sections = Map::new();
            sections.insert("find_ct".into(), ct);
            let mut pass = ct_pass;
            match resolve(instance, &ambient, n, opts, Some(&search))? {
                Resolved::Found(spec) => {
                    let (ax_pass, ax) = timer.stage("check_axioms", || check_axioms_section(&spec, n, opts.seed))?;
                    let (v_pass, v) = timer.stage("verify", || verify_section(instance, &spec, n, &ambient, opts.seed))?;
                    sections.insert("check_axioms".into(), ax);
                    sections.insert("verify_auslander".into(), v);
                    pass &= ax_pass && v_pass;
                }
                Resolved::None(_) => pass = false,
            }
            (pass, Value::Object(sections))
        }
    };
    let mut env = envelope(instance, command, n, opts, pass, &result)?;
    env.insert(
        "ambient".into(),
        json!({"labels": ambient.labels, "complete": ambient.complete, "note": ambient.note}),
    );
    if let Some(t) = timer.finish() {
        env.insert("timings_ms".into(), t);
    }
    Ok(Outcome { pass, report: canonical_value(&Value::Object(env))? })
}
