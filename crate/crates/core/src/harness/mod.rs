//! Seeded property runner.
//!
//! Each property draws one instance per trial from a ChaCha8 stream keyed by
//! `(seed, property, trial)`, so reports do not depend on thread count.
//! Trials run on rayon and are merged in trial order. The first failing
//! trial is shrunk to a smaller instance that still fails.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dsl::{parse, parse_hom, DslError, HomExpr, RingExpr};
use crate::error::{Error, Limits};

pub mod gen;
mod props;
mod shrink;

pub use props::PROPERTIES;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Ring(RingExpr),
    Hom(HomExpr),
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Ring(e) => write!(f, "{e}"),
            Instance::Hom(h) => write!(f, "{h}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Ring,
    Hom,
    /// Either; ring syntax is tried first.
    Any,
}

impl InstanceKind {
    pub fn parse(self, text: &str) -> Result<Instance, DslError> {
        match self {
            InstanceKind::Ring => parse(text).map(Instance::Ring),
            InstanceKind::Hom => parse_hom(text).map(Instance::Hom),
            InstanceKind::Any => parse(text)
                .map(Instance::Ring)
                .or_else(|_| parse_hom(text).map(Instance::Hom)),
        }
    }
}

/// Outcome of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// A size guard stopped the check, or the instance does not meet the
    /// property's hypotheses.
    Abort(String),
}

impl From<Result<Verdict, Error>> for Verdict {
    fn from(r: Result<Verdict, Error>) -> Verdict {
        match r {
            Ok(v) => v,
            Err(
                e @ (Error::TooLarge { .. }
                | Error::TooManyIdeals { .. }
                | Error::SizeOverflow
                | Error::NotAProduct(_)
                | Error::NotLocal { .. }
                | Error::NotInjective),
            ) => Verdict::Abort(e.to_string()),
            Err(e) => Verdict::Fail(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    /// Replay with `prodspec verify <id> --instance '<instance>'`.
    pub instance: String,
    pub detail: String,
    pub trial: u64,
    pub original: String,
    pub shrink_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema: u32,
    pub property_id: String,
    pub seed: u64,
    pub trials: u64,
    pub checked: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub max_size: u64,
    pub aborted: Vec<String>,
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub schema: u32,
    pub seed: u64,
    pub status: Status,
    pub reports: Vec<VerificationReport>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub seed: u64,
    /// Overrides every property's default trial count.
    pub trials: Option<u64>,
    /// Overrides every property's default generated-ring size bound.
    pub max_size: Option<u64>,
    pub max_cover: usize,
    pub limits: Limits,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 1,
            trials: None,
            max_size: None,
            max_cover: 4,
            limits: Limits::default(),
        }
    }
}

/// What a check sees besides the instance.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub max_size: u64,
    pub max_cover: usize,
    pub limits: Limits,
}

pub struct Property {
    pub id: &'static str,
    pub summary: &'static str,
    pub kind: InstanceKind,
    pub default_trials: u64,
    pub default_max_size: u64,
    /// The finite shadow of the statement holds trivially; a clean run is
    /// reported as vacuous rather than pass.
    pub vacuous: bool,
    pub notes: fn(&Ctx) -> Vec<String>,
    generate: fn(&mut ChaCha8Rng, u64, &Ctx) -> Instance,
    check: fn(&Instance, &Ctx) -> Result<Verdict, Error>,
}

impl Property {
    pub fn check(&self, instance: &Instance, ctx: &Ctx) -> Verdict {
        (self.check)(instance, ctx).into()
    }

    pub fn generate(&self, seed: u64, trial: u64, ctx: &Ctx) -> Instance {
        (self.generate)(&mut trial_rng(seed, self.id, trial), trial, ctx)
    }
}

pub fn property(id: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.id == id)
}

fn stream_key(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn trial_rng(seed: u64, id: &str, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream_key(id));
    rng.set_stream(trial);
    rng
}

/// The check context a property runs under for `config`.
pub fn context(p: &Property, config: &Config) -> Ctx {
    let max_size = config.max_size.unwrap_or(p.default_max_size);
    let mut limits = config.limits;
    limits.max_size = limits.max_size.max(max_size);
    Ctx {
        max_size,
        max_cover: config.max_cover,
        limits,
    }
}

fn status_of(p: &Property, failed: bool, checked: u64) -> Status {
    if failed {
        Status::Fail
    } else if p.vacuous || checked == 0 {
        Status::Vacuous
    } else {
        Status::Pass
    }
}

pub fn run_property(p: &Property, config: &Config) -> VerificationReport {
    let start = Instant::now();
    let ctx = context(p, config);
    let trials = config.trials.unwrap_or(p.default_trials);
    let outcomes: Vec<(Instance, Verdict)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let inst = p.generate(config.seed, t, &ctx);
            let verdict = p.check(&inst, &ctx);
            (inst, verdict)
        })
        .collect();

    let mut checked = 0;
    let mut aborted = Vec::new();
    let mut failure = None;
    for (t, (inst, verdict)) in outcomes.into_iter().enumerate() {
        match verdict {
            Verdict::Pass => checked += 1,
            Verdict::Abort(why) => aborted.push(format!("trial {t} ({inst}): {why}")),
            Verdict::Fail(detail) => {
                checked += 1;
                if failure.is_none() {
                    failure = Some((t as u64, inst, detail));
                }
            }
        }
    }
    let counterexample = failure.map(|(trial, inst, detail)| {
        let original = inst.to_string();
        let (inst, detail, shrink_steps) = shrink::minimize(p, &ctx, inst, detail);
        Counterexample {
            instance: inst.to_string(),
            detail,
            trial,
            original,
            shrink_steps,
        }
    });
    VerificationReport {
        schema: SCHEMA,
        property_id: p.id.to_string(),
        seed: config.seed,
        trials,
        checked,
        status: status_of(p, counterexample.is_some(), checked),
        counterexample,
        max_size: ctx.max_size,
        aborted,
        notes: (p.notes)(&ctx),
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Checks one given instance, as when replaying a counterexample.
pub fn replay(p: &Property, config: &Config, instance: &Instance) -> VerificationReport {
    let start = Instant::now();
    let ctx = context(p, config);
    let verdict = p.check(instance, &ctx);
    let (checked, aborted, counterexample) = match verdict {
        Verdict::Pass => (1, vec![], None),
        Verdict::Abort(why) => (0, vec![format!("({instance}): {why}")], None),
        Verdict::Fail(detail) => (
            1,
            vec![],
            Some(Counterexample {
                instance: instance.to_string(),
                detail,
                trial: 0,
                original: instance.to_string(),
                shrink_steps: 0,
            }),
        ),
    };
    VerificationReport {
        schema: SCHEMA,
        property_id: p.id.to_string(),
        seed: config.seed,
        trials: 1,
        checked,
        status: status_of(p, counterexample.is_some(), checked),
        counterexample,
        max_size: ctx.max_size,
        aborted,
        notes: (p.notes)(&ctx),
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn run_all(config: &Config) -> SuiteReport {
    let start = Instant::now();
    let reports: Vec<VerificationReport> =
        PROPERTIES.iter().map(|p| run_property(p, config)).collect();
    let status = if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    SuiteReport {
        schema: SCHEMA,
        seed: config.seed,
        status,
        reports,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

impl VerificationReport {
    /// Human-readable block: a status line, then counterexample, aborts and
    /// notes indented.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{:<7} {:<22} checked {}/{}  seed {}  max-size {}  {} ms\n",
            self.status.to_string().to_uppercase(),
            self.property_id,
            self.checked,
            self.trials,
            self.seed,
            self.max_size,
            self.wall_time_ms
        );
        if let Some(c) = &self.counterexample {
            out += &format!("        counterexample: {}\n", c.instance);
            out += &format!("        {}\n", c.detail);
            if c.shrink_steps > 0 {
                out += &format!(
                    "        shrunk in {} steps from trial {}: {}\n",
                    c.shrink_steps, c.trial, c.original
                );
            }
        }
        for a in &self.aborted {
            out += &format!("        aborted: {a}\n");
        }
        for n in &self.notes {
            out += &format!("        note: {n}\n");
        }
        out
    }
}
