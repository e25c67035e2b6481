use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use prodspec::boolean::{BooleanRing, SetRing, Subset};
use prodspec::dsl::{parse_ring, parse_ring_elems, DslError};
use prodspec::harness::{self, Config, Status};
use prodspec::ideal::{jacobson_radical, nilradical};
use prodspec::localization::{filter_quotient_iso, localize, LocalFactors, MultiplicativeSet};
use prodspec::product::{classify_prime, Classification};
use prodspec::ultrafilter::{embedding_checks, m_star, BasePrimeChoice, Filter};
use prodspec::{Error, Ideal, Limits, Ring, Spectrum};

#[derive(Parser)]
#[command(name = "prodspec", version, about = "Prime spectra of finite product rings")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Size guard for exhaustive scans; for `verify`, the size bound of
    /// generated rings.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArg {
    /// Ring expression, e.g. "Z/4 x Z/9" or "(Z/12)/(6)".
    ring: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the prime ideals.
    Spec(RingArg),
    /// Connected components of the spectrum and their max-regular ideals.
    Components(RingArg),
    /// The Boolean ring of idempotents, its atoms and the Stone map.
    Boolean(RingArg),
    /// Classify a prime of a product as tame or wild.
    Classify {
        #[command(flatten)]
        ring: RingArg,
        /// Generators of the prime, e.g. "(2,0),(0,1)".
        #[arg(long)]
        prime: String,
    },
    /// Localize at a multiplicative set.
    Localize {
        #[command(flatten)]
        ring: RingArg,
        /// "complement(<gens>)", "filter(<1-based factor indices>)" or an
        /// element list whose multiplicative closure is used.
        #[arg(long)]
        mult_set: String,
    },
    /// The ultrafilter primes M* of a product.
    Ultra {
        #[command(flatten)]
        ring: RingArg,
        /// One generator list per factor, separated by ';', e.g. "2; 3".
        /// Defaults to the first prime of every factor.
        #[arg(long)]
        base_primes: Option<String>,
    },
    /// Krull dimension, radicals and structural predicates.
    Dim(RingArg),
    /// Run a verification property, or all of them.
    Verify {
        /// Property id or "all".
        property: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Trials per property; each property has its own default
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 4)]
        max_cover: usize,
        /// Check this one instance instead of generating trials.
        #[arg(long)]
        instance: Option<String>,
    },
}

/// A failure to report with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Usage {
        Usage(e.to_string())
    }
}

impl From<DslError> for Usage {
    fn from(e: DslError) -> Usage {
        Usage(e.to_string())
    }
}

type Out = Result<(Json, String, bool), Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_size {
        Some(n) if !matches!(cli.command, Command::Verify { .. }) => Limits::with_max_size(n),
        _ => Limits::default(),
    };
    match run(&cli, &limits) {
        Ok((json, text, ok)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json).expect("json"));
            } else {
                print!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, limits: &Limits) -> Out {
    match &cli.command {
        Command::Spec(r) => spec_cmd(&ring(r, limits)?),
        Command::Components(r) => components_cmd(&ring(r, limits)?),
        Command::Boolean(r) => boolean_cmd(&ring(r, limits)?),
        Command::Classify { ring: r, prime } => classify_cmd(&ring(r, limits)?, prime, limits),
        Command::Localize { ring: r, mult_set } => localize_cmd(&ring(r, limits)?, mult_set, limits),
        Command::Ultra { ring: r, base_primes } => {
            ultra_cmd(&ring(r, limits)?, base_primes.as_deref(), limits)
        }
        Command::Dim(r) => dim_cmd(&ring(r, limits)?),
        Command::Verify {
            property,
            seed,
            trials,
            max_cover,
            instance,
        } => {
            let config = Config {
                seed: *seed,
                trials: *trials,
                max_size: cli.max_size,
                max_cover: *max_cover,
                limits: Limits::default(),
            };
            verify_cmd(property, &config, instance.as_deref())
        }
    }
}

fn ring(arg: &RingArg, limits: &Limits) -> Result<Arc<Ring>, Usage> {
    Ok(parse_ring(&arg.ring, limits)?)
}

fn point_names(points: impl IntoIterator<Item = usize>) -> Vec<String> {
    points.into_iter().map(|i| format!("P{}", i + 1)).collect()
}

fn spec_cmd(r: &Arc<Ring>) -> Out {
    let s = Spectrum::compute(r);
    let mut text = format!("Spec({r}): {} points\n", s.len());
    let mut points = Vec::new();
    for (i, p) in s.points().iter().enumerate() {
        let q = p.prime.quotient_ring();
        text += &format!(
            "  P{} = {}  residue field of size {}\n",
            i + 1,
            p.prime.render(),
            q.size()
        );
        points.push(json!({
            "index": i + 1,
            "prime": p.prime.render(),
            "size": p.prime.len(),
            "atom": r.render(p.atom),
        }));
    }
    Ok((json!({ "ring": r.to_string(), "size": r.size(), "points": points }), text, true))
}

fn components_cmd(r: &Arc<Ring>) -> Out {
    let s = Spectrum::compute(r);
    let comps = s.connected_components()?;
    let mut text = format!("{r}: {} connected components\n", comps.len());
    let mut out = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let pts = point_names(c.component.iter().copied());
        let primes: Vec<String> = c.component.iter().map(|&j| s.points()[j].prime.render()).collect();
        text += &format!(
            "  C{}: V{} = {{{}}}  atom {}\n",
            i + 1,
            c.ideal.render(),
            primes.join(", "),
            r.render(c.atom)
        );
        out.push(json!({
            "index": i + 1,
            "maxRegularIdeal": c.ideal.render(),
            "points": pts,
            "primes": primes,
            "atom": r.render(c.atom),
        }));
    }
    Ok((json!({ "ring": r.to_string(), "components": out }), text, true))
}

fn boolean_cmd(r: &Arc<Ring>) -> Out {
    let b = BooleanRing::new(r);
    b.verify_laws()?;
    let iso = b.stone_iso()?;
    iso.verify()?;
    let atoms: Vec<String> = iso.atoms().iter().map(|&a| r.render(a)).collect();
    let mut text = format!(
        "B({r}): {} idempotents, {} atoms\n  atoms: {}\n  Stone map:\n",
        b.len(),
        atoms.len(),
        atoms.join(", ")
    );
    let mut pairs = Vec::new();
    for (e, set) in iso.pairs() {
        text += &format!("    {} -> {set}\n", r.render(e));
        pairs.push(json!({ "idempotent": r.render(e), "atoms": set }));
    }
    Ok((
        json!({ "ring": r.to_string(), "idempotents": b.len(), "atoms": atoms, "stone": pairs }),
        text,
        true,
    ))
}

fn classify_cmd(r: &Arc<Ring>, prime: &str, limits: &Limits) -> Out {
    let gens = parse_ring_elems(r, prime)?;
    let p = Ideal::generate(r, &gens, limits)?;
    p.require_prime()?;
    let c = classify_prime(r, &p)?;
    let text = format!("{} in {r}: {}\n", p.render(), c.render());
    let json = match &c {
        Classification::Tame(w) => json!({
            "ring": r.to_string(),
            "prime": p.render(),
            "classification": "tame",
            "index": w.index + 1,
            "factorPrime": w.factor_prime.render(),
        }),
        Classification::Wild => json!({
            "ring": r.to_string(),
            "prime": p.render(),
            "classification": "wild",
        }),
    };
    Ok((json, text, true))
}

/// `"{1, 3}"` or `"1,3"`, 1-based.
fn parse_subset(text: &str, n: usize) -> Result<Subset, Usage> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut a = Subset::EMPTY;
    for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let k: usize = part
            .parse()
            .map_err(|_| Usage(format!("`{part}` is not a factor index")))?;
        if k == 0 || k > n {
            return Err(Usage(format!("factor index {k} is outside 1..={n}")));
        }
        a.insert(k - 1);
    }
    Ok(a)
}

fn call_arg<'a>(spec: &'a str, name: &str) -> Option<&'a str> {
    spec.trim()
        .strip_prefix(name)?
        .trim()
        .strip_prefix('(')?
        .strip_suffix(')')
}

fn localize_cmd(r: &Arc<Ring>, spec: &str, limits: &Limits) -> Out {
    let mut extra = Json::Null;
    let mut extra_text = String::new();
    let t = if let Some(gens) = call_arg(spec, "complement") {
        let gens = parse_ring_elems(r, gens)?;
        let p = Ideal::generate(r, &gens, limits)?;
        MultiplicativeSet::complement_of_prime(&p)?
    } else if let Some(set) = call_arg(spec, "filter") {
        let n = r
            .factors()
            .ok_or_else(|| Usage(format!("filter(..) needs a product ring, got {r}")))?
            .len();
        let filter = Filter::principal(n, parse_subset(set, n)?)?;
        if LocalFactors::new(r).is_ok() {
            let fq = filter_quotient_iso(r, &filter)?;
            let s = fq.summary();
            extra_text = format!(
                "  R/I_F -> T^-1 R: I_F has {} elements, quotient {} elements, bijective {}\n",
                s.kernel_size, s.quotient_size, s.bijective
            );
            extra = serde_json::to_value(s).expect("json");
        }
        MultiplicativeSet::t_filter(r, &filter)?
    } else {
        let gens = parse_ring_elems(r, spec)?;
        MultiplicativeSet::generated_by(r, &gens)?
    };
    t.verify()?;
    let loc = localize(&t);
    loc.verify()?;
    let text = format!(
        "T^-1 R for R = {r}: T has {} elements\n  localization has {} elements\n  kernel of R -> T^-1 R: {}\n{extra_text}",
        t.len(),
        loc.ring().size(),
        loc.kernel().render(),
    );
    Ok((
        json!({
            "ring": r.to_string(),
            "multiplicativeSetSize": t.len(),
            "localizationSize": loc.ring().size(),
            "kernel": loc.kernel().render(),
            "filterQuotient": extra,
        }),
        text,
        true,
    ))
}

fn ultra_cmd(r: &Arc<Ring>, base: Option<&str>, limits: &Limits) -> Out {
    let factors = r
        .factors()
        .ok_or_else(|| Usage(format!("{r} is not a direct product")))?
        .to_vec();
    let (base, defaulted) = match base {
        None => (BasePrimeChoice::first(r)?, true),
        Some(text) => {
            let parts: Vec<&str> = text.split(';').collect();
            if parts.len() != factors.len() {
                return Err(Usage(format!(
                    "{} base primes given for {} factors",
                    parts.len(),
                    factors.len()
                )));
            }
            let primes = parts
                .iter()
                .zip(&factors)
                .map(|(part, f)| {
                    let gens = parse_ring_elems(f, part)?;
                    Ok(Ideal::generate(f, &gens, limits)?)
                })
                .collect::<Result<Vec<_>, Usage>>()?;
            (BasePrimeChoice::new(r, primes)?, false)
        }
    };
    let n = factors.len();
    let set_ring = SetRing::new(n)?;
    let mut text = format!(
        "{r}: base primes {}{}\n",
        base.render(),
        if defaulted { " (default: first prime of each factor in spectrum order)" } else { "" }
    );
    let mut stars = Vec::new();
    for k in 0..n {
        let m = set_ring.prime(k)?;
        let star = m_star(r, &m, &base)?;
        let c = classify_prime(r, &star)?;
        text += &format!("  M_{} -> M* = {}  {}\n", k + 1, star.render(), c.render());
        stars.push(json!({ "index": k + 1, "mStar": star.render(), "classification": c.render() }));
    }
    let report = embedding_checks(r, &base, None)?;
    let ok = report.passed();
    text += &format!(
        "  injective {}, all prime {}, continuity {} ({} elements), principal to tame {}, left inverse {}\n  non-principal ultrafilters: {}\n",
        report.injective,
        report.all_prime,
        report.continuity_holds,
        report.continuity_checked,
        report.principal_to_tame,
        report.left_inverse,
        report.wild_direction
    );
    Ok((
        json!({
            "ring": r.to_string(),
            "basePrimes": base.render(),
            "defaulted": defaulted,
            "stars": stars,
            "checks": report,
        }),
        text,
        ok,
    ))
}

fn dim_cmd(r: &Arc<Ring>) -> Out {
    let s = Spectrum::compute(r);
    let dim = s.krull_dim();
    let nil = nilradical(r);
    let jac = jacobson_radical(r);
    let props = r.properties();
    let reduced_regular = nil.quotient_ring().is_von_neumann_regular();
    let text = format!(
        "{r}: Krull dimension {dim}, {} primes\n  nilradical {}\n  Jacobson radical {}\n  R/N(R) von Neumann regular: {reduced_regular}\n  local {}, field {}, domain {}, von Neumann regular {}, nontrivial idempotents {}\n",
        s.len(),
        nil.render(),
        jac.render(),
        props.is_local,
        props.is_field,
        props.is_domain,
        props.is_von_neumann_regular,
        props.has_nontrivial_idempotents
    );
    Ok((
        json!({
            "ring": r.to_string(),
            "krullDim": dim,
            "primes": s.len(),
            "nilradical": nil.render(),
            "jacobson": jac.render(),
            "reducedIsVonNeumannRegular": reduced_regular,
            "properties": props,
        }),
        text,
        true,
    ))
}

fn verify_cmd(id: &str, config: &Config, instance: Option<&str>) -> Out {
    if id == "all" {
        if instance.is_some() {
            return Err(Usage("--instance needs a single property id".into()));
        }
        let suite = harness::run_all(config);
        let text: String = suite.reports.iter().map(|r| r.render()).collect::<String>()
            + &format!("suite: {}  ({} ms)\n", suite.status, suite.wall_time_ms);
        let ok = suite.status != Status::Fail;
        return Ok((serde_json::to_value(&suite).expect("json"), text, ok));
    }
    let p = harness::property(id).ok_or_else(|| {
        let ids: Vec<&str> = harness::PROPERTIES.iter().map(|p| p.id).collect();
        Usage(format!("unknown property `{id}`; known: all, {}", ids.join(", ")))
    })?;
    let report = match instance {
        Some(text) => harness::replay(p, config, &p.kind.parse(text)?),
        None => harness::run_property(p, config),
    };
    let ok = report.status != Status::Fail;
    Ok((serde_json::to_value(&report).expect("json"), report.render(), ok))
}
