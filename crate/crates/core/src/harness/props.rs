use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use super::gen;
use super::{Ctx, Instance, InstanceKind, Property, Verdict};
use crate::boolean::{BooleanRing, Subset};
use crate::dsl::{parse, parse_hom, DslError, HomExpr, RingExpr};
use crate::error::{Error, Result};
use crate::ideal::{
    all_ideals, has_ideal_avoidance, jacobson_radical, nilradical, qb_criterion, Ideal,
};
use crate::localization::{filter_quotient_iso, lying_over_minimal, support};
use crate::product::{
    classify_prime, component_purity, direct_sum_ideal, factors, induced_hom_classification,
    max_regular_bijection, project_ideal, residue_and_local_iso, tame_prime, unit_idempotent,
    v_one_minus_ek_is_component, wild_points, Classification,
};
use crate::ring::{Elem, Fixture, Ring};
use crate::spectrum::{regular_ideals, spec, PointSet, Spectrum};
use crate::ultrafilter::{embedding_checks, BasePrimeChoice, Filter};

pub static PROPERTIES: [Property; 12] = [
    Property {
        id: "spec-oracle",
        summary: "spectrum equals the primes among all ideals",
        kind: InstanceKind::Ring,
        default_trials: 400,
        default_max_size: 32,
        vacuous: false,
        notes: |ctx| {
            vec![format!(
                "trials start with every Z/n and every product of Z/n's of size <= {}, then random rings",
                ctx.max_size
            )]
        },
        generate: gen_spec_oracle,
        check: check_spec_oracle,
    },
    Property {
        id: "tame-structure",
        summary: "Spec of a product is the disjoint union of the D(e_k), all primes tame",
        kind: InstanceKind::Ring,
        default_trials: 200,
        default_max_size: 256,
        vacuous: false,
        notes: |_| vec![],
        generate: gen_product,
        check: check_tame_structure,
    },
    Property {
        id: "wild-emptiness",
        summary: "the direct sum ideal is the whole ring, so no prime is wild",
        kind: InstanceKind::Ring,
        default_trials: 200,
        default_max_size: 1024,
        vacuous: true,
        notes: |_| {
            vec!["wild primes need an infinite index set; the finite check only confirms there are none".into()]
        },
        generate: gen_product,
        check: check_wild_emptiness,
    },
    Property {
        id: "ultrafilter-embedding",
        summary: "M -> M* is an injective, continuous section of Spec -> Spec P(S)",
        kind: InstanceKind::Ring,
        default_trials: 60,
        default_max_size: 512,
        vacuous: false,
        notes: |_| {
            vec![
                "up to 6 base prime choices per product, evenly spaced in enumeration order".into(),
                "every ultrafilter on a finite set is principal; the non-principal direction is vacuous".into(),
            ]
        },
        generate: gen_ultrafilter,
        check: check_ultrafilter,
    },
    Property {
        id: "filter-quotient-iso",
        summary: "R/I_F is isomorphic to the localization at T_F for every proper principal filter",
        kind: InstanceKind::Ring,
        default_trials: 100,
        default_max_size: 256,
        vacuous: false,
        notes: |_| vec![],
        generate: gen_local_product,
        check: check_filter_quotient,
    },
    Property {
        id: "zero-dim",
        summary: "radicals of products are products of radicals, Krull dimension 0, nilpotency growth",
        kind: InstanceKind::Ring,
        default_trials: 200,
        default_max_size: 512,
        vacuous: false,
        notes: |_| vec!["trials 0..7 are the products Z/2 x Z/4 x .. x Z/2^N for N = 2..8".into()],
        generate: gen_zero_dim,
        check: check_zero_dim,
    },
    Property {
        id: "components",
        summary: "connected components and max-regular ideals of products",
        kind: InstanceKind::Ring,
        default_trials: 200,
        default_max_size: 512,
        vacuous: false,
        notes: |_| vec![],
        generate: gen_product,
        check: check_components,
    },
    Property {
        id: "avoidance-qb",
        summary: "brute-force ideal avoidance agrees with the local principal-ideal criterion",
        kind: InstanceKind::Ring,
        default_trials: 150,
        default_max_size: 16,
        vacuous: false,
        notes: |ctx| {
            vec![
                format!("covers of at most {} ideals searched", ctx.max_cover),
                format!(
                    "trials start with every Z/n, product of Z/n's and fixture of size <= {}",
                    ctx.max_size
                ),
            ]
        },
        generate: gen_avoidance,
        check: check_avoidance,
    },
    Property {
        id: "induced-hom",
        summary: "componentwise homs commute with the tame classification",
        kind: InstanceKind::Hom,
        default_trials: 120,
        default_max_size: 512,
        vacuous: false,
        notes: |_| vec![],
        generate: |rng, _, ctx| Instance::Hom(gen::hom_family(rng, ctx.max_size)),
        check: check_induced_hom,
    },
    Property {
        id: "lying-over",
        summary: "every prime of the source of an injective hom has a prime lying over it",
        kind: InstanceKind::Hom,
        default_trials: 120,
        default_max_size: 256,
        vacuous: false,
        notes: |_| vec![],
        generate: |rng, _, ctx| Instance::Hom(gen::injective_hom(rng, ctx.max_size)),
        check: check_lying_over,
    },
    Property {
        id: "boolean-stone",
        summary: "B(R) is a Boolean ring isomorphic to the power set of its atoms",
        kind: InstanceKind::Ring,
        default_trials: 150,
        default_max_size: 1024,
        vacuous: false,
        notes: |_| vec![],
        generate: |rng, _, ctx| Instance::Ring(gen::ring(rng, ctx.max_size)),
        check: check_boolean,
    },
    Property {
        id: "parser-roundtrip",
        summary: "printing then parsing an expression gives it back",
        kind: InstanceKind::Any,
        default_trials: 300,
        default_max_size: 0,
        vacuous: false,
        notes: |_| vec!["odd trials use homomorphism expressions".into()],
        generate: |rng, trial, _| {
            if trial % 2 == 0 {
                Instance::Ring(gen::syntax(rng, 3))
            } else {
                Instance::Hom(gen::hom_syntax(rng, 2))
            }
        },
        check: check_roundtrip,
    },
];

fn dsl(e: DslError) -> Error {
    match e {
        DslError::Semantic { error, .. } => error,
        e @ DslError::Syntax { .. } => Error::Inconsistency(e.to_string()),
    }
}

fn fail(msg: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict::Fail(msg.into()))
}

fn ring_of(inst: &Instance, ctx: &Ctx) -> Result<Option<Arc<Ring>>> {
    match inst {
        Instance::Ring(e) => Ok(Some(e.elaborate(&ctx.limits).map_err(dsl)?)),
        Instance::Hom(_) => Ok(None),
    }
}

/// The instance's ring and its factors, or an abort verdict when it is not
/// a product.
fn product_of(inst: &Instance, ctx: &Ctx) -> Result<std::result::Result<Arc<Ring>, Verdict>> {
    match ring_of(inst, ctx)? {
        Some(r) if r.is_product() => Ok(Ok(r)),
        _ => Ok(Err(Verdict::Abort("not a direct product".into()))),
    }
}

macro_rules! product_or_abort {
    ($inst:expr, $ctx:expr) => {
        match product_of($inst, $ctx)? {
            Ok(r) => r,
            Err(v) => return Ok(v),
        }
    };
}

/// Every `Z/n` with `2 <= n <= max`, every product of two to four `Z/n`'s of
/// size at most `max`, and every fixture that fits.
pub(crate) fn catalogue(max: u64) -> Vec<RingExpr> {
    fn tuples(prefix: &mut Vec<u64>, room: u64, depth: usize, out: &mut Vec<RingExpr>) {
        if prefix.len() >= 2 {
            out.push(RingExpr::Prod(prefix.iter().map(|&n| RingExpr::ZMod(n)).collect()));
        }
        if prefix.len() == depth {
            return;
        }
        for n in 2..=room {
            prefix.push(n);
            tuples(prefix, room / n, depth, out);
            prefix.pop();
        }
    }
    let mut out: Vec<RingExpr> = (2..=max).map(RingExpr::ZMod).collect();
    let mut products = Vec::new();
    tuples(&mut Vec::new(), max, 4, &mut products);
    products.sort_by_key(|e| match e {
        RingExpr::Prod(items) => items.len(),
        _ => 0,
    });
    out.extend(products);
    out.extend(
        Fixture::ALL
            .into_iter()
            .filter(|&f| gen::fixture_size(f) <= max)
            .map(RingExpr::Fixture),
    );
    out
}

fn gen_spec_oracle(rng: &mut ChaCha8Rng, trial: u64, ctx: &Ctx) -> Instance {
    let cat = catalogue(ctx.max_size);
    if let Some(e) = cat.get(trial as usize) {
        return Instance::Ring(e.clone());
    }
    let cap = ctx.max_size.max(4);
    Instance::Ring(match rng.gen_range(0..10) {
        0..=4 => gen::quotient(rng, cap),
        5..=7 => gen::product(rng, 2, 3, cap),
        _ => gen::ring(rng, cap),
    })
}

fn check_spec_oracle(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let Some(ring) = ring_of(inst, ctx)? else {
        return Ok(Verdict::Abort("not a ring".into()));
    };
    ctx.limits.check_oracle(ring.size())?;
    let s = spec(&ring, &ctx.limits)?;
    let mut oracle: Vec<Ideal> = all_ideals(&ring, &ctx.limits)?
        .into_iter()
        .filter(Ideal::is_prime)
        .collect();
    oracle.sort_by(|a, b| a.member_order(b));
    let got: Vec<&Ideal> = s.primes().collect();
    for q in &oracle {
        if !got.contains(&q) {
            return fail(format!("prime {} missing from the spectrum", q.render()));
        }
    }
    for p in &got {
        if !oracle.contains(p) {
            return fail(format!("{} is in the spectrum but is not a prime ideal", p.render()));
        }
    }
    if got.len() != oracle.len() {
        return fail(format!("spectrum has {} points, oracle {}", got.len(), oracle.len()));
    }
    Ok(Verdict::Pass)
}

fn gen_product(rng: &mut ChaCha8Rng, _: u64, ctx: &Ctx) -> Instance {
    Instance::Ring(gen::product(rng, 2, 4, ctx.max_size.max(4)))
}

fn check_tame_structure(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let ring = product_or_abort!(inst, ctx);
    let fs = factors(&ring)?.to_vec();
    let s = Spectrum::compute(&ring);

    let mut covered = PointSet::new();
    for k in 0..fs.len() {
        let d = s.d(unit_idempotent(&ring, k)?);
        if !covered.is_disjoint(&d) {
            return fail(format!("D(e_{}) meets an earlier D(e_j)", k + 1));
        }
        covered.extend(d);
    }
    if covered != s.all() {
        return fail("the sets D(e_k) do not cover the spectrum");
    }

    for (i, point) in s.points().iter().enumerate() {
        let p = &point.prime;
        let w = match classify_prime(&ring, p)? {
            Classification::Tame(w) => w,
            Classification::Wild => return fail(format!("{} classified wild", p.render())),
        };
        let k = w.index;
        if !s.d(unit_idempotent(&ring, k)?).contains(&i) {
            return fail(format!("{} is tame at {} but lies outside D(e_k)", p.render(), k + 1));
        }
        if project_ideal(&ring, k, p)? != w.factor_prime {
            return fail(format!("{}: classifier prime is not the projection", p.render()));
        }
        if &tame_prime(&ring, k, &w.factor_prime)? != p {
            return fail(format!("{} differs from the preimage of its projection", p.render()));
        }
        residue_and_local_iso(&ring, p)?;
    }

    let mut total = 0;
    for (k, f) in fs.iter().enumerate() {
        let fs_spec = Spectrum::compute(f);
        total += fs_spec.len();
        for q in fs_spec.primes() {
            let p = tame_prime(&ring, k, q)?;
            match classify_prime(&ring, &p)? {
                Classification::Tame(w) if w.index == k && &w.factor_prime == q => {}
                c => {
                    return fail(format!(
                        "preimage of {} from factor {} classifies as {}",
                        q.render(),
                        k + 1,
                        c.render()
                    ))
                }
            }
        }
    }
    if total != s.len() {
        return fail(format!("{} points, factor spectra give {total}", s.len()));
    }
    Ok(Verdict::Pass)
}

fn check_wild_emptiness(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let ring = product_or_abort!(inst, ctx);
    let sum = direct_sum_ideal(&ring)?;
    if !sum.is_whole() {
        return fail(format!("direct sum ideal {} is proper", sum.render()));
    }
    let s = Spectrum::compute(&ring);
    let wild = wild_points(&ring, &s)?;
    if !wild.is_empty() {
        return fail(format!("V(direct sum) has {} points", wild.len()));
    }
    for p in s.primes() {
        if classify_prime(&ring, p)? == Classification::Wild {
            return fail(format!("{} classified wild", p.render()));
        }
    }
    Ok(Verdict::Pass)
}

fn gen_ultrafilter(rng: &mut ChaCha8Rng, _: u64, ctx: &Ctx) -> Instance {
    // The first two factors have two or more primes each, so a product has
    // at least four base prime choices.
    const SPLIT: [u64; 8] = [6, 10, 12, 14, 15, 18, 20, 30];
    let n = rng.gen_range(2..=4usize);
    let cap = ctx.max_size.max(36);
    let e = gen::product_with(rng, n, cap, |rng, room| {
        let fits: Vec<u64> = SPLIT.iter().copied().filter(|&m| m <= room).collect();
        if !fits.is_empty() && rng.gen_bool(0.7) {
            RingExpr::ZMod(fits[rng.gen_range(0..fits.len())])
        } else {
            gen::factor(rng, room.min(12))
        }
    });
    let RingExpr::Prod(mut items) = e else {
        unreachable!("product_with returns a product")
    };
    for (i, m) in [6u64, 10].into_iter().enumerate() {
        if !matches!(items[i], RingExpr::ZMod(x) if SPLIT.contains(&x)) {
            items[i] = RingExpr::ZMod(m);
        }
    }
    while gen::size(&RingExpr::Prod(items.clone())) > cap && items.len() > 2 {
        items.pop();
    }
    Instance::Ring(RingExpr::Prod(items))
}

fn check_ultrafilter(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let ring = product_or_abort!(inst, ctx);
    let choices = BasePrimeChoice::all(&ring)?;
    if choices.len() < 3 {
        return Ok(Verdict::Abort(format!(
            "only {} base prime choices",
            choices.len()
        )));
    }
    let picked: Vec<&BasePrimeChoice> = if choices.len() <= 6 {
        choices.iter().collect()
    } else {
        (0..6).map(|i| &choices[i * choices.len() / 6]).collect()
    };
    for base in picked {
        let r = embedding_checks(&ring, base, None)?;
        if !r.passed() {
            return fail(format!("base primes {}: {:?}", base.render(), r));
        }
        if r.continuity_checked != ring.size() {
            return fail(format!(
                "continuity checked on {} of {} elements",
                r.continuity_checked,
                ring.size()
            ));
        }
    }
    Ok(Verdict::Pass)
}

fn gen_local_product(rng: &mut ChaCha8Rng, _: u64, ctx: &Ctx) -> Instance {
    Instance::Ring(gen::local_product(rng, 2, 4, ctx.max_size.max(4)))
}

fn check_filter_quotient(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let ring = product_or_abort!(inst, ctx);
    let n = factors(&ring)?.len();
    let zero = Elem::ZERO;
    for a in Subset::all(n).filter(|a| !a.is_empty()) {
        let filter = Filter::principal(n, a)?;
        let fq = filter_quotient_iso(&ring, &filter)?;
        if !fq.hom.is_bijective() {
            return fail(format!("{filter}: R/I_F -> T^-1 R is not bijective"));
        }
        let t: Vec<Elem> = fq.t.elements().collect();
        let canonical = fq.localized.canonical();
        for x in ring.elements() {
            let killed = t.iter().any(|&s| ring.mul(x, s) == zero);
            if killed != fq.ideal.contains(x) {
                return fail(format!(
                    "{filter}: {} is {} by T but {} I_F",
                    ring.render(x),
                    if killed { "killed" } else { "not killed" },
                    if killed { "outside" } else { "inside" }
                ));
            }
            if killed != support(&ring, x).intersection(a).is_empty() {
                return fail(format!(
                    "{filter}: kernel membership of {} disagrees with its support",
                    ring.render(x)
                ));
            }
            if killed != (canonical.apply(x) == zero) {
                return fail(format!("{filter}: kernel of R -> T^-1 R disagrees at {}", ring.render(x)));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `N` when the expression is `Z/2 x Z/4 x .. x Z/2^N`.
fn tower_len(e: &RingExpr) -> Option<u32> {
    match e {
        RingExpr::Prod(items)
            if items
                .iter()
                .enumerate()
                .all(|(i, x)| *x == RingExpr::ZMod(1 << (i + 1))) =>
        {
            Some(items.len() as u32)
        }
        _ => None,
    }
}

pub(crate) fn tower(n: u32) -> RingExpr {
    RingExpr::Prod((1..=n).map(|k| RingExpr::ZMod(1 << k)).collect())
}

fn gen_zero_dim(rng: &mut ChaCha8Rng, trial: u64, ctx: &Ctx) -> Instance {
    if trial < 7 {
        return Instance::Ring(tower(trial as u32 + 2));
    }
    gen_product(rng, trial, ctx)
}

fn check_tower(n: u32) -> Result<Verdict> {
    let ring = Ring::product((1..=n).map(|k| Ring::modular(1 << k)).collect::<Result<Vec<_>>>()?)?;
    let two: Vec<Elem> = (1..=n).map(|k| Elem(2 % (1u64 << k))).collect();
    let x = ring.from_components(&two);
    if ring.nilpotency_index(x) != Some(n as u64) {
        return fail(format!(
            "(2, 2, ..) has nilpotency index {:?}, expected {n}",
            ring.nilpotency_index(x)
        ));
    }
    let b_parts: Vec<Elem> = (1..=n).map(|k| Elem(if k == 1 { 0 } else { 1 << (k - 1) })).collect();
    let b = ring.from_components(&b_parts);
    if b == Elem::ZERO || ring.mul(b, b) != Elem::ZERO {
        return fail(format!("b = {} does not square to zero", ring.render(b)));
    }
    Ok(Verdict::Pass)
}

fn check_zero_dim(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    if let Instance::Ring(e) = inst {
        if let Some(n) = tower_len(e) {
            if let v @ Verdict::Fail(_) = check_tower(n)? {
                return Ok(v);
            }
            if gen::size(e) > ctx.max_size {
                return Ok(Verdict::Pass);
            }
        }
    }
    let ring = product_or_abort!(inst, ctx);
    let fs = factors(&ring)?.to_vec();
    let n = fs.len();

    let nil = nilradical(&ring);
    let expected = Ideal::from_predicate(&ring, |a| {
        (0..n).all(|k| fs[k].is_nilpotent(ring.component(a, k)))
    })?;
    if nil != expected {
        return fail(format!(
            "N(R) = {} but the product of the factor nilradicals is {}",
            nil.render(),
            expected.render()
        ));
    }
    let factor_j: Vec<Ideal> = fs.iter().map(jacobson_radical).collect();
    let jac = jacobson_radical(&ring);
    let expected = Ideal::from_predicate(&ring, |a| (0..n).all(|k| factor_j[k].contains(ring.component(a, k))))?;
    if jac != expected {
        return fail(format!(
            "J(R) = {} but the product of the factor radicals is {}",
            jac.render(),
            expected.render()
        ));
    }
    let dim = Spectrum::compute(&ring).krull_dim();
    if dim != 0 {
        return fail(format!("Krull dimension {dim}"));
    }
    if !nil.quotient_ring().is_von_neumann_regular() {
        return fail("R/N(R) is not von Neumann regular");
    }
    Ok(Verdict::Pass)
}

fn check_components(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let ring = product_or_abort!(inst, ctx);
    let fs = factors(&ring)?.to_vec();
    let s = Spectrum::compute(&ring);
    let comps = s.connected_components()?;
    let mut expected = 0;
    for f in &fs {
        expected += Spectrum::compute(f).connected_components()?.len();
    }
    if comps.len() != expected {
        return fail(format!("{} components, factors give {expected}", comps.len()));
    }
    let bij = max_regular_bijection(&ring)?;
    if !bij.passed() {
        return fail(format!("max-regular map: {bij:?}"));
    }
    for (k, f) in fs.iter().enumerate() {
        let is_comp = v_one_minus_ek_is_component(&ring, k)?;
        if is_comp == f.has_nontrivial_idempotents() {
            return fail(format!(
                "V(1 - e_{}) component = {is_comp}, factor has nontrivial idempotents = {}",
                k + 1,
                f.has_nontrivial_idempotents()
            ));
        }
    }
    let mut by_v: HashMap<PointSet, Ideal> = HashMap::new();
    for r in regular_ideals(&ring) {
        let v = s.v(&r);
        if let Some(prev) = by_v.get(&v) {
            if prev != &r {
                return fail(format!(
                    "regular ideals {} and {} have the same V",
                    prev.render(),
                    r.render()
                ));
            }
        } else {
            by_v.insert(v, r);
        }
    }
    for c in component_purity(&ring)? {
        if !c.pure || !c.all_tame {
            return fail(format!("component {:?}: {:?}", c.points, c));
        }
    }
    Ok(Verdict::Pass)
}

fn gen_avoidance(rng: &mut ChaCha8Rng, trial: u64, ctx: &Ctx) -> Instance {
    let cat = catalogue(ctx.max_size);
    if let Some(e) = cat.get(trial as usize) {
        return Instance::Ring(e.clone());
    }
    let cap = ctx.max_size.max(4);
    Instance::Ring(if rng.gen_bool(0.5) {
        gen::quotient(rng, cap)
    } else {
        gen::ring(rng, cap)
    })
}

fn check_avoidance(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let Instance::Ring(e) = inst else {
        return Ok(Verdict::Abort("not a ring".into()));
    };
    let ring = e.elaborate(&ctx.limits).map_err(dsl)?;
    ctx.limits.check_oracle(ring.size())?;
    let av = has_ideal_avoidance(&ring, ctx.max_cover, &ctx.limits)?;
    let qb = qb_criterion(&ring, &ctx.limits)?;
    if av.holds != qb.holds {
        let witness = av
            .witness
            .map(|(i, cover)| {
                let cover: Vec<String> = cover.iter().map(Ideal::render).collect();
                format!("; {} lies in the union of {}", i.render(), cover.join(", "))
            })
            .unwrap_or_default();
        return fail(format!(
            "brute force says {}, criterion says {}{witness}",
            av.holds, qb.holds
        ));
    }
    if *e == RingExpr::Fixture(Fixture::F2xy) && av.holds {
        return fail("F2xy classified as an avoidance ring");
    }
    if let RingExpr::Prod(items) = e {
        let mut all = true;
        for item in items {
            let f = item.elaborate(&ctx.limits).map_err(dsl)?;
            all &= qb_criterion(&f, &ctx.limits)?.holds;
        }
        if all && !av.holds {
            return fail("product of avoidance rings fails avoidance");
        }
    }
    Ok(Verdict::Pass)
}

fn check_induced_hom(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let Instance::Hom(h @ HomExpr::Prod(_)) = inst else {
        return Ok(Verdict::Abort("not a componentwise family".into()));
    };
    let family = h.family(&ctx.limits).map_err(dsl)?;
    let source = Ring::product(family.iter().map(|f| f.source().clone()).collect())?;
    let target = Ring::product(family.iter().map(|f| f.target().clone()).collect())?;
    ctx.limits.check(source.size())?;
    ctx.limits.check(target.size())?;
    let r = induced_hom_classification(&source, &target, &family)?;
    if !r.passed() {
        return fail(format!("{r:?}"));
    }
    Ok(Verdict::Pass)
}

fn check_lying_over(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let Instance::Hom(h) = inst else {
        return Ok(Verdict::Abort("not a homomorphism".into()));
    };
    let phi = h.elaborate(&ctx.limits).map_err(dsl)?;
    if !phi.is_injective() {
        return Ok(Verdict::Abort("not injective".into()));
    }
    for p in Spectrum::compute(phi.source()).primes() {
        let q = lying_over_minimal(&phi, p)?;
        if !q.is_prime() || &phi.preimage(&q)? != p {
            return fail(format!("{} does not lie over {}", q.render(), p.render()));
        }
    }
    Ok(Verdict::Pass)
}

fn check_boolean(inst: &Instance, ctx: &Ctx) -> Result<Verdict> {
    let Some(ring) = ring_of(inst, ctx)? else {
        return Ok(Verdict::Abort("not a ring".into()));
    };
    let b = BooleanRing::new(&ring);
    b.verify_laws()?;
    let iso = b.stone_iso()?;
    iso.verify()?;
    let atoms = b.atoms().len();
    let points = Spectrum::compute(&ring).len();
    if atoms != points {
        return fail(format!("{atoms} atoms but {points} spectrum points"));
    }
    if b.len() != 1 << atoms {
        return fail(format!("{} idempotents for {atoms} atoms", b.len()));
    }
    if !iso.to_ring_hom()?.is_bijective() {
        return fail("Stone map is not bijective");
    }
    Ok(Verdict::Pass)
}

fn check_roundtrip(inst: &Instance, _: &Ctx) -> Result<Verdict> {
    let text = inst.to_string();
    let ok = match inst {
        Instance::Ring(e) => parse(&text).as_ref() == Ok(e),
        Instance::Hom(h) => parse_hom(&text).as_ref() == Ok(h),
    };
    if ok {
        Ok(Verdict::Pass)
    } else {
        fail(format!("`{text}` does not parse back to the same expression"))
    }
}
