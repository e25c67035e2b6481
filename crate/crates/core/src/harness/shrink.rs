use super::{Ctx, Instance, Property, Verdict};
use crate::dsl::{HomExpr, RingExpr};

/// Candidate evaluations allowed per counterexample.
const BUDGET: usize = 200;

/// Greedily replaces the instance by the first smaller candidate that still
/// fails, until none does. Returns the final instance, its failure detail
/// and the number of accepted steps.
pub(super) fn minimize(
    p: &Property,
    ctx: &Ctx,
    mut inst: Instance,
    mut detail: String,
) -> (Instance, String, usize) {
    let mut steps = 0;
    let mut spent = 0;
    'outer: while spent < BUDGET {
        for cand in candidates(&inst) {
            spent += 1;
            if let Verdict::Fail(d) = p.check(&cand, ctx) {
                inst = cand;
                detail = d;
                steps += 1;
                continue 'outer;
            }
            if spent >= BUDGET {
                break 'outer;
            }
        }
        break;
    }
    (inst, detail, steps)
}

fn candidates(inst: &Instance) -> Vec<Instance> {
    match inst {
        Instance::Ring(e) => ring_candidates(e).into_iter().map(Instance::Ring).collect(),
        Instance::Hom(h) => hom_candidates(h).into_iter().map(Instance::Hom).collect(),
    }
}

fn without<T: Clone>(items: &[T], i: usize) -> Vec<T> {
    let mut v = items.to_vec();
    v.remove(i);
    v
}

fn replaced<T: Clone>(items: &[T], i: usize, x: T) -> Vec<T> {
    let mut v = items.to_vec();
    v[i] = x;
    v
}

pub(super) fn ring_candidates(e: &RingExpr) -> Vec<RingExpr> {
    let mut out = Vec::new();
    match e {
        RingExpr::ZMod(n) => {
            out.extend((2..*n).filter(|d| n % d == 0).map(RingExpr::ZMod));
        }
        RingExpr::Fixture(_) => {}
        RingExpr::Prod(items) => {
            for i in 0..items.len() {
                let rest = without(items, i);
                out.push(if rest.len() == 1 {
                    rest[0].clone()
                } else {
                    RingExpr::Prod(rest)
                });
            }
            for (i, item) in items.iter().enumerate() {
                for c in ring_candidates(item) {
                    out.push(RingExpr::Prod(replaced(items, i, c)));
                }
            }
        }
        RingExpr::Quot(base, gens) => {
            out.push((**base).clone());
            if gens.len() > 1 {
                for i in 0..gens.len() {
                    out.push(RingExpr::Quot(base.clone(), without(gens, i)));
                }
            }
            for c in ring_candidates(base) {
                out.push(RingExpr::Quot(Box::new(c), gens.clone()));
            }
        }
    }
    out
}

fn hom_candidates(h: &HomExpr) -> Vec<HomExpr> {
    let mut out = Vec::new();
    match h {
        HomExpr::Id(e) => out.extend(ring_candidates(e).into_iter().map(HomExpr::Id)),
        HomExpr::Frob(e) => out.extend(ring_candidates(e).into_iter().map(HomExpr::Frob)),
        HomExpr::Quo(e) => out.extend(ring_candidates(e).into_iter().map(HomExpr::Quo)),
        HomExpr::Canon(a, b) => {
            out.extend(ring_candidates(a).into_iter().map(|c| HomExpr::Canon(c, b.clone())));
            out.extend(ring_candidates(b).into_iter().map(|c| HomExpr::Canon(a.clone(), c)));
        }
        HomExpr::Graph(inner) => {
            out.push((**inner).clone());
            out.extend(hom_candidates(inner).into_iter().map(|c| HomExpr::Graph(Box::new(c))));
        }
        HomExpr::Prod(hs) => {
            if hs.len() > 1 {
                for i in 0..hs.len() {
                    out.push(HomExpr::Prod(without(hs, i)));
                }
            }
            for (i, x) in hs.iter().enumerate() {
                for c in hom_candidates(x) {
                    out.push(HomExpr::Prod(replaced(hs, i, c)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::harness::{Config, InstanceKind};
    use crate::error::Error;

    #[test]
    fn candidates_are_smaller() {
        let e = parse("Z/12 x Z/9 x F4").unwrap();
        let cands = ring_candidates(&e);
        assert!(cands.contains(&parse("Z/9 x F4").unwrap()));
        assert!(cands.contains(&parse("Z/6 x Z/9 x F4").unwrap()));
        assert!(cands.iter().all(|c| c.weight() <= e.weight() || c.to_string().len() < e.to_string().len()));
    }

    /// A deliberately false property: "no factor is Z/n with 3 | n".
    fn no_three(inst: &Instance, _: &Ctx) -> Result<Verdict, Error> {
        let Instance::Ring(e) = inst else { unreachable!() };
        let bad = match e {
            RingExpr::Prod(items) => items.iter().any(|x| matches!(x, RingExpr::ZMod(n) if n % 3 == 0)),
            RingExpr::ZMod(n) => n % 3 == 0,
            _ => false,
        };
        Ok(if bad { Verdict::Fail(format!("{e} has a factor divisible by 3")) } else { Verdict::Pass })
    }

    #[test]
    fn shrinks_to_a_minimal_failure_that_replays() {
        let p = Property {
            id: "no-three",
            summary: "",
            kind: InstanceKind::Ring,
            default_trials: 1,
            default_max_size: 64,
            vacuous: false,
            notes: |_| vec![],
            generate: |_, _, _| unreachable!(),
            check: no_three,
        };
        let ctx = Ctx {
            max_size: 64,
            max_cover: 4,
            limits: Config::default().limits,
        };
        let start = Instance::Ring(parse("Z/4 x Z/18 x Z/5").unwrap());
        let (inst, _, steps) = minimize(&p, &ctx, start, String::new());
        assert_eq!(inst, Instance::Ring(RingExpr::ZMod(3)));
        assert!(steps > 0);
        assert!(matches!(p.check(&inst, &ctx), Verdict::Fail(_)));
    }
}
