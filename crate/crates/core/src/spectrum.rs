//! Prime spectra of finite rings.
//!
//! A finite ring is the product of the local rings `Ra` over the atoms `a`
//! of its Boolean ring, so its primes are exactly the sets
//! `{x : xa is a non-unit of Ra}`, one per atom. Every prime is maximal and
//! every connected component of the spectrum is a single point.

use std::collections::BTreeSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::boolean;
use crate::error::{Error, Limits, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, Ring};

/// Point indices into a [`Spectrum`].
pub type PointSet = BTreeSet<usize>;

#[derive(Debug, Clone)]
pub struct SpectrumPoint {
    pub prime: Ideal,
    /// The primitive idempotent whose local factor produced this prime.
    pub atom: Elem,
}

#[derive(Debug, Clone)]
pub struct Spectrum {
    ring: Arc<Ring>,
    points: Vec<SpectrumPoint>,
}

/// A maximal proper regular ideal and the component `V(ideal)`.
#[derive(Debug, Clone)]
pub struct MaxRegularIdeal {
    pub ideal: Ideal,
    pub component: PointSet,
    pub atom: Elem,
}

/// `Spec(R)`, refusing rings above the size guard.
pub fn spec(ring: &Arc<Ring>, limits: &Limits) -> Result<Spectrum> {
    limits.check(ring.size())?;
    Ok(Spectrum::compute(ring))
}

impl Spectrum {
    /// Points are listed in member order of their primes.
    pub fn compute(ring: &Arc<Ring>) -> Spectrum {
        let mut points: Vec<SpectrumPoint> = boolean::atoms(ring)
            .into_iter()
            .map(|a| SpectrumPoint {
                prime: local_maximal_pullback(ring, a),
                atom: a,
            })
            .collect();
        points.sort_by(|p, q| p.prime.member_order(&q.prime));
        Spectrum {
            ring: ring.clone(),
            points,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn points(&self) -> &[SpectrumPoint] {
        &self.points
    }

    pub fn primes(&self) -> impl Iterator<Item = &Ideal> {
        self.points.iter().map(|p| &p.prime)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all(&self) -> PointSet {
        (0..self.points.len()).collect()
    }

    pub fn position(&self, prime: &Ideal) -> Option<usize> {
        self.points.iter().position(|p| &p.prime == prime)
    }

    /// `D(x)`: points not containing `x`.
    pub fn d(&self, x: Elem) -> PointSet {
        self.select(|p| !p.contains(x))
    }

    /// `V(x)`: points containing `x`.
    pub fn v_elem(&self, x: Elem) -> PointSet {
        self.select(|p| p.contains(x))
    }

    /// `V(I)`: points containing `I`.
    pub fn v(&self, ideal: &Ideal) -> PointSet {
        self.select(|p| ideal.is_subset(p))
    }

    fn select(&self, pred: impl Fn(&Ideal) -> bool) -> PointSet {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| pred(&p.prime))
            .map(|(i, _)| i)
            .collect()
    }

    /// One component per atom `a`, cut out by the ideal generated by the
    /// idempotents killing `a`, which is `R(1 - a)`.
    pub fn connected_components(&self) -> Result<Vec<MaxRegularIdeal>> {
        let ring = &self.ring;
        let idempotents = ring.idempotents();
        let mut out = Vec::with_capacity(self.points.len());
        for point in &self.points {
            let a = point.atom;
            let killers: Vec<Elem> = idempotents
                .iter()
                .copied()
                .filter(|&e| e != Elem::ZERO && ring.mul(e, a) == Elem::ZERO)
                .collect();
            let generated = Ideal::closure(ring, &killers);
            let ideal = Ideal::principal(ring, ring.sub(ring.one(), a));
            if generated != ideal {
                return Err(Error::Inconsistency(format!(
                    "idempotents killing {} generate {}, not {}",
                    ring.render(a),
                    generated.render(),
                    ideal.render()
                )));
            }
            let component = self.v(&ideal);
            out.push(MaxRegularIdeal {
                ideal,
                component,
                atom: a,
            });
        }
        let mut covered = PointSet::new();
        for c in &out {
            if c.component.is_empty() || c.component.iter().any(|&i| !covered.insert(i)) {
                return Err(Error::Inconsistency(
                    "components do not partition the spectrum".into(),
                ));
            }
        }
        if covered.len() != self.points.len() {
            return Err(Error::Inconsistency(
                "components do not cover the spectrum".into(),
            ));
        }
        Ok(out)
    }

    /// Length of the longest strict chain of primes.
    pub fn krull_dim(&self) -> usize {
        let mut order: Vec<usize> = (0..self.points.len()).collect();
        order.sort_by_key(|&i| self.points[i].prime.len());
        let mut chain = vec![0usize; self.points.len()];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                let (small, big) = (&self.points[j].prime, &self.points[i].prime);
                if small.len() < big.len() && small.is_subset(big) {
                    chain[i] = chain[i].max(chain[j] + 1);
                }
            }
        }
        chain.into_iter().max().unwrap_or(0)
    }
}

/// `{x : xa is a non-unit of the local ring Ra}`.
fn local_maximal_pullback(ring: &Arc<Ring>, a: Elem) -> Ideal {
    let ra: Vec<Elem> = {
        let mut seen = FixedBitSet::with_capacity(ring.size() as usize);
        ring.elements()
            .map(|x| ring.mul(x, a))
            .filter(|&y| !seen.put(y.index()))
            .collect()
    };
    let mut units = FixedBitSet::with_capacity(ring.size() as usize);
    for &u in &ra {
        if ra.iter().any(|&v| ring.mul(u, v) == a) {
            units.insert(u.index());
        }
    }
    Ideal::from_predicate(ring, |x| !units.contains(ring.mul(x, a).index()))
        .expect("pullback of the maximal ideal of a local factor is an ideal")
}

/// Principal ideals `Re` over all idempotents `e`; these are all the regular
/// ideals of a finite ring.
pub fn regular_ideals(ring: &Arc<Ring>) -> Vec<Ideal> {
    let mut out: Vec<Ideal> = Vec::new();
    for e in ring.idempotents() {
        let i = Ideal::principal(ring, e);
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.member_order(b)));
    out
}

/// Maximal proper regular ideals by direct search, without atoms.
pub fn max_regular_ideals(ring: &Arc<Ring>) -> Vec<Ideal> {
    let proper: Vec<Ideal> = regular_ideals(ring)
        .into_iter()
        .filter(Ideal::is_proper)
        .collect();
    let mut out: Vec<Ideal> = proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .cloned()
        .collect();
    out.sort_by(|a, b| a.member_order(b));
    out
}

pub fn is_max_regular(ideal: &Ideal) -> bool {
    if !ideal.is_proper() || !ideal.is_regular() {
        return false;
    }
    !regular_ideals(ideal.ring())
        .iter()
        .any(|j| j.is_proper() && j.len() > ideal.len() && ideal.is_subset(j))
}
