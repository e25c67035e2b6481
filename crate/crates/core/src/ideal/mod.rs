//! Ideals of finite rings, stored extensionally.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Limits, Result};
use crate::ring::{Elem, Ring};

mod lattice;

pub use lattice::{all_ideals, has_ideal_avoidance, qb_criterion, AvoidanceReport, QbReport};

/// An ideal: the full member set plus the generators it was built from.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Elem>,
    members: FixedBitSet,
    count: u64,
}

/// Why an ideal fails to be prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeFailure {
    Improper,
    Witness(Elem, Elem),
}

impl Ideal {
    /// Ideal generated by `gens`, refusing rings above the size guard.
    pub fn generate(ring: &Arc<Ring>, gens: &[Elem], limits: &Limits) -> Result<Ideal> {
        limits.check(ring.size())?;
        if let Some(g) = gens.iter().find(|g| !ring.contains(**g)) {
            return Err(Error::BadElement {
                literal: g.0.to_string(),
                ring: ring.to_string(),
                reason: "index out of range".into(),
            });
        }
        Ok(Ideal::closure(ring, gens))
    }

    /// Smallest ideal containing `gens`.
    pub fn closure(ring: &Arc<Ring>, gens: &[Elem]) -> Ideal {
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        members.insert(0);
        let mut list = vec![Elem::ZERO];
        for &g in gens {
            if !members.contains(g.index()) {
                absorb_principal(ring, &mut members, &mut list, g);
            }
        }
        Ideal {
            ring: ring.clone(),
            generators: gens.to_vec(),
            count: list.len() as u64,
            members,
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::closure(ring, &[])
    }

    pub fn whole(ring: &Arc<Ring>) -> Ideal {
        Ideal::closure(ring, &[ring.one()])
    }

    pub fn principal(ring: &Arc<Ring>, a: Elem) -> Ideal {
        Ideal::closure(ring, &[a])
    }

    /// Wraps a member set, choosing generators greedily in element order.
    /// Fails when the set is not an ideal.
    pub fn from_members(ring: &Arc<Ring>, members: FixedBitSet) -> Result<Ideal> {
        let mut closed = FixedBitSet::with_capacity(ring.size() as usize);
        closed.insert(0);
        let mut list = vec![Elem::ZERO];
        let mut generators = Vec::new();
        if !members.contains(0) {
            return Err(Error::NotAnIdeal("0 is missing".into()));
        }
        for i in members.ones() {
            if closed.contains(i) {
                continue;
            }
            let g = Elem(i as u64);
            generators.push(g);
            absorb_principal(ring, &mut closed, &mut list, g);
            if !closed.is_subset(&members) {
                let stray = closed.difference(&members).next().unwrap_or(0);
                return Err(Error::NotAnIdeal(format!(
                    "closure picks up {} outside the set",
                    ring.render(Elem(stray as u64))
                )));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            count: list.len() as u64,
            members: closed,
        })
    }

    pub fn from_predicate(ring: &Arc<Ring>, pred: impl Fn(Elem) -> bool) -> Result<Ideal> {
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        for a in ring.elements() {
            if pred(a) {
                members.insert(a.index());
            }
        }
        Ideal::from_members(ring, members)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a.index())
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|i| Elem(i as u64))
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.count == 1
    }

    pub fn is_whole(&self) -> bool {
        self.count == self.ring.size()
    }

    pub fn same_ring(&self, other: &Ideal) -> bool {
        Ring::same(&self.ring, &other.ring)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        Ideal::closure(&self.ring, &gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Ideal::from_members(&self.ring, m).expect("intersection of ideals is an ideal")
    }

    pub fn primality_failure(&self) -> Option<PrimeFailure> {
        if !self.is_proper() {
            return Some(PrimeFailure::Improper);
        }
        let outside: Vec<Elem> = self.ring.elements().filter(|&a| !self.contains(a)).collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i..] {
                if self.contains(self.ring.mul(a, b)) {
                    return Some(PrimeFailure::Witness(a, b));
                }
            }
        }
        None
    }

    /// Proper, and `ab` in the ideal forces `a` or `b` in it.
    pub fn is_prime(&self) -> bool {
        self.primality_failure().is_none()
    }

    pub fn require_prime(&self) -> Result<()> {
        match self.primality_failure() {
            None => Ok(()),
            Some(PrimeFailure::Improper) => Err(Error::NotPrime {
                ideal: self.render(),
                witness: None,
            }),
            Some(PrimeFailure::Witness(a, b)) => Err(Error::NotPrime {
                ideal: self.render(),
                witness: Some((self.ring.render(a), self.ring.render(b))),
            }),
        }
    }

    pub fn quotient_ring(&self) -> Arc<Ring> {
        Ring::quotient(self)
    }

    /// The quotient by this ideal is a field.
    pub fn is_maximal(&self) -> bool {
        self.is_proper() && self.quotient_ring().is_field()
    }

    /// `{a : a^m in I for some m}`.
    pub fn radical(&self) -> Ideal {
        let ring = &self.ring;
        Ideal::from_predicate(ring, |a| {
            let mut x = a;
            for _ in 0..ring.size() {
                if self.contains(x) {
                    return true;
                }
                let next = ring.mul(x, a);
                if next == x {
                    return false;
                }
                x = next;
            }
            false
        })
        .expect("radical of an ideal is an ideal")
    }

    /// Generated by the idempotents it contains.
    pub fn is_regular(&self) -> bool {
        let idem: Vec<Elem> = self
            .ring
            .idempotents()
            .into_iter()
            .filter(|&e| self.contains(e))
            .collect();
        Ideal::closure(&self.ring, &idem).members == self.members
    }

    /// Generator list, e.g. `(2)` or `((0,1),(2,0))`.
    pub fn render(&self) -> String {
        if self.generators.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.generators.iter().map(|&g| self.ring.render(g)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn render_members(&self) -> String {
        let parts: Vec<String> = self.elements().map(|g| self.ring.render(g)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Order used to list primes: lexicographic on the ascending member lists.
    pub fn member_order(&self, other: &Ideal) -> std::cmp::Ordering {
        self.members.ones().cmp(other.members.ones())
    }
}

fn absorb_principal(ring: &Ring, members: &mut FixedBitSet, list: &mut Vec<Elem>, g: Elem) {
    let mut seen = FixedBitSet::with_capacity(ring.size() as usize);
    let mut multiples = Vec::new();
    for r in ring.elements() {
        let p = ring.mul(r, g);
        if !seen.put(p.index()) {
            multiples.push(p);
        }
    }
    let current = list.clone();
    for x in current {
        for &p in &multiples {
            let s = ring.add(x, p);
            if !members.put(s.index()) {
                list.push(s);
            }
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.same_ring(other)
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} in {}", self.render(), self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All nilpotent elements.
pub fn nilradical(ring: &Arc<Ring>) -> Ideal {
    Ideal::from_predicate(ring, |a| ring.is_nilpotent(a)).expect("nilradical is an ideal")
}

/// Intersection of the maximal ideals (every prime of a finite ring is maximal).
pub fn jacobson_radical(ring: &Arc<Ring>) -> Ideal {
    let spec = crate::spectrum::Spectrum::compute(ring);
    let mut acc = Ideal::whole(ring);
    for p in spec.points() {
        debug_assert!(p.prime.is_maximal());
        acc = acc.intersection(&p.prime);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Value;

    fn z(n: u64) -> Arc<Ring> {
        Ring::modular(n).unwrap()
    }

    fn elems(ideal: &Ideal) -> Vec<u64> {
        ideal.elements().map(|e| e.0).collect()
    }

    #[test]
    fn closure_examples() {
        let r = z(12);
        assert_eq!(elems(&Ideal::generate(&r, &[Elem(6)], &Limits::default()).unwrap()), vec![0, 6]);
        assert_eq!(elems(&Ideal::closure(&r, &[])), vec![0]);
        let p = Ring::product(vec![z(6), z(4)]).unwrap();
        let e1 = p.decode(&Value::Tuple(vec![Value::Int(1), Value::Int(0)])).unwrap();
        let i = Ideal::closure(&p, &[e1]);
        assert_eq!(i.len(), 6);
        assert!(i.elements().all(|x| p.component(x, 1) == Elem::ZERO));
    }

    #[test]
    fn size_guard() {
        let r = z(5000);
        let err = Ideal::generate(&r, &[Elem(2)], &Limits::default()).unwrap_err();
        assert_eq!(err, Error::TooLarge { size: 5000, limit: 4096 });
    }

    #[test]
    fn primality() {
        let r = z(12);
        assert!(Ideal::principal(&r, Elem(2)).is_prime());
        let six = Ideal::principal(&r, Elem(6));
        assert!(!six.is_prime());
        match six.primality_failure() {
            Some(PrimeFailure::Witness(a, b)) => {
                assert!(six.contains(r.mul(a, b)) && !six.contains(a) && !six.contains(b))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(Ideal::whole(&r).primality_failure(), Some(PrimeFailure::Improper));
        let p = Ring::product(vec![z(4), z(9)]).unwrap();
        let q = Ideal::closure(
            &p,
            &[
                p.decode(&Value::Tuple(vec![Value::Int(2), Value::Int(0)])).unwrap(),
                p.decode(&Value::Tuple(vec![Value::Int(0), Value::Int(1)])).unwrap(),
            ],
        );
        assert_eq!(q.len(), 18);
        assert!(q.is_prime());
    }

    #[test]
    fn maximality() {
        assert!(Ideal::principal(&z(6), Elem(3)).is_maximal());
        assert!(!Ideal::principal(&z(8), Elem(4)).is_maximal());
        assert!(Ideal::zero(&z(7)).is_maximal());
    }

    #[test]
    fn radicals() {
        let r = z(12);
        assert_eq!(elems(&nilradical(&r)), vec![0, 6]);
        assert_eq!(Ideal::principal(&r, Elem(4)).radical(), Ideal::principal(&r, Elem(2)));
        assert_eq!(nilradical(&r), Ideal::zero(&r).radical());
        let p = Ring::product(vec![z(4), z(9)]).unwrap();
        let j = jacobson_radical(&p);
        let expected: Vec<u64> = p
            .elements()
            .filter(|&x| p.component(x, 0).0 % 2 == 0 && p.component(x, 1).0 % 3 == 0)
            .map(|e| e.0)
            .collect();
        assert_eq!(elems(&j), expected);
    }

    #[test]
    fn regular_ideals() {
        assert!(Ideal::principal(&z(6), Elem(3)).is_regular());
        assert!(!Ideal::principal(&z(4), Elem(2)).is_regular());
        let p = Ring::product(vec![z(6), z(4)]).unwrap();
        let e1 = p.decode(&Value::Tuple(vec![Value::Int(1), Value::Int(0)])).unwrap();
        let i = Ideal::from_predicate(&p, |x| p.component(x, 1) == Elem::ZERO).unwrap();
        assert!(i.is_regular());
        assert_eq!(i, Ideal::principal(&p, e1));
    }

    #[test]
    fn from_members_rejects_non_ideals() {
        let r = z(6);
        let mut m = FixedBitSet::with_capacity(6);
        m.insert(0);
        m.insert(2);
        assert!(matches!(Ideal::from_members(&r, m), Err(Error::NotAnIdeal(_))));
    }
}
