use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use super::{Elem, Ring};

/// Structural predicates decided by exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingProperties {
    pub is_local: bool,
    pub is_field: bool,
    pub is_domain: bool,
    pub is_von_neumann_regular: bool,
    pub has_nontrivial_idempotents: bool,
}

impl Ring {
    /// All `e` with `e^2 = e`, ascending.
    pub fn idempotents(&self) -> Vec<Elem> {
        if let Some(factors) = self.factors() {
            // componentwise; the cartesian product comes out in element order
            return factors
                .iter()
                .map(|f| f.idempotents())
                .multi_cartesian_product()
                .map(|parts| self.from_components(&parts))
                .collect();
        }
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// Least `d >= 1` with `a^d = 0`, or `None` when `a` is not nilpotent.
    ///
    /// The powers of `a` stop changing or start cycling within `|R|` steps, so
    /// the search is bounded by the ring size (and stops as soon as a power
    /// repeats).
    pub fn nilpotency_index(&self, a: Elem) -> Option<u64> {
        let mut x = a;
        let mut d = 1u64;
        loop {
            if x == Elem::ZERO {
                return Some(d);
            }
            let next = self.mul(x, a);
            if next == x || d >= self.size {
                return None;
            }
            x = next;
            d += 1;
        }
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nilpotency_index(a).is_some()
    }

    pub fn units(&self) -> Vec<Elem> {
        self.unit_mask().ones().map(|i| Elem(i as u64)).collect()
    }

    pub fn is_field(&self) -> bool {
        !self.is_zero_ring() && self.unit_mask().count_ones(..) as u64 == self.size - 1
    }

    pub fn is_domain(&self) -> bool {
        if self.is_zero_ring() {
            return false;
        }
        for a in self.elements().skip(1) {
            for b in self.elements().skip(1) {
                if self.mul(a, b) == Elem::ZERO {
                    return false;
                }
            }
        }
        true
    }

    /// Non-units form an ideal.
    pub fn is_local(&self) -> bool {
        if self.is_zero_ring() {
            return false;
        }
        // r*a is a non-unit whenever a is, so only additive closure can fail
        let units = self.unit_mask();
        let nonunits: Vec<Elem> = self.elements().filter(|a| !units.contains(a.index())).collect();
        nonunits
            .iter()
            .all(|&a| nonunits.iter().all(|&b| !units.contains(self.add(a, b).index())))
    }

    /// Units as a bitset over element indices.
    pub fn unit_mask(&self) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.size as usize);
        if self.is_product() || self.modulus().is_some() {
            for a in self.elements() {
                mask.set(a.index(), self.is_unit(a));
            }
            return mask;
        }
        for a in self.elements() {
            if mask.contains(a.index()) {
                continue;
            }
            for b in self.elements() {
                if self.mul(a, b) == self.one() {
                    mask.insert(a.index());
                    mask.insert(b.index());
                    break;
                }
            }
        }
        mask
    }

    /// Every `a` has some `x` with `a = a^2 x`.
    pub fn is_von_neumann_regular(&self) -> bool {
        self.elements().all(|a| {
            let a2 = self.mul(a, a);
            self.elements().any(|x| self.mul(a2, x) == a)
        })
    }

    pub fn has_nontrivial_idempotents(&self) -> bool {
        self.elements()
            .any(|e| e != Elem::ZERO && e != self.one() && self.mul(e, e) == e)
    }

    pub fn properties(&self) -> RingProperties {
        RingProperties {
            is_local: self.is_local(),
            is_field: self.is_field(),
            is_domain: self.is_domain(),
            is_von_neumann_regular: self.is_von_neumann_regular(),
            has_nontrivial_idempotents: self.has_nontrivial_idempotents(),
        }
    }
}
