//! Brute-force ideal enumeration and the ideal-avoidance checks built on it.
//!
//! `all_ideals` never consults the spectrum module, so it serves as an
//! independent oracle for it.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use super::Ideal;
use crate::error::{Error, Limits, Result};
use crate::localization::{localize, MultiplicativeSet};
use crate::ring::Ring;
use crate::spectrum::Spectrum;

/// Every ideal of a finite ring: the principal ideals closed under pairwise
/// sums. Sorted by size, then by member order.
pub fn all_ideals(ring: &Arc<Ring>, limits: &Limits) -> Result<Vec<Ideal>> {
    limits.check_oracle(ring.size())?;
    let cap = limits.max_ideals;
    let too_many = || Error::TooManyIdeals {
        ring: ring.to_string(),
        cap,
    };
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut found: Vec<Ideal> = Vec::new();
    for a in ring.elements() {
        let p = Ideal::principal(ring, a);
        if seen.insert(p.members().clone()) {
            found.push(p);
        }
    }
    if found.len() > cap {
        return Err(too_many());
    }
    let mut frontier = 0;
    while frontier < found.len() {
        let end = found.len();
        for i in frontier..end {
            for j in 0..end {
                if found[i].is_subset(&found[j]) || found[j].is_subset(&found[i]) {
                    continue;
                }
                let s = found[i].sum(&found[j]);
                if seen.insert(s.members().clone()) {
                    found.push(s);
                    if found.len() > cap {
                        return Err(too_many());
                    }
                }
            }
        }
        frontier = end;
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.member_order(b)));
    Ok(found)
}

#[derive(Debug, Clone)]
pub struct AvoidanceReport {
    pub holds: bool,
    /// Largest cover family that was searched.
    pub max_cover: usize,
    pub ideals_checked: usize,
    /// An ideal inside the union of the cover but inside none of its members.
    pub witness: Option<(Ideal, Vec<Ideal>)>,
}

/// Searches for an ideal `I` and at most `max_cover` ideals whose union
/// contains `I` while no single one does.
pub fn has_ideal_avoidance(
    ring: &Arc<Ring>,
    max_cover: usize,
    limits: &Limits,
) -> Result<AvoidanceReport> {
    let ideals = all_ideals(ring, limits)?;
    for target in &ideals {
        if target.is_zero() {
            continue;
        }
        let candidates: Vec<&Ideal> = ideals.iter().filter(|j| !target.is_subset(j)).collect();
        for size in 2..=max_cover.min(candidates.len()) {
            for family in candidates.iter().combinations(size) {
                let mut union = FixedBitSet::with_capacity(ring.size() as usize);
                for j in &family {
                    union.union_with(j.members());
                }
                if target.members().is_subset(&union) {
                    return Ok(AvoidanceReport {
                        holds: false,
                        max_cover,
                        ideals_checked: ideals.len(),
                        witness: Some((
                            target.clone(),
                            family.into_iter().map(|j| (*j).clone()).collect(),
                        )),
                    });
                }
            }
        }
    }
    Ok(AvoidanceReport {
        holds: true,
        max_cover,
        ideals_checked: ideals.len(),
        witness: None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct QbLocal {
    pub maximal_ideal: String,
    pub residue_field_size: u64,
    pub localization_size: u64,
    pub all_principal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct QbReport {
    pub holds: bool,
    pub locals: Vec<QbLocal>,
}

/// For every maximal ideal `M`, every ideal of `R_M` is principal. Residue
/// fields of a finite ring are finite, so the infinite-field branch of the
/// criterion never applies.
pub fn qb_criterion(ring: &Arc<Ring>, limits: &Limits) -> Result<QbReport> {
    let spec = Spectrum::compute(ring);
    let mut locals = Vec::new();
    for point in spec.points() {
        let m = &point.prime;
        let t = MultiplicativeSet::complement_of_prime(m)?;
        let local = localize(&t);
        let lring = local.ring().clone();
        let ideals = all_ideals(&lring, limits)?;
        let principal: HashSet<FixedBitSet> = lring
            .elements()
            .map(|a| Ideal::principal(&lring, a).members().clone())
            .collect();
        let all_principal = ideals.iter().all(|i| principal.contains(i.members()));
        locals.push(QbLocal {
            maximal_ideal: m.render(),
            residue_field_size: ring.size() / m.len(),
            localization_size: lring.size(),
            all_principal,
        });
    }
    Ok(QbReport {
        holds: locals.iter().all(|l| l.all_principal),
        locals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Elem, Fixture};

    fn z(n: u64) -> Arc<Ring> {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn divisor_lattice_of_12() {
        let ideals = all_ideals(&z(12), &Limits::default()).unwrap();
        assert_eq!(ideals.len(), 6);
        let gens: Vec<Ideal> = [0u64, 6, 4, 3, 2, 1]
            .iter()
            .map(|&g| Ideal::principal(&z(12), Elem(g)))
            .collect();
        for g in &gens {
            assert!(ideals.contains(g));
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(all_ideals(&z(7), &Limits::default()).unwrap().len(), 2);
        let b = Ring::product(vec![z(2), z(2)]).unwrap();
        assert_eq!(all_ideals(&b, &Limits::default()).unwrap().len(), 4);
    }

    #[test]
    fn oracle_guard_and_cap() {
        let err = all_ideals(&z(100), &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::TooLarge { size: 100, limit: 64 }));
        let tight = Limits {
            max_ideals: 3,
            ..Limits::default()
        };
        let err = all_ideals(&z(12), &tight).unwrap_err();
        assert!(matches!(err, Error::TooManyIdeals { cap: 3, .. }));
    }

    #[test]
    fn avoidance_examples() {
        let l = Limits::default();
        assert!(has_ideal_avoidance(&z(12), 4, &l).unwrap().holds);
        let b = Ring::product(vec![z(2), z(2)]).unwrap();
        assert!(has_ideal_avoidance(&b, 4, &l).unwrap().holds);

        let f2xy = Fixture::F2xy.ring();
        let report = has_ideal_avoidance(&f2xy, 4, &l).unwrap();
        assert!(!report.holds);
        let (target, cover) = report.witness.unwrap();
        assert_eq!(target.len(), 4, "the maximal ideal (x, y)");
        assert_eq!(cover.len(), 3);
        assert!(cover.iter().all(|j| !target.is_subset(j)));
    }

    #[test]
    fn qb_examples() {
        let l = Limits::default();
        let r = qb_criterion(&z(12), &l).unwrap();
        assert!(r.holds);
        let mut sizes: Vec<u64> = r.locals.iter().map(|x| x.localization_size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 4]);
        assert!(!qb_criterion(&Fixture::F2xy.ring(), &l).unwrap().holds);
        assert!(qb_criterion(&Fixture::F4.ring(), &l).unwrap().holds);
        assert!(qb_criterion(&z(5), &l).unwrap().holds);
    }
}
