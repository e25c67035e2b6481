use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{Elem, Ring};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// A ring homomorphism stored as a table over the source elements.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<Ring>,
    target: Arc<Ring>,
    map: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub struct HomAnalysis {
    pub kernel: Ideal,
    /// Image elements, ascending.
    pub image: Vec<Elem>,
    pub is_injective: bool,
    pub is_surjective: bool,
}

impl RingHom {
    /// Checks that `map` preserves 0, 1, addition and multiplication on every
    /// pair of source elements.
    pub fn new(source: Arc<Ring>, target: Arc<Ring>, map: Vec<Elem>) -> Result<RingHom> {
        let h = RingHom::new_unchecked(source, target, map);
        h.verify()?;
        Ok(h)
    }

    pub fn from_fn(
        source: &Arc<Ring>,
        target: &Arc<Ring>,
        f: impl Fn(Elem) -> Elem,
    ) -> Result<RingHom> {
        let map = source.elements().map(f).collect();
        RingHom::new(source.clone(), target.clone(), map)
    }

    pub(crate) fn new_unchecked(source: Arc<Ring>, target: Arc<Ring>, map: Vec<Elem>) -> RingHom {
        RingHom { source, target, map }
    }

    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.map.len() as u64 != s.size() {
            return Err(Error::NotAHom(format!(
                "table has {} entries for {} source elements",
                self.map.len(),
                s.size()
            )));
        }
        if let Some(a) = s.elements().find(|&a| !t.contains(self.map[a.index()])) {
            return Err(Error::NotAHom(format!("{} maps outside the target", s.render(a))));
        }
        if self.apply(Elem::ZERO) != Elem::ZERO {
            return Err(Error::NotAHom("0 is not sent to 0".into()));
        }
        if self.apply(s.one()) != t.one() {
            return Err(Error::NotAHom("1 is not sent to 1".into()));
        }
        for a in s.elements() {
            let fa = self.apply(a);
            for b in s.elements().skip(a.index()) {
                let fb = self.apply(b);
                if self.apply(s.add(a, b)) != t.add(fa, fb) {
                    return Err(Error::NotAHom(format!(
                        "addition fails at {}, {}",
                        s.render(a),
                        s.render(b)
                    )));
                }
                if self.apply(s.mul(a, b)) != t.mul(fa, fb) {
                    return Err(Error::NotAHom(format!(
                        "multiplication fails at {}, {}",
                        s.render(a),
                        s.render(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(ring: &Arc<Ring>) -> RingHom {
        RingHom::new_unchecked(ring.clone(), ring.clone(), ring.elements().collect())
    }

    /// `pi_k` onto factor `k` of a product.
    pub fn projection(product: &Arc<Ring>, k: usize) -> Result<RingHom> {
        let factors = product
            .factors()
            .ok_or_else(|| Error::NotAProduct(product.to_string()))?;
        let target = factors
            .get(k)
            .ok_or(Error::UnknownIndex {
                index: k,
                count: factors.len(),
            })?
            .clone();
        let map = product.elements().map(|a| product.component(a, k)).collect();
        Ok(RingHom::new_unchecked(product.clone(), target, map))
    }

    /// `R -> R/I`.
    pub fn quotient_map(ideal: &Ideal) -> RingHom {
        let base = ideal.ring().clone();
        let q = ideal.quotient_ring();
        let map = base
            .elements()
            .map(|a| q.class_of(a).expect("quotient ring"))
            .collect();
        RingHom::new_unchecked(base, q, map)
    }

    /// The unique map `Z/n -> B`; exists iff the characteristic of `B`
    /// divides `n`.
    pub fn structure_map(source: &Arc<Ring>, target: &Arc<Ring>) -> Result<RingHom> {
        let n = source
            .modulus()
            .ok_or_else(|| Error::NotAHom(format!("{source} is not of the form Z/n")))?;
        if n % target.characteristic() != 0 {
            return Err(Error::NotAHom(format!(
                "characteristic {} of {target} does not divide {n}",
                target.characteristic()
            )));
        }
        let map = (0..n).map(|i| target.times(i, target.one())).collect();
        Ok(RingHom::new_unchecked(source.clone(), target.clone(), map))
    }

    /// `prod phi_k : prod A_k -> prod B_k`, componentwise.
    pub fn induced(source: &Arc<Ring>, target: &Arc<Ring>, family: &[RingHom]) -> Result<RingHom> {
        let sf = source
            .factors()
            .ok_or_else(|| Error::NotAProduct(source.to_string()))?;
        let tf = target
            .factors()
            .ok_or_else(|| Error::NotAProduct(target.to_string()))?;
        if sf.len() != family.len() || tf.len() != family.len() {
            return Err(Error::NotAHom(format!(
                "{} maps for {} source and {} target factors",
                family.len(),
                sf.len(),
                tf.len()
            )));
        }
        for (k, h) in family.iter().enumerate() {
            if !Ring::same(&h.source, &sf[k]) || !Ring::same(&h.target, &tf[k]) {
                return Err(Error::NotAHom(format!("map {} does not match factor {}", k, k)));
            }
        }
        let map = source
            .elements()
            .map(|a| {
                let parts: Vec<Elem> = family
                    .iter()
                    .enumerate()
                    .map(|(k, h)| h.apply(source.component(a, k)))
                    .collect();
                target.from_components(&parts)
            })
            .collect();
        Ok(RingHom::new_unchecked(source.clone(), target.clone(), map))
    }

    /// `x -> x^p` on a ring of prime characteristic `p`.
    pub fn frobenius(ring: &Arc<Ring>) -> Result<RingHom> {
        let p = ring.characteristic();
        let map = ring.elements().map(|a| ring.pow(a, p)).collect();
        RingHom::new(ring.clone(), ring.clone(), map)
    }

    /// `a -> (a, h(a))` into `A x B`; always injective.
    pub fn graph(h: &RingHom) -> Result<RingHom> {
        let target = Ring::product(vec![h.source.clone(), h.target.clone()])?;
        let map = h
            .source
            .elements()
            .map(|a| target.from_components(&[a, h.apply(a)]))
            .collect();
        Ok(RingHom::new_unchecked(h.source.clone(), target, map))
    }

    /// `other . self`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom> {
        if !Ring::same(&self.target, &other.source) {
            return Err(Error::RingMismatch);
        }
        let map = self.map.iter().map(|&b| other.apply(b)).collect();
        Ok(RingHom::new_unchecked(self.source.clone(), other.target.clone(), map))
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a.index()]
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    /// `phi^-1(J)`.
    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        if !Ring::same(ideal.ring(), &self.target) {
            return Err(Error::RingMismatch);
        }
        Ideal::from_predicate(&self.source, |a| ideal.contains(self.apply(a)))
    }

    pub fn kernel(&self) -> Ideal {
        Ideal::from_predicate(&self.source, |a| self.apply(a) == Elem::ZERO)
            .expect("kernel of a homomorphism is an ideal")
    }

    pub fn image_mask(&self) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.target.size() as usize);
        for &b in &self.map {
            mask.insert(b.index());
        }
        mask
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_mask().count_ones(..) as u64 == self.target.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    pub fn analysis(&self) -> HomAnalysis {
        let kernel = self.kernel();
        let image: Vec<Elem> = self.image_mask().ones().map(|i| Elem(i as u64)).collect();
        HomAnalysis {
            is_injective: kernel.is_zero(),
            is_surjective: image.len() as u64 == self.target.size(),
            kernel,
            image,
        }
    }
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingHom({} -> {})", self.source, self.target)
    }
}
