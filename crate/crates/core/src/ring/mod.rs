//! Explicit finite commutative rings.
//!
//! Every ring has elements `0..size`, encoded canonically:
//!
//! * `Z/n`: the residue itself.
//! * products: mixed radix over the factors, first factor most significant,
//!   so the index order is the lexicographic order on tuples;
//! * quotients: cosets numbered in order of their least representative;
//! * tables: the table index;
//! * rings of fractions: classes numbered in order of their least pair.
//!
//! Element 0 is always the additive identity.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::Ideal;

mod fixtures;
mod hom;
mod props;

pub use fixtures::Fixture;
pub use hom::{HomAnalysis, RingHom};
pub use props::RingProperties;

/// An element of a finite ring, by canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A human-readable element literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Int(u64),
    Tuple(Vec<Value>),
    Frac(Box<Value>, Box<Value>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Tuple(items) => {
                write!(f, "(")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
            Value::Frac(num, den) => write!(f, "{num}/{den}"),
        }
    }
}

pub struct Ring {
    kind: RingKind,
    size: u64,
    one: Elem,
}

enum RingKind {
    Modular(u64),
    Product {
        factors: Vec<Arc<Ring>>,
        strides: Vec<u64>,
    },
    Quotient {
        base: Arc<Ring>,
        ideal: Ideal,
        class_of: Vec<u32>,
        reps: Vec<Elem>,
    },
    Table {
        name: Option<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
    },
    Fraction(Fractions),
}

/// Data of a ring of fractions `T^-1 R` of a finite ring.
///
/// Two pairs `(r, t)`, `(r', t')` are equivalent iff `rt' - r't` lies in
/// `kernel = {a : at = 0 for some t in T}`. Every `t in T` is invertible
/// modulo the kernel, so the class of `(r, t)` is determined by the residue
/// of `r * t^-1`; `residue` maps base elements to class numbers under that
/// correspondence and `inverse[t]` holds a base element inverting `t` modulo
/// the kernel.
pub(crate) struct Fractions {
    pub(crate) base: Arc<Ring>,
    pub(crate) denominators: FixedBitSet,
    pub(crate) residue: Vec<u32>,
    pub(crate) inverse: Vec<u64>,
    pub(crate) reps: Vec<(Elem, Elem)>,
}

impl Fractions {
    #[inline]
    pub(crate) fn class_of_pair(&self, num: Elem, den: Elem) -> Elem {
        let inv = self.inverse[den.index()];
        debug_assert!(inv != u64::MAX, "denominator outside the multiplicative set");
        let q = self.base.mul(num, Elem(inv));
        Elem(self.residue[q.index()] as u64)
    }
}

impl Ring {
    /// `Z/n`. `n = 1` gives the zero ring.
    pub fn modular(n: u64) -> Result<Arc<Ring>> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Arc::new(Ring {
            kind: RingKind::Modular(n),
            size: n,
            one: Elem(1 % n),
        }))
    }

    /// Direct product of nonzero rings.
    pub fn product(factors: Vec<Arc<Ring>>) -> Result<Arc<Ring>> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if let Some(index) = factors.iter().position(|f| f.is_zero_ring()) {
            return Err(Error::ZeroFactor { index });
        }
        let mut strides = vec![1u64; factors.len()];
        let mut acc: u64 = 1;
        for k in (0..factors.len()).rev() {
            strides[k] = acc;
            acc = acc.checked_mul(factors[k].size).ok_or(Error::SizeOverflow)?;
        }
        let one = factors
            .iter()
            .zip(&strides)
            .map(|(f, s)| f.one.0 * s)
            .sum();
        Ok(Arc::new(Ring {
            kind: RingKind::Product { factors, strides },
            size: acc,
            one: Elem(one),
        }))
    }

    /// `R / I`, elements are cosets numbered by least representative.
    pub fn quotient(ideal: &Ideal) -> Arc<Ring> {
        let base = ideal.ring().clone();
        let n = base.size as usize;
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let members: Vec<Elem> = ideal.elements().collect();
        for a in 0..n {
            if class_of[a] != u32::MAX {
                continue;
            }
            let class = reps.len() as u32;
            reps.push(Elem(a as u64));
            for &i in &members {
                let b = base.add(Elem(a as u64), i);
                class_of[b.index()] = class;
            }
        }
        let one = Elem(class_of[base.one.index()] as u64);
        Arc::new(Ring {
            size: reps.len() as u64,
            one,
            kind: RingKind::Quotient {
                base,
                ideal: ideal.clone(),
                class_of,
                reps,
            },
        })
    }

    /// A ring given by explicit addition and multiplication tables (row-major,
    /// `size * size` entries). Element 0 must be the additive identity. All
    /// commutative ring axioms are checked.
    pub fn table(
        name: Option<&str>,
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Arc<Ring>> {
        let fail = |axiom, witness: &[usize]| Error::TableAxiom {
            axiom,
            witness: witness.iter().map(|&w| w as u64).collect(),
        };
        if size == 0 {
            return Err(fail("nonempty carrier", &[]));
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(fail("table shape", &[add.len(), mul.len()]));
        }
        if let Some(i) = add.iter().chain(&mul).position(|&v| v as usize >= size) {
            return Err(fail("closure", &[i % (size * size)]));
        }
        let a = |x: usize, y: usize| add[x * size + y] as usize;
        let m = |x: usize, y: usize| mul[x * size + y] as usize;
        for x in 0..size {
            if a(0, x) != x {
                return Err(fail("additive identity is element 0", &[x]));
            }
            for y in 0..size {
                if a(x, y) != a(y, x) {
                    return Err(fail("commutativity of addition", &[x, y]));
                }
                if m(x, y) != m(y, x) {
                    return Err(fail("commutativity of multiplication", &[x, y]));
                }
            }
        }
        let mut neg = vec![0u32; size];
        for x in 0..size {
            match (0..size).find(|&y| a(x, y) == 0) {
                Some(y) => neg[x] = y as u32,
                None => return Err(fail("additive inverses", &[x])),
            }
        }
        let one = (0..size)
            .find(|&e| (0..size).all(|x| m(e, x) == x))
            .ok_or_else(|| fail("multiplicative identity", &[]))?;
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(fail("associativity of addition", &[x, y, z]));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(fail("associativity of multiplication", &[x, y, z]));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(fail("distributivity", &[x, y, z]));
                    }
                }
            }
        }
        Ok(Arc::new(Ring {
            kind: RingKind::Table {
                name: name.map(str::to_string),
                add,
                mul,
                neg,
            },
            size: size as u64,
            one: Elem(one as u64),
        }))
    }

    pub(crate) fn fraction(data: Fractions) -> Arc<Ring> {
        let one = data.class_of_pair(data.base.one(), data.base.one());
        Arc::new(Ring {
            size: data.reps.len() as u64,
            one,
            kind: RingKind::Fraction(data),
        })
    }

    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size).map(Elem)
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.size
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            RingKind::Modular(n) => {
                let s = a.0 + b.0;
                Elem(if s >= *n { s - n } else { s })
            }
            RingKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    let x = (a.0 / s) % f.size;
                    let y = (b.0 / s) % f.size;
                    out += f.add(Elem(x), Elem(y)).0 * s;
                }
                Elem(out)
            }
            RingKind::Quotient {
                base,
                class_of,
                reps,
                ..
            } => {
                let s = base.add(reps[a.index()], reps[b.index()]);
                Elem(class_of[s.index()] as u64)
            }
            RingKind::Table { add, .. } => Elem(add[a.index() * self.size as usize + b.index()] as u64),
            RingKind::Fraction(fr) => {
                let (r1, t1) = fr.reps[a.index()];
                let (r2, t2) = fr.reps[b.index()];
                let base = &fr.base;
                let num = base.add(base.mul(r1, t2), base.mul(r2, t1));
                fr.class_of_pair(num, base.mul(t1, t2))
            }
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            RingKind::Modular(n) => Elem(((a.0 as u128 * b.0 as u128) % *n as u128) as u64),
            RingKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    let x = (a.0 / s) % f.size;
                    let y = (b.0 / s) % f.size;
                    out += f.mul(Elem(x), Elem(y)).0 * s;
                }
                Elem(out)
            }
            RingKind::Quotient {
                base,
                class_of,
                reps,
                ..
            } => {
                let p = base.mul(reps[a.index()], reps[b.index()]);
                Elem(class_of[p.index()] as u64)
            }
            RingKind::Table { mul, .. } => Elem(mul[a.index() * self.size as usize + b.index()] as u64),
            RingKind::Fraction(fr) => {
                let (r1, t1) = fr.reps[a.index()];
                let (r2, t2) = fr.reps[b.index()];
                fr.class_of_pair(fr.base.mul(r1, r2), fr.base.mul(t1, t2))
            }
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match &self.kind {
            RingKind::Modular(n) => Elem(if a.0 == 0 { 0 } else { n - a.0 }),
            RingKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    out += f.neg(Elem((a.0 / s) % f.size)).0 * s;
                }
                Elem(out)
            }
            RingKind::Quotient {
                base,
                class_of,
                reps,
                ..
            } => Elem(class_of[base.neg(reps[a.index()]).index()] as u64),
            RingKind::Table { neg, .. } => Elem(neg[a.index()] as u64),
            RingKind::Fraction(fr) => {
                let (r, t) = fr.reps[a.index()];
                fr.class_of_pair(fr.base.neg(r), t)
            }
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `n * a` (repeated addition).
    pub fn times(&self, n: u64, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut base = a;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        match &self.kind {
            RingKind::Modular(n) => {
                if *n == 1 {
                    return Some(Elem::ZERO);
                }
                mod_inverse(a.0, *n).map(Elem)
            }
            RingKind::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    out += f.inverse(Elem((a.0 / s) % f.size))?.0 * s;
                }
                Some(Elem(out))
            }
            _ => self.elements().find(|&b| self.mul(a, b) == self.one),
        }
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> u64 {
        match &self.kind {
            RingKind::Modular(n) => *n,
            RingKind::Product { factors, .. } => factors
                .iter()
                .map(|f| f.characteristic())
                .fold(1, lcm),
            _ => {
                let mut x = self.one;
                let mut k = 1;
                while x != Elem::ZERO {
                    x = self.add(x, self.one);
                    k += 1;
                }
                k
            }
        }
    }

    pub fn factors(&self) -> Option<&[Arc<Ring>]> {
        match &self.kind {
            RingKind::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.kind, RingKind::Product { .. })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::Modular(n) => Some(n),
            _ => None,
        }
    }

    /// Base ring and ideal of a quotient ring.
    pub fn quotient_parts(&self) -> Option<(&Arc<Ring>, &Ideal)> {
        match &self.kind {
            RingKind::Quotient { base, ideal, .. } => Some((base, ideal)),
            _ => None,
        }
    }

    /// Least base representative of a coset.
    pub fn representative(&self, a: Elem) -> Option<Elem> {
        match &self.kind {
            RingKind::Quotient { reps, .. } => Some(reps[a.index()]),
            _ => None,
        }
    }

    /// Coset of a base element.
    pub fn class_of(&self, base_elem: Elem) -> Option<Elem> {
        match &self.kind {
            RingKind::Quotient { class_of, .. } => Some(Elem(class_of[base_elem.index()] as u64)),
            _ => None,
        }
    }

    pub(crate) fn fractions(&self) -> Option<&Fractions> {
        match &self.kind {
            RingKind::Fraction(fr) => Some(fr),
            _ => None,
        }
    }

    /// Component `k` of a product element.
    pub fn component(&self, a: Elem, k: usize) -> Elem {
        match &self.kind {
            RingKind::Product { factors, strides } => Elem((a.0 / strides[k]) % factors[k].size),
            _ => panic!("component() on a non-product ring"),
        }
    }

    pub fn components(&self, a: Elem) -> Vec<Elem> {
        let n = self.factors().map_or(0, <[_]>::len);
        (0..n).map(|k| self.component(a, k)).collect()
    }

    /// Product element from its components.
    pub fn from_components(&self, parts: &[Elem]) -> Elem {
        match &self.kind {
            RingKind::Product { strides, factors } => {
                assert_eq!(parts.len(), factors.len(), "component count mismatch");
                Elem(parts.iter().zip(strides).map(|(p, s)| p.0 * s).sum())
            }
            _ => panic!("from_components() on a non-product ring"),
        }
    }

    /// Canonical literal of an element.
    pub fn encode(&self, a: Elem) -> Value {
        match &self.kind {
            RingKind::Modular(_) | RingKind::Table { .. } => Value::Int(a.0),
            RingKind::Product { factors, .. } => Value::Tuple(
                factors
                    .iter()
                    .enumerate()
                    .map(|(k, f)| f.encode(self.component(a, k)))
                    .collect(),
            ),
            RingKind::Quotient { base, reps, .. } => base.encode(reps[a.index()]),
            RingKind::Fraction(fr) => {
                let (r, t) = fr.reps[a.index()];
                Value::Frac(Box::new(fr.base.encode(r)), Box::new(fr.base.encode(t)))
            }
        }
    }

    /// Element denoted by a literal. Quotient literals are read in the base
    /// ring and reduced; fraction literals `r/t` need `t` in the denominators.
    pub fn decode(&self, v: &Value) -> Result<Elem> {
        let bad = |reason: &str| Error::BadElement {
            literal: v.to_string(),
            ring: self.to_string(),
            reason: reason.to_string(),
        };
        match (&self.kind, v) {
            (_, Value::Tuple(items)) if items.len() == 1 && !self.is_product() => {
                self.decode(&items[0])
            }
            (RingKind::Modular(n), Value::Int(x)) => {
                if x < n {
                    Ok(Elem(*x))
                } else {
                    Err(bad(&format!("residue out of range [0,{n})")))
                }
            }
            (RingKind::Table { .. }, Value::Int(x)) => {
                if *x < self.size {
                    Ok(Elem(*x))
                } else {
                    Err(bad(&format!("index out of range [0,{})", self.size)))
                }
            }
            (RingKind::Product { factors, .. }, Value::Tuple(items)) => {
                if items.len() != factors.len() {
                    return Err(bad(&format!(
                        "tuple has {} entries, ring has {} factors",
                        items.len(),
                        factors.len()
                    )));
                }
                let parts = factors
                    .iter()
                    .zip(items)
                    .map(|(f, item)| f.decode(item))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.from_components(&parts))
            }
            (RingKind::Product { .. }, _) => Err(bad("product elements are tuples")),
            (RingKind::Quotient { base, class_of, .. }, _) => {
                let b = base.decode(v)?;
                Ok(Elem(class_of[b.index()] as u64))
            }
            (RingKind::Fraction(fr), Value::Frac(num, den)) => {
                let r = fr.base.decode(num)?;
                let t = fr.base.decode(den)?;
                if !fr.denominators.contains(t.index()) {
                    return Err(bad("denominator is not in the multiplicative set"));
                }
                Ok(fr.class_of_pair(r, t))
            }
            (RingKind::Fraction(fr), _) => {
                let r = fr.base.decode(v)?;
                Ok(fr.class_of_pair(r, fr.base.one()))
            }
            _ => Err(bad("expected an integer literal")),
        }
    }

    pub fn render(&self, a: Elem) -> String {
        self.encode(a).to_string()
    }

    /// Structural identity. Cheap when both handles point to the same ring.
    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.size != other.size {
            return false;
        }
        match (&self.kind, &other.kind) {
            (RingKind::Modular(a), RingKind::Modular(b)) => a == b,
            (RingKind::Product { factors: a, .. }, RingKind::Product { factors: b, .. }) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| Ring::same(x, y))
            }
            (RingKind::Quotient { ideal: a, .. }, RingKind::Quotient { ideal: b, .. }) => a == b,
            (
                RingKind::Table { add: a1, mul: m1, .. },
                RingKind::Table { add: a2, mul: m2, .. },
            ) => a1 == a2 && m1 == m2,
            (RingKind::Fraction(a), RingKind::Fraction(b)) => {
                Ring::same(&a.base, &b.base) && a.denominators == b.denominators
            }
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::Modular(n) => write!(f, "Z/{n}"),
            RingKind::Product { factors, .. } => {
                for (i, r) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if r.is_product() {
                        write!(f, "({r})")?;
                    } else {
                        write!(f, "{r}")?;
                    }
                }
                Ok(())
            }
            RingKind::Quotient { base, ideal, .. } => {
                if matches!(base.kind, RingKind::Modular(_) | RingKind::Table { .. }) {
                    write!(f, "{base}/{}", ideal.render())
                } else {
                    write!(f, "({base})/{}", ideal.render())
                }
            }
            RingKind::Table { name: Some(name), .. } => write!(f, "{name}"),
            RingKind::Table { name: None, .. } => write!(f, "Table[{}]", self.size),
            RingKind::Fraction(fr) => write!(f, "T^-1({})", fr.base),
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self}; {} elements)", self.size)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Arc<Ring> {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn modular_addition_wraps() {
        let r = z(6);
        assert_eq!(r.add(Elem(2), Elem(5)), Elem(1));
        assert_eq!(r.neg(Elem(2)), Elem(4));
        assert_eq!(r.sub(Elem(1), Elem(3)), Elem(4));
    }

    #[test]
    fn product_is_componentwise() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let a = r.decode(&Value::Tuple(vec![Value::Int(3), Value::Int(8)])).unwrap();
        let b = r.decode(&Value::Tuple(vec![Value::Int(2), Value::Int(2)])).unwrap();
        assert_eq!(r.render(r.mul(a, b)), "(2,7)");
        assert_eq!(r.size(), 36);
        assert_eq!(r.render(r.one()), "(1,1)");
    }

    #[test]
    fn quotient_uses_least_representative() {
        let base = z(12);
        let ideal = Ideal::closure(&base, &[Elem(6)]);
        let q = Ring::quotient(&ideal);
        assert_eq!(q.size(), 6);
        let seven = q.decode(&Value::Int(7)).unwrap();
        assert_eq!(q.render(seven), "1");
        // coset enumeration: 7 + (6) = {1, 7}, least is 1
        let coset: Vec<u64> = (0..12).filter(|x| (x + 12 - 7) % 6 == 0).collect();
        assert_eq!(coset, vec![1, 7]);
    }

    #[test]
    fn zero_ring_is_rejected_as_factor() {
        let err = Ring::product(vec![z(3), z(1)]).unwrap_err();
        assert_eq!(err, Error::ZeroFactor { index: 1 });
        assert!(z(1).is_zero_ring());
        assert_eq!(z(1).one(), Elem::ZERO);
    }

    #[test]
    fn table_axioms_are_checked() {
        // Z/2 with a broken product: 1*1 = 0 has no identity.
        let err = Ring::table(None, 2, vec![0, 1, 1, 0], vec![0, 0, 0, 0]).unwrap_err();
        assert!(matches!(err, Error::TableAxiom { axiom: "multiplicative identity", .. }));
        // non-commutative multiplication
        let err = Ring::table(None, 2, vec![0, 1, 1, 0], vec![0, 1, 0, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::TableAxiom { axiom: "commutativity of multiplication", witness } if witness == vec![0, 1]
        ));
        let ok = Ring::table(Some("F2"), 2, vec![0, 1, 1, 0], vec![0, 0, 0, 1]).unwrap();
        assert_eq!(ok.one(), Elem(1));
    }

    #[test]
    fn decode_reports_range_and_arity() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        assert!(matches!(r.decode(&Value::Int(3)), Err(Error::BadElement { .. })));
        assert!(matches!(
            r.decode(&Value::Tuple(vec![Value::Int(4), Value::Int(0)])),
            Err(Error::BadElement { .. })
        ));
        assert!(r.decode(&Value::Tuple(vec![Value::Int(1)])).is_err());
    }

    #[test]
    fn characteristic_and_inverse() {
        let r = Ring::product(vec![z(4), z(6)]).unwrap();
        assert_eq!(r.characteristic(), 12);
        assert_eq!(z(9).inverse(Elem(2)), Some(Elem(5)));
        assert_eq!(z(9).inverse(Elem(3)), None);
    }
}
