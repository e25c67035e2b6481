//! Random ring and homomorphism expressions.

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::dsl::{HomExpr, RingExpr};
use crate::error::Limits;
use crate::ideal::Ideal;
use crate::ring::{Elem, Fixture};

pub type Rng = ChaCha8Rng;

const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

/// Local factors used for filter quotients: prime powers and small fields.
pub const LOCAL: [RingExpr; 12] = [
    RingExpr::ZMod(2),
    RingExpr::ZMod(3),
    RingExpr::ZMod(4),
    RingExpr::ZMod(5),
    RingExpr::ZMod(7),
    RingExpr::ZMod(8),
    RingExpr::ZMod(9),
    RingExpr::ZMod(25),
    RingExpr::ZMod(27),
    RingExpr::Fixture(Fixture::F4),
    RingExpr::Fixture(Fixture::F8),
    RingExpr::Fixture(Fixture::F9),
];

pub fn fixture_size(f: Fixture) -> u64 {
    match f {
        Fixture::F4 | Fixture::F2e => 4,
        Fixture::F8 | Fixture::F2xy | Fixture::Z4x => 8,
        Fixture::F9 => 9,
        Fixture::F2x2y2 => 16,
        Fixture::F3xy => 27,
    }
}

/// Size of the ring an expression denotes, elaborating quotients.
pub fn size(expr: &RingExpr) -> u64 {
    match expr {
        RingExpr::ZMod(n) => *n,
        RingExpr::Fixture(f) => fixture_size(*f),
        RingExpr::Prod(items) => items.iter().map(size).fold(1u64, |a, b| a.saturating_mul(b)),
        RingExpr::Quot(..) => expr
            .elaborate(&Limits::with_max_size(u64::MAX))
            .map(|r| r.size())
            .unwrap_or(u64::MAX),
    }
}

/// `Z/n`, mostly with small `n`.
fn modular(rng: &mut Rng, cap: u64) -> RingExpr {
    let hi = if rng.gen_bool(0.75) { cap.clamp(2, 48) } else { cap.max(2) };
    RingExpr::ZMod(rng.gen_range(2..=hi))
}

fn fixture(rng: &mut Rng, cap: u64) -> Option<RingExpr> {
    let fits: Vec<Fixture> = Fixture::ALL
        .into_iter()
        .filter(|&f| fixture_size(f) <= cap)
        .collect();
    fits.choose(rng).map(|&f| RingExpr::Fixture(f))
}

/// A nonzero ring of size at most `cap` (at least 2).
pub fn factor(rng: &mut Rng, cap: u64) -> RingExpr {
    match rng.gen_range(0..10) {
        0..=5 => modular(rng, cap),
        6 | 7 => fixture(rng, cap).unwrap_or_else(|| modular(rng, cap)),
        _ => quotient(rng, cap),
    }
}

/// A product of `k` factors drawn by `pick`, of total size at most `cap`.
pub fn product_with(
    rng: &mut Rng,
    k: usize,
    cap: u64,
    mut pick: impl FnMut(&mut Rng, u64) -> RingExpr,
) -> RingExpr {
    let mut k = k.max(2);
    while k > 2 && 1u64 << k > cap {
        k -= 1;
    }
    let mut items = Vec::with_capacity(k);
    let mut budget = cap.max(4);
    for i in 0..k {
        let rest = (k - i - 1) as u32;
        let room = (budget >> rest).max(2);
        let item = pick(rng, room);
        budget = (budget / size(&item).max(1)).max(2);
        items.push(item);
    }
    RingExpr::Prod(items)
}

pub fn product(rng: &mut Rng, kmin: usize, kmax: usize, cap: u64) -> RingExpr {
    let k = rng.gen_range(kmin..=kmax);
    product_with(rng, k, cap, factor)
}

/// `Prod` of factors chosen from [`LOCAL`].
pub fn local_product(rng: &mut Rng, kmin: usize, kmax: usize, cap: u64) -> RingExpr {
    let k = rng.gen_range(kmin..=kmax);
    product_with(rng, k, cap, |rng, room| {
        let fits: Vec<&RingExpr> = LOCAL.iter().filter(|e| size(e) <= room).collect();
        fits.choose(rng).map(|e| (*e).clone()).unwrap_or(RingExpr::ZMod(2))
    })
}

/// `base/(g, ..)` with non-unit generators, so the quotient is nonzero.
pub fn quotient(rng: &mut Rng, cap: u64) -> RingExpr {
    let base = if cap >= 4 && rng.gen_bool(0.6) {
        let k = if cap >= 8 { rng.gen_range(2..=3) } else { 2 };
        product_with(rng, k, cap, |rng, room| {
            if rng.gen_bool(0.8) {
                modular(rng, room)
            } else {
                fixture(rng, room).unwrap_or_else(|| modular(rng, room))
            }
        })
    } else {
        modular(rng, cap)
    };
    let ring = base
        .elaborate(&Limits::with_max_size(u64::MAX))
        .expect("generated base elaborates");
    let non_units: Vec<Elem> = ring.elements().filter(|&a| !ring.is_unit(a)).collect();
    let mut gens = vec![*non_units.choose(rng).expect("zero is a non-unit")];
    if rng.gen_bool(0.5) {
        let g = *non_units.choose(rng).expect("zero is a non-unit");
        if Ideal::closure(&ring, &[gens[0], g]).is_proper() {
            gens.push(g);
        }
    }
    RingExpr::Quot(Box::new(base), gens.into_iter().map(|g| ring.encode(g)).collect())
}

/// Any ring: modular, a product of up to four factors, a quotient or a
/// fixture.
pub fn ring(rng: &mut Rng, cap: u64) -> RingExpr {
    match rng.gen_range(0..10) {
        0..=2 => modular(rng, cap),
        3..=6 if cap >= 4 => product(rng, 2, 4, cap),
        7 | 8 => quotient(rng, cap),
        _ => fixture(rng, cap).unwrap_or_else(|| modular(rng, cap)),
    }
}

fn characteristic(expr: &RingExpr) -> u64 {
    expr.elaborate(&Limits::with_max_size(u64::MAX))
        .expect("generated ring elaborates")
        .characteristic()
}

fn prime_char_ring(rng: &mut Rng, cap: u64) -> RingExpr {
    let mut pool: Vec<RingExpr> = PRIMES
        .iter()
        .filter(|&&p| p <= cap)
        .map(|&p| RingExpr::ZMod(p))
        .collect();
    for f in [Fixture::F4, Fixture::F8, Fixture::F9, Fixture::F2e, Fixture::F2xy, Fixture::F2x2y2] {
        if fixture_size(f) <= cap {
            pool.push(RingExpr::Fixture(f));
        }
    }
    pool.choose(rng).cloned().unwrap_or(RingExpr::ZMod(2))
}

/// A homomorphism whose source and target have at most `cap` elements.
pub fn hom(rng: &mut Rng, cap: u64) -> HomExpr {
    let cap = cap.max(2);
    match rng.gen_range(0..10) {
        0 | 1 => HomExpr::Id(factor(rng, cap)),
        2 | 3 => HomExpr::Quo(quotient(rng, cap)),
        4 => HomExpr::Frob(prime_char_ring(rng, cap)),
        5 if cap >= 4 => {
            let root = (cap as f64).sqrt() as u64;
            HomExpr::Graph(Box::new(hom(rng, root.max(2))))
        }
        _ => {
            let target = factor(rng, cap);
            let c = characteristic(&target);
            let mults: Vec<u64> = (1..=4).filter(|m| c * m <= cap).collect();
            let m = mults.choose(rng).copied().unwrap_or(1);
            HomExpr::Canon(RingExpr::ZMod(c * m), target)
        }
    }
}

/// A componentwise family `prod(h_1; ..; h_k)` with `k` in 2..=4.
pub fn hom_family(rng: &mut Rng, cap: u64) -> HomExpr {
    let k = rng.gen_range(2..=4usize);
    let per = ((cap as f64).powf(1.0 / k as f64) as u64).max(2);
    HomExpr::Prod((0..k).map(|_| hom(rng, per)).collect())
}

/// An injective homomorphism, possibly a componentwise product.
pub fn injective_hom(rng: &mut Rng, cap: u64) -> HomExpr {
    if cap >= 16 && rng.gen_bool(0.4) {
        let k = rng.gen_range(2..=3usize);
        let per = ((cap as f64).powf(1.0 / k as f64) as u64).max(2);
        return HomExpr::Prod((0..k).map(|_| injective_atom(rng, per)).collect());
    }
    injective_atom(rng, cap)
}

fn injective_atom(rng: &mut Rng, cap: u64) -> HomExpr {
    let cap = cap.max(2);
    match rng.gen_range(0..8) {
        0 | 1 => HomExpr::Id(factor(rng, cap)),
        2 | 3 if cap >= 4 => {
            let root = (cap as f64).sqrt() as u64;
            HomExpr::Graph(Box::new(hom(rng, root.max(2))))
        }
        4 | 5 => {
            let target = factor(rng, cap);
            HomExpr::Canon(RingExpr::ZMod(characteristic(&target)), target)
        }
        _ => {
            let fields: Vec<RingExpr> = [
                RingExpr::ZMod(2),
                RingExpr::ZMod(3),
                RingExpr::ZMod(5),
                RingExpr::Fixture(Fixture::F4),
                RingExpr::Fixture(Fixture::F8),
                RingExpr::Fixture(Fixture::F9),
            ]
            .into_iter()
            .filter(|e| size(e) <= cap)
            .collect();
            HomExpr::Frob(fields.choose(rng).cloned().unwrap_or(RingExpr::ZMod(2)))
        }
    }
}

/// Random AST for parser round-trips; it need not denote a valid ring.
pub fn syntax(rng: &mut Rng, depth: u32) -> RingExpr {
    let leaf = depth == 0 || rng.gen_bool(0.4);
    if leaf {
        return if rng.gen_bool(0.7) {
            RingExpr::ZMod(rng.gen_range(0..1000))
        } else {
            RingExpr::Fixture(*Fixture::ALL.choose(rng).expect("fixtures exist"))
        };
    }
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(2..=4);
        RingExpr::Prod((0..k).map(|_| syntax(rng, depth - 1)).collect())
    } else {
        let count = rng.gen_range(1..=3);
        let gens = (0..count).map(|_| value(rng, 2)).collect();
        RingExpr::Quot(Box::new(syntax(rng, depth - 1)), gens)
    }
}

fn value(rng: &mut Rng, depth: u32) -> crate::ring::Value {
    use crate::ring::Value;
    if depth == 0 || rng.gen_bool(0.6) {
        Value::Int(rng.gen_range(0..100))
    } else {
        let k = rng.gen_range(1..=3);
        Value::Tuple((0..k).map(|_| value(rng, depth - 1)).collect())
    }
}

pub fn hom_syntax(rng: &mut Rng, depth: u32) -> HomExpr {
    let leaf = depth == 0 || rng.gen_bool(0.5);
    if leaf {
        return match rng.gen_range(0..4) {
            0 => HomExpr::Id(syntax(rng, 2)),
            1 => HomExpr::Frob(syntax(rng, 2)),
            2 => HomExpr::Quo(syntax(rng, 2)),
            _ => HomExpr::Canon(syntax(rng, 1), syntax(rng, 2)),
        };
    }
    if rng.gen_bool(0.5) {
        HomExpr::Graph(Box::new(hom_syntax(rng, depth - 1)))
    } else {
        let k = rng.gen_range(1..=3);
        HomExpr::Prod((0..k).map(|_| hom_syntax(rng, depth - 1)).collect())
    }
}
