//! Built-in table rings.
//!
//! Elements of a fixture are coefficient vectors over a prime field (or
//! `Z/4`), numbered by reading the coefficients as digits, lowest basis
//! monomial least significant. For `F2xy` with basis `1, x, y` the element
//! `a + bx + cy` has index `a + 2b + 4c`.

use std::sync::Arc;

use super::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// `F_2[t]/(t^2 + t + 1)`
    F4,
    /// `F_2[t]/(t^3 + t + 1)`
    F8,
    /// `F_3[t]/(t^2 + 1)`
    F9,
    /// `F_2[t]/(t^2)`
    F2e,
    /// `F_2[x,y]/(x,y)^2`
    F2xy,
    /// `F_3[x,y]/(x,y)^2`
    F3xy,
    /// `F_2[x,y]/(x^2,y^2)`
    F2x2y2,
    /// `Z/4[x]/(x^2, 2x)`
    Z4x,
}

impl Fixture {
    pub const ALL: [Fixture; 8] = [
        Fixture::F4,
        Fixture::F8,
        Fixture::F9,
        Fixture::F2e,
        Fixture::F2xy,
        Fixture::F3xy,
        Fixture::F2x2y2,
        Fixture::Z4x,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::F4 => "F4",
            Fixture::F8 => "F8",
            Fixture::F9 => "F9",
            Fixture::F2e => "F2e",
            Fixture::F2xy => "F2xy",
            Fixture::F3xy => "F3xy",
            Fixture::F2x2y2 => "F2x2y2",
            Fixture::Z4x => "Z4x",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn description(self) -> &'static str {
        match self {
            Fixture::F4 => "F_2[t]/(t^2+t+1), field with 4 elements",
            Fixture::F8 => "F_2[t]/(t^3+t+1), field with 8 elements",
            Fixture::F9 => "F_3[t]/(t^2+1), field with 9 elements",
            Fixture::F2e => "F_2[t]/(t^2), dual numbers",
            Fixture::F2xy => "F_2[x,y]/(x,y)^2, non-principal maximal ideal",
            Fixture::F3xy => "F_3[x,y]/(x,y)^2, non-principal maximal ideal",
            Fixture::F2x2y2 => "F_2[x,y]/(x^2,y^2)",
            Fixture::Z4x => "Z/4[x]/(x^2,2x)",
        }
    }

    pub fn ring(self) -> Arc<Ring> {
        match self {
            Fixture::F4 => univariate(self.name(), 2, &[1, 1]),
            Fixture::F8 => univariate(self.name(), 2, &[1, 1, 0]),
            Fixture::F9 => univariate(self.name(), 3, &[2, 0]),
            Fixture::F2e => univariate(self.name(), 2, &[0, 0]),
            Fixture::F2xy => square_zero(self.name(), 2),
            Fixture::F3xy => square_zero(self.name(), 3),
            Fixture::F2x2y2 => {
                // basis 1, x, y, xy; x^2 = y^2 = 0
                let mono = |i: usize, j: usize| -> Option<usize> {
                    if i & j != 0 {
                        None
                    } else {
                        Some(i | j)
                    }
                };
                algebra(self.name(), &[2, 2, 2, 2], mono)
            }
            Fixture::Z4x => {
                // digits: constant in Z/4, x-coefficient in Z/2
                let size = 8;
                let dec = |v: usize| (v % 4, v / 4);
                let enc = |a: usize, b: usize| (a % 4) + 4 * (b % 2);
                build(self.name(), size, |u, v| {
                    let ((a, b), (c, d)) = (dec(u), dec(v));
                    (enc(a + c, b + d), enc(a * c, a * d + b * c))
                })
            }
        }
    }
}

/// `F_p[t]/(t^n - low)` where `low` lists the coefficients of `t^n`
/// rewritten in lower degrees, so `t^n = sum low[i] t^i`.
fn univariate(name: &str, p: usize, low: &[usize]) -> Arc<Ring> {
    let n = low.len();
    let size = p.pow(n as u32);
    let dec = |mut v: usize| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        c
    };
    let enc = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d % p);
    build(name, size, |u, v| {
        let (a, b) = (dec(u), dec(v));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let mut prod = vec![0usize; 2 * n];
        for i in 0..n {
            for j in 0..n {
                prod[i + j] += a[i] * b[j];
            }
        }
        for d in (n..2 * n).rev() {
            let c = prod[d] % p;
            prod[d] = 0;
            for (i, &l) in low.iter().enumerate() {
                prod[d - n + i] += c * l;
            }
        }
        (enc(&sum), enc(&prod[..n]))
    })
}

/// `F_p[x,y]/(x,y)^2`, basis `1, x, y`.
fn square_zero(name: &str, p: usize) -> Arc<Ring> {
    let mono = |i: usize, j: usize| -> Option<usize> {
        match (i, j) {
            (0, k) | (k, 0) => Some(k),
            _ => None,
        }
    };
    algebra(name, &[p, p, p], mono)
}

/// Algebra over `Z/p` with monomial basis `0..moduli.len()` (basis element 0
/// is 1) and monomial product `mono`.
fn algebra(name: &str, moduli: &[usize], mono: impl Fn(usize, usize) -> Option<usize>) -> Arc<Ring> {
    let p = moduli[0];
    let n = moduli.len();
    let size = p.pow(n as u32);
    let dec = |mut v: usize| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        c
    };
    let enc = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d % p);
    build(name, size, |u, v| {
        let (a, b) = (dec(u), dec(v));
        let sum: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let mut prod = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = mono(i, j) {
                    prod[k] += a[i] * b[j];
                }
            }
        }
        (enc(&sum), enc(&prod))
    })
}

fn build(name: &str, size: usize, op: impl Fn(usize, usize) -> (usize, usize)) -> Arc<Ring> {
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for u in 0..size {
        for v in 0..size {
            let (s, m) = op(u, v);
            add[u * size + v] = s as u32;
            mul[u * size + v] = m as u32;
        }
    }
    Ring::table(Some(name), size, add, mul).expect("fixture tables satisfy the ring axioms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shape() {
        for f in Fixture::ALL {
            let r = f.ring();
            assert_eq!(Fixture::from_name(f.name()), Some(f));
            let props = r.properties();
            assert!(props.is_local, "{} should be local", f.name());
            let expect_field = matches!(f, Fixture::F4 | Fixture::F8 | Fixture::F9);
            assert_eq!(props.is_field, expect_field, "{}", f.name());
        }
        assert_eq!(Fixture::F2xy.ring().size(), 8);
        assert_eq!(Fixture::F3xy.ring().size(), 27);
        assert_eq!(Fixture::F2x2y2.ring().size(), 16);
        assert_eq!(Fixture::Z4x.ring().characteristic(), 4);
        assert_eq!(Fixture::F9.ring().characteristic(), 3);
    }
}
