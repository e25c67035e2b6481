//! The ring-expression language.
//!
//! ```text
//! expr  := term { "x" term }
//! term  := atom [ "/" "(" gens ")" ]
//! atom  := "Z" "/" nat | "(" expr ")" | fixtureName
//! gens  := elem { "," elem }
//! elem  := nat | "(" elem { "," elem } ")"
//! ```
//!
//! Quotient binds tighter than product, so `Z/4 x Z/12/(6)` is
//! `Z/4 x (Z/12/(6))`. Homomorphisms used by replayable counterexamples have
//! their own small syntax:
//!
//! ```text
//! hom := "id" "(" expr ")" | "frob" "(" expr ")" | "quo" "(" expr ")"
//!      | "canon" "(" expr "->" expr ")" | "graph" "(" hom ")"
//!      | "prod" "(" hom { ";" hom } ")"
//! ```

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Limits};
use crate::ideal::Ideal;
use crate::ring::{Elem, Fixture, Ring, RingHom, Value};

mod lexer;
mod parser;

pub use parser::{parse, parse_elems, parse_hom};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    ZMod(u64),
    Prod(Vec<RingExpr>),
    Quot(Box<RingExpr>, Vec<Value>),
    Fixture(Fixture),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HomExpr {
    Id(RingExpr),
    /// `Z/n -> B`.
    Canon(RingExpr, RingExpr),
    /// `A -> A/I` for a quotient expression `A/I`.
    Quo(RingExpr),
    Frob(RingExpr),
    Graph(Box<HomExpr>),
    Prod(Vec<HomExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("at {path}: {error}")]
    Semantic { path: String, error: Error },
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::ZMod(n) => write!(f, "Z/{n}"),
            RingExpr::Fixture(x) => write!(f, "{}", x.name()),
            RingExpr::Prod(items) => {
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    match e {
                        RingExpr::Prod(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            RingExpr::Quot(base, gens) => {
                match **base {
                    RingExpr::ZMod(_) | RingExpr::Fixture(_) => write!(f, "{base}")?,
                    _ => write!(f, "({base})")?,
                }
                let parts: Vec<String> = gens.iter().map(Value::to_string).collect();
                write!(f, "/({})", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for HomExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomExpr::Id(e) => write!(f, "id({e})"),
            HomExpr::Canon(a, b) => write!(f, "canon({a} -> {b})"),
            HomExpr::Quo(e) => write!(f, "quo({e})"),
            HomExpr::Frob(e) => write!(f, "frob({e})"),
            HomExpr::Graph(h) => write!(f, "graph({h})"),
            HomExpr::Prod(hs) => {
                let parts: Vec<String> = hs.iter().map(HomExpr::to_string).collect();
                write!(f, "prod({})", parts.join("; "))
            }
        }
    }
}

fn semantic(path: &str, error: Error) -> DslError {
    DslError::Semantic {
        path: path.to_string(),
        error,
    }
}

impl RingExpr {
    /// Builds the ring, checking every node against the size guard.
    /// Semantic errors carry a path such as `$.factors[1].gens[0]`.
    pub fn elaborate(&self, limits: &Limits) -> Result<Arc<Ring>, DslError> {
        self.build("$", limits)
    }

    fn build(&self, path: &str, limits: &Limits) -> Result<Arc<Ring>, DslError> {
        let ring = match self {
            RingExpr::ZMod(n) => {
                limits.check(*n).map_err(|e| semantic(path, e))?;
                Ring::modular(*n).map_err(|e| semantic(path, e))?
            }
            RingExpr::Fixture(f) => f.ring(),
            RingExpr::Prod(items) => {
                let factors = items
                    .iter()
                    .enumerate()
                    .map(|(i, e)| e.build(&format!("{path}.factors[{i}]"), limits))
                    .collect::<Result<Vec<_>, _>>()?;
                Ring::product(factors).map_err(|e| match e {
                    Error::ZeroFactor { index } => semantic(&format!("{path}.factors[{index}]"), e),
                    e => semantic(path, e),
                })?
            }
            RingExpr::Quot(base, gens) => {
                let ideal = quotient_ideal(base, gens, path, limits)?;
                ideal.quotient_ring()
            }
        };
        limits.check(ring.size()).map_err(|e| semantic(path, e))?;
        Ok(ring)
    }

    /// Number of nodes, used to prefer smaller counterexamples.
    pub fn weight(&self) -> usize {
        match self {
            RingExpr::ZMod(_) | RingExpr::Fixture(_) => 1,
            RingExpr::Prod(items) => 1 + items.iter().map(RingExpr::weight).sum::<usize>(),
            RingExpr::Quot(base, gens) => 1 + base.weight() + gens.len(),
        }
    }
}

fn quotient_ideal(
    base: &RingExpr,
    gens: &[Value],
    path: &str,
    limits: &Limits,
) -> Result<Ideal, DslError> {
    let ring = base.build(&format!("{path}.base"), limits)?;
    let elems = gens
        .iter()
        .enumerate()
        .map(|(i, v)| ring.decode(v).map_err(|e| semantic(&format!("{path}.gens[{i}]"), e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::generate(&ring, &elems, limits).map_err(|e| semantic(path, e))
}

impl HomExpr {
    pub fn elaborate(&self, limits: &Limits) -> Result<RingHom, DslError> {
        self.build("$", limits)
    }

    fn build(&self, path: &str, limits: &Limits) -> Result<RingHom, DslError> {
        let err = |e| semantic(path, e);
        match self {
            HomExpr::Id(e) => Ok(RingHom::identity(&e.build(path, limits)?)),
            HomExpr::Canon(a, b) => {
                let (a, b) = (a.build(path, limits)?, b.build(path, limits)?);
                RingHom::structure_map(&a, &b).map_err(err)
            }
            HomExpr::Quo(e) => match e {
                RingExpr::Quot(base, gens) => {
                    Ok(RingHom::quotient_map(&quotient_ideal(base, gens, path, limits)?))
                }
                _ => Err(err(Error::NotAHom(format!("quo needs a quotient, got {e}")))),
            },
            HomExpr::Frob(e) => RingHom::frobenius(&e.build(path, limits)?).map_err(err),
            HomExpr::Graph(h) => RingHom::graph(&h.build(&format!("{path}.inner"), limits)?).map_err(err),
            HomExpr::Prod(hs) => {
                let family = hs
                    .iter()
                    .enumerate()
                    .map(|(i, h)| h.build(&format!("{path}.maps[{i}]"), limits))
                    .collect::<Result<Vec<_>, _>>()?;
                let source = Ring::product(family.iter().map(|h| h.source().clone()).collect()).map_err(err)?;
                let target = Ring::product(family.iter().map(|h| h.target().clone()).collect()).map_err(err)?;
                RingHom::induced(&source, &target, &family).map_err(err)
            }
        }
    }

    /// The factor maps of a `prod(..)`, elaborated.
    pub fn family(&self, limits: &Limits) -> Result<Vec<RingHom>, DslError> {
        match self {
            HomExpr::Prod(hs) => hs
                .iter()
                .enumerate()
                .map(|(i, h)| h.build(&format!("$.maps[{i}]"), limits))
                .collect(),
            _ => Ok(vec![self.elaborate(limits)?]),
        }
    }
}

/// Parses and builds a ring.
pub fn parse_ring(text: &str, limits: &Limits) -> Result<Arc<Ring>, DslError> {
    parse(text)?.elaborate(limits)
}

/// Parses a comma-separated literal list and decodes it in `ring`.
pub fn parse_ring_elems(ring: &Ring, text: &str) -> Result<Vec<Elem>, DslError> {
    parse_elems(text)?
        .iter()
        .enumerate()
        .map(|(i, v)| ring.decode(v).map_err(|e| semantic(&format!("elems[{i}]"), e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse("Z/12").unwrap(), RingExpr::ZMod(12));
        assert_eq!(
            parse("Z/4 x Z/9 x Z/25").unwrap(),
            RingExpr::Prod(vec![RingExpr::ZMod(4), RingExpr::ZMod(9), RingExpr::ZMod(25)])
        );
        let q = parse("(Z/12)/(6)").unwrap();
        assert_eq!(q, RingExpr::Quot(Box::new(RingExpr::ZMod(12)), vec![Value::Int(6)]));
        assert_eq!(parse("Z/12/(6)").unwrap(), q);
    }

    #[test]
    fn quotient_of_z12_by_6_is_z6() {
        let l = Limits::default();
        let q = parse_ring("(Z/12)/(6)", &l).unwrap();
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(q.size(), 6);
        for a in q.elements() {
            for b in q.elements() {
                assert_eq!(q.add(a, b), z6.add(a, b));
                assert_eq!(q.mul(a, b), z6.mul(a, b));
            }
        }
    }

    #[test]
    fn precedence_and_nesting() {
        let e = parse("Z/4 x Z/12/(6)").unwrap();
        assert_eq!(
            e,
            RingExpr::Prod(vec![
                RingExpr::ZMod(4),
                RingExpr::Quot(Box::new(RingExpr::ZMod(12)), vec![Value::Int(6)])
            ])
        );
        let nested = parse("(Z/2 x Z/3) x F4").unwrap();
        assert_eq!(nested.to_string(), "(Z/2 x Z/3) x F4");
        let quot = parse("(Z/4 x Z/9)/((2,0), (0,3))").unwrap();
        assert_eq!(quot.to_string(), "(Z/4 x Z/9)/((2,0), (0,3))");
        assert_eq!(parse(&quot.to_string()).unwrap(), quot);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse("Z/4 x\n  Z/").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 2, column: 5, .. }), "{err}");
        let err = parse("Q/4").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 1, column: 1, .. }));
        assert!(parse("Z/4 Z/9").is_err());
        assert!(parse("(Z/4").is_err());
    }

    #[test]
    fn semantic_errors_have_paths() {
        let l = Limits::default();
        let err = parse_ring("Z/4 x Z/1", &l).unwrap_err();
        assert_eq!(
            err,
            DslError::Semantic {
                path: "$.factors[1]".into(),
                error: Error::ZeroFactor { index: 1 }
            }
        );
        let err = parse_ring("Z/4 x Z/9/(12)", &l).unwrap_err();
        assert!(matches!(err, DslError::Semantic { ref path, .. } if path == "$.factors[1].gens[0]"));
        let err = parse_ring("(Z/4 x Z/9)/((1,2,3))", &l).unwrap_err();
        assert!(matches!(err, DslError::Semantic { ref path, .. } if path == "$.gens[0]"));
        assert!(matches!(
            parse_ring("Z/0", &l),
            Err(DslError::Semantic { error: Error::ZeroModulus, .. })
        ));
        assert!(matches!(
            parse_ring("Z/5000", &l),
            Err(DslError::Semantic { error: Error::TooLarge { .. }, .. })
        ));
        // a quotient collapsing to the zero ring is fine on its own
        assert!(parse_ring("Z/6/(1)", &l).unwrap().is_zero_ring());
        assert!(parse_ring("Z/3 x Z/6/(1)", &l).is_err());
    }

    #[test]
    fn homs() {
        let l = Limits::default();
        let h = parse_hom("prod(canon(Z/4 -> Z/2); id(Z/9))").unwrap();
        assert_eq!(parse_hom(&h.to_string()).unwrap(), h);
        let phi = h.elaborate(&l).unwrap();
        phi.verify().unwrap();
        assert_eq!(phi.source().size(), 36);
        assert_eq!(phi.target().size(), 18);
        let g = parse_hom("graph(quo(Z/12/(4)))").unwrap().elaborate(&l).unwrap();
        assert!(g.is_injective());
        assert!(parse_hom("canon(Z/4 -> Z/3)").unwrap().elaborate(&l).is_err());
        assert!(parse_hom("twist(Z/4)").is_err());
        let f = parse_hom("frob(F8)").unwrap().elaborate(&l).unwrap();
        assert!(f.is_bijective());
    }

    #[test]
    fn element_lists() {
        let r = parse_ring("Z/4 x Z/9", &Limits::default()).unwrap();
        let elems = parse_ring_elems(&r, "(2,1), (0,3)").unwrap();
        assert_eq!(r.render(elems[0]), "(2,1)");
        assert!(parse_ring_elems(&r, "(2,10)").is_err());
    }
}
