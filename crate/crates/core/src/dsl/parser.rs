use super::lexer::{lex, Tok, Token};
use super::{DslError, HomExpr, RingExpr};
use crate::ring::{Fixture, Value};

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, DslError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, message: String) -> DslError {
        let t = &self.toks[self.pos];
        DslError::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn finish(&self) -> Result<(), DslError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn expr(&mut self) -> Result<RingExpr, DslError> {
        let mut terms = vec![self.term()?];
        while *self.peek() == Tok::Times {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            RingExpr::Prod(terms)
        })
    }

    fn term(&mut self) -> Result<RingExpr, DslError> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Slash {
            return Ok(atom);
        }
        self.bump();
        self.expect(Tok::LParen)?;
        let gens = self.elems()?;
        self.expect(Tok::RParen)?;
        Ok(RingExpr::Quot(Box::new(atom), gens))
    }

    fn atom(&mut self) -> Result<RingExpr, DslError> {
        match self.peek().clone() {
            Tok::Name(name) if name == "Z" => {
                self.bump();
                self.expect(Tok::Slash)?;
                match *self.peek() {
                    Tok::Nat(n) => {
                        self.bump();
                        Ok(RingExpr::ZMod(n))
                    }
                    _ => Err(self.unexpected("a modulus")),
                }
            }
            Tok::Name(name) => match Fixture::from_name(&name) {
                Some(f) => {
                    self.bump();
                    Ok(RingExpr::Fixture(f))
                }
                None => Err(self.error(format!("unknown ring `{name}`"))),
            },
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("`Z/n`, a fixture name or `(`")),
        }
    }

    fn elems(&mut self) -> Result<Vec<Value>, DslError> {
        let mut out = vec![self.elem()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.elem()?);
        }
        Ok(out)
    }

    fn elem(&mut self) -> Result<Value, DslError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Value::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let items = self.elems()?;
                self.expect(Tok::RParen)?;
                Ok(Value::Tuple(items))
            }
            _ => Err(self.unexpected("an element literal")),
        }
    }

    fn hom(&mut self) -> Result<HomExpr, DslError> {
        let word = match self.peek().clone() {
            Tok::Word(w) => w,
            _ => return Err(self.unexpected("a homomorphism (id, canon, quo, frob, graph, prod)")),
        };
        let at = self.pos;
        self.bump();
        self.expect(Tok::LParen)?;
        let h = match word.as_str() {
            "id" => HomExpr::Id(self.expr()?),
            "frob" => HomExpr::Frob(self.expr()?),
            "quo" => HomExpr::Quo(self.expr()?),
            "canon" => {
                let a = self.expr()?;
                self.expect(Tok::Arrow)?;
                HomExpr::Canon(a, self.expr()?)
            }
            "graph" => HomExpr::Graph(Box::new(self.hom()?)),
            "prod" => {
                let mut parts = vec![self.hom()?];
                while *self.peek() == Tok::Semi {
                    self.bump();
                    parts.push(self.hom()?);
                }
                HomExpr::Prod(parts)
            }
            _ => {
                self.pos = at;
                return Err(self.error(format!("unknown homomorphism `{word}`")));
            }
        };
        self.expect(Tok::RParen)?;
        Ok(h)
    }
}

pub fn parse(text: &str) -> Result<RingExpr, DslError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// `elem {"," elem}`.
pub fn parse_elems(text: &str) -> Result<Vec<Value>, DslError> {
    let mut p = Parser::new(text)?;
    let v = p.elems()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_hom(text: &str) -> Result<HomExpr, DslError> {
    let mut p = Parser::new(text)?;
    let h = p.hom()?;
    p.finish()?;
    Ok(h)
}
