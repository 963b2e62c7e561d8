//! Infix expression reader for rational functions.
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals, variable names from
//! the global order, and `i` for √−1. Exponents are integer literals,
//! optionally negative. There is no implicit multiplication.

use crate::error::ParseError;
use crate::field::Field;
use crate::ratfn::RationalFunction;
use crate::rational::Rational;
use crate::var::Var;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch.is_ascii_digit() {
            let mut n = String::new();
            while let Some(&(_, c)) = it.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                n.push(c);
                it.next();
            }
            out.push((pos, Tok::Num(n)));
        } else if ch.is_alphabetic() || ch == '_' {
            let mut n = String::new();
            while let Some(&(_, c)) = it.peek() {
                if !(c.is_alphanumeric() || c == '_') {
                    break;
                }
                n.push(c);
                it.next();
            }
            out.push((pos, Tok::Ident(n)));
        } else if "+-*/^()".contains(ch) {
            out.push((pos, Tok::Op(ch)));
            it.next();
        } else {
            return Err(ParseError { pos, msg: format!("unexpected character {ch:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
}

type Res<C> = Result<RationalFunction<C>, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Field>(&mut self) -> Res<C> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Field>(&mut self) -> Res<C> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul_ref(&self.unary()?);
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                acc = acc
                    .div_ref(&d)
                    .map_err(|_| ParseError { pos, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<C: Field>(&mut self) -> Res<C> {
        if self.eat('-') {
            return Ok(self.unary::<C>()?.neg_ref());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power<C: Field>(&mut self) -> Res<C> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let paren = self.eat('(');
        let neg = neg || (paren && self.eat('-'));
        let e: i32 = match self.peek() {
            Some(Tok::Num(n)) => match n.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            },
            _ => return self.err("expected integer exponent"),
        };
        self.at += 1;
        if paren && !self.eat(')') {
            return self.err("expected ')'");
        }
        let pos = self.pos();
        base.pow(if neg { -e } else { e })
            .map_err(|_| ParseError { pos, msg: "zero to a negative power".into() })
    }

    fn atom<C: Field>(&mut self) -> Res<C> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                match n.parse::<Rational>() {
                    Ok(r) => Ok(RationalFunction::constant(C::from_rational(r))),
                    Err(_) => self.err("bad number"),
                }
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "i" {
                    return match C::imaginary_unit() {
                        Some(i) => Ok(RationalFunction::constant(i)),
                        None => self.err("coefficient field has no imaginary unit"),
                    };
                }
                match Var::from_name(&name) {
                    Some(v) => Ok(RationalFunction::var(v)),
                    None => {
                        self.at -= 1;
                        self.err(format!("unknown variable {name:?}"))
                    }
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

impl<C: Field> RationalFunction<C> {
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let toks = lex(s)?;
        let mut p = Parser { toks: &toks, at: 0, end: s.len() };
        let e = p.expr()?;
        if p.at != toks.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

impl<C: Field> std::str::FromStr for RationalFunction<C> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use crate::RatFn;

    #[test]
    fn reads_basic_expressions() {
        let f = RatFn::parse("(2*x^2 + 2*x)/(2*x)").unwrap();
        assert_eq!(f.to_string(), "x + 1");
        let g = RatFn::parse("-x^2").unwrap();
        assert_eq!(g.to_string(), "-x^2");
        let h = RatFn::parse("t^-2*i^2").unwrap();
        assert_eq!(h.to_string(), "-1/t^2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(RatFn::parse("x +").is_err());
        assert!(RatFn::parse("foo").is_err());
        assert!(RatFn::parse("x/0").is_err());
        assert!(RatFn::parse("x)").is_err());
    }
}
