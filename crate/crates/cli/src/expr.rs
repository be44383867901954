//! Representation expressions: integer combinations of named
//! representations of `SL(2,q)`.
//!
//! ```text
//! expr := ['-'] term (('+' | '-') term)*
//! term := [INT '*'] atom
//! atom := triv | reg | X<k> | S(atom) | ps(<int>) | cusp(<int>)
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use sl2swc_core::characters::{cuspidal, principal_series, symmetrize, CharacterError, CharacterTable, VirtualRep};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown irreducible X{index} (the table has {count})")]
    UnknownIrreducible { index: usize, count: usize },
    #[error(transparent)]
    Character(#[from] CharacterError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Triv,
    Reg,
    /// `X<k>`: the `k`-th irreducible (from 1) in canonical table order.
    Irr(usize),
    /// `S(a) = a + dual(a)`.
    Sym(Box<Atom>),
    Ps(i64),
    /// Cuspidal representation for the additive character `lambda_1`.
    Cusp(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub atom: Atom,
}

/// A nonempty sum of weighted atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepExpr {
    terms: Vec<Term>,
}

impl RepExpr {
    /// `None` for an empty term list.
    pub fn new(terms: Vec<Term>) -> Option<Self> {
        (!terms.is_empty()).then_some(RepExpr { terms })
    }

    pub fn atom(coeff: i64, atom: Atom) -> Self {
        RepExpr { terms: vec![Term { coeff, atom }] }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn parse(s: &str) -> Result<Self, ExprError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("expected '+' or '-'"));
        }
        Ok(e)
    }

    pub fn eval(&self, table: &Arc<CharacterTable>) -> Result<VirtualRep, ExprError> {
        let mut out = VirtualRep::zero(table);
        for t in &self.terms {
            out = out.add(&t.atom.eval(table)?.scale(t.coeff));
        }
        Ok(out)
    }
}

impl Atom {
    pub fn eval(&self, table: &Arc<CharacterTable>) -> Result<VirtualRep, ExprError> {
        Ok(match self {
            Atom::Triv => VirtualRep::trivial(table),
            Atom::Reg => VirtualRep::regular(table),
            Atom::Irr(k) => {
                if *k == 0 || *k > table.len() {
                    return Err(ExprError::UnknownIrreducible { index: *k, count: table.len() });
                }
                VirtualRep::irreducible(table, k - 1)?
            }
            Atom::Sym(a) => symmetrize(&a.eval(table)?),
            Atom::Ps(k) => principal_series(table, *k)?,
            Atom::Cusp(k) => cuspidal(table, *k, 1)?,
        })
    }
}

impl FromStr for RepExpr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RepExpr::parse(s)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Triv => f.write_str("triv"),
            Atom::Reg => f.write_str("reg"),
            Atom::Irr(k) => write!(f, "X{k}"),
            Atom::Sym(a) => write!(f, "S({a})"),
            Atom::Ps(k) => write!(f, "ps({k})"),
            Atom::Cusp(k) => write!(f, "cusp({k})"),
        }
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.coeff < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = t.coeff.unsigned_abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "{}", t.atom)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ExprError {
        ExprError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<RepExpr, ExprError> {
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        let mut terms = vec![self.term(negative)?];
        loop {
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => break,
            }
            self.pos += 1;
            terms.push(self.term(negative)?);
        }
        Ok(RepExpr { terms })
    }

    fn term(&mut self, negative: bool) -> Result<Term, ExprError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number(negative)?;
            self.expect(b'*')?;
            n
        } else if negative {
            -1
        } else {
            1
        };
        Ok(Term { coeff, atom: self.atom()? })
    }

    fn digits(&mut self) -> Result<u128, ExprError> {
        let start = self.pos;
        let mut n: u128 = 0;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add((c - b'0') as u128))
                .ok_or_else(|| ExprError::Syntax { pos: start, msg: "integer too large".into() })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(n)
    }

    fn number(&mut self, negative: bool) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let n = self.digits()? as i128;
        i64::try_from(if negative { -n } else { n })
            .map_err(|_| ExprError::Syntax { pos: start, msg: "integer too large".into() })
    }

    fn signed(&mut self) -> Result<i64, ExprError> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        self.number(negative)
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                self.pos += 1;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn atom(&mut self) -> Result<Atom, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident().to_string();
        let at = |msg: String| ExprError::Syntax { pos: start, msg };
        match name.as_str() {
            "" => Err(at("expected a representation".into())),
            "triv" => Ok(Atom::Triv),
            "reg" => Ok(Atom::Reg),
            "S" => {
                self.expect(b'(')?;
                let a = self.atom()?;
                self.expect(b')')?;
                Ok(Atom::Sym(Box::new(a)))
            }
            "ps" | "cusp" => {
                self.expect(b'(')?;
                let k = self.signed()?;
                self.expect(b')')?;
                Ok(if name == "ps" { Atom::Ps(k) } else { Atom::Cusp(k) })
            }
            _ => match name.strip_prefix('X') {
                Some(k) if !k.is_empty() && k.bytes().all(|c| c.is_ascii_digit()) => match k.parse::<usize>() {
                    Ok(0) => Err(at("irreducibles are numbered from X1".into())),
                    Ok(k) => Ok(Atom::Irr(k)),
                    Err(_) => Err(at("integer too large".into())),
                },
                _ => Err(at(format!("unknown representation '{name}'"))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let e = RepExpr::parse(" 2 * S( X4 ) -X1+ reg - 3*cusp(-2)").unwrap();
        assert_eq!(e.to_string(), "2*S(X4) - X1 + reg - 3*cusp(-2)");
        assert_eq!(RepExpr::parse("-ps(1)").unwrap().terms()[0].coeff, -1);
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            RepExpr::parse("X1 + foo").unwrap_err(),
            ExprError::Syntax { pos: 5, msg: "unknown representation 'foo'".into() }
        );
        assert!(matches!(RepExpr::parse("X0"), Err(ExprError::Syntax { pos: 0, .. })));
        assert!(matches!(RepExpr::parse("2 X1"), Err(ExprError::Syntax { pos: 2, .. })));
        assert!(matches!(RepExpr::parse("S(X1"), Err(ExprError::Syntax { pos: 4, .. })));
        assert!(matches!(RepExpr::parse(""), Err(ExprError::Syntax { pos: 0, .. })));
        assert!(matches!(RepExpr::parse("X1 X2"), Err(ExprError::Syntax { pos: 3, .. })));
        assert!(matches!(RepExpr::parse("99999999999999999999*X1"), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn extreme_coefficients_round_trip() {
        let e = RepExpr::atom(i64::MIN, Atom::Triv);
        assert_eq!(RepExpr::parse(&e.to_string()).unwrap(), e);
        let e = RepExpr::atom(0, Atom::Reg);
        assert_eq!(e.to_string(), "0*reg");
        assert_eq!(RepExpr::parse(&e.to_string()).unwrap(), e);
    }
}
