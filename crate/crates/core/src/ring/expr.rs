//! Ring expressions.
//!
//! ```text
//! ring := term ("x" term)*
//! term := atom ("/" "(" intlist ")")?
//! atom := "Z/" nat | "GF(" nat ")" | "(" ring ")"
//! ```
//!
//! Whitespace is ignored. Quotient generators are canonical element indices
//! of the base ring.

use std::fmt;

use super::{quotient_ring, BuildOptions, EmptyProduct, FiniteRing, Ideal};
use crate::error::{Error, Result};

/// How a ring was constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    ZMod(u64),
    GaloisField { order: u64, modulus: Vec<usize> },
    Product(Vec<RingExpr>),
    Quotient { base: Box<RingExpr>, generators: Vec<usize> },
    Subring { base: Box<RingExpr>, members: Vec<usize>, unit: usize },
    Fractions { base: Box<RingExpr>, element: usize },
}

impl RingExpr {
    fn needs_parens_as_base(&self) -> bool {
        matches!(self, RingExpr::Product(f) if f.len() > 1) || matches!(self, RingExpr::Quotient { .. })
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &RingExpr| if e.needs_parens_as_base() { format!("({e})") } else { e.to_string() };
        match self {
            RingExpr::ZMod(n) => write!(f, "Z/{n}"),
            RingExpr::GaloisField { order, .. } => write!(f, "GF({order})"),
            RingExpr::Product(factors) if factors.is_empty() => write!(f, "()"),
            RingExpr::Product(factors) => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|e| if matches!(e, RingExpr::Product(g) if g.len() > 1) { format!("({e})") } else { e.to_string() })
                    .collect();
                write!(f, "{}", parts.join(" x "))
            }
            RingExpr::Quotient { base, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
                write!(f, "{} / ({})", wrap(base), gens.join(","))
            }
            RingExpr::Subring { base, members, unit } => {
                write!(f, "sub({}; {} elements, unit {unit})", base, members.len())
            }
            RingExpr::Fractions { base, element } => write!(f, "{}[1/{element}]", wrap(base)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    ZMod(u64),
    Galois(u64),
    Product(Vec<Ast>),
    Quotient(Box<Ast>, Vec<usize>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let t = token.as_bytes();
        if self.src[self.pos..].starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number too large"))
    }

    fn ring(&mut self) -> Result<Ast> {
        let mut terms = vec![self.term()?];
        while self.eat("x") {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Ast::Product(terms) })
    }

    fn term(&mut self) -> Result<Ast> {
        let atom = self.atom()?;
        if self.eat("/") {
            self.expect("(")?;
            let mut gens = Vec::new();
            if !self.eat(")") {
                loop {
                    gens.push(self.nat()? as usize);
                    if self.eat(")") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            return Ok(Ast::Quotient(Box::new(atom), gens));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Ast> {
        if self.eat("Z/") {
            return Ok(Ast::ZMod(self.nat()?));
        }
        if self.eat("GF(") {
            let q = self.nat()?;
            self.expect(")")?;
            return Ok(Ast::Galois(q));
        }
        if self.eat("(") {
            let inner = self.ring()?;
            self.expect(")")?;
            return Ok(inner);
        }
        self.err("expected `Z/`, `GF(` or `(`")
    }
}

fn parse(src: &str) -> Result<Ast> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let ast = p.ring()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(ast)
}

fn estimate_card(ast: &Ast) -> u128 {
    match ast {
        Ast::ZMod(n) | Ast::Galois(n) => *n as u128,
        Ast::Product(f) => f.iter().map(estimate_card).fold(1u128, |a, b| a.saturating_mul(b)),
        Ast::Quotient(base, _) => estimate_card(base),
    }
}

fn build(ast: &Ast, opts: &BuildOptions) -> Result<FiniteRing> {
    match ast {
        Ast::ZMod(n) => FiniteRing::zmod_with(*n, opts),
        Ast::Galois(q) => FiniteRing::galois_field_with(*q, opts),
        Ast::Product(factors) => {
            let card = estimate_card(ast);
            if card > opts.max_card as u128 {
                return Err(Error::SizeBound { card, bound: opts.max_card });
            }
            let built = factors.iter().map(|f| build(f, opts)).collect::<Result<Vec<_>>>()?;
            FiniteRing::product_with(&built, EmptyProduct::Reject, opts)
        }
        Ast::Quotient(base, gens) => {
            let base = build(base, opts)?;
            let ideal = Ideal::closure(&base, gens)?;
            Ok(quotient_ring(&ideal).0)
        }
    }
}

/// Parses an expression without building it, reporting syntax errors only.
pub fn parse_ring_expr(src: &str) -> Result<()> {
    parse(src).map(|_| ())
}

/// Builds and validates the ring described by `src` under the default bounds.
pub fn build_ring(src: &str) -> Result<FiniteRing> {
    build_ring_with(src, &BuildOptions::default())
}

pub fn build_ring_with(src: &str, opts: &BuildOptions) -> Result<FiniteRing> {
    let ast = parse(src)?;
    let ring = build(&ast, opts)?;
    ring.validate_axioms_up_to(opts.cubic_validation_card)?;
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::find_isomorphism;
    use proptest::prelude::*;

    #[test]
    fn build_examples() {
        assert_eq!(build_ring("Z/6").unwrap().card(), 6);
        assert_eq!(build_ring("Z/4 x GF(9)").unwrap().card(), 36);
        let q = build_ring("Z/12 / (4)").unwrap();
        assert_eq!(q.card(), 4);
        assert!(find_isomorphism(&q, &FiniteRing::zmod(4).unwrap()).unwrap().is_some());
    }

    #[test]
    fn whitespace_and_nesting() {
        let r = build_ring("  ( Z/4x Z/2 ) / (2) x GF(4)").unwrap();
        // index 2 is (1,0), which generates Z/4 x 0
        assert_eq!(r.card(), 8);
        assert_eq!(build_ring("((Z/3))").unwrap().card(), 3);
    }

    #[test]
    fn errors() {
        assert!(matches!(build_ring("Z/"), Err(Error::Parse { .. })));
        assert!(matches!(build_ring("Z/6 y"), Err(Error::Parse { .. })));
        assert!(matches!(build_ring("GF(6)"), Err(Error::NotPrimePower(6))));
        assert!(matches!(build_ring("Z/0"), Err(Error::ZeroModulus(0))));
        assert!(matches!(build_ring("Z/64 x Z/128"), Err(Error::SizeBound { .. })));
        assert!(matches!(build_ring("Z/6 / (7)"), Err(Error::NotAnElement { .. })));
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        for src in ["Z/6", "Z/4 x GF(9)", "(Z/4 x Z/2) / (2,4)", "Z/12 / (4) x Z/3", "(Z/2 x Z/3) x Z/5"] {
            let r = build_ring(src).unwrap();
            let again = build_ring(&r.to_string()).unwrap();
            assert_eq!(r, again, "{src}");
        }
    }

    proptest! {
        #[test]
        fn products_have_multiplicative_card(a in 1u64..20, b in 1u64..20) {
            let r = build_ring(&format!("Z/{a} x Z/{b}")).unwrap();
            prop_assert_eq!(r.card() as u64, a * b);
        }
    }
}
