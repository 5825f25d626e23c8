//! Recursive-descent parser for the expression language.
//!
//! ```text
//! program := stmt ((';' | newline) stmt)*
//! stmt    := IDENT '=' expr | expr
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := postfix ('^' unary)?
//! postfix := atom ('[' expr ']')*
//! atom    := INT | IDENT | IDENT '(' args ')' | '(' expr ')' | '[' args ']'
//!          | 'bundle' '(' expr ';' args ')'
//!          | 'ring' '[' IDENT,* ';' INT,* ']' '(' args ')'
//! ```
//!
//! Newlines separate statements only outside brackets.

use num_bigint::BigInt;

use crate::ast::{BinOp, Expr, Stmt};
use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    Newline,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Newline => "end of line".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, CliError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == '\n' {
            if depth == 0 {
                out.push((Tok::Newline, i));
            }
            i += 1;
        } else if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()[],;=".contains(c) {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(CliError::Syntax {
                pos: i,
                expected: vec!["an expression".into()],
                found: format!("character `{}`", src[i..].chars().next().unwrap_or(c)),
            });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> CliError {
        CliError::Syntax {
            pos: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("`{c}`")]))
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn small_int(&mut self) -> Result<u32, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let v = u32::try_from(&n).map_err(|_| self.error(&["integer weight"]))?;
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(&["integer weight"])),
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Tok::Newline | Tok::Sym(';')) {
            self.bump();
        }
    }

    fn program(&mut self) -> Result<Vec<Stmt>, CliError> {
        let mut out = Vec::new();
        self.skip_separators();
        while *self.peek() != Tok::End {
            out.push(self.stmt()?);
            match self.peek() {
                Tok::End => break,
                Tok::Newline | Tok::Sym(';') => self.skip_separators(),
                _ => return Err(self.error(&["operator", "`;`", "end of line", "end of input"])),
            }
        }
        Ok(out)
    }

    fn stmt(&mut self) -> Result<Stmt, CliError> {
        if let (Tok::Ident(name), Tok::Sym('=')) = (self.peek().clone(), self.peek2().clone()) {
            self.bump();
            self.bump();
            return Ok(Stmt::Assign(name, self.expr()?));
        }
        Ok(Stmt::Expr(self.expr()?))
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(acc),
            };
            self.bump();
            acc = Expr::bin(op, acc, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(acc),
            };
            self.bump();
            acc = Expr::bin(op, acc, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.postfix()?;
        if self.eat('^') {
            return Ok(Expr::bin(BinOp::Pow, base, self.unary()?));
        }
        Ok(base)
    }

    fn postfix(&mut self) -> Result<Expr, CliError> {
        let mut e = self.atom()?;
        while self.eat('[') {
            let i = self.expr()?;
            self.expect(']')?;
            e = Expr::Index(Box::new(e), Box::new(i));
        }
        Ok(e)
    }

    fn args(&mut self, close: char) -> Result<Vec<Expr>, CliError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(',') {
                return Err(self.error(&["`,`", &format!("`{close}`")]));
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.bump();
                Ok(Expr::List(self.args(']')?))
            }
            Tok::Ident(name) if name == "ring" && *self.peek2() == Tok::Sym('[') => {
                self.bump();
                self.bump();
                self.ring()
            }
            Tok::Ident(name) if name == "bundle" && *self.peek2() == Tok::Sym('(') => {
                self.bump();
                self.bump();
                let rank = self.expr()?;
                self.expect(';')?;
                let classes = self.args(')')?;
                Ok(Expr::Bundle(Box::new(rank), classes))
            }
            Tok::Ident(name) => {
                self.bump();
                if self.eat('(') {
                    Ok(Expr::Call(name, self.args(')')?))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            _ => Err(self.error(&["integer", "identifier", "`(`", "`[`", "`-`"])),
        }
    }

    fn ring(&mut self) -> Result<Expr, CliError> {
        let mut vars = vec![self.ident()?];
        while self.eat(',') {
            vars.push(self.ident()?);
        }
        self.expect(';')?;
        let mut weights = vec![self.small_int()?];
        while self.eat(',') {
            weights.push(self.small_int()?);
        }
        self.expect(']')?;
        if vars.len() != weights.len() {
            return Err(CliError::Type(format!(
                "ring has {} variables but {} weights",
                vars.len(),
                weights.len()
            )));
        }
        self.expect('(')?;
        let relations = self.args(')')?;
        Ok(Expr::Ring {
            vars,
            weights,
            relations,
        })
    }
}

/// Parses a program: statements separated by `;` or newlines.
pub fn parse_program(src: &str) -> Result<Vec<Stmt>, CliError> {
    Parser {
        toks: lex(src)?,
        at: 0,
    }
    .program()
}

/// Parses a single expression.
pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    while *p.peek() == Tok::Newline {
        p.bump();
    }
    let e = p.expr()?;
    while *p.peek() == Tok::Newline {
        p.bump();
    }
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) -> String {
        parse(s).unwrap().to_string()
    }

    #[test]
    fn quotient_node() {
        let e = parse("sym(2, V) / F").unwrap();
        assert_eq!(
            e,
            Expr::bin(
                BinOp::Div,
                Expr::call("sym", vec![Expr::int(2), Expr::var("V")]),
                Expr::var("F")
            )
        );
    }

    #[test]
    fn power_is_right_associative() {
        let e = parse("a^b^c").unwrap();
        assert_eq!(
            e,
            Expr::bin(
                BinOp::Pow,
                Expr::var("a"),
                Expr::bin(BinOp::Pow, Expr::var("b"), Expr::var("c"))
            )
        );
        assert_eq!(roundtrip("(a^b)^c"), "(a^b)^c");
        assert_eq!(roundtrip("-x^2"), "-x^2");
        assert_eq!(roundtrip("(-x)^2"), "(-x)^2");
        assert_eq!(roundtrip("2^-1"), "2^-1");
    }

    #[test]
    fn precedence_and_parens() {
        assert_eq!(roundtrip("1 + 2 * 3"), "1 + 2 * 3");
        assert_eq!(roundtrip("(1 + 2) * 3"), "(1 + 2) * 3");
        assert_eq!(roundtrip("a - (b - c)"), "a - (b - c)");
        assert_eq!(roundtrip("a - b - c"), "a - b - c");
        assert_eq!(roundtrip("a / (b * c)"), "a / (b * c)");
        assert_eq!(roundtrip("-(a + b)"), "-(a + b)");
    }

    #[test]
    fn ring_query() {
        let src = "hilbert(ring[k1,k2; 1,2](127*k1^3 - 2304*k1*k2, 113*k1^4 - 36864*k2^2), 6)";
        let e = parse(src).unwrap();
        let Expr::Call(name, args) = &e else { panic!() };
        assert_eq!(name, "hilbert");
        assert!(matches!(&args[0], Expr::Ring { vars, .. } if vars.len() == 2));
        assert_eq!(
            e.to_string(),
            "hilbert(ring[k1, k2; 1, 2](127 * k1^3 - 2304 * k1 * k2, 113 * k1^4 - 36864 * k2^2), 6)"
        );
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn bundles_and_indexing() {
        assert_eq!(roundtrip("bundle(2; w1, w2)"), "bundle(2; w1, w2)");
        assert_eq!(roundtrip("bundle(0; )"), "bundle(0; )");
        assert_eq!(roundtrip("genus(F[2], 3*S + 1*F)"), "genus(F[2], 3 * S + 1 * F)");
        assert_eq!(roundtrip("ch(E)[1]"), "ch(E)[1]");
        assert_eq!(roundtrip("[1, [2, 3]]"), "[1, [2, 3]]");
    }

    #[test]
    fn programs() {
        let p = parse_program("x = 3\ny = x^2; y + 1\n").unwrap();
        assert_eq!(p.len(), 3);
        assert!(matches!(&p[0], Stmt::Assign(n, _) if n == "x"));
        let p = parse_program("f(1,\n 2)").unwrap();
        assert_eq!(p.len(), 1);
        assert!(parse_program("# comment only\n").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        match parse("1 + * 2") {
            Err(CliError::Syntax { pos, expected, .. }) => {
                assert_eq!(pos, 4);
                assert!(expected.contains(&"integer".to_string()));
            }
            other => panic!("{other:?}"),
        }
        match parse("f(1, 2") {
            Err(CliError::Syntax { pos, expected, found }) => {
                assert_eq!(pos, 6);
                assert!(expected.contains(&"`)`".to_string()));
                assert_eq!(found, "end of input");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("a $ b"), Err(CliError::Syntax { pos: 2, .. })));
        assert!(parse("1 2").is_err());
        assert!(parse("ring[a, b; 1](a)").is_err());
    }
}
