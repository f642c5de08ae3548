//! Tiny integer expression language for rank-parametrized table entries:
//! `+ - *`, parentheses, integer literals, and the variables `r` and `k`.
//! Formulas like `r*(2*r+3)` or `4*r-4` evaluate exactly in `i64`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Lit(i64),
    Var(char),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
}

/// A parsed integer expression in the variables `r`, `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    src: String,
    node: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            src,
            chars: src.chars().collect(),
            pos: 0,
        };
        let node = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(Expr {
            src: src.to_string(),
            node,
        })
    }

    pub fn eval(&self, r: i64, k: i64) -> i64 {
        fn go(n: &Node, r: i64, k: i64) -> i64 {
            match n {
                Node::Lit(v) => *v,
                Node::Var('r') => r,
                Node::Var('k') => k,
                Node::Var(_) => unreachable!(),
                Node::Add(a, b) => go(a, r, k) + go(b, r, k),
                Node::Sub(a, b) => go(a, r, k) - go(b, r, k),
                Node::Mul(a, b) => go(a, r, k) * go(b, r, k),
                Node::Neg(a) => -go(a, r, k),
            }
        }
        go(&self.node, r, k)
    }

    pub fn uses_var(&self, var: char) -> bool {
        fn go(n: &Node, var: char) -> bool {
            match n {
                Node::Lit(_) => false,
                Node::Var(c) => *c == var,
                Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) => go(a, var) || go(b, var),
                Node::Neg(a) => go(a, var),
            }
        }
        go(&self.node, var)
    }

    pub fn src(&self) -> &str {
        &self.src
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.src)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Expr {
            src: self.src.to_string(),
            msg: format!("{msg} at position {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Node> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = Node::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    acc = Node::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = Node::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Node> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.factor()?)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                text.parse()
                    .map(Node::Lit)
                    .map_err(|_| self.error("bad integer"))
            }
            Some(c @ ('r' | 'k')) => {
                self.pos += 1;
                Ok(Node::Var(c))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Ge,
    Gt,
    Le,
    Lt,
    Eq,
}

/// A conjunction of integer comparisons, e.g. `r>=3,k>=1,r>k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    src: String,
    clauses: Vec<(Expr, CmpOp, Expr)>,
}

impl Constraint {
    /// Parses a possibly empty constraint list.
    pub fn parse(src: &str) -> Result<Constraint> {
        let mut clauses = Vec::new();
        let trimmed = src.trim();
        if !trimmed.is_empty() && trimmed != "-" {
            for clause in trimmed.split(',') {
                let (op, opstr) = if clause.contains(">=") {
                    (CmpOp::Ge, ">=")
                } else if clause.contains("<=") {
                    (CmpOp::Le, "<=")
                } else if clause.contains("==") {
                    (CmpOp::Eq, "==")
                } else if clause.contains('>') {
                    (CmpOp::Gt, ">")
                } else if clause.contains('<') {
                    (CmpOp::Lt, "<")
                } else {
                    return Err(Error::Expr {
                        src: clause.to_string(),
                        msg: "expected a comparison".to_string(),
                    });
                };
                let mut parts = clause.splitn(2, opstr);
                let lhs = Expr::parse(parts.next().unwrap())?;
                let rhs = Expr::parse(parts.next().unwrap())?;
                clauses.push((lhs, op, rhs));
            }
        }
        Ok(Constraint {
            src: trimmed.to_string(),
            clauses,
        })
    }

    pub fn holds(&self, r: i64, k: i64) -> bool {
        self.clauses.iter().all(|(lhs, op, rhs)| {
            let (a, b) = (lhs.eval(r, k), rhs.eval(r, k));
            match op {
                CmpOp::Ge => a >= b,
                CmpOp::Gt => a > b,
                CmpOp::Le => a <= b,
                CmpOp::Lt => a < b,
                CmpOp::Eq => a == b,
            }
        })
    }

    pub fn uses_var(&self, var: char) -> bool {
        self.clauses
            .iter()
            .any(|(lhs, _, rhs)| lhs.uses_var(var) || rhs.uses_var(var))
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn src(&self) -> &str {
        &self.src
    }

    /// Smallest admissible `r` at `k = 0`, scanning from 1; `None` if nothing
    /// is admissible below the bound.
    pub fn min_r(&self, bound: i64) -> Option<i64> {
        (1..=bound).find(|&r| self.holds(r, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        assert_eq!(Expr::parse("r*(r+2)").unwrap().eval(4, 0), 24);
        assert_eq!(Expr::parse("4*r-4").unwrap().eval(3, 0), 8);
        assert_eq!(Expr::parse("4*r*(r+k)").unwrap().eval(3, 1), 48);
        assert_eq!(Expr::parse("248").unwrap().eval(0, 0), 248);
        assert_eq!(Expr::parse("2*r-2").unwrap().eval(6, 0), 10);
        assert_eq!(Expr::parse("-r+5").unwrap().eval(2, 0), 3);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Expr::parse("r+").is_err());
        assert!(Expr::parse("(r").is_err());
        assert!(Expr::parse("x+1").is_err());
        assert!(Expr::parse("2 3").is_err());
    }

    #[test]
    fn constraints() {
        let c = Constraint::parse("r>=3,k>=1,r>k+1").unwrap();
        assert!(c.holds(3, 1));
        assert!(!c.holds(3, 2));
        assert!(!c.holds(2, 1));
        assert!(Constraint::parse("").unwrap().holds(1, 0));
        assert_eq!(Constraint::parse("r>=4").unwrap().min_r(8), Some(4));
    }

    #[test]
    fn variables_detected() {
        assert!(Expr::parse("2*r").unwrap().uses_var('r'));
        assert!(!Expr::parse("2*r").unwrap().uses_var('k'));
        assert!(Constraint::parse("r>k+1").unwrap().uses_var('k'));
    }
}
