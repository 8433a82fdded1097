//! Graph-expression language used by the CLI.
//!
//! ```text
//! EXPR := path(k) | cycle(k) | clique(k) | biclique(a,b) | star(a)
//!       | dstar(a,b) | turan(n,r) | pow(EXPR,k) | blow(EXPR,[s1,...,sm])
//!       | g6:<graph6>
//! ```
//!
//! Whitespace between tokens is ignored. `turan` and `blow` denote blow-up
//! specifications; everything else denotes a concrete graph.

use num_traits::ToPrimitive;

use super::{biclique, clique, cycle, double_star, graph_power, path, star, turan, BlowupSpec};
use crate::error::{Error, Result};
use crate::graph::{BigCount, Graph};
use crate::graph6::{graph6_decode, graph6_encode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Graph(Graph),
    Spec(BlowupSpec),
}

impl GraphExpr {
    /// View as a blow-up spec (graphs become trivial blow-ups).
    pub fn into_spec(self) -> BlowupSpec {
        match self {
            GraphExpr::Graph(g) => BlowupSpec::from_graph(&g),
            GraphExpr::Spec(s) => s,
        }
    }

    /// Concrete graph, materializing specs.
    pub fn into_graph(self) -> Result<Graph> {
        match self {
            GraphExpr::Graph(g) => Ok(g),
            GraphExpr::Spec(s) => s.materialize(),
        }
    }

    /// Text that parses back to an equal value.
    pub fn to_expr(&self) -> String {
        match self {
            GraphExpr::Graph(g) => format!("g6:{}", graph6_encode(g)),
            GraphExpr::Spec(s) => s.to_expr(),
        }
    }
}

enum Arg {
    Int(BigCount),
    List(Vec<BigCount>),
    Expr(GraphExpr),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => self.err(
                self.pos,
                format!("expected '{}', found '{}'", byte as char, b as char),
            ),
            None => self.err(
                self.pos,
                format!("expected '{}', found end of input", byte as char),
            ),
        }
    }

    fn integer(&mut self) -> Result<BigCount> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn list(&mut self) -> Result<Vec<BigCount>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.integer()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return self.err(self.pos, "expected ',' or ']' in size list"),
            }
        }
    }

    fn arg(&mut self) -> Result<(usize, Arg)> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let arg = match self.peek() {
            Some(b) if b.is_ascii_digit() => Arg::Int(self.integer()?),
            Some(b'[') => Arg::List(self.list()?),
            _ => Arg::Expr(self.expr()?),
        };
        Ok((at, arg))
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        self.skip_ws();
        let start = self.pos;
        if self.text[self.pos..].starts_with(b"g6:") {
            self.pos += 3;
            let body_start = self.pos;
            while self.pos < self.text.len() && (63..=126).contains(&self.text[self.pos]) {
                self.pos += 1;
            }
            let body = std::str::from_utf8(&self.text[body_start..self.pos]).unwrap();
            return match graph6_decode(body) {
                Ok(g) => Ok(GraphExpr::Graph(g)),
                Err(e) => self.err(body_start, e.to_string()),
            };
        }
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .to_string();
        if name.is_empty() {
            return self.err(start, "expected a graph expression");
        }
        self.expect(b'(')?;
        let mut args = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err(self.pos, "expected ',' or ')'"),
                }
            }
        }
        self.build(start, &name, args)
    }

    fn build(&self, at: usize, name: &str, args: Vec<(usize, Arg)>) -> Result<GraphExpr> {
        let arity = match name {
            "path" | "cycle" | "clique" | "star" => 1,
            "biclique" | "dstar" | "turan" | "pow" | "blow" => 2,
            _ => return self.err(at, format!("unknown constructor '{name}'")),
        };
        if args.len() != arity {
            return self.err(
                at,
                format!("{name} takes {arity} argument(s), got {}", args.len()),
            );
        }
        let int = |i: usize| -> Result<usize> {
            match &args[i].1 {
                Arg::Int(v) => v
                    .to_usize()
                    .ok_or_else(|| Error::capacity(format!("integer {v} too large"))),
                _ => self.err(args[i].0, "expected an integer"),
            }
        };
        let graph = |i: usize| -> Result<Graph> {
            match &args[i].1 {
                Arg::Expr(e) => e.clone().into_graph(),
                _ => self.err(args[i].0, "expected a graph expression"),
            }
        };
        let g = match name {
            "path" => path(int(0)?)?,
            "cycle" => cycle(int(0)?)?,
            "clique" => clique(int(0)?)?,
            "star" => star(int(0)?)?,
            "biclique" => biclique(int(0)?, int(1)?)?,
            "dstar" => double_star(int(0)?, int(1)?)?,
            "pow" => graph_power(&graph(0)?, int(1)?)?,
            "turan" => {
                let n = int(0)? as u64;
                let r = int(1)? as u64;
                return Ok(GraphExpr::Spec(turan(n, r)?));
            }
            "blow" => {
                let base = graph(0)?;
                let Arg::List(sizes) = &args[1].1 else {
                    return self.err(args[1].0, "expected a size list [s1,...,sm]");
                };
                if sizes.len() != base.order() {
                    return self.err(
                        args[1].0,
                        format!(
                            "size list has {} entries but the base has {} vertices",
                            sizes.len(),
                            base.order()
                        ),
                    );
                }
                return Ok(GraphExpr::Spec(BlowupSpec::new(base, sizes.clone())?));
            }
            _ => unreachable!(),
        };
        Ok(GraphExpr::Graph(g))
    }
}

/// Parse a graph expression.
pub fn parse_graph_expr(text: &str) -> Result<GraphExpr> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err(0, "empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err(p.pos, "trailing input");
    }
    Ok(e)
}
