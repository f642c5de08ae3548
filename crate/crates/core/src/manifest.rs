//! Versioned manifests designating, for each table row, the involution or
//! subalgebra construction that realizes it. The manifests are plain-text
//! data files embedded in the crate; their formats are documented in the
//! file headers and in the README.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::rootsystem::TypeLetter;

const INVOLUTIONS_SRC: &str = include_str!("../data/involutions.txt");
const SUBALGEBRAS_SRC: &str = include_str!("../data/subalgebras.txt");

/// How an involution is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    /// 1-based node labels carrying coweight coefficient 1
    Coweight(Vec<usize>),
    /// 1-based images of the Dynkin nodes
    Flip(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct InvolutionRow {
    pub id: String,
    pub letter: TypeLetter,
    pub rank: usize,
    pub descriptor: Descriptor,
    pub dim_k: usize,
    pub dim_m: usize,
}

/// Node selector in a construction route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeSpec {
    /// 1-based Bourbaki label
    Index(usize),
    Last,
}

impl NodeSpec {
    /// Resolves to a 0-based node index at the given rank.
    pub fn resolve(&self, rank: usize) -> usize {
        match self {
            NodeSpec::Index(n) => n - 1,
            NodeSpec::Last => rank - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteSpec {
    BorelDeSiebenthal(NodeSpec),
    Levi(NodeSpec),
    /// swap the two fork nodes r-1, r
    FlipFork,
    /// explicit 1-based images
    Flip(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SubalgebraRow {
    pub id: String,
    pub letter: TypeLetter,
    /// ambient rank; `r` for the symbolic classical rows
    pub rank: Expr,
    pub route: RouteSpec,
    /// expected simple components of the subalgebra, canonical types
    pub components: Vec<(TypeLetter, Expr)>,
    pub center_dim: usize,
    pub codim: Expr,
    /// rank range to instantiate, `None` for fixed-rank rows
    pub ranks: Option<(usize, usize)>,
}

impl SubalgebraRow {
    /// Ambient ranks to verify, clamped by the ceiling.
    pub fn instantiations(&self, ceiling: usize) -> Vec<usize> {
        match self.ranks {
            Some((lo, hi)) => (lo..=hi.min(ceiling)).collect(),
            None => vec![usize::try_from(self.rank.eval(0, 0)).expect("fixed rank")],
        }
    }
}

fn data_err(file: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::DataFormat {
        file: file.to_string(),
        line,
        msg: msg.into(),
    }
}

fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `LETTER:RANK-EXPR`.
pub fn parse_type(token: &str, file: &str, line: usize) -> Result<(TypeLetter, Expr)> {
    let (letter, rank) = token
        .split_once(':')
        .ok_or_else(|| data_err(file, line, format!("expected LETTER:RANK, got `{token}`")))?;
    let letter = letter
        .chars()
        .next()
        .and_then(TypeLetter::from_char)
        .filter(|_| letter.len() == 1)
        .ok_or_else(|| data_err(file, line, format!("bad type letter `{letter}`")))?;
    Ok((letter, Expr::parse(rank)?))
}

fn parse_nodes(list: &str, file: &str, line: usize) -> Result<Vec<usize>> {
    list.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| data_err(file, line, format!("bad node `{t}`")))
        })
        .collect()
}

fn parse_involutions(src: &str) -> Result<Vec<InvolutionRow>> {
    const FILE: &str = "involutions.txt";
    let mut rows = Vec::new();
    for (line, text) in content_lines(src) {
        let fields: Vec<&str> = text.split('|').collect();
        if fields.len() != 5 {
            return Err(data_err(FILE, line, "expected 5 fields"));
        }
        let (letter, rank) = parse_type(fields[1], FILE, line)?;
        let rank = usize::try_from(rank.eval(0, 0))
            .map_err(|_| data_err(FILE, line, "rank must be a literal"))?;
        let descriptor = match fields[2].split_once(':') {
            Some(("coweight", list)) => Descriptor::Coweight(parse_nodes(list, FILE, line)?),
            Some(("flip", list)) => Descriptor::Flip(parse_nodes(list, FILE, line)?),
            _ => return Err(data_err(FILE, line, "bad descriptor")),
        };
        let dim_k = fields[3]
            .parse()
            .map_err(|_| data_err(FILE, line, "bad dim_k"))?;
        let dim_m = fields[4]
            .parse()
            .map_err(|_| data_err(FILE, line, "bad dim_m"))?;
        rows.push(InvolutionRow {
            id: fields[0].to_string(),
            letter,
            rank,
            descriptor,
            dim_k,
            dim_m,
        });
    }
    Ok(rows)
}

fn parse_subalgebras(src: &str) -> Result<Vec<SubalgebraRow>> {
    const FILE: &str = "subalgebras.txt";
    let mut rows = Vec::new();
    for (line, text) in content_lines(src) {
        let fields: Vec<&str> = text.split('|').collect();
        if fields.len() != 7 {
            return Err(data_err(FILE, line, "expected 7 fields"));
        }
        let (letter, rank) = parse_type(fields[1], FILE, line)?;
        let route = match fields[2].split_once(':') {
            Some(("bds", node)) => RouteSpec::BorelDeSiebenthal(parse_node_spec(node, FILE, line)?),
            Some(("levi", node)) => RouteSpec::Levi(parse_node_spec(node, FILE, line)?),
            Some(("flip", "fork")) => RouteSpec::FlipFork,
            Some(("flip", list)) => RouteSpec::Flip(parse_nodes(list, FILE, line)?),
            _ => return Err(data_err(FILE, line, "bad route")),
        };
        let components = if fields[3] == "-" {
            Vec::new()
        } else {
            fields[3]
                .split('+')
                .map(|t| parse_type(t.trim(), FILE, line))
                .collect::<Result<Vec<_>>>()?
        };
        let center_dim = fields[4]
            .parse()
            .map_err(|_| data_err(FILE, line, "bad center dim"))?;
        let codim = Expr::parse(fields[5])?;
        let ranks = if fields[6] == "-" {
            None
        } else {
            let (lo, hi) = fields[6]
                .split_once("..")
                .ok_or_else(|| data_err(FILE, line, "bad rank range"))?;
            Some((
                lo.parse().map_err(|_| data_err(FILE, line, "bad range"))?,
                hi.parse().map_err(|_| data_err(FILE, line, "bad range"))?,
            ))
        };
        rows.push(SubalgebraRow {
            id: fields[0].to_string(),
            letter,
            rank,
            route,
            components,
            center_dim,
            codim,
            ranks,
        });
    }
    Ok(rows)
}

fn parse_node_spec(token: &str, file: &str, line: usize) -> Result<NodeSpec> {
    if token == "last" {
        return Ok(NodeSpec::Last);
    }
    token
        .parse::<usize>()
        .map(NodeSpec::Index)
        .map_err(|_| data_err(file, line, format!("bad node spec `{token}`")))
}

/// The shipped involution manifest.
pub fn involution_rows() -> &'static [InvolutionRow] {
    static ROWS: OnceLock<Vec<InvolutionRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_involutions(INVOLUTIONS_SRC).expect("shipped manifest parses"))
}

/// The shipped subalgebra construction manifest.
pub fn subalgebra_rows() -> &'static [SubalgebraRow] {
    static ROWS: OnceLock<Vec<SubalgebraRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_subalgebras(SUBALGEBRAS_SRC).expect("shipped manifest parses"))
}

pub fn involution_row(id: &str) -> Result<&'static InvolutionRow> {
    involution_rows()
        .iter()
        .find(|row| row.id == id)
        .ok_or_else(|| Error::UnknownRow { id: id.to_string() })
}

pub fn subalgebra_row(id: &str) -> Result<&'static SubalgebraRow> {
    subalgebra_rows()
        .iter()
        .find(|row| row.id == id)
        .ok_or_else(|| Error::UnknownRow { id: id.to_string() })
}

/// Rewrites a type at a concrete rank into canonical simple components,
/// absorbing the low-rank coincidences (`B_1 = A_1`, `C_1 = A_1`,
/// `C_2 = B_2`, `D_2 = A_1 ⊕ A_1`); a rank-0 component is trivial.
pub fn canonicalize(letter: TypeLetter, rank: usize) -> Vec<(TypeLetter, usize)> {
    match (letter, rank) {
        (_, 0) => Vec::new(),
        (TypeLetter::B | TypeLetter::C, 1) => vec![(TypeLetter::A, 1)],
        (TypeLetter::C, 2) => vec![(TypeLetter::B, 2)],
        (TypeLetter::D, 1) => vec![(TypeLetter::A, 1)],
        (TypeLetter::D, 2) => vec![(TypeLetter::A, 1), (TypeLetter::A, 1)],
        _ => vec![(letter, rank)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_manifests_parse() {
        assert_eq!(involution_rows().len(), 4);
        assert_eq!(subalgebra_rows().len(), 9);
    }

    #[test]
    fn involution_rows_have_expected_shape() {
        let g2 = involution_row("g2-so4").unwrap();
        assert_eq!(g2.letter, TypeLetter::G);
        assert_eq!((g2.dim_k, g2.dim_m), (6, 8));
        assert_eq!(g2.descriptor, Descriptor::Coweight(vec![1]));
        assert!(involution_row("nope").is_err());
    }

    #[test]
    fn subalgebra_routes_resolve() {
        let su = subalgebra_row("su-levi").unwrap();
        assert_eq!(su.route, RouteSpec::Levi(NodeSpec::Last));
        assert_eq!(su.instantiations(8), vec![3, 4, 5, 6, 7, 8]);
        assert_eq!(su.instantiations(4), vec![3, 4]);
        let e8 = subalgebra_row("e8-e7sp1").unwrap();
        assert_eq!(e8.instantiations(8), vec![8]);
        assert_eq!(e8.codim.eval(0, 0), 112);
    }

    #[test]
    fn canonical_low_rank_types() {
        assert_eq!(canonicalize(TypeLetter::C, 2), vec![(TypeLetter::B, 2)]);
        assert_eq!(
            canonicalize(TypeLetter::D, 2),
            vec![(TypeLetter::A, 1), (TypeLetter::A, 1)]
        );
        assert_eq!(canonicalize(TypeLetter::A, 0), vec![]);
        assert_eq!(canonicalize(TypeLetter::E, 8), vec![(TypeLetter::E, 8)]);
    }
}
