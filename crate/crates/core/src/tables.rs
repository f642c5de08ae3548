//! The four numeric tables as machine-readable data, plus every cross-table
//! consistency check: dimension columns against root-system generation,
//! reflective index against minimal subalgebra codimension, the index
//! dichotomy, the rank lower bound, and the noncompact dimension arithmetic
//! through compact duals.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::expr::{Constraint, Expr};
use crate::involution::cartan_embedding_codim;
use crate::lts::pair_from_row;
use crate::manifest::{canonicalize, parse_type};
use crate::registry::AlgebraCache;
use crate::rootsystem::{algebra_dimension, TypeLetter};
use crate::subalgebra::build_from_row;

const INDEX_TABLES_SRC: &str = include_str!("../data/index_tables.txt");
const SUBALGEBRA_TABLE_SRC: &str = include_str!("../data/subalgebra_table.txt");
const NONCOMPACT_TABLE_SRC: &str = include_str!("../data/noncompact_table.txt");

/// Designation of the object realizing a Σ entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Link {
    /// Cartan embedding: id in the involution manifest
    Involution(String),
    /// subgroup: id in the subalgebra construction manifest
    Subalgebra(String),
}

/// Denominator factor of a symmetric-space token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KFactor {
    /// unitary factor of the given size; dim n²
    Unitary(Expr),
    /// simple factor of the given canonical type
    Simple(TypeLetter, Expr),
}

/// One factor of a Σ product in the noncompact table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaFactor {
    /// ℝ factor, dimension 1
    Line,
    /// real hyperbolic plane, dimension 2
    HyperbolicPlane,
    /// symmetric space, dimension computed through the compact dual
    Quotient {
        ambient: (TypeLetter, Expr),
        kfactors: Vec<KFactor>,
    },
}

/// Structured data carried only by noncompact-table rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoncompactData {
    pub ambient: (TypeLetter, Expr),
    pub kfactors: Vec<KFactor>,
    pub sigma_factors: Vec<SigmaFactor>,
}

/// One table row. Tables 1 and 2 fill `family`, `sigma`, `links`; table 3
/// fills `family`, `subalgebra_display`, `construction`; table 4 fills
/// `block` and `noncompact`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub table: u8,
    pub id: String,
    pub space: String,
    pub family: Option<(TypeLetter, Expr)>,
    pub sigma: Vec<String>,
    pub dim: Option<Expr>,
    pub value: Expr,
    pub constraint: Constraint,
    pub links: Vec<Link>,
    pub block: u8,
    pub noncompact: Option<NoncompactData>,
    pub subalgebra_display: Option<String>,
    pub construction: Option<String>,
}

impl TableRow {
    /// Admissible `(r, k)` instantiations up to the rank ceiling. Rows with
    /// no symbolic content have the single instantiation `(0, 0)`.
    pub fn admissible(&self, ceiling: usize) -> Vec<(i64, i64)> {
        let ceiling = ceiling as i64;
        let uses_r = self.constraint.uses_var('r')
            || self.value.uses_var('r')
            || self.dim.as_ref().is_some_and(|d| d.uses_var('r'))
            || self.family.as_ref().is_some_and(|(_, e)| e.uses_var('r'));
        let uses_k = self.constraint.uses_var('k')
            || self.value.uses_var('k')
            || self.dim.as_ref().is_some_and(|d| d.uses_var('k'));
        if !uses_r && !uses_k {
            return vec![(0, 0)];
        }
        let rs: Vec<i64> = (1..=ceiling).collect();
        let ks: Vec<i64> = if uses_k {
            (1..=ceiling).collect()
        } else {
            vec![0]
        };
        let mut out = Vec::new();
        for &r in &rs {
            for &k in &ks {
                if self.constraint.holds(r, k) {
                    out.push((r, k));
                }
            }
        }
        out
    }

    /// Concrete ambient rank at an instantiation, for rows with a family.
    pub fn family_rank(&self, r: i64) -> Option<usize> {
        self.family
            .as_ref()
            .map(|(_, e)| usize::try_from(e.eval(r, 0)).expect("rank is positive"))
    }
}

/// All four tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Tables {
    pub t1: Vec<TableRow>,
    pub t2: Vec<TableRow>,
    pub t3: Vec<TableRow>,
    pub t4: Vec<TableRow>,
}

impl Tables {
    pub fn all(&self) -> impl Iterator<Item = &TableRow> {
        self.t1
            .iter()
            .chain(&self.t2)
            .chain(&self.t3)
            .chain(&self.t4)
    }

    pub fn row(&self, table: u8, id: &str) -> Option<&TableRow> {
        self.all().find(|row| row.table == table && row.id == id)
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

fn parse_links(field: &str, file: &str, line: usize) -> Result<Vec<Link>> {
    if field.is_empty() {
        return Ok(Vec::new());
    }
    field
        .split(',')
        .map(|token| match token.split_once(':') {
            Some(("inv", id)) => Ok(Link::Involution(id.to_string())),
            Some(("sub", id)) => Ok(Link::Subalgebra(id.to_string())),
            _ => Err(data_err(file, line, format!("bad link `{token}`"))),
        })
        .collect()
}

fn parse_kfactors(field: &str, file: &str, line: usize) -> Result<Vec<KFactor>> {
    field
        .split(',')
        .map(|token| {
            let token = token.trim();
            if let Some(size) = token.strip_prefix("U:") {
                Ok(KFactor::Unitary(Expr::parse(size)?))
            } else {
                let (letter, rank) = parse_type(token, file, line)?;
                Ok(KFactor::Simple(letter, rank))
            }
        })
        .collect()
}

fn parse_sigma_factors(field: &str, file: &str, line: usize) -> Result<Vec<SigmaFactor>> {
    // split on top-level commas; Q[...] groups contain commas of their own
    let mut factors = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = field.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'[' => depth += 1,
            b']' => depth -= 1,
            b',' if depth == 0 => {
                factors.push(&field[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    factors.push(&field[start..]);
    factors
        .into_iter()
        .map(|token| {
            let token = token.trim();
            match token {
                "R" => Ok(SigmaFactor::Line),
                "RH2" => Ok(SigmaFactor::HyperbolicPlane),
                _ => {
                    let inner = token
                        .strip_prefix("Q[")
                        .and_then(|t| t.strip_suffix(']'))
                        .ok_or_else(|| {
                            data_err(file, line, format!("bad sigma factor `{token}`"))
                        })?;
                    let (amb, kf) = inner
                        .split_once(';')
                        .ok_or_else(|| data_err(file, line, format!("bad quotient `{token}`")))?;
                    Ok(SigmaFactor::Quotient {
                        ambient: parse_type(amb, file, line)?,
                        kfactors: parse_kfactors(kf, file, line)?,
                    })
                }
            }
        })
        .collect()
}

fn parse_index_tables(src: &str) -> Result<(Vec<TableRow>, Vec<TableRow>)> {
    const FILE: &str = "index_tables.txt";
    let (mut t1, mut t2) = (Vec::new(), Vec::new());
    for (line, text) in content_lines(src) {
        let f: Vec<&str> = text.split('|').collect();
        if f.len() != 9 {
            return Err(data_err(FILE, line, "expected 9 fields"));
        }
        let table: u8 = f[0]
            .parse()
            .map_err(|_| data_err(FILE, line, "bad table id"))?;
        let row = TableRow {
            table,
            id: f[1].to_string(),
            space: f[2].to_string(),
            family: Some(parse_type(f[3], FILE, line)?),
            sigma: f[4].split(';').map(str::to_string).collect(),
            dim: Some(Expr::parse(f[5])?),
            value: Expr::parse(f[6])?,
            constraint: Constraint::parse(f[7])?,
            links: parse_links(f[8], FILE, line)?,
            block: 0,
            noncompact: None,
            subalgebra_display: None,
            construction: None,
        };
        match table {
            1 => t1.push(row),
            2 => t2.push(row),
            _ => return Err(data_err(FILE, line, "table id must be 1 or 2")),
        }
    }
    Ok((t1, t2))
}

fn parse_subalgebra_table(src: &str) -> Result<Vec<TableRow>> {
    const FILE: &str = "subalgebra_table.txt";
    let mut rows = Vec::new();
    for (line, text) in content_lines(src) {
        let f: Vec<&str> = text.split('|').collect();
        if f.len() != 7 {
            return Err(data_err(FILE, line, "expected 7 fields"));
        }
        rows.push(TableRow {
            table: 3,
            id: f[0].to_string(),
            space: f[1].to_string(),
            family: Some(parse_type(f[3], FILE, line)?),
            sigma: Vec::new(),
            dim: None,
            value: Expr::parse(f[4])?,
            constraint: Constraint::parse(f[5])?,
            links: Vec::new(),
            block: 0,
            noncompact: None,
            subalgebra_display: Some(f[2].to_string()),
            construction: Some(f[6].to_string()),
        });
    }
    Ok(rows)
}

fn parse_noncompact_table(src: &str) -> Result<Vec<TableRow>> {
    const FILE: &str = "noncompact_table.txt";
    let mut rows = Vec::new();
    for (line, text) in content_lines(src) {
        let f: Vec<&str> = text.split('|').collect();
        if f.len() != 10 {
            return Err(data_err(FILE, line, "expected 10 fields"));
        }
        rows.push(TableRow {
            table: 4,
            id: f[1].to_string(),
            space: f[2].to_string(),
            family: None,
            sigma: f[3].split(';').map(str::to_string).collect(),
            dim: Some(Expr::parse(f[7])?),
            value: Expr::parse(f[8])?,
            constraint: Constraint::parse(f[9])?,
            links: Vec::new(),
            block: f[0]
                .parse()
                .map_err(|_| data_err(FILE, line, "bad block"))?,
            noncompact: Some(NoncompactData {
                ambient: parse_type(f[4], FILE, line)?,
                kfactors: parse_kfactors(f[5], FILE, line)?,
                sigma_factors: parse_sigma_factors(f[6], FILE, line)?,
            }),
            subalgebra_display: None,
            construction: None,
        });
    }
    Ok(rows)
}

/// Parses the three shipped data files into the four tables, validating row
/// counts and the basic shape invariants.
pub fn parse_tables(index_src: &str, subalgebra_src: &str, noncompact_src: &str) -> Result<Tables> {
    let (t1, t2) = parse_index_tables(index_src)?;
    let t3 = parse_subalgebra_table(subalgebra_src)?;
    let t4 = parse_noncompact_table(noncompact_src)?;
    let tables = Tables { t1, t2, t3, t4 };
    validate_tables(&tables)?;
    Ok(tables)
}

fn validate_tables(tables: &Tables) -> Result<()> {
    let shape_err = |msg: String| Error::DataFormat {
        file: "tables".to_string(),
        line: 0,
        msg,
    };
    if tables.t1.len() != 12 || tables.t2.len() != 12 {
        return Err(shape_err("index tables must have 12 rows each".into()));
    }
    if tables.t3.len() != 9 {
        return Err(shape_err("subalgebra table must have 9 rows".into()));
    }
    if tables.t4.len() != 13 {
        return Err(shape_err("noncompact table must have 13 rows".into()));
    }
    // every formula must evaluate to positive integers with value ≤ dim on
    // its admissible instantiations
    for row in tables.all() {
        for (r, k) in row.admissible(8) {
            let value = row.value.eval(r, k);
            if value <= 0 {
                return Err(shape_err(format!(
                    "row {}: value must be positive at ({r},{k})",
                    row.id
                )));
            }
            if let Some(dim) = &row.dim {
                let d = dim.eval(r, k);
                if d <= 0 || value > d {
                    return Err(shape_err(format!(
                        "row {}: need 0 < value ≤ dim at ({r},{k})",
                        row.id
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The shipped tables.
pub fn load_tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        parse_tables(INDEX_TABLES_SRC, SUBALGEBRA_TABLE_SRC, NONCOMPACT_TABLE_SRC)
            .expect("shipped tables parse")
    })
}

/// Serializes the tables back to the three data-file bodies (without the
/// comment headers). Reparsing the output reproduces the rows exactly.
pub fn serialize_tables(tables: &Tables) -> (String, String, String) {
    let mut index = String::new();
    for row in tables.t1.iter().chain(&tables.t2) {
        let links: Vec<String> = row
            .links
            .iter()
            .map(|l| match l {
                Link::Involution(id) => format!("inv:{id}"),
                Link::Subalgebra(id) => format!("sub:{id}"),
            })
            .collect();
        let (letter, rank) = row.family.as_ref().unwrap();
        let _ = writeln!(
            index,
            "{}|{}|{}|{}:{}|{}|{}|{}|{}|{}",
            row.table,
            row.id,
            row.space,
            letter,
            rank.src(),
            row.sigma.join(";"),
            row.dim.as_ref().unwrap().src(),
            row.value.src(),
            row.constraint.src(),
            links.join(",")
        );
    }
    let mut sub = String::new();
    for row in &tables.t3 {
        let (letter, rank) = row.family.as_ref().unwrap();
        let _ = writeln!(
            sub,
            "{}|{}|{}|{}:{}|{}|{}|{}",
            row.id,
            row.space,
            row.subalgebra_display.as_ref().unwrap(),
            letter,
            rank.src(),
            row.value.src(),
            row.constraint.src(),
            row.construction.as_ref().unwrap()
        );
    }
    let kf_str = |kfs: &[KFactor]| -> String {
        kfs.iter()
            .map(|kf| match kf {
                KFactor::Unitary(e) => format!("U:{}", e.src()),
                KFactor::Simple(letter, e) => format!("{letter}:{}", e.src()),
            })
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut noncompact = String::new();
    for row in &tables.t4 {
        let data = row.noncompact.as_ref().unwrap();
        let sigma_factors: Vec<String> = data
            .sigma_factors
            .iter()
            .map(|sf| match sf {
                SigmaFactor::Line => "R".to_string(),
                SigmaFactor::HyperbolicPlane => "RH2".to_string(),
                SigmaFactor::Quotient { ambient, kfactors } => {
                    format!("Q[{}:{};{}]", ambient.0, ambient.1.src(), kf_str(kfactors))
                }
            })
            .collect();
        let _ = writeln!(
            noncompact,
            "{}|{}|{}|{}|{}:{}|{}|{}|{}|{}|{}",
            row.block,
            row.id,
            row.space,
            row.sigma.join(";"),
            data.ambient.0,
            data.ambient.1.src(),
            kf_str(&data.kfactors),
            sigma_factors.join(","),
            row.dim.as_ref().unwrap().src(),
            row.value.src(),
            row.constraint.src()
        );
    }
    (index, sub, noncompact)
}

/// Dimension of a canonical simple type, through root-system generation.
fn simple_dim(cache: &AlgebraCache, letter: TypeLetter, rank: usize) -> Result<usize> {
    let mut total = 0;
    for (l, r) in canonicalize(letter, rank) {
        let rs = cache.root_system(l, r)?;
        total += algebra_dimension(&rs);
    }
    Ok(total)
}

fn kfactor_dim(cache: &AlgebraCache, kf: &KFactor, r: i64, k: i64) -> Result<usize> {
    match kf {
        KFactor::Unitary(e) => {
            let n = usize::try_from(e.eval(r, k)).expect("unitary size");
            Ok(n * n)
        }
        KFactor::Simple(letter, e) => {
            let rank = usize::try_from(e.eval(r, k)).expect("factor rank");
            simple_dim(cache, *letter, rank)
        }
    }
}

fn quotient_dim(
    cache: &AlgebraCache,
    ambient: &(TypeLetter, Expr),
    kfactors: &[KFactor],
    r: i64,
    k: i64,
) -> Result<i64> {
    let amb_rank = usize::try_from(ambient.1.eval(r, k)).expect("ambient rank");
    let amb = simple_dim(cache, ambient.0, amb_rank)? as i64;
    let mut kd = 0i64;
    for kf in kfactors {
        kd += kfactor_dim(cache, kf, r, k)? as i64;
    }
    Ok(amb - kd)
}

/// Per-row outcome inside a [`CheckResult`].
#[derive(Debug, Clone)]
pub struct RowDetail {
    pub row: String,
    pub instance: Option<(i64, i64)>,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

/// Result of one named consistency check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<RowDetail>,
}

impl CheckResult {
    fn from_details(name: &'static str, details: Vec<RowDetail>) -> CheckResult {
        CheckResult {
            name,
            passed: details.iter().all(|d| d.ok),
            details,
        }
    }
}

fn detail(
    row: &str,
    instance: Option<(i64, i64)>,
    expected: impl ToString,
    actual: impl ToString,
    ok: bool,
) -> RowDetail {
    RowDetail {
        row: row.to_string(),
        instance,
        expected: expected.to_string(),
        actual: actual.to_string(),
        ok,
    }
}

/// Dimension columns of tables 1 and 2 against root-system generation.
pub fn check_dim_column(cache: &AlgebraCache, ceiling: usize) -> Result<CheckResult> {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in tables.t1.iter().chain(&tables.t2) {
        for (r, k) in row.admissible(ceiling) {
            let rank = row.family_rank(r).unwrap();
            let letter = row.family.as_ref().unwrap().0;
            let rs = cache.root_system(letter, rank)?;
            let computed = algebra_dimension(&rs);
            let stated = row.dim.as_ref().unwrap().eval(r, k);
            details.push(detail(
                &format!("t{}:{}", row.table, row.id),
                Some((r, k)),
                stated,
                computed,
                i64::try_from(computed) == Ok(stated),
            ));
        }
    }
    Ok(CheckResult::from_details("dim-column", details))
}

/// Group rank never exceeds the index.
pub fn check_rank_lower_bound(ceiling: usize) -> CheckResult {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in &tables.t1 {
        for (r, k) in row.admissible(ceiling) {
            let rank = row.family_rank(r).unwrap() as i64;
            let value = row.value.eval(r, k);
            details.push(detail(
                &format!("t1:{}", row.id),
                Some((r, k)),
                format!("rank {rank} <= index {value}"),
                (rank <= value).to_string(),
                rank <= value,
            ));
        }
    }
    CheckResult::from_details("rank-lower-bound", details)
}

/// Finds the subalgebra-table row matching a family.
fn d_row_for(family: &(TypeLetter, Expr)) -> Option<&'static TableRow> {
    let tables = load_tables();
    tables.t3.iter().find(|t3| {
        let (l3, r3) = t3.family.as_ref().unwrap();
        *l3 == family.0 && (!matches!(family.0, TypeLetter::E) || r3.src() == family.1.src())
    })
}

/// `i_r(G) ≤ d(𝔤)` for every group, with the equality locus recorded.
pub fn check_ir_le_d(ceiling: usize) -> CheckResult {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in &tables.t2 {
        let d_row = d_row_for(row.family.as_ref().unwrap());
        for (r, k) in row.admissible(ceiling) {
            let ir = row.value.eval(r, k);
            match d_row {
                Some(d_row) => {
                    let rank = row.family_rank(r).unwrap() as i64;
                    let d = d_row.value.eval(rank, 0);
                    let relation = if ir < d {
                        "<"
                    } else if ir == d {
                        "="
                    } else {
                        ">"
                    };
                    details.push(detail(
                        &format!("t2:{}", row.id),
                        Some((r, k)),
                        format!("i_r {ir} <= d {d}"),
                        format!("i_r {relation} d"),
                        ir <= d,
                    ));
                }
                None => details.push(detail(
                    &format!("t2:{}", row.id),
                    Some((r, k)),
                    "matching d row",
                    "none",
                    false,
                )),
            }
        }
    }
    CheckResult::from_details("ir-le-d", details)
}

/// Strict inequality `i(G) < d(𝔤)` exactly for SU₂ and SU₃.
pub fn check_index_dichotomy(ceiling: usize) -> CheckResult {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in &tables.t1 {
        let d_row = d_row_for(row.family.as_ref().unwrap());
        let expect_strict = row.id == "su2" || row.id == "su3";
        for (r, k) in row.admissible(ceiling) {
            let i = row.value.eval(r, k);
            let Some(d_row) = d_row else {
                details.push(detail(
                    &format!("t1:{}", row.id),
                    Some((r, k)),
                    "matching d row",
                    "none",
                    false,
                ));
                continue;
            };
            let rank = row.family_rank(r).unwrap() as i64;
            let d = d_row.value.eval(rank, 0);
            let ok = if expect_strict { i < d } else { i == d };
            details.push(detail(
                &format!("t1:{}", row.id),
                Some((r, k)),
                if expect_strict {
                    format!("i {i} < d {d}")
                } else {
                    format!("i {i} = d {d}")
                },
                format!("i = {i}, d = {d}"),
                ok,
            ));
        }
    }
    CheckResult::from_details("index-dichotomy", details)
}

/// Table 1 equals table 2 except for the extra non-reflective Σ in the G₂
/// row.
pub fn check_table1_vs_table2() -> CheckResult {
    let tables = load_tables();
    let mut details = Vec::new();
    let mut ids_match = tables.t1.len() == tables.t2.len();
    for (r1, r2) in tables.t1.iter().zip(&tables.t2) {
        if r1.id != r2.id {
            ids_match = false;
        }
        let numeric_equal = r1.space == r2.space
            && r1.dim.as_ref().map(Expr::src) == r2.dim.as_ref().map(Expr::src)
            && r1.value.src() == r2.value.src()
            && r1.constraint.src() == r2.constraint.src()
            && r1.family == r2.family;
        let sigma_ok = if r1.id == "g2" {
            r1.sigma.len() == r2.sigma.len() + 1
                && r1.sigma[0] == "SU_3"
                && r1.sigma[1..] == r2.sigma[..]
        } else {
            r1.sigma == r2.sigma
        };
        details.push(detail(
            &format!("t1/t2:{}", r1.id),
            None,
            if r1.id == "g2" {
                "equal rows + extra SU_3"
            } else {
                "equal rows"
            },
            format!("numeric {numeric_equal}, sigma {sigma_ok}"),
            numeric_equal && sigma_ok,
        ));
    }
    let mut result = CheckResult::from_details("table1-vs-table2", details);
    result.passed &= ids_match;
    result
}

/// Noncompact dimension arithmetic through compact duals: `dim M` and
/// `i_r(M) = dim M - dim Σ` for every row.
pub fn check_table4_dimensions(cache: &AlgebraCache, ceiling: usize) -> Result<CheckResult> {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in &tables.t4 {
        let data = row.noncompact.as_ref().unwrap();
        for (r, k) in row.admissible(ceiling) {
            let dim_m = quotient_dim(cache, &data.ambient, &data.kfactors, r, k)?;
            let stated_dim = row.dim.as_ref().unwrap().eval(r, k);
            let mut dim_sigma = 0i64;
            for sf in &data.sigma_factors {
                dim_sigma += match sf {
                    SigmaFactor::Line => 1,
                    SigmaFactor::HyperbolicPlane => 2,
                    SigmaFactor::Quotient { ambient, kfactors } => {
                        quotient_dim(cache, ambient, kfactors, r, k)?
                    }
                };
            }
            let codim = dim_m - dim_sigma;
            let stated_value = row.value.eval(r, k);
            let ok = dim_m == stated_dim && codim == stated_value;
            details.push(detail(
                &format!("t4:{}", row.id),
                Some((r, k)),
                format!("dim {stated_dim}, i_r {stated_value}"),
                format!("dim {dim_m}, i_r {codim}"),
                ok,
            ));
        }
    }
    Ok(CheckResult::from_details("table4-dimensions", details))
}

/// Index columns of table 1 against the designated constructions: Cartan
/// embeddings must have `dim 𝔨 = i(G)`, subgroup models must have
/// `codim = i(G)`.
pub fn check_value_column(cache: &AlgebraCache, ceiling: usize) -> Result<CheckResult> {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in &tables.t1 {
        for (r, k) in row.admissible(ceiling) {
            let value = row.value.eval(r, k);
            let rank = row.family_rank(r).unwrap();
            for link in &row.links {
                let (codim, label) = match link {
                    Link::Involution(id) => {
                        let inv_row = crate::manifest::involution_row(id)?;
                        let pair = pair_from_row(cache, inv_row)?;
                        (cartan_embedding_codim(&pair), format!("inv:{id}"))
                    }
                    Link::Subalgebra(id) => {
                        let sub_row = crate::manifest::subalgebra_row(id)?;
                        let record = build_from_row(cache, sub_row, rank)?;
                        (record.codim, format!("sub:{id}"))
                    }
                };
                details.push(detail(
                    &format!("t1:{} {}", row.id, label),
                    Some((r, k)),
                    value,
                    codim,
                    i64::try_from(codim) == Ok(value),
                ));
            }
        }
    }
    Ok(CheckResult::from_details("value-column", details))
}

/// Cartan-embedding codimensions: every involution-manifest pair must have
/// the stated eigenspace dimensions, and `dim 𝔨` must equal the reflective
/// index of the table row it realizes.
pub fn check_cartan_embeddings(cache: &AlgebraCache) -> Result<CheckResult> {
    let tables = load_tables();
    let mut details = Vec::new();
    for row in crate::manifest::involution_rows() {
        let pair = pair_from_row(cache, row)?;
        let dims_ok = pair.k.dim() == row.dim_k && pair.m.dim() == row.dim_m;
        // the table-2 row linking to this involution
        let linked_value: Option<i64> = tables
            .t2
            .iter()
            .find(|t2| t2.links.contains(&Link::Involution(row.id.clone())))
            .map(|t2| {
                let (r, k) = t2.admissible(8)[0];
                t2.value.eval(r, k)
            });
        let codim = cartan_embedding_codim(&pair);
        let value_ok = linked_value == Some(codim as i64);
        let ir = linked_value.map_or("?".to_string(), |v| v.to_string());
        details.push(detail(
            &format!("inv:{}", row.id),
            None,
            format!("dim k {}, dim m {}, i_r {ir}", row.dim_k, row.dim_m),
            format!(
                "dim k {}, dim m {}, codim {codim}",
                pair.k.dim(),
                pair.m.dim()
            ),
            dims_ok && value_ok,
        ));
    }
    Ok(CheckResult::from_details("cartan-embeddings", details))
}

/// Serialization round-trip: reparsing the serialized tables reproduces them.
pub fn check_round_trip() -> CheckResult {
    let tables = load_tables();
    let (index, sub, noncompact) = serialize_tables(tables);
    let ok = match parse_tables(&index, &sub, &noncompact) {
        Ok(reparsed) => reparsed == *tables,
        Err(_) => false,
    };
    CheckResult {
        name: "data-round-trip",
        passed: ok,
        details: vec![detail("tables", None, "reparse == original", ok, ok)],
    }
}
