//! Command-line driver: construction queries (`dim`, `roots`, `killing`,
//! `jacobi-check`), the verification suite (`verify`), Lie-triple-system
//! checks and searches (`lts-check`, `lts-search`), and a dump of the
//! bundled tables. Exit codes: 0 success, 1 verification failure, 2 usage
//! error.

mod report;

use clap::{Parser, Subcommand, ValueEnum};

use lie_index::chevalley::{
    default_jacobi_scope, is_negative_definite, jacobi_check, killing_form, JacobiScope, LieAlgebra,
};
use lie_index::linalg::Subspace;
use lie_index::lts::{
    is_lie_triple_system, pair_from_row, search_lts, verify_sigma_tangents, SigmaOutcome,
    DEFAULT_SEED,
};
use lie_index::registry::{standard_types, AlgebraCache};
use lie_index::rootsystem::{algebra_dimension, TypeLetter};
use lie_index::subalgebra::{build_from_row, validate_record, verify_table3, Table3Outcome};
use lie_index::tables;

use report::{status_str, CheckOut, DetailOut, Report};

#[derive(Parser)]
#[command(
    name = "lie-index",
    version,
    about = "Exact verification of the indices of compact simple Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension of the simple Lie algebra of a type
    Dim { r#type: String, rank: usize },
    /// Enumerate the roots of a simple type
    Roots {
        r#type: String,
        rank: usize,
        /// print every root with its height
        #[arg(long)]
        list: bool,
    },
    /// Compute the Killing form and certify definiteness
    Killing {
        r#type: String,
        rank: usize,
        /// use the compact real form instead of the Chevalley form
        #[arg(long)]
        compact: bool,
        /// include the full matrix in the output
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the Jacobi identity on basis triples
    JacobiCheck {
        r#type: String,
        rank: usize,
        #[arg(long)]
        compact: bool,
        /// sample size for large algebras (default: exhaustive ≤ dim 52,
        /// otherwise 100000 samples plus all Cartan triples)
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// exhaustive check regardless of dimension
        #[arg(long)]
        heavy: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification checks: all, table1..table4, cross, soundness,
    /// lts, or `row <id>` for a single manifest row
    Verify {
        #[arg(default_value = "all")]
        scope: String,
        /// manifest row id, for `verify row <id>`
        id: Option<String>,
        #[arg(long, default_value_t = 8)]
        rank_ceiling: usize,
        /// run the exhaustive bracket certification for the large
        /// exceptional algebras
        #[arg(long)]
        heavy: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check one designated or random subspace for the Lie-triple-system
    /// property
    LtsCheck {
        r#type: Option<String>,
        rank: Option<usize>,
        /// manifest:<id>[@rank] — check the designated tangent model
        #[arg(long)]
        subspace_from: Option<String>,
        /// codimension of a random subspace to check instead
        #[arg(long)]
        codim: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Seeded random search for Lie triple systems of fixed codimension
    LtsSearch {
        r#type: String,
        rank: usize,
        #[arg(long)]
        codim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// manifest:<id>[@rank] — check the designated subspace instead of
        /// searching
        #[arg(long)]
        subspace_from: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Operations on the bundled tables
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
}

#[derive(Subcommand)]
enum TablesAction {
    /// Print every table row
    Dump {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_letter(token: &str) -> TypeLetter {
    let mut chars = token.chars();
    match (chars.next().and_then(TypeLetter::from_char), chars.next()) {
        (Some(letter), None) => letter,
        _ => usage_error(&format!(
            "`{token}` is not a simple type letter (expected one of A B C D E F G)"
        )),
    }
}

fn algebra(
    cache: &AlgebraCache,
    letter: TypeLetter,
    rank: usize,
    compact: bool,
) -> std::sync::Arc<LieAlgebra> {
    let result = if compact {
        cache.compact(letter, rank)
    } else {
        cache.chevalley(letter, rank)
    };
    result.unwrap_or_else(|e| usage_error(&e.to_string()))
}

fn invocation() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn emit(report: &Report, format: Format) -> ! {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Markdown => print!("{}", report.to_markdown()),
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}

fn table3_check(outcomes: &[Table3Outcome]) -> CheckOut {
    CheckOut {
        check: "table3-constructions".to_string(),
        status: status_str(outcomes.iter().all(|o| o.pass)),
        details: outcomes
            .iter()
            .map(|o| DetailOut {
                row: format!("t3:{}", o.id),
                instance: Some(format!("r={}", o.rank)),
                expected: format!("codim {}", o.expected_codim),
                actual: format!(
                    "codim {} (closed {}, center {}, components {})",
                    o.got_codim, o.closure_certified, o.center_ok, o.components_ok
                ),
                status: status_str(o.pass),
            })
            .collect(),
    }
}

fn lts_check_out(outcomes: &[SigmaOutcome]) -> CheckOut {
    CheckOut {
        check: "lts-certification".to_string(),
        status: status_str(outcomes.iter().all(|o| o.pass)),
        details: outcomes
            .iter()
            .map(|o| DetailOut {
                row: format!(
                    "{}:{}",
                    match o.kind {
                        lie_index::lts::ModelKind::CartanEmbedding => "inv",
                        lie_index::lts::ModelKind::Subgroup => "sub",
                    },
                    o.id
                ),
                instance: Some(format!("r={}", o.rank)),
                expected: format!("LTS, codim {}", o.expected_codim),
                actual: format!(
                    "LTS {}, codim {}{}",
                    o.lts_passed,
                    o.codim,
                    o.witness
                        .map(|w| format!(", witness {w:?}"))
                        .unwrap_or_default()
                ),
                status: status_str(o.pass),
            })
            .collect(),
    }
}

fn soundness_checks(cache: &AlgebraCache, ceiling: usize, heavy: bool, seed: u64) -> Vec<CheckOut> {
    let mut jacobi_details = Vec::new();
    let mut killing_details = Vec::new();
    for (letter, rank) in standard_types(ceiling) {
        let l = cache
            .compact(letter, rank)
            .unwrap_or_else(|e| usage_error(&e.to_string()));
        let scope = if heavy || l.dimension() <= 52 {
            JacobiScope::Exhaustive
        } else {
            JacobiScope::Sampled {
                samples: 100_000,
                seed,
            }
        };
        let jr = jacobi_check(&l, scope);
        jacobi_details.push(DetailOut {
            row: format!("{letter}{rank}"),
            instance: None,
            expected: "no failing triple".to_string(),
            actual: format!(
                "{} triples checked, failure {:?}",
                jr.triples_checked, jr.failure
            ),
            status: status_str(jr.failure.is_none()),
        });
        let form = killing_form(&l);
        let neg = is_negative_definite(&form).expect("killing form is symmetric");
        killing_details.push(DetailOut {
            row: format!("{letter}{rank}"),
            instance: None,
            expected: "negative definite".to_string(),
            actual: format!("negative definite: {neg}"),
            status: status_str(neg),
        });
    }
    let mut automorphism_details = Vec::new();
    for row in lie_index::manifest::involution_rows() {
        // construction certifies bracket preservation and involutivity
        let pair = pair_from_row(cache, row).unwrap_or_else(|e| usage_error(&e.to_string()));
        automorphism_details.push(DetailOut {
            row: format!("inv:{}", row.id),
            instance: None,
            expected: "bracket-preserving involution".to_string(),
            actual: format!("certified, involutive {}", pair.sigma.is_involutive()),
            status: status_str(pair.sigma.is_involutive()),
        });
    }
    let wrap = |check: &str, details: Vec<DetailOut>| CheckOut {
        check: check.to_string(),
        status: status_str(details.iter().all(|d| d.status == "pass")),
        details,
    };
    vec![
        wrap("jacobi", jacobi_details),
        wrap("killing-definiteness", killing_details),
        wrap("automorphism-certification", automorphism_details),
    ]
}

fn run_verify(
    scope: &str,
    id: Option<String>,
    ceiling: usize,
    heavy: bool,
    seed: u64,
    format: Format,
) -> ! {
    let cache = AlgebraCache::new();
    let mut checks: Vec<CheckOut> = Vec::new();
    let fail = |e: lie_index::Error| -> ! { usage_error(&e.to_string()) };
    match scope {
        "all" => {
            checks.push((&tables::check_dim_column(&cache, ceiling).unwrap_or_else(|e| fail(e))).into());
            checks.push((&tables::check_rank_lower_bound(ceiling)).into());
            checks.push((&tables::check_table1_vs_table2()).into());
            checks.push((&tables::check_ir_le_d(ceiling)).into());
            checks.push((&tables::check_index_dichotomy(ceiling)).into());
            checks.push((&tables::check_round_trip()).into());
            checks.push(
                (&tables::check_cartan_embeddings(&cache).unwrap_or_else(|e| fail(e))).into(),
            );
            let outcomes = verify_table3(&cache, ceiling).unwrap_or_else(|e| fail(e));
            checks.push(table3_check(&outcomes));
            checks
                .push((&tables::check_table4_dimensions(&cache, ceiling).unwrap_or_else(|e| fail(e))).into());
            checks.push((&tables::check_value_column(&cache, ceiling).unwrap_or_else(|e| fail(e))).into());
            let sigma = verify_sigma_tangents(&cache, ceiling).unwrap_or_else(|e| fail(e));
            checks.push(lts_check_out(&sigma));
            checks.extend(soundness_checks(&cache, ceiling, heavy, seed));
        }
        "table1" => {
            checks.push((&tables::check_dim_column(&cache, ceiling).unwrap_or_else(|e| fail(e))).into());
            checks.push((&tables::check_rank_lower_bound(ceiling)).into());
            checks.push((&tables::check_table1_vs_table2()).into());
        }
        "table2" => {
            checks.push(
                (&tables::check_cartan_embeddings(&cache).unwrap_or_else(|e| fail(e))).into(),
            );
        }
        "table3" => {
            let outcomes = verify_table3(&cache, ceiling).unwrap_or_else(|e| fail(e));
            checks.push(table3_check(&outcomes));
        }
        "table4" => {
            checks
                .push((&tables::check_table4_dimensions(&cache, ceiling).unwrap_or_else(|e| fail(e))).into());
        }
        "cross" => {
            checks.push((&tables::check_ir_le_d(ceiling)).into());
            checks.push((&tables::check_index_dichotomy(ceiling)).into());
            checks.push((&tables::check_table1_vs_table2()).into());
            checks.push((&tables::check_rank_lower_bound(ceiling)).into());
            checks.push((&tables::check_round_trip()).into());
        }
        "soundness" => checks.extend(soundness_checks(&cache, ceiling, heavy, seed)),
        "lts" => {
            let sigma = verify_sigma_tangents(&cache, ceiling).unwrap_or_else(|e| fail(e));
            checks.push(lts_check_out(&sigma));
        }
        "row" => {
            let Some(id) = id else {
                usage_error("`verify row` needs a manifest row id");
            };
            checks.push(verify_single_row(&cache, &id, ceiling));
        }
        other => usage_error(&format!(
            "unknown scope `{other}` (expected all, table1..table4, cross, soundness, lts, row <id>)"
        )),
    }
    emit(&Report::new(invocation(), checks), format)
}

fn verify_single_row(cache: &AlgebraCache, id: &str, ceiling: usize) -> CheckOut {
    if let Ok(row) = lie_index::manifest::subalgebra_row(id) {
        let mut outcomes = Vec::new();
        for rank in row.instantiations(ceiling) {
            let record =
                build_from_row(cache, row, rank).unwrap_or_else(|e| usage_error(&e.to_string()));
            let mut outcome = validate_record(cache, row, rank, &record);
            let lts =
                is_lie_triple_system(&record.ambient, &record.subspace).expect("dimensions agree");
            outcome.pass &= lts.passed;
            outcomes.push(outcome);
        }
        return table3_check(&outcomes);
    }
    if let Ok(row) = lie_index::manifest::involution_row(id) {
        let pair = pair_from_row(cache, row).unwrap_or_else(|e| usage_error(&e.to_string()));
        let lts = is_lie_triple_system(&pair.algebra, &pair.m).expect("dimensions agree");
        let codim = lie_index::involution::cartan_embedding_codim(&pair);
        let ok = lts.passed && codim == row.dim_k && pair.m.dim() == row.dim_m;
        return CheckOut {
            check: "manifest-row".to_string(),
            status: status_str(ok),
            details: vec![DetailOut {
                row: format!("inv:{id}"),
                instance: None,
                expected: format!("LTS, dim k {}, dim m {}", row.dim_k, row.dim_m),
                actual: format!(
                    "LTS {}, dim k {}, dim m {}",
                    lts.passed,
                    codim,
                    pair.m.dim()
                ),
                status: status_str(ok),
            }],
        };
    }
    usage_error(&format!("unknown manifest row `{id}`"))
}

/// Renders a subspace basis compactly for reports.
fn subspace_string(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis_rows()
        .iter()
        .map(|row| {
            let entries: Vec<String> = row.iter().map(|(i, v)| format!("{i}:{v}")).collect();
            format!("[{}]", entries.join(" "))
        })
        .collect();
    rows.join(" ")
}

fn resolve_designated(
    cache: &AlgebraCache,
    spec: &str,
    ceiling: usize,
) -> (std::sync::Arc<LieAlgebra>, Subspace, String) {
    let Some(rest) = spec.strip_prefix("manifest:") else {
        usage_error("--subspace-from expects manifest:<id>[@rank]");
    };
    let (id, rank_override) = match rest.split_once('@') {
        Some((id, rank)) => (
            id,
            Some(
                rank.parse::<usize>()
                    .unwrap_or_else(|_| usage_error("bad rank override in --subspace-from")),
            ),
        ),
        None => (rest, None),
    };
    if let Ok(row) = lie_index::manifest::subalgebra_row(id) {
        let rank = rank_override.unwrap_or_else(|| row.instantiations(ceiling)[0]);
        let record =
            build_from_row(cache, row, rank).unwrap_or_else(|e| usage_error(&e.to_string()));
        let label = format!("sub:{id}@{rank} (codim {})", record.codim);
        return (record.ambient.clone(), record.subspace, label);
    }
    if let Ok(row) = lie_index::manifest::involution_row(id) {
        let pair = pair_from_row(cache, row).unwrap_or_else(|e| usage_error(&e.to_string()));
        let label = format!("inv:{id} (m, codim of embedding {})", pair.k.dim());
        return (pair.algebra.clone(), pair.m, label);
    }
    usage_error(&format!("unknown manifest row `{id}`"))
}

fn main() {
    let cli = Cli::parse();
    let cache = AlgebraCache::new();
    match cli.command {
        Command::Dim { r#type, rank } => {
            let letter = parse_letter(&r#type);
            let rs = cache
                .root_system(letter, rank)
                .unwrap_or_else(|e| usage_error(&e.to_string()));
            println!("{}", algebra_dimension(&rs));
        }
        Command::Roots { r#type, rank, list } => {
            let letter = parse_letter(&r#type);
            let rs = cache
                .root_system(letter, rank)
                .unwrap_or_else(|e| usage_error(&e.to_string()));
            println!(
                "{}{}: {} roots ({} positive), highest root {}, dimension {}",
                letter,
                rank,
                rs.roots().len(),
                rs.positive_count(),
                rs.highest_root(),
                algebra_dimension(&rs)
            );
            if list {
                for root in rs.roots() {
                    println!("{root} height {}", root.height());
                }
            }
        }
        Command::Killing {
            r#type,
            rank,
            compact,
            full,
            format,
        } => {
            let letter = parse_letter(&r#type);
            let l = algebra(&cache, letter, rank, compact);
            let form = killing_form(&l);
            let neg = is_negative_definite(&form).expect("killing form is symmetric");
            let mut details = vec![DetailOut {
                row: format!(
                    "{letter}{rank} {}",
                    if compact { "compact" } else { "chevalley" }
                ),
                instance: None,
                expected: if compact {
                    "negative definite".to_string()
                } else {
                    "computed".to_string()
                },
                actual: format!("dim {}, negative definite: {neg}", l.dimension()),
                status: status_str(!compact || neg),
            }];
            if full || l.dimension() <= 12 {
                for i in 0..form.matrix.rows {
                    let row: Vec<String> = (0..form.matrix.cols)
                        .map(|j| form.matrix.get(i, j).to_string())
                        .collect();
                    details.push(DetailOut {
                        row: l.label_string(i),
                        instance: None,
                        expected: "-".to_string(),
                        actual: row.join(" "),
                        status: "pass".to_string(),
                    });
                }
            }
            let report = Report::new(
                invocation(),
                vec![CheckOut {
                    check: "killing-form".to_string(),
                    status: status_str(!compact || neg),
                    details,
                }],
            );
            emit(&report, format)
        }
        Command::JacobiCheck {
            r#type,
            rank,
            compact,
            samples,
            seed,
            heavy,
            format,
        } => {
            let letter = parse_letter(&r#type);
            let l = algebra(&cache, letter, rank, compact);
            let scope = if heavy {
                JacobiScope::Exhaustive
            } else if let Some(samples) = samples {
                JacobiScope::Sampled { samples, seed }
            } else {
                default_jacobi_scope(l.dimension())
            };
            let jr = jacobi_check(&l, scope);
            let report = Report::new(
                invocation(),
                vec![CheckOut {
                    check: "jacobi".to_string(),
                    status: status_str(jr.failure.is_none()),
                    details: vec![DetailOut {
                        row: format!("{letter}{rank}"),
                        instance: None,
                        expected: "no failing triple".to_string(),
                        actual: format!(
                            "{} triples checked, failure {:?}",
                            jr.triples_checked, jr.failure
                        ),
                        status: status_str(jr.failure.is_none()),
                    }],
                }],
            );
            emit(&report, format)
        }
        Command::Verify {
            scope,
            id,
            rank_ceiling,
            heavy,
            seed,
            format,
        } => run_verify(&scope, id, rank_ceiling, heavy, seed, format),
        Command::LtsCheck {
            r#type,
            rank,
            subspace_from,
            codim,
            seed,
            format,
        } => {
            let (l, s, label) = match (&subspace_from, &r#type, &rank) {
                (Some(spec), _, _) => resolve_designated(&cache, spec, 8),
                (None, Some(t), Some(rk)) => {
                    let Some(codim) = codim else {
                        usage_error("lts-check without --subspace-from needs --codim");
                    };
                    let letter = parse_letter(t);
                    let l = algebra(&cache, letter, *rk, true);
                    let s = lie_index::lts::random_subspace(&l, codim, seed)
                        .unwrap_or_else(|e| usage_error(&e.to_string()));
                    let label = format!("random codim {codim} seed {seed}");
                    (l, s, label)
                }
                _ => usage_error("lts-check needs --subspace-from or TYPE RANK --codim"),
            };
            let lts = is_lie_triple_system(&l, &s).expect("dimensions agree");
            let report = Report::new(
                invocation(),
                vec![CheckOut {
                    check: "lts-check".to_string(),
                    status: status_str(lts.passed),
                    details: vec![DetailOut {
                        row: label,
                        instance: None,
                        expected: "Lie triple system".to_string(),
                        actual: format!(
                            "passed {}{}",
                            lts.passed,
                            lts.witness
                                .map(|w| format!(", witness {w:?}"))
                                .unwrap_or_default()
                        ),
                        status: status_str(lts.passed),
                    }],
                }],
            );
            emit(&report, format)
        }
        Command::LtsSearch {
            r#type,
            rank,
            codim,
            trials,
            seed,
            subspace_from,
            format,
        } => {
            if let Some(spec) = subspace_from {
                let (l, s, label) = resolve_designated(&cache, &spec, 8);
                let lts = is_lie_triple_system(&l, &s).expect("dimensions agree");
                let report = Report::new(
                    invocation(),
                    vec![CheckOut {
                        check: "lts-search".to_string(),
                        status: status_str(lts.passed),
                        details: vec![DetailOut {
                            row: label,
                            instance: None,
                            expected: "Lie triple system".to_string(),
                            actual: format!("passed {}", lts.passed),
                            status: status_str(lts.passed),
                        }],
                    }],
                );
                emit(&report, format)
            }
            let letter = parse_letter(&r#type);
            let l = algebra(&cache, letter, rank, true);
            let sr =
                search_lts(&l, codim, trials, seed).unwrap_or_else(|e| usage_error(&e.to_string()));
            let mut details = vec![DetailOut {
                row: format!("{letter}{rank} codim {codim}"),
                instance: None,
                expected: "-".to_string(),
                actual: format!(
                    "successes {}/{} (seed {})",
                    sr.successes, sr.trials, sr.seed
                ),
                status: "pass".to_string(),
            }];
            for (i, example) in sr.success_examples.iter().enumerate() {
                details.push(DetailOut {
                    row: format!("example {i}"),
                    instance: None,
                    expected: "-".to_string(),
                    actual: subspace_string(example),
                    status: "pass".to_string(),
                });
            }
            let report = Report::new(
                invocation(),
                vec![CheckOut {
                    check: "lts-search".to_string(),
                    status: "pass".to_string(),
                    details,
                }],
            );
            emit(&report, format)
        }
        Command::Tables { action } => match action {
            TablesAction::Dump { format } => {
                let loaded = tables::load_tables();
                let details: Vec<DetailOut> = loaded
                    .all()
                    .map(|row| DetailOut {
                        row: format!("t{}:{}", row.table, row.id),
                        instance: None,
                        expected: "-".to_string(),
                        actual: format!(
                            "{} | Σ = {} | dim {} | value {} | {}",
                            row.space,
                            row.sigma.join(", "),
                            row.dim
                                .as_ref()
                                .map_or("-".to_string(), |d| d.src().to_string()),
                            row.value.src(),
                            if row.constraint.is_empty() {
                                "-".to_string()
                            } else {
                                row.constraint.src().to_string()
                            }
                        ),
                        status: "pass".to_string(),
                    })
                    .collect();
                let report = Report::new(
                    invocation(),
                    vec![CheckOut {
                        check: "tables-dump".to_string(),
                        status: "pass".to_string(),
                        details,
                    }],
                );
                emit(&report, format)
            }
        },
    }
}
