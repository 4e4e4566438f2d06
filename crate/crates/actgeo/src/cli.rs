//! Command surface: parses expressions and representation files, drives
//! the engines and emits deterministic reports.
//!
//! Exit codes: 0 = computed true / success, 1 = computed false / witness
//! found, 2 = usage or budget error.

use crate::error::{Error, Result};
use crate::fox;
use crate::fpmat::FpMatrix;
use crate::geometry::{self, Conclusion, EquationSet, QuasiIdentity, RefuteBounds};
use crate::module::FreeModuleElement;
use crate::operators::{self, FilterSpec};
use crate::parse::{parse_module_expr, parse_ring_expr, parse_word};
use crate::rep::{self, FiniteRepresentation};
use crate::repfile::RepFile;
use crate::scalar::Field;
use crate::word::Word;
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "actgeo", version, about = "exact workbench for action-type algebraic geometry over finite representations")]
struct Cli {
    /// Output format: text or line-delimited records
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Worker threads for parallel searches
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Point-enumeration budget (env ACTGEO_MAX_POINTS overrides the default)
    #[arg(long, global = true)]
    max_points: Option<u128>,
    /// Group-closure size bound
    #[arg(long, global = true, default_value_t = rep::DEFAULT_GROUP_BOUND)]
    max_group: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArg {
    /// Coefficient field: `q` or a prime p
    #[arg(long, default_value = "q")]
    field: String,
}

impl FieldArg {
    fn field(&self) -> Result<Field> {
        if self.field.eq_ignore_ascii_case("q") {
            Ok(Field::Q)
        } else {
            let p: u64 = self
                .field
                .parse()
                .map_err(|_| Error::Other(format!("bad field spec '{}'", self.field)))?;
            Field::prime(p)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Fox derivative of a ring expression
    Fox {
        /// Generator index to derive by
        #[arg(long)]
        var: usize,
        expr: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Taylor expansion of a ring expression to a given degree
    Taylor {
        expr: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Alphabet size (defaults to the largest index in the expression)
        #[arg(long)]
        gens: Option<usize>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Coordinates in KF(Y)/Delta^n
    Truncate {
        expr: String,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        gens: Option<usize>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Evaluate a module expression at a point of a representation
    Eval {
        rep: PathBuf,
        #[arg(long)]
        expr: String,
        /// Vectors for x1,x2,...: entries comma-separated, vectors by ';'
        #[arg(long)]
        alpha: String,
        /// Element indices for y1,y2,...: comma-separated
        #[arg(long)]
        beta: String,
    },
    /// The algebraic set of an equation system
    Vset {
        rep: PathBuf,
        #[arg(long = "eq")]
        eqs: Vec<String>,
        #[arg(long = "group-eq")]
        group_eqs: Vec<String>,
        #[arg(long)]
        nx: Option<usize>,
        #[arg(long)]
        ny: Option<usize>,
    },
    /// Closure membership: target in T^{nabla nabla}
    Closure {
        rep: PathBuf,
        #[arg(long = "eq")]
        eqs: Vec<String>,
        #[arg(long = "group-eq")]
        group_eqs: Vec<String>,
        #[arg(long)]
        target: String,
        #[arg(long)]
        nx: Option<usize>,
        #[arg(long)]
        ny: Option<usize>,
    },
    /// Check an action-type quasi-identity by point enumeration
    Qcheck {
        rep: PathBuf,
        #[arg(long = "premise")]
        premises: Vec<String>,
        #[arg(long = "group-premise")]
        group_premises: Vec<String>,
        #[arg(long, conflicts_with = "group_conclusion")]
        conclusion: Option<String>,
        #[arg(long)]
        group_conclusion: Option<String>,
        #[arg(long)]
        nx: Option<usize>,
        #[arg(long)]
        ny: Option<usize>,
    },
    /// Bounded refuter for action-type geometric equivalence
    Equiv {
        rep1: PathBuf,
        rep2: PathBuf,
        #[arg(long, default_value_t = 1)]
        nx: usize,
        #[arg(long, default_value_t = 1)]
        ny: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_premises: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        case_budget: u64,
        /// Also report the bi-sided group-equation comparison
        #[arg(long)]
        group_side: bool,
    },
    /// Closure signatures along a chain of growing equation sets
    Chain {
        rep: PathBuf,
        /// One equation set per flag: module expressions joined by ';'
        #[arg(long = "set")]
        sets: Vec<String>,
        #[arg(long)]
        nx: Option<usize>,
        #[arg(long)]
        ny: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
    /// Annihilator of module vectors in the group algebra
    Ann {
        rep: PathBuf,
        /// Vectors: entries comma-separated, vectors by ';'
        #[arg(long)]
        vectors: String,
    },
    /// Stabilizer 1 + ann, with group-element membership
    Stab {
        rep: PathBuf,
        #[arg(long)]
        vectors: String,
    },
    /// Kernel of the action
    Ker { rep: PathBuf },
    /// The regular representation (KG, G)
    Regular {
        rep: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Quotient module KG/U with the induced action
    Quotmod {
        rep: PathBuf,
        /// Right-ideal spanning vectors in KG coordinates
        #[arg(long)]
        ideal: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Cartesian product of representations
    Product {
        reps: Vec<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Filtered product over a finite index set
    Fprod {
        reps: Vec<PathBuf>,
        /// Filter member sets: indices comma-separated, sets by ';'
        #[arg(long)]
        filter: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Generated subrepresentation
    Subrep {
        rep: PathBuf,
        #[arg(long, default_value = "")]
        module_gens: String,
        /// Element indices, comma-separated
        #[arg(long, default_value = "")]
        group_gens: String,
    },
    /// Quotient of the acting group by a normal subgroup in the kernel
    Quot {
        rep: PathBuf,
        /// Element indices of N, comma-separated
        #[arg(long)]
        normal: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Inflation along an epimorphism from a larger realized group
    Inflate {
        rep: PathBuf,
        /// Generator matrices of the larger group, JSON rows, repeatable
        #[arg(long = "group-gen")]
        group_gens: Vec<String>,
        /// Image element indices, comma-separated
        #[arg(long)]
        map: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Faithful image (V, G/ker)
    Faithful {
        rep: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

/// Accumulates both the human-readable report and the machine records.
struct Report {
    records: bool,
    out: String,
}

impl Report {
    fn new(records: bool) -> Report {
        Report {
            records,
            out: String::new(),
        }
    }

    fn line(&mut self, text: &str) {
        if !self.records {
            let _ = writeln!(self.out, "{text}");
        }
    }

    fn record(&mut self, key: &str, value: &str) {
        if self.records {
            let _ = writeln!(self.out, "{key}={value}");
        }
    }

    fn both(&mut self, key: &str, value: &str) {
        self.line(&format!("{key}: {value}"));
        self.record(key, value);
    }
}

fn parse_vectors(text: &str) -> Result<Vec<Vec<u64>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|v| {
            v.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Other(format!("bad vector entry '{x}'")))
                })
                .collect()
        })
        .collect()
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Other(format!("bad index '{x}'")))
        })
        .collect()
}

fn point_budget(cli_value: Option<u128>) -> u128 {
    cli_value
        .or_else(|| {
            std::env::var("ACTGEO_MAX_POINTS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(geometry::DEFAULT_POINT_BUDGET)
}

/// Infers |X|, |Y| from the equations when not given explicitly.
fn infer_shape(
    eqs: &[FreeModuleElement],
    words: &[Word],
    nx: Option<usize>,
    ny: Option<usize>,
) -> (usize, usize) {
    let nx = nx.unwrap_or_else(|| {
        eqs.iter()
            .map(FreeModuleElement::max_module_generator)
            .max()
            .unwrap_or(1)
            .max(1)
    });
    let ny = ny.unwrap_or_else(|| {
        eqs.iter()
            .map(FreeModuleElement::max_group_generator)
            .chain(words.iter().map(Word::max_generator))
            .max()
            .unwrap_or(1)
            .max(1)
    });
    (nx, ny)
}

fn fmt_vector(v: &[u64]) -> String {
    v.iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn save_rep(rep: &FiniteRepresentation, out: &PathBuf) -> Result<()> {
    RepFile::from_rep(rep).save(out)
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    if cli.workers > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
    }
    let records = cli.format == "records";
    let mut report = Report::new(records);
    match dispatch(&cli, &mut report) {
        Ok(code) => {
            print!("{}", report.out);
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, rpt: &mut Report) -> Result<i32> {
    let budget = point_budget(cli.max_points);
    let bound = cli.max_group;
    let load = |p: &PathBuf| crate::repfile::load_rep(p, bound);

    match &cli.command {
        Command::Fox { var, expr, field } => {
            let f = field.field()?;
            let u = parse_ring_expr(expr, f)?;
            let d = fox::fox_derive(*var, &u)?;
            rpt.both("result", &d.to_string());
            Ok(0)
        }
        Command::Taylor {
            expr,
            degree,
            gens,
            field,
        } => {
            let f = field.field()?;
            let u = parse_ring_expr(expr, f)?;
            let t = fox::taylor_expand(&u, *degree, *gens)?;
            for (seq, c) in &t.head {
                rpt.line(&format!("head {seq:?}: {c}"));
                rpt.record(&format!("head.{}", fmt_seq(seq)), &c.to_string());
            }
            for (seq, e) in &t.tail {
                rpt.line(&format!("tail {seq:?}: {e}"));
                rpt.record(&format!("tail.{}", fmt_seq(seq)), &e.to_string());
            }
            let ok = t.reconstruct()? == u;
            rpt.both("reconstructs", if ok { "true" } else { "false" });
            Ok(if ok { 0 } else { 1 })
        }
        Command::Truncate {
            expr,
            bound: n,
            gens,
            field,
        } => {
            let f = field.field()?;
            let u = parse_ring_expr(expr, f)?;
            let m = gens.unwrap_or_else(|| u.max_generator().max(1));
            let t = fox::truncate(&u, *n, m)?;
            rpt.both("dimension", &t.ambient_dimension().to_string());
            rpt.both("coordinates", &t.to_string());
            Ok(0)
        }
        Command::Eval {
            rep,
            expr,
            alpha,
            beta,
        } => {
            let rep = load(rep)?;
            let w = parse_module_expr(expr, rep.field())?;
            let alpha = parse_vectors(alpha)?;
            let beta = parse_indices(beta)?;
            let v = rep.eval_point(&alpha, &beta, &w)?;
            rpt.both("result", &fmt_vector(&v));
            Ok(0)
        }
        Command::Vset {
            rep,
            eqs,
            group_eqs,
            nx,
            ny,
        } => {
            let rep = load(rep)?;
            let t = build_equation_set(&rep, eqs, group_eqs)?;
            let (nx, ny) = infer_shape(&t.action, &t.group, *nx, *ny);
            let set = geometry::algebraic_set(&rep, &t, nx, ny, budget)?;
            rpt.both("points", &set.len().to_string());
            rpt.record(
                "points_enumerated",
                &geometry::point_count(&rep, nx, ny).to_string(),
            );
            for pt in &set {
                let alphas = pt
                    .alpha
                    .iter()
                    .map(|v| fmt_vector(v))
                    .collect::<Vec<_>>()
                    .join(";");
                let betas = pt
                    .beta
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                rpt.line(&format!("alpha=[{alphas}] beta=[{betas}]"));
                rpt.record("point", &format!("[{alphas}]|[{betas}]"));
            }
            Ok(0)
        }
        Command::Closure {
            rep,
            eqs,
            group_eqs,
            target,
            nx,
            ny,
        } => {
            let rep = load(rep)?;
            let t = build_equation_set(&rep, eqs, group_eqs)?;
            let w0 = parse_module_expr(target, rep.field())?;
            let (nx, ny) = infer_shape(
                &[t.action.clone(), vec![w0.clone()]].concat(),
                &t.group,
                *nx,
                *ny,
            );
            let member = geometry::closure_member(&rep, &t, &w0, nx, ny, budget)?;
            rpt.both("result", if member { "HOLDS" } else { "FAILS" });
            Ok(if member { 0 } else { 1 })
        }
        Command::Qcheck {
            rep,
            premises,
            group_premises,
            conclusion,
            group_conclusion,
            nx,
            ny,
        } => {
            let rep = load(rep)?;
            let prem: Vec<FreeModuleElement> = premises
                .iter()
                .map(|s| parse_module_expr(s, rep.field()))
                .collect::<Result<_>>()?;
            let gprem: Vec<Word> = group_premises
                .iter()
                .map(|s| parse_word(s))
                .collect::<Result<_>>()?;
            let conclusion = match (conclusion, group_conclusion) {
                (Some(c), None) => Conclusion::Module(parse_module_expr(c, rep.field())?),
                (None, Some(f)) => Conclusion::Group(parse_word(f)?),
                _ => {
                    return Err(Error::Other(
                        "exactly one of --conclusion / --group-conclusion required".into(),
                    ))
                }
            };
            let mut all_eqs = prem.clone();
            let mut all_words = gprem.clone();
            match &conclusion {
                Conclusion::Module(w) => all_eqs.push(w.clone()),
                Conclusion::Group(f) => all_words.push(f.clone()),
            }
            let (nx, ny) = infer_shape(&all_eqs, &all_words, *nx, *ny);
            let q = QuasiIdentity {
                premises: prem,
                group_premises: gprem,
                conclusion,
            };
            let holds = geometry::check_quasi_identity(&rep, &q, nx, ny, budget)?;
            rpt.both("result", if holds { "HOLDS" } else { "FAILS" });
            Ok(if holds { 0 } else { 1 })
        }
        Command::Equiv {
            rep1,
            rep2,
            nx,
            ny,
            max_len,
            max_premises,
            seed,
            case_budget,
            group_side,
        } => {
            let r1 = load(rep1)?;
            let r2 = load(rep2)?;
            let bounds = RefuteBounds {
                nx: *nx,
                ny: *ny,
                max_premises: *max_premises,
                max_len: *max_len,
                point_budget: budget,
                case_budget: *case_budget,
                seed: *seed,
            };
            let outcome = geometry::refute_equivalence(&r1, &r2, &bounds)?;
            rpt.record("seed", &outcome.seed.to_string());
            rpt.record("sampled", &outcome.sampled.to_string());
            rpt.record("cases", &outcome.cases_tested.to_string());
            rpt.line(&format!(
                "search: {} cases, seed {}{}",
                outcome.cases_tested,
                outcome.seed,
                if outcome.sampled { " (sampled)" } else { "" }
            ));
            let code = match &outcome.witness {
                Some(w) => {
                    let side = if w.closed_in_first { "first" } else { "second" };
                    let prems = w
                        .premises
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join("; ");
                    rpt.both("result", "WITNESS");
                    rpt.both("witness", &w.w0.to_string());
                    rpt.both("witness_premises", &format!("[{prems}]"));
                    rpt.both("closed_in", side);
                    1
                }
                None => {
                    rpt.both("result", "NONE");
                    0
                }
            };
            if *group_side {
                match geometry::find_group_equation_witness(&r1, &r2, *ny, *max_len, budget)? {
                    Some((f, first)) => {
                        rpt.both("group_witness", &f.to_string());
                        rpt.both(
                            "group_identity_in",
                            if first { "first" } else { "second" },
                        );
                    }
                    None => rpt.both("group_witness", "NONE"),
                }
            }
            Ok(code)
        }
        Command::Chain {
            rep,
            sets,
            nx,
            ny,
            max_len,
        } => {
            let rep = load(rep)?;
            let mut parsed: Vec<EquationSet> = Vec::new();
            for s in sets {
                let eqs: Vec<FreeModuleElement> = s
                    .split(';')
                    .filter(|e| !e.trim().is_empty())
                    .map(|e| parse_module_expr(e.trim(), rep.field()))
                    .collect::<Result<_>>()?;
                parsed.push(EquationSet::action_only(eqs));
            }
            let all: Vec<FreeModuleElement> =
                parsed.iter().flat_map(|t| t.action.clone()).collect();
            let (nx, ny) = infer_shape(&all, &[], *nx, *ny);
            let mut prev: Option<Vec<bool>> = None;
            let mut monotone = true;
            let mut stable_from = 0usize;
            for (i, t) in parsed.iter().enumerate() {
                let sig =
                    geometry::closed_submodule_signature(&rep, t, nx, ny, *max_len, budget)?;
                let bits: String = sig.iter().map(|&b| if b { '1' } else { '0' }).collect();
                rpt.line(&format!("signature[{i}]: {bits}"));
                rpt.record(&format!("signature.{i}"), &bits);
                if let Some(p) = &prev {
                    if p.iter().zip(&sig).any(|(a, b)| *a && !b) {
                        monotone = false;
                    }
                    if *p != sig {
                        stable_from = i;
                    }
                }
                prev = Some(sig);
            }
            rpt.both("monotone", &monotone.to_string());
            rpt.both("stable_from", &stable_from.to_string());
            Ok(if monotone { 0 } else { 1 })
        }
        Command::Ann { rep, vectors } => {
            let rep = load(rep)?;
            let vs = parse_vectors(vectors)?;
            let ann = rep::annihilator(&rep, &vs)?;
            rpt.both("rank", &ann.space.rank().to_string());
            rpt.both("two_sided", &ann.two_sided.to_string());
            for r in ann.space.rows() {
                rpt.both("basis", &fmt_vector(r));
            }
            Ok(0)
        }
        Command::Stab { rep, vectors } => {
            let rep = load(rep)?;
            let vs = parse_vectors(vectors)?;
            let st = rep::stabilizer(&rep, &vs)?;
            rpt.both("ann_rank", &st.ann.space.rank().to_string());
            for r in st.ann.space.rows() {
                rpt.both("ann_basis", &fmt_vector(r));
            }
            let members: Vec<String> = (0..rep.size())
                .filter(|&g| st.contains_element(&rep, g))
                .map(|g| g.to_string())
                .collect();
            rpt.both("group_members", &members.join(","));
            Ok(0)
        }
        Command::Ker { rep } => {
            let rep = load(rep)?;
            let ker = rep.action_kernel();
            rpt.both(
                "kernel",
                &ker.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            rpt.both("order", &ker.len().to_string());
            Ok(0)
        }
        Command::Regular { rep, out } => {
            let rep = load(rep)?;
            let reg = rep::regular_representation(&rep);
            save_rep(&reg, out)?;
            rpt.both("size", &reg.size().to_string());
            rpt.both("dimension", &reg.action_dim().to_string());
            Ok(0)
        }
        Command::Quotmod { rep, ideal, out } => {
            let rep = load(rep)?;
            let reg = rep::regular_representation(&rep);
            let u = rep::right_ideal(&reg, &parse_vectors(ideal)?)?;
            let q = rep::quotient_module_representation(&reg, &u)?;
            save_rep(&q, out)?;
            rpt.both("ideal_rank", &u.space.rank().to_string());
            rpt.both("dimension", &q.action_dim().to_string());
            Ok(0)
        }
        Command::Product { reps, out } => {
            let loaded: Vec<FiniteRepresentation> =
                reps.iter().map(load).collect::<Result<_>>()?;
            let p = loaded
                .first()
                .map(FiniteRepresentation::p)
                .ok_or_else(|| Error::Other("at least one representation required".into()))?;
            let refs: Vec<&FiniteRepresentation> = loaded.iter().collect();
            let prod = operators::cartesian_product(p, &refs)?;
            save_rep(&prod, out)?;
            rpt.both("size", &prod.size().to_string());
            rpt.both("dimension", &prod.action_dim().to_string());
            Ok(0)
        }
        Command::Fprod { reps, filter, out } => {
            let loaded: Vec<FiniteRepresentation> =
                reps.iter().map(load).collect::<Result<_>>()?;
            let refs: Vec<&FiniteRepresentation> = loaded.iter().collect();
            let members: Vec<BTreeSet<usize>> = filter
                .split(';')
                .map(|s| parse_indices(s).map(|v| v.into_iter().collect()))
                .collect::<Result<_>>()?;
            let spec = FilterSpec {
                index_count: refs.len(),
                members,
            };
            let shortcut = operators::filtered_product(&refs, &spec)?;
            let literal = operators::filtered_product_literal(&refs, &spec)?;
            let agree = operators::same_evaluation_tables(&shortcut, &literal);
            save_rep(&shortcut, out)?;
            rpt.both(
                "core",
                &spec
                    .core()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            rpt.both("size", &shortcut.size().to_string());
            rpt.both("literal_agrees", &agree.to_string());
            Ok(if agree { 0 } else { 1 })
        }
        Command::Subrep {
            rep,
            module_gens,
            group_gens,
        } => {
            let rep = load(rep)?;
            let sub = operators::generated_subrepresentation(
                &rep,
                &parse_vectors(module_gens)?,
                &parse_indices(group_gens)?,
            );
            rpt.both("module_rank", &sub.module_part.rank().to_string());
            rpt.both("group_order", &sub.group_part.len().to_string());
            Ok(0)
        }
        Command::Quot { rep, normal, out } => {
            let rep = load(rep)?;
            let q = operators::qr_quotient(&rep, &parse_indices(normal)?)?;
            save_rep(&q, out)?;
            rpt.both("size", &q.size().to_string());
            Ok(0)
        }
        Command::Inflate {
            rep,
            group_gens,
            map,
            out,
        } => {
            let rep = load(rep)?;
            let gens: Vec<FpMatrix> = group_gens
                .iter()
                .map(|s| {
                    let rows: Vec<Vec<i64>> = serde_json::from_str(s)
                        .map_err(|e| Error::Other(format!("bad matrix JSON: {e}")))?;
                    let n = rows.len();
                    if rows.iter().any(|r| r.len() != n) {
                        return Err(Error::DimensionMismatch("group generator".into()));
                    }
                    Ok(FpMatrix::new(
                        rep.p(),
                        n,
                        n,
                        rows.iter()
                            .flatten()
                            .map(|&x| x.rem_euclid(rep.p() as i64) as u64)
                            .collect(),
                    ))
                })
                .collect::<Result<_>>()?;
            let inflated = operators::q0_inflation(&rep, &gens, &parse_indices(map)?)?;
            save_rep(&inflated, out)?;
            rpt.both("size", &inflated.size().to_string());
            rpt.both("kernel_order", &inflated.action_kernel().len().to_string());
            Ok(0)
        }
        Command::Faithful { rep, out } => {
            let rep = load(rep)?;
            let img = rep.faithful_image();
            save_rep(&img, out)?;
            rpt.both("size", &img.size().to_string());
            Ok(0)
        }
    }
}

fn build_equation_set(
    rep: &FiniteRepresentation,
    eqs: &[String],
    group_eqs: &[String],
) -> Result<EquationSet> {
    Ok(EquationSet {
        action: eqs
            .iter()
            .map(|s| parse_module_expr(s, rep.field()))
            .collect::<Result<_>>()?,
        group: group_eqs
            .iter()
            .map(|s| parse_word(s))
            .collect::<Result<_>>()?,
    })
}

fn fmt_seq(seq: &[usize]) -> String {
    if seq.is_empty() {
        "e".into()
    } else {
        seq.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("_")
    }
}
