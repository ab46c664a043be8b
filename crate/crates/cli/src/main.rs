use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kleinian::classify::{self, Classification};
use kleinian::construct::{self, Mode};
use kleinian::enumerator::{self, RationalWE};
use kleinian::extremal::{self, SearchConfig, SearchOutcome};
use kleinian::io::{self, ClassJson, RationalWeJson, WeJson};
use kleinian::orbits::{self, Subset};
use kleinian::{design, lex, standard, Error, KCode};

mod table;

#[derive(Parser)]
#[command(name = "kleinc", version, about = "Self-dual codes over the Kleinian four-group")]
struct Cli {
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CodeArg {
    /// Code file, or a standard name such as `C6`, `gamma1^3`, `delta4+`.
    #[arg(long)]
    code: String,
}

#[derive(clap::Args)]
struct LengthArgs {
    #[arg(long)]
    n: usize,
    /// Restrict to even codes.
    #[arg(long)]
    even: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The dual code, in the code file format.
    Dual(CodeArg),
    /// Hamming weight enumerator.
    We(CodeArg),
    /// Complete weight enumerator, keyed by counts of 0, a, b, c.
    Cwe(CodeArg),
    /// Symmetrized weight enumerator, keyed by counts of 0, a, and b or c.
    Swe(CodeArg),
    /// Weight enumerator of the dual code by the MacWilliams transform.
    Macwilliams(CodeArg),
    /// Shadow enumerator and minimal shadow weight of a self-dual code.
    Shadow(CodeArg),
    /// All classes of self-dual codes of one length.
    Classify {
        #[command(flatten)]
        len: LengthArgs,
        /// Print an aligned table instead of JSON records.
        #[arg(long)]
        table: bool,
    },
    /// Mass formula: the number of distinct self-dual codes.
    Mass(LengthArgs),
    /// Children of an even self-dual code, one per orbit.
    Children(CodeArg),
    /// Parent (odd length) or the two even neighbours (even length) of a
    /// self-dual code that is not even.
    Neighbors(CodeArg),
    /// Neighbourhood graph of the self-dual codes of even length `n`.
    Graph {
        #[arg(long)]
        n: usize,
    },
    /// Extremal weight enumerator.
    ExtremalWe(LengthArgs),
    /// Certificate that no extremal code of length `n` exists.
    Nonexist(LengthArgs),
    /// Backtracking search for a self-dual code of minimal weight `d`.
    Search {
        #[command(flatten)]
        len: LengthArgs,
        #[arg(long)]
        d: usize,
        /// Wall-clock budget in seconds; capped by KLEINC_BUDGET_SECS.
        #[arg(long)]
        budget: Option<u64>,
        /// Collect one code per class instead of stopping at the first.
        #[arg(long)]
        exhaustive: bool,
        /// Self-orthogonal code every result must contain.
        #[arg(long)]
        seed: Option<String>,
        /// Shuffle sibling order with this RNG seed.
        #[arg(long)]
        shuffle: Option<u64>,
        /// With --shuffle, restart from the root after this many nodes.
        #[arg(long)]
        restart_nodes: Option<u64>,
        /// Write the first code found to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test whether the codewords of one weight form a t-design.
    Design {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        t: usize,
    },
    /// Orbits of the automorphism group on words.
    Orbits {
        #[command(flatten)]
        code: CodeArg,
        /// Only words of this weight.
        #[arg(long)]
        weight: Option<usize>,
    },
    /// Covering radius and coset leader weights.
    Covering(CodeArg),
    /// Binary code from construction A or B, with the enumerator identity.
    Construct {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        mode: Mode,
    },
    /// Greedy lexicographic code.
    Lex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Greedy self-orthogonal lexicographic codes and their period.
    Solex {
        #[arg(long)]
        d: usize,
        #[arg(long = "max")]
        n_max: usize,
    },
}

/// A failure of a mathematical check, reported with exit status 2.
#[derive(Debug)]
struct CertificateFailure(String);

impl std::fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CertificateFailure {}

fn load_code(spec: &str) -> anyhow::Result<KCode> {
    let path = Path::new(spec);
    if path.exists() {
        return io::read_code(path).with_context(|| format!("reading {spec}"));
    }
    standard::standard_code(spec).map_err(|_| anyhow!("no code file or standard code named `{spec}`"))
}

fn generators(c: &KCode) -> Value {
    json!(c.basis().iter().map(|w| w.to_string()).collect::<Vec<_>>())
}

fn we_value(c: &KCode) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(WeJson::new(&enumerator::hamming_we(c)?)?)?)
}

fn rational_value(w: &RationalWE) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(RationalWeJson::new(w))?)
}

fn audited(cls: Classification) -> anyhow::Result<Classification> {
    match cls.audit() {
        Ok(()) => Ok(cls),
        Err(Error::Audit(msg)) => Err(CertificateFailure(msg).into()),
        Err(e) => Err(e.into()),
    }
}

/// The classes of length `n`; odd length 7 comes from the children of the
/// even classes of length 8.
fn classification(n: usize, even: bool) -> anyhow::Result<Classification> {
    if n == 7 && !even {
        let parents = classify::classify(8, true)?;
        return audited(classify::classify_children(&parents)?);
    }
    let mut cls = audited(classify::classify(n, even)?)?;
    if even && n >= 2 && n <= 8 {
        let kids = classification(n - 1, false)?;
        classify::link_children(&mut cls, &kids)?;
    }
    Ok(cls)
}

fn budget(requested: Option<u64>) -> anyhow::Result<Option<Duration>> {
    let cap = match std::env::var("KLEINC_BUDGET_SECS") {
        Ok(v) => Some(
            v.trim()
                .parse::<u64>()
                .map_err(|_| anyhow!("KLEINC_BUDGET_SECS must be a whole number of seconds"))?,
        ),
        Err(_) => None,
    };
    let secs = match (requested, cap) {
        (Some(r), Some(c)) => Some(r.min(c)),
        (r, c) => r.or(c),
    };
    Ok(secs.map(Duration::from_secs))
}

enum Output {
    Json(Value),
    Text(String),
}

fn run(cmd: Command) -> anyhow::Result<Output> {
    use Output::*;
    Ok(match cmd {
        Command::Dual(a) => Text(io::emit_code(&load_code(&a.code)?.dual())),
        Command::We(a) => Json(we_value(&load_code(&a.code)?)?),
        Command::Cwe(a) => {
            let c = load_code(&a.code)?;
            Json(json!({"n": c.len(), "terms": io::complete_json(&enumerator::complete_we(&c)?)}))
        }
        Command::Swe(a) => {
            let c = load_code(&a.code)?;
            let s = enumerator::swe(&c)?;
            let terms: serde_json::Map<String, Value> = s
                .poly
                .terms()
                .map(|(e, k)| (format!("({},{},{})", e[0], e[1], e[2]), json!(k.to_string())))
                .collect();
            Json(json!({"n": c.len(), "terms": terms}))
        }
        Command::Macwilliams(a) => {
            let c = load_code(&a.code)?;
            let w = enumerator::macwilliams(&enumerator::hamming_we(&c)?, &c.size().into())?;
            Json(serde_json::to_value(WeJson::new(&w)?)?)
        }
        Command::Shadow(a) => {
            let c = load_code(&a.code)?;
            let w = enumerator::hamming_we(&c)?;
            let s = enumerator::shadow_we(&w, &c.size().into());
            let h = enumerator::shadow(&c)?.min_weight()?;
            let mut v = rational_value(&s)?;
            v["min_weight"] = json!(h);
            Json(v)
        }
        Command::Classify { len, table } => {
            let cls = classification(len.n, len.even)?;
            if table {
                Text(table::classification(&cls))
            } else {
                let lines = cls
                    .classes
                    .iter()
                    .map(|r| Ok(serde_json::to_string(&ClassJson::new(r)?)?))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                Text(lines.join("\n") + "\n")
            }
        }
        Command::Mass(len) => Json(json!(classify::mass(len.n, len.even)?.to_string())),
        Command::Children(a) => {
            let c = load_code(&a.code)?;
            let kids = classify::children(&c)?
                .into_iter()
                .map(|k| {
                    json!({
                        "position": k.position,
                        "glue": k.glue.to_string(),
                        "orbit_size": k.orbit_size,
                        "generators": generators(&k.code),
                    })
                })
                .collect::<Vec<_>>();
            Json(json!(kids))
        }
        Command::Neighbors(a) => {
            let d = load_code(&a.code)?;
            if d.len() % 2 == 1 {
                let p = classify::parent(&d)?;
                Json(json!({"parent": generators(&p)}))
            } else {
                let (n1, n2) = classify::neighbors(&d)?;
                Json(json!({"neighbors": [generators(&n1), generators(&n2)]}))
            }
        }
        Command::Graph { n } => {
            let all = audited(classify::classify(n, false)?)?;
            let g = classify::neighborhood_graph(&all)?;
            let edges = g
                .edges
                .iter()
                .map(|e| json!({"class": e.class, "ends": [e.ends.0, e.ends.1]}))
                .collect::<Vec<_>>();
            Json(json!({
                "n": n,
                "vertices": g.vertices,
                "edges": edges,
                "loops": g.loops(),
                "proper_edges": g.proper_edges(),
                "connected": g.is_connected(),
            }))
        }
        Command::ExtremalWe(len) => {
            let s = extremal::extremal_we(len.n, len.even)?;
            Json(json!({
                "n": s.n,
                "even": s.even,
                "gleason": s.a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "A": s.we.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            }))
        }
        Command::Nonexist(len) => match extremal::nonexistence_certificate(len.n, len.even)? {
            Some(c) => Json(json!({
                "n": c.n,
                "even": c.even,
                "kind": format!("{:?}", c.kind),
                "index": c.index,
                "value": io::rational_string(&c.value),
            })),
            None => Json(Value::Null),
        },
        Command::Search {
            len,
            d,
            budget: b,
            exhaustive,
            seed,
            shuffle,
            restart_nodes,
            out,
        } => {
            let mut cfg = SearchConfig::new(len.n, len.even, d);
            cfg.budget = budget(b)?;
            cfg.exhaustive = exhaustive;
            cfg.seed = seed.as_deref().map(load_code).transpose()?;
            cfg.shuffle = shuffle;
            cfg.restart_nodes = restart_nodes;
            let report = extremal::search(&cfg)?;
            let (status, codes) = match &report.outcome {
                SearchOutcome::Found(c) => ("found", c.clone()),
                SearchOutcome::NoneExist => ("none", Vec::new()),
                SearchOutcome::BudgetExhausted(c) => ("budget", c.clone()),
            };
            if let (Some(path), Some(c)) = (out, codes.first()) {
                io::write_code(c, &path)?;
            }
            let found = codes
                .iter()
                .map(|c| Ok(json!({"generators": generators(c), "A": we_value(c)?["A"]})))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Json(json!({"status": status, "nodes": report.nodes, "codes": found}))
        }
        Command::Design { code, weight, t } => {
            let c = load_code(&code.code)?;
            let r = design::check_design(&design::slice(&c, weight)?, t)?;
            Json(json!({
                "t": r.t,
                "is_design": r.is_design,
                "mu": r.mu,
                "offending": r.offending.map(|w| w.to_string()),
                "blocks": r.blocks,
            }))
        }
        Command::Orbits { code, weight } => {
            let c = load_code(&code.code)?;
            let subset = weight.map_or(Subset::All, Subset::Weight);
            let t = orbits::orbits(&c, subset)?;
            let list = t
                .orbits
                .iter()
                .map(|o| json!({"representative": o.representative.to_string(), "size": o.size}))
                .collect::<Vec<_>>();
            Json(json!({"n": t.n, "count": t.len(), "total": t.total(), "orbits": list}))
        }
        Command::Covering(a) => {
            let c = load_code(&a.code)?;
            let cov = orbits::covering_radius(&c)?;
            let mut by_weight = vec![0usize; cov.radius + 1];
            for l in &cov.cosets {
                by_weight[l.weight] += 1;
            }
            Json(json!({"radius": cov.radius, "cosets": cov.cosets.len(), "by_weight": by_weight}))
        }
        Command::Construct { code, mode } => {
            let c = load_code(&code.code)?;
            let b = construct::construct(&c, mode)?;
            let computed = b.weight_enumerator()?;
            let predicted = construct::predicted_we(&enumerator::hamming_we(&c)?, mode)?;
            if computed != predicted {
                return Err(CertificateFailure(format!(
                    "binary enumerator {} differs from the predicted {}",
                    construct::we_display(&computed),
                    construct::we_display(&predicted)
                ))
                .into());
            }
            Json(json!({
                "length": b.len(),
                "dimension": b.dim(),
                "min_weight": b.min_weight()?,
                "self_dual": b.is_self_dual(),
                "doubly_even": b.is_doubly_even()?,
                "code": io::emit_binary(&b).lines().collect::<Vec<_>>(),
                "computed": WeJson::new(&computed)?.a,
                "predicted": WeJson::new(&predicted)?.a,
            }))
        }
        Command::Lex { n, d } => {
            let t = lex::lexicode(n, d)?;
            Json(json!({
                "words": t.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "linear": t.linear,
                "code": io::emit_code(&t.code),
            }))
        }
        Command::Solex { d, n_max } => {
            let t = lex::so_lexicode(d, n_max)?;
            let period = t.period.as_ref().map(|p| {
                json!({
                    "length": p.length,
                    "element": generators(&p.element),
                    "equal_at": p.equal_at,
                    "equivalent_at": p.equivalent_at,
                })
            });
            Json(json!({
                "dim2_by_length": t.by_length.iter().map(KCode::dim2).collect::<Vec<_>>(),
                "words": t.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "code": io::emit_code(&t.code),
                "period": period,
            }))
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let text = match run(cli.command) {
        Ok(Output::Json(v)) => format!("{v}\n"),
        Ok(Output::Text(s)) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            return if e.downcast_ref::<CertificateFailure>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            };
        }
    };
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
