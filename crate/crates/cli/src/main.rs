//! `bpglab` command-line front end.
//!
//! Exit codes: 0 yes / success, 1 no, 2 usage or format error, 3 unsupported
//! instance (solver precondition or size cap).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bpglab::graph::named::{linear_forest, star_forest, NamedFamily};
use bpglab::graph::{graph_metrics, local_complement, parse_graphs, pivot, read_graph, write_graph};
use bpglab::isi::{isi_with, Solver};
use bpglab::letters::{chain_word_graph, encode_bpg, encode_chain, lettericity_exact, min_path_alphabet, LetterSystem};
use bpglab::parameters::{build_UFK, build_UwK, distinguishing_number, neighbourhood_diversity, KGraph, WordSource};
use bpglab::recognition::{bpg_by_construction, bpg_by_forbidden_subgraphs, classify, ClassId};
use bpglab::universal::{
    enumerate_class, universal_bpg, universal_chain, universal_star_forest, universal_star_forest_bounded,
    verify_universal, witness_rigid, Inflation,
};
use bpglab::{Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bpglab", version, about = "Bipartite permutation graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: a named family (path, cycle, complete,
    /// complete-bipartite, star, spider, sun3, phi, hgraph, matching) or
    /// hnn N, zn N, fstar N, fstar-bounded K N, qt T, rnt N T, rnset N T..,
    /// star-forest L.., linear-forest L.., ufk F.graph K.json COPIES,
    /// uwk WORD.json K.json N.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide class membership; prints yes/no.
    Recognize {
        class: String,
        file: PathBuf,
        /// Print an obstruction for non-members.
        #[arg(long)]
        certificate: bool,
        /// For bpg: use only the forbidden-subgraph or only the
        /// constructive recognizer.
        #[arg(long, value_enum)]
        mode: Option<BpgMode>,
    },
    Encode {
        #[arg(value_enum)]
        kind: EncodeKind,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode a letter system (JSON file) or a chain word (literal).
    Decode {
        #[arg(value_enum)]
        kind: EncodeKind,
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Is H an induced subgraph of G?
    Isi {
        #[arg(long, default_value = "auto")]
        solver: String,
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        certificate: bool,
    },
    Params {
        #[arg(value_enum)]
        which: ParamKind,
        file: PathBuf,
        /// Alphabet bound for lettericity / path-alphabet.
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
    /// Pivot on the edge uv (1-based).
    Pivot {
        file: PathBuf,
        u: usize,
        v: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Local complementation at v (1-based).
    Lc {
        file: PathBuf,
        v: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that FILE contains every N-vertex member of the class.
    VerifyUniversal {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// List the N-vertex members of a class up to isomorphism.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BpgMode {
    Forbidden,
    Construction,
}

#[derive(Clone, Copy, ValueEnum)]
enum EncodeKind {
    Letters,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamKind {
    Nd,
    Dn,
    Metrics,
    Lettericity,
    PathAlphabet,
}

enum Failure {
    Usage(String),
    Unsupported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. }
            | Error::Unsupported(_)
            | Error::NotLinearForest
            | Error::NotBpg
            | Error::NotConnectedChain => Failure::Unsupported(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Graph, Failure> {
    Ok(read_graph(&read_text(path)?)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn class(tag: &str) -> Result<ClassId, Failure> {
    Ok(tag.parse::<ClassId>()?)
}

fn nums(params: &[String]) -> Result<Vec<usize>, Failure> {
    params
        .iter()
        .map(|p| p.parse().map_err(|_| Failure::Usage(format!("not a non-negative integer: {p}"))))
        .collect()
}

fn arity(family: &str, params: &[String], k: usize) -> Result<Vec<usize>, Failure> {
    if params.len() != k {
        return Err(Failure::Usage(format!("{family} takes {k} parameter(s), got {}", params.len())));
    }
    nums(params)
}

fn positive(family: &str, v: usize) -> Result<usize, Failure> {
    if v == 0 {
        Err(Failure::Usage(format!("{family} needs a positive parameter")))
    } else {
        Ok(v)
    }
}

/// `BPGLAB_MAX_N` lets enumeration run past the default caps up to that size.
fn allow_large(n: usize) -> bool {
    std::env::var("BPGLAB_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .is_some_and(|max| n <= max)
}

fn generate(family: &str, params: &[String]) -> Result<Graph, Failure> {
    let g = match family {
        "hnn" => universal_bpg(positive(family, arity(family, params, 1)?[0])?),
        "zn" => universal_chain(positive(family, arity(family, params, 1)?[0])?),
        "fstar" => universal_star_forest(positive(family, arity(family, params, 1)?[0])?),
        "fstar-bounded" => {
            let p = arity(family, params, 2)?;
            universal_star_forest_bounded(p[0], p[1])?
        }
        "qt" => witness_rigid(arity(family, params, 1)?[0], None)?.graph,
        "rnt" => {
            let p = arity(family, params, 2)?;
            witness_rigid(p[1], Some(&Inflation::Ends { n: p[0] }))?.graph
        }
        "rnset" => {
            let p = nums(params)?;
            if p.len() < 2 {
                return Err(Failure::Usage("rnset takes N and at least one t".into()));
            }
            let t_set = p[1..].to_vec();
            let t = *t_set.iter().max().expect("non-empty");
            witness_rigid(t, Some(&Inflation::Sets { n: p[0], t_set }))?.graph
        }
        "star-forest" => {
            let p = nums(params)?;
            if p.is_empty() || p.contains(&0) {
                return Err(Failure::Usage("star-forest takes positive leaf counts".into()));
            }
            star_forest(&p)
        }
        "linear-forest" => linear_forest(&nums(params)?)?,
        "ufk" => {
            if params.len() != 3 {
                return Err(Failure::Usage("ufk takes F.graph K.json COPIES".into()));
            }
            let f = load(Path::new(&params[0]))?;
            let k = KGraph::from_json(&read_text(Path::new(&params[1]))?)?;
            build_UFK(&f, &k, nums(&params[2..])?[0])?
        }
        "uwk" => {
            if params.len() != 3 {
                return Err(Failure::Usage("uwk takes WORD.json K.json N".into()));
            }
            let w = WordSource::from_json(&read_text(Path::new(&params[0]))?)?;
            let k = KGraph::from_json(&read_text(Path::new(&params[1]))?)?;
            build_UwK(&w, &k, nums(&params[2..])?[0])?
        }
        _ => {
            let refs: Vec<&str> = params.iter().map(String::as_str).collect();
            NamedFamily::parse(family, &refs)?.build()?
        }
    };
    Ok(g)
}

fn vertex(g: &Graph, v: usize) -> Result<usize, Failure> {
    if v == 0 || v > g.vertex_count() {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        }
        .into())
    } else {
        Ok(v - 1)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            let g = generate(&family, &params)?;
            emit(&write_graph(&g), output.as_deref())?;
            Ok(true)
        }
        Command::Recognize {
            class: tag,
            file,
            certificate,
            mode,
        } => {
            let c = class(&tag)?;
            let g = load(&file)?;
            let m = match (c, mode) {
                (ClassId::Bpg, Some(BpgMode::Forbidden)) => bpg_by_forbidden_subgraphs(&g),
                (ClassId::Bpg, Some(BpgMode::Construction)) => {
                    let member = bpg_by_construction(&g);
                    let mut m = classify(c, &g);
                    m.member = member;
                    if member {
                        m.certificate = None;
                    }
                    m
                }
                (_, Some(_)) => return Err(Failure::Usage("--mode applies to bpg only".into())),
                (_, None) => classify(c, &g),
            };
            println!("{}", yes_no(m.member));
            if certificate {
                if let Some(cert) = &m.certificate {
                    println!("{cert}");
                }
            }
            Ok(m.member)
        }
        Command::Encode { kind, file, output } => {
            let g = load(&file)?;
            let text = match kind {
                EncodeKind::Letters => encode_bpg(&g)?.to_json() + "\n",
                EncodeKind::Chain => {
                    let pair = encode_chain(&g)?;
                    format!("{}\n{}\n", pair.w1, pair.w2)
                }
            };
            emit(&text, output.as_deref())?;
            Ok(true)
        }
        Command::Decode { kind, input, output } => {
            let g = match kind {
                EncodeKind::Letters => LetterSystem::from_json(&read_text(Path::new(&input))?)?.mapped_graph(),
                EncodeKind::Chain => chain_word_graph(&input)?,
            };
            emit(&write_graph(&g), output.as_deref())?;
            Ok(true)
        }
        Command::Isi {
            solver,
            g,
            h,
            certificate,
        } => {
            let solver: Solver = solver.parse()?;
            let (g, h) = (load(&g)?, load(&h)?);
            let r = isi_with(solver, &g, &h)?;
            println!("{}", yes_no(r.embeds));
            if certificate && r.embeds {
                println!("solver {}", r.solver);
                for line in &r.solution {
                    println!("{line}");
                }
                if let Some(e) = &r.embedding {
                    let pairs: Vec<String> =
                        e.map().iter().enumerate().map(|(u, v)| format!("{}->{}", u + 1, v + 1)).collect();
                    println!("embedding {}", pairs.join(" "));
                }
            }
            Ok(r.embeds)
        }
        Command::Params { which, file, kmax } => {
            let g = load(&file)?;
            match which {
                ParamKind::Nd => println!("{}", neighbourhood_diversity(&g)),
                ParamKind::Dn => println!("{}", distinguishing_number(&g)?),
                ParamKind::Metrics => {
                    let m = graph_metrics(&g);
                    let diameter = m.distances.iter().flatten().flatten().max().copied().unwrap_or(0);
                    let opt = |v: Option<usize>| v.map_or_else(|| "capped".to_string(), |x| x.to_string());
                    println!("vertices {}", g.vertex_count());
                    println!("edges {}", g.edge_count());
                    println!("components {}", m.components.len());
                    println!("diameter {diameter}");
                    println!("independence {}", opt(m.max_independent_set));
                    println!("path_number {}", opt(m.path_number));
                }
                ParamKind::Lettericity => match lettericity_exact(&g, kmax)? {
                    Some(k) => println!("{k}"),
                    None => {
                        println!("> {kmax}");
                        return Ok(false);
                    }
                },
                ParamKind::PathAlphabet => match min_path_alphabet(&g, kmax)? {
                    Some(r) => println!("{r}"),
                    None => {
                        println!("> {kmax}");
                        return Ok(false);
                    }
                },
            }
            Ok(true)
        }
        Command::Pivot { file, u, v, output } => {
            let g = load(&file)?;
            let (u, v) = (vertex(&g, u)?, vertex(&g, v)?);
            emit(&write_graph(&pivot(&g, u, v)?), output.as_deref())?;
            Ok(true)
        }
        Command::Lc { file, v, output } => {
            let g = load(&file)?;
            let v = vertex(&g, v)?;
            emit(&write_graph(&local_complement(&g, v)?), output.as_deref())?;
            Ok(true)
        }
        Command::VerifyUniversal { class: tag, n, file } => {
            let c = class(&tag)?;
            let u = load(&file)?;
            let report = verify_universal(c, n, &u, allow_large(n))?;
            match &report.failure {
                None => println!("pass: {} graphs of class {c} on {n} vertices embed", report.checked),
                Some(bad) => {
                    println!("fail: this member of {c} does not embed");
                    print!("{}", write_graph(bad));
                }
            }
            Ok(report.passed())
        }
        Command::Enumerate {
            class: tag,
            n,
            jobs,
            output,
        } => {
            let c = class(&tag)?;
            let list = || enumerate_class(c, n, allow_large(n));
            let graphs = match jobs {
                Some(0) => return Err(Failure::Usage("--jobs must be positive".into())),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Failure::Usage(e.to_string()))?
                    .install(list)?,
                None => list()?,
            };
            let text: Vec<String> = graphs.iter().map(write_graph).collect();
            let text = text.join("\n");
            // Keep the output re-readable as a multi-graph file.
            debug_assert_eq!(parse_graphs(&text).map(|v| v.len()).unwrap_or(0), graphs.len());
            emit(&text, output.as_deref())?;
            Ok(true)
        }
    }
}
