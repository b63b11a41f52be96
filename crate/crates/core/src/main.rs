use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corelattice::antiatom::{anti_atom, backelin_bound, count_semigroups_by_frobenius, gamma, p_value, family_s};
use corelattice::apery::apery_of;
use corelattice::partition::{phi, phi_inverse};
use corelattice::polytope::{core_region, oversemigroup_region, semigroup_core_ratio, Region};
use corelattice::tree::{build_tree, genus_census};
use corelattice::verify::run_suite;
use corelattice::{json as js, Error, NumericalSemigroup, NumericalSet, Partition};

#[derive(Parser)]
#[command(name = "corelattice", version, about = "Numerical sets, core partitions and core polytopes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simultaneous cores as integer points of the core polytope.
    Cores(CoresArgs),
    /// Convert between numerical sets and partitions.
    Partition(PartitionArgs),
    /// Count the numerical sets whose atom monoid is a given semigroup.
    Antiatom(AntiatomArgs),
    /// The tree of numerical semigroups, as JSON lines.
    Tree(TreeArgs),
    /// gamma_N = P(S_N) / 2^(N-1) for N = 1..=n, with S(N).
    Gamma {
        n: u32,
    },
    /// Oversemigroups of <a, b> against (a, b)-cores, for b up to a limit.
    Ratio {
        a: u32,
        b_limit: u32,
    },
    /// Run a verification suite (or `all`); exits 2 on any failed check.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct CoresArgs {
    a: u32,
    #[arg(required = true)]
    b: Vec<u32>,
    /// Print count, max, argmax and mean of the sizes.
    #[arg(long)]
    stats: bool,
    /// Print every point as a CSV row.
    #[arg(long)]
    dump: bool,
    /// Use the oversemigroup polytope of <a, b> instead.
    #[arg(long)]
    from_semigroups: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct PartitionArgs {
    /// A numerical set `0,1,4,->` or a partition `(4,2,2)`.
    input: String,
    /// Draw the Young diagram with hook lengths.
    #[arg(long)]
    hooks: bool,
    #[arg(long)]
    conjugate: bool,
    /// Apéry tuple with respect to this modulus.
    #[arg(long)]
    apery: Option<u32>,
}

#[derive(Args)]
struct AntiatomArgs {
    /// A semigroup as a set (`0,4,->`) or as `gens 4 5 6 7`.
    #[arg(required = true, num_args = 1..)]
    input: Vec<String>,
    #[arg(long)]
    witnesses: bool,
}

#[derive(Args)]
struct TreeArgs {
    max_genus: u32,
    /// Attach |M(S)| and P(S) to each node.
    #[arg(long)]
    annotate: bool,
    /// Graphviz output instead of JSON lines.
    #[arg(long)]
    dot: bool,
    /// Only the number of semigroups per genus.
    #[arg(long)]
    census: bool,
}

enum Failure {
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Assertion(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Out {
    let f = cli.format;
    match &cli.cmd {
        Cmd::Cores(args) => cores(args, f),
        Cmd::Partition(args) => partition(args, f),
        Cmd::Antiatom(args) => antiatom(args, f),
        Cmd::Tree(args) => tree(args, f),
        Cmd::Gamma { n } => gamma_table(*n, f),
        Cmd::Ratio { a, b_limit } => ratio(*a, *b_limit, f),
        Cmd::Verify { suite } => verify(suite, f),
    }
}

fn lines(v: &Value) -> String {
    format!("{v}\n")
}

fn cores(args: &CoresArgs, f: Format) -> Out {
    if args.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let region: Region = if args.from_semigroups {
        let [b] = args.b[..] else {
            return Err(Failure::Usage("--from-semigroups takes exactly one b".into()));
        };
        oversemigroup_region(args.a, b)?
    } else {
        core_region(args.a, &args.b)?
    };
    let mut out = String::new();
    if args.stats || !args.dump {
        let s = region.stats(args.jobs);
        match f {
            Format::Json => out.push_str(&lines(&s.to_json())),
            Format::Csv => {
                let mean = s.mean();
                let _ = writeln!(out, "count,max,argmax_count,mean\n{},{},{},{}", s.count, s.max_size, s.argmax_count, mean);
            }
            Format::Text => {
                let _ = writeln!(out, "count={} max={} mean={} argmax={}", s.count, s.max_size, s.mean(), s.argmax);
            }
        }
    }
    if args.dump {
        let dim = args.a as usize - 1;
        let header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
        let _ = writeln!(out, "{}", header.join(","));
        for p in region.points() {
            let row: Vec<String> = p.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", row.join(","));
        }
    }
    Ok(out)
}

fn partition(args: &PartitionArgs, f: Format) -> Out {
    let text = args.input.trim();
    let (set, lambda): (NumericalSet, Partition) = if text.starts_with('(') {
        let p: Partition = text.parse()?;
        (phi_inverse(&p), p)
    } else {
        let s: NumericalSet = text.parse()?;
        let p = phi(&s);
        (s, p)
    };
    let apery = args.apery.map(|a| apery_of(&set, a)).transpose()?;
    let conj = args.conjugate.then(|| lambda.conjugate());
    if f == Format::Json {
        let mut v = json!({ "set": set.to_string(), "parts": lambda.parts(), "size": lambda.size() });
        if args.hooks {
            v["hooks"] = json!(lambda.hooks().set);
        }
        if let Some(c) = &conj {
            v["conjugate"] = json!(c.parts());
        }
        if let Some(t) = &apery {
            v["apery"] = json!({ "a": t.modulus(), "x": t.coords() });
        }
        return Ok(lines(&v));
    }
    let mut out = format!("set       {set}\npartition {lambda}\n");
    if let Some(c) = &conj {
        let _ = writeln!(out, "conjugate {c}");
    }
    if let Some(t) = &apery {
        let _ = writeln!(out, "apery     {t}");
    }
    if args.hooks {
        out.push_str(&lambda.render_hooks());
    }
    Ok(out)
}

fn parse_semigroup(input: &[String]) -> Result<NumericalSemigroup, Failure> {
    if input[0] == "gens" {
        let gens = input[1..]
            .iter()
            .map(|g| g.parse::<u32>().map_err(|_| Failure::Usage(format!("bad generator `{g}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if gens.is_empty() {
            return Err(Failure::Usage("`gens` needs at least one generator".into()));
        }
        Ok(NumericalSemigroup::from_generators(&gens)?)
    } else {
        let set: NumericalSet = input.join(",").parse()?;
        Ok(NumericalSemigroup::try_from(set)?)
    }
}

fn antiatom(args: &AntiatomArgs, f: Format) -> Out {
    let s = parse_semigroup(&args.input)?;
    let report = anti_atom(&s)?;
    if f == Format::Json {
        return Ok(lines(&report.to_json(args.witnesses)));
    }
    let mut out = format!("S={} P={} M={}\n", report.semigroup, report.p_value, report.m_size);
    if args.witnesses {
        for w in &report.witnesses {
            let _ = writeln!(out, "  {w}");
        }
    }
    Ok(out)
}

fn tree(args: &TreeArgs, f: Format) -> Out {
    if args.census {
        let counts = genus_census(args.max_genus)?;
        return Ok(match f {
            Format::Json => lines(&json!(counts)),
            _ => counts.iter().enumerate().map(|(g, n)| format!("{g},{n}\n")).collect(),
        });
    }
    let t = build_tree(args.max_genus, args.annotate)?;
    Ok(if args.dot { t.to_dot() } else { t.to_json_lines() })
}

fn gamma_table(n: u32, f: Format) -> Out {
    if n == 0 {
        return Err(Failure::Usage("N must be at least 1".into()));
    }
    let mut rows = Vec::new();
    for k in 1..=n {
        let g = gamma(k)?;
        let p = p_value(&family_s(k)?)?;
        let s = count_semigroups_by_frobenius(k)?;
        rows.push((k, p, g, s, backelin_bound(k)));
    }
    Ok(match f {
        Format::Json => rows
            .iter()
            .map(|(k, p, g, s, b)| {
                lines(&json!({ "N": k, "P": js::u64(*p), "gamma": js::rational(g), "S": js::u64(*s), "backelin": js::u64(*b) }))
            })
            .collect(),
        Format::Csv => {
            let mut out = String::from("N,P,gamma,S,backelin\n");
            for (k, p, g, s, b) in &rows {
                let _ = writeln!(out, "{k},{p},{g},{s},{b}");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, p, g, s, b) in &rows {
                let _ = writeln!(out, "N={k:<3} P={p:<8} gamma={g} S={s} backelin={b}");
            }
            out
        }
    })
}

fn ratio(a: u32, b_limit: u32, f: Format) -> Out {
    let t = semigroup_core_ratio(a, b_limit)?;
    Ok(match f {
        Format::Json => lines(&t.to_json()),
        _ => {
            let mut out = String::from("b,O,C,ratio\n");
            for r in &t.rows {
                let _ = writeln!(out, "{},{},{},{}", r.b, r.oversemigroups, r.cores, r.ratio);
            }
            let _ = writeln!(out, "limit,,,{}", t.limit);
            out
        }
    })
}

fn verify(suite: &str, f: Format) -> Out {
    let reports = run_suite(suite)?;
    let passed = reports.iter().all(|r| r.passed());
    let out = match f {
        Format::Json => lines(&json!({
            "suite": suite,
            "passed": passed,
            "criteria": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        _ => reports.iter().map(|r| r.render()).collect(),
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Assertion(out))
    }
}
