mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use cometcount::combinat::MultiPartition;
use cometcount::exact::{LaurentPoly2, QT, ZW};
use cometcount::fforacle::{
    count_char_points, count_quiver_points, find_generic_add, find_generic_mult, gl_order, is_prime, CharTableGL2,
    ConjClassFq, Fq, DEFAULT_BUDGET,
};
use cometcount::kernel::{self, KernelQuery, Mode};
use cometcount::polybases::set_cache_dir;
use cometcount::suite;

use report::{Expr, Format, Report};

#[derive(Parser, Debug)]
#[command(name = "cometcount", version, about = "E-polynomials of character varieties and A-polynomials of comet-shaped quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Upper bound on worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Report per-stage wall-clock times.
    #[arg(long, global = true)]
    timings: bool,
    /// Do not read or write the on-disk Macdonald table cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Args, Debug, Clone)]
struct Shape {
    /// Genus of the curve.
    #[arg(long, short = 'g')]
    genus: u32,
    /// Multipartition, e.g. "1,1;1,1;1,1".
    #[arg(long)]
    mu: MultiPartition,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ℍ_μ(z,w) or one of its specializations.
    Hmu {
        #[command(flatten)]
        shape: Shape,
        /// full: ℍ_μ(z,w); pure: ℍ_μ(0,√q); epoly: ℍ_μ(√q,1/√q)
        #[arg(long, default_value_t = Mode::Full)]
        mode: Mode,
    },
    /// The E-polynomial of the character variety.
    Epoly {
        #[command(flatten)]
        shape: Shape,
    },
    /// The A-polynomial (pure part) of the comet-shaped quiver.
    Apoly {
        #[command(flatten)]
        shape: Shape,
    },
    /// The candidate mixed Hodge polynomial H_c(q,t).
    Mhp {
        #[command(flatten)]
        shape: Shape,
    },
    /// Euler characteristic of the torus quotient (g ≥ 1).
    Euler {
        #[command(flatten)]
        shape: Shape,
    },
    /// Brute-force point count over 𝔽_q for generic data.
    #[command(group(clap::ArgGroup::new("side").required(true).args(["mult", "add"])))]
    Count {
        #[command(flatten)]
        shape: Shape,
        /// Field size, a prime up to 251
        #[arg(long, value_parser = parse_prime)]
        q: u64,
        /// Character variety (conjugacy classes in GL_n).
        #[arg(long)]
        mult: bool,
        /// Quiver variety (adjoint orbits in gl_n).
        #[arg(long)]
        add: bool,
        /// Maximum number of enumeration steps.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// The character table of GL_2(𝔽_q).
    Chartab {
        /// Field size, an odd prime
        #[arg(long, value_parser = parse_odd_prime)]
        q: u64,
    },
    /// Run a verification suite.
    Verify {
        /// Suite name
        #[arg(long, default_value = "small", value_parser = ["small"])]
        suite: String,
    },
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let q: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if !is_prime(q) || q > 251 {
        return Err(format!("{q} is not a prime up to 251"));
    }
    Ok(q)
}

fn parse_odd_prime(s: &str) -> Result<u64, String> {
    let q = parse_prime(s)?;
    if q == 2 {
        return Err("the GL_2 table needs odd q".into());
    }
    Ok(q)
}

fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os("COMETCOUNT_CACHE_DIR") {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("cometcount"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("cometcount"))
}

type Failure = String;

struct Timer {
    start: Instant,
}

impl Timer {
    fn start() -> Self {
        Self { start: Instant::now() }
    }

    fn lap(&mut self, r: &mut Report, stage: &str) {
        r.timing(stage, self.start.elapsed().as_secs_f64());
        self.start = Instant::now();
    }
}

fn err<E: std::fmt::Display>(e: E) -> Failure {
    e.to_string()
}

fn shape_query(r: &mut Report, s: &Shape) {
    r.query("genus", json!(s.genus));
    r.query("mu", json!(s.mu.to_string()));
}

/// d_μ, ℍ_μ(z,w), E and A: the block every kernel command reports.
fn kernel_block(r: &mut Report, t: &mut Timer, s: &Shape) -> Result<(LaurentPoly2, LaurentPoly2), Failure> {
    let h = kernel::hmu(&KernelQuery::full(s.genus, s.mu.clone())).map_err(err)?;
    t.lap(r, "hmu");
    let e = kernel::epoly(s.genus, &s.mu).map_err(err)?;
    t.lap(r, "epoly");
    let a = kernel::apoly(s.genus, &s.mu).map_err(err)?;
    t.lap(r, "apoly");
    r.value("d_mu", json!(h.d_mu));
    r.expr("H", "\\mathbb{H}_{\\mu}(z,w)", Expr::ratfun(&h.value, ZW));
    r.expr("E", "E(q)", Expr::poly(&e, QT));
    r.expr("A", "A(q)", Expr::poly(&a.value, QT));
    r.value("quiver_interpretation", json!(a.quiver_interpretation));
    r.check("polynomial", h.polynomial);
    r.check("curious", kernel::check_curious(&e, h.d_mu));
    Ok((e, a.value))
}

fn nonnegative(p: &LaurentPoly2) -> bool {
    p.is_integral() && p.terms().all(|(_, c)| !c.is_negative())
}

fn run(cmd: &Command, r: &mut Report, t: &mut Timer) -> Result<(), Failure> {
    match cmd {
        Command::Hmu { shape, mode } => {
            shape_query(r, shape);
            r.query("mode", json!(mode.to_string()));
            let h = kernel::hmu(&KernelQuery::new(shape.genus, shape.mu.clone(), *mode)).map_err(err)?;
            t.lap(r, "hmu");
            r.value("d_mu", json!(h.d_mu));
            let label = match mode {
                Mode::Full => "\\mathbb{H}_{\\mu}(z,w)",
                Mode::Pure => "\\mathbb{H}_{\\mu}(0,\\sqrt{q})",
                Mode::Epoly => "\\mathbb{H}_{\\mu}(\\sqrt{q},1/\\sqrt{q})",
            };
            let names = if *mode == Mode::Full { ZW } else { QT };
            r.expr("H", label, Expr::ratfun(&h.value, names));
            r.check("polynomial", h.polynomial);
            if *mode == Mode::Full {
                r.check("symmetric", h.value.swap() == h.value);
                r.check("even", h.value.negate_vars() == h.value);
            }
        }
        Command::Epoly { shape } => {
            shape_query(r, shape);
            let (e, _) = kernel_block(r, t, shape)?;
            r.check("routes_agree", true);
            if shape.genus >= 1 {
                r.check("vanishes_at_1", e.eval_int(1).is_zero());
            }
        }
        Command::Apoly { shape } => {
            shape_query(r, shape);
            let (_, a) = kernel_block(r, t, shape)?;
            r.check("nonnegative", nonnegative(&a));
            if shape.mu.is_indivisible() {
                r.value("nonempty", json!(!a.is_zero()));
            }
        }
        Command::Mhp { shape } => {
            shape_query(r, shape);
            let (e, a) = kernel_block(r, t, shape)?;
            let hc = kernel::mhp_candidate(shape.genus, &shape.mu).map_err(err)?;
            t.lap(r, "mhp");
            r.expr("Hc", "H_c(q,t)", Expr::poly(&hc, QT));
            r.check("specializes_to_E", kernel::at_t_minus_one(&hc) == e);
            let half = (kernel::dim_mu(&KernelQuery::full(shape.genus, shape.mu.clone())) / 2) as i32;
            r.check("pure_part_is_A", kernel::pure_part(&hc) == a.shift(half, 0));
        }
        Command::Euler { shape } => {
            shape_query(r, shape);
            let tilde = kernel::euler_tilde(shape.genus, &shape.mu).map_err(err)?;
            let (e, _) = kernel_block(r, t, shape)?;
            let limit = kernel::euler_limit(&e, shape.genus);
            t.lap(r, "euler");
            r.expr("euler", "\\tilde{\\chi}", Expr::plain(tilde.to_string()));
            r.check("matches_limit", limit.as_ref() == Some(&tilde));
        }
        Command::Count { shape, q, mult, add: _, budget } => {
            shape_query(r, shape);
            r.query("q", json!(q));
            r.query("side", json!(if *mult { "mult" } else { "add" }));
            let n = shape.mu.common_size().ok_or_else(|| "SizeMismatch: components of mu differ in size".to_string())?;
            let f = Fq::new(*q).map_err(err)?;
            let data = if *mult { find_generic_mult(&shape.mu, &f) } else { find_generic_add(&shape.mu, &f) }.map_err(err)?;
            t.lap(r, "search");
            let classes = ConjClassFq::from_eigen_data(&f, &shape.mu, &data);
            let raw = if *mult {
                count_char_points(&f, n, shape.genus, &classes, *budget)
            } else {
                count_quiver_points(&f, n, shape.genus, &classes, *budget)
            }
            .map_err(err)?;
            t.lap(r, "count");
            let pgl = gl_order(n, *q) / BigInt::from(*q - 1);
            let per = BigRational::new(BigInt::from(raw), pgl);
            let d = kernel::dim_mu(&KernelQuery::full(shape.genus, shape.mu.clone()));
            r.value("d_mu", json!(d));
            r.value("eigenvalues", json!(data));
            r.value("raw_count", json!(raw.to_string()));
            r.value("per_pgl", json!(per.to_string()));
            r.check("free_action", per.is_integer());
            if *mult {
                let e = kernel::epoly(shape.genus, &shape.mu).map_err(err)?;
                r.expr("E", "E(q)", Expr::poly(&e, QT));
                r.check("matches_E", e.eval_int(*q as i64) == per);
            } else {
                let a = kernel::apoly(shape.genus, &shape.mu).map_err(err)?.value;
                r.expr("A", "A(q)", Expr::poly(&a, QT));
                r.check("matches_A", a.shift((d / 2) as i32, 0).eval_int(*q as i64) == per);
            }
            t.lap(r, "kernel");
        }
        Command::Chartab { q } => {
            r.query("q", json!(q));
            let tab = CharTableGL2::new(*q).map_err(err)?;
            t.lap(r, "table");
            r.value("group_order", json!(tab.group_order().to_string()));
            let classes: Vec<_> =
                tab.classes().iter().map(|(c, size)| json!({"class": c.to_string(), "size": size})).collect();
            let chars: Vec<_> =
                tab.chars().iter().map(|c| json!({"character": c.to_string(), "degree": c.degree(*q)})).collect();
            let rows: Vec<Vec<String>> = (0..tab.chars().len())
                .map(|i| (0..tab.classes().len()).map(|j| tab.entry(i, j).to_string()).collect())
                .collect();
            for (ch, row) in tab.chars().iter().zip(&rows) {
                r.note(format!("{ch}: {}", row.join(" | ")));
            }
            r.value("classes", json!(classes));
            r.value("characters", json!(chars));
            r.value("values", json!(rows));
            r.check("orthogonality", tab.check());
        }
        Command::Verify { suite: name } => {
            r.query("suite", json!(name));
            for rep in suite::run_small() {
                r.note(rep.to_string());
                r.check(&format!("criterion_{}", rep.id), rep.passed);
            }
            t.lap(r, "suite");
        }
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hmu { .. } => "hmu",
        Command::Epoly { .. } => "epoly",
        Command::Apoly { .. } => "apoly",
        Command::Mhp { .. } => "mhp",
        Command::Euler { .. } => "euler",
        Command::Count { .. } => "count",
        Command::Chartab { .. } => "chartab",
        Command::Verify { .. } => "verify",
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    if !cli.no_cache {
        set_cache_dir(cache_dir());
    }
    let mut report = Report::new(command_name(&cli.command));
    let mut timer = Timer::start();
    let outcome = run(&cli.command, &mut report, &mut timer);
    if !cli.timings {
        report.clear_timings();
    }
    match outcome {
        Ok(()) => {
            print!("{}", report.render(cli.format));
            let verify = matches!(cli.command, Command::Verify { .. });
            if verify && !report.all_checks_pass() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
