use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rigtrop::boxball::{evolve_t1inf, evolve_trs, BoxBallState};
use rigtrop::cli::{parse_list, parse_path, run_suite, sweep_conjecture, PathSpec, PolyKind, PolySpec};
use rigtrop::rigged::{phi, phi_inverse, phi_trace, RiggedConfiguration};
use rigtrop::tropical::{conjectured_shape, first_shape_theorem, path_coordinates, trop_eval};
use rigtrop::Result;

#[derive(Parser)]
#[command(name = "rigtrop", version, about = "Box-ball systems, rigged configurations and tropical shape formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a path by T^{1,∞} (single-letter factors) or by T^{r,s}.
    Evolve {
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// `r,s` for the carrier evolution T^{r,s}.
        #[arg(long)]
        rs: Option<String>,
    },
    /// Print the rigged configuration of a path as JSON.
    Phi {
        #[arg(long)]
        path: String,
        /// Print one configuration per factor.
        #[arg(long)]
        trace: bool,
    },
    /// Recover a path from a rigged configuration given as JSON.
    PhiInv {
        #[arg(long)]
        rc: String,
        /// Factor widths left to right; defaults to the rows of ν^{(0)}.
        #[arg(long)]
        order: Option<String>,
    },
    /// Loop symmetric functions.
    Lsym {
        #[command(subcommand)]
        command: LsymCommand,
    },
    /// Tropical evaluation at path coordinates.
    Trop {
        #[command(subcommand)]
        command: TropCommand,
    },
    /// Run verification suites; exit status 1 if any check fails.
    Verify {
        /// Comma separated suite names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Compare Φ shapes with the conjectured shapes and print CSV.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        width_cap: usize,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Subcommand)]
enum LsymCommand {
    /// Print every term, one per line.
    Expand {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum TropCommand {
    /// Tropicalize a polynomial at the coordinates of a one-row path.
    Eval {
        #[arg(long)]
        path: String,
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Compare ν^{(s)} of Φ with the shape formulas.
    Shapes {
        #[arg(long)]
        path: String,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// One of e, schur, cschur, tau.
    #[arg(long)]
    kind: String,
    /// Color r (for tau, the top color a).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    r: i64,
    /// Degree of e or tau.
    #[arg(long, default_value_t = 0)]
    k: i64,
    /// Outer shape, e.g. `2,1`.
    #[arg(long, default_value = "")]
    shape: String,
    /// Inner shape for skew shapes.
    #[arg(long, default_value = "")]
    inner: String,
    /// Cylinder shift s for cschur.
    #[arg(long, default_value_t = 1)]
    s: usize,
}

impl PolyArgs {
    fn spec(&self, n: usize, m: usize) -> Result<PolySpec> {
        Ok(PolySpec {
            kind: self.kind.parse::<PolyKind>()?,
            n,
            m,
            r: self.r,
            k: self.k,
            outer: parse_list(&self.shape)?,
            inner: parse_list(&self.inner)?,
            s: self.s,
        })
    }
}

fn evolve(path: &str, steps: usize, rs: Option<&str>) -> Result<()> {
    let spec = parse_path(path)?;
    let p = spec.to_tensor()?;
    if let Some(rs) = rs {
        let rs: Vec<usize> = parse_list(rs)?;
        let [r, s] = rs[..] else {
            return Err(rigtrop::Error::InvalidParameters("--rs expects `r,s`".into()));
        };
        let mut cur = p;
        println!("t=0: {cur}");
        for t in 1..=steps {
            cur = evolve_trs(&cur, r, s)?.0;
            println!("t={t}: {cur}");
        }
        return Ok(());
    }
    if spec.factors.iter().any(|w| w.len() != 1) {
        return Err(rigtrop::Error::InvalidParameters(
            "T^{1,∞} needs single-letter factors; use --rs for other widths".into(),
        ));
    }
    let cells = spec.factors.iter().map(|w| w[0]).collect();
    let mut states = vec![BoxBallState::new(cells, spec.n)?];
    for _ in 0..steps {
        let next = evolve_t1inf(states.last().expect("nonempty"));
        states.push(next);
    }
    let width = states.iter().map(BoxBallState::len).max().unwrap_or(0);
    for (t, s) in states.iter().enumerate() {
        println!("t={t}: {}", s.render_width(width));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Evolve { path, steps, rs } => evolve(&path, steps, rs.as_deref())?,
        Command::Phi { path, trace } => {
            let p = parse_path(&path)?.to_tensor()?;
            if trace {
                for rc in phi_trace(&p)? {
                    println!("{}", rc.to_json());
                }
            } else {
                println!("{}", phi(&p)?.to_json());
            }
        }
        Command::PhiInv { rc, order } => {
            let rc = RiggedConfiguration::from_json(&rc)?;
            let order = match order {
                Some(o) => parse_list(&o)?,
                None => rc.nu0().parts().to_vec(),
            };
            let p = phi_inverse(&rc, &order)?;
            println!("{}", PathSpec::from_tensor(&p)?);
        }
        Command::Lsym {
            command: LsymCommand::Expand { poly, n, m },
        } => println!("{}", poly.spec(n, m)?.build()?),
        Command::Trop { command } => match command {
            TropCommand::Eval { path, poly } => {
                let p = parse_path(&path)?.to_tensor()?;
                let f = poly.spec(p.n(), p.len())?.build()?;
                println!("{}", trop_eval(&f, &path_coordinates(&p)?)?);
            }
            TropCommand::Shapes { path } => {
                let p = parse_path(&path)?.to_tensor()?;
                let rc = phi(&p)?;
                println!("first shape formula: {}", first_shape_theorem(&p)?);
                for s in 1..p.n() {
                    let formula = match conjectured_shape(&p, s) {
                        Ok(shape) => shape.to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    println!("s={s}: phi {} formula {formula}", rc.shape(s));
                }
            }
        },
        Command::Verify { suite } => {
            let names: Vec<&str> = suite.split(',').map(str::trim).collect();
            let report = run_suite(&names)?;
            println!("{}", report.to_json());
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Sweep {
            n,
            m,
            width_cap,
            samples,
            seed,
            exhaustive,
        } => {
            let report = sweep_conjecture(n, m, width_cap, samples, seed, exhaustive)?;
            print!("{}", report.to_csv());
            eprintln!("{}", report.summary());
            if report.mismatch_records().next().is_some() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
