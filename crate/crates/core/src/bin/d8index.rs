use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use d8_index::bounds::{self, BoundReport, ZReading};
use d8_index::catalog::{restriction, subgroup_ring};
use d8_index::index::{self, IndexIdeal, ProductKind, SignVector};
use d8_index::verify::{run_suite, Caps, Suite};
use d8_index::{Coefficients, Error, RingElement};

/// Fadell–Husseini index computations for D8 and two-hyperplane mass-partition bounds.
#[derive(Parser)]
#[command(name = "d8index", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    F2,
    Z,
    H1f2,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingCoeff {
    F2,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    NonInclusion,
    Inclusion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Diagram,
    Indexes,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "pi")]
    LowerPi,
    #[value(name = "Pi")]
    UpperPi,
    Rho,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Partial,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum IdealName {
    SphereR4jF2,
    SphereR4jZ,
    ProductSpheresF2,
    ProductSpheresZ,
    Torus,
    RepSphere,
    #[value(name = "h1_z_product")]
    H1ZProduct,
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one admissibility criterion for (d, j, 2).
    Admissible {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, value_enum)]
        coeff: CoeffArg,
        /// Reading of the integral inclusion test.
        #[arg(long, value_enum, default_value = "non-inclusion")]
        reading: ReadingArg,
    },
    /// Lower, upper and criterion-certified bounds for one j.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        scan_cap: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Bound reports for j = 1..=j_max.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j_max: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        scan_cap: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Degree cap for sweeps (overrides MPI_MAX_DEGREE).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: Option<u32>,
    },
    /// Print a polynomial of the pi, Pi or rho family.
    Poly {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        d: u32,
    },
    /// Apply a restriction map to an element.
    Restrict {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum)]
        coeff: RingCoeff,
        #[arg(long)]
        element: String,
    },
    /// Print the generators of a catalogued index ideal.
    Ideal {
        #[arg(long, value_enum)]
        name: IdealName,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: Option<u32>,
        #[arg(long)]
        n: Option<String>,
        /// Comma-separated sign vectors such as `-+,+-,--`.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
        #[arg(long, value_enum, default_value = "partial")]
        kind: KindArg,
    },
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: T,
}

fn json<T: Serialize>(body: T) -> String {
    serde_json::to_string_pretty(&Envelope { schema: "1", body }).expect("serializable output")
}

#[derive(Serialize)]
struct Rows {
    rows: Vec<BoundReport>,
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn opt(x: Option<u32>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

const CSV_HEADER: &str = "j,ramos,mvz,f2_min_d,z_min_d,h1_min_d";

fn csv_row(r: &BoundReport) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.j,
        r.ramos_lower,
        r.mvz_upper,
        opt(r.f2_min_d),
        opt(r.z_min_d),
        opt(r.h1_min_d)
    )
}

fn text_table(rows: &[BoundReport]) -> String {
    let show = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let mut s = format!(
        "{:>4} {:>6} {:>6} {:>9} {:>8} {:>9}\n",
        "j", "ramos", "mvz", "f2_min_d", "z_min_d", "h1_min_d"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>4} {:>6} {:>6} {:>9} {:>8} {:>9}",
            r.j,
            r.ramos_lower,
            r.mvz_upper,
            show(r.f2_min_d),
            show(r.z_min_d),
            show(r.h1_min_d)
        );
    }
    s.pop();
    s
}

fn render_reports(rows: Vec<BoundReport>, format: Format, single: bool) -> String {
    match format {
        Format::Json if single => json(rows.into_iter().next().expect("one row")),
        Format::Json => json(Rows { rows }),
        Format::Csv => {
            let mut lines = vec![CSV_HEADER.to_string()];
            lines.extend(rows.iter().map(csv_row));
            lines.join("\n")
        }
        Format::Text => text_table(&rows),
    }
}

fn env_max_degree() -> Result<Option<u32>, Failure> {
    match std::env::var("MPI_MAX_DEGREE") {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&n| n >= 1)
            .map(Some)
            .ok_or_else(|| {
                usage(format!(
                    "MPI_MAX_DEGREE must be a positive integer, got `{v}`"
                ))
            }),
        Err(_) => Ok(None),
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| usage(format!("bad integer list `{s}`")))
        })
        .collect()
}

fn need(x: Option<u32>, flag: &str) -> Result<u32, Failure> {
    x.ok_or_else(|| usage(format!("--{flag} is required for this ideal")))
}

fn build_ideal(
    name: IdealName,
    d: Option<u32>,
    j: Option<u32>,
    n: Option<String>,
    signs: Option<String>,
    kind: KindArg,
) -> Result<String, Failure> {
    let show = |gens: &[RingElement]| {
        gens.iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    let ideal: IndexIdeal = match name {
        IdealName::SphereR4jF2 => index::index_sphere_r4j_f2(need(j, "j")?),
        IdealName::SphereR4jZ => index::index_sphere_r4j_z(need(j, "j")?),
        IdealName::ProductSpheresF2 => {
            let kind = match kind {
                KindArg::Partial => ProductKind::Partial,
                KindArg::Full => ProductKind::Full,
            };
            index::index_product_spheres_f2(need(d, "d")?, kind)
        }
        IdealName::ProductSpheresZ => index::index_product_spheres_z(need(d, "d")?),
        IdealName::Torus => {
            let n = n.ok_or_else(|| usage("--n is required for this ideal"))?;
            index::index_torus_z2k(&parse_list(&n)?)?
        }
        IdealName::RepSphere => {
            let signs = signs.ok_or_else(|| usage("--signs is required for this ideal"))?;
            let vs = signs
                .split(',')
                .map(|s| SignVector::parse(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let k = vs[0].len();
            index::index_rep_sphere_z2k(&vs, k)?
        }
        IdealName::H1ZProduct => {
            let n = n.ok_or_else(|| usage("--n is required for this ideal"))?;
            let n: u32 = n
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad --n `{n}`")))?;
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            index::index_h1_z_product(n)
        }
        IdealName::A => return Ok(show(&bounds::a_ideal(need(j, "j")?))),
        IdealName::B => return Ok(show(&bounds::b_ideal(need(d, "d")?))),
    };
    Ok(show(&ideal.generators))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Admissible {
            d,
            j,
            coeff,
            reading,
        } => {
            let verdict = match coeff {
                CoeffArg::F2 => bounds::admissible_f2(d, j)?,
                CoeffArg::H1f2 => bounds::admissible_h1_f2(d, j)?,
                CoeffArg::Z => {
                    let reading = match reading {
                        ReadingArg::NonInclusion => ZReading::NonInclusion,
                        ReadingArg::Inclusion => ZReading::Inclusion,
                    };
                    bounds::admissible_z_with(d, j, reading)?
                }
            };
            Ok((json(verdict), 0))
        }
        Command::Bounds {
            j,
            scan_cap,
            format,
        } => {
            let report = bounds::bound_report(j, scan_cap)?;
            Ok((render_reports(vec![report], format, true), 0))
        }
        Command::Table {
            j_max,
            scan_cap,
            format,
        } => {
            let rows = (1..=j_max)
                .into_par_iter()
                .map(|j| bounds::bound_report(j, scan_cap))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((render_reports(rows, format, false), 0))
        }
        Command::Verify { suite, max_degree } => {
            let suite = match suite {
                SuiteArg::Lemmas => Suite::Lemmas,
                SuiteArg::Diagram => Suite::Diagram,
                SuiteArg::Indexes => Suite::Indexes,
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::All => Suite::All,
            };
            let caps = match max_degree.or(env_max_degree()?) {
                Some(n) => Caps::with_max_degree(n),
                None => Caps::default(),
            };
            let checks = run_suite(suite, caps)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut out = String::new();
            for c in &checks {
                let _ = writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            }
            let _ = write!(
                out,
                "{suite}: {} passed, {failed} failed",
                checks.len() - failed
            );
            Ok((out, u8::from(failed > 0)))
        }
        Command::Poly { family, d } => {
            let p = match family {
                Family::LowerPi => index::pi_poly(d),
                Family::UpperPi => index::capital_pi_poly(d),
                Family::Rho => index::rho(d),
            };
            Ok((p.to_string(), 0))
        }
        Command::Restrict {
            from,
            to,
            coeff,
            element,
        } => {
            let coeff = match coeff {
                RingCoeff::F2 => Coefficients::F2,
                RingCoeff::Z => Coefficients::Z,
            };
            let domain = subgroup_ring(&from, coeff)?;
            let hom = restriction(&from, &to, coeff)?;
            let e = RingElement::parse(&domain, &element)?;
            Ok((hom.apply(&e)?.to_string(), 0))
        }
        Command::Ideal {
            name,
            d,
            j,
            n,
            signs,
            kind,
        } => Ok((build_ideal(name, d, j, n, signs, kind)?, 0)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
