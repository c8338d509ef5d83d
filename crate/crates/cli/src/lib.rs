//! File formats and the `hecke` command line for Γ₀(N) computations.

pub mod export;

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use hecke::arith::{Sieve, DEFAULT_SIEVE_BOUND};
use hecke::belyi::{belyi_table, verify_belyi};
use hecke::cusps::{
    cusp_count, cusp_l_series_zeta_form, enumerate_cusps, euler_factor_closed_form_series,
    euler_factor_coeffs, euler_product, width_spectrum, zeta_identity_residual,
};
use hecke::dessin::{
    build, fibers, genus_euler, genus_rh, quotient_morphism, torsion2_count, torsion3_count,
};
use hecke::projline::{enumerate, index, to_lattice_label};
use hecke::{Error, GENUS_ZERO_LEVELS};

pub use export::{dessin_to_dot, export_dessin, import_dessin, report_to_json, Format};

pub const SIEVE_ENV: &str = "HECKE_SIEVE_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "hecke",
    version,
    about = "Coset geometry of the Hecke congruence subgroups Γ₀(N)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index of Γ₀(N) in PSL₂(Z)
    Index { level: u64 },
    /// Points of P¹(Z/NZ) with their lattice labels
    Points { level: u64 },
    /// The dessin B₀,N
    Dessin {
        level: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Cusp cycles, representatives, labels and widths
    Cusps { level: u64 },
    /// Torsion point counts, closed form and by enumeration
    Torsion { level: u64 },
    /// Genus via Euler characteristic and via Riemann–Hurwitz
    Genus { level: u64 },
    /// Fibers of the canonical map B₀,N → B₀,d
    Morphism { level: u64, divisor: u64 },
    /// Euler factor of the cusp-count Dirichlet series at a prime
    Lseries {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        order: usize,
    },
    /// Truncated Euler product against the ζ closed form
    ZetaCheck {
        #[arg(long)]
        s: u32,
        #[arg(long = "prime-bound")]
        prime_bound: u64,
    },
    /// The tabulated Belyi map of a genus-zero level
    Belyi {
        level: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Cusp tables for every genus-zero level
    Tabulate {
        #[arg(long)]
        genus0: bool,
    },
}

/// Outcome of a command other than success.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) | Error::TranscriptionMismatch { .. } => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Verification(e.to_string())
    }
}

/// Sieve bound from `HECKE_SIEVE_BOUND`, or the default.
pub fn sieve_bound_from_env() -> Result<u64, String> {
    match std::env::var(SIEVE_ENV) {
        Err(_) => Ok(DEFAULT_SIEVE_BOUND),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b >= 2)
            .ok_or_else(|| format!("{SIEVE_ENV} must be an integer >= 2, got {v:?}")),
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let sieve = match sieve_bound_from_env() {
        Ok(bound) => Sieve::new(bound),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let mut text = String::new();
    let result = execute(cli.command, &sieve, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
    }
}

fn checked(level: u64, sieve: &Sieve) -> Result<u64, Failure> {
    sieve.factorize(level)?;
    Ok(level)
}

fn execute(command: Command, sieve: &Sieve, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Index { level } => {
            writeln!(out, "{}", index(checked(level, sieve)?)?)?;
        }
        Command::Points { level } => {
            for p in enumerate(checked(level, sieve)?)? {
                writeln!(out, "{p} {}", to_lattice_label(&p))?;
            }
        }
        Command::Dessin { level, format } => {
            let d = build(checked(level, sieve)?)?;
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Dot => Format::Dot,
            };
            out.push_str(&export_dessin(&d, format)?);
        }
        Command::Cusps { level } => {
            let level = checked(level, sieve)?;
            writeln!(
                out,
                "level {level} index {} cusps {}",
                index(level)?,
                cusp_count(level)?
            )?;
            cusp_table(level, out)?;
        }
        Command::Torsion { level } => {
            let level = checked(level, sieve)?;
            let d = build(level)?;
            writeln!(
                out,
                "nu2 closed {} dessin {}",
                torsion2_count(level)?,
                d.white_fixed_points()
            )?;
            writeln!(
                out,
                "nu3 closed {} dessin {}",
                torsion3_count(level)?,
                d.black_fixed_points()
            )?;
        }
        Command::Genus { level } => {
            let level = checked(level, sieve)?;
            writeln!(out, "euler {}", genus_euler(&build(level)?)?)?;
            writeln!(out, "riemann-hurwitz {}", genus_rh(level)?)?;
        }
        Command::Morphism { level, divisor } => {
            let level = checked(level, sieve)?;
            let map = quotient_morphism(level, divisor)?;
            let source = enumerate(level)?;
            let target = enumerate(divisor)?;
            writeln!(
                out,
                "level {level} -> {divisor} degree {}",
                index(level)? / index(divisor)?
            )?;
            for (t, fiber) in target.iter().zip(fibers(&map, target.len())) {
                let members: Vec<String> = fiber.iter().map(|&i| source[i].to_string()).collect();
                writeln!(out, "{t} <- {}", members.join(" "))?;
            }
        }
        Command::Lseries { prime, order } => {
            let direct = euler_factor_coeffs(prime, order)?;
            let series = euler_factor_closed_form_series(prime, order)?;
            writeln!(out, "coefficients {}", join(&direct))?;
            writeln!(out, "closed form  {}", join(&series))?;
            if direct != series {
                return Err(Failure::Verification("coefficient lists differ".into()));
            }
            writeln!(out, "equal")?;
        }
        Command::ZetaCheck { s, prime_bound } => {
            if s < 2 || prime_bound < 2 {
                return Err(Failure::Usage(
                    "zeta-check needs --s >= 2 and --prime-bound >= 2".into(),
                ));
            }
            writeln!(out, "euler product {:.11e}", euler_product(s, prime_bound))?;
            writeln!(out, "zeta form     {:.11e}", cusp_l_series_zeta_form(s))?;
            writeln!(
                out,
                "residual      {:.11e}",
                zeta_identity_residual(s, prime_bound)
            )?;
        }
        Command::Belyi { level, verify } => {
            if !verify {
                writeln!(out, "{}", belyi_table(level)?)?;
                return Ok(());
            }
            let report = verify_belyi(level)?;
            out.push_str(&report_to_json(&report));
            if !report.passed() {
                let failed: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                return Err(Failure::Verification(format!(
                    "level {level}: {}",
                    failed.join(", ")
                )));
            }
        }
        Command::Tabulate { genus0 } => {
            if !genus0 {
                return Err(Failure::Usage("tabulate requires --genus0".into()));
            }
            tabulate_genus0(out)?;
        }
    }
    Ok(())
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cusp_table(level: u64, out: &mut String) -> Result<(), Failure> {
    writeln!(out, "cycle | representative | label | width")?;
    for cusp in enumerate_cusps(&build(level)?) {
        let members: Vec<String> = cusp.members.iter().map(|p| p.to_string()).collect();
        let rep = cusp.members[0];
        writeln!(
            out,
            "({}) | {rep} | {} | {}",
            members.join(", "),
            to_lattice_label(&rep),
            cusp.width
        )?;
    }
    Ok(())
}

fn tabulate_genus0(out: &mut String) -> Result<(), Failure> {
    let (mut sum, mut squares) = (0, 0);
    for level in GENUS_ZERO_LEVELS {
        let c = cusp_count(level)?;
        sum += c;
        squares += c * c;
        writeln!(out, "Gamma0({level})")?;
        writeln!(
            out,
            "index {} genus {} nu2 {} nu3 {} cusps {c} widths {}",
            index(level)?,
            genus_euler(&build(level)?)?,
            torsion2_count(level)?,
            torsion3_count(level)?,
            width_spectrum(level)?
        )?;
        cusp_table(level, out)?;
        writeln!(out)?;
    }
    writeln!(out, "{sum} {squares}")?;
    Ok(())
}
