//! Command-line front end: solve domains, compute bound reports, verify
//! inequalities with CI-friendly exit codes, and print recursion
//! coefficients. Diagnostics go to stderr; exit codes are 0 (pass),
//! 1 (violation or solver failure), 2 (usage or I/O error).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use buckle_core::bounds::{coefficient_c, fg_polys};
use buckle_core::io::{ReportFile, SolutionFile, SpectrumFile, SPECTRUM_FORMAT};
use buckle_core::report::{build_report, report_to_csv};
use buckle_core::solver::{solve_buckling, SolverError};
use buckle_core::{DomainSpec, Spectrum};

mod verify;

#[derive(Parser)]
#[command(name = "buckle", about = "Buckling spectra and universal eigenvalue bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the order-l buckling problem on a domain and write a spectrum file
    Solve(SolveArgs),
    /// Compute per-k residuals, closed-form bounds, and tightness from a spectrum file
    Bounds(BoundsArgs),
    /// Check the universal inequalities on a spectrum file; exit 1 on violation
    Verify(VerifyArgs),
    /// Print the dimensional coefficient and the exact recursion coefficient table
    Coeffs(CoeffsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainKind {
    Interval,
    Rectangle,
    Disc,
    Cap,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    domain: DomainKind,
    /// Operator order l >= 2
    #[arg(long)]
    l: u32,
    /// 1D basis size per axis (boxes) or radial basis size (disc, cap)
    #[arg(long)]
    basis: usize,
    /// Number of eigenpairs to keep
    #[arg(long)]
    count: usize,
    /// Interval length
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    /// Rectangle sides, comma separated (2 or 3 values)
    #[arg(long, value_delimiter = ',')]
    sides: Option<Vec<f64>>,
    /// Disc radius
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Cap colatitude in (0, pi)
    #[arg(long)]
    theta0: Option<f64>,
    /// Largest azimuthal index on rotational domains
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    out: PathBuf,
    /// Also dump eigenvectors and moments for later verification
    #[arg(long)]
    solution_out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_name = "SPECTRUM")]
    r#in: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Largest k to report (default: spectrum length)
    #[arg(long)]
    k_max: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "SPECTRUM")]
    r#in: PathBuf,
    /// Solution dump for moment-chain checks
    #[arg(long)]
    solution: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    /// Largest k to check (default: spectrum length - 1)
    #[arg(long)]
    k_max: Option<usize>,
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long)]
    l: u32,
    #[arg(long)]
    n: u32,
}

/// Failure carrying its exit code.
enum Failure {
    /// Exit 1: solver failure or inequality violation.
    Run(String),
    /// Exit 2: bad flags, malformed files, I/O.
    Usage(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Run(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Coeffs(args) => cmd_coeffs(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn domain_from_args(args: &SolveArgs) -> Result<DomainSpec, Failure> {
    let domain = match args.domain {
        DomainKind::Interval => DomainSpec::Interval { length: args.length },
        DomainKind::Rectangle => DomainSpec::Rectangle {
            sides: args
                .sides
                .clone()
                .ok_or_else(|| Failure::Usage("--sides is required for --domain rectangle".into()))?,
        },
        DomainKind::Disc => DomainSpec::Disc { radius: args.radius },
        DomainKind::Cap => DomainSpec::SphericalCap {
            theta0: args
                .theta0
                .ok_or_else(|| Failure::Usage("--theta0 is required for --domain cap".into()))?,
        },
    };
    domain.validate().map_err(Failure::Usage)?;
    Ok(domain)
}

fn cmd_solve(args: SolveArgs) -> Result<(), Failure> {
    let domain = domain_from_args(&args)?;
    if args.l < 2 {
        return Err(Failure::Usage(format!("--l {} out of range (need l >= 2)", args.l)));
    }
    let solution = solve_buckling(&domain, args.l, args.basis, args.count, args.m_max)
        .map_err(|e| match e {
            SolverError::InvalidArgument(msg) => Failure::Usage(msg),
            SolverError::CountExceedsBasis { count, available } => Failure::Usage(format!(
                "--count {count} exceeds the {available} eigenpairs the basis provides"
            )),
            other => Failure::Run(other.to_string()),
        })?;
    if solution.completeness_warning {
        eprintln!(
            "warning: modal truncation may have missed lower eigenvalues; raise --m-max"
        );
    }
    let file = if solution.eigenvalues.is_empty() {
        SpectrumFile {
            format: SPECTRUM_FORMAT.to_string(),
            geometry: domain.geometry(),
            dimension: domain.dimension(),
            order: args.l,
            eigenvalues: vec![],
            domain: Some(domain.clone()),
            normalization: "dirichlet".to_string(),
        }
    } else {
        let spectrum = solution
            .to_spectrum()
            .map_err(|e| Failure::Run(e.to_string()))?;
        SpectrumFile::from_spectrum(&spectrum, Some(domain.clone()))
    };
    write_file(&args.out, &file.to_json())?;
    if let Some(path) = &args.solution_out {
        write_file(path, &SolutionFile::from_solution(&solution).to_json())?;
    }
    Ok(())
}

fn load_spectrum(path: &PathBuf) -> Result<Spectrum, Failure> {
    let text = read_file(path)?;
    let file = SpectrumFile::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    file.to_spectrum().map_err(|e| Failure::Usage(e.to_string()))
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Failure> {
    let spectrum = load_spectrum(&args.r#in)?;
    let k_max = args.k_max.unwrap_or(spectrum.len());
    let entries = build_report(&spectrum, k_max).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = ReportFile::new(&spectrum, entries);
    let json = report.to_json();
    match &args.out {
        Some(path) => write_file(path, &json)?,
        None => println!("{json}"),
    }
    if let Some(path) = &args.csv {
        let sphere = spectrum.geometry() == buckle_core::Geometry::Sphere;
        write_file(path, &report_to_csv(&report.entries, sphere))?;
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let spectrum = load_spectrum(&args.r#in)?;
    let solution = match &args.solution {
        Some(path) => {
            let text = read_file(path)?;
            Some(SolutionFile::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?)
        }
        None => None,
    };
    let violations = verify::run_checks(&spectrum, solution.as_ref(), args.tolerance, args.k_max)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if violations.is_empty() {
        eprintln!("all checks passed");
        Ok(())
    } else {
        for v in &violations {
            eprintln!("violation: {v}");
        }
        Err(Failure::Run(format!("{} check(s) failed", violations.len())))
    }
}

fn cmd_coeffs(args: CoeffsArgs) -> Result<(), Failure> {
    if args.l < 2 || args.n < 2 {
        return Err(Failure::Usage(format!(
            "--l {} --n {} out of range (need l >= 2, n >= 2)",
            args.l, args.n
        )));
    }
    let c = coefficient_c(args.l, args.n);
    let rec = fg_polys(args.l, args.n).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("C({}, {}) = {}", args.l, args.n, c);
    for (q, (f, g)) in rec.f.iter().zip(rec.g.iter()).enumerate() {
        println!("F_{q} = {:?}", f.coeffs());
        println!("G_{q} = {:?}", g.coeffs());
    }
    println!("a = {:?}", rec.a);
    Ok(())
}
