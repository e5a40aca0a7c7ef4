//! Command-line front end: exact discriminants, reductions, branch data,
//! specialisation searches, real-root counts, Galois-group evidence, and the
//! bundled-family certification and reproduce harnesses.
//!
//! Exit codes: 0 all checks pass, 1 any mismatch or failed verdict, 2 usage
//! error (bad arguments, unreadable or unparseable input).

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gspec_core::arith::parse_rational;
use gspec_core::catalog::{catalog, lookup, reproduce, reproduce_all};
use gspec_core::certify::{certify_family, serialize_certificate};
use gspec_core::fp::{fmt_fp_bivar, fmt_fp_poly, reduce_bipoly, reduce_int_poly};
use gspec_core::galois::{
    profiles_for_degree, rigorous_s5, sample_cycle_types, statistical_match,
};
use gspec_core::poly::{fmt_int_poly, BiPoly, ParsedPoly};
use gspec_core::real_roots::{count_real_roots, not_totally_real_witness};
use gspec_core::specialization::{branch_data, excluded_residues, meets_mod_p, search_t0};
use gspec_core::Rational;

const DEFAULT_PRIME_BOUND: u64 = 20_000;

#[derive(Parser)]
#[command(
    name = "gspec",
    about = "exact certification of arithmetic properties of specialisations \
             of function-field extensions presented by P(T, Y)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Y-discriminant of a bivariate polynomial file.
    Disc { polyfile: String },
    /// Reduce a polynomial file modulo a prime.
    Reduce {
        polyfile: String,
        #[arg(short, long)]
        p: u64,
    },
    /// Branch-point superset: bound, squarefree factors, excluded residues.
    Branch {
        polyfile: String,
        #[arg(short, long)]
        p: Option<u64>,
    },
    /// Does t meet the branch superset modulo p?
    Meets {
        polyfile: String,
        #[arg(short, long)]
        p: u64,
        #[arg(short, long)]
        t: String,
    },
    /// Smallest admissible integer specialisation point modulo p.
    #[command(name = "search-t0")]
    SearchT0 {
        polyfile: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Derivative witness that the specialisation is not totally real.
    Imaginary {
        polyfile: String,
        #[arg(short, long)]
        t: String,
    },
    /// Count distinct real roots of a univariate polynomial file.
    Sturm { unipolyfile: String },
    /// Galois-group evidence at a specialisation point.
    #[command(name = "galois-id")]
    GaloisId {
        polyfile: String,
        #[arg(short, long)]
        t: String,
        #[arg(long)]
        primes: Option<u64>,
        #[arg(long)]
        rigorous: bool,
    },
    /// Certify a bundled family and emit its certificate.
    Certify {
        entry: String,
        #[arg(long)]
        primes: Option<u64>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Recompute the expected constants of a bundled entry (or "all").
    Reproduce { entry: String },
}

fn prime_bound(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("GS_PRIME_BOUND")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_PRIME_BOUND)
}

/// Usage-class failure: bad input or arguments.
fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Check-class failure: the computation ran and the verdict is negative.
fn failed(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("{msg}");
    ExitCode::from(1)
}

fn read_file(path: &str) -> Result<String, ExitCode> {
    fs::read_to_string(path).map_err(|e| usage(format_args!("cannot read {path}: {e}")))
}

fn read_bipoly(path: &str) -> Result<BiPoly, ExitCode> {
    let text = read_file(path)?;
    gspec_core::poly::parse_bipoly(&text).map_err(|e| usage(format_args!("{path}: {e}")))
}

fn read_point(s: &str) -> Result<Rational, ExitCode> {
    parse_rational(s).map_err(usage)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Disc { polyfile } => {
            let p = match read_bipoly(&polyfile) {
                Ok(p) => p,
                Err(c) => return c,
            };
            match p.discriminant_y() {
                Ok(d) => {
                    println!("{}", fmt_int_poly(&d, 'T'));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::Reduce { polyfile, p } => {
            let text = match read_file(&polyfile) {
                Ok(t) => t,
                Err(c) => return c,
            };
            let parsed = match ParsedPoly::parse(&text) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            // univariate input reduces in its own variable; bivariate to
            // F_p[T][Y]
            if let (Some(var), Ok(f)) = (parsed.single_var(), parsed.to_int_poly()) {
                match reduce_int_poly(&f, p) {
                    Ok(fp) => {
                        println!("{}", fmt_fp_poly(&fp, var));
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage(e),
                }
            } else {
                match parsed.to_bipoly() {
                    Ok(bp) => match reduce_bipoly(&bp, p) {
                        Ok(red) => {
                            println!("{}", fmt_fp_bivar(&red));
                            ExitCode::SUCCESS
                        }
                        Err(e) => usage(e),
                    },
                    Err(e) => usage(e),
                }
            }
        }
        Command::Branch { polyfile, p } => {
            let poly = match read_bipoly(&polyfile) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let branch = match branch_data(&poly) {
                Ok(b) => b,
                Err(e) => return failed(e),
            };
            println!("disc {}", fmt_int_poly(&branch.disc, 'T'));
            for (f, m) in &branch.squarefree_factors {
                println!("squarefree_factor {} multiplicity {m}", fmt_int_poly(f, 'T'));
            }
            println!("include_infinity {}", branch.include_infinity);
            println!("branch_bound {}", branch.branch_bound);
            if let Some(q) = p {
                match excluded_residues(&branch, q) {
                    Ok(ex) => {
                        let parts: Vec<String> = ex.iter().map(|r| r.to_string()).collect();
                        println!("excluded_residues mod {q} [{}]", parts.join(", "));
                    }
                    Err(e) => return usage(e),
                }
            }
            ExitCode::SUCCESS
        }
        Command::Meets { polyfile, p, t } => {
            let poly = match read_bipoly(&polyfile) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let point = match gspec_core::arith::parse_point(&t) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            let branch = match branch_data(&poly) {
                Ok(b) => b,
                Err(e) => return failed(e),
            };
            match meets_mod_p(&point, &branch, p) {
                Ok(b) => {
                    println!("{b}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::SearchT0 { polyfile, p, bound } => {
            let poly = match read_bipoly(&polyfile) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let branch = match branch_data(&poly) {
                Ok(b) => b,
                Err(e) => return failed(e),
            };
            match search_t0(&branch, p, bound.unwrap_or(p)) {
                Ok(t0) => {
                    println!("{t0}");
                    ExitCode::SUCCESS
                }
                Err(e) => failed(e),
            }
        }
        Command::Imaginary { polyfile, t } => {
            let poly = match read_bipoly(&polyfile) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let t0 = match read_point(&t) {
                Ok(x) => x,
                Err(c) => return c,
            };
            match not_totally_real_witness(&poly, &t0) {
                Ok(Some(n)) => {
                    println!("{n}");
                    ExitCode::SUCCESS
                }
                Ok(None) => {
                    println!("none");
                    ExitCode::SUCCESS
                }
                Err(e) => failed(e),
            }
        }
        Command::Sturm { unipolyfile } => {
            let text = match read_file(&unipolyfile) {
                Ok(t) => t,
                Err(c) => return c,
            };
            let f = match gspec_core::poly::parse_rat_poly(&text) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            match count_real_roots(&f) {
                Ok(n) => {
                    println!("{n}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::GaloisId { polyfile, t, primes, rigorous } => {
            let poly = match read_bipoly(&polyfile) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let t0 = match read_point(&t) {
                Ok(x) => x,
                Err(c) => return c,
            };
            let bound = prime_bound(primes);
            if rigorous {
                match rigorous_s5(&poly, &t0, bound) {
                    Ok(Some(ev)) => {
                        println!("mode rigorous");
                        for w in &ev.witnesses {
                            println!("witness {w}");
                        }
                        println!("matched_profile {}", ev.matched_profile.unwrap_or_default());
                        ExitCode::SUCCESS
                    }
                    Ok(None) => failed("inconclusive"),
                    Err(e) => usage(e),
                }
            } else {
                let stats = match sample_cycle_types(&poly, &t0, bound) {
                    Ok(s) => s,
                    Err(e) => return failed(e),
                };
                println!("sampled_primes {}", stats.used);
                println!("skipped {}", stats.skipped);
                for (ty, count) in &stats.counts {
                    println!("type {ty} {count}");
                }
                let profiles = profiles_for_degree(poly.y_degree() as u32);
                if profiles.is_empty() {
                    println!("matched_profile none (no bundled profile of this degree)");
                    return ExitCode::SUCCESS;
                }
                match statistical_match(&stats, &profiles, 1) {
                    Ok(ev) => {
                        match ev.matched_profile {
                            Some(m) => {
                                println!("matched_profile {m}");
                                if let Some(d) = ev.distance {
                                    println!("distance {}/{}", d.numer(), d.denom());
                                }
                                ExitCode::SUCCESS
                            }
                            None => failed("matched_profile none (all profiles disqualified)"),
                        }
                    }
                    Err(e) => failed(e),
                }
            }
        }
        Command::Certify { entry, primes, output } => {
            let e = match lookup(&entry) {
                Ok(e) => e,
                Err(err) => return usage(err),
            };
            let bound = prime_bound(primes);
            match certify_family(&e, bound) {
                Ok(cert) => {
                    let text = serialize_certificate(&cert);
                    if let Some(path) = output {
                        if let Err(err) = fs::write(&path, &text) {
                            return usage(format_args!("cannot write {path}: {err}"));
                        }
                        println!("wrote {path}");
                    } else {
                        print!("{text}");
                    }
                    if cert.verdict {
                        ExitCode::SUCCESS
                    } else {
                        failed("verdict false")
                    }
                }
                Err(err) => failed(err),
            }
        }
        Command::Reproduce { entry } => {
            if entry == "all" {
                match reproduce_all() {
                    Ok(text) => {
                        print!("{text}");
                        let ok = catalog()
                            .iter()
                            .all(|e| reproduce(e.name).map(|r| r.all_match()).unwrap_or(false));
                        if ok {
                            ExitCode::SUCCESS
                        } else {
                            failed("some constants did not match")
                        }
                    }
                    Err(e) => usage(e),
                }
            } else {
                match reproduce(&entry) {
                    Ok(report) => {
                        print!("{report}");
                        if report.all_match() {
                            ExitCode::SUCCESS
                        } else {
                            failed("some constants did not match")
                        }
                    }
                    Err(e) => usage(e),
                }
            }
        }
    }
}
