use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde_json::json;

use caylerian::format;
use caylerian::guard;
use caylerian::verify;

use caylerian_core::burge::{
    burge_transpose, count_burge, enumerate_burge, enumerate_mat, matrix_to_biword, Biword,
    BurgeClass, Variant,
};
use caylerian_core::cayley::{enumerate_cayley, enumerate_wi, format_word, fubini, parse_word};
use caylerian_core::genburge::{compatible_count_formula, enumerate_genbur, enumerate_genmat};
use caylerian_core::polynomials::{
    bhat, carlitz_coeffs, caylerian, caylerian_series_coeffs, eulerian, gamma_two_sided,
    gamma_vector, max_statistic_poly, two_sided_caylerian, two_sided_eulerian, EulerianMethod,
    Poly1, Poly2, SeriesVariant,
};
use caylerian_core::prescribed::{alpha_poly, enumerate_mat_s, fit_polynomial, kappa_general, AscentSpec};
use num_rational::BigRational;

#[derive(Parser)]
#[command(name = "caylerian", version, about = "Cayley permutations, Burge words, and Caylerian polynomials")]
struct Cli {
    /// Thread count for the work pool (default: rayon's choice).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Bypass the resource guard.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Cayley,
    Wi,
    Burge,
    Genburge,
    MatS,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Binary,
    Perm,
    Omega,
}

impl ClassArg {
    fn to_class(self) -> BurgeClass {
        match self {
            ClassArg::All => BurgeClass::All,
            ClassArg::Binary => BurgeClass::Binary,
            ClassArg::Perm => BurgeClass::Perm,
            ClassArg::Omega => BurgeClass::Omega,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum AsArg {
    Words,
    Biwords,
    Matrices,
    Count,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Eulerian,
    Caylerian,
    TwoSided,
    B,
    Bhat,
    MaxStat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaWhich {
    One,
    Two,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesWhich {
    Carlitz,
    Caylerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Weak,
    Strict,
    Perm,
}

#[derive(Subcommand)]
enum Cmd {
    /// List or count combinatorial families.
    Enumerate {
        #[arg(value_enum)]
        what: What,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        /// Ascent set S as comma-separated positions, e.g. "1,3".
        #[arg(long)]
        set: Option<String>,
        #[arg(long = "as", value_enum, default_value = "words")]
        output: AsArg,
        #[arg(long, value_enum, default_value = "lines")]
        format: FormatArg,
    },
    /// Compute a polynomial family member.
    Poly {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "lines")]
        format: FormatArg,
    },
    /// Extract a gamma expansion.
    Gamma {
        #[arg(value_enum)]
        which: GammaWhich,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Series coefficients of t*P_n(t)/(1-t)^{n+1}.
    Series {
        #[arg(value_enum)]
        which: SeriesWhich,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long, value_enum, default_value = "weak")]
        variant: VariantArg,
    },
    /// Burge-transpose a biword given as TOP/BOTTOM.
    Transpose {
        #[arg(long)]
        biword: String,
    },
    /// kappa_n(S): Cayley permutations with prescribed ascent sets.
    Kappa {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        strict: bool,
        /// Emit the full alpha_n(S;t) polynomial instead of the count.
        #[arg(long = "poly-t")]
        poly_t: bool,
    },
    /// Sample kappa_{k+i}(S) and fit a degree-k polynomial exactly.
    Fit {
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        points: usize,
    },
    /// Run the identity suite and emit a JSON report.
    Verify {
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
        /// Comma-separated suite ids, or "all".
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn run_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    EXIT_FAIL
}

fn parse_set(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match part.parse::<usize>() {
            Ok(v) if v >= 1 => out.push(v),
            _ => return Err(format!("invalid set element: {part}")),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn print_poly1(p: &Poly1, fmt: FormatArg) {
    match fmt {
        FormatArg::Lines => println!("{}", format::poly1_line(p)),
        FormatArg::Json => println!("{}", format::poly1_json(p)),
        FormatArg::Csv => {
            let cells: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}", cells.join(","));
        }
    }
}

fn print_poly2(p: &Poly2, bound: u32, fmt: FormatArg) {
    match fmt {
        FormatArg::Lines => println!("{p}"),
        FormatArg::Json => println!("{}", format::poly2_json(p)),
        FormatArg::Csv => print!("{}", format::poly2_csv(p, bound)),
    }
}

fn guarded(n: usize, mn: Option<usize>, force: bool) -> Result<(), u8> {
    guard::check(n, mn, force).map_err(|msg| {
        eprintln!("error: {msg}");
        EXIT_GUARD
    })
}

fn cmd_enumerate(
    what: What,
    n: usize,
    m: Option<u32>,
    class: ClassArg,
    set: Option<String>,
    output: AsArg,
    fmt: FormatArg,
    force: bool,
) -> u8 {
    let mn = match what {
        What::Genburge => m.map(|m| n.saturating_mul(m as usize)),
        _ => None,
    };
    if let Err(code) = guarded(n, mn, force) {
        return code;
    }
    match what {
        What::Cayley => match output {
            AsArg::Count => {
                println!("{}", fubini(n));
                EXIT_OK
            }
            AsArg::Words => {
                let words: Vec<String> = enumerate_cayley(n)
                    .map(|v| format_word(v.letters()))
                    .collect();
                emit_strings(&words, fmt);
                EXIT_OK
            }
            _ => usage_error("cayley supports --as words or count"),
        },
        What::Wi => match output {
            AsArg::Count => {
                let count = if n == 0 {
                    BigUint::one()
                } else {
                    BigUint::one() << (n - 1)
                };
                println!("{count}");
                EXIT_OK
            }
            AsArg::Words => {
                let words: Vec<String> = enumerate_wi(n)
                    .map(|u| format_word(u.letters()))
                    .collect();
                emit_strings(&words, fmt);
                EXIT_OK
            }
            _ => usage_error("wi supports --as words or count"),
        },
        What::Burge => match output {
            AsArg::Count => {
                println!("{}", count_burge(n, class.to_class()));
                EXIT_OK
            }
            AsArg::Words | AsArg::Biwords => {
                let words: Vec<String> = enumerate_burge(n, class.to_class())
                    .iter()
                    .map(Biword::to_string)
                    .collect();
                emit_strings(&words, fmt);
                EXIT_OK
            }
            AsArg::Matrices => match enumerate_mat(n, class.to_class()) {
                Ok(mats) => {
                    emit_matrices(mats.iter().map(|a| a.rows().to_vec()), fmt);
                    EXIT_OK
                }
                Err(e) => run_error(&format!("no matrix form for this class: {e:?}")),
            },
        },
        What::Genburge => {
            let Some(m) = m else {
                return usage_error("genburge requires --m");
            };
            let cls = class.to_class();
            if matches!(cls, BurgeClass::Omega) {
                return usage_error("genburge has no omega class");
            }
            match output {
                AsArg::Count => {
                    let mut total = BigUint::default();
                    let variant = match cls {
                        BurgeClass::Binary => Variant::Strict,
                        _ => Variant::Weak,
                    };
                    for v in enumerate_cayley(n) {
                        if matches!(cls, BurgeClass::Perm) && !v.is_permutation() {
                            continue;
                        }
                        total += compatible_count_formula(&v, m, variant);
                    }
                    println!("{total}");
                    EXIT_OK
                }
                AsArg::Words | AsArg::Biwords => match enumerate_genbur(n, m, cls) {
                    Ok(words) => {
                        let lines: Vec<String> = words.iter().map(Biword::to_string).collect();
                        emit_strings(&lines, fmt);
                        EXIT_OK
                    }
                    Err(e) => run_error(&format!("{e:?}")),
                },
                AsArg::Matrices => match enumerate_genmat(n, m as usize, cls) {
                    Ok(mats) => {
                        emit_matrices(mats.iter().map(|a| a.rows().to_vec()), fmt);
                        EXIT_OK
                    }
                    Err(e) => run_error(&format!("{e:?}")),
                },
            }
        }
        What::MatS => {
            let Some(set) = set else {
                return usage_error("mat-s requires --set");
            };
            let members = match parse_set(&set) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            if members.iter().any(|&v| v >= n.max(1)) {
                return usage_error("set members must lie in [n-1]");
            }
            let spec = match AscentSpec::new(members, n) {
                Ok(s) => s,
                Err(e) => return usage_error(&format!("{e:?}")),
            };
            let cls = class.to_class();
            if matches!(cls, BurgeClass::Omega) {
                return usage_error("mat-s has no omega class");
            }
            match enumerate_mat_s(&spec, cls) {
                Ok(mats) => match output {
                    AsArg::Count => {
                        println!("{}", mats.len());
                        EXIT_OK
                    }
                    AsArg::Matrices | AsArg::Words => {
                        emit_matrices(mats.iter().map(|a| a.rows().to_vec()), fmt);
                        EXIT_OK
                    }
                    AsArg::Biwords => {
                        let lines: Vec<String> =
                            mats.iter().map(|a| matrix_to_biword(a).to_string()).collect();
                        emit_strings(&lines, fmt);
                        EXIT_OK
                    }
                },
                Err(e) => run_error(&format!("{e:?}")),
            }
        }
    }
}

fn emit_strings(items: &[String], fmt: FormatArg) {
    match fmt {
        FormatArg::Lines | FormatArg::Csv => {
            for s in items {
                println!("{s}");
            }
        }
        FormatArg::Json => println!("{}", json!(items)),
    }
}

fn emit_matrices(mats: impl Iterator<Item = Vec<Vec<u64>>>, fmt: FormatArg) {
    match fmt {
        FormatArg::Lines | FormatArg::Csv => {
            for a in mats {
                println!("{}", format::matrix_line(&a));
            }
        }
        FormatArg::Json => {
            let all: Vec<_> = mats.map(|a| format::matrix_json(&a)).collect();
            println!("{}", json!(all));
        }
    }
}

fn cmd_poly(family: Family, n: usize, strict: bool, fmt: FormatArg, force: bool) -> u8 {
    if let Err(code) = guarded(n, None, force) {
        return code;
    }
    let variant = if strict { Variant::Strict } else { Variant::Weak };
    match family {
        Family::Eulerian => {
            print_poly1(&eulerian(n, EulerianMethod::Recursion), fmt);
            EXIT_OK
        }
        Family::Caylerian => {
            print_poly1(&caylerian(n, variant), fmt);
            EXIT_OK
        }
        Family::MaxStat => {
            print_poly1(&max_statistic_poly(n), fmt);
            EXIT_OK
        }
        Family::TwoSided => {
            print_poly2(&two_sided_eulerian(n, variant), n as u32, fmt);
            EXIT_OK
        }
        Family::B => {
            print_poly2(&two_sided_caylerian(n, variant), n as u32, fmt);
            EXIT_OK
        }
        Family::Bhat => {
            print_poly2(&bhat(n, variant), n as u32, fmt);
            EXIT_OK
        }
    }
}

fn cmd_gamma(which: GammaWhich, n: usize, strict: bool, force: bool) -> u8 {
    if let Err(code) = guarded(n, None, force) {
        return code;
    }
    let variant = if strict { Variant::Strict } else { Variant::Weak };
    match which {
        GammaWhich::One => {
            let p = eulerian(n, EulerianMethod::Recursion);
            match gamma_vector(&p, n.max(1)) {
                Ok(gv) => {
                    let gammas: Vec<_> = gv.gammas().iter().map(format::bigint_value).collect();
                    println!("{}", json!({"n": n, "gammas": gammas}));
                    EXIT_OK
                }
                Err(e) => run_error(&format!("{e:?}")),
            }
        }
        GammaWhich::Two => {
            let p = two_sided_eulerian(n, variant);
            match gamma_two_sided(&p, n.max(1)) {
                Ok(table) => {
                    let entries: Vec<_> = table
                        .entries()
                        .map(|(&(i, j), c)| json!([i, j, format::rational_string(c)]))
                        .collect();
                    println!("{}", json!({"n": n, "entries": entries}));
                    EXIT_OK
                }
                Err(e) => run_error(&format!("{e:?}")),
            }
        }
    }
}

fn cmd_series(which: SeriesWhich, n: usize, terms: usize, variant: VariantArg, force: bool) -> u8 {
    if let Err(code) = guarded(n, None, force) {
        return code;
    }
    if terms == 0 {
        return usage_error("--terms must be at least 1");
    }
    let coeffs: Vec<BigInt> = match which {
        SeriesWhich::Carlitz => carlitz_coeffs(n, terms),
        SeriesWhich::Caylerian => {
            let v = match variant {
                VariantArg::Weak => SeriesVariant::Weak,
                VariantArg::Strict => SeriesVariant::Strict,
                VariantArg::Perm => SeriesVariant::Perm,
            };
            caylerian_series_coeffs(n, terms, v)
        }
    };
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("[{}]", parts.join(","));
    EXIT_OK
}

fn cmd_transpose(biword: &str) -> u8 {
    let Some((top_s, bottom_s)) = biword.split_once('/') else {
        return usage_error("expected TOP/BOTTOM");
    };
    let top = match parse_word(top_s) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("bad top word: {e:?}")),
    };
    let bottom = match parse_word(bottom_s) {
        Ok(w) => w,
        Err(e) => return usage_error(&format!("bad bottom word: {e:?}")),
    };
    let b = match Biword::tight(top, bottom) {
        Ok(b) => b,
        Err(e) => return usage_error(&format!("not a valid biword: {e:?}")),
    };
    match burge_transpose(&b) {
        Ok(t) => {
            println!("{t}");
            EXIT_OK
        }
        Err(e) => run_error(&format!("{e:?}")),
    }
}

fn cmd_kappa(n: usize, set: &str, strict: bool, poly_t: bool, force: bool) -> u8 {
    if let Err(code) = guarded(n, None, force) {
        return code;
    }
    let members = match parse_set(set) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let variant = if strict { Variant::Strict } else { Variant::Weak };
    if poly_t {
        // Positions at or beyond n are vacuous for words of length n.
        let effective: Vec<usize> = members.into_iter().filter(|&v| v < n.max(1)).collect();
        let spec = match AscentSpec::new(effective, n) {
            Ok(s) => s,
            Err(e) => return usage_error(&format!("{e:?}")),
        };
        println!("{}", format::poly1_json(&alpha_poly(&spec, variant)));
    } else {
        println!("{}", kappa_general(n, &members, variant));
    }
    EXIT_OK
}

fn cmd_fit(set: &str, k: usize, points: usize, force: bool) -> u8 {
    let members = match parse_set(set) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    if points == 0 {
        return usage_error("--points must be at least 1");
    }
    let shift = members.last().copied().unwrap_or(0);
    let top = shift + points - 1;
    if let Err(code) = guarded(top, None, force) {
        return code;
    }
    let mut samples: Vec<(i64, BigInt)> = Vec::with_capacity(points);
    for i in 0..points {
        let value = kappa_general(shift + i, &members, Variant::Weak);
        samples.push((i as i64, BigInt::from(value)));
    }
    let rational: Vec<(i64, BigRational)> = samples
        .iter()
        .map(|(i, v)| (*i, BigRational::from_integer(v.clone())))
        .collect();
    match fit_polynomial(&rational, k) {
        Ok(report) => {
            println!("{}", format::fit_report_json(&members, k, &samples, &report));
            EXIT_OK
        }
        Err(e) => usage_error(&format!("{e:?} (need at least k+2 consecutive points)")),
    }
}

fn cmd_verify(max_n: usize, suites: &str, report: Option<PathBuf>) -> u8 {
    let suite_list: Vec<String> = suites
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    let results = match verify::run_suite(max_n, &suite_list) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    for r in &results {
        let status = if r.status { "PASS" } else { "FAIL" };
        match &r.witness {
            Some(w) => println!("{status} {} ({}) [{} ms] witness: {w}", r.id, r.params, r.ms),
            None => println!("{status} {} ({}) [{} ms]", r.id, r.params, r.ms),
        }
    }
    let pass = results.iter().filter(|r| r.status).count();
    let fail = results.len() - pass;
    println!("summary: pass={pass} fail={fail}");
    let doc = verify::report_json(&results);
    if let Some(path) = report {
        if let Err(e) = std::fs::write(&path, format!("{doc}\n")) {
            return run_error(&format!("cannot write report {}: {e}", path.display()));
        }
    }
    if fail == 0 {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let code = match cli.command {
        Cmd::Enumerate {
            what,
            n,
            m,
            class,
            set,
            output,
            format,
        } => cmd_enumerate(what, n, m, class, set, output, format, cli.force),
        Cmd::Poly {
            family,
            n,
            strict,
            format,
        } => cmd_poly(family, n, strict, format, cli.force),
        Cmd::Gamma { which, n, strict } => cmd_gamma(which, n, strict, cli.force),
        Cmd::Series {
            which,
            n,
            terms,
            variant,
        } => cmd_series(which, n, terms, variant, cli.force),
        Cmd::Transpose { biword } => cmd_transpose(&biword),
        Cmd::Kappa {
            n,
            set,
            strict,
            poly_t,
        } => cmd_kappa(n, &set, strict, poly_t, cli.force),
        Cmd::Fit { set, k, points } => cmd_fit(&set, k, points, cli.force),
        Cmd::Verify {
            max_n,
            suites,
            report,
        } => cmd_verify(max_n, &suites, report),
    };
    ExitCode::from(code)
}
