//! Command-line front end: enumeration, generating functions, chain
//! reports with symmetry verdicts, Garsia-Haiman summand dumps,
//! rational-slope reports, Gorsky-Mazin tables, and verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qtcat::chains::{ChainId, ChainSystem};
use qtcat::dyck::{enumerate_words, genfun};
use qtcat::garsia_haiman::{ac_genfun, mu_quantities, partitions, sigma_form, SigmaFormCase};
use qtcat::mchains::chain_system;
use qtcat::ratslope::{enumerate_paths, gm_construct, rs_chain_system, rs_genfun, RsCase};
use qtcat::verify::run_suite;
use qtcat::QtPoly;

#[derive(Parser)]
#[command(name = "qtcat", version, about = "Exact q,t-Catalan polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Combinatorial sum over words or paths.
    Comb,
    /// Garsia-Haiman rational sum.
    Gh,
    /// Closed sigma-form expression.
    Sigma,
}

#[derive(Subcommand)]
enum Command {
    /// List m-Dyck words (--n/--m) or r x s Dyck paths (--rational R S)
    Enumerate {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, num_args = 2, value_names = ["R", "S"])]
        rational: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a q,t-Catalan generating function
    Genfun {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, num_args = 2, value_names = ["R", "S"])]
        rational: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Kind::Comb)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chain decomposition of the m-Dyck words of length n (2 <= n <= 5)
    Chains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-partition Garsia-Haiman summand report
    Gh {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rational-slope report for r x s paths; includes the chain
    /// decomposition when (r, s) matches one of the three families
    Rational {
        r: u32,
        s: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gorsky-Mazin two-row tables for r x 3 paths
    Gm {
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: symmetry, gh, coeffs, n5, ratslope, gm,
    /// involution, or all
    Verify {
        suite: String,
        #[arg(long, default_value_t = 5)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn poly_output(p: &QtPoly, format: Format) -> Option<String> {
    match format {
        Format::Text => Some(format!("{p}\n")),
        Format::Json => Some(format!("{}\n", p.to_json_string())),
        Format::Csv => Some(p.to_csv()),
        Format::Dot => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { n, m, rational, format, out } => cmd_enumerate(n, m, rational, format, out),
        Command::Genfun { n, m, rational, kind, format, out } => {
            cmd_genfun(n, m, rational, kind, format, out)
        }
        Command::Chains { n, m, format, out } => cmd_chains(n, m, format, out),
        Command::Gh { n, m, format, out } => cmd_gh(n, m, format, out),
        Command::Rational { r, s, format, out } => cmd_rational(r, s, format, out),
        Command::Gm { r, format, out } => cmd_gm(r, format, out),
        Command::Verify { suite, m_max, format, out } => cmd_verify(&suite, m_max, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

type CmdResult = std::io::Result<ExitCode>;

fn cmd_enumerate(
    n: Option<usize>,
    m: Option<u32>,
    rational: Option<Vec<u32>>,
    format: Format,
    out: Option<PathBuf>,
) -> CmdResult {
    let content = if let Some(rs) = rational {
        let (r, s) = (rs[0], rs[1]);
        if r == 0 || s == 0 {
            return Ok(usage_error("--rational needs positive R and S"));
        }
        let paths = enumerate_paths(r, s);
        match format {
            Format::Json => {
                let rows: Vec<Vec<u32>> = paths.iter().map(|p| p.row_cells().to_vec()).collect();
                format!("{}\n", serde_json::json!({"r": r, "s": s, "paths": rows}))
            }
            _ => {
                let mut text = String::new();
                for p in &paths {
                    text.push_str(&format!("{p}\n"));
                }
                text
            }
        }
    } else {
        let (Some(n), Some(m)) = (n, m) else {
            return Ok(usage_error("enumerate needs --n and --m, or --rational R S"));
        };
        if n == 0 || m == 0 {
            return Ok(usage_error("need n >= 1 and m >= 1"));
        }
        let words = enumerate_words(n, m);
        match format {
            Format::Json => {
                let rows: Vec<&[u32]> = words.iter().map(|w| w.gamma()).collect();
                format!("{}\n", serde_json::json!({"n": n, "m": m, "words": rows}))
            }
            _ => {
                let mut text = String::new();
                for w in &words {
                    text.push_str(&format!("{}\n", w.full_form()));
                }
                text
            }
        }
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_genfun(
    n: Option<usize>,
    m: Option<u32>,
    rational: Option<Vec<u32>>,
    kind: Kind,
    format: Format,
    out: Option<PathBuf>,
) -> CmdResult {
    let poly = if let Some(rs) = rational {
        let (r, s) = (rs[0], rs[1]);
        if r == 0 || s == 0 {
            return Ok(usage_error("--rational needs positive R and S"));
        }
        match kind {
            Kind::Comb => rs_genfun(r, s),
            Kind::Sigma => {
                let case = if s == 4 && r >= 6 && (r - 2) % 4 == 0 {
                    Some((SigmaFormCase::C2m122, (r - 2) / 4))
                } else if s == 4 && (r + 1) % 4 == 0 {
                    Some((SigmaFormCase::C4m141, (r + 1) / 4))
                } else {
                    None
                };
                let Some((case, m)) = case else {
                    return Ok(usage_error(
                        "sigma form exists only for (4m+2) x 4 and (4m-1) x 4 shapes",
                    ));
                };
                match sigma_form(case, m) {
                    Ok(p) => p,
                    Err(e) => return Ok(usage_error(&format!("{e}"))),
                }
            }
            Kind::Gh => {
                return Ok(usage_error("--kind gh applies to --n/--m, not --rational"));
            }
        }
    } else {
        let (Some(n), Some(m)) = (n, m) else {
            return Ok(usage_error("genfun needs --n and --m, or --rational R S"));
        };
        if n == 0 || m == 0 {
            return Ok(usage_error("need n >= 1 and m >= 1"));
        }
        match kind {
            Kind::Comb => genfun(n, m),
            Kind::Gh => match ac_genfun(n as u32, m) {
                Ok(p) => p,
                Err(e) => return Ok(usage_error(&format!("{e}"))),
            },
            Kind::Sigma => {
                let case = match n {
                    3 => SigmaFormCase::C3,
                    4 => SigmaFormCase::Ac4,
                    _ => return Ok(usage_error("sigma form exists only for n = 3 and n = 4")),
                };
                match sigma_form(case, m) {
                    Ok(p) => p,
                    Err(e) => return Ok(usage_error(&format!("{e}"))),
                }
            }
        }
    };
    let Some(content) = poly_output(&poly, format) else {
        return Ok(usage_error("dot format does not apply to polynomials"));
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn chain_report<Id: ChainId>(
    sys: &ChainSystem<Id>,
    header: String,
    format: Format,
) -> (String, bool) {
    let symmetric = sys.verify_symmetry();
    let decomposition = sys.decompose().expect("validated system decomposes");
    let (ci, ct, _) = sys.genfuns();
    let content = match format {
        Format::Json => {
            let mut v = sys.decomposition_json().expect("validated system");
            let obj = v.as_object_mut().unwrap();
            obj.insert("C_I".into(), ci.to_json());
            obj.insert("C_T".into(), ct.to_json());
            obj.insert("symmetric".into(), serde_json::json!(symmetric));
            if let Ok(h) = sys.canonical_h() {
                obj.insert("drawings".into(), sys.drawings_json(&h)["cycles"].clone());
            }
            format!("{v}\n")
        }
        Format::Dot => {
            let h = sys.canonical_h().ok();
            sys.to_dot(h.as_ref())
        }
        _ => {
            let mut text = header;
            for (i, chain) in decomposition.chains.iter().enumerate() {
                let rendered: Vec<String> = chain
                    .iter()
                    .map(|w| {
                        let (a, d) = sys.stat(w);
                        format!("{w} (q^{a} t^{d})")
                    })
                    .collect();
                text.push_str(&format!(
                    "chain {} (length {}): {}\n",
                    i + 1,
                    chain.len() - 1,
                    rendered.join(" -> ")
                ));
            }
            let ids = |set: &std::collections::BTreeSet<Id>| {
                set.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
            };
            text.push_str(&format!("I: {}\n", ids(sys.initial())));
            text.push_str(&format!("T: {}\n", ids(sys.terminal())));
            text.push_str(&format!("C_I(q,t) = {ci}\n"));
            text.push_str(&format!("C_T(q,t) = {ct}\n"));
            text.push_str(&format!(
                "C_T(q,t) = C_I(t,q): {}\n",
                if symmetric { "PASS" } else { "FAIL" }
            ));
            text
        }
    };
    (content, symmetric)
}

fn cmd_chains(n: usize, m: u32, format: Format, out: Option<PathBuf>) -> CmdResult {
    if !(2..=5).contains(&n) {
        return Ok(usage_error("unsupported n: chains needs 2 <= n <= 5"));
    }
    if m == 0 {
        return Ok(usage_error("need m >= 1"));
    }
    let sys = match chain_system(n, m) {
        Ok(sys) => sys,
        Err(e) => return Ok(usage_error(&format!("{e}"))),
    };
    let header = format!("n = {n}, m = {m}: {} words, {} chains\n", sys.len(), sys.initial().len());
    let (content, symmetric) = chain_report(&sys, header, format);
    emit(&out, &content)?;
    Ok(if symmetric { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY_FAIL) })
}

fn cmd_gh(n: u32, m: u32, format: Format, out: Option<PathBuf>) -> CmdResult {
    if n == 0 || m == 0 {
        return Ok(usage_error("need n >= 1 and m >= 1"));
    }
    let ac = match ac_genfun(n, m) {
        Ok(p) => p,
        Err(e) => return Ok(usage_error(&format!("{e}"))),
    };
    let content = match format {
        Format::Json => {
            let summands: Vec<serde_json::Value> = partitions(n)
                .iter()
                .map(|mu| {
                    let q = mu_quantities(mu);
                    serde_json::json!({
                        "mu": mu.to_string(),
                        "T": q.t.to_json(),
                        "B": q.b.to_json(),
                        "Pi": q.pi.to_json(),
                        "w": q.w.to_json(),
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::json!({"n": n, "m": m, "summands": summands, "AC": ac.to_json()})
            )
        }
        _ => {
            let mut text = format!("AC for n = {n}, m = {m}\n");
            for mu in partitions(n) {
                let q = mu_quantities(&mu);
                text.push_str(&format!("mu = {mu}\n"));
                text.push_str(&format!("  T  = {}\n", q.t));
                text.push_str(&format!("  B  = {}\n", q.b));
                text.push_str(&format!("  Pi = {}\n", q.pi));
                text.push_str(&format!("  w  = {}\n", q.w));
            }
            text.push_str(&format!("AC(q,t) = {ac}\n"));
            text
        }
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_rational(r: u32, s: u32, format: Format, out: Option<PathBuf>) -> CmdResult {
    if r == 0 || s == 0 {
        return Ok(usage_error("need r >= 1 and s >= 1"));
    }
    let family = if s == 4 && r >= 6 && (r - 2) % 4 == 0 {
        Some((RsCase::FourMPlus2, (r - 2) / 4))
    } else if s == 4 && (r + 1) % 4 == 0 && (r + 1) / 4 >= 1 {
        Some((RsCase::FourMMinus1, (r + 1) / 4))
    } else if s == 3 && (r + 1) % 3 == 0 && (r + 1) / 3 >= 1 {
        Some((RsCase::ThreeMMinus1, (r + 1) / 3))
    } else {
        None
    };
    if let Some((case, m)) = family {
        let sys = match rs_chain_system(case, m) {
            Ok(sys) => sys,
            Err(e) => return Ok(usage_error(&format!("{e}"))),
        };
        let header = format!(
            "{r} x {s} paths, family {case} with m = {m}: {} words, {} chains\n",
            sys.len(),
            sys.initial().len()
        );
        let (content, symmetric) = chain_report(&sys, header, format);
        emit(&out, &content)?;
        return Ok(if symmetric { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY_FAIL) });
    }
    let p = rs_genfun(r, s);
    let count = enumerate_paths(r, s).len();
    let content = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::json!({"r": r, "s": s, "paths": count, "genfun": p.to_json()})
        ),
        Format::Csv => p.to_csv(),
        _ => format!("{r} x {s}: {count} paths\nC(q,t) = {p}\n"),
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gm(r: u32, format: Format, out: Option<PathBuf>) -> CmdResult {
    let gm = match gm_construct(r) {
        Ok(gm) => gm,
        Err(e) => return Ok(usage_error(&format!("{e}"))),
    };
    let content = match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = gm
                .rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "c": row.c, "d": row.d, "region": row.region,
                        "a": row.a, "b": row.b, "wt1": row.wt1, "wt2": row.wt2,
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::json!({"r": r, "k": gm.k, "rows": rows, "genfun": gm.genfun().to_json()})
            )
        }
        _ => gm.to_csv(),
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str, m_max: u32, format: Format, out: Option<PathBuf>) -> CmdResult {
    let report = match run_suite(suite, m_max) {
        Ok(r) => r,
        Err(e) => return Ok(usage_error(&format!("{e}"))),
    };
    let content = match format {
        Format::Json => format!("{}\n", report.to_json()),
        _ => report.render_text(),
    };
    emit(&out, &content)?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY_FAIL) })
}
