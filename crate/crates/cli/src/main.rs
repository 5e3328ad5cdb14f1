//! `valleyhop`: permutation statistics, valley-hopping bijections,
//! Chebyshev tilings, named integer sequences, and the exhaustive identity
//! verification harness, from the command line.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use rayon::prelude::*;
use serde_json::json;

use valleyhop::{
    bfile::BFile,
    cheb,
    hop,
    perm,
    verify,
    CheckParams, EgfSeries, Error, MPoly, PermSet, Permutation, Stat, Var,
};

#[derive(Parser)]
#[command(name = "valleyhop", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for enumeration and batch verification (default: all
    /// cores). Output is identical for any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Per-letter linear and cyclic classification plus every statistic.
    Stats {
        /// Permutation in one-line notation (digits, or space/comma
        /// separated letters for n > 9).
        perm: String,
    },
    /// Distribution polynomial of statistics over S_n or D_n.
    Dist {
        #[arg(long)]
        n: usize,
        /// Comma-separated statistic names (pk, val, dasc, ddes, dbl, des,
        /// cpk, cval, cdasc, cddes, cdbl, exc, cyc, fix).
        #[arg(long, value_delimiter = ',', required = true)]
        stats: Vec<String>,
        /// Comma-separated variables (default: t for a single statistic,
        /// otherwise s,t,u,v,w,y in order).
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        #[arg(long, default_value = "all")]
        set: String,
    },
    /// Apply valley-hopping (phi, or theta with --cyclic).
    Hop {
        perm: String,
        /// Hop a single letter.
        #[arg(long, conflicts_with = "set")]
        k: Option<u32>,
        /// Hop a comma-separated set of letters.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
        /// Use the cyclic action (derangements only).
        #[arg(long)]
        cyclic: bool,
    },
    /// Foata's fundamental transformation (and its smallest-first variant).
    Foata {
        perm: String,
        /// Recover the preimage instead (cut at left-to-right maxima or
        /// minima).
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t = Variant::Canonical)]
        variant: Variant,
    },
    /// Bivariate Chebyshev polynomial U_n, optionally at substituted
    /// arguments.
    Cheb {
        #[arg(long)]
        n: i64,
        /// Expression for the first argument, e.g. `-1` or `s*t`.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Expression for the second argument, e.g. `(1+t)/2`.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// List the weighted monomino-domino tilings of a 1 x n rectangle.
    Tilings {
        #[arg(long)]
        n: usize,
    },
    /// Emit a named integer sequence (pell, parity, euler, pk-neg1,
    /// cpk-neg1), optionally diffed against an OEIS b-file.
    Seq {
        name: String,
        #[arg(long)]
        count: usize,
        /// Compare against a local b-file (`n a(n)` lines).
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Map our index i to b-file index i + offset.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        offset: i64,
    },
    /// Run identity checks (`all` or any of the listed ids).
    Verify {
        /// Check ids, or `all`.
        #[arg(required = true)]
        ids: Vec<String>,
        /// Override the brute-force bound.
        #[arg(long)]
        max_n: Option<usize>,
        /// Override the series truncation order for numeric checks.
        #[arg(long)]
        order: Option<usize>,
    },
    /// List the available check ids.
    Checks,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Largest letter first, cycles by increasing maxima.
    Canonical,
    /// Smallest letter first, cycles by decreasing minima.
    Prime,
}

fn main() -> ExitCode {
    // die quietly on closed pipes (`valleyhop ... | head`) like other
    // line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run `valleyhop --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Stats { perm } => cmd_stats(perm, json),
        Command::Dist { n, stats, vars, set } => cmd_dist(*n, stats, vars.as_deref(), set, json),
        Command::Hop { perm, k, set, cyclic } => cmd_hop(perm, *k, set.as_deref(), *cyclic, json),
        Command::Foata { perm, inverse, variant } => cmd_foata(perm, *inverse, *variant, json),
        Command::Cheb { n, s, t } => cmd_cheb(*n, s.as_deref(), t.as_deref(), json),
        Command::Tilings { n } => cmd_tilings(*n, json),
        Command::Seq { name, count, bfile, offset } => {
            cmd_seq(name, *count, bfile.as_deref(), *offset, json)
        }
        Command::Verify { ids, max_n, order } => cmd_verify(ids, *max_n, *order, json),
        Command::Checks => {
            for id in verify::all_check_ids() {
                println!("{id}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn class_name(class: perm::LetterClass) -> String {
    class.to_string()
}

fn cmd_stats(perm_text: &str, json: bool) -> Result<ExitCode, Error> {
    let p: Permutation = perm_text.parse()?;
    let linear: Vec<String> = p.classify_linear().into_iter().map(class_name).collect();
    let cyclic: Vec<String> = p
        .classify_cyclic()
        .into_iter()
        .map(|c| c.map_or_else(|| "fix".to_string(), class_name))
        .collect();
    let stat_values: Vec<(Stat, usize)> = Stat::ALL.iter().map(|&s| (s, p.stat(s))).collect();

    if json {
        let stats: serde_json::Map<String, serde_json::Value> = stat_values
            .iter()
            .map(|(s, v)| (s.name().to_string(), json!(v)))
            .collect();
        println!(
            "{}",
            json!({
                "perm": p.to_string(),
                "n": p.n(),
                "cycles": p.cycle_string(),
                "linear": linear,
                "cyclic": cyclic,
                "stats": stats,
            })
        );
    } else {
        println!("perm: {p}");
        println!("cycles: {}", p.cycle_string());
        println!("pos letter linear cyclic");
        for (i, &letter) in p.word().iter().enumerate() {
            println!("{:<3} {:<6} {:<6} {}", i + 1, letter, linear[i], cyclic[i]);
        }
        let line: Vec<String> = stat_values
            .iter()
            .map(|(s, v)| format!("{}={v}", s.name()))
            .collect();
        println!("{}", line.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_stats(names: &[String]) -> Result<Vec<Stat>, Error> {
    names.iter().map(|s| s.trim().parse()).collect()
}

fn parse_vars(names: &[String]) -> Result<Vec<Var>, Error> {
    names
        .iter()
        .map(|s| {
            let s = s.trim();
            let mut chars = s.chars();
            match (chars.next().and_then(Var::from_letter), chars.next()) {
                (Some(v), None) => Ok(v),
                _ => Err(Error::Parse(format!("unknown variable `{s}`"))),
            }
        })
        .collect()
}

fn cmd_dist(
    n: usize,
    stat_names: &[String],
    var_names: Option<&[String]>,
    set: &str,
    json: bool,
) -> Result<ExitCode, Error> {
    let stats = parse_stats(stat_names)?;
    let vars = match var_names {
        Some(names) => parse_vars(names)?,
        // single statistics are conventionally written in t; joint
        // distributions take s, t, u, ... in order
        None if stats.len() == 1 => vec![Var::T],
        None => Var::ALL[..stats.len().min(Var::ALL.len())].to_vec(),
    };
    let set: PermSet = set.parse()?;
    let dist = perm::distribution(n, set, &stats, &vars)?;
    if json {
        println!(
            "{}",
            json!({
                "n": n,
                "set": match set { PermSet::All => "all", PermSet::Derangements => "derangements" },
                "stats": stats.iter().map(|s| s.name()).collect::<Vec<_>>(),
                "vars": vars.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "poly": dist.to_string(),
            })
        );
    } else {
        println!("{dist}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hop(
    perm_text: &str,
    k: Option<u32>,
    set: Option<&[u32]>,
    cyclic: bool,
    json: bool,
) -> Result<ExitCode, Error> {
    let p: Permutation = perm_text.parse()?;
    let letters: BTreeSet<u32> = match (k, set) {
        (Some(k), None) => BTreeSet::from([k]),
        (None, Some(set)) => set.iter().copied().collect(),
        _ => {
            return Err(Error::Parse(
                "exactly one of --k and --set is required".into(),
            ))
        }
    };
    let result = if cyclic {
        hop::theta_set(&p, &letters)?
    } else {
        hop::phi_set(&p, &letters)?
    };
    if json {
        println!(
            "{}",
            json!({
                "input": p.to_string(),
                "letters": letters.iter().copied().collect::<Vec<_>>(),
                "cyclic": cyclic,
                "result": result.to_string(),
            })
        );
    } else {
        println!("{result}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_foata(
    perm_text: &str,
    inverse: bool,
    variant: Variant,
    json: bool,
) -> Result<ExitCode, Error> {
    let p: Permutation = perm_text.parse()?;
    let result = match (variant, inverse) {
        (Variant::Canonical, false) => hop::foata_o(&p),
        (Variant::Canonical, true) => hop::foata_o_inv(&p),
        (Variant::Prime, false) => hop::foata_o_prime(&p),
        (Variant::Prime, true) => hop::foata_o_prime_inv(&p),
    };
    // The cycle form that the word side of the map reads off.
    let cycle_side = if inverse { &result } else { &p };
    let cycles = match variant {
        Variant::Canonical => cycle_side.cycle_string(),
        Variant::Prime => cycle_side.cycle_string_smallest_first(),
    };
    if json {
        println!(
            "{}",
            json!({
                "input": p.to_string(),
                "result": result.to_string(),
                "cycles": cycles,
                "variant": match variant { Variant::Canonical => "canonical", Variant::Prime => "prime" },
                "inverse": inverse,
            })
        );
    } else {
        println!("{result}");
        println!("cycles: {cycles}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cheb(n: i64, s: Option<&str>, t: Option<&str>, json: bool) -> Result<ExitCode, Error> {
    if n > 512 {
        return Err(Error::ParamOutOfRange(format!("n = {n} outside -1..=512")));
    }
    let s_arg: MPoly = s.unwrap_or("s").parse()?;
    let t_arg: MPoly = t.unwrap_or("t").parse()?;
    let u = cheb::cheb_u(n, &s_arg, &t_arg)?;
    if json {
        println!(
            "{}",
            json!({ "n": n, "s": s_arg.to_string(), "t": t_arg.to_string(), "poly": u.to_string() })
        );
    } else {
        println!("{u}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tilings(n: usize, json: bool) -> Result<ExitCode, Error> {
    if n > 16 {
        return Err(Error::ParamOutOfRange(format!("n = {n} outside 0..=16")));
    }
    let s = MPoly::var(Var::S);
    let t = MPoly::var(Var::T);
    let all = cheb::tilings(n);
    let sum = cheb::tiling_sum(n, &s, &t);
    if json {
        let items: Vec<serde_json::Value> = all
            .iter()
            .map(|tiling| json!({ "pieces": tiling.to_string(), "weight": tiling.weight(&s, &t).to_string() }))
            .collect();
        println!("{}", json!({ "n": n, "tilings": items, "sum": sum.to_string() }));
    } else {
        for tiling in &all {
            println!("{tiling}: {}", tiling.weight(&s, &t));
        }
        println!("sum: {sum}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Terms and the artifact index of the first one.
fn seq_terms(name: &str, count: usize) -> Result<(Vec<BigInt>, i64), Error> {
    match name {
        "pell" => Ok((cheb::pell(count), 0)),
        "parity" => Ok((cheb::parity(count), 0)),
        "euler" => Ok((cheb::euler_numbers(count), 0)),
        "pk-neg1" | "cpk-neg1" => {
            let order = count + 1; // the derivative drops the order by one
            let g = &EgfSeries::one(order) + &cheb::series_v(
                &MPoly::from_int(-1),
                &MPoly::from_int(1),
                order,
            );
            let series = if name == "pk-neg1" {
                &g.derivative()? * &g.reciprocal()?
            } else {
                g.reciprocal()?
            };
            let terms = (1..=count)
                .map(|n| {
                    let c = series.coeff(n).as_constant().expect("constant series");
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect();
            Ok((terms, 1))
        }
        other => Err(Error::Parse(format!(
            "unknown sequence `{other}` (expected pell, parity, euler, pk-neg1, cpk-neg1)"
        ))),
    }
}

fn cmd_seq(
    name: &str,
    count: usize,
    bfile: Option<&std::path::Path>,
    offset: i64,
    json: bool,
) -> Result<ExitCode, Error> {
    if count > 512 {
        return Err(Error::ParamOutOfRange(format!("count = {count} outside 0..=512")));
    }
    let (terms, start) = seq_terms(name, count)?;
    let comparison = match bfile {
        Some(path) => Some(BFile::load(path)?.compare(&terms, start, offset)),
        None => None,
    };
    if json {
        let mut obj = json!({
            "name": name,
            "count": count,
            "start": start,
            "terms": terms.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        });
        if let Some(cmp) = &comparison {
            obj["bfile"] = json!({
                "checked": cmp.checked,
                "offset": offset,
                "mismatches": cmp.mismatches.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            });
        }
        println!("{obj}");
    } else {
        let rendered: Vec<String> = terms.iter().map(BigInt::to_string).collect();
        println!("{}", rendered.join(" "));
        if let Some(cmp) = &comparison {
            if cmp.all_match() {
                println!("bfile: {} terms compared, all match", cmp.checked);
            } else {
                for m in &cmp.mismatches {
                    println!("bfile mismatch: {m}");
                }
            }
        }
    }
    let ok = comparison.as_ref().is_none_or(|c| c.all_match());
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(
    ids: &[String],
    max_n: Option<usize>,
    order: Option<usize>,
    json: bool,
) -> Result<ExitCode, Error> {
    let selected: Vec<String> = if ids.len() == 1 && ids[0] == "all" {
        verify::all_check_ids().iter().map(|s| s.to_string()).collect()
    } else {
        // validate ids up front so unknown names are a usage error
        for id in ids {
            if !verify::all_check_ids().contains(&id.as_str()) {
                return Err(Error::UnknownCheck(id.clone()));
            }
        }
        ids.to_vec()
    };
    let params = CheckParams { max_n, order };
    let reports: Vec<_> = selected
        .par_iter()
        .map(|id| verify::check_identity(id, &params))
        .collect::<Result<_, _>>()?;
    let mut all_pass = true;
    for report in &reports {
        all_pass &= report.passed();
        if json {
            println!("{}", report.render_json());
        } else {
            println!("{}", report.render_text());
        }
    }
    if !json {
        let passed = reports.iter().filter(|r| r.passed()).count();
        println!("{passed}/{} checks passed", reports.len());
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
