//! Command-line front-end. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use canring_core::algebra::theta_splitting;
use canring_core::curve::{canonical_profile_bruteforce, oracle_mult_codim, oracle_pushforward_split};
use canring_core::cy3::{alpha_beta_surjectivity, n0_equivalences, CYCover};
use canring_core::ring::{beta_codim, generator_profile, hyperelliptic_profile, surface_canonical_profile};
use canring_core::surface::{minimal_degree_catalog, parity_obstruction, validate_canonical_cover, DoubleCoverTower};
use canring_core::DivisorClass;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks;
use crate::fixtures::{default_fixtures, parse_fixtures, Fixture};
use crate::json::{bundle_to_json, n0_to_json, parse_surface, profile_to_json, report_to_json};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "canring", version, about = "Section rings of covers of projective space")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type of the trace-zero module of a theta-cover of degree n
    /// onto a rational normal curve of degree r.
    SplitType {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
    },
    /// Codimension of the image of R_s (x) R_t -> R_(s+t).
    Beta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
    /// Codimensions of all beta(s, t) with s + t <= max-level.
    BetaGrid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
        #[arg(long, default_value_t = 8)]
        max_level: u32,
    },
    /// Minimal generators in degrees >= 2.
    Gens {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
        /// Canonical ring of a surface with a degree-n canonical cover of a
        /// surface of minimal degree r.
        #[arg(long)]
        surface: bool,
    },
    /// Canonical-ring generators of a hyperelliptic curve of genus g.
    Hyperelliptic {
        #[arg(long)]
        g: u32,
    },
    /// Compare explicit curves against the block calculus.
    Oracle {
        /// JSON fixture list; the built-in fixtures when omitted.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_level: u32,
    },
    /// Check a tower of double covers as a canonical cover.
    Surface {
        /// F<e> or P1xP1.
        #[arg(long)]
        base: String,
        /// L1 as "a,b".
        #[arg(long, allow_hyphen_values = true)]
        l1: String,
        /// L2 as "a,b".
        #[arg(long, allow_hyphen_values = true)]
        l2: String,
        /// Hyperplane class as "a,b".
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: String,
    },
    /// Surfaces of minimal degree r.
    Catalog {
        #[arg(long)]
        r: u32,
    },
    /// Parity obstruction for a degree-n canonical cover of a scroll.
    Parity {
        /// F<e> or P1xP1.
        #[arg(long)]
        base: String,
        /// Hyperplane class as "a,b".
        #[arg(long)]
        hyperplane: String,
        #[arg(long)]
        n: u32,
    },
    /// Normal generation for a degree-n cover of P3 by a threefold.
    Cy3 {
        #[arg(long)]
        n: usize,
        /// Force the isomorphism condition on or off.
        #[arg(long)]
        star: Option<bool>,
    },
    /// Run the acceptance suite.
    PaperCheck {
        /// Write a JSON summary keyed by criterion id.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Failure after argument parsing.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Domain(#[from] canring_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    /// Every check ran, some failed.
    #[error("{0} acceptance check(s) failed")]
    ChecksFailed(usize),
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        // The reader went away (e.g. `| head`): stop quietly.
        Err(RunError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn parse_class(base: &str, s: &str) -> Result<DivisorClass, RunError> {
    let surface = parse_surface(base).map_err(|e| RunError::Input(e.to_string()))?;
    let bad = || RunError::Input(format!("expected a class \"a,b\", got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(surface.class(a, b))
}

fn emit(out: &mut dyn Write, format: Format, table: &str, json: Value) -> Result<(), RunError> {
    match format {
        Format::Table => writeln!(out, "{table}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("valid JSON"))?,
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), RunError> {
    let fmt = cli.format;
    match &cli.command {
        Command::SplitType { n, r } => {
            let b = theta_splitting(*n, *r)?;
            emit(out, fmt, &b.to_string(), bundle_to_json(&b))
        }
        Command::Beta { n, r, s, t } => {
            let c = beta_codim(*n, *r, *s, *t)?;
            emit(out, fmt, &format!("codim {c}"), json!({ "codim": c }))
        }
        Command::BetaGrid { n, r, max_level } => {
            let mut rows = Vec::new();
            let mut table = String::from("s\tt\tcodim");
            for s in 1..*max_level {
                for t in 1..=max_level - s {
                    let c = beta_codim(*n, *r, s, t)?;
                    table.push_str(&format!("\n{s}\t{t}\t{c}"));
                    rows.push(json!({ "s": s, "t": t, "codim": c }));
                }
            }
            emit(out, fmt, &table, Value::Array(rows))
        }
        Command::Gens { n, r, surface } => {
            let p = if *surface { surface_canonical_profile(*n, *r)? } else { generator_profile(*n, *r)? };
            emit(out, fmt, &p.to_string(), profile_to_json(&p))
        }
        Command::Hyperelliptic { g } => {
            let p = hyperelliptic_profile(*g)?;
            emit(out, fmt, &p.to_string(), profile_to_json(&p))
        }
        Command::Oracle { fixtures, max_level } => oracle(fixtures.as_ref(), *max_level, fmt, out),
        Command::Surface { base, l1, l2, hyperplane } => {
            let tower = DoubleCoverTower::new(parse_class(base, l1)?, parse_class(base, l2)?)?;
            let h = parse_class(base, hyperplane)?;
            let report = validate_canonical_cover(&tower, &h)?;
            let predicted = report
                .predicted_profile
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let table = format!(
                "k_class_ok: {}\nregular: {}\nh0K: {}\nh0_hyperplane: {}\ncover_degree: {}\n\
                 target_degree: {}\nminimal_degree: {}\nbranches_ok: {}\nimage_is_cone: {}\n\
                 predicted_profile: {predicted}\npasses: {}",
                report.k_class_ok,
                report.regular,
                report.h0_k,
                report.h0_hyperplane,
                report.cover_degree,
                report.target_degree,
                report.minimal_degree,
                report.branches_ok(),
                report.image_is_cone,
                report.passes(),
            );
            emit(out, fmt, &table, report_to_json(&report))
        }
        Command::Catalog { r } => {
            let list = minimal_degree_catalog(*r)?;
            let names: Vec<String> = list.iter().map(ToString::to_string).collect();
            emit(out, fmt, &names.join("\n"), json!(names))
        }
        Command::Parity { base, hyperplane, n } => {
            let h = parse_class(base, hyperplane)?;
            let obstructed = parity_obstruction(&h, *n)?;
            let word = if obstructed { "obstructed" } else { "allowed" };
            emit(out, fmt, word, json!({ "n": n, "obstructed": obstructed }))
        }
        Command::Cy3 { n, star } => {
            let mut cover = CYCover::new(*n)?;
            cover.star_override = *star;
            let e = n0_equivalences(&cover)?;
            let s = alpha_beta_surjectivity(&cover)?;
            let table = format!(
                "n: {}\nsectional_genus: {}\nN0_B2: {}\nN0_B3: {}\nsectional_genus_gt_3: {}\n\
                 C_nonhyperelliptic: {}\ngamma_rank: {}\nall_equal: {}",
                e.n,
                e.sectional_genus,
                e.n0_b2,
                e.n0_b3,
                e.sectional_genus_gt_3,
                e.c_nonhyperelliptic,
                s.gamma_rank,
                e.all_equal(),
            );
            emit(out, fmt, &table, n0_to_json(&e))
        }
        Command::PaperCheck { report } => {
            let outcomes = checks::run_all();
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&checks::report(&outcomes)).expect("valid JSON");
                std::fs::write(path, text + "\n")?;
            }
            let lines: Vec<String> = outcomes.iter().map(|o| o.line()).collect();
            emit(out, fmt, &lines.join("\n"), checks::report(&outcomes))?;
            match outcomes.iter().filter(|o| !o.pass).count() {
                0 => Ok(()),
                k => Err(RunError::ChecksFailed(k)),
            }
        }
    }
}

fn oracle(path: Option<&PathBuf>, max_level: u32, fmt: Format, out: &mut dyn Write) -> Result<(), RunError> {
    if !(2..=8).contains(&max_level) {
        return Err(RunError::Input(format!("max-level must be in 2..=8, got {max_level}")));
    }
    let fixtures: Vec<Fixture> = match path {
        Some(p) => parse_fixtures(&std::fs::read_to_string(p)?).map_err(|e| RunError::Input(e.to_string()))?,
        None => default_fixtures(),
    };
    let mut rows = Vec::new();
    let mut table = String::from("kind\tgenus\tr\tsplit\tengine_split\tcodims_agree\ttheta_sq\tcanonical_profile");
    for fx in &fixtures {
        let n = fx.curve.sheets();
        let split = oracle_pushforward_split(&fx.curve)?;
        let theta_sq = fx.curve.theta_square_check().ok();
        let (engine_split, agree) = match fx.r {
            Some(r) => {
                let engine = theta_splitting(n, r as i64)?;
                let mut agree = true;
                for s in 1..max_level {
                    for t in 1..=max_level - s {
                        agree &= oracle_mult_codim(&fx.curve, s, t)? == beta_codim(n, r as i64, s, t)?;
                    }
                }
                (Some(engine), Some(agree))
            }
            None => (None, None),
        };
        let profile = canonical_profile_bruteforce(&fx.curve).ok();
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        table.push_str(&format!(
            "\n{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            fx.kind.name(),
            fx.curve.genus(),
            show(fx.r.map(|r| r.to_string())),
            split,
            show(engine_split.as_ref().map(ToString::to_string)),
            show(agree.map(|a| a.to_string())),
            show(theta_sq.map(|a| a.to_string())),
            show(profile.as_ref().map(ToString::to_string)),
        ));
        rows.push(json!({
            "fixture": fx.to_json(),
            "genus": fx.curve.genus(),
            "split": bundle_to_json(&split),
            "engine_split": engine_split.as_ref().map(bundle_to_json),
            "codims_agree": agree,
            "theta_square": theta_sq,
            "canonical_profile": profile.as_ref().map(profile_to_json),
        }));
    }
    emit(out, fmt, &table, Value::Array(rows))
}
