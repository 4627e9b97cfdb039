//! Command-line front end: group selection, table generation, lift
//! construction, wonderful-compactification products, and verification
//! suites with machine-readable reports.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kschubert::demazure::{demazure, euler_char, euler_char_t, CONVENTION};
use kschubert::lifts::{ordinary_lift_json, tensor_lift_json, OrdinaryLift, TensorLift};
use kschubert::rootdata::{CartanDatum, GroupLabel, Weight};
use kschubert::structconst::{
    equivariant_chevalley, equivariant_constants, equivariant_table, ordinary_chevalley,
    ordinary_constants, ordinary_partial, ordinary_partial_table, ordinary_table,
};
use kschubert::verify::{run_suite, Suite, VerifyOptions, DEFAULT_SEED};
use kschubert::weyl::ParabolicSubset;
use kschubert::wonderful::{kdec_basis_check, KXElement, WonderfulRing};
use kschubert::{Error, GroupData, LaurentPoly, Result};

use cache::{get_or_compute, render, CacheConfig};

#[derive(Parser)]
#[command(
    name = "kschubert",
    version,
    about = "Exact Schubert calculus in equivariant K-theory of flag varieties"
)]
struct Cli {
    /// Worker pool size (requires the parallel feature; output is identical
    /// for any value).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Built-in group label.
    #[arg(long, value_name = "A1|A2|A3|B2|C2|G2")]
    group: Option<String>,
    /// Path to a JSON integer Cartan matrix for a custom group.
    #[arg(long, value_name = "PATH", conflicts_with = "group")]
    cartan: Option<PathBuf>,
}

impl GroupArgs {
    fn build(&self) -> Result<GroupData> {
        if let Some(path) = &self.cartan {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            let matrix: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| Error::Usage(format!("bad Cartan JSON: {e}")))?;
            GroupData::build(CartanDatum::custom(matrix)?)
        } else if let Some(label) = &self.group {
            GroupData::from_label(GroupLabel::parse(label)?)
        } else {
            Err(Error::Usage("one of --group or --cartan is required".into()))
        }
    }

    /// Cache key component; custom matrices get a content hash so distinct
    /// Cartan inputs never share a cache entry.
    fn name(&self) -> String {
        if let Some(label) = &self.group {
            return label.clone();
        }
        let text = self
            .cartan
            .as_ref()
            .and_then(|p| std::fs::read_to_string(p).ok())
            .unwrap_or_default();
        let mut h: u64 = 0xcbf29ce484222325;
        for b in text.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        format!("Custom-{h:016x}")
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, body: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory; KSCHUBERT_CACHE overrides the default.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Recompute instead of using the cache.
    #[arg(long)]
    no_cache: bool,
}

impl CacheArgs {
    fn config(&self) -> CacheConfig {
        CacheConfig::resolve(self.cache_dir.clone(), self.no_cache)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weyl group queries.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Demazure operators and Euler characteristics.
    Demazure {
        #[command(subcommand)]
        cmd: DemazureCmd,
    },
    /// Canonical lifts of Schubert classes.
    Lift {
        #[command(subcommand)]
        cmd: LiftCmd,
    },
    /// Structure-constant and Chevalley tables.
    Const {
        #[command(subcommand)]
        cmd: ConstCmd,
    },
    /// The wonderful-compactification K-ring.
    Wonderful {
        #[command(subcommand)]
        cmd: WonderfulCmd,
    },
    /// Run verification suites; exit status 1 on failure.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Suite: demazure, lifts, constants, equivariant, wonderful or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of evaluation-oracle repetitions.
        #[arg(long, default_value_t = 3)]
        seeds: usize,
        /// Base seed for every oracle draw.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Allow the tensor-lift solve on groups larger than the default cap.
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Enumerate the group in canonical order.
    List {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Bruhat comparison of two elements given as words.
    Bruhat {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// Minimal coset representatives for a parabolic subset.
    Cosets {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Comma-separated one-based simple-root indices; empty for the
        /// trivial subset.
        #[arg(long = "I", value_name = "INDICES", default_value = "")]
        i_set: String,
    },
    /// The descent partition of the group.
    Partition {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum DemazureCmd {
    /// Apply the operator of a word to a polynomial (JSON term list).
    Apply {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Euler characteristics of a Schubert variety against a line bundle.
    Chi {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Subcommand)]
enum LiftCmd {
    /// The ordinary lift and its Schubert representatives.
    U0 {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// A single Schubert representative.
    Rv {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        v: String,
    },
    /// The tensor lift (Steinberg-matrix solve).
    Tensor {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Subcommand)]
enum ConstCmd {
    /// Ordinary structure constants.
    Ordinary {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Generate the full table.
        #[arg(long)]
        all: bool,
    },
    /// Equivariant structure constants.
    Equivariant {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Chevalley coefficients of a line bundle against a Schubert class.
    Chevalley {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        x: String,
        /// Also compute the equivariant coefficients.
        #[arg(long)]
        equivariant: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Partial-flag structure constants for a parabolic subset.
    Partial {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long = "I", value_name = "INDICES")]
        i_set: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum WonderfulCmd {
    /// The gamma-basis product table.
    Table {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Ring checks for the wonderful K-ring.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// One of: associativity, kdec, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = CONVENTION.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if let Some(n) = cli.threads {
        kschubert::par::configure_threads(n);
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_)
                | Error::InvalidCartan(_)
                | Error::NotFiniteType(_)
                | Error::NotMinimalRep(_, _)
                | Error::RankMismatch(_, _)
                | Error::NotDominant(_)
                | Error::ZeroCoordinate(_)
                | Error::GroupTooLarge(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Weyl { cmd } => weyl_cmd(cmd),
        Command::Demazure { cmd } => demazure_cmd(cmd),
        Command::Lift { cmd } => lift_cmd(cmd),
        Command::Const { cmd } => const_cmd(cmd),
        Command::Wonderful { cmd } => wonderful_cmd(cmd),
        Command::Verify {
            group,
            output,
            suite,
            seeds,
            seed,
            allow_large,
        } => {
            let gd = group.build()?;
            let opts = VerifyOptions {
                seed,
                seeds,
                span: 2,
                allow_large,
            };
            let report = run_suite(&gd, Suite::parse(&suite)?, &opts)?;
            output.emit(&render(&report.to_json()))?;
            Ok(if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn weyl_cmd(cmd: WeylCmd) -> Result<ExitCode> {
    match cmd {
        WeylCmd::List {
            group,
            output,
            cache,
        } => {
            let gd = group.build()?;
            let (bytes, _) = get_or_compute(&cache.config(), "weyl", &group.name(), || {
                Ok(serde_json::json!({
                    "group": gd.label().name(),
                    "convention": CONVENTION.fingerprint(),
                    "order": gd.wg.order(),
                    "elements": (0..gd.wg.order()).map(|w| serde_json::json!({
                        "word": gd.wg.render(w),
                        "length": gd.wg.length(w),
                        "matrix": gd.wg.elem(w).matrix,
                    })).collect::<Vec<_>>(),
                }))
            })?;
            output.emit(&bytes)?;
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Bruhat { group, u, w } => {
            let gd = group.build()?;
            let u = gd.wg.parse_word(&u)?;
            let w = gd.wg.parse_word(&w)?;
            println!("{}", gd.wg.bruhat_leq(u, w));
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Cosets {
            group,
            output,
            i_set,
        } => {
            let gd = group.build()?;
            let i_set = ParabolicSubset::parse(gd.rank(), &i_set)?;
            let reps: Vec<String> = gd
                .wg
                .min_coset_reps(&i_set)
                .into_iter()
                .map(|w| gd.wg.render(w))
                .collect();
            let value = serde_json::json!({
                "group": gd.label().name(),
                "I": i_set.to_string(),
                "reps": reps,
            });
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        WeylCmd::Partition { group, output } => {
            let gd = group.build()?;
            let parts: Vec<serde_json::Value> = gd
                .wg
                .partition()
                .into_iter()
                .map(|(i_set, members)| {
                    serde_json::json!({
                        "I": i_set.to_string(),
                        "members": members.iter().map(|&w| gd.wg.render(w)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = serde_json::json!({
                "group": gd.label().name(),
                "parts": parts,
            });
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn demazure_cmd(cmd: DemazureCmd) -> Result<ExitCode> {
    match cmd {
        DemazureCmd::Apply {
            group,
            output,
            word,
            poly,
        } => {
            let gd = group.build()?;
            let w = gd.wg.parse_word(&word)?;
            let value: serde_json::Value = serde_json::from_str(&poly)
                .map_err(|e| Error::Usage(format!("bad polynomial JSON: {e}")))?;
            let f = LaurentPoly::from_json(gd.rank(), &value)?;
            let result = demazure(&gd, &f, w);
            output.emit(&render(&result.to_json()))?;
            Ok(ExitCode::SUCCESS)
        }
        DemazureCmd::Chi {
            group,
            output,
            w,
            lambda,
        } => {
            let gd = group.build()?;
            let w = gd.wg.parse_word(&w)?;
            let lambda = Weight::parse(&lambda)?;
            if lambda.rank() != gd.rank() {
                return Err(Error::RankMismatch(lambda.rank(), gd.rank()));
            }
            let chi = euler_char(&gd, w, &lambda);
            let chi_t = euler_char_t(&gd, w, &lambda);
            let value = serde_json::json!({
                "group": gd.label().name(),
                "w": gd.wg.render(w),
                "lambda": lambda.to_string(),
                "chi": chi,
                "chi_T": chi_t.to_json(),
            });
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn lift_cmd(cmd: LiftCmd) -> Result<ExitCode> {
    match cmd {
        LiftCmd::U0 {
            group,
            output,
            cache,
        } => {
            let gd = group.build()?;
            let (bytes, _) = get_or_compute(&cache.config(), "lift-u0", &group.name(), || {
                let ol = OrdinaryLift::build(&gd)?;
                Ok(ordinary_lift_json(&gd, &ol))
            })?;
            output.emit(&bytes)?;
            Ok(ExitCode::SUCCESS)
        }
        LiftCmd::Rv { group, output, v } => {
            let gd = group.build()?;
            let v = gd.wg.parse_word(&v)?;
            let ol = OrdinaryLift::build(&gd)?;
            let value = serde_json::json!({
                "group": gd.label().name(),
                "v": gd.wg.render(v),
                "poly": ol.rv[v].to_json(),
            });
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        LiftCmd::Tensor {
            group,
            output,
            cache,
            allow_large,
        } => {
            let gd = group.build()?;
            let (bytes, _) = get_or_compute(&cache.config(), "lift-tensor", &group.name(), || {
                let ol = OrdinaryLift::build(&gd)?;
                let tl = TensorLift::build_with_options(&gd, allow_large)?;
                Ok(tensor_lift_json(&gd, &ol, &tl))
            })?;
            output.emit(&bytes)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn row_json(
    gd: &GroupData,
    x: &str,
    y: &str,
    entries: impl IntoIterator<Item = (usize, serde_json::Value)>,
) -> serde_json::Value {
    serde_json::json!({
        "group": gd.label().name(),
        "x": x,
        "y": y,
        "entries": entries.into_iter().map(|(z, v)| serde_json::json!({
            "z": gd.wg.render(z),
            "value": v,
        })).collect::<Vec<_>>(),
    })
}

fn const_cmd(cmd: ConstCmd) -> Result<ExitCode> {
    match cmd {
        ConstCmd::Ordinary {
            group,
            output,
            cache,
            x,
            y,
            all,
        } => {
            let gd = group.build()?;
            if all {
                let (bytes, _) =
                    get_or_compute(&cache.config(), "const-ordinary", &group.name(), || {
                        let ol = OrdinaryLift::build(&gd)?;
                        Ok(ordinary_table(&gd, &ol).to_json(&gd))
                    })?;
                output.emit(&bytes)?;
                return Ok(ExitCode::SUCCESS);
            }
            let (x, y) = require_pair(x, y)?;
            let ol = OrdinaryLift::build(&gd)?;
            let xi = gd.wg.parse_word(&x)?;
            let yi = gd.wg.parse_word(&y)?;
            let row = ordinary_constants(&gd, &ol, xi, yi);
            let value = row_json(
                &gd,
                &gd.wg.render(xi),
                &gd.wg.render(yi),
                row.into_iter().map(|(z, v)| (z, serde_json::json!(v))),
            );
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        ConstCmd::Equivariant {
            group,
            output,
            cache,
            x,
            y,
            all,
            allow_large,
        } => {
            let gd = group.build()?;
            if all {
                let (bytes, _) =
                    get_or_compute(&cache.config(), "const-equivariant", &group.name(), || {
                        let tl = TensorLift::build_with_options(&gd, allow_large)?;
                        Ok(equivariant_table(&gd, &tl).to_json(&gd))
                    })?;
                output.emit(&bytes)?;
                return Ok(ExitCode::SUCCESS);
            }
            let (x, y) = require_pair(x, y)?;
            let tl = TensorLift::build_with_options(&gd, allow_large)?;
            let xi = gd.wg.parse_word(&x)?;
            let yi = gd.wg.parse_word(&y)?;
            let row = equivariant_constants(&gd, &tl, xi, yi);
            let value = row_json(
                &gd,
                &gd.wg.render(xi),
                &gd.wg.render(yi),
                row.into_iter().map(|(z, p)| (z, p.to_json())),
            );
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        ConstCmd::Chevalley {
            group,
            output,
            lambda,
            x,
            equivariant,
            allow_large,
        } => {
            let gd = group.build()?;
            let lambda = Weight::parse(&lambda)?;
            if lambda.rank() != gd.rank() {
                return Err(Error::RankMismatch(lambda.rank(), gd.rank()));
            }
            let xi = gd.wg.parse_word(&x)?;
            let ol = OrdinaryLift::build(&gd)?;
            let row = ordinary_chevalley(&gd, &ol, &lambda, xi);
            let mut value = serde_json::json!({
                "group": gd.label().name(),
                "lambda": lambda.to_string(),
                "x": gd.wg.render(xi),
                "entries": row.iter().map(|(&y, v)| serde_json::json!({
                    "y": gd.wg.render(y),
                    "value": v,
                })).collect::<Vec<_>>(),
            });
            if equivariant {
                let tl = TensorLift::build_with_options(&gd, allow_large)?;
                let erow = equivariant_chevalley(&gd, &tl, &lambda, xi);
                value.as_object_mut().unwrap().insert(
                    "equivariant".into(),
                    serde_json::Value::Array(
                        erow.iter()
                            .map(|(&y, p)| {
                                serde_json::json!({
                                    "y": gd.wg.render(y),
                                    "value": p.to_json(),
                                })
                            })
                            .collect(),
                    ),
                );
            }
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
        ConstCmd::Partial {
            group,
            output,
            cache,
            i_set,
            x,
            y,
            all,
        } => {
            let gd = group.build()?;
            let i = ParabolicSubset::parse(gd.rank(), &i_set)?;
            if all {
                let kind = format!("const-partial-{}", i.mask());
                let (bytes, _) = get_or_compute(&cache.config(), &kind, &group.name(), || {
                    let ol = OrdinaryLift::build(&gd)?;
                    Ok(ordinary_partial_table(&gd, &ol, &i)?.to_json(&gd))
                })?;
                output.emit(&bytes)?;
                return Ok(ExitCode::SUCCESS);
            }
            let (x, y) = require_pair(x, y)?;
            let ol = OrdinaryLift::build(&gd)?;
            let xi = gd.wg.parse_word(&x)?;
            let yi = gd.wg.parse_word(&y)?;
            let row = ordinary_partial(&gd, &ol, &i, xi, yi)?;
            let mut value = row_json(
                &gd,
                &gd.wg.render(xi),
                &gd.wg.render(yi),
                row.into_iter().map(|(z, v)| (z, serde_json::json!(v))),
            );
            value
                .as_object_mut()
                .unwrap()
                .insert("I".into(), serde_json::json!(i.to_string()));
            output.emit(&render(&value))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn require_pair(x: Option<String>, y: Option<String>) -> Result<(String, String)> {
    match (x, y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::Usage(
            "provide --x and --y, or use --all for the full table".into(),
        )),
    }
}

fn wonderful_cmd(cmd: WonderfulCmd) -> Result<ExitCode> {
    match cmd {
        WonderfulCmd::Table {
            group,
            output,
            cache,
        } => {
            let gd = group.build()?;
            let (bytes, _) = get_or_compute(&cache.config(), "wonderful", &group.name(), || {
                let ol = OrdinaryLift::build(&gd)?;
                let ring = WonderfulRing::build(&gd, &ol);
                Ok(ring.table_json())
            })?;
            output.emit(&bytes)?;
            Ok(ExitCode::SUCCESS)
        }
        WonderfulCmd::Verify {
            group,
            output,
            suite,
            seed,
        } => {
            let gd = group.build()?;
            let ol = OrdinaryLift::build(&gd)?;
            let ring = WonderfulRing::build(&gd, &ol);
            let n = gd.wg.order();
            let mut checks = Vec::new();
            if suite == "associativity" || suite == "all" {
                let mut ok = true;
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let ab = ring.gamma_product(a, b);
                            let bc = ring.gamma_product(b, c);
                            if ring.kx_multiply(&ab, &KXElement::gamma(c))
                                != ring.kx_multiply(&KXElement::gamma(a), &bc)
                            {
                                ok = false;
                            }
                        }
                    }
                }
                checks.push(("associativity", ok));
            }
            if suite == "kdec" || suite == "all" {
                let report = kdec_basis_check(&gd, &ol, seed)?;
                checks.push(("kdec", report.pass()));
            }
            if checks.is_empty() {
                return Err(Error::Usage(format!(
                    "unknown wonderful suite '{suite}' (expected associativity, kdec or all)"
                )));
            }
            let pass = checks.iter().all(|&(_, ok)| ok);
            let value = serde_json::json!({
                "group": gd.label().name(),
                "suite": suite,
                "seed": seed,
                "pass": pass,
                "checks": checks.iter().map(|&(name, ok)| serde_json::json!({
                    "name": name,
                    "pass": ok,
                })).collect::<Vec<_>>(),
            });
            output.emit(&render(&value))?;
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
