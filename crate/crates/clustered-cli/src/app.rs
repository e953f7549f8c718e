//! Argument parsing, dispatch, and output shaping for the `clustered` binary.
//!
//! Exit codes: 0 on success (including `--help`/`--version`), 1 for usage
//! errors, 2 for domain errors (with a machine-readable `kind`) and for a
//! verification run that found failures.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use clustered_core::osculation::{canonical_multidegree, incidence_dimension, ThresholdReport};
use clustered_core::p1::{build_osculating_map, glue_along_line, kernel_splitting_type};
use clustered_core::{cluster, schubert, GrassContext, Partition, SchubertClass, ShiftMode};

use crate::verify::{self, Scope};
use crate::wire::{
    self, bigint_json, class_json, context_json, error_json, multipoly_json, CliError,
    CommandResult,
};

/// Name of the environment variable that overrides the verification seed.
pub const SEED_ENV: &str = "CLUSTERED_VERIFY_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "clustered",
    version,
    about = "Exact calculators for clustered families of linear spaces on hypersurfaces",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print results as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two Schubert basis classes in a fixed Grassmannian.
    LrProduct {
        /// Context as "planeDim,ambientDim", e.g. 1,3.
        #[arg(long)]
        ctx: String,
        /// First partition, comma-separated with trailing zeros, e.g. 1,0.
        #[arg(long)]
        a: String,
        /// Second partition.
        #[arg(long)]
        b: String,
    },
    /// Decide whether the product of two basis classes is nonzero, without
    /// expanding it.
    Nonzero {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Apply the h- or p-shift operator to a partition.
    Shift {
        #[arg(long)]
        ctx: String,
        /// Partition to shift.
        #[arg(long)]
        p: String,
        /// Which operator: h adds 1 to every part, p prepends a maximal part.
        #[arg(long, value_parser = ["h", "p"])]
        mode: String,
    },
    /// Complement a partition in the ambient box.
    Dual {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        p: String,
    },
    /// Test the necessary conditions for a class to come from an l-clustered
    /// family, and classify the extremal case.
    ClusterCheck {
        #[arg(long)]
        ctx: String,
        /// Class as JSON: [{"partition":[2,1,0],"coeff":1}, ...].
        #[arg(long)]
        class: String,
        /// Cluster parameter l >= 1.
        #[arg(long)]
        ell: u32,
    },
    /// Build the partition certifying a dimension bound for the containing
    /// family of a Schubert family of planes.
    Mu {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        p: String,
    },
    /// Class-level model of the (k-1)-planes meeting a fixed subvariety Z.
    MeetsZ {
        /// Ambient projective dimension.
        #[arg(long)]
        n: u32,
        /// The planes have projective dimension k-1.
        #[arg(long)]
        k: u32,
        /// Dimension of Z.
        #[arg(long = "z-dim")]
        z_dim: u32,
        /// Degree of Z.
        #[arg(long = "z-degree")]
        z_degree: u64,
    },
    /// Dimension of an osculating-line incidence variety (--i), or the
    /// canonical multidegree of a contact family (--r, optionally --s).
    Osculation {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Number of residual contact points.
        #[arg(long)]
        i: Option<u32>,
        /// Contact order at the first point.
        #[arg(long)]
        r: Option<u32>,
        /// Contact order at a second point.
        #[arg(long)]
        s: Option<u32>,
    },
    /// Tabulate the degree thresholds at a given (n, d).
    #[command(visible_alias = "report")]
    Thresholds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Splitting type of the kernel bundle attached to a marked binary form
    /// and companion forms.
    Splitting {
        /// Marked form as comma-separated rational coefficients, highest
        /// s-power first: 1,0,-1 is s^2 - t^2.
        #[arg(long)]
        p: String,
        /// Companion form of degree deg(p) - 1; repeat for several.
        #[arg(long = "f")]
        fs: Vec<String>,
    },
    /// Glue two hypersurfaces along a shared line.
    Glue {
        /// First hypersurface as JSON {"degree":..,"terms":[{"exp":[..],"coeff":..}]}.
        #[arg(long)]
        f1: String,
        /// Second hypersurface, same format.
        #[arg(long)]
        f2: String,
    },
    /// Run the labeled self-verification suite.
    Verify {
        /// Wider exhaustive ranges and more randomized trials.
        #[arg(long)]
        full: bool,
        /// Seed for the randomized checks (overrides CLUSTERED_VERIFY_SEED).
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// What a successful dispatch hands back to the printer.
#[derive(Debug)]
struct Execution {
    result: CommandResult,
    human: String,
    /// Set by `verify` when checks failed: print normally, exit 2.
    failed_checks: bool,
}

impl Execution {
    fn new(result: CommandResult, human: String) -> Self {
        Execution {
            result,
            human,
            failed_checks: false,
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Print to stdout, exiting quietly if the reader has closed the pipe.
fn emit(text: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(0);
    }
}

/// Testable entry point: parse, dispatch, print, return the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(exec) => {
            if json {
                emit(&serde_json::to_string_pretty(&exec.result).expect("serializable result"));
            } else {
                emit(&exec.human);
            }
            if exec.failed_checks {
                2
            } else {
                0
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            1
        }
        Err(err) => {
            if json {
                emit(&error_json(&err).to_string());
            } else if let CliError::Domain { kind, message } = &err {
                eprintln!("error ({kind}): {message}");
            }
            2
        }
    }
}

fn parse_pair(ctx: &str, a: &str, b: &str) -> Result<(GrassContext, Partition, Partition), CliError> {
    let ctx = wire::parse_context(ctx)?;
    let a = wire::parse_partition(a)?;
    let b = wire::parse_partition(b)?;
    ctx.check_admissible(&a)?;
    ctx.check_admissible(&b)?;
    Ok((ctx, a, b))
}

fn execute(command: Command) -> Result<Execution, CliError> {
    match command {
        Command::LrProduct { ctx, a, b } => {
            let (ctx, a, b) = parse_pair(&ctx, &a, &b)?;
            let product = SchubertClass::basis(ctx, a.clone())
                .map_err(CliError::from)?
                .multiply(&SchubertClass::basis(ctx, b.clone()).map_err(CliError::from)?)
                .map_err(CliError::from)?;
            let human = format!("{product}");
            Ok(Execution::new(
                CommandResult::new(
                    "lr-product",
                    json!({
                        "ctx": context_json(&ctx),
                        "a": a.parts(),
                        "b": b.parts(),
                    }),
                    json!({ "class": class_json(&product) }),
                    &["littlewood-richardson-rule"],
                ),
                human,
            ))
        }
        Command::Nonzero { ctx, a, b } => {
            let (ctx, a, b) = parse_pair(&ctx, &a, &b)?;
            let nonzero = schubert::product_nonzero(ctx, &a, &b).map_err(CliError::from)?;
            let human = if nonzero {
                format!("sigma{a} * sigma{b} is nonzero in {ctx}")
            } else {
                format!("sigma{a} * sigma{b} vanishes in {ctx}")
            };
            Ok(Execution::new(
                CommandResult::new(
                    "nonzero",
                    json!({
                        "ctx": context_json(&ctx),
                        "a": a.parts(),
                        "b": b.parts(),
                    }),
                    json!({ "nonzero": nonzero }),
                    &["duality-nonvanishing-criterion"],
                ),
                human,
            ))
        }
        Command::Shift { ctx, p, mode } => {
            let ctx = wire::parse_context(&ctx)?;
            let p = wire::parse_partition(&p)?;
            let shift_mode = if mode == "h" { ShiftMode::H } else { ShiftMode::P };
            let shifted = ctx.shift(&p, shift_mode).map_err(CliError::from)?;
            let human = format!("{p} --{mode}--> {shifted}");
            Ok(Execution::new(
                CommandResult::new(
                    "shift",
                    json!({
                        "ctx": context_json(&ctx),
                        "p": p.parts(),
                        "mode": mode,
                    }),
                    json!({ "shifted": shifted.parts() }),
                    &["pieri-shift-identities"],
                ),
                human,
            ))
        }
        Command::Dual { ctx, p } => {
            let ctx = wire::parse_context(&ctx)?;
            let p = wire::parse_partition(&p)?;
            let dual = ctx.dual(&p).map_err(CliError::from)?;
            let human = format!("dual of {p} in {ctx} is {dual}");
            Ok(Execution::new(
                CommandResult::new(
                    "dual",
                    json!({ "ctx": context_json(&ctx), "p": p.parts() }),
                    json!({ "dual": dual.parts() }),
                    &["poincare-duality"],
                ),
                human,
            ))
        }
        Command::ClusterCheck { ctx, class, ell } => {
            let ctx = wire::parse_context(&ctx)?;
            let class = wire::parse_class(ctx, &class)?;
            let report = cluster::check_necessary(&class, ell).map_err(CliError::from)?;
            let extremal = match &report.extremal {
                Some(d) => json!({
                    "fixedPlaneDim": d.fixed_plane_dim,
                    "multiplicity": bigint_json(&d.multiplicity),
                }),
                None => Value::Null,
            };
            let mut human = format!(
                "codimension {} with l = {}: floor {}, bound {}, necessary conditions {}",
                report.epsilon,
                report.ell,
                report.ell_floor,
                report.codim_bound,
                if report.satisfies_necessary { "hold" } else { "fail" },
            );
            if let Some(d) = &report.extremal {
                human.push_str(&format!("\nextremal: {d}"));
            }
            Ok(Execution::new(
                CommandResult::new(
                    "cluster-check",
                    json!({
                        "ctx": context_json(&ctx),
                        "class": class_json(&class),
                        "ell": ell,
                    }),
                    json!({
                        "epsilon": report.epsilon,
                        "ell": report.ell,
                        "ellFloor": report.ell_floor,
                        "codimBound": report.codim_bound,
                        "satisfiesNecessary": report.satisfies_necessary,
                        "extremal": extremal,
                    }),
                    &["clustered-codimension-bound", "extremal-rectangle-classification"],
                ),
                human,
            ))
        }
        Command::Mu { ctx, p } => {
            let ctx = wire::parse_context(&ctx)?;
            let p = wire::parse_partition(&p)?;
            let out = cluster::mu_construction(ctx, &p).map_err(CliError::from)?;
            let human = format!(
                "lambda {} (l = {}) in {}: mu = {} in {}, codimension bound {}",
                out.lambda, out.ell, out.source_ctx, out.mu, out.target_ctx, out.kleiman_bound,
            );
            Ok(Execution::new(
                CommandResult::new(
                    "mu",
                    json!({ "ctx": context_json(&ctx), "p": p.parts() }),
                    json!({
                        "ell": out.ell,
                        "dual": out.dual.parts(),
                        "targetCtx": context_json(&out.target_ctx),
                        "mu": out.mu.parts(),
                        "kleimanBound": out.kleiman_bound,
                    }),
                    &["containing-family-bound"],
                ),
                human,
            ))
        }
        Command::MeetsZ {
            n,
            k,
            z_dim,
            z_degree,
        } => {
            let model = cluster::meets_z_model(n, k, z_dim, z_degree).map_err(CliError::from)?;
            let human = format!(
                "B = planes meeting Z: [{}] in {} (codimension {})\nC = containing planes: [{}] in {}",
                model.class_b,
                model.class_b.ctx(),
                model.epsilon,
                model.class_c,
                model.class_c.ctx(),
            );
            Ok(Execution::new(
                CommandResult::new(
                    "meets-z",
                    json!({ "n": n, "k": k, "zDim": z_dim, "zDegree": z_degree }),
                    json!({
                        "epsilon": model.epsilon,
                        "ctxB": context_json(&model.class_b.ctx()),
                        "classB": class_json(&model.class_b),
                        "ctxC": context_json(&model.class_c.ctx()),
                        "classC": class_json(&model.class_c),
                    }),
                    &["meets-z-class-model"],
                ),
                human,
            ))
        }
        Command::Osculation { n, d, i, r, s } => match (i, r, s) {
            (Some(i), None, None) => {
                let out = incidence_dimension(n, d, i).map_err(CliError::from)?;
                let human = format!(
                    "incidence dimension {} (locus empty for general hypersurfaces: {}, proper: {})",
                    out.dim, out.zi_empty_when, out.zi_proper_when,
                );
                Ok(Execution::new(
                    CommandResult::new(
                        "osculation",
                        json!({ "n": n, "d": d, "i": i }),
                        json!({
                            "dim": bigint_json(&out.dim),
                            "ziEmptyWhen": out.zi_empty_when,
                            "ziProperWhen": out.zi_proper_when,
                        }),
                        &["osculating-incidence-dimension"],
                    ),
                    human,
                ))
            }
            (None, Some(r), s) => {
                let out = canonical_multidegree(n, d, r, s).map_err(CliError::from)?;
                let human = format!(
                    "multidegree {:?}, fiber dimension {}, general type: {}, genus coefficient {}",
                    out.multidegree, out.fiber_dim, out.general_type, out.genus_coefficient,
                );
                Ok(Execution::new(
                    CommandResult::new(
                        "osculation",
                        json!({ "n": n, "d": d, "r": r, "s": s }),
                        json!({
                            "totalDim": bigint_json(&out.total_dim),
                            "fiberDim": out.fiber_dim,
                            "multidegree": out.multidegree,
                            "generalType": out.general_type,
                            "genusCoefficient": out.genus_coefficient,
                        }),
                        &["canonical-multidegree-formulas"],
                    ),
                    human,
                ))
            }
            _ => Err(CliError::Usage(
                "pass exactly one of --i (incidence dimension) or --r [--s] (multidegree)".into(),
            )),
        },
        Command::Thresholds { n, d } => {
            let report = ThresholdReport::new(n, d).map_err(CliError::from)?;
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "label": e.label,
                        "minDegree": e.min_degree,
                        "holds": e.holds,
                        "conditional": e.conditional,
                    })
                })
                .collect();
            let chain: Vec<Value> = report
                .codim_chain
                .iter()
                .map(|(m, c)| json!({ "m": m, "codim": c }))
                .collect();
            let mut human = format!("thresholds at n = {n}, d = {d}:");
            for e in &report.entries {
                human.push_str(&format!(
                    "\n  {:<18} needs d >= {:<3} {}{}",
                    e.label,
                    e.min_degree,
                    if e.holds { "holds" } else { "fails" },
                    if e.conditional { " (conditional)" } else { "" },
                ));
            }
            Ok(Execution::new(
                CommandResult::new(
                    "thresholds",
                    json!({ "n": n, "d": d }),
                    json!({ "entries": entries, "codimChain": chain }),
                    &["degree-threshold-table"],
                ),
                human,
            ))
        }
        Command::Splitting { p, fs } => {
            let p = wire::parse_binary_form(&p)?;
            let fs = fs
                .iter()
                .map(|f| wire::parse_binary_form(f))
                .collect::<Result<Vec<_>, _>>()?;
            let map = build_osculating_map(&p, &fs).map_err(CliError::from)?;
            let kernel = kernel_splitting_type(&map);
            let balanced = kernel.is_balanced().map_err(CliError::from)?;
            let human = format!(
                "kernel of the map attached to p = {p} splits as {kernel}{}",
                if balanced { " (balanced)" } else { " (unbalanced)" },
            );
            Ok(Execution::new(
                CommandResult::new(
                    "splitting",
                    json!({
                        "p": wire::binary_form_json(&p),
                        "fs": fs.iter().map(wire::binary_form_json).collect::<Vec<_>>(),
                    }),
                    json!({
                        "twists": kernel.twists(),
                        "rank": kernel.rank(),
                        "degree": kernel.degree(),
                        "balanced": balanced,
                    }),
                    &["kernel-splitting-recovery"],
                ),
                human,
            ))
        }
        Command::Glue { f1, f2 } => {
            let f1 = wire::parse_multipoly("f1", &f1)?;
            let f2 = wire::parse_multipoly("f2", &f2)?;
            let glued = glue_along_line(&f1, &f2).map_err(CliError::from)?;
            let human = format!(
                "glued hypersurface in {} variables:\n  {}",
                glued.f.num_vars(),
                glued.f,
            );
            Ok(Execution::new(
                CommandResult::new(
                    "glue",
                    json!({ "f1": multipoly_json(&f1), "f2": multipoly_json(&f2) }),
                    json!({
                        "f": multipoly_json(&glued.f),
                        "lineMap": wire::coordinate_map_json(&glued.line_map),
                        "lambda1Map": wire::coordinate_map_json(&glued.lambda1_map),
                        "lambda2Map": wire::coordinate_map_json(&glued.lambda2_map),
                    }),
                    &["line-gluing-construction"],
                ),
                human,
            ))
        }
        Command::Verify { full, seed } => {
            let scope = if full { Scope::Full } else { Scope::Fast };
            let seed = seed
                .or_else(|| {
                    std::env::var(SEED_ENV)
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(verify::DEFAULT_SEED);
            let report = verify::run(scope, seed);
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "label": c.label, "passed": c.passed, "details": c.details }))
                .collect();
            let human = format!("{report}");
            let mut exec = Execution::new(
                CommandResult::new(
                    "verify",
                    json!({ "scope": scope.label(), "seed": seed }),
                    json!({
                        "allPassed": report.all_passed(),
                        "passed": report.passed(),
                        "failed": report.failed(),
                        "checks": checks,
                    }),
                    &["independent-oracle-suite"],
                ),
                human,
            );
            exec.failed_checks = !report.all_passed();
            Ok(exec)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Execution, CliError> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        execute(cli.command)
    }

    #[test]
    fn lr_product_matches_the_pinned_example() {
        let out = exec(&["clustered", "lr-product", "--ctx", "1,3", "--a", "1,0", "--b", "1,0"])
            .unwrap();
        assert_eq!(
            out.result.outputs,
            json!({ "class": [
                { "partition": [2, 0], "coeff": 1 },
                { "partition": [1, 1], "coeff": 1 },
            ]})
        );
        assert_eq!(out.result.command, "lr-product");
        assert!(!out.result.citations.is_empty());
    }

    #[test]
    fn shift_surfaces_the_h_undefined_kind() {
        let err = exec(&["clustered", "shift", "--ctx", "1,3", "--p", "2,1", "--mode", "h"])
            .unwrap_err();
        assert!(matches!(err, CliError::Domain { ref kind, .. } if kind == "h-undefined"));

        let ok = exec(&["clustered", "shift", "--ctx", "1,3", "--p", "1,1", "--mode", "h"])
            .unwrap();
        assert_eq!(ok.result.outputs, json!({ "shifted": [2, 2] }));
    }

    #[test]
    fn thresholds_spot_values() {
        let out = exec(&["clustered", "thresholds", "--n", "10", "--d", "16"]).unwrap();
        let entries = out.result.outputs["entries"].as_array().unwrap();
        let find = |label: &str| {
            entries
                .iter()
                .find(|e| e["label"] == label)
                .unwrap_or_else(|| panic!("{label} missing"))
                .clone()
        };
        assert_eq!(find("algHypOutsideZL")["holds"], json!(true));
        assert_eq!(find("chowZ2")["holds"], json!(false));
        assert_eq!(find("linesOnly")["minDegree"], json!(15));
    }

    #[test]
    fn osculation_needs_exactly_one_mode() {
        assert!(matches!(
            exec(&["clustered", "osculation", "--n", "3", "--d", "5"]),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            exec(&["clustered", "osculation", "--n", "3", "--d", "5", "--i", "1", "--r", "2"]),
            Err(CliError::Usage(_))
        ));
        let out = exec(&["clustered", "osculation", "--n", "3", "--d", "5", "--i", "1"]).unwrap();
        assert_eq!(out.result.outputs["dim"], json!(55));
    }

    #[test]
    fn splitting_example_balances() {
        let out = exec(&[
            "clustered", "splitting", "--p", "0,1,0", "--f", "1,1",
        ])
        .unwrap();
        assert_eq!(out.result.outputs["twists"], json!([1, 0]));
        assert_eq!(out.result.outputs["balanced"], json!(true));
    }

    #[test]
    fn verify_subcommand_reports_checks() {
        let cli = Cli::try_parse_from(["clustered", "verify"]).unwrap();
        match cli.command {
            Command::Verify { full, seed } => {
                assert!(!full);
                assert!(seed.is_none());
            }
            _ => panic!("wrong subcommand"),
        }
    }
}
