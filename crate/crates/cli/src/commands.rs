//! Subcommand implementations. Each returns the process exit code and prints
//! its report to stdout; all output orderings follow declaration order so
//! runs diff cleanly.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::json;

use omlogic_core::deduction::{check_proof_with, CheckOptions};
use omlogic_core::harness::{
    run_trials, saturate, soundness_counterexamples, verify_main_theorem, FiniteSemantics,
    HarnessError, TrialConfig,
};
use omlogic_core::oml::{check_boolean, check_oml, enumerate_omls, OmlView};
use omlogic_core::semantics::{holds, is_model, Evaluator, StructureOptions};
use omlogic_core::syntax::{free_vars, parse_wff, print_wff, substitute};
use omlogic_core::tvalgebra::tuples;

use crate::exit_code;
use crate::files;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit_code::INPUT_ERROR,
            CliError::Precondition(_) => exit_code::PRECONDITION,
        }
    }
}

impl From<files::FileError> for CliError {
    fn from(e: files::FileError) -> Self {
        CliError::Input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// When `--json-in` is given, require the top-level file to be JSON.
pub fn require_json(json_in: bool, path: &Path) -> Result<()> {
    if json_in {
        files::ensure_json(path)?;
    }
    Ok(())
}

pub fn check_algebra(path: &Path, boolean: bool, json_in: bool, json_out: bool) -> Result<i32> {
    require_json(json_in, path)?;
    let algebra = files::load_algebra(path)?;
    let report = check_oml(&algebra).map_err(input)?;
    let compatible_all = if report.all_pass() {
        Some(check_boolean(&algebra).map_err(input)?)
    } else {
        None
    };

    if json_out {
        let axioms: Vec<serde_json::Value> = report
            .axioms
            .iter()
            .map(|c| {
                json!({
                    "axiom": c.axiom.roman(),
                    "description": c.axiom.describe(),
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "axioms": axioms,
                "oml": report.all_pass(),
                "compatible_all": compatible_all,
            })
        );
    } else {
        for c in &report.axioms {
            let verdict = if c.passed {
                "pass".to_string()
            } else {
                format!(
                    "fail at ({})",
                    c.counterexample
                        .as_ref()
                        .map(|v| v.join(", "))
                        .unwrap_or_default()
                )
            };
            println!("({}) {}: {}", c.axiom.roman(), c.axiom.describe(), verdict);
        }
        match compatible_all {
            Some(v) => println!("(vi) compatible-all: {v}"),
            None => println!("(vi) compatible-all: skipped (not an orthomodular lattice)"),
        }
    }

    let ok = report.all_pass() && (!boolean || compatible_all == Some(true));
    Ok(if ok {
        exit_code::OK
    } else {
        exit_code::DOMAIN_FAILURE
    })
}

pub fn center(path: &Path, json_in: bool, json_out: bool) -> Result<i32> {
    require_json(json_in, path)?;
    let algebra = files::load_algebra(path)?;
    let view = OmlView::new(algebra).map_err(|e| CliError::Precondition(e.to_string()))?;
    let center = view.center();
    if json_out {
        println!("{}", json!({ "center": center, "size": center.len() }));
    } else {
        println!("center: {}", center.join(" "));
        println!("size: {}", center.len());
    }
    Ok(exit_code::OK)
}

pub fn factorize(path: &Path, json_in: bool, json_out: bool) -> Result<i32> {
    require_json(json_in, path)?;
    let algebra = files::load_algebra(path)?;
    let view = OmlView::new(algebra).map_err(|e| CliError::Precondition(e.to_string()))?;
    let center = view.center();
    let irreducible = view.is_irreducible();
    let (factors, _iso) = view.decompose();
    let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();

    if json_out {
        println!(
            "{}",
            json!({
                "size": view.len(),
                "trivial": view.len() == 1,
                "center": center,
                "irreducible": irreducible,
                "factors": sizes,
                "reconstruction": "verified",
            })
        );
    } else {
        if view.len() == 1 {
            println!("trivial: the one-element lattice");
        }
        println!("center: {}", center.join(" "));
        if irreducible {
            println!("irreducible (center = {{{}}})", center.join(", "));
        } else {
            println!("reducible (center has {} elements)", center.len());
        }
        let shown: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
        println!("factors: [{}]", shown.join(", "));
        println!("reconstruction: verified");
    }
    Ok(exit_code::OK)
}

pub fn enumerate(n: usize, json_out: bool) -> Result<i32> {
    let views = enumerate_omls(n).map_err(|e| CliError::Precondition(e.to_string()))?;
    if json_out {
        let items: Vec<serde_json::Value> = views
            .iter()
            .map(|v| {
                json!({
                    "size": v.len(),
                    "irreducible": v.is_irreducible(),
                    "boolean": check_boolean(v.algebra()).unwrap_or(false),
                    "elements": v.algebra().poset().names(),
                })
            })
            .collect();
        println!(
            "{}",
            json!({ "cap": n, "count": views.len(), "lattices": items })
        );
    } else {
        for (i, v) in views.iter().enumerate() {
            let kind = if check_boolean(v.algebra()).unwrap_or(false) {
                "boolean"
            } else {
                "non-boolean"
            };
            let irr = if v.is_irreducible() {
                "irreducible"
            } else {
                "reducible"
            };
            println!("#{}: size {} ({irr}, {kind})", i + 1, v.len());
        }
        println!(
            "total: {} orthomodular lattice(s) up to isomorphism, size <= {n}",
            views.len()
        );
    }
    Ok(exit_code::OK)
}

pub fn eval(
    path: &Path,
    formula: &str,
    allow_nonsurjective: bool,
    json_in: bool,
    json_out: bool,
) -> Result<i32> {
    require_json(json_in, path)?;
    let options = StructureOptions {
        allow_nonsurjective,
    };
    let (structure, warnings) = files::load_structure(path, options)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let wff = parse_wff(structure.extended_language(), formula).map_err(input)?;
    let closure_order: Vec<String> = free_vars(&wff).into_iter().collect();
    let mut evaluator = Evaluator::new(&structure);
    let value_idx = evaluator.eval_wff(&wff).map_err(input)?;
    let value = structure.algebra().poset().name(value_idx).to_string();
    let top = value_idx == structure.algebra().top_idx();

    if json_out {
        println!(
            "{}",
            json!({ "value": value, "holds": top, "closure_order": closure_order })
        );
    } else {
        println!("value: {value}");
        println!("holds: {top}");
        if !closure_order.is_empty() {
            println!("closure order: {}", closure_order.join(" "));
        }
    }
    Ok(if top {
        exit_code::OK
    } else {
        exit_code::DOMAIN_FAILURE
    })
}

pub fn model_check(
    structure_path: &Path,
    gamma_path: &Path,
    allow_nonsurjective: bool,
    json_in: bool,
    json_out: bool,
) -> Result<i32> {
    require_json(json_in, structure_path)?;
    let options = StructureOptions {
        allow_nonsurjective,
    };
    let (structure, warnings) = files::load_structure(structure_path, options)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let gamma = files::load_formulas(gamma_path, structure.language())?;
    let verdict = is_model(&structure, &gamma).map_err(input)?;

    // locate a failing instantiation for the report
    let mut witness: Option<(String, String)> = None;
    if !verdict {
        'outer: for g in &gamma {
            let vars: Vec<String> = free_vars(g).into_iter().collect();
            let universe = structure.universe().to_vec();
            for combo in tuples(universe.len(), vars.len()) {
                let bindings: BTreeMap<String, String> = vars
                    .iter()
                    .cloned()
                    .zip(combo.iter().map(|&i| universe[i].clone()))
                    .collect();
                let inst =
                    substitute(structure.extended_language(), g, &bindings).map_err(input)?;
                if !holds(&structure, &inst).map_err(input)? {
                    witness = Some((print_wff(g), print_wff(&inst)));
                    break 'outer;
                }
            }
        }
    }

    if json_out {
        let w = witness
            .as_ref()
            .map(|(g, i)| json!({ "formula": g, "instance": i }));
        println!("{}", json!({ "model": verdict, "failure": w }));
    } else {
        println!("model: {verdict}");
        if let Some((g, inst)) = witness {
            println!("fails: {g} at instance {inst}");
        }
    }
    Ok(if verdict {
        exit_code::OK
    } else {
        exit_code::DOMAIN_FAILURE
    })
}

/// Size caps for the randomized-trial generator, settable from the CLI.
#[derive(Clone, Copy, Debug)]
pub struct TrialCaps {
    pub max_universe: usize,
    pub max_algebra_size: usize,
    pub max_depth: usize,
    pub max_gamma: usize,
}

impl Default for TrialCaps {
    fn default() -> Self {
        let d = TrialConfig::new(0, 0);
        TrialCaps {
            max_universe: d.max_universe,
            max_algebra_size: d.max_algebra_size,
            max_depth: d.max_depth,
            max_gamma: d.max_gamma,
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn verify_irreducible(
    semantics_path: Option<&Path>,
    gamma_path: Option<&Path>,
    formula: Option<&str>,
    saturate_flag: bool,
    trials: Option<usize>,
    seed: u64,
    caps: TrialCaps,
    allow_nonsurjective: bool,
    json_out: bool,
) -> Result<i32> {
    if let Some(count) = trials {
        let config = TrialConfig {
            max_universe: caps.max_universe,
            max_algebra_size: caps.max_algebra_size,
            max_depth: caps.max_depth,
            max_gamma: caps.max_gamma,
            ..TrialConfig::new(seed, count)
        };
        let summary = run_trials(config).map_err(|e| CliError::Precondition(e.to_string()))?;
        if json_out {
            println!(
                "{}",
                json!({
                    "seed": seed,
                    "trials": summary.trials,
                    "agreements": summary.agreements,
                    "witnesses": summary.witnesses,
                    "failures": summary.failures.iter().map(|f| f.message.clone()).collect::<Vec<_>>(),
                })
            );
        } else {
            println!("seed: {seed}");
            println!("{}/{} agree", summary.agreements, summary.trials);
            println!("witness runs: {}", summary.witnesses);
            for f in &summary.failures {
                println!("disagreement in trial {}: {}", f.trial, f.message);
            }
        }
        return Ok(if summary.all_agree() {
            exit_code::OK
        } else {
            exit_code::DOMAIN_FAILURE
        });
    }

    let (Some(semantics_path), Some(gamma_path), Some(formula)) =
        (semantics_path, gamma_path, formula)
    else {
        return Err(CliError::Input(
            "verify-irreducible needs <semantics> <gamma> <formula>, or --trials".into(),
        ));
    };
    let options = StructureOptions {
        allow_nonsurjective,
    };
    let (mut semantics, warnings) = files::load_semantics(semantics_path, options)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    if saturate_flag {
        semantics = saturate(&semantics).map_err(|e| CliError::Precondition(e.to_string()))?;
    }
    let lang = semantics
        .structures()
        .first()
        .map(|s| s.language().clone())
        .ok_or_else(|| CliError::Input("semantics file lists no structures".into()))?;
    let gamma = files::load_formulas(gamma_path, &lang)?;
    let psi = parse_wff(&lang, formula).map_err(input)?;

    let report = match verify_main_theorem(&semantics, &gamma, &psi) {
        Ok(r) => r,
        Err(HarnessError::NotFactorClosed(missing)) => {
            return Err(CliError::Precondition(format!(
                "semantics is not factor-closed (missing: {missing}); use --saturate"
            )))
        }
        Err(e) => return Err(CliError::Precondition(e.to_string())),
    };

    if json_out {
        println!(
            "{}",
            json!({
                "structures": semantics.len(),
                "models": report.models,
                "irreducible_models": report.irreducible_models,
                "all_models_satisfy": report.all_models_satisfy,
                "all_irreducible_models_satisfy": report.all_irreducible_models_satisfy,
                "claims_agree": report.claims_agree(),
                "witness": report.witness.as_ref().map(|w| json!({
                    "failing_model": w.failing_model + 1,
                    "irreducible_witness": w.witness_index + 1,
                })),
            })
        );
    } else {
        println!("structures: {}", semantics.len());
        println!("models of gamma: {}", report.models.len());
        println!(
            "irreducible models of gamma: {}",
            report.irreducible_models.len()
        );
        println!("all models satisfy: {}", report.all_models_satisfy);
        println!(
            "all irreducible models satisfy: {}",
            report.all_irreducible_models_satisfy
        );
        println!("claims agree: {}", report.claims_agree());
        if let Some(w) = &report.witness {
            let witness = &semantics.structures()[w.witness_index];
            println!(
                "witness: model {} factors down to irreducible model {} (algebra size {})",
                w.failing_model + 1,
                w.witness_index + 1,
                witness.algebra().len()
            );
        }
    }
    Ok(if report.claims_agree() {
        exit_code::OK
    } else {
        exit_code::DOMAIN_FAILURE
    })
}

pub fn proof_check(
    system_path: &Path,
    hypotheses_path: &Path,
    proof_path: &Path,
    goal: Option<&str>,
    literal_rules: bool,
    sound_check: Option<&Path>,
    json_out: bool,
) -> Result<i32> {
    let system_file = files::load_system(system_path)?;
    let lang = &system_file.language;
    let hypotheses = files::load_formulas(hypotheses_path, lang)?;
    let proof = files::load_proof(proof_path, lang)?;
    let goal_wff = match goal {
        Some(text) => parse_wff(lang, text).map_err(input)?,
        None => {
            let Some((last, _)) = proof.steps.last() else {
                return Err(CliError::Input(
                    "proof has no steps and no --goal given".into(),
                ));
            };
            last.clone()
        }
    };

    let report = check_proof_with(
        &system_file.system,
        &hypotheses,
        &proof,
        &goal_wff,
        CheckOptions { literal_rules },
    );

    let mut sound_counterexamples: Vec<usize> = Vec::new();
    let mut checked_structures = 0usize;
    if let Some(sem_path) = sound_check {
        if report.accepted {
            let (semantics, _) = files::load_semantics(sem_path, StructureOptions::default())?;
            compatible_language(&semantics, lang)?;
            checked_structures = semantics.len();
            sound_counterexamples = soundness_counterexamples(&semantics, &hypotheses, &goal_wff)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
        }
    }

    if json_out {
        println!(
            "{}",
            json!({
                "accepted": report.accepted,
                "goal_reached": report.goal_reached,
                "first_failure": report.first_failure.map(|i| i + 1),
                "steps": report.steps.iter().map(|s| json!({ "ok": s.ok, "detail": s.detail })).collect::<Vec<_>>(),
                "soundness_counterexamples": sound_counterexamples.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })
        );
    } else {
        for (i, s) in report.steps.iter().enumerate() {
            let mark = if s.ok { "ok" } else { "FAIL" };
            println!("step {}: {mark} {}", i + 1, s.detail);
        }
        if report.accepted {
            println!("accepted");
        } else if let Some(i) = report.first_failure {
            println!("rejected at step {}", i + 1);
        } else {
            println!("rejected: final step is not the goal");
        }
        if sound_check.is_some() && report.accepted {
            if sound_counterexamples.is_empty() {
                println!("soundness check: no counterexample in {checked_structures} structure(s)");
            } else {
                for i in &sound_counterexamples {
                    println!(
                        "soundness counterexample: structure {} models the hypotheses but fails the goal",
                        i + 1
                    );
                }
            }
        }
    }

    let ok = report.accepted && sound_counterexamples.is_empty();
    Ok(if ok {
        exit_code::OK
    } else {
        exit_code::DOMAIN_FAILURE
    })
}

fn compatible_language(t: &FiniteSemantics, lang: &omlogic_core::syntax::Language) -> Result<()> {
    match t.structures().first() {
        Some(s) if s.language() != lang => Err(CliError::Input(
            "the semantics language differs from the deduction system language".into(),
        )),
        _ => Ok(()),
    }
}
