//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Everything is exact; the
//! random parts are seeded and reproducible.
//!
//! Run with:
//!
//! ```text
//! cargo test -p omlogic-cli --test acceptance -- --nocapture
//! ```

use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use omlogic_cli::files;
use omlogic_core::deduction::check_proof;
use omlogic_core::harness::{random_structure, random_wff, run_trials, TrialConfig};
use omlogic_core::oml::{boolean_power, check_boolean, enumerate_omls, mo, OmlView};
use omlogic_core::semantics::{
    eval_sentence, factor_structures, is_model, sentence_family, Evaluator, StructureOptions,
};
use omlogic_core::syntax::{parse_wff, print_wff, Language, Term, Wff};
use omlogic_core::tvalgebra::{
    find_isomorphism, is_homomorphism, is_irreducible_bruteforce, projection, TVAlgebra,
};

const SEED: u64 = 20260808;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn report(name: &str, started: Instant, ok: bool) {
    println!(
        "{} - {name} ({:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    assert!(ok, "acceptance criterion failed: {name}");
}

#[test]
fn criterion_1_boolean_irreducibility() {
    let started = Instant::now();
    let ok = (0..=3).all(|k| boolean_power(k).is_irreducible() == (k <= 1));
    report(
        "Boolean powers 2^k are irreducible exactly for k <= 1",
        started,
        ok,
    );
}

#[test]
fn criterion_2_center_criterion_matches_bruteforce() {
    let started = Instant::now();
    let mut ok = true;
    for view in enumerate_omls(8).unwrap() {
        let by_center = view.is_irreducible();
        let by_bruteforce = is_irreducible_bruteforce(view.algebra()).unwrap();
        if by_center != by_bruteforce {
            println!(
                "  mismatch at size {}: center says {by_center}, brute force says {by_bruteforce}",
                view.len()
            );
            ok = false;
        }
    }
    report(
        "center criterion agrees with brute force on all OMLs of size <= 8",
        started,
        ok,
    );
}

#[test]
fn criterion_3_factorization_round_trip() {
    let started = Instant::now();
    let mut ok = true;
    for view in enumerate_omls(8).unwrap() {
        let (factors, _iso) = view.decompose();
        if !factors.iter().all(OmlView::is_irreducible) {
            ok = false;
        }
        let algebras: Vec<TVAlgebra> = factors.iter().map(|f| f.algebra().clone()).collect();
        let product = TVAlgebra::product_of_list(
            &omlogic_core::tvalgebra::AlgType::lattice_type(),
            &algebras,
        )
        .unwrap();
        if find_isomorphism(view.algebra(), &product).is_none() {
            println!("  no isomorphism back from factors at size {}", view.len());
            ok = false;
        }
    }
    report(
        "every OML of size <= 8 reconstructs from its irreducible factors",
        started,
        ok,
    );
}

#[test]
fn criterion_4_projections_are_homomorphisms() {
    let started = Instant::now();
    let small: Vec<OmlView> = enumerate_omls(6).unwrap();
    let mut ok = true;
    let mut products = 0;
    for a in &small {
        for b in &small {
            let prod = TVAlgebra::product(a.algebra(), b.algebra()).unwrap();
            products += 1;
            for side in [1, 2] {
                let p = projection(&prod, side).unwrap();
                if !is_homomorphism(&p).unwrap() {
                    println!("  projection {side} of {}x{} fails", a.len(), b.len());
                    ok = false;
                }
            }
        }
    }
    report(
        &format!(
            "both projections of all {products} products of OMLs (<= 6 x <= 6) are homomorphisms"
        ),
        started,
        ok,
    );
}

#[test]
fn criterion_5_factor_models_and_compositionality() {
    let started = Instant::now();
    let views = enumerate_omls(8).unwrap();
    let mut product_pool = Vec::new();
    for i in 0..views.len() {
        for j in 0..views.len() {
            product_pool.push(TVAlgebra::product(views[i].algebra(), views[j].algebra()).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0usize;
    let mut models_seen = 0usize;
    let mut ok = true;
    while checked < 500 {
        let lang = if rng.random_bool(0.5) {
            Language::with_standard_connectives(&[("P", 1), ("Q", 2)], &[]).unwrap()
        } else {
            Language::with_standard_connectives(&[("P", 1)], &[]).unwrap()
        };
        let algebra = &product_pool[rng.random_range(0..product_pool.len())];
        let universe_size = rng.random_range(1..=3);
        let Some(s) = random_structure(&mut rng, &lang, algebra, universe_size) else {
            continue;
        };
        checked += 1;

        let gamma: Vec<Wff> = (0..rng.random_range(0..=2))
            .map(|_| random_wff(&mut rng, &lang, 3))
            .collect();
        let (f1, f2) = factor_structures(&s).unwrap();
        if is_model(&s, &gamma).unwrap() {
            models_seen += 1;
            if !is_model(&f1, &gamma).unwrap() || !is_model(&f2, &gamma).unwrap() {
                println!("  factor of a model is not a model (structure {checked})");
                ok = false;
            }
        }

        // projection compositionality over the depth-3 sentence family
        let family = sentence_family(&lang, s.universe(), 3, 60);
        let p1 = projection(s.algebra(), 1).unwrap();
        let p2 = projection(s.algebra(), 2).unwrap();
        let mut e = Evaluator::new(&s);
        let mut e1 = Evaluator::new(&f1);
        let mut e2 = Evaluator::new(&f2);
        for w in &family {
            let v = e.eval_sentence(w).unwrap();
            if p1.apply_idx(v) != e1.eval_sentence(w).unwrap()
                || p2.apply_idx(v) != e2.eval_sentence(w).unwrap()
            {
                println!("  compositionality fails on {}", print_wff(w));
                ok = false;
            }
        }
    }
    report(
        &format!(
            "factors of {models_seen} models (of 500 product structures) are models; compositionality holds to depth 3"
        ),
        started,
        ok,
    );
}

#[test]
fn criterion_6_main_theorem_equivalence() {
    let started = Instant::now();
    let summary = run_trials(TrialConfig::new(SEED, 1000)).unwrap();
    for f in &summary.failures {
        println!("  trial {} disagreed: {}", f.trial, f.message);
    }
    let ok = summary.all_agree();
    report(
        &format!(
            "{}/{} random trials agree on the two claims ({} produced verified witnesses)",
            summary.agreements, summary.trials, summary.witnesses
        ),
        started,
        ok,
    );
}

#[test]
fn criterion_7_parser_round_trip() {
    let started = Instant::now();
    let lang =
        Language::with_standard_connectives(&[("P", 1), ("Q", 2), ("R", 0)], &[("f", 1), ("c", 0)])
            .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    fn random_term(rng: &mut ChaCha8Rng, depth: usize) -> Term {
        match rng.random_range(0..4) {
            0 => Term::Var(["x", "y", "z"][rng.random_range(0..3)].to_string()),
            1 => Term::constant("c"),
            _ if depth > 0 => Term::App("f".into(), vec![random_term(rng, depth - 1)]),
            _ => Term::constant("c"),
        }
    }
    fn random_formula(rng: &mut ChaCha8Rng, depth: usize) -> Wff {
        if depth == 0 || rng.random_bool(0.3) {
            return match rng.random_range(0..3) {
                0 => Wff::Atom("P".into(), vec![random_term(rng, 2)]),
                1 => Wff::Atom("Q".into(), vec![random_term(rng, 2), random_term(rng, 2)]),
                _ => Wff::Atom("R".into(), vec![]),
            };
        }
        match rng.random_range(0..4) {
            0 => Wff::conn("not", vec![random_formula(rng, depth - 1)]),
            1 => Wff::conn(
                "and",
                vec![
                    random_formula(rng, depth - 1),
                    random_formula(rng, depth - 1),
                ],
            ),
            2 => Wff::conn(
                "or",
                vec![
                    random_formula(rng, depth - 1),
                    random_formula(rng, depth - 1),
                ],
            ),
            _ => Wff::forall(
                ["x", "y", "z"][rng.random_range(0..3)],
                random_formula(rng, depth - 1),
            ),
        }
    }

    let mut ok = true;
    for i in 0..10_000 {
        let w = random_formula(&mut rng, 5);
        let text = print_wff(&w);
        match parse_wff(&lang, &text) {
            Ok(back) if back == w => {}
            other => {
                println!("  round-trip failed at {i}: {text} -> {other:?}");
                ok = false;
                break;
            }
        }
    }
    report(
        "print-parse round-trip holds on 10000 generated formulas",
        started,
        ok,
    );
}

#[test]
fn criterion_8_proof_corpus() {
    let started = Instant::now();
    let system = files::load_system(&data("system.ded")).unwrap();
    let hyps = files::load_formulas(&data("hyps.fml"), &system.language).unwrap();
    let no_hyps = files::load_formulas(&data("empty.fml"), &system.language).unwrap();

    let valid = files::load_proof(&data("valid.prf"), &system.language).unwrap();
    let goal = valid.steps.last().unwrap().0.clone();
    let accepted = check_proof(&system.system, &hyps, &valid, &goal).accepted;

    let axiom = files::load_proof(&data("axiom.prf"), &system.language).unwrap();
    let axiom_goal = axiom.steps.last().unwrap().0.clone();
    let axiom_ok = check_proof(&system.system, &no_hyps, &axiom, &axiom_goal).accepted;

    // one premise index corrupted: documented to reject at step 3
    let bad_index = files::load_proof(&data("bad_index.prf"), &system.language).unwrap();
    let bad_index_goal = bad_index.steps.last().unwrap().0.clone();
    let r1 = check_proof(&system.system, &hyps, &bad_index, &bad_index_goal);

    // one schema misinstantiated: documented to reject at step 1
    let bad_schema = files::load_proof(&data("bad_schema.prf"), &system.language).unwrap();
    let bad_schema_goal = bad_schema.steps.last().unwrap().0.clone();
    let r2 = check_proof(&system.system, &no_hyps, &bad_schema, &bad_schema_goal);

    let ok = accepted
        && axiom_ok
        && !r1.accepted
        && r1.first_failure == Some(2)
        && !r2.accepted
        && r2.first_failure == Some(0);
    report(
        "shipped proofs accept; mutated proofs reject at the documented steps",
        started,
        ok,
    );
}

#[test]
fn criterion_9_mo2_regression() {
    let started = Instant::now();
    let mo2 = mo(2);
    let center_ok = mo2.center() == vec!["0".to_string(), "1".to_string()];
    let boolean_ok = !check_boolean(mo2.algebra()).unwrap();

    let (structure, warnings) =
        files::load_structure(&data("mo2.struct"), StructureOptions::default()).unwrap();
    let wff = parse_wff(structure.extended_language(), "P(c) | ~P(c)").unwrap();
    let value = eval_sentence(&structure, &wff).unwrap();
    let value_ok = structure.algebra().poset().name(value) == "1";

    let ok = center_ok && boolean_ok && value_ok && warnings.is_empty();
    report(
        "MO2: center {0,1}, not Boolean, excluded middle evaluates to 1 under base a",
        started,
        ok,
    );
}
