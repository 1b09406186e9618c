//! Finite semantics families, factor-closure checking and saturation, and
//! constructive verification that a formula holds in every model of a
//! hypothesis set exactly when it holds in every irreducible model.
//!
//! Closure treats every structure whose algebra admits a factorization the
//! same way: recorded products use their projections, other reducible
//! algebras get a canonical factorization (first central element for
//! orthomodular lattices, congruence search otherwise). Without that, a
//! semantics containing a reducible algebra that merely happens not to be
//! pair-structured would falsify the equivalence.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oml::{enumerate_omls, OmlError};
use crate::semantics::{
    eval_wff, factor_structures, factorization_of, holds, is_irreducible_structure, is_model,
    transport, Interpretation, SemanticsError, Structure,
};
use crate::syntax::{Language, SyntaxError, Term, Wff};
use crate::tvalgebra::{find_isomorphism_seeded, TVAlgebra};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("structures do not share a single language")]
    MixedLanguages,
    #[error("semantics is not factor-closed: {0}")]
    NotFactorClosed(String),
    #[error("saturation requires the auto-complete closure mode")]
    ClosureModeDeclared,
    #[error(transparent)]
    Enumeration(#[from] OmlError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Declared,
    AutoComplete,
}

/// A finite family of structures over a common language, standing in for a
/// class of models.
#[derive(Clone, Debug)]
pub struct FiniteSemantics {
    structures: Vec<Structure>,
    pub closure_mode: ClosureMode,
}

impl FiniteSemantics {
    pub fn new(
        structures: Vec<Structure>,
        closure_mode: ClosureMode,
    ) -> Result<Self, HarnessError> {
        if let Some(first) = structures.first() {
            if structures.iter().any(|s| s.language() != first.language()) {
                return Err(HarnessError::MixedLanguages);
            }
        }
        Ok(FiniteSemantics {
            structures,
            closure_mode,
        })
    }

    pub fn structures(&self) -> &[Structure] {
        &self.structures
    }

    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }
}

/// Structural identity for closure checking: equal universe and function
/// tables, and an algebra isomorphism that carries one atomic base to the
/// other.
pub fn structurally_same(a: &Structure, b: &Structure) -> bool {
    if a.language() != b.language()
        || a.interpretation() != b.interpretation()
        || a.algebra().len() != b.algebra().len()
    {
        return false;
    }
    let mut forced: Vec<(usize, usize)> = Vec::new();
    for (pred, table_a) in a.base_tables() {
        let Some(table_b) = b.base_tables().get(pred) else {
            return false;
        };
        if table_a.len() != table_b.len() {
            return false;
        }
        forced.extend(table_a.iter().copied().zip(table_b.iter().copied()));
    }
    forced.sort_unstable();
    forced.dedup();
    // conflicting forced images cannot come from a function
    for w in forced.windows(2) {
        if w[0].0 == w[1].0 {
            return false;
        }
    }
    find_isomorphism_seeded(a.algebra(), b.algebra(), &forced).is_some()
}

/// The canonical pair of factor structures for a structure whose algebra
/// admits a factorization; `None` when the algebra is irreducible.
pub fn canonical_factor_structures(
    s: &Structure,
) -> Result<Option<(Structure, Structure)>, SemanticsError> {
    let Some(iso) = factorization_of(s)? else {
        return Ok(None);
    };
    let product_form = transport(s, &iso)?;
    factor_structures(&product_form).map(Some)
}

#[derive(Clone, Debug)]
pub struct MissingFactor {
    pub structure_index: usize,
    pub side: u8,
}

#[derive(Clone, Debug, Default)]
pub struct ClosureReport {
    pub missing: Vec<MissingFactor>,
}

impl ClosureReport {
    pub fn is_closed(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn describe(&self) -> String {
        self.missing
            .iter()
            .map(|m| format!("factor {} of structure {}", m.side, m.structure_index + 1))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Both factor structures of every factorizable member must be present up to
/// structural identity.
pub fn check_factor_closed(t: &FiniteSemantics) -> Result<ClosureReport, HarnessError> {
    let mut report = ClosureReport::default();
    for (i, s) in t.structures.iter().enumerate() {
        let Some((f1, f2)) = canonical_factor_structures(s)? else {
            continue;
        };
        for (side, f) in [(1u8, &f1), (2u8, &f2)] {
            if !t.structures.iter().any(|u| structurally_same(f, u)) {
                report.missing.push(MissingFactor {
                    structure_index: i,
                    side,
                });
            }
        }
    }
    Ok(report)
}

/// Smallest superset of `t` closed under factor structures; terminates since
/// factor algebras are strictly smaller. Requires auto-complete mode.
pub fn saturate(t: &FiniteSemantics) -> Result<FiniteSemantics, HarnessError> {
    if t.closure_mode != ClosureMode::AutoComplete {
        return Err(HarnessError::ClosureModeDeclared);
    }
    let mut structures = t.structures.clone();
    let mut next = 0;
    while next < structures.len() {
        let current = structures[next].clone();
        next += 1;
        let Some((f1, f2)) = canonical_factor_structures(&current)? else {
            continue;
        };
        for f in [f1, f2] {
            if !structures.iter().any(|u| structurally_same(&f, u)) {
                structures.push(f);
            }
        }
    }
    FiniteSemantics::new(structures, ClosureMode::AutoComplete)
}

/// A failing irreducible model reached by repeatedly factoring a failing
/// reducible model and following a side where the value stays non-top.
#[derive(Clone, Debug)]
pub struct Witness {
    /// index in the semantics of the failing model the descent started from
    pub failing_model: usize,
    /// index in the semantics of the irreducible model that still fails
    pub witness_index: usize,
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub gamma: Vec<Wff>,
    pub psi: Wff,
    pub all_models_satisfy: bool,
    pub all_irreducible_models_satisfy: bool,
    /// indices of the models of gamma in the semantics
    pub models: Vec<usize>,
    /// indices of the irreducible models of gamma
    pub irreducible_models: Vec<usize>,
    pub witness: Option<Witness>,
}

impl MainTheoremReport {
    pub fn claims_agree(&self) -> bool {
        self.all_models_satisfy == self.all_irreducible_models_satisfy
    }
}

/// Indices of the irreducible models of `gamma` in `t`.
pub fn irreducible_models(t: &FiniteSemantics, gamma: &[Wff]) -> Result<Vec<usize>, HarnessError> {
    let mut out = Vec::new();
    for (i, s) in t.structures.iter().enumerate() {
        if is_model(s, gamma)? && is_irreducible_structure(s)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Computes whether `psi` holds in every model of `gamma`, and in every
/// irreducible model, by exhaustive iteration over a factor-closed finite
/// semantics. When a reducible model fails, the failing irreducible witness
/// is constructed by repeated factoring (following a non-top side) and all
/// of its qualities are re-checked independently.
pub fn verify_main_theorem(
    t: &FiniteSemantics,
    gamma: &[Wff],
    psi: &Wff,
) -> Result<MainTheoremReport, HarnessError> {
    let closure = check_factor_closed(t)?;
    if !closure.is_closed() {
        return Err(HarnessError::NotFactorClosed(closure.describe()));
    }

    let mut models = Vec::new();
    let mut irreducible = Vec::new();
    let mut all_models_satisfy = true;
    let mut all_irreducible_satisfy = true;
    let mut first_failing_model = None;
    for (i, s) in t.structures.iter().enumerate() {
        if !is_model(s, gamma)? {
            continue;
        }
        models.push(i);
        let sat = holds(s, psi)?;
        if !sat {
            all_models_satisfy = false;
            first_failing_model.get_or_insert(i);
        }
        if is_irreducible_structure(s)? {
            irreducible.push(i);
            if !sat {
                all_irreducible_satisfy = false;
            }
        }
    }

    // irreducible models are models
    assert!(
        !all_models_satisfy || all_irreducible_satisfy,
        "a formula satisfied by all models must be satisfied by all irreducible models"
    );

    let witness = match first_failing_model {
        None => None,
        Some(start) => {
            let witness_index = descend_to_irreducible_failure(t, start, psi)?;
            let w = &t.structures[witness_index];
            assert!(
                is_model(w, gamma)?,
                "witness must be a model of the hypotheses"
            );
            assert!(is_irreducible_structure(w)?, "witness must be irreducible");
            assert!(!holds(w, psi)?, "witness must fail the formula");
            Some(Witness {
                failing_model: start,
                witness_index,
            })
        }
    };

    Ok(MainTheoremReport {
        gamma: gamma.to_vec(),
        psi: psi.clone(),
        all_models_satisfy,
        all_irreducible_models_satisfy: all_irreducible_satisfy,
        models,
        irreducible_models: irreducible,
        witness,
    })
}

/// From a failing model, repeatedly factor and follow a side whose value is
/// non-top, staying on semantics members via structural identity, until the
/// current member is irreducible.
fn descend_to_irreducible_failure(
    t: &FiniteSemantics,
    start: usize,
    psi: &Wff,
) -> Result<usize, HarnessError> {
    let mut at = start;
    loop {
        let s = &t.structures[at];
        if is_irreducible_structure(s)? {
            return Ok(at);
        }
        let (f1, f2) =
            canonical_factor_structures(s)?.expect("a reducible algebra admits a factorization");
        let v1 = eval_wff(&f1, psi)?;
        let side = if v1 != f1.algebra().top_idx() { f1 } else { f2 };
        assert_ne!(
            eval_wff(&side, psi)?,
            side.algebra().top_idx(),
            "some factor of a failing model must fail the formula"
        );
        let located = t
            .structures
            .iter()
            .position(|u| structurally_same(&side, u))
            .expect("factor closure guarantees the projected structure is present");
        assert!(
            t.structures[located].algebra().len() < s.algebra().len(),
            "factors are strictly smaller"
        );
        at = located;
    }
}

/// Structures in `t` that model the hypotheses but fail the goal; evidence
/// that a deduction system accepting such a proof is unsound for `t`.
pub fn soundness_counterexamples(
    t: &FiniteSemantics,
    hypotheses: &[Wff],
    goal: &Wff,
) -> Result<Vec<usize>, HarnessError> {
    let mut out = Vec::new();
    for (i, s) in t.structures.iter().enumerate() {
        if is_model(s, hypotheses)? && !holds(s, goal)? {
            out.push(i);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// randomized trials
// ---------------------------------------------------------------------------

/// Seeded random-trial configuration; the defaults define the desk-scale
/// regime: universes of size 1-3, algebras from the enumeration up to size 8
/// and their pairwise products, one or two predicates of arity <= 2, and
/// hypothesis sets of at most two depth-<= 3 formulas.
#[derive(Clone, Copy, Debug)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_universe: usize,
    pub max_algebra_size: usize,
    pub max_depth: usize,
    pub max_gamma: usize,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: usize) -> TrialConfig {
        TrialConfig {
            seed,
            trials,
            max_universe: 3,
            max_algebra_size: 8,
            max_depth: 3,
            max_gamma: 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TrialFailure {
    pub trial: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct TrialSummary {
    pub trials: usize,
    pub agreements: usize,
    /// trials in which a failing irreducible witness was produced
    pub witnesses: usize,
    pub failures: Vec<TrialFailure>,
}

impl TrialSummary {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.trials && self.failures.is_empty()
    }
}

/// The enumerated orthomodular lattices up to `max_size` plus all pairwise
/// products (the products keep their pair structure).
pub fn trial_algebra_pool(max_size: usize) -> Result<Vec<TVAlgebra>, OmlError> {
    let views = enumerate_omls(max_size)?;
    let mut pool: Vec<TVAlgebra> = views.iter().map(|v| v.algebra().clone()).collect();
    for i in 0..views.len() {
        for j in i..views.len() {
            pool.push(
                TVAlgebra::product(views[i].algebra(), views[j].algebra()).expect("same type"),
            );
        }
    }
    Ok(pool)
}

/// A random open or closed formula of bounded depth over the language's
/// predicates, with variables `x` and `y` as the only terms.
pub fn random_wff(rng: &mut ChaCha8Rng, lang: &Language, depth: usize) -> Wff {
    let preds: Vec<(&String, &usize)> = lang.predicates().iter().collect();
    let atom = |rng: &mut ChaCha8Rng| {
        let (p, &arity) = preds[rng.random_range(0..preds.len())];
        let args = (0..arity)
            .map(|_| Term::Var(if rng.random_bool(0.5) { "x" } else { "y" }.to_string()))
            .collect();
        Wff::Atom(p.clone(), args)
    };
    if depth == 0 || rng.random_bool(0.25) {
        return atom(rng);
    }
    match rng.random_range(0..4) {
        0 => Wff::conn("not", vec![random_wff(rng, lang, depth - 1)]),
        1 => Wff::conn(
            "and",
            vec![
                random_wff(rng, lang, depth - 1),
                random_wff(rng, lang, depth - 1),
            ],
        ),
        2 => Wff::conn(
            "or",
            vec![
                random_wff(rng, lang, depth - 1),
                random_wff(rng, lang, depth - 1),
            ],
        ),
        _ => {
            let v = if rng.random_bool(0.5) { "x" } else { "y" };
            Wff::forall(v, random_wff(rng, lang, depth - 1))
        }
    }
}

/// A random structure over the algebra with a fresh universe, retrying the
/// atomic base until the induced valuation is surjective.
pub fn random_structure(
    rng: &mut ChaCha8Rng,
    lang: &Language,
    algebra: &TVAlgebra,
    universe_size: usize,
) -> Option<Structure> {
    let universe: Vec<String> = (1..=universe_size).map(|i| format!("m{i}")).collect();
    let refs: Vec<&str> = universe.iter().map(|s| s.as_str()).collect();
    let interp = Interpretation::new(lang, &refs, &BTreeMap::new()).ok()?;
    let n = algebra.len();
    for _ in 0..40 {
        let mut entries = BTreeMap::new();
        for (p, &arity) in lang.predicates() {
            let mut rows = Vec::new();
            for combo in crate::tvalgebra::tuples(universe_size, arity) {
                let args: Vec<String> = combo.iter().map(|&i| universe[i].clone()).collect();
                let value = algebra.poset().name(rng.random_range(0..n)).to_string();
                rows.push((args, value));
            }
            entries.insert(p.clone(), rows);
        }
        match Structure::new(lang.clone(), interp.clone(), algebra.clone(), &entries) {
            Ok(s) => return Some(s),
            Err(SemanticsError::NonSurjective { .. }) => continue,
            Err(_) => return None,
        }
    }
    None
}

fn random_language(rng: &mut ChaCha8Rng) -> Language {
    let preds: Vec<(&str, usize)> = if rng.random_bool(0.5) {
        vec![("P", 1), ("Q", 2)]
    } else {
        vec![("P", 1)]
    };
    Language::with_standard_connectives(&preds, &[]).expect("fixed signature")
}

/// Runs seeded random trials of the main equivalence over saturated finite
/// semantics. Any disagreement or failed witness re-check is a defect and is
/// reported in the summary.
pub fn run_trials(cfg: TrialConfig) -> Result<TrialSummary, HarnessError> {
    let pool = trial_algebra_pool(cfg.max_algebra_size)?;
    let two = crate::tvalgebra::boolean_2();
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summary = TrialSummary {
        trials: cfg.trials,
        agreements: 0,
        witnesses: 0,
        failures: Vec::new(),
    };

    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(master.random());
        let lang = random_language(&mut rng);
        let count = rng.random_range(1..=2);
        let mut structures = Vec::new();
        for _ in 0..count {
            let algebra = &pool[rng.random_range(0..pool.len())];
            let universe_size = rng.random_range(1..=cfg.max_universe);
            let s = random_structure(&mut rng, &lang, algebra, universe_size)
                .or_else(|| random_structure(&mut rng, &lang, &two, universe_size))
                .expect("the two-element fallback always yields a structure");
            structures.push(s);
        }
        let base = FiniteSemantics::new(structures, ClosureMode::AutoComplete)?;
        let t = saturate(&base)?;

        let gamma: Vec<Wff> = (0..rng.random_range(0..=cfg.max_gamma))
            .map(|_| random_wff(&mut rng, &lang, cfg.max_depth))
            .collect();
        let psi = random_wff(&mut rng, &lang, cfg.max_depth);

        let report = verify_main_theorem(&t, &gamma, &psi)?;
        if report.claims_agree() {
            summary.agreements += 1;
        } else {
            summary.failures.push(TrialFailure {
                trial,
                message: format!(
                    "all-models {} but all-irreducible {}",
                    report.all_models_satisfy, report.all_irreducible_models_satisfy
                ),
            });
        }
        if report.witness.is_some() {
            summary.witnesses += 1;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oml::{boolean_2, mo};
    use crate::syntax::parse_wff;

    fn std_lang() -> Language {
        Language::with_standard_connectives(&[("P", 1)], &[]).unwrap()
    }

    fn structure_over(algebra: TVAlgebra, values: &[&str]) -> Structure {
        let lang = std_lang();
        let universe: Vec<String> = (1..=values.len()).map(|i| format!("m{i}")).collect();
        let refs: Vec<&str> = universe.iter().map(|s| s.as_str()).collect();
        let interp = Interpretation::new(&lang, &refs, &BTreeMap::new()).unwrap();
        let rows: Vec<(Vec<String>, String)> = values
            .iter()
            .enumerate()
            .map(|(i, v)| (vec![universe[i].clone()], v.to_string()))
            .collect();
        let base = BTreeMap::from([("P".to_string(), rows)]);
        Structure::new(lang, interp, algebra, &base).unwrap()
    }

    fn mo2_times_two() -> TVAlgebra {
        TVAlgebra::product(mo(2).algebra(), boolean_2().algebra()).unwrap()
    }

    #[test]
    fn closure_detects_missing_factors() {
        let prod = structure_over(mo2_times_two(), &["(a|1)", "(b|0)"]);
        let (f1, f2) = canonical_factor_structures(&prod).unwrap().unwrap();
        let closed = FiniteSemantics::new(
            vec![prod.clone(), f1.clone(), f2.clone()],
            ClosureMode::Declared,
        )
        .unwrap();
        assert!(check_factor_closed(&closed).unwrap().is_closed());

        let open = FiniteSemantics::new(vec![prod, f1], ClosureMode::Declared).unwrap();
        let report = check_factor_closed(&open).unwrap();
        assert!(!report.is_closed());
        assert_eq!(report.missing.len(), 1);
        assert_eq!(report.missing[0].side, 2);
    }

    #[test]
    fn irreducible_only_semantics_is_vacuously_closed() {
        let s1 = structure_over(mo(2).into_algebra(), &["a", "b"]);
        let s2 = structure_over(boolean_2().into_algebra(), &["0", "1"]);
        let t = FiniteSemantics::new(vec![s1, s2], ClosureMode::Declared).unwrap();
        assert!(check_factor_closed(&t).unwrap().is_closed());
    }

    #[test]
    fn saturate_adds_factor_levels_and_is_idempotent() {
        let two = boolean_2().into_algebra();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let eight = TVAlgebra::product(&four, &two).unwrap();
        // the three atoms generate the whole cube
        let s = structure_over(eight, &["((1|0)|0)", "((0|1)|0)", "((0|0)|1)"]);
        let t = FiniteSemantics::new(vec![s], ClosureMode::AutoComplete).unwrap();
        let saturated = saturate(&t).unwrap();
        assert!(check_factor_closed(&saturated).unwrap().is_closed());
        assert!(saturated.len() > 1);

        let again = saturate(&saturated).unwrap();
        assert_eq!(again.len(), saturated.len());

        // monotone: every original member is still present
        for s in t.structures() {
            assert!(saturated
                .structures()
                .iter()
                .any(|u| structurally_same(s, u)));
        }

        let declared = FiniteSemantics::new(vec![], ClosureMode::Declared).unwrap();
        assert_eq!(
            saturate(&declared).unwrap_err(),
            HarnessError::ClosureModeDeclared
        );
    }

    #[test]
    fn saturation_factors_reducible_non_product_algebras() {
        // an enumerated four-element Boolean algebra has no recorded pair
        // structure but is reducible; saturation must still add its factors
        let enumerated = crate::oml::enumerate_omls(4).unwrap();
        let four = enumerated.last().unwrap().algebra().clone();
        assert!(four.product_factors().is_none());
        let s = structure_over(four, &["a", "a'"]);
        let t = FiniteSemantics::new(vec![s], ClosureMode::AutoComplete).unwrap();
        assert!(!check_factor_closed(&t).unwrap().is_closed());
        let saturated = saturate(&t).unwrap();
        assert!(check_factor_closed(&saturated).unwrap().is_closed());
        assert_eq!(saturated.len(), 3);
    }

    #[test]
    fn tautology_verifies_with_both_claims_true() {
        let s = structure_over(boolean_2().into_algebra(), &["0", "1"]);
        let t = FiniteSemantics::new(vec![s], ClosureMode::Declared).unwrap();
        let lang = std_lang();
        let psi = parse_wff(&lang, "P(x) | ~P(x)").unwrap();
        let report = verify_main_theorem(&t, &[], &psi).unwrap();
        assert!(report.all_models_satisfy);
        assert!(report.all_irreducible_models_satisfy);
        assert!(report.claims_agree());
        assert!(report.witness.is_none());
    }

    #[test]
    fn witness_descends_to_the_failing_irreducible_factor() {
        // universe {m1}: P(m1) = (a|1) fails; the MO2 factor fails with a
        let lang = std_lang();
        let interp = Interpretation::new(&lang, &["m1"], &BTreeMap::new()).unwrap();
        let base = BTreeMap::from([(
            "P".to_string(),
            vec![(vec!["m1".to_string()], "(a|1)".to_string())],
        )]);
        // a one-point universe cannot reach the whole product carrier, so
        // allow the nonsurjective structure for this focused scenario
        let (prod, _) = Structure::new_with_options(
            lang.clone(),
            interp,
            mo2_times_two(),
            &base,
            crate::semantics::StructureOptions {
                allow_nonsurjective: true,
            },
        )
        .unwrap();
        let (f1, f2) = canonical_factor_structures(&prod).unwrap().unwrap();
        let t = FiniteSemantics::new(vec![prod, f1, f2], ClosureMode::Declared).unwrap();
        // psi mentions a universe constant, so parse it in the extension
        let psi = parse_wff(t.structures()[0].extended_language(), "P(m1)").unwrap();
        let report = verify_main_theorem(&t, &[], &psi).unwrap();
        assert!(!report.all_models_satisfy);
        assert!(!report.all_irreducible_models_satisfy);
        assert!(report.claims_agree());
        let witness = report.witness.unwrap();
        assert_eq!(witness.failing_model, 0);
        // the witness is the MO2 factor, where the value is a != 1
        assert_eq!(witness.witness_index, 1);
        let w = &t.structures()[witness.witness_index];
        assert_eq!(w.algebra().len(), 6);
    }

    #[test]
    fn verify_requires_closure() {
        let s = structure_over(mo2_times_two(), &["(a|1)", "(b|0)"]);
        let t = FiniteSemantics::new(vec![s], ClosureMode::Declared).unwrap();
        let lang = std_lang();
        let psi = parse_wff(&lang, "P(x)").unwrap();
        assert!(matches!(
            verify_main_theorem(&t, &[], &psi),
            Err(HarnessError::NotFactorClosed(_))
        ));
    }

    #[test]
    fn irreducible_model_filter() {
        let s1 = structure_over(mo(2).into_algebra(), &["a", "b"]);
        let s2 = structure_over(boolean_2().into_algebra(), &["0", "1"]);
        let prod = structure_over(mo2_times_two(), &["(a|1)", "(b|0)"]);
        let t = FiniteSemantics::new(vec![s1, s2, prod], ClosureMode::Declared).unwrap();

        let all = irreducible_models(&t, &[]).unwrap();
        assert_eq!(all, vec![0, 1]);

        let lang = std_lang();
        let unsatisfiable = parse_wff(&lang, "P(x) & ~P(x)").unwrap();
        assert!(irreducible_models(&t, &[unsatisfiable]).unwrap().is_empty());
    }

    #[test]
    fn inclusion_of_irreducible_models_in_models() {
        let pool = trial_algebra_pool(6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let lang = random_language(&mut rng);
        for _ in 0..10 {
            let algebra = &pool[rng.random_range(0..pool.len())];
            let Some(s) = random_structure(&mut rng, &lang, algebra, 2) else {
                continue;
            };
            let t = FiniteSemantics::new(vec![s], ClosureMode::AutoComplete).unwrap();
            let t = saturate(&t).unwrap();
            let gamma = vec![random_wff(&mut rng, &lang, 2)];
            let models: Vec<usize> = (0..t.len())
                .filter(|&i| is_model(&t.structures()[i], &gamma).unwrap())
                .collect();
            let irr = irreducible_models(&t, &gamma).unwrap();
            assert!(irr.iter().all(|i| models.contains(i)));
        }
    }

    #[test]
    fn soundness_counterexample_detection() {
        let s = structure_over(boolean_2().into_algebra(), &["0", "1"]);
        let t = FiniteSemantics::new(vec![s], ClosureMode::Declared).unwrap();
        let lang = std_lang();
        let goal = parse_wff(&lang, "forall x. P(x)").unwrap();
        assert_eq!(soundness_counterexamples(&t, &[], &goal).unwrap(), vec![0]);
        let taut = parse_wff(&lang, "P(x) | ~P(x)").unwrap();
        assert!(soundness_counterexamples(&t, &[], &taut)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn small_seeded_trial_run_agrees() {
        let summary = run_trials(TrialConfig::new(7, 25)).unwrap();
        assert_eq!(summary.trials, 25);
        assert!(summary.all_agree(), "{:?}", summary.failures);
    }

    #[test]
    fn trials_are_reproducible() {
        let a = run_trials(TrialConfig::new(42, 8)).unwrap();
        let b = run_trials(TrialConfig::new(42, 8)).unwrap();
        assert_eq!(a.agreements, b.agreements);
        assert_eq!(a.witnesses, b.witnesses);
    }
}
