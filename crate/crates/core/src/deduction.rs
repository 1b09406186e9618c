//! Formal deduction systems: axiom schemata and inference rules with wff-
//! and term-metavariables, first-order syntactic pattern matching (bound
//! variables up to renaming), and proof checking.
//!
//! A proof step is admitted when it is a hypothesis, an instance of an axiom
//! schema, or the conclusion of a rule whose instantiated premises all occur
//! among strictly earlier steps. Rejection is a report, not an error.

use std::collections::{BTreeMap, BTreeSet};

use crate::syntax::{alpha_eq, Term, Wff};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DeductionError {
    #[error("rule `{rule}`: conclusion metavariable `{meta}` does not appear in any premise")]
    ConclusionMetaNotInPremises { rule: String, meta: String },
    #[error("duplicate axiom or rule id `{0}`")]
    DuplicateId(String),
}

/// A term pattern: a term metavariable, a concrete variable, or an
/// application of concrete function symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermPattern {
    Meta(String),
    Var(String),
    App(String, Vec<TermPattern>),
}

/// A formula pattern over wff-metavariables and term-metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Meta(String),
    Atom(String, Vec<TermPattern>),
    Conn(String, Vec<Pattern>),
    Forall(String, Box<Pattern>),
}

impl Pattern {
    pub fn meta(name: &str) -> Pattern {
        Pattern::Meta(name.to_string())
    }

    pub fn conn(name: &str, args: Vec<Pattern>) -> Pattern {
        Pattern::Conn(name.to_string(), args)
    }

    /// All wff- and term-metavariable names in the pattern.
    pub fn metavariables(&self) -> BTreeSet<String> {
        fn term(t: &TermPattern, out: &mut BTreeSet<String>) {
            match t {
                TermPattern::Meta(m) => {
                    out.insert(m.clone());
                }
                TermPattern::Var(_) => {}
                TermPattern::App(_, args) => args.iter().for_each(|a| term(a, out)),
            }
        }
        fn go(p: &Pattern, out: &mut BTreeSet<String>) {
            match p {
                Pattern::Meta(m) => {
                    out.insert(m.clone());
                }
                Pattern::Atom(_, args) => args.iter().for_each(|t| term(t, out)),
                Pattern::Conn(_, args) => args.iter().for_each(|p| go(p, out)),
                Pattern::Forall(_, body) => go(body, out),
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut out);
        out
    }

    /// Lifts a concrete formula into a (metavariable-free) pattern.
    pub fn literal(w: &Wff) -> Pattern {
        fn term(t: &Term) -> TermPattern {
            match t {
                Term::Var(v) => TermPattern::Var(v.clone()),
                Term::App(f, args) => TermPattern::App(f.clone(), args.iter().map(term).collect()),
            }
        }
        match w {
            Wff::Atom(p, args) => Pattern::Atom(p.clone(), args.iter().map(term).collect()),
            Wff::Conn(c, args) => {
                Pattern::Conn(c.clone(), args.iter().map(Pattern::literal).collect())
            }
            Wff::Forall(v, body) => Pattern::Forall(v.clone(), Box::new(Pattern::literal(body))),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.metavariables().is_empty()
    }
}

/// A metavariable assignment produced by matching.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instantiation {
    pub wffs: BTreeMap<String, Wff>,
    pub terms: BTreeMap<String, Term>,
}

/// First-order syntactic matching of a pattern against a formula: no
/// unification between metavariables, repeated metavariables must bind
/// alpha-equal subformulas, and quantified patterns match quantified targets
/// up to renaming of the bound variable.
pub fn match_pattern(pattern: &Pattern, target: &Wff) -> Option<Instantiation> {
    let mut inst = Instantiation::default();
    let mut binders = Vec::new();
    if match_wff(pattern, target, &mut binders, &mut inst) {
        Some(inst)
    } else {
        None
    }
}

/// As [`match_pattern`], but extending an existing assignment.
pub fn match_pattern_with(
    pattern: &Pattern,
    target: &Wff,
    inst: &Instantiation,
) -> Option<Instantiation> {
    let mut inst = inst.clone();
    let mut binders = Vec::new();
    if match_wff(pattern, target, &mut binders, &mut inst) {
        Some(inst)
    } else {
        None
    }
}

fn match_wff(
    pattern: &Pattern,
    target: &Wff,
    binders: &mut Vec<(String, String)>,
    inst: &mut Instantiation,
) -> bool {
    match (pattern, target) {
        (Pattern::Meta(m), w) => match inst.wffs.get(m) {
            Some(prev) => alpha_eq(prev, w),
            None => {
                inst.wffs.insert(m.clone(), w.clone());
                true
            }
        },
        (Pattern::Atom(p, pargs), Wff::Atom(q, targs)) => {
            p == q
                && pargs.len() == targs.len()
                && pargs
                    .iter()
                    .zip(targs)
                    .all(|(pa, ta)| match_term(pa, ta, binders, inst))
        }
        (Pattern::Conn(c, pargs), Wff::Conn(d, targs)) => {
            c == d
                && pargs.len() == targs.len()
                && pargs
                    .iter()
                    .zip(targs)
                    .all(|(pa, ta)| match_wff(pa, ta, binders, inst))
        }
        (Pattern::Forall(pv, pbody), Wff::Forall(tv, tbody)) => {
            binders.push((pv.clone(), tv.clone()));
            let ok = match_wff(pbody, tbody, binders, inst);
            binders.pop();
            ok
        }
        _ => false,
    }
}

fn match_term(
    pattern: &TermPattern,
    target: &Term,
    binders: &[(String, String)],
    inst: &mut Instantiation,
) -> bool {
    match (pattern, target) {
        (TermPattern::Meta(m), t) => match inst.terms.get(m) {
            Some(prev) => prev == t,
            None => {
                inst.terms.insert(m.clone(), t.clone());
                true
            }
        },
        (TermPattern::Var(x), Term::Var(y)) => {
            // innermost binder correspondence wins; free variables match by name
            for (l, r) in binders.iter().rev() {
                if l == x || r == y {
                    return l == x && r == y;
                }
            }
            x == y
        }
        (TermPattern::App(f, pargs), Term::App(g, targs)) => {
            f == g
                && pargs.len() == targs.len()
                && pargs
                    .iter()
                    .zip(targs)
                    .all(|(pa, ta)| match_term(pa, ta, binders, inst))
        }
        _ => false,
    }
}

/// An inference rule: premise patterns and a conclusion pattern. Unless the
/// premise set is empty (an axiom-schema-shaped rule), every conclusion
/// metavariable must occur in some premise, so matching the premises
/// determines the conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub premises: Vec<Pattern>,
    pub conclusion: Pattern,
}

/// A Hilbert-style deduction system: named axiom schemata plus rules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeductionSystem {
    axioms: Vec<(String, Pattern)>,
    rules: Vec<Rule>,
}

impl DeductionSystem {
    pub fn new(axioms: Vec<(String, Pattern)>, rules: Vec<Rule>) -> Result<Self, DeductionError> {
        let mut ids = BTreeSet::new();
        for (name, _) in &axioms {
            if !ids.insert(name.clone()) {
                return Err(DeductionError::DuplicateId(name.clone()));
            }
        }
        for rule in &rules {
            if !ids.insert(rule.name.clone()) {
                return Err(DeductionError::DuplicateId(rule.name.clone()));
            }
            if !rule.premises.is_empty() {
                let premise_metas: BTreeSet<String> = rule
                    .premises
                    .iter()
                    .flat_map(|p| p.metavariables())
                    .collect();
                for meta in rule.conclusion.metavariables() {
                    if !premise_metas.contains(&meta) {
                        return Err(DeductionError::ConclusionMetaNotInPremises {
                            rule: rule.name.clone(),
                            meta,
                        });
                    }
                }
            }
        }
        Ok(DeductionSystem { axioms, rules })
    }

    pub fn axioms(&self) -> &[(String, Pattern)] {
        &self.axioms
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn axiom(&self, name: &str) -> Option<&Pattern> {
        self.axioms.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.name == name)
    }
}

/// Why a proof step claims admission. A declared instantiation, when given,
/// is verified exactly; otherwise one is inferred by matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Hypothesis,
    Axiom {
        schema: String,
        instantiation: Option<Instantiation>,
    },
    Rule {
        rule: String,
        premises: Vec<usize>,
        instantiation: Option<Instantiation>,
    },
}

/// An ordered list of (formula, justification) steps; premise indices are
/// zero-based and must point strictly backwards.
#[derive(Clone, Debug, Default)]
pub struct Proof {
    pub steps: Vec<(Wff, Justification)>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Clause (ii) read literally: cited rules must be metavariable-free.
    pub literal_rules: bool,
}

#[derive(Clone, Debug)]
pub struct StepResult {
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub accepted: bool,
    pub steps: Vec<StepResult>,
    /// Zero-based index of the first failing step, if any.
    pub first_failure: Option<usize>,
    pub goal_reached: bool,
}

impl CheckReport {
    fn reject(mut self, at: usize, detail: String) -> CheckReport {
        self.steps[at] = StepResult { ok: false, detail };
        self.accepted = false;
        self.first_failure = Some(self.first_failure.map_or(at, |f| f.min(at)));
        self
    }
}

/// Checks a proof of `goal` from `hypotheses` in the system `d`; see
/// [`check_proof_with`] for options.
pub fn check_proof(
    d: &DeductionSystem,
    hypotheses: &[Wff],
    proof: &Proof,
    goal: &Wff,
) -> CheckReport {
    check_proof_with(d, hypotheses, proof, goal, CheckOptions::default())
}

pub fn check_proof_with(
    d: &DeductionSystem,
    hypotheses: &[Wff],
    proof: &Proof,
    goal: &Wff,
    options: CheckOptions,
) -> CheckReport {
    let mut report = CheckReport {
        accepted: true,
        steps: proof
            .steps
            .iter()
            .map(|_| StepResult {
                ok: true,
                detail: String::new(),
            })
            .collect(),
        first_failure: None,
        goal_reached: false,
    };

    for (i, (wff, just)) in proof.steps.iter().enumerate() {
        match just {
            Justification::Hypothesis => {
                if !hypotheses.contains(wff) {
                    return report.reject(i, "formula is not among the hypotheses".into());
                }
                report.steps[i].detail = "hypothesis".into();
            }
            Justification::Axiom {
                schema,
                instantiation,
            } => {
                let Some(pattern) = d.axiom(schema) else {
                    return report.reject(i, format!("unknown axiom schema `{schema}`"));
                };
                let found = match_pattern(pattern, wff);
                match (found, instantiation) {
                    (None, _) => {
                        return report.reject(
                            i,
                            format!("formula is not an instance of axiom schema `{schema}`"),
                        )
                    }
                    (Some(inferred), Some(declared)) if &inferred != declared => {
                        return report.reject(
                            i,
                            format!("declared instantiation of `{schema}` does not match"),
                        )
                    }
                    (Some(inferred), _) => {
                        report.steps[i].detail = format!("axiom {schema} {}", show_inst(&inferred));
                    }
                }
            }
            Justification::Rule {
                rule,
                premises,
                instantiation,
            } => {
                let Some(r) = d.rule(rule) else {
                    return report.reject(i, format!("unknown rule `{rule}`"));
                };
                if options.literal_rules && !r.premises.iter().all(Pattern::is_ground) {
                    return report.reject(
                        i,
                        format!("rule `{rule}` is schematic but literal-rule checking is on"),
                    );
                }
                if let Some(&bad) = premises.iter().find(|&&p| p >= i) {
                    return report.reject(
                        i,
                        format!("premise step {} does not precede this step", bad + 1),
                    );
                }
                if premises.len() != r.premises.len() {
                    return report.reject(
                        i,
                        format!(
                            "rule `{rule}` has {} premise(s), {} cited",
                            r.premises.len(),
                            premises.len()
                        ),
                    );
                }
                let cited: Vec<&Wff> = premises.iter().map(|&p| &proof.steps[p].0).collect();
                let Some(inferred) = match_rule(r, &cited, wff) else {
                    return report.reject(
                        i,
                        format!("cited steps do not instantiate rule `{rule}` to this formula"),
                    );
                };
                if let Some(declared) = instantiation {
                    if &inferred != declared {
                        return report.reject(
                            i,
                            format!("declared instantiation of `{rule}` does not match"),
                        );
                    }
                }
                report.steps[i].detail = format!("rule {rule} {}", show_inst(&inferred));
            }
        }
    }

    match proof.steps.last() {
        Some((last, _)) if last == goal => report.goal_reached = true,
        _ => {
            report.accepted = false;
            report.goal_reached = false;
        }
    }
    report
}

/// Tries premise-to-cited-step assignments (in order first, then the other
/// permutations) and requires the conclusion to match under the accumulated
/// bindings.
fn match_rule(rule: &Rule, cited: &[&Wff], conclusion: &Wff) -> Option<Instantiation> {
    fn assign(
        premises: &[Pattern],
        cited: &[&Wff],
        used: &mut Vec<bool>,
        inst: Instantiation,
        at: usize,
        conclusion_pattern: &Pattern,
        conclusion: &Wff,
    ) -> Option<Instantiation> {
        if at == premises.len() {
            return match_pattern_with(conclusion_pattern, conclusion, &inst);
        }
        // prefer the aligned assignment so reports stay predictable
        let order: Vec<usize> = std::iter::once(at)
            .chain((0..cited.len()).filter(|&j| j != at))
            .collect();
        for j in order {
            if used[j] {
                continue;
            }
            if let Some(next) = match_pattern_with(&premises[at], cited[j], &inst) {
                used[j] = true;
                if let Some(done) = assign(
                    premises,
                    cited,
                    used,
                    next,
                    at + 1,
                    conclusion_pattern,
                    conclusion,
                ) {
                    return Some(done);
                }
                used[j] = false;
            }
        }
        None
    }
    let mut used = vec![false; cited.len()];
    assign(
        &rule.premises,
        cited,
        &mut used,
        Instantiation::default(),
        0,
        &rule.conclusion,
        conclusion,
    )
}

fn show_inst(inst: &Instantiation) -> String {
    if inst.wffs.is_empty() && inst.terms.is_empty() {
        return "(literal)".into();
    }
    let mut parts: Vec<String> = inst
        .wffs
        .iter()
        .map(|(m, w)| format!("{m} := {}", crate::syntax::print_wff(w)))
        .collect();
    parts.extend(
        inst.terms
            .iter()
            .map(|(m, t)| format!("{m} := {}", crate::syntax::print_term(t))),
    );
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_wff, Language};

    fn lang() -> Language {
        Language::with_standard_connectives(&[("p", 0), ("q", 0), ("P", 1)], &[("c", 0)]).unwrap()
    }

    fn wff(text: &str) -> Wff {
        parse_wff(&lang(), text).unwrap()
    }

    /// excluded middle schema plus disjunctive syllogism
    fn system() -> DeductionSystem {
        let em = (
            "em".to_string(),
            Pattern::conn(
                "or",
                vec![
                    Pattern::meta("phi"),
                    Pattern::conn("not", vec![Pattern::meta("phi")]),
                ],
            ),
        );
        let dsyll = Rule {
            name: "dsyll".into(),
            premises: vec![
                Pattern::meta("phi"),
                Pattern::conn(
                    "or",
                    vec![
                        Pattern::conn("not", vec![Pattern::meta("phi")]),
                        Pattern::meta("psi"),
                    ],
                ),
            ],
            conclusion: Pattern::meta("psi"),
        };
        DeductionSystem::new(vec![em], vec![dsyll]).unwrap()
    }

    #[test]
    fn pattern_matching_binds_and_rejects() {
        let pat = Pattern::conn("and", vec![Pattern::meta("phi"), Pattern::meta("psi")]);
        let inst = match_pattern(&pat, &wff("p & q")).unwrap();
        assert_eq!(inst.wffs["phi"], wff("p"));
        assert_eq!(inst.wffs["psi"], wff("q"));

        let pat = Pattern::conn("and", vec![Pattern::meta("phi"), Pattern::meta("phi")]);
        assert!(match_pattern(&pat, &wff("p & q")).is_none());
        assert!(match_pattern(&pat, &wff("p & p")).is_some());
    }

    #[test]
    fn quantified_patterns_match_up_to_renaming() {
        let pat = Pattern::Forall("x".into(), Box::new(Pattern::meta("phi")));
        let inst = match_pattern(&pat, &wff("forall y. P(y)")).unwrap();
        assert_eq!(inst.wffs["phi"], wff("P(y)"));

        // a concrete quantified pattern matches across bound-variable names
        let pat = Pattern::Forall(
            "x".into(),
            Box::new(Pattern::Atom(
                "P".into(),
                vec![TermPattern::Var("x".into())],
            )),
        );
        assert!(match_pattern(&pat, &wff("forall y. P(y)")).is_some());
        assert!(match_pattern(&pat, &wff("forall y. P(c)")).is_none());
    }

    #[test]
    fn term_metavariables_bind_terms() {
        let pat = Pattern::Atom("P".into(), vec![TermPattern::Meta("t".into())]);
        let inst = match_pattern(&pat, &wff("P(c)")).unwrap();
        assert_eq!(inst.terms["t"], crate::syntax::Term::constant("c"));
    }

    #[test]
    fn repeated_metavariables_use_alpha_equality() {
        let pat = Pattern::conn("and", vec![Pattern::meta("phi"), Pattern::meta("phi")]);
        let target = Wff::conn("and", vec![wff("forall x. P(x)"), wff("forall y. P(y)")]);
        assert!(match_pattern(&pat, &target).is_some());
    }

    #[test]
    fn conclusion_metas_must_come_from_premises() {
        let bad = Rule {
            name: "anything".into(),
            premises: vec![Pattern::meta("phi")],
            conclusion: Pattern::meta("psi"),
        };
        assert_eq!(
            DeductionSystem::new(vec![], vec![bad]).unwrap_err(),
            DeductionError::ConclusionMetaNotInPremises {
                rule: "anything".into(),
                meta: "psi".into()
            }
        );
        // empty-premise rules are axiom schemata and exempt
        let schema_rule = Rule {
            name: "em_rule".into(),
            premises: vec![],
            conclusion: Pattern::conn(
                "or",
                vec![
                    Pattern::meta("phi"),
                    Pattern::conn("not", vec![Pattern::meta("phi")]),
                ],
            ),
        };
        assert!(DeductionSystem::new(vec![], vec![schema_rule]).is_ok());
    }

    #[test]
    fn one_step_hypothesis_proof_accepts() {
        let d = system();
        let goal = wff("p");
        let proof = Proof {
            steps: vec![(goal.clone(), Justification::Hypothesis)],
        };
        let report = check_proof(&d, std::slice::from_ref(&goal), &proof, &goal);
        assert!(report.accepted, "{report:?}");
    }

    #[test]
    fn rule_application_accepts() {
        let d = system();
        let hyps = vec![wff("p"), wff("~p | q")];
        let proof = Proof {
            steps: vec![
                (wff("p"), Justification::Hypothesis),
                (wff("~p | q"), Justification::Hypothesis),
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "dsyll".into(),
                        premises: vec![0, 1],
                        instantiation: None,
                    },
                ),
            ],
        };
        let report = check_proof(&d, &hyps, &proof, &wff("q"));
        assert!(report.accepted, "{report:?}");
        assert!(report.steps[2].detail.contains("dsyll"));
    }

    #[test]
    fn axiom_instance_accepts_and_misinstance_rejects() {
        let d = system();
        let good = Proof {
            steps: vec![(
                wff("P(c) | ~P(c)"),
                Justification::Axiom {
                    schema: "em".into(),
                    instantiation: None,
                },
            )],
        };
        assert!(check_proof(&d, &[], &good, &wff("P(c) | ~P(c)")).accepted);

        let bad = Proof {
            steps: vec![(
                wff("p | ~q"),
                Justification::Axiom {
                    schema: "em".into(),
                    instantiation: None,
                },
            )],
        };
        let report = check_proof(&d, &[], &bad, &wff("p | ~q"));
        assert!(!report.accepted);
        assert_eq!(report.first_failure, Some(0));
    }

    #[test]
    fn forward_reference_rejects_at_the_step() {
        let d = system();
        let hyps = vec![wff("p"), wff("~p | q")];
        let proof = Proof {
            steps: vec![
                (wff("p"), Justification::Hypothesis),
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "dsyll".into(),
                        premises: vec![0, 2],
                        instantiation: None,
                    },
                ),
                (wff("~p | q"), Justification::Hypothesis),
            ],
        };
        let report = check_proof(&d, &hyps, &proof, &wff("~p | q"));
        assert!(!report.accepted);
        assert_eq!(report.first_failure, Some(1));
        assert!(report.steps[1].detail.contains("precede"));
    }

    #[test]
    fn goal_must_be_the_last_step() {
        let d = system();
        let proof = Proof {
            steps: vec![(wff("p"), Justification::Hypothesis)],
        };
        let report = check_proof(&d, &[wff("p")], &proof, &wff("q"));
        assert!(!report.accepted);
        assert!(!report.goal_reached);
    }

    #[test]
    fn inserting_a_redundant_step_preserves_acceptance() {
        let d = system();
        let hyps = vec![wff("p"), wff("~p | q")];
        let proof = Proof {
            steps: vec![
                (wff("p"), Justification::Hypothesis),
                (wff("~p | q"), Justification::Hypothesis),
                (wff("p"), Justification::Hypothesis), // redundant
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "dsyll".into(),
                        premises: vec![0, 1],
                        instantiation: None,
                    },
                ),
            ],
        };
        assert!(check_proof(&d, &hyps, &proof, &wff("q")).accepted);
    }

    #[test]
    fn literal_mode_blocks_schematic_rules() {
        let d = system();
        let hyps = vec![wff("p"), wff("~p | q")];
        let proof = Proof {
            steps: vec![
                (wff("p"), Justification::Hypothesis),
                (wff("~p | q"), Justification::Hypothesis),
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "dsyll".into(),
                        premises: vec![0, 1],
                        instantiation: None,
                    },
                ),
            ],
        };
        let report = check_proof_with(
            &d,
            &hyps,
            &proof,
            &wff("q"),
            CheckOptions {
                literal_rules: true,
            },
        );
        assert!(!report.accepted);
        assert!(report.steps[2].detail.contains("literal"));

        // a metavariable-free rule still fires in literal mode
        let ground = Rule {
            name: "pq".into(),
            premises: vec![Pattern::literal(&wff("p"))],
            conclusion: Pattern::literal(&wff("q")),
        };
        let d2 = DeductionSystem::new(vec![], vec![ground]).unwrap();
        let proof = Proof {
            steps: vec![
                (wff("p"), Justification::Hypothesis),
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "pq".into(),
                        premises: vec![0],
                        instantiation: None,
                    },
                ),
            ],
        };
        let report = check_proof_with(
            &d2,
            &[wff("p")],
            &proof,
            &wff("q"),
            CheckOptions {
                literal_rules: true,
            },
        );
        assert!(report.accepted);
    }

    #[test]
    fn declared_instantiations_are_verified() {
        let d = system();
        let mut declared = Instantiation::default();
        declared.wffs.insert("phi".into(), wff("p"));
        let proof = Proof {
            steps: vec![(
                wff("p | ~p"),
                Justification::Axiom {
                    schema: "em".into(),
                    instantiation: Some(declared),
                },
            )],
        };
        assert!(check_proof(&d, &[], &proof, &wff("p | ~p")).accepted);

        let mut wrong = Instantiation::default();
        wrong.wffs.insert("phi".into(), wff("q"));
        let proof = Proof {
            steps: vec![(
                wff("p | ~p"),
                Justification::Axiom {
                    schema: "em".into(),
                    instantiation: Some(wrong),
                },
            )],
        };
        assert!(!check_proof(&d, &[], &proof, &wff("p | ~p")).accepted);
    }

    #[test]
    fn cited_premises_may_arrive_out_of_order() {
        let d = system();
        let hyps = vec![wff("p"), wff("~p | q")];
        let proof = Proof {
            steps: vec![
                (wff("~p | q"), Justification::Hypothesis),
                (wff("p"), Justification::Hypothesis),
                (
                    wff("q"),
                    Justification::Rule {
                        rule: "dsyll".into(),
                        premises: vec![0, 1],
                        instantiation: None,
                    },
                ),
            ],
        };
        // cited as [0, 1] but the rule premise order is (phi, ~phi|psi)
        assert!(check_proof(&d, &hyps, &proof, &wff("q")).accepted);
    }
}
