//! Finite first-order structures with algebra-valued truth: interpretations
//! of function symbols, atomic predicate assignments, the induced truth
//! valuation (atoms through tables, connectives through operations, the
//! universal quantifier through poset meets over all instantiations), model
//! checking, and projection onto product factors.

use std::collections::{BTreeMap, HashMap};

use crate::bitset::Mask;
use crate::oml::{self, OmlView};
use crate::poset::PosetError;
use crate::syntax::{free_vars, substitute, Language, SyntaxError, Term, Wff};
use crate::tvalgebra::{
    find_factorization, is_irreducible_bruteforce, projection, tuples, AlgebraError, AlgebraMap,
    TVAlgebra, BRUTEFORCE_CAP,
};

/// Non-lattice algebras larger than this skip the construction-time check
/// that every needed meet exists; evaluation then reports missing meets.
const MEET_CHECK_CAP: usize = 20;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SemanticsError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("universe must be non-empty")]
    EmptyUniverse,
    #[error("duplicate universe element `{0}`")]
    DuplicateUniverseElement(String),
    #[error("universe element `{0}` collides with a language symbol")]
    UniverseNameCollision(String),
    #[error("unknown universe element `{0}`")]
    UnknownUniverseElement(String),
    #[error("function `{name}` is missing an entry for {tuple}")]
    NonTotalFunction { name: String, tuple: String },
    #[error("function `{0}` is not declared in the language")]
    UndeclaredFunction(String),
    #[error("predicate `{name}` is missing an entry for {tuple}")]
    NonTotalBase { name: String, tuple: String },
    #[error("predicate `{0}` is not declared in the language")]
    UndeclaredPredicate(String),
    #[error("base value `{0}` is not an algebra element")]
    UnknownAlgebraElement(String),
    #[error("algebra type does not match the language connectives")]
    AlgTypeMismatch,
    #[error("induced valuation is not surjective: cannot reach {{{missing}}}")]
    NonSurjective { missing: String },
    #[error("meet does not exist for the value set {{{values}}}")]
    MeetUndefined { values: String },
    #[error("ground term contains variable `{0}`")]
    VariableInGroundTerm(String),
    #[error("formula is not a sentence (free: {0})")]
    NotASentence(String),
    #[error("unknown symbol `{0}` during evaluation")]
    UnknownSymbol(String),
    #[error("algebra was not built as a product")]
    NotAProduct,
}

/// An interpretation of the function symbols over a finite universe.
/// Universe constants interpret as themselves under the constant extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    universe: Vec<String>,
    /// per function symbol, a flat table |M|^arity -> universe index
    fn_tables: BTreeMap<String, Vec<usize>>,
}

impl Interpretation {
    pub fn new(
        lang: &Language,
        universe: &[&str],
        fn_entries: &BTreeMap<String, Vec<(Vec<String>, String)>>,
    ) -> Result<Interpretation, SemanticsError> {
        if universe.is_empty() {
            return Err(SemanticsError::EmptyUniverse);
        }
        let mut names = Vec::new();
        for &m in universe {
            if names.iter().any(|n| n == m) {
                return Err(SemanticsError::DuplicateUniverseElement(m.to_string()));
            }
            if lang.is_declared(m) {
                return Err(SemanticsError::UniverseNameCollision(m.to_string()));
            }
            names.push(m.to_string());
        }
        let idx_of = |name: &str| -> Result<usize, SemanticsError> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| SemanticsError::UnknownUniverseElement(name.to_string()))
        };
        for name in fn_entries.keys() {
            if !lang.functions().contains_key(name) {
                return Err(SemanticsError::UndeclaredFunction(name.clone()));
            }
        }
        let u = names.len();
        let mut fn_tables = BTreeMap::new();
        for (name, &arity) in lang.functions() {
            let entries = fn_entries.get(name).map(|v| v.as_slice()).unwrap_or(&[]);
            let mut table = vec![usize::MAX; u.pow(arity as u32)];
            for (args, out) in entries {
                let mut flat = 0;
                for a in args {
                    flat = flat * u + idx_of(a)?;
                }
                table[flat] = idx_of(out)?;
            }
            if let Some(missing) = table.iter().position(|&v| v == usize::MAX) {
                let mut code = missing;
                let mut t = vec![0; arity];
                for slot in t.iter_mut().rev() {
                    *slot = code % u;
                    code /= u;
                }
                let shown: Vec<&str> = t.iter().map(|&i| names[i].as_str()).collect();
                return Err(SemanticsError::NonTotalFunction {
                    name: name.clone(),
                    tuple: format!("({})", shown.join(", ")),
                });
            }
            fn_tables.insert(name.clone(), table);
        }
        Ok(Interpretation {
            universe: names,
            fn_tables,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn universe_idx(&self, name: &str) -> Option<usize> {
        self.universe.iter().position(|n| n == name)
    }

    /// Maps a variable-free term into the universe by recursive lookup.
    pub fn eval_term(&self, t: &Term) -> Result<usize, SemanticsError> {
        match t {
            Term::Var(v) => Err(SemanticsError::VariableInGroundTerm(v.clone())),
            Term::App(name, args) => {
                if args.is_empty() {
                    if let Some(i) = self.universe_idx(name) {
                        return Ok(i);
                    }
                }
                let table = self
                    .fn_tables
                    .get(name)
                    .ok_or_else(|| SemanticsError::UnknownSymbol(name.clone()))?;
                let u = self.universe.len();
                let mut flat = 0;
                for a in args {
                    flat = flat * u + self.eval_term(a)?;
                }
                Ok(table[flat])
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct StructureOptions {
    /// Downgrade the surjectivity requirement on the induced valuation to a
    /// warning.
    pub allow_nonsurjective: bool,
}

/// A structure: universe plus interpretation, a truth-value algebra matching
/// the language type, and a total atomic base inducing the valuation.
#[derive(Clone, Debug, PartialEq)]
pub struct Structure {
    lang: Language,
    /// the language extended with the universe constants
    lang_ext: Language,
    interp: Interpretation,
    algebra: TVAlgebra,
    /// per predicate, a flat table |M|^arity -> algebra element index
    base: BTreeMap<String, Vec<usize>>,
}

impl Structure {
    pub fn new(
        lang: Language,
        interp: Interpretation,
        algebra: TVAlgebra,
        base_entries: &BTreeMap<String, Vec<(Vec<String>, String)>>,
    ) -> Result<Structure, SemanticsError> {
        let (s, _warnings) = Structure::new_with_options(
            lang,
            interp,
            algebra,
            base_entries,
            StructureOptions::default(),
        )?;
        Ok(s)
    }

    pub fn new_with_options(
        lang: Language,
        interp: Interpretation,
        algebra: TVAlgebra,
        base_entries: &BTreeMap<String, Vec<(Vec<String>, String)>>,
        options: StructureOptions,
    ) -> Result<(Structure, Vec<String>), SemanticsError> {
        if lang.alg_type() != *algebra.alg_type() {
            return Err(SemanticsError::AlgTypeMismatch);
        }
        for name in base_entries.keys() {
            if !lang.predicates().contains_key(name) {
                return Err(SemanticsError::UndeclaredPredicate(name.clone()));
            }
        }
        let u = interp.universe.len();
        let n = algebra.len();
        let mut base = BTreeMap::new();
        for (name, &arity) in lang.predicates() {
            let entries = base_entries.get(name).map(|v| v.as_slice()).unwrap_or(&[]);
            let mut table = vec![usize::MAX; u.pow(arity as u32)];
            for (args, out) in entries {
                let mut flat = 0;
                for a in args {
                    flat = flat * u
                        + interp
                            .universe_idx(a)
                            .ok_or_else(|| SemanticsError::UnknownUniverseElement(a.clone()))?;
                }
                table[flat] = algebra
                    .poset()
                    .idx(out)
                    .ok_or_else(|| SemanticsError::UnknownAlgebraElement(out.clone()))?;
            }
            if let Some(missing) = table.iter().position(|&v| v == usize::MAX) {
                let mut code = missing;
                let mut t = vec![0; arity];
                for slot in t.iter_mut().rev() {
                    *slot = code % u;
                    code /= u;
                }
                let shown: Vec<&str> = t.iter().map(|&i| interp.universe[i].as_str()).collect();
                return Err(SemanticsError::NonTotalBase {
                    name: name.clone(),
                    tuple: format!("({})", shown.join(", ")),
                });
            }
            base.insert(name.clone(), table);
        }

        let universe_refs: Vec<&str> = interp.universe.iter().map(|s| s.as_str()).collect();
        let lang_ext = lang
            .extend_with_constants(&universe_refs)
            .map_err(SemanticsError::Syntax)?;

        let s = Structure {
            lang,
            lang_ext,
            interp,
            algebra,
            base,
        };
        let mut warnings = Vec::new();

        // Surjectivity certificate: base values closed under the operation
        // tables and finite meets must reach the whole carrier.
        let reachable = s.reachable_values();
        if reachable.count() < n {
            let missing: Vec<&str> = (0..n)
                .filter(|&i| !reachable.get(i))
                .map(|i| s.algebra.poset().name(i))
                .collect();
            let msg = missing.join(", ");
            if options.allow_nonsurjective {
                warnings.push(format!(
                    "induced valuation is not surjective: cannot reach {{{msg}}}"
                ));
            } else {
                return Err(SemanticsError::NonSurjective { missing: msg });
            }
        }

        // For non-lattice algebras, every nonempty subset of the reachable
        // values must have a meet so that universal quantification is total.
        if !s.algebra.poset().is_lattice() {
            let reached: Vec<usize> = reachable.iter().collect();
            if reached.len() <= MEET_CHECK_CAP {
                for bits in 1u64..(1 << reached.len()) {
                    let mut m = Mask::empty(n);
                    for (i, &v) in reached.iter().enumerate() {
                        if bits & (1 << i) != 0 {
                            m.set(v);
                        }
                    }
                    if s.algebra.poset().meet_of_mask(&m).is_none() {
                        let shown: Vec<&str> =
                            m.iter().map(|i| s.algebra.poset().name(i)).collect();
                        return Err(SemanticsError::MeetUndefined {
                            values: shown.join(", "),
                        });
                    }
                }
            } else {
                warnings.push(
                    "reachable set too large to pre-check meets; evaluation may report missing meets"
                        .to_string(),
                );
            }
        }
        Ok((s, warnings))
    }

    /// Closure of the atomic base values under all operation tables and
    /// finite meets (pairwise for lattices, all subsets otherwise).
    fn reachable_values(&self) -> Mask {
        let n = self.algebra.len();
        let mut reached = Mask::empty(n);
        for table in self.base.values() {
            for &v in table {
                reached.set(v);
            }
        }
        let lattice = self.algebra.poset().is_lattice();
        loop {
            let before = reached.count();
            let current: Vec<usize> = reached.iter().collect();
            for (label, op) in self.algebra.ops().iter().enumerate() {
                for args in tuples(current.len(), op.arity()) {
                    let real: Vec<usize> = args.iter().map(|&i| current[i]).collect();
                    reached.set(self.algebra.apply(label, &real));
                }
            }
            if lattice {
                for &x in &current {
                    for &y in &current {
                        if let Some(m) = self.algebra.poset().meet_idx(x, y) {
                            reached.set(m);
                        }
                    }
                }
            } else if current.len() <= MEET_CHECK_CAP {
                for bits in 1u64..(1 << current.len()) {
                    let mut m = Mask::empty(n);
                    for (i, &v) in current.iter().enumerate() {
                        if bits & (1 << i) != 0 {
                            m.set(v);
                        }
                    }
                    if let Some(v) = self.algebra.poset().meet_of_mask(&m) {
                        reached.set(v);
                    }
                }
            }
            if reached.count() == before {
                return reached;
            }
        }
    }

    pub fn language(&self) -> &Language {
        &self.lang
    }

    /// The language extended with one constant per universe element.
    pub fn extended_language(&self) -> &Language {
        &self.lang_ext
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interp
    }

    pub fn algebra(&self) -> &TVAlgebra {
        &self.algebra
    }

    pub fn universe(&self) -> &[String] {
        &self.interp.universe
    }

    pub fn base_tables(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.base
    }

    pub(crate) fn from_parts(
        lang: Language,
        interp: Interpretation,
        algebra: TVAlgebra,
        base: BTreeMap<String, Vec<usize>>,
    ) -> Result<Structure, SemanticsError> {
        let universe_refs: Vec<&str> = interp.universe.iter().map(|s| s.as_str()).collect();
        let lang_ext = lang.extend_with_constants(&universe_refs)?;
        Ok(Structure {
            lang,
            lang_ext,
            interp,
            algebra,
            base,
        })
    }
}

/// One evaluation session over a structure, memoizing sentence values.
pub struct Evaluator<'a> {
    structure: &'a Structure,
    cache: HashMap<Wff, usize>,
}

impl<'a> Evaluator<'a> {
    pub fn new(structure: &'a Structure) -> Evaluator<'a> {
        Evaluator {
            structure,
            cache: HashMap::new(),
        }
    }

    /// Value of a sentence: atoms through the base after evaluating ground
    /// terms, connectives through the matching operation table, and the
    /// universal quantifier through the meet over all instantiations.
    pub fn eval_sentence(&mut self, w: &Wff) -> Result<usize, SemanticsError> {
        let free = free_vars(w);
        if !free.is_empty() {
            let shown: Vec<String> = free.into_iter().collect();
            return Err(SemanticsError::NotASentence(shown.join(", ")));
        }
        self.eval_closed(w)
    }

    fn eval_closed(&mut self, w: &Wff) -> Result<usize, SemanticsError> {
        if let Some(&v) = self.cache.get(w) {
            return Ok(v);
        }
        let s = self.structure;
        let value = match w {
            Wff::Atom(p, args) => {
                let table = self
                    .structure
                    .base
                    .get(p)
                    .ok_or_else(|| SemanticsError::UnknownSymbol(p.clone()))?;
                let u = s.interp.universe.len();
                let mut flat = 0;
                for t in args {
                    flat = flat * u + s.interp.eval_term(t)?;
                }
                table[flat]
            }
            Wff::Conn(c, args) => {
                let label = s
                    .lang
                    .connective_index(c)
                    .ok_or_else(|| SemanticsError::UnknownSymbol(c.clone()))?;
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(self.eval_closed(a)?);
                }
                s.algebra.apply(label, &vals)
            }
            Wff::Forall(v, body) => {
                let mut values = Mask::empty(s.algebra.len());
                for m in s.interp.universe.clone() {
                    let bind = BTreeMap::from([(v.clone(), m)]);
                    let inst = substitute(&s.lang_ext, body, &bind)?;
                    values.set(self.eval_closed(&inst)?);
                }
                s.algebra.poset().meet_of_mask(&values).ok_or_else(|| {
                    let shown: Vec<&str> =
                        values.iter().map(|i| s.algebra.poset().name(i)).collect();
                    SemanticsError::MeetUndefined {
                        values: shown.join(", "),
                    }
                })?
            }
        };
        self.cache.insert(w.clone(), value);
        Ok(value)
    }

    /// Open formulas are universally closed over their free variables in
    /// lexicographic order, then evaluated as sentences.
    pub fn eval_wff(&mut self, w: &Wff) -> Result<usize, SemanticsError> {
        let order: Vec<String> = free_vars(w).into_iter().collect();
        self.eval_wff_with_order(w, &order)
    }

    /// Closure under an explicit variable order; the result is independent
    /// of the order since meets commute.
    pub fn eval_wff_with_order(
        &mut self,
        w: &Wff,
        order: &[String],
    ) -> Result<usize, SemanticsError> {
        let mut closed = w.clone();
        for v in order.iter().rev() {
            closed = Wff::Forall(v.clone(), Box::new(closed));
        }
        self.eval_sentence(&closed)
    }

    pub fn holds(&mut self, w: &Wff) -> Result<bool, SemanticsError> {
        Ok(self.eval_wff(w)? == self.structure.algebra.top_idx())
    }
}

pub fn eval_sentence(s: &Structure, w: &Wff) -> Result<usize, SemanticsError> {
    Evaluator::new(s).eval_sentence(w)
}

pub fn eval_wff(s: &Structure, w: &Wff) -> Result<usize, SemanticsError> {
    Evaluator::new(s).eval_wff(w)
}

/// The element name of a formula's value.
pub fn eval_wff_name<'a>(s: &'a Structure, w: &Wff) -> Result<&'a str, SemanticsError> {
    Ok(s.algebra.poset().name(eval_wff(s, w)?))
}

/// `holds(s, w)` iff the universally closed value is the top element.
pub fn holds(s: &Structure, w: &Wff) -> Result<bool, SemanticsError> {
    Evaluator::new(s).holds(w)
}

/// A model of a set of formulas: every instantiation of every formula by
/// universe constants evaluates to top. The instantiation route and the
/// universal-closure route are both computed and must agree.
pub fn is_model(s: &Structure, gamma: &[Wff]) -> Result<bool, SemanticsError> {
    let mut eval = Evaluator::new(s);
    let mut all = true;
    for g in gamma {
        let by_closure = eval.holds(g)?;

        let vars: Vec<String> = free_vars(g).into_iter().collect();
        let u = s.interp.universe.len();
        let mut by_instances = true;
        for combo in tuples(u, vars.len()) {
            let bindings: BTreeMap<String, String> = vars
                .iter()
                .cloned()
                .zip(combo.iter().map(|&i| s.interp.universe[i].clone()))
                .collect();
            let inst = substitute(&s.lang_ext, g, &bindings)?;
            if eval.eval_sentence(&inst)? != s.algebra.top_idx() {
                by_instances = false;
                break;
            }
        }
        assert_eq!(
            by_closure, by_instances,
            "universal closure and instantiation must agree on model checking"
        );
        all &= by_closure;
    }
    Ok(all)
}

/// Projects a product-algebra structure onto its two factors, composing the
/// atomic base with the projections. Compositionality of evaluation is
/// verified on a sampled sentence family.
pub fn factor_structures(s: &Structure) -> Result<(Structure, Structure), SemanticsError> {
    let (f1, f2) = s
        .algebra
        .product_factors()
        .ok_or(SemanticsError::NotAProduct)?;
    let n2 = f2.len();
    let make = |side: u8, target: &TVAlgebra| -> Result<Structure, SemanticsError> {
        let base: BTreeMap<String, Vec<usize>> = s
            .base
            .iter()
            .map(|(p, table)| {
                let projected = table
                    .iter()
                    .map(|&v| if side == 1 { v / n2 } else { v % n2 })
                    .collect();
                (p.clone(), projected)
            })
            .collect();
        Structure::from_parts(s.lang.clone(), s.interp.clone(), target.clone(), base)
    };
    let s1 = make(1, f1)?;
    let s2 = make(2, f2)?;

    // compositionality spot-check: p_i(eval(s, w)) = eval(s_i, w)
    let consts: Vec<String> = s.interp.universe.clone();
    let family = sentence_family(&s.lang, &consts, 2, 24);
    let p1 = projection(&s.algebra, 1)?;
    let p2 = projection(&s.algebra, 2)?;
    let mut e = Evaluator::new(s);
    let mut e1 = Evaluator::new(&s1);
    let mut e2 = Evaluator::new(&s2);
    for w in &family {
        let v = e.eval_sentence(w)?;
        assert_eq!(
            p1.apply_idx(v),
            e1.eval_sentence(w)?,
            "projection compositionality violated on the left factor"
        );
        assert_eq!(
            p2.apply_idx(v),
            e2.eval_sentence(w)?,
            "projection compositionality violated on the right factor"
        );
    }
    Ok((s1, s2))
}

/// Irreducibility of the structure's algebra: the center criterion when the
/// algebra is an orthomodular lattice, brute force otherwise.
pub fn is_irreducible_structure(s: &Structure) -> Result<bool, SemanticsError> {
    match oml::check_oml(&s.algebra) {
        Ok(report) if report.all_pass() => {
            let view = OmlView::new(s.algebra.clone()).expect("axioms just checked");
            Ok(view.is_irreducible())
        }
        _ => Ok(is_irreducible_bruteforce(&s.algebra).map_err(SemanticsError::Algebra)?),
    }
}

/// Finds a factorization of the structure's algebra regardless of how it was
/// built: recorded product factors first, then the center criterion for
/// orthomodular lattices, then brute force.
pub fn factorization_of(s: &Structure) -> Result<Option<AlgebraMap>, SemanticsError> {
    // A recorded pair with a trivial side is no witness of reducibility;
    // those algebras fall through to the genuine-factorization routes.
    if matches!(s.algebra.product_factors(), Some((f1, f2)) if f1.len() > 1 && f2.len() > 1) {
        let map = (0..s.algebra.len()).collect();
        return Ok(Some(AlgebraMap::from_indices(
            s.algebra.clone(),
            s.algebra.clone(),
            map,
        )));
    }
    if let Ok(report) = oml::check_oml(&s.algebra) {
        if report.all_pass() {
            let view = OmlView::new(s.algebra.clone()).expect("axioms just checked");
            if view.is_irreducible() {
                return Ok(None);
            }
            let c = (0..view.len())
                .find(|&c| {
                    c != view.top_idx()
                        && c != view.bottom_idx()
                        && (0..view.len()).all(|x| view.compatible_idx(c, x))
                })
                .expect("reducible lattice has a central element");
            let (_, _, iso) = view.factor_by_central_idx(c).expect("central split");
            return Ok(Some(iso));
        }
    }
    Ok(find_factorization(&s.algebra, BRUTEFORCE_CAP)?)
}

/// Rewrites a structure along an algebra isomorphism, carrying the atomic
/// base through the map. The result is the same structure up to the
/// workbench's structural-identity notion.
pub fn transport(s: &Structure, iso: &AlgebraMap) -> Result<Structure, SemanticsError> {
    assert_eq!(
        iso.source, s.algebra,
        "transport expects a map out of the structure's algebra"
    );
    let base: BTreeMap<String, Vec<usize>> = s
        .base
        .iter()
        .map(|(p, table)| (p.clone(), table.iter().map(|&v| iso.apply_idx(v)).collect()))
        .collect();
    Structure::from_parts(s.lang.clone(), s.interp.clone(), iso.target.clone(), base)
}

/// A deterministic family of sentences over the language and the given
/// constants: all ground atoms, then connective and quantifier layers up to
/// `depth`, truncated at `cap` sentences per layer combination.
pub fn sentence_family(
    lang: &Language,
    constants: &[String],
    depth: usize,
    cap: usize,
) -> Vec<Wff> {
    let consts: Vec<Term> = constants.iter().map(|c| Term::constant(c)).collect();
    let var = "x".to_string();

    // ground atoms and single-variable open atoms
    let mut closed: Vec<Wff> = Vec::new();
    let mut open: Vec<Wff> = Vec::new();
    for (p, &arity) in lang.predicates() {
        for combo in tuples(consts.len() + 1, arity) {
            // index consts.len() stands for the variable
            let args: Vec<Term> = combo
                .iter()
                .map(|&i| {
                    if i < consts.len() {
                        consts[i].clone()
                    } else {
                        Term::Var(var.clone())
                    }
                })
                .collect();
            let uses_var = combo.contains(&consts.len());
            let atom = Wff::Atom(p.clone(), args);
            if uses_var {
                open.push(atom);
            } else {
                closed.push(atom);
            }
        }
    }

    let mut all_closed = closed.clone();
    let mut layer_closed = closed;
    let mut layer_open = open.clone();
    for _ in 0..depth {
        let mut next_closed: Vec<Wff> = Vec::new();
        let mut next_open: Vec<Wff> = Vec::new();
        // close every open formula of the previous layer
        for w in &layer_open {
            next_closed.push(Wff::Forall(var.clone(), Box::new(w.clone())));
        }
        for (name, arity) in lang.connectives() {
            match arity {
                1 => {
                    for w in layer_closed.iter().take(cap) {
                        next_closed.push(Wff::Conn(name.clone(), vec![w.clone()]));
                    }
                    for w in layer_open.iter().take(cap) {
                        next_open.push(Wff::Conn(name.clone(), vec![w.clone()]));
                    }
                }
                2 => {
                    for a in layer_closed.iter().take(cap / 2) {
                        for b in all_closed.iter().take(cap / 4) {
                            next_closed.push(Wff::Conn(name.clone(), vec![a.clone(), b.clone()]));
                        }
                    }
                    for a in layer_open.iter().take(cap / 4) {
                        for b in all_closed.iter().take(cap / 8) {
                            next_open.push(Wff::Conn(name.clone(), vec![a.clone(), b.clone()]));
                        }
                    }
                }
                _ => {}
            }
            if next_closed.len() > cap {
                next_closed.truncate(cap);
            }
            if next_open.len() > cap {
                next_open.truncate(cap);
            }
        }
        all_closed.extend(next_closed.iter().cloned());
        layer_closed = next_closed;
        layer_open = next_open;
    }
    all_closed
}
