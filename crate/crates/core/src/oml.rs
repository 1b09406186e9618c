//! Orthomodular lattices: axiom checking, compatibility, the center, the
//! center-based irreducibility criterion, factorization by central elements,
//! recursive decomposition into irreducibles, and exhaustive enumeration of
//! all orthomodular lattices up to a size cap.

use crate::poset::Poset;
use crate::tvalgebra::{
    self, find_isomorphism, is_homomorphism, verify_iso, AlgType, AlgebraError, AlgebraMap,
    TVAlgebra,
};

/// Default size cap for [`enumerate_omls`].
pub const ENUMERATION_CAP: usize = 10;

/// Operation positions in type-(2,2,1) algebras.
pub const MEET: usize = 0;
pub const JOIN: usize = 1;
pub const NEG: usize = 2;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OmlError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("algebra type is not (2, 2, 1)")]
    TypeMismatch,
    #[error("algebra fails the orthomodular-lattice axioms: {0}")]
    NotAnOml(String),
    #[error("element `{0}` is not central")]
    NotCentral(String),
    #[error("element `{0}` is a trivial central element")]
    TrivialCentralElement(String),
    #[error("size cap {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

/// The lattice axioms, in report order. The first entry covers the lattice
/// structure itself: the meet table must be the order-theoretic glb and the
/// join table the lub.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmlAxiom {
    /// (i) `a & b` is the greatest lower bound (and `a v b` the least upper).
    LatticeOps,
    /// (ii) `a <= b` implies `~b <= ~a`.
    NegAntitone,
    /// (iii) `~~a = a`.
    NegInvolution,
    /// (iv) `a v ~a = 1`.
    ExcludedMiddle,
    /// (v) `a <= b` implies `a v (~a & b) = b`.
    Orthomodular,
}

impl OmlAxiom {
    pub fn roman(&self) -> &'static str {
        match self {
            OmlAxiom::LatticeOps => "i",
            OmlAxiom::NegAntitone => "ii",
            OmlAxiom::NegInvolution => "iii",
            OmlAxiom::ExcludedMiddle => "iv",
            OmlAxiom::Orthomodular => "v",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            OmlAxiom::LatticeOps => "meet/join tables equal glb/lub",
            OmlAxiom::NegAntitone => "negation is antitone",
            OmlAxiom::NegInvolution => "negation is an involution",
            OmlAxiom::ExcludedMiddle => "a v ~a = 1",
            OmlAxiom::Orthomodular => "a <= b implies a v (~a & b) = b",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: OmlAxiom,
    pub passed: bool,
    /// Witness elements for a failure, in scan order.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct OmlReport {
    pub axioms: Vec<AxiomCheck>,
}

impl OmlReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.axioms.iter().find(|c| !c.passed)
    }
}

/// Checks the five orthomodular-lattice axioms against the operation tables,
/// reporting a counterexample for each failure.
pub fn check_oml(a: &TVAlgebra) -> Result<OmlReport, OmlError> {
    if a.alg_type() != &AlgType::lattice_type() {
        return Err(OmlError::TypeMismatch);
    }
    let n = a.len();
    let p = a.poset();
    let name = |i: usize| p.name(i).to_string();
    let mut axioms = Vec::with_capacity(5);

    let mut lattice = AxiomCheck {
        axiom: OmlAxiom::LatticeOps,
        passed: true,
        counterexample: None,
    };
    'lat: for x in 0..n {
        for y in 0..n {
            if p.meet_idx(x, y) != Some(a.apply(MEET, &[x, y]))
                || p.join_idx(x, y) != Some(a.apply(JOIN, &[x, y]))
            {
                lattice.passed = false;
                lattice.counterexample = Some(vec![name(x), name(y)]);
                break 'lat;
            }
        }
    }
    axioms.push(lattice);

    let mut antitone = AxiomCheck {
        axiom: OmlAxiom::NegAntitone,
        passed: true,
        counterexample: None,
    };
    'ant: for x in 0..n {
        for y in 0..n {
            if p.leq_idx(x, y) && !p.leq_idx(a.apply(NEG, &[y]), a.apply(NEG, &[x])) {
                antitone.passed = false;
                antitone.counterexample = Some(vec![name(x), name(y)]);
                break 'ant;
            }
        }
    }
    axioms.push(antitone);

    let mut involution = AxiomCheck {
        axiom: OmlAxiom::NegInvolution,
        passed: true,
        counterexample: None,
    };
    for x in 0..n {
        if a.apply(NEG, &[a.apply(NEG, &[x])]) != x {
            involution.passed = false;
            involution.counterexample = Some(vec![name(x)]);
            break;
        }
    }
    axioms.push(involution);

    let top = a.top_idx();
    let mut excluded = AxiomCheck {
        axiom: OmlAxiom::ExcludedMiddle,
        passed: true,
        counterexample: None,
    };
    for x in 0..n {
        if a.apply(JOIN, &[x, a.apply(NEG, &[x])]) != top {
            excluded.passed = false;
            excluded.counterexample = Some(vec![name(x)]);
            break;
        }
    }
    axioms.push(excluded);

    let mut ortho = AxiomCheck {
        axiom: OmlAxiom::Orthomodular,
        passed: true,
        counterexample: None,
    };
    'omod: for x in 0..n {
        for y in 0..n {
            if p.leq_idx(x, y) {
                let rel = a.apply(MEET, &[a.apply(NEG, &[x]), y]);
                if a.apply(JOIN, &[x, rel]) != y {
                    ortho.passed = false;
                    ortho.counterexample = Some(vec![name(x), name(y)]);
                    break 'omod;
                }
            }
        }
    }
    axioms.push(ortho);

    Ok(OmlReport { axioms })
}

/// A validated orthomodular lattice: a type-(2,2,1) algebra passing
/// [`check_oml`], with the bottom element `~1` cached.
#[derive(Clone, Debug, PartialEq)]
pub struct OmlView {
    algebra: TVAlgebra,
    top: usize,
    bottom: usize,
}

impl OmlView {
    pub fn new(algebra: TVAlgebra) -> Result<OmlView, OmlError> {
        let report = check_oml(&algebra)?;
        if let Some(fail) = report.first_failure() {
            return Err(OmlError::NotAnOml(format!(
                "axiom ({}) fails{}",
                fail.axiom.roman(),
                fail.counterexample
                    .as_ref()
                    .map(|c| format!(" at ({})", c.join(", ")))
                    .unwrap_or_default()
            )));
        }
        let top = algebra.top_idx();
        let bottom = algebra.apply(NEG, &[top]);
        Ok(OmlView {
            algebra,
            top,
            bottom,
        })
    }

    pub fn algebra(&self) -> &TVAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> TVAlgebra {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebra.is_empty()
    }

    pub fn top_idx(&self) -> usize {
        self.top
    }

    pub fn bottom_idx(&self) -> usize {
        self.bottom
    }

    pub fn bottom(&self) -> &str {
        self.algebra.poset().name(self.bottom)
    }

    fn resolve(&self, name: &str) -> Result<usize, OmlError> {
        self.algebra
            .poset()
            .idx(name)
            .ok_or_else(|| OmlError::UnknownElement(name.to_string()))
    }

    pub(crate) fn meet(&self, x: usize, y: usize) -> usize {
        self.algebra.apply(MEET, &[x, y])
    }

    pub(crate) fn join(&self, x: usize, y: usize) -> usize {
        self.algebra.apply(JOIN, &[x, y])
    }

    pub(crate) fn neg(&self, x: usize) -> usize {
        self.algebra.apply(NEG, &[x])
    }

    pub fn compatible_idx(&self, a: usize, b: usize) -> bool {
        self.join(self.meet(a, b), self.meet(a, self.neg(b))) == a
    }

    /// `a = (a & b) v (a & ~b)`.
    pub fn compatible(&self, a: &str, b: &str) -> Result<bool, OmlError> {
        Ok(self.compatible_idx(self.resolve(a)?, self.resolve(b)?))
    }

    fn central_indices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&c| (0..n).all(|x| self.compatible_idx(c, x)))
            .collect()
    }

    /// Elements compatible with every element, in carrier order. Always
    /// contains 0 and 1; closure under the three operations and
    /// Boolean-ness of the induced subalgebra are asserted.
    pub fn center_idx(&self) -> Vec<usize> {
        let center = self.central_indices();
        let in_center = |x: usize| center.contains(&x);
        for &a in &center {
            assert!(in_center(self.neg(a)), "center not closed under negation");
            for &b in &center {
                assert!(in_center(self.meet(a, b)), "center not closed under meet");
                assert!(in_center(self.join(a, b)), "center not closed under join");
            }
        }
        let sub = self.restrict_to(&center, |x| self.neg(x));
        assert!(
            check_boolean(&sub).expect("center sublattice is an OML"),
            "center sublattice is not Boolean"
        );
        center
    }

    pub fn center(&self) -> Vec<String> {
        self.center_idx()
            .into_iter()
            .map(|i| self.algebra.poset().name(i).to_string())
            .collect()
    }

    /// Builds the subalgebra on `subset` (must be closed under meet/join),
    /// with the given negation.
    fn restrict_to(&self, subset: &[usize], neg: impl Fn(usize) -> usize) -> TVAlgebra {
        let pos_of = |x: usize| subset.iter().position(|&s| s == x).expect("closed subset");
        let names: Vec<String> = subset
            .iter()
            .map(|&i| self.algebra.poset().name(i).to_string())
            .collect();
        let poset = Poset::from_relation(names, |i, j| {
            self.algebra.poset().leq_idx(subset[i], subset[j])
        })
        .expect("restriction of a partial order");
        let k = subset.len();
        let mut meet_t = vec![0; k * k];
        let mut join_t = vec![0; k * k];
        let mut neg_t = vec![0; k];
        for i in 0..k {
            neg_t[i] = pos_of(neg(subset[i]));
            for j in 0..k {
                meet_t[i * k + j] = pos_of(self.meet(subset[i], subset[j]));
                join_t[i * k + j] = pos_of(self.join(subset[i], subset[j]));
            }
        }
        TVAlgebra::from_tables(
            poset,
            AlgType::lattice_type(),
            vec![meet_t, join_t, neg_t],
            self.algebra.op_names().to_vec(),
        )
        .expect("subalgebra tables are closed")
    }

    /// True iff the center is exactly {0, 1}; the one-element lattice counts
    /// as irreducible.
    pub fn is_irreducible(&self) -> bool {
        self.len() == 1 || self.central_indices().len() == 2
    }

    /// Splits the lattice at a central element `c` into the intervals
    /// `[0, c]` and `[0, ~c]` with relative negations, returning the factor
    /// lattices and the verified isomorphism `x -> (x & c, x & ~c)`.
    pub fn factor_by_central(&self, c: &str) -> Result<(OmlView, OmlView, AlgebraMap), OmlError> {
        let c_idx = self.resolve(c)?;
        self.factor_by_central_idx(c_idx)
    }

    pub fn factor_by_central_idx(
        &self,
        c_idx: usize,
    ) -> Result<(OmlView, OmlView, AlgebraMap), OmlError> {
        let c_name = self.algebra.poset().name(c_idx).to_string();
        if c_idx == self.top || c_idx == self.bottom {
            return Err(OmlError::TrivialCentralElement(c_name));
        }
        let n = self.len();
        if !(0..n).all(|x| self.compatible_idx(c_idx, x)) {
            return Err(OmlError::NotCentral(c_name));
        }
        let nc = self.neg(c_idx);
        let lower: Vec<usize> = (0..n)
            .filter(|&x| self.algebra.poset().leq_idx(x, c_idx))
            .collect();
        let upper: Vec<usize> = (0..n)
            .filter(|&x| self.algebra.poset().leq_idx(x, nc))
            .collect();
        let left = self.restrict_to(&lower, |x| self.meet(self.neg(x), c_idx));
        let right = self.restrict_to(&upper, |x| self.meet(self.neg(x), nc));
        let l1 = OmlView::new(left).expect("interval below a central element is an OML");
        let l2 = OmlView::new(right).expect("interval below a central element is an OML");

        let prod = TVAlgebra::product(l1.algebra(), l2.algebra())?;
        let n2 = l2.len();
        let map: Vec<usize> = (0..n)
            .map(|x| {
                let i = lower
                    .iter()
                    .position(|&e| e == self.meet(x, c_idx))
                    .unwrap();
                let j = upper.iter().position(|&e| e == self.meet(x, nc)).unwrap();
                i * n2 + j
            })
            .collect();
        let iso = AlgebraMap::from_indices(self.algebra.clone(), prod, map);
        assert!(iso.is_bijective(), "central split must be bijective");
        assert!(
            is_homomorphism(&iso).expect("continuity decidable on lattices"),
            "central split must be a homomorphism"
        );
        Ok((l1, l2, iso))
    }

    /// Recursively factors at the first non-trivial central element (in
    /// carrier order) until every factor is irreducible. Trivial factors are
    /// dropped; the returned map is the verified isomorphism onto the left
    /// fold of the factor list, the empty product being the trivial algebra.
    pub fn decompose(&self) -> (Vec<OmlView>, AlgebraMap) {
        let (factors, coords) = self.decompose_rec();
        let algebras: Vec<TVAlgebra> = factors.iter().map(|f| f.algebra().clone()).collect();
        let prod = TVAlgebra::product_of_list(&AlgType::lattice_type(), &algebras)
            .expect("factors share the lattice type");
        let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let map: Vec<usize> = coords
            .iter()
            .map(|cs| cs.iter().zip(&sizes).fold(0, |acc, (&c, &s)| acc * s + c))
            .collect();
        assert!(
            verify_iso(&self.algebra, &prod, &map),
            "decomposition must reconstruct the original lattice"
        );
        for f in &factors {
            assert!(
                f.is_irreducible(),
                "decomposition factors must be irreducible"
            );
        }
        (
            factors,
            AlgebraMap::from_indices(self.algebra.clone(), prod, map),
        )
    }

    /// Irreducible factors plus, for each element of `self`, its coordinate
    /// in each factor.
    fn decompose_rec(&self) -> (Vec<OmlView>, Vec<Vec<usize>>) {
        if self.len() == 1 {
            return (vec![], vec![vec![]]);
        }
        if self.is_irreducible() {
            return (
                vec![self.clone()],
                (0..self.len()).map(|i| vec![i]).collect(),
            );
        }
        let c = (0..self.len())
            .find(|&c| {
                c != self.top
                    && c != self.bottom
                    && (0..self.len()).all(|x| self.compatible_idx(c, x))
            })
            .expect("reducible lattice has a non-trivial central element");
        let (l1, l2, iso) = self.factor_by_central_idx(c).expect("central split");
        let (f1, coords1) = l1.decompose_rec();
        let (f2, coords2) = l2.decompose_rec();
        let n2 = l2.len();
        let coords: Vec<Vec<usize>> = (0..self.len())
            .map(|x| {
                let pair = iso.apply_idx(x);
                let mut cs = coords1[pair / n2].clone();
                cs.extend(&coords2[pair % n2]);
                cs
            })
            .collect();
        let mut factors = f1;
        factors.extend(f2);
        (factors, coords)
    }
}

/// Boolean test, computed along both routes: every pair compatible, and
/// join-over-meet distributivity for every triple. The two must agree.
pub fn check_boolean(a: &TVAlgebra) -> Result<bool, OmlError> {
    let view = OmlView::new(a.clone())?;
    let n = a.len();
    let all_compatible = (0..n).all(|x| (0..n).all(|y| view.compatible_idx(x, y)));
    let distributive = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                a.apply(JOIN, &[x, a.apply(MEET, &[y, z])])
                    == a.apply(MEET, &[a.apply(JOIN, &[x, y]), a.apply(JOIN, &[x, z])])
            })
        })
    });
    assert_eq!(
        all_compatible, distributive,
        "compatibility and distributivity must agree on orthomodular lattices"
    );
    Ok(all_compatible)
}

/// The trivial one-element orthomodular lattice.
pub fn trivial_oml() -> OmlView {
    OmlView::new(TVAlgebra::trivial(AlgType::lattice_type())).unwrap()
}

/// The two-element Boolean algebra.
pub fn boolean_2() -> OmlView {
    OmlView::new(tvalgebra::boolean_2()).unwrap()
}

/// The k-fold product of the two-element Boolean algebra; `k = 0` gives the
/// trivial lattice.
pub fn boolean_power(k: usize) -> OmlView {
    let two = tvalgebra::boolean_2();
    let factors = vec![two; k];
    OmlView::new(TVAlgebra::product_of_list(&AlgType::lattice_type(), &factors).unwrap()).unwrap()
}

/// The lattice MO(k): 0 and 1 plus k complementary pairs of incomparable
/// atoms. MO(1) is the four-element Boolean algebra; MO(2) is the smallest
/// non-Boolean orthomodular lattice.
pub fn mo(k: usize) -> OmlView {
    assert!((1..=13).contains(&k), "atom pair names run a..m");
    let mut names = vec!["0".to_string()];
    for i in 0..k {
        let letter = (b'a' + i as u8) as char;
        names.push(format!("{letter}"));
        names.push(format!("{letter}'"));
    }
    names.push("1".to_string());
    let n = names.len();
    let poset = Poset::from_relation(names, |i, j| i == j || i == 0 || j == n - 1).unwrap();
    let mate = |x: usize| -> usize {
        if x == 0 {
            n - 1
        } else if x == n - 1 {
            0
        } else if x % 2 == 1 {
            x + 1
        } else {
            x - 1
        }
    };
    let mut meet_t = vec![0; n * n];
    let mut join_t = vec![0; n * n];
    let mut neg_t = vec![0; n];
    for i in 0..n {
        neg_t[i] = mate(i);
        for j in 0..n {
            meet_t[i * n + j] = poset.meet_idx(i, j).unwrap();
            join_t[i * n + j] = poset.join_idx(i, j).unwrap();
        }
    }
    let algebra = TVAlgebra::from_tables(
        poset,
        AlgType::lattice_type(),
        vec![meet_t, join_t, neg_t],
        vec!["and".into(), "or".into(), "not".into()],
    )
    .unwrap();
    OmlView::new(algebra).unwrap()
}

/// The six-element benzene ring O6: chains 0 < a < b < 1 and
/// 0 < b' < a' < 1 with `~a = a'`. An ortholattice that fails
/// orthomodularity at (a, b), so it is returned as a raw algebra.
pub fn o6() -> TVAlgebra {
    let elements = ["0", "a", "b", "b'", "a'", "1"];
    let poset = Poset::from_covers(
        &elements,
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ],
    )
    .unwrap();
    let n = 6;
    let neg = vec![5usize, 4, 3, 2, 1, 0];
    let mut meet_t = vec![0; n * n];
    let mut join_t = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            meet_t[i * n + j] = poset.meet_idx(i, j).unwrap();
            join_t[i * n + j] = poset.join_idx(i, j).unwrap();
        }
    }
    TVAlgebra::from_tables(
        poset,
        AlgType::lattice_type(),
        vec![meet_t, join_t, neg],
        vec!["and".into(), "or".into(), "not".into()],
    )
    .unwrap()
}

/// All orthomodular lattices with carrier size <= `n`, up to isomorphism.
///
/// The search fixes bottom, top, and a canonical pairing of the middle
/// elements under negation (every ortholattice is isomorphic to one of that
/// shape), enumerates strict orders on the middles subject to the antitone
/// symmetry, keeps candidates whose order is a lattice and whose derived
/// tables pass [`check_oml`], and deduplicates with [`find_isomorphism`].
pub fn enumerate_omls(n: usize) -> Result<Vec<OmlView>, OmlError> {
    enumerate_omls_with_cap(n, ENUMERATION_CAP)
}

pub fn enumerate_omls_with_cap(n: usize, cap: usize) -> Result<Vec<OmlView>, OmlError> {
    if n > cap {
        return Err(OmlError::CapExceeded { requested: n, cap });
    }
    let mut found: Vec<OmlView> = Vec::new();
    for size in 1..=n {
        if size == 1 {
            found.push(trivial_oml());
            continue;
        }
        // negation is a fixed-point-free involution on the middles, so
        // nontrivial OMLs have even size
        if size % 2 != 0 {
            continue;
        }
        for candidate in enumerate_size(size) {
            let Ok(view) = OmlView::new(candidate) else {
                continue;
            };
            let dup = found.iter().any(|f| {
                f.len() == view.len() && find_isomorphism(f.algebra(), view.algebra()).is_some()
            });
            if !dup {
                found.push(view);
            }
        }
    }
    Ok(found)
}

/// Candidate orthocomplemented lattices of an exact even size >= 2.
fn enumerate_size(size: usize) -> Vec<TVAlgebra> {
    let m = size - 2; // middles at indices 1..=m, paired (1,2), (3,4), ...
    let mate = |x: usize| if x % 2 == 1 { x + 1 } else { x - 1 };
    // One representative per orbit of unordered non-mate middle pairs under
    // the antitone symmetry {i,j} <-> {mate(i),mate(j)}.
    let mut orbits: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            if mate(i) == j {
                continue;
            }
            let (mi, mj) = (mate(i), mate(j));
            let mirror = (mi.min(mj), mi.max(mj));
            if seen.contains(&(i, j)) || seen.contains(&mirror) {
                continue;
            }
            seen.insert((i, j));
            orbits.push((i, j));
        }
    }

    let mut results = Vec::new();
    let mut strict = vec![vec![false; m + 1]; m + 1];
    enumerate_orders(&orbits, 0, &mut strict, mate, m, size, &mut results);
    results
}

fn enumerate_orders(
    orbits: &[(usize, usize)],
    pos: usize,
    strict: &mut Vec<Vec<bool>>,
    mate: impl Fn(usize) -> usize + Copy,
    m: usize,
    size: usize,
    results: &mut Vec<TVAlgebra>,
) {
    if pos == orbits.len() {
        if let Some(alg) = build_candidate(strict, mate, m, size) {
            results.push(alg);
        }
        return;
    }
    let (i, j) = orbits[pos];
    // incomparable
    enumerate_orders(orbits, pos + 1, strict, mate, m, size, results);
    // i < j or j < i, each mirrored to mate(hi) < mate(lo)
    for (lo, hi) in [(i, j), (j, i)] {
        let (mlo, mhi) = (mate(hi), mate(lo));
        strict[lo][hi] = true;
        strict[mlo][mhi] = true;
        // nothing sits below both members of a complement pair (it would be
        // 0) or above both (it would be 1)
        let ok = !strict[lo][mate(hi)]
            && !strict[mate(lo)][hi]
            && !strict[mlo][mate(mhi)]
            && !strict[mate(mlo)][mhi];
        if ok {
            enumerate_orders(orbits, pos + 1, strict, mate, m, size, results);
        }
        strict[lo][hi] = false;
        strict[mlo][mhi] = false;
    }
}

/// Assembles the full lattice for a decided strict order on middles, when
/// that order is transitive and the resulting poset is a lattice.
fn build_candidate(
    strict: &[Vec<bool>],
    mate: impl Fn(usize) -> usize,
    m: usize,
    size: usize,
) -> Option<TVAlgebra> {
    for a in 1..=m {
        for b in 1..=m {
            if strict[a][b] && strict[b][a] {
                return None;
            }
            for c in 1..=m {
                if strict[a][b] && strict[b][c] && !strict[a][c] {
                    return None;
                }
            }
        }
    }
    let mut names = Vec::with_capacity(size);
    names.push("0".to_string());
    for pair in 0..m / 2 {
        let letter = (b'a' + pair as u8) as char;
        names.push(format!("{letter}"));
        names.push(format!("{letter}'"));
    }
    names.push("1".to_string());
    let top = size - 1;
    let poset = Poset::from_relation(names, |i, j| {
        i == j || i == 0 || j == top || (i != top && j != 0 && strict[i][j])
    })
    .ok()?;
    if !poset.is_lattice() {
        return None;
    }
    let n = size;
    let mut meet_t = vec![0; n * n];
    let mut join_t = vec![0; n * n];
    let mut neg_t = vec![0; n];
    for i in 0..n {
        neg_t[i] = if i == 0 {
            top
        } else if i == top {
            0
        } else {
            mate(i)
        };
        for j in 0..n {
            meet_t[i * n + j] = poset.meet_idx(i, j)?;
            join_t[i * n + j] = poset.join_idx(i, j)?;
        }
    }
    TVAlgebra::from_tables(
        poset,
        AlgType::lattice_type(),
        vec![meet_t, join_t, neg_t],
        vec!["and".into(), "or".into(), "not".into()],
    )
    .ok()
}
