//! Finite partial orders with meet/join computation and order-map predicates.
//!
//! A [`Poset`] is built from a cover (Hasse) list; the full order is the
//! reflexive-transitive closure of the covers. Construction fails if the
//! closure violates antisymmetry. Values are immutable after construction
//! and safe to share across threads.

use std::collections::HashMap;

use crate::bitset::Mask;

/// Carriers above this size refuse exhaustive subset enumeration in
/// [`OrderMap::is_continuous`]; use [`OrderMap::is_continuous_lattice`]
/// for lattice sources instead.
pub const CONTINUITY_CAP: usize = 20;

const NONE: usize = usize::MAX;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cycle detected: `{0}` and `{1}` are mutually comparable")]
    CycleDetected(String, String),
    #[error("meet of the empty set requires a top element")]
    NoTopForEmptyMeet,
    #[error("join of the empty set requires a bottom element")]
    NoBottomForEmptyJoin,
    #[error("poset has no top element")]
    NoTopElement,
    #[error("map is not isotone")]
    NotIsotone,
    #[error("carrier size {size} exceeds the exhaustive-continuity cap {cap}; use the lattice-mode pairwise check")]
    ContinuityCapExceeded { size: usize, cap: usize },
    #[error("source poset is not a lattice")]
    NotALattice,
    #[error("no image given for element `{0}`")]
    MappingIncomplete(String),
    #[error("conflicting images given for element `{0}`")]
    MappingConflict(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
}

/// A finite partial order. Meet and join tables for pairs are cached at
/// construction; subset meets are computed from down-set masks.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// down[i] = { j : j <= i }
    down: Vec<Mask>,
    /// up[i] = { j : i <= j }
    up: Vec<Mask>,
    top: Option<usize>,
    bottom: Option<usize>,
    /// pairwise meet table, NONE = does not exist
    meet2: Vec<usize>,
    join2: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.down == other.down
    }
}
impl Eq for Poset {}

impl Poset {
    /// Builds a poset from element identifiers and a cover list. The order
    /// is the reflexive-transitive closure of the covers.
    pub fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Result<Poset, PosetError> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(elements.len());
        for &e in elements {
            if index.insert(e.to_string(), names.len()).is_some() {
                return Err(PosetError::DuplicateElement(e.to_string()));
            }
            names.push(e.to_string());
        }
        let n = names.len();
        let lookup = |name: &str| -> Result<usize, PosetError> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
        };

        // up[i] starts as {i} plus direct covers, then closes transitively.
        let mut up: Vec<Mask> = (0..n).map(|i| Mask::single(n, i)).collect();
        for &(lo, hi) in covers {
            let (lo, hi) = (lookup(lo)?, lookup(hi)?);
            up[lo].set(hi);
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = up[i].clone();
                for j in up[i].iter() {
                    acc.union_with(&up[j]);
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Self::from_up_masks(names, index, up)
    }

    /// Builds a poset from an arbitrary relation, verifying that it is
    /// reflexive, antisymmetric, and transitive.
    pub(crate) fn from_relation(
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Poset, PosetError> {
        let n = names.len();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(PosetError::DuplicateElement(name.clone()));
            }
        }
        let mut up: Vec<Mask> = (0..n).map(|_| Mask::empty(n)).collect();
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.set(j);
                }
            }
        }
        for (i, row) in up.iter().enumerate() {
            if !row.get(i) {
                return Err(PosetError::NotAPartialOrder(format!(
                    "not reflexive at `{}`",
                    names[i]
                )));
            }
            for j in row.iter() {
                if !up[j].is_subset_of(row) {
                    return Err(PosetError::NotAPartialOrder(format!(
                        "not transitive at `{}` <= `{}`",
                        names[i], names[j]
                    )));
                }
            }
        }
        Self::from_up_masks(names, index, up)
    }

    fn from_up_masks(
        names: Vec<String>,
        index: HashMap<String, usize>,
        up: Vec<Mask>,
    ) -> Result<Poset, PosetError> {
        let n = names.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if up[i].get(j) && up[j].get(i) {
                    return Err(PosetError::CycleDetected(
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
            }
        }
        let mut down: Vec<Mask> = (0..n).map(|_| Mask::empty(n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].set(i);
            }
        }
        let top = (0..n).find(|&i| down[i].count() == n);
        let bottom = (0..n).find(|&i| up[i].count() == n);

        let mut p = Poset {
            names,
            index,
            down,
            up,
            top,
            bottom,
            meet2: vec![NONE; n * n],
            join2: vec![NONE; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let mut lo = p.down[i].clone();
                lo.intersect_with(&p.down[j]);
                p.meet2[i * n + j] = greatest_of(&lo, &p.down).unwrap_or(NONE);
                let mut hi = p.up[i].clone();
                hi.intersect_with(&p.up[j]);
                p.join2[i * n + j] = least_of(&hi, &p.up).unwrap_or(NONE);
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn idx(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn resolve(&self, name: &str) -> Result<usize, PosetError> {
        self.idx(name)
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool, PosetError> {
        Ok(self.leq_idx(self.resolve(a)?, self.resolve(b)?))
    }

    pub fn top_idx(&self) -> Option<usize> {
        self.top
    }

    pub fn bottom_idx(&self) -> Option<usize> {
        self.bottom
    }

    /// The top element, when it exists.
    pub fn top(&self) -> Option<&str> {
        self.top.map(|i| self.name(i))
    }

    pub fn bottom(&self) -> Option<&str> {
        self.bottom.map(|i| self.name(i))
    }

    pub(crate) fn down_mask(&self, i: usize) -> &Mask {
        &self.down[i]
    }

    /// Greatest lower bound of a set of indices; the empty set yields the
    /// top element when present, `None` otherwise (callers decide whether
    /// that is an error).
    pub(crate) fn meet_of_mask(&self, m: &Mask) -> Option<usize> {
        let mut lower = Mask::full(self.len());
        for i in m.iter() {
            lower.intersect_with(&self.down[i]);
        }
        greatest_of(&lower, &self.down)
    }

    pub(crate) fn join_of_mask(&self, m: &Mask) -> Option<usize> {
        let mut upper = Mask::full(self.len());
        for i in m.iter() {
            upper.intersect_with(&self.up[i]);
        }
        least_of(&upper, &self.up)
    }

    pub fn meet_idx(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.meet2[a * self.len() + b];
        (v != NONE).then_some(v)
    }

    pub fn join_idx(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.join2[a * self.len() + b];
        (v != NONE).then_some(v)
    }

    /// Greatest lower bound of a subset, by element name. `meet([])` is the
    /// top element and errors when no top exists.
    pub fn meet(&self, subset: &[&str]) -> Result<Option<&str>, PosetError> {
        let mut m = Mask::empty(self.len());
        for name in subset {
            m.set(self.resolve(name)?);
        }
        if m.is_empty() {
            return match self.top {
                Some(t) => Ok(Some(self.name(t))),
                None => Err(PosetError::NoTopForEmptyMeet),
            };
        }
        Ok(self.meet_of_mask(&m).map(|i| self.name(i)))
    }

    /// Least upper bound of a subset; dual of [`Poset::meet`].
    pub fn join(&self, subset: &[&str]) -> Result<Option<&str>, PosetError> {
        let mut m = Mask::empty(self.len());
        for name in subset {
            m.set(self.resolve(name)?);
        }
        if m.is_empty() {
            return match self.bottom {
                Some(b) => Ok(Some(self.name(b))),
                None => Err(PosetError::NoBottomForEmptyJoin),
            };
        }
        Ok(self.join_of_mask(&m).map(|i| self.name(i)))
    }

    /// True when every pair has both a meet and a join.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n * n).all(|k| self.meet2[k] != NONE && self.join2[k] != NONE)
    }

    /// The order-theoretic dual: same elements, reversed relation.
    pub fn reversed(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            index: self.index.clone(),
            down: self.up.clone(),
            up: self.down.clone(),
            top: self.bottom,
            bottom: self.top,
            meet2: self.join2.clone(),
            join2: self.meet2.clone(),
        }
    }
}

/// Greatest element of the set `m`, i.e. the `c` in `m` with `m ⊆ down[c]`.
fn greatest_of(m: &Mask, down: &[Mask]) -> Option<usize> {
    m.iter().find(|&c| m.is_subset_of(&down[c]))
}

fn least_of(m: &Mask, up: &[Mask]) -> Option<usize> {
    m.iter().find(|&c| m.is_subset_of(&up[c]))
}

/// A total map between two posets.
#[derive(Clone, Debug)]
pub struct OrderMap {
    pub source: Poset,
    pub target: Poset,
    map: Vec<usize>,
}

impl OrderMap {
    pub fn new(
        source: Poset,
        target: Poset,
        pairs: &[(&str, &str)],
    ) -> Result<OrderMap, PosetError> {
        let mut map = vec![NONE; source.len()];
        for &(from, to) in pairs {
            let f = source.resolve(from)?;
            let t = target.resolve(to)?;
            if map[f] != NONE && map[f] != t {
                return Err(PosetError::MappingConflict(from.to_string()));
            }
            map[f] = t;
        }
        if let Some(i) = map.iter().position(|&v| v == NONE) {
            return Err(PosetError::MappingIncomplete(source.name(i).to_string()));
        }
        Ok(OrderMap {
            source,
            target,
            map,
        })
    }

    pub(crate) fn from_indices(source: Poset, target: Poset, map: Vec<usize>) -> OrderMap {
        debug_assert_eq!(map.len(), source.len());
        debug_assert!(map.iter().all(|&v| v < target.len()));
        OrderMap {
            source,
            target,
            map,
        }
    }

    pub fn apply_idx(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, name: &str) -> Result<&str, PosetError> {
        Ok(self.target.name(self.map[self.source.resolve(name)?]))
    }

    pub fn indices(&self) -> &[usize] {
        &self.map
    }

    /// a <=_1 b implies g(a) <=_2 g(b) for all pairs.
    pub fn is_isotone(&self) -> bool {
        let n = self.source.len();
        (0..n).all(|a| {
            self.source.up[a]
                .iter()
                .all(|b| self.target.leq_idx(self.map[a], self.map[b]))
        })
    }

    /// g(top_1) = top_2; both posets must have tops.
    pub fn is_top_preserving(&self) -> Result<bool, PosetError> {
        let t1 = self.source.top_idx().ok_or(PosetError::NoTopElement)?;
        let t2 = self.target.top_idx().ok_or(PosetError::NoTopElement)?;
        Ok(self.map[t1] == t2)
    }

    /// Exhaustive continuity: for every subset A of the source whose meet
    /// exists, the image meet exists and equals the image of the meet.
    /// Checked over all 2^|P| subsets; errors above [`CONTINUITY_CAP`].
    pub fn is_continuous(&self) -> Result<bool, PosetError> {
        if !self.is_isotone() {
            return Err(PosetError::NotIsotone);
        }
        let n = self.source.len();
        if n > CONTINUITY_CAP {
            return Err(PosetError::ContinuityCapExceeded {
                size: n,
                cap: CONTINUITY_CAP,
            });
        }
        for bits in 0u64..(1u64 << n) {
            let mut src = Mask::empty(n);
            let mut img = Mask::empty(self.target.len());
            for i in 0..n {
                if bits & (1 << i) != 0 {
                    src.set(i);
                    img.set(self.map[i]);
                }
            }
            let src_meet = if src.is_empty() {
                self.source.top_idx()
            } else {
                self.source.meet_of_mask(&src)
            };
            let Some(m) = src_meet else { continue };
            let img_meet = if img.is_empty() {
                self.target.top_idx()
            } else {
                self.target.meet_of_mask(&img)
            };
            if img_meet != Some(self.map[m]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Continuity for lattice sources, checked via pairwise meets plus the
    /// empty subset. For a finite lattice source this agrees with the
    /// exhaustive check: meets of nonempty subsets are iterated pairwise
    /// meets, and the induction carries through the image poset.
    pub fn is_continuous_lattice(&self) -> Result<bool, PosetError> {
        if !self.is_isotone() {
            return Err(PosetError::NotIsotone);
        }
        if !self.source.is_lattice() {
            return Err(PosetError::NotALattice);
        }
        // Empty subset: meet is the source top; image meet is the target top.
        if let Some(t1) = self.source.top_idx() {
            if self.target.top_idx() != Some(self.map[t1]) {
                return Ok(false);
            }
        }
        let n = self.source.len();
        for a in 0..n {
            for b in 0..n {
                let m = self.source.meet_idx(a, b).expect("lattice has all meets");
                let mut img = Mask::empty(self.target.len());
                img.set(self.map[a]);
                img.set(self.map[b]);
                if self.target.meet_of_mask(&img) != Some(self.map[m]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl PartialEq for OrderMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.map == other.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    fn two_chain() -> Poset {
        Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap()
    }

    /// Independent oracle: greatest lower bound by scanning the raw relation.
    fn brute_meet<'a>(p: &'a Poset, subset: &[&str]) -> Option<&'a str> {
        let lowers: Vec<usize> = (0..p.len())
            .filter(|&l| subset.iter().all(|s| p.leq(p.name(l), s).unwrap()))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&m| lowers.iter().all(|&l| p.leq_idx(l, m)))
            .map(|m| p.name(m))
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::from_covers(&["x"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.leq("x", "x").unwrap());
        assert_eq!(p.top(), Some("x"));
    }

    #[test]
    fn two_chain_is_the_boolean_order() {
        let p = two_chain();
        assert!(p.leq("0", "1").unwrap());
        assert!(!p.leq("1", "0").unwrap());
        assert_eq!(p.top(), Some("1"));
        assert_eq!(p.bottom(), Some("0"));
    }

    #[test]
    fn diamond_meets_and_joins() {
        let p = diamond();
        assert_eq!(p.meet(&["a", "b"]).unwrap(), Some("0"));
        assert_eq!(p.join(&["a", "b"]).unwrap(), Some("1"));
        assert_eq!(p.meet(&["a", "b"]).unwrap(), brute_meet(&p, &["a", "b"]));
        assert_eq!(p.top(), Some("1"));
        assert!(p.is_lattice());
    }

    #[test]
    fn meet_is_idempotent_on_singletons() {
        for p in [diamond(), two_chain()] {
            for name in p.names().to_vec() {
                assert_eq!(p.meet(&[&name]).unwrap(), Some(name.as_str()));
                assert_eq!(p.join(&[&name]).unwrap(), Some(name.as_str()));
            }
        }
    }

    #[test]
    fn meet_absent_between_maximal_elements() {
        // Two maximal elements over two incomparable lower bounds: no glb.
        let p = Poset::from_covers(
            &["x", "y", "c", "d"],
            &[("x", "c"), ("x", "d"), ("y", "c"), ("y", "d")],
        )
        .unwrap();
        assert_eq!(p.meet(&["c", "d"]).unwrap(), None);
        assert_eq!(brute_meet(&p, &["c", "d"]), None);
        assert!(!p.is_lattice());
    }

    #[test]
    fn empty_meet_is_top_or_error() {
        assert_eq!(diamond().meet(&[]).unwrap(), Some("1"));
        let antichain = Poset::from_covers(&["x", "y"], &[]).unwrap();
        assert_eq!(antichain.top(), None);
        assert_eq!(antichain.meet(&[]), Err(PosetError::NoTopForEmptyMeet));
        assert_eq!(antichain.join(&[]), Err(PosetError::NoBottomForEmptyJoin));
    }

    #[test]
    fn join_with_top_absorbs() {
        let p = two_chain();
        assert_eq!(p.join(&["0", "1"]).unwrap(), Some("1"));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Poset::from_covers(&["x", "x"], &[]),
            Err(PosetError::DuplicateElement("x".into()))
        );
        assert_eq!(
            Poset::from_covers(&["x"], &[("x", "y")]),
            Err(PosetError::UnknownElement("y".into()))
        );
        assert!(matches!(
            Poset::from_covers(&["x", "y"], &[("x", "y"), ("y", "x")]),
            Err(PosetError::CycleDetected(..))
        ));
    }

    #[test]
    fn isotone_examples() {
        let p = diamond();
        let id = OrderMap::new(
            p.clone(),
            p.clone(),
            &[("0", "0"), ("a", "a"), ("b", "b"), ("1", "1")],
        )
        .unwrap();
        assert!(id.is_isotone());
        assert!(id.is_continuous().unwrap());
        assert!(id.is_top_preserving().unwrap());

        let const_top = OrderMap::new(
            p.clone(),
            p.clone(),
            &[("0", "1"), ("a", "1"), ("b", "1"), ("1", "1")],
        )
        .unwrap();
        assert!(const_top.is_isotone());
        assert!(const_top.is_top_preserving().unwrap());

        let c = two_chain();
        let swap = OrderMap::new(c.clone(), c.clone(), &[("0", "1"), ("1", "0")]).unwrap();
        assert!(!swap.is_isotone());
        assert_eq!(swap.is_continuous(), Err(PosetError::NotIsotone));

        let const_bottom = OrderMap::new(c.clone(), c, &[("0", "0"), ("1", "0")]).unwrap();
        assert!(!const_bottom.is_top_preserving().unwrap());
    }

    #[test]
    fn collapse_of_diamond_is_not_continuous() {
        // a and b both map to 1, but their meet 0 maps to 0 != meet{1,1}.
        let g = OrderMap::new(
            diamond(),
            two_chain(),
            &[("0", "0"), ("a", "1"), ("b", "1"), ("1", "1")],
        )
        .unwrap();
        assert!(g.is_isotone());
        assert!(!g.is_continuous().unwrap());
        assert!(!g.is_continuous_lattice().unwrap());
    }

    #[test]
    fn continuity_cap_is_enforced() {
        let names: Vec<String> = (0..CONTINUITY_CAP + 1).map(|i| format!("e{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let covers: Vec<(&str, &str)> = refs.windows(2).map(|w| (w[0], w[1])).collect();
        let chain = Poset::from_covers(&refs, &covers).unwrap();
        let pairs: Vec<(&str, &str)> = refs.iter().map(|&r| (r, r)).collect();
        let id = OrderMap::new(chain.clone(), chain, &pairs).unwrap();
        assert!(matches!(
            id.is_continuous(),
            Err(PosetError::ContinuityCapExceeded { .. })
        ));
        assert!(id.is_continuous_lattice().unwrap());
    }

    #[test]
    fn mapping_validation() {
        let p = two_chain();
        assert_eq!(
            OrderMap::new(p.clone(), p.clone(), &[("0", "0")]),
            Err(PosetError::MappingIncomplete("1".into()))
        );
        assert_eq!(
            OrderMap::new(p.clone(), p.clone(), &[("0", "0"), ("0", "1"), ("1", "1")]),
            Err(PosetError::MappingConflict("0".into()))
        );
    }

    use proptest::prelude::*;

    /// Random posets over up to six elements, built from a random cover set
    /// that respects the index order (hence acyclic).
    fn arb_poset() -> impl Strategy<Value = Poset> {
        (2usize..=6).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |picks| {
                let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
                let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                let covers: Vec<(&str, &str)> = pairs
                    .iter()
                    .zip(&picks)
                    .filter(|(_, &take)| take)
                    .map(|(&(i, j), _)| (refs[i], refs[j]))
                    .collect();
                Poset::from_covers(&refs, &covers).expect("acyclic by construction")
            })
        })
    }

    proptest! {
        /// meet in p is join in the reversed poset, over all small subsets
        #[test]
        fn meet_and_join_are_duals(p in arb_poset(), bits in 0u8..64) {
            let rev = p.reversed();
            let subset: Vec<&str> = (0..p.len())
                .filter(|i| bits & (1 << i) != 0)
                .map(|i| p.name(i))
                .collect();
            let meet = p.meet(&subset);
            let join = rev.join(&subset);
            match (meet, join) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(PosetError::NoTopForEmptyMeet), Err(PosetError::NoBottomForEmptyJoin)) => {}
                (a, b) => prop_assert!(false, "mismatched results {a:?} vs {b:?}"),
            }
        }

        /// the glb really bounds, and dominates every other lower bound
        #[test]
        fn meet_is_the_greatest_lower_bound(p in arb_poset(), bits in 1u8..64) {
            let subset: Vec<usize> = (0..p.len()).filter(|i| bits & (1 << i) != 0).collect();
            prop_assume!(!subset.is_empty());
            let names: Vec<&str> = subset.iter().map(|&i| p.name(i)).collect();
            if let Some(m) = p.meet(&names).unwrap() {
                let m_idx = p.idx(m).unwrap();
                for &s in &subset {
                    prop_assert!(p.leq_idx(m_idx, s));
                }
                for l in 0..p.len() {
                    if subset.iter().all(|&s| p.leq_idx(l, s)) {
                        prop_assert!(p.leq_idx(l, m_idx));
                    }
                }
            }
        }
    }

    /// On lattice sources, exhaustive continuity agrees with the
    /// pairwise-plus-empty-set check for arbitrary isotone maps.
    #[test]
    fn exhaustive_and_lattice_mode_continuity_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let sources = [diamond(), two_chain()];
        let targets = [diamond(), two_chain()];
        let mut compared = 0;
        while compared < 200 {
            let src = &sources[rng.random_range(0..sources.len())];
            let tgt = &targets[rng.random_range(0..targets.len())];
            let map: Vec<usize> = (0..src.len())
                .map(|_| rng.random_range(0..tgt.len()))
                .collect();
            let g = OrderMap::from_indices(src.clone(), tgt.clone(), map);
            if !g.is_isotone() {
                continue;
            }
            compared += 1;
            assert_eq!(
                g.is_continuous().unwrap(),
                g.is_continuous_lattice().unwrap()
            );
        }
    }
}
