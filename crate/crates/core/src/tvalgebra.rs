//! Truth-value algebras: typed operation tables over a poset with a top
//! element, products with componentwise structure, homomorphism and
//! isomorphism testing, and brute-force irreducibility via congruence-pair
//! factorization.

use std::collections::{BTreeMap, HashMap};

use crate::poset::{OrderMap, Poset, PosetError};

/// Default carrier cap for [`is_irreducible_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 12;

const NONE: usize = usize::MAX;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("poset has no top element")]
    NoTopElement,
    #[error("operation `{op}` expects arity {expected}, got {got}")]
    ArityMismatch {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("operation `{op}` is missing an entry for {tuple}")]
    NonTotalTable { op: String, tuple: String },
    #[error("operation `{op}` has conflicting entries for {tuple}")]
    DuplicateTableEntry { op: String, tuple: String },
    #[error("operation `{op}` output `{output}` is not a carrier element")]
    OutputNotInCarrier { op: String, output: String },
    #[error("unknown element `{0}` in operation table")]
    UnknownElement(String),
    #[error("algebra types differ")]
    TypeMismatch,
    #[error("algebra was not built as a product")]
    NotAProduct,
    #[error("projection side must be 1 or 2, got {0}")]
    InvalidProjectionSide(u8),
    #[error("carrier size {size} exceeds the factorization-search cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },
    #[error("arity list must be non-increasing (violated at position {0})")]
    NonMonotoneArity(usize),
    #[error("expected {expected} operation tables, got {got}")]
    WrongOpCount { expected: usize, got: usize },
    #[error("expected {expected} operation names, got {got}")]
    WrongNameCount { expected: usize, got: usize },
}

/// An algebra type: the list of operation arities, non-increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgType {
    arities: Vec<usize>,
}

impl AlgType {
    pub fn new(arities: Vec<usize>) -> Result<AlgType, AlgebraError> {
        if let Some(i) = arities.windows(2).position(|w| w[0] < w[1]) {
            return Err(AlgebraError::NonMonotoneArity(i + 1));
        }
        Ok(AlgType { arities })
    }

    /// The type (2, 2, 1) of lattice-with-complement signatures.
    pub fn lattice_type() -> AlgType {
        AlgType {
            arities: vec![2, 2, 1],
        }
    }

    pub fn arities(&self) -> &[usize] {
        &self.arities
    }

    pub fn op_count(&self) -> usize {
        self.arities.len()
    }
}

/// A total operation table over a carrier of size `n`: `data[flat(args)]`
/// with the first argument most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    arity: usize,
    data: Vec<usize>,
}

impl OpTable {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, n: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        self.data[args.iter().fold(0, |acc, &a| acc * n + a)]
    }
}

/// Iterator over all `k`-tuples of indices below `n`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).expect("tuple space overflow");
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

/// A truth-value algebra: a poset with a top element plus one total
/// operation table per label of its type. When built by [`TVAlgebra::product`]
/// the two factors are recorded so that projections can be recovered.
#[derive(Clone, Debug)]
pub struct TVAlgebra {
    poset: Poset,
    typ: AlgType,
    ops: Vec<OpTable>,
    op_names: Vec<String>,
    factors: Option<Box<(TVAlgebra, TVAlgebra)>>,
}

impl PartialEq for TVAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
            && self.typ == other.typ
            && self.ops == other.ops
            && self.op_names == other.op_names
    }
}

impl TVAlgebra {
    /// Builds an algebra from name-based table entries, checking totality,
    /// arities, and closure.
    pub fn new(
        poset: Poset,
        typ: AlgType,
        tables: &[Vec<(Vec<&str>, &str)>],
        names: &[&str],
    ) -> Result<TVAlgebra, AlgebraError> {
        if poset.top().is_none() {
            return Err(AlgebraError::NoTopElement);
        }
        if tables.len() != typ.op_count() {
            return Err(AlgebraError::WrongOpCount {
                expected: typ.op_count(),
                got: tables.len(),
            });
        }
        if names.len() != typ.op_count() {
            return Err(AlgebraError::WrongNameCount {
                expected: typ.op_count(),
                got: names.len(),
            });
        }
        let n = poset.len();
        let mut ops = Vec::with_capacity(tables.len());
        for (label, entries) in tables.iter().enumerate() {
            let arity = typ.arities()[label];
            let op = names[label];
            let mut data = vec![NONE; n.pow(arity as u32)];
            for (args, out) in entries {
                if args.len() != arity {
                    return Err(AlgebraError::ArityMismatch {
                        op: op.to_string(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                let mut flat = 0;
                for a in args {
                    let i = poset
                        .idx(a)
                        .ok_or_else(|| AlgebraError::UnknownElement(a.to_string()))?;
                    flat = flat * n + i;
                }
                let out_idx = poset
                    .idx(out)
                    .ok_or_else(|| AlgebraError::OutputNotInCarrier {
                        op: op.to_string(),
                        output: out.to_string(),
                    })?;
                if data[flat] != NONE {
                    return Err(AlgebraError::DuplicateTableEntry {
                        op: op.to_string(),
                        tuple: format!("({})", args.join(", ")),
                    });
                }
                data[flat] = out_idx;
            }
            if let Some(missing) = data.iter().position(|&v| v == NONE) {
                let mut code = missing;
                let mut t = vec![0; arity];
                for slot in t.iter_mut().rev() {
                    *slot = code % n;
                    code /= n;
                }
                let shown: Vec<&str> = t.iter().map(|&i| poset.name(i)).collect();
                return Err(AlgebraError::NonTotalTable {
                    op: op.to_string(),
                    tuple: format!("({})", shown.join(", ")),
                });
            }
            ops.push(OpTable { arity, data });
        }
        Ok(TVAlgebra {
            poset,
            typ,
            ops,
            op_names: names.iter().map(|s| s.to_string()).collect(),
            factors: None,
        })
    }

    /// Builds an algebra from complete index-based tables.
    pub fn from_tables(
        poset: Poset,
        typ: AlgType,
        tables: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<TVAlgebra, AlgebraError> {
        if poset.top().is_none() {
            return Err(AlgebraError::NoTopElement);
        }
        if tables.len() != typ.op_count() {
            return Err(AlgebraError::WrongOpCount {
                expected: typ.op_count(),
                got: tables.len(),
            });
        }
        if names.len() != typ.op_count() {
            return Err(AlgebraError::WrongNameCount {
                expected: typ.op_count(),
                got: names.len(),
            });
        }
        let n = poset.len();
        let mut ops = Vec::with_capacity(tables.len());
        for (label, data) in tables.into_iter().enumerate() {
            let arity = typ.arities()[label];
            if data.len() != n.pow(arity as u32) {
                return Err(AlgebraError::NonTotalTable {
                    op: names[label].clone(),
                    tuple: format!(
                        "table has {} of {} entries",
                        data.len(),
                        n.pow(arity as u32)
                    ),
                });
            }
            if let Some(&bad) = data.iter().find(|&&v| v >= n) {
                return Err(AlgebraError::OutputNotInCarrier {
                    op: names[label].clone(),
                    output: bad.to_string(),
                });
            }
            ops.push(OpTable { arity, data });
        }
        Ok(TVAlgebra {
            poset,
            typ,
            ops,
            op_names: names,
            factors: None,
        })
    }

    /// The one-element algebra of the given type.
    pub fn trivial(typ: AlgType) -> TVAlgebra {
        let poset = Poset::from_covers(&["1"], &[]).expect("singleton poset");
        let tables = typ
            .arities()
            .iter()
            .map(|&a| vec![0; 1usize.pow(a as u32)])
            .collect();
        let names = (0..typ.op_count()).map(|i| format!("op{i}")).collect();
        TVAlgebra::from_tables(poset, typ, tables, names).expect("trivial algebra is valid")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn alg_type(&self) -> &AlgType {
        &self.typ
    }

    pub fn ops(&self) -> &[OpTable] {
        &self.ops
    }

    pub fn op_names(&self) -> &[String] {
        &self.op_names
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn top_idx(&self) -> usize {
        self.poset.top_idx().expect("validated at construction")
    }

    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        self.ops[op].eval(self.len(), args)
    }

    /// The recorded factors when this algebra was built by [`TVAlgebra::product`].
    pub fn product_factors(&self) -> Option<(&TVAlgebra, &TVAlgebra)> {
        self.factors.as_ref().map(|b| (&b.0, &b.1))
    }

    /// Componentwise product. Carrier elements are named `(x|y)`; the top is
    /// the pair of tops.
    pub fn product(a: &TVAlgebra, b: &TVAlgebra) -> Result<TVAlgebra, AlgebraError> {
        if a.typ != b.typ {
            return Err(AlgebraError::TypeMismatch);
        }
        let (n1, n2) = (a.len(), b.len());
        let n = n1 * n2;
        let mut names = Vec::with_capacity(n);
        for x in 0..n1 {
            for y in 0..n2 {
                names.push(format!("({}|{})", a.poset.name(x), b.poset.name(y)));
            }
        }
        let poset = Poset::from_relation(names, |p, q| {
            a.poset.leq_idx(p / n2, q / n2) && b.poset.leq_idx(p % n2, q % n2)
        })?;
        let mut tables = Vec::with_capacity(a.ops.len());
        for (label, &arity) in a.typ.arities().iter().enumerate() {
            let mut data = vec![0; n.pow(arity as u32)];
            for (flat, args) in tuples(n, arity).enumerate() {
                let xs: Vec<usize> = args.iter().map(|&p| p / n2).collect();
                let ys: Vec<usize> = args.iter().map(|&p| p % n2).collect();
                data[flat] = a.apply(label, &xs) * n2 + b.apply(label, &ys);
            }
            tables.push(data);
        }
        let mut prod = TVAlgebra::from_tables(poset, a.typ.clone(), tables, a.op_names.clone())?;
        prod.factors = Some(Box::new((a.clone(), b.clone())));
        Ok(prod)
    }

    /// Left fold of [`TVAlgebra::product`] over a list; the empty product is
    /// the trivial algebra of the given type.
    pub fn product_of_list(
        typ: &AlgType,
        factors: &[TVAlgebra],
    ) -> Result<TVAlgebra, AlgebraError> {
        match factors.split_first() {
            None => Ok(TVAlgebra::trivial(typ.clone())),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for f in rest {
                    acc = TVAlgebra::product(&acc, f)?;
                }
                Ok(acc)
            }
        }
    }

    /// A copy with carrier positions permuted: element at new index `i` is
    /// the old element `perm[i]`. Tables and order are rewritten to match.
    pub fn relabeled(&self, perm: &[usize]) -> TVAlgebra {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let names: Vec<String> = perm
            .iter()
            .map(|&old| self.poset.name(old).to_string())
            .collect();
        let poset = Poset::from_relation(names, |i, j| self.poset.leq_idx(perm[i], perm[j]))
            .expect("permutation preserves order axioms");
        let tables = self
            .ops
            .iter()
            .map(|op| {
                let mut data = vec![0; op.data.len()];
                for (flat, args) in tuples(n, op.arity).enumerate() {
                    let old_args: Vec<usize> = args.iter().map(|&i| perm[i]).collect();
                    data[flat] = inv[op.eval(n, &old_args)];
                }
                data
            })
            .collect();
        TVAlgebra::from_tables(poset, self.typ.clone(), tables, self.op_names.clone())
            .expect("relabeling preserves validity")
    }
}

/// Natural projection of a product onto one factor (`side` is 1 or 2).
pub fn projection(prod: &TVAlgebra, side: u8) -> Result<AlgebraMap, AlgebraError> {
    let (a, b) = prod.product_factors().ok_or(AlgebraError::NotAProduct)?;
    let n2 = b.len();
    let target = match side {
        1 => a.clone(),
        2 => b.clone(),
        other => return Err(AlgebraError::InvalidProjectionSide(other)),
    };
    let map = (0..prod.len())
        .map(|p| if side == 1 { p / n2 } else { p % n2 })
        .collect();
    Ok(AlgebraMap::from_indices(prod.clone(), target, map))
}

/// A total map between two algebras of equal type.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    pub source: TVAlgebra,
    pub target: TVAlgebra,
    map: Vec<usize>,
}

impl AlgebraMap {
    pub fn new(
        source: TVAlgebra,
        target: TVAlgebra,
        pairs: &[(&str, &str)],
    ) -> Result<AlgebraMap, AlgebraError> {
        if source.typ != target.typ {
            return Err(AlgebraError::TypeMismatch);
        }
        let order = OrderMap::new(source.poset.clone(), target.poset.clone(), pairs)?;
        let map = order.indices().to_vec();
        Ok(AlgebraMap {
            source,
            target,
            map,
        })
    }

    pub fn from_indices(source: TVAlgebra, target: TVAlgebra, map: Vec<usize>) -> AlgebraMap {
        debug_assert_eq!(map.len(), source.len());
        AlgebraMap {
            source,
            target,
            map,
        }
    }

    pub fn identity(a: &TVAlgebra) -> AlgebraMap {
        AlgebraMap::from_indices(a.clone(), a.clone(), (0..a.len()).collect())
    }

    pub fn apply_idx(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, name: &str) -> Option<&str> {
        let i = self.source.poset.idx(name)?;
        Some(self.target.poset.name(self.map[i]))
    }

    pub fn indices(&self) -> &[usize] {
        &self.map
    }

    pub fn order_map(&self) -> OrderMap {
        OrderMap::from_indices(
            self.source.poset.clone(),
            self.target.poset.clone(),
            self.map.clone(),
        )
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        self.map
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

/// True when the map commutes with every operation table and is isotone,
/// continuous, and top-preserving. Continuity is exhaustive up to the poset
/// cap; beyond it, lattice sources fall back to the pairwise check.
pub fn is_homomorphism(g: &AlgebraMap) -> Result<bool, AlgebraError> {
    if g.source.typ != g.target.typ {
        return Err(AlgebraError::TypeMismatch);
    }
    let n = g.source.len();
    for (label, op) in g.source.ops.iter().enumerate() {
        for args in tuples(n, op.arity()) {
            let lhs = g.map[op.eval(n, &args)];
            let imgs: Vec<usize> = args.iter().map(|&a| g.map[a]).collect();
            if lhs != g.target.apply(label, &imgs) {
                return Ok(false);
            }
        }
    }
    let order = g.order_map();
    if !order.is_isotone() {
        return Ok(false);
    }
    if !order.is_top_preserving()? {
        return Ok(false);
    }
    let continuous = match order.is_continuous() {
        Ok(v) => v,
        Err(PosetError::ContinuityCapExceeded { .. }) => order.is_continuous_lattice()?,
        Err(e) => return Err(e.into()),
    };
    Ok(continuous)
}

/// Full isomorphism verification for a candidate bijection: order-reflecting
/// both ways, commuting with every table, top to top. An order-isomorphism
/// preserves every existing meet, so continuity holds in both directions.
pub(crate) fn verify_iso(a: &TVAlgebra, b: &TVAlgebra, map: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if a.poset.leq_idx(i, j) != b.poset.leq_idx(map[i], map[j]) {
                return false;
            }
        }
    }
    if map[a.top_idx()] != b.top_idx() {
        return false;
    }
    for (label, op) in a.ops.iter().enumerate() {
        for args in tuples(n, op.arity()) {
            let imgs: Vec<usize> = args.iter().map(|&x| map[x]).collect();
            if map[op.eval(n, &args)] != b.apply(label, &imgs) {
                return false;
            }
        }
    }
    true
}

/// Iterative color refinement shared between the two algebras so color ids
/// are comparable: elements start from their order profile (order-ideal
/// size, filter size) and are split by operation fingerprints until stable.
fn refine_colors(a: &TVAlgebra, b: &TVAlgebra) -> (Vec<u64>, Vec<u64>) {
    let order_profile = |alg: &TVAlgebra, i: usize| -> u64 {
        let n = alg.len();
        let d = alg.poset.down_mask(i).count() as u64;
        let u = (0..n).filter(|&j| alg.poset.leq_idx(i, j)).count() as u64;
        (d << 32) | u
    };
    let mut ca: Vec<u64> = (0..a.len()).map(|i| order_profile(a, i)).collect();
    let mut cb: Vec<u64> = (0..b.len()).map(|i| order_profile(b, i)).collect();

    let sig = |alg: &TVAlgebra, colors: &[u64], i: usize| -> Vec<u64> {
        let n = alg.len();
        let mut s = vec![colors[i]];
        for op in &alg.ops {
            match op.arity() {
                0 => s.push((op.eval(n, &[]) == i) as u64),
                1 => s.push(colors[op.eval(n, &[i])]),
                2 => {
                    let mut rows: Vec<(u64, u64, u64)> = (0..n)
                        .map(|j| {
                            (
                                colors[j],
                                colors[op.eval(n, &[i, j])],
                                colors[op.eval(n, &[j, i])],
                            )
                        })
                        .collect();
                    rows.sort_unstable();
                    for (x, y, z) in rows {
                        s.extend([x, y, z]);
                    }
                }
                k => {
                    let mut acc = 0u64;
                    for args in tuples(n, k).filter(|t| t[0] == i) {
                        acc = acc
                            .wrapping_mul(1099511628211)
                            .wrapping_add(colors[op.eval(n, &args)]);
                    }
                    s.push(acc);
                }
            }
        }
        s
    };
    for _ in 0..a.len().max(b.len()) {
        let sa: Vec<Vec<u64>> = (0..a.len()).map(|i| sig(a, &ca, i)).collect();
        let sb: Vec<Vec<u64>> = (0..b.len()).map(|i| sig(b, &cb, i)).collect();
        let mut palette: BTreeMap<&[u64], u64> = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            let next = palette.len() as u64;
            palette.entry(s.as_slice()).or_insert(next);
        }
        let next_a: Vec<u64> = sa.iter().map(|s| palette[s.as_slice()]).collect();
        let next_b: Vec<u64> = sb.iter().map(|s| palette[s.as_slice()]).collect();
        if next_a == ca && next_b == cb {
            break;
        }
        ca = next_a;
        cb = next_b;
    }
    (ca, cb)
}

fn locally_consistent(a: &TVAlgebra, b: &TVAlgebra, map: &[usize], newly: usize) -> bool {
    let n = a.len();
    let y = map[newly];
    for (j, &mj) in map.iter().enumerate() {
        if mj == NONE {
            continue;
        }
        if a.poset.leq_idx(newly, j) != b.poset.leq_idx(y, mj)
            || a.poset.leq_idx(j, newly) != b.poset.leq_idx(mj, y)
        {
            return false;
        }
    }
    for (label, op) in a.ops.iter().enumerate() {
        match op.arity() {
            0 => {
                let r = op.eval(n, &[]);
                if r == newly && b.apply(label, &[]) != y {
                    return false;
                }
            }
            1 => {
                for x in 0..n {
                    if map[x] == NONE {
                        continue;
                    }
                    let r = op.eval(n, &[x]);
                    if (x == newly || r == newly)
                        && map[r] != NONE
                        && b.apply(label, &[map[x]]) != map[r]
                    {
                        return false;
                    }
                }
            }
            2 => {
                for x in 0..n {
                    if map[x] == NONE {
                        continue;
                    }
                    for t in [[x, newly], [newly, x]] {
                        let r = op.eval(n, &t);
                        if map[r] != NONE && b.apply(label, &[map[t[0]], map[t[1]]]) != map[r] {
                            return false;
                        }
                    }
                }
            }
            k => {
                for args in tuples(n, k) {
                    if !args.contains(&newly) || args.iter().any(|&x| map[x] == NONE) {
                        continue;
                    }
                    let r = op.eval(n, &args);
                    if map[r] != NONE {
                        let imgs: Vec<usize> = args.iter().map(|&x| map[x]).collect();
                        if b.apply(label, &imgs) != map[r] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Finds a bijective homomorphism whose inverse is also a homomorphism,
/// i.e. an isomorphism. Absence is a value, not an error. `forced` seeds
/// the backtracking with required source-to-target assignments.
pub fn find_isomorphism_seeded(
    a: &TVAlgebra,
    b: &TVAlgebra,
    forced: &[(usize, usize)],
) -> Option<AlgebraMap> {
    if a.typ != b.typ || a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let (ca, cb) = refine_colors(a, b);
    {
        let mut count_a: HashMap<u64, isize> = HashMap::new();
        for &c in &ca {
            *count_a.entry(c).or_default() += 1;
        }
        for &c in &cb {
            *count_a.entry(c).or_default() -= 1;
        }
        if count_a.values().any(|&v| v != 0) {
            return None;
        }
    }

    let mut map = vec![NONE; n];
    let mut used = vec![false; n];
    for &(src, tgt) in forced {
        if ca[src] != cb[tgt] {
            return None;
        }
        if map[src] == tgt {
            continue;
        }
        if map[src] != NONE || used[tgt] {
            return None;
        }
        map[src] = tgt;
        used[tgt] = true;
        if !locally_consistent(a, b, &map, src) {
            return None;
        }
    }

    // Small color classes first keeps the branching factor down.
    let mut order: Vec<usize> = (0..n).filter(|&i| map[i] == NONE).collect();
    let class_size = |i: usize| ca.iter().filter(|&&c| c == ca[i]).count();
    order.sort_by_key(|&i| (class_size(i), i));

    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &TVAlgebra,
        b: &TVAlgebra,
        ca: &[u64],
        cb: &[u64],
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return verify_iso(a, b, map);
        }
        let i = order[pos];
        for y in 0..b.len() {
            if used[y] || cb[y] != ca[i] {
                continue;
            }
            map[i] = y;
            used[y] = true;
            if locally_consistent(a, b, map, i) && search(a, b, ca, cb, order, pos + 1, map, used) {
                return true;
            }
            map[i] = NONE;
            used[y] = false;
        }
        false
    }

    if search(a, b, &ca, &cb, &order, 0, &mut map, &mut used) {
        Some(AlgebraMap::from_indices(a.clone(), b.clone(), map))
    } else {
        None
    }
}

/// See [`find_isomorphism_seeded`].
pub fn find_isomorphism(a: &TVAlgebra, b: &TVAlgebra) -> Option<AlgebraMap> {
    find_isomorphism_seeded(a, b, &[])
}

/// An equal-block-size partition of the carrier, a candidate projection kernel.
struct Partition {
    /// block index of each element
    block_of: Vec<usize>,
    blocks: usize,
}

/// Enumerates partitions of `0..n` into `blocks` blocks of equal size,
/// canonically: each new block is seeded by the least unassigned element.
fn equal_partitions(n: usize, blocks: usize) -> Vec<Partition> {
    let size = n / blocks;
    let mut out = Vec::new();
    let mut block_of = vec![NONE; n];

    fn fill_block(
        n: usize,
        size: usize,
        blocks: usize,
        next_block: usize,
        block_of: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let Some(seed) = block_of.iter().position(|&b| b == NONE) else {
            out.push(Partition {
                block_of: block_of.clone(),
                blocks,
            });
            return;
        };
        block_of[seed] = next_block;
        let free: Vec<usize> = (seed + 1..n).filter(|&i| block_of[i] == NONE).collect();
        choose_members(
            &free,
            0,
            size - 1,
            n,
            size,
            blocks,
            next_block,
            block_of,
            out,
        );
        block_of[seed] = NONE;
    }

    #[allow(clippy::too_many_arguments)]
    fn choose_members(
        free: &[usize],
        start: usize,
        remaining: usize,
        n: usize,
        size: usize,
        blocks: usize,
        next_block: usize,
        block_of: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            fill_block(n, size, blocks, next_block + 1, block_of, out);
            return;
        }
        for idx in start..free.len() {
            if free.len() - idx < remaining {
                break;
            }
            block_of[free[idx]] = next_block;
            choose_members(
                free,
                idx + 1,
                remaining - 1,
                n,
                size,
                blocks,
                next_block,
                block_of,
                out,
            );
            block_of[free[idx]] = NONE;
        }
    }

    fill_block(n, size, blocks, 0, &mut block_of, &mut out);
    out
}

/// Attempts to build the quotient algebra of a partition; `None` when the
/// partition is not a congruence (order or operations fail to descend).
fn quotient(a: &TVAlgebra, part: &Partition) -> Option<TVAlgebra> {
    let n = a.len();
    let k = part.blocks;
    // induced relation: B <= C iff some x in B lies below some y in C
    let mut rel = vec![false; k * k];
    for x in 0..n {
        for y in 0..n {
            if a.poset.leq_idx(x, y) {
                rel[part.block_of[x] * k + part.block_of[y]] = true;
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && rel[i * k + j] && rel[j * k + i] {
                return None;
            }
            for l in 0..k {
                if rel[i * k + j] && rel[j * k + l] && !rel[i * k + l] {
                    return None;
                }
            }
        }
    }
    let mut tables = Vec::with_capacity(a.ops.len());
    for op in &a.ops {
        let mut data = vec![NONE; k.pow(op.arity() as u32)];
        for args in tuples(n, op.arity()) {
            let mut flat = 0;
            for &x in &args {
                flat = flat * k + part.block_of[x];
            }
            let out = part.block_of[op.eval(n, &args)];
            if data[flat] == NONE {
                data[flat] = out;
            } else if data[flat] != out {
                return None;
            }
        }
        tables.push(data);
    }
    let names: Vec<String> = (0..k)
        .map(|b| {
            let rep = part.block_of.iter().position(|&v| v == b).unwrap();
            format!("[{}]", a.poset.name(rep))
        })
        .collect();
    let poset = Poset::from_relation(names, |i, j| rel[i * k + j]).ok()?;
    poset.top_idx()?;
    TVAlgebra::from_tables(poset, a.typ.clone(), tables, a.op_names.clone()).ok()
}

/// Searches for a factorization of `a` into a product of two non-trivial
/// algebras, returning a verified isomorphism onto the product. Candidates
/// are pairs of equal-block congruence partitions whose blocks intersect in
/// exactly one element (the kernels of the two projections).
pub fn find_factorization(a: &TVAlgebra, cap: usize) -> Result<Option<AlgebraMap>, AlgebraError> {
    let n = a.len();
    if n > cap {
        return Err(AlgebraError::CarrierTooLarge { size: n, cap });
    }
    for d1 in 2..=n / 2 {
        if !n.is_multiple_of(d1) {
            continue;
        }
        let d2 = n / d1;
        let quots1: Vec<(Partition, TVAlgebra)> = equal_partitions(n, d1)
            .into_iter()
            .filter_map(|p| quotient(a, &p).map(|q| (p, q)))
            .collect();
        if quots1.is_empty() {
            continue;
        }
        let quots2: Vec<(Partition, TVAlgebra)> = equal_partitions(n, d2)
            .into_iter()
            .filter_map(|p| quotient(a, &p).map(|q| (p, q)))
            .collect();
        for (p1, q1) in &quots1 {
            for (p2, q2) in &quots2 {
                let mut cell = vec![false; d1 * d2];
                let mut grid = true;
                for x in 0..n {
                    let c = p1.block_of[x] * d2 + p2.block_of[x];
                    if std::mem::replace(&mut cell[c], true) {
                        grid = false;
                        break;
                    }
                }
                if !grid {
                    continue;
                }
                let prod = TVAlgebra::product(q1, q2)?;
                let map: Vec<usize> = (0..n)
                    .map(|x| p1.block_of[x] * d2 + p2.block_of[x])
                    .collect();
                if verify_iso(a, &prod, &map) {
                    return Ok(Some(AlgebraMap::from_indices(a.clone(), prod, map)));
                }
            }
        }
    }
    Ok(None)
}

/// True iff no factorization into two non-trivial algebras exists; searches
/// congruence pairs up to the default carrier cap.
pub fn is_irreducible_bruteforce(a: &TVAlgebra) -> Result<bool, AlgebraError> {
    is_irreducible_bruteforce_with_cap(a, BRUTEFORCE_CAP)
}

pub fn is_irreducible_bruteforce_with_cap(a: &TVAlgebra, cap: usize) -> Result<bool, AlgebraError> {
    Ok(find_factorization(a, cap)?.is_none())
}

/// The two-element Boolean algebra with the standard operations.
pub fn boolean_2() -> TVAlgebra {
    let poset = Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap();
    TVAlgebra::from_tables(
        poset,
        AlgType::lattice_type(),
        vec![vec![0, 0, 0, 1], vec![0, 1, 1, 1], vec![1, 0]],
        vec!["and".into(), "or".into(), "not".into()],
    )
    .unwrap()
}

// Drop the factor record so an algebra can stand in for a file-loaded or
// enumerated copy in tests.
#[cfg(test)]
pub(crate) fn strip_factors(mut a: TVAlgebra) -> TVAlgebra {
    a.factors = None;
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alg_type_must_be_non_increasing() {
        assert!(AlgType::new(vec![2, 2, 1]).is_ok());
        assert!(AlgType::new(vec![]).is_ok());
        assert_eq!(
            AlgType::new(vec![1, 2]),
            Err(AlgebraError::NonMonotoneArity(1))
        );
    }

    #[test]
    fn trivial_algebra_has_one_element() {
        let one = TVAlgebra::trivial(AlgType::lattice_type());
        assert_eq!(one.len(), 1);
        assert_eq!(one.apply(0, &[0, 0]), 0);
        assert_eq!(one.apply(2, &[0]), 0);

        let bare = TVAlgebra::trivial(AlgType::new(vec![]).unwrap());
        assert_eq!(bare.len(), 1);
        assert!(bare.ops().is_empty());
    }

    #[test]
    fn non_total_table_is_rejected() {
        let poset = Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap();
        let err = TVAlgebra::new(
            poset,
            AlgType::lattice_type(),
            &[
                vec![
                    (vec!["0", "0"], "0"),
                    (vec!["0", "1"], "0"),
                    (vec!["1", "0"], "0"),
                    (vec!["1", "1"], "1"),
                ],
                vec![
                    (vec!["0", "0"], "0"),
                    (vec!["0", "1"], "1"),
                    (vec!["1", "0"], "1"),
                    (vec!["1", "1"], "1"),
                ],
                vec![(vec!["0"], "1")],
            ],
            &["and", "or", "not"],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::NonTotalTable { .. }));
    }

    #[test]
    fn no_top_is_rejected() {
        let poset = Poset::from_covers(&["x", "y"], &[]).unwrap();
        let err = TVAlgebra::new(poset, AlgType::new(vec![]).unwrap(), &[], &[]).unwrap_err();
        assert_eq!(err, AlgebraError::NoTopElement);
    }

    #[test]
    fn product_of_two_twos_is_the_four_element_boolean_algebra() {
        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        assert_eq!(four.len(), 4);
        assert_eq!(four.poset().top(), Some("(1|1)"));
        assert_eq!(
            four.poset().meet(&["(1|0)", "(0|1)"]).unwrap(),
            Some("(0|0)")
        );
    }

    #[test]
    fn product_with_trivial_is_isomorphic_to_the_factor() {
        let two = boolean_2();
        let one = TVAlgebra::trivial(AlgType::lattice_type());
        let p = TVAlgebra::product(&two, &one).unwrap();
        assert!(find_isomorphism(&p, &two).is_some());
        let q = TVAlgebra::product(&one, &two).unwrap();
        assert!(find_isomorphism(&q, &two).is_some());
    }

    #[test]
    fn projections_behave_and_are_homomorphisms() {
        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let p1 = projection(&four, 1).unwrap();
        let p2 = projection(&four, 2).unwrap();
        assert_eq!(p1.apply("(1|0)"), Some("1"));
        assert_eq!(p2.apply("(1|0)"), Some("0"));
        assert!(is_homomorphism(&p1).unwrap());
        assert!(is_homomorphism(&p2).unwrap());
        assert_eq!(projection(&two, 1).unwrap_err(), AlgebraError::NotAProduct);
        assert_eq!(
            projection(&four, 3).unwrap_err(),
            AlgebraError::InvalidProjectionSide(3)
        );
    }

    #[test]
    fn identity_is_a_homomorphism_and_negation_swap_is_not() {
        let two = boolean_2();
        assert!(is_homomorphism(&AlgebraMap::identity(&two)).unwrap());
        let swap = AlgebraMap::new(two.clone(), two.clone(), &[("0", "1"), ("1", "0")]).unwrap();
        assert!(!is_homomorphism(&swap).unwrap());
    }

    #[test]
    fn isomorphism_found_and_refused() {
        let two = boolean_2();
        let one = TVAlgebra::trivial(AlgType::lattice_type());
        let id = find_isomorphism(&two, &two).unwrap();
        assert_eq!(id.indices(), &[0, 1]);
        assert!(find_isomorphism(&two, &one).is_none());
    }

    #[test]
    fn product_matches_a_directly_built_diamond() {
        let elements = ["bot", "p", "q", "top"];
        let diamond = Poset::from_covers(
            &elements,
            &[("bot", "p"), ("bot", "q"), ("p", "top"), ("q", "top")],
        )
        .unwrap();
        let meet = |x: usize, y: usize| {
            diamond
                .meet(&[elements[x], elements[y]])
                .unwrap()
                .and_then(|m| diamond.idx(m))
                .unwrap()
        };
        let join = |x: usize, y: usize| {
            diamond
                .join(&[elements[x], elements[y]])
                .unwrap()
                .and_then(|m| diamond.idx(m))
                .unwrap()
        };
        let mut and_t = Vec::new();
        let mut or_t = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                and_t.push(meet(x, y));
                or_t.push(join(x, y));
            }
        }
        let neg_t = vec![3, 2, 1, 0];
        let direct = TVAlgebra::from_tables(
            diamond,
            AlgType::lattice_type(),
            vec![and_t, or_t, neg_t],
            vec!["and".into(), "or".into(), "not".into()],
        )
        .unwrap();

        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let iso = find_isomorphism(&four, &direct).expect("2x2 is the diamond");
        assert!(is_homomorphism(&iso).unwrap());
        assert!(find_isomorphism(&direct, &four).is_some());
    }

    #[test]
    fn product_is_commutative_up_to_isomorphism() {
        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let ab = TVAlgebra::product(&four, &two).unwrap();
        let ba = TVAlgebra::product(&two, &four).unwrap();
        assert!(find_isomorphism(&ab, &ba).is_some());
        assert!(find_isomorphism(&ba, &ab).is_some());
    }

    #[test]
    fn irreducibility_bruteforce_basics() {
        let two = boolean_2();
        assert!(is_irreducible_bruteforce(&two).unwrap());
        let one = TVAlgebra::trivial(AlgType::lattice_type());
        assert!(is_irreducible_bruteforce(&one).unwrap());
        let four = TVAlgebra::product(&two, &two).unwrap();
        assert!(!is_irreducible_bruteforce(&four).unwrap());
        // a product not marked as such is still recognized as reducible
        assert!(!is_irreducible_bruteforce(&strip_factors(four.clone())).unwrap());
        let eight = TVAlgebra::product(&four, &two).unwrap();
        assert!(!is_irreducible_bruteforce(&eight).unwrap());

        let sixteen = TVAlgebra::product(&eight, &two).unwrap();
        assert_eq!(
            is_irreducible_bruteforce(&sixteen).unwrap_err(),
            AlgebraError::CarrierTooLarge {
                size: 16,
                cap: BRUTEFORCE_CAP
            }
        );
        assert!(!is_irreducible_bruteforce_with_cap(&eight, 8).unwrap());
    }

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let shuffled = four.relabeled(&[2, 0, 3, 1]);
        assert!(find_isomorphism(&four, &shuffled).is_some());
    }

    #[test]
    fn isomorphism_search_is_symmetric_in_success() {
        let two = boolean_2();
        let four = TVAlgebra::product(&two, &two).unwrap();
        let eight = TVAlgebra::product(&four, &two).unwrap();
        let pairs = [
            (&two, &two),
            (&two, &four),
            (&four, &eight),
            (&eight, &eight),
        ];
        for (a, b) in pairs {
            assert_eq!(
                find_isomorphism(a, b).is_some(),
                find_isomorphism(b, a).is_some()
            );
        }
        // same size, genuinely different structure: the cube versus MO3
        let mo3 = crate::oml::mo(3).into_algebra();
        assert!(find_isomorphism(&eight, &mo3).is_none());
        assert!(find_isomorphism(&mo3, &eight).is_none());
    }
}
