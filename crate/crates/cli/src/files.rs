//! Line-oriented text formats for algebras, structures, semantics families,
//! formula lists, deduction systems, and proofs, plus the JSON alternative.
//! Referenced files are resolved relative to the referencing file and their
//! format is auto-detected (JSON when the first byte is `{`).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use omlogic_core::deduction::{DeductionSystem, Justification, Pattern, Proof, Rule, TermPattern};
use omlogic_core::harness::{ClosureMode, FiniteSemantics};
use omlogic_core::poset::Poset;
use omlogic_core::semantics::{Interpretation, Structure, StructureOptions};
use omlogic_core::syntax::{parse_wff, Language, Term, Wff};
use omlogic_core::tvalgebra::{AlgType, TVAlgebra};

const MAX_INCLUDE_DEPTH: usize = 16;

#[derive(Debug, thiserror::Error)]
#[error("{path}:{line}: {message}")]
pub struct FileError {
    pub path: String,
    pub line: usize,
    pub message: String,
}

impl FileError {
    fn new(path: &Path, line: usize, message: impl Into<String>) -> FileError {
        FileError {
            path: path.display().to_string(),
            line,
            message: message.into(),
        }
    }
}

type Result<T> = std::result::Result<T, FileError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| FileError::new(path, 0, e.to_string()))
}

fn is_json(content: &str) -> bool {
    content.trim_start().starts_with('{')
}

fn resolve(base: &Path, relative: &str) -> PathBuf {
    let rel = Path::new(relative);
    if rel.is_absolute() {
        rel.to_path_buf()
    } else {
        base.parent().unwrap_or_else(|| Path::new(".")).join(rel)
    }
}

/// Meaningful lines of a text file: (line number, content) with comments and
/// blanks dropped.
fn lines(content: &str) -> Vec<(usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

/// Splits on top-level commas, respecting parenthesis nesting.
fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        parts.push(current.trim().to_string());
    }
    parts
}

/// Parses one `args:result` table entry token; `arity` disambiguates names
/// that themselves contain parentheses.
fn parse_entry(
    path: &Path,
    line: usize,
    token: &str,
    arity: usize,
) -> Result<(Vec<String>, String)> {
    let mut depth = 0usize;
    let mut split_at = None;
    for (i, c) in token.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ':' if depth == 0 => {
                split_at = Some(i);
                break;
            }
            _ => {}
        }
    }
    let Some(i) = split_at else {
        return Err(FileError::new(
            path,
            line,
            format!("table entry `{token}` is missing `:`"),
        ));
    };
    let (args_str, result) = (&token[..i], &token[i + 1..]);
    if result.is_empty() {
        return Err(FileError::new(
            path,
            line,
            format!("table entry `{token}` has no result"),
        ));
    }
    let args = match arity {
        0 => {
            if !args_str.is_empty() {
                return Err(FileError::new(
                    path,
                    line,
                    format!("nullary entry `{token}` must look like `:result`"),
                ));
            }
            Vec::new()
        }
        1 => vec![args_str.to_string()],
        _ => {
            let inner = args_str
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| {
                    FileError::new(path, line, format!("entry `{token}` needs `(a,b,...):r`"))
                })?;
            split_top_level(inner)
        }
    };
    if args.len() != arity {
        return Err(FileError::new(
            path,
            line,
            format!(
                "entry `{token}` has {} argument(s), arity is {arity}",
                args.len()
            ),
        ));
    }
    Ok((args, result.to_string()))
}

// ---------------------------------------------------------------------------
// algebra files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum TableJson {
    Derived(String),
    Entries(Vec<(Vec<String>, String)>),
}

/// JSON form of an algebra file. Either `product` or the explicit fields.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AlgebraJson {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arities: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ops: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<BTreeMap<String, TableJson>>,
}

pub fn load_algebra(path: &Path) -> Result<TVAlgebra> {
    load_algebra_depth(path, 0)
}

fn load_algebra_depth(path: &Path, depth: usize) -> Result<TVAlgebra> {
    if depth > MAX_INCLUDE_DEPTH {
        return Err(FileError::new(path, 0, "algebra reference chain too deep"));
    }
    let content = read(path)?;
    if is_json(&content) {
        let json: AlgebraJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        return algebra_from_json(path, json, depth);
    }
    algebra_from_text(path, &content, depth)
}

fn algebra_from_json(path: &Path, json: AlgebraJson, depth: usize) -> Result<TVAlgebra> {
    if let Some((a, b)) = json.product {
        let left = load_algebra_depth(&resolve(path, &a), depth + 1)?;
        let right = load_algebra_depth(&resolve(path, &b), depth + 1)?;
        return TVAlgebra::product(&left, &right)
            .map_err(|e| FileError::new(path, 0, e.to_string()));
    }
    let arities = json
        .arities
        .ok_or_else(|| FileError::new(path, 0, "missing `arities`"))?;
    let ops = json
        .ops
        .ok_or_else(|| FileError::new(path, 0, "missing `ops`"))?;
    let elements = json
        .elements
        .ok_or_else(|| FileError::new(path, 0, "missing `elements`"))?;
    let covers = json.covers.unwrap_or_default();
    let tables = json.tables.unwrap_or_default();
    let table_specs: Vec<(String, TableSpec)> = ops
        .iter()
        .map(|op| {
            let spec = match tables.get(op) {
                Some(TableJson::Derived(kind)) if kind == "derived-meet" => TableSpec::DerivedMeet,
                Some(TableJson::Derived(kind)) if kind == "derived-join" => TableSpec::DerivedJoin,
                Some(TableJson::Derived(kind)) => {
                    return Err(FileError::new(
                        path,
                        0,
                        format!("unknown table kind `{kind}`"),
                    ))
                }
                Some(TableJson::Entries(entries)) => TableSpec::Entries(entries.clone()),
                None => return Err(FileError::new(path, 0, format!("missing table for `{op}`"))),
            };
            Ok((op.clone(), spec))
        })
        .collect::<Result<_>>()?;
    build_algebra(path, 0, arities, ops, elements, covers, table_specs)
}

enum TableSpec {
    DerivedMeet,
    DerivedJoin,
    Entries(Vec<(Vec<String>, String)>),
}

fn algebra_from_text(path: &Path, content: &str, depth: usize) -> Result<TVAlgebra> {
    let lines = lines(content);
    let mut it = lines.iter();
    match it.next() {
        Some((_, l)) if l.starts_with("algebra") => {}
        other => {
            let line = other.map(|(n, _)| *n).unwrap_or(1);
            return Err(FileError::new(path, line, "expected header `algebra v1`"));
        }
    }

    let mut arities: Option<Vec<usize>> = None;
    let mut ops: Option<Vec<String>> = None;
    let mut elements: Option<Vec<String>> = None;
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut tables: Vec<(String, TableSpec, usize)> = Vec::new();

    for &(n, line) in it {
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match keyword {
            "product" => {
                if rest.len() != 2 {
                    return Err(FileError::new(path, n, "product needs two file paths"));
                }
                let left = load_algebra_depth(&resolve(path, rest[0]), depth + 1)?;
                let right = load_algebra_depth(&resolve(path, rest[1]), depth + 1)?;
                return TVAlgebra::product(&left, &right)
                    .map_err(|e| FileError::new(path, n, e.to_string()));
            }
            "type" => {
                let parsed: std::result::Result<Vec<usize>, _> =
                    rest.iter().map(|w| w.parse()).collect();
                arities = Some(parsed.map_err(|_| FileError::new(path, n, "bad arity list"))?);
            }
            "ops" => ops = Some(rest.iter().map(|s| s.to_string()).collect()),
            "elements" => elements = Some(rest.iter().map(|s| s.to_string()).collect()),
            "covers" => {
                for pair in rest {
                    let (lo, hi) = pair.split_once('<').ok_or_else(|| {
                        FileError::new(path, n, format!("cover `{pair}` needs the form lo<hi"))
                    })?;
                    covers.push((lo.to_string(), hi.to_string()));
                }
            }
            "table" => {
                let Some((&op, entries)) = rest.split_first() else {
                    return Err(FileError::new(path, n, "table needs an operation name"));
                };
                let spec = match entries {
                    ["derived-meet"] => TableSpec::DerivedMeet,
                    ["derived-join"] => TableSpec::DerivedJoin,
                    tokens => {
                        let Some(arities) = &arities else {
                            return Err(FileError::new(path, n, "`type` must precede tables"));
                        };
                        let Some(ops) = &ops else {
                            return Err(FileError::new(path, n, "`ops` must precede tables"));
                        };
                        let Some(label) = ops.iter().position(|o| o == op) else {
                            return Err(FileError::new(path, n, format!("unknown op `{op}`")));
                        };
                        let arity = arities[label];
                        let parsed: Vec<(Vec<String>, String)> = tokens
                            .iter()
                            .map(|t| parse_entry(path, n, t, arity))
                            .collect::<Result<_>>()?;
                        TableSpec::Entries(parsed)
                    }
                };
                tables.push((op.to_string(), spec, n));
            }
            other => {
                return Err(FileError::new(
                    path,
                    n,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let arities = arities.ok_or_else(|| FileError::new(path, 0, "missing `type` line"))?;
    let ops = ops.ok_or_else(|| FileError::new(path, 0, "missing `ops` line"))?;
    let elements = elements.ok_or_else(|| FileError::new(path, 0, "missing `elements` line"))?;
    let ordered: Vec<(String, TableSpec)> = ops
        .iter()
        .map(|op| {
            tables
                .iter()
                .position(|(name, _, _)| name == op)
                .map(|i| {
                    let (name, spec, _) = &tables[i];
                    (
                        name.clone(),
                        match spec {
                            TableSpec::DerivedMeet => TableSpec::DerivedMeet,
                            TableSpec::DerivedJoin => TableSpec::DerivedJoin,
                            TableSpec::Entries(e) => TableSpec::Entries(e.clone()),
                        },
                    )
                })
                .ok_or_else(|| FileError::new(path, 0, format!("missing table for `{op}`")))
        })
        .collect::<Result<_>>()?;
    build_algebra(path, 0, arities, ops, elements, covers, ordered)
}

fn build_algebra(
    path: &Path,
    line: usize,
    arities: Vec<usize>,
    ops: Vec<String>,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    tables: Vec<(String, TableSpec)>,
) -> Result<TVAlgebra> {
    let element_refs: Vec<&str> = elements.iter().map(|s| s.as_str()).collect();
    let cover_refs: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let poset = Poset::from_covers(&element_refs, &cover_refs)
        .map_err(|e| FileError::new(path, line, e.to_string()))?;
    let typ = AlgType::new(arities).map_err(|e| FileError::new(path, line, e.to_string()))?;

    let n = poset.len();
    let mut raw_tables: Vec<Vec<usize>> = Vec::with_capacity(tables.len());
    for (label, (op, spec)) in tables.into_iter().enumerate() {
        let arity = typ.arities().get(label).copied().unwrap_or(0);
        match spec {
            TableSpec::DerivedMeet | TableSpec::DerivedJoin => {
                if arity != 2 {
                    return Err(FileError::new(
                        path,
                        line,
                        format!("derived table for `{op}` needs arity 2"),
                    ));
                }
                let mut data = vec![0; n * n];
                for x in 0..n {
                    for y in 0..n {
                        let v = if matches!(spec, TableSpec::DerivedMeet) {
                            poset.meet_idx(x, y)
                        } else {
                            poset.join_idx(x, y)
                        };
                        data[x * n + y] = v.ok_or_else(|| {
                            FileError::new(
                                path,
                                line,
                                format!(
                                    "cannot derive `{op}`: no {} for ({}, {})",
                                    if matches!(spec, TableSpec::DerivedMeet) {
                                        "meet"
                                    } else {
                                        "join"
                                    },
                                    poset.name(x),
                                    poset.name(y)
                                ),
                            )
                        })?;
                    }
                }
                raw_tables.push(data);
            }
            TableSpec::Entries(entries) => {
                let mut data = vec![usize::MAX; n.pow(arity as u32)];
                for (args, out) in entries {
                    let mut flat = 0;
                    for a in &args {
                        let i = poset.idx(a).ok_or_else(|| {
                            FileError::new(path, line, format!("unknown element `{a}`"))
                        })?;
                        flat = flat * n + i;
                    }
                    let out_idx = poset.idx(&out).ok_or_else(|| {
                        FileError::new(path, line, format!("unknown element `{out}`"))
                    })?;
                    data[flat] = out_idx;
                }
                if data.contains(&usize::MAX) {
                    return Err(FileError::new(
                        path,
                        line,
                        format!("table for `{op}` is not total"),
                    ));
                }
                raw_tables.push(data);
            }
        }
    }
    TVAlgebra::from_tables(poset, typ, raw_tables, ops)
        .map_err(|e| FileError::new(path, line, e.to_string()))
}

// ---------------------------------------------------------------------------
// language blocks
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
pub struct LanguageJson {
    #[serde(default)]
    pub predicates: BTreeMap<String, usize>,
    #[serde(default)]
    pub functions: BTreeMap<String, usize>,
    pub connectives: Vec<(String, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<String>,
}

impl LanguageJson {
    pub fn into_language(self, path: &Path) -> Result<Language> {
        let preds: Vec<(&str, usize)> = self
            .predicates
            .iter()
            .map(|(n, &a)| (n.as_str(), a))
            .collect();
        let fns: Vec<(&str, usize)> = self
            .functions
            .iter()
            .map(|(n, &a)| (n.as_str(), a))
            .collect();
        let conns: Vec<(&str, usize)> = self
            .connectives
            .iter()
            .map(|(n, a)| (n.as_str(), *a))
            .collect();
        Language::new(&preds, &fns, &conns, self.negation.as_deref())
            .map_err(|e| FileError::new(path, 0, e.to_string()))
    }
}

/// Parses the lines of a `language ... end` block.
fn parse_language_block(path: &Path, block: &[(usize, &str)]) -> Result<Language> {
    let mut preds: Vec<(String, usize)> = Vec::new();
    let mut fns: Vec<(String, usize)> = Vec::new();
    let mut conns: Vec<(String, usize)> = Vec::new();
    let mut negation: Option<String> = None;
    for &(n, line) in block {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["predicate", name, arity] => {
                let a = arity
                    .parse()
                    .map_err(|_| FileError::new(path, n, "bad predicate arity"))?;
                preds.push((name.to_string(), a));
            }
            ["function", name, arity] => {
                let a = arity
                    .parse()
                    .map_err(|_| FileError::new(path, n, "bad function arity"))?;
                fns.push((name.to_string(), a));
            }
            ["connective", name, arity] | ["connective", name, arity, "negation"] => {
                let a = arity
                    .parse()
                    .map_err(|_| FileError::new(path, n, "bad connective arity"))?;
                conns.push((name.to_string(), a));
                if words.len() == 4 {
                    negation = Some(name.to_string());
                }
            }
            _ => {
                return Err(FileError::new(
                    path,
                    n,
                    format!("bad language declaration `{line}`"),
                ))
            }
        }
    }
    let p: Vec<(&str, usize)> = preds.iter().map(|(n, a)| (n.as_str(), *a)).collect();
    let f: Vec<(&str, usize)> = fns.iter().map(|(n, a)| (n.as_str(), *a)).collect();
    let c: Vec<(&str, usize)> = conns.iter().map(|(n, a)| (n.as_str(), *a)).collect();
    Language::new(&p, &f, &c, negation.as_deref())
        .map_err(|e| FileError::new(path, 0, e.to_string()))
}

// ---------------------------------------------------------------------------
// structure files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct StructureJson {
    pub format_version: u32,
    pub language: LanguageJson,
    pub algebra: String,
    pub universe: Vec<String>,
    #[serde(default)]
    pub functions: BTreeMap<String, Vec<(Vec<String>, String)>>,
    #[serde(default)]
    pub base: BTreeMap<String, Vec<(Vec<String>, String)>>,
}

pub fn load_structure(path: &Path, options: StructureOptions) -> Result<(Structure, Vec<String>)> {
    let content = read(path)?;
    if is_json(&content) {
        let json: StructureJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        let lang = json.language.clone().into_language(path)?;
        let algebra = load_algebra(&resolve(path, &json.algebra))?;
        return assemble_structure(
            path,
            lang,
            algebra,
            &json.universe,
            &json.functions,
            &json.base,
            options,
        );
    }

    let all = lines(&content);
    let mut it = all.iter().peekable();
    match it.next() {
        Some((_, l)) if l.starts_with("structure") => {}
        other => {
            let line = other.map(|(n, _)| *n).unwrap_or(1);
            return Err(FileError::new(path, line, "expected header `structure v1`"));
        }
    }

    let mut lang: Option<Language> = None;
    let mut algebra: Option<TVAlgebra> = None;
    let mut universe: Vec<String> = Vec::new();
    let mut fn_entries: BTreeMap<String, Vec<(Vec<String>, String)>> = BTreeMap::new();
    let mut base_entries: BTreeMap<String, Vec<(Vec<String>, String)>> = BTreeMap::new();

    while let Some(&&(n, line)) = it.peek() {
        it.next();
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match keyword {
            "language" => {
                let mut block = Vec::new();
                loop {
                    match it.next() {
                        Some(&(_, "end")) => break,
                        Some(&(bn, bl)) => block.push((bn, bl)),
                        None => return Err(FileError::new(path, n, "unterminated language block")),
                    }
                }
                lang = Some(parse_language_block(path, &block)?);
            }
            "algebra" => {
                if rest.len() != 1 {
                    return Err(FileError::new(path, n, "algebra needs one file path"));
                }
                algebra = Some(load_algebra(&resolve(path, rest[0]))?);
            }
            "universe" => universe = rest.iter().map(|s| s.to_string()).collect(),
            "fn" | "base" => {
                let Some((&name, tokens)) = rest.split_first() else {
                    return Err(FileError::new(
                        path,
                        n,
                        format!("{keyword} needs a symbol name"),
                    ));
                };
                let Some(lang) = &lang else {
                    return Err(FileError::new(path, n, "language block must come first"));
                };
                let arity = if keyword == "fn" {
                    lang.functions().get(name).copied()
                } else {
                    lang.predicates().get(name).copied()
                };
                let Some(arity) = arity else {
                    return Err(FileError::new(path, n, format!("`{name}` is not declared")));
                };
                let entries: Vec<(Vec<String>, String)> = tokens
                    .iter()
                    .map(|t| parse_entry(path, n, t, arity))
                    .collect::<Result<_>>()?;
                let map = if keyword == "fn" {
                    &mut fn_entries
                } else {
                    &mut base_entries
                };
                map.entry(name.to_string()).or_default().extend(entries);
            }
            other => {
                return Err(FileError::new(
                    path,
                    n,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let lang = lang.ok_or_else(|| FileError::new(path, 0, "missing language block"))?;
    let algebra = algebra.ok_or_else(|| FileError::new(path, 0, "missing algebra line"))?;
    assemble_structure(
        path,
        lang,
        algebra,
        &universe,
        &fn_entries,
        &base_entries,
        options,
    )
}

fn assemble_structure(
    path: &Path,
    lang: Language,
    algebra: TVAlgebra,
    universe: &[String],
    fn_entries: &BTreeMap<String, Vec<(Vec<String>, String)>>,
    base_entries: &BTreeMap<String, Vec<(Vec<String>, String)>>,
    options: StructureOptions,
) -> Result<(Structure, Vec<String>)> {
    let refs: Vec<&str> = universe.iter().map(|s| s.as_str()).collect();
    let interp = Interpretation::new(&lang, &refs, fn_entries)
        .map_err(|e| FileError::new(path, 0, e.to_string()))?;
    Structure::new_with_options(lang, interp, algebra, base_entries, options)
        .map_err(|e| FileError::new(path, 0, e.to_string()))
}

// ---------------------------------------------------------------------------
// semantics files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SemanticsJson {
    pub format_version: u32,
    pub closure: String,
    pub structures: Vec<String>,
}

pub fn load_semantics(
    path: &Path,
    options: StructureOptions,
) -> Result<(FiniteSemantics, Vec<String>)> {
    let content = read(path)?;
    let (mode, refs) = if is_json(&content) {
        let json: SemanticsJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        (json.closure, json.structures)
    } else {
        let all = lines(&content);
        let mut it = all.iter();
        match it.next() {
            Some((_, l)) if l.starts_with("semantics") => {}
            other => {
                let line = other.map(|(n, _)| *n).unwrap_or(1);
                return Err(FileError::new(path, line, "expected header `semantics v1`"));
            }
        }
        let mut mode = "declared".to_string();
        let mut refs = Vec::new();
        for &(n, line) in it {
            let mut words = line.split_whitespace();
            match (words.next().unwrap_or_default(), words.next()) {
                ("closure", Some(m)) => mode = m.to_string(),
                ("structure", Some(p)) => refs.push(p.to_string()),
                _ => return Err(FileError::new(path, n, format!("bad line `{line}`"))),
            }
        }
        (mode, refs)
    };

    let closure_mode = match mode.as_str() {
        "declared" => ClosureMode::Declared,
        "auto-complete" => ClosureMode::AutoComplete,
        other => {
            return Err(FileError::new(
                path,
                0,
                format!("closure mode must be `declared` or `auto-complete`, got `{other}`"),
            ))
        }
    };
    let mut structures = Vec::new();
    let mut warnings = Vec::new();
    for r in refs {
        let (s, mut w) = load_structure(&resolve(path, &r), options)?;
        warnings.append(&mut w);
        structures.push(s);
    }
    FiniteSemantics::new(structures, closure_mode)
        .map(|t| (t, warnings))
        .map_err(|e| FileError::new(path, 0, e.to_string()))
}

// ---------------------------------------------------------------------------
// formula files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FormulasJson {
    pub formulas: Vec<String>,
}

/// One formula per line (or a JSON `{"formulas": [...]}`), parsed against
/// the given language.
pub fn load_formulas(path: &Path, lang: &Language) -> Result<Vec<Wff>> {
    let content = read(path)?;
    if is_json(&content) {
        let json: FormulasJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        return json
            .formulas
            .iter()
            .map(|f| parse_wff(lang, f).map_err(|e| FileError::new(path, 0, e.to_string())))
            .collect();
    }
    lines(&content)
        .into_iter()
        .map(|(n, line)| parse_wff(lang, line).map_err(|e| FileError::new(path, n, e.to_string())))
        .collect()
}

/// Asserts that a file is in the JSON alternative format.
pub fn ensure_json(path: &Path) -> Result<()> {
    let content = read(path)?;
    if is_json(&content) {
        Ok(())
    } else {
        Err(FileError::new(path, 1, "expected JSON input (--json-in)"))
    }
}

// ---------------------------------------------------------------------------
// deduction system files
// ---------------------------------------------------------------------------

pub struct SystemFile {
    pub language: Language,
    pub system: DeductionSystem,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SystemJson {
    pub format_version: u32,
    pub language: LanguageJson,
    #[serde(default)]
    pub meta_wff: Vec<String>,
    #[serde(default)]
    pub meta_term: Vec<String>,
    #[serde(default)]
    pub axioms: Vec<NamedPatternJson>,
    #[serde(default)]
    pub rules: Vec<RuleJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct NamedPatternJson {
    pub name: String,
    pub pattern: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RuleJson {
    pub name: String,
    pub premises: Vec<String>,
    pub conclusion: String,
}

/// Converts a parsed formula into a pattern, turning declared metavariable
/// names into wff- or term-metavariables.
fn wff_to_pattern(w: &Wff, wff_metas: &[String], term_metas: &[String]) -> Pattern {
    fn term(t: &Term, term_metas: &[String]) -> TermPattern {
        match t {
            Term::Var(v) if term_metas.contains(v) => TermPattern::Meta(v.clone()),
            Term::Var(v) => TermPattern::Var(v.clone()),
            Term::App(f, args) => TermPattern::App(
                f.clone(),
                args.iter().map(|a| term(a, term_metas)).collect(),
            ),
        }
    }
    match w {
        Wff::Atom(p, args) if args.is_empty() && wff_metas.contains(p) => Pattern::Meta(p.clone()),
        Wff::Atom(p, args) => Pattern::Atom(
            p.clone(),
            args.iter().map(|t| term(t, term_metas)).collect(),
        ),
        Wff::Conn(c, args) => Pattern::Conn(
            c.clone(),
            args.iter()
                .map(|a| wff_to_pattern(a, wff_metas, term_metas))
                .collect(),
        ),
        Wff::Forall(v, body) => Pattern::Forall(
            v.clone(),
            Box::new(wff_to_pattern(body, wff_metas, term_metas)),
        ),
    }
}

/// Extends the language with each wff-metavariable as a 0-ary predicate so
/// that patterns parse with the ordinary formula parser.
fn meta_language(path: &Path, lang: &Language, wff_metas: &[String]) -> Result<Language> {
    let extra: Vec<(&str, usize)> = wff_metas.iter().map(|m| (m.as_str(), 0)).collect();
    let mut preds: Vec<(&str, usize)> = lang
        .predicates()
        .iter()
        .map(|(k, &v)| (k.as_str(), v))
        .collect();
    preds.extend(extra);
    let fns: Vec<(&str, usize)> = lang
        .functions()
        .iter()
        .map(|(k, &v)| (k.as_str(), v))
        .collect();
    let conns: Vec<(&str, usize)> = lang
        .connectives()
        .iter()
        .map(|(k, v)| (k.as_str(), *v))
        .collect();
    let neg = lang
        .negation_index()
        .map(|i| lang.connectives()[i].0.clone());
    Language::new(&preds, &fns, &conns, neg.as_deref())
        .map_err(|e| FileError::new(path, 0, e.to_string()))
}

fn parse_pattern(
    path: &Path,
    line: usize,
    text: &str,
    meta_lang: &Language,
    wff_metas: &[String],
    term_metas: &[String],
) -> Result<Pattern> {
    let w = parse_wff(meta_lang, text).map_err(|e| FileError::new(path, line, e.to_string()))?;
    Ok(wff_to_pattern(&w, wff_metas, term_metas))
}

fn system_from_json(path: &Path, json: SystemJson) -> Result<SystemFile> {
    let language = json.language.into_language(path)?;
    let meta_lang = meta_language(path, &language, &json.meta_wff)?;
    let axioms = json
        .axioms
        .iter()
        .map(|a| {
            parse_pattern(
                path,
                0,
                &a.pattern,
                &meta_lang,
                &json.meta_wff,
                &json.meta_term,
            )
            .map(|p| (a.name.clone(), p))
        })
        .collect::<Result<Vec<_>>>()?;
    let rules = json
        .rules
        .iter()
        .map(|r| {
            let premises = r
                .premises
                .iter()
                .map(|p| parse_pattern(path, 0, p, &meta_lang, &json.meta_wff, &json.meta_term))
                .collect::<Result<Vec<_>>>()?;
            let conclusion = parse_pattern(
                path,
                0,
                &r.conclusion,
                &meta_lang,
                &json.meta_wff,
                &json.meta_term,
            )?;
            Ok(Rule {
                name: r.name.clone(),
                premises,
                conclusion,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let system =
        DeductionSystem::new(axioms, rules).map_err(|e| FileError::new(path, 0, e.to_string()))?;
    Ok(SystemFile { language, system })
}

pub fn load_system(path: &Path) -> Result<SystemFile> {
    let content = read(path)?;
    if is_json(&content) {
        let json: SystemJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        return system_from_json(path, json);
    }
    let all = lines(&content);
    let mut it = all.iter().peekable();
    match it.next() {
        Some((_, l)) if l.starts_with("system") => {}
        other => {
            let line = other.map(|(n, _)| *n).unwrap_or(1);
            return Err(FileError::new(path, line, "expected header `system v1`"));
        }
    }

    let mut lang: Option<Language> = None;
    let mut wff_metas: Vec<String> = Vec::new();
    let mut term_metas: Vec<String> = Vec::new();
    let mut axioms: Vec<(String, Pattern)> = Vec::new();
    let mut rules: Vec<Rule> = Vec::new();

    while let Some(&&(n, line)) = it.peek() {
        it.next();
        if line == "language" || line.starts_with("language ") {
            let mut block = Vec::new();
            loop {
                match it.next() {
                    Some(&(_, "end")) => break,
                    Some(&(bn, bl)) => block.push((bn, bl)),
                    None => return Err(FileError::new(path, n, "unterminated language block")),
                }
            }
            lang = Some(parse_language_block(path, &block)?);
            continue;
        }
        let Some(lang_ref) = &lang else {
            return Err(FileError::new(path, n, "language block must come first"));
        };
        let meta_lang = meta_language(path, lang_ref, &wff_metas)?;

        let mut words = line.split_whitespace();
        match words.next().unwrap_or_default() {
            "meta" => match words.next() {
                Some("wff") => wff_metas.extend(words.map(|w| w.to_string())),
                Some("term") => term_metas.extend(words.map(|w| w.to_string())),
                _ => return Err(FileError::new(path, n, "meta needs `wff` or `term`")),
            },
            "axiom" => {
                let rest = line.strip_prefix("axiom").unwrap().trim();
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| FileError::new(path, n, "axiom needs `name: pattern`"))?;
                let w = parse_wff(&meta_lang, body.trim())
                    .map_err(|e| FileError::new(path, n, e.to_string()))?;
                let pattern = wff_to_pattern(&w, &wff_metas, &term_metas);
                axioms.push((name.trim().to_string(), pattern));
            }
            "rule" => {
                let rest = line.strip_prefix("rule").unwrap().trim();
                let (name, body) = rest.split_once(':').ok_or_else(|| {
                    FileError::new(path, n, "rule needs `name: premises => conclusion`")
                })?;
                let (premises_str, conclusion_str) = body.split_once("=>").ok_or_else(|| {
                    FileError::new(path, n, "rule needs `premises => conclusion`")
                })?;
                let premises = split_top_level(premises_str)
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .map(|p| {
                        let w = parse_wff(&meta_lang, &p)
                            .map_err(|e| FileError::new(path, n, e.to_string()))?;
                        Ok(wff_to_pattern(&w, &wff_metas, &term_metas))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let w = parse_wff(&meta_lang, conclusion_str.trim())
                    .map_err(|e| FileError::new(path, n, e.to_string()))?;
                let conclusion = wff_to_pattern(&w, &wff_metas, &term_metas);
                rules.push(Rule {
                    name: name.trim().to_string(),
                    premises,
                    conclusion,
                });
            }
            other => {
                return Err(FileError::new(
                    path,
                    n,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let language = lang.ok_or_else(|| FileError::new(path, 0, "missing language block"))?;
    let system =
        DeductionSystem::new(axioms, rules).map_err(|e| FileError::new(path, 0, e.to_string()))?;
    Ok(SystemFile { language, system })
}

// ---------------------------------------------------------------------------
// proof files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ProofJson {
    pub format_version: u32,
    pub steps: Vec<ProofStepJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ProofStepJson {
    pub wff: String,
    pub justification: JustificationJson,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum JustificationJson {
    Keyword(String),
    Axiom { ax: String },
    Rule { rule: String, premises: Vec<usize> },
}

fn proof_from_json(path: &Path, json: ProofJson, lang: &Language) -> Result<Proof> {
    let mut steps = Vec::new();
    for (i, step) in json.steps.iter().enumerate() {
        let wff = parse_wff(lang, &step.wff).map_err(|e| FileError::new(path, 0, e.to_string()))?;
        let justification = match &step.justification {
            JustificationJson::Keyword(k) if k == "hyp" => Justification::Hypothesis,
            JustificationJson::Keyword(k) => {
                return Err(FileError::new(path, 0, format!("bad justification `{k}`")))
            }
            JustificationJson::Axiom { ax } => Justification::Axiom {
                schema: ax.clone(),
                instantiation: None,
            },
            JustificationJson::Rule { rule, premises } => {
                let converted = premises
                    .iter()
                    .map(|&p| {
                        if p == 0 || p > json.steps.len() {
                            Err(FileError::new(
                                path,
                                0,
                                format!("premise index {p} out of range at step {}", i + 1),
                            ))
                        } else {
                            Ok(p - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Justification::Rule {
                    rule: rule.clone(),
                    premises: converted,
                    instantiation: None,
                }
            }
        };
        steps.push((wff, justification));
    }
    Ok(Proof { steps })
}

/// Steps of the form `index. <wff> ; hyp | ax <id> | rule <id> [i, j]` with
/// 1-based, sequential indices (or the JSON alternative).
pub fn load_proof(path: &Path, lang: &Language) -> Result<Proof> {
    let content = read(path)?;
    if is_json(&content) {
        let json: ProofJson = serde_json::from_str(&content)
            .map_err(|e| FileError::new(path, e.line(), e.to_string()))?;
        return proof_from_json(path, json, lang);
    }
    let mut steps = Vec::new();
    for (n, line) in lines(&content) {
        let (index_str, rest) = line.split_once('.').ok_or_else(|| {
            FileError::new(path, n, "step needs `index. formula ; justification`")
        })?;
        let index: usize = index_str
            .trim()
            .parse()
            .map_err(|_| FileError::new(path, n, "bad step index"))?;
        if index != steps.len() + 1 {
            return Err(FileError::new(
                path,
                n,
                format!("expected step {} but found {index}", steps.len() + 1),
            ));
        }
        let (wff_str, just_str) = rest
            .rsplit_once(';')
            .ok_or_else(|| FileError::new(path, n, "step needs `; justification`"))?;
        let wff =
            parse_wff(lang, wff_str.trim()).map_err(|e| FileError::new(path, n, e.to_string()))?;
        let just_words: Vec<&str> = just_str.split_whitespace().collect();
        let justification = match just_words.as_slice() {
            ["hyp"] => Justification::Hypothesis,
            ["ax", id] => Justification::Axiom {
                schema: id.to_string(),
                instantiation: None,
            },
            ["rule", id, indices @ ..] => {
                let joined = indices.join(" ");
                let inner = joined
                    .trim()
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| {
                        FileError::new(path, n, "rule justification needs `[i, j, ...]`")
                    })?;
                let premises: Vec<usize> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<usize>()
                                .map_err(|_| FileError::new(path, n, "bad premise index"))
                                .and_then(|i| {
                                    if i == 0 {
                                        Err(FileError::new(path, n, "premise indices are 1-based"))
                                    } else {
                                        Ok(i - 1)
                                    }
                                })
                        })
                        .collect::<Result<_>>()?
                };
                Justification::Rule {
                    rule: id.to_string(),
                    premises,
                    instantiation: None,
                }
            }
            _ => {
                return Err(FileError::new(
                    path,
                    n,
                    format!("bad justification `{}`", just_str.trim()),
                ))
            }
        };
        steps.push((wff, justification));
    }
    Ok(Proof { steps })
}
