//! Fundamental parts of CFK∞ and the chains that live in them.
//!
//! A [`FundamentalComplex`] is a finite bigraded complex over GF(2). The full
//! CFK∞ is the direct sum of its U-translates: the translate by `l` moves
//! every generator from `(i, j)` to `(i + l, j + l)` and raises its Maslov
//! grading by `2l`. Translates are never materialized; chains carry a
//! translate index per term instead.
//!
//! # Built-in gradings
//!
//! The 9₄₂ model only pins positions and arrows. Its Maslov gradings follow
//! from three facts: every arrow drops the grading by one, `x₅` sits at
//! Alexander grading zero at the origin, and the homology class
//! `x₁ + x₅ + x₉` has grading zero. Together they force
//! `x₁ = x₅ = x₉ = 0`, `x₂ = x₄ = x₆ = x₈ = -1` and `x₃ = x₇ = -2`;
//! [`validate_standard`] rechecks the last fact against the homology.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::engine::{self, GradedHomology, Region};
use crate::f2linalg::xor_into;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("arrow {from} -> {to} references unknown generator `{name}`")]
    UnknownGenerator {
        from: String,
        to: String,
        name: String,
    },
    #[error("arrow {from} -> {to} is listed twice")]
    DuplicateArrow { from: String, to: String },
    #[error("arrow {from} -> {to} raises the filtration: ({fi}, {fj}) -> ({ti}, {tj})")]
    FiltrationViolation {
        from: String,
        to: String,
        fi: i64,
        fj: i64,
        ti: i64,
        tj: i64,
    },
    #[error("arrow {from} -> {to} changes the Maslov grading by {drop} instead of 1")]
    MaslovMismatch { from: String, to: String, drop: i64 },
    #[error("the boundary of the boundary of `{0}` is nonzero")]
    BoundarySquaredNonzero(String),
    #[error("chain references unknown generator `{0}`")]
    UnknownChainGenerator(String),
}

impl ModelError {
    /// Stable short code for reports and exit-status mapping.
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::Syntax { .. } => "syntax",
            ModelError::DuplicateName(_) => "duplicate-name",
            ModelError::UnknownGenerator { .. } => "unknown-generator",
            ModelError::DuplicateArrow { .. } => "duplicate-arrow",
            ModelError::FiltrationViolation { .. } => "filtration-violation",
            ModelError::MaslovMismatch { .. } => "maslov-mismatch",
            ModelError::BoundarySquaredNonzero(_) => "boundary-squared-nonzero",
            ModelError::UnknownChainGenerator(_) => "unknown-chain-generator",
        }
    }

    /// True for errors raised by the text layer rather than by a broken
    /// complex invariant.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            ModelError::Syntax { .. }
                | ModelError::UnknownGenerator { .. }
                | ModelError::DuplicateArrow { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub name: String,
    pub i: i64,
    pub j: i64,
    pub maslov: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, i: i64, j: i64, maslov: i64) -> Self {
        Self {
            name: name.into(),
            i,
            j,
            maslov,
        }
    }

    pub fn alexander(&self) -> i64 {
        self.j - self.i
    }
}

/// Finite model of the fundamental part G₀ of CFK∞.
///
/// Equality compares generators and arrows by name, ignoring order.
#[derive(Clone)]
pub struct FundamentalComplex {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    /// Sorted targets of each generator's boundary.
    boundary: Vec<Vec<usize>>,
}

impl FundamentalComplex {
    /// Builds and validates a complex from named arrows `(from, to)`.
    pub fn new(
        generators: Vec<Generator>,
        arrows: impl IntoIterator<Item = (String, String)>,
    ) -> Result<Self, ModelError> {
        let mut index = HashMap::with_capacity(generators.len());
        for (k, g) in generators.iter().enumerate() {
            if index.insert(g.name.clone(), k).is_some() {
                return Err(ModelError::DuplicateName(g.name.clone()));
            }
        }
        let mut boundary = vec![Vec::new(); generators.len()];
        for (from, to) in arrows {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| ModelError::UnknownGenerator {
                        from: from.clone(),
                        to: to.clone(),
                        name: name.to_string(),
                    })
            };
            let (s, t) = (lookup(&from)?, lookup(&to)?);
            if boundary[s].contains(&t) {
                return Err(ModelError::DuplicateArrow { from, to });
            }
            boundary[s].push(t);
        }
        for targets in &mut boundary {
            targets.sort_unstable();
        }
        let complex = Self {
            generators,
            index,
            boundary,
        };
        complex.check_invariants()?;
        Ok(complex)
    }

    /// Assembles a complex from index-based boundaries that the caller
    /// guarantees to be valid (engine constructions). Invariants are still
    /// checked in debug builds.
    pub(crate) fn from_parts(generators: Vec<Generator>, mut boundary: Vec<Vec<usize>>) -> Self {
        let index = generators
            .iter()
            .enumerate()
            .map(|(k, g)| (g.name.clone(), k))
            .collect::<HashMap<_, _>>();
        debug_assert_eq!(index.len(), generators.len(), "duplicate generator names");
        for targets in &mut boundary {
            targets.sort_unstable();
        }
        let complex = Self {
            generators,
            index,
            boundary,
        };
        debug_assert!(complex.check_invariants().is_ok());
        complex
    }

    /// Filtration monotonicity, Maslov drop of one, and ∂² = 0.
    pub fn check_invariants(&self) -> Result<(), ModelError> {
        for (s, targets) in self.boundary.iter().enumerate() {
            let x = &self.generators[s];
            for &t in targets {
                let y = &self.generators[t];
                if y.i > x.i || y.j > x.j {
                    return Err(ModelError::FiltrationViolation {
                        from: x.name.clone(),
                        to: y.name.clone(),
                        fi: x.i,
                        fj: x.j,
                        ti: y.i,
                        tj: y.j,
                    });
                }
                if x.maslov - y.maslov != 1 {
                    return Err(ModelError::MaslovMismatch {
                        from: x.name.clone(),
                        to: y.name.clone(),
                        drop: x.maslov - y.maslov,
                    });
                }
            }
        }
        for s in 0..self.len() {
            let mut acc = Vec::new();
            for &t in &self.boundary[s] {
                xor_into(&mut acc, &self.boundary[t]);
            }
            if !acc.is_empty() {
                return Err(ModelError::BoundarySquaredNonzero(
                    self.generators[s].name.clone(),
                ));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> &Generator {
        &self.generators[k]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn boundary_of(&self, k: usize) -> &[usize] {
        &self.boundary[k]
    }

    pub fn arrow_count(&self) -> usize {
        self.boundary.iter().map(Vec::len).sum()
    }

    /// Arrows as index pairs, in generator order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boundary
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |&t| (s, t)))
    }

    pub fn named_arrows(&self) -> BTreeSet<(String, String)> {
        self.arrows()
            .map(|(s, t)| {
                (
                    self.generators[s].name.clone(),
                    self.generators[t].name.clone(),
                )
            })
            .collect()
    }

    /// Largest absolute filtration coordinate over all generators.
    pub fn coordinate_extent(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| g.i.abs().max(g.j.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Number of generators per Maslov grading.
    pub fn graded_dimensions(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry(g.maslov).or_insert(0) += 1;
        }
        out
    }

    /// Compares with `other` under the renaming that matches generators by
    /// position in the generator list.
    pub fn equal_up_to_renaming(&self, other: &FundamentalComplex) -> bool {
        self.len() == other.len()
            && self
                .generators
                .iter()
                .zip(&other.generators)
                .all(|(a, b)| a.i == b.i && a.j == b.j && a.maslov == b.maslov)
            && self.boundary == other.boundary
    }

    /// The same complex with generators listed in the serialization order
    /// `(i desc, j desc, name)`.
    pub fn canonical_order(&self) -> FundamentalComplex {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&self.generators[a], &self.generators[b]);
            y.i.cmp(&x.i)
                .then(y.j.cmp(&x.j))
                .then_with(|| x.name.cmp(&y.name))
        });
        let mut new_of_old = vec![0; self.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let generators = order.iter().map(|&k| self.generators[k].clone()).collect();
        let boundary = order
            .iter()
            .map(|&k| self.boundary[k].iter().map(|&t| new_of_old[t]).collect())
            .collect();
        FundamentalComplex::from_parts(generators, boundary)
    }
}

impl PartialEq for FundamentalComplex {
    fn eq(&self, other: &Self) -> bool {
        let gens = |c: &FundamentalComplex| {
            c.generators
                .iter()
                .map(|g| (g.name.clone(), g.i, g.j, g.maslov))
                .collect::<BTreeSet<_>>()
        };
        self.len() == other.len()
            && gens(self) == gens(other)
            && self.named_arrows() == other.named_arrows()
    }
}

impl Eq for FundamentalComplex {}

impl fmt::Debug for FundamentalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FundamentalComplex")
            .field("generators", &self.generators.len())
            .field("arrows", &self.arrow_count())
            .finish()
    }
}

/// One term `U^{-translate} · generator` of a chain in CFK∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub translate: i64,
    pub generator: usize,
}

/// GF(2) combination of translated generators of one complex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    terms: BTreeSet<Term>,
}

impl Chain {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut chain = Self::zero();
        for t in terms {
            chain.toggle(t);
        }
        chain
    }

    /// Chain in translate 0 from generator indices (repeats cancel).
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Self::from_terms(indices.into_iter().map(|generator| Term {
            translate: 0,
            generator,
        }))
    }

    pub fn from_names(complex: &FundamentalComplex, names: &[&str]) -> Result<Self, ModelError> {
        let mut idx = Vec::with_capacity(names.len());
        for name in names {
            idx.push(
                complex
                    .index_of(name)
                    .ok_or_else(|| ModelError::UnknownChainGenerator(name.to_string()))?,
            );
        }
        Ok(Self::from_indices(idx))
    }

    pub fn toggle(&mut self, term: Term) {
        if !self.terms.remove(&term) {
            self.terms.insert(term);
        }
    }

    pub fn add_assign(&mut self, other: &Chain) {
        for &t in &other.terms {
            self.toggle(t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, term: &Term) -> bool {
        self.terms.contains(term)
    }

    /// Multiplies by `U^{-l}`.
    pub fn translated(&self, l: i64) -> Chain {
        Chain {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    translate: t.translate + l,
                    generator: t.generator,
                })
                .collect(),
        }
    }

    pub fn boundary(&self, complex: &FundamentalComplex) -> Chain {
        let mut out = Chain::zero();
        for t in &self.terms {
            for &target in complex.boundary_of(t.generator) {
                out.toggle(Term {
                    translate: t.translate,
                    generator: target,
                });
            }
        }
        out
    }

    pub fn is_cycle(&self, complex: &FundamentalComplex) -> bool {
        self.boundary(complex).is_zero()
    }

    pub fn term_grading(complex: &FundamentalComplex, t: &Term) -> i64 {
        complex.generator(t.generator).maslov + 2 * t.translate
    }

    pub fn term_position(complex: &FundamentalComplex, t: &Term) -> (i64, i64) {
        let g = complex.generator(t.generator);
        (g.i + t.translate, g.j + t.translate)
    }

    /// Common grading of all terms, or `None` if the chain is zero or
    /// inhomogeneous.
    pub fn grading(&self, complex: &FundamentalComplex) -> Option<i64> {
        let mut it = self.terms.iter().map(|t| Self::term_grading(complex, t));
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    pub fn is_homogeneous(&self, complex: &FundamentalComplex) -> bool {
        self.is_zero() || self.grading(complex).is_some()
    }

    /// Image in `tensor(a, b)` of `self ⊗ other`, where `self` lives in `a`
    /// and `other` in a complex with `right_len` generators.
    pub fn tensor(&self, other: &Chain, right_len: usize) -> Chain {
        let mut out = Chain::zero();
        for x in &self.terms {
            for y in &other.terms {
                out.toggle(Term {
                    translate: x.translate + y.translate,
                    generator: x.generator * right_len + y.generator,
                });
            }
        }
        out
    }

    /// `self^{⊗m}` inside the left-associated tensor power.
    pub fn tensor_power(&self, base_len: usize, m: usize) -> Chain {
        let mut out = self.clone();
        for _ in 1..m {
            out = out.tensor(self, base_len);
        }
        out
    }

    /// Human-readable names, `U^-l·name` for nonzero translates.
    pub fn names(&self, complex: &FundamentalComplex) -> Vec<String> {
        self.terms
            .iter()
            .map(|t| {
                let name = &complex.generator(t.generator).name;
                if t.translate == 0 {
                    name.clone()
                } else {
                    format!("U^{}·{}", -t.translate, name)
                }
            })
            .collect()
    }
}

fn gens(list: &[(&str, i64, i64, i64)]) -> Vec<Generator> {
    list.iter()
        .map(|&(n, i, j, m)| Generator::new(n, i, j, m))
        .collect()
}

fn arrows(list: &[(&str, &str)]) -> Vec<(String, String)> {
    list.iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// The nine-generator fundamental part of CFK∞(9₄₂).
pub fn build_9_42() -> FundamentalComplex {
    let generators = gens(&[
        ("x5", 0, 0, 0),
        ("x9", -1, 0, 0),
        ("x6", -2, 0, -1),
        ("x1", 0, -1, 0),
        ("x8", -1, -1, -1),
        ("x2", -1, -1, -1),
        ("x7", -2, -1, -2),
        ("x4", 0, -2, -1),
        ("x3", -1, -2, -2),
    ]);
    let arrows = arrows(&[
        ("x5", "x2"),
        ("x5", "x4"),
        ("x5", "x6"),
        ("x5", "x8"),
        ("x9", "x6"),
        ("x9", "x8"),
        ("x1", "x2"),
        ("x1", "x4"),
        ("x2", "x3"),
        ("x4", "x3"),
        ("x6", "x7"),
        ("x8", "x7"),
    ]);
    FundamentalComplex::new(generators, arrows)
        .expect("built-in 9_42 complex is valid")
        .canonical_order()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hand {
    Left,
    Right,
}

/// Staircase model of a trefoil. The left-handed one has its top
/// generators at grading 2 and two arrows into the corner; the right-handed
/// one is its dual.
pub fn build_trefoil(hand: Hand) -> FundamentalComplex {
    let (generators, arrows) = match hand {
        Hand::Left => (
            gens(&[("b", 1, 0, 2), ("a", 0, 1, 2), ("c", 0, 0, 1)]),
            arrows(&[("a", "c"), ("b", "c")]),
        ),
        Hand::Right => (
            gens(&[("b", -1, 0, -2), ("a", 0, -1, -2), ("c", 0, 0, -1)]),
            arrows(&[("c", "a"), ("c", "b")]),
        ),
    };
    FundamentalComplex::new(generators, arrows).expect("built-in trefoil complex is valid")
}

pub fn build_unknot() -> FundamentalComplex {
    FundamentalComplex::new(vec![Generator::new("u", 0, 0, 0)], Vec::new())
        .expect("built-in unknot complex is valid")
}

fn valid_name(name: &str) -> bool {
    // `|` and `*` appear in names produced by tensor products and mirrors.
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '|' || c == '*')
}

/// Parses the line-oriented complex format:
///
/// ```text
/// # comment
/// gen <name> i=<int> j=<int> m=<int>
/// arrow <src> <dst>
/// ```
pub fn parse_complex(text: &str) -> Result<FundamentalComplex, ModelError> {
    let mut generators = Vec::new();
    let mut arrow_list = Vec::new();
    let mut arrow_lines = Vec::new();
    let mut seen = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| ModelError::Syntax {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "gen" => {
                if tokens.len() != 5 {
                    return Err(syntax(format!(
                        "expected `gen <name> i=<int> j=<int> m=<int>`, found {} fields",
                        tokens.len()
                    )));
                }
                let name = tokens[1];
                if !valid_name(name) {
                    return Err(syntax(format!("invalid generator name `{name}`")));
                }
                let mut coords = [None; 3];
                for tok in &tokens[2..] {
                    let (key, value) = tok
                        .split_once('=')
                        .ok_or_else(|| syntax(format!("expected key=value, found `{tok}`")))?;
                    let slot = match key {
                        "i" => 0,
                        "j" => 1,
                        "m" => 2,
                        _ => return Err(syntax(format!("unknown key `{key}`"))),
                    };
                    if coords[slot].is_some() {
                        return Err(syntax(format!("key `{key}` given twice")));
                    }
                    let value: i64 = value
                        .parse()
                        .map_err(|_| syntax(format!("`{value}` is not an integer")))?;
                    coords[slot] = Some(value);
                }
                let [Some(i), Some(j), Some(m)] = coords else {
                    return Err(syntax("missing one of i=, j=, m=".to_string()));
                };
                if seen.insert(name.to_string(), line_no).is_some() {
                    return Err(ModelError::DuplicateName(name.to_string()));
                }
                generators.push(Generator::new(name, i, j, m));
            }
            "arrow" => {
                if tokens.len() != 3 {
                    return Err(syntax(format!(
                        "expected `arrow <src> <dst>`, found {} fields",
                        tokens.len()
                    )));
                }
                for name in &tokens[1..] {
                    if !valid_name(name) {
                        return Err(syntax(format!("invalid generator name `{name}`")));
                    }
                }
                arrow_list.push((tokens[1].to_string(), tokens[2].to_string()));
                arrow_lines.push(line_no);
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    for ((from, to), &line) in arrow_list.iter().zip(&arrow_lines) {
        for name in [from, to] {
            if !seen.contains_key(name) {
                return Err(ModelError::Syntax {
                    line,
                    message: format!("arrow {from} -> {to} references unknown generator `{name}`"),
                });
            }
        }
    }
    FundamentalComplex::new(generators, arrow_list)
}

/// Writes `c` in canonical form: generators by `(i desc, j desc, name)`,
/// then arrows sorted lexicographically by name.
pub fn serialize_complex(c: &FundamentalComplex) -> String {
    let canon = c.canonical_order();
    let mut out = String::new();
    for g in canon.generators() {
        out.push_str(&format!(
            "gen {} i={} j={} m={}\n",
            g.name, g.i, g.j, g.maslov
        ));
    }
    for (from, to) in canon.named_arrows() {
        out.push_str(&format!("arrow {from} {to}\n"));
    }
    out
}

/// Homology summary of a column or row complex.
#[derive(Debug, Clone, Serialize)]
pub struct SliceReport {
    pub dimension: usize,
    pub gradings: Vec<i64>,
    /// Representatives as `(translate, names)`.
    pub representatives: Vec<(i64, Vec<String>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StandardReport {
    pub standard: bool,
    pub homology_dimension: usize,
    pub generator_grading: Option<i64>,
    pub generator_names: Vec<String>,
    #[serde(skip)]
    pub generator: Option<Chain>,
    pub column: SliceReport,
    pub row: SliceReport,
    pub issues: Vec<String>,
}

fn slice_homology(c: &FundamentalComplex, along_i: bool) -> SliceReport {
    // A generator at coordinate k enters the slice {coord = 0} in translate -k.
    let coords: BTreeSet<i64> = c
        .generators()
        .iter()
        .map(|g| if along_i { g.i } else { g.j })
        .collect();
    let mut report = SliceReport {
        dimension: 0,
        gradings: Vec::new(),
        representatives: Vec::new(),
    };
    for &k in &coords {
        let l = -k;
        let region = if along_i {
            Region::Column(0)
        } else {
            Region::Row(0)
        };
        let piece = engine::truncate(c, l, region);
        let h: GradedHomology = engine::homology(&piece);
        for (grading, part) in h.iter() {
            for rep in &part.representatives {
                report.dimension += 1;
                report.gradings.push(*grading);
                report.representatives.push((l, rep.names(&piece)));
            }
        }
    }
    report
}

/// Checks that `c` models a knot complex with standard HF∞: total homology
/// of rank one, and column and row homology of rank one at grading 0.
pub fn validate_standard(c: &FundamentalComplex) -> StandardReport {
    let h = engine::homology(c);
    let mut issues = Vec::new();
    let total = h.total_dimension();
    let (generator, generator_grading) = if total == 1 {
        let (&grading, part) = h.iter().next().expect("one class");
        (Some(part.representatives[0].clone()), Some(grading))
    } else {
        issues.push(format!("homology has dimension {total}, expected 1"));
        (None, None)
    };
    let column = slice_homology(c, true);
    let row = slice_homology(c, false);
    for (label, slice) in [("column", &column), ("row", &row)] {
        if slice.dimension != 1 || slice.gradings != [0] {
            issues.push(format!(
                "{label} homology has dimension {} at gradings {:?}, expected one class at 0",
                slice.dimension, slice.gradings
            ));
        }
    }
    StandardReport {
        standard: issues.is_empty(),
        homology_dimension: total,
        generator_grading,
        generator_names: generator.as_ref().map(|g| g.names(c)).unwrap_or_default(),
        generator,
        column,
        row,
        issues,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_42_shape() {
        let c = build_9_42();
        assert_eq!(c.len(), 9);
        assert_eq!(c.arrow_count(), 12);
        let mut alex = BTreeMap::new();
        for g in c.generators() {
            *alex.entry(g.alexander()).or_insert(0) += 1;
        }
        assert_eq!(
            alex,
            BTreeMap::from([(2, 1), (1, 2), (0, 3), (-1, 2), (-2, 1)])
        );
        let alpha = Chain::from_names(&c, &["x1", "x5", "x9"]).unwrap();
        assert!(alpha.is_cycle(&c));
        assert_eq!(alpha.grading(&c), Some(0));
    }

    #[test]
    fn nine_42_bigrading_symmetry() {
        // gradings are compared after moving each generator onto i = 0
        let c = build_9_42();
        let pairs: Vec<(i64, i64)> = c
            .generators()
            .iter()
            .map(|g| (g.alexander(), g.maslov - 2 * g.i))
            .collect();
        let mut a = pairs.clone();
        let mut b: Vec<(i64, i64)> = pairs.iter().map(|&(al, m)| (-al, m - 2 * al)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn x2_and_x8_share_a_position() {
        let c = build_9_42();
        let x2 = c.generator(c.index_of("x2").unwrap());
        let x8 = c.generator(c.index_of("x8").unwrap());
        assert_eq!((x2.i, x2.j), (x8.i, x8.j));
        assert_ne!(x2.name, x8.name);
    }

    #[test]
    fn builtins_validate_standard() {
        let r = validate_standard(&build_9_42());
        assert!(r.standard, "{:?}", r.issues);
        assert_eq!(r.generator_names, vec!["x5", "x1", "x9"]);
        assert_eq!(
            r.column.representatives,
            vec![(0, vec!["x5".into(), "x1".into()])]
        );
        assert_eq!(
            r.row.representatives,
            vec![(0, vec!["x5".into(), "x9".into()])]
        );
        assert_eq!(r.column.gradings, vec![0]);
        assert_eq!(r.row.gradings, vec![0]);

        assert!(validate_standard(&build_unknot()).standard);
        let left = validate_standard(&build_trefoil(Hand::Left));
        assert!(left.standard, "{:?}", left.issues);
        let mut names = left.generator_names.clone();
        names.sort();
        assert_eq!(names, vec!["a", "b"]);
        assert!(validate_standard(&build_trefoil(Hand::Right)).standard);
    }

    #[test]
    fn non_standard_is_flagged() {
        let c = FundamentalComplex::new(
            vec![Generator::new("p", 0, 0, 0), Generator::new("q", 0, 0, 0)],
            Vec::new(),
        )
        .unwrap();
        let r = validate_standard(&c);
        assert!(!r.standard);
        assert_eq!(r.homology_dimension, 2);
    }

    #[test]
    fn trefoil_shapes() {
        let left = build_trefoil(Hand::Left);
        assert_eq!(left.arrow_count(), 2);
        let right = build_trefoil(Hand::Right);
        assert_eq!(right.arrow_count(), 2);
        assert_eq!(
            right.graded_dimensions(),
            BTreeMap::from([(-2, 2), (-1, 1)])
        );
    }

    #[test]
    fn round_trip_builtins() {
        for c in [build_unknot(), build_9_42(), build_trefoil(Hand::Left)] {
            let text = serialize_complex(&c);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(serialize_complex(&back), text);
        }
        let text = serialize_complex(&build_9_42());
        assert_eq!(text.lines().filter(|l| l.starts_with("gen")).count(), 9);
        assert_eq!(text.lines().filter(|l| l.starts_with("arrow")).count(), 12);
        assert!(text.starts_with("gen x5 i=0 j=0 m=0\ngen x1 i=0 j=-1 m=0\n"));
    }

    #[test]
    fn parse_errors_are_distinct() {
        let cases = [
            ("gen a i=0 j=0\n", "syntax"),
            ("gen a i=0 j=0 m=x\n", "syntax"),
            ("frob a\n", "syntax"),
            ("gen a i=0 j=0 m=0\narrow a b\n", "syntax"),
            ("gen a i=0 j=0 m=0\ngen a i=0 j=0 m=0\n", "duplicate-name"),
            (
                "gen a i=0 j=0 m=1\ngen b i=1 j=0 m=0\narrow a b\n",
                "filtration-violation",
            ),
            (
                "gen a i=0 j=0 m=2\ngen b i=0 j=0 m=0\narrow a b\n",
                "maslov-mismatch",
            ),
            (
                "gen a i=0 j=0 m=2\ngen b i=0 j=0 m=1\ngen c i=0 j=0 m=0\narrow a b\narrow b c\n",
                "boundary-squared-nonzero",
            ),
            (
                "gen a i=0 j=0 m=1\ngen b i=0 j=0 m=0\narrow a b\narrow a b\n",
                "duplicate-arrow",
            ),
        ];
        for (text, code) in cases {
            let err = parse_complex(text).unwrap_err();
            assert_eq!(err.code(), code, "{text:?}: {err}");
        }
        match parse_complex("gen a i=0 j=0 m=0\n\n  bogus\n").unwrap_err() {
            ModelError::Syntax { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# unknot\n\ngen u i=0 j=0 m=0 # the only one\n";
        assert_eq!(parse_complex(text).unwrap(), build_unknot());
    }
}
