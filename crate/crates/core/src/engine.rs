//! Operations on fundamental complexes: tensor products, mirrors, region
//! truncation, graded homology, and the correction terms of ±1 surgery.
//!
//! The correction term of +1 surgery is read off the large-surgery complex
//! `CFK∞{max(i, j) ≥ 0}`. Because the model splits as a sum of U-translates,
//! the image of HF∞ is the sum over translates `l` of the image of the
//! translated standard generator, and `d` is the least grading at which that
//! image is nonzero.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::f2linalg::{reduce, reduce_with_clearing, xor_into, F2Matrix, Reduction};
use crate::model::{self, Chain, FundamentalComplex, Generator, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("tensor power requires m >= 1")]
    ZeroTensorPower,
    #[error("complex is not standard: {}", .0.join("; "))]
    NonStandard(Vec<String>),
    #[error("tower not found in translates {from}..={to}")]
    TowerNotFound { from: i64, to: i64 },
    #[error("tower images are only defined for regions of the form max(i,j) >= c")]
    UnsupportedRegion,
    #[error("d(S^3_-1) = {0} is negative; the complex does not model a knot")]
    NegativeCorrectionTerm(i64),
    #[error("beta check failed for m = {m}: {detail}")]
    BetaMismatch { m: usize, detail: String },
}

/// Subsets of the (i, j) plane used to cut down a translate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "c", rename_all = "snake_case")]
pub enum Region {
    /// `max(i, j) >= c`
    MaxGe(i64),
    /// `max(i, j) == c`
    MaxEq(i64),
    /// `i == c, j <= c`
    BandI(i64),
    /// `j == c, i <= c`
    BandJ(i64),
    /// `i == c`
    Column(i64),
    /// `j == c`
    Row(i64),
    All,
}

impl Region {
    pub fn contains(&self, i: i64, j: i64) -> bool {
        match *self {
            Region::MaxGe(c) => i.max(j) >= c,
            Region::MaxEq(c) => i.max(j) == c,
            Region::BandI(c) => i == c && j <= c,
            Region::BandJ(c) => j == c && i <= c,
            Region::Column(c) => i == c,
            Region::Row(c) => j == c,
            Region::All => true,
        }
    }
}

pub fn tensor(a: &FundamentalComplex, b: &FundamentalComplex) -> FundamentalComplex {
    let nb = b.len();
    let mut generators = Vec::with_capacity(a.len() * nb);
    let mut boundary = Vec::with_capacity(a.len() * nb);
    for (ia, x) in a.generators().iter().enumerate() {
        for (ib, y) in b.generators().iter().enumerate() {
            generators.push(Generator::new(
                format!("{}|{}", x.name, y.name),
                x.i + y.i,
                x.j + y.j,
                x.maslov + y.maslov,
            ));
            let mut targets: Vec<usize> =
                a.boundary_of(ia).iter().map(|&xa| xa * nb + ib).collect();
            targets.extend(b.boundary_of(ib).iter().map(|&yb| ia * nb + yb));
            boundary.push(targets);
        }
    }
    FundamentalComplex::from_parts(generators, boundary)
}

/// Left-associated `c ⊗ c ⊗ ... ⊗ c` with `m` factors.
pub fn tensor_power(c: &FundamentalComplex, m: usize) -> Result<FundamentalComplex, EngineError> {
    if m == 0 {
        return Err(EngineError::ZeroTensorPower);
    }
    let mut out = c.clone();
    for _ in 1..m {
        out = tensor(&out, c);
    }
    Ok(out)
}

/// Dual complex: `x ↦ x*` at `(-i, -j)` with grading `-M`, arrows reversed.
pub fn mirror(c: &FundamentalComplex) -> FundamentalComplex {
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(format!("{}*", g.name), -g.i, -g.j, -g.maslov))
        .collect();
    let mut boundary = vec![Vec::new(); c.len()];
    for (s, t) in c.arrows() {
        boundary[t].push(s);
    }
    FundamentalComplex::from_parts(generators, boundary)
}

/// `U^{-l} · c` as a complex in its own right.
pub fn translate(c: &FundamentalComplex, l: i64) -> FundamentalComplex {
    truncate(c, l, Region::All)
}

/// Translates by `U^{-l}` and keeps the generators inside `region`, with the
/// arrows between them. Also returns the source index of each kept
/// generator.
pub fn truncate_with_map(
    c: &FundamentalComplex,
    l: i64,
    region: Region,
) -> (FundamentalComplex, Vec<usize>) {
    let mut kept = Vec::new();
    let mut new_of_old = vec![usize::MAX; c.len()];
    for (k, g) in c.generators().iter().enumerate() {
        if region.contains(g.i + l, g.j + l) {
            new_of_old[k] = kept.len();
            kept.push(k);
        }
    }
    let generators = kept
        .iter()
        .map(|&k| {
            let g = c.generator(k);
            Generator::new(g.name.clone(), g.i + l, g.j + l, g.maslov + 2 * l)
        })
        .collect();
    let boundary = kept
        .iter()
        .map(|&k| {
            c.boundary_of(k)
                .iter()
                .filter_map(|&t| (new_of_old[t] != usize::MAX).then_some(new_of_old[t]))
                .collect()
        })
        .collect();
    (FundamentalComplex::from_parts(generators, boundary), kept)
}

pub fn truncate(c: &FundamentalComplex, l: i64, region: Region) -> FundamentalComplex {
    truncate_with_map(c, l, region).0
}

/// Maps a chain on `c` through [`truncate_with_map`]: terms in translate `l`
/// that land in the region are kept, everything else is dropped.
pub fn truncate_chain(
    c: &FundamentalComplex,
    chain: &Chain,
    l: i64,
    region: Region,
    kept: &[usize],
) -> Chain {
    let mut new_of_old = vec![usize::MAX; c.len()];
    for (new, &old) in kept.iter().enumerate() {
        new_of_old[old] = new;
    }
    Chain::from_indices(chain.terms().filter_map(|t| {
        if t.translate != l {
            return None;
        }
        let g = c.generator(t.generator);
        let inside = region.contains(g.i + l, g.j + l);
        (inside && new_of_old[t.generator] != usize::MAX).then_some(new_of_old[t.generator])
    }))
}

/// Generators grouped by Maslov grading, with each generator's position
/// inside its grading.
struct GradedIndex {
    degrees: BTreeMap<i64, Vec<usize>>,
    local: Vec<usize>,
}

impl GradedIndex {
    fn new(c: &FundamentalComplex) -> Self {
        let mut degrees: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut local = vec![0; c.len()];
        for (k, g) in c.generators().iter().enumerate() {
            let list = degrees.entry(g.maslov).or_default();
            local[k] = list.len();
            list.push(k);
        }
        Self { degrees, local }
    }

    fn size(&self, k: i64) -> usize {
        self.degrees.get(&k).map_or(0, Vec::len)
    }

    /// Matrix of ∂ from grading `k` to grading `k - 1`.
    fn boundary_matrix(&self, c: &FundamentalComplex, k: i64) -> F2Matrix {
        let cols = self.degrees.get(&k).map_or(&[][..], Vec::as_slice);
        let columns = cols
            .iter()
            .map(|&g| {
                let mut col: Vec<usize> = c.boundary_of(g).iter().map(|&t| self.local[t]).collect();
                col.sort_unstable();
                col
            })
            .collect();
        F2Matrix::from_columns(self.size(k - 1), columns).expect("boundary rows in range")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomologyPart {
    pub dimension: usize,
    pub representatives: Vec<Chain>,
}

/// Homology by Maslov grading. Only nonzero gradings are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedHomology {
    parts: BTreeMap<i64, HomologyPart>,
}

impl GradedHomology {
    pub fn total_dimension(&self) -> usize {
        self.parts.values().map(|p| p.dimension).sum()
    }

    pub fn dimension_at(&self, grading: i64) -> usize {
        self.parts.get(&grading).map_or(0, |p| p.dimension)
    }

    pub fn dimensions(&self) -> BTreeMap<i64, usize> {
        self.parts.iter().map(|(&k, p)| (k, p.dimension)).collect()
    }

    pub fn part(&self, grading: i64) -> Option<&HomologyPart> {
        self.parts.get(&grading)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &HomologyPart)> {
        self.parts.iter()
    }
}

/// Puts representatives in reduced echelon form: no representative has an
/// entry at another's pivot. Inputs have distinct pivots.
fn echelon(mut reps: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    reps.sort_by_key(|r| *r.last().expect("nonzero representative"));
    for a in 0..reps.len() {
        let pivot = *reps[a].last().unwrap();
        let source = reps[a].clone();
        for (b, rep) in reps.iter_mut().enumerate() {
            if b != a && rep.binary_search(&pivot).is_ok() {
                xor_into(rep, &source);
            }
        }
    }
    reps
}

pub fn homology(c: &FundamentalComplex) -> GradedHomology {
    let graded = GradedIndex::new(c);
    let mut parts = BTreeMap::new();
    // Top grading first so the pivots of ∂_{k+1} can clear columns of ∂_k.
    let mut above: Option<(i64, Reduction)> = None;
    for (&k, gens) in graded.degrees.iter().rev() {
        let clear: Vec<bool> = match &above {
            Some((ka, red)) if *ka == k + 1 => (0..gens.len())
                .map(|row| red.column_with_pivot(row).is_some())
                .collect(),
            _ => Vec::new(),
        };
        let d = graded.boundary_matrix(c, k);
        let red = reduce_with_clearing(&d, true, &clear);
        let image = match &above {
            Some((ka, r)) if *ka == k + 1 => Some(r),
            _ => None,
        };
        let reps: Vec<Vec<usize>> = red
            .zero_columns()
            .map(|col| {
                let mut v = red.transform_column(col).expect("tracked").to_vec();
                if let Some(img) = image {
                    img.reduce_in_place(&mut v);
                }
                v
            })
            .collect();
        if !reps.is_empty() {
            let reps = echelon(reps);
            parts.insert(
                k,
                HomologyPart {
                    dimension: reps.len(),
                    representatives: reps
                        .into_iter()
                        .map(|v| Chain::from_indices(v.into_iter().map(|l| gens[l])))
                        .collect(),
                },
            );
        }
        above = Some((k, red));
    }
    GradedHomology { parts }
}

/// Rank of ∂ out of each grading.
pub fn boundary_ranks(c: &FundamentalComplex) -> BTreeMap<i64, usize> {
    let graded = GradedIndex::new(c);
    graded
        .degrees
        .keys()
        .map(|&k| (k, reduce(&graded.boundary_matrix(c, k), false).rank()))
        .collect()
}

/// Whether a translate-0 chain of `c` is a boundary. Inhomogeneous chains
/// are split by grading.
pub fn is_boundary(c: &FundamentalComplex, chain: &Chain) -> bool {
    let graded = GradedIndex::new(c);
    let mut by_grading: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for t in chain.terms() {
        debug_assert_eq!(t.translate, 0);
        by_grading
            .entry(c.generator(t.generator).maslov)
            .or_default()
            .push(graded.local[t.generator]);
    }
    by_grading.into_iter().all(|(k, mut v)| {
        v.sort_unstable();
        let d = graded.boundary_matrix(c, k + 1);
        reduce(&d, false).in_column_space(&v)
    })
}

/// Returns the standard generator of `c` (homology class of rank one), or
/// the reasons `c` is not standard.
pub fn standard_generator(c: &FundamentalComplex) -> Result<Chain, EngineError> {
    let report = model::validate_standard(c);
    if !report.standard {
        return Err(EngineError::NonStandard(report.issues));
    }
    Ok(report
        .generator
        .expect("standard complexes have a generator"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TowerImage {
    pub translate: i64,
    pub nonzero: bool,
    pub grading: Option<i64>,
}

fn tower_image_of(c: &FundamentalComplex, generator: &Chain, l: i64, region: Region) -> TowerImage {
    let (piece, kept) = truncate_with_map(c, l, region);
    let chain = truncate_chain(c, &generator.translated(l), l, region, &kept);
    let zero = TowerImage {
        translate: l,
        nonzero: false,
        grading: None,
    };
    if chain.is_zero() {
        return zero;
    }
    debug_assert!(chain.is_cycle(&piece), "truncation is a chain map");
    if is_boundary(&piece, &chain) {
        return zero;
    }
    TowerImage {
        translate: l,
        nonzero: true,
        grading: chain.grading(&piece),
    }
}

/// Image of the translated standard generator `U^{-l}·g` in the homology of
/// the truncated translate.
pub fn tower_image(
    c: &FundamentalComplex,
    l: i64,
    region: Region,
) -> Result<TowerImage, EngineError> {
    if !matches!(region, Region::MaxGe(_)) {
        return Err(EngineError::UnsupportedRegion);
    }
    let g = standard_generator(c)?;
    Ok(tower_image_of(c, &g, l, region))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub d: i64,
    pub translate: i64,
    pub trace: Vec<TowerImage>,
}

/// Translates scanned for the tower bottom.
pub fn scan_window(c: &FundamentalComplex) -> std::ops::RangeInclusive<i64> {
    let w = c.coordinate_extent() + 1;
    -w..=w
}

/// d(S³₊₁(K)) with the full per-translate trace.
pub fn d_plus_one_surgery_report(c: &FundamentalComplex) -> Result<SurgeryReport, EngineError> {
    let g = standard_generator(c)?;
    let window = scan_window(c);
    let translates: Vec<i64> = window.clone().collect();
    let trace: Vec<TowerImage> = translates
        .par_iter()
        .map(|&l| tower_image_of(c, &g, l, Region::MaxGe(0)))
        .collect();
    let best = trace
        .iter()
        .filter_map(|t| t.grading.filter(|_| t.nonzero).map(|d| (d, t.translate)))
        .min();
    match best {
        Some((d, translate)) => Ok(SurgeryReport {
            d,
            translate,
            trace,
        }),
        None => Err(EngineError::TowerNotFound {
            from: *window.start(),
            to: *window.end(),
        }),
    }
}

pub fn d_plus_one_surgery(c: &FundamentalComplex) -> Result<i64, EngineError> {
    d_plus_one_surgery_report(c).map(|r| r.d)
}

/// d(S³₋₁(K)) = -d(S³₊₁(K̄)); the trace is that of the mirror.
pub fn d_minus_one_surgery_report(c: &FundamentalComplex) -> Result<SurgeryReport, EngineError> {
    let mut report = d_plus_one_surgery_report(&mirror(c))?;
    report.d = -report.d;
    if report.d < 0 {
        return Err(EngineError::NegativeCorrectionTerm(report.d));
    }
    Ok(report)
}

pub fn d_minus_one_surgery(c: &FundamentalComplex) -> Result<i64, EngineError> {
    d_minus_one_surgery_report(c).map(|r| r.d)
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaReport {
    pub m: usize,
    pub components: usize,
    pub beta: Vec<String>,
    pub boundary_zero: bool,
    pub nonzero_class: bool,
    pub grading: Option<i64>,
    pub homology_dimension: usize,
    pub matches_truncated_alpha: bool,
}

/// Builds β = (x₅+x₉)^{⊗m} + (x₅+x₁)^{⊗m} + x₅^{⊗m} in
/// `9₄₂^{⊗m}{max(i,j) ≥ 0}` and checks that it is the homology generator
/// there, at grading 0, and equals the truncation of α^{⊗m}.
pub fn verify_beta(m: usize) -> Result<BetaReport, EngineError> {
    let base = model::build_9_42();
    let power = tensor_power(&base, m)?;
    let chain = |names: &[&str]| Chain::from_names(&base, names).expect("9_42 names");
    let n = base.len();
    let mut beta = chain(&["x5", "x9"]).tensor_power(n, m);
    beta.add_assign(&chain(&["x5", "x1"]).tensor_power(n, m));
    beta.add_assign(&chain(&["x5"]).tensor_power(n, m));
    let alpha = chain(&["x1", "x5", "x9"]).tensor_power(n, m);

    let region = Region::MaxGe(0);
    let (piece, kept) = truncate_with_map(&power, 0, region);
    let fail = |detail: String| EngineError::BetaMismatch { m, detail };

    let beta_t = truncate_chain(&power, &beta, 0, region, &kept);
    if beta_t.len() != beta.len() {
        return Err(fail("beta has components outside max(i,j) >= 0".into()));
    }
    let alpha_t = truncate_chain(&power, &alpha, 0, region, &kept);
    let matches = alpha_t == beta_t;
    let boundary_zero = beta_t.is_cycle(&piece);
    let h = homology(&piece);
    let nonzero = boundary_zero && !is_boundary(&piece, &beta_t);
    let grading = beta_t.grading(&piece);
    let report = BetaReport {
        m,
        components: beta_t.len(),
        beta: beta_t.names(&piece),
        boundary_zero,
        nonzero_class: nonzero,
        grading,
        homology_dimension: h.total_dimension(),
        matches_truncated_alpha: matches,
    };
    let mut problems = Vec::new();
    if !boundary_zero {
        problems.push("∂β ≠ 0".to_string());
    }
    if !nonzero {
        problems.push("[β] = 0".to_string());
    }
    if grading != Some(0) {
        problems.push(format!("grading {grading:?} ≠ 0"));
    }
    if report.homology_dimension != 1 {
        problems.push(format!("dim H = {}", report.homology_dimension));
    }
    if !matches {
        let diff = {
            let mut d = alpha_t.clone();
            d.add_assign(&beta_t);
            d.names(&piece)
        };
        problems.push(format!("truncated α^⊗m differs from β by {diff:?}"));
    }
    if problems.is_empty() {
        Ok(report)
    } else {
        Err(fail(problems.join(", ")))
    }
}

/// Compares the column `{i = 0, j <= 0}` of `9₄₂^{⊗m}` with the m-th tensor
/// power of the trefoil staircase shifted to top grading 0.
pub fn column_model_check(m: usize) -> bool {
    let Ok(power) = tensor_power(&model::build_9_42(), m) else {
        return false;
    };
    let column = truncate(&power, 0, Region::BandI(0));
    let Ok(trefoil) = tensor_power(&model::build_trefoil(model::Hand::Left), m) else {
        return false;
    };
    let top = trefoil
        .generators()
        .iter()
        .map(|g| g.maslov)
        .max()
        .unwrap_or(0);
    // top grading of the staircase power is even, so a translate shifts it to 0
    let shifted = translate(&trefoil, -top / 2);
    column.graded_dimensions() == shifted.graded_dimensions()
        && homology(&column).dimensions() == homology(&shifted).dimensions()
}

/// `Term` helper for callers building chains by hand.
pub fn term(generator: usize, translate: i64) -> Term {
    Term {
        translate,
        generator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_9_42, build_trefoil, build_unknot, Hand};

    #[test]
    fn tensor_with_unknot_is_identity() {
        let c = build_9_42();
        assert!(tensor(&build_unknot(), &c).equal_up_to_renaming(&c));
        assert!(tensor(&c, &build_unknot()).equal_up_to_renaming(&c));
    }

    #[test]
    fn tensor_sizes_and_gradings() {
        let c = build_9_42();
        let t = tensor(&c, &c);
        assert_eq!(t.len(), 81);
        let k = t.index_of("x5|x4").unwrap();
        assert_eq!(t.generator(k).maslov, -1);
        assert_eq!(tensor_power(&c, 3).unwrap().len(), 729);
        assert!(tensor_power(&c, 1).unwrap() == c);
        assert_eq!(
            tensor_power(&c, 0).unwrap_err(),
            EngineError::ZeroTensorPower
        );
    }

    #[test]
    fn alpha_power_is_cycle() {
        let c = build_9_42();
        let alpha = Chain::from_names(&c, &["x1", "x5", "x9"]).unwrap();
        for m in 1..=3 {
            let p = tensor_power(&c, m).unwrap();
            assert!(alpha.tensor_power(c.len(), m).is_cycle(&p));
        }
    }

    #[test]
    fn mirror_cases() {
        let c = build_9_42();
        assert!(mirror(&mirror(&c)).equal_up_to_renaming(&c));
        assert!(
            mirror(&build_trefoil(Hand::Left)).equal_up_to_renaming(&build_trefoil(Hand::Right))
        );
        assert!(mirror(&build_unknot()).equal_up_to_renaming(&build_unknot()));
    }

    #[test]
    fn truncation_counts() {
        let c = build_9_42();
        let t = truncate(&c, 0, Region::MaxGe(0));
        let mut names: Vec<_> = t.generators().iter().map(|g| g.name.as_str()).collect();
        names.sort();
        assert_eq!(names, vec!["x1", "x4", "x5", "x6", "x9"]);
        let t2 = truncate(&tensor(&c, &c), 0, Region::MaxGe(0));
        assert_eq!(t2.len(), 17);
        let t3 = truncate(&c, -1, Region::MaxGe(0));
        assert!(t3.index_of("x5").is_none());
        assert!(t3.generators().iter().all(|g| g.i.max(g.j) >= 0));
    }

    #[test]
    fn restricted_differentials() {
        let c = build_9_42();
        let t = truncate(&c, 0, Region::MaxGe(0));
        let x5 = Chain::from_names(&t, &["x5"]).unwrap();
        assert_eq!(
            x5.boundary(&t),
            Chain::from_names(&t, &["x6", "x4"]).unwrap()
        );
    }

    #[test]
    fn homology_examples() {
        let c = build_9_42();
        let h = homology(&c);
        assert_eq!(h.dimensions(), BTreeMap::from([(0, 1)]));
        let rep = &h.part(0).unwrap().representatives[0];
        assert_eq!(*rep, Chain::from_names(&c, &["x1", "x5", "x9"]).unwrap());
        let ht = homology(&truncate(&c, 0, Region::MaxGe(0)));
        assert_eq!(ht.dimensions(), BTreeMap::from([(0, 1)]));
        let empty = truncate(&c, -10, Region::MaxGe(0));
        assert!(empty.is_empty());
        assert_eq!(homology(&empty).total_dimension(), 0);
    }

    #[test]
    fn tower_images_on_9_42() {
        let c = build_9_42();
        let t0 = tower_image(&c, 0, Region::MaxGe(0)).unwrap();
        assert!(t0.nonzero);
        assert_eq!(t0.grading, Some(0));
        let tm1 = tower_image(&c, -1, Region::MaxGe(0)).unwrap();
        assert!(!tm1.nonzero);
        let u = tower_image(&build_unknot(), 0, Region::MaxGe(0)).unwrap();
        assert_eq!((u.nonzero, u.grading), (true, Some(0)));
        assert_eq!(
            tower_image(&c, 0, Region::BandI(0)).unwrap_err(),
            EngineError::UnsupportedRegion
        );
    }

    #[test]
    fn d_invariants_of_small_knots() {
        assert_eq!(d_plus_one_surgery(&build_unknot()).unwrap(), 0);
        assert_eq!(d_minus_one_surgery(&build_unknot()).unwrap(), 0);
        assert_eq!(d_plus_one_surgery(&build_9_42()).unwrap(), 0);
        assert_eq!(d_plus_one_surgery(&build_trefoil(Hand::Right)).unwrap(), -2);
        assert_eq!(d_plus_one_surgery(&build_trefoil(Hand::Left)).unwrap(), 0);
        assert_eq!(d_minus_one_surgery(&build_trefoil(Hand::Right)).unwrap(), 0);
        assert_eq!(d_minus_one_surgery(&build_trefoil(Hand::Left)).unwrap(), 2);
        assert!(d_minus_one_surgery(&build_9_42()).unwrap() >= 0);
    }

    #[test]
    fn non_standard_rejected() {
        let c = FundamentalComplex::new(
            vec![Generator::new("p", 0, 0, 0), Generator::new("q", 1, 1, 2)],
            Vec::new(),
        )
        .unwrap();
        assert!(matches!(
            d_plus_one_surgery(&c),
            Err(EngineError::NonStandard(_))
        ));
    }

    #[test]
    fn beta_small_cases() {
        let r1 = verify_beta(1).unwrap();
        let mut names = r1.beta.clone();
        names.sort();
        assert_eq!(names, vec!["x1", "x5", "x9"]);
        let r2 = verify_beta(2).unwrap();
        assert_eq!(r2.components, 7);
    }

    #[test]
    fn column_model_small_cases() {
        for m in 1..=3 {
            assert!(column_model_check(m), "m = {m}");
        }
    }
}
