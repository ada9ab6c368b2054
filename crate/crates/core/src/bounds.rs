//! Knot signatures and the lower bounds for the non-orientable genus.
//!
//! The bound formulas are pure integer functions. [`KnotInvariants`] wires
//! in a Seifert matrix and a CFK model for callers that start from a knot.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use thiserror::Error;

use crate::engine::{self, EngineError};
use crate::lattice;
use crate::model::{self, FundamentalComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("signature {0} is odd")]
    OddSignature(i64),
    #[error("normal Euler number {0} is odd")]
    OddEuler(i64),
    #[error("d(S^3_-1) = {0} is negative")]
    NegativeCorrectionTerm(i64),
    #[error("cannot resolve a Möbius band when beta1 = {0} is even")]
    EvenBeta1(u32),
    #[error("k must be positive")]
    NonPositiveK,
    #[error("lower bound {lower} differs from upper bound {upper}")]
    TableMismatch { lower: i64, upper: i64 },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    /// Accepts a `2g × 2g` integer matrix with `det(V − Vᵀ) = ±1`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, BoundsError> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(BoundsError::InvalidSeifert("matrix is not square".into()));
        }
        if !n.is_multiple_of(2) {
            return Err(BoundsError::InvalidSeifert(format!("odd dimension {n}")));
        }
        let v = Self { entries };
        let det = lattice::determinant(&v.antisymmetrized()).expect("square");
        if det.abs() != BigInt::one() {
            return Err(BoundsError::InvalidSeifert(format!(
                "det(V - V^T) = {det}, expected ±1"
            )));
        }
        Ok(v)
    }

    pub fn genus(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    fn combine(&self, sign: i64) -> Vec<Vec<i64>> {
        let n = self.entries.len();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| self.entries[r][c] + sign * self.entries[c][r])
                    .collect()
            })
            .collect()
    }

    /// `V + Vᵀ`
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        self.combine(1)
    }

    /// `V − Vᵀ`
    pub fn antisymmetrized(&self) -> Vec<Vec<i64>> {
        self.combine(-1)
    }

    /// Seifert matrix of the mirror image, `−Vᵀ`.
    pub fn mirror(&self) -> SeifertMatrix {
        let n = self.entries.len();
        SeifertMatrix {
            entries: (0..n)
                .map(|r| (0..n).map(|c| -self.entries[c][r]).collect())
                .collect(),
        }
    }

    /// `Pᵀ V P`.
    pub fn congruent(&self, p: &[Vec<i64>]) -> Result<SeifertMatrix, BoundsError> {
        let n = self.entries.len();
        let vp: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| (0..n).map(|k| self.entries[r][k] * p[k][c]).sum())
                    .collect()
            })
            .collect();
        let out = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| (0..n).map(|k| p[k][r] * vp[k][c]).sum())
                    .collect()
            })
            .collect();
        SeifertMatrix::new(out)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({:?})", self.entries)
    }
}

/// Knot signature: the signature of `V + Vᵀ`.
pub fn signature(v: &SeifertMatrix) -> i64 {
    lattice::inertia(&v.symmetrized())
        .expect("V + V^T is symmetric")
        .signature()
}

/// Parses blocks of the form
///
/// ```text
/// seifert <name> g=<genus>
/// <2g rows of 2g integers>
/// ```
///
/// `#` starts a comment.
pub fn parse_seifert(text: &str) -> Result<Vec<(String, SeifertMatrix)>, BoundsError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < lines.len() {
        let (line, header) = lines[k];
        let err = |line: usize, message: String| BoundsError::Parse { line, message };
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let [kw, name, genus] = tokens.as_slice() else {
            return Err(err(line, "expected `seifert <name> g=<genus>`".into()));
        };
        if *kw != "seifert" {
            return Err(err(line, format!("expected `seifert`, found `{kw}`")));
        }
        let g: usize = genus
            .strip_prefix("g=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| err(line, format!("bad genus field `{genus}`")))?;
        let size = 2 * g;
        let mut rows = Vec::with_capacity(size);
        for r in 0..size {
            let Some(&(row_line, text)) = lines.get(k + 1 + r) else {
                return Err(err(line, format!("`{name}` needs {size} rows")));
            };
            let row: Vec<i64> = text
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| err(row_line, format!("non-integer entry in `{text}`")))?;
            if row.len() != size {
                return Err(err(
                    row_line,
                    format!("expected {size} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        out.push((name.to_string(), SeifertMatrix::new(rows)?));
        k += 1 + size;
    }
    Ok(out)
}

pub fn signature_connected_sum(sigmas: &[i64]) -> i64 {
    sigmas.iter().sum()
}

fn check_even_signature(sigma: i64) -> Result<(), BoundsError> {
    if sigma % 2 != 0 {
        return Err(BoundsError::OddSignature(sigma));
    }
    Ok(())
}

/// `γ₄(K) ≥ −σ/2 + d(S³₁(K))`.
pub fn batson_bound(sigma: i64, d_plus: i64) -> Result<i64, BoundsError> {
    check_even_signature(sigma)?;
    Ok(-sigma / 2 + d_plus)
}

/// `γ⁰_{nCP²}(K) ≥ −σ/2 + d(S³₁(K)) − n`.
pub fn cp2_bound(sigma: i64, d_plus: i64, n: u32) -> Result<i64, BoundsError> {
    check_even_signature(sigma)?;
    Ok(-sigma / 2 + d_plus - i64::from(n))
}

/// `β₁(F) ≥ e(F)/2 − 2d(S³₋₁(K))` for surfaces in punctured `n·CP̄²`.
pub fn prop14_bound(euler: i64, d_minus: i64) -> Result<i64, BoundsError> {
    if euler % 2 != 0 {
        return Err(BoundsError::OddEuler(euler));
    }
    if d_minus < 0 {
        return Err(BoundsError::NegativeCorrectionTerm(d_minus));
    }
    Ok(euler / 2 - 2 * d_minus)
}

/// `|σ(K) + σ(M) − e(F)/2| ≤ β₂(M) + β₁(F)`.
pub fn yasuhara_check(
    sigma_k: i64,
    sigma_m: i64,
    euler: i64,
    beta2_m: u32,
    beta1_f: u32,
) -> Result<bool, BoundsError> {
    if euler % 2 != 0 {
        return Err(BoundsError::OddEuler(euler));
    }
    Ok((sigma_k + sigma_m - euler / 2).abs() <= i64::from(beta2_m) + i64::from(beta1_f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceState {
    pub beta1: u32,
    pub euler: i64,
    pub ambient_beta2: u32,
    pub ambient_sigma: i64,
    pub null_homologous_mod2: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceMove {
    /// Trade a Möbius band for an orientable piece in an extra S²×S².
    ResolveMobius,
    /// Connected sum with the standard RP² of normal Euler number +2.
    AddRp2,
}

pub fn surface_move(state: SurfaceState, mv: SurfaceMove) -> Result<SurfaceState, BoundsError> {
    match mv {
        SurfaceMove::ResolveMobius => {
            if state.beta1.is_multiple_of(2) {
                return Err(BoundsError::EvenBeta1(state.beta1));
            }
            Ok(SurfaceState {
                beta1: state.beta1 - 1,
                euler: state.euler + 2,
                ambient_beta2: state.ambient_beta2 + 2,
                ..state
            })
        }
        SurfaceMove::AddRp2 => Ok(SurfaceState {
            beta1: state.beta1 + 1,
            euler: state.euler + 2,
            ..state
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundKind {
    Batson,
    Cp2 { n: u32 },
    Prop14 { euler: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub knot: String,
    pub sigma: i64,
    pub d_plus: i64,
    pub d_minus: i64,
    pub bound_value: i64,
    pub bound_kind: BoundKind,
    pub formula: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnotInvariants {
    pub sigma: i64,
    pub d_plus: i64,
    pub d_minus: i64,
}

impl KnotInvariants {
    pub fn compute(
        complex: &FundamentalComplex,
        seifert: &SeifertMatrix,
    ) -> Result<Self, BoundsError> {
        Ok(Self {
            sigma: signature(seifert),
            d_plus: engine::d_plus_one_surgery(complex)?,
            d_minus: engine::d_minus_one_surgery(complex)?,
        })
    }

    pub fn report(&self, knot: &str, kind: BoundKind) -> Result<BoundReport, BoundsError> {
        let (bound_value, formula) = match kind {
            BoundKind::Batson => (
                batson_bound(self.sigma, self.d_plus)?,
                "-sigma/2 + d(S^3_1(K))".to_string(),
            ),
            BoundKind::Cp2 { n } => (
                cp2_bound(self.sigma, self.d_plus, n)?,
                format!("-sigma/2 + d(S^3_1(K)) - {n}"),
            ),
            BoundKind::Prop14 { euler } => (
                prop14_bound(euler, self.d_minus)?,
                format!("{euler}/2 - 2 d(S^3_-1(K))"),
            ),
        };
        Ok(BoundReport {
            knot: knot.to_string(),
            sigma: self.sigma,
            d_plus: self.d_plus,
            d_minus: self.d_minus,
            bound_value,
            bound_kind: kind,
            formula,
        })
    }
}

/// The nCP² bound evaluated through the mirror: `σ(K̄)/2 − d(S³₋₁(K̄)) − n`.
pub fn cp2_bound_via_mirror(
    complex: &FundamentalComplex,
    seifert: &SeifertMatrix,
    n: u32,
) -> Result<i64, BoundsError> {
    let sigma_mirror = signature(&seifert.mirror());
    check_even_signature(sigma_mirror)?;
    let d_minus_mirror = engine::d_minus_one_surgery(&engine::mirror(complex))?;
    Ok(sigma_mirror / 2 - d_minus_mirror - i64::from(n))
}

/// Lower and upper bound for `γ⁰_{nCP²}(#^{n+k} 9₄₂)`, with `d` supplied by
/// the caller for the `(n + k)`-fold connected sum.
pub fn theorem13_table_with(
    n: u32,
    k: u32,
    sigma_9_42: i64,
    d_plus_of_sum: impl FnOnce(usize) -> Result<i64, EngineError>,
) -> Result<(i64, i64), BoundsError> {
    if k == 0 {
        return Err(BoundsError::NonPositiveK);
    }
    let copies = (n + k) as usize;
    let sigma = signature_connected_sum(&vec![sigma_9_42; copies]);
    let lower = cp2_bound(sigma, d_plus_of_sum(copies)?, n)?;
    // n disks in punctured CP² and k Möbius bands in B⁴
    let upper = i64::from(k);
    if lower != upper {
        return Err(BoundsError::TableMismatch { lower, upper });
    }
    Ok((lower, upper))
}

pub fn theorem13_table(
    n: u32,
    k: u32,
    seifert_9_42: &SeifertMatrix,
) -> Result<(i64, i64), BoundsError> {
    theorem13_table_with(n, k, signature(seifert_9_42), |m| {
        engine::d_plus_one_surgery(&engine::tensor_power(&model::build_9_42(), m)?)
    })
}
