//! Exact integer and rational arithmetic behind the non-orientable genus
//! bound `β₁(F) ≥ e(F)/2 − 2d(S³₋₁(K))`.
//!
//! The surface `F'` obtained by resolving a Möbius band lives in
//! `n·CP̄² # S²×S²` and, after capping with the core of a (−1)-framed
//! handle, becomes a closed surface `Σ` in a 4-manifold `W̄` whose
//! intersection form is `(n+1)⟨−1⟩ ⊕ H`. Basis order throughout is
//! `γ̄₀, γ̄₁, …, γ̄ₙ, α, β`.
//!
//! Everything here is exact: integers for lattice quantities, big rationals
//! for the fractional terms of the circle-bundle correction term. No
//! floating point is used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

fn is_symmetric(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    matrix.iter().all(|row| row.len() == n)
        && (0..n).all(|r| (0..r).all(|c| matrix[r][c] == matrix[c][r]))
}

/// Inertia of a symmetric integer matrix by exact symmetric elimination.
///
/// A nonzero diagonal entry is eliminated as a 1×1 pivot. When the whole
/// remaining diagonal vanishes but some off-diagonal `a_pq` does not, the
/// block `[[0, a], [a, 0]]` is eliminated at once; it contributes one
/// positive and one negative direction.
pub fn inertia(matrix: &[Vec<i64>]) -> Result<Inertia, LatticeError> {
    if !is_symmetric(matrix) {
        return Err(LatticeError::NotSymmetric);
    }
    let mut a: Vec<Vec<Rational>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| rat(v)).collect())
        .collect();
    let mut remaining: Vec<usize> = (0..matrix.len()).collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !remaining.is_empty() {
        if let Some(pos) = remaining.iter().position(|&p| !a[p][p].is_zero()) {
            let p = remaining.remove(pos);
            let pivot = a[p][p].clone();
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for &r in &remaining {
                if a[r][p].is_zero() {
                    continue;
                }
                let factor = &a[r][p] / &pivot;
                for &s in &remaining {
                    let delta = &factor * &a[p][s];
                    a[r][s] -= delta;
                }
            }
            continue;
        }
        let pair = remaining.iter().enumerate().find_map(|(x, &p)| {
            remaining[x + 1..]
                .iter()
                .find(|&&q| !a[p][q].is_zero())
                .map(|&q| (p, q))
        });
        let Some((p, q)) = pair else {
            out.zero += remaining.len();
            break;
        };
        remaining.retain(|&r| r != p && r != q);
        let off = a[p][q].clone();
        out.positive += 1;
        out.negative += 1;
        // Schur complement against [[0, off], [off, 0]]
        let rows: Vec<(usize, Rational, Rational)> = remaining
            .iter()
            .map(|&r| (r, a[r][p].clone(), a[r][q].clone()))
            .collect();
        for (r, rp, rq) in &rows {
            for (s, sp, sq) in &rows {
                let delta = (rp * sq + rq * sp) / &off;
                a[*r][*s] -= delta;
            }
        }
    }
    Ok(out)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> Result<BigInt, LatticeError> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(LatticeError::NotSymmetric);
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * a[n - 1][n - 1].clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    pub matrix: Vec<Vec<i64>>,
    pub labels: Vec<String>,
}

impl QuadraticForm {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn pair(&self, v: &[i64], w: &[i64]) -> i64 {
        let mut acc = 0;
        for (r, row) in self.matrix.iter().enumerate() {
            for (c, &q) in row.iter().enumerate() {
                acc += v[r] * q * w[c];
            }
        }
        acc
    }

    pub fn evaluate(&self, v: &[i64]) -> i64 {
        self.pair(v, v)
    }

    pub fn inertia(&self) -> Inertia {
        inertia(&self.matrix).expect("forms are symmetric")
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.matrix).expect("forms are square")
    }

    /// `v · w ≡ w · w (mod 2)` for every basis vector `w`.
    pub fn is_characteristic(&self, v: &[i64]) -> bool {
        (0..self.dim()).all(|k| {
            let vw: i64 = (0..self.dim()).map(|r| v[r] * self.matrix[r][k]).sum();
            (vw - self.matrix[k][k]).rem_euclid(2) == 0
        })
    }
}

/// Intersection form of `W̄`: `n + 1` copies of ⟨−1⟩ then the hyperbolic
/// plane on `α, β`.
pub fn q_wbar(n: usize) -> QuadraticForm {
    let dim = n + 3;
    let mut matrix = vec![vec![0; dim]; dim];
    for (k, row) in matrix.iter_mut().enumerate().take(n + 1) {
        row[k] = -1;
    }
    matrix[n + 1][n + 2] = 1;
    matrix[n + 2][n + 1] = 1;
    let mut labels: Vec<String> = (0..=n).map(|k| format!("gamma{k}")).collect();
    labels.push("alpha".into());
    labels.push("beta".into());
    QuadraticForm { matrix, labels }
}

/// Parameters of the class `Σᵢ≤ⱼ 2aᵢγ̄ᵢ + Σᵢ>ⱼ (2aᵢ+1)γ̄ᵢ + 2α + bβ` and
/// the genus `g` of the capped surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpincParameters {
    pub n: usize,
    pub j: usize,
    pub a: Vec<i64>,
    pub b: i64,
    pub g: i64,
}

impl SpincParameters {
    pub fn new(n: usize, j: usize, a: Vec<i64>, b: i64, g: i64) -> Result<Self, LatticeError> {
        let p = Self { n, j, a, b, g };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        if self.a.len() != self.n {
            return Err(LatticeError::InvalidParameters(format!(
                "expected {} coefficients a_i, found {}",
                self.n,
                self.a.len()
            )));
        }
        if self.j > self.n {
            return Err(LatticeError::InvalidParameters(format!(
                "j = {} exceeds n = {}",
                self.j, self.n
            )));
        }
        if self.g < 0 {
            return Err(LatticeError::InvalidParameters(format!(
                "genus {} is negative",
                self.g
            )));
        }
        Ok(())
    }

    /// Coefficient of γ̄ᵢ (1-based) in the class of `F'`.
    fn gamma_coefficient(&self, i: usize) -> i64 {
        let a = self.a[i - 1];
        if i <= self.j {
            2 * a
        } else {
            2 * a + 1
        }
    }

    /// Class of `F'`; the γ̄₀ coordinate is zero.
    pub fn surface_class(&self) -> Vec<i64> {
        let mut v = vec![0];
        v.extend((1..=self.n).map(|i| self.gamma_coefficient(i)));
        v.push(2);
        v.push(self.b);
        v
    }

    /// Class of the capped surface `Σ`, which adds `γ̄₀`.
    pub fn closed_class(&self) -> Vec<i64> {
        let mut v = self.surface_class();
        v[0] = 1;
        v
    }

    /// `Σᵢ≤ⱼ 2aᵢ`, the even part entering `x`.
    fn even_sum(&self) -> i64 {
        self.a[..self.j].iter().map(|a| 2 * a).sum()
    }

    pub fn beta1(&self) -> i64 {
        2 * self.g + 1
    }
}

/// Self-intersection of `F'`: `−Σᵢ≤ⱼ 4aᵢ² − Σᵢ>ⱼ (2aᵢ+1)² + 4b`.
pub fn euler_from_class(p: &SpincParameters) -> i64 {
    let evens: i64 = p.a[..p.j].iter().map(|a| 4 * a * a).sum();
    let odds: i64 = p.a[p.j..].iter().map(|a| (2 * a + 1).pow(2)).sum();
    -evens - odds + 4 * p.b
}

/// Self-intersection `m` of `Σ`, computed in closed form and checked
/// against the intersection form.
pub fn self_intersection_m(p: &SpincParameters) -> Result<i64, LatticeError> {
    p.validate()?;
    let m = -1 + euler_from_class(p);
    let via_form = q_wbar(p.n).evaluate(&p.closed_class());
    if via_form != m {
        return Err(LatticeError::Inconsistent(format!(
            "closed-form m = {m} but Q(Σ) = {via_form}"
        )));
    }
    Ok(m)
}

/// Normal Euler number of the original non-orientable surface, `m − 1`.
pub fn surface_euler(p: &SpincParameters) -> Result<i64, LatticeError> {
    Ok(self_intersection_m(p)? - 1)
}

/// Numerators `Σᵢ≤ⱼ 2aᵢ + 2(b − g) − 1 + ε` for ε = +1 and ε = −1.
pub fn epsilon_numerators(p: &SpincParameters) -> [(i64, i64); 2] {
    let base = p.even_sum() + 2 * (p.b - p.g) - 1;
    [(1, base + 1), (-1, base - 1)]
}

/// The unique ε ∈ {±1} making `x` integral, and that `x`.
pub fn choose_epsilon(p: &SpincParameters) -> Result<(i64, i64), LatticeError> {
    p.validate()?;
    pick_epsilon(epsilon_numerators(p))
}

fn pick_epsilon(candidates: [(i64, i64); 2]) -> Result<(i64, i64), LatticeError> {
    let integral: Vec<(i64, i64)> = candidates
        .into_iter()
        .filter(|(_, num)| num.rem_euclid(4) == 0)
        .map(|(eps, num)| (eps, num / 4))
        .collect();
    match integral.as_slice() {
        [one] => Ok(*one),
        _ => Err(LatticeError::Inconsistent(format!(
            "{} choices of epsilon give an integral x",
            integral.len()
        ))),
    }
}

/// Poincaré dual of `c₁(s_t)`: `εγ̄₀ + Σ(2aᵢ+1)γ̄ᵢ + 2α + 2xβ`.
pub fn c1_vector(p: &SpincParameters) -> Result<Vec<i64>, LatticeError> {
    let (eps, x) = choose_epsilon(p)?;
    let mut v = vec![eps];
    v.extend(p.a.iter().map(|a| 2 * a + 1));
    v.push(2);
    v.push(2 * x);
    Ok(v)
}

/// Closed form `e(F) − j − 1 + 2ε − 4g`.
pub fn c1_squared_closed_form(p: &SpincParameters) -> Result<i64, LatticeError> {
    let (eps, _) = choose_epsilon(p)?;
    Ok(surface_euler(p)? - p.j as i64 - 1 + 2 * eps - 4 * p.g)
}

/// `c₁(s_t)²`, evaluated on the form and in closed form; they must agree.
pub fn c1_squared(p: &SpincParameters) -> Result<i64, LatticeError> {
    let m = self_intersection_m(p)?;
    if m <= 0 {
        return Err(LatticeError::Precondition(format!(
            "m = {m} is not positive"
        )));
    }
    let via_form = q_wbar(p.n).evaluate(&c1_vector(p)?);
    let closed = c1_squared_closed_form(p)?;
    if via_form != closed {
        return Err(LatticeError::Inconsistent(format!(
            "c1^2 = {via_form} on the form but {closed} in closed form"
        )));
    }
    Ok(via_form)
}

/// `⟨c₁(s_t), [Σ]⟩` as the pairing of the two vectors.
pub fn c1_pairing_with_sigma(p: &SpincParameters) -> Result<i64, LatticeError> {
    Ok(q_wbar(p.n).pair(&c1_vector(p)?, &p.closed_class()))
}

/// Correction term `1/4 − g²/m − m/4` of the Euler number −m circle bundle
/// over a genus-g surface, for the structure with `⟨c₁, [Σ]⟩ = m − 2g > 0`.
pub fn d_b_circle_bundle(g: i64, m: i64) -> Result<Rational, LatticeError> {
    if g < 0 {
        return Err(LatticeError::Precondition(format!("genus {g} is negative")));
    }
    if m <= 0 {
        return Err(LatticeError::Precondition(format!(
            "m = {m} is not positive"
        )));
    }
    if m - 2 * g <= 0 {
        return Err(LatticeError::Precondition(format!(
            "m - 2g = {} is not positive",
            m - 2 * g
        )));
    }
    Ok(frac(1, 4) - frac(g * g, m) - frac(m, 4))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternativeReading {
    pub epsilon: i64,
    pub x: i64,
    pub c1_squared: i64,
    pub closed_form_agrees: bool,
}

/// Every intermediate quantity of the inequality chain for one parameter
/// tuple and one value of `d(S³₋₁(K))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub params: SpincParameters,
    pub d_minus: i64,
    pub epsilon: i64,
    pub x: i64,
    pub m: i64,
    pub e: i64,
    pub beta1: i64,
    pub c1_squared: i64,
    pub c1_squared_closed_form: i64,
    pub characteristic: bool,
    pub pairing_with_sigma: i64,
    pub m_minus_2g: i64,
    pub beta2_minus: i64,
    pub beta2_minus_from_signature: i64,
    pub c1_restricted_squared: String,
    pub d_b: String,
    pub ineq2_lhs: String,
    pub ineq2_rhs: String,
    pub ineq2_holds: bool,
    pub ineq3_lhs: i64,
    pub ineq3_rhs: i64,
    pub holds: bool,
    pub ineq4_lhs: i64,
    pub ineq5_lhs: String,
    pub ineq5_rhs: i64,
    pub ineq5_holds: bool,
    pub weakening_valid: bool,
    pub prop14_bound: String,
    pub alt_reading: AlternativeReading,
}

impl AuditReport {
    /// Internal-consistency checks that must hold for every tuple.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.characteristic {
            out.push("characteristic");
        }
        if self.c1_squared != self.c1_squared_closed_form {
            out.push("dual-route");
        }
        if self.pairing_with_sigma != self.m_minus_2g {
            out.push("pairing");
        }
        if self.holds && self.weakening_valid && !self.ineq5_holds {
            out.push("implication");
        }
        if self.ineq2_holds != self.holds {
            out.push("ineq2-equivalence");
        }
        if self.beta2_minus != self.beta2_minus_from_signature {
            out.push("beta2-minus");
        }
        out
    }
}

fn alternative_reading(p: &SpincParameters, closed: i64) -> AlternativeReading {
    // x with the even sum taken over all of 1..=n instead of 1..=j
    let all: i64 = p.a.iter().map(|a| 2 * a).sum();
    let base = all + 2 * (p.b - p.g) - 1;
    let (epsilon, x) = pick_epsilon([(1, base + 1), (-1, base - 1)])
        .expect("the two numerators differ by two, so one is divisible by four");
    let odd_squares: i64 = p.a.iter().map(|a| (2 * a + 1).pow(2)).sum();
    let c1_squared = -1 - odd_squares + 8 * x;
    AlternativeReading {
        epsilon,
        x,
        c1_squared,
        closed_form_agrees: c1_squared == closed,
    }
}

/// Walks the chain from the correction-term inequality for the restricted
/// spin^c structure (`ineq2`), through its integer form
/// `c₁² + β₂⁻ ≤ 1 + 4d` (`ineq3`) and the weakened closed form (`ineq4`),
/// to `e(F)/2 − 2d ≤ β₁(F)` (`ineq5`), for `p` and `d = d(S³₋₁(K))`.
pub fn audit_inequality_chain(
    p: &SpincParameters,
    d_minus: i64,
) -> Result<AuditReport, LatticeError> {
    p.validate()?;
    let m = self_intersection_m(p)?;
    if m <= 0 || m - 2 * p.g <= 0 {
        return Err(LatticeError::Precondition(format!(
            "need m > 0 and m - 2g > 0, got m = {m}, g = {}",
            p.g
        )));
    }
    let form = q_wbar(p.n);
    let (epsilon, x) = choose_epsilon(p)?;
    let c1 = c1_vector(p)?;
    let c1_sq = form.evaluate(&c1);
    let closed = c1_squared_closed_form(p)?;
    let e = m - 1;
    let beta1 = p.beta1();

    let inertia = form.inertia();
    let beta2_minus = p.n as i64 + 2;

    let restricted = rat(c1_sq) - frac((m - 2 * p.g).pow(2), m);
    let d_b = d_b_circle_bundle(p.g, m)?;
    let ineq2_lhs = &restricted + rat(beta2_minus);
    let ineq2_rhs = rat(4) * &d_b + rat(4 * d_minus) + rat(4 * p.g);

    let ineq3_lhs = c1_sq + beta2_minus;
    let ineq3_rhs = 1 + 4 * d_minus;
    let ineq4_lhs = closed + p.n as i64 + 2;
    let ineq5_lhs = frac(e, 2) - rat(2 * d_minus);

    Ok(AuditReport {
        params: p.clone(),
        d_minus,
        epsilon,
        x,
        m,
        e,
        beta1,
        c1_squared: c1_sq,
        c1_squared_closed_form: closed,
        characteristic: form.is_characteristic(&c1),
        pairing_with_sigma: form.pair(&c1, &p.closed_class()),
        m_minus_2g: m - 2 * p.g,
        beta2_minus,
        beta2_minus_from_signature: inertia.negative as i64,
        c1_restricted_squared: restricted.to_string(),
        d_b: d_b.to_string(),
        ineq2_holds: ineq2_lhs <= ineq2_rhs,
        ineq2_lhs: ineq2_lhs.to_string(),
        ineq2_rhs: ineq2_rhs.to_string(),
        ineq3_lhs,
        ineq3_rhs,
        holds: ineq3_lhs <= ineq3_rhs,
        ineq4_lhs,
        ineq5_holds: ineq5_lhs <= rat(beta1),
        prop14_bound: ineq5_lhs.to_string(),
        ineq5_lhs: ineq5_lhs.to_string(),
        ineq5_rhs: beta1,
        weakening_valid: epsilon >= -1 && p.j <= p.n,
        alt_reading: alternative_reading(p, closed),
    })
}

/// [`audit_inequality_chain`] with `d(S³₋₁(K))` taken from a CFK model.
pub fn audit_for_knot(
    p: &SpincParameters,
    complex: &crate::model::FundamentalComplex,
) -> Result<AuditReport, LatticeError> {
    let d_minus = crate::engine::d_minus_one_surgery(complex)
        .map_err(|e| LatticeError::Inconsistent(e.to_string()))?;
    audit_inequality_chain(p, d_minus)
}

/// Seeded random tuple with `n ≤ 6`, `|aᵢ|, |b| ≤ 10`, `m > 0` and
/// `m − 2g > 0`.
pub fn random_parameters<R: Rng>(rng: &mut R) -> SpincParameters {
    loop {
        let n = rng.gen_range(0..=6usize);
        let j = rng.gen_range(0..=n);
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-10..=10)).collect();
        let b = rng.gen_range(-10..=10);
        let g = rng.gen_range(0..=10);
        let p = SpincParameters { n, j, a, b, g };
        let m = -1 + euler_from_class(&p);
        if m > 0 && m - 2 * g > 0 {
            return p;
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FailureCounts {
    pub epsilon: usize,
    pub characteristic: usize,
    pub dual_route: usize,
    pub pairing: usize,
    pub implication: usize,
    pub ineq2_equivalence: usize,
    pub beta2_minus: usize,
}

impl FailureCounts {
    pub fn total(&self) -> usize {
        self.epsilon
            + self.characteristic
            + self.dual_route
            + self.pairing
            + self.implication
            + self.ineq2_equivalence
            + self.beta2_minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub seed: u64,
    pub trials: usize,
    pub ineq3_held: usize,
    pub ineq5_held: usize,
    pub alt_reading_disagreements: usize,
    pub failures: FailureCounts,
    pub records: Vec<AuditReport>,
}

/// Audits `trials` seeded random tuples, each with a random `d ∈ [0, 4]`.
pub fn run_audit(seed: u64, trials: usize) -> AuditSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = AuditSummary {
        seed,
        trials,
        ineq3_held: 0,
        ineq5_held: 0,
        alt_reading_disagreements: 0,
        failures: FailureCounts::default(),
        records: Vec::with_capacity(trials),
    };
    for _ in 0..trials {
        let p = random_parameters(&mut rng);
        let d_minus = rng.gen_range(0..=4);
        let integral = epsilon_numerators(&p)
            .iter()
            .filter(|(_, num)| num.rem_euclid(4) == 0)
            .count();
        if integral != 1 {
            summary.failures.epsilon += 1;
            continue;
        }
        let report = match audit_inequality_chain(&p, d_minus) {
            Ok(r) => r,
            Err(_) => {
                summary.failures.dual_route += 1;
                continue;
            }
        };
        for f in report.failures() {
            match f {
                "characteristic" => summary.failures.characteristic += 1,
                "dual-route" => summary.failures.dual_route += 1,
                "pairing" => summary.failures.pairing += 1,
                "implication" => summary.failures.implication += 1,
                "ineq2-equivalence" => summary.failures.ineq2_equivalence += 1,
                _ => summary.failures.beta2_minus += 1,
            }
        }
        summary.ineq3_held += usize::from(report.holds);
        summary.ineq5_held += usize::from(report.ineq5_holds);
        summary.alt_reading_disagreements += usize::from(!report.alt_reading.closed_form_agrees);
        summary.records.push(report);
    }
    summary
}
