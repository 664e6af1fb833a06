//! Deductions over the computed data: maximality, the Castelnuovo-type
//! genus bound, the p-adic criterion, the generic order sequence and the
//! admissible values of `j_2` at rational places.

mod report;

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::curves::{maximal_n, PlaceCensus};
use crate::numsg::{OrderRole, OrderSequence};

pub use report::{
    render_text, theorem_report, CensusSection, DimensionSection, GenusSection, PlaceOrders,
    ReportOptions, SemigroupFragment, VerificationReport, SCHEMA_VERSION,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("Frobenius dimension must be at least 2")]
    DimensionTooSmall,
    #[error("no j_2 observations supplied")]
    NoObservations,
    #[error("j_2 = {0} is impossible: j_2 >= 2 at every place")]
    ImpossibleJ2(u64),
    #[error("observed minimum j_2 = {observed} is not an admissible value of ε_2 (p = {p})")]
    InadmissibleEpsilon { observed: u64, p: u64 },
    #[error("ε_2 is not determined: candidates {0:?}")]
    Inconclusive(Vec<u64>),
    #[error("q = {q} must exceed ε_2 = {epsilon}")]
    DegenerateSequence { q: u64, epsilon: u64 },
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default)]
    pub witness: serde_json::Value,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into(), witness: serde_json::Value::Null }
    }

    pub fn with_witness(mut self, witness: serde_json::Value) -> Self {
        self.witness = witness;
        self
    }

    /// `name` passes iff `actual == expected`.
    pub fn equal<T: PartialEq + std::fmt::Debug + Serialize>(name: &str, actual: T, expected: T) -> Self {
        let passed = actual == expected;
        Check::new(name, passed, format!("got {actual:?}, expected {expected:?}"))
            .with_witness(json!({ "actual": actual, "expected": expected }))
    }
}

/// Passes iff the census total attains `q^2 + 1 + 2gq`.
pub fn check_maximal(census: &PlaceCensus, g: u64, q: u64) -> Check {
    let total = census.total();
    let expected = maximal_n(q, g);
    let delta = total as i64 - expected as i64;
    let detail = if delta == 0 {
        format!("N = {total} = {q}^2 + 1 + 2·{g}·{q}")
    } else {
        format!("N = {total}, Hasse-Weil bound {expected}, delta {delta:+}")
    };
    Check::new("maximal", delta == 0, detail)
        .with_witness(json!({ "total": total, "expected": expected, "delta": delta }))
}

/// The genus bound for a maximal curve of Frobenius dimension `r`, kept as
/// an unreduced fraction so it can be printed the way it is computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBound<T> {
    pub numerator: T,
    pub denominator: T,
}

impl<T: Integer + Clone> GenusBound<T> {
    pub fn value(&self) -> Ratio<T> {
        Ratio::new(self.numerator.clone(), self.denominator.clone())
    }

    /// `g <= bound`, by cross-multiplication.
    pub fn admits(&self, g: &T) -> bool {
        g.clone() * self.denominator.clone() <= self.numerator
    }
}

/// `((2q-(r-1))^2 - 1) / (8(r-1))` for even `r`, `(2q-(r-1))^2 / (8(r-1))`
/// for odd `r`.
pub fn castelnuovo_bound<T>(q: T, r: T) -> Result<GenusBound<T>, VerifyError>
where
    T: Integer + Clone + From<u8>,
{
    if r < T::from(2) {
        return Err(VerifyError::DimensionTooSmall);
    }
    let rm1 = r.clone() - T::one();
    let t = T::from(2) * q - rm1.clone();
    let mut numerator = t.clone() * t;
    if r.is_even() {
        numerator = numerator - T::one();
    }
    Ok(GenusBound { numerator, denominator: T::from(8) * rm1 })
}

/// Frobenius dimensions compatible with genus `g` over `F_{q^2}`: every
/// `2 <= r <= q+1` whose bound admits `g`, except that `r = 2` (the
/// Hermitian curve) needs `g = q(q-1)/2` exactly.
pub fn deduce_frobenius_dimension(q: u64, g: u64) -> BTreeSet<u64> {
    let hermitian = 2 * g == q * q.saturating_sub(1);
    (2..=q + 1)
        .filter(|&r| r != 2 || hermitian)
        .filter(|&r| {
            castelnuovo_bound(q as i64, r as i64)
                .map(|b| b.admits(&(g as i64)))
                .unwrap_or(false)
        })
        .collect()
}

/// p-adic criterion: every order `ε < p` must be preceded by all of
/// `0, .., ε - 1`.
pub fn padic_admissible(orders: &[u64], p: u64) -> bool {
    orders
        .iter()
        .filter(|&&e| e < p)
        .all(|&e| (0..e).all(|i| orders.contains(&i)))
}

/// Whether the `j_2` observations cover every class of degree-one places.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    /// Some place attains `j_2 = ε_2`, so `ε_2` is the minimum observed.
    AllPlaceClasses,
    /// Only an upper bound `ε_2 <= min j_2` is available.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonDeduction {
    pub sequence: OrderSequence,
    pub observed_min: u64,
    /// `ε_2` is below the observed minimum because the p-adic criterion
    /// excluded the minimum.
    pub padic_filtered: bool,
}

/// Deduces `(ε_0, ε_1, ε_2, ε_3) = (0, 1, ε_2, q)` for Frobenius dimension 3.
///
/// `ε_2` is 2 or 3, it is 3 only in characteristic 3, `(0, 1, ε_2, q)` must
/// satisfy the p-adic criterion, and `j_2(P) >= ε_2` everywhere. With
/// [`Coverage::AllPlaceClasses`], `ε_2` is the observed minimum; otherwise
/// the constraints must leave a single candidate at or below it.
pub fn deduce_epsilon_sequence(
    j2_values: &[u64],
    q: u64,
    p: u64,
    coverage: Coverage,
) -> Result<EpsilonDeduction, VerifyError> {
    let observed_min = *j2_values.iter().min().ok_or(VerifyError::NoObservations)?;
    if observed_min < 2 {
        return Err(VerifyError::ImpossibleJ2(observed_min));
    }
    let candidates: Vec<u64> = [2u64, 3]
        .into_iter()
        .filter(|&e| e <= observed_min && (e != 3 || p == 3))
        .filter(|&e| q > e && padic_admissible(&[0, 1, e, q], p))
        .collect();
    let epsilon = match coverage {
        Coverage::AllPlaceClasses => {
            if !candidates.contains(&observed_min) {
                return Err(VerifyError::InadmissibleEpsilon { observed: observed_min, p });
            }
            observed_min
        }
        Coverage::Partial => match candidates.as_slice() {
            [e] => *e,
            _ => return Err(VerifyError::Inconclusive(candidates)),
        },
    };
    if q <= epsilon {
        return Err(VerifyError::DegenerateSequence { q, epsilon });
    }
    let sequence = OrderSequence::new(vec![0, 1, epsilon, q], OrderRole::Generic)
        .expect("0 < 1 < ε_2 < q");
    Ok(EpsilonDeduction { sequence, observed_min, padic_filtered: epsilon != observed_min })
}

/// `{2, 3, q+1-⌊(q+1)/2⌋, q+1-⌊2(q+1)/3⌋}`: the possible `j_2(P)` at a
/// rational place when `ε_2 = 2`.
pub fn allowed_j2_values(q: u64) -> BTreeSet<u64> {
    let n = q + 1;
    [2, 3, n - n / 2, n - 2 * n / 3].into_iter().collect()
}

pub fn validate_j2(j: u64, q: u64) -> bool {
    allowed_j2_values(q).contains(&j)
}
