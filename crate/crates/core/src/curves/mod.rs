//! The curve catalog: the GK curve, the curve `z^16 = t(t+1)^6` over
//! `F_49`, and the Kummer cover of the Fermat curve of degree `(q+1)/3`.
//!
//! Each model carries its base field and knows how to enumerate its places
//! of degree one, its genus, and (for the last two) a table of principal
//! divisors used to certify Weierstrass non-gaps.

mod census;
mod divisor;
mod place;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{prime_power, FieldElement, FieldSpec, FieldSummary, GfError};

pub use census::{
    count_fk_places, count_gk_places, count_gsx49_places, gk_unramified_contact_orders,
    hermitian_affine_points, hermitian_tangent_contact,
};
pub use divisor::{
    divisor_of_monomial, weierstrass_nongaps_from_monomials, Divisor, Monomial, NongapWitness,
    PrincipalDivisorTable,
};
pub use place::{Place, PlaceCensus, PlaceClass, PlaceId, SPLIT_SAMPLE_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("invalid curve parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("genus formula gives the non-integer {numerator}/{denominator}")]
    NonIntegralGenus { numerator: i64, denominator: i64 },
    #[error("Riemann-Hurwitz genus {hurwitz} disagrees with closed form {closed}")]
    GenusMismatch { hurwitz: i64, closed: i64 },
    #[error("principal divisor of {symbol} has degree {degree}, not 0")]
    NotPrincipal { symbol: String, degree: i64 },
    #[error("unknown function symbol {0}")]
    UnknownSymbol(String),
    #[error("place {0} does not occur in the divisor table")]
    UnknownPlace(PlaceId),
    #[error("inconsistent fiber at {0}: {1}")]
    InconsistentFiber(PlaceId, String),
}

/// `q^2 + 1 + 2gq`, the number of rational places of an `F_{q^2}`-maximal
/// curve of genus `g`.
pub fn maximal_n(q: u64, g: u64) -> u64 {
    q * q + 1 + 2 * g * q
}

/// `(q̄^3 + 1)(q̄^2 - 2)/2 + 1`.
pub fn genus_gk(qbar: u64) -> Result<u64, CurveError> {
    if qbar < 2 {
        return Err(CurveError::InvalidParameter(format!("q̄ = {qbar} must be at least 2")));
    }
    let num = (qbar.pow(3) + 1) * (qbar * qbar - 2);
    if !num.is_multiple_of(2) {
        return Err(CurveError::NonIntegralGenus { numerator: num as i64, denominator: 2 });
    }
    Ok(num / 2 + 1)
}

/// Genus of `y^{(q^2-1)/m} = x(x+1)^{q-1}`: `(q+1-d)(q-1)/(2m)` with
/// `d = gcd(m, q+1)`.
pub fn genus_gsx(q: u64, m: u64) -> Result<u64, CurveError> {
    if q < 2 || m == 0 || !(q * q - 1).is_multiple_of(m) {
        return Err(CurveError::InvalidParameter(format!("m = {m} must divide q^2 - 1 = {}", q * q - 1)));
    }
    let d = m.gcd(&(q + 1));
    let num = (q + 1 - d) * (q - 1);
    let den = 2 * m;
    if !num.is_multiple_of(den) {
        return Err(CurveError::NonIntegralGenus { numerator: num as i64, denominator: den as i64 });
    }
    Ok(num / den)
}

/// Genus of a smooth plane curve of degree `deg`.
pub fn genus_plane_smooth(deg: u64) -> Result<u64, CurveError> {
    if deg == 0 {
        return Err(CurveError::InvalidParameter("degree must be positive".into()));
    }
    Ok((deg - 1) * deg.saturating_sub(2) / 2)
}

fn check_fk_q(q: u64) -> Result<(), CurveError> {
    if q.is_multiple_of(2) || q % 3 != 2 {
        return Err(CurveError::InvalidParameter(format!("q = {q} must be odd with q ≡ 2 (mod 3)")));
    }
    Ok(())
}

/// `(q^2 - q + 4)/6`, cross-checked against the Riemann-Hurwitz count
/// `1 + 3(g(F) - 1) + (q + 1)` for the degree-3 cover of the Fermat curve
/// of degree `(q+1)/3`.
pub fn genus_fk(q: u64) -> Result<u64, CurveError> {
    check_fk_q(q)?;
    let base = genus_plane_smooth((q + 1) / 3)? as i64;
    let hurwitz = 1 + 3 * (base - 1) + (q as i64 + 1);
    let num = (q * q - q + 4) as i64;
    if num % 6 != 0 {
        return Err(CurveError::NonIntegralGenus { numerator: num, denominator: 6 });
    }
    let closed = num / 6;
    if hurwitz != closed {
        return Err(CurveError::GenusMismatch { hurwitz, closed });
    }
    Ok(closed as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "lowercase")]
pub enum CurveFamily {
    /// `y^{q̄+1} = x^{q̄} + x`, `z^{q̄^2-q̄+1} = y (x^{q̄^2-1} - 1)/(x^{q̄-1} + 1)`
    /// over `F_{q̄^6}`.
    Gk { qbar: u64 },
    /// `z^16 = t(t+1)^6` over `F_49`.
    Gsx49,
    /// `y^n + x^n + 1 = 0`, `z^3 = wxy` over `F_{q^2}`, `n = (q+1)/3`.
    Fk { q: u64 },
}

/// Serializable identity of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDescriptor {
    pub name: String,
    #[serde(flatten)]
    pub family: CurveFamily,
    pub equations: Vec<String>,
    pub q: u64,
    pub p: u64,
    pub field: FieldSummary,
    /// Coefficients of the constant `w` with `w^{(q+1)/3} = 3` (FK only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub w: Option<Vec<u32>>,
}

/// A curve from the catalog together with its field of definition.
#[derive(Debug, Clone)]
pub struct CurveModel {
    family: CurveFamily,
    field: FieldSpec,
    q: u64,
    p: u64,
    w: Option<u32>,
}

impl CurveModel {
    /// GK curve with parameter `q̄`, over `F_{q̄^6}` (so `q = q̄^3`).
    pub fn gk(qbar: u64) -> Result<Self, CurveError> {
        let (p, e) = prime_power(qbar)
            .ok_or_else(|| CurveError::InvalidParameter(format!("q̄ = {qbar} is not a prime power")))?;
        let d = qbar * qbar - qbar + 1;
        debug_assert_eq!((qbar.pow(3) + 1) % d, 0);
        let field = FieldSpec::new(p as u32, 6 * e)?;
        Ok(CurveModel { family: CurveFamily::Gk { qbar }, field, q: qbar.pow(3), p, w: None })
    }

    pub fn gsx49() -> Result<Self, CurveError> {
        let field = FieldSpec::new(7, 2)?;
        Ok(CurveModel { family: CurveFamily::Gsx49, field, q: 7, p: 7, w: None })
    }

    /// Kummer cover of the Fermat curve, for odd `q ≡ 2 (mod 3)`.
    pub fn fk(q: u64) -> Result<Self, CurveError> {
        check_fk_q(q)?;
        let (p, e) = prime_power(q)
            .ok_or_else(|| CurveError::InvalidParameter(format!("q = {q} is not a prime power")))?;
        let field = FieldSpec::new(p as u32, 2 * e)?;
        let n = (q + 1) / 3;
        let three = field.from_int(3);
        let w = field
            .elements()
            .find(|x| x.pow(n) == three)
            .ok_or_else(|| CurveError::InvalidParameter("no w with w^((q+1)/3) = 3".into()))?
            .code();
        Ok(CurveModel { family: CurveFamily::Fk { q }, field, q, p, w: Some(w) })
    }

    pub fn family(&self) -> CurveFamily {
        self.family
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The curve is studied over `F_{q^2}`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn w(&self) -> Option<FieldElement<'_>> {
        self.w.map(|c| self.field.element(c).expect("w lies in the field"))
    }

    pub fn name(&self) -> String {
        match self.family {
            CurveFamily::Gk { qbar } => format!("GK(q̄={qbar})"),
            CurveFamily::Gsx49 => "GSX49".to_string(),
            CurveFamily::Fk { q } => format!("FK(q={q})"),
        }
    }

    pub fn equations(&self) -> Vec<String> {
        match self.family {
            CurveFamily::Gk { qbar } => vec![
                format!("y^{} = x^{} + x", qbar + 1, qbar),
                format!(
                    "z^{} = y (x^{} - 1)/(x^{} + 1)",
                    qbar * qbar - qbar + 1,
                    qbar * qbar - 1,
                    qbar - 1
                ),
            ],
            CurveFamily::Gsx49 => vec!["z^16 = t (t+1)^6".to_string()],
            CurveFamily::Fk { q } => {
                let n = (q + 1) / 3;
                vec![format!("y^{n} + x^{n} + 1 = 0"), "z^3 = w x y".to_string()]
            }
        }
    }

    pub fn descriptor(&self) -> CurveDescriptor {
        CurveDescriptor {
            name: self.name(),
            family: self.family,
            equations: self.equations(),
            q: self.q,
            p: self.p,
            field: self.field.summary(),
            w: self.w().map(|w| w.coeffs()),
        }
    }

    pub fn genus(&self) -> Result<u64, CurveError> {
        match self.family {
            CurveFamily::Gk { qbar } => genus_gk(qbar),
            CurveFamily::Gsx49 => genus_gsx(7, 3),
            CurveFamily::Fk { q } => genus_fk(q),
        }
    }

    pub fn census(&self) -> Result<PlaceCensus, CurveError> {
        match self.family {
            CurveFamily::Gk { .. } => census::gk_census(self),
            CurveFamily::Gsx49 => census::gsx49_census(self),
            CurveFamily::Fk { .. } => census::fk_census(self),
        }
    }

    /// The place whose Weierstrass semigroup the catalog certifies through
    /// monomials, if any.
    pub fn distinguished_place(&self) -> Option<PlaceId> {
        match self.family {
            CurveFamily::Gk { .. } => None,
            CurveFamily::Gsx49 => Some(PlaceId::named("Pbar_inf")),
            CurveFamily::Fk { .. } => {
                let beta = self.fk_distinguished_beta()?;
                Some(PlaceId::point(&[0, beta.code()]))
            }
        }
    }

    fn fk_distinguished_beta(&self) -> Option<FieldElement<'_>> {
        let n = (self.q + 1) / 3;
        let minus_one = -self.field.one();
        self.field.elements().find(|b| b.pow(n) == minus_one)
    }

    /// Principal divisors used by the monomial scan.
    ///
    /// GSX49: `(z)` and `(t+1)` on the curve itself. FK: `(x)` and
    /// `(y - β)` for every `β` with `β^n = -1`, on the Fermat base curve; the
    /// table records `e = 3` at the places that ramify in the cover.
    pub fn divisor_table(&self) -> Option<PrincipalDivisorTable> {
        match self.family {
            CurveFamily::Gk { .. } => None,
            CurveFamily::Gsx49 => {
                let p0 = PlaceId::named("Pbar_0");
                let p1 = PlaceId::named("Pbar_1");
                let p2 = PlaceId::named("Pbar_2");
                let pinf = PlaceId::named("Pbar_inf");
                let z = Divisor::from_terms([
                    (p1.clone(), 3),
                    (p2.clone(), 3),
                    (p0, 1),
                    (pinf.clone(), -7),
                ]);
                let t1 = Divisor::from_terms([(p1, 8), (p2, 8), (pinf, -16)]);
                let entries = [("z".to_string(), z), ("t+1".to_string(), t1)].into();
                Some(PrincipalDivisorTable::new(entries).expect("displayed divisors have degree 0"))
            }
            CurveFamily::Fk { q } => {
                let n = (q + 1) / 3;
                let f = &self.field;
                let minus_one = -f.one();
                let betas = f.nth_roots(minus_one, n);
                let infinities: Vec<PlaceId> =
                    f.nth_roots(minus_one, n).iter().map(|r| PlaceId::at_infinity(r.code())).collect();
                let alphas = betas.clone();

                let poles = Divisor::from_terms(infinities.iter().map(|p| (p.clone(), -1)));
                let x_zeros = Divisor::from_terms(betas.iter().map(|b| (PlaceId::point(&[0, b.code()]), 1)));
                let mut entries = BTreeMap::new();
                entries.insert("x".to_string(), &x_zeros + &poles);
                for b in &betas {
                    let zero = Divisor::from_terms([(PlaceId::point(&[0, b.code()]), n as i64)]);
                    entries.insert(Self::fk_line_symbol(b.code()), &zero + &poles);
                }
                let table = PrincipalDivisorTable::new(entries).expect("degree-0 by construction");

                let ramified = betas
                    .iter()
                    .map(|b| PlaceId::point(&[0, b.code()]))
                    .chain(alphas.iter().map(|a| PlaceId::point(&[a.code(), 0])))
                    .chain(infinities)
                    .map(|id| (id, 3))
                    .collect();
                Some(table.with_ramification(ramified))
            }
        }
    }

    fn fk_line_symbol(beta_code: u32) -> String {
        format!("y-b{beta_code}")
    }

    /// Symbol of the function whose zero is the distinguished place
    /// (`y - β` for FK).
    pub fn distinguished_symbol(&self) -> Option<String> {
        match self.family {
            CurveFamily::Fk { .. } => self.fk_distinguished_beta().map(|b| Self::fk_line_symbol(b.code())),
            CurveFamily::Gsx49 => Some("t+1".to_string()),
            CurveFamily::Gk { .. } => None,
        }
    }

    /// Default exponent ranges for the monomial scan at genus `g`:
    /// numerator function in `[0, 2g]`, denominator function in `[-g, 0]`.
    pub fn monomial_ranges(&self, g: u64) -> BTreeMap<String, RangeInclusive<i64>> {
        let g = g as i64;
        let numerator = match self.family {
            CurveFamily::Gsx49 => "z",
            _ => "x",
        };
        let mut ranges = BTreeMap::new();
        ranges.insert(numerator.to_string(), 0..=2 * g);
        if let Some(den) = self.distinguished_symbol() {
            ranges.insert(den, -g..=0);
        }
        ranges
    }
}
