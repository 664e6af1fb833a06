//! Divisors on curves whose places are all of degree one, and principal
//! divisors of monomials in tabulated functions.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, RangeInclusive, Sub};

use serde::{Deserialize, Serialize};

use super::{CurveError, PlaceId};

/// A finite formal sum of places. Zero multiplicities are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor(BTreeMap<PlaceId, i64>);

impl Divisor {
    pub fn new() -> Self {
        Divisor::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (PlaceId, i64)>>(terms: I) -> Self {
        let mut d = Divisor::new();
        for (id, m) in terms {
            d.add_term(id, m);
        }
        d
    }

    pub fn add_term(&mut self, id: PlaceId, m: i64) {
        let entry = self.0.entry(id).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub fn valuation(&self, id: &PlaceId) -> i64 {
        self.0.get(id).copied().unwrap_or(0)
    }

    /// Sum of multiplicities; the degree when every place has degree one.
    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&m| m >= 0)
    }

    pub fn is_effective_away_from(&self, id: &PlaceId) -> bool {
        self.0.iter().all(|(p, &m)| p == id || m >= 0)
    }

    /// The pole divisor, with positive multiplicities.
    pub fn pole_part(&self) -> Divisor {
        Divisor(self.0.iter().filter(|(_, &m)| m < 0).map(|(p, &m)| (p.clone(), -m)).collect())
    }

    pub fn zero_part(&self) -> Divisor {
        Divisor(self.0.iter().filter(|(_, &m)| m > 0).map(|(p, &m)| (p.clone(), m)).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = &PlaceId> {
        self.0.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlaceId, i64)> {
        self.0.iter().map(|(p, &m)| (p, m))
    }

    pub fn scale(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::new();
        }
        Divisor(self.0.iter().map(|(p, &m)| (p.clone(), m * k)).collect())
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, &m) in &rhs.0 {
            out.add_term(p.clone(), m);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}

impl Mul<i64> for &Divisor {
    type Output = Divisor;
    fn mul(self, k: i64) -> Divisor {
        self.scale(k)
    }
}

/// Exponents of a monomial, keyed by function symbol.
pub type Monomial = BTreeMap<String, i64>;

/// Principal divisors of named functions on one curve.
///
/// `ramification` records, for places that are totally ramified in a cover
/// of the tabulated curve, the index `e`; pole orders at such a place are
/// reported upstairs, multiplied by `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalDivisorTable {
    pub entries: BTreeMap<String, Divisor>,
    pub ramification: BTreeMap<PlaceId, u64>,
}

impl PrincipalDivisorTable {
    pub fn new(entries: BTreeMap<String, Divisor>) -> Result<Self, CurveError> {
        for (name, d) in &entries {
            if d.degree() != 0 {
                return Err(CurveError::NotPrincipal { symbol: name.clone(), degree: d.degree() });
            }
        }
        Ok(PrincipalDivisorTable { entries, ramification: BTreeMap::new() })
    }

    pub fn with_ramification(mut self, ramification: BTreeMap<PlaceId, u64>) -> Self {
        self.ramification = ramification;
        self
    }

    pub fn get(&self, symbol: &str) -> Option<&Divisor> {
        self.entries.get(symbol)
    }

    pub fn ramification_at(&self, id: &PlaceId) -> u64 {
        self.ramification.get(id).copied().unwrap_or(1)
    }

    fn mentions(&self, id: &PlaceId) -> bool {
        self.entries.values().any(|d| d.valuation(id) != 0)
    }
}

/// `Σ exponents[s] · table[s]`.
pub fn divisor_of_monomial(
    table: &PrincipalDivisorTable,
    exponents: &Monomial,
) -> Result<Divisor, CurveError> {
    let mut out = Divisor::new();
    for (sym, &e) in exponents {
        let d = table.get(sym).ok_or_else(|| CurveError::UnknownSymbol(sym.clone()))?;
        out = &out + &d.scale(e);
    }
    Ok(out)
}

/// Why a value is a non-gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NongapWitness {
    /// The constant function.
    Constant,
    /// A monomial whose only pole is the target place.
    Monomial { exponents: Monomial },
    /// `q` and `q+1` are non-gaps at every rational place of an
    /// `F_{q^2}`-maximal curve.
    MaximalCurve,
}

/// Scans monomials within `ranges` for functions whose only pole is at
/// `target`, returning each realized pole order (upstairs, if the target is
/// ramified in a cover) with the first witness found. `0`, `q` and `q+1`
/// are always included.
///
/// Symbols missing from `ranges` are held at exponent zero.
pub fn weierstrass_nongaps_from_monomials(
    table: &PrincipalDivisorTable,
    target: &PlaceId,
    ranges: &BTreeMap<String, RangeInclusive<i64>>,
    q: u64,
) -> Result<BTreeMap<u64, NongapWitness>, CurveError> {
    if !table.mentions(target) {
        return Err(CurveError::UnknownPlace(target.clone()));
    }
    if let Some(sym) = ranges.keys().find(|s| table.get(s).is_none()) {
        return Err(CurveError::UnknownSymbol(sym.clone()));
    }
    let e = table.ramification_at(target) as i64;
    let symbols: Vec<(&String, &RangeInclusive<i64>)> = ranges.iter().collect();

    let mut found: BTreeMap<u64, NongapWitness> = BTreeMap::new();
    let mut current: Vec<i64> = symbols.iter().map(|(_, r)| *r.start()).collect();
    if symbols.iter().any(|(_, r)| r.is_empty()) {
        current.clear();
    }
    while !current.is_empty() || symbols.is_empty() {
        let mono: Monomial = symbols
            .iter()
            .zip(&current)
            .filter(|(_, &x)| x != 0)
            .map(|((s, _), &x)| ((*s).clone(), x))
            .collect();
        let d = divisor_of_monomial(table, &mono)?;
        let v = d.valuation(target);
        if v <= 0 && d.is_effective_away_from(target) {
            let pole = (-v * e) as u64;
            found.entry(pole).or_insert_with(|| {
                if mono.is_empty() {
                    NongapWitness::Constant
                } else {
                    NongapWitness::Monomial { exponents: mono }
                }
            });
        }
        if symbols.is_empty() || !advance(&mut current, &symbols) {
            break;
        }
    }

    found.entry(0).or_insert(NongapWitness::Constant);
    found.entry(q).or_insert(NongapWitness::MaximalCurve);
    found.entry(q + 1).or_insert(NongapWitness::MaximalCurve);
    Ok(found)
}

// Odometer step over the cartesian product; false when exhausted.
fn advance(current: &mut [i64], symbols: &[(&String, &RangeInclusive<i64>)]) -> bool {
    for i in (0..current.len()).rev() {
        if current[i] < *symbols[i].1.end() {
            current[i] += 1;
            return true;
        }
        current[i] = *symbols[i].1.start();
    }
    false
}
