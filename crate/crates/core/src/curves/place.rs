use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Stable textual name of a place.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaceId(pub String);

impl PlaceId {
    pub fn named(name: &str) -> Self {
        PlaceId(name.to_string())
    }

    /// `P(c1,c2,..)` from element codes.
    pub fn point(codes: &[u32]) -> Self {
        let inner: Vec<String> = codes.iter().map(|c| c.to_string()).collect();
        PlaceId(format!("P({})", inner.join(",")))
    }

    /// A place at infinity of a plane model, keyed by the code of its slope.
    pub fn at_infinity(slope: u32) -> Self {
        PlaceId(format!("Pinf({slope})"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PlaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlaceClass {
    /// Unramified over the base and of degree one.
    AffineSplit,
    /// Affine and ramified over the base, not a zero of the Kummer generator.
    AffineRamified,
    /// Affine zero of the Kummer generator; totally ramified.
    ZeroOfCoverFunction,
    Infinite,
}

impl PlaceClass {
    pub const ALL: [PlaceClass; 4] = [
        PlaceClass::AffineSplit,
        PlaceClass::AffineRamified,
        PlaceClass::ZeroOfCoverFunction,
        PlaceClass::Infinite,
    ];

    pub fn is_ramified(self) -> bool {
        self != PlaceClass::AffineSplit
    }
}

impl fmt::Display for PlaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PlaceClass::AffineSplit => "affine-split",
            PlaceClass::AffineRamified => "affine-ramified",
            PlaceClass::ZeroOfCoverFunction => "zero-of-cover-function",
            PlaceClass::Infinite => "infinite",
        };
        f.write_str(s)
    }
}

/// A place of degree one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Place {
    pub id: PlaceId,
    pub class: PlaceClass,
    /// Element codes of the affine coordinates, when the place has them.
    pub coords: Option<Vec<u32>>,
    /// Ramification index over the base curve.
    pub ramification: u64,
    pub degree: u32,
}

/// How many split places the census keeps as samples.
pub const SPLIT_SAMPLE_LIMIT: usize = 8;

/// Degree-one places counted by class.
///
/// `places` holds every place that is not affine-split, plus the first
/// [`SPLIT_SAMPLE_LIMIT`] split ones.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceCensus {
    pub counts: BTreeMap<PlaceClass, u64>,
    pub places: Vec<Place>,
    /// Unramified affine base points whose fiber splits completely.
    pub split_fibers: u64,
    /// Unramified affine base points with no degree-one place above them.
    pub inert_fibers: u64,
    /// Fibers that broke an expected splitting law (must be zero).
    pub condition_violations: u64,
    /// Degree-one places of the base curve, when the census walked one.
    pub base_total: Option<u64>,
}

impl PlaceCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, class: PlaceClass) -> u64 {
        self.counts.get(&class).copied().unwrap_or(0)
    }

    pub fn ramified_total(&self) -> u64 {
        self.counts
            .iter()
            .filter(|(c, _)| c.is_ramified())
            .map(|(_, n)| n)
            .sum()
    }

    pub(crate) fn record(&mut self, place: Place) {
        let class = place.class;
        let n = self.counts.entry(class).or_insert(0);
        *n += 1;
        if class != PlaceClass::AffineSplit || (*n as usize) <= SPLIT_SAMPLE_LIMIT {
            self.places.push(place);
        }
    }

    pub(crate) fn record_split_bulk(&mut self, n: u64) {
        *self.counts.entry(PlaceClass::AffineSplit).or_insert(0) += n;
    }

    /// Shifts one class count by `delta`, saturating at zero.
    pub fn perturb(&mut self, class: PlaceClass, delta: i64) {
        let n = self.counts.entry(class).or_insert(0);
        *n = n.saturating_add_signed(delta);
    }

    pub fn places_in(&self, class: PlaceClass) -> impl Iterator<Item = &Place> {
        self.places.iter().filter(move |p| p.class == class)
    }
}
