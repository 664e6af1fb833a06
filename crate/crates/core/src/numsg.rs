//! Numerical semigroups and the passage from a Weierstrass semigroup at a
//! rational place to its order sequence for the Frobenius linear series.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Sieves larger than this are refused.
pub const SIEVE_CAP: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    NoGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {0}; semigroups with infinitely many gaps are unsupported")]
    NotCofinite(u64),
    #[error("sieve bound {0} exceeds the supported cap")]
    TooLarge(u64),
    #[error("{0} is a gap, so the semigroup cannot be a Weierstrass semigroup of a maximal curve over F_{{q^2}} with q = {1}")]
    NotMaximalShape(u64, u64),
    #[error("q must be positive")]
    ZeroQ,
    #[error("order sequence {0:?} is not strictly increasing from 0, 1")]
    MalformedOrders(Vec<u64>),
}

/// A numerical semigroup given by generators, with its gap structure
/// resolved by a membership sieve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    member: Vec<bool>,
    gaps: Vec<u64>,
    conductor: u64,
}

impl NumericalSemigroup {
    /// Builds `<gens>`. Requires `gcd(gens) = 1`.
    ///
    /// The sieve runs up to `2 * max(gens)^2`, which dominates the
    /// Schur bound `(min - 1)(max - 1) - 1` on the Frobenius number.
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(g));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();

        let max = *generators.last().unwrap();
        let bound = 2u64
            .checked_mul(max)
            .and_then(|v| v.checked_mul(max))
            .filter(|&b| b <= SIEVE_CAP)
            .ok_or(SemigroupError::TooLarge(max.saturating_mul(max).saturating_mul(2)))?;

        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for n in 1..=bound as usize {
            member[n] = generators
                .iter()
                .any(|&a| a as usize <= n && member[n - a as usize]);
        }

        // A run of `min` consecutive members means everything later is in.
        let min = generators[0] as usize;
        let tail_ok = member[member.len() - min..].iter().all(|&m| m);
        assert!(tail_ok, "sieve bound does not reach the conductor");

        let gaps: Vec<u64> = (0..=bound).filter(|&n| !member[n as usize]).collect();
        let conductor = gaps.last().map_or(0, |f| f + 1);
        member.truncate(conductor as usize + 1);

        Ok(NumericalSemigroup { generators, member, gaps, conductor })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or `None` for the full semigroup `N`.
    pub fn frobenius_number(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.conductor || self.member[n as usize]
    }

    /// Non-gaps in `[0, bound]`, increasing.
    pub fn nongaps_upto(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n as i64)).collect()
    }

    /// Enumerates `0 = m_0 < m_1 < ..`, the first `count` non-gaps.
    pub fn first_nongaps(&self, count: usize) -> Vec<u64> {
        (0u64..).filter(|&n| self.contains(n as i64)).take(count).collect()
    }

    /// Projective dimension `r` of `|(q+1)P|` for a semigroup that is the
    /// Weierstrass semigroup at a rational place of an `F_{q^2}`-maximal
    /// curve: `q` and `q+1` must be non-gaps and `r + 1` is the number of
    /// non-gaps up to `q + 1`.
    pub fn frobenius_dimension(&self, q: u64) -> Result<usize, SemigroupError> {
        if q == 0 {
            return Err(SemigroupError::ZeroQ);
        }
        for v in [q, q + 1] {
            if !self.contains(v as i64) {
                return Err(SemigroupError::NotMaximalShape(v, q));
            }
        }
        Ok(self.nongaps_upto(q + 1).len() - 1)
    }

    /// `(D,P)`-orders at a rational place: `q + 1 - m_i` for the non-gaps
    /// `m_i <= q + 1`, sorted. Always starts `0, 1` and ends with `q + 1`.
    pub fn rational_point_orders(&self, q: u64) -> Result<OrderSequence, SemigroupError> {
        self.frobenius_dimension(q)?;
        let mut orders: Vec<u64> = self.nongaps_upto(q + 1).iter().map(|m| q + 1 - m).collect();
        orders.reverse();
        OrderSequence::new(orders, OrderRole::RationalPlace)
    }
}

/// Smallest element of `<gens>` in every residue class modulo the least
/// generator, by Dijkstra over residues.
pub fn apery_set(gens: &[u64]) -> Result<Vec<u64>, SemigroupError> {
    if gens.is_empty() {
        return Err(SemigroupError::NoGenerators);
    }
    if gens.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(SemigroupError::NotCofinite(g));
    }
    let m = *gens.iter().min().unwrap();
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0u64))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r as usize] {
            continue;
        }
        for &a in gens {
            let nd = d + a;
            let nr = (r + a) % m;
            if nd < dist[nr as usize] {
                dist[nr as usize] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

/// Gap count via Selmer's formula `sum floor(w / m)` over the Apéry set.
pub fn genus_via_apery(gens: &[u64]) -> Result<u64, SemigroupError> {
    let ap = apery_set(gens)?;
    let m = ap.len() as u64;
    Ok(ap.iter().map(|w| w / m).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderRole {
    /// The `D`-order sequence `(ε_0, .., ε_r)`.
    Generic,
    /// `(j_0(P), .., j_r(P))` at a place of degree one.
    RationalPlace,
    /// `(j_0(P), .., j_r(P))` at a place of higher degree.
    NonrationalPlace,
}

/// A strictly increasing order sequence starting `0, 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSequence {
    orders: Vec<u64>,
    role: OrderRole,
}

impl OrderSequence {
    pub fn new(orders: Vec<u64>, role: OrderRole) -> Result<Self, SemigroupError> {
        let increasing = orders.windows(2).all(|w| w[0] < w[1]);
        let starts_ok = orders.first() == Some(&0) && (orders.len() < 2 || orders[1] == 1);
        if !increasing || !starts_ok {
            return Err(SemigroupError::MalformedOrders(orders));
        }
        Ok(OrderSequence { orders, role })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn role(&self) -> OrderRole {
        self.role
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.orders.get(i).copied()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.orders.binary_search(&v).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn small_cases() {
        let s = sg(&[2, 3]);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.nongaps_upto(1), vec![0]);

        let full = sg(&[1]);
        assert_eq!(full.genus(), 0);
        assert_eq!(full.conductor(), 0);
        assert!(full.contains(0) && full.contains(7));
    }

    #[test]
    fn gk_semigroup_at_qbar_two() {
        let s = sg(&[6, 8, 9]);
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 5, 7, 10, 11, 13, 19]);
        assert_eq!(s.genus(), 10);
        assert_eq!(s.frobenius_number(), Some(19));
    }

    #[test]
    fn gk_semigroup_at_qbar_three() {
        let s = sg(&[21, 27, 28]);
        assert_eq!(s.genus(), 99);
        assert_eq!(s.nongaps_upto(28), vec![0, 21, 27, 28]);
        assert_eq!(s.frobenius_dimension(27).unwrap(), 3);
        assert_eq!(s.rational_point_orders(27).unwrap().orders(), &[0, 1, 7, 28]);
    }

    #[test]
    fn gsx49_semigroup() {
        let s = sg(&[5, 7, 8]);
        assert!(s.contains(5));
        assert!(!s.contains(6));
        assert!(s.contains(0));
        assert!(!s.contains(-5));
        assert_eq!(s.nongaps_upto(8), vec![0, 5, 7, 8]);
        assert_eq!(s.genus(), 7);
        assert_eq!(s.frobenius_dimension(7).unwrap(), 3);
        assert_eq!(s.rational_point_orders(7).unwrap().orders(), &[0, 1, 3, 8]);
    }

    #[test]
    fn fk_semigroup_at_q_five() {
        let s = sg(&[3, 5]);
        assert_eq!(s.nongaps_upto(6), vec![0, 3, 5, 6]);
        assert_eq!(s.rational_point_orders(5).unwrap().orders(), &[0, 1, 3, 6]);
    }

    #[test]
    fn hermitian_dimension_two() {
        assert_eq!(sg(&[4, 5]).frobenius_dimension(4).unwrap(), 2);
        assert_eq!(sg(&[4, 5]).rational_point_orders(4).unwrap().orders(), &[0, 1, 5]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::NotCofinite(2))
        );
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(SemigroupError::NoGenerators));
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(SemigroupError::ZeroGenerator)
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, 100_001]),
            Err(SemigroupError::TooLarge(_))
        ));
        assert_eq!(
            sg(&[5, 7, 8]).frobenius_dimension(6),
            Err(SemigroupError::NotMaximalShape(6, 6))
        );
        assert_eq!(sg(&[2, 3]).frobenius_dimension(0), Err(SemigroupError::ZeroQ));
    }

    #[test]
    fn apery_agrees_on_known_cases() {
        assert_eq!(apery_set(&[5, 7, 8]).unwrap(), vec![0, 16, 7, 8, 14]);
        assert_eq!(genus_via_apery(&[21, 27, 28]).unwrap(), 99);
        assert_eq!(genus_via_apery(&[6, 8, 9]).unwrap(), 10);
        assert_eq!(genus_via_apery(&[1]).unwrap(), 0);
    }

    #[test]
    fn order_sequence_validation() {
        assert!(OrderSequence::new(vec![0, 1, 3, 8], OrderRole::RationalPlace).is_ok());
        assert!(OrderSequence::new(vec![0, 2, 3], OrderRole::Generic).is_err());
        assert!(OrderSequence::new(vec![0, 1, 1], OrderRole::Generic).is_err());
        assert!(OrderSequence::new(vec![1, 2], OrderRole::Generic).is_err());
        assert!(OrderSequence::new(vec![0], OrderRole::Generic).is_ok());
    }
}
