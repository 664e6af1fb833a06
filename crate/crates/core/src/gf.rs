//! Exact arithmetic in small prime-power fields `F_{p^k}`.
//!
//! Elements are stored by their *code*: the coefficient vector
//! `(c_0, .., c_{k-1})` of the polynomial representative, packed as
//! `c_0 + c_1 p + .. + c_{k-1} p^{k-1}`. Multiplication goes through
//! discrete-log tables that are built eagerly when the field is created.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const FIELD_ORDER_CAP: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the supported cap {cap}")]
    TooLarge { p: u32, k: u32, cap: u32 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different fields (order {0} and order {1})")]
    MixedFields(u32, u32),
    #[error("subfield degree {m} does not divide extension degree {k}")]
    NotASubfield { m: u32, k: u32 },
    #[error("element code {code} out of range for a field of order {order}")]
    BadCode { code: u32, order: u32 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, e)` with `n = p^e`, or `None` if `n` is not a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p, coefficients low-to-high, no trailing zeros.
mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime and small; Fermat.
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = r[r.len() - 1] as u64 * lead_inv % p as u64;
            for (i, &mi) in m.iter().enumerate() {
                let sub = c * mi as u64 % p as u64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        rem(&prod, m, p)
    }

    pub fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut result = vec![1];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
            e >>= 1;
        }
        result
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0);
                let y = *b.get(i).unwrap_or(&0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or style test: `f` of degree k is irreducible iff
    /// `gcd(x^{p^i} - x, f) = 1` for every `1 <= i <= k/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let k = f.len() - 1;
        if k <= 1 {
            return k == 1;
        }
        let x = vec![0, 1];
        let mut h = rem(&x, f, p);
        for _ in 1..=k / 2 {
            h = pow_mod(&h, p as u64, f, p);
            let g = gcd(&sub(&h, &x, p), f, p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

/// An explicit model of `F_{p^k}` with eager log/exp tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: u32,
    radix: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

/// Serializable description of a field: `{p, k, modulus, generator}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSummary {
    pub p: u32,
    pub k: u32,
    /// Monic modulus, coefficients low-to-high.
    pub modulus: Vec<u32>,
    /// Coefficients of the primitive element, low-to-high.
    pub generator: Vec<u32>,
}

impl FieldSpec {
    /// Builds `F_{p^k}`.
    ///
    /// The modulus is the lexicographically smallest monic irreducible of
    /// degree `k` (coefficients compared from the constant term upwards), and
    /// the generator is the primitive element with the smallest code.
    pub fn new(p: u32, k: u32) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&o| o <= FIELD_ORDER_CAP as u64)
            .ok_or(GfError::TooLarge { p, k, cap: FIELD_ORDER_CAP })? as u32;
        let radix: Vec<u32> = (0..k).map(|i| p.pow(i)).collect();

        let modulus = Self::smallest_irreducible(p, k, order);

        let decode = |code: u32| -> Vec<u32> {
            fp_poly::trim(radix.iter().map(|&r| code / r % p).collect())
        };
        let encode = |poly: &[u32]| -> u32 { poly.iter().zip(&radix).map(|(c, r)| c * r).sum() };

        let group = (order - 1) as u64;
        let factors = prime_factors(group);
        let generator = (1..order)
            .find(|&code| {
                let g = decode(code);
                factors
                    .iter()
                    .all(|&l| fp_poly::pow_mod(&g, group / l, &modulus, p) != [1])
            })
            .expect("multiplicative group of a finite field is cyclic");

        let gen_poly = decode(generator);
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = vec![1u32];
        for i in 0..group as u32 {
            let code = encode(&cur);
            exp.push(code);
            log[code as usize] = i;
            cur = fp_poly::mul_mod(&cur, &gen_poly, &modulus, p);
        }
        debug_assert_eq!(cur, vec![1]);

        Ok(FieldSpec { p, k, order, modulus, generator, radix, exp, log })
    }

    fn smallest_irreducible(p: u32, k: u32, order: u32) -> Vec<u32> {
        if k == 1 {
            return vec![0, 1];
        }
        // idx enumerates (c_0, .., c_{k-1}) with c_0 most significant.
        for idx in 0..order {
            let mut f = vec![0u32; k as usize + 1];
            let mut rest = idx;
            for i in (0..k as usize).rev() {
                f[i] = rest % p;
                rest /= p;
            }
            f[k as usize] = 1;
            if fp_poly::is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, coefficients low-to-high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn summary(&self) -> FieldSummary {
        FieldSummary {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
            generator: self.generator().coeffs(),
        }
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement { field: self, code: 0 }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement { field: self, code: 1 }
    }

    pub fn generator(&self) -> FieldElement<'_> {
        FieldElement { field: self, code: self.generator }
    }

    pub fn element(&self, code: u32) -> Result<FieldElement<'_>, GfError> {
        if code >= self.order {
            return Err(GfError::BadCode { code, order: self.order });
        }
        Ok(FieldElement { field: self, code })
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement<'_> {
        let code = n.rem_euclid(self.p as i64) as u32;
        FieldElement { field: self, code }
    }

    /// `generator^i`, for any integer `i`.
    pub fn primitive_power(&self, i: i64) -> FieldElement<'_> {
        let idx = i.rem_euclid(self.order as i64 - 1) as usize;
        FieldElement { field: self, code: self.exp[idx] }
    }

    /// All elements: zero first, then `g^0, g^1, ..`.
    pub fn enumerate(&self) -> Vec<FieldElement<'_>> {
        self.elements().collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        std::iter::once(0)
            .chain(self.exp.iter().copied())
            .map(move |code| FieldElement { field: self, code })
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, a: FieldElement<'_>) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.code as usize])
    }

    /// Number of `x` with `x^n = a`.
    pub fn count_nth_roots(&self, a: FieldElement<'_>, n: u64) -> u64 {
        if a.is_zero() {
            return 1;
        }
        let group = (self.order - 1) as u64;
        let g = n.gcd(&group);
        if (self.log[a.code as usize] as u64).is_multiple_of(g) {
            g
        } else {
            0
        }
    }

    /// All `x` with `x^n = a`, sorted by code. Solves `n * log(x) = log(a)`
    /// modulo `p^k - 1`.
    pub fn nth_roots<'f>(&'f self, a: FieldElement<'f>, n: u64) -> Vec<FieldElement<'f>> {
        assert!(n > 0, "root degree must be positive");
        if a.is_zero() {
            return vec![self.zero()];
        }
        let group = (self.order - 1) as u64;
        let target = self.log[a.code as usize] as u64;
        let g = n.gcd(&group);
        if !target.is_multiple_of(g) {
            return Vec::new();
        }
        let modulus = group / g;
        let n_red = (n / g) % modulus;
        let base = if modulus == 1 {
            0
        } else {
            let inv = mod_inverse(n_red, modulus);
            (target / g) % modulus * inv % modulus
        };
        let mut roots: Vec<_> = (0..g)
            .map(|t| FieldElement { field: self, code: self.exp[(base + t * modulus) as usize] })
            .collect();
        roots.sort_by_key(|e| e.code);
        roots
    }

    fn add_codes(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &r in &self.radix {
            out += (a % self.p + b % self.p) % self.p * r;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg_code(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &r in &self.radix {
            out += (self.p - a % self.p) % self.p * r;
            a /= self.p;
        }
        out
    }

    fn mul_codes(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let group = self.order as u64 - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % group;
        self.exp[s as usize]
    }

    fn same_as(&self, other: &FieldSpec) -> bool {
        std::ptr::eq(self, other) || (self.p == other.p && self.k == other.k)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u64
}

/// An element of a [`FieldSpec`].
///
/// Operator impls panic on mixed-field operands and on division by zero;
/// the `checked_*` methods report those as errors instead.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    code: u32,
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field.same_as(other.field)
    }
}

impl Eq for FieldElement<'_> {}

impl Hash for FieldElement<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.field.p, self.field.k, self.code).hash(state);
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.field.order, self.coeffs())
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            return write!(f, "{}", self.code);
        }
        match self.field.log(*self) {
            None => write!(f, "0"),
            Some(i) => write!(f, "g^{i}"),
        }
    }
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    /// Canonical coefficient vector of length `k`, low-to-high.
    pub fn coeffs(&self) -> Vec<u32> {
        let p = self.field.p;
        self.field.radix.iter().map(|&r| self.code / r % p).collect()
    }

    fn check_same(&self, other: &Self) -> Result<(), GfError> {
        if self.field.same_as(other.field) {
            Ok(())
        } else {
            Err(GfError::MixedFields(self.field.order, other.field.order))
        }
    }

    fn with_code(&self, code: u32) -> Self {
        FieldElement { field: self.field, code }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, GfError> {
        self.check_same(&rhs)?;
        Ok(self.with_code(self.field.add_codes(self.code, rhs.code)))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, GfError> {
        self.check_same(&rhs)?;
        let neg = self.field.neg_code(rhs.code);
        Ok(self.with_code(self.field.add_codes(self.code, neg)))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, GfError> {
        self.check_same(&rhs)?;
        Ok(self.with_code(self.field.mul_codes(self.code, rhs.code)))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, GfError> {
        self.check_same(&rhs)?;
        self.checked_mul(rhs.inv()?)
    }

    pub fn inv(self) -> Result<Self, GfError> {
        if self.is_zero() {
            return Err(GfError::ZeroInverse);
        }
        let group = self.field.order - 1;
        let l = self.field.log[self.code as usize];
        Ok(self.with_code(self.field.exp[((group - l) % group) as usize]))
    }

    pub fn pow(self, e: u64) -> Self {
        if e == 0 {
            return self.field.one();
        }
        if self.is_zero() {
            return self;
        }
        let group = self.field.order as u64 - 1;
        let l = self.field.log[self.code as usize] as u64;
        let s = (l as u128 * e as u128 % group as u128) as usize;
        self.with_code(self.field.exp[s])
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(self, e: i64) -> Result<Self, GfError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// `a ↦ a^p`.
    pub fn frobenius(self) -> Self {
        self.pow(self.field.p as u64)
    }

    /// Whether `a` lies in the subfield `F_{p^m}`, i.e. `a^{p^m} = a`.
    pub fn is_in_subfield(self, m: u32) -> Result<bool, GfError> {
        if m == 0 || !self.field.k.is_multiple_of(m) {
            return Err(GfError::NotASubfield { m, k: self.field.k });
        }
        Ok(self.pow((self.field.p as u64).pow(m)) == self)
    }

    pub fn nth_roots(self, n: u64) -> Vec<Self> {
        self.field.nth_roots(self, n)
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("field addition")
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("field subtraction")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("field multiplication")
    }
}

impl<'f> Div for FieldElement<'f> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("field division")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = Self;
    fn neg(self) -> Self {
        self.with_code(self.field.neg_code(self.code))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(6, 1), Err(GfError::NotPrime(6)));
        assert_eq!(FieldSpec::new(5, 0), Err(GfError::ZeroDegree));
        assert!(matches!(FieldSpec::new(2, 17), Err(GfError::TooLarge { .. })));
        assert!(FieldSpec::new(2, 12).is_ok());
        assert!(FieldSpec::new(2, 16).is_ok());
    }

    #[test]
    fn f49_shape() {
        let f = FieldSpec::new(7, 2).unwrap();
        assert_eq!(f.order(), 49);
        // x^2 + 1 is irreducible over F_7 and is the smallest candidate.
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let g = f.generator();
        assert_eq!(g.pow(48), f.one());
        assert!((1..48).all(|i| g.pow(i) != f.one()));
    }

    #[test]
    fn smallest_modulus_is_lexicographic_from_constant_term() {
        // Over F_2, degree 2: only x^2+x+1 is irreducible.
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // Over F_5, x^2+1 splits and x^2+x+1 has non-square discriminant -3.
        assert_eq!(FieldSpec::new(5, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn sqrt_of_three_in_f25() {
        let f = FieldSpec::new(5, 2).unwrap();
        let three = f.from_int(3);
        let brute: Vec<_> = f.elements().filter(|&w| w * w == three).collect();
        assert_eq!(brute.len(), 2);
        let mut fast = three.nth_roots(2);
        fast.sort_by_key(|e| e.code());
        let mut brute = brute;
        brute.sort_by_key(|e| e.code());
        assert_eq!(fast, brute);
    }

    #[test]
    fn log_exp_bijection() {
        for (p, k) in [(2, 6), (3, 6), (5, 2), (7, 2), (2, 1), (13, 1)] {
            let f = FieldSpec::new(p, k).unwrap();
            for i in 0..f.order() - 1 {
                assert_eq!(f.log(f.primitive_power(i as i64)), Some(i));
            }
            for a in f.elements().skip(1) {
                assert_eq!(f.primitive_power(f.log(a).unwrap() as i64), a);
            }
        }
    }

    #[test]
    fn reproducible_construction() {
        assert_eq!(FieldSpec::new(3, 6).unwrap(), FieldSpec::new(3, 6).unwrap());
    }

    #[test]
    fn arithmetic_basics() {
        let f = FieldSpec::new(3, 6).unwrap();
        for a in f.elements() {
            assert!((a + -a).is_zero());
            assert_eq!(a - a, f.zero());
            if !a.is_zero() {
                assert_eq!(a.pow(728), f.one());
                assert_eq!(a * a.inv().unwrap(), f.one());
                assert_eq!(a.powi(-3).unwrap() * a.pow(3), f.one());
            }
        }
        assert_eq!(f.zero().inv(), Err(GfError::ZeroInverse));
        assert_eq!(f.zero().powi(-1), Err(GfError::ZeroInverse));
        assert_eq!(f.zero().pow(0), f.one());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FieldSpec::new(5, 2).unwrap();
        let b = FieldSpec::new(7, 2).unwrap();
        assert_eq!(a.one().checked_add(b.one()), Err(GfError::MixedFields(25, 49)));
        // Two separately built copies of the same field are compatible.
        let a2 = FieldSpec::new(5, 2).unwrap();
        assert_eq!(a.one().checked_add(a2.one()).unwrap(), a.from_int(2));
    }

    #[test]
    fn sixteenth_power_test_in_f49() {
        let f = FieldSpec::new(7, 2).unwrap();
        for a in f.elements().skip(1) {
            let has_root = f.count_nth_roots(a, 16) > 0;
            assert_eq!(has_root, a.pow(48 / 16) == f.one());
        }
    }

    #[test]
    fn roots_match_enumeration() {
        let f = FieldSpec::new(7, 2).unwrap();
        let one = f.one();
        let roots = one.nth_roots(16);
        assert_eq!(roots.len(), 16);
        let brute = f.elements().filter(|x| x.pow(16) == one).count();
        assert_eq!(brute, 16);
        assert_eq!(f.zero().nth_roots(3), vec![f.zero()]);

        let f25 = FieldSpec::new(5, 2).unwrap();
        let non_cube = f25.elements().skip(1).find(|a| f25.count_nth_roots(*a, 3) == 0).unwrap();
        assert!(non_cube.nth_roots(3).is_empty());
        assert!(f25.elements().all(|x| x.pow(3) != non_cube));
    }

    #[test]
    fn subfield_membership() {
        let f = FieldSpec::new(5, 2).unwrap();
        assert!(f.zero().is_in_subfield(1).unwrap());
        assert!(!f.generator().is_in_subfield(1).unwrap());
        assert!(f.from_int(3).is_in_subfield(1).unwrap());
        assert!(f.generator().is_in_subfield(2).unwrap());
        let f729 = FieldSpec::new(3, 6).unwrap();
        assert_eq!(
            f729.one().is_in_subfield(4),
            Err(GfError::NotASubfield { m: 4, k: 6 })
        );
        let in_f9 = f729.elements().filter(|a| a.is_in_subfield(2).unwrap()).count();
        assert_eq!(in_f9, 9);
    }

    #[test]
    fn enumeration_order() {
        let f = FieldSpec::new(7, 2).unwrap();
        let all = f.enumerate();
        assert_eq!(all.len(), 49);
        assert_eq!(all[0], f.zero());
        assert_eq!(all[1], f.one());
        assert_eq!(all[2], f.generator());
        let mut codes: Vec<_> = all.iter().map(|e| e.code()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 49);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(125), Some((5, 3)));
    }
}
