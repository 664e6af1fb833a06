//! Independent oracles for the integration tests. Nothing here uses the
//! library's field or semigroup code.

#![allow(dead_code)]

use std::collections::HashMap;

/// `F_{p^k}` built from the first primitive polynomial found by scanning
/// candidate moduli with the constant term varying fastest. Elements are
/// base-`p` digit codes; 0 is zero.
pub struct TinyField {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl TinyField {
    pub fn new(p: u64, k: u32) -> Self {
        let q = p.pow(k);
        let n = q - 1;
        for tail in 0..q {
            let modulus = digits(tail, p, k);
            if modulus[0] == 0 {
                continue;
            }
            // Powers of x modulo x^k - Σ modulus; x primitive iff it cycles with period q-1.
            let mut cur = vec![0u64; k as usize];
            cur[0] = 1;
            let mut exp = Vec::with_capacity(n as usize);
            let mut log = vec![u64::MAX; q as usize];
            let mut ok = true;
            for i in 0..n {
                let code = undigits(&cur, p);
                if log[code as usize] != u64::MAX {
                    ok = false;
                    break;
                }
                log[code as usize] = i;
                exp.push(code);
                cur = times_x(&cur, &modulus, p);
            }
            if ok && undigits(&cur, p) == 1 {
                return TinyField { p, k, q, exp, log };
            }
        }
        panic!("no primitive polynomial of degree {k} over F_{p}");
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (digits(a, self.p, self.k), digits(b, self.p, self.k));
        undigits(&da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect::<Vec<_>>(), self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d = digits(a, self.p, self.k);
        undigits(&d.iter().map(|x| (self.p - x) % self.p).collect::<Vec<_>>(), self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[((self.log[a as usize] + self.log[b as usize]) % (self.q - 1)) as usize]
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        assert_ne!(b, 0);
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + n - self.log[b as usize]) % n) as usize]
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        self.exp[((self.log[a as usize] as u128 * e as u128) % (self.q as u128 - 1)) as usize]
    }

    /// The image of the integer `n`.
    pub fn int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// `#{x : x^n = a}` for every `a`.
    pub fn power_histogram(&self, n: u64) -> HashMap<u64, u64> {
        let mut h = HashMap::new();
        for x in self.elements() {
            *h.entry(self.pow(x, n)).or_insert(0) += 1;
        }
        h
    }
}

fn digits(mut c: u64, p: u64, k: u32) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

// cur * x where x^k = Σ modulus[i] x^i.
fn times_x(cur: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = cur.len();
    let top = cur[k - 1];
    let mut out = vec![0u64; k];
    for i in (1..k).rev() {
        out[i] = cur[i - 1];
    }
    for i in 0..k {
        out[i] = (out[i] + top * modulus[i]) % p;
    }
    out
}

/// Places of degree one on the GK curve over `F_{qbar^6}`, counted as the
/// affine solutions of `y^{qbar+1} = x^qbar + x`, `z^{qbar^2-qbar+1} = y h(x)`
/// with `h = (x^{qbar^2} - x)/(x^qbar + x)`, plus the single point at infinity.
pub fn gk_oracle(qbar: u64) -> u64 {
    let (p, e) = prime_power(qbar);
    let f = TinyField::new(p, 6 * e);
    let h = poly_div_exact(&x_pow_minus_x(qbar * qbar, p), &x_pow_plus_x(qbar, p), p);
    let d = qbar * qbar - qbar + 1;
    let roots = f.power_histogram(d);
    let mut affine = 0;
    for x in f.elements() {
        let rhs = f.add(f.pow(x, qbar), x);
        let hx = h.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), f.int(c)));
        for y in f.elements() {
            if f.pow(y, qbar + 1) == rhs {
                affine += roots.get(&f.mul(y, hx)).copied().unwrap_or(0);
            }
        }
    }
    affine + 1
}

/// `#{t0 ∉ {0,-1} : t0 (t0+1)^6 is a 16th power in F_49}`.
pub fn gsx49_sixteenth_power_count() -> u64 {
    let f = TinyField::new(7, 2);
    let minus_one = f.int(-1);
    f.elements()
        .filter(|&t| t != 0 && t != minus_one)
        .filter(|&t| {
            let u = f.mul(t, f.pow(f.add(t, 1), 6));
            f.pow(u, 3) == 1
        })
        .count() as u64
}

/// Places of degree one on `z^3 = w x y`, `x^n + y^n + 1 = 0`, `n = (q+1)/3`
/// over `F_{q^2}`: affine solutions plus one place over each of the `n`
/// points at infinity of the base, all totally ramified.
pub fn fk_oracle(q: u64) -> u64 {
    let (p, e) = prime_power(q);
    let f = TinyField::new(p, 2 * e);
    let n = (q + 1) / 3;
    let three = f.int(3);
    let w = f.elements().find(|&w| f.pow(w, n) == three).expect("w exists");
    let cubes = f.power_histogram(3);
    let minus_one = f.int(-1);
    let mut nth: HashMap<u64, Vec<u64>> = HashMap::new();
    for y in f.elements() {
        nth.entry(f.pow(y, n)).or_default().push(y);
    }
    let mut affine = 0;
    for x in f.elements() {
        let target = f.sub(minus_one, f.pow(x, n));
        for &y in nth.get(&target).map(|v| v.as_slice()).unwrap_or(&[]) {
            affine += cubes.get(&f.mul(w, f.mul(x, y))).copied().unwrap_or(0);
        }
    }
    affine + n
}

/// `(p, e)` with `n = p^e`; panics if `n` is not a prime power.
pub fn prime_power(n: u64) -> (u64, u32) {
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2");
    let (mut m, mut e) = (n, 0);
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    assert_eq!(m, 1, "{n} is not a prime power");
    (p, e)
}

fn x_pow_minus_x(n: u64, p: u64) -> Vec<i64> {
    let mut v = vec![0i64; n as usize + 1];
    v[n as usize] = 1;
    v[1] = p as i64 - 1;
    v
}

fn x_pow_plus_x(n: u64, _p: u64) -> Vec<i64> {
    let mut v = vec![0i64; n as usize + 1];
    v[n as usize] = 1;
    v[1] += 1;
    v
}

// Exact division of polynomials over F_p; coefficients low degree first.
fn poly_div_exact(a: &[i64], b: &[i64], p: u64) -> Vec<i64> {
    let p = p as i64;
    let mut r: Vec<i64> = a.iter().map(|c| c.rem_euclid(p)).collect();
    let db = b.len() - 1;
    let lead_inv = (1..p).find(|i| (i * b[db]).rem_euclid(p) == 1).unwrap();
    let mut qt = vec![0i64; r.len() - db];
    for i in (0..qt.len()).rev() {
        let c = (r[i + db] * lead_inv).rem_euclid(p);
        qt[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] - c * bj).rem_euclid(p);
        }
    }
    assert!(r.iter().all(|&c| c == 0), "division is not exact");
    qt
}

/// Gaps of the semigroup generated by `gens`, by reachability up to `limit`.
pub fn gaps_by_reachability(gens: &[u64], limit: u64) -> Vec<u64> {
    let mut reach = vec![false; limit as usize + 1];
    reach[0] = true;
    for n in 1..=limit as usize {
        reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
    }
    (0..=limit).filter(|&n| !reach[n as usize]).collect()
}
