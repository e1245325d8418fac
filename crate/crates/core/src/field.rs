//! Arithmetic in GF(p^m).
//!
//! Elements are stored as integer codes: the polynomial `c_0 + c_1 a + ... + c_{m-1} a^{m-1}`
//! (with `a` the class of the variable modulo the defining polynomial) is encoded as
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The defining polynomial is the Conway polynomial
//! for `(p, m)`, so the encoding is the same for every implementation and subfields embed
//! compatibly. In GF(4) this gives `0, 1, a, a^2 = a + 1` as codes `0, 1, 2, 3`.
//!
//! Multiplication and inversion go through log/antilog tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Conway polynomials, coefficients from the constant term up (monic, leading 1 included).
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (5, 5, &[3, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
    (11, 2, &[2, 7, 1]),
    (11, 3, &[9, 2, 0, 1]),
    (11, 4, &[2, 10, 8, 0, 1]),
    (13, 2, &[2, 12, 1]),
    (13, 3, &[11, 2, 0, 1]),
    (13, 4, &[2, 12, 3, 0, 1]),
];

/// A field element, identified by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldData {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = a^i` for `0 <= i < 2(q-1)`, doubled to skip a reduction in `mul`.
    exp: Vec<u32>,
    /// `log[a^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field GF(p^m). Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest primitive root modulo a prime `p`.
fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut r = p - 1;
    let mut d = 2;
    while d * d <= r {
        if r.is_multiple_of(d) {
            factors.push(d);
            while r.is_multiple_of(d) {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    let pow_mod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        acc
    };
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&f| pow_mod(g as u64, ((p - 1) / f) as u64) != 1)
        })
        .expect("every prime has a primitive root")
}

/// Splits a prime power `q` into `(p, m)`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 || p > u32::MAX as u64 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, m))
}

impl Field {
    /// Builds GF(p^m) with its fixed Conway polynomial.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::UnsupportedField { p, m });
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::UnsupportedField { p, m })? as u32;
        let modulus: Vec<u32> = if m == 1 {
            let g = least_primitive_root(p);
            vec![(p - g) % p, 1]
        } else {
            CONWAY
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::UnsupportedField { p, m })?
        };
        if m > 1 && m <= 4 {
            // No roots in the prime field; for m <= 3 this is irreducibility.
            for x in 0..p as u64 {
                let mut acc = 0u64;
                for &c in modulus.iter().rev() {
                    acc = (acc * x + c as u64) % p as u64;
                }
                if acc == 0 {
                    return Err(Error::UnsupportedField { p, m });
                }
            }
        }

        // Walk the powers of the root `a` in digit form.
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0u32; q as usize];
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        for i in 0..(q - 1) {
            let code = encode(&digits);
            if i > 0 && code == 1 {
                // The defining polynomial is not primitive.
                return Err(Error::UnsupportedField { p, m });
            }
            exp.push(code);
            log[code as usize] = i;
            // multiply by a: shift up one place, then reduce the overflow digit.
            let top = digits[m as usize - 1];
            digits.rotate_right(1);
            digits[0] = 0;
            if top != 0 {
                for (k, d) in digits.iter_mut().enumerate() {
                    *d = (*d + p - top * modulus[k] % p) % p;
                }
            }
        }
        if encode(&digits) != 1 {
            return Err(Error::UnsupportedField { p, m });
        }
        let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
        Ok(Field(Arc::new(FieldData {
            p,
            m,
            q,
            modulus,
            exp: doubled,
            log,
        })))
    }

    /// Builds the field with `q` elements.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power(q)?;
        Field::new(p, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Name used in file formats and CLI output, e.g. `gf(2^2)`.
    pub fn name(&self) -> String {
        format!("gf({}^{})", self.0.p, self.0.m)
    }

    /// Parses a `gf(p^m)` field name.
    pub fn from_name(name: &str) -> Result<Field> {
        let inner = name
            .trim()
            .strip_prefix("gf(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad field name {name:?}")))?;
        let (p, m) = inner
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("bad field name {name:?}")))?;
        let p = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {name:?}")))?;
        let m = m
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in {name:?}")))?;
        Field::new(p, m)
    }

    pub fn element(&self, code: u32) -> Result<Fe> {
        if code < self.0.q {
            Ok(Fe(code))
        } else {
            Err(Error::NotInField {
                code,
                field: self.name(),
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    /// The root of the defining polynomial; it generates the multiplicative group.
    pub fn primitive(&self) -> Fe {
        Fe(self.0.exp[1 % (self.0.q as usize - 1).max(1)])
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.0.m == 1 {
            return Fe((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut scale, mut out) = (a.0, b.0, 1u32, 0u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut scale, mut out) = (a.0, 1u32, 0u32);
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let d = &self.0;
        Fe(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = &self.0;
        let order = d.q - 1;
        Ok(Fe(d.exp[((order - d.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; `a^0 = 1` (including `0^0`), negative exponents go through the inverse.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe> {
        if e == 0 {
            return Ok(Fe::ONE);
        }
        if a.0 == 0 {
            return if e > 0 {
                Ok(Fe::ZERO)
            } else {
                Err(Error::DivisionByZero)
            };
        }
        let d = &self.0;
        let order = (d.q - 1) as i64;
        let l = d.log[a.0 as usize] as i64;
        let k = (l * e.rem_euclid(order)).rem_euclid(order);
        Ok(Fe(d.exp[k as usize]))
    }

    /// Discrete logarithm to the base [`Field::primitive`]; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// `a^(p^k)`.
    pub fn frobenius_power(&self, a: Fe, k: u32) -> Fe {
        let mut out = a;
        for _ in 0..(k % self.0.m) {
            out = self.pow_u(out, self.0.p as u64);
        }
        out
    }

    fn pow_u(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let d = &self.0;
        let order = (d.q - 1) as u64;
        Fe(d.exp[((d.log[a.0 as usize] as u64 * (e % order)) % order) as usize])
    }

    fn check_subdegree(&self, sub: u32) -> Result<()> {
        if sub == 0 || !self.0.m.is_multiple_of(sub) {
            Err(Error::NotSubfield { sub, m: self.0.m })
        } else {
            Ok(())
        }
    }

    /// Trace down to GF(p^sub): the sum of the Galois orbit of `a` over that subfield.
    /// The result is returned in this field's encoding.
    pub fn trace_to(&self, a: Fe, sub: u32) -> Result<Fe> {
        self.check_subdegree(sub)?;
        let mut acc = Fe::ZERO;
        let mut cur = a;
        for _ in 0..self.0.m / sub {
            acc = self.add(acc, cur);
            cur = self.frobenius_power(cur, sub);
        }
        Ok(acc)
    }

    /// Norm down to GF(p^sub), returned in this field's encoding.
    pub fn norm_to(&self, a: Fe, sub: u32) -> Result<Fe> {
        self.check_subdegree(sub)?;
        let mut acc = Fe::ONE;
        let mut cur = a;
        for _ in 0..self.0.m / sub {
            acc = self.mul(acc, cur);
            cur = self.frobenius_power(cur, sub);
        }
        Ok(acc)
    }

    /// The subfield GF(p^sub) with its own Conway encoding.
    pub fn subfield(&self, sub: u32) -> Result<Field> {
        self.check_subdegree(sub)?;
        Field::new(self.0.p, sub)
    }

    /// Re-encodes an element of the subfield GF(p^sub) in that subfield's own encoding.
    /// Relies on Conway compatibility: `a^((q-1)/(p^sub-1))` is the subfield's root.
    pub fn to_subfield(&self, a: Fe, sub: &Field) -> Result<Fe> {
        if sub.0.p != self.0.p {
            return Err(Error::FieldMismatch {
                left: self.name(),
                right: sub.name(),
            });
        }
        self.check_subdegree(sub.0.m)?;
        if a.0 == 0 {
            return Ok(Fe::ZERO);
        }
        let ratio = (self.0.q - 1) / (sub.0.q - 1);
        let l = self.0.log[a.0 as usize];
        if !l.is_multiple_of(ratio) {
            return Err(Error::NotInSubfield(sub.0.m));
        }
        Ok(Fe(sub.0.exp[(l / ratio) as usize]))
    }

    /// Human-oriented rendering: `0`, `1`, `a`, `a^k` (powers of the primitive root).
    pub fn pretty(&self, a: Fe) -> String {
        match a.0 {
            0 => "0".into(),
            1 => "1".into(),
            _ if self.0.m == 1 => a.0.to_string(),
            _ => match self.0.log[a.0 as usize] {
                1 => "a".into(),
                k => format!("a^{k}"),
            },
        }
    }

    /// Sum of a slice of elements.
    pub fn sum<I: IntoIterator<Item = Fe>>(&self, items: I) -> Fe {
        items.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook multiplication of code-encoded polynomials modulo the defining polynomial.
    fn poly_mul(field: &Field, a: Fe, b: Fe) -> Fe {
        let p = field.characteristic() as u64;
        let m = field.degree() as usize;
        let digits = |mut x: u32| {
            let mut d = vec![0u64; m];
            for slot in d.iter_mut() {
                *slot = x as u64 % p;
                x /= p as u32;
            }
            d
        };
        let (da, db) = (digits(a.0), digits(b.0));
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let modulus = field.modulus();
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c != 0 {
                for (t, &coef) in modulus.iter().enumerate().take(m + 1) {
                    let idx = k - m + t;
                    prod[idx] = (prod[idx] + p * p - c * coef as u64 % p) % p;
                }
            }
        }
        Fe(prod[..m].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32)
    }

    #[test]
    fn gf4_matches_worked_example() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = Fe(2);
        assert_eq!(f.primitive(), a);
        assert_eq!(f.mul(a, a), Fe(3));
        assert_eq!(f.add(Fe::ONE, a), Fe(3));
        assert_eq!(f.name(), "gf(2^2)");
    }

    #[test]
    fn gf2_and_gf8() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.elements().collect::<Vec<_>>(), vec![Fe(0), Fe(1)]);
        let f8 = Field::new(2, 3).unwrap();
        let a = f8.primitive();
        let a3 = f8.mul(f8.mul(a, a), a);
        assert_eq!(a3, f8.add(a, Fe::ONE));
        for x in f8.elements() {
            for y in f8.elements() {
                assert_eq!(f8.mul(x, y), poly_mul(&f8, x, y));
            }
        }
        for x in f8.elements().skip(1) {
            assert_eq!(f8.pow(x, 7).unwrap(), Fe::ONE);
        }
    }

    #[test]
    fn tables_agree_with_polynomial_reduction() {
        for (p, m) in [(2, 4), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = Field::new(p, m).unwrap();
            let step = (f.order() / 61).max(1) as usize;
            for x in f.elements().step_by(step) {
                for y in f.elements().step_by(step) {
                    assert_eq!(f.mul(x, y), poly_mul(&f, x, y), "gf({p}^{m})");
                }
            }
        }
    }

    #[test]
    fn every_table_entry_builds() {
        for &(p, m, _) in CONWAY {
            let f = Field::new(p, m).unwrap();
            assert_eq!(f.order() as u64, (p as u64).pow(m));
        }
        for p in [2, 3, 5, 7, 251, 65521] {
            let f = Field::new(p, 1).unwrap();
            for x in f.elements().skip(1).take(50) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
            }
        }
    }

    #[test]
    fn conway_compatibility() {
        // the subfield root is a^((q-1)/(q_d-1)) and satisfies the subfield polynomial
        for &(p, m, _) in CONWAY
            .iter()
            .filter(|c| c.1 > 1 && (c.0 as u64).pow(c.1) <= 4096)
        {
            let f = Field::new(p, m).unwrap();
            for d in (1..m).filter(|d| m % d == 0) {
                let sub = f.subfield(d).unwrap();
                let ratio = (f.order() - 1) / (sub.order() - 1);
                let beta = f.pow(f.primitive(), ratio as i64).unwrap();
                assert_eq!(f.to_subfield(beta, &sub).unwrap(), sub.primitive());
                // evaluate the subfield's polynomial at beta inside the big field
                let mut acc = Fe::ZERO;
                for &c in sub.modulus().iter().rev() {
                    acc = f.add(f.mul(acc, beta), f.element(c).unwrap());
                }
                assert_eq!(acc, Fe::ZERO, "gf({p}^{m}) over degree {d}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 17),
            Err(Error::UnsupportedField { .. })
        ));
        assert!(matches!(
            Field::new(17, 2),
            Err(Error::UnsupportedField { .. })
        ));
        assert!(matches!(
            Field::with_order(12),
            Err(Error::NotPrimePower(12))
        ));
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
        assert_eq!(f.div(Fe::ONE, Fe::ZERO), Err(Error::DivisionByZero));
        assert!(f.element(4).is_err());
        assert!(matches!(
            f.trace_to(Fe(2), 3),
            Err(Error::NotSubfield { .. })
        ));
    }

    #[test]
    fn pow_edge_cases() {
        let f = Field::new(3, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.pow(x, 0).unwrap(), Fe::ONE);
        }
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, -1).unwrap(), f.inv(x).unwrap());
            assert_eq!(f.mul(f.pow(x, -3).unwrap(), f.pow(x, 3).unwrap()), Fe::ONE);
        }
        assert_eq!(f.inv(Fe::ONE).unwrap(), Fe::ONE);
        assert!(f.pow(Fe::ZERO, -2).is_err());
    }

    #[test]
    fn trace_and_norm_gf4() {
        let f = Field::new(2, 2).unwrap();
        let a = Fe(2);
        assert_eq!(f.trace_to(a, 1).unwrap(), Fe::ONE);
        assert_eq!(f.norm_to(a, 1).unwrap(), Fe::ONE);
        assert_eq!(f.trace_to(Fe::ZERO, 1).unwrap(), Fe::ZERO);
        assert_eq!(f.norm_to(Fe::ONE, 1).unwrap(), Fe::ONE);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 1),
            (3, 2),
            (5, 1),
            (7, 1),
            (13, 1),
        ] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_and_traces_up_to_64() {
        for (p, m) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 2),
            (3, 3),
            (5, 2),
            (7, 2),
        ] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            }
            for d in (1..=m).filter(|d| m % d == 0) {
                let sub = f.subfield(d).unwrap();
                let mut image = std::collections::BTreeSet::new();
                for a in f.elements() {
                    let t = f.trace_to(a, d).unwrap();
                    image.insert(f.to_subfield(t, &sub).unwrap());
                    let n = f.norm_to(a, d).unwrap();
                    f.to_subfield(n, &sub).unwrap();
                    for b in f.elements().step_by(3) {
                        let lhs = f.trace_to(f.add(a, b), d).unwrap();
                        let rhs = f.add(t, f.trace_to(b, d).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
                assert_eq!(image.len() as u32, sub.order(), "trace onto gf({p}^{d})");
            }
            for code in 0..f.order() {
                assert_eq!(f.element(code).unwrap().code(), code);
            }
        }
    }

    #[test]
    fn pretty_and_names() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.pretty(Fe(2)), "a");
        assert_eq!(f.pretty(Fe(3)), "a^2");
        assert_eq!(
            Field::from_name("gf(3^2)").unwrap(),
            Field::new(3, 2).unwrap()
        );
        assert!(Field::from_name("GF9").is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn ring_laws_large_fields(a in 0u32..65536, b in 0u32..65536, c in 0u32..65536) {
            let f = Field::new(2, 16).unwrap();
            let (a, b, c) = (Fe(a), Fe(b), Fe(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }

        #[test]
        fn ring_laws_odd(a in 0u32..2187, b in 0u32..2187, c in 0u32..2187) {
            let f = Field::new(3, 7).unwrap();
            let (a, b, c) = (Fe(a), Fe(b), Fe(c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
        }
    }
}
