//! Finite fields `GF(p^n)` as polynomials over `Z_p` modulo a fixed monic
//! irreducible of degree `n`.
//!
//! Polynomials are little-endian coefficient vectors throughout. Candidate
//! polynomials (moduli and elements alike) are ordered by the integer
//! `Σ c_i p^i` over their non-leading coefficients, i.e. lexicographically
//! from the highest degree down. Under that order `x³ + x + 1` precedes
//! `x³ + x² + 1`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::number::is_prime;
use crate::error::{Error, Result};

/// Default bound on `p^n` for constructed fields.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

/// Largest field for which [`Field::tables`] will build dense tables.
pub const TABLE_CAP: u64 = 4096;

/// `GF(p^n)` given by a monic irreducible `modulus` of degree `n` over `Z_p`.
///
/// Serializes as `{"p": int, "n": int, "modulus": [int]}`, with `modulus`
/// holding `n + 1` little-endian coefficients (leading 1 included).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec")]
pub struct FieldSpec {
    p: u64,
    n: u32,
    modulus: Vec<u64>,
}

#[derive(Deserialize)]
struct RawFieldSpec {
    p: u64,
    n: u32,
    modulus: Vec<u64>,
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = Error;

    fn try_from(raw: RawFieldSpec) -> Result<Self> {
        FieldSpec::new(raw.p, raw.n, raw.modulus)
    }
}

impl FieldSpec {
    /// Validates an explicit modulus.
    pub fn new(p: u64, n: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("characteristic {p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Domain("extension degree must be positive".into()));
        }
        if modulus.len() != n as usize + 1 || modulus[n as usize] != 1 {
            return Err(Error::Domain(format!(
                "modulus must be monic of degree {n} ({} coefficients, leading 1)",
                n + 1
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Domain(format!(
                "modulus coefficients must lie in [0, {p})"
            )));
        }
        if !is_irreducible(&modulus, p, &mut HashMap::new()) {
            return Err(Error::Domain(format!(
                "modulus {modulus:?} is reducible over Z_{p}"
            )));
        }
        Ok(FieldSpec { p, n, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, `p^n`.
    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }
}

/// `GF(p^n)` with the lexicographically smallest monic irreducible modulus.
pub fn build_field(p: u64, n: u32) -> Result<FieldSpec> {
    build_field_with_cap(p, n, DEFAULT_FIELD_CAP)
}

pub fn build_field_with_cap(p: u64, n: u32, cap: u64) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("characteristic {p} is not prime")));
    }
    if n == 0 {
        return Err(Error::Domain("extension degree must be positive".into()));
    }
    match p.checked_pow(n) {
        Some(q) if q <= cap => {}
        _ => {
            return Err(Error::Capacity(format!(
                "{p}^{n} exceeds the field size bound {cap}"
            )))
        }
    }
    let mut cache = HashMap::new();
    let modulus = monic_polys_lex(p, n as usize)
        .find(|m| is_irreducible(m, p, &mut cache))
        .expect("an irreducible of every degree exists");
    Ok(FieldSpec { p, n, modulus })
}

/// All monic polynomials of the given degree, ordered by `Σ c_i p^i`.
fn monic_polys_lex(p: u64, degree: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(degree as u32);
    (0..total).map(move |mut k| {
        let mut coeffs = vec![0u64; degree + 1];
        for c in coeffs.iter_mut().take(degree) {
            *c = k % p;
            k /= p;
        }
        coeffs[degree] = 1;
        coeffs
    })
}

fn has_root(poly: &[u64], p: u64) -> bool {
    (0..p).any(|x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
}

/// Root test through degree 3; beyond that, trial division by every monic
/// irreducible of degree at most `n / 2`.
fn is_irreducible(poly: &[u64], p: u64, cache: &mut HashMap<usize, Vec<Vec<u64>>>) -> bool {
    let degree = poly.len() - 1;
    if degree == 0 {
        return false;
    }
    if degree == 1 {
        return true;
    }
    if has_root(poly, p) {
        return false;
    }
    if degree <= 3 {
        return true;
    }
    for k in 2..=degree / 2 {
        let divisors = irreducibles_of_degree(p, k, cache);
        if divisors
            .iter()
            .any(|f| poly_rem(poly, f, p).iter().all(|&c| c == 0))
        {
            return false;
        }
    }
    true
}

fn irreducibles_of_degree(
    p: u64,
    k: usize,
    cache: &mut HashMap<usize, Vec<Vec<u64>>>,
) -> Vec<Vec<u64>> {
    if let Some(found) = cache.get(&k) {
        return found.clone();
    }
    let found: Vec<Vec<u64>> = monic_polys_lex(p, k)
        .filter(|f| is_irreducible(f, p, cache))
        .collect();
    cache.insert(k, found.clone());
    found
}

/// Remainder of `a` modulo the monic polynomial `m`, padded to `deg m` coefficients.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let n = m.len() - 1;
    let mut r = a.to_vec();
    for top in (n..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (j, &mj) in m.iter().enumerate() {
            let idx = top - n + j;
            r[idx] = (r[idx] + p - (c * mj) % p) % p;
        }
    }
    r.resize(n, 0);
    r
}

/// Shared handle to a [`FieldSpec`]; elements carry one of these.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldSpec>);

impl From<FieldSpec> for Field {
    fn from(spec: FieldSpec) -> Self {
        Field(Arc::new(spec))
    }
}

impl Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl Field {
    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.n as usize],
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The image of an integer in the prime subfield.
    pub fn constant(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// The class of the indeterminate `x`. For `n == 1` that is the root
    /// `-c_0` of the linear modulus.
    pub fn generator_x(&self) -> FieldElement {
        let mut e = self.zero();
        if self.n == 1 {
            return self.constant(self.p - self.modulus[0]);
        }
        e.coeffs[1] = 1;
        e
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.n as usize {
            return Err(Error::Domain(format!(
                "expected {} coefficients, got {}",
                self.n,
                coeffs.len()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::Domain(format!(
                "coefficient {c} not in [0, {})",
                self.p
            )));
        }
        Ok(FieldElement {
            coeffs: coeffs.to_vec(),
            field: self.clone(),
        })
    }

    /// Element whose coefficients are the base-`p` digits of `index`, least
    /// significant digit first. `from_index(1)` is the multiplicative identity.
    pub fn from_index(&self, index: u64) -> FieldElement {
        let mut e = self.zero();
        let mut k = index;
        for c in e.coeffs.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        e
    }

    /// All elements, in index order (which is also their `Ord` order).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// Dense addition/multiplication tables over element indices.
    pub fn tables(&self) -> Result<FieldTables> {
        FieldTables::new(self)
    }
}

/// An element of `GF(p^n)`: `n` little-endian residues mod `p`.
#[derive(Debug, Clone)]
pub struct FieldElement {
    coeffs: Vec<u64>,
    field: Field,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.n == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl FieldElement {
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn index(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.field.p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Domain("operands belong to different fields".into()));
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<u64>) -> FieldElement {
        FieldElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<FieldElement> {
        self.check_same(other)?;
        let p = self.field.p;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        ))
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p;
        self.with_coeffs(self.coeffs.iter().map(|&a| (p - a) % p).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> FieldElement {
        let p = self.field.p;
        let n = self.field.n as usize;
        let mut product = vec![0u64; 2 * n - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                product[i + j] = (product[i + j] + a * b) % p;
            }
        }
        self.with_coeffs(poly_rem(&product, &self.field.modulus, p))
    }

    pub fn pow(&self, mut exponent: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exponent >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `a^(q-2)`.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Absolute trace `a + a^p + ... + a^(p^(n-1))`, an element of `Z_p`.
    pub fn trace(&self) -> u64 {
        let p = self.field.p;
        let mut acc = self.field.zero();
        let mut conj = self.clone();
        for _ in 0..self.field.n {
            acc = acc.add(&conj).expect("same field");
            conj = conj.pow(p);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0));
        acc.coeffs[0]
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let group = self.field.order() - 1;
        let mut order = group;
        for r in prime_factors(group) {
            while order.is_multiple_of(r) && self.pow(order / r).is_one() {
                order /= r;
            }
        }
        Ok(order)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest (in element order) generator of the multiplicative group.
pub fn primitive_element(field: &Field) -> FieldElement {
    let group = field.order() - 1;
    field
        .elements()
        .filter(|e| !e.is_zero())
        .find(|e| e.multiplicative_order().ok() == Some(group))
        .expect("the multiplicative group of a finite field is cyclic")
}

/// Index-based arithmetic tables for small fields. Elements are identified
/// with [`FieldElement::index`].
#[derive(Debug, Clone)]
pub struct FieldTables {
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
}

impl FieldTables {
    fn new(field: &Field) -> Result<Self> {
        let q = field.order();
        if q > TABLE_CAP {
            return Err(Error::Capacity(format!(
                "dense tables limited to {TABLE_CAP} elements, field has {q}"
            )));
        }
        let elems: Vec<FieldElement> = field.elements().collect();
        let q = q as usize;
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i) {
                let s = a.add(b)?.index() as u32;
                let m = a.mul_unchecked(b).index() as u32;
                add[i * q + j] = s;
                add[j * q + i] = s;
                mul[i * q + j] = m;
                mul[j * q + i] = m;
            }
        }
        let neg = elems.iter().map(|a| a.neg().index() as u32).collect();
        let inv = elems
            .iter()
            .map(|a| a.inv().map(|x| x.index() as u32).unwrap_or(0))
            .collect();
        let trace = elems.iter().map(|a| a.trace() as u32).collect();
        Ok(FieldTables {
            q,
            add,
            mul,
            neg,
            inv,
            trace,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Inverse of a nonzero index; `None` for zero.
    #[inline]
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    /// Absolute trace into `Z_p`.
    #[inline]
    pub fn trace(&self, a: usize) -> usize {
        self.trace[a] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, n: u32) -> Field {
        build_field(p, n).unwrap().into()
    }

    /// Irreducibility by exhaustive search for a nontrivial factorization.
    fn brute_irreducible(poly: &[u64], p: u64) -> bool {
        let n = poly.len() - 1;
        for da in 1..n {
            for a in monic_polys_lex(p, da) {
                let r = poly_rem(poly, &a, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(build_field(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(build_field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(build_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(build_field(7, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn smallest_moduli_match_brute_scan() {
        for (p, n) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 2),
            (5, 3),
            (7, 2),
        ] {
            let expected = monic_polys_lex(p, n as usize)
                .find(|m| brute_irreducible(m, p))
                .unwrap();
            assert_eq!(
                build_field(p, n).unwrap().modulus(),
                &expected[..],
                "GF({p}^{n})"
            );
        }
        // x^2 + 1 has no root mod 3: 0 -> 1, 1 -> 2, 2 -> 2
        assert_eq!(build_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn irreducibility_test_agrees_with_brute_force() {
        for (p, n) in [(2usize, 4usize), (2, 5), (2, 6), (3, 4)] {
            let mut cache = HashMap::new();
            for m in monic_polys_lex(p as u64, n) {
                assert_eq!(
                    is_irreducible(&m, p as u64, &mut cache),
                    brute_irreducible(&m, p as u64),
                    "{m:?}"
                );
            }
        }
    }

    #[test]
    fn build_errors() {
        assert!(matches!(build_field(4, 1), Err(Error::Domain(_))));
        assert!(matches!(build_field(2, 0), Err(Error::Domain(_))));
        assert!(matches!(build_field(2, 21), Err(Error::Capacity(_))));
        assert!(build_field(2, 20).is_ok());
        assert!(matches!(
            build_field_with_cap(3, 3, 26),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn spec_validation() {
        assert!(FieldSpec::new(2, 2, vec![1, 1, 1]).is_ok());
        assert!(matches!(
            FieldSpec::new(2, 2, vec![1, 0, 1]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 2, vec![1, 1]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 2, vec![1, 1, 2]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn spec_json() {
        let spec = build_field(2, 3).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"p":2,"n":3,"modulus":[1,1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<FieldSpec>(r#"{"p":2,"n":2,"modulus":[1,0,1]}"#).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let gf7 = field(7, 1);
        assert_eq!(gf7.constant(3).mul(&gf7.constant(5)).unwrap(), gf7.one());

        // GF(4) with x^2 + x + 1, against a hand table.
        // indices: 0 = 0, 1 = 1, 2 = x, 3 = x + 1
        let gf4 = field(2, 2);
        let x = gf4.generator_x();
        assert_eq!(x.mul(&x).unwrap().coefficients(), &[1, 1]);
        let table = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let prod = gf4
                    .from_index(i as u64)
                    .mul(&gf4.from_index(j as u64))
                    .unwrap();
                assert_eq!(prod.index(), v);
            }
        }

        let gf5 = field(5, 1);
        assert_eq!(gf5.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields() {
        let a = field(2, 2).one();
        let b = field(3, 1).one();
        assert!(matches!(a.add(&b), Err(Error::Domain(_))));
        assert!(matches!(a.mul(&b), Err(Error::Domain(_))));
        // same spec built twice is the same field
        assert!(field(2, 2).one().add(&a).is_ok());
    }

    #[test]
    fn field_laws_exhaustive() {
        for (p, n) in [
            (2, 1),
            (3, 1),
            (5, 1),
            (7, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (2, 5),
            (3, 3),
            (7, 2),
            (2, 6),
        ] {
            let f = field(p, n);
            assert!(f.order() <= 64);
            let elems: Vec<_> = f.elements().collect();
            let zero = f.zero();
            let one = f.one();
            for a in &elems {
                assert_eq!(a.add(&zero).unwrap(), *a);
                assert_eq!(a.mul(&one).unwrap(), *a);
                assert!(a.add(&a.neg()).unwrap().is_zero());
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                }
                for b in &elems {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &elems {
                        assert_eq!(
                            a.add(b).unwrap().add(c).unwrap(),
                            a.add(&b.add(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(b).unwrap().mul(c).unwrap(),
                            a.mul(&b.mul(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(&b.add(c).unwrap()).unwrap(),
                            a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    fn order_by_enumeration(g: &FieldElement) -> u64 {
        let mut acc = g.clone();
        let mut k = 1;
        while !acc.is_one() {
            acc = acc.mul(g).unwrap();
            k += 1;
        }
        k
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_element(&field(7, 1)).coefficients(), &[3]);
        assert_eq!(primitive_element(&field(2, 1)).coefficients(), &[1]);
        assert_eq!(primitive_element(&field(2, 2)).coefficients(), &[0, 1]);
    }

    #[test]
    fn primitive_is_smallest_full_order_element() {
        for (p, n) in [
            (2, 1),
            (3, 1),
            (7, 1),
            (13, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 6),
        ] {
            let f = field(p, n);
            let group = f.order() - 1;
            let g = primitive_element(&f);
            assert!(g.pow(group).is_one());
            assert_eq!(order_by_enumeration(&g), group);
            for e in f.elements().filter(|e| !e.is_zero() && *e < g) {
                assert!(order_by_enumeration(&e) < group);
            }
        }
    }

    #[test]
    fn trace_is_additive_and_onto() {
        for (p, n) in [(2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = field(p, n);
            let elems: Vec<_> = f.elements().collect();
            let mut hits = vec![0; p as usize];
            for a in &elems {
                hits[a.trace() as usize] += 1;
                for b in &elems {
                    assert_eq!(a.add(b).unwrap().trace(), (a.trace() + b.trace()) % p);
                }
            }
            assert!(hits.iter().all(|&h| h == f.order() / p));
        }
    }

    #[test]
    fn tables_match_elements() {
        let f = field(3, 2);
        let t = f.tables().unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let (i, j) = (a.index() as usize, b.index() as usize);
                assert_eq!(t.add(i, j) as u64, a.add(&b).unwrap().index());
                assert_eq!(t.mul(i, j) as u64, a.mul(&b).unwrap().index());
            }
            assert_eq!(t.trace(a.index() as usize) as u64, a.trace());
        }
        assert_eq!(t.inv(0), None);
    }

    #[test]
    fn display() {
        let f = field(3, 2);
        assert_eq!(f.element(&[2, 1]).unwrap().to_string(), "x+2");
        assert_eq!(f.element(&[0, 2]).unwrap().to_string(), "2x");
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(field(7, 1).constant(4).to_string(), "4");
    }
}
