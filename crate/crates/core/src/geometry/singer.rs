//! Perfect difference sets and the cyclic (Singer) model of PG(2, q).

use serde::{Deserialize, Serialize};

use super::incidence::IncidenceStructure;
use crate::algebra::{build_field, primitive_element, Field, FieldSpec, DEFAULT_FIELD_CAP};
use crate::error::{Error, Result};

/// A set of residues mod `v`. Serializes as `{"v": int, "residues": [int]}`.
///
/// Construction only normalizes (sorts, range-checks); perfection is checked
/// by [`DifferenceSet::is_perfect`] where it is required.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDifferenceSet")]
pub struct DifferenceSet {
    v: u64,
    residues: Vec<u64>,
}

#[derive(Deserialize)]
struct RawDifferenceSet {
    v: u64,
    residues: Vec<u64>,
}

impl TryFrom<RawDifferenceSet> for DifferenceSet {
    type Error = Error;

    fn try_from(raw: RawDifferenceSet) -> Result<Self> {
        DifferenceSet::new(raw.v, raw.residues)
    }
}

impl DifferenceSet {
    pub fn new(v: u64, mut residues: Vec<u64>) -> Result<DifferenceSet> {
        if v == 0 {
            return Err(Error::Domain("modulus must be positive".into()));
        }
        if let Some(r) = residues.iter().find(|&&r| r >= v) {
            return Err(Error::Domain(format!("residue {r} not in [0, {v})")));
        }
        residues.sort_unstable();
        if residues.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("residues must be distinct".into()));
        }
        Ok(DifferenceSet { v, residues })
    }

    pub fn modulus(&self) -> u64 {
        self.v
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// `tally[r]` = number of ordered pairs `i ≠ j` with `r_i − r_j ≡ r`.
    pub fn difference_tally(&self) -> Vec<usize> {
        let mut tally = vec![0usize; self.v as usize];
        for &a in &self.residues {
            for &b in &self.residues {
                if a != b {
                    tally[((a + self.v - b) % self.v) as usize] += 1;
                }
            }
        }
        tally
    }

    /// Every nonzero residue is a difference exactly once and
    /// `v = k² − k + 1`.
    pub fn is_perfect(&self) -> bool {
        let k = self.len() as u64;
        k >= 1 && self.v == k * k - k + 1 && self.difference_tally()[1..].iter().all(|&c| c == 1)
    }

    /// Lexicographically least set containing 0 among all images
    /// `u·D + t` with `u` a unit mod `v`.
    pub fn canonical(&self) -> DifferenceSet {
        let v = self.v;
        let mut best: Option<Vec<u64>> = None;
        for u in (1..v.max(2)).filter(|&u| gcd(u, v) == 1) {
            let scaled: Vec<u64> = self.residues.iter().map(|&r| (u % v) * r % v).collect();
            for &anchor in &scaled {
                let mut image: Vec<u64> = scaled.iter().map(|&s| (s + v - anchor) % v).collect();
                image.sort_unstable();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
        DifferenceSet {
            v,
            residues: best.unwrap_or_default(),
        }
    }

    pub fn translate(&self, t: u64) -> DifferenceSet {
        let mut residues: Vec<u64> = self.residues.iter().map(|&r| (r + t) % self.v).collect();
        residues.sort_unstable();
        DifferenceSet {
            v: self.v,
            residues,
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A `(q² + q + 1, q + 1, 1)` difference set from a primitive element `g` of
/// `GF(q³)`: the exponents `i` (mod `q² + q + 1`) with
/// `Tr(g^i) = g^i + g^(iq) + g^(iq²) = 0`, returned in canonical form.
///
/// `GF(q³)` is realized directly as `GF(p^(3n))`, which contains `GF(q)` as
/// its unique subfield of order `q`.
pub fn singer_difference_set(spec: &FieldSpec) -> Result<DifferenceSet> {
    let q = spec.order();
    let p = spec.characteristic();
    let n = spec.degree();
    if q.checked_pow(3).is_none_or(|c| c > DEFAULT_FIELD_CAP) {
        return Err(Error::Capacity(format!(
            "GF({q}^3) exceeds the field size bound {DEFAULT_FIELD_CAP}"
        )));
    }
    let big: Field = build_field(p, 3 * n)?.into();
    let g = primitive_element(&big);
    let v = q * q + q + 1;
    let mut residues = Vec::new();
    let mut power = big.one();
    for i in 0..v {
        let trace = power.add(&power.pow(q))?.add(&power.pow(q * q))?;
        if trace.is_zero() {
            residues.push(i);
        }
        power = power.mul(&g)?;
    }
    let set = DifferenceSet::new(v, residues)?;
    debug_assert!(set.is_perfect());
    Ok(set.canonical())
}

/// Points are residues mod `v`; line `t` is the translate `D + t`.
pub fn plane_from_difference_set(ds: &DifferenceSet) -> Result<IncidenceStructure> {
    if !ds.is_perfect() {
        return Err(Error::Precondition(format!(
            "{:?} mod {} is not a perfect difference set",
            ds.residues, ds.v
        )));
    }
    let v = ds.v as usize;
    let lines: Vec<Vec<usize>> = (0..ds.v)
        .map(|t| {
            ds.translate(t)
                .residues
                .iter()
                .map(|&r| r as usize)
                .collect()
        })
        .collect();
    IncidenceStructure::from_lines(v, &lines)?.with_labels(
        (0..v).map(|i| i.to_string()).collect(),
        (0..v).map(|t| format!("D+{t}")).collect(),
    )
}

/// Every perfect difference set of size `k` mod `v`, by enumerating all
/// `k`-subsets. Exponential; meant for cross-checking small cases.
pub fn brute_force_difference_sets(v: u64, k: usize) -> Vec<DifferenceSet> {
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn walk(v: u64, k: usize, start: u64, chosen: &mut Vec<u64>, found: &mut Vec<DifferenceSet>) {
        if chosen.len() == k {
            let set = DifferenceSet {
                v,
                residues: chosen.clone(),
            };
            if set.is_perfect() {
                found.push(set);
            }
            return;
        }
        for r in start..v {
            chosen.push(r);
            walk(v, k, r + 1, chosen, found);
            chosen.pop();
        }
    }
    walk(v, k, 0, &mut chosen, &mut found);
    found
}
