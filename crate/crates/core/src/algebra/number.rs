//! Integer facts about plane orders: prime-power classification, subspace
//! counts, sums of two squares and the Bruck–Ryser exclusion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `value == prime.pow(exponent)` with `prime` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePowerDecomposition {
    pub value: u64,
    pub prime: u64,
    pub exponent: u32,
}

/// `a² + b² == n` with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoSquareWitness {
    pub a: u64,
    pub b: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BruckRyser {
    RuledOut,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaneStatus {
    ExistsPrimePower,
    RuledOutBruckRyser,
    RuledOutByComputation,
    Open,
}

impl PlaneStatus {
    pub fn is_ruled_out(self) -> bool {
        matches!(
            self,
            PlaneStatus::RuledOutBruckRyser | PlaneStatus::RuledOutByComputation
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PlaneStatus::ExistsPrimePower => "ExistsPrimePower",
            PlaneStatus::RuledOutBruckRyser => "RuledOutBruckRyser",
            PlaneStatus::RuledOutByComputation => "RuledOutByComputation",
            PlaneStatus::Open => "Open",
        }
    }
}

impl std::fmt::Display for PlaneStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneExistenceVerdict {
    pub order: u64,
    pub status: PlaneStatus,
    pub detail: String,
}

/// Orders excluded by exhaustive computer search. Only order 10 is included.
pub const COMPUTER_PROOF_EXCLUSIONS: &[u64] = &[10];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Returns the decomposition `d = p^k` when `d` is a prime power.
pub fn classify_order(d: u64) -> Result<Option<PrimePowerDecomposition>> {
    if d < 2 {
        return Err(Error::Domain(format!("order must be at least 2, got {d}")));
    }
    let mut p = 2u64;
    while p * p <= d && !d.is_multiple_of(p) {
        p += 1;
    }
    if !d.is_multiple_of(p) {
        // no factor up to sqrt(d): d is prime
        p = d;
    }
    let mut rest = d;
    let mut exponent = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        exponent += 1;
    }
    Ok((rest == 1).then_some(PrimePowerDecomposition {
        value: d,
        prime: p,
        exponent,
    }))
}

/// Number of `(k+1)`-dimensional subspaces of `GF(d)^(n+1)`, i.e. of
/// projective `k`-subspaces of projective `n`-space over a field of order `d`,
/// evaluated from the product formula with exact division.
///
/// `k = -1` counts the empty subspace and yields 1.
pub fn gaussian_binomial(n: i64, k: i64, d: u64) -> Result<u128> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "field order must be at least 2, got {d}"
        )));
    }
    if k < -1 || k > n {
        return Err(Error::Domain(format!(
            "need -1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let overflow = || Error::Capacity(format!("gaussian_binomial({n}, {k}, {d}) overflows u128"));
    let d = d as u128;
    let pow = |e: i64| -> Result<u128> { d.checked_pow(e as u32).ok_or_else(overflow) };

    let top = pow(n + 1)?;
    let bottom = pow(k + 1)?;
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for i in 0..=k {
        let di = pow(i)?;
        numerator = numerator.checked_mul(top - di).ok_or_else(overflow)?;
        denominator = denominator.checked_mul(bottom - di).ok_or_else(overflow)?;
    }
    debug_assert_eq!(numerator % denominator, 0);
    Ok(numerator / denominator)
}

/// Smallest-`a` witness of `n = a² + b²`, `0 <= a <= b`.
pub fn is_sum_of_two_squares(n: u64) -> Option<TwoSquareWitness> {
    let mut a = 0u64;
    while 2 * a * a <= n {
        let rest = n - a * a;
        let b = isqrt(rest);
        if b * b == rest {
            return Some(TwoSquareWitness { a, b });
        }
        a += 1;
    }
    None
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// No plane of order `d` exists if `d - 1` or `d - 2` is divisible by 4 and
/// `d` is not a sum of two squares.
pub fn bruck_ryser(d: u64) -> Result<BruckRyser> {
    if d < 2 {
        return Err(Error::Domain(format!("order must be at least 2, got {d}")));
    }
    let congruent = (d - 1).is_multiple_of(4) || (d - 2).is_multiple_of(4);
    Ok(if congruent && is_sum_of_two_squares(d).is_none() {
        BruckRyser::RuledOut
    } else {
        BruckRyser::Inconclusive
    })
}

pub fn plane_existence_status(d: u64) -> Result<PlaneExistenceVerdict> {
    let (status, detail) = if let Some(pp) = classify_order(d)? {
        (
            PlaneStatus::ExistsPrimePower,
            format!("{d} = {}^{}; PG(2,{d}) exists", pp.prime, pp.exponent),
        )
    } else if bruck_ryser(d)? == BruckRyser::RuledOut {
        (
            PlaneStatus::RuledOutBruckRyser,
            format!("{d} = {} (mod 4) and is not a sum of two squares", d % 4),
        )
    } else if COMPUTER_PROOF_EXCLUSIONS.contains(&d) {
        (
            PlaneStatus::RuledOutByComputation,
            format!("order {d} excluded by exhaustive computer search"),
        )
    } else {
        let reason = match is_sum_of_two_squares(d) {
            Some(w) if d % 4 == 1 || d % 4 == 2 => {
                format!("Bruck-Ryser inconclusive ({d} = {}^2 + {}^2)", w.a, w.b)
            }
            _ => format!("Bruck-Ryser inconclusive ({d} = {} mod 4)", d % 4),
        };
        (PlaneStatus::Open, format!("not a prime power; {reason}"))
    };
    Ok(PlaneExistenceVerdict {
        order: d,
        status,
        detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let nine = classify_order(9).unwrap().unwrap();
        assert_eq!((nine.prime, nine.exponent), (3, 2));
        assert_eq!(classify_order(6).unwrap(), None);
        let thirteen = classify_order(13).unwrap().unwrap();
        assert_eq!((thirteen.prime, thirteen.exponent), (13, 1));
        assert!(matches!(classify_order(1), Err(Error::Domain(_))));
        assert!(matches!(classify_order(0), Err(Error::Domain(_))));
    }

    #[test]
    fn classify_agrees_with_naive_powers() {
        for d in 2u64..2000 {
            let naive = (2..=d).filter(|&p| is_prime(p)).find_map(|p| {
                let mut v = p;
                let mut e = 1;
                while v < d {
                    v *= p;
                    e += 1;
                }
                (v == d).then_some((p, e))
            });
            let got = classify_order(d).unwrap().map(|pp| (pp.prime, pp.exponent));
            assert_eq!(got, naive, "d = {d}");
        }
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(1, 0, 5).unwrap(), 6);
        for q in 2..10 {
            assert_eq!(gaussian_binomial(2, 2, q).unwrap(), 1);
            assert_eq!(gaussian_binomial(3, -1, q).unwrap(), 1);
        }
        assert_eq!(gaussian_binomial(2, 0, 2).unwrap(), 7);
        assert_eq!(gaussian_binomial(2, 1, 3).unwrap(), 13);
        assert_eq!(gaussian_binomial(3, 1, 2).unwrap(), 35);
        for d in 2..=50 {
            assert_eq!(gaussian_binomial(1, 0, d).unwrap(), d as u128 + 1);
        }
    }

    #[test]
    fn gaussian_binomial_errors() {
        assert!(matches!(gaussian_binomial(2, 3, 2), Err(Error::Domain(_))));
        assert!(matches!(gaussian_binomial(2, -2, 2), Err(Error::Domain(_))));
        assert!(matches!(gaussian_binomial(2, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(
            gaussian_binomial(60, 30, 1000),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn two_squares() {
        assert_eq!(
            is_sum_of_two_squares(10),
            Some(TwoSquareWitness { a: 1, b: 3 })
        );
        assert_eq!(
            is_sum_of_two_squares(2),
            Some(TwoSquareWitness { a: 1, b: 1 })
        );
        assert_eq!(
            is_sum_of_two_squares(0),
            Some(TwoSquareWitness { a: 0, b: 0 })
        );
        assert_eq!(
            is_sum_of_two_squares(25),
            Some(TwoSquareWitness { a: 0, b: 5 })
        );
        assert_eq!(is_sum_of_two_squares(6), None);
        assert_eq!(is_sum_of_two_squares(3), None);
    }

    #[test]
    fn two_squares_exhaustive() {
        for n in 0u64..500 {
            let brute = (0..=n).find_map(|a| (a..=n).find(|&b| a * a + b * b == n).map(|b| (a, b)));
            assert_eq!(
                is_sum_of_two_squares(n).map(|w| (w.a, w.b)),
                brute,
                "n = {n}"
            );
        }
    }

    #[test]
    fn bruck_ryser_examples() {
        assert_eq!(bruck_ryser(6).unwrap(), BruckRyser::RuledOut);
        assert_eq!(bruck_ryser(10).unwrap(), BruckRyser::Inconclusive);
        assert_eq!(bruck_ryser(12).unwrap(), BruckRyser::Inconclusive);
        let ruled: Vec<u64> = (2..=33)
            .filter(|&d| bruck_ryser(d).unwrap() == BruckRyser::RuledOut)
            .collect();
        assert_eq!(ruled, vec![6, 14, 21, 22, 30, 33]);
    }

    #[test]
    fn existence_status() {
        assert_eq!(
            plane_existence_status(9).unwrap().status,
            PlaneStatus::ExistsPrimePower
        );
        assert_eq!(
            plane_existence_status(10).unwrap().status,
            PlaneStatus::RuledOutByComputation
        );
        assert_eq!(
            plane_existence_status(12).unwrap().status,
            PlaneStatus::Open
        );
        assert_eq!(
            plane_existence_status(6).unwrap().status,
            PlaneStatus::RuledOutBruckRyser
        );
        assert!(plane_existence_status(1).is_err());
    }

    #[test]
    fn existence_status_is_consistent_with_its_parts() {
        for d in 2..200 {
            let v = plane_existence_status(d).unwrap();
            let pp = classify_order(d).unwrap().is_some();
            let br = bruck_ryser(d).unwrap() == BruckRyser::RuledOut;
            match v.status {
                PlaneStatus::ExistsPrimePower => assert!(pp),
                PlaneStatus::RuledOutBruckRyser => assert!(!pp && br),
                PlaneStatus::RuledOutByComputation => assert!(!pp && !br && d == 10),
                PlaneStatus::Open => assert!(!pp && !br && d != 10),
            }
        }
    }
}
