//! `{"d": int, "bases": [[[re, im], ...], ...]}` where each basis is a list
//! of columns and each column a list of `[re, im]` pairs. Columns are
//! phase-canonicalized on write.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, MubSet};

#[derive(Serialize, Deserialize)]
struct RawMubSet {
    d: usize,
    bases: Vec<Vec<Vec<[f64; 2]>>>,
}

impl Serialize for MubSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let bases = self
            .bases
            .iter()
            .map(|b| {
                let canon = b.canonical_phase();
                canon
                    .matrix()
                    .column_iter()
                    .map(|col| col.iter().map(|z| [z.re, z.im]).collect())
                    .collect()
            })
            .collect();
        RawMubSet {
            d: self.dimension,
            bases,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MubSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawMubSet::deserialize(deserializer)?;
        let bases = raw
            .bases
            .into_iter()
            .map(|cols| {
                Basis::from_columns(
                    cols.into_iter()
                        .map(|col| {
                            col.into_iter()
                                .map(|[re, im]| Complex64::new(re, im))
                                .collect()
                        })
                        .collect(),
                )
            })
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MubSet::new(raw.d, bases).map_err(serde::de::Error::custom)
    }
}
