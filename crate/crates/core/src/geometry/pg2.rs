use super::incidence::IncidenceStructure;
use crate::algebra::{Field, FieldSpec};
use crate::error::{Error, Result};

/// Largest field order [`build_pg2`] accepts by default.
pub const DEFAULT_PG2_CAP: u64 = 32;

/// Nonzero triples over `0..q` whose first nonzero coordinate is 1, in
/// lexicographic order.
fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// The Desarguesian plane PG(2, q): points and lines are the 1- and
/// 2-dimensional subspaces of `GF(q)³`, incidence is containment.
///
/// Points are labelled by normalized coordinates `(x0,x1,x2)` and lines by
/// the normalized coefficients `[a,b,c]` of `a x0 + b x1 + c x2 = 0`, both in
/// lexicographic order of field elements.
pub fn build_pg2(spec: &FieldSpec) -> Result<IncidenceStructure> {
    build_pg2_with_cap(spec, DEFAULT_PG2_CAP)
}

pub fn build_pg2_with_cap(spec: &FieldSpec, cap: u64) -> Result<IncidenceStructure> {
    let q = spec.order();
    if q > cap {
        return Err(Error::Capacity(format!(
            "PG(2,{q}) exceeds the plane cap {cap}"
        )));
    }
    let field: Field = spec.clone().into();
    let t = field.tables()?;
    let reps = normalized_triples(q as usize);
    let incidence = reps
        .iter()
        .map(|x| {
            reps.iter()
                .map(|l| {
                    let s = t.add(
                        t.add(t.mul(l[0], x[0]), t.mul(l[1], x[1])),
                        t.mul(l[2], x[2]),
                    );
                    s == 0
                })
                .collect()
        })
        .collect();
    let name = |i: usize| field.from_index(i as u64).to_string();
    let labels = |open: char, close: char| -> Vec<String> {
        reps.iter()
            .map(|r| format!("{open}{},{},{}{close}", name(r[0]), name(r[1]), name(r[2])))
            .collect()
    };
    IncidenceStructure::new(reps.len(), reps.len(), incidence)?
        .with_labels(labels('(', ')'), labels('[', ']'))
}
