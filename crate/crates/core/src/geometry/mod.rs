//! Finite incidence structures: projective planes over Galois fields, their
//! duals and affine parts, and the cyclic model from difference sets.

mod incidence;
mod pg2;
mod singer;
mod verify;

pub use incidence::IncidenceStructure;
pub use pg2::{build_pg2, build_pg2_with_cap, DEFAULT_PG2_CAP};
pub use singer::{
    brute_force_difference_sets, plane_from_difference_set, singer_difference_set, DifferenceSet,
};
pub use verify::{
    verify_affine_plane, verify_projective_plane, AffineCertificate, Axiom, AxiomCheck,
    AxiomFailure, PlaneCertificate, Witness,
};

use crate::error::{Error, Result};

/// Points and lines exchanged.
pub fn dualize(s: &IncidenceStructure) -> IncidenceStructure {
    s.dualize()
}

/// Deletes `line_at_infinity` and every point on it.
///
/// The input must verify as a projective plane.
pub fn affinize(s: &IncidenceStructure, line_at_infinity: usize) -> Result<IncidenceStructure> {
    if line_at_infinity >= s.line_count() {
        return Err(Error::Domain(format!(
            "line {line_at_infinity} out of range for {} lines",
            s.line_count()
        )));
    }
    if let Err(failure) = verify_projective_plane(s) {
        return Err(Error::Precondition(format!(
            "not a projective plane: {:?} fails",
            failure.axiom
        )));
    }
    let points: Vec<usize> = (0..s.point_count())
        .filter(|&p| !s.incident(p, line_at_infinity))
        .collect();
    let lines: Vec<usize> = (0..s.line_count())
        .filter(|&l| l != line_at_infinity)
        .collect();
    Ok(s.restrict(&points, &lines))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_field;

    #[test]
    fn affine_parts_of_small_planes() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            let plane = build_pg2(&build_field(p, n).unwrap()).unwrap();
            let q = plane.points_on(0).len() - 1;
            for line in 0..plane.line_count() {
                let a = affinize(&plane, line).unwrap();
                assert_eq!((a.point_count(), a.line_count()), (q * q, q * q + q));
                let cert = verify_affine_plane(&a).unwrap();
                assert_eq!(cert.order, q);
                assert_eq!(cert.parallel_classes.len(), q + 1);
            }
        }
    }

    #[test]
    fn affinize_errors() {
        let fano = build_pg2(&build_field(2, 1).unwrap()).unwrap();
        assert!(matches!(affinize(&fano, 7), Err(Error::Domain(_))));
        let mut broken = fano.clone();
        broken.flip(0, 0);
        assert!(matches!(affinize(&broken, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn affinize_keeps_labels() {
        let fano = build_pg2(&build_field(2, 1).unwrap()).unwrap();
        let a = affinize(&fano, 0).unwrap();
        assert_eq!(
            a.point_labels().unwrap(),
            &["(0,0,1)", "(0,1,1)", "(1,0,1)", "(1,1,1)"]
        );
        assert!(!a.line_labels().unwrap().contains(&"[0,0,1]".to_string()));
    }

    #[test]
    fn dual_planes_verify() {
        let plane = build_pg2(&build_field(3, 1).unwrap()).unwrap();
        let dual = dualize(&plane);
        assert_eq!(verify_projective_plane(&dual).unwrap().order, 3);
        assert_eq!(dualize(&dual), plane);
    }

    #[test]
    fn singer_planes_match_field_planes() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let spec = build_field(p, n).unwrap();
            let cyclic = plane_from_difference_set(&singer_difference_set(&spec).unwrap()).unwrap();
            let coords = build_pg2(&spec).unwrap();
            let a = verify_projective_plane(&cyclic).unwrap();
            let b = verify_projective_plane(&coords).unwrap();
            assert_eq!(
                (a.order, a.point_count, a.points_per_line),
                (b.order, b.point_count, b.points_per_line)
            );
        }
    }
}
