//! Exact number theory and finite-field arithmetic.

mod field;
mod number;

pub use field::{
    build_field, build_field_with_cap, primitive_element, Field, FieldElement, FieldSpec,
    FieldTables, DEFAULT_FIELD_CAP, TABLE_CAP,
};
pub use number::{
    bruck_ryser, classify_order, gaussian_binomial, is_prime, is_sum_of_two_squares,
    plane_existence_status, BruckRyser, PlaneExistenceVerdict, PlaneStatus,
    PrimePowerDecomposition, TwoSquareWitness, COMPUTER_PROOF_EXCLUSIONS,
};
