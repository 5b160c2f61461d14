//! K-theory presentations of `BD_2n`, their audits against the
//! representation ring, truncated filtration quotients and cyclic K-rings.

mod cyclic;
mod multipoly;
mod presentation;
mod truncation;

pub use cyclic::{cyclic_reduce, restriction_image, sigma_sum_minus_two, CyclicKRingElt};
pub use multipoly::{MultiPoly, RingElement};
pub use presentation::{
    build_presentation, canonical_generator, g_poly_audit, generator_image, lift_relation_character,
    lift_relation_defect, verify_presentation, CaseTag, PresentationAudit, Relation, RelationAudit,
    RingPresentation,
};
pub use truncation::{
    defect_in_truncation, filtration_coordinates, truncated_quotient, FiltrationCoordinates,
    TruncationLevel, MONOMIAL_LIMIT,
};
