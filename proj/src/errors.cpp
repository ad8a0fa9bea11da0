#include "ddgf/errors.hpp"

namespace ddgf {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::degree_zero: return "DegreeZero";
    case errc::too_large: return "TooLarge";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::not_divisor: return "NotDivisor";
    case errc::zero_element: return "ZeroElement";
    case errc::not_prime_power: return "NotPrimePower";
    case errc::not_square: return "NotSquare";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::bad_format: return "BadFormat";
    case errc::bad_entries: return "BadEntries";
    case errc::not_weighing: return "NotWeighing";
    case errc::bad_residue: return "BadResidue";
    case errc::not_normalized: return "NotNormalized";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::verify_failed: return "VerifyFailed";
    case errc::not_hadamard: return "NotHadamard";
    case errc::not_regular: return "NotRegular";
    case errc::diagonal_not_constant: return "DiagonalNotConstant";
    case errc::not_vkl_graph: return "NotVklGraph";
    case errc::not_conference_graph: return "NotConferenceGraph";
    case errc::not_conference: return "NotConference";
    case errc::design_check_failed: return "DesignCheckFailed";
    case errc::empty_graph: return "EmptyGraph";
    case errc::complete_graph: return "CompleteGraph";
    case errc::edgeless_graph: return "EdgelessGraph";
    case errc::not_strongly_regular: return "NotStronglyRegular";
    case errc::not_equitable: return "NotEquitable";
    case errc::not_connected: return "NotConnected";
    case errc::not_distance_regular: return "NotDistanceRegular";
    case errc::not_antipodal: return "NotAntipodal";
    case errc::not_involution: return "NotInvolution";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::bad_partition: return "BadPartition";
    case errc::unequal_classes: return "UnequalClasses";
    case errc::not_ddg: return "NotDDG";
    case errc::bad_block_form: return "BadBlockForm";
    case errc::partner_not_weighing: return "PartnerNotWeighing";
    case errc::diagonal_has_two: return "DiagonalHasTwo";
    case errc::not_alpha_beta_form: return "NotAlphaBetaForm";
    case errc::odd_beta: return "OddBeta";
    case errc::not_perfect_square: return "NotPerfectSquare";
    case errc::not_congruent_mod2: return "NotCongruentMod2";
    case errc::bad_diagonal: return "BadDiagonal";
    case errc::type_mismatch: return "TypeMismatch";
    case errc::alpha_beta_failed: return "AlphaBetaFailed";
    case errc::bad_conference_order: return "BadConferenceOrder";
    case errc::diagonal_violation: return "DiagonalViolation";
    case errc::parameter_mismatch: return "ParameterMismatch";
    case errc::input_constraint_violated: return "InputConstraintViolated";
    case errc::validation_failed: return "ValidationFailed";
    case errc::even_q: return "EvenQ";
    case errc::srg_check_failed: return "SrgCheckFailed";
    case errc::spread_check_failed: return "SpreadCheckFailed";
    case errc::bad_parameters: return "BadParameters";
    case errc::correspondence_failed: return "CorrespondenceFailed";
    case errc::congruence_failed: return "CongruenceFailed";
    case errc::not_orthogonal_signing: return "NotOrthogonalSigning";
    case errc::usage_error: return "UsageError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ddgf
