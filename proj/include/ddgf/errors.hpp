#pragma once

#include <stdexcept>
#include <string>

namespace ddgf {

// Every verification failure carries a machine-checkable code plus a witness
// message (first violated constraint, with indices).
enum class errc {
  // field
  not_prime,
  degree_zero,
  too_large,
  zero_inverse,
  even_characteristic,
  not_divisor,
  zero_element,
  not_prime_power,
  // matrix
  not_square,
  dimension_mismatch,
  bad_format,
  // designs
  bad_entries,
  not_weighing,
  bad_residue,
  not_normalized,
  not_symmetric,
  verify_failed,
  not_hadamard,
  not_regular,
  diagonal_not_constant,
  not_vkl_graph,
  not_conference_graph,
  not_conference,
  design_check_failed,
  // graphs
  empty_graph,
  complete_graph,
  edgeless_graph,
  not_strongly_regular,
  not_equitable,
  not_connected,
  not_distance_regular,
  not_antipodal,
  not_involution,
  not_automorphism,
  bad_partition,
  // ddg
  unequal_classes,
  not_ddg,
  bad_block_form,
  partner_not_weighing,
  diagonal_has_two,
  not_alpha_beta_form,
  odd_beta,
  not_perfect_square,
  not_congruent_mod2,
  bad_diagonal,
  type_mismatch,
  alpha_beta_failed,
  bad_conference_order,
  diagonal_violation,
  parameter_mismatch,
  input_constraint_violated,
  validation_failed,
  // symplectic
  even_q,
  srg_check_failed,
  spread_check_failed,
  bad_parameters,
  correspondence_failed,
  congruence_failed,
  not_orthogonal_signing,
  // cli
  usage_error,
  io_error,
};

const char* errc_name(errc c);

class check_error : public std::runtime_error {
 public:
  check_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw check_error(code, what);
}

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ddgf
