#pragma once

#include <stdexcept>
#include <string>

namespace orbisect {

enum class ErrorCode {
    cap_exceeded,
    not_a_bijection,
    not_a_homomorphism,
    not_finite_order,
    rounding_residual_exceeded,
    negative_multiplicity,
    odd_element_has_no_age,
    not_complex_linear,
    not_adjoint_invariant,
    empty_lagrangian,
    dihedral_mismatch,
    not_a_functor,
    component_out_of_place,
    not_well_defined,
    not_injective,
    not_surjective,
    missing_block,
    parse_error,
    schema_error,
    inconsistent_blocks,
    internal,
};

const char* error_code_name(ErrorCode code);

/// Shared exception type; `code()` selects the CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace orbisect
