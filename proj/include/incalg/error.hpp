#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace incalg {

enum class Errc {
    division_by_zero,
    field_mismatch,
    zero_input,
    invalid_field,
    infinite_square_class_group,
    unknown_label,
    duplicate_label,
    cycle_detected,
    size_bound_exceeded,
    bound_exceeded,
    invalid_map,
    not_an_involution,
    not_invertible,
    poset_mismatch,
    empty_component_set,
    not_stable,
    kind_mismatch,
    zero_value,
    not_multiplicative,
    precondition_violated,
    lambda_mismatch,
    hypothesis_gate_failed,
    internal_inconsistency,
    syntax_error,
    semantic_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace incalg
