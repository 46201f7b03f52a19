#include "incalg/error.hpp"

namespace incalg {

std::string_view errc_name(Errc code)
{
    switch (code) {
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::zero_input: return "zero-input";
    case Errc::invalid_field: return "invalid-field";
    case Errc::infinite_square_class_group: return "infinite-square-class-group";
    case Errc::unknown_label: return "unknown-label";
    case Errc::duplicate_label: return "duplicate-label";
    case Errc::cycle_detected: return "cycle-detected";
    case Errc::size_bound_exceeded: return "size-bound-exceeded";
    case Errc::bound_exceeded: return "bound-exceeded";
    case Errc::invalid_map: return "invalid-map";
    case Errc::not_an_involution: return "not-an-involution";
    case Errc::not_invertible: return "not-invertible";
    case Errc::poset_mismatch: return "mismatch";
    case Errc::empty_component_set: return "empty-L";
    case Errc::not_stable: return "L-not-lambda-stable";
    case Errc::kind_mismatch: return "kind-mismatch";
    case Errc::zero_value: return "zero-value";
    case Errc::not_multiplicative: return "not-multiplicative";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::lambda_mismatch: return "lambda-mismatch";
    case Errc::hypothesis_gate_failed: return "hypothesis-gate-failed";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::syntax_error: return "syntax-error";
    case Errc::semantic_error: return "semantic-error";
    }
    return "unknown";
}

} // namespace incalg
