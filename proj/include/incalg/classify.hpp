#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "incalg/involutions.hpp"

namespace incalg {

enum class WitnessKind { inner, general };

/// For kind inner: Ψ_w ∘ ρ = η ∘ Ψ_w with w = t^{-1}, where u = c·t·v·ρ_λ(t).
/// For kind general the same holds with η replaced by α̂ ∘ η ∘ α̂^{-1}, so
/// that φ = α̂^{-1} ∘ Ψ_w satisfies φ ∘ ρ = η ∘ φ.
struct EquivalenceWitness {
    WitnessKind kind = WitnessKind::inner;
    Unit t;
    IncidenceFunction c;
    std::optional<PosetMap> alpha;
};

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;
    /// general_equivalent only: agreement with the answer obtained on the
    /// components fixed by λ, when that route applies.
    std::optional<bool> restriction_agrees;
};

/// The equivalence φ = [α̂^{-1} ∘] Ψ_{t^{-1}} as an algebra map.
AlgebraMap witness_map(const EquivalenceWitness& witness, const Poset& poset, Field field);

/// Checks φ ∘ ρ = η ∘ φ on every basis element.
bool replay(const EquivalenceWitness& witness, const InvolutionDescriptor& rho, const InvolutionDescriptor& eta);

/// Exhaustive search for t (units modulo center, odometer order) with
/// u = c·t·v·ρ_λ(t) for a central unit c; c is read off as the quotient.
/// Errc::lambda_mismatch, Errc::bound_exceeded, Errc::invalid_field.
EquivalenceResult inner_equivalent_oracle(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta,
                                          std::uint64_t bound = default_search_bound);

/// Whether every multiplicative element is fractional (Mult ⊆ Inn).
struct GateResult {
    bool passed = false;
    std::optional<MultiplicativeElement> counterexample;
};

GateResult hypothesis_gate(const Poset& poset, Field field, std::uint64_t bound = default_search_bound);

/// Inner equivalence through the components fixed by λ: true when there are
/// none, otherwise the oracle on each such component algebra.
/// Errc::hypothesis_gate_failed when the gate fails; Errc::lambda_mismatch.
bool inner_equivalent_fast(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta,
                           std::uint64_t bound = default_search_bound);

/// inner_equivalent_fast for many pairs over one λ: the class partition of
/// every fixed component algebra is computed once.
class InnerClassifier {
public:
    InnerClassifier(const PosetMap& lambda, Field field, std::uint64_t bound = default_search_bound,
                    bool enforce_gate = true);
    ~InnerClassifier();
    InnerClassifier(InnerClassifier&&) noexcept;

    bool equivalent(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta) const;
    /// Per fixed component, the class index of the restriction of ρ.
    std::vector<int> signature(const InvolutionDescriptor& rho) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// 2^{|J3'|} · ∏ |S_K|^{|P3^j|-1} over the fixed components with fixed points.
/// Errc::infinite_square_class_group over the rationals when an exponent is
/// positive.
std::uint64_t count_classes_formula(const PosetMap& lambda, Field field);

enum class CountMethod { formula, brute_force, both_agree };

std::string method_name(CountMethod m);

struct ClassReport {
    explicit ClassReport(PosetMap l) : lambda(std::move(l)) {}

    PosetMap lambda;
    std::uint64_t count = 0;
    std::vector<InvolutionDescriptor> representatives;
    CountMethod method = CountMethod::brute_force;
    /// Number of involutions inducing λ.
    std::uint64_t involution_count = 0;
    /// Class index of each enumerated involution, in enumeration order.
    std::vector<int> class_of;
    /// Brute-force class count of each fixed component algebra.
    std::map<int, std::uint64_t> component_counts;
    std::uint64_t component_product = 1;
    bool product_matches = false;
};

/// Partition of enumerate_involutions_over(λ) into inner-equivalence classes,
/// plus the per-fixed-component counts and their product.
ClassReport count_classes_bruteforce(const PosetMap& lambda, Field field,
                                     std::uint64_t bound = default_search_bound);

/// Equivalence under all algebra automorphisms, searched as poset
/// automorphisms α composed with the inner oracle against α̂ ∘ η ∘ α̂^{-1}.
EquivalenceResult general_equivalent(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta,
                                     std::uint64_t bound = default_search_bound);

struct BatteryOptions {
    std::uint64_t bound = default_search_bound;
    std::uint64_t seed = 1;
    int random_samples = 3;
};

enum class CheckStatus { pass, fail, refused };

std::string status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::uint64_t instances = 0;
    /// Counterexample description on failure, reason when refused.
    std::string detail;
};

struct BatteryReport {
    std::string poset;
    Field field = Field::rationals();
    bool gate_passed = false;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Runs every structural check on one poset over a finite field.
BatteryReport verify_battery(const Poset& poset, Field field, const BatteryOptions& options = {});

} // namespace incalg
