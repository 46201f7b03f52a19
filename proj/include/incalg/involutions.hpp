#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incalg/morphisms.hpp"

namespace incalg {

/// ρ_λ(f)(x,y) = f(λ(y), λ(x)) for a poset involution λ.
IncidenceFunction rho_lambda(const PosetMap& lambda, const IncidenceFunction& f);

/// The algebra involution ρ = Ψ_u ∘ ρ_λ. The unit is kept canonical modulo
/// central units (each component's anchor diagonal entry is 1).
class InvolutionDescriptor {
public:
    /// Errc::not_an_involution when λ is not a poset involution or when
    /// ρ_λ(u)·u^{-1} is not central; Errc::poset_mismatch.
    InvolutionDescriptor(PosetMap lambda, const Unit& u);

    /// ρ_λ itself (u = δ).
    static InvolutionDescriptor standard(const PosetMap& lambda, Field field);

    const PosetMap& lambda() const { return lambda_; }
    const Unit& u() const { return u_; }
    const Poset& poset() const { return lambda_.poset(); }
    const Field& field() const { return u_.field(); }

    AlgebraMap as_map() const;
    IncidenceFunction operator()(const IncidenceFunction& f) const;

    /// "lambda=<map> u=<function>".
    std::string to_string() const;

    friend bool operator==(const InvolutionDescriptor& a, const InvolutionDescriptor& b)
    {
        return a.lambda_ == b.lambda_ && a.u_ == b.u_;
    }

private:
    PosetMap lambda_;
    Unit u_;
};

inline InvolutionDescriptor make_involution(const PosetMap& lambda, const Unit& u)
{
    return InvolutionDescriptor(lambda, u);
}

/// ρ_λ(u) = v·u with v central; k_j is the value of v on component j.
struct CentralUnitCertificate {
    IncidenceFunction v;
    std::vector<Scalar> k;
};

/// Computes v = ρ_λ(u)u^{-1} and checks that v is central, that it is
/// constant k_j on each component, and that k_j·k_{λ̄(j)} = 1. A failed check
/// raises Errc::internal_inconsistency.
CentralUnitCertificate central_certificate(const InvolutionDescriptor& rho);

/// Every involution inducing λ: one descriptor per unit modulo central units
/// that passes the involution condition, in odometer order of the canonical
/// unit (see detail::ResidueAlgebra). Finite fields only;
/// Errc::bound_exceeded when there are more than `bound` units modulo center.
std::vector<InvolutionDescriptor> enumerate_involutions_over(const PosetMap& lambda, Field field,
                                                             std::uint64_t bound = default_search_bound);

/// L1: the smallest component index of each λ̄-orbit, in increasing order.
std::vector<int> default_first_block(const PosetMap& lambda);

/// v1 with v1·ρ_λ(v1) = u1: u1 on the components of the first block and δ on
/// their images. Requires that λ fixes no component and that ρ_λ(u1) = u1
/// (Errc::precondition_violated otherwise).
Unit solve_norm_equation(const PosetMap& lambda, const Unit& u1);

/// The diagonal unit w equal to k_j on X_j for j in the first block and 1
/// elsewhere, where k is the central certificate of ρ. Asserts ρ_λ(w)·v = w
/// and ρ_λ(wu) = wu. Requires that λ fixes no component and that
/// `first_block` holds one component of each λ̄-orbit.
Unit build_w(const InvolutionDescriptor& rho, std::optional<std::vector<int>> first_block = std::nullopt);

/// The explicit equivalence of ρ with ρ_λ when λ fixes no component:
/// u1 = w·u, v1 solves the norm equation for u1, and the conjugator v1^{-1}
/// satisfies Ψ_{v1^{-1}} ∘ ρ = ρ_λ ∘ Ψ_{v1^{-1}}.
struct NormalizationWitness {
    CentralUnitCertificate certificate;
    Unit w;
    Unit u1;
    Unit v1;
    Unit conjugator;
};

NormalizationWitness normalize_to_standard(const InvolutionDescriptor& rho);

/// Checks Ψ_{conjugator} ∘ ρ = ρ_λ ∘ Ψ_{conjugator} on every basis element.
bool replay(const NormalizationWitness& witness, const InvolutionDescriptor& rho);

/// ρ_L on X_L for a set L of component indices; Errc::not_stable unless
/// λ(X_L) = X_L.
InvolutionDescriptor restrict_involution(const InvolutionDescriptor& rho, std::span<const int> components);

/// The poset involution read off from ρ(e_x), whose diagonal is e_{λ(x)}.
PosetMap induced_poset_involution(const AlgebraMap& rho);

} // namespace incalg
