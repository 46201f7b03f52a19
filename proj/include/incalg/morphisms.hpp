#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

/// Default cap on the number of candidates any exhaustive search may visit.
inline constexpr std::uint64_t default_search_bound = 1'000'000;

/// σ with σ(x,y) != 0 for x <= y and σ(x,y)σ(y,z) = σ(x,z) on chains x <= y <= z.
class MultiplicativeElement {
public:
    /// Errc::not_multiplicative when either condition fails.
    explicit MultiplicativeElement(IncidenceFunction sigma);

    static MultiplicativeElement one(const Poset& poset, Field field);

    /// Extends values given on the covering pairs (in Poset::covers() order)
    /// along chains; empty when the values are not consistent.
    static std::optional<MultiplicativeElement> from_covers(const Poset& poset, std::span<const Scalar> cover_values);

    const IncidenceFunction& function() const { return sigma_; }
    const Poset& poset() const { return sigma_.poset(); }
    const Field& field() const { return sigma_.field(); }
    Scalar operator()(int x, int y) const { return sigma_(x, y); }

    friend bool operator==(const MultiplicativeElement& a, const MultiplicativeElement& b)
    {
        return a.sigma_ == b.sigma_;
    }

private:
    IncidenceFunction sigma_;
};

/// τ_h(x,y) = h(x)/h(y). Errc::zero_value if h vanishes somewhere.
MultiplicativeElement make_fractional(const Poset& poset, std::span<const Scalar> h);

struct FractionalityResult {
    bool fractional = false;
    /// σ = τ_h when fractional.
    std::optional<std::vector<Scalar>> h;
    /// Otherwise: a pair where the propagated h disagrees with σ, the closed
    /// walk through the spanning tree that it completes, and the product of σ
    /// around that walk (never 1).
    std::optional<std::pair<int, int>> violated_pair;
    std::vector<int> cycle;
    std::optional<Scalar> cycle_value;
};

/// Spanning-forest propagation over the comparability graph.
FractionalityResult is_fractional(const MultiplicativeElement& sigma);

struct InnerResult {
    bool inner = false;
    /// Ψ_u = M_σ when inner.
    std::optional<Unit> conjugator;
};

/// M_σ is inner iff σ is fractional; the conjugator is diag(h).
InnerResult mult_is_inner(const MultiplicativeElement& sigma);

/// Exhaustive search over units modulo central units for u with Ψ_u = M_σ
/// (finite fields only). Errc::bound_exceeded past the bound.
InnerResult mult_is_inner_exhaustive(const MultiplicativeElement& sigma,
                                     std::uint64_t bound = default_search_bound);

/// A multiplicative element that is not fractional, or nothing when every
/// multiplicative element of FI(X,K) is fractional (equivalently Mult ⊆ Inn).
/// Gauge-fixes σ to 1 on a spanning forest of the Hasse diagram and
/// enumerates the remaining cover values. Over the rationals only posets whose
/// Hasse diagram is a forest or whose components each have an all-comparable
/// element are decided; others raise Errc::bound_exceeded.
std::optional<MultiplicativeElement> find_non_fractional(const Poset& poset, Field field,
                                                         std::uint64_t bound = default_search_bound);

/// Every multiplicative element (finite fields only).
std::vector<MultiplicativeElement> enumerate_multiplicative(const Poset& poset, Field field,
                                                            std::uint64_t bound = default_search_bound);

/// Ψ_u and Ψ_v agree iff u v^{-1} is central.
bool inner_equal(const Unit& u, const Unit& v);

/// Ψ_u(f) = u f u^{-1}.
IncidenceFunction conjugate(const Unit& u, const IncidenceFunction& f);
/// M_σ(f)(x,y) = σ(x,y) f(x,y).
IncidenceFunction scale(const MultiplicativeElement& sigma, const IncidenceFunction& f);
/// φ̂(f)(x,y) = f(φ^{-1}x, φ^{-1}y) for an automorphism, and
/// ρ_φ(f)(x,y) = f(φ^{-1}y, φ^{-1}x) for an anti-automorphism.
IncidenceFunction induced(const PosetMap& phi, const IncidenceFunction& f);

enum class Orientation { automorphism, anti_automorphism };

/// Ψ_u ∘ M_σ ∘ φ̂ (or ∘ ρ_φ). Absent parts are identity factors; an absent
/// poset map requires the automorphism orientation.
class AlgebraMap {
public:
    AlgebraMap(Poset poset, Field field, std::optional<Unit> u, std::optional<MultiplicativeElement> sigma,
               std::optional<PosetMap> phi);

    static AlgebraMap identity(const Poset& poset, Field field);
    static AlgebraMap inner(const Unit& u);
    static AlgebraMap multiplicative(const MultiplicativeElement& sigma);
    static AlgebraMap induced_by(const PosetMap& phi, Field field);

    const Poset& poset() const { return poset_; }
    const Field& field() const { return field_; }
    const std::optional<Unit>& unit() const { return u_; }
    const std::optional<MultiplicativeElement>& sigma() const { return sigma_; }
    const std::optional<PosetMap>& poset_map() const { return phi_; }
    Orientation orientation() const;

    /// Evaluates right to left: the poset part, then M_σ, then Ψ_u.
    IncidenceFunction operator()(const IncidenceFunction& f) const;

    std::string to_string() const;

private:
    Poset poset_;
    Field field_;
    std::optional<Unit> u_;
    std::optional<MultiplicativeElement> sigma_;
    std::optional<PosetMap> phi_;
};

inline IncidenceFunction apply(const AlgebraMap& map, const IncidenceFunction& f) { return map(f); }

/// maps[0] ∘ maps[1] ∘ ... as one canonical triple. The unit is stored modulo
/// central units, σ is stored as the representative of its class modulo
/// fractional elements that is 1 on a fixed spanning forest of the Hasse
/// diagram (the fractional part moves into the unit), and identity factors
/// are dropped.
AlgebraMap compose_canonical(std::span<const AlgebraMap> maps);

/// Images of the e_xy basis, in basis order.
std::vector<IncidenceFunction> tabulate(const AlgebraMap& map);

/// Equality as linear maps (on the basis).
bool maps_equal(const AlgebraMap& a, const AlgebraMap& b);

} // namespace incalg
