#pragma once

// All involutions Ψ_u ∘ ρ_λ over one λ, in raw residues, with an index from
// canonical unit codes back to the enumeration.

#include <cstdint>
#include <optional>
#include <vector>

#include "incalg/involutions.hpp"
#include "residue_kernel.hpp"

namespace incalg::detail {

struct ConjugatorMatch {
    Residues t;
    std::vector<std::uint32_t> c;
};

/// The first t (odometer order) with u = c·t·v·ρ_λ(t) for a central c, where
/// rho_perm realises ρ_λ.
std::optional<ConjugatorMatch> find_conjugator(const ResidueAlgebra& alg, const std::vector<int>& rho_perm,
                                               const Residues& u, const Residues& v);

class InvolutionSpace {
public:
    /// Errc::bound_exceeded past the bound; Errc::invalid_field for the rationals.
    InvolutionSpace(const PosetMap& lambda, Field field, std::uint64_t bound);

    const ResidueAlgebra& algebra() const { return alg_; }
    const PosetMap& lambda() const { return lambda_; }
    const std::vector<int>& rho_permutation() const { return rho_perm_; }

    std::size_t size() const { return units_.size(); }
    const Residues& unit(std::size_t i) const { return units_[i]; }
    InvolutionDescriptor descriptor(std::size_t i) const;
    /// Position of a canonical involution unit, or -1.
    int index_of(const Residues& canonical) const;

    /// Class index per enumerated involution, classes numbered in order of
    /// their first member.
    std::vector<int> partition() const;

    std::optional<ConjugatorMatch> search(const Residues& u, const Residues& v) const;

private:
    PosetMap lambda_;
    ResidueAlgebra alg_;
    std::vector<int> rho_perm_;
    std::vector<Residues> units_;
    std::vector<int> by_code_;
};

} // namespace incalg::detail
