#pragma once

// Raw-residue arithmetic in FI(X, F_p), used by the exhaustive searches.
// Entries follow the poset's basis order, exactly as in IncidenceFunction.

#include <cstdint>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/posets.hpp"

namespace incalg::detail {

using Residues = std::vector<std::uint32_t>;

class ResidueAlgebra {
public:
    /// Errc::invalid_field unless field is a prime field.
    ResidueAlgebra(Poset poset, Field field);

    const Poset& poset() const { return poset_; }
    const Field& field() const { return field_; }
    std::uint32_t modulus() const { return p_; }
    int dim() const { return dim_; }

    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

    void multiply(const Residues& f, const Residues& g, Residues& out) const;

    /// out[k] = f[perm[k]].
    static void permute(const Residues& f, const std::vector<int>& perm, Residues& out);
    /// Pair permutation realising ρ_φ for an anti-automorphism φ.
    std::vector<int> anti_permutation(const PosetMap& phi) const;
    /// Pair permutation realising φ̂ for an automorphism φ.
    std::vector<int> auto_permutation(const PosetMap& phi) const;

    /// Scales every component so its anchor diagonal entry is 1.
    void canonicalize(Residues& f) const;
    /// Per-component factors c_j with canonical(f) = c_j * f on component j.
    std::vector<std::uint32_t> canonical_scales(const Residues& f) const;

    /// True iff f = c * g for a central c; the per-component constants are
    /// written to scales when they exist.
    bool central_multiple(const Residues& f, const Residues& g, std::vector<std::uint32_t>& scales) const;

    Residues from(const IncidenceFunction& f) const;
    IncidenceFunction to(const Residues& f) const;
    IncidenceFunction central(const std::vector<std::uint32_t>& per_component) const;

    // Units modulo central units, enumerated as an odometer over the
    // non-anchor diagonal entries (values 1..p-1) followed by the strict
    // entries (values 0..p-1); the first digit is the most significant.

    /// Saturates at UINT64_MAX.
    std::uint64_t units_mod_center_count() const;
    Residues first_unit() const;
    /// Advances to the next canonical unit; false after the last one.
    bool next_unit(Residues& u) const;
    /// Rank of a canonical unit in odometer order.
    std::uint64_t unit_code(const Residues& canonical) const;

    int component_of_pair(int k) const { return pair_component_[k]; }

private:
    struct Term {
        int left;
        int right;
    };

    Poset poset_;
    Field field_;
    std::uint32_t p_;
    int dim_;
    std::vector<std::uint32_t> inverse_;
    std::vector<int> term_offset_;
    std::vector<Term> terms_;
    std::vector<int> pair_component_;
    std::vector<int> anchor_pair_;
    // Odometer digits: pair index and whether it is a diagonal entry.
    std::vector<int> digit_pair_;
    std::vector<char> digit_is_diagonal_;
};

} // namespace incalg::detail
