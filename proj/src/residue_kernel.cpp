#include "residue_kernel.hpp"

#include <limits>

namespace incalg::detail {

ResidueAlgebra::ResidueAlgebra(Poset poset, Field field)
    : poset_(std::move(poset)), field_(field), p_(field.modulus()), dim_(poset_.pair_count())
{
    if (!field_.is_prime_field())
        throw Error(Errc::invalid_field, "exhaustive search needs a finite field, got " + field_.name());
    inverse_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a)
        inverse_[a] = Scalar(field_, std::int64_t{a}).inverse().residue();

    const int n = poset_.size();
    term_offset_.push_back(0);
    for (int k = 0; k < dim_; ++k) {
        auto [x, y] = poset_.pair_at(k);
        for (int z = 0; z < n; ++z)
            if (poset_.leq(x, z) && poset_.leq(z, y))
                terms_.push_back({poset_.pair_index(x, z), poset_.pair_index(z, y)});
        term_offset_.push_back(static_cast<int>(terms_.size()));
        pair_component_.push_back(poset_.component_of(x));
    }
    for (int j = 0; j < poset_.component_count(); ++j) {
        int a = poset_.component_anchor(j);
        anchor_pair_.push_back(poset_.pair_index(a, a));
    }
    for (int k = 0; k < dim_; ++k) {
        auto [x, y] = poset_.pair_at(k);
        bool diagonal = x == y;
        if (diagonal && poset_.component_anchor(poset_.component_of(x)) == x)
            continue;
        digit_pair_.push_back(k);
        digit_is_diagonal_.push_back(diagonal);
    }
}

void ResidueAlgebra::multiply(const Residues& f, const Residues& g, Residues& out) const
{
    out.resize(dim_);
    for (int k = 0; k < dim_; ++k) {
        std::uint64_t sum = 0;
        for (int t = term_offset_[k]; t < term_offset_[k + 1]; ++t)
            sum += std::uint64_t{f[terms_[t].left]} * g[terms_[t].right];
        out[k] = static_cast<std::uint32_t>(sum % p_);
    }
}

void ResidueAlgebra::permute(const Residues& f, const std::vector<int>& perm, Residues& out)
{
    out.resize(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k)
        out[k] = f[perm[k]];
}

std::vector<int> ResidueAlgebra::anti_permutation(const PosetMap& phi) const
{
    auto inv = phi.inverse();
    std::vector<int> perm(dim_);
    for (int k = 0; k < dim_; ++k) {
        auto [x, y] = poset_.pair_at(k);
        perm[k] = poset_.pair_index(inv(y), inv(x));
    }
    return perm;
}

std::vector<int> ResidueAlgebra::auto_permutation(const PosetMap& phi) const
{
    auto inv = phi.inverse();
    std::vector<int> perm(dim_);
    for (int k = 0; k < dim_; ++k) {
        auto [x, y] = poset_.pair_at(k);
        perm[k] = poset_.pair_index(inv(x), inv(y));
    }
    return perm;
}

std::vector<std::uint32_t> ResidueAlgebra::canonical_scales(const Residues& f) const
{
    std::vector<std::uint32_t> scales;
    for (int k : anchor_pair_)
        scales.push_back(inverse_[f[k]]);
    return scales;
}

void ResidueAlgebra::canonicalize(Residues& f) const
{
    auto scales = canonical_scales(f);
    for (int k = 0; k < dim_; ++k)
        f[k] = static_cast<std::uint32_t>(std::uint64_t{f[k]} * scales[pair_component_[k]] % p_);
}

bool ResidueAlgebra::central_multiple(const Residues& f, const Residues& g,
                                      std::vector<std::uint32_t>& scales) const
{
    scales.clear();
    for (int k : anchor_pair_) {
        if (g[k] == 0)
            return false;
        scales.push_back(static_cast<std::uint32_t>(std::uint64_t{f[k]} * inverse_[g[k]] % p_));
    }
    for (int k = 0; k < dim_; ++k)
        if (f[k] != std::uint64_t{g[k]} * scales[pair_component_[k]] % p_)
            return false;
    return true;
}

Residues ResidueAlgebra::from(const IncidenceFunction& f) const
{
    if (!(f.field() == field_) || !(f.poset() == poset_))
        throw Error(Errc::poset_mismatch, "incidence function does not belong to this algebra");
    Residues r(dim_);
    for (int k = 0; k < dim_; ++k)
        r[k] = f.entry(k).residue();
    return r;
}

IncidenceFunction ResidueAlgebra::to(const Residues& f) const
{
    std::vector<Scalar> entries;
    entries.reserve(dim_);
    for (auto v : f)
        entries.emplace_back(field_, std::int64_t{v});
    return IncidenceFunction::from_entries(poset_, std::move(entries));
}

IncidenceFunction ResidueAlgebra::central(const std::vector<std::uint32_t>& per_component) const
{
    Residues r(dim_, 0);
    for (int k = 0; k < poset_.diagonal_count(); ++k)
        r[k] = per_component[pair_component_[k]];
    return to(r);
}

std::uint64_t ResidueAlgebra::units_mod_center_count() const
{
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 1;
    for (std::size_t d = 0; d < digit_pair_.size(); ++d) {
        std::uint64_t radix = digit_is_diagonal_[d] ? p_ - 1 : p_;
        if (count > cap / radix)
            return cap;
        count *= radix;
    }
    return count;
}

Residues ResidueAlgebra::first_unit() const
{
    Residues u(dim_, 0);
    for (int k = 0; k < poset_.diagonal_count(); ++k)
        u[k] = 1;
    return u;
}

bool ResidueAlgebra::next_unit(Residues& u) const
{
    for (int d = static_cast<int>(digit_pair_.size()) - 1; d >= 0; --d) {
        auto& v = u[digit_pair_[d]];
        if (digit_is_diagonal_[d]) {
            if (v + 1 < p_) {
                ++v;
                return true;
            }
            v = 1;
        } else {
            if (v + 1 < p_) {
                ++v;
                return true;
            }
            v = 0;
        }
    }
    return false;
}

std::uint64_t ResidueAlgebra::unit_code(const Residues& canonical) const
{
    std::uint64_t code = 0;
    for (std::size_t d = 0; d < digit_pair_.size(); ++d) {
        auto v = canonical[digit_pair_[d]];
        if (digit_is_diagonal_[d])
            code = code * (p_ - 1) + (v - 1);
        else
            code = code * p_ + v;
    }
    return code;
}

} // namespace incalg::detail
