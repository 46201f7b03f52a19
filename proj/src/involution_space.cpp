#include "involution_space.hpp"

#include <string>

namespace incalg::detail {

InvolutionSpace::InvolutionSpace(const PosetMap& lambda, Field field, std::uint64_t bound)
    : lambda_(lambda), alg_(lambda.poset(), field)
{
    if (!lambda.is_involution())
        throw Error(Errc::not_an_involution, "map is not a poset involution: " + lambda.to_string());
    const std::uint64_t total = alg_.units_mod_center_count();
    if (total > bound)
        throw Error(Errc::bound_exceeded, "there are " + std::to_string(total) +
                                              " units modulo center; bound is " + std::to_string(bound));
    rho_perm_ = alg_.anti_permutation(lambda);
    by_code_.assign(total, -1);
    Residues u = alg_.first_unit(), image;
    std::vector<std::uint32_t> scales;
    do {
        ResidueAlgebra::permute(u, rho_perm_, image);
        if (alg_.central_multiple(image, u, scales)) {
            by_code_[alg_.unit_code(u)] = static_cast<int>(units_.size());
            units_.push_back(u);
        }
    } while (alg_.next_unit(u));
}

InvolutionDescriptor InvolutionSpace::descriptor(std::size_t i) const
{
    return InvolutionDescriptor(lambda_, Unit(alg_.to(units_[i])));
}

int InvolutionSpace::index_of(const Residues& canonical) const
{
    return by_code_[alg_.unit_code(canonical)];
}

std::vector<int> InvolutionSpace::partition() const
{
    std::vector<int> cls(units_.size(), -1);
    std::size_t assigned = 0;
    int next = 0;
    Residues t, rt, tu, g;
    for (std::size_t i = 0; i < units_.size(); ++i) {
        if (cls[i] >= 0)
            continue;
        const int id = next++;
        t = alg_.first_unit();
        do {
            ResidueAlgebra::permute(t, rho_perm_, rt);
            alg_.multiply(t, units_[i], tu);
            alg_.multiply(tu, rt, g);
            alg_.canonicalize(g);
            int j = index_of(g);
            if (j < 0 || (cls[j] >= 0 && cls[j] != id))
                throw Error(Errc::internal_inconsistency, "conjugation left the set of involutions");
            if (cls[j] < 0) {
                cls[j] = id;
                ++assigned;
            }
        } while (assigned < units_.size() && alg_.next_unit(t));
    }
    return cls;
}

std::optional<ConjugatorMatch> find_conjugator(const ResidueAlgebra& alg, const std::vector<int>& rho_perm,
                                               const Residues& u, const Residues& v)
{
    Residues t = alg.first_unit(), rt, tv, g;
    std::vector<std::uint32_t> c;
    do {
        ResidueAlgebra::permute(t, rho_perm, rt);
        alg.multiply(t, v, tv);
        alg.multiply(tv, rt, g);
        if (alg.central_multiple(u, g, c))
            return ConjugatorMatch{t, c};
    } while (alg.next_unit(t));
    return std::nullopt;
}

std::optional<ConjugatorMatch> InvolutionSpace::search(const Residues& u, const Residues& v) const
{
    return find_conjugator(alg_, rho_perm_, u, v);
}

} // namespace incalg::detail
