#include "incalg/involutions.hpp"

#include <algorithm>

#include "involution_space.hpp"

namespace incalg {

namespace {

void require_no_fixed_component(const PosetMap& lambda)
{
    if (!component_involution(lambda).j3.empty())
        throw Error(Errc::precondition_violated, "lambda maps some component onto itself");
}

IncidenceFunction diagonal_by_component(const Poset& p, const std::vector<Scalar>& per_component)
{
    std::vector<Scalar> values;
    for (int x = 0; x < p.size(); ++x)
        values.push_back(per_component[p.component_of(x)]);
    return IncidenceFunction::diagonal(p, values);
}

} // namespace

IncidenceFunction rho_lambda(const PosetMap& lambda, const IncidenceFunction& f)
{
    if (!lambda.is_involution())
        throw Error(Errc::not_an_involution, "map is not a poset involution: " + lambda.to_string());
    return induced(lambda, f);
}

InvolutionDescriptor::InvolutionDescriptor(PosetMap lambda, const Unit& u)
    : lambda_(std::move(lambda)), u_(u)
{
    if (!lambda_.is_involution())
        throw Error(Errc::not_an_involution, "map is not a poset involution: " + lambda_.to_string());
    if (!(u.poset() == lambda_.poset()))
        throw Error(Errc::poset_mismatch, "unit and involution live on different posets");
    IncidenceFunction product = rho_lambda(lambda_, u.function()) * invert(u.function());
    if (!center_test(product))
        throw Error(Errc::not_an_involution,
                    "rho_lambda(u) u^-1 is not central: " + product.to_string());
    u_ = Unit(canonical_mod_center(u.function()));
}

InvolutionDescriptor InvolutionDescriptor::standard(const PosetMap& lambda, Field field)
{
    return InvolutionDescriptor(lambda, Unit::one(lambda.poset(), field));
}

AlgebraMap InvolutionDescriptor::as_map() const
{
    return AlgebraMap(poset(), field(), u_, std::nullopt, lambda_);
}

IncidenceFunction InvolutionDescriptor::operator()(const IncidenceFunction& f) const
{
    return conjugate(u_, rho_lambda(lambda_, f));
}

std::string InvolutionDescriptor::to_string() const
{
    return "lambda=" + lambda_.to_string() + " u=" + u_.function().to_string();
}

CentralUnitCertificate central_certificate(const InvolutionDescriptor& rho)
{
    const Poset& p = rho.poset();
    IncidenceFunction v = rho_lambda(rho.lambda(), rho.u().function()) * invert(rho.u().function());
    if (!center_test(v))
        throw Error(Errc::internal_inconsistency, "rho_lambda(u) u^-1 is not central");
    std::vector<Scalar> k;
    for (int j = 0; j < p.component_count(); ++j) {
        int a = p.component_anchor(j);
        k.push_back(v(a, a));
    }
    auto ci = component_involution(rho.lambda());
    for (int j = 0; j < p.component_count(); ++j)
        if (!(k[j] * k[ci.lambda_bar[j]]).is_one())
            throw Error(Errc::internal_inconsistency, "k_j k_lambda(j) != 1 for component " + std::to_string(j));
    return {std::move(v), std::move(k)};
}

std::vector<InvolutionDescriptor> enumerate_involutions_over(const PosetMap& lambda, Field field,
                                                             std::uint64_t bound)
{
    detail::InvolutionSpace space(lambda, field, bound);
    std::vector<InvolutionDescriptor> out;
    out.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        out.push_back(space.descriptor(i));
    return out;
}

std::vector<int> default_first_block(const PosetMap& lambda)
{
    auto ci = component_involution(lambda);
    std::vector<int> block;
    for (int j = 0; j < static_cast<int>(ci.lambda_bar.size()); ++j)
        if (j < ci.lambda_bar[j])
            block.push_back(j);
    return block;
}

Unit solve_norm_equation(const PosetMap& lambda, const Unit& u1)
{
    require_no_fixed_component(lambda);
    const IncidenceFunction& f = u1.function();
    if (!(rho_lambda(lambda, f) == f))
        throw Error(Errc::precondition_violated, "u1 is not fixed by rho_lambda");
    const Poset& p = lambda.poset();
    auto block = default_first_block(lambda);
    IncidenceFunction v1 = delta(p, u1.field());
    for (int k = 0; k < p.pair_count(); ++k) {
        int j = p.component_of(p.pair_at(k).first);
        if (std::binary_search(block.begin(), block.end(), j))
            v1.set_entry(k, f.entry(k));
    }
    if (!(v1 * rho_lambda(lambda, v1) == f))
        throw Error(Errc::internal_inconsistency, "block solution does not satisfy v1 rho_lambda(v1) = u1");
    return Unit(std::move(v1));
}

Unit build_w(const InvolutionDescriptor& rho, std::optional<std::vector<int>> first_block)
{
    const PosetMap& lambda = rho.lambda();
    require_no_fixed_component(lambda);
    const Poset& p = rho.poset();
    auto ci = component_involution(lambda);
    std::vector<int> block = first_block ? *first_block : default_first_block(lambda);
    std::vector<int> hits(p.component_count(), 0);
    for (int j : block) {
        if (j < 0 || j >= p.component_count())
            throw Error(Errc::precondition_violated, "component index out of range");
        ++hits[j];
        ++hits[ci.lambda_bar[j]];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        throw Error(Errc::precondition_violated, "first block must hold one component of each lambda-orbit");

    auto cert = central_certificate(rho);
    std::vector<Scalar> values(p.component_count(), Scalar::one(rho.field()));
    for (int j : block)
        values[j] = cert.k[j];
    IncidenceFunction w = diagonal_by_component(p, values);
    if (!(rho_lambda(lambda, w) * cert.v == w))
        throw Error(Errc::internal_inconsistency, "rho_lambda(w) v != w");
    IncidenceFunction wu = w * rho.u().function();
    if (!(rho_lambda(lambda, wu) == wu))
        throw Error(Errc::internal_inconsistency, "w u is not fixed by rho_lambda");
    return Unit(std::move(w));
}

NormalizationWitness normalize_to_standard(const InvolutionDescriptor& rho)
{
    auto cert = central_certificate(rho);
    Unit w = build_w(rho);
    Unit u1 = w * rho.u();
    Unit v1 = solve_norm_equation(rho.lambda(), u1);
    Unit conjugator = v1.inverse();
    return {std::move(cert), std::move(w), std::move(u1), std::move(v1), std::move(conjugator)};
}

bool replay(const NormalizationWitness& witness, const InvolutionDescriptor& rho)
{
    const Poset& p = rho.poset();
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, y] = p.pair_at(k);
        auto e = IncidenceFunction::basis(p, rho.field(), x, y);
        if (!(conjugate(witness.conjugator, rho(e)) == rho_lambda(rho.lambda(), conjugate(witness.conjugator, e))))
            return false;
    }
    return true;
}

InvolutionDescriptor restrict_involution(const InvolutionDescriptor& rho, std::span<const int> components)
{
    SubPoset sub = rho.poset().restrict_to_components(components);
    PosetMap lambda = rho.lambda().restrict_to(sub);
    return InvolutionDescriptor(std::move(lambda), Unit(restrict(rho.u().function(), sub)));
}

PosetMap induced_poset_involution(const AlgebraMap& rho)
{
    const Poset& p = rho.poset();
    std::vector<int> images;
    for (int x = 0; x < p.size(); ++x) {
        auto image = rho(IncidenceFunction::basis(p, rho.field(), x, x));
        int found = -1;
        for (int y = 0; y < p.size(); ++y) {
            auto s = image(y, y);
            if (s.is_zero())
                continue;
            if (found >= 0 || !s.is_one())
                throw Error(Errc::internal_inconsistency, "image of a diagonal idempotent is not e_y plus strict terms");
            found = y;
        }
        if (found < 0)
            throw Error(Errc::internal_inconsistency, "image of a diagonal idempotent has zero diagonal");
        images.push_back(found);
    }
    return PosetMap(p, std::move(images),
                    rho.orientation() == Orientation::anti_automorphism ? MapKind::anti_automorphism
                                                                        : MapKind::automorphism);
}

} // namespace incalg
