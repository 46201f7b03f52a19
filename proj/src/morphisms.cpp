#include "incalg/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "residue_kernel.hpp"

namespace incalg {

namespace {

bool check_multiplicative(const IncidenceFunction& sigma)
{
    const Poset& p = sigma.poset();
    for (const auto& s : sigma.entries())
        if (s.is_zero())
            return false;
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, z] = p.pair_at(k);
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && p.leq(y, z) && !(sigma(x, y) * sigma(y, z) == sigma(x, z)))
                return false;
    }
    return true;
}

// Tree covers of a BFS spanning forest of the (undirected) Hasse diagram,
// rooted at the component anchors.
std::vector<char> hasse_forest(const Poset& p)
{
    const auto& covers = p.covers();
    std::vector<char> in_tree(covers.size(), 0);
    std::vector<char> seen(p.size(), 0);
    for (int j = 0; j < p.component_count(); ++j) {
        std::vector<int> queue{p.component_anchor(j)};
        seen[queue.front()] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (std::size_t c = 0; c < covers.size(); ++c) {
                auto [a, b] = covers[c];
                int other = a == x ? b : (b == x ? a : -1);
                if (other < 0 || seen[other])
                    continue;
                seen[other] = 1;
                in_tree[c] = 1;
                queue.push_back(other);
            }
        }
    }
    return in_tree;
}

// σ = σ0 · τ_h with σ0 equal to 1 on the tree covers of hasse_forest.
std::pair<IncidenceFunction, std::vector<Scalar>> gauge_fix(const MultiplicativeElement& sigma)
{
    const Poset& p = sigma.poset();
    const Field& k = sigma.field();
    const auto& covers = p.covers();
    auto in_tree = hasse_forest(p);
    std::vector<std::optional<Scalar>> h(p.size());
    for (int j = 0; j < p.component_count(); ++j)
        h[p.component_anchor(j)] = Scalar::one(k);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < covers.size(); ++c) {
            if (!in_tree[c])
                continue;
            auto [x, y] = covers[c];
            if (h[x] && !h[y]) {
                h[y] = *h[x] / sigma(x, y);
                progress = true;
            } else if (h[y] && !h[x]) {
                h[x] = sigma(x, y) * *h[y];
                progress = true;
            }
        }
    }
    std::vector<Scalar> hv;
    for (auto& v : h)
        hv.push_back(*v);
    IncidenceFunction sigma0 = sigma.function();
    for (int i = 0; i < p.pair_count(); ++i) {
        auto [x, y] = p.pair_at(i);
        sigma0.set_entry(i, sigma(x, y) * hv[y] / hv[x]);
    }
    return {std::move(sigma0), std::move(hv)};
}

void require_same_poset(const Poset& a, const Poset& b)
{
    if (!(a == b))
        throw Error(Errc::poset_mismatch, "maps or functions on different posets");
}

} // namespace

MultiplicativeElement::MultiplicativeElement(IncidenceFunction sigma) : sigma_(std::move(sigma))
{
    if (!check_multiplicative(sigma_))
        throw Error(Errc::not_multiplicative, "not multiplicative: " + sigma_.to_string());
}

MultiplicativeElement MultiplicativeElement::one(const Poset& poset, Field field)
{
    IncidenceFunction f(poset, field);
    for (int k = 0; k < poset.pair_count(); ++k)
        f.set_entry(k, Scalar::one(field));
    return MultiplicativeElement(std::move(f));
}

std::optional<MultiplicativeElement> MultiplicativeElement::from_covers(const Poset& poset,
                                                                        std::span<const Scalar> cover_values)
{
    const auto& covers = poset.covers();
    if (cover_values.size() != covers.size())
        throw Error(Errc::precondition_violated, "one value per covering pair is required");
    if (covers.empty())
        return std::nullopt;
    const Field field = cover_values.front().field();
    IncidenceFunction f(poset, field);
    for (int x = 0; x < poset.size(); ++x)
        f.set(x, x, Scalar::one(field));
    std::vector<int> order(poset.pair_count());
    std::iota(order.begin(), order.end(), 0);
    auto length = [&](int k) {
        auto [x, y] = poset.pair_at(k);
        return interval(poset, x, y).size();
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return length(a) < length(b); });
    for (int k : order) {
        auto [x, y] = poset.pair_at(k);
        if (x == y)
            continue;
        for (std::size_t c = 0; c < covers.size(); ++c) {
            if (covers[c].first != x || !poset.leq(covers[c].second, y))
                continue;
            f.set_entry(k, cover_values[c] * f(covers[c].second, y));
            break;
        }
    }
    if (!check_multiplicative(f))
        return std::nullopt;
    return MultiplicativeElement(std::move(f));
}

MultiplicativeElement make_fractional(const Poset& poset, std::span<const Scalar> h)
{
    if (h.size() != static_cast<std::size_t>(poset.size()) || h.empty())
        throw Error(Errc::precondition_violated, "h needs one value per element");
    for (std::size_t x = 0; x < h.size(); ++x)
        if (h[x].is_zero())
            throw Error(Errc::zero_value, "h vanishes at '" + poset.label(static_cast<int>(x)) + "'");
    IncidenceFunction f(poset, h.front().field());
    for (int k = 0; k < poset.pair_count(); ++k) {
        auto [x, y] = poset.pair_at(k);
        f.set_entry(k, h[x] / h[y]);
    }
    return MultiplicativeElement(std::move(f));
}

FractionalityResult is_fractional(const MultiplicativeElement& sigma)
{
    const Poset& p = sigma.poset();
    const Field& k = sigma.field();
    const int n = p.size();
    std::vector<std::optional<Scalar>> h(n);
    std::vector<int> parent(n, -1);
    for (int j = 0; j < p.component_count(); ++j) {
        int root = p.component_anchor(j);
        h[root] = Scalar::one(k);
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y = 0; y < n; ++y) {
                if (h[y] || !p.comparable(x, y))
                    continue;
                h[y] = p.leq(x, y) ? *h[x] / sigma(x, y) : sigma(y, x) * *h[x];
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }

    FractionalityResult result;
    for (int i = 0; i < p.pair_count(); ++i) {
        auto [x, y] = p.pair_at(i);
        if (sigma(x, y) == *h[x] / *h[y])
            continue;
        result.violated_pair = {x, y};
        result.cycle_value = sigma(x, y) * *h[y] / *h[x];
        // Tree path x -> ... -> y; the pair (x,y) closes it.
        std::vector<int> up_x{x}, up_y{y};
        while (parent[up_x.back()] >= 0)
            up_x.push_back(parent[up_x.back()]);
        while (parent[up_y.back()] >= 0)
            up_y.push_back(parent[up_y.back()]);
        while (up_x.size() > 1 && up_y.size() > 1 && up_x[up_x.size() - 2] == up_y[up_y.size() - 2]) {
            up_x.pop_back();
            up_y.pop_back();
        }
        result.cycle = up_x;
        for (auto it = up_y.rbegin() + 1; it != up_y.rend(); ++it)
            result.cycle.push_back(*it);
        return result;
    }
    result.fractional = true;
    std::vector<Scalar> hv;
    for (auto& v : h)
        hv.push_back(*v);
    result.h = std::move(hv);
    return result;
}

InnerResult mult_is_inner(const MultiplicativeElement& sigma)
{
    auto frac = is_fractional(sigma);
    if (!frac.fractional)
        return {};
    return {true, Unit(IncidenceFunction::diagonal(sigma.poset(), *frac.h))};
}

InnerResult mult_is_inner_exhaustive(const MultiplicativeElement& sigma, std::uint64_t bound)
{
    detail::ResidueAlgebra alg(sigma.poset(), sigma.field());
    if (alg.units_mod_center_count() > bound)
        throw Error(Errc::bound_exceeded, "conjugator search needs " +
                                              std::to_string(alg.units_mod_center_count()) +
                                              " candidates; bound is " + std::to_string(bound));
    const int dim = alg.dim();
    auto s = alg.from(sigma.function());
    std::vector<detail::Residues> basis(dim, detail::Residues(dim, 0));
    for (int k = 0; k < dim; ++k)
        basis[k][k] = 1;
    detail::Residues u = alg.first_unit(), left, right;
    do {
        bool ok = true;
        for (int k = 0; k < dim && ok; ++k) {
            // u e_k = σ_k e_k u
            alg.multiply(u, basis[k], left);
            alg.multiply(basis[k], u, right);
            for (int i = 0; i < dim && ok; ++i)
                ok = left[i] == std::uint64_t{s[k]} * right[i] % alg.modulus();
        }
        if (ok)
            return {true, Unit(alg.to(u))};
    } while (alg.next_unit(u));
    return {};
}

std::optional<MultiplicativeElement> find_non_fractional(const Poset& poset, Field field, std::uint64_t bound)
{
    for (int j = 0; j < poset.component_count(); ++j) {
        int one_component[] = {j};
        SubPoset sub = poset.restrict_to_components(one_component);
        const auto& covers = sub.poset.covers();
        auto in_tree = hasse_forest(sub.poset);
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < covers.size(); ++c)
            if (!in_tree[c])
                free.push_back(c);
        if (free.empty())
            continue;
        if (!field.is_prime_field()) {
            if (!all_comparable_elements(sub.poset).empty())
                continue;
            throw Error(Errc::bound_exceeded,
                        "cannot decide Mult ⊆ Inn over Q for a component with cycles and no all-comparable element");
        }
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free.size(); ++i) {
            count *= field.modulus() - 1;
            if (count > bound)
                throw Error(Errc::bound_exceeded, "multiplicative search exceeds the bound");
        }
        std::vector<std::uint32_t> digits(free.size(), 1);
        while (true) {
            std::vector<Scalar> values(covers.size(), Scalar::one(field));
            bool trivial = true;
            for (std::size_t i = 0; i < free.size(); ++i) {
                values[free[i]] = Scalar(field, std::int64_t{digits[i]});
                trivial = trivial && digits[i] == 1;
            }
            if (!trivial) {
                auto sigma = MultiplicativeElement::from_covers(sub.poset, values);
                if (sigma && !is_fractional(*sigma).fractional) {
                    IncidenceFunction lifted = MultiplicativeElement::one(poset, field).function();
                    for (int k = 0; k < sub.poset.pair_count(); ++k) {
                        auto [x, y] = sub.poset.pair_at(k);
                        lifted.set(sub.embedding[x], sub.embedding[y], sigma->function().entry(k));
                    }
                    return MultiplicativeElement(std::move(lifted));
                }
            }
            std::size_t d = free.size();
            while (d > 0 && digits[d - 1] + 1 == field.modulus())
                digits[--d] = 1;
            if (d == 0)
                break;
            ++digits[d - 1];
        }
    }
    return std::nullopt;
}

std::vector<MultiplicativeElement> enumerate_multiplicative(const Poset& poset, Field field, std::uint64_t bound)
{
    if (!field.is_prime_field())
        throw Error(Errc::invalid_field, "enumeration needs a finite field");
    const auto& covers = poset.covers();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        count *= field.modulus() - 1;
        if (count > bound)
            throw Error(Errc::bound_exceeded, "multiplicative enumeration exceeds the bound");
    }
    std::vector<MultiplicativeElement> out;
    if (covers.empty()) {
        out.push_back(MultiplicativeElement::one(poset, field));
        return out;
    }
    std::vector<std::uint32_t> digits(covers.size(), 1);
    while (true) {
        std::vector<Scalar> values;
        for (auto d : digits)
            values.emplace_back(field, std::int64_t{d});
        if (auto sigma = MultiplicativeElement::from_covers(poset, values))
            out.push_back(std::move(*sigma));
        std::size_t d = digits.size();
        while (d > 0 && digits[d - 1] + 1 == field.modulus())
            digits[--d] = 1;
        if (d == 0)
            break;
        ++digits[d - 1];
    }
    return out;
}

bool inner_equal(const Unit& u, const Unit& v)
{
    return center_test(u.function() * invert(v.function()));
}

IncidenceFunction conjugate(const Unit& u, const IncidenceFunction& f)
{
    return u.function() * f * invert(u.function());
}

IncidenceFunction scale(const MultiplicativeElement& sigma, const IncidenceFunction& f)
{
    require_same_algebra(sigma.function(), f);
    IncidenceFunction r = f;
    for (int k = 0; k < f.poset().pair_count(); ++k)
        r.set_entry(k, sigma.function().entry(k) * f.entry(k));
    return r;
}

IncidenceFunction induced(const PosetMap& phi, const IncidenceFunction& f)
{
    require_same_poset(phi.poset(), f.poset());
    const Poset& p = f.poset();
    auto inv = phi.inverse();
    IncidenceFunction r(p, f.field());
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, y] = p.pair_at(k);
        r.set_entry(k, phi.kind() == MapKind::automorphism ? f(inv(x), inv(y)) : f(inv(y), inv(x)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// AlgebraMap

AlgebraMap::AlgebraMap(Poset poset, Field field, std::optional<Unit> u, std::optional<MultiplicativeElement> sigma,
                       std::optional<PosetMap> phi)
    : poset_(std::move(poset)), field_(field), u_(std::move(u)), sigma_(std::move(sigma)), phi_(std::move(phi))
{
    if (u_)
        require_same_algebra(u_->function(), IncidenceFunction(poset_, field_));
    if (sigma_)
        require_same_algebra(sigma_->function(), IncidenceFunction(poset_, field_));
    if (phi_)
        require_same_poset(phi_->poset(), poset_);
}

AlgebraMap AlgebraMap::identity(const Poset& poset, Field field)
{
    return AlgebraMap(poset, field, std::nullopt, std::nullopt, std::nullopt);
}

AlgebraMap AlgebraMap::inner(const Unit& u)
{
    return AlgebraMap(u.poset(), u.field(), u, std::nullopt, std::nullopt);
}

AlgebraMap AlgebraMap::multiplicative(const MultiplicativeElement& sigma)
{
    return AlgebraMap(sigma.poset(), sigma.field(), std::nullopt, sigma, std::nullopt);
}

AlgebraMap AlgebraMap::induced_by(const PosetMap& phi, Field field)
{
    return AlgebraMap(phi.poset(), field, std::nullopt, std::nullopt, phi);
}

Orientation AlgebraMap::orientation() const
{
    return phi_ && phi_->kind() == MapKind::anti_automorphism ? Orientation::anti_automorphism
                                                               : Orientation::automorphism;
}

IncidenceFunction AlgebraMap::operator()(const IncidenceFunction& f) const
{
    require_same_algebra(f, IncidenceFunction(poset_, field_));
    IncidenceFunction r = phi_ ? induced(*phi_, f) : f;
    if (sigma_)
        r = scale(*sigma_, r);
    if (u_)
        r = conjugate(*u_, r);
    return r;
}

std::string AlgebraMap::to_string() const
{
    std::string out;
    auto add = [&](const std::string& part) {
        if (!out.empty())
            out += " ∘ ";
        out += part;
    };
    if (u_)
        add("Psi[" + u_->function().to_string() + "]");
    if (sigma_)
        add("M[" + sigma_->function().to_string() + "]");
    if (phi_)
        add(std::string(phi_->kind() == MapKind::automorphism ? "hat" : "rho") + "[" + phi_->to_string() + "]");
    return out.empty() ? "id" : out;
}

AlgebraMap compose_canonical(std::span<const AlgebraMap> maps)
{
    if (maps.empty())
        throw Error(Errc::precondition_violated, "nothing to compose");
    const Poset& p = maps.front().poset();
    const Field k = maps.front().field();
    for (const auto& m : maps) {
        require_same_poset(m.poset(), p);
        if (!(m.field() == k))
            throw Error(Errc::field_mismatch, "maps over different fields");
    }

    IncidenceFunction u = delta(p, k);
    MultiplicativeElement sigma = MultiplicativeElement::one(p, k);
    PosetMap phi = PosetMap::identity(p);

    // (Ψ_u M_σ Φ) ∘ (Ψ_v M_τ Φ') = Ψ_{u M_σ(v')} M_{σ Φ(τ)} Φ Φ', where
    // v' = φ̂(v) when Φ = φ̂ and v' = ρ_φ(v)^{-1} when Φ = ρ_φ.
    for (const auto& m : maps) {
        IncidenceFunction v = m.unit() ? m.unit()->function() : delta(p, k);
        IncidenceFunction tau = m.sigma() ? m.sigma()->function() : MultiplicativeElement::one(p, k).function();
        PosetMap next_phi = m.poset_map() ? *m.poset_map() : PosetMap::identity(p);

        IncidenceFunction moved = induced(phi, v);
        if (phi.kind() == MapKind::anti_automorphism)
            moved = invert(moved);
        u = u * scale(sigma, moved);
        IncidenceFunction tau_moved = induced(phi, tau);
        IncidenceFunction product = sigma.function();
        for (int i = 0; i < p.pair_count(); ++i)
            product.set_entry(i, sigma.function().entry(i) * tau_moved.entry(i));
        sigma = MultiplicativeElement(std::move(product));
        phi = compose(phi, next_phi);
    }

    auto [sigma0, h] = gauge_fix(sigma);
    u = canonical_mod_center(u * IncidenceFunction::diagonal(p, h));

    std::optional<Unit> unit;
    if (!(u == delta(p, k)))
        unit = Unit(std::move(u));
    std::optional<MultiplicativeElement> sig;
    if (!(sigma0 == MultiplicativeElement::one(p, k).function()))
        sig = MultiplicativeElement(std::move(sigma0));
    std::optional<PosetMap> map;
    if (!(phi.kind() == MapKind::automorphism && phi.is_identity()))
        map = std::move(phi);
    return AlgebraMap(p, k, std::move(unit), std::move(sig), std::move(map));
}

std::vector<IncidenceFunction> tabulate(const AlgebraMap& map)
{
    std::vector<IncidenceFunction> out;
    const Poset& p = map.poset();
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, y] = p.pair_at(k);
        out.push_back(map(IncidenceFunction::basis(p, map.field(), x, y)));
    }
    return out;
}

bool maps_equal(const AlgebraMap& a, const AlgebraMap& b)
{
    return a.poset() == b.poset() && a.field() == b.field() && tabulate(a) == tabulate(b);
}

} // namespace incalg
