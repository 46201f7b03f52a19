#include "incalg/posets.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace incalg {

struct Poset::Impl {
    int n = 0;
    std::vector<std::string> labels;
    std::map<std::string, int, std::less<>> index;
    std::vector<char> leq;
    std::vector<std::pair<int, int>> covers;
    std::vector<int> linear_extension;
    std::vector<int> position;
    std::vector<int> pair_index;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> component_of;
    std::vector<std::vector<int>> components;

    bool le(int x, int y) const { return leq[static_cast<std::size_t>(x) * n + y] != 0; }
};

namespace {

std::string letter_label(int i)
{
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i = i / 26 - 1;
    } while (i >= 0);
    return s;
}

std::vector<std::string> letter_labels(int n, int offset = 0)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(letter_label(i + offset));
    return out;
}

} // namespace

Poset Poset::from_indices(std::vector<std::string> labels, std::span<const std::pair<int, int>> generators)
{
    auto impl = std::make_shared<Impl>();
    const int n = static_cast<int>(labels.size());
    impl->n = n;
    for (int i = 0; i < n; ++i) {
        if (!impl->index.emplace(labels[i], i).second)
            throw Error(Errc::duplicate_label, "duplicate label '" + labels[i] + "'");
    }
    impl->labels = std::move(labels);
    impl->leq.assign(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int x, int y) -> char& { return impl->leq[static_cast<std::size_t>(x) * n + y]; };
    for (int i = 0; i < n; ++i)
        at(i, i) = 1;
    for (auto [x, y] : generators) {
        if (x < 0 || y < 0 || x >= n || y >= n)
            throw Error(Errc::unknown_label, "generator refers to an element outside the poset");
        if (x == y)
            throw Error(Errc::cycle_detected, "reflexive generator on '" + impl->labels[x] + "'");
        at(x, y) = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (at(i, k))
                for (int j = 0; j < n; ++j)
                    if (at(k, j))
                        at(i, j) = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) && at(j, i))
                throw Error(Errc::cycle_detected, "cycle through '" + impl->labels[i] + "' and '" +
                                                      impl->labels[j] + "'");

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !at(x, y))
                continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (z != x && z != y && at(x, z) && at(z, y))
                    cover = false;
            if (cover)
                impl->covers.emplace_back(x, y);
        }

    // Kahn's algorithm, always taking the smallest available index.
    std::vector<int> indegree(n, 0);
    for (auto [x, y] : impl->covers)
        ++indegree[y];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    impl->position.assign(n, 0);
    while (!ready.empty()) {
        int x = ready.top();
        ready.pop();
        impl->position[x] = static_cast<int>(impl->linear_extension.size());
        impl->linear_extension.push_back(x);
        for (auto [a, b] : impl->covers)
            if (a == x && --indegree[b] == 0)
                ready.push(b);
    }

    impl->pair_index.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x : impl->linear_extension) {
        impl->pair_index[static_cast<std::size_t>(x) * n + x] = static_cast<int>(impl->pairs.size());
        impl->pairs.emplace_back(x, x);
    }
    for (int x : impl->linear_extension)
        for (int y : impl->linear_extension)
            if (x != y && at(x, y)) {
                impl->pair_index[static_cast<std::size_t>(x) * n + y] = static_cast<int>(impl->pairs.size());
                impl->pairs.emplace_back(x, y);
            }

    impl->component_of.assign(n, -1);
    for (int s = 0; s < n; ++s) {
        if (impl->component_of[s] != -1)
            continue;
        int j = static_cast<int>(impl->components.size());
        std::vector<int> members;
        std::vector<int> stack{s};
        impl->component_of[s] = j;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y = 0; y < n; ++y)
                if (impl->component_of[y] == -1 && (at(x, y) || at(y, x))) {
                    impl->component_of[y] = j;
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        impl->components.push_back(std::move(members));
    }
    return Poset(std::move(impl));
}

Poset Poset::build(std::vector<std::string> labels,
                   std::span<const std::pair<std::string, std::string>> generators)
{
    std::map<std::string, int, std::less<>> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (!index.emplace(labels[i], i).second)
            throw Error(Errc::duplicate_label, "duplicate label '" + labels[i] + "'");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : generators) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw Error(Errc::unknown_label, "unknown label '" + a + "'");
        if (ib == index.end())
            throw Error(Errc::unknown_label, "unknown label '" + b + "'");
        pairs.emplace_back(ia->second, ib->second);
    }
    return from_indices(std::move(labels), pairs);
}

Poset Poset::chain(int n)
{
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i + 1 < n; ++i)
        gens.emplace_back(i, i + 1);
    return from_indices(letter_labels(n), gens);
}

Poset Poset::antichain(int n)
{
    return from_indices(letter_labels(n), {});
}

Poset Poset::disjoint_union(const Poset& a, const Poset& b)
{
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<std::pair<int, int>> gens;
    for (auto c : a.covers())
        gens.push_back(c);
    for (auto [x, y] : b.covers())
        gens.emplace_back(x + a.size(), y + a.size());
    return from_indices(std::move(labels), gens);
}

int Poset::size() const { return impl_->n; }
const std::string& Poset::label(int x) const { return impl_->labels.at(x); }
const std::vector<std::string>& Poset::labels() const { return impl_->labels; }

std::optional<int> Poset::find(std::string_view label) const
{
    auto it = impl_->index.find(label);
    if (it == impl_->index.end())
        return std::nullopt;
    return it->second;
}

int Poset::index_of(std::string_view label) const
{
    auto found = find(label);
    if (!found)
        throw Error(Errc::unknown_label, "unknown label '" + std::string(label) + "'");
    return *found;
}

bool Poset::leq(int x, int y) const { return impl_->le(x, y); }
const std::vector<std::pair<int, int>>& Poset::covers() const { return impl_->covers; }

bool Poset::is_cover(int x, int y) const
{
    return std::binary_search(impl_->covers.begin(), impl_->covers.end(), std::pair{x, y});
}

const std::vector<int>& Poset::linear_extension() const { return impl_->linear_extension; }
int Poset::pair_count() const { return static_cast<int>(impl_->pairs.size()); }

int Poset::pair_index(int x, int y) const
{
    return impl_->pair_index[static_cast<std::size_t>(x) * impl_->n + y];
}

std::pair<int, int> Poset::pair_at(int k) const { return impl_->pairs.at(k); }
int Poset::component_count() const { return static_cast<int>(impl_->components.size()); }
int Poset::component_of(int x) const { return impl_->component_of.at(x); }
const std::vector<std::vector<int>>& Poset::components() const { return impl_->components; }

std::vector<int> Poset::down_set(int x) const
{
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (leq(y, x))
            out.push_back(y);
    return out;
}

std::vector<int> Poset::up_set(int x) const
{
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (leq(x, y))
            out.push_back(y);
    return out;
}

bool operator==(const Poset& a, const Poset& b)
{
    if (a.impl_ == b.impl_)
        return true;
    return a.impl_->labels == b.impl_->labels && a.impl_->leq == b.impl_->leq;
}

SubPoset Poset::restrict_to_components(std::span<const int> components) const
{
    if (components.empty())
        throw Error(Errc::empty_component_set, "restriction to an empty set of components");
    std::vector<int> comps(components.begin(), components.end());
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    for (int j : comps)
        if (j < 0 || j >= component_count())
            throw Error(Errc::precondition_violated, "component index out of range");
    std::vector<int> projection(size(), -1);
    std::vector<int> embedding;
    for (int x = 0; x < size(); ++x)
        if (std::binary_search(comps.begin(), comps.end(), component_of(x))) {
            projection[x] = static_cast<int>(embedding.size());
            embedding.push_back(x);
        }
    std::vector<std::string> labels;
    for (int x : embedding)
        labels.push_back(label(x));
    std::vector<std::pair<int, int>> gens;
    for (auto [x, y] : covers())
        if (projection[x] >= 0)
            gens.emplace_back(projection[x], projection[y]);
    return SubPoset{from_indices(std::move(labels), gens), std::move(embedding), std::move(projection),
                    std::move(comps)};
}

std::string Poset::describe() const
{
    std::ostringstream out;
    out << "elements:";
    for (const auto& l : labels())
        out << ' ' << l;
    for (auto [x, y] : covers())
        out << "\ncover: " << label(x) << ' ' << label(y);
    return out.str();
}

std::vector<int> interval(const Poset& p, int x, int y)
{
    std::vector<int> out;
    if (!p.leq(x, y))
        return out;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y))
            out.push_back(z);
    return out;
}

std::vector<int> all_comparable_elements(const Poset& p)
{
    std::vector<int> out;
    for (int x = 0; x < p.size(); ++x) {
        bool all = true;
        for (int y = 0; y < p.size() && all; ++y)
            all = p.comparable(x, y);
        if (all)
            out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// PosetMap

PosetMap::PosetMap(Poset poset, std::vector<int> images, MapKind kind)
    : poset_(std::move(poset)), images_(std::move(images)), kind_(kind)
{
    const int n = poset_.size();
    if (static_cast<int>(images_.size()) != n)
        throw Error(Errc::invalid_map, "map has the wrong number of images");
    std::vector<char> hit(n, 0);
    for (int y : images_) {
        if (y < 0 || y >= n || hit[y])
            throw Error(Errc::invalid_map, "map is not a bijection");
        hit[y] = 1;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool want = kind_ == MapKind::automorphism ? poset_.leq(images_[x], images_[y])
                                                       : poset_.leq(images_[y], images_[x]);
            if (poset_.leq(x, y) != want)
                throw Error(Errc::invalid_map,
                            std::string("map is not order-") +
                                (kind_ == MapKind::automorphism ? "preserving" : "reversing") + " at (" +
                                poset_.label(x) + "," + poset_.label(y) + ")");
        }
}

PosetMap PosetMap::identity(const Poset& poset)
{
    std::vector<int> images(poset.size());
    std::iota(images.begin(), images.end(), 0);
    return PosetMap(poset, std::move(images), MapKind::automorphism);
}

PosetMap PosetMap::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        inv[images_[x]] = static_cast<int>(x);
    return PosetMap(poset_, std::move(inv), kind_);
}

bool PosetMap::is_identity() const
{
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x))
            return false;
    return true;
}

bool PosetMap::is_involution() const
{
    if (kind_ != MapKind::anti_automorphism)
        return false;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[images_[x]] != static_cast<int>(x))
            return false;
    return true;
}

std::vector<int> PosetMap::fixed_points() const
{
    std::vector<int> out;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] == static_cast<int>(x))
            out.push_back(static_cast<int>(x));
    return out;
}

std::vector<int> PosetMap::image_of(std::span<const int> elements) const
{
    std::vector<int> out;
    for (int x : elements)
        out.push_back(images_[x]);
    std::sort(out.begin(), out.end());
    return out;
}

PosetMap PosetMap::restrict_to(const SubPoset& sub) const
{
    std::vector<int> images;
    for (int x : sub.embedding) {
        int y = sub.projection[images_[x]];
        if (y < 0)
            throw Error(Errc::not_stable, "map does not send X_L onto itself");
        images.push_back(y);
    }
    return PosetMap(sub.poset, std::move(images), kind_);
}

std::string PosetMap::to_string() const
{
    std::string out;
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (x)
            out += ' ';
        out += poset_.label(static_cast<int>(x)) + "->" + poset_.label(images_[x]);
    }
    return out;
}

bool operator==(const PosetMap& a, const PosetMap& b)
{
    return a.kind_ == b.kind_ && a.images_ == b.images_ && a.poset_ == b.poset_;
}

PosetMap compose(const PosetMap& outer, const PosetMap& inner)
{
    if (!(outer.poset() == inner.poset()))
        throw Error(Errc::poset_mismatch, "composing maps on different posets");
    std::vector<int> images(inner.images().size());
    for (std::size_t x = 0; x < images.size(); ++x)
        images[x] = outer(inner(static_cast<int>(x)));
    MapKind kind = outer.kind() == inner.kind() ? MapKind::automorphism : MapKind::anti_automorphism;
    return PosetMap(outer.poset(), std::move(images), kind);
}

std::vector<PosetMap> enumerate_maps(const Poset& p, MapKind kind, bool order_two_only, int max_size)
{
    const int n = p.size();
    if (n > max_size)
        throw Error(Errc::size_bound_exceeded, "poset has " + std::to_string(n) +
                                                   " elements; enumeration bound is " + std::to_string(max_size));
    const bool anti = kind == MapKind::anti_automorphism;
    std::vector<int> down(n), up(n);
    for (int x = 0; x < n; ++x) {
        down[x] = static_cast<int>(p.down_set(x).size());
        up[x] = static_cast<int>(p.up_set(x).size());
    }
    std::vector<std::vector<int>> candidates(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool ok = anti ? (down[y] == up[x] && up[y] == down[x]) : (down[y] == down[x] && up[y] == up[x]);
            if (ok)
                candidates[x].push_back(y);
        }

    std::vector<PosetMap> out;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> extend = [&](int x) {
        if (x == n) {
            if (order_two_only)
                for (int z = 0; z < n; ++z)
                    if (image[image[z]] != z)
                        return;
            out.emplace_back(p, image, kind);
            return;
        }
        for (int y : candidates[x]) {
            if (used[y])
                continue;
            bool consistent = true;
            for (int z = 0; z < x && consistent; ++z) {
                int w = image[z];
                if (anti)
                    consistent = p.leq(x, z) == p.leq(w, y) && p.leq(z, x) == p.leq(y, w);
                else
                    consistent = p.leq(x, z) == p.leq(y, w) && p.leq(z, x) == p.leq(w, y);
            }
            if (order_two_only && y < x && image[y] != x)
                consistent = false;
            if (!consistent)
                continue;
            image[x] = y;
            used[y] = 1;
            extend(x + 1);
            used[y] = 0;
            image[x] = -1;
        }
    };
    extend(0);
    return out;
}

// ---------------------------------------------------------------------------
// λ-decomposition

namespace {

void require_involution(const PosetMap& lambda)
{
    if (!lambda.is_involution())
        throw Error(Errc::not_an_involution, "map is not a poset involution: " + lambda.to_string());
}

// Side assignment under the constraints of a λ-decomposition; 3 marks fixed
// points, 0 undecided.
class SideSolver {
public:
    explicit SideSolver(const PosetMap& lambda) : lambda_(lambda), p_(lambda.poset()), side_(p_.size(), 0)
    {
        for (int x : lambda.fixed_points())
            side_[x] = 3;
    }

    // Propagates side s for x; false (with the state rolled back) on conflict.
    bool assign(int x, int s)
    {
        std::vector<int> trail;
        std::vector<std::pair<int, int>> queue{{x, s}};
        bool ok = true;
        while (!queue.empty() && ok) {
            auto [y, t] = queue.back();
            queue.pop_back();
            if (side_[y] == t)
                continue;
            if (side_[y] != 0) {
                ok = false;
                break;
            }
            side_[y] = t;
            trail.push_back(y);
            queue.emplace_back(lambda_(y), 3 - t);
            for (int z = 0; z < p_.size(); ++z) {
                if (z == y)
                    continue;
                if (t == 1 && p_.leq(z, y))
                    queue.emplace_back(z, 1);
                if (t == 2 && p_.leq(y, z))
                    queue.emplace_back(z, 2);
            }
        }
        if (!ok)
            for (int y : trail)
                side_[y] = 0;
        return ok;
    }

    int side(int x) const { return side_[x]; }

private:
    const PosetMap& lambda_;
    const Poset& p_;
    std::vector<int> side_;
};

} // namespace

LambdaDecomposition lambda_decomposition(const PosetMap& lambda)
{
    require_involution(lambda);
    const Poset& p = lambda.poset();
    const int n = p.size();
    SideSolver solver(lambda);
    auto inconsistent = [&](int x) {
        return Error(Errc::internal_inconsistency,
                     "lambda-decomposition propagation contradicts at '" + p.label(x) + "'");
    };

    for (int x = 0; x < n; ++x) {
        if (solver.side(x) == 3)
            continue;
        for (int f : lambda.fixed_points()) {
            if (p.less(x, f) && !solver.assign(x, 1))
                throw inconsistent(x);
            if (p.less(f, x) && !solver.assign(x, 2))
                throw inconsistent(x);
        }
    }

    std::vector<int> by_label(n);
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(), [&](int a, int b) { return p.label(a) < p.label(b); });
    for (int x : by_label) {
        if (solver.side(x) != 0)
            continue;
        if (!solver.assign(x, 1) && !solver.assign(x, 2))
            throw inconsistent(x);
    }

    LambdaDecomposition d;
    for (int x = 0; x < n; ++x) {
        switch (solver.side(x)) {
        case 1: d.x1.push_back(x); break;
        case 2: d.x2.push_back(x); break;
        case 3: d.x3.push_back(x); break;
        default: throw inconsistent(x);
        }
    }
    return d;
}

bool is_lambda_decomposition(const PosetMap& lambda, const LambdaDecomposition& d)
{
    const Poset& p = lambda.poset();
    const int n = p.size();
    std::vector<int> side(n, 0);
    for (auto [set, s] : {std::pair{&d.x1, 1}, std::pair{&d.x2, 2}, std::pair{&d.x3, 3}})
        for (int x : *set) {
            if (x < 0 || x >= n || side[x] != 0)
                return false;
            side[x] = s;
        }
    for (int x = 0; x < n; ++x) {
        if (side[x] == 0)
            return false;
        if ((side[x] == 3) != (lambda(x) == x))
            return false;
        if (side[x] == 1 && side[lambda(x)] != 2)
            return false;
        if (side[x] == 2 && side[lambda(x)] != 1)
            return false;
        for (int y = 0; y < n; ++y) {
            if (side[x] == 1 && p.leq(y, x) && side[y] != 1)
                return false;
            if (side[x] == 2 && p.leq(x, y) && side[y] != 2)
                return false;
        }
    }
    return true;
}

ComponentInvolution component_involution(const PosetMap& lambda)
{
    require_involution(lambda);
    const Poset& p = lambda.poset();
    ComponentInvolution ci;
    for (int j = 0; j < p.component_count(); ++j) {
        int target = p.component_of(lambda(p.component_anchor(j)));
        ci.lambda_bar.push_back(target);
        if (target == j)
            ci.j3.push_back(j);
    }
    auto d = lambda_decomposition(lambda);
    for (int j : ci.j3) {
        ComponentInvolution::PSets ps;
        ps.component = j;
        for (auto [from, to] : {std::pair{&d.x1, &ps.p1}, std::pair{&d.x2, &ps.p2}, std::pair{&d.x3, &ps.p3}})
            for (int x : *from)
                if (p.component_of(x) == j)
                    to->push_back(x);
        if (ps.p3.empty())
            ci.j3_prime.push_back(j);
        ci.p_sets.push_back(std::move(ps));
    }
    return ci;
}

std::optional<PosetMap> poset_involutions_conjugate(const PosetMap& lambda, const PosetMap& mu, int max_size)
{
    require_involution(lambda);
    require_involution(mu);
    if (!(lambda.poset() == mu.poset()))
        throw Error(Errc::poset_mismatch, "involutions on different posets");
    for (const auto& alpha : automorphisms(lambda.poset(), max_size))
        if (compose(alpha, lambda).images() == compose(mu, alpha).images())
            return alpha;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism classes

std::vector<Poset> posets_up_to_isomorphism(int n)
{
    if (n < 0 || n > 6)
        throw Error(Errc::size_bound_exceeded, "poset catalog supports 0..6 elements");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);

    std::set<std::uint64_t> seen;
    std::vector<Poset> out;
    const std::uint32_t total = 1u << slots.size();
    std::vector<char> rel(static_cast<std::size_t>(n) * n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::fill(rel.begin(), rel.end(), 0);
        for (int i = 0; i < n; ++i)
            rel[i * n + i] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1)
                rel[slots[s].first * n + slots[s].second] = 1;
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j)
                if (rel[i * n + j])
                    for (int k = 0; k < n; ++k)
                        if (rel[j * n + k] && !rel[i * n + k]) {
                            transitive = false;
                            break;
                        }
        if (!transitive)
            continue;

        // Canonical code: minimum over relabellings that respect the
        // (down-set, up-set) size signature.
        std::vector<std::pair<int, int>> sig(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                sig[x].first += rel[y * n + x];
                sig[x].second += rel[x * n + y];
            }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<std::pair<int, int>> blocks;
        for (int i = 0; i < n;) {
            int j = i;
            while (j < n && sig[order[j]] == sig[order[i]])
                ++j;
            blocks.emplace_back(i, j);
            i = j;
        }
        std::uint64_t best = ~std::uint64_t{0};
        std::function<void(std::size_t)> permute = [&](std::size_t b) {
            if (b == blocks.size()) {
                std::uint64_t code = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        code = code << 1 | static_cast<std::uint64_t>(rel[order[i] * n + order[j]]);
                best = std::min(best, code);
                return;
            }
            auto first = order.begin() + blocks[b].first;
            auto last = order.begin() + blocks[b].second;
            std::sort(first, last);
            do {
                permute(b + 1);
            } while (std::next_permutation(first, last));
        };
        permute(0);
        if (!seen.insert(best).second)
            continue;
        std::vector<std::pair<int, int>> gens;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1)
                gens.push_back(slots[s]);
        out.push_back(Poset::from_indices(letter_labels(n), gens));
    }
    return out;
}

} // namespace incalg
