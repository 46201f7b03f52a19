#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace incalg;
using namespace helpers;

namespace {

Errc code_of(auto&& thunk)
{
    try {
        thunk();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an incalg::Error");
    return Errc::internal_inconsistency;
}

std::vector<std::string> sorted_labels(const Poset& p, std::vector<int> xs)
{
    auto out = labels_of(p, xs);
    std::sort(out.begin(), out.end());
    return out;
}

using Labels = std::vector<std::string>;

} // namespace

TEST_SUITE("posets")
{
    TEST_CASE("build computes the closure")
    {
        auto p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        CHECK(p.pair_count() == 6);
        CHECK(p.leq(p.index_of("a"), p.index_of("c")));
        CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
        CHECK(p.covers().size() == 2);
        CHECK_FALSE(p.is_cover(p.index_of("a"), p.index_of("c")));
    }

    TEST_CASE("build errors")
    {
        CHECK(code_of([] { make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == Errc::cycle_detected);
        CHECK(code_of([] { make_poset({"a", "a"}, {}); }) == Errc::duplicate_label);
        CHECK(code_of([] { make_poset({"a", "b"}, {{"a", "z"}}); }) == Errc::unknown_label);
    }

    TEST_CASE("components")
    {
        auto p = make_poset({"a", "b", "c"}, {{"a", "b"}});
        CHECK(p.component_count() == 2);
        CHECK(sorted_labels(p, p.components()[0]) == Labels{"a", "b"});
        CHECK(sorted_labels(p, p.components()[1]) == Labels{"c"});
        CHECK(Poset::chain(4).component_count() == 1);
        CHECK(Poset::antichain(3).component_count() == 3);
    }

    TEST_CASE("intervals")
    {
        auto c3 = Poset::chain(3);
        CHECK(sorted_labels(c3, interval(c3, 0, 2)) == Labels{"a", "b", "c"});
        CHECK(interval(c3, 2, 0).empty());
        auto d = diamond();
        CHECK(sorted_labels(d, interval(d, d.index_of("a"), d.index_of("d"))) == Labels{"a", "b", "c", "d"});
    }

    TEST_CASE("all-comparable elements")
    {
        auto c3 = Poset::chain(3);
        CHECK(sorted_labels(c3, all_comparable_elements(c3)) == Labels{"a", "b", "c"});
        auto d = diamond();
        CHECK(sorted_labels(d, all_comparable_elements(d)) == Labels{"a", "d"});
        CHECK(all_comparable_elements(Poset::antichain(2)).empty());
    }

    TEST_CASE("map enumeration examples")
    {
        auto c3 = Poset::chain(3);
        auto invs = poset_involutions(c3);
        REQUIRE(invs.size() == 1);
        CHECK(invs[0].to_string() == "a->c b->b c->a");
        CHECK(poset_involutions(Poset::antichain(2)).size() == 2);
        auto autos = automorphisms(c3);
        REQUIRE(autos.size() == 1);
        CHECK(autos[0].is_identity());
        CHECK(code_of([] { automorphisms(Poset::antichain(11)); }) == Errc::size_bound_exceeded);
    }

    TEST_CASE("invalid maps are rejected")
    {
        auto c2 = Poset::chain(2);
        CHECK(code_of([&] { PosetMap(c2, {0, 0}, MapKind::automorphism); }) == Errc::invalid_map);
        CHECK(code_of([&] { PosetMap(c2, {1, 0}, MapKind::automorphism); }) == Errc::invalid_map);
        CHECK(code_of([&] { PosetMap(c2, {0, 1}, MapKind::anti_automorphism); }) == Errc::invalid_map);
    }

    TEST_CASE("automorphism enumeration matches trying every permutation")
    {
        for (int n = 1; n <= 5; ++n)
            for (const auto& p : posets_up_to_isomorphism(n)) {
                auto autos = automorphisms(p);
                auto brute = oracle::automorphisms_brute(p);
                REQUIRE(autos.size() == brute.size());
                std::set<std::vector<int>> listed;
                for (const auto& a : autos)
                    listed.insert(a.images());
                for (const auto& b : brute)
                    CHECK(listed.count(b));
                // Group closure.
                for (const auto& a : autos) {
                    CHECK(listed.count(a.inverse().images()));
                    for (const auto& b : autos)
                        CHECK(listed.count(compose(a, b).images()));
                }
            }
    }

    TEST_CASE("component involution examples")
    {
        auto cc = two_chains();
        auto swap = map_of(cc, "a->d b->c c->b d->a");
        CHECK(component_involution(swap).j3.empty());

        auto c3 = Poset::chain(3);
        auto ci = component_involution(map_of(c3, "a->c b->b c->a"));
        CHECK(ci.j3 == std::vector<int>{0});
        CHECK(ci.j3_prime.empty());
        REQUIRE(ci.p_sets.size() == 1);
        CHECK(labels_of(c3, ci.p_sets[0].p3) == Labels{"b"});

        auto c2 = Poset::chain(2);
        auto ci2 = component_involution(map_of(c2, "a->b b->a"));
        CHECK(ci2.j3 == std::vector<int>{0});
        CHECK(ci2.j3_prime == std::vector<int>{0});
        CHECK(ci2.p_sets[0].p3.empty());

        CHECK(code_of([&] { component_involution(PosetMap::identity(c2)); }) == Errc::not_an_involution);
    }

    TEST_CASE("lambda decomposition examples")
    {
        auto c3 = Poset::chain(3);
        auto d = lambda_decomposition(map_of(c3, "a->c b->b c->a"));
        CHECK(labels_of(c3, d.x1) == Labels{"a"});
        CHECK(labels_of(c3, d.x2) == Labels{"c"});
        CHECK(labels_of(c3, d.x3) == Labels{"b"});

        auto a2 = Poset::antichain(2);
        auto id = lambda_decomposition(map_of(a2, "a->a b->b"));
        CHECK(id.x1.empty());
        CHECK(id.x2.empty());
        CHECK(labels_of(a2, id.x3) == Labels{"a", "b"});

        auto sw = lambda_decomposition(map_of(a2, "a->b b->a"));
        CHECK(labels_of(a2, sw.x1) == Labels{"a"});
        CHECK(labels_of(a2, sw.x2) == Labels{"b"});
    }

    TEST_CASE("lambda decompositions satisfy the defining conditions on all posets up to 5 elements")
    {
        for (int n = 1; n <= 5; ++n)
            for (const auto& p : posets_up_to_isomorphism(n))
                for (const auto& lambda : poset_involutions(p)) {
                    auto d = lambda_decomposition(lambda);
                    CHECK(oracle::decomposition_conditions_hold(lambda, d));
                    CHECK(is_lambda_decomposition(lambda, d));
                    auto ci = component_involution(lambda);
                    for (int j = 0; j < p.component_count(); ++j) {
                        CHECK(ci.lambda_bar[ci.lambda_bar[j]] == j);
                        CHECK(lambda.image_of(p.components()[j]) == p.components()[ci.lambda_bar[j]]);
                    }
                }
    }

    TEST_CASE("stable component sets have stable complements")
    {
        for (int n = 2; n <= 5; ++n)
            for (const auto& p : posets_up_to_isomorphism(n))
                for (const auto& lambda : poset_involutions(p)) {
                    auto ci = component_involution(lambda);
                    if (ci.j3.empty() || static_cast<int>(ci.j3.size()) == p.component_count())
                        continue;
                    std::vector<int> inside, outside;
                    for (int x = 0; x < p.size(); ++x)
                        (ci.is_fixed(p.component_of(x)) ? inside : outside).push_back(x);
                    CHECK(lambda.image_of(inside) == inside);
                    CHECK(lambda.image_of(outside) == outside);
                }
    }

    TEST_CASE("involution conjugacy")
    {
        auto a2 = Poset::antichain(2);
        CHECK_FALSE(poset_involutions_conjugate(map_of(a2, "a->a b->b"), map_of(a2, "a->b b->a")).has_value());
        auto c3 = Poset::chain(3);
        auto flip = map_of(c3, "a->c b->b c->a");
        auto w = poset_involutions_conjugate(flip, flip);
        REQUIRE(w.has_value());
        CHECK(w->is_identity());

        auto cc = two_chains();
        auto cross = map_of(cc, "a->d b->c c->b d->a");
        auto within = map_of(cc, "a->b b->a c->d d->c");
        auto alpha = map_of(cc, "a->c b->d c->a d->b", MapKind::automorphism);
        // Conjugating the cross swap by the component swap gives it back.
        CHECK(compose(compose(alpha, cross), alpha.inverse()) == cross);
        CHECK(poset_involutions_conjugate(cross, cross).has_value());
        CHECK_FALSE(poset_involutions_conjugate(cross, within).has_value());
    }

    TEST_CASE("isomorphism class counts")
    {
        // Number of unlabelled posets on n points.
        const std::size_t expected[] = {0, 1, 2, 5, 16, 63, 318};
        for (int n = 1; n <= 6; ++n)
            CHECK(posets_up_to_isomorphism(n).size() == expected[n]);
    }
}
