#include <doctest.h>

#include <random>

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

bool fixes_no_component(const PosetMap& lambda)
{
    return component_involution(lambda).j3.empty();
}

/// Ψ_c ∘ ρ = ρ_λ ∘ Ψ_c on every basis element, written with the oracle helpers.
bool conjugates_to_standard(const IncidenceFunction& c, const InvolutionDescriptor& rho)
{
    const auto& p = rho.poset();
    for (int i = 0; i < p.pair_count(); ++i) {
        auto [x, y] = p.pair_at(i);
        auto e = IncidenceFunction::basis(p, rho.field(), x, y);
        auto rho_e = oracle::conjugate_by(rho.u(), oracle::transpose_by(rho.lambda(), e));
        auto lhs = oracle::conjugate_by(c, rho_e);
        auto rhs = oracle::transpose_by(rho.lambda(), oracle::conjugate_by(c, e));
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("involutions")
{
    TEST_CASE("involution condition examples on the 2-chain over F3")
    {
        auto c2 = Poset::chain(2);
        auto flip = map_of(c2, "a->b b->a");
        auto rho = make_involution(flip, Unit(fn(c2, F(3), {1, 2, 0})));
        CHECK(rho.u().function() == fn(c2, F(3), {1, 2, 0}));
        CHECK(code_of([&] { make_involution(flip, Unit(fn(c2, F(3), {1, 2, 1}))); }) == Errc::not_an_involution);
        auto cert = central_certificate(rho);
        CHECK(cert.v == fn(c2, F(3), {2, 2, 0}));
        REQUIRE(cert.k.size() == 1);
        CHECK(cert.k[0] == Scalar(F(3), 2));
        CHECK(rho.to_string() == "lambda=a->b b->a u=(a,a)=1 (b,b)=2 (a,b)=0");
    }

    TEST_CASE("descriptors are stored modulo the center")
    {
        auto c2 = Poset::chain(2);
        auto flip = map_of(c2, "a->b b->a");
        auto rho = make_involution(flip, Unit(fn(c2, F(3), {2, 1, 0})));
        CHECK(rho.u().function() == fn(c2, F(3), {1, 2, 0}));
        CHECK(rho == make_involution(flip, Unit(fn(c2, F(3), {1, 2, 0}))));
    }

    TEST_CASE("swapped singletons over F5")
    {
        auto a2 = Poset::antichain(2);
        auto swap = map_of(a2, "a->b b->a");
        auto u = fn(a2, F(5), {2, 3});
        CHECK(rho_lambda(swap, u) * invert(u) == fn(a2, F(5), {4, 4}));
        auto u1 = Unit(fn(a2, F(5), {3, 3}));
        auto v1 = solve_norm_equation(swap, u1);
        CHECK(v1.function() == fn(a2, F(5), {3, 1}));
        CHECK(v1.function() * rho_lambda(swap, v1.function()) == u1.function());
    }

    TEST_CASE("build_w on two swapped chains")
    {
        auto cc = two_chains();
        auto cross = map_of(cc, "a->d b->c c->b d->a");
        // Basis order: a b c d then (a,b) (c,d).
        auto rho = make_involution(cross, Unit(fn(cc, F(5), {1, 2, 1, 3, 0, 0})));
        auto cert = central_certificate(rho);
        REQUIRE(cert.k.size() == 2);
        CHECK(cert.k[0] * cert.k[1] == Scalar::one(F(5)));
        auto w = build_w(rho);
        CHECK(w.function().is_diagonal());
        CHECK(w.function()(0, 0) == cert.k[0]);
        CHECK(w.function()(1, 1) == cert.k[0]);
        CHECK(w.function()(2, 2).is_one());
        CHECK(rho_lambda(cross, w.function()) * cert.v == w.function());
        auto wu = w.function() * rho.u().function();
        CHECK(rho_lambda(cross, wu) == wu);
    }

    TEST_CASE("errors")
    {
        auto c2 = Poset::chain(2);
        auto flip = map_of(c2, "a->b b->a");
        CHECK(code_of([&] { solve_norm_equation(flip, Unit::one(c2, F(3))); }) == Errc::precondition_violated);
        auto a2 = Poset::antichain(2);
        auto swap = map_of(a2, "a->b b->a");
        CHECK(code_of([&] { solve_norm_equation(swap, Unit(fn(a2, F(5), {1, 2}))); }) == Errc::precondition_violated);
        CHECK(code_of([&] { InvolutionDescriptor(PosetMap::identity(c2), Unit::one(c2, F(3))); }) ==
              Errc::not_an_involution);
        CHECK(code_of([&] { InvolutionDescriptor(flip, Unit::one(a2, F(3))); }) == Errc::poset_mismatch);
        auto cc = chain_and_singletons();
        auto lam = map_of(cc, "a->b b->a c->d d->c");
        auto rho = InvolutionDescriptor::standard(lam, F(3));
        std::vector<int> c_only{cc.component_of(cc.index_of("c"))};
        CHECK(code_of([&] { restrict_involution(rho, c_only); }) == Errc::not_stable);
        CHECK(code_of([&] { enumerate_involutions_over(map_of(Poset::chain(4), "a->d b->c c->b d->a"), F(3), 10); }) ==
              Errc::bound_exceeded);
    }

    TEST_CASE("enumeration matches the brute-force involution count")
    {
        for (Field k : {F(3), F(5)})
            for (int n = 1; n <= (k == F(3) ? 4 : 3); ++n)
                for (const auto& p : posets_up_to_isomorphism(n))
                    for (const auto& lambda : poset_involutions(p)) {
                        auto list = enumerate_involutions_over(lambda, k);
                        CHECK(list.size() == oracle::count_involutions_brute(lambda, k));
                        for (const auto& rho : list)
                            CHECK(oracle::squares_to_identity(lambda, rho.u()));
                    }
    }

    TEST_CASE("descriptor validity matches squaring to the identity")
    {
        for (int n = 1; n <= 3; ++n)
            for (const auto& p : posets_up_to_isomorphism(n))
                for (const auto& lambda : poset_involutions(p))
                    for (const auto& u : oracle::all_units(p, F(3))) {
                        bool accepted = true;
                        try {
                            InvolutionDescriptor(lambda, Unit(u));
                        } catch (const Error& e) {
                            CHECK(e.code() == Errc::not_an_involution);
                            accepted = false;
                        }
                        CHECK(accepted == oracle::squares_to_identity(lambda, u));
                    }
    }

    TEST_CASE("named involution counts")
    {
        auto flip_of = [](int n) {
            auto c = Poset::chain(n);
            std::vector<int> images(n);
            for (int i = 0; i < n; ++i)
                images[i] = n - 1 - i;
            return PosetMap(c, images, MapKind::anti_automorphism);
        };
        CHECK(enumerate_involutions_over(flip_of(2), F(3)).size() == 4);
        CHECK(enumerate_involutions_over(flip_of(3), F(3)).size() == 18);
        CHECK(enumerate_involutions_over(flip_of(4), F(3)).size() == 180);
        CHECK(enumerate_involutions_over(flip_of(2), F(5)).size() == 6);
        CHECK(enumerate_involutions_over(flip_of(3), F(5)).size() == 100);
    }

    TEST_CASE("central certificates")
    {
        for (Field k : {F(3), F(5)})
            for (int n = 1; n <= 4; ++n)
                for (const auto& p : posets_up_to_isomorphism(n))
                    for (const auto& lambda : poset_involutions(p)) {
                        auto ci = component_involution(lambda);
                        for (const auto& rho : enumerate_involutions_over(lambda, k)) {
                            auto cert = central_certificate(rho);
                            CHECK(oracle::commutes_with_basis(cert.v));
                            CHECK(rho_lambda(lambda, rho.u().function()) == cert.v * rho.u().function());
                            for (int j = 0; j < p.component_count(); ++j)
                                CHECK(cert.k[j] * cert.k[ci.lambda_bar[j]] == Scalar::one(k));
                        }
                    }
    }

    TEST_CASE("involutions are anti-multiplicative of order two and induce their lambda")
    {
        std::mt19937_64 rng(23);
        for (int n = 1; n <= 4; ++n)
            for (const auto& p : posets_up_to_isomorphism(n))
                for (const auto& lambda : poset_involutions(p))
                    for (const auto& rho : enumerate_involutions_over(lambda, F(3))) {
                        auto f = oracle::random_function(p, F(3), rng);
                        auto g = oracle::random_function(p, F(3), rng);
                        CHECK(rho(rho(f)) == f);
                        CHECK(rho(f * g) == rho(g) * rho(f));
                        CHECK(induced_poset_involution(rho.as_map()) == lambda);
                    }
    }

    TEST_CASE("normalization to the standard involution when no component is fixed")
    {
        int instances = 0;
        for (Field k : {F(3), F(5)})
            for (int n = 2; n <= 4; ++n)
                for (const auto& p : posets_up_to_isomorphism(n))
                    for (const auto& lambda : poset_involutions(p)) {
                        if (!fixes_no_component(lambda))
                            continue;
                        for (const auto& rho : enumerate_involutions_over(lambda, k)) {
                            auto witness = normalize_to_standard(rho);
                            CHECK(replay(witness, rho));
                            CHECK(conjugates_to_standard(witness.conjugator.function(), rho));
                            CHECK(witness.v1.function() * rho_lambda(lambda, witness.v1.function()) ==
                                  witness.u1.function());
                            ++instances;
                        }
                    }
        CHECK(instances > 0);
        auto cc = chain_and_singletons();
        auto rho = InvolutionDescriptor::standard(map_of(cc, "a->b b->a c->d d->c"), F(3));
        CHECK(code_of([&] { normalize_to_standard(rho); }) == Errc::precondition_violated);
    }

    TEST_CASE("normalization over the rationals")
    {
        std::mt19937_64 rng(29);
        auto cc = two_chains();
        auto cross = map_of(cc, "a->d b->c c->b d->a");
        auto l1 = cc.restrict_to_components(std::vector<int>{0});
        auto l2 = cc.restrict_to_components(std::vector<int>{1});
        for (int trial = 0; trial < 20; ++trial) {
            // u on the second block is forced by u on the first and a scalar.
            auto first = oracle::random_unit(l1.poset, Q(), rng);
            auto scale = oracle::random_nonzero(Q(), rng);
            std::vector<std::pair<SubPoset, IncidenceFunction>> blocks{{l1, first}};
            auto whole = assemble(cc, Q(), blocks) + IncidenceFunction::diagonal(cc, std::vector<Scalar>{
                Scalar::zero(Q()), Scalar::zero(Q()), Scalar::one(Q()), Scalar::one(Q())});
            auto second = scale * restrict(rho_lambda(cross, whole), l2);
            std::vector<std::pair<SubPoset, IncidenceFunction>> both{{l1, first}, {l2, second}};
            auto rho = make_involution(cross, Unit(assemble(cc, Q(), both)));
            auto witness = normalize_to_standard(rho);
            CHECK(replay(witness, rho));
            CHECK(conjugates_to_standard(witness.conjugator.function(), rho));
        }
    }

    TEST_CASE("restriction to stable component sets")
    {
        std::mt19937_64 rng(31);
        auto p = chain_and_singletons();
        auto lam = map_of(p, "a->b b->a c->d d->c");
        std::vector<int> fixed{p.component_of(p.index_of("a"))};
        std::vector<int> swapped{p.component_of(p.index_of("c")), p.component_of(p.index_of("d"))};
        for (const auto& rho : enumerate_involutions_over(lam, F(3))) {
            auto r1 = restrict_involution(rho, fixed);
            auto r2 = restrict_involution(rho, swapped);
            auto s1 = p.restrict_to_components(fixed);
            auto s2 = p.restrict_to_components(swapped);
            auto f = oracle::random_function(p, F(3), rng);
            CHECK(restrict(rho(f), s1) == r1(restrict(f, s1)));
            CHECK(restrict(rho(f), s2) == r2(restrict(f, s2)));
            CHECK(oracle::squares_to_identity(r1.lambda(), r1.u()));
        }
    }
}
