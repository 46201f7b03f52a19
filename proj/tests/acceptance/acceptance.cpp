// Acceptance checks 1-8. Prints one line per criterion and exits nonzero if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace incalg;
using namespace helpers;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what)
    {
        if (pass)
            detail << "first failure: " << what << "; ";
        pass = false;
    }
    void require(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }
};

PosetMap chain_flip(int n)
{
    auto c = Poset::chain(n);
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i)
        images[i] = n - 1 - i;
    return PosetMap(c, images, MapKind::anti_automorphism);
}

void criterion_1(Outcome& out)
{
    auto start = std::chrono::steady_clock::now();
    int compared = 0, gated_out = 0;
    for (Field k : {F(3), F(5)}) {
        for (int n = 1; n <= 4; ++n)
            for (const auto& p : posets_up_to_isomorphism(n)) {
                if (!hypothesis_gate(p, k).passed) {
                    gated_out += static_cast<int>(poset_involutions(p).size());
                    continue;
                }
                for (const auto& lambda : poset_involutions(p)) {
                    auto formula = count_classes_formula(lambda, k);
                    auto brute = count_classes_bruteforce(lambda, k).count;
                    out.require(formula == brute, p.describe() + " " + lambda.to_string() + " over " + k.name() +
                                                      ": formula " + std::to_string(formula) + " vs brute " +
                                                      std::to_string(brute));
                    ++compared;
                }
            }
        struct Named {
            const char* name;
            PosetMap lambda;
            std::uint64_t expected;
        };
        auto a2 = Poset::antichain(2);
        auto mixed = chain_and_singletons();
        std::vector<Named> named{
            {"2-chain flip", chain_flip(2), 2},
            {"3-chain flip", chain_flip(3), 1},
            {"4-chain flip", chain_flip(4), 2},
            {"swapped singletons", map_of(a2, "a->b b->a"), 1},
            {"2-antichain identity", map_of(a2, "a->a b->b"), 1},
            {"mixed", map_of(mixed, "a->b b->a c->d d->c"), 2},
        };
        for (const auto& c : named) {
            auto formula = count_classes_formula(c.lambda, k);
            auto brute = count_classes_bruteforce(c.lambda, k).count;
            out.require(formula == c.expected && brute == c.expected,
                        std::string(c.name) + " over " + k.name() + ": formula " + std::to_string(formula) +
                            ", brute " + std::to_string(brute) + ", expected " + std::to_string(c.expected));
            ++compared;
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < 120.0, "runtime " + std::to_string(seconds) + " s");
    out.detail << compared << " comparisons, " << gated_out << " involutions outside the gate, " << seconds << " s";
}

/// X = Q ⊔ Q^op for a random Q on 2 or 3 elements, λ exchanging the copies.
PosetMap random_swap_instance(std::mt19937_64& rng)
{
    int m = 2 + static_cast<int>(rng() % 2);
    auto half = oracle::random_poset(m, rng, 0.6);
    std::vector<std::string> labels;
    for (int i = 0; i < 2 * m; ++i)
        labels.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<int, int>> gens;
    for (auto [x, y] : half.covers()) {
        gens.emplace_back(x, y);
        gens.emplace_back(m + y, m + x);
    }
    auto p = Poset::from_indices(labels, gens);
    std::vector<int> images(2 * m);
    for (int i = 0; i < m; ++i) {
        images[i] = m + i;
        images[m + i] = i;
    }
    return PosetMap(p, images, MapKind::anti_automorphism);
}

void criterion_2(Outcome& out)
{
    std::mt19937_64 rng(2024);
    int instances = 0, corpus = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Field k = trial % 2 ? F(5) : F(3);
        auto lambda = random_swap_instance(rng);
        const auto& p = lambda.poset();
        // u is arbitrary on the first copy and c·ρ_λ of it on the second.
        std::vector<int> first;
        for (int j = 0; j < p.component_count(); ++j)
            if (p.components()[j].front() < p.size() / 2)
                first.push_back(j);
        auto s1 = p.restrict_to_components(first);
        std::vector<std::pair<SubPoset, IncidenceFunction>> block{{s1, restrict(oracle::random_unit(p, k, rng), s1)}};
        auto lower = assemble(p, k, block);
        auto u = lower + oracle::random_nonzero(k, rng) * rho_lambda(lambda, lower);
        auto rho = make_involution(lambda, Unit(u));
        auto witness = normalize_to_standard(rho);
        out.require(replay(witness, rho), "replay failed for " + rho.to_string());
        // Independent check of Ψ_c ∘ ρ = ρ_λ ∘ Ψ_c with c the conjugator.
        const auto& c = witness.conjugator.function();
        for (int i = 0; i < p.pair_count(); ++i) {
            auto [x, y] = p.pair_at(i);
            auto e = IncidenceFunction::basis(p, k, x, y);
            auto lhs = oracle::conjugate_by(c, oracle::conjugate_by(rho.u(), oracle::transpose_by(lambda, e)));
            auto rhs = oracle::transpose_by(lambda, oracle::conjugate_by(c, e));
            out.require(lhs == rhs, "conjugator does not intertwine for " + rho.to_string());
        }
        ++instances;
    }
    // Every component-swapping involution of the small corpus, every descriptor.
    for (Field k : {F(3), F(5)})
        for (int n = 2; n <= 4; ++n)
            for (const auto& p : posets_up_to_isomorphism(n))
                for (const auto& lambda : poset_involutions(p)) {
                    if (!component_involution(lambda).j3.empty())
                        continue;
                    for (const auto& rho : enumerate_involutions_over(lambda, k)) {
                        out.require(replay(normalize_to_standard(rho), rho), "replay failed for " + rho.to_string());
                        ++corpus;
                    }
                }
    out.require(instances >= 100, "only " + std::to_string(instances) + " random instances");
    out.detail << instances << " random and " << corpus << " corpus instances replayed";
}

void criterion_3(Outcome& out)
{
    std::uint64_t pairs = 0, oracle_pairs = 0, ungated_pairs = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : posets_up_to_isomorphism(n)) {
            bool gate = hypothesis_gate(p, F(3)).passed;
            for (const auto& lambda : poset_involutions(p)) {
                // The orbit partition is the full-algebra oracle run over every involution at once.
                auto report = count_classes_bruteforce(lambda, F(3));
                auto list = enumerate_involutions_over(lambda, F(3));
                InnerClassifier classifier(lambda, F(3), default_search_bound, gate);
                for (std::size_t i = 0; i < list.size(); ++i)
                    for (std::size_t j = 0; j < list.size(); ++j) {
                        bool same = report.class_of[i] == report.class_of[j];
                        bool fast = classifier.equivalent(list[i], list[j]);
                        out.require(fast == same, "fast path disagrees on " + list[i].to_string() + " vs " +
                                                      list[j].to_string());
                        (gate ? pairs : ungated_pairs) += 1;
                    }
                // Direct pairwise oracle calls where the involution lists are short.
                if (list.size() <= 20)
                    for (const auto& rho : list)
                        for (const auto& eta : list) {
                            bool direct = inner_equivalent_oracle(rho, eta).equivalent;
                            bool fast = gate ? inner_equivalent_fast(rho, eta) : classifier.equivalent(rho, eta);
                            out.require(direct == fast, "oracle disagrees on " + rho.to_string() + " vs " +
                                                            eta.to_string());
                            ++oracle_pairs;
                        }
            }
        }
    out.detail << pairs << " gated pairs, " << ungated_pairs << " pairs outside the gate (ungated comparison), "
               << oracle_pairs << " direct oracle pairs";
}

void criterion_4(Outcome& out)
{
    auto cc = two_chains();
    std::vector<InvolutionDescriptor> all;
    for (const auto& lambda : poset_involutions(cc)) {
        auto list = enumerate_involutions_over(lambda, F(3));
        all.insert(all.end(), list.begin(), list.end());
    }
    int pairs = 0, positive = 0;
    for (const auto& rho : all)
        for (const auto& eta : all) {
            auto r = general_equivalent(rho, eta);
            bool brute = oracle::general_equivalent_brute(rho, eta);
            out.require(r.equivalent == brute, "disagreement on " + rho.to_string() + " vs " + eta.to_string());
            if (r.equivalent) {
                ++positive;
                out.require(poset_involutions_conjugate(rho.lambda(), eta.lambda()).has_value(),
                            "positive answer with non-conjugate lambdas");
                out.require(r.witness.has_value() && replay(*r.witness, rho, eta), "witness does not replay");
            }
            if (r.restriction_agrees.has_value())
                out.require(*r.restriction_agrees, "restriction route disagrees");
            ++pairs;
        }
    out.detail << all.size() << " involutions, " << pairs << " pairs, " << positive << " equivalent";
}

void criterion_5(Outcome& out)
{
    std::mt19937_64 rng(5);
    for (Field k : {F(3), F(5), Q()}) {
        for (int trial = 0; trial < 1000; ++trial) {
            auto p = oracle::random_poset(1 + trial % 6, rng);
            auto f = oracle::random_function(p, k, rng);
            auto g = oracle::random_function(p, k, rng);
            auto h = oracle::random_function(p, k, rng);
            out.require((f * g) * h == f * (g * h), "associativity over " + k.name() + " on " + p.describe());
            auto u = oracle::random_unit(p, k, rng);
            auto inv = invert(u);
            out.require(u * inv == delta(p, k) && inv * u == delta(p, k) && inv == oracle::inverse_of(u),
                        "inverse over " + k.name() + " on " + p.describe());
        }
    }
    int posets = 0;
    for (Field k : {F(3), F(5), Q()})
        for (int n = 1; n <= 5; ++n)
            for (const auto& p : posets_up_to_isomorphism(n)) {
                auto basis = center_basis(p, k);
                auto commutant = oracle::commutant_basis(p, k);
                auto joint = basis;
                joint.insert(joint.end(), commutant.begin(), commutant.end());
                bool equal = oracle::rank(basis) == static_cast<int>(basis.size()) &&
                             basis.size() == commutant.size() && oracle::rank(joint) == static_cast<int>(basis.size());
                out.require(equal, "center mismatch on " + p.describe() + " over " + k.name());
                ++posets;
            }
    out.detail << "3000 associativity and 3000 inverse checks, " << posets << " center comparisons";
}

void criterion_6(Outcome& out)
{
    auto p = crown();
    auto sigma = MultiplicativeElement::from_covers(
        p, std::vector<Scalar>{Scalar(F(3), 1), Scalar(F(3), 1), Scalar(F(3), 2), Scalar(F(3), 1)});
    out.require(sigma.has_value(), "crown element is not multiplicative");
    if (!sigma)
        return;
    auto candidates = oracle::units_mod_center_formula(p, F(3));
    out.require(candidates == 648, "crown has " + std::to_string(candidates) + " units modulo center");
    out.require(!mult_is_inner_exhaustive(*sigma).inner, "exhaustive search found a conjugator on the crown");
    out.require(!is_fractional(*sigma).fractional, "crown element reported fractional");
    // Every unit, not reduced modulo the center, fails to realise M_σ.
    auto m_sigma = AlgebraMap::multiplicative(*sigma);
    for (const auto& u : oracle::all_units(p, F(3)))
        out.require(!maps_equal(AlgebraMap::inner(Unit(u)), m_sigma), "unit realises M_sigma on the crown");

    int certified = 0, posets = 0;
    auto certify = [&](const Poset& q) {
        ++posets;
        auto mults = enumerate_multiplicative(q, F(3));
        out.require(mults.size() == oracle::multiplicative_brute(q, F(3)).size(),
                    "multiplicative enumeration incomplete on " + q.describe());
        for (const auto& s : mults) {
            auto r = mult_is_inner(s);
            bool ok = r.inner && r.conjugator && r.conjugator->function().is_diagonal();
            if (ok)
                for (int i = 0; i < q.pair_count() && ok; ++i) {
                    auto [x, y] = q.pair_at(i);
                    auto e = IncidenceFunction::basis(q, F(3), x, y);
                    ok = oracle::conjugate_by(r.conjugator->function(), e) == scale(s, e);
                }
            out.require(ok, "no diagonal witness on " + q.describe());
            ++certified;
        }
    };
    certify(diamond());
    for (int n = 1; n <= 5; ++n)
        for (const auto& q : posets_up_to_isomorphism(n)) {
            bool every_component = true;
            for (int j = 0; j < q.component_count(); ++j) {
                auto sub = q.restrict_to_components(std::vector<int>{j});
                every_component = every_component && !all_comparable_elements(sub.poset).empty();
            }
            if (every_component)
                certify(q);
        }
    out.detail << "crown: " << candidates << " candidates rejected; " << certified << " elements on " << posets
               << " posets certified with diag(h)";
}

void criterion_7(Outcome& out)
{
    int count = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : posets_up_to_isomorphism(n))
            for (const auto& lambda : poset_involutions(p)) {
                try {
                    auto d = lambda_decomposition(lambda);
                    out.require(oracle::decomposition_conditions_hold(lambda, d),
                                "conditions fail for " + lambda.to_string() + " on " + p.describe());
                } catch (const Error& e) {
                    out.fail(std::string(errc_name(e.code())) + " for " + lambda.to_string());
                }
                ++count;
            }
    out.detail << count << " involutions";
}

void criterion_8(Outcome& out)
{
    std::uint64_t count = 0;
    auto check = [&](const PosetMap& lambda, Field k) {
        auto ci = component_involution(lambda);
        const auto& p = lambda.poset();
        for (const auto& rho : enumerate_involutions_over(lambda, k)) {
            const auto& u = rho.u().function();
            auto v = oracle::transpose_by(lambda, u) * oracle::inverse_of(u);
            bool ok = oracle::commutes_with_basis(v);
            for (int j = 0; j < p.component_count() && ok; ++j) {
                int a = p.component_anchor(j), b = p.component_anchor(ci.lambda_bar[j]);
                ok = (v(a, a) * v(b, b)).is_one();
            }
            auto cert = central_certificate(rho);
            ok = ok && cert.v == v;
            out.require(ok, "central-unit check fails for " + rho.to_string());
            ++count;
        }
    };
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : posets_up_to_isomorphism(n))
            for (const auto& lambda : poset_involutions(p)) {
                check(lambda, F(3));
                if (n <= 4)
                    check(lambda, F(5));
            }
    out.detail << count << " descriptors";
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* title;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "counting formula reproduction", criterion_1},
        {2, "collapse when no component is fixed", criterion_2},
        {3, "restriction fast path vs full oracle", criterion_3},
        {4, "general classification on two 2-chains", criterion_4},
        {5, "algebra core", criterion_5},
        {6, "inner multiplicative elements are fractional", criterion_6},
        {7, "lambda-decomposition validity", criterion_7},
        {8, "central-unit certificates", criterion_8},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        all = all && out.pass;
        std::cout << "criterion " << c.number << " " << (out.pass ? "PASS" : "FAIL") << " (" << c.title
                  << "): " << out.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
