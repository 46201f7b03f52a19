#include "incalg/classify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "involution_space.hpp"

namespace incalg {

namespace {

void require_same_algebra(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta)
{
    if (!(rho.poset() == eta.poset()))
        throw Error(Errc::poset_mismatch, "involutions on different posets");
    if (!(rho.field() == eta.field()))
        throw Error(Errc::field_mismatch, "involutions over different fields");
}

void require_same_lambda(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta)
{
    require_same_algebra(rho, eta);
    if (!(rho.lambda() == eta.lambda()))
        throw Error(Errc::lambda_mismatch, "involutions induce different poset involutions: " +
                                               rho.lambda().to_string() + " vs " + eta.lambda().to_string());
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > UINT64_MAX / b)
        throw Error(Errc::bound_exceeded, "class count does not fit in 64 bits");
    return a * b;
}

std::uint64_t class_count(const std::vector<int>& cls)
{
    return cls.empty() ? 0 : static_cast<std::uint64_t>(*std::max_element(cls.begin(), cls.end()) + 1);
}

// Brute-force class counts of the component algebras fixed by λ; the whole
// poset reuses full_count.
std::map<int, std::uint64_t> fixed_component_counts(const PosetMap& lambda, Field field, std::uint64_t bound,
                                                    std::uint64_t full_count)
{
    const Poset& p = lambda.poset();
    std::map<int, std::uint64_t> counts;
    for (int j : component_involution(lambda).j3) {
        if (p.component_count() == 1) {
            counts[j] = full_count;
            continue;
        }
        int one[] = {j};
        SubPoset sub = p.restrict_to_components(one);
        detail::InvolutionSpace space(lambda.restrict_to(sub), field, bound);
        counts[j] = class_count(space.partition());
    }
    return counts;
}

IncidenceFunction random_function(const Poset& p, Field field, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> dist(0, field.modulus() - 1);
    std::vector<Scalar> entries;
    for (int k = 0; k < p.pair_count(); ++k)
        entries.emplace_back(field, dist(rng));
    return IncidenceFunction::from_entries(p, std::move(entries));
}

} // namespace

AlgebraMap witness_map(const EquivalenceWitness& witness, const Poset& poset, Field field)
{
    std::vector<AlgebraMap> parts;
    if (witness.alpha)
        parts.push_back(AlgebraMap::induced_by(witness.alpha->inverse(), field));
    parts.push_back(AlgebraMap::inner(witness.t.inverse()));
    (void)poset;
    return compose_canonical(parts);
}

bool replay(const EquivalenceWitness& witness, const InvolutionDescriptor& rho, const InvolutionDescriptor& eta)
{
    const Poset& p = rho.poset();
    if (!center_test(witness.c))
        return false;
    AlgebraMap phi = witness_map(witness, p, rho.field());
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, y] = p.pair_at(k);
        auto e = IncidenceFunction::basis(p, rho.field(), x, y);
        if (!(phi(rho(e)) == eta(phi(e))))
            return false;
    }
    return true;
}

EquivalenceResult inner_equivalent_oracle(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta,
                                          std::uint64_t bound)
{
    require_same_lambda(rho, eta);
    detail::ResidueAlgebra alg(rho.poset(), rho.field());
    if (alg.units_mod_center_count() > bound)
        throw Error(Errc::bound_exceeded, "conjugator search needs " + std::to_string(alg.units_mod_center_count()) +
                                              " candidates; bound is " + std::to_string(bound));
    auto perm = alg.anti_permutation(rho.lambda());
    auto match = detail::find_conjugator(alg, perm, alg.from(rho.u().function()), alg.from(eta.u().function()));
    EquivalenceResult result;
    if (match) {
        result.equivalent = true;
        result.witness = EquivalenceWitness{WitnessKind::inner, Unit(alg.to(match->t)), alg.central(match->c),
                                            std::nullopt};
    }
    return result;
}

GateResult hypothesis_gate(const Poset& poset, Field field, std::uint64_t bound)
{
    auto cex = find_non_fractional(poset, field, bound);
    GateResult g;
    g.passed = !cex;
    g.counterexample = std::move(cex);
    return g;
}

bool inner_equivalent_fast(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta, std::uint64_t bound)
{
    require_same_lambda(rho, eta);
    InnerClassifier classifier(rho.lambda(), rho.field(), bound);
    return classifier.equivalent(rho, eta);
}

// ---------------------------------------------------------------------------
// InnerClassifier

struct InnerClassifier::Impl {
    struct Part {
        int component;
        SubPoset sub;
        std::unique_ptr<detail::InvolutionSpace> space;
        std::vector<int> classes;
    };
    PosetMap lambda;
    Field field;
    std::vector<Part> parts;
};

InnerClassifier::InnerClassifier(const PosetMap& lambda, Field field, std::uint64_t bound, bool enforce_gate)
{
    if (enforce_gate) {
        auto gate = hypothesis_gate(lambda.poset(), field, bound);
        if (!gate.passed)
            throw Error(Errc::hypothesis_gate_failed, "non-fractional multiplicative element exists: " +
                                                          gate.counterexample->function().to_string());
    }
    impl_ = std::make_unique<Impl>(Impl{lambda, field, {}});
    const Poset& p = lambda.poset();
    for (int j : component_involution(lambda).j3) {
        int one[] = {j};
        SubPoset sub = p.restrict_to_components(one);
        auto space = std::make_unique<detail::InvolutionSpace>(lambda.restrict_to(sub), field, bound);
        auto classes = space->partition();
        impl_->parts.push_back({j, std::move(sub), std::move(space), std::move(classes)});
    }
}

InnerClassifier::~InnerClassifier() = default;
InnerClassifier::InnerClassifier(InnerClassifier&&) noexcept = default;

std::vector<int> InnerClassifier::signature(const InvolutionDescriptor& rho) const
{
    if (!(rho.lambda() == impl_->lambda))
        throw Error(Errc::lambda_mismatch, "involution does not induce the classifier's lambda");
    std::vector<int> sig;
    for (const auto& part : impl_->parts) {
        const auto& alg = part.space->algebra();
        auto r = alg.from(restrict(rho.u().function(), part.sub));
        alg.canonicalize(r);
        int i = part.space->index_of(r);
        if (i < 0)
            throw Error(Errc::internal_inconsistency, "restriction is not an involution");
        sig.push_back(part.classes[i]);
    }
    return sig;
}

bool InnerClassifier::equivalent(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta) const
{
    return signature(rho) == signature(eta);
}

// ---------------------------------------------------------------------------
// Counting

std::uint64_t count_classes_formula(const PosetMap& lambda, Field field)
{
    auto ci = component_involution(lambda);
    auto sk = square_class_count(field);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < ci.j3_prime.size(); ++i)
        result = checked_mul(result, 2);
    for (const auto& ps : ci.p_sets) {
        if (ps.p3.empty())
            continue;
        for (std::size_t e = 1; e < ps.p3.size(); ++e) {
            if (!sk)
                throw Error(Errc::infinite_square_class_group,
                            "component " + std::to_string(ps.component) + " has " + std::to_string(ps.p3.size()) +
                                " fixed points and the square class group of " + field.name() + " is infinite");
            result = checked_mul(result, *sk);
        }
    }
    return result;
}

std::string method_name(CountMethod m)
{
    switch (m) {
    case CountMethod::formula:
        return "formula";
    case CountMethod::brute_force:
        return "brute-force";
    case CountMethod::both_agree:
        return "both-agree";
    }
    return "?";
}

ClassReport count_classes_bruteforce(const PosetMap& lambda, Field field, std::uint64_t bound)
{
    detail::InvolutionSpace space(lambda, field, bound);
    ClassReport report(lambda);
    report.class_of = space.partition();
    report.count = class_count(report.class_of);
    report.involution_count = space.size();
    for (std::size_t i = 0; i < space.size(); ++i)
        if (report.class_of[i] == static_cast<int>(report.representatives.size()))
            report.representatives.push_back(space.descriptor(i));
    report.component_counts = fixed_component_counts(lambda, field, bound, report.count);
    for (auto [j, c] : report.component_counts)
        report.component_product = checked_mul(report.component_product, c);
    report.product_matches = report.component_product == report.count;
    return report;
}

// ---------------------------------------------------------------------------
// General equivalence

EquivalenceResult general_equivalent(const InvolutionDescriptor& rho, const InvolutionDescriptor& eta,
                                     std::uint64_t bound)
{
    require_same_algebra(rho, eta);
    const Poset& p = rho.poset();
    EquivalenceResult result;
    for (const auto& alpha : automorphisms(p)) {
        PosetMap mu = compose(compose(alpha, eta.lambda()), alpha.inverse());
        if (!(mu == rho.lambda()))
            continue;
        InvolutionDescriptor moved(mu, Unit(induced(alpha, eta.u().function())));
        auto inner = inner_equivalent_oracle(rho, moved, bound);
        if (inner.equivalent) {
            result.equivalent = true;
            result.witness = std::move(inner.witness);
            result.witness->kind = WitnessKind::general;
            result.witness->alpha = alpha;
            break;
        }
    }

    if (rho.lambda() == eta.lambda()) {
        auto ci = component_involution(rho.lambda());
        if (!ci.j3.empty() && static_cast<int>(ci.j3.size()) < p.component_count() &&
            hypothesis_gate(p, rho.field(), bound).passed) {
            auto sub = general_equivalent(restrict_involution(rho, ci.j3), restrict_involution(eta, ci.j3), bound);
            result.restriction_agrees = sub.equivalent == result.equivalent;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Battery

std::string status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::refused:
        return "refused";
    }
    return "?";
}

bool BatteryReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

class CheckLog {
public:
    CheckResult& get(const std::string& name)
    {
        for (auto& c : checks_)
            if (c.name == name)
                return c;
        CheckResult c;
        c.name = name;
        checks_.push_back(std::move(c));
        return checks_.back();
    }

    void record(const std::string& name, bool ok, const std::string& detail)
    {
        auto& c = get(name);
        ++c.instances;
        if (!ok && c.status != CheckStatus::fail) {
            c.status = CheckStatus::fail;
            c.detail = detail;
        }
    }

    void refuse(const std::string& name, const std::string& reason)
    {
        auto& c = get(name);
        c.status = CheckStatus::refused;
        c.detail = reason;
    }

    std::vector<CheckResult> take() { return std::move(checks_); }

private:
    std::vector<CheckResult> checks_;
};

std::string describe_error(const Error& e)
{
    return std::string(errc_name(e.code())) + ": " + e.what();
}

} // namespace

BatteryReport verify_battery(const Poset& p, Field field, const BatteryOptions& options)
{
    if (!field.is_prime_field())
        throw Error(Errc::invalid_field, "the battery needs a finite field");
    BatteryReport report;
    report.poset = p.describe();
    report.field = field;
    auto gate = hypothesis_gate(p, field, options.bound);
    report.gate_passed = gate.passed;
    std::mt19937_64 rng(options.seed);
    CheckLog log;

    const std::vector<std::string> gated = {"count.formula_matches_bruteforce", "count.multiplicative_over_components",
                                            "fast_path.matches_oracle", "general.restriction_agrees"};
    if (!gate.passed)
        for (const auto& name : gated)
            log.refuse(name, "hypothesis-gate-failed: non-fractional multiplicative element " +
                                 gate.counterexample->function().to_string());

    // Center: indicators of components span it.
    {
        auto basis = center_basis(p, field);
        bool ok = static_cast<int>(basis.size()) == p.component_count();
        for (int j = 0; j < p.component_count() && ok; ++j) {
            std::vector<Scalar> values;
            for (int x = 0; x < p.size(); ++x)
                values.push_back(p.component_of(x) == j ? Scalar::one(field) : Scalar::zero(field));
            ok = center_test(IncidenceFunction::diagonal(p, values));
        }
        log.record("center.componentwise", ok, "center does not match the component indicators");
    }

    // Multiplicative elements: fractional iff inner, with a replayed conjugator.
    try {
        for (const auto& sigma : enumerate_multiplicative(p, field, options.bound)) {
            auto frac = is_fractional(sigma);
            auto inner = mult_is_inner(sigma);
            bool ok = frac.fractional == inner.inner;
            if (ok && inner.inner)
                for (int k = 0; k < p.pair_count() && ok; ++k) {
                    auto [x, y] = p.pair_at(k);
                    auto e = IncidenceFunction::basis(p, field, x, y);
                    ok = conjugate(*inner.conjugator, e) == scale(sigma, e);
                }
            log.record("mult_inn.fractional_iff_inner", ok, sigma.function().to_string());
        }
    } catch (const Error& e) {
        if (e.code() != Errc::bound_exceeded)
            throw;
        log.refuse("mult_inn.fractional_iff_inner", describe_error(e));
    }

    const auto autos = automorphisms(p);
    std::vector<InvolutionDescriptor> representatives;

    for (const auto& lambda : poset_involutions(p)) {
        const std::string where = " at lambda " + lambda.to_string();
        try {
            log.record("lambda_decomposition.valid", is_lambda_decomposition(lambda, lambda_decomposition(lambda)),
                       where);
        } catch (const Error& e) {
            log.record("lambda_decomposition.valid", false, describe_error(e) + where);
            continue;
        }

        auto ci = component_involution(lambda);
        std::vector<int> fixed_part;
        for (int j : ci.j3)
            for (int x : p.components()[j])
                fixed_part.push_back(x);
        std::sort(fixed_part.begin(), fixed_part.end());
        for (const auto& alpha : autos)
            if (compose(alpha, lambda) == compose(lambda, alpha))
                log.record("automorphism.preserves_fixed_components", alpha.image_of(fixed_part) == fixed_part,
                           "alpha " + alpha.to_string() + where);

        // λ̄-stable component sets to restrict to: the fixed components
        // together, and every λ̄-orbit.
        std::vector<std::vector<int>> stable_sets;
        if (!ci.j3.empty() && static_cast<int>(ci.j3.size()) < p.component_count())
            stable_sets.push_back(ci.j3);
        if (p.component_count() > 1)
            for (int j = 0; j < p.component_count(); ++j) {
                if (ci.lambda_bar[j] < j)
                    continue;
                std::vector<int> orbit{j};
                if (ci.lambda_bar[j] != j)
                    orbit.push_back(ci.lambda_bar[j]);
                if (static_cast<int>(orbit.size()) < p.component_count())
                    stable_sets.push_back(orbit);
            }

        detail::InvolutionSpace space(lambda, field, options.bound);
        std::vector<InvolutionDescriptor> descriptors;
        for (std::size_t i = 0; i < space.size(); ++i)
            descriptors.push_back(space.descriptor(i));

        for (const auto& rho : descriptors) {
            const std::string at = " at " + rho.to_string();
            try {
                central_certificate(rho);
                log.record("central_certificate.valid", true, "");
            } catch (const Error& e) {
                log.record("central_certificate.valid", false, describe_error(e) + at);
            }

            bool order_two = true;
            for (int k = 0; k < p.pair_count() && order_two; ++k) {
                auto [x, y] = p.pair_at(k);
                auto e = IncidenceFunction::basis(p, field, x, y);
                order_two = rho(rho(e)) == e;
            }
            log.record("involution.order_two", order_two, at);
            log.record("involution.induced_lambda", induced_poset_involution(rho.as_map()) == lambda, at);

            for (int s = 0; s < options.random_samples; ++s) {
                auto f = random_function(p, field, rng);
                auto g = random_function(p, field, rng);
                log.record("involution.anti_multiplicative", rho(f * g) == rho(g) * rho(f), at);
            }

            for (const auto& set : stable_sets) {
                std::vector<int> rest;
                for (int j = 0; j < p.component_count(); ++j)
                    if (!std::binary_search(set.begin(), set.end(), j))
                        rest.push_back(j);
                try {
                    auto rho_l = restrict_involution(rho, set);
                    restrict_involution(rho, rest);
                    log.record("restriction.involution_iff_parts", true, "");
                    SubPoset sub = p.restrict_to_components(set);
                    for (int s = 0; s < options.random_samples; ++s) {
                        auto f = random_function(p, field, rng);
                        log.record("restriction.commutes", restrict(rho(f), sub) == rho_l(restrict(f, sub)),
                                   "f=" + f.to_string() + at);
                    }
                } catch (const Error& e) {
                    log.record("restriction.involution_iff_parts", false, describe_error(e) + at);
                }
            }

            if (ci.j3.empty()) {
                try {
                    log.record("collapse.witness_replays", replay(normalize_to_standard(rho), rho), at);
                } catch (const Error& e) {
                    log.record("collapse.witness_replays", false, describe_error(e) + at);
                }
            }
        }

        auto cls = space.partition();
        const std::uint64_t brute = class_count(cls);
        std::vector<std::size_t> first_member;
        for (std::size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == static_cast<int>(first_member.size())) {
                first_member.push_back(i);
                representatives.push_back(descriptors[i]);
            }

        // Spot checks of the pairwise oracle against the partition.
        if (!descriptors.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, descriptors.size() - 1);
            for (std::size_t r : first_member)
                for (int s = 0; s < options.random_samples; ++s) {
                    std::size_t m = pick(rng);
                    auto res = inner_equivalent_oracle(descriptors[r], descriptors[m], options.bound);
                    bool ok = res.equivalent == (cls[r] == cls[m]) &&
                              (!res.witness || replay(*res.witness, descriptors[r], descriptors[m]));
                    log.record("oracle.matches_partition", ok,
                               descriptors[r].to_string() + " vs " + descriptors[m].to_string());
                }
        }

        if (!gate.passed)
            continue;

        auto formula = count_classes_formula(lambda, field);
        log.record("count.formula_matches_bruteforce", formula == brute,
                   "formula " + std::to_string(formula) + " brute " + std::to_string(brute) + where);
        std::uint64_t product = 1;
        for (auto [j, c] : fixed_component_counts(lambda, field, options.bound, brute))
            product = checked_mul(product, c);
        log.record("count.multiplicative_over_components", product == brute,
                   "product " + std::to_string(product) + " brute " + std::to_string(brute) + where);

        InnerClassifier classifier(lambda, field, options.bound, false);
        std::map<int, std::vector<int>> class_signature;
        std::set<std::vector<int>> seen;
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < descriptors.size() && ok; ++i) {
            auto sig = classifier.signature(descriptors[i]);
            auto [it, inserted] = class_signature.emplace(cls[i], sig);
            if (inserted) {
                ok = seen.insert(sig).second;
                if (!ok)
                    detail = "fast path merges two oracle classes at " + descriptors[i].to_string();
            } else if (it->second != sig) {
                ok = false;
                detail = "fast path splits an oracle class at " + descriptors[i].to_string();
            }
        }
        auto& c = log.get("fast_path.matches_oracle");
        c.instances += descriptors.size() * (descriptors.size() - 1) / 2;
        if (!ok && c.status != CheckStatus::fail) {
            c.status = CheckStatus::fail;
            c.detail = detail + where;
        }
    }

    for (std::size_t a = 0; a < representatives.size(); ++a)
        for (std::size_t b = 0; b < representatives.size(); ++b) {
            const auto& rho = representatives[a];
            const auto& eta = representatives[b];
            auto res = general_equivalent(rho, eta, options.bound);
            const std::string at = rho.to_string() + " vs " + eta.to_string();
            if (res.equivalent) {
                log.record("general.necessary_condition",
                           poset_involutions_conjugate(rho.lambda(), eta.lambda()).has_value(), at);
                log.record("general.witness_replays", replay(*res.witness, rho, eta), at);
            }
            if (res.restriction_agrees && gate.passed)
                log.record("general.restriction_agrees", *res.restriction_agrees, at);
        }

    report.checks = log.take();
    return report;
}

} // namespace incalg
