#include "incalg/cli.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace incalg {

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

[[noreturn]] void syntax(int line, const std::string& msg)
{
    throw Error(Errc::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void semantic(int line, const std::string& msg)
{
    throw Error(Errc::semantic_error, line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
}

std::vector<InputDocument::Entry> parse_entries(int line, const std::string& body)
{
    static const std::regex entry(R"(\(([^,()\s]+),([^,()\s]+)\)=(\S+))");
    std::vector<InputDocument::Entry> out;
    for (const auto& token : split_ws(body)) {
        std::smatch m;
        if (!std::regex_match(token, m, entry))
            syntax(line, "expected (x,y)=value, got '" + token + "'");
        out.push_back({m[1], m[2], m[3]});
    }
    return out;
}

} // namespace

InputDocument parse_document(std::string_view text)
{
    static const std::regex map_header(R"(map\s+(\S+)\s+kind=([A-Za-z-]+)\s*:(.*))");
    static const std::regex block_header(R"((unit|mult)\s+([^\s:]+)\s*:(.*))");
    InputDocument doc;
    std::istringstream in{std::string(text)};
    int number = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++number;
        std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        std::smatch m;
        if (line.rfind("elements:", 0) == 0) {
            if (doc.elements_line)
                syntax(number, "second 'elements:' line");
            doc.elements_line = number;
            doc.elements = split_ws(line.substr(9));
            if (doc.elements.empty())
                syntax(number, "no elements listed");
        } else if (line.rfind("cover:", 0) == 0) {
            auto t = split_ws(line.substr(6));
            if (t.size() != 2)
                syntax(number, "'cover:' takes exactly two labels");
            doc.covers.push_back({number, {t[0], t[1]}});
        } else if (std::regex_match(line, m, map_header)) {
            InputDocument::MapBlock block{number, m[1], m[2], {}};
            for (const auto& token : split_ws(m[3])) {
                auto arrow = token.find("->");
                if (arrow == std::string::npos || arrow == 0 || arrow + 2 == token.size())
                    syntax(number, "expected x->y, got '" + token + "'");
                block.assignments.push_back({token.substr(0, arrow), token.substr(arrow + 2)});
            }
            doc.maps.push_back(std::move(block));
        } else if (std::regex_match(line, m, block_header)) {
            InputDocument::EntryBlock block{number, m[2], parse_entries(number, m[3])};
            (m[1] == "unit" ? doc.units : doc.mults).push_back(std::move(block));
        } else {
            syntax(number, "unrecognised statement '" + line + "'");
        }
    }
    return doc;
}

ResolvedDocument resolve(const InputDocument& doc, Field field)
{
    if (!doc.elements_line)
        semantic(0, "document has no 'elements:' line");
    std::set<std::string> labels;
    for (const auto& e : doc.elements)
        if (!labels.insert(e).second)
            semantic(doc.elements_line, "duplicate element '" + e + "'");
    auto require_label = [&](int line, const std::string& l) {
        if (!labels.count(l))
            semantic(line, "unknown element '" + l + "'");
    };

    std::vector<std::pair<std::string, std::string>> generators;
    for (const auto& [line, pair] : doc.covers) {
        require_label(line, pair.first);
        require_label(line, pair.second);
        if (pair.first == pair.second)
            semantic(line, "an element cannot cover itself");
        generators.push_back(pair);
    }
    std::optional<Poset> built;
    try {
        built = Poset::build(doc.elements, generators);
    } catch (const Error& e) {
        semantic(0, e.what());
    }
    const Poset& p = *built;
    for (const auto& [line, pair] : doc.covers)
        if (!p.is_cover(p.index_of(pair.first), p.index_of(pair.second)))
            semantic(line, "(" + pair.first + "," + pair.second + ") is not a covering pair");

    ResolvedDocument out{p, {}, {}, {}};
    std::set<std::string> names;
    auto claim_name = [&](int line, const std::string& name) {
        if (!names.insert(name).second)
            semantic(line, "duplicate block name '" + name + "'");
    };

    for (const auto& block : doc.maps) {
        claim_name(block.line, block.name);
        MapKind kind;
        if (block.kind == "automorphism")
            kind = MapKind::automorphism;
        else if (block.kind == "anti-automorphism" || block.kind == "involution")
            kind = MapKind::anti_automorphism;
        else
            semantic(block.line, "unknown map kind '" + block.kind + "'");
        std::vector<int> images(p.size(), -1);
        for (const auto& [from, to] : block.assignments) {
            require_label(block.line, from);
            require_label(block.line, to);
            int x = p.index_of(from);
            if (images[x] >= 0)
                semantic(block.line, "'" + from + "' is assigned twice");
            images[x] = p.index_of(to);
        }
        for (int x = 0; x < p.size(); ++x)
            if (images[x] < 0)
                semantic(block.line, "'" + p.label(x) + "' has no image");
        try {
            PosetMap map(p, images, kind);
            if (block.kind == "involution" && !map.is_involution())
                semantic(block.line, "map '" + block.name + "' is not of order two");
            out.maps.emplace(block.name, std::move(map));
        } catch (const Error& e) {
            if (e.code() == Errc::semantic_error)
                throw;
            semantic(block.line, e.what());
        }
    }

    auto read_entries = [&](const InputDocument::EntryBlock& block) {
        claim_name(block.line, block.name);
        std::map<int, Scalar> values;
        for (const auto& entry : block.entries) {
            require_label(block.line, entry.row);
            require_label(block.line, entry.column);
            int x = p.index_of(entry.row), y = p.index_of(entry.column);
            if (!p.leq(x, y))
                semantic(block.line, "(" + entry.row + "," + entry.column + ") is not a comparable pair x <= y");
            int k = p.pair_index(x, y);
            if (values.count(k))
                semantic(block.line, "(" + entry.row + "," + entry.column + ") is given twice");
            try {
                values.emplace(k, Scalar::parse(field, entry.value));
            } catch (const Error& e) {
                semantic(block.line, e.what());
            }
        }
        return values;
    };

    for (const auto& block : doc.units) {
        auto values = read_entries(block);
        IncidenceFunction f(p, field);
        for (const auto& [k, v] : values)
            f.set_entry(k, v);
        for (int x = 0; x < p.size(); ++x) {
            auto it = values.find(p.pair_index(x, x));
            if (it == values.end())
                semantic(block.line, "non-unit: no diagonal entry (" + p.label(x) + "," + p.label(x) + ")");
            if (it->second.is_zero())
                semantic(block.line, "non-unit: (" + p.label(x) + "," + p.label(x) + ")=0");
        }
        out.units.emplace(block.name, Unit(std::move(f)));
    }

    for (const auto& block : doc.mults) {
        auto values = read_entries(block);
        std::vector<Scalar> cover_values;
        for (auto [x, y] : p.covers()) {
            auto it = values.find(p.pair_index(x, y));
            if (it == values.end())
                semantic(block.line, "covering pair (" + p.label(x) + "," + p.label(y) + ") has no value");
            cover_values.push_back(it->second);
        }
        std::optional<MultiplicativeElement> sigma;
        if (cover_values.empty())
            sigma = MultiplicativeElement::one(p, field);
        else
            sigma = MultiplicativeElement::from_covers(p, cover_values);
        if (!sigma)
            semantic(block.line, "values of '" + block.name + "' are not multiplicative");
        for (const auto& [k, v] : values)
            if (!(sigma->function().entry(k) == v)) {
                auto [x, y] = p.pair_at(k);
                semantic(block.line, "(" + p.label(x) + "," + p.label(y) + ") disagrees with the product along a chain");
            }
        out.mults.emplace(block.name, std::move(*sigma));
    }
    return out;
}

int exit_code_for(Errc code)
{
    switch (code) {
    case Errc::bound_exceeded:
    case Errc::size_bound_exceeded:
        return exit_bound_exceeded;
    case Errc::internal_inconsistency:
    case Errc::hypothesis_gate_failed:
        return exit_check_failed;
    default:
        return exit_input_error;
    }
}

namespace {

class Report {
public:
    void add(const std::string& key, const std::string& value) { out_ << key << " = " << value << '\n'; }
    void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

std::string labels_of(const Poset& p, const std::vector<int>& xs)
{
    if (xs.empty())
        return "none";
    std::string s;
    for (int x : xs)
        s += (s.empty() ? "" : " ") + p.label(x);
    return s;
}

std::string ints(const std::vector<int>& xs)
{
    if (xs.empty())
        return "none";
    std::string s;
    for (int x : xs)
        s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

struct Context {
    const RunOptions& opts;
    ResolvedDocument doc;
    Report report;
};

const PosetMap& named_involution(const ResolvedDocument& doc, const std::string& name)
{
    auto it = doc.maps.find(name);
    if (it == doc.maps.end())
        semantic(0, "no map named '" + name + "'");
    if (!it->second.is_involution())
        semantic(0, "map '" + name + "' is not a poset involution");
    return it->second;
}

// The involutions a command works on: --lambda, else the document's only
// involution map, else all poset involutions.
std::vector<PosetMap> selected_involutions(const Context& ctx, bool& single)
{
    if (!ctx.opts.lambda.empty()) {
        single = true;
        return {named_involution(ctx.doc, ctx.opts.lambda)};
    }
    std::vector<PosetMap> declared;
    for (const auto& [name, map] : ctx.doc.maps)
        if (map.is_involution())
            declared.push_back(map);
    if (declared.size() == 1) {
        single = true;
        return declared;
    }
    single = false;
    return poset_involutions(ctx.doc.poset, ctx.opts.max_size);
}

std::string prefix_for(bool single, std::size_t i)
{
    return single ? "" : "involution." + std::to_string(i) + ".";
}

InvolutionDescriptor involution_arg(const Context& ctx, const std::string& text, const char* flag)
{
    if (text.empty())
        semantic(0, std::string("--") + flag + " is required");
    auto colon = text.find(':');
    const PosetMap& lambda = named_involution(ctx.doc, text.substr(0, colon));
    if (colon == std::string::npos)
        return InvolutionDescriptor::standard(lambda, ctx.opts.field);
    std::string unit = text.substr(colon + 1);
    auto it = ctx.doc.units.find(unit);
    if (it == ctx.doc.units.end())
        semantic(0, "no unit named '" + unit + "'");
    try {
        return InvolutionDescriptor(lambda, it->second);
    } catch (const Error& e) {
        semantic(0, std::string("--") + flag + ": " + e.what());
    }
}

void cmd_components(Context& ctx)
{
    const Poset& p = ctx.doc.poset;
    ctx.report.add("poset.size", p.size());
    ctx.report.add("components.count", p.component_count());
    for (int j = 0; j < p.component_count(); ++j) {
        const std::string key = "component." + std::to_string(j);
        ctx.report.add(key, labels_of(p, p.components()[j]));
        int sub[] = {j};
        SubPoset s = p.restrict_to_components(sub);
        std::vector<int> ac;
        for (int x : all_comparable_elements(s.poset))
            ac.push_back(s.embedding[x]);
        ctx.report.add(key + ".all_comparable", labels_of(p, ac));
    }
}

void cmd_autos(Context& ctx)
{
    const Poset& p = ctx.doc.poset;
    auto autos = automorphisms(p, ctx.opts.max_size);
    ctx.report.add("automorphisms.count", static_cast<std::uint64_t>(autos.size()));
    for (std::size_t i = 0; i < autos.size(); ++i)
        ctx.report.add("automorphism." + std::to_string(i), autos[i].to_string());
    auto antis = enumerate_maps(p, MapKind::anti_automorphism, false, ctx.opts.max_size);
    ctx.report.add("anti_automorphisms.count", static_cast<std::uint64_t>(antis.size()));
    for (std::size_t i = 0; i < antis.size(); ++i)
        ctx.report.add("anti_automorphism." + std::to_string(i), antis[i].to_string());
    ctx.report.add("involutions.count", static_cast<std::uint64_t>(poset_involutions(p, ctx.opts.max_size).size()));
}

void cmd_involutions(Context& ctx)
{
    const Poset& p = ctx.doc.poset;
    if (ctx.opts.lambda.empty()) {
        auto invs = poset_involutions(p, ctx.opts.max_size);
        ctx.report.add("involutions.count", static_cast<std::uint64_t>(invs.size()));
        for (std::size_t i = 0; i < invs.size(); ++i)
            ctx.report.add("involution." + std::to_string(i), invs[i].to_string());
        return;
    }
    const PosetMap& lambda = named_involution(ctx.doc, ctx.opts.lambda);
    auto all = enumerate_involutions_over(lambda, ctx.opts.field, ctx.opts.bound);
    ctx.report.add("lambda", lambda.to_string());
    ctx.report.add("algebra_involutions.count", static_cast<std::uint64_t>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::string key = "algebra_involution." + std::to_string(i);
        ctx.report.add(key + ".u", all[i].u().function().to_string());
        auto cert = central_certificate(all[i]);
        std::string k;
        for (const auto& s : cert.k)
            k += (k.empty() ? "" : " ") + s.to_string();
        ctx.report.add(key + ".k", k);
    }
}

void cmd_decompose(Context& ctx)
{
    const Poset& p = ctx.doc.poset;
    bool single = false;
    auto lambdas = selected_involutions(ctx, single);
    if (!single)
        ctx.report.add("involutions.count", static_cast<std::uint64_t>(lambdas.size()));
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const auto& lambda = lambdas[i];
        const std::string pre = prefix_for(single, i);
        auto d = lambda_decomposition(lambda);
        auto ci = component_involution(lambda);
        ctx.report.add(pre + "lambda", lambda.to_string());
        ctx.report.add(pre + "x1", labels_of(p, d.x1));
        ctx.report.add(pre + "x2", labels_of(p, d.x2));
        ctx.report.add(pre + "x3", labels_of(p, d.x3));
        ctx.report.add(pre + "valid", is_lambda_decomposition(lambda, d));
        std::string bar;
        for (std::size_t j = 0; j < ci.lambda_bar.size(); ++j)
            bar += (bar.empty() ? "" : " ") + std::to_string(j) + "->" + std::to_string(ci.lambda_bar[j]);
        ctx.report.add(pre + "lambda_bar", bar);
        ctx.report.add(pre + "j3", ints(ci.j3));
        ctx.report.add(pre + "j3_prime", ints(ci.j3_prime));
        for (const auto& ps : ci.p_sets) {
            const std::string key = pre + "p." + std::to_string(ps.component);
            ctx.report.add(key + ".p1", labels_of(p, ps.p1));
            ctx.report.add(key + ".p2", labels_of(p, ps.p2));
            ctx.report.add(key + ".p3", labels_of(p, ps.p3));
        }
    }
}

void add_gate(Context& ctx, const GateResult& gate)
{
    ctx.report.add("gate", gate.passed ? "pass" : "fail");
    if (!gate.passed)
        ctx.report.add("gate.counterexample", gate.counterexample->function().to_string());
}

void cmd_classify(Context& ctx)
{
    bool single = false;
    auto lambdas = selected_involutions(ctx, single);
    auto gate = hypothesis_gate(ctx.doc.poset, ctx.opts.field, ctx.opts.bound);
    add_gate(ctx, gate);
    if (!single)
        ctx.report.add("involutions.count", static_cast<std::uint64_t>(lambdas.size()));
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const std::string pre = prefix_for(single, i);
        auto rep = count_classes_bruteforce(lambdas[i], ctx.opts.field, ctx.opts.bound);
        if (gate.passed && count_classes_formula(lambdas[i], ctx.opts.field) == rep.count)
            rep.method = CountMethod::both_agree;
        ctx.report.add(pre + "lambda", lambdas[i].to_string());
        ctx.report.add(pre + "algebra_involutions.count", rep.involution_count);
        ctx.report.add(pre + "classes.count", rep.count);
        ctx.report.add(pre + "method", method_name(rep.method));
        for (std::size_t c = 0; c < rep.representatives.size(); ++c) {
            const std::string key = pre + "class." + std::to_string(c);
            ctx.report.add(key + ".representative", rep.representatives[c].u().function().to_string());
            ctx.report.add(key + ".size", static_cast<std::uint64_t>(
                                              std::count(rep.class_of.begin(), rep.class_of.end(), static_cast<int>(c))));
        }
    }
}

int cmd_count(Context& ctx)
{
    bool single = false;
    auto lambdas = selected_involutions(ctx, single);
    const bool finite = ctx.opts.field.is_prime_field();
    std::optional<GateResult> gate;
    if (finite) {
        gate = hypothesis_gate(ctx.doc.poset, ctx.opts.field, ctx.opts.bound);
        add_gate(ctx, *gate);
    }
    if (!single)
        ctx.report.add("involutions.count", static_cast<std::uint64_t>(lambdas.size()));
    int code = exit_ok;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const std::string pre = prefix_for(single, i);
        ctx.report.add(pre + "lambda", lambdas[i].to_string());
        std::optional<std::uint64_t> formula;
        try {
            formula = count_classes_formula(lambdas[i], ctx.opts.field);
            ctx.report.add(pre + "classes.formula", *formula);
        } catch (const Error& e) {
            if (e.code() != Errc::infinite_square_class_group)
                throw;
            ctx.report.add(pre + "classes.formula", "infinite");
        }
        if (!finite) {
            ctx.report.add(pre + "classes.bruteforce", "unavailable");
            continue;
        }
        auto rep = count_classes_bruteforce(lambdas[i], ctx.opts.field, ctx.opts.bound);
        ctx.report.add(pre + "classes.bruteforce", rep.count);
        ctx.report.add(pre + "classes.component_product", rep.component_product);
        bool agree = formula && *formula == rep.count;
        ctx.report.add(pre + "agreement", agree);
        if (gate->passed && (!agree || !rep.product_matches))
            code = exit_check_failed;
    }
    return code;
}

void add_witness(Context& ctx, const EquivalenceWitness& w)
{
    if (w.alpha)
        ctx.report.add("witness.alpha", w.alpha->to_string());
    ctx.report.add("witness.t", w.t.function().to_string());
    ctx.report.add("witness.c", w.c.to_string());
}

int cmd_general_equiv(Context& ctx)
{
    auto rho = involution_arg(ctx, ctx.opts.rho, "rho");
    auto eta = involution_arg(ctx, ctx.opts.eta, "eta");
    ctx.report.add("rho", rho.to_string());
    ctx.report.add("eta", eta.to_string());
    bool similar = poset_involutions_conjugate(rho.lambda(), eta.lambda(), ctx.opts.max_size).has_value();
    ctx.report.add("lambda_similar", similar);
    if (rho.lambda() == eta.lambda()) {
        auto inner = inner_equivalent_oracle(rho, eta, ctx.opts.bound);
        ctx.report.add("inner_equivalent", inner.equivalent);
    }
    auto res = general_equivalent(rho, eta, ctx.opts.bound);
    ctx.report.add("equivalent", res.equivalent);
    int code = exit_ok;
    if (res.witness) {
        add_witness(ctx, *res.witness);
        bool ok = replay(*res.witness, rho, eta);
        ctx.report.add("witness.replayed", ok);
        if (!ok || !similar)
            code = exit_check_failed;
    }
    if (res.restriction_agrees) {
        ctx.report.add("restriction_agrees", *res.restriction_agrees);
        if (!*res.restriction_agrees)
            code = exit_check_failed;
    } else {
        ctx.report.add("restriction_agrees", "n/a");
    }
    return code;
}

void cmd_fractional_check(Context& ctx)
{
    const Poset& p = ctx.doc.poset;
    std::optional<MultiplicativeElement> sigma;
    std::string name = ctx.opts.sigma;
    if (name.empty() && ctx.doc.mults.size() == 1)
        name = ctx.doc.mults.begin()->first;
    if (!name.empty()) {
        auto it = ctx.doc.mults.find(name);
        if (it == ctx.doc.mults.end())
            semantic(0, "no mult block named '" + name + "'");
        sigma = it->second;
    }
    if (sigma) {
        ctx.report.add("sigma", name);
        auto frac = is_fractional(*sigma);
        ctx.report.add("fractional", frac.fractional);
        if (frac.fractional) {
            std::string h;
            for (int x = 0; x < p.size(); ++x)
                h += (h.empty() ? "" : " ") + p.label(x) + "=" + (*frac.h)[x].to_string();
            ctx.report.add("h", h);
        } else {
            ctx.report.add("violated_pair", "(" + p.label(frac.violated_pair->first) + "," +
                                                p.label(frac.violated_pair->second) + ")");
            ctx.report.add("cycle", labels_of(p, frac.cycle));
            ctx.report.add("cycle_value", frac.cycle_value->to_string());
        }
        auto inner = mult_is_inner(*sigma);
        ctx.report.add("inner", inner.inner);
        if (inner.inner)
            ctx.report.add("inner.conjugator", inner.conjugator->function().to_string());
        if (ctx.opts.field.is_prime_field()) {
            try {
                auto ex = mult_is_inner_exhaustive(*sigma, ctx.opts.bound);
                ctx.report.add("inner.exhaustive", ex.inner);
            } catch (const Error& e) {
                if (e.code() != Errc::bound_exceeded)
                    throw;
                ctx.report.add("inner.exhaustive", "bound-exceeded");
            }
        }
    }
    auto cex = find_non_fractional(p, ctx.opts.field, ctx.opts.bound);
    ctx.report.add("mult_subset_inn", !cex);
    if (cex)
        ctx.report.add("mult_subset_inn.counterexample", cex->function().to_string());
}

int cmd_verify(Context& ctx, const std::vector<Poset>& corpus)
{
    if (!ctx.opts.field.is_prime_field())
        throw Error(Errc::invalid_field, "verify needs a finite field");
    struct Total {
        std::string name;
        std::uint64_t instances = 0;
        std::uint64_t refused = 0;
        bool failed = false;
        std::string detail;
    };
    std::vector<Total> totals;
    auto total_for = [&](const std::string& name) -> Total& {
        for (auto& t : totals)
            if (t.name == name)
                return t;
        Total t;
        t.name = name;
        totals.push_back(std::move(t));
        return totals.back();
    };
    std::uint64_t gate_failures = 0;
    BatteryOptions options{ctx.opts.bound, ctx.opts.seed, 3};
    for (const auto& p : corpus) {
        auto report = verify_battery(p, ctx.opts.field, options);
        if (!report.gate_passed)
            ++gate_failures;
        for (const auto& c : report.checks) {
            auto& t = total_for(c.name);
            t.instances += c.instances;
            if (c.status == CheckStatus::refused)
                ++t.refused;
            if (c.status == CheckStatus::fail && !t.failed) {
                t.failed = true;
                t.detail = c.detail + " on poset [" + report.poset + "]";
            }
        }
    }
    std::sort(totals.begin(), totals.end(), [](const Total& a, const Total& b) { return a.name < b.name; });
    ctx.report.add("field", ctx.opts.field.name());
    ctx.report.add("posets.checked", static_cast<std::uint64_t>(corpus.size()));
    ctx.report.add("posets.gate_failed", gate_failures);
    bool pass = true;
    for (const auto& t : totals) {
        const std::string key = "check." + t.name;
        ctx.report.add(key + ".status", t.failed ? "fail" : "pass");
        ctx.report.add(key + ".instances", t.instances);
        ctx.report.add(key + ".refused", t.refused);
        if (t.failed) {
            pass = false;
            std::string detail = t.detail;
            std::replace(detail.begin(), detail.end(), '\n', ';');
            ctx.report.add(key + ".counterexample", detail);
        }
    }
    ctx.report.add("battery", pass ? "pass" : "fail");
    return pass ? exit_ok : exit_check_failed;
}

} // namespace

RunResult run(const RunOptions& opts, const std::optional<std::string>& document)
{
    RunResult result;
    try {
        static const std::set<std::string> commands = {"components", "autos",           "involutions",
                                                       "decompose",  "classify",        "count",
                                                       "general-equiv", "fractional-check", "verify"};
        if (!commands.count(opts.command))
            throw Error(Errc::syntax_error, "unknown command '" + opts.command + "'");
        if (opts.max_size < 1)
            throw Error(Errc::syntax_error, "--max-size must be positive");

        if (!document) {
            if (opts.command != "verify")
                throw Error(Errc::syntax_error, "command '" + opts.command + "' needs an input document");
            if (opts.max_size > 6)
                throw Error(Errc::size_bound_exceeded, "the internal poset corpus stops at 6 elements");
            std::vector<Poset> corpus;
            for (int n = 1; n <= opts.max_size; ++n)
                for (auto& p : posets_up_to_isomorphism(n))
                    corpus.push_back(std::move(p));
            Context ctx{opts, ResolvedDocument{Poset::chain(1), {}, {}, {}}, {}};
            result.exit_code = cmd_verify(ctx, corpus);
            result.output = ctx.report.str();
            return result;
        }

        Context ctx{opts, resolve(parse_document(*document), opts.field), {}};
        if (ctx.doc.poset.size() > opts.max_size)
            throw Error(Errc::size_bound_exceeded, "poset has " + std::to_string(ctx.doc.poset.size()) +
                                                       " elements; --max-size is " + std::to_string(opts.max_size));
        int code = exit_ok;
        if (opts.command == "components")
            cmd_components(ctx);
        else if (opts.command == "autos")
            cmd_autos(ctx);
        else if (opts.command == "involutions")
            cmd_involutions(ctx);
        else if (opts.command == "decompose")
            cmd_decompose(ctx);
        else if (opts.command == "classify")
            cmd_classify(ctx);
        else if (opts.command == "count")
            code = cmd_count(ctx);
        else if (opts.command == "general-equiv")
            code = cmd_general_equiv(ctx);
        else if (opts.command == "fractional-check")
            cmd_fractional_check(ctx);
        else
            code = cmd_verify(ctx, {ctx.doc.poset});
        result.output = ctx.report.str();
        result.exit_code = code;
    } catch (const Error& e) {
        result.output.clear();
        result.errors = "error = " + std::string(errc_name(e.code())) + ": " + e.what() + "\n";
        result.exit_code = exit_code_for(e.code());
    }
    return result;
}

} // namespace incalg
