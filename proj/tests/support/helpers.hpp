#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "incalg/classify.hpp"

namespace helpers {

using namespace incalg;

inline Field F(unsigned p) { return Field::prime(p); }
inline Field Q() { return Field::rationals(); }

/// Entries in basis order.
inline IncidenceFunction fn(const Poset& p, Field k, std::initializer_list<std::int64_t> values)
{
    std::vector<Scalar> entries;
    for (auto v : values)
        entries.emplace_back(k, v);
    return IncidenceFunction::from_entries(p, std::move(entries));
}

/// "a->b b->a" over the poset's labels.
inline PosetMap map_of(const Poset& p, const std::string& text, MapKind kind = MapKind::anti_automorphism)
{
    std::vector<int> images(p.size(), -1);
    std::istringstream in(text);
    for (std::string token; in >> token;) {
        auto arrow = token.find("->");
        images[p.index_of(token.substr(0, arrow))] = p.index_of(token.substr(arrow + 2));
    }
    return PosetMap(p, images, kind);
}

inline Poset make_poset(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> covers)
{
    return Poset::build(std::move(labels), covers);
}

inline Poset diamond() { return make_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}); }
inline Poset crown() { return make_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}); }
inline Poset two_chains() { return make_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }
/// A 2-chain a < b beside the singletons c and d.
inline Poset chain_and_singletons() { return make_poset({"a", "b", "c", "d"}, {{"a", "b"}}); }

inline std::vector<std::string> labels_of(const Poset& p, const std::vector<int>& xs)
{
    std::vector<std::string> out;
    for (int x : xs)
        out.push_back(p.label(x));
    return out;
}

} // namespace helpers
