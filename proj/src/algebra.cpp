#include "incalg/algebra.hpp"

#include <numeric>

namespace incalg {

IncidenceFunction::IncidenceFunction(Poset poset, Field field)
    : poset_(std::move(poset)), field_(field),
      entries_(static_cast<std::size_t>(poset_.pair_count()), Scalar::zero(field))
{
}

IncidenceFunction IncidenceFunction::delta(const Poset& poset, Field field)
{
    IncidenceFunction f(poset, field);
    for (int k = 0; k < poset.diagonal_count(); ++k)
        f.entries_[k] = Scalar::one(field);
    return f;
}

IncidenceFunction IncidenceFunction::basis(const Poset& poset, Field field, int x, int y)
{
    IncidenceFunction f(poset, field);
    f.set(x, y, Scalar::one(field));
    return f;
}

IncidenceFunction IncidenceFunction::diagonal(const Poset& poset, std::span<const Scalar> values)
{
    if (values.size() != static_cast<std::size_t>(poset.size()) || values.empty())
        throw Error(Errc::precondition_violated, "diagonal needs one value per element");
    IncidenceFunction f(poset, values.front().field());
    for (int x = 0; x < poset.size(); ++x)
        f.set(x, x, values[x]);
    return f;
}

IncidenceFunction IncidenceFunction::from_entries(const Poset& poset, std::vector<Scalar> entries)
{
    if (entries.size() != static_cast<std::size_t>(poset.pair_count()) || entries.empty())
        throw Error(Errc::precondition_violated, "entry count does not match the relation");
    IncidenceFunction f(poset, entries.front().field());
    for (const auto& s : entries)
        if (!(s.field() == f.field_))
            throw Error(Errc::field_mismatch, "entries from different fields");
    f.entries_ = std::move(entries);
    return f;
}

Scalar IncidenceFunction::operator()(int x, int y) const
{
    int k = poset_.pair_index(x, y);
    return k < 0 ? Scalar::zero(field_) : entries_[k];
}

void IncidenceFunction::set(int x, int y, const Scalar& value)
{
    int k = poset_.pair_index(x, y);
    if (k < 0)
        throw Error(Errc::precondition_violated,
                    "(" + poset_.label(x) + "," + poset_.label(y) + ") is not a comparable pair");
    set_entry(k, value);
}

void IncidenceFunction::set_entry(int k, const Scalar& value)
{
    if (!(value.field() == field_))
        throw Error(Errc::field_mismatch, "scalar from " + value.field().name() + " in an algebra over " +
                                              field_.name());
    entries_.at(k) = value;
}

std::optional<int> IncidenceFunction::non_unit_witness() const
{
    for (int k = 0; k < poset_.diagonal_count(); ++k)
        if (entries_[k].is_zero())
            return poset_.pair_at(k).first;
    return std::nullopt;
}

bool IncidenceFunction::is_unit() const { return !non_unit_witness(); }

bool IncidenceFunction::is_diagonal() const
{
    for (std::size_t k = poset_.diagonal_count(); k < entries_.size(); ++k)
        if (!entries_[k].is_zero())
            return false;
    return true;
}

IncidenceFunction IncidenceFunction::operator-() const
{
    IncidenceFunction r = *this;
    for (auto& s : r.entries_)
        s = -s;
    return r;
}

void require_same_algebra(const IncidenceFunction& f, const IncidenceFunction& g)
{
    if (!(f.field() == g.field()))
        throw Error(Errc::field_mismatch, "incidence functions over " + f.field().name() + " and " +
                                              g.field().name());
    if (!(f.poset() == g.poset()))
        throw Error(Errc::poset_mismatch, "incidence functions on different posets");
}

IncidenceFunction operator+(const IncidenceFunction& f, const IncidenceFunction& g)
{
    require_same_algebra(f, g);
    IncidenceFunction r = f;
    for (std::size_t k = 0; k < r.entries_.size(); ++k)
        r.entries_[k] += g.entries_[k];
    return r;
}

IncidenceFunction operator-(const IncidenceFunction& f, const IncidenceFunction& g)
{
    return f + (-g);
}

IncidenceFunction operator*(const Scalar& a, const IncidenceFunction& f)
{
    IncidenceFunction r = f;
    for (auto& s : r.entries_)
        s = a * s;
    return r;
}

IncidenceFunction operator*(const IncidenceFunction& f, const IncidenceFunction& g)
{
    require_same_algebra(f, g);
    const Poset& p = f.poset_;
    IncidenceFunction r(p, f.field_);
    for (int k = 0; k < p.pair_count(); ++k) {
        auto [x, y] = p.pair_at(k);
        Scalar sum = Scalar::zero(f.field_);
        for (int z = 0; z < p.size(); ++z)
            if (p.leq(x, z) && p.leq(z, y))
                sum += f.entries_[p.pair_index(x, z)] * g.entries_[p.pair_index(z, y)];
        r.entries_[k] = sum;
    }
    return r;
}

bool operator==(const IncidenceFunction& f, const IncidenceFunction& g)
{
    return f.field_ == g.field_ && f.poset_ == g.poset_ && f.entries_ == g.entries_;
}

std::string IncidenceFunction::to_string() const
{
    std::string out;
    for (int k = 0; k < poset_.pair_count(); ++k) {
        auto [x, y] = poset_.pair_at(k);
        if (k)
            out += ' ';
        out += "(" + poset_.label(x) + "," + poset_.label(y) + ")=" + entries_[k].to_string();
    }
    return out;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g)
{
    return f * g;
}

IncidenceFunction invert(const IncidenceFunction& f)
{
    if (auto x = f.non_unit_witness())
        throw Error(Errc::not_invertible, "not invertible: f(" + f.poset().label(*x) + "," +
                                              f.poset().label(*x) + ") = 0");
    const Poset& p = f.poset();
    IncidenceFunction g(p, f.field());
    const auto& ext = p.linear_extension();
    for (int x = 0; x < p.size(); ++x)
        g.set(x, x, f(x, x).inverse());
    // g(x,y) = -f(x,x)^{-1} * sum_{x<z<=y} f(x,z) g(z,y); walk x downwards so
    // every g(z,y) with z above x is already known.
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
        int x = *it;
        Scalar inv = g(x, x);
        for (int y : ext) {
            if (y == x || !p.leq(x, y))
                continue;
            Scalar sum = Scalar::zero(f.field());
            for (int z = 0; z < p.size(); ++z)
                if (z != x && p.leq(x, z) && p.leq(z, y))
                    sum += f(x, z) * g(z, y);
            g.set(x, y, -(inv * sum));
        }
    }
    return g;
}

Unit::Unit(IncidenceFunction f) : f_(std::move(f))
{
    if (auto x = f_.non_unit_witness())
        throw Error(Errc::not_invertible, "not a unit: vanishes at (" + f_.poset().label(*x) + "," +
                                              f_.poset().label(*x) + ")");
}

bool center_test(const IncidenceFunction& f)
{
    if (!f.is_diagonal())
        return false;
    const Poset& p = f.poset();
    for (const auto& comp : p.components())
        for (int x : comp)
            if (!(f(x, x) == f(comp.front(), comp.front())))
                return false;
    return true;
}

std::vector<IncidenceFunction> center_basis(const Poset& poset, Field field)
{
    std::vector<IncidenceFunction> out;
    for (const auto& comp : poset.components()) {
        IncidenceFunction e(poset, field);
        for (int x : comp)
            e.set(x, x, Scalar::one(field));
        out.push_back(std::move(e));
    }
    return out;
}

IncidenceFunction canonical_mod_center(const IncidenceFunction& u)
{
    if (auto x = u.non_unit_witness())
        throw Error(Errc::not_invertible, "canonical form of a non-unit (zero at " + u.poset().label(*x) + ")");
    const Poset& p = u.poset();
    std::vector<Scalar> scale;
    for (int j = 0; j < p.component_count(); ++j) {
        int a = p.component_anchor(j);
        scale.push_back(u(a, a).inverse());
    }
    IncidenceFunction r = u;
    for (int k = 0; k < p.pair_count(); ++k)
        r.set_entry(k, scale[p.component_of(p.pair_at(k).first)] * u.entry(k));
    return r;
}

IncidenceFunction restrict(const IncidenceFunction& f, const SubPoset& sub)
{
    IncidenceFunction r(sub.poset, f.field());
    for (int k = 0; k < sub.poset.pair_count(); ++k) {
        auto [x, y] = sub.poset.pair_at(k);
        r.set_entry(k, f(sub.embedding[x], sub.embedding[y]));
    }
    return r;
}

IncidenceFunction restrict(const IncidenceFunction& f, std::span<const int> components)
{
    return restrict(f, f.poset().restrict_to_components(components));
}

IncidenceFunction assemble(const Poset& poset, Field field,
                           std::span<const std::pair<SubPoset, IncidenceFunction>> blocks)
{
    IncidenceFunction r(poset, field);
    for (const auto& [sub, part] : blocks) {
        if (!(part.poset() == sub.poset))
            throw Error(Errc::poset_mismatch, "block is not defined on its sub-poset");
        for (int k = 0; k < sub.poset.pair_count(); ++k) {
            auto [x, y] = sub.poset.pair_at(k);
            r.set(sub.embedding[x], sub.embedding[y], part.entry(k));
        }
    }
    return r;
}

std::vector<IncidenceFunction> split_components(const IncidenceFunction& f)
{
    std::vector<IncidenceFunction> out;
    for (int j = 0; j < f.poset().component_count(); ++j) {
        int one[] = {j};
        out.push_back(restrict(f, one));
    }
    return out;
}

IncidenceFunction join_components(const Poset& poset, Field field, std::span<const IncidenceFunction> parts)
{
    if (parts.size() != static_cast<std::size_t>(poset.component_count()))
        throw Error(Errc::precondition_violated, "one part per component is required");
    std::vector<std::pair<SubPoset, IncidenceFunction>> blocks;
    for (int j = 0; j < poset.component_count(); ++j) {
        int one[] = {j};
        blocks.emplace_back(poset.restrict_to_components(one), parts[j]);
    }
    return assemble(poset, field, blocks);
}

} // namespace incalg
