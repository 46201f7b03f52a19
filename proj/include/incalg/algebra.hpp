#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incalg/posets.hpp"
#include "incalg/scalars.hpp"

namespace incalg {

/// An element of the incidence algebra FI(X,K) of a finite poset: one scalar
/// per comparable pair x <= y, stored densely in the poset's basis order.
class IncidenceFunction {
public:
    /// The zero function.
    IncidenceFunction(Poset poset, Field field);

    static IncidenceFunction zero(const Poset& poset, Field field) { return {poset, field}; }
    /// The unity: 1 on the diagonal, 0 elsewhere.
    static IncidenceFunction delta(const Poset& poset, Field field);
    /// e_xy, the indicator of the single pair (x,y). Requires x <= y.
    static IncidenceFunction basis(const Poset& poset, Field field, int x, int y);
    static IncidenceFunction diagonal(const Poset& poset, std::span<const Scalar> values);
    static IncidenceFunction from_entries(const Poset& poset, std::vector<Scalar> entries);

    const Poset& poset() const { return poset_; }
    const Field& field() const { return field_; }

    /// f(x,y); zero when x is not <= y.
    Scalar operator()(int x, int y) const;
    /// Errc::precondition_violated when x is not <= y.
    void set(int x, int y, const Scalar& value);

    const std::vector<Scalar>& entries() const { return entries_; }
    const Scalar& entry(int k) const { return entries_[k]; }
    void set_entry(int k, const Scalar& value);

    bool is_unit() const;
    /// First x (in linear-extension order) with f(x,x) = 0.
    std::optional<int> non_unit_witness() const;
    bool is_diagonal() const;

    IncidenceFunction operator-() const;
    friend IncidenceFunction operator+(const IncidenceFunction& f, const IncidenceFunction& g);
    friend IncidenceFunction operator-(const IncidenceFunction& f, const IncidenceFunction& g);
    friend IncidenceFunction operator*(const Scalar& a, const IncidenceFunction& f);
    /// Convolution.
    friend IncidenceFunction operator*(const IncidenceFunction& f, const IncidenceFunction& g);

    friend bool operator==(const IncidenceFunction& f, const IncidenceFunction& g);

    /// "(a,a)=1 (b,b)=2 (a,b)=0" in basis order.
    std::string to_string() const;

private:
    Poset poset_;
    Field field_;
    std::vector<Scalar> entries_;
};

/// Errc::poset_mismatch / Errc::field_mismatch unless f and g live in the same algebra.
void require_same_algebra(const IncidenceFunction& f, const IncidenceFunction& g);

inline IncidenceFunction delta(const Poset& poset, Field field)
{
    return IncidenceFunction::delta(poset, field);
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/// Two-sided inverse; Errc::not_invertible naming an x with f(x,x) = 0.
IncidenceFunction invert(const IncidenceFunction& f);

/// An invertible incidence function.
class Unit {
public:
    /// Errc::not_invertible when some diagonal entry vanishes.
    explicit Unit(IncidenceFunction f);

    static Unit one(const Poset& poset, Field field) { return Unit(delta(poset, field)); }

    const IncidenceFunction& function() const { return f_; }
    operator const IncidenceFunction&() const { return f_; }
    const Poset& poset() const { return f_.poset(); }
    const Field& field() const { return f_.field(); }

    Unit inverse() const { return Unit(invert(f_)); }

    friend Unit operator*(const Unit& a, const Unit& b) { return Unit(a.f_ * b.f_); }
    friend bool operator==(const Unit& a, const Unit& b) { return a.f_ == b.f_; }

private:
    IncidenceFunction f_;
};

/// Diagonal and constant on every connected component.
bool center_test(const IncidenceFunction& f);

/// One indicator diagonal per connected component, in component order.
std::vector<IncidenceFunction> center_basis(const Poset& poset, Field field);

/// Scales each component so that u is 1 at the component's anchor diagonal;
/// the representative of u modulo central units. Requires a unit.
IncidenceFunction canonical_mod_center(const IncidenceFunction& u);

/// f_L = f restricted to X_L x X_L.
IncidenceFunction restrict(const IncidenceFunction& f, const SubPoset& sub);
IncidenceFunction restrict(const IncidenceFunction& f, std::span<const int> components);

/// The function on X equal to the given blocks on their X_L and zero
/// elsewhere. Blocks must be over pairwise disjoint component sets of poset.
IncidenceFunction assemble(const Poset& poset, Field field,
                           std::span<const std::pair<SubPoset, IncidenceFunction>> blocks);

/// f -> (f_j)_j over all connected components.
std::vector<IncidenceFunction> split_components(const IncidenceFunction& f);
/// Inverse of split_components.
IncidenceFunction join_components(const Poset& poset, Field field, std::span<const IncidenceFunction> parts);

} // namespace incalg
