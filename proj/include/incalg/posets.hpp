#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incalg/error.hpp"

namespace incalg {

/// Default cap on |X| for exhaustive map enumeration.
inline constexpr int default_max_poset_size = 10;

struct SubPoset;

/// A finite poset. Elements are indices 0..n-1 in declaration order; labels
/// are kept for I/O. Cheap to copy (shared immutable state).
///
/// Incidence functions are stored densely over the relation, in "basis
/// order": the diagonal pairs (x,x) along a fixed linear extension, followed
/// by the strict pairs x < y sorted by the positions of x and y in that
/// extension.
class Poset {
public:
    /// Builds the reflexive-transitive closure of the generating pairs.
    /// Errors: duplicate_label, unknown_label, cycle_detected.
    static Poset build(std::vector<std::string> labels,
                       std::span<const std::pair<std::string, std::string>> generators);
    static Poset from_indices(std::vector<std::string> labels,
                              std::span<const std::pair<int, int>> generators);

    /// a < b < c < ... on n elements labelled a, b, c, ...
    static Poset chain(int n);
    static Poset antichain(int n);
    /// Disjoint union; the labels of both operands must be distinct.
    static Poset disjoint_union(const Poset& a, const Poset& b);

    int size() const;
    const std::string& label(int x) const;
    const std::vector<std::string>& labels() const;
    /// Errc::unknown_label when absent.
    int index_of(std::string_view label) const;
    std::optional<int> find(std::string_view label) const;

    bool leq(int x, int y) const;
    bool less(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    /// Covering pairs x < y with nothing strictly between, sorted.
    const std::vector<std::pair<int, int>>& covers() const;
    bool is_cover(int x, int y) const;

    const std::vector<int>& linear_extension() const;

    int pair_count() const;
    int diagonal_count() const { return size(); }
    /// Position of (x,y) in basis order, or -1 when x is not <= y.
    int pair_index(int x, int y) const;
    std::pair<int, int> pair_at(int k) const;

    int component_count() const;
    int component_of(int x) const;
    /// Components are numbered by their smallest element index.
    const std::vector<std::vector<int>>& components() const;
    /// The smallest element index of component j.
    int component_anchor(int j) const { return components()[j].front(); }

    std::vector<int> down_set(int x) const;
    std::vector<int> up_set(int x) const;

    /// Same labels and same relation.
    friend bool operator==(const Poset& a, const Poset& b);
    bool same_instance(const Poset& other) const { return impl_ == other.impl_; }

    /// X_L for a nonempty set L of component indices.
    SubPoset restrict_to_components(std::span<const int> components) const;

    std::string describe() const;

private:
    struct Impl;
    explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// X_L together with its embedding into X.
struct SubPoset {
    Poset poset;
    /// Sub-poset index -> parent index, increasing.
    std::vector<int> embedding;
    /// Parent index -> sub-poset index, or -1.
    std::vector<int> projection;
    /// L, sorted.
    std::vector<int> components;
};

/// [x,y] = { z : x <= z <= y }, empty when x is not <= y.
std::vector<int> interval(const Poset& p, int x, int y);
std::vector<int> all_comparable_elements(const Poset& p);

enum class MapKind { automorphism, anti_automorphism };

/// An order-preserving or order-reversing bijection of a poset onto itself.
class PosetMap {
public:
    /// Errc::invalid_map if the assignment is not a bijection of the stated kind.
    PosetMap(Poset poset, std::vector<int> images, MapKind kind);

    static PosetMap identity(const Poset& poset);

    const Poset& poset() const { return poset_; }
    MapKind kind() const { return kind_; }
    const std::vector<int>& images() const { return images_; }
    int operator()(int x) const { return images_[x]; }

    PosetMap inverse() const;
    bool is_identity() const;
    /// Anti-automorphism of order two.
    bool is_involution() const;
    std::vector<int> fixed_points() const;

    /// Image of a set of elements, sorted.
    std::vector<int> image_of(std::span<const int> elements) const;

    /// Restriction to X_L; Errc::not_stable unless the map sends X_L onto itself.
    PosetMap restrict_to(const SubPoset& sub) const;

    std::string to_string() const;

    friend bool operator==(const PosetMap& a, const PosetMap& b);

private:
    Poset poset_;
    std::vector<int> images_;
    MapKind kind_;
};

/// outer ∘ inner. The kind is automorphism iff both kinds agree.
PosetMap compose(const PosetMap& outer, const PosetMap& inner);

/// All automorphisms or anti-automorphisms (only those of order two when
/// order_two_only is set), in lexicographic order of the image vector.
/// Errc::size_bound_exceeded when |X| > max_size.
std::vector<PosetMap> enumerate_maps(const Poset& p, MapKind kind, bool order_two_only,
                                     int max_size = default_max_poset_size);

inline std::vector<PosetMap> automorphisms(const Poset& p, int max_size = default_max_poset_size)
{
    return enumerate_maps(p, MapKind::automorphism, false, max_size);
}

inline std::vector<PosetMap> poset_involutions(const Poset& p, int max_size = default_max_poset_size)
{
    return enumerate_maps(p, MapKind::anti_automorphism, true, max_size);
}

/// A triple (X1, X2, X3) for an involution λ: X3 the fixed points, λ swapping
/// X1 and X2, X1 a down-set and X2 an up-set.
struct LambdaDecomposition {
    std::vector<int> x1, x2, x3;
};

/// Canonical decomposition by constraint propagation. Orbits left free by the
/// propagation put their lexicographically least label into X1.
/// Errc::not_an_involution, Errc::internal_inconsistency.
LambdaDecomposition lambda_decomposition(const PosetMap& lambda);

/// Checks the three defining conditions literally.
bool is_lambda_decomposition(const PosetMap& lambda, const LambdaDecomposition& d);

/// The involution induced by λ on the component index set J.
struct ComponentInvolution {
    struct PSets {
        int component = 0;
        std::vector<int> p1, p2, p3;
    };

    std::vector<int> lambda_bar;
    /// Components mapped onto themselves.
    std::vector<int> j3;
    /// Those components of j3 without λ-fixed points.
    std::vector<int> j3_prime;
    /// One entry per element of j3, in the same order.
    std::vector<PSets> p_sets;

    bool is_fixed(int j) const { return lambda_bar[j] == j; }
};

/// Errc::not_an_involution.
ComponentInvolution component_involution(const PosetMap& lambda);

/// An automorphism α with α∘λ = μ∘α, if one exists (first in enumeration order).
std::optional<PosetMap> poset_involutions_conjugate(const PosetMap& lambda, const PosetMap& mu,
                                                    int max_size = default_max_poset_size);

/// One representative per isomorphism class of posets on exactly n elements,
/// labelled a, b, c, ... along a linear extension. Supported for n <= 6.
std::vector<Poset> posets_up_to_isomorphism(int n);

} // namespace incalg
