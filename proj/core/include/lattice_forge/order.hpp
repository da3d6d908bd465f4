#pragma once

#include <lattice_forge/relation.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lattice_forge {

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Tag for constructors that skip validation. Only for callers that built
/// the relation themselves and know it satisfies the invariants.
struct Trusted
{
};

/// A finite set of labelled elements with a reflexive, transitive relation.
/// Elements are addressed by dense index; labels are surface syntax.
class QuasiOrder
{
  public:
    QuasiOrder() = default;

    /// Throws std::invalid_argument unless labels are distinct, the sizes
    /// agree and the relation is reflexive and transitive.
    QuasiOrder(std::vector<std::string> labels, Relation qleq);
    QuasiOrder(Trusted, std::vector<std::string> labels, Relation qleq);

    auto size() const -> std::size_t { return _labels.size(); }
    auto label(std::size_t i) const -> const std::string& { return _labels[i]; }
    auto labels() const -> const std::vector<std::string>& { return _labels; }
    auto relation() const -> const Relation& { return _rel; }
    auto leq(std::size_t i, std::size_t j) const -> bool { return _rel.test(i, j); }
    auto equivalent(std::size_t i, std::size_t j) const -> bool { return leq(i, j) && leq(j, i); }
    auto index_of(const std::string& label) const -> std::optional<std::size_t>;

  protected:
    std::vector<std::string> _labels;
    Relation _rel;
};

/// A quasi-order that is also antisymmetric.
class Poset : public QuasiOrder
{
  public:
    Poset() = default;
    Poset(std::vector<std::string> labels, Relation leq);
    Poset(Trusted, std::vector<std::string> labels, Relation leq);

    auto less(std::size_t i, std::size_t j) const -> bool { return i != j && leq(i, j); }
    auto up_set(std::size_t i) const -> const ElementSet& { return _rel.row(i); }
    auto down_set(std::size_t i) const -> ElementSet { return _rel.column(i); }

    /// Viewing a poset as a quasi-order is always valid.
    auto as_quasi_order() const -> const QuasiOrder& { return *this; }
};

/// Reflexive-transitive closure of the pairs; fails with CycleError if
/// the closure is not antisymmetric.
auto poset_from_pairs(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs) -> Poset;

auto quasiorder_from_pairs(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs)
    -> QuasiOrder;

/// Index-based variant, for callers that already work with indices.
auto poset_from_index_pairs(std::vector<std::string> labels, const std::vector<IndexPair>& pairs) -> Poset;

/// Cover pairs <p,q>: p < q with nothing strictly between, sorted.
auto covers(const Poset& p) -> std::vector<IndexPair>;

/// {q | p is covered by q}
auto upper_covers(const Poset& p, std::size_t element) -> ElementSet;
auto lower_covers(const Poset& p, std::size_t element) -> ElementSet;

auto maximal_elements(const Poset& p) -> ElementSet;
auto minimal_elements(const Poset& p) -> ElementSet;

/// {x | p R x}
auto upper_segment(const QuasiOrder& q, std::size_t p) -> ElementSet;

/// Length of the longest strict chain ending at each element, computed on
/// the quotient by the associated equivalence (so it is defined for
/// quasi-orders as well).
auto heights(const Relation& quasi_order) -> std::vector<std::size_t>;

struct Quotient
{
    Poset poset;
    /// element index -> class index; classes are ordered by least member.
    std::vector<std::size_t> projection;
    std::vector<std::vector<std::size_t>> classes;
};

auto quotient_poset(const QuasiOrder& q) -> Quotient;

/// Bijection f with a R b iff f(a) S f(b), found by backtracking over
/// candidates that agree on (height, in-degree, out-degree). Works for any
/// pair of relations; posets and quasi-orders are the intended use.
auto relation_isomorphism(const Relation& a, const Relation& b) -> std::optional<std::vector<std::size_t>>;

auto is_isomorphic(const QuasiOrder& a, const QuasiOrder& b) -> std::optional<std::vector<std::size_t>>;

/// True iff f is a bijection with a R b iff f(a) S f(b).
auto is_isomorphism(const Relation& a, const Relation& b, const std::vector<std::size_t>& f) -> bool;

/// Labels in the style used for generated instances: a..z, then x26, x27...
auto generated_label(std::size_t i) -> std::string;

auto chain(std::size_t n) -> Poset;
auto antichain(std::size_t n) -> Poset;

}
