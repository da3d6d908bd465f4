#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lattice_forge {

/// A subset of {0, ..., n-1}.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Iterate the members of an ElementSet in increasing order.
template <typename Fn>
void for_each_member(const ElementSet& set, Fn&& fn)
{
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
        fn(static_cast<std::size_t>(i));
}

std::vector<std::size_t> members(const ElementSet& set);

/// Binary relation on {0, ..., n-1}, stored as one bit row per element.
/// Row i holds the set {j | i R j}.
class Relation
{
  public:
    Relation() = default;
    explicit Relation(std::size_t n);

    static auto identity(std::size_t n) -> Relation;

    auto size() const -> std::size_t { return _rows.size(); }
    auto test(std::size_t i, std::size_t j) const -> bool { return _rows[i].test(j); }
    auto set(std::size_t i, std::size_t j, bool value = true) -> void { _rows[i].set(j, value); }
    auto row(std::size_t i) const -> const ElementSet& { return _rows[i]; }

    /// {j | j R i}
    auto column(std::size_t i) const -> ElementSet;

    auto transposed() const -> Relation;
    auto transitive_closure() const -> Relation;
    auto reflexive_transitive_closure() const -> Relation;
    auto without_diagonal() const -> Relation;

    auto is_reflexive() const -> bool;
    auto is_irreflexive() const -> bool;
    auto is_antisymmetric() const -> bool;
    auto is_transitive() const -> bool;

    auto pair_count() const -> std::size_t;

    friend auto operator==(const Relation&, const Relation&) -> bool = default;

  private:
    std::vector<ElementSet> _rows;
};

}
