#pragma once

#include <lattice_forge/limits.hpp>
#include <lattice_forge/order.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace lattice_forge {

/// A finite lattice: a validated poset with materialized join and meet
/// tables. Immutable once built.
class FiniteLattice
{
  public:
    FiniteLattice(Trusted, Poset order, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet,
        std::size_t bottom, std::size_t top);

    auto size() const -> std::size_t { return _order.size(); }
    auto order() const -> const Poset& { return _order; }
    auto label(std::size_t i) const -> const std::string& { return _order.label(i); }
    auto leq(std::size_t a, std::size_t b) const -> bool { return _order.leq(a, b); }
    auto less(std::size_t a, std::size_t b) const -> bool { return _order.less(a, b); }
    auto join(std::size_t a, std::size_t b) const -> std::size_t { return _join[a * size() + b]; }
    auto meet(std::size_t a, std::size_t b) const -> std::size_t { return _meet[a * size() + b]; }
    auto bottom() const -> std::size_t { return _bottom; }
    auto top() const -> std::size_t { return _top; }

    /// Join of a set of elements; the empty join is bottom.
    auto join_of(const ElementSet& elements) const -> std::size_t;
    auto join_of(std::span<const std::size_t> elements) const -> std::size_t;

  private:
    Poset _order;
    std::vector<std::uint32_t> _join, _meet;
    std::size_t _bottom, _top;
};

/// Fails with NotALatticeError (carrying a witness pair) unless every pair
/// has a least upper bound and a greatest lower bound.
auto lattice_from_poset(const Poset& p, const Limits& limits = {}) -> FiniteLattice;

struct JoinIrreducible
{
    std::size_t element;
    std::size_t lower_cover;

    friend auto operator==(const JoinIrreducible&, const JoinIrreducible&) -> bool = default;
};

/// Elements with exactly one lower cover, in index order.
auto join_irreducibles(const FiniteLattice& l) -> std::vector<JoinIrreducible>;

/// J(L) with the order induced from L, labelled as in L.
auto join_irreducible_poset(const FiniteLattice& l) -> Poset;

auto atoms(const FiniteLattice& l) -> ElementSet;
auto is_atomistic(const FiniteLattice& l) -> bool;

/// For all a <= b there is c with a meet c = 0 and a join c = b.
auto is_sectionally_complemented(const FiniteLattice& l) -> bool;

auto is_distributive(const FiniteLattice& l) -> bool;

/// The lattice of a family of subsets of a ground set of size n, ordered by
/// containment. The family must contain the ground set and be closed under
/// intersection. Elements are sorted by their subsets read as integers
/// (bit i = ground element i). Labels look like "{a,c}".
auto closure_system_lattice(std::size_t ground_size, std::span<const ElementSet> family,
    const std::vector<std::string>& ground_labels = {}, const Limits& limits = {}) -> FiniteLattice;

/// Same, with subsets given as bit masks. Used by the enumerators and
/// constructions, which already work on masks.
auto closure_system_lattice_from_masks(std::size_t ground_size, std::vector<std::uint32_t> family,
    const std::vector<std::string>& ground_labels = {}, const Limits& limits = {}) -> FiniteLattice;

/// The distributive lattice of down-closed subsets of p.
auto hereditary_lattice(const Poset& p, const Limits& limits = {}) -> FiniteLattice;

auto subset_label(std::uint32_t mask, const std::vector<std::string>& ground_labels) -> std::string;

}
