#pragma once

#include <lattice_forge/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lattice_forge {

/// The join-dependency relation of a lattice and everything derived from
/// it. All relations are indexed by position in `base`, not by lattice
/// element.
struct DependencyData
{
    std::vector<JoinIrreducible> base;

    /// p D q iff p != q and some x has p <= q v x but p !<= q_* v x.
    Relation dependency;
    /// Transitive closure of `dependency`.
    Relation strict_closure;
    /// Reflexive-transitive closure of `dependency`.
    Relation closure;

    /// Classes of the equivalence p ~ q iff p <= q <= p under `closure`,
    /// ordered by least position; members ascending.
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;

    auto position_of(std::size_t lattice_element) const -> std::optional<std::size_t>;

    /// `closure` as a quasi-order on the labels of the join-irreducibles.
    auto closure_order(const FiniteLattice& l) const -> QuasiOrder;
};

/// Computes D by the defining quantifier over every x in L, then the
/// closures by Warshall. Throws InvariantViolation if any of the
/// structural facts checked by dependency_invariant_violations fails.
auto join_dependency(const FiniteLattice& l) -> DependencyData;

/// Empty when the data satisfies: D irreflexive, p D q implies p !<= q,
/// the two closures determine each other, self-loops of the strict
/// closure are witnessed by a cycle partner, and no upper segment of the
/// reflexive closure has exactly two elements.
auto dependency_invariant_violations(const FiniteLattice& l, const DependencyData& d) -> std::vector<std::string>;

/// <p, I> with I given as ascending lattice elements.
struct MinimalPair
{
    std::size_t element;
    std::vector<std::size_t> cover;

    friend auto operator==(const MinimalPair&, const MinimalPair&) -> bool = default;
    friend auto operator<=>(const MinimalPair&, const MinimalPair&) = default;
};

/// All minimal pairs, sorted. Exponential in |J(L)|; capped by
/// Limits::max_minimal_pair_base.
auto minimal_pairs(const FiniteLattice& l, const Limits& limits = {}) -> std::vector<MinimalPair>;

/// {<p,q> | q in I for some minimal pair <p,I>}, on positions of J(L).
/// Equal to join_dependency(l).dependency.
auto dependency_via_minimal_pairs(const FiniteLattice& l, const Limits& limits = {}) -> Relation;

/// No cycle in D.
auto is_lower_bounded(const DependencyData& d) -> bool;
auto is_lower_bounded(const FiniteLattice& l) -> bool;

}
