#pragma once

#include <lattice_forge/lattice.hpp>
#include <lattice_forge/limits.hpp>
#include <lattice_forge/order.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace lattice_forge {

enum class Provenance
{
    ClosedSets,  ///< closed subsets of a quasi-order
    Optimal,     ///< closed subsets of the optimal quasi-order over a poset
    Partition,   ///< closed subsets of the quasi-order realizing a partition
};

auto to_string(Provenance p) -> const char*;

/// An atomistic lattice together with the map from input elements onto
/// its atoms.
struct Realization
{
    FiniteLattice lattice;
    /// input element -> lattice element (the singleton {p})
    std::vector<std::size_t> atom_of;
    /// lattice element -> its closed subset, bit i = input element i
    std::vector<std::uint32_t> closed_sets;
    Provenance provenance;
};

struct ConditionCheck
{
    bool holds;
    /// Some p whose upper segment has exactly two elements.
    std::optional<std::size_t> witness;
};

/// No upper segment {x | p <= x} has exactly two elements.
auto check_condition_iii(const QuasiOrder& q) -> ConditionCheck;

/// X is closed when x != y in X and p <= x, p <= y force p into X.
auto is_closed(const QuasiOrder& q, const ElementSet& x) -> bool;

/// X together with every p below two distinct members of X. The result is
/// closed (a single round suffices); throws InvariantViolation otherwise.
auto one_step_closure(const QuasiOrder& q, const ElementSet& x) -> ElementSet;

/// The lattice of closed subsets of q. Requires check_condition_iii(q);
/// throws ConditionViolatedError otherwise. Postcondition, checked: the
/// atoms are the singletons and, through atom_of, the closed dependency
/// order of the atoms is q and the dependency relation is q minus the
/// diagonal.
auto closed_sets_lattice(const QuasiOrder& q, const Limits& limits = {}) -> Realization;

/// Where an element of the optimal quasi-order came from.
struct QElement
{
    std::size_t base;
    /// Copy number for doubled and tripled elements; empty for plain ones.
    std::optional<unsigned> copy;
};

/// The quasi-order that realizes a poset with the least number of
/// join-irreducibles. Spike bottoms under a unique spike top are doubled;
/// tops of several spikes are tripled; the rest are kept. x <= y in the
/// quasi-order iff their base elements compare in the poset.
struct OptimalQ
{
    QuasiOrder q;
    /// Q element -> base element of the poset.
    std::vector<std::size_t> projection;
    std::vector<QElement> origin;
    ElementSet plain;    ///< kept once
    ElementSet doubled;  ///< bottoms of spikes whose top has a single spike
    ElementSet tripled;  ///< tops of two or more spikes
};

/// Copies are labelled "<label>.0", "<label>.1", "<label>.2".
auto optimal_q(const Poset& p) -> OptimalQ;

/// Atomistic L with Con L = H(p) and |J(L)| = |p| + alpha(p). Checks the
/// count, J(Con L) = p through the quotient path, and Con L = H(p) through
/// the full congruence lattice; throws InvariantViolation on failure.
auto construct_optimal(const Poset& p, const Limits& limits = {}) -> Realization;

/// Quasi-order whose associated equivalence is the given partition and
/// which satisfies the segment condition: x <= y iff x ~ y, or x lies in a
/// two-element class and y ~ a, where a is the least element whose class
/// does not have two elements. Throws Error(AllClassesSize2) when every
/// class has exactly two elements.
auto realize_partition(const std::vector<std::string>& labels, const std::vector<std::size_t>& class_of)
    -> QuasiOrder;

}
