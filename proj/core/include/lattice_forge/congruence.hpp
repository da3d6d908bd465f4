#pragma once

#include <lattice_forge/dependency.hpp>
#include <lattice_forge/lattice.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace lattice_forge {

/// A partition of the elements of a lattice. Class ids are normalized to
/// the least member index, so equal partitions compare equal.
class Congruence
{
  public:
    Congruence() = default;
    explicit Congruence(const std::vector<std::uint32_t>& class_of);

    static auto identity(std::size_t n) -> Congruence;
    static auto total(std::size_t n) -> Congruence;

    auto size() const -> std::size_t { return _class_of.size(); }
    auto class_of(std::size_t x) const -> std::size_t { return _class_of[x]; }
    auto class_ids() const -> const std::vector<std::uint32_t>& { return _class_of; }
    auto same(std::size_t a, std::size_t b) const -> bool { return _class_of[a] == _class_of[b]; }
    auto class_count() const -> std::size_t;
    auto classes() const -> std::vector<std::vector<std::size_t>>;

    /// Every class of *this lies inside a class of other.
    auto refines(const Congruence& other) const -> bool;

    friend auto operator==(const Congruence&, const Congruence&) -> bool = default;
    friend auto operator<=>(const Congruence&, const Congruence&) = default;

  private:
    std::vector<std::uint32_t> _class_of;
};

/// a = b implies a v c = b v c and a ^ c = b ^ c, for all c.
auto is_compatible(const FiniteLattice& l, const Congruence& c) -> bool;

/// Least congruence identifying a and b: union-find seeded with <a,b>;
/// each successful merge of <x,y> queues <x v c, y v c> and <x ^ c, y ^ c>
/// for every c, until nothing new merges.
auto principal_congruence(const FiniteLattice& l, std::size_t a, std::size_t b) -> Congruence;

/// Least congruence containing both, by re-running the same fixpoint on
/// the union of the two partitions.
auto congruence_join(const FiniteLattice& l, const Congruence& a, const Congruence& b) -> Congruence;

struct CongruenceLattice
{
    FiniteLattice lattice;
    /// congruences[i] is lattice element i. Index 0 is the identity.
    std::vector<Congruence> congruences;

    auto index_of(const Congruence& c) const -> std::optional<std::size_t>;
};

/// All congruences, as the join closure of {identity} and the Theta(p) for
/// p in J(L), ordered by refinement.
auto congruence_lattice(const FiniteLattice& l, const Limits& limits = {}) -> CongruenceLattice;

struct ThetaMap
{
    /// Theta(p) = congruence generated by <p_*, p>, per position of J(L).
    std::vector<Congruence> theta;
    /// Position of J(L) -> position in join_irreducibles(con.lattice).
    std::vector<std::size_t> image;
};

/// Throws InvariantViolation unless the map is onto J(Con L) and
/// Theta(p) <= Theta(q) exactly when p <= q in the closed dependency order.
auto theta_map(const FiniteLattice& l, const DependencyData& d, const CongruenceLattice& con) -> ThetaMap;
auto theta_map(const FiniteLattice& l, const Limits& limits = {}) -> ThetaMap;

/// J(Con L) as the quotient of the closed dependency order of J(L); no
/// congruence is computed.
auto con_ji_poset_fast(const FiniteLattice& l, const DependencyData& d) -> Poset;
auto con_ji_poset_fast(const FiniteLattice& l) -> Poset;

/// |J(L)| - |J(Con L)|, via the quotient path.
auto je(const FiniteLattice& l) -> std::size_t;
auto je(const DependencyData& d) -> std::size_t;

}
