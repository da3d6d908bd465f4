#pragma once

#include <lattice_forge/lattice.hpp>
#include <lattice_forge/limits.hpp>
#include <lattice_forge/order.hpp>

#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace lattice_forge {

/// Collects relations up to isomorphism. Candidates are bucketed by a
/// cheap invariant and compared with relation_isomorphism inside a bucket.
class IsomorphismClassifier
{
  public:
    /// True if r is new (and is now remembered).
    auto insert(const Relation& r) -> bool;
    auto size() const -> std::size_t { return _count; }

  private:
    using Key = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, bool>>;
    std::map<Key, std::vector<Relation>> _buckets;
    std::size_t _count = 0;
};

/// One poset per isomorphism class on n elements, labelled a, b, c, ...
/// Output order is deterministic. Generated from naturally labelled posets
/// (every relation i <= j has i <= j as integers) and then deduplicated.
auto enumerate_posets(std::size_t n, const Limits& limits = {}) -> std::vector<Poset>;

/// One lattice per isomorphism class on n elements: posets on n - 2
/// elements with a bottom "0" and a top "1" adjoined, kept when they are
/// lattices. n = 1 gives the one-element lattice; n = 0 gives nothing.
auto enumerate_lattices(std::size_t n, const Limits& limits = {}) -> std::vector<FiniteLattice>;

/// One quasi-order per isomorphism class on n elements.
auto enumerate_quasi_orders(std::size_t n, const Limits& limits = {}) -> std::vector<QuasiOrder>;

/// Every intersection-closed family on {0..k-1} containing the empty set,
/// all singletons and the full set, as lattices. Labelled, not deduplicated.
auto enumerate_atomistic_closure_systems(std::size_t k, const Limits& limits = {}) -> std::vector<FiniteLattice>;

/// A quasi-order on between 1 and max_size elements: random classes and a
/// random acyclic order between them.
auto random_quasi_order(std::mt19937_64& rng, std::size_t max_size) -> QuasiOrder;

}
