#pragma once

#include <lattice_forge/order.hpp>

#include <vector>

namespace lattice_forge {

/// <bottom, top> where top is maximal and is the only upper cover of bottom.
struct Spike
{
    std::size_t bottom;
    std::size_t top;

    friend auto operator==(const Spike&, const Spike&) -> bool = default;
};

struct SpikeReport
{
    std::vector<Spike> spikes;   ///< sorted by bottom
    ElementSet boundary;         ///< tops of spikes
    ElementSet unique_boundary;  ///< tops of exactly one spike
    ElementSet multi_boundary;   ///< tops of two or more spikes
    std::size_t alpha = 0;       ///< |unique_boundary| + 2 |multi_boundary|
};

auto spike_report(const Poset& p) -> SpikeReport;

/// No spikes. Computed from the report and, independently, as "no upper
/// set {x | p <= x} has exactly two elements"; throws InvariantViolation if
/// the two disagree.
auto is_spike_free(const Poset& p) -> bool;

/// The least |J(L)| - |J(Con L)| over lattices L with Con L = H(p), which
/// is alpha(p).
auto join_excess(const Poset& p) -> std::size_t;

}
