#include <lattice_forge/error.hpp>
#include <lattice_forge/spike.hpp>

namespace lattice_forge {

auto spike_report(const Poset& p) -> SpikeReport
{
    const auto n = p.size();
    SpikeReport r{{}, ElementSet(n), ElementSet(n), ElementSet(n), 0};
    auto maximal = maximal_elements(p);
    std::vector<std::size_t> bottoms_per_top(n, 0);

    for (std::size_t x = 0; x < n; ++x) {
        auto up = upper_covers(p, x);
        if (up.count() != 1)
            continue;
        auto top = up.find_first();
        if (! maximal.test(top))
            continue;
        r.spikes.push_back({x, top});
        r.boundary.set(top);
        ++bottoms_per_top[top];
    }

    for (std::size_t q = 0; q < n; ++q) {
        if (bottoms_per_top[q] == 1)
            r.unique_boundary.set(q);
        else if (bottoms_per_top[q] >= 2)
            r.multi_boundary.set(q);
    }
    r.alpha = r.unique_boundary.count() + 2 * r.multi_boundary.count();
    return r;
}

auto is_spike_free(const Poset& p) -> bool
{
    bool by_report = spike_report(p).spikes.empty();
    bool by_segments = true;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.up_set(x).count() == 2)
            by_segments = false;
    if (by_report != by_segments)
        throw InvariantViolation("spike detection disagrees with the upper-set criterion");
    return by_report;
}

auto join_excess(const Poset& p) -> std::size_t
{
    return spike_report(p).alpha;
}

}
