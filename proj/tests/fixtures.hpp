#pragma once

#include <lattice_forge/lattice.hpp>
#include <lattice_forge/order.hpp>

#include <cstdint>
#include <vector>

namespace fixtures {

namespace lf = lattice_forge;

// 0 < a < b < 1, 0 < c < 1
inline auto n5() -> lf::FiniteLattice
{
    return lf::lattice_from_poset(lf::poset_from_pairs(
        {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
}

inline auto m3() -> lf::FiniteLattice
{
    return lf::lattice_from_poset(lf::poset_from_pairs({"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

inline auto boolean(std::size_t n) -> lf::FiniteLattice
{
    std::vector<std::uint32_t> all;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
        all.push_back(m);
    return lf::closure_system_lattice_from_masks(n, all);
}

inline auto chain_lattice(std::size_t n) -> lf::FiniteLattice
{
    return lf::lattice_from_poset(lf::chain(n));
}

// u, v < 1
inline auto uv1() -> lf::Poset
{
    return lf::poset_from_pairs({"u", "v", "1"}, {{"u", "1"}, {"v", "1"}});
}

// p < q < q0, q < q1
inline auto nosc() -> lf::Poset
{
    return lf::poset_from_pairs({"p", "q", "q0", "q1"}, {{"p", "q"}, {"q", "q0"}, {"q", "q1"}});
}

}
