#pragma once

#include <cstddef>

namespace lattice_forge {

/// Resource caps. Every exponential step checks one of these and raises
/// SizeCapError rather than running away.
struct Limits
{
    /// Ground-set size for anything that scans all 2^n subsets
    /// (hereditary subsets, closed subsets, closure systems).
    std::size_t max_ground = 20;

    /// Elements of a FiniteLattice; join/meet tables are n^2.
    std::size_t max_lattice_elements = 4096;

    /// |J(L)| bound for minimal-pair enumeration.
    std::size_t max_minimal_pair_base = 16;

    std::size_t max_poset_enumeration = 7;
    std::size_t max_lattice_enumeration = 8;
    std::size_t max_closure_atoms = 4;

    /// Defaults, with max_lattice_elements taken from LATTICE_FORGE_CAP
    /// when that variable holds a positive integer.
    static auto from_environment() -> Limits;
};

}
