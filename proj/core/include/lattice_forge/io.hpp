#pragma once

#include <lattice_forge/lattice.hpp>
#include <lattice_forge/limits.hpp>
#include <lattice_forge/order.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_forge {

enum class InstanceKind
{
    Poset,
    QuasiOrder,
    Lattice,
};

enum class Format
{
    Text,
    Json,
};

auto to_string(InstanceKind kind) -> const char*;

/// On-disk instance: a kind, the element labels and generating pairs. The
/// order is the reflexive-transitive closure of the pairs.
///
/// Text form (blank lines and '#' comments ignored):
///
///     poset            (or: kind poset)
///     elem a
///     elem b
///     rel a b
///
/// JSON form: {"kind": "poset", "elements": ["a","b"], "relation": [["a","b"]]}
struct InstanceFile
{
    InstanceKind kind = InstanceKind::Poset;
    std::vector<std::string> elements;
    std::vector<LabelPair> relation;
};

/// Auto-detects JSON (first non-blank character '{') or text. Throws
/// ParseError with a line number.
auto parse_instance(std::string_view text) -> InstanceFile;
auto read_instance_file(const std::filesystem::path& path) -> InstanceFile;

auto format_instance(const InstanceFile& instance, Format format) -> std::string;

/// Posets and lattices are written by their cover pairs; quasi-orders by
/// every off-diagonal pair.
auto instance_of(const Poset& p) -> InstanceFile;
auto instance_of(const QuasiOrder& q) -> InstanceFile;
auto instance_of(const FiniteLattice& l) -> InstanceFile;

auto to_poset(const InstanceFile& instance) -> Poset;
auto to_quasi_order(const InstanceFile& instance) -> QuasiOrder;
auto to_lattice(const InstanceFile& instance, const Limits& limits = {}) -> FiniteLattice;

/// Hasse diagram, cover edges only, drawn bottom to top.
auto to_dot(const Poset& p, std::string_view graph_name = "hasse") -> std::string;

}
