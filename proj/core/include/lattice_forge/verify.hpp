#pragma once

#include <lattice_forge/limits.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lattice_forge {

struct Violation
{
    std::string description;
    /// The offending instance in the JSON instance format, for replay.
    std::string instance;
};

struct TheoremReport
{
    std::string theorem;
    std::string range;
    std::size_t instances = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    auto ok() const -> bool { return violations.empty(); }
};

struct SweepOptions
{
    /// Upper size bound; what it measures depends on the statement.
    std::size_t bound = 5;
    std::size_t jobs = 1;
    /// Extra seeded random quasi-orders for the closed-set round trip.
    std::size_t random_samples = 500;
    std::size_t random_max_size = 10;
    std::uint64_t seed = 20021;
    Limits limits = {};
};

struct TheoremInfo
{
    std::string_view id;
    std::string_view statement;
    std::string_view bound_meaning;
    std::size_t default_bound;
    std::size_t max_bound;
    /// False for fixed searches that take no size bound.
    bool bounded = true;
};

auto theorem_catalogue() -> const std::vector<TheoremInfo>&;

/// Sweeps the statement over every instance within the bound. Throws
/// Error(UnknownTheoremId) for an unknown id and SizeCapError when the
/// bound exceeds the statement's cap. Violations are listed in instance
/// order, independent of `jobs`.
auto check_theorem(std::string_view id, const SweepOptions& options) -> TheoremReport;

auto report_to_json(const TheoremReport& report) -> std::string;

}
