#pragma once

#include <iosfwd>

namespace lattice_forge::cli {

/// Exit statuses of the command-line tool.
enum Exit : int
{
    Ok = 0,
    ViolationFound = 1,
    Usage = 2,
    Semantic = 3,
    ResourceCap = 4,
};

/// Entry point behind main(), callable from tests with captured streams.
auto run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) -> int;

}
