#include <lattice_forge/limits.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace lattice_forge {

auto Limits::from_environment() -> Limits
{
    Limits limits;
    if (const char* env = std::getenv("LATTICE_FORGE_CAP")) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc() && *ptr == '\0' && value > 0)
            limits.max_lattice_elements = value;
    }
    return limits;
}

}
