#include <lattice_forge/error.hpp>

#include <sstream>

namespace lattice_forge {

namespace {
    auto join_labels(const std::vector<std::string>& labels, const char* sep) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i)
                out += sep;
            out += labels[i];
        }
        return out;
    }
}

auto to_string(ErrorCode code) -> const char*
{
    switch (code) {
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::CycleViolatesAntisymmetry: return "CycleViolatesAntisymmetry";
        case ErrorCode::NotALattice: return "NotALattice";
        case ErrorCode::NotIntersectionClosed: return "NotIntersectionClosed";
        case ErrorCode::MissingTop: return "MissingTop";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::ConditionIIIViolated: return "ConditionIIIViolated";
        case ErrorCode::AllClassesSize2: return "AllClassesSize2";
        case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

CycleError::CycleError(std::vector<std::string> cycle) :
    Error(ErrorCode::CycleViolatesAntisymmetry,
        "relation is not antisymmetric; cycle: " + join_labels(cycle, " -> ")),
    _cycle(std::move(cycle))
{
}

namespace {
    auto not_a_lattice_message(NotALatticeError::Missing missing, const std::string& a, const std::string& b,
        const std::vector<std::string>& witnesses) -> std::string
    {
        std::ostringstream s;
        switch (missing) {
            case NotALatticeError::Missing::Bottom:
                s << "not a lattice: no least element";
                break;
            case NotALatticeError::Missing::Join:
                s << "not a lattice: " << a << " and " << b << " have no join; minimal upper bounds: {"
                  << join_labels(witnesses, ",") << "}";
                break;
            case NotALatticeError::Missing::Meet:
                s << "not a lattice: " << a << " and " << b << " have no meet; maximal lower bounds: {"
                  << join_labels(witnesses, ",") << "}";
                break;
        }
        return s.str();
    }
}

NotALatticeError::NotALatticeError(Missing missing, std::string a, std::string b, std::vector<std::string> witnesses) :
    Error(ErrorCode::NotALattice, not_a_lattice_message(missing, a, b, witnesses)),
    _missing(missing),
    _a(std::move(a)),
    _b(std::move(b)),
    _witnesses(std::move(witnesses))
{
}

ConditionViolatedError::ConditionViolatedError(std::size_t witness, std::string label, std::vector<std::string> segment) :
    Error(ErrorCode::ConditionIIIViolated,
        "upper segment of " + label + " has exactly two elements: {" + join_labels(segment, ",") + "}"),
    _witness(witness),
    _label(std::move(label)),
    _segment(std::move(segment))
{
}

SizeCapError::SizeCapError(std::string what, std::size_t requested, std::size_t cap) :
    Error(ErrorCode::SizeCapExceeded,
        what + ": size " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
    _requested(requested),
    _cap(cap)
{
}

ParseError::ParseError(std::size_t line, std::string message) :
    Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message), _line(line)
{
}

}
