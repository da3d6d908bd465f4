#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattice_forge {

enum class ErrorCode
{
    DuplicateLabel,
    UnknownLabel,
    CycleViolatesAntisymmetry,
    NotALattice,
    NotIntersectionClosed,
    MissingTop,
    SizeCapExceeded,
    ConditionIIIViolated,
    AllClassesSize2,
    UnknownTheoremId,
    ParseError,
};

auto to_string(ErrorCode code) -> const char*;

/// Base of every error raised by the library. The code is what callers
/// dispatch on; the message is for humans.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& message) :
        std::runtime_error(message), _code(code)
    {
    }

    auto code() const -> ErrorCode { return _code; }

  private:
    ErrorCode _code;
};

class CycleError : public Error
{
  public:
    CycleError(std::vector<std::string> cycle);
    auto cycle() const -> const std::vector<std::string>& { return _cycle; }

  private:
    std::vector<std::string> _cycle;
};

/// A pair with no join (or no meet), with the incomparable minimal upper
/// bounds (or maximal lower bounds) that witness the failure.
class NotALatticeError : public Error
{
  public:
    enum class Missing { Join, Meet, Bottom };

    NotALatticeError(Missing missing, std::string a, std::string b, std::vector<std::string> witnesses);

    auto missing() const -> Missing { return _missing; }
    auto first() const -> const std::string& { return _a; }
    auto second() const -> const std::string& { return _b; }
    auto witnesses() const -> const std::vector<std::string>& { return _witnesses; }

  private:
    Missing _missing;
    std::string _a, _b;
    std::vector<std::string> _witnesses;
};

class ConditionViolatedError : public Error
{
  public:
    ConditionViolatedError(std::size_t witness, std::string label, std::vector<std::string> segment);

    auto witness() const -> std::size_t { return _witness; }
    auto witness_label() const -> const std::string& { return _label; }
    auto segment() const -> const std::vector<std::string>& { return _segment; }

  private:
    std::size_t _witness;
    std::string _label;
    std::vector<std::string> _segment;
};

class SizeCapError : public Error
{
  public:
    SizeCapError(std::string what, std::size_t requested, std::size_t cap);

    auto requested() const -> std::size_t { return _requested; }
    auto cap() const -> std::size_t { return _cap; }

  private:
    std::size_t _requested, _cap;
};

class ParseError : public Error
{
  public:
    ParseError(std::size_t line, std::string message);
    auto line() const -> std::size_t { return _line; }

  private:
    std::size_t _line;
};

/// Raised when a postcondition that a theorem guarantees fails to hold.
/// Seeing one means a bug in this library, not bad input.
class InvariantViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

}
