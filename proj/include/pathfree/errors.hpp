#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathfree {

/// Malformed edge-list or generator text. `line` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument outside the domain of an operation (bad ids, bad parameter ranges).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A stated precondition of an engine does not hold on the given input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A callback (finder, divider, provider) returned something that breaks its contract.
class ContractError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An inequality the constructive argument relies on failed at runtime. On
/// contract-respecting inputs this indicates a bug.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A generator could not produce a graph with the requested property.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact oracle was asked to run beyond its configured size cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An induced P_k surfaced inside a pipeline that assumes the input is
/// P_k-free. `path` is in the thrower's vertex ids; callers lift it.
class PathFound : public std::runtime_error {
public:
    explicit PathFound(std::vector<std::uint32_t> path)
        : std::runtime_error("input contains an induced path on " + std::to_string(path.size()) + " vertices"),
          path(std::move(path)) {}

    std::vector<std::uint32_t> path;
};

#if PATHFREE_PROOF_CHECKS
inline void proof_check(bool condition, const char * what)
{
    if (!condition)
        throw InternalContradiction(what);
}
#else
inline void proof_check(bool, const char *) {}
#endif

} // namespace pathfree
