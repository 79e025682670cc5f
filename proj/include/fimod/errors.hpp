#pragma once

#include <stdexcept>
#include <string>

namespace fimod {

/// Base class for all engine errors. `code()` is stable and machine-readable;
/// the CLI maps it to a structured error report and a nonzero exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed input: bad parameters, mismatched shapes, ill-formed diagrams.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

/// An operation asked for data beyond the stored truncation window.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error("truncation-exceeded", what) {}
};

/// A theory/plugin lacks an optional capability (e.g. no envelope).
class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& what) : Error("capability", what) {}
};

/// A pluggable torsion theory violated its contract (e.g. non-functorial radical).
class PluginContractError : public Error {
public:
    explicit PluginContractError(const std::string& what) : Error("plugin-contract", what) {}
};

/// Internal consistency failure; indicates a bug, not bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal", what) {}
};

} // namespace fimod
