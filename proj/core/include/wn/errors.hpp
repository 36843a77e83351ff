#pragma once

#include <stdexcept>
#include <string>

namespace wn {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Incompatible dimensions (column counts, ambient spaces, ranks).
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Rank parameter outside the supported range (n >= 2).
class UnsupportedRank : public Error {
public:
    explicit UnsupportedRank(const std::string& what) : Error(what) {}
};

/// A computation would exceed the configured resource cap.  Callers that
/// build tables catch this and mark the table truncated instead of failing.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

/// Malformed or out-of-contract input (weights, basis labels, points).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

} // namespace wn
