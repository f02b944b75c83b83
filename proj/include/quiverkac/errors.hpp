#pragma once

#include <stdexcept>
#include <string>

namespace qk {

// Input file or CLI argument does not match the expected schema.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically invalid request (reflection at a loop vertex, negative
// dimension entry, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured enumeration budget was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed; indicates a bug, not bad input.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qk
