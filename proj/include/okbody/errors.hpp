#pragma once

#include <stdexcept>
#include <string>

namespace okbody {

// Malformed input text (scenario files, polynomial strings, rationals).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a model invariant
// (non-symmetric Gram matrix, degenerate conic flag, dimension mismatch, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation that cannot proceed on the given data (empty slice,
// divisor not pseudo-effective relative to the declared curves, ...).
class computation_error : public std::runtime_error {
public:
    explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace okbody
