#pragma once

#include <stdexcept>
#include <string>

namespace thrackle {

// Malformed input or violated precondition (CLI exit 2).
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A claimed layout, partition or drawing does not satisfy its invariants (CLI exit 1).
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive search refused because the input exceeds a configured cap (CLI exit 3).
struct SizeCapError : std::runtime_error {
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// A construction could not complete; this indicates a defect, not bad input.
struct ConstructionError : std::logic_error {
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

}  // namespace thrackle
