#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace csep {

// Malformed arguments, ids out of range, host mismatches.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Refusal of a deliberately exponential construction above its size guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A class assumption was violated. `witness` is printable text describing
// the offending structure (apple, cap, stable triple, prime atom, ...).
struct ClassError : std::runtime_error {
    explicit ClassError(const std::string& what, std::string witness_text = {})
        : std::runtime_error(what), witness(std::move(witness_text)) {}
    std::string witness;
};

struct EnumerationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace csep
