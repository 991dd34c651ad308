#pragma once

#include <stdexcept>
#include <string>

namespace qc {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// p is not an odd prime, or primes of two operands disagree.
struct invalid_prime_error : error {
    explicit invalid_prime_error(const std::string& msg) : error(msg) {}
};

// Operation applied outside its mathematical domain (log of zero,
// group law at the point at infinity, curve with vanishing discriminant, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A result cannot be certified at the requested precision.  Carries a hint
// for how much more working precision (or series truncation) is needed.
struct precision_error : error {
    explicit precision_error(const std::string& msg) : error(msg) {}
};

// Division of series with non-cancelling leading zeros and similar.
struct singularity_error : error {
    explicit singularity_error(const std::string& msg) : error(msg) {}
};

// Bad user-supplied data (unknown label, malformed point, missing generator).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

} // namespace qc
