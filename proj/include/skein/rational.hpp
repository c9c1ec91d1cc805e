#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skein {

// Exact rational coefficients. Intermediate coefficient growth in Gaussian
// elimination is unbounded, so these are arbitrary precision throughout.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(alpha, s)") {}
};

struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& what) : Error(what) {}
};

}  // namespace skein
