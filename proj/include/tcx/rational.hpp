#ifndef TCX_RATIONAL_HPP
#define TCX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tcx {

/// Exact rational numbers. mpq_class already maintains the canonical form
/// (gcd-reduced, positive denominator, 0 = 0/1), which is exactly the
/// invariant we need, so Rat is an alias rather than a wrapper.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// "num/den" or "num"; den omitted when 1. Used by fixtures and reports.
inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline std::optional<Rat> rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rat(q);
}

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tcx

#endif
