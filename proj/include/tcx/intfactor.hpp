#ifndef TCX_INTFACTOR_HPP
#define TCX_INTFACTOR_HPP

#include <map>
#include <vector>

#include "tcx/rational.hpp"

namespace tcx {

// Deterministic integer factorization: trial division for small factors,
// Miller-Rabin + Brent's rho for the rest. Inputs here are determinant
// products of small rationals, so this is never the bottleneck.

inline Int mod_pow(Int base, Int exp, const Int& mod) {
    Int r = 1;
    base %= mod;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++s; }
    // deterministic witness set for n < 3.3e24
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (unsigned long i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

inline Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    // deterministic parameter sweep
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int q = 1;
        int iter = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = q * diff % n;
            if (++iter % 32 == 0) {
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d == 1) {
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) return d;
    }
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) { out[p] += 1; n /= p; }
    }
    if (n == 1) return;
    if (is_prime(n)) { out[n] += 1; return; }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// |q| = prod p^e over primes; sign handled by the caller. q must be nonzero.
inline std::map<Int, int> factor_rational_abs(const Rat& q) {
    if (q == 0) throw DomainError("factor of zero");
    std::map<Int, int> out;
    factor_into(q.get_num(), out);
    std::map<Int, int> den;
    factor_into(q.get_den(), den);
    for (auto& [p, e] : den) out[p] -= e;
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

} // namespace tcx

#endif
