#ifndef TCX_TRUNCPOLY_HPP
#define TCX_TRUNCPOLY_HPP

#include <vector>

#include "tcx/scalar.hpp"

namespace tcx {

/// Element of F[eps]_nu = F[eps]/eps^nu as the coefficient sequence
/// (c0, ..., c_{nu-1}). Arithmetic truncates at eps^nu.
class TruncPoly {
  public:
    TruncPoly() = default;
    TruncPoly(int nu, std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        if (nu < 1) throw DomainError("nu must be >= 1");
        c_.resize(nu);
    }
    static TruncPoly constant(int nu, const Scalar& v) {
        TruncPoly p;
        p.c_.assign(nu, Scalar());
        p.c_[0] = v;
        return p;
    }
    static TruncPoly one(int nu) { return constant(nu, Scalar(Rat(1))); }

    int nu() const { return static_cast<int>(c_.size()); }
    const Scalar& operator[](int k) const { return c_.at(k); }
    Scalar& operator[](int k) { return c_.at(k); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

    friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
        check(a, b);
        TruncPoly r = a;
        for (int k = 0; k < r.nu(); ++k) r.c_[k] = r.c_[k] + b.c_[k];
        return r;
    }
    friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
        check(a, b);
        TruncPoly r = a;
        for (int k = 0; k < r.nu(); ++k) r.c_[k] = r.c_[k] - b.c_[k];
        return r;
    }
    TruncPoly operator-() const {
        TruncPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    /// Cauchy product truncated at eps^nu
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
        check(a, b);
        TruncPoly r;
        r.c_.assign(a.nu(), Scalar());
        for (int i = 0; i < a.nu(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j < a.nu(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    bool operator==(const TruncPoly& o) const { return c_ == o.c_; }

  private:
    std::vector<Scalar> c_;
    static void check(const TruncPoly& a, const TruncPoly& b) {
        if (a.nu() != b.nu()) throw DomainError("mismatched truncation orders");
    }
};

inline TruncPoly trunc_mul(const TruncPoly& p, const TruncPoly& q) { return p * q; }

/// inverse of a unit by the triangular recurrence
/// inv_0 = 1/p_0, inv_k = -(sum_{j=1..k} p_j inv_{k-j}) / p_0
inline TruncPoly trunc_inv(const TruncPoly& p) {
    if (!p.is_unit()) throw DomainError("trunc_inv of a non-unit");
    std::vector<Scalar> inv(p.nu());
    inv[0] = Scalar(Rat(1)) / p[0];
    for (int k = 1; k < p.nu(); ++k) {
        Scalar s;
        for (int j = 1; j <= k; ++j) s = s + p[j] * inv[k - j];
        inv[k] = -s / p[0];
    }
    return TruncPoly(p.nu(), std::move(inv));
}

inline Scalar eps_coeff(const TruncPoly& p, int k) {
    if (k < 0 || k >= p.nu()) throw DomainError("eps_coeff index out of range");
    return p[k];
}

/// (pq)_{eps^n} = sum_k p_{eps^k} q_{eps^{n-k}}
inline Scalar convolve_coeff(const TruncPoly& p, const TruncPoly& q, int n) {
    if (n < 0 || n >= p.nu() || p.nu() != q.nu())
        throw DomainError("convolve_coeff index out of range");
    Scalar s;
    for (int k = 0; k <= n; ++k) s = s + p[k] * q[n - k];
    return s;
}

/// lambda * (a + a' eps) = a + lambda a' eps; defined only on F[eps]_2
inline TruncPoly star_action(const Scalar& lambda, const TruncPoly& p) {
    if (p.nu() != 2) throw DomainError("star action is defined on F[eps]_2 only");
    if (lambda.is_zero()) throw DomainError("star action by zero");
    return TruncPoly(2, {p[0], lambda * p[1]});
}

inline std::string trunc_to_string(const TruncPoly& p) {
    std::string s;
    for (int k = 0; k < p.nu(); ++k) {
        if (p[k].is_zero() && !(k == 0 && p.is_zero())) continue;
        std::string c = p[k].str();
        bool needs_paren = c.find_first_of("+-") != std::string::npos && c.find_first_of("+-") > 0;
        if (k > 0 && (needs_paren || c.find('/') != std::string::npos)) c = "(" + c + ")";
        std::string mono = k == 0 ? "" : k == 1 ? "eps" : "eps^" + std::to_string(k);
        std::string piece = k == 0 ? c : (c == "1" ? mono : c + "*" + mono);
        if (s.empty()) {
            s = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            s += " - " + piece.substr(1);
        } else {
            s += " + " + piece;
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace tcx

#endif
