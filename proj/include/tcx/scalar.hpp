#ifndef TCX_SCALAR_HPP
#define TCX_SCALAR_HPP

#include <memory>

#include "tcx/poly.hpp"

namespace tcx {

/// Element of the base field F: an exact rational, or a multivariate rational
/// function over Q in canonical form (numerator/denominator coprime,
/// denominator integer-primitive with positive leading coefficient under
/// graded lex). Canonical form is unique, so equality is structural.
class Scalar {
  public:
    Scalar() : q_(0) {}
    Scalar(const Rat& q) : q_(q) {}
    Scalar(long n) : q_(n) {}
    static Scalar variable(const std::string& name) {
        return make(Poly::variable(var_id(name)), Poly(Rat(1)));
    }
    static Scalar from_fraction(Poly num, Poly den) { return make(std::move(num), std::move(den)); }

    bool is_rational() const { return sym_ == nullptr; }
    bool is_zero() const { return sym_ == nullptr && q_ == 0; }
    bool is_one() const { return sym_ == nullptr && q_ == 1; }
    const Rat& rational() const { return q_; }
    const Poly& num() const { return sym_->num; }
    const Poly& den() const { return sym_->den; }

    Poly num_poly() const { return sym_ ? sym_->num : Poly(q_); }
    Poly den_poly() const { return sym_ ? sym_->den : Poly(Rat(1)); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.sym_ == nullptr && b.sym_ == nullptr) return Scalar(a.q_ + b.q_);
        return make(a.num_poly() * b.den_poly() + b.num_poly() * a.den_poly(),
                    a.den_poly() * b.den_poly());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.sym_ == nullptr && b.sym_ == nullptr) return Scalar(a.q_ - b.q_);
        return make(a.num_poly() * b.den_poly() - b.num_poly() * a.den_poly(),
                    a.den_poly() * b.den_poly());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.sym_ == nullptr && b.sym_ == nullptr) return Scalar(a.q_ * b.q_);
        if (a.is_zero() || b.is_zero()) return Scalar();
        return make(a.num_poly() * b.num_poly(), a.den_poly() * b.den_poly());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DomainError("scalar division by zero");
        if (a.sym_ == nullptr && b.sym_ == nullptr) return Scalar(a.q_ / b.q_);
        return make(a.num_poly() * b.den_poly(), a.den_poly() * b.num_poly());
    }
    Scalar operator-() const {
        if (sym_ == nullptr) return Scalar(-q_);
        return make(-sym_->num, sym_->den);
    }
    Scalar inverse() const { return Scalar(Rat(1)) / *this; }

    bool operator==(const Scalar& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Scalar& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Scalar& o) const { return cmp(*this, o) < 0; }

    /// total order: rationals (by value) before symbolic (structural)
    static int cmp(const Scalar& a, const Scalar& b) {
        if (a.sym_ == nullptr && b.sym_ == nullptr) {
            int c = ::cmp(a.q_, b.q_);
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        if (a.sym_ == nullptr) return -1;
        if (b.sym_ == nullptr) return 1;
        int c = Poly::cmp(a.sym_->num, b.sym_->num);
        if (c != 0) return c;
        return Poly::cmp(a.sym_->den, b.sym_->den);
    }

    std::string str() const {
        if (sym_ == nullptr) return rat_to_string(q_);
        std::string n = poly_to_string(sym_->num);
        if (sym_->den == Poly(Rat(1))) {
            return sym_->num.t.size() > 1 ? n : n;
        }
        std::string d = poly_to_string(sym_->den);
        if (sym_->num.t.size() > 1) n = "(" + n + ")";
        if (sym_->den.t.size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    struct Rep {
        Poly num, den;
    };
    Rat q_;
    std::shared_ptr<const Rep> sym_;

    static Scalar make(Poly num, Poly den) {
        if (den.is_zero()) throw DomainError("scalar with zero denominator");
        if (num.is_zero()) return Scalar();
        Poly g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = *num.divided_by(g);
            den = *den.divided_by(g);
        }
        Rat dc = den.content_with_sign();
        den = den.scaled(Rat(1) / dc);
        num = num.scaled(Rat(1) / dc);
        if (den == Poly(Rat(1)) && num.is_constant()) return Scalar(num.constant_value());
        Scalar s;
        s.sym_ = std::make_shared<Rep>(Rep{std::move(num), std::move(den)});
        return s;
    }
};

inline Scalar operator+(const Scalar& a, long b) { return a + Scalar(b); }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
inline Scalar operator-(const Scalar& a, long b) { return a - Scalar(b); }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

} // namespace tcx

#endif
