#ifndef TCX_FACTORIZE_HPP
#define TCX_FACTORIZE_HPP

#include <map>
#include <variant>
#include <vector>

#include "tcx/intfactor.hpp"
#include "tcx/scalar.hpp"

namespace tcx {

// ---------------------------------------------------------------------------
// Multiplicative factorization of nonzero field elements: the normal form
// behind every F^x tensor slot. Atoms are primes and canonically normalized
// polynomial factors (integer-primitive, positive leading coefficient).
// ---------------------------------------------------------------------------
struct FactorAtom {
    std::variant<Int, Poly> v;

    bool is_prime() const { return v.index() == 0; }
    const Int& prime() const { return std::get<Int>(v); }
    const Poly& poly() const { return std::get<Poly>(v); }

    static FactorAtom of_prime(Int p) { return {std::move(p)}; }
    static FactorAtom of_poly(Poly p) { return {std::move(p)}; }

    Scalar as_scalar() const {
        if (is_prime()) return Scalar(Rat(prime()));
        return Scalar::from_fraction(poly(), Poly(Rat(1)));
    }

    bool operator<(const FactorAtom& o) const { return cmp(*this, o) < 0; }
    bool operator==(const FactorAtom& o) const { return cmp(*this, o) == 0; }

    static int cmp(const FactorAtom& a, const FactorAtom& b) {
        if (a.v.index() != b.v.index()) return a.v.index() < b.v.index() ? -1 : 1;
        if (a.is_prime()) {
            int c = ::cmp(a.prime(), b.prime());
            return c < 0 ? -1 : c > 0 ? 1 : 0;
        }
        return Poly::cmp(a.poly(), b.poly());
    }

    std::string str() const {
        if (is_prime()) return prime().get_str();
        return poly_to_string(poly());
    }
};

struct MultFactorization {
    int sign = 1;                    // +-1
    std::map<FactorAtom, int> exps;  // atom -> nonzero exponent

    Scalar remultiply() const {
        Scalar r{Rat(sign)};
        for (auto& [a, e] : exps) {
            Scalar s = a.as_scalar();
            for (int k = 0; k < (e > 0 ? e : -e); ++k) r = e > 0 ? r * s : r / s;
        }
        return r;
    }
};

// ---- polynomial factor splitting --------------------------------------------

namespace detail {

inline std::vector<Rat> rational_roots(const Poly& p, int var) {
    std::vector<Rat> roots;
    auto cs = coeffs_in(p, var);
    Rat c0 = cs.front().constant_value();
    Rat lead = cs.back().constant_value();
    if (c0 == 0 || lead == 0) return roots;
    std::map<Int, int> fn, fd;
    factor_into(c0.get_num(), fn);
    factor_into(lead.get_num(), fd);
    auto divisors = [](const std::map<Int, int>& f) {
        std::vector<Int> ds{1};
        for (auto& [p_, e] : f) {
            std::size_t n = ds.size();
            Int pw = 1;
            for (int k = 1; k <= e; ++k) {
                pw *= p_;
                for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pw);
            }
        }
        return ds;
    };
    auto eval = [&](const Rat& x) {
        Rat acc = 0, pw = 1;
        for (auto& c : cs) {
            acc += c.constant_value() * pw;
            pw *= x;
        }
        return acc;
    };
    for (const Int& dn : divisors(fn))
        for (const Int& dd : divisors(fd))
            for (int s : {1, -1}) {
                Rat cand(s * dn, dd);
                cand.canonicalize();
                if (eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline void split_poly(const Poly& p0, std::map<Poly, int>& out, int mult);

/// p squarefree, primitive, non-constant, no monomial or content factors
inline void split_squarefree(const Poly& p, std::map<Poly, int>& out, int mult) {
    std::vector<int> vars;
    p.vars_into(vars);
    std::sort(vars.begin(), vars.end());
    if (p.degree() == 1) {
        out[p] += mult;
        return;
    }
    if (vars.size() == 1) {
        int v = vars[0];
        Poly rest = p;
        bool found = false;
        for (const Rat& r : rational_roots(p, v)) {
            Poly lin = Poly::variable(v).scaled(Rat(r.get_den())) - Poly(Rat(r.get_num()));
            lin = lin.primitive();
            while (true) {
                auto q = rest.divided_by(lin);
                if (!q) break;
                out[lin] += mult;
                rest = *q;
                found = true;
            }
        }
        if (!rest.is_constant()) {
            if (found) {
                split_poly(rest, out, mult);
            } else {
                // no rational roots: degrees 2 and 3 are irreducible over Q;
                // higher degrees stay as atoms (coprime refinement at use
                // sites keeps zero tests sound either way)
                out[rest.primitive()] += mult;
            }
        }
        return;
    }
    // multivariate, linear in some variable, coefficient-content-free:
    // irreducible; otherwise an atom
    out[p.primitive()] += mult;
}

inline void split_poly(const Poly& p0, std::map<Poly, int>& out, int mult) {
    Poly p = p0.primitive();
    if (p.is_constant()) return;
    std::vector<int> vars;
    p.vars_into(vars);
    std::sort(vars.begin(), vars.end());
    for (int v : vars) { // monomial factors
        int minexp = INT32_MAX;
        for (auto& [m, _] : p.t) minexp = std::min(minexp, m.deg_in(v));
        if (minexp > 0) {
            out[Poly::variable(v)] += mult * minexp;
            p = *p.divided_by(Poly::term(Mono::var(v, minexp), Rat(1)));
        }
    }
    if (p.is_constant()) return;
    for (int v : vars) { // content in each variable
        if (p.deg_in(v) == 0) continue;
        Poly cont = poly_gcd_list(coeffs_in(p, v));
        if (!cont.is_constant()) {
            split_poly(cont, out, mult);
            split_poly(*p.divided_by(cont), out, mult);
            return;
        }
    }
    for (int v : vars) { // squarefree split
        if (p.deg_in(v) == 0) continue;
        Poly g = poly_gcd(p, p.derivative(v));
        if (!g.is_constant()) {
            split_poly(g, out, mult);
            split_poly(*p.divided_by(g), out, mult);
            return;
        }
    }
    split_squarefree(p, out, mult);
}

} // namespace detail

/// Full multiplicative factorization. x must be nonzero.
inline MultFactorization factor_multiplicative(const Scalar& x) {
    if (x.is_zero()) throw DomainError("factor_multiplicative(0)");
    MultFactorization f;
    Rat content;
    if (x.is_rational()) {
        content = x.rational();
    } else {
        std::map<Poly, int> polyfac;
        detail::split_poly(x.num(), polyfac, 1);
        detail::split_poly(x.den(), polyfac, -1);
        content = x.num().content_with_sign(); // den is primitive positive by canon
        for (auto& [p, e] : polyfac)
            if (e != 0) f.exps[FactorAtom::of_poly(p)] = e;
    }
    f.sign = content < 0 ? -1 : 1;
    for (auto& [p, e] : factor_rational_abs(content)) f.exps[FactorAtom::of_prime(p)] = e;
    return f;
}

// ---------------------------------------------------------------------------
// Per-call coprime basis. Zero tests in the F^x-slotted groups need the atom
// set of one whole sum to be pairwise coprime; a refinement pass makes the
// normal form independent of how far split_poly got on each value.
// Usage: add() all slot values, then refine(), then express() each value.
// ---------------------------------------------------------------------------
class FactorBasis {
  public:
    void add(const Scalar& x) {
        for (auto& [a, e] : factor_multiplicative(x).exps) {
            if (!a.is_prime()) add_atom(a.poly());
        }
    }

    void refine() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < polys_.size() && !changed; ++i) {
                for (std::size_t j = i + 1; j < polys_.size() && !changed; ++j) {
                    Poly g = poly_gcd(polys_[i], polys_[j]);
                    if (g.is_constant()) continue;
                    Poly qi = polys_[i].divided_by(g)->primitive();
                    Poly qj = polys_[j].divided_by(g)->primitive();
                    std::vector<Poly> keep;
                    for (std::size_t k = 0; k < polys_.size(); ++k)
                        if (k != i && k != j) keep.push_back(polys_[k]);
                    polys_ = std::move(keep);
                    add_atom(g.primitive());
                    if (!qi.is_constant()) add_atom(qi);
                    if (!qj.is_constant()) add_atom(qj);
                    changed = true;
                }
            }
        }
        std::sort(polys_.begin(), polys_.end());
    }

    /// exponents over {polys} plus prime factorization of the rational rest;
    /// sign returned separately (torsion, dropped by Q-coefficient targets)
    struct Expansion {
        int sign = 1;
        std::vector<std::pair<FactorAtom, int>> exps; // atom-sorted
    };

    Expansion express(const Scalar& x) const {
        if (x.is_zero()) throw DomainError("express(0)");
        Expansion out;
        std::map<FactorAtom, int> acc;
        Poly num = x.num_poly().primitive();
        Poly den = x.den_poly().primitive();
        for (const Poly& a : polys_) {
            while (true) {
                auto q = num.divided_by(a);
                if (!q) break;
                acc[FactorAtom::of_poly(a)] += 1;
                num = q->primitive();
            }
            while (true) {
                auto q = den.divided_by(a);
                if (!q) break;
                acc[FactorAtom::of_poly(a)] -= 1;
                den = q->primitive();
            }
        }
        if (!num.is_constant() || !den.is_constant())
            throw DomainError("factor basis does not cover value " + x.str());
        Rat content = x.num_poly().content_with_sign() / x.den_poly().content_with_sign();
        out.sign = content < 0 ? -1 : 1;
        for (auto& [p, e] : factor_rational_abs(content)) acc[FactorAtom::of_prime(p)] += e;
        for (auto& [a, e] : acc)
            if (e != 0) out.exps.push_back({a, e});
        return out;
    }

  private:
    std::vector<Poly> polys_;

    void add_atom(const Poly& p) {
        for (auto& q : polys_)
            if (q == p) return;
        polys_.push_back(p);
    }
};

} // namespace tcx

#endif
