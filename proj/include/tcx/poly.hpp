#ifndef TCX_POLY_HPP
#define TCX_POLY_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tcx/rational.hpp"

namespace tcx {

// ---------------------------------------------------------------------------
// Variable registry. The variable set is fixed per session and declared up
// front (fixtures list theirs, campaigns declare theirs in a fixed order), so
// ids are reproducible run to run. Monomial comparisons go through ids.
// ---------------------------------------------------------------------------
class VarTable {
  public:
    static VarTable& instance() {
        static VarTable t;
        return t;
    }
    int intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }
    const std::string& name(int id) const { return names_.at(id); }

  private:
    std::map<std::string, int> ids_;
    std::vector<std::string> names_;
    std::mutex mu_;
};

inline int var_id(const std::string& name) { return VarTable::instance().intern(name); }

// ---------------------------------------------------------------------------
// Monomial: sorted (var, exp) pairs, exp > 0.
// ---------------------------------------------------------------------------
struct Mono {
    std::vector<std::pair<int, int>> v;

    int degree() const {
        int d = 0;
        for (auto& [_, e] : v) d += e;
        return d;
    }
    int deg_in(int var) const {
        for (auto& [x, e] : v)
            if (x == var) return e;
        return 0;
    }
    bool is_one() const { return v.empty(); }

    static Mono one() { return {}; }
    static Mono var(int id, int e = 1) { return Mono{{{id, e}}}; }

    Mono operator*(const Mono& o) const {
        Mono r;
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < o.v.size()) {
            if (j == o.v.size() || (i < v.size() && v[i].first < o.v[j].first)) {
                r.v.push_back(v[i++]);
            } else if (i == v.size() || o.v[j].first < v[i].first) {
                r.v.push_back(o.v[j++]);
            } else {
                r.v.push_back({v[i].first, v[i].second + o.v[j].second});
                ++i, ++j;
            }
        }
        return r;
    }

    /// this / o if divisible
    std::optional<Mono> divide(const Mono& o) const {
        Mono r;
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < o.v.size()) {
            if (j == o.v.size()) {
                r.v.push_back(v[i++]);
            } else if (i == v.size() || v[i].first > o.v[j].first) {
                return std::nullopt;
            } else if (v[i].first < o.v[j].first) {
                r.v.push_back(v[i++]);
            } else {
                int d = v[i].second - o.v[j].second;
                if (d < 0) return std::nullopt;
                if (d > 0) r.v.push_back({v[i].first, d});
                ++i, ++j;
            }
        }
        return r;
    }

    // graded lex: higher total degree first, ties by exponent vector
    // (smaller var id with higher power wins)
    bool operator<(const Mono& o) const { return cmp(*this, o) < 0; }
    bool operator==(const Mono& o) const { return v == o.v; }

    static int cmp(const Mono& a, const Mono& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        std::size_t i = 0, j = 0;
        while (i < a.v.size() && j < b.v.size()) {
            if (a.v[i].first != b.v[j].first)
                // earlier variable present => lexicographically bigger
                return a.v[i].first < b.v[j].first ? 1 : -1;
            if (a.v[i].second != b.v[j].second)
                return a.v[i].second > b.v[j].second ? 1 : -1;
            ++i, ++j;
        }
        if (i < a.v.size()) return 1;
        if (j < b.v.size()) return -1;
        return 0;
    }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial, terms sorted graded-lex descending.
// ---------------------------------------------------------------------------
class Poly {
  public:
    std::vector<std::pair<Mono, Rat>> t; // descending, nonzero coeffs

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) t.push_back({Mono::one(), c});
    }
    static Poly variable(int id) {
        Poly p;
        p.t.push_back({Mono::var(id), Rat(1)});
        return p;
    }
    static Poly term(const Mono& m, const Rat& c) {
        Poly p;
        if (c != 0) p.t.push_back({m, c});
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }
    Rat constant_value() const { return t.empty() ? Rat(0) : t[0].second; }
    int degree() const { return t.empty() ? -1 : t[0].first.degree(); }
    int deg_in(int var) const {
        int d = 0;
        for (auto& [m, _] : t) d = std::max(d, m.deg_in(var));
        return d;
    }
    const Mono& leading_mono() const { return t.front().first; }
    const Rat& leading_coeff() const { return t.front().second; }

    /// smallest var id occurring, or -1
    int main_var() const {
        int mv = -1;
        for (auto& [m, _] : t)
            for (auto& [x, e] : m.v)
                if (mv < 0 || x < mv) mv = x;
        return mv;
    }

    void vars_into(std::vector<int>& out) const {
        for (auto& [m, _] : t)
            for (auto& [x, e] : m.v)
                if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, 1); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, -1); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [_, c] : r.t) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b.scaled(a.constant_value());
        if (b.is_constant()) return a.scaled(b.constant_value());
        std::map<Mono, Rat> acc;
        for (auto& [ma, ca] : a.t)
            for (auto& [mb, cb] : b.t) acc[ma * mb] += ca * cb;
        return from_map(acc);
    }

    Poly scaled(const Rat& c) const {
        if (c == 0) return {};
        Poly r = *this;
        for (auto& [_, cc] : r.t) cc *= c;
        return r;
    }

    bool operator==(const Poly& o) const { return t == o.t; }

    static int cmp(const Poly& a, const Poly& b) {
        std::size_t n = std::min(a.t.size(), b.t.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = Mono::cmp(a.t[i].first, b.t[i].first);
            if (c != 0) return c;
            int cc = ::cmp(a.t[i].second, b.t[i].second);
            if (cc != 0) return cc < 0 ? -1 : 1;
        }
        if (a.t.size() != b.t.size()) return a.t.size() < b.t.size() ? -1 : 1;
        return 0;
    }
    bool operator<(const Poly& o) const { return cmp(*this, o) < 0; }

    Poly derivative(int var) const {
        std::map<Mono, Rat> acc;
        for (auto& [m, c] : t) {
            int e = m.deg_in(var);
            if (e == 0) continue;
            Mono dm;
            for (auto& [x, ex] : m.v) {
                if (x == var) {
                    if (ex > 1) dm.v.push_back({x, ex - 1});
                } else {
                    dm.v.push_back({x, ex});
                }
            }
            acc[dm] += c * e;
        }
        return from_map(acc);
    }

    /// exact division; nullopt if not divisible
    std::optional<Poly> divided_by(const Poly& d) const {
        if (d.is_zero()) throw DomainError("poly division by zero");
        if (d.is_constant()) return scaled(Rat(1) / d.constant_value());
        Poly rem = *this;
        std::map<Mono, Rat> quo;
        while (!rem.is_zero()) {
            auto q = rem.leading_mono().divide(d.leading_mono());
            if (!q) return std::nullopt;
            Rat c = rem.leading_coeff() / d.leading_coeff();
            quo[*q] += c;
            rem = rem - d * Poly::term(*q, c);
        }
        return from_map(quo);
    }

    /// substitute var -> value (rational), eliminating it
    Poly eval_var(int var, const Rat& value) const {
        std::map<Mono, Rat> acc;
        for (auto& [m, c] : t) {
            Rat cc = c;
            Mono mm;
            for (auto& [x, e] : m.v) {
                if (x == var) {
                    Rat pw = 1;
                    for (int k = 0; k < e; ++k) pw *= value;
                    cc *= pw;
                } else {
                    mm.v.push_back({x, e});
                }
            }
            acc[mm] += cc;
        }
        return from_map(acc);
    }

    /// rational content (gcd of coefficients as positive rational, sign of lead)
    Rat content_with_sign() const {
        if (t.empty()) return Rat(0);
        Int gn = 0, gl = 1;
        bool first = true;
        for (auto& [_, c] : t) {
            mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
            if (first) {
                gl = c.get_den();
                first = false;
            } else {
                mpz_lcm(gl.get_mpz_t(), gl.get_mpz_t(), c.get_den().get_mpz_t());
            }
        }
        Rat content(gn, gl);
        content.canonicalize();
        if (leading_coeff() < 0) content = -content;
        return content;
    }

    /// integer-primitive with positive leading coefficient
    Poly primitive() const {
        if (is_zero()) return {};
        return scaled(Rat(1) / content_with_sign());
    }

    static Poly from_map(const std::map<Mono, Rat>& acc) {
        Poly r;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) r.t.push_back({it->first, it->second});
        return r;
    }

  private:
    static Poly merged(const Poly& a, const Poly& b, int sign) {
        Poly r;
        std::size_t i = 0, j = 0;
        while (i < a.t.size() || j < b.t.size()) {
            if (j == b.t.size()) {
                r.t.push_back(a.t[i++]);
            } else if (i == a.t.size()) {
                r.t.push_back({b.t[j].first, sign * b.t[j].second});
                ++j;
            } else {
                int c = Mono::cmp(a.t[i].first, b.t[j].first);
                if (c > 0) {
                    r.t.push_back(a.t[i++]);
                } else if (c < 0) {
                    r.t.push_back({b.t[j].first, sign * b.t[j].second});
                    ++j;
                } else {
                    Rat s = a.t[i].second + sign * b.t[j].second;
                    if (s != 0) r.t.push_back({a.t[i].first, s});
                    ++i, ++j;
                }
            }
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Recursive view: a poly as univariate in `var` with Poly coefficients.
// ---------------------------------------------------------------------------
inline std::vector<Poly> coeffs_in(const Poly& p, int var) {
    int d = p.deg_in(var);
    std::vector<std::map<Mono, Rat>> acc(d + 1);
    for (auto& [m, c] : p.t) {
        int e = m.deg_in(var);
        Mono mm;
        for (auto& [x, ex] : m.v)
            if (x != var) mm.v.push_back({x, ex});
        acc[e][mm] += c;
    }
    std::vector<Poly> out;
    out.reserve(d + 1);
    for (auto& a : acc) out.push_back(Poly::from_map(a));
    return out;
}

inline Poly from_coeffs_in(const std::vector<Poly>& cs, int var) {
    Poly r;
    for (std::size_t e = 0; e < cs.size(); ++e) {
        if (cs[e].is_zero()) continue;
        Poly xe = Poly::term(Mono::var(var, static_cast<int>(e)), Rat(1));
        r = r + (e == 0 ? cs[e] : cs[e] * xe);
    }
    return r;
}

Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd of a list (content of a recursive coefficient vector)
inline Poly poly_gcd_list(const std::vector<Poly>& ps) {
    Poly g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.primitive() : poly_gcd(g, p);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly(Rat(1)) : g;
}

/// pseudo-remainder of a by b in variable var (deg_var a >= deg_var b)
inline Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
    auto ca = coeffs_in(a, var);
    auto cb = coeffs_in(b, var);
    int db = static_cast<int>(cb.size()) - 1;
    const Poly& lb = cb.back();
    std::vector<Poly> r = ca;
    while (static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        if (r[dr].is_zero()) {
            r.pop_back();
            continue;
        }
        // r := lb * r - lead(r) * x^(dr-db) * b
        Poly lr = r[dr];
        for (auto& c : r) c = c * lb;
        for (int k = 0; k <= db; ++k) r[dr - db + k] = r[dr - db + k] - lr * cb[k];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        if (r.empty()) break;
    }
    return from_coeffs_in(r, var);
}

/// primitive-PRS multivariate gcd; result is primitive with positive lead.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
    int var = std::min(a.main_var(), b.main_var());
    if (a.deg_in(var) == 0 || b.deg_in(var) == 0) {
        // var is absent from one of them: gcd divides the other's content
        const Poly& with = a.deg_in(var) == 0 ? b : a;
        const Poly& without = a.deg_in(var) == 0 ? a : b;
        return poly_gcd(poly_gcd_list(coeffs_in(with, var)), without);
    }
    Poly ca = poly_gcd_list(coeffs_in(a, var));
    Poly cb = poly_gcd_list(coeffs_in(b, var));
    Poly cont = poly_gcd(ca, cb);
    Poly pa = *a.divided_by(ca);
    Poly pb = *b.divided_by(cb);
    // primitive Euclid on pa, pb in var
    Poly u = pa, v = pb;
    if (u.deg_in(var) < v.deg_in(var)) std::swap(u, v);
    while (!v.is_zero() && v.deg_in(var) > 0) {
        Poly r = pseudo_rem(u, v, var);
        u = v;
        if (r.is_zero()) {
            v = Poly();
        } else {
            v = *r.divided_by(poly_gcd_list(coeffs_in(r, var)));
        }
    }
    Poly pp = v.is_zero() ? u : Poly(Rat(1));
    return (cont * pp).primitive();
}

// ---------------------------------------------------------------------------
// printing (canonical: graded-lex descending, explicit * and ^)
// ---------------------------------------------------------------------------
inline std::string mono_to_string(const Mono& m) {
    std::string s;
    for (auto& [x, e] : m.v) {
        if (!s.empty()) s += "*";
        s += VarTable::instance().name(x);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.t.size(); ++i) {
        const auto& [m, c] = p.t[i];
        Rat ac = abs(c);
        std::string piece;
        if (m.is_one()) {
            piece = rat_to_string(ac);
        } else {
            piece = (ac == 1 ? "" : rat_to_string(ac) + "*") + mono_to_string(m);
        }
        if (i == 0) {
            s += (c < 0 ? "-" : "") + piece;
        } else {
            s += (c < 0 ? " - " : " + ") + piece;
        }
    }
    return s;
}

} // namespace tcx

#endif
