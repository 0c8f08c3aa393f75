#ifndef GASYM_PUISEUX_HPP
#define GASYM_PUISEUX_HPP

#include <map>
#include <optional>
#include <string>

#include "gasym/multipoly.hpp"

namespace gasym {

// Truncated Puiseux series at infinity: finitely many terms c * z^e with
// rational exponents. `order_bound`, when set, means: stored terms with
// exponent > order_bound are exact; anything at or below it is unknown and
// has been dropped. An unset order_bound marks an exactly known finite series.
struct Puiseux {
    // descending exponent order so leading term comes first
    std::map<Rational, AlgNum, std::greater<Rational>> terms;
    std::optional<Rational> order_bound;

    Puiseux() = default;

    static Puiseux zero() { return Puiseux(); }

    static Puiseux monomial(const AlgNum& c, const Rational& e) {
        Puiseux s;
        if (!c.is_zero()) s.terms[e] = c;
        return s;
    }

    static Puiseux constant(const AlgNum& c) { return monomial(c, Rational(0)); }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Rational& e, const AlgNum& c) {
        if (c.is_zero()) return;
        if (order_bound && e <= *order_bound) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms[e] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    void clamp() { // drop terms at or below the bound
        if (!order_bound) return;
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->first <= *order_bound) it = terms.erase(it);
            else ++it;
        }
    }

    Rational leading_exponent() const {
        if (terms.empty()) throw error("leading exponent of zero series");
        return terms.begin()->first;
    }

    AlgNum leading_coeff() const {
        if (terms.empty()) throw error("leading coefficient of zero series");
        return terms.begin()->second;
    }

    AlgNum coeff(const Rational& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? AlgNum(Rational(0)) : it->second;
    }

    // lcm of exponent denominators (1 for the zero series)
    Integer ramification() const {
        Integer N(1);
        for (const auto& [e, c] : terms) N = integer_lcm(N, denominator(e));
        return N;
    }
};

inline std::optional<Rational> max_bound(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

inline Puiseux series_add(const Puiseux& a, const Puiseux& b) {
    Puiseux r;
    r.order_bound = max_bound(a.order_bound, b.order_bound);
    for (const auto& [e, c] : a.terms) r.add_term(e, c);
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline Puiseux series_neg(Puiseux a) {
    for (auto& [e, c] : a.terms) c = -c;
    return a;
}

inline Puiseux series_sub(const Puiseux& a, const Puiseux& b) { return series_add(a, series_neg(b)); }

inline Puiseux series_scale(Puiseux a, const AlgNum& c) {
    if (c.is_zero()) {
        Puiseux r;
        r.order_bound = a.order_bound;
        return r;
    }
    for (auto& [e, v] : a.terms) v = v * c;
    return a;
}

inline Puiseux series_mul(const Puiseux& a, const Puiseux& b) {
    Puiseux r;
    // validity: unknown tail of a (exponents <= bound_a) times leading term of b
    // pollutes exponents <= bound_a + lead(b), and symmetrically.
    if (a.order_bound && !b.is_zero())
        r.order_bound = max_bound(r.order_bound, *a.order_bound + b.leading_exponent());
    if (b.order_bound && !a.is_zero())
        r.order_bound = max_bound(r.order_bound, *b.order_bound + a.leading_exponent());
    if (a.order_bound && b.is_zero()) r.order_bound = a.order_bound;
    if (b.order_bound && a.is_zero()) r.order_bound = b.order_bound;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
    return r;
}

inline Puiseux series_truncate(const Puiseux& s, const Rational& bound) {
    Puiseux r = s;
    r.order_bound = max_bound(r.order_bound, bound);
    r.clamp();
    return r;
}

// keep only terms with non-negative exponent (the asymptote part, exact)
inline Puiseux nonnegative_part(const Puiseux& s) {
    if (s.order_bound && *s.order_bound >= 0)
        throw needs_more_terms("truncation does not reach exponent 0");
    Puiseux r;
    for (const auto& [e, c] : s.terms)
        if (e >= 0) r.terms[e] = c;
    return r;
}

inline Puiseux series_pow(const Puiseux& s, int n) {
    Puiseux acc = Puiseux::constant(AlgNum(Rational(1)));
    Puiseux base = s;
    while (n) {
        if (n & 1) acc = series_mul(acc, base);
        if (n >>= 1) base = series_mul(base, base);
    }
    return acc;
}

// z := t^k (exponents scale by k); also used with rational 1/d for properness
inline Puiseux substitute_power(const Puiseux& s, const Rational& k) {
    if (k <= 0) throw error("substitute_power requires a positive exponent factor");
    Puiseux r;
    if (s.order_bound) r.order_bound = *s.order_bound * k;
    for (const auto& [e, c] : s.terms) r.terms[e * k] = c;
    return r;
}

// shift all exponents by delta (multiply by z^delta)
inline Puiseux substitute_power_shift(const Puiseux& s, const Rational& delta) {
    Puiseux r;
    if (s.order_bound) r.order_bound = *s.order_bound + delta;
    for (const auto& [e, c] : s.terms) r.terms[e + delta] = c;
    return r;
}

// 1/s, correct above `bound`. s must have a nonzero leading term.
inline Puiseux series_inverse(const Puiseux& s, const Rational& bound) {
    if (s.is_zero()) throw division_by_zero();
    Rational L = s.leading_exponent();
    AlgNum c0 = s.leading_coeff();
    // s = c0 z^L (1 + u), u strictly smaller exponents relative to 0
    Puiseux u;
    u.order_bound = s.order_bound ? std::optional<Rational>(*s.order_bound - L) : std::nullopt;
    for (const auto& [e, c] : s.terms) {
        if (e == L) continue;
        u.add_term(e - L, c / c0);
    }
    // 1/(1+u) = sum (-u)^j ; u's exponents <= -step for some step > 0
    Puiseux inv = Puiseux::constant(AlgNum(Rational(1)));
    if (!u.is_zero()) {
        Rational step = -u.leading_exponent(); // > 0
        Rational rel_bound = bound + L;        // accuracy needed for 1/(1+u)
        long jmax = 0;
        {
            // smallest j with -(j+1)*step <= rel_bound  (further powers don't matter)
            Rational need = -rel_bound / step;
            // j up to ceil(need)
            Integer num = numerator(need), den = denominator(need);
            Integer q = num / den + 2;
            if (q < 1) q = 1;
            if (!q.fits_slong_p()) throw needs_more_terms("inversion depth overflow");
            jmax = q.get_si();
        }
        Puiseux mu = series_neg(u);
        Puiseux powu = Puiseux::constant(AlgNum(Rational(1)));
        for (long j = 1; j <= jmax; ++j) {
            powu = series_truncate(series_mul(powu, mu), rel_bound);
            if (powu.is_zero() && !powu.order_bound) break;
            inv = series_add(inv, powu);
        }
        inv = series_truncate(inv, rel_bound);
        if (u.order_bound) inv.order_bound = max_bound(inv.order_bound, u.order_bound);
    }
    Puiseux r = series_scale(substitute_power_shift(inv, -L), c0.inverse());
    return series_truncate(r, bound);
}

// Evaluate a MultiPoly with each variable replaced by a Puiseux series.
inline Puiseux eval_poly_at_series(const MultiPoly& f, const std::vector<Puiseux>& args) {
    if (args.size() != f.nvars()) throw error("series substitution has wrong arity");
    Puiseux acc;
    for (const auto& [e, c] : f.terms) {
        Puiseux t = Puiseux::constant(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = series_mul(t, series_pow(args[i], e[i]));
        acc = series_add(acc, t);
    }
    return acc;
}

// Numeric evaluation at z = x (with λ already embedded into doubles upstream).
inline double series_eval_double(const Puiseux& s, double x, double lambda_embedding) {
    double acc = 0;
    for (const auto& [e, c] : s.terms)
        acc += c.eval_double(lambda_embedding) * std::pow(x, to_double(e));
    return acc;
}

inline std::string exponent_text(const std::string& var, const Rational& e) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (is_integer(e)) return var + "^" + to_string(e);
    return var + "^(" + to_string(e) + ")";
}

inline std::string to_text(const Puiseux& s, const std::string& var = "z") {
    if (s.terms.empty()) return s.order_bound ? "O(" + var + "^(" + to_string(*s.order_bound) + "))" : "0";
    std::string out;
    for (const auto& [e, c] : s.terms) {
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            Rational q = c.as_rational();
            neg = q < 0;
            cs = to_string(neg ? Rational(-q) : q);
        } else {
            cs = "(" + c.to_text() + ")";
        }
        std::string mono = exponent_text(var, e);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    if (s.order_bound) out += " + O(" + var + "^(" + to_string(*s.order_bound) + "))";
    return out;
}

} // namespace gasym

#endif
