#ifndef GASYM_QPOLY_HPP
#define GASYM_QPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gasym/rational.hpp"

namespace gasym {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
// Normal form: no trailing zero coefficients ({} is the zero polynomial).
using QPoly = std::vector<Rational>;

inline void qp_normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool qp_is_zero(const QPoly& p) { return p.empty(); }

inline QPoly qp_const(const Rational& c) {
    QPoly p;
    if (c != 0) p.push_back(c);
    return p;
}

inline Rational qp_lc(const QPoly& p) { return p.empty() ? Rational(0) : p.back(); }

inline Rational qp_coeff(const QPoly& p, int i) {
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : Rational(0);
}

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qp_normalize(r);
    return r;
}

inline QPoly qp_neg(QPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) { return qp_add(a, qp_neg(b)); }

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_normalize(r);
    return r;
}

inline QPoly qp_scale(QPoly a, const Rational& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

inline QPoly qp_shift(const QPoly& a, int k) { // multiply by x^k
    if (a.empty()) return {};
    QPoly r(a.size() + k, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

inline std::pair<QPoly, QPoly> qp_divrem(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw division_by_zero();
    QPoly q, r = a;
    if (qp_deg(a) < qp_deg(b)) return {q, r};
    q.assign(a.size() - b.size() + 1, Rational(0));
    while (!r.empty() && r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        int k = static_cast<int>(r.size() - b.size());
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
        qp_normalize(r);
    }
    qp_normalize(q);
    return {q, r};
}

inline QPoly qp_monic(const QPoly& p) {
    if (p.empty()) return p;
    return qp_scale(p, Rational(1) / p.back());
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = qp_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

// g = gcd, plus s with s*a ≡ g (mod m). Enough for inverses mod m.
inline void qp_half_ext_gcd(QPoly a, QPoly m, QPoly& g, QPoly& s) {
    QPoly s0 = qp_const(Rational(1)), s1;
    while (!m.empty()) {
        auto [q, r] = qp_divrem(a, m);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        a = std::move(m);
        m = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    g = a;
    s = s0;
    if (!g.empty()) {
        Rational inv = Rational(1) / g.back();
        g = qp_scale(g, inv);
        s = qp_scale(s, inv);
    }
}

inline QPoly qp_derivative(const QPoly& p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Rational(static_cast<long>(i)) * p[i]);
    qp_normalize(r);
    return r;
}

inline Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Scale to integer coefficients with content 1 and positive leading coefficient.
inline std::vector<Integer> qp_primitive_integer(const QPoly& p) {
    std::vector<Integer> out;
    if (p.empty()) return out;
    Integer den(1);
    for (const auto& c : p) den = integer_lcm(den, denominator(c));
    Integer g(0);
    for (const auto& c : p) g = integer_gcd(g, numerator(c) * (den / denominator(c)));
    if (g == 0) g = 1;
    bool flip = p.back() < 0;
    for (const auto& c : p) {
        Integer v = numerator(c) * (den / denominator(c)) / g;
        out.push_back(flip ? Integer(-v) : v);
    }
    return out;
}

inline QPoly qp_squarefree_part(const QPoly& p) {
    if (qp_deg(p) <= 1) return qp_monic(p);
    QPoly g = qp_gcd(p, qp_derivative(p));
    return qp_monic(qp_divrem(p, g).first);
}

// ---- integer factorization helpers (rational-root candidates) --------------

inline Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345u);
    while (true) {
        Integer x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = integer_gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

inline void factor_integer(Integer n, std::map<Integer, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 25)) {
        out[n]++;
        return;
    }
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[Integer(p)]++;
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 25)) {
        out[n]++;
        return;
    }
    Integer d = pollard_rho(n);
    factor_integer(d, out);
    factor_integer(n / d, out);
}

inline std::vector<Integer> all_divisors(const Integer& n) {
    std::map<Integer, int> f;
    factor_integer(n, f);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : f) {
        size_t sz = divs.size();
        Integer pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// All rational roots with multiplicities; `deflated` receives p with those
// linear factors removed.
inline std::vector<std::pair<Rational, int>> qp_rational_roots(const QPoly& p, QPoly* deflated = nullptr) {
    std::vector<std::pair<Rational, int>> roots;
    QPoly cur = p;
    if (qp_is_zero(cur)) throw error("rational_roots of the zero polynomial");
    // strip x^k
    int k0 = 0;
    while (cur.size() > 1 && cur.front() == 0) {
        cur.erase(cur.begin());
        ++k0;
    }
    if (k0 > 0) roots.push_back({Rational(0), k0});
    if (qp_deg(cur) >= 1) {
        std::vector<Integer> zp = qp_primitive_integer(cur);
        std::vector<Integer> nums = all_divisors(zp.front());
        std::vector<Integer> dens = all_divisors(zp.back());
        std::vector<Rational> candidates;
        for (const auto& n : nums)
            for (const auto& d : dens)
                for (int s : {1, -1}) {
                    Rational c(s > 0 ? n : Integer(-n), d);
                    c.canonicalize();
                    candidates.push_back(c);
                }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            int mult = 0;
            while (qp_deg(cur) >= 1 && qp_eval(cur, c) == 0) {
                QPoly lin{-c, Rational(1)};
                cur = qp_divrem(cur, lin).first;
                ++mult;
            }
            if (mult > 0) roots.push_back({c, mult});
        }
    }
    if (deflated) *deflated = cur;
    return roots;
}

// ---- irreducibility over Q -------------------------------------------------

namespace detail {

// arithmetic in F_p[x], p a small prime
using FpPoly = std::vector<uint64_t>;

inline void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce mod m (m monic)
    while (r.size() >= m.size()) {
        uint64_t c = r.back();
        size_t k = r.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) r[k + i] = (r[k + i] + (p - c % p) * m[i]) % p;
        fp_normalize(r);
        if (!r.empty() && r.size() >= m.size() && r.back() == 0) fp_normalize(r);
        if (r.size() >= m.size() && r.back() != 0) continue;
        break;
    }
    while (r.size() >= m.size()) { // safety loop; should not trigger
        fp_normalize(r);
        break;
    }
    fp_normalize(r);
    return r;
}

inline FpPoly fp_powmod_x(uint64_t e_base, unsigned long e_exp_unused, const FpPoly&, uint64_t);

inline FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    auto inv = [&](uint64_t x) {
        uint64_t r = 1, b2 = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b2 % p;
            b2 = b2 * b2 % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        uint64_t lb = inv(b.back());
        FpPoly r = a;
        while (r.size() >= b.size()) {
            uint64_t c = r.back() * lb % p;
            size_t k = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[k + i] = (r[k + i] + (p - c * b[i] % p)) % p;
            fp_normalize(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m via repeated Frobenius
inline FpPoly fp_frobenius_power(const FpPoly& m, uint64_t p, int k) {
    FpPoly x{0, 1};
    FpPoly cur = x;
    for (int i = 0; i < k; ++i) {
        // cur = cur^p mod m
        FpPoly acc{1};
        FpPoly base = cur;
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = fp_mulmod(acc, base, m, p);
            base = fp_mulmod(base, base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

// Rabin's test: m irreducible over F_p?
inline bool fp_irreducible(const FpPoly& m, uint64_t p) {
    int n = static_cast<int>(m.size()) - 1;
    if (n <= 0) return false;
    FpPoly x{0, 1};
    FpPoly xn = fp_frobenius_power(m, p, n);
    FpPoly diff = xn;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_normalize(diff);
    if (!diff.empty()) return false; // x^(p^n) != x
    std::vector<int> prime_divs;
    int t = n;
    for (int q = 2; q * q <= t; ++q)
        if (t % q == 0) {
            prime_divs.push_back(q);
            while (t % q == 0) t /= q;
        }
    if (t > 1) prime_divs.push_back(t);
    for (int q : prime_divs) {
        FpPoly xq = fp_frobenius_power(m, p, n / q);
        FpPoly d = xq;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_normalize(d);
        FpPoly g = fp_gcd(m, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace detail

// Sufficient certificate: degree <= 3 plus rational-root test, then
// irreducibility modulo a small prime. Returns false only when no prime in
// the list certifies; callers treat that as "unsupported input".
inline bool qp_certify_irreducible(const QPoly& p) {
    int d = qp_deg(p);
    if (d <= 0) return false;
    if (d == 1) return true;
    QPoly rest;
    auto roots = qp_rational_roots(p, &rest);
    if (!roots.empty()) return false;
    if (d <= 3) return true; // no rational root => irreducible for deg 2, 3
    std::vector<Integer> zp = qp_primitive_integer(p);
    for (uint64_t prime : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL, 41ULL}) {
        if (zp.back() % static_cast<long>(prime) == 0) continue;
        detail::FpPoly m;
        Integer lcinv;
        // make monic mod prime
        Integer lc = zp.back() % static_cast<long>(prime);
        Integer inv;
        Integer pz(static_cast<long>(prime));
        if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pz.get_mpz_t())) continue;
        for (const auto& c : zp) {
            Integer v = ((c * inv) % pz + pz) % pz;
            m.push_back(v.get_ui());
        }
        if (detail::fp_irreducible(m, prime)) return true;
    }
    return false;
}

// n-th cyclotomic polynomial, by exact division of x^n - 1.
inline QPoly qp_cyclotomic(int n) {
    QPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        QPoly phi_d = qp_cyclotomic(d);
        num = qp_divrem(num, phi_d).first;
    }
    return num;
}

} // namespace gasym

#endif
