#ifndef GASYM_MULTIPOLY_HPP
#define GASYM_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gasym/algebraic.hpp"

namespace gasym {

// Sparse multivariate polynomial over AlgNum. Variable identity is by index
// into `vars`; binary operations require identical variable lists.
class MultiPoly {
public:
    std::vector<std::string> vars;
    std::map<std::vector<int>, AlgNum> terms;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    static MultiPoly constant(const AlgNum& c, std::vector<std::string> vs) {
        MultiPoly p(std::move(vs));
        if (!c.is_zero()) p.terms[std::vector<int>(p.vars.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(size_t i, std::vector<std::string> vs) {
        MultiPoly p(std::move(vs));
        std::vector<int> e(p.vars.size(), 0);
        e[i] = 1;
        p.terms[e] = AlgNum(Rational(1));
        return p;
    }

    size_t nvars() const { return vars.size(); }
    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        for (int e : terms.begin()->first)
            if (e != 0) return false;
        return true;
    }

    AlgNum constant_value() const {
        if (terms.empty()) return AlgNum(Rational(0));
        if (!is_constant()) throw error("polynomial is not constant");
        return terms.begin()->second;
    }

    void add_term(const std::vector<int>& e, const AlgNum& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    int degree_in(size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e[var]);
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_vars(a, b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.vars);
        for (const auto& [e, c] : a.terms) r.terms[e] = -c;
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_vars(a, b);
        MultiPoly r(a.vars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MultiPoly scaled(const AlgNum& c) const {
        MultiPoly r(vars);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms) r.terms[e] = v * c;
        return r;
    }

    MultiPoly pow(int n) const {
        MultiPoly acc = constant(AlgNum(Rational(1)), vars);
        MultiPoly base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            if (n >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars == b.vars && (a - b).is_zero();
    }

    static void check_vars(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars != b.vars)
            throw error("polynomials over different variable lists");
    }
};

// coefficient vector by degree in `var` (each entry constant in `var`)
inline std::vector<MultiPoly> coeffs_in(const MultiPoly& f, size_t var) {
    int d = f.degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0)) + 1, MultiPoly(f.vars));
    if (d < 0) return out;
    for (const auto& [e, c] : f.terms) {
        std::vector<int> e2 = e;
        int k = e2[var];
        e2[var] = 0;
        out[k].add_term(e2, c);
    }
    return out;
}

inline MultiPoly from_coeffs_in(const std::vector<MultiPoly>& cs, size_t var,
                                const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    for (size_t k = 0; k < cs.size(); ++k)
        for (const auto& [e, c] : cs[k].terms) {
            std::vector<int> e2 = e;
            e2[var] += static_cast<int>(k);
            r.add_term(e2, c);
        }
    return r;
}

inline MultiPoly leading_coeff_in(const MultiPoly& f, size_t var) {
    auto cs = coeffs_in(f, var);
    return cs.empty() ? MultiPoly(f.vars) : cs.back();
}

// Exact division (remainder must be zero) via lex-leading-term long division.
inline MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly::check_vars(f, g);
    if (g.is_zero()) throw division_by_zero();
    MultiPoly q(f.vars), r = f;
    // std::map iterates exponents in lex order; use the largest (rbegin).
    const auto& glead = *g.terms.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms.rbegin();
        std::vector<int> e(rlead.first.size());
        bool divisible = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - glead.first[i];
            if (e[i] < 0) divisible = false;
        }
        if (!divisible) throw not_divisible();
        AlgNum c = rlead.second / glead.second;
        q.add_term(e, c);
        MultiPoly mono(f.vars);
        mono.terms[e] = c;
        r = r - mono * g;
    }
    return q;
}

inline bool divides_exactly(const MultiPoly& g, const MultiPoly& f, MultiPoly* quot = nullptr) {
    try {
        MultiPoly q = exact_divide(f, g);
        if (quot) *quot = q;
        return true;
    } catch (const not_divisible&) {
        return false;
    }
}

// Substitute variable `var` := value (another polynomial over the same vars).
inline MultiPoly substitute(const MultiPoly& f, size_t var, const MultiPoly& value) {
    auto cs = coeffs_in(f, var);
    MultiPoly acc(f.vars);
    for (size_t k = cs.size(); k-- > 0;) acc = acc * value + cs[k];
    return acc;
}

inline MultiPoly substitute_scalar(const MultiPoly& f, size_t var, const AlgNum& value) {
    return substitute(f, var, MultiPoly::constant(value, f.vars));
}

// Evaluate fully at a scalar point.
inline AlgNum eval_point(const MultiPoly& f, const std::vector<AlgNum>& point) {
    if (point.size() != f.nvars()) throw error("evaluation point has wrong arity");
    AlgNum acc(Rational(0));
    for (const auto& [e, c] : f.terms) {
        AlgNum t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

inline MultiPoly derivative_in(const MultiPoly& f, size_t var) {
    MultiPoly r(f.vars);
    for (const auto& [e, c] : f.terms) {
        if (e[var] == 0) continue;
        std::vector<int> e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * AlgNum(Rational(e[var])));
    }
    return r;
}

// ---- homogenization --------------------------------------------------------

inline MultiPoly homogenize(const MultiPoly& f, const std::string& new_var) {
    std::vector<std::string> vs = f.vars;
    vs.push_back(new_var);
    MultiPoly r(vs);
    int d = std::max(f.total_degree(), 0);
    for (const auto& [e, c] : f.terms) {
        int s = 0;
        for (int x : e) s += x;
        std::vector<int> e2 = e;
        e2.push_back(d - s);
        r.terms[e2] = c;
    }
    return r;
}

inline MultiPoly dehomogenize(const MultiPoly& F, size_t var, const AlgNum& value) {
    MultiPoly g = substitute_scalar(F, var, value);
    std::vector<std::string> vs = F.vars;
    vs.erase(vs.begin() + static_cast<long>(var));
    MultiPoly r(vs);
    for (const auto& [e, c] : g.terms) {
        std::vector<int> e2 = e;
        e2.erase(e2.begin() + static_cast<long>(var));
        r.add_term(e2, c);
    }
    return r;
}

// ---- linear coordinate changes --------------------------------------------

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix matrix_inverse(RatMatrix m) {
    size_t n = m.size();
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw invalid_transform();
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// x_i := sum_j matrix[i][j] * x_j  (substituted simultaneously)
inline MultiPoly linear_change(const MultiPoly& f, const RatMatrix& matrix) {
    size_t n = f.nvars();
    if (matrix.size() != n) throw invalid_transform("matrix size does not match variable count");
    matrix_inverse(matrix); // throws if singular
    std::vector<MultiPoly> images;
    for (size_t i = 0; i < n; ++i) {
        MultiPoly im(f.vars);
        for (size_t j = 0; j < n; ++j) {
            if (matrix[i][j] == 0) continue;
            std::vector<int> e(n, 0);
            e[j] = 1;
            im.add_term(e, AlgNum(matrix[i][j]));
        }
        images.push_back(im);
    }
    MultiPoly acc(f.vars);
    for (const auto& [e, c] : f.terms) {
        MultiPoly t = MultiPoly::constant(c, f.vars);
        for (size_t i = 0; i < n; ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

// ---- resultants ------------------------------------------------------------

// Sylvester-matrix determinant by fraction-free elimination; the oracle.
inline MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, size_t var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m < 1 || n < 1) throw invalid_elimination("both operands must have positive degree in the eliminated variable");
    auto fc = coeffs_in(f, var), gc = coeffs_in(g, var);
    size_t N = static_cast<size_t>(m + n);
    MultiPoly zero(f.vars), one = MultiPoly::constant(AlgNum(Rational(1)), f.vars);
    std::vector<std::vector<MultiPoly>> a(N, std::vector<MultiPoly>(N, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = fc[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = gc[static_cast<size_t>(n - j)];
    // Bareiss
    MultiPoly prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < N; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < N && a[p][k].is_zero()) ++p;
            if (p == N) return zero;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i)
            for (size_t j = k + 1; j < N; ++j) {
                MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.is_zero() ? zero : exact_divide(num, prev);
            }
        prev = a[k][k];
    }
    MultiPoly det = a[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// Subresultant polynomial remainder sequence (Brown's algorithm).
// Returns [f, g, S2, S3, ...] with strictly decreasing degree in `var`.
struct PrsSequence {
    std::vector<MultiPoly> elems;
    size_t var;
};

inline MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, size_t var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (n < 0) throw division_by_zero();
    MultiPoly lg = leading_coeff_in(g, var);
    MultiPoly r = f;
    int steps = m - n + 1;
    for (int s = 0; s < steps; ++s) {
        int d = r.degree_in(var);
        if (d < n) {
            // multiply through by remaining lc powers to keep the standard
            // pseudo-remainder normalization prem = lc(g)^(m-n+1) f mod g
            for (int t2 = s; t2 < steps; ++t2) r = r * lg;
            return r;
        }
        MultiPoly lr = leading_coeff_in(r, var);
        std::vector<int> e(f.nvars(), 0);
        e[var] = d - n;
        MultiPoly shift(f.vars);
        shift.terms[e] = AlgNum(Rational(1));
        r = r * lg - g * shift * lr;
    }
    return r;
}

inline PrsSequence subresultant_prs(const MultiPoly& f, const MultiPoly& g, size_t var) {
    if (g.is_zero()) throw invalid_elimination("second operand is zero");
    if (f.degree_in(var) < g.degree_in(var)) return subresultant_prs(g, f, var);
    PrsSequence seq;
    seq.var = var;
    seq.elems.push_back(f);
    seq.elems.push_back(g);
    MultiPoly a = f, b = g;
    MultiPoly one = MultiPoly::constant(AlgNum(Rational(1)), f.vars);
    int delta = a.degree_in(var) - b.degree_in(var);
    MultiPoly beta = (delta % 2 == 0) ? -one : one; // (-1)^(delta+1)
    MultiPoly psi = -one;
    while (true) {
        MultiPoly rem = pseudo_remainder(a, b, var);
        if (rem.is_zero()) break;
        MultiPoly next = exact_divide(rem, beta);
        seq.elems.push_back(next);
        MultiPoly lb = leading_coeff_in(b, var);
        // psi update: psi = (-lc(b))^delta / psi^(delta-1)
        if (delta == 0) {
            // psi unchanged contribution handled by formula below with care
            psi = psi; // delta = 0 cannot occur after first step (degrees strictly decrease)
        } else {
            MultiPoly num = (-lb).pow(delta);
            psi = (delta == 1) ? num : exact_divide(num, psi.pow(delta - 1));
        }
        int new_delta = b.degree_in(var) - next.degree_in(var);
        a = b;
        b = next;
        delta = new_delta;
        beta = -leading_coeff_in(a, var) * psi.pow(delta);
        if (b.degree_in(var) <= 0) break;
    }
    return seq;
}

// Last element of var-degree exactly d in the PRS, if any.
inline const MultiPoly* prs_element_of_degree(const PrsSequence& seq, int d) {
    for (auto it = seq.elems.rbegin(); it != seq.elems.rend(); ++it)
        if (it->degree_in(seq.var) == d) return &*it;
    return nullptr;
}

// ---- gcd / squarefree for rational-coefficient polynomials -----------------

// Univariate MultiPoly (in `var`, rational coefficients) -> QPoly
inline QPoly to_qpoly(const MultiPoly& f, size_t var) {
    int d = f.degree_in(var);
    QPoly p(static_cast<size_t>(std::max(d, 0)) + (d >= 0 ? 1 : 0), Rational(0));
    for (const auto& [e, c] : f.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw error("polynomial is not univariate in the requested variable");
        p[static_cast<size_t>(e[var])] = c.as_rational();
    }
    qp_normalize(p);
    return p;
}

inline MultiPoly from_qpoly(const QPoly& p, size_t var, const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        std::vector<int> e(vars.size(), 0);
        e[var] = static_cast<int>(i);
        r.terms[e] = AlgNum(p[i]);
    }
    return r;
}

inline bool depends_only_on(const MultiPoly& f, size_t var) {
    for (const auto& [e, c] : f.terms)
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) return false;
    return true;
}

// gcd of polynomials whose coefficients in `main_var` are univariate in
// `aux_var` with rational entries (the bivariate case), or constants.
inline MultiPoly bivariate_gcd(const MultiPoly& f, const MultiPoly& g, size_t main_var, size_t aux_var);

inline MultiPoly content_in(const MultiPoly& f, size_t main_var, size_t aux_var) {
    // gcd over QPoly of the main_var coefficients (each univariate in aux_var)
    QPoly acc;
    for (const auto& c : coeffs_in(f, main_var)) {
        if (c.is_zero()) continue;
        acc = acc.empty() ? to_qpoly(c, aux_var) : qp_gcd(acc, to_qpoly(c, aux_var));
        if (qp_deg(acc) == 0) break;
    }
    if (acc.empty()) acc = qp_const(Rational(1));
    return from_qpoly(qp_monic(acc), aux_var, f.vars);
}

inline MultiPoly primitive_part_in(const MultiPoly& f, size_t main_var, size_t aux_var) {
    MultiPoly c = content_in(f, main_var, aux_var);
    return exact_divide(f, c);
}

inline MultiPoly bivariate_gcd(const MultiPoly& f, const MultiPoly& g, size_t main_var, size_t aux_var) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree_in(main_var) == 0 && g.degree_in(main_var) == 0) {
        QPoly a = to_qpoly(f, aux_var), b = to_qpoly(g, aux_var);
        return from_qpoly(qp_gcd(a, b), aux_var, f.vars);
    }
    if (f.degree_in(main_var) == 0 || g.degree_in(main_var) == 0) {
        // gcd divides the content of the other operand
        const MultiPoly& cst = f.degree_in(main_var) == 0 ? f : g;
        const MultiPoly& oth = f.degree_in(main_var) == 0 ? g : f;
        MultiPoly c = content_in(oth, main_var, aux_var);
        QPoly a = to_qpoly(cst, aux_var), b = to_qpoly(c, aux_var);
        return from_qpoly(qp_gcd(a, b), aux_var, f.vars);
    }
    MultiPoly cf = content_in(f, main_var, aux_var), cg = content_in(g, main_var, aux_var);
    MultiPoly pf = exact_divide(f, cf), pg = exact_divide(g, cg);
    PrsSequence seq = subresultant_prs(pf, pg, main_var);
    const MultiPoly* last = nullptr;
    for (const auto& e : seq.elems)
        if (!e.is_zero()) last = &e;
    MultiPoly cand(f.vars);
    if (last->degree_in(main_var) == 0) {
        cand = MultiPoly::constant(AlgNum(Rational(1)), f.vars);
    } else {
        // PRS terminated with a nonzero remainder of positive degree only if
        // the final pseudo-remainder vanished; then `last` is the gcd up to content.
        cand = primitive_part_in(*last, main_var, aux_var);
        if (!divides_exactly(cand, pf) || !divides_exactly(cand, pg))
            cand = MultiPoly::constant(AlgNum(Rational(1)), f.vars);
    }
    QPoly cc = qp_gcd(to_qpoly(cf, aux_var), to_qpoly(cg, aux_var));
    return cand * from_qpoly(cc, aux_var, f.vars);
}

// Primitive squarefree part of a bivariate rational-coefficient polynomial.
inline MultiPoly squarefree_primitive_bivariate(MultiPoly f, size_t v1, size_t v2, bool* was_reduced = nullptr) {
    if (was_reduced) *was_reduced = false;
    if (f.is_zero()) return f;
    // strip numeric content and normalize sign of the lex-leading coefficient
    // pick main variable with positive degree
    size_t main = f.degree_in(v2) > 0 ? v2 : v1;
    size_t aux = main == v2 ? v1 : v2;
    if (f.degree_in(main) == 0) {
        // univariate in aux (or constant)
        QPoly p = to_qpoly(f, aux);
        QPoly sf = qp_squarefree_part(p);
        if (was_reduced && qp_deg(sf) != qp_deg(p)) *was_reduced = true;
        std::vector<Integer> zi = qp_primitive_integer(sf);
        QPoly out;
        for (const auto& z : zi) out.push_back(Rational(z));
        return from_qpoly(out, aux, f.vars);
    }
    MultiPoly c = content_in(f, main, aux);
    MultiPoly pp = exact_divide(f, c);
    MultiPoly d = derivative_in(pp, main);
    MultiPoly g = bivariate_gcd(pp, d, main, aux);
    MultiPoly sf = pp;
    if (g.degree_in(main) > 0 || g.degree_in(aux) > 0) {
        sf = exact_divide(pp, g);
        if (was_reduced) *was_reduced = true;
    }
    // squarefree part of the content contributes its own factors
    QPoly cq = to_qpoly(c, aux);
    QPoly csf = qp_squarefree_part(cq);
    if (qp_deg(csf) > 0) {
        sf = sf * from_qpoly(csf, aux, f.vars);
        if (was_reduced && qp_deg(csf) != qp_deg(cq)) *was_reduced = true;
    }
    // normalize to primitive integer coefficients with positive lex-leading term
    Integer den(1);
    for (const auto& [e, cf2] : sf.terms) den = integer_lcm(den, denominator(cf2.as_rational()));
    Integer gg(0);
    for (const auto& [e, cf2] : sf.terms) {
        Rational q = cf2.as_rational() * Rational(den);
        gg = integer_gcd(gg, numerator(q));
    }
    if (gg == 0) gg = 1;
    Rational scale = Rational(den) / Rational(gg);
    if (sf.terms.rbegin()->second.as_rational() < 0) scale = -scale;
    return sf.scaled(AlgNum(scale));
}

// ---- rendering -------------------------------------------------------------

inline std::string monomial_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

inline std::string to_text(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    // render highest total degree first, then reverse-lex, for readability
    std::vector<std::pair<std::vector<int>, AlgNum>> ts(f.terms.begin(), f.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out;
    for (const auto& [e, c] : ts) {
        std::string mono = monomial_text(f.vars, e);
        bool coeff_is_simple = c.is_rational();
        std::string cs;
        bool neg = false;
        if (coeff_is_simple) {
            Rational q = c.as_rational();
            neg = q < 0;
            Rational a = neg ? Rational(-q) : q;
            cs = to_string(a);
            if (mono.empty()) {
                // keep cs
            } else if (a == 1) {
                cs.clear();
            }
        } else {
            cs = "(" + c.to_text() + ")";
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (cs.empty()) out += mono;
        else if (mono.empty()) out += cs;
        else out += cs + "*" + mono;
    }
    return out;
}

} // namespace gasym

#endif
