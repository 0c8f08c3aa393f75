#ifndef GASYM_PLANECURVE_HPP
#define GASYM_PLANECURVE_HPP

#include <optional>
#include <set>
#include <vector>

#include "gasym/puiseux.hpp"

namespace gasym {

// A point at infinity (1 : m2 : 0) of the plane curve, with the multiplicity
// of m2 as a root of the leading form. When the root is irrational the stored
// representative generates its conjugacy class over `field`.
struct InfinityPointPlane {
    AlgNum m2;
    int multiplicity = 1;
    FieldPtr field; // nullptr when m2 is rational
};

// One infinity branch of a plane curve, represented by a truncated (or exact)
// Puiseux series r2 with r2(z) ~ m2 * z for ordinary branches. Branches whose
// leading exponent exceeds 1 head to (0:1:0) and carry no finite m2.
struct PlaneBranch {
    Puiseux r2;
    Rational lead_exp = Rational(0); // 0 for the zero series
    long ramification = 1;           // N: lcm of exponent denominators
    FieldPtr field;                  // extension generated along the expansion
    int mult = 1;                    // >1 when truncation stopped before branches separated

    AlgNum m2() const { return r2.coeff(Rational(1)); }
};

// ---- polynomials with AlgNum coefficients (char-poly handling) -------------

using APoly = std::vector<AlgNum>;

inline void ap_normalize(APoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int ap_deg(const APoly& p) { return static_cast<int>(p.size()) - 1; }

inline AlgNum ap_eval(const APoly& p, const AlgNum& x) {
    AlgNum acc(Rational(0));
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline APoly ap_divide_linear(const APoly& p, const AlgNum& root) {
    // synthetic division by (c - root); remainder must vanish
    APoly q(p.size() - 1);
    AlgNum carry(Rational(0));
    for (size_t i = p.size(); i-- > 0;) {
        AlgNum v = p[i] + carry;
        if (i == 0) {
            if (!v.is_zero()) throw internal_inconsistency("claimed root does not divide");
            break;
        }
        q[i - 1] = v;
        carry = v * root;
    }
    return q;
}

inline bool ap_all_rational(const APoly& p) {
    for (const auto& c : p)
        if (!c.is_rational()) return false;
    return true;
}

struct CharRoot {
    AlgNum value;
    int multiplicity;
    FieldPtr field; // field of the value (may extend the ambient field)
};

// Nonzero roots of a characteristic polynomial over the ambient field.
// Over Q: rational roots plus one representative for an irreducible residual.
// Over an extension: linear factors and perfect powers of linears only.
inline std::vector<CharRoot> char_roots(APoly phi, const FieldPtr& ambient) {
    ap_normalize(phi);
    std::vector<CharRoot> out;
    if (ap_deg(phi) < 1) return out;
    // strip c = 0 roots
    size_t z0 = 0;
    while (z0 < phi.size() && phi[z0].is_zero()) ++z0;
    phi.erase(phi.begin(), phi.begin() + static_cast<long>(z0));
    if (ap_deg(phi) < 1) return out;

    if (ap_all_rational(phi)) {
        QPoly q;
        for (const auto& c : phi) q.push_back(c.as_rational());
        qp_normalize(q);
        QPoly rest;
        auto rr = qp_rational_roots(q, &rest);
        for (const auto& [root, m] : rr)
            if (root != 0) out.push_back({AlgNum(root), m, ambient});
        if (qp_deg(rest) >= 1) {
            if (ambient)
                throw unsupported("characteristic polynomial needs a second algebraic extension");
            if (!qp_certify_irreducible(rest))
                throw unsupported("characteristic polynomial residual of degree " +
                                  std::to_string(qp_deg(rest)) + " not certified irreducible");
            FieldPtr f = make_field(rest);
            out.push_back({AlgNum::generator(f), 1, f});
        }
        return out;
    }
    // algebraic coefficients: peel linear factors / perfect powers of a linear
    APoly cur = phi;
    while (ap_deg(cur) >= 1) {
        if (ap_deg(cur) == 1) {
            out.push_back({-cur[0] / cur[1], 1, ambient});
            break;
        }
        int d = ap_deg(cur);
        AlgNum cand = -cur[static_cast<size_t>(d) - 1] / (AlgNum(Rational(d)) * cur[static_cast<size_t>(d)]);
        if (!ap_eval(cur, cand).is_zero())
            throw unsupported("nonlinear characteristic polynomial over an extension field");
        int mult = 0;
        while (ap_deg(cur) >= 1 && ap_eval(cur, cand).is_zero()) {
            cur = ap_divide_linear(cur, cand);
            ++mult;
        }
        if (!cand.is_zero()) out.push_back({cand, mult, ambient});
        if (ap_deg(cur) >= 1 && !ap_all_rational(cur))
            throw unsupported("nonlinear characteristic polynomial over an extension field");
        if (ap_deg(cur) >= 1) {
            // remaining rational part: recurse
            auto more = char_roots(cur, ambient);
            out.insert(out.end(), more.begin(), more.end());
            break;
        }
    }
    return out;
}

// ---- Newton polygon expansion at infinity ----------------------------------

namespace detail_newton {

using YPoly = std::vector<Puiseux>; // coefficient of y^j is a finite exact series in z

inline YPoly to_ypoly(const MultiPoly& fp, size_t zvar, size_t yvar) {
    auto cs = coeffs_in(fp, yvar);
    YPoly out;
    for (const auto& c : cs) {
        Puiseux s;
        for (const auto& [e, coeff] : c.terms) s.terms[Rational(e[zvar])] = coeff;
        out.push_back(s);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

struct ExpandState {
    Rational bound;                 // keep terms with exponent > bound
    std::vector<PlaneBranch>* out = nullptr;
};

inline long lcm_of_denominators(const Puiseux& s) {
    Integer N(1);
    for (const auto& [e, c] : s.terms) N = integer_lcm(N, denominator(e));
    if (!N.fits_slong_p()) throw internal_inconsistency("ramification overflow");
    return N.get_si();
}

inline void emit(const Puiseux& partial, bool exact, const FieldPtr& field, int mult,
                 const ExpandState& st) {
    PlaneBranch b;
    b.r2 = partial;
    if (!exact) b.r2.order_bound = st.bound;
    b.r2.clamp();
    b.lead_exp = b.r2.is_zero() ? Rational(0) : b.r2.leading_exponent();
    b.ramification = lcm_of_denominators(b.r2);
    b.field = field;
    b.mult = mult;
    st.out->push_back(b);
}

inline void recurse(const YPoly& F_in, const Puiseux& partial,
                    const std::optional<Rational>& gamma_limit, const FieldPtr& field,
                    int mult, const ExpandState& st) {
    YPoly F = F_in;
    while (!F.empty() && F.back().is_zero()) F.pop_back();
    if (F.empty())
        throw internal_inconsistency("expansion state collapsed to the zero polynomial");

    // exact root: y = 0 solves F when the constant coefficient vanishes
    size_t m0 = 0;
    while (m0 < F.size() && F[m0].is_zero()) ++m0;
    if (m0 > 0) emit(partial, /*exact=*/true, field, static_cast<int>(m0) * mult, st);
    if (m0 + 1 >= F.size()) return; // only the exact root remains

    // vertices (j, a_j) over nonzero coefficients
    std::vector<std::pair<int, Rational>> verts;
    for (size_t j = m0; j < F.size(); ++j)
        if (!F[j].is_zero()) verts.emplace_back(static_cast<int>(j), F[j].leading_exponent());

    // candidate exponents from vertex pairs
    std::set<Rational> cands;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            Rational gamma = (verts[i].second - verts[j].second) /
                             Rational(verts[j].first - verts[i].first);
            if (!gamma_limit || gamma < *gamma_limit) cands.insert(gamma);
        }

    int truncated_mult = 0; // continuations falling entirely below the bound
    for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
        const Rational& gamma = *it;
        // dominant set
        Rational best;
        bool first = true;
        for (const auto& [j, a] : verts) {
            Rational v = a + gamma * Rational(j);
            if (first || v > best) {
                best = v;
                first = false;
            }
        }
        std::vector<std::pair<int, AlgNum>> support;
        for (const auto& [j, a] : verts) {
            if (a + gamma * Rational(j) == best) support.emplace_back(j, F[static_cast<size_t>(j)].leading_coeff());
        }
        if (support.size() < 2) continue; // not an edge
        int jmin = support.front().first;
        APoly phi(static_cast<size_t>(support.back().first - jmin) + 1, AlgNum(Rational(0)));
        for (const auto& [j, c] : support) phi[static_cast<size_t>(j - jmin)] = c;
        std::vector<CharRoot> roots;
        roots = char_roots(phi, field);
        for (const auto& root : roots) {
            if (gamma <= st.bound) {
                int weight = root.multiplicity * (same_field(root.field, field) ? 1 : root.field->degree());
                truncated_mult += weight;
                continue;
            }
            Puiseux next = partial;
            next.add_term(gamma, root.value);
            YPoly G(F.size());
            Puiseux mono = Puiseux::monomial(root.value, gamma);
            // G_j = sum_{i>=j} C(i,j) mono^{i-j} F_i
            std::vector<Puiseux> pows(F.size());
            pows[0] = Puiseux::constant(AlgNum(Rational(1)));
            for (size_t p = 1; p < F.size(); ++p) pows[p] = series_mul(pows[p - 1], mono);
            for (size_t i = 0; i < F.size(); ++i) {
                if (F[i].is_zero()) continue;
                Integer binom(1);
                for (size_t j = 0; j <= i; ++j) {
                    if (j > 0)
                        binom = binom * Integer(static_cast<long>(i - j + 1)) / Integer(static_cast<long>(j));
                    G[j] = series_add(G[j], series_scale(series_mul(pows[i - j], F[i]),
                                                         AlgNum(Rational(binom))));
                }
            }
            recurse(G, next, gamma, root.field, mult, st);
        }
    }
    if (truncated_mult > 0) emit(partial, /*exact=*/false, field, truncated_mult * mult, st);
}

} // namespace detail_newton

// All infinity branches of the reduced plane curve fp(x1, x2) = 0, expanded
// so that every term with exponent > bound is known exactly.
inline std::vector<PlaneBranch> all_infinity_branches(const MultiPoly& fp, const Rational& bound,
                                                      size_t zvar = 0, size_t yvar = 1) {
    if (fp.is_zero() || fp.degree_in(yvar) < 1)
        throw not_a_curve("defining polynomial has no branches in the dependent variable");
    detail_newton::ExpandState st;
    std::vector<PlaneBranch> out;
    st.bound = bound;
    st.out = &out;
    detail_newton::YPoly F = detail_newton::to_ypoly(fp, zvar, yvar);
    detail_newton::recurse(F, Puiseux::zero(), std::nullopt, nullptr, 1, st);
    return out;
}

// Number of Puiseux series accounted for by a representative branch: one per
// Galois conjugate of its coefficients, times the residual multiplicity when
// truncation stopped before branches separated.
inline int branch_series_count(const PlaneBranch& b) {
    int fdeg = b.field ? b.field->degree() : 1;
    return fdeg * b.mult;
}

// ---- infinity points --------------------------------------------------------

inline MultiPoly leading_form(const MultiPoly& f) {
    int d = f.total_degree();
    MultiPoly r(f.vars);
    for (const auto& [e, c] : f.terms) {
        int s = 0;
        for (int x : e) s += x;
        if (s == d) r.terms[e] = c;
    }
    return r;
}

inline bool point_0_1_0_at_infinity(const MultiPoly& fp, size_t zvar = 0, size_t yvar = 1) {
    MultiPoly lf = leading_form(fp);
    return lf.degree_in(yvar) < fp.total_degree();
}

inline std::vector<InfinityPointPlane> infinity_points(const MultiPoly& fp, size_t zvar = 0,
                                                       size_t yvar = 1) {
    if (fp.is_zero()) throw not_a_curve("zero polynomial");
    if (point_0_1_0_at_infinity(fp, zvar, yvar)) throw needs_coordinate_change();
    MultiPoly lf = leading_form(fp);
    // univariate in m: lf(1, m)
    QPoly q;
    int d = fp.total_degree();
    q.assign(static_cast<size_t>(d) + 1, Rational(0));
    for (const auto& [e, c] : lf.terms) q[static_cast<size_t>(e[yvar])] = c.as_rational();
    qp_normalize(q);
    QPoly rest;
    auto rr = qp_rational_roots(q, &rest);
    std::vector<InfinityPointPlane> out;
    for (const auto& [root, m] : rr) out.push_back({AlgNum(root), m, nullptr});
    if (qp_deg(rest) >= 1) {
        if (!qp_certify_irreducible(rest))
            throw unsupported("leading form residual not certified irreducible");
        FieldPtr f = make_field(rest);
        out.push_back({AlgNum::generator(f), 1, f});
    }
    return out;
}

// branches attached to a given point at infinity (1 : m2 : 0)
inline std::vector<PlaneBranch> expand_branch(const MultiPoly& fp, const InfinityPointPlane& point,
                                              const Rational& order) {
    auto all = all_infinity_branches(fp, order);
    std::vector<PlaneBranch> out;
    for (auto& b : all) {
        if (!b.r2.is_zero() && b.lead_exp > 1) continue; // heads to (0:1:0)
        AlgNum m2 = b.m2();
        bool match = false;
        if (point.field && b.field && same_field(point.field, b.field)) match = (m2 == point.m2);
        else if (!point.field && (!b.field || m2.is_rational()))
            match = m2.is_rational() && point.m2.is_rational() &&
                    m2.as_rational() == point.m2.as_rational();
        if (match) out.push_back(b);
    }
    return out;
}

// ---- branch-level operations ------------------------------------------------

// reduced denominator n of the non-negative-exponent part
inline int branch_degree(const PlaneBranch& b) {
    Integer n(1);
    for (const auto& [e, c] : b.r2.terms)
        if (e >= 0) n = integer_lcm(n, denominator(e));
    return static_cast<int>(n.get_si());
}

// the asymptote (t^k, q2(t)) of the plane branch: non-negative part under z = t^k
struct PlaneAsymptote {
    int k;
    Puiseux q2; // polynomial in t (integer exponents)
};

inline PlaneAsymptote plane_asymptote(const PlaneBranch& b) {
    Puiseux nn = nonnegative_part(b.r2);
    int k = branch_degree(b);
    return {k, substitute_power(nn, Rational(k))};
}

// residual check: substituting (z, r2) into fp must kill every trusted term
inline bool branch_residual_vanishes(const MultiPoly& fp, const Puiseux& r2, size_t zvar = 0,
                                     size_t yvar = 1) {
    std::vector<Puiseux> args(fp.nvars(), Puiseux::zero());
    args[zvar] = Puiseux::monomial(AlgNum(Rational(1)), Rational(1));
    args[yvar] = r2;
    Puiseux res = eval_poly_at_series(fp, args);
    return res.terms.empty();
}

// conjugates of a ramified branch under the N-th roots of unity
inline std::vector<PlaneBranch> conjugate_orbit(const PlaneBranch& b) {
    long N = b.ramification;
    if (N <= 1) return {b};
    if (b.field)
        throw unsupported("conjugate orbit over a nontrivial coefficient extension");
    std::vector<PlaneBranch> out;
    auto conj_with = [&](const AlgNum& eps, const FieldPtr& f) {
        PlaneBranch c = b;
        c.field = f;
        Puiseux s;
        s.order_bound = b.r2.order_bound;
        for (const auto& [e, coeff] : b.r2.terms) {
            Rational se = Rational(N) * (Rational(1) - e); // exponent of t = z^{1/N}
            if (!is_integer(se)) throw internal_inconsistency("non-integral conjugation exponent");
            s.terms[e] = coeff * eps.pow(to_long(se));
        }
        c.r2 = s;
        out.push_back(c);
    };
    if (N == 2) {
        conj_with(AlgNum(Rational(1)), nullptr);
        conj_with(AlgNum(Rational(-1)), nullptr);
        return out;
    }
    FieldPtr cyc = make_field(qp_cyclotomic(static_cast<int>(N)), "e", /*known_irreducible=*/true);
    AlgNum eps = AlgNum::generator(cyc);
    AlgNum cur(Rational(1));
    for (long j = 0; j < N; ++j) {
        conj_with(cur, j == 0 ? nullptr : cyc);
        cur = cur * eps;
    }
    return out;
}

// true iff the non-negative-exponent parts coincide
inline bool series_nonnegative_equal(const Puiseux& a, const Puiseux& b) {
    Puiseux na = nonnegative_part(a), nb = nonnegative_part(b);
    return series_sub(na, nb).terms.empty();
}

inline bool branches_convergent(const PlaneBranch& a, const PlaneBranch& b) {
    return series_nonnegative_equal(a.r2, b.r2);
}

} // namespace gasym

#endif
