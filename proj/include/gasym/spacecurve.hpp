#ifndef GASYM_SPACECURVE_HPP
#define GASYM_SPACECURVE_HPP

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "gasym/planecurve.hpp"

namespace gasym {

// x3 = h1/h2 on the projected curve; f3 = h2*x3 - h1 vanishes on the space curve.
struct LiftFunction {
    MultiPoly h1, h2, f3; // over {x1, x2, x3}; h1, h2 free of x3
};

struct ProjectResult {
    MultiPoly fp;                       // reduced plane projection (x3-free, over {x1,x2,x3})
    LiftFunction lift;
    std::optional<RatMatrix> transform; // coordinate change applied when the original
                                        // x3-direction was not valid (inverse restores)
    bool fp_was_reduced = false;        // resultant had multiple factors
};

struct SpaceBranch {
    PlaneBranch plane; // r2 and its bookkeeping
    Puiseux r3;
    int degree = 1; // lcm(n2, n3)

    AlgNum m2() const { return plane.m2(); }
    AlgNum m3() const { return r3.coeff(Rational(1)); }
};

// Polynomial parametrization (c1(t), q2(t), q3(t)); c1 = t^k unless an inverse
// coordinate change mixed the components.
struct AsymptoteParam {
    int k = 1;
    Puiseux c1, q2, q3; // polynomials in t (non-negative integer exponents)
    bool proper = true;
    bool repaired = false; // properness was repaired by exponent-gcd substitution
    FieldPtr field;        // minimal polynomial of algebraic coefficients, if any
    std::vector<size_t> sources; // indices of the plane branches producing it
};

// Triangular system Lambda_0..Lambda_K in unknowns b_0..b_K.
struct LambdaSystem {
    int k = 1;   // substitution z = t^k
    int K = 0;   // highest unknown index; q3 = b_0 t^K + ... + b_K
    long mu = 0; // t-degree of the numerator
    AlgNum rho;  // common coefficient of b_i in Lambda_i
    // rows[i][j] = coefficient of b_j in Lambda_i for j <= K; rows[i][K+1] = constant
    std::vector<std::vector<AlgNum>> rows;
    int n_used = 0, r_used = 0;
    FieldPtr field;
};

// ---- projection and lift ----------------------------------------------------

namespace detail_proj {

inline RatMatrix random_transform(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (int tries = 0; tries < 100; ++tries) {
        RatMatrix m(3, std::vector<Rational>(3));
        for (auto& row : m)
            for (auto& v : row) v = Rational(d(rng));
        try {
            matrix_inverse(m);
            return m;
        } catch (const invalid_transform&) {
        }
    }
    throw internal_inconsistency("could not draw an invertible transform");
}

// lift attempt in the current coordinates; nullopt when the direction is invalid
inline std::optional<ProjectResult> attempt(const MultiPoly& f1, const MultiPoly& f2) {
    int d1 = f1.degree_in(2), d2 = f2.degree_in(2);
    if (d1 < 0 || d2 < 0) throw not_a_curve("a defining polynomial is zero");
    ProjectResult out;
    if (d1 == 0 && d2 == 0) return std::nullopt; // projection along x3 collapses nothing
    if (d1 == 0 || d2 == 0) {
        const MultiPoly& planar = d1 == 0 ? f1 : f2;
        const MultiPoly& other = d1 == 0 ? f2 : f1;
        if (other.degree_in(2) != 1) return std::nullopt; // x3 not single-valued
        out.fp = squarefree_primitive_bivariate(planar, 0, 1, &out.fp_was_reduced);
        MultiPoly h2 = leading_coeff_in(other, 2);
        MultiPoly h1 = -(other - h2 * MultiPoly::variable(2, other.vars));
        out.lift = {h1, h2, other};
        return out;
    }
    PrsSequence seq = subresultant_prs(f1, f2, 2);
    const MultiPoly* deg0 = prs_element_of_degree(seq, 0);
    if (deg0 == nullptr) {
        // pseudo-remainder vanished at positive degree: nontrivial common factor
        throw not_a_curve("defining polynomials share a common factor");
    }
    const MultiPoly* deg1 = prs_element_of_degree(seq, 1);
    if (deg1 == nullptr) return std::nullopt;
    out.fp = squarefree_primitive_bivariate(*deg0, 0, 1, &out.fp_was_reduced);
    MultiPoly h2 = leading_coeff_in(*deg1, 2);
    MultiPoly h1 = -(*deg1 - h2 * MultiPoly::variable(2, f1.vars));
    if (h2.is_zero()) return std::nullopt;
    if (divides_exactly(out.fp, h2)) return std::nullopt; // h2 vanishes on the curve
    out.lift = {h1, h2, *deg1};
    return out;
}

} // namespace detail_proj

inline ProjectResult project(const MultiPoly& f1, const MultiPoly& f2, unsigned seed = 20240817) {
    MultiPoly::check_vars(f1, f2);
    if (f1.nvars() != 3) throw error("space curves need exactly three variables");
    if (f1.is_constant() || f2.is_constant()) throw not_a_curve("constant defining polynomial");
    if (auto r = detail_proj::attempt(f1, f2)) return *r;
    std::mt19937 rng(seed);
    for (int retry = 0; retry < 5; ++retry) {
        RatMatrix m = detail_proj::random_transform(rng);
        MultiPoly g1 = linear_change(f1, m), g2 = linear_change(f2, m);
        if (auto r = detail_proj::attempt(g1, g2)) {
            r->transform = m;
            return *r;
        }
    }
    throw no_valid_direction();
}

inline LiftFunction lift_function(const MultiPoly& f1, const MultiPoly& f2, const MultiPoly& fp) {
    (void)fp;
    if (auto r = detail_proj::attempt(f1, f2)) return r->lift;
    throw no_valid_direction("no x3-degree-1 element in the remainder sequence");
}

// ---- branch lifting ---------------------------------------------------------

// r3(z) = h1(z, r2) / h2(z, r2), correct above `order`
inline Puiseux lift_series(const LiftFunction& L, const Puiseux& r2, const Rational& order) {
    std::vector<Puiseux> args(3, Puiseux::zero());
    args[0] = Puiseux::monomial(AlgNum(Rational(1)), Rational(1));
    args[1] = r2;
    Puiseux num = eval_poly_at_series(L.h1, args);
    Puiseux den = eval_poly_at_series(L.h2, args);
    if (den.is_zero()) {
        if (den.order_bound) throw needs_more_terms("lift denominator truncated to nothing");
        throw internal_inconsistency("lift denominator vanishes identically");
    }
    if (num.is_zero()) {
        Puiseux r;
        r.order_bound = num.order_bound;
        return r;
    }
    Puiseux inv = series_inverse(den, order - num.leading_exponent());
    Puiseux r3 = series_truncate(series_mul(num, inv), order);
    if (r3.order_bound && *r3.order_bound > order)
        throw needs_more_terms("branch truncation too shallow to lift to the requested order");
    return r3;
}

inline int nonneg_denominator_lcm(const Puiseux& s) {
    Integer n(1);
    for (const auto& [e, c] : s.terms)
        if (e >= 0) n = integer_lcm(n, denominator(e));
    return static_cast<int>(n.get_si());
}

inline SpaceBranch lift_branch(const PlaneBranch& b, const LiftFunction& L, const Rational& order) {
    SpaceBranch out;
    out.plane = b;
    out.r3 = lift_series(L, b.r2, order);
    if (order < 0)
        out.degree = static_cast<int>(integer_lcm(Integer(branch_degree(b)),
                                                  Integer(nonneg_denominator_lcm(out.r3)))
                                          .get_si());
    return out;
}

// ---- Lambda system ----------------------------------------------------------

namespace detail_lambda {

// A(t) = h2(t^k, S2), B(t) = h1(t^k, S2)
struct ABPair {
    Puiseux A, B;
};

inline ABPair compute_ab(const LiftFunction& L, const Puiseux& S2, int k) {
    std::vector<Puiseux> args(3, Puiseux::zero());
    args[0] = Puiseux::monomial(AlgNum(Rational(1)), Rational(k));
    args[1] = S2;
    return {eval_poly_at_series(L.h2, args), eval_poly_at_series(L.h1, args)};
}

inline bool coeff_trusted(const Puiseux& s, const Rational& e) {
    return !s.order_bound || e > *s.order_bound;
}

} // namespace detail_lambda

// Truncation bound keeping exactly n negative-exponent positions (steps of 1/k).
inline Rational truncation_bound(int k, int n) {
    return make_rational(-(2 * n + 1), 2 * k);
}

// Build the triangular system for branch b under z = t^k with n negative terms
// retained. Throws needs_more_terms when the truncation cannot certify the
// required coefficients.
inline LambdaSystem lambda_coefficients(const LiftFunction& L, const PlaneBranch& b, int k, int n,
                                        int extend = 0) {
    Rational beta = truncation_bound(k, n);
    if (b.r2.order_bound && *b.r2.order_bound > beta)
        throw needs_more_terms("plane branch not expanded deeply enough");
    Puiseux r2t = series_truncate(b.r2, beta);
    Puiseux S2 = substitute_power(r2t, Rational(k));
    auto [A, B] = detail_lambda::compute_ab(L, S2, k);
    if (A.is_zero())
        throw needs_more_terms("lift denominator truncated to nothing under substitution");

    Rational degA = A.leading_exponent();
    if (!is_integer(degA)) throw internal_inconsistency("non-integral degree after substitution");
    long dA = to_long(degA);
    long dB = B.is_zero() ? dA : to_long(B.leading_exponent()); // exponents integral by construction
    long K2 = S2.is_zero() ? 0 : std::max(0L, to_long(S2.leading_exponent()));
    long K = std::max({static_cast<long>(k), K2, dB - dA});
    long mu = dA + K;
    long rows_hi = K + extend; // unknown b_j sits at exponent K - j (negative when j > K)

    LambdaSystem sys;
    sys.k = k;
    sys.K = static_cast<int>(K);
    sys.mu = mu;
    sys.field = b.field;
    sys.n_used = n;
    sys.r_used = n;
    sys.rho = A.leading_coeff();
    for (long i = 0; i <= rows_hi; ++i) {
        std::vector<AlgNum> row(static_cast<size_t>(rows_hi) + 2, AlgNum(Rational(0)));
        for (long j = 0; j <= i; ++j) {
            Rational e(mu - i - K + j);
            if (!detail_lambda::coeff_trusted(A, e))
                throw needs_more_terms("untrusted numerator coefficient");
            row[static_cast<size_t>(j)] = A.coeff(e);
        }
        Rational eb(mu - i);
        if (!detail_lambda::coeff_trusted(B, eb))
            throw needs_more_terms("untrusted numerator coefficient");
        row[static_cast<size_t>(rows_hi) + 1] = -B.coeff(eb);
        sys.rows.push_back(std::move(row));
    }
    // strict triangularity with a shared rho holds by construction; verify anyway
    for (long i = 0; i <= rows_hi; ++i) {
        if (sys.rows[static_cast<size_t>(i)][static_cast<size_t>(i)] != sys.rho)
            throw internal_inconsistency("Lambda system lost its shared leading multiplier");
    }
    if (sys.rho.is_zero()) throw internal_inconsistency("vanishing leading multiplier");
    return sys;
}

inline std::vector<AlgNum> solve_triangular(const LambdaSystem& S) {
    size_t count = S.rows.size();
    std::vector<AlgNum> b(count, AlgNum(Rational(0)));
    AlgNum rho_inv = S.rho.inverse();
    for (size_t i = 0; i < count; ++i) {
        AlgNum acc = S.rows[i][count];
        for (size_t j = 0; j < i; ++j) acc += S.rows[i][j] * b[j];
        b[i] = -acc * rho_inv;
    }
    return b;
}

// Minimal truncation depth (r, n) for the improved method on branch b.
inline std::pair<int, int> determine_truncation_params(const LiftFunction& L, const PlaneBranch& b,
                                                       int k) {
    for (int n = 0; n <= 40; ++n) {
        if (b.r2.order_bound && *b.r2.order_bound > truncation_bound(k, n))
            throw needs_more_terms("plane branch not expanded deeply enough for the depth search");
        try {
            lambda_coefficients(L, b, k, n);
            return {n, n};
        } catch (const needs_more_terms&) {
        }
    }
    throw internal_inconsistency("truncation-depth search did not terminate");
}

// ---- asymptote assembly -----------------------------------------------------

inline Puiseux poly_from_solution(const std::vector<AlgNum>& bs, int K) {
    Puiseux q;
    for (size_t j = 0; j < bs.size(); ++j) q.add_term(Rational(K - static_cast<int>(j)), bs[j]);
    return q;
}

inline std::vector<Rational> all_exponents(const AsymptoteParam& a) {
    std::vector<Rational> es;
    es.push_back(Rational(a.k));
    for (const auto& [e, c] : a.c1.terms) es.push_back(e);
    for (const auto& [e, c] : a.q2.terms) es.push_back(e);
    for (const auto& [e, c] : a.q3.terms) es.push_back(e);
    return es;
}

inline AsymptoteParam make_proper(const AsymptoteParam& a) {
    Integer g(0);
    for (const auto& [e, c] : a.c1.terms) g = integer_gcd(g, numerator(e));
    for (const auto& [e, c] : a.q2.terms) g = integer_gcd(g, numerator(e));
    for (const auto& [e, c] : a.q3.terms) g = integer_gcd(g, numerator(e));
    if (g <= 1) {
        AsymptoteParam r = a;
        r.proper = true;
        return r;
    }
    long d = g.get_si();
    AsymptoteParam r = a;
    r.c1 = substitute_power(a.c1, Rational(1, d));
    r.q2 = substitute_power(a.q2, Rational(1, d));
    r.q3 = substitute_power(a.q3, Rational(1, d));
    r.k = static_cast<int>(a.k / d);
    r.proper = true;
    r.repaired = true;
    return r;
}

// Drop the field tag when every coefficient turned out rational (e.g. a branch
// over Q(i) whose asymptote has rational coefficients).
inline void demote_rational_asymptote(AsymptoteParam& a) {
    if (!a.field) return;
    auto all_rat = [](const Puiseux& q) {
        for (const auto& [e, c] : q.terms)
            if (!c.is_rational()) return false;
        return true;
    };
    if (all_rat(a.c1) && all_rat(a.q2) && all_rat(a.q3)) a.field = nullptr;
}

// parametrizations describe the same curve up to the reparametrization t -> -t
inline bool same_asymptote(const AsymptoteParam& a, const AsymptoteParam& b) {
    if (a.k != b.k) return false;
    if ((a.field == nullptr) != (b.field == nullptr)) return false;
    if (a.field && b.field && !same_field(a.field, b.field)) return false;
    auto flip = [](const Puiseux& q) {
        Puiseux r;
        for (const auto& [e, c] : q.terms) {
            bool odd = is_integer(e) && to_long(e) % 2 != 0;
            r.terms[e] = odd ? -c : c;
        }
        return r;
    };
    auto eq = [](const Puiseux& x, const Puiseux& y) { return series_sub(x, y).terms.empty(); };
    if (eq(a.c1, b.c1) && eq(a.q2, b.q2) && eq(a.q3, b.q3)) return true;
    return eq(a.c1, flip(b.c1)) && eq(a.q2, flip(b.q2)) && eq(a.q3, flip(b.q3));
}

// The transformed curve satisfies g(y) = f(M y); a parametrization found in the
// transformed coordinates maps back through x = M y.
inline void apply_inverse_transform(AsymptoteParam& a, const RatMatrix& m) {
    Puiseux comps[3] = {a.c1, a.q2, a.q3};
    Puiseux out[3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i] = series_add(out[i], series_scale(comps[j], AlgNum(m[static_cast<size_t>(i)][static_cast<size_t>(j)])));
    a.c1 = out[0];
    a.q2 = out[1];
    a.q3 = out[2];
}

// ---- pipelines --------------------------------------------------------------

struct Pipeline {
    MultiPoly f1, f2;
    ProjectResult proj;
    std::vector<PlaneBranch> branches;     // representative plane branches
    std::vector<SpaceBranch> space;        // lifted branches (same order)
    std::vector<AsymptoteParam> asymptotes;
    std::vector<LambdaSystem> systems;     // improved method only (same order as branches)
};

inline std::vector<PlaneBranch> plane_branches_of(const MultiPoly& fp, const Rational& bound) {
    return all_infinity_branches(fp, bound, 0, 1);
}

namespace detail_pipeline {

inline void dedup_push(std::vector<AsymptoteParam>& list, AsymptoteParam a, size_t source) {
    a.sources = {source};
    for (auto& existing : list) {
        if (same_asymptote(existing, a)) {
            existing.sources.push_back(source);
            return;
        }
    }
    list.push_back(std::move(a));
}

} // namespace detail_pipeline

// Basic method: truncate both Puiseux series to their non-negative parts.
inline Pipeline space_asymptotes_basic(const MultiPoly& f1, const MultiPoly& f2,
                                       unsigned seed = 20240817) {
    Pipeline pl;
    pl.f1 = f1;
    pl.f2 = f2;
    pl.proj = project(f1, f2, seed);
    MultiPoly g1 = f1, g2 = f2;
    if (pl.proj.transform) {
        g1 = linear_change(f1, *pl.proj.transform);
        g2 = linear_change(f2, *pl.proj.transform);
    }
    for (Rational bound(-4); bound >= -64; bound -= 4) {
        try {
            pl.branches = plane_branches_of(pl.proj.fp, bound);
            pl.space.clear();
            pl.asymptotes.clear();
            for (size_t i = 0; i < pl.branches.size(); ++i) {
                const PlaneBranch& b = pl.branches[i];
                SpaceBranch sb = lift_branch(b, pl.proj.lift,
                                             Rational(-1, 2 * std::max<long>(1, b.ramification)));
                pl.space.push_back(sb);
                int n = sb.degree;
                AsymptoteParam a;
                a.k = n;
                a.c1 = Puiseux::monomial(AlgNum(Rational(1)), Rational(n));
                a.q2 = substitute_power(nonnegative_part(b.r2), Rational(n));
                a.q3 = substitute_power(nonnegative_part(sb.r3), Rational(n));
                a.q2.order_bound.reset();
                a.q3.order_bound.reset();
                a.field = b.field;
                a = make_proper(a);
                demote_rational_asymptote(a);
                if (pl.proj.transform) apply_inverse_transform(a, *pl.proj.transform);
                detail_pipeline::dedup_push(pl.asymptotes, a, i);
            }
            return pl;
        } catch (const needs_more_terms&) {
        }
    }
    throw needs_more_terms("expansion depth budget exhausted");
}

// Improved method: solve the triangular system instead of lifting deep series.
inline Pipeline space_asymptotes_improved(const MultiPoly& f1, const MultiPoly& f2,
                                          unsigned seed = 20240817) {
    Pipeline pl;
    pl.f1 = f1;
    pl.f2 = f2;
    pl.proj = project(f1, f2, seed);
    for (Rational bound(-4); bound >= -64; bound -= 4) {
        try {
            pl.branches = plane_branches_of(pl.proj.fp, bound);
            pl.space.clear();
            pl.asymptotes.clear();
            pl.systems.clear();
            for (size_t i = 0; i < pl.branches.size(); ++i) {
                const PlaneBranch& b = pl.branches[i];
                int k = static_cast<int>(b.ramification);
                auto [r, n] = determine_truncation_params(pl.proj.lift, b, k);
                LambdaSystem sys = lambda_coefficients(pl.proj.lift, b, k, n);
                std::vector<AlgNum> sol = solve_triangular(sys);
                pl.systems.push_back(sys);
                AsymptoteParam a;
                a.k = k;
                a.c1 = Puiseux::monomial(AlgNum(Rational(1)), Rational(k));
                a.q2 = substitute_power(nonnegative_part(b.r2), Rational(k));
                a.q2.order_bound.reset();
                a.q3 = poly_from_solution(sol, sys.K);
                a.field = b.field;
                a = make_proper(a);
                demote_rational_asymptote(a);
                if (pl.proj.transform) apply_inverse_transform(a, *pl.proj.transform);
                detail_pipeline::dedup_push(pl.asymptotes, a, i);
            }
            return pl;
        } catch (const needs_more_terms&) {
        }
    }
    throw needs_more_terms("expansion depth budget exhausted");
}

// Extended triangular system: recover m negative-exponent terms of r3 without
// series division.
inline SpaceBranch extend_branch(const LiftFunction& L, const PlaneBranch& b, int m) {
    int k = static_cast<int>(b.ramification);
    for (int n = m; n <= 40 + m; ++n) {
        if (b.r2.order_bound && *b.r2.order_bound > truncation_bound(k, n))
            throw needs_more_terms("plane branch not expanded deeply enough to extend");
        try {
            LambdaSystem sys = lambda_coefficients(L, b, k, n, /*extend=*/m);
            std::vector<AlgNum> sol = solve_triangular(sys);
            SpaceBranch out;
            out.plane = b;
            Puiseux q3t = poly_from_solution(sol, sys.K); // in t; includes exponents down to -m... 0
            // back to z: exponents divide by k; trusted down to -m/k inclusive
            out.r3 = substitute_power(q3t, Rational(1, k));
            out.r3.order_bound = make_rational(-(2 * m + 1), 2 * k);
            out.degree = static_cast<int>(integer_lcm(Integer(branch_degree(b)),
                                                      Integer(nonneg_denominator_lcm(out.r3)))
                                              .get_si());
            return out;
        } catch (const needs_more_terms&) {
        }
    }
    throw internal_inconsistency("extension-depth search did not terminate");
}

// ---- implicitization of an asymptote ---------------------------------------

namespace detail_elim {

// MultiPoly over {x1,x2,x3,l} from a univariate-in-t series equated to var:
// returns numerator of (x_var - q(x1)) with algebraic coefficients spread over l.
inline MultiPoly clear_to_lambda(const Puiseux& q, size_t var, const FieldPtr& field) {
    std::vector<std::string> vars = {"x1", "x2", "x3", "l"};
    (void)field;
    Integer den(1);
    for (const auto& [e, c] : q.terms)
        for (const auto& coeff : c.rep()) den = integer_lcm(den, denominator(coeff));
    MultiPoly out(vars);
    std::vector<int> ev(4, 0);
    ev[var] = 1;
    out.add_term(ev, AlgNum(Rational(den)));
    for (const auto& [e, c] : q.terms) {
        if (!is_integer(e)) throw invalid_elimination("fractional exponent in a polynomial parametrization");
        const QPoly& rep = c.rep();
        for (size_t p = 0; p < rep.size(); ++p) {
            if (rep[p] == 0) continue;
            std::vector<int> e2(4, 0);
            e2[0] = static_cast<int>(to_long(e));
            e2[3] = static_cast<int>(p);
            out.add_term(e2, AlgNum(-rep[p] * Rational(den)));
        }
    }
    return out;
}

inline MultiPoly primitive_integer_normal(const MultiPoly& f) {
    Integer den(1);
    for (const auto& [e, c] : f.terms) den = integer_lcm(den, denominator(c.as_rational()));
    Integer g(0);
    for (const auto& [e, c] : f.terms) g = integer_gcd(g, numerator(c.as_rational() * Rational(den)));
    if (g == 0) g = 1;
    Rational scale = Rational(den) / Rational(g);
    if (f.terms.rbegin()->second.as_rational() < 0) scale = -scale;
    return f.scaled(AlgNum(scale));
}

} // namespace detail_elim

// Implicit defining pair of the asymptote curve (union of conjugates when the
// coefficients are algebraic over m(lambda)).
inline std::pair<MultiPoly, MultiPoly> eliminate_lambda(const AsymptoteParam& a) {
    std::vector<std::string> vars = {"x1", "x2", "x3", "l"};
    if (a.field) {
        if (a.k != 1 || series_sub(a.c1, Puiseux::monomial(AlgNum(Rational(1)), Rational(1))).terms.size() != 0)
            throw unsupported("lambda elimination requires first component t");
        MultiPoly m(vars);
        for (size_t p = 0; p < a.field->minpoly.size(); ++p) {
            if (a.field->minpoly[p] == 0) continue;
            std::vector<int> e(4, 0);
            e[3] = static_cast<int>(p);
            m.add_term(e, AlgNum(a.field->minpoly[p]));
        }
        MultiPoly p2 = detail_elim::clear_to_lambda(a.q2, 1, a.field);
        MultiPoly p3 = detail_elim::clear_to_lambda(a.q3, 2, a.field);
        auto res_or_self = [&](const MultiPoly& p) {
            if (p.degree_in(3) < 1) return detail_elim::primitive_integer_normal(p);
            return detail_elim::primitive_integer_normal(sylvester_resultant(p, m, 3));
        };
        return {res_or_self(p2), res_or_self(p3)};
    }
    // rational coefficients: eliminate the parameter t directly
    std::vector<std::string> tv = {"x1", "x2", "x3", "t"};
    auto to_poly = [&](const Puiseux& q, size_t var) {
        MultiPoly out(tv);
        std::vector<int> ev(4, 0);
        ev[var] = 1;
        out.add_term(ev, AlgNum(Rational(1)));
        for (const auto& [e, c] : q.terms) {
            std::vector<int> e2(4, 0);
            e2[3] = static_cast<int>(to_long(e));
            out.add_term(e2, -c);
        }
        return out;
    };
    MultiPoly p1 = to_poly(a.c1, 0), p2 = to_poly(a.q2, 1), p3 = to_poly(a.q3, 2);
    auto elim = [&](const MultiPoly& x, const MultiPoly& y) {
        if (x.degree_in(3) < 1) return detail_elim::primitive_integer_normal(x);
        if (y.degree_in(3) < 1) return detail_elim::primitive_integer_normal(y);
        return detail_elim::primitive_integer_normal(sylvester_resultant(x, y, 3));
    };
    return {elim(p1, p2), elim(p1, p3)};
}

// ---- convergence reports ----------------------------------------------------

struct ConvergenceReport {
    bool exact_match = false;          // identical non-negative parts
    std::vector<double> magnitudes;
    std::vector<double> distances;
    bool strictly_decreasing = false;
    bool evaluated = true;             // false when no real embedding was available
};

inline ConvergenceReport verify_convergence(const AsymptoteParam& a, const SpaceBranch& br,
                                            const std::vector<double>& samples) {
    ConvergenceReport rep;
    Rational invk(1, a.k);
    Puiseux aq2 = substitute_power(a.q2, invk); // asymptote components in z
    Puiseux aq3 = substitute_power(a.q3, invk);
    rep.exact_match = series_nonnegative_equal(br.plane.r2, aq2) &&
                      series_nonnegative_equal(br.r3, aq3);
    if (!rep.exact_match) {
        // the branch may correspond to the t -> -t orientation of the parametrization
        auto flip = [&](const Puiseux& q) {
            Puiseux r;
            for (const auto& [e, c] : q.terms) {
                Rational ek = e * Rational(a.k);
                bool odd = is_integer(ek) && to_long(ek) % 2 != 0;
                r.terms[e] = odd ? -c : c;
            }
            r.order_bound = q.order_bound;
            return r;
        };
        Puiseux f2 = flip(aq2), f3 = flip(aq3);
        if (series_nonnegative_equal(br.plane.r2, f2) && series_nonnegative_equal(br.r3, f3)) {
            rep.exact_match = true;
            aq2 = f2;
            aq3 = f3;
        }
    }
    double lam = 0.0;
    FieldPtr f = br.plane.field ? br.plane.field : a.field;
    if (f) {
        auto roots = real_roots_double(f->minpoly);
        if (roots.empty()) {
            rep.evaluated = false;
            return rep;
        }
        lam = roots.front();
    }
    rep.magnitudes = samples;
    for (double s : samples) {
        double dx2 = series_eval_double(br.plane.r2, s, lam) - series_eval_double(aq2, s, lam);
        double dx3 = series_eval_double(br.r3, s, lam) - series_eval_double(aq3, s, lam);
        rep.distances.push_back(std::sqrt(dx2 * dx2 + dx3 * dx3));
    }
    rep.strictly_decreasing = rep.distances.size() >= 2;
    for (size_t i = 1; i < rep.distances.size(); ++i)
        if (!(rep.distances[i] < rep.distances[i - 1])) rep.strictly_decreasing = false;
    return rep;
}

} // namespace gasym

#endif
