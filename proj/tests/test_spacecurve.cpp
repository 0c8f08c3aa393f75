#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "gasym/parser.hpp"
#include "gasym/spacecurve.hpp"

using namespace gasym;

namespace {

const std::vector<std::string> V3 = {"x1", "x2", "x3"};

MultiPoly P(const std::string& s) { return parse_poly(s, V3); }

// the rational space curve used throughout: a conic bundle over a quartic
MultiPoly ex1_f1() { return P("-x3^2 + 2*x1*x2 + x1*x3 - x2 + 2"); }
MultiPoly ex1_f2() { return P("x3 - x1*x2 + x2^2"); }

// quintic plane curve swept in x3 by a degree-1 equation
MultiPoly ex2_f1() {
    return P("x1*x2^4 - x2^5 - 2*x1^2*x2^2 + 4*x1*x2^3 - 2*x2^4 + x1^3 - 3*x1^2*x2 "
             "+ 3*x1*x2^2 - x2^3 - 4*x1*x2 + 4*x2^2 - 1");
}
MultiPoly ex2_f2() {
    return P("x1^2*x2 + 2*x1*x2*x3 - x2^2*x3 + x2^2 + x1 - x2 + x3");
}

// curve whose projection needs a cubic extension
MultiPoly ex3_f1() { return P("2*x1^3 + x1*x3^2 + x3^3 + 4*x3"); }
MultiPoly ex3_f2() { return P("-x1^2 - x3^2 + x2"); }

bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    AlgNum ratio = a.terms.begin()->second / b.terms.begin()->second;
    return a == b.scaled(ratio);
}

const PlaneBranch& find_branch(const std::vector<PlaneBranch>& bs,
                               const std::function<bool(const PlaneBranch&)>& pred) {
    for (const auto& b : bs)
        if (pred(b)) return b;
    FAIL("no branch matches the predicate");
    return bs.front();
}

Puiseux mkpoly(const std::vector<std::pair<Rational, Rational>>& terms) {
    Puiseux p;
    for (const auto& [e, c] : terms) p.add_term(e, AlgNum(c));
    return p;
}

AsymptoteParam mkasym(int k, const std::vector<std::pair<Rational, Rational>>& q2,
                      const std::vector<std::pair<Rational, Rational>>& q3) {
    AsymptoteParam a;
    a.k = k;
    a.c1 = Puiseux::monomial(AlgNum(Rational(1)), Rational(k));
    a.q2 = mkpoly(q2);
    a.q3 = mkpoly(q3);
    return a;
}

} // namespace

TEST_CASE("projection of the conic-bundle curve") {
    ProjectResult pr = project(ex1_f1(), ex1_f2());
    CHECK_FALSE(pr.transform.has_value());
    CHECK(pr.fp.degree_in(1) == 4); // quartic in x2
    CHECK(pr.fp.degree_in(2) == 0); // free of x3
    MultiPoly expected =
        P("-x1^2*x2^2 + 2*x1*x2^3 - x2^4 + x1^2*x2 - x1*x2^2 + 2*x1*x2 - x2 + 2");
    CHECK(proportional(pr.fp, expected));
    // lift: x3 = x1 x2 - x2^2 on the curve
    CHECK(pr.lift.h1 == P("x1*x2 - x2^2") * pr.lift.h2);
    CHECK(pr.lift.f3 == pr.lift.h2 * P("x3") - pr.lift.h1);
}

TEST_CASE("projection with an x3-free input") {
    ProjectResult pr = project(ex2_f1(), ex2_f2());
    CHECK_FALSE(pr.transform.has_value());
    CHECK(proportional(pr.fp, ex2_f1()));
    CHECK(pr.lift.f3 == ex2_f2());
    CHECK(pr.lift.h2 == P("2*x1*x2 - x2^2 + 1"));
    CHECK(pr.lift.h1 == P("-x1^2*x2 - x2^2 - x1 + x2"));
}

TEST_CASE("projection needing a cubic extension downstream") {
    ProjectResult pr = project(ex3_f1(), ex3_f2());
    CHECK_FALSE(pr.transform.has_value());
    MultiPoly sextic = P("-2*x1^6 + x1^4*x2 + 8*x1^4 - 4*x1^2*x2^2 - 16*x1^2*x2 "
                         "+ x2^3 - 16*x1^2 + 8*x2^2 + 16*x2");
    CHECK(proportional(pr.fp, sextic));
    MultiPoly f3exp = P("-x1^2*x3 + x2*x3 + 4*x3 + x1^3 + x1*x2");
    CHECK(proportional(pr.lift.f3, f3exp));
}

TEST_CASE("defining polynomials with a common factor are rejected") {
    MultiPoly f1 = P("x3 - x1") * P("x3 + x2");
    MultiPoly f2 = P("x3 - x1") * P("x3 - x2");
    CHECK_THROWS_AS(project(f1, f2), not_a_curve);
}

TEST_CASE("invalid projection directions trigger a coordinate change") {
    // cylinder about the x3-axis cut by a surface quadratic in x3
    ProjectResult pr = project(P("x1^2 + x2^2 - 1"), P("x3^2 - x1"));
    REQUIRE(pr.transform.has_value());
    CHECK_FALSE(pr.fp.is_zero());
    CHECK(pr.fp.degree_in(2) == 0); // x3-free after the change
    // deterministic: the same seed reproduces the same transform
    ProjectResult pr2 = project(P("x1^2 + x2^2 - 1"), P("x3^2 - x1"));
    CHECK(*pr.transform == *pr2.transform);
}

TEST_CASE("branch lifting reproduces deep series coefficients") {
    ProjectResult pr = project(ex1_f1(), ex1_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));
    REQUIRE(branches.size() == 4);

    struct Row {
        std::function<bool(const PlaneBranch&)> pick;
        std::vector<std::pair<Rational, Rational>> r3; // exponent -> coefficient
    };
    std::vector<Row> rows = {
        {[](const PlaneBranch& b) {
             return b.r2.coeff(Rational(1)) == AlgNum(Rational(1)) &&
                    b.r2.coeff(Rational(0)) == AlgNum(Rational(-2));
         },
         {{Rational(1), Rational(2)},
          {Rational(0), make_rational(-5, 3)},
          {Rational(-1), make_rational(-31, 27)},
          {Rational(-2), make_rational(-1447, 243)},
          {Rational(-3), make_rational(-56456, 2187)},
          {Rational(-4), make_rational(-2297014, 19683)}}},
        {[](const PlaneBranch& b) {
             return b.r2.coeff(Rational(1)) == AlgNum(Rational(1)) &&
                    b.r2.coeff(Rational(0)) == AlgNum(Rational(1));
         },
         {{Rational(1), Rational(-1)},
          {Rational(0), make_rational(-1, 3)},
          {Rational(-1), make_rational(4, 27)},
          {Rational(-2), make_rational(-254, 243)},
          {Rational(-3), make_rational(3968, 2187)},
          {Rational(-4), make_rational(-64946, 19683)}}},
        {[](const PlaneBranch& b) { return !b.r2.is_zero() && b.r2.leading_exponent() < 0; },
         {{Rational(-1), Rational(-2)},
          {Rational(-2), Rational(4)},
          {Rational(-3), Rational(-6)},
          {Rational(-4), Rational(0)}}},
        {[](const PlaneBranch& b) {
             return b.r2.coeff(Rational(1)).is_zero() && b.r2.coeff(Rational(0)) == AlgNum(Rational(1));
         },
         {{Rational(1), Rational(1)},
          {Rational(0), Rational(2)},
          {Rational(-1), Rational(3)},
          {Rational(-2), Rational(3)},
          {Rational(-3), Rational(30)},
          {Rational(-4), Rational(120)}}},
    };
    for (const auto& row : rows) {
        const PlaneBranch& b = find_branch(branches, row.pick);
        SpaceBranch sb = lift_branch(b, pr.lift, make_rational(-9, 2));
        CHECK(sb.degree == 1);
        for (const auto& [e, c] : row.r3) CHECK(sb.r3.coeff(e) == AlgNum(c));
    }
}

TEST_CASE("truncation depth search") {
    ProjectResult p1 = project(ex1_f1(), ex1_f2());
    auto bs1 = plane_branches_of(p1.fp, Rational(-8));
    const PlaneBranch& b1 = find_branch(bs1, [](const PlaneBranch& b) {
        return b.r2.coeff(Rational(1)) == AlgNum(Rational(1)) &&
               b.r2.coeff(Rational(0)) == AlgNum(Rational(-2));
    });
    auto [r1, n1] = determine_truncation_params(p1.lift, b1, 1);
    CHECK(r1 == 1);
    CHECK(n1 == 1);

    ProjectResult p2 = project(ex2_f1(), ex2_f2());
    auto bs2 = plane_branches_of(p2.fp, Rational(-8));
    const PlaneBranch& smooth = find_branch(bs2, [](const PlaneBranch& b) {
        return b.ramification == 1 && b.r2.coeff(Rational(1)) == AlgNum(Rational(1));
    });
    auto [r2_, n2_] = determine_truncation_params(p2.lift, smooth, 1);
    CHECK(r2_ == 0);
    CHECK(n2_ == 0);
    const PlaneBranch& ram = find_branch(bs2, [](const PlaneBranch& b) {
        return b.field == nullptr && b.ramification == 4 &&
               b.r2.coeff(make_rational(1, 2)) == AlgNum(Rational(1));
    });
    auto [r3_, n3_] = determine_truncation_params(p2.lift, ram, 4);
    CHECK(r3_ == 2);
    CHECK(n3_ == 2);
}

TEST_CASE("triangular systems on the conic-bundle curve") {
    ProjectResult pr = project(ex1_f1(), ex1_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));
    struct Want {
        Rational m2, a0;   // identify the branch by its two top coefficients
        bool by_leadneg = false;
        std::vector<Rational> sol;
    };
    std::vector<Want> wants = {
        {Rational(1), Rational(-2), false, {Rational(2), make_rational(-5, 3)}},
        {Rational(1), Rational(1), false, {Rational(-1), make_rational(-1, 3)}},
        {Rational(0), Rational(0), true, {Rational(0), Rational(0)}},
        {Rational(0), Rational(1), false, {Rational(1), Rational(2)}},
    };
    for (const auto& w : wants) {
        const PlaneBranch& b = find_branch(branches, [&](const PlaneBranch& x) {
            if (w.by_leadneg) return !x.r2.is_zero() && x.r2.leading_exponent() < 0;
            return x.r2.coeff(Rational(1)) == AlgNum(w.m2) && x.r2.coeff(Rational(0)) == AlgNum(w.a0);
        });
        auto [r, n] = determine_truncation_params(pr.lift, b, 1);
        LambdaSystem sys = lambda_coefficients(pr.lift, b, 1, n);
        CHECK(sys.K == 1);
        CHECK_FALSE(sys.rho.is_zero());
        // strict triangularity with a shared leading multiplier
        for (int i = 0; i <= sys.K; ++i) {
            CHECK(sys.rows[static_cast<size_t>(i)][static_cast<size_t>(i)] == sys.rho);
            for (int j = i + 1; j <= sys.K; ++j)
                CHECK(sys.rows[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero());
        }
        auto sol = solve_triangular(sys);
        REQUIRE(sol.size() == w.sol.size());
        for (size_t i = 0; i < sol.size(); ++i) CHECK(sol[i] == AlgNum(w.sol[i]));
        // leading unknown equals the slope of the lifted branch
        SpaceBranch sb = lift_branch(b, pr.lift, make_rational(-1, 2));
        CHECK(sol[0] == sb.m3());
    }
}

TEST_CASE("triangular system of the swept quintic") {
    ProjectResult pr = project(ex2_f1(), ex2_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));

    // smooth branch: the worked system is Lambda_0 = b0 + 1, Lambda_1 = b1 + 1,
    // whose solution is b0 = b1 = -1 (not the zero asymptote).
    const PlaneBranch& smooth = find_branch(branches, [](const PlaneBranch& b) {
        return b.ramification == 1 && b.r2.coeff(Rational(1)) == AlgNum(Rational(1));
    });
    LambdaSystem s1 = lambda_coefficients(pr.lift, smooth, 1, 0);
    CHECK(s1.K == 1);
    AlgNum rho = s1.rho;
    CHECK(s1.rows[0][2] == rho);          // Lambda_0 = rho*(b0 + 1)
    CHECK(s1.rows[1][2] == rho);          // Lambda_1 = rho*(b1 + ...) with constant rho
    auto sol1 = solve_triangular(s1);
    CHECK(sol1[0] == AlgNum(Rational(-1)));
    CHECK(sol1[1] == AlgNum(Rational(-1)));

    // ramified branch under z = t^4: five unknowns, solution (-1/2, 0, -1/4, 0, 0)
    const PlaneBranch& ram = find_branch(branches, [](const PlaneBranch& b) {
        return b.field == nullptr && b.ramification == 4 &&
               b.r2.coeff(make_rational(1, 2)) == AlgNum(Rational(1));
    });
    LambdaSystem s2 = lambda_coefficients(pr.lift, ram, 4, 2);
    CHECK(s2.K == 4);
    // Lambda_0 = rho*(b0 + 1/2); Lambda_2 has b0-coefficient -rho and constant -rho/4
    CHECK(s2.rows[0][5] == s2.rho * AlgNum(make_rational(1, 2)));
    CHECK(s2.rows[2][0] == -s2.rho);
    CHECK(s2.rows[2][5] == -s2.rho * AlgNum(make_rational(1, 4)));
    auto sol2 = solve_triangular(s2);
    CHECK(sol2[0] == AlgNum(make_rational(-1, 2)));
    CHECK(sol2[1] == AlgNum(Rational(0)));
    CHECK(sol2[2] == AlgNum(make_rational(-1, 4)));
    CHECK(sol2[3] == AlgNum(Rational(0)));
    CHECK(sol2[4] == AlgNum(Rational(0)));
}

TEST_CASE("triangular system over a cubic extension") {
    ProjectResult pr = project(ex3_f1(), ex3_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));
    const PlaneBranch& b = find_branch(branches, [](const PlaneBranch& x) { return x.field != nullptr; });
    REQUIRE(b.field != nullptr);
    CHECK(b.field->degree() == 3);
    auto [r, n] = determine_truncation_params(pr.lift, b, 1);
    LambdaSystem sys = lambda_coefficients(pr.lift, b, 1, n);
    CHECK(sys.K == 2);
    AlgNum lam = AlgNum::generator(b.field);
    // shared multiplier proportional to (lambda - 1)
    AlgNum unit = sys.rho / (lam - AlgNum(Rational(1)));
    CHECK(unit * (lam - AlgNum(Rational(1))) == sys.rho);
    auto sol = solve_triangular(sys);
    CHECK(sol[0].is_zero());
    // -(lambda + 1)/(lambda - 1) reduced modulo the minimal polynomial
    AlgNum b1 = -(lam + AlgNum(Rational(1))) / (lam - AlgNum(Rational(1)));
    CHECK(sol[1] == b1);
    CHECK(b1 == lam * AlgNum(make_rational(3, 2)) - lam * lam * AlgNum(make_rational(1, 2)));
    CHECK(sol[2].is_zero());
}

TEST_CASE("basic method on the conic-bundle curve") {
    Pipeline pl = space_asymptotes_basic(ex1_f1(), ex1_f2());
    REQUIRE(pl.asymptotes.size() == 4);
    std::vector<AsymptoteParam> expected = {
        mkasym(1, {{Rational(1), Rational(1)}, {Rational(0), Rational(-2)}},
               {{Rational(1), Rational(2)}, {Rational(0), make_rational(-5, 3)}}),
        mkasym(1, {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
               {{Rational(1), Rational(-1)}, {Rational(0), make_rational(-1, 3)}}),
        mkasym(1, {}, {}),
        mkasym(1, {{Rational(0), Rational(1)}},
               {{Rational(1), Rational(1)}, {Rational(0), Rational(2)}}),
    };
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& a : pl.asymptotes)
            if (same_asymptote(a, e)) found = true;
        CHECK(found);
    }
    for (const auto& a : pl.asymptotes) CHECK(a.proper);
}

TEST_CASE("improved method agrees on the conic-bundle curve") {
    Pipeline basic = space_asymptotes_basic(ex1_f1(), ex1_f2());
    Pipeline improved = space_asymptotes_improved(ex1_f1(), ex1_f2());
    REQUIRE(improved.asymptotes.size() == basic.asymptotes.size());
    for (const auto& a : basic.asymptotes) {
        bool found = false;
        for (const auto& b : improved.asymptotes)
            if (same_asymptote(a, b)) found = true;
        CHECK(found);
    }
}

TEST_CASE("both methods on the swept quintic") {
    Pipeline improved = space_asymptotes_improved(ex2_f1(), ex2_f2());
    REQUIRE(improved.asymptotes.size() == 2);
    AsymptoteParam line = mkasym(1, {{Rational(1), Rational(1)}},
                                 {{Rational(1), Rational(-1)}, {Rational(0), Rational(-1)}});
    AsymptoteParam para = mkasym(2, {{Rational(1), Rational(1)}, {Rational(0), make_rational(-1, 2)}},
                                 {{Rational(2), make_rational(-1, 2)}, {Rational(1), make_rational(-1, 4)}});
    bool saw_line = false, saw_para = false, saw_repaired = false;
    for (const auto& a : improved.asymptotes) {
        if (same_asymptote(a, line)) saw_line = true;
        if (same_asymptote(a, para)) {
            saw_para = true;
            saw_repaired = a.repaired; // found as (t^4, ...) and reparametrized
        }
        CHECK(a.proper);
    }
    CHECK(saw_line);
    CHECK(saw_para);
    CHECK(saw_repaired);

    Pipeline basic = space_asymptotes_basic(ex2_f1(), ex2_f2());
    REQUIRE(basic.asymptotes.size() == 2);
    for (const auto& a : basic.asymptotes) {
        bool found = false;
        for (const auto& b : improved.asymptotes)
            if (same_asymptote(a, b)) found = true;
        CHECK(found);
    }
}

TEST_CASE("algebraic asymptote and elimination") {
    Pipeline pl = space_asymptotes_improved(ex3_f1(), ex3_f2());
    REQUIRE(pl.asymptotes.size() == 1);
    const AsymptoteParam& a = pl.asymptotes.front();
    REQUIRE(a.field != nullptr);
    CHECK(a.field->degree() == 3);
    CHECK(a.k == 1);
    AlgNum lam = AlgNum::generator(a.field);
    CHECK(a.q2.coeff(Rational(2)) == lam);
    CHECK(a.q2.coeff(Rational(0)) ==
          (lam * lam * AlgNum(Rational(4)) - lam * AlgNum(Rational(36)) - AlgNum(Rational(48))) /
              AlgNum(Rational(29)));
    CHECK(a.q3.coeff(Rational(1)) ==
          lam * AlgNum(make_rational(3, 2)) - lam * lam * AlgNum(make_rational(1, 2)));
    CHECK(a.q3.coeff(Rational(2)).is_zero());
    CHECK(a.q3.coeff(Rational(0)).is_zero());

    auto [g1, g2] = eliminate_lambda(a);
    std::vector<std::string> v4 = {"x1", "x2", "x3", "l"};
    MultiPoly g1exp = parse_poly(
        "48778*x1^6 - 24389*x1^4*x2 - 195112*x1^4 + 97556*x1^2*x2^2 + 390224*x1^2*x2 "
        "- 24389*x2^3 + 538240*x1^2 - 195112*x2^2 - 484416*x2 - 430592",
        v4);
    MultiPoly g2exp = parse_poly("8*x1^3 + 4*x1*x3^2 + 4*x3^3", v4);
    CHECK(proportional(g1, g1exp));
    CHECK(proportional(g2, g2exp));

    // both implicit equations vanish on the parametrization modulo the minimal polynomial
    std::vector<Puiseux> args = {a.c1, a.q2, a.q3, Puiseux::constant(lam)};
    CHECK(eval_poly_at_series(g1, args).is_zero());
    CHECK(eval_poly_at_series(g2, args).is_zero());
}

TEST_CASE("rational elimination describes the asymptote") {
    AsymptoteParam a = mkasym(1, {{Rational(1), Rational(1)}, {Rational(0), Rational(-2)}},
                              {{Rational(1), Rational(2)}, {Rational(0), make_rational(-5, 3)}});
    auto [g1, g2] = eliminate_lambda(a);
    std::vector<std::string> v4 = {"x1", "x2", "x3", "t"};
    CHECK(proportional(g1, parse_poly("x2 - x1 + 2", v4)));
    CHECK(proportional(g2, parse_poly("3*x3 - 6*x1 + 5", v4)));

    AsymptoteParam p = mkasym(2, {{Rational(1), Rational(1)}, {Rational(0), make_rational(-1, 2)}},
                              {{Rational(2), make_rational(-1, 2)}, {Rational(1), make_rational(-1, 4)}});
    auto [h1g, h2g] = eliminate_lambda(p);
    // x1 = t^2, x2 = t - 1/2  =>  (2 x2 + 1)^2 = 4 x1
    CHECK(proportional(h1g, parse_poly("4*x2^2 + 4*x2 + 1 - 4*x1", v4)));
    std::vector<Puiseux> args = {p.c1, p.q2, p.q3, Puiseux::zero()};
    CHECK(eval_poly_at_series(h1g, args).is_zero());
    CHECK(eval_poly_at_series(h2g, args).is_zero());
}

TEST_CASE("extended systems agree with series lifting") {
    ProjectResult pr = project(ex1_f1(), ex1_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));
    const PlaneBranch& b = find_branch(branches, [](const PlaneBranch& x) {
        return x.r2.coeff(Rational(1)) == AlgNum(Rational(1)) &&
               x.r2.coeff(Rational(0)) == AlgNum(Rational(-2));
    });
    SpaceBranch ext = extend_branch(pr.lift, b, 2);
    CHECK(ext.r3.coeff(Rational(1)) == AlgNum(Rational(2)));
    CHECK(ext.r3.coeff(Rational(0)) == AlgNum(make_rational(-5, 3)));
    CHECK(ext.r3.coeff(Rational(-1)) == AlgNum(make_rational(-31, 27)));
    CHECK(ext.r3.coeff(Rational(-2)) == AlgNum(make_rational(-1447, 243)));
    // agreement with direct series division on the overlap
    SpaceBranch lifted = lift_branch(b, pr.lift, make_rational(-5, 2));
    for (const auto& [e, c] : lifted.r3.terms)
        if (e >= -2) CHECK(ext.r3.coeff(e) == c);
}

TEST_CASE("graph-style curve stresses fractional leading exponents") {
    // projection x2^2 = x1^3 with x3 = x1 * x2 on the curve
    MultiPoly f1 = P("x2^2 - x1^3");
    MultiPoly f2 = P("x3 - x1*x2");
    Pipeline basic = space_asymptotes_basic(f1, f2);
    Pipeline improved = space_asymptotes_improved(f1, f2);
    REQUIRE(basic.asymptotes.size() == 1);
    REQUIRE(improved.asymptotes.size() == 1);
    CHECK(same_asymptote(basic.asymptotes.front(), improved.asymptotes.front()));
    // (t^2, t^3, t^5) up to t -> -t
    AsymptoteParam want = mkasym(2, {{Rational(3), Rational(1)}}, {{Rational(5), Rational(1)}});
    CHECK(same_asymptote(basic.asymptotes.front(), want));
    CHECK(basic.asymptotes.front().k == 2);
}

TEST_CASE("convergence reports") {
    ProjectResult pr = project(ex1_f1(), ex1_f2());
    auto branches = plane_branches_of(pr.fp, Rational(-8));
    const PlaneBranch& b = find_branch(branches, [](const PlaneBranch& x) {
        return x.r2.coeff(Rational(1)) == AlgNum(Rational(1)) &&
               x.r2.coeff(Rational(0)) == AlgNum(Rational(-2));
    });
    SpaceBranch sb = lift_branch(b, pr.lift, make_rational(-5, 2));
    AsymptoteParam a = mkasym(1, {{Rational(1), Rational(1)}, {Rational(0), Rational(-2)}},
                              {{Rational(1), Rational(2)}, {Rational(0), make_rational(-5, 3)}});
    ConvergenceReport rep = verify_convergence(a, sb, {100.0, 1000.0, 10000.0});
    CHECK(rep.exact_match);
    CHECK(rep.evaluated);
    REQUIRE(rep.distances.size() == 3);
    CHECK(rep.strictly_decreasing);
    // an unrelated line is not the asymptote of this branch
    AsymptoteParam other = mkasym(1, {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}},
                                  {{Rational(1), Rational(-1)}, {Rational(0), make_rational(-1, 3)}});
    ConvergenceReport bad = verify_convergence(other, sb, {100.0, 1000.0, 10000.0});
    CHECK_FALSE(bad.exact_match);
    CHECK_FALSE(bad.strictly_decreasing);
}
