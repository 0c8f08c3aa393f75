#ifndef GASYM_ALGEBRAIC_HPP
#define GASYM_ALGEBRAIC_HPP

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "gasym/qpoly.hpp"

namespace gasym {

// An extension field Q(λ) = Q[λ]/(m). minpoly is monic and irreducible.
struct NumberField {
    QPoly minpoly;         // monic
    std::string var_name;  // rendering only

    int degree() const { return qp_deg(minpoly); }
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr make_field(const QPoly& m, const std::string& var = "l", bool known_irreducible = false) {
    if (qp_deg(m) < 1) throw error("minimal polynomial must have positive degree");
    QPoly mm = qp_monic(m);
    if (!known_irreducible && !qp_certify_irreducible(mm))
        throw unsupported("could not certify minimal polynomial irreducible: degree " +
                          std::to_string(qp_deg(mm)));
    auto f = std::make_shared<NumberField>();
    f->minpoly = std::move(mm);
    f->var_name = var;
    return f;
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly == b->minpoly;
}

// Element of Q or of a single extension Q(λ). field == nullptr means rational.
class AlgNum {
public:
    AlgNum() : rep_{}, field_(nullptr) {}
    AlgNum(const Rational& q) : field_(nullptr) {
        if (q != 0) rep_.push_back(q);
    }
    AlgNum(long v) : AlgNum(Rational(v)) {}
    AlgNum(int v) : AlgNum(Rational(v)) {}
    AlgNum(QPoly rep, FieldPtr field) : rep_(std::move(rep)), field_(std::move(field)) {
        reduce();
    }

    static AlgNum generator(const FieldPtr& f) {
        return AlgNum(QPoly{Rational(0), Rational(1)}, f);
    }

    const QPoly& rep() const { return rep_; }
    const FieldPtr& field() const { return field_; }

    bool is_zero() const { return rep_.empty(); }
    bool is_rational() const { return rep_.size() <= 1; }

    Rational as_rational() const {
        if (rep_.empty()) return Rational(0);
        if (rep_.size() == 1) return rep_[0];
        throw error("algebraic number is not rational: " + to_text());
    }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b) {
        FieldPtr f = join(a, b);
        return AlgNum(qp_add(a.rep_, b.rep_), f);
    }
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) {
        FieldPtr f = join(a, b);
        return AlgNum(qp_sub(a.rep_, b.rep_), f);
    }
    friend AlgNum operator-(const AlgNum& a) { return AlgNum(qp_neg(a.rep_), a.field_); }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b) {
        FieldPtr f = join(a, b);
        return AlgNum(qp_mul(a.rep_, b.rep_), f);
    }
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

    AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
    AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
    AlgNum& operator/=(const AlgNum& o) { return *this = *this / o; }

    AlgNum inverse() const {
        if (is_zero()) throw division_by_zero();
        if (!field_) return AlgNum(Rational(1) / rep_[0]);
        QPoly g, s;
        qp_half_ext_gcd(rep_, field_->minpoly, g, s);
        if (qp_deg(g) != 0)
            throw internal_inconsistency("non-invertible residue in a field extension");
        return AlgNum(std::move(s), field_);
    }

    AlgNum pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        AlgNum acc(Rational(1)), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const AlgNum& a, const AlgNum& b) { return (a - b).is_zero(); }
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    // Total order for deterministic output: lex on (degree, coefficient vector).
    friend bool lex_less(const AlgNum& a, const AlgNum& b) {
        if (a.rep_.size() != b.rep_.size()) return a.rep_.size() < b.rep_.size();
        for (size_t i = a.rep_.size(); i-- > 0;)
            if (a.rep_[i] != b.rep_[i]) return a.rep_[i] < b.rep_[i];
        return false;
    }

    // Evaluate at a chosen real embedding λ = x.
    double eval_double(double x) const {
        double acc = 0;
        for (size_t i = rep_.size(); i-- > 0;) acc = acc * x + to_double(rep_[i]);
        return acc;
    }

    std::string to_text() const {
        if (rep_.empty()) return "0";
        std::string v = field_ ? field_->var_name : "l";
        std::string out;
        for (size_t i = rep_.size(); i-- > 0;) {
            if (rep_[i] == 0) continue;
            Rational c = rep_[i];
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (i == 0 || a != 1) out += to_string(a);
            if (i >= 1) {
                if (a != 1) out += "*";
                out += v;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    QPoly rep_;
    FieldPtr field_;

    void reduce() {
        if (field_ && qp_deg(rep_) >= field_->degree())
            rep_ = qp_divrem(rep_, field_->minpoly).second;
        qp_normalize(rep_);
        if (rep_.empty()) field_ = nullptr; // zero is rational
        else if (rep_.size() == 1) field_ = nullptr; // rationals need no field tag
    }

    static FieldPtr join(const AlgNum& a, const AlgNum& b) {
        if (!a.field_) return b.field_;
        if (!b.field_) return a.field_;
        if (!same_field(a.field_, b.field_)) throw incompatible_extension();
        return a.field_;
    }
};

// Real roots of a squarefree rational polynomial, as doubles (bisection after
// a sign-change scan; adequate for plot/convergence rendering).
inline std::vector<double> real_roots_double(const QPoly& p_in) {
    std::vector<double> out;
    QPoly p = qp_squarefree_part(p_in);
    int d = qp_deg(p);
    if (d < 1) return out;
    auto f = [&](double x) {
        double acc = 0;
        for (size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
        return acc;
    };
    // Cauchy bound
    double lc = std::fabs(to_double(p.back()));
    double bound = 1;
    for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(to_double(p[i])) / lc);
    bound += 1;
    const int steps = 4000;
    double prev_x = -bound, prev_v = f(prev_x);
    for (int i = 1; i <= steps; ++i) {
        double x = -bound + 2 * bound * i / steps;
        double v = f(x);
        if (prev_v == 0) out.push_back(prev_x);
        else if (prev_v * v < 0) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 200; ++it) {
                double mid = (lo + hi) / 2, vm = f(mid);
                if (vm == 0) { lo = hi = mid; break; }
                if (vm * f(lo) < 0) hi = mid;
                else lo = mid;
            }
            out.push_back((lo + hi) / 2);
        }
        prev_x = x;
        prev_v = v;
    }
    if (prev_v == 0) out.push_back(prev_x);
    return out;
}

} // namespace gasym

#endif
