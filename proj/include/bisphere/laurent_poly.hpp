// Exact Laurent polynomials in s1, s2, s3 with reflection and Dunkl actions.
#pragma once

#include "bisphere/rational.hpp"

#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

namespace bisphere {

using Exponents = std::array<int, 3>;

struct NonRegularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

inline void check_axis(int axis) {
    if (axis < 1 || axis > 3) throw std::out_of_range("axis must be 1, 2 or 3");
}

/// Finite sum of c * s1^a s2^b s3^c over integer exponents. Zero coefficients
/// are never stored, so structural equality is mathematical equality.
class LaurentPoly3 {
public:
    using Terms = std::map<Exponents, Rational>;

    LaurentPoly3() = default;
    explicit LaurentPoly3(const Rational& constant) { add_term({0, 0, 0}, constant); }
    static LaurentPoly3 monomial(const Exponents& e, const Rational& coef = 1) {
        LaurentPoly3 p;
        p.add_term(e, coef);
        return p;
    }
    /// The coordinate s_axis.
    static LaurentPoly3 coordinate(int axis) {
        check_axis(axis);
        Exponents e{0, 0, 0};
        e[axis - 1] = 1;
        return monomial(e);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents& e, const Rational& coef) {
        if (sgn(coef) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, coef);
        if (!inserted) {
            it->second += coef;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// All exponents >= 0.
    bool is_regular() const {
        for (const auto& [e, c] : terms_)
            if (e[0] < 0 || e[1] < 0 || e[2] < 0) return false;
        return true;
    }
    bool is_regular_in(int axis) const {
        check_axis(axis);
        for (const auto& [e, c] : terms_)
            if (e[axis - 1] < 0) return false;
        return true;
    }

    /// Highest total degree of a stored term; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || total_degree(e) > d) d = total_degree(e);
            first = false;
        }
        return d;
    }

    LaurentPoly3& operator+=(const LaurentPoly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly3& operator-=(const LaurentPoly3& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly3& operator*=(const Rational& k) {
        if (sgn(k) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
    friend LaurentPoly3 operator-(LaurentPoly3 a, const LaurentPoly3& b) { return a -= b; }
    friend LaurentPoly3 operator-(LaurentPoly3 a) { return a *= Rational(-1); }
    friend LaurentPoly3 operator*(LaurentPoly3 a, const Rational& k) { return a *= k; }
    friend LaurentPoly3 operator*(const Rational& k, LaurentPoly3 a) { return a *= k; }
    friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
        LaurentPoly3 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }
    friend bool operator==(const LaurentPoly3&, const LaurentPoly3&) = default;

    /// Multiplication by s1^a s2^b s3^c.
    LaurentPoly3 shifted(const Exponents& by) const {
        LaurentPoly3 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e[0] + by[0], e[1] + by[1], e[2] + by[2]}, c);
        return out;
    }

    double evaluate(std::span<const double, 3> s) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_)
            acc += c.get_d() * std::pow(s[0], e[0]) * std::pow(s[1], e[1]) * std::pow(s[2], e[2]);
        return acc;
    }

    /// Sum of `coef*s1^a*s2^b*s3^c` terms; coefficients always "p/q".
    std::string to_string() const {
        if (terms_.empty()) return "0/1";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += to_pq(c);
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                out += "*s" + std::to_string(i + 1);
                if (e[i] != 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly3& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

/// R_axis: s_axis -> -s_axis.
inline LaurentPoly3 reflect(const LaurentPoly3& p, int axis) {
    check_axis(axis);
    LaurentPoly3 result;
    for (const auto& [e, c] : p.terms()) result.add_term(e, (e[axis - 1] % 2 != 0) ? Rational(-c) : c);
    return result;
}

inline LaurentPoly3 partial(const LaurentPoly3& p, int axis) {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly3 out;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents f = e;
        f[i] -= 1;
        out.add_term(f, c * e[i]);
    }
    return out;
}

namespace detail {

// Term-wise Dunkl action, valid on Laurent monomials too:
// D s^k = (k + mu (1 - (-1)^k)) s^(k-1).
inline LaurentPoly3 dunkl_laurent(const LaurentPoly3& p, int axis, const Rational& mu) {
    check_axis(axis);
    const int i = axis - 1;
    LaurentPoly3 out;
    for (const auto& [e, c] : p.terms()) {
        Rational factor = e[i];
        if (e[i] % 2 != 0) factor += 2 * mu;
        if (sgn(factor) == 0) continue;
        Exponents f = e;
        f[i] -= 1;
        out.add_term(f, c * factor);
    }
    return out;
}

}  // namespace detail

/// Dunkl derivative d/ds + (mu/s)(1 - R) along one axis. The input must be a
/// polynomial in s_axis; the reflection part divides exactly.
inline LaurentPoly3 dunkl_apply(const LaurentPoly3& p, int axis, const Rational& mu) {
    check_axis(axis);
    if (!p.is_regular_in(axis))
        throw NonRegularError("dunkl_apply: negative exponent in s" + std::to_string(axis));
    return detail::dunkl_laurent(p, axis, mu);
}

/// Normal form modulo s1^2 + s2^2 + s3^2 = 1 with s3-exponent in {0, 1}.
inline LaurentPoly3 reduce_sphere(const LaurentPoly3& p) {
    if (!p.is_regular()) throw NonRegularError("reduce_sphere: input is not a polynomial");
    LaurentPoly3 out;
    for (const auto& [e, c] : p.terms()) {
        // s3^(2k+r) = (1 - s1^2 - s2^2)^k s3^r, expanded by the trinomial theorem.
        const int k = e[2] / 2;
        const int r = e[2] % 2;
        Integer binom_k_j = 1;
        for (int j = 0; j <= k; ++j) {
            Integer binom_j_l = 1;
            for (int l = 0; l <= j; ++l) {
                // coefficient of (-s1^2)^(j-l) (-s2^2)^l in (1 + (-s1^2 - s2^2))^k
                Rational coef = c * binom_k_j * binom_j_l;
                if (j % 2 != 0) coef = -coef;
                out.add_term({e[0] + 2 * (j - l), e[1] + 2 * l, r}, coef);
                binom_j_l = binom_j_l * (j - l) / (l + 1);
            }
            binom_k_j = binom_k_j * (k - j) / (j + 1);
        }
    }
    return out;
}

}  // namespace bisphere
