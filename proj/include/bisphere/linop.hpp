// Dense exact matrices of operators on a monomial basis and the exact
// linear-algebra kernels used by the certificates.
#pragma once

#include "bisphere/basis.hpp"
#include "bisphere/opexpr.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bisphere {

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LeavesSpaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square matrix over a shared basis; column j holds the coordinates of the
/// image of basis element j.
class LinOp {
public:
    LinOp() = default;
    LinOp(std::shared_ptr<const Basis> basis, std::string name = {}, DegreeWindow window = {})
        : basis_(std::move(basis)), name_(std::move(name)), window_(window), reach_(window.hi),
          n_(basis_ ? basis_->size() : 0), entries_(n_ * n_) {}

    static LinOp identity(std::shared_ptr<const Basis> basis) {
        LinOp m(std::move(basis), "I");
        for (std::size_t i = 0; i < m.n_; ++i) m(i, i) = 1;
        return m;
    }
    static LinOp zero(std::shared_ptr<const Basis> basis) { return LinOp(std::move(basis), "0"); }

    std::size_t dim() const { return n_; }
    const Basis& basis() const { return *basis_; }
    const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
    const std::string& name() const { return name_; }
    LinOp& rename(std::string n) {
        name_ = std::move(n);
        return *this;
    }
    DegreeWindow window() const { return window_; }
    /// Largest degree any intermediate stage may reach above the input.
    int reach() const { return reach_; }
    LinOp& set_window(DegreeWindow w) {
        window_ = w;
        reach_ = w.hi;
        return *this;
    }

    /// Columns on which a matrix assembled from truncated factors is exact:
    /// no intermediate stage leaves the basis.
    bool exact_column(std::size_t c) const {
        return basis_->kind() == BasisKind::SphereQuotient || total_degree((*basis_)[c]) + reach_ <= basis_->degree();
    }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (sgn(x) != 0) return false;
        return true;
    }

    /// Zero on every column whose basis element passes `keep`.
    template <class Pred>
    bool is_zero_on_columns(Pred keep) const {
        for (std::size_t c = 0; c < n_; ++c) {
            if (!keep((*basis_)[c])) continue;
            for (std::size_t r = 0; r < n_; ++r)
                if (sgn((*this)(r, c)) != 0) return false;
        }
        return true;
    }

    /// Column j as a polynomial in the basis monomials.
    LaurentPoly3 column_poly(std::size_t c) const {
        LaurentPoly3 p;
        for (std::size_t r = 0; r < n_; ++r) p.add_term((*basis_)[r], (*this)(r, c));
        return p;
    }

    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& x : entries_) k += sgn(x) != 0;
        return k;
    }

    LinOp transposed() const {
        LinOp t(basis_, name_ + "^T", {-window_.hi, -window_.lo});
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    LinOp& operator+=(const LinOp& o) {
        check_same(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        window_ = {std::min(window_.lo, o.window_.lo), std::max(window_.hi, o.window_.hi)};
        reach_ = std::max(reach_, o.reach_);
        return *this;
    }
    LinOp& operator-=(const LinOp& o) {
        check_same(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        window_ = {std::min(window_.lo, o.window_.lo), std::max(window_.hi, o.window_.hi)};
        reach_ = std::max(reach_, o.reach_);
        return *this;
    }
    LinOp& operator*=(const Rational& k) {
        for (auto& x : entries_) x *= k;
        return *this;
    }
    /// this + k * I
    LinOp& add_identity(const Rational& k) {
        for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += k;
        return *this;
    }

    friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
    friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
    friend LinOp operator*(LinOp a, const Rational& k) { return a *= k; }
    friend LinOp operator*(const Rational& k, LinOp a) { return a *= k; }
    friend LinOp operator*(const LinOp& a, const LinOp& b) { return multiply(a, b); }

    /// Entry-wise equality (names and windows are ignored).
    friend bool operator==(const LinOp& a, const LinOp& b) {
        return *a.basis_ == *b.basis_ && a.entries_ == b.entries_;
    }

    void check_same(const LinOp& o) const {
        if (basis_ != o.basis_ && !(basis_ && o.basis_ && *basis_ == *o.basis_))
            throw BasisMismatch("operators '" + name_ + "' and '" + o.name_ + "' live on different bases");
    }

    /// Exact product. Both factors are brought to integer matrices over a
    /// common denominator so the inner loops run on GMP integers only.
    static LinOp multiply(const LinOp& a, const LinOp& b) {
        a.check_same(b);
        const std::size_t n = a.n_;
        const auto [ai, ad] = a.integer_form();
        const auto [bi, bd] = b.integer_form();
        // nonzero column indices per row of b
        std::vector<std::vector<std::size_t>> brow(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(bi[k * n + j]) != 0) brow[k].push_back(j);
        std::vector<Integer> acc(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Integer& aik = ai[i * n + k];
                if (sgn(aik) == 0) continue;
                for (std::size_t j : brow[k]) mpz_addmul(acc[i * n + j].get_mpz_t(), aik.get_mpz_t(), bi[k * n + j].get_mpz_t());
            }
        LinOp out(a.basis_, a.name_ + "*" + b.name_,
                  {a.window_.lo + b.window_.lo, a.window_.hi + b.window_.hi});
        out.reach_ = std::max(b.reach_, b.window_.hi + a.reach_);
        const Integer den = ad * bd;
        for (std::size_t i = 0; i < n * n; ++i) {
            if (sgn(acc[i]) == 0) continue;
            out.entries_[i] = Rational(acc[i], den);
            out.entries_[i].canonicalize();
        }
        return out;
    }

    /// (integer entries, d) with this = entries / d.
    std::pair<std::vector<Integer>, Integer> integer_form() const {
        Integer d = 1;
        for (const auto& x : entries_)
            if (x.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> out(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (sgn(entries_[i]) == 0) continue;
            out[i] = entries_[i].get_num() * (d / entries_[i].get_den());
        }
        return {std::move(out), d};
    }

    /// Rows of "p/q" strings.
    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < n_; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < n_; ++c) row.push_back(to_pq((*this)(r, c)));
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    std::shared_ptr<const Basis> basis_;
    std::string name_;
    DegreeWindow window_;
    int reach_ = 0;
    std::size_t n_ = 0;
    std::vector<Rational> entries_;
};

inline LinOp commutator(const LinOp& a, const LinOp& b) {
    LinOp out = a * b - b * a;
    return out.rename("[" + a.name() + "," + b.name() + "]");
}

inline LinOp anticommutator(const LinOp& a, const LinOp& b) {
    LinOp out = a * b + b * a;
    return out.rename("{" + a.name() + "," + b.name() + "}");
}

/// Matrix of `ast` on `basis`. Images are computed symbolically over Laurent
/// polynomials and must come out regular. On the sphere quotient they are
/// reduced to normal form and must stay within the degree bound; on FullPoly3
/// and Poly1 terms above the bound are truncated (callers pad the degree and
/// compare only interior columns).
inline LinOp build_matrix(const OpExpr& ast, std::shared_ptr<const Basis> basis, const ModelParams& params,
                          std::string name = {}) {
    if (name.empty()) name = to_string(ast);
    LinOp m(basis, std::move(name), degree_window(ast));
    for (std::size_t c = 0; c < basis->size(); ++c) {
        LaurentPoly3 img = apply(ast, LaurentPoly3::monomial((*basis)[c]), params);
        if (!img.is_regular())
            throw NonRegularError("image of " + LaurentPoly3::monomial((*basis)[c]).to_string() + " under '" +
                                  m.name() + "' is not a polynomial: " + img.to_string());
        if (basis->kind() == BasisKind::SphereQuotient) img = reduce_sphere(img);
        for (const auto& [e, coef] : img.terms()) {
            const long r = basis->index_of(e);
            if (r >= 0) {
                m(static_cast<std::size_t>(r), c) = coef;
                continue;
            }
            const bool overflow = basis->kind() != BasisKind::SphereQuotient && total_degree(e) > basis->degree() &&
                                  (basis->kind() != BasisKind::Poly1 || (e[1] == 0 && e[2] == 0));
            if (!overflow)
                throw LeavesSpaceError("image of basis element " + std::to_string(c) + " under '" + m.name() +
                                       "' leaves " + basis->descriptor() + ": " + img.to_string());
        }
    }
    return m;
}

inline LinOp build_matrix(std::string_view text, std::shared_ptr<const Basis> basis, const ModelParams& params,
                          std::string name = {}) {
    return build_matrix(parse_opexpr(text), std::move(basis), params, name.empty() ? std::string(text) : name);
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace detail {

/// Rows scaled to integers (row-wise lcm of denominators).
inline std::vector<std::vector<Integer>> integer_rows(const LinOp& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
        Integer d = 1;
        for (std::size_t c = 0; c < n; ++c)
            if (m(r, c).get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c)
            if (sgn(m(r, c)) != 0) rows[r][c] = m(r, c).get_num() * (d / m(r, c).get_den());
    }
    return rows;
}

/// Bareiss forward elimination in place; returns the pivot columns.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    Integer prev = 1;
    std::size_t k = 0;
    Integer t;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t p = k;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // a[i][j] = (a[k][c] a[i][j] - a[i][c] a[k][j]) / prev
                mpz_mul(t.get_mpz_t(), a[k][c].get_mpz_t(), a[i][j].get_mpz_t());
                mpz_submul(t.get_mpz_t(), a[i][c].get_mpz_t(), a[k][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[k][c];
        pivots.push_back(c);
        ++k;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank_exact(const LinOp& m) {
    auto rows = detail::integer_rows(m);
    return detail::bareiss_echelon(rows).size();
}

/// Exact basis of ker(m) as rational coordinate vectors (free variable = 1).
inline std::vector<std::vector<Rational>> nullspace_exact(const LinOp& m) {
    const std::size_t n = m.dim();
    auto rows = detail::integer_rows(m);
    const auto pivots = detail::bareiss_echelon(rows);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(n);
        x[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (sgn(rows[k][j]) != 0 && sgn(x[j]) != 0) acc += Rational(rows[k][j]) * x[j];
            x[pc] = -acc / Rational(rows[k][pc]);
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

/// True iff prod_r (M - r I), taken in the listed order, is exactly zero.
inline bool annihilator_check(const LinOp& m, std::span<const Rational> roots) {
    if (roots.empty()) return m.dim() == 0;
    LinOp acc = m;
    acc.add_identity(-roots[0]);
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (acc.is_zero()) return true;
        LinOp factor = m;
        factor.add_identity(-roots[i]);
        acc = acc * factor;
    }
    return acc.is_zero();
}

/// prod_r (M - r I) in listed order.
inline LinOp shifted_product(const LinOp& m, std::span<const Rational> roots) {
    LinOp acc = LinOp::identity(m.basis_ptr());
    for (const auto& r : roots) {
        LinOp factor = m;
        factor.add_identity(-r);
        acc = acc * factor;
    }
    return acc;
}

/// Same operator expressed on a reordered basis (perm[new] = old).
inline LinOp permute_basis(const LinOp& m, const std::vector<std::size_t>& perm) {
    auto pb = std::make_shared<const Basis>(m.basis().permuted(perm));
    LinOp out(pb, m.name(), m.window());
    for (std::size_t r = 0; r < perm.size(); ++r)
        for (std::size_t c = 0; c < perm.size(); ++c) out(r, c) = m(perm[r], perm[c]);
    return out;
}

}  // namespace bisphere
