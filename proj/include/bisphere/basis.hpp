// Indexed monomial bases for the operator matrices.
#pragma once

#include "bisphere/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisphere {

enum class BasisKind { SphereQuotient, FullPoly3, Poly1 };

inline std::string to_string(BasisKind k) {
    switch (k) {
        case BasisKind::SphereQuotient: return "SphereQuotient";
        case BasisKind::FullPoly3: return "FullPoly3";
        case BasisKind::Poly1: return "Poly1";
    }
    return {};
}

/// Ordered monomial basis. SphereQuotient(D) keeps s3-exponents in {0,1}
/// (size (D+1)^2), FullPoly3(D) is every monomial of degree <= D, Poly1(D)
/// is 1, s1, ..., s1^D.
class Basis {
public:
    Basis(BasisKind kind, int degree) : kind_(kind), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("basis degree must be >= 0");
        for (int d = 0; d <= degree; ++d) {
            switch (kind) {
                case BasisKind::Poly1: elements_.push_back({d, 0, 0}); break;
                case BasisKind::FullPoly3:
                    for (int a = d; a >= 0; --a)
                        for (int b = d - a; b >= 0; --b) elements_.push_back({a, b, d - a - b});
                    break;
                case BasisKind::SphereQuotient:
                    for (int c = 0; c <= std::min(1, d); ++c)
                        for (int a = d - c; a >= 0; --a) elements_.push_back({a, d - c - a, c});
                    break;
            }
        }
        reindex();
    }

    static Basis sphere(int degree) { return Basis(BasisKind::SphereQuotient, degree); }
    static Basis full(int degree) { return Basis(BasisKind::FullPoly3, degree); }
    static Basis poly1(int degree) { return Basis(BasisKind::Poly1, degree); }

    BasisKind kind() const { return kind_; }
    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const Exponents& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Exponents>& elements() const { return elements_; }

    /// Position of a monomial, or -1 when it is not a basis element.
    long index_of(const Exponents& e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    /// Same elements in the order given by `perm` (perm[new] = old).
    Basis permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != size()) throw std::invalid_argument("permutation size mismatch");
        Basis out = *this;
        for (std::size_t i = 0; i < perm.size(); ++i) out.elements_[i] = elements_.at(perm[i]);
        out.reindex();
        return out;
    }

    std::string descriptor() const { return to_string(kind_) + "(" + std::to_string(degree_) + ")"; }

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.kind_ == b.kind_ && a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    void reindex() {
        index_.clear();
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
    }

    BasisKind kind_;
    int degree_;
    std::vector<Exponents> elements_;
    std::map<Exponents, std::size_t> index_;
};

/// Parity sector (a mod 2, b mod 2, c mod 2) as a number 0..7.
inline int parity_sector(const Exponents& e) {
    return ((e[0] & 1) << 2) | ((e[1] & 1) << 1) | (e[2] & 1);
}

}  // namespace bisphere
