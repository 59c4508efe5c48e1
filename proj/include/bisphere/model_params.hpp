#pragma once

#include "bisphere/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace bisphere {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Reflection strengths (mu1, mu2, mu3) of the model.
struct ModelParams {
    Rational mu1 = 0;
    Rational mu2 = 0;
    Rational mu3 = 0;

    const Rational& mu(int axis) const {
        switch (axis) {
            case 1: return mu1;
            case 2: return mu2;
            case 3: return mu3;
        }
        throw std::out_of_range("axis must be 1, 2 or 3");
    }

    Rational sum() const { return mu1 + mu2 + mu3; }

    /// Normalizability: every mu_i > -1/2.
    void validate() const {
        const Rational half(1, 2);
        for (int i = 1; i <= 3; ++i)
            if (mu(i) <= -half)
                throw InvalidParameter("mu" + std::to_string(i) + " = " + to_short(mu(i)) +
                                       " is out of range (must exceed -1/2)");
    }

    /// (mu1, mu2, mu3) -> (mu2, mu3, mu1).
    ModelParams rotated() const { return {mu2, mu3, mu1}; }

    std::array<std::string, 3> as_strings() const { return {to_pq(mu1), to_pq(mu2), to_pq(mu3)}; }

    friend bool operator==(const ModelParams& a, const ModelParams& b) {
        return a.mu1 == b.mu1 && a.mu2 == b.mu2 && a.mu3 == b.mu3;
    }
};

inline ModelParams default_params() { return {Rational(1, 3), Rational(1, 5), Rational(1, 7)}; }

}  // namespace bisphere
