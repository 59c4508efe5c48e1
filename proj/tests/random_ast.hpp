// Generator of random operator trees in the canonical shape the parser emits.
#pragma once

#include "bisphere/opexpr.hpp"

#include <random>

namespace bisphere::testgen {

class RandomAst {
public:
    explicit RandomAst(unsigned seed) : rng_(seed) {}

    OpExpr operator()(int depth = 3) { return any(depth); }

private:
    std::mt19937 rng_;

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational coefficient() {
        Rational r;
        do {
            r = Rational(pick(-9, 9), pick(1, 6));
            r.canonicalize();
        } while (r == 1 || sgn(r) == 0);
        return r;
    }

    OpExpr primitive() {
        const int axis = pick(1, 3);
        switch (pick(0, 3)) {
            case 0: return OpExpr::make_axis(OpKind::Refl, axis);
            case 1: return OpExpr::make_axis(OpKind::Partial, axis);
            case 2: return OpExpr::make_axis(OpKind::Dunkl, axis);
            default: {
                Exponents e{0, 0, 0};
                int p = 0;
                while (p == 0) p = pick(-2, 3);
                e[axis - 1] = p;
                return OpExpr::make_mono(e);
            }
        }
    }

    // Operand of a composition: never a scalar or a scaled term's bare body.
    OpExpr operand(int depth) {
        if (depth <= 0 || pick(0, 2) > 0) return primitive();
        switch (pick(0, 2)) {
            case 0: return sum(depth - 1);
            case 1: return compose(depth - 1);
            default: return OpExpr::make_scaled(coefficient(), body(depth - 1));
        }
    }

    OpExpr compose(int depth) {
        std::vector<OpExpr> kids;
        const int n = pick(2, 3);
        for (int i = 0; i < n; ++i) kids.push_back(operand(depth));
        return OpExpr::make_nary(OpKind::Compose, std::move(kids));
    }

    // Body of a scaled term: a primitive, a composition or a sum.
    OpExpr body(int depth) {
        if (depth <= 0) return primitive();
        switch (pick(0, 2)) {
            case 0: return primitive();
            case 1: return compose(depth);
            default: return sum(depth);
        }
    }

    OpExpr sum(int depth) {
        std::vector<OpExpr> kids;
        const int n = pick(2, 4);
        for (int i = 0; i < n; ++i) {
            switch (pick(0, 4)) {
                case 0: kids.push_back(OpExpr::make_scalar(coefficient())); break;
                case 1: kids.push_back(OpExpr::make_scaled(coefficient(), body(depth - 1))); break;
                case 2:
                    if (depth > 0) {
                        kids.push_back(sum(depth - 1));
                        break;
                    }
                    [[fallthrough]];
                default: kids.push_back(depth > 0 && pick(0, 1) ? compose(depth - 1) : primitive());
            }
        }
        return OpExpr::make_nary(OpKind::Sum, std::move(kids));
    }

    OpExpr any(int depth) {
        switch (pick(0, 4)) {
            case 0: return primitive();
            case 1: return compose(depth);
            case 2: return OpExpr::make_scaled(coefficient(), body(depth));
            default: return sum(depth);
        }
    }
};

}  // namespace bisphere::testgen
