#pragma once

#include <vector>

#include "qc/rational.hpp"

namespace qc {

// Dense univariate polynomial over Q.
struct RatPoly {
    std::vector<Rat> c;  // c[i] = coefficient of x^i

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat& a) { return RatPoly({a}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const Rat& s, const RatPoly& a) {
        RatPoly r = a;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

} // namespace qc
