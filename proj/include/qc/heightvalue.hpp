#pragma once

#include <map>
#include <set>
#include <vector>

#include "qc/padic.hpp"

namespace qc {

// Exact formal Q-linear combination sum_q alpha_q * log q.  Away-from-p local
// heights and the W-sets live here symbolically; embedding into Q_p happens
// only at the final membership tests.
class HeightValue {
public:
    HeightValue() = default;
    HeightValue(long q, Rat alpha) {
        alpha.canonicalize();
        if (alpha != 0) c_[q] = std::move(alpha);
    }

    static HeightValue zero() { return {}; }

    const std::map<long, Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(long q) const {
        auto it = c_.find(q);
        return it == c_.end() ? Rat(0) : it->second;
    }

    friend HeightValue operator+(const HeightValue& x, const HeightValue& y) {
        HeightValue r = x;
        for (auto& [q, a] : y.c_) {
            Rat s = r.coeff(q) + a;
            if (s == 0)
                r.c_.erase(q);
            else
                r.c_[q] = s;
        }
        return r;
    }
    HeightValue operator-() const {
        HeightValue r = *this;
        for (auto& [q, a] : r.c_) a = -a;
        return r;
    }
    friend HeightValue operator-(const HeightValue& x, const HeightValue& y) { return x + (-y); }
    friend HeightValue operator*(const Rat& s, const HeightValue& x) {
        HeightValue r;
        if (s == 0) return r;
        for (auto& [q, a] : x.c_) r.c_[q] = s * a;
        return r;
    }

    bool operator==(const HeightValue& o) const { return c_ == o.c_; }
    bool operator<(const HeightValue& o) const { return c_ < o.c_; }

    // image in Q_p under the branch log(p) = 0
    PadicNumber embed(long p, int prec) const {
        PadicNumber acc = PadicNumber::zero(p, prec);
        for (auto& [q, a] : c_) {
            if (q == p) continue;  // log(p) = 0
            PadicNumber lq = padic_log(PadicNumber::from_int(q, p, prec + 2));
            acc = acc + PadicNumber::from_rational(a, p, prec + 2) * lq;
        }
        return acc.truncate(std::min(acc.precision(), prec));
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [q, a] : c_) {
            if (!first) s += " + ";
            s += "(" + a.get_str() + ")*log" + std::to_string(q);
            first = false;
        }
        return s;
    }

private:
    std::map<long, Rat> c_;
};

using HeightValueSet = std::set<HeightValue>;

inline HeightValueSet minkowski_sum(const HeightValueSet& A, const HeightValueSet& B) {
    HeightValueSet out;
    for (auto& a : A)
        for (auto& b : B) out.insert(a + b);
    return out;
}

} // namespace qc
