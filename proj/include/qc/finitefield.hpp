#pragma once

#include <vector>

#include "qc/rational.hpp"

namespace qc {

// Small finite field F_q or F_{q^2}, q prime.  Elements are encoded as
// long = a + q*b for a + b*s, where s satisfies s^2 = m1*s + m0.  Cardinality
// stays small enough (bad primes of the curves at hand) that root finding by
// exhaustion is the simplest correct tool.
class FiniteField {
public:
    FiniteField() : q_(0), f_(1), m0_(0), m1_(0) {}

    static FiniteField prime_field(long q) {
        FiniteField F;
        F.q_ = q;
        F.f_ = 1;
        return F;
    }

    static FiniteField quadratic_field(long q) {
        FiniteField F;
        F.q_ = q;
        F.f_ = 2;
        if (q == 2) {
            F.m0_ = 1;  // s^2 = s + 1
            F.m1_ = 1;
        } else {
            long c = 2;
            while (legendre(c, q) != -1) ++c;
            F.m0_ = c;  // s^2 = c, c a non-residue
            F.m1_ = 0;
        }
        return F;
    }

    long characteristic() const { return q_; }
    int degree() const { return f_; }
    long size() const { return f_ == 1 ? q_ : q_ * q_; }
    long modulus_c0() const { return m0_; }
    long modulus_c1() const { return m1_; }

    long zero() const { return 0; }
    long one() const { return 1; }
    long from_int(const Int& n) const { return mpz_fdiv_ui(n.get_mpz_t(), q_); }

    long add(long x, long y) const {
        auto [a, b] = split(x);
        auto [c, d] = split(y);
        return join((a + c) % q_, (b + d) % q_);
    }
    long sub(long x, long y) const {
        auto [a, b] = split(x);
        auto [c, d] = split(y);
        return join(((a - c) % q_ + q_) % q_, ((b - d) % q_ + q_) % q_);
    }
    long neg(long x) const { return sub(0, x); }
    long mul(long x, long y) const {
        auto [a, b] = split(x);
        auto [c, d] = split(y);
        // (a + bs)(c + ds) = ac + (ad + bc)s + bd s^2, s^2 = m1 s + m0
        long lo = (a * c + b * d % q_ * m0_) % q_;
        long hi = (a * d + b * c + b * d % q_ * m1_) % q_;
        return join(lo, hi);
    }
    long pow(long x, Int e) const {
        long n = size();
        Int ee = e % (n - 1);
        if (ee < 0) ee += n - 1;
        long acc = 1, base = x;
        unsigned long k = ee.get_ui();
        while (k) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }
    long inv(long x) const {
        if (x == 0) throw domain_error("inverse of 0 in finite field");
        return pow(x, Int(size() - 2));
    }
    bool is_zero(long x) const { return x == 0; }

    bool is_square(long x) const {
        if (x == 0) return true;
        if (q_ == 2) return true;  // squaring is bijective in char 2
        return pow(x, Int((size() - 1) / 2)) == 1;
    }

    std::vector<long> sqrt_all(long x) const {
        std::vector<long> r;
        for (long e = 0; e < size(); ++e)
            if (mul(e, e) == x) {
                r.push_back(e);
                if (q_ != 2 && x != 0) {
                    r.push_back(neg(e));
                    break;
                }
                if (q_ == 2) break;  // unique square root in char 2
                if (x == 0) break;
            }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    // roots (with multiplicity) of a polynomial given by coefficients
    // c[0] + c[1] T + ..., found by exhaustion plus synthetic division.
    std::vector<std::pair<long, int>> roots(std::vector<long> c) const {
        std::vector<std::pair<long, int>> out;
        trim(c);
        if (c.empty()) throw domain_error("roots of the zero polynomial");
        for (long e = 0; e < size(); ++e) {
            int mult = 0;
            auto work = c;
            while (work.size() > 1 && eval(work, e) == 0) {
                work = divide_linear(work, e);
                ++mult;
            }
            if (mult > 0) out.push_back({e, mult});
        }
        return out;
    }

    long eval(const std::vector<long>& c, long x) const {
        long acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), *it);
        return acc;
    }

    std::vector<long> all_elements() const {
        std::vector<long> v(size());
        for (long i = 0; i < size(); ++i) v[i] = i;
        return v;
    }

private:
    long q_;
    int f_;
    long m0_, m1_;

    std::pair<long, long> split(long x) const { return {x % q_, x / q_}; }
    long join(long a, long b) const { return f_ == 1 ? a % q_ : a + q_ * b; }

    static long legendre(long a, long q) {
        Int r;
        mpz_powm(r.get_mpz_t(), Int(a).get_mpz_t(), Int((q - 1) / 2).get_mpz_t(),
                 Int(q).get_mpz_t());
        if (r == 0) return 0;
        return r == 1 ? 1 : -1;
    }

    static void trim(std::vector<long>& c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    // divide by (T - r), assuming r is a root
    std::vector<long> divide_linear(const std::vector<long>& c, long r) const {
        std::vector<long> qout(c.size() - 1, 0);
        long carry = 0;
        for (size_t i = c.size(); i-- > 1;) {
            carry = add(c[i], mul(carry, r));
            qout[i - 1] = carry;
        }
        return qout;
    }
};

} // namespace qc
