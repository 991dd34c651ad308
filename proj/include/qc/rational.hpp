#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "qc/errors.hpp"

namespace qc {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_prime(long n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(Int(n).get_mpz_t(), 40) != 0;
}

inline void check_odd_prime(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw invalid_prime_error("p = " + std::to_string(p) + " is not an odd prime");
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_p(long p, long e) {
    if (e < 0) throw domain_error("pow_p: negative exponent");
    return pow_int(Int(p), static_cast<unsigned long>(e));
}

// ord_q of a nonzero integer.
inline long ord_q(const Int& n, long q) {
    if (n == 0) throw domain_error("ord_q(0)");
    Int m = n;
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
        ++v;
    }
    return v;
}

inline long ord_q(const Rat& r_in, long q) {
    if (r_in == 0) throw domain_error("ord_q(0)");
    Rat r = r_in;
    r.canonicalize();
    return ord_q(Int(r.get_num()), q) - ord_q(Int(r.get_den()), q);
}

// n with all powers of q removed.
inline Int strip_q(const Int& n, long q) {
    Int m = n;
    while (m != 0 && mpz_divisible_ui_p(m.get_mpz_t(), q))
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
    return m;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// Prime factorisation by trial division; errors out on a large cofactor
// rather than returning wrong support.
inline std::map<long, long> factor(const Int& n_in, long bound = 1000000) {
    if (n_in == 0) throw domain_error("factor(0)");
    Int n = abs(n_in);
    std::map<long, long> f;
    for (long q = 2; q <= bound && n > 1; q += (q == 2 ? 1 : 2)) {
        if (!is_prime(q)) continue;
        long v = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            ++v;
        }
        if (v) f[q] = v;
        if (Int(q) * q > n) break;
    }
    if (n > 1) {
        if (n.fits_slong_p() && is_prime(n.get_si())) {
            f[n.get_si()] += 1;
        } else {
            throw error("factor: cofactor " + n.get_str() + " out of reach");
        }
    }
    return f;
}

inline std::vector<long> prime_support(const Int& n) {
    std::vector<long> s;
    for (auto& [q, e] : factor(n)) s.push_back(q);
    return s;
}

inline std::vector<long> prime_support(const Rat& r) {
    std::vector<long> s;
    auto num = factor(Int(r.get_num() == 0 ? 1 : r.get_num()));
    auto den = factor(Int(r.get_den()));
    for (auto& [q, e] : num) s.push_back(q);
    for (auto& [q, e] : den)
        if (!num.count(q)) s.push_back(q);
    std::sort(s.begin(), s.end());
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// Integer part of sqrt, plus exactness flag.
inline std::pair<Int, bool> sqrt_int(const Int& n) {
    if (n < 0) return {Int(0), false};
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {r, rem == 0};
}

} // namespace qc
