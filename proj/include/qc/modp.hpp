#pragma once

#include "qc/curve.hpp"

namespace qc {
namespace modp {

// Reduction of an integral-at-p model and naive arithmetic on E(F_p),
// p an odd prime small enough for exhaustive loops.

struct Curve {
    long p;
    long a1, a2, a3, a4, a6;
};

struct Pt {
    bool inf = true;
    long x = 0, y = 0;
    bool operator==(const Pt& o) const {
        return inf == o.inf && (inf || (x == o.x && y == o.y));
    }
    bool operator<(const Pt& o) const {
        if (inf != o.inf) return inf < o.inf;
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline long rat_mod_p(const Rat& r, long p) {
    Int num = r.get_num(), den = r.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), p)) throw domain_error("rational not integral at p");
    Int pm(p), d;
    mpz_invert(d.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
    Int v = num * d;
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

inline Curve reduce(const WeierstrassModel& m, long p) {
    return {p, rat_mod_p(m.a1, p), rat_mod_p(m.a2, p), rat_mod_p(m.a3, p), rat_mod_p(m.a4, p),
            rat_mod_p(m.a6, p)};
}

inline long mod(long a, long p) { return ((a % p) + p) % p; }

inline long inv_mod(long a, long p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), Int(mod(a, p)).get_mpz_t(), Int(p).get_mpz_t()))
        throw domain_error("non-invertible residue");
    return r.get_si();
}

inline bool on_curve(const Curve& c, const Pt& P) {
    if (P.inf) return true;
    long lhs = mod(P.y * P.y + c.a1 * P.x * P.y + c.a3 * P.y, c.p);
    long rhs = mod(((P.x * P.x % c.p) * P.x + c.a2 * P.x * P.x + c.a4 * P.x + c.a6), c.p);
    return lhs == rhs;
}

inline Pt negate(const Curve& c, const Pt& P) {
    if (P.inf) return P;
    return {false, P.x, mod(-P.y - c.a1 * P.x - c.a3, c.p)};
}

inline Pt add(const Curve& c, const Pt& P, const Pt& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    long p = c.p;
    if (P.x == Q.x && mod(P.y + Q.y + c.a1 * Q.x + c.a3, p) == 0) return {};
    long lam;
    if (P.x == Q.x)
        lam = mod((3 * P.x % p * P.x + 2 * c.a2 * P.x + c.a4 - c.a1 * P.y) *
                      inv_mod(2 * P.y + c.a1 * P.x + c.a3, p),
                  p);
    else
        lam = mod((Q.y - P.y) * inv_mod(Q.x - P.x, p), p);
    long x3 = mod(lam * lam + c.a1 * lam - c.a2 - P.x - Q.x, p);
    long y3 = mod(lam * (P.x - x3) - P.y - c.a1 * x3 - c.a3, p);
    return {false, x3, y3};
}

inline std::vector<Pt> all_points(const Curve& c) {
    std::vector<Pt> pts{{}};
    for (long x = 0; x < c.p; ++x)
        for (long y = 0; y < c.p; ++y) {
            Pt P{false, x, y};
            if (on_curve(c, P)) pts.push_back(P);
        }
    return pts;
}

inline long group_order(const Curve& c) { return static_cast<long>(all_points(c).size()); }

inline long point_order(const Curve& c, const Pt& P) {
    Pt acc = P;
    long n = 1;
    while (!acc.inf) {
        acc = add(c, acc, P);
        ++n;
        if (n > 5 * c.p + 10) throw error("point order runaway");
    }
    return n;
}

// trace of Frobenius a_p = p + 1 - #E(F_p), by direct counting
inline long trace_of_frobenius(const WeierstrassModel& m, long p) {
    return p + 1 - group_order(reduce(m, p));
}

inline bool is_ordinary(const WeierstrassModel& m, long p) {
    return trace_of_frobenius(m, p) % p != 0;
}

} // namespace modp
} // namespace qc
