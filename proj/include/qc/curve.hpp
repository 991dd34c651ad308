#pragma once

#include "qc/polynomial.hpp"
#include "qc/series.hpp"

namespace qc {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, with the standard
// derived quantities.  Construction asserts the b/c/Delta identities and
// rejects singular models.
struct WeierstrassModel {
    Rat a1, a2, a3, a4, a6;
    Rat b2, b4, b6, b8, c4, c6, disc, j;

    WeierstrassModel(Rat a1_, Rat a2_, Rat a3_, Rat a4_, Rat a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
          a6(std::move(a6_)) {
        b2 = a1 * a1 + 4 * a2;
        b4 = 2 * a4 + a1 * a3;
        b6 = a3 * a3 + 4 * a6;
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        c4 = b2 * b2 - 24 * b4;
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
        disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
        if (disc == 0) throw domain_error("singular Weierstrass model");
        j = c4 * c4 * c4 / disc;
        if (4 * b8 != b2 * b6 - b4 * b4 || 1728 * disc != c4 * c4 * c4 - c6 * c6)
            throw error("Weierstrass invariant identities failed");  // unreachable
    }

    static WeierstrassModel from_ainvs(const std::vector<Rat>& a) {
        if (a.size() != 5) throw input_error("need 5 a-invariants");
        return WeierstrassModel(a[0], a[1], a[2], a[3], a[4]);
    }

    bool is_integral() const {
        return is_integral_rat(a1) && is_integral_rat(a2) && is_integral_rat(a3) &&
               is_integral_rat(a4) && is_integral_rat(a6);
    }

    bool operator==(const WeierstrassModel& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }

    std::string str() const {
        return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," + a4.get_str() +
               "," + a6.get_str() + "]";
    }

private:
    static bool is_integral_rat(const Rat& r) { return r.get_den() == 1; }
};

// x = u^2 x' + r,  y = u^3 y' + s u^2 x' + t  (maps the primed model to the
// unprimed one; transform_model sends a model to the primed one).
struct ModelIsomorphism {
    Rat u, r, s, t;

    ModelIsomorphism() : u(1), r(0), s(0), t(0) {}
    ModelIsomorphism(Rat u_, Rat r_, Rat s_, Rat t_)
        : u(std::move(u_)), r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
        if (u == 0) throw domain_error("isomorphism with u = 0");
    }

    bool is_identity() const { return u == 1 && r == 0 && s == 0 && t == 0; }

    ModelIsomorphism inverse() const {
        return ModelIsomorphism(1 / u, -r / (u * u), -s / u, (r * s - t) / (u * u * u));
    }

    // first apply a, then b.
    static ModelIsomorphism compose(const ModelIsomorphism& b, const ModelIsomorphism& a) {
        return ModelIsomorphism(a.u * b.u, a.u * a.u * b.r + a.r, a.u * b.s + a.s,
                                a.u * a.u * a.u * b.t + a.u * a.u * b.r * a.s + a.t);
    }
};

inline WeierstrassModel transform_model(const WeierstrassModel& m, const ModelIsomorphism& iso) {
    const Rat &u = iso.u, &r = iso.r, &s = iso.s, &t = iso.t;
    Rat u2 = u * u, u3 = u2 * u;
    Rat a1 = (m.a1 + 2 * s) / u;
    Rat a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / u2;
    Rat a3 = (m.a3 + r * m.a1 + 2 * t) / u3;
    Rat a4 = (m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t) / (u2 * u2);
    Rat a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1) /
             (u3 * u3);
    return WeierstrassModel(a1, a2, a3, a4, a6);
}

// ---------------------------------------------------------------------------
// Points over a coefficient field K.  K is Rat, PadicNumber or PadicSeries;
// the small trait bundle below abstracts the few operations the chord-tangent
// law needs.

template <class K>
struct Point {
    bool infinity = true;
    K x{}, y{};

    Point() = default;
    Point(K x_, K y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}
    static Point at_infinity() { return Point(); }
};

using RatPoint = Point<Rat>;
using PadicPoint = Point<PadicNumber>;
using SeriesPoint = Point<PadicSeries>;

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool ambiguous_zero(const Rat&) { return false; }
};

template <>
struct FieldOps<PadicNumber> {
    static bool is_zero(const PadicNumber& x) { return x.is_zero(); }
    // zero at stated precision but with few digits of evidence
    static bool ambiguous_zero(const PadicNumber& x) {
        return x.is_zero() && x.precision() < 1;
    }
};

template <>
struct FieldOps<PadicSeries> {
    static bool is_zero(const PadicSeries& x) { return x.is_zero_series(); }
    static bool ambiguous_zero(const PadicSeries&) { return false; }
};

// The model with coefficients materialised in K.
template <class K>
struct CurveOver {
    K a1, a2, a3, a4, a6;
};

inline CurveOver<Rat> curve_over_rat(const WeierstrassModel& m) {
    return {m.a1, m.a2, m.a3, m.a4, m.a6};
}

inline CurveOver<PadicNumber> curve_over_padic(const WeierstrassModel& m, long p, int prec) {
    auto f = [&](const Rat& r) { return PadicNumber::from_rational(r, p, prec); };
    return {f(m.a1), f(m.a2), f(m.a3), f(m.a4), f(m.a6)};
}

inline CurveOver<PadicSeries> curve_over_series(const WeierstrassModel& m, long p, int prec) {
    auto f = [&](const Rat& r) {
        return PadicSeries::monomial(PadicNumber::from_rational(r, p, prec), 0, 1 << 20);
    };
    return {f(m.a1), f(m.a2), f(m.a3), f(m.a4), f(m.a6)};
}

// y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6)
template <class K>
K equation_residue(const CurveOver<K>& c, const Point<K>& P) {
    if (P.infinity) throw domain_error("residue at infinity");
    const K &x = P.x, &y = P.y;
    return y * y + c.a1 * x * y + c.a3 * y - (x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
}

template <class K>
Point<K> negate(const CurveOver<K>& c, const Point<K>& P) {
    if (P.infinity) return P;
    return Point<K>(P.x, -(P.y + c.a1 * P.x + c.a3));
}

namespace detail {
template <class K>
Point<K> finish_addition(const CurveOver<K>& c, const K& lam, const Point<K>& P, const K& x2) {
    K x3 = lam * lam + c.a1 * lam - c.a2 - P.x - x2;
    K y3 = lam * (P.x - x3) - P.y - c.a1 * x3 - c.a3;
    return Point<K>(x3, y3);
}
} // namespace detail

template <class K>
Point<K> dbl(const CurveOver<K>& c, const Point<K>& P) {
    if (P.infinity) return P;
    K den = P.y + P.y + c.a1 * P.x + c.a3;
    if (FieldOps<K>::is_zero(den)) {
        if (FieldOps<K>::ambiguous_zero(den))
            throw precision_error("doubling denominator indistinguishable from 0");
        return Point<K>::at_infinity();
    }
    K x2 = P.x * P.x;
    K num = x2 + x2 + x2 + c.a2 * P.x + c.a2 * P.x + c.a4 - c.a1 * P.y;
    K lam = num / den;
    return detail::finish_addition(c, lam, P, P.x);
}

template <class K>
Point<K> add(const CurveOver<K>& c, const Point<K>& P, const Point<K>& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    K dx = Q.x - P.x;
    if (!FieldOps<K>::is_zero(dx)) {
        K lam = (Q.y - P.y) / dx;
        return detail::finish_addition(c, lam, P, Q.x);
    }
    if (FieldOps<K>::ambiguous_zero(dx))
        throw precision_error("slope denominator indistinguishable from 0");
    K ysum = P.y + Q.y + c.a1 * Q.x + c.a3;
    if (FieldOps<K>::is_zero(ysum)) return Point<K>::at_infinity();
    return dbl(c, P);
}

template <class K>
Point<K> scalar_mul(const CurveOver<K>& c, long m, const Point<K>& P) {
    if (m < 0) return scalar_mul(c, -m, negate(c, P));
    Point<K> acc = Point<K>::at_infinity();
    Point<K> base = P;
    while (m) {
        if (m & 1) acc = add(c, acc, base);
        m >>= 1;
        if (m) base = dbl(c, base);
    }
    return acc;
}

// Point image under an isomorphism: x' = (x - r)/u^2, y' = (y - s(x-r) - t)/u^3.
inline RatPoint transform_point(const ModelIsomorphism& iso, const RatPoint& P) {
    if (P.infinity) return P;
    Rat u2 = iso.u * iso.u;
    Rat xp = (P.x - iso.r) / u2;
    Rat yp = (P.y - iso.s * (P.x - iso.r) - iso.t) / (u2 * iso.u);
    return RatPoint(xp, yp);
}

inline bool on_curve(const WeierstrassModel& m, const RatPoint& P) {
    if (P.infinity) return true;
    return equation_residue(curve_over_rat(m), P) == 0;
}

} // namespace qc
