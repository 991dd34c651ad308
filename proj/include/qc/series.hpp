#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "qc/padic.hpp"

namespace qc {

// Dense Laurent series with exact rational coefficients, known modulo
// O(t^tprec).  Coefficients below lead are exactly zero.  Used for formal
// group expansions and the Bernardi sigma function, where everything stays
// in Q and precision questions do not arise.
class RatSeries {
public:
    RatSeries() : lead_(0), tprec_(0) {}

    static RatSeries zero(int tprec) { return RatSeries(tprec, tprec, {}); }

    static RatSeries monomial(const Rat& c, int n, int tprec) {
        if (n >= tprec) return zero(tprec);
        return RatSeries(n, n + 1, {c}).with_tprec(tprec);
    }

    static RatSeries from_coeffs(std::vector<Rat> c, int lead, int tprec) {
        return RatSeries(lead, lead + static_cast<int>(c.size()), std::move(c)).with_tprec(tprec);
    }

    int lead() const { return lead_; }
    int tprec() const { return tprec_; }

    Rat coeff(int n) const {
        if (n >= tprec_) throw precision_error("RatSeries: coefficient beyond precision");
        if (n < lead_ || n - lead_ >= static_cast<int>(c_.size())) return Rat(0);
        return c_[n - lead_];
    }

    bool is_zero_series() const {
        for (auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    // Exponent of the first nonzero coefficient.
    int order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return lead_ + static_cast<int>(i);
        throw domain_error("order of zero series");
    }

    RatSeries truncate(int tprec) const {
        if (tprec >= tprec_) return *this;
        RatSeries r = *this;
        r.tprec_ = std::max(tprec, lead_);
        if (r.tprec_ < tprec) r.lead_ = tprec, r.tprec_ = tprec;
        r.c_.resize(std::max(0, r.tprec_ - r.lead_));
        r.tprec_ = tprec;
        if (r.lead_ > tprec) r.lead_ = tprec;
        return r;
    }

    RatSeries shift(int k) const {  // multiply by t^k
        RatSeries r = *this;
        r.lead_ += k;
        r.tprec_ += k;
        return r;
    }

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
        int tp = std::min(a.tprec_, b.tprec_);
        int lo = std::min(a.lead_, b.lead_);
        if (lo >= tp) return zero(tp);
        std::vector<Rat> c(tp - lo);
        for (int n = lo; n < tp; ++n) {
            Rat s(0);
            if (n >= a.lead_ && n < a.tprec_) s += a.coeff(n);
            if (n >= b.lead_ && n < b.tprec_) s += b.coeff(n);
            c[n - lo] = s;
        }
        return RatSeries(lo, tp, std::move(c));
    }

    RatSeries operator-() const {
        RatSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend RatSeries operator-(const RatSeries& a, const RatSeries& b) { return a + (-b); }

    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        int lo = a.lead_ + b.lead_;
        int tp = std::min(a.lead_ + b.tprec_, b.lead_ + a.tprec_);
        if (lo >= tp) return zero(tp);
        std::vector<Rat> c(tp - lo);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int n = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
                if (n >= tp) break;
                c[n - lo] += a.c_[i] * b.c_[j];
            }
        }
        return RatSeries(lo, tp, std::move(c));
    }

    friend RatSeries operator*(const Rat& s, const RatSeries& a) {
        RatSeries r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    RatSeries derivative() const {
        int newlead = lead_ - 1;
        std::vector<Rat> out(std::max(0, tprec_ - 1 - newlead), Rat(0));
        for (int n = lead_; n < tprec_; ++n) {
            if (n == 0) continue;
            out[n - 1 - newlead] = Rat(n) * coeff(n);
        }
        return RatSeries(newlead, tprec_ - 1, std::move(out));
    }

    // Formal antiderivative with zero constant term; rejects a t^-1 term.
    RatSeries integrate() const {
        if (lead_ <= -1 && -1 < tprec_ && coeff(-1) != 0)
            throw singularity_error("integrate: nonzero residue term");
        int newlead = lead_ + 1;
        std::vector<Rat> out(std::max(0, tprec_ + 1 - newlead), Rat(0));
        for (int n = lead_; n < tprec_; ++n) {
            if (n == -1) continue;
            out[n + 1 - newlead] = coeff(n) / Rat(n + 1);
        }
        return RatSeries(newlead, tprec_ + 1, std::move(out));
    }

    RatSeries reciprocal() const {
        if (is_zero_series()) throw singularity_error("reciprocal of zero series");
        int m = order();
        int reltp = tprec_ - m;
        // u = series/t^m with unit constant term; invert by the standard recurrence
        std::vector<Rat> u(reltp, Rat(0));
        for (int n = 0; n < reltp; ++n) u[n] = coeff(n + m);
        std::vector<Rat> v(reltp, Rat(0));
        v[0] = 1 / u[0];
        for (int n = 1; n < reltp; ++n) {
            Rat s(0);
            for (int k = 1; k <= n; ++k) s += u[k] * v[n - k];
            v[n] = -s / u[0];
        }
        return RatSeries(-m, reltp - m, std::move(v));
    }

    friend RatSeries operator/(const RatSeries& a, const RatSeries& b) {
        return a * b.reciprocal();
    }

    // f(g) with ord_t(g) >= 1; f may be Laurent (negative part handled via 1/g).
    RatSeries compose(const RatSeries& g) const {
        if (g.is_zero_series()) {
            if (lead_ >= 0) return monomial(lead_ == 0 && tprec_ > 0 ? coeff(0) : Rat(0), 0, g.tprec_);
            throw singularity_error("compose: Laurent series at zero");
        }
        if (g.order() < 1) throw domain_error("compose: inner series must vanish at 0");
        int tp = std::min(g.tprec_, tprec_ * std::max(1, g.order()));
        if (lead_ < 0) {
            RatSeries pos = positive_part();
            RatSeries neg_rev = negative_part_reversed();  // sum c_{-k} s^k
            RatSeries ginv = g.reciprocal().truncate(tp);
            return pos.compose(g.truncate(tp)) + neg_rev.compose_pos(ginv, tp);
        }
        return compose_pos(g.truncate(tp), tp);
    }

    // Evaluate at an exact rational (finite truncation: Laurent ok for x != 0).
    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int n = tprec_ - 1; n >= lead_; --n) {
            acc = acc * x + coeff(n);
        }
        if (lead_ > 0) {
            for (int i = 0; i < lead_; ++i) acc *= x;
        } else if (lead_ < 0) {
            if (x == 0) throw domain_error("eval: Laurent series at 0");
            for (int i = 0; i < -lead_; ++i) acc /= x;
        }
        return acc;
    }

    // exp of a series with ord >= 1, via y' = f'y.
    RatSeries exp() const {
        if (!is_zero_series() && order() < 1) throw domain_error("exp: need ord >= 1");
        if (lead_ < 0) throw domain_error("exp: Laurent input");
        int tp = tprec_;
        std::vector<Rat> f(tp, Rat(0));
        for (int n = std::max(1, lead_); n < tp; ++n) f[n] = coeff(n);
        std::vector<Rat> y(tp, Rat(0));
        y[0] = 1;
        for (int n = 1; n < tp; ++n) {
            Rat s(0);
            for (int k = 1; k <= n; ++k) s += Rat(k) * f[k] * y[n - k];
            y[n] = s / Rat(n);
        }
        return RatSeries(0, tp, std::move(y));
    }

    std::string str() const;

private:
    int lead_;
    int tprec_;
    std::vector<Rat> c_;

    RatSeries(int lead, int tprec, std::vector<Rat> c)
        : lead_(lead), tprec_(tprec), c_(std::move(c)) {
        // trim exact zeros in front to keep lead honest but cheap
        size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        if (i > 0) {
            c_.erase(c_.begin(), c_.begin() + i);
            lead_ += static_cast<int>(i);
        }
        if (c_.empty()) lead_ = tprec_;
    }

    RatSeries with_tprec(int tp) const {
        RatSeries r = *this;
        if (tp < r.tprec_) return r.truncate(tp);
        r.tprec_ = tp;
        r.c_.resize(std::max(0, tp - r.lead_), Rat(0));
        if (r.c_.empty()) r.lead_ = tp;
        return r;
    }

    RatSeries positive_part() const {
        std::vector<Rat> c;
        for (int n = std::max(0, lead_); n < tprec_; ++n) c.push_back(coeff(n));
        return RatSeries(std::max(0, lead_), tprec_, std::move(c));
    }

    RatSeries negative_part_reversed() const {
        std::vector<Rat> c;  // c[k] = coeff of t^-(k+1)
        int kmax = -lead_;
        std::vector<Rat> out(kmax + 1, Rat(0));
        for (int n = lead_; n < 0; ++n) out[-n] = coeff(n);
        return RatSeries(0, kmax + 1, std::move(out));
    }

    // Horner composition for power series f (lead >= 0), inner g, target tprec.
    RatSeries compose_pos(const RatSeries& g, int tp) const {
        RatSeries acc = zero(tp);
        for (int n = tprec_ - 1; n >= 0; --n) {
            acc = (acc * g).truncate(tp) + monomial(coeff(n), 0, tp);
        }
        return acc;
    }
};

inline std::string RatSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = lead_; n < tprec_; ++n) {
        Rat c = coeff(n);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << "(" << c.get_str() << ")*t^" << n;
        first = false;
    }
    if (!first) os << " + ";
    os << "O(t^" << tprec_ << ")";
    return os.str();
}

// Dense Laurent series over Q_p.  Coefficients carry their own p-adic
// precision; t-adic precision is tracked with the same min-rules as p-adic
// valuations.  Trailing (unknown) coefficients are the caller's
// responsibility: evaluation and root finding demand an explicit decay check
// before trusting a truncation (see series_roots_in_disk).
class PadicSeries {
public:
    PadicSeries() : p_(0), lead_(0), tprec_(0) {}

    PadicSeries(long p, int lead, int tprec, std::vector<PadicNumber> c)
        : p_(p), lead_(lead), tprec_(tprec), c_(std::move(c)) {
        if (static_cast<int>(c_.size()) != std::max(0, tprec_ - lead_))
            throw domain_error("PadicSeries: coefficient count mismatch");
        normalize_lead();
    }

    static PadicSeries zero(long p, int tprec) { return PadicSeries(p, tprec, tprec, {}); }

    static PadicSeries monomial(const PadicNumber& c, int n, int tprec) {
        if (n >= tprec) return zero(c.prime(), tprec);
        PadicSeries s(c.prime(), n, n + 1, {c});
        return s.extended_to(tprec);
    }

    static PadicSeries from_rat_series(const RatSeries& f, long p, int coeff_prec) {
        std::vector<PadicNumber> c;
        for (int n = f.lead(); n < f.tprec(); ++n)
            c.push_back(PadicNumber::from_rational(f.coeff(n), p, coeff_prec));
        return PadicSeries(p, f.lead(), f.tprec(), std::move(c));
    }

    long prime() const { return p_; }
    int lead() const { return lead_; }
    int tprec() const { return tprec_; }

    PadicNumber coeff(int n) const {
        if (n >= tprec_) throw precision_error("PadicSeries: coefficient beyond precision");
        if (n < lead_) return exact_zero();
        return c_[n - lead_];
    }

    bool is_zero_series() const {
        for (auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // Exponent of the first coefficient that is not zero to its stated precision.
    int apparent_order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return lead_ + static_cast<int>(i);
        throw domain_error("apparent_order of zero series");
    }

    PadicSeries truncate(int tp) const {
        if (tp >= tprec_) return *this;
        PadicSeries r = *this;
        r.tprec_ = tp;
        if (r.lead_ >= tp) {
            r.lead_ = tp;
            r.c_.clear();
        } else {
            r.c_.resize(tp - r.lead_);
        }
        return r;
    }

    PadicSeries shift(int k) const {
        PadicSeries r = *this;
        r.lead_ += k;
        r.tprec_ += k;
        return r;
    }

    // Divide by t^k, requiring the dropped coefficients to be zero at their
    // stated precision (exact cancellation of a known common zero).
    PadicSeries cancel_zero(int k) const {
        for (int n = lead_; n < std::min(lead_ + static_cast<int>(c_.size()), k); ++n)
            if (n < k && !coeff(n).is_zero())
                throw singularity_error("cancel_zero: nonzero low-order coefficient");
        if (lead_ < k) {
            PadicSeries r = *this;
            r.c_.erase(r.c_.begin(), r.c_.begin() + (k - lead_));
            r.lead_ = k;
            r.tprec_ = tprec_;
            return r.shift(-k);
        }
        return shift(-k);
    }

    friend PadicSeries operator+(const PadicSeries& a, const PadicSeries& b) {
        a.check_compat(b);
        int tp = std::min(a.tprec_, b.tprec_);
        int lo = std::min(a.lead_, b.lead_);
        if (lo >= tp) return zero(a.p_, tp);
        std::vector<PadicNumber> c;
        c.reserve(tp - lo);
        for (int n = lo; n < tp; ++n) c.push_back(a.coeff(n) + b.coeff(n));
        return PadicSeries(a.p_, lo, tp, std::move(c));
    }

    PadicSeries operator-() const {
        PadicSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend PadicSeries operator-(const PadicSeries& a, const PadicSeries& b) { return a + (-b); }

    friend PadicSeries operator*(const PadicSeries& a, const PadicSeries& b) {
        a.check_compat(b);
        int lo = a.lead_ + b.lead_;
        int tp = std::min(a.lead_ + b.tprec_, b.lead_ + a.tprec_);
        if (lo >= tp) return zero(a.p_, tp);
        std::vector<PadicNumber> c(tp - lo, a.exact_zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero() && a.c_[i].precision() > kExactPrec / 2) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int n = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
                if (n >= tp) break;
                c[n - lo] = c[n - lo] + a.c_[i] * b.c_[j];
            }
        }
        return PadicSeries(a.p_, lo, tp, std::move(c));
    }

    friend PadicSeries operator*(const PadicNumber& s, const PadicSeries& a) {
        PadicSeries r = a;
        for (auto& c : r.c_) c = s * c;
        return r;
    }

    PadicSeries derivative() const {
        int newlead = lead_ - 1;
        std::vector<PadicNumber> out(std::max(0, tprec_ - 1 - newlead), exact_zero());
        for (int n = lead_; n < tprec_; ++n) {
            if (n == 0) continue;
            out[n - 1 - newlead] = PadicNumber::from_int(n, p_, kExactPrec) * coeff(n);
        }
        return PadicSeries(p_, newlead, tprec_ - 1, std::move(out));
    }

    PadicSeries integrate() const {
        if (lead_ <= -1 && -1 < tprec_ && !coeff(-1).is_zero())
            throw singularity_error("integrate: nonzero residue term");
        int newlead = lead_ + 1;
        std::vector<PadicNumber> out(std::max(0, tprec_ + 1 - newlead), exact_zero());
        for (int n = lead_; n < tprec_; ++n) {
            if (n == -1) continue;
            out[n + 1 - newlead] = coeff(n) / PadicNumber::from_int(n + 1, p_, kExactPrec);
        }
        return PadicSeries(p_, newlead, tprec_ + 1, std::move(out));
    }

    // 1/f.  Leading coefficients that vanish only to their stated precision
    // are treated as exact zeros; the result's coefficients are capped so the
    // answer never claims digits those near-zeros could pollute.
    PadicSeries reciprocal() const {
        if (is_zero_series()) throw singularity_error("reciprocal of (apparent) zero series");
        int m = apparent_order();
        int cap = kExactPrec;
        for (int n = lead_; n < m; ++n) {
            const PadicNumber z = coeff(n);
            if (z.precision() < kExactPrec / 2)
                cap = std::min(cap, z.precision() - 2 * coeff(m).valuation());
        }
        int reltp = tprec_ - m;
        std::vector<PadicNumber> u;
        for (int n = 0; n < reltp; ++n) u.push_back(coeff(n + m));
        std::vector<PadicNumber> v(reltp, exact_zero());
        PadicNumber u0inv = u[0].inverse();
        v[0] = u0inv;
        for (int n = 1; n < reltp; ++n) {
            PadicNumber s = exact_zero();
            for (int k = 1; k <= n; ++k) s = s + u[k] * v[n - k];
            v[n] = -(s * u0inv);
        }
        if (cap < kExactPrec)
            for (auto& x : v) x = x.truncate(cap);
        return PadicSeries(p_, -m, reltp - m, std::move(v));
    }

    friend PadicSeries operator/(const PadicSeries& a, const PadicSeries& b) {
        return a * b.reciprocal();
    }

    // f(g): inner series must have coefficient-of-t^0 of positive p-adic
    // valuation (or absent) and ord_t >= 0; convergence on t in pZ_p is then
    // coefficientwise.  Horner from the top term.
    PadicSeries compose(const PadicSeries& g) const {
        check_compat(g);
        if (lead_ < 0) {
            // Laurent outer series: negative exponents go through 1/g.
            if (g.is_zero_series()) throw singularity_error("compose: Laurent at zero series");
            int tp = composed_tprec(g);
            PadicSeries ginv = g.reciprocal();
            PadicSeries neg = zero(p_, tp);
            PadicSeries gk = monomial(one(), 0, tp);
            for (int k = 1; k <= -lead_; ++k) {
                gk = (gk * ginv).truncate(tp);
                if (-k < tprec_) neg = neg + coeff(-k) * gk;
            }
            return neg + positive_tail(0).compose(g);
        }
        if (!g.is_zero_series() && g.lead_ < 0)
            throw domain_error("compose: inner series has a pole");
        if (!g.is_zero_series() && g.lead_ == 0 && g.coeff(0).valuation() < 1 &&
            !g.coeff(0).is_zero())
            throw domain_error("compose: inner constant term must have positive valuation");
        int tp = composed_tprec(g);
        PadicSeries acc = zero(p_, tp);
        for (int n = tprec_ - 1; n >= 0; --n) {
            acc = (acc * g).truncate(tp) + monomial(coeff(n), 0, tp);
        }
        return acc;
    }

    // Compositional inverse of f = c1*t + ... with c1 a p-adic unit.
    PadicSeries reverse() const {
        if (tprec_ < 2 || is_zero_series() || apparent_order() != 1 || coeff(1).valuation() != 0)
            throw domain_error("reverse: need a series unit*t + O(t^2)");
        int tp = tprec_;
        PadicNumber c1inv = coeff(1).inverse();
        PadicSeries g = monomial(c1inv, 1, 2);
        // Newton: g <- g - (f(g) - t) / f'(g), doubling t-adic accuracy.
        int acc = 2;
        while (acc < tp) {
            acc = std::min(2 * acc, tp);
            PadicSeries gg = g.extended_to(acc);
            PadicSeries err = this->truncate(acc).compose(gg) - monomial(one(), 1, acc);
            PadicSeries der = this->truncate(acc).derivative().compose(gg);
            g = (gg - err / der).truncate(acc);
        }
        return g.extended_to(tp);
    }

    // log(f/f(0)) for f with invertible-unit constant term... integral form:
    // log(f) - log(c0) = integral of f'/f.
    PadicSeries log_quotient() const {
        if (lead_ != 0 || coeff(0).is_zero())
            throw domain_error("log_quotient: need nonzero constant term");
        return (derivative() / *this).integrate();
    }

    // exp of a series with ord_t >= 1 (coefficient losses tracked term by term).
    PadicSeries exp() const {
        if (lead_ < 0) throw domain_error("exp: Laurent input");
        if (!is_zero_series() && apparent_order() < 1)
            throw domain_error("exp: need ord_t >= 1");
        int tp = tprec_;
        std::vector<PadicNumber> f(tp, exact_zero());
        for (int n = std::max(1, lead_); n < tp; ++n) f[n] = coeff(n);
        std::vector<PadicNumber> y(tp, exact_zero());
        y[0] = one();
        for (int n = 1; n < tp; ++n) {
            PadicNumber s = exact_zero();
            for (int k = 1; k <= n; ++k)
                s = s + PadicNumber::from_int(k, p_, kExactPrec) * f[k] * y[n - k];
            y[n] = s / PadicNumber::from_int(n, p_, kExactPrec);
        }
        return PadicSeries(p_, 0, tp, std::move(y));
    }

    // Evaluate at x with ord_p(x) >= 1 (Laurent parts need x != 0).  The
    // returned precision reflects only the computed terms; callers that need
    // a certified tail must check decay separately.
    PadicNumber eval(const PadicNumber& x) const {
        if (!x.is_zero() && x.valuation() < 1 && lead_ >= 0)
            throw domain_error("eval: point must lie in pZ_p");
        PadicNumber acc = PadicNumber::zero(p_, kExactPrec);
        for (int n = tprec_ - 1; n >= lead_; --n) acc = acc * x + coeff(n);
        if (lead_ != 0) acc = acc * x.pow(lead_);
        return acc;
    }

    // eval with the claimed precision capped by the truncation-tail estimate
    // tprec*ord(x) + floor, where floor is the observed coefficient-valuation
    // floor (assumed to hold for the unknown tail as well; the same
    // convention as series_roots_in_disk).
    PadicNumber eval_capped(const PadicNumber& x) const {
        PadicNumber v = eval(x);
        int vx = x.is_zero() ? x.precision() : x.valuation();
        int floor0 = 0;
        for (int n = lead_; n < tprec_; ++n) {
            const PadicNumber c = coeff(n);
            if (!c.is_zero()) floor0 = std::min(floor0, c.valuation());
        }
        long cap = static_cast<long>(tprec_) * vx + floor0;
        if (cap < v.precision()) return v.truncate(static_cast<int>(cap));
        return v;
    }

    // Extend with exact zero coefficients; only meaningful for series known
    // exactly (polynomials, monomials, Newton iterates about to be refined).
    PadicSeries extended_to(int tp) const {
        if (tp <= tprec_) return truncate(tp);
        PadicSeries r = *this;
        if (r.c_.empty()) r.lead_ = r.tprec_;
        r.c_.resize(std::max(0, tp - r.lead_), exact_zero());
        if (r.c_.empty()) r.lead_ = tp;
        r.tprec_ = tp;
        return r;
    }

    // Smallest over stored n of ord(c_n) + n (a lower bound for the valuation
    // of any term value on pZ_p).
    int min_term_valuation() const {
        int m = kExactPrec;
        for (int n = lead_; n < tprec_; ++n) {
            const PadicNumber c = coeff(n);
            int v = c.is_zero() ? c.precision() : c.valuation();
            m = std::min(m, v + n);
        }
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int n = lead_; n < tprec_; ++n) {
            if (coeff(n).is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << coeff(n).str() << ")*t^" << n;
            first = false;
        }
        if (!first) os << " + ";
        os << "O(t^" << tprec_ << ")";
        return os.str();
    }

    static constexpr int kExactPrec = 1 << 20;

private:
    long p_;
    int lead_;
    int tprec_;
    std::vector<PadicNumber> c_;

    PadicNumber exact_zero() const { return PadicNumber::zero(p_, kExactPrec); }
    PadicNumber one() const { return PadicNumber::from_int(1, p_, kExactPrec); }

    void normalize_lead() {
        size_t i = 0;
        while (i < c_.size() && c_[i].is_zero() && c_[i].precision() > kExactPrec / 2) ++i;
        if (i > 0) {
            c_.erase(c_.begin(), c_.begin() + i);
            lead_ += static_cast<int>(i);
        }
        if (c_.empty()) lead_ = tprec_;
    }

    int composed_tprec(const PadicSeries& g) const {
        int k = 1;
        if (!g.is_zero_series()) k = std::max(1, g.apparent_order());
        long a = static_cast<long>(tprec_) * k;
        long b = g.tprec_;
        return static_cast<int>(std::min(a, b));
    }

    // Coefficients with exponent >= from, as a power series.
    PadicSeries positive_tail(int from) const {
        std::vector<PadicNumber> c;
        for (int n = from; n < tprec_; ++n) c.push_back(coeff(n));
        return PadicSeries(p_, from, tprec_, std::move(c));
    }

    void check_compat(const PadicSeries& o) const {
        if (p_ != o.p_) throw invalid_prime_error("mixed primes in series arithmetic");
    }
};

} // namespace qc
