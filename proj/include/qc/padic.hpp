#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "qc/rational.hpp"

namespace qc {

// Exact element of Q_p known modulo p^N (absolute precision N).  A nonzero
// value is stored as p^val * unit with unit in [1, p^(N-val)) coprime to p;
// zero stores only N.  Arithmetic propagates precision conservatively, so a
// result never claims more digits than its inputs support.
class PadicNumber {
public:
    PadicNumber() : p_(0), val_(0), aprec_(0), unit_(0) {}

    // Zero known to precision O(p^aprec); aprec may be <= 0 for values that
    // arise mid-computation with no useful digits left.
    static PadicNumber zero(long p, int aprec) {
        check_odd_prime(p);
        PadicNumber x;
        x.p_ = p;
        x.aprec_ = aprec;
        x.val_ = aprec;
        return x;
    }

    static PadicNumber from_int(const Int& n, long p, int aprec) {
        return from_rational(Rat(n), p, aprec);
    }

    static PadicNumber from_rational(const Rat& r_in, long p, int aprec) {
        check_odd_prime(p);
        if (aprec < 1) throw domain_error("precision must be >= 1");
        Rat r = r_in;
        r.canonicalize();
        if (r == 0) return zero(p, aprec);
        long v = ord_q(r, p);
        if (v >= aprec) return zero(p, aprec);
        Int num = strip_q(Int(r.get_num()), p);
        Int den = strip_q(Int(r.get_den()), p);
        Int mod = pow_p(p, aprec - v);
        Int deninv;
        if (!mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()))
            throw domain_error("denominator not invertible");  // unreachable: den coprime to p
        PadicNumber x;
        x.p_ = p;
        x.val_ = static_cast<int>(v);
        x.aprec_ = aprec;
        x.unit_ = mod_pos(num * deninv, mod);
        return x;
    }

    long prime() const { return p_; }
    bool is_zero() const { return unit_ == 0; }

    // Known lower bound on the valuation; for a zero this is the O(p^N) bound.
    int valuation() const { return val_; }
    int precision() const { return aprec_; }
    int rel_precision() const { return aprec_ - val_; }
    const Int& unit_part() const {
        if (is_zero()) throw domain_error("unit of zero");
        return unit_;
    }

    bool is_unit() const { return !is_zero() && val_ == 0; }

    // The canonical integer representative in [0, p^N) (valuation >= 0 only).
    Int lift() const {
        if (is_zero()) return Int(0);
        if (val_ < 0) throw domain_error("lift of non-integral value");
        return pow_p(p_, val_) * unit_;
    }

    // Representative as an exact rational p^val * unit.
    Rat lift_rational() const {
        if (is_zero()) return Rat(0);
        if (val_ >= 0) return Rat(pow_p(p_, val_) * unit_);
        Rat r(unit_, pow_p(p_, -val_));
        r.canonicalize();
        return r;
    }

    PadicNumber truncate(int new_aprec) const {
        if (new_aprec >= aprec_) return *this;
        if (is_zero() || val_ >= new_aprec) return zero(p_, new_aprec);
        PadicNumber x = *this;
        x.aprec_ = new_aprec;
        x.unit_ = mod_pos(unit_, pow_p(p_, new_aprec - val_));
        return x.normalized();
    }

    PadicNumber operator-() const {
        if (is_zero()) return *this;
        PadicNumber x = *this;
        x.unit_ = pow_p(p_, rel_precision()) - unit_;
        return x;
    }

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
        a.check_compat(b);
        int n = std::min(a.aprec_, b.aprec_);
        if (a.is_zero() && b.is_zero()) return zero(a.p_, n);
        if (a.is_zero()) return b.truncate(std::min(n, b.aprec_));
        if (b.is_zero()) return a.truncate(std::min(n, a.aprec_));
        int v0 = std::min(a.val_, b.val_);
        if (v0 >= n) return zero(a.p_, n);
        Int mod = pow_p(a.p_, n - v0);
        Int s = mod_pos(a.shifted_unit(v0, n) + b.shifted_unit(v0, n), mod);
        return make(a.p_, v0, n, s);
    }

    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
        a.check_compat(b);
        if (a.is_zero() || b.is_zero()) {
            int va = a.is_zero() ? a.aprec_ : a.val_;
            int vb = b.is_zero() ? b.aprec_ : b.val_;
            return zero(a.p_, va + vb);
        }
        int v = a.val_ + b.val_;
        int n = v + std::min(a.rel_precision(), b.rel_precision());
        PadicNumber x;
        x.p_ = a.p_;
        x.val_ = v;
        x.aprec_ = n;
        x.unit_ = mod_pos(a.unit_ * b.unit_, pow_p(a.p_, n - v));
        return x;
    }

    PadicNumber inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        Int mod = pow_p(p_, rel_precision());
        Int inv;
        mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
        PadicNumber x;
        x.p_ = p_;
        x.val_ = -val_;
        x.aprec_ = -val_ + rel_precision();
        x.unit_ = inv;
        return x;
    }

    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
        return a * b.inverse();
    }

    PadicNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        if (is_zero()) {
            if (e == 0) return from_int(1, p_, aprec_);
            return zero(p_, static_cast<int>(std::min<long>(e * aprec_, 1 << 20)));
        }
        int relp = rel_precision();
        long tv = std::abs((long)val_) * e;
        PadicNumber r = from_int(1, p_, static_cast<int>(tv + relp + 2));
        PadicNumber b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // Valuation of a-b; min(Na, Nb) when indistinguishable.  This is the
    // membership primitive: a == b mod p^k iff dist_valuation >= k.
    friend int dist_valuation(const PadicNumber& a, const PadicNumber& b) {
        PadicNumber d = a - b;
        return d.is_zero() ? d.aprec_ : d.val_;
    }

    friend bool congruent(const PadicNumber& a, const PadicNumber& b, int k) {
        return dist_valuation(a, b) >= k;
    }

    // sqrt by Hensel lifting; std::nullopt when no square root exists in Q_p.
    std::optional<PadicNumber> sqrt() const {
        if (is_zero()) {
            if (aprec_ % 2) throw precision_error("sqrt of zero at odd precision");
            return zero(p_, aprec_ / 2);
        }
        if (val_ % 2) return std::nullopt;
        Int pm(p_);
        Int u0 = mod_pos(unit_, pm);
        if (mpz_legendre(u0.get_mpz_t(), pm.get_mpz_t()) != 1) return std::nullopt;
        int relp = rel_precision();
        Int mod = pow_p(p_, relp);
        Int r = sqrt_mod_p(u0, p_);
        // Newton: r <- (r + u/r)/2, doubling the number of correct digits.
        long correct = 1;
        Int inv2;
        mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), mod.get_mpz_t());
        while (correct < relp) {
            Int rinv;
            mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
            r = mod_pos((r + unit_ * rinv) * inv2, mod);
            correct *= 2;
        }
        PadicNumber x;
        x.p_ = p_;
        x.val_ = val_ / 2;
        x.aprec_ = val_ / 2 + relp;
        x.unit_ = r;
        return x;
    }

    std::string str() const {
        if (p_ == 0) return "<uninitialised>";
        std::ostringstream os;
        if (is_zero()) {
            os << "O(" << p_ << "^" << aprec_ << ")";
            return os.str();
        }
        Int u = unit_;
        bool first = true;
        for (int k = val_; k < aprec_; ++k) {
            long d = mpz_fdiv_ui(u.get_mpz_t(), p_);
            u = (u - d) / p_;
            if (d != 0) {
                if (!first) os << " + ";
                if (k == 0)
                    os << d;
                else if (k == 1)
                    os << d << "*" << p_;
                else
                    os << d << "*" << p_ << "^" << k;
                first = false;
            }
        }
        if (!first) os << " + ";
        os << "O(" << p_ << "^" << aprec_ << ")";
        return os.str();
    }

    // Base-p digits of the unit part, least significant first.
    std::vector<long> unit_digits() const {
        std::vector<long> d;
        if (is_zero()) return d;
        Int u = unit_;
        for (int k = 0; k < rel_precision(); ++k) {
            long r = mpz_fdiv_ui(u.get_mpz_t(), p_);
            d.push_back(r);
            u = (u - r) / p_;
        }
        return d;
    }

private:
    long p_;
    int val_;
    int aprec_;
    Int unit_;

    static Int mod_pos(const Int& a, const Int& m) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        return r;
    }

    // Build from a representative r*p^v0 known mod p^n, renormalising the
    // valuation; r may be divisible by p.
    static PadicNumber make(long p, int v0, int n, const Int& r) {
        if (r == 0) return zero(p, n);
        long extra = ord_q(r, p);
        if (v0 + extra >= n) return zero(p, n);
        PadicNumber x;
        x.p_ = p;
        x.val_ = v0 + static_cast<int>(extra);
        x.aprec_ = n;
        x.unit_ = mod_pos(strip_q(r, p), pow_p(p, n - x.val_));
        return x;
    }

    PadicNumber normalized() const {
        if (is_zero()) return *this;
        return make(p_, val_, aprec_, unit_);
    }

    // unit scaled to valuation base v0, reduced mod p^(n-v0).
    Int shifted_unit(int v0, int n) const {
        Int u = unit_ * pow_p(p_, val_ - v0);
        return mod_pos(u, pow_p(p_, n - v0));
    }

    void check_compat(const PadicNumber& o) const {
        if (p_ == 0 || o.p_ == 0) throw domain_error("uninitialised p-adic value");
        if (p_ != o.p_) throw invalid_prime_error("mixed primes in p-adic arithmetic");
    }

    static Int sqrt_mod_p(const Int& a, long p) {
        // Tonelli-Shanks; p is a small odd prime.
        Int pm(p);
        if (a == 0) return Int(0);
        if (p % 4 == 3) {
            Int r;
            Int e = (pm + 1) / 4;
            mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), pm.get_mpz_t());
            return r;
        }
        Int q = pm - 1;
        long s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        Int z(2);
        while (mpz_legendre(z.get_mpz_t(), pm.get_mpz_t()) != -1) ++z;
        Int m(s), c, t, r;
        mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pm.get_mpz_t());
        mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), pm.get_mpz_t());
        Int e = (q + 1) / 2;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), pm.get_mpz_t());
        while (t != 1) {
            Int tt = t;
            long i = 0;
            while (tt != 1) {
                tt = tt * tt % pm;
                ++i;
            }
            Int b = c;
            for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % pm;
            m = i;
            c = b * b % pm;
            t = t * c % pm;
            r = r * b % pm;
        }
        return r;
    }
};

// log extended to Q_p^x via log(p) = 0 and log(zeta) = 0: strip the p-power,
// kill the Teichmueller part by raising to the (p-1)-st power, then sum the
// usual series and divide by p-1.
inline PadicNumber padic_log(const PadicNumber& x) {
    if (x.is_zero()) throw domain_error("log of zero");
    long p = x.prime();
    int relp = x.rel_precision();
    if (relp < 1) throw precision_error("log: no significant digits");

    // w = u^(p-1) = 1 mod p, where u is the unit part at full relative precision.
    PadicNumber u = PadicNumber::from_int(x.unit_part(), p, relp);
    PadicNumber w = u.pow(p - 1);
    PadicNumber m = w - PadicNumber::from_int(1, p, relp);
    if (m.is_zero()) return PadicNumber::zero(p, relp);

    int k = m.valuation();  // >= 1
    PadicNumber sum = PadicNumber::zero(p, relp);
    PadicNumber term = m;
    long n = 1;
    while (true) {
        // term = m^n; contribute m^n / n while it can still matter.
        long tail_val = (n + 1) * k - static_cast<long>(std::log((double)n + 1) / std::log((double)p));
        PadicNumber contrib = term / PadicNumber::from_int(n, p, relp + 2 * k);
        if (n % 2 == 0) contrib = -contrib;
        sum = sum + contrib;
        if (tail_val > relp + 1) break;
        term = term * m;
        ++n;
        if (n > 4 * relp + 16) throw precision_error("log series failed to converge");
    }
    PadicNumber res = sum / PadicNumber::from_int(p - 1, p, relp);
    return res.truncate(std::min(res.precision(), relp));
}

// exp on the domain ord(x) > 1/(p-1), i.e. ord(x) >= 1 for p >= 3.
inline PadicNumber padic_exp(const PadicNumber& x) {
    long p = x.prime();
    if (x.is_zero()) return PadicNumber::from_int(1, p, x.precision());
    if (x.valuation() < 1) throw domain_error("exp: argument must have positive valuation");
    int n = x.precision();
    PadicNumber sum = PadicNumber::from_int(1, p, n);
    PadicNumber term = PadicNumber::from_int(1, p, n + x.valuation());
    long k = 1;
    while (true) {
        term = term * x / PadicNumber::from_int(k, p, n + 8);
        if (term.is_zero() || term.valuation() >= n) break;
        sum = sum + term;
        ++k;
        if (k > 16 * n + 64) throw precision_error("exp series failed to converge");
    }
    return sum;
}

} // namespace qc
