#pragma once

#include "qc/finitefield.hpp"
#include "qc/padic.hpp"

namespace qc {

constexpr long kOrdInfinity = 1L << 40;

// a + b*sqrt(D), D a squarefree integer (not a square), exact arithmetic.
struct QuadElem {
    Rat a, b;
    Int D;

    QuadElem() : a(0), b(0), D(0) {}
    QuadElem(Rat a_, Rat b_, Int D_) : a(std::move(a_)), b(std::move(b_)), D(std::move(D_)) {}
    static QuadElem from_rat(const Rat& r, const Int& D) { return {r, Rat(0), D}; }

    bool is_zero() const { return a == 0 && b == 0; }
    Rat norm() const { return a * a - Rat(D) * b * b; }
    QuadElem conj() const { return {a, -b, D}; }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        return {x.a + y.a, x.b + y.b, x.D == 0 ? y.D : x.D};
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        return {x.a - y.a, x.b - y.b, x.D == 0 ? y.D : x.D};
    }
    QuadElem operator-() const { return {-a, -b, D}; }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        Int D = x.D == 0 ? y.D : x.D;
        return {x.a * y.a + Rat(D) * x.b * y.b, x.a * y.b + x.b * y.a, D};
    }
    friend QuadElem operator*(const Rat& s, const QuadElem& y) { return {s * y.a, s * y.b, y.D}; }
    friend QuadElem operator/(const QuadElem& x, const Rat& s) { return {x.a / s, x.b / s, x.D}; }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) {
        if (y.is_zero()) throw domain_error("division by zero in quadratic field");
        Rat n = y.norm();
        QuadElem num = x * y.conj();
        return {num.a / n, num.b / n, num.D};
    }
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

// The completion Q_q, presented through the interface Tate's algorithm needs.
class BaseLocalField {
public:
    using Elem = Rat;

    explicit BaseLocalField(long q) : q_(q), k_(FiniteField::prime_field(q)) {}

    long residue_char() const { return q_; }
    int ram_index() const { return 1; }
    int res_degree() const { return 1; }
    const FiniteField& k() const { return k_; }

    Elem from_rat(const Rat& r) const { return r; }
    Elem uniformizer() const { return Rat(q_); }
    Elem zero() const { return Rat(0); }

    long ord(const Elem& x) const { return x == 0 ? kOrdInfinity : ord_q(x, q_); }

    long residue(const Elem& x) const {
        if (x == 0) return 0;
        if (ord(x) < 0) throw domain_error("residue of non-integral element");
        Int num = x.get_num(), den = x.get_den(), d;
        mpz_invert(d.get_mpz_t(), den.get_mpz_t(), Int(q_).get_mpz_t());
        Int v = num * d;
        return mpz_fdiv_ui(v.get_mpz_t(), q_);
    }

    Elem lift(long kelem) const { return Rat(kelem); }

    // exact division by 2 is a field operation away from q = 2
    bool char_two() const { return q_ == 2; }

private:
    long q_;
    FiniteField k_;
};

// A quadratic completion Q_q(sqrt(D)) for inert or ramified q (the split case
// is just Q_q again).  D is assumed squarefree.
class QuadLocalField {
public:
    using Elem = QuadElem;
    enum class Kind { inert, ramified };

    QuadLocalField(long q, const Int& D) : q_(q), D_(D) {
        long vD = D == 0 ? 0 : ord_q(D, q);
        if (vD >= 2) throw input_error("QuadLocalField: D must be squarefree at q");
        if (q == 2) {
            long m8 = mpz_fdiv_ui(D.get_mpz_t(), 8);
            if (vD == 1) {
                kind_ = Kind::ramified;  // D = 2 mod 4
            } else if (m8 % 4 == 3) {
                kind_ = Kind::ramified;  // D = 3 mod 4: ramified via (1+sqrt(D))
            } else if (m8 == 5) {
                kind_ = Kind::inert;
            } else {
                throw input_error("QuadLocalField: q splits; use the base field");
            }
        } else if (vD == 1) {
            kind_ = Kind::ramified;
        } else {
            long r = mpz_fdiv_ui(D.get_mpz_t(), q);
            Int leg;
            mpz_powm(leg.get_mpz_t(), Int(r).get_mpz_t(), Int((q - 1) / 2).get_mpz_t(),
                     Int(q).get_mpz_t());
            if (leg == 1) throw input_error("QuadLocalField: q splits; use the base field");
            kind_ = Kind::inert;
        }
        if (kind_ == Kind::inert) {
            k_ = FiniteField::quadratic_field(q);
            if (q != 2) {
                // sqrt(D) = scale * s with s^2 = c: scale = sqrt(D/c) in F_q
                long c = k_.modulus_c0();
                long Dq = mpz_fdiv_ui(D.get_mpz_t(), q);
                long target = Dq % q * inv_mod(c, q) % q;
                scale_ = sqrt_mod(target, q);
            }
        } else {
            k_ = FiniteField::prime_field(q);
        }
    }

    long residue_char() const { return q_; }
    int ram_index() const { return kind_ == Kind::ramified ? 2 : 1; }
    int res_degree() const { return kind_ == Kind::inert ? 2 : 1; }
    Kind kind() const { return kind_; }
    const FiniteField& k() const { return k_; }
    const Int& disc_root_squared() const { return D_; }

    Elem from_rat(const Rat& r) const { return QuadElem::from_rat(r, D_); }

    Elem uniformizer() const {
        if (kind_ == Kind::inert) return from_rat(Rat(q_));
        if (q_ == 2 && mpz_fdiv_ui(D_.get_mpz_t(), 4) == 3) return {Rat(1), Rat(1), D_};
        return {Rat(0), Rat(1), D_};  // sqrt(D)
    }

    long ord(const Elem& x) const {
        if (x.is_zero()) return kOrdInfinity;
        long vn = ord_q(x.norm(), q_);
        if (kind_ == Kind::inert) {
            if (vn % 2) throw error("inert norm with odd valuation");  // unreachable
            return vn / 2;
        }
        return vn;
    }

    // residue of an integral element, as an encoded k() element
    long residue(const Elem& x) const {
        if (x.is_zero()) return 0;
        if (ord(x) < 0) throw domain_error("residue of non-integral element");
        if (kind_ == Kind::ramified) {
            if (q_ != 2) return res_rat(x.a);
            long m4 = mpz_fdiv_ui(D_.get_mpz_t(), 4);
            if (m4 == 3) {
                // pi = 1 + sqrt(D): sqrt(D) = 1 mod pi
                return (res_rat(x.a) + res_rat(x.b)) % 2;
            }
            return res_rat(x.a);
        }
        // inert
        if (q_ == 2) {
            // omega = (1 + sqrt(D))/2; x = (a - b) + 2b * omega
            Rat alpha = x.a - x.b, beta = 2 * x.b;
            return res_rat(alpha) + q_ * res_rat(beta);
        }
        long u = res_rat(x.a);
        long v = res_rat(x.b) * scale_ % q_;
        return u + q_ * v;
    }

    Elem lift(long kelem) const {
        if (kind_ == Kind::ramified) return from_rat(Rat(kelem));
        long u = kelem % q_, v = kelem / q_;
        if (q_ == 2) {
            // u + v*omega with omega = (1+sqrt(D))/2
            Rat half(v, 2);
            half.canonicalize();
            return {Rat(u) + half, half, D_};
        }
        long binv = inv_mod(scale_, q_);
        return {Rat(u), Rat(v * binv % q_), D_};
    }

    bool char_two() const { return q_ == 2; }

private:
    long q_;
    Int D_;
    Kind kind_;
    FiniteField k_;
    long scale_ = 1;

    long res_rat(const Rat& r) const {
        Int num = r.get_num(), den = r.get_den(), d;
        if (mpz_divisible_ui_p(den.get_mpz_t(), q_))
            throw domain_error("residue of non-integral rational");
        mpz_invert(d.get_mpz_t(), den.get_mpz_t(), Int(q_).get_mpz_t());
        Int v = num * d;
        return mpz_fdiv_ui(v.get_mpz_t(), q_);
    }

    static long inv_mod(long a, long q) {
        Int r;
        if (!mpz_invert(r.get_mpz_t(), Int(((a % q) + q) % q).get_mpz_t(), Int(q).get_mpz_t()))
            throw domain_error("non-invertible residue");
        return r.get_si();
    }

    static long sqrt_mod(long a, long q) {
        for (long e = 0; e < q; ++e)
            if (e * e % q == a % q) return e;
        throw error("sqrt_mod: not a square");  // unreachable for valid construction
    }
};

} // namespace qc
