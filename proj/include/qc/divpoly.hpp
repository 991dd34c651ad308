#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "qc/curve.hpp"

namespace qc {

template <class K>
struct ScalarFrom;

template <>
struct ScalarFrom<Rat> {
    static Rat from_rat(const Rat& r, const Rat&) { return r; }
};
template <>
struct ScalarFrom<PadicNumber> {
    static PadicNumber from_rat(const Rat& r, const PadicNumber& sample) {
        return PadicNumber::from_rational(r, sample.prime(), PadicSeries::kExactPrec);
    }
};
template <>
struct ScalarFrom<PadicSeries> {
    static PadicSeries from_rat(const Rat& r, const PadicSeries& sample) {
        return PadicSeries::monomial(
            PadicNumber::from_rational(r, sample.prime(), PadicSeries::kExactPrec), 0, 1 << 20);
    }
};

template <class K>
K eval_ratpoly(const RatPoly& f, const K& x) {
    K acc = ScalarFrom<K>::from_rat(Rat(0), x);
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        acc = acc * x + ScalarFrom<K>::from_rat(*it, x);
    return acc;
}

// Division polynomials in the reduced form psi_m = w_m(x) * psi2^(m even ? 1 : 0)
// with psi2 = 2y + a1 x + a3 and psi2^2 = F2(x) = 4x^3 + b2 x^2 + 2 b4 x + b6.
// The recurrences close up in this form:
//   w_{2k+1} = w_{k+2} w_k^3 * F2^2 - w_{k-1} w_{k+1}^3        (k even)
//   w_{2k+1} = w_{k+2} w_k^3 - w_{k-1} w_{k+1}^3 * F2^2        (k odd)
//   w_{2k}   = w_k (w_{k+2} w_{k-1}^2 - w_{k-2} w_{k+1}^2)     (either parity)
class DivisionPolyTable {
public:
    explicit DivisionPolyTable(const WeierstrassModel& m) : model_(m) {
        F2_ = RatPoly({m.b6, 2 * m.b4, m.b2, Rat(4)});
        w_[0] = RatPoly();
        w_[1] = RatPoly::constant(Rat(1));
        w_[2] = RatPoly::constant(Rat(1));
        w_[3] = RatPoly({m.b8, 3 * m.b6, 3 * m.b4, m.b2, Rat(3)});
        w_[4] = RatPoly({m.b4 * m.b8 - m.b6 * m.b6, m.b2 * m.b8 - m.b4 * m.b6, 10 * m.b8,
                         10 * m.b6, 5 * m.b4, m.b2, Rat(2)});
    }

    const RatPoly& w(long m) {
        if (m < 0) throw domain_error("division polynomial index must be >= 0");
        auto it = w_.find(m);
        if (it != w_.end()) return it->second;
        long k = m / 2;
        RatPoly res;
        if (m % 2 == 1) {
            RatPoly A = w(k + 2) * w(k) * w(k) * w(k);
            RatPoly B = w(k - 1) * w(k + 1) * w(k + 1) * w(k + 1);
            res = (k % 2 == 0) ? A * F2_ * F2_ - B : A - B * F2_ * F2_;
        } else {
            RatPoly A = w(k + 2) * w(k - 1) * w(k - 1);
            RatPoly B = w(k - 2) * w(k + 1) * w(k + 1);
            res = w(k) * (A - B);
        }
        auto [pos, inserted] = w_.emplace(m, std::move(res));
        (void)inserted;
        return pos->second;
    }

    // phi_m = x psi_m^2 - psi_{m+1} psi_{m-1}, always univariate in x:
    //   m odd:  x w_m^2 - w_{m+1} w_{m-1} F2
    //   m even: x w_m^2 F2 - w_{m+1} w_{m-1}
    RatPoly phi(long m) {
        RatPoly X({Rat(0), Rat(1)});
        RatPoly wm2 = w(m) * w(m);
        RatPoly cross = w(m + 1) * w(m - 1);
        if (m % 2 == 1) return X * wm2 - cross * F2_;
        return X * wm2 * F2_ - cross;
    }

    const RatPoly& psi2_squared() const { return F2_; }
    const WeierstrassModel& model() const { return model_; }

private:
    WeierstrassModel model_;
    RatPoly F2_;
    std::map<long, RatPoly> w_;
};

// Shared, synchronised per-model cache; the QC solvers evaluate the same
// division polynomials on every residue disk.
inline std::shared_ptr<DivisionPolyTable> division_polys(const WeierstrassModel& m) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<DivisionPolyTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = m.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto tab = std::make_shared<DivisionPolyTable>(m);
    cache.emplace(key, tab);
    return tab;
}

template <class K>
K psi2_value(const CurveOver<K>& c, const Point<K>& P) {
    return P.y + P.y + c.a1 * P.x + c.a3;
}

// psi_m(P) over any coefficient field.
template <class K>
K eval_division_poly(DivisionPolyTable& tab, const CurveOver<K>& c, long m, const Point<K>& P) {
    if (P.infinity) throw domain_error("division polynomial at infinity");
    K val = eval_ratpoly(tab.w(m), P.x);
    if (m % 2 == 0) val = val * psi2_value(c, P);
    return val;
}

} // namespace qc
