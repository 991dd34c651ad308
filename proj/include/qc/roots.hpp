#pragma once

#include <vector>

#include "qc/series.hpp"

namespace qc {

struct DiskRoot {
    PadicNumber t;
    bool certified_simple;
};

// All t in p^v0 * Z_p with f(t) = 0 modulo p^target, for a truncated series f.
//
// Soundness notes, with D = min_{n>=1} (ord c_n + n*v0) over stored
// coefficients:
//   * a residue class at digit level k containing a true root has
//     ord(f(center)) >= D + k, so pruning on that bound never drops a root;
//   * the unknown tail must be negligible: we demand ord(c_n) + n*v0 >= target
//     on a trailing window and tprec*v0 + (coefficient floor) >= target, and
//     refuse to answer otherwise;
//   * a class is closed off by Newton only when the Hensel ball lies inside
//     the class and k > ord(f'(c)) + v0 - D, which rules out a second root
//     hiding elsewhere in the class.
// Roots that reach the bottom digit level without Hensel certification are
// reported with certified_simple = false, never silently dropped.
inline std::vector<DiskRoot> series_roots_in_disk(const PadicSeries& f, int v0, int target) {
    if (v0 < 1) throw domain_error("series_roots_in_disk: v0 must be >= 1");
    if (f.lead() < 0) throw domain_error("series_roots_in_disk: Laurent input");
    if (f.is_zero_series())
        throw precision_error("series_roots_in_disk: series vanishes identically at precision");
    long p = f.prime();

    int floor0 = 0;
    for (int n = f.lead(); n < f.tprec(); ++n) {
        const PadicNumber c = f.coeff(n);
        if (!c.is_zero()) floor0 = std::min(floor0, c.valuation());
    }
    if (static_cast<long>(f.tprec()) * v0 + floor0 < target)
        throw precision_error(
            "series_roots_in_disk: truncation too short for target (need t-prec >= " +
            std::to_string((target - floor0 + v0 - 1) / v0) + ")");
    int window = std::max(3, f.tprec() / 4);
    for (int n = std::max(f.lead(), f.tprec() - window); n < f.tprec(); ++n) {
        const PadicNumber c = f.coeff(n);
        int v = c.is_zero() ? c.precision() : c.valuation();
        if (v + static_cast<long>(n) * v0 < target)
            throw precision_error("series_roots_in_disk: trailing terms do not dominate at target");
    }

    int D = PadicSeries::kExactPrec;
    for (int n = std::max(1, f.lead()); n < f.tprec(); ++n) {
        const PadicNumber c = f.coeff(n);
        int v = c.is_zero() ? c.precision() : c.valuation();
        D = std::min(D, v + n * v0);
    }

    PadicSeries fp = f.derivative();
    std::vector<DiskRoot> out;
    auto emit = [&](const PadicNumber& root, bool simple) {
        for (auto& r : out)
            if (congruent(r.t, root, std::min({r.t.precision(), root.precision(), target})))
                return;
        out.push_back({root, simple});
    };

    struct Node {
        Int r;
        int k;
    };
    std::vector<Node> stack{{Int(0), 0}};
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        PadicNumber t0 = PadicNumber::from_rational(Rat(nd.r * pow_p(p, v0)), p,
                                                    std::max(target + v0 + 2, v0 + nd.k + 2));
        PadicNumber val = f.eval(t0);
        int need = std::min(D + nd.k, target);
        if (!val.is_zero() && val.valuation() < need) continue;  // no root in this class

        PadicNumber der = fp.eval(t0);
        if (!val.is_zero() && !der.is_zero()) {
            int vv = val.valuation(), vd = der.valuation();
            bool hensel = vv >= 2 * vd + 1;
            bool ball_in_class = vv - vd >= v0 + nd.k;
            bool lone = nd.k > vd + v0 - D;
            if (hensel && ball_in_class && lone) {
                PadicNumber t = t0;
                for (int it = 0; it < 64; ++it) {
                    PadicNumber step = f.eval(t) / fp.eval(t);
                    t = t - step;
                    if (step.is_zero() || step.valuation() >= target + 1) break;
                }
                emit(t.truncate(target), true);
                continue;
            }
        }
        if (val.is_zero() && !der.is_zero()) {
            int vd = der.valuation();
            if (val.precision() >= 2 * vd + 1 && val.precision() - vd >= v0 + nd.k &&
                nd.k > vd + v0 - D && val.precision() >= target + vd) {
                // value is 0 to full precision and Hensel applies: the class
                // center itself is the certified root
                emit(t0.truncate(target), true);
                continue;
            }
        }
        if (v0 + nd.k >= target) {
            emit(t0.truncate(target), false);
            continue;
        }
        for (long d = p - 1; d >= 0; --d) stack.push_back({nd.r + d * pow_p(p, nd.k), nd.k + 1});
    }

    std::sort(out.begin(), out.end(), [](const DiskRoot& a, const DiskRoot& b) {
        Int la = a.t.is_zero() ? Int(0) : a.t.lift();
        Int lb = b.t.is_zero() ? Int(0) : b.t.lift();
        return la < lb;
    });
    return out;
}

} // namespace qc
