#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qc/roots.hpp"
#include "qc/series.hpp"

using namespace qc;

namespace {

PadicSeries poly_series(const std::vector<long>& coeffs, long p, int coeff_prec, int tprec) {
    std::vector<PadicNumber> c;
    for (long a : coeffs) c.push_back(PadicNumber::from_int(a, p, coeff_prec));
    PadicSeries s(p, 0, static_cast<int>(coeffs.size()), std::move(c));
    return s.extended_to(tprec);
}

// Exact evaluation oracle: f(t) for integer-coefficient f and integer t.
Int eval_int(const std::vector<long>& coeffs, const Int& t) {
    Int acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

} // namespace

TEST_CASE("rational series basics", "[series]") {
    // (t + t^2) / t = 1 + t
    auto f = RatSeries::from_coeffs({Rat(1), Rat(1)}, 1, 8);
    auto t = RatSeries::monomial(Rat(1), 1, 8);
    auto q = f / t;
    REQUIRE(q.coeff(0) == 1);
    REQUIRE(q.coeff(1) == 1);
    REQUIRE(q.coeff(2) == 0);

    // integrate(1 + 2t) = t + t^2
    auto g = RatSeries::from_coeffs({Rat(1), Rat(2)}, 0, 6).integrate();
    REQUIRE(g.coeff(0) == 0);
    REQUIRE(g.coeff(1) == 1);
    REQUIRE(g.coeff(2) == 1);

    // reciprocal and Laurent handling: 1/(t^2(1+t)) has lead -2
    auto h = RatSeries::from_coeffs({Rat(1), Rat(1)}, 2, 8).reciprocal();
    REQUIRE(h.lead() == -2);
    REQUIRE(h.coeff(-2) == 1);
    REQUIRE(h.coeff(-1) == -1);
    REQUIRE(h.coeff(0) == 1);

    // exp(log-like) recurrence sanity: exp(t)*exp(-t) = 1
    auto e1 = RatSeries::monomial(Rat(1), 1, 10).exp();
    auto e2 = RatSeries::monomial(Rat(-1), 1, 10).exp();
    auto prod = e1 * e2;
    REQUIRE(prod.coeff(0) == 1);
    for (int n = 1; n < 10; ++n) REQUIRE(prod.coeff(n) == 0);
    REQUIRE(e1.coeff(3) == Rat(1, 6));
}

TEST_CASE("padic series arithmetic and precision", "[series]") {
    long p = 5;
    auto f = poly_series({0, 1, 1}, p, 10, 8);  // t + t^2
    auto q = f.cancel_zero(1);
    REQUIRE(q.coeff(0).lift() == 1);
    REQUIRE(q.coeff(1).lift() == 1);

    // division by a unit-constant series
    auto g = poly_series({1, 2}, p, 10, 8);
    auto r = (f * g) / g;
    for (int n = 0; n < 6; ++n)
        REQUIRE(congruent(r.coeff(n), f.coeff(n), 9));

    // derivative/integrate round trip (constant term lost by design)
    auto d = f.derivative().integrate();
    REQUIRE(congruent(d.coeff(1), f.coeff(1), 9));
    REQUIRE(congruent(d.coeff(2), f.coeff(2), 9));
}

TEST_CASE("composition and reversion", "[series]") {
    long p = 7;
    // L = t + t^3/3 + t^5/5 (truncated artificial log-like series)
    std::vector<PadicNumber> c{
        PadicNumber::from_int(1, p, 12), PadicNumber::zero(p, PadicSeries::kExactPrec),
        PadicNumber::from_rational(Rat(1, 3), p, 12), PadicNumber::zero(p, PadicSeries::kExactPrec),
        PadicNumber::from_rational(Rat(1, 5), p, 12)};
    PadicSeries L(p, 1, 6, std::move(c));
    auto Linv = L.reverse();
    auto comp = L.compose(Linv);
    REQUIRE(congruent(comp.coeff(1), PadicNumber::from_int(1, p, 10), 10));
    for (int n = 2; n < comp.tprec(); ++n) REQUIRE(comp.coeff(n).is_zero());

    // composing with a series whose constant term is p-adically small
    auto T = poly_series({5, 1}, p, 12, 6);  // 5 + t, ord_p(5) = 0... constant must have val >= 1
    REQUIRE_THROWS_AS(L.compose(poly_series({3, 1}, p, 12, 6)), domain_error);
    auto ok = L.compose(poly_series({7, 1}, p, 12, 6));
    // value at t=0 equals L(7)
    auto direct = L.eval(PadicNumber::from_int(7, p, 12));
    REQUIRE(congruent(ok.coeff(0), direct, std::min(ok.coeff(0).precision(), direct.precision())));
    (void)T;
}

TEST_CASE("series log_quotient matches padic_log pointwise", "[series]") {
    long p = 5;
    auto u = poly_series({2, 5, 3}, p, 12, 9);
    auto lg = u.log_quotient();  // log(u(t)/u(0))
    auto x = PadicNumber::from_int(10, p, 12);
    auto lhs = lg.eval_capped(x);
    auto rhs = padic_log(u.eval(x)) - padic_log(u.coeff(0));
    REQUIRE(lhs.precision() >= 7);
    REQUIRE(congruent(lhs, rhs, std::min(lhs.precision(), rhs.precision())));
}

TEST_CASE("roots: linear and explicit factorisations", "[roots]") {
    long p = 5;
    // f = t: the only root in pZ_p is t = 0
    auto f = poly_series({0, 1}, p, 12, 9);
    auto roots = series_roots_in_disk(f, 1, 6);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0].t.is_zero());
    REQUIRE(roots[0].certified_simple);

    // f = t^2 - p^2: roots +-p
    auto g = poly_series({-25, 0, 1}, p, 12, 9);
    auto roots2 = series_roots_in_disk(g, 1, 6);
    REQUIRE(roots2.size() == 2);
    std::vector<Int> lifts{roots2[0].t.lift(), roots2[1].t.lift()};
    std::sort(lifts.begin(), lifts.end());
    REQUIRE(lifts[0] == 5);
    REQUIRE(lifts[1] == pow_p(5, 6) - 5);
}

TEST_CASE("roots: agreement with brute force on planted simple roots", "[roots][property]") {
    std::mt19937 rng(314159);
    long p = 5;
    int target = 6;
    for (int trial = 0; trial < 40; ++trial) {
        // f = (t - p*a)(t - p*b) * (unit quadratic), a != b mod p so roots are
        // simple with unit-ish derivative spacing
        std::uniform_int_distribution<long> digit(0, 24);
        long a = digit(rng), b = digit(rng);
        if (a % p == b % p) continue;
        std::uniform_int_distribution<long> small(1, 4);
        long c0 = small(rng);
        // (t-5a)(t-5b)(c0 + t^2)
        std::vector<long> q{25 * a * b, -5 * (a + b), 1};
        std::vector<long> u{c0, 0, 1};
        std::vector<long> prod(q.size() + u.size() - 1, 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < u.size(); ++j) prod[i + j] += q[i] * u[j];
        auto f = poly_series(prod, p, 16, 12);
        auto roots = series_roots_in_disk(f, 1, target);
        REQUIRE(roots.size() == 2);

        // brute force over p * (Z/p^5): since f'(root) has valuation exactly 1,
        // f(t) = 0 mod p^6 iff t = root mod p^5, giving 5 hits per root
        Int mod = pow_p(p, target);
        std::vector<Int> brute;
        for (long uu = 0; uu < 5 * 5 * 5 * 5 * 5; ++uu) {
            Int t = Int(5) * uu;
            Int v = eval_int(prod, t) % mod;
            if (v == 0) brute.push_back(t % mod);
        }
        REQUIRE(brute.size() == 5 * roots.size());
        for (auto& r : roots) {
            REQUIRE(r.certified_simple);
            Int lift = r.t.is_zero() ? Int(0) : r.t.lift() % mod;
            REQUIRE(std::find(brute.begin(), brute.end(), lift) != brute.end());
        }
        // and every brute hit sits in the p^5-ball of an emitted root
        for (auto& t : brute) {
            bool covered = false;
            for (auto& r : roots) {
                Int lift = r.t.is_zero() ? Int(0) : r.t.lift();
                Int diff = t - lift;
                if (mpz_divisible_p(diff.get_mpz_t(), pow_p(5, 5).get_mpz_t())) covered = true;
            }
            REQUIRE(covered);
        }
    }
}

TEST_CASE("roots: soundness on random truncations", "[roots][property]") {
    std::mt19937 rng(2718);
    long p = 3;
    int target = 5;
    int found_any = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<long> coeff(-40, 40);
        std::vector<long> cs(9);
        bool all_div = true;
        for (auto& x : cs) {
            x = coeff(rng);
            if (x % p) all_div = false;
        }
        if (all_div) continue;
        auto f = poly_series(cs, p, 14, 12);
        std::vector<DiskRoot> roots;
        try {
            roots = series_roots_in_disk(f, 1, target);
        } catch (const precision_error&) {
            continue;
        }
        Int mod = pow_p(p, target);
        // solver hits are brute hits
        for (auto& r : roots) {
            Int lift = r.t.is_zero() ? Int(0) : r.t.lift() % mod;
            REQUIRE(eval_int(cs, lift) % mod == 0);
            ++found_any;
        }
        // brute hits land near solver output (coarse: agreement mod p)
        for (long uu = 0; uu < 81; ++uu) {
            Int t = Int(3) * uu;
            if (eval_int(cs, t) % mod != 0) continue;
            bool covered = false;
            for (auto& r : roots) {
                Int lift = r.t.is_zero() ? Int(0) : r.t.lift();
                Int diff = t - lift;
                if (mpz_divisible_ui_p(diff.get_mpz_t(), p)) covered = true;
            }
            REQUIRE(covered);
        }
    }
    REQUIRE(found_any > 0);
}
