#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qc/padic.hpp"

using namespace qc;

namespace {

Rat random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 120);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("from_rational basics", "[padic]") {
    auto x = PadicNumber::from_rational(Rat(1, 2), 5, 4);
    REQUIRE(x.valuation() == 0);
    REQUIRE(x.precision() == 4);
    // 1/2 = 3 + 2*5 + 2*5^2 + 2*5^3 mod 5^4, verified by 2*x = 1
    REQUIRE(x.unit_digits() == std::vector<long>{3, 2, 2, 2});
    auto two_x = x * PadicNumber::from_int(2, 5, 4);
    REQUIRE(congruent(two_x, PadicNumber::from_int(1, 5, 4), 4));

    auto z = PadicNumber::from_rational(Rat(0), 5, 4);
    REQUIRE(z.is_zero());
    REQUIRE(z.precision() == 4);

    auto w = PadicNumber::from_rational(Rat(25), 5, 6);
    REQUIRE(w.valuation() == 2);
    REQUIRE(w.unit_part() == 1);
    REQUIRE(w.precision() == 6);
}

TEST_CASE("invalid primes rejected", "[padic]") {
    REQUIRE_THROWS_AS(PadicNumber::from_int(1, 4, 3), invalid_prime_error);
    REQUIRE_THROWS_AS(PadicNumber::from_int(1, 2, 3), invalid_prime_error);
    REQUIRE_THROWS_AS(PadicNumber::from_int(3, 7, 2) + PadicNumber::from_int(3, 5, 2),
                      invalid_prime_error);
}

TEST_CASE("precision propagation", "[padic]") {
    auto a = PadicNumber::from_int(7, 5, 6);
    auto b = PadicNumber::from_rational(Rat(2, 5), 5, 3);  // valuation -1
    auto s = a + b;
    REQUIRE(s.precision() == 3);
    auto m = a * b;
    // mul: min(v1+N2, v2+N1) = min(0+3, -1+6) = 3
    REQUIRE(m.precision() == 3);
    auto inv = b.inverse();
    REQUIRE(inv.valuation() == 1);
    REQUIRE(inv.precision() == 3 - 2 * (-1));
    // cancellation raises valuation and can flush to an exact-looking zero
    auto c = PadicNumber::from_int(1, 5, 4) - PadicNumber::from_int(1 + 625, 5, 4);
    REQUIRE(c.is_zero());
    REQUIRE(c.precision() == 4);
    auto d = PadicNumber::from_int(1, 5, 4) - PadicNumber::from_int(1 + 125, 5, 4);
    REQUIRE(!d.is_zero());
    REQUIRE(d.valuation() == 3);
}

TEST_CASE("product homomorphism on random rationals", "[padic][property]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = random_rational(rng);
        Rat b = random_rational(rng);
        if (a == 0 || b == 0) continue;
        int n = 1 + (trial % 10);
        auto pa = PadicNumber::from_rational(a, 7, n);
        auto pb = PadicNumber::from_rational(b, 7, n);
        auto prod = pa * pb;
        if (prod.precision() < 1) continue;
        auto direct = PadicNumber::from_rational(a * b, 7, prod.precision());
        REQUIRE(congruent(prod, direct, prod.precision()));
    }
}

TEST_CASE("recomputing at higher precision truncates bit-for-bit", "[padic][property]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Rat a = random_rational(rng);
        Rat b = random_rational(rng);
        if (a == 0 || b == 0 || a + b == 0) continue;
        auto lo = PadicNumber::from_rational(a, 11, 5) * PadicNumber::from_rational(b, 11, 5) +
                  PadicNumber::from_rational(a + b, 11, 5);
        auto hi = PadicNumber::from_rational(a, 11, 9) * PadicNumber::from_rational(b, 11, 9) +
                  PadicNumber::from_rational(a + b, 11, 9);
        auto cut = hi.truncate(lo.precision());
        REQUIRE(cut.is_zero() == lo.is_zero());
        if (!lo.is_zero()) {
            REQUIRE(cut.valuation() == lo.valuation());
            REQUIRE(cut.unit_part() == lo.unit_part());
        }
    }
}

TEST_CASE("padic_log branch and additivity", "[padic]") {
    long p = 5;
    REQUIRE(padic_log(PadicNumber::from_int(1, p, 6)).is_zero());
    REQUIRE(padic_log(PadicNumber::from_int(p, p, 6)).is_zero());
    REQUIRE(padic_log(PadicNumber::from_int(-1, p, 6)).is_zero());
    REQUIRE_THROWS_AS(padic_log(PadicNumber::zero(p, 6)), domain_error);

    // exp-check: exp(log<6>) recovers the 1-unit part of 6^(p-1)
    auto x = PadicNumber::from_int(6, p, 6);
    auto lg = padic_log(x);
    auto w = x.pow(p - 1);  // <x>^(p-1) = principal unit
    auto back = padic_exp(lg * PadicNumber::from_int(p - 1, p, 8));
    REQUIRE(congruent(back, w, std::min(back.precision(), 5)));
}

TEST_CASE("log is a homomorphism on units", "[padic][property]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> units(1, 100000);
    long p = 7;
    int checked = 0;
    while (checked < 100) {
        long a = units(rng), b = units(rng);
        if (a % p == 0 || b % p == 0) continue;
        auto la = padic_log(PadicNumber::from_int(a, p, 7));
        auto lb = padic_log(PadicNumber::from_int(b, p, 7));
        auto lab = padic_log(PadicNumber::from_int(Int(a) * b, p, 7));
        int prec = std::min({la.precision(), lb.precision(), lab.precision()});
        REQUIRE(congruent(la + lb, lab, prec));
        ++checked;
    }
}

TEST_CASE("log of p-power times unit ignores the p-part", "[padic]") {
    long p = 5;
    auto a = PadicNumber::from_rational(Rat(6, 25), p, 8);
    auto b = PadicNumber::from_int(6, p, 8);
    auto la = padic_log(a);
    auto lb = padic_log(b);
    REQUIRE(congruent(la, lb, std::min(la.precision(), lb.precision())));
}

TEST_CASE("sqrt via Hensel", "[padic]") {
    auto x = PadicNumber::from_int(6, 5, 8);
    auto r = x.sqrt();
    REQUIRE(r.has_value());
    REQUIRE(congruent((*r) * (*r), x, 8));
    REQUIRE(!PadicNumber::from_int(2, 5, 8).sqrt().has_value());   // 2 is not a QR mod 5
    REQUIRE(!PadicNumber::from_int(5, 5, 8).sqrt().has_value());   // odd valuation
    auto y = PadicNumber::from_rational(Rat(9, 49), 5, 8).sqrt();
    REQUIRE(y.has_value());
    REQUIRE(congruent(*y * *y, PadicNumber::from_rational(Rat(9, 49), 5, 8), 8));
}
