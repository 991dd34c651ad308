#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qc/reduction.hpp"

using namespace qc;

namespace {

WeierstrassModel mk(long a1, long a2, long a3, long a4, long a6) {
    return WeierstrassModel(Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6));
}

const WeierstrassModel curve_17a1 = mk(1, -1, 1, -91, -310);
const WeierstrassModel curve_121d3 = mk(0, -1, 1, -40, -221);
const WeierstrassModel curve_8712u5 = mk(0, 0, 0, 726, 9317);
const WeierstrassModel curve_496a1 = mk(0, 0, 0, 1, 1);
const WeierstrassModel curve_248a1 = mk(0, 1, 0, 0, 1);
const WeierstrassModel curve_27a3 = mk(0, 0, 1, 0, -7);
const WeierstrassModel curve_36a3 = mk(0, 0, 0, 0, -27);
const WeierstrassModel curve_36a4 = mk(0, 0, 0, 0, 1);
const WeierstrassModel curve_32a4 = mk(0, 0, 0, 4, 0);

} // namespace

TEST_CASE("Tate on the paper's examples", "[tate]") {
    auto t17 = tate_local(curve_17a1, 17);
    REQUIRE(t17.kodaira.type == KodairaType::In);
    REQUIRE(t17.kodaira.n == 1);
    REQUIRE(t17.kind == ReductionKind::split_mult);
    REQUIRE(t17.tamagawa == 1);

    auto t11 = tate_local(curve_121d3, 11);
    REQUIRE(t11.kodaira.type == KodairaType::Instar);
    REQUIRE(t11.kodaira.n == 1);
    REQUIRE(t11.tamagawa == 2);
    REQUIRE(t11.kind == ReductionKind::additive);

    auto u3 = tate_local(curve_8712u5, 3);
    REQUIRE(u3.kodaira.type == KodairaType::Instar);
    REQUIRE(u3.kodaira.n == 1);
    REQUIRE(u3.tamagawa == 4);
    auto u2 = tate_local(curve_8712u5, 2);
    REQUIRE(u2.kodaira.type == KodairaType::III);
    REQUIRE(u2.tamagawa == 2);
    auto u11 = tate_local(curve_8712u5, 11);
    REQUIRE(u11.kodaira.type == KodairaType::I0star);
    REQUIRE(u11.tamagawa == 2);
}

TEST_CASE("conductors recover the levels of the cited curves", "[tate]") {
    REQUIRE(conductor(curve_17a1) == 17);
    REQUIRE(conductor(curve_121d3) == 121);
    REQUIRE(conductor(curve_8712u5) == 8712);
    REQUIRE(conductor(curve_496a1) == 496);
    REQUIRE(conductor(curve_248a1) == 248);
    REQUIRE(conductor(curve_27a3) == 27);
    REQUIRE(conductor(curve_36a3) == 36);
    REQUIRE(conductor(curve_36a4) == 36);
    REQUIRE(conductor(curve_32a4) == 32);
}

TEST_CASE("synthetic additive types at a generic prime", "[tate]") {
    long q = 13;
    auto t = [&](const WeierstrassModel& m) { return tate_local(m, q); };
    REQUIRE(t(mk(0, 0, 0, 0, 13)).kodaira.type == KodairaType::II);
    REQUIRE(t(mk(0, 0, 0, 13, 0)).kodaira.type == KodairaType::III);
    REQUIRE(t(mk(0, 0, 0, 0, 169)).kodaira.type == KodairaType::IV);
    REQUIRE(t(mk(0, 0, 0, -169, 0)).kodaira.type == KodairaType::I0star);
    REQUIRE(t(mk(0, 0, 0, -169, 0)).tamagawa == 4);  // T^3 - T splits
    REQUIRE(t(mk(0, 0, 0, 0, pow_p(13, 4).get_si())).kodaira.type == KodairaType::IVstar);
    REQUIRE(t(mk(0, 0, 0, pow_p(13, 3).get_si(), 0)).kodaira.type == KodairaType::IIIstar);
    REQUIRE(t(mk(0, 0, 0, 0, pow_p(13, 5).get_si())).kodaira.type == KodairaType::IIstar);
    // non-minimal: q^4 | a4, q^6 | a6
    auto nm = t(mk(0, 0, 0, pow_p(13, 4).get_si(), pow_p(13, 6).get_si()));
    REQUIRE(nm.kodaira.type == KodairaType::Good);
    REQUIRE(nm.vq_delta_min == 0);
    REQUIRE(nm.ord_disc_input == 12);
    REQUIRE(nm.minimal_iso.u == 13);
}

TEST_CASE("multiplicative split and nonsplit", "[tate]") {
    // y^2 = x^3 + c x^2 + q^n: node at origin with tangents T^2 - c
    long q = 5;
    auto split = tate_local(mk(0, 1, 0, 0, 25), q);  // 1 is a QR mod 5
    REQUIRE(split.kodaira.type == KodairaType::In);
    REQUIRE(split.kind == ReductionKind::split_mult);
    REQUIRE(split.tamagawa == split.kodaira.n);
    auto nonsplit = tate_local(mk(0, 2, 0, 0, 25), q);  // 2 is not a QR mod 5
    REQUIRE(nonsplit.kodaira.type == KodairaType::In);
    REQUIRE(nonsplit.kind == ReductionKind::nonsplit_mult);
    REQUIRE(nonsplit.tamagawa == (nonsplit.kodaira.n % 2 == 0 ? 2 : 1));
}

TEST_CASE("tate_local invariant under u=1 integral shifts", "[tate][property]") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> sh(-5, 5);
    for (const auto& m : {curve_17a1, curve_121d3, curve_8712u5, curve_36a4}) {
        for (long q : potential_bad_primes(m)) {
            auto base = tate_local(m, q);
            for (int i = 0; i < 5; ++i) {
                ModelIsomorphism iso(Rat(1), Rat(sh(rng)), Rat(sh(rng)), Rat(sh(rng)));
                auto shifted = transform_model(m, iso);
                auto d = tate_local(shifted, q);
                REQUIRE(d.kodaira.type == base.kodaira.type);
                REQUIRE(d.kodaira.n == base.kodaira.n);
                REQUIRE(d.tamagawa == base.tamagawa);
                REQUIRE(d.kind == base.kind);
                REQUIRE(d.vq_delta_min == base.vq_delta_min);
            }
        }
    }
}

TEST_CASE("global minimal model", "[tate]") {
    // already-minimal reduced model is a fixed point
    auto [m17, iso17] = global_minimal_model(curve_17a1);
    REQUIRE(m17 == curve_17a1);
    REQUIRE(iso17.is_identity());

    // X_0(49) short form minimises to the reduced model with disc -7^3
    WeierstrassModel x049_short = mk(0, 0, 0, -2835, -71442);
    auto [m49, iso49] = global_minimal_model(x049_short);
    REQUIRE(m49.disc == Rat(-343));
    REQUIRE(m49 == mk(1, -1, 0, -2, -1));

    // Kraus-style minimality certificate on a few minimised models
    for (const auto& m : {m49, curve_8712u5, curve_121d3}) {
        for (long q : potential_bad_primes(m)) {
            long vd = ord_q(m.disc, q);
            long vc4 = m.c4 == 0 ? 1000 : ord_q(m.c4, q);
            REQUIRE((vd < 12 || vc4 < 4));
        }
    }
}

TEST_CASE("Table 1 reproduction", "[wsets]") {
    auto mkd = [](KodairaType ty, long n, long c, ReductionKind kind) {
        LocalReductionData d;
        d.q = 7;
        d.kodaira = {ty, n};
        d.tamagawa = c;
        d.kind = kind;
        return d;
    };
    auto lg = [](Rat a) { return HeightValue(7, a); };
    using S = HeightValueSet;
    // I_n split: {-i(n-i)/n log q}
    REQUIRE(wq_bad_set(mkd(KodairaType::In, 2, 2, ReductionKind::split_mult)) ==
            S{lg(Rat(-1, 2))});
    REQUIRE(wq_bad_set(mkd(KodairaType::In, 5, 5, ReductionKind::split_mult)) ==
            S{lg(Rat(-4, 5)), lg(Rat(-6, 5))});
    // I_n nonsplit (tamagawa 2): {-n/4 log q}
    REQUIRE(wq_bad_set(mkd(KodairaType::In, 4, 2, ReductionKind::nonsplit_mult)) ==
            S{lg(Rat(-1))});
    REQUIRE(wq_bad_set(mkd(KodairaType::III, 0, 2, ReductionKind::additive)) == S{lg(Rat(-1, 2))});
    REQUIRE(wq_bad_set(mkd(KodairaType::IV, 0, 3, ReductionKind::additive)) == S{lg(Rat(-2, 3))});
    REQUIRE(wq_bad_set(mkd(KodairaType::I0star, 0, 2, ReductionKind::additive)) == S{lg(Rat(-1))});
    REQUIRE(wq_bad_set(mkd(KodairaType::I0star, 0, 4, ReductionKind::additive)) == S{lg(Rat(-1))});
    REQUIRE(wq_bad_set(mkd(KodairaType::Instar, 3, 2, ReductionKind::additive)) == S{lg(Rat(-1))});
    REQUIRE(wq_bad_set(mkd(KodairaType::Instar, 3, 4, ReductionKind::additive)) ==
            S{lg(Rat(-1)), lg(Rat(-7, 4))});
    REQUIRE(wq_bad_set(mkd(KodairaType::IVstar, 0, 3, ReductionKind::additive)) ==
            S{lg(Rat(-4, 3))});
    REQUIRE(wq_bad_set(mkd(KodairaType::IIIstar, 0, 2, ReductionKind::additive)) ==
            S{lg(Rat(-3, 2))});
}

TEST_CASE("W_q sets and norms on the cited curves", "[wsets]") {
    // tamagawa 1 at q: {0}
    auto w17 = wq_set(curve_17a1, 17);
    REQUIRE(w17 == HeightValueSet{HeightValue::zero()});

    // 121.d3: W = {0, -log 11}
    auto w121 = enumerate_wnorms(curve_121d3, 5);
    REQUIRE(w121 == HeightValueSet{HeightValue::zero(), HeightValue(11, Rat(-1))});

    // 8712.u5: W_2 = {0, -1/2 log2}, W_3 = {0, -log3, -5/4 log3}, W_11 = {0, -log11}
    REQUIRE(wq_set(curve_8712u5, 2) ==
            HeightValueSet{HeightValue::zero(), HeightValue(2, Rat(-1, 2))});
    REQUIRE(wq_set(curve_8712u5, 3) ==
            HeightValueSet{HeightValue::zero(), HeightValue(3, Rat(-1)), HeightValue(3, Rat(-5, 4))});
    REQUIRE(wq_set(curve_8712u5, 11) ==
            HeightValueSet{HeightValue::zero(), HeightValue(11, Rat(-1))});
    auto wn = enumerate_wnorms(curve_8712u5, 5);
    REQUIRE(wn.size() == 12);

    // misuse: q = p
    REQUIRE_THROWS_AS(enumerate_wnorms(curve_17a1, 17), domain_error);
}

TEST_CASE("embedding of height values separates and is additive", "[wsets]") {
    auto wn = enumerate_wnorms(curve_8712u5, 5);
    std::vector<PadicNumber> vals;
    for (auto& w : wn) vals.push_back(w.embed(5, 12));
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            REQUIRE(dist_valuation(vals[i], vals[j]) < 10);
    // additivity
    HeightValue a(2, Rat(-1, 2)), b(3, Rat(-5, 4));
    auto lhs = (a + b).embed(5, 10);
    auto rhs = a.embed(5, 10) + b.embed(5, 10);
    REQUIRE(congruent(lhs, rhs, 9));
}

TEST_CASE("triviality clauses", "[wsets]") {
    REQUIRE(is_qc_trivial(curve_121d3).trivial);  // #E(F_2) = 1
    REQUIRE(!is_qc_trivial(curve_17a1).trivial);
    REQUIRE(!is_qc_trivial(curve_8712u5).trivial);
    REQUIRE(!is_qc_trivial(curve_36a4).trivial);
}

TEST_CASE("Tate over quadratic completions matches the paper's base-change tables", "[tate][quad]") {
    // 121.d3 over Q(sqrt(-11)) at the ramified prime: split multiplicative I_2
    QuadLocalField F11(11, Int(-11));
    REQUIRE(F11.ram_index() == 2);
    auto d = tate_algorithm(F11, curve_121d3);
    REQUIRE(d.kodaira.type == KodairaType::In);
    REQUIRE(d.kodaira.n == 2);
    REQUIRE(d.kind == ReductionKind::split_mult);

    // 8712.u5 base-changed (Example 4.6's table):
    //   K = Q(sqrt(-11)): 2 inert, type III unchanged; 11 ramified -> good, delta = 11^-6
    {
        QuadLocalField F2(2, Int(-11));
        REQUIRE(F2.kind() == QuadLocalField::Kind::inert);
        auto t2 = tate_algorithm(F2, curve_8712u5);
        REQUIRE(t2.kodaira.type == KodairaType::III);
        REQUIRE(t2.tamagawa == 2);
        QuadLocalField Fr(11, Int(-11));
        auto t11 = tate_algorithm(Fr, curve_8712u5);
        REQUIRE(t11.kodaira.type == KodairaType::Good);
        REQUIRE(t11.ord_disc_input == 12);
        REQUIRE(t11.ord_disc_min == 0);
    }
    //   K = Q(sqrt(-3)): 3 ramified -> nonsplit I_2 (tamagawa 2); 11 inert -> I_0* (tamagawa 4)
    {
        QuadLocalField F3(3, Int(-3));
        auto t3 = tate_algorithm(F3, curve_8712u5);
        REQUIRE(t3.kodaira.type == KodairaType::In);
        REQUIRE(t3.kodaira.n == 2);
        REQUIRE(t3.kind == ReductionKind::nonsplit_mult);
        REQUIRE(t3.tamagawa == 2);
        QuadLocalField F11i(11, Int(-3));
        REQUIRE(F11i.kind() == QuadLocalField::Kind::inert);
        auto t11 = tate_algorithm(F11i, curve_8712u5);
        REQUIRE(t11.kodaira.type == KodairaType::I0star);
        REQUIRE(t11.tamagawa == 4);
    }
    //   K = Q(sqrt(33)): 3 ramified -> nonsplit I_2 (tamagawa 2)
    {
        QuadLocalField F3(3, Int(33));
        auto t3 = tate_algorithm(F3, curve_8712u5);
        REQUIRE(t3.kodaira.type == KodairaType::In);
        REQUIRE(t3.kodaira.n == 2);
        REQUIRE(t3.kind == ReductionKind::nonsplit_mult);
    }
}
