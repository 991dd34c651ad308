#pragma once

#include <mutex>

#include "qc/heightvalue.hpp"
#include "qc/modp.hpp"
#include "qc/tate.hpp"

namespace qc {

struct LocalReductionData {
    long q = 0;
    Kodaira kodaira;
    long tamagawa = 1;
    ReductionKind kind = ReductionKind::good;
    long vq_delta_min = 0;    // ord_q of the minimal discriminant
    long ord_disc_input = 0;  // ord_q of the input model's discriminant
    long conductor_exponent = 0;
    ModelIsomorphism minimal_iso;  // input model -> q-minimal model
};

inline LocalReductionData tate_local(const WeierstrassModel& m, long q) {
    if (q < 2 || !is_prime(q)) throw invalid_prime_error("tate_local: q must be prime");
    BaseLocalField F(q);
    auto d = tate_algorithm(F, m);
    LocalReductionData out;
    out.q = q;
    out.kodaira = d.kodaira;
    out.tamagawa = d.tamagawa;
    out.kind = d.kind;
    out.vq_delta_min = d.ord_disc_min;
    out.ord_disc_input = d.ord_disc_input;
    out.conductor_exponent = d.conductor_exponent;
    out.minimal_iso = ModelIsomorphism(d.iso_u, d.iso_r, d.iso_s, d.iso_t);
    return out;
}

// Bad primes of a (not necessarily minimal) integral model.
inline std::vector<long> potential_bad_primes(const WeierstrassModel& m) {
    Rat d = m.disc;
    Int num = d.get_num() * d.get_den();
    return prime_support(num);
}

// Globally minimal integral model in reduced form, with the isomorphism from
// the input model (Laska-Kraus-Connell via per-prime Tate transforms).
inline std::pair<WeierstrassModel, ModelIsomorphism> global_minimal_model(
    const WeierstrassModel& m_in) {
    WeierstrassModel m = m_in;
    ModelIsomorphism acc;
    // clear denominators
    {
        Int den(1);
        auto lcm_den = [&](const Rat& r, int w) {
            Int d = r.get_den();
            for (auto& [q, e] : factor(d)) {
                long need = (e + w - 1) / w;
                Int have = pow_p(q, ord_q(den, q));
                Int want = pow_p(q, need);
                if (want > have) den *= want / have;
            }
        };
        lcm_den(m.a1, 1);
        lcm_den(m.a2, 2);
        lcm_den(m.a3, 3);
        lcm_den(m.a4, 4);
        lcm_den(m.a6, 6);
        if (den != 1) {
            ModelIsomorphism sc(Rat(1, den), Rat(0), Rat(0), Rat(0));
            m = transform_model(m, sc);
            acc = sc;
        }
    }
    for (long q : potential_bad_primes(m)) {
        auto d = tate_local(m, q);
        if (!d.minimal_iso.is_identity()) {
            m = transform_model(m, d.minimal_iso);
            acc = acc.is_identity() ? d.minimal_iso : ModelIsomorphism::compose(d.minimal_iso, acc);
        }
    }
    // reduced form: a1, a3 in {0,1}, a2 in {-1,0,1}
    {
        Int a1n = m.a1.get_num();
        Rat s = (Rat(mpz_fdiv_ui(a1n.get_mpz_t(), 2)) - m.a1) / 2;
        Rat a2s = m.a2 - s * m.a1 - s * s;
        Int a2n = a2s.get_num();
        long m3 = mpz_fdiv_ui(a2n.get_mpz_t(), 3);
        Rat a2target = m3 == 2 ? Rat(-1) : Rat(m3);
        Rat r = (a2target - a2s) / 3;
        Rat a3r = m.a3 + r * m.a1;
        Int a3n = a3r.get_num() * a3r.get_den();  // integral anyway
        Rat t = (Rat(mpz_fdiv_ui(a3n.get_mpz_t(), 2)) - a3r) / 2;
        ModelIsomorphism red(Rat(1), r, s, t);
        if (!red.is_identity()) {
            m = transform_model(m, red);
            acc = acc.is_identity() ? red : ModelIsomorphism::compose(red, acc);
        }
    }
    if (!m.is_integral()) throw error("global_minimal_model produced non-integral model");
    return {m, acc};
}

inline Int conductor(const WeierstrassModel& m) {
    Int N(1);
    for (long q : potential_bad_primes(m)) {
        auto d = tate_local(m, q);
        N *= pow_p(q, d.conductor_exponent);
    }
    return N;
}

// W_q^bad of Table 1 (values attained by the local height on non-identity
// components), as exact multiples of log q.
inline HeightValueSet wq_bad_set(const LocalReductionData& d) {
    HeightValueSet out;
    long q = d.q;
    switch (d.kodaira.type) {
        case KodairaType::In:
            if (d.kind == ReductionKind::split_mult) {
                for (long i = 1; i <= d.kodaira.n / 2; ++i)
                    out.insert(HeightValue(q, Rat(-i * (d.kodaira.n - i), d.kodaira.n)));
            } else if (d.tamagawa == 2) {
                out.insert(HeightValue(q, Rat(-d.kodaira.n, 4)));
            }
            break;
        case KodairaType::III:
            out.insert(HeightValue(q, Rat(-1, 2)));
            break;
        case KodairaType::IV:
            out.insert(HeightValue(q, Rat(-2, 3)));
            break;
        case KodairaType::I0star:
            out.insert(HeightValue(q, Rat(-1)));
            break;
        case KodairaType::Instar:
            out.insert(HeightValue(q, Rat(-1)));
            if (d.tamagawa == 4)
                out.insert(HeightValue(q, Rat(-(d.kodaira.n + 4), 4)));
            break;
        case KodairaType::IVstar:
            out.insert(HeightValue(q, Rat(-4, 3)));
            break;
        case KodairaType::IIIstar:
            out.insert(HeightValue(q, Rat(-3, 2)));
            break;
        default:
            break;  // Good, II, II*: trivial component group
    }
    return out;
}

// W_q of the level-2 description: {0} when the Tamagawa number is 1,
// otherwise the Table-1 set, with 0 adjoined except for split multiplicative
// reduction at q = 2.
inline HeightValueSet wq_set(const WeierstrassModel& minimal_model, long q) {
    auto d = tate_local(minimal_model, q);
    if (d.vq_delta_min != d.ord_disc_input)
        throw input_error("wq_set: model is not minimal at q");
    HeightValueSet out;
    if (d.tamagawa == 1) {
        out.insert(HeightValue::zero());
        return out;
    }
    out = wq_bad_set(d);
    if (!(q == 2 && d.kind == ReductionKind::split_mult)) out.insert(HeightValue::zero());
    return out;
}

// #E~(F_q) for good q = 2 or 3 (naive count; the general modp helper assumes
// odd p only for its other clients, counting works the same way)
inline long modp_count(const WeierstrassModel& m, long q) {
    long count = 1;
    auto residue = [&](const Rat& r) {
        Int num = r.get_num(), den = r.get_den(), d;
        mpz_invert(d.get_mpz_t(), den.get_mpz_t(), Int(q).get_mpz_t());
        Int v = num * d;
        return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), q));
    };
    long a1 = residue(m.a1), a2 = residue(m.a2), a3 = residue(m.a3), a4 = residue(m.a4),
         a6 = residue(m.a6);
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            long lhs = (y * y + a1 * x * y + a3 * y) % q;
            long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % q;
            if (((lhs - rhs) % q + q) % q == 0) ++count;
        }
    return count;
}

struct TrivialityReason {
    bool trivial = false;
    std::string reason;
};

// Theorem hypotheses that force X(Z_q) to be empty for q in {2,3}.
inline TrivialityReason is_qc_trivial(const WeierstrassModel& minimal_model) {
    for (long q : {2L, 3L}) {
        Rat d = minimal_model.disc;
        bool good = ord_q(d, q) == 0;
        if (good) {
            if (modp_count(minimal_model, q) == 1)
                return {true, "good reduction at " + std::to_string(q) + " with a single point over F_" +
                                  std::to_string(q)};
        }
    }
    {
        Rat d = minimal_model.disc;
        if (ord_q(d, 2L) > 0) {
            auto t2 = tate_local(minimal_model, 2);
            if (t2.kind == ReductionKind::split_mult && t2.kodaira.type == KodairaType::In &&
                t2.kodaira.n == 1)
                return {true, "split multiplicative reduction of type I_1 at 2"};
        }
    }
    return {false, ""};
}

// The set { ||w|| : w in prod_q W_q } over the bad primes of the minimal
// model, excluding p.
inline HeightValueSet enumerate_wnorms(const WeierstrassModel& minimal_model, long p) {
    if (ord_q(minimal_model.disc, p) != 0)
        throw domain_error("enumerate_wnorms: p must be a good prime");
    HeightValueSet acc{HeightValue::zero()};
    for (long q : potential_bad_primes(minimal_model)) {
        if (q == p) continue;
        auto d = tate_local(minimal_model, q);
        if (d.kind == ReductionKind::good) continue;
        acc = minkowski_sum(acc, wq_set(minimal_model, q));
    }
    return acc;
}

} // namespace qc
