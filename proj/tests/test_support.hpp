#pragma once

// Shared test utilities: a dense brute-force polynomial multiplier (the
// oracle for the exact scalar ring), seeded random generators for scalars,
// words and elements, and a randomized-strategy normalizer that serves as an
// independent oracle for the deterministic one on confluent rule sets.

#include "glpq/rewrite.hpp"

#include <random>

namespace glpq::test {

// Dense two-variable Laurent multiplier over a fixed exponent window;
// deliberately naive and independent of Scalar's sparse representation.
struct DensePoly {
    static constexpr int kOff = 16, kDim = 33;
    std::vector<Rational> c;  // c[(i+kOff)*kDim + (j+kOff)]
    DensePoly() : c(kDim * kDim, Rational(0)) {}

    static DensePoly from(const Scalar& s) {
        DensePoly d;
        for (const auto& [e, coeff] : s.terms()) d.c[(e.p + kOff) * kDim + (e.q + kOff)] = coeff;
        return d;
    }
    DensePoly times(const DensePoly& o) const {
        DensePoly r;
        for (int i1 = 0; i1 < kDim; ++i1)
            for (int j1 = 0; j1 < kDim; ++j1) {
                if (c[i1 * kDim + j1] == 0) continue;
                for (int i2 = 0; i2 < kDim; ++i2)
                    for (int j2 = 0; j2 < kDim; ++j2) {
                        if (o.c[i2 * kDim + j2] == 0) continue;
                        int i = i1 + i2 - kOff, j = j1 + j2 - kOff;
                        r.c[i * kDim + j] += c[i1 * kDim + j1] * o.c[i2 * kDim + j2];
                    }
            }
        return r;
    }
    Scalar to_scalar() const {
        Scalar s;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                if (c[i * kDim + j] != 0)
                    s += Scalar::monomial(c[i * kDim + j], i - kOff, j - kOff);
        return s;
    }
};

inline Scalar oracle_mul(const Scalar& a, const Scalar& b) {
    return DensePoly::from(a).times(DensePoly::from(b)).to_scalar();
}

// ---------------------------------------------------------------------------
// seeded random data

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int pick(int lo, int hi) {  // inclusive
        return static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo;
    }
};

inline Scalar random_scalar(Rng& rng, int max_terms = 4) {
    Scalar s;
    int terms = rng.pick(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        int num = rng.pick(-4, 4);
        if (num == 0) num = 1;
        int den = rng.pick(1, 3);
        s += Scalar::monomial(Rational(num, den), rng.pick(-3, 3), rng.pick(-3, 3));
    }
    return s;
}

inline Scalar random_nonzero_scalar(Rng& rng, int max_terms = 4) {
    for (;;) {
        Scalar s = random_scalar(rng, max_terms);
        if (!s.is_zero()) return s;
    }
}

inline Word random_word(Rng& rng, const std::vector<Gen>& alphabet, int max_len = 5) {
    Word w;
    int len = rng.pick(0, max_len);
    for (int i = 0; i < len; ++i) w.push_back(alphabet[rng.pick(0, (int)alphabet.size() - 1)]);
    return w;
}

inline Element random_element(Rng& rng, const std::vector<Gen>& alphabet, int max_terms = 3,
                              int max_len = 5) {
    Element e;
    int terms = rng.pick(0, max_terms);
    for (int t = 0; t < terms; ++t)
        e.add(random_word(rng, alphabet, max_len), random_nonzero_scalar(rng));
    return e;
}

// ---------------------------------------------------------------------------
// randomized-strategy normalizer: applies ANY applicable rule, chosen by the
// seeded strategy, until no redex remains. On a confluent rule set this must
// land on the same normal form as the deterministic engine.
inline Element normalize_random_strategy(const Element& e, const RuleSet& rs, Rng& rng,
                                         long step_limit = kDefaultStepLimit) {
    Element out;
    std::vector<std::pair<Word, Scalar>> work(e.terms().begin(), e.terms().end());
    long steps = 0;
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        auto rx = rs.redexes(w);
        if (rx.empty()) {
            out.add(w, c);
            continue;
        }
        if (++steps > step_limit) throw StepLimitExceeded("random strategy exceeded step limit");
        auto [pos, rule] = rx[rng.pick(0, (int)rx.size() - 1)];
        Element replaced = rewrite_once(w, pos, *rule, c);
        for (const auto& [nw, nc] : replaced.terms()) work.push_back({nw, nc});
    }
    return out;
}

inline std::vector<Gen> scope_vector(const RuleSet& rs) {
    return std::vector<Gen>(rs.scope().begin(), rs.scope().end());
}

}  // namespace glpq::test
