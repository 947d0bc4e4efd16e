#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropadic/rational.hpp"

namespace test_support {

using tropadic::IntVec;
using tropadic::Rational;
using tropadic::RatVec;

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

/// Small deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
        const std::int64_t d = integer(1, max_den);
        return Rational(integer(lo * d, hi * d), d);
    }
    IntVec int_vec(std::size_t n, std::int64_t lo, std::int64_t hi) {
        IntVec v(n);
        for (auto& x : v) x = integer(lo, hi);
        return v;
    }
    IntVec nonzero_int_vec(std::size_t n, std::int64_t lo, std::int64_t hi) {
        for (;;) {
            IntVec v = int_vec(n, lo, hi);
            for (auto x : v)
                if (x != 0) return v;
        }
    }
    RatVec rat_vec(std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
        RatVec v(n);
        for (auto& x : v) x = rational(lo, hi, max_den);
        return v;
    }
    bool coin() { return integer(0, 1) == 1; }

private:
    std::mt19937 rng_;
};

/// All rational points (a_1/den, ..., a_n/den) with lo <= a_i/den <= hi.
inline std::vector<RatVec> grid(std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t den) {
    std::vector<RatVec> out;
    std::vector<std::int64_t> idx(n, lo * den);
    if (n == 0) return {RatVec{}};
    for (;;) {
        RatVec p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = Rational(idx[i], den);
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < n && ++idx[i] > hi * den) idx[i++] = lo * den;
        if (i == n) break;
    }
    return out;
}

/// All integer vectors in [-b, b]^n.
inline std::vector<IntVec> int_box(std::size_t n, std::int64_t b) {
    std::vector<IntVec> out;
    for (const auto& p : grid(n, -b, b, 1)) {
        IntVec v;
        for (const auto& x : p) v.push_back(numerator(x).convert_to<std::int64_t>());
        out.push_back(v);
    }
    return out;
}

}  // namespace test_support
