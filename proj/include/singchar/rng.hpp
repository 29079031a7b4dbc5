#pragma once

#include <cstdint>
#include <random>

#include "singchar/vec.hpp"

namespace singchar {

/** Deterministic RNG with a portable uint64 -> double mapping.
    std::uniform_real_distribution is implementation-defined; this is not. */
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /** Uniform in [0, 1). */
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double uniformIn(double a, double b) { return a + (b - a) * uniform(); }

    Vec point(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = uniform();
        return v;
    }
    Vec vector(int dim, double a, double b) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = uniformIn(a, b);
        return v;
    }
    uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace singchar
