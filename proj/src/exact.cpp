#include "ekr/exact.hpp"

#include <array>

#include "ekr/errors.hpp"

namespace ekr {

namespace {

constexpr unsigned kPascalMax = 64;

// Pascal triangle up to C(64,32); every entry fits a 64-bit word.
std::array<std::array<std::uint64_t, kPascalMax + 1>, kPascalMax + 1> build_pascal() {
    std::array<std::array<std::uint64_t, kPascalMax + 1>, kPascalMax + 1> t{};
    for (unsigned a = 0; a <= kPascalMax; ++a) {
        t[a][0] = 1;
        for (unsigned b = 1; b <= a; ++b)
            t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
}

const auto& pascal() {
    static const auto table = build_pascal();
    return table;
}

}  // namespace

ExactInt binomial(unsigned long a, unsigned long b) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);  // GMP yields 0 for b > a
    return r;
}

std::uint64_t binomial_u64(unsigned a, unsigned b) {
    if (a > kPascalMax) throw RangeError("binomial_u64: a exceeds 64");
    if (b > a) return 0;
    return pascal()[a][b];
}

}  // namespace ekr
