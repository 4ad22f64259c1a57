#pragma once

// Shared helpers for the test suites: seeded random series generation and
// tiny brute-force counters kept independent of the library code they check.

#include <cstdint>
#include <random>
#include <vector>

#include "qpl/qseries.hpp"
#include "qpl/zpoly.hpp"

namespace qpl_test {

class SeriesGen {
public:
    explicit SeriesGen(std::uint64_t seed) : eng_(seed) {}

    long rint(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    qpl::ZPoly rand_zpoly(int max_deg = 2, int cmax = 9) {
        const long deg = rint(-1, max_deg);  // -1 draws the zero polynomial
        qpl::ZPoly p;
        for (long i = 0; i <= deg; ++i)
            p += qpl::ZPoly::monomial(qpl::BigInt(rint(-cmax, cmax)), static_cast<int>(i));
        return p;
    }

    qpl::QSeries rand_series() {
        const long min_exp = rint(-3, 3);
        const long len = rint(0, 6);
        std::vector<qpl::ZPoly> cs;
        for (long i = 0; i < len; ++i) cs.push_back(rand_zpoly());
        return qpl::QSeries::from_coeffs(min_exp, std::move(cs));
    }

    // Power series with constant term +-1 (invertible).
    qpl::QSeries rand_unit_series() {
        const long len = rint(1, 7);
        std::vector<qpl::ZPoly> cs;
        cs.emplace_back(rint(0, 1) == 0 ? 1 : -1);
        for (long i = 1; i < len; ++i) cs.push_back(rand_zpoly());
        return qpl::QSeries::from_coeffs(0, std::move(cs));
    }

private:
    std::mt19937_64 eng_;
};

// Partitions of n into parts drawn from the given values (multiplicities
// free), counted by direct recursion.
inline long long count_partitions_with_parts(int n, const std::vector<int>& values,
                                             std::size_t idx = 0) {
    if (n == 0) return 1;
    if (idx == values.size()) return 0;
    long long total = 0;
    for (int taken = 0; taken <= n; taken += values[idx])
        total += count_partitions_with_parts(n - taken, values, idx + 1);
    return total;
}

}  // namespace qpl_test
