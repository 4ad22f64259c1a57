// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qpl/checks.hpp"
#include "qpl/gf.hpp"
#include "qpl/numeric.hpp"
#include "qpl/oracle.hpp"

#include "support.hpp"

namespace {

int failures = 0;

void run_criterion(const std::string& name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!detail.empty() && detail.rfind("FAIL", 0) == 0) ok = false;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-24s (%6.2f s)  %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fail_text(const qpl::IdentityCheckResult& res) {
    std::ostringstream os;
    os << "FAIL t=" << res.t;
    if (res.mismatch)
        os << " [" << res.mismatch->context << " at " << res.mismatch->where << ": expected "
           << res.mismatch->expected << ", got " << res.mismatch->actual << "]";
    return os.str();
}

}  // namespace

int main() {
    // Bounded part difference: series = cleared identity = enumeration,
    // exact through order 200, counts through n = 60 for t = 1..10.
    run_criterion("bounded-diff-identity", [] {
        for (long t = 1; t <= 10; ++t) {
            auto res = qpl::check_bounded_diff_identity(t, 200, 60);
            if (!res.pass) return fail_text(res);
        }
        return std::string("t = 1..10, order 200, oracle n <= 60");
    });

    // Overpartitions: marker-refined coefficients against enumeration for
    // n <= 40, and the (1+z)-weighted master sum route through order 60.
    run_criterion("overpartition-identity", [] {
        for (long t = 1; t <= 6; ++t) {
            auto res = qpl::check_overpartition_identity(t, 60, 40);
            if (!res.pass) return fail_text(res);
        }
        return std::string("t = 1..6, order 60, oracle n <= 40 (all marker powers)");
    });

    // Distinct parts through order 200, t = 0..10.
    run_criterion("distinct-identity", [] {
        for (long t = 0; t <= 10; ++t) {
            auto res = qpl::check_distinct_identity(t, 200, 60);
            if (!res.pass) return fail_text(res);
        }
        return std::string("t = 0..10, order 200, oracle n <= 60");
    });

    // Odd parts through order 200, t = 1..6, including the parity remark.
    run_criterion("odd-identity", [] {
        for (long t = 1; t <= 6; ++t) {
            auto res = qpl::check_odd_identity(t, 200, 60);
            if (!res.pass) return fail_text(res);
        }
        return std::string("t = 1..6, order 200, oracle n <= 60, bounds 2t = 2t+1");
    });

    // Master identity in cleared form over the full monomial grid at
    // order 100, degenerate alpha = beta q^d combinations included.
    run_criterion("master-identity-grid", [] {
        const auto grid = qpl::master_parameter_grid(1, 6);
        if (grid.size() < 60)
            return std::string("FAIL: parameter grid too small (") + std::to_string(grid.size()) + ")";
        bool has_degenerate = false;
        for (const auto& p : grid) has_degenerate |= p.alpha_equals_beta_qd();
        if (!has_degenerate) return std::string("FAIL: no degenerate alpha = beta q^d case in grid");
        for (long t = 1; t <= 6; ++t) {
            auto res = qpl::check_master_identity(t, 100);
            if (!res.pass) return fail_text(res);
        }
        return std::to_string(grid.size()) + " parameter combinations, order 100";
    });

    // Terminating sum check: 100 seeded instances, n <= 8, |q| <= 0.6.
    run_criterion("lemma-chu", [] {
        auto summary = qpl::numeric::run_chu_trials(100, 0x51A7ED01ULL);
        std::ostringstream os;
        if (summary.max_error >= 1e-10) {
            os << "FAIL max error " << summary.max_error << " at " << summary.worst;
            return os.str();
        }
        os.precision(3);
        os << std::scientific << "max error " << summary.max_error << " (tol 1e-10), rejected "
           << summary.rejected;
        return os.str();
    });

    // Transformation check: 100 seeded accepted instances.
    run_criterion("lemma-ktw", [] {
        auto summary = qpl::numeric::run_ktw_trials(100, 0x51A7ED02ULL);
        std::ostringstream os;
        if (summary.max_error >= 1e-7) {
            os << "FAIL max error " << summary.max_error << " at " << summary.worst;
            return os.str();
        }
        os.precision(3);
        os << std::scientific << "max error " << summary.max_error << " (tol 1e-7), rejected "
           << summary.rejected;
        return os.str();
    });

    // Derivation chain: 100 seeded accepted instances, t <= 6, all nine
    // lines within 1e-8 of one another.
    run_criterion("derivation-chain", [] {
        auto summary = qpl::numeric::run_chain_trials(100, 0x51A7ED03ULL);
        std::ostringstream os;
        if (summary.max_error >= 1e-8) {
            os << "FAIL max pairwise deviation " << summary.max_error << " at " << summary.worst;
            return os.str();
        }
        os.precision(3);
        os << std::scientific << "max deviation " << summary.max_error << " (tol 1e-8), step checks "
           << summary.max_step_error << ", rejected " << summary.rejected;
        return os.str();
    });

    // Series ring discipline fuzzed over 1000 random small series.
    run_criterion("series-ring-properties", [] {
        qpl_test::SeriesGen gen(0xACCE47EDULL);
        for (int trial = 0; trial < 1000; ++trial) {
            qpl::QSeries a = gen.rand_series();
            qpl::QSeries b = gen.rand_series();
            qpl::QSeries c = gen.rand_series();
            if (!(add(a, b) == add(b, a))) return std::string("FAIL: add commutativity");
            if (!(add(add(a, b), c) == add(a, add(b, c)))) return std::string("FAIL: add associativity");
            if (!(mul(a, b) == mul(b, a))) return std::string("FAIL: mul commutativity");
            if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) return std::string("FAIL: mul associativity");
            if (!(mul(a, add(b, c)) == add(mul(a, b), mul(a, c))))
                return std::string("FAIL: distributivity");

            const long d = gen.rint(1, 3);
            if (!(dilate(mul(a, b), d) == mul(dilate(a, d), dilate(b, d))))
                return std::string("FAIL: dilation homomorphism");

            qpl::QSeries u = gen.rand_unit_series();
            if (!(mul(u, invert_unit(u, u.valid_to())) == qpl::QSeries::one(u.valid_to())))
                return std::string("FAIL: inversion round trip");

            qpl::QSeries prod = mul(a, b);
            if (prod.valid_to() !=
                std::min(a.valid_to() + b.min_exp(), b.valid_to() + a.min_exp()))
                return std::string("FAIL: product validity window");
            try {
                (void)prod.coefficient(prod.valid_to() + 1);
                return std::string("FAIL: coefficient beyond valid_to did not throw");
            } catch (const qpl::OutOfValidRange&) {
            }
        }
        return std::string("1000 random series, ring laws + inversion + dilation + windows");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures;
}
