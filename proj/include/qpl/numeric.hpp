#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpl/errors.hpp"

namespace qpl::numeric {

using Complex = std::complex<double>;

struct NumericOptions {
    double tail_eps = 1e-12;    // tail threshold for infinite sums/products
    double denom_floor = 1e-3;  // magnitude floor for denominator factors
    int streak = 5;             // consecutive small terms required to stop
    long max_terms = 100000;
    double max_q_mag = 0.9;     // convergence headroom for |q|
};

// q^k for integer k, exact 1 at k = 0.
inline Complex qpow(Complex q, long k) {
    if (k == 0) return {1.0, 0.0};
    const bool neg = k < 0;
    unsigned long long e = neg ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Complex base = q, acc{1.0, 0.0};
    while (e) {
        if (e & 1ULL) acc *= base;
        base *= base;
        e >>= 1ULL;
    }
    return neg ? 1.0 / acc : acc;
}

inline void guard_denominator(Complex factor, const NumericOptions& opts, const char* what) {
    if (std::abs(factor) < opts.denom_floor)
        throw DegenerateDenominator(std::string(what) + ": |factor| = " +
                                    std::to_string(std::abs(factor)) + " below floor");
}

// Finite product prod_{k=0}^{n-1} (1 - a q^k).
inline Complex pochhammer_num(Complex a, Complex q, long n) {
    Complex acc{1.0, 0.0}, qk{1.0, 0.0};
    for (long k = 0; k < n; ++k) {
        acc *= (1.0 - a * qk);
        qk *= q;
    }
    return acc;
}

// Same, with every factor treated as a denominator (guarded).
inline Complex pochhammer_num_checked(Complex a, Complex q, long n, const NumericOptions& opts) {
    Complex acc{1.0, 0.0}, qk{1.0, 0.0};
    for (long k = 0; k < n; ++k) {
        const Complex f = 1.0 - a * qk;
        guard_denominator(f, opts, "pochhammer factor");
        acc *= f;
        qk *= q;
    }
    return acc;
}

// Infinite product (a;q)_inf.  Factors are cut once |a q^k| < tail_eps; the
// neglected factors multiply the result by 1 + O(tail_eps / (1 - |q|)).
inline Complex pochhammer_num_inf(Complex a, Complex q, const NumericOptions& opts = {},
                                  bool checked = false) {
    if (std::abs(q) > opts.max_q_mag)
        throw NonConvergent("pochhammer_num_inf: |q| > " + std::to_string(opts.max_q_mag));
    Complex acc{1.0, 0.0}, aqk = a;
    for (long k = 0; k < opts.max_terms; ++k) {
        if (std::abs(aqk) < opts.tail_eps) return acc;
        const Complex f = 1.0 - aqk;
        if (checked) guard_denominator(f, opts, "infinite pochhammer factor");
        acc *= f;
        aqk *= q;
    }
    throw NonConvergent("pochhammer_num_inf: term cap reached");
}

// Basic hypergeometric series
//   sum_n  (a_0;q)_n ... (a_r;q)_n / ( (q;q)_n (b_1;q)_n ... (b_s;q)_n ) z^n.
//
// With terminate_after = N the sum runs over exactly n = 0..N (the caller
// asserts a numerator parameter q^-N); otherwise |z| < 1 is required and the
// sum stops after `streak` consecutive terms below tail_eps, leaving a
// geometric tail of order tail_eps / (1 - |z|).
inline Complex phi(const std::vector<Complex>& num_params, const std::vector<Complex>& den_params,
                   Complex q, Complex z, const NumericOptions& opts = {},
                   std::optional<long> terminate_after = std::nullopt) {
    if (std::abs(q) > opts.max_q_mag)
        throw NonConvergent("phi: |q| > " + std::to_string(opts.max_q_mag));
    if (!terminate_after && std::abs(z) >= 1.0)
        throw NonConvergent("phi: |z| >= 1 and no terminating parameter given");
    if (terminate_after && *terminate_after < 0)
        throw std::invalid_argument("phi: terminate_after must be >= 0");

    Complex sum{0.0, 0.0}, term{1.0, 0.0}, qn{1.0, 0.0};
    int quiet = 0;
    for (long n = 0;; ++n) {
        sum += term;
        if (terminate_after) {
            if (n == *terminate_after) break;
        } else {
            if (term == Complex{0.0, 0.0}) break;  // a numerator factor vanished
            const double scale = std::max(1.0, std::abs(sum));
            if (std::abs(term) < opts.tail_eps * scale) {
                if (++quiet >= opts.streak) break;
            } else {
                quiet = 0;
            }
        }
        if (n >= opts.max_terms) throw NonConvergent("phi: term cap reached");

        Complex ratio{1.0, 0.0};
        for (Complex a : num_params) ratio *= (1.0 - a * qn);
        const Complex fq = 1.0 - qn * q;
        guard_denominator(fq, opts, "phi (q;q) factor");
        ratio /= fq;
        for (Complex b : den_params) {
            const Complex fb = 1.0 - b * qn;
            guard_denominator(fb, opts, "phi denominator factor");
            ratio /= fb;
        }
        term *= ratio * z;
        qn *= q;
    }
    return sum;
}

inline double relative_error(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

// Terminating Chu-Vandermonde sum:
//   2phi1(a, q^-n; c; q, c q^n / a)  vs  (c/a;q)_n / (c;q)_n.
// Returns the relative deviation of the two sides.
inline double check_chu_vandermonde(Complex a, Complex c, Complex q, long n,
                                    const NumericOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("check_chu_vandermonde: n must be >= 0");
    guard_denominator(a, opts, "chu parameter a");
    const Complex z = c * qpow(q, n) / a;
    const Complex lhs = phi({a, qpow(q, -n)}, {c}, q, z, opts, n);
    const Complex rhs = pochhammer_num(c / a, q, n) / pochhammer_num_checked(c, q, n, opts);
    return relative_error(lhs, rhs);
}

// Three-term transformation of 3phi2 series:
//   3phi2(a,b,c; d,e; q, de/abc)
//     = (e/a;q)_inf (de/bc;q)_inf / ( (e;q)_inf (de/abc;q)_inf )
//       * 3phi2(a, d/b, d/c; d, de/bc; q, e/a).
// Returns the relative deviation of the two sides.
inline double check_ktw(Complex a, Complex b, Complex c, Complex d, Complex e, Complex q,
                        const NumericOptions& opts = {}) {
    guard_denominator(a * b * c, opts, "ktw abc");
    guard_denominator(b * c, opts, "ktw bc");
    const Complex z1 = d * e / (a * b * c);
    const Complex z2 = e / a;
    if (std::abs(z1) >= 1.0) throw NonConvergent("check_ktw: |de/abc| >= 1");
    if (std::abs(z2) >= 1.0) throw NonConvergent("check_ktw: |e/a| >= 1");

    const Complex lhs = phi({a, b, c}, {d, e}, q, z1, opts);
    const Complex prefactor = pochhammer_num_inf(e / a, q, opts) *
                              pochhammer_num_inf(d * e / (b * c), q, opts) /
                              (pochhammer_num_inf(e, q, opts, true) *
                               pochhammer_num_inf(z1, q, opts, true));
    const Complex rhs = prefactor * phi({a, d / b, d / c}, {d, d * e / (b * c)}, q, z2, opts);
    return relative_error(lhs, rhs);
}

// One value per displayed line of the master-identity derivation, evaluated
// independently, plus the deviation across all of them.
struct ChainReport {
    std::array<Complex, 9> values{};
    double max_pairwise_deviation = 0.0;  // max |v_i - v_j| / max(1, max |v_k|)
    // Deviations of the two transformation steps checked at the exact
    // parameters the derivation instantiates (absent when out of domain).
    std::optional<double> ktw_step_error;
    std::optional<double> chu_step_error;
};

// Evaluates the nine lines of the derivation of the master identity:
// (1) the defining sum, (2) its Pochhammer-ratio form, (3) the reindexed
// sum, (4) the prefactored 3phi2, (5) the transformed 3phi2, (6) its
// explicit series, (7) the index-shifted series, (8) the closed expression
// with a terminating 2phi1, (9) the final closed form.
inline ChainReport derivation_chain(Complex alpha, Complex beta, Complex q, long t,
                                    const NumericOptions& opts = {}) {
    if (t < 1) throw std::invalid_argument("derivation_chain: t must be >= 1");
    if (std::abs(q) > 0.6) throw NonConvergent("derivation_chain: requires |q| <= 0.6");
    guard_denominator(beta, opts, "chain beta");
    guard_denominator(beta * q - alpha, opts, "chain beta*q - alpha");

    ChainReport report;
    auto poch = [&](Complex a, long n) { return pochhammer_num(a, q, n); };
    auto poch_den = [&](Complex a, long n) { return pochhammer_num_checked(a, q, n, opts); };

    // Shared tail-summation for the three explicit sums over r.
    auto sum_terms = [&](auto&& term_fn, long r0) {
        Complex sum{0.0, 0.0};
        int quiet = 0;
        for (long r = r0; r - r0 < opts.max_terms; ++r) {
            const Complex term = term_fn(r);
            sum += term;
            const double scale = std::max(1.0, std::abs(sum));
            if (std::abs(term) < opts.tail_eps * scale) {
                if (++quiet >= opts.streak) return sum;
            } else {
                quiet = 0;
            }
        }
        throw NonConvergent("derivation_chain: series cap reached");
    };

    // (1) defining sum
    report.values[0] = sum_terms(
        [&](long r) {
            Complex num{1.0, 0.0};
            for (long j = 0; j + 2 <= t; ++j) num *= (1.0 - alpha * qpow(q, r + j));
            Complex den{1.0, 0.0};
            for (long j = 0; j <= t; ++j) {
                const Complex f = 1.0 - beta * qpow(q, r + j);
                guard_denominator(f, opts, "chain line 1 factor");
                den *= f;
            }
            return num / den * qpow(q, r);
        },
        1);

    // (2) Pochhammer-ratio form
    report.values[1] = sum_terms(
        [&](long r) {
            return poch(alpha, r + t - 1) * poch(beta, r) /
                   (poch_den(alpha, r) * poch_den(beta, r + t + 1)) * qpow(q, r);
        },
        1);

    // (3) reindexed from r = 0
    report.values[2] = sum_terms(
        [&](long r) {
            return poch(alpha, r + t) * poch(beta, r + 1) /
                   (poch_den(alpha, r + 1) * poch_den(beta, r + t + 2)) * qpow(q, r + 1);
        },
        0);

    // (4) prefactored 3phi2 at argument q
    const Complex pre4 = q * poch(alpha * q, t - 1) / poch_den(beta * q, t + 1);
    report.values[3] =
        pre4 * phi({q, beta * q, alpha * qpow(q, t)}, {alpha * q, beta * qpow(q, t + 2)}, q, q, opts);

    // (5) after the three-term transformation; q^(1-t) terminates the series
    const Complex pre5 = pre4 * pochhammer_num_inf(beta * qpow(q, t + 1), q, opts) *
                         pochhammer_num_inf(q * q, q, opts) /
                         (pochhammer_num_inf(beta * qpow(q, t + 2), q, opts, true) *
                          pochhammer_num_inf(q, q, opts, true));
    report.values[4] = pre5 * phi({q, alpha / beta, qpow(q, 1 - t)}, {alpha * q, q * q}, q,
                                  beta * qpow(q, t + 1), opts, t - 1);

    // (6) the transformed series written out
    const Complex pre6 = q * poch(alpha * q, t - 1) / ((1.0 - q) * poch_den(beta * q, t));
    {
        const Complex w = beta * qpow(q, t + 1);
        Complex sum{0.0, 0.0}, wr{1.0, 0.0};
        for (long r = 0; r <= t - 1; ++r) {
            sum += poch(alpha / beta, r) * poch(qpow(q, 1 - t), r) /
                   (poch_den(alpha * q, r) * poch_den(q * q, r)) * wr;
            wr *= w;
        }
        report.values[5] = pre6 * sum;
    }

    // (7) index-shifted series
    {
        const Complex ratio_a = alpha / (beta * q);
        guard_denominator(1.0 - ratio_a, opts, "chain line 7 (1 - alpha/(beta q))");
        const Complex w = beta * qpow(q, t + 1);
        const Complex shift_pre =
            (1.0 - alpha) * (1.0 - q) / (w * (1.0 - ratio_a) * (1.0 - qpow(q, -t)));
        Complex sum{0.0, 0.0}, wr = w;
        for (long r = 0; r <= t - 1; ++r) {
            sum += poch(ratio_a, r + 1) * poch(qpow(q, -t), r + 1) /
                   (poch_den(alpha, r + 1) * poch_den(q, r + 1)) * wr;
            wr *= w;
        }
        report.values[6] = pre6 * shift_pre * sum;
    }

    // (8) closed expression with the terminating 2phi1
    const Complex ratio = poch(alpha, t) / poch_den(beta * q, t);
    report.values[7] = q / ((beta * q - alpha) * (qpow(q, t) - 1.0)) * ratio *
                       (phi({alpha / (beta * q), qpow(q, -t)}, {alpha}, q,
                            beta * qpow(q, t + 1), opts, t) -
                        1.0);

    // (9) the final closed form
    report.values[8] = q / ((beta * q - alpha) * (1.0 - qpow(q, t))) * (ratio - 1.0);

    double vmax = 1.0;
    for (const auto& v : report.values) vmax = std::max(vmax, std::abs(v));
    for (std::size_t i = 0; i < report.values.size(); ++i)
        for (std::size_t j = i + 1; j < report.values.size(); ++j)
            report.max_pairwise_deviation = std::max(
                report.max_pairwise_deviation, std::abs(report.values[i] - report.values[j]) / vmax);

    // Cross-check the two annotated transformation steps at the exact
    // parameters the derivation uses.
    try {
        report.ktw_step_error = check_ktw(q, beta * q, alpha * qpow(q, t), alpha * q,
                                          beta * qpow(q, t + 2), q, opts);
    } catch (const Error&) {
        report.ktw_step_error = std::nullopt;
    }
    try {
        if (std::abs(alpha) >= opts.denom_floor)
            report.chu_step_error = check_chu_vandermonde(alpha / (beta * q), alpha, q, t, opts);
    } catch (const Error&) {
        report.chu_step_error = std::nullopt;
    }
    return report;
}

// ----------------------------------------------------------------------
// Seeded trial harnesses.  Per-sample generator state is derived from the
// master seed with a splitmix step, so sample i is the same no matter how
// many samples run or in what order.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    long uniform_int(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex annulus(double rmin, double rmax) {
        const double r = std::sqrt(u01() * (rmax * rmax - rmin * rmin) + rmin * rmin);
        const double phi_angle = 2.0 * 3.14159265358979323846 * u01();
        return {r * std::cos(phi_angle), r * std::sin(phi_angle)};
    }

private:
    std::mt19937_64 eng_;
};

struct TrialSummary {
    std::string check_id;
    int trials = 0;
    int rejected = 0;       // redraws forced by guards / preconditions
    double max_error = 0.0;
    std::string worst;      // parameters of the worst sample
    double max_step_error = 0.0;            // chain only: annotated-step cross-checks
    std::optional<ChainReport> single;      // populated when trials == 1

    bool passed(double tol) const { return max_error < tol; }
};

// Cap on redraws for a single sample; rejections are counted, never silent.
inline constexpr int kRejectionCap = 1000;

namespace detail {

inline std::string complex_str(Complex v) {
    std::ostringstream os;
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

[[noreturn]] inline void rejection_overflow(const char* who) {
    throw Error(std::string(who) + ": rejection cap (" + std::to_string(kRejectionCap) +
                ") exceeded while sampling");
}

}  // namespace detail

inline TrialSummary run_chu_trials(int trials, std::uint64_t seed, const NumericOptions& opts = {}) {
    if (trials < 1) throw std::invalid_argument("run_chu_trials: trials must be >= 1");
    TrialSummary summary;
    summary.check_id = "chu";
    summary.trials = trials;
    for (int i = 0; i < trials; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kRejectionCap) detail::rejection_overflow("run_chu_trials");
            SampleRng rng(splitmix64(seed ^ (static_cast<std::uint64_t>(i) << 20 | static_cast<std::uint64_t>(attempt))));
            const Complex q = rng.annulus(0.1, 0.6);
            const Complex a = rng.annulus(0.1, 1.2);
            const Complex c = rng.annulus(0.1, 1.2);
            const long n = rng.uniform_int(0, 8);
            try {
                const double err = check_chu_vandermonde(a, c, q, n, opts);
                if (err > summary.max_error) {
                    summary.max_error = err;
                    summary.worst = "sample " + std::to_string(i) + ": a=" + detail::complex_str(a) +
                                    " c=" + detail::complex_str(c) + " q=" + detail::complex_str(q) +
                                    " n=" + std::to_string(n);
                }
                break;
            } catch (const DegenerateDenominator&) {
                ++summary.rejected;
            }
        }
    }
    return summary;
}

inline TrialSummary run_ktw_trials(int trials, std::uint64_t seed, const NumericOptions& opts = {}) {
    if (trials < 1) throw std::invalid_argument("run_ktw_trials: trials must be >= 1");
    TrialSummary summary;
    summary.check_id = "ktw";
    summary.trials = trials;
    for (int i = 0; i < trials; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kRejectionCap) detail::rejection_overflow("run_ktw_trials");
            SampleRng rng(splitmix64(seed ^ (static_cast<std::uint64_t>(i) << 20 | static_cast<std::uint64_t>(attempt))));
            const Complex q = rng.annulus(0.1, 0.6);
            const Complex a = rng.annulus(0.15, 1.1);
            const Complex b = rng.annulus(0.15, 1.1);
            const Complex c = rng.annulus(0.15, 1.1);
            const Complex d = rng.annulus(0.15, 1.1);
            const Complex e = rng.annulus(0.15, 1.1);
            if (std::abs(d * e / (a * b * c)) > 0.8 || std::abs(e / a) > 0.8) {
                ++summary.rejected;
                continue;
            }
            try {
                const double err = check_ktw(a, b, c, d, e, q, opts);
                if (err > summary.max_error) {
                    summary.max_error = err;
                    summary.worst = "sample " + std::to_string(i) + ": a=" + detail::complex_str(a) +
                                    " b=" + detail::complex_str(b) + " c=" + detail::complex_str(c) +
                                    " d=" + detail::complex_str(d) + " e=" + detail::complex_str(e) +
                                    " q=" + detail::complex_str(q);
                }
                break;
            } catch (const DegenerateDenominator&) {
                ++summary.rejected;
            } catch (const NonConvergent&) {
                ++summary.rejected;
            }
        }
    }
    return summary;
}

inline TrialSummary run_chain_trials(int trials, std::uint64_t seed, const NumericOptions& opts = {},
                                     long t_max = 6) {
    if (trials < 1) throw std::invalid_argument("run_chain_trials: trials must be >= 1");
    TrialSummary summary;
    summary.check_id = "chain";
    summary.trials = trials;
    for (int i = 0; i < trials; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kRejectionCap) detail::rejection_overflow("run_chain_trials");
            SampleRng rng(splitmix64(seed ^ (static_cast<std::uint64_t>(i) << 20 | static_cast<std::uint64_t>(attempt))));
            const Complex q = rng.annulus(0.1, 0.6);
            const Complex alpha = rng.annulus(0.0, 1.2);
            const Complex beta = rng.annulus(0.1, 1.2);
            const long t = rng.uniform_int(1, t_max);
            try {
                const ChainReport report = derivation_chain(alpha, beta, q, t, opts);
                if (report.max_pairwise_deviation > summary.max_error) {
                    summary.max_error = report.max_pairwise_deviation;
                    summary.worst = "sample " + std::to_string(i) + ": alpha=" + detail::complex_str(alpha) +
                                    " beta=" + detail::complex_str(beta) + " q=" + detail::complex_str(q) +
                                    " t=" + std::to_string(t);
                }
                if (report.ktw_step_error)
                    summary.max_step_error = std::max(summary.max_step_error, *report.ktw_step_error);
                if (report.chu_step_error)
                    summary.max_step_error = std::max(summary.max_step_error, *report.chu_step_error);
                if (trials == 1) summary.single = report;
                break;
            } catch (const DegenerateDenominator&) {
                ++summary.rejected;
            } catch (const NonConvergent&) {
                ++summary.rejected;
            }
        }
    }
    return summary;
}

}  // namespace qpl::numeric
