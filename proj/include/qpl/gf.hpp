#pragma once

#include <string>
#include <vector>

#include "qpl/errors.hpp"
#include "qpl/monomial.hpp"
#include "qpl/qseries.hpp"

namespace qpl {

namespace detail {

// The factor 1 - m * q^extra as a series literal valid through `order`.
// A factor whose exponent lies beyond the window truncates to 1.
inline QSeries one_minus(const Monomial& m, long extra, long order) {
    QSeries one = QSeries::one(order);
    if (m.c == 0) return one;
    const long e = m.q_pow + extra;
    if (e < 0)
        throw NegativeExponentFactor("product factor would carry q^" + std::to_string(e) +
                                     " (parameter " + m.str() + ")");
    if (e > order) return one;
    return sub(one, QSeries::monomial(ZPoly::monomial(BigInt(m.c), m.z_pow), e, order));
}

}  // namespace detail

// Finite q-shifted factorial with base q^d:
//   prod_{k=0}^{n-1} (1 - a * q^(d*k)), exact through `order`.
inline QSeries pochhammer(const Monomial& a, long d, long n, long order) {
    if (d < 1) throw std::invalid_argument("pochhammer: d must be >= 1");
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    if (order < 0) throw std::invalid_argument("pochhammer: order must be >= 0");
    QSeries acc = QSeries::one(order);
    for (long k = 0; k < n; ++k)
        acc = mul(acc, detail::one_minus(a, d * k, order));
    return acc;
}

// One term of the master sum: the generating function of the counted family
// restricted to smallest part r (in base-q^d units),
//
//   q^(d*r) * prod_{j=0}^{t-2} (1 - alpha q^(d(r+j)))
//           / prod_{j=0}^{t}   (1 - beta  q^(d(r+j)))
//
// exact through `order`, window anchored at q^0.
inline QSeries smallest_part_term(const SumParams& p, long r, long order) {
    p.require_admissible();
    if (r < 1) throw std::invalid_argument("smallest_part_term: r must be >= 1");
    if (order < 0) throw std::invalid_argument("smallest_part_term: order must be >= 0");
    const long shift = p.d * r;
    if (shift > order) return QSeries::zero(order).padded_down_to(0);
    const long sub_order = order - shift;

    QSeries numer = QSeries::one(sub_order);
    for (long j = 0; j + 2 <= p.t; ++j)
        numer = mul(numer, detail::one_minus(p.alpha, p.d * (r + j), sub_order));

    QSeries denom = QSeries::one(sub_order);
    for (long j = 0; j <= p.t; ++j)
        denom = mul(denom, detail::one_minus(p.beta, p.d * (r + j), sub_order));

    return mul(numer, invert_unit(denom, sub_order)).shifted(shift).padded_down_to(0);
}

// The master sum over all smallest parts r >= 1, exact through `order`.
// Term r has lowest exponent d*r, so the summation stops once d*r > order.
inline QSeries master_sum(const SumParams& p, long order) {
    p.require_admissible();
    if (order < 0) throw std::invalid_argument("master_sum: order must be >= 0");
    QSeries acc = QSeries::zero(order).padded_down_to(0);
    for (long r = 1; p.d * r <= order; ++r)
        acc = add(acc, smallest_part_term(p, r, order));
    return acc;
}

// Both sides of the master identity with denominators cleared:
//
//   lhs = (beta q^d - alpha) * (1 - q^(d t)) * master_sum
//   rhs = q^d * ( (alpha; q^d)_t / (beta q^d; q^d)_t  -  1 )
//
// The cleared form stays inside the coefficient ring for every admissible
// monomial parameter pair, including the degenerate alpha = beta q^d case
// where both sides vanish identically.
struct ClearedIdentity {
    QSeries lhs;
    QSeries rhs;
};

inline ClearedIdentity cleared_master_identity(const SumParams& p, long order) {
    p.require_admissible();
    if (order < 0) throw std::invalid_argument("cleared_master_identity: order must be >= 0");
    const long big = order + 2 * p.d * (p.t + 1) + 4;

    ClearedIdentity out;

    // lhs
    QSeries prefactor = sub(p.beta.shifted_q(p.d).to_series(big), p.alpha.to_series(big));
    if (prefactor.empty_window()) {
        out.lhs = QSeries::zero(order).padded_down_to(0);
    } else {
        prefactor = mul(prefactor, sub(QSeries::one(big), QSeries::monomial(ZPoly(1), p.d * p.t, big)));
        const long me = std::min(prefactor.min_exp(), 0L);
        QSeries sum = master_sum(p, order - me);
        out.lhs = mul(prefactor, sum).truncated_to(order).padded_down_to(std::min(0L, prefactor.min_exp()));
    }

    // rhs
    if (order < p.d) {
        out.rhs = QSeries::zero(order).padded_down_to(0);
    } else {
        const long inner = order - p.d;
        QSeries ratio = mul(pochhammer(p.alpha, p.d, p.t, inner),
                            invert_unit(pochhammer(p.beta.shifted_q(p.d), p.d, p.t, inner), inner));
        out.rhs = sub(ratio, QSeries::one(inner)).shifted(p.d).padded_down_to(0);
    }
    return out;
}

// Generating function of partitions whose largest and smallest parts differ
// by at most t:  (1/(1-q^t)) * (1/(q;q)_t - 1).
inline QSeries gf_bounded_diff(long t, long order) {
    if (t < 1) throw std::invalid_argument("gf_bounded_diff: t must be >= 1");
    if (order < 0) throw std::invalid_argument("gf_bounded_diff: order must be >= 0");
    QSeries window = invert_unit(detail::one_minus(Monomial::q_power(t), 0, order), order);
    QSeries inner = sub(invert_unit(pochhammer(Monomial::q_power(1), 1, t, order), order),
                        QSeries::one(order));
    return mul(window, inner);
}

// Overpartition analogue; the coefficient of z^m q^n counts overpartitions
// of n with m overlined parts, part difference at most t, and the largest
// part not overlined when the difference is exactly t:
//   (1/(1-q^t)) * ( (-zq;q)_t / (q;q)_t - 1 ).
inline QSeries gf_overpartition(long t, long order) {
    if (t < 1) throw std::invalid_argument("gf_overpartition: t must be >= 1");
    if (order < 0) throw std::invalid_argument("gf_overpartition: order must be >= 0");
    QSeries window = invert_unit(detail::one_minus(Monomial::q_power(t), 0, order), order);
    QSeries numer = pochhammer(Monomial(-1, 1, 1), 1, t, order);
    QSeries inner = sub(mul(numer, invert_unit(pochhammer(Monomial::q_power(1), 1, t, order), order)),
                        QSeries::one(order));
    return mul(window, inner);
}

// Distinct parts, difference at most t (t >= 0):
//   (1/(1-q^(t+1))) * ( (-q;q)_(t+1) - 1 ).
inline QSeries gf_distinct(long t, long order) {
    if (t < 0) throw std::invalid_argument("gf_distinct: t must be >= 0");
    if (order < 0) throw std::invalid_argument("gf_distinct: order must be >= 0");
    QSeries window = invert_unit(detail::one_minus(Monomial::q_power(t + 1), 0, order), order);
    QSeries inner = sub(pochhammer(Monomial(-1, 0, 1), 1, t + 1, order), QSeries::one(order));
    return mul(window, inner);
}

// Odd parts, difference at most 2t (equivalently at most 2t+1, since all
// parts share parity):  (1/(1-q^(2t))) * ( 1/(q;q^2)_t - 1 ).
inline QSeries gf_odd(long t, long order) {
    if (t < 1) throw std::invalid_argument("gf_odd: t must be >= 1");
    if (order < 0) throw std::invalid_argument("gf_odd: order must be >= 0");
    QSeries window = invert_unit(detail::one_minus(Monomial::q_power(2 * t), 0, order), order);
    QSeries inner = sub(invert_unit(pochhammer(Monomial::q_power(1), 2, t, order), order),
                        QSeries::one(order));
    return mul(window, inner);
}

// The same odd-part generating function assembled from the master sum with
// base q^2 and the q^(-1) prefactor; must agree with gf_odd.
inline QSeries gf_odd_via_master(long t, long order) {
    if (t < 1) throw std::invalid_argument("gf_odd_via_master: t must be >= 1");
    if (order < 0) throw std::invalid_argument("gf_odd_via_master: order must be >= 0");
    SumParams p{Monomial::zero(), Monomial(1, 0, -1), 2, t};
    return master_sum(p, order + 1).shifted(-1);
}

// All admissible monomial parameter combinations exercised by the formal
// identity checks: alpha in {0, +-q^a, -z q^a : 0 <= a <= 2},
// beta in {0, 1, q^-1}, d in {1, 2}, widths t_min..t_max.
inline std::vector<SumParams> master_parameter_grid(long t_min, long t_max) {
    std::vector<Monomial> alphas;
    alphas.push_back(Monomial::zero());
    for (int a = 0; a <= 2; ++a) {
        alphas.emplace_back(1, 0, a);
        alphas.emplace_back(-1, 0, a);
        alphas.emplace_back(-1, 1, a);
    }
    const std::vector<Monomial> betas = {Monomial::zero(), Monomial(1, 0, 0), Monomial(1, 0, -1)};

    std::vector<SumParams> grid;
    for (long t = t_min; t <= t_max; ++t)
        for (long d : {1L, 2L})
            for (const auto& beta : betas)
                for (const auto& alpha : alphas) {
                    SumParams p{alpha, beta, d, t};
                    if (p.admissible()) grid.push_back(p);
                }
    return grid;
}

}  // namespace qpl
