#pragma once

#include <optional>
#include <string>

#include "qpl/gf.hpp"
#include "qpl/oracle.hpp"
#include "qpl/qseries.hpp"

namespace qpl {

struct CoeffMismatch {
    std::string context;   // which sub-equation disagreed
    std::string where;     // exponent (and marker power / n) description
    std::string expected;
    std::string actual;
};

// First exponent in (-inf, through] where the two series disagree.
// Both series must certify at least `through`.
inline std::optional<long> first_disagreement(const QSeries& a, const QSeries& b, long through) {
    if (a.valid_to() < through || b.valid_to() < through)
        throw std::invalid_argument("first_disagreement: series not valid through requested order");
    const long lo = std::min(a.min_exp(), b.min_exp());
    for (long n = lo; n <= through; ++n)
        if (a.coefficient_or_zero(n) != b.coefficient_or_zero(n)) return n;
    return std::nullopt;
}

struct IdentityCheckResult {
    std::string identity;
    long t = 0;
    long order = 0;
    long oracle_max = 0;
    bool pass = true;
    std::optional<CoeffMismatch> mismatch;
};

namespace detail {

inline bool record_series_mismatch(IdentityCheckResult& res, const std::string& context,
                                   const QSeries& actual, const QSeries& expected, long through) {
    auto bad = first_disagreement(actual, expected, through);
    if (!bad) return false;
    res.pass = false;
    res.mismatch = CoeffMismatch{context, "q^" + std::to_string(*bad),
                                 expected.coefficient_or_zero(*bad).str(),
                                 actual.coefficient_or_zero(*bad).str()};
    return true;
}

inline bool record_count_mismatch(IdentityCheckResult& res, const std::string& context, int n,
                                  const ZPoly& actual, const ZPoly& expected) {
    if (actual == expected) return false;
    res.pass = false;
    res.mismatch = CoeffMismatch{context, "n=" + std::to_string(n), expected.str(), actual.str()};
    return true;
}

}  // namespace detail

// Bounded part difference: closed form vs master sum (directly and in the
// cleared identity) vs enumeration.
inline IdentityCheckResult check_bounded_diff_identity(long t, long order, int oracle_max,
                                                       int budget = oracle::kDefaultBudget) {
    IdentityCheckResult res{"bk", t, order, oracle_max, true, std::nullopt};
    SumParams p{Monomial::zero(), Monomial(1, 0, 0), 1, t};

    auto sides = cleared_master_identity(p, order);
    if (detail::record_series_mismatch(res, "cleared identity lhs vs rhs", sides.lhs, sides.rhs, order))
        return res;

    QSeries gf = gf_bounded_diff(t, order);
    QSeries cleared_gf = mul(mul(Monomial::q_power(1).to_series(order + 1),
                                 detail::one_minus(Monomial::q_power(t), 0, order + 1)),
                             gf);
    if (detail::record_series_mismatch(res, "q(1-q^t)*gf vs cleared lhs",
                                       cleared_gf.truncated_to(order), sides.lhs, order))
        return res;

    if (detail::record_series_mismatch(res, "gf vs master sum", gf, master_sum(p, order), order))
        return res;

    for (int n = 1; n <= oracle_max; ++n)
        if (detail::record_count_mismatch(res, "gf vs enumeration", n, gf.coefficient(n),
                                          ZPoly(oracle::count_bounded_diff(n, static_cast<int>(t), budget))))
            return res;
    return res;
}

// Overpartitions: (1+z) * master sum at alpha = -zq vs closed form, the
// cleared identity, and the stratified enumeration (all marker powers).
inline IdentityCheckResult check_overpartition_identity(long t, long order, int oracle_max,
                                                        int budget = oracle::kDefaultBudget) {
    IdentityCheckResult res{"cy", t, order, oracle_max, true, std::nullopt};
    SumParams p{Monomial(-1, 1, 1), Monomial(1, 0, 0), 1, t};

    auto sides = cleared_master_identity(p, order);
    if (detail::record_series_mismatch(res, "cleared identity lhs vs rhs", sides.lhs, sides.rhs, order))
        return res;

    QSeries gf = gf_overpartition(t, order);
    QSeries via_sum = mul(QSeries::polynomial(0, {ZPoly{1, 1}}, order), master_sum(p, order));
    if (detail::record_series_mismatch(res, "(1+z)*master sum vs gf", via_sum.truncated_to(order), gf, order))
        return res;

    for (int n = 1; n <= oracle_max; ++n) {
        auto counts = oracle::count_overpartition(n, static_cast<int>(t), budget);
        ZPoly expected;
        for (const auto& [m, c] : counts) expected += ZPoly::monomial(BigInt(c), m);
        if (detail::record_count_mismatch(res, "gf vs enumeration", n, gf.coefficient(n), expected))
            return res;
    }
    return res;
}

// Distinct parts: closed form vs master sum at alpha = -q, beta = 0.
inline IdentityCheckResult check_distinct_identity(long t, long order, int oracle_max,
                                                   int budget = oracle::kDefaultBudget) {
    IdentityCheckResult res{"pdt", t, order, oracle_max, true, std::nullopt};
    SumParams p{Monomial(-1, 0, 1), Monomial::zero(), 1, t + 1};

    auto sides = cleared_master_identity(p, order);
    if (detail::record_series_mismatch(res, "cleared identity lhs vs rhs", sides.lhs, sides.rhs, order))
        return res;

    QSeries gf = gf_distinct(t, order);
    if (detail::record_series_mismatch(res, "gf vs master sum", gf, master_sum(p, order), order))
        return res;

    for (int n = 1; n <= oracle_max; ++n)
        if (detail::record_count_mismatch(res, "gf vs enumeration", n, gf.coefficient(n),
                                          ZPoly(oracle::count_distinct_bounded_diff(n, static_cast<int>(t), budget))))
            return res;
    return res;
}

// Odd parts: closed form vs the q^(-1)-shifted master sum with base q^2,
// plus the parity remark (bounds 2t and 2t+1 count the same partitions).
inline IdentityCheckResult check_odd_identity(long t, long order, int oracle_max,
                                              int budget = oracle::kDefaultBudget) {
    IdentityCheckResult res{"pot", t, order, oracle_max, true, std::nullopt};
    SumParams p{Monomial::zero(), Monomial(1, 0, -1), 2, t};

    auto sides = cleared_master_identity(p, order);
    if (detail::record_series_mismatch(res, "cleared identity lhs vs rhs", sides.lhs, sides.rhs, order))
        return res;

    QSeries gf = gf_odd(t, order);
    if (detail::record_series_mismatch(res, "gf vs shifted master sum", gf, gf_odd_via_master(t, order), order))
        return res;

    for (int n = 1; n <= oracle_max; ++n) {
        const long long even_bound = oracle::count_odd_bounded_diff(n, static_cast<int>(2 * t), budget);
        if (detail::record_count_mismatch(res, "gf vs enumeration", n, gf.coefficient(n), ZPoly(even_bound)))
            return res;
        const long long odd_bound = oracle::count_odd_bounded_diff(n, static_cast<int>(2 * t + 1), budget);
        if (even_bound != odd_bound) {
            res.pass = false;
            res.mismatch = CoeffMismatch{"parity remark: bounds 2t and 2t+1", "n=" + std::to_string(n),
                                         std::to_string(even_bound), std::to_string(odd_bound)};
            return res;
        }
    }
    return res;
}

// The master identity in cleared form over the whole monomial parameter grid
// at width t (the degenerate alpha = beta q^d combinations included).
inline IdentityCheckResult check_master_identity(long t, long order) {
    IdentityCheckResult res{"main", t, order, 0, true, std::nullopt};
    for (const auto& p : master_parameter_grid(t, t)) {
        auto sides = cleared_master_identity(p, order);
        if (detail::record_series_mismatch(res, "cleared identity lhs vs rhs at " + p.str(),
                                           sides.lhs, sides.rhs, order))
            return res;
    }
    return res;
}

inline IdentityCheckResult run_identity_check(const std::string& identity, long t, long order,
                                              int oracle_max, int budget = oracle::kDefaultBudget) {
    if (identity == "bk") return check_bounded_diff_identity(t, order, oracle_max, budget);
    if (identity == "cy") return check_overpartition_identity(t, order, oracle_max, budget);
    if (identity == "pdt") return check_distinct_identity(t, order, oracle_max, budget);
    if (identity == "pot") return check_odd_identity(t, order, oracle_max, budget);
    if (identity == "main") return check_master_identity(t, order);
    throw std::invalid_argument("unknown identity: " + identity);
}

}  // namespace qpl
