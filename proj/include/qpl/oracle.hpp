#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpl/errors.hpp"

namespace qpl::oracle {

// Enumeration bound: before counting, n must not exceed the caller's budget.
// The oracles error out rather than degrade beyond it.
inline constexpr int kDefaultBudget = 80;

namespace detail {

inline void require_in_budget(int n, int budget, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
    if (n > budget)
        throw BudgetExceeded(std::string(who) + ": n = " + std::to_string(n) +
                             " exceeds enumeration budget " + std::to_string(budget));
}

// Multisets drawn from {v, v+1, ..., v_max} with sum `remaining`.
inline long long multisets_from_window(int v, int v_max, int remaining) {
    if (remaining == 0) return 1;  // all further multiplicities are zero
    if (v > v_max) return 0;
    long long total = 0;
    for (int taken = 0; taken <= remaining; taken += v)
        total += multisets_from_window(v + 1, v_max, remaining - taken);
    return total;
}

// Subsets drawn from {v, ..., v_max}, each value at most once, sum `remaining`.
inline long long subsets_from_window(int v, int v_max, int remaining) {
    if (remaining == 0) return 1;
    if (v > v_max || v > remaining) return 0;
    return subsets_from_window(v + 1, v_max, remaining) +
           subsets_from_window(v + 1, v_max, remaining - v);
}

// Multisets of odd values from {v, v+2, ..., <= v_max} with sum `remaining`.
inline long long odd_multisets_from_window(int v, int v_max, int remaining) {
    if (remaining == 0) return 1;
    if (v > v_max) return 0;
    long long total = 0;
    for (int taken = 0; taken <= remaining; taken += v)
        total += odd_multisets_from_window(v + 2, v_max, remaining - taken);
    return total;
}

}  // namespace detail

// Number of partitions of n whose largest and smallest parts differ by at
// most t.  Enumerates by smallest part r: multisets over {r..r+t} that
// contain r and sum to n.
inline long long count_bounded_diff(int n, int t, int budget = kDefaultBudget) {
    detail::require_in_budget(n, budget, "count_bounded_diff");
    if (t < 1) throw std::invalid_argument("count_bounded_diff: t must be >= 1");
    long long total = 0;
    for (int r = 1; r <= n; ++r)
        total += detail::multisets_from_window(r, r + t, n - r);
    return total;
}

// Same window constraint, all parts distinct (t = 0 allowed: single part).
inline long long count_distinct_bounded_diff(int n, int t, int budget = kDefaultBudget) {
    detail::require_in_budget(n, budget, "count_distinct_bounded_diff");
    if (t < 0) throw std::invalid_argument("count_distinct_bounded_diff: t must be >= 0");
    long long total = 0;
    for (int r = 1; r <= n; ++r)
        total += detail::subsets_from_window(r + 1, r + t, n - r);
    return total;
}

// Same window constraint, all parts odd.  t may be odd or even; with all
// parts odd the difference is always even, so counts for bounds 2t and
// 2t+1 coincide.
inline long long count_odd_bounded_diff(int n, int t, int budget = kDefaultBudget) {
    detail::require_in_budget(n, budget, "count_odd_bounded_diff");
    if (t < 1) throw std::invalid_argument("count_odd_bounded_diff: t must be >= 1");
    long long total = 0;
    for (int r = 1; r <= n; r += 2)
        total += detail::odd_multisets_from_window(r, r + t, n - r);
    return total;
}

namespace detail {

// Subset counts for the overline slots; slot counts stay tiny (bounded by
// the number of distinct parts), so stepwise multiply/divide is exact.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Walk base partitions (multisets over {r..r+t} containing r) and fold the
// overline assignments of each into `acc`.  distinct = number of distinct
// values used so far, largest = largest value used so far.
inline void overpartition_walk(int v, int r, int t, int remaining, int distinct, int largest,
                               std::map<int, long long>& acc) {
    if (remaining == 0) {
        // One binary overline choice per distinct value; the largest value
        // loses its choice when the part difference hits t exactly.
        const int slots = (largest - r == t) ? distinct - 1 : distinct;
        for (int m = 0; m <= slots; ++m) acc[m] += binomial(slots, m);
        return;
    }
    if (v > r + t) return;
    for (int taken = 0; taken <= remaining; taken += v)
        overpartition_walk(v + 1, r, t, remaining - taken, distinct + (taken > 0 ? 1 : 0),
                           taken > 0 ? v : largest, acc);
}

}  // namespace detail

// Overpartitions of n with part difference at most t, stratified by the
// number m of overlined parts.  The first occurrence of each distinct part
// may be overlined; when the difference is exactly t the largest part may
// not be.
inline std::map<int, long long> count_overpartition(int n, int t, int budget = kDefaultBudget) {
    detail::require_in_budget(n, budget, "count_overpartition");
    if (t < 1) throw std::invalid_argument("count_overpartition: t must be >= 1");
    std::map<int, long long> acc;
    for (int r = 1; r <= n; ++r) {
        // smallest part r is mandatory, so seed the walk with one copy taken
        for (int extra = 0; extra <= n - r; extra += r)
            detail::overpartition_walk(r + 1, r, t, n - r - extra, 1, r, acc);
    }
    return acc;
}

enum class PartitionKind { bounded_diff, distinct_bounded_diff, odd_bounded_diff, overpartition_bounded_diff };

struct PartitionFamily {
    PartitionKind kind;
    int t;

    void validate() const {
        if (kind == PartitionKind::distinct_bounded_diff) {
            if (t < 0) throw std::invalid_argument("PartitionFamily: t must be >= 0 for distinct parts");
        } else if (t < 1) {
            throw std::invalid_argument("PartitionFamily: t must be >= 1");
        }
    }
};

struct CountTable {
    PartitionFamily family;
    std::map<int, long long> rows;                          // plain families: n -> count
    std::map<int, std::map<int, long long>> rows_by_marks;  // overpartitions: n -> (m -> count)
};

inline CountTable build_count_table(PartitionFamily family, int n_max, int budget = kDefaultBudget) {
    family.validate();
    CountTable table{family, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        switch (family.kind) {
            case PartitionKind::bounded_diff:
                table.rows[n] = count_bounded_diff(n, family.t, budget);
                break;
            case PartitionKind::distinct_bounded_diff:
                table.rows[n] = count_distinct_bounded_diff(n, family.t, budget);
                break;
            case PartitionKind::odd_bounded_diff:
                table.rows[n] = count_odd_bounded_diff(n, family.t, budget);
                break;
            case PartitionKind::overpartition_bounded_diff:
                table.rows_by_marks[n] = count_overpartition(n, family.t, budget);
                break;
        }
    }
    return table;
}

}  // namespace qpl::oracle
