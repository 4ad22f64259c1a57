// Command-line harness: formal identity checks, seeded numeric lemma trials,
// and coefficient tables, with machine-readable reports and exit codes
// 0 = all checks passed, 1 = a check failed, 2 = usage or runtime error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpl/checks.hpp"
#include "qpl/gf.hpp"
#include "qpl/numeric.hpp"
#include "qpl/oracle.hpp"
#include "qpl/report.hpp"

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit_report(const qpl::VerificationReport& report, const std::string& format, bool timings) {
    if (format == "json")
        std::cout << qpl::to_json(report, timings).dump(2) << "\n";
    else
        std::cout << qpl::to_text(report, timings);
}

int run_verify_identity(const std::string& identity, long t, long order, long max_order,
                        int oracle_max, int budget, const std::string& format, bool timings) {
    if (order < 0 || order > max_order) {
        std::cerr << "error: --order must be in [0, " << max_order << "]\n";
        return 2;
    }
    const long t_min = (identity == "pdt") ? 0 : 1;
    if (t < t_min) {
        std::cerr << "error: --t must be >= " << t_min << " for identity " << identity << "\n";
        return 2;
    }
    int effective_oracle =
        (identity == "main") ? 0 : static_cast<int>(std::max(0L, std::min<long>(oracle_max, order)));
    if (effective_oracle > budget) {
        throw qpl::BudgetExceeded("oracle cross-check range " + std::to_string(effective_oracle) +
                                  " exceeds enumeration budget " + std::to_string(budget));
    }

    Stopwatch watch;
    qpl::IdentityCheckResult result = qpl::run_identity_check(identity, t, order, effective_oracle, budget);

    qpl::VerificationReport report;
    report.check_id = "identity:" + identity;
    report.add_parameter("identity", identity);
    report.add_parameter("t", std::to_string(t));
    report.add_parameter("order", std::to_string(order));
    report.add_parameter("oracle_max", std::to_string(effective_oracle));
    report.order_or_trials = order;
    report.status = result.pass ? qpl::CheckStatus::pass : qpl::CheckStatus::fail;
    if (result.mismatch) {
        report.first_mismatch = qpl::VerificationReport::Mismatch{
            result.mismatch->context + " at " + result.mismatch->where,
            result.mismatch->expected, result.mismatch->actual};
    }
    report.elapsed_ms = watch.elapsed_ms();
    emit_report(report, format, timings);
    return report.exit_code();
}

int run_lemma(const std::string& lemma, int trials, std::uint64_t seed, double tol,
              const std::string& format, bool timings) {
    if (trials < 1) {
        std::cerr << "error: --trials must be >= 1\n";
        return 2;
    }
    if (tol <= 0) {
        std::cerr << "error: --tol must be positive\n";
        return 2;
    }

    Stopwatch watch;
    qpl::numeric::TrialSummary summary;
    if (lemma == "chu")
        summary = qpl::numeric::run_chu_trials(trials, seed);
    else if (lemma == "ktw")
        summary = qpl::numeric::run_ktw_trials(trials, seed);
    else
        summary = qpl::numeric::run_chain_trials(trials, seed);

    qpl::VerificationReport report;
    report.check_id = "lemma:" + lemma;
    report.add_parameter("lemma", lemma);
    report.add_parameter("trials", std::to_string(trials));
    report.add_parameter("seed", std::to_string(seed));
    {
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << tol;
        report.add_parameter("tol", os.str());
    }
    {
        std::ostringstream os;
        os.precision(6);
        os << std::scientific << summary.max_error;
        report.add_parameter("max_error", os.str());
    }
    report.add_parameter("rejected_samples", std::to_string(summary.rejected));
    if (lemma == "chain") {
        std::ostringstream os;
        os.precision(6);
        os << std::scientific << summary.max_step_error;
        report.add_parameter("max_step_error", os.str());
    }
    if (summary.single) {
        for (std::size_t i = 0; i < summary.single->values.size(); ++i) {
            std::ostringstream os;
            os.precision(15);
            const auto v = summary.single->values[i];
            os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
            report.add_parameter("line_" + std::to_string(i + 1), os.str());
        }
    }
    report.order_or_trials = trials;
    const bool pass = summary.passed(tol);
    report.status = pass ? qpl::CheckStatus::pass : qpl::CheckStatus::fail;
    if (!pass) {
        std::ostringstream actual;
        actual.precision(6);
        actual << std::scientific << summary.max_error;
        report.first_mismatch =
            qpl::VerificationReport::Mismatch{summary.worst, "error below tolerance", actual.str()};
    }
    report.elapsed_ms = watch.elapsed_ms();
    emit_report(report, format, timings);
    return report.exit_code();
}

struct TableRow {
    int n;
    int m = -1;  // marker power; -1 for plain families
    std::string series;
    std::string oracle;
    bool has_series = false;
    bool has_oracle = false;
};

std::map<int, std::string> series_mark_counts(const qpl::ZPoly& coeff) {
    std::map<int, std::string> out;
    for (int m = 0; m <= coeff.degree(); ++m)
        if (coeff.z_coeff(m) != 0) out[m] = coeff.z_coeff(m).str();
    return out;
}

int run_table(const std::string& family, long t, int n_max, const std::string& source,
              const std::string& format, long max_order, int budget) {
    const bool want_series = source == "series" || source == "both";
    const bool want_oracle = source == "oracle" || source == "both";
    const long t_min = (family == "pd") ? 0 : 1;
    if (t < t_min) {
        std::cerr << "error: --t must be >= " << t_min << " for family " << family << "\n";
        return 2;
    }
    if (n_max < 1) {
        std::cerr << "error: --n-max must be >= 1\n";
        return 2;
    }
    if (want_series && n_max > max_order) {
        std::cerr << "error: --n-max exceeds the series order cap " << max_order << "\n";
        return 2;
    }
    if (want_oracle && n_max > budget)
        throw qpl::BudgetExceeded("--n-max " + std::to_string(n_max) +
                                  " exceeds enumeration budget " + std::to_string(budget));

    qpl::QSeries series;
    if (want_series) {
        if (family == "p") {
            series = qpl::gf_bounded_diff(t, n_max);
        } else if (family == "pd") {
            series = qpl::gf_distinct(t, n_max);
        } else if (family == "po") {
            // Bounds 2k and 2k+1 coincide for odd parts; the even-bound
            // generating function serves both.
            if (t < 2) {
                std::cerr << "error: family po needs --t >= 2 with --source series "
                             "(use --source oracle for t = 1)\n";
                return 2;
            }
            series = qpl::gf_odd(t / 2, n_max);
        } else {
            series = qpl::gf_overpartition(t, n_max);
        }
    }

    std::vector<TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        if (family == "g") {
            std::map<int, std::string> from_series;
            std::map<int, long long> from_oracle;
            if (want_series) from_series = series_mark_counts(series.coefficient(n));
            if (want_oracle) from_oracle = qpl::oracle::count_overpartition(n, static_cast<int>(t), budget);
            std::map<int, bool> marks;
            for (const auto& [m, unused] : from_series) marks[m] = true;
            for (const auto& [m, unused] : from_oracle) marks[m] = true;
            for (const auto& [m, unused] : marks) {
                TableRow row;
                row.n = n;
                row.m = m;
                if (want_series) {
                    row.has_series = true;
                    auto it = from_series.find(m);
                    row.series = it == from_series.end() ? "0" : it->second;
                }
                if (want_oracle) {
                    row.has_oracle = true;
                    auto it = from_oracle.find(m);
                    row.oracle = it == from_oracle.end() ? "0" : std::to_string(it->second);
                }
                rows.push_back(row);
            }
        } else {
            TableRow row;
            row.n = n;
            if (want_series) {
                const qpl::ZPoly& c = series.coefficient(n);
                if (!c.is_constant()) throw qpl::Error("table: marker variable in a plain family");
                row.has_series = true;
                row.series = c.z_coeff(0).str();
            }
            if (want_oracle) {
                row.has_oracle = true;
                long long count = 0;
                if (family == "p") count = qpl::oracle::count_bounded_diff(n, static_cast<int>(t), budget);
                else if (family == "pd") count = qpl::oracle::count_distinct_bounded_diff(n, static_cast<int>(t), budget);
                else count = qpl::oracle::count_odd_bounded_diff(n, static_cast<int>(t), budget);
                row.oracle = std::to_string(count);
            }
            rows.push_back(row);
        }
    }

    const bool with_marks = family == "g";
    const bool both = want_series && want_oracle;
    if (format == "csv") {
        std::cout << "n";
        if (with_marks) std::cout << ",m";
        if (both) std::cout << ",series,oracle,match";
        else std::cout << ",count";
        std::cout << "\n";
        for (const auto& row : rows) {
            std::cout << row.n;
            if (with_marks) std::cout << "," << row.m;
            if (both)
                std::cout << "," << row.series << "," << row.oracle << ","
                          << (row.series == row.oracle ? 1 : 0);
            else
                std::cout << "," << (row.has_series ? row.series : row.oracle);
            std::cout << "\n";
        }
    } else {
        ordered_json j;
        j["family"] = family;
        j["t"] = t;
        j["n_max"] = n_max;
        j["source"] = source;
        ordered_json out_rows = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["n"] = row.n;
            if (with_marks) r["m"] = row.m;
            if (both) {
                r["series"] = row.series;
                r["oracle"] = row.oracle;
                r["match"] = row.series == row.oracle;
            } else {
                r["count"] = row.has_series ? row.series : row.oracle;
            }
            out_rows.push_back(r);
        }
        j["rows"] = out_rows;
        std::cout << j.dump(2) << "\n";
    }

    if (both)
        for (const auto& row : rows)
            if (row.series != row.oracle) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric checks for partition generating functions "
                 "with bounded part differences"};
    app.require_subcommand(1);

    // verify-identity
    auto* verify = app.add_subcommand("verify-identity", "Formal identity check against the "
                                                         "master sum and the enumeration oracle");
    std::string identity;
    long vi_t = 1;
    long vi_order = 200;
    long vi_max_order = 500;
    int vi_oracle_max = 60;
    int vi_budget = qpl::oracle::kDefaultBudget;
    std::string vi_format = "json";
    bool vi_timings = false;
    verify->add_option("--identity", identity, "bk | cy | pdt | pot | main")
        ->required()
        ->check(CLI::IsMember({"bk", "cy", "pdt", "pot", "main"}))
        ->envname("QPL_IDENTITY");
    verify->add_option("--t", vi_t, "window width")->required()->envname("QPL_T");
    verify->add_option("--order", vi_order, "series order to check through (default 200)")
        ->envname("QPL_ORDER");
    verify->add_option("--max-order", vi_max_order, "configured order cap (default 500)")
        ->envname("QPL_MAX_ORDER");
    verify->add_option("--oracle-max", vi_oracle_max,
                       "largest n cross-checked against enumeration (0 disables, default 60)")
        ->envname("QPL_ORACLE_MAX");
    verify->add_option("--budget", vi_budget, "enumeration budget (default 80)")->envname("QPL_BUDGET");
    verify->add_option("--format", vi_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("QPL_FORMAT");
    verify->add_flag("--timings", vi_timings, "include elapsed_ms in the report");

    // lemma
    auto* lemma = app.add_subcommand("lemma", "Seeded numeric trials for the hypergeometric "
                                              "building blocks");
    std::string lemma_name;
    int trials = 100;
    std::uint64_t seed = 12345;
    double tol = -1.0;
    std::string lm_format = "json";
    bool lm_timings = false;
    lemma->add_option("--lemma", lemma_name, "chu | ktw | chain")
        ->required()
        ->check(CLI::IsMember({"chu", "ktw", "chain"}))
        ->envname("QPL_LEMMA");
    lemma->add_option("--trials", trials, "number of seeded samples (default 100)")->envname("QPL_TRIALS");
    lemma->add_option("--seed", seed, "master seed (default 12345)")->envname("QPL_SEED");
    lemma->add_option("--tol", tol, "pass threshold on the max relative error "
                                    "(defaults: chu 1e-10, ktw 1e-7, chain 1e-8)")
        ->envname("QPL_TOL");
    lemma->add_option("--format", lm_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("QPL_FORMAT");
    lemma->add_flag("--timings", lm_timings, "include elapsed_ms in the report");

    // table
    auto* table = app.add_subcommand("table", "Coefficient tables from the series builders "
                                              "and/or the enumeration oracle");
    std::string family;
    long tb_t = 1;
    int n_max = 40;
    std::string tb_source = "series";
    std::string tb_format = "csv";
    long tb_max_order = 500;
    int tb_budget = qpl::oracle::kDefaultBudget;
    table->add_option("--family", family, "p | pd | po | g")
        ->required()
        ->check(CLI::IsMember({"p", "pd", "po", "g"}))
        ->envname("QPL_FAMILY");
    table->add_option("--t", tb_t, "part-difference bound (family po: the bound itself)")
        ->required()
        ->envname("QPL_T");
    table->add_option("--n-max", n_max, "largest n to tabulate (default 40)")->envname("QPL_NMAX");
    table->add_option("--source", tb_source, "series | oracle | both")
        ->check(CLI::IsMember({"series", "oracle", "both"}))
        ->envname("QPL_SOURCE");
    table->add_option("--format", tb_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("QPL_FORMAT");
    table->add_option("--max-order", tb_max_order, "series order cap (default 500)")
        ->envname("QPL_MAX_ORDER");
    table->add_option("--budget", tb_budget, "enumeration budget (default 80)")->envname("QPL_BUDGET");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify_identity(identity, vi_t, vi_order, vi_max_order, vi_oracle_max,
                                       vi_budget, vi_format, vi_timings);
        if (lemma->parsed()) {
            if (lemma->count("--tol") == 0 && !std::getenv("QPL_TOL"))
                tol = lemma_name == "chu" ? 1e-10 : (lemma_name == "ktw" ? 1e-7 : 1e-8);
            return run_lemma(lemma_name, trials, seed, tol, lm_format, lm_timings);
        }
        return run_table(family, tb_t, n_max, tb_source, tb_format, tb_max_order, tb_budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
