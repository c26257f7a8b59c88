#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "goldenmean/analysis.hpp"
#include "goldenmean/checks.hpp"
#include "goldenmean/errors.hpp"
#include "goldenmean/oracle.hpp"
#include "goldenmean/render.hpp"
#include "goldenmean/series.hpp"

namespace gm = goldenmean;
using nlohmann::json;

namespace {

// Exit codes are a stable contract: 0 success, 1 verification failure,
// 2 usage error, 3 domain error.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct OutputRecord {
    long n = 0;
    std::string series;  // kind name or "oracle"
    std::optional<long> terms;
    std::optional<long> digits_requested;
    std::string value;
    long error_bound_exponent = 0;
    long elapsed_ms = 0;
};

void print_record(const OutputRecord& rec, const std::string& format) {
    if (format == "json") {
        json j;
        j["n"] = rec.n;
        j["series"] = rec.series;
        j["terms"] = rec.terms ? json(*rec.terms) : json(nullptr);
        j["digits_requested"] = rec.digits_requested ? json(*rec.digits_requested) : json(nullptr);
        j["value"] = rec.value;
        j["error_bound_exponent"] = rec.error_bound_exponent;
        j["elapsed_ms"] = rec.elapsed_ms;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << rec.value << "\n";
    std::cout << "error_bound_exponent " << rec.error_bound_exponent << "\n";
    if (rec.terms) std::cout << "terms " << *rec.terms << "\n";
    if (rec.digits_requested) std::cout << "digits_requested " << *rec.digits_requested << "\n";
    std::cout << "elapsed_ms " << rec.elapsed_ms << "\n";
}

// Smallest g with x <= 10^g, for x > 0.
long ceil_log10_upper(const gm::Dyadic& x) {
    std::int64_t m = x.floor_log10_abs();
    if (m >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(m));
        if (x == gm::Dyadic(std::move(p), 0)) return static_cast<long>(m);
    }
    return static_cast<long>(m + 1);
}

int cmd_compute(long n, const std::string& series, std::optional<long> terms,
                std::optional<long> digits, const std::string& format) {
    Stopwatch timer;
    gm::SeriesKind kind = gm::series_from_name(series);
    OutputRecord rec;
    rec.n = n;
    rec.series = series;
    if (terms) {
        gm::Dyadic value = gm::evaluate(n, kind, *terms);
        gm::Dyadic bound = gm::tail_bound(n, kind, *terms);
        // The truncated sum is exactly dyadic; render it in full.
        rec.value = value.to_decimal(value.exponent()).text;
        rec.terms = *terms;
        rec.error_bound_exponent = ceil_log10_upper(bound);
    } else {
        gm::RenderedValue rv = gm::series_digits(n, kind, *digits);
        rec.value = rv.text;
        rec.terms = rv.work;
        rec.digits_requested = *digits;
        rec.error_bound_exponent = rv.error_exponent;
    }
    rec.elapsed_ms = timer.elapsed_ms();
    print_record(rec, format);
    return kOk;
}

int cmd_oracle(long n, long digits, const std::string& target, const std::string& format) {
    Stopwatch timer;
    gm::SeriesKind kind = gm::series_from_name(target);
    gm::RenderedValue rv = gm::oracle_digits(n, kind, digits);
    OutputRecord rec;
    rec.n = n;
    rec.series = "oracle";
    rec.digits_requested = digits;
    rec.value = rv.text;
    rec.error_bound_exponent = rv.error_exponent;
    rec.elapsed_ms = timer.elapsed_ms();
    print_record(rec, format);
    return kOk;
}

std::vector<std::pair<long, long>> default_table2_rows() {
    return {{2, 100}, {2, 1000}, {2, 10000}, {10, 10}, {10, 100},
            {10, 1000}, {100, 2}, {100, 10}, {100, 100}};
}

std::vector<std::pair<long, long>> parse_rows(const std::string& spec) {
    std::vector<std::pair<long, long>> rows;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--rows", "expected n:K pairs");
        try {
            long n = std::stol(item.substr(0, colon));
            long k = std::stol(item.substr(colon + 1));
            rows.emplace_back(n, k);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--rows", "expected n:K pairs");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (rows.empty()) throw CLI::ValidationError("--rows", "no rows given");
    return rows;
}

int cmd_table(int which, const std::string& rows_spec, const std::string& format) {
    if (which == 1) {
        struct Row {
            long n;
            std::string value;
        };
        std::vector<Row> rows;
        for (long n = 2; n <= 10; ++n) {
            rows.push_back({n, gm::oracle_digits(n, gm::SeriesKind::Alpha, 20).text});
        }
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back({{"n", r.n}, {"value", r.value}});
            std::cout << arr.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "n,alpha\n";
            for (const auto& r : rows) std::cout << r.n << "," << r.value << "\n";
        } else {
            std::cout << "n   alpha_n\n";
            for (const auto& r : rows) {
                std::cout << r.n << (r.n < 10 ? "   " : "  ") << r.value << "\n";
            }
        }
        return kOk;
    }

    std::vector<std::pair<long, long>> pairs =
        rows_spec.empty() ? default_table2_rows() : parse_rows(rows_spec);
    std::vector<gm::AccuracyRow> rows = gm::accuracy_table(pairs);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"k", r.terms},
                           {"predicted", r.predicted},
                           {"actual_alpha", r.actual_alpha},
                           {"actual_beta", r.actual_beta},
                           {"actual_gap", r.actual_gap}});
        }
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,predicted,actual_alpha,actual_beta,actual_gap\n";
        for (const auto& r : rows) {
            std::cout << r.n << "," << r.terms << "," << r.predicted << "," << r.actual_alpha << ","
                      << r.actual_beta << "," << r.actual_gap << "\n";
        }
    } else {
        std::printf("%-5s %-7s %-10s %-13s %-12s %-11s\n", "n", "k", "predicted", "actual_alpha",
                    "actual_beta", "actual_gap");
        for (const auto& r : rows) {
            std::printf("%-5ld %-7ld %-10ld %-13ld %-12ld %-11ld\n", r.n, r.terms, r.predicted,
                        r.actual_alpha, r.actual_beta, r.actual_gap);
        }
    }
    return kOk;
}

int cmd_verify(long n_max, long k_max, long bits) {
    std::vector<gm::SuiteResult> results = gm::run_all_checks(n_max, k_max, bits);
    bool all_ok = true;
    for (const auto& suite : results) {
        if (suite.ok()) {
            std::cout << "ok    " << suite.name << ": " << suite.checks << " checks\n";
        } else {
            all_ok = false;
            std::cout << "FAIL  " << suite.name << ": " << suite.failures.size() << " of "
                      << suite.checks << " checks failed\n";
            std::cout << "      first: " << suite.failures.front() << "\n";
        }
    }
    std::cout << (all_ok ? "verify: all suites passed\n" : "verify: FAILURES above\n");
    return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized golden means: rapidly converging series with exact arithmetic"};
    app.require_subcommand(1);

    // compute
    long c_n = 0;
    std::string c_series;
    long c_terms = -1, c_digits = -1;
    std::string c_format = "plain";
    CLI::App* compute = app.add_subcommand("compute", "evaluate a truncated series");
    compute->add_option("--n", c_n, "recurrence order")->required();
    compute->add_option("--series", c_series, "alpha|beta|gap")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "gap"}));
    CLI::Option* terms_opt = compute->add_option("--terms", c_terms, "number of series terms")
                                 ->check(CLI::PositiveNumber);
    CLI::Option* digits_opt = compute->add_option("--digits", c_digits, "certified decimal digits")
                                  ->check(CLI::PositiveNumber);
    terms_opt->excludes(digits_opt);
    compute->add_option("--format", c_format)->check(CLI::IsMember({"plain", "json"}));

    // oracle
    long o_n = 0, o_digits = 0;
    std::string o_target = "alpha", o_format = "plain";
    CLI::App* oracle = app.add_subcommand("oracle", "certified reference value");
    oracle->add_option("--n", o_n, "recurrence order")->required();
    oracle->add_option("--digits", o_digits, "decimal digits")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--target", o_target)->check(CLI::IsMember({"alpha", "beta", "gap"}));
    oracle->add_option("--format", o_format)->check(CLI::IsMember({"plain", "json"}));

    // table
    int t_which = 0;
    std::string t_rows, t_format = "plain";
    CLI::App* table = app.add_subcommand("table", "reproduce the constant / accuracy tables");
    table->add_option("--which", t_which, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    CLI::Option* rows_opt = table->add_option("--rows", t_rows, "n:K[,n:K...] (table 2 only)");
    table->add_option("--format", t_format)->check(CLI::IsMember({"plain", "json", "csv"}));

    // verify
    long v_nmax = 16, v_kmax = 50, v_bits = 256;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--n-max", v_nmax)->check(CLI::Range(2L, 256L));
    verify->add_option("--k-max", v_kmax)->check(CLI::Range(1L, 100000L));
    verify->add_option("--bits", v_bits)->check(CLI::Range(64L, 65536L));

    try {
        app.parse(argc, argv);
        if (compute->parsed() && (terms_opt->count() == 0) == (digits_opt->count() == 0)) {
            std::cerr << "compute: exactly one of --terms/--digits is required\n";
            return kUsage;
        }
        if (table->parsed() && t_which == 1 && rows_opt->count() > 0) {
            std::cerr << "table: --rows applies to table 2 only\n";
            return kUsage;
        }

        if (compute->parsed()) {
            return cmd_compute(c_n, c_series,
                               terms_opt->count() ? std::optional<long>(c_terms) : std::nullopt,
                               digits_opt->count() ? std::optional<long>(c_digits) : std::nullopt,
                               c_format);
        }
        if (oracle->parsed()) return cmd_oracle(o_n, o_digits, o_target, o_format);
        if (table->parsed()) return cmd_table(t_which, t_rows, t_format);
        if (verify->parsed()) return cmd_verify(v_nmax, v_kmax, v_bits);
        return kUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const gm::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    }
}
