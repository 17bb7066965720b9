// cqmv: mean values of cubic and quartic Dirichlet characters.
//
// Subcommands: verify, sum, scan, constants, chars. Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 budget or capacity error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqmv/characters.hpp"
#include "cqmv/mean_values.hpp"
#include "cqmv/types.hpp"
#include "cqmv/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format;
    std::string output_path;
    int threads = 0;
    bool timings = false;
};

std::ostream& open_output(const GlobalOpts& g, std::ofstream& file) {
    if (g.output_path.empty()) return std::cout;
    file.open(g.output_path);
    if (!file) throw std::runtime_error("cannot open output file: " + g.output_path);
    return file;
}

int64_t env_int64(const char* name, int64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    return static_cast<int64_t>(std::strtod(v, nullptr));
}

json report_json(const cqmv::SumReport& r, bool timings) {
    return json{{"order", r.order},
                {"X", r.X},
                {"Y", r.Y},
                {"total_re", r.total.real()},
                {"total_im", r.total.imag()},
                {"power_part", r.power_part},
                {"remainder_re", r.remainder.real()},
                {"remainder_im", r.remainder.imag()},
                {"predictor", r.predictor},
                {"ratio", r.ratio},
                {"moduli_count", r.moduli_count},
                {"char_count", r.char_count},
                {"elapsed_ms", timings ? r.elapsed_ms : 0.0}};
}

const char* kReportCsvHeader =
    "order,X,Y,total_re,total_im,power_part,remainder_re,remainder_im,predictor,ratio,"
    "moduli_count,char_count,elapsed_ms";

void report_csv_row(std::ostream& os, const cqmv::SumReport& r, bool timings) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%lld,%lld,%.6g",
                  r.order, r.X, r.Y, r.total.real(), r.total.imag(), r.power_part, r.remainder.real(),
                  r.remainder.imag(), r.predictor, r.ratio, static_cast<long long>(r.moduli_count),
                  static_cast<long long>(r.char_count), timings ? r.elapsed_ms : 0.0);
    os << buf << '\n';
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int order, int64_t max_norm) {
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    bool json_fmt = g.format == "json";
    if (!json_fmt) os << "identity,params,discrepancy,pass\n";
    cqmv::RowSink sink;
    if (!json_fmt) {
        sink = [&os](const cqmv::CheckRow& row) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", row.discrepancy);
            os << row.identity << ',' << row.params << ',' << buf << ','
               << (row.pass ? "pass" : "FAIL") << '\n';
        };
    }
    cqmv::SuiteSummary sum = cqmv::run_suite(suite, order, max_norm, sink);
    if (json_fmt) {
        os << json{{"suite", sum.suite},
                   {"order", sum.order},
                   {"checked", sum.checked},
                   {"failed", sum.failed},
                   {"max_discrepancy", sum.max_discrepancy},
                   {"pass", sum.pass()}}
                  .dump()
           << '\n';
    } else {
        os << "# suite=" << sum.suite << " order=" << sum.order << " checked=" << sum.checked
           << " failed=" << sum.failed << " max_discrepancy=" << sum.max_discrepancy << " result="
           << (sum.pass() ? "pass" : "FAIL") << '\n';
    }
    return sum.pass() ? 0 : 1;
}

int cmd_sum(const GlobalOpts& g, int order, double X, double Y, const std::string& method) {
    cqmv::SumOptions opt;
    opt.method = method == "direct" ? cqmv::SumMethod::direct : cqmv::SumMethod::period;
    opt.threads = g.threads;
    opt.budget = env_int64("CQMV_BUDGET", cqmv::kDefaultBudget);
    cqmv::SumReport rep = cqmv::S_total(order, X, Y, opt);
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    if (g.format == "csv") {
        os << kReportCsvHeader << '\n';
        report_csv_row(os, rep, g.timings);
    } else {
        os << report_json(rep, g.timings).dump(2) << '\n';
    }
    return 0;
}

int cmd_scan(const GlobalOpts& g, int order, double X, const std::string& y_list) {
    std::vector<double> Ys;
    std::stringstream ss(y_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) Ys.push_back(std::strtod(item.c_str(), nullptr));
    }
    if (Ys.empty()) throw CLI::ValidationError("--y-list", "no Y values given");
    cqmv::SumOptions opt;
    opt.threads = g.threads;
    opt.budget = env_int64("CQMV_BUDGET", cqmv::kDefaultBudget);
    cqmv::ScanResult res = cqmv::transition_scan(order, X, Ys, opt);
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& rep : res.reports) arr.push_back(report_json(rep, g.timings));
        os << json{{"reports", arr}, {"truncated", res.truncated}}.dump(2) << '\n';
    } else {
        os << kReportCsvHeader << '\n';
        for (const auto& rep : res.reports) report_csv_row(os, rep, g.timings);
        if (res.truncated) os << "# truncated: budget exhausted before the full Y list\n";
    }
    return res.truncated ? 3 : 0;
}

int cmd_constants(const GlobalOpts& g, int order, int64_t cutoff) {
    cqmv::ConstantResult c = cqmv::compute_constant(order, cutoff);
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    const char* product_name = order == 3 ? "f1" : "h1";
    if (g.format == "csv") {
        os << "order,C,euler_product,prime_cutoff,tail_bound,L1_closed,L1_series\n";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%lld,%.6g,%.17g,%.17g", order, c.C,
                      c.product.value, static_cast<long long>(c.product.prime_cutoff),
                      c.product.tail_bound, cqmv::L1_closed_form(order), cqmv::L1_series(order));
        os << buf << '\n';
    } else {
        os << json{{"order", order},
                   {"C", c.C},
                   {product_name, c.product.value},
                   {"prime_cutoff", c.product.prime_cutoff},
                   {"tail_bound", c.product.tail_bound},
                   {"L1_closed", cqmv::L1_closed_form(order)},
                   {"L1_series", cqmv::L1_series(order)}}
                  .dump(2)
           << '\n';
    }
    return 0;
}

int cmd_chars(const GlobalOpts& g, int order, int64_t n) {
    if (n < 1 || n > 10000000) {
        throw cqmv::capacity_error("chars: n must be between 1 and 1e7");
    }
    std::ofstream file;
    std::ostream& os = open_output(g, file);
    std::vector<cqmv::CharacterTable> chis = cqmv::set_S(n, order);
    os << "# n=" << n << " order=" << order << " characters=" << chis.size() << '\n';
    for (const cqmv::CharacterTable& chi : chis) {
        os << "# q=" << chi.q_a << (chi.q_b < 0 ? "" : "+") << chi.q_b
           << (order == 3 ? "w" : "i") << '\n';
        cqmv::write_table_csv(os, chi);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mean values of cubic and quartic Dirichlet characters"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(
        "Report CSV columns (sum, scan):\n"
        "  order,X,Y,total_re,total_im,power_part,remainder_re,remainder_im,\n"
        "  predictor,ratio,moduli_count,char_count,elapsed_ms\n"
        "Verify CSV columns: identity,params,discrepancy,pass; final line is a\n"
        "'# suite=...' summary. Chars CSV columns: m,exponent (empty exponent\n"
        "means chi(m) = 0).\n"
        "Environment: CQMV_BUDGET caps sweep work (default 1e10 steps);\n"
        "CQMV_NORM_CAP caps Gauss-sum residue systems (default 1e5).\n"
        "Exit codes: 0 ok, 1 verification failure, 2 usage, 3 budget/capacity.");

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json", ""}));
    app.add_option("--output", g.output_path, "write output to this file instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for sweeps (0 = all cores)");
    app.add_flag("--timings", g.timings, "emit real elapsed_ms (off keeps output byte-stable)");

    int order = 3;
    std::string suite, method = "period", y_list;
    double X = 0, Y = 0;
    int64_t max_norm = 0, cutoff = 100000, n_modulus = 1;

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite, print per-instance CSV");
    verify->add_option("--suite", suite, "one of: reciprocity, gauss-identities, tau-relations, poisson, bijection, pv")
        ->required()
        ->check(CLI::IsMember(cqmv::suite_names()));
    verify->add_option("--order", order, "3 or 4")->required()->check(CLI::IsMember({3, 4}));
    verify->add_option("--max-norm", max_norm, "override the documented sweep ranges (0 = defaults)");

    CLI::App* sum = app.add_subcommand("sum", "evaluate S_i(X, Y) and print one report");
    sum->add_option("--order", order)->required()->check(CLI::IsMember({3, 4}));
    sum->add_option("--x", X)->required();
    sum->add_option("--y", Y)->required();
    sum->add_option("--method", method)->check(CLI::IsMember({"direct", "period"}));

    CLI::App* scan = app.add_subcommand("scan", "evaluate S_i(X, Y) over a list of Y");
    scan->add_option("--order", order)->required()->check(CLI::IsMember({3, 4}));
    scan->add_option("--x", X)->required();
    scan->add_option("--y-list", y_list, "comma-separated Y values")->required();

    CLI::App* constants = app.add_subcommand("constants", "compute C1 or C2 by Euler product");
    constants->add_option("--order", order)->required()->check(CLI::IsMember({3, 4}));
    constants->add_option("--cutoff", cutoff, "prime cutoff P (>= 100)");

    CLI::App* chars = app.add_subcommand("chars", "print the generators and value tables of S_{order,n}");
    chars->add_option("--order", order)->required()->check(CLI::IsMember({3, 4}));
    chars->add_option("--n", n_modulus)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(g, suite, order, max_norm);
        if (sum->parsed()) return cmd_sum(g, order, X, Y, method);
        if (scan->parsed()) return cmd_scan(g, order, X, y_list);
        if (constants->parsed()) return cmd_constants(g, order, cutoff);
        if (chars->parsed()) return cmd_chars(g, order, n_modulus);
    } catch (const cqmv::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
