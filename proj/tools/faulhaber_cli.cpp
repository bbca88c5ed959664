// Command-line front end: exact Bernoulli tables, power-sum polynomials by
// three constructions, identity verification sweeps, and root reports.

#include <faulhaber/bernoulli.hpp>
#include <faulhaber/powersum.hpp>
#include <faulhaber/root_analysis.hpp>
#include <faulhaber/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using faulhaber::BernoulliTable;
using faulhaber::IndexRange;
using faulhaber::Rational;
using faulhaber::VerificationReport;

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw std::runtime_error("cannot open output file: " + path);
            stream = &file;
        }
    }
    std::ostream& os() { return *stream; }
};

int run_bernoulli(long long max_m, const std::string& format, const std::string& out_path)
{
    BernoulliTable table;
    const auto top = static_cast<std::size_t>(max_m);
    table.ensure(top);
    OutputTarget out(out_path);
    if (format == "csv") {
        faulhaber::write_bernoulli_csv(out.os(), top, table);
    } else if (format == "json") {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (std::size_t m = 0; m <= top; ++m) {
            nlohmann::ordered_json entry;
            entry["m"] = m;
            entry["value"] = table.number(m).to_string();
            values.push_back(std::move(entry));
        }
        out.os() << values.dump(2) << "\n";
    } else {
        for (std::size_t m = 0; m <= top; ++m)
            out.os() << "B_" << m << " = " << table.number(m) << "\n";
    }
    return 0;
}

int run_powersum(long long p, const std::string& method, const std::string& format,
                 const std::string& out_path)
{
    BernoulliTable table;
    const auto power = static_cast<unsigned>(p);
    OutputTarget out(out_path);

    if (method != "all") {
        faulhaber::Polynomial s;
        if (method == "recursive")
            s = faulhaber::powersum_recursive(power);
        else if (method == "faulhaber")
            s = faulhaber::powersum_faulhaber(power, table);
        else
            s = faulhaber::powersum_bernoulli_poly(power, table);
        if (format == "json") {
            nlohmann::ordered_json entry;
            entry["p"] = power;
            entry["method"] = method;
            entry["coefficients"] = s.coefficient_strings();
            out.os() << entry.dump(2) << "\n";
        } else if (format == "csv") {
            out.os() << power << "," << method << "," << s.to_string() << "\n";
        } else {
            out.os() << s.to_string() << "\n";
        }
        return 0;
    }

    const faulhaber::Polynomial recursive = faulhaber::powersum_recursive(power);
    const faulhaber::Polynomial direct = faulhaber::powersum_faulhaber(power, table);
    const faulhaber::Polynomial via_bpoly = faulhaber::powersum_bernoulli_poly(power, table);
    const bool agree = recursive == direct && recursive == via_bpoly;
    if (format == "json") {
        nlohmann::ordered_json entry;
        entry["p"] = power;
        entry["recursive"] = recursive.coefficient_strings();
        entry["faulhaber"] = direct.coefficient_strings();
        entry["bernoulli-poly"] = via_bpoly.coefficient_strings();
        entry["agree"] = agree;
        out.os() << entry.dump(2) << "\n";
    } else if (format == "csv") {
        out.os() << power << ",recursive," << recursive.to_string() << "\n";
        out.os() << power << ",faulhaber," << direct.to_string() << "\n";
        out.os() << power << ",bernoulli-poly," << via_bpoly.to_string() << "\n";
        out.os() << power << ",agree," << (agree ? "true" : "false") << "\n";
    } else {
        out.os() << "recursive:      " << recursive.to_string() << "\n";
        out.os() << "faulhaber:      " << direct.to_string() << "\n";
        out.os() << "bernoulli-poly: " << via_bpoly.to_string() << "\n";
        out.os() << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1; // a disagreement would be an implementation bug
}

std::vector<VerificationReport> dispatch_verify(const std::string& identity,
                                                const std::optional<IndexRange>& range,
                                                const BernoulliTable& table)
{
    namespace defaults = faulhaber::default_ranges;
    if (identity == "all")
        return faulhaber::run_all_checks(table);
    if (identity == "lemma-2-3")
        return {faulhaber::check_lemma_2_3(range.value_or(defaults::lemma_2_3))};
    if (identity == "lemma-2-4")
        return {faulhaber::check_lemma_2_4(range.value_or(defaults::lemma_2_4))};
    if (identity == "gessel") {
        const IndexRange r = range.value_or(IndexRange{0, defaults::gessel_max});
        if (r.lo != 0 || r.hi < 0)
            throw std::invalid_argument("gessel sweeps start at 0; use --range 0..B");
        const auto top = static_cast<std::size_t>(r.hi);
        return {faulhaber::check_gessel(top, top, table)};
    }
    if (identity == "eq-3")
        return {faulhaber::check_eq3(range.value_or(defaults::eq3), table)};
    if (identity == "theorem-3-4")
        return {faulhaber::check_theorem_3_4(range.value_or(defaults::theorem_3_4), table)};
    if (identity == "symmetry")
        return {faulhaber::check_symmetry(range.value_or(defaults::symmetry))};
    if (identity == "bernoulli-symmetry")
        return {faulhaber::check_bernoulli_poly_symmetry(
            range.value_or(defaults::bernoulli_poly_symmetry), table)};
    throw std::invalid_argument("unknown identity: " + identity);
}

int run_verify(const std::string& identity, const std::optional<IndexRange>& range,
               long long perturb_b, const std::string& format, const std::string& out_path)
{
    BernoulliTable pristine;
    const BernoulliTable table =
        perturb_b >= 0 ? pristine.perturbed(static_cast<std::size_t>(perturb_b), Rational(1))
                       : pristine;

    const std::vector<VerificationReport> reports = dispatch_verify(identity, range, table);
    OutputTarget out(out_path);
    bool all_passed = true;
    if (format == "json") {
        nlohmann::ordered_json array = nlohmann::ordered_json::array();
        for (const auto& report : reports)
            array.push_back(report.to_json());
        out.os() << array.dump(2) << "\n";
    } else if (format == "csv") {
        for (const auto& report : reports)
            out.os() << report.identity << "," << report.checked << "," << report.failures.size()
                     << "\n";
    } else {
        for (const auto& report : reports)
            out.os() << report.to_text() << "\n";
    }
    for (const auto& report : reports)
        all_passed = all_passed && report.passed();
    if (format == "text")
        out.os() << (all_passed ? "all identities verified" : "FAILURES detected") << "\n";
    return all_passed ? 0 : 1;
}

int run_roots(const std::optional<long long>& p, const std::optional<IndexRange>& range,
              long long precision_bits, const std::string& format, const std::string& out_path)
{
    IndexRange sweep{};
    if (p)
        sweep = IndexRange{*p, *p};
    else if (range)
        sweep = *range;
    else
        throw std::invalid_argument("roots: provide --p or --range");
    if (sweep.lo < 1)
        throw std::invalid_argument("roots: p must be >= 1");

    BernoulliTable table;
    std::vector<faulhaber::RootReport> reports;
    for (long long q = sweep.lo; q <= sweep.hi; ++q)
        reports.push_back(faulhaber::analyze(static_cast<unsigned>(q),
                                             static_cast<unsigned>(precision_bits), table));

    OutputTarget out(out_path);
    if (format == "json") {
        if (reports.size() == 1) {
            out.os() << reports.front().to_json().dump(2) << "\n";
        } else {
            nlohmann::ordered_json array = nlohmann::ordered_json::array();
            for (const auto& report : reports)
                array.push_back(report.to_json());
            out.os() << array.dump(2) << "\n";
        }
    } else if (format == "csv") {
        for (const auto& report : reports)
            out.os() << report.csv_row() << "\n";
    } else {
        for (const auto& report : reports)
            out.os() << report.to_text() << "\n";
    }
    return 0;
}

int run_table(long long p, long long max_n, const std::string& format,
              const std::string& out_path)
{
    BernoulliTable table;
    const auto power = static_cast<unsigned>(p);
    const faulhaber::Polynomial s = faulhaber::powersum_faulhaber(power, table);
    OutputTarget out(out_path);

    std::vector<std::string> values;
    for (long long n = 1; n <= max_n; ++n) {
        const Rational value = s.evaluate(Rational(n));
        values.push_back(value.to_string()); // integral for integer n
    }
    if (format == "json") {
        nlohmann::ordered_json entry;
        entry["p"] = power;
        entry["values"] = values;
        out.os() << entry.dump(2) << "\n";
    } else if (format == "csv") {
        for (long long n = 1; n <= max_n; ++n)
            out.os() << n << "," << values[static_cast<std::size_t>(n - 1)] << "\n";
    } else {
        for (long long n = 1; n <= max_n; ++n)
            out.os() << "S_" << power << "(" << n << ") = "
                     << values[static_cast<std::size_t>(n - 1)] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact power-sum polynomials, Bernoulli numbers, identity "
                 "verification and root analysis"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::string range_text;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };

    auto* bernoulli = app.add_subcommand("bernoulli", "Print B_0..B_max as exact rationals");
    long long max_m = 0;
    bernoulli->add_option("--max-m", max_m, "Highest Bernoulli index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(bernoulli);

    auto* powersum = app.add_subcommand("powersum", "Construct the polynomial S_p(n)");
    long long power = 1;
    std::string method = "recursive";
    powersum->add_option("--p", power, "Power p >= 1")->required()->check(CLI::PositiveNumber);
    powersum
        ->add_option("--method", method,
                     "Construction: recursive, faulhaber, bernoulli-poly or all")
        ->check(CLI::IsMember({"recursive", "faulhaber", "bernoulli-poly", "all"}))
        ->capture_default_str();
    add_common(powersum);

    auto* verify = app.add_subcommand("verify", "Machine-verify the identity sweeps");
    std::string identity = "all";
    long long perturb_b = -1;
    verify
        ->add_option("--identity", identity,
                     "lemma-2-3, lemma-2-4, gessel, eq-3, theorem-3-4, symmetry, "
                     "bernoulli-symmetry or all")
        ->check(CLI::IsMember({"lemma-2-3", "lemma-2-4", "gessel", "eq-3", "theorem-3-4",
                               "symmetry", "bernoulli-symmetry", "all"}))
        ->capture_default_str();
    verify->add_option("--range", range_text, "Sweep range A..B (single identities only)");
    verify->add_option("--perturb-b", perturb_b,
                       "Self-test hook: add 1 to B_m before verifying (expect failures)");
    add_common(verify);

    auto* roots = app.add_subcommand("roots", "Exact and numerical roots of S_p(n)");
    std::optional<long long> roots_p;
    long long precision_bits = 256;
    roots->add_option("--p", roots_p, "Single power p >= 1");
    roots->add_option("--range", range_text, "Range of powers A..B");
    roots->add_option("--precision-bits", precision_bits, "Solver precision (>= 64)")
        ->check(CLI::Range(64LL, 1LL << 20))
        ->capture_default_str();
    add_common(roots);

    auto* table_cmd = app.add_subcommand("table", "Exact values S_p(1..n_max)");
    long long table_p = 1;
    long long max_n = 1;
    table_cmd->add_option("--p", table_p, "Power p >= 1")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
    add_common(table_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<IndexRange> range;
        if (!range_text.empty())
            range = IndexRange::parse(range_text);

        if (bernoulli->parsed())
            return run_bernoulli(max_m, format, out_path);
        if (powersum->parsed())
            return run_powersum(power, method, format, out_path);
        if (verify->parsed())
            return run_verify(identity, range, perturb_b, format, out_path);
        if (roots->parsed())
            return run_roots(roots_p, range, precision_bits, format, out_path);
        if (table_cmd->parsed())
            return run_table(table_p, max_n, format, out_path);
    } catch (const faulhaber::solver_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
