#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kummer/errors.hpp"
#include "kummer/projective_counts.hpp"
#include "kummer/report_json.hpp"

namespace kummer::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_b_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 1 || item.front() == '-')
            throw UsageError("--B-list: '" + item + "' is not a positive integer");
        out.push_back(v);
    }
    for (std::size_t k = 1; k < out.size(); ++k)
        if (out[k] <= out[k - 1]) throw UsageError("--B-list must be strictly increasing");
    return out;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact stratification data and point-count checks for product Kummer surfaces", "kummer"};
    app.require_subcommand(1);

    std::string doc_path;
    std::string strategy_name;
    int field_degree = 0;

    auto* analyze = app.add_subcommand("analyze", "first-layer report for a divisor document (JSON)");
    analyze->add_option("path", doc_path, "divisor document")->required();
    analyze->add_option("--strategy", strategy_name, "canonical | singleton | optimize");
    analyze->add_option("--field-degree", field_degree, "degree N of the number field")->check(CLI::PositiveNumber);

    auto* decomp = app.add_subcommand("decompose", "cone decomposition of a divisor document (JSON)");
    decomp->add_option("path", doc_path, "divisor document")->required();
    decomp->add_option("--strategy", strategy_name, "canonical | singleton | optimize");

    std::string g1, g2, c1, c2, b_list;
    auto* region = app.add_subcommand("count-region", "lattice points of the plane region, CSV B,count");
    region->add_option("--g1", g1)->required();
    region->add_option("--g2", g2)->required();
    region->add_option("--c1", c1)->required();
    region->add_option("--c2", c2)->required();
    region->add_option("--B-list", b_list, "comma-separated increasing bounds")->required();

    unsigned degree = 1;
    auto* p1 = app.add_subcommand("count-p1", "points of bounded height on P^1(Q), CSV B,count");
    p1->add_option("--B-list", b_list, "comma-separated increasing bounds")->required();
    p1->add_option("--degree", degree, "count on a rational curve of this degree")->check(CLI::PositiveNumber);

    double tail = 1.0;
    auto* fit = app.add_subcommand("fit", "log-log slope of a B,count CSV read from stdin");
    fit->add_option("--tail", tail, "fraction of largest-B samples to fit")->check(CLI::Range(0.0, 1.0));

    std::string suite;
    unsigned long long seed = 20240601ULL;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", suite, "lattice | decomposition | region | schanuel | all")->required();
    verify->add_option("--seed", seed, "seed for randomised checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (analyze->parsed() || decomp->parsed()) {
            DivisorDocument doc = parse_divisor_document(read_file(doc_path));
            DecompositionStrategy strategy = doc.strategy.value_or(DecompositionStrategy::Canonical);
            if (!strategy_name.empty()) {
                auto s = parse_strategy(strategy_name);
                if (!s) throw UsageError("--strategy: unknown strategy '" + strategy_name + "'");
                strategy = *s;
            }
            if (analyze->parsed()) {
                const int n = field_degree > 0 ? field_degree : doc.field_degree.value_or(1);
                out << to_json(first_layer_report(doc.input, strategy, n)).dump(2) << "\n";
            } else {
                ConeDecomposition d = decompose(doc.input, strategy);
                auto [gm1, gm2] = gammas(d);
                Json warnings = Json::array();
                for (auto [i, j] : doc.input.zero_cells())
                    warnings.push_back("e[" + std::to_string(i) + "][" + std::to_string(j) + "] = 0");
                Json j{{"strategy", to_string(strategy)},
                       {"decomposition", to_json(d)},
                       {"gamma1", to_string(gm1)},
                       {"gamma2", to_string(gm2)},
                       {"denominator", to_string(delta(d))},
                       {"reconstruction", to_json(reconstruct(d))},
                       {"warnings", warnings}};
                out << j.dump(2) << "\n";
            }
            return kOk;
        }
        if (region->parsed()) {
            RegionParams p{parse_flag_rational("--g1", g1), parse_flag_rational("--g2", g2),
                           parse_flag_rational("--c1", c1), parse_flag_rational("--c2", c2), 1};
            auto bounds = parse_b_list(b_list);
            RegionPredicate gate(p);  // fibre-degree precondition even for an empty list
            auto samples = count_sweep(p, bounds);
            write_samples_csv(out, samples);
            return kOk;
        }
        if (p1->parsed()) {
            std::vector<CountSample> samples;
            for (auto B : parse_b_list(b_list)) samples.push_back({B, count_degree_d(B, degree)});
            write_samples_csv(out, samples);
            return kOk;
        }
        if (fit->parsed()) {
            std::vector<CountSample> samples;
            try {
                samples = read_samples_csv(in);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("stdin: ") + e.what());
            }
            out << to_json(fit_exponent(samples, tail)).dump(2) << "\n";
            return kOk;
        }
        if (verify->parsed()) return run_verify(suite, seed, out, err);
    } catch (const DomainError& e) {
        out << Json{{"error", e.kind()}, {"detail", e.what()}}.dump(2) << "\n";
        return kDomain;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace kummer::cli
