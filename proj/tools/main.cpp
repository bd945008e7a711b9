#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

using namespace csf::cli;

int main(int argc, char** argv) {
    CLI::App app{"Cyclic sum formula toolkit: word algebra operators, exact ranks, necklace counts, MZV checks"};
    app.footer(
        "Index convention: rho_n here is rho_0 = the cyclic-sum map, so rho_n corresponds to rho_{n+1} in\n"
        "some earlier literature. dims prints both the H1 degree k and the relation weight n + k + 1.\n"
        "CZ_THREADS caps the number of worker threads.");

    std::string command = "tables";
    std::string format = "tsv";
    std::string series = "half_split";
    std::string out_path;
    RunConfig cfg;
    std::optional<int> max_weight, n, l;

    app.add_option("--command", command, "tables | dims | necklaces | lucas | verify-sym | verify-num")
        ->capture_default_str();
    app.add_option("--max-weight", max_weight, "weight bound (n + k for rank commands, weight of the index for verify-num)");
    app.add_option("--n", n, "operator level / run length / Lucas step");
    app.add_option("--l", l, "necklace length");
    app.add_option("--cutoff", cfg.cutoff, "series truncation N")->capture_default_str();
    app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
    app.add_option("--format", format, "tsv | json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    app.add_option("--series", series, "half_split | nested")
        ->check(CLI::IsMember({"half_split", "nested"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto parsed = parse_command(command);
    if (!parsed) {
        std::cerr << "unknown command: " << command << '\n';
        return 2;
    }
    cfg.command = *parsed;
    cfg.max_weight = max_weight;
    cfg.n = n;
    cfg.l = l;
    cfg.format = format == "json" ? Format::json : Format::tsv;
    cfg.series = series == "nested" ? csf::Series::nested : csf::Series::half_split;

    CommandOutput result;
    try {
        result = run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << out_path << '\n';
            return 2;
        }
        out << result.text;
    }
    return result.exit_code;
}
