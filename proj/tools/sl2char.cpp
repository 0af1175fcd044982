// Command-line driver: identity verification suites, table dumps, and the
// report schema.  All output is exact; no floating point anywhere.

#include "sl2char/oracle.hpp"
#include "sl2char/report.hpp"
#include "sl2char/suites.hpp"
#include "sl2char/tables.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

std::vector<long> parse_primes(const std::string& csv) {
    std::vector<long> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

int write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    f << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the depth-zero SL(2) character identities"};
    app.require_subcommand(1);

    std::string primes_csv = "3,5,7,11,13";
    sl2char::RunConfig config;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--primes", primes_csv, "comma-separated primes from {3,5,7,11,13}");
    verify->add_option("--n-max", config.n_max, "depth-index bound for the table grids (1..6)");
    verify->add_option("--suite", config.suite,
                       "gauss|green|fourier|tables|oracle|formula|endoscopy|relations|all");
    verify->add_option("--erratum-branch", config.erratum_branch, "corrected|printed|both");
    verify->add_option("--format", config.format, "json|tsv");
    verify->add_option("--output", config.output, "report file (default: stdout)");

    std::string outdir = ".";
    std::string dump_variant = "corrected";
    auto* dump = app.add_subcommand("dump-tables", "write every table as TSV");
    dump->add_option("--outdir", outdir, "directory for the TSV files");
    dump->add_option("--variant", dump_variant, "corrected|printed");

    app.add_subcommand("schema", "print the JSON report schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("verify")) {
            config.primes = parse_primes(primes_csv);
            config.validate();
            sl2char::oracle_set_progress([](const char* msg) { std::cerr << msg << "\n"; });
            auto reports = sl2char::build_reports(config);
            std::string body = config.format == "json" ? sl2char::to_json(reports)
                                                       : sl2char::to_tsv(reports);
            int rc = write_out(config.output, body);
            if (rc != 0) return rc;
            for (const auto& r : reports)
                if (!r.all_pass()) return 1;
            return 0;
        }
        if (app.got_subcommand("dump-tables")) {
            if (dump_variant != "corrected" && dump_variant != "printed") {
                std::cerr << "unknown variant: " << dump_variant << "\n";
                return 2;
            }
            auto variant = dump_variant == "corrected" ? sl2char::TableVariant::Corrected
                                                       : sl2char::TableVariant::Printed;
            std::filesystem::create_directories(outdir);
            for (const auto& table : sl2char::dump_tables(variant)) {
                std::string path = outdir + "/" + table.name + ".tsv";
                std::ofstream f(path, std::ios::binary);
                if (!f) {
                    std::cerr << "cannot open output file: " << path << "\n";
                    return 2;
                }
                f << "# table: " << table.name << " (" << dump_variant << ")\n" << table.tsv;
            }
            return 0;
        }
        // schema
        std::cout << sl2char::report_schema();
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
