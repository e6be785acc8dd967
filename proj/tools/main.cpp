#include "ddpoly/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run_command(const std::string& path, const ddpoly::RunFlags& flags,
                const std::string& json_path, bool json_only) {
    try {
        ddpoly::RunResult result = ddpoly::run_problem_file(path, flags);
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) {
                throw ddpoly::Error("ValidationError",
                                    "cannot write " + json_path);
            }
            out << result.document.dump(2) << "\n";
        }
        if (json_only) {
            std::cout << result.document.dump(2) << "\n";
        } else {
            std::cout << result.text;
        }
        return 0;
    } catch (const ddpoly::ParseError& e) {
        ddpoly::Json err{{"error",
                          {{"code", e.code()},
                           {"message", e.what()},
                           {"line", e.line()},
                           {"column", e.column()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "ddpoly: " << e.what() << "\n";
        return 1;
    } catch (const ddpoly::Error& e) {
        ddpoly::Json err{
            {"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        std::cerr << "ddpoly: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ddpoly: dimension polynomials of difference-differential modules "
        "and field extensions"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand(
        "run", "execute a problem file and print the report");
    std::string path;
    std::string json_path;
    bool json_only = false;
    ddpoly::RunFlags flags;
    int verify = -1;
    int table = -1;
    run->add_option("problem", path, "problem file")->required();
    run->add_option("--verify", verify,
                    "cross-check every report against the enumeration oracle "
                    "up to this r (mismatch is fatal)");
    run->add_option("--table", table, "value-table limit r_table");
    run->add_option("--json", json_path, "also write the JSON report here");
    run->add_flag("--json-only", json_only,
                  "print the JSON document instead of the text report");
    run->add_flag("--partition-mode", flags.partition_mode,
                  "compute multivariate polynomials over the declared "
                  "partition");
    run->add_flag("--strict-polynomial", flags.strict_polynomial,
                  "treat NotEventuallyPolynomial probe verdicts as errors");

    CLI11_PARSE(app, argc, argv);

    if (verify >= 0) flags.verify = verify;
    if (table >= 0) flags.table = table;
    return run_command(path, flags, json_path, json_only);
}
