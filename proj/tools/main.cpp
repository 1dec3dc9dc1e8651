// Batch verification harness: runs one suite and writes its report.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"
#include "suites.hpp"

int main(int argc, char** argv) {
    using namespace bcq::tools;
    CLI::App app{"Run a verification suite and write a certification report"};
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");
    std::map<std::string, std::string> flags;
    const char* keys[] = {"suite", "n", "maxdeg", "q", "t", "t0", "t1", "t2", "t3", "a", "b", "c", "d",
                          "N", "M", "depth", "tol", "seed", "kmax", "eps0", "out", "format"};
    for (const char* k : keys) app.add_option(std::string("--") + k, flags[k], std::string("override ") + k);
    CLI11_PARSE(app, argc, argv);

    try {
        std::map<std::string, std::string> entries;
        if (!config_path.empty()) entries = read_config_file(config_path);
        for (const auto& [k, v] : flags) {
            if (!v.empty()) entries[k] = v;
        }
        const SuiteConfig cfg = make_config(entries);
        const CertificationReport r = run_suite(cfg);
        emit_report(r, cfg.format, cfg.out);
        return r.failed() == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
