#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bihom/catalog.hpp"
#include "bihom/dsl.hpp"
#include "bihom/error.hpp"
#include "bihom/suites.hpp"

namespace {

int run_document(const std::string& source, const std::string& format,
                 const bihom::dsl::RunOptions& options) {
    bihom::dsl::RunResult result = bihom::dsl::run_source(source, options);
    std::cout << (format == "structured" ? result.structured : result.text);
    return result.success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant checker for twisted algebras and their bimodules"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string mode;
    std::uint64_t seed = 0;

    auto* chk = app.add_subcommand("check", "parse and execute a .bihom document");
    chk->add_option("file", file, "path of the document to execute")->required();
    chk->add_option("--format", format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    auto* mode_opt =
        chk->add_option("--mode", mode,
                        "default mode for mode-capable checks without an explicit mode= attribute")
            ->check(CLI::IsMember({"linearized", "symbolic", "sampled"}));
    auto* seed_opt = chk->add_option(
        "--seed", seed, "default seed for sampled checks without an explicit seed= attribute");

    auto* cat = app.add_subcommand("catalog", "built-in catalog operations");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list built-in catalog entries and suites");

    std::string rformat = "text";
    auto* rep = app.add_subcommand("replicate-paper",
                                   "execute the built-in replication document");
    rep->add_option("--format", rformat, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help/usage or the flag error
        return rc == 0 ? 0 : 1;
    }

    try {
        if (chk->parsed()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open '" << file << "'\n";
                return 1;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            bihom::dsl::RunOptions options;
            if (mode_opt->count() > 0) options.mode_override = mode;
            if (seed_opt->count() > 0) options.seed_override = seed;
            return run_document(buf.str(), format, options);
        }
        if (cat->parsed()) {
            auto entries = bihom::catalog_list();
            std::size_t width = 0;
            for (const auto& e : entries) width = std::max(width, e.name.size());
            std::cout << "catalog entries:\n";
            for (const auto& e : entries)
                std::cout << "  " << e.name << std::string(width - e.name.size() + 2, ' ')
                          << e.summary << "\n";
            std::cout << "suites:\n";
            for (const auto& name : bihom::suite_names()) std::cout << "  " << name << "\n";
            return 0;
        }
        return run_document(bihom::dsl::builtin_replication_document(), rformat, {});
    } catch (const bihom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
