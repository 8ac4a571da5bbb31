#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "enumfpt/cli.hpp"

int main(int argc, char** argv) {
    using enumfpt::cli::Format;
    using enumfpt::cli::Mode;
    using enumfpt::cli::RunConfig;

    CLI::App app{"Ordered enumeration of bounded-size solutions with FPT delay"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "all";
    std::string format = "text";
    long long parameter = -1;
    unsigned long long limit = 0;

    for (const std::string& name : enumfpt::cli::problem_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input_path, "instance file")->required();
        auto* kopt = sub->add_option("-k,--parameter", parameter,
                                     "solution size budget (closest-string: overrides d)");
        kopt->check(CLI::NonNegativeNumber);
        if (name != "closest-string") kopt->required();
        sub->add_option("--mode", mode, "all | min")
            ->check(CLI::IsMember({"all", "min"}));
        sub->add_option("--limit", limit, "stop after N solutions")
            ->check(CLI::PositiveNumber);
        if (name == "weak-backdoor" || name == "strong-backdoor")
            sub->add_option("--class", cfg.base_class, "base class")
                ->check(CLI::IsMember({"horn", "2cnf"}));
        sub->add_flag("--stats", cfg.stats, "print a delay report to stderr");
        sub->add_flag("--oracle-check", cfg.oracle_check,
                      "compare the stream against the brute-force oracle");
        sub->add_option("--format", format, "text | json-lines")
            ->check(CLI::IsMember({"text", "json-lines"}));
        sub->callback([&cfg, name] { cfg.problem = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // parse/config errors exit 2
    }

    if (parameter >= 0) cfg.parameter = static_cast<int>(parameter);
    if (limit > 0) cfg.limit = limit;
    cfg.mode = mode == "min" ? Mode::Min : Mode::All;
    cfg.format = format == "json-lines" ? Format::JsonLines : Format::Text;

    return enumfpt::cli::run(cfg, std::cout, std::cerr);
}
