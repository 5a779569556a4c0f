// exact arithmetic for Leibniz and Lie algebras in the linear-map category:
// axiom checking, liezation, enveloping dialgebras and formal integration
#include "coquecigrue/errors.hpp"
#include "coquecigrue/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"exact Leibniz/Lie algebra toolkit"};
    app.require_subcommand(1);

    std::string path;
    coquecigrue::RunOptions options;
    bool as_json = false;

    auto add_command = [&](const std::string& name, const std::string& help,
                           bool takes_order) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("file", path, "input description file")->required();
        if (takes_order)
            cmd->add_option("--order", options.order, "truncation order")
                ->check(CLI::Range(1, 12));
        cmd->add_option("--degree", options.degree, "dialgebra sweep degree bound")
            ->check(CLI::Range(0, 12));
        if (takes_order)
            cmd->add_option("--triv", options.triv, "trivialization: left, sym or both")
                ->check(CLI::IsMember({"left", "sym", "both"}));
        cmd->add_flag("--json", as_json, "machine readable output");
        return cmd;
    };

    add_command("check", "verify the axioms of the input", false);
    add_command("liezation", "quotient a Leibniz algebra by its squares ideal", false);
    add_command("envelope", "enveloping dialgebra products and axiom sweep", false);
    add_command("integrate", "truncated formal integration", true);
    add_command("oracle", "compare integration with the Dynkin series", true);

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        coquecigrue::InputDocument doc = coquecigrue::parse_input(path);
        coquecigrue::RunReport report = coquecigrue::run_command(command, doc, options);
        std::cout << (as_json ? report.to_json() : report.to_text());
        return report.ok() ? 0 : 1;
    } catch (const coquecigrue::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
