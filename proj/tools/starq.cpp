#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <starq/cli/commands.hpp>

int main(int argc, char **argv)
{
    CLI::App app{"Exact star-product and equivalence-morphism engine"};
    app.set_version_flag("--version", starq::engine_version());
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path;
    starq::CommandOptions options;
    bool no_timing = false;
    std::size_t order = 0;
    unsigned max_degree = 0;
    std::string f;
    std::string g;

    struct Sub {
        const char *name;
        const char *help;
    };
    const Sub subs[] = {{"validate", "check the star-product axioms and quantum canonicity"},
                        {"derive", "derive the equivalence morphism S order by order"},
                        {"verify-tables", "compare closed-form S2/S4 against the derived operators"},
                        {"apply", "evaluate f * g, the deformed bracket and S f"}};
    for (const auto &sub : subs) {
        CLI::App *cmd = app.add_subcommand(sub.name, sub.help);
        cmd->add_option("spec", spec_path, "problem specification (JSON)")->required();
        cmd->add_option("--order", order, "truncation order N");
        cmd->add_option("--out", out_path, "write the report here instead of standard output");
        cmd->add_flag("--no-timing", no_timing, "omit timing fields");
        cmd->add_option("--max-degree", max_degree, "verification degree bound");
        if (std::string(sub.name) == "apply") {
            cmd->add_option("--f", f, "left polynomial");
            cmd->add_option("--g", g, "right polynomial");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : starq::exit_parse_error;
    }

    CLI::App *cmd = app.get_subcommands().front();
    if (cmd->count("--order") > 0) {
        options.order = order;
    }
    if (cmd->count("--max-degree") > 0) {
        options.max_degree = max_degree;
    }
    if (cmd->get_option_no_throw("--f") && cmd->count("--f") > 0) {
        options.f = f;
    }
    if (cmd->get_option_no_throw("--g") && cmd->count("--g") > 0) {
        options.g = g;
    }
    options.timing = !no_timing;

    const starq::CommandResult result = starq::run_command(cmd->get_name(), spec_path, options);
    const std::string text = result.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "starq: cannot write '" << out_path << "'\n";
            return starq::exit_parse_error;
        }
        out << text;
    }
    std::cerr << result.summary << "\n";
    return result.exit_code;
}
