#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "incalg/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Involutions of finitary incidence algebras over F_p and Q"};
    app.require_subcommand(1);

    std::string field = "3";
    std::string input;
    incalg::RunOptions opts;
    app.add_option("--field", field, "odd prime p or Q")->capture_default_str();
    app.add_option("--max-size", opts.max_size, "largest poset to enumerate")->capture_default_str();
    app.add_option("--bound", opts.bound, "cap on exhaustive search candidates")->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomised checks")->capture_default_str();

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"components", "connected components and all-comparable elements"},
        {"autos", "automorphisms, anti-automorphisms and poset involutions"},
        {"involutions", "poset involutions, or algebra involutions over --lambda"},
        {"decompose", "lambda-decomposition and the induced structure on components"},
        {"classify", "partition of the algebra involutions into inner-equivalence classes"},
        {"count", "class count by the formula and by brute force"},
        {"general-equiv", "equivalence of --rho and --eta under all automorphisms"},
        {"fractional-check", "fractionality of --sigma and whether Mult is inside Inn"},
        {"verify", "structural checks over the document poset or the internal corpus"},
    };
    for (const auto& s : commands) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", input, "input document ('-' for stdin)");
        sub->add_option("--lambda", opts.lambda, "name of an involution map");
        sub->add_option("--sigma", opts.sigma, "name of a mult block");
        sub->add_option("--rho", opts.rho, "MAP or MAP:UNIT");
        sub->add_option("--eta", opts.eta, "MAP or MAP:UNIT");
        sub->fallthrough();
    }
    app.set_help_flag("-h,--help", "print help");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : incalg::exit_input_error;
    }
    opts.command = app.get_subcommands().front()->get_name();
    if (opts.command == "verify" && app.count("--max-size") == 0)
        opts.max_size = 4;

    try {
        opts.field = incalg::Field::parse(field);
    } catch (const incalg::Error& e) {
        std::cerr << "error = " << incalg::errc_name(e.code()) << ": " << e.what() << '\n';
        return incalg::exit_input_error;
    }

    std::optional<std::string> document;
    if (!input.empty()) {
        if (input == "-") {
            document.emplace(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "error = io: cannot open '" << input << "'\n";
                return incalg::exit_input_error;
            }
            document.emplace(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
    }

    auto result = incalg::run(opts, document);
    std::cout << result.output;
    std::cerr << result.errors;
    return result.exit_code;
}
