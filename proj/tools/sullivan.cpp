#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sullivan/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sullivan - minimal Sullivan algebra toolkit"};
    app.require_subcommand(1);

    std::string model_path;
    std::string certificate_path;
    std::string denominator = "auto";
    sullivan::RunOptions options;

    const std::vector<std::string> commands = {
        "cohomology", "hilbert",        "presentation",      "classify", "standard-form",
        "unravel",    "loop-homology",  "duality",           "hochschild-predict", "verify"};

    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("model", model_path, "model description file")->required();
        sub->add_option("--max-codegree", options.max_codegree, "cohomology truncation bound");
        sub->add_option("--max-degree", options.max_degree, "loop-homology truncation bound");
        sub->add_option("--denominator", denominator, "comma-separated degrees d for (1-t^d), or 'auto'");
        sub->add_option("--format", options.format, "text | machine")
            ->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--seed", options.seed, "seed for randomized self-tests");
        if (name == "verify")
            sub->add_option("--certificate", certificate_path, "machine report containing the certificate")
                ->required();
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (denominator != "auto") {
            options.denominator_auto = false;
            std::stringstream ss(denominator);
            std::string item;
            while (std::getline(ss, item, ',')) options.denominator.push_back(std::stoi(item));
        }
        std::string model_text = read_file(model_path);
        if (!certificate_path.empty()) options.certificate_text = read_file(certificate_path);

        sullivan::RunResult result = sullivan::run(command, model_text, options);
        std::cout << (options.format == "machine" ? result.machine : result.text);
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
