#include "vanhom/report_io.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"vanishing homology ranks of projective hypersurfaces with curve singularities"};
    vanhom::RunOptions opts;
    std::string mode = "auto";
    std::string format = "text";
    app.add_option("input", opts.input_path, "singularity config document (JSON)")->required();
    app.add_option("--mode", mode, "auto, exact or rank")
        ->check(CLI::IsMember({"auto", "exact", "rank"}));
    app.add_flag("--oracle", opts.run_oracle, "cross-check with the chain-level model");
    app.add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--assume-phi-injective", opts.assume_phi_injective,
                 "assert ker Phi_{n+1} = 0 when deriving absolute ranks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (mode == "exact")
        opts.mode = vanhom::ComputeMode::Exact;
    else if (mode == "rank")
        opts.mode = vanhom::ComputeMode::Rank;
    if (format == "machine") opts.format = vanhom::OutputFormat::Machine;

    vanhom::RunOutcome out = vanhom::run(opts);
    std::cout << out.output;
    std::cerr << out.errors;
    return out.exit_code;
}
