#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bsmg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact stalk/costalk transition matrices, defects and "
                 "characters on Bruhat moment graphs"};
    app.require_subcommand(1);

    bsmg::RunConfig cfg;
    std::string type = "A";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "Cartan type letter (A..G)");
        cmd->add_option("--rank", cfg.rank, "rank of the root system");
        cmd->add_flag("--affine", cfg.affine, "use the affine Weyl group");
        cmd->add_option("--char", cfg.characteristic, "field characteristic (0 or odd prime)");
        cmd->add_option("--cache-dir", cfg.cache_dir, "result cache directory (env CACHE_DIR)");
        cmd->add_option("--threads", cfg.threads, "worker threads for census");
        cmd->add_flag("--pretty", cfg.pretty, "pretty-print JSON");
        cmd->add_flag("--verify-cache", cfg.verify_cache, "recompute and compare cache hits");
        return cmd;
    };

    auto* roots = add_common(app.add_subcommand("roots", "dump the root system"));
    auto* group = add_common(app.add_subcommand("group", "enumerate a Bruhat interval"));
    group->add_option("--word", cfg.word, "top element as a word")->required();
    auto* gkm = add_common(app.add_subcommand("gkm", "GKM report for an interval"));
    gkm->add_option("--word", cfg.word, "top element as a word")->required();
    auto* tree = add_common(app.add_subcommand("tree", "subword tree T(s,x)"));
    tree->add_option("--word", cfg.word, "the sequence s")->required();
    tree->add_option("--x", cfg.target, "target element as a word")->required();
    auto* grk = add_common(app.add_subcommand("grk", "graded rank of a stalk"));
    grk->add_option("--word", cfg.word, "the sequence s")->required();
    grk->add_option("--x", cfg.target, "target element as a word")->required();
    auto* phi = add_common(app.add_subcommand("phi", "stalk-to-costalk transition matrix"));
    phi->add_option("--word", cfg.word, "the sequence s")->required();
    phi->add_option("--x", cfg.target, "target element as a word")->required();
    auto* defect = add_common(app.add_subcommand("defect", "defect polynomial at x"));
    defect->add_option("--word", cfg.word, "the sequence s")->required();
    defect->add_option("--x", cfg.target, "target element as a word")->required();
    auto* dec = add_common(app.add_subcommand("decompose", "direct sum decomposition"));
    dec->add_option("--word", cfg.word, "the sequence s")->required();
    dec->add_flag("--allow-nonreduced", cfg.allow_nonreduced,
                  "accept non-reduced words (experimental output)");
    auto* character = add_common(app.add_subcommand("character", "indecomposable character table"));
    character->add_option("--word", cfg.word, "the element w as a word")->required();
    auto* kl = add_common(app.add_subcommand("kl", "Kazhdan-Lusztig basis element"));
    kl->add_option("--word", cfg.word, "the element w as a word")->required();
    auto* census = add_common(app.add_subcommand("census", "count n-reachable elements"));
    census->add_option("--n", cfg.n, "reachability bound")->required();
    (void)roots;

    CLI11_PARSE(app, argc, argv);

    if (type.size() != 1) {
        std::cerr << "{\"error\":\"UsageError\",\"message\":\"bad type\"}\n";
        return 1;
    }
    cfg.type = type[0];
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

    bsmg::RunResult result = bsmg::dispatch(cfg);
    std::cout << result.json_text;
    return result.exit_code;
}
