#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcd/report.hpp"

namespace {

std::pair<long long, long long> parse_alpha(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument("");
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (num <= 0 || den <= 0 || 3 * num >= 2 * den) throw std::invalid_argument("");
        return {num, den};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --alpha '" + text + "', expected NUM/DEN in (0, 2/3)");
    }
}

bool write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return false;
    }
    out << text;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants, homomorphisms and exhaustive verification for triangle-free graphs "
                 "with large minimum common degree"};
    app.require_subcommand(1);

    std::string input, output, format = "json", corpus, theorem, predicate, family, nrange = "0";
    std::vector<std::string> alpha_args;
    mcd::RunOptions opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output,-o", output, "write report to this file (default stdout)");
        cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--jobs,-j", opt.jobs, "worker threads, 0 = all available");
        cmd->add_option("--seed", opt.seed, "seed for random corpora");
    };
    auto add_corpus = [&](CLI::App* cmd) {
        cmd->add_option("--n", nrange, "vertex range A..B or a single N")->required();
        cmd->add_option("--corpus", corpus, "enumerated | all | random | maximal | file:PATH");
        cmd->add_option("--count", opt.count, "graphs in a random/maximal corpus");
        cmd->add_option("--p", opt.p, "edge probability; omit to draw per graph");
    };

    auto* analyze = app.add_subcommand("analyze", "full invariant record per input graph");
    analyze->add_option("--input,-i", input,
                        "g6/edge-list file, '-' for stdin, or named:.. | blowup:.. | balanced:.. | g6:..")
        ->required();
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "check a statement over a corpus, count violations");
    verify->add_option("--theorem", theorem, "one of: delta2-bipartite, delta2-c5hom, c5free-bipartite, "
                                             "maximal-delta2, odd-girth, c3c5free-bipartite, mobius-bound, "
                                             "disjoint-d, equality-case")
        ->required()
        ->check(CLI::IsMember(mcd::verify_theorem_ids()));
    verify->add_option("--alpha", alpha_args, "rational alpha NUM/DEN for maximal-delta2 (repeatable)");
    add_corpus(verify);
    add_common(verify);

    auto* search = app.add_subcommand("search", "emit corpus graphs matching a predicate");
    search->add_option("--predicate", predicate,
                       "conjunction, e.g. \"triangle-free & delta2 = n/8 & !hom-c5\"")
        ->required();
    search->add_option("--budget", opt.budget, "stop after scanning this many graphs");
    add_corpus(search);
    add_common(search);

    auto* generate = app.add_subcommand("generate", "write graph6 lines for a family spec");
    generate->add_option("--family", family,
                         "named:EXPR | blowup:PAT:[sizes] | balanced:PAT:N | enum:trianglefree:RANGE | "
                         "enum:all:RANGE | random:N:P:SEED[:COUNT] | maximal:N:P:SEED[:COUNT]")
        ->required();
    generate->add_option("--output,-o", output, "write graph6 lines here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!alpha_args.empty()) {
            opt.alphas.clear();
            for (const auto& a : alpha_args) opt.alphas.push_back(parse_alpha(a));
        }
        if (analyze->parsed()) {
            auto report = mcd::run_analyze(input, opt);
            return write_output(mcd::render_report(report, format), output) ? 0 : 2;
        }
        if (verify->parsed()) {
            if (corpus.empty()) corpus = theorem == "c5free-bipartite" ? "all" : "enumerated";
            auto report = mcd::run_verify(theorem, corpus, mcd::parse_n_range(nrange), opt);
            if (!write_output(mcd::render_report(report, format), output)) return 2;
            return report.violations > 0 ? 1 : 0;
        }
        if (search->parsed()) {
            if (corpus.empty()) corpus = "enumerated";
            auto report = mcd::run_search(predicate, corpus, mcd::parse_n_range(nrange), opt);
            return write_output(mcd::render_report(report, format), output) ? 0 : 2;
        }
        // generate
        long long written = 0;
        if (output.empty() || output == "-") {
            written = mcd::run_generate(family, std::cout, opt);
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open output file " << output << "\n";
                return 2;
            }
            written = mcd::run_generate(family, out, opt);
        }
        std::cerr << "wrote " << written << " graph" << (written == 1 ? "" : "s") << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
