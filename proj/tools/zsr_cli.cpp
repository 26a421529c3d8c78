// zsr: zero-sum Ramsey command-line tool.
//
// Exit codes: 0 success / copy found, 1 negative outcome, 2 input error, 3 budget exceeded.
#include "zsr/classify.hpp"
#include "zsr/embedder.hpp"
#include "zsr/error.hpp"
#include "zsr/extremal.hpp"
#include "zsr/io.hpp"
#include "zsr/oracle.hpp"
#include "zsr/random.hpp"
#include "zsr/report.hpp"
#include "zsr/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

/// Writes to `path`, or stdout when empty. Files are written whole, then renamed into place.
void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            zsr::fail(zsr::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

std::string render(const zsr::Report& r)
{
    std::ostringstream ss;
    zsr::write_report(ss, r);
    return ss.str();
}

struct Inputs {
    std::string forest;
    std::string clique;
    std::string out;
};

int cmd_classify(const Inputs& in)
{
    const auto start = Clock::now();
    const zsr::SimpleGraph g = zsr::read_graph_file(in.forest);
    const zsr::ColoredClique k = zsr::read_clique_file(in.clique);
    zsr::Report r = zsr::classification_report(g, zsr::build_forest(g), k, k.modulus());
    r.set("elapsed_ms", elapsed_ms(start));
    emit(in.out, render(r));
    return exit_ok;
}

int cmd_find(const Inputs& in, bool no_fallback)
{
    const auto start = Clock::now();
    const zsr::SimpleGraph g = zsr::read_graph_file(in.forest);
    const zsr::ColoredClique k = zsr::read_clique_file(in.clique);
    const zsr::Forest f = zsr::build_forest(g);
    try {
        const zsr::CaseReport c = zsr::find_zero_sum_copy(f, k, k.modulus(), !no_fallback);
        zsr::Report r = zsr::find_report(g, f, k, c);
        r.set("elapsed_ms", elapsed_ms(start));
        emit(in.out, render(r));
        return exit_ok;
    } catch (const zsr::Error& e) {
        if (e.kind() != zsr::ErrorKind::NoZeroSumCopy)
            throw;
        zsr::Report r("find");
        zsr::add_inputs(r, g, k);
        r.set("found", false);
        r.set("fallback_allowed", !no_fallback);
        r.set("reason", e.what());
        r.set("elapsed_ms", elapsed_ms(start));
        emit(in.out, render(r));
        return exit_negative;
    }
}

int cmd_verify(const std::string& report_path, const Inputs& in)
{
    std::ifstream rf(report_path);
    if (!rf)
        zsr::fail(zsr::ErrorKind::ParseError, "cannot open '" + report_path + "'");
    const zsr::Report report = zsr::parse_report(rf);
    const zsr::SimpleGraph g = zsr::read_graph_file(in.forest);
    const zsr::ColoredClique k = zsr::read_clique_file(in.clique);
    const zsr::ReportCheck check = zsr::verify_find_report(report, g, k);
    zsr::Report r("verify");
    zsr::add_inputs(r, g, k);
    r.set("valid", check.ok);
    r.set("reason", check.reason);
    emit(in.out, render(r));
    return check.ok ? exit_ok : exit_negative;
}

struct RamseyArgs {
    std::string graph;
    int k = 2;
    int max_n = 0;
    std::uint64_t budget = zsr::default_budget;
    unsigned jobs = 1;
    std::string checkpoint;
    bool no_symmetry = false;
    std::string out;
};

int cmd_ramsey(const RamseyArgs& a)
{
    const auto start = Clock::now();
    const zsr::SimpleGraph g = zsr::read_graph_file(a.graph);
    zsr::EnumerationOptions options;
    options.budget = a.budget;
    options.jobs = a.jobs;
    options.symmetry = !a.no_symmetry;
    if (!a.checkpoint.empty()) {
        if (std::ifstream cf(a.checkpoint); cf)
            options.resume = zsr::parse_checkpoint(cf);
        options.on_checkpoint = [path = a.checkpoint](const zsr::Checkpoint& c) {
            std::ostringstream ss;
            zsr::write_checkpoint(ss, c);
            emit(path, ss.str());
        };
    }
    const zsr::RamseyResult result = zsr::compute_ramsey(g, a.k, a.max_n, options);
    zsr::Report r = zsr::ramsey_report(result);
    r.set("symmetry", options.symmetry);
    r.set("elapsed_ms", elapsed_ms(start));
    emit(a.out, render(r));
    switch (result.status) {
    case zsr::RamseyResult::Status::Found: return exit_ok;
    case zsr::RamseyResult::Status::NotReached: return exit_negative;
    case zsr::RamseyResult::Status::ExceedsBudget: return exit_budget;
    }
    return exit_negative;
}

int cmd_extremal_star(int n, int p, const std::string& out)
{
    const zsr::ColoredClique k = zsr::star_lower_bound_coloring(n, p);
    std::ostringstream ss;
    zsr::write_clique(ss, k,
                      "star lower bound n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                          std::to_string(p - 1) + "-regular circulant colored 1");
    emit(out, ss.str());
    return exit_ok;
}

int cmd_random(int n, int p, std::uint64_t seed, const std::string& out)
{
    if (!zsr::is_prime(p))
        zsr::fail(zsr::ErrorKind::InvalidArgument, "p must be prime");
    zsr::PortableRng rng(seed);
    const zsr::ColoredClique k = zsr::random_coloring(n, p, rng);
    std::ostringstream ss;
    zsr::write_clique(ss, k,
                      "generator " + std::string(zsr::PortableRng::algorithm) + " seed " + std::to_string(seed));
    emit(out, ss.str());
    return exit_ok;
}

int cmd_selftest(const std::vector<int>& ids, std::uint64_t seed, unsigned jobs)
{
    zsr::selftest::Options options;
    options.seed = seed;
    options.jobs = jobs;
    int failed = 0;
    for (int id : ids.empty() ? zsr::selftest::criterion_ids() : ids) {
        const auto r = zsr::selftest::run_criterion(id, options);
        std::cout << zsr::selftest::format(r) << std::endl;
        failed += r.pass ? 0 : 1;
    }
    return failed ? exit_negative : exit_ok;
}

int exit_code_for(zsr::ErrorKind kind)
{
    return kind == zsr::ErrorKind::BudgetExceeded ? exit_budget : exit_input;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero-sum copies of forests in Z_p-colored cliques"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(zsr::artifact_version));

    Inputs in;
    auto* classify = app.add_subcommand("classify", "bushy / vibrant / switchable verdicts with witnesses");
    classify->add_option("--forest", in.forest, "forest file")->required()->check(CLI::ExistingFile);
    classify->add_option("--clique", in.clique, "coloring file")->required()->check(CLI::ExistingFile);
    classify->add_option("--out", in.out, "report file (default stdout)");

    bool no_fallback = false;
    auto* find = app.add_subcommand("find", "find a zero-sum copy of the forest");
    find->add_option("--forest", in.forest, "forest file")->required()->check(CLI::ExistingFile);
    find->add_option("--clique", in.clique, "coloring file")->required()->check(CLI::ExistingFile);
    find->add_flag("--no-fallback", no_fallback, "do not fall back to exhaustive search");
    find->add_option("--out", in.out, "report file (default stdout)");

    std::string report_path;
    auto* verify = app.add_subcommand("verify", "re-check a find report against its input files");
    verify->add_option("--report", report_path, "report file")->required()->check(CLI::ExistingFile);
    verify->add_option("--forest", in.forest, "forest file")->required()->check(CLI::ExistingFile);
    verify->add_option("--clique", in.clique, "coloring file")->required()->check(CLI::ExistingFile);
    verify->add_option("--out", in.out, "report file (default stdout)");

    RamseyArgs ra;
    auto* ramsey = app.add_subcommand("ramsey", "exhaustive R(G, Z_k) up to --max-n");
    ramsey->add_option("--graph", ra.graph, "graph file")->required()->check(CLI::ExistingFile);
    ramsey->add_option("--k", ra.k, "modulus")->required()->check(CLI::Range(2, 255));
    ramsey->add_option("--max-n", ra.max_n, "largest clique order to try")->required()->check(CLI::Range(1, 64));
    ramsey->add_option("--budget", ra.budget, "maximum colorings per order")->capture_default_str();
    ramsey->add_option("--jobs", ra.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    ramsey->add_option("--checkpoint", ra.checkpoint, "checkpoint file, resumed from when present");
    ramsey->add_flag("--no-symmetry", ra.no_symmetry, "visit every coloring");
    ramsey->add_option("--out", ra.out, "report file (default stdout)");

    int en = 0;
    int ep = 0;
    std::string extremal_out;
    auto* extremal = app.add_subcommand("extremal", "extremal colorings");
    extremal->require_subcommand(1);
    auto* star = extremal->add_subcommand("star", "coloring of K_{n+p-2} with no zero-sum (n-1)-star");
    star->add_option("--n", en, "star order")->required();
    star->add_option("--p", ep, "odd prime")->required();
    star->add_option("--out", extremal_out, "coloring file (default stdout)");

    int rn = 0;
    int rp = 0;
    std::uint64_t seed = 0;
    std::string random_out;
    auto* random = app.add_subcommand("random", "uniform random coloring (mt19937_64, rejection-sampled colors)");
    random->add_option("--n", rn, "clique order")->required()->check(CLI::Range(1, 4096));
    random->add_option("--p", rp, "prime modulus")->required()->check(CLI::Range(2, 255));
    random->add_option("--seed", seed, "generator seed")->required();
    random->add_option("--out", random_out, "coloring file (default stdout)");

    std::vector<int> criteria;
    std::uint64_t selftest_seed = zsr::selftest::Options{}.seed;
    unsigned selftest_jobs = 1;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--criterion", criteria, "criterion ids (default all)")->check(CLI::Range(1, 9));
    selftest->add_option("--seed", selftest_seed, "base seed")->capture_default_str();
    selftest->add_option("--jobs", selftest_jobs, "oracle worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*classify)
            return cmd_classify(in);
        if (*find)
            return cmd_find(in, no_fallback);
        if (*verify)
            return cmd_verify(report_path, in);
        if (*ramsey)
            return cmd_ramsey(ra);
        if (*star)
            return cmd_extremal_star(en, ep, extremal_out);
        if (*random)
            return cmd_random(rn, rp, seed, random_out);
        if (*selftest)
            return cmd_selftest(criteria, selftest_seed, selftest_jobs);
    } catch (const zsr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
