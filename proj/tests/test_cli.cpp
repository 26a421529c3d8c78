#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(ZSR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Workdir {
public:
    Workdir()
    {
        path_ = fs::temp_directory_path() / ("zsr_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path_);
        write("p7.forest", "forest 7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
        write("c4.forest", "forest 4 4\n0 1\n1 2\n2 3\n0 3\n");
        write("star3.forest", "# K_{1,3}\nforest 4 3\n0 1\n0 2\n0 3\n");
        write("p3.forest", "forest 3 2\n0 1\n1 2\n");
        write("loop.forest", "forest 3 3\n0 1\n1 2\n0 2\n");
        write("broken.forest", "forest 3 2\n0 1\n");
    }
    ~Workdir() { fs::remove_all(path_); }

    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

    std::string read(const std::string& name) const
    {
        std::ifstream in(path_ / name);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

private:
    fs::path path_;
};

std::string without_timings(const std::string& report)
{
    std::istringstream in(report);
    std::string out;
    for (std::string line; std::getline(in, line);)
        if (line.rfind("elapsed_ms", 0) != 0)
            out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("cli: random, find, verify")
{
    Workdir w;
    REQUIRE(run("random --n 22 --p 3 --seed 7 --out " + (w / "k22.clique")).code == 0);
    CHECK(w.read("k22.clique").find("mt19937_64") != std::string::npos);

    const Run found = run("find --forest " + (w / "p7.forest") + " --clique " + (w / "k22.clique") + " --out " +
                          (w / "r1.txt"));
    CHECK(found.code == 0);
    const std::string report = w.read("r1.txt");
    CHECK(report.rfind("zsr-report v1\n", 0) == 0);
    CHECK(report.find("case_used = BruteForceFallback") == std::string::npos);
    CHECK(report.find("sum = 0") != std::string::npos);

    CHECK(run("verify --report " + (w / "r1.txt") + " --forest " + (w / "p7.forest") + " --clique " +
              (w / "k22.clique"))
              .code == 0);

    // Same inputs, same report apart from timings.
    REQUIRE(run("find --forest " + (w / "p7.forest") + " --clique " + (w / "k22.clique") + " --out " +
                (w / "r2.txt"))
                .code == 0);
    CHECK(without_timings(w.read("r1.txt")) == without_timings(w.read("r2.txt")));
    REQUIRE(run("random --n 22 --p 3 --seed 7 --out " + (w / "again.clique")).code == 0);
    CHECK(w.read("again.clique") == w.read("k22.clique"));

    // A tampered report fails verification.
    std::string bad = report;
    const auto at = bad.find("embedding = ");
    bad.replace(at, 14, "embedding = 0:21,");
    w.write("bad.txt", bad);
    CHECK(run("verify --report " + (w / "bad.txt") + " --forest " + (w / "p7.forest") + " --clique " +
              (w / "k22.clique"))
              .code == 1);
}

TEST_CASE("cli: classify")
{
    Workdir w;
    REQUIRE(run("random --n 12 --p 3 --seed 1 --out " + (w / "k.clique")).code == 0);
    const Run r = run("classify --forest " + (w / "p7.forest") + " --clique " + (w / "k.clique"));
    CHECK(r.code == 0);
    CHECK(r.out.find("bushy = false") != std::string::npos);
    CHECK(r.out.find("switchable = ") != std::string::npos);
}

TEST_CASE("cli: ramsey exit codes")
{
    Workdir w;
    const Run c4 = run("ramsey --graph " + (w / "c4.forest") + " --k 2 --max-n 6");
    CHECK(c4.code == 0);
    CHECK(c4.out.find("value = 4\n") != std::string::npos);

    CHECK(run("ramsey --graph " + (w / "c4.forest") + " --k 2 --max-n 3").code == 1);
    CHECK(run("ramsey --graph " + (w / "star3.forest") + " --k 3 --max-n 6 --budget 100").code == 3);

    const Run resumed = run("ramsey --graph " + (w / "star3.forest") + " --k 3 --max-n 7 --jobs 2 --checkpoint " +
                            (w / "ck.txt"));
    CHECK(resumed.code == 0);
    CHECK(resumed.out.find("value = 6\n") != std::string::npos);
    CHECK(fs::exists(w / "ck.txt"));
    const Run again = run("ramsey --graph " + (w / "star3.forest") + " --k 3 --max-n 7 --checkpoint " +
                          (w / "ck.txt"));
    CHECK(again.code == 0);
    CHECK(again.out.find("value = 6\n") != std::string::npos);
}

TEST_CASE("cli: extremal star has no zero-sum copy")
{
    Workdir w;
    REQUIRE(run("extremal star --n 4 --p 3 --out " + (w / "ex.clique")).code == 0);
    const Run r = run("find --forest " + (w / "star3.forest") + " --clique " + (w / "ex.clique") + " --no-fallback");
    CHECK(r.code == 1);
    CHECK(r.out.find("found = false") != std::string::npos);
    CHECK(run("find --forest " + (w / "star3.forest") + " --clique " + (w / "ex.clique")).code == 1);
}

TEST_CASE("cli: input errors exit 2")
{
    Workdir w;
    REQUIRE(run("random --n 10 --p 3 --seed 2 --out " + (w / "k.clique")).code == 0);
    CHECK(run("find --forest " + (w / "loop.forest") + " --clique " + (w / "k.clique")).code == 2);
    CHECK(run("find --forest " + (w / "broken.forest") + " --clique " + (w / "k.clique")).code == 2);
    CHECK(run("find --forest " + (w / "p3.forest") + " --clique " + (w / "k.clique")).code == 2);
    CHECK(run("find --forest " + (w / "missing.forest") + " --clique " + (w / "k.clique")).code == 2);
    CHECK(run("random --n 10 --p 4 --seed 2").code == 2);
    CHECK(run("extremal star --n 4 --p 2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
}
