#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

fs::path workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "entropia_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome entropia(const std::string& args, const std::string& env = "") {
    const auto out = workdir() / "stdout.txt";
    const auto err = workdir() / "stderr.txt";
    const std::string cmd = env + " " + ENTROPIA_BIN + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out), read_file(err)};
}

}  // namespace

TEST_CASE("report chebyshev writes JSON and exits 0") {
    const auto dir = workdir() / "cheb";
    const auto r = entropia("report chebyshev --n 1000000 --format json --out " + dir.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS chebyshev.ratio_in_range") != std::string::npos);
    const auto j = nlohmann::json::parse(read_file(dir / "chebyshev.json"));
    CHECK(j["name"] == "chebyshev");
    CHECK(std::abs(j["scalars"]["ratio"].get<double>() - 0.904) < 0.001);
}

TEST_CASE("identical invocations give byte-identical JSON") {
    for (const std::string exp : {"erdos-kac", "predictor", "lz-primes", "source-coding"}) {
        const auto a = workdir() / ("det_a_" + exp);
        const auto b = workdir() / ("det_b_" + exp);
        const std::string args = "report " + exp + " --n 200000 --sample 5000 --seed 9 --out ";
        const auto ra = entropia(args + a.string());
        const auto rb = entropia(args + b.string());
        CHECK(ra.code == rb.code);
        REQUIRE(fs::directory_iterator(a) != fs::directory_iterator());
        for (const auto& entry : fs::directory_iterator(a))
            CHECK_MESSAGE(read_file(entry.path()) == read_file(b / entry.path().filename()), exp);
    }
}

TEST_CASE("smoke: erdos-kac at N=100 with a sample of 10") {
    const auto r = entropia("report erdos-kac --n 100 --sample 10 --out " + (workdir() / "ek").string());
    CHECK((r.code == 0 || r.code == 2));
    CHECK(fs::exists(workdir() / "ek" / "erdos_kac.json"));
}

TEST_CASE("sieve cache idempotence") {
    const auto cache = workdir() / "primes.pbit";
    const auto first = entropia("sieve --n 1000000 --cache " + cache.string());
    CHECK(first.code == 0);
    CHECK(first.out.find("pi(1000000) = 78498") != std::string::npos);
    CHECK(first.err.find("cache hit") == std::string::npos);
    const auto second = entropia("sieve --n 1000000 --cache " + cache.string());
    CHECK(second.code == 0);
    CHECK(second.err.find("cache hit") != std::string::npos);
    CHECK(second.err.find("sieved") == std::string::npos);

    // reports reuse the cache too
    const auto rep = entropia("report riemann --cache " + cache.string() + " --out " + (workdir() / "rie").string());
    CHECK(rep.code == 0);
    CHECK(rep.err.find("cache hit") != std::string::npos);

    std::ofstream(cache, std::ios::binary | std::ios::trunc) << "garbage";
    const auto broken = entropia("sieve --n 1000000 --cache " + cache.string());
    CHECK(broken.code == 0);
    CHECK(broken.err.find("warning") != std::string::npos);
}

TEST_CASE("usage and domain errors exit 1") {
    CHECK(entropia("report bogus").code == 1);
    CHECK(entropia("report chebyshev --format xml").code == 1);
    CHECK(entropia("").code == 1);
    CHECK(entropia("report chebyshev --n 1 --out " + (workdir() / "x").string()).code == 1);
    CHECK(entropia("report hardy-ramanujan --n 1000 --epsilon -1 --out " + (workdir() / "x").string()).code == 1);
    CHECK(entropia("game serve --alphabet /nonexistent.csv").code == 1);
    CHECK(entropia("--help").code == 0);
}

TEST_CASE("failed checks exit 2") {
    const auto r = entropia("report hardy-ramanujan --out " + (workdir() / "hr").string());
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL hardy_ramanujan.fraction_nondecreasing") != std::string::npos);
}

TEST_CASE("CSV output and ENTROPIA_OUT") {
    const auto dir = workdir() / "env_out";
    const auto r = entropia("report pnt --format csv", "ENTROPIA_OUT=" + dir.string());
    CHECK(r.code == 0);
    CHECK(read_file(dir / "pnt_scalars.csv").rfind("metric,value\n", 0) == 0);
    CHECK(read_file(dir / "pnt_checks.csv").rfind("check,passed\n", 0) == 0);
    CHECK(read_file(dir / "pnt_S_c.csv").rfind("x,y\n", 0) == 0);

    // an explicit --out wins over the environment
    const auto explicit_dir = workdir() / "explicit";
    CHECK(entropia("report pnt --out " + explicit_dir.string(), "ENTROPIA_OUT=" + dir.string()).code == 0);
    CHECK(fs::exists(explicit_dir / "pnt.json"));
}

TEST_CASE("source coding from a distribution file") {
    const auto csv = workdir() / "dist.csv";
    std::ofstream(csv) << "symbol,weight\na,2\nb,1\nc,1\n";
    const auto dir = workdir() / "sc";
    const auto r = entropia("report source-coding --n 100000 --dist " + csv.string() + " --out " + dir.string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(read_file(dir / "source_coding.json"));
    CHECK(std::abs(j["scalars"]["bits_per_symbol"].get<double>() - 1.5) <= 0.01);
}
