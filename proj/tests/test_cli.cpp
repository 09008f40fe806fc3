#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("QGAME_CLI");
    REQUIRE_MESSAGE(env != nullptr, "QGAME_CLI must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const fs::path tmp = fs::temp_directory_path() / "qgame_cli_out.txt";
    const std::string cmd = cli_path() + " " + args + " > " + tmp.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(tmp);
#ifdef _WIN32
    return {raw, buf.str()};
#else
    return {WEXITSTATUS(raw), buf.str()};
#endif
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("surface --help").exit_code == 0);
}

TEST_CASE("bad arguments and specs exit 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("discord --state werner:2.0").exit_code == 2);
    CHECK(run_cli("discord --state bogus:1").exit_code == 2);
    CHECK(run_cli("surface --state werner:0.5 --sweep theta_a,theta_a").exit_code == 2);
}

TEST_CASE("unwritable output path exits 3") {
    const auto r = run_cli("surface --state werner:0 --resolution 5 --out /no/such/dir/s.csv");
    CHECK(r.exit_code == 3);
}

TEST_CASE("surface CSV shape and flat-surface content") {
    const fs::path out = fs::temp_directory_path() / "qgame_surface.csv";
    const auto r = run_cli("surface --state werner:0 --resolution 11 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(read_file(out));
    REQUIRE(rows.size() == 1 + 11 * 11);
    CHECK(rows[0] == "axis1,axis2,value");
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto comma2 = rows[i].rfind(',');
        CHECK(std::stod(rows[i].substr(comma2 + 1)) == doctest::Approx(0.5).epsilon(1e-12));
    }
    fs::remove(out);
}

TEST_CASE("player surfaces sum to one cell-wise") {
    const fs::path out_a = fs::temp_directory_path() / "qgame_a.csv";
    const fs::path out_b = fs::temp_directory_path() / "qgame_b.csv";
    REQUIRE(run_cli("surface --state werner:1 --player A --resolution 7 --out " + out_a.string())
                .exit_code == 0);
    REQUIRE(run_cli("surface --state werner:1 --player B --resolution 7 --out " + out_b.string())
                .exit_code == 0);
    const auto a = lines_of(read_file(out_a));
    const auto b = lines_of(read_file(out_b));
    REQUIRE(a.size() == b.size());
    for (size_t i = 1; i < a.size(); ++i) {
        const double va = std::stod(a[i].substr(a[i].rfind(',') + 1));
        const double vb = std::stod(b[i].substr(b[i].rfind(',') + 1));
        CHECK(va + vb == doctest::Approx(1.0).epsilon(1e-12));
    }
    fs::remove(out_a);
    fs::remove(out_b);
}

TEST_CASE("identical runs give byte-identical files") {
    const fs::path out1 = fs::temp_directory_path() / "qgame_det1.csv";
    const fs::path out2 = fs::temp_directory_path() / "qgame_det2.csv";
    const std::string args = "surface --state d2:pi/2 --payoffs biased --player f --resolution 9";
    REQUIRE(run_cli(args + " --out " + out1.string()).exit_code == 0);
    REQUIRE(run_cli(args + " --out " + out2.string()).exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("discord command values") {
    auto value_of = [](const std::string& output, const std::string& key) {
        for (const auto& line : lines_of(output)) {
            if (line.rfind(key, 0) == 0) return std::stod(line.substr(line.find('=') + 1));
        }
        FAIL("missing key ", key);
        return 0.0;
    };
    const auto zero = run_cli("discord --state werner:0");
    REQUIRE(zero.exit_code == 0);
    CHECK(value_of(zero.output, "discord") == 0.0);

    const auto bell = run_cli("discord --state werner:1");
    REQUIRE(bell.exit_code == 0);
    CHECK(value_of(bell.output, "discord") == doctest::Approx(0.6931471805599453).epsilon(1e-6));

    const auto oneway = run_cli("discord --state d2:pi/2 --orientation measure_A");
    REQUIRE(oneway.exit_code == 0);
    CHECK(value_of(oneway.output, "discord") == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("equilibria report verdicts") {
    auto verdict_of = [](const std::string& output) {
        for (const auto& line : lines_of(output)) {
            if (line.rfind("verdict", 0) == 0) return line.substr(line.find('=') + 2);
        }
        return std::string{};
    };
    const auto flat = run_cli("equilibria --state werner:0 --grid 11");
    REQUIRE(flat.exit_code == 0);
    CHECK(verdict_of(flat.output) == "weak_nash_flat");

    const auto nash = run_cli("equilibria --state d1:0 --grid 21");
    REQUIRE(nash.exit_code == 0);
    CHECK(verdict_of(nash.output) == "strict_nash_found");

    const auto no_nash = run_cli("equilibria --state werner:0.5 --grid 21");
    REQUIRE(no_nash.exit_code == 0);
    CHECK(verdict_of(no_nash.output) == "none");
}

TEST_CASE("verify runs the built-in checks") {
    const auto r = run_cli("verify");
    CHECK(r.exit_code == 0);
    int check_lines = 0;
    for (const auto& line : lines_of(r.output)) {
        if (line.find("PASS") != std::string::npos) ++check_lines;
        CHECK(line.find("FAIL") == std::string::npos);
    }
    CHECK(check_lines >= 6);
}

TEST_CASE("verify flags a corrupted custom state") {
    const fs::path bad = fs::temp_directory_path() / "qgame_bad_state.txt";
    {
        std::ofstream out(bad);
        // trace 2: not a density matrix
        out << "1+0j 0+0j 0+0j 0+0j\n0+0j 1+0j 0+0j 0+0j\n"
            << "0+0j 0+0j 0+0j 0+0j\n0+0j 0+0j 0+0j 0+0j\n";
    }
    const auto r = run_cli("verify --state custom:" + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
    CHECK(r.output.find("density_matrix") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("custom state files round-trip through the state parser") {
    const fs::path good = fs::temp_directory_path() / "qgame_good_state.txt";
    {
        std::ofstream out(good);
        // the eta = 1 Werner singlet
        out << "0+0j 0+0j 0+0j 0+0j\n0+0j 0.5+0j -0.5+0j 0+0j\n"
            << "0+0j -0.5+0j 0.5+0j 0+0j\n0+0j 0+0j 0+0j 0+0j\n";
    }
    const auto r = run_cli("discord --state custom:" + good.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("discord") != std::string::npos);
    fs::remove(good);
}
