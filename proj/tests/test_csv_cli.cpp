#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "membrane/corpus.hpp"
#include "membrane/csv.hpp"
#include "membrane/errors.hpp"
#include "test_helpers.hpp"

using namespace membrane;
using namespace membrane::testing;

namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "membrane_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(MEMBRANE_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("line CSV round-trips bit-exactly and idempotently") {
    std::mt19937_64 rng(71);
    const LineFunction f = random_line(grid30(), rng);
    const fs::path p1 = temp_dir() / "line1.csv";
    const fs::path p2 = temp_dir() / "line2.csv";
    write_line_csv_file(p1.string(), f);
    const LineFunction back = read_line_csv_file(p1.string());
    CHECK(back.grid.n_points() == f.grid.n_points());
    CHECK(back.samples == f.samples);
    CHECK(back.limit_neg == f.limit_neg);
    CHECK(back.limit_pos == f.limit_pos);
    write_line_csv_file(p2.string(), back);
    CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("sharp CSV keeps both one-sided rows at the membrane") {
    std::mt19937_64 rng(72);
    const SharpFunction f = random_sharp(grid30(), rng);
    const fs::path p = temp_dir() / "sharp.csv";
    write_sharp_csv_file(p.string(), f);
    const SharpFunction back = read_sharp_csv_file(p.string());
    CHECK(back.left == f.left);
    CHECK(back.right == f.right);
    CHECK(back.limit_neg == f.limit_neg);
    CHECK(back.limit_pos == f.limit_pos);
    CHECK(back.value0_neg() == f.value0_neg());
    CHECK(back.value0_pos() == f.value0_pos());
}

TEST_CASE("pair CSV round-trips bit-exactly") {
    std::mt19937_64 rng(73);
    const FunctionPair p = random_pair(grid30(), rng);
    const fs::path path = temp_dir() / "pair.csv";
    write_pair_csv_file(path.string(), p);
    const FunctionPair back = read_pair_csv_file(path.string());
    CHECK(back.first.samples == p.first.samples);
    CHECK(back.second.samples == p.second.samples);
    CHECK(back.first.limit_neg == p.first.limit_neg);
    CHECK(back.second.limit_pos == p.second.limit_pos);
}

TEST_CASE("malformed CSV inputs are rejected with a format error") {
    auto parse_line = [](const std::string& text) {
        std::istringstream is(text);
        return read_line_csv(is);
    };
    CHECK_THROWS_AS(parse_line(""), CsvFormatError);
    CHECK_THROWS_AS(parse_line("wrong,header\n1,2\n"), CsvFormatError);
    CHECK_THROWS_AS(parse_line("x,value\n-inf,0\n0,1\n+inf,0\n"), CsvFormatError);
    CHECK_THROWS_AS(
        parse_line("x,value\n-inf,0\n-1,0\n-0.4,0\n0,1\n0.5,0\n1,0\n+inf,0\n"),
        CsvFormatError);  // nodes not uniform
    std::istringstream sharp_bad("x,side,value\n-inf,L,0\n-1,M,0\n0,L,0\n0,R,0\n1,R,0\n+inf,R,0\n");
    CHECK_THROWS_AS(read_sharp_csv(sharp_bad), CsvFormatError);
}

TEST_CASE("cli: corpus listing and emission") {
    CHECK(run_cli("corpus --list > /dev/null") == 0);
    const fs::path out = temp_dir() / "corpus_gauss.csv";
    CHECK(run_cli("corpus --func gauss --grid-L 5 --grid-n 1001 --out " + out.string()) == 0);
    const SharpFunction f = read_sharp_csv_file(out.string());
    CHECK(f.grid.n_points() == 1001);
    CHECK(f.value0_pos() == 1.0);
}

TEST_CASE("cli: extension against the closed-form oracle") {
    const fs::path out = temp_dir() / "ext.csv";
    CHECK(run_cli("extend --kind snapping --alpha 0.5 --beta 0.5 --func \"step(-1,1)\" "
                  "--grid-L 10 --grid-n 2001 --out " +
                  out.string()) == 0);
    const FunctionPair p = read_pair_csv_file(out.string());
    double worst = 0.0;
    const Grid& g = p.first.grid;
    for (int k = g.center_index() + 1; k < g.n_points(); ++k) {
        const double x = g.node(k);
        worst = std::max(worst, std::abs(p.first.samples[static_cast<std::size_t>(k)] -
                                         (1.0 - 2.0 * std::exp(-x))));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("cli: deterministic output for a fixed seed") {
    const fs::path o1 = temp_dir() / "det1.csv";
    const fs::path o2 = temp_dir() / "det2.csv";
    const std::string args =
        "converge --experiment projection --alpha 0.5 --beta 0.5 --func random --seed 9 "
        "--ladder 1,2,4 --grid-L 10 --grid-n 2001 --out ";
    CHECK(run_cli(args + o1.string()) == 0);
    CHECK(run_cli(args + o2.string()) == 0);
    const std::string c1 = slurp(o1), c2 = slurp(o2);
    CHECK(c1 == c2);
    CHECK(c1.rfind("n,error", 0) == 0);
}

TEST_CASE("cli: ladder errors decrease for the projection experiment") {
    const fs::path out = temp_dir() / "ladder.csv";
    CHECK(run_cli("converge --experiment projection --alpha 0.5 --beta 0.5 "
                  "--func gauss --func2 expabs --ladder 1,2,4,8 --grid-L 10 --grid-n 2001 "
                  "--out " +
                  out.string()) == 0);
    std::ifstream is(out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "n,error");
    double prev = 1e300;
    int n;
    double err;
    char comma;
    while (is >> n >> comma >> err) {
        CHECK(err <= prev);
        prev = err;
    }
}

TEST_CASE("cli: config file provides defaults, flags win") {
    const fs::path conf = temp_dir() / "run.conf";
    {
        std::ofstream os(conf);
        os << "# run configuration\n";
        os << "grid-L=5\n";
        os << "grid-n=501\n";
        os << "func=odd_step\n";
    }
    const fs::path out = temp_dir() / "conf_out.csv";
    CHECK(run_cli("--config " + conf.string() + " corpus --out " + out.string()) == 0);
    CHECK(read_sharp_csv_file(out.string()).grid.n_points() == 501);
    // explicit flag overrides the config value
    CHECK(run_cli("--config " + conf.string() + " corpus --grid-n 301 --out " +
                  out.string()) == 0);
    CHECK(read_sharp_csv_file(out.string()).grid.n_points() == 301);
}

TEST_CASE("cli: exit codes distinguish failure kinds") {
    CHECK(run_cli("verify --suite conjugation > /dev/null") == 0);
    CHECK(run_cli("verify --suite no-such-suite") == 2);
    CHECK(run_cli("extend --kind bogus --func gauss --grid-L 5 --grid-n 501") == 2);
    CHECK(run_cli("evolve --kind free --mode semigroup --t -1 --func gauss "
                  "--grid-L 5 --grid-n 501") == 2);
    CHECK(run_cli("converge --experiment cosine --alpha 3 --beta 3 --grid-n 6001 "
                  "--func gauss --ladder 1,64") == 2);  // explicit grid violates the guard
    CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("cli: verify --list names every suite") {
    const fs::path out = temp_dir() / "suites.txt";
    CHECK(run_cli("verify --list > " + out.string()) == 0);
    const std::string text = slurp(out);
    for (const char* name : {"norm-bounds", "complementarity", "membership", "invariance",
                             "cosine-axioms", "heat-kernel", "transmission", "skew-convergence",
                             "irregular-convergence", "projection-convergence", "dirac",
                             "conjugation"}) {
        CHECK(text.find(name) != std::string::npos);
    }
}
