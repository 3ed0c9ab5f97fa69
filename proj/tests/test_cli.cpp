#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wged/datasets.hpp"
#include "wged/distribution.hpp"
#include "wged/estimation.hpp"
#include "wged/gof.hpp"
#include "wged/models.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("wged_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd =
        std::string(WGED_BIN) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// rows of a comma-separated table; empty cells become NaN
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream fields(line);
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.push_back("");
        }
        if (header) {
            t.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        for (const std::string& c : cells) {
            row.push_back(c.empty() ? std::nan("") : std::stod(c));
        }
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace

TEST_CASE("fit emits a schema-versioned json report with ordered parameters") {
    const RunResult r = run("fit --data glassfibre --json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "fit");
    CHECK(doc["dataset"]["source"] == "glassfibre");
    CHECK(doc["dataset"]["n"] == 63);
    REQUIRE(doc["models"].size() == 1);
    const auto& m = doc["models"][0];
    CHECK(m["model"] == "wged");
    CHECK(m["converged"] == true);
    std::vector<std::string> keys;
    for (auto it = m["params"].begin(); it != m["params"].end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"a", "b", "lambda"});
    // full-precision round trip against the library fit
    const auto fit = wged::mle::fit_mle(wged::mle::make_sample(wged::datasets::glass_fibre()));
    CHECK(m["params"]["a"].get<double>() == fit.params.a);
    CHECK(m["params"]["b"].get<double>() == fit.params.b);
    CHECK(m["params"]["lambda"].get<double>() == fit.params.lambda);
    CHECK(m["loglik"].get<double>() == fit.loglik);
}

TEST_CASE("compare ranks all five models by aic") {
    const RunResult r = run("compare --data glassfibre --json --seed 42");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["models"].size() == 5);
    std::vector<std::string> order;
    double prev_aic = -1e300;
    for (const auto& m : doc["models"]) {
        order.push_back(m["model"].get<std::string>());
        const double aic = m["gof"]["aic"].get<double>();
        CHECK(aic >= prev_aic);
        prev_aic = aic;
    }
    CHECK(order == std::vector<std::string>{"wged", "bged", "bed", "ged", "ed"});
}

TEST_CASE("identical invocations produce byte-identical output") {
    const RunResult a = run("compare --data glassfibre --json --seed 42");
    const RunResult b = run("compare --data glassfibre --json --seed 42");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);

    const RunResult c = run("sample --params 1,1,1 --n 50 --seed 9");
    const RunResult d = run("sample --params 1,1,1 --n 50 --seed 9");
    CHECK(c.out == d.out);
    CHECK(c.out != run("sample --params 1,1,1 --n 50 --seed 10").out);
}

TEST_CASE("curves tabulates the distribution functions on the requested grid") {
    const RunResult r =
        run("curves --params 1,1,1 --grid 0:2:5 --which cdf,sf,cumhazard --csv");
    REQUIRE(r.exit_code == 0);
    const Table t = parse_csv(r.out);
    CHECK(t.columns == std::vector<std::string>{"x", "cdf", "sf", "cumhazard"});
    REQUIRE(t.rows.size() == 5);
    const wged::Params p(1.0, 1.0, 1.0);
    for (std::size_t i = 0; i < 5; ++i) {
        const double x = 0.5 * static_cast<double>(i);
        CHECK(t.rows[i][0] == doctest::Approx(x).epsilon(1e-15));
        CHECK(t.rows[i][1] == doctest::Approx(wged::cdf(p, x)).epsilon(1e-15));
        CHECK(t.rows[i][2] == doctest::Approx(wged::survival(p, x)).epsilon(1e-15));
        CHECK(t.rows[i][3] ==
              doctest::Approx(wged::cumulative_hazard(p, x)).epsilon(1e-15));
    }
    // the cumulative hazard starts at zero
    CHECK(t.rows[0][3] == 0.0);
}

TEST_CASE("hazard column is blank at zero for decreasing hazard shapes") {
    const RunResult dec = run("curves --params 1,0.5,1 --grid 0:1:3 --which hazard --csv");
    REQUIRE(dec.exit_code == 0);
    const Table td = parse_csv(dec.out);
    REQUIRE(td.rows.size() == 3);
    CHECK(std::isnan(td.rows[0][1]));  // unbounded at the origin when b < 1
    CHECK(!std::isnan(td.rows[1][1]));

    const RunResult inc = run("curves --params 1,2,1 --grid 0:1.2:4 --which hazard --csv");
    const Table ti = parse_csv(inc.out);
    REQUIRE(ti.rows.size() == 4);
    CHECK(ti.rows[0][1] == 0.0);  // b > 1 starts at zero and rises
    CHECK(ti.rows[1][1] < ti.rows[2][1]);
    CHECK(ti.rows[2][1] < ti.rows[3][1]);
}

TEST_CASE("overlay pairs the kaplan meier steps with fitted survival") {
    const RunResult r = run("overlay --data glassfibre --model ed --csv");
    REQUIRE(r.exit_code == 0);
    const Table t = parse_csv(r.out);
    CHECK(t.columns == std::vector<std::string>{"x", "km", "ed"});
    const auto s = wged::mle::make_sample(wged::datasets::glass_fibre());
    const auto km = wged::gof::kaplan_meier(s);
    REQUIRE(t.rows.size() == km.times.size());
    const auto ed = wged::models::ed_fit(s);
    const double lam = ed.spec.params[0];
    double sup_gap = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(t.rows[i][0] == doctest::Approx(km.times[i]).epsilon(1e-15));
        CHECK(t.rows[i][1] == doctest::Approx(km.survival[i]).epsilon(1e-12));
        const double sf = 1.0 - wged::models::ed_cdf(lam, km.times[i]);
        CHECK(t.rows[i][2] == doctest::Approx(sf).epsilon(1e-12));
        sup_gap = std::max(sup_gap, std::fabs(t.rows[i][1] - t.rows[i][2]));
    }
    // the largest survival gap at the steps brackets the K-S statistic
    const double d =
        wged::gof::ks_statistic(s, [&](double x) { return wged::models::ed_cdf(lam, x); });
    CHECK(std::fabs(sup_gap - d) <= 1.0 / static_cast<double>(s.n()));
}

TEST_CASE("profile grid defaults to a bracket around the estimate") {
    const RunResult r = run("profile --data glassfibre --axis lambda --csv");
    REQUIRE(r.exit_code == 0);
    const Table t = parse_csv(r.out);
    CHECK(t.columns == std::vector<std::string>{"lambda", "loglik"});
    REQUIRE(t.rows.size() == 41);
    // the likelihood peaks at the grid point nearest the estimate
    std::size_t best = 0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        if (t.rows[i][1] > t.rows[best][1]) {
            best = i;
        }
    }
    const auto fit = wged::mle::fit_mle(wged::mle::make_sample(wged::datasets::glass_fibre()));
    double nearest_gap = 1e300;
    std::size_t nearest = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double gap = std::fabs(t.rows[i][0] - fit.params.lambda);
        if (gap < nearest_gap) {
            nearest_gap = gap;
            nearest = i;
        }
    }
    CHECK(best == nearest);
    CHECK(t.rows[best][1] <= fit.loglik + 1e-9);
}

TEST_CASE("sampled data round trips through ingestion and fitting") {
    const fs::path data = scratch_dir() / "roundtrip.txt";
    const RunResult s = run("sample --params 1,1,1 --n 5000 --seed 42");
    REQUIRE(s.exit_code == 0);
    std::ofstream(data, std::ios::binary) << s.out;
    const RunResult f = run("fit --data " + data.string() + " --json");
    REQUIRE(f.exit_code == 0);
    const auto doc = nlohmann::json::parse(f.out);
    const auto& params = doc["models"][0]["params"];
    CHECK(std::fabs(params["a"].get<double>() - 1.0) < 0.10);
    CHECK(std::fabs(params["b"].get<double>() - 1.0) < 0.10);
    CHECK(std::fabs(params["lambda"].get<double>() - 1.0) < 0.10);
}

TEST_CASE("data files accept comments and commas and reject junk with line numbers") {
    const fs::path good = scratch_dir() / "good.txt";
    std::ofstream(good) << "# measured strengths\n0.55, 0.74 0.77\n\n0.81 # trailing note\n"
                           "0.84\n1.24, 1.30, 1.48\n1.61 1.63\n";
    const RunResult ok = run("fit --data " + good.string() + " --json");
    REQUIRE(ok.exit_code == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["dataset"]["n"] == 10);

    const fs::path bad = scratch_dir() / "bad.txt";
    std::ofstream(bad) << "# header\n1.0 2.0\n0.5, bogus\n";
    const RunResult r = run("fit --data " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("bad.txt:3: not a number: 'bogus'") != std::string::npos);

    const fs::path neg = scratch_dir() / "neg.txt";
    std::ofstream(neg) << "1.0\n-2.0\n";
    const RunResult rn = run("fit --data " + neg.string());
    CHECK(rn.exit_code == 1);
    CHECK(rn.err.find("neg.txt:2: values must be positive") != std::string::npos);

    const RunResult missing = run("fit --data /no/such/file.txt");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("cannot open data file") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage errors from non-convergence") {
    CHECK(run("fit --data glassfibre").exit_code == 0);
    CHECK(run("fit --no-such-flag").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
    CHECK(run("curves --params 1,1,1").exit_code == 1);       // --grid is required
    CHECK(run("sample --params 1,1,1 --n 0").exit_code == 1);
    CHECK(run("fit --data glassfibre --model wged,ed").exit_code == 1);
    // starving the optimizer forces a statistical failure, not a usage error
    const RunResult starved = run("fit --data glassfibre --max-iter 3 --json");
    CHECK(starved.exit_code == 2);
    const auto doc = nlohmann::json::parse(starved.out);
    CHECK(doc["models"][0]["converged"] == false);
}
