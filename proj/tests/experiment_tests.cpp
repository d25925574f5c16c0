#include "swcol/experiment.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace swcol;

namespace {

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.lattices = {{LatticeFamily::Square, 4}};
    cfg.p_grid = {0.0};
    cfg.trials = 100;
    cfg.master_seed = 99;
    return cfg;
}

TrialRecord record_with(SolveStatus status, std::uint64_t nodes) {
    TrialRecord r;
    r.status = status;
    r.nodes_visited = nodes;
    return r;
}

} // namespace

TEST_SUITE("experiment") {

TEST_CASE("cost_stats") {
    std::vector<TrialRecord> flat(3, record_with(SolveStatus::Colourable, 16));
    CostStats stats = cost_stats(flat);
    CHECK(stats.mean == 16.0);
    CHECK(stats.median == 16.0);
    CHECK(stats.max == 16);
    CHECK(stats.censored == 0);

    std::vector<TrialRecord> mixed{record_with(SolveStatus::Colourable, 1),
                                   record_with(SolveStatus::Uncolourable, 2),
                                   record_with(SolveStatus::Colourable, 3)};
    stats = cost_stats(mixed);
    CHECK(stats.mean == 2.0);
    CHECK(stats.median == 2.0);
    CHECK(stats.max == 3);

    // budget-exhausted records are censored, not folded into the moments
    mixed.push_back(record_with(SolveStatus::BudgetExhausted, 1000000));
    stats = cost_stats(mixed);
    CHECK(stats.mean == 2.0);
    CHECK(stats.max == 3);
    CHECK(stats.censored == 1);

    CHECK_THROWS_AS(cost_stats({}), std::invalid_argument);
    std::vector<TrialRecord> all_censored(2, record_with(SolveStatus::BudgetExhausted, 5));
    CHECK_THROWS_AS(cost_stats(all_censored), std::invalid_argument);
}

TEST_CASE("log grid") {
    const auto grid = log_grid(1e-3, 1.0, 20);
    REQUIRE(grid.size() == 20);
    CHECK(grid.front() == 1e-3);
    CHECK(grid.back() == 1.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        CHECK(grid[i] < grid[i + 1]);
    // log spacing: constant ratio
    const double ratio = grid[1] / grid[0];
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        CHECK(grid[i + 1] / grid[i] == doctest::Approx(ratio).epsilon(1e-9));

    CHECK(default_p_grid().size() == 20);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(log_grid(0.1, 1.0, 1), std::invalid_argument);
}

TEST_CASE("sweep at p=0 is colourable with fraction exactly 1") {
    const SweepResult result = run_sweep(tiny_config());
    REQUIRE(result.rows.size() == 1);
    const SummaryRow& row = result.rows[0];
    CHECK(row.trials == 100);
    CHECK(row.colourable == 100);
    CHECK(row.fraction == 1.0);
    CHECK(row.ci_hi == 1.0);
    CHECK(row.cost_mean == 16.0);  // p=0 square L=4 always costs exactly N
    CHECK(row.cost_median == 16.0);
    CHECK(row.cost_max == 16);
    CHECK(row.N == 16);
    CHECK(row.gamma == 4);
}

TEST_CASE("sweep is deterministic and schedule-independent") {
    ExperimentConfig cfg;
    cfg.lattices = {{LatticeFamily::Square, 4}, {LatticeFamily::Cubic5, 4}};
    cfg.p_grid = {0.1, 0.6};
    cfg.trials = 60;
    cfg.master_seed = 31337;

    cfg.workers = 1;
    const std::string csv1 = summary_csv(run_sweep(cfg).rows);
    const std::string csv2 = summary_csv(run_sweep(cfg).rows);
    cfg.workers = 4;
    const std::string csv4 = summary_csv(run_sweep(cfg).rows);

    CHECK(csv1 == csv2);
    CHECK(csv1 == csv4);
}

TEST_CASE("sweep accounting and ordering") {
    ExperimentConfig cfg;
    cfg.lattices = {{LatticeFamily::Cubic5, 4}, {LatticeFamily::Square, 4}};
    cfg.p_grid = {0.5, 0.2};
    cfg.trials = 40;
    cfg.master_seed = 7;
    cfg.budget.max_nodes = 150; // low enough to censor some cubic5 trials
    cfg.keep_records = true;

    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.rows.size() == 4);
    // rows sorted by (family order, L, p): square before cubic5
    CHECK(result.rows[0].family == LatticeFamily::Square);
    CHECK(result.rows[0].p == 0.2);
    CHECK(result.rows[1].p == 0.5);
    CHECK(result.rows[2].family == LatticeFamily::Cubic5);

    for (const auto& row : result.rows)
        CHECK(row.colourable + row.uncolourable + row.exhausted == row.trials);

    bool censored_any = false;
    for (const auto& row : result.rows)
        censored_any = censored_any || row.exhausted > 0;
    CHECK(censored_any);

    CHECK(result.records.size() == 4 * 40);
}

TEST_CASE("sweep validates specs before running any trial") {
    ExperimentConfig cfg = tiny_config();
    cfg.lattices.push_back({LatticeFamily::Triangular, 7}); // invalid: not divisible by 3
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);

    cfg = tiny_config();
    cfg.p_grid = {1.5};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);

    cfg = tiny_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("summary csv schema and round trip") {
    const SweepResult result = run_sweep(tiny_config());
    const std::string csv = summary_csv(result.rows);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "family,L,N,gamma,p,trials,colourable,uncolourable,exhausted,fraction,"
          "ci_lo,ci_hi,cost_mean,cost_median,cost_max");

    std::istringstream in(csv);
    const auto parsed = read_summary_csv(in);
    REQUIRE(parsed.size() == result.rows.size());
    CHECK(parsed[0].family == result.rows[0].family);
    CHECK(parsed[0].L == result.rows[0].L);
    CHECK(parsed[0].trials == result.rows[0].trials);
    CHECK(parsed[0].fraction == doctest::Approx(result.rows[0].fraction));
    CHECK(parsed[0].cost_max == result.rows[0].cost_max);

    std::istringstream bad_header("a,b\n1,2\n");
    CHECK_THROWS(read_summary_csv(bad_header));
    std::istringstream short_row(std::string(summary_csv_header) + "\nsquare,4\n");
    CHECK_THROWS(read_summary_csv(short_row));
}

TEST_CASE("config parsing") {
    std::istringstream in(
        "# sweep over two lattices\n"
        "lattice = square 6\n"
        "lattice = cubic5 4   # the gamma=5 start\n"
        "p_grid  = list 0, 0.5, 1\n"
        "trials  = 250\n"
        "k       = 3\n"
        "max_nodes = 12345\n"
        "seed    = 17\n"
        "rng     = mitchell-moore\n"
        "workers = 2\n");
    const ExperimentConfig cfg = parse_config(in);
    REQUIRE(cfg.lattices.size() == 2);
    CHECK(cfg.lattices[0] == LatticeSpec{LatticeFamily::Square, 6});
    CHECK(cfg.lattices[1] == LatticeSpec{LatticeFamily::Cubic5, 4});
    CHECK(cfg.p_grid == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.trials == 250);
    CHECK(cfg.budget.max_nodes == 12345);
    CHECK(cfg.master_seed == 17);
    CHECK(cfg.rng == RngAlgorithm::MitchellMoore);
    CHECK(cfg.workers == 2);

    std::istringstream defaults("lattice = square 4\n");
    const ExperimentConfig def = parse_config(defaults);
    CHECK(def.p_grid.size() == 20); // default log grid
    CHECK(def.trials == 1000);
    CHECK(def.budget.max_nodes == 10'000'000);

    std::istringstream log_mode("lattice = square 4\np_grid = log 0.01 1 5\n");
    CHECK(parse_config(log_mode).p_grid.size() == 5);

    std::istringstream unbounded("lattice = square 4\nmax_nodes = none\n");
    CHECK_FALSE(parse_config(unbounded).budget.max_nodes.has_value());
}

TEST_CASE("config rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_config(in);
    };
    CHECK_THROWS(parse("lattice = square 4\nbogus_key = 1\n"));
    CHECK_THROWS(parse("lattice = hexagonal 4\n"));
    CHECK_THROWS(parse("lattice = square\n"));
    CHECK_THROWS(parse("p_grid = list 0.5\n"));              // no lattice at all
    CHECK_THROWS(parse("lattice = square 4\np_grid = list 2\n")); // p outside [0,1]
    CHECK_THROWS(parse("lattice = square 4\ntrials = 0\n"));
    CHECK_THROWS(parse("lattice = square 4\nnot a kv line\n"));
}

TEST_CASE("monotonicity helper") {
    auto row = [](double p, double fraction, double half) {
        SummaryRow r;
        r.p = p;
        r.fraction = fraction;
        r.ci_lo = fraction - half;
        r.ci_hi = fraction + half;
        return r;
    };
    const std::vector<SummaryRow> fine{row(0.1, 0.9, 0.02), row(0.2, 0.91, 0.02), row(0.4, 0.5, 0.02)};
    CHECK(fraction_non_increasing_within_ci(fine)); // small bump within CI noise

    const std::vector<SummaryRow> broken{row(0.1, 0.5, 0.01), row(0.2, 0.9, 0.01)};
    CHECK_FALSE(fraction_non_increasing_within_ci(broken));
}

} // TEST_SUITE
