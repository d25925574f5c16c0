#pragma once

#include "swcol/lattice.hpp"
#include "swcol/rng.hpp"
#include "swcol/solver.hpp"
#include "swcol/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace swcol {

/// Monte Carlo sweep over (lattice, p) cells: generate -> rewire -> solve,
/// many trials per cell.
///
/// Config file schema (flat key-value text, '#' starts a comment, values
/// split on whitespace or commas, `lattice` may repeat):
///   lattice   = <family> <L>        square | triangular | cubic6 | cubic5
///   p_grid    = log <min> <max> <count>   log-spaced inclusive grid
///             | list <p1> <p2> ...        explicit values
///             (default: log 1e-3 1 20)
///   trials    = <count>             per cell (default 1000)
///   k         = <colours>           (default 3)
///   max_nodes = <count> | none      solver budget per trial (default 10000000)
///   seed      = <uint64>            master seed (default 1)
///   rng       = default | mitchell-moore
///   workers   = <count>             0 = one per hardware thread (default 0)
///   records   = <dir>               persist raw per-trial records, one CSV
///                                   per cell (default: off)
struct ExperimentConfig {
    std::vector<LatticeSpec> lattices;
    std::vector<double> p_grid;
    std::uint64_t trials = 1000;
    int k = 3;
    SolveBudget budget{10'000'000};
    std::uint64_t master_seed = 1;
    RngAlgorithm rng = RngAlgorithm::Default;
    unsigned workers = 0;
    bool keep_records = false;
    std::string records_dir; // informational; persistence is done by the CLI

    void validate() const;
};

/// count log-spaced values from min to max inclusive (count >= 2, min > 0).
std::vector<double> log_grid(double min, double max, std::size_t count);
std::vector<double> default_p_grid(); // log 1e-3 .. 1, 20 points

struct TrialRecord {
    LatticeSpec spec;
    double p = 0.0;
    std::uint64_t trial_index = 0; // global index fed to derive_trial_rng
    SolveStatus status = SolveStatus::Uncolourable;
    std::uint64_t nodes_visited = 0;
    std::uint64_t rewire_skips = 0;
};

/// Aggregate of one (lattice, p) cell. fraction/ci cover decided trials only
/// (budget-exhausted trials are counted separately and excluded); all three
/// are NaN when no trial was decided. Cost statistics likewise cover decided
/// trials.
struct SummaryRow {
    LatticeFamily family = LatticeFamily::Square;
    std::uint32_t L = 0;
    std::uint64_t N = 0;
    int gamma = 0;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t colourable = 0;
    std::uint64_t uncolourable = 0;
    std::uint64_t exhausted = 0;
    double fraction = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double cost_mean = 0.0;
    double cost_median = 0.0;
    std::uint64_t cost_max = 0;
};

struct CostStats {
    double mean = 0.0;
    double median = 0.0;
    std::uint64_t max = 0;
    std::size_t decided = 0;
    std::size_t censored = 0; // budget-exhausted, excluded from the moments
};

/// Mean/median/max of nodes_visited over decided records; budget-exhausted
/// records are excluded from the statistics and reported as `censored`.
/// Throws on empty input or when every record is censored.
CostStats cost_stats(std::span<const TrialRecord> records);

struct SweepResult {
    std::vector<SummaryRow> rows;        // sorted by (family, L, p)
    std::vector<TrialRecord> records;    // filled when keep_records is set;
                                         // cell-major, trial index ascending
};

/// Runs the sweep. Deterministic: the result is a pure function of the
/// config — trial t of cell c draws from derive_trial_rng(master_seed,
/// c*trials + t), workers only change the schedule, and every lattice spec
/// is validated (and its base graph built) before any trial starts. Each
/// trial's rewired graph is audited (edge conservation + simplicity) before
/// it is solved.
SweepResult run_sweep(const ExperimentConfig& config);

/// Exact CSV schema shared by the sweep output and the downstream readers.
extern const std::string_view summary_csv_header;
std::string summary_csv(std::span<const SummaryRow> rows);
std::vector<SummaryRow> read_summary_csv(std::istream& is);
std::vector<SummaryRow> read_summary_csv_file(const std::filesystem::path& path);

ExperimentConfig parse_config(std::istream& is);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

/// True when, over one (family, L) curve sorted by p, no adjacent pair
/// increases by more than the sum of the two 95% half-widths.
bool fraction_non_increasing_within_ci(std::span<const SummaryRow> curve);

} // namespace swcol
