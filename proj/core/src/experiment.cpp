#include "swcol/experiment.hpp"

#include "swcol/rewire.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace swcol {

void ExperimentConfig::validate() const {
    if (lattices.empty())
        throw std::invalid_argument("config: at least one lattice is required");
    for (const auto& spec : lattices)
        spec.validate();
    if (p_grid.empty())
        throw std::invalid_argument("config: p grid is empty");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("config: p value " + std::to_string(p) + " outside [0,1]");
    if (trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (k < 1)
        throw std::invalid_argument("config: k must be >= 1");
    if (budget.max_nodes && *budget.max_nodes < 1)
        throw std::invalid_argument("config: max_nodes must be >= 1 when given");
}

std::vector<double> log_grid(double min, double max, std::size_t count) {
    if (count < 2)
        throw std::invalid_argument("log_grid: count must be >= 2");
    if (!(min > 0.0) || !(max > min))
        throw std::invalid_argument("log_grid: need 0 < min < max");
    std::vector<double> grid(count);
    const double lmin = std::log(min), lmax = std::log(max);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = std::exp(lmin + (lmax - lmin) * static_cast<double>(i) / static_cast<double>(count - 1));
    grid.front() = min;
    grid.back() = max;
    return grid;
}

std::vector<double> default_p_grid() {
    return log_grid(1e-3, 1.0, 20);
}

CostStats cost_stats(std::span<const TrialRecord> records) {
    if (records.empty())
        throw std::invalid_argument("cost_stats: empty input");
    std::vector<std::uint64_t> costs;
    costs.reserve(records.size());
    CostStats stats;
    for (const auto& record : records) {
        if (record.status == SolveStatus::BudgetExhausted) {
            ++stats.censored;
            continue;
        }
        costs.push_back(record.nodes_visited);
    }
    stats.decided = costs.size();
    if (costs.empty())
        throw std::invalid_argument("cost_stats: no decided records (all censored)");
    stats.mean = mean(costs);
    stats.median = median(costs);
    stats.max = *std::max_element(costs.begin(), costs.end());
    return stats;
}

namespace {

struct Cell {
    LatticeSpec spec;
    double p;
    Graph base;
    std::uint64_t first_trial; // global index of trial 0 in this cell
};

TrialRecord run_trial(const Cell& cell, std::uint64_t t, const ExperimentConfig& cfg) {
    const std::uint64_t global = cell.first_trial + t;
    RandomSource rng = derive_trial_rng(cfg.master_seed, global, cfg.rng);
    RewireResult rewired = rewire(cell.base, cell.p, rng);

    // Conservation audit before solving; a failure here is a generator bug.
    if (rewired.graph.edge_count() != cell.base.edge_count())
        throw std::logic_error("sweep: edge count not conserved by rewiring");
    rewired.graph.check_invariants();

    SolveOutcome outcome = solve(rewired.graph, cfg.k, cfg.budget);
    return {cell.spec, cell.p, global, outcome.status, outcome.nodes_visited, rewired.skipped};
}

SummaryRow summarise(const Cell& cell, std::span<const TrialRecord> records) {
    SummaryRow row;
    row.family = cell.spec.family;
    row.L = cell.spec.L;
    row.N = cell.spec.node_count();
    row.gamma = family_gamma(cell.spec.family);
    row.p = cell.p;
    row.trials = records.size();
    for (const auto& record : records) {
        switch (record.status) {
        case SolveStatus::Colourable: ++row.colourable; break;
        case SolveStatus::Uncolourable: ++row.uncolourable; break;
        case SolveStatus::BudgetExhausted: ++row.exhausted; break;
        }
    }
    const std::uint64_t decided = row.colourable + row.uncolourable;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (decided == 0) {
        row.fraction = row.ci_lo = row.ci_hi = nan;
        row.cost_mean = row.cost_median = nan;
        row.cost_max = 0;
        return row;
    }
    row.fraction = static_cast<double>(row.colourable) / static_cast<double>(decided);
    const Interval ci = wilson_interval(row.colourable, decided);
    row.ci_lo = ci.lo;
    row.ci_hi = ci.hi;
    const CostStats costs = cost_stats(records);
    row.cost_mean = costs.mean;
    row.cost_median = costs.median;
    row.cost_max = costs.max;
    return row;
}

// Sort key: family declaration order, then L, then p.
bool row_less(const SummaryRow& a, const SummaryRow& b) {
    return std::tuple(static_cast<int>(a.family), a.L, a.p) < std::tuple(static_cast<int>(b.family), b.L, b.p);
}

} // namespace

SweepResult run_sweep(const ExperimentConfig& config) {
    config.validate();

    std::vector<Cell> cells;
    cells.reserve(config.lattices.size() * config.p_grid.size());
    std::uint64_t next_first_trial = 0;
    for (const auto& spec : config.lattices) {
        Graph base = generate(spec); // validates the spec before any trial runs
        for (double p : config.p_grid) {
            cells.push_back({spec, p, base, next_first_trial});
            next_first_trial += config.trials;
        }
    }

    unsigned workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(
                                                           config.trials, 64))));

    SweepResult result;
    result.rows.reserve(cells.size());

    for (const Cell& cell : cells) {
        std::vector<TrialRecord> records(config.trials);

        if (workers == 1) {
            for (std::uint64_t t = 0; t < config.trials; ++t)
                records[t] = run_trial(cell, t, config);
        } else {
            // Records land in per-trial slots, so the aggregate is identical
            // for any worker count or schedule.
            std::atomic<std::uint64_t> next{0};
            std::mutex error_mutex;
            std::exception_ptr first_error;
            std::atomic<bool> abort{false};

            auto work = [&] {
                try {
                    for (;;) {
                        const std::uint64_t t = next.fetch_add(1);
                        if (t >= config.trials || abort.load(std::memory_order_relaxed))
                            return;
                        records[t] = run_trial(cell, t, config);
                    }
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    abort.store(true, std::memory_order_relaxed);
                }
            };

            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
            for (auto& thread : pool)
                thread.join();
            if (first_error)
                std::rethrow_exception(first_error);
        }

        result.rows.push_back(summarise(cell, records));
        if (config.keep_records)
            result.records.insert(result.records.end(), records.begin(), records.end());
    }

    std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
    return result;
}

// ---------------------------------------------------------------------------
// CSV

const std::string_view summary_csv_header =
    "family,L,N,gamma,p,trials,colourable,uncolourable,exhausted,fraction,"
    "ci_lo,ci_hi,cost_mean,cost_median,cost_max";

namespace {

void append_fixed6(std::string& out, double v) {
    if (std::isnan(v)) {
        out += "nan";
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += buf;
}

void append_g12(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

} // namespace

std::string summary_csv(std::span<const SummaryRow> rows) {
    std::string out(summary_csv_header);
    out += '\n';
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%s,%u,%llu,%d,", std::string(family_name(row.family)).c_str(), row.L,
                      static_cast<unsigned long long>(row.N), row.gamma);
        out += buf;
        append_g12(out, row.p);
        std::snprintf(buf, sizeof buf, ",%llu,%llu,%llu,%llu,", static_cast<unsigned long long>(row.trials),
                      static_cast<unsigned long long>(row.colourable),
                      static_cast<unsigned long long>(row.uncolourable),
                      static_cast<unsigned long long>(row.exhausted));
        out += buf;
        append_fixed6(out, row.fraction);
        out += ',';
        append_fixed6(out, row.ci_lo);
        out += ',';
        append_fixed6(out, row.ci_hi);
        out += ',';
        append_fixed6(out, row.cost_mean);
        out += ',';
        append_fixed6(out, row.cost_median);
        std::snprintf(buf, sizeof buf, ",%llu\n", static_cast<unsigned long long>(row.cost_max));
        out += buf;
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ','))
        fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw std::runtime_error("csv: line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no) {
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw std::runtime_error("csv: line " + std::to_string(line_no) + ": bad count '" + s + "'");
    }
}

} // namespace

std::vector<SummaryRow> read_summary_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != summary_csv_header)
        throw std::runtime_error("csv: unexpected header '" + line + "'");

    std::vector<SummaryRow> rows;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 15)
            throw std::runtime_error("csv: line " + std::to_string(line_no) + ": expected 15 fields, got " +
                                     std::to_string(fields.size()));
        SummaryRow row;
        const auto family = family_from_name(fields[0]);
        if (!family)
            throw std::runtime_error("csv: line " + std::to_string(line_no) + ": unknown family '" + fields[0] +
                                     "'");
        row.family = *family;
        row.L = static_cast<std::uint32_t>(parse_u64(fields[1], line_no));
        row.N = parse_u64(fields[2], line_no);
        row.gamma = static_cast<int>(parse_u64(fields[3], line_no));
        row.p = parse_double(fields[4], line_no);
        row.trials = parse_u64(fields[5], line_no);
        row.colourable = parse_u64(fields[6], line_no);
        row.uncolourable = parse_u64(fields[7], line_no);
        row.exhausted = parse_u64(fields[8], line_no);
        row.fraction = parse_double(fields[9], line_no);
        row.ci_lo = parse_double(fields[10], line_no);
        row.ci_hi = parse_double(fields[11], line_no);
        row.cost_mean = parse_double(fields[12], line_no);
        row.cost_median = parse_double(fields[13], line_no);
        row.cost_max = parse_u64(fields[14], line_no);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SummaryRow> read_summary_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("csv: cannot open " + path.string());
    return read_summary_csv(in);
}

// ---------------------------------------------------------------------------
// Config

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string token;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!token.empty()) {
                tokens.push_back(token);
                token.clear();
            }
        } else {
            token += ch;
        }
    }
    if (!token.empty())
        tokens.push_back(token);
    return tokens;
}

[[noreturn]] void config_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("config: line " + std::to_string(line_no) + ": " + what);
}

} // namespace

ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    cfg.p_grid.clear();

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (!tokenize(line).empty())
                config_fail(line_no, "expected 'key = value'");
            continue;
        }
        const auto key_tokens = tokenize(line.substr(0, eq));
        const auto values = tokenize(line.substr(eq + 1));
        if (key_tokens.size() != 1)
            config_fail(line_no, "expected a single key before '='");
        const std::string& key = key_tokens[0];

        auto want = [&](std::size_t count) {
            if (values.size() != count)
                config_fail(line_no, "key '" + key + "' expects " + std::to_string(count) + " value(s)");
        };

        try {
            if (key == "lattice") {
                want(2);
                const auto family = family_from_name(values[0]);
                if (!family)
                    config_fail(line_no, "unknown lattice family '" + values[0] + "'");
                cfg.lattices.push_back({*family, static_cast<std::uint32_t>(std::stoul(values[1]))});
            } else if (key == "p_grid") {
                if (values.empty())
                    config_fail(line_no, "p_grid needs a mode (log | list)");
                if (values[0] == "log") {
                    want(4);
                    cfg.p_grid = log_grid(std::stod(values[1]), std::stod(values[2]),
                                          static_cast<std::size_t>(std::stoul(values[3])));
                } else if (values[0] == "list") {
                    if (values.size() < 2)
                        config_fail(line_no, "p_grid list needs at least one value");
                    cfg.p_grid.clear();
                    for (std::size_t i = 1; i < values.size(); ++i)
                        cfg.p_grid.push_back(std::stod(values[i]));
                } else {
                    config_fail(line_no, "p_grid mode must be 'log' or 'list'");
                }
            } else if (key == "trials") {
                want(1);
                cfg.trials = std::stoull(values[0]);
            } else if (key == "k") {
                want(1);
                cfg.k = std::stoi(values[0]);
            } else if (key == "max_nodes") {
                want(1);
                if (values[0] == "none")
                    cfg.budget.max_nodes.reset();
                else
                    cfg.budget.max_nodes = std::stoull(values[0]);
            } else if (key == "seed") {
                want(1);
                cfg.master_seed = std::stoull(values[0]);
            } else if (key == "rng") {
                want(1);
                const auto alg = rng_from_name(values[0]);
                if (!alg)
                    config_fail(line_no, "unknown rng '" + values[0] + "'");
                cfg.rng = *alg;
            } else if (key == "workers") {
                want(1);
                cfg.workers = static_cast<unsigned>(std::stoul(values[0]));
            } else if (key == "records") {
                want(1);
                cfg.records_dir = values[0];
                cfg.keep_records = true;
            } else {
                config_fail(line_no, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            config_fail(line_no, e.what());
        } catch (const std::out_of_range&) {
            config_fail(line_no, "numeric value out of range");
        }
    }

    if (cfg.p_grid.empty())
        cfg.p_grid = default_p_grid();
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path.string());
    return parse_config(in);
}

bool fraction_non_increasing_within_ci(std::span<const SummaryRow> curve) {
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const auto& a = curve[i];
        const auto& b = curve[i + 1];
        if (std::isnan(a.fraction) || std::isnan(b.fraction))
            continue;
        const double half_a = (a.ci_hi - a.ci_lo) / 2.0;
        const double half_b = (b.ci_hi - b.ci_lo) / 2.0;
        if (b.fraction - a.fraction > half_a + half_b)
            return false;
    }
    return true;
}

} // namespace swcol
