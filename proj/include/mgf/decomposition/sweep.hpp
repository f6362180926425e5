#pragma once

#include "mgf/decomposition/conjecture.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mgf {

// One grid cell of the X_n sweep.
struct SweepCell {
    Triple a;
    int n;
};

struct SweepRecord {
    SweepCell cell;
    Rational x;
};

struct SweepConfig {
    int max_a1 = 12;
    int max_a23 = 12;
    int jobs = 1;
    std::size_t checkpoint_every = 10000;
    std::optional<std::filesystem::path> checkpoint;  // none: no state file
    bool resume = false;
    std::optional<std::size_t> fault_cell;            // index whose X is computed with XFault
};

struct SweepSummary {
    std::size_t cells = 0;         // grid size
    std::size_t evaluated = 0;     // cells computed in this run
    std::size_t resumed_from = 0;  // first cell index of this run
    std::vector<SweepRecord> nonzero;
};

// Canonical order: a1, then a2, then a3, then n.
inline std::vector<SweepCell> sweep_grid(int max_a1, int max_a23) {
    if (max_a1 < 1 || max_a23 < 1) throw std::invalid_argument("sweep bounds must be >= 1");
    std::vector<SweepCell> g;
    for (int a1 = 2; a1 <= max_a1; ++a1)
        for (int a2 = 1; a2 <= max_a23; ++a2)
            for (int a3 = 1; a3 <= max_a23; ++a3)
                for (int n = 1; n < a1; ++n) g.push_back({{a1, a2, a3}, n});
    return g;
}

inline nlohmann::json to_json(const SweepRecord& r) {
    return {{"a", {r.cell.a.a1, r.cell.a.a2, r.cell.a.a3}}, {"n", r.cell.n}, {"x", r.x.str()}};
}

inline SweepRecord sweep_record_from_json(const nlohmann::json& j) {
    return {{{j.at("a").at(0).get<int>(), j.at("a").at(1).get<int>(), j.at("a").at(2).get<int>()}, j.at("n").get<int>()},
            Rational::parse(j.at("x").get<std::string>())};
}

inline std::filesystem::path default_checkpoint_path(int max_a1, int max_a23) {
    const char* dir = std::getenv("MGF_CHECKPOINT_DIR");
    std::filesystem::path base = (dir && *dir) ? dir : ".";
    return base / ("check-xn-" + std::to_string(max_a1) + "-" + std::to_string(max_a23) + ".json");
}

namespace detail {

inline void write_checkpoint(const std::filesystem::path& p, const SweepConfig& c, std::size_t next,
                             const std::vector<SweepRecord>& nonzero) {
    nlohmann::json j = {{"max_a1", c.max_a1}, {"max_a23", c.max_a23}, {"next", next}, {"nonzero", nlohmann::json::array()}};
    for (auto& r : nonzero) j["nonzero"].push_back(to_json(r));
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream o(tmp);
        if (!o) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        o << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, p);
}

}  // namespace detail

// Parallel exact sweep. Cells are computed in blocks of checkpoint_every;
// within a block workers take cells from a shared counter and results are
// emitted to `sink` in grid order, so output does not depend on `jobs`.
inline SweepSummary run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& sink) {
    const std::vector<SweepCell> grid = sweep_grid(cfg.max_a1, cfg.max_a23);
    SweepSummary s;
    s.cells = grid.size();
    std::size_t start = 0;
    if (cfg.resume) {
        if (!cfg.checkpoint) throw std::invalid_argument("resume needs a checkpoint path");
        std::ifstream in(*cfg.checkpoint);
        if (!in) throw std::runtime_error("no checkpoint at " + cfg.checkpoint->string());
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("max_a1").get<int>() != cfg.max_a1 || j.at("max_a23").get<int>() != cfg.max_a23)
            throw std::runtime_error("checkpoint " + cfg.checkpoint->string() + " belongs to a different grid");
        start = j.at("next").get<std::size_t>();
        if (start > grid.size()) throw std::runtime_error("checkpoint position beyond the grid");
        for (auto& r : j.at("nonzero")) s.nonzero.push_back(sweep_record_from_json(r));
    }
    s.resumed_from = start;
    const std::size_t block = std::max<std::size_t>(1, cfg.checkpoint_every);
    const int jobs = std::max(1, cfg.jobs);
    std::vector<Rational> out;
    for (std::size_t b0 = start; b0 < grid.size(); b0 += block) {
        const std::size_t b1 = std::min(grid.size(), b0 + block);
        out.assign(b1 - b0, Rational(0));
        std::atomic<std::size_t> next{b0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < b1;) {
                const XFault f = (cfg.fault_cell && *cfg.fault_cell == i) ? XFault::flip_leading_euler : XFault::none;
                out[i - b0] = X_value(grid[i].n, grid[i].a, f);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (std::size_t i = b0; i < b1; ++i) {
            SweepRecord r{grid[i], out[i - b0]};
            if (!r.x.is_zero()) s.nonzero.push_back(r);
            sink(r);
        }
        s.evaluated += b1 - b0;
        if (cfg.checkpoint) detail::write_checkpoint(*cfg.checkpoint, cfg, b1, s.nonzero);
    }
    return s;
}

}  // namespace mgf
