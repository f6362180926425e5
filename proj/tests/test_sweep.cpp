#include "mgf/decomposition/sweep.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <unistd.h>

using namespace mgf;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
    fs::path d = fs::temp_directory_path() / ("mgf-sweep-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::vector<std::string> collect(const SweepConfig& c, SweepSummary* summary = nullptr) {
    std::vector<std::string> lines;
    SweepSummary s = run_sweep(c, [&](const SweepRecord& r) { lines.push_back(to_json(r).dump()); });
    if (summary) *summary = s;
    return lines;
}

}  // namespace

TEST(SweepGrid, OrderAndSize) {
    auto g = sweep_grid(2, 2);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[0].a, (Triple{2, 1, 1}));
    EXPECT_EQ(g[3].a, (Triple{2, 2, 2}));
    for (auto& c : g) EXPECT_EQ(c.n, 1);
    // sum_{a1=2}^{A} (a1-1) B^2
    EXPECT_EQ(sweep_grid(12, 12).size(), std::size_t(66 * 144));
    EXPECT_THROW(sweep_grid(0, 3), std::invalid_argument);
}

TEST(SweepRecord, JsonRoundTrip) {
    SweepRecord r{{{4, 2, 3}, 2}, Rational(-7, 3)};
    nlohmann::json j = to_json(r);
    EXPECT_EQ(j.dump(), R"({"a":[4,2,3],"n":2,"x":"-7/3"})");
    SweepRecord b = sweep_record_from_json(j);
    EXPECT_EQ(b.cell.a, r.cell.a);
    EXPECT_EQ(b.cell.n, 2);
    EXPECT_EQ(b.x, r.x);
}

TEST(Sweep, SmallGridIsAllZero) {
    SweepConfig c;
    c.max_a1 = 6;
    c.max_a23 = 6;
    SweepSummary s;
    auto lines = collect(c, &s);
    EXPECT_EQ(s.cells, lines.size());
    EXPECT_EQ(s.evaluated, s.cells);
    EXPECT_TRUE(s.nonzero.empty());
}

TEST(Sweep, DeterministicAcrossJobCounts) {
    SweepConfig c;
    c.max_a1 = 7;
    c.max_a23 = 5;
    c.checkpoint_every = 13;
    auto one = collect(c);
    c.jobs = 4;
    EXPECT_EQ(collect(c), one);
}

TEST(Sweep, CheckpointAndResume) {
    const fs::path dir = scratch_dir("resume");
    ::setenv("MGF_CHECKPOINT_DIR", dir.c_str(), 1);
    SweepConfig c;
    c.max_a1 = 5;
    c.max_a23 = 4;
    c.checkpoint_every = 7;
    c.checkpoint = default_checkpoint_path(5, 4);
    EXPECT_EQ(*c.checkpoint, dir / "check-xn-5-4.json");
    const auto full = collect(c);

    // Simulate an interruption after the second block.
    detail::write_checkpoint(*c.checkpoint, c, 14, {});
    c.resume = true;
    SweepSummary s;
    auto rest = collect(c, &s);
    EXPECT_EQ(s.resumed_from, 14u);
    ASSERT_EQ(rest.size(), full.size() - 14);
    EXPECT_TRUE(std::equal(rest.begin(), rest.end(), full.begin() + 14));

    nlohmann::json j = nlohmann::json::parse(std::ifstream(*c.checkpoint));
    EXPECT_EQ(j.at("next").get<std::size_t>(), full.size());
    EXPECT_FALSE(fs::exists(fs::path(c.checkpoint->string() + ".tmp")));
    ::unsetenv("MGF_CHECKPOINT_DIR");
    fs::remove_all(dir);
}

TEST(Sweep, ResumeRejectsForeignCheckpoint) {
    const fs::path dir = scratch_dir("foreign");
    SweepConfig c;
    c.max_a1 = 4;
    c.max_a23 = 4;
    c.checkpoint = dir / "ck.json";
    SweepConfig other;
    other.max_a1 = other.max_a23 = 3;
    detail::write_checkpoint(*c.checkpoint, other, 1, {});
    c.resume = true;
    EXPECT_THROW(collect(c), std::runtime_error);
    c.checkpoint = dir / "missing.json";
    EXPECT_THROW(collect(c), std::runtime_error);
    fs::remove_all(dir);
}

TEST(Sweep, InjectedFaultIsReportedAndSurvivesResume) {
    const fs::path dir = scratch_dir("fault");
    SweepConfig c;
    c.max_a1 = 4;
    c.max_a23 = 3;
    c.checkpoint_every = 5;
    c.fault_cell = 3;
    c.checkpoint = dir / "ck.json";
    SweepSummary s;
    collect(c, &s);
    ASSERT_EQ(s.nonzero.size(), 1u);
    EXPECT_EQ(sweep_grid(4, 3)[3].a, s.nonzero[0].cell.a);

    // Resuming past the faulty cell keeps the recorded failure.
    detail::write_checkpoint(*c.checkpoint, c, 5, s.nonzero);
    c.resume = true;
    c.fault_cell.reset();
    collect(c, &s);
    EXPECT_EQ(s.nonzero.size(), 1u);
    fs::remove_all(dir);
}
