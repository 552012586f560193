#include <gtest/gtest.h>

#include <map>

#include "rguard/behavior_monitor.hpp"
#include "rguard/random.hpp"

using namespace rguard;

namespace {

SyscallEvent creat(Pid pid, std::uint64_t ts, const std::string& path = "/tmp/f") {
    return make_open_event(pid, 0, "p", ts, path, kOWrOnly | kOCreat);
}

}  // namespace

TEST(BehaviorMonitor, EmitsOnTheThirdCreationWithThresholdThree) {
    BehaviorMonitor m({.threshold_t = 3});
    EXPECT_FALSE(m.observe(creat(42, 1)));
    EXPECT_FALSE(m.observe(creat(42, 2)));
    const auto c = m.observe(creat(42, 3, "/tmp/third"));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->pid, 42);
    EXPECT_EQ(c->creation_count_at_emit, 3u);
    EXPECT_EQ(c->path, "/tmp/third");
}

TEST(BehaviorMonitor, NonCreatOpenLeavesCounterAlone) {
    BehaviorMonitor m({.threshold_t = 1});
    EXPECT_FALSE(m.observe(make_open_event(5, 0, "cat", 1, "/etc/passwd", 0)));
    EXPECT_EQ(m.creation_count(5), 0u);
}

TEST(BehaviorMonitor, CountersArePerPid) {
    BehaviorMonitor m({.threshold_t = 2});
    EXPECT_FALSE(m.observe(creat(1, 1)));
    EXPECT_FALSE(m.observe(creat(2, 2)));
    EXPECT_TRUE(m.observe(creat(1, 3)));
    EXPECT_EQ(m.creation_count(2), 1u);
}

TEST(BehaviorMonitor, ResetThenCreateCountsOne) {
    BehaviorMonitor m;
    m.observe(creat(9, 1));
    m.observe(creat(9, 2));
    m.reset(9);
    m.observe(creat(9, 3));
    EXPECT_EQ(m.creation_count(9), 1u);
    EXPECT_NO_THROW(m.reset(12345));
}

TEST(BehaviorMonitor, ExitRemovesState) {
    BehaviorMonitor m;
    m.observe(creat(9, 1));
    m.observe(make_exit_event(9, 0, "p", 2));
    EXPECT_EQ(m.state(9), nullptr);
    EXPECT_EQ(m.table_size(), 0u);
}

TEST(BehaviorMonitor, TenThousandPidsResetLeavesEmptyTable) {
    BehaviorMonitor m;
    for (Pid p = 1; p <= 10000; ++p) m.observe(creat(p, static_cast<std::uint64_t>(p)));
    EXPECT_EQ(m.table_size(), 10000u);
    for (Pid p = 1; p <= 10000; ++p) m.reset(p);
    EXPECT_EQ(m.table_size(), 0u);
}

TEST(BehaviorMonitor, OnlyFirstCrossingWhenConfigured) {
    BehaviorMonitor m({.threshold_t = 2, .emit_every_candidate_after_threshold = false});
    EXPECT_FALSE(m.observe(creat(1, 1)));
    EXPECT_TRUE(m.observe(creat(1, 2)));
    EXPECT_FALSE(m.observe(creat(1, 3)));
}

TEST(BehaviorMonitor, ZeroThresholdRejected) {
    EXPECT_THROW(BehaviorMonitor({.threshold_t = 0}), std::invalid_argument);
}

// Property: counts equal a brute-force recount over the event history since
// each pid's last exit, emission happens iff count >= T, and the table never
// holds more pids than are alive.
TEST(BehaviorMonitor, MatchesBruteForceRecount) {
    DeterministicRng rng(99);
    for (int round = 0; round < 200; ++round) {
        const auto T = rng.between(1, 6);
        BehaviorMonitor m({.threshold_t = T});
        std::vector<SyscallEvent> history;
        for (int i = 0; i < 300; ++i) {
            const auto pid = static_cast<Pid>(rng.between(1, 8));
            const auto ts = static_cast<std::uint64_t>(i);
            SyscallEvent e;
            switch (rng.below(6)) {
            case 0: e = make_exit_event(pid, 0, "p", ts); break;
            case 1: e = make_open_event(pid, 0, "p", ts, "/r", static_cast<std::uint32_t>(rng.below(4))); break;
            case 2: e = make_exec_event(pid, 0, "p", ts, "/bin/p"); break;
            default: e = make_open_event(pid, 0, "p", ts, "/w", kOCreat | static_cast<std::uint32_t>(rng.below(4))); break;
            }
            history.push_back(e);
            const auto emitted = m.observe(e);

            std::uint64_t expected = 0;
            for (auto it = history.rbegin(); it != history.rend(); ++it) {
                if (it->pid != pid) continue;
                if (it->is_exit()) break;
                if (it->is_creat_open()) ++expected;
            }
            ASSERT_EQ(m.creation_count(pid), expected);
            ASSERT_EQ(emitted.has_value(), e.is_creat_open() && expected >= T);

            std::map<Pid, bool> alive;
            for (const auto& h : history)
                if (h.is_open()) alive[h.pid] = true;
                else if (h.is_exit()) alive[h.pid] = false;
            std::size_t live = 0;
            for (const auto& [p, a] : alive) live += a ? 1 : 0;
            ASSERT_LE(m.table_size(), live);
        }
    }
}
