#include <gtest/gtest.h>

#include <chrono>
#include <csignal>
#include <sys/wait.h>
#include <thread>
#include <unistd.h>

#include "rguard/response_engine.hpp"
#include "sleeper.hpp"
#include "test_support.hpp"

using namespace rguard;
namespace t = rguard::testing;
using rguard::testing::Sleeper;

namespace {

ResponseAction action_for(Pid pid, ResponseMode mode, std::string comm = "sleep") {
    return {mode, pid, std::move(comm), std::nullopt, Verdict::ransom_note(4.5), monotonic_now_ns()};
}

}  // namespace

TEST(ResponseMode, NamesRoundTrip) {
    for (auto m : {ResponseMode::DryRun, ResponseMode::LogOnly, ResponseMode::Kill, ResponseMode::Suspend})
        EXPECT_EQ(parse_response_mode(to_string(m)), m);
    EXPECT_FALSE(parse_response_mode("nuke"));
}

TEST(ProcessIdentity, ReadsOwnProcess) {
    const auto id = read_process_identity(::getpid());
    ASSERT_TRUE(id);
    EXPECT_FALSE(id->comm.empty());
    EXPECT_GT(id->start_time_ticks, 0u);
    EXPECT_FALSE(read_process_identity(0x7ffffff0));
}

TEST(ResponseEngine, DryRunLeavesProcessAlone) {
    Sleeper s;
    ResponseEngine engine;
    const auto r = engine.act(action_for(s.pid(), ResponseMode::DryRun));
    EXPECT_EQ(r.outcome, ActionOutcome::Skipped);
    EXPECT_FALSE(s.wait_dead(std::chrono::milliseconds(50)));
    EXPECT_EQ(::kill(s.pid(), 0), 0);
}

TEST(ResponseEngine, KillTerminatesWithin100ms) {
    Sleeper s;
    ResponseEngine engine;
    const auto start = std::chrono::steady_clock::now();
    const auto r = engine.act(action_for(s.pid(), ResponseMode::Kill));
    ASSERT_EQ(r.outcome, ActionOutcome::Applied) << r.note;
    const auto status = s.wait_dead(std::chrono::milliseconds(100));
    ASSERT_TRUE(status);
    EXPECT_TRUE(WIFSIGNALED(*status));
    EXPECT_EQ(WTERMSIG(*status), SIGKILL);
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(100));
}

TEST(ResponseEngine, SuspendStopsProcess) {
    Sleeper s;
    ResponseEngine engine;
    ASSERT_EQ(engine.act(action_for(s.pid(), ResponseMode::Suspend)).outcome, ActionOutcome::Applied);
    bool stopped = false;
    for (int i = 0; i < 100 && !stopped; ++i) {
        stopped = s.stopped();
        if (!stopped) std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
    EXPECT_TRUE(stopped);
}

TEST(ResponseEngine, ExitedTargetIsAlreadyGone) {
    Pid pid;
    {
        Sleeper s;
        pid = s.pid();
    }
    ResponseEngine engine;
    EXPECT_EQ(engine.act(action_for(pid, ResponseMode::Kill)).outcome, ActionOutcome::TargetAlreadyGone);
}

TEST(ResponseEngine, RepeatedKillIsIdempotent) {
    Sleeper s;
    ResponseEngine engine;
    EXPECT_EQ(engine.act(action_for(s.pid(), ResponseMode::Kill)).outcome, ActionOutcome::Applied);
    ASSERT_TRUE(s.wait_dead(std::chrono::milliseconds(500)));
    EXPECT_EQ(engine.act(action_for(s.pid(), ResponseMode::Kill)).outcome, ActionOutcome::TargetAlreadyGone);
}

// The pid now names some other program: never signal it.
TEST(ResponseEngine, CommMismatchIsTreatedAsGone) {
    Sleeper s;
    ResponseEngine engine;
    EXPECT_EQ(engine.act(action_for(s.pid(), ResponseMode::Kill, "updater")).outcome,
              ActionOutcome::TargetAlreadyGone);
    EXPECT_FALSE(s.wait_dead(std::chrono::milliseconds(30)));
}

TEST(ResponseEngine, StartTimeMismatchIsTreatedAsGone) {
    Sleeper s;
    ResponseEngine engine;
    auto a = action_for(s.pid(), ResponseMode::Kill);
    a.start_time_ticks = read_process_identity(s.pid())->start_time_ticks + 1;
    EXPECT_EQ(engine.act(a).outcome, ActionOutcome::TargetAlreadyGone);
    a.start_time_ticks = read_process_identity(s.pid())->start_time_ticks;
    EXPECT_EQ(engine.act(a).outcome, ActionOutcome::Applied);
}

TEST(ResponseEngine, ProtectedTargetsRefused) {
    Sleeper s;
    ResponseEngine engine({.allow_pids = {s.pid()}});
    EXPECT_THROW(engine.act(action_for(::getpid(), ResponseMode::Kill, "")), RefusedTargetError);
    EXPECT_THROW(engine.act(action_for(1, ResponseMode::Kill, "")), RefusedTargetError);
    EXPECT_THROW(engine.act(action_for(s.pid(), ResponseMode::Kill)), RefusedTargetError);
    EXPECT_THROW(engine.act(action_for(0, ResponseMode::DryRun, "")), RefusedTargetError);
    EXPECT_TRUE(engine.is_protected(::getpid()));
    EXPECT_FALSE(s.wait_dead(std::chrono::milliseconds(20)));
}

TEST(ResponseEngine, AuditLogRecordsEveryAttempt) {
    t::TempDir dir;
    Sleeper s;
    {
        ResponseEngine engine({.audit_log = dir / "audit.jsonl"});
        engine.act(action_for(s.pid(), ResponseMode::DryRun));
        EXPECT_THROW(engine.act(action_for(::getpid(), ResponseMode::Kill, "")), RefusedTargetError);
    }
    const auto text = t::read_file(dir / "audit.jsonl");
    const auto first = text.substr(0, text.find('\n'));
    EXPECT_NE(first.find("\"pid\":" + std::to_string(s.pid())), std::string::npos) << first;
    EXPECT_NE(first.find("\"mode\":\"dry-run\""), std::string::npos) << first;
    EXPECT_NE(first.find("\"outcome\":\"skipped\""), std::string::npos) << first;
    EXPECT_NE(first.find("\"verdict\":\"ransom_note\""), std::string::npos) << first;
    EXPECT_NE(text.find("\"outcome\":\"refused\""), std::string::npos) << text;
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}
