#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <thread>
#include <unistd.h>

#include "model_fixture.hpp"
#include "rguard/detection_daemon.hpp"
#include "rguard/kernel_record.hpp"
#include "rguard/scenario.hpp"
#include "test_support.hpp"

using namespace rguard;
namespace t = rguard::testing;
namespace fs = std::filesystem;

namespace {

fs::path write_generated(const t::TempDir& dir, const ScenarioParams& p, const std::string& name = "s") {
    write_scenario(generate_scenario(p), dir / name);
    return dir / name;
}

RunReport replay_with(const fs::path& scenario, DaemonConfig config = {}, const HashBlocklist& bl = {}) {
    return replay(scenario, config, t::corpus_model(), bl);
}

std::vector<Detection> note_detections(const RunReport& r) {
    std::vector<Detection> out;
    for (const auto& d : r.detections)
        if (d.trigger == TriggerKind::RansomNote) out.push_back(d);
    return out;
}

// Emits a fixed list of events, then throws.
class FailingSource : public EventSource {
public:
    explicit FailingSource(std::vector<SyscallEvent> events) : events_(std::move(events)) {}
    std::optional<SyscallEvent> next() override {
        if (pos_ < events_.size()) return events_[pos_++];
        throw EventSourceError("ring buffer unmapped");
    }

private:
    std::vector<SyscallEvent> events_;
    std::size_t pos_ = 0;
};

// Writes records to a pipe from a helper thread and returns the read end.
class RecordPipe {
public:
    explicit RecordPipe(std::vector<KernelRecordBytes> records, std::size_t trailing_garbage = 0) {
        int fds[2];
        if (::pipe(fds) != 0) throw std::runtime_error("pipe");
        read_fd_ = fds[0];
        writer_ = std::thread([fd = fds[1], recs = std::move(records), trailing_garbage] {
            for (const auto& r : recs) {
                const auto* p = reinterpret_cast<const char*>(r.data());
                std::size_t off = 0;
                while (off < r.size()) {
                    const auto n = ::write(fd, p + off, r.size() - off);
                    if (n <= 0) break;
                    off += static_cast<std::size_t>(n);
                }
            }
            const std::string junk(trailing_garbage, 'x');
            if (!junk.empty()) [[maybe_unused]] auto n = ::write(fd, junk.data(), junk.size());
            ::close(fd);
        });
    }
    ~RecordPipe() {
        writer_.join();
        ::close(read_fd_);
    }
    int fd() const { return read_fd_; }

private:
    int read_fd_ = -1;
    std::thread writer_;
};

}  // namespace

TEST(Scenario, GenerationIsDeterministic) {
    t::TempDir dir;
    for (auto kind : {ScenarioKind::NoteFirst, ScenarioKind::NotePerDirectory, ScenarioKind::BenignBuild,
                      ScenarioKind::StealthSlow}) {
        const ScenarioParams p{.kind = kind, .seed = 7};
        const auto a = generate_scenario(p);
        const auto b = generate_scenario(p);
        EXPECT_EQ(a.events, b.events);
        EXPECT_EQ(a.files, b.files);
        write_scenario(a, dir / "a");
        write_scenario(b, dir / "b");
        EXPECT_EQ(t::read_file(dir / "a/events.trace"), t::read_file(dir / "b/events.trace"));
        EXPECT_EQ(t::read_file(dir / "a/truth.json"), t::read_file(dir / "b/truth.json"));
        EXPECT_NE(generate_scenario({.kind = kind, .seed = 8}).events, a.events);
    }
}

TEST(Scenario, TracesAreValidAndOrdered) {
    for (auto kind : {ScenarioKind::NoteFirst, ScenarioKind::BenignBuild, ScenarioKind::StealthSlow}) {
        const auto s = generate_scenario({.kind = kind, .seed = 3});
        for (std::size_t i = 0; i < s.events.size(); ++i) {
            ASSERT_NO_THROW(validate_event(s.events[i]));
            if (i > 0) ASSERT_LE(s.events[i - 1].timestamp_ns, s.events[i].timestamp_ns);
        }
    }
}

TEST(Scenario, NoteFirstWritesNoteBeforeAnyEncryption) {
    const auto s = generate_scenario({.kind = ScenarioKind::NoteFirst, .dirs = 12, .seed = 2});
    ASSERT_TRUE(s.truth.attacker_pid);
    EXPECT_EQ(s.truth.note_paths.size(), 12u);
    std::vector<std::string> creats;
    for (const auto& e : s.events)
        if (e.pid == *s.truth.attacker_pid && e.is_creat_open()) creats.push_back(std::get<FileOpenInfo>(e.kind).path);
    ASSERT_GE(creats.size(), 12u);
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(creats[i], s.truth.note_paths[i]);
}

TEST(Scenario, NotePerDirectoryCounts) {
    const auto s = generate_scenario({.kind = ScenarioKind::NotePerDirectory, .dirs = 5, .files_per_dir = 20});
    EXPECT_EQ(s.truth.note_paths.size(), 5u);
    EXPECT_EQ(s.truth.encrypted_paths.size(), 100u);
    EXPECT_EQ(s.truth.first_dir_file_count, 20u);
    for (const auto& n : s.truth.note_paths) EXPECT_TRUE(s.files.count(n)) << n;
}

TEST(Scenario, BenignBuildHasNoAttacker) {
    const auto s = generate_scenario({.kind = ScenarioKind::BenignBuild});
    EXPECT_FALSE(s.truth.attacker_pid);
    EXPECT_TRUE(s.truth.note_paths.empty());
}

TEST(Scenario, ZeroCountsRejected) {
    EXPECT_THROW(generate_scenario({.dirs = 0}), std::invalid_argument);
    EXPECT_THROW(generate_scenario({.files_per_dir = 0}), std::invalid_argument);
}

TEST(Replay, NoteFirstStopsBeforeAnyFileIsTouched) {
    t::TempDir dir;
    const auto r = replay_with(write_generated(dir, {.kind = ScenarioKind::NoteFirst}));
    const auto notes = note_detections(r);
    ASSERT_EQ(notes.size(), 1u);
    EXPECT_EQ(notes[0].affected_files, 0u);
    EXPECT_EQ(notes[0].action, ActionOutcome::Skipped);
    EXPECT_TRUE(r.completed);
}

TEST(Replay, NotePerDirectoryDetectsAtFirstNote) {
    t::TempDir dir;
    const ScenarioParams p{.kind = ScenarioKind::NotePerDirectory, .dirs = 5, .files_per_dir = 20};
    const auto s = generate_scenario(p);
    write_scenario(s, dir / "s");
    const auto r = replay_with(dir / "s");
    const auto notes = note_detections(r);
    ASSERT_EQ(notes.size(), 1u);
    EXPECT_EQ(notes[0].path, s.truth.note_paths[0]);
    EXPECT_EQ(notes[0].creat_opens_at_decision, 21u);
    EXPECT_EQ(notes[0].affected_files, 20u);
}

TEST(Replay, BenignBuildRaisesNothing) {
    t::TempDir dir;
    const auto r = replay_with(write_generated(dir, {.kind = ScenarioKind::BenignBuild}));
    EXPECT_TRUE(r.detections.empty());
    EXPECT_GT(r.candidates_scanned, 0u);
    EXPECT_TRUE(r.errors.empty());
}

TEST(Replay, DecisionNeverPrecedesEvent) {
    t::TempDir dir;
    for (auto kind : {ScenarioKind::NoteFirst, ScenarioKind::NotePerDirectory, ScenarioKind::StealthSlow}) {
        const auto r = replay_with(write_generated(dir, {.kind = kind}, std::string(to_string(kind))));
        ASSERT_FALSE(r.detections.empty());
        for (const auto& d : r.detections) EXPECT_GE(d.decision_timestamp_ns, d.event_timestamp_ns);
    }
}

TEST(Replay, MalformedLineIsNamed) {
    t::TempDir dir;
    const auto s = write_generated(dir, {.kind = ScenarioKind::NoteFirst});
    auto text = t::read_file(s / "events.trace");
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) pos = text.find('\n', pos) + 1;
    text.insert(pos, "{\"ts_ns\": oops}\n");
    t::write_file(s / "events.trace", text);
    try {
        replay_with(s);
        FAIL();
    } catch (const TraceDecodeError& e) {
        EXPECT_EQ(e.line(), 7u);
        EXPECT_EQ(std::string(e.what()).rfind("line 7:", 0), 0u) << e.what();
    }
}

TEST(Replay, MissingExecutableIsIndeterminateAndRunContinues) {
    t::TempDir dir;
    const auto scenario = generate_scenario({.kind = ScenarioKind::NoteFirst});
    write_scenario(scenario, dir / "s");
    fs::remove(sidecar_resolver(dir / "s/fs")(scenario.truth.attacker_exe));
    const auto r = replay_with(dir / "s");
    EXPECT_EQ(r.exec_indeterminate, 1u);
    ASSERT_FALSE(r.errors.empty());
    EXPECT_NE(r.errors[0].find("target disappeared"), std::string::npos) << r.errors[0];
    EXPECT_EQ(note_detections(r).size(), 1u);
    EXPECT_TRUE(r.completed);
}

TEST(Replay, BlocklistHitAddsExecDetectionWithoutChangingNoteResults) {
    t::TempDir dir;
    const auto scenario = generate_scenario({.kind = ScenarioKind::NotePerDirectory});
    write_scenario(scenario, dir / "s");
    const auto listed = HashBlocklist::from_digests({*Sha256Digest::from_hex(scenario.truth.attacker_digest_hex)});
    const auto with = replay_with(dir / "s", {}, listed);
    const auto without = replay_with(dir / "s");
    ASSERT_FALSE(with.detections.empty());
    EXPECT_EQ(with.detections[0].trigger, TriggerKind::ExecHash);
    EXPECT_EQ(with.detections[0].verdict, Verdict::known_malware(scenario.truth.attacker_digest_hex));
    EXPECT_EQ(with.detections[0].pid, *scenario.truth.attacker_pid);
    EXPECT_TRUE(std::none_of(without.detections.begin(), without.detections.end(),
                             [](const Detection& d) { return d.trigger == TriggerKind::ExecHash; }));
    EXPECT_EQ(note_detections(with), note_detections(without));
}

TEST(Replay, ReportsAreReproducible) {
    t::TempDir dir;
    const auto s = write_generated(dir, {.kind = ScenarioKind::StealthSlow, .seed = 9});
    const auto a = replay_with(s);
    const auto b = replay_with(s);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_json(false), b.to_json(false));
}

TEST(Replay, WatchScopeSkipsOtherPaths) {
    t::TempDir dir;
    DaemonConfig c;
    c.watch_scope = {"/nowhere/"};
    const auto r = replay_with(write_generated(dir, {.kind = ScenarioKind::NoteFirst}), c);
    EXPECT_EQ(r.candidates_scanned, 0u);
    EXPECT_GT(r.candidates_out_of_scope, 0u);
    EXPECT_TRUE(r.detections.empty());
}

TEST(Replay, KillWithoutEnforceIsConfigError) {
    DaemonConfig c;
    c.response = ResponseMode::Kill;
    EXPECT_THROW(c.validate(), ConfigError);
    c.enforce = true;
    EXPECT_NO_THROW(c.validate());
}

TEST(Daemon, ThroughputWithoutScans) {
    std::vector<SyscallEvent> events;
    const std::size_t n = 200'000;
    events.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto pid = static_cast<Pid>(100 + i % 64);
        events.push_back(make_open_event(pid, 1000, "worker", 1'000 + i, "/data/out/" + std::to_string(i % 977),
                                         i % 3 == 0 ? kOWrOnly | kOCreat : 0));
    }
    DaemonConfig c;
    c.monitor.threshold_t = 1'000'000;
    DetectionDaemon daemon(c, t::corpus_model(), {}, host_resolver(), true);
    TraceReplaySource source(std::move(events));
    const auto start = std::chrono::steady_clock::now();
    const auto r = daemon.run(source);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(r.events_total, n);
    EXPECT_EQ(r.candidates_scanned, 0u);
    EXPECT_GE(static_cast<double>(n) / secs, 10'000.0) << secs;
}

TEST(Daemon, InvalidEventsAreRecordedAndSkipped) {
    std::vector<SyscallEvent> events = {make_exit_event(5, 0, "a", 1)};
    events.push_back(events[0]);
    events[1].comm = "";
    DetectionDaemon daemon({}, t::corpus_model(), {}, host_resolver(), true);
    TraceReplaySource source(events);
    const auto r = daemon.run(source);
    EXPECT_EQ(r.events_total, 1u);
    EXPECT_EQ(r.errors.size(), 1u);
}

TEST(Daemon, SourceFailureGivesPartialReport) {
    std::vector<SyscallEvent> events;
    for (int i = 0; i < 3; ++i) events.push_back(make_open_event(7, 0, "a", 10 + i, "/etc/hosts", 0));
    DetectionDaemon daemon({}, t::corpus_model(), {}, host_resolver(), true);
    FailingSource source(events);
    const auto r = daemon.run(source);
    EXPECT_FALSE(r.completed);
    EXPECT_EQ(r.events_total, 3u);
    EXPECT_NE(r.failure.find("ring buffer unmapped"), std::string::npos);
}

TEST(Daemon, StopFlagEndsRun) {
    std::atomic<bool> stop{true};
    DetectionDaemon daemon({}, t::corpus_model(), {}, host_resolver(), true);
    TraceReplaySource source({make_exit_event(5, 0, "a", 1)});
    const auto r = daemon.run(source, &stop);
    EXPECT_FALSE(r.completed);
    EXPECT_EQ(r.failure, "interrupted");
    EXPECT_EQ(r.events_total, 0u);
}

TEST(Daemon, KernelStreamMatchesTraceReplay) {
    t::TempDir dir;
    const auto scenario = generate_scenario({.kind = ScenarioKind::NotePerDirectory});
    write_scenario(scenario, dir / "s");
    std::vector<KernelRecordBytes> records;
    for (std::size_t i = 0; i < scenario.events.size(); ++i) {
        records.push_back(encode_kernel_record(scenario.events[i]));
        if (i == 5) records.push_back(encode_lost_record({scenario.events[i].timestamp_ns, 12}));
    }
    const auto expected = replay_with(dir / "s");

    RecordPipe pipe(records);
    KernelRecordStreamSource source(pipe.fd(), false);
    DetectionDaemon daemon({}, t::corpus_model(), {}, sidecar_resolver(dir / "s/fs"), true);
    auto r = daemon.run(source);
    EXPECT_EQ(r.source_dropped, 12u);
    EXPECT_EQ(source.records_read(), records.size());
    // Paths and comms longer than the record fields would be truncated; the
    // generator keeps them short, so apart from the lost count the runs agree.
    r.source_dropped = 0;
    EXPECT_EQ(r, expected);
}

TEST(Daemon, TruncatedKernelRecordFailsTheSource) {
    RecordPipe pipe({encode_kernel_record(make_exit_event(5, 0, "a", 1))}, 100);
    KernelRecordStreamSource source(pipe.fd(), false);
    DetectionDaemon daemon({}, t::corpus_model(), {}, host_resolver(), true);
    const auto r = daemon.run(source);
    EXPECT_FALSE(r.completed);
    EXPECT_EQ(r.events_total, 1u);
}

// A source that already applied the threshold in kernel forwards only the
// creat-opens past T; the agent must reach the same verdicts as when it
// counts itself.
TEST(Daemon, GatedSourceAgreesWithRawCounting) {
    t::TempDir dir;
    const auto scenario = generate_scenario({.kind = ScenarioKind::NotePerDirectory, .seed = 4});
    write_scenario(scenario, dir / "s");
    const auto raw = replay_with(dir / "s");

    BehaviorMonitor gate;
    std::vector<KernelRecordBytes> forwarded;
    for (const auto& e : scenario.events) {
        const auto candidate = gate.observe(e);
        if (!e.is_open() || candidate) forwarded.push_back(encode_kernel_record(e));
    }
    RecordPipe pipe(forwarded);
    KernelRecordStreamSource source(pipe.fd(), true);
    DetectionDaemon daemon({}, t::corpus_model(), {}, sidecar_resolver(dir / "s/fs"), true);
    const auto gated = daemon.run(source);
    const auto a = note_detections(raw);
    const auto b = note_detections(gated);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].pid, b[i].pid);
        EXPECT_EQ(a[i].path, b[i].path);
        EXPECT_EQ(a[i].verdict, b[i].verdict);
        EXPECT_EQ(a[i].event_timestamp_ns, b[i].event_timestamp_ns);
    }
}

TEST(Config, FileKeysAndRelativePaths) {
    t::TempDir dir;
    t::write_file(dir / "agent.json",
                  R"({"model_path": "m.rgmodel", "threshold_t": 4, "response": "log", "allow_pids": [300],
                      "watch_scope": ["/home/"], "max_scan_bytes": 4096})");
    const auto c = DaemonConfig::from_json_file(dir / "agent.json");
    EXPECT_EQ(c.model_path, dir / "m.rgmodel");
    EXPECT_EQ(c.monitor.threshold_t, 4u);
    EXPECT_EQ(c.response, ResponseMode::LogOnly);
    EXPECT_EQ(c.allow_pids, std::set<Pid>{300});
    EXPECT_EQ(c.watch_scope, std::vector<std::string>{"/home/"});
    EXPECT_EQ(c.max_scan_bytes, 4096u);
}

TEST(Config, UnknownKeyRejected) {
    t::TempDir dir;
    t::write_file(dir / "agent.json", R"({"treshold_t": 4})");
    try {
        DaemonConfig::from_json_file(dir / "agent.json");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("treshold_t"), std::string::npos);
    }
}

TEST(Config, BadValuesRejected) {
    t::TempDir dir;
    t::write_file(dir / "a.json", R"({"threshold_t": 0})");
    EXPECT_THROW(DaemonConfig::from_json_file(dir / "a.json"), ConfigError);
    t::write_file(dir / "b.json", R"({"response": "kill"})");
    EXPECT_THROW(DaemonConfig::from_json_file(dir / "b.json"), ConfigError);
    t::write_file(dir / "c.json", R"({"response": "kill", "enforce": true})");
    EXPECT_NO_THROW(DaemonConfig::from_json_file(dir / "c.json"));
    EXPECT_THROW(DaemonConfig::from_json_file(dir / "missing.json"), ConfigError);
    EXPECT_THROW(DetectionDaemon(DaemonConfig{}, host_resolver(), true), ConfigError);
}
