#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rguard/behavior_monitor.hpp"
#include "rguard/event_source.hpp"
#include "rguard/model_store.hpp"
#include "rguard/nlp/pipeline.hpp"
#include "rguard/response_engine.hpp"
#include "rguard/static_analyzer.hpp"
#include "rguard/verdict.hpp"

namespace rguard {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DaemonConfig {
    // Empty means no blocklist: phase 1 still hashes but never matches.
    std::filesystem::path blocklist_path;
    std::filesystem::path model_path;
    MonitorConfig monitor;
    ResponseMode response = ResponseMode::DryRun;
    // Kill and Suspend are refused unless this is set.
    bool enforce = false;
    std::set<Pid> allow_pids;
    std::optional<std::filesystem::path> audit_log;
    std::size_t max_scan_bytes = nlp::kDefaultMaxScanBytes;
    // Path prefixes whose new files are scanned; empty scans everything.
    std::vector<std::string> watch_scope;

    void validate() const;

    /// JSON object with keys blocklist_path, model_path, threshold_t,
    /// emit_every_candidate_after_threshold, response, enforce, allow_pids,
    /// audit_log, max_scan_bytes, watch_scope. Missing keys keep defaults;
    /// unknown keys are an error. Relative paths resolve against the file's
    /// directory.
    static DaemonConfig from_json_file(const std::filesystem::path& path);
};

/// Maps a path as recorded in an event to where its bytes can be read.
using PathResolver = std::function<std::filesystem::path(const std::string& event_path)>;

/// Live mode: paths are read where they are.
PathResolver host_resolver();
/// Replay mode: `<sidecar_root>/<path without leading '/'>`.
PathResolver sidecar_resolver(std::filesystem::path sidecar_root);

enum class TriggerKind {
    ExecHash,
    RansomNote,
};

std::string_view to_string(TriggerKind t);

struct Detection {
    Verdict verdict;
    Pid pid = 0;
    std::string comm;
    TriggerKind trigger = TriggerKind::ExecHash;
    // Exe path for ExecHash, created file for RansomNote.
    std::string path;
    std::uint64_t event_timestamp_ns = 0;
    std::uint64_t decision_timestamp_ns = 0;
    // Creat-opens by this pid up to and including the triggering event.
    std::uint64_t creat_opens_at_decision = 0;
    // Of those, files that do not classify as ransom notes.
    std::uint64_t affected_files = 0;
    std::optional<ActionOutcome> action;

    bool operator==(const Detection&) const = default;
};

struct StageTiming {
    std::uint64_t count = 0;
    std::uint64_t total_ns = 0;
    std::uint64_t max_ns = 0;
    void add(std::uint64_t ns);
};

struct RunReport {
    std::uint64_t events_total = 0;
    std::uint64_t exec_events = 0;
    std::uint64_t open_events = 0;
    std::uint64_t creat_opens = 0;
    std::uint64_t exit_events = 0;
    std::uint64_t exec_checks = 0;
    std::uint64_t exec_indeterminate = 0;
    std::uint64_t candidates_emitted = 0;
    std::uint64_t candidates_out_of_scope = 0;
    std::uint64_t candidates_scanned = 0;
    std::uint64_t scans_ransom = 0;
    std::uint64_t scans_benign = 0;
    std::uint64_t scans_indeterminate = 0;
    std::uint64_t actions = 0;
    std::uint64_t refused_actions = 0;
    std::uint64_t source_dropped = 0;
    std::vector<Detection> detections;
    std::vector<std::string> errors;
    bool completed = true;
    std::string failure;

    // Wall-clock measurements; excluded from equality.
    StageTiming static_stage;
    StageTiming nlp_stage;
    StageTiming response_stage;
    std::uint64_t wall_ns = 0;

    /// Candidates were scanned and none classified as a ransom note.
    bool scanned_none_positive() const { return candidates_scanned > 0 && scans_ransom == 0; }

    bool operator==(const RunReport& o) const;
    std::string to_json(bool include_timings = true) const;
};

using DetectionSink = std::function<void(const Detection&)>;

class DetectionDaemon {
public:
    /// Loads the model and blocklist named in `config`; throws ConfigError.
    DetectionDaemon(DaemonConfig config, PathResolver resolver, bool replay_clock);
    DetectionDaemon(DaemonConfig config, ModelBundle model, HashBlocklist blocklist, PathResolver resolver,
                    bool replay_clock);

    /// Drains `source` in order. Source failures end the run with a partial
    /// report (completed = false); per-event errors are recorded and skipped.
    RunReport run(EventSource& source, const std::atomic<bool>* stop = nullptr, const DetectionSink& sink = {});

    const DaemonConfig& config() const { return config_; }

private:
    DaemonConfig config_;
    ModelBundle model_;
    HashBlocklist blocklist_;
    PathResolver resolver_;
    bool replay_clock_;
    std::unique_ptr<ResponseEngine> responder_;
};

/// Replays a trace against the sidecar `fs/` directory next to it. A
/// directory argument means `<dir>/events.trace`. Throws TraceDecodeError
/// before any event is processed if the trace is malformed.
RunReport replay(const std::filesystem::path& trace, const DaemonConfig& config, const DetectionSink& sink = {});
RunReport replay(const std::filesystem::path& trace, const DaemonConfig& config, const ModelBundle& model,
                 const HashBlocklist& blocklist, const DetectionSink& sink = {});

/// `<dir>/events.trace` for a directory, the path itself otherwise.
std::filesystem::path trace_file_of(const std::filesystem::path& trace_or_dir);

std::string detection_json(const Detection& d);

}  // namespace rguard
