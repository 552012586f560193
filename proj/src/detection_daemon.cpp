#include "rguard/detection_daemon.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

namespace rguard {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

// Created-path history kept per pid for the affected-files count.
constexpr std::size_t kMaxCreatedHistory = 4096;

std::uint64_t steady_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

fs::path resolve_against(const fs::path& base, const fs::path& p) {
    return p.is_relative() ? base / p : p;
}

std::string json_string(const ojson& j, std::string_view key) {
    if (!j.is_string()) throw ConfigError("config key " + std::string(key) + " must be a string");
    return j.get<std::string>();
}

std::uint64_t json_unsigned(const ojson& j, std::string_view key) {
    if (!j.is_number_unsigned()) throw ConfigError("config key " + std::string(key) + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

bool json_bool(const ojson& j, std::string_view key) {
    if (!j.is_boolean()) throw ConfigError("config key " + std::string(key) + " must be true or false");
    return j.get<bool>();
}

ojson timing_json(const StageTiming& t) {
    return {{"count", t.count}, {"total_ns", t.total_ns}, {"max_ns", t.max_ns}};
}

struct PidTrack {
    std::uint64_t creat_opens = 0;
    std::vector<std::string> created;
    bool exec_detected = false;
    bool note_detected = false;
    std::optional<std::uint64_t> start_time_ticks;
};

}  // namespace

void DaemonConfig::validate() const {
    try {
        monitor.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (signals_process(response) && !enforce)
        throw ConfigError("response mode " + std::string(to_string(response)) + " requires --enforce");
    if (max_scan_bytes == 0) throw ConfigError("max_scan_bytes must be positive");
    for (const auto& prefix : watch_scope)
        if (prefix.empty()) throw ConfigError("watch_scope entries must be non-empty");
}

DaemonConfig DaemonConfig::from_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config " + path.string());
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const ojson::parse_error& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config " + path.string() + ": top level must be an object");
    const fs::path base = path.parent_path();

    DaemonConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "blocklist_path") {
            c.blocklist_path = resolve_against(base, json_string(v, key));
        } else if (key == "model_path") {
            c.model_path = resolve_against(base, json_string(v, key));
        } else if (key == "threshold_t") {
            c.monitor.threshold_t = json_unsigned(v, key);
        } else if (key == "emit_every_candidate_after_threshold") {
            c.monitor.emit_every_candidate_after_threshold = json_bool(v, key);
        } else if (key == "response") {
            const auto mode = parse_response_mode(json_string(v, key));
            if (!mode) throw ConfigError("config key response must be dry-run, log, kill or suspend");
            c.response = *mode;
        } else if (key == "enforce") {
            c.enforce = json_bool(v, key);
        } else if (key == "allow_pids") {
            if (!v.is_array()) throw ConfigError("config key allow_pids must be an array");
            for (const auto& p : v) {
                const auto pid = json_unsigned(p, key);
                if (pid == 0 || pid > 0x7fffffff) throw ConfigError("allow_pids entries must be valid pids");
                c.allow_pids.insert(static_cast<Pid>(pid));
            }
        } else if (key == "audit_log") {
            c.audit_log = resolve_against(base, json_string(v, key));
        } else if (key == "max_scan_bytes") {
            c.max_scan_bytes = json_unsigned(v, key);
        } else if (key == "watch_scope") {
            if (!v.is_array()) throw ConfigError("config key watch_scope must be an array");
            for (const auto& p : v) c.watch_scope.push_back(json_string(p, key));
        } else {
            throw ConfigError("unknown config key " + key);
        }
    }
    c.validate();
    return c;
}

PathResolver host_resolver() {
    return [](const std::string& p) { return fs::path(p); };
}

PathResolver sidecar_resolver(fs::path sidecar_root) {
    return [root = std::move(sidecar_root)](const std::string& p) {
        std::string_view rel = p;
        while (!rel.empty() && rel.front() == '/') rel.remove_prefix(1);
        return root / fs::path(rel);
    };
}

std::string_view to_string(TriggerKind t) {
    return t == TriggerKind::ExecHash ? "exec_hash" : "ransom_note";
}

void StageTiming::add(std::uint64_t ns) {
    ++count;
    total_ns += ns;
    max_ns = std::max(max_ns, ns);
}

bool RunReport::operator==(const RunReport& o) const {
    const auto key = [](const RunReport& r) {
        return std::tie(r.events_total, r.exec_events, r.open_events, r.creat_opens, r.exit_events, r.exec_checks,
                        r.exec_indeterminate, r.candidates_emitted, r.candidates_out_of_scope, r.candidates_scanned,
                        r.scans_ransom, r.scans_benign, r.scans_indeterminate, r.actions, r.refused_actions,
                        r.source_dropped, r.detections, r.errors, r.completed, r.failure);
    };
    return key(*this) == key(o);
}

namespace {

ojson detection_object(const Detection& d) {
    ojson j;
    j["trigger"] = to_string(d.trigger);
    j["verdict"] = to_string(d.verdict.kind);
    if (!d.verdict.detail.empty()) j["detail"] = escape_bytes(d.verdict.detail);
    if (d.verdict.margin) j["margin"] = *d.verdict.margin;
    j["pid"] = d.pid;
    j["comm"] = escape_bytes(d.comm);
    j["path"] = escape_bytes(d.path);
    j["event_ts_ns"] = d.event_timestamp_ns;
    j["decision_ts_ns"] = d.decision_timestamp_ns;
    j["creat_opens_at_decision"] = d.creat_opens_at_decision;
    j["affected_files"] = d.affected_files;
    j["action"] = d.action ? ojson(to_string(*d.action)) : ojson(nullptr);
    return j;
}

}  // namespace

std::string detection_json(const Detection& d) { return detection_object(d).dump(); }

std::string RunReport::to_json(bool include_timings) const {
    ojson j;
    j["completed"] = completed;
    if (!failure.empty()) j["failure"] = failure;
    j["events"] = {{"total", events_total},
                   {"exec", exec_events},
                   {"open", open_events},
                   {"creat_open", creat_opens},
                   {"exit", exit_events},
                   {"source_dropped", source_dropped}};
    j["static"] = {{"checks", exec_checks}, {"indeterminate", exec_indeterminate}};
    j["candidates"] = {{"emitted", candidates_emitted},
                       {"out_of_scope", candidates_out_of_scope},
                       {"scanned", candidates_scanned},
                       {"ransom_note", scans_ransom},
                       {"benign", scans_benign},
                       {"indeterminate", scans_indeterminate},
                       {"scanned_none_positive", scanned_none_positive()}};
    j["actions"] = {{"taken", actions}, {"refused", refused_actions}};
    auto dets = ojson::array();
    for (const auto& d : detections) dets.push_back(detection_object(d));
    j["detections"] = std::move(dets);
    j["errors"] = errors;
    if (include_timings) {
        j["timings"] = {{"wall_ns", wall_ns},
                        {"static", timing_json(static_stage)},
                        {"nlp", timing_json(nlp_stage)},
                        {"response", timing_json(response_stage)}};
    }
    return j.dump(2);
}

DetectionDaemon::DetectionDaemon(DaemonConfig config, PathResolver resolver, bool replay_clock)
    : config_(std::move(config)), resolver_(std::move(resolver)), replay_clock_(replay_clock) {
    config_.validate();
    if (config_.model_path.empty()) throw ConfigError("no model bundle configured");
    try {
        model_ = load_bundle(config_.model_path);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
    if (!config_.blocklist_path.empty()) {
        try {
            blocklist_ = HashBlocklist::load(config_.blocklist_path);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("blocklist: ") + e.what());
        }
    }
    responder_ = std::make_unique<ResponseEngine>(ResponseConfig{config_.allow_pids, config_.audit_log});
}

DetectionDaemon::DetectionDaemon(DaemonConfig config, ModelBundle model, HashBlocklist blocklist,
                                 PathResolver resolver, bool replay_clock)
    : config_(std::move(config)),
      model_(std::move(model)),
      blocklist_(std::move(blocklist)),
      resolver_(std::move(resolver)),
      replay_clock_(replay_clock) {
    config_.validate();
    responder_ = std::make_unique<ResponseEngine>(ResponseConfig{config_.allow_pids, config_.audit_log});
}

RunReport DetectionDaemon::run(EventSource& source, const std::atomic<bool>* stop, const DetectionSink& sink) {
    RunReport report;
    BehaviorMonitor monitor(config_.monitor);
    std::unordered_map<Pid, PidTrack> tracks;
    // Note-or-not per created path, shared across pids within a run.
    std::unordered_map<std::string, bool> note_cache;
    const auto started = steady_ns();

    const auto in_scope = [&](const std::string& path) {
        if (config_.watch_scope.empty()) return true;
        return std::any_of(config_.watch_scope.begin(), config_.watch_scope.end(),
                           [&](const std::string& prefix) { return path.starts_with(prefix); });
    };

    const auto scan = [&](const std::string& path) {
        const auto t = steady_ns();
        auto v = nlp::classify_file(model_, resolver_(path), config_.max_scan_bytes);
        report.nlp_stage.add(steady_ns() - t);
        return v;
    };

    const auto affected_files = [&](const PidTrack& track) {
        std::uint64_t notes = 0;
        for (const auto& p : track.created) {
            auto it = note_cache.find(p);
            if (it == note_cache.end())
                it = note_cache.emplace(p, scan(p).kind == VerdictKind::RansomNote).first;
            if (it->second) ++notes;
        }
        return track.creat_opens - notes;
    };

    const auto decide = [&](const SyscallEvent& ev, PidTrack& track, TriggerKind trigger, std::string path,
                            Verdict verdict, std::uint64_t received_ns) {
        Detection d;
        d.verdict = std::move(verdict);
        d.pid = ev.pid;
        d.comm = ev.comm;
        d.trigger = trigger;
        d.path = std::move(path);
        d.event_timestamp_ns = ev.timestamp_ns;
        d.decision_timestamp_ns = replay_clock_ ? ev.timestamp_ns : std::max(ev.timestamp_ns, monotonic_now_ns());
        d.creat_opens_at_decision = track.creat_opens;

        ResponseAction action{config_.response, ev.pid, ev.comm, track.start_time_ticks, d.verdict, received_ns};
        try {
            const auto r = responder_->act(action);
            d.action = r.outcome;
            ++report.actions;
            report.response_stage.add(r.latency_ns);
        } catch (const RefusedTargetError& e) {
            ++report.refused_actions;
            report.errors.push_back(e.what());
        }
        // Counted after the response so the scan cost never delays it.
        d.affected_files = trigger == TriggerKind::RansomNote ? affected_files(track) : 0;
        if (sink) sink(d);
        report.detections.push_back(std::move(d));
    };

    for (;;) {
        if (stop != nullptr && stop->load()) {
            report.completed = false;
            report.failure = "interrupted";
            break;
        }
        std::optional<SyscallEvent> next;
        try {
            next = source.next();
        } catch (const std::exception& e) {
            report.completed = false;
            report.failure = std::string("event source failed: ") + e.what();
            break;
        }
        if (!next) {
            if (stop != nullptr && stop->load()) {
                report.completed = false;
                report.failure = "interrupted";
            }
            break;
        }
        const SyscallEvent& ev = *next;
        const auto received = monotonic_now_ns();
        try {
            validate_event(ev);
        } catch (const InvariantError& e) {
            report.errors.push_back(std::string(kind_name(ev)) + " event: " + e.what());
            continue;
        }
        ++report.events_total;

        if (ev.is_exit()) {
            ++report.exit_events;
            monitor.observe(ev);
            tracks.erase(ev.pid);
            continue;
        }

        auto [it, fresh] = tracks.try_emplace(ev.pid);
        PidTrack& track = it->second;
        if (fresh && !replay_clock_) {
            if (const auto id = read_process_identity(ev.pid);
                id && id->comm == truncate_bytes(ev.comm, kMaxCommBytes - 1))
                track.start_time_ticks = id->start_time_ticks;
        }

        if (const auto* exec = std::get_if<ExecInfo>(&ev.kind)) {
            ++report.exec_events;
            monitor.observe(ev);
            ++report.exec_checks;
            const auto t = steady_ns();
            auto v = check_exec(ev, blocklist_, resolver_(exec->exe_path));
            report.static_stage.add(steady_ns() - t);
            if (v.kind == VerdictKind::Indeterminate) {
                ++report.exec_indeterminate;
                report.errors.push_back("pid " + std::to_string(ev.pid) + " exec " + escape_bytes(exec->exe_path) +
                                        ": " + v.detail);
            } else if (v.kind == VerdictKind::KnownMalware && !track.exec_detected) {
                track.exec_detected = true;
                decide(ev, track, TriggerKind::ExecHash, exec->exe_path, std::move(v), received);
            }
            continue;
        }

        const auto& open = std::get<FileOpenInfo>(ev.kind);
        ++report.open_events;
        std::optional<CandidateFile> candidate;
        if (source.threshold_gated()) {
            if (ev.is_creat_open()) candidate = CandidateFile{ev.pid, ev.comm, open.path, 0, ev.timestamp_ns};
        } else {
            candidate = monitor.observe(ev);
        }
        if (ev.is_creat_open()) {
            ++report.creat_opens;
            ++track.creat_opens;
            if (track.created.size() < kMaxCreatedHistory) track.created.push_back(open.path);
        }
        if (!candidate) continue;
        ++report.candidates_emitted;
        if (track.note_detected) continue;
        if (!in_scope(open.path)) {
            ++report.candidates_out_of_scope;
            continue;
        }
        ++report.candidates_scanned;
        auto v = scan(open.path);
        switch (v.kind) {
        case VerdictKind::RansomNote: ++report.scans_ransom; break;
        case VerdictKind::Benign: ++report.scans_benign; break;
        default:
            ++report.scans_indeterminate;
            if (v.detail == "unreadable")
                report.errors.push_back("candidate " + escape_bytes(open.path) + ": unreadable");
            break;
        }
        note_cache[open.path] = v.kind == VerdictKind::RansomNote;
        if (v.kind == VerdictKind::RansomNote) {
            track.note_detected = true;
            decide(ev, track, TriggerKind::RansomNote, open.path, std::move(v), received);
        }
    }
    report.source_dropped = source.dropped();
    report.wall_ns = steady_ns() - started;
    return report;
}

fs::path trace_file_of(const fs::path& trace_or_dir) {
    return fs::is_directory(trace_or_dir) ? trace_or_dir / "events.trace" : trace_or_dir;
}

RunReport replay(const fs::path& trace, const DaemonConfig& config, const ModelBundle& model,
                 const HashBlocklist& blocklist, const DetectionSink& sink) {
    const auto file = trace_file_of(trace);
    TraceReplaySource source = TraceReplaySource::from_file(file.string());
    DetectionDaemon daemon(config, model, blocklist, sidecar_resolver(file.parent_path() / "fs"), true);
    return daemon.run(source, nullptr, sink);
}

RunReport replay(const fs::path& trace, const DaemonConfig& config, const DetectionSink& sink) {
    const auto file = trace_file_of(trace);
    TraceReplaySource source = TraceReplaySource::from_file(file.string());
    DetectionDaemon daemon(config, sidecar_resolver(file.parent_path() / "fs"), true);
    return daemon.run(source, nullptr, sink);
}

}  // namespace rguard
