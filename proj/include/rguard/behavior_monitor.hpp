#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "rguard/event_model.hpp"

namespace rguard {

struct MonitorConfig {
    std::uint64_t threshold_t = 10;
    // When false only the creat-open that first reaches the threshold emits.
    bool emit_every_candidate_after_threshold = true;

    /// Throws std::invalid_argument unless threshold_t >= 1.
    void validate() const;
};

struct ProcessState {
    Pid pid = 0;
    std::uint64_t file_creation_count = 0;
    std::uint64_t first_seen_ns = 0;
    std::uint64_t last_event_ns = 0;
};

struct CandidateFile {
    Pid pid = 0;
    std::string comm;
    std::string path;
    std::uint64_t creation_count_at_emit = 0;
    std::uint64_t timestamp_ns = 0;

    bool operator==(const CandidateFile&) const = default;
};

/// Per-PID cumulative O_CREAT counter. Single consumer; not thread-safe.
class BehaviorMonitor {
public:
    explicit BehaviorMonitor(MonitorConfig config = {});

    /// Feeds one event in timestamp order. Returns a candidate when a
    /// creat-open brings the pid's counter to or past the threshold.
    std::optional<CandidateFile> observe(const SyscallEvent& e);

    void reset(Pid pid);

    std::uint64_t creation_count(Pid pid) const;
    const ProcessState* state(Pid pid) const;
    std::size_t table_size() const { return table_.size(); }
    const MonitorConfig& config() const { return config_; }

private:
    MonitorConfig config_;
    std::unordered_map<Pid, ProcessState> table_;
};

}  // namespace rguard
