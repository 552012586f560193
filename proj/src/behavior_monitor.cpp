#include "rguard/behavior_monitor.hpp"

#include <stdexcept>

namespace rguard {

void MonitorConfig::validate() const {
    if (threshold_t < 1) throw std::invalid_argument("threshold_t must be >= 1");
}

BehaviorMonitor::BehaviorMonitor(MonitorConfig config) : config_(config) { config_.validate(); }

std::optional<CandidateFile> BehaviorMonitor::observe(const SyscallEvent& e) {
    if (e.is_exit()) {
        reset(e.pid);
        return std::nullopt;
    }
    const auto* open = std::get_if<FileOpenInfo>(&e.kind);
    if (open == nullptr) return std::nullopt;

    // Entries are created on any openat, as the kernel side does.
    auto [it, inserted] = table_.try_emplace(e.pid);
    ProcessState& st = it->second;
    if (inserted) {
        st.pid = e.pid;
        st.first_seen_ns = e.timestamp_ns;
    }
    st.last_event_ns = e.timestamp_ns;
    if (!open->flags.creat) return std::nullopt;

    ++st.file_creation_count;
    const bool emit = config_.emit_every_candidate_after_threshold
                          ? st.file_creation_count >= config_.threshold_t
                          : st.file_creation_count == config_.threshold_t;
    if (!emit) return std::nullopt;
    return CandidateFile{e.pid, e.comm, open->path, st.file_creation_count, e.timestamp_ns};
}

void BehaviorMonitor::reset(Pid pid) { table_.erase(pid); }

std::uint64_t BehaviorMonitor::creation_count(Pid pid) const {
    const auto it = table_.find(pid);
    return it == table_.end() ? 0 : it->second.file_creation_count;
}

const ProcessState* BehaviorMonitor::state(Pid pid) const {
    const auto it = table_.find(pid);
    return it == table_.end() ? nullptr : &it->second;
}

}  // namespace rguard
