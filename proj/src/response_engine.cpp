#include "rguard/response_engine.hpp"

#include <cerrno>
#include <chrono>
#include <cstring>
#include <sstream>

#include <csignal>
#include <sys/types.h>
#include <time.h>
#include <unistd.h>

#include <json.hpp>

namespace rguard {

std::string_view to_string(ResponseMode m) {
    switch (m) {
    case ResponseMode::DryRun: return "dry-run";
    case ResponseMode::LogOnly: return "log";
    case ResponseMode::Kill: return "kill";
    case ResponseMode::Suspend: return "suspend";
    }
    return "?";
}

std::optional<ResponseMode> parse_response_mode(std::string_view s) {
    if (s == "dry-run") return ResponseMode::DryRun;
    if (s == "log") return ResponseMode::LogOnly;
    if (s == "kill") return ResponseMode::Kill;
    if (s == "suspend") return ResponseMode::Suspend;
    return std::nullopt;
}

std::string_view to_string(ActionOutcome o) {
    switch (o) {
    case ActionOutcome::Applied: return "applied";
    case ActionOutcome::TargetAlreadyGone: return "target_already_gone";
    case ActionOutcome::PermissionDenied: return "permission_denied";
    case ActionOutcome::Skipped: return "skipped";
    }
    return "?";
}

std::uint64_t monotonic_now_ns() {
    timespec ts{};
    ::clock_gettime(CLOCK_MONOTONIC, &ts);
    return static_cast<std::uint64_t>(ts.tv_sec) * 1'000'000'000ULL + static_cast<std::uint64_t>(ts.tv_nsec);
}

std::optional<ProcessIdentity> read_process_identity(Pid pid) {
    if (pid <= 0) return std::nullopt;
    std::ifstream in("/proc/" + std::to_string(pid) + "/stat");
    std::string stat;
    if (!in || !std::getline(in, stat)) return std::nullopt;
    // comm sits in parentheses and may itself contain ')' or spaces.
    const auto open = stat.find('(');
    const auto close = stat.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) return std::nullopt;
    ProcessIdentity id;
    id.comm = stat.substr(open + 1, close - open - 1);
    std::istringstream rest(stat.substr(close + 1));
    std::string field;
    // Fields after comm start at 3 (state); starttime is field 22.
    for (int n = 3; n <= 22 && rest >> field; ++n) {
        if (n == 22) id.start_time_ticks = std::stoull(field);
    }
    return id;
}

AuditLog::AuditLog(const std::filesystem::path& path) : path_(path), out_(path, std::ios::app) {
    if (!out_) throw std::runtime_error("cannot open audit log " + path.string());
}

void AuditLog::record(const ResponseAction& a, std::string_view outcome, std::uint64_t latency_ns,
                      std::string_view note) {
    const auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();
    nlohmann::ordered_json j;
    j["ts_ns"] = wall;
    j["pid"] = a.target_pid;
    j["comm"] = escape_bytes(a.comm);
    j["mode"] = to_string(a.mode);
    j["verdict"] = to_string(a.reason.kind);
    j["detail"] = escape_bytes(a.reason.detail);
    if (a.reason.margin) j["margin"] = *a.reason.margin;
    j["outcome"] = outcome;
    j["latency_ns"] = latency_ns;
    if (!note.empty()) j["note"] = note;
    out_ << j.dump() << '\n';
    out_.flush();
}

ResponseEngine::ResponseEngine(ResponseConfig config) : config_(std::move(config)), self_(::getpid()) {
    if (config_.audit_log) audit_.emplace(*config_.audit_log);
}

bool ResponseEngine::is_protected(Pid pid) const {
    return pid == self_ || pid == 1 || config_.allow_pids.count(pid) > 0;
}

ActionResult ResponseEngine::act(const ResponseAction& action) {
    const auto finish = [&](ActionOutcome outcome, std::string note) {
        const auto now = monotonic_now_ns();
        ActionResult r{outcome, now > action.issued_at_ns ? now - action.issued_at_ns : 0, std::move(note)};
        std::lock_guard lock(mu_);
        if (audit_) audit_->record(action, to_string(outcome), r.latency_ns, r.note);
        return r;
    };

    if (action.target_pid <= 0 || is_protected(action.target_pid)) {
        const std::string why = action.target_pid <= 0        ? "non-positive pid"
                                : action.target_pid == self_ ? "target is the agent itself"
                                                             : "target is allowlisted";
        {
            std::lock_guard lock(mu_);
            if (audit_) audit_->record(action, "refused", 0, why);
        }
        throw RefusedTargetError("refusing to act on pid " + std::to_string(action.target_pid) + ": " + why);
    }

    if (!signals_process(action.mode)) return finish(ActionOutcome::Skipped, std::string(to_string(action.mode)));

    const auto current = read_process_identity(action.target_pid);
    if (!current) return finish(ActionOutcome::TargetAlreadyGone, "no such process");
    if (!action.comm.empty() && current->comm != truncate_bytes(action.comm, kMaxCommBytes - 1))
        return finish(ActionOutcome::TargetAlreadyGone, "pid reused: comm is now " + current->comm);
    if (action.start_time_ticks && *action.start_time_ticks != current->start_time_ticks)
        return finish(ActionOutcome::TargetAlreadyGone, "pid reused: start time changed");

    const int sig = action.mode == ResponseMode::Kill ? SIGKILL : SIGSTOP;
    if (::kill(action.target_pid, sig) == 0) return finish(ActionOutcome::Applied, {});
    const int err = errno;
    if (err == ESRCH) return finish(ActionOutcome::TargetAlreadyGone, "no such process");
    if (err == EPERM) return finish(ActionOutcome::PermissionDenied, std::strerror(err));
    return finish(ActionOutcome::PermissionDenied, std::string("kill failed: ") + std::strerror(err));
}

}  // namespace rguard
