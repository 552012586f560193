#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rguard/event_model.hpp"
#include "rguard/verdict.hpp"

namespace rguard {

enum class ResponseMode {
    DryRun,
    LogOnly,
    Kill,
    Suspend,
};

std::string_view to_string(ResponseMode m);
/// Accepts "dry-run", "log", "kill", "suspend".
std::optional<ResponseMode> parse_response_mode(std::string_view s);
inline bool signals_process(ResponseMode m) { return m == ResponseMode::Kill || m == ResponseMode::Suspend; }

/// What /proc says a pid currently is. Used to detect pid reuse between the
/// verdict and the signal.
struct ProcessIdentity {
    std::string comm;
    std::uint64_t start_time_ticks = 0;
    bool operator==(const ProcessIdentity&) const = default;
};

std::optional<ProcessIdentity> read_process_identity(Pid pid);

/// CLOCK_MONOTONIC in ns, the clock kernel event timestamps use.
std::uint64_t monotonic_now_ns();

struct ResponseAction {
    ResponseMode mode = ResponseMode::DryRun;
    Pid target_pid = 0;
    // Expected identity; an empty comm skips the name check.
    std::string comm;
    std::optional<std::uint64_t> start_time_ticks;
    Verdict reason;
    // Monotonic time at which the triggering event reached the agent.
    std::uint64_t issued_at_ns = 0;
};

enum class ActionOutcome {
    Applied,
    TargetAlreadyGone,
    PermissionDenied,
    Skipped,
};

std::string_view to_string(ActionOutcome o);

struct ActionResult {
    ActionOutcome outcome = ActionOutcome::Skipped;
    std::uint64_t latency_ns = 0;
    std::string note;
};

/// Thrown when an action names the agent itself, pid 1, or an allowlisted pid.
class RefusedTargetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Append-only JSON-lines record of every action attempt.
class AuditLog {
public:
    explicit AuditLog(const std::filesystem::path& path);
    void record(const ResponseAction& a, std::string_view outcome, std::uint64_t latency_ns, std::string_view note);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

struct ResponseConfig {
    std::set<Pid> allow_pids;
    std::optional<std::filesystem::path> audit_log;
};

class ResponseEngine {
public:
    explicit ResponseEngine(ResponseConfig config = {});

    /// Safe to call from several threads. Throws RefusedTargetError for
    /// protected targets (the attempt is still audited).
    ActionResult act(const ResponseAction& action);

    bool is_protected(Pid pid) const;
    Pid self_pid() const { return self_; }

private:
    ResponseConfig config_;
    Pid self_;
    std::mutex mu_;
    std::optional<AuditLog> audit_;
};

}  // namespace rguard
