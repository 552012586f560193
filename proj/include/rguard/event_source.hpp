#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rguard/event_model.hpp"

namespace rguard {

class EventSourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Yields events in timestamp order until end of stream or shutdown.
class EventSource {
public:
    virtual ~EventSource() = default;

    /// std::nullopt means the stream ended. Throws EventSourceError on failure.
    virtual std::optional<SyscallEvent> next() = 0;

    /// Records the producer reported as lost (ring-buffer overflow).
    virtual std::uint64_t dropped() const { return 0; }

    /// True when creat-opens were already threshold-gated upstream, so every
    /// creat-open delivered is a candidate file.
    virtual bool threshold_gated() const { return false; }
};

class TraceReplaySource : public EventSource {
public:
    explicit TraceReplaySource(std::vector<SyscallEvent> events);
    static TraceReplaySource from_file(const std::string& path);

    std::optional<SyscallEvent> next() override;
    std::size_t size() const { return events_.size(); }

private:
    std::vector<SyscallEvent> events_;
    std::size_t pos_ = 0;
};

/// Reads fixed-size kernel records from a file descriptor (pipe, fifo,
/// ring-buffer consumer). Does not own the descriptor.
class KernelRecordStreamSource : public EventSource {
public:
    /// `stop` is polled when a read is interrupted by a signal.
    KernelRecordStreamSource(int fd, bool threshold_gated, const std::atomic<bool>* stop = nullptr);

    std::optional<SyscallEvent> next() override;
    std::uint64_t dropped() const override { return dropped_; }
    bool threshold_gated() const override { return gated_; }
    std::uint64_t records_read() const { return records_; }

private:
    int fd_;
    bool gated_;
    const std::atomic<bool>* stop_;
    std::uint64_t dropped_ = 0;
    std::uint64_t records_ = 0;
};

}  // namespace rguard
