#include "rguard/event_source.hpp"

#include <cerrno>
#include <cstring>

#include <unistd.h>

#include "rguard/kernel_record.hpp"

namespace rguard {

TraceReplaySource::TraceReplaySource(std::vector<SyscallEvent> events) : events_(std::move(events)) {}

TraceReplaySource TraceReplaySource::from_file(const std::string& path) {
    return TraceReplaySource(read_trace_file(path));
}

std::optional<SyscallEvent> TraceReplaySource::next() {
    if (pos_ >= events_.size()) return std::nullopt;
    return std::move(events_[pos_++]);
}

KernelRecordStreamSource::KernelRecordStreamSource(int fd, bool threshold_gated, const std::atomic<bool>* stop)
    : fd_(fd), gated_(threshold_gated), stop_(stop) {}

std::optional<SyscallEvent> KernelRecordStreamSource::next() {
    KernelRecordBytes buf{};
    for (;;) {
        std::size_t have = 0;
        while (have < buf.size()) {
            const ssize_t n = ::read(fd_, buf.data() + have, buf.size() - have);
            if (n == 0) {
                if (have == 0) return std::nullopt;
                throw EventSourceError("truncated kernel record at end of stream (" + std::to_string(have) +
                                       " of " + std::to_string(buf.size()) + " bytes)");
            }
            if (n < 0) {
                if (errno == EINTR) {
                    if (stop_ != nullptr && stop_->load()) return std::nullopt;
                    continue;
                }
                throw EventSourceError(std::string("kernel record read failed: ") + std::strerror(errno));
            }
            have += static_cast<std::size_t>(n);
        }
        ++records_;
        KernelRecord rec;
        try {
            rec = decode_kernel_record(buf);
        } catch (const std::exception& e) {
            throw EventSourceError("record " + std::to_string(records_) + ": " + e.what());
        }
        if (auto* lost = std::get_if<LostRecords>(&rec)) {
            dropped_ += lost->count;
            continue;
        }
        return std::get<SyscallEvent>(std::move(rec));
    }
}

}  // namespace rguard
