#include "rguard/kernel_record.hpp"

#include <cstring>
#include <limits>
#include <string>

namespace rguard {

namespace {

constexpr std::size_t kPidOff = 0;
constexpr std::size_t kUidOff = 4;
constexpr std::size_t kCommOff = 8;
constexpr std::size_t kKindOff = 24;
constexpr std::size_t kFlagsOff = 28;
constexpr std::size_t kPathOff = 32;
constexpr std::size_t kTsOff = 160;

template <typename T>
T load_le(std::span<const std::byte, kKernelRecordSize> b, std::size_t off) {
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<T>(std::to_integer<std::uint8_t>(b[off + i])) << (8 * i);
    return v;
}

template <typename T>
void store_le(KernelRecordBytes& b, std::size_t off, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        b[off + i] = static_cast<std::byte>((v >> (8 * i)) & 0xFF);
}

std::string load_cstr(std::span<const std::byte, kKernelRecordSize> b, std::size_t off, std::size_t cap) {
    std::string s;
    for (std::size_t i = 0; i < cap; ++i) {
        const auto c = static_cast<char>(b[off + i]);
        if (c == '\0') break;
        s += c;
    }
    return s;
}

void store_cstr(KernelRecordBytes& b, std::size_t off, std::size_t cap, const std::string& s) {
    const std::size_t n = std::min(s.size(), cap);
    std::memcpy(b.data() + off, s.data(), n);
}

}  // namespace

KernelRecord decode_kernel_record(std::span<const std::byte, kKernelRecordSize> bytes) {
    const auto pid = load_le<std::uint32_t>(bytes, kPidOff);
    const auto uid = load_le<std::uint32_t>(bytes, kUidOff);
    const auto kind = std::to_integer<std::uint8_t>(bytes[kKindOff]);
    const auto flags = load_le<std::uint32_t>(bytes, kFlagsOff);
    const auto ts = load_le<std::uint64_t>(bytes, kTsOff);

    if (kind == static_cast<std::uint8_t>(KernelRecordKind::Lost)) return LostRecords{ts, flags};

    if (pid == 0 || pid > static_cast<std::uint32_t>(std::numeric_limits<Pid>::max()))
        throw KernelRecordError("kernel record: invariant violation: pid > 0");
    auto comm = load_cstr(bytes, kCommOff, kMaxCommBytes);
    if (comm.empty()) throw KernelRecordError("kernel record: empty comm");
    auto path = load_cstr(bytes, kPathOff, kMaxPathBytes);
    const auto p = static_cast<Pid>(pid);

    switch (static_cast<KernelRecordKind>(kind)) {
    case KernelRecordKind::Exec:
        return make_exec_event(p, uid, comm, ts, path);
    case KernelRecordKind::Open:
        return make_open_event(p, uid, comm, ts, path, flags);
    case KernelRecordKind::Exit:
        return make_exit_event(p, uid, comm, ts);
    default:
        throw KernelRecordError("kernel record: unknown kind tag " + std::to_string(kind));
    }
}

KernelRecordBytes encode_kernel_record(const SyscallEvent& e) {
    KernelRecordBytes b{};
    store_le<std::uint32_t>(b, kPidOff, static_cast<std::uint32_t>(e.pid));
    store_le<std::uint32_t>(b, kUidOff, e.uid);
    store_cstr(b, kCommOff, kMaxCommBytes, e.comm);
    store_le<std::uint64_t>(b, kTsOff, e.timestamp_ns);
    if (const auto* exec = std::get_if<ExecInfo>(&e.kind)) {
        b[kKindOff] = static_cast<std::byte>(KernelRecordKind::Exec);
        store_cstr(b, kPathOff, kMaxPathBytes, exec->exe_path);
    } else if (const auto* open = std::get_if<FileOpenInfo>(&e.kind)) {
        b[kKindOff] = static_cast<std::byte>(KernelRecordKind::Open);
        store_le<std::uint32_t>(b, kFlagsOff, open->flags.raw);
        store_cstr(b, kPathOff, kMaxPathBytes, open->path);
    } else {
        b[kKindOff] = static_cast<std::byte>(KernelRecordKind::Exit);
    }
    return b;
}

KernelRecordBytes encode_lost_record(const LostRecords& lost) {
    KernelRecordBytes b{};
    b[kKindOff] = static_cast<std::byte>(KernelRecordKind::Lost);
    store_le<std::uint32_t>(b, kFlagsOff, lost.count);
    store_le<std::uint64_t>(b, kTsOff, lost.timestamp_ns);
    return b;
}

}  // namespace rguard
