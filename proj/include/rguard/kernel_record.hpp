#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>

#include "rguard/event_model.hpp"

namespace rguard {

// Fixed-size record emitted by the kernel programs, little-endian, natural C
// alignment (the probe side declares it as a plain struct):
//
//   offset  size  field
//        0     4  pid           u32
//        4     4  uid           u32
//        8    16  comm          NUL-padded
//       24     1  kind          u8 (KernelRecordKind)
//       25     3  (padding, zero)
//       28     4  flags         u32; for kind=lost, number of dropped records
//       32   128  path          NUL-padded; exe filename for exec
//      160     8  timestamp_ns  u64
inline constexpr std::size_t kKernelRecordSize = 168;

enum class KernelRecordKind : std::uint8_t {
    Exec = 1,
    Open = 2,
    Exit = 3,
    Lost = 4,
};

/// Ring-buffer overflow notice: the producer could not deliver `count` records.
struct LostRecords {
    std::uint64_t timestamp_ns = 0;
    std::uint32_t count = 0;
    bool operator==(const LostRecords&) const = default;
};

using KernelRecord = std::variant<SyscallEvent, LostRecords>;

class KernelRecordError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using KernelRecordBytes = std::array<std::byte, kKernelRecordSize>;

KernelRecord decode_kernel_record(std::span<const std::byte, kKernelRecordSize> bytes);
KernelRecordBytes encode_kernel_record(const SyscallEvent& e);
KernelRecordBytes encode_lost_record(const LostRecords& lost);

}  // namespace rguard
