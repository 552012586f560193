#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rguard {

using Pid = std::int32_t;

inline constexpr std::size_t kMaxCommBytes = 16;
inline constexpr std::size_t kMaxPathBytes = 128;

// asm-generic/fcntl.h, octal.
inline constexpr std::uint32_t kOAccMode = 03;
inline constexpr std::uint32_t kOWrOnly = 01;
inline constexpr std::uint32_t kORdWr = 02;
inline constexpr std::uint32_t kOCreat = 0100;
inline constexpr std::uint32_t kOTrunc = 01000;
inline constexpr std::uint32_t kOAppend = 02000;

struct OpenFlags {
    std::uint32_t raw = 0;
    bool creat = false;
    bool rdonly = true;
    bool wronly = false;
    bool rdwr = false;
    bool trunc = false;
    bool append = false;

    bool operator==(const OpenFlags&) const = default;
};

OpenFlags parse_open_flags(std::uint32_t raw) noexcept;

struct ExecInfo {
    std::string exe_path;
    bool operator==(const ExecInfo&) const = default;
};

struct FileOpenInfo {
    std::string path;
    OpenFlags flags;
    bool operator==(const FileOpenInfo&) const = default;
};

struct ExitInfo {
    bool operator==(const ExitInfo&) const = default;
};

using EventKind = std::variant<ExecInfo, FileOpenInfo, ExitInfo>;

struct SyscallEvent {
    Pid pid = 0;
    std::uint32_t uid = 0;
    std::string comm;
    std::uint64_t timestamp_ns = 0;
    EventKind kind;

    bool is_exec() const { return std::holds_alternative<ExecInfo>(kind); }
    bool is_open() const { return std::holds_alternative<FileOpenInfo>(kind); }
    bool is_exit() const { return std::holds_alternative<ExitInfo>(kind); }
    bool is_creat_open() const;

    bool operator==(const SyscallEvent&) const = default;
};

/// Cuts `s` to at most `max_bytes` bytes. Byte-oriented, like the kernel
/// helpers that fill fixed buffers, so a multi-byte sequence may be split.
std::string truncate_bytes(std::string_view s, std::size_t max_bytes);

// Factories apply the comm/path truncation rules.
SyscallEvent make_exec_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns, std::string_view exe_path);
SyscallEvent make_open_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns, std::string_view path, std::uint32_t raw_flags);
SyscallEvent make_exit_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns);

class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws InvariantError("invariant violation: ...") if `e` breaks a type invariant.
void validate_event(const SyscallEvent& e);

class TraceDecodeError : public std::runtime_error {
public:
    TraceDecodeError(std::size_t line, std::string field, const std::string& what);
    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// Reversible text escaping for byte strings that may not be valid UTF-8:
/// backslash becomes `\\`, each byte outside a valid UTF-8 sequence `\xHH`.
std::string escape_bytes(std::string_view raw);
std::string unescape_bytes(std::string_view escaped);

std::string encode_trace_line(const SyscallEvent& e);
/// `line_no` is 1-based and only used for error messages.
SyscallEvent decode_trace_line(std::string_view line, std::size_t line_no = 1);

/// Reads a whole trace, skipping blank lines, and enforces non-decreasing timestamps.
std::vector<SyscallEvent> read_trace(std::istream& in);
std::vector<SyscallEvent> read_trace_file(const std::string& path);
void write_trace(std::ostream& out, std::span<const SyscallEvent> events);

std::string_view kind_name(const SyscallEvent& e);

}  // namespace rguard
