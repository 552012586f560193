#include "rguard/event_model.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "utf8.hpp"

namespace rguard {

using ojson = nlohmann::ordered_json;

OpenFlags parse_open_flags(std::uint32_t raw) noexcept {
    OpenFlags f;
    f.raw = raw;
    f.creat = (raw & kOCreat) != 0;
    f.rdonly = (raw & kOAccMode) == 0;
    f.wronly = (raw & kOAccMode) == kOWrOnly;
    f.rdwr = (raw & kOAccMode) == kORdWr;
    f.trunc = (raw & kOTrunc) != 0;
    f.append = (raw & kOAppend) != 0;
    return f;
}

bool SyscallEvent::is_creat_open() const {
    const auto* open = std::get_if<FileOpenInfo>(&kind);
    return open != nullptr && open->flags.creat;
}

std::string truncate_bytes(std::string_view s, std::size_t max_bytes) {
    return std::string(s.substr(0, std::min(s.size(), max_bytes)));
}

namespace {

SyscallEvent make_base(Pid pid, std::uint32_t uid, std::string_view comm, std::uint64_t ts_ns) {
    SyscallEvent e;
    e.pid = pid;
    e.uid = uid;
    e.comm = truncate_bytes(comm, kMaxCommBytes);
    e.timestamp_ns = ts_ns;
    return e;
}

}  // namespace

SyscallEvent make_exec_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns, std::string_view exe_path) {
    auto e = make_base(pid, uid, comm, ts_ns);
    e.kind = ExecInfo{std::string(exe_path)};
    return e;
}

SyscallEvent make_open_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns, std::string_view path, std::uint32_t raw_flags) {
    auto e = make_base(pid, uid, comm, ts_ns);
    e.kind = FileOpenInfo{truncate_bytes(path, kMaxPathBytes), parse_open_flags(raw_flags)};
    return e;
}

SyscallEvent make_exit_event(Pid pid, std::uint32_t uid, std::string_view comm,
                             std::uint64_t ts_ns) {
    auto e = make_base(pid, uid, comm, ts_ns);
    e.kind = ExitInfo{};
    return e;
}

void validate_event(const SyscallEvent& e) {
    if (e.pid <= 0) throw InvariantError("invariant violation: pid > 0");
    if (e.comm.empty()) throw InvariantError("invariant violation: comm is non-empty");
    if (e.comm.size() > kMaxCommBytes)
        throw InvariantError("invariant violation: comm exceeds 16 bytes");
    if (const auto* open = std::get_if<FileOpenInfo>(&e.kind)) {
        if (open->path.size() > kMaxPathBytes)
            throw InvariantError("invariant violation: path exceeds 128 bytes");
        if (open->flags != parse_open_flags(open->flags.raw))
            throw InvariantError("invariant violation: flags inconsistent with raw bitmask");
    }
}

TraceDecodeError::TraceDecodeError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line),
      field_(std::move(field)) {}

std::string escape_bytes(std::string_view raw) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        if (raw[i] == '\\') {
            out += "\\\\";
            ++i;
            continue;
        }
        const std::size_t n = detail::utf8_sequence_length(raw, i);
        if (n == 0) {
            const auto b = static_cast<unsigned char>(raw[i]);
            out += "\\x";
            out += kHex[b >> 4];
            out += kHex[b & 0xF];
            ++i;
        } else {
            out.append(raw.substr(i, n));
            i += n;
        }
    }
    return out;
}

std::string unescape_bytes(std::string_view escaped) {
    const auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::string out;
    out.reserve(escaped.size());
    for (std::size_t i = 0; i < escaped.size(); ++i) {
        if (escaped[i] != '\\') {
            out += escaped[i];
            continue;
        }
        if (i + 1 < escaped.size() && escaped[i + 1] == '\\') {
            out += '\\';
            ++i;
        } else if (i + 3 < escaped.size() && escaped[i + 1] == 'x' && hex(escaped[i + 2]) >= 0 &&
                   hex(escaped[i + 3]) >= 0) {
            out += static_cast<char>(hex(escaped[i + 2]) * 16 + hex(escaped[i + 3]));
            i += 3;
        } else {
            throw std::invalid_argument("bad escape sequence");
        }
    }
    return out;
}

std::string_view kind_name(const SyscallEvent& e) {
    if (e.is_exec()) return "exec";
    if (e.is_open()) return "open";
    return "exit";
}

std::string encode_trace_line(const SyscallEvent& e) {
    ojson j;
    j["ts_ns"] = e.timestamp_ns;
    j["pid"] = e.pid;
    j["uid"] = e.uid;
    j["comm"] = escape_bytes(truncate_bytes(e.comm, kMaxCommBytes));
    j["kind"] = kind_name(e);
    if (const auto* exec = std::get_if<ExecInfo>(&e.kind)) {
        j["exe_path"] = escape_bytes(exec->exe_path);
    } else if (const auto* open = std::get_if<FileOpenInfo>(&e.kind)) {
        j["path"] = escape_bytes(truncate_bytes(open->path, kMaxPathBytes));
        j["flags"] = open->flags.raw;
    }
    return j.dump();
}

namespace {

constexpr std::array<std::string_view, 5> kCommonFields = {"ts_ns", "pid", "uid", "comm", "kind"};

class LineDecoder {
public:
    LineDecoder(const ojson& j, std::size_t line_no) : j_(j), line_(line_no) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw TraceDecodeError(line_, field, what);
    }

    const ojson& require(std::string_view field) const {
        auto it = j_.find(field);
        if (it == j_.end()) fail(std::string(field), "missing field " + std::string(field));
        return *it;
    }

    std::uint64_t unsigned_field(std::string_view field, std::uint64_t max) const {
        const ojson& v = require(field);
        if (v.is_number_integer() && !v.is_number_unsigned())
            fail(std::string(field), "field " + std::string(field) + " is negative");
        if (!v.is_number_unsigned())
            fail(std::string(field), "field " + std::string(field) + " is not an integer");
        const auto x = v.get<std::uint64_t>();
        if (x > max) fail(std::string(field), "field " + std::string(field) + " out of range");
        return x;
    }

    std::string text_field(std::string_view field) const {
        const ojson& v = require(field);
        if (!v.is_string()) fail(std::string(field), "field " + std::string(field) + " is not a string");
        try {
            return unescape_bytes(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(std::string(field), "field " + std::string(field) + " has a bad escape sequence");
        }
    }

    void check_layout(std::span<const std::string_view> expected) const {
        std::size_t i = 0;
        for (auto it = j_.begin(); it != j_.end(); ++it, ++i) {
            const bool known = std::find(expected.begin(), expected.end(), it.key()) != expected.end();
            if (!known) fail(it.key(), "unknown field " + it.key());
            if (i >= expected.size() || it.key() != expected[i])
                fail(it.key(), "field " + it.key() + " out of order");
        }
        for (auto f : expected) require(f);
    }

private:
    const ojson& j_;
    std::size_t line_;
};

}  // namespace

SyscallEvent decode_trace_line(std::string_view line, std::size_t line_no) {
    ojson j;
    try {
        j = ojson::parse(line);
    } catch (const ojson::parse_error& err) {
        throw TraceDecodeError(line_no, "", std::string("malformed record: ") + err.what());
    }
    if (!j.is_object()) throw TraceDecodeError(line_no, "", "malformed record: not an object");
    LineDecoder d(j, line_no);

    // Required fields are reported before ordering problems.
    for (auto f : kCommonFields) d.require(f);

    SyscallEvent e;
    e.timestamp_ns = d.unsigned_field("ts_ns", std::numeric_limits<std::uint64_t>::max());
    {
        const ojson& pid = d.require("pid");
        if (!pid.is_number_integer()) d.fail("pid", "field pid is not an integer");
        const auto v = pid.get<std::int64_t>();
        if (pid.is_number_unsigned() && pid.get<std::uint64_t>() > std::numeric_limits<Pid>::max())
            d.fail("pid", "field pid out of range");
        if (v <= 0) d.fail("pid", "invariant violation: pid > 0");
        e.pid = static_cast<Pid>(v);
    }
    e.uid = static_cast<std::uint32_t>(d.unsigned_field("uid", std::numeric_limits<std::uint32_t>::max()));
    e.comm = d.text_field("comm");
    if (e.comm.empty()) d.fail("comm", "invariant violation: comm is non-empty");
    if (e.comm.size() > kMaxCommBytes) d.fail("comm", "invariant violation: comm exceeds 16 bytes");

    const ojson& kind = d.require("kind");
    if (!kind.is_string()) d.fail("kind", "field kind is not a string");
    const auto k = kind.get<std::string>();
    if (k == "exec") {
        static constexpr std::array<std::string_view, 6> kLayout = {"ts_ns", "pid", "uid", "comm", "kind", "exe_path"};
        d.check_layout(kLayout);
        e.kind = ExecInfo{d.text_field("exe_path")};
    } else if (k == "open") {
        static constexpr std::array<std::string_view, 7> kLayout = {"ts_ns", "pid", "uid", "comm", "kind", "path", "flags"};
        d.check_layout(kLayout);
        auto path = d.text_field("path");
        if (path.size() > kMaxPathBytes) d.fail("path", "invariant violation: path exceeds 128 bytes");
        const auto raw = static_cast<std::uint32_t>(d.unsigned_field("flags", std::numeric_limits<std::uint32_t>::max()));
        e.kind = FileOpenInfo{std::move(path), parse_open_flags(raw)};
    } else if (k == "exit") {
        d.check_layout(kCommonFields);
        e.kind = ExitInfo{};
    } else {
        d.fail("kind", "unknown kind " + k);
    }
    return e;
}

std::vector<SyscallEvent> read_trace(std::istream& in) {
    std::vector<SyscallEvent> events;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        auto e = decode_trace_line(line, line_no);
        if (!events.empty() && e.timestamp_ns < events.back().timestamp_ns)
            throw TraceDecodeError(line_no, "ts_ns", "invariant violation: timestamps must be non-decreasing");
        events.push_back(std::move(e));
    }
    return events;
}

std::vector<SyscallEvent> read_trace_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open trace " + path);
    return read_trace(in);
}

void write_trace(std::ostream& out, std::span<const SyscallEvent> events) {
    for (const auto& e : events) out << encode_trace_line(e) << '\n';
}

}  // namespace rguard
