#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rguard/event_model.hpp"
#include "rguard/verdict.hpp"

namespace rguard {

class Sha256Digest {
public:
    Sha256Digest() = default;
    explicit Sha256Digest(const std::array<std::uint8_t, 32>& bytes) : bytes_(bytes) {}

    /// Accepts exactly 64 hex characters, either case.
    static std::optional<Sha256Digest> from_hex(std::string_view hex);
    static Sha256Digest of_bytes(std::string_view data);

    std::string hex() const;
    const std::array<std::uint8_t, 32>& bytes() const { return bytes_; }

    auto operator<=>(const Sha256Digest&) const = default;

private:
    std::array<std::uint8_t, 32> bytes_{};
};

/// Known-malware digests. Immutable after construction; stored as a sorted
/// vector (32 bytes per entry) so a MalwareBazaar-sized feed stays small.
class HashBlocklist {
public:
    HashBlocklist() = default;

    /// Newline-delimited hex digests, `#` comments and blank lines ignored.
    /// Malformed lines are counted in skipped_count(), not fatal.
    static HashBlocklist load(const std::filesystem::path& path);
    static HashBlocklist from_digests(std::vector<Sha256Digest> digests);

    bool contains(const Sha256Digest& d) const;
    std::size_t entry_count() const { return digests_.size(); }
    std::size_t skipped_count() const { return skipped_; }
    const std::filesystem::path& source_path() const { return source_; }
    std::size_t memory_bytes() const { return digests_.capacity() * sizeof(Sha256Digest); }

    bool operator==(const HashBlocklist& o) const { return digests_ == o.digests_; }

private:
    std::vector<Sha256Digest> digests_;
    std::filesystem::path source_;
    std::size_t skipped_ = 0;
};

class BlocklistLoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HashError : public std::runtime_error {
public:
    enum class Reason { TargetDisappeared, Unreadable };
    HashError(Reason r, const std::string& what) : std::runtime_error(what), reason_(r) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// Streams the file through SHA-256 in fixed-size chunks.
Sha256Digest hash_file(const std::filesystem::path& path);

/// Hashes `resolved_exe` (the exec event's exe_path as seen from this host)
/// and looks it up. Hash failures become Indeterminate, never a guess.
Verdict check_exec(const SyscallEvent& exec, const HashBlocklist& blocklist,
                   const std::filesystem::path& resolved_exe);
Verdict check_exec(const SyscallEvent& exec, const HashBlocklist& blocklist);

}  // namespace rguard
