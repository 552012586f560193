#include "rguard/static_analyzer.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <memory>

#include <fcntl.h>
#include <unistd.h>

#include <openssl/evp.h>

namespace rguard {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
using MdCtx = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

class Sha256Stream {
public:
    Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256: digest init failed");
    }
    void update(const void* data, std::size_t n) {
        if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw std::runtime_error("sha256: update failed");
    }
    Sha256Digest finish() {
        std::array<std::uint8_t, 32> out{};
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx_.get(), out.data(), &len) != 1 || len != out.size())
            throw std::runtime_error("sha256: final failed");
        return Sha256Digest(out);
    }

private:
    MdCtx ctx_;
};

class Fd {
public:
    explicit Fd(int fd) : fd_(fd) {}
    ~Fd() {
        if (fd_ >= 0) ::close(fd_);
    }
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    int get() const { return fd_; }

private:
    int fd_;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<Sha256Digest> Sha256Digest::from_hex(std::string_view hex) {
    if (hex.size() != 64) return std::nullopt;
    std::array<std::uint8_t, 32> b{};
    for (std::size_t i = 0; i < 32; ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        b[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return Sha256Digest(b);
}

Sha256Digest Sha256Digest::of_bytes(std::string_view data) {
    Sha256Stream s;
    s.update(data.data(), data.size());
    return s.finish();
}

std::string Sha256Digest::hex() const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(64, '0');
    for (std::size_t i = 0; i < 32; ++i) {
        out[2 * i] = kHex[bytes_[i] >> 4];
        out[2 * i + 1] = kHex[bytes_[i] & 0xF];
    }
    return out;
}

HashBlocklist HashBlocklist::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BlocklistLoadError("cannot read blocklist " + path.string() + ": " + std::strerror(errno));
    HashBlocklist bl;
    bl.source_ = path;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (auto d = Sha256Digest::from_hex(t)) {
            bl.digests_.push_back(*d);
        } else {
            ++bl.skipped_;
        }
    }
    if (in.bad()) throw BlocklistLoadError("error reading blocklist " + path.string());
    std::sort(bl.digests_.begin(), bl.digests_.end());
    bl.digests_.erase(std::unique(bl.digests_.begin(), bl.digests_.end()), bl.digests_.end());
    bl.digests_.shrink_to_fit();
    return bl;
}

HashBlocklist HashBlocklist::from_digests(std::vector<Sha256Digest> digests) {
    HashBlocklist bl;
    bl.digests_ = std::move(digests);
    std::sort(bl.digests_.begin(), bl.digests_.end());
    bl.digests_.erase(std::unique(bl.digests_.begin(), bl.digests_.end()), bl.digests_.end());
    bl.digests_.shrink_to_fit();
    return bl;
}

bool HashBlocklist::contains(const Sha256Digest& d) const {
    return std::binary_search(digests_.begin(), digests_.end(), d);
}

Sha256Digest hash_file(const std::filesystem::path& path) {
    Fd fd(::open(path.c_str(), O_RDONLY | O_CLOEXEC));
    if (fd.get() < 0) {
        const int err = errno;
        if (err == ENOENT || err == ENOTDIR)
            throw HashError(HashError::Reason::TargetDisappeared, "target disappeared");
        throw HashError(HashError::Reason::Unreadable, std::string("unreadable: ") + std::strerror(err));
    }
    Sha256Stream sha;
    std::vector<char> buf(1 << 16);
    for (;;) {
        const ssize_t n = ::read(fd.get(), buf.data(), buf.size());
        if (n == 0) break;
        if (n < 0) {
            if (errno == EINTR) continue;
            throw HashError(HashError::Reason::Unreadable, std::string("unreadable: ") + std::strerror(errno));
        }
        sha.update(buf.data(), static_cast<std::size_t>(n));
    }
    return sha.finish();
}

Verdict check_exec(const SyscallEvent& exec, const HashBlocklist& blocklist,
                   const std::filesystem::path& resolved_exe) {
    if (!exec.is_exec()) throw std::invalid_argument("check_exec: event is not an exec");
    Sha256Digest digest;
    try {
        digest = hash_file(resolved_exe);
    } catch (const HashError& e) {
        return Verdict::indeterminate(e.what());
    }
    if (blocklist.contains(digest)) return Verdict::known_malware(digest.hex());
    return Verdict::benign(digest.hex());
}

Verdict check_exec(const SyscallEvent& exec, const HashBlocklist& blocklist) {
    const auto* info = std::get_if<ExecInfo>(&exec.kind);
    if (info == nullptr) throw std::invalid_argument("check_exec: event is not an exec");
    return check_exec(exec, blocklist, info->exe_path);
}

}  // namespace rguard
