#include <gtest/gtest.h>

#include <cstddef>
#include <cstring>

#include "rguard/kernel_record.hpp"
#include "rguard/random.hpp"

using namespace rguard;

namespace {

// The record as the probe side declares it; the compiler's natural layout is
// the wire format.
struct ProbeRecord {
    std::uint32_t pid;
    std::uint32_t uid;
    char comm[16];
    std::uint8_t kind;
    std::uint32_t flags;
    char path[128];
    std::uint64_t timestamp_ns;
};
static_assert(sizeof(ProbeRecord) == kKernelRecordSize);
static_assert(offsetof(ProbeRecord, flags) == 28);
static_assert(offsetof(ProbeRecord, path) == 32);
static_assert(offsetof(ProbeRecord, timestamp_ns) == 160);

KernelRecordBytes bytes_of(const ProbeRecord& r) {
    KernelRecordBytes b{};
    std::memcpy(b.data(), &r, sizeof r);
    return b;
}

ProbeRecord probe_of(const KernelRecordBytes& b) {
    ProbeRecord r{};
    std::memcpy(&r, b.data(), sizeof r);
    return r;
}

}  // namespace

TEST(KernelRecord, DecodesProbeStructOpen) {
    ProbeRecord r{};
    r.pid = 4242;
    r.uid = 1000;
    std::strcpy(r.comm, "updater");
    r.kind = 2;
    r.flags = 0101;
    std::strcpy(r.path, "/home/alice/notes.txt");
    r.timestamp_ns = 0x0102030405060708ULL;
    const auto rec = decode_kernel_record(bytes_of(r));
    const auto& e = std::get<SyscallEvent>(rec);
    EXPECT_EQ(e, make_open_event(4242, 1000, "updater", 0x0102030405060708ULL, "/home/alice/notes.txt", 0101));
    EXPECT_TRUE(e.is_creat_open());
}

TEST(KernelRecord, FullWidthFieldsWithoutTerminator) {
    ProbeRecord r{};
    r.pid = 7;
    std::memset(r.comm, 'c', sizeof r.comm);
    r.kind = 1;
    std::memset(r.path, 'p', sizeof r.path);
    const auto e = std::get<SyscallEvent>(decode_kernel_record(bytes_of(r)));
    EXPECT_EQ(e.comm, std::string(16, 'c'));
    EXPECT_EQ(std::get<ExecInfo>(e.kind).exe_path, std::string(128, 'p'));
}

TEST(KernelRecord, LostRecordCarriesCount) {
    ProbeRecord r{};
    r.kind = 4;
    r.flags = 17;
    r.timestamp_ns = 99;
    EXPECT_EQ(std::get<LostRecords>(decode_kernel_record(bytes_of(r))), (LostRecords{99, 17}));
    EXPECT_EQ(decode_kernel_record(encode_lost_record({5, 3})), KernelRecord(LostRecords{5, 3}));
}

TEST(KernelRecord, RejectsBadRecords) {
    ProbeRecord r{};
    r.pid = 1;
    std::strcpy(r.comm, "x");
    r.kind = 9;
    EXPECT_THROW(decode_kernel_record(bytes_of(r)), KernelRecordError);
    r.kind = 3;
    r.pid = 0;
    EXPECT_THROW(decode_kernel_record(bytes_of(r)), KernelRecordError);
    r.pid = 1;
    r.comm[0] = '\0';
    EXPECT_THROW(decode_kernel_record(bytes_of(r)), KernelRecordError);
}

TEST(KernelRecord, EncoderMatchesProbeStruct) {
    DeterministicRng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto pid = static_cast<Pid>(rng.between(1, 1 << 22));
        const auto uid = static_cast<std::uint32_t>(rng.next());
        const auto ts = rng.next();
        std::string comm(rng.between(1, 16), 'a');
        for (auto& c : comm) c = static_cast<char>(rng.between('a', 'z'));
        std::string path(rng.between(0, 128), '/');
        for (auto& c : path) c = static_cast<char>(rng.between('!', '~'));
        const auto flags = static_cast<std::uint32_t>(rng.next());
        SyscallEvent e = rng.below(3) == 0   ? make_exec_event(pid, uid, comm, ts, path)
                         : rng.below(2) == 0 ? make_open_event(pid, uid, comm, ts, path, flags)
                                             : make_exit_event(pid, uid, comm, ts);
        const auto bytes = encode_kernel_record(e);
        const auto r = probe_of(bytes);
        ASSERT_EQ(r.pid, static_cast<std::uint32_t>(pid));
        ASSERT_EQ(r.uid, uid);
        ASSERT_EQ(r.timestamp_ns, ts);
        ASSERT_EQ(std::string(r.comm, strnlen(r.comm, 16)), comm);
        ASSERT_EQ(decode_kernel_record(bytes), KernelRecord(e));
    }
}
