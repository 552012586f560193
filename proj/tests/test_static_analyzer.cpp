#include <gtest/gtest.h>

#include <fstream>

#include "rguard/random.hpp"
#include "rguard/static_analyzer.hpp"
#include "test_support.hpp"

using namespace rguard;
using rguard::testing::TempDir;
using rguard::testing::write_file;

namespace {

constexpr const char* kEmpty = "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855";
constexpr const char* kAbc = "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad";

std::string sha256sum(const std::filesystem::path& p) {
    return rguard::testing::capture("sha256sum '" + p.string() + "'").substr(0, 64);
}

}  // namespace

TEST(Sha256, FipsVectors) {
    EXPECT_EQ(Sha256Digest::of_bytes("").hex(), kEmpty);
    EXPECT_EQ(Sha256Digest::of_bytes("abc").hex(), kAbc);
    EXPECT_EQ(Sha256Digest::of_bytes("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq").hex(),
              "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    EXPECT_EQ(Sha256Digest::of_bytes(std::string(1'000'000, 'a')).hex(),
              "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST(Sha256, HexIsLowercase64) {
    const auto d = Sha256Digest::from_hex("BA7816BF8F01CFEA414140DE5DAE2223B00361A396177A9CB410FF61F20015AD");
    ASSERT_TRUE(d);
    EXPECT_EQ(d->hex(), kAbc);
    EXPECT_FALSE(Sha256Digest::from_hex("abc"));
    EXPECT_FALSE(Sha256Digest::from_hex(std::string(63, 'a') + "g"));
}

TEST(HashFile, EmptyAndAbcFiles) {
    TempDir dir;
    write_file(dir / "empty", "");
    write_file(dir / "abc", "abc");
    EXPECT_EQ(hash_file(dir / "empty").hex(), kEmpty);
    EXPECT_EQ(hash_file(dir / "abc").hex(), kAbc);
}

TEST(HashFile, OneGibPseudoRandomMatchesSha256sum) {
    TempDir dir;
    const auto path = dir / "big.bin";
    {
        std::ofstream out(path, std::ios::binary);
        DeterministicRng rng(2024);
        std::vector<std::uint64_t> block(1 << 17);  // 1 MiB
        for (int mib = 0; mib < 1024; ++mib) {
            for (auto& w : block) w = rng.next();
            out.write(reinterpret_cast<const char*>(block.data()), static_cast<std::streamsize>(block.size() * 8));
        }
    }
    ASSERT_EQ(std::filesystem::file_size(path), 1ull << 30);
    EXPECT_EQ(hash_file(path).hex(), sha256sum(path));
}

TEST(HashFile, OddSizesMatchSha256sum) {
    TempDir dir;
    DeterministicRng rng(8);
    for (std::size_t size : {1u, 63u, 64u, 65u, 65535u, 65536u, 65537u, 200001u}) {
        std::string data(size, '\0');
        for (auto& c : data) c = static_cast<char>(rng.below(256));
        const auto p = dir / ("f" + std::to_string(size));
        write_file(p, data);
        EXPECT_EQ(hash_file(p).hex(), sha256sum(p)) << size;
    }
}

TEST(HashFile, MissingFileIsTargetDisappeared) {
    TempDir dir;
    try {
        hash_file(dir / "gone");
        FAIL();
    } catch (const HashError& e) {
        EXPECT_EQ(e.reason(), HashError::Reason::TargetDisappeared);
        EXPECT_STREQ(e.what(), "target disappeared");
    }
}

TEST(Blocklist, MixedCaseDuplicateCountsOnce) {
    TempDir dir;
    write_file(dir / "bl", std::string(kEmpty) + "\n" + "E3B0C44298FC1C149AFBF4C8996FB92427AE41E4649B934CA495991B7852B855\n");
    const auto bl = HashBlocklist::load(dir / "bl");
    EXPECT_EQ(bl.entry_count(), 1u);
    EXPECT_TRUE(bl.contains(*Sha256Digest::from_hex(kEmpty)));
}

TEST(Blocklist, EmptyFileMissesEverything) {
    TempDir dir;
    write_file(dir / "bl", "");
    const auto bl = HashBlocklist::load(dir / "bl");
    EXPECT_EQ(bl.entry_count(), 0u);
    EXPECT_FALSE(bl.contains(*Sha256Digest::from_hex(kEmpty)));
}

TEST(Blocklist, GarbageLinesSkippedCommentsIgnored) {
    TempDir dir;
    write_file(dir / "bl", std::string("# feed export\n") + kEmpty + "\n" + kAbc + "\n\n" +
                               "0000000000000000000000000000000000000000000000000000000000000001\n" +
                               "not-a-digest\n");
    const auto bl = HashBlocklist::load(dir / "bl");
    EXPECT_EQ(bl.entry_count(), 3u);
    EXPECT_EQ(bl.skipped_count(), 1u);
    EXPECT_EQ(HashBlocklist::load(dir / "bl"), bl);
}

TEST(Blocklist, MissingFileIsLoadError) {
    EXPECT_THROW(HashBlocklist::load("/nonexistent/blocklist"), BlocklistLoadError);
}

// Membership must agree exactly with the set of lines written.
TEST(Blocklist, MembershipIsExact) {
    TempDir dir;
    DeterministicRng rng(77);
    std::vector<Sha256Digest> in, out;
    std::ofstream f(dir / "bl");
    for (int i = 0; i < 20000; ++i) {
        std::array<std::uint8_t, 32> b{};
        for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
        Sha256Digest d(b);
        if (i % 2 == 0) {
            f << d.hex() << '\n';
            in.push_back(d);
        } else {
            out.push_back(d);
        }
    }
    f.close();
    const auto bl = HashBlocklist::load(dir / "bl");
    EXPECT_EQ(bl.entry_count(), in.size());
    for (const auto& d : in) ASSERT_TRUE(bl.contains(d));
    for (const auto& d : out) ASSERT_FALSE(bl.contains(d));
}

TEST(Blocklist, MalwareBazaarSizedFeedFitsIn64MiB) {
    TempDir dir;
    DeterministicRng rng(1);
    {
        std::ofstream f(dir / "bl");
        std::array<std::uint8_t, 32> b{};
        for (int i = 0; i < 777'073; ++i) {
            for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
            f << Sha256Digest(b).hex() << '\n';
        }
    }
    const auto bl = HashBlocklist::load(dir / "bl");
    EXPECT_EQ(bl.entry_count(), 777'073u);
    EXPECT_LE(bl.memory_bytes(), 64u << 20);
}

TEST(CheckExec, ListedDigestIsKnownMalware) {
    TempDir dir;
    write_file(dir / "bin", "\x7f" "ELF payload");
    const auto digest = hash_file(dir / "bin");
    const auto e = make_exec_event(10, 0, "bin", 1, (dir / "bin").string());
    const auto listed = HashBlocklist::from_digests({digest});
    EXPECT_EQ(check_exec(e, listed), Verdict::known_malware(digest.hex()));
    EXPECT_EQ(check_exec(e, HashBlocklist{}).kind, VerdictKind::Benign);
}

TEST(CheckExec, DeletedBeforeHashingIsIndeterminate) {
    TempDir dir;
    write_file(dir / "bin", "x");
    const auto e = make_exec_event(10, 0, "bin", 1, (dir / "bin").string());
    std::filesystem::remove(dir / "bin");
    EXPECT_EQ(check_exec(e, HashBlocklist{}), Verdict::indeterminate("target disappeared"));
}

TEST(CheckExec, RejectsNonExec) {
    EXPECT_THROW(check_exec(make_exit_event(1, 0, "x", 1), HashBlocklist{}), std::invalid_argument);
}
