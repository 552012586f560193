#include <gtest/gtest.h>

#include <sstream>

#include "rguard/event_model.hpp"
#include "rguard/random.hpp"

using namespace rguard;

TEST(OpenFlags, CreatOnlyIsCreateAndReadOnly) {
    const auto f = parse_open_flags(64);
    EXPECT_TRUE(f.creat);
    EXPECT_TRUE(f.rdonly);
    EXPECT_FALSE(f.wronly);
}

TEST(OpenFlags, ZeroIsPlainReadOnly) {
    const auto f = parse_open_flags(0);
    EXPECT_FALSE(f.creat);
    EXPECT_TRUE(f.rdonly);
}

TEST(OpenFlags, CreatWriteOnly) {
    const auto f = parse_open_flags(0101);
    EXPECT_TRUE(f.creat);
    EXPECT_TRUE(f.wronly);
    EXPECT_FALSE(f.rdonly);
    EXPECT_FALSE(f.rdwr);
}

TEST(OpenFlags, MatchesBitmaskDefinitionForAllLowBits) {
    for (std::uint32_t raw = 0; raw < (1u << 12); ++raw) {
        const auto f = parse_open_flags(raw);
        ASSERT_EQ(f.creat, (raw & 0100) != 0) << raw;
        ASSERT_EQ(f.rdonly, (raw & 03) == 0) << raw;
        ASSERT_EQ(f.wronly, (raw & 03) == 1) << raw;
        ASSERT_EQ(f.rdwr, (raw & 03) == 2) << raw;
        ASSERT_EQ(f.trunc, (raw & 01000) != 0) << raw;
        ASSERT_EQ(f.append, (raw & 02000) != 0) << raw;
    }
}

TEST(TraceCodec, ExecLineCarriesKindAndPid) {
    const auto line = encode_trace_line(make_exec_event(42, 0, "bash", 7, "/usr/bin/bash"));
    EXPECT_NE(line.find("\"kind\":\"exec\""), std::string::npos);
    EXPECT_NE(line.find("\"pid\":42"), std::string::npos);
}

TEST(TraceCodec, LongPathTruncatedTo128Bytes) {
    const std::string path = "/" + std::string(199, 'p');
    const auto e = make_open_event(5, 0, "cp", 1, path, 0101);
    EXPECT_EQ(std::get<FileOpenInfo>(e.kind).path.size(), 128u);
    const auto back = decode_trace_line(encode_trace_line(e));
    EXPECT_EQ(std::get<FileOpenInfo>(back.kind).path, path.substr(0, 128));
}

TEST(TraceCodec, CommTruncatedTo16Bytes) {
    const auto e = make_exit_event(5, 0, "a-very-long-command-name", 1);
    EXPECT_EQ(e.comm, "a-very-long-comm");
}

TEST(TraceCodec, MissingPid) {
    try {
        decode_trace_line(R"({"ts_ns":1,"uid":0,"comm":"x","kind":"exit"})", 3);
        FAIL();
    } catch (const TraceDecodeError& e) {
        EXPECT_STREQ(e.what(), "line 3: missing field pid");
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.field(), "pid");
    }
}

TEST(TraceCodec, PidZeroIsInvariantViolation) {
    try {
        decode_trace_line(R"({"ts_ns":1,"pid":0,"uid":0,"comm":"x","kind":"exit"})");
        FAIL();
    } catch (const TraceDecodeError& e) {
        EXPECT_NE(std::string(e.what()).find("invariant violation: pid > 0"), std::string::npos);
    }
}

TEST(TraceCodec, RejectsUnknownAndMisplacedFields) {
    EXPECT_THROW(decode_trace_line(R"({"ts_ns":1,"pid":2,"uid":0,"comm":"x","kind":"exit","extra":1})"),
                 TraceDecodeError);
    EXPECT_THROW(decode_trace_line(R"({"pid":2,"ts_ns":1,"uid":0,"comm":"x","kind":"exit"})"), TraceDecodeError);
    EXPECT_THROW(decode_trace_line(R"({"ts_ns":1,"pid":2,"uid":0,"comm":"x","kind":"exit","path":"/a"})"),
                 TraceDecodeError);
    EXPECT_THROW(decode_trace_line(R"({"ts_ns":-1,"pid":2,"uid":0,"comm":"x","kind":"exit"})"), TraceDecodeError);
    EXPECT_THROW(decode_trace_line(R"({"ts_ns":1,"pid":2,"uid":0,"comm":"x","kind":"fork"})"), TraceDecodeError);
    EXPECT_THROW(decode_trace_line("not json"), TraceDecodeError);
}

TEST(TraceCodec, MalformedLineNamedInReadTrace) {
    std::stringstream in;
    for (int i = 1; i <= 6; ++i) in << encode_trace_line(make_exit_event(i, 0, "x", i)) << '\n';
    in << "{\"ts_ns\":7,\n";
    try {
        read_trace(in);
        FAIL();
    } catch (const TraceDecodeError& e) {
        EXPECT_EQ(e.line(), 7u);
        EXPECT_EQ(std::string(e.what()).rfind("line 7:", 0), 0u);
    }
}

TEST(TraceCodec, DecreasingTimestampRejected) {
    std::stringstream in;
    in << encode_trace_line(make_exit_event(1, 0, "x", 10)) << '\n'
       << encode_trace_line(make_exit_event(2, 0, "x", 9)) << '\n';
    EXPECT_THROW(read_trace(in), TraceDecodeError);
}

TEST(TraceCodec, EscapingRoundTripsArbitraryBytes) {
    DeterministicRng rng(3);
    for (int i = 0; i < 2000; ++i) {
        std::string raw(rng.below(40), '\0');
        for (auto& c : raw) c = static_cast<char>(rng.below(256));
        ASSERT_EQ(unescape_bytes(escape_bytes(raw)), raw);
    }
    EXPECT_EQ(escape_bytes("a\\b"), "a\\\\b");
    EXPECT_EQ(escape_bytes(std::string("\xff", 1)), "\\xff");
    EXPECT_EQ(escape_bytes("caf\xc3\xa9"), "caf\xc3\xa9");
}

// Property: any valid event survives encode/decode unchanged.
TEST(TraceCodec, RandomEventsRoundTrip) {
    DeterministicRng rng(11);
    const auto bytes = [&](std::size_t max_len, bool allow_empty) {
        std::string s(rng.between(allow_empty ? 0 : 1, max_len), '\0');
        for (auto& c : s) c = static_cast<char>(rng.between(1, 255));
        return s;
    };
    for (int i = 0; i < 5000; ++i) {
        const auto pid = static_cast<Pid>(rng.between(1, 4'000'000));
        const auto uid = static_cast<std::uint32_t>(rng.next());
        const auto ts = rng.next();
        const auto comm = bytes(20, false);
        SyscallEvent e;
        switch (rng.below(3)) {
        case 0: e = make_exec_event(pid, uid, comm, ts, bytes(300, true)); break;
        case 1: e = make_open_event(pid, uid, comm, ts, bytes(300, true), static_cast<std::uint32_t>(rng.next())); break;
        default: e = make_exit_event(pid, uid, comm, ts); break;
        }
        ASSERT_NO_THROW(validate_event(e));
        ASSERT_EQ(decode_trace_line(encode_trace_line(e)), e) << encode_trace_line(e);
    }
}
