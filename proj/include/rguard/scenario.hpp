#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rguard/event_model.hpp"

namespace rguard {

enum class ScenarioKind {
    // Notes dropped in every target directory before any encryption.
    NoteFirst,
    // Each directory is encrypted, then its note is written.
    NotePerDirectory,
    // Compiler toolchain creating many text and object files, no note.
    BenignBuild,
    // Like NotePerDirectory with minutes of idle time between files.
    StealthSlow,
};

std::string_view to_string(ScenarioKind k);
/// Accepts "note-first", "note-per-directory", "benign-build", "stealth-slow".
std::optional<ScenarioKind> parse_scenario_kind(std::string_view s);

enum class NoteStyle {
    Standard,
    // Note wording unlike anything in the training corpus (a known miss).
    OutOfDistribution,
};

struct ScenarioParams {
    ScenarioKind kind = ScenarioKind::NoteFirst;
    std::size_t dirs = 10;
    std::size_t files_per_dir = 10;
    std::uint64_t seed = 1;
    NoteStyle note = NoteStyle::Standard;
};

/// Ground truth the generator knows and the detector must not see.
struct ScenarioTruth {
    std::optional<Pid> attacker_pid;
    std::string attacker_comm;
    std::string attacker_exe;
    std::string attacker_digest_hex;
    std::vector<std::string> note_paths;
    std::vector<std::string> encrypted_paths;
    std::size_t first_dir_file_count = 0;
};

struct Scenario {
    std::vector<SyscallEvent> events;
    // Contents of created files and executed binaries, keyed by absolute path.
    std::map<std::string, std::string> files;
    ScenarioTruth truth;
};

/// Deterministic in `params`. Throws std::invalid_argument for zero counts.
Scenario generate_scenario(const ScenarioParams& params);

/// Writes `<dir>/events.trace`, `<dir>/fs/<path>` for every file and
/// `<dir>/truth.json`.
void write_scenario(const Scenario& s, const std::filesystem::path& dir);

std::string truth_json(const ScenarioTruth& t);

}  // namespace rguard
