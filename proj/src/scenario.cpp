#include "rguard/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rguard/random.hpp"
#include "rguard/static_analyzer.hpp"

namespace rguard {

namespace fs = std::filesystem;

namespace {

constexpr std::uint32_t kReadOnly = 0;
constexpr std::uint32_t kCreateWrite = kOWrOnly | kOCreat | kOTrunc;
constexpr std::uint32_t kUid = 1000;
constexpr std::string_view kHome = "/home/alice";

const std::vector<std::string> kDirNames = {
    "documents/finance", "documents/contracts", "documents/taxes", "pictures/2023", "pictures/2024",
    "projects/website",  "projects/thesis",     "music/live",      "desktop",       "shared/team",
    "documents/medical", "documents/insurance", "pictures/scans",  "projects/audit", "shared/board",
};
const std::vector<std::string> kFileStems = {
    "report", "invoice", "budget", "scan", "photo", "notes", "draft", "summary", "minutes", "plan", "ledger",
};
const std::vector<std::string> kFileExts = {".docx", ".xlsx", ".pdf", ".jpg", ".png", ".odt", ".csv", ".txt"};
const std::vector<std::string> kNoteNames = {"README_RESTORE.txt", "HOW_TO_DECRYPT.txt", "!!_RECOVER_FILES_!!.txt"};

const std::vector<std::string> kCodeWords = {
    "buffer", "parse", "config", "node", "list", "value", "index", "count", "stream", "token",
    "header", "module", "table", "entry", "cache", "state", "queue", "frame", "block", "range",
};

std::string random_bytes(DeterministicRng& rng, std::size_t n) {
    std::string out(n, '\0');
    for (auto& c : out) c = static_cast<char>(rng.below(256));
    return out;
}

std::string fake_elf(DeterministicRng& rng, std::size_t n) {
    std::string out = "\x7f" "ELF\x02\x01\x01";
    out += random_bytes(rng, n);
    return out;
}

std::string onion_address(DeterministicRng& rng) {
    constexpr std::string_view kAlpha = "abcdefghijklmnopqrstuvwxyz234567";
    std::string s;
    for (int i = 0; i < 56; ++i) s += kAlpha[rng.below(kAlpha.size())];
    return s + ".onion";
}

std::string btc_address(DeterministicRng& rng) {
    constexpr std::string_view kBech32 = "023456789acdefghjklmnpqrstuvwxyz";
    std::string s = "bc1q";
    for (int i = 0; i < 38; ++i) s += kBech32[rng.below(kBech32.size())];
    return s;
}

std::string standard_note(DeterministicRng& rng) {
    const std::vector<std::string> openings = {
        "YOUR FILES HAVE BEEN ENCRYPTED!",
        "Attention! All your important files were encrypted.",
        "Hello. Your documents, photos and databases are locked.",
    };
    const std::vector<std::string> payments = {
        "To get the decryption key you must pay {amount} BTC to this bitcoin wallet: {btc}",
        "Send {amount} bitcoin to {btc}. After payment we will send you the decryptor and the private key.",
    };
    std::ostringstream n;
    n << rng.pick(openings) << "\n\n";
    n << "We used strong military grade encryption. Without our private key and decryption software "
         "nobody can restore your data.\n";
    n << "Do not rename encrypted files. Do not try to decrypt your data using third party software, "
         "it may cause permanent data loss.\n\n";
    auto pay = rng.pick(payments);
    const auto amount = std::to_string(rng.between(1, 9)) + "." + std::to_string(rng.between(0, 9));
    pay.replace(pay.find("{amount}"), 8, amount);
    pay.replace(pay.find("{btc}"), 5, btc_address(rng));
    n << pay << "\n\n";
    n << "Download Tor Browser and open our website: http://" << onion_address(rng) << "\n";
    n << "You can decrypt 2 files for free as a guarantee. The price doubles after 72 hours and "
         "your stolen files will be published.\n";
    n << "Your personal ID: " << rng.next() % 1'000'000'000 << "\n";
    return n.str();
}

// No payment artifacts and no vocabulary shared with the training notes.
std::string out_of_distribution_note(DeterministicRng& rng) {
    const std::vector<std::string> lines = {
        "Saludos cordiales, estimado usuario.",
        "Sus archivos personales han sido bloqueados por nosotros.",
        "Para recuperarlos escriba a nuestro canal privado antes del viernes.",
        "Si reinicia el equipo perdera todo sin remedio.",
        "Guarde este mensaje y espere nuestras instrucciones.",
        "Cualquier intento de reparacion empeorara la situacion.",
    };
    std::ostringstream n;
    for (const auto& l : lines) n << l << "\n";
    n << "Codigo de referencia " << rng.between(100000, 999999) << "\n";
    return n.str();
}

std::string c_source(DeterministicRng& rng, const std::string& name) {
    std::ostringstream s;
    s << "#include <stdio.h>\n#include <stdlib.h>\n#include \"" << name << ".h\"\n\n";
    const auto funcs = rng.between(2, 5);
    for (std::uint64_t f = 0; f < funcs; ++f) {
        const auto& a = rng.pick(kCodeWords);
        const auto& b = rng.pick(kCodeWords);
        s << "static int " << a << "_" << b << "_" << f << "(const char *buf, size_t len)\n{\n"
          << "    int " << b << " = 0;\n"
          << "    for (size_t i = 0; i < len; ++i) {\n"
          << "        if (buf[i] == '\\n')\n            " << b << "++;\n    }\n"
          << "    return " << b << ";\n}\n\n";
    }
    s << "int " << name << "_main(int argc, char **argv)\n{\n    if (argc < 2) {\n"
      << "        fprintf(stderr, \"usage: %s file\\n\", argv[0]);\n        return 1;\n    }\n"
      << "    return 0;\n}\n";
    return s.str();
}

std::string c_header(const std::string& name) {
    std::ostringstream s;
    s << "#ifndef " << name << "_H\n#define " << name << "_H\n\n#include <stddef.h>\n\n"
      << "int " << name << "_main(int argc, char **argv);\n\n#endif\n";
    return s.str();
}

std::string assembly(DeterministicRng& rng, const std::string& name) {
    std::ostringstream s;
    s << "\t.file\t\"" << name << ".c\"\n\t.text\n";
    const auto funcs = rng.between(2, 4);
    for (std::uint64_t f = 0; f < funcs; ++f) {
        const auto sym = name + "_" + rng.pick(kCodeWords) + std::to_string(f);
        s << "\t.globl\t" << sym << "\n\t.type\t" << sym << ", @function\n" << sym << ":\n"
          << "\tpushq\t%rbp\n\tmovq\t%rsp, %rbp\n\tmovl\t$" << rng.below(64) << ", %eax\n"
          << "\tpopq\t%rbp\n\tret\n\t.size\t" << sym << ", .-" << sym << "\n";
    }
    s << "\t.ident\t\"GCC: (GNU) 13.2.0\"\n\t.section\t.note.GNU-stack,\"\",@progbits\n";
    return s.str();
}

class TraceBuilder {
public:
    explicit TraceBuilder(std::uint64_t seed) : rng(seed), clock_(5'000'000'000'000ULL + (seed % 1000) * 1'000'000) {}

    DeterministicRng rng;
    std::vector<SyscallEvent> events;
    std::map<std::string, std::string> files;

    void tick(std::uint64_t lo_ns, std::uint64_t hi_ns) { clock_ += rng.between(lo_ns, hi_ns); }
    void step() { tick(20'000, 900'000); }

    void exec(Pid pid, std::string_view comm, const std::string& exe) {
        step();
        events.push_back(make_exec_event(pid, kUid, comm, clock_, exe));
        if (!files.count(exe)) files[exe] = fake_elf(rng, 2048 + rng.below(2048));
    }
    void read(Pid pid, std::string_view comm, const std::string& path) {
        step();
        events.push_back(make_open_event(pid, kUid, comm, clock_, path, kReadOnly));
    }
    void create(Pid pid, std::string_view comm, const std::string& path, std::string content) {
        step();
        events.push_back(make_open_event(pid, kUid, comm, clock_, path, kCreateWrite));
        files[path] = std::move(content);
    }
    void exit(Pid pid, std::string_view comm) {
        step();
        events.push_back(make_exit_event(pid, kUid, comm, clock_));
    }

    // Unrelated desktop activity; creates too few files to reach a threshold.
    void maybe_background() {
        if (rng.below(5) != 0) return;
        switch (rng.below(4)) {
        case 0: read(kShellPid, "bash", std::string(kHome) + "/.bashrc"); break;
        case 1: read(kEditorPid, "vim", std::string(kHome) + "/notes/todo.txt"); break;
        case 2: read(kShellPid, "bash", "/etc/passwd"); break;
        default: read(kEditorPid, "vim", "/usr/share/vim/vim90/syntax/c.vim"); break;
        }
    }

    void start_background() {
        exec(kShellPid, "bash", "/usr/bin/bash");
        exec(kEditorPid, "vim", "/usr/bin/vim");
        create(kEditorPid, "vim", std::string(kHome) + "/notes/.todo.txt.swp", "b0VIM 9.0" + random_bytes(rng, 512));
    }

    static constexpr Pid kShellPid = 2101;
    static constexpr Pid kEditorPid = 2188;

private:
    std::uint64_t clock_;
};

struct Attacker {
    Pid pid;
    std::string comm = "updater";
    std::string exe = "/tmp/.cache/updater";
};

std::string note_text(TraceBuilder& b, NoteStyle style) {
    return style == NoteStyle::Standard ? standard_note(b.rng) : out_of_distribution_note(b.rng);
}

std::vector<std::vector<std::string>> victim_layout(TraceBuilder& b, const ScenarioParams& p) {
    std::vector<std::vector<std::string>> dirs;
    for (std::size_t d = 0; d < p.dirs; ++d) {
        const auto dir = std::string(kHome) + "/" + kDirNames[d % kDirNames.size()] +
                         (d >= kDirNames.size() ? "_" + std::to_string(d / kDirNames.size()) : "");
        std::vector<std::string> victims;
        for (std::size_t f = 0; f < p.files_per_dir; ++f)
            victims.push_back(dir + "/" + b.rng.pick(kFileStems) + "_" + std::to_string(f) + b.rng.pick(kFileExts));
        dirs.push_back(std::move(victims));
    }
    return dirs;
}

std::string dir_of(const std::string& path) { return path.substr(0, path.rfind('/')); }

void encrypt(TraceBuilder& b, const Attacker& a, const std::string& victim, ScenarioTruth& truth,
             bool slow) {
    if (slow) b.tick(30'000'000'000ULL, 120'000'000'000ULL);
    b.read(a.pid, a.comm, victim);
    const auto locked = victim + ".lck";
    b.create(a.pid, a.comm, locked, random_bytes(b.rng, 512 + b.rng.below(3584)));
    truth.encrypted_paths.push_back(locked);
    b.maybe_background();
}

void drop_note(TraceBuilder& b, const Attacker& a, const std::string& dir, const std::string& name,
               const std::string& text, ScenarioTruth& truth) {
    const auto path = dir + "/" + name;
    b.create(a.pid, a.comm, path, text);
    truth.note_paths.push_back(path);
    b.maybe_background();
}

Scenario attack(const ScenarioParams& p) {
    TraceBuilder b(p.seed);
    Scenario s;
    b.start_background();
    Attacker a{static_cast<Pid>(4000 + b.rng.below(1000))};
    const auto layout = victim_layout(b, p);
    const auto note = note_text(b, p.note);
    const auto note_name = b.rng.pick(kNoteNames);

    b.exec(a.pid, a.comm, a.exe);
    s.truth.attacker_pid = a.pid;
    s.truth.attacker_comm = a.comm;
    s.truth.attacker_exe = a.exe;
    s.truth.attacker_digest_hex = Sha256Digest::of_bytes(b.files.at(a.exe)).hex();
    s.truth.first_dir_file_count = p.files_per_dir;

    const bool slow = p.kind == ScenarioKind::StealthSlow;
    if (p.kind == ScenarioKind::NoteFirst) {
        for (const auto& victims : layout) drop_note(b, a, dir_of(victims.front()), note_name, note, s.truth);
        for (const auto& victims : layout)
            for (const auto& v : victims) encrypt(b, a, v, s.truth, false);
    } else {
        for (const auto& victims : layout) {
            for (const auto& v : victims) encrypt(b, a, v, s.truth, slow);
            drop_note(b, a, dir_of(victims.front()), note_name, note, s.truth);
        }
    }
    b.exit(a.pid, a.comm);
    s.events = std::move(b.events);
    s.files = std::move(b.files);
    return s;
}

Scenario benign_build(const ScenarioParams& p) {
    TraceBuilder b(p.seed);
    Scenario s;
    b.start_background();
    const std::string src = std::string(kHome) + "/projects/libwidget";
    Pid next_pid = static_cast<Pid>(6000 + b.rng.below(1000));

    // Unpack sources: one process creates every source file.
    const Pid tar = next_pid++;
    b.exec(tar, "tar", "/usr/bin/tar");
    std::vector<std::string> units;
    for (std::size_t d = 0; d < p.dirs; ++d) {
        for (std::size_t f = 0; f < p.files_per_dir; ++f) {
            const auto name = b.rng.pick(kCodeWords) + "_" + std::to_string(d) + "_" + std::to_string(f);
            const auto dir = src + "/src/part" + std::to_string(d);
            b.create(tar, "tar", dir + "/" + name + ".c", c_source(b.rng, name));
            b.create(tar, "tar", dir + "/" + name + ".h", c_header(name));
            units.push_back(dir + "/" + name);
            b.maybe_background();
        }
    }
    b.exit(tar, "tar");

    const Pid make = next_pid++;
    b.exec(make, "make", "/usr/bin/make");
    b.read(make, "make", src + "/Makefile");
    std::vector<std::string> objects;
    for (const auto& unit : units) {
        const auto name = unit.substr(unit.rfind('/') + 1);
        const Pid cc1 = next_pid++;
        b.exec(cc1, "cc1", "/usr/libexec/gcc/x86_64-linux-gnu/13/cc1");
        b.read(cc1, "cc1", unit + ".c");
        b.read(cc1, "cc1", unit + ".h");
        b.read(cc1, "cc1", "/usr/include/stdio.h");
        const auto asm_path = "/tmp/cc" + std::to_string(b.rng.between(100000, 999999)) + ".s";
        b.create(cc1, "cc1", asm_path, assembly(b.rng, name));
        b.exit(cc1, "cc1");
        const Pid as = next_pid++;
        b.exec(as, "as", "/usr/bin/x86_64-linux-gnu-as");
        b.read(as, "as", asm_path);
        b.create(as, "as", unit + ".o", fake_elf(b.rng, 600 + b.rng.below(1500)));
        objects.push_back(unit + ".o");
        b.exit(as, "as");
        b.maybe_background();
    }
    const Pid ld = next_pid++;
    b.exec(ld, "ld", "/usr/bin/x86_64-linux-gnu-ld.bfd");
    for (const auto& o : objects) b.read(ld, "ld", o);
    b.create(ld, "ld", src + "/libwidget.so", fake_elf(b.rng, 8192));
    b.exit(ld, "ld");
    std::ostringstream log;
    for (const auto& o : objects) log << "gcc -O2 -fPIC -c " << o.substr(0, o.size() - 2) << ".c -o " << o << "\n";
    log << "gcc -shared -o libwidget.so *.o\nmake: Leaving directory '" << src << "'\n";
    b.create(make, "make", src + "/build.log", log.str());
    b.exit(make, "make");

    s.events = std::move(b.events);
    s.files = std::move(b.files);
    return s;
}

}  // namespace

std::string_view to_string(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::NoteFirst: return "note-first";
    case ScenarioKind::NotePerDirectory: return "note-per-directory";
    case ScenarioKind::BenignBuild: return "benign-build";
    case ScenarioKind::StealthSlow: return "stealth-slow";
    }
    return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view s) {
    for (auto k : {ScenarioKind::NoteFirst, ScenarioKind::NotePerDirectory, ScenarioKind::BenignBuild,
                   ScenarioKind::StealthSlow})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

Scenario generate_scenario(const ScenarioParams& params) {
    if (params.dirs == 0 || params.files_per_dir == 0)
        throw std::invalid_argument("scenario needs at least one directory and one file per directory");
    return params.kind == ScenarioKind::BenignBuild ? benign_build(params) : attack(params);
}

std::string truth_json(const ScenarioTruth& t) {
    nlohmann::ordered_json j;
    j["attacker_pid"] = t.attacker_pid ? nlohmann::ordered_json(*t.attacker_pid) : nlohmann::ordered_json(nullptr);
    j["attacker_comm"] = t.attacker_comm;
    j["attacker_exe"] = t.attacker_exe;
    j["attacker_sha256"] = t.attacker_digest_hex;
    j["note_paths"] = t.note_paths;
    j["encrypted_paths"] = t.encrypted_paths;
    j["first_dir_file_count"] = t.first_dir_file_count;
    return j.dump(2) + "\n";
}

void write_scenario(const Scenario& s, const fs::path& dir) {
    fs::create_directories(dir / "fs");
    {
        std::ofstream out(dir / "events.trace", std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + (dir / "events.trace").string());
        write_trace(out, s.events);
    }
    for (const auto& [path, content] : s.files) {
        const auto target = dir / "fs" / fs::path(path).relative_path();
        fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + target.string());
        out << content;
    }
    std::ofstream truth(dir / "truth.json", std::ios::binary | std::ios::trunc);
    truth << truth_json(s.truth);
}

}  // namespace rguard
