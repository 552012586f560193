#include "rguard/cli.hpp"

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include <CLI11.hpp>

#include "rguard/detection_daemon.hpp"
#include "rguard/event_source.hpp"
#include "rguard/model_store.hpp"
#include "rguard/nlp/pipeline.hpp"
#include "rguard/scenario.hpp"
#include "rguard/static_analyzer.hpp"

namespace rguard {

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_interrupt(int) { g_stop.store(true); }

void install_interrupt_handler() {
    struct sigaction sa{};
    sa.sa_handler = on_interrupt;
    sigemptyset(&sa.sa_mask);
    // No SA_RESTART: a blocking read must return so the loop can stop.
    sa.sa_flags = 0;
    ::sigaction(SIGINT, &sa, nullptr);
    ::sigaction(SIGTERM, &sa, nullptr);
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flags shared by `replay` and `run`.
struct DaemonFlags {
    std::string config;
    std::string model;
    std::string blocklist;
    std::optional<std::uint64_t> threshold;
    std::string response;
    bool enforce = false;
    std::vector<Pid> allow_pids;
    std::string audit_log;
    std::string report;
    std::vector<std::string> watch;
    std::optional<std::size_t> max_scan_bytes;

    void attach(CLI::App& app) {
        app.add_option("--config", config, "JSON config file; flags given here override it");
        app.add_option("-m,--model", model, "model bundle (.rgmodel)");
        app.add_option("-b,--blocklist", blocklist, "SHA-256 blocklist, one hex digest per line");
        app.add_option("--threshold", threshold, "creat-opens per process before files are scanned")
            ->check(CLI::PositiveNumber);
        app.add_option("--response", response, "dry-run | log | kill | suspend")
            ->check(CLI::IsMember({"dry-run", "log", "kill", "suspend"}));
        app.add_flag("--enforce", enforce, "allow signalling processes (implies --response kill if unset)");
        app.add_option("--allow-pid", allow_pids, "never act on this pid (repeatable)");
        app.add_option("--audit-log", audit_log, "append one JSON line per response action");
        app.add_option("--report", report, "also write the run report to this file");
        app.add_option("--watch", watch, "only scan new files under this prefix (repeatable)");
        app.add_option("--max-scan-bytes", max_scan_bytes, "bytes of each candidate file to classify")
            ->check(CLI::PositiveNumber);
    }

    DaemonConfig build() const {
        DaemonConfig c = config.empty() ? DaemonConfig{} : DaemonConfig::from_json_file(config);
        if (!model.empty()) c.model_path = model;
        if (!blocklist.empty()) c.blocklist_path = blocklist;
        if (threshold) c.monitor.threshold_t = *threshold;
        if (enforce) c.enforce = true;
        if (!response.empty()) c.response = *parse_response_mode(response);
        else if (enforce) c.response = ResponseMode::Kill;
        c.allow_pids.insert(allow_pids.begin(), allow_pids.end());
        if (!audit_log.empty()) c.audit_log = audit_log;
        if (!watch.empty()) c.watch_scope = watch;
        if (max_scan_bytes) c.max_scan_bytes = *max_scan_bytes;
        if (c.model_path.empty()) throw UsageError("a model bundle is required (-m or config model_path)");
        c.validate();
        return c;
    }
};

int finish_run(const RunReport& report, const std::string& report_path, std::ostream& out, std::ostream& err) {
    const auto text = report.to_json();
    out << text << '\n';
    if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::trunc);
        if (!f) {
            err << "error: cannot write report " << report_path << '\n';
            return kExitUsage;
        }
        f << text << '\n';
    }
    if (!report.completed) err << "warning: run ended early: " << report.failure << '\n';
    return report.detections.empty() ? kExitClean : kExitDetection;
}

DetectionSink stderr_sink(std::ostream& err) {
    return [&err](const Detection& d) { err << "detection: " << detection_json(d) << '\n'; };
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"rguard: two-phase ransomware detection agent"};
    app.name("rguard");
    app.require_subcommand(1);

    // train
    std::string train_corpus, train_out;
    nlp::TrainConfig train_cfg;
    bool train_json = false;
    auto* train = app.add_subcommand("train", "fit a model on <corpus_dir>/{ransom,benign} and report held-out metrics");
    train->add_option("corpus_dir", train_corpus)->required()->check(CLI::ExistingDirectory);
    train->add_option("-o,--output", train_out, "bundle to write")->required();
    train->add_option("--seed", train_cfg.seed);
    train->add_option("--ratio", train_cfg.train_ratio, "training share")->check(CLI::Range(0.0, 1.0));
    train->add_option("-k", train_cfg.k, "features kept by chi2")->check(CLI::PositiveNumber);
    train->add_option("--alpha", train_cfg.alpha, "Laplace smoothing")->check(CLI::PositiveNumber);
    train->add_flag("--json", train_json, "print metrics as JSON");

    // cv
    std::string cv_corpus;
    std::size_t cv_folds = 10;
    nlp::TrainConfig cv_cfg;
    auto* cv = app.add_subcommand("cv", "stratified K-fold cross-validation");
    cv->add_option("corpus_dir", cv_corpus)->required()->check(CLI::ExistingDirectory);
    cv->add_option("--folds", cv_folds)->check(CLI::Range(2, 1000));
    cv->add_option("--seed", cv_cfg.seed);
    cv->add_option("-k", cv_cfg.k)->check(CLI::PositiveNumber);
    cv->add_option("--alpha", cv_cfg.alpha)->check(CLI::PositiveNumber);

    // classify
    std::string classify_file_path, classify_model;
    std::size_t classify_bytes = nlp::kDefaultMaxScanBytes;
    auto* classify = app.add_subcommand("classify", "classify one file as ransom note or benign");
    classify->add_option("file", classify_file_path)->required();
    classify->add_option("-m,--model", classify_model)->required();
    classify->add_option("--max-scan-bytes", classify_bytes)->check(CLI::PositiveNumber);

    // replay
    std::string replay_trace;
    DaemonFlags replay_flags;
    auto* replay_cmd = app.add_subcommand("replay", "run the pipeline over a recorded trace and its fs/ sidecar");
    replay_cmd->add_option("trace", replay_trace, "events.trace or the directory holding it")->required();
    replay_flags.attach(*replay_cmd);

    // run
    bool live = false, gated = false;
    std::string live_input = "-";
    DaemonFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "consume kernel event records");
    run_cmd->add_flag("--live", live, "read fixed-size kernel records")->required();
    run_cmd->add_option("--input", live_input, "record stream (fifo or file); - for stdin");
    run_cmd->add_flag("--gated", gated, "creat-opens were already threshold-gated by the producer");
    run_flags.attach(*run_cmd);

    // gen-scenario
    std::string gen_kind, gen_out, gen_note = "standard";
    ScenarioParams gen_params;
    std::optional<std::size_t> gen_files;
    auto* gen = app.add_subcommand("gen-scenario", "write a synthetic trace with sidecar contents");
    gen->add_option("kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"note-first", "note-per-directory", "benign-build", "stealth-slow"}));
    gen->add_option("-o,--output", gen_out)->required();
    gen->add_option("--dirs", gen_params.dirs)->check(CLI::PositiveNumber);
    gen->add_option("--files-per-dir", gen_params.files_per_dir)->check(CLI::PositiveNumber);
    gen->add_option("--files", gen_files, "total files, spread over --dirs")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_params.seed);
    gen->add_option("--note", gen_note, "standard | ood")->check(CLI::IsMember({"standard", "ood"}));

    // hashset
    std::string hs_file, hs_blocklist;
    auto* hashset = app.add_subcommand("hashset", "blocklist utilities");
    hashset->require_subcommand(1);
    auto* hs_check = hashset->add_subcommand("check", "hash a file and look it up");
    hs_check->add_option("file", hs_file)->required();
    hs_check->add_option("-b,--blocklist", hs_blocklist)->required();

    if (argc <= 1) {
        err << app.help();
        return kExitUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (*train) {
            const auto corpus = nlp::load_corpus(train_corpus);
            const auto result = nlp::train_pipeline(corpus, train_cfg);
            save_bundle(result.bundle, train_out);
            if (train_json) out << nlp::metrics_json(result.metrics) << '\n';
            else out << nlp::metrics_table(result.metrics);
            err << "wrote " << train_out << " (" << result.bundle.tfidf.size() << " terms, "
                << result.bundle.selector.k << " selected)\n";
            return kExitClean;
        }
        if (*cv) {
            const auto corpus = nlp::load_corpus(cv_corpus);
            const auto r = nlp::cross_validate(corpus, cv_folds, cv_cfg);
            for (std::size_t f = 0; f < r.fold_scores.size(); ++f)
                out << "fold " << f + 1 << ": " << r.fold_scores[f] << '\n';
            out << "Average CV Score (K=" << cv_folds << "): " << r.mean << '\n';
            return kExitClean;
        }
        if (*classify) {
            const auto bundle = load_bundle(classify_model);
            const auto v = nlp::classify_file(bundle, classify_file_path, classify_bytes);
            if (v.kind == VerdictKind::Indeterminate && v.detail == "unreadable") {
                err << "error: cannot read " << classify_file_path << '\n';
                return kExitUsage;
            }
            out << describe(v) << '\n';
            return v.kind == VerdictKind::RansomNote ? kExitDetection : kExitClean;
        }
        if (*replay_cmd) {
            const auto config = replay_flags.build();
            const auto report = replay(replay_trace, config, stderr_sink(err));
            return finish_run(report, replay_flags.report, out, err);
        }
        if (*run_cmd) {
            const auto config = run_flags.build();
            int fd = STDIN_FILENO;
            if (live_input != "-") {
                fd = ::open(live_input.c_str(), O_RDONLY | O_CLOEXEC);
                if (fd < 0) throw UsageError("cannot open " + live_input);
            }
            install_interrupt_handler();
            DetectionDaemon daemon(config, host_resolver(), false);
            KernelRecordStreamSource source(fd, gated, &g_stop);
            const auto report = daemon.run(source, &g_stop, stderr_sink(err));
            if (fd != STDIN_FILENO) ::close(fd);
            return finish_run(report, run_flags.report, out, err);
        }
        if (*gen) {
            gen_params.kind = *parse_scenario_kind(gen_kind);
            gen_params.note = gen_note == "ood" ? NoteStyle::OutOfDistribution : NoteStyle::Standard;
            if (gen_files) gen_params.files_per_dir = (*gen_files + gen_params.dirs - 1) / gen_params.dirs;
            const auto s = generate_scenario(gen_params);
            write_scenario(s, gen_out);
            out << "wrote " << s.events.size() << " events and " << s.files.size() << " files to " << gen_out << '\n';
            return kExitClean;
        }
        if (*hs_check) {
            const auto bl = HashBlocklist::load(hs_blocklist);
            const auto digest = hash_file(hs_file);
            const bool listed = bl.contains(digest);
            out << (listed ? "MATCH " : "CLEAN ") << digest.hex() << '\n';
            return listed ? kExitDetection : kExitClean;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace rguard
