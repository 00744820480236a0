#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mcorr/ingest.hpp"
#include "mcorr/log.hpp"
#include "mcorr/pairing.hpp"
#include "mcorr/report.hpp"
#include "mcorr/scoring.hpp"
#include "mcorr/simulator.hpp"
#include "mcorr/time.hpp"
#include "mcorr/validate.hpp"

namespace fs = std::filesystem;
using namespace mcorr;

namespace {

// 0 success, 1 validation findings, 2 usage/input errors.
constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);  // \n only, byte-stable across platforms
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

struct AnalyzeArgs {
    std::string events_path, assessments_path, flats_path, out_dir;
    double min_coverage = 0.0;
    bool drop_multi_occupancy = false;
    std::string regression = "piecewise";
    bool serial = false;
};

int run_analyze(const AnalyzeArgs& args) {
    std::ifstream ein = open_input(args.events_path);
    auto events = parse_event_log(ein);
    if (events.empty()) throw std::runtime_error("no events in " + args.events_path);

    std::ifstream ain = open_input(args.assessments_path);
    auto assessments = parse_assessment_table(ain);
    std::ifstream fin = open_input(args.flats_path);
    auto flats = parse_flats_table(fin);

    ExclusionConfig config;
    config.min_participant_coverage = args.min_coverage;
    config.drop_multi_occupancy_intervals = args.drop_multi_occupancy;
    StudyDataset dataset = apply_exclusions(events, assessments, flats, config);
    for (const ExclusionEntry& entry : dataset.exclusion_log)
        log_info(entry.entity + ": excluded by " + entry.rule + " (" + entry.detail + ")");

    AnalysisOptions options;
    options.regression =
        args.regression == "global" ? RegressionMode::global : RegressionMode::piecewise;
    options.exec = args.serial ? Exec::serial : Exec::parallel;
    std::vector<ParticipantReport> reports = correlate_all(dataset, options);

    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "report_assessments.csv");
        write_assessment_report(out, reports);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "report_sppb_items.csv");
        write_items_report(out, reports);
    }
    {
        std::vector<AssessmentRecord> all_records;
        for (const auto& [id, records] : dataset.assessments)
            all_records.insert(all_records.end(), records.begin(), records.end());
        TugFidelity fidelity = tug_fidelity(all_records);
        auto out = open_output(fs::path(args.out_dir) / "tug_errata.csv");
        write_errata(out, fidelity.errata);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "summary.txt");
        write_human_summary(out, reports);
    }
    return kExitOk;
}

struct SimulateArgs {
    std::uint64_t seed = 0;
    int days = 60;
    int sensors = 1;
    double base_rate = 45.0;
    double trend = 0.0;
    int interval = 31;
    int noise = 0;
    double coupling = 1.0;
    int flats = 1;
    std::string start_date = "2014-07-01";
    std::string out_dir;
};

int run_simulate(const SimulateArgs& args) {
    SimConfig config;
    config.seed = args.seed;
    config.study_days = args.days;
    config.n_sensors = args.sensors;
    config.base_rate = args.base_rate;
    config.trend = args.trend;
    config.assessment_interval_days = args.interval;
    config.score_noise = args.noise;
    config.coupling = args.coupling;
    config.start_date = parse_date(args.start_date);
    config.validate();

    SimulatedStudy study = simulate_study(config, args.flats);
    fs::create_directories(args.out_dir);
    {
        auto out = open_output(fs::path(args.out_dir) / "events.csv");
        write_event_log(out, study.events);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "assessments.csv");
        write_assessment_table(out, study.assessments);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "flats.csv");
        write_flats_table(out, study.flats);
    }
    {
        auto out = open_output(fs::path(args.out_dir) / "ground_truth.csv");
        write_ground_truth(out, study);
    }
    return kExitOk;
}

int run_validate(const std::string& assessments_path) {
    std::ifstream in = open_input(assessments_path);
    std::vector<AssessmentRecord> records = parse_assessment_table(in);

    int violations = 0;
    for (const AssessmentRecord& rec : records) {
        for (const std::string& v : validate_record(rec)) {
            std::cout << rec.participant_id << ' ' << format_date(rec.date) << ": " << v << '\n';
            ++violations;
        }
    }
    TugFidelity fidelity = tug_fidelity(records);
    if (!fidelity.errata.empty()) {
        std::cout << "tug errata (" << fidelity.errata.size() << " of " << fidelity.pairs_available
                  << " pairs):\n";
        for (const TugErratum& e : fidelity.errata)
            std::cout << "  " << e.participant_id << ' ' << format_date(e.date) << ": "
                      << format_double(e.tug_seconds) << " s printed as " << e.points_printed
                      << ", scores as " << e.points_computed << '\n';
    }
    if (violations > 0) {
        std::cout << violations << " violation(s)\n";
        return kExitFindings;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ambient activity vs mobility assessment correlation pipeline"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze = app.add_subcommand("analyze", "correlate daily activity with assessments");
    analyze->add_option("--events", aa.events_path, "event log CSV")->required();
    analyze->add_option("--assessments", aa.assessments_path, "assessment table CSV")->required();
    analyze->add_option("--flats", aa.flats_path, "flat/sensor configuration CSV")->required();
    analyze->add_option("--out", aa.out_dir, "output directory")->required();
    analyze->add_option("--min-coverage", aa.min_coverage,
                        "minimum fraction of days with activity data");
    analyze->add_flag("--drop-multi-occupancy", aa.drop_multi_occupancy,
                      "drop motion events inside visitor intervals");
    analyze->add_option("--regression", aa.regression, "activity fit granularity")
        ->check(CLI::IsMember({"piecewise", "global"}));
    analyze->add_flag("--serial", aa.serial, "disable parallel participant processing");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand("simulate", "generate a synthetic study");
    simulate->add_option("--seed", sa.seed, "RNG seed");
    simulate->add_option("--days", sa.days, "study length in days");
    simulate->add_option("--sensors", sa.sensors, "motion sensors per flat");
    simulate->add_option("--base-rate", sa.base_rate, "events per sensor-hour at day 0");
    simulate->add_option("--trend", sa.trend, "relative rate change per 30 days");
    simulate->add_option("--interval", sa.interval, "days between assessments");
    simulate->add_option("--noise", sa.noise, "score noise amplitude in points");
    simulate->add_option("--coupling", sa.coupling, "intensity-to-score link slope");
    simulate->add_option("--flats", sa.flats, "number of flats");
    simulate->add_option("--start-date", sa.start_date, "first study day (YYYY-MM-DD)");
    simulate->add_option("--out", sa.out_dir, "output directory")->required();

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check an assessment table");
    validate->add_option("--assessments", validate_path, "assessment table CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;  // --help exits 0
    }

    try {
        if (analyze->parsed()) return run_analyze(aa);
        if (simulate->parsed()) return run_simulate(sa);
        return run_validate(validate_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitError;
    }
}
