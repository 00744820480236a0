#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "mcorr/report.hpp"

using namespace mcorr;
namespace fs = std::filesystem;

namespace {

ParticipantReport sample_report() {
    ParticipantReport rep;
    rep.participant_id = "3";
    CorrelationResult good;
    good.rho = -0.5612;
    good.p_value = 0.00042;
    good.n_pairs = 120;
    good.effect = Effect::large;
    good.significant = true;
    rep.measures[Assessment::sppb] = good;
    rep.measures[Assessment::tug] = CorrelationResult::not_computable("constant series", 120);
    return rep;
}

// CLI plumbing below shells out to the real binary.
const char* cli_path() { return MCORR_CLI_PATH; }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("mcorr_test_") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("report rows carry rho, p, effect and a reason for gaps") {
        std::vector<ParticipantReport> reports{sample_report()};
        std::ostringstream out;
        write_assessment_report(out, reports);
        std::istringstream lines(out.str());
        std::string header, row1, row2;
        std::getline(lines, header);
        std::getline(lines, row1);
        std::getline(lines, row2);
        CHECK(header == "participant_id,assessment,rho,p,effect,significant,n_pairs,reason");
        CHECK(row1 == "3,SPPB,-0.5612,0.00042,large,true,120,");
        CHECK(row2 == "3,TUG,N/A,N/A,N/A,false,120,constant series");
    }

    TEST_CASE("errata file lists the disagreeing rows verbatim") {
        std::vector<TugErratum> errata{{"6", parse_date("2014-10-02"), 19.0, 3, 2}};
        std::ostringstream out;
        write_errata(out, errata);
        CHECK(out.str() ==
              "participant_id,date,tug_seconds,points_printed,points_computed\n"
              "6,2014-10-02,19,3,2\n");
    }

    TEST_CASE("human summary marks at least moderate effects") {
        std::vector<ParticipantReport> reports{sample_report()};
        std::ostringstream out;
        write_human_summary(out, reports);
        const std::string text = out.str();
        CHECK(text.find("-0.561*") != std::string::npos);
        CHECK(text.find("constant series") != std::string::npos);
    }

    TEST_CASE("simulate then analyze produces reports for every flat") {
        TempDir dir("e2e");
        const std::string sim = dir / "sim";
        REQUIRE(run_cli("simulate --seed 4 --days 93 --sensors 2 --base-rate 40 --trend -0.4 "
                        "--flats 2 --out " + sim) == 0);
        const std::string out = dir / "out";
        REQUIRE(run_cli("analyze --events " + sim + "/events.csv --assessments " + sim +
                        "/assessments.csv --flats " + sim + "/flats.csv --out " + out) == 0);

        const std::string report = slurp(fs::path(out) / "report_assessments.csv");
        // header + 2 participants x 4 measures
        CHECK(std::count(report.begin(), report.end(), '\n') == 9);
        const std::string items = slurp(fs::path(out) / "report_sppb_items.csv");
        CHECK(std::count(items.begin(), items.end(), '\n') == 7);
        CHECK(fs::exists(fs::path(out) / "summary.txt"));
        CHECK(fs::exists(fs::path(out) / "tug_errata.csv"));
    }

    TEST_CASE("identical seeds and inputs give byte-identical outputs") {
        TempDir dir("determinism");
        const std::string a = dir / "a";
        const std::string b = dir / "b";
        const std::string flags = "simulate --seed 99 --days 62 --sensors 1 --base-rate 30 "
                                  "--trend -0.2 --noise 2 --out ";
        REQUIRE(run_cli(flags + a) == 0);
        REQUIRE(run_cli(flags + b) == 0);
        for (const char* name : {"events.csv", "assessments.csv", "flats.csv", "ground_truth.csv"})
            CHECK(slurp(fs::path(a) / name) == slurp(fs::path(b) / name));

        const std::string oa = dir / "oa";
        const std::string ob = dir / "ob";
        const std::string analyze = "analyze --events " + a + "/events.csv --assessments " + a +
                                    "/assessments.csv --flats " + a + "/flats.csv --out ";
        REQUIRE(run_cli(analyze + oa) == 0);
        REQUIRE(run_cli(analyze + ob) == 0);
        for (const char* name : {"report_assessments.csv", "report_sppb_items.csv", "summary.txt"})
            CHECK(slurp(fs::path(oa) / name) == slurp(fs::path(ob) / name));
    }

    TEST_CASE("usage and input errors exit with code 2") {
        TempDir dir("errors");
        CHECK(run_cli("analyze --events /nonexistent.csv --assessments /nonexistent.csv "
                      "--flats /nonexistent.csv --out " + (dir / "x")) == 2);
        CHECK(run_cli("simulate --base-rate -1 --out " + (dir / "y")) == 2);
        CHECK(run_cli("nonsense") == 2);

        // empty event file: structurally readable, semantically useless
        const std::string events = dir / "events.csv";
        {
            std::ofstream out(events);
            out << "flat_id,sensor_id,timestamp,kind\n";
        }
        const std::string assessments = dir / "assessments.csv";
        {
            std::ofstream out(assessments);
            out << "participant_id,date,sppb_total,sppb_balance,sppb_gait4m,sppb_5crt,"
                   "tinetti13,tinetti28,tug_seconds,tug_points\n";
        }
        const std::string flats = dir / "flats.csv";
        {
            std::ofstream out(flats);
            out << "flat_id,sensor_id,room,timezone_offset_min\n1,pir,kitchen,0\n";
        }
        CHECK(run_cli("analyze --events " + events + " --assessments " + assessments +
                      " --flats " + flats + " --out " + (dir / "z")) == 2);
    }

    TEST_CASE("validate reports violations with exit 1 and clean files with 0") {
        TempDir dir("validate");
        const std::string bad = dir / "bad.csv";
        {
            std::ofstream out(bad);
            out << "participant_id,date,sppb_total,sppb_balance,sppb_gait4m,sppb_5crt,"
                   "tinetti13,tinetti28,tug_seconds,tug_points\n"
                << "7,2014-07-01,5,N/A,N/A,N/A,11,40,12.5,2\n";
        }
        CHECK(run_cli("validate --assessments " + bad) == 1);

        const std::string good = dir / "good.csv";
        {
            std::ofstream out(good);
            out << "participant_id,date,sppb_total,sppb_balance,sppb_gait4m,sppb_5crt,"
                   "tinetti13,tinetti28,tug_seconds,tug_points\n"
                << "7,2014-07-01,5,N/A,N/A,N/A,11,24,12.5,2\n";
        }
        CHECK(run_cli("validate --assessments " + good) == 0);
        CHECK(run_cli("validate --assessments " + (dir / "missing.csv")) == 2);
    }

    TEST_CASE("bundled score tables validate cleanly with the known errata") {
        const std::string fixture = std::string(MCORR_DATA_DIR) + "/assessment_tables.csv";
        CHECK(run_cli("validate --assessments " + fixture) == 0);
    }
}
