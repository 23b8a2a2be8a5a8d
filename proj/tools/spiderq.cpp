// Command-line front end: computes colored HOMFLY-PT / gl(m|n) / Alexander
// link invariants from braid words, slice lists or PD codes, with optional
// integer specializations and matrix-oracle cross-checks.

#include "CLI11.hpp"

#include "spiderq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace spiderq;

namespace {

long long parse_at(const std::string& s) {
    std::string v = s;
    if (v.rfind("d=", 0) == 0) v = v.substr(2);
    return std::stoll(v);
}

std::pair<int, int> parse_check(const std::string& s) {
    // accepted: "m=2,n=1" or "2,1"
    std::string v = s;
    size_t comma = v.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--check expects m=<int>,n=<int>");
    std::string a = v.substr(0, comma), b = v.substr(comma + 1);
    if (a.rfind("m=", 0) == 0) a = a.substr(2);
    if (b.rfind("n=", 0) == 0) b = b.substr(2);
    return {std::stoi(a), std::stoi(b)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spiderq: colored HOMFLY-PT, gl(m|n) and Alexander link invariants"};

    std::vector<std::string> braid_tokens;
    std::string input_file, pd_inline;
    bool close_flag = false, generic = false, timing = false, reduced = false;
    std::string invariant = "framed";
    int component = 0;
    std::vector<std::string> at_args, check_args;
    std::string format = "text";
    int threads = 0;

    app.add_option("braid", braid_tokens,
                   "braid input, e.g.: braid n=2 w=[1,1,1] colors=[1,1] [close=trace]");
    app.add_option("--input", input_file, "diagram JSON file (slice form)");
    app.add_option("--pd", pd_inline, "inline PD JSON: {\"pd\":[[..]],\"signs\":[..]}");
    app.add_flag("--close", close_flag, "close the braid by the trace closure");
    app.add_option("--invariant", invariant, "framed | normalized | reduced")
        ->check(CLI::IsMember({"framed", "normalized", "reduced"}));
    app.add_flag("--reduced", reduced, "shorthand for --invariant reduced");
    app.add_option("--component", component, "component to cut for the reduced invariant");
    app.add_flag("--generic", generic, "report the generic two-variable invariant (default)");
    app.add_option("--at", at_args, "specialize at beta = d (e.g. --at d=2)")
        ->take_all();
    app.add_option("--check", check_args, "cross-check against the oracle (e.g. --check m=2,n=1)")
        ->take_all();
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", timing, "include timing in the JSON report");
    app.add_option("--threads", threads, "internal parallelism cap (default: SPIDERQ_THREADS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    JobSpec job;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "cannot open " << input_file << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        job.kind = JobSpec::Input::DiagramJson;
        job.input = ss.str();
    } else if (!pd_inline.empty()) {
        job.kind = JobSpec::Input::PdJson;
        job.input = pd_inline;
    } else if (!braid_tokens.empty()) {
        std::ostringstream ss;
        for (size_t i = 0; i < braid_tokens.size(); ++i)
            ss << (i ? " " : "") << braid_tokens[i];
        job.kind = JobSpec::Input::BraidText;
        job.input = ss.str();
    } else {
        std::cerr << "no input; see --help\n";
        return 2;
    }
    job.close = close_flag;
    if (reduced) invariant = "reduced";
    job.invariant = invariant == "framed"
                        ? JobSpec::Invariant::Framed
                        : invariant == "normalized" ? JobSpec::Invariant::Normalized
                                                    : JobSpec::Invariant::Reduced;
    job.component = component;
    try {
        for (const auto& s : at_args) job.at.push_back(parse_at(s));
        for (const auto& s : check_args) job.checks.push_back(parse_check(s));
    } catch (const std::exception& e) {
        std::cerr << "bad flag value: " << e.what() << "\n";
        return 2;
    }
    job.format = format == "json" ? JobSpec::Format::Json : JobSpec::Format::Text;
    job.timing = timing;
    if (threads <= 0) {
        if (const char* env = std::getenv("SPIDERQ_THREADS")) threads = std::atoi(env);
    }
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    job.threads = std::max(1, threads);

    Report report = run(job);
    if (report.exit_code == 2 || report.exit_code == 3) {
        std::cerr << report.out;
    } else {
        std::cout << report.out;
    }
    return report.exit_code;
}
