#include "spiderq/cli.hpp"

#include "spiderq/howe.hpp"
#include "spiderq/spider.hpp"
#include "spiderq/tangle.hpp"

#include "json.hpp"

#include <chrono>
#include <sstream>

namespace spiderq {

namespace {

TangleDiagram parse_input(const JobSpec& job) {
    switch (job.kind) {
    case JobSpec::Input::BraidText: {
        TangleDiagram t = parse_tangle_text(job.input);
        if (job.close && !t.closed()) t = spiderq::close(t);
        return t;
    }
    case JobSpec::Input::DiagramJson:
        return parse_diagram_json(job.input);
    case JobSpec::Input::PdJson: {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(job.input);
        } catch (const std::exception& e) {
            throw parse_error(std::string("bad PD JSON: ") + e.what());
        }
        try {
            std::vector<std::array<int, 4>> pd;
            for (const auto& x : j.at("pd"))
                pd.push_back({x.at(0), x.at(1), x.at(2), x.at(3)});
            std::vector<int> signs = j.at("signs").get<std::vector<int>>();
            std::vector<int> colors;
            if (j.contains("colors")) colors = j["colors"].get<std::vector<int>>();
            return parse_pd(pd, signs, colors);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            throw parse_error(std::string("bad PD JSON: ") + e.what());
        }
    }
    }
    throw parse_error("unknown input kind");
}

std::string mode_name(JobSpec::Invariant inv) {
    switch (inv) {
    case JobSpec::Invariant::Framed: return "framed";
    case JobSpec::Invariant::Normalized: return "normalized";
    case JobSpec::Invariant::Reduced: return "reduced";
    }
    return "?";
}

} // namespace

Report run(const JobSpec& job) {
    auto t0 = std::chrono::steady_clock::now();
    TangleDiagram diagram;
    try {
        diagram = parse_input(job);
    } catch (const parse_error& e) {
        return {std::string("parse error: ") + e.what() + "\n", 2};
    }

    Scalar value;
    std::vector<std::pair<long long, Scalar>> specialized;
    struct CheckResult {
        int m, n;
        Scalar oracle;
        bool match;
    };
    std::vector<CheckResult> checks;
    try {
        SkeinMemo memo;
        switch (job.invariant) {
        case JobSpec::Invariant::Framed:
            value = colored_eval(diagram, FramingMode::Framed, &memo, job.threads);
            break;
        case JobSpec::Invariant::Normalized:
            value = colored_eval(diagram, FramingMode::Normalized, &memo, job.threads);
            break;
        case JobSpec::Invariant::Reduced:
            if (job.component < 0 || job.component >= diagram.n_components)
                throw eval_error("reduced: component out of range");
            value = reduced_eval(diagram, job.component, &memo, job.threads);
            break;
        }
        for (long long d : job.at) specialized.push_back({d, value.specialize(d)});
        for (auto [m, n] : job.checks) {
            HoweCtx ctx(m, n);
            Scalar oracle;
            if (job.invariant == JobSpec::Invariant::Reduced) {
                oracle = rt_reduced(ctx, cut_strand(diagram, job.component));
            } else {
                oracle = rt_eval(ctx, diagram);
                if (job.invariant == JobSpec::Invariant::Normalized)
                    for (int c = 0; c < diagram.n_components; ++c)
                        oracle *= twist(diagram.comp_color[c])
                                      .specialize(ctx.d)
                                      .pow(-diagram.comp_writhe[c]);
            }
            bool ok = value.specialize(ctx.d) == oracle;
            checks.push_back({m, n, oracle, ok});
        }
    } catch (const eval_error& e) {
        return {std::string("evaluation error: ") + e.what() + "\n", 3};
    } catch (const internal_error& e) {
        return {std::string("internal error: ") + e.what() + "\n", 3};
    }
    auto t1 = std::chrono::steady_clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    bool all_ok = true;
    for (const auto& c : checks) all_ok = all_ok && c.match;
    int code = all_ok ? 0 : 4;

    std::ostringstream os;
    if (job.format == JobSpec::Format::Text) {
        os << "components: " << diagram.n_components << "\n";
        os << "colors:";
        for (int c : diagram.comp_color) os << " " << c;
        os << "\nwrithes:";
        for (long long w : diagram.comp_writhe) os << " " << w;
        os << "\ninvariant (" << mode_name(job.invariant) << "): " << value.to_string() << "\n";
        for (const auto& [d, v] : specialized)
            os << "at d=" << d << ": " << v.to_string() << "\n";
        for (const auto& c : checks)
            os << "check (m=" << c.m << ",n=" << c.n << "): "
               << (c.match ? "match" : "MISMATCH, oracle = " + c.oracle.to_string()) << "\n";
    } else {
        nlohmann::json j;
        j["invariant"] = mode_name(job.invariant);
        j["components"] = diagram.n_components;
        j["colors"] = diagram.comp_color;
        j["writhes"] = diagram.comp_writhe;
        j["scalar"] = nlohmann::json::parse(value.to_json());
        j["scalar_text"] = value.to_string();
        j["specializations"] = nlohmann::json::array();
        for (const auto& [d, v] : specialized)
            j["specializations"].push_back(
                {{"d", d}, {"scalar", nlohmann::json::parse(v.to_json())}});
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"m", c.m},
                                   {"n", c.n},
                                   {"match", c.match},
                                   {"oracle", nlohmann::json::parse(c.oracle.to_json())}});
        if (job.timing) j["timing_ms"] = ms;
        os << j.dump(2) << "\n";
    }
    return {os.str(), code};
}

} // namespace spiderq
