#include "bicubic/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bicubic/geometry.hpp"
#include "bicubic/points.hpp"

namespace bicubic {

namespace {

Json triple_json(const CoeffTriple& r) {
    return Json::array().push(Json::integer(r.r1)).push(Json::integer(r.r2)).push(Json::integer(r.r3));
}

Json box_json(const IntBox& b) {
    return Json::object()
        .set("X", Json::array().push(Json::integer(b.x1)).push(Json::integer(b.x2)).push(Json::integer(b.x3)))
        .set("Y", Json::array().push(Json::integer(b.y1)).push(Json::integer(b.y2)).push(Json::integer(b.y3)));
}

Json config_json(const RunConfig& c) {
    Json j = Json::object();
    j.set("subcommand", Json::str(c.subcommand));
    if (c.subcommand == "count-points") {
        j.set("height_bound", Json::integer(c.height_bound)).set("method", Json::str(c.method));
        j.set("with_points", Json::boolean(c.with_points));
    } else if (c.subcommand == "boxcount") {
        j.set("r", triple_json(c.r)).set("box", box_json(c.box));
        j.set("mellin_check", Json::boolean(c.mellin_check));
    } else if (c.subcommand == "constant") {
        j.set("prime_cutoff", Json::integer(c.prime_cutoff)).set("full", Json::boolean(c.full_constant));
    } else if (c.subcommand == "verify") {
        j.set("suite", Json::str(c.suite));
    } else if (c.subcommand == "trend") {
        Json bs = Json::array();
        for (i64 b : c.height_bounds) bs.push(Json::integer(b));
        j.set("height_bounds", std::move(bs));
    }
    j.set("output_format", Json::str(c.output_format));
    j.set("seed", Json::integer(static_cast<i64>(c.seed)));
    return j;
}

Json count_points_results(const RunConfig& c) {
    if (c.height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
    Json res = Json::object();
    res.set("height_bound", Json::integer(c.height_bound));
    std::optional<EnumerationResult> direct, torsor;
    if (c.method == "direct" || c.method == "both") direct = enumerate_direct(c.height_bound);
    if (c.method == "torsor" || c.method == "both") torsor = enumerate_torsor(c.height_bound);
    if (!direct && !torsor) throw std::invalid_argument("method must be direct, torsor or both");
    if (direct) res.set("count_direct", Json::integer(direct->count));
    if (torsor) {
        res.set("count_torsor", Json::integer(torsor->count));
        res.set("raw_torsor_tuples", Json::integer(torsor->raw_tuple_count));
    }
    if (direct && torsor) res.set("methods_agree", Json::boolean(direct->count == torsor->count));
    if (c.with_points) {
        const auto& src = direct ? *direct : *torsor;
        if (!src.points) throw std::invalid_argument("point list not retained above the cap");
        Json pts = Json::array();
        for (const auto& p : *src.points) {
            Json row = Json::array();
            for (i64 v : p.x) row.push(Json::integer(v));
            for (i64 v : p.y) row.push(Json::integer(v));
            row.push(Json::integer(height(p)));
            pts.push(std::move(row));
        }
        res.set("points", std::move(pts));
    }
    return res;
}

Json box_report_json(const BoxCountReport& rep) {
    return Json::object()
        .set("r", triple_json(rep.r))
        .set("box", box_json(rep.box))
        .set("exact_count", Json::integer(rep.exact_count))
        .set("main_term", Json::num(rep.main_term))
        .set("main_term_tail", Json::num(rep.main_term_tail))
        .set("abs_error", Json::num(rep.abs_error))
        .set("bound_shape", Json::num(rep.bound_shape))
        .set("ratio", Json::num(rep.ratio));
}

Json boxcount_results(const RunConfig& c) {
    auto rep = box_count_report(c.r, c.box, c.quad);
    Json j = box_report_json(rep);
    if (c.mellin_check) {
        BoxSpec bs{static_cast<double>(c.box.x1), static_cast<double>(c.box.x2),
                   static_cast<double>(c.box.x3), static_cast<double>(c.box.y1),
                   static_cast<double>(c.box.y2), static_cast<double>(c.box.y3)};
        auto mc = mellin_crosscheck(c.r, bs, c.quad);
        j.set("mellin_check", Json::object()
                                  .set("direct", Json::num(mc.direct))
                                  .set("contour", Json::num(mc.contour))
                                  .set("rel_gap", Json::num(mc.rel_gap))
                                  .set("contour_tail", Json::num(mc.contour_tail)));
    }
    return j;
}

Json constant_results(const RunConfig& c) {
    if (!c.full_constant) {
        auto cc = constant_c(c.prime_cutoff);
        Json factors = Json::array();
        for (i64 p : prime_table().primes) {
            if (p > c.prime_cutoff) break;
            factors.push(Json::object()
                             .set("p", Json::integer(p))
                             .set("value", Json::rational(constant_c_factor(p))));
        }
        return Json::object()
            .set("C", Json::num(cc.value))
            .set("tail_bound", Json::num(cc.tail_bound))
            .set("prime_cutoff", Json::integer(c.prime_cutoff))
            .set("factors", std::move(factors));
    }
    auto b = peyre_assembly(c.prime_cutoff, c.quad);
    Json mu_p = Json::array();
    for (const auto& [p, v] : b.mu_p)
        mu_p.push(Json::object().set("p", Json::integer(p)).set("value", Json::rational(v)));
    return Json::object()
        .set("alpha", Json::rational(b.alpha))
        .set("mu_inf_closed", Json::num(b.mu_inf_closed))
        .set("mu_inf_quadrature", Json::num(b.mu_inf_quadrature))
        .set("mu_p", std::move(mu_p))
        .set("C", Json::num(b.c_value))
        .set("C_tail_bound", Json::num(b.c_tail))
        .set("tau_h", Json::num(b.tau_h))
        .set("theta_h", Json::num(b.theta_h))
        .set("theorem1_coeff", Json::num(b.theorem1_coeff))
        .set("reconciliation_delta", Json::num(b.reconciliation_delta))
        .set("shared_tail_bound", Json::num(b.shared_tail_bound))
        .set("prime_cutoff", Json::integer(b.prime_cutoff));
}

Json trend_results(const RunConfig& c, std::string* csv) {
    if (c.height_bounds.empty()) throw std::invalid_argument("trend requires height bounds");
    Json rows = Json::array();
    std::ostringstream os;
    os << "B,N,ratio\n";
    for (i64 b : c.height_bounds) {
        if (b < 1) throw std::invalid_argument("height bound must be >= 1");
        auto res = enumerate_torsor(b, EnumerationOptions{.retain_cap = 0});
        double lg = std::log(static_cast<double>(b));
        double ratio = b >= 2 ? static_cast<double>(res.count) /
                                    (static_cast<double>(b) * lg * lg * lg * lg)
                              : 0.0;
        rows.push(Json::object()
                      .set("B", Json::integer(b))
                      .set("N", Json::integer(res.count))
                      .set("ratio", Json::num(ratio)));
        os << b << ',' << res.count << ',' << format_double(ratio) << '\n';
    }
    if (csv) *csv = os.str();
    return Json::object().set("rows", std::move(rows));
}

Json verify_results(const RunConfig& c, bool* all_passed) {
    std::vector<std::string> names;
    if (c.suite == "all")
        names = {"points", "expsums", "localdata", "oscint", "geometry"};
    else
        names = {c.suite};
    Json suites = Json::array();
    bool ok = true;
    for (const auto& n : names) {
        auto res = verify_suite(n, c.seed);
        Json checks = Json::array();
        for (const auto& ch : res.checks) {
            Json cj = Json::object().set("name", Json::str(ch.name)).set("pass", Json::boolean(ch.passed));
            if (ch.detail.is_object()) cj.set("detail", ch.detail);
            checks.push(std::move(cj));
        }
        Json sj = Json::object().set("suite", Json::str(res.suite)).set("pass", Json::boolean(res.passed()));
        if (res.extra.is_object()) sj.set("report", res.extra);
        sj.set("checks", std::move(checks));
        suites.push(std::move(sj));
        ok = ok && res.passed();
    }
    *all_passed = ok;
    return Json::object().set("pass", Json::boolean(ok)).set("suites", std::move(suites));
}

}  // namespace

ReportDocument run(const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.tool_version = tool_version;
    doc.config_echo = config_json(config);

    if (config.subcommand == "count-points") {
        doc.results = count_points_results(config);
        if (config.output_format == "csv") {
            auto res = config.method == "torsor" ? enumerate_torsor(config.height_bound)
                                                 : enumerate_direct(config.height_bound);
            if (!res.points) throw std::invalid_argument("point list not retained above the cap");
            doc.csv = point_list_csv(*res.points);
        }
    } else if (config.subcommand == "boxcount") {
        doc.results = boxcount_results(config);
    } else if (config.subcommand == "constant") {
        doc.results = constant_results(config);
    } else if (config.subcommand == "verify") {
        doc.results = verify_results(config, &doc.all_passed);
    } else if (config.subcommand == "trend") {
        doc.results = trend_results(config, &doc.csv);
    } else {
        throw std::invalid_argument("unknown subcommand: " + config.subcommand);
    }

    doc.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return doc;
}

std::string serialize(const RunConfig& config, const ReportDocument& doc) {
    if (config.output_format == "csv") {
        if (doc.csv.empty()) throw std::invalid_argument("csv output available for point lists and trend only");
        return doc.csv;
    }
    Json root = Json::object();
    root.set("tool_version", Json::str(doc.tool_version));
    root.set("config", doc.config_echo);
    root.set("results", doc.results);
    return root.dump() + "\n";
}

std::vector<std::string> config_file_args(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::vector<std::string> args;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line not key=value: " + line);
        args.push_back("--" + trim(line.substr(0, eq)));
        std::string val = trim(line.substr(eq + 1));
        if (!val.empty()) args.push_back(val);
    }
    return args;
}

}  // namespace bicubic
