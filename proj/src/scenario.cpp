#include "chirpaf/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace chirpaf {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SamplingGrid Scenario::grid(NodePlacement placement) const {
    if (!antenna_count)
        throw std::runtime_error("scenario has no antenna count N; pass --discrete or add N");
    return SamplingGrid::over(curve, *antenna_count, placement);
}

Scenario parse_scenario(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("scenario: invalid JSON: ") + e.what());
    }

    const double lambda_s = j.value("lambda_s", 1.0);
    if (!(lambda_s > 0.0)) throw std::runtime_error("scenario: lambda_s must be positive");

    if (!j.contains("curve")) throw std::runtime_error("scenario: missing \"curve\"");
    const auto& jc = j.at("curve");
    const std::string kind = jc.value("kind", "");
    Scenario s;
    if (kind == "circular") {
        if (!jc.contains("R_ca") || !jc.contains("psi"))
            throw std::runtime_error("scenario: circular curve needs R_ca and psi");
        s.curve = ArrayCurve::circular_arc(jc.at("R_ca").get<double>() / lambda_s,
                                           jc.at("psi").get<double>());
    } else if (kind == "ula") {
        if (!jc.contains("L")) throw std::runtime_error("scenario: ula curve needs L");
        s.curve = ArrayCurve::line_segment(jc.at("L").get<double>() / lambda_s);
    } else {
        throw std::runtime_error("scenario: curve kind must be \"circular\" or \"ula\"");
    }

    s.k = Wavenumber{j.value("k_s", 2.0 * std::numbers::pi)};
    if (!(s.k.k > 0.0)) throw std::runtime_error("scenario: k_s must be positive");

    if (!j.contains("source")) throw std::runtime_error("scenario: missing \"source\"");
    const auto& js = j.at("source");
    if (js.is_array()) {
        if (js.size() != 2) throw std::runtime_error("scenario: source array must be [x, y]");
        s.source = Position{js.at(0).get<double>() / lambda_s, js.at(1).get<double>() / lambda_s};
    } else if (js.is_object()) {
        if (!js.contains("R") || !js.contains("theta"))
            throw std::runtime_error("scenario: polar source needs R and theta");
        s.source = to_cartesian(
            PolarPosition{js.at("R").get<double>() / lambda_s, js.at("theta").get<double>()});
    } else {
        throw std::runtime_error("scenario: source must be [x,y] or {R, theta}");
    }

    if (j.contains("N")) {
        const int n = j.at("N").get<int>();
        if (n < 1) throw std::runtime_error("scenario: N must be >= 1");
        s.antenna_count = n;
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scenario: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
    std::ostringstream out;
    out << "{\"curve\":";
    if (s.curve.kind() == ArrayCurve::Kind::circular_arc) {
        out << "{\"kind\":\"circular\",\"R_ca\":" << fmt17(s.curve.radius())
            << ",\"psi\":" << fmt17(s.curve.half_angle()) << "}";
    } else {
        out << "{\"kind\":\"ula\",\"L\":" << fmt17(s.curve.length()) << "}";
    }
    out << ",\"k_s\":" << fmt17(s.k.k);
    out << ",\"source\":[" << fmt17(s.source.x) << "," << fmt17(s.source.y) << "]";
    if (s.antenna_count) out << ",\"N\":" << *s.antenna_count;
    out << "}";
    return out.str();
}

std::uint64_t scenario_hash(const Scenario& s) {
    const std::string text = scenario_to_json(s);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace chirpaf
