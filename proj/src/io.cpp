#include "chirpaf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace chirpaf {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path, std::ios_base::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

}  // namespace

void write_field_csv(const ComplexField& field, const std::string& path) {
    auto out = open_out(path);
    const bool polar = field.axes.kind == FieldAxes::Kind::polar;
    out << (polar ? "R,theta,re,im,abs,abs_sqrt\n" : "x,y,re,im,abs,abs_sqrt\n");
    for (int i0 = 0; i0 < field.axes.axis0.count; ++i0) {
        for (int i1 = 0; i1 < field.axes.axis1.count; ++i1) {
            const auto v = field.at(i0, i1);
            const double a = std::abs(v);
            out << format_full(field.axes.coord0(i0)) << ',' << format_full(field.axes.coord1(i1))
                << ',' << format_full(v.real()) << ',' << format_full(v.imag()) << ','
                << format_full(a) << ',' << format_full(std::sqrt(a)) << '\n';
        }
    }
}

void write_field_f32(const ComplexField& field, const std::string& path) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    for (const auto& v : field.values) {
        const float a = static_cast<float>(std::abs(v));
        out.write(reinterpret_cast<const char*>(&a), sizeof a);
    }
}

void write_field_meta(const ComplexField& field, const std::string& path,
                      const std::string& data_note) {
    nlohmann::json j;
    j["scenario"] = nlohmann::json::parse(scenario_to_json(field.scenario));
    j["axes"]["kind"] = field.axes.kind == FieldAxes::Kind::polar ? "polar" : "cartesian";
    j["axes"]["axis0"] = {{"lo", field.axes.axis0.lo},
                          {"hi", field.axes.axis0.hi},
                          {"count", field.axes.axis0.count}};
    j["axes"]["axis1"] = {{"lo", field.axes.axis1.lo},
                          {"hi", field.axes.axis1.hi},
                          {"count", field.axes.axis1.count}};
    j["rows"] = field.axes.axis0.count;
    j["cols"] = field.axes.axis1.count;
    j["nan_count"] = field.nan_count;
    j["f32_layout"] = "row-major |A|, little-endian float32";
    if (!data_note.empty()) j["note"] = data_note;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_spectrum_csv(const SpectrumGrid& grid, const std::string& path) {
    auto out = open_out(path);
    out << "k_tau,re,im,abs\n";
    for (size_t i = 0; i < grid.k_tau.size(); ++i) {
        const auto v = grid.values[i];
        out << format_full(grid.k_tau[i]) << ',' << format_full(v.real()) << ','
            << format_full(v.imag()) << ',' << format_full(std::abs(v)) << '\n';
    }
}

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["arguments"] = arguments;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(scenario_hash));
    j["scenario_hash"] = hash;
    j["seed"] = seed;
    j["threads"] = threads;
    j["outputs"] = outputs;
    j["wall_time_s"] = wall_time_s;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace chirpaf
