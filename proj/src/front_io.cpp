#include "netimmune/front_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace netimmune {

namespace {

constexpr const char* kCsvHeader = "cost,delta_lambda,method,nodes";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

void write_front_csv(std::ostream& out, const std::vector<ObjectivePoint>& points) {
    out << kCsvHeader << '\n';
    for (const auto& p : points)
        out << p.cost << ',' << format_double(p.delta_lambda) << ',' << p.method << ','
            << join(p.nodes, ';') << '\n';
}

void write_front_csv_file(const std::string& path, const std::vector<ObjectivePoint>& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_front_csv(out, points);
}

std::vector<ObjectivePoint> read_front_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("front CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw std::invalid_argument("front CSV: schema mismatch, expected header '" +
                                    std::string(kCsvHeader) + "', got '" + line + "'");
    std::vector<ObjectivePoint> points;
    std::int64_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 4)
            throw std::invalid_argument("front CSV line " + std::to_string(lineno) +
                                        ": expected 4 fields");
        ObjectivePoint p;
        {
            const auto& f = fields[0];
            const auto res = std::from_chars(f.data(), f.data() + f.size(), p.cost);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size())
                throw std::invalid_argument("front CSV line " + std::to_string(lineno) +
                                            ": bad cost '" + f + "'");
        }
        {
            const auto& f = fields[1];
            const auto res =
                std::from_chars(f.data(), f.data() + f.size(), p.delta_lambda);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size())
                throw std::invalid_argument("front CSV line " + std::to_string(lineno) +
                                            ": bad delta_lambda '" + f + "'");
        }
        p.method = fields[2];
        if (!fields[3].empty()) p.nodes = split(fields[3], ';');
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<ObjectivePoint> read_front_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open front file: " + path);
    try {
        return read_front_csv(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_front_json_file(const std::string& path, const std::vector<ObjectivePoint>& points) {
    nlohmann::json doc;
    doc["schema"] = "netimmune.front.v1";
    auto& arr = doc["points"] = nlohmann::json::array();
    for (const auto& p : points) {
        nlohmann::json row;
        row["cost"] = p.cost;
        row["delta_lambda"] = p.delta_lambda;
        row["method"] = p.method;
        row["nodes"] = p.nodes;
        if (!p.selection.empty()) {
            std::vector<int> sel(p.selection.begin(), p.selection.end());
            row["selection"] = sel;
        }
        if (p.shield_value) row["shield_value"] = *p.shield_value;
        arr.push_back(std::move(row));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

std::vector<ObjectivePoint> read_front_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open front file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": invalid JSON: " + e.what());
    }
    if (!doc.contains("points") || !doc["points"].is_array())
        throw std::invalid_argument(path + ": schema mismatch, missing points array");
    std::vector<ObjectivePoint> points;
    for (const auto& row : doc["points"]) {
        ObjectivePoint p;
        p.cost = row.at("cost").get<std::int64_t>();
        p.delta_lambda = row.at("delta_lambda").get<double>();
        p.method = row.value("method", std::string{});
        if (row.contains("nodes")) p.nodes = row["nodes"].get<std::vector<std::string>>();
        if (row.contains("selection")) {
            const auto sel = row["selection"].get<std::vector<int>>();
            p.selection.assign(sel.begin(), sel.end());
        }
        if (row.contains("shield_value")) p.shield_value = row["shield_value"].get<double>();
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<ObjectivePoint> read_front_file(const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return read_front_json_file(path);
    return read_front_csv_file(path);
}

}  // namespace netimmune
