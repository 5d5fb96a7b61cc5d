#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netimmune/pareto.hpp"

namespace netimmune {

/// Shortest decimal form that round-trips to the same double, so rereads
/// reproduce exact values and reruns are byte-identical.
std::string format_double(double v);

/// CSV schema: header `cost,delta_lambda,method,nodes`, nodes as
/// semicolon-separated original labels.
void write_front_csv(std::ostream& out, const std::vector<ObjectivePoint>& points);
void write_front_csv_file(const std::string& path, const std::vector<ObjectivePoint>& points);
std::vector<ObjectivePoint> read_front_csv(std::istream& in);
std::vector<ObjectivePoint> read_front_csv_file(const std::string& path);

/// JSON mirror with full provenance (selection bit-vector and Shield value
/// when present).
void write_front_json_file(const std::string& path, const std::vector<ObjectivePoint>& points);
std::vector<ObjectivePoint> read_front_json_file(const std::string& path);

/// Dispatch by extension: .json reads the mirror, anything else the CSV.
std::vector<ObjectivePoint> read_front_file(const std::string& path);

}  // namespace netimmune
