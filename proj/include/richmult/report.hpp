#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "richmult/chart.hpp"
#include "richmult/engine.hpp"
#include "richmult/quadric.hpp"

namespace richmult {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(std::string_view text);

/// One report as a JSON object; absent optional fields are null.
std::string report_to_json(const MultiplicityReport& report);
/// A JSON array of reports, two-space indented, trailing newline.
std::string reports_to_json(std::span<const MultiplicityReport> reports);
/// Header line plus one row per report.
std::string reports_to_csv(std::span<const MultiplicityReport> reports);
std::string reports_to_text(std::span<const MultiplicityReport> reports);
std::string format_reports(std::span<const MultiplicityReport> reports, ReportFormat format);

/// "checked=K agreed=A failed=F", with " truncated" appended when a budget cut the sweep.
std::string summary_line(const SweepResult& result);

/// One generator per line in canonical order, each followed by a newline.
std::string format_ideal(const PolyIdeal& ideal, std::span<const std::string> names);
/// Inverse of format_ideal; blank lines are skipped.
PolyIdeal parse_ideal(std::string_view text, std::span<const std::string> names);

/// {"q.p": "num/den", ...} in chart order, zero coordinates included.
std::string point_to_json(const Chart& chart, const AffinePoint& point);
/// Reads a {"q.p": value} map; unlisted coordinates are zero. Values are
/// rational strings or JSON integers.
AffinePoint parse_point_map(std::string_view json, const Chart& chart);
/// True when the text holds a JSON array (a matrix) rather than a map.
bool point_json_is_matrix(std::string_view json);
/// Reads an n x d matrix given as a JSON array of rows.
RationalMatrix parse_point_matrix(std::string_view json);

std::string quadric_point_to_json(std::span<const Rational> x);
QuadricPoint parse_quadric_point(std::string_view json);

/// Comma-separated rationals, e.g. "-2,-1,0,1,2". Values must be distinct.
std::vector<Rational> parse_grid(std::string_view text);

}  // namespace richmult
