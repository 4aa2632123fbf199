#include "richmult/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace richmult {

using Json = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "text") return ReportFormat::Text;
  throw Error("unknown report format '" + std::string(text) + "' (expected json, csv or text)");
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json samuel_json(const std::optional<SamuelCheck>& check) {
  if (!check) return nullptr;
  Json j;
  j["fitted"] = check->fitted;
  j["stable"] = check->stable;
  j["ok"] = check->ok;
  return j;
}

Json point_json(const MultiplicityReport& r) {
  if (r.family == "quadric") {
    Json a = Json::array();
    for (const auto& c : r.point) a.push_back(to_string(c));
    return a;
  }
  Json m = Json::object();
  for (std::size_t k = 0; k < r.point.size(); ++k) m[r.point_keys[k]] = to_string(r.point[k]);
  return m;
}

Json report_json(const MultiplicityReport& r) {
  const bool quadric = r.family == "quadric";
  Json j;
  j["family"] = r.family;
  j["d"] = quadric ? Json(nullptr) : Json(r.d);
  j["n"] = r.n;
  j["w"] = r.w;
  j["v"] = r.v;
  j["tau"] = quadric ? Json(nullptr) : Json(r.tau);
  j["point"] = point_json(r);
  j["mu_w"] = r.mu_w;
  j["mu_v"] = r.mu_v;
  j["mu_wv_fast"] = r.mu_wv_fast;
  j["mu_wv_oracle"] = r.mu_wv_oracle;
  j["deg_zw"] = optional_json(r.deg_zw);
  j["deg_zv"] = optional_json(r.deg_zv);
  j["deg_zwv"] = optional_json(r.deg_zwv);
  j["degree_identity"] = optional_json(r.degree_identity);
  j["cone_yw_over_m"] = optional_json(r.cone_yw_over_m);
  j["cone_yv_over_m"] = optional_json(r.cone_yv_over_m);
  j["cone_ywv_over_e_tau"] = optional_json(r.cone_ywv_over_e_tau);
  j["schubert_translation_invariant"] = optional_json(r.schubert_translation_invariant);
  j["dim_w"] = r.dim_w;
  j["dim_v"] = r.dim_v;
  j["dim_wv"] = r.dim_wv;
  j["dimension_ok"] = r.dimension_ok;
  j["corank_w"] = r.corank_w;
  j["corank_v"] = r.corank_v;
  j["corank_wv"] = r.corank_wv;
  j["smooth_w"] = r.smooth_w;
  j["smooth_v"] = r.smooth_v;
  j["smooth_wv"] = r.smooth_wv;
  j["samuel_w"] = samuel_json(r.samuel_w);
  j["samuel_v"] = samuel_json(r.samuel_v);
  j["samuel_wv"] = samuel_json(r.samuel_wv);
  j["agreement"] = r.agreement;
  return j;
}

std::string point_compact(const MultiplicityReport& r) {
  std::string s;
  for (std::size_t k = 0; k < r.point.size(); ++k) {
    if (k) s += ';';
    if (r.family != "quadric") s += r.point_keys[k] + '=';
    s += to_string(r.point[k]);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error("expected a rational string or integer, got " + j.dump());
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string report_to_json(const MultiplicityReport& report) { return report_json(report).dump(); }

std::string reports_to_json(std::span<const MultiplicityReport> reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(report_json(r));
  return a.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const MultiplicityReport> reports) {
  std::ostringstream out;
  out << "family,d,n,w,v,tau,point,mu_w,mu_v,mu_wv_fast,mu_wv_oracle,deg_zw,deg_zv,deg_zwv,degree_identity,"
         "cone_yw_over_m,cone_yv_over_m,cone_ywv_over_e_tau,schubert_translation_invariant,dim_w,dim_v,dim_wv,"
         "dimension_ok,corank_w,corank_v,corank_wv,smooth_w,smooth_v,smooth_wv,samuel_w,samuel_v,samuel_wv,"
         "agreement\n";
  auto samuel = [](const std::optional<SamuelCheck>& c) { return c ? std::to_string(c->fitted) + (c->ok ? "" : "!") : ""; };
  for (const auto& r : reports) {
    const bool quadric = r.family == "quadric";
    std::vector<std::string> f{r.family,
                               quadric ? "" : std::to_string(r.d),
                               std::to_string(r.n),
                               r.w,
                               r.v,
                               r.tau,
                               point_compact(r),
                               std::to_string(r.mu_w),
                               std::to_string(r.mu_v),
                               std::to_string(r.mu_wv_fast),
                               std::to_string(r.mu_wv_oracle),
                               opt_str(r.deg_zw),
                               opt_str(r.deg_zv),
                               opt_str(r.deg_zwv),
                               opt_str(r.degree_identity),
                               opt_str(r.cone_yw_over_m),
                               opt_str(r.cone_yv_over_m),
                               opt_str(r.cone_ywv_over_e_tau),
                               opt_str(r.schubert_translation_invariant),
                               std::to_string(r.dim_w),
                               std::to_string(r.dim_v),
                               std::to_string(r.dim_wv),
                               bool_str(r.dimension_ok),
                               std::to_string(r.corank_w),
                               std::to_string(r.corank_v),
                               std::to_string(r.corank_wv),
                               bool_str(r.smooth_w),
                               bool_str(r.smooth_v),
                               bool_str(r.smooth_wv),
                               samuel(r.samuel_w),
                               samuel(r.samuel_v),
                               samuel(r.samuel_wv),
                               bool_str(r.agreement)};
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << csv_field(f[k]);
    out << '\n';
  }
  return out.str();
}

std::string reports_to_text(std::span<const MultiplicityReport> reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    if (r.family == "quadric") {
      out << "quadric n=" << r.n << " i=" << r.w << " j=" << r.v << " x=[" << point_compact(r) << "]\n";
    } else {
      out << "G(" << r.d << "," << r.n << ") w=" << r.w << " v=" << r.v << " tau=" << r.tau << " m={"
          << point_compact(r) << "}\n";
    }
    out << "  mu_w=" << r.mu_w << " mu_v=" << r.mu_v << " fast=" << r.mu_wv_fast << " oracle=" << r.mu_wv_oracle
        << (r.agreement ? " agree" : " DISAGREE") << '\n';
    out << "  dim w/v/wv=" << r.dim_w << "/" << r.dim_v << "/" << r.dim_wv
        << " corank w/v/wv=" << r.corank_w << "/" << r.corank_v << "/" << r.corank_wv << '\n';
    if (r.deg_zwv)
      out << "  deg Zw/Zv/Zwv=" << *r.deg_zw << "/" << *r.deg_zv << "/" << *r.deg_zwv
          << " cone Yw over m=" << opt_str(r.cone_yw_over_m) << " Yv over m=" << opt_str(r.cone_yv_over_m) << '\n';
  }
  return out.str();
}

std::string format_reports(std::span<const MultiplicityReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return reports_to_json(reports);
    case ReportFormat::Csv: return reports_to_csv(reports);
    case ReportFormat::Text: return reports_to_text(reports);
  }
  return {};
}

std::string summary_line(const SweepResult& result) {
  std::string s = "checked=" + std::to_string(result.checked()) + " agreed=" + std::to_string(result.agreed()) +
                  " failed=" + std::to_string(result.failed());
  if (result.truncated) s += " truncated";
  return s;
}

std::string format_ideal(const PolyIdeal& ideal, std::span<const std::string> names) {
  std::string out;
  for (const auto& g : ideal.generators) out += to_string(g, names) + "\n";
  return out;
}

PolyIdeal parse_ideal(std::string_view text, std::span<const std::string> names) {
  PolyIdeal ideal{names.size(), {}, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos)
      ideal.generators.push_back(parse_polynomial(line, names));
    start = end + 1;
  }
  ideal.generators = canonical_generators(std::move(ideal.generators));
  return ideal;
}

std::string point_to_json(const Chart& chart, const AffinePoint& point) {
  if (point.size() != chart.num_vars()) throw Error("point size does not match the chart");
  Json m = Json::object();
  for (std::size_t k = 0; k < point.size(); ++k) m[to_string(chart.indices()[k])] = to_string(point[k]);
  return m.dump();
}

AffinePoint parse_point_map(std::string_view json, const Chart& chart) {
  Json j = parse_json(json);
  if (!j.is_object()) throw Error("point must be a JSON object {\"q.p\": \"num/den\"}");
  AffinePoint p = chart.origin();
  std::set<std::size_t> seen;
  for (const auto& [key, value] : j.items()) {
    RootIndex idx = parse_root_index(key);
    std::size_t var = chart.var_index(idx);
    if (!seen.insert(var).second) throw Error("duplicate coordinate " + key);
    p[var] = json_rational(value);
  }
  return p;
}

bool point_json_is_matrix(std::string_view json) { return parse_json(json).is_array(); }

RationalMatrix parse_point_matrix(std::string_view json) {
  Json j = parse_json(json);
  if (!j.is_array() || j.empty()) throw Error("matrix point must be a non-empty JSON array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("matrix point rows must be arrays");
    std::vector<Rational> r;
    for (const auto& c : row) r.push_back(json_rational(c));
    if (!rows.empty() && r.size() != rows.front().size()) throw Error("matrix point rows differ in length");
    rows.push_back(std::move(r));
  }
  return RationalMatrix(rows);
}

std::string quadric_point_to_json(std::span<const Rational> x) {
  Json a = Json::array();
  for (const auto& c : x) a.push_back(to_string(c));
  return a.dump();
}

QuadricPoint parse_quadric_point(std::string_view json) {
  Json j = parse_json(json);
  if (!j.is_array()) throw Error("quadric point must be a JSON array of rationals");
  QuadricPoint x;
  for (const auto& c : j) x.push_back(json_rational(c));
  return x;
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_rational(text.substr(start, end - start)));
    start = end + 1;
  }
  std::vector<Rational> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("grid values must be distinct");
  return out;
}

}  // namespace richmult
