#include "nagata/serialization.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "nagata/errors.hpp"

namespace nagata {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw InputError(what + " must be nonnegative");
  return static_cast<T>(x);
}

Distance scaled_entry(const json& v, Distance denominator, std::size_t i, std::size_t j) {
  const std::string where = "matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x != 0 && std::llabs(x) > std::numeric_limits<Distance>::max() / denominator)
      throw InputError(where + " overflows after scaling");
    return x * denominator;
  }
  if (v.is_number_float()) {
    const double x = v.get<double>() * static_cast<double>(denominator);
    const double r = std::nearbyint(x);
    if (!std::isfinite(x) || std::fabs(x - r) > 1e-9 * std::max(1.0, std::fabs(x)))
      throw InputError(where + " is not a multiple of 1/" + std::to_string(denominator),
                       {{"axiom", "inexact"}, {"indices", {i, j}}});
    return static_cast<Distance>(r);
  }
  throw InputError(where + " is not a number", {{"indices", {i, j}}});
}

PointSet read_set(const json& v, const std::string& what) {
  if (!v.is_array()) throw InputError(what + " must be an array of point indices");
  std::vector<PointIndex> members;
  for (const auto& e : v) members.push_back(get_int<PointIndex>(e, what + " entry"));
  return PointSet(std::move(members));
}

std::vector<Family> read_classes(const json& j) {
  const auto& classes = field(j, "classes", "cover");
  if (!classes.is_array()) throw InputError("cover: 'classes' must be an array");
  std::vector<Family> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!classes[c].is_array()) throw InputError("cover: class " + std::to_string(c) + " must be an array");
    Family fam;
    for (const auto& m : classes[c]) fam.push_back(read_set(m, "cover member"));
    out.push_back(std::move(fam));
  }
  const auto n_colors = get_int<std::size_t>(field(j, "n_colors", "cover"), "n_colors");
  if (n_colors != out.size())
    throw InputError("cover: n_colors = " + std::to_string(n_colors) + " but " +
                     std::to_string(out.size()) + " classes are listed");
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw InputError("CSV: unterminated quote");
  return out;
}

}  // namespace

FiniteMetricSpace space_from_json(const json& j) {
  const auto& points = field(j, "points", "space");
  const auto& matrix = field(j, "matrix", "space");
  if (!points.is_array()) throw InputError("space: 'points' must be an array of strings");
  if (!matrix.is_array()) throw InputError("space: 'matrix' must be an array of rows");
  Distance denominator = 1;
  if (j.contains("scale_denominator")) {
    denominator = get_int<Distance>(j["scale_denominator"], "scale_denominator");
    if (denominator < 1) throw InputError("scale_denominator must be at least 1");
  }
  std::vector<std::string> names;
  for (const auto& p : points) {
    if (!p.is_string()) throw InputError("space: point identifiers must be strings");
    names.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Distance>> rows;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (!matrix[i].is_array()) throw InputError("space: matrix row " + std::to_string(i) + " is not an array");
    std::vector<Distance> row;
    for (std::size_t k = 0; k < matrix[i].size(); ++k)
      row.push_back(scaled_entry(matrix[i][k], denominator, i, k));
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace(std::move(names), DistanceMatrix::from_rows(rows));
}

json space_to_json(const FiniteMetricSpace& space) {
  return {{"points", space.names()}, {"matrix", space.matrix().to_rows()}, {"scale_denominator", 1}};
}

ColoredCover cover_from_json(const FiniteMetricSpace& space, const json& j) {
  const auto scale = get_int<Distance>(field(j, "scale_r", "cover"), "scale_r");
  return ColoredCover::make(space, read_classes(j), scale);
}

json cover_to_json(const ColoredCover& cover) {
  json classes = json::array();
  for (const auto& c : cover.classes()) {
    json fam = json::array();
    for (const auto& u : c) fam.push_back(u.members());
    classes.push_back(std::move(fam));
  }
  return {{"n_colors", cover.n_colors()}, {"scale_r", cover.scale_r()}, {"classes", classes}};
}

NestedCoverSequence sequence_from_json(const FiniteMetricSpace& space, const json& j) {
  NestedCoverSequence seq;
  const auto& levels = field(j, "levels", "sequence");
  if (!levels.is_array()) throw InputError("sequence: 'levels' must be an array");
  for (const auto& l : levels) {
    const auto& c = field(l, "cover", "sequence level");
    NestingLevel level{
        get_int<Distance>(field(l, "d_k", "sequence level"), "d_k"),
        ColoredCover::unchecked(space, read_classes(c),
                                get_int<Distance>(field(c, "scale_r", "cover"), "scale_r")),
        get_int<Distance>(field(l, "m_k", "sequence level"), "m_k"), 0, 0};
    level.provider_scale = l.contains("provider_scale")
                               ? get_int<Distance>(l["provider_scale"], "provider_scale")
                               : level.d_k;
    level.provider_mesh = l.contains("provider_mesh")
                              ? get_int<Distance>(l["provider_mesh"], "provider_mesh")
                              : level.m_k;
    seq.levels.push_back(std::move(level));
  }
  const auto& sat = field(j, "saturated", "sequence");
  if (!sat.is_boolean()) throw InputError("sequence: 'saturated' must be a boolean");
  seq.saturated = sat.get<bool>();
  return seq;
}

json sequence_to_json(const NestedCoverSequence& seq) {
  json levels = json::array();
  for (const auto& l : seq.levels) {
    levels.push_back({{"d_k", l.d_k},
                      {"m_k", l.m_k},
                      {"cover", cover_to_json(l.cover)},
                      {"provider_scale", l.provider_scale},
                      {"provider_mesh", l.provider_mesh}});
  }
  return {{"levels", levels}, {"saturated", seq.saturated}};
}

json nagata_to_json(const NagataSpace& ns) {
  json prov = json::array();
  for (const auto& p : ns.provenance()) {
    prov.push_back({{"pair", {p.a, p.b}},
                    {"level", p.level},
                    {"color", p.color},
                    {"witness_set", p.witness_set.members()}});
  }
  return {{"levels_used", ns.levels_used()}, {"D", ns.matrix().to_rows()}, {"provenance", prov}};
}

NagataSpace nagata_from_json(const json& j) {
  const auto levels = get_int<std::size_t>(field(j, "levels_used", "nagata"), "levels_used");
  const auto& rows_json = field(j, "D", "nagata");
  std::vector<std::vector<Distance>> rows;
  for (const auto& r : rows_json) {
    std::vector<Distance> row;
    for (const auto& e : r) row.push_back(get_int<Distance>(e, "D entry"));
    rows.push_back(std::move(row));
  }
  std::vector<Provenance> prov;
  for (const auto& p : field(j, "provenance", "nagata")) {
    const auto& pair = field(p, "pair", "provenance");
    if (!pair.is_array() || pair.size() != 2) throw InputError("provenance pair must have two entries");
    prov.push_back({get_int<PointIndex>(pair[0], "pair"), get_int<PointIndex>(pair[1], "pair"),
                    get_int<std::size_t>(field(p, "level", "provenance"), "level"),
                    p.contains("color") ? get_int<std::size_t>(p["color"], "color") : 0,
                    read_set(field(p, "witness_set", "provenance"), "witness_set")});
  }
  return NagataSpace(levels, DistanceMatrix::from_rows(rows), std::move(prov));
}

json report_to_json(const CheckReport& report) {
  return {{"verdict", to_string(report.verdict)},
          {"checked", report.checked},
          {"witness", report.witness},
          {"note", report.note}};
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  const auto& v = field(j, "verdict", "report");
  if (!v.is_string()) throw InputError("report: verdict must be a string");
  r.verdict = verdict_from_string(v.get<std::string>());
  r.checked = field(j, "checked", "report").get<std::uint64_t>();
  r.witness = field(j, "witness", "report");
  r.note = field(j, "note", "report").get<std::string>();
  return r;
}

json control_to_json(const ControlReport& control) {
  auto rows = [](const std::vector<ControlRow>& v, const char* arg, const char* bound) {
    json out = json::array();
    for (const auto& r : v) {
      out.push_back({{arg, r.argument},
                     {"rho", r.value},
                     {bound, r.bound ? json(*r.bound) : json(nullptr)},
                     {"ok", r.ok}});
    }
    return out;
  };
  json out = report_to_json(control.summary);
  out["rho_plus"] = rows(control.rho_plus, "k", "m_k");
  out["rho_minus"] = rows(control.rho_minus, "delta", "min_r_with_d_r_at_least_delta");
  return out;
}

void write_matrix_csv(std::ostream& out, const std::vector<std::string>& names,
                      const DistanceMatrix& m) {
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << csv_escape(names[i]);
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
}

std::string matrix_csv(const std::vector<std::string>& names, const DistanceMatrix& m) {
  std::ostringstream os;
  write_matrix_csv(os, names, m);
  return os.str();
}

FiniteMetricSpace space_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("CSV: missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto names = csv_split(line);
  std::vector<std::vector<Distance>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Distance> row;
    for (const auto& cell : csv_split(line)) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size())
        throw InputError("CSV: row " + std::to_string(rows.size()) + " has a non-integer cell '" + cell + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace(std::move(names), DistanceMatrix::from_rows(rows));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nagata
