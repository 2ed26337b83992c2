#include "ellfib/cli/report.hpp"

#include <sstream>

namespace ellfib::cli {
namespace {

[[noreturn]] void bad_report(const std::string& path, const std::string& message) {
  throw SpecError(Diagnostic{Diagnostic::Kind::Validation, path, 0, 0, message});
}

int get_int(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) bad_report(std::string("/") + key, "missing integer");
  return it->get<int>();
}

}  // namespace

Json density_report_json(const DensityReport& r) {
  Json fibers = Json::array();
  for (const auto& c : r.fibers) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(point_json(p));
    fibers.push_back(Json{{"b", rat_json(c.b)},
                          {"base", point_json(c.base)},
                          {"tau", point_json(c.tau)},
                          {"verdict", to_string(c.verdict)},
                          {"points", pts}});
  }
  return Json{{"fibers_attempted", r.fibers_attempted},
              {"fibers_certified", r.fibers_certified},
              {"base_points_attempted", r.base_points_attempted},
              {"base_points_certified", r.base_points_certified},
              {"base_points_torsion", r.base_points_torsion},
              {"base_points_skipped", r.base_points_skipped},
              {"points_emitted", r.points_emitted},
              {"max_height_seen", r.max_height_seen.get_str()},
              {"fibers", fibers}};
}

CertificationVerdict parse_verdict(std::string_view text) {
  if (text == "NonTorsion") return InfiniteOrder{};
  const auto inner = [&](std::string_view head) -> std::optional<std::string> {
    if (text.size() < head.size() + 2 || text.substr(0, head.size()) != head || text[head.size()] != '(' ||
        text.back() != ')') {
      return std::nullopt;
    }
    return std::string(text.substr(head.size() + 1, text.size() - head.size() - 2));
  };
  if (const auto m = inner("Torsion")) {
    try {
      std::size_t used = 0;
      const int order = std::stoi(*m, &used);
      if (used == m->size() && order > 0) return Torsion{order};
    } catch (const std::exception&) {
    }
  }
  if (const auto reason = inner("Skipped")) return Skipped{*reason};
  bad_report("/verdict", "unknown verdict '" + std::string(text) + "'");
}

DensityReport density_report_from_json(const Json& j) {
  DensityReport r;
  r.fibers_attempted = get_int(j, "fibers_attempted");
  r.fibers_certified = get_int(j, "fibers_certified");
  r.base_points_attempted = get_int(j, "base_points_attempted");
  r.base_points_certified = get_int(j, "base_points_certified");
  r.base_points_torsion = get_int(j, "base_points_torsion");
  r.base_points_skipped = get_int(j, "base_points_skipped");
  r.points_emitted = get_int(j, "points_emitted");
  const auto h = j.find("max_height_seen");
  if (h == j.end() || !h->is_string()) bad_report("/max_height_seen", "missing integer string");
  try {
    r.max_height_seen = Integer(h->get<std::string>());
  } catch (const std::invalid_argument&) {
    bad_report("/max_height_seen", "not an integer");
  }
  const auto fibers = j.find("fibers");
  if (fibers == j.end() || !fibers->is_array()) bad_report("/fibers", "missing array");
  for (std::size_t i = 0; i < fibers->size(); ++i) {
    const Json& f = (*fibers)[i];
    const std::string path = "/fibers/" + std::to_string(i);
    if (!f.is_object() || !f.contains("b") || !f.contains("base") || !f.contains("tau") || !f.contains("verdict") ||
        !f.contains("points") || !f["verdict"].is_string() || !f["points"].is_array()) {
      bad_report(path, "malformed certificate");
    }
    CertificationResult c{read_rat(f["b"], path + "/b"), read_point(f["base"], path + "/base"),
                          read_point(f["tau"], path + "/tau"), parse_verdict(f["verdict"].get<std::string>()), {}};
    for (std::size_t k = 0; k < f["points"].size(); ++k) {
      c.points.push_back(read_point(f["points"][k], path + "/points/" + std::to_string(k)));
    }
    r.fibers.push_back(std::move(c));
  }
  return r;
}

std::string points_csv(const std::vector<EmittedPoint>& points) {
  std::string out = "b,x,y,k\n";
  for (const auto& p : points) {
    out += p.b.str() + "," + p.x.str() + "," + p.y.str() + "," + std::to_string(p.k) + "\n";
  }
  return out;
}

std::vector<EmittedPoint> points_from_csv(std::string_view text) {
  std::vector<EmittedPoint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto fail = [&](const std::string& message) {
    throw SpecError(Diagnostic{Diagnostic::Kind::Syntax, "", lineno, 1, message});
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != "b,x,y,k") fail("expected header b,x,y,k");
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos; start = pos + 1) {
      cells.push_back(line.substr(start, pos - start));
    }
    cells.push_back(line.substr(start));
    if (cells.size() != 4) fail("expected 4 fields");
    try {
      std::size_t used = 0;
      const int k = std::stoi(cells[3], &used);
      if (used != cells[3].size()) fail("bad k");
      out.push_back({Rat::parse(cells[0]), Rat::parse(cells[1]), Rat::parse(cells[2]), k});
    } catch (const Error& e) {
      fail(e.what());
    } catch (const std::logic_error&) {
      fail("bad k");
    }
  }
  if (lineno == 0) fail("empty file");
  return out;
}

bool same_counters(const DensityReport& a, const DensityReport& b) {
  return a.fibers_attempted == b.fibers_attempted && a.fibers_certified == b.fibers_certified &&
         a.base_points_attempted == b.base_points_attempted && a.base_points_certified == b.base_points_certified &&
         a.base_points_torsion == b.base_points_torsion && a.base_points_skipped == b.base_points_skipped &&
         a.points_emitted == b.points_emitted && a.max_height_seen == b.max_height_seen;
}

}  // namespace ellfib::cli
