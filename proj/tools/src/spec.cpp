#include "ellfib/cli/spec.hpp"

#include <cctype>
#include <set>

namespace ellfib::cli {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
  throw SpecError(Diagnostic{Diagnostic::Kind::Validation, path.empty() ? "/" : path, 0, 0, message});
}

// Library errors raised while building domain objects are validation
// failures of the block that produced them.
template <class Fn>
auto at(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) invalid(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.count(key)) invalid(path + "/" + key, "unknown field");
  }
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(path + "/" + key, "missing field");
  return *it;
}

long read_int(const Json& j, const std::string& path, long lo, long hi) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  const long v = j.is_number_unsigned() && j.get<unsigned long>() > static_cast<unsigned long>(hi)
                     ? hi + 1
                     : j.get<long>();
  if (v < lo || v > hi) invalid(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) invalid(path, "expected true or false");
  return j.get<bool>();
}

std::vector<Rat> read_rats(const Json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array of rationals");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rat(j[i], path + "/" + std::to_string(i)));
  return out;
}

Section read_section(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "zero") return Section();
  require_object(j, path, {"x", "y"});
  return Section(read_ratfn(member(j, "x", path), path + "/x"), read_ratfn(member(j, "y", path), path + "/y"));
}

Json section_json(const Section& s) {
  if (s.is_zero()) return "zero";
  return Json{{"x", ratfn_json(s.x())}, {"y", ratfn_json(s.y())}};
}

EllipticParametrization read_elliptic(const Json& j, const std::string& path) {
  require_object(j, path, {"quartic", "marked", "stripped", "generator"});
  const auto q = read_rats(member(j, "quartic", path), path + "/quartic");
  if (q.size() != 5) invalid(path + "/quartic", "expected 5 coefficients");
  std::optional<QuarticPoint<Rat>> marked;
  if (const auto it = j.find("marked"); it != j.end()) {
    const std::string mp = path + "/marked";
    if (it->contains("infinity")) {
      require_object(*it, mp, {"infinity"});
      marked = QuarticPoint<Rat>::infinity(read_rat((*it)["infinity"], mp + "/infinity"));
    } else {
      require_object(*it, mp, {"z", "w"});
      marked = QuarticPoint<Rat>::affine(read_rat(member(*it, "z", mp), mp + "/z"),
                                         read_rat(member(*it, "w", mp), mp + "/w"));
    }
  }
  auto curve = at(path, [&] { return QuarticModel<Rat>({q[0], q[1], q[2], q[3], q[4]}, marked); });
  Poly stripped{Rat(1)};
  if (const auto it = j.find("stripped"); it != j.end()) stripped = read_poly(*it, path + "/stripped");
  std::optional<Point<Rat>> generator;
  if (const auto it = j.find("generator"); it != j.end()) generator = read_point(*it, path + "/generator");
  return EllipticParametrization{std::move(curve), std::move(stripped), std::move(generator)};
}

Json elliptic_json(const EllipticParametrization& e) {
  Json q = Json::array();
  for (const auto& c : e.curve.coefficients()) q.push_back(rat_json(c));
  Json out{{"quartic", q}};
  if (const auto& m = e.curve.marked_point()) {
    out["marked"] = m->at_infinity ? Json{{"infinity", rat_json(m->w)}} : Json{{"z", rat_json(m->z)}, {"w", rat_json(m->w)}};
  }
  out["stripped"] = poly_json(e.stripped);
  if (e.generator) out["generator"] = point_json(*e.generator);
  return out;
}

Multisection read_multisection(const FibrationModel& f, const Json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  const Json& kind_json = member(j, "kind", path);
  if (!kind_json.is_string()) invalid(path + "/kind", "expected a string");
  const auto kind = kind_json.get<std::string>();
  MultisectionKind k;
  if (kind == "zero_section") {
    require_object(j, path, {"kind"});
    k = ZeroSection{};
  } else if (kind == "constant_x") {
    require_object(j, path, {"kind", "c"});
    k = ConstantX{read_rat(member(j, "c", path), path + "/c")};
  } else if (kind == "parametrized") {
    require_object(j, path, {"kind", "t", "x", "y"});
    k = Parametrized{read_ratfn(member(j, "t", path), path + "/t"), read_ratfn(member(j, "x", path), path + "/x"),
                     read_ratfn(member(j, "y", path), path + "/y")};
  } else if (kind == "graph_on_quartic") {
    require_object(j, path, {"kind", "p", "elliptic"});
    GraphOnQuartic g{read_poly(member(j, "p", path), path + "/p"), std::nullopt};
    if (const auto it = j.find("elliptic"); it != j.end()) g.elliptic = read_elliptic(*it, path + "/elliptic");
    k = std::move(g);
  } else if (kind == "split") {
    require_object(j, path, {"kind", "sections"});
    const Json& list = member(j, "sections", path);
    if (!list.is_array()) invalid(path + "/sections", "expected an array");
    SplitList s;
    for (std::size_t i = 0; i < list.size(); ++i) {
      s.sections.push_back(read_section(list[i], path + "/sections/" + std::to_string(i)));
    }
    k = std::move(s);
  } else {
    invalid(path + "/kind", "unknown multisection kind '" + kind +
                                "' (zero_section, constant_x, parametrized, graph_on_quartic, split)");
  }
  return at(path, [&] { return Multisection(f, std::move(k)); });
}

Json multisection_json(const Multisection& m) {
  return std::visit(
      Overloaded{
          [](const ZeroSection&) { return Json{{"kind", "zero_section"}}; },
          [](const ConstantX& c) { return Json{{"kind", "constant_x"}, {"c", rat_json(c.c)}}; },
          [](const Parametrized& p) {
            return Json{{"kind", "parametrized"}, {"t", ratfn_json(p.t)}, {"x", ratfn_json(p.x)}, {"y", ratfn_json(p.y)}};
          },
          [](const GraphOnQuartic& g) {
            Json out{{"kind", "graph_on_quartic"}, {"p", poly_json(g.p)}};
            if (g.elliptic) out["elliptic"] = elliptic_json(*g.elliptic);
            return out;
          },
          [](const SplitList& s) {
            Json list = Json::array();
            for (const auto& sec : s.sections) list.push_back(section_json(sec));
            return Json{{"kind", "split"}, {"sections", list}};
          },
      },
      m.kind());
}

FibrationModel read_fibration(const Json& j) {
  const std::string path = "/fibration";
  if (j.is_object() && j.contains("quartic")) {
    require_object(j, path, {"quartic", "branch"});
    const Json& q = j["quartic"];
    if (!q.is_array() || q.size() != 5) invalid(path + "/quartic", "expected 5 polynomials in t, ascending in z");
    QuarticSource src;
    for (std::size_t i = 0; i < 5; ++i) src.q[i] = read_poly(q[i], path + "/quartic/" + std::to_string(i));
    src.branch = read_rat(member(j, "branch", path), path + "/branch");
    if (src.q[4].degree() > 0 || src.branch * src.branch != src.q[4].coeff(0)) {
      invalid(path + "/branch", "the z^4 coefficient must be the constant branch^2");
    }
    return at(path, [&] { return FibrationModel::from_quartic(src); });
  }
  require_object(j, path, {"a", "b"});
  auto a = read_ratfn(member(j, "a", path), path + "/a");
  auto b = read_ratfn(member(j, "b", path), path + "/b");
  try {
    return FibrationModel(std::move(a), std::move(b));
  } catch (const Error& e) {
    if (e.code() == Errc::SingularCurve) invalid(path, "singular generic fiber");
    invalid(path, e.what());
  }
}

Json fibration_json(const FibrationModel& f) {
  if (const auto& src = f.quartic_source()) {
    Json q = Json::array();
    for (const auto& c : src->q) q.push_back(poly_json(c));
    return Json{{"quartic", q}, {"branch", rat_json(src->branch)}};
  }
  return Json{{"a", ratfn_json(f.a())}, {"b", ratfn_json(f.b())}};
}

ConeQuartic read_cone(const Json& j) {
  const std::string path = "/cone_quartic";
  if (!j.is_object()) invalid(path, "expected an object keyed by exponent tuples \"e0e1e2e3\"");
  std::map<Monomial, Rat> c;
  for (const auto& [key, value] : j.items()) {
    const auto m = at(path + "/" + key, [&] { return ConeQuartic::parse_key(key); });
    c[m] = read_rat(value, path + "/" + key);
  }
  return ConeQuartic(c);
}

Json cone_json(const ConeQuartic& b) {
  Json out = Json::object();
  for (const auto& m : ConeQuartic::monomials()) {
    if (!b.coeff(m).is_zero()) out[ConeQuartic::key(m)] = rat_json(b.coeff(m));
  }
  return out;
}

std::pair<Rat, Rat> read_tz(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  require_object(j, path, allowed);
  return {read_rat(member(j, "t", path), path + "/t"), read_rat(member(j, "z", path), path + "/z")};
}

Params read_params(const Json& j) {
  const std::string path = "/params";
  require_object(j, path, {"height_bound", "k_max", "torsion_bound", "override_bound", "m_max", "samples", "threads"});
  Params p;
  if (j.contains("height_bound")) p.height_bound = static_cast<unsigned long>(read_int(j["height_bound"], path + "/height_bound", 1, 1000000));
  if (j.contains("k_max")) p.k_max = static_cast<int>(read_int(j["k_max"], path + "/k_max", 0, 10000));
  if (j.contains("torsion_bound")) p.torsion_bound = static_cast<int>(read_int(j["torsion_bound"], path + "/torsion_bound", 1, 10000));
  if (j.contains("override_bound")) p.override_bound = read_bool(j["override_bound"], path + "/override_bound");
  if (j.contains("m_max")) p.m_max = static_cast<int>(read_int(j["m_max"], path + "/m_max", 1, 10000));
  if (j.contains("samples")) p.samples = read_rats(j["samples"], path + "/samples");
  if (j.contains("threads")) p.threads = static_cast<unsigned>(read_int(j["threads"], path + "/threads", 1, 1024));
  if (p.torsion_bound < kTorsionBoundRational && !p.override_bound) {
    invalid(path + "/torsion_bound", "below the uniform bound " + std::to_string(kTorsionBoundRational) +
                                         " over Q; set override_bound to accept an uncertified run");
  }
  return p;
}

Json params_json(const Params& p) {
  Json samples = Json::array();
  for (const auto& s : p.samples) samples.push_back(rat_json(s));
  return Json{{"height_bound", p.height_bound}, {"k_max", p.k_max},       {"torsion_bound", p.torsion_bound},
              {"override_bound", p.override_bound}, {"m_max", p.m_max}, {"samples", samples},
              {"threads", p.threads}};
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<int>(offset - line_start) + 1};
}

}  // namespace

std::string Diagnostic::render(std::string_view source) const {
  std::string prefix = source.empty() ? std::string("spec") : std::string(source);
  switch (kind) {
    case Kind::Syntax:
      return prefix + ":" + std::to_string(line) + ":" + std::to_string(column) + ": syntax error: " + message;
    case Kind::Validation:
      return prefix + ": validation error at " + field + ": " + message;
    case Kind::Computation:
      break;
  }
  return prefix + ": computation error" + (field.empty() ? "" : " at " + field) + ": " + message;
}

Json rat_json(const Rat& r) { return r.str(); }

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

Json ratfn_json(const RatFn& f) { return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

Json point_json(const Point<Rat>& p) {
  if (p.is_infinity()) return "inf";
  return Json{{"x", rat_json(p.x())}, {"y", rat_json(p.y())}};
}

Json nf_json(const NfElem& e) { return e.str(); }

Json field_json(const FieldPtr& field) {
  if (!field) return "Q";
  return Json{{"minpoly", field->describe()}};
}

Rat read_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(Integer(j.dump()));
  if (j.is_number()) invalid(path, "floating-point numbers are not accepted; write an exact rational string");
  if (!j.is_string()) invalid(path, "expected a rational such as \"3/4\"");
  return at(path, [&] { return Rat::parse(j.get<std::string>()); });
}

Poly read_poly(const Json& j, const std::string& path) { return Poly(read_rats(j, path)); }

RatFn read_ratfn(const Json& j, const std::string& path) {
  if (j.is_array()) return RatFn(read_poly(j, path));
  require_object(j, path, {"num", "den"});
  Poly num = read_poly(member(j, "num", path), path + "/num");
  Poly den{Rat(1)};
  if (j.contains("den")) den = read_poly(j["den"], path + "/den");
  if (den.is_zero()) invalid(path + "/den", "zero denominator");
  return RatFn(std::move(num), std::move(den));
}

Point<Rat> read_point(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return Point<Rat>::infinity();
  require_object(j, path, {"x", "y"});
  return Point<Rat>(read_rat(member(j, "x", path), path + "/x"), read_rat(member(j, "y", path), path + "/y"));
}

RunSpec parse_spec(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string message = e.what();
    // A bad literal such as `tru` is only detected at the character after
    // it; step back to where the literal starts.
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const auto literal = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+'; };
    while (offset > 0 && offset <= text.size() && literal(text[offset - 1])) --offset;
    const auto [line, column] = line_column(text, offset);
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) message = message.substr(pos + 13);
    throw SpecError(Diagnostic{Diagnostic::Kind::Syntax, "", line, column, message});
  }
  require_object(doc, "", {"fibration", "multisection", "multisections", "cone_quartic", "points", "sections",
                           "allow_quadratic_extension", "params", "output"});

  RunSpec spec;
  if (doc.contains("fibration")) spec.fibration = read_fibration(doc["fibration"]);
  if (doc.contains("multisection") && doc.contains("multisections")) {
    invalid("/multisections", "give either one multisection or a family, not both");
  }
  if (doc.contains("multisection")) {
    if (!spec.fibration) invalid("/multisection", "a multisection needs a fibration block");
    spec.multisections.push_back(read_multisection(*spec.fibration, doc["multisection"], "/multisection"));
  }
  if (doc.contains("multisections")) {
    const Json& list = doc["multisections"];
    if (!spec.fibration) invalid("/multisections", "a multisection needs a fibration block");
    if (!list.is_array() || list.empty()) invalid("/multisections", "expected a non-empty array");
    spec.family = true;
    for (std::size_t i = 0; i < list.size(); ++i) {
      spec.multisections.push_back(read_multisection(*spec.fibration, list[i], "/multisections/" + std::to_string(i)));
    }
  }

  std::optional<RamificationData> r;
  if (doc.contains("cone_quartic")) {
    spec.cone = read_cone(doc["cone_quartic"]);
    r = at("/cone_quartic", [&] { return restrict_quartic_to_cone(*spec.cone); });
  }
  if (doc.contains("points")) {
    const Json& list = doc["points"];
    if (!r) invalid("/points", "points on R need a cone_quartic block");
    if (!list.is_array()) invalid("/points", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "/points/" + std::to_string(i);
      const auto [t, z] = read_tz(list[i], path, {"t", "z", "through"});
      if (!r->eval(t, z).is_zero()) invalid(path, "point is not on the ramification curve");
      BitangentQuery q{t, z, std::nullopt};
      if (list[i].contains("through")) q.through = read_tz(list[i]["through"], path + "/through", {"t", "z"});
      spec.points.push_back(std::move(q));
    }
  }
  if (doc.contains("sections")) {
    const Json& list = doc["sections"];
    if (!r) invalid("/sections", "sections need a cone_quartic block");
    if (!list.is_array()) invalid("/sections", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "/sections/" + std::to_string(i);
      require_object(list[i], path, {"c0", "c1", "c2"});
      SectionConic s;
      s.c0 = read_rat(member(list[i], "c0", path), path + "/c0");
      s.c1 = read_rat(member(list[i], "c1", path), path + "/c1");
      s.c2 = read_rat(member(list[i], "c2", path), path + "/c2");
      if (section_intersection_poly(*r, s).is_zero()) invalid(path, "section lies inside the ramification curve");
      spec.sections.push_back(std::move(s));
    }
  }
  if (doc.contains("allow_quadratic_extension")) {
    spec.allow_quadratic_extension = read_bool(doc["allow_quadratic_extension"], "/allow_quadratic_extension");
  }
  if (doc.contains("params")) spec.params = read_params(doc["params"]);
  if (doc.contains("output")) {
    require_object(doc["output"], "/output", {"dir"});
    const Json& dir = member(doc["output"], "dir", "/output");
    if (!dir.is_string() || dir.get<std::string>().empty()) invalid("/output/dir", "expected a non-empty path");
    spec.out_dir = dir.get<std::string>();
  }
  return spec;
}

Json to_json(const RunSpec& spec) {
  Json out = Json::object();
  if (spec.fibration) out["fibration"] = fibration_json(*spec.fibration);
  if (spec.family) {
    Json list = Json::array();
    for (const auto& m : spec.multisections) list.push_back(multisection_json(m));
    out["multisections"] = list;
  } else if (!spec.multisections.empty()) {
    out["multisection"] = multisection_json(spec.multisections.front());
  }
  if (spec.cone) out["cone_quartic"] = cone_json(*spec.cone);
  if (!spec.points.empty()) {
    Json list = Json::array();
    for (const auto& q : spec.points) {
      Json p{{"t", rat_json(q.t0)}, {"z", rat_json(q.z0)}};
      if (q.through) p["through"] = Json{{"t", rat_json(q.through->first)}, {"z", rat_json(q.through->second)}};
      list.push_back(p);
    }
    out["points"] = list;
  }
  if (!spec.sections.empty()) {
    Json list = Json::array();
    for (const auto& s : spec.sections) {
      list.push_back(Json{{"c0", nf_json(s.c0)}, {"c1", nf_json(s.c1)}, {"c2", nf_json(s.c2)}});
    }
    out["sections"] = list;
  }
  out["allow_quadratic_extension"] = spec.allow_quadratic_extension;
  out["params"] = params_json(spec.params);
  out["output"] = Json{{"dir", spec.out_dir}};
  return out;
}

bool operator==(const RunSpec& a, const RunSpec& b) { return to_json(a) == to_json(b); }

}  // namespace ellfib::cli
