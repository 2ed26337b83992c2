#include "ellfib/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "ellfib/cli/report.hpp"
#include "ellfib/enriques/double_cover.hpp"
#include "ellfib/exactmath/enumerate.hpp"
#include "ellfib/fibration/cycle.hpp"

namespace ellfib::cli {
namespace {

struct CommandInfo {
  Command command;
  std::string_view name;
};
constexpr CommandInfo kCommands[] = {
    {Command::Analyze, "analyze"},
    {Command::Densify, "densify"},
    {Command::Probe, "probe"},
    {Command::EnriquesRestrict, "enriques-restrict"},
    {Command::EnriquesBitangents, "enriques-bitangents"},
    {Command::EnriquesModel, "enriques-model"},
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void mismatch(const std::string& field, Command c) {
  throw SpecError(Diagnostic{Diagnostic::Kind::Validation, field, 0, 0,
                             std::string(command_name(c)) + " needs this block"});
}

const FibrationModel& need_fibration(const RunSpec& spec, Command c) {
  if (!spec.fibration) mismatch("/fibration", c);
  return *spec.fibration;
}

const std::vector<Multisection>& need_multisections(const RunSpec& spec, Command c) {
  need_fibration(spec, c);
  if (spec.multisections.empty()) mismatch("/multisection", c);
  return spec.multisections;
}

RamificationData need_cone(const RunSpec& spec, Command c) {
  if (!spec.cone) mismatch("/cone_quartic", c);
  return restrict_quartic_to_cone(*spec.cone);
}

Json nf_point_json(const Point<NfElem>& p) {
  if (p.is_infinity()) return "inf";
  return Json{{"x", nf_json(p.x())}, {"y", nf_json(p.y())}};
}

Json fibration_summary(const FibrationModel& f) {
  Json prov = Json::array();
  for (const auto& p : f.provenance()) prov.push_back(p);
  return Json{{"equation", f.describe()},
              {"a", ratfn_json(f.a())},
              {"b", ratfn_json(f.b())},
              {"discriminant", f.discriminant().str()},
              {"infinity_weight", f.infinity_weight()},
              {"provenance", prov}};
}

Json singular_fibers_json(const FibrationModel& f, std::vector<std::string>& rows) {
  Json out = Json::array();
  for (const auto& b : f.singular_parameters()) {
    if (f.has_pole_at(b)) {
      out.push_back(Json{{"b", rat_json(b)}, {"pole", true}});
      rows.push_back("b=" + b.str() + ": pole of a or b");
      continue;
    }
    const auto ft = fiber_type(f, b);
    Json row{{"b", rat_json(b)}, {"ord_delta", ft.ord_delta}};
    row["ord_c4"] = ft.ord_c4 ? Json(*ft.ord_c4) : Json(nullptr);
    row["type"] = ft.label;
    row["irreducible"] = ft.irreducible ? Json(*ft.irreducible) : Json(nullptr);
    row["row"] = ft.describe();
    rows.push_back(ft.describe());
    out.push_back(std::move(row));
  }
  return out;
}

Json ramification_json(const RamificationReport& rep) {
  Json points = Json::array();
  for (const auto& p : rep.points) {
    points.push_back(Json{{"b", nf_json(p.b)},
                          {"field", field_json(p.b.field())},
                          {"point", p.point ? nf_point_json(*p.point) : Json(nullptr)},
                          {"multiplicity", p.multiplicity},
                          {"salient", p.salient},
                          {"kind", p.kind}});
  }
  return Json{{"points", points},
              {"unresolved_degree", rep.unresolved_degree},
              {"unresolved_salient", rep.unresolved_salient},
              {"saliently_ramified", rep.any_salient()}};
}

CommandResult analyze(const RunSpec& spec) {
  const auto& f = need_fibration(spec, Command::Analyze);
  CommandResult out;
  Json doc{{"fibration", fibration_summary(f)}};
  doc["singular_fibers"] = singular_fibers_json(f, out.summary);
  Json ms = Json::array();
  for (const auto& m : spec.multisections) {
    const auto rep = ramification_points(f, m);
    ms.push_back(Json{{"multisection", m.describe()}, {"degree", m.degree()}, {"ramification", ramification_json(rep)}});
    out.summary.push_back(m.describe() + ": degree " + std::to_string(m.degree()) + ", " +
                          std::to_string(rep.points.size()) + " ramification points" +
                          (rep.unresolved_degree > 0
                               ? " (+ degree " + std::to_string(rep.unresolved_degree) + " unresolved)"
                               : std::string()) +
                          ", " +
                          (rep.any_salient() ? "saliently ramified" : "no salient ramification"));
  }
  doc["multisections"] = ms;
  out.artifacts.push_back({"analysis.json", dump(doc)});
  return out;
}

DensifyParams densify_params(const Params& p) {
  return DensifyParams{p.height_bound, p.k_max, p.torsion_bound, p.override_bound, p.threads};
}

// Everything in the artifact must be independent of the thread count.
Json run_params_json(const Params& p) {
  return Json{{"height_bound", p.height_bound},
              {"k_max", p.k_max},
              {"torsion_bound", p.torsion_bound},
              {"override_bound", p.override_bound}};
}

std::string density_line(const DensityReport& r) {
  return "certified " + std::to_string(r.fibers_certified) + " fibers (" + std::to_string(r.base_points_certified) +
         " of " + std::to_string(r.base_points_attempted) + " base points), emitted " +
         std::to_string(r.points_emitted) + " points";
}

CommandResult densify_command(const RunSpec& spec) {
  const auto& f = need_fibration(spec, Command::Densify);
  const auto& ms = need_multisections(spec, Command::Densify);
  const auto params = densify_params(spec.params);
  CommandResult out;
  Json doc{{"fibration", f.describe()}, {"params", run_params_json(spec.params)}};
  std::vector<EmittedPoint> points;
  if (!spec.family) {
    auto report = densify(f, ms.front(), params);
    doc["multisection"] = ms.front().describe();
    doc["report"] = density_report_json(report);
    out.summary.push_back(density_line(report));
    points = std::move(report.points);
  } else {
    Json members = Json::array();
    for (const auto& m : ms) members.push_back(m.describe());
    doc["family"] = members;
    const auto result = family_strategy(f, ms, params);
    if (const auto* c = std::get_if<FamilyChoice>(&result)) {
      doc["chosen"] = c->index;
      doc["multisection"] = ms[c->index].describe();
      doc["report"] = density_report_json(c->report);
      out.summary.push_back("family member " + std::to_string(c->index) + " (" + ms[c->index].describe() +
                            "): " + density_line(c->report));
      points = c->report.points;
    } else {
      doc["chosen"] = nullptr;
      Json reports = Json::array();
      for (const auto& r : std::get<Exhausted>(result).reports) reports.push_back(density_report_json(r));
      doc["reports"] = reports;
      out.summary.push_back("family exhausted: no member certified a fiber");
    }
  }
  doc["points_csv"] = "points.csv";
  out.artifacts.push_back({"report.json", dump(doc)});
  out.artifacts.push_back({"points.csv", points_csv(points)});
  return out;
}

CommandResult probe(const RunSpec& spec) {
  const auto& f = need_fibration(spec, Command::Probe);
  const auto& ms = need_multisections(spec, Command::Probe);
  const auto candidates = sample_parameters(f, spec.params);
  CommandResult out;
  Json results = Json::array();
  for (const auto& m : ms) {
    std::vector<Rat> used;
    Json dropped = Json::array();
    for (const auto& b : candidates) {
      try {
        fiber_cycle(f, m, b);
      } catch (const Error& e) {
        if (e.code() == Errc::TraceFieldTooLarge) {
          dropped.push_back(Json{{"b", rat_json(b)}, {"reason", "trace field too large"}});
          continue;
        }
        if (e.code() != Errc::SingularFiberSkip) throw;
      }
      used.push_back(b);
    }
    const auto verdict = order_probe(f, m, used, spec.params.m_max);
    Json v;
    if (const auto* o = std::get_if<OrderEvidence>(&verdict)) {
      v = Json{{"kind", "Order"}, {"order", o->order}, {"fibers", o->fibers}, {"skipped", o->skipped}};
    } else {
      const auto& n = std::get<NoOrderUpTo>(verdict);
      v = Json{{"kind", "NoOrderUpTo"}, {"m_max", n.m_max}, {"witness", rat_json(n.witness)}};
    }
    v["text"] = to_string(verdict);
    Json samples = Json::array();
    for (const auto& b : used) samples.push_back(rat_json(b));
    results.push_back(Json{{"multisection", m.describe()},
                           {"degree", m.degree()},
                           {"samples", samples},
                           {"dropped", dropped},
                           {"verdict", v}});
    out.summary.push_back(m.describe() + ": " + to_string(verdict));
  }
  Json doc{{"fibration", f.describe()}, {"m_max", spec.params.m_max}, {"probes", results}};
  out.artifacts.push_back({"probe.json", dump(doc)});
  return out;
}

// F(t, z) written out by monomials, highest z-power first.
std::string bivariate_string(const std::array<Poly, 5>& f) {
  std::string out;
  for (int j = 4; j >= 0; --j) {
    const auto& p = f[static_cast<std::size_t>(j)];
    for (int i = p.degree(); i >= 0; --i) {
      const Rat c = p.coeff(i);
      if (c.is_zero()) continue;
      std::string mono;
      if (i > 0) mono += i == 1 ? "t" : "t^" + std::to_string(i);
      if (j > 0) mono += (mono.empty() ? "" : "*") + std::string(j == 1 ? "z" : "z^" + std::to_string(j));
      const Rat mag = c.abs();
      std::string term = mono.empty() ? mag.str() : (mag.is_one() ? mono : mag.str() + "*" + mono);
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
  }
  return out.empty() ? "0" : out;
}

Json chart_json(const std::array<Poly, 5>& f) {
  Json out = Json::array();
  for (const auto& p : f) out.push_back(poly_json(p));
  return out;
}

CommandResult enriques_restrict(const RunSpec& spec) {
  const auto r = need_cone(spec, Command::EnriquesRestrict);
  const auto sing = singular_points(r);
  Json pts = Json::array();
  for (const auto& p : sing.points) {
    FieldPtr field = p.t.field() ? p.t.field() : p.z.field();
    pts.push_back(Json{{"t", nf_json(p.t)}, {"z", nf_json(p.z)}, {"field", field_json(field)}});
  }
  Json doc{{"F", bivariate_string(r.f)},
           {"f", chart_json(r.f)},
           {"chart_infinity", chart_json(r.swapped)},
           {"F_infinity", bivariate_string(r.swapped)},
           {"c4", rat_json(r.c4)},
           {"singular_points", pts},
           {"unresolved_singular_degree", sing.unresolved_degree}};
  CommandResult out;
  out.summary.push_back("F = " + bivariate_string(r.f));
  out.summary.push_back(std::to_string(sing.points.size()) + " singular points in the affine chart");
  out.artifacts.push_back({"restriction.json", dump(doc)});
  return out;
}

Json candidate_json(const BitangentCandidate& c) {
  return Json{{"lambda", nf_json(c.lambda)},
              {"c0", nf_json(c.section.c0)},
              {"c1", nf_json(c.section.c1)},
              {"c2", nf_json(c.section.c2)},
              {"field", field_json(c.section.field())},
              {"second_tangency", c.describe_second_tangency()},
              {"tangent_at_infinity", c.tangent_at_infinity}};
}

CommandResult enriques_bitangents(const RunSpec& spec) {
  const auto r = need_cone(spec, Command::EnriquesBitangents);
  if (spec.points.empty()) mismatch("/points", Command::EnriquesBitangents);

  // Deterministic merge: searches are listed by (t0, z0), then input order.
  std::vector<std::size_t> order(spec.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = spec.points[a];
    const auto& q = spec.points[b];
    return p.t0 != q.t0 ? p.t0 < q.t0 : p.z0 < q.z0;
  });

  struct Slot {
    std::optional<BitangentSearch> search;
    std::optional<Error> error;
  };
  std::vector<Slot> slots(order.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < order.size();) {
      const auto& q = spec.points[order[i]];
      try {
        slots[i].search = bitangent_sections(r, q.t0, q.z0, q.through);
      } catch (const Error& e) {
        slots[i].error = e;
      }
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(spec.params.threads, static_cast<unsigned>(order.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CommandResult out;
  Json searches = Json::array();
  int total = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& q = spec.points[order[i]];
    Json s{{"t0", rat_json(q.t0)}, {"z0", rat_json(q.z0)}};
    if (q.through) s["through"] = Json{{"t", rat_json(q.through->first)}, {"z", rat_json(q.through->second)}};
    const std::string where = "(" + q.t0.str() + ", " + q.z0.str() + ")";
    if (slots[i].error) {
      s["error"] = Json{{"code", std::string(to_string(slots[i].error->code()))}, {"message", slots[i].error->what()}};
      out.diagnostics.push_back(Diagnostic{Diagnostic::Kind::Computation, "/points/" + std::to_string(order[i]), 0, 0,
                                           slots[i].error->what()});
      out.status = kExitComputation;
      out.summary.push_back("P = " + where + ": " + std::string(to_string(slots[i].error->code())));
    } else {
      const auto& b = *slots[i].search;
      s["discriminant"] = poly_json(b.discriminant);
      s["rejected"] = b.rejected;
      s["unresolved_degree"] = b.unresolved_degree;
      Json cands = Json::array();
      for (const auto& c : b.candidates) cands.push_back(candidate_json(c));
      s["candidates"] = cands;
      total += static_cast<int>(b.candidates.size());
      out.summary.push_back("P = " + where + ": " + std::to_string(b.candidates.size()) + " bitangent sections");
    }
    searches.push_back(std::move(s));
  }
  Json doc{{"F", bivariate_string(r.f)}, {"searches", searches}, {"total_candidates", total}};
  out.artifacts.push_back({"bitangents.json", dump(doc)});
  return out;
}

Json double_cover_json(const FibrationModel& k3, const RamificationData& r, const SectionConic& s) {
  const auto d = multisection_from_section(r, s);
  Json tang = Json::array();
  for (const auto& t : d.tangencies) {
    Json row = t.at_infinity ? Json{{"t", "inf"}, {"field", "Q"}}
                             : Json{{"t", nf_json(t.t)}, {"field", field_json(t.t.field())}};
    row["multiplicity"] = t.multiplicity;
    row["salient"] = t.salient;
    tang.push_back(std::move(row));
  }
  Json out{{"c0", nf_json(s.c0)},
           {"c1", nf_json(s.c1)},
           {"c2", nf_json(s.c2)},
           {"G", poly_json(d.g)},
           {"stripped", poly_json(d.stripped)},
           {"remainder", poly_json(d.remainder)},
           {"branch_points", d.branch_points},
           {"genus", d.genus},
           {"split", d.split},
           {"tangencies", tang},
           {"unresolved_tangency_degree", d.unresolved_tangency_degree}};
  if (d.quartic) {
    Json q = Json::array();
    for (const auto& c : d.quartic->coefficients()) q.push_back(rat_json(c));
    out["quartic"] = q;
    if (const auto& m = d.quartic->marked_point()) {
      out["marked"] = m->at_infinity ? Json{{"infinity", rat_json(m->w)}}
                                     : Json{{"z", rat_json(m->z)}, {"w", rat_json(m->w)}};
    } else {
      out["marked"] = nullptr;
    }
  }
  if (k3.quartic_source()) {
    const auto m = k3_multisection(k3, s, d);
    out["multisection_degree"] = m.degree();
    out["ramification"] = ramification_json(ramification_points(k3, m));
  }
  return out;
}

CommandResult enriques_model(const RunSpec& spec) {
  const auto r = need_cone(spec, Command::EnriquesModel);
  const auto k3 = k3_weierstrass_model(r, spec.allow_quadratic_extension);
  CommandResult out;
  Json doc{{"F", bivariate_string(r.f)}, {"model", fibration_summary(k3)}};
  std::vector<std::string> rows;
  doc["singular_fibers"] = singular_fibers_json(k3, rows);

  const auto samples = sample_parameters(k3, spec.params);
  Json jcheck = Json::array();
  bool all_equal = true;
  for (const auto& t : samples) {
    if (!k3.is_smooth_at(t) || !r.fiber_is_smooth(t)) continue;
    const auto inv = QuarticInvariants<Rat>::of(r.fiber(t));
    const Rat four_i3 = Rat(4) * inv.I * inv.I * inv.I;
    const Rat j_quartic = Rat(1728) * four_i3 / inv.discriminant_times_27();
    const Rat j_model = k3.smooth_fiber(t).j_invariant();
    all_equal = all_equal && j_quartic == j_model;
    jcheck.push_back(Json{{"t", rat_json(t)}, {"j_fiber_quartic", rat_json(j_quartic)}, {"j_weierstrass", rat_json(j_model)}});
  }
  doc["j_check"] = jcheck;
  doc["j_preserved"] = all_equal;
  out.summary.push_back("K3 model " + k3.describe());
  out.summary.push_back(std::string("j-invariant ") + (all_equal ? "preserved" : "NOT preserved") + " on " +
                        std::to_string(jcheck.size()) + " sampled fibers");

  if (k3.quartic_source()) {
    const auto e2 = k3_second_section(k3);
    doc["second_section"] = e2.is_zero() ? Json("zero") : Json{{"x", ratfn_json(e2.x())}, {"y", ratfn_json(e2.y())}};
    const auto v = section_difference_order(k3, Section(), e2, samples);
    doc["e1_minus_e2"] = to_string(v);
    out.summary.push_back("e1 - e2: " + to_string(v));
  } else {
    doc["second_section"] = nullptr;
  }

  Json sections = Json::array();
  for (const auto& s : spec.sections) {
    auto j = double_cover_json(k3, r, s);
    out.summary.push_back("section z = " + s.c0.str() + " + (" + s.c1.str() + ")*t + (" + s.c2.str() +
                          ")*t^2: genus " + std::to_string(j["genus"].get<int>()));
    sections.push_back(std::move(j));
  }
  doc["sections"] = sections;
  out.artifacts.push_back({"model.json", dump(doc)});
  return out;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& c : kCommands) {
    if (c.name == name) return c.command;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  for (const auto& info : kCommands) {
    if (info.command == c) return info.name;
  }
  return "?";
}

std::vector<Rat> sample_parameters(const FibrationModel& f, const Params& p) {
  if (!p.samples.empty()) return p.samples;
  std::vector<Rat> out;
  for (const auto& t : enumerate_rationals(p.height_bound)) {
    if (f.is_smooth_at(t)) out.push_back(t);
  }
  return out;
}

CommandResult run_command(Command c, const RunSpec& spec) {
  switch (c) {
    case Command::Analyze:
      return analyze(spec);
    case Command::Densify:
      return densify_command(spec);
    case Command::Probe:
      return probe(spec);
    case Command::EnriquesRestrict:
      return enriques_restrict(spec);
    case Command::EnriquesBitangents:
      return enriques_bitangents(spec);
    case Command::EnriquesModel:
      return enriques_model(spec);
  }
  throw Error(Errc::Internal, "unknown command");
}

void write_artifacts(const CommandResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& a : result.artifacts) {
    std::ofstream out(dir / a.name, std::ios::binary | std::ios::trunc);
    out << a.content;
    if (!out) throw std::runtime_error("cannot write " + (dir / a.name).string());
  }
}

}  // namespace ellfib::cli
