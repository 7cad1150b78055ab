#include "trop/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trop {

using Json = nlohmann::ordered_json;

namespace {

Json rational_list(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

Json exponent_list(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) {
    if (!x.fits_slong_p()) throw ParseError("exponent out of range");
    arr.push_back(static_cast<long>(x.get_si()));
  }
  return arr;
}

Json polyhedron_json(const Polyhedron& p) {
  auto rows = [](const std::vector<Constraint>& cs) {
    Json arr = Json::array();
    for (const Constraint& c : cs) {
      Json row;
      row["normal"] = rational_list(c.normal);
      row["rhs"] = rat_to_string(c.rhs);
      arr.push_back(std::move(row));
    }
    return arr;
  };
  Json out;
  out["equalities"] = rows(p.eqs);
  out["inequalities"] = rows(p.ineqs);
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    default:
      return "vacuous";
  }
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance file: top level must be an object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw ParseError("instance file: unsupported or missing version (expected 1)");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("instance file: missing ambient dimension n");
  const int n = doc["n"].get<int>();
  if (n < 1) throw ParseError("instance file: n must be >= 1");
  if (!doc.contains("polynomials") || !doc["polynomials"].is_array() ||
      doc["polynomials"].empty())
    throw ParseError("instance file: missing polynomials");

  Instance inst;
  inst.n = n;
  for (const Json& poly : doc["polynomials"]) {
    if (!poly.is_object() || !poly.contains("support") || !poly.contains("coeffs"))
      throw ParseError("instance file: polynomial needs support and coeffs");
    const Json& sup = poly["support"];
    const Json& cof = poly["coeffs"];
    if (!sup.is_array() || !cof.is_array() || sup.size() != cof.size())
      throw ParseError("instance file: coeffs length must equal support length");
    std::vector<IntVec> points;
    RatVec coeffs;
    for (const Json& row : sup) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw ParseError("instance file: exponent vector length must equal n");
      IntVec p(n);
      for (int c = 0; c < n; ++c) {
        if (!row[c].is_number_integer())
          throw ParseError("instance file: exponents must be integers");
        p[c] = Int(row[c].get<long>());
      }
      points.push_back(std::move(p));
    }
    for (const Json& val : cof) {
      if (!val.is_string())
        throw ParseError("instance file: coefficients must be \"p/q\" strings");
      coeffs.push_back(parse_rational(val.get<std::string>()));
    }
    try {
      inst.polynomials.push_back(make_polynomial(n, std::move(points), std::move(coeffs)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("instance file: ") + e.what());
    }
  }
  return inst;
}

std::string instance_to_json(const Instance& instance) {
  Json doc;
  doc["version"] = 1;
  doc["n"] = instance.n;
  Json polys = Json::array();
  for (const TropicalPolynomial& f : instance.polynomials) {
    Json poly;
    Json sup = Json::array();
    for (const IntVec& p : f.support.points) sup.push_back(exponent_list(p));
    poly["support"] = std::move(sup);
    poly["coeffs"] = rational_list(f.coeffs);
    polys.push_back(std::move(poly));
  }
  doc["polynomials"] = std::move(polys);
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  return parse_instance(load_text(path));
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hypersurface_to_json(const TropicalHypersurface& surface) {
  Json doc;
  doc["version"] = 1;
  doc["command"] = "hypersurface";
  doc["n"] = surface.n;
  doc["cell_count"] = surface.cells.size();
  Json cells = Json::array();
  for (const HyperCell& c : surface.cells) {
    Json cell = polyhedron_json(c.cell);
    cell["weight"] = rat_to_string(Rat(c.weight));
    Json edge = Json::array();
    edge.push_back(exponent_list(c.dual_from));
    edge.push_back(exponent_list(c.dual_to));
    cell["dual_edge"] = std::move(edge);
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  Json doc;
  doc["version"] = 1;
  doc["command"] = "verify";
  doc["n"] = report.n;
  doc["k"] = report.k;
  doc["seeds"] = report.seeds;
  doc["verdict"] = verdict_name(report.verdict);
  doc["component_count"] = report.components.groups.size();
  doc["stable_cell_count"] = report.stable.cells.size();
  doc["total_multiplicity"] = rat_to_string(Rat(report.stable.total_multiplicity()));

  Json comps = Json::array();
  for (std::size_t g = 0; g < report.component_info.size(); ++g) {
    const ComponentInfo& info = report.component_info[g];
    Json comp;
    comp["index"] = g;
    comp["cover_cells"] = info.cover_cells;
    if (info.witness_cell) {
      Json witness;
      witness["stable_cell"] = *info.witness_cell;
      witness["point"] = rational_list(*info.witness_point);
      comp["witness"] = std::move(witness);
    } else {
      comp["witness"] = nullptr;
    }
    comps.push_back(std::move(comp));
  }
  doc["components"] = std::move(comps);

  Json cells = Json::array();
  for (std::size_t i = 0; i < report.stable.cells.size(); ++i) {
    const StableCell& c = report.stable.cells[i];
    Json cell;
    cell["index"] = i;
    cell["dim"] = c.dim;
    cell["multiplicity"] = rat_to_string(Rat(c.multiplicity));
    cell["point"] = rational_list(c.interior);
    Json contributors = Json::array();
    for (const Contributor& con : c.contributors) {
      Json entry;
      entry["cells"] = std::vector<int>{con.i, con.j};
      entry["multiplicity"] = rat_to_string(Rat(con.local_multiplicity));
      contributors.push_back(std::move(entry));
    }
    cell["contributors"] = std::move(contributors);
    cells.push_back(std::move(cell));
  }
  doc["stable_cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

std::string subset_report_to_json(const SubsetSeedingReport& report, int n, int k,
                                  const std::vector<long>& seeds) {
  Json doc;
  doc["version"] = 1;
  doc["command"] = "subset-experiment";
  doc["n"] = n;
  doc["k"] = k;
  doc["seeds"] = seeds;
  doc["vacuous"] = report.vacuous;
  doc["component_count"] = report.component_count;
  Json points = Json::array();
  for (const auto& rec : report.points) {
    Json p;
    std::vector<int> one_based(rec.subset);
    for (int& idx : one_based) ++idx;
    p["subset"] = one_based;
    p["point"] = rational_list(rec.point);
    p["multiplicity"] = rat_to_string(Rat(rec.multiplicity));
    p["component"] = rec.component;
    p["on_all_surfaces"] = rec.component >= 0;
    points.push_back(std::move(p));
  }
  doc["points"] = std::move(points);
  doc["every_component_witnessed"] = report.every_component_witnessed;
  return doc.dump(2) + "\n";
}

std::string corpus_report_to_json(int n, int k, int degree,
                                  const std::vector<CorpusEntry>& entries) {
  Json doc;
  doc["version"] = 1;
  doc["command"] = "corpus";
  doc["params"] = {{"n", n}, {"k", k}, {"degree", degree}};
  doc["count"] = entries.size();
  int pass = 0, fail = 0, vacuous = 0;
  Json rows = Json::array();
  for (const CorpusEntry& e : entries) {
    Json row;
    row["seed"] = e.seed;
    row["verdict"] = verdict_name(e.audit.verdict);
    row["components"] = e.audit.component_count;
    row["stable_cells"] = e.audit.stable_count;
    row["total_multiplicity"] = rat_to_string(Rat(e.audit.total_multiplicity));
    if (e.audit.bernstein)
      row["bernstein"] = rat_to_string(Rat(*e.audit.bernstein));
    row["balanced"] = e.audit.surfaces_balanced && e.audit.stable_balanced;
    row["codim_additive"] = e.audit.codim_additive;
    row["perturbation_independent"] = e.audit.perturbation_independent;
    rows.push_back(std::move(row));
    switch (e.audit.verdict) {
      case Verdict::Pass:
        ++pass;
        break;
      case Verdict::Fail:
        ++fail;
        break;
      default:
        ++vacuous;
    }
  }
  doc["instances"] = std::move(rows);
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"vacuous", vacuous}};
  return doc.dump(2) + "\n";
}

}  // namespace trop
