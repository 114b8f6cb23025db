#include "report.hpp"

#include <sstream>

namespace quat::report {

namespace {

std::string joined(const std::vector<PointMask>& v) {
  std::string s;
  for (auto m : v) s += (s.empty() ? "" : " ") + mask_str(m);
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string tangency_name(Tangency t) {
  switch (t) {
    case Tangency::None: return "none";
    case Tangency::ConicSecant: return "conic+secant";
    case Tangency::Triangle: return "triangle";
  }
  return "?";
}

}  // namespace

ordered_json pair_json(const Pair& q) {
  ordered_json j;
  j["lines"] = joined(line_flats(q));
  j["conics"] = joined(conic_flats(q));
  j["triples"] = joined(q.triples());
  j["sextuples"] = joined(q.sextuples());
  return j;
}

ordered_json configuration_json(const Configuration& p) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < p.points.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < p.points.cols(); ++c) row.push_back(p.points(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

std::string summary_line(const Enumeration& e) {
  return std::to_string(e.orbits.size()) + " orbits / " + std::to_string(e.total_pairs) + " pairs / " +
         std::to_string(e.bezoutian_orbits) + " Bezoutian / " + std::to_string(e.tangency_orbits) + " tangency orbits";
}

ordered_json enumeration_json(const Enumeration& e, const std::vector<TableRow>& rows) {
  ordered_json j;
  j["orbits"] = e.orbits.size();
  j["pairs"] = e.total_pairs;
  j["bezoutian_orbits"] = e.bezoutian_orbits;
  j["bezoutian_pairs"] = e.bezoutian_pairs;
  j["tangency_orbits"] = e.tangency_orbits;
  ordered_json hist = ordered_json::object();
  for (const auto& [size, n] : e.size_histogram) hist[std::to_string(size)] = n;
  j["orbit_size_histogram"] = hist;
  ordered_json table = ordered_json::array();
  for (std::size_t k = 0; k < e.orbits.size(); ++k) {
    const auto& r = e.orbits[k];
    ordered_json o;
    o["index"] = r.index;
    o["orbit_size"] = r.orbit_size;
    o["pair"] = pair_json(r.display);
    o["canonical"] = pair_str(r.canonical);
    o["bezoutian"] = r.bezoutian;
    o["representable"] = representability_name(r.representable);
    if (r.bezoutian) {
      o["m_Q"] = r.m;
      o["conic_secants"] = r.profile->conic_secant_count;
      o["triangles"] = r.profile->triangle_count;
      o["tangency"] = tangency_name(r.profile->tangency);
    }
    o["reducibles"] = rows[k].reducibles;
    o["d_Q"] = rows[k].d;
    table.push_back(o);
  }
  j["table"] = table;
  return j;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "index,orbit,lines,conics,reducibles,d_Q\n";
  for (const auto& t : rows)
    os << t.index << ',' << t.orbit_size << ',' << csv_cell(t.lines) << ',' << csv_cell(t.conics) << ','
       << csv_cell(t.reducibles) << ',' << csv_cell(t.d) << '\n';
  return os.str();
}

std::string table_text(const Enumeration& e, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << summary_line(e) << '\n';
  os << "orbit sizes:";
  for (const auto& [size, n] : e.size_histogram) os << ' ' << size << 'x' << n;
  os << "\nBezoutian pairs: " << e.bezoutian_pairs << "\n\n";
  for (const auto& t : rows) {
    os << 'Q' << t.index << "\t" << t.orbit_size << "\tlines: " << t.lines << " ; conics: " << t.conics << "\t"
       << t.reducibles << "\td=" << t.d << '\n';
  }
  return os.str();
}

std::vector<std::string> table_diff(const std::vector<TableRow>& got, const std::vector<TableRow>& want) {
  std::vector<std::string> out;
  if (got.size() != want.size())
    out.push_back("row count " + std::to_string(got.size()) + " vs " + std::to_string(want.size()));
  std::map<int, const TableRow*> by;
  for (const auto& t : want) by[t.index] = &t;
  for (const auto& t : got) {
    auto it = by.find(t.index);
    if (it == by.end()) {
      out.push_back("Q" + std::to_string(t.index) + ": not in golden table");
      continue;
    }
    const TableRow& w = *it->second;
    auto cmp = [&](const char* what, const std::string& a, const std::string& b) {
      if (a != b) out.push_back("Q" + std::to_string(t.index) + " " + what + ": '" + a + "' vs '" + b + "'");
    };
    cmp("orbit", std::to_string(t.orbit_size), std::to_string(w.orbit_size));
    cmp("lines", t.lines, w.lines);
    cmp("conics", t.conics, w.conics);
    cmp("reducibles", t.reducibles, w.reducibles);
    cmp("d", t.d, w.d);
  }
  return out;
}

ordered_json poset_json(const PosetGraph& g) {
  ordered_json j;
  ordered_json nodes = ordered_json::array();
  for (int n : g.nodes) nodes.push_back({{"index", n}, {"layer", g.layer.at(n)}, {"d_Q", g.d.at(n)}});
  j["nodes"] = nodes;
  ordered_json covers = ordered_json::array();
  for (const auto& c : g.covers)
    covers.push_back({{"upper", c.upper}, {"lower", c.lower}, {"kind", cover_kind_name(c.kind)}});
  j["covers"] = covers;
  j["top"] = g.top;
  j["layer0"] = g.bottom;
  j["minimal"] = g.minimal;
  return j;
}

std::string poset_text(const PosetGraph& g) {
  std::ostringstream os;
  os << g.nodes.size() << " strata, " << g.covers.size() << " covers; top Q" << g.top << ", layer 0: Q" << g.bottom
     << "; minimal:";
  for (int m : g.minimal) os << " Q" << m;
  os << '\n';
  for (int layer = 8; layer >= 0; --layer) {
    os << "layer " << layer << ':';
    for (int n : g.nodes)
      if (g.layer.at(n) == layer) os << " Q" << n << "(d=" << g.d.at(n) << ")";
    os << '\n';
  }
  for (const auto& c : g.covers) os << 'Q' << c.upper << " > Q" << c.lower << "  " << cover_kind_name(c.kind) << '\n';
  return os.str();
}

namespace {

ordered_json member_json(const Member& m) {
  ordered_json j;
  j["root"] = m.root.str();
  j["multiplicity"] = m.root.multiplicity;
  j["type"] = type_name(m.type);
  j["cubic"] = m.cubic.str();
  j["factors"] = m.factors.str();
  j["lines_through"] = joined(m.line_points);
  return j;
}

}  // namespace

ordered_json count_json(const CountRecord& r) {
  ordered_json j;
  j["label"] = r.label;
  if (!r.error.empty()) {
    j["error"] = r.error;
    return j;
  }
  j["matrix"] = configuration_json(r.p);
  j["quatroid"] = pair_json(r.quatroid);
  j["orbit"] = r.orbit ? ordered_json(*r.orbit) : ordered_json(nullptr);
  j["bezoutian"] = r.bezoutian;
  if (r.pencil) {
    const auto& pi = *r.pencil;
    j["d_p"] = pi.d;
    j["r_p"] = pi.r ? ordered_json(*pi.r) : ordered_json("infinite");
    j["discriminant"] = pi.disc.str();
    ordered_json ms = ordered_json::array();
    for (const auto& m : pi.members) ms.push_back(member_json(m));
    j["members"] = ms;
    j["irrational_roots"] = pi.irrational_degree;
  } else if (r.violation.empty()) {
    j["d_p"] = 0;
    j["r_p"] = "infinite";
  }
  if (r.base_locus) {
    j["base_locus"] = r.base_locus->reduced()
                          ? ordered_json("reduced")
                          : ordered_json("nonreduced at point " + std::to_string(*r.base_locus->nonreduced + 1));
    if (r.base_locus->reduced()) {
      const auto& p9 = r.base_locus->points[8];
      j["cayley_bacharach_point"] = {p9(0).str(), p9(1).str(), p9(2).str()};
    }
  }
  if (r.certificate) j["nonrational_certificate"] = r.certificate->str();
  if (!r.violation.empty()) j["consistency_violation"] = r.violation;
  return j;
}

std::string count_text(const CountRecord& r) {
  std::ostringstream os;
  os << "== " << r.label << '\n';
  if (!r.error.empty()) {
    os << "input error: " << r.error << '\n';
    return os.str();
  }
  os << "quatroid: " << pair_flats_str(r.quatroid);
  if (r.orbit) os << "  (orbit Q" << *r.orbit << ")";
  os << '\n';
  if (r.pencil) {
    const auto& pi = *r.pencil;
    os << "d_p = " << pi.d << ", r_p = " << (pi.r ? std::to_string(*pi.r) : std::string("infinite")) << '\n';
    for (const auto& m : pi.members)
      os << "  " << m.root.str() << " x" << m.root.multiplicity << "  " << type_name(m.type) << "  " << m.factors.str()
         << '\n';
    if (pi.irrational_degree) os << "  irrational roots: " << pi.irrational_degree << '\n';
  } else if (r.violation.empty()) {
    os << "not Bezoutian: no finite pencil, d_p = 0\n";
  }
  if (r.base_locus) {
    if (r.base_locus->reduced()) {
      const auto& p9 = r.base_locus->points[8];
      os << "base locus: reduced, ninth point [" << p9(0).str() << ":" << p9(1).str() << ":" << p9(2).str() << "]\n";
    } else {
      os << "base locus: nonreduced at point " << *r.base_locus->nonreduced + 1 << '\n';
    }
  }
  if (r.certificate) os << "no rational cubic: " << r.certificate->str() << '\n';
  if (!r.violation.empty()) os << "CONSISTENCY VIOLATION: " << r.violation << '\n';
  return os.str();
}

std::string count_csv_header() { return "label,orbit,lines,conics,bezoutian,d_p,r_p,base_locus,certificate,status\n"; }

std::string count_csv_row(const CountRecord& r) {
  std::ostringstream os;
  os << csv_cell(r.label) << ',';
  if (!r.error.empty()) {
    os << ",,,,,,,," << csv_cell("input error: " + r.error) << '\n';
    return os.str();
  }
  os << (r.orbit ? std::to_string(*r.orbit) : "") << ',' << csv_cell(joined(line_flats(r.quatroid))) << ','
     << csv_cell(joined(conic_flats(r.quatroid))) << ',' << (r.bezoutian ? "yes" : "no") << ',';
  if (r.pencil)
    os << r.pencil->d << ',' << (r.pencil->r ? std::to_string(*r.pencil->r) : "inf");
  else
    os << (r.violation.empty() ? "0,inf" : ",");
  os << ',';
  if (r.base_locus) os << (r.base_locus->reduced() ? "reduced" : "nonreduced@" + std::to_string(*r.base_locus->nonreduced + 1));
  os << ',' << (r.certificate ? csv_cell(r.certificate->str()) : "") << ','
     << (r.violation.empty() ? "ok" : csv_cell("violation: " + r.violation)) << '\n';
  return os.str();
}

std::string quad_ext_str(const QuadExt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace quat::report
