#include "report.hpp"
#include "svg.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef QUAT_DATA_DIR
#define QUAT_DATA_DIR "data"
#endif

using namespace quat;
using report::ordered_json;

namespace {

enum Exit { kOk = 0, kInputError = 1, kViolation = 2, kInconclusive = 3 };

struct RunConfig {
  std::string command;
  std::string data_dir = QUAT_DATA_DIR;
  std::string matroids, index, reps, golden, out;
  std::string format;
  std::uint64_t seed = 0;
  int budget = 4000;
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  bool poset = false;
  bool label_by_d = false;
  bool no_golden = false;
  std::vector<std::string> targets;  // orbit indices, pair literals, matrices or files
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string data_path(const RunConfig& cfg, const std::string& given, const char* file) {
  return given.empty() ? (std::filesystem::path(cfg.data_dir) / file).string() : given;
}

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw InputError("no such file: " + path);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InputError("format '" + f + "' not supported here (use " + list + ")");
}

const std::map<int, Pair>& index_map(const RunConfig& cfg) {
  static std::map<int, Pair> m = [&] {
    const std::string path = data_path(cfg, cfg.index, "orbit_index.txt");
    require_file(path);
    return load_index_map(path);
  }();
  return m;
}

std::optional<int> orbit_of(const RunConfig& cfg, const Pair& q) {
  static std::map<Pair, int> by = [&] {
    std::map<Pair, int> b;
    for (const auto& [i, p] : index_map(cfg)) b[canonical_form(p)] = i;
    return b;
  }();
  auto it = by.find(canonical_form(q));
  if (it == by.end()) return std::nullopt;
  return it->second;
}

// "41", "Q41" or a pair literal
std::pair<Pair, std::optional<int>> stratum(const RunConfig& cfg, const std::string& spec) {
  std::string s = spec;
  if (!s.empty() && (s[0] == 'Q' || s[0] == 'q')) s = s.substr(1);
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int i = std::stoi(s);
    auto it = index_map(cfg).find(i);
    if (it == index_map(cfg).end()) throw InputError("no orbit Q" + s);
    return {it->second, i};
  }
  Pair q;
  try {
    q = parse_pair(spec);
  } catch (const std::exception& e) {
    throw InputError("cannot read '" + spec + "' as an orbit index or a pair: " + e.what());
  }
  if (!weak_criteria(q).line_meets_conic) throw InputError("a line shares three points with a conic: " + spec);
  q = closure(q);
  if (!weak_criteria(q).all()) throw InputError("closure violates the weak criteria: " + spec);
  return {q, orbit_of(cfg, q)};
}

Enumeration run_enumeration(const RunConfig& cfg) {
  const std::string mpath = data_path(cfg, cfg.matroids, "matroids.txt");
  require_file(mpath);
  auto matroids = load_matroids(mpath);
  return generate_all_candidates(matroids, cfg.jobs, &index_map(cfg), classify_representability);
}

// checks that do not depend on any printed value
void internal_checks(const Enumeration& e) {
  long total = 0;
  for (const auto& r : e.orbits) {
    total += r.orbit_size;
    if (SymmetricGroup::kOrder % r.orbit_size) throw ConsistencyViolation("Q" + std::to_string(r.index) + ": orbit size does not divide 8!");
    if (r.bezoutian && r.profile->reducible_weight() != r.m)
      throw ConsistencyViolation("Q" + std::to_string(r.index) + ": 2i + 3j differs from m_Q");
    if (r.bezoutian && r.d != 12 - r.m - (r.profile->tangency != Tangency::None))
      throw ConsistencyViolation("Q" + std::to_string(r.index) + ": d_Q differs from 12 - m_Q - tangency");
    if (r.bezoutian && r.profile->tangency != Tangency::None && !(r.profile->below_q10 || r.profile->below_q77))
      throw ConsistencyViolation("Q" + std::to_string(r.index) + ": tangency without containment");
  }
  if (total != e.total_pairs) throw ConsistencyViolation("orbit sizes do not add up");
}

int cmd_enumerate(const RunConfig& cfg) {
  const std::string fmt = cfg.format.empty() ? (cfg.poset ? "dot" : "text") : cfg.format;
  check_format(fmt, {"text", "csv", "json", "dot"});
  if (fmt == "dot" && !cfg.poset) throw InputError("--format dot needs --poset");
  Enumeration e = run_enumeration(cfg);
  internal_checks(e);
  const PosetGraph g = build_poset(e.orbits);
  const auto rows = emit_table(e.orbits);

  int code = kOk;
  const bool compare = !cfg.no_golden && (!cfg.golden.empty() || cfg.matroids.empty());
  if (compare) {
    const std::string gpath = data_path(cfg, cfg.golden, "appendix_tables.tsv");
    require_file(gpath);
    auto diff = report::table_diff(rows, load_table(gpath));
    for (const auto& d : diff) std::cerr << "golden mismatch: " << d << '\n';
    if (!diff.empty()) code = kViolation;
  }

  if (cfg.poset) {
    emit(cfg, fmt == "dot" ? poset_dot(g, cfg.label_by_d) : fmt == "json" ? dump(report::poset_json(g)) : report::poset_text(g));
  } else if (fmt == "csv") {
    emit(cfg, report::table_csv(rows));
  } else if (fmt == "json") {
    emit(cfg, dump(report::enumeration_json(e, rows)));
  } else {
    emit(cfg, report::table_text(e, rows));
  }
  std::cerr << report::summary_line(e) << '\n';
  return code;
}

int cmd_poset(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.poset = true;
  c.no_golden = true;
  return cmd_enumerate(c);
}

std::vector<std::pair<std::string, std::string>> matrix_records(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add_stream = [&](std::istream& in, const std::string& origin) {
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto colon = line.find(':');
      if (colon == std::string::npos)
        out.push_back({origin + ":" + std::to_string(no), line});
      else
        out.push_back({line.substr(0, line.find_last_not_of(' ', colon - 1) + 1), line.substr(colon + 1)});
    }
  };
  if (!cfg.reps.empty()) {
    std::ifstream f(cfg.reps);
    if (!f) throw InputError("cannot open " + cfg.reps);
    add_stream(f, cfg.reps);
  }
  for (const auto& t : cfg.targets) {
    if (std::filesystem::is_regular_file(t)) {
      std::ifstream f(t);
      add_stream(f, t);
    } else {
      out.push_back({t, t});
    }
  }
  if (out.empty()) throw InputError("count needs matrices: inline, a file, or --reps");
  return out;
}

report::CountRecord count_one(const RunConfig& cfg, const std::string& label, const std::string& text) {
  report::CountRecord r;
  r.label = label;
  try {
    r.p = parse_configuration(text);
    if (r.p.size() != kPoints) throw DegenerateInput("expected 8 points, got " + std::to_string(r.p.size()));
    check_distinct(r.p);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  r.quatroid = quatroid_of(r.p);
  r.orbit = orbit_of(cfg, r.quatroid);
  r.bezoutian = is_bezoutian(r.quatroid);
  r.certificate = certify_nonrational(r.quatroid);
  try {
    r.pencil = count_rational(r.p);
    r.base_locus = cayley_bacharach(r.p, cfg.seed + 1);
    if (r.certificate && r.pencil->d != 0) r.violation = "certificate says d_p = 0 but " + std::to_string(r.pencil->d) + " were counted";
    if (auto nr = nonreduced_base_locus(r.p); nr != r.base_locus->nonreduced)
      r.violation = "the two nonreduced base locus tests disagree";
  } catch (const NotBezoutian&) {
    r.pencil.reset();
  } catch (const ConsistencyViolation& e) {
    r.violation = e.what();
  }
  return r;
}

int cmd_count(const RunConfig& cfg) {
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  check_format(fmt, {"text", "json", "csv"});
  int code = kOk;
  std::string text = fmt == "csv" ? report::count_csv_header() : "";
  ordered_json all = ordered_json::array();
  for (const auto& [label, m] : matrix_records(cfg)) {
    auto r = count_one(cfg, label, m);
    if (!r.error.empty()) {
      std::cerr << label << ": " << r.error << '\n';
      code = std::max(code, int(kInputError));
    }
    if (!r.violation.empty()) {
      std::cerr << label << ": consistency violation: " << r.violation << '\n';
      code = kViolation;
    }
    if (fmt == "json")
      all.push_back(report::count_json(r));
    else if (fmt == "csv")
      text += report::count_csv_row(r);
    else
      text += report::count_text(r);
  }
  emit(cfg, fmt == "json" ? dump(all) : text);
  return code;
}

int cmd_represent(const RunConfig& cfg) {
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  check_format(fmt, {"text", "json"});
  if (cfg.targets.size() != 1) throw InputError("represent takes one orbit index or pair");
  auto [q, idx] = stratum(cfg, cfg.targets[0]);
  ordered_json j;
  std::ostringstream os;
  j["target"] = cfg.targets[0];
  if (idx) j["orbit"] = *idx;
  j["pair"] = report::pair_json(q);
  os << "target: " << pair_flats_str(q) << (idx ? "  (orbit Q" + std::to_string(*idx) + ")" : "") << '\n';

  const Representability rep = classify_representability(q);
  j["representable"] = representability_name(rep);
  int code = kOk;
  if (rep == Representability::ComplexOnly) {
    const Q41Realization z = realize_Q41();
    ordered_json rows = ordered_json::array();
    os << "no real representative; a realization over Q(sqrt(-3)):\n";
    for (int r = 0; r < 3; ++r) {
      ordered_json row = ordered_json::array();
      os << " ";
      for (int c = 0; c < kPoints; ++c) {
        row.push_back(report::quad_ext_str(z.points(r, c)));
        os << ' ' << report::quad_ext_str(z.points(r, c));
      }
      rows.push_back(row);
      os << '\n';
    }
    os << "z2 = " << report::quad_ext_str(z.z2) << ", conjugate " << report::quad_ext_str(z.z2_conjugate)
       << ", roots of z^2 - z + 1 with discriminant " << z.discriminant.str() << " < 0\n";
    os << "incidences over Q(sqrt(-3)): " << pair_flats_str(z.realized) << '\n';
    os << "verified: " << (z.verified ? "yes" : "NO") << '\n';
    j["field"] = "Q(sqrt(-3))";
    j["matrix"] = rows;
    j["z2"] = report::quad_ext_str(z.z2);
    j["discriminant"] = z.discriminant.str();
    j["verified"] = z.verified;
    // the stored realization is of the orbit representative; other members are relabelings
    if (!z.verified) code = kViolation;
  } else if (rep == Representability::No) {
    const FanoCertificate c = refute(q);
    os << "not representable: the 9-point base-locus matroid " << c.matroid.str() << " contains the Fano plane {";
    std::string f;
    for (auto t : c.fano) f += (f.empty() ? "" : " ") + mask_str(t);
    os << f << "}\n";
    j["base_locus_matroid"] = c.matroid.str();
    j["fano"] = f;
    j["verified"] = c.holds;
  } else {
    SearchOptions opt;
    opt.seed = cfg.seed;
    opt.budget = cfg.budget;
    try {
      const Configuration p = search_representative(q, opt);
      const Verification v = verify_representative(p, q);
      os << "representative:\n  " << configuration_str(p) << '\n';
      os << "quatroid_of(representative) == target: " << (v.ok ? "yes" : "NO " + v.diagnosis()) << '\n';
      j["matrix"] = report::configuration_json(p);
      j["record"] = representative_line(idx.value_or(0), p);
      j["verified"] = v.ok;
      if (is_bezoutian(q)) {
        const auto pi = count_rational(p);
        os << "d_p = " << pi.d << '\n';
        j["d_p"] = pi.d;
      }
      if (!v.ok) code = kViolation;
    } catch (const SearchFailure& e) {
      os << "inconclusive: " << e.what() << '\n';
      j["verified"] = nullptr;
      j["inconclusive"] = e.what();
      code = kInconclusive;
    }
  }
  emit(cfg, fmt == "json" ? dump(j) : os.str());
  return code;
}

int cmd_plot(const RunConfig& cfg) {
  const std::string fmt = cfg.format.empty() ? "svg" : cfg.format;
  check_format(fmt, {"svg"});
  if (cfg.targets.size() != 1) throw InputError("plot takes one orbit index, pair or matrix");
  const std::string& t = cfg.targets[0];
  svg::RealPoints pts;
  Pair q;
  std::string title;
  if (t.find('/') != std::string::npos) {
    Configuration p = parse_configuration(t);
    check_distinct(p);
    q = quatroid_of(p);
    pts = svg::to_real(p);
    title = pair_flats_str(q);
  } else {
    auto [pair, idx] = stratum(cfg, t);
    q = pair;
    title = (idx ? "Q" + std::to_string(*idx) + "  " : "") + pair_flats_str(q);
    switch (classify_representability(q)) {
      case Representability::ComplexOnly: pts = svg::to_real(realize_Q41().points); break;
      case Representability::No: throw svg::Unrenderable("no configuration realizes " + pair_flats_str(q));
      case Representability::Rational: {
        SearchOptions opt;
        opt.seed = cfg.seed;
        opt.budget = cfg.budget;
        pts = svg::to_real(search_representative(q, opt));
      }
    }
  }
  emit(cfg, svg::render(pts, q, title));
  return kOk;
}

int cmd_certify(const RunConfig& cfg) {
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  check_format(fmt, {"text", "json"});
  if (cfg.targets.empty()) throw InputError("certify takes orbit indices or pairs");
  ordered_json all = ordered_json::array();
  std::ostringstream os;
  for (const auto& t : cfg.targets) {
    auto [q, idx] = stratum(cfg, t);
    ordered_json j;
    j["target"] = t;
    if (idx) j["orbit"] = *idx;
    j["pair"] = report::pair_json(q);
    os << "== " << t << ": " << pair_flats_str(q) << (idx ? "  (orbit Q" + std::to_string(*idx) + ")" : "") << '\n';
    const bool bez = is_bezoutian(q);
    j["bezoutian"] = bez;
    const Representability rep = classify_representability(q);
    j["representable"] = representability_name(rep);
    os << "Bezoutian: " << (bez ? "yes" : "no") << "; representable: " << representability_name(rep) << '\n';
    if (bez && rep == Representability::No) {
      j["m_Q"] = m_Q(q);
      j["d_Q"] = nullptr;
      os << "m_Q = " << m_Q(q) << ", d_Q undefined (empty stratum)\n";
    } else if (bez) {
      const auto prof = reducible_profile(q);
      j["m_Q"] = m_Q(q);
      j["d_Q"] = prof.d();
      os << "m_Q = " << m_Q(q) << ", d_Q = " << prof.d() << " (" << (prof.str().empty() ? "-" : prof.str()) << ")\n";
    }
    if (auto c = certify_nonrational(q)) {
      j["nonrational_certificate"] = c->str();
      os << "no rational cubic through any configuration: " << c->str() << '\n';
    }
    if (rep == Representability::No) {
      const auto f = refute(q);
      j["fano_refutation"] = f.matroid.str();
      os << "Fano refutation: base-locus matroid " << f.matroid.str() << '\n';
    }
    const ReductionTrace tr = reductions(q);
    j["reductions"] = tr.str();
    j["irreducible_by_reductions"] = tr.verdict == ReductionVerdict::ReducedToIrreducible;
    os << "reductions: " << tr.str() << '\n';
    try {
      ordered_json mods = ordered_json::array();
      std::string ms;
      for (const Pair& m : modifications(q)) {
        auto i = orbit_of(cfg, m);
        std::string name = i ? "Q" + std::to_string(*i) : pair_flats_str(m);
        mods.push_back(name);
        ms += (ms.empty() ? "" : ", ") + name;
      }
      j["modifications"] = mods;
      os << "modifications: " << ms << '\n';
    } catch (const GuardViolation& e) {
      j["modifications"] = nullptr;
      os << "modifications: n/a (" << e.what() << ")\n";
    }
    all.push_back(j);
  }
  emit(cfg, fmt == "json" ? dump(all) : os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"quatroids: eight points in the plane, their line/conic incidences and rational cubics"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--matroids", cfg.matroids, "matroid class file (default: data/matroids.txt)");
  app.add_option("--format", cfg.format, "text, csv, json, dot or svg, depending on the command");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--budget", cfg.budget, "representative search attempts")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the artifact here instead of stdout");
  app.add_option("--data", cfg.data_dir, "directory with matroids.txt, orbit_index.txt, appendix_tables.tsv");
  app.add_option("--index", cfg.index, "orbit numbering (default: data/orbit_index.txt)");

  auto* en = app.add_subcommand("enumerate", "all candidate quatroids up to relabeling, with d_Q");
  en->add_flag("--poset", cfg.poset, "emit the covering graph of the Bezoutian strata");
  en->add_flag("--label-d", cfg.label_by_d, "label poset nodes by d_Q");
  en->add_option("--golden", cfg.golden, "table to compare against (default: data/appendix_tables.tsv)");
  en->add_flag("--no-golden", cfg.no_golden, "skip the table comparison");
  auto* co = app.add_subcommand("count", "rational cubics through configurations");
  co->add_option("matrices", cfg.targets, "inline 'r1 / r2 / r3' matrices or record files");
  co->add_option("--reps", cfg.reps, "representative file, 'index : matrix' per line");
  auto* re = app.add_subcommand("represent", "a verified representative of a stratum");
  re->add_option("target", cfg.targets, "orbit index (e.g. 10 or Q10) or pair 'lines: ... ; conics: ...'")->required();
  auto* po = app.add_subcommand("poset", "the poset of Bezoutian strata");
  po->add_flag("--label-d", cfg.label_by_d, "label nodes by d_Q");
  auto* pl = app.add_subcommand("plot", "SVG sketch of a configuration");
  pl->add_option("target", cfg.targets, "orbit index, pair or inline matrix")->required();
  auto* ce = app.add_subcommand("certify", "representability, non-rationality and irreducibility bookkeeping");
  ce->add_option("targets", cfg.targets, "orbit indices or pairs")->required();
  for (auto* s : {en, co, re, po, pl, ce}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "enumerate") return cmd_enumerate(cfg);
    if (cfg.command == "count") return cmd_count(cfg);
    if (cfg.command == "represent") return cmd_represent(cfg);
    if (cfg.command == "poset") return cmd_poset(cfg);
    if (cfg.command == "plot") return cmd_plot(cfg);
    if (cfg.command == "certify") return cmd_certify(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SearchFailure& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const svg::Unrenderable& e) {
    std::cerr << "unrenderable: " << e.what() << '\n';
    return kInputError;
  } catch (const GradingViolation& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return kViolation;
  } catch (const ConsistencyViolation& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return kViolation;
  }
  return kInputError;
}
