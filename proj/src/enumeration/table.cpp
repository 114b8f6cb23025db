#include "quatroid/enumeration/enumeration.hpp"

#include <fstream>
#include <sstream>

namespace quat {

namespace {

std::string joined(const std::vector<PointMask>& flats) {
  std::string s;
  for (auto f : flats) s += (s.empty() ? "" : " ") + mask_str(f);
  return s;
}

}  // namespace

std::vector<TableRow> emit_table(const std::vector<OrbitRecord>& orbits) {
  std::vector<TableRow> rows;
  for (const auto& r : orbits) {
    TableRow t;
    t.index = r.index;
    t.orbit_size = r.orbit_size;
    t.lines = joined(line_flats(r.display));
    t.conics = joined(conic_flats(r.display));
    if (r.representable == Representability::No) {
      t.reducibles = "NR";
      t.d = "NR";
    } else if (!r.bezoutian) {
      t.reducibles = "NB";
      t.d = "0";
    } else {
      t.reducibles = r.profile->str();
      if (t.reducibles.empty()) t.reducibles = "-";
      t.d = std::to_string(r.d);
    }
    rows.push_back(t);
  }
  return rows;
}

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  std::vector<TableRow> rows;
  std::string line;
  int no = 0;
  while (std::getline(f, line)) {
    ++no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    while (cells.size() < 6) cells.push_back("");
    if (cells.size() != 6) throw ParseError(no, "expected 6 tab-separated cells");
    TableRow t;
    try {
      t.index = std::stoi(cells[0]);
      t.orbit_size = std::stoi(cells[1]);
    } catch (const std::exception&) {
      throw ParseError(no, "bad index or orbit size");
    }
    t.lines = cells[2];
    t.conics = cells[3];
    t.reducibles = cells[4];
    t.d = cells[5];
    rows.push_back(t);
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "# index\torbit\tlines\tconics\treducibles\td_Q\n";
  for (const auto& t : rows)
    os << t.index << '\t' << t.orbit_size << '\t' << t.lines << '\t' << t.conics << '\t' << t.reducibles << '\t' << t.d
       << '\n';
  return os.str();
}

}  // namespace quat
