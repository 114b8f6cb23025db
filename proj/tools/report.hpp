#pragma once

#include "quatroid/realization/realization.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace quat::report {

using nlohmann::ordered_json;

ordered_json pair_json(const Pair& q);
ordered_json configuration_json(const Configuration& p);

std::string summary_line(const Enumeration& e);
ordered_json enumeration_json(const Enumeration& e, const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_text(const Enumeration& e, const std::vector<TableRow>& rows);

// golden comparison: one message per differing cell
std::vector<std::string> table_diff(const std::vector<TableRow>& got, const std::vector<TableRow>& want);

ordered_json poset_json(const PosetGraph& g);
std::string poset_text(const PosetGraph& g);

// what `count` reports for one configuration
struct CountRecord {
  std::string label;
  Configuration p;
  Pair quatroid;
  std::optional<int> orbit;
  bool bezoutian = false;
  std::optional<PencilIntersection> pencil;
  std::optional<BaseLocus> base_locus;
  std::optional<NonrationalCertificate> certificate;
  std::string error;       // input error, record skipped
  std::string violation;   // consistency violation
};

ordered_json count_json(const CountRecord& r);
std::string count_text(const CountRecord& r);
std::string count_csv_header();
std::string count_csv_row(const CountRecord& r);

std::string quad_ext_str(const QuadExt& x);

}  // namespace quat::report
