#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/catalog.hpp"

namespace satake {

/// Directory holding the fixture files: the SATAKE_FIXTURES environment
/// variable when set, otherwise the location recorded at build time.
std::string fixture_dir();

/// One block of the exceptional-descendants fixture: the printed entries of a
/// published table row (misprints corrected) plus the engine-verified entries
/// the print omits. Entries are display-notation decompositions.
struct DescendantRow {
  std::string family;
  bool exact = false;  // false: "and their summands" presentation
  std::vector<std::string> printed;
  std::vector<std::string> omitted;
};

std::vector<DescendantRow> load_descendant_rows(const std::string& path);

/// Comparison of one fixture row against the enumeration engine.
///
/// In exact mode an entry set matches when it equals the computed set; in
/// summands mode when every entry is computed and every computed descendant
/// is a nonempty sub-multiset of some entry.  `full_match` uses printed plus
/// omitted entries (the regression gate); `print_complete` uses the printed
/// entries alone and so measures the published row against the machinery.
struct RowReport {
  std::string family;
  bool exact = false;
  bool full_match = false;
  bool print_complete = false;
  std::vector<std::string> missing;     ///< fixture entries the engine lacks
  std::vector<std::string> uncovered;   ///< computed entries outside printed+omitted
  std::vector<std::string> print_gaps;  ///< computed entries outside printed alone
};

RowReport compare_descendant_row(const DescendantRow& row);

/// Row of the classification fixture: refined family key, threshold token
/// (sc / so / adj / quot-even-part), and niceness.
struct ClassificationRow {
  std::string key;
  std::string threshold;
  bool nice = false;
};

std::vector<ClassificationRow> load_classification_rows(const std::string& path);

/// The refined family key of a pair (e.g. "AI.odd", "DIa.b1e"); TRIV and
/// DIAG pairs report their family name and have no fixture row.
std::string classification_key(const PairId& p);

/// The fixture token naming a threshold form.
std::string threshold_token(const Form& f);

/// The concrete threshold form a fixture token denotes at pair p. "sc",
/// "so" and "adj" map directly; "quot-even-part" is the quotient by the
/// 2-part of the centre order, which collapses to sc when that part is
/// trivial and to adj when it is the whole centre.
Form expected_threshold(const std::string& token, const PairId& p);

struct NiceRow {
  std::string series;
  std::string family;
  std::string instance;
};

std::vector<NiceRow> load_nice_rows(const std::string& path);

struct ErratumRow {
  std::string id;
  std::string context;
  std::string printed;
  std::string corrected;
  std::string check;
  std::string instance;
};

std::vector<ErratumRow> load_errata_rows(const std::string& path);

/// Runs the erratum's machine check; empty on success, else a description of
/// the failure.
std::optional<std::string> check_erratum(const ErratumRow& e);

struct LiteratureRow {
  std::string family;
  std::string citation;
};

std::vector<LiteratureRow> load_literature_rows(const std::string& path);

}  // namespace satake
