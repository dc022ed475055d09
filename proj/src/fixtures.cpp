#include "satake/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "satake/classify.hpp"
#include "satake/descendants.hpp"
#include "satake/gelfand.hpp"

#ifndef SATAKE_FIXTURE_DIR
#define SATAKE_FIXTURE_DIR "fixtures"
#endif

namespace satake {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

// Content lines of a fixture file: trimmed, comments and blanks dropped.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw contract_error("cannot open fixture file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(t);
  }
  return out;
}

// A descendant as the sorted multiset of its factors' canonical names.
using Entry = std::vector<std::string>;

Entry entry_of_display(const std::string& text) {
  Entry e;
  for (const PairId& f : parse_decomposition_display(text)) e.push_back(pair_name(f));
  std::sort(e.begin(), e.end());
  return e;
}

std::string entry_text(const Entry& e) {
  std::string s;
  for (const auto& f : e) s += (s.empty() ? "" : " + ") + display_name(parse_pair_name(f));
  return s;
}

std::vector<Entry> computed_entries(const PairId& p) {
  std::vector<Entry> out;
  for (const DescendantRecord& r : enumerate_descendants(p)) {
    if (is_self_descendant(p, r.decomposition)) continue;
    Entry e;
    for (const PairId& f : r.decomposition.factors) e.push_back(pair_name(f));
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool submultiset(const Entry& small, const Entry& big) {
  std::map<std::string, int> have;
  for (const auto& s : big) ++have[s];
  for (const auto& s : small)
    if (--have[s] < 0) return false;
  return true;
}

bool covered(const Entry& x, const std::vector<Entry>& by) {
  return std::any_of(by.begin(), by.end(),
                     [&](const Entry& e) { return submultiset(x, e); });
}

// Compares one entry list against the computed set under the row's mode,
// reporting fixture entries the engine lacks and computed entries the list
// fails to account for.
void compare_entries(const std::vector<Entry>& fixture, bool exact,
                     const std::vector<Entry>& computed, bool* match,
                     std::vector<std::string>* missing,
                     std::vector<std::string>* extra) {
  *match = true;
  for (const Entry& e : fixture) {
    if (!std::binary_search(computed.begin(), computed.end(), e)) {
      *match = false;
      if (missing) missing->push_back(entry_text(e));
    }
  }
  for (const Entry& c : computed) {
    const bool ok = exact
                        ? std::find(fixture.begin(), fixture.end(), c) != fixture.end()
                        : covered(c, fixture);
    if (!ok) {
      *match = false;
      if (extra) extra->push_back(entry_text(c));
    }
  }
}

}  // namespace

std::string fixture_dir() {
  if (const char* env = std::getenv("SATAKE_FIXTURES")) return env;
  return SATAKE_FIXTURE_DIR;
}

std::vector<DescendantRow> load_descendant_rows(const std::string& path) {
  std::vector<DescendantRow> rows;
  for (const std::string& line : read_lines(path)) {
    if (line.rfind("family ", 0) == 0) {
      std::istringstream in(line);
      std::string kw, family, modekw, mode;
      in >> kw >> family >> modekw >> mode;
      if (modekw != "mode" || (mode != "exact" && mode != "summands")) {
        throw parse_error("bad fixture header: " + line);
      }
      rows.push_back({family, mode == "exact", {}, {}});
      continue;
    }
    if (rows.empty()) throw parse_error("fixture entry before header: " + line);
    if (line.rfind("omitted:", 0) == 0) {
      rows.back().omitted.push_back(trim(line.substr(8)));
    } else {
      rows.back().printed.push_back(line);
    }
  }
  return rows;
}

RowReport compare_descendant_row(const DescendantRow& row) {
  RowReport rep;
  rep.family = row.family;
  rep.exact = row.exact;
  const std::vector<Entry> computed = computed_entries(parse_pair_name(row.family));

  std::vector<Entry> printed;
  for (const auto& t : row.printed) printed.push_back(entry_of_display(t));
  std::sort(printed.begin(), printed.end());
  printed.erase(std::unique(printed.begin(), printed.end()), printed.end());

  std::vector<Entry> full = printed;
  for (const auto& t : row.omitted) full.push_back(entry_of_display(t));
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());

  compare_entries(full, row.exact, computed, &rep.full_match, &rep.missing,
                  &rep.uncovered);
  compare_entries(printed, row.exact, computed, &rep.print_complete, nullptr,
                  &rep.print_gaps);
  return rep;
}

std::vector<ClassificationRow> load_classification_rows(const std::string& path) {
  std::vector<ClassificationRow> rows;
  for (const std::string& line : read_lines(path)) {
    std::istringstream in(line);
    ClassificationRow row;
    std::string nice;
    in >> row.key >> row.threshold >> nice;
    if (row.key.empty() || (nice != "yes" && nice != "no")) {
      throw parse_error("bad classification fixture line: " + line);
    }
    row.nice = nice == "yes";
    rows.push_back(row);
  }
  return rows;
}

std::string classification_key(const PairId& p0) {
  const PairId p = canonicalize(p0);
  const std::string base = family_name(p.family);
  switch (p.family) {
    case Family::AI:
      return p.n % 2 == 0 ? "AI.even" : "AI.odd";
    case Family::DIa:
      if (p.b == 0) return "DIa.b0";
      return (p.r + p.s) % 2 == 0 ? "DIa.b1e" : "DIa.b1o";
    case Family::DIb:
      return p.b == 0 ? "DIb.b0" : "DIb.b1";
    default:
      return base;
  }
}

std::string threshold_token(const Form& f) {
  switch (f.kind) {
    case Form::sc: return "sc";
    case Form::so: return "so";
    case Form::adj: return "adj";
    case Form::quot: return "quot-even-part";
  }
  throw contract_error("unknown form kind");
}

Form expected_threshold(const std::string& token, const PairId& p) {
  if (token == "sc") return {Form::sc, 0};
  if (token == "so") return {Form::so, 0};
  if (token == "adj") return {Form::adj, 0};
  if (token == "quot-even-part") {
    const int order = center_of(p).order;
    int k = 1;
    while ((order / k) % 2 == 0) k *= 2;
    if (k == 1) return {Form::sc, 0};
    if (k == order) return {Form::adj, 0};
    return {Form::quot, k};
  }
  throw parse_error("unknown threshold token: " + token);
}

std::vector<NiceRow> load_nice_rows(const std::string& path) {
  std::vector<NiceRow> rows;
  for (const std::string& line : read_lines(path)) {
    const std::vector<std::string> f = split(line, '|');
    if (f.size() != 3) throw parse_error("bad nice fixture line: " + line);
    rows.push_back({f[0], f[1], f[2]});
  }
  return rows;
}

std::vector<ErratumRow> load_errata_rows(const std::string& path) {
  std::vector<ErratumRow> rows;
  for (const std::string& line : read_lines(path)) {
    const std::vector<std::string> f = split(line, '|');
    if (f.size() != 6) throw parse_error("bad errata fixture line: " + line);
    rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5]});
  }
  return rows;
}

std::optional<std::string> check_erratum(const ErratumRow& e) {
  const PairId instance = parse_pair_name(e.instance);
  if (e.check == "certified") {
    if (canonicalize(parse_display_name(e.corrected)) != canonicalize(instance)) {
      return "corrected name does not denote the instance pair";
    }
    const GelfandVerdict v = gelfand_status(instance);
    if (v.verdict != GelfandKind::gelfand_certified) {
      return "engine does not certify " + e.corrected;
    }
    return std::nullopt;
  }

  std::set<PairId> factors;
  for (const DescendantRecord& r : enumerate_descendants(instance)) {
    for (const PairId& f : r.decomposition.factors) factors.insert(canonicalize(f));
  }
  const PairId corrected = canonicalize(parse_display_name(e.corrected));
  if (factors.count(corrected) == 0) {
    return "corrected entry " + e.corrected + " is not a descendant factor of " +
           e.instance;
  }
  if (e.check == "unparseable") {
    try {
      parse_display_name(e.printed);
    } catch (const parse_error&) {
      return std::nullopt;
    }
    return "printed entry " + e.printed + " unexpectedly parses";
  }
  if (e.check == "membership") {
    const PairId printed = canonicalize(parse_display_name(e.printed));
    if (factors.count(printed) != 0) {
      return "printed entry " + e.printed + " unexpectedly is a descendant factor";
    }
    return std::nullopt;
  }
  return "unknown check kind: " + e.check;
}

std::vector<LiteratureRow> load_literature_rows(const std::string& path) {
  std::vector<LiteratureRow> rows;
  for (const std::string& line : read_lines(path)) {
    const std::vector<std::string> f = split(line, '|');
    if (f.size() != 2) throw parse_error("bad literature fixture line: " + line);
    rows.push_back({f[0], f[1]});
  }
  return rows;
}

}  // namespace satake
