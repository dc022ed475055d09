#include "satake/descendants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "satake/diagram.hpp"
#include "satake/root_system.hpp"

namespace satake {

namespace {

PairId at_sc(PairId p) {
  p.form = Form{};
  return p;
}

bool id_is_gamma(const std::string& id) {
  return id == "g" || id.rfind("g.", 0) == 0;
}

bool id_in_first_copy(const std::string& id) {
  return id.size() >= 2 && id.compare(id.size() - 2, 2, ".1") == 0;
}

/// White bar-orbits, each sorted, listed by smallest member id.
std::vector<std::vector<int>> white_orbits(const SatakeDiagram& d) {
  std::vector<int> order(d.size());
  for (int i = 0; i < d.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return node_id_less(d.base.nodes[a], d.base.nodes[b]);
  });
  std::vector<std::vector<int>> orbits;
  std::vector<bool> used(d.size(), false);
  for (int i : order) {
    if (d.black[i] || used[i]) continue;
    std::vector<int> orb{i};
    used[i] = true;
    if (d.bar[i] >= 0 && !used[d.bar[i]]) {
      used[d.bar[i]] = true;
      orb.push_back(d.bar[i]);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<std::string> factor_names(const Decomposition& d) {
  std::vector<std::string> out;
  out.reserve(d.factors.size());
  for (const PairId& f : d.factors) out.push_back(pair_name(f));
  return out;
}

bool erased_less(const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return node_id_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

std::vector<ErasureCase> enumerate_erasures(const PairId& p_in) {
  const PairId p = canonicalize(p_in);
  std::vector<ErasureCase> out;
  if (p.family == Family::TRIV) return out;  // no white nodes

  const ExtendedSatakeDiagram ext = extended_satake_of(p);
  const SatakeDiagram& full = ext.base;
  const bool diagonal = (p.family == Family::DIAG);
  const int amb = ambient_rank(p);

  const auto orbits = white_orbits(full);
  const int k = static_cast<int>(orbits.size());
  int gamma_orbit = -1;
  for (int j = 0; j < k; ++j) {
    for (int node : orbits[j]) {
      if (id_is_gamma(full.base.nodes[node])) gamma_orbit = j;
    }
  }

  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    // Removing only the lowest-root node reproduces the original diagram;
    // that is the pair itself, not a descendant operation.
    if (gamma_orbit >= 0 && mask == (1u << gamma_orbit)) continue;

    std::set<std::string> erased_ids;
    bool gamma_erased = false;
    int mark_sum = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask >> j & 1u)) continue;
      for (int node : orbits[j]) {
        const std::string& id = full.base.nodes[node];
        erased_ids.insert(id);
        if (id_is_gamma(id)) {
          gamma_erased = true;
        } else if (!diagonal || id_in_first_copy(id)) {
          // For product ambients the witness lives in one factor; count each
          // mark once.
          mark_sum += full.base.marks[node];
        }
      }
    }

    const SatakeDiagram survivors = erase(ext, erased_ids);
    if (survivors.size() == 0) continue;  // pure torus

    ErasureCase ec;
    ec.pair = p;
    ec.erased.assign(erased_ids.begin(), erased_ids.end());
    std::sort(ec.erased.begin(), ec.erased.end(), node_id_less);
    for (const SatakeDiagram& c : components(survivors)) {
      ec.result.factors.push_back(recognize(c));
    }
    std::sort(ec.result.factors.begin(), ec.result.factors.end(),
              catalog_less);
    ec.result.torus_rank = amb - survivors.size();
    if (!diagonal) {
      Eigen::VectorXi e = Eigen::VectorXi::Zero(amb);
      for (const std::string& id : ec.erased) {
        if (!id_is_gamma(id)) e[std::stoi(id.substr(1)) - 1] = 1;
      }
      ec.witness.exponents = std::move(e);
    }
    ec.witness.modulus = mark_sum + (gamma_erased ? 1 : 0);
    out.push_back(std::move(ec));
  }

  std::sort(out.begin(), out.end(), [](const ErasureCase& a,
                                       const ErasureCase& b) {
    return erased_less(a.erased, b.erased);
  });
  return out;
}

std::vector<DescendantRecord> enumerate_descendants(const PairId& p) {
  std::map<Decomposition, int> best;
  for (const ErasureCase& c : enumerate_erasures(p)) {
    auto [it, fresh] = best.try_emplace(c.result, c.witness.modulus);
    if (!fresh) it->second = std::min(it->second, c.witness.modulus);
  }
  std::vector<DescendantRecord> out;
  out.reserve(best.size());
  for (const auto& [dec, mod] : best) out.push_back({dec, mod});
  std::sort(out.begin(), out.end(),
            [](const DescendantRecord& a, const DescendantRecord& b) {
              return std::tuple(a.min_modulus, factor_names(a.decomposition),
                                a.decomposition.torus_rank) <
                     std::tuple(b.min_modulus, factor_names(b.decomposition),
                                b.decomposition.torus_rank);
            });
  return out;
}

DescendantClosure descendant_closure(const PairId& p_in) {
  const PairId start = at_sc(canonicalize(p_in));
  std::map<PairId, std::vector<DescendantRecord>> memo;
  std::set<PairId> seen{start};
  std::vector<PairId> queue{start};
  while (!queue.empty()) {
    const PairId q = queue.back();
    queue.pop_back();
    auto [it, fresh] = memo.try_emplace(q);
    if (fresh) it->second = enumerate_descendants(q);
    for (const DescendantRecord& r : it->second) {
      for (const PairId& f : r.decomposition.factors) {
        if (seen.insert(at_sc(f)).second) queue.push_back(at_sc(f));
      }
    }
  }
  DescendantClosure out;
  out.direct = memo.at(start);
  out.closure.assign(seen.begin(), seen.end());
  std::sort(out.closure.begin(), out.closure.end(), catalog_less);
  return out;
}

bool verify_witness(const ErasureCase& c) {
  const PairId p = canonicalize(c.pair);
  if (c.erased.empty()) return false;
  if (p.family == Family::TRIV) return false;  // has no erasures at all

  // Shared arithmetic: the torus rank must account for every erased node.
  const ExtendedSatakeDiagram ext = extended_satake_of(p);
  const SatakeDiagram& full = ext.base;
  bool gamma_erased = false;
  int mark_sum = 0;
  for (const std::string& id : c.erased) {
    const int idx = full.base.index_of(id);
    if (idx < 0) return false;
    if (full.black[idx]) return false;
    if (id_is_gamma(id)) {
      gamma_erased = true;
    } else if (p.family != Family::DIAG || id_in_first_copy(id)) {
      mark_sum += full.base.marks[idx];
    }
  }
  if (c.witness.modulus != mark_sum + (gamma_erased ? 1 : 0)) return false;

  if (p.family == Family::DIAG) {
    // Product ambient: check structurally. The erased set must be symmetric
    // across the two copies, and every factor must again be a diagonal pair
    // accounting for the full rank.
    std::set<std::string> erased(c.erased.begin(), c.erased.end());
    for (const std::string& id : erased) {
      if (id.size() < 2) return false;
      std::string twin = id;
      twin.back() = (twin.back() == '1') ? '2' : '1';
      if (!erased.count(twin)) return false;
    }
    int semisimple = 0;
    for (const PairId& f : c.result.factors) {
      if (f.family != Family::DIAG) return false;
      semisimple += ambient_rank(f);
    }
    return c.result.torus_rank == ambient_rank(p) - semisimple;
  }

  // Simple ambient: compare against the centralizer subsystem of the
  // witnessed torsion element in the ambient root system.
  const SimpleType amb = ambient_type(p);
  if (c.witness.exponents.size() != amb.rank) return false;
  for (int i = 0; i < amb.rank; ++i) {
    const bool erased_here =
        std::find(c.erased.begin(), c.erased.end(),
                  "a" + std::to_string(i + 1)) != c.erased.end();
    if (c.witness.exponents[i] != (erased_here ? 1 : 0)) return false;
  }
  if (c.witness.modulus < 1) return false;

  const RootSystem rs = build_root_system(amb);
  const Subsystem sub =
      centralizer_subsystem(rs, c.witness.exponents, c.witness.modulus);

  std::vector<SimpleType> expected;
  for (const PairId& f : c.result.factors) {
    if (f.family == Family::TRIV) {
      expected.push_back(f.t);
    } else if (f.family == Family::DIAG) {
      expected.push_back(f.t);
      expected.push_back(f.t);
    } else {
      expected.push_back(ambient_type(f));
    }
  }
  std::sort(expected.begin(), expected.end());
  return sub.type_decomposition == expected &&
         sub.corank == c.result.torus_rank;
}

bool is_self_descendant(const PairId& p, const Decomposition& d) {
  return d.torus_rank == 0 && d.factors.size() == 1 &&
         d.factors[0] == at_sc(canonicalize(p));
}

namespace {

using Pred = std::function<bool(const PairId&)>;

PairId mk(Family fam, int n) {
  PairId q;
  q.family = fam;
  q.n = n;
  return q;
}
PairId mk_rs(Family fam, int r, int s, int b = 0) {
  PairId q;
  q.family = fam;
  q.r = r;
  q.s = s;
  q.b = b;
  return q;
}
PairId mk_t(Family fam, TypeLetter l, int rank) {
  PairId q;
  q.family = fam;
  q.t = make_type(l, rank);
  return q;
}

const PairId kAI1 = mk(Family::AI, 1);
const PairId kTrivA1 = mk_t(Family::TRIV, TypeLetter::A, 1);

/// The row model: middles may repeat freely; each cap slot holds at most one
/// factor; at most one cap set (a small multiset consumed atomically) may be
/// used in place of the second slot.
struct RowSchema {
  Pred middle;
  std::vector<Pred> slots;
  std::vector<std::vector<PairId>> cap_sets;
};

bool run_schema(const RowSchema& row, std::vector<PairId> factors) {
  std::sort(factors.begin(), factors.end(), catalog_less);
  std::vector<std::vector<PairId>> set_choices{{}};
  for (const auto& cs : row.cap_sets) set_choices.push_back(cs);
  for (const auto& chosen_set : set_choices) {
    // Consume the cap set (as a multiset), if it fits.
    std::vector<PairId> rem = factors;
    bool fits = true;
    for (const PairId& want : chosen_set) {
      auto it = std::find(rem.begin(), rem.end(), want);
      if (it == rem.end()) {
        fits = false;
        break;
      }
      rem.erase(it);
    }
    if (!fits) continue;
    // Assign at most one remaining factor to each slot; the rest must be
    // middles. Try every assignment (factor counts are tiny).
    const int n = static_cast<int>(rem.size());
    const int s = static_cast<int>(row.slots.size());
    std::vector<int> pick(s, -1);  // factor index per slot, or -1
    auto assign_ok = [&]() {
      std::vector<bool> used(n, false);
      for (int j = 0; j < s; ++j) {
        if (pick[j] < 0) continue;
        if (used[pick[j]] || !row.slots[j](rem[pick[j]])) return false;
        used[pick[j]] = true;
      }
      for (int i = 0; i < n; ++i) {
        if (!used[i] && !row.middle(rem[i])) return false;
      }
      return true;
    };
    // Iterate pick vectors: each slot chooses -1..n-1.
    std::vector<int> radix(s, -1);
    while (true) {
      pick = radix;
      if (assign_ok()) return true;
      int j = 0;
      for (; j < s; ++j) {
        if (++radix[j] < n) break;
        radix[j] = -1;
      }
      if (j == s) break;
    }
  }
  return false;
}

RowSchema classical_row_schema(const PairId& p) {
  auto fam_is = [](Family fam) {
    return Pred([fam](const PairId& f) { return f.family == fam; });
  };
  auto any_of = [](std::vector<Pred> ps) {
    return Pred([ps = std::move(ps)](const PairId& f) {
      for (const auto& q : ps) {
        if (q(f)) return true;
      }
      return false;
    });
  };
  auto exactly = [](PairId want) {
    return Pred([want](const PairId& f) { return f == want; });
  };
  auto triv_of = [](TypeLetter l, int rank) {
    return mk_t(Family::TRIV, l, rank);
  };

  const Pred middle_ai = fam_is(Family::AI);
  const Pred middle_ac = any_of({fam_is(Family::AII), exactly(kTrivA1)});

  RowSchema row;
  switch (p.family) {
    case Family::AI:
      row.middle = middle_ai;
      return row;
    case Family::AII:
      row.middle = middle_ac;
      return row;
    case Family::AIIIa:
    case Family::AIIIb: {
      const int m = (p.family == Family::AIIIa) ? p.r - p.s : 0;
      row.middle = [](const PairId& f) {
        return f.family == Family::DIAG && f.t.letter == TypeLetter::A;
      };
      const Pred left = any_of({fam_is(Family::AIIIb), exactly(kAI1)});
      Pred right;
      if (m == 0) {
        right = left;
      } else {
        std::vector<Pred> opts;
        opts.push_back([m](const PairId& f) {
          return f.family == Family::AIIIa && f.r - f.s == m;
        });
        if (m >= 2) opts.push_back(exactly(triv_of(TypeLetter::A, m - 1)));
        right = any_of(std::move(opts));
      }
      row.slots = {left, right};
      return row;
    }
    case Family::CI: {
      row.middle = middle_ai;
      const Pred cap = any_of({fam_is(Family::CI), exactly(kAI1)});
      row.slots = {cap, cap};
      return row;
    }
    case Family::CIIa:
    case Family::CIIb: {
      const int m = (p.family == Family::CIIa) ? p.r - p.s : 0;
      row.middle = middle_ac;
      const Pred left = any_of(
          {fam_is(Family::CIIb), exactly(mk_rs(Family::BI, 0, 2))});
      Pred right;
      if (m == 0) {
        right = left;
      } else {
        std::vector<Pred> opts;
        opts.push_back([m](const PairId& f) {
          return f.family == Family::CIIa && f.r - f.s == m;
        });
        // u = 0 end: the whole compact factor survives.
        opts.push_back(exactly(m == 1 ? kTrivA1 : triv_of(TypeLetter::C, m)));
        right = any_of(std::move(opts));
      }
      row.slots = {left, right};
      return row;
    }
    case Family::BI:
    case Family::BII: {
      const int m = std::max(p.r - p.s, p.s - p.r - 1);
      row.middle = middle_ai;
      const Pred left = fam_is(Family::DIc);
      std::vector<Pred> opts;
      opts.push_back([m](const PairId& f) {
        return (f.family == Family::BI || f.family == Family::BII) &&
               std::max(f.r - f.s, f.s - f.r - 1) == m;
      });
      if (m == 0) opts.push_back(exactly(mk(Family::CI, 2)));
      if (m >= 1)
        opts.push_back(exactly(m == 1 ? kTrivA1 : triv_of(TypeLetter::B, m)));
      row.slots = {left, any_of(std::move(opts))};
      return row;
    }
    case Family::DIa:
    case Family::DIb:
    case Family::DIc: {
      const int m = p.r - p.s;
      row.middle = middle_ai;
      const Pred left = fam_is(Family::DIc);
      std::vector<Pred> opts;
      if (m == 0) {
        opts.push_back(fam_is(Family::DIc));
      } else if (m == 1) {
        opts.push_back(fam_is(Family::DIb));
        opts.push_back(exactly(mk(Family::AIIIb, 1)));
        opts.push_back(exactly(mk_t(Family::DIAG, TypeLetter::A, 1)));
      } else {
        opts.push_back([m](const PairId& f) {
          return f.family == Family::DIa && f.r - f.s == m;
        });
        if (m == 2) {
          opts.push_back(exactly(mk(Family::DIIIa, 4)));
          opts.push_back(exactly(mk(Family::AII, 2)));
          row.cap_sets.push_back({kTrivA1, kTrivA1});
        }
        if (m == 3) opts.push_back(exactly(triv_of(TypeLetter::A, 3)));
        if (m >= 4) opts.push_back(exactly(triv_of(TypeLetter::D, m)));
      }
      row.slots = {left, any_of(std::move(opts))};
      return row;
    }
    case Family::DIIIa:
    case Family::DIIIb: {
      const bool even = (p.family == Family::DIIIa);
      row.middle = middle_ac;
      const Pred left = any_of({fam_is(Family::DIIIa), exactly(kAI1)});
      Pred right;
      if (even) {
        right = fam_is(Family::DIIIa);
        row.cap_sets.push_back({kTrivA1, kAI1});
      } else {
        right = any_of({fam_is(Family::DIIIb),
                        exactly(mk_rs(Family::AIIIa, 2, 0))});
      }
      row.slots = {left, right};
      return row;
    }
    default:
      throw contract_error("family schema applies to classical pairs only");
  }
}

}  // namespace

bool matches_family_schema(const PairId& ancestor, const Decomposition& d,
                           std::string* why) {
  const PairId p = canonicalize(ancestor);
  const RowSchema row = classical_row_schema(p);
  if (run_schema(row, d.factors)) return true;
  if (why) {
    std::ostringstream os;
    os << "descendant of " << pair_name(p) << " escapes its family schema:";
    for (const PairId& f : d.factors) os << ' ' << pair_name(f);
    os << " (torus " << d.torus_rank << ")";
    *why = os.str();
  }
  return false;
}

std::string descendant_record_line(const PairId& p,
                                   const DescendantRecord& r) {
  std::ostringstream os;
  os << pair_name(at_sc(canonicalize(p))) << '\t';
  const auto names = factor_names(r.decomposition);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ';';
    os << names[i];
  }
  os << '\t' << r.decomposition.torus_rank << '\t' << r.min_modulus;
  return os.str();
}

std::string emit_table(const std::string& family_pattern, int max_rank) {
  const bool wild_all = family_pattern == "*";
  std::string prefix;
  bool wild_prefix = false;
  if (!wild_all && !family_pattern.empty() &&
      family_pattern.back() == '*') {
    wild_prefix = true;
    prefix = family_pattern.substr(0, family_pattern.size() - 1);
  }
  auto matches = [&](const PairId& p) {
    const std::string name = family_name(p.family);
    if (wild_all) return true;
    if (wild_prefix) return name.rfind(prefix, 0) == 0;
    return name == family_pattern;
  };

  std::ostringstream os;
  for (const PairId& p : catalog_enumerate(max_rank)) {
    if (!matches(p)) continue;
    const auto records = enumerate_descendants(p);
    std::vector<const DescendantRecord*> rows;
    for (const DescendantRecord& r : records) {
      if (!is_self_descendant(p, r.decomposition)) rows.push_back(&r);
    }
    if (p.family == Family::TRIV) continue;  // nothing to report
    os << pair_name(p) << ' ' << display_name(p) << '\n';
    if (rows.empty()) os << "  (none)\n";
    for (const DescendantRecord* r : rows) {
      os << "  ";
      const auto& fs = r->decomposition.factors;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << '+';
        os << display_name(fs[i]);
      }
      os << "  -- torus " << r->decomposition.torus_rank << ", modulus "
         << r->min_modulus << '\n';
    }
  }
  return os.str();
}

std::vector<std::string> split_decomposition_display(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  for (std::string& s : out) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  }
  return out;
}

std::vector<PairId> parse_decomposition_display(const std::string& text) {
  std::vector<PairId> out;
  for (const std::string& part : split_decomposition_display(text)) {
    out.push_back(parse_display_name(part));
  }
  std::sort(out.begin(), out.end(), catalog_less);
  return out;
}

}  // namespace satake
