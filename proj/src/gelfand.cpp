#include "satake/gelfand.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "satake/catalog.hpp"
#include "satake/classify.hpp"
#include "satake/descendants.hpp"

namespace satake {

namespace {

PairId at_sc(PairId p) {
  p.form = Form{};
  return p;
}

std::set<PairId> assumed_set(const GelfandOptions& opt) {
  std::set<PairId> out;
  for (const PairId& p : opt.assume_regular) out.insert(at_sc(canonicalize(p)));
  return out;
}

std::vector<PairId> exceptional_seeds() {
  std::vector<PairId> out;
  for (Family f : {Family::GI, Family::FI, Family::FII, Family::EI, Family::EII,
                   Family::EIII, Family::EIV, Family::EV, Family::EVI,
                   Family::EVII, Family::EVIII, Family::EIX}) {
    PairId p;
    p.family = f;
    out.push_back(canonicalize(p));
  }
  return out;
}

}  // namespace

const char* gelfand_kind_name(GelfandKind k) {
  switch (k) {
    case GelfandKind::gelfand_certified: return "gelfand-certified";
    case GelfandKind::conditional: return "conditional";
    case GelfandKind::out_of_scope: return "out-of-scope";
  }
  return "?";
}

GelfandVerdict gelfand_status(const PairId& p0, const GelfandOptions& opt) {
  const PairId p = canonicalize(p0);
  const std::set<PairId> assumed = assumed_set(opt);

  GelfandVerdict v;
  v.pair = p;
  const DescendantClosure cl = descendant_closure(at_sc(p));
  int pruned = 0;
  for (const PairId& q : cl.closure) {
    if (is_regular_known(q)) continue;
    if (assumed.count(at_sc(q))) {
      ++pruned;
      continue;
    }
    v.blocking.push_back(q);
  }
  const bool sc_certified = v.blocking.empty();

  if (p.form == Form{}) {
    if (sc_certified) {
      v.verdict = GelfandKind::gelfand_certified;
      v.provenance.push_back(
          "descent criterion: every pair in the descendant closure is provably regular (Aizenbud-Gourevitch)");
    } else {
      v.verdict = GelfandKind::conditional;
      v.provenance.push_back("blocked: " + std::to_string(v.blocking.size()) +
                             " closure pair(s) lack a regularity certificate");
    }
  } else {
    if (sc_certified) {
      v.verdict = GelfandKind::gelfand_certified;
      v.provenance.push_back(
          "descent criterion at the simply connected cover (Aizenbud-Gourevitch)");
      v.provenance.push_back(
          "transferred to the central quotient from the simply connected certificate");
    } else {
      v.verdict = GelfandKind::out_of_scope;
      v.provenance.push_back(
          "quotient transfer unavailable: the simply connected pair is not certified");
    }
  }
  if (pruned > 0)
    v.provenance.push_back("hypothetically assumes regularity of " +
                           std::to_string(pruned) + " closure pair(s)");
  return v;
}

std::string gelfand_record_line(const GelfandVerdict& v) {
  std::ostringstream os;
  os << pair_name(v.pair) << ' ' << gelfand_kind_name(v.verdict) << " blocking:[";
  for (std::size_t i = 0; i < v.blocking.size(); ++i) {
    if (i) os << ';';
    os << pair_name(v.blocking[i]);
  }
  os << "] provenance:[";
  for (std::size_t i = 0; i < v.provenance.size(); ++i) {
    if (i) os << ';';
    os << v.provenance[i];
  }
  os << ']';
  return os.str();
}

BlockingReport blocking_report(BlockingScope scope, int max_rank,
                               const GelfandOptions& opt) {
  std::vector<PairId> seeds;
  if (scope == BlockingScope::exceptional)
    seeds = exceptional_seeds();
  else
    seeds = catalog_enumerate(max_rank);

  std::set<PairId> seen;
  for (const PairId& s : seeds) {
    const GelfandVerdict v = gelfand_status(s, opt);
    for (const PairId& q : v.blocking) seen.insert(q);
  }
  BlockingReport rep;
  rep.pairs.assign(seen.begin(), seen.end());
  std::sort(rep.pairs.begin(), rep.pairs.end(), catalog_less);

  std::map<std::string, std::vector<PairId>> grouped;
  for (const PairId& q : rep.pairs) grouped[family_name(q.family)].push_back(q);
  // Family order follows first appearance in catalog order.
  std::vector<std::string> order;
  for (const PairId& q : rep.pairs) {
    const std::string fam = family_name(q.family);
    if (std::find(order.begin(), order.end(), fam) == order.end())
      order.push_back(fam);
  }
  for (const std::string& fam : order)
    rep.by_family.emplace_back(fam, grouped[fam]);
  return rep;
}

std::optional<std::string> literature_gelfand(const PairId& p0) {
  const PairId p = canonicalize(p0);
  switch (p.family) {
    case Family::AI:
      return "linear/orthogonal pairs (GL_n, O_n) over the complex numbers: Aizenbud-Gourevitch";
    case Family::AII:
      return "linear/symplectic pairs (GL_2n, Sp_2n): Sayag";
    case Family::AIIIa:
    case Family::AIIIb:
      return "two-block linear pairs (GL_p+q, GL_p x GL_q): Jacquet-Rallis; Aizenbud-Gourevitch";
    case Family::BI:
    case Family::BII:
    case Family::DIa:
    case Family::DIb:
    case Family::DIc:
      return "two-block orthogonal pairs (O_p+q, O_p x O_q) over the complex numbers: Aizenbud-Gourevitch";
    default:
      return std::nullopt;
  }
}

CertifiedList certified_list(int max_rank, const GelfandOptions& opt) {
  CertifiedList out;
  for (const PairId& p : catalog_enumerate(max_rank)) {
    const GelfandVerdict v = gelfand_status(p, opt);
    if (v.verdict == GelfandKind::gelfand_certified)
      out.engine.push_back(p);
    else if (literature_gelfand(p))
      out.external.push_back(p);
    else
      out.open.push_back(p);
  }
  return out;
}

std::vector<PairId> open_pairs(int max_rank) {
  std::vector<PairId> out;
  for (const PairId& p : catalog_enumerate(max_rank)) {
    if (p.family == Family::TRIV || p.family == Family::DIAG) continue;
    if (!is_regular_known(p)) out.push_back(p);
  }
  return out;
}

}  // namespace satake
