#include "satake/classify.hpp"

#include <bit>
#include <optional>
#include <sstream>
#include <utility>

#include "satake/catalog.hpp"

namespace satake {

namespace {

int two_part(int m) {  // largest power of two dividing m (m >= 1)
  return m & -m;
}

std::string form_text(const Form& f) {
  switch (f.kind) {
    case Form::sc: return "sc";
    case Form::so: return "so";
    case Form::adj: return "adj";
    case Form::quot: return "quot(" + std::to_string(f.k) + ")";
  }
  return "?";
}

struct SimpleCenter {
  int order = 1;
  std::string structure = "1";
};

SimpleCenter simple_center(const SimpleType& t) {
  switch (t.letter) {
    case TypeLetter::A: return {t.rank + 1, "Z" + std::to_string(t.rank + 1)};
    case TypeLetter::B:
    case TypeLetter::C: return {2, "Z2"};
    case TypeLetter::D:
      return t.rank % 2 == 0 ? SimpleCenter{4, "Z2xZ2"} : SimpleCenter{4, "Z4"};
    case TypeLetter::E:
      if (t.rank == 6) return {3, "Z3"};
      if (t.rank == 7) return {2, "Z2"};
      return {1, "1"};
    case TypeLetter::F:
    case TypeLetter::G: return {1, "1"};
  }
  throw contract_error("simple_center: unreachable type letter");
}

/// Kernel order of the central subgroup defining form f of an ambient group
/// with centre of order z, or -1 with a reason when the form is outside the
/// decided vocabulary. Every covered form of one ambient lies on a single
/// chain of subgroups, so kernel-order divisibility decides quotients.
int kernel_order(const SimpleType& amb, const Form& f, int z, std::string* why) {
  switch (f.kind) {
    case Form::sc: return 1;
    case Form::adj: return z;
    case Form::so:
      if (amb.letter == TypeLetter::B || amb.letter == TypeLetter::D) return 2;
      if (why) *why = "form not covered: the vector quotient @so exists only for orthogonal ambients, not " + type_name(amb);
      return -1;
    case Form::quot: {
      const int k = f.k;
      if (k <= 0 || z % k != 0) {
        if (why)
          *why = "form not covered: the centre of " + type_name(amb) + " has order " + std::to_string(z) + ", no subgroup of order " + std::to_string(k);
        return -1;
      }
      if (k == 1) return 1;
      if (k == z) return z;
      if (amb.letter == TypeLetter::A) return k;  // cyclic: unique subgroup
      if (amb.letter == TypeLetter::D) {
        if (amb.rank % 2 == 1) return 2;  // cyclic Z4: unique Z2 (the vector kernel)
        if (why)
          *why = "form not covered: an order-2 quotient of " + type_name(amb) + " does not determine a kernel (vector or half-spin); the half-spin forms are not classified here — use @so for the vector form";
        return -1;
      }
      if (why)
        *why = "form not covered: " + type_name(amb) + " has no proper quotient of order " + std::to_string(k);
      return -1;
    }
  }
  return -1;
}

/// The quotient SL_{m}/Z_{2-part of m} expressed canonically.
Form even_part_quotient(int m) {
  const int k = two_part(m);
  if (k == 1) return Form{Form::sc, 0};
  if (k == m) return Form{Form::adj, 0};
  return Form{Form::quot, k};
}

struct ThresholdInfo {
  Form threshold{};
  std::string rule;
};

ThresholdInfo threshold_info(const PairId& p) {
  const Form sc{Form::sc, 0};
  const Form so{Form::so, 0};
  const Form adj{Form::adj, 0};
  switch (p.family) {
    case Family::TRIV: return {sc, "trivial-pair"};
    case Family::DIAG: return {sc, "diagonal-pair"};
    case Family::AI:
      if (p.n % 2 == 0) return {sc, "center-odd-inverted"};
      return {even_part_quotient(p.n + 1), "cyclic-center-parity"};
    case Family::AII: return {sc, "case-analysis"};
    case Family::AIIIa:
      return {sc, (p.r + p.s) % 2 == 0 ? "center-odd-fixed" : "eigenspace-unequal"};
    case Family::AIIIb:
      return {even_part_quotient(2 * p.n + 2), "cyclic-center-parity"};
    case Family::CI:
    case Family::CIIb: return {adj, "eigenspace-swap"};
    case Family::CIIa: return {sc, "eigenspace-unequal"};
    case Family::BI:
    case Family::BII: return {so, "eigenspace-unequal"};
    case Family::DIa:
    case Family::DIb:
      // The split into two odd parts with an ambient of odd rank is the
      // spin-pleasant case: part sizes 2r+1 and 2s+1 are odd and distinct,
      // and their sum 2(r+s+1) is 2 mod 4.
      if (p.b == 1 && (p.r + p.s) % 2 == 0) return {sc, "spin-odd-parts"};
      return {so, "eigenspace-unequal"};
    case Family::DIc: return {adj, "eigenspace-swap"};
    case Family::DIIIa:
    case Family::DIIIb: return {adj, "eigenspace-swap"};
    case Family::GI:
    case Family::FI:
    case Family::FII:
    case Family::EVIII:
    case Family::EIX: return {sc, "centerless"};
    case Family::EI:
    case Family::EIV: return {sc, "center-odd-inverted"};
    case Family::EII:
    case Family::EIII: return {sc, "center-odd-fixed"};
    case Family::EVI: return {sc, "case-analysis"};
    case Family::EV:
    case Family::EVII: return {adj, "case-analysis"};
  }
  throw contract_error("threshold_info: unreachable family");
}

bool nice_family(Family f) {
  switch (f) {
    case Family::AI:
    case Family::AIIIb:
    case Family::CI:
    case Family::BII:
    case Family::DIb:
    case Family::DIc:
    case Family::GI:
    case Family::FII:
    case Family::EI:
    case Family::EII:
    case Family::EV:
    case Family::EVIII: return true;
    default: return false;
  }
}

std::string rule_sentence(const std::string& rule) {
  if (rule == "centerless") return "the ambient group has trivial centre";
  if (rule == "center-odd-fixed") return "centre of odd order, fixed element-wise by the involution";
  if (rule == "center-odd-inverted") return "centre of odd order, inverted by the involution";
  if (rule == "eigenspace-unequal") return "the defining eigenspaces of the inner involution have different dimensions";
  if (rule == "eigenspace-swap") return "equal defining eigenspaces admit a swap element of determinant one";
  if (rule == "spin-odd-parts") return "spin cover of a split into two distinct odd parts whose sum is 2 mod 4";
  if (rule == "cyclic-center-parity") return "cyclic centre: exactly the quotients killing its full even part are pleasant";
  if (rule == "central-twist-witness") return "an explicit element is twisted by a central element with no square root";
  if (rule == "adjoint-trivial") return "the adjoint form of any pair is pleasant";
  if (rule == "case-analysis") return "individual case analysis";
  if (rule == "trivial-pair") return "a trivial pair has no admissible elements beyond its own fixed points";
  if (rule == "diagonal-pair") return "admissible elements of a diagonal pair act as fixed points";
  return rule;
}

/// Dimensions of the +1/-1 eigenspaces of the defining inner involution, for
/// the families realized by conjugation on a matrix group whose centre is
/// scalar. Families with an outer defining involution have no such data.
std::optional<std::pair<int, int>> defining_dims(const PairId& p) {
  switch (p.family) {
    case Family::AIIIa: return std::pair{p.r + 1, p.s + 1};
    case Family::AIIIb: return std::pair{p.n + 1, p.n + 1};
    case Family::CI: return std::pair{p.n, p.n};
    case Family::CIIa: return std::pair{2 * p.r, 2 * p.s};
    case Family::CIIb: return std::pair{2 * p.n, 2 * p.n};
    case Family::BI:
    case Family::BII: return std::pair{2 * p.r + 1, 2 * p.s};
    case Family::DIa:
    case Family::DIb:
    case Family::DIc:
      if (p.b == 1) return std::pair{2 * p.r + 1, 2 * p.s + 1};
      return std::pair{2 * p.r, 2 * p.s};
    case Family::DIIIa:
    case Family::DIIIb: return std::pair{p.n, p.n};
    default: return std::nullopt;
  }
}

/// The isogeny class of the matrix group carrying the defining eigenspace
/// realization: the simply connected SL/Sp for linear and symplectic
/// families, the vector form SO for orthogonal ones. Keyed on the family
/// rather than the ambient type, since low-rank ambient aliases (C2 = B2)
/// would otherwise misattribute the realization.
Form matrix_form(Family f) {
  switch (f) {
    case Family::BI:
    case Family::BII:
    case Family::DIa:
    case Family::DIb:
    case Family::DIc:
    case Family::DIIIa:
    case Family::DIIIb: return Form{Form::so, 0};
    default: return Form{Form::sc, 0};
  }
}

}  // namespace

const char* theta_action_name(ThetaAction a) {
  switch (a) {
    case ThetaAction::fixes: return "fixes";
    case ThetaAction::inverts: return "inverts";
    case ThetaAction::mixed: return "mixed";
  }
  return "?";
}

const char* pleasant_name(Pleasant v) {
  switch (v) {
    case Pleasant::yes: return "yes";
    case Pleasant::no: return "no";
    case Pleasant::depends_on_form: return "depends-on-form";
  }
  return "?";
}

const char* form_verdict_name(FormVerdict v) {
  switch (v) {
    case FormVerdict::yes: return "yes";
    case FormVerdict::no: return "no";
    case FormVerdict::form_not_covered: return "form-not-covered";
  }
  return "?";
}

CenterData center_of(const PairId& p0) {
  const PairId p = canonicalize(p0);
  CenterData c;
  if (p.family == Family::TRIV || p.family == Family::DIAG) {
    const SimpleCenter s = simple_center(p.t);
    if (p.family == Family::TRIV) {
      c.order = s.order;
      c.structure = s.structure;
      c.theta_action = ThetaAction::fixes;
    } else {
      c.order = s.order * s.order;
      c.structure = s.order == 1 ? "1" : s.structure + "x" + s.structure;
      c.theta_action = s.order == 1 ? ThetaAction::fixes : ThetaAction::mixed;
    }
    return c;
  }
  const SimpleType amb = ambient_type(p);
  const SimpleCenter s = simple_center(amb);
  c.order = s.order;
  c.structure = s.structure;
  switch (p.family) {
    case Family::AI:
    case Family::AII:
    case Family::EI:
    case Family::EIV:
      c.theta_action = ThetaAction::inverts;
      break;
    case Family::DIa:
    case Family::DIb:
    case Family::DIc:
      if (p.b == 1) {
        // The involution negates the volume element of the Clifford centre:
        // inversion on the cyclic centre of an odd-rank ambient, a swap of
        // the two volume classes on the Klein centre of an even-rank one.
        c.theta_action = ambient_rank(p) % 2 == 1 ? ThetaAction::inverts
                                                  : ThetaAction::mixed;
      } else {
        c.theta_action = ThetaAction::fixes;
      }
      break;
    default:
      c.theta_action = ThetaAction::fixes;
      break;
  }
  if (c.order <= 2 && c.theta_action == ThetaAction::inverts)
    c.theta_action = ThetaAction::fixes;
  return c;
}

Form pleasant_threshold(const PairId& p) {
  return threshold_info(canonicalize(p)).threshold;
}

std::string threshold_rule(const PairId& p) {
  return threshold_info(canonicalize(p)).rule;
}

bool is_nice(const PairId& p0) {
  const PairId p = canonicalize(p0);
  if (p.family == Family::TRIV || p.family == Family::DIAG)
    throw contract_error("is_nice: the nice property is defined for irreducible pairs only, not " + pair_name(p));
  return nice_family(p.family);
}

Status classify(const PairId& p0) {
  const PairId p = canonicalize(p0);
  Status st;
  const ThresholdInfo ti = threshold_info(p);
  st.threshold = ti.threshold;
  st.pleasant_rule = ti.rule;
  if (p.family == Family::TRIV || p.family == Family::DIAG) {
    st.pleasant = Pleasant::yes;
    st.nice = false;
    st.regular_known = true;
    st.provenance = {rule_sentence(ti.rule),
                     "regularity in the sense of Aizenbud-Gourevitch"};
    return st;
  }
  const SimpleType amb = ambient_type(p);
  const int z = simple_center(amb).order;
  const int kt = kernel_order(amb, ti.threshold, z, nullptr);
  if (kt == 1)
    st.pleasant = Pleasant::yes;
  else if (kt == z)
    st.pleasant = Pleasant::no;
  else
    st.pleasant = Pleasant::depends_on_form;
  st.nice = nice_family(p.family);
  st.regular_known = st.pleasant == Pleasant::yes || st.nice;
  st.provenance.push_back("involution families after Araki");
  st.provenance.push_back("pleasantness threshold: " + rule_sentence(ti.rule));
  if (st.nice) st.provenance.push_back("nice pair in Sekiguchi's classification");
  st.provenance.push_back("regularity in the sense of Aizenbud-Gourevitch");
  return st;
}

FormAnswer is_pleasant(const PairId& p0) {
  const PairId p = canonicalize(p0);
  FormAnswer a;
  if (p.family == Family::TRIV || p.family == Family::DIAG) {
    a.verdict = FormVerdict::yes;
    a.rule = p.family == Family::TRIV ? "trivial-pair" : "diagonal-pair";
    a.provenance = {rule_sentence(a.rule)};
    return a;
  }
  const SimpleType amb = ambient_type(p);
  const int z = simple_center(amb).order;
  std::string why;
  const int kf = kernel_order(amb, p.form, z, &why);
  if (kf < 0) {
    a.verdict = FormVerdict::form_not_covered;
    a.rule = why;
    return a;
  }
  const ThresholdInfo ti = threshold_info(p);
  const int kt = kernel_order(amb, ti.threshold, z, nullptr);
  const bool yes = kf % kt == 0;
  if (yes) {
    if (kt == 1) {
      a.rule = ti.rule;
    } else if (ti.rule == "eigenspace-unequal") {
      a.rule = "eigenspace-unequal";
    } else if (ti.rule == "cyclic-center-parity") {
      const bool inv = center_of(p).theta_action == ThetaAction::inverts;
      a.rule = inv ? "center-odd-inverted" : "center-odd-fixed";
    } else {
      a.rule = "adjoint-trivial";
    }
    a.verdict = FormVerdict::yes;
    if (kf > kt) a.provenance.push_back("pleasant as a further quotient of the threshold form " + form_text(ti.threshold));
  } else {
    a.verdict = FormVerdict::no;
    if (ti.rule == "eigenspace-swap" || ti.rule == "case-analysis")
      a.rule = ti.rule;
    else
      a.rule = "central-twist-witness";
  }
  a.provenance.push_back(rule_sentence(a.rule));
  if (p.form.kind == Form::sc)
    a.provenance.push_back("isogeny class: simply connected (the default when none is stated)");
  else
    a.provenance.push_back("isogeny class: " + form_text(p.form));
  return a;
}

bool is_regular_known(const PairId& p0) {
  const PairId p = canonicalize(p0);
  if (p.family == Family::TRIV || p.family == Family::DIAG) return true;
  if (nice_family(p.family)) return true;
  return is_pleasant(p).verdict == FormVerdict::yes;
}

std::string CrosscheckReport::summary() const {
  std::ostringstream os;
  os << "generic-rule crosscheck: " << pairs << " pairs, " << covered
     << " covered by a generic rule, " << disagreements << " disagreements\n";
  for (const auto& [rule, n] : fires) os << "  " << rule << ": " << n << "\n";
  if (!uncovered.empty())
    os << "  case-analysis only: " << uncovered.size() << " pairs\n";
  return os.str();
}

CrosscheckReport crosscheck_rules_vs_tables(int max_rank) {
  CrosscheckReport rep;
  struct Fire {
    std::string rule;
    Form at;
    bool positive = true;
  };
  for (const PairId& p : catalog_enumerate(max_rank)) {
    if (p.family == Family::TRIV || p.family == Family::DIAG) continue;
    ++rep.pairs;
    const CenterData c = center_of(p);
    std::vector<Fire> fired;
    const Form sc{Form::sc, 0};
    if (c.order == 1) fired.push_back({"centerless", sc, true});
    if (c.order > 1 && c.order % 2 == 1) {
      if (c.theta_action == ThetaAction::fixes)
        fired.push_back({"center-odd-fixed", sc, true});
      else if (c.theta_action == ThetaAction::inverts)
        fired.push_back({"center-odd-inverted", sc, true});
    }
    if ((p.family == Family::DIa || p.family == Family::DIb || p.family == Family::DIc) &&
        p.b == 1 && (p.r + p.s) % 2 == 0 && p.r != p.s)
      fired.push_back({"spin-odd-parts", sc, true});
    if (const auto dims = defining_dims(p)) {
      const Form mf = matrix_form(p.family);
      if (dims->first != dims->second)
        fired.push_back({"eigenspace-unequal", mf, true});
      else
        fired.push_back({"eigenspace-swap", mf, false});
    }
    if (fired.empty()) {
      rep.uncovered.push_back(pair_name(p));
      continue;
    }
    ++rep.covered;
    for (const Fire& f : fired) {
      ++rep.fires[f.rule];
      PairId q = p;
      q.form = f.at;
      const FormAnswer ans = is_pleasant(q);
      const FormVerdict want = f.positive ? FormVerdict::yes : FormVerdict::no;
      if (ans.verdict != want) {
        ++rep.disagreements;
        rep.conflicts.push_back(pair_name(p) + ": rule " + f.rule + " expects " +
                                form_verdict_name(want) + " at @" + form_text(f.at) +
                                ", classification says " + form_verdict_name(ans.verdict));
      }
    }
  }
  return rep;
}

}  // namespace satake
