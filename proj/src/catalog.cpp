#include "satake/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "satake/root_system.hpp"

namespace satake {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw contract_error(msg);
}

SimpleType st(TypeLetter l, int r) { return SimpleType{l, r}; }

// Exceptional-family Satake data: blacks and bars by Bourbaki node number.
struct ExceptionalPattern {
  TypeLetter letter;
  int rank;
  std::vector<int> blacks;
  std::vector<std::pair<int, int>> bars;
};

const ExceptionalPattern& exceptional_pattern(Family f) {
  static const std::map<Family, ExceptionalPattern> table = {
      {Family::GI, {TypeLetter::G, 2, {}, {}}},
      {Family::FI, {TypeLetter::F, 4, {}, {}}},
      {Family::FII, {TypeLetter::F, 4, {1, 2, 3}, {}}},
      {Family::EI, {TypeLetter::E, 6, {}, {}}},
      {Family::EII, {TypeLetter::E, 6, {}, {{1, 6}, {3, 5}}}},
      {Family::EIII, {TypeLetter::E, 6, {3, 4, 5}, {{1, 6}}}},
      {Family::EIV, {TypeLetter::E, 6, {2, 3, 4, 5}, {}}},
      {Family::EV, {TypeLetter::E, 7, {}, {}}},
      {Family::EVI, {TypeLetter::E, 7, {2, 5, 7}, {}}},
      {Family::EVII, {TypeLetter::E, 7, {2, 3, 4, 5}, {}}},
      {Family::EVIII, {TypeLetter::E, 8, {}, {}}},
      {Family::EIX, {TypeLetter::E, 8, {2, 3, 4, 5}, {}}},
  };
  auto it = table.find(f);
  require(it != table.end(), "not an exceptional family");
  return it->second;
}

// Number of leading white nodes of the classical one-rowed families.
int white_prefix_length(const PairId& p) {
  switch (p.family) {
    case Family::BI: return std::min(2 * p.r + 1, 2 * p.s);
    case Family::DIa: return 2 * p.s + p.b;
    default: require(false, "no white prefix"); return 0;
  }
}

PairId mk(Family f) {
  PairId p;
  p.family = f;
  return p;
}

PairId mk_n(Family f, int n) {
  PairId p = mk(f);
  p.n = n;
  return p;
}

PairId mk_rs(Family f, int r, int s, int b = 0) {
  PairId p = mk(f);
  p.r = r;
  p.s = s;
  p.b = b;
  return p;
}

PairId mk_t(Family f, SimpleType t) {
  PairId p = mk(f);
  p.t = t;
  return p;
}

std::tuple<int, Family, int, int, int, int, int, int, Form> order_key(
    const PairId& p) {
  return {catalog_rank(p),
          p.family,
          p.n,
          p.r,
          p.s,
          p.b,
          static_cast<int>(p.t.letter),
          p.t.rank,
          p.form};
}

}  // namespace

bool catalog_less(const PairId& a, const PairId& b) {
  return order_key(a) < order_key(b);
}

int ambient_rank(const PairId& p) {
  switch (p.family) {
    case Family::AI: return p.n;
    case Family::AII: return 2 * p.n - 1;
    case Family::AIIIa: return p.r + p.s + 1;
    case Family::AIIIb: return 2 * p.n + 1;
    case Family::CI: return p.n;
    case Family::CIIa: return p.r + p.s;
    case Family::CIIb: return 2 * p.n;
    case Family::BI:
    case Family::BII: return p.r + p.s;
    case Family::DIa:
    case Family::DIb:
    case Family::DIc: return p.r + p.s + p.b;
    case Family::DIIIa:
    case Family::DIIIb: return p.n;
    case Family::GI: return 2;
    case Family::FI:
    case Family::FII: return 4;
    case Family::EI: case Family::EII: case Family::EIII: case Family::EIV:
      return 6;
    case Family::EV: case Family::EVI: case Family::EVII: return 7;
    case Family::EVIII: case Family::EIX: return 8;
    case Family::TRIV: return p.t.rank;
    case Family::DIAG: return 2 * p.t.rank;
  }
  throw contract_error("unknown family");
}

SimpleType ambient_type(const PairId& p) {
  switch (p.family) {
    case Family::AI: case Family::AII: case Family::AIIIa: case Family::AIIIb:
      return st(TypeLetter::A, ambient_rank(p));
    case Family::CI: case Family::CIIa: case Family::CIIb:
      // Canonicalized: the rank-2 symplectic ambient is spelled B2.
      return make_type(TypeLetter::C, ambient_rank(p));
    case Family::BI: case Family::BII:
      return st(TypeLetter::B, ambient_rank(p));
    case Family::DIa: case Family::DIb: case Family::DIc:
    case Family::DIIIa: case Family::DIIIb:
      return st(TypeLetter::D, ambient_rank(p));
    case Family::GI: return st(TypeLetter::G, 2);
    case Family::FI: case Family::FII: return st(TypeLetter::F, 4);
    case Family::EI: case Family::EII: case Family::EIII: case Family::EIV:
    case Family::EV: case Family::EVI: case Family::EVII:
    case Family::EVIII: case Family::EIX:
      return st(TypeLetter::E, ambient_rank(p));
    case Family::TRIV: return p.t;
    case Family::DIAG:
      throw contract_error("diagonal pair has a product ambient");
  }
  throw contract_error("unknown family");
}

int catalog_rank(const PairId& p) {
  if (p.family == Family::TRIV || p.family == Family::DIAG) return p.t.rank;
  return ambient_rank(p);
}

bool is_canonical_pair(const PairId& p) {
  switch (p.family) {
    case Family::AI: return p.n >= 1;
    case Family::AII: return p.n >= 2;
    case Family::AIIIa: return p.r > p.s && p.s >= 0;
    case Family::AIIIb: return p.n >= 1;
    case Family::CI: return p.n >= 2;
    case Family::CIIa: return p.r > p.s && p.s >= 1;
    case Family::CIIb: return p.n >= 2;
    case Family::BI:
      return p.r >= 0 && p.s >= 1 && p.s != p.r && p.s != p.r + 1;
    case Family::BII:
      return (p.s == p.r && p.r >= 2) || (p.s == p.r + 1 && p.r >= 1);
    case Family::DIa:
      if (p.r - p.s < 2) return false;
      if (p.b == 0) return p.s >= 1 && !(p.r == 3 && p.s == 1);
      if (p.b == 1) return p.s >= 0 && !(p.r == 2 && p.s == 0);
      return false;
    case Family::DIb:
      if (p.r != p.s + 1) return false;
      if (p.b == 0) return p.s >= 2;
      if (p.b == 1) return p.s >= 1;
      return false;
    case Family::DIc:
      return p.r == p.s && (p.b == 0 || p.b == 1) && p.s >= 2;
    case Family::DIIIa: return p.n >= 4 && p.n % 2 == 0;
    case Family::DIIIb: return p.n >= 5 && p.n % 2 == 1;
    case Family::GI: case Family::FI: case Family::FII:
    case Family::EI: case Family::EII: case Family::EIII: case Family::EIV:
    case Family::EV: case Family::EVI: case Family::EVII:
    case Family::EVIII: case Family::EIX:
      return true;
    case Family::TRIV: case Family::DIAG:
      return is_canonical_type(p.t.letter, p.t.rank);
  }
  return false;
}

namespace {

// Zero the parameter fields a family does not use, so equal pairs compare
// equal however they were produced.
PairId scrub(PairId p) {
  PairId out;
  out.family = p.family;
  out.form = p.form;
  switch (p.family) {
    case Family::AI: case Family::AII: case Family::AIIIb:
    case Family::CI: case Family::CIIb:
    case Family::DIIIa: case Family::DIIIb:
      out.n = p.n;
      break;
    case Family::AIIIa: case Family::CIIa: case Family::BI: case Family::BII:
      out.r = p.r;
      out.s = p.s;
      break;
    case Family::DIa: case Family::DIb: case Family::DIc:
      out.r = p.r;
      out.s = p.s;
      out.b = p.b;
      break;
    case Family::TRIV: case Family::DIAG:
      out.t = p.t;
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

PairId canonicalize(const PairId& p_in) {
  PairId p = p_in;
  for (int guard = 0; guard < 8; ++guard) {
    if (is_canonical_pair(p)) return scrub(p);
    switch (p.family) {
      case Family::AI:
        require(false, "no linear split pair of rank " + std::to_string(p.n));
        break;
      case Family::AII:
        require(p.n >= 1, "bad quaternionic parameter");
        // n = 1: (A1, C1) is the whole group.
        p.family = Family::TRIV;
        p.t = st(TypeLetter::A, 1);
        break;
      case Family::AIIIa:
        if (p.s > p.r) std::swap(p.r, p.s);
        if (p.r == p.s) {
          require(p.r >= 0, "bad unitary parameters");
          p.family = Family::AIIIb;
          p.n = p.r;
        } else {
          require(p.s >= 0, "bad unitary parameters");
        }
        break;
      case Family::AIIIb:
        require(p.n == 0, "bad unitary parameter");
        p.family = Family::AI;  // (A1, torus): the rank-1 split pair
        p.n = 1;
        break;
      case Family::CI:
        require(p.n == 1, "bad symplectic-split parameter");
        p.family = Family::AI;
        p.n = 1;
        break;
      case Family::CIIa:
        if (p.s > p.r) std::swap(p.r, p.s);
        if (p.s == 0) {
          require(p.r >= 1, "bad quaternion-unitary parameters");
          p.family = Family::TRIV;
          p.t = make_type(TypeLetter::C, p.r);
        } else if (p.r == p.s) {
          p.family = Family::CIIb;
          p.n = p.r;
        }
        break;
      case Family::CIIb:
        require(p.n == 1, "bad quaternion-unitary parameter");
        p.family = Family::BI;  // (C2, C1+C1) = (B2, D2) = (B2, A1+A1)
        p.r = 0;
        p.s = 2;
        break;
      case Family::BI:
      case Family::BII:
        require(p.r >= 0 && p.s >= 0, "bad orthogonal parameters");
        if (p.s == 0) {
          p.family = Family::TRIV;
          p.t = make_type(TypeLetter::B, p.r);
          break;
        }
        if (p.s == p.r || p.s == p.r + 1) {
          if (p.r == 0) {  // (B1, D1): the rank-1 split pair
            p.family = Family::AI;
            p.n = 1;
          } else if (p.r == 1 && p.s == 1) {  // (B2, B1+D1) = (C2, A1+torus)
            p.family = Family::CI;
            p.n = 2;
          } else {
            p.family = Family::BII;
          }
        } else {
          p.family = Family::BI;
        }
        break;
      case Family::DIa:
      case Family::DIb:
      case Family::DIc: {
        require(p.b == 0 || p.b == 1, "bad orthogonal chirality flag");
        if (p.s > p.r) std::swap(p.r, p.s);
        require(ambient_rank(p) >= 2, "even-orthogonal ambient too small");
        const int diff = p.r - p.s;
        if (diff >= 2) p.family = Family::DIa;
        if (diff == 1) p.family = Family::DIb;
        if (diff == 0) p.family = Family::DIc;
        if (p.family == Family::DIa && p.b == 0 && p.s == 0) {
          p.family = Family::TRIV;  // (D_r, D_r + D_0)
          p.t = make_type(TypeLetter::D, p.r);
          break;
        }
        if (p.family == Family::DIa && p.b == 0 && p.r == 3 && p.s == 1) {
          p.family = Family::DIIIa;  // (D4, D3+D1) = (D4, A3+torus)
          p.n = 4;
          break;
        }
        if (p.family == Family::DIa && p.b == 1 && p.r == 2 && p.s == 0) {
          p.family = Family::AII;  // (D3, B2) = (A3, C2)
          p.n = 2;
          break;
        }
        if (p.family == Family::DIb && p.b == 0 && p.s == 1) {
          p.family = Family::AIIIb;  // (D3, D2+D1) = (A3, A1+A1+torus)
          p.n = 1;
          break;
        }
        if (p.family == Family::DIc && p.b == 1 && p.s == 1) {
          p.family = Family::AI;  // (D3, B1+B1) = (A3, D2)
          p.n = 3;
          break;
        }
        require(is_canonical_pair(p), "even-orthogonal ambient too small");
        break;
      }
      case Family::DIIIa:
      case Family::DIIIb:
        require(p.n >= 3, "orthogonal-star ambient too small");
        if (p.n == 3) {  // (D3, A2+torus) = (A3, A2+torus)
          p.family = Family::AIIIa;
          p.r = 2;
          p.s = 0;
          break;
        }
        p.family = p.n % 2 == 0 ? Family::DIIIa : Family::DIIIb;
        break;
      case Family::TRIV:
      case Family::DIAG:
        p.t = make_type(p.t.letter, p.t.rank);  // throws on D2/D1/rank 0
        break;
      default:
        require(false, "bad parameters for " +
                           std::string(family_name(p.family)));
    }
  }
  throw contract_error("canonicalization did not converge");
}

// ---------------------------------------------------------------------------
// Names.
// ---------------------------------------------------------------------------

std::string pair_name(const PairId& p) {
  std::ostringstream out;
  out << family_name(p.family);
  switch (p.family) {
    case Family::AI: case Family::AII: case Family::AIIIb:
    case Family::CI: case Family::CIIb:
    case Family::DIIIa: case Family::DIIIb:
      out << "(n=" << p.n << ")";
      break;
    case Family::AIIIa: case Family::CIIa: case Family::BI: case Family::BII:
      out << "(r=" << p.r << ",s=" << p.s << ")";
      break;
    case Family::DIa: case Family::DIb: case Family::DIc:
      out << "(r=" << p.r << ",s=" << p.s;
      if (p.b == 1) out << ",b=1";
      out << ")";
      break;
    case Family::TRIV: case Family::DIAG:
      out << "(" << type_name(p.t) << ")";
      break;
    default:
      break;  // exceptional families have no parameters
  }
  switch (p.form.kind) {
    case Form::sc: break;
    case Form::so: out << "@so"; break;
    case Form::adj: out << "@adj"; break;
    case Form::quot: out << "@quot(" << p.form.k << ")"; break;
  }
  return out.str();
}

PairId parse_pair_name(const std::string& text) {
  // FAMILY [ '(' params ')' ] [ '@' form ]
  std::size_t i = 0;
  while (i < text.size() && text[i] != '(' && text[i] != '@') ++i;
  const std::string fam = text.substr(0, i);
  PairId p;
  bool found = false;
  for (int f = 0; f <= static_cast<int>(Family::DIAG); ++f) {
    if (fam == family_name(static_cast<Family>(f))) {
      p.family = static_cast<Family>(f);
      found = true;
      break;
    }
  }
  if (!found) throw parse_error("unknown family: '" + fam + "'");

  std::vector<std::pair<std::string, std::string>> params;  // (name, value)
  if (i < text.size() && text[i] == '(') {
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw parse_error("missing ')' in " + text);
    std::string inner = text.substr(i + 1, close - i - 1);
    std::istringstream ps(inner);
    std::string item;
    while (std::getline(ps, item, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) {
        params.emplace_back("", item);
      } else {
        params.emplace_back(item.substr(0, eq), item.substr(eq + 1));
      }
    }
    i = close + 1;
  }

  // Positional parameter names by family.
  std::vector<std::string> positional;
  bool takes_type = false;
  switch (p.family) {
    case Family::AI: case Family::AII: case Family::AIIIb:
    case Family::CI: case Family::CIIb:
    case Family::DIIIa: case Family::DIIIb:
      positional = {"n"};
      break;
    case Family::AIIIa: case Family::CIIa: case Family::BI: case Family::BII:
      positional = {"r", "s"};
      break;
    case Family::DIa: case Family::DIb: case Family::DIc:
      positional = {"r", "s", "b"};
      break;
    case Family::TRIV: case Family::DIAG:
      takes_type = true;
      break;
    default:
      break;
  }
  if (takes_type) {
    if (params.size() != 1 || !params[0].first.empty()) {
      throw parse_error("expected a single type parameter in " + text);
    }
    TypeLetter letter;
    int rank;
    parse_type_name(params[0].second, letter, rank);
    p.t = SimpleType{letter, rank};
  } else {
    if (params.size() > positional.size()) {
      throw parse_error("too many parameters in " + text);
    }
    std::set<std::string> assigned;
    std::size_t pos = 0;
    for (auto& [name, value] : params) {
      std::string key = name.empty() ? positional[pos] : name;
      ++pos;
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(value, &used);
        if (used != value.size()) throw parse_error("bad integer");
      } catch (...) {
        throw parse_error("bad parameter value '" + value + "' in " + text);
      }
      if (std::find(positional.begin(), positional.end(), key) ==
          positional.end()) {
        throw parse_error("unknown parameter '" + key + "' in " + text);
      }
      if (!assigned.insert(key).second) {
        throw parse_error("duplicate parameter '" + key + "' in " + text);
      }
      if (key == "n") p.n = v;
      else if (key == "r") p.r = v;
      else if (key == "s") p.s = v;
      else p.b = v;
    }
    // Every parameter except the chirality flag b (default 0) is required.
    for (const std::string& key : positional) {
      if (key != "b" && !assigned.count(key)) {
        throw parse_error("missing parameter '" + key + "' in " + text);
      }
    }
  }

  if (i < text.size()) {
    if (text[i] != '@') throw parse_error("trailing junk in " + text);
    std::string form = text.substr(i + 1);
    if (form == "sc") p.form = Form{Form::sc, 0};
    else if (form == "so") p.form = Form{Form::so, 0};
    else if (form == "adj") p.form = Form{Form::adj, 0};
    else if (form.rfind("quot(", 0) == 0 && form.back() == ')') {
      int k = 0;
      try {
        k = std::stoi(form.substr(5, form.size() - 6));
      } catch (...) {
        throw parse_error("bad quotient order in " + text);
      }
      if (k < 2) throw parse_error("quotient order must be >= 2");
      p.form = Form{Form::quot, k};
    } else {
      throw parse_error("unknown form '" + form + "' in " + text);
    }
  }
  try {
    return canonicalize(p);
  } catch (const contract_error& e) {
    throw parse_error(std::string(e.what()) + " (in '" + text + "')");
  }
}

std::string display_name(const PairId& p) {
  auto sub = [](TypeLetter l, int r) {
    static const char* kLetters = "ABCDEFG";
    return std::string(1, kLetters[static_cast<int>(l)]) + "_" +
           std::to_string(r);
  };
  std::string g;
  std::vector<std::string> h;
  auto add = [&](TypeLetter l, int r) {
    if (r > 0) h.push_back(sub(l, r));  // rank-0 summands are dropped
  };
  using TL = TypeLetter;
  switch (p.family) {
    case Family::AI:
      g = sub(TL::A, p.n);
      if (p.n == 1) h.push_back("C");
      else if (p.n % 2 == 0) add(TL::B, p.n / 2);
      else add(TL::D, (p.n + 1) / 2);
      break;
    case Family::AII:
      g = sub(TL::A, 2 * p.n - 1);
      add(TL::C, p.n);
      break;
    case Family::AIIIa:
      g = sub(TL::A, p.r + p.s + 1);
      add(TL::A, p.r);
      add(TL::A, p.s);
      h.push_back("C");
      break;
    case Family::AIIIb:
      g = sub(TL::A, 2 * p.n + 1);
      add(TL::A, p.n);
      add(TL::A, p.n);
      h.push_back("C");
      break;
    case Family::CI:
      g = sub(TL::C, p.n);
      add(TL::A, p.n - 1);
      h.push_back("C");
      break;
    case Family::CIIa:
      g = sub(TL::C, p.r + p.s);
      add(TL::C, p.r);
      add(TL::C, p.s);
      break;
    case Family::CIIb:
      g = sub(TL::C, 2 * p.n);
      add(TL::C, p.n);
      add(TL::C, p.n);
      break;
    case Family::BI:
    case Family::BII:
      g = sub(TL::B, p.r + p.s);
      add(TL::B, p.r);
      add(TL::D, p.s);
      break;
    case Family::DIa:
    case Family::DIb:
    case Family::DIc:
      g = sub(TL::D, ambient_rank(p));
      if (p.b == 0) {
        add(TL::D, p.r);
        add(TL::D, p.s);
      } else {
        add(TL::B, p.r);
        add(TL::B, p.s);
      }
      break;
    case Family::DIIIa:
    case Family::DIIIb:
      g = sub(TL::D, p.n);
      add(TL::A, p.n - 1);
      h.push_back("C");
      break;
    case Family::GI: g = "G_2"; h = {"A_1", "A_1"}; break;
    case Family::FI: g = "F_4"; h = {"B_4"}; break;
    case Family::FII: g = "F_4"; h = {"C_3", "A_1"}; break;
    case Family::EI: g = "E_6"; h = {"C_4"}; break;
    case Family::EII: g = "E_6"; h = {"A_5", "A_1"}; break;
    case Family::EIII: g = "E_6"; h = {"D_5", "C"}; break;
    case Family::EIV: g = "E_6"; h = {"F_4"}; break;
    case Family::EV: g = "E_7"; h = {"A_7"}; break;
    case Family::EVI: g = "E_7"; h = {"D_6", "A_1"}; break;
    case Family::EVII: g = "E_7"; h = {"E_6", "C"}; break;
    case Family::EVIII: g = "E_8"; h = {"D_8"}; break;
    case Family::EIX: g = "E_8"; h = {"E_7", "A_1"}; break;
    case Family::TRIV:
      g = sub(p.t.letter, p.t.rank);
      h = {g};
      break;
    case Family::DIAG:
      g = sub(p.t.letter, p.t.rank) + "+" + sub(p.t.letter, p.t.rank);
      h = {sub(p.t.letter, p.t.rank)};
      break;
  }
  std::string hs;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) hs += "+";
    hs += h[i];
  }
  return "(" + g + "," + hs + ")";
}

namespace {

// "B_4" -> (B, 4); degenerate ranks (0, 1, 2 for D, ...) pass through.
void parse_subscript_type(const std::string& text, TypeLetter& letter,
                          int& rank) {
  const std::size_t us = text.find('_');
  if (us == std::string::npos || us != 1) {
    throw parse_error("bad type display '" + text + "'");
  }
  std::string plain = text.substr(0, 1) + text.substr(us + 1);
  if (plain.size() < 2) throw parse_error("bad type display '" + text + "'");
  switch (plain[0]) {
    case 'A': letter = TypeLetter::A; break;
    case 'B': letter = TypeLetter::B; break;
    case 'C': letter = TypeLetter::C; break;
    case 'D': letter = TypeLetter::D; break;
    case 'E': letter = TypeLetter::E; break;
    case 'F': letter = TypeLetter::F; break;
    case 'G': letter = TypeLetter::G; break;
    default: throw parse_error("bad type display '" + text + "'");
  }
  rank = 0;
  for (std::size_t i = 1; i < plain.size(); ++i) {
    if (plain[i] < '0' || plain[i] > '9') {
      throw parse_error("bad type display '" + text + "'");
    }
    rank = rank * 10 + (plain[i] - '0');
  }
}

std::vector<std::string> split_plus(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '+') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

PairId parse_display_name(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw parse_error("display must be parenthesized: '" + text + "'");
  }
  const std::string inner = text.substr(1, text.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string::npos) {
    throw parse_error("display needs two members: '" + text + "'");
  }
  const std::string gs = inner.substr(0, comma);
  const std::string hs = inner.substr(comma + 1);

  // Fixed-point side: subscripted summands plus torus summands "C".
  int torus = 0;
  std::vector<std::pair<TypeLetter, int>> parts;
  for (const std::string& item : split_plus(hs)) {
    if (item == "C") {
      ++torus;
      continue;
    }
    TypeLetter l;
    int r;
    parse_subscript_type(item, l, r);
    if (r == 0) continue;  // degenerate rank-0 summand
    parts.emplace_back(l, r);
  }
  std::sort(parts.begin(), parts.end());

  auto fail = [&]() -> PairId {
    throw parse_error("display denotes no pair: '" + text + "'");
  };
  auto done = [&](PairId p) {
    try {
      return canonicalize(p);
    } catch (const contract_error& e) {
      throw parse_error(std::string(e.what()) + " (in display '" + text +
                        "')");
    }
  };
  auto one = [&](TypeLetter l) {
    return parts.size() == 1 && parts[0].first == l;
  };
  auto two = [&](TypeLetter l) {
    return parts.size() == 2 && parts[0].first == l && parts[1].first == l;
  };

  // Diagonal ambient "X_k+X_k".
  const std::vector<std::string> gparts = split_plus(gs);
  if (gparts.size() == 2) {
    TypeLetter l1, l2;
    int r1, r2;
    parse_subscript_type(gparts[0], l1, r1);
    parse_subscript_type(gparts[1], l2, r2);
    if (l1 != l2 || r1 != r2 || torus != 0 || parts.size() != 1 ||
        parts[0] != std::make_pair(l1, r1)) {
      return fail();
    }
    return done(mk_t(Family::DIAG, st(l1, r1)));
  }
  if (gparts.size() != 1) return fail();

  TypeLetter gl;
  int gn;
  parse_subscript_type(gs, gl, gn);
  if (gn <= 0) return fail();

  // Trivial pair: the fixed-point side is the whole ambient.
  if (torus == 0 && one(gl) && parts[0].second == gn) {
    return done(mk_t(Family::TRIV, st(gl, gn)));
  }

  switch (gl) {
    case TypeLetter::A: {
      if (torus == 0 && one(TypeLetter::B) && 2 * parts[0].second == gn) {
        return done(mk_n(Family::AI, gn));
      }
      if (torus == 0 && one(TypeLetter::D) && 2 * parts[0].second - 1 == gn) {
        return done(mk_n(Family::AI, gn));
      }
      if (torus == 1 && parts.empty() && gn == 1) {
        return done(mk_n(Family::AI, 1));
      }
      if (torus == 0 && one(TypeLetter::C) && 2 * parts[0].second - 1 == gn) {
        return done(mk_n(Family::AII, parts[0].second));
      }
      if (torus == 1 && one(TypeLetter::A) && parts[0].second + 1 == gn) {
        return done(mk_rs(Family::AIIIa, parts[0].second, 0));
      }
      if (torus == 1 && two(TypeLetter::A) &&
          parts[0].second + parts[1].second + 1 == gn) {
        return done(mk_rs(Family::AIIIa, parts[1].second, parts[0].second));
      }
      return fail();
    }
    case TypeLetter::C: {
      if (torus == 1 && one(TypeLetter::A) && parts[0].second + 1 == gn) {
        return done(mk_n(Family::CI, gn));
      }
      if (torus == 0 && one(TypeLetter::C) && parts[0].second < gn) {
        return done(
            mk_rs(Family::CIIa, parts[0].second, gn - parts[0].second));
      }
      if (torus == 0 && two(TypeLetter::C) &&
          parts[0].second + parts[1].second == gn) {
        return done(mk_rs(Family::CIIa, parts[1].second, parts[0].second));
      }
      return fail();
    }
    case TypeLetter::B: {
      // A torus summand inside an orthogonal group is SO_2; read "+C" as D_1.
      if (torus == 1 && one(TypeLetter::B)) {
        parts.emplace_back(TypeLetter::D, 1);
        torus = 0;
      }
      if (torus != 0) return fail();
      int br = -1, ds = -1;
      if (parts.size() == 1 && parts[0].first == TypeLetter::B) {
        br = parts[0].second;
        ds = gn - br;
      } else if (parts.size() == 1 && parts[0].first == TypeLetter::D) {
        br = 0;
        ds = parts[0].second;
      } else if (parts.size() == 2 && parts[0].first == TypeLetter::B &&
                 parts[1].first == TypeLetter::D) {
        br = parts[0].second;
        ds = parts[1].second;
      } else {
        return fail();
      }
      if (br + ds != gn || ds < 1) return fail();
      return done(mk_rs(Family::BI, br, ds));
    }
    case TypeLetter::D: {
      if (torus == 1 && one(TypeLetter::A) && parts[0].second + 1 == gn) {
        PairId p = mk_n(gn % 2 == 0 ? Family::DIIIa : Family::DIIIb, gn);
        return done(p);
      }
      // As in type B, a leftover torus summand is an SO_2 factor.
      if (torus == 1 && !parts.empty()) {
        parts.emplace_back(TypeLetter::D, 1);
        std::sort(parts.begin(), parts.end());
        torus = 0;
      }
      if (torus != 0) return fail();
      if (two(TypeLetter::D) &&
          parts[0].second + parts[1].second == gn) {
        return done(mk_rs(Family::DIa, parts[1].second, parts[0].second, 0));
      }
      if (one(TypeLetter::D) && parts[0].second < gn) {
        return done(
            mk_rs(Family::DIa, gn - parts[0].second, parts[0].second, 0));
      }
      if (two(TypeLetter::B) &&
          parts[0].second + parts[1].second + 1 == gn) {
        return done(mk_rs(Family::DIa, parts[1].second, parts[0].second, 1));
      }
      if (one(TypeLetter::B) && parts[0].second + 1 <= gn) {
        return done(
            mk_rs(Family::DIa, parts[0].second, gn - 1 - parts[0].second, 1));
      }
      return fail();
    }
    case TypeLetter::G: {
      if (gn == 2 && torus == 0 && two(TypeLetter::A) &&
          parts[0].second == 1 && parts[1].second == 1) {
        return done(mk(Family::GI));
      }
      return fail();
    }
    case TypeLetter::F: {
      if (gn != 4 || torus != 0) return fail();
      if (one(TypeLetter::B) && parts[0].second == 4) return done(mk(Family::FI));
      if (parts.size() == 2 && parts[0] == std::make_pair(TypeLetter::A, 1) &&
          parts[1] == std::make_pair(TypeLetter::C, 3)) {
        return done(mk(Family::FII));
      }
      return fail();
    }
    case TypeLetter::E: {
      if (gn == 6) {
        if (torus == 0 && one(TypeLetter::C) && parts[0].second == 4) {
          return done(mk(Family::EI));
        }
        if (torus == 0 && parts.size() == 2 &&
            parts[0] == std::make_pair(TypeLetter::A, 1) &&
            parts[1] == std::make_pair(TypeLetter::A, 5)) {
          return done(mk(Family::EII));
        }
        if (torus == 1 && one(TypeLetter::D) && parts[0].second == 5) {
          return done(mk(Family::EIII));
        }
        if (torus == 0 && one(TypeLetter::F) && parts[0].second == 4) {
          return done(mk(Family::EIV));
        }
      }
      if (gn == 7) {
        if (torus == 0 && one(TypeLetter::A) && parts[0].second == 7) {
          return done(mk(Family::EV));
        }
        if (torus == 0 && parts.size() == 2 &&
            parts[0] == std::make_pair(TypeLetter::A, 1) &&
            parts[1] == std::make_pair(TypeLetter::D, 6)) {
          return done(mk(Family::EVI));
        }
        if (torus == 1 && one(TypeLetter::E) && parts[0].second == 6) {
          return done(mk(Family::EVII));
        }
      }
      if (gn == 8) {
        if (torus == 0 && one(TypeLetter::D) && parts[0].second == 8) {
          return done(mk(Family::EVIII));
        }
        if (torus == 0 && parts.size() == 2 &&
            parts[0] == std::make_pair(TypeLetter::A, 1) &&
            parts[1] == std::make_pair(TypeLetter::E, 7)) {
          return done(mk(Family::EIX));
        }
      }
      return fail();
    }
  }
  return fail();
}

// ---------------------------------------------------------------------------
// Satake diagrams.
// ---------------------------------------------------------------------------

SatakeDiagram satake_of(const PairId& p_in) {
  const PairId p = canonicalize(p_in);
  if (p.family == Family::DIAG) {
    SatakeDiagram d;
    const Diagram one = dynkin_diagram(p.t);
    for (int copy = 1; copy <= 2; ++copy) {
      for (int i = 0; i < one.size(); ++i) {
        add_node(d.base, one.nodes[i] + "." + std::to_string(copy));
        d.black.push_back(false);
        d.bar.push_back(-1);
      }
    }
    const int off = one.size();
    for (const DiagramEdge& e : one.edges) {
      for (int copy = 0; copy < 2; ++copy) {
        DiagramEdge f = e;
        f.u += copy * off;
        f.v += copy * off;
        if (f.arrow >= 0) f.arrow += copy * off;
        d.base.edges.push_back(f);
      }
    }
    for (int i = 0; i < off; ++i) {
      d.bar[i] = i + off;
      d.bar[i + off] = i;
    }
    validate(d);
    return d;
  }
  if (p.family == Family::TRIV) {
    return monochrome(dynkin_diagram(p.t), /*all_black=*/true);
  }

  SatakeDiagram d = monochrome(dynkin_diagram(ambient_type(p)), false);
  const int n = d.size();
  auto blacken = [&](int node) { d.black[node - 1] = true; };
  auto bar = [&](int x, int y) {
    d.bar[x - 1] = y - 1;
    d.bar[y - 1] = x - 1;
  };
  switch (p.family) {
    case Family::AI:
      break;
    case Family::AII:
      for (int i = 1; i <= n; i += 2) blacken(i);
      break;
    case Family::AIIIa: {
      const int N = p.r + p.s + 2;
      for (int i = 1; i <= p.s + 1; ++i) bar(i, N - i);
      for (int i = p.s + 2; i <= p.r; ++i) blacken(i);
      break;
    }
    case Family::AIIIb:
      for (int i = 1; i <= p.n; ++i) bar(i, 2 * p.n + 2 - i);
      break;
    case Family::CI:
      break;
    case Family::CIIa:
      for (int i = 1; i <= n; ++i) {
        if (!(i % 2 == 0 && i <= 2 * p.s)) blacken(i);
      }
      break;
    case Family::CIIb:
      for (int i = 1; i <= n; i += 2) blacken(i);
      break;
    case Family::BI:
    case Family::DIa: {
      const int white = white_prefix_length(p);
      for (int i = white + 1; i <= n; ++i) blacken(i);
      break;
    }
    case Family::BII:
    case Family::DIc:
      break;
    case Family::DIb:
      bar(n - 1, n);
      break;
    case Family::DIIIa:
      for (int i = 1; i <= n - 2; i += 2) blacken(i);
      blacken(n - 1);
      break;
    case Family::DIIIb:
      for (int i = 1; i <= n - 2; i += 2) blacken(i);
      bar(n - 1, n);
      break;
    default: {
      const ExceptionalPattern& pat = exceptional_pattern(p.family);
      for (int b : pat.blacks) blacken(b);
      for (auto [x, y] : pat.bars) bar(x, y);
      break;
    }
  }
  validate(d);
  return d;
}

ExtendedSatakeDiagram extended_satake_of(const PairId& p_in) {
  const PairId p = canonicalize(p_in);
  ExtendedSatakeDiagram out;
  if (p.family == Family::DIAG) {
    const Diagram one = extended_diagram(p.t);
    SatakeDiagram& d = out.base;
    for (int copy = 1; copy <= 2; ++copy) {
      for (int i = 0; i < one.size(); ++i) {
        add_node(d.base, one.nodes[i] + "." + std::to_string(copy),
                 one.marks[i]);
        d.black.push_back(false);
        d.bar.push_back(-1);
      }
    }
    const int off = one.size();
    for (const DiagramEdge& e : one.edges) {
      for (int copy = 0; copy < 2; ++copy) {
        DiagramEdge f = e;
        f.u += copy * off;
        f.v += copy * off;
        if (f.arrow >= 0) f.arrow += copy * off;
        d.base.edges.push_back(f);
      }
    }
    for (int i = 0; i < off; ++i) {
      d.bar[i] = i + off;
      d.bar[i + off] = i;
    }
    out.gamma_nodes = {d.base.index_of("g.1"), d.base.index_of("g.2")};
    validate(d);
    return out;
  }

  const SimpleType amb =
      p.family == Family::TRIV ? p.t : ambient_type(p);
  const Diagram ext = extended_diagram(amb);
  const SatakeDiagram plain = satake_of(p);
  SatakeDiagram& d = out.base;
  d.base = ext;
  d.black.assign(ext.size(), false);
  d.bar.assign(ext.size(), -1);
  for (int i = 0; i < plain.size(); ++i) {
    // Both diagrams list a1..an in construction order.
    d.black[i] = plain.black[i];
    d.bar[i] = plain.bar[i];
  }
  const int g = ext.index_of("g");
  d.black[g] = p.family == Family::TRIV;
  out.gamma_nodes = {g};
  validate(d);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration and recognition.
// ---------------------------------------------------------------------------

namespace {

// All canonical non-trivial, non-diagonal pairs with the given ambient rank,
// in family-then-parameter order.
std::vector<PairId> pairs_with_ambient_rank(int k) {
  std::vector<PairId> out;
  auto push = [&](PairId p) {
    require(is_canonical_pair(p), "enumerated a non-canonical id");
    require(ambient_rank(p) == k, "enumerated the wrong rank");
    out.push_back(p);
  };
  if (k >= 1) push(mk_n(Family::AI, k));
  if (k >= 3 && k % 2 == 1) push(mk_n(Family::AII, (k + 1) / 2));
  for (int s = 0; 2 * s < k - 1; ++s) push(mk_rs(Family::AIIIa, k - 1 - s, s));
  if (k >= 3 && k % 2 == 1) push(mk_n(Family::AIIIb, (k - 1) / 2));
  if (k >= 2) push(mk_n(Family::CI, k));
  for (int s = 1; 2 * s < k; ++s) push(mk_rs(Family::CIIa, k - s, s));
  if (k >= 4 && k % 2 == 0) push(mk_n(Family::CIIb, k / 2));
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - r;
    if (s >= 1 && s != r && s != r + 1 && !(r == 0 && s == 1)) {
      push(mk_rs(Family::BI, r, s));
    }
  }
  if (k >= 4 && k % 2 == 0) push(mk_rs(Family::BII, k / 2, k / 2));
  if (k >= 3 && k % 2 == 1) push(mk_rs(Family::BII, (k - 1) / 2, (k + 1) / 2));
  for (int b = 0; b <= 1; ++b) {
    for (int s = 1 - b; 2 * s + 2 + b <= k; ++s) {
      PairId p = mk_rs(Family::DIa, k - b - s, s, b);
      if (is_canonical_pair(p)) push(p);
    }
  }
  if (k >= 5 && k % 2 == 1) push(mk_rs(Family::DIb, (k + 1) / 2, (k - 1) / 2));
  if (k >= 4 && k % 2 == 0) push(mk_rs(Family::DIb, k / 2, k / 2 - 1, 1));
  if (k >= 4 && k % 2 == 0) push(mk_rs(Family::DIc, k / 2, k / 2));
  if (k >= 5 && k % 2 == 1) push(mk_rs(Family::DIc, (k - 1) / 2, (k - 1) / 2, 1));
  if (k >= 4 && k % 2 == 0) push(mk_n(Family::DIIIa, k));
  if (k >= 5 && k % 2 == 1) push(mk_n(Family::DIIIb, k));
  if (k == 2) push(mk(Family::GI));
  if (k == 4) {
    push(mk(Family::FI));
    push(mk(Family::FII));
  }
  if (k == 6) {
    for (Family f : {Family::EI, Family::EII, Family::EIII, Family::EIV}) {
      push(mk(f));
    }
  }
  if (k == 7) {
    for (Family f : {Family::EV, Family::EVI, Family::EVII}) push(mk(f));
  }
  if (k == 8) {
    push(mk(Family::EVIII));
    push(mk(Family::EIX));
  }
  std::sort(out.begin(), out.end(), catalog_less);
  return out;
}

}  // namespace

std::vector<PairId> catalog_enumerate(int max_rank) {
  require(max_rank >= 1, "max rank must be positive");
  std::vector<PairId> out;
  for (int k = 1; k <= max_rank; ++k) {
    std::vector<PairId> level = pairs_with_ambient_rank(k);
    for (TypeLetter l : {TypeLetter::A, TypeLetter::B, TypeLetter::C,
                         TypeLetter::D, TypeLetter::E, TypeLetter::F,
                         TypeLetter::G}) {
      if (is_canonical_type(l, k)) {
        level.push_back(mk_t(Family::TRIV, st(l, k)));
        level.push_back(mk_t(Family::DIAG, st(l, k)));
      }
    }
    std::sort(level.begin(), level.end(), catalog_less);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// Lazily built per-size dictionaries mapping canonical diagram forms to
// catalog ids (classical + exceptional families only).
const std::map<std::string, PairId>& dictionary_for_size(int n) {
  static std::map<int, std::map<std::string, PairId>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<std::string, PairId> dict;
  for (const PairId& p : pairs_with_ambient_rank(n)) {
    const std::string key = canonical_form(satake_of(p));
    auto [pos, inserted] = dict.emplace(key, p);
    if (!inserted) {
      throw contract_error("catalog diagrams collide: " +
                           pair_name(pos->second) + " vs " + pair_name(p));
    }
  }
  return cache.emplace(n, std::move(dict)).first->second;
}

}  // namespace

PairId recognize(const SatakeDiagram& d_in) {
  SatakeDiagram d = d_in;
  d.base.marks.assign(d.size(), 0);
  validate(d);
  if (d.size() == 0) {
    throw contract_error("empty diagram denotes a pure torus, not a pair");
  }
  if (components(d).size() != 1) {
    throw contract_error("recognize requires a connected diagram");
  }
  const bool any_white =
      std::any_of(d.black.begin(), d.black.end(), [](bool b) { return !b; });
  if (!any_white) {
    return mk_t(Family::TRIV, classify_shape(d.base));
  }

  // Diagonal test: whites only, exactly two edge-components exchanged
  // node-for-node by the bars.
  const bool any_black =
      std::any_of(d.black.begin(), d.black.end(), [](bool b) { return b; });
  if (!any_black) {
    SatakeDiagram unbarred = d;
    std::fill(unbarred.bar.begin(), unbarred.bar.end(), -1);
    std::vector<SatakeDiagram> halves = components(unbarred);
    if (halves.size() == 2) {
      std::vector<int> side(d.size(), -1);
      for (int h = 0; h < 2; ++h) {
        for (const std::string& id : halves[h].base.nodes) {
          side[d.base.index_of(id)] = h;
        }
      }
      bool diagonal = true;
      for (int i = 0; i < d.size() && diagonal; ++i) {
        if (d.bar[i] < 0 || side[d.bar[i]] == side[i]) diagonal = false;
      }
      if (diagonal) {
        // Bars are a bijection between the halves; check edges transport.
        for (const DiagramEdge& e : d.base.edges) {
          const int bu = d.bar[e.u], bv = d.bar[e.v];
          bool found = false;
          for (const DiagramEdge& f : d.base.edges) {
            if (std::min(bu, bv) == f.u && std::max(bu, bv) == f.v &&
                f.mult == e.mult) {
              const int want =
                  e.arrow >= 0 ? d.bar[e.arrow] : -1;
              found = f.arrow == want;
              break;
            }
          }
          if (!found) diagonal = false;
        }
      }
      if (diagonal) {
        const SimpleType t1 = classify_shape(halves[0].base);
        const SimpleType t2 = classify_shape(halves[1].base);
        if (t1 == t2) return mk_t(Family::DIAG, t1);
        throw contract_error("bar-matched double with mismatched halves: " +
                             serialize(d));
      }
    }
  }

  const auto& dict = dictionary_for_size(d.size());
  const auto it = dict.find(canonical_form(d));
  if (it == dict.end()) {
    throw contract_error("diagram is not in the catalog:\n" + serialize(d));
  }
  return it->second;
}

}  // namespace satake
