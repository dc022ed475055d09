// Catalog of symmetric pairs: enumeration counts and order, name and display
// grammars, low-rank alias folding, and recognition of Satake diagrams.
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "satake/catalog.hpp"
#include "satake/diagram.hpp"
#include "satake/types.hpp"

using namespace satake;

namespace {

PairId canon(const std::string& name) {
  return canonicalize(parse_pair_name(name));
}

bool special_family(const PairId& p) {
  return p.family == Family::TRIV || p.family == Family::DIAG;
}

}  // namespace

TEST_CASE("enumeration counts, order, and canonicity") {
  const std::vector<PairId> rank4 = catalog_enumerate(4);
  CHECK(rank4.size() == 55);

  const std::vector<PairId> rank8 = catalog_enumerate(8);
  CHECK(rank8.size() == 194);
  const long irreducible = std::count_if(
      rank8.begin(), rank8.end(),
      [](const PairId& p) { return !special_family(p); });
  CHECK(irreducible == 132);

  for (const PairId& p : rank8) {
    CAPTURE(pair_name(p));
    CHECK(is_canonical_pair(p));
    CHECK(canonicalize(p) == p);
    CHECK(catalog_rank(p) <= 8);
  }
  // Strictly sorted (hence unique) in listing order.
  for (std::size_t i = 1; i < rank8.size(); ++i) {
    CAPTURE(pair_name(rank8[i - 1]));
    CAPTURE(pair_name(rank8[i]));
    CHECK(catalog_less(rank8[i - 1], rank8[i]));
    CHECK_FALSE(catalog_less(rank8[i], rank8[i - 1]));
  }
  // The smaller enumeration is a prefix-closed subset of the larger one.
  for (const PairId& p : rank4)
    CHECK(std::find(rank8.begin(), rank8.end(), p) != rank8.end());
}

TEST_CASE("pair_name round-trips over the whole catalog") {
  for (const PairId& p : catalog_enumerate(8)) {
    CAPTURE(pair_name(p));
    CHECK(canonicalize(parse_pair_name(pair_name(p))) == p);
  }
}

TEST_CASE("display_name round-trips over the whole catalog") {
  for (const PairId& p : catalog_enumerate(8)) {
    CAPTURE(display_name(p));
    CHECK(canonicalize(parse_display_name(display_name(p))) == p);
  }
}

TEST_CASE("recognize inverts satake_of over the whole catalog") {
  for (const PairId& p : catalog_enumerate(8)) {
    CAPTURE(pair_name(p));
    CHECK(recognize(satake_of(p)) == p);
  }
}

TEST_CASE("low-rank aliases fold onto canonical families") {
  CHECK(canon("CI(n=1)") == canon("AI(n=1)"));
  CHECK(canon("AII(n=1)") == canon("TRIV(A1)"));
  CHECK(canon("BI(r=1,s=1)") == canon("CI(n=2)"));
  CHECK(canon("DIa(r=3,s=1,b=0)") == canon("DIIIa(n=4)"));
  CHECK(canon("DIa(r=2,s=0,b=1)") == canon("AII(n=2)"));
  CHECK(canon("BI(r=2,s=3)") == canon("BII(r=2,s=3)"));
  CHECK(canon("AIIIa(r=1,s=1)") == canon("AIIIb(n=1)"));
  CHECK(canon("CIIa(r=1,s=1)") == canon("BI(r=0,s=2)"));
  CHECK(canon("CIIb(n=1)") == canon("BI(r=0,s=2)"));
  // Symmetric parameters are ordered.
  CHECK(canon("DIa(r=1,s=4)") == canon("DIa(r=4,s=1)"));
}

TEST_CASE("pair grammar accepts positional parameters and forms") {
  CHECK(canon("AI(3)") == canon("AI(n=3)"));
  CHECK(canon("DIa(4,1)") == canon("DIa(r=4,s=1)"));
  CHECK(canon("DIa(4,1,1)") == canon("DIa(r=4,s=1,b=1)"));

  // Forms: suffix grammar and the printer's default omission.
  const PairId adj = canon("AI(n=5)@adj");
  CHECK(adj.form.kind == Form::adj);
  CHECK(pair_name(adj) == "AI(n=5)@adj");
  const PairId so = canon("BI(r=1,s=2)@so");
  CHECK(so.form.kind == Form::so);
  const PairId quot = canon("AI(n=5)@quot(2)");
  CHECK(quot.form.kind == Form::quot);
  CHECK(quot.form.k == 2);
  const PairId sc = canon("AI(n=5)");
  CHECK(sc.form.kind == Form::sc);
  CHECK(pair_name(sc) == "AI(n=5)");  // @sc is never printed

  CHECK_THROWS_AS(parse_pair_name("AI(n=5)@quot2"), parse_error);
  CHECK_THROWS_AS(parse_pair_name("AI(n=5)@bogus"), parse_error);
  CHECK_THROWS_AS(parse_pair_name("DIa(3,1,b0)"), parse_error);
  CHECK_THROWS_AS(parse_pair_name("ZI(n=1)"), parse_error);
}

TEST_CASE("display grammar accepts the reference tables' variants") {
  auto disp = [](const std::string& s) {
    return canonicalize(parse_display_name(s));
  };
  CHECK(disp("(B_2,B_1+C)") == canon("CI(n=2)"));
  CHECK(disp("(D_6,D_5+D_1)") == canon("DIa(r=5,s=1)"));
  CHECK(disp("(D_6,D_5+C)") == canon("DIa(r=5,s=1)"));
  CHECK(disp("(A_3,C_2)") == canon("AII(n=2)"));
  CHECK(disp("(D_3,B_2)") == canon("AII(n=2)"));
  CHECK(disp("(A_1+A_1,A_1)") == canon("DIAG(A1)"));
  CHECK(disp("(E_6,D_5+C)") == canon("EIII"));
  CHECK(disp("(B_3,D_2+B_1)") == canon("BII(r=1,s=2)"));
  CHECK(disp("(B_4,B_1+D_3)") == canon("BI(r=1,s=3)"));
  // A subgroup that cannot embed is a parse error — the same check that
  // convicts a misprinted table entry.
  CHECK_THROWS_AS(parse_display_name("(A_3,B_2)"), parse_error);
}

TEST_CASE("ambient data per family") {
  CHECK(ambient_type(canon("EIV")) == make_type(TypeLetter::E, 6));
  CHECK(ambient_rank(canon("EIV")) == 6);
  CHECK(ambient_type(canon("FII")) == make_type(TypeLetter::F, 4));
  CHECK(ambient_type(canon("TRIV(D4)")) == make_type(TypeLetter::D, 4));
  CHECK_THROWS_AS(ambient_type(canon("DIAG(A2)")), contract_error);
  CHECK(ambient_rank(canon("DIAG(A2)")) == 4);
  CHECK(catalog_rank(canon("DIAG(A2)")) == 2);
  CHECK(catalog_rank(canon("TRIV(D4)")) == 4);
}

TEST_CASE("extended Satake diagrams designate the lowest-root nodes") {
  for (const PairId& p : catalog_enumerate(6)) {
    CAPTURE(pair_name(p));
    const ExtendedSatakeDiagram ext = extended_satake_of(p);
    CHECK_NOTHROW(validate(ext.base));
    if (p.family == Family::DIAG) {
      REQUIRE(ext.gamma_nodes.size() == 2);
      const int g0 = ext.gamma_nodes[0];
      const int g1 = ext.gamma_nodes[1];
      CHECK_FALSE(ext.base.black[static_cast<std::size_t>(g0)]);
      CHECK(ext.base.bar[static_cast<std::size_t>(g0)] == g1);
    } else {
      REQUIRE(ext.gamma_nodes.size() == 1);
      const int g = ext.gamma_nodes[0];
      CHECK(ext.base.base.marks[static_cast<std::size_t>(g)] == 1);
      const bool black = ext.base.black[static_cast<std::size_t>(g)];
      CHECK(black == (p.family == Family::TRIV));
    }
  }
}
