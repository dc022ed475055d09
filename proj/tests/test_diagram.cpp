// Diagram layer: serialization round trips, canonical forms under
// relabeling, bar-aware components, erasure contracts, and shape
// classification limits.
#include <doctest.h>

#include <set>
#include <string>

#include "satake/catalog.hpp"
#include "satake/diagram.hpp"
#include "satake/root_system.hpp"
#include "satake/types.hpp"

using namespace satake;

TEST_CASE("node_id_less is the natural order") {
  CHECK(node_id_less("a2", "a10"));
  CHECK_FALSE(node_id_less("a10", "a2"));
  CHECK(node_id_less("a1", "a2"));
  CHECK(node_id_less("a1.1", "a1.2"));
  CHECK(node_id_less("a1", "a1.1"));
  CHECK_FALSE(node_id_less("a1", "a1"));
}

TEST_CASE("monochrome produces the stated colors and no bars") {
  const Diagram d = dynkin_diagram(make_type(TypeLetter::B, 3));
  const SatakeDiagram white = monochrome(d, false);
  const SatakeDiagram black = monochrome(d, true);
  REQUIRE(white.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(white.black[static_cast<std::size_t>(i)]);
    CHECK(black.black[static_cast<std::size_t>(i)]);
    CHECK(white.bar[static_cast<std::size_t>(i)] == -1);
    CHECK(black.bar[static_cast<std::size_t>(i)] == -1);
  }
  CHECK_NOTHROW(validate(white));
  CHECK_NOTHROW(validate(black));
}

TEST_CASE("validate rejects broken bar involutions") {
  const Diagram a2 = dynkin_diagram(make_type(TypeLetter::A, 2));

  SUBCASE("non-involutive bar") {
    SatakeDiagram d = monochrome(a2, false);
    d.bar[0] = 1;  // partner does not point back
    CHECK_THROWS_AS(validate(d), contract_error);
  }
  SUBCASE("bar on a black node") {
    SatakeDiagram d = monochrome(a2, true);
    d.bar[0] = 1;
    d.bar[1] = 0;
    CHECK_THROWS_AS(validate(d), contract_error);
  }
  SUBCASE("bar fixing its own node") {
    SatakeDiagram d = monochrome(a2, false);
    d.bar[0] = 0;
    CHECK_THROWS_AS(validate(d), contract_error);
  }
}

TEST_CASE("serialize / parse_satake round-trips byte-exactly") {
  for (const char* name : {"AI(n=3)", "AIIIa(r=1,s=3)", "DIa(r=3,s=0,b=1)",
                           "EIV", "FII", "TRIV(D4)", "DIAG(A2)"}) {
    CAPTURE(name);
    const SatakeDiagram d = satake_of(parse_pair_name(name));
    const std::string text = serialize(d);
    const SatakeDiagram back = parse_satake(text);
    CHECK(serialize(back) == text);
    CHECK(canonical_form(back) == canonical_form(d));
  }
}

TEST_CASE("canonical_form ignores labels but sees arrows") {
  // The same A3 chain under two different labelings.
  Diagram chain1;
  add_node(chain1, "a1");
  add_node(chain1, "a2");
  add_node(chain1, "a3");
  add_edge(chain1, "a1", "a2");
  add_edge(chain1, "a2", "a3");
  Diagram chain2;
  add_node(chain2, "x");
  add_node(chain2, "y");
  add_node(chain2, "z");
  add_edge(chain2, "z", "y");
  add_edge(chain2, "y", "x");
  CHECK(canonical_form(monochrome(chain1, false)) ==
        canonical_form(monochrome(chain2, false)));

  // B3 and C3 differ only in arrow direction, and the canonical form must
  // separate them.
  const SatakeDiagram b3 =
      monochrome(dynkin_diagram(make_type(TypeLetter::B, 3)), false);
  const SatakeDiagram c3 =
      monochrome(dynkin_diagram(make_type(TypeLetter::C, 3)), false);
  CHECK(canonical_form(b3) != canonical_form(c3));

  // Color matters too.
  CHECK(canonical_form(monochrome(chain1, false)) !=
        canonical_form(monochrome(chain1, true)));
}

TEST_CASE("components treat bars as connections") {
  // The diagonal pair is two edge-disjoint copies joined by bars: one
  // component.
  const SatakeDiagram diag = satake_of(parse_pair_name("DIAG(A2)"));
  CHECK(components(diag).size() == 1);

  // Without bars, two isolated nodes are two components.
  Diagram two;
  add_node(two, "a1");
  add_node(two, "a2");
  const SatakeDiagram d = monochrome(two, false);
  CHECK(components(d).size() == 2);

  // A connected Satake diagram is one component.
  CHECK(components(satake_of(parse_pair_name("EIV"))).size() == 1);
}

TEST_CASE("erase enforces its contract") {
  const ExtendedSatakeDiagram eiv = extended_satake_of(parse_pair_name("EIV"));

  SUBCASE("empty sets are rejected") {
    CHECK_THROWS_AS(erase(eiv, {}), contract_error);
  }
  SUBCASE("black nodes cannot be erased") {
    // EIV blackens the interior nodes; a2 is black.
    CHECK_THROWS_AS(erase(eiv, {"a2"}), contract_error);
  }
  SUBCASE("unknown ids are rejected") {
    CHECK_THROWS_AS(erase(eiv, {"zz"}), contract_error);
  }
  SUBCASE("sets must be bar-closed") {
    const ExtendedSatakeDiagram diag =
        extended_satake_of(parse_pair_name("DIAG(A2)"));
    // Each node is bar-joined to its partner in the other copy; taking one
    // side only is not bar-closed.
    CHECK_THROWS_AS(erase(diag, {"a1.1"}), contract_error);
  }
  SUBCASE("a legal erasure drops exactly the named nodes") {
    const SatakeDiagram out = erase(eiv, {"a1"});
    CHECK(out.size() == eiv.base.size() - 1);
    CHECK(out.base.index_of("a1") == -1);
    CHECK(out.base.index_of("g") >= 0);
    CHECK_NOTHROW(validate(out));
  }
}

TEST_CASE("classify_shape rejects affine shapes") {
  CHECK_THROWS_AS(classify_shape(extended_diagram(make_type(TypeLetter::E, 8))),
                  contract_error);
  CHECK_THROWS_AS(classify_shape(extended_diagram(make_type(TypeLetter::A, 1))),
                  contract_error);
  CHECK_THROWS_AS(classify_shape(extended_diagram(make_type(TypeLetter::D, 4))),
                  contract_error);
}
