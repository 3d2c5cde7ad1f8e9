#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "satake/root_datum.hpp"
#include "satake/rational.hpp"

using namespace satake;

namespace {

RootDatum datum(const char* type, Isogeny iso) { return build_from_cartan_type(type, iso); }

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D3", "D4", "F4", "G2"};

}  // namespace

TEST_CASE("A1 table entries in both isogenies") {
  const RootDatum sc = datum("A1", Isogeny::SimplyConnected);
  CHECK(sc.simple_coroots == std::vector<Vec>{{1}});
  CHECK(sc.simple_roots == std::vector<Vec>{{2}});
  const RootDatum ad = datum("A1", Isogeny::Adjoint);
  CHECK(ad.simple_roots == std::vector<Vec>{{1}});
  CHECK(ad.simple_coroots == std::vector<Vec>{{2}});
  CHECK(cartan_matrix(sc) == std::vector<Vec>{{2}});
  CHECK(cartan_matrix(ad) == std::vector<Vec>{{2}});
}

TEST_CASE("A2 Cartan matrix") {
  const auto c = cartan_matrix(datum("A2", Isogeny::SimplyConnected));
  CHECK(c == std::vector<Vec>{{2, -1}, {-1, 2}});
  // Positivity of every principal minor, by direct expansion.
  CHECK(c[0][0] > 0);
  CHECK(c[1][1] > 0);
  CHECK(c[0][0] * c[1][1] - c[0][1] * c[1][0] > 0);
}

TEST_CASE("every tabulated datum validates") {
  for (const auto& type : kSmallTypes) {
    for (Isogeny iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      const RootDatum d = datum(type.c_str(), iso);
      CAPTURE(type);
      CHECK(validate(d).empty());
    }
  }
}

TEST_CASE("classification bounds are enforced") {
  CHECK_THROWS_AS(build_from_cartan_type("B1", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("C1", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("D2", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("E5", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("E9", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("F3", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("G3", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("H2", Isogeny::Adjoint), InvalidCartanType);
  CHECK_THROWS_AS(build_from_cartan_type("A", Isogeny::Adjoint), InvalidCartanType);
  CHECK_NOTHROW(build_from_cartan_type("E6", Isogeny::SimplyConnected));
  CHECK_NOTHROW(build_from_cartan_type("E8", Isogeny::Adjoint));
}

TEST_CASE("validation reports specific defects") {
  SUBCASE("diagonal not two") {
    RootDatum d;
    d.lattice_rank = 1;
    d.semisimple_rank = 1;
    d.simple_roots = {{1}};
    d.simple_coroots = {{1}};
    const auto issues = validate(d);
    REQUIRE(!issues.empty());
    CHECK(issues[0].code == ValidationCode::DiagonalNotTwo);
  }
  SUBCASE("asymmetric zero pattern") {
    RootDatum d;
    d.lattice_rank = 2;
    d.semisimple_rank = 2;
    // cartan(0,1) = -1 but cartan(1,0) = 0.
    d.simple_roots = {{2, -1}, {0, 2}};
    d.simple_coroots = {{1, 0}, {0, 1}};
    bool found = false;
    for (const auto& issue : validate(d))
      found = found || issue.code == ValidationCode::AsymmetricZeroPattern;
    CHECK(found);
  }
  SUBCASE("affine matrix is not finite type") {
    RootDatum d;
    d.lattice_rank = 2;
    d.semisimple_rank = 2;
    d.simple_roots = {{2, -2}, {-2, 2}};
    d.simple_coroots = {{1, 0}, {0, 1}};
    bool found = false;
    for (const auto& issue : validate(d))
      found = found || issue.code == ValidationCode::NotFiniteType;
    CHECK(found);
  }
  SUBCASE("dependent coroots") {
    RootDatum d;
    d.lattice_rank = 2;
    d.semisimple_rank = 2;
    d.simple_roots = {{2, -1}, {-1, 2}};
    d.simple_coroots = {{1, 1}, {1, 1}};
    bool found = false;
    for (const auto& issue : validate(d))
      found = found || issue.code == ValidationCode::CorootsDependent;
    CHECK(found);
  }
  SUBCASE("positive off-diagonal") {
    RootDatum d;
    d.lattice_rank = 2;
    d.semisimple_rank = 2;
    d.simple_roots = {{2, 1}, {1, 2}};
    d.simple_coroots = {{1, 0}, {0, 1}};
    bool found = false;
    for (const auto& issue : validate(d))
      found = found || issue.code == ValidationCode::PositiveOffDiagonal;
    CHECK(found);
  }
  SUBCASE("shape errors short-circuit") {
    RootDatum d;
    d.lattice_rank = 1;
    d.semisimple_rank = 2;
    const auto issues = validate(d);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == ValidationCode::BadShape);
  }
}

TEST_CASE("langlands dual is an involution with transposed Cartan matrix") {
  for (const auto& type : kSmallTypes) {
    for (Isogeny iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      const RootDatum d = datum(type.c_str(), iso);
      const RootDatum dual = langlands_dual(d);
      CAPTURE(type);
      CHECK(validate(dual).empty());
      CHECK(langlands_dual(dual) == d);
      const auto c = cartan_matrix(d);
      const auto cd = cartan_matrix(dual);
      for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) CHECK(cd[i][j] == c[j][i]);
    }
  }
}

TEST_CASE("dual of B2 has the C2 Cartan matrix") {
  const auto dual_cartan = cartan_matrix(langlands_dual(datum("B2", Isogeny::SimplyConnected)));
  const auto c2 = cartan_matrix(datum("C2", Isogeny::SimplyConnected));
  CHECK(dual_cartan == c2);
}

TEST_CASE("dual of simply-connected A1 is adjoint-shaped") {
  const RootDatum dual = langlands_dual(datum("A1", Isogeny::SimplyConnected));
  // Roots become a lattice basis, coroots the doubled vector.
  CHECK(dual.simple_roots == std::vector<Vec>{{1}});
  CHECK(dual.simple_coroots == std::vector<Vec>{{2}});
}

TEST_CASE("coroot lattice membership") {
  const RootDatum ad = datum("A1", Isogeny::Adjoint);
  CHECK(in_coroot_lattice(ad, Coweight{{2}}));
  CHECK(!in_coroot_lattice(ad, Coweight{{1}}));
  const RootDatum sc = datum("A1", Isogeny::SimplyConnected);
  CHECK(in_coroot_lattice(sc, Coweight{{1}}));

  const RootDatum a2 = datum("A2", Isogeny::SimplyConnected);
  CHECK(in_coroot_lattice(a2, Coweight{{1, 1}}));
  const RootDatum a2ad = datum("A2", Isogeny::Adjoint);
  CHECK(!in_coroot_lattice(a2ad, Coweight{{1, 0}}));
  CHECK(in_coroot_lattice(a2ad, Coweight{{1, 1}}));  // sum of fundamental coweights = theta-check
}

TEST_CASE("fundamental coweights") {
  const RootDatum a2ad = datum("A2", Isogeny::Adjoint);
  REQUIRE(fundamental_coweight(a2ad, 0).has_value());
  CHECK(fundamental_coweight(a2ad, 0)->coords == Vec{1, 0});
  CHECK(fundamental_coweight(a2ad, 1)->coords == Vec{0, 1});
  // On the simply-connected side the fundamental coweights are fractional.
  CHECK(!fundamental_coweight(datum("A1", Isogeny::SimplyConnected), 0).has_value());
  CHECK(!fundamental_coweight(datum("A2", Isogeny::SimplyConnected), 0).has_value());
  CHECK_THROWS_AS(fundamental_coweight(a2ad, 2), DomainError);
}

TEST_CASE("json round trip is lossless") {
  for (const auto& type : {"A2", "G2", "D4"}) {
    for (Isogeny iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      const RootDatum d = datum(type, iso);
      CHECK(datum_from_json(datum_to_json(d)) == d);
    }
  }
  RootDatum unnamed = datum("B2", Isogeny::Adjoint);
  unnamed.name.reset();
  const auto j = datum_to_json(unnamed);
  CHECK(!j.contains("name"));
  CHECK(datum_from_json(j) == unnamed);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(datum_from_json(nlohmann::json::parse(R"({"rank_lattice": 1})")), DomainError);
  CHECK_THROWS_AS(datum_from_json(nlohmann::json::parse(
                      R"({"rank_lattice": "x", "rank_semisimple": 0,
                          "simple_roots": [], "simple_coroots": []})")),
                  DomainError);
}

TEST_CASE("fingerprint ignores the label") {
  RootDatum a = datum("G2", Isogeny::SimplyConnected);
  RootDatum b = a;
  b.name = "renamed";
  CHECK(datum_fingerprint(a) == datum_fingerprint(b));
  CHECK(datum_fingerprint(a) != datum_fingerprint(datum("B2", Isogeny::SimplyConnected)));
}

TEST_CASE("datum with a central torus direction") {
  // GL2-flavored datum: one simple root inside a rank-2 lattice.
  RootDatum gl;
  gl.name = "gl2";
  gl.lattice_rank = 2;
  gl.semisimple_rank = 1;
  gl.simple_roots = {{1, -1}};
  gl.simple_coroots = {{1, -1}};
  CHECK(validate(gl).empty());
  CHECK(in_coroot_lattice(gl, Coweight{{1, -1}}));
  CHECK(in_coroot_lattice(gl, Coweight{{-2, 2}}));
  CHECK(!in_coroot_lattice(gl, Coweight{{1, 0}}));
  const RootDatum dual = langlands_dual(gl);
  CHECK(validate(dual).empty());
  CHECK(langlands_dual(dual) == gl);
}

TEST_CASE("degenerate data") {
  SUBCASE("trivial datum") {
    RootDatum trivial;
    CHECK(validate(trivial).empty());
    CHECK(langlands_dual(trivial) == trivial);
    CHECK(in_coroot_lattice(trivial, Coweight{}));
  }
  SUBCASE("pure torus") {
    RootDatum torus;
    torus.lattice_rank = 2;
    CHECK(validate(torus).empty());
    CHECK(!in_coroot_lattice(torus, Coweight{{1, 0}}));
    CHECK(in_coroot_lattice(torus, Coweight{{0, 0}}));
  }
}

TEST_CASE("name toggling under duality") {
  const RootDatum d = datum("A2", Isogeny::SimplyConnected);
  CHECK(*langlands_dual(d).name == "A2-sc^");
  CHECK(*langlands_dual(langlands_dual(d)).name == "A2-sc");
}
