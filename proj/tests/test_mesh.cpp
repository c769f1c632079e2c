#include <catch2/catch_amalgamated.hpp>

#include "qhelm/medium.hpp"

using namespace qhelm;

TEST_CASE("uniform mesh spans the centred cell", "[mesh]") {
  const Mesh1D m = build_mesh(1.5, 2501);
  REQUIRE(m.n0 == 2501);
  REQUIRE(m.n1() == 2500);
  REQUIRE(m.dx == Catch::Approx(6e-4).epsilon(1e-14));
  REQUIRE(m.nodes.front() == Catch::Approx(-0.75).margin(0));
  REQUIRE(m.nodes.back() == 0.75);  // exact by construction
  for (int i = 1; i < m.n0; ++i)
    REQUIRE(m.nodes[i] - m.nodes[i - 1] == Catch::Approx(m.dx).epsilon(1e-12));
}

TEST_CASE("degenerate meshes are rejected", "[mesh]") {
  REQUIRE_THROWS_AS(build_mesh(0.0, 100), Error);
  REQUIRE_THROWS_AS(build_mesh(-1.0, 100), Error);
  REQUIRE_THROWS_AS(build_mesh(1.0, 2), Error);
  try {
    build_mesh(1.0, 1);
  } catch (const Error& e) {
    REQUIRE(e.code == errc::invalid_mesh);
  }
}

TEST_CASE("slab permittivity is boundary-inclusive", "[mesh]") {
  const PermittivityProfile prof{7.0, 6e-3, 1.0};
  const double e_in = 7.0 * si.eps0;
  const double e_out = si.eps0;
  REQUIRE(sample_eps(prof, 0.0) == Catch::Approx(e_in));
  REQUIRE(sample_eps(prof, 3e-3) == Catch::Approx(e_in));
  REQUIRE(sample_eps(prof, -3e-3) == Catch::Approx(e_in));
  REQUIRE(sample_eps(prof, 3.0001e-3) == Catch::Approx(e_out));
  REQUIRE(sample_eps(prof, 0.7) == Catch::Approx(e_out));
  // round-off-sized overshoot still counts as the interface
  REQUIRE(sample_eps(prof, 3e-3 * (1 + 1e-14)) == Catch::Approx(e_in));
}

TEST_CASE("background permittivity scales", "[mesh]") {
  const PermittivityProfile prof{20.0, 0.3, 2.0};
  REQUIRE(sample_eps(prof, 1.0) == Catch::Approx(2.0 * si.eps0));
  REQUIRE(sample_eps(prof, 0.1) == Catch::Approx(20.0 * si.eps0));
}
