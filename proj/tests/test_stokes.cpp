#include <catch2/catch_amalgamated.hpp>

#include "qhelm/stokes.hpp"
#include "qhelm/validate.hpp"

using namespace qhelm;
using Catch::Approx;

namespace {
std::complex<double> amp(const FockKet2Port& s, int n, int m) {
  const auto it = s.amplitudes.find({n, m});
  return it == s.amplitudes.end() ? std::complex<double>(0) : it->second;
}
}  // namespace

TEST_CASE("two photons coalesce", "[stokes]") {
  FockKet2Port in;
  in.amplitudes[{1, 1}] = 1.0;
  const FockKet2Port out = stokes_apply(in);
  const std::complex<double> i_rt2(0, 1 / std::sqrt(2.0));
  REQUIRE(std::abs(amp(out, 2, 0) - i_rt2) < 1e-15);
  REQUIRE(std::abs(amp(out, 0, 2) - i_rt2) < 1e-15);
  REQUIRE(std::abs(amp(out, 1, 1)) < 1e-15);  // coincidence channel closes
  REQUIRE(out.norm2() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single photon splits evenly", "[stokes]") {
  FockKet2Port in;
  in.amplitudes[{1, 0}] = 1.0;
  const FockKet2Port out = stokes_apply(in);
  REQUIRE(std::abs(amp(out, 1, 0) - 1 / std::sqrt(2.0)) < 1e-15);
  REQUIRE(std::abs(amp(out, 0, 1) - std::complex<double>(0, 1 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("vacuum passes through", "[stokes]") {
  FockKet2Port in;
  in.amplitudes[{0, 0}] = 1.0;
  const FockKet2Port out = stokes_apply(in);
  REQUIRE(std::abs(amp(out, 0, 0) - 1.0) < 1e-15);
  REQUIRE(out.amplitudes.size() == 1);
}

TEST_CASE("transformation is unitary on random states", "[stokes]") {
  const StokesCheck sc = stokes_check(4242ull, 50);
  REQUIRE(sc.pair_error <= 1e-12);
  REQUIRE(sc.norm_deviation <= 1e-12);
}

TEST_CASE("four-photon bunching follows the binomial algebra", "[stokes]") {
  // u = (c2 + i c3)/sqrt2, v = (i c2 + c3)/sqrt2, and u v = i (c2^2 + c3^2)/2,
  // so |2,2> -> -(sqrt6/4)(|4,0> + |0,4>) - (1/2)|2,2>: odd splittings cancel
  FockKet2Port in;
  in.amplitudes[{2, 2}] = 1.0;
  const FockKet2Port out = stokes_apply(in);
  REQUIRE(out.norm2() == Approx(1.0).epsilon(1e-12));
  // coefficient of |3,1> and |1,3> vanish by symmetry
  REQUIRE(std::abs(amp(out, 3, 1)) < 1e-14);
  REQUIRE(std::abs(amp(out, 1, 3)) < 1e-14);
  REQUIRE(std::abs(amp(out, 4, 0)) == Approx(std::sqrt(6.0) / 4).epsilon(1e-12));
  REQUIRE(std::abs(amp(out, 0, 4)) == Approx(std::sqrt(6.0) / 4).epsilon(1e-12));
}

TEST_CASE("state validation", "[stokes]") {
  FockKet2Port unnorm;
  unnorm.amplitudes[{1, 0}] = 2.0;
  REQUIRE_THROWS_AS(stokes_apply(unnorm), Error);

  FockKet2Port toomany;
  toomany.amplitudes[{3, 2}] = 1.0;
  bool threw = false;
  try {
    stokes_apply(toomany);  // default truncation: 4 photons total
  } catch (const Error& e) {
    threw = true;
    REQUIRE(e.code == errc::truncation_exceeded);
  }
  REQUIRE(threw);
  REQUIRE_NOTHROW(stokes_apply(toomany, 6));

  FockKet2Port negative;
  negative.amplitudes[{-1, 1}] = 1.0;
  REQUIRE_THROWS_AS(stokes_apply(negative), Error);
}
