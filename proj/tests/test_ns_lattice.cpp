#include "doctest.h"

#include "k3fm/errors.hpp"
#include "k3fm/ns_lattice.hpp"

using namespace k3fm;

TEST_SUITE("ns_lattice") {
  TEST_CASE("gram matrix on both surfaces") {
    for (Surface s : {Surface::X, Surface::Xhat}) {
      CHECK(intersect(polarization(s), polarization(s)) == 2);
      CHECK(intersect(ell_class(s), ell_class(s)) == -12);
      CHECK(intersect(polarization(s), ell_class(s)) == 0);
    }
  }

  TEST_CASE("identification sends Hh and lh to 5H+2l and -12H-5l") {
    CHECK(identify(polarization(Surface::Xhat)) == DivisorClass{5, 2, Surface::X});
    CHECK(identify(ell_class(Surface::Xhat)) == DivisorClass{-12, -5, Surface::X});
  }

  TEST_CASE("identification is an involutive isometry") {
    for (std::int64_t a = -7; a <= 7; ++a)
      for (std::int64_t b = -7; b <= 7; ++b) {
        const DivisorClass d{a, b, Surface::Xhat};
        const DivisorClass e{b - 1, 2 * a + 3, Surface::Xhat};
        CHECK(identify(identify(d)) == d);
        CHECK(intersect(identify(d), identify(e)) == intersect(d, e));
      }
  }

  TEST_CASE("arithmetic and surface checks") {
    const DivisorClass h = polarization(Surface::X);
    const DivisorClass l = ell_class(Surface::X);
    CHECK(2 * h + l == DivisorClass{2, 1, Surface::X});
    CHECK(-(h - l) == DivisorClass{-1, 1, Surface::X});
    CHECK(degree(3 * h - 4 * l) == 6);
    CHECK_THROWS_AS(h + ell_class(Surface::Xhat), DomainError);
    CHECK_THROWS_AS(intersect(h, polarization(Surface::Xhat)), DomainError);
  }

  TEST_CASE("Riemann-Roch for line bundles") {
    CHECK(rr_chi_line(zero_divisor(Surface::X)) == 2);
    CHECK(rr_chi_line(DivisorClass{2, 1, Surface::X}) == 0);
    CHECK(rr_chi_line(polarization(Surface::X)) == 3);
  }

  TEST_CASE("surface names") {
    CHECK(to_string(Surface::X) == "X");
    CHECK(to_string(Surface::Xhat) == "Xhat");
    CHECK(surface_from_string("Xhat") == Surface::Xhat);
    CHECK(other(Surface::X) == Surface::Xhat);
  }

  TEST_CASE("overflow is reported, not wrapped") {
    const DivisorClass big{std::int64_t{1} << 40, 0, Surface::X};
    CHECK_THROWS_AS(intersect(big, big), DomainError);
  }
}
