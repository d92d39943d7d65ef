#include "doctest.h"

#include "k3fm/catalog.hpp"
#include "k3fm/errors.hpp"

using namespace k3fm;

namespace {

MukaiVector on_xhat(std::int64_t r, std::int64_t a, std::int64_t b, std::int64_t s) {
  return {r, {a, b, Surface::Xhat}, s};
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("fixed objects") {
    CHECK(object(ObjectName::O_X).vector == trivial_vector(Surface::X));
    CHECK(object(ObjectName::O_p).vector == point_vector(Surface::X));
    CHECK(object(ObjectName::Q_xi).vector == MukaiVector{2, ell_class(Surface::X), -3});
    CHECK(object(ObjectName::Q_p).vector == on_xhat(2, 0, -1, -3));
    CHECK(object(ObjectName::O_X).wit == WitIndex(1));
    CHECK(object(ObjectName::Q_p).wit == WitIndex(2));
  }

  TEST_CASE("indexed families follow their generating formulas") {
    for (std::int64_t n = 1; n <= 200; ++n) {
      const MukaiVector o = trivial_vector(Surface::X);
      const MukaiVector p = point_vector(Surface::X);
      CHECK(object(ObjectName::I_W, n).vector == o - n * p);
      CHECK(object(ObjectName::O_W, n).vector == n * p);
      CHECK(object(ObjectName::OW_hat, n).vector == n * object(ObjectName::Q_p).vector);
      CHECK(object(ObjectName::IW_hat, n).vector == on_xhat(1 + 2 * n, 0, -n, 1 - 3 * n));
      CHECK(object(ObjectName::IW_hat, n).vector ==
            trivial_vector(Surface::Xhat) + object(ObjectName::OW_hat, n).vector);
    }
  }

  TEST_CASE("n is validated") {
    CHECK_THROWS_AS(object(ObjectName::I_W), DomainError);
    CHECK_THROWS_AS(object(ObjectName::I_W, 0), DomainError);
    CHECK_THROWS_AS(object(ObjectName::IW_hat, -2), DomainError);
    CHECK(is_indexed(ObjectName::OW_hat));
    CHECK_FALSE(is_indexed(ObjectName::Q_p));
  }

  TEST_CASE("names") {
    for (ObjectName n : {ObjectName::O_X, ObjectName::O_p, ObjectName::I_W, ObjectName::O_W, ObjectName::Q_xi,
                         ObjectName::Q_p, ObjectName::OW_hat, ObjectName::IW_hat})
      CHECK(object_name_from_string(to_string(n)) == n);
    CHECK(object_name_from_string("nope") == std::nullopt);
  }
}
