// JSON band-matrix serialization: exact schema, bit-exact round trips,
// and rejection of malformed input.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <string>
#include <vector>

#include "ar1band/serialize.hpp"
#include "ar1band/types.hpp"

using namespace ar1band;

TEST_CASE("fixture serializes with the documented keys") {
  const TridiagSym q({1.0, 1.25, 1.0}, {-0.5, -0.5});
  CHECK(to_json(q) ==
        "{\"dim\":3,\"diag\":[1.0,1.25,1.0],\"offdiag\":[-0.5,-0.5]}");
}

TEST_CASE("round trip preserves every bit") {
  const std::vector<double> diag = {0.1, 4.0 / 3.0, std::numbers::pi,
                                    1.0 + 1e-15, 123456.789012345678};
  const std::vector<double> off = {-1.0 / 3.0, 1e-300, -0.7000000000000001,
                                   2.2250738585072014e-308};
  const TridiagSym q(diag, off);
  const TridiagSym back = tridiag_from_json(to_json(q));
  REQUIRE(back.dim() == q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    CHECK(back.diag()[i] == q.diag()[i]);
  }
  for (std::size_t i = 0; i + 1 < q.dim(); ++i) {
    CHECK(back.offdiag()[i] == q.offdiag()[i]);
  }
  // A second pass through text is byte-stable.
  CHECK(to_json(back) == to_json(q));
}

TEST_CASE("factor matrices use the same schema") {
  const BandLowerBi l({2.0, 1.5}, {-0.25});
  const BandLowerBi back = band_lower_from_json(to_json(l));
  CHECK(back.diag() == l.diag());
  CHECK(back.subdiag() == l.subdiag());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(tridiag_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(tridiag_from_json("[1,2,3]"), ValidationError);
  CHECK_THROWS_AS(tridiag_from_json("{\"dim\":2,\"diag\":[1.0,1.0]}"),
                  ValidationError);
  CHECK_THROWS_AS(
      tridiag_from_json("{\"dim\":3,\"diag\":[1.0,1.0],\"offdiag\":[0.5]}"),
      ValidationError);
  CHECK_THROWS_AS(
      tridiag_from_json(
          "{\"dim\":2,\"diag\":[1.0,\"x\"],\"offdiag\":[0.5]}"),
      ValidationError);
  // Structurally valid JSON but an invalid matrix: zero on the diagonal.
  CHECK_THROWS_AS(
      tridiag_from_json("{\"dim\":2,\"diag\":[0.0,1.0],\"offdiag\":[0.5]}"),
      ValidationError);
}
