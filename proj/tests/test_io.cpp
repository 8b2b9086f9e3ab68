#include <doctest.h>

#include "mvse/core/errors.hpp"
#include "mvse/io/json_io.hpp"
#include "mvse/io/svg.hpp"
#include "oracles.hpp"

using namespace mvse;
using oracle::q;

TEST_CASE("rationals travel as strings") {
  CHECK(io::to_json(q(-3, 6)).get<std::string>() == "-1/2");
  CHECK(io::rational_from_json(io::Json("4/6")) == q(2, 3));
  CHECK(io::rational_from_json(io::Json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(io::Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(io::Json("1/x")), ParseError);
}

TEST_CASE("matrix round trip") {
  const Matrix m{{1, q(-2, 3)}, {0, 5}};
  const auto j = io::matrix_to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 2);
  CHECK(io::matrix_from_json(j) == m);
  CHECK(io::matrix_from_json(io::parse(j.dump())) == m);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"data": [["1","2"],["3"]]})")), ShapeError);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"rows": 3, "data": [["1","2"]]})")), ShapeError);
  CHECK_THROWS_AS(io::parse("{\"rows\": "), ParseError);
}

TEST_CASE("csv ingestion") {
  const Matrix m = io::matrix_from_csv("# comment\n1, -1/2\n\n3,4\n");
  CHECK(m == Matrix{{1, q(-1, 2)}, {3, 4}});
  CHECK_THROWS_AS(io::matrix_from_csv("1,2\n3\n"), ShapeError);
}

TEST_CASE("zonotope and lattice round trips") {
  const Zonotope z(2, {{1, 0}, {q(1, 2), 3}});
  const auto back = io::zonotope_from_json(io::zonotope_to_json(z));
  CHECK(back.generators() == z.generators());
  const auto l = Lattice::make(Matrix{{4, 2}, {2, 4}});
  const auto lj = io::lattice_to_json(l);
  CHECK(lj.at("determinant") == "12");
  CHECK(io::lattice_from_json(lj).basis() == l.basis());
  CHECK(io::lattice_from_json(io::matrix_to_json(l.basis())).basis() == l.basis());
}

TEST_CASE("subsets are one-based on the wire") {
  CHECK(io::subset_to_json({0, 2}).dump() == "[1,3]");
  CHECK(io::subset_from_json(io::parse("[2,3]")) == Subset{1, 2});
  CHECK_THROWS(io::subset_from_json(io::parse("[0]")));
}

TEST_CASE("svg output is well formed") {
  const Zonotope hex(2, {{1, 0}, {0, 1}, {1, 1}});
  const auto svg = io::zonotope_svg(hex);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  const auto tiling = io::tiling_svg(hex, Lattice::make(Matrix{{4, 2}, {2, 4}}), 6);
  std::size_t polys = 0;
  for (auto pos = tiling.find("<polygon"); pos != std::string::npos; pos = tiling.find("<polygon", pos + 1)) ++polys;
  CHECK(polys >= 4);
  CHECK_THROWS_AS(io::zonotope_svg(Zonotope(3, {{1, 0, 0}})), PreconditionError);
}
