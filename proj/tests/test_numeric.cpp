#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "greenfn/numeric.hpp"

using namespace green;

TEST_CASE("poly arithmetic and parsing") {
  Poly p = Poly::parse("q^4+1");
  CHECK(p.eval_int(2) == 17);
  CHECK(p.str() == "q^4+1");

  Poly c = Poly::parse("2q^12(q^2-1)");
  CHECK(c == Poly::parse("2q^14-2q^12"));
  CHECK(c.eval_int(3) == 2 * Int(531441) * 9 - 2 * 531441);

  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly::parse("-3q").eval_int(5) == -15);
  CHECK(Poly::parse("(q-1)(q+1)") == Poly::parse("q^2-1"));
  CHECK_THROWS_AS(Poly::parse("q^"), ParseError);
  CHECK_THROWS_AS(Poly::parse("q+"), ParseError);
  CHECK_THROWS_AS(Poly::parse("2x"), ParseError);

  Poly prod = Poly::parse("q^2+q") ;
  CHECK(prod.divide_exact(Poly::parse("q")) == Poly::parse("q+1"));
  CHECK_THROWS_AS(Poly::parse("q^2+1").divide_exact(Poly::parse("q+1")), ValidationError);
}

TEST_CASE("interpolation") {
  // reconstruct q^4+1 through 9 points
  std::vector<std::pair<Rat, Rat>> pts;
  Poly p = Poly::parse("q^4+1");
  for (int q = 2; q <= 10; ++q) pts.emplace_back(Rat(q), Rat(p.eval_int(q)));
  CHECK(interpolate(pts) == p);
}

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
