#include <doctest.h>

#include "quatwick/moment_poly.hpp"

using namespace quatwick;

TEST_SUITE("moment_poly") {

TEST_CASE("canonical form and printing") {
  MomentPoly p(1);
  p.add_term({1, 1}, 16);
  p.add_term({2, 1}, 16);
  p.add_term({1, 2}, 16);
  p.add_term({1, 1}, -24);
  CHECK(p.to_string() == "16*M^2*N + 16*M*N^2 - 8*M*N");
  p.add_term({2, 1}, -16);
  CHECK(p.to_string() == "16*M^2*N - 8*M*N");
  CHECK(MomentPoly().to_string() == "0");
  CHECK(MomentPoly::constant(-3).to_string() == "-3");

  MomentPoly q;
  q.add_term({2}, 4);
  q.add_term({1}, -2);
  CHECK(q.to_string() == "4*N^2 - 2*N");

  MomentPoly r(2);
  r.add_term({1, 1, 1}, 1);
  CHECK(r.to_string() == "M_1*M_2*N");
  CHECK(r.to_lambda_string() == "lambda_1*lambda_2*N^3");
}

TEST_CASE("arithmetic") {
  MomentPoly a;
  a.add_term({2}, 1);
  a.add_term({1}, 1);
  CHECK((a - a).is_zero());
  CHECK((a * Integer(3)).to_string() == "3*N^2 + 3*N");
  CHECK(a.scale_variables(-2).to_string() == "4*N^2 - 2*N");
  CHECK((a * Integer(2)).divide_exact(2) == a);
  CHECK_THROWS_AS(a.divide_exact(2), std::domain_error);
  CHECK(a.evaluate(Integer(3)) == 12);
  CHECK(a.evaluate(3.0) == doctest::Approx(12.0));
}

TEST_CASE("m count padding") {
  MomentPoly a(0), b(2);
  a.add_term({1}, 5);
  b.add_term({1, 0, 0}, 5);
  CHECK(a == b);
  b.add_term({0, 1, 0}, 1);
  CHECK(a != b);
  CHECK_THROWS_AS(b.with_m_count(0), std::invalid_argument);
  CHECK_THROWS_AS(a.add_term({1, 1}, 1), std::invalid_argument);
}

TEST_CASE("json round trip") {
  MomentPoly p(2);
  p.add_term({1, 1, 0}, 4);
  p.add_term({3, 0, 2}, -7);
  p.add_term({0, 0, 0}, Integer("123456789012345678901234567890"));
  const auto j = p.to_json();
  CHECK(j.is_array());
  CHECK(MomentPoly::from_json(j) == p);
  CHECK(MomentPoly::from_json(nlohmann::json::parse(j.dump())) == p);
  const auto first = j.at(0);
  CHECK(first.at("exponents").at("N") == 3);
  CHECK(first.at("coeff") == -7);
  CHECK_THROWS_AS(MomentPoly::from_json(nlohmann::json::object()), std::invalid_argument);
}

}
