#include <k3bps/error.hpp>
#include <k3bps/hodge.hpp>
#include <k3bps/serialize.hpp>

#include <doctest.h>

using namespace k3bps;

TEST_CASE("BiLaurent round trip, including big and fractional coefficients") {
  BiLaurent p = BiLaurent::monomial(Rational(-3, 7), -2, 5);
  p.add_term(1, 0, Rational(Integer("123456789012345678901234567890")));
  const Json j = to_json(p);
  CHECK(j[0]["eu"] == -2);
  CHECK(j[0]["num"] == -3);
  CHECK(j[0]["den"] == 7);
  CHECK(j[1]["num"].is_string());
  CHECK(bilaurent_from_json(Json::parse(j.dump())) == p);
}

TEST_CASE("series, tables and strata round trip") {
  const auto s = hodge_product(3);
  CHECK(series_from_json(to_json(s)) == s);
  TruncatedSeries w(Grading::v, 2, 4);
  w.set_coeff(1, BiLaurent::y(3));
  const Json jw = to_json(w);
  CHECK(jw["var"] == "v");
  CHECK(jw["ywindow"] == 4);
  CHECK(series_from_json(jw) == w);

  const SpinTable t{{{0, 0}, 488}, {{1, 2}, 1}};
  CHECK(spin_table_from_json(to_json(t)) == t);

  StrataInput in;
  in.exponents = {2, 1};
  in.ambient_dim = 2;
  in.strata = {{{0}, BiLaurent(1), EqPoincare{BiLaurent(1), BiLaurent::u(1)}},
               {{1}, BiLaurent::u(2), std::nullopt},
               {{0, 1}, BiLaurent(1), std::nullopt}};
  const StrataInput back = strata_from_json(to_json(in));
  CHECK(back.exponents == in.exponents);
  CHECK(back.strata.size() == 3);
  CHECK(back.strata[0].cover->odd == BiLaurent::u(1));
}

TEST_CASE("invalid documents") {
  CHECK_THROWS_AS(bilaurent_from_json(Json::parse(R"([{"eu":0,"ey":0,"num":1,"den":0}])")), DomainError);
  CHECK_THROWS(series_from_json(Json::parse(R"({"var":"x","trunc":1,"coeffs":[]})")));
  CHECK_THROWS_AS(strata_from_json(Json::parse(R"({"exponents":[2],"ambient_dim":1,"strata":[]})")), DomainError);
}

TEST_CASE("text grids") {
  const SpinTable t{{{0, 0}, 20}, {{1, 1}, 1}};
  const std::string g = render_spin_grid("R h=1", t);
  CHECK(g.find("20") != std::string::npos);
  CHECK(g.rfind("R h=1", 0) == 0);
  CHECK(render_sum({1771, 483}) == "1771+483");
}
