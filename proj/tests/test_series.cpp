#include "doctest.h"
#include "fk/catalog.hpp"
#include "fk/graph.hpp"
#include "fk/series.hpp"
#include "fk/weyl.hpp"

using namespace fk;

TEST_CASE("q-integers and products") {
  CHECK(GradedSeries::qint(2) * GradedSeries::qint(3) ==
        GradedSeries({Rat(1), Rat(2), Rat(2), Rat(1)}));
  auto [q, r] = (parse_brackets("[2]^2[3]")).exact_divide(GradedSeries::qint(2));
  CHECK(r.is_zero());
  CHECK(q == parse_brackets("[2][3]"));
  auto [q2, r2] = GradedSeries({Rat(1), Rat(1), Rat(0), Rat(1)}).exact_divide(GradedSeries::qint(2));
  CHECK(!r2.is_zero());
  CHECK_THROWS(GradedSeries::one().exact_divide(GradedSeries::zero()));
}

TEST_CASE("bracket parsing") {
  CHECK(parse_brackets("[4]^2[5][6]").eval_one() == 480);
  CHECK(parse_brackets("[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4").eval_one() == 14400);
  CHECK(parse_brackets("[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4").degree() == 28);
  CHECK_THROWS(parse_brackets("[3]^{-1}[2]"));  // not divisible
}

TEST_CASE("symmetry, positivity, cyclotomic factorization") {
  GradedSeries h5 = parse_brackets("[4]^4[5]^2[6]^4");
  CHECK(h5.is_symmetric());
  CHECK(h5.is_positive());
  auto f = h5.cyclotomic_factor();
  REQUIRE(f.has_value());
  // [4]=Phi2 Phi4, [5]=Phi5, [6]=Phi2 Phi3 Phi6
  CHECK((*f).at(2) == 8);
  CHECK((*f).at(4) == 4);
  CHECK((*f).at(5) == 2);
  CHECK((*f).at(3) == 4);
  CHECK((*f).at(6) == 4);

  CHECK(!GradedSeries({Rat(1), Rat(2)}).is_symmetric());
  auto f3 = GradedSeries({Rat(1), Rat(1), Rat(1)}).cyclotomic_factor();
  REQUIRE(f3.has_value());
  CHECK(f3->size() == 1);
  CHECK(f3->at(3) == 1);
  CHECK(!GradedSeries({Rat(1), Rat(3)}).cyclotomic_factor().has_value());

  CHECK(h5.to_bracket_string() == "[4]^4[5]^2[6]^4");
}

TEST_CASE("dim and top degree") {
  auto [dim, top] = parse_brackets("[2]^2[3]^2[4]^2").dim_topdeg();
  CHECK(dim == 576);
  CHECK(top == 12);
}

TEST_CASE("closed formulas") {
  CHECK(formula("A", {3}) == parse_brackets("[2][3]"));
  CHECK(formula("A", {3}).eval_one() == 6);
  CHECK(formula("D", {4}) == parse_brackets("[3][4]^2"));
  CHECK(formula("D", {5}) == parse_brackets("[4]^2[5][6]"));
  CHECK(formula("cycle", {4}) == parse_brackets("[3]^2[4]^2"));
  CHECK(formula("cycle", {4}).eval_one() == 144);  // 4! * 3!
  CHECK(formula("complete", {5}) == parse_brackets("[4]^4[5]^2[6]^4"));
  CHECK(formula("star", {5}) == parse_brackets("[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4"));

  // E-family quotients divide exactly and have the right dimensions
  CHECK(formula("E6").eval_one() == Rat(Int("51840")) / 3);
  CHECK(formula("E7").eval_one() == Rat(Int("2903040")) / 2);
  CHECK(formula("E8").eval_one() == Rat(Int("696729600")));

  // cycle top degree is binomial(n+1, 3)
  for (int n = 3; n <= 7; ++n)
    CHECK(formula("cycle", {n}).degree() == n * (n + 1) * (n - 1) / 6);
}

TEST_CASE("Dtilde conjecture expansions") {
  CHECK(formula("Dtilde", {3}) == parse_brackets("[3]^2[4]^2"));
  CHECK(formula("Dtilde", {4}) == parse_brackets("[2]^{-2}[3]^{-2}[4]^2[5]^2[6]^4"));
  CHECK(formula("Dtilde", {5}) ==
        parse_brackets("[2]^{-1}[3]^{-2}[7]^{-1}[6]^2[8]^2[9]^2[10]^2[14]"));
  CHECK(formula("Dtilde", {6}) ==
        parse_brackets("[2]^{-1}[3]^{-1}[5]^{-2}[9]^{-1}[6]^2[8][10]^2[14]^2[15]^2[18][24]"));
  CHECK(formula("Dtilde", {7}) ==
        parse_brackets(
            "[2]^{-1}[3]^{-1}[5]^{-2}[9]^{-1}[11]^{-1}[4][8]^2[10][12]^2[20]^2[21]^2[22][30][36]"));
  // dimension ((n+1)!)^2 * 2^(2n-8) and top degree n(n-1)(2n-1)/3
  for (int n = 3; n <= 7; ++n) {
    GradedSeries s = formula("Dtilde", {n});
    Rat fact(1);
    for (int k = 2; k <= n + 1; ++k) fact *= k;
    Rat dim = fact * fact;
    int e = 2 * n - 8;
    if (e >= 0)
      for (int k = 0; k < e; ++k) dim *= 2;
    else
      for (int k = 0; k < -e; ++k) dim /= 2;
    CHECK(s.eval_one() == dim);
    CHECK(s.degree() == n * (n - 1) * (2 * n - 1) / 3);
    CHECK(s.integer_coeffs());
    CHECK(s.is_symmetric());
  }
}

TEST_CASE("Etilde conjecture divisions are exact") {
  CHECK(formula("E6tilde").integer_coeffs());
  CHECK(formula("E7tilde").integer_coeffs());
  CHECK(formula("E6tilde").is_symmetric());
  CHECK(formula("E7tilde").is_symmetric());
}

TEST_CASE("series sqrt obstruction") {
  GradedSeries s = h6_split_sqrt();
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 7);
  CHECK(s.coeff(2) == 31);
  CHECK(s.coeff(3) == 110);
  CHECK(s.coeff(4) == 338);
  CHECK(s.coeff(5) == 938);
  CHECK(s.coeff(6) == 2408);
  CHECK(s.coeff(7) == Rat(11623, 2));
  CHECK(!is_integer(s.coeff(7)));
}

TEST_CASE("weyl data and ratios") {
  WeylData d4 = WeylData::make("D", 4);
  CHECK(d4.group_order() == 192);
  GradedSeries c = d4.coxeter_charpoly();
  CHECK(c.eval_one() == 4);  // index of connection
  GradedSeries ratio = weyl_ratio(d4);
  CHECK(ratio == formula("D", {4}));
  CHECK(ratio.eval_one() == 48);

  // type X pairs with the diagram X itself: ratio(A_k) = [2]...[k]
  for (int k = 2; k <= 6; ++k) {
    WeylData ak = WeylData::make("A", k);
    CHECK(weyl_ratio(ak) == formula("A", {k}));
    CHECK(ak.coxeter_charpoly().eval_one() == k + 1);  // index of connection
  }

  WeylData e6 = WeylData::make("E6", 0);
  CHECK(e6.group_order() == 51840);
  CHECK(e6.coxeter_charpoly().eval_one() == 3);
  CHECK(weyl_ratio(e6).eval_one() == 17280);
  CHECK(weyl_ratio(e6) == formula("E6"));

  WeylData e7 = WeylData::make("E7", 0);
  CHECK(weyl_ratio(e7) == formula("E7"));
  WeylData e8 = WeylData::make("E8", 0);
  CHECK(weyl_ratio(e8) == formula("E8"));

  CHECK(parse_weyl_type("D5").rank == 5);
}

TEST_CASE("positivity and quotient positivity") {
  CHECK(parse_brackets("[2][3]").is_positive());
  CHECK(!GradedSeries({Rat(1), Rat(-1), Rat(1)}).is_positive());
  CHECK(!GradedSeries::zero().is_positive());
  // subgraph divisibility on the catalog families: [2][3][4] / [2][3]
  auto [q, r] = parse_brackets("[2][3][4]").exact_divide(parse_brackets("[2][3]"));
  CHECK(r.is_zero());
  CHECK(q.is_positive());
}

TEST_CASE("catalog divisibility and tensor identities") {
  // subgraph pairs among the rows on at most four vertices: the smaller
  // series divides the larger with nonnegative quotient coefficients
  const auto& rows = fk::appendix_catalog();
  std::vector<const fk::CatalogEntry*> small;
  for (const auto& r : rows)
    if (r.graph.n() <= 4) small.push_back(&r);
  int pairs = 0;
  for (const auto* a : small)
    for (const auto* b : small) {
      if (a == b) continue;
      fk::Graph ga(4, a->graph.edges());
      fk::Graph gb(4, b->graph.edges());
      if (!ga.is_subgraph_of(gb)) continue;
      auto [q, rem] = b->series.exact_divide(a->series);
      CHECK(rem.is_zero());
      for (int d = 0; d <= q.degree(); ++d) CHECK(q.coeff(d) >= 0);
      ++pairs;
    }
  CHECK(pairs > 10);

  // H_{K_{1,n-1}} * H_{K_{n-1}} = H_n for n = 4, 5
  CHECK(formula("star", {4}) * formula("complete", {3}) == formula("complete", {4}));
  CHECK(formula("star", {5}) * formula("complete", {4}) == formula("complete", {5}));
}
