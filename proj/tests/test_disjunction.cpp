#include <doctest.h>

#include "cutlab/disjunction.hpp"
#include "cutlab/errors.hpp"
#include "fixtures.hpp"

using namespace cutlab;

TEST_CASE("simple t-branch structure") {
  SUBCASE("two-variable branch has four 2-row terms") {
    const Disjunction d = simple_tbranch({1, 2}, 4);
    CHECK(d.term_count() == 4);
    CHECK(d.r == 2);
    for (const auto& term : d.terms) {
      CHECK(term.d.rows() == 2);
      CHECK(term.labels.has_value());
    }
  }
  SUBCASE("term count is 2^|K|") {
    for (int t = 1; t <= 5; ++t) {
      std::vector<int> K;
      for (int i = 0; i < t; ++i) K.push_back(i);
      CHECK(simple_tbranch(K, 8).term_count() == (1 << t));
    }
  }
  SUBCASE("single split") {
    const Disjunction d = simple_tbranch({3}, 5);
    REQUIRE(d.term_count() == 2);
    // term 0: -x3 >= 0; term 1: x3 >= 1
    CHECK(d.terms[0].d.at(0, 3) == Rational(-1));
    CHECK(d.terms[0].d0[0] == Rational(0));
    CHECK(d.terms[1].d.at(0, 3) == Rational(1));
    CHECK(d.terms[1].d0[0] == Rational(1));
  }
  SUBCASE("empty K is rejected") { CHECK_THROWS_AS(simple_tbranch({}, 3), EmptyK); }
}

TEST_CASE("labels round-trip to the (D, d0) encoding") {
  const Disjunction d = simple_tbranch({0, 2}, 3);
  for (const auto& term : d.terms) {
    REQUIRE(term.labels.has_value());
    for (int l = 0; l < term.d.rows(); ++l) {
      const RowLabel& lab = (*term.labels)[l];
      if (lab.side == BranchSide::AtLeastOne) {
        CHECK(term.d.at(l, lab.variable) == Rational(1));
        CHECK(term.d0[l] == Rational(1));
      } else {
        CHECK(term.d.at(l, lab.variable) == Rational(-1));
        CHECK(term.d0[l] == Rational(0));
      }
    }
  }
}

TEST_CASE("every 0/1 assignment satisfies exactly one term") {
  for (int t = 1; t <= 5; ++t) {
    std::vector<int> K;
    for (int i = 0; i < t; ++i) K.push_back(i);
    const Disjunction d = simple_tbranch(K, t);
    for (unsigned assign = 0; assign < (1u << t); ++assign) {
      RatVec x(t);
      for (int i = 0; i < t; ++i) x[i] = Rational(static_cast<int>((assign >> i) & 1u));
      int satisfied = 0;
      for (const auto& term : d.terms) {
        bool ok = true;
        for (int l = 0; l < term.d.rows() && ok; ++l) {
          Rational act;
          for (int j = 0; j < t; ++j) act += term.d.at(l, j) * x[j];
          ok = act >= term.d0[l];
        }
        satisfied += ok;
      }
      CHECK(satisfied == 1);
    }
  }
}

TEST_CASE("subset enumeration") {
  const std::vector<int> frac{2, 3, 5, 7, 11, 13};
  SUBCASE("15 pairs from 6 candidates") {
    const auto subsets = enumerate_subsets(frac, 2);
    CHECK(subsets.size() == 15);
    CHECK(subsets.front() == std::vector<int>{2, 3});
    CHECK(subsets.back() == std::vector<int>{11, 13});
    // lexicographic order
    for (size_t i = 1; i < subsets.size(); ++i) CHECK(subsets[i - 1] < subsets[i]);
  }
  SUBCASE("oversized request is empty") { CHECK(enumerate_subsets({1, 2}, 3).empty()); }
  SUBCASE("cap truncates") {
    const auto subsets = enumerate_subsets(frac, 2, 3L);
    REQUIRE(subsets.size() == 3);
    CHECK(subsets[2] == std::vector<int>{2, 7});
  }
}

TEST_CASE("exclusion checks are exact row evaluations") {
  SUBCASE("interior fractional point is excluded by its split") {
    const Disjunction d = simple_tbranch({0}, 1);
    CHECK(check_excludes(d, {Rational(1, 2)}));
    CHECK_FALSE(check_excludes(d, {Rational(1)}));  // x_k >= 1 satisfied
    CHECK_FALSE(check_excludes(d, {Rational(0)}));
  }
  SUBCASE("the figure disjunction excludes vertex B") {
    // x2 = 15/16 < 1 fails both x2>=1 terms, x1 = 21/16 > 0 fails both x1<=0
    // terms, and x2 > 0 fails the remaining x2<=0 term
    CHECK(check_excludes(fixtures::fig1_disjunction(), fixtures::fig1_vertex_B()));
  }
  SUBCASE("boundary values count as satisfied") {
    const Disjunction d = simple_tbranch({0, 1}, 2);
    CHECK_FALSE(check_excludes(d, {Rational(0), Rational(1)}));
    CHECK(check_excludes(d, {Rational(0), Rational(1, 2)}));
  }
}
