#include <doctest.h>

#include <algorithm>
#include <random>

#include "posetrep/forms.hpp"
#include "posetrep/incidence.hpp"
#include "support.hpp"

using namespace posetrep;
using namespace testsupport;

TEST_CASE("coordinate vectors of the fixtures") {
  CHECK(coordinate_vector(example1(), example1_alpha()) ==
        CoordVector{{"1", 1}, {"2", 2}, {"3", 1}, {"4", 1}, {"5", 2}, {"6", 1}, {"7", 0}});
  CHECK(coordinate_vector(example2(), example2_alpha()) ==
        CoordVector{{"1", 2}, {"2", 2}, {"3", -1}, {"4", -1}});

  Poset anti = build_poset({"a", "b"}, {});
  DimVector a{5, {{"a", 2}, {"b", 3}}};
  CHECK(coordinate_vector(anti, a) == CoordVector{{"a", 2}, {"b", 3}});

  CHECK_THROWS_AS(coordinate_vector(example1(), example2_alpha()), InputError);
}

TEST_CASE("iteration reaches the coordinate vector") {
  IterationTrace trace = iteration_sequence(example1(), example1_alpha());
  CHECK(trace.order == std::vector<std::string>{"6", "7", "3", "4", "5", "1", "2"});
  REQUIRE(trace.iterates.size() == 3);
  CHECK(trace.iterates[0] == std::vector<Int>{6, 7, 2, 4, 5, 1, 2});
  CHECK(trace.iterates[1] == std::vector<Int>{3, 4, 1, 1, 2, 1, 2});
  CHECK(trace.iterates[2] == std::vector<Int>{1, 0, 1, 1, 2, 1, 2});

  Poset anti = build_poset({"a", "b"}, {});
  CHECK(iteration_sequence(anti, DimVector{4, {{"a", 1}, {"b", 2}}}).iterates.size() == 1);

  Poset chain = build_poset({"a", "b"}, {{"a", "b"}});
  auto t2 = iteration_sequence(chain, DimVector{5, {{"a", 1}, {"b", 2}}});
  REQUIRE(t2.iterates.size() == 2);
  CHECK(t2.iterates[1] == std::vector<Int>{1, 1});
}

TEST_CASE("admissibility verdicts") {
  CHECK(is_admissible(example1(), example1_alpha()).admissible);

  auto bad = is_admissible(example2(), example2_alpha());
  CHECK_FALSE(bad.admissible);
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front() == "c[3] = -1 < 0");

  CHECK_FALSE(is_admissible(example3(), example3_alpha()).admissible);

  // An entry above the ambient dimension is the other violation kind.
  Poset single = build_poset({"x"}, {});
  auto tall = is_admissible(single, DimVector{2, {{"x", 3}}});
  CHECK_FALSE(tall.admissible);
  CHECK(tall.violations.front() == "alpha[x] = 3 > alpha0 = 2");
}

TEST_CASE("non-negativity over the enlargement") {
  Poset anti = build_poset({"1", "2"}, {});
  CHECK(is_p0_nonnegative(anti, DimVector{4, {{"1", 2}, {"2", 2}}}));
  CHECK_FALSE(is_p0_nonnegative(anti, DimVector{3, {{"1", 2}, {"2", 2}}}));
  CHECK(is_p0_nonnegative(example1(), example1_alpha()));
}

TEST_CASE("Euler form on the fixtures") {
  CHECK(euler_form(example1(), example1_alpha()) == 27);
  CHECK(euler_form(example2(), example2_alpha()) == 10);
  CHECK(euler_form(example2_enlarged(), example2_enlarged_alpha()) == 9);
  CHECK(euler_form(example3(), example3_alpha()) == 9);
  CHECK(euler_form(example1(), DimVector{0, {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"5", 0}, {"6", 0}, {"7", 0}}}) == 0);
  CHECK(euler_form(Poset{}, DimVector{5, {}}) == 25);
  CHECK_THROWS_AS(euler_form(build_poset({"x"}, {}), DimVector{4'000'000'000, {{"x", 0}}}),
                  OverflowError);
}

TEST_CASE("Tits matrix and form") {
  Poset single = build_poset({"x"}, {});
  CHECK(tits_matrix(single) == IntMatrix(2, 2, {1, 0, -1, 1}));
  CHECK(tits_matrix(build_poset({"a", "b"}, {})) ==
        IntMatrix(3, 3, {1, 0, 0, -1, 1, 0, -1, 0, 1}));

  IntMatrix t2 = tits_matrix(example2());
  IntMatrix c2 = incidence_matrix(example2());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(t2.at(i + 1, j + 1) == c2.at(j, i));
  }

  CHECK(tits_form(example1(), DimVector{1, {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}, {"5", 0}, {"6", 0}, {"7", 0}}}) == 1);
  DimVector beta{8, coordinate_vector(example1(), example1_alpha())};
  CHECK(tits_form(example1(), beta) == 27);
  for (Int n = 0; n <= 5; ++n) {
    for (Int k = -2; k <= 5; ++k) {
      CHECK(tits_form(single, DimVector{n, {{"x", k}}}) == n * n - k * n + k * k);
    }
  }
}

TEST_CASE("summand enumeration on small fixtures") {
  Poset single = build_poset({"x"}, {});
  auto one = summands(single, DimVector{1, {{"x", 1}}});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == DimVector{1, {{"x", 1}}});

  auto three = summands(single, DimVector{2, {{"x", 1}}});
  REQUIRE(three.size() == 3);
  CHECK(three[0] == DimVector{1, {{"x", 0}}});
  CHECK(three[1] == DimVector{1, {{"x", 1}}});
  CHECK(three[2] == DimVector{2, {{"x", 1}}});

  Poset anti = build_poset({"1", "2"}, {});
  auto sums = summands(anti, DimVector{1, {{"1", 0}, {"2", 0}}});
  REQUIRE(sums.size() == 1);
  CHECK(sums[0] == DimVector{1, {{"1", 0}, {"2", 0}}});

  CHECK_THROWS_AS(summands(single, DimVector{1'000'000, {{"x", 1'000'000}}}),
                  SearchSpaceTooLargeError);
  CHECK_THROWS_AS(summands(example2(), example2_alpha()), NotAdmissibleError);
}

TEST_CASE("summand scan verdicts") {
  Poset anti4 = build_poset({"1", "2", "3", "4"}, {});
  DimVector a4{2, {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}}};
  auto fail = summand_scan(anti4, a4);
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.witness.has_value());
  CHECK(*fail.witness == a4);
  CHECK(fail.witness_q == 0);

  CHECK(summand_scan(build_poset({"x"}, {}), DimVector{1, {{"x", 1}}}).pass);
  CHECK(summand_scan(build_poset({"1", "2"}, {}), DimVector{2, {{"1", 1}, {"2", 1}}}).pass);
}

TEST_CASE("random posets: form identities") {
  std::mt19937 g(90210);
  int admissible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = random_poset(g, 8);
    DimVector a = random_integer_vector(g, p, -5, 8);

    // Tits form of the transformed vector equals the Euler form.
    DimVector beta{a.alpha0, coordinate_vector(p, a)};
    CHECK(tits_form(p, beta) == euler_form(p, a));

    // The iteration lands on the coordinate vector.
    auto trace = iteration_sequence(p, a);
    std::vector<Int> c_row;
    CoordVector c = coordinate_vector(p, a);
    for (int idx : p.level_order()) c_row.push_back(c.at(p.labels()[idx]));
    CHECK(trace.iterates.back() == c_row);

    // Expansion route for the form, recomputed here from scratch.
    Int sum_c = 0;
    Int cross = 0;
    for (const auto& [label, cs] : c) {
      sum_c += cs;
      cross += cs * a.alpha.at(label);
    }
    CHECK(euler_form(p, a) == a.alpha0 * a.alpha0 - sum_c * a.alpha0 + cross);

    // Admissible vectors are monotone along the order, and the cone is
    // closed under addition.
    DimVector adm = random_admissible(g, p);
    CHECK(is_admissible(p, adm).admissible);
    ++admissible_seen;
    for (const auto& s : p.labels()) {
      for (const auto& t : p.labels()) {
        if (p.less(s, t)) CHECK(adm.alpha.at(s) <= adm.alpha.at(t));
      }
    }
    DimVector other = random_admissible(g, p);
    DimVector sum{adm.alpha0 + other.alpha0, {}};
    for (const auto& [label, v] : adm.alpha) sum.alpha[label] = v + other.alpha.at(label);
    CHECK(is_admissible(p, sum).admissible);
  }
  CHECK(admissible_seen == 200);
}

TEST_CASE("the form is invariant under relabeling") {
  std::mt19937 g(424242);
  for (int trial = 0; trial < 50; ++trial) {
    Poset p = random_poset(g, 7);
    DimVector a = random_integer_vector(g, p, -3, 6);

    // Rename e<i> to r<i> and feed labels in reversed order.
    std::vector<std::string> renamed;
    for (const auto& label : p.labels()) renamed.push_back("r" + label.substr(1));
    std::reverse(renamed.begin(), renamed.end());
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& s : p.labels()) {
      for (const auto& t : p.labels()) {
        if (p.less(s, t)) rels.emplace_back("r" + s.substr(1), "r" + t.substr(1));
      }
    }
    Poset q = build_poset(renamed, rels);
    DimVector b{a.alpha0, {}};
    for (const auto& [label, v] : a.alpha) b.alpha["r" + label.substr(1)] = v;
    CHECK(euler_form(q, b) == euler_form(p, a));
  }
}
