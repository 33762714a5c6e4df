/*
 * Copyright 2026 the macpolar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

#include "macpolar/abelian.hpp"

using namespace macpolar;

namespace {

GroupElement el(std::vector<int> r) { return GroupElement(std::move(r)); }

}  // namespace

TEST_CASE("modular addition and negation") {
  const GroupSpec z4({4});
  CHECK(z4.add(el({3}), el({2})) == el({1}));
  CHECK(z4.neg(el({1})) == el({3}));
  CHECK(z4.neg(z4.zero()) == z4.zero());

  const GroupSpec z2z3({2, 3});
  CHECK(z2z3.add(el({1, 2}), el({1, 2})) == el({0, 1}));
  CHECK(z2z3.neg(el({1, 1})) == el({1, 2}));
  CHECK(z2z3.add(el({1, 2}), z2z3.zero()) == el({1, 2}));

  CHECK_THROWS_AS(z4.add(el({1}), el({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(z2z3.neg(el({1})), std::invalid_argument);
}

TEST_CASE("pairing values and bi-additivity") {
  const GroupSpec z2({2});
  CHECK(z2.pairing(el({1}), el({1})) == reduced(1, 2));

  const GroupSpec z2z2({2, 2});
  CHECK(z2z2.pairing(el({1, 1}), el({1, 0})) == reduced(1, 2));

  const GroupSpec z3({3});
  CHECK(z3.pairing(el({2}), el({2})) == reduced(1, 3));

  // <xhat, a+b> = <xhat,a> + <xhat,b> mod 1, exhaustively on Z2 x Z3.
  const GroupSpec g({2, 3});
  for (std::size_t xh = 0; xh < g.size(); ++xh)
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b) {
        const Rational lhs = g.pairing_index(xh, g.add_index(a, b));
        const Rational pa = g.pairing_index(xh, a);
        const Rational pb = g.pairing_index(xh, b);
        const long long den = pa.den * pb.den;
        const long long num = pa.num * pb.den + pb.num * pa.den;
        const Rational rhs = reduced(((num % den) + den) % den, den);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("canonical enumeration") {
  const GroupSpec z2({2});
  CHECK(z2.enumerate() == std::vector<GroupElement>{el({0}), el({1})});

  const GroupSpec z2z2({2, 2});
  CHECK(z2z2.enumerate() ==
        std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})});

  const GroupSpec trivial({1});
  CHECK(trivial.size() == 1);
  CHECK(trivial.enumerate() == std::vector<GroupElement>{el({0})});

  const GroupSpec empty_presentation{std::vector<int>{}};
  CHECK(empty_presentation.size() == 1);
  CHECK(empty_presentation.enumerate() == std::vector<GroupElement>{el({})});

  for (std::size_t i = 0; i < z2z2.size(); ++i) CHECK(z2z2.index_of(z2z2.element(i)) == i);
}

TEST_CASE("element order") {
  const GroupSpec z6({6});
  CHECK(z6.element_order(el({2})) == 3);
  CHECK(z6.element_order(z6.zero()) == 1);

  const GroupSpec z2z3({2, 3});
  CHECK(z2z3.element_order(el({1, 1})) == 6);

  // order divides |G| for every element of a few groups
  for (const GroupSpec& g : {GroupSpec({8}), GroupSpec({2, 2, 3}), GroupSpec({4, 6})})
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(static_cast<long long>(g.size()) % g.element_order_index(i) == 0);
}

TEST_CASE("subgroup closure") {
  const GroupSpec z6({6});
  CHECK(z6.subgroup_closure({el({2})}) == std::set<GroupElement>{el({0}), el({2}), el({4})});

  const GroupSpec z4({4});
  CHECK(z4.subgroup_closure({}) == std::set<GroupElement>{el({0})});

  const GroupSpec z2z2({2, 2});
  CHECK(z2z2.subgroup_closure({el({1, 0}), el({0, 1})}).size() == 4);

  // closure is idempotent
  const GroupSpec g({4, 6});
  const auto once = g.subgroup_closure_indices({g.index_of(el({2, 3})), g.index_of(el({0, 2}))});
  CHECK(g.subgroup_closure_indices(once) == once);
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  for (const GroupSpec& g : {GroupSpec({5}), GroupSpec({2, 4}), GroupSpec({2, 2, 2})}) {
    const std::size_t n = g.size();
    const std::size_t zero = g.index_of(g.zero());
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(g.add_index(a, zero) == a);
      CHECK(g.add_index(a, g.neg_index(a)) == zero);
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(g.add_index(a, b) == g.add_index(b, a));
        for (std::size_t c = 0; c < n; ++c)
          CHECK(g.add_index(g.add_index(a, b), c) == g.add_index(a, g.add_index(b, c)));
      }
    }
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(GroupSpec({0}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec({-2}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec({1 << 16, 1 << 16, 1 << 16}), std::invalid_argument);
  CHECK(GroupSpec({2, 3}).to_string() == "Z2 x Z3");
}
