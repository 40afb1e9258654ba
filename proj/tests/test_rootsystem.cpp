#include <doctest.h>

#include "monoid/errors.hpp"
#include "monoid/rootsystem.hpp"
#include "monoid/weyl.hpp"

using namespace monoid;

namespace {

RootSystemData build(const char* name) { return RootSystemData::build(CartanType::parse(name)); }

int closure_positive_count(const RootSystemData& rs, const SimpleSubset& x) {
  int count = 0;
  for (const Root& r : reflection_closure(rs)) {
    bool ok = true;
    for (int j = 0; j < rs.rank(); ++j) ok = ok && r[static_cast<std::size_t>(j)] >= 0 && (r[static_cast<std::size_t>(j)] == 0 || x.contains(j + 1));
    if (ok) ++count;
  }
  return count;
}

std::vector<const char*> all_small_types() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};
}

}  // namespace

TEST_CASE("CartanType parsing and aliases") {
  CHECK(CartanType::parse("A3") == CartanType{Family::A, 3});
  CHECK(CartanType::parse("c4") == CartanType{Family::C, 4});
  CHECK(CartanType::parse(" E6 ").name() == "E6");
  CHECK(CartanType::parse("C2") == CartanType{Family::B, 2});
  CHECK(CartanType::parse("D3") == CartanType{Family::A, 3});
  CHECK(CartanType::parse("B1") == CartanType{Family::A, 1});
  for (const char* bad : {"E5", "E9", "F3", "G3", "H3", "A0", "D2", "A", "", "Ax", "3A"}) {
    CHECK_THROWS_AS(CartanType::parse(bad), UnsupportedType);
  }
}

TEST_CASE("SimpleSubset parsing") {
  CHECK(SimpleSubset::parse("1,3,4").indices() == std::vector<int>{1, 3, 4});
  CHECK(SimpleSubset::parse(" 4, 1 ").indices() == std::vector<int>{1, 4});
  CHECK(SimpleSubset::parse("").empty());
  CHECK(SimpleSubset::parse("2,3").to_string() == "{2,3}");
  CHECK_THROWS_AS(SimpleSubset::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(SimpleSubset::parse("1,a"), ParseError);
  CHECK_THROWS_AS(SimpleSubset::parse("0"), IndexOutOfRange);
}

TEST_CASE("positive root counts") {
  CHECK(build("A2").num_positive() == 3);
  CHECK(build("C2").num_positive() == 4);
  CHECK(build("G2").num_positive() == 6);
  CHECK(closure_positive_count(build("C2"), SimpleSubset::full(2)) == 4);
  CHECK(closure_positive_count(build("G2"), SimpleSubset::full(2)) == 6);

  for (const char* name : {"A1", "A5", "B3", "B6", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    const auto rs = build(name);
    CAPTURE(name);
    CHECK(rs.num_positive() == positive_root_count(rs.cartan_type()));
    CHECK(closure_positive_count(rs, rs.all()) == rs.num_positive());
    for (const Root& r : rs.positive_roots())
      for (int c : r) CHECK(c >= 0);
  }
  CHECK(build("E8").num_positive() == 120);
  CHECK(build("C4").num_positive() == 16);
  CHECK(build("A4").num_positive() == 10);
}

TEST_CASE("adjacency matches the Cartan matrix") {
  for (const char* name : all_small_types()) {
    const auto rs = build(name);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        CHECK(rs.adjacent(i, j) == (i != j && rs.cartan(i - 1, j - 1) != 0));
        CHECK(rs.adjacent(i, j) == rs.adjacent(j, i));
      }
  }
}

TEST_CASE("root lengths") {
  const auto c4 = build("C4");
  CHECK(c4.length_squared(4) == 2);
  CHECK(c4.length_squared(1) == 1);
  const auto b4 = build("B4");
  CHECK(b4.length_squared(4) == 1);
  CHECK(b4.length_squared(1) == 2);
  CHECK(build("G2").length_squared(2) == 3);
}

TEST_CASE("positive_count_of_subset") {
  const auto c3 = build("C3");
  CHECK(c3.positive_count_of_subset(SimpleSubset()) == 0);
  CHECK(c3.positive_count_of_subset(c3.all()) == 9);
  CHECK(c3.positive_count_of_subset(SimpleSubset::parse("2,3")) == 4);
  CHECK(closure_positive_count(c3, SimpleSubset::parse("2,3")) == 4);
  CHECK_THROWS_AS(c3.positive_count_of_subset(SimpleSubset::parse("4")), IndexOutOfRange);
}

TEST_CASE("connected components and classification") {
  CHECK(build("A3").connected_components(SimpleSubset()).empty());

  const auto c4 = build("C4").connected_components(SimpleSubset::parse("1,3,4"));
  REQUIRE(c4.size() == 2);
  CHECK(c4[0].nodes == SimpleSubset::parse("1"));
  CHECK(c4[0].type.name() == "A1");
  CHECK(c4[1].nodes == SimpleSubset::parse("3,4"));
  CHECK(c4[1].type.name() == "B2");

  const auto a4 = build("A4").connected_components(SimpleSubset::parse("1,2,4"));
  REQUIRE(a4.size() == 2);
  CHECK(a4[0].type.name() == "A2");
  CHECK(a4[1].type.name() == "A1");

  auto single = [](const char* type, const char* x) {
    const auto comps = build(type).connected_components(SimpleSubset::parse(x));
    REQUIRE(comps.size() == 1);
    return comps[0].type.name();
  };
  CHECK(single("C4", "2,3,4") == "C3");
  CHECK(single("B4", "2,3,4") == "B3");
  CHECK(single("F4", "1,2,3,4") == "F4");
  CHECK(single("F4", "1,2,3") == "B3");
  CHECK(single("F4", "2,3,4") == "C3");
  CHECK(single("F4", "2,3") == "B2");
  CHECK(single("G2", "1,2") == "G2");
  CHECK(single("D5", "3,4,5") == "A3");
  CHECK(single("D5", "1,2,3,4,5") == "D5");
  CHECK(single("D6", "2,3,4,5,6") == "D5");
  CHECK(single("E6", "1,2,3,4,5,6") == "E6");
  CHECK(single("E7", "1,2,3,4,5,6") == "E6");
  CHECK(single("E8", "2,3,4,5,6,7,8") == "D7");
  CHECK(single("E8", "1,2,3,4,5,6,7") == "E7");
  CHECK(single("E8", "1,3,4,5,6,7,8") == "A7");
}

TEST_CASE("property: subset root counts are additive over components") {
  for (const char* name : all_small_types()) {
    const auto rs = build(name);
    for (std::uint64_t m = 0; m <= rs.all().mask(); ++m) {
      const auto x = SimpleSubset::from_mask(m);
      int sum = 0;
      int nodes = 0;
      for (const auto& c : rs.connected_components(x)) {
        sum += positive_root_count(c.type);
        nodes += c.nodes.size();
        CHECK(c.type.rank == c.nodes.size());
      }
      CAPTURE(name);
      CAPTURE(x.to_string());
      CHECK(nodes == x.size());
      CHECK(rs.positive_count_of_subset(x) == sum);
    }
  }
}

TEST_CASE("degrees") {
  CHECK(degrees(CartanType::parse("A3")) == std::vector<int>{2, 3, 4});
  CHECK(degrees(CartanType::parse("C3")) == std::vector<int>{2, 4, 6});
  CHECK(degrees(CartanType::parse("G2")) == std::vector<int>{2, 6});
  CHECK(degrees(CartanType::parse("D4")) == std::vector<int>{2, 4, 4, 6});
  CHECK(degrees(CartanType::parse("E6")) == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(degrees(CartanType::parse("E7")) == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
  CHECK(degrees(CartanType::parse("E8")) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(degrees(CartanType::parse("F4")) == std::vector<int>{2, 6, 8, 12});
}

TEST_CASE("poincare_product") {
  CHECK(poincare_product(CartanType::parse("A1")) == QPolynomial{1, 1});
  CHECK(poincare_product(CartanType::parse("A2")) == QPolynomial{1, 2, 2, 1});
  CHECK(poincare_product(CartanType::parse("B2")) == QPolynomial{1, 2, 2, 2, 1});
  const auto rs = build("C4");
  CHECK(poincare_product(rs, SimpleSubset()) == QPolynomial{1});
  CHECK(poincare_product(rs, SimpleSubset::parse("1,3,4")) == QPolynomial{1, 1} * QPolynomial{1, 2, 2, 2, 1});
  for (const char* name : {"A4", "B3", "D5", "E6", "F4", "G2"}) {
    const auto t = CartanType::parse(name);
    long long order = 1;
    for (int d : degrees(t)) order *= d;
    CHECK(eval_big(poincare_product(t), 1) == order);
    CHECK(poincare_product(t).degree() == positive_root_count(t));
  }
}
