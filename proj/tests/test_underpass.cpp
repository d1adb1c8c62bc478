#include <doctest.h>

#include <random>
#include <string>

#include "fourmove/errors.hpp"
#include "fourmove/underpass.hpp"
#include "test_support.hpp"

using namespace fourmove;
using testsupport::random_code;

namespace {

const char* kFigure4 = R"({
  "name": "figure4_welded",
  "components": [
    [ { "over": [2, 1], "sign": -1 }, { "over": [2, 1], "sign": 1 } ],
    [ { "over": [1, 1], "sign": 1 }, { "over": [1, 2], "sign": -1 } ]
  ]
})";

}  // namespace

TEST_CASE("parse_link_file accepts the documented format") {
  UnderpassCode code = parse_link_file(kFigure4);
  CHECK(code.name() == "figure4_welded");
  CHECK(code.m() == 2);
  CHECK(code.r(1) == 2);
  CHECK(code.r(2) == 2);
  CHECK(code.entries(1)[0] == UnderpassEntry{{2, 1}, Sign::negative});
  CHECK(code.entries(2)[1] == UnderpassEntry{{1, 2}, Sign::negative});

  UnderpassCode trivial = parse_link_file(R"({"name":"o2","components":[[],[]]})");
  CHECK(trivial.m() == 2);
  CHECK(trivial.r(1) == 0);
  CHECK(trivial.arc_count(1) == 1);
}

TEST_CASE("parse_link_file error reporting") {
  // semantic: arc (1:3) does not exist when component 1 has 2 arcs
  std::string bad = R"({"components":[
    [ { "over": [1, 3], "sign": 1 }, { "over": [1, 1], "sign": 1 } ],
    []
  ]})";
  CHECK_THROWS_WITH_AS(parse_link_file(bad),
                       doctest::Contains("(1:3)"), ValidationError);

  CHECK_THROWS_AS(parse_link_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_link_file(R"({"components": 3})"), ParseError);
  CHECK_THROWS_AS(parse_link_file(R"({"components": [[{"over": [1,1]}]]})"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_link_file(R"({"components":[[{"over":[1,1],"sign":2}]]})"),
      doctest::Contains("sign"), ValidationError);
  CHECK_THROWS_AS(parse_link_file(R"({"m": 3, "components": [[],[]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_link_file(R"({"components": []})"), ValidationError);
}

TEST_CASE("serializer emits keys in the documented order and round-trips") {
  UnderpassCode code = parse_link_file(kFigure4);
  std::string s = serialize_link(code);
  CHECK(s ==
        R"({"name":"figure4_welded","components":[[{"over":[2,1],"sign":-1},)"
        R"({"over":[2,1],"sign":1}],[{"over":[1,1],"sign":1},{"over":[1,2],"sign":-1}]]})");

  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    UnderpassCode c = random_code(3, 8, rng);
    CHECK(parse_link_file(serialize_link(c)) == c);
  }
}

TEST_CASE("import_gauss walks arcs correctly") {
  UnderpassCode hopf = import_gauss("O1+ U2+\nO2+ U1+");
  CHECK(hopf == UnderpassCode("", {{{{2, 1}, Sign::positive}},
                                   {{{1, 1}, Sign::positive}}}));

  UnderpassCode trefoil = import_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(trefoil == UnderpassCode("", {{{{1, 3}, Sign::positive},
                                       {{1, 1}, Sign::positive},
                                       {{1, 2}, Sign::positive}}}));

  // an empty line is a component with no crossings
  UnderpassCode with_empty = import_gauss("O1+ U1+\n");
  CHECK(with_empty.m() == 1);
  UnderpassCode two = import_gauss("\nO1+ U1+");
  CHECK(two.m() == 2);
  CHECK(two.r(1) == 0);
}

TEST_CASE("import_gauss rejects inconsistent codes") {
  CHECK_THROWS_WITH_AS(import_gauss("O1+ U2+"), doctest::Contains("crossing"),
                       ValidationError);  // dangling labels
  CHECK_THROWS_AS(import_gauss("O1+ U1-"), ValidationError);  // sign mismatch
  CHECK_THROWS_AS(import_gauss("O1+ O1+ U1+"), ValidationError);
  CHECK_THROWS_AS(import_gauss("O1* U1*"), ParseError);
  CHECK_THROWS_AS(import_gauss("Q1+"), ParseError);
}

TEST_CASE("import_gauss output validates") {
  // round-trip the walks through the validating constructor
  std::mt19937_64 rng(73);
  for (int t = 0; t < 20; ++t) {
    UnderpassCode c = random_code(3, 6, rng);
    CHECK_NOTHROW(UnderpassCode(c.name(), c.components()));
  }
  UnderpassCode g = import_gauss("O1+ U2+ O3- U4- O2+ U1+ O4- U3-");
  CHECK_NOTHROW(UnderpassCode(g.name(), g.components()));
}

TEST_CASE("linking numbers and writhes") {
  UnderpassCode fig4 = parse_link_file(kFigure4);
  CHECK(linking_number(fig4, 1, 2) == 0);
  CHECK(linking_number(fig4, 2, 1) == 0);
  CHECK(writhe(fig4, 1) == 0);
  CHECK(writhe(fig4, 2) == 0);

  UnderpassCode hopf = import_gauss("O1+ U2+\nO2+ U1+");
  CHECK(linking_number(hopf, 1, 2) == 1);
  CHECK(linking_number(hopf, 2, 1) == 1);

  UnderpassCode trefoil = import_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(writhe(trefoil, 1) == 3);

  UnderpassCode trivial("o", {{}, {}});
  CHECK(linking_number(trivial, 1, 2) == 0);
  CHECK_THROWS_AS(linking_number(trivial, 1, 1), PreconditionError);
  CHECK_THROWS_AS(writhe(trivial, 3), PreconditionError);
}

TEST_CASE("linking matrix agrees with the per-pair traversal") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 100; ++t) {
    UnderpassCode c = random_code(4, 10, rng);
    auto mat = linking_matrix(c);
    for (int i = 1; i <= c.m(); ++i) {
      for (int j = 1; j <= c.m(); ++j) {
        int expected = i == j ? writhe(c, i) : linking_number(c, i, j);
        CHECK(mat[i - 1][j - 1] == expected);
      }
    }
  }
}

TEST_CASE("component relabeling permutes the linking matrix") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 50; ++t) {
    UnderpassCode c = random_code(4, 10, rng);
    int m = c.m();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);  // new index of old component

    std::vector<std::vector<UnderpassEntry>> comps(m);
    for (int i = 1; i <= m; ++i) {
      auto list = c.entries(i);
      for (UnderpassEntry& e : list) e.over.component = perm[e.over.component - 1] + 1;
      comps[perm[i - 1]] = std::move(list);
    }
    UnderpassCode relabeled("pi", std::move(comps));

    auto a = linking_matrix(c), b = linking_matrix(relabeled);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(b[perm[i]][perm[j]] == a[i][j]);
  }
}
