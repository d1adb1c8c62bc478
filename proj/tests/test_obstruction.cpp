#include <doctest.h>

#include <random>

#include "fourmove/catalog.hpp"
#include "fourmove/errors.hpp"
#include "fourmove/milnor.hpp"
#include "fourmove/obstruction.hpp"
#include "test_support.hpp"

using namespace fourmove;
using testsupport::random_code;

namespace {

const ConditionStatus& cond(const ObstructionReport& r, int component, ConditionId c) {
  return r.components[component - 1].conditions[static_cast<int>(c)];
}

}  // namespace

TEST_CASE("check_conditions on the unit series") {
  auto st = check_conditions(TruncatedSeries::one(3, 4), 3, 4);
  for (const ConditionStatus& s : st) {
    CHECK(s.holds);
    CHECK(s.witnesses.empty());
  }
}

TEST_CASE("check_conditions flags the Hopf and figure4 patterns") {
  Alphabet A = Alphabet::meridians(2);
  Word hopf = commutator(Word::generator(A, 0), Word::generator(A, 1));
  auto st = check_conditions(expand_word(hopf, 2, 4), 2, 4);
  CHECK(!st[4].holds);
  REQUIRE(st[4].witnesses.size() == 2);
  CHECK(st[4].witnesses[0].monomials[0] == Monomial::of({1, 2}));
  CHECK(st[4].witnesses[1].monomials[0] == Monomial::of({2, 1}));

  TruncatedSeries f4 = commutator_series(catalog_get("figure4_welded").code, 2, 5, 4);
  auto st4 = check_conditions(f4, 2, 4);
  CHECK(!st4[1].holds);
  REQUIRE(st4[1].witnesses.size() == 1);
  const Witness& w = st4[1].witnesses[0];
  CHECK(w.monomials[0] == Monomial::of({1, 2, 2}));
  CHECK(w.monomials[1] == Monomial::of({2, 1, 1}));
  CHECK(w.values == std::vector<int>{1, 0});
  CHECK(st4[0].holds);
  CHECK(st4[3].holds);
  CHECK(st4[4].holds);  // both linking numbers vanish
}

TEST_CASE("check_conditions rejects an untrusted band") {
  CHECK_THROWS_AS(check_conditions(TruncatedSeries::one(2, 4), 2, 3), PreconditionError);
  CHECK_THROWS_AS(check_conditions(TruncatedSeries::one(2, 3), 2, 4), PreconditionError);
}

TEST_CASE("condition IV fires on adjacent-repeat-free monomials only") {
  // c(1,2,1,3) nonzero: three distinct indices, no adjacent repeat
  TruncatedSeries s = TruncatedSeries::one(3, 4);
  s.flip(Monomial::of({1, 2, 1, 3}));
  auto st = check_conditions(s, 3, 4);
  CHECK(!st[3].holds);
  CHECK(st[3].witnesses[0].monomials[0] == Monomial::of({1, 2, 1, 3}));

  // c(1,1,2,3) nonzero: repeat at positions 1-2 is allowed by IV
  TruncatedSeries ok = TruncatedSeries::one(3, 4);
  ok.flip(Monomial::of({1, 1, 2, 3}));
  CHECK(check_conditions(ok, 3, 4)[3].holds);
}

TEST_CASE("check_link verdicts and reports") {
  ObstructionReport trivial = check_link(catalog_get("trivial(3)").code);
  CHECK(trivial.verdict == Verdict::no_obstruction_found);
  CHECK(std::string(to_string(trivial.verdict)) == "NO_OBSTRUCTION_FOUND");
  CHECK(trivial.q == 5);
  CHECK(trivial.degree_bound == 4);

  ObstructionReport f4 = check_link(catalog_get("figure4_welded").code, 5);
  CHECK(f4.verdict == Verdict::obstructed);
  CHECK(cond(f4, 1, ConditionId::II).holds);
  CHECK(!cond(f4, 2, ConditionId::II).holds);
  CHECK(f4.linking == std::vector<std::vector<int>>{{0, 0}, {0, 0}});

  ObstructionReport chain = check_link(catalog_get("milnor_chain(3)").code, 5);
  CHECK(chain.verdict == Verdict::obstructed);
  const ConditionStatus& v = cond(chain, 3, ConditionId::V);
  CHECK(!v.holds);
  bool has_witness = false;
  for (const Witness& w : v.witnesses)
    has_witness = has_witness || w.monomials[0] == Monomial::of({3, 1, 2});
  CHECK(has_witness);

  CHECK_THROWS_AS(check_link(catalog_get("hopf").code, 4), PreconditionError);
  CHECK_THROWS_AS(check_link(catalog_get("hopf").code, 5, 3), PreconditionError);
}

TEST_CASE("witnesses persist at larger trusted bounds") {
  UnderpassCode f4 = catalog_get("figure4_welded").code;
  for (int q : {5, 6, 7}) {
    ObstructionReport r = check_link(f4, q);
    CHECK(r.verdict == Verdict::obstructed);
    const ConditionStatus& st = cond(r, 2, ConditionId::II);
    REQUIRE(!st.holds);
    CHECK(st.witnesses[0].monomials[0] == Monomial::of({1, 2, 2}));
    CHECK(st.witnesses[0].values == std::vector<int>{1, 0});
  }
}

TEST_CASE("relabeling components permutes the witnesses") {
  // figure4 with the two components swapped
  UnderpassCode swapped("figure4_swapped",
                        {{{{2, 1}, Sign::positive}, {{2, 2}, Sign::negative}},
                         {{{1, 1}, Sign::negative}, {{1, 1}, Sign::positive}}});
  ObstructionReport r = check_link(swapped, 5);
  CHECK(r.verdict == Verdict::obstructed);
  CHECK(cond(r, 2, ConditionId::II).holds);
  const ConditionStatus& st = cond(r, 1, ConditionId::II);
  REQUIRE(!st.holds);
  CHECK(st.witnesses[0].monomials[0] == Monomial::of({1, 2, 2}));
  CHECK(st.witnesses[0].monomials[1] == Monomial::of({2, 1, 1}));
  CHECK(st.witnesses[0].values == std::vector<int>{0, 1});
}

TEST_CASE("relabeling components never changes the verdict") {
  std::mt19937_64 rng(139);
  for (int t = 0; t < 25; ++t) {
    UnderpassCode c = random_code(3, 8, rng);
    int m = c.m();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<UnderpassEntry>> comps(m);
    for (int i = 1; i <= m; ++i) {
      auto list = c.entries(i);
      for (UnderpassEntry& e : list) e.over.component = perm[e.over.component - 1] + 1;
      comps[perm[i - 1]] = std::move(list);
    }
    UnderpassCode relabeled("pi", std::move(comps));
    ObstructionReport a = check_link(c, 5), b = check_link(relabeled, 5);
    CHECK(a.verdict == b.verdict);
    // per-component witness counts transport along the permutation
    for (int i = 1; i <= m; ++i)
      for (int cnd = 0; cnd < 5; ++cnd)
        CHECK(a.components[i - 1].conditions[cnd].witnesses.size() ==
              b.components[perm[i - 1]].conditions[cnd].witnesses.size());
  }
}

TEST_CASE("condition reads stay inside the trusted band") {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 20; ++t) {
    UnderpassCode c = random_code(3, 6, rng);
    int q = 5, D = 6;  // D beyond the band: B = min(q-1, D) = 4
    auto series = commutator_series_all(c, q, D);
    for (int i = 1; i <= c.m(); ++i) {
      CheckStats stats;
      check_conditions(series[i - 1], c.m(), 4, i, &stats);
      CHECK(stats.max_degree_read <= 4);
    }
  }
}

TEST_CASE("commutator series never show degree-1 or degree-2 pure powers") {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 30; ++t) {
    UnderpassCode c = random_code(3, 6, rng);
    for (const TruncatedSeries& s : commutator_series_all(c, 5, 4)) {
      for (int k = 1; k <= c.m(); ++k) {
        CHECK(s.coefficient(Monomial::of({k})) == 0);
        CHECK(s.coefficient(Monomial::of({k, k})) == 0);
      }
    }
  }
}

TEST_CASE("relator self-test: the proof conditions hold on random samples") {
  SelftestSummary s2 = relator_conditions_selftest(60, 2, 12345);
  CHECK(s2.trials == 60);
  CHECK(s2.failures == 0);
  SelftestSummary s3 = relator_conditions_selftest(60, 3, 999);
  CHECK(s3.failures == 0);

  // the simplest relator, expanded directly
  Alphabet A = Alphabet::meridians(2);
  Word s = make_s_relator({A.meridian_gen(1), 1}, {A.meridian_gen(2), 1}, Word(A));
  auto st = check_conditions(expand_word(s, 2, 5), 2, 4);
  for (const ConditionStatus& c : st) CHECK(c.holds);

  CHECK(check_conditions(expand_word(Word(A), 2, 4), 2, 4)[0].holds);  // empty product
  CHECK_THROWS_AS(relator_conditions_selftest(5, 1, 1), PreconditionError);
}

TEST_CASE("report serialization") {
  ObstructionReport r = check_link(catalog_get("figure4_welded").code, 5);
  std::string json = report_json(r);
  CHECK(json.find("\"verdict\":\"OBSTRUCTED\"") != std::string::npos);
  CHECK(json.find("\"q\":5") != std::string::npos);
  CHECK(json.find("\"degree_bound\":4") != std::string::npos);
  CHECK(json.find("\"monomials\":[\"X1X2X2\",\"X2X1X1\"]") != std::string::npos);
  CHECK(json.find("\"values\":[1,0]") != std::string::npos);
  // key order pinned by the format contract
  CHECK(json.rfind("{\"verdict\":", 0) == 0);
  CHECK(json.find("\"q\":") < json.find("\"degree_bound\":"));
  CHECK(json.find("\"degree_bound\":") < json.find("\"components\":"));

  std::string text = report_text(r);
  CHECK(text.find("verdict: OBSTRUCTED") != std::string::npos);
  CHECK(text.find("II violated: c(X1X2X2) = 1, c(X2X1X1) = 0") != std::string::npos);

  std::string clean = report_text(check_link(catalog_get("trivial(2)").code));
  CHECK(clean.find("NO_OBSTRUCTION_FOUND") != std::string::npos);
  CHECK(clean.find("4-trivial") == std::string::npos);
}
