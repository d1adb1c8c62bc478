#include "fourmove/obstruction.hpp"

#include <algorithm>
#include <stdexcept>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "fourmove/errors.hpp"
#include "fourmove/milnor.hpp"

namespace fourmove {

using ordered_json = nlohmann::ordered_json;

const char* to_string(ConditionId c) {
  switch (c) {
    case ConditionId::I: return "I";
    case ConditionId::II: return "II";
    case ConditionId::III: return "III";
    case ConditionId::IV: return "IV";
    case ConditionId::V: return "V";
  }
  return "?";
}

const char* to_string(Verdict v) {
  return v == Verdict::obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION_FOUND";
}

namespace {

// coefficient access with degree instrumentation; the callers below only
// ever form monomials of degree <= B
struct Reader {
  const TruncatedSeries& s;
  CheckStats* stats;
  int operator()(const Monomial& mo) const {
    if (stats != nullptr) stats->max_degree_read = std::max(stats->max_degree_read, mo.degree());
    return s.coefficient(mo);
  }
};

void add_single(ConditionStatus& st, int component, ConditionId c, Monomial mo, int v) {
  st.holds = false;
  st.witnesses.push_back({component, c, {std::move(mo)}, {v}});
}

// first entry differing from entry 0 in an equality chain -> witness pair
void check_chain(ConditionStatus& st, int component, ConditionId c,
                 const std::vector<Monomial>& chain, const Reader& read) {
  int v0 = read(chain[0]);
  for (std::size_t t = 1; t < chain.size(); ++t) {
    int vt = read(chain[t]);
    if (vt != v0) {
      st.holds = false;
      st.witnesses.push_back({component, c, {chain[0], chain[t]}, {v0, vt}});
      return;
    }
  }
}

Monomial repeated(int k, int d) { return Monomial::of(std::vector<int>(d, k)); }

}  // namespace

std::array<ConditionStatus, 5> check_conditions(const TruncatedSeries& series, int m,
                                                int B, int component,
                                                CheckStats* stats) {
  if (B < 4)
    throw PreconditionError("check_conditions needs a trusted degree bound B >= 4");
  if (series.degree_bound() < B)
    throw PreconditionError("series truncation D must be >= the degree bound B");
  if (m < 1 || m > series.var_count())
    throw PreconditionError("component count m out of range for the series");

  Reader read{series, stats};
  std::array<ConditionStatus, 5> out;

  // (i) pure powers of degree 1..4 vanish
  auto& c1 = out[0];
  for (int k = 1; k <= m; ++k)
    for (int d = 1; d <= 4; ++d)
      if (int v = read(repeated(k, d)); v != 0)
        add_single(c1, component, ConditionId::I, repeated(k, d), v);

  // (ii) degree-3 equality chain, symmetric under k <-> l
  auto& c2 = out[1];
  for (int k = 1; k <= m; ++k)
    for (int l = k + 1; l <= m; ++l)
      check_chain(c2, component, ConditionId::II,
                  {Monomial::of({k, l, l}), Monomial::of({l, k, k}),
                   Monomial::of({k, k, l}), Monomial::of({l, l, k})},
                  read);

  // (iii) degree-4 equalities; the 4-chain is ordered in (k, l)
  auto& c3 = out[2];
  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= m; ++l) {
      if (l == k) continue;
      if (k < l) {
        check_chain(c3, component, ConditionId::III,
                    {Monomial::of({k, l, k, l}), Monomial::of({l, k, l, k})}, read);
        check_chain(c3, component, ConditionId::III,
                    {Monomial::of({k, k, l, l}), Monomial::of({l, l, k, k})}, read);
      }
      check_chain(c3, component, ConditionId::III,
                  {Monomial::of({k, k, k, l}), Monomial::of({k, k, l, k}),
                   Monomial::of({k, l, k, k}), Monomial::of({l, k, k, k})},
                  read);
    }
  }

  // (iv) nonzero degree-4 coefficients on exactly 3 distinct indices need an
  // adjacent repeat at positions 1-2, 2-3, or 3-4
  auto& c4 = out[3];
  for (const Monomial& mo : series.nonzero_monomials()) {
    if (mo.degree() != 4) continue;
    std::set<int> distinct(mo.vars.begin(), mo.vars.end());
    if (distinct.size() != 3) continue;
    const auto& v = mo.vars;
    if (v[0] == v[1] || v[1] == v[2] || v[2] == v[3]) continue;
    (void)read(mo);
    add_single(c4, component, ConditionId::IV, mo, 1);
  }

  // (v) pairwise distinct indices vanish up to degree min(m, B)
  auto& c5 = out[4];
  int max_j = std::min(m, B);
  std::vector<int> seq;
  std::vector<bool> used(m + 1, false);
  auto scan = [&](auto&& self) -> void {
    if (!seq.empty()) {
      if (int v = read(Monomial::of(seq)); v != 0)
        add_single(c5, component, ConditionId::V, Monomial::of(seq), v);
    }
    if (static_cast<int>(seq.size()) == max_j) return;
    for (int k = 1; k <= m; ++k) {
      if (used[k]) continue;
      used[k] = true;
      seq.push_back(k);
      self(self);
      seq.pop_back();
      used[k] = false;
    }
  };
  scan(scan);

  return out;
}

ObstructionReport check_link(const UnderpassCode& code, int q, std::optional<int> D) {
  if (q < 5) throw PreconditionError("check_link needs q >= 5");
  const int m = code.m();
  int degree = D.value_or(std::min(q - 1, std::max(4, m)));
  if (degree < 1) throw PreconditionError("degree bound must be >= 1");
  const int B = std::min(q - 1, degree);

  std::vector<TruncatedSeries> series = commutator_series_all(code, q, degree);

  ObstructionReport rep;
  rep.q = q;
  rep.degree_bound = B;
  rep.name = code.name();
  rep.linking = linking_matrix(code);
  bool any = false;
  for (int i = 1; i <= m; ++i) {
    CheckStats stats;
    ComponentReport cr;
    cr.component = i;
    cr.conditions = check_conditions(series[i - 1], m, B, i, &stats);
    if (stats.max_degree_read > B)
      throw std::logic_error("internal: coefficient read beyond the trusted band");
    // commutators have zero exponent sums, so the degree-1 and degree-2
    // parts of condition (i) hold on every run; anything else is a bug
    for (const Witness& w : cr.conditions[0].witnesses)
      if (w.monomials[0].degree() < 3)
        throw std::logic_error("internal: commutator series broke the "
                               "exponent-sum identities");
    for (const ConditionStatus& st : cr.conditions) any = any || !st.holds;
    rep.components.push_back(std::move(cr));
  }
  rep.verdict = any ? Verdict::obstructed : Verdict::no_obstruction_found;
  return rep;
}

std::string report_json(const ObstructionReport& r) {
  ordered_json doc;
  doc["verdict"] = to_string(r.verdict);
  doc["q"] = r.q;
  doc["degree_bound"] = r.degree_bound;
  doc["name"] = r.name;
  doc["linking_matrix"] = r.linking;
  ordered_json comps = ordered_json::array();
  for (const ComponentReport& cr : r.components) {
    ordered_json jc;
    jc["i"] = cr.component;
    ordered_json conds;
    for (int c = 0; c < 5; ++c) {
      const ConditionStatus& st = cr.conditions[c];
      ordered_json js;
      js["status"] = st.holds ? "holds" : "violated";
      ordered_json ws = ordered_json::array();
      for (const Witness& w : st.witnesses) {
        ordered_json jw;
        ordered_json ms = ordered_json::array();
        for (const Monomial& mo : w.monomials) ms.push_back(mo.str());
        jw["monomials"] = std::move(ms);
        jw["values"] = w.values;
        ws.push_back(std::move(jw));
      }
      js["witnesses"] = std::move(ws);
      conds[to_string(static_cast<ConditionId>(c))] = std::move(js);
    }
    jc["conditions"] = std::move(conds);
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc.dump();
}

std::string report_text(const ObstructionReport& r) {
  std::string out;
  if (!r.name.empty()) out += "link: " + r.name + "\n";
  out += "q: " + std::to_string(r.q) + "\n";
  out += "degree bound: " + std::to_string(r.degree_bound) + "\n";
  out += "linking matrix:";
  for (const auto& row : r.linking) {
    out += " [";
    for (std::size_t j = 0; j < row.size(); ++j)
      out += (j ? "," : "") + std::to_string(row[j]);
    out += "]";
  }
  out += "\n";
  for (const ComponentReport& cr : r.components) {
    bool clean = true;
    for (const ConditionStatus& st : cr.conditions) clean = clean && st.holds;
    if (clean) {
      out += "component " + std::to_string(cr.component) + ": conditions I-V hold\n";
      continue;
    }
    out += "component " + std::to_string(cr.component) + ":\n";
    for (int c = 0; c < 5; ++c) {
      const ConditionStatus& st = cr.conditions[c];
      if (st.holds) continue;
      for (const Witness& w : st.witnesses) {
        out += std::string("  ") + to_string(static_cast<ConditionId>(c)) + " violated:";
        for (std::size_t t = 0; t < w.monomials.size(); ++t)
          out += std::string(t ? "," : "") + " c(" + w.monomials[t].str() +
                 ") = " + std::to_string(w.values[t]);
        out += "\n";
      }
    }
  }
  out += std::string("verdict: ") + to_string(r.verdict) + "\n";
  return out;
}

SelftestSummary relator_conditions_selftest(int trials, int m, std::uint64_t seed) {
  if (m < 2) throw PreconditionError("relator self-test needs m >= 2");
  std::mt19937_64 rng(seed);
  Alphabet A = Alphabet::meridians(m);
  std::uniform_int_distribution<int> pick_gen(0, m - 1);
  std::uniform_int_distribution<int> pick_len(0, 6);
  std::uniform_int_distribution<int> pick_factors(1, 3);
  auto pick_sign = [&] { return rng() & 1 ? 1 : -1; };
  auto random_word = [&] {
    Word w(A);
    int len = pick_len(rng);
    for (int t = 0; t < len; ++t) w.push_run(pick_gen(rng), pick_sign());
    return w;
  };

  SelftestSummary sum;
  sum.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Word s(A);
    int factors = pick_factors(rng);
    for (int f = 0; f < factors; ++f) {
      Letter a{pick_gen(rng), pick_sign()};
      Letter b{pick_gen(rng), pick_sign()};
      Word rel = make_s_relator(a, b, random_word());
      if (pick_sign() < 0) rel = invert(rel);
      s = multiply(s, conjugate(rel, random_word()));
    }
    int D = 4 + static_cast<int>(rng() & 1);
    TruncatedSeries E = expand_word(s, m, D);

    std::string fail;
    auto conditions = check_conditions(E, m, 4);
    for (int c = 0; c < 5; ++c)
      if (!conditions[c].holds && fail.empty())
        fail = std::string("condition ") + to_string(static_cast<ConditionId>(c)) +
               " violated at " + conditions[c].witnesses[0].monomials[0].str();
    if (fail.empty()) {
      // squarefree coefficients must vanish at every computed degree
      for (const Monomial& mo : E.nonzero_monomials()) {
        if (mo.degree() == 0) continue;
        std::set<int> distinct(mo.vars.begin(), mo.vars.end());
        if (static_cast<int>(distinct.size()) == mo.degree()) {
          fail = "squarefree monomial " + mo.str() + " has coefficient 1";
          break;
        }
      }
    }
    if (!fail.empty()) {
      ++sum.failures;
      if (sum.first_failure.empty())
        sum.first_failure = "trial " + std::to_string(t) + ": " + fail;
    }
  }
  return sum;
}

}  // namespace fourmove
