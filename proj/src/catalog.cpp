#include "fourmove/catalog.hpp"

#include <cctype>

#include "fourmove/errors.hpp"

namespace fourmove {

namespace {

constexpr int kMaxChain = 16;  // letter count grows as 3*2^(m-2) - 2

CatalogEntry trivial(int m) {
  if (m < 1) throw PreconditionError("trivial(m) needs m >= 1");
  if (m > 64) throw ValidationError("trivial(m) capped at m = 64");
  CatalogEntry e{
      "trivial(" + std::to_string(m) + ")",
      UnderpassCode("trivial(" + std::to_string(m) + ")",
                    std::vector<std::vector<UnderpassEntry>>(m)),
      std::to_string(m) + "-component unlink; every longitude is empty",
      5,
      Verdict::no_obstruction_found,
      std::nullopt,
      std::nullopt};
  return e;
}

CatalogEntry hopf() {
  return {"hopf",
          UnderpassCode("hopf", {{{{2, 1}, Sign::positive}},
                                 {{{1, 1}, Sign::positive}}}),
          "positive Hopf link; linking number 1 survives mod 2",
          5,
          Verdict::obstructed,
          ConditionId::V,
          "X1X2"};
}

CatalogEntry trefoil() {
  return {"trefoil",
          import_gauss("O1+ U2+ O3+ U1+ O2+ U3+", "trefoil"),
          "right-handed trefoil from its standard 3-crossing diagram",
          5,
          Verdict::no_obstruction_found,
          std::nullopt,
          std::nullopt};
}

CatalogEntry figure_eight() {
  return {"figure_eight",
          import_gauss("O1+ U2+ O3- U4- O2+ U1+ O4- U3-", "figure_eight"),
          "figure-eight knot from its standard 4-crossing diagram",
          5,
          Verdict::no_obstruction_found,
          std::nullopt,
          std::nullopt};
}

CatalogEntry figure4_welded() {
  return {"figure4_welded",
          UnderpassCode("figure4_welded",
                        {{{{2, 1}, Sign::negative}, {{2, 1}, Sign::positive}},
                         {{{1, 1}, Sign::positive}, {{1, 2}, Sign::negative}}}),
          "Whitehead-style 2-component welded link; both linking numbers "
          "vanish but a degree-3 coefficient asymmetry remains",
          5,
          Verdict::obstructed,
          ConditionId::II,
          "X1X2X2"};
}

}  // namespace

CatalogEntry milnor_chain(int m) {
  if (m < 3) throw PreconditionError("milnor_chain(m) needs m >= 3");
  if (m > kMaxChain)
    throw ValidationError("milnor_chain(m) capped at m = " + std::to_string(kMaxChain));

  // letters of [g_1, [g_2, [... [g_{m-2}, g_{m-1}] ...]]], [a,b] = a^-1 b^-1 a b;
  // nesting from the right keeps every permuted lower-order invariant zero
  std::vector<std::pair<int, int>> word{{m - 1, 1}};
  for (int k = m - 2; k >= 1; --k) {
    std::vector<std::pair<int, int>> next;
    next.reserve(2 * word.size() + 2);
    next.push_back({k, -1});
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      next.push_back({it->first, -it->second});
    next.push_back({k, 1});
    next.insert(next.end(), word.begin(), word.end());
    word = std::move(next);
  }

  std::vector<std::vector<UnderpassEntry>> comps(m);
  for (auto [gen, exp] : word)
    comps[m - 1].push_back({{gen, 1}, exp > 0 ? Sign::positive : Sign::negative});

  std::string name = "milnor_chain(" + std::to_string(m) + ")";
  std::string witness = "X" + std::to_string(m);
  for (int k = 1; k < m; ++k) witness += "X" + std::to_string(k);
  return {name,
          UnderpassCode(name, std::move(comps)),
          "chain with Borromean-style clasps: all pairwise linking numbers "
          "vanish; the first surviving invariant sits in degree " +
              std::to_string(m),
          m + 2,
          Verdict::obstructed,
          ConditionId::V,
          witness};
}

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (int m = 1; m <= 4; ++m) names.push_back("trivial(" + std::to_string(m) + ")");
  names.push_back("hopf");
  names.push_back("trefoil");
  names.push_back("figure_eight");
  names.push_back("figure4_welded");
  for (int m = 3; m <= 6; ++m) names.push_back("milnor_chain(" + std::to_string(m) + ")");
  return names;
}

namespace {

std::optional<int> parse_parametric(const std::string& name, const std::string& prefix) {
  if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '(' || name.back() != ')')
    return std::nullopt;
  std::string digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (digits.empty()) return std::nullopt;
  long v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
    if (v > 1000) throw ValidationError("catalog parameter too large in '" + name + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
  if (auto m = parse_parametric(name, "trivial")) return trivial(*m);
  if (auto m = parse_parametric(name, "milnor_chain")) return milnor_chain(*m);
  if (name == "hopf") return hopf();
  if (name == "trefoil") return trefoil();
  if (name == "figure_eight") return figure_eight();
  if (name == "figure4_welded") return figure4_welded();
  throw ValidationError("unknown catalog entry '" + name + "'");
}

}  // namespace fourmove
