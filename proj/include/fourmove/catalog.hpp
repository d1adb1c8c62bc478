#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourmove/obstruction.hpp"
#include "fourmove/underpass.hpp"

namespace fourmove {

/// A built-in example link with the outcome its checks are pinned to.
struct CatalogEntry {
  std::string name;
  UnderpassCode code;
  std::string note;
  int suggested_q = 5;
  Verdict expected_verdict = Verdict::no_obstruction_found;
  std::optional<ConditionId> expected_condition;
  std::optional<std::string> expected_witness;  // monomial string
};

/// Names with parameters use the forms trivial(m) and milnor_chain(m).
std::vector<std::string> catalog_list();
CatalogEntry catalog_get(const std::string& name);

/// The m-component chain whose last component's longitude spells the
/// nested commutator [x1_1, [x2_1, [... [x_{m-2}_1, x_{m-1}_1] ...]]]:
/// components 1..m-1 never pass under, all pairwise linking numbers
/// vanish, and the only surviving invariant lives in degree m.
///
/// This is a welded-code analogue of the classical chain of rings with a
/// Borromean-style clasp pattern (m = 3 gives the Borromean rings' data);
/// it carries exactly the longitude every computation here consumes, with
/// no planar diagram bookkeeping.
CatalogEntry milnor_chain(int m);

}  // namespace fourmove
