#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fourmove {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
Sign sign_from_int(int v);  // throws ValidationError unless v is +1 or -1

/// 1-based reference to arc `arc` of component `component`.
struct ArcRef {
  int component = 0;
  int arc = 0;
  bool operator==(const ArcRef&) const = default;
  std::string str() const;  // "(2:1)"
};

/// One underpass event: which arc passes over, and the crossing sign.
struct UnderpassEntry {
  ArcRef over;
  Sign sign = Sign::positive;
  bool operator==(const UnderpassEntry&) const = default;
};

/// A welded link presented per component as the cyclic list of its
/// underpass events, in orientation order starting after the base arc.
///
/// Component i with r_i underpasses has max(r_i, 1) arcs; a component
/// that never passes under keeps a single arc and contributes an empty
/// longitude word. Any such code is realizable as a welded diagram, so
/// no planarity condition is imposed.
class UnderpassCode {
 public:
  UnderpassCode(std::string name, std::vector<std::vector<UnderpassEntry>> components);

  const std::string& name() const { return name_; }
  int m() const { return static_cast<int>(components_.size()); }
  int r(int i) const;          // underpass count of component i (1-based)
  int arc_count(int i) const;  // max(r_i, 1)
  const std::vector<UnderpassEntry>& entries(int i) const;
  const std::vector<std::vector<UnderpassEntry>>& components() const { return components_; }

  std::vector<int> arc_counts() const;

  bool operator==(const UnderpassCode& o) const {
    return components_ == o.components_;  // names are labels, not identity
  }

 private:
  std::string name_;
  std::vector<std::vector<UnderpassEntry>> components_;

  void validate() const;  // throws ValidationError naming the offender
};

/// Parse the JSON link document
///   { "name": string, "components": [ [ { "over": [k, l], "sign": 1|-1 }, ... ], ... ] }
/// Throws ParseError on malformed documents and ValidationError on
/// semantic violations, naming the offending component/entry.
UnderpassCode parse_link_file(const std::string& text);

/// Serialize in the exact key order of the format above.
std::string serialize_link(const UnderpassCode& code);

/// Import a signed Gauss code, one line per component; events are
/// whitespace-separated tokens O<label><sign> / U<label><sign>, e.g.
/// "O1+ U2+ O3+ U1+ O2+ U3+". An empty line is a component with no
/// crossings. Arcs are numbered from each component's starting point,
/// incrementing after every under event.
UnderpassCode import_gauss(const std::string& text, std::string name = "gauss");

/// Sum of signs over entries of component j whose over-arc lies on
/// component i (the i-over-j linking number; asymmetric for welded links).
int linking_number(const UnderpassCode& code, int i, int j);

/// Sum of signs of component i's self-underpasses.
int writhe(const UnderpassCode& code, int i);

/// m x m matrix: entry (i,j) = linking_number(i,j) off the diagonal,
/// writhe(i) on it.
std::vector<std::vector<int>> linking_matrix(const UnderpassCode& code);

}  // namespace fourmove
