#include "fourmove/underpass.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fourmove/errors.hpp"

namespace fourmove {

using ordered_json = nlohmann::ordered_json;

Sign sign_from_int(int v) {
  if (v == 1) return Sign::positive;
  if (v == -1) return Sign::negative;
  throw ValidationError("sign must be 1 or -1, got " + std::to_string(v));
}

std::string ArcRef::str() const {
  return "(" + std::to_string(component) + ":" + std::to_string(arc) + ")";
}

UnderpassCode::UnderpassCode(std::string name,
                             std::vector<std::vector<UnderpassEntry>> components)
    : name_(std::move(name)), components_(std::move(components)) {
  validate();
}

void UnderpassCode::validate() const {
  if (components_.empty())
    throw ValidationError("a link needs at least one component");
  for (int i = 1; i <= m(); ++i) {
    const auto& list = components_[i - 1];
    for (std::size_t p = 0; p < list.size(); ++p) {
      const ArcRef& ov = list[p].over;
      std::string where = "component " + std::to_string(i) + ", entry " +
                          std::to_string(p + 1) + ": arc reference " + ov.str();
      if (ov.component < 1 || ov.component > m())
        throw ValidationError(where + " out of range (link has " +
                              std::to_string(m()) + " components)");
      int arcs = arc_count(ov.component);
      if (ov.arc < 1 || ov.arc > arcs)
        throw ValidationError(where + " out of range (component " +
                              std::to_string(ov.component) + " has " +
                              std::to_string(arcs) + " arcs)");
    }
  }
}

int UnderpassCode::r(int i) const {
  if (i < 1 || i > m()) throw PreconditionError("component index out of range");
  return static_cast<int>(components_[i - 1].size());
}

int UnderpassCode::arc_count(int i) const { return std::max(r(i), 1); }

const std::vector<UnderpassEntry>& UnderpassCode::entries(int i) const {
  if (i < 1 || i > m()) throw PreconditionError("component index out of range");
  return components_[i - 1];
}

std::vector<int> UnderpassCode::arc_counts() const {
  std::vector<int> out(m());
  for (int i = 1; i <= m(); ++i) out[i - 1] = arc_count(i);
  return out;
}

UnderpassCode parse_link_file(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed link document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array())
    throw ParseError("link document must be an object with a \"components\" array");
  std::string name = doc.value("name", std::string{});

  std::vector<std::vector<UnderpassEntry>> comps;
  int ci = 0;
  for (const auto& comp : doc["components"]) {
    ++ci;
    if (!comp.is_array())
      throw ParseError("component " + std::to_string(ci) + " must be an array");
    std::vector<UnderpassEntry> list;
    int ei = 0;
    for (const auto& ent : comp) {
      ++ei;
      std::string where =
          "component " + std::to_string(ci) + ", entry " + std::to_string(ei);
      if (!ent.is_object() || !ent.contains("over") || !ent.contains("sign"))
        throw ParseError(where + ": entry needs \"over\" and \"sign\"");
      const auto& over = ent["over"];
      if (!over.is_array() || over.size() != 2 || !over[0].is_number_integer() ||
          !over[1].is_number_integer())
        throw ParseError(where + ": \"over\" must be [component, arc]");
      if (!ent["sign"].is_number_integer())
        throw ParseError(where + ": \"sign\" must be an integer");
      int sv = ent["sign"].get<int>();
      if (sv != 1 && sv != -1)
        throw ValidationError(where + ": sign must be 1 or -1, got " + std::to_string(sv));
      list.push_back({{over[0].get<int>(), over[1].get<int>()}, sign_from_int(sv)});
    }
    comps.push_back(std::move(list));
  }
  if (doc.contains("m")) {
    if (!doc["m"].is_number_integer() ||
        doc["m"].get<int>() != static_cast<int>(comps.size()))
      throw ValidationError("\"m\" does not match the number of components (" +
                            std::to_string(comps.size()) + ")");
  }
  return UnderpassCode(std::move(name), std::move(comps));
}

std::string serialize_link(const UnderpassCode& code) {
  ordered_json doc;
  doc["name"] = code.name();
  ordered_json comps = ordered_json::array();
  for (int i = 1; i <= code.m(); ++i) {
    ordered_json list = ordered_json::array();
    for (const UnderpassEntry& e : code.entries(i)) {
      ordered_json ent;
      ent["over"] = {e.over.component, e.over.arc};
      ent["sign"] = to_int(e.sign);
      list.push_back(std::move(ent));
    }
    comps.push_back(std::move(list));
  }
  doc["components"] = std::move(comps);
  return doc.dump();
}

namespace {

struct GaussEvent {
  long label;
  bool over;
  Sign sign;
};

std::vector<std::string> split_lines(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.back() == '\n') t.pop_back();
  std::vector<std::string> lines;
  std::string cur;
  for (char c : t) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

GaussEvent parse_gauss_token(const std::string& tok, int line_no) {
  std::string where = "line " + std::to_string(line_no) + ": token '" + tok + "'";
  if (tok.size() < 3) throw ParseError(where + " is not O<label><sign>/U<label><sign>");
  char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  if (kind != 'O' && kind != 'U')
    throw ParseError(where + " must start with O or U");
  char sc = tok.back();
  if (sc != '+' && sc != '-') throw ParseError(where + " must end with + or -");
  std::string digits = tok.substr(1, tok.size() - 2);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(where + " has a malformed crossing label");
  return {std::stol(digits), kind == 'O', sc == '+' ? Sign::positive : Sign::negative};
}

}  // namespace

UnderpassCode import_gauss(const std::string& text, std::string name) {
  std::vector<std::vector<GaussEvent>> walks;
  int line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    std::vector<GaussEvent> walk;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) walk.push_back(parse_gauss_token(tok, line_no));
    walks.push_back(std::move(walk));
  }

  // match over/under events of each crossing label
  struct Slot {
    int comp = 0, pos = 0;
    Sign sign = Sign::positive;
    bool seen = false;
  };
  std::map<long, Slot> overs, unders;
  for (int c = 0; c < static_cast<int>(walks.size()); ++c) {
    for (int p = 0; p < static_cast<int>(walks[c].size()); ++p) {
      const GaussEvent& ev = walks[c][p];
      Slot& slot = (ev.over ? overs : unders)[ev.label];
      if (slot.seen)
        throw ValidationError("crossing " + std::to_string(ev.label) + " has two " +
                              (ev.over ? "over" : "under") + " events");
      slot = {c, p, ev.sign, true};
    }
  }
  for (const auto& [label, slot] : overs) {
    auto it = unders.find(label);
    if (it == unders.end())
      throw ValidationError("crossing " + std::to_string(label) + " has no under event");
    if (it->second.sign != slot.sign)
      throw ValidationError("crossing " + std::to_string(label) +
                            " has mismatched signs on its two events");
  }
  for (const auto& [label, slot] : unders)
    if (!overs.count(label))
      throw ValidationError("crossing " + std::to_string(label) + " has no over event");

  // arc of each position: 1 + (under events strictly before), wrapping to 1
  // after the last under event
  auto arc_at = [&](int comp, int pos) {
    int r = 0, before = 0;
    for (int p = 0; p < static_cast<int>(walks[comp].size()); ++p) {
      if (!walks[comp][p].over) {
        ++r;
        if (p < pos) ++before;
      }
    }
    if (r == 0) return 1;
    return before % r + 1;
  };

  std::vector<std::vector<UnderpassEntry>> comps(walks.size());
  for (int c = 0; c < static_cast<int>(walks.size()); ++c) {
    for (int p = 0; p < static_cast<int>(walks[c].size()); ++p) {
      const GaussEvent& ev = walks[c][p];
      if (ev.over) continue;
      const Slot& os = overs[ev.label];
      comps[c].push_back({{os.comp + 1, arc_at(os.comp, os.pos)}, ev.sign});
    }
  }
  return UnderpassCode(std::move(name), std::move(comps));
}

int linking_number(const UnderpassCode& code, int i, int j) {
  if (i < 1 || i > code.m() || j < 1 || j > code.m())
    throw PreconditionError("component index out of range");
  if (i == j) throw PreconditionError("linking number needs i != j; use writhe");
  int s = 0;
  for (const UnderpassEntry& e : code.entries(j))
    if (e.over.component == i) s += to_int(e.sign);
  return s;
}

int writhe(const UnderpassCode& code, int i) {
  if (i < 1 || i > code.m()) throw PreconditionError("component index out of range");
  int s = 0;
  for (const UnderpassEntry& e : code.entries(i))
    if (e.over.component == i) s += to_int(e.sign);
  return s;
}

std::vector<std::vector<int>> linking_matrix(const UnderpassCode& code) {
  int m = code.m();
  std::vector<std::vector<int>> lk(m, std::vector<int>(m, 0));
  for (int j = 1; j <= m; ++j)
    for (const UnderpassEntry& e : code.entries(j))
      lk[e.over.component - 1][j - 1] += to_int(e.sign);
  return lk;
}

}  // namespace fourmove
