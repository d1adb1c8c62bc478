#include "fourmove/freegroup.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "fourmove/errors.hpp"

namespace fourmove {

Alphabet Alphabet::meridians(int m) {
  if (m < 1) throw PreconditionError("meridian alphabet needs m >= 1");
  Alphabet a;
  a.kind_ = AlphabetKind::meridians;
  a.size_ = m;
  return a;
}

Alphabet Alphabet::arcs(std::vector<int> arc_counts) {
  if (arc_counts.empty()) throw PreconditionError("arc alphabet needs at least one component");
  Alphabet a;
  a.kind_ = AlphabetKind::arcs;
  a.offsets_.reserve(arc_counts.size());
  int total = 0;
  for (int c : arc_counts) {
    if (c < 1) throw PreconditionError("arc alphabet needs >= 1 arc per component");
    a.offsets_.push_back(total);
    total += c;
  }
  a.arc_counts_ = std::move(arc_counts);
  a.size_ = total;
  return a;
}

int Alphabet::component_count() const {
  return kind_ == AlphabetKind::meridians ? size_ : static_cast<int>(arc_counts_.size());
}

int Alphabet::arc_count(int component) const {
  if (kind_ != AlphabetKind::arcs) throw PreconditionError("not an arc alphabet");
  if (component < 1 || component > component_count())
    throw PreconditionError("component index out of range");
  return arc_counts_[component - 1];
}

int Alphabet::arc_gen(int component, int arc) const {
  if (arc < 1 || arc > arc_count(component))
    throw PreconditionError("arc index out of range");
  return offsets_[component - 1] + arc - 1;
}

std::pair<int, int> Alphabet::arc_of(int gen) const {
  if (kind_ != AlphabetKind::arcs) throw PreconditionError("not an arc alphabet");
  check_gen(gen);
  int comp = component_of(gen);
  return {comp, gen - offsets_[comp - 1] + 1};
}

int Alphabet::meridian_gen(int k) const {
  if (kind_ != AlphabetKind::meridians) throw PreconditionError("not a meridian alphabet");
  if (k < 1 || k > size_) throw PreconditionError("meridian index out of range");
  return k - 1;
}

int Alphabet::component_of(int gen) const {
  check_gen(gen);
  if (kind_ == AlphabetKind::meridians) return gen + 1;
  int comp = 1;
  while (comp < component_count() && offsets_[comp] <= gen) ++comp;
  return comp;
}

std::string Alphabet::gen_name(int gen) const {
  check_gen(gen);
  if (kind_ == AlphabetKind::meridians) return "a" + std::to_string(gen + 1);
  auto [i, j] = arc_of(gen);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

void Alphabet::check_gen(int gen) const {
  if (gen < 0 || gen >= size_) throw PreconditionError("generator id out of range");
}

Word Word::generator(const Alphabet& a, int gen, int exp) {
  Word w(a);
  w.push_run(gen, exp);
  return w;
}

Word Word::from_letters(const Alphabet& a, const std::vector<Letter>& ls) {
  Word w(a);
  for (const Letter& l : ls) w.push_run(l.gen, l.exp);
  return w;
}

void Word::push_run(int gen, int exp) {
  if (exp == 0) return;
  if (gen < 0 || gen >= alpha_.size()) throw PreconditionError("generator id out of range");
  if (!runs_.empty() && runs_.back().gen == gen) {
    runs_.back().exp += exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({gen, exp});
}

void Word::push_word(const Word& w, int exp) {
  if (!(alpha_ == w.alpha_)) throw PreconditionError("alphabet mismatch");
  if (exp >= 0) {
    for (int t = 0; t < exp; ++t)
      for (const Run& r : w.runs_) push_run(r.gen, r.exp);
  } else {
    for (int t = 0; t < -exp; ++t)
      for (auto it = w.runs_.rbegin(); it != w.runs_.rend(); ++it)
        push_run(it->gen, -it->exp);
  }
}

std::size_t Word::letter_count() const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += static_cast<std::size_t>(std::abs(r.exp));
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(letter_count());
  for (const Run& r : runs_) {
    int s = r.exp > 0 ? 1 : -1;
    for (int t = 0; t < std::abs(r.exp); ++t) out.push_back({r.gen, s});
  }
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word r = a;
  r.push_word(b);
  return r;
}

Word invert(const Word& a) {
  Word r(a.alphabet());
  r.push_word(a, -1);
  return r;
}

Word conjugate(const Word& a, const Word& g) {
  Word r = invert(g);
  r.push_word(a);
  r.push_word(g);
  return r;
}

Word power(const Word& a, int n) {
  Word r(a.alphabet());
  r.push_word(a, n);
  return r;
}

Word commutator(const Word& a, const Word& b) {
  Word r = invert(a);
  r.push_word(b, -1);
  r.push_word(a);
  r.push_word(b);
  return r;
}

int exponent_sum(const Word& w, int gen) {
  int s = 0;
  for (const Run& r : w.runs())
    if (r.gen == gen) s += r.exp;
  return s;
}

int component_exponent_sum(const Word& w, int component) {
  int s = 0;
  for (const Run& r : w.runs())
    if (w.alphabet().component_of(r.gen) == component) s += r.exp;
  return s;
}

Word apply_hom(const Word& w, const Alphabet& target,
               const std::map<int, Word>& images) {
  Word out(target);
  for (const Run& r : w.runs()) {
    auto it = images.find(r.gen);
    if (it == images.end())
      throw PreconditionError("no image for generator " + w.alphabet().gen_name(r.gen));
    if (!(it->second.alphabet() == target))
      throw PreconditionError("image alphabet mismatch for generator " +
                              w.alphabet().gen_name(r.gen));
    out.push_word(it->second, r.exp);
  }
  return out;
}

Word make_s_relator(Letter a, Letter b, const Word& w) {
  const Alphabet& al = w.alphabet();
  Word awbw(al);  // a w b w^-1
  awbw.push_run(a.gen, a.exp);
  awbw.push_word(w);
  awbw.push_run(b.gen, b.exp);
  awbw.push_word(w, -1);
  Word wbwa(al);  // w b w^-1 a
  wbwa.push_word(w);
  wbwa.push_run(b.gen, b.exp);
  wbwa.push_word(w, -1);
  wbwa.push_run(a.gen, a.exp);
  Word r(al);
  r.push_word(awbw, 2);
  r.push_word(wbwa, -2);
  return r;
}

Word sample_gamma_q(const Alphabet& a, int q, std::mt19937_64& rng) {
  if (q < 1) throw PreconditionError("q must be >= 1");
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  Word w = Word::generator(a, pick(rng));
  for (int t = 2; t <= q; ++t) w = commutator(w, Word::generator(a, pick(rng)));
  return w;
}

namespace {

int parse_int(const std::string& s, std::size_t& pos, const std::string& tok) {
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
  std::size_t start = pos;
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000) throw ParseError("number too large in word token '" + tok + "'");
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number in word token '" + tok + "'");
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

Word parse_word(const Alphabet& a, const std::string& text) {
  Word out(a);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t pos = 0;
    int gen;
    if (tok[0] == 'a' && a.kind() == AlphabetKind::meridians) {
      pos = 1;
      int k = parse_int(tok, pos, tok);
      if (k < 1 || k > a.size())
        throw ParseError("meridian a" + std::to_string(k) + " out of range in '" + tok + "'");
      gen = a.meridian_gen(k);
    } else if (tok[0] == 'x' && a.kind() == AlphabetKind::arcs) {
      pos = 1;
      int i = parse_int(tok, pos, tok);
      if (pos >= tok.size() || tok[pos] != '_')
        throw ParseError("expected x<i>_<j> in word token '" + tok + "'");
      ++pos;
      int j = parse_int(tok, pos, tok);
      if (i < 1 || i > a.component_count() || j < 1 || j > a.arc_count(i))
        throw ParseError("arc x" + std::to_string(i) + "_" + std::to_string(j) +
                         " out of range in '" + tok + "'");
      gen = a.arc_gen(i, j);
    } else {
      throw ParseError("unrecognized word token '" + tok + "'");
    }
    int exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^') throw ParseError("unrecognized word token '" + tok + "'");
      ++pos;
      exp = parse_int(tok, pos, tok);
      if (pos != tok.size()) throw ParseError("unrecognized word token '" + tok + "'");
      if (exp == 0) continue;
    }
    out.push_run(gen, exp);
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet().gen_name(r.gen);
    if (r.exp != 1) out += "^" + std::to_string(r.exp);
  }
  return out;
}

}  // namespace fourmove
