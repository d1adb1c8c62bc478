#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fourmove {

enum class AlphabetKind { arcs, meridians };

/// Indexed alphabet of free-group generators.
///
/// Two flavours are used throughout: the meridian alphabet a1..am (one
/// generator per link component) and the arc alphabet x<i>_<j> (one
/// generator per arc of a diagram, with per-component arc counts).
/// Generators are addressed by a flat 0-based id.
class Alphabet {
 public:
  static Alphabet meridians(int m);
  static Alphabet arcs(std::vector<int> arc_counts);

  AlphabetKind kind() const { return kind_; }
  int size() const { return size_; }
  int component_count() const;

  // arc alphabets: 1-based (component, arc) <-> flat id
  int arc_count(int component) const;
  int arc_gen(int component, int arc) const;
  std::pair<int, int> arc_of(int gen) const;

  // meridian alphabets: 1-based meridian index <-> flat id
  int meridian_gen(int k) const;

  // component owning a generator (defined for both kinds)
  int component_of(int gen) const;

  std::string gen_name(int gen) const;

  bool operator==(const Alphabet& o) const = default;

 private:
  AlphabetKind kind_ = AlphabetKind::meridians;
  std::vector<int> arc_counts_;  // arcs only
  std::vector<int> offsets_;     // arcs only: flat id of (i,1)
  int size_ = 0;

  void check_gen(int gen) const;
};

// One run of a reduced word: `exp` copies of generator `gen` (exp != 0).
struct Run {
  int32_t gen;
  int32_t exp;
  bool operator==(const Run&) const = default;
};

// A reduced letter: exponent is +1 or -1.
struct Letter {
  int32_t gen;
  int32_t exp;
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word over an Alphabet. Immutable value type.
///
/// Letters are stored exponent-collapsed (runs); the observable contract
/// is the reduced +-1 letter sequence from letters().
class Word {
 public:
  explicit Word(Alphabet alphabet) : alpha_(std::move(alphabet)) {}
  static Word generator(const Alphabet& a, int gen, int exp = 1);
  static Word from_letters(const Alphabet& a, const std::vector<Letter>& ls);

  const Alphabet& alphabet() const { return alpha_; }
  bool is_identity() const { return runs_.empty(); }
  const std::vector<Run>& runs() const { return runs_; }
  std::size_t letter_count() const;
  std::vector<Letter> letters() const;

  bool operator==(const Word& o) const = default;

  // internal: append with cascading free reduction
  void push_run(int gen, int exp);
  void push_word(const Word& w, int exp = 1);

 private:
  Alphabet alpha_;
  std::vector<Run> runs_;
};

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
Word conjugate(const Word& a, const Word& g);  // g^-1 a g
Word power(const Word& a, int n);
Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b

int exponent_sum(const Word& w, int gen);
int component_exponent_sum(const Word& w, int component);

/// Letterwise substitution gen -> images.at(gen); inverse letters map to
/// inverse images. Throws PreconditionError on a missing image.
Word apply_hom(const Word& w, const Alphabet& target,
               const std::map<int, Word>& images);

/// (a w b w^-1)^2 (w b w^-1 a)^-2 for signed generators a, b.
Word make_s_relator(Letter a, Letter b, const Word& w);

/// Random left-normed iterated commutator [[..[g1,g2],..],gq] of weight q;
/// guaranteed member of the qth lower-central-series term.
Word sample_gamma_q(const Alphabet& a, int q, std::mt19937_64& rng);

// textual word syntax: "a1 a2^-1" / "x1_2^-1 x2_1"; "1" is the identity
Word parse_word(const Alphabet& a, const std::string& text);
std::string to_string(const Word& w);

}  // namespace fourmove
