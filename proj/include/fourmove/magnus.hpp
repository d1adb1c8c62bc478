#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourmove/freegroup.hpp"

namespace fourmove {

/// Non-commutative monomial X_{k1}...X_{kj}; empty = constant monomial.
/// Variable indices are 1-based.
struct Monomial {
  std::vector<int> vars;

  int degree() const { return static_cast<int>(vars.size()); }
  static Monomial constant() { return {}; }
  static Monomial of(std::vector<int> v) { return {std::move(v)}; }
  std::string str() const;  // "1" or "X1X2X2"

  bool operator==(const Monomial&) const = default;
};

/// Element of the ring of Z2 polynomials in m non-commutative variables,
/// truncated at total degree D.
///
/// Representation: one bit per monomial. Monomials of degree d are ranked
/// 0..m^d-1 in base-m digit order (which is also lexicographic order), and
/// the degree blocks are laid out consecutively in a packed bit vector.
/// Multiplying a rank-r1 degree-d1 monomial by the whole degree-d2 block
/// lands on the contiguous bit range starting at r1*m^d2, so multiplication
/// is a sequence of shifted word-wise XORs.
class TruncatedSeries {
 public:
  TruncatedSeries(int m, int D);  // zero series
  static TruncatedSeries one(int m, int D);
  static TruncatedSeries from_monomials(int m, int D, const std::vector<Monomial>& ms);

  int var_count() const { return m_; }
  int degree_bound() const { return D_; }

  bool is_zero() const;
  bool is_one() const;

  /// Coefficient of a monomial. Throws PreconditionError when the degree
  /// exceeds the truncation bound (the value there is not trusted).
  int coefficient(const Monomial& mono) const;
  void flip(const Monomial& mono);  // add the monomial (Z2)

  /// All monomials with coefficient 1, graded-lexicographically ordered.
  std::vector<Monomial> nonzero_monomials() const;

  bool operator==(const TruncatedSeries& o) const = default;

  // -- internal layout accessors used by the ring operations --
  std::size_t block_offset(int d) const { return off_[d]; }
  std::size_t block_size(int d) const { return pow_[d]; }
  const std::vector<std::uint64_t>& words() const { return bits_; }
  std::vector<std::uint64_t>& words() { return bits_; }
  std::size_t monomial_rank(const Monomial& mono) const;  // rank within its block
  bool block_empty(int d) const;

 private:
  int m_ = 0, D_ = 0;
  std::vector<std::size_t> pow_;  // pow_[d] = m^d
  std::vector<std::size_t> off_;  // off_[d] = sum of pow_[e], e < d; off_[D+1] = total bits
  std::vector<std::uint64_t> bits_;

  bool test(std::size_t bit) const;
  void flip_bit(std::size_t bit);
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse via the Neumann series 1 + u + ... + u^D with
/// u = a - 1 (exact in the truncated ring; char 2). Requires constant
/// coefficient 1.
TruncatedSeries inverse(const TruncatedSeries& a);

/// Copy of `a` truncated at a lower degree bound.
TruncatedSeries truncated(const TruncatedSeries& a, int new_D);

/// In-place s := E(a_i^exp) * s for a single meridian letter (exp = +-1).
/// E(a_i) = 1 + X_i; E(a_i^-1) = 1 + X_i + X_i^2 + ...
void left_mul_letter(TruncatedSeries& s, int var, int exp);

/// Magnus Z2-expansion of a word over the meridian alphabet: a_i -> 1 + X_i,
/// multiplicative over letters. Requires every meridian index <= m.
TruncatedSeries expand_word(const Word& w, int m, int D);

/// "1 + X1X2 + X2X1" in graded lexicographic order; "0" for the zero series.
std::string to_string(const TruncatedSeries& s);

}  // namespace fourmove
