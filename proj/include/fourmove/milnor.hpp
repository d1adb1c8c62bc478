#pragma once

#include <cstddef>
#include <vector>

#include "fourmove/freegroup.hpp"
#include "fourmove/magnus.hpp"
#include "fourmove/underpass.hpp"

namespace fourmove {

/// Partial longitudes v_ij (prefix products of over-arcs with their signs)
/// and the longitude words lambda_i = v_{i r_i}, over the arc alphabet.
/// A component with no underpasses has an empty (identity) longitude.
struct LongitudeData {
  Alphabet arc_alphabet;
  std::vector<std::vector<Word>> partials;  // partials[i-1][j-1] = v_ij
  std::vector<Word> lambda;                 // lambda[i-1]
};

LongitudeData longitudes(const UnderpassCode& code);

/// Images of the level-q homomorphism eta_q : F(arcs) -> F(meridians).
/// eta_1 sends every arc of component i to a_i; each later level sends
/// arc x_{i,j+1} to the conjugate of a_i by the previous level's image of
/// the partial longitude v_ij. The base arc x_{i1} maps to a_i at every
/// level. Word images are exact; series images are their Magnus
/// Z2-expansions truncated at degree D.
struct EtaTable {
  int q = 1;
  // word_images[i-1][j-1]: image of arc x_ij over the meridian alphabet
  // (empty vector when the table was built in series mode, and vice versa)
  std::vector<std::vector<Word>> word_images;
  std::vector<std::vector<TruncatedSeries>> series_images;

  bool has_words() const { return !word_images.empty(); }
  bool has_series() const { return !series_images.empty(); }
};

/// Exact word-mode table; image lengths can grow exponentially in q, so a
/// letter budget guards the recursion (ResourceError when exceeded).
EtaTable eta_word(const UnderpassCode& code, int q,
                  std::size_t letter_budget = 1000000);

/// Series-mode table in m >= code.m() variables truncated at degree D;
/// polynomial cost in (q, total underpasses, ring size).
EtaTable eta_series(const UnderpassCode& code, int q, int m, int D);

/// True when w is the reduced form u^-1 a_k u of a conjugate of the k-th
/// meridian (the structural shape every eta image has).
bool is_meridian_conjugate(const Word& w, int k);

/// E([a_i, eta_q(lambda_i)]) computed entirely with series arithmetic.
TruncatedSeries commutator_series(const UnderpassCode& code, int i, int q, int D);

/// All components at once (one table build instead of m).
std::vector<TruncatedSeries> commutator_series_all(const UnderpassCode& code,
                                                   int q, int D);

/// E(eta_q(lambda_i)) and the same with the self-crossing correction
/// a_i^{-writhe} applied on the left; building block for mu_mod2.
TruncatedSeries longitude_series(const UnderpassCode& code, int i, int q, int D,
                                 bool writhe_corrected);

/// Diagram-level Milnor invariant mod 2: the coefficient of
/// X_{k1}...X_{kj} in E(a_i^{-w_i} eta_q(lambda_i)), computed at
/// D = max(j, 4). Requires j + 1 <= q; values for longer sequences are
/// not trusted at this nilpotency level. No indeterminacy handling: the
/// value is the diagram's, not the link's, unless all lower-order
/// invariants vanish.
int mu_mod2(const UnderpassCode& code, const std::vector<int>& seq, int i, int q);

}  // namespace fourmove
