#include "fourmove/milnor.hpp"

#include <cstdlib>
#include <utility>

#include "fourmove/errors.hpp"

namespace fourmove {

LongitudeData longitudes(const UnderpassCode& code) {
  Alphabet X = Alphabet::arcs(code.arc_counts());
  LongitudeData out{X, {}, {}};
  out.partials.resize(code.m());
  for (int i = 1; i <= code.m(); ++i) {
    Word v(X);
    for (const UnderpassEntry& e : code.entries(i)) {
      v.push_run(X.arc_gen(e.over.component, e.over.arc), to_int(e.sign));
      out.partials[i - 1].push_back(v);
    }
    out.lambda.push_back(v);
  }
  return out;
}

bool is_meridian_conjugate(const Word& w, int k) {
  if (w.alphabet().kind() != AlphabetKind::meridians) return false;
  auto ls = w.letters();
  if (ls.size() % 2 == 0) return false;
  std::size_t t = ls.size() / 2;
  if (ls[t].gen != w.alphabet().meridian_gen(k) || ls[t].exp != 1) return false;
  for (std::size_t s = 0; s < t; ++s)
    if (ls[s].gen != ls[ls.size() - 1 - s].gen || ls[s].exp != -ls[ls.size() - 1 - s].exp)
      return false;
  return true;
}

EtaTable eta_word(const UnderpassCode& code, int q, std::size_t letter_budget) {
  if (q < 1) throw PreconditionError("eta level q must be >= 1");
  Alphabet A = Alphabet::meridians(code.m());

  auto guard = [&](const Word& w) {
    if (w.letter_count() > letter_budget)
      throw ResourceError("eta_word image exceeds the letter budget of " +
                          std::to_string(letter_budget));
    return w;
  };

  std::vector<std::vector<Word>> cur(code.m());
  for (int i = 1; i <= code.m(); ++i)
    cur[i - 1].assign(code.arc_count(i), Word::generator(A, A.meridian_gen(i)));

  for (int level = 2; level <= q; ++level) {
    std::vector<std::vector<Word>> next(code.m());
    for (int i = 1; i <= code.m(); ++i) {
      Word ai = Word::generator(A, A.meridian_gen(i));
      next[i - 1].assign(code.arc_count(i), ai);
      Word prefix(A);  // eta_{level-1}(v_ij), folded incrementally
      const auto& list = code.entries(i);
      for (int j = 1; j <= static_cast<int>(list.size()); ++j) {
        const UnderpassEntry& e = list[j - 1];
        prefix.push_word(cur[e.over.component - 1][e.over.arc - 1], to_int(e.sign));
        guard(prefix);
        if (j < static_cast<int>(list.size()))
          next[i - 1][j] = guard(conjugate(ai, prefix));
      }
    }
    cur = std::move(next);
  }
  EtaTable out;
  out.q = q;
  out.word_images = std::move(cur);
  return out;
}

namespace {

// per-arc image series and their inverses at one level
struct SeriesTable {
  std::vector<std::vector<TruncatedSeries>> img, inv;
};

SeriesTable level_one(const UnderpassCode& code, int m, int D) {
  SeriesTable t;
  t.img.resize(code.m());
  t.inv.resize(code.m());
  for (int i = 1; i <= code.m(); ++i) {
    TruncatedSeries gi = TruncatedSeries::one(m, D);
    left_mul_letter(gi, i, 1);
    TruncatedSeries gi_inv = TruncatedSeries::one(m, D);
    left_mul_letter(gi_inv, i, -1);
    t.img[i - 1].assign(code.arc_count(i), gi);
    t.inv[i - 1].assign(code.arc_count(i), gi_inv);
  }
  return t;
}

// Walk component i's entries at level `cur`, folding the prefix pair
// (P, P^-1); when `next` is given, fill its images of arcs 2..r_i.
// Returns the full longitude pair (eta(lambda_i), its inverse).
std::pair<TruncatedSeries, TruncatedSeries> prefix_pass(
    const UnderpassCode& code, const SeriesTable& cur, int i, int m, int D,
    SeriesTable* next) {
  TruncatedSeries P = TruncatedSeries::one(m, D);
  TruncatedSeries Pinv = P;
  const auto& list = code.entries(i);
  for (int j = 1; j <= static_cast<int>(list.size()); ++j) {
    const UnderpassEntry& e = list[j - 1];
    const TruncatedSeries& u =
        (e.sign == Sign::positive ? cur.img : cur.inv)[e.over.component - 1][e.over.arc - 1];
    const TruncatedSeries& u_inv =
        (e.sign == Sign::positive ? cur.inv : cur.img)[e.over.component - 1][e.over.arc - 1];
    P = mul(P, u);
    Pinv = mul(u_inv, Pinv);
    if (next != nullptr && j < static_cast<int>(list.size())) {
      TruncatedSeries t = P;
      left_mul_letter(t, i, 1);  // (1 + X_i) P
      next->img[i - 1][j] = mul(Pinv, t);
      t = P;
      left_mul_letter(t, i, -1);  // E(a_i^-1) P
      next->inv[i - 1][j] = mul(Pinv, t);
    }
  }
  return {std::move(P), std::move(Pinv)};
}

// Build the level-q table; optionally collect per-component pairs
// (eta_q(lambda_i), inverse) by one extra prefix pass at level q.
SeriesTable build_series(const UnderpassCode& code, int q, int m, int D,
                         std::vector<std::pair<TruncatedSeries, TruncatedSeries>>* lambdas) {
  if (q < 1) throw PreconditionError("eta level q must be >= 1");
  if (m < code.m())
    throw PreconditionError("series variable count m must be >= the component count");
  SeriesTable cur = level_one(code, m, D);
  for (int level = 2; level <= q; ++level) {
    SeriesTable next = level_one(code, m, D);  // base arcs and arc 1 images
    for (int i = 1; i <= code.m(); ++i) prefix_pass(code, cur, i, m, D, &next);
    cur = std::move(next);
  }
  if (lambdas != nullptr) {
    lambdas->clear();
    for (int i = 1; i <= code.m(); ++i)
      lambdas->push_back(prefix_pass(code, cur, i, m, D, nullptr));
  }
  return cur;
}

}  // namespace

EtaTable eta_series(const UnderpassCode& code, int q, int m, int D) {
  SeriesTable t = build_series(code, q, m, D, nullptr);
  EtaTable out;
  out.q = q;
  out.series_images = std::move(t.img);
  return out;
}

std::vector<TruncatedSeries> commutator_series_all(const UnderpassCode& code, int q,
                                                   int D) {
  const int m = code.m();
  std::vector<std::pair<TruncatedSeries, TruncatedSeries>> lambdas;
  build_series(code, q, m, D, &lambdas);
  std::vector<TruncatedSeries> out;
  out.reserve(m);
  for (int i = 1; i <= m; ++i) {
    // E(a_i)^-1 E(lambda)^-1 E(a_i) E(lambda)
    TruncatedSeries t = lambdas[i - 1].first;
    left_mul_letter(t, i, 1);
    t = mul(lambdas[i - 1].second, t);
    left_mul_letter(t, i, -1);
    out.push_back(std::move(t));
  }
  return out;
}

TruncatedSeries commutator_series(const UnderpassCode& code, int i, int q, int D) {
  if (i < 1 || i > code.m()) throw PreconditionError("component index out of range");
  return commutator_series_all(code, q, D)[i - 1];
}

TruncatedSeries longitude_series(const UnderpassCode& code, int i, int q, int D,
                                 bool writhe_corrected) {
  if (i < 1 || i > code.m()) throw PreconditionError("component index out of range");
  std::vector<std::pair<TruncatedSeries, TruncatedSeries>> lambdas;
  build_series(code, q, code.m(), D, &lambdas);
  TruncatedSeries s = std::move(lambdas[i - 1].first);
  if (writhe_corrected) {
    int w = writhe(code, i);
    for (int t = 0; t < std::abs(w); ++t) left_mul_letter(s, i, w > 0 ? -1 : 1);
  }
  return s;
}

int mu_mod2(const UnderpassCode& code, const std::vector<int>& seq, int i, int q) {
  const int j = static_cast<int>(seq.size());
  if (j < 1) throw PreconditionError("mu_mod2 needs a non-empty sequence");
  if (j + 1 > q)
    throw PreconditionError("mu_mod2 needs j + 1 <= q (coefficients above the "
                            "nilpotency level are not trusted)");
  if (i < 1 || i > code.m()) throw PreconditionError("component index out of range");
  for (int k : seq)
    if (k < 1 || k > code.m())
      throw PreconditionError("sequence index out of range");
  const int D = std::max(j, 4);
  TruncatedSeries s = longitude_series(code, i, q, D, /*writhe_corrected=*/true);
  return s.coefficient(Monomial::of(seq));
}

}  // namespace fourmove
