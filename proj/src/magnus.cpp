#include "fourmove/magnus.hpp"

#include <algorithm>

#include "fourmove/errors.hpp"

namespace fourmove {

namespace {

constexpr std::size_t kMaxTotalBits = std::size_t{1} << 31;  // 256 MiB of coefficients

// dst[dst_off .. dst_off+nbits) ^= src[src_off .. src_off+nbits), word-wise.
// Ranges may belong to the same buffer but must not overlap.
void xor_range(std::uint64_t* dst, std::size_t dst_off, const std::uint64_t* src,
               std::size_t src_off, std::size_t nbits) {
  while (nbits > 0) {
    std::size_t dw = dst_off >> 6, db = dst_off & 63;
    std::size_t take = std::min<std::size_t>(nbits, 64 - db);
    // gather `take` bits from src starting at src_off
    std::size_t sw = src_off >> 6, sb = src_off & 63;
    std::uint64_t chunk = src[sw] >> sb;
    if (sb != 0 && sb + take > 64) chunk |= src[sw + 1] << (64 - sb);
    if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
    dst[dw] ^= chunk << db;
    dst_off += take;
    src_off += take;
    nbits -= take;
  }
}

}  // namespace

std::string Monomial::str() const {
  if (vars.empty()) return "1";
  std::string s;
  for (int v : vars) s += "X" + std::to_string(v);
  return s;
}

TruncatedSeries::TruncatedSeries(int m, int D) : m_(m), D_(D) {
  if (m < 1) throw PreconditionError("series needs m >= 1 variables");
  if (D < 1) throw PreconditionError("series needs degree bound D >= 1");
  pow_.resize(D + 1);
  off_.resize(D + 2);
  pow_[0] = 1;
  off_[0] = 0;
  for (int d = 0; d <= D; ++d) {
    if (d > 0) {
      if (pow_[d - 1] > kMaxTotalBits / static_cast<std::size_t>(m))
        throw ResourceError("truncated ring too large (m^D overflows the bit budget)");
      pow_[d] = pow_[d - 1] * static_cast<std::size_t>(m);
    }
    if (off_[d] > kMaxTotalBits - pow_[d])
      throw ResourceError("truncated ring too large for the bit budget");
    off_[d + 1] = off_[d] + pow_[d];
  }
  bits_.assign((off_[D + 1] + 63) / 64, 0);
}

TruncatedSeries TruncatedSeries::one(int m, int D) {
  TruncatedSeries s(m, D);
  s.bits_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_monomials(int m, int D,
                                                const std::vector<Monomial>& ms) {
  TruncatedSeries s(m, D);
  for (const Monomial& mo : ms) s.flip(mo);
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool TruncatedSeries::is_one() const {
  if (bits_[0] != 1) return false;
  return std::all_of(bits_.begin() + 1, bits_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool TruncatedSeries::test(std::size_t bit) const {
  return (bits_[bit >> 6] >> (bit & 63)) & 1;
}

void TruncatedSeries::flip_bit(std::size_t bit) { bits_[bit >> 6] ^= std::uint64_t{1} << (bit & 63); }

std::size_t TruncatedSeries::monomial_rank(const Monomial& mono) const {
  std::size_t r = 0;
  for (int v : mono.vars) {
    if (v < 1 || v > m_)
      throw PreconditionError("monomial variable X" + std::to_string(v) + " out of range");
    r = r * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v - 1);
  }
  return r;
}

int TruncatedSeries::coefficient(const Monomial& mono) const {
  if (mono.degree() > D_)
    throw PreconditionError("coefficient of degree " + std::to_string(mono.degree()) +
                            " requested beyond truncation bound " + std::to_string(D_));
  return test(off_[mono.degree()] + monomial_rank(mono)) ? 1 : 0;
}

void TruncatedSeries::flip(const Monomial& mono) {
  if (mono.degree() > D_)
    throw PreconditionError("monomial degree exceeds truncation bound");
  flip_bit(off_[mono.degree()] + monomial_rank(mono));
}

bool TruncatedSeries::block_empty(int d) const {
  std::size_t lo = off_[d], hi = off_[d + 1];
  std::size_t w = lo >> 6;
  while (lo < hi) {
    std::size_t take = std::min<std::size_t>(hi - lo, 64 - (lo & 63));
    std::uint64_t chunk = bits_[w] >> (lo & 63);
    if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
    if (chunk != 0) return false;
    lo += take;
    ++w;
  }
  return true;
}

std::vector<Monomial> TruncatedSeries::nonzero_monomials() const {
  std::vector<Monomial> out;
  for (int d = 0; d <= D_; ++d) {
    for (std::size_t r = 0; r < pow_[d]; ++r) {
      if (!test(off_[d] + r)) continue;
      Monomial mo;
      mo.vars.resize(d);
      std::size_t x = r;
      for (int t = d - 1; t >= 0; --t) {
        mo.vars[t] = static_cast<int>(x % m_) + 1;
        x /= m_;
      }
      out.push_back(std::move(mo));
    }
  }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var_count() != b.var_count() || a.degree_bound() != b.degree_bound())
    throw PreconditionError("series shape mismatch in mul");
  const int D = a.degree_bound();
  TruncatedSeries r(a.var_count(), D);

  std::vector<bool> b_empty(D + 1);
  for (int d = 0; d <= D; ++d) b_empty[d] = b.block_empty(d);

  std::vector<std::size_t> ranks;
  const std::uint64_t* aw = a.words().data();
  const std::uint64_t* bw = b.words().data();
  std::uint64_t* rw = r.words().data();
  for (int d1 = 0; d1 <= D; ++d1) {
    ranks.clear();
    std::size_t lo = a.block_offset(d1), hi = lo + a.block_size(d1);
    for (std::size_t bit = lo; bit < hi;) {
      std::uint64_t chunk = aw[bit >> 6] >> (bit & 63);
      std::size_t take = std::min<std::size_t>(hi - bit, 64 - (bit & 63));
      if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
      while (chunk != 0) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(chunk));
        ranks.push_back(bit + tz - lo);
        chunk &= chunk - 1;
      }
      bit += take;
    }
    if (ranks.empty()) continue;
    for (int d2 = 0; d2 + d1 <= D; ++d2) {
      if (b_empty[d2]) continue;
      std::size_t blk = b.block_size(d2);
      std::size_t dst_base = r.block_offset(d1 + d2);
      std::size_t src = b.block_offset(d2);
      for (std::size_t r1 : ranks)
        xor_range(rw, dst_base + r1 * blk, bw, src, blk);
    }
  }
  return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  Monomial c = Monomial::constant();
  if (a.coefficient(c) != 1)
    throw PreconditionError("series is not a unit (constant term is 0)");
  TruncatedSeries u = a;
  u.flip(c);  // u = a - 1
  const int D = a.degree_bound();
  TruncatedSeries r = TruncatedSeries::one(a.var_count(), D);
  for (int t = 0; t < D; ++t) {  // Horner: r <- u*r + 1
    r = mul(u, r);
    r.flip(c);
  }
  return r;
}

TruncatedSeries truncated(const TruncatedSeries& a, int new_D) {
  if (new_D > a.degree_bound())
    throw PreconditionError("cannot extend a series to a larger degree bound");
  TruncatedSeries r(a.var_count(), new_D);
  xor_range(r.words().data(), 0, a.words().data(), 0, r.block_offset(new_D + 1));
  return r;
}

void left_mul_letter(TruncatedSeries& s, int var, int exp) {
  const int D = s.degree_bound();
  const int m = s.var_count();
  if (var < 1 || var > m) throw PreconditionError("meridian variable out of range");
  if (exp != 1 && exp != -1) throw PreconditionError("letter exponent must be +-1");
  std::uint64_t* w = s.words().data();
  if (exp == 1) {
    // s += X_var * s
    for (int d = D - 1; d >= 0; --d)
      xor_range(w, s.block_offset(d + 1) + static_cast<std::size_t>(var - 1) * s.block_size(d),
                w, s.block_offset(d), s.block_size(d));
  } else {
    // s = (1 + X + X^2 + ...) * s; rank of X_var^j is (var-1)*off(j)
    for (int e = D; e >= 1; --e) {
      for (int j = 1; j <= e; ++j) {
        std::size_t prefix = static_cast<std::size_t>(var - 1) * s.block_offset(j);
        xor_range(w, s.block_offset(e) + prefix * s.block_size(e - j), w,
                  s.block_offset(e - j), s.block_size(e - j));
      }
    }
  }
}

TruncatedSeries expand_word(const Word& w, int m, int D) {
  if (w.alphabet().kind() != AlphabetKind::meridians)
    throw PreconditionError("expand_word needs a word over the meridian alphabet");
  if (w.alphabet().size() > m)
    throw PreconditionError("word generator out of range for m = " + std::to_string(m));
  TruncatedSeries s = TruncatedSeries::one(m, D);
  const auto& runs = w.runs();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    int var = it->gen + 1;
    int step = it->exp > 0 ? 1 : -1;
    for (int t = 0; t < std::abs(it->exp); ++t) left_mul_letter(s, var, step);
  }
  return s;
}

std::string to_string(const TruncatedSeries& s) {
  auto ms = s.nonzero_monomials();
  if (ms.empty()) return "0";
  std::string out;
  for (const Monomial& mo : ms) {
    if (!out.empty()) out += " + ";
    out += mo.str();
  }
  return out;
}

}  // namespace fourmove
