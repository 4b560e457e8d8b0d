#include "gaqc/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "gaqc/errors.hpp"

namespace gaqc {

Budget Budget::with_seconds(double seconds) {
  Budget b;
  if (seconds > 0) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
  return b;
}

bool Budget::expired() const { return deadline && std::chrono::steady_clock::now() > *deadline; }

void Budget::check_deadline() const {
  if (expired()) throw BudgetError("time budget exhausted");
}

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}


std::size_t popcount_words(const word_t* w, std::size_t n) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<std::size_t>(std::popcount(w[i]));
  return s;
}

void require_enumerable(std::size_t k, const Budget& budget) {
  if (k > budget.k_max) {
    throw BudgetError("enumeration of 2^" + std::to_string(k) + " codewords exceeds k_max = " +
                          std::to_string(budget.k_max),
                      std::ldexp(1.0, static_cast<int>(k)));
  }
}

// Visits every nonzero codeword of the row space of `basis` in Gray-code order; the callback
// sees the codeword words and the message whose bit i selects basis row i.
template <class Visit>
void gray_walk(const MatrixF2& basis, const Budget& budget, Visit&& visit) {
  const std::size_t k = basis.rows();
  const std::size_t stride = basis.row_words();
  std::vector<word_t> cw(stride, 0);
  std::uint64_t msg = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    msg ^= std::uint64_t{1} << bit;
    const word_t* row = basis.row(bit).data();
    for (std::size_t w = 0; w < stride; ++w) cw[w] ^= row[w];
    visit(cw.data(), msg);
    if ((i & 0xFFFFFu) == 0) budget.check_deadline();
  }
}

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(r);
}

double binom_f(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

// Minimum distance from the dual's weight distribution (MacWilliams identity).
std::size_t macwilliams_min_distance(const LinearCode& c, const Budget& budget) {
  const LinearCode d = dual(c);
  const std::vector<std::uint64_t> b = weight_distribution(d, budget);
  const std::size_t n = c.n();
  const std::size_t w_top = std::min(n, d.k() + 1);  // Singleton bound
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(w_top + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (std::size_t j = 1; j <= std::min(a, w_top); ++j) binom[a][j] = binom[a - 1][j - 1] + (j < a ? binom[a - 1][j] : BigInt(0));
  }
  for (std::size_t w = 1; w <= w_top; ++w) {
    BigInt a_w = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (b[i] == 0) continue;
      BigInt kraw = 0;
      for (std::size_t j = 0; j <= std::min(i, w); ++j) {
        if (w - j > n - i) continue;
        const BigInt term = binom[i][j] * binom[n - i][w - j];
        if (j & 1u) {
          kraw -= term;
        } else {
          kraw += term;
        }
      }
      a_w += kraw * b[i];
    }
    if (a_w != 0) return w;
  }
  throw InternalError("MacWilliams transform found no codeword within the Singleton bound");
}

std::size_t min_row_weight(const MatrixF2& g) {
  std::size_t best = g.cols();
  for (std::size_t r = 0; r < g.rows(); ++r) best = std::min(best, popcount_words(g.row(r).data(), g.row_words()));
  return best;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t passes_for(std::uint64_t right, std::uint64_t per_pass) {
  per_pass = std::max<std::uint64_t>(per_pass, 1);
  return std::max<std::uint64_t>(1, (right + per_pass - 1) / per_pass);
}

// Iterates the k-subsets of [lo, hi) in lexicographic order, maintaining the XOR of their values.
class SubsetWalk {
 public:
  SubsetWalk(const std::vector<std::uint64_t>& val, std::size_t k, std::size_t lo, std::size_t hi)
      : val_(val), k_(k), hi_(hi), idx_(k), partial_(k + 1, 0) {
    valid_ = hi >= lo + k;
    for (std::size_t i = 0; i < k; ++i) idx_[i] = lo + i;
    refresh(0);
  }
  bool valid() const noexcept { return valid_; }
  std::uint64_t value() const noexcept { return partial_[k_]; }
  const std::vector<std::size_t>& indices() const noexcept { return idx_; }
  void next() {
    std::size_t i = k_;
    while (i > 0 && idx_[i - 1] >= hi_ - (k_ - i + 1)) --i;
    if (i == 0) {
      valid_ = false;
      return;
    }
    --i;
    ++idx_[i];
    for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
    refresh(i);
  }

 private:
  void refresh(std::size_t from) {
    if (!valid_) return;
    for (std::size_t j = from; j < k_; ++j) partial_[j + 1] = partial_[j] ^ val_[idx_[j]];
  }

  const std::vector<std::uint64_t>& val_;
  std::size_t k_, hi_;
  std::vector<std::size_t> idx_;
  std::vector<std::uint64_t> partial_;
  bool valid_ = false;
};

// Lexicographic unranking of a k-subset of [lo, lo + len).
std::vector<std::size_t> unrank(std::uint64_t r, std::size_t k, std::size_t lo, std::size_t len) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t c = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++c) {
      const std::uint64_t cnt = binom_u64(len - 1 - c, k - 1 - i);
      if (r < cnt) {
        out.push_back(lo + c);
        ++c;
        break;
      }
      r -= cnt;
    }
  }
  return out;
}

struct Entry {
  std::uint64_t value;
  std::uint64_t rank;
  bool operator<(const Entry& o) const noexcept { return value < o.value; }
};

}  // namespace

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, const Budget& budget) {
  require_enumerable(c.k(), budget);
  std::vector<std::uint64_t> hist(c.n() + 1, 0);
  hist[0] = 1;
  const std::size_t stride = c.generator().row_words();
  gray_walk(c.generator(), budget, [&](const word_t* cw, std::uint64_t) { ++hist[popcount_words(cw, stride)]; });
  return hist;
}

// ----------------------------------------------------------------------------------------------

ColumnSearch::ColumnSearch(const MatrixF2& par, const Budget& budget)
    : n_(par.cols()), rows_(par.rows()), exact_(par.rows() <= 64), col_(par.cols(), 0), budget_(budget) {
  const MatrixF2 cols = par.transpose();
  if (exact_) {
    for (std::size_t j = 0; j < n_; ++j) col_[j] = rows_ ? cols.row(j)[0] : 0;
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::vector<std::vector<word_t>> proj(64, std::vector<word_t>(cols.row_words()));
  for (auto& p : proj) {
    for (auto& w : p) w = rng();
    if (rows_ % kWordBits) p.back() &= (word_t{1} << (rows_ % kWordBits)) - 1;
  }
  full_.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto cj = cols.row(j);
    full_[j].assign(cj.begin(), cj.end());
    std::uint64_t v = 0;
    for (std::size_t t = 0; t < 64; ++t) {
      word_t acc = 0;
      for (std::size_t w = 0; w < cj.size(); ++w) acc ^= cj[w] & proj[t][w];
      v |= static_cast<std::uint64_t>(std::popcount(acc) & 1) << t;
    }
    col_[j] = v;
  }
}

double ColumnSearch::volume(std::size_t n, std::size_t w, std::size_t table_entries) {
  if (w == 0 || w > n) return 0;
  const std::size_t a = (w + 1) / 2, b = w / 2;
  const double right = binom_f(n, b);
  const double passes = std::max(1.0, std::ceil(right / static_cast<double>(std::max<std::size_t>(table_entries, 1))));
  return passes * binom_f(n, a) + right;
}

bool ColumnSearch::is_dependency(const std::vector<std::size_t>& idx) const {
  if (exact_) {
    std::uint64_t v = 0;
    for (std::size_t j : idx) v ^= col_[j];
    return v == 0;
  }
  std::vector<word_t> acc(full_.empty() ? 0 : full_[0].size(), 0);
  for (std::size_t j : idx) {
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= full_[j][w];
  }
  return std::all_of(acc.begin(), acc.end(), [](word_t x) { return x == 0; });
}

std::optional<std::vector<std::size_t>> ColumnSearch::find(std::size_t w, const DependencyFilter& accept) {
  if (w == 0 || w > n_) return std::nullopt;
  auto ok = [&](const std::vector<std::size_t>& idx) { return is_dependency(idx) && (!accept || accept(idx)); };
  if (w == 1) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (col_[j] == 0 && ok({j})) return std::vector<std::size_t>{j};
    }
    return std::nullopt;
  }
  const std::size_t a = (w + 1) / 2, b = w / 2;
  // X ranges over a-subsets of [0, n - b), Y over b-subsets of [a, n), with max(X) < min(Y).
  const std::size_t ylo = a, ylen = n_ - a;
  const std::uint64_t right = binom_u64(ylen, b);
  const std::uint64_t passes = passes_for(right, budget_.table_entries);
  std::uint64_t tick = 0;
  std::vector<Entry> table;
  std::vector<std::uint64_t> bitmap;
  for (std::uint64_t pass = 0; pass < passes; ++pass) {
    table.clear();
    table.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(right / passes + right / (4 * passes) + 16, right)));
    std::uint64_t rank = 0;
    for (SubsetWalk y(col_, b, ylo, n_); y.valid(); y.next(), ++rank) {
      if (passes == 1 || splitmix(y.value()) % passes == pass) table.push_back({y.value(), rank});
      if ((++tick & 0xFFFFFu) == 0) budget_.check_deadline();
    }
    std::sort(table.begin(), table.end());
    std::size_t bits = 64;
    while (bits < 4 * table.size() && bits < (std::size_t{1} << 31)) bits <<= 1;
    bitmap.assign(bits / 64, 0);
    for (const Entry& e : table) {
      const std::uint64_t h = splitmix(e.value ^ 0xA5A5A5A5ull) & (bits - 1);
      bitmap[h / 64] |= std::uint64_t{1} << (h % 64);
    }
    for (SubsetWalk x(col_, a, 0, n_ - b); x.valid(); x.next()) {
      if ((++tick & 0xFFFFFu) == 0) budget_.check_deadline();
      const std::uint64_t v = x.value();
      if (passes > 1 && splitmix(v) % passes != pass) continue;
      const std::uint64_t h = splitmix(v ^ 0xA5A5A5A5ull) & (bits - 1);
      if (!(bitmap[h / 64] >> (h % 64) & 1u)) continue;
      auto [lo, hi] = std::equal_range(table.begin(), table.end(), Entry{v, 0});
      const std::size_t xmax = x.indices().back();
      for (auto it = lo; it != hi; ++it) {
        std::vector<std::size_t> ys = unrank(it->rank, b, ylo, ylen);
        if (ys.front() <= xmax) continue;
        std::vector<std::size_t> idx = x.indices();
        idx.insert(idx.end(), ys.begin(), ys.end());
        if (ok(idx)) return idx;
      }
    }
  }
  return std::nullopt;
}

SearchResult low_weight_search(const MatrixF2& par, std::size_t w_max, const Budget& budget, std::size_t w_min,
                               const DependencyFilter& accept) {
  const std::size_t n = par.cols();
  w_min = std::max<std::size_t>(w_min, 1);
  w_max = std::min(w_max, n);
  double total = 0;
  for (std::size_t w = w_min; w <= w_max; ++w) total += ColumnSearch::volume(n, w, budget.table_entries);
  if (total > budget.column_volume) {
    throw BudgetError("column search up to weight " + std::to_string(w_max) + " needs volume " +
                          sci(total) +
                          " > " + sci(budget.column_volume),
                      total);
  }
  ColumnSearch search(par, budget);
  for (std::size_t w = w_min; w <= w_max; ++w) {
    if (auto hit = search.find(w, accept)) return {DistanceCert::exact(w, CertMethod::column_search), *hit};
  }
  if (w_max + 1 > n) throw UsageError("no dependency among all columns: the parity matrix has full column rank");
  return {DistanceCert::bounds(w_max + 1, n, CertMethod::column_search), {}};
}

// ----------------------------------------------------------------------------------------------

DistanceCert min_distance_exact(const LinearCode& c, const Budget& budget) {
  if (c.k() == 0) throw UsageError("minimum distance of the zero code is undefined");
  const std::size_t n = c.n();
  DistanceCert known = c.bound().intersect(DistanceCert::bounds(1, min_row_weight(c.generator()), CertMethod::trivial));
  if (known.is_exact()) return known;

  if (c.k() <= budget.k_max) {
    try {
      std::size_t best = n;
      const std::size_t stride = c.generator().row_words();
      gray_walk(c.generator(), budget, [&](const word_t* cw, std::uint64_t) {
        best = std::min(best, popcount_words(cw, stride));
      });
      return known.intersect(DistanceCert::exact(best, CertMethod::enumeration));
    } catch (const BudgetError&) {
      return known;
    }
  }

  const bool dual_enumerable = n - c.k() <= budget.k_max;
  const double cap = dual_enumerable ? std::min(budget.column_volume, 1e8) : budget.column_volume;
  std::size_t w = known.lower;
  try {
    ColumnSearch search(c.parity(), budget);
    double spent = 0;
    for (; w <= known.upper; ++w) {
      spent += ColumnSearch::volume(n, w, budget.table_entries);
      if (spent > cap) break;
      if (search.find(w)) return known.intersect(DistanceCert::exact(w, CertMethod::column_search));
    }
  } catch (const BudgetError&) {
  }
  if (w > known.lower) known = known.intersect(DistanceCert::bounds(w, n, CertMethod::column_search));
  if (dual_enumerable) {
    try {
      return known.intersect(DistanceCert::exact(macwilliams_min_distance(c, budget), CertMethod::enumeration));
    } catch (const BudgetError&) {
    }
  }
  return known;
}

// ----------------------------------------------------------------------------------------------

RelativeWeight relative_min_weight(const LinearCode& c1, const LinearCode& csub, const Budget& budget) {
  if (!is_subcode(csub, c1)) throw UsageError("relative weight needs " + csub.label() + " inside " + c1.label());
  if (csub.k() == c1.k()) throw UsageError("relative weight of a code over itself: C1 \\ Csub is empty");
  const std::size_t n = c1.n();
  RelativeWeight out;

  if (c1.k() <= budget.k_max) {
    // Basis of C1 whose first rows span Csub: a codeword lies outside Csub iff it uses a later row.
    MatrixF2 basis = csub.generator();
    const std::size_t k_sub = csub.k();
    {
      RowSpace have(basis);
      for (std::size_t r = 0; r < c1.k() && basis.rows() < c1.k(); ++r) {
        if (!have.contains(c1.generator().row(r))) {
          basis.append_row(c1.generator().row(r));
          have = RowSpace(basis);
        }
      }
    }
    if (basis.rows() != c1.k()) throw InternalError("failed to extend a subcode basis");
    std::size_t best_all = n, best_out = n + 1;
    std::vector<word_t> witness;
    const std::size_t stride = basis.row_words();
    gray_walk(basis, budget, [&](const word_t* cw, std::uint64_t msg) {
      const std::size_t wt = popcount_words(cw, stride);
      best_all = std::min(best_all, wt);
      if ((msg >> k_sub) != 0 && wt < best_out) {
        best_out = wt;
        witness.assign(cw, cw + stride);
      }
    });
    out.relative = best_out;
    out.full = DistanceCert::exact(best_all, CertMethod::enumeration);
    out.method = CertMethod::coset_enumeration;
    out.witness = BitVector(n, witness);
    return out;
  }

  std::size_t first_any = 0;
  BitVector hit(n);
  const DependencyFilter outside = [&](const std::vector<std::size_t>& idx) {
    if (first_any == 0) first_any = idx.size();
    BitVector v(n);
    for (std::size_t j : idx) v.set(j);
    if (csub.contains(v)) return false;
    hit = v;
    return true;
  };
  const std::size_t w0 = c1.bound().lower;
  double spent = 0;
  ColumnSearch search(c1.parity(), budget);
  for (std::size_t w = w0; w <= n; ++w) {
    spent += ColumnSearch::volume(n, w, budget.table_entries);
    if (spent > budget.column_volume) {
      throw BudgetError("relative weight of " + c1.label() + " needs a column search past weight " + std::to_string(w - 1) +
                            " (volume " + sci(spent) + ")",
                        spent);
    }
    if (search.find(w, outside)) {
      out.relative = w;
      out.full = DistanceCert::exact(first_any, CertMethod::column_search);
      out.method = CertMethod::column_search;
      out.witness = hit;
      return out;
    }
  }
  throw InternalError("no codeword of " + c1.label() + " outside " + csub.label());
}

}  // namespace gaqc
