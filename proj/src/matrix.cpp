#include "gaqc/matrix.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gaqc/errors.hpp"

namespace gaqc {

namespace {

word_t tail_mask(std::size_t n) {
  const std::size_t r = n % kWordBits;
  return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t n, std::span<const word_t> words) : n_(n), words_(words_for(n), 0) {
  std::copy_n(words.begin(), std::min(words.size(), words_.size()), words_.begin());
  if (!words_.empty()) words_.back() &= tail_mask(n);
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (word_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_t x) { return x == 0; });
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.n_ != n_) throw UsageError("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVector BitVector::ones(std::size_t n) {
  BitVector v(n);
  for (auto& w : v.words_) w = ~word_t{0};
  if (!v.words_.empty()) v.words_.back() &= tail_mask(n);
  return v;
}

// ----------------------------------------------------------------------------------------------

MatrixF2::MatrixF2(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

MatrixF2 MatrixF2::identity(std::size_t n) {
  MatrixF2 m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

MatrixF2 MatrixF2::from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
  MatrixF2 m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw UsageError("row length mismatch");
    m.append_row(r);
  }
  return m;
}

MatrixF2 MatrixF2::from_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  if (lines.empty()) return MatrixF2(0, 0);
  const std::size_t cols = lines.front().size();
  MatrixF2 m(lines.size(), cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) throw UsageError("matrix text: ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch == '1') {
        m.set(r, c);
      } else if (ch != '0') {
        throw UsageError("matrix text: invalid character in row " + std::to_string(r));
      }
    }
  }
  return m;
}

void MatrixF2::xor_row(std::size_t dst, std::size_t src) noexcept {
  word_t* d = data_.data() + dst * stride_;
  const word_t* s = data_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void MatrixF2::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

void MatrixF2::append_row(std::span<const word_t> words) {
  if (stride_ == 0 && cols_ > 0) stride_ = words_for(cols_);
  const std::size_t old = data_.size();
  data_.resize(old + stride_, 0);
  std::copy_n(words.begin(), std::min(words.size(), stride_), data_.begin() + old);
  if (stride_ > 0) data_[old + stride_ - 1] &= tail_mask(cols_);
  ++rows_;
}

MatrixF2 MatrixF2::transpose() const {
  MatrixF2 t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      for (word_t x = rw[w]; x != 0; x &= x - 1) t.set(w * kWordBits + std::countr_zero(x), r);
    }
  }
  return t;
}

MatrixF2 MatrixF2::row_slice(std::size_t begin, std::size_t end) const {
  MatrixF2 out(0, cols_);
  for (std::size_t r = begin; r < end; ++r) out.append_row(row(r));
  return out;
}

MatrixF2 MatrixF2::drop_column(std::size_t c) const {
  if (c >= cols_) throw UsageError("column index out of range");
  MatrixF2 out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != c && get(r, j)) out.set(r, j < c ? j : j - 1);
    }
  }
  return out;
}

BitVector MatrixF2::mul_vector(const BitVector& v) const {
  if (v.size() != cols_) throw UsageError("matrix-vector length mismatch");
  BitVector out(rows_);
  const auto vw = v.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    const word_t* rw = data_.data() + r * stride_;
    word_t acc = 0;
    for (std::size_t i = 0; i < stride_; ++i) acc ^= rw[i] & vw[i];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

bool MatrixF2::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](word_t x) { return x == 0; });
}

std::string MatrixF2::to_text() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

MatrixF2 mul_transpose(const MatrixF2& a, const MatrixF2& b) {
  if (a.cols() != b.cols()) throw UsageError("A*B^T column mismatch");
  MatrixF2 out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ai = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const auto bj = b.row(j);
      word_t acc = 0;
      for (std::size_t w = 0; w < ai.size(); ++w) acc ^= ai[w] & bj[w];
      if (std::popcount(acc) & 1) out.set(i, j);
    }
  }
  return out;
}

MatrixF2 mul(const MatrixF2& a, const MatrixF2& b) {
  if (a.cols() != b.rows()) throw UsageError("A*B dimension mismatch");
  MatrixF2 out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto oi = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const auto bk = b.row(k);
      for (std::size_t w = 0; w < oi.size(); ++w) oi[w] ^= bk[w];
    }
  }
  return out;
}

RrefF2 rref(const MatrixF2& m) {
  MatrixF2 a = m;
  RrefF2 out;
  std::size_t r = 0;
  const std::size_t stride = a.row_words();
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && !a.get(piv, c)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    // The pivot row is zero left of c, so elimination only touches words from c/64 on.
    const std::size_t w0 = c / kWordBits;
    const word_t* pr = a.row(r).data();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || !a.get(i, c)) continue;
      word_t* ri = a.row(i).data();
      for (std::size_t w = w0; w < stride; ++w) ri[w] ^= pr[w];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = a.row_slice(0, r);
  if (r == 0) out.reduced = MatrixF2(0, m.cols());
  return out;
}

std::size_t rank(const MatrixF2& m) { return rref(m).rank; }

MatrixF2 null_space(const MatrixF2& m) {
  const RrefF2 e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> free_index(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_index[c] = free_cols.size();
      free_cols.push_back(c);
    }
  }
  MatrixF2 basis(free_cols.size(), n);
  for (std::size_t i = 0; i < free_cols.size(); ++i) basis.set(i, free_cols[i]);
  for (std::size_t i = 0; i < e.rank; ++i) {
    const auto ri = e.reduced.row(i);
    for (std::size_t w = 0; w < ri.size(); ++w) {
      for (word_t x = ri[w]; x != 0; x &= x - 1) {
        const std::size_t c = w * kWordBits + std::countr_zero(x);
        if (!is_pivot[c]) basis.set(free_index[c], e.pivots[i]);
      }
    }
  }
  return basis;
}

RowSpace::RowSpace(const MatrixF2& m) : echelon_(rref(m)) {}

bool RowSpace::contains(std::span<const word_t> v) const {
  std::vector<word_t> x(v.begin(), v.end());
  for (std::size_t i = 0; i < echelon_.rank; ++i) {
    const std::size_t p = echelon_.pivots[i];
    if (x[p / kWordBits] >> (p % kWordBits) & 1u) {
      const auto ri = echelon_.reduced.row(i);
      for (std::size_t w = p / kWordBits; w < x.size(); ++w) x[w] ^= ri[w];
    }
  }
  return std::all_of(x.begin(), x.end(), [](word_t w) { return w == 0; });
}

std::size_t RowSpace::first_outside(const MatrixF2& a) const {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!contains(a.row(r))) return r;
  }
  return a.rows();
}

bool subspace_contained(const MatrixF2& a, const MatrixF2& b) {
  if (a.cols() != b.cols()) throw UsageError("subspace_contained: column mismatch");
  const RowSpace space(b);
  return space.first_outside(a) == a.rows();
}

bool same_row_space(const MatrixF2& a, const MatrixF2& b) {
  return rank(a) == rank(b) && subspace_contained(a, b);
}

// ----------------------------------------------------------------------------------------------

MatrixExt::MatrixExt(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixExt MatrixExt::transpose() const {
  MatrixExt t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::string MatrixExt::to_text() const {
  std::ostringstream os;
  char buf[16];
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      std::snprintf(buf, sizeof buf, "%s0x%X", c ? " " : "", static_cast<unsigned>((*this)(r, c)));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

MatrixExt mul_transpose(const MatrixExt& a, const MatrixExt& b) {
  if (a.cols() != b.cols()) throw UsageError("A*B^T column mismatch");
  const Field& f = *a.field();
  MatrixExt out(a.field(), a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      gf_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc ^= f.mul(a(i, k), b(j, k));
      out(i, j) = acc;
    }
  }
  return out;
}

RrefExt rref(const MatrixExt& m) {
  const Field& f = *m.field();
  MatrixExt a = m;
  RrefExt out{MatrixExt(m.field(), 0, m.cols()), 0, {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    }
    const gf_t s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const gf_t factor = a(i, c);
      if (i == r || factor == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) ^= f.mul(factor, a(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  MatrixExt reduced(m.field(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = a(i, j);
  }
  out.reduced = std::move(reduced);
  return out;
}

std::size_t rank(const MatrixExt& m) { return rref(m).rank; }

MatrixExt null_space(const MatrixExt& m) {
  const RrefExt e = rref(m);
  const std::size_t n = m.cols();
  std::vector<int> pivot_row(n, -1);
  for (std::size_t i = 0; i < e.rank; ++i) pivot_row[e.pivots[i]] = static_cast<int>(i);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) free_cols.push_back(c);
  }
  MatrixExt basis(m.field(), free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(k, fc) = 1;
    // x_p = -R[i][fc] = R[i][fc] in characteristic two
    for (std::size_t i = 0; i < e.rank; ++i) basis(k, e.pivots[i]) = e.reduced(i, fc);
  }
  return basis;
}

MatrixF2 expand_to_binary(const MatrixExt& h, const Basis& basis) {
  if (!(*h.field() == *basis.field())) throw UsageError("expand_to_binary: basis over a different field");
  const std::size_t m = static_cast<std::size_t>(h.field()->m());
  MatrixF2 b(h.rows() * m, h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      const std::uint32_t c = basis.coordinates(h(i, j));
      for (std::size_t l = 0; l < m; ++l) {
        if (c >> l & 1u) b.set(i * m + l, j);
      }
    }
  }
  return b;
}

MatrixF2 expand_generator(const MatrixExt& g, const Basis& basis) {
  if (!(*g.field() == *basis.field())) throw UsageError("expand_generator: basis over a different field");
  const Field& f = *g.field();
  const std::size_t m = static_cast<std::size_t>(f.m());
  MatrixF2 out(g.rows() * m, g.cols() * m);
  const auto elems = basis.elements();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const std::uint32_t c = basis.coordinates(f.mul(elems[s], g(r, j)));
        for (std::size_t l = 0; l < m; ++l) {
          if (c >> l & 1u) out.set(r * m + s, j * m + l);
        }
      }
    }
  }
  return out;
}

}  // namespace gaqc
