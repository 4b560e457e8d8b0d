#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaqc/field.hpp"

namespace gaqc {

using word_t = std::uint64_t;
constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed binary vector; bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_(words_for(n), 0) {}
  BitVector(std::size_t n, std::span<const word_t> words);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const noexcept { return words_[i / kWordBits] >> (i % kWordBits) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const word_t mask = word_t{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::span<const word_t> words() const noexcept { return words_; }
  std::span<word_t> words() noexcept { return words_; }
  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector& o) const = default;
  std::string to_string() const;

  static BitVector ones(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<word_t> words_;
};

/// Bit-packed row-major matrix over GF(2).
class MatrixF2 {
 public:
  MatrixF2() = default;
  MatrixF2(std::size_t rows, std::size_t cols);

  static MatrixF2 identity(std::size_t n);
  static MatrixF2 from_rows(std::size_t cols, const std::vector<BitVector>& rows);
  /// One line per row of '0'/'1' characters; blank lines and lines starting with '#' ignored.
  static MatrixF2 from_text(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t row_words() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return data_[r * stride_ + c / kWordBits] >> (c % kWordBits) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept {
    word_t& w = data_[r * stride_ + c / kWordBits];
    const word_t mask = word_t{1} << (c % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / kWordBits] ^= word_t{1} << (c % kWordBits); }

  std::span<const word_t> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<word_t> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  BitVector row_vector(std::size_t r) const { return BitVector(cols_, row(r)); }
  void xor_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  void append_row(std::span<const word_t> words);
  void append_row(const BitVector& v) { append_row(v.words()); }

  MatrixF2 transpose() const;
  /// Rows [begin, end)
  MatrixF2 row_slice(std::size_t begin, std::size_t end) const;
  /// Column c removed.
  MatrixF2 drop_column(std::size_t c) const;
  /// H v^T as a vector of length rows().
  BitVector mul_vector(const BitVector& v) const;
  bool is_zero() const noexcept;
  bool operator==(const MatrixF2& o) const = default;

  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_t> data_;
};

/// A * B^T
MatrixF2 mul_transpose(const MatrixF2& a, const MatrixF2& b);
MatrixF2 mul(const MatrixF2& a, const MatrixF2& b);

struct RrefF2 {
  MatrixF2 reduced;  ///< full reduced row-echelon form, zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefF2 rref(const MatrixF2& m);
std::size_t rank(const MatrixF2& m);
/// Rows form a basis of {x : M x^T = 0}.
MatrixF2 null_space(const MatrixF2& m);
/// True iff every row of `a` lies in the row space of `b`.
bool subspace_contained(const MatrixF2& a, const MatrixF2& b);
bool same_row_space(const MatrixF2& a, const MatrixF2& b);

/// Membership oracle for a fixed row space.
class RowSpace {
 public:
  explicit RowSpace(const MatrixF2& m);
  bool contains(std::span<const word_t> v) const;
  bool contains(const BitVector& v) const { return contains(v.words()); }
  std::size_t dim() const noexcept { return echelon_.rank; }
  /// Index of the first row of `a` outside this space, or a.rows() when all are inside.
  std::size_t first_outside(const MatrixF2& a) const;

 private:
  RrefF2 echelon_;
};

// ----------------------------------------------------------------------------------------------

/// Dense matrix over GF(2^m).
class MatrixExt {
 public:
  MatrixExt(FieldPtr field, std::size_t rows, std::size_t cols);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  gf_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  gf_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const gf_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  MatrixExt transpose() const;
  bool operator==(const MatrixExt& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  /// Space-separated hex entries, one row per line.
  std::string to_text() const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<gf_t> data_;
};

MatrixExt mul_transpose(const MatrixExt& a, const MatrixExt& b);

struct RrefExt {
  MatrixExt reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};
RrefExt rref(const MatrixExt& m);
std::size_t rank(const MatrixExt& m);
/// Right kernel over GF(2^m).
MatrixExt null_space(const MatrixExt& m);

/**
 * Binary image of an extension-field parity-check matrix. Row block i (m rows) holds the
 * basis coordinates of row i of H, so for binary c: B c^T = 0 iff H c^T = 0.
 */
MatrixF2 expand_to_binary(const MatrixExt& h, const Basis& basis);

/**
 * Symbolwise binary expansion of the code generated by `g`: for every row r and basis element
 * b_s the row (coords(b_s g_r1), ..., coords(b_s g_rn)), symbol j occupying bits j*m..j*m+m-1.
 */
MatrixF2 expand_generator(const MatrixExt& g, const Basis& basis);

}  // namespace gaqc
