#pragma once
// Dense matrices over GF(p).
//
// Over GF(2) rows are bit-packed into 64-bit words and row operations go
// through the runtime-selected XOR kernel. Other primes (or GF(2) with
// Storage::Dense) store one residue per entry. Both layouts honour the same
// semantic contract; operator== compares entries, not layouts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtilt/field.hpp"

namespace qtilt {

enum class Storage { Auto, Dense };

class Matrix {
 public:
  Matrix() : Matrix(Field(2), 0, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, Storage s = Storage::Auto);

  static Matrix identity(Field f, std::size_t n, Storage s = Storage::Auto);
  static Matrix from_rows(Field f, const std::vector<std::vector<int64_t>>& rows,
                          Storage s = Storage::Auto);
  /// Single row vector.
  static Matrix row_vector(Field f, std::span<const uint32_t> values);
  static Matrix unit_row(Field f, std::size_t cols, std::size_t index);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool packed() const { return packed_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  uint32_t operator()(std::size_t r, std::size_t c) const {
    if (packed_) return static_cast<uint32_t>((bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u);
    return vals_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, uint32_t v);

  bool is_zero() const;
  bool row_is_zero(std::size_t r) const;
  /// First nonzero column of row r at or after `from`, or cols().
  std::size_t leading_column(std::size_t r, std::size_t from = 0) const;

  // Row operations: this[dst] += coeff * src[srow]. Columns before `from` are
  // assumed zero in the source row and may be skipped.
  void add_row(std::size_t dst, const Matrix& src, std::size_t srow, uint32_t coeff,
               std::size_t from = 0);
  void scale_row(std::size_t r, uint32_t coeff);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix row(std::size_t r) const { return row_range(r, r + 1); }
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix column_range(std::size_t begin, std::size_t end) const;
  /// Copy `m` into this matrix with its top-left corner at (r0, c0).
  void paste(const Matrix& m, std::size_t r0, std::size_t c0);
  /// Entries of row r as residues.
  std::vector<uint32_t> row_values(std::size_t r) const;

  Matrix transpose() const;
  Matrix with_storage(Storage s) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(uint32_t c) const;

  static Matrix vstack(std::span<const Matrix> parts, Field f, std::size_t cols);
  static Matrix hstack(std::span<const Matrix> parts, Field f, std::size_t rows);
  static Matrix block_diagonal(std::span<const Matrix> parts, Field f);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

  // Raw row access for kernels; layout depends on packed().
  uint64_t* bit_row(std::size_t r) { return bits_.data() + r * stride_; }
  const uint64_t* bit_row(std::size_t r) const { return bits_.data() + r * stride_; }
  uint32_t* val_row(std::size_t r) { return vals_.data() + r * cols_; }
  const uint32_t* val_row(std::size_t r) const { return vals_.data() + r * cols_; }
  std::size_t stride() const { return stride_; }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool packed_ = true;
  std::size_t stride_ = 0;  // words per packed row
  std::vector<uint64_t> bits_;
  std::vector<uint32_t> vals_;
};

struct Echelon {
  Matrix form;                      // reduced row echelon form, same shape as input
  std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows form a basis of {v : m v^T = 0}; canonical for a given m.
Matrix nullspace_basis(const Matrix& m);
struct Nullspace {
  Matrix basis;                    // rows, canonical: row k is 1 at free[k], 0 at the other free columns
  std::vector<std::size_t> free;  // non-pivot columns of rref(m)
};
Nullspace nullspace(const Matrix& m);
/// Rows form a basis of {x : x m = 0}.
Matrix left_nullspace_basis(const Matrix& m);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
/// Nonzero rows of rref(m): the canonical basis of the row space.
Matrix row_space(const Matrix& m);

/// Incrementally maintained reduced echelon basis of a row space.
class RowReducer {
 public:
  RowReducer(Field f, std::size_t cols);

  /// Adds the row if it is independent of the current span; returns whether it was.
  bool insert(const Matrix& row, std::size_t r = 0);
  /// Remainder of a row after reduction against the basis.
  Matrix reduce(const Matrix& row, std::size_t r = 0) const;
  bool contains(const Matrix& row, std::size_t r = 0) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis rows in reduced echelon form, sorted by pivot column.
  Matrix basis() const;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Matrix> rows_;         // one-row matrices, fully reduced
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

}  // namespace qtilt
