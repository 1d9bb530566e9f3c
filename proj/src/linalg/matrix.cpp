#include "qtilt/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtilt/simd.hpp"

namespace qtilt {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, Storage s)
    : field_(f), rows_(rows), cols_(cols), packed_(f.binary() && s == Storage::Auto) {
  if (packed_) {
    stride_ = (cols + 63) / 64;
    bits_.assign(rows * stride_, 0);
  } else {
    vals_.assign(rows * cols, 0);
  }
}

Matrix Matrix::identity(Field f, std::size_t n, Storage s) {
  Matrix m(f, n, n, s);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<int64_t>>& rows, Storage s) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols, s);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.reduce(rows[r][c]));
  }
  return m;
}

Matrix Matrix::row_vector(Field f, std::span<const uint32_t> values) {
  Matrix m(f, 1, values.size());
  for (std::size_t c = 0; c < values.size(); ++c) m.set(0, c, values[c] % f.characteristic());
  return m;
}

Matrix Matrix::unit_row(Field f, std::size_t cols, std::size_t index) {
  Matrix m(f, 1, cols);
  m.set(0, index, 1);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, uint32_t v) {
  if (packed_) {
    uint64_t& w = bits_[r * stride_ + (c >> 6)];
    const uint64_t bit = uint64_t{1} << (c & 63);
    w = (v & 1u) ? (w | bit) : (w & ~bit);
  } else {
    vals_[r * cols_ + c] = v % field_.characteristic();
  }
}

bool Matrix::is_zero() const {
  if (packed_) return std::all_of(bits_.begin(), bits_.end(), [](uint64_t w) { return w == 0; });
  return std::all_of(vals_.begin(), vals_.end(), [](uint32_t v) { return v == 0; });
}

bool Matrix::row_is_zero(std::size_t r) const { return leading_column(r) == cols_; }

std::size_t Matrix::leading_column(std::size_t r, std::size_t from) const {
  if (from >= cols_) return cols_;
  if (packed_) {
    const uint64_t* row = bit_row(r);
    std::size_t w = from >> 6;
    uint64_t word = row[w] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (word) return std::min(cols_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
      if (++w >= stride_) return cols_;
      word = row[w];
    }
  }
  const uint32_t* row = val_row(r);
  for (std::size_t c = from; c < cols_; ++c) {
    if (row[c]) return c;
  }
  return cols_;
}

void Matrix::add_row(std::size_t dst, const Matrix& src, std::size_t srow, uint32_t coeff,
                     std::size_t from) {
  assert(src.cols_ == cols_ && src.packed_ == packed_);
  coeff %= field_.characteristic();
  if (coeff == 0) return;
  if (packed_) {
    const std::size_t w0 = from >> 6;
    simd::active().xor_words(bit_row(dst) + w0, src.bit_row(srow) + w0, stride_ - w0);
    return;
  }
  const uint64_t p = field_.characteristic();
  uint32_t* d = val_row(dst);
  const uint32_t* s = src.val_row(srow);
  for (std::size_t c = from; c < cols_; ++c) {
    if (s[c]) d[c] = static_cast<uint32_t>((d[c] + static_cast<uint64_t>(coeff) * s[c]) % p);
  }
}

void Matrix::scale_row(std::size_t r, uint32_t coeff) {
  coeff %= field_.characteristic();
  if (packed_) {
    if (coeff == 0) std::fill_n(bit_row(r), stride_, 0);
    return;
  }
  uint32_t* d = val_row(r);
  for (std::size_t c = 0; c < cols_; ++c) d[c] = field_.mul(d[c], coeff);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed_) {
    std::swap_ranges(bit_row(a), bit_row(a) + stride_, bit_row(b));
  } else {
    std::swap_ranges(val_row(a), val_row(a) + cols_, val_row(b));
  }
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  require(begin <= end && end <= rows_, "row range out of bounds");
  Matrix out(field_, end - begin, cols_, packed_ ? Storage::Auto : Storage::Dense);
  if (packed_) {
    std::copy(bits_.begin() + begin * stride_, bits_.begin() + end * stride_, out.bits_.begin());
  } else {
    std::copy(vals_.begin() + begin * cols_, vals_.begin() + end * cols_, out.vals_.begin());
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_, packed_ ? Storage::Auto : Storage::Dense);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    require(idx[i] < rows_, "row index out of bounds");
    if (packed_) {
      std::copy_n(bit_row(idx[i]), stride_, out.bit_row(i));
    } else {
      std::copy_n(val_row(idx[i]), cols_, out.val_row(i));
    }
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size(), packed_ ? Storage::Auto : Storage::Dense);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      uint32_t v = (*this)(r, idx[j]);
      if (v) out.set(r, j, v);
    }
  }
  return out;
}

Matrix Matrix::column_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx(end - begin);
  std::iota(idx.begin(), idx.end(), begin);
  return select_columns(idx);
}

void Matrix::paste(const Matrix& m, std::size_t r0, std::size_t c0) {
  require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "paste out of bounds");
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (packed_ && m.packed_ && (c0 & 63) == 0) {
      // word-aligned fast path
      const uint64_t* src = m.bit_row(r);
      uint64_t* dst = bit_row(r0 + r) + (c0 >> 6);
      const std::size_t full = m.cols_ / 64;
      std::copy_n(src, full, dst);
      for (std::size_t c = full * 64; c < m.cols_; ++c) set(r0 + r, c0 + c, m(r, c));
      continue;
    }
    for (std::size_t c = 0; c < m.cols_; ++c) set(r0 + r, c0 + c, m(r, c));
  }
}

std::vector<uint32_t> Matrix::row_values(std::size_t r) const {
  std::vector<uint32_t> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_, packed_ ? Storage::Auto : Storage::Dense);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (packed_) {
      const uint64_t* row = bit_row(r);
      for (std::size_t w = 0; w < stride_; ++w) {
        uint64_t word = row[w];
        while (word) {
          std::size_t c = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
          out.set(c, r, 1);
          word &= word - 1;
        }
      }
    } else {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (uint32_t v = (*this)(r, c)) out.set(c, r, v);
      }
    }
  }
  return out;
}

Matrix Matrix::with_storage(Storage s) const {
  const bool want_packed = field_.binary() && s == Storage::Auto;
  if (want_packed == packed_) return *this;
  Matrix out(field_, rows_, cols_, s);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (uint32_t v = (*this)(r, c)) out.set(r, c, v);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require(field_ == rhs.field_, "field mismatch in product");
  require(cols_ == rhs.rows_, "dimension mismatch in product");
  const Matrix& b = rhs.packed_ == packed_ ? rhs : rhs.with_storage(packed_ ? Storage::Auto : Storage::Dense);
  Matrix out(field_, rows_, rhs.cols_, packed_ ? Storage::Auto : Storage::Dense);
  if (packed_) {
    const auto xor_words = simd::active().xor_words;
    for (std::size_t i = 0; i < rows_; ++i) {
      const uint64_t* a = bit_row(i);
      uint64_t* dst = out.bit_row(i);
      for (std::size_t w = 0; w < stride_; ++w) {
        uint64_t word = a[w];
        while (word) {
          std::size_t k = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
          xor_words(dst, b.bit_row(k), out.stride_);
          word &= word - 1;
        }
      }
    }
    return out;
  }
  const uint64_t p = field_.characteristic();
  std::vector<uint64_t> acc(rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const uint64_t a = (*this)(i, k);
      if (!a) continue;
      const uint32_t* brow = b.val_row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) acc[j] = (acc[j] + a * brow[j]) % p;
    }
    uint32_t* dst = out.val_row(i);
    for (std::size_t j = 0; j < rhs.cols_; ++j) dst[j] = static_cast<uint32_t>(acc[j]);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_, "shape mismatch in sum");
  Matrix out = *this;
  const Matrix& b = rhs.packed_ == packed_ ? rhs : rhs.with_storage(packed_ ? Storage::Auto : Storage::Dense);
  for (std::size_t r = 0; r < rows_; ++r) out.add_row(r, b, r, 1);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_, "shape mismatch in difference");
  Matrix out = *this;
  const Matrix& b = rhs.packed_ == packed_ ? rhs : rhs.with_storage(packed_ ? Storage::Auto : Storage::Dense);
  const uint32_t minus_one = field_.neg(1);
  for (std::size_t r = 0; r < rows_; ++r) out.add_row(r, b, r, minus_one);
  return out;
}

Matrix Matrix::scaled(uint32_t c) const {
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) out.scale_row(r, c);
  return out;
}

Matrix Matrix::vstack(std::span<const Matrix> parts, Field f, std::size_t cols) {
  std::size_t rows = 0;
  for (const Matrix& m : parts) {
    require(m.cols_ == cols, "vstack column mismatch");
    rows += m.rows_;
  }
  Matrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const Matrix& m : parts) {
    out.paste(m, r0, 0);
    r0 += m.rows_;
  }
  return out;
}

Matrix Matrix::hstack(std::span<const Matrix> parts, Field f, std::size_t rows) {
  std::size_t cols = 0;
  for (const Matrix& m : parts) {
    require(m.rows_ == rows, "hstack row mismatch");
    cols += m.cols_;
  }
  Matrix out(f, rows, cols);
  std::size_t c0 = 0;
  for (const Matrix& m : parts) {
    out.paste(m, 0, c0);
    c0 += m.cols_;
  }
  return out;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> parts, Field f) {
  std::size_t rows = 0, cols = 0;
  for (const Matrix& m : parts) {
    rows += m.rows_;
    cols += m.cols_;
  }
  Matrix out(f, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const Matrix& m : parts) {
    out.paste(m, r0, c0);
    r0 += m.rows_;
    c0 += m.cols_;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.packed_ && b.packed_) return a.bits_ == b.bits_;
  if (!a.packed_ && !b.packed_) return a.vals_ == b.vals_;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) {
      if (a(r, c) != b(r, c)) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.form;
  const Field& f = a.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    if (uint32_t lead = a(r, c); lead != 1) a.scale_row(r, f.inv(lead));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      if (uint32_t v = a(i, c)) a.add_row(i, a, r, f.neg(v), c);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix row_space(const Matrix& m) {
  Echelon e = rref(m);
  return e.form.row_range(0, e.pivots.size());
}

Nullspace nullspace(const Matrix& m) {
  Echelon e = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix out(f, free.size(), m.cols(), m.packed() || !f.binary() ? Storage::Auto : Storage::Dense);
  for (std::size_t k = 0; k < free.size(); ++k) {
    out.set(k, free[k], 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (uint32_t v = e.form(r, free[k])) out.set(k, e.pivots[r], f.neg(v));
    }
  }
  return {std::move(out), std::move(free)};
}

Matrix nullspace_basis(const Matrix& m) { return nullspace(m).basis; }

Matrix left_nullspace_basis(const Matrix& m) { return nullspace_basis(m.transpose()); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row count mismatch");
  const Field& f = a.field();
  const Matrix parts[] = {a, b};
  Echelon e = rref(Matrix::hstack(parts, f, a.rows()));
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t c = e.pivots[r];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (uint32_t v = e.form(r, a.cols() + j)) x.set(c, j, v);
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_right(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(Field f, std::size_t cols) : field_(f), cols_(cols) {}

Matrix RowReducer::reduce(const Matrix& row, std::size_t r) const {
  Matrix v = row.row(r);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (uint32_t c = v(0, pivots_[i])) v.add_row(0, rows_[i], 0, field_.neg(c), pivots_[i]);
  }
  return v;
}

bool RowReducer::contains(const Matrix& row, std::size_t r) const { return reduce(row, r).is_zero(); }

bool RowReducer::insert(const Matrix& row, std::size_t r) {
  if (row.cols() != cols_) throw std::invalid_argument("RowReducer: column mismatch");
  Matrix v = reduce(row, r);
  const std::size_t piv = v.leading_column(0);
  if (piv == cols_) return false;
  if (uint32_t lead = v(0, piv); lead != 1) v.scale_row(0, field_.inv(lead));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (uint32_t c = rows_[i](0, piv)) rows_[i].add_row(0, v, 0, field_.neg(c), piv);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Matrix RowReducer::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix out(field_, rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i) out.paste(rows_[order[i]], i, 0);
  return out;
}

}  // namespace qtilt
