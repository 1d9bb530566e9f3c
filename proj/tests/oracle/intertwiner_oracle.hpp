#pragma once
// Brute-force intertwiner oracle over GF(2), test-only.
//
// Uses nothing from the library except the structure constants of the
// quotient algebra. Modules e_v A / gA are built by hand inside the regular
// representation, and dim End(X) is the nullity of the linear system
// R_j F = F R_j over all N^2 entries of F and every basis element b_j of A.
// No Hom-space code, no resolutions, no decompositions.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qtilt/path_algebra.hpp"

namespace oracle {

using Row = std::vector<uint8_t>;
using Mat = std::vector<Row>;

inline Row to_row(const qtilt::Matrix& m) {
  Row r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r[j] = static_cast<uint8_t>(m(0, j) & 1);
  return r;
}

/// x * b_j computed from the structure constants b_k * b_j.
inline Row times_basis(const qtilt::QuotientAlgebra& a, const Row& x, std::size_t j) {
  const std::size_t n = a.dimension();
  Row w(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!x[k]) continue;
    for (std::size_t c = 0; c < n; ++c) w[c] ^= static_cast<uint8_t>(a.right_mult(j)(k, c) & 1);
  }
  return w;
}

/// Row echelon basis of a list of vectors (plain Gauss-Jordan, one bit per byte).
struct Echelon {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;

  // Reduces v against the basis; returns true if v was independent (and adds it).
  bool insert(Row v) {
    reduce(v);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c]) {
        for (Row& r : rows) {
          if (r[c]) xor_into(r, v);
        }
        rows.push_back(v);
        pivots.push_back(c);
        return true;
      }
    }
    return false;
  }

  void reduce(Row& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v[pivots[i]]) xor_into(v, rows[i]);
    }
  }

  static void xor_into(Row& a, const Row& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
  }
};

/// A module given by the matrices of all basis elements of A (row-vector action).
struct Module {
  std::size_t dim = 0;
  std::vector<Mat> action;  // action[j]: dim x dim
};

/// e_v A / gA for an element g of e_v A, as a module over A given by structure constants.
inline Module cyclic_quotient(const qtilt::QuotientAlgebra& a, const Row& ev, const Row& g) {
  if (a.field().characteristic() != 2) throw std::invalid_argument("oracle works over GF(2) only");
  const std::size_t n = a.dimension();
  Echelon sub;
  for (std::size_t k = 0; k < n; ++k) sub.insert(times_basis(a, g, k));
  // Complement: vectors of e_v A independent modulo gA.
  Echelon span = sub;
  std::vector<Row> complement;
  for (std::size_t k = 0; k < n; ++k) {
    Row w = times_basis(a, ev, k);
    if (span.insert(w)) complement.push_back(w);
  }
  const std::size_t d = complement.size();
  // Coordinates modulo gA: track how each echelon row of `span` decomposes
  // by solving against [sub; complement] with augmented identity columns.
  std::vector<Row> aug;
  for (const Row& r : sub.rows) {
    Row x = r;
    x.resize(n + d, 0);
    aug.push_back(x);
  }
  for (std::size_t i = 0; i < d; ++i) {
    Row x = complement[i];
    x.resize(n + d, 0);
    x[n + i] = 1;
    aug.push_back(x);
  }
  Echelon solver;
  for (Row& x : aug) {
    // Plain elimination restricted to the first n columns.
    for (std::size_t i = 0; i < solver.rows.size(); ++i) {
      if (x[solver.pivots[i]]) Echelon::xor_into(x, solver.rows[i]);
    }
    std::size_t c = 0;
    while (c < n && !x[c]) ++c;
    if (c == n) throw std::logic_error("oracle: dependent spanning set");
    for (Row& r : solver.rows) {
      if (r[c]) Echelon::xor_into(r, x);
    }
    solver.rows.push_back(x);
    solver.pivots.push_back(c);
  }
  auto coords = [&](Row w) {
    w.resize(n + d, 0);
    for (std::size_t i = 0; i < solver.rows.size(); ++i) {
      if (w[solver.pivots[i]]) Echelon::xor_into(w, solver.rows[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (w[c]) throw std::logic_error("oracle: vector outside e_v A");
    }
    return Row(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
  };

  Module m;
  m.dim = d;
  for (std::size_t j = 0; j < n; ++j) {
    Mat act;
    for (std::size_t i = 0; i < d; ++i) {
      act.push_back(coords(times_basis(a, complement[i], j)));
    }
    m.action.push_back(act);
  }
  return m;
}

inline Module direct_sum(const std::vector<Module>& ms) {
  Module out;
  for (const Module& m : ms) out.dim += m.dim;
  const std::size_t n = ms.empty() ? 0 : ms.front().action.size();
  for (std::size_t j = 0; j < n; ++j) {
    Mat act(out.dim, Row(out.dim, 0));
    std::size_t off = 0;
    for (const Module& m : ms) {
      for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) act[off + r][off + c] = m.action[j][r][c];
      }
      off += m.dim;
    }
    out.action.push_back(act);
  }
  return out;
}

/// dim of {F : R^X_j F = F R^Y_j for all j}: homomorphisms X -> Y by
/// elimination on all dim X * dim Y unknowns. Equations are bit-packed; the
/// basis is kept fully reduced.
inline std::size_t hom_dimension(const Module& x, const Module& y) {
  const std::size_t nx = x.dim, ny = y.dim, unknowns = nx * ny, words = (unknowns + 63) / 64;
  using Bits = std::vector<uint64_t>;
  auto flip = [](Bits& b, std::size_t i) { b[i / 64] ^= uint64_t{1} << (i % 64); };
  auto test = [](const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; };
  auto xor_into = [&](Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < words; ++k) a[k] ^= b[k];
  };
  std::vector<Bits> rows;
  std::vector<long> pivot_row(unknowns, -1);
  for (std::size_t j = 0; j < x.action.size(); ++j) {
    const Mat& rx = x.action[j];
    const Mat& ry = y.action[j];
    for (std::size_t row = 0; row < nx; ++row) {
      for (std::size_t col = 0; col < ny; ++col) {
        // (R^X F)[row][col] + (F R^Y)[row][col] = 0, F[p][q] is unknown p * ny + q
        Bits e(words, 0);
        for (std::size_t p = 0; p < nx; ++p) {
          if (rx[row][p]) flip(e, p * ny + col);
        }
        for (std::size_t q = 0; q < ny; ++q) {
          if (ry[q][col]) flip(e, row * ny + q);
        }
        for (std::size_t c = 0; c < unknowns; ++c) {
          if (test(e, c) && pivot_row[c] >= 0) xor_into(e, rows[static_cast<std::size_t>(pivot_row[c])]);
        }
        std::size_t c = 0;
        while (c < unknowns && !test(e, c)) ++c;
        if (c == unknowns) continue;
        for (Bits& other : rows) {
          if (test(other, c)) xor_into(other, e);
        }
        pivot_row[c] = static_cast<long>(rows.size());
        rows.push_back(std::move(e));
      }
    }
  }
  return unknowns - rows.size();
}

inline std::size_t endomorphism_dimension(const Module& m) { return hom_dimension(m, m); }

}  // namespace oracle
