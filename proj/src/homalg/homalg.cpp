#include "qtilt/homalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtilt/parallel.hpp"

namespace qtilt {

namespace {

// Row space of X J at each vertex: images of all arrows ending there.
std::vector<Matrix> radical_spans(const RightModule& x) {
  const BasicAlgebra& alg = x.algebra();
  std::vector<Matrix> spans;
  for (uint32_t t = 0; t < alg.vertices(); ++t) {
    std::vector<Matrix> images;
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
      if (alg.arrow(a).target != t) continue;
      images.push_back(x.arrow(a));
    }
    spans.push_back(row_space(Matrix::vstack(images, x.field(), x.dim(t))));
  }
  return spans;
}

}  // namespace

TopRadical top_and_radical(const RightModule& x) {
  std::vector<Matrix> spans = radical_spans(x);
  Submodule rad = submodule(x, spans);
  QuotientModule top = quotient(x, spans);
  return {std::move(top.module), std::move(rad), std::move(top.projection)};
}

RightModule projective_sum(const BasicAlgebra& alg, const std::vector<uint32_t>& generators) {
  std::vector<RightModule> parts;
  for (uint32_t v : generators) parts.push_back(projective_module(alg, v));
  return direct_sum(alg, parts).module;
}

Cover projective_cover(const RightModule& x) {
  const BasicAlgebra& alg = x.algebra();
  const Field& f = x.field();
  std::vector<Matrix> spans = radical_spans(x);
  Cover c{RightModule::zero(alg), {}, {}, {}};
  std::vector<std::size_t> columns;  // which unit vector generates
  for (uint32_t v = 0; v < alg.vertices(); ++v) {
    Echelon e = rref(spans[v]);
    std::vector<bool> is_pivot(x.dim(v), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < x.dim(v); ++j) {
      if (is_pivot[j]) continue;
      c.generators.push_back(v);
      c.generator_images.push_back(Matrix::unit_row(f, x.dim(v), j));
      columns.push_back(j);
    }
  }
  c.projective = projective_sum(alg, c.generators);
  for (uint32_t t = 0; t < alg.vertices(); ++t) {
    Matrix block(f, c.projective.dim(t), x.dim(t));
    std::size_t row = 0;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
      for (std::size_t w : alg.words_between(c.generators[g], t)) {
        block.paste(x.word_action(w).row(columns[g]), row++, 0);
      }
    }
    c.epi.blocks.push_back(std::move(block));
  }
  return c;
}

Submodule cover_kernel(const Cover& c) {
  std::vector<Matrix> spans;
  for (const Matrix& b : c.epi.blocks) spans.push_back(left_nullspace_basis(b));
  return submodule(c.projective, spans);
}

RightModule syzygy(const RightModule& x, std::size_t k) {
  RightModule cur = x;
  for (std::size_t i = 0; i < k && !cur.is_zero(); ++i) cur = cover_kernel(projective_cover(cur)).module;
  return cur;
}

Resolution resolve(const RightModule& x, std::size_t max_terms, std::size_t max_dimension) {
  Resolution res;
  res.syzygies.push_back(x);
  std::vector<Matrix> embedding;  // basis of the current syzygy inside the previous term
  for (std::size_t k = 0; k < max_terms; ++k) {
    const RightModule& cur = res.syzygies.back();
    if (cur.is_zero()) break;
    if (k > 0 && cur.total_dimension() > max_dimension) break;
    Cover c = projective_cover(cur);
    res.terms.push_back(c.generators);
    if (k == 0) {
      res.augmentation = c.generator_images;
    } else {
      std::vector<Matrix> images;
      for (std::size_t g = 0; g < c.generators.size(); ++g) {
        images.push_back(c.generator_images[g] * embedding[c.generators[g]]);
      }
      res.differentials.resize(k + 1);
      res.differentials[k] = std::move(images);
    }
    Submodule kernel = cover_kernel(c);
    embedding = kernel.basis;
    res.syzygies.push_back(std::move(kernel.module));
  }
  res.terminated = res.syzygies.back().is_zero();
  if (res.differentials.size() < res.terms.size()) res.differentials.resize(res.terms.size());
  return res;
}

Matrix induced_hom_map(const Resolution& res, std::size_t k, const RightModule& y) {
  const BasicAlgebra& alg = y.algebra();
  const auto& src = res.terms.at(k - 1);
  const auto& dst = res.terms.at(k);
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (uint32_t v : src) row_off.push_back(row_off.back() + y.dim(v));
  for (uint32_t v : dst) col_off.push_back(col_off.back() + y.dim(v));
  Matrix out(y.field(), row_off.back(), col_off.back());
  for (std::size_t h = 0; h < dst.size(); ++h) {
    const uint32_t t = dst[h];
    const Matrix& image = res.differentials[k][h];
    std::size_t pos = 0;
    for (std::size_t g = 0; g < src.size(); ++g) {
      Matrix block(y.field(), y.dim(src[g]), y.dim(t));
      for (std::size_t w : alg.words_between(src[g], t)) {
        if (uint32_t c = image(0, pos)) block = block + y.word_action(w).scaled(c);
        ++pos;
      }
      out.paste(block, row_off[g], col_off[h]);
    }
  }
  return out;
}

std::vector<std::size_t> ext_dims(const Resolution& res, const RightModule& y, std::size_t max_degree) {
  if (!res.terminated && res.length() < max_degree + 2) {
    throw std::invalid_argument("resolution too short for the requested Ext degree");
  }
  auto hom_dim = [&](std::size_t i) {
    std::size_t n = 0;
    if (i < res.length()) {
      for (uint32_t v : res.terms[i]) n += y.dim(v);
    }
    return n;
  };
  std::vector<std::size_t> ranks(max_degree + 2, 0);
  for (std::size_t i = 1; i < ranks.size() && i < res.length(); ++i) ranks[i] = rank(induced_hom_map(res, i, y));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) out.push_back(hom_dim(i) - ranks[i + 1] - ranks[i]);
  return out;
}

std::size_t ext_dim(const RightModule& x, const RightModule& y, std::size_t degree) {
  return ext_dims(resolve(x, degree + 2), y, degree)[degree];
}

std::vector<std::vector<std::vector<std::size_t>>> ext_table(const std::vector<RightModule>& xs,
                                                             const std::vector<RightModule>& ys,
                                                             std::size_t max_degree) {
  std::vector<Resolution> res(xs.size());
  parallel_for(xs.size(), [&](std::size_t a) { res[a] = resolve(xs[a], max_degree + 2); });
  std::vector<std::vector<std::vector<std::size_t>>> out(xs.size(), std::vector<std::vector<std::size_t>>(ys.size()));
  parallel_for(xs.size() * ys.size(), [&](std::size_t idx) {
    const std::size_t a = idx / ys.size(), b = idx % ys.size();
    std::vector<std::size_t> d = ext_dims(res[a], ys[b], max_degree);
    out[a][b].assign(d.begin() + 1, d.end());
  });
  return out;
}

bool is_projective(const RightModule& x) {
  if (x.is_zero()) return true;
  return projective_cover(x).projective.total_dimension() == x.total_dimension();
}

bool is_injective(const RightModule& x) { return is_projective(dual_module(x)); }

Envelope injective_envelope(const RightModule& x) {
  Cover c = projective_cover(dual_module(x));
  return {dual_module(c.projective), dual_map(c.epi)};
}

std::size_t syzygy_size_limit(const BasicAlgebra& alg) {
  return std::max<std::size_t>(4096, 64 * alg.dimension());
}

DimBound projective_dimension(const RightModule& x, std::size_t bound) {
  if (x.is_zero()) return {0, true};
  Resolution res = resolve(x, bound, syzygy_size_limit(x.algebra()));
  if (res.terminated) return {res.length() - 1, true};
  return {res.length(), false};
}

DimBound global_dimension(const BasicAlgebra& alg, std::size_t bound) {
  std::vector<DimBound> pds(alg.vertices());
  parallel_for(alg.vertices(), [&](std::size_t v) {
    pds[v] = projective_dimension(simple_module(alg, static_cast<uint32_t>(v)), bound);
  });
  // Maximum of the bounds; exact only if every simple has finite dimension.
  DimBound out{0, true};
  for (const DimBound& d : pds) {
    out.value = std::max(out.value, d.value);
    out.exact = out.exact && d.exact;
  }
  return out;
}

DimBound dominant_dimension(const BasicAlgebra& alg, std::size_t bound) {
  const BasicAlgebra op = alg.opposite();
  const uint32_t n = alg.vertices();
  // D(e_w A^op) is the injective hull of the simple at w; is it projective?
  std::vector<char> projective_injective(n);
  parallel_for(n, [&](std::size_t w) {
    projective_injective[w] = is_projective(dual_module(projective_module(op, static_cast<uint32_t>(w))));
  });
  // The minimal injective coresolution of e_v A is the dual of the minimal
  // projective resolution of D(e_v A) over the opposite algebra.
  std::vector<std::optional<std::size_t>> first(n);
  std::vector<std::size_t> checked(n, bound);
  const std::size_t limit = syzygy_size_limit(alg);
  parallel_for(n, [&](std::size_t v) {
    Resolution res = resolve(dual_module(projective_module(alg, static_cast<uint32_t>(v))), bound, limit);
    if (!res.terminated) checked[v] = res.length();
    for (std::size_t k = 0; k < res.length(); ++k) {
      for (uint32_t w : res.terms[k]) {
        if (!projective_injective[w]) {
          first[v] = k;
          return;
        }
      }
    }
  });
  std::optional<std::size_t> best;
  for (const auto& f : first) {
    if (f && (!best || *f < *best)) best = f;
  }
  if (best) return {*best, true};
  return {*std::min_element(checked.begin(), checked.end()), false};
}

std::optional<std::size_t> omega_period(const RightModule& x, std::size_t bound) {
  Resolution res = resolve(x, bound);
  for (std::size_t d = 1; d < res.syzygies.size(); ++d) {
    const RightModule& om = res.syzygies[d];
    if (om.is_zero()) return std::nullopt;
    if (is_isomorphic(om, x).map) return d;
  }
  return std::nullopt;
}

}  // namespace qtilt
