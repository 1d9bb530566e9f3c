#include "qtilt/rmod.hpp"

#include <deque>
#include <mutex>
#include <random>
#include <stdexcept>

namespace qtilt {

struct RightModule::Cache {
  std::once_flag once;
  std::vector<Matrix> words;
};

RightModule::RightModule(BasicAlgebra alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
    : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrows)), cache_(std::make_shared<Cache>()) {
  if (dims_.size() != alg_.vertices()) throw std::invalid_argument("dimension vector length differs from vertex count");
  if (arrows_.size() != alg_.arrow_count()) throw std::invalid_argument("one matrix per arrow required");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow ar = alg_.arrow(a);
    if (arrows_[a].rows() != dims_[ar.source] || arrows_[a].cols() != dims_[ar.target]) {
      throw std::invalid_argument("arrow matrix for " + ar.label + " has the wrong shape");
    }
  }
}

RightModule RightModule::zero(const BasicAlgebra& alg) {
  std::vector<Matrix> arrows(alg.arrow_count(), Matrix(alg.field(), 0, 0));
  return RightModule(alg, std::vector<std::size_t>(alg.vertices(), 0), std::move(arrows));
}

std::size_t RightModule::total_dimension() const {
  std::size_t n = 0;
  for (std::size_t d : dims_) n += d;
  return n;
}

std::size_t RightModule::offset(uint32_t v) const {
  std::size_t n = 0;
  for (uint32_t u = 0; u < v; ++u) n += dims_[u];
  return n;
}

const Matrix& RightModule::word_action(std::size_t i) const {
  std::call_once(cache_->once, [this] {
    std::vector<Matrix> out;
    out.reserve(alg_.dimension());
    for (std::size_t w = 0; w < alg_.dimension(); ++w) {
      const Path p = alg_.word(w);
      Matrix m = Matrix::identity(field(), dims_[p.source]);
      for (uint16_t a : p.arrows) m = m * arrows_[a];
      out.push_back(std::move(m));
    }
    cache_->words = std::move(out);
  });
  return cache_->words[i];
}

bool RightModule::satisfies_relations() const {
  for (std::size_t i = 0; i < alg_.dimension(); ++i) {
    const Path p = alg_.word(i);
    for (std::size_t a = 0; a < alg_.arrow_count(); ++a) {
      const Arrow ar = alg_.arrow(a);
      if (ar.source != p.target) continue;
      Matrix lhs = word_action(i) * arrows_[a];
      Matrix rhs(field(), dims_[p.source], dims_[ar.target]);
      const Matrix& r = alg_.right(a);
      for (std::size_t j = 0; j < alg_.dimension(); ++j) {
        const uint32_t c = r(i, j);
        if (!c) continue;
        const Path q = alg_.word(j);
        if (q.source != p.source || q.target != ar.target) return false;
        rhs = rhs + word_action(j).scaled(c);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ModuleMap ModuleMap::identity(const RightModule& x) {
  ModuleMap f;
  for (std::size_t d : x.dims()) f.blocks.push_back(Matrix::identity(x.field(), d));
  return f;
}

ModuleMap ModuleMap::zero(const RightModule& x, const RightModule& y) {
  ModuleMap f;
  for (uint32_t v = 0; v < x.dims().size(); ++v) f.blocks.emplace_back(x.field(), x.dim(v), y.dim(v));
  return f;
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
  ModuleMap h;
  for (std::size_t v = 0; v < blocks.size(); ++v) h.blocks.push_back(blocks[v] * g.blocks[v]);
  return h;
}

ModuleMap ModuleMap::operator+(const ModuleMap& g) const {
  ModuleMap h;
  for (std::size_t v = 0; v < blocks.size(); ++v) h.blocks.push_back(blocks[v] + g.blocks[v]);
  return h;
}

ModuleMap ModuleMap::scaled(uint32_t c) const {
  ModuleMap h;
  for (const Matrix& b : blocks) h.blocks.push_back(b.scaled(c));
  return h;
}

bool ModuleMap::is_zero() const {
  for (const Matrix& b : blocks) {
    if (!b.is_zero()) return false;
  }
  return true;
}

bool ModuleMap::is_invertible() const {
  for (const Matrix& b : blocks) {
    if (b.rows() != b.cols() || qtilt::rank(b) != b.rows()) return false;
  }
  return true;
}

std::optional<ModuleMap> ModuleMap::inverse() const {
  ModuleMap h;
  for (const Matrix& b : blocks) {
    auto inv = qtilt::inverse(b);
    if (!inv) return std::nullopt;
    h.blocks.push_back(std::move(*inv));
  }
  return h;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const Matrix& b : blocks) r += qtilt::rank(b);
  return r;
}

Matrix ModuleMap::total(const RightModule& x, const RightModule& y) const {
  Matrix out(x.field(), x.total_dimension(), y.total_dimension());
  std::size_t r = 0, c = 0;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    out.paste(blocks[v], r, c);
    r += blocks[v].rows();
    c += blocks[v].cols();
  }
  return out;
}

bool is_homomorphism(const RightModule& x, const RightModule& y, const ModuleMap& f) {
  for (std::size_t a = 0; a < x.arrows().size(); ++a) {
    const Arrow ar = x.algebra().arrow(a);
    if (x.arrow(a) * f.blocks[ar.target] != f.blocks[ar.source] * y.arrow(a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RightModule projective_module(const BasicAlgebra& alg, uint32_t v) {
  if (v >= alg.vertices()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dims;
  for (uint32_t t = 0; t < alg.vertices(); ++t) dims.push_back(alg.words_between(v, t).size());
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    const auto& rows = alg.words_between(v, ar.source);
    const auto& cols = alg.words_between(v, ar.target);
    arrows.push_back(alg.right(a).select_rows(rows).select_columns(cols));
  }
  return RightModule(alg, std::move(dims), std::move(arrows));
}

RightModule simple_module(const BasicAlgebra& alg, uint32_t v) {
  if (v >= alg.vertices()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> dims(alg.vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    arrows.emplace_back(alg.field(), dims[ar.source], dims[ar.target]);
  }
  return RightModule(alg, std::move(dims), std::move(arrows));
}

RightModule cyclic_quotient(const BasicAlgebra& alg, uint32_t v, const Matrix& x) {
  RightModule p = projective_module(alg, v);
  std::vector<bool> from_v(alg.dimension(), false);
  std::vector<Matrix> gens;
  for (uint32_t t = 0; t < alg.vertices(); ++t) {
    const auto& idx = alg.words_between(v, t);
    for (std::size_t i : idx) from_v[i] = true;
    gens.push_back(x.select_columns(idx));
  }
  for (std::size_t i = 0; i < alg.dimension(); ++i) {
    if (!from_v[i] && x(0, i) != 0) throw std::invalid_argument("element does not lie in e_v A");
  }
  Submodule sub = generated_submodule(p, gens);
  return quotient(p, sub.basis).module;
}

Submodule generated_submodule(const RightModule& x, const std::vector<Matrix>& generators) {
  const BasicAlgebra& alg = x.algebra();
  std::vector<RowReducer> spans;
  for (uint32_t v = 0; v < alg.vertices(); ++v) spans.emplace_back(x.field(), x.dim(v));
  std::deque<std::pair<uint32_t, Matrix>> queue;
  for (uint32_t v = 0; v < alg.vertices(); ++v) {
    for (std::size_t r = 0; r < generators[v].rows(); ++r) {
      Matrix row = generators[v].row(r);
      if (spans[v].insert(row)) queue.emplace_back(v, std::move(row));
    }
  }
  while (!queue.empty()) {
    auto [s, vec] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
      const Arrow ar = alg.arrow(a);
      if (ar.source != s) continue;
      Matrix img = vec * x.arrow(a);
      if (spans[ar.target].insert(img)) queue.emplace_back(ar.target, std::move(img));
    }
  }
  std::vector<Matrix> bases;
  for (auto& s : spans) bases.push_back(s.basis());
  return submodule(x, bases);
}

Submodule submodule(const RightModule& x, const std::vector<Matrix>& spans) {
  const BasicAlgebra& alg = x.algebra();
  std::vector<Matrix> bases;
  std::vector<std::vector<std::size_t>> pivots;
  std::vector<std::size_t> dims;
  for (uint32_t v = 0; v < alg.vertices(); ++v) {
    Echelon e = rref(spans[v].cols() == x.dim(v) ? spans[v] : Matrix(x.field(), 0, x.dim(v)));
    bases.push_back(e.form.row_range(0, e.pivots.size()));
    dims.push_back(e.pivots.size());
    pivots.push_back(std::move(e.pivots));
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    Matrix img = bases[ar.source] * x.arrow(a);
    Matrix coords = img.select_columns(pivots[ar.target]);
    if (coords * bases[ar.target] != img) throw std::invalid_argument("subspace is not closed under the arrows");
    arrows.push_back(std::move(coords));
  }
  return {RightModule(alg, std::move(dims), std::move(arrows)), std::move(bases)};
}

QuotientModule quotient(const RightModule& x, const std::vector<Matrix>& spans) {
  const BasicAlgebra& alg = x.algebra();
  const Field& f = x.field();
  ModuleMap proj;
  std::vector<std::vector<std::size_t>> kept;
  std::vector<std::size_t> dims;
  for (uint32_t v = 0; v < alg.vertices(); ++v) {
    Echelon e = rref(spans[v].rows() ? spans[v] : Matrix(f, 0, x.dim(v)));
    std::vector<bool> is_pivot(x.dim(v), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> np;
    for (std::size_t c = 0; c < x.dim(v); ++c) {
      if (!is_pivot[c]) np.push_back(c);
    }
    Matrix pi(f, x.dim(v), np.size());
    for (std::size_t k = 0; k < np.size(); ++k) pi.set(np[k], k, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      for (std::size_t k = 0; k < np.size(); ++k) {
        if (uint32_t c = e.form(r, np[k])) pi.set(e.pivots[r], k, f.neg(c));
      }
    }
    dims.push_back(np.size());
    proj.blocks.push_back(std::move(pi));
    kept.push_back(std::move(np));
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    arrows.push_back((x.arrow(a) * proj.blocks[ar.target]).select_rows(kept[ar.source]));
  }
  return {RightModule(alg, std::move(dims), std::move(arrows)), std::move(proj)};
}

DirectSum direct_sum(const BasicAlgebra& alg, const std::vector<RightModule>& parts) {
  const Field& f = alg.field();
  std::vector<std::size_t> dims(alg.vertices(), 0);
  for (const RightModule& p : parts) {
    if (!(p.algebra() == alg)) throw std::invalid_argument("direct sum of modules over different algebras");
    for (uint32_t v = 0; v < alg.vertices(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const RightModule& p : parts) blocks.push_back(p.arrow(a));
    const Arrow ar = alg.arrow(a);
    Matrix m(f, dims[ar.source], dims[ar.target]);
    std::size_t r = 0, c = 0;
    for (const Matrix& b : blocks) {
      m.paste(b, r, c);
      r += b.rows();
      c += b.cols();
    }
    arrows.push_back(std::move(m));
  }
  RightModule sum(alg, dims, std::move(arrows));
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offsets(alg.vertices(), 0);
  for (const RightModule& p : parts) {
    ModuleMap inj, proj;
    for (uint32_t v = 0; v < alg.vertices(); ++v) {
      Matrix i(f, p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) i.set(k, offsets[v] + k, 1);
      proj.blocks.push_back(i.transpose());
      inj.blocks.push_back(std::move(i));
      offsets[v] += p.dim(v);
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

RightModule dual_module(const RightModule& x) {
  std::vector<Matrix> arrows;
  for (const Matrix& m : x.arrows()) arrows.push_back(m.transpose());
  return RightModule(x.algebra().opposite(), x.dims(), std::move(arrows));
}

ModuleMap dual_map(const ModuleMap& f) {
  ModuleMap g;
  for (const Matrix& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

// ---------------------------------------------------------------------------

Matrix HomSpace::coordinates(const ModuleMap& f) const {
  std::vector<uint32_t> flat;
  for (const Matrix& b : f.blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) flat.push_back(b(r, c));
    }
  }
  std::vector<uint32_t> out;
  for (std::size_t c : free_columns) out.push_back(flat[c]);
  const Field f2 = f.blocks.empty() ? Field(2) : f.blocks.front().field();
  return Matrix::row_vector(f2, out);
}

ModuleMap HomSpace::combination(const Matrix& coeffs) const {
  ModuleMap out = basis.front().scaled(0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (uint32_t c = coeffs(0, k)) out = out + basis[k].scaled(c);
  }
  return out;
}

HomSpace hom_space(const RightModule& x, const RightModule& y) {
  const BasicAlgebra& alg = x.algebra();
  const Field& f = x.field();
  const uint32_t n = alg.vertices();
  std::vector<std::size_t> off(n + 1, 0);
  for (uint32_t v = 0; v < n; ++v) off[v + 1] = off[v] + x.dim(v) * y.dim(v);
  const std::size_t unknowns = off[n];
  std::size_t equations = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    equations += x.dim(ar.source) * y.dim(ar.target);
  }
  Matrix sys(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    const Matrix& xa = x.arrow(a);
    const Matrix& ya = y.arrow(a);
    const std::size_t s = ar.source, t = ar.target;
    for (std::size_t i = 0; i < x.dim(s); ++i) {
      for (std::size_t j = 0; j < y.dim(t); ++j, ++row) {
        // (X_a f_t)[i][j] - (f_s Y_a)[i][j] = 0
        for (std::size_t k = 0; k < x.dim(t); ++k) {
          if (uint32_t c = xa(i, k)) {
            const std::size_t col = off[t] + k * y.dim(t) + j;
            sys.set(row, col, f.add(sys(row, col), c));
          }
        }
        for (std::size_t k = 0; k < y.dim(s); ++k) {
          if (uint32_t c = ya(k, j)) {
            const std::size_t col = off[s] + i * y.dim(s) + k;
            sys.set(row, col, f.sub(sys(row, col), c));
          }
        }
      }
    }
  }
  Nullspace ns = nullspace(sys);
  HomSpace h;
  h.free_columns = std::move(ns.free);
  for (std::size_t k = 0; k < ns.basis.rows(); ++k) {
    ModuleMap m;
    for (uint32_t v = 0; v < n; ++v) {
      Matrix b(f, x.dim(v), y.dim(v));
      for (std::size_t i = 0; i < x.dim(v); ++i) {
        for (std::size_t j = 0; j < y.dim(v); ++j) {
          if (uint32_t c = ns.basis(k, off[v] + i * y.dim(v) + j)) b.set(i, j, c);
        }
      }
      m.blocks.push_back(std::move(b));
    }
    h.basis.push_back(std::move(m));
  }
  return h;
}

BasedAlgebra endomorphism_algebra(const RightModule& x) {
  const Field& f = x.field();
  HomSpace h = hom_space(x, x);
  const std::size_t d = h.dimension();
  std::vector<Matrix> rm(d, Matrix(f, d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) rm[j].paste(h.coordinates(h.basis[i].then(h.basis[j])), i, 0);
  }
  std::vector<std::string> labels;
  std::vector<Matrix> rep;
  for (std::size_t k = 0; k < d; ++k) {
    labels.push_back("h" + std::to_string(k + 1));
    rep.push_back(h.basis[k].total(x, x));
  }
  Matrix unit = h.coordinates(ModuleMap::identity(x));
  return BasedAlgebra(f, std::move(labels), std::move(rm), unit, {unit}, std::move(rep));
}

bool has_local_endomorphisms(const RightModule& x) {
  if (x.is_zero()) return false;
  return is_local(endomorphism_algebra(x));
}

IsoResult is_isomorphic(const RightModule& x, const RightModule& y, uint64_t seed) {
  if (x.dims() != y.dims()) return {std::nullopt, true};
  if (x.is_zero()) return {ModuleMap::identity(x), true};
  HomSpace h = hom_space(x, y);
  if (h.dimension() == 0) return {std::nullopt, true};
  for (const ModuleMap& m : h.basis) {
    if (m.is_invertible()) return {m, true};
  }
  if (has_local_endomorphisms(x)) return {std::nullopt, true};
  const Field& f = x.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> coeff(0, f.characteristic() - 1);
  for (int trial = 0; trial < 64; ++trial) {
    Matrix c(f, 1, h.dimension());
    for (std::size_t k = 0; k < h.dimension(); ++k) c.set(0, k, coeff(rng));
    ModuleMap m = h.combination(c);
    if (m.is_invertible()) return {m, true};
  }
  // Exhaustive search when the space is small.
  uint64_t total = 1;
  for (std::size_t k = 0; k < h.dimension() && total <= (1u << 16); ++k) total *= f.characteristic();
  if (total > (1u << 16)) return {std::nullopt, false};
  for (uint64_t code = 1; code < total; ++code) {
    Matrix c(f, 1, h.dimension());
    uint64_t rest = code;
    for (std::size_t k = 0; k < h.dimension(); ++k) {
      c.set(0, k, static_cast<uint32_t>(rest % f.characteristic()));
      rest /= f.characteristic();
    }
    ModuleMap m = h.combination(c);
    if (m.is_invertible()) return {m, true};
  }
  return {std::nullopt, true};
}

uint32_t scalar_part(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw std::invalid_argument("scalar_part needs a nonempty square matrix");
  const uint32_t p = f.characteristic();
  if (n % p != 0) {
    uint32_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = f.add(tr, m(i, i));
    return f.mul(tr, f.inv(static_cast<uint32_t>(n % p)));
  }
  if (p > (1u << 16)) throw std::invalid_argument("scalar_part: characteristic too large for eigenvalue search");
  for (uint32_t lambda = 0; lambda < p; ++lambda) {
    if (rank(m - Matrix::identity(f, n).scaled(lambda)) < n) return lambda;
  }
  throw std::logic_error("scalar_part: no eigenvalue in the prime field");
}

std::size_t multiplicity(const RightModule& l, const RightModule& x) {
  HomSpace into = hom_space(l, x);
  HomSpace back = hom_space(x, l);
  Matrix pairing(l.field(), into.dimension(), back.dimension());
  for (std::size_t k = 0; k < into.dimension(); ++k) {
    for (std::size_t j = 0; j < back.dimension(); ++j) {
      pairing.set(k, j, scalar_part(into.basis[k].then(back.basis[j]).total(l, l)));
    }
  }
  return rank(pairing);
}

}  // namespace qtilt
