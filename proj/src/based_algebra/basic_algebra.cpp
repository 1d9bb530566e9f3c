#include "qtilt/basic_algebra.hpp"

#include <stdexcept>

namespace qtilt {

struct BasicAlgebra::Data {
  Field field{2};
  std::string name;
  uint32_t vertices = 0;
  std::vector<std::string> vertex_labels;
  std::vector<Arrow> arrows;
  std::vector<Path> words;
  std::vector<Matrix> right;
  std::vector<Matrix> left;
  std::vector<std::vector<std::vector<std::size_t>>> between;  // [s][t]
  std::vector<std::size_t> from_count;
  std::vector<std::size_t> to_count;
  Matrix word_vectors;

  void index_words() {
    between.assign(vertices, std::vector<std::vector<std::size_t>>(vertices));
    from_count.assign(vertices, 0);
    to_count.assign(vertices, 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      between[words[i].source][words[i].target].push_back(i);
      ++from_count[words[i].source];
      ++to_count[words[i].target];
    }
  }
};

namespace {

std::vector<std::string> default_vertex_labels(uint32_t n) {
  std::vector<std::string> out;
  for (uint32_t v = 0; v < n; ++v) out.push_back(std::to_string(v + 1));
  return out;
}

}  // namespace

BasicAlgebra BasicAlgebra::from_quotient(const QuotientAlgebra& alg, std::string name) {
  for (const PathExpr& g : alg.groebner_basis()) {
    if (g.terms.front().second.length() < 2) {
      throw std::invalid_argument("presentation is not admissible: relation with leading word of length < 2");
    }
  }
  auto d = std::make_shared<Data>();
  d->field = alg.field();
  d->name = std::move(name);
  d->vertices = alg.quiver().vertices;
  d->vertex_labels = default_vertex_labels(d->vertices);
  d->arrows = alg.quiver().arrows;
  d->words = alg.basis();
  const std::size_t n = alg.dimension();
  for (std::size_t a = 0; a < d->arrows.size(); ++a) {
    Path p{d->arrows[a].source, d->arrows[a].target, {static_cast<uint16_t>(a)}};
    auto idx = alg.index_of(p);
    if (!idx) throw std::invalid_argument("presentation is not admissible: arrow " + d->arrows[a].label + " vanishes");
    d->right.push_back(alg.right_mult(*idx));
    Matrix left(alg.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) left.paste(alg.right_mult(i).row(*idx), i, 0);
    d->left.push_back(std::move(left));
  }
  d->index_words();
  return BasicAlgebra(std::move(d), false);
}

BasicAlgebra BasicAlgebra::from_based(const BasedAlgebra& alg, const std::vector<Matrix>& idempotents,
                                      std::vector<std::string> vertex_labels, std::string name) {
  const Field& f = alg.field();
  const std::size_t n = alg.dimension();
  const std::size_t k = idempotents.size();
  const Matrix rad = radical_basis(alg);
  if (n - rad.rows() != k) {
    throw std::invalid_argument("algebra is not basic and split over the given idempotents (dim A/J = " +
                                std::to_string(n - rad.rows()) + ", idempotents = " + std::to_string(k) + ")");
  }
  const Matrix rad2 = product_space(alg, rad, rad);

  auto d = std::make_shared<Data>();
  d->field = f;
  d->name = std::move(name);
  d->vertices = static_cast<uint32_t>(k);
  d->vertex_labels = vertex_labels.empty() ? default_vertex_labels(d->vertices) : std::move(vertex_labels);

  std::vector<Matrix> lefts, rights;
  for (const Matrix& e : idempotents) {
    lefts.push_back(alg.left_mult(e));
    rights.push_back(alg.right_mult_by(e));
  }
  std::vector<Matrix> arrow_vectors;
  for (uint32_t s = 0; s < k; ++s) {
    for (uint32_t t = 0; t < k; ++t) {
      const Matrix sandwich = lefts[s] * rights[t];
      const Matrix block = row_space(rad * sandwich);
      RowReducer span(f, n);
      const Matrix block2 = rad2 * sandwich;
      for (std::size_t r = 0; r < block2.rows(); ++r) span.insert(block2, r);
      for (std::size_t r = 0; r < block.rows(); ++r) {
        if (!span.insert(block, r)) continue;
        d->arrows.push_back({"a" + std::to_string(d->arrows.size() + 1), s, t});
        arrow_vectors.push_back(block.row(r));
      }
    }
  }

  // Breadth-first search for a basis of words.
  RowReducer kept(f, n);
  std::vector<Matrix> vectors;
  std::vector<std::size_t> layer;
  for (uint32_t v = 0; v < k; ++v) {
    kept.insert(idempotents[v]);
    d->words.push_back(Path::vertex(v));
    vectors.push_back(idempotents[v]);
    layer.push_back(d->words.size() - 1);
  }
  std::vector<Matrix> arrow_right;
  for (const Matrix& a : arrow_vectors) arrow_right.push_back(alg.right_mult_by(a));
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t w : layer) {
      for (std::size_t a = 0; a < d->arrows.size(); ++a) {
        if (d->arrows[a].source != d->words[w].target) continue;
        Matrix v = vectors[w] * arrow_right[a];
        if (!kept.insert(v)) continue;
        Path p = d->words[w];
        p.arrows.push_back(static_cast<uint16_t>(a));
        p.target = d->arrows[a].target;
        d->words.push_back(std::move(p));
        vectors.push_back(std::move(v));
        next.push_back(d->words.size() - 1);
      }
    }
    layer = std::move(next);
  }
  if (d->words.size() != n) throw std::logic_error("arrow words do not span the algebra");

  Matrix w(f, n, n);
  for (std::size_t i = 0; i < n; ++i) w.paste(vectors[i], i, 0);
  auto w_inv = inverse(w);
  if (!w_inv) throw std::logic_error("word basis is singular");
  for (std::size_t a = 0; a < d->arrows.size(); ++a) {
    d->right.push_back(w * arrow_right[a] * *w_inv);
    d->left.push_back(w * alg.left_mult(arrow_vectors[a]) * *w_inv);
  }
  d->word_vectors = std::move(w);
  d->index_words();
  return BasicAlgebra(std::move(d), false);
}

const Field& BasicAlgebra::field() const { return d_->field; }
const std::string& BasicAlgebra::name() const { return d_->name; }
uint32_t BasicAlgebra::vertices() const { return d_->vertices; }
const std::vector<std::string>& BasicAlgebra::vertex_labels() const { return d_->vertex_labels; }
std::size_t BasicAlgebra::arrow_count() const { return d_->arrows.size(); }

Arrow BasicAlgebra::arrow(std::size_t a) const {
  Arrow out = d_->arrows[a];
  if (op_) std::swap(out.source, out.target);
  return out;
}

Quiver BasicAlgebra::quiver() const {
  Quiver q;
  q.vertices = d_->vertices;
  for (std::size_t a = 0; a < arrow_count(); ++a) q.arrows.push_back(arrow(a));
  return q;
}

std::size_t BasicAlgebra::dimension() const { return d_->words.size(); }

Path BasicAlgebra::word(std::size_t i) const { return op_ ? reversed(d_->words[i]) : d_->words[i]; }

std::string BasicAlgebra::word_label(std::size_t i) const {
  const Path p = word(i);
  if (p.length() == 0) return "e_" + d_->vertex_labels[p.source];
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) out += "*";
    out += d_->arrows[p.arrows[k]].label;
  }
  return out;
}

const std::vector<std::size_t>& BasicAlgebra::words_between(uint32_t s, uint32_t t) const {
  return op_ ? d_->between[t][s] : d_->between[s][t];
}

std::size_t BasicAlgebra::words_from(uint32_t s) const { return op_ ? d_->to_count[s] : d_->from_count[s]; }

const Matrix& BasicAlgebra::right(std::size_t a) const { return op_ ? d_->left[a] : d_->right[a]; }
const Matrix& BasicAlgebra::left(std::size_t a) const { return op_ ? d_->right[a] : d_->left[a]; }
const Matrix& BasicAlgebra::word_vectors() const { return d_->word_vectors; }

BasicAlgebra BasicAlgebra::opposite() const { return BasicAlgebra(d_, !op_); }

}  // namespace qtilt
