#include "qtilt/endo.hpp"

#include <algorithm>
#include <numeric>

#include "qtilt/parallel.hpp"

namespace qtilt {

bool SummandDecomposition::verify() const {
  ModuleMap sum = ModuleMap::zero(whole, whole);
  for (const SummandClass& c : classes) {
    if (!has_local_endomorphisms(c.module)) return false;
    for (std::size_t k = 0; k < c.multiplicity(); ++k) {
      if (!is_homomorphism(c.module, whole, c.injections[k])) return false;
      if (!is_homomorphism(whole, c.module, c.projections[k])) return false;
      sum = sum + c.projections[k].then(c.injections[k]);
    }
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      for (std::size_t k = 0; k < classes[a].multiplicity(); ++k) {
        for (std::size_t l = 0; l < classes[b].multiplicity(); ++l) {
          ModuleMap comp = classes[a].injections[k].then(classes[b].projections[l]);
          const bool same = a == b && k == l;
          if (same ? comp != ModuleMap::identity(classes[a].module) : !comp.is_zero()) return false;
        }
      }
    }
  }
  return sum == ModuleMap::identity(whole);
}

namespace {

// Rows chosen greedily so that the selected rows of m are independent.
std::vector<std::size_t> independent_rows(const Matrix& m) {
  RowReducer r(m.field(), m.cols());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (r.insert(m, i)) out.push_back(i);
  }
  return out;
}

std::string default_label(std::size_t k) { return "X" + std::to_string(k + 1); }

// Given injections whose stacked images fill `whole`, derive the projections
// from the inverse of the stacked matrix.
void attach_projections(const RightModule& whole, std::vector<SummandClass>& classes) {
  const uint32_t n = whole.algebra().vertices();
  for (uint32_t v = 0; v < n; ++v) {
    std::vector<Matrix> rows;
    for (const SummandClass& c : classes) {
      for (const ModuleMap& inj : c.injections) rows.push_back(inj.blocks[v]);
    }
    Matrix stack = Matrix::vstack(rows, whole.field(), whole.dim(v));
    auto inv = inverse(stack);
    if (!inv) throw HintMismatch("summands do not reassemble the module");
    std::size_t col = 0;
    for (SummandClass& c : classes) {
      c.projections.resize(c.injections.size());
      for (std::size_t k = 0; k < c.injections.size(); ++k) {
        const std::size_t d = c.module.dim(v);
        c.projections[k].blocks.resize(n);
        c.projections[k].blocks[v] = inv->column_range(col, col + d);
        col += d;
      }
    }
  }
}

}  // namespace

SummandDecomposition decompose(const RightModule& m, const std::vector<RightModule>& hints,
                               const std::vector<std::string>& labels) {
  SummandDecomposition dec{m, {}};
  const std::size_t k = hints.size();
  std::vector<char> local(k);
  parallel_for(k, [&](std::size_t i) { local[i] = has_local_endomorphisms(hints[i]); });
  for (std::size_t i = 0; i < k; ++i) {
    const std::string name = i < labels.size() ? labels[i] : default_label(i);
    if (!local[i]) throw HintMismatch("hint " + name + " is not indecomposable");
    for (std::size_t j = 0; j < i; ++j) {
      if (is_isomorphic(hints[j], hints[i]).map) {
        throw HintMismatch("hints " + (j < labels.size() ? labels[j] : default_label(j)) + " and " + name +
                           " are isomorphic");
      }
    }
  }
  std::vector<SummandClass> classes(k, SummandClass{"", RightModule::zero(m.algebra()), {}, {}});
  parallel_for(k, [&](std::size_t i) {
    HomSpace into = hom_space(hints[i], m);
    HomSpace back = hom_space(m, hints[i]);
    Matrix pairing(m.field(), into.dimension(), back.dimension());
    for (std::size_t a = 0; a < into.dimension(); ++a) {
      for (std::size_t b = 0; b < back.dimension(); ++b) {
        pairing.set(a, b, scalar_part(into.basis[a].then(back.basis[b]).total(hints[i], hints[i])));
      }
    }
    classes[i].label = i < labels.size() ? labels[i] : default_label(i);
    classes[i].module = hints[i];
    for (std::size_t a : independent_rows(pairing)) classes[i].injections.push_back(into.basis[a]);
  });
  std::size_t total = 0;
  for (const SummandClass& c : classes) {
    if (c.multiplicity() == 0) throw HintMismatch("hint " + c.label + " is not a summand");
    total += c.multiplicity() * c.module.total_dimension();
  }
  if (total != m.total_dimension()) throw HintMismatch("hints do not reassemble the module");
  attach_projections(m, classes);
  dec.classes = std::move(classes);
  return dec;
}

SummandDecomposition decompose(const RightModule& m, uint64_t seed) {
  SummandDecomposition dec{m, {}};
  if (m.is_zero()) return dec;
  BasedAlgebra e = endomorphism_algebra(m);
  HomSpace h = hom_space(m, m);
  std::vector<Matrix> idem = primitive_idempotents(e, seed);
  for (const Matrix& coeffs : idem) {
    ModuleMap map = h.combination(coeffs);
    std::vector<Matrix> spans;
    for (const Matrix& b : map.blocks) spans.push_back(row_space(b));
    Submodule image = submodule(m, spans);
    ModuleMap inj{image.basis};
    ModuleMap proj;
    for (uint32_t v = 0; v < m.algebra().vertices(); ++v) {
      Echelon ech = rref(image.basis[v]);
      proj.blocks.push_back(map.blocks[v].select_columns(ech.pivots));
    }
    bool placed = false;
    for (SummandClass& c : dec.classes) {
      IsoResult iso = is_isomorphic(c.module, image.module, seed);
      if (!iso.map) continue;
      // Transport through the isomorphism rep -> image.
      auto back = iso.map->inverse();
      c.injections.push_back(iso.map->then(inj));
      c.projections.push_back(proj.then(*back));
      placed = true;
      break;
    }
    if (!placed) {
      dec.classes.push_back({default_label(dec.classes.size()), image.module, {inj}, {proj}});
    }
  }
  return dec;
}

EndAlgebra endomorphism_algebra(const SummandDecomposition& dec) {
  const std::size_t k = dec.classes.size();
  const Field& f = dec.whole.field();
  EndAlgebra out{BasedAlgebra(f, {}, {}, Matrix(f, 1, 0), {}), {}, {}, {}, {}};
  out.blocks.assign(k, std::vector<HomSpace>(k));
  parallel_for(k * k, [&](std::size_t idx) {
    const std::size_t a = idx / k, b = idx % k;
    out.blocks[a][b] = hom_space(dec.classes[a].module, dec.classes[b].module);
  });
  out.block_offset.assign(k, std::vector<std::size_t>(k, 0));
  std::size_t d = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      out.block_offset[a][b] = d;
      d += out.blocks[a][b].dimension();
    }
  }
  std::vector<std::size_t> rep_off{0};
  for (const SummandClass& c : dec.classes) rep_off.push_back(rep_off.back() + c.module.total_dimension());

  // Basis element j in block (b, c) multiplies rows of blocks (a, b) into block (a, c).
  std::vector<Matrix> right(d, Matrix(f, d, d));
  std::vector<Matrix> rep(d, Matrix(f, rep_off.back(), rep_off.back()));
  std::vector<std::string> labels(d);
  parallel_for(k * k, [&](std::size_t idx) {
    const std::size_t b = idx / k, c = idx % k;
    const HomSpace& hbc = out.blocks[b][c];
    for (std::size_t j = 0; j < hbc.dimension(); ++j) {
      const std::size_t col = out.block_offset[b][c] + j;
      const ModuleMap& g = hbc.basis[j];
      labels[col] = dec.classes[b].label + "->" + dec.classes[c].label + "#" + std::to_string(j + 1);
      rep[col].paste(g.total(dec.classes[b].module, dec.classes[c].module), rep_off[b], rep_off[c]);
      for (std::size_t a = 0; a < k; ++a) {
        const HomSpace& hab = out.blocks[a][b];
        for (std::size_t i = 0; i < hab.dimension(); ++i) {
          Matrix coords = out.blocks[a][c].coordinates(hab.basis[i].then(g));
          right[col].paste(coords, out.block_offset[a][b] + i, out.block_offset[a][c]);
        }
      }
    }
  });
  Matrix unit(f, 1, d);
  for (std::size_t a = 0; a < k; ++a) {
    Matrix e(f, 1, d);
    e.paste(out.blocks[a][a].coordinates(ModuleMap::identity(dec.classes[a].module)), 0, out.block_offset[a][a]);
    unit = unit + e;
    out.vertex_idempotents.push_back(std::move(e));
    out.vertex_labels.push_back(dec.classes[a].label);
  }
  out.algebra = BasedAlgebra(f, std::move(labels), std::move(right), unit, out.vertex_idempotents, std::move(rep));
  return out;
}

// ---------------------------------------------------------------------------

std::size_t ExtQuiver::arrow_total() const {
  std::size_t n = 0;
  for (const auto& row : arrows) n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

ExtQuiver ExtQuiver::opposite() const {
  ExtQuiver q{labels, arrows};
  for (std::size_t i = 0; i < vertices(); ++i) {
    for (std::size_t j = 0; j < vertices(); ++j) q.arrows[i][j] = arrows[j][i];
  }
  return q;
}

bool ExtQuiver::connected() const {
  if (vertices() == 0) return true;
  std::vector<char> seen(vertices(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < vertices(); ++w) {
      if (!seen[w] && (arrows[v][w] || arrows[w][v])) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> ExtQuiver::arrow_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices(); ++i) {
    for (std::size_t j = 0; j < vertices(); ++j) {
      for (std::size_t m = 0; m < arrows[i][j]; ++m) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

ExtQuiver ext_quiver(const BasedAlgebra& alg, const std::vector<Matrix>& idempotents, std::vector<std::string> labels) {
  const std::size_t k = idempotents.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i + 1));
  }
  const Matrix rad = radical_basis(alg);
  const Matrix rad2 = product_space(alg, rad, rad);
  ExtQuiver q{std::move(labels), std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k, 0))};
  std::vector<Matrix> lefts, rights;
  for (const Matrix& e : idempotents) {
    lefts.push_back(alg.left_mult(e));
    rights.push_back(alg.right_mult_by(e));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix sandwich = lefts[i] * rights[j];
      q.arrows[i][j] = rank(rad * sandwich) - rank(rad2 * sandwich);
    }
  }
  return q;
}

ExtQuiver ext_quiver(const BasicAlgebra& alg) {
  const std::size_t k = alg.vertices();
  ExtQuiver q{alg.vertex_labels(), std::vector<std::vector<std::size_t>>(k, std::vector<std::size_t>(k, 0))};
  for (std::size_t a = 0; a < alg.arrow_count(); ++a) {
    const Arrow ar = alg.arrow(a);
    ++q.arrows[ar.source][ar.target];
  }
  return q;
}

std::optional<std::vector<std::size_t>> quiver_isomorphism(const ExtQuiver& a, const ExtQuiver& b) {
  const std::size_t n = a.vertices();
  if (b.vertices() != n || a.arrow_total() != b.arrow_total()) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.arrows[i][j] == b.arrows[perm[i]][perm[j]];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace qtilt
