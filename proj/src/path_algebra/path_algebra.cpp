#include "qtilt/path_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace qtilt {

NotFiniteDimensional::NotFiniteDimensional(std::size_t bound, std::vector<std::string> frontier)
    : std::runtime_error("not finite-dimensional at cap " + std::to_string(bound) + " (" +
                         std::to_string(frontier.size()) + " normal words at the frontier)"),
      bound_(bound),
      frontier_(std::move(frontier)) {}

namespace {

using Poly = std::map<Path, uint32_t, DegLex>;

Poly to_poly(const PathExpr& e) {
  Poly p;
  for (const auto& [c, w] : e.terms) p[w] = c;
  return p;
}

PathExpr to_expr(const Poly& p) {
  PathExpr e;
  for (auto it = p.rbegin(); it != p.rend(); ++it) e.terms.emplace_back(it->second, it->first);
  return e;
}

const Path& tip(const PathExpr& e) { return e.terms.front().second; }

void make_monic(PathExpr& e, const Field& f) {
  const uint32_t inv = f.inv(e.terms.front().first);
  for (auto& t : e.terms) t.first = f.mul(t.first, inv);
}

// Vertex reached after the first k arrows of p.
uint32_t vertex_at(const Path& p, std::size_t k, const Quiver& q) {
  if (k == 0) return p.source;
  return q.arrows[p.arrows[k - 1]].target;
}

Path subpath(const Path& p, std::size_t begin, std::size_t end, const Quiver& q) {
  Path out{vertex_at(p, begin, q), vertex_at(p, end, q), {}};
  out.arrows.assign(p.arrows.begin() + begin, p.arrows.begin() + end);
  return out;
}

// Position where `w` occurs as a subword of `p`, if any. A length-0 word e_v
// occurs wherever p visits vertex v.
std::optional<std::size_t> find_subword(const Path& p, const Path& w, const Quiver& q) {
  if (w.arrows.empty()) {
    for (std::size_t k = 0; k <= p.arrows.size(); ++k) {
      if (vertex_at(p, k, q) == w.source) return k;
    }
    return std::nullopt;
  }
  if (w.arrows.size() > p.arrows.size()) return std::nullopt;
  auto it = std::search(p.arrows.begin(), p.arrows.end(), w.arrows.begin(), w.arrows.end());
  if (it == p.arrows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.arrows.begin());
}

class Reducer {
 public:
  Reducer(const Quiver& q, const Field& f, const std::vector<PathExpr>& gb) : q_(q), f_(f), gb_(gb) {}

  // Full reduction; `skip` excludes one basis element (for interreduction).
  PathExpr reduce(const PathExpr& e, std::optional<std::size_t> skip = std::nullopt) const {
    Poly work = to_poly(e);
    Poly done;
    while (!work.empty()) {
      auto top = std::prev(work.end());
      const Path word = top->first;
      const uint32_t coeff = top->second;
      bool reduced = false;
      for (std::size_t g = 0; g < gb_.size() && !reduced; ++g) {
        if (skip && *skip == g) continue;
        const Path& lead = tip(gb_[g]);
        auto pos = find_subword(word, lead, q_);
        if (!pos) continue;
        const Path u = subpath(word, 0, *pos, q_);
        const Path v = subpath(word, *pos + lead.arrows.size(), word.arrows.size(), q_);
        // word - coeff * u*g*v cancels the top term
        for (const auto& [gc, gw] : gb_[g].terms) {
          Path t = concat(concat(u, gw), v);
          uint32_t& slot = work[t];
          slot = f_.sub(slot, f_.mul(coeff, gc));
          if (slot == 0) work.erase(t);
        }
        reduced = true;
      }
      if (!reduced) {
        done[word] = coeff;
        work.erase(word);
      }
    }
    return to_expr(done);
  }

 private:
  const Quiver& q_;
  const Field& f_;
  const std::vector<PathExpr>& gb_;
};

// Reduce every element by the others until nothing changes, then sort by tip.
void interreduce(std::vector<PathExpr>& gb, const Quiver& q, const Field& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      Reducer r(q, f, gb);
      PathExpr red = r.reduce(gb[i], i);
      if (red.is_zero()) {
        gb.erase(gb.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      make_monic(red, f);
      if (!(red == gb[i])) {
        gb[i] = std::move(red);
        changed = true;
        break;
      }
    }
  }
  std::sort(gb.begin(), gb.end(), [](const PathExpr& a, const PathExpr& b) { return DegLex{}(tip(a), tip(b)); });
}

struct Obstruction {
  std::size_t f, g, overlap;  // suffix of tip(f) of length `overlap` equals prefix of tip(g)
  Path word;
};

std::vector<Obstruction> obstructions(const std::vector<PathExpr>& gb) {
  std::vector<Obstruction> out;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Path& a = tip(gb[i]);
    for (std::size_t j = 0; j < gb.size(); ++j) {
      const Path& b = tip(gb[j]);
      const std::size_t max_k = std::min(a.arrows.size(), b.arrows.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!std::equal(a.arrows.end() - static_cast<std::ptrdiff_t>(k), a.arrows.end(), b.arrows.begin())) continue;
        Path w = a;
        w.arrows.insert(w.arrows.end(), b.arrows.begin() + static_cast<std::ptrdiff_t>(k), b.arrows.end());
        w.target = b.target;
        out.push_back({i, j, k, std::move(w)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Obstruction& x, const Obstruction& y) {
    return DegLex{}(x.word, y.word);
  });
  return out;
}

PathExpr s_polynomial(const std::vector<PathExpr>& gb, const Obstruction& ob, const Quiver& q, const Field& f) {
  const Path& a = tip(gb[ob.f]);
  const Path& b = tip(gb[ob.g]);
  const Path u = subpath(a, 0, a.arrows.size() - ob.overlap, q);
  const Path v = subpath(b, ob.overlap, b.arrows.size(), q);
  PathExpr s;
  for (const auto& [c, w] : gb[ob.f].terms) s.terms.emplace_back(c, concat(w, v));
  for (const auto& [c, w] : gb[ob.g].terms) s.terms.emplace_back(f.neg(c), concat(u, w));
  s.canonicalize(f);
  return s;
}

std::string key_of(const PathExpr& a, const PathExpr& b, std::size_t k, const Quiver& q) {
  return to_string(a, q) + "|" + to_string(b, q) + "|" + std::to_string(k);
}

// Normal words of length <= bound, in DegLex order.
std::vector<Path> normal_words(const std::vector<PathExpr>& gb, const Quiver& q, std::size_t bound) {
  auto killed_vertex = [&](uint32_t v) {
    return std::any_of(gb.begin(), gb.end(), [&](const PathExpr& g) {
      return tip(g).arrows.empty() && tip(g).source == v;
    });
  };
  auto has_tip_suffix = [&](const Path& p) {
    for (const PathExpr& g : gb) {
      const Path& t = tip(g);
      if (t.arrows.empty()) {
        if (t.source == p.target) return true;
        continue;
      }
      if (t.arrows.size() <= p.arrows.size() &&
          std::equal(t.arrows.rbegin(), t.arrows.rend(), p.arrows.rbegin())) {
        return true;
      }
    }
    return false;
  };
  std::vector<Path> out;
  std::vector<Path> layer;
  for (uint32_t v = 0; v < q.vertices; ++v) {
    if (!killed_vertex(v)) layer.push_back(Path::vertex(v));
  }
  for (std::size_t len = 0; !layer.empty(); ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == bound) break;
    std::vector<Path> next;
    for (const Path& w : layer) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != w.target) continue;
        Path x = w;
        x.arrows.push_back(static_cast<uint16_t>(a));
        x.target = q.arrows[a].target;
        if (!has_tip_suffix(x)) next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

}  // namespace

QuotientAlgebra QuotientAlgebra::complete(const Quiver& q, const Field& f, const std::vector<PathExpr>& relations,
                                          const GroebnerOptions& opts) {
  QuotientAlgebra alg;
  alg.quiver_ = q;
  alg.field_ = f;
  alg.relations_ = relations;

  std::vector<PathExpr> gb;
  for (PathExpr r : relations) {
    r.canonicalize(f);
    if (r.is_zero()) continue;
    make_monic(r, f);
    gb.push_back(std::move(r));
  }
  interreduce(gb, q, f);

  std::set<std::string> processed;
  std::size_t bound = std::max<std::size_t>(1, std::min(opts.initial_degree_bound, opts.hard_cap));
  for (;;) {
    ++alg.stats_.rounds;
    bool overflow = false;
    bool changed = true;
    while (changed) {
      changed = false;
      overflow = false;
      for (const Obstruction& ob : obstructions(gb)) {
        if (ob.word.arrows.size() > bound) {
          overflow = true;
          continue;
        }
        const std::string key = key_of(gb[ob.f], gb[ob.g], ob.overlap, q);
        if (processed.count(key)) continue;
        processed.insert(key);
        ++alg.stats_.obstructions;
        PathExpr s = Reducer(q, f, gb).reduce(s_polynomial(gb, ob, q, f));
        if (s.is_zero()) continue;
        make_monic(s, f);
        gb.push_back(std::move(s));
        interreduce(gb, q, f);
        changed = true;
        break;
      }
    }
    std::vector<Path> words = normal_words(gb, q, bound);
    const bool frontier_empty = words.empty() || words.back().arrows.size() < bound;
    if (!overflow && frontier_empty) {
      alg.gb_ = std::move(gb);
      alg.basis_ = std::move(words);
      alg.stats_.degree_bound = bound;
      break;
    }
    if (bound >= opts.hard_cap) {
      std::vector<std::string> frontier;
      for (const Path& w : words) {
        if (w.arrows.size() == bound && frontier.size() < 16) frontier.push_back(to_string(w, q));
      }
      throw NotFiniteDimensional(bound, std::move(frontier));
    }
    bound = std::min(bound * 2, opts.hard_cap);
  }

  const std::size_t n = alg.basis_.size();
  for (std::size_t i = 0; i < n; ++i) alg.index_.emplace(alg.basis_[i], i);
  alg.right_mult_.assign(n, Matrix(f, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Path& a = alg.basis_[i];
      const Path& b = alg.basis_[j];
      if (a.target != b.source) continue;
      Matrix v = alg.normal_form(concat(a, b));
      for (std::size_t k = 0; k < n; ++k) {
        if (uint32_t c = v(0, k)) alg.right_mult_[j].set(i, k, c);
      }
    }
  }
  return alg;
}

std::optional<std::size_t> QuotientAlgebra::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> QuotientAlgebra::basis_labels() const {
  std::vector<std::string> out;
  for (const Path& p : basis_) out.push_back(to_string(p, quiver_));
  return out;
}

PathExpr QuotientAlgebra::reduce(const PathExpr& e) const { return Reducer(quiver_, field_, gb_).reduce(e); }

Matrix QuotientAlgebra::normal_form(const PathExpr& e) const {
  PathExpr r = reduce(e);
  Matrix v(field_, 1, basis_.size());
  for (const auto& [c, w] : r.terms) {
    auto idx = index_of(w);
    if (!idx) throw std::logic_error("normal form produced a non-basis word " + to_string(w, quiver_));
    v.set(0, *idx, c);
  }
  return v;
}

Matrix QuotientAlgebra::normal_form(const Path& p) const {
  PathExpr e;
  e.terms.emplace_back(1, p);
  return normal_form(e);
}

PathExpr QuotientAlgebra::to_expr(const Matrix& v) const {
  PathExpr e;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (uint32_t c = v(0, k)) e.terms.emplace_back(c, basis_[k]);
  }
  e.canonicalize(field_);
  return e;
}

Matrix QuotientAlgebra::multiply(const Matrix& a, const Matrix& b) const {
  Matrix out(field_, 1, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (uint32_t c = b(0, j)) {
      Matrix t = a * right_mult_[j];
      out.add_row(0, t, 0, c);
    }
  }
  return out;
}

Matrix QuotientAlgebra::one() const {
  Matrix v(field_, 1, basis_.size());
  for (uint32_t i = 0; i < quiver_.vertices; ++i) {
    if (auto idx = index_of(Path::vertex(i))) v.set(0, *idx, 1);
  }
  return v;
}

QuotientAlgebra QuotientAlgebra::opposite(const GroebnerOptions& opts) const {
  std::vector<PathExpr> rels;
  for (const PathExpr& r : relations_) {
    PathExpr o;
    for (const auto& [c, w] : r.terms) o.terms.emplace_back(c, reversed(w));
    o.canonicalize(field_);
    rels.push_back(std::move(o));
  }
  return complete(quiver_.opposite(), field_, rels, opts);
}

}  // namespace qtilt
