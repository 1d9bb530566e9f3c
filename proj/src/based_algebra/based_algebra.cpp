#include "qtilt/based_algebra.hpp"

#include <random>

#include "qtilt/simd.hpp"

namespace qtilt {

BasedAlgebra::BasedAlgebra(Field f, std::vector<std::string> labels, std::vector<Matrix> right_mult, Matrix unit,
                           std::vector<Matrix> idempotents, std::vector<Matrix> representation)
    : field_(f),
      labels_(std::move(labels)),
      right_mult_(std::move(right_mult)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)),
      rep_(std::move(representation)) {
  if (right_mult_.size() != labels_.size()) throw std::invalid_argument("one structure matrix per basis element");
  if (!rep_.empty() && rep_.size() != labels_.size()) throw std::invalid_argument("one representation matrix per basis element");
}

BasedAlgebra BasedAlgebra::from_quotient_algebra(const QuotientAlgebra& alg) {
  std::vector<Matrix> rm;
  for (std::size_t j = 0; j < alg.dimension(); ++j) rm.push_back(alg.right_mult(j));
  std::vector<Matrix> idem;
  for (uint32_t v = 0; v < alg.quiver().vertices; ++v) {
    if (auto idx = alg.index_of(Path::vertex(v))) idem.push_back(Matrix::unit_row(alg.field(), alg.dimension(), *idx));
  }
  return BasedAlgebra(alg.field(), alg.basis_labels(), std::move(rm), alg.one(), std::move(idem));
}

Matrix BasedAlgebra::multiply(const Matrix& x, const Matrix& y) const {
  Matrix out(field_, 1, dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (uint32_t c = y(0, j)) out.add_row(0, x * right_mult_[j], 0, c);
  }
  return out;
}

Matrix BasedAlgebra::left_mult(const Matrix& x) const {
  Matrix out(field_, dimension(), dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.paste(x * right_mult_[i], i, 0);
  return out;
}

Matrix BasedAlgebra::right_mult_by(const Matrix& x) const {
  Matrix out(field_, dimension(), dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (uint32_t c = x(0, j)) out = out + right_mult_[j].scaled(c);
  }
  return out;
}

std::size_t BasedAlgebra::rep_dimension() const { return rep_.empty() ? dimension() : rep_.front().rows(); }

Matrix BasedAlgebra::represent(const Matrix& x) const {
  if (rep_.empty()) return right_mult_by(x);
  Matrix out(field_, rep_dimension(), rep_dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (uint32_t c = x(0, j)) out = out + rep_[j].scaled(c);
  }
  return out;
}

std::optional<std::string> BasedAlgebra::check() const {
  const std::size_t n = dimension();
  for (std::size_t j = 0; j < n; ++j) {
    Matrix b = Matrix::unit_row(field_, n, j);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) return "unit fails on " + labels_[j];
  }
  Matrix sum(field_, 1, n);
  for (std::size_t a = 0; a < idempotents_.size(); ++a) {
    sum = sum + idempotents_[a];
    for (std::size_t b = 0; b < idempotents_.size(); ++b) {
      Matrix prod = multiply(idempotents_[a], idempotents_[b]);
      if (a == b ? prod != idempotents_[a] : !prod.is_zero()) return "idempotents not orthogonal";
    }
  }
  if (!idempotents_.empty() && sum != unit_) return "idempotents do not sum to the unit";
  std::vector<Matrix> reps;
  for (std::size_t j = 0; j < n; ++j) reps.push_back(represent(Matrix::unit_row(field_, n, j)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = right_mult_[j].row(i);
      if (reps[i] * reps[j] != represent(prod)) return "representation fails on " + labels_[i] + " * " + labels_[j];
    }
  }
  return std::nullopt;
}

BasedAlgebra BasedAlgebra::opposite() const {
  const std::size_t n = dimension();
  std::vector<Matrix> rm(n, Matrix(field_, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rm[j].paste(right_mult_[i].row(j), i, 0);
  }
  std::vector<Matrix> rep;
  if (!rep_.empty()) {
    for (const Matrix& r : rep_) rep.push_back(r.transpose());
  } else {
    // Transposed left-regular matrices give a faithful right representation of the opposite.
    for (std::size_t j = 0; j < n; ++j) rep.push_back(right_mult_[j].transpose());
  }
  return BasedAlgebra(field_, labels_, std::move(rm), unit_, idempotents_, std::move(rep));
}

// ---------------------------------------------------------------------------
// Radical

namespace {

// Integer lift of a GF(p) matrix raised to the power p^i, modulo p^(i+1).
// Over GF(2) this runs on wrapping 32-bit words through the SIMD kernel.
std::vector<uint64_t> lifted_power(const Matrix& m, uint32_t p, std::size_t i, uint64_t modulus) {
  const std::size_t n = m.rows();
  if (p == 2) {
    const auto& k = simd::active();
    std::vector<uint32_t> a(n * n), c(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) a[r * n + s] = m(r, s);
    }
    const uint32_t mask = static_cast<uint32_t>(modulus - 1);
    for (std::size_t step = 0; step < i; ++step) {
      std::fill(c.begin(), c.end(), 0u);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          if (uint32_t v = a[r * n + s]) k.muladd_wrap(&c[r * n], &a[s * n], v, n);
        }
      }
      for (auto& v : c) v &= mask;
      std::swap(a, c);
    }
    return {a.begin(), a.end()};
  }
  auto mul = [&](const std::vector<uint64_t>& x, const std::vector<uint64_t>& y) {
    std::vector<uint64_t> z(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        const uint64_t v = x[r * n + s];
        if (!v) continue;
        for (std::size_t t = 0; t < n; ++t) {
          z[r * n + t] = static_cast<uint64_t>((static_cast<unsigned __int128>(v) * y[s * n + t] + z[r * n + t]) % modulus);
        }
      }
    }
    return z;
  };
  std::vector<uint64_t> a(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) a[r * n + s] = m(r, s);
  }
  for (std::size_t step = 0; step < i; ++step) {
    std::vector<uint64_t> acc = a;
    for (uint32_t e = 1; e < p; ++e) acc = mul(acc, a);
    a = std::move(acc);
  }
  return a;
}

uint32_t trace_functional(const BasedAlgebra& alg, const Matrix& x, std::size_t i) {
  const uint32_t p = alg.field().characteristic();
  Matrix rep = alg.represent(x);
  uint64_t pi = 1;
  for (std::size_t k = 0; k < i; ++k) pi *= p;
  const uint64_t modulus = pi * p;
  std::vector<uint64_t> pw = lifted_power(rep, p, i, modulus);
  uint64_t tr = 0;
  for (std::size_t r = 0; r < rep.rows(); ++r) tr = (tr + pw[r * rep.rows() + r]) % modulus;
  if (tr % pi != 0) throw std::logic_error("trace-form chain: trace not divisible by p^i");
  return static_cast<uint32_t>((tr / pi) % p);
}

}  // namespace

Matrix radical_basis(const BasedAlgebra& alg) {
  const Field& f = alg.field();
  const std::size_t n = alg.dimension();
  const uint32_t p = f.characteristic();
  std::size_t l = 0;
  for (uint64_t pw = p; pw <= alg.rep_dimension(); pw *= p) ++l;

  Matrix ideal = Matrix::identity(f, n);
  std::vector<std::size_t> pivots(n);
  for (std::size_t k = 0; k < n; ++k) pivots[k] = k;

  for (std::size_t i = 0; i <= l && ideal.rows() > 0; ++i) {
    Matrix phi(f, n, 1);
    bool nonzero = false;
    for (std::size_t m = 0; m < ideal.rows(); ++m) {
      if (uint32_t g = trace_functional(alg, ideal.row(m), i)) {
        phi.set(pivots[m], 0, g);
        nonzero = true;
      }
    }
    if (!nonzero) continue;
    Matrix z(f, n, n);
    for (std::size_t j = 0; j < n; ++j) z.paste(alg.right_mult(j) * phi, 0, j);
    Matrix g = ideal * z;
    Matrix coeffs = left_nullspace_basis(g);
    Echelon e = rref(coeffs * ideal);
    ideal = e.form.row_range(0, e.pivots.size());
    pivots = e.pivots;
  }
  return ideal;
}

Matrix product_space(const BasedAlgebra& alg, const Matrix& a, const Matrix& b) {
  RowReducer span(alg.field(), alg.dimension());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    Matrix prod = a * alg.right_mult_by(b.row(r));
    for (std::size_t k = 0; k < prod.rows(); ++k) span.insert(prod, k);
  }
  return span.basis();
}

bool is_local_corner(const BasedAlgebra& alg, const Matrix& e, const Matrix& radical) {
  const Matrix sandwich = alg.left_mult(e) * alg.right_mult_by(e);
  return rank(sandwich) - rank(radical * sandwich) == 1;
}

bool is_local(const BasedAlgebra& alg) { return alg.dimension() - radical_basis(alg).rows() == 1; }

// ---------------------------------------------------------------------------
// Primitive idempotents

namespace {

using Poly = std::vector<uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, const Field& f) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, const Field& f) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const uint32_t lead_inv = f.inv(b.back());
  for (std::size_t d = a.size(); d-- >= b.size();) {
    const uint32_t c = f.mul(a[d], lead_inv);
    q[d - b.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[d - b.size() + 1 + k] = f.sub(a[d - b.size() + 1 + k], f.mul(c, b[k]));
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

uint32_t poly_eval(const Poly& a, uint32_t x, const Field& f) {
  uint32_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

// s with s*a = 1 mod b, for coprime a, b.
Poly poly_inverse_mod(const Poly& a, const Poly& b, const Field& f) {
  Poly r0 = b, r1 = poly_divmod(a, b, f).second;
  Poly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, f);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, f), f);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("polynomials are not coprime");
  const uint32_t c = f.inv(r0[0]);
  for (auto& v : s0) v = f.mul(v, c);
  return poly_divmod(s0, b, f).second;
}

class Splitter {
 public:
  Splitter(const BasedAlgebra& alg, uint64_t seed) : alg_(alg), radical_(radical_basis(alg)), rng_(seed) {}

  void refine(const Matrix& f, std::vector<Matrix>& out) {
    if (f.is_zero()) return;
    const Matrix corner = row_space(alg_.left_mult(f) * alg_.right_mult_by(f));
    const std::size_t top = corner.rows() - rank(radical_ * alg_.left_mult(f) * alg_.right_mult_by(f));
    if (top == 1) {
      out.push_back(f);
      return;
    }
    if (auto e = split(f, corner)) {
      refine(*e, out);
      refine(f - *e, out);
      return;
    }
    throw NonSplitError("non-split semisimple quotient");
  }

 private:
  // A nontrivial idempotent of the corner f A f, if one is found.
  std::optional<Matrix> split(const Matrix& f, const Matrix& corner) {
    const Field& fld = alg_.field();
    if (fld.characteristic() > (1u << 16)) throw NonSplitError("idempotent splitting needs p <= 65536");
    const std::size_t d = corner.rows();
    auto attempt = [&](const Matrix& x) -> std::optional<Matrix> {
      return split_with(f, x);
    };
    for (std::size_t k = 0; k < d; ++k) {
      if (auto e = attempt(corner.row(k))) return e;
    }
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = k + 1; l < d && l < k + 8; ++l) {
        if (auto e = attempt(corner.row(k) + corner.row(l))) return e;
        if (auto e = attempt(alg_.multiply(corner.row(k), corner.row(l)))) return e;
      }
    }
    std::uniform_int_distribution<uint32_t> coeff(0, fld.characteristic() - 1);
    for (int trial = 0; trial < 256; ++trial) {
      Matrix x(fld, 1, alg_.dimension());
      for (std::size_t k = 0; k < d; ++k) {
        if (uint32_t c = coeff(rng_)) x.add_row(0, corner, k, c);
      }
      if (auto e = attempt(x)) return e;
    }
    return std::nullopt;
  }

  std::optional<Matrix> split_with(const Matrix& f, const Matrix& x) {
    const Field& fld = alg_.field();
    // Minimal polynomial of x in the corner, whose identity is f.
    std::vector<Matrix> powers{f};
    RowReducer span(fld, alg_.dimension());
    span.insert(f);
    Poly mu;
    for (;;) {
      Matrix next = alg_.multiply(powers.back(), x);
      if (!span.insert(next)) {
        powers.push_back(next);
        Matrix stack(fld, powers.size(), alg_.dimension());
        for (std::size_t k = 0; k < powers.size(); ++k) stack.paste(powers[k], k, 0);
        Matrix rel = left_nullspace_basis(stack);
        mu = rel.row_values(0);
        trim(mu);
        const uint32_t inv = fld.inv(mu.back());
        for (auto& v : mu) v = fld.mul(v, inv);
        break;
      }
      powers.push_back(next);
    }
    if (mu.size() <= 2) return std::nullopt;
    for (uint32_t lambda = 0; lambda < fld.characteristic(); ++lambda) {
      if (poly_eval(mu, lambda, fld) != 0) continue;
      Poly h = mu;
      Poly root_power = {1};
      const Poly linear = {fld.neg(lambda), 1};
      for (;;) {
        auto [q, r] = poly_divmod(h, linear, fld);
        if (!r.empty()) break;
        h = q;
        root_power = poly_mul(root_power, linear, fld);
      }
      if (h.size() <= 1) return std::nullopt;  // x - lambda f is nilpotent
      // e = v(x) h(x) with v h = 1 mod (t - lambda)^k is the Fitting idempotent.
      Poly v = poly_inverse_mod(h, root_power, fld);
      Poly w = poly_divmod(poly_mul(v, h, fld), mu, fld).second;
      Matrix e(fld, 1, alg_.dimension());
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k]) e.add_row(0, powers[k], 0, w[k]);
      }
      if (e.is_zero() || e == f) return std::nullopt;
      if (alg_.multiply(e, e) != e) throw std::logic_error("Fitting idempotent is not idempotent");
      return e;
    }
    return std::nullopt;
  }

  const BasedAlgebra& alg_;
  Matrix radical_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Matrix> primitive_idempotents(const BasedAlgebra& alg, uint64_t seed) {
  Splitter splitter(alg, seed);
  std::vector<Matrix> out;
  if (alg.idempotents().empty()) {
    splitter.refine(alg.unit(), out);
  } else {
    for (const Matrix& e : alg.idempotents()) splitter.refine(e, out);
  }
  return out;
}

}  // namespace qtilt
