#include <random>

#include "doctest.h"
#include "algebra_fixture.hpp"
#include "qtilt/based_algebra.hpp"
#include "qtilt/matrix.hpp"
#include "qtilt/simd.hpp"

using namespace qtilt;

namespace {

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, Storage s = Storage::Auto) {
  Matrix m(f, rows, cols, s);
  std::uniform_int_distribution<uint32_t> d(0, f.characteristic() - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
  }
  return m;
}

Matrix random_invertible(Field f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

struct ActiveIsa {
  simd::Isa saved = simd::active().isa;
  ~ActiveIsa() { simd::set_active(saved); }
};

}  // namespace

TEST_CASE("SIMD kernels agree with the scalar reference") {
  std::mt19937_64 rng(7);
  for (simd::Isa isa : simd::available()) {
    const simd::Kernels* k = simd::kernels_for(isa);
    REQUIRE(k != nullptr);
    CAPTURE(simd::isa_name(isa));
    for (std::size_t n : {0, 1, 3, 4, 7, 8, 15, 16, 17, 31, 64, 131}) {
      std::vector<uint64_t> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = rng(), b[i] = rng();
      std::vector<uint64_t> want = a, got = a;
      simd::scalar::xor_words(want.data(), b.data(), n);
      k->xor_words(got.data(), b.data(), n);
      CHECK(got == want);

      std::vector<uint32_t> x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<uint32_t>(rng()), y[i] = static_cast<uint32_t>(rng());
      const uint32_t c = static_cast<uint32_t>(rng());
      std::vector<uint32_t> want32 = x, got32 = x;
      simd::scalar::muladd_wrap(want32.data(), y.data(), c, n);
      k->muladd_wrap(got32.data(), y.data(), c, n);
      CHECK(got32 == want32);
    }
  }
}

TEST_CASE("packed and dense storage give the same echelon forms") {
  std::mt19937_64 rng(11);
  const Field f(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 40 + trial * 3, cols = 64 + (trial % 5);
    Matrix packed = random_matrix(f, rows, cols, rng);
    // Force some dependencies.
    if (rows > 4) packed.add_row(rows - 1, packed, 0, 1);
    Matrix dense = packed.with_storage(Storage::Dense);
    REQUIRE(packed.packed());
    REQUIRE(!dense.packed());
    Echelon ep = rref(packed), ed = rref(dense);
    CHECK(ep.pivots == ed.pivots);
    CHECK(ep.form == ed.form.with_storage(Storage::Auto));
    CHECK(rank(packed) == rank(dense));
  }
}

TEST_CASE("every available ISA computes the same ranks and radical") {
  ActiveIsa guard;
  std::mt19937_64 rng(3);
  std::vector<Matrix> ms;
  for (int i = 0; i < 6; ++i) ms.push_back(random_matrix(Field(2), 64, 64, rng));
  std::vector<std::size_t> reference;
  REQUIRE(simd::set_active(simd::Isa::Scalar));
  for (const Matrix& m : ms) reference.push_back(rank(m * m));
  for (simd::Isa isa : simd::available()) {
    REQUIRE(simd::set_active(isa));
    CAPTURE(simd::isa_name(isa));
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(rank(ms[i] * ms[i]) == reference[i]);
    BasedAlgebra a = BasedAlgebra::from_quotient_algebra(fixture::quotient());
    CHECK(radical_basis(a).rows() == 33);
  }
}

TEST_CASE("rank-nullity and nullspace property") {
  std::mt19937_64 rng(5);
  for (uint32_t p : {2u, 3u, 7u}) {
    const Field f(p);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(f, 5 + trial, 12, rng);
      Matrix k = nullspace_basis(m);
      CHECK(rank(m) + k.rows() == m.cols());
      if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
      Matrix l = left_nullspace_basis(m);
      CHECK(rank(m) + l.rows() == m.rows());
      if (l.rows() > 0) CHECK((l * m).is_zero());
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(9);
  for (uint32_t p : {2u, 5u}) {
    const Field f(p);
    for (std::size_t n : {1u, 2u, 17u, 64u, 65u}) {
      Matrix a = random_invertible(f, n, rng);
      auto inv = inverse(a);
      REQUIRE(inv.has_value());
      CHECK(a * *inv == Matrix::identity(f, n));
      CHECK(*inv * a == Matrix::identity(f, n));

      Matrix x0 = random_matrix(f, n, 3, rng);
      auto x = solve_right(a, a * x0);
      REQUIRE(x.has_value());
      CHECK(a * *x == a * x0);
    }
    Matrix singular(f, 3, 3);
    singular.set(0, 0, 1);
    CHECK_FALSE(inverse(singular).has_value());
    Matrix b(f, 3, 1);
    b.set(1, 0, 1);
    CHECK_FALSE(solve_right(singular, b).has_value());
  }
}

TEST_CASE("row reducer matches rank") {
  std::mt19937_64 rng(13);
  Matrix m = random_matrix(Field(3), 30, 20, rng);
  RowReducer red(Field(3), 20);
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m, r);
  CHECK(red.rank() == rank(m));
  for (std::size_t r = 0; r < m.rows(); ++r) CHECK(red.contains(m, r));
}
