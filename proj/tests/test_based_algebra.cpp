#include "doctest.h"

#include "qtilt/based_algebra.hpp"
#include "qtilt/builtin_spec.hpp"

using namespace qtilt;

namespace {

const QuotientAlgebra& q3a_algebra() {
  static const QuotientAlgebra a = QuotientAlgebra::complete(parse_algebra_spec(kBuiltinSpecText));
  return a;
}

QuotientAlgebra small(const std::string& text) { return QuotientAlgebra::complete(parse_algebra_spec(text)); }

// Full matrix algebra M_2(GF(2)) on basis E11, E12, E21, E22.
BasedAlgebra matrix_algebra() {
  Field f(2);
  auto unit = [&](int i, int j) { return i * 2 + j; };
  std::vector<Matrix> rm(4, Matrix(f, 4, 4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) rm[unit(k, l)].set(unit(i, j), unit(i, l), 1);
  Matrix one = Matrix::from_rows(f, {{1, 0, 0, 1}});
  return BasedAlgebra(f, {"E11", "E12", "E21", "E22"}, rm, one, {one});
}

}  // namespace

TEST_CASE("from_quotient_algebra keeps the vertex idempotents") {
  BasedAlgebra a = BasedAlgebra::from_quotient_algebra(q3a_algebra());
  CHECK(a.dimension() == 36);
  CHECK(a.idempotents().size() == 3);
  CHECK_FALSE(a.check().has_value());

  BasedAlgebra loop = BasedAlgebra::from_quotient_algebra(small("field 2\nquiver 1\narrow x 1 1\nrelations\nx*x\n"));
  CHECK(loop.dimension() == 2);
  CHECK(loop.idempotents().size() == 1);

  BasedAlgebra a2 = BasedAlgebra::from_quotient_algebra(small("field 2\nquiver 2\narrow a 1 2\n"));
  CHECK(a2.dimension() == 3);
  CHECK(a2.idempotents().size() == 2);
}

TEST_CASE("radical of the quaternion-type algebra is the arrow ideal") {
  BasedAlgebra a = BasedAlgebra::from_quotient_algebra(q3a_algebra());
  Matrix j = radical_basis(a);
  CHECK(j.rows() == 33);
  // Spanned by the words of positive length.
  RowReducer words(a.field(), 36);
  for (std::size_t k = 0; k < 36; ++k) {
    if (q3a_algebra().basis()[k].length() > 0) words.insert(Matrix::unit_row(a.field(), 36, k));
  }
  for (std::size_t r = 0; r < j.rows(); ++r) CHECK(words.contains(j, r));
  // Nilpotent.
  Matrix power = j;
  int steps = 1;
  while (!power.is_zero() && steps < 40) {
    power = product_space(a, power, j);
    ++steps;
  }
  CHECK(power.is_zero());
}

TEST_CASE("radical of small algebras") {
  Field f(2);
  BasedAlgebra semisimple = BasedAlgebra::from_quotient_algebra(small("field 2\nquiver 3\n"));
  CHECK(radical_basis(semisimple).rows() == 0);
  CHECK(radical_basis(matrix_algebra()).rows() == 0);
  BasedAlgebra loop = BasedAlgebra::from_quotient_algebra(small("field 3\nquiver 1\narrow x 1 1\nrelations\nx*x*x\n"));
  CHECK(radical_basis(loop).rows() == 2);
  CHECK(is_local(loop));
  CHECK_FALSE(is_local(BasedAlgebra::from_quotient_algebra(small("field 2\nquiver 2\n"))));
}

TEST_CASE("primitive idempotents") {
  BasedAlgebra a = BasedAlgebra::from_quotient_algebra(q3a_algebra());
  CHECK(primitive_idempotents(a).size() == 3);

  BasedAlgebra m2 = matrix_algebra();
  auto es = primitive_idempotents(m2);
  REQUIRE(es.size() == 2);
  CHECK(m2.multiply(es[0], es[1]).is_zero());
  CHECK(m2.multiply(es[1], es[0]).is_zero());
  CHECK(es[0] + es[1] == m2.unit());
  for (const Matrix& e : es) CHECK(m2.multiply(e, e) == e);
}

TEST_CASE("opposite algebra") {
  BasedAlgebra a = BasedAlgebra::from_quotient_algebra(q3a_algebra());
  BasedAlgebra op = a.opposite();
  CHECK_FALSE(op.check().has_value());
  CHECK(radical_basis(op).rows() == 33);
}
