#include "doctest.h"

#include "algebra_fixture.hpp"
#include "qtilt/homalg.hpp"

using namespace qtilt;
using fixture::algebra;

namespace {
using Dims = std::vector<std::size_t>;

BasicAlgebra small(const std::string& text) {
  return BasicAlgebra::from_quotient(QuotientAlgebra::complete(parse_algebra_spec(text)));
}

// Linear A_3 with the length-two path killed: 1 -> 2 -> 3, a*b = 0.
BasicAlgebra nakayama() { return small("field 2\nquiver 3\narrow a 1 2\narrow b 2 3\nrelations\na*b\n"); }
}  // namespace

TEST_CASE("top and radical") {
  auto ms = fixture::summands();
  TopRadical p1 = top_and_radical(ms[0]);
  CHECK(p1.top.dims() == Dims{1, 0, 0});
  CHECK(top_and_radical(ms[4]).top.dims() == Dims{0, 0, 1});
  for (const RightModule& m : ms) CHECK(top_and_radical(m).top.total_dimension() == 1);
  for (uint32_t v = 0; v < 3; ++v) CHECK(top_and_radical(fixture::simple(v)).radical.module.is_zero());
}

TEST_CASE("projective covers") {
  auto ms = fixture::summands();
  Cover s1 = projective_cover(fixture::simple(0));
  CHECK(s1.generators == std::vector<uint32_t>{0});
  CHECK(is_homomorphism(s1.projective, fixture::simple(0), s1.epi));
  Cover m2 = projective_cover(ms[4]);
  CHECK(m2.generators == std::vector<uint32_t>{2});
  CHECK(is_homomorphism(m2.projective, ms[4], m2.epi));
  CHECK(m2.epi.rank() == ms[4].total_dimension());
  CHECK(projective_cover(RightModule::zero(algebra())).generators.empty());
}

TEST_CASE("syzygies") {
  CHECK(syzygy(fixture::simple(0)).dims() == Dims{3, 4, 2});
  for (uint32_t v = 0; v < 3; ++v) CHECK(syzygy(fixture::projective(v)).is_zero());
  RightModule s3 = fixture::simple(2);
  CHECK(is_isomorphic(syzygy(s3, 4), s3).map.has_value());
}

TEST_CASE("resolution bookkeeping") {
  Resolution res = resolve(fixture::simple(1), 6);
  CHECK(res.length() == 6);
  CHECK_FALSE(res.terminated);
  for (std::size_t k = 0; k + 1 < res.length(); ++k) {
    // Exactness: rank d_k + rank d_{k+1} = dim P_k, with d_0 the augmentation.
    RightModule pk = projective_sum(algebra(), res.terms[k]);
    CHECK(res.syzygies[k + 1].total_dimension() + res.syzygies[k].total_dimension() == pk.total_dimension());
  }
  // Minimality: Ext^i(X, S_v) counts generators at v.
  for (uint32_t v = 0; v < 3; ++v) {
    auto e = ext_dims(res, fixture::simple(v), 4);
    for (std::size_t i = 0; i <= 4; ++i) {
      CHECK(e[i] == static_cast<std::size_t>(std::count(res.terms[i].begin(), res.terms[i].end(), v)));
    }
  }
}

TEST_CASE("Ext degree zero is Hom") {
  auto ms = fixture::summands();
  for (const RightModule& x : ms) {
    for (const RightModule& y : ms) CHECK(ext_dim(x, y, 0) == hom_space(x, y).dimension());
  }
}

TEST_CASE("projectives have no higher Ext") {
  auto ms = fixture::summands();
  for (uint32_t v = 0; v < 3; ++v) {
    for (const RightModule& y : ms) CHECK(ext_dim(ms[v], y, 1) == 0);
  }
}

TEST_CASE("Ext duality against the opposite algebra") {
  auto ms = fixture::cyclic_summands();
  ms.push_back(fixture::simple(0));
  for (const RightModule& x : ms) {
    for (const RightModule& y : ms) {
      for (std::size_t i = 1; i <= 2; ++i) CHECK(ext_dim(x, y, i) == ext_dim(dual_module(y), dual_module(x), i));
    }
  }
}

TEST_CASE("projective and injective") {
  for (uint32_t v = 0; v < 3; ++v) {
    CHECK(is_projective(fixture::projective(v)));
    CHECK(is_injective(fixture::projective(v)));
  }
  CHECK_FALSE(is_projective(fixture::simple(2)));
  CHECK_FALSE(is_injective(fixture::simple(2)));
  CHECK(is_projective(RightModule::zero(algebra())));
  CHECK(is_injective(RightModule::zero(algebra())));
}

TEST_CASE("injective envelopes over a symmetric algebra") {
  for (uint32_t v = 0; v < 3; ++v) {
    Envelope env = injective_envelope(fixture::simple(v));
    CHECK(env.injective.algebra() == algebra());
    CHECK(is_homomorphism(fixture::simple(v), env.injective, env.mono));
    CHECK(env.mono.rank() == 1);
    CHECK(is_isomorphic(env.injective, fixture::projective(v)).map.has_value());
  }
  CHECK(injective_envelope(RightModule::zero(algebra())).injective.is_zero());
  RightModule p2 = fixture::projective(1);
  CHECK(injective_envelope(p2).injective.total_dimension() == p2.total_dimension());
}

TEST_CASE("homological dimensions of the selfinjective algebra") {
  for (uint32_t v = 0; v < 3; ++v) {
    CHECK(projective_dimension(fixture::projective(v), 33) == DimBound{0, true});
    CHECK(projective_dimension(fixture::simple(v), 10) == DimBound{10, false});
  }
  CHECK(global_dimension(algebra(), 12) == DimBound{12, false});
  CHECK(dominant_dimension(algebra(), 12) == DimBound{12, false});
}

TEST_CASE("small algebras") {
  BasicAlgebra semisimple = small("field 2\nquiver 2\n");
  CHECK(global_dimension(semisimple, 33) == DimBound{0, true});
  CHECK(dominant_dimension(semisimple, 33) == DimBound{33, false});

  // 1 -> 2 -> 3 with ab = 0: gldim 2, domdim 1 on both sides.
  BasicAlgebra n = nakayama();
  CHECK(global_dimension(n, 33) == DimBound{2, true});
  CHECK(global_dimension(n.opposite(), 33) == DimBound{2, true});
  CHECK(dominant_dimension(n, 33) == dominant_dimension(n.opposite(), 33));

  // Auslander algebra of K[x]/x^2: 1 <-> 2 with a*b = 0; gldim = domdim = 2.
  BasicAlgebra aus = small("field 2\nquiver 2\narrow a 1 2\narrow b 2 1\nrelations\na*b\n");
  CHECK(global_dimension(aus, 33) == DimBound{2, true});
  CHECK(dominant_dimension(aus, 33) == DimBound{2, true});
  CHECK(global_dimension(aus.opposite(), 33) == DimBound{2, true});
  CHECK(dominant_dimension(aus.opposite(), 33) == DimBound{2, true});
}

TEST_CASE("Omega periods over the quaternion-type algebra") {
  for (uint32_t v = 0; v < 3; ++v) {
    auto d = omega_period(fixture::simple(v), 8);
    REQUIRE(d.has_value());
    CHECK(4 % *d == 0);
  }
  CHECK_FALSE(omega_period(fixture::projective(0), 8).has_value());
  for (const RightModule& m : fixture::cyclic_summands()) {
    CHECK(is_isomorphic(syzygy(m, 4), m).map.has_value());
  }
}
