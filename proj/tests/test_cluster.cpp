#include "doctest.h"
#include "golden/end_dimension.hpp"
#include "algebra_fixture.hpp"
#include "qtilt/cluster.hpp"

using namespace qtilt;

namespace {

using Dims = std::vector<std::size_t>;

CertificateInputs builtin_inputs() {
  CertificateInputs in;
  in.spec_text = std::string(kBuiltinSpecText);
  return in;
}

const Certificate& builtin_certificate() {
  static const Certificate c = certify(builtin_inputs());
  return c;
}

// Dual numbers K[x]/(x^2): A + S is its Auslander generator.
const char* kDualNumbers = "field 2\nquiver 1\narrow a 1 1\nrelations\na*a\n";

}  // namespace

TEST_CASE("shipped module is certified 3-cluster tilting") {
  const Certificate& c = builtin_certificate();
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.algebra_dimension == 36);
  CHECK(c.algebra_selfinjective);
  CHECK(c.generators.generator);
  CHECK(c.generators.cogenerator);
  CHECK(c.rigidity.rigid());
  CHECK(c.rigidity.max_degree == 2);
  CHECK(c.end_dimension == golden::kEndDimension);
  CHECK(c.end_vertices == 7);
  CHECK(c.end_quiver.arrow_total() == 14);
  CHECK(c.gldim.exact);
  CHECK(c.gldim.value == 4);
  CHECK(c.domdim.exact);
  CHECK(c.domdim.value == 4);
  for (const SummandInfo& s : c.summands) {
    CHECK(s.local_endomorphisms);
    CHECK(s.simple_top);
    CHECK(s.multiplicity == 1);
  }
  CHECK(c.inputs.modules == std::vector<std::string>{"P1", "P2", "P3", "M1", "M2", "M3", "M4"});
}

TEST_CASE("order of summands does not matter") {
  CertificateInputs in = builtin_inputs();
  in.modules = {"M4", "M2", "P3", "M1", "P1", "M3", "P2"};
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.end_dimension == golden::kEndDimension);
  CHECK(c.gldim.value == 4);
  CHECK(c.domdim.value == 4);
}

TEST_CASE("regular module is not 3-cluster tilting") {
  CertificateInputs in = builtin_inputs();
  in.modules = {"P1", "P2", "P3"};
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.end_dimension == 36);
  CHECK_FALSE(c.gldim.exact);
  CHECK(c.gldim.value == 33);
  CHECK_FALSE(c.domdim.exact);
  CHECK(c.generators.generator);
  CHECK(c.generators.cogenerator);
}

TEST_CASE("a lone simple is neither generator nor cogenerator") {
  CertificateInputs in = builtin_inputs();
  in.modules = {"M1"};
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Fail);
  CHECK_FALSE(c.generators.generator);
  CHECK_FALSE(c.generators.cogenerator);
}

TEST_CASE("Ext witness for a non-rigid module") {
  CertificateInputs in = builtin_inputs();
  in.modules = {"P1", "P2", "P3", "S1", "S2"};
  in.n = 2;
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.rigidity.max_degree == 1);
  CHECK_FALSE(c.rigidity.rigid());
  auto w = c.rigidity.witness();
  REQUIRE(w.has_value());
  CHECK(std::get<2>(*w) == 1);
  CHECK(c.summands[std::get<0>(*w)].label[0] == 'S');
  // End(A + S1 + S2) has exponentially growing syzygies; the search stops at
  // the size limit before the bound and still reports a valid lower bound.
  CHECK_FALSE(c.gldim.exact);
  CHECK(c.gldim.value > 3);
  CHECK(c.gldim.value < in.bound);
}

TEST_CASE("search bound below n + 1 is inconclusive, not a failure") {
  CertificateInputs in = builtin_inputs();
  in.bound = 3;
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK_FALSE(c.gldim.exact);
  CHECK(c.gldim.value == 3);
}

TEST_CASE("other n values fail on the dimension test") {
  CertificateInputs in = builtin_inputs();
  in.n = 2;
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.rigidity.rigid());
}

TEST_CASE("Auslander generator of the dual numbers is 1-cluster tilting") {
  CertificateInputs in;
  in.spec_text = kDualNumbers;
  in.modules = {"P1", "S1"};
  in.n = 1;
  Certificate c = certify(in);
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.end_dimension == 5);
  CHECK(c.gldim.value == 2);
  CHECK(c.domdim.value == 2);
  CHECK(c.rigidity.max_degree == 0);
}

TEST_CASE("preconditions") {
  CertificateInputs semisimple;
  semisimple.spec_text = "field 2\nquiver 1\n";
  CHECK_THROWS_AS(certify(semisimple), PreconditionError);

  CertificateInputs disconnected;
  disconnected.spec_text = "field 2\nquiver 3\narrow a 1 2\n";
  CHECK_THROWS_AS(certify(disconnected), PreconditionError);

  CertificateInputs unknown = builtin_inputs();
  unknown.modules = {"P1", "X9"};
  CHECK_THROWS_AS(certify(unknown), std::invalid_argument);

  CertificateInputs out_of_range = builtin_inputs();
  out_of_range.modules = {"P4"};
  CHECK_THROWS_AS(certify(out_of_range), std::invalid_argument);

  CertificateInputs zero_n = builtin_inputs();
  zero_n.n = 0;
  CHECK_THROWS_AS(certify(zero_n), std::invalid_argument);

  CertificateInputs repeated = builtin_inputs();
  repeated.modules = {"P1", "P1"};
  CHECK_THROWS_AS(certify(repeated), HintMismatch);
}

TEST_CASE("generator check matches projectives and injectives") {
  const Certificate& c = builtin_certificate();
  for (std::size_t v = 0; v < 3; ++v) {
    REQUIRE(c.generators.projective_match[v].has_value());
    CHECK(c.summands[*c.generators.projective_match[v]].label == "P" + std::to_string(v + 1));
    REQUIRE(c.generators.injective_match[v].has_value());
    // Symmetric algebra: I_v = P_v.
    CHECK(c.summands[*c.generators.injective_match[v]].label == "P" + std::to_string(v + 1));
  }
}
