#include "doctest.h"

#include "khw/braid3.hpp"
#include "khw/qa.hpp"

using namespace khw;

namespace {

BraidWord word(int strands, std::initializer_list<std::pair<int, int>> powers) {
  BraidWord w{strands, {}};
  for (auto [g, e] : powers) w.push(g, e);
  return w;
}

} // namespace

TEST_SUITE_BEGIN("qa");

TEST_CASE("unknots certify as leaves") {
  QAResult r = qa_search(unlink(1));
  REQUIRE(r.certified);
  CHECK(r.certificate->kind == QACertificate::UnknotLeaf);
  CHECK(validate_certificate(*r.certificate));
  CHECK(qa_search(closure(word(2, {{1, 1}}))).certified);
  CHECK(qa_search(closure(word(3, {{1, 1}, {2, 1}}))).certified);
  CHECK(qa_search(closure(word(3, {{1, 1}, {2, -1}}))).certified);
  // split unlinks have determinant zero and never certify
  CHECK_FALSE(qa_search(unlink(2)).certified);
  CHECK_FALSE(qa_search(closure(word(2, {{1, 1}, {1, -1}}))).certified);
}

TEST_CASE("alternating diagrams certify as base cases") {
  QAResult r = qa_search(closure(word(2, {{1, 3}})));
  REQUIRE(r.certified);
  CHECK(r.certificate->kind == QACertificate::AlternatingLeaf);
  CHECK(r.certificate->det == 3);
  CHECK(validate_certificate(*r.certificate));
  CHECK(qa_search(closure(word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}))).certified);
}

TEST_CASE("trefoil resolves with additive determinants when forced to recurse") {
  // exercise the recursive branch on a non-alternating QA diagram:
  // h s2^-1 closes to the (2,4) torus link drawn non-alternating
  LinkDiagram d = closure(MurasugiForm{1, MurasugiForm::Power, {}, -1}.to_word());
  REQUIRE_FALSE(is_alternating(d));
  QAResult r = qa_search(d);
  REQUIRE(r.certified);
  CHECK(validate_certificate(*r.certificate));
  CHECK(r.certificate->det == 4);
}

TEST_CASE("tampered certificates fail validation") {
  QAResult r = qa_search(closure(MurasugiForm{1, MurasugiForm::Power, {}, -2}.to_word()));
  REQUIRE(r.certified);
  REQUIRE(r.certificate->kind == QACertificate::Resolution);
  QACertificate bad = *r.certificate;
  bad.det += 1;
  CHECK_FALSE(validate_certificate(bad));
  QACertificate bad2 = *r.certificate;
  bad2.children[0].diagram = bad2.children[0].diagram.mirror();
  CHECK_FALSE(validate_certificate(bad2));
  CHECK(validate_certificate(*r.certificate));
}

TEST_CASE("positive murasugi grid forms with small n certify") {
  std::vector<MurasugiForm> qa_forms = {
      {1, MurasugiForm::Alt, {{1, 1}}, 0},     {1, MurasugiForm::Alt, {{2, 1}}, 0},
      {-1, MurasugiForm::Alt, {{1, 2}}, 0},    {0, MurasugiForm::Alt, {{2, 2}}, 0},
      {1, MurasugiForm::Power, {}, -1},        {1, MurasugiForm::Power, {}, -3},
      {-1, MurasugiForm::Power, {}, 2},        {1, MurasugiForm::Special, {}, -2},
      {0, MurasugiForm::Special, {}, -3},
  };
  for (const auto& f : qa_forms) {
    CAPTURE(f.str());
    REQUIRE(predicted_qa(f));
    QAResult r = qa_search(closure(f.to_word()));
    CHECK(r.certified);
    if (r.certified) CHECK(validate_certificate(*r.certificate));
  }
}

TEST_CASE("search never certifies forms the classification rules out") {
  std::vector<MurasugiForm> non_qa = {
      {2, MurasugiForm::Power, {}, -1},
      {-1, MurasugiForm::Special, {}, -2},
      {1, MurasugiForm::Power, {}, 1},
  };
  for (const auto& f : non_qa) {
    CAPTURE(f.str());
    REQUIRE_FALSE(predicted_qa(f));
    QAResult r = qa_search(closure(f.to_word()), 6);
    CHECK_FALSE(r.certified);
  }
}

TEST_CASE("obstruction flags wide links and accepts thin ones") {
  // h^2 s2: reduced width |n| = 2
  LinkDiagram wide = closure(MurasugiForm{2, MurasugiForm::Power, {}, 1}.to_word());
  CHECK(qa_obstruction(wide) == QAObstruction::NotQA);
  LinkDiagram wide2 = closure(MurasugiForm{2, MurasugiForm::Special, {}, -2}.to_word());
  CHECK(qa_obstruction(wide2) == QAObstruction::NotQA);
  // the figure eight is thin at -sigma; the obstruction cannot decide
  LinkDiagram fig8 = closure(word(3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}));
  CHECK(qa_obstruction(fig8) == QAObstruction::Inconclusive);
  CHECK(qa_search(fig8).certified);
}

TEST_CASE("certified links are thin in delta = -sigma") {
  std::vector<LinkDiagram> certified = {
      closure(word(2, {{1, 3}})),
      closure(MurasugiForm{1, MurasugiForm::Power, {}, -2}.to_word()),
      closure(MurasugiForm{1, MurasugiForm::Alt, {{1, 1}}, 0}.to_word()),
  };
  for (auto& d : certified) {
    REQUIRE(qa_search(d).certified);
    LinkDiagram based = d;
    based.basepoint = d.edge_labels()[0];
    auto dt = reduced_homology(based, Ring::z()).delta_table();
    REQUIRE(dt.size() == 1);
    CHECK(dt.begin()->first == -signature(d));
  }
}

TEST_SUITE_END();
