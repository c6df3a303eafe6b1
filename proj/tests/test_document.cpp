#include <gtest/gtest.h>

#include "headorder/document.hpp"
#include "support.hpp"

namespace headorder {
namespace {

using testing::mat;

std::string schema_message(const std::string& text) {
  try {
    parse_document_text(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

PlanarBrauerTree sample_tree() {
  PlanarBrauerTree t;
  t.exceptional = 1;
  t.edges = {{0, 1, 2}, {1, 2, 1}, {1, 3, 1}};
  t.rotation = {{0}, {0, 2, 1}, {1}, {2}};
  t.p = 7;
  t.a = 2;
  t.e = 3;
  t.m = 3;
  t.r = 2;
  return t;
}

TEST(Document, RoundTrips) {
  std::vector<Document> docs{
      validate_order(mat({{0, 1}, {0, 0}}), {2, 1}),
      CirculantState::make({0, 2, 3}, {1, 2, 1}, 2),
      sample_tree(),
      build_block(sample_tree()),
      FamilySpec{4, 6, {1, 1, 2, 1}},
  };
  for (const Document& d : docs) {
    const Json j = to_json(d);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(parse_document(j), d) << j.dump();
    EXPECT_EQ(parse_document_text(j.dump()), d);
    // byte-stable
    EXPECT_EQ(to_json(parse_document(j)).dump(), j.dump());
  }
}

TEST(Document, Defaults) {
  const Document d = parse_document_text(
      R"({"type":"tree","schema_version":1,"exceptional":0,"p":3,"a":1,"edges":[[0,1]],"rotations":{"0":[0],"1":[0]}})");
  const auto& t = std::get<PlanarBrauerTree>(d);
  EXPECT_EQ(t.e, 1);
  EXPECT_EQ(t.r, 1);
  EXPECT_EQ(t.m, 1);
  EXPECT_EQ(t.edges[0].dim, 1);
  // a missing version is read as the current one
  EXPECT_NO_THROW(parse_document_text(R"({"type":"exponent","matrix":[[0]]})"));
  const Document f = parse_document_text(R"({"type":"family","schema_version":1,"n":3,"a":2})");
  EXPECT_EQ(std::get<FamilySpec>(f).dims, (DimVector{1, 1, 1}));
}

TEST(Document, SchemaErrorsCarryPaths) {
  EXPECT_NE(schema_message("{not json").find("$"), std::string::npos);
  EXPECT_NE(schema_message(R"({"type":"exponent","schema_version":2,"matrix":[[0]]})").find("schema_version"),
            std::string::npos);
  EXPECT_NE(schema_message(R"({"type":"bogus","schema_version":1})").find("$.type"), std::string::npos);
  EXPECT_NE(schema_message(R"({"type":"exponent","schema_version":1,"matrix":[[0,1],[0]]})").find("$.matrix[1]"),
            std::string::npos);
  EXPECT_NE(schema_message(R"({"type":"exponent","schema_version":1,"matrix":[[0,"x"],[0,0]]})").find("$.matrix"),
            std::string::npos);
  EXPECT_NE(schema_message(R"({"type":"family","schema_version":1,"a":2})").find("$.n"), std::string::npos);
}

TEST(Document, ValidationErrorsPassThrough) {
  try {
    parse_document_text(R"({"type":"exponent","schema_version":1,"matrix":[[1,0],[0,0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiagonalNonzero);
  }
  try {
    parse_document_text(
        R"({"type":"tree","schema_version":1,"exceptional":0,"p":3,"a":1,"edges":[[0,1]],"rotations":[[0],[]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadRotation);
  }
}

TEST(Document, ReportsSerialize) {
  const Json t = to_json(is_hereditary(standard_hereditary({1, 2})));
  EXPECT_EQ(t["hereditary"], true);
  EXPECT_EQ(t["blocks"], 2);
  const Json c = to_json(certify_order(standard_hereditary({1, 1}), 2));
  EXPECT_EQ(c["p"], 2);
  EXPECT_TRUE(c.contains("radical_agrees"));
  const Json r = to_json(head_order_report(sample_tree()));
  EXPECT_EQ(r["agree"], true);
  EXPECT_EQ(r["components"].size(), 5u);
  EXPECT_EQ(to_json(head_order_report(sample_tree())).dump(), r.dump());
}

}  // namespace
}  // namespace headorder
