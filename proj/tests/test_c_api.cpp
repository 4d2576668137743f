#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "wass1d/wass1d.h"

namespace {

struct MeasureHandle {
  w1d_measure* ptr = nullptr;
  ~MeasureHandle() { w1d_measure_free(ptr); }
};

struct IsometryHandle {
  w1d_isometry* ptr = nullptr;
  ~IsometryHandle() { w1d_isometry_free(ptr); }
};

std::string take(char* text) {
  std::string s = text ? text : "";
  w1d_string_free(text);
  return s;
}

const char* kDiracZero = R"({"domain":"real","type":"discrete","atoms":[[0,1]]})";
const char* kDiracTwo = R"({"domain":"real","type":"discrete","atoms":[[2,1]]})";
const char* kTwoPoint = R"({"domain":"unit","type":"discrete","atoms":[[0.0,0.25],[1.0,0.75]]})";

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(w1d_status_name(W1D_OK), "Ok");
  EXPECT_STREQ(w1d_status_name(W1D_SCOPE_MISMATCH), "ScopeMismatch");
  EXPECT_STREQ(w1d_status_name(W1D_UNKNOWN_SUITE), "UnknownSuite");
  EXPECT_STREQ(w1d_status_name(W1D_INTERNAL_ERROR), "InternalError");
}

TEST(CApi, MeasureRoundTripAndDistance) {
  MeasureHandle a, b;
  ASSERT_EQ(w1d_measure_from_json(kDiracZero, &a.ptr), W1D_OK);
  ASSERT_EQ(w1d_measure_from_json(kDiracTwo, &b.ptr), W1D_OK);
  double d = 0.0;
  ASSERT_EQ(w1d_distance(a.ptr, b.ptr, 1.0, &d), W1D_OK);
  EXPECT_DOUBLE_EQ(d, 2.0);
  ASSERT_EQ(w1d_distance(a.ptr, b.ptr, 3.0, &d), W1D_OK);
  EXPECT_DOUBLE_EQ(d, 2.0);

  char* text = nullptr;
  ASSERT_EQ(w1d_measure_to_json(a.ptr, &text), W1D_OK);
  const std::string json = take(text);
  MeasureHandle c;
  ASSERT_EQ(w1d_measure_from_json(json.c_str(), &c.ptr), W1D_OK);
  ASSERT_EQ(w1d_distance(a.ptr, c.ptr, 2.0, &d), W1D_OK);
  EXPECT_EQ(d, 0.0);
}

TEST(CApi, ErrorsSetLastError) {
  MeasureHandle m;
  EXPECT_EQ(w1d_measure_from_json("{oops", &m.ptr), W1D_PARSE_ERROR);
  EXPECT_EQ(m.ptr, nullptr);
  EXPECT_STRNE(w1d_last_error(), "");

  MeasureHandle a, u;
  ASSERT_EQ(w1d_measure_from_json(kDiracZero, &a.ptr), W1D_OK);
  EXPECT_STREQ(w1d_last_error(), "");
  ASSERT_EQ(w1d_measure_from_json(kTwoPoint, &u.ptr), W1D_OK);
  double d = 0.0;
  EXPECT_EQ(w1d_distance(a.ptr, u.ptr, 1.0, &d), W1D_DOMAIN_MISMATCH);
  EXPECT_EQ(w1d_distance(a.ptr, a.ptr, 0.5, &d), W1D_INVALID_P);
}

TEST(CApi, NullArguments) {
  w1d_measure* m = nullptr;
  EXPECT_EQ(w1d_measure_from_json(nullptr, &m), W1D_INVALID_ARGUMENT);
  EXPECT_EQ(w1d_measure_from_json(kDiracZero, nullptr), W1D_INVALID_ARGUMENT);
  double d = 0.0;
  EXPECT_EQ(w1d_distance(nullptr, nullptr, 1.0, &d), W1D_INVALID_ARGUMENT);
  char* text = nullptr;
  EXPECT_EQ(w1d_measure_to_json(nullptr, &text), W1D_INVALID_ARGUMENT);
  EXPECT_EQ(w1d_verify(nullptr, 1, 1, nullptr, nullptr, nullptr), W1D_INVALID_ARGUMENT);
  w1d_measure_free(nullptr);
  w1d_isometry_free(nullptr);
  w1d_string_free(nullptr);
}

TEST(CApi, ApplyAndScope) {
  IsometryHandle flip, exotic;
  ASSERT_EQ(w1d_isometry_from_json(R"({"kind":"flip"})", &flip.ptr), W1D_OK);
  ASSERT_EQ(w1d_isometry_from_json(R"({"kind":"exotic","q":0.5})", &exotic.ptr), W1D_OK);

  MeasureHandle u, r, out;
  ASSERT_EQ(w1d_measure_from_json(kTwoPoint, &u.ptr), W1D_OK);
  ASSERT_EQ(w1d_measure_from_json(kDiracZero, &r.ptr), W1D_OK);
  ASSERT_EQ(w1d_apply(flip.ptr, u.ptr, &out.ptr), W1D_OK);
  char* text = nullptr;
  ASSERT_EQ(w1d_measure_to_json(out.ptr, &text), W1D_OK);
  EXPECT_EQ(take(text), R"({"atoms":[[0.25,1.0]],"domain":"unit","type":"discrete"})");

  MeasureHandle bad;
  EXPECT_EQ(w1d_apply(flip.ptr, r.ptr, &bad.ptr), W1D_SCOPE_MISMATCH);
  EXPECT_EQ(w1d_apply(exotic.ptr, u.ptr, &bad.ptr), W1D_SCOPE_MISMATCH);
  EXPECT_EQ(bad.ptr, nullptr);

  IsometryHandle far;
  MeasureHandle r2;
  ASSERT_EQ(w1d_isometry_from_json(R"({"kind":"exotic","q":100})", &far.ptr), W1D_OK);
  EXPECT_EQ(w1d_apply(far.ptr, r.ptr, &r2.ptr), W1D_Q_OUT_OF_RANGE);
}

TEST(CApi, Suites) {
  ASSERT_EQ(w1d_suite_count(), 13u);
  EXPECT_STREQ(w1d_suite_id(0), "distance-oracle");
  EXPECT_EQ(w1d_suite_id(100), nullptr);

  char* csv = nullptr;
  char* summary = nullptr;
  int passed = 0;
  ASSERT_EQ(w1d_verify("klein-group", 5, 7, &csv, &summary, &passed), W1D_OK);
  EXPECT_EQ(passed, 1);
  const std::string table = take(csv);
  EXPECT_EQ(table.rfind("claim_id,trial,quantity,expected,measured,abs_err,passed\n", 0), 0u);
  EXPECT_NE(take(summary).find("PASS"), std::string::npos);

  EXPECT_EQ(w1d_verify("nope", 5, 7, nullptr, nullptr, &passed), W1D_UNKNOWN_SUITE);
}

TEST(CApi, Generators) {
  char* text = nullptr;
  ASSERT_EQ(w1d_generate_qn(1, &text), W1D_OK);
  EXPECT_EQ(take(text), R"([{"atoms":[[0.0,0.25],[1.0,0.75]],"domain":"unit","type":"discrete"},)"
                        R"({"atoms":[[0.0,0.75],[1.0,0.25]],"domain":"unit","type":"discrete"}])");

  ASSERT_EQ(w1d_generate_slice_extremal(0.5, &text), W1D_OK);
  EXPECT_EQ(take(text), R"([{"atoms":[[0.0,0.5],[1.0,0.5]],"domain":"unit","type":"discrete"},)"
                        R"({"atoms":[[0.5,1.0]],"domain":"unit","type":"discrete"}])");

  ASSERT_EQ(w1d_generate_two_point(0.0, 1.0, 0.0, &text), W1D_OK);
  EXPECT_EQ(take(text), R"([{"atoms":[[-1.0,0.5],[1.0,0.5]],"domain":"real","type":"discrete"}])");

  ASSERT_EQ(w1d_generate_mn_random(2, 5, &text), W1D_OK);
  const std::string a = take(text);
  ASSERT_EQ(w1d_generate_mn_random(2, 5, &text), W1D_OK);
  EXPECT_EQ(take(text), a);

  EXPECT_EQ(w1d_generate_qn(-1, &text), W1D_INVALID_ARGUMENT);
  EXPECT_EQ(w1d_generate_mn_random(25, 1, &text), W1D_INVALID_ARGUMENT);
  EXPECT_EQ(w1d_generate_slice_extremal(2.0, &text), W1D_INVALID_ARGUMENT);
}
