#include <string>

#include "doctest.h"
#include "json.hpp"
#include "springer_c.h"

namespace {

nlohmann::json take_json(char* s) {
  nlohmann::json j = nlohmann::json::parse(s);
  spr_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("engine lifecycle and argument errors") {
  spr_engine* e = nullptr;
  CHECK(spr_engine_new(4, 0, nullptr, &e) == SPR_E_INVALID);
  CHECK(std::string(spr_last_error()).find("odd") != std::string::npos);
  CHECK(spr_engine_new(5, 0, nullptr, nullptr) == SPR_E_INVALID);
  REQUIRE(spr_engine_new(5, 0, nullptr, &e) == SPR_OK);
  int n = 0, N = 0;
  CHECK(spr_engine_info(e, &n, &N) == SPR_OK);
  CHECK(n == 5);
  CHECK(N == 21);
  char* out = nullptr;
  CHECK(spr_gch(e, "F:chi7:sgn", &out) == SPR_E_INVALID);
  CHECK(spr_gch(e, "Q:triv", &out) == SPR_E_INVALID);
  CHECK(spr_family(e, "triv<chi1", &out) == SPR_E_INVALID);
  spr_engine_free(e);
  spr_engine_free(nullptr);
}

TEST_CASE("classification through the C interface") {
  spr_engine* e = nullptr;
  REQUIRE(spr_engine_new(3, 15, nullptr, &e) == SPR_OK);
  spr_report* r = nullptr;
  REQUIRE(spr_classify(e, 2, 1, &r) == SPR_OK);
  long scanned = 0, passed = 0, expected = 0, inconclusive = -1;
  int match = 0;
  CHECK(spr_report_summary(r, &scanned, &passed, &expected, &inconclusive, &match) == SPR_OK);
  CHECK(scanned == 29);
  CHECK(passed == 5);
  CHECK(expected == 5);
  CHECK(inconclusive == 0);
  CHECK(match == 1);
  char* out = nullptr;
  REQUIRE(spr_report_json(r, &out) == SPR_OK);
  nlohmann::json j = take_json(out);
  CHECK(j["match"] == true);
  REQUIRE(spr_report_table(r, &out) == SPR_OK);
  CHECK(std::string(out).find("passing preorders") != std::string::npos);
  spr_string_free(out);
  spr_report_free(r);
  spr_engine_free(e);
}

TEST_CASE("characters, ext and omega as json") {
  spr_engine* e = nullptr;
  REQUIRE(spr_engine_new(7, 27, nullptr, &e) == SPR_OK);
  char* out = nullptr;
  REQUIRE(spr_gch(e, "F:sgn:sgn", &out) == SPR_OK);
  nlohmann::json j = take_json(out);
  for (const auto& row : j["table"]) CHECK(row["agrees"] == true);
  REQUIRE(spr_gch(e, "P_triv", &out) == SPR_OK);
  j = take_json(out);
  CHECK(j["table"][0]["label"] == "triv");
  REQUIRE(spr_gch(e, "J:triv", &out) == SPR_OK);
  j = take_json(out);
  CHECK(j["closed_form"].is_null());
  REQUIRE(spr_family(e, "triv<=chi1;chi1<=chi2;chi2<=chi3;chi3<=sgn", &out) == SPR_OK);
  j = take_json(out);
  CHECK(j["status"] == "pass");
  REQUIRE(spr_ext(e, "Ltriv", "Lsgn", &out) == SPR_OK);
  j = take_json(out);
  REQUIRE(j["ext"].size() == 1);
  CHECK(j["ext"][0]["i"] == 2);
  CHECK(j["ext"][0]["degree"] == 2);
  REQUIRE(spr_ext(e, "P:sgn", "F:sgn:sgn", &out) == SPR_OK);
  j = take_json(out);
  REQUIRE(j["ext"].size() == 1);
  CHECK(j["ext"][0]["i"] == 0);
  spr_engine_free(e);
  REQUIRE(spr_omega(3, 9, &out) == SPR_OK);
  j = take_json(out);
  CHECK(j["labels"].size() == 3);
  CHECK(spr_omega(2, 9, &out) == SPR_E_INVALID);
}

TEST_CASE("verification through the C interface") {
  int ns[] = {3};
  char* out = nullptr;
  int ok = 0;
  REQUIRE(spr_verify(ns, 1, 1, nullptr, (1u << 1) | (1u << 4), &out, &ok) == SPR_OK);
  nlohmann::json j = take_json(out);
  CHECK(j.size() == 2);
  CHECK(ok == 1);
  CHECK(spr_verify(ns, 1, 1, nullptr, 0, nullptr, &ok) == SPR_E_INVALID);
  CHECK(std::string(spr_version()).size() > 0);
}
