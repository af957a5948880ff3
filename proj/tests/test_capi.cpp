#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "altruns/altruns.h"

namespace {

struct Session {
  altruns_session* s = altruns_session_create();
  ~Session() { altruns_session_destroy(s); }
  std::string out() const { return altruns_session_output(s); }
  std::string err() const { return altruns_session_error(s); }
};

}  // namespace

TEST_CASE("c api: table in three formats") {
  Session ss;
  REQUIRE(ss.s != nullptr);
  CHECK(ss.out().empty());
  CHECK(altruns_table(ss.s, 5, ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out() == "2: 2\n3: 2 4\n4: 2 12 10\n5: 2 28 58 32\n");
  CHECK(altruns_table(ss.s, 2, ALTRUNS_FORMAT_CSV) == ALTRUNS_OK);
  CHECK(ss.out() == "n,s,value\n2,1,2\n");
  CHECK(altruns_table(ss.s, 8, ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto j = nlohmann::json::parse(ss.out());
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].back()["values"] ==
        nlohmann::json({"2", "252", "2766", "9576", "14622", "10332", "2770"}));
  CHECK(altruns_table(ss.s, 1, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(altruns_table(ss.s, 201, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(ss.err().find("n-max") != std::string::npos);
}

TEST_CASE("c api: count by every method") {
  Session ss;
  CHECK(altruns_count(ss.s, 7, 4, ALTRUNS_METHOD_RECURRENCE, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out() == "P(7,4) = 1852  [recurrence]\n");
  CHECK(altruns_count(ss.s, 5, 4, ALTRUNS_METHOD_CLOSED_FORM, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out() == "P(5,4) = 32  [closed-form]\n");
  CHECK(altruns_count(ss.s, 3, 2, ALTRUNS_METHOD_CENSUS, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out() == "P(3,2) = 4  [census]\n");
  CHECK(altruns_count(ss.s, 8, 5, ALTRUNS_METHOD_ALL, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto j = nlohmann::json::parse(ss.out());
  CHECK(j["agree"] == true);
  CHECK(j["value"] == "14622");
  CHECK(j["values"].size() == 5);

  CHECK(altruns_count(ss.s, 11, 3, ALTRUNS_METHOD_BRUTE, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(altruns_count(ss.s, 12, 5, ALTRUNS_METHOD_CENSUS, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_BUDGET_EXCEEDED);
  CHECK(altruns_count(ss.s, 5, 13, ALTRUNS_METHOD_GENFUN, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(altruns_count(ss.s, 4, 4, ALTRUNS_METHOD_CLOSED_FORM, ALTRUNS_DEFAULT_BUDGET,
                      ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
}

TEST_CASE("c api: formula, gf, pfd") {
  Session ss;
  CHECK(altruns_formula(ss.s, 4, ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out().find("4^(n-1) - 3^n + (6-n)*2^(n-1) + (2n-7)") != std::string::npos);
  CHECK(altruns_formula(ss.s, 4, ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto f = nlohmann::json::parse(ss.out());
  CHECK(f["terms"][2]["base"] == 2);
  CHECK(f["terms"][2]["psi"] == nlohmann::json({"3", "-1/2"}));
  CHECK(altruns_gf(ss.s, 3, ALTRUNS_FORMAT_TEXT) == ALTRUNS_OK);
  CHECK(ss.out() == "u_3(x) = 2x^4(5-6x) / ((1-3x)(1-2x)(1-x)^2)\n");
  CHECK(altruns_pfd(ss.s, 4, ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto p = nlohmann::json::parse(ss.out());
  CHECK(p["terms"].size() == 6);
  CHECK(p["poly_part"] == nlohmann::json({"19/4", "2"}));
  CHECK(altruns_gf(ss.s, 0, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(altruns_pfd(ss.s, 13, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
}

TEST_CASE("c api: census and trace") {
  Session ss;
  CHECK(altruns_census(ss.s, 3, 3, 2, 2, ALTRUNS_DEFAULT_BUDGET, ALTRUNS_FORMAT_CSV) ==
        ALTRUNS_OK);
  CHECK(ss.out() == "n,s,successes,s^n,bonferroni_bound\n3,2,4,8,-2\n");
  CHECK(altruns_census(ss.s, 10, 10, 5, 5, 1000, ALTRUNS_FORMAT_CSV) == ALTRUNS_BUDGET_EXCEEDED);

  const int parts[] = {1, 2, 2};
  CHECK(altruns_trace(ss.s, 3, 2, parts, ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto j = nlohmann::json::parse(ss.out());
  CHECK(j["result"] == "preimage");
  CHECK(j["choices"] == nlohmann::json({1}));
  CHECK(j["candidate"] == nlohmann::json({{1, 3}, {2, 3}}));
  const int bad[] = {1, 3};
  CHECK(altruns_trace(ss.s, 2, 2, bad, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(altruns_trace(ss.s, 2, 2, nullptr, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
}

TEST_CASE("c api: verify one suite") {
  Session ss;
  CHECK(altruns_verify(ss.s, ALTRUNS_SUITE_POLYNOMIAL, ALTRUNS_FORMAT_JSON) == ALTRUNS_OK);
  const auto j = nlohmann::json::parse(ss.out());
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == 3);
}

TEST_CASE("c api: triangle handle") {
  Session ss;
  altruns_triangle* t = nullptr;
  REQUIRE(altruns_triangle_create(ss.s, 30, &t) == ALTRUNS_OK);
  REQUIRE(t != nullptr);
  CHECK(altruns_triangle_n_max(t) == 30);
  CHECK(std::string(altruns_triangle_value(t, 7, 4)) == "1852");
  CHECK(std::string(altruns_triangle_value(t, 7, 9)) == "0");
  CHECK(std::string(altruns_triangle_value(t, 25, 1)) == "2");
  CHECK(altruns_triangle_value(t, 31, 1) == nullptr);
  CHECK(altruns_triangle_value(nullptr, 3, 1) == nullptr);
  altruns_triangle_destroy(t);
  altruns_triangle* none = reinterpret_cast<altruns_triangle*>(1);
  CHECK(altruns_triangle_create(ss.s, 1, &none) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(none == nullptr);
}

TEST_CASE("c api: null handles and name lookups") {
  CHECK(altruns_table(nullptr, 5, ALTRUNS_FORMAT_TEXT) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(std::strcmp(altruns_session_output(nullptr), "") == 0);
  altruns_session_destroy(nullptr);
  altruns_triangle_destroy(nullptr);
  altruns_method m{};
  CHECK(altruns_parse_method("closed-form", &m) == ALTRUNS_OK);
  CHECK(m == ALTRUNS_METHOD_CLOSED_FORM);
  CHECK(altruns_parse_method("magic", &m) == ALTRUNS_INVALID_ARGUMENT);
  altruns_suite su{};
  CHECK(altruns_parse_suite("bijection", &su) == ALTRUNS_OK);
  CHECK(su == ALTRUNS_SUITE_BIJECTION);
  altruns_format f{};
  CHECK(altruns_parse_format("csv", &f) == ALTRUNS_OK);
  CHECK(f == ALTRUNS_FORMAT_CSV);
  CHECK(altruns_parse_format(nullptr, &f) == ALTRUNS_INVALID_ARGUMENT);
  CHECK(std::string(altruns_status_string(ALTRUNS_BUDGET_EXCEEDED)) == "budget exceeded");
  CHECK(std::string(altruns_version()) == "1.0.0");
}

TEST_CASE("c api: output is deterministic") {
  Session a, b;
  altruns_pfd(a.s, 7, ALTRUNS_FORMAT_JSON);
  altruns_pfd(b.s, 7, ALTRUNS_FORMAT_JSON);
  CHECK(a.out() == b.out());
  altruns_census(a.s, 2, 6, 1, 4, ALTRUNS_DEFAULT_BUDGET, ALTRUNS_FORMAT_JSON);
  altruns_census(b.s, 2, 6, 1, 4, ALTRUNS_DEFAULT_BUDGET, ALTRUNS_FORMAT_JSON);
  CHECK(a.out() == b.out());
}
