#include <doctest.h>

#include <cstring>
#include <string>

#include "hecke0.h"

namespace {

struct Ctx {
  hk_ctx* p;
  Ctx() : p(hk_ctx_new(0, 0)) {}
  ~Ctx() { hk_ctx_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  hk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and context lifecycle") {
  CHECK(hk_version() != nullptr);
  hk_ctx* c = hk_ctx_new(6, 42);
  REQUIRE(c != nullptr);
  CHECK(std::string(hk_last_error(c)).empty());
  hk_ctx_free(c);
  hk_ctx_free(nullptr);  // must be a no-op
}

TEST_CASE("ribbon report through the C layer") {
  Ctx c;
  int status = -1;
  std::string out = take(hk_ribbon_report(c.p, 4, "1,2,1", 0, "pretty", &status));
  CHECK(status == HK_OK);
  CHECK(out.find("(1,2,1)") != std::string::npos);

  status = -1;
  std::string qt = take(hk_ribbon_report(c.p, 2, "1,1", 2, "pretty", &status));
  CHECK(status == HK_OK);
  CHECK(qt.find("t + t^2") != std::string::npos);
}

TEST_CASE("identical calls return identical bytes") {
  Ctx c;
  int s1 = -1, s2 = -1;
  std::string a = take(hk_ribbon_report(c.p, 5, "", 0, "json", &s1));
  std::string b = take(hk_ribbon_report(c.p, 5, "", 0, "json", &s2));
  CHECK(s1 == HK_OK);
  CHECK(a == b);
}

TEST_CASE("bad arguments surface as usage errors with messages") {
  Ctx c;
  int status = -1;
  char* out = hk_ribbon_report(c.p, 4, "1,2,1", 0, "yaml", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_USAGE);
  CHECK(std::strlen(hk_last_error(c.p)) > 0);

  status = -1;
  out = hk_ribbon_report(c.p, 4, "1,x,1", 0, "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_USAGE);

  status = -1;
  out = hk_ribbon_report(c.p, 4, "2,1", 0, "pretty", &status);  // wrong weight
  CHECK(out == nullptr);
  CHECK(status == HK_USAGE);

  status = -1;
  out = hk_characteristic_report(c.p, "mystery", 3, "", "", 0, "plain", "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_USAGE);

  status = -1;
  out = hk_verify_suite(c.p, "mystery", 0, 0, 0, "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_USAGE);
}

TEST_CASE("size caps surface as the size status") {
  Ctx c;
  int status = -1;
  char* out = hk_ribbon_report(c.p, 9, "", 0, "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_SIZE_LIMIT);

  status = -1;
  out = hk_characteristic_report(c.p, "flag", 4, "", "", 3, "plain", "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_SIZE_LIMIT);
}

TEST_CASE("unsupported requests surface as the unavailable status") {
  Ctx c;
  int status = -1;
  char* out = hk_characteristic_report(c.p, "springer", 0, "", "2,2", 0, "t", "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_UNAVAILABLE);

  status = -1;
  out = hk_characteristic_report(c.p, "flag", 2, "", "", 2, "qt", "pretty", &status);
  CHECK(out == nullptr);
  CHECK(status == HK_UNAVAILABLE);
}

TEST_CASE("characteristic report through the C layer") {
  Ctx c;
  int status = -1;
  std::string out =
      take(hk_characteristic_report(c.p, "flag", 2, "", "", 2, "plain", "json", &status));
  CHECK(status == HK_OK);
  CHECK(out.find("\"factors\"") != std::string::npos);

  status = -1;
  out = take(hk_characteristic_report(c.p, "projective", 0, "1,2,1", "", 0, "plain", "pretty",
                                      &status));
  CHECK(status == HK_OK);
  CHECK(out.find("fundamental") != std::string::npos);
}

TEST_CASE("suite registry and a passing suite") {
  Ctx c;
  int status = -1;
  std::string names = take(hk_suite_list(c.p, &status));
  CHECK(status == HK_OK);
  CHECK(names.find("foata") != std::string::npos);
  CHECK(names.find("norton") != std::string::npos);

  status = -1;
  std::string out = take(hk_verify_suite(c.p, "foata", 4, 0, 0, "pretty", &status));
  CHECK(status == HK_OK);
  CHECK(out.find("PASS") != std::string::npos);
}
