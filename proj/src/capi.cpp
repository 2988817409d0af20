#include "hecke0.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/reports.hpp"
#include "core/verify.hpp"

struct hk_ctx {
  int max_n = hk::kDefaultMaxN;
  uint64_t seed = 1;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> parse_parts(const char* s) {
  std::vector<int> out;
  if (!s || !*s) return out;
  std::string str(s);
  size_t pos = 0;
  while (true) {
    size_t next = str.find(',', pos);
    size_t end = next == std::string::npos ? str.size() : next;
    std::string tok = str.substr(pos, end - pos);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    hk::require(a != std::string::npos, "empty part in composition list");
    tok = tok.substr(a, b - a + 1);
    size_t used = 0;
    int v = std::stoi(tok, &used);
    hk::require(used == tok.size(), "bad part '" + tok + "' in composition list");
    out.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// Runs fn, mapping exceptions to status codes; fn returns (text, status).
template <class Fn>
char* run_call(hk_ctx* ctx, int* status, Fn fn) {
  if (!ctx || !status) return nullptr;
  try {
    ctx->last_error.clear();
    std::pair<std::string, int> r = fn();
    *status = r.second;
    return dup_string(r.first);
  } catch (const hk::ArgumentError& e) {
    ctx->last_error = e.what();
    *status = HK_USAGE;
  } catch (const hk::SizeLimitError& e) {
    ctx->last_error = e.what();
    *status = HK_SIZE_LIMIT;
  } catch (const hk::UnavailableError& e) {
    ctx->last_error = e.what();
    *status = HK_UNAVAILABLE;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    *status = HK_USAGE;
  } catch (const std::out_of_range& e) {
    ctx->last_error = e.what();
    *status = HK_USAGE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    *status = HK_VERIFY_FAILED;
  }
  return nullptr;
}

hk::ReportOptions make_options(const hk_ctx* ctx, const char* format) {
  hk::ReportOptions opt;
  opt.format = hk::parse_format(format && *format ? format : "pretty");
  opt.max_n = ctx->max_n;
  opt.seed = ctx->seed;
  return opt;
}

}  // namespace

extern "C" {

const char* hk_version(void) { return "0.1.0"; }

hk_ctx* hk_ctx_new(int max_n, uint64_t seed) {
  hk_ctx* ctx = new (std::nothrow) hk_ctx;
  if (!ctx) return nullptr;
  if (max_n > 0) ctx->max_n = max_n;
  if (seed != 0) ctx->seed = seed;
  return ctx;
}

void hk_ctx_free(hk_ctx* ctx) { delete ctx; }

const char* hk_last_error(const hk_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

char* hk_ribbon_report(hk_ctx* ctx, int n, const char* alpha, int64_t q,
                       const char* format, int* status) {
  return run_call(ctx, status, [&]() -> std::pair<std::string, int> {
    return {hk::ribbon_report(n, parse_parts(alpha), q, make_options(ctx, format)), HK_OK};
  });
}

char* hk_characteristic_report(hk_ctx* ctx, const char* module, int n, const char* alpha,
                               const char* mu, int64_t q, const char* mode,
                               const char* format, int* status) {
  return run_call(ctx, status, [&]() -> std::pair<std::string, int> {
    hk::require(module && *module, "a module name is required");
    hk::CharMode m = hk::parse_mode(mode && *mode ? mode : "plain");
    return {hk::characteristic_report(module, n, parse_parts(alpha), parse_parts(mu), q, m,
                                      make_options(ctx, format)),
            HK_OK};
  });
}

char* hk_verify_suite(hk_ctx* ctx, const char* suite, int n, int64_t q, int trials,
                      const char* format, int* status) {
  return run_call(ctx, status, [&]() -> std::pair<std::string, int> {
    hk::require(suite && *suite, "a suite name is required");
    hk::VerifyConfig cfg;
    cfg.n = n > 0 ? n : 0;
    cfg.q = q > 0 ? q : 0;
    cfg.trials = trials > 0 ? trials : 0;
    cfg.seed = ctx->seed;
    cfg.max_n = ctx->max_n;
    hk::SuiteResult r = hk::run_suite(suite, cfg);
    return {hk::verify_report(r, make_options(ctx, format)),
            r.passed() ? HK_OK : HK_VERIFY_FAILED};
  });
}

char* hk_suite_list(hk_ctx* ctx, int* status) {
  return run_call(ctx, status, [&]() -> std::pair<std::string, int> {
    std::string s;
    for (const auto& name : hk::suite_names()) {
      if (!s.empty()) s += ",";
      s += name;
    }
    return {s, HK_OK};
  });
}

void hk_string_free(char* s) { std::free(s); }

}  // extern "C"
