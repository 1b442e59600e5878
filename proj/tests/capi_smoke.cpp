#include <cstdio>
#include <cstring>
#include <string>

#include "json.hpp"

#include "dihedral/dihedral.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::printf("FAIL %s\n", what);
    ++failures;
  }
}

std::string run(dh_context* ctx, const char* command, const char* input, int* exit_code) {
  dh_result* r = nullptr;
  dh_run(ctx, command, input, &r);
  if (!r) {
    *exit_code = -1;
    return "";
  }
  std::string text = dh_result_json(r);
  *exit_code = dh_result_exit_code(r);
  dh_result_free(r);
  return text;
}

}  // namespace

int main() {
  dh_status st = DH_OK;
  expect(dh_context_new("Fp:100", 1, &st) == nullptr && st == DH_USAGE_ERROR, "composite modulus rejected");

  dh_context* ctx = dh_context_new("Q", 42, &st);
  expect(ctx != nullptr && st == DH_OK, "context");
  expect(std::strcmp(dh_context_field(ctx), "Q") == 0 && dh_context_seed(ctx) == 42, "context accessors");

  int code = 0;
  const std::string k3 = run(ctx, "cover", R"({"n": 3, "m": 1, "base": "P2"})", &code);
  expect(code == 0, "cover exit code");
  expect(k3.find("\"label\": \"K3\"") != std::string::npos, "K3 label");
  expect(k3.find("\"seed\": 42") != std::string::npos, "seed recorded");
  expect(nlohmann::ordered_json::parse(k3).dump(2) == k3, "output round trip");

  run(ctx, "torsion", R"({"n": 2, "curve": {"g": 1, "F": "x0^^4"}})", &code);
  expect(code == 2, "malformed polynomial");
  run(ctx, "torsion", "{\"n\": 2,", &code);
  expect(code == 2, "malformed JSON");
  run(ctx, "frobnicate", "{}", &code);
  expect(code == 2, "unknown command");
  run(ctx, "cover", R"({"m": 1})", &code);
  expect(code == 2, "missing key");

  const char* pair = R"({"n": 2, "curve": {"g": 1, "F": "x0^4 - x1^4"},
                         "pair": {"a": 1, "b": 1, "P": "0", "f": "x0^2 - x1^2", "q": "x0^2 + x1^2"}})";
  const std::string tors = run(ctx, "torsion", pair, &code);
  expect(code == 0 && tors.find("\"torsion\": true") != std::string::npos, "two-torsion pair");
  expect(tors.find("\"class_order\": 2") != std::string::npos, "class order");

  const char* degenerate = R"({"n": 3, "m": 1, "a": "x0^3", "F": "x0^2"})";
  const std::string bad = run(ctx, "check", degenerate, &code);
  expect(code == 1 && bad.find("\"overall\": \"fail\"") != std::string::npos, "failed hypothesis exit code");

  const char* fermat = R"({"n": 3, "m": 1, "a": "x0^3 + x1^3 + x2^3", "F": "x0*x1 + x0*x2 + x1*x2"})";
  const std::string first = run(ctx, "check", fermat, &code);
  expect(code == 0, "Fermat check");
  expect(run(ctx, "check", fermat, &code) == first, "deterministic output");

  const std::string def = run(ctx, "deform", R"({"n": 2, "m": 1, "d": 2})", &code);
  expect(def.find("\"lower_bound\": 2") != std::string::npos, "deformation count");

  dh_result* r = nullptr;
  dh_run_batch(ctx, R"([{"command": "deform", "input": {"n": 3, "m": 1}},
                        {"command": "cover", "input": {"n": 2, "m": 1}},
                        {"command": "nope"}])", &r);
  expect(r != nullptr, "batch result");
  if (r) {
    const auto arr = nlohmann::json::parse(dh_result_json(r));
    expect(arr.size() == 3 && arr[0]["command"] == "deform" && arr[1]["command"] == "cover", "batch order");
    expect(arr[1]["result"]["K2"] == 4, "batch payload");
    expect(dh_result_exit_code(r) == 2, "batch worst exit code");
    dh_result_free(r);
  }

  expect(dh_run(nullptr, "cover", "{}", &r) == DH_NULL_ARGUMENT, "null context");
  expect(dh_run(ctx, "cover", nullptr, &r) == DH_NULL_ARGUMENT, "null input");
  dh_context_free(ctx);

  std::printf(failures == 0 ? "capi_smoke: all checks passed\n" : "capi_smoke: %d failures\n", failures);
  return failures == 0 ? 0 : 1;
}
