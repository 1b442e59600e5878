#include "dihedral/dihedral.h"

#include <future>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "dihedral/cover_geometry.hpp"
#include "dihedral/deformations.hpp"
#include "dihedral/dihedral_algebra.hpp"
#include "dihedral/hyperelliptic.hpp"
#include "dihedral/poly_parser.hpp"

using json = nlohmann::ordered_json;
using namespace dihedral;

struct dh_context {
  Field field = Field::rationals();
  std::string field_name = "Q";
  std::uint64_t seed = 0;
  std::string last_error;
};

struct dh_result {
  std::string text;
  dh_status status = DH_OK;
};

namespace {

/// Missing or ill-typed keys in an input document.
class UsageError : public Error {
public:
  using Error::Error;
};

/// A computed report whose hypotheses fail.
struct Outcome {
  json body;
  bool hypothesis_failed = false;
};

const json& need(const json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) throw UsageError(std::string("missing key \"") + key + "\"");
  return in.at(key);
}

int need_int(const json& in, const char* key) {
  const json& v = need(in, key);
  if (!v.is_number_integer()) throw UsageError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

int int_or(const json& in, const char* key, int fallback) { return in.contains(key) ? need_int(in, key) : fallback; }

std::string need_string(const json& in, const char* key) {
  const json& v = need(in, key);
  if (!v.is_string()) throw UsageError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

HECurve parse_curve(const json& in, Field f) {
  const json& c = need(in, "curve");
  const int g = need_int(c, "g");
  if (g < 1) throw DomainError("genus must be at least 1");
  return HECurve(g, parse_binary_form(need_string(c, "F"), f, 2 * g + 2));
}

BundlePair parse_pair(const json& p, const HECurve& curve) {
  const Field f = curve.field();
  const int l = curve.genus() + 1;
  BundlePair pair;
  pair.a = need_int(p, "a");
  pair.b = need_int(p, "b");
  const int df = l - pair.a + pair.b, dq = l + pair.a - pair.b;
  if (df < 0 || dq < 0) throw DomainError("twists give negative entry degrees");
  pair.P = parse_binary_form(need_string(p, "P"), f, l);
  pair.f = parse_binary_form(need_string(p, "f"), f, df);
  pair.q = parse_binary_form(need_string(p, "q"), f, dq);
  if (!validate(pair, curve.ring())) throw DomainError("pair violates P^2 + q f = F");
  return pair;
}

MumfordClass parse_class(const json& c, const HECurve& curve) {
  MumfordClass m{parse_upoly(need_string(c, "u"), curve.field()), parse_upoly(need_string(c, "v"), curve.field())};
  if (!is_valid_class(m, curve, false)) throw DomainError("not a semi-reduced Mumford pair");
  return m;
}

json pair_json(const BundlePair& p) {
  return json{{"a", p.a}, {"b", p.b}, {"P", p.P.to_string()}, {"f", p.f.to_string()}, {"q", p.q.to_string()}};
}

json class_json(const MumfordClass& c) { return json{{"u", c.u.to_string()}, {"v", c.v.to_string()}}; }

json optional_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) {
    json r = json::array();
    for (const Scalar& s : row) r.push_back(s.to_string());
    rows.push_back(r);
  }
  return rows;
}

Outcome run_torsion(const json& in, Field f) {
  const int n = need_int(in, "n");
  if (n < 1) throw DomainError("n must be positive");
  const HECurve curve = parse_curve(in, f);
  json out;
  out["n"] = n;
  if (in.contains("pair")) {
    const BundlePair pair = parse_pair(in.at("pair"), curve);
    const TorsionMatrix tm = torsion_matrix(n, pair, curve);
    out["torsion"] = is_n_torsion(n, pair, curve);
    out["matrix"] = {{"rows", tm.matrix.rows()},
                     {"cols", tm.matrix.cols()},
                     {"rank", rank(tm.matrix)},
                     {"domain_twists", tm.domain_twists},
                     {"target_twists", tm.target_twists},
                     {"entries", matrix_json(tm.matrix)}};
    out["class_order"] = optional_json(class_order(class_from_matrix(pair, curve), curve, int_or(in, "cap", 200)));
    return {out, false};
  }
  json list = json::array();
  for (const BundlePair& p : enumerate_two_torsion(curve))
    list.push_back({{"pair", pair_json(p)}, {"torsion", is_n_torsion(n, p, curve)}});
  out["two_torsion"] = list;
  return {out, false};
}

Outcome run_pic(const json& in, Field f) {
  const HECurve curve = parse_curve(in, f);
  const DoubleCoverRing ring = curve.ring();
  const std::string op = need_string(in, "op");
  json out;
  out["op"] = op;
  if (op == "two_torsion") {
    json list = json::array();
    for (const BundlePair& p : enumerate_two_torsion(curve)) list.push_back(pair_json(p));
    out["pairs"] = list;
    return {out, false};
  }
  if (op == "from_class") {
    out["pair"] = pair_json(matrix_from_class(parse_class(need(in, "class"), curve), curve));
    return {out, false};
  }
  const BundlePair p = parse_pair(need(in, "pair"), curve);
  if (op == "tensor") {
    out["pair"] = pair_json(tensor(p, parse_pair(need(in, "pair2"), curve), ring));
  } else if (op == "inverse") {
    out["pair"] = pair_json(inverse(p, ring));
  } else if (op == "isomorphic") {
    out["isomorphic"] = is_isomorphic(p, parse_pair(need(in, "pair2"), curve), ring);
  } else if (op == "normalize") {
    out["pair"] = pair_json(normalize(p, curve.genus() + 1));
  } else if (op == "class") {
    const MumfordClass c = class_from_matrix(p, curve);
    out["class"] = class_json(c);
    out["order"] = optional_json(class_order(c, curve, int_or(in, "cap", 200)));
  } else if (op == "stratum") {
    const Stratum s = stratum(p, curve);
    out["stratum"] = {{"a", s.a}, {"b", s.b}, {"d", s.d}};
  } else if (op == "locally_free") {
    const LocalFreeness lf = is_locally_free(p);
    out["locally_free"] = lf.locally_free;
    out["locus"] = lf.locus.to_string();
  } else if (op == "sym_power") {
    out["twists"] = sym_power_pushforward(need_int(in, "n"), p, curve);
  } else {
    throw UsageError("unknown pic op \"" + op + "\"");
  }
  return {out, false};
}

Outcome run_jacobian(const json& in, Field f) {
  const HECurve curve = parse_curve(in, f);
  const std::string op = need_string(in, "op");
  json out;
  out["op"] = op;
  if (op == "point") {
    out["class"] = class_json(point_divisor(parse_scalar(f, need_string(in, "x")), parse_scalar(f, need_string(in, "y")), curve));
    return {out, false};
  }
  const MumfordClass d1 = parse_class(need(in, "D1"), curve);
  if (op == "add") {
    out["class"] = class_json(cantor_add(d1, parse_class(need(in, "D2"), curve), curve));
  } else if (op == "negate") {
    out["class"] = class_json(cantor_negate(d1));
  } else if (op == "reduce") {
    out["class"] = class_json(cantor_reduce(d1, curve));
  } else if (op == "multiple") {
    out["class"] = class_json(cantor_multiple(d1, need_int(in, "k"), curve));
  } else if (op == "order") {
    out["order"] = optional_json(class_order(cantor_reduce(d1, curve), curve, int_or(in, "cap", 200)));
  } else {
    throw UsageError("unknown jacobian op \"" + op + "\"");
  }
  return {out, false};
}

BaseGeometry parse_base(const json& in) {
  const std::string base = in.contains("base") ? need_string(in, "base") : "P2";
  if (base == "abstract")
    return BaseGeometry::abstract_surface(need_int(in, "chi"), need_int(in, "K2"), need_int(in, "KL"), need_int(in, "L2"));
  if (base.size() >= 2 && base[0] == 'P') {
    int d = 0;
    try {
      d = std::stoi(base.substr(1));
    } catch (const std::exception&) {
      throw UsageError("base must be Pd or abstract");
    }
    return BaseGeometry::projective_space(d, need_int(in, "m"));
  }
  throw UsageError("base must be Pd or abstract");
}

json condition_report(const HypothesisReport& rep) {
  json conds = json::array();
  for (const Condition& c : rep.conditions)
    conds.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}, {"informational", c.informational}});
  json out{{"conditions", conds}, {"overall", to_string(rep.overall)}};
  out["irreducible"] = rep.irreducible ? json(*rep.irreducible) : json(nullptr);
  return out;
}

json branch_json(const BranchData& bd) {
  json out{{"polynomial", bd.polynomial.to_string()}, {"degree", bd.degree}, {"reduced_degree", bd.reduced_degree}};
  out["cusp_points"] = bd.cusp_points ? json(*bd.cusp_points) : json(nullptr);
  return out;
}

SimpleCoverSpec parse_simple(const json& in, Field f) {
  SimpleCoverSpec s;
  s.n = need_int(in, "n");
  s.base = parse_base(in);
  if (in.contains("a")) s.a = parse_hpoly(need_string(in, "a"), f, s.base.d + 1);
  if (in.contains("F")) s.F = parse_hpoly(need_string(in, "F"), f, s.base.d + 1);
  return s;
}

AlmostSimpleSpec parse_almost(const json& in, Field f) {
  AlmostSimpleSpec s;
  s.n = need_int(in, "n");
  s.base = parse_base(in);
  s.e = need_int(in, "e");
  const int nv = s.base.d + 1;
  s.F = parse_hpoly(need_string(in, "F"), f, nv);
  s.a0 = parse_hpoly(need_string(in, "a0"), f, nv);
  s.a_inf = parse_hpoly(need_string(in, "a_inf"), f, nv);
  return s;
}

Outcome run_cover(const json& in, Field f, std::mt19937_64& rng) {
  const SimpleCoverSpec spec = parse_simple(in, f);
  const int e = int_or(in, "e", 0);
  const InvariantReport r = invariants(spec.n, spec.base, e);
  json out;
  out["n"] = r.n;
  out["omega_degree"] = optional_json(r.omega_degree);
  out["omega_square"] = optional_json(r.omega_square);
  out["omega_dot_L"] = optional_json(r.omega_dot_L);
  out["K2"] = optional_json(r.K2);
  out["chi"] = optional_json(r.chi_formula);
  out["chi_pushforward"] = optional_json(r.chi_pushforward);
  json summands = json::array();
  for (const auto& [k, j] : r.pushforward) summands.push_back({{"L", -k}, {"A_inf", -j}});
  out["pushforward"] = summands;
  out["pushforward_degrees"] = r.pushforward_degrees;
  out["pushforward_c1"] = r.pushforward_c1;
  out["branch_degree"] = r.branch_degree;
  out["cusp_points"] = r.cusp_points ? json(*r.cusp_points) : json(nullptr);
  out["label"] = r.label;
  out["label_reason"] = r.label_reason;
  if (spec.a && spec.F) out["branch"] = branch_json(branch_divisor(spec, rng));
  return {out, false};
}

Outcome run_check(const json& in, Field f, std::mt19937_64& rng) {
  const std::string kind = in.contains("kind") ? need_string(in, "kind") : "simple";
  json out;
  out["kind"] = kind;
  if (kind == "simple") {
    const SimpleCoverSpec spec = parse_simple(in, f);
    const HypothesisReport rep = check_simple(spec, rng);
    out["report"] = condition_report(rep);
    out["branch"] = branch_json(branch_divisor(spec, rng));
    return {out, rep.overall == Verdict::Fail};
  }
  if (kind == "almost_simple") {
    const AlmostSimpleSpec spec = parse_almost(in, f);
    const HypothesisReport rep = check_almost_simple(spec, rng);
    out["report"] = condition_report(rep);
    out["branch"] = branch_json(branch_divisor(spec, rng));
    return {out, rep.overall == Verdict::Fail};
  }
  if (kind == "epimorphism") {
    const EpimorphismResult r = dn_epimorphism_criterion(parse_simple(in, f), rng);
    out["holds"] = r.holds;
    out["verdict"] = to_string(r.verdict);
    out["branch_curve"] = r.branch_curve.to_string();
    out["branch_degree"] = r.branch_degree;
    out["statement"] = r.statement;
    return {out, !r.holds};
  }
  if (kind == "normality") {
    const HECurve curve = parse_curve(in, f);
    std::vector<LabelledDivisor> divisors;
    if (in.contains("D"))
      for (const json& d : in.at("D")) divisors.push_back({need_int(d, "k"), parse_class(d, curve)});
    const NormalityResult r = normality_criterion(need_int(in, "n"), parse_pair(need(in, "F1"), curve), divisors, curve,
                                                  int_or(in, "cap", 1000));
    out["verdict"] = to_string(r.verdict);
    out["kappa"] = r.kappa;
    out["order"] = optional_json(r.order);
    out["explanation"] = r.explanation;
    return {out, r.verdict == Verdict::Fail};
  }
  if (kind == "building_data") {
    const json& degs = need(in, "D_degs");
    if (!degs.is_array()) throw UsageError("D_degs must be an array");
    std::vector<long> d;
    for (const json& x : degs) {
      if (!x.is_number_integer()) throw UsageError("D_degs must hold integers");
      d.push_back(x.get<long>());
    }
    const bool ok = building_data_degree_check(need_int(in, "m"), need_int(in, "L_deg"), d);
    out["holds"] = ok;
    return {out, !ok};
  }
  throw UsageError("unknown check kind \"" + kind + "\"");
}

Outcome run_deform(const json& in) {
  const DefReport r = def_prime_dims(need_int(in, "n"), need_int(in, "m"), int_or(in, "d", 2));
  json out{{"n", r.n}, {"m", r.m}, {"d", r.d}, {"target", r.target}, {"source", r.source},
           {"source_exact", r.source_exact}, {"lower_bound", r.lower_bound}, {"applies", r.applies}};
  out["h1_vanishes"] = r.h1.vanishes;
  out["offending_summand"] = r.h1.offending ? json(*r.h1.offending) : json(nullptr);
  out["offending_h1"] = r.h1.offending_h1;
  out["unresolved_term"] = r.unresolved_term ? json(*r.unresolved_term) : json(nullptr);
  out["note"] = r.note;
  return {out, false};
}

Outcome run_dn_table(const json& in) {
  const int n = need_int(in, "n");
  if (n < 2 || n > 64) throw DomainError("n must lie in 2..64");
  const CharTable table(n);
  const DihedralGroup& g = table.group();
  json elements = json::array();
  for (int i = 0; i < g.order(); ++i) {
    const DihedralElement e = g.element(i);
    elements.push_back("sigma^" + std::to_string(e.k) + (e.t ? " tau" : ""));
  }
  const Representation reg = regular_representation(g);
  json irreps = json::array();
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const Irrep& ir = table.irreps()[i];
    json chars = json::array();
    for (int k = 0; k < g.order(); ++k) chars.push_back(table.character(i, g.element(k)).to_string());
    irreps.push_back({{"label", ir.label}, {"dim", ir.dim}, {"characters", chars},
                      {"projector_rank", projector(table, i, reg).rank()}});
  }
  json out{{"n", n}, {"order", g.order()}, {"elements", elements}, {"irreps", irreps},
           {"orthogonality", table.orthogonality_holds()}};
  if (in.contains("m")) {
    json comps = json::array();
    for (const EigenComponent& c : eigensheaf_decomposition(n, need_int(in, "m")))
      comps.push_back({{"label", c.label}, {"degrees", c.degrees}});
    out["eigensheaves"] = comps;
  }
  if (in.value("algebra", false)) {
    const SimpleCoverAlgebra alg(n);
    out["algebra"] = {{"rank", alg.rank()},
                      {"commutative", alg.is_commutative()},
                      {"associative", alg.is_associative()},
                      {"group_acts", alg.group_acts_by_automorphisms()}};
  }
  return {out, false};
}

Outcome dispatch(const std::string& command, const json& in, Field f, std::mt19937_64& rng) {
  if (command == "torsion") return run_torsion(in, f);
  if (command == "pic") return run_pic(in, f);
  if (command == "jacobian") return run_jacobian(in, f);
  if (command == "cover") return run_cover(in, f, rng);
  if (command == "check") return run_check(in, f, rng);
  if (command == "deform") return run_deform(in);
  if (command == "dn-table") return run_dn_table(in);
  throw UsageError("unknown command \"" + command + "\"");
}

int exit_code(dh_status s) {
  switch (s) {
    case DH_OK: return 0;
    case DH_HYPOTHESIS_FAILED:
    case DH_DOMAIN_ERROR:
    case DH_INVARIANT_VIOLATION: return 1;
    default: return 2;
  }
}

json error_json(const char* kind, const std::string& message) { return json{{"kind", kind}, {"message", message}}; }

/// Runs one job; never throws.
std::pair<json, dh_status> run_job(const dh_context& ctx, const std::string& command, const json& in) {
  json out{{"command", command}, {"field", ctx.field_name}, {"seed", ctx.seed}};
  std::mt19937_64 rng(ctx.seed);
  dh_status status = DH_OK;
  try {
    if (!in.is_object()) throw UsageError("input must be a JSON object");
    Outcome o = dispatch(command, in, ctx.field, rng);
    out["result"] = std::move(o.body);
    status = o.hypothesis_failed ? DH_HYPOTHESIS_FAILED : DH_OK;
  } catch (const ParseError& e) {
    json err = error_json("parse", e.what());
    err["position"] = e.position();
    out["error"] = err;
    status = DH_PARSE_ERROR;
  } catch (const UsageError& e) {
    out["error"] = error_json("usage", e.what());
    status = DH_USAGE_ERROR;
  } catch (const DomainError& e) {
    out["error"] = error_json("domain", e.what());
    status = DH_DOMAIN_ERROR;
  } catch (const InvariantViolation& e) {
    out["error"] = error_json("invariant", e.what());
    status = DH_INVARIANT_VIOLATION;
  } catch (const json::exception& e) {
    out["error"] = error_json("usage", e.what());
    status = DH_USAGE_ERROR;
  } catch (const std::exception& e) {
    out["error"] = error_json("internal", e.what());
    status = DH_INTERNAL_ERROR;
  }
  out["status"] = dh_status_string(status);
  return {out, status};
}

dh_status finish(dh_context* ctx, dh_result** out, const json& doc, dh_status status, const std::string& error) {
  auto* r = new (std::nothrow) dh_result;
  if (!r) return DH_INTERNAL_ERROR;
  r->text = doc.dump(2);
  r->status = status;
  *out = r;
  ctx->last_error = error;
  return status;
}

}  // namespace

extern "C" {

const char* dh_version(void) { return "1.0.0"; }

const char* dh_status_string(dh_status status) {
  switch (status) {
    case DH_OK: return "ok";
    case DH_HYPOTHESIS_FAILED: return "hypothesis_failed";
    case DH_USAGE_ERROR: return "usage_error";
    case DH_PARSE_ERROR: return "parse_error";
    case DH_DOMAIN_ERROR: return "domain_error";
    case DH_INVARIANT_VIOLATION: return "invariant_violation";
    case DH_NULL_ARGUMENT: return "null_argument";
    case DH_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

dh_context* dh_context_new(const char* field, uint64_t seed, dh_status* status) {
  try {
    auto* ctx = new dh_context;
    ctx->field = Field::parse(field ? field : "Q");
    ctx->field_name = ctx->field.name();
    ctx->seed = seed;
    if (status) *status = DH_OK;
    return ctx;
  } catch (const DomainError&) {
    if (status) *status = DH_USAGE_ERROR;
  } catch (...) {
    if (status) *status = DH_INTERNAL_ERROR;
  }
  return nullptr;
}

void dh_context_free(dh_context* ctx) { delete ctx; }

uint64_t dh_context_seed(const dh_context* ctx) { return ctx ? ctx->seed : 0; }

const char* dh_context_field(const dh_context* ctx) { return ctx ? ctx->field_name.c_str() : ""; }

const char* dh_context_last_error(const dh_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

dh_status dh_run(dh_context* ctx, const char* command, const char* input_json, dh_result** out) {
  if (!ctx || !command || !input_json || !out) return DH_NULL_ARGUMENT;
  *out = nullptr;
  try {
    json in;
    try {
      in = json::parse(input_json);
    } catch (const json::parse_error& e) {
      json doc{{"command", command}, {"field", ctx->field_name}, {"seed", ctx->seed}};
      json err = error_json("parse", e.what());
      err["position"] = e.byte;
      doc["error"] = err;
      doc["status"] = dh_status_string(DH_PARSE_ERROR);
      return finish(ctx, out, doc, DH_PARSE_ERROR, e.what());
    }
    auto [doc, status] = run_job(*ctx, command, in);
    return finish(ctx, out, doc, status, doc.contains("error") ? doc["error"]["message"].get<std::string>() : "");
  } catch (...) {
    return DH_INTERNAL_ERROR;
  }
}

dh_status dh_run_batch(dh_context* ctx, const char* input_json, dh_result** out) {
  if (!ctx || !input_json || !out) return DH_NULL_ARGUMENT;
  *out = nullptr;
  try {
    json jobs;
    try {
      jobs = json::parse(input_json);
    } catch (const json::parse_error& e) {
      json err = error_json("parse", e.what());
      err["position"] = e.byte;
      return finish(ctx, out, json{{"error", err}, {"status", dh_status_string(DH_PARSE_ERROR)}}, DH_PARSE_ERROR,
                    e.what());
    }
    if (!jobs.is_array())
      return finish(ctx, out, json{{"error", error_json("usage", "batch input must be an array")}}, DH_USAGE_ERROR,
                    "batch input must be an array");
    std::vector<std::future<std::pair<json, dh_status>>> pending;
    for (const json& job : jobs) {
      pending.push_back(std::async(std::launch::async, [ctx, job]() {
        if (!job.is_object() || !job.contains("command") || !job["command"].is_string())
          return std::pair{json{{"error", error_json("usage", "job needs a command string")}}, DH_USAGE_ERROR};
        return run_job(*ctx, job["command"].get<std::string>(), job.value("input", json::object()));
      }));
    }
    json results = json::array();
    dh_status worst = DH_OK;
    for (auto& p : pending) {
      auto [doc, status] = p.get();
      if (exit_code(status) > exit_code(worst)) worst = status;
      results.push_back(std::move(doc));
    }
    return finish(ctx, out, results, worst, "");
  } catch (...) {
    return DH_INTERNAL_ERROR;
  }
}

const char* dh_result_json(const dh_result* result) { return result ? result->text.c_str() : ""; }

dh_status dh_result_status(const dh_result* result) { return result ? result->status : DH_NULL_ARGUMENT; }

int dh_result_exit_code(const dh_result* result) { return result ? exit_code(result->status) : 2; }

void dh_result_free(dh_result* result) { delete result; }

}  // extern "C"
