#include <cstdint>
#include <fstream>
#include <iostream>
#include <list>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dihedral/dihedral.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

// A flag copied into the input document: plain strings, integers, or JSON text.
struct Binding {
  enum class Kind { String, Integer, Json } kind;
  std::string key;
  std::optional<std::string> text;
  std::optional<long> number;
};

class Command {
public:
  Command(CLI::App& app, const std::string& name, const std::string& help) : sub_(app.add_subcommand(name, help)) {}

  Command& text(const std::string& flag, const std::string& key, const std::string& help) {
    bindings_.push_back({Binding::Kind::String, key, std::nullopt, std::nullopt});
    sub_->add_option(flag, bindings_.back().text, help);
    return *this;
  }
  Command& integer(const std::string& flag, const std::string& key, const std::string& help) {
    bindings_.push_back({Binding::Kind::Integer, key, std::nullopt, std::nullopt});
    sub_->add_option(flag, bindings_.back().number, help);
    return *this;
  }
  Command& document(const std::string& flag, const std::string& key, const std::string& help) {
    bindings_.push_back({Binding::Kind::Json, key, std::nullopt, std::nullopt});
    sub_->add_option(flag, bindings_.back().text, help);
    return *this;
  }
  Command& toggle(const std::string& flag, const std::string& key, const std::string& help) {
    toggles_.emplace(key, false);
    sub_->add_flag(flag, toggles_[key], help);
    return *this;
  }

  bool parsed() const { return sub_->parsed(); }
  std::string name() const { return sub_->get_name(); }

  /// Throws json::parse_error for malformed JSON-valued flags.
  void merge_into(json& doc) const {
    for (const Binding& b : bindings_) {
      if (b.kind == Binding::Kind::Integer && b.number) doc[b.key] = *b.number;
      if (b.kind == Binding::Kind::String && b.text) doc[b.key] = *b.text;
      if (b.kind == Binding::Kind::Json && b.text) doc[b.key] = json::parse(*b.text);
    }
    for (const auto& [key, on] : toggles_)
      if (on) doc[key] = true;
  }

private:
  CLI::App* sub_;
  std::list<Binding> bindings_;
  std::map<std::string, bool> toggles_;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_cover_flags(Command& c) {
  c.integer("--n", "n", "order of the rotation subgroup")
      .integer("--m", "m", "degree of L on P^d")
      .text("--base", "base", "P1, P2, ... or abstract")
      .integer("--e", "e", "degree of A_inf")
      .integer("--chi", "chi", "chi(O_Y) of an abstract base")
      .integer("--K2", "K2", "K_Y^2 of an abstract base")
      .integer("--KL", "KL", "K_Y.L of an abstract base")
      .integer("--L2", "L2", "L^2 of an abstract base")
      .text("--a", "a", "section of L^n")
      .text("--F", "F", "section of L^2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral covers, divisorial sheaves on double covers and hyperelliptic Jacobians"};
  app.require_subcommand(1);
  std::string field = "Q";
  std::uint64_t seed = 1;
  std::string json_file;
  app.add_option("--field", field, "Q or Fp:<p>")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized certificates")->capture_default_str();
  app.add_option("--json", json_file, "input document; flags override its keys");

  Command torsion(app, "torsion", "n-torsion test of a divisorial sheaf");
  torsion.integer("--n", "n", "torsion order")
      .document("--curve", "curve", "{\"g\": g, \"F\": form}")
      .document("--pair", "pair", "{\"a\", \"b\", \"P\", \"f\", \"q\"}")
      .integer("--cap", "cap", "order search bound");

  Command pic(app, "pic", "group operations on pairs");
  pic.text("--op", "op", "tensor, inverse, isomorphic, normalize, class, from_class, stratum, locally_free, sym_power, two_torsion")
      .document("--curve", "curve", "{\"g\": g, \"F\": form}")
      .document("--pair", "pair", "first pair")
      .document("--pair2", "pair2", "second pair")
      .document("--class", "class", "{\"u\", \"v\"}")
      .integer("--n", "n", "power for sym_power")
      .integer("--cap", "cap", "order search bound");

  Command jacobian(app, "jacobian", "Cantor arithmetic on the odd model");
  jacobian.text("--op", "op", "add, negate, reduce, multiple, order, point")
      .document("--curve", "curve", "{\"g\": g, \"F\": form}")
      .document("--D1", "D1", "{\"u\", \"v\"}")
      .document("--D2", "D2", "{\"u\", \"v\"}")
      .integer("--k", "k", "multiplier")
      .text("--x", "x", "x-coordinate of a point")
      .text("--y", "y", "y-coordinate of a point")
      .integer("--cap", "cap", "order search bound");

  Command cover(app, "cover", "invariants of a simple or almost-simple cover");
  add_cover_flags(cover);

  Command check(app, "check", "hypothesis checks");
  add_cover_flags(check);
  check.text("--kind", "kind", "simple, almost_simple, epimorphism, normality, building_data")
      .text("--a0", "a0", "section defining A_0")
      .text("--a-inf", "a_inf", "section defining A_inf")
      .document("--curve", "curve", "{\"g\": g, \"F\": form}")
      .document("--F1", "F1", "pair for the normality criterion")
      .document("--D", "D", "[{\"k\", \"u\", \"v\"}, ...]")
      .integer("--L-deg", "L_deg", "degree of L")
      .document("--D-degs", "D_degs", "[deg D_1, ..., deg D_{m-1}]")
      .integer("--cap", "cap", "order search bound");

  Command deform(app, "deform", "dimension count for natural deformations");
  deform.integer("--n", "n", "n").integer("--m", "m", "m").integer("--d", "d", "dimension of the base");

  Command table(app, "dn-table", "character table and eigensheaves of D_n");
  table.integer("--n", "n", "n").integer("--m", "m", "degree of L").toggle("--algebra", "algebra", "verify the cover algebra");

  CLI::App* batch = app.add_subcommand("batch", "run a JSON array of {command, input} jobs from --json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  dh_status status = DH_OK;
  dh_context* ctx = dh_context_new(field.c_str(), seed, &status);
  if (!ctx) {
    std::cerr << "error: bad field selector \"" << field << "\"\n";
    return kUsage;
  }

  std::string input = "{}";
  if (!json_file.empty()) {
    const auto text = read_file(json_file);
    if (!text) {
      std::cerr << "error: cannot read " << json_file << "\n";
      dh_context_free(ctx);
      return kUsage;
    }
    input = *text;
  }

  dh_result* result = nullptr;
  if (batch->parsed()) {
    status = dh_run_batch(ctx, input.c_str(), &result);
  } else {
    std::string name;
    json doc;
    try {
      doc = json::parse(input);
      if (!doc.is_object()) throw std::invalid_argument("input document must be an object");
      for (const Command* c : {&torsion, &pic, &jacobian, &cover, &check, &deform, &table})
        if (c->parsed()) {
          c->merge_into(doc);
          name = c->name();
        }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      dh_context_free(ctx);
      return kUsage;
    }
    status = dh_run(ctx, name.c_str(), doc.dump().c_str(), &result);
  }

  if (!result) {
    std::cerr << "error: " << dh_status_string(status) << "\n";
    dh_context_free(ctx);
    return kUsage;
  }
  std::cout << dh_result_json(result) << "\n";
  if (status != DH_OK && *dh_context_last_error(ctx)) std::cerr << "error: " << dh_context_last_error(ctx) << "\n";
  const int code = dh_result_exit_code(result);
  dh_result_free(result);
  dh_context_free(ctx);
  return code;
}
