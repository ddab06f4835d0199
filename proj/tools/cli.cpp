#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "crg/canonical.hpp"
#include "crg/errors.hpp"
#include "crg/json_io.hpp"
#include "crg/lift.hpp"
#include "crg/orbit.hpp"
#include "crg/reflection.hpp"

namespace crg::cli {

namespace {

using json::Json;

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string group;
  std::size_t length = 0;
  std::string input;
  std::string braid;
  std::string from;
  std::string to;
  std::string json_path;
  int mod = 0;
  unsigned threads = 1;
  std::optional<std::size_t> budget;
  bool emit_braid = false;
  bool stats = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Factorization read_factorization(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("missing --input");
  return json::factorization_from_json(json::parse(read_text(path)));
}

// Flag beats CRG_BUDGET beats the per-command default.
std::size_t budget_or(const Flags& flags, std::size_t fallback) {
  if (flags.budget) return *flags.budget;
  if (const char* env = std::getenv("CRG_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) throw std::invalid_argument("CRG_BUDGET must be a positive integer");
    return static_cast<std::size_t>(value);
  }
  return fallback;
}

void emit(std::ostream& out, const Flags& flags, const Json& doc) {
  out << doc.dump() << '\n';
  if (!flags.json_path.empty()) {
    std::ofstream file(flags.json_path);
    if (!file) throw std::invalid_argument("cannot write '" + flags.json_path + "'");
    file << doc.dump(2) << '\n';
  }
}

int cmd_reflections(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto params = GroupParams::parse(flags.group);
  const auto refl = enumerate_reflections(params);
  for (const auto& r : refl) {
    out << Json{{"v", json::kSchemaVersion},
                {"kind", r.is_diagonal() ? "diagonal" : "transposition"},
                {"element", json::to_json(r.element())},
                {"class", json::to_json(class_label(r))}}
               .dump()
        << '\n';
  }
  err << refl.size() << " reflections in " << params.to_string() << '\n';
  return kOk;
}

int cmd_coxeter(const Flags& flags, std::ostream& out, std::ostream&) {
  const auto params = GroupParams::parse(flags.group);
  const auto c = coxeter_element(params);
  const auto order = element_order(c);
  emit(out, flags,
       Json{{"v", json::kSchemaVersion},
            {"group", params.to_string()},
            {"element", json::to_json(c)},
            {"order", order ? Json(*order) : Json(nullptr)}});
  return kOk;
}

int cmd_coxnum(const Flags& flags, std::ostream& out, std::ostream&) {
  const auto data = coxeter_number(GroupParams::parse(flags.group));
  emit(out, flags,
       Json{{"v", json::kSchemaVersion},
            {"reflections", data.reflection_count},
            {"hyperplanes", data.hyperplane_count},
            {"h", data.h}});
  return kOk;
}

int cmd_act(const Flags& flags, std::ostream& out, std::ostream&) {
  if (flags.braid.empty()) throw std::invalid_argument("missing --braid");
  const auto word = json::braid_from_json(json::parse(flags.braid));
  const auto f = read_factorization(flags.input);
  check_braid(word, f.size());
  emit(out, flags, json::to_json(apply_braid(f, word)));
  return kOk;
}

int cmd_lift(const Flags& flags, std::ostream& out, std::ostream&) {
  emit(out, flags, json::to_json(lift_factorization(read_factorization(flags.input))));
  return kOk;
}

int cmd_canonical(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto f = read_factorization(flags.input);
  const auto& params = f.params();
  if (params.family() != Family::One) throw std::invalid_argument("canonical forms are implemented for e = 1 only");
  int d = flags.mod;
  Factorization cover = f;
  if (!params.is_cover()) {
    if (d != 0 && d != params.modulus()) throw std::invalid_argument("--mod disagrees with the group modulus");
    d = params.modulus();
    cover = lift_factorization(f).lifted;
  } else if (d < 1) {
    throw std::invalid_argument("a factorization in G(inf,1,n) needs --mod d");
  }
  CanonicalizeOptions options;
  options.search_budget = budget_or(flags, options.search_budget);
  const auto result = canonicalize_d1n(cover, d, options);
  Json doc{{"v", json::kSchemaVersion},
           {"form", json::to_json(result.form)},
           {"canonical", json::to_json(result.form.realize())}};
  if (!params.is_cover()) {
    // Moves commute with projection, so the same word acts downstairs.
    const auto projected = canonical_projection(result.form, d);
    if (!(apply_braid(f, result.word) == projected)) throw InternalError("projected certificate failed to replay");
    doc["projection"] = json::to_json(projected);
  }
  if (flags.emit_braid) doc["braid"] = json::to_json(result.word);
  emit(out, flags, doc);
  err << "canonical form reached with a braid word of length " << result.word.size() << '\n';
  return kOk;
}

int cmd_orbit(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto f = read_factorization(flags.input);
  OrbitOptions options;
  options.budget = budget_or(flags, options.budget);
  options.threads = flags.threads;
  const auto orbit = orbit_bfs(f, options);
  if (!orbit.validate_certificates()) throw InternalError("orbit certificate failed to replay");
  if (!flags.stats) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      auto doc = json::to_json(orbit.member(i));
      if (flags.emit_braid) doc["braid"] = json::to_json(orbit.certificate(i));
      out << doc.dump() << '\n';
    }
  } else {
    emit(out, flags,
         Json{{"v", json::kSchemaVersion},
              {"group", f.params().to_string()},
              {"length", f.size()},
              {"size", orbit.size()},
              {"multiset", json::to_json(invariant_multiset(f))}});
  }
  err << "orbit of size " << orbit.size() << '\n';
  return kOk;
}

int cmd_certify(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.from.empty() || flags.to.empty()) throw std::invalid_argument("certify needs --from and --to");
  const auto from = read_factorization(flags.from);
  const auto to = read_factorization(flags.to);
  OrbitOptions options;
  options.budget = budget_or(flags, 1'000'000);
  options.threads = flags.threads;
  const auto result = same_orbit(from, to, options);
  Json doc{{"v", json::kSchemaVersion}};
  switch (result.verdict) {
    case Connectivity::Connected:
      doc["verdict"] = "connected";
      doc["braid"] = json::to_json(*result.word);
      break;
    case Connectivity::NotConnected:
      doc["verdict"] = "not-connected";
      break;
    case Connectivity::Indeterminate:
      doc["verdict"] = "indeterminate";
      break;
  }
  doc["explored"] = result.explored;
  emit(out, flags, doc);
  err << doc["verdict"].get<std::string>() << " after " << result.explored << " tuples\n";
  if (result.verdict == Connectivity::Indeterminate) return kUsage;
  return result.verdict == Connectivity::Connected ? kOk : kVerdictFailed;
}

int cmd_verify(const Flags& flags, std::ostream& out, std::ostream& err) {
  const auto params = GroupParams::parse(flags.group);
  VerifyOptions options;
  options.enumeration_budget = budget_or(flags, options.enumeration_budget);
  options.orbit.budget = budget_or(flags, options.orbit.budget);
  options.orbit.threads = flags.threads;
  const auto report = verify_main_theorem(params, flags.length, options);
  emit(out, flags, json::to_json(report));
  err << params.to_string() << " m=" << flags.length << ": " << report.factorization_count << " factorizations, "
      << report.orbit_count << " orbits, " << report.class_multiset_count << " class multisets"
      << (report.complete ? "" : " (incomplete: budget exhausted)") << '\n';
  if (!report.complete) return kUsage;
  return report.match && report.certificates_ok ? kOk : kVerdictFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz orbits of reflection factorizations in G(d,1,n) and G(d,d,n)", "crg"};
  app.require_subcommand(1);
  Flags flags;
  std::size_t budget = 0;

  auto group = [&](CLI::App* sub) { sub->add_option("--group", flags.group, "group as d,e,n")->required(); };
  auto input = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "factorization JSON file ('-' for stdin)")->required();
  };
  auto budget_flag = [&](CLI::App* sub) { sub->add_option("--budget", budget, "search budget")->check(CLI::PositiveNumber); };
  auto json_flag = [&](CLI::App* sub) { sub->add_option("--json", flags.json_path, "also write the document here"); };

  auto* reflections = app.add_subcommand("reflections", "list the reflections with their classes (JSON lines)");
  group(reflections);
  auto* coxeter = app.add_subcommand("coxeter", "standard Coxeter element and its order");
  group(coxeter);
  json_flag(coxeter);
  auto* coxnum = app.add_subcommand("coxnum", "reflection and hyperplane counts, Coxeter number");
  group(coxnum);
  json_flag(coxnum);
  auto* act = app.add_subcommand("act", "apply a braid word to a factorization");
  input(act);
  act->add_option("--braid", flags.braid, "JSON array of signed 1-based letters")->required();
  json_flag(act);
  auto* lift = app.add_subcommand("lift", "lift a factorization of c to the generic cover");
  input(lift);
  json_flag(lift);
  auto* canonical = app.add_subcommand("canonical", "canonical orbit representative (e = 1)");
  input(canonical);
  canonical->add_option("--mod", flags.mod, "modulus d for inputs in G(inf,1,n)")->check(CLI::PositiveNumber);
  canonical->add_flag("--emit-braid", flags.emit_braid, "include the certificate word");
  budget_flag(canonical);
  json_flag(canonical);
  auto* orbit = app.add_subcommand("orbit", "Hurwitz orbit of a factorization");
  input(orbit);
  orbit->add_flag("--stats", flags.stats, "print only size and invariant multiset");
  orbit->add_flag("--emit-braid", flags.emit_braid, "attach a certificate word to each member");
  orbit->add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);
  budget_flag(orbit);
  json_flag(orbit);
  auto* certify = app.add_subcommand("certify", "braid word between two factorizations, or a verdict");
  certify->add_option("--from", flags.from, "source factorization JSON")->required();
  certify->add_option("--to", flags.to, "target factorization JSON")->required();
  certify->add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);
  budget_flag(certify);
  json_flag(certify);
  auto* verify = app.add_subcommand("verify", "orbit partition versus class multisets at one length");
  group(verify);
  verify->add_option("--length", flags.length, "factorization length m")->required();
  verify->add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);
  budget_flag(verify);
  json_flag(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (budget != 0) flags.budget = budget;

  try {
    if (*reflections) return cmd_reflections(flags, out, err);
    if (*coxeter) return cmd_coxeter(flags, out, err);
    if (*coxnum) return cmd_coxnum(flags, out, err);
    if (*act) return cmd_act(flags, out, err);
    if (*lift) return cmd_lift(flags, out, err);
    if (*canonical) return cmd_canonical(flags, out, err);
    if (*orbit) return cmd_orbit(flags, out, err);
    if (*certify) return cmd_certify(flags, out, err);
    if (*verify) return cmd_verify(flags, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace crg::cli
