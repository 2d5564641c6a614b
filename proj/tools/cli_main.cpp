// Command line front end over the C API in veron.h. Every subcommand reads
// JSON documents, runs one library operation, and prints either a short
// human summary or (with --json) the full report envelope
//   {"command", "inputs", "result", "checks"}
// byte-identically across runs. Exit codes: 0 success, 1 domain or check
// failure, 2 malformed input or usage.

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "veron.h"

namespace {

using Json = nlohmann::ordered_json;

int fail_with_api_error() {
  std::fprintf(stderr, "error: %s: %s\n", veron_status_name(veron_last_status()),
               veron_last_error());
  return veron_last_status() == VERON_ERR_PARSE ? 2 : 1;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct QmDeleter {
  void operator()(veron_qmatrix* m) const { veron_qmatrix_free(m); }
};
struct LmDeleter {
  void operator()(veron_lmatrix* m) const { veron_lmatrix_free(m); }
};
using QmPtr = std::unique_ptr<veron_qmatrix, QmDeleter>;
using LmPtr = std::unique_ptr<veron_lmatrix, LmDeleter>;

// Loaded handle plus its canonical JSON form for the report inputs section.
struct LoadedQm {
  QmPtr handle;
  Json canonical;
};
struct LoadedLm {
  LmPtr handle;
  Json canonical;
};

std::optional<LoadedQm> load_qmatrix(const std::string& path, int& exit_code) {
  auto text = read_file(path);
  if (!text) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    exit_code = 2;
    return std::nullopt;
  }
  QmPtr h(veron_qmatrix_parse(text->c_str()));
  if (!h) {
    exit_code = fail_with_api_error();
    return std::nullopt;
  }
  char* j = veron_qmatrix_to_json(h.get());
  Json canonical = Json::parse(j);
  veron_string_free(j);
  return LoadedQm{std::move(h), std::move(canonical)};
}

std::optional<LoadedLm> load_lmatrix(const std::string& path, int& exit_code) {
  auto text = read_file(path);
  if (!text) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    exit_code = 2;
    return std::nullopt;
  }
  LmPtr h(veron_lmatrix_parse(text->c_str()));
  if (!h) {
    exit_code = fail_with_api_error();
    return std::nullopt;
  }
  char* j = veron_lmatrix_to_json(h.get());
  Json canonical = Json::parse(j);
  veron_string_free(j);
  return LoadedLm{std::move(h), std::move(canonical)};
}

void print_human(const Json& envelope) {
  std::printf("%s\n", envelope["command"].get<std::string>().c_str());
  for (const auto& [key, value] : envelope["result"].items()) {
    std::string s = value.is_string() ? value.get<std::string>() : value.dump();
    std::printf("  %s: %s\n", key.c_str(), s.c_str());
  }
  for (const auto& c : envelope["checks"])
    std::printf("  check %s: %s\n", c["name"].get<std::string>().c_str(),
                c["pass"].get<bool>() ? "pass" : "FAIL");
}

// Consumes the report; prints the envelope; exit 1 when any check failed.
int emit(const char* command, Json inputs, veron_report* rep, bool json_mode) {
  if (!rep) return fail_with_api_error();
  char* rj = veron_report_result_json(rep);
  Json result = Json::parse(rj);
  veron_string_free(rj);
  Json checks = Json::array();
  bool all_pass = true;
  for (size_t i = 0; i < veron_report_check_count(rep); ++i) {
    bool pass = veron_report_check_pass(rep, i) != 0;
    checks.push_back(Json{{"name", veron_report_check_name(rep, i)}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
  veron_report_free(rep);
  Json envelope;
  envelope["command"] = command;
  envelope["inputs"] = std::move(inputs);
  envelope["result"] = std::move(result);
  envelope["checks"] = std::move(checks);
  if (json_mode)
    std::printf("%s\n", envelope.dump(2).c_str());
  else
    print_human(envelope);
  return all_pass ? 0 : 1;
}

std::optional<std::vector<long long>> parse_weight_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) return std::nullopt;
    size_t b = item.find_last_not_of(" \t");
    try {
      size_t used = 0;
      long long v = std::stoll(item.substr(a, b - a + 1), &used);
      if (used != b - a + 1) return std::nullopt;
      out.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with nilpotent orbits, sl(2) weights, and bundles on P^1"};
  app.require_subcommand(1);
  bool json_mode = false;

  std::string in_path, vec_path, lowering_path, weights_arg;
  int opt_n = 0, opt_m = 0;
  unsigned long long seed = 0;

  auto* sc_nil = app.add_subcommand("nilpotent-analyze", "degree, kernel flags, Jordan partition");
  sc_nil->add_option("--input", in_path, "matrix JSON file")->required();

  auto* sc_orbit = app.add_subcommand("orbit-curve", "polynomial curve exp(tA)u");
  sc_orbit->add_option("--input", in_path, "matrix JSON file")->required();
  sc_orbit->add_option("--vector", vec_path, "seed column vector JSON file")->required();

  auto* sc_flags = app.add_subcommand("flags-check", "complementarity and refinement of two flags");
  sc_flags->add_option("--input", in_path, "flags JSON file")->required();

  auto* sc_sl2c = app.add_subcommand("sl2-complete", "complete a nilpotent to an sl(2) triple");
  sc_sl2c->add_option("--input", in_path, "matrix JSON file")->required();

  auto* sc_sl2p = app.add_subcommand("sl2-projection", "flags and projection of a raising/lowering pair");
  sc_sl2p->add_option("--input", in_path, "raising matrix JSON file")->required();
  sc_sl2p->add_option("--lowering", lowering_path, "lowering matrix JSON file")->required();

  auto* sc_cg = app.add_subcommand("clebsch-gordan", "tensor product decomposition");
  sc_cg->add_option("--m", opt_m, "first irreducible label")->required();
  sc_cg->add_option("--n", opt_n, "second irreducible label")->required();

  auto* sc_id = app.add_subcommand("identify-irrep", "identify a weight list as a twisted irreducible");
  sc_id->add_option("--weights", weights_arg, "comma separated integer weights")->required();

  auto* sc_ver = app.add_subcommand("veronese-normal", "normal bundle of the degree-n rational normal curve");
  sc_ver->add_option("--n", opt_n, "curve degree (>= 2)")->required();

  auto* sc_lie = app.add_subcommand("lie-analyze", "closure, structure, Killing form, commutant");
  sc_lie->add_option("--input", in_path, "basis JSON file")->required();
  sc_lie->add_option("--seed", seed, "seed for the nilpotent search");

  auto* sc_fz = app.add_subcommand("field-zeros", "projective zero set of a linear vector field");
  sc_fz->add_option("--input", in_path, "matrix JSON file")->required();

  auto* sc_h0 = app.add_subcommand("h0", "section count of a twist");
  sc_h0->add_option("--input", in_path, "transition matrix JSON file")->required();
  sc_h0->add_option("--n", opt_n, "twist degree")->required();

  auto* sc_split = app.add_subcommand("splitting-type", "splitting exponents of a bundle");
  sc_split->add_option("--input", in_path, "transition matrix JSON file")->required();

  auto* sc_birk = app.add_subcommand("birkhoff-factorize", "factor T = plus * diag * minus");
  sc_birk->add_option("--input", in_path, "transition matrix JSON file")->required();

  for (auto* sc : app.get_subcommands({}))
    sc->add_flag("--json", json_mode, "emit the full JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int exit_code = 0;

  if (*sc_nil) {
    auto m = load_qmatrix(in_path, exit_code);
    if (!m) return exit_code;
    Json inputs{{"file", in_path}, {"matrix", m->canonical}};
    return emit("nilpotent-analyze", std::move(inputs),
                veron_nilpotent_analyze(m->handle.get()), json_mode);
  }
  if (*sc_orbit) {
    auto m = load_qmatrix(in_path, exit_code);
    if (!m) return exit_code;
    auto u = load_qmatrix(vec_path, exit_code);
    if (!u) return exit_code;
    Json inputs{{"file", in_path},
                {"vector_file", vec_path},
                {"matrix", m->canonical},
                {"vector", u->canonical}};
    return emit("orbit-curve", std::move(inputs),
                veron_orbit_curve(m->handle.get(), u->handle.get()), json_mode);
  }
  if (*sc_flags) {
    auto text = read_file(in_path);
    if (!text) {
      std::fprintf(stderr, "error: cannot read %s\n", in_path.c_str());
      return 2;
    }
    Json inputs{{"file", in_path}};
    return emit("flags-check", std::move(inputs), veron_flags_check(text->c_str()), json_mode);
  }
  if (*sc_sl2c) {
    auto m = load_qmatrix(in_path, exit_code);
    if (!m) return exit_code;
    Json inputs{{"file", in_path}, {"matrix", m->canonical}};
    return emit("sl2-complete", std::move(inputs), veron_sl2_complete(m->handle.get()), json_mode);
  }
  if (*sc_sl2p) {
    auto a = load_qmatrix(in_path, exit_code);
    if (!a) return exit_code;
    auto b = load_qmatrix(lowering_path, exit_code);
    if (!b) return exit_code;
    Json inputs{{"file", in_path},
                {"lowering_file", lowering_path},
                {"raising", a->canonical},
                {"lowering", b->canonical}};
    return emit("sl2-projection", std::move(inputs),
                veron_sl2_projection(a->handle.get(), b->handle.get()), json_mode);
  }
  if (*sc_cg) {
    Json inputs{{"m", opt_m}, {"n", opt_n}};
    return emit("clebsch-gordan", std::move(inputs), veron_clebsch_gordan(opt_m, opt_n),
                json_mode);
  }
  if (*sc_id) {
    auto weights = parse_weight_list(weights_arg);
    if (!weights) {
      std::fprintf(stderr, "error: --weights expects a comma separated integer list\n");
      return 2;
    }
    Json inputs{{"weights", *weights}};
    return emit("identify-irrep", std::move(inputs),
                veron_identify_irrep(weights->data(), weights->size()), json_mode);
  }
  if (*sc_ver) {
    Json inputs{{"n", opt_n}};
    return emit("veronese-normal", std::move(inputs), veron_veronese_normal(opt_n), json_mode);
  }
  if (*sc_lie) {
    auto text = read_file(in_path);
    if (!text) {
      std::fprintf(stderr, "error: cannot read %s\n", in_path.c_str());
      return 2;
    }
    Json inputs{{"file", in_path}, {"seed", seed}};
    return emit("lie-analyze", std::move(inputs), veron_lie_analyze(text->c_str(), seed),
                json_mode);
  }
  if (*sc_fz) {
    auto m = load_qmatrix(in_path, exit_code);
    if (!m) return exit_code;
    Json inputs{{"file", in_path}, {"matrix", m->canonical}};
    return emit("field-zeros", std::move(inputs), veron_field_zeros(m->handle.get()), json_mode);
  }
  if (*sc_h0) {
    auto t = load_lmatrix(in_path, exit_code);
    if (!t) return exit_code;
    Json inputs{{"file", in_path}, {"n", opt_n}, {"transition", t->canonical}};
    return emit("h0", std::move(inputs), veron_h0(t->handle.get(), opt_n), json_mode);
  }
  if (*sc_split) {
    auto t = load_lmatrix(in_path, exit_code);
    if (!t) return exit_code;
    Json inputs{{"file", in_path}, {"transition", t->canonical}};
    return emit("splitting-type", std::move(inputs), veron_splitting_type(t->handle.get()),
                json_mode);
  }
  if (*sc_birk) {
    auto t = load_lmatrix(in_path, exit_code);
    if (!t) return exit_code;
    Json inputs{{"file", in_path}, {"transition", t->canonical}};
    return emit("birkhoff-factorize", std::move(inputs),
                veron_birkhoff_factorize(t->handle.get()), json_mode);
  }
  return 2;
}
