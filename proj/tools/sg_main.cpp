// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewgentle.h"

namespace {

int exit_code_of(sg_status s) {
  switch (s) {
    case SG_OK: return 0;
    case SG_VALIDATION_REJECTED:
    case SG_INVALID_INPUT: return 1;  // input fails the operation's preconditions
    case SG_PARSE_ERROR:
    case SG_SCHEMA_ERROR:
    case SG_UNKNOWN_FIXTURE:
    case SG_BAD_PARAMS: return 2;
    case SG_INTERNAL_INCONSISTENCY: return 3;
    default: return 2;
  }
}

int complain(sg_status s) {
  std::cerr << "error: " << sg_last_error_message() << "\n";
  return exit_code_of(s);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  sg_presentation* p = nullptr;
  ~Loaded() { sg_presentation_free(p); }
};

int load(const std::string& path, Loaded& out) {
  std::string text = read_input(path);
  sg_status s = sg_presentation_parse(text.c_str(), &out.p);
  if (s != SG_OK) return complain(s);
  return 0;
}

int print_and_free(char* json) {
  std::cout << json << "\n";
  sg_string_free(json);
  return 0;
}

// The human rendering is a thin layer over the same JSON report.
void render_human(const std::string& json) {
  auto doc = nlohmann::ordered_json::parse(json);
  const auto& v = doc["validation"];
  std::cout << "class:              " << v["algebra_class"].get<std::string>() << "\n"
            << "finite dimensional: " << (v["finite_dimensional"].get<bool>() ? "yes" : "no")
            << "\n"
            << "smooth & proper:    " << (v["smooth_proper"].get<bool>() ? "yes" : "no") << "\n"
            << "connected:          " << (v["connected"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& viol : v["violations"])
    std::cout << "  violation " << viol["code"].get<std::string>() << " at '"
              << viol["where"].get<std::string>() << "': " << viol["detail"].get<std::string>()
              << "\n";
  if (doc["words"].contains("band_found")) {
    std::cout << "band:               "
              << (doc["words"]["band_found"].get<bool>() ? "found" : "none") << "\n";
    if (doc["words"].contains("minimal_band"))
      std::cout << "minimal band:       "
                << doc["words"]["minimal_band"]["shape"].get<std::string>() << "\n";
  }
  if (doc["surface"].contains("genus")) {
    const auto& s = doc["surface"];
    std::cout << "surface:            genus " << s["genus"] << ", " << s["boundaries"].size()
              << " boundary component(s), " << s["orbifolds"] << " orbifold(s)\n";
    for (const auto& b : s["boundaries"])
      std::cout << "  boundary: " << b["black_points"] << " marked points, winding "
                << b["winding"] << ", m " << b["m"] << "\n";
  }
  const auto& d = doc["decisions"];
  auto verdict = [&](const char* key) {
    return d[key]["verdict"].get<std::string>() + "  (" +
           d[key].value("reason", std::string{}) + ")";
  };
  std::cout << "tau-tilting finite: " << verdict("tau_tilting_finite") << "\n"
            << "silting discrete:   " << verdict("silting_discrete") << "\n"
            << "derived discrete:   " << verdict("derived_discrete") << "\n"
            << "pre-silting partial: " << verdict("presilting_partial_silting") << "\n";
}

bool json_says_invalid(const std::string& json) {
  return json.find("\"algebra_class\": \"invalid\"") != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finiteness analysis for (skew-)gentle bound quiver presentations"};
  app.require_subcommand(1);

  std::string input = "-";
  bool as_json = false;
  int max_length = 6;
  int max_period = 8;
  std::vector<int> subset;
  std::vector<long long> handle_windings;
  unsigned long long seed = 1;
  long long par_n = -1, par_r = -1, par_m = -1;
  int size = 8;
  bool skew = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "presentation JSON file, or - for stdin");
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  auto* c_validate = app.add_subcommand("validate", "class and property checks");
  add_input(c_validate);
  auto* c_analyze = app.add_subcommand("analyze", "full report");
  add_input(c_analyze);
  c_analyze->add_option("--handle-windings", handle_windings,
                        "genus-one handle curve windings s,t")
      ->expected(2)
      ->delimiter(',');
  auto* c_strings = app.add_subcommand("strings", "enumerate classified words");
  add_input(c_strings);
  c_strings->add_option("--max-length", max_length, "maximum word length");
  auto* c_bands = app.add_subcommand("bands", "enumerate bands");
  add_input(c_bands);
  c_bands->add_option("--max-period", max_period, "maximum band period");
  auto* c_surface = app.add_subcommand("surface", "surface model summary");
  add_input(c_surface);
  auto* c_decide = app.add_subcommand("decide", "decision report");
  add_input(c_decide);
  c_decide->add_option("--handle-windings", handle_windings,
                       "genus-one handle curve windings s,t")
      ->expected(2)
      ->delimiter(',');
  auto* c_dual = app.add_subcommand("dual", "dual dissection algebra");
  add_input(c_dual);
  auto* c_special = app.add_subcommand("specialize", "admissible presentation A^s");
  add_input(c_special);
  auto* c_winding = app.add_subcommand("winding", "separating-curve winding at genus zero");
  add_input(c_winding);
  c_winding->add_option("--subset", subset, "boundary component indices")
      ->delimiter(',');
  auto* c_example = app.add_subcommand("example", "print a named presentation");
  std::string name;
  c_example->add_option("name", name, "A_n Kronecker E1 E2 S1 S2 Lambda random")->required();
  c_example->add_option("-n", par_n, "size parameter");
  c_example->add_option("-r", par_r, "Lambda parameter r");
  c_example->add_option("-m", par_m, "Lambda parameter m");
  c_example->add_option("--seed", seed, "generator seed (random)");
  c_example->add_option("--size", size, "generator size budget (random)");
  c_example->add_flag("--skew", skew, "generate with special loops (random)");

  CLI11_PARSE(app, argc, argv);

  std::string hw_options;
  if (handle_windings.size() == 2)
    hw_options = "{\"handle_windings\": [" + std::to_string(handle_windings[0]) + ", " +
                 std::to_string(handle_windings[1]) + "]}";

  if (c_example->parsed()) {
    sg_presentation* p = nullptr;
    sg_status s;
    if (name == "random") {
      s = sg_presentation_random(seed, size, skew ? 1 : 0, &p);
    } else {
      std::string params = "{";
      bool first = true;
      auto put = [&](const char* k, long long v) {
        if (v < 0) return;
        if (!first) params += ", ";
        params += std::string("\"") + k + "\": " + std::to_string(v);
        first = false;
      };
      put("n", par_n);
      put("r", par_r);
      put("m", par_m);
      params += "}";
      s = sg_presentation_example(name.c_str(), params.c_str(), &p);
    }
    if (s != SG_OK) return complain(s);
    char* json = nullptr;
    s = sg_presentation_json(p, &json);
    sg_presentation_free(p);
    if (s != SG_OK) return complain(s);
    return print_and_free(json);
  }

  Loaded in;
  if (int rc = load(input, in)) return rc;

  char* json = nullptr;
  sg_status s = SG_OK;
  if (c_validate->parsed()) {
    s = sg_validate_json(in.p, &json);
    if (s != SG_OK) return complain(s);
    std::string doc = json;
    print_and_free(json);
    return json_says_invalid(doc) ? 1 : 0;
  }
  if (c_analyze->parsed()) {
    s = sg_analyze_json(in.p, hw_options.c_str(), &json);
    if (s != SG_OK) return complain(s);
    std::string doc = json;
    if (as_json)
      print_and_free(json);
    else {
      render_human(doc);
      sg_string_free(json);
    }
    return json_says_invalid(doc) ? 1 : 0;
  }
  if (c_strings->parsed()) s = sg_strings_json(in.p, max_length, &json);
  if (c_bands->parsed()) s = sg_bands_json(in.p, max_period, &json);
  if (c_surface->parsed()) s = sg_surface_json(in.p, &json);
  if (c_decide->parsed()) s = sg_decide_json(in.p, hw_options.c_str(), &json);
  if (c_dual->parsed()) s = sg_dual_json(in.p, &json);
  if (c_special->parsed()) s = sg_specialize_json(in.p, &json);
  if (c_winding->parsed()) {
    std::string subset_json = "[";
    for (size_t i = 0; i < subset.size(); ++i)
      subset_json += (i ? "," : "") + std::to_string(subset[i]);
    subset_json += "]";
    long long w = 0;
    s = sg_scc_winding(in.p, subset_json.c_str(), &w);
    if (s != SG_OK) return complain(s);
    std::cout << "{\n  \"subset\": " << subset_json << ",\n  \"winding\": " << w << "\n}\n";
    return 0;
  }
  if (s != SG_OK) return complain(s);
  if (json) return print_and_free(json);
  return 0;
}
