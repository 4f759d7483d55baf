#include "skewgentle.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "skewgentle/analysis.hpp"
#include "skewgentle/surface.hpp"
#include "skewgentle/words.hpp"

using namespace sg;

struct sg_presentation {
  Presentation value;
};

namespace {

thread_local std::string g_last_error;

sg_status status_of(Errc c) {
  switch (c) {
    case Errc::ok: return SG_OK;
    case Errc::validation_rejected: return SG_VALIDATION_REJECTED;
    case Errc::parse_error: return SG_PARSE_ERROR;
    case Errc::schema_error: return SG_SCHEMA_ERROR;
    case Errc::internal_inconsistency: return SG_INTERNAL_INCONSISTENCY;
    case Errc::unknown_fixture: return SG_UNKNOWN_FIXTURE;
    case Errc::bad_params: return SG_BAD_PARAMS;
    default: return SG_INVALID_INPUT;
  }
}

char* dup_string(const std::string& s) {
  char* out = (char*)malloc(s.size() + 1);
  if (out) memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG_OTHER_ERROR;
  }
}

std::optional<HandleWindings> parse_options(const char* options_json) {
  if (!options_json || !*options_json) return std::nullopt;
  auto doc = nlohmann::ordered_json::parse(options_json);
  if (doc.contains("handle_windings") && doc["handle_windings"].is_array() &&
      doc["handle_windings"].size() == 2) {
    HandleWindings hw;
    hw.s = doc["handle_windings"][0].get<long long>();
    hw.t = doc["handle_windings"][1].get<long long>();
    return hw;
  }
  return std::nullopt;
}

}  // namespace

extern "C" {

sg_status sg_presentation_parse(const char* json_text, sg_presentation** out) {
  return guarded([&] {
    check(json_text && out, Errc::invalid_input, "null argument");
    *out = new sg_presentation{parse_presentation(json_text)};
  });
}

sg_status sg_presentation_example(const char* name, const char* params_json,
                                  sg_presentation** out) {
  return guarded([&] {
    check(name && out, Errc::invalid_input, "null argument");
    FixtureParams fp;
    if (params_json && *params_json) {
      auto doc = nlohmann::ordered_json::parse(params_json);
      if (doc.contains("n")) fp.n = doc["n"].get<long long>();
      if (doc.contains("r")) fp.r = doc["r"].get<long long>();
      if (doc.contains("m")) fp.m = doc["m"].get<long long>();
    }
    *out = new sg_presentation{fixture(name, fp)};
  });
}

sg_status sg_presentation_random(unsigned long long seed, int max_vertices, int allow_special,
                                 sg_presentation** out) {
  return guarded([&] {
    check(out != nullptr, Errc::invalid_input, "null argument");
    GeneratorOptions opts;
    opts.max_vertices = max_vertices > 0 ? max_vertices : 8;
    opts.allow_special = allow_special != 0;
    *out = new sg_presentation{random_presentation(seed, opts)};
  });
}

void sg_presentation_free(sg_presentation* p) { delete p; }

sg_status sg_presentation_json(const sg_presentation* p, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    *out_json = dup_string(presentation_to_json(p->value));
  });
}

sg_status sg_validate_json(const sg_presentation* p, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    *out_json = dup_string(validation_to_json(validate(p->value)));
  });
}

sg_status sg_analyze_json(const sg_presentation* p, const char* options_json, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    AnalyzeOptions opts;
    opts.handle_windings = parse_options(options_json);
    *out_json = dup_string(analyze_to_json(p->value, opts));
  });
}

sg_status sg_strings_json(const sg_presentation* p, int max_length, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    LetterTable t = LetterTable::build(p->value);
    auto all = enumerate_strings(t, max_length);
    nlohmann::ordered_json doc;
    doc["max_length"] = max_length;
    doc["count"] = all.size();
    doc["strings"] = nlohmann::ordered_json::array();
    for (const auto& cw : all) {
      nlohmann::ordered_json js;
      if (cw.word.trivial())
        js["word"] = {{"trivial_at", p->value.vertices[cw.word.base_vertex]}};
      else
        js["word"] = word_tokens(t, cw.word);
      switch (cw.cls.kind) {
        case StringKind::asymmetric_string: js["class"] = "AsymmetricString"; break;
        case StringKind::symmetric_string: js["class"] = "SymmetricString"; break;
        case StringKind::not_coadmissible: js["class"] = "NotCoadmissible"; break;
        case StringKind::not_string: js["class"] = "NotString"; break;
      }
      doc["strings"].push_back(js);
    }
    *out_json = dup_string(doc.dump(2));
  });
}

sg_status sg_bands_json(const sg_presentation* p, int max_period, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    LetterTable t = LetterTable::build(p->value);
    auto all = enumerate_bands(t, max_period);
    nlohmann::ordered_json doc;
    doc["max_period"] = max_period;
    doc["bands"] = nlohmann::ordered_json::array();
    for (const auto& b : all) {
      nlohmann::ordered_json jb;
      std::vector<std::string> toks;
      for (int l : b.periodic) toks.push_back(t.token(l));
      jb["periodic_part"] = toks;
      jb["period"] = b.period;
      jb["symmetry"] = b.symmetric ? "Symmetric" : "Asymmetric";
      std::vector<std::string> key;
      for (int l : b.canonical_key) key.push_back(t.token(l));
      jb["canonical_key"] = key;
      doc["bands"].push_back(jb);
    }
    *out_json = dup_string(doc.dump(2));
  });
}

sg_status sg_surface_json(const sg_presentation* p, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    SurfaceModel m = build_surface(p->value);
    *out_json = dup_string(surface_to_json(m, p->value));
  });
}

sg_status sg_decide_json(const sg_presentation* p, const char* options_json, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    DecisionReport r = decide_all(p->value, parse_options(options_json));
    *out_json = dup_string(decision_to_json(r));
  });
}

sg_status sg_dual_json(const sg_presentation* p, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    *out_json = dup_string(presentation_to_json(dual(p->value)));
  });
}

sg_status sg_specialize_json(const sg_presentation* p, char** out_json) {
  return guarded([&] {
    check(p && out_json, Errc::invalid_input, "null argument");
    *out_json = dup_string(weighted_to_json(specialize(p->value)));
  });
}

sg_status sg_scc_winding(const sg_presentation* p, const char* subset_json, long long* out) {
  return guarded([&] {
    check(p && subset_json && out, Errc::invalid_input, "null argument");
    auto doc = nlohmann::ordered_json::parse(subset_json);
    check(doc.is_array(), Errc::invalid_input, "subset must be an array of indices");
    std::vector<int> subset;
    for (const auto& j : doc) subset.push_back(j.get<int>());
    SurfaceModel m = build_surface(p->value);
    *out = scc_winding_genus0(m, subset);
  });
}

void sg_string_free(char* s) { free(s); }

const char* sg_last_error_message(void) { return g_last_error.c_str(); }

}  // extern "C"
