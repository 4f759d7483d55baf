#include "skewgentle/analysis.hpp"

#include "json.hpp"
#include "skewgentle/minimality.hpp"

namespace sg {

using ojson = nlohmann::ordered_json;

std::string input_digest(const Presentation& p) {
  std::string canonical = presentation_to_json(p);
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string analyze_to_json(const Presentation& p, const AnalyzeOptions& opts) {
  ojson doc;
  doc["version"] = kVersion;
  doc["input_digest"] = input_digest(p);
  ValidationReport rep = validate(p);
  doc["validation"] = ojson::parse(validation_to_json(rep));

  ojson words;
  if (rep.valid_class() && rep.finite_dimensional) {
    LetterTable t = LetterTable::build(p);
    auto band = band_exists(t);
    words["band_found"] = band.has_value();
    if (band) {
      ojson toks = ojson::array();
      for (int l : band->periodic) toks.push_back(t.token(l));
      words["band_witness"] = toks;
      if (auto cert = find_minimal_band(t)) {
        ojson mb;
        mb["shape"] = shape_name(cert->shape);
        ojson mtoks = ojson::array();
        for (int l : cert->band.periodic) mtoks.push_back(t.token(l));
        mb["periodic_part"] = mtoks;
        words["minimal_band"] = mb;
      }
    }
  } else {
    words["not_applicable"] = "needs a finite-dimensional (skew-)gentle input";
  }
  doc["words"] = words;

  if (rep.valid_class() && rep.smooth_proper && rep.connected) {
    SurfaceModel m = build_surface(p);
    doc["surface"] = ojson::parse(surface_to_json(m, p));
  } else {
    doc["surface"] = {{"not_applicable", "needs a smooth-proper connected input"}};
  }

  DecisionReport dr = decide_all(p, opts.handle_windings);
  doc["decisions"] = ojson::parse(decision_to_json(dr));
  return doc.dump(2);
}

}  // namespace sg
