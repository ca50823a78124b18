#include "prelam/io.hpp"

#include <json.hpp>

namespace prelam {

using nlohmann::json;

namespace {

std::optional<CirclePoint> parse_position(const std::string& text, int index,
                                          std::vector<ParseError>& errors) {
  Rational r;
  try {
    r = Rational::parse_strict(text);
  } catch (const Error& e) {
    errors.push_back({"malformed-rational", e.what(), index});
    return std::nullopt;
  }
  if (r.num() < 0 || r >= Rational::of(1)) {
    errors.push_back({"position-out-of-range", "position " + text + " outside [0,1)", index});
    return std::nullopt;
  }
  return CirclePoint(r);
}

}  // namespace

ParseResult parse_instance(const std::string& text) {
  ParseResult result;
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    result.errors.push_back({"malformed-document", "input is not a JSON object", -1});
    return result;
  }

  LamInstance instance;
  std::string mode = doc.value("mode", "frontier");
  if (mode == "strict") {
    instance.mode = Mode::strict;
  } else if (mode == "frontier") {
    instance.mode = Mode::frontier;
  } else {
    result.errors.push_back({"bad-mode", "mode must be \"strict\" or \"frontier\"", -1});
  }

  if (!doc.contains("chords") || !doc["chords"].is_array()) {
    result.errors.push_back({"missing-chords", "document has no chords array", -1});
    return result;
  }

  int index = 0;
  for (const auto& rec : doc["chords"]) {
    if (!rec.is_object()) {
      result.errors.push_back({"bad-chord-record", "chord record is not an object", index});
      ++index;
      continue;
    }
    std::string sign_text = rec.value("sign", "");
    Sign sign = Sign::plus;
    if (sign_text == "+") {
      sign = Sign::plus;
    } else if (sign_text == "-") {
      sign = Sign::minus;
    } else {
      result.errors.push_back({"bad-sign", "sign must be \"+\" or \"-\"", index});
      ++index;
      continue;
    }
    std::string status_text = rec.value("status", "leaf");
    ChordStatus status = ChordStatus::leaf;
    if (status_text == "phantom") {
      status = ChordStatus::phantom;
    } else if (status_text != "leaf") {
      result.errors.push_back({"bad-status", "status must be \"leaf\" or \"phantom\"", index});
    }
    auto a = parse_position(rec.value("a", ""), index, result.errors);
    auto b = parse_position(rec.value("b", ""), index, result.errors);
    bool acc_ab = false, acc_ba = false;
    if (rec.contains("acc")) {
      if (rec["acc"].is_array() && rec["acc"].size() == 2 && rec["acc"][0].is_boolean() &&
          rec["acc"][1].is_boolean()) {
        acc_ab = rec["acc"][0].get<bool>();
        acc_ba = rec["acc"][1].get<bool>();
      } else {
        result.errors.push_back({"bad-acc", "acc must be a pair of booleans", index});
      }
    }
    if (a && b) {
      if (*a == *b) {
        result.errors.push_back({"degenerate-chord", "chord endpoints coincide", index});
      } else {
        instance.family(sign).push_back(Chord(*a, *b, sign, status, acc_ab, acc_ba));
      }
    }
    ++index;
  }

  if (doc.contains("metadata") && doc["metadata"].is_object()) {
    for (auto it = doc["metadata"].begin(); it != doc["metadata"].end(); ++it) {
      if (it.value().is_string()) result.metadata[it.key()] = it.value().get<std::string>();
    }
  }

  if (!result.errors.empty()) return result;

  ValidationReport report = validate(instance);
  for (const auto& v : report.violations) {
    result.errors.push_back({v.code, v.message, v.chords.empty() ? -1 : v.chords.front().index});
  }
  if (result.errors.empty()) result.instance = std::move(instance);
  return result;
}

std::string serialize_instance(const LamInstance& instance,
                               const std::map<std::string, std::string>& metadata) {
  json doc;
  doc["version"] = "1";
  doc["mode"] = instance.mode == Mode::strict ? "strict" : "frontier";
  doc["chords"] = json::array();
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& c : instance.family(sign)) {
      json rec;
      rec["sign"] = std::string(1, sign_char(sign));
      rec["a"] = c.a.str();
      rec["b"] = c.b.str();
      rec["status"] = c.is_leaf() ? "leaf" : "phantom";
      rec["acc"] = json::array({c.acc_ab, c.acc_ba});
      doc["chords"].push_back(rec);
    }
  }
  doc["metadata"] = json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  return doc.dump(2) + "\n";
}

MapTable parse_map_table(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("map") || !doc["map"].is_array()) {
    throw Error("map table: input is not a JSON object with a map array");
  }
  MapTable table;
  for (const auto& rec : doc["map"]) {
    if (!rec.is_object() || !rec.contains("from") || !rec.contains("to")) {
      throw Error("map table: each entry needs from and to");
    }
    CirclePoint from(Rational::parse_strict(rec["from"].get<std::string>()));
    CirclePoint to(Rational::parse_strict(rec["to"].get<std::string>()));
    table.entries.push_back({from, to});
  }
  return table;
}

std::string serialize_map_table(const MapTable& map) {
  json doc;
  doc["map"] = json::array();
  for (const auto& [from, to] : map.entries) {
    doc["map"].push_back({{"from", from.str()}, {"to", to.str()}});
  }
  return doc.dump(2) + "\n";
}

std::string chord_name(const LamInstance& instance, const ChordRef& ref) {
  return instance.family(ref.sign)[static_cast<std::size_t>(ref.index)].str();
}

namespace {

json violation_json(const Violation& v, const LamInstance& instance) {
  json out;
  out["code"] = v.code;
  out["message"] = v.message;
  out["chords"] = json::array();
  for (const auto& ref : v.chords) out["chords"].push_back(chord_name(instance, ref));
  return out;
}

json condition_json(const ConditionReport& report, const LamInstance& instance) {
  json out;
  out["header"] = report.header;
  out["overall"] = report.overall;
  out["connectedness"]["pass"] = report.connectedness.pass;
  out["connectedness"]["components"] = report.connectedness.components.size();
  out["simple_cycle"]["pass"] = report.simple_cycle.pass;
  out["simple_cycle"]["offenses"] = json::array();
  for (const auto& off : report.simple_cycle.offenses) {
    out["simple_cycle"]["offenses"].push_back(
        {{"region", off.region_id}, {"edge", off.edge_label}, {"cycle1", off.cycle1}, {"cycle2", off.cycle2}});
  }
  out["high_valence"] = json::array();
  for (const auto& v : report.high_valence) {
    out["high_valence"].push_back({{"clause", std::string("high-valence ") + clause_label(v.clause)},
                                   {"chord", chord_name(instance, v.chord)},
                                   {"regions", v.regions}});
  }
  out["shared_endpoint"] = json::array();
  for (const auto& v : report.shared_endpoint) {
    json rec;
    rec["endpoint"] = v.endpoint.str();
    rec["leaves"] = json::array();
    for (const auto& ref : v.leaves) rec["leaves"].push_back(chord_name(instance, ref));
    rec["crosser"] = chord_name(instance, v.crosser);
    out["shared_endpoint"].push_back(rec);
  }
  return out;
}

}  // namespace

std::string report_text(const ValidationReport& report, const LamInstance& instance) {
  std::string out;
  if (report.ok()) return "validation: ok\n";
  out += "validation: " + std::to_string(report.violations.size()) + " violation(s)\n";
  for (const auto& v : report.violations) {
    out += "  [" + v.code + "] " + v.message + "\n";
  }
  return out;
}

std::string report_text(const ConditionReport& report, const LamInstance& instance) {
  std::string out;
  out += "note: " + report.header + "\n";
  out += std::string("connectedness: ") + (report.connectedness.pass ? "pass" : "fail");
  if (!report.connectedness.pass) {
    out += " (" + std::to_string(report.connectedness.components.size()) + " components)";
  }
  out += "\n";
  out += std::string("simple cycle: ") + (report.simple_cycle.pass ? "pass" : "fail") + "\n";
  for (const auto& off : report.simple_cycle.offenses) {
    out += "  region " + off.region_id + ": edge " + off.edge_label + " lies on two cycles\n";
  }
  out += std::string("high valence: ") +
         (report.high_valence.empty() ? "none" : std::to_string(report.high_valence.size()) + " violation(s)") +
         "\n";
  for (const auto& v : report.high_valence) {
    out += "  high-valence " + std::string(clause_label(v.clause)) + ": " +
           chord_name(instance, v.chord) + " in";
    for (const auto& r : v.regions) out += " " + r;
    out += "\n";
  }
  out += std::string("shared endpoints: ") +
         (report.shared_endpoint.empty() ? "none" : std::to_string(report.shared_endpoint.size()) + " violation(s)") +
         "\n";
  for (const auto& v : report.shared_endpoint) {
    out += "  at " + v.endpoint.str() + ": ";
    for (const auto& ref : v.leaves) out += chord_name(instance, ref) + " ";
    out += "all cross " + chord_name(instance, v.crosser) + "\n";
  }
  out += std::string("completable: ") + (report.overall ? "yes" : "no") + "\n";
  return out;
}

std::string report_text(const RealizationReport& report) {
  std::string out;
  for (const auto& diag : report.regions) {
    out += "  " + diag.region_id + ": ";
    switch (diag.kind) {
      case RegionDiagnosis::Kind::ideal_polygon: out += "ideal polygon"; break;
      case RegionDiagnosis::Kind::one_root: out += "one-root region"; break;
      case RegionDiagnosis::Kind::failure: out += "FAIL"; break;
    }
    out += " (" + diag.detail + ")\n";
  }
  for (const auto& [p, m] : report.coupled) {
    out += "  coupled pair: " + p + " / " + m + "\n";
  }
  for (const auto& f : report.failures) out += "  failure: " + f + "\n";
  out += std::string("realization: ") + (report.pass ? "pass" : "fail") + "\n";
  return out;
}

std::string report_json(const ValidationReport& report, const LamInstance& instance) {
  json out;
  out["ok"] = report.ok();
  out["violations"] = json::array();
  for (const auto& v : report.violations) out["violations"].push_back(violation_json(v, instance));
  return out.dump(2) + "\n";
}

std::string report_json(const ConditionReport& report, const LamInstance& instance) {
  return condition_json(report, instance).dump(2) + "\n";
}

std::string report_json(const RealizationReport& report) {
  json out;
  out["pass"] = report.pass;
  out["regions"] = json::array();
  for (const auto& diag : report.regions) {
    std::string kind = diag.kind == RegionDiagnosis::Kind::ideal_polygon ? "ideal-polygon"
                       : diag.kind == RegionDiagnosis::Kind::one_root    ? "one-root"
                                                                         : "failure";
    out["regions"].push_back({{"region", diag.region_id}, {"kind", kind}, {"detail", diag.detail}});
  }
  out["coupled"] = json::array();
  for (const auto& [p, m] : report.coupled) out["coupled"].push_back({{"plus", p}, {"minus", m}});
  out["failures"] = report.failures;
  return out.dump(2) + "\n";
}

namespace {

const char* kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::singleton: return "singleton";
    case ClassKind::polygon_side: return "polygon-side";
    case ClassKind::uncoupled_pair: return "uncoupled-pair";
    case ClassKind::singular: return "singular";
  }
  return "?";
}

}  // namespace

std::string plane_report_text(const LamInstance& instance, const CrossingSpace& space) {
  std::string out;
  out += "crossing points: " + std::to_string(space.points.size()) + "\n";
  out += "classes: " + std::to_string(space.classes.size()) + "\n";
  out += "singular points: " + std::to_string(space.singular_classes.size()) + "\n";
  for (std::size_t i = 0; i < space.classes.size(); ++i) {
    const auto& cls = space.classes[i];
    out += "  class " + std::to_string(i) + ": " + kind_name(cls.kind) + ", size " +
           std::to_string(cls.points.size()) + "\n";
  }
  return out;
}

std::string plane_report_json(const LamInstance& instance, const CrossingSpace& space) {
  json out;
  out["points"] = space.points.size();
  out["classes"] = json::array();
  for (const auto& cls : space.classes) {
    json rec;
    rec["kind"] = kind_name(cls.kind);
    rec["size"] = cls.points.size();
    rec["members"] = json::array();
    for (const auto& [i, j] : cls.points) {
      rec["members"].push_back({{"plus", instance.plus[static_cast<std::size_t>(i)].str()},
                                {"minus", instance.minus[static_cast<std::size_t>(j)].str()}});
    }
    out["classes"].push_back(rec);
  }
  out["singular"] = space.singular_classes.size();
  return out.dump(2) + "\n";
}

std::string completion_log_text(const CompletionResult& result) {
  std::string out;
  for (const auto& entry : result.log) {
    switch (entry.action) {
      case CompletionLogEntry::Action::added:
        out += "added " + entry.chord + " in " + entry.region_id + " from " + entry.disconnector +
               " gaps " + entry.gaps + "\n";
        break;
      case CompletionLogEntry::Action::skipped_existing:
        out += "kept " + entry.chord + " for " + entry.disconnector + " in " + entry.region_id + "\n";
        break;
      case CompletionLogEntry::Action::upgraded_phantom:
        out += "promoted closure chord " + entry.chord + " to leaf\n";
        break;
    }
  }
  out += "note: " + result.notes + "\n";
  return out;
}

}  // namespace prelam
