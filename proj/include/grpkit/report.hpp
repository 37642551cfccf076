#pragma once

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "corpus.hpp"
#include "counterexample.hpp"
#include "criteria.hpp"

namespace grpkit {

inline constexpr const char* kVersion = "0.1.0";

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Detail& d) {
  return std::visit([](const auto& v) { return ojson(v); }, d);
}

inline ojson to_json(const std::vector<std::pair<std::string, Detail>>& kv) {
  ojson o = ojson::object();
  for (const auto& [k, v] : kv) o[k] = to_json(v);
  return o;
}

inline std::string perms_text(const std::vector<Perm>& gens) {
  std::string out;
  for (const auto& g : gens) out += (out.empty() ? "" : ", ") + g.to_cycle_string();
  return out;
}

inline ojson to_json(const CriterionResult& r) {
  ojson o;
  o["name"] = r.name;
  o["holds"] = r.holds;
  o["details"] = to_json(r.details);
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) {
    ojson x;
    x["maximal"] = w.maximal;
    x["maximal_order"] = w.maximal_order;
    x["maximal_index"] = w.maximal_index;
    x["value"] = w.value;
    x["class"] = to_string(w.cls);
    ws.push_back(std::move(x));
  }
  o["witnesses"] = std::move(ws);
  if (!r.failing_maximal_gens.empty()) o["failing_maximal"] = perms_text(r.failing_maximal_gens);
  return o;
}

inline ojson to_json(const std::vector<ProbeResult>& probes) {
  ojson arr = ojson::array();
  for (const auto& p : probes) {
    ojson x;
    x["step"] = p.step;
    x["holds"] = p.holds;
    x["evidence"] = to_json(p.evidence);
    arr.push_back(std::move(x));
  }
  return arr;
}

/// Timings are left out unless requested so that reports are reproducible byte for byte.
inline ojson to_json(const VerificationReport& rep, bool timings = false) {
  ojson o;
  o["seed"] = rep.seed;
  ojson cs = ojson::array();
  for (const auto& c : rep.claims) {
    ojson x;
    x["id"] = c.id;
    x["statement"] = c.statement;
    x["expected"] = to_json(c.expected);
    x["computed"] = to_json(c.computed);
    x["pass"] = c.pass;
    if (timings) x["seconds"] = c.seconds;
    cs.push_back(std::move(x));
  }
  o["claims"] = std::move(cs);
  o["info"] = to_json(rep.info);
  o["overall"] = rep.overall;
  o["conjecture_refuted"] = rep.refuted;
  return o;
}

inline ojson envelope(const std::string& command, ojson inputs, ojson result) {
  ojson o;
  o["version"] = kVersion;
  o["command"] = command;
  o["inputs"] = std::move(inputs);
  o["result"] = std::move(result);
  return o;
}

inline std::string detail_text(const Detail& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          std::string s = "[";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
          return s + "]";
        }
      },
      d);
}

inline std::string render_text(const VerificationReport& rep, bool timings = false) {
  std::ostringstream out;
  for (const auto& c : rep.claims) {
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.statement << ": computed "
        << detail_text(c.computed);
    if (!c.pass) out << ", expected " << detail_text(c.expected);
    if (timings) out << " (" << c.seconds << " s)";
    out << "\n";
  }
  for (const auto& [k, v] : rep.info) out << "info " << k << " = " << detail_text(v) << "\n";
  out << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
  if (rep.refuted) out << "Conjecture 1 refuted: hypothesis holds but G is not supersoluble\n";
  return out.str();
}

inline std::string render_text(const CriterionResult& r) {
  std::ostringstream out;
  out << r.name << ": " << (r.holds ? "holds" : "fails") << "\n";
  for (const auto& [k, v] : r.details) out << "  " << k << " = " << detail_text(v) << "\n";
  for (const auto& w : r.witnesses)
    out << "  maximal #" << w.maximal << " order " << w.maximal_order << " index "
        << w.maximal_index << ": value " << w.value << " (" << to_string(w.cls) << ")\n";
  if (!r.failing_maximal_gens.empty())
    out << "  failing maximal generated by " << perms_text(r.failing_maximal_gens) << "\n";
  return out.str();
}

inline ojson to_json(const CorpusReport& rep) {
  ojson o;
  o["check"] = rep.check;
  ojson rows = ojson::array();
  for (const auto& r : rep.rows) {
    ojson x;
    x["group"] = r.group;
    x["order"] = r.order;
    x["skipped"] = r.skipped;
    x["pass"] = r.pass;
    x["columns"] = to_json(r.columns);
    rows.push_back(std::move(x));
  }
  o["rows"] = std::move(rows);
  o["pass"] = rep.pass;
  return o;
}

inline std::string render_text(const CorpusReport& rep) {
  std::ostringstream out;
  out << "corpus " << rep.check << "\n";
  for (const auto& r : rep.rows) {
    std::string name = r.group;
    name.resize(std::max<std::size_t>(name.size(), 9), ' ');
    out << "  " << name << " |G|=" << r.order << "  "
        << (r.skipped ? "skip" : r.pass ? "pass" : "FAIL");
    for (const auto& [k, v] : r.columns) out << "  " << k << "=" << detail_text(v);
    out << "\n";
  }
  out << "overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace grpkit
