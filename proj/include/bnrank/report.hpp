#pragma once

// JSON and text rendering of rank and verification reports.
//
// RankReport JSON:
//   {"n": int, "ranks": {"r1": {...}, ..., "r5": {...}}}
// where each rank holds either "value" or "lower"/"upper", plus
// "provenance", "witness" (labels, when known) and "elapsed_ms". Values that
// do not fit in 64 bits are written as decimal strings.

#include <sstream>
#include <string>

#include "json.hpp"

#include "bnrank/ranks.hpp"
#include "bnrank/semigroup.hpp"
#include "bnrank/verify.hpp"

namespace bnrank {

inline nlohmann::json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(v);
  return v.str();
}

inline nlohmann::json rank_value_json(const RankValue& v, const FiniteSemigroup* s) {
  nlohmann::json j = nlohmann::json::object();
  if (v.exact()) {
    j["value"] = big_to_json(v.lower);
  } else {
    j["lower"] = big_to_json(v.lower);
    j["upper"] = big_to_json(v.upper);
  }
  j["provenance"] = provenance_name(v.provenance);
  if (v.witness && s != nullptr) j["witness"] = s->labels_of(*v.witness);
  j["elapsed_ms"] = v.elapsed.count();
  return j;
}

inline nlohmann::json rank_report_json(const RankReport& r, const FiniteSemigroup* s) {
  nlohmann::json j;
  j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
  j["ranks"] = nlohmann::json::object();
  for (int k = 1; k <= 5; ++k) {
    if (r[k]) j["ranks"]["r" + std::to_string(k)] = rank_value_json(*r[k], s);
  }
  return j;
}

inline std::string rank_value_text(const RankValue& v) {
  std::string out = v.exact() ? v.lower.str() : "[" + v.lower.str() + ", " + v.upper.str() + "]";
  return out + " (" + provenance_name(v.provenance) + ")";
}

inline std::string rank_report_text(const RankReport& r, const FiniteSemigroup* s) {
  std::ostringstream out;
  for (int k = 1; k <= 5; ++k) {
    if (!r[k]) continue;
    out << "r" << k << " = " << rank_value_text(*r[k]) << "\n";
    if (r[k]->witness && s != nullptr && r[k]->witness->size() <= 64) {
      out << "   witness:";
      for (const auto& l : s->labels_of(*r[k]->witness)) out << " " << l;
      out << "\n";
    }
  }
  return out.str();
}

inline std::string verification_status(const VerificationReport& v) {
  if (!v.all_passed()) return "mismatch";
  return v.budget_exhausted ? "bounds-only" : "verified";
}

inline nlohmann::json verification_json(const VerificationReport& v, const FiniteSemigroup* s) {
  nlohmann::json j;
  j["n"] = v.n;
  j["status"] = verification_status(v);
  j["checks"] = nlohmann::json::array();
  for (const auto& i : v.items) {
    j["checks"].push_back({{"name", i.name},
                           {"result", i.skipped ? "skipped" : (i.passed ? "pass" : "fail")},
                           {"detail", i.detail},
                           {"elapsed_ms", i.elapsed.count()}});
  }
  j["ranks"] = rank_report_json(v.ranks, s)["ranks"];
  return j;
}

inline std::string verification_text(const VerificationReport& v) {
  std::ostringstream out;
  out << "A+(B_" << v.n << ") verification\n";
  for (const auto& i : v.items) {
    out << (i.skipped ? "SKIP " : (i.passed ? "PASS " : "FAIL ")) << i.name << ": " << i.detail << "\n";
  }
  out << "status: " << verification_status(v) << "\n";
  return out.str();
}

}  // namespace bnrank
