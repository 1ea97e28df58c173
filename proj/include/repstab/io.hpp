#pragma once

// Serialization: JSON (round-trippable), TSV and plain-text tables for
// decompositions and stability reports.

#include "stability.hpp"

#include <json.hpp>

namespace repstab {

using json = nlohmann::ordered_json;

inline json label_to_json(const Label& l) {
  return std::visit([](const auto& x) -> json {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, DoublePartition>)
      return json{{"plus", x.plus.parts()}, {"minus", x.minus.parts()}};
    else
      return json(x.parts());
  }, l);
}

inline Label label_from_json(Family family, const json& j) {
  try {
    switch (family) {
    case Family::HYP:
      return DoublePartition{Partition(j.at("plus").get<std::vector<int>>()), Partition(j.at("minus").get<std::vector<int>>())};
    case Family::GL: return PseudoPartition(j.get<std::vector<int>>());
    default: return Partition(j.get<std::vector<int>>());
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Usage, std::string("bad label in JSON: ") + e.what());
  }
}

inline json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& [l, m] : d.terms()) terms.push_back(json{{"lambda", label_to_json(l)}, {"mult", m}});
  json out{{"family", to_string(d.family())}, {"n", d.n()}};
  if (d.is_virtual()) out["virtual"] = true;
  out["terms"] = std::move(terms);
  return out;
}

inline Decomposition decomposition_from_json(const json& j) {
  try {
    Family family = parse_family(j.at("family").get<std::string>());
    Decomposition d(family, j.at("n").get<int>(), j.value("virtual", false));
    for (const auto& t : j.at("terms")) d.add(label_from_json(family, t.at("lambda")), t.at("mult").get<Mult>());
    return d;
  } catch (const json::exception& e) {
    fail(ErrorKind::Usage, std::string("bad decomposition JSON: ") + e.what());
  }
}

/// One line per term: family, n, label, multiplicity.
inline std::string to_tsv(const Decomposition& d, bool header = true) {
  std::ostringstream os;
  if (header) os << "family\tn\tlambda\tmult\n";
  for (const auto& [l, m] : d.terms()) os << to_string(d.family()) << '\t' << d.n() << '\t' << to_string(l) << '\t' << m << '\n';
  return os.str();
}

/// "V(1)^2 + V(1,1) + ..." with the empty label written V(0).
inline std::string to_table_row(const Decomposition& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [l, m] : d.terms()) {
    if (!out.empty()) out += " + ";
    if (m < 0) out += "(" + std::to_string(m) + ")";
    out += "V(" + to_string(l) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

inline json to_json(const StabilityReport& r) {
  json onsets = json::array();
  for (const auto& [l, n] : r.onsets) onsets.push_back(json{{"lambda", label_to_json(l)}, {"onset", n}});
  json out{{"family", to_string(r.family)},
           {"range", {r.first, r.last}},
           {"window", r.window},
           {"verdict", r.verdict_string()}};
  if (r.verdict == Verdict::Periodic) out["period"] = r.period;
  out["uniform_onset"] = r.uniform_onset ? json(*r.uniform_onset) : json(nullptr);
  out["onsets"] = std::move(onsets);
  out["empirical"] = r.empirical;
  out["note"] = r.note;
  return out;
}

/// Accepts {"family":..,"entries":[decomposition,...]} or a bare array of decompositions.
inline DecompositionSequence sequence_from_json(const json& j) {
  const json& list = j.is_array() ? j : j.at("entries");
  if (list.empty()) fail(ErrorKind::Usage, "empty decomposition sequence");
  DecompositionSequence seq;
  seq.family = decomposition_from_json(list.front()).family();
  if (j.is_object()) seq.provenance = j.value("provenance", "");
  for (const auto& e : list) seq.add(decomposition_from_json(e));
  seq.validate();
  return seq;
}

} // namespace repstab
