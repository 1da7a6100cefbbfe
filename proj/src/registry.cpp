#include <map>

#include "singulact/invariants.hpp"

namespace singulact {

const std::vector<KnownValue>& known_values() {
  static const std::vector<KnownValue> table = {
      {"det generic matrix", InvariantKind::beta, Rat(4),
       "log resolution by blowing up the loci of matrices of rank <= i, i = 0..r-2"},
      {"det generic matrix", InvariantKind::alpha, Rat(2), "b_f(s) = prod_{i=1..r} (s + i)"},
  };
  return table;
}

InvariantReport registry_report(const KnownValue& kv) {
  return InvariantReport{kv.kind, kv.value, Method::registry, 0, kv.description, std::nullopt, {}};
}

std::vector<CheckOutcome> registry_question1() {
  std::map<std::string, std::pair<std::optional<Rat>, std::optional<Rat>>> by_input;
  for (const auto& kv : known_values()) {
    auto& slot = by_input[kv.description];
    if (kv.kind == InvariantKind::alpha) slot.first = kv.value;
    if (kv.kind == InvariantKind::beta) slot.second = kv.value;
  }
  std::vector<CheckOutcome> out;
  for (const auto& [desc, ab] : by_input) {
    if (!ab.first || !ab.second) continue;
    CheckOutcome c;
    c.name = "question1";
    c.relation = "<=";
    c.lhs = Bound::point(*ab.first);
    c.rhs = Bound::point(*ab.second);
    c.verdict = *ab.first <= *ab.second ? Verdict::holds : Verdict::fails;
    c.equality = *ab.first == *ab.second;
    c.witness = desc;
    c.note = "registry values";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace singulact
