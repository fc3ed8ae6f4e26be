#ifndef EWK_LAWS_HPP
#define EWK_LAWS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ewk/cosmos.hpp"

namespace ewk {

struct LawCheck {
  std::string id;
  bool pass = false;
  // When the check is the confirmation of an expected negative (e.g. a map
  // that the theory predicts is NOT invertible), pass means "confirmed".
  bool expected_negative = false;
  std::string witness;  // first violated entry, empty on pass
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string id, bool pass, std::string witness = {}) {
    checks.push_back({std::move(id), pass, false, std::move(witness)});
  }

  void add_expected_negative(std::string id, bool confirmed, std::string witness = {}) {
    checks.push_back({std::move(id), confirmed, true, std::move(witness)});
  }

  // Records pass iff a == b, with the first differing entry as witness.
  void add_equal(std::string id, const Mor& a, const Mor& b) {
    auto diff = a.first_difference(b);
    if (!diff) {
      add(std::move(id), true);
    } else {
      std::string w = "entry (" + std::to_string(diff->row) + "," + std::to_string(diff->col) +
                      "): " + diff->lhs + " vs " + diff->rhs;
      add(std::move(id), false, std::move(w));
    }
  }

  void merge(const LawReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace ewk

#endif  // EWK_LAWS_HPP
