#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace kirillov {

/// Named pass/fail checks produced by the verification routines.
struct VerificationReport {
  struct Entry {
    std::string name;
    bool passed = false;
    std::string detail;
  };

  std::string title;
  std::vector<Entry> entries;

  void add(std::string name, bool passed, std::string detail = {}) {
    entries.push_back({std::move(name), passed, std::move(detail)});
  }

  bool all_passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.passed; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.passed; }));
  }
};

}  // namespace kirillov
