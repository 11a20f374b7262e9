#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybhecke {

struct Witness {
  std::string check;
  std::string detail;
};

// Outcome of a verification suite: counts every check, keeps a witness for
// every failure.
struct Report {
  std::string suite;
  std::optional<std::uint64_t> seed;
  int checks = 0;
  std::vector<Witness> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }

  bool expect(bool ok, std::string check, std::string detail = {}) {
    ++checks;
    if (!ok) failures.push_back({std::move(check), std::move(detail)});
    return ok;
  }

  void note(std::string s) { notes.push_back(std::move(s)); }

  void merge(const Report& other) {
    checks += other.checks;
    for (const auto& w : other.failures) failures.push_back({other.suite + ": " + w.check, w.detail});
    for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
  }
};

}  // namespace ybhecke
