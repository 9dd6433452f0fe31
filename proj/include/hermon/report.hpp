#pragma once

#include <string>
#include <vector>

namespace hermon {

// Outcome of a verification sweep: counts plus human-readable failure lines.
// A sweep passes iff no failure was recorded; skips (guarded-out grid points)
// are counted separately and never count as failures.
struct CheckReport {
  unsigned long long checked = 0;
  unsigned long long skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }

  void merge(const CheckReport& o) {
    checked += o.checked;
    skipped += o.skipped;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace hermon
