#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isotype {

// First violating tuple of a sweep, in lexicographic order of basis indices.
struct Witness {
  std::string item;
  std::vector<long long> tuple;
  std::string detail;
};

struct CheckItem {
  std::string name;
  unsigned long long checked = 0;
  unsigned long long violations = 0;
  std::optional<Witness> witness;
  std::string note;
  bool informational = false; // recorded but does not gate pass/fail
};

// Machine-readable outcome of one verification task. Content is fully
// deterministic for a fixed input (and seed); wall time is carried separately
// and excluded from deterministic serializations by default.
struct VerificationReport {
  enum class Status { Pass, Fail, Error };

  std::string task;
  Status status = Status::Pass;
  std::vector<std::pair<std::string, long long>> dims;
  unsigned long long checked = 0;
  unsigned long long violations = 0;
  std::optional<Witness> witness;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;
  long long millis = 0;

  void add_dim(const std::string &name, long long value) {
    dims.emplace_back(name, value);
  }

  void add_item(CheckItem item) {
    checked += item.checked;
    if (!item.informational) {
      violations += item.violations;
      if (item.violations > 0) {
        if (status == Status::Pass)
          status = Status::Fail;
        if (!witness && item.witness)
          witness = item.witness;
      }
    }
    items.push_back(std::move(item));
  }

  void add_note(std::string n) { notes.push_back(std::move(n)); }

  bool passed() const { return status == Status::Pass; }

  static VerificationReport make_error(const std::string &task,
                                       const std::string &msg) {
    VerificationReport r;
    r.task = task;
    r.status = Status::Error;
    r.add_note(msg);
    return r;
  }

  static const char *status_name(Status s) {
    switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "error";
    }
  }
};

// Per-chunk accumulator for parallel sweeps. Chunks are merged in index
// order, so "first witness" is the lexicographically smallest tuple.
struct SweepAccum {
  unsigned long long checked = 0;
  unsigned long long violations = 0;
  std::optional<Witness> first;

  void count() { ++checked; }

  void violate(const std::string &item, std::vector<long long> tuple,
               std::string detail = {}) {
    ++violations;
    if (!first)
      first = Witness{item, std::move(tuple), std::move(detail)};
  }

  void merge(const SweepAccum &o) {
    checked += o.checked;
    violations += o.violations;
    if (!first && o.first)
      first = o.first;
  }

  CheckItem into_item(std::string name, bool informational = false) const {
    CheckItem it;
    it.name = std::move(name);
    it.checked = checked;
    it.violations = violations;
    it.witness = first;
    it.informational = informational;
    return it;
  }
};

} // namespace isotype
