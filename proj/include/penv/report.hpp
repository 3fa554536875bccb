#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace penv {

enum class Status { pass, fail, not_applicable, info };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  // Non-empty for every failing check.
  std::string witness;
  std::string detail;
};

/// A tree of named check results. Violations are recorded, never thrown.
struct Report {
  std::string name;
  std::vector<Check> checks;
  std::vector<Report> sections;

  void pass(std::string check, std::string detail = {});
  void fail(std::string check, std::string witness, std::string detail = {});
  void info(std::string check, std::string detail);
  void not_applicable(std::string check, std::string detail);
  void add(Report section) { sections.push_back(std::move(section)); }

  bool ok() const;
  std::size_t failure_count() const;
  /// Depth-first first failing check, with its section path prefixed to the name.
  std::optional<Check> first_failure() const;
  const Report* section(const std::string& section_name) const;
  const Check* check(const std::string& check_name) const;
};

/// Accumulates one clause over many cases; keeps the first counterexample.
class Clause {
 public:
  explicit Clause(std::string name) : name_(std::move(name)) {}

  template <typename Witness>
  bool verify(bool holds, Witness&& witness) {
    ++cases_;
    if (!holds) {
      ++failures_;
      if (first_witness_.empty()) first_witness_ = witness();
    }
    return holds;
  }

  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  bool holds() const { return failures_ == 0; }

  void record(Report& report) const;

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_witness_;
};

std::string to_text(const Report& report);

}  // namespace penv
