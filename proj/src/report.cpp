#include "penv/report.hpp"

#include "penv/error.hpp"

#include <sstream>

namespace penv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::InvalidOpenSet: return "InvalidOpenSet";
    case ErrorKind::NotOpen: return "NotOpen";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Error";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "n/a";
    case Status::info: return "info";
  }
  return "?";
}

void Report::pass(std::string check, std::string detail) {
  checks.push_back({std::move(check), Status::pass, {}, std::move(detail)});
}

void Report::fail(std::string check, std::string witness, std::string detail) {
  if (witness.empty()) witness = "(unspecified)";
  checks.push_back({std::move(check), Status::fail, std::move(witness), std::move(detail)});
}

void Report::info(std::string check, std::string detail) {
  checks.push_back({std::move(check), Status::info, {}, std::move(detail)});
}

void Report::not_applicable(std::string check, std::string detail) {
  checks.push_back({std::move(check), Status::not_applicable, {}, std::move(detail)});
}

bool Report::ok() const { return failure_count() == 0; }

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == Status::fail ? 1 : 0;
  for (const auto& s : sections) n += s.failure_count();
  return n;
}

std::optional<Check> Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == Status::fail) {
      Check out = c;
      out.name = name + "/" + c.name;
      return out;
    }
  }
  for (const auto& s : sections) {
    if (auto f = s.first_failure()) {
      f->name = name + "/" + f->name;
      return f;
    }
  }
  return std::nullopt;
}

const Report* Report::section(const std::string& section_name) const {
  for (const auto& s : sections)
    if (s.name == section_name) return &s;
  return nullptr;
}

const Check* Report::check(const std::string& check_name) const {
  for (const auto& c : checks)
    if (c.name == check_name) return &c;
  return nullptr;
}

void Clause::record(Report& report) const {
  const std::string detail = std::to_string(cases_) + " case(s)";
  if (failures_ == 0) {
    report.pass(name_, detail);
  } else {
    report.fail(name_, first_witness_, detail + ", " + std::to_string(failures_) + " failure(s)");
  }
}

namespace {

void render(const Report& r, int depth, std::ostringstream& out) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out << indent << "== " << r.name << (r.ok() ? "" : "  [FAILED]") << '\n';
  for (const auto& c : r.checks) {
    out << indent << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (!c.witness.empty()) out << "  (witness: " << c.witness << ')';
    out << '\n';
  }
  for (const auto& s : r.sections) render(s, depth + 1, out);
}

}  // namespace

std::string to_text(const Report& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace penv
