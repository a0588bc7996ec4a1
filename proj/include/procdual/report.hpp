#pragma once

#include <string>
#include <utility>
#include <vector>

namespace procdual {

/// One checked statement with its outcome.
struct Clause {
  std::string name;
  std::string statement;
  bool passed = false;
  std::string detail;
  /// Informational clauses are reported but never fail a certificate.
  bool informational = false;
};

struct Certificate {
  std::string title;
  std::vector<Clause> clauses;
  /// Set when an input requirement failed; distinct from a failed clause.
  std::string precondition_error;
  std::vector<std::pair<std::string, std::string>> witnesses;

  Clause& add(std::string name, std::string statement, bool passed, std::string detail = {});
  Clause& note(std::string name, std::string statement, bool value, std::string detail = {});
  void witness(std::string name, std::string value);
  bool precondition_ok() const { return precondition_error.empty(); }
  bool passed() const;
  const Clause* find(const std::string& name) const;
};

struct RunReport {
  std::string instance_id;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<Certificate> certificates;
  /// Wall time; rendered only when requested so reports stay byte-stable.
  double seconds = -1;

  void result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }
  bool passed() const;
  bool precondition_ok() const;
};

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

}  // namespace procdual
