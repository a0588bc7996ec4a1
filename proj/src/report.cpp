#include "procdual/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace procdual {

Clause& Certificate::add(std::string name, std::string statement, bool passed, std::string detail) {
  clauses.push_back({std::move(name), std::move(statement), passed, std::move(detail), false});
  return clauses.back();
}

Clause& Certificate::note(std::string name, std::string statement, bool value, std::string detail) {
  clauses.push_back({std::move(name), std::move(statement), value, std::move(detail), true});
  return clauses.back();
}

void Certificate::witness(std::string name, std::string value) { witnesses.emplace_back(std::move(name), std::move(value)); }

bool Certificate::passed() const {
  return precondition_ok() &&
         std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.informational || c.passed; });
}

const Clause* Certificate::find(const std::string& name) const {
  for (const auto& c : clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool RunReport::passed() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.passed(); });
}

bool RunReport::precondition_ok() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.precondition_ok(); });
}

namespace {

void indent_block(std::ostringstream& out, const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << pad << line << '\n';
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  out << "instance: " << r.instance_id << '\n';
  for (const auto& [k, v] : r.inputs) out << "input " << k << ": " << v << '\n';
  for (const auto& [k, v] : r.results) {
    if (v.find('\n') == std::string::npos) {
      out << k << ": " << v << '\n';
    } else {
      out << k << ":\n";
      indent_block(out, v, "  ");
    }
  }
  for (const auto& c : r.certificates) {
    out << "certificate: " << c.title << " -> " << (c.passed() ? "PASS" : "FAIL") << '\n';
    if (!c.precondition_ok()) out << "  precondition error: " << c.precondition_error << '\n';
    for (const auto& cl : c.clauses) {
      const char* tag = cl.informational ? (cl.passed ? "yes " : "no  ") : (cl.passed ? "pass" : "FAIL");
      out << "  [" << tag << "] " << cl.name << ": " << cl.statement;
      if (!cl.detail.empty()) out << " (" << cl.detail << ")";
      out << '\n';
    }
    for (const auto& [k, v] : c.witnesses) {
      if (v.find('\n') == std::string::npos) {
        out << "  witness " << k << ": " << v << '\n';
      } else {
        out << "  witness " << k << ":\n";
        indent_block(out, v, "    ");
      }
    }
  }
  out << "status: " << (r.passed() ? "PASS" : (r.precondition_ok() ? "FAIL" : "PRECONDITION-ERROR")) << '\n';
  if (r.seconds >= 0) out << "seconds: " << r.seconds << '\n';
  return out.str();
}

std::string render_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  j["instance"] = r.instance_id;
  ordered_json inputs = ordered_json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  ordered_json results = ordered_json::object();
  for (const auto& [k, v] : r.results) results[k] = v;
  j["results"] = results;
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json cj;
    cj["title"] = c.title;
    cj["passed"] = c.passed();
    if (!c.precondition_ok()) cj["precondition_error"] = c.precondition_error;
    ordered_json clauses = ordered_json::array();
    for (const auto& cl : c.clauses) {
      ordered_json k{{"name", cl.name}, {"statement", cl.statement}, {"passed", cl.passed}};
      if (cl.informational) k["informational"] = true;
      if (!cl.detail.empty()) k["detail"] = cl.detail;
      clauses.push_back(k);
    }
    cj["clauses"] = clauses;
    ordered_json w = ordered_json::object();
    for (const auto& [k, v] : c.witnesses) w[k] = v;
    cj["witnesses"] = w;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  j["status"] = r.passed() ? "pass" : (r.precondition_ok() ? "fail" : "precondition-error");
  if (r.seconds >= 0) j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

}  // namespace procdual
