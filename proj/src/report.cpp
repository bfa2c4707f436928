#include "ydh/report.hpp"

#include "ydh/error.hpp"

namespace ydh {

bool CheckReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check& CheckReport::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw PreconditionViolated("no check named " + name);
}

size_t CheckReport::open(const std::string& name, bool derived) {
  checks.push_back(Check{name, derived, true, {}, {}});
  return checks.size() - 1;
}

void CheckReport::expect(size_t i, bool ok, std::vector<int> witness, const std::string& detail) {
  Check& c = checks.at(i);
  if (ok || !c.pass) return;
  c.pass = false;
  c.witness = std::move(witness);
  c.detail = detail;
}

void CheckReport::add(const std::string& name, bool ok, std::vector<int> witness, const std::string& detail) {
  expect(open(name), ok, std::move(witness), detail);
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

}  // namespace ydh
