#pragma once

#include <string>
#include <vector>

namespace ydh {

// One named exact check; the witness lists basis or element indices of the
// first failure.
struct Check {
  std::string name;
  bool derived = false;  // consequence of other checks; a failure flags corruption
  bool pass = true;
  std::vector<int> witness;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;

  bool pass() const;
  const Check& get(const std::string& name) const;
  // Appends a check and returns its index.
  size_t open(const std::string& name, bool derived = false);
  // Records a failure at index i unless one is already recorded.
  void expect(size_t i, bool ok, std::vector<int> witness = {}, const std::string& detail = {});
  void add(const std::string& name, bool ok, std::vector<int> witness = {}, const std::string& detail = {});
  // Appends every check of `other`, prefixing names.
  void merge(const CheckReport& other, const std::string& prefix);
};

}  // namespace ydh
