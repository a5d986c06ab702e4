#ifndef BECK_VARIETIES_HPP
#define BECK_VARIETIES_HPP

#include <map>
#include <string>
#include <vector>

#include "beck/errors.hpp"
#include "beck/magma.hpp"

namespace beck {

/// Defining equations of the named varieties, in DSL form.
inline const std::map<std::string, std::vector<std::string>>& builtin_variety_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"mag", {}},
      {"triv", {"x*y"}},
      {"ass", {"(x*y)*z - x*(y*z)"}},
      {"com", {"x*y - y*x"}},
      {"comass", {"x*y - y*x", "(x*y)*z - x*(y*z)"}},
      {"lie", {"x*x", "(x*y)*z + (y*z)*x + (z*x)*y"}},
      {"leib", {"(x*y)*z - x*(y*z) - (x*z)*y"}},
      {"lev", {"x*y - y*x", "(w*x)*(y*z) - (w*y)*(x*z)"}},
      {"alt", {"(x*x)*y - x*(x*y)", "(x*y)*y - x*(y*y)"}},
      {"leftalt", {"(x*x)*y - x*(x*y)"}},
      {"cube", {"(x*x)*x"}},
  };
  return table;
}

inline std::vector<MagmaPolynomial> builtin_variety(const std::string& name,
                                                    const FieldSpec& field) {
  const auto& table = builtin_variety_table();
  auto it = table.find(name);
  if (it == table.end()) throw UnknownVariety(name);
  std::vector<MagmaPolynomial> out;
  for (const auto& eq : it->second) out.push_back(parse_equation(eq, field).polynomial);
  return out;
}

}  // namespace beck

#endif  // BECK_VARIETIES_HPP
