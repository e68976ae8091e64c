#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "exstructa/catalog.hpp"

namespace exstructa::testing {

// Catalogs are costly to build; tests share one instance per (name, p).
inline const ModuleCatalog& catalog(const std::string& name, int p = 2) {
  static std::map<std::pair<std::string, int>, ModuleCatalog> cache;
  auto key = std::make_pair(name, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ModuleCatalog c;
  if (!builtin_fixture_text(name).empty()) c = load_fixture_text(builtin_fixture_text(name), p);
  else if (name == "A2") c = nakayama_catalog(linear_a(2), p);
  else if (name == "A3") c = nakayama_catalog(linear_a(3), p);
  else if (name == "A4") c = nakayama_catalog(linear_a(4), p);
  else if (name == "C22") c = nakayama_catalog(build_algebra(Shape::Cyclic, 2, {2, 2}), p);
  else c = load_fixture_file(std::string(EXSTRUCTA_FIXTURE_DIR) + "/" + name + ".json", p);
  return cache.emplace(key, std::move(c)).first->second;
}

inline int id(const ModuleCatalog& c, const std::string& name) {
  int i = c.module_index(name);
  if (i < 0) throw std::runtime_error("no module " + name);
  return i;
}

}  // namespace exstructa::testing
