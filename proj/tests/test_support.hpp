#pragma once

#include <memory>
#include <string>

#include "agcode/code.hpp"
#include "agcode/curve_io.hpp"

namespace agcode::testing {

inline std::string curve_path(const std::string& name) { return std::string(AGCODE_DATA_DIR) + "/curves/" + name + ".json"; }

inline StandardForm load_ring(const std::string& name) { return StandardForm(load_curve(curve_path(name))); }

inline std::shared_ptr<const CodeFamily> load_family(const std::string& name) {
  StandardForm ring = load_ring(name);
  auto pts = resolve_points(ring);
  return std::make_shared<const CodeFamily>(std::move(ring), std::move(pts));
}

inline Field gf4() { return Field(2, 2, {1, 1, 1}); }

inline FieldElement el(std::uint32_t v) { return FieldElement{v}; }

inline Poly poly_of(std::initializer_list<std::uint32_t> c) {
  std::vector<FieldElement> v;
  for (auto x : c) v.push_back(FieldElement{x});
  return Poly(std::move(v));
}

}  // namespace agcode::testing
