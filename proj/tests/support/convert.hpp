#pragma once

#include <string>
#include <vector>

#include "nonevade/lattice.hpp"
#include "nonevade/lattice_io.hpp"
#include "nonevade/order_complex.hpp"
#include "reference.hpp"

namespace testing_support {

inline ref::Order to_ref(const nonevade::Lattice& l) {
  ref::Order o{l.labels(), {}};
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j)
      if (l.leq(i, j)) o.leq.insert({l.label(i), l.label(j)});
  return o;
}

inline ref::Faces to_ref(const nonevade::Complex& c) {
  ref::Faces out;
  for (auto mask : c.faces()) {
    const auto labels = c.labels_of(mask);
    out.insert(ref::Face(labels.begin(), labels.end()));
  }
  return out;
}

inline nonevade::Complex from_facets(std::vector<std::string> vertices, const std::vector<nonevade::Face>& facets) {
  return nonevade::Complex::from_faces(std::move(vertices), facets);
}

inline const nonevade::Lattice& d12() {
  static const nonevade::Lattice l = nonevade::parse_lattice(
      "elements: 1 2 3 4 6 12\n"
      "cover: 1 2\ncover: 1 3\ncover: 2 4\ncover: 2 6\ncover: 3 6\ncover: 4 12\ncover: 6 12\n");
  return l;
}

inline nonevade::Lattice parse(const std::string& text) { return nonevade::parse_lattice(text); }

// 4 - 2 - 6 - 3
inline nonevade::Complex path4263() {
  return from_facets({"2", "3", "4", "6"}, {{"2", "4"}, {"2", "6"}, {"3", "6"}});
}

inline nonevade::Complex hollow_triangle() {
  return from_facets({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

}  // namespace testing_support
