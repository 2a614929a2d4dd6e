#pragma once

#include <string>
#include <vector>

#include "frlim/freeword.hpp"
#include "frlim/matrix.hpp"

namespace frlim {

/// Finite group presentation F -->> G: named free generators and a list of
/// freely reduced, nonempty relator words.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<std::string> rels)
      : generator_names(std::move(names)) {
    for (const std::string& r : rels) add_relator(r);
  }

  std::size_t rank() const { return generator_names.size(); }

  void add_relator(const std::string& text) {
    FreeWord w = parse_word(text, generator_names);
    add_relator(w);
  }
  void add_relator(const FreeWord& w) {
    if (w.is_identity()) throw InvalidGenerator("relator must be nonempty");
    if (w.min_generator_count() > static_cast<int>(rank()))
      throw InvalidGenerator("relator uses undeclared generator");
    relators.push_back(w);
  }

  /// Exponent-sum matrix (generators x relators); its cokernel is G_ab.
  IntMatrix exponent_matrix() const {
    IntMatrix m(rank(), relators.size());
    for (std::size_t j = 0; j < relators.size(); ++j)
      for (int l : relators[j].letters())
        m.at(static_cast<std::size_t>(std::abs(l)) - 1, j) += l > 0 ? 1 : -1;
    return m;
  }

  std::string describe() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      if (i) s += ",";
      s += generator_names[i];
    }
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (i) s += ", ";
      s += relators[i].to_string(generator_names);
    }
    s += ">";
    return s;
  }
};

/// Common test groups.
inline Presentation cyclic_presentation(long m) {
  Presentation p;
  p.generator_names = {"x"};
  p.add_relator(FreeWord::generator(0).pow(m));
  return p;
}
inline Presentation klein_four_presentation() {
  return Presentation({"x", "y"}, {"x^2", "y^2", "(x*y)^2"});
}
inline Presentation symmetric3_presentation() {
  return Presentation({"x", "y"}, {"x^2", "y^3", "(x*y)^2"});
}

}  // namespace frlim
