// Reduces every product of an A2 basis monomial with a generator and prints
// the result on the 15-monomial basis.

#include <iostream>

#include "bmw/verify.hpp"

int main() {
  auto rs = std::make_shared<const bmw::RootSystem>(bmw::RootSystem::build("A2"));
  bmw::WordReducer red(rs);
  for (const auto& s : bmw::a2_monomials()) {
    for (const char* gen : {"g1", "e2"}) {
      bmw::BmwWord w = bmw::parse_word(s + " " + gen, 2);
      std::cout << bmw::to_string(w) << "  ->  " << red.reduce(w).to_string() << "\n";
    }
  }
  std::cout << bmw::a2_dimension_check().to_text();
}
