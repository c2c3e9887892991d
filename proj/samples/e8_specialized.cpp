// Runs every suite on E8 at the default specialization points and prints the
// dimension census next to it.

#include <iostream>

#include "bmw/verify.hpp"

int main() {
  auto rs = bmw::RootSystem::build("E8");
  std::cout << bmw::dims_report(rs).to_text() << "\n";
  int status = 0;
  for (const auto& [l0, r0] : bmw::specialization_points()) {
    auto report = bmw::run_suite(bmw::Suite::all, "E8", bmw::Mode::specialized(l0, r0));
    std::cout << report.to_text();
    if (!report.all_pass()) status = 1;
  }
  return status;
}
