#include "gkm/acceptance.hpp"

#include <iostream>

int main() {
  gkm::AcceptanceOptions opt;
  opt.on_result = [](const gkm::CriterionResult& r) {
    std::cout << gkm::format_line(r) << "\n";
    for (auto& d : r.details) std::cout << "       " << d << "\n";
    std::cout.flush();
  };
  auto rs = gkm::run_acceptance(opt);
  return gkm::all_blocking_pass(rs) ? 0 : 1;
}
