#include <iomanip>
#include <iostream>

#include "mackey/verify.hpp"

int main() {
  mackey::VerifyContext ctx;
  const auto& names = mackey::check_names();
  int failures = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto r = mackey::run_check(names[i], ctx);
    if (!r.ok()) ++failures;
    std::cout << (r.ok() ? "PASS" : "FAIL") << " criterion " << std::setw(2) << i + 1 << " " << r.name << " ("
              << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.details << std::endl;
  }
  std::cout << (names.size() - failures) << "/" << names.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
