// Walks through the main entry points: congruence checks, coordinate
// changes, the cobordism evaluation and the p-local basis.

#include <adamsops/adamsops.hpp>

#include <iostream>

int main() {
  using namespace adamsops;

  // The identity on pi_{2m} scaled by m is not an operation: C_2 fails.
  const auto cert = check_congruences(parse_operation("[0,1,2,3,4]"));
  std::cout << "[0,1,2,3,4]: " << (cert.verdict ? "pass" : "fail") << " at n = " << *cert.first_failure()
            << ", value " << to_string(cert.records[*cert.first_failure()].value) << "\n";

  // Psi^2 in sigma coordinates is (1, 2, 1, 0, ...).
  const auto psi2 = lambda_to_sigma(psi_lambda(2, 5));
  std::cout << "Psi^2 in the sigma basis: " << rational_array(psi2.entries()).dump() << "\n";

  for (std::size_t n = 1; n <= 4; ++n) std::cout << "C_" << n << " = " << format_form(clarke_form(n)) << "\n";

  const FglEngine engine(FglConfig{6, 6});
  const auto dict = Dictionary::standard(engine);
  const auto b3 = b3_example(engine, dict);
  for (std::size_t b = 0; b < b3.basis.size(); ++b) {
    std::cout << "b(3)*etaR(x1) on " << b3.basis[b] << ": " << format_form(b3.forms[b]) << "\n";
  }

  const auto report = spanning_set_reduce(3, 4);
  std::cout << "p = 3, N = 4: selected e0 sigma_n for n in " << Json(report.selected).dump()
            << ", pivot minor valuation " << *report.pivot_minor_valuation << "\n";
  return 0;
}
