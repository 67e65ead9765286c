// One line per acceptance criterion, followed by the worked examples.
// Exit status is nonzero when any line fails.

#include <adamsops/verify.hpp>

#include <chrono>
#include <iostream>

int main() {
  using namespace adamsops;
  int failures = 0;
  auto report = [&failures](const CheckResult& r, const std::string& prefix, double seconds) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << prefix << r.id << ": " << r.description << " | " << r.detail
              << " (" << seconds << " s)\n";
    if (!r.pass) ++failures;
  };
  using clock = std::chrono::steady_clock;
  const std::vector<CheckResult (*)()> criteria{
      criterion_congruence_table, criterion_power_sum_identity, criterion_round_trip, criterion_adams_closure,
      criterion_product_coherence, criterion_sigma_mu_values,   criterion_worked_examples, criterion_two_paths,
      criterion_solution_sets,    criterion_split,              criterion_ivp_oracle,      criterion_fgl};
  for (auto fn : criteria) {
    const auto start = clock::now();
    const auto r = fn();
    report(r, "criterion ", std::chrono::duration<double>(clock::now() - start).count());
  }
  const auto start = clock::now();
  const auto examples = worked_examples();
  const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
  for (const auto& r : examples) report(r, "example ", elapsed / static_cast<double>(examples.size()));
  std::cout << (failures == 0 ? "all acceptance checks pass" : std::to_string(failures) + " acceptance checks FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}
