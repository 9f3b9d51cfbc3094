// Acceptance run: every criterion at zero tolerance, with its runtime limit.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "hullcodes/error.hpp"
#include "hullcodes/suites.hpp"

using namespace hc;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria{
    {1, "dual closed forms", {"prop-dual-first", "prop-dual-second"}, 30},
    {2, "hull characterizations", {"hull-kernel"}, 30},
    {3, "dimension lemma", {"dim-span"}, 5},
    {4, "fixed-hull lemma", {"fixed-hull"}, 10},
    {5, "LCD lemma", {"lcd"}, 5},
    {6, "MDS remark", {"mds"}, 5},
    {7, "APN/AB", {"apn-ab"}, 60},
    {8, "PN bounds", {"pn-bounds"}, 10},
    {9, "weight formulas", {"thm-weights", "ding"}, 30},
    {10, "necessary conditions", {"nc-all"}, 60},
    {11, "character kernels", {"characters"}, 5},
    {12, "even-characteristic weight", {"even-weight"}, 5},
    {13, "cyclotomic code", {"cyclotomic"}, 1},
    {14, "foundation properties", {"foundation"}, 30},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    bool pass = true;
    double seconds = 0;
    std::size_t instances = 0, failures = 0, notes = 0;
    std::string error;
    for (const auto& s : c.suites) {
      try {
        const auto r = run_suite(s);
        seconds += r.seconds;
        instances += r.instances.size();
        failures += r.failures();
        for (const auto& i : r.instances) {
          if (i.informational) ++notes;
          if (!i.pass && !i.informational) std::cerr << "  [" << s << "] FAIL " << i.name << ' ' << i.details.dump() << '\n';
        }
        pass = pass && r.pass;
      } catch (const std::exception& e) {
        pass = false;
        error = e.what();
      }
    }
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = pass && in_time && error.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << std::left << std::setw(28)
              << c.title << std::right << std::fixed << std::setprecision(3) << seconds << " s (limit "
              << std::setprecision(0) << c.limit_seconds << " s)  " << instances << " instances, " << failures
              << " failures";
    if (notes) std::cout << ", " << notes << " informational";
    if (!in_time) std::cout << "  [over time]";
    if (!error.empty()) std::cout << "  [" << error << "]";
    std::cout << '\n';
  }
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
