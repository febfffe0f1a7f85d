#include "diracspin/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ds {

namespace {

std::string fmt_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

nlohmann::ordered_json sample_json(const Momentum& q) {
  return {{"p", {q.p[0], q.p[1], q.p[2]}}, {"m", q.m}};
}

}  // namespace

std::string report_json(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["meta"] = {
      {"seed", rep.cfg.seed},
      {"mass", rep.cfg.mass},
      {"count", rep.cfg.count},
      {"tolerance", rep.tolerance},
      {"conventions",
       {{"k_sign", rep.conventions.k_sign},
        {"pl_cross_sign", rep.conventions.pl_cross_sign},
        {"spin_e_g5_sign", rep.conventions.spin_e_g5_sign},
        {"pos_e_g5_sign", rep.conventions.pos_e_g5_sign}}},
  };
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : rep.checks) {
    j["checks"].push_back({
        {"id", c.spec.id},
        {"pass", c.result.pass},
        {"max_residual", c.result.max_residual},
        {"worst_sample", sample_json(c.result.worst_sample)},
        {"anchor", c.spec.anchor},
    });
  }
  return j.dump(2) + "\n";
}

std::string report_markdown(const SuiteReport& rep) {
  std::ostringstream out;
  out << "# Check suite report\n\n";
  out << "- seed: " << rep.cfg.seed << "\n";
  out << "- mass: " << rep.cfg.mass << "\n";
  out << "- samples: " << rep.cfg.count << "\n";
  out << "- default tolerance: " << fmt_sci(rep.tolerance) << "\n";
  out << "- conventions: k_sign=" << rep.conventions.k_sign
      << ", pl_cross_sign=" << rep.conventions.pl_cross_sign
      << ", spin_e_g5_sign=" << rep.conventions.spin_e_g5_sign
      << ", pos_e_g5_sign=" << rep.conventions.pos_e_g5_sign << "\n\n";
  out << "| id | status | max residual | worst sample | statement |\n";
  out << "|---|---|---|---|---|\n";
  for (const CheckRecord& c : rep.checks) {
    const Momentum& q = c.result.worst_sample;
    char sample[96];
    std::snprintf(sample, sizeof sample, "(%.4g, %.4g, %.4g)", q.p[0], q.p[1],
                  q.p[2]);
    out << "| " << c.spec.id << " | " << (c.result.pass ? "pass" : "FAIL")
        << " | " << fmt_sci(c.result.max_residual) << " | " << sample << " | "
        << c.spec.anchor << " |\n";
  }
  return out.str();
}

}  // namespace ds
