#include "report.hpp"

#include <charconv>

#include <json.hpp>

namespace udrange {

std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

namespace {

std::string csv_cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

nlohmann::ordered_json json_cell(const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); }

}  // namespace

std::string render_sweep(const std::vector<SweepRow>& rows, TableFormat format) {
  if (format == TableFormat::csv) {
    std::string out = "L,N,M,P_exact,P_asymptotic,P_mc,stderr,trials,seed\n";
    for (const SweepRow& r : rows) {
      out += std::to_string(r.num_segments) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
             csv_cell(r.exact) + ',' + csv_cell(r.asymptotic) + ',' + csv_cell(r.monte_carlo) + ',' +
             csv_cell(r.std_error) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
  }

  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    doc["rows"].push_back({{"L", r.num_segments},
                           {"N", r.n},
                           {"M", r.m},
                           {"P_exact", json_cell(r.exact)},
                           {"P_asymptotic", json_cell(r.asymptotic)},
                           {"P_mc", json_cell(r.monte_carlo)},
                           {"stderr", json_cell(r.std_error)},
                           {"trials", r.trials},
                           {"seed", r.seed}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace udrange
