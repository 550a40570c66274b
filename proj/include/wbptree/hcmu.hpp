#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wbptree/bigint.hpp"
#include "wbptree/closedform.hpp"
#include "wbptree/error.hpp"
#include "wbptree/export.hpp"

// Component census of HCMU spheres with one conical point of angle
// 2 pi alpha: one tree count per admissible split alpha = p + q - 1.

namespace wbp::hcmu {

struct Admissibility {
  bool ok;
  std::string reason;
};

/// Whether a saddle-type sphere with p maxima and q minima exists.
inline Admissibility admissible(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw DomainError("admissible: p and q must be >= 1");
  if (p <= q) return {false, "p <= q"};
  if (q == 1) return {true, "q = 1"};
  if (p % q == 0) return {false, "q | p"};
  return {true, "q does not divide p"};
}

struct PqRow {
  std::uint64_t p;
  std::uint64_t q;
  bool admissible;
  std::string reason;
  std::optional<BigInt> count;  // present iff admissible
};

inline constexpr const char* kFootballNote =
    "football (singularity at an extremal point): 1 further component, "
    "not included in saddle_total";

struct PqCensus {
  std::uint64_t alpha;
  std::vector<PqRow> rows;  // p descending
  BigInt saddle_total;
  std::string football_note;
};

inline PqCensus census(std::uint64_t alpha) {
  if (alpha < 3) {
    throw DomainError("census needs alpha >= 3, got " + std::to_string(alpha));
  }
  PqCensus c{alpha, {}, 0, kFootballNote};
  const std::uint64_t sum = alpha + 1;
  for (std::uint64_t q = 1; 2 * q < sum; ++q) {
    const std::uint64_t p = sum - q;
    auto [ok, reason] = admissible(p, q);
    PqRow row{p, q, ok, std::move(reason), std::nullopt};
    if (ok) {
      row.count = closedform::count_closed(p, q);
      c.saddle_total += *row.count;
    }
    c.rows.push_back(std::move(row));
  }
  return c;
}

inline Json to_json(const PqCensus& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row;
    row["p"] = r.p;
    row["q"] = r.q;
    row["admissible"] = r.admissible;
    row["reason"] = r.reason;
    if (r.count) row["count"] = r.count->str();
    rows.push_back(std::move(row));
  }
  Json out;
  out["alpha"] = c.alpha;
  out["rows"] = std::move(rows);
  out["saddle_total"] = c.saddle_total.str();
  out["football_note"] = c.football_note;
  return out;
}

inline std::string to_text(const PqCensus& c) {
  std::size_t count_width = 5;
  for (const auto& r : c.rows) {
    if (r.count) count_width = std::max(count_width, r.count->str().size());
  }
  count_width = std::max(count_width, c.saddle_total.str().size());
  std::ostringstream os;
  os << "alpha = " << c.alpha << "\n";
  os << std::setw(6) << "p" << std::setw(6) << "q" << "  " << std::left
     << std::setw(12) << "admissible" << std::right << std::setw(count_width)
     << "count" << "  reason\n";
  for (const auto& r : c.rows) {
    os << std::setw(6) << r.p << std::setw(6) << r.q << "  " << std::left
       << std::setw(12) << (r.admissible ? "yes" : "no") << std::right
       << std::setw(count_width) << (r.count ? r.count->str() : "-") << "  "
       << r.reason << "\n";
  }
  os << "saddle_total = " << c.saddle_total.str() << "\n";
  os << "note: " << c.football_note << "\n";
  return os.str();
}

}  // namespace wbp::hcmu
