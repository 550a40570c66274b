#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wbptree/closedform.hpp"
#include "wbptree/count.hpp"
#include "wbptree/error.hpp"
#include "wbptree/export.hpp"
#include "wbptree/hcmu.hpp"
#include "wbptree/oracle.hpp"
#include "wbptree/passport.hpp"
#include "wbptree/verify.hpp"

namespace wbp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline void print_count_text(std::ostream& out, const CountReport& r) {
  out << "passport: " << to_string(r.passport) << "\n";
  for (const auto& [d, g] : r.G) out << "G(" << d << ") = " << g.str() << "\n";
  out << "total: " << r.total.str() << "\n";
  out << "by symmetry:";
  for (const auto& [e, c] : r.by_symmetry) out << " " << e << ":" << c.str();
  out << "\n";
}

}  // namespace detail

/// Command-line entry point. Returns 0 on success, 1 when an internal
/// identity fails, 2 on bad usage or input outside the supported domain.
inline int cli_main(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Exact counts of weighted bicoloured plane trees"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::size_t max_weight = oracle::kDefaultMaxPoints;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  auto* max_weight_opt =
      app.add_option("--max-weight", max_weight,
                     "Oracle bound: points for enumerate, side weight for verify")
          ->check(CLI::PositiveNumber);

  auto* count_cmd = app.add_subcommand("count", "Count trees with a passport");
  std::string passport_text;
  std::vector<std::uint64_t> pq;
  auto* passport_opt = count_cmd->add_option("--passport", passport_text,
                                             "Passport, e.g. \"2^2 4^3 | 8^2\"");
  auto* pq_opt = count_cmd->add_option("--pq", pq, "P,Q for the passport (q^p | p^q)")
                     ->delimiter(',')
                     ->expected(2);
  passport_opt->excludes(pq_opt);
  count_cmd->require_option(1);

  auto* census_cmd = app.add_subcommand("census", "Component census for a cone angle");
  std::uint64_t alpha = 0;
  census_cmd->add_option("--alpha", alpha, "Cone angle multiple, >= 3")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List every tree with a passport");
  std::string enum_passport;
  enum_cmd->add_option("--passport", enum_passport, "Passport")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Formula-versus-oracle sweep");

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) {
      if (format == "dot") throw DomainError("count supports --format json|text");
      if (*passport_opt) {
        const CountReport r = report(parse_passport(passport_text));
        if (format == "text") {
          detail::print_count_text(out, r);
        } else {
          out << to_json(r).dump(2) << "\n";
        }
        return kExitOk;
      }
      const std::uint64_t p = pq.at(0), q = pq.at(1);
      closedform::make_params(p, q);
      const CountReport r = report(closedform::pq_passport(p, q));
      const BigInt closed = closedform::count_closed(p, q);
      const bool agrees = closed == r.total;
      if (format == "text") {
        detail::print_count_text(out, r);
        out << "closed form: " << closed.str() << (agrees ? " (agrees)" : " (MISMATCH)")
            << "\n";
      } else {
        Json j = to_json(r);
        j["closed_form"] = Json{{"total", closed.str()}, {"agrees", agrees}};
        out << j.dump(2) << "\n";
      }
      if (!agrees) {
        err << "error: closed form " << closed.str() << " != generic " << r.total.str()
            << "\n";
        return kExitInconsistent;
      }
      return kExitOk;
    }

    if (census_cmd->parsed()) {
      if (format == "dot") throw DomainError("census supports --format json|text");
      const hcmu::PqCensus c = hcmu::census(alpha);
      if (format == "text") {
        out << hcmu::to_text(c);
      } else {
        out << hcmu::to_json(c).dump(2) << "\n";
      }
      return kExitOk;
    }

    if (enum_cmd->parsed()) {
      const Passport xi = parse_passport(enum_passport);
      const auto trees = oracle::enumerate_trees(xi, max_weight);
      if (format == "dot") {
        for (std::size_t i = 0; i < trees.size(); ++i) {
          out << to_dot(trees[i], "tree" + std::to_string(i));
        }
      } else if (format == "text") {
        out << to_string(xi) << ": " << trees.size() << " trees\n";
        for (const auto& t : trees) {
          out << "aut " << oracle::aut_order(t) << "  "
              << oracle::canonical_code(t).to_string() << "\n";
        }
      } else {
        out << to_json(xi, trees).dump(2) << "\n";
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      // The sweep is exponential in the side weight; 8 unless asked otherwise.
      const std::size_t w = *max_weight_opt ? max_weight : 8;
      const verify::Result res = verify::sweep(w);
      for (const auto& f : res.failures) err << "mismatch: " << f << "\n";
      if (format == "json") {
        Json j;
        j["max_weight"] = w;
        j["checked"] = res.checked;
        j["skipped_by_oracle_bound"] = res.skipped;
        j["failures"] = res.failures;
        j["ok"] = res.ok();
        out << j.dump(2) << "\n";
      } else {
        out << "checked " << res.checked << ", oracle-skipped " << res.skipped << ", "
            << res.failures.size() << " mismatches\n";
      }
      return res.ok() ? kExitOk : kExitInconsistent;
    }
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wbp
