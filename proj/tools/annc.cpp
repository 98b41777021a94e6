// Command-line front end. Exit codes: 0 success, 1 formula mismatch or
// incomparable pair, 2 bad input, size limit or overflow.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "annc/annular_posets.hpp"
#include "annc/errors.hpp"
#include "annc/formulas.hpp"
#include "annc/noncrossing.hpp"
#include "annc/verify.hpp"

namespace {

using annc::Annulus;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;

struct Common {
  std::size_t p = 1;
  std::size_t q = 1;
  std::optional<std::size_t> unsafe_limit;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "Size of the first circle")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--q", c.q, "Size of the second circle")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--unsafe-limit", c.unsafe_limit, "Raise the p+q guard to this value");
}

/// The enumeration limit in force, or an error when p+q exceeds the guard.
std::size_t size_limit(std::size_t n, std::size_t guard, const std::optional<std::size_t>& unsafe) {
  const std::size_t limit = unsafe.value_or(guard);
  if (n > limit) {
    throw annc::ResourceLimitError("p+q = " + std::to_string(n) + " exceeds the guard " + std::to_string(limit) +
                                   " (use --unsafe-limit to override)");
  }
  return limit;
}

int run_verify(const Common& c, const std::string& kind_name, const std::string& variant_name,
               std::optional<std::size_t> sweep) {
  const auto variant = annc::parse_variant(variant_name);
  std::vector<annc::PosetKind> kinds;
  if (kind_name == "all") {
    kinds = {annc::PosetKind::Snc, annc::PosetKind::Sd, annc::PosetKind::Ps, annc::PosetKind::Pnc};
  } else {
    kinds = {annc::parse_poset_kind(kind_name)};
  }

  std::vector<Annulus> annuli;
  if (sweep) {
    for (std::size_t p = 1; p < *sweep; ++p) {
      for (std::size_t q = 1; p + q <= *sweep; ++q) annuli.emplace_back(p, q);
    }
  } else {
    annuli.emplace_back(c.p, c.q);
  }

  bool clean = true;
  Json out = Json::array();
  for (const Annulus& ann : annuli) {
    for (annc::PosetKind kind : kinds) {
      const std::size_t limit = size_limit(ann.size(), annc::default_size_guard(kind), c.unsafe_limit);
      const auto report = annc::verify(ann, kind, variant, limit);
      clean = clean && report.ok();
      out.push_back(Json::parse(annc::report_json(report)));
    }
  }
  std::cout << (out.size() == 1 ? out.front() : out).dump(2) << '\n';
  return clean ? kOk : kMismatch;
}

int run_tables(const std::string& which_name, std::size_t max, bool compare, const std::string& format) {
  const auto which = annc::parse_identity_kind(which_name);
  auto direct = [&](std::int64_t p, std::int64_t q) {
    return which == annc::IdentityKind::TwoBridge ? annc::two_bridge_direct(p, q) : annc::partition_face_direct(p, q);
  };
  const auto n = static_cast<std::int64_t>(max);

  if (compare) {
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "p,q,direct,corrected,as_printed,corrected_match,as_printed_match\n";
    for (std::int64_t p = 1; p <= n; ++p) {
      for (std::int64_t q = 1; q <= n; ++q) {
        const std::int64_t d = direct(p, q);
        const std::int64_t c = annc::identity_closed(p, q, which, annc::IdentityVariant::Corrected);
        const std::int64_t a = annc::identity_closed(p, q, which, annc::IdentityVariant::AsPrinted);
        csv << p << ',' << q << ',' << d << ',' << c << ',' << a << ',' << (c == d) << ',' << (a == d) << '\n';
        rows.push_back({{"p", p}, {"q", q}, {"direct", d}, {"corrected", c}, {"as_printed", a},
                        {"corrected_match", c == d}, {"as_printed_match", a == d}});
      }
    }
    if (format == "json") {
      std::cout << Json{{"which", which_name}, {"max", max}, {"rows", rows}}.dump(2) << '\n';
    } else {
      std::cout << csv.str();
    }
    return kOk;
  }

  if (format == "json") {
    Json values = Json::array();
    for (std::int64_t p = 1; p <= n; ++p) {
      Json row = Json::array();
      for (std::int64_t q = 1; q <= n; ++q) row.push_back(direct(p, q));
      values.push_back(std::move(row));
    }
    std::cout << Json{{"which", which_name}, {"max", max}, {"values", values}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "p\\q";
  for (std::int64_t q = 1; q <= n; ++q) std::cout << ',' << q;
  std::cout << '\n';
  for (std::int64_t p = 1; p <= n; ++p) {
    std::cout << p;
    for (std::int64_t q = 1; q <= n; ++q) std::cout << ',' << direct(p, q);
    std::cout << '\n';
  }
  return kOk;
}

int run_enumerate(const Common& c, const std::string& class_name, const std::string& format) {
  const Annulus ann(c.p, c.q);
  const auto cls = annc::parse_nc_class(class_name);
  const std::size_t limit = size_limit(ann.size(), 7, c.unsafe_limit);
  const auto perms = annc::enumerate_class(ann, cls, limit);
  if (format == "json") {
    Json keys = Json::array();
    for (const auto& pi : perms) keys.push_back(annc::format_cycles(pi));
    std::cout << Json{{"p", c.p}, {"q", c.q}, {"class", class_name}, {"count", perms.size()}, {"elements", keys}}.dump(2)
              << '\n';
  } else {
    for (const auto& pi : perms) std::cout << annc::format_cycles(pi) << '\n';
  }
  return kOk;
}

int run_mobius(const Common& c, const std::string& kind_name, const std::string& lo, const std::string& hi,
               const std::string& variant_name, const std::string& format) {
  const Annulus ann(c.p, c.q);
  const auto kind = annc::parse_poset_kind(kind_name);
  const auto variant = annc::parse_variant(variant_name);
  const std::size_t limit = size_limit(ann.size(), annc::default_size_guard(kind), c.unsafe_limit);
  const auto value = annc::mobius_pair(ann, kind, lo, hi, variant, limit);
  if (format == "json") {
    std::cout << Json{{"lo", lo}, {"hi", hi}, {"mu_oracle", value.oracle}, {"mu_formula", value.formula}}.dump(2)
              << '\n';
  } else {
    std::cout << "oracle " << value.oracle << "\nformula " << value.formula << '\n';
  }
  return value.oracle == value.formula ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annular noncrossing permutations: posets, Möbius functions and identities"};
  app.require_subcommand(1);

  Common common;
  std::string kind = "snc";
  std::string variant = "corrected";
  std::string cls = "all";
  std::string which = "two-bridge";
  std::string format = "text";
  std::string lo, hi;
  std::size_t max = 6;
  bool compare = false;
  std::optional<std::size_t> sweep;

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the brute-force Möbius table");
  add_common(verify, common);
  verify->get_option("--p")->required(false);
  verify->get_option("--q")->required(false);
  verify->add_option("--kind", kind, "snc|sd|ps|pnc|all")->capture_default_str();
  verify->add_option("--variant", variant, "corrected|as-printed")->capture_default_str();
  verify->add_option("--sweep", sweep, "Run every (p,q) with p+q <= N instead of a single annulus");

  auto* tables = app.add_subcommand("tables", "Print the two-bridge or partition-face double sums");
  tables->add_option("--which", which, "two-bridge|partition-face")->capture_default_str();
  tables->add_option("--max", max, "Largest p and q")->capture_default_str()->check(CLI::PositiveNumber);
  tables->add_flag("--compare", compare, "Add both closed forms and match columns");
  tables->add_option("--format", format, "csv|json")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List a class of noncrossing permutations");
  add_common(enumerate, common);
  enumerate->add_option("--class", cls, "disc|annular|all|bridges")->capture_default_str();
  enumerate->add_option("--format", format, "text|json")->capture_default_str();

  auto* mobius = app.add_subcommand("mobius", "Oracle and closed-form Möbius value of one pair");
  add_common(mobius, common);
  mobius->add_option("--kind", kind, "snc|sd|ps|pnc")->capture_default_str();
  mobius->add_option("--lo", lo, "Lower element key")->required();
  mobius->add_option("--hi", hi, "Upper element key")->required();
  mobius->add_option("--variant", variant, "corrected|as-printed")->capture_default_str();
  mobius->add_option("--format", format, "text|json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return run_verify(common, kind, variant, sweep);
    if (*tables) return run_tables(which, max, compare, format == "text" ? "csv" : format);
    if (*enumerate) return run_enumerate(common, cls, format);
    if (*mobius) return run_mobius(common, kind, lo, hi, variant, format);
  } catch (const annc::IncomparableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
