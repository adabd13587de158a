#pragma once

// Command implementations behind the knotenum executable.  Kept out of main
// so the acceptance suite can drive them directly.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "knots/enumerate.hpp"
#include "knots/groups.hpp"

namespace knots::cli {

enum Exit : int {
  kOk = 0,
  kBudget = 2,
  kIo = 3,
  kConfig = 4,
};

inline constexpr int kHardCap = 9;

struct RunConfig {
  int max_crossings = 8;
  int up_budget = 1;
  int m_max = 0;  // 0 leaves the invariants column empty
  std::size_t orbit_budget = kDefaultOrbitBudget;
  std::string format = "tsv";
  int workers = 1;
  std::string out;
  bool allow_large = false;
};

/// Empty when the config is usable, else the reason.
std::string check_config(const RunConfig& cfg);

/// Catalog bytes; depends only on the catalog and the data-shaping options.
std::string format_catalog(const Catalog& catalog, const RunConfig& cfg);

/// Reads a TSV or JSON catalog.  Throws CatalogError naming the line.
Catalog parse_catalog(const std::string& text);

class CatalogError : public std::runtime_error {
 public:
  CatalogError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

void print_summary(const Catalog& catalog, std::ostream& out);

/// Fills each record's invariants with its certificate.
void annotate(Catalog& catalog, int m_max, int workers);

/// Groups of record indices whose certificates coincide.
std::vector<std::vector<std::size_t>> unseparated(const Catalog& catalog);

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_invariants(const std::string& in_path, const std::string& out_path, int m_max, int workers,
                   std::ostream& out, std::ostream& err);
int cmd_lattice(const std::string& sub, const std::string& polygon, std::size_t length_budget,
                std::size_t step_budget, char axis, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace knots::cli
