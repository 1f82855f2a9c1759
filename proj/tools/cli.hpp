#pragma once

#include "reflact/catalog.hpp"
#include "reflact/invariants.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflact::cli {

enum Exit { kOk = 0, kValidation = 2, kMismatch = 3 };

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group;
  std::string arrangement;
  std::string character = "trivial";
  std::optional<int> degree;
  std::string format = "text";
  std::size_t order_cap = kDefaultOrderCap;
  int jobs = 0;
  std::string table;
  int max_r = 0;
  int max_n = 0;
  std::string cox;
  std::string classfn;
};

/// A pair built from command-line names or files.
struct BuiltPair {
  std::unique_ptr<Pair> pair;
  std::string group_label;
  std::string arrangement_label;
};

MatrixGroup build_group(const std::string& spec, std::size_t cap, std::optional<FamilySpec>* family = nullptr);
BuiltPair build_pair(const Options& o);
LinearCharacter select_character(const MatrixGroup& g, const std::string& spec);

/// 1+2t+t^2 style; "0" for the zero polynomial.
std::string format_poly(const std::vector<long>& c);

struct VerifyCase {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs one suite; throws ValidationError for an unknown name.
std::vector<VerifyCase> verify_suite(const std::string& name, int max_r, int max_n, int jobs);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reflact::cli
