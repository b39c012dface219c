#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cayley/maps.hpp"
#include "cayley/oracle.hpp"

namespace cayley::cli {

enum class Command { classify, count, aij, ord, genus, verify };
enum class Format { table, json, csv };

struct Caps {
  std::optional<unsigned> max_n;
  std::optional<std::uint32_t> max_p;
  std::optional<std::uint64_t> oracle_cap;
  /// Overrides are refused unless this is set.
  bool unsafe = false;
};

struct CliRequest {
  Command command = Command::count;
  unsigned n = 0;
  std::uint32_t p = 0;
  unsigned i = 0;
  unsigned j = 0;
  std::optional<std::string> poly;
  Format format = Format::table;
  Caps caps;
};

/// Parses argv (argv[0] is the program name). On --help or a parse error
/// returns nullopt after writing to out/err and setting exit_code.
std::optional<CliRequest> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                     int& exit_code);

/// Executes a request, writing results to out and a one-line diagnostic to
/// err on failure. Exit codes: 0 success, 1 verification failures,
/// 2 invalid input, 3 resource cap exceeded, 4 internal inconsistency.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

// Emitters, exposed for tests.
void emit_report(const maps::ClassificationReport& report, Format format, std::ostream& out);
void emit_record(const maps::MapRecord& record, Format format, std::ostream& out);
void emit_verification(const oracle::VerificationReport& report, Format format, std::ostream& out);

}  // namespace cayley::cli
