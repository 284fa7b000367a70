#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/half_int.hpp"
#include "wigner/high_order.hpp"
#include "wigner/surd.hpp"

namespace wigner::cli {

enum class OutputMode { Text, Json };

inline constexpr int kMinDigits = 1;
inline constexpr int kMaxDigits = 1000;

struct Request {
  SymbolSpec spec;
  OutputMode mode = OutputMode::Text;
  int digits = kDefaultDigits;
};

/// One evaluated symbol, in the columns of the reference tables.
struct ResultRecord {
  SymbolSpec spec;
  std::string exact;     // format_exact grammar, zero as "0"
  std::string coeff;     // "p/q" or "p"
  std::string radicand;  // "r/s" or "r"
  std::string decimal;
};

/// "4", "3.5", "0.5", "7/2", "-1/2". Anything that is not a multiple of 1/2
/// is a ParseError naming the token.
HalfInt parse_halfint(std::string_view token);

/// "<kind> <args...>" tokens into a spec. ParseError for an unknown kind or
/// bad token, DomainError for wrong arity or a negative momentum.
SymbolSpec parse_spec(std::span<const std::string> tokens);

/// Evaluates and formats. A sum spanning several quadratic fields is legal
/// output: exact then holds the signed terms and coeff/radicand are empty.
ResultRecord make_record(const SymbolSpec& spec, int digits = kDefaultDigits);

/// "<kind> <args> => <exact> <decimal>"
std::string emit_text(const ResultRecord& record);

/// Single-line JSON object with keys kind, args, exact, coeff, radicand,
/// decimal in that order.
std::string emit_json(const ResultRecord& record);

/// One batch line: 1-based line number and its spec.
struct BatchEntry {
  std::size_t line = 0;
  SymbolSpec spec;
};

/// Reads "<kind> <args...>" lines; blank lines and '#' comments (whole-line
/// or trailing) are skipped. Errors are ParseErrors prefixed "line N: ".
std::vector<BatchEntry> parse_batch(std::istream& in);

/// Full command line (without the program name):
///   wigner <kind> <args...> [--digits N] [--json]
///   wigner batch <file> [--digits N] [--json]
/// Exit status 0 on success (zero-valued symbols included), 2 on parse,
/// arity or domain errors, 1 on internal errors. Nothing is written to
/// `out` unless every requested record could be produced.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Usage text with the argument layout of each kind.
std::string help_text();

}  // namespace wigner::cli
