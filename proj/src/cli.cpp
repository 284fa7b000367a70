#include "wigner/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wigner/errors.hpp"
#include "wigner/summation.hpp"

namespace wigner::cli {

namespace {

constexpr long kMaxTwice = 1L << 20;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                    [](unsigned char c) { return std::isdigit(c) != 0; });
}

long parse_magnitude(std::string_view digits, std::string_view token) {
  long value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size() || value > kMaxTwice) {
    throw ParseError("momentum out of range: '" + std::string(token) + "'");
  }
  return value;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw ParseError("not a multiple of 1/2: '" + std::string(token) + "'");
}

}  // namespace

HalfInt parse_halfint(std::string_view token) {
  if (token.empty()) bad_token(token);
  std::string_view body = token;
  const bool negative = body.front() == '-';
  if (negative || body.front() == '+') body.remove_prefix(1);

  long twice = 0;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_token(token);
    const long n = parse_magnitude(num, token);
    const long d = parse_magnitude(den, token);
    if (d == 0 || (2 * n) % d != 0) bad_token(token);
    twice = 2 * n / d;
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_token(token);
    while (frac.size() > 1 && frac.back() == '0') frac.remove_suffix(1);
    if (frac != "0" && frac != "5") bad_token(token);
    twice = 2 * parse_magnitude(whole, token) + (frac == "5" ? 1 : 0);
  } else {
    if (!all_digits(body)) bad_token(token);
    twice = 2 * parse_magnitude(body, token);
  }
  if (twice > kMaxTwice) throw ParseError("momentum out of range: '" + std::string(token) + "'");
  return HalfInt::from_twice(static_cast<int>(negative ? -twice : twice));
}

SymbolSpec parse_spec(std::span<const std::string> tokens) {
  if (tokens.empty()) throw ParseError("missing symbol kind");
  const auto kind = kind_from_name(tokens.front());
  if (!kind) throw ParseError("unknown symbol kind '" + tokens.front() + "'");
  std::vector<HalfInt> args;
  args.reserve(tokens.size() - 1);
  for (const auto& t : tokens.subspan(1)) args.push_back(parse_halfint(t));
  return SymbolSpec(*kind, std::move(args));
}

ResultRecord make_record(const SymbolSpec& spec, int digits) {
  ResultRecord r{spec, {}, {}, {}, {}};
  try {
    const Surd value = evaluate(spec);
    r.exact = format_exact(value, ZeroStyle::Digit);
    r.coeff = value.coeff().to_string();
    r.radicand = value.radicand().to_string();
    r.decimal = to_decimal(value, digits);
  } catch (const MixedFieldError& e) {
    r.exact = format_exact(e.value(), ZeroStyle::Digit);
    r.decimal = to_decimal(e.value(), digits);
  }
  return r;
}

std::string emit_text(const ResultRecord& record) {
  std::string out(kind_name(record.spec.kind()));
  for (const auto a : record.spec.args()) out += " " + a.to_string();
  return out + " => " + record.exact + " " + record.decimal;
}

std::string emit_json(const ResultRecord& record) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(kind_name(record.spec.kind()));
  auto args = nlohmann::ordered_json::array();
  for (const auto a : record.spec.args()) args.push_back(a.to_string());
  j["args"] = std::move(args);
  j["exact"] = record.exact;
  j["coeff"] = record.coeff;
  j["radicand"] = record.radicand;
  j["decimal"] = record.decimal;
  return j.dump();
}

std::vector<BatchEntry> parse_batch(std::istream& in) {
  std::vector<BatchEntry> entries;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(std::move(w));
    if (tokens.empty()) continue;
    try {
      entries.push_back({number, parse_spec(tokens)});
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return entries;
}

std::string help_text() {
  std::string h =
      "usage: wigner <kind> <args...> [--digits N] [--json]\n"
      "       wigner batch <file> [--digits N] [--json]\n"
      "\n"
      "Arguments are integers, halves (3.5) or fractions (7/2), given in the\n"
      "printed layout of each symbol, left to right, top to bottom.\n"
      "--digits N sets significant digits of the decimal (1..1000, default 12).\n"
      "Batch files hold one '<kind> <args...>' per line; '#' starts a comment.\n"
      "\n";
  h += "kinds:\n";
  h += "  3jm   ( j1 j2 j  )\n        ( m1 m2 m  )\n";
  h += "  6j    { j1 j2 j3 }\n        { l1 l2 l3 }\n";
  h += "  9j    { j1 j2 j3 }\n        { l1 l2 l3 }\n        { k1 k2 k3 }\n";
  h += "  12j1  { j1    j2    j3    j4    }\n"
       "        {    l1    l2    l3    l4 }\n"
       "        { k1    k2    k3    k4    }\n";
  h += "  12j2  [ j1 j2 j3 j4 ]\n        [ l1 l2 l3 l4 ]\n        [ k1 k2 k3 k4 ]\n";
  h += "  15j1  { j1    j2    j3    j4    j5    }   (18j1: six columns)\n"
       "        {    l1    l2    l3    l4    l5 }\n"
       "        { k1    k2    k3    k4    k5    }\n";
  h += "  15j2  [ j1    j2    j3    j4    j5    ]   (18j2: six columns)\n"
       "        [    l1    l2    l3    l4    l5 ]\n"
       "        [ k1    k2    k3    k4    k5    ]\n";
  h += "  15j3  { k1    k1'  k    k'  k2    k2' }\n"
       "        {    p1         p         p2    }\n"
       "        { j1    j1'  j    j'  j2    j2' }\n";
  h += "  15j4  {    j1    k1  s1  k1'    j1'    }\n"
       "        { p     l      s      l'      p' }\n"
       "        {    j2    k2  s2  k2'    j2'    }\n";
  h += "  15j5  { k1 k1' j1 l1 l1' }\n"
       "        { k2 k2' j2 l2 l2' }\n"
       "        { k3 k3' j3 l3 l3' }\n";
  return h;
}

namespace {

struct Options {
  std::vector<std::string> positional;
  OutputMode mode = OutputMode::Text;
  int digits = kDefaultDigits;
  bool help = false;
};

Options parse_options(std::span<const std::string> args) {
  Options o;
  bool json = false;
  CLI::App app;
  app.set_help_flag();
  app.add_flag("-h,--help", o.help);
  app.add_flag("--json", json);
  app.add_option("--digits", o.digits)->check(CLI::Range(kMinDigits, kMaxDigits));
  app.add_option("words", o.positional);
  // CLI11 consumes its argument vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  if (json) o.mode = OutputMode::Json;
  return o;
}

std::string emit(const ResultRecord& r, OutputMode mode) {
  return mode == OutputMode::Json ? emit_json(r) : emit_text(r);
}

// Evaluates in parallel, rethrowing the error of the earliest failing entry.
std::vector<ResultRecord> evaluate_all(const std::vector<BatchEntry>& entries, int digits) {
  std::vector<std::optional<ResultRecord>> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        results[i] = make_record(entries[i].spec, digits);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, entries.size() > 0 ? entries.size() : 1);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<ResultRecord> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const DomainError& e) {
        throw DomainError("line " + std::to_string(entries[i].line) + ": " + e.what());
      } catch (const InternalError& e) {
        throw InternalError("line " + std::to_string(entries[i].line) + ": " + e.what());
      }
    }
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const Options opts = parse_options(args);
    if (opts.help) {
      out << help_text();
      return 0;
    }
    if (opts.positional.empty()) {
      err << help_text();
      return 2;
    }
    std::string buffer;
    if (opts.positional.front() == "batch") {
      if (opts.positional.size() != 2) throw ParseError("batch takes exactly one file");
      std::ifstream file(opts.positional[1]);
      if (!file) throw ParseError("cannot open batch file '" + opts.positional[1] + "'");
      for (const auto& r : evaluate_all(parse_batch(file), opts.digits)) {
        buffer += emit(r, opts.mode) + "\n";
      }
    } else {
      const Request request{parse_spec(opts.positional), opts.mode, opts.digits};
      buffer = emit(make_record(request.spec, request.digits), request.mode) + "\n";
    }
    out << buffer;
    return 0;
  } catch (const ParseError& e) {
    err << "wigner: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "wigner: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "wigner: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wigner::cli
