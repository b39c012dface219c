#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "cayley/ffpoly.hpp"

namespace cayley::ffpoly {

std::string to_string(const FieldPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Coeff c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string to_string(const Factorization& fz) {
  std::string out;
  if (fz.unit != 1 || fz.factors.empty()) out = std::to_string(fz.unit);
  for (const auto& [q, k] : fz.factors) {
    if (!out.empty()) out += '*';
    const bool single_term =
        std::count_if(q.coeffs().begin(), q.coeffs().end(), [](Coeff c) { return c != 0; }) == 1 && q.leading() == 1;
    out += single_term ? to_string(q) : "(" + to_string(q) + ")";
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() { return done() ? '\0' : s_[pos_]; }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  /// Unsigned decimal; reduced mod p on the fly so long literals never overflow.
  std::int64_t number(std::uint32_t p) {
    if (!at_digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (digit_here()) v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
    return static_cast<std::int64_t>(v);
  }

  std::uint64_t exponent() {
    if (!at_digit()) fail("expected an exponent");
    std::uint64_t v = 0;
    while (digit_here()) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > 100000) fail("exponent too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  const std::string& text() const { return s_; }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  /// No whitespace skipping: digits of one literal must be contiguous.
  bool digit_here() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0; }

  std::string s_;
  std::size_t pos_ = 0;
};

FieldPoly parse_coefficient_list(Cursor& cur, std::uint32_t p) {
  std::vector<std::int64_t> coeffs;
  if (!cur.accept(']')) {
    do {
      const bool neg = cur.accept('-');
      if (!neg) cur.accept('+');
      const std::int64_t c = cur.number(p);
      coeffs.push_back(neg ? -c : c);
    } while (cur.accept(','));
    if (!cur.accept(']')) cur.fail("expected ',' or ']'");
  }
  if (!cur.done()) cur.fail("trailing characters");
  return FieldPoly(p, std::move(coeffs));
}

}  // namespace

FieldPoly parse_poly(std::string_view text, std::uint32_t p) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty input");
  if (cur.accept('[')) return parse_coefficient_list(cur, p);

  std::map<std::uint64_t, std::int64_t> terms;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.accept('-')) {
      neg = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    std::int64_t c = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      c = cur.number(p);
      has_coeff = true;
      if (cur.accept('*') && cur.peek() != 'x') cur.fail("expected 'x' after '*'");
    }
    std::uint64_t deg = 0;
    if (cur.accept('x')) {
      deg = 1;
      if (cur.accept('^')) deg = cur.exponent();
    } else if (!has_coeff) {
      cur.fail("expected a term");
    }
    terms[deg] += neg ? -c : c;
  }

  std::vector<std::int64_t> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
  for (auto [deg, c] : terms) coeffs[deg] = c % static_cast<std::int64_t>(p);
  return FieldPoly(p, std::move(coeffs));
}

}  // namespace cayley::ffpoly
