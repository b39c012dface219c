#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cayley/classify.hpp"
#include "cayley/ffpoly.hpp"

namespace cayley::maps {

using ffpoly::FieldPoly;

/// Nonnegative reduced fraction.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  static Rational reduced(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct OrderSplit {
  std::uint64_t k = 1;  ///< p does not divide k
  unsigned m = 0;       ///< alpha = k * p^m
};

OrderSplit decompose_order(std::uint64_t alpha, std::uint32_t p);

/// One regular Cayley map of Z_p^n, keyed by the minimal polynomial f of
/// its rotation. j is [ord f]_2 for odd p and 0 for p = 2.
struct MapRecord {
  FieldPoly f;
  ffpoly::Factorization factorization;
  unsigned n = 0;
  std::uint32_t p = 0;
  unsigned j = 0;
  std::uint64_t alpha = 0;
  std::uint64_t k = 0;
  unsigned m = 0;
  std::uint64_t rl_order = 0;
  Rational beta;
  std::uint64_t genus = 0;
  bool unbalanced_capable = false;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;
};

/// Face length o(r*l) from the order-splitting rules.
///
/// Odd p, alpha = k p^m: alpha when 4 | k; otherwise alpha/2 or p*alpha/2
/// depending on whether (x-1)^(p^m) exactly divides f1, the minimal
/// polynomial of C^2. For p = 2: alpha or 2*alpha depending on whether
/// (x-1)^(2^m) exactly divides f.
///
/// Throws std::invalid_argument when f is not in M(n, p).
std::uint64_t rl_order(const FieldPoly& f, unsigned n);

/// alpha / o(r*l), one of {1, 1/2} (p = 2) or {1, 2, 2/p} (odd p).
Rational beta_of(const FieldPoly& f, unsigned n);

/// g = 1 + p^n (alpha - 2 beta - 2) / 4, cross-checked against the Euler formula.
std::uint64_t genus_of(const FieldPoly& f, unsigned n);

MapRecord map_record(const FieldPoly& f, unsigned n);

struct ClassificationReport {
  unsigned n = 0;
  std::uint32_t p = 0;
  std::vector<MapRecord> records;
  std::map<unsigned, std::uint64_t> per_j_counts;
  std::uint64_t total = 0;
  std::uint64_t m1_total = 0;
};

/// Full catalog of M(n, p), with counts taken from the counting formula and
/// checked against the enumerated records.
ClassificationReport build_report(unsigned n, std::uint32_t p, const classify::Limits& limits = {});

}  // namespace cayley::maps
