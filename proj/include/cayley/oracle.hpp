#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/classify.hpp"
#include "cayley/linalg.hpp"

// Brute-force checks that realize X = T x| <sigma> as affine maps of the row
// space and measure orders by repeated composition. Nothing in this header
// depends on the polynomial-order or genus formulas it is used to check.

namespace cayley::oracle {

using ffpoly::FieldPoly;
using linalg::FMatrix;
using linalg::FVector;

/// x -> x * linear + translation.
struct AffineElement {
  FMatrix linear;
  FVector translation;

  static AffineElement identity(std::uint32_t p, std::size_t n);
  FVector apply(const FVector& x) const { return x * linear + translation; }
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// Apply a, then b: (A, u) then (B, v) is (AB, uB + v).
AffineElement compose(const AffineElement& a, const AffineElement& b);

/// Least k >= 1 with a^k = identity. Throws CapExceeded past cap.
std::uint64_t affine_order(const AffineElement& a, std::uint64_t cap = 10'000'000);

/// Rotation r = (C, 0) for C = companion(f).
AffineElement rotation(const FieldPoly& f);
/// Arc-reversing involution l = (-I, t) with t = (1, 0, ..., 0).
AffineElement reversal(std::uint32_t p, std::size_t n);

/// o(r * l), measured by composition.
std::uint64_t rl_order_direct(const FieldPoly& f, unsigned n, std::uint64_t cap = 10'000'000);

struct DirectGenus {
  std::uint64_t alpha = 0;
  std::uint64_t rl_order = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;
  std::uint64_t genus = 0;
};

/// Euler genus 1 + (E - V - F)/2 with |X| = p^n o(C), |V| = p^n, |E| = |X|/2
/// and |F| = |X| / o(rl), all orders measured directly. |X| must not exceed size_cap.
DirectGenus measure_map(const FieldPoly& f, unsigned n, std::uint64_t size_cap = 10'000'000);
std::uint64_t euler_genus_direct(const FieldPoly& f, unsigned n, std::uint64_t size_cap = 10'000'000);

/// Whether -I is a power of companion(f), by walking all powers. For p = 2
/// only f(0) != 0 is required, since -I = I.
bool neg_identity_in_powers(const FieldPoly& f);

/// p | o(C) and C^(o(C)/p) fixes a hyperplane pointwise.
bool fixes_hyperplane(const FieldPoly& f);

/// rank of t, tC, ..., tC^(n-1) equals n for t = (1, 0, ..., 0).
bool orbit_spans(const FieldPoly& f);

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> counterexamples;
};

struct VerificationReport {
  unsigned n = 0;
  std::uint32_t p = 0;
  std::size_t records = 0;
  std::vector<Check> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  classify::Limits limits;
  std::uint64_t size_cap = 10'000'000;
};

/// Runs every formula path against its brute-force counterpart:
/// membership, m1_criterion, rl_order, genus, count_vs_enum.
VerificationReport verify_all(unsigned n, std::uint32_t p, const VerifyOptions& opts = {});

}  // namespace cayley::oracle
