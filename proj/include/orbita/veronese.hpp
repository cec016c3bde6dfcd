#pragma once

// Quadratic parametrization c = (sum y_i lambda^i)^2, fiber recovery and
// chained endpoint identifications.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbita/error.hpp"
#include "orbita/rational.hpp"

namespace orbita {

using YVector = std::vector<Rational>;

/// Coefficients of (y_0 + y_1 lambda + ... + y_e lambda^e)^2.
inline std::vector<Rational> phi_eval(const YVector& y) {
  if (y.empty()) return {};
  std::vector<Rational> c(2 * y.size() - 1);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += y[i] * y[j];
  return c;
}

/// All rational y with phi_eval(y) = c: empty, or the pair {y, -y}; the zero
/// vector when c vanishes identically.
inline std::vector<YVector> recover_fiber(const std::vector<Rational>& c) {
  if (c.empty() || c.size() % 2 == 0) throw Error(ErrorCode::InvalidArgument, "need 2e+1 coefficients");
  const std::size_t e = (c.size() - 1) / 2;
  if (sgn(c[0]) == 0) {
    if (e == 0) return {YVector{Rational(0)}};
    if (sgn(c[1]) != 0) return {};
    // y_0 = 0, so c is lambda^2 times the square of (y_1 + ... + y_e lambda^(e-1))
    std::vector<Rational> reduced(c.begin() + 2, c.end());
    std::vector<YVector> out;
    for (auto& z : recover_fiber(reduced)) {
      YVector y{Rational(0)};
      y.insert(y.end(), z.begin(), z.end());
      out.push_back(std::move(y));
    }
    return out;
  }
  const auto root = rational_sqrt(c[0]);
  if (!root) throw Error(ErrorCode::NonSquareC0, "c_0 = " + c[0].get_str() + " is not a rational square");
  YVector y(e + 1);
  y[0] = *root;
  for (std::size_t m = 1; m <= e; ++m) {
    Rational acc = c[m];
    for (std::size_t i = 1; i < m; ++i) acc -= y[i] * y[m - i];
    y[m] = acc / (2 * y[0]);
  }
  if (phi_eval(y) != c) return {};
  YVector neg = y;
  for (auto& v : neg) v = -v;
  return {y, neg};
}

/// Consecutive y-vectors with y_{i, e_i} = y_{i+1, 0}.
struct ChainPoint {
  std::vector<YVector> blocks;

  void validate() const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty chain block");
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
      if (blocks[i].back() != blocks[i + 1].front())
        throw Error(ErrorCode::EndpointMismatch, "block " + std::to_string(i) + " ends at " + blocks[i].back().get_str() +
                                                     ", block " + std::to_string(i + 1) + " starts at " +
                                                     blocks[i + 1].front().get_str());
  }
};

struct ChainedImage {
  std::vector<std::vector<Rational>> blocks;
  /// (i, i+1) pairs whose constant and leading c-entries coincide.
  std::vector<std::pair<std::size_t, std::size_t>> shared;
};

inline ChainedImage chained_phi_eval(const ChainPoint& p) {
  p.validate();
  ChainedImage out;
  for (const auto& y : p.blocks) out.blocks.push_back(phi_eval(y));
  for (std::size_t i = 0; i + 1 < out.blocks.size(); ++i) {
    if (out.blocks[i].back() != out.blocks[i + 1].front())
      throw Error(ErrorCode::EndpointMismatch, "shared endpoint squares differ");
    out.shared.emplace_back(i, i + 1);
  }
  return out;
}

struct CrossProduct {
  Rational recovered;
  Rational direct;
  bool pass = false;
};

/// y_{i,j} * y_{l,m} from within-block quadratic monomials only, dividing by
/// the squares of the shared endpoints between blocks i and l.
inline CrossProduct cross_product_recovery(const ChainPoint& p, std::pair<std::size_t, std::size_t> first,
                                           std::pair<std::size_t, std::size_t> second) {
  p.validate();
  auto [bi, j] = first;
  auto [bl, m] = second;
  if (bi > bl) {
    std::swap(bi, bl);
    std::swap(j, m);
  }
  if (bl >= p.blocks.size() || j >= p.blocks[bi].size() || m >= p.blocks[bl].size())
    throw Error(ErrorCode::InvalidArgument, "index outside the chain");
  const auto& y = p.blocks;
  CrossProduct out;
  out.direct = y[bi][j] * y[bl][m];
  if (bi == bl) {
    out.recovered = y[bi][j] * y[bi][m];
  } else {
    Rational numerator = y[bi][j] * y[bi].back();
    Rational denominator = 1;
    for (std::size_t s = bi + 1; s < bl; ++s) numerator *= y[s].front() * y[s].back();
    numerator *= y[bl].front() * y[bl][m];
    for (std::size_t s = bi; s < bl; ++s) {
      const Rational& z = y[s].back();
      if (sgn(z) == 0) throw Error(ErrorCode::ZeroChainValue, "shared endpoint after block " + std::to_string(s) + " vanishes");
      denominator *= z * z;
    }
    out.recovered = numerator / denominator;
  }
  out.pass = out.recovered == out.direct;
  return out;
}

}  // namespace orbita
