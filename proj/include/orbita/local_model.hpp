#pragma once

// Matrix models of nilpotent elements in so(2n), residual lifts over Q[[t]],
// characteristic polynomials and Newton-polygon checks.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbita/matrix.hpp"
#include "orbita/orbit_invariants.hpp"
#include "orbita/partition.hpp"
#include "orbita/series.hpp"

namespace orbita {

struct BasisLabel {
  int position;   // i, 1-based along the string
  int string;     // j, 1-based
};

struct SoModel {
  Partition partition;
  std::size_t dim = 0;
  QMatrix gram;
  QMatrix nilp;
  std::vector<BasisLabel> labels;
  std::vector<int> tau;   // 1-based partner string

  bool gram_symmetric() const { return gram == gram.transposed(); }
  bool nilp_skew_adjoint() const {
    const QMatrix lhs = gram * nilp + nilp.transposed() * gram;
    return lhs.all_zero();
  }
};

/// Jordan basis v(i, j), strings ordered by part, e v(i,j) = v(i-1,j), equal
/// even parts paired as consecutive strings, pairing signs (-1)^(i-1).
inline SoModel jordan_so_matrix(const Partition& d) {
  require_type_d(d);
  SoModel m;
  m.partition = d;
  m.dim = static_cast<std::size_t>(d.total());
  m.gram = QMatrix(m.dim, m.dim);
  m.nilp = QMatrix(m.dim, m.dim);
  const std::size_t r = d.size();
  std::vector<std::size_t> offset(r);
  for (std::size_t j = 0, acc = 0; j < r; ++j) {
    offset[j] = acc;
    acc += static_cast<std::size_t>(d.part(j));
    for (int i = 1; i <= d.part(j); ++i) m.labels.push_back({i, static_cast<int>(j) + 1});
  }
  auto idx = [&](int i, std::size_t j) { return offset[j] + static_cast<std::size_t>(i - 1); };
  m.tau.assign(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    if (d.part(j) % 2 == 1) {
      m.tau[j] = static_cast<int>(j) + 1;
    } else if (m.tau[j] == 0) {
      if (j + 1 >= r || d.part(j + 1) != d.part(j))
        throw Error(ErrorCode::NotTypeD, "unpaired even part in " + d.str());
      m.tau[j] = static_cast<int>(j) + 2;
      m.tau[j + 1] = static_cast<int>(j) + 1;
    }
  }
  for (std::size_t j = 0; j < r; ++j) {
    const int len = d.part(j);
    for (int i = 2; i <= len; ++i) m.nilp(idx(i - 1, j), idx(i, j)) = 1;
    const auto partner = static_cast<std::size_t>(m.tau[j] - 1);
    if (partner < j) continue;   // filled from the partner's side
    for (int i = 1; i <= len; ++i) {
      const Rational sign = (i - 1) % 2 == 0 ? 1 : -1;
      m.gram(idx(i, j), idx(len + 1 - i, partner)) = sign;
      m.gram(idx(len + 1 - i, partner), idx(i, j)) = sign;
    }
  }
  if (!m.gram_symmetric()) throw Error(ErrorCode::MalformedTypeD, "pairing is not symmetric");
  if (sgn(determinant(m.gram)) == 0) throw Error(ErrorCode::MalformedTypeD, "pairing is degenerate");
  if (!m.nilp_skew_adjoint()) throw Error(ErrorCode::MalformedTypeD, "nilpotent is not skew-adjoint");
  return m;
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
inline std::vector<int> jordan_type(const QMatrix& nilp) {
  const std::size_t n = nilp.rows();
  std::vector<std::size_t> ranks{n};
  QMatrix power = QMatrix::identity(n, Rational(0), Rational(1));
  while (ranks.back() > 0) {
    power = power * nilp;
    const std::size_t rk = rank(power);
    if (rk == ranks.back()) throw Error(ErrorCode::InvalidArgument, "matrix is not nilpotent");
    ranks.push_back(rk);
  }
  // number of blocks of size >= k is rank(e^{k-1}) - rank(e^k)
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  std::vector<int> parts;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - next; ++c) parts.push_back(static_cast<int>(k) + 1);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

struct LiftedField {
  SeriesMatrix theta;
  QMatrix xi;
  int order = 0;
};

/// theta = e + t xi with xi = gram^{-1} S, S a random skew-symmetric matrix.
inline LiftedField random_residual_lift(const SoModel& model, int order, Rng& rng) {
  if (order < 2) throw Error(ErrorCode::TruncationTooShallow, "lift needs order >= 2");
  const std::size_t n = model.dim;
  QMatrix skew(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // wide range: small numerators hit non-generic coincidences too often
      skew(i, j) = rng.wide_rational(999, 97);
      skew(j, i) = -skew(i, j);
    }
  // the pairing is a symmetric signed permutation, so it is its own inverse
  const QMatrix inverse = model.gram.transposed();
  LiftedField out;
  out.order = order;
  out.xi = inverse * skew;
  out.theta = to_series(model.nilp, order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(out.xi(i, j)) != 0) out.theta(i, j)[1] += out.xi(i, j);
  return out;
}

inline bool lift_is_skew_adjoint(const SoModel& model, const LiftedField& lift) {
  const SeriesMatrix g = to_series(model.gram, lift.order);
  return (g * lift.theta + lift.theta.transposed() * g).all_zero();
}

/// det(lambda I - A) by Berkowitz's division-free recursion.
inline PolyOverSeries char_poly(const SeriesMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const int order = n ? a(0, 0).order() : 1;
  const TruncSeries zero(order);
  // leading-first coefficients of the characteristic polynomial of the leading k x k block
  std::vector<TruncSeries> poly{TruncSeries::constant(1, order)};
  for (std::size_t k = 0; k < n; ++k) {
    // block [[B, c], [r, a_kk]] with B the leading k x k part
    std::vector<TruncSeries> toeplitz{TruncSeries::constant(1, order), -a(k, k)};
    std::vector<TruncSeries> col(k, zero);
    for (std::size_t i = 0; i < k; ++i) col[i] = a(i, k);
    for (std::size_t s = 0; s < k; ++s) {
      TruncSeries w = zero;
      for (std::size_t i = 0; i < k; ++i) w += a(k, i) * col[i];
      toeplitz.push_back(-w);
      if (s + 1 == k) break;
      std::vector<TruncSeries> next(k, zero);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (!a(i, j).is_zero() && !col[j].is_zero()) next[i] += a(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<TruncSeries> updated(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) updated[i] += toeplitz[i - j] * poly[j];
    poly = std::move(updated);
  }
  std::reverse(poly.begin(), poly.end());
  return PolyOverSeries(std::move(poly));
}

inline PolyOverSeries char_poly(const LiftedField& lift) { return char_poly(lift.theta); }

/// True when only even powers of lambda carry nonzero coefficients.
inline bool is_even_in_lambda(const PolyOverSeries& f) {
  for (int i = 1; i <= f.degree(); i += 2)
    if (!f[i].is_zero()) return false;
  return true;
}

/// Merged slope multiset {1/e : length e} over the degree partition.
inline std::vector<NewtonSegment> predicted_slopes(const Partition& d) {
  std::vector<NewtonSegment> segs;
  for (int e : deg_partition(d).block_ordered) {
    Rational slope(1, e);
    slope.canonicalize();
    auto it = std::find_if(segs.begin(), segs.end(), [&](const NewtonSegment& s) { return s.slope == slope; });
    if (it == segs.end()) segs.push_back({slope, e});
    else it->length += e;
  }
  std::sort(segs.begin(), segs.end(), [](const NewtonSegment& a, const NewtonSegment& b) { return a.slope < b.slope; });
  return segs;
}

struct DegPartitionCheck {
  std::vector<NewtonSegment> predicted;
  int trials = 0;
  int matched_trials = 0;
  int draws = 0;
  int degenerate = 0;        // censored polygons, resampled
  int mismatches = 0;        // resolved polygons with the wrong slopes, resampled
  int odd_char_polys = 0;
  int square_constants = 0;  // resolved constant terms with a series square root
  int unresolved_constants = 0;
  double mismatch_rate = 0.0;
  bool pass = false;
};

inline constexpr int kMaxLocalModelSize = 10;

inline DegPartitionCheck check_deg_partition(const Partition& d, int trials, int order, Rng& rng,
                                             int max_attempts_per_trial = 10) {
  if (d.total() > kMaxLocalModelSize)
    throw Error(ErrorCode::TooLarge, "2n = " + std::to_string(d.total()) + " exceeds " + std::to_string(kMaxLocalModelSize));
  if (order < d.total())
    throw Error(ErrorCode::TruncationTooShallow, "need truncation order >= 2n");
  const SoModel model = jordan_so_matrix(d);
  DegPartitionCheck out;
  out.predicted = predicted_slopes(d);
  out.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0; attempt < max_attempts_per_trial; ++attempt) {
      ++out.draws;
      const auto lift = random_residual_lift(model, order, rng);
      const auto chi = char_poly(lift);
      if (!is_even_in_lambda(chi)) ++out.odd_char_polys;
      try {
        const auto root = series_sqrt(chi[0]);
        if (root * root == chi[0].truncated(root.order())) ++out.square_constants;
      } catch (const Error&) {
        ++out.unresolved_constants;
      }
      std::optional<NewtonPolygon> poly;
      try {
        poly = newton_polygon(chi);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnresolvedValuation) throw;
      }
      if (!poly || poly->zero_constant) {
        ++out.degenerate;
        continue;
      }
      if (poly->segments == out.predicted) {
        ++out.matched_trials;
        break;
      }
      ++out.mismatches;
    }
  }
  out.mismatch_rate = out.draws ? static_cast<double>(out.mismatches) / out.draws : 0.0;
  out.pass = out.matched_trials == trials && out.mismatch_rate < 0.1 && out.odd_char_polys == 0;
  return out;
}

struct SaturatedKernel {
  std::vector<std::vector<TruncSeries>> basis;   // column vectors
  QMatrix reduction;                             // basis mod t, one column per vector
  std::size_t pivot_rank = 0;
  std::vector<int> pivot_valuations;
  bool annihilated = true;
};

/// Kernel of A as a saturated submodule, by elimination with pivots of least
/// t-valuation. Column operations are accumulated so the kernel is spanned by
/// columns of a unimodular transform.
inline SaturatedKernel saturated_kernel(const SeriesMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  int order = cols && rows ? a(0, 0).order() : 1;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) order = std::min(order, a(i, j).order());
  SeriesMatrix m = a;
  SeriesMatrix q = SeriesMatrix::identity(cols, TruncSeries(order), TruncSeries::constant(1, order));
  SaturatedKernel out;
  std::size_t s = 0;
  for (; s < std::min(rows, cols); ++s) {
    std::optional<int> best;
    std::size_t bi = s, bj = s;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j)
        if (auto v = m(i, j).valuation(); v && (!best || *v < *best)) {
          best = v;
          bi = i;
          bj = j;
        }
    if (!best) break;
    if (order - *best < 1) throw Error(ErrorCode::UnstableNormalForm, "pivot valuation reaches the truncation order");
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(s, j), m(bi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, s), m(i, bj));
    for (std::size_t i = 0; i < cols; ++i) std::swap(q(i, s), q(i, bj));
    const TruncSeries pivot = m(s, s);
    out.pivot_valuations.push_back(*best);
    for (std::size_t i = s + 1; i < rows; ++i) {
      if (m(i, s).is_zero()) continue;
      const TruncSeries f = divide_by(m(i, s), pivot);
      for (std::size_t j = s; j < cols; ++j) m(i, j) -= f * m(s, j);
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      if (m(s, j).is_zero()) continue;
      const TruncSeries f = divide_by(m(s, j), pivot);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) -= f * m(i, s);
      for (std::size_t i = 0; i < cols; ++i) q(i, j) -= f * q(i, s);
    }
  }
  out.pivot_rank = s;
  for (std::size_t j = s; j < cols; ++j) {
    std::vector<TruncSeries> v;
    for (std::size_t i = 0; i < cols; ++i) v.push_back(q(i, j));
    out.basis.push_back(std::move(v));
  }
  out.reduction = QMatrix(cols, out.basis.size());
  for (std::size_t k = 0; k < out.basis.size(); ++k)
    for (std::size_t i = 0; i < cols; ++i) out.reduction(i, k) = out.basis[k][i][0];
  for (const auto& v : out.basis)
    for (std::size_t i = 0; i < rows; ++i) {
      TruncSeries acc(order);
      for (std::size_t j = 0; j < cols; ++j) acc += a(i, j) * v[j];
      if (!acc.is_zero()) out.annihilated = false;
    }
  return out;
}

/// Companion matrix of a monic polynomial: last column holds -a_0 .. -a_{n-1}.
inline SeriesMatrix companion(const PolyOverSeries& f) {
  if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "companion matrix needs a monic polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  const int order = f.order();
  SeriesMatrix m(n, n, TruncSeries(order));
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = TruncSeries::constant(1, order);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -f[static_cast<int>(i)].truncated(order);
  return m;
}

/// g(M) by Horner's rule.
inline SeriesMatrix evaluate_at(const PolyOverSeries& g, const SeriesMatrix& m) {
  const std::size_t n = m.rows();
  const int order = std::min(g.order(), n ? m(0, 0).order() : g.order());
  const auto one = TruncSeries::constant(1, order);
  SeriesMatrix acc(n, n, TruncSeries(order));
  for (int k = g.degree(); k >= 0; --k) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += g[k].truncated(order) * one;
  }
  return acc;
}

}  // namespace orbita
