#pragma once

// Truncated power series over Q, polynomials in lambda over them, Eisenstein
// samples, Newton polygons and square roots.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbita/error.hpp"
#include "orbita/rational.hpp"

namespace orbita {

/// Element of Q[[t]] / t^N.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(1) {}
  explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order))) {}
  TruncSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(check_order(order)));
  }

  static TruncSeries constant(const Rational& c, int order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// c * t^power; vanishes when power >= order.
  static TruncSeries monomial(const Rational& c, int power, int order) {
    TruncSeries s(order);
    if (power < order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  /// Coefficient of t^i, zero past the truncation.
  Rational coeff(int i) const { return i >= 0 && i < order() ? coeffs_[static_cast<std::size_t>(i)] : Rational(0); }

  /// Index of the first nonzero coefficient; nullopt means zero modulo t^N.
  std::optional<int> valuation() const {
    for (int i = 0; i < order(); ++i)
      if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) return i;
    return std::nullopt;
  }
  bool is_zero() const { return !valuation().has_value(); }
  Rational leading() const {
    auto v = valuation();
    return v ? coeffs_[static_cast<std::size_t>(*v)] : Rational(0);
  }

  TruncSeries truncated(int order) const {
    TruncSeries s(std::min(order, this->order()));
    for (int i = 0; i < s.order(); ++i) s[i] = (*this)[i];
    return s;
  }

  TruncSeries operator-() const {
    TruncSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i < s.order(); ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (int j = 0; i + j < n; ++j)
        if (sgn(b[j]) != 0) s[i + j] += a[i] * b[j];
    }
    return s;
  }
  friend TruncSeries operator*(const Rational& c, const TruncSeries& a) {
    TruncSeries s(a);
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// Multiplication by t^k (k >= 0) within the same truncation.
  TruncSeries shifted(int k) const {
    TruncSeries s(order());
    for (int i = 0; i + k < order(); ++i) s[i + k] = (*this)[i];
    return s;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::string out;
    for (int i = 0; i < order(); ++i) {
      if (sgn((*this)[i]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + (*this)[i].get_str() + ")";
      if (i > 0) out += "t^" + std::to_string(i);
    }
    return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(order()) + ")";
  }

 private:
  static int check_order(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "truncation order must be positive");
    return order;
  }

  std::vector<Rational> coeffs_;
};

/// Polynomial in lambda with TruncSeries coefficients, constant term first.
class PolyOverSeries {
 public:
  PolyOverSeries() = default;
  explicit PolyOverSeries(std::vector<TruncSeries> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial needs a coefficient");
  }

  static PolyOverSeries one(int order) { return PolyOverSeries({TruncSeries::constant(1, order)}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<TruncSeries>& coeffs() const noexcept { return coeffs_; }
  const TruncSeries& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  TruncSeries& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  int order() const {
    int n = coeffs_.front().order();
    for (const auto& c : coeffs_) n = std::min(n, c.order());
    return n;
  }

  bool is_monic() const {
    const auto& lead = coeffs_.back();
    if (lead[0] != 1) return false;
    for (int i = 1; i < lead.order(); ++i)
      if (sgn(lead[i]) != 0) return false;
    return true;
  }

  /// Monic, lower coefficients in tO, constant of valuation exactly one.
  bool is_eisenstein() const {
    if (!is_monic() || degree() < 1) return false;
    for (int i = 0; i < degree(); ++i)
      if (sgn(coeffs_[static_cast<std::size_t>(i)][0]) != 0) return false;
    return coeffs_.front().valuation() == std::optional<int>(1);
  }

  friend PolyOverSeries operator*(const PolyOverSeries& f, const PolyOverSeries& g) {
    const int order = std::min(f.order(), g.order());
    std::vector<TruncSeries> out(static_cast<std::size_t>(f.degree() + g.degree() + 1), TruncSeries(order));
    for (int i = 0; i <= f.degree(); ++i) {
      if (f[i].is_zero()) continue;
      for (int j = 0; j <= g.degree(); ++j) out[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
    return PolyOverSeries(std::move(out));
  }
  friend PolyOverSeries operator+(const PolyOverSeries& f, const PolyOverSeries& g) {
    const int order = std::min(f.order(), g.order());
    std::vector<TruncSeries> out(static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1), TruncSeries(order));
    for (int i = 0; i <= f.degree(); ++i) out[static_cast<std::size_t>(i)] += f[i];
    for (int i = 0; i <= g.degree(); ++i) out[static_cast<std::size_t>(i)] += g[i];
    return PolyOverSeries(std::move(out));
  }

  friend bool operator==(const PolyOverSeries& a, const PolyOverSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "[" + coeffs_[static_cast<std::size_t>(i)].str() + "]";
      if (i > 0) out += "l^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<TruncSeries> coeffs_;
};

inline PolyOverSeries poly_mul(const PolyOverSeries& f, const PolyOverSeries& g) { return f * g; }

/// (-1)^deg f(-lambda), monic when f is.
inline PolyOverSeries dual(const PolyOverSeries& f) {
  PolyOverSeries out = f;
  for (int i = 0; i <= f.degree(); ++i)
    if ((f.degree() - i) % 2 != 0) out[i] = -f[i];
  return out;
}

/// Random monic Eisenstein polynomial of degree e. With `selfdual`, only
/// even powers of lambda appear. A given `constant_leading` fixes the t^1
/// coefficient of the constant term.
inline PolyOverSeries random_eisenstein(int degree, int order, bool selfdual, Rng& rng,
                                        std::optional<Rational> constant_leading = std::nullopt) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "Eisenstein degree must be at least 1");
  if (selfdual && degree % 2 != 0) throw Error(ErrorCode::InvalidArgument, "self-dual Eisenstein degree must be even");
  if (order < 2) throw Error(ErrorCode::TruncationTooShallow, "need order >= 2 to carry a t^1 term");
  std::vector<TruncSeries> coeffs(static_cast<std::size_t>(degree + 1), TruncSeries(order));
  coeffs.back() = TruncSeries::constant(1, order);
  for (int i = 0; i < degree; ++i) {
    if (selfdual && i % 2 != 0) continue;
    auto& c = coeffs[static_cast<std::size_t>(i)];
    for (int k = 1; k < order; ++k) c[k] = rng.small_rational();
    if (i == 0) c[1] = constant_leading ? *constant_leading : rng.small_rational(true);
  }
  if (constant_leading && sgn(*constant_leading) == 0)
    throw Error(ErrorCode::InvalidArgument, "Eisenstein constant needs a nonzero t coefficient");
  return PolyOverSeries(std::move(coeffs));
}

struct LeadingComparison {
  int i = 0;          // number of factors in the prefix
  int index = 0;      // a_index, the coefficient of lambda^(E - index)
  Rational lhs;       // t^i coefficient of a_index
  Rational rhs;       // product of the constant terms' t coefficients
  bool lower_vanish = true;
  bool pass = false;
};

/// For each prefix of factors ending at a degree drop, compares the t^i
/// coefficient of a_{e_1 + ... + e_i} with the product of the factors'
/// constant-term leading coefficients.
inline std::vector<LeadingComparison> leading_coeff_check(const std::vector<PolyOverSeries>& factors) {
  if (factors.empty()) return {};
  for (std::size_t j = 0; j + 1 < factors.size(); ++j)
    if (factors[j].degree() < factors[j + 1].degree())
      throw Error(ErrorCode::InvalidArgument, "factor degrees must be non-increasing");
  PolyOverSeries product = factors.front();
  for (std::size_t j = 1; j < factors.size(); ++j) product = product * factors[j];
  const int r = static_cast<int>(factors.size());
  if (product.order() <= r)
    throw Error(ErrorCode::TruncationTooShallow,
                "order " + std::to_string(product.order()) + " cannot resolve t^" + std::to_string(r));
  const int total = product.degree();
  std::vector<LeadingComparison> out;
  int prefix = 0;
  Rational rhs = 1;
  for (int i = 1; i <= r; ++i) {
    const auto& f = factors[static_cast<std::size_t>(i - 1)];
    prefix += f.degree();
    rhs *= f[0][1];
    const bool drop = i == r || f.degree() > factors[static_cast<std::size_t>(i)].degree();
    if (!drop) continue;
    const TruncSeries& a = product[total - prefix];
    LeadingComparison cmp;
    cmp.i = i;
    cmp.index = prefix;
    cmp.lhs = a[i];
    cmp.rhs = rhs;
    for (int k = 0; k < i; ++k)
      if (sgn(a[k]) != 0) cmp.lower_vanish = false;
    cmp.pass = cmp.lower_vanish && cmp.lhs == cmp.rhs;
    out.push_back(cmp);
  }
  return out;
}

struct SquareRoot {
  std::vector<Rational> coeffs;   // leading first
  bool irrational_leading = false;
  /// When irrational_leading, the true root is sqrt(leading_square) * coeffs.
  Rational leading_square = 1;
};

/// Square root of a rational polynomial given leading coefficient first, by
/// coefficient matching with a tail check.
inline std::optional<SquareRoot> is_square_leading(const std::vector<Rational>& p) {
  if (p.empty() || p.size() % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "need an odd number of coefficients");
  if (sgn(p.front()) == 0) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be nonzero");
  SquareRoot out;
  std::vector<Rational> work = p;
  auto lead_root = rational_sqrt(p.front());
  if (!lead_root) {
    out.irrational_leading = true;
    out.leading_square = p.front();
    for (auto& c : work) c /= p.front();
    lead_root = Rational(1);
  }
  const std::size_t e = (p.size() - 1) / 2;
  std::vector<Rational> q(e + 1);
  q[0] = *lead_root;
  for (std::size_t m = 1; m <= e; ++m) {
    Rational acc = work[m];
    for (std::size_t i = 1; i < m; ++i) acc -= q[i] * q[m - i];
    q[m] = acc / (2 * q[0]);
  }
  for (std::size_t m = e + 1; m < p.size(); ++m) {
    Rational acc = 0;
    for (std::size_t i = m - e; i <= e; ++i) acc += q[i] * q[m - i];
    if (acc != work[m]) return std::nullopt;
  }
  out.coeffs = std::move(q);
  return out;
}

struct NewtonSegment {
  Rational slope;
  int length = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  std::vector<NewtonSegment> segments;   // slopes ascending, collinear runs merged
  bool zero_constant = false;            // constant term vanished to the truncation order
  int lowest_index = 0;                  // first lambda power with a resolved coefficient
};

/// Lower convex hull of (i, val a_i). Slopes are the root valuations.
inline NewtonPolygon newton_polygon(const PolyOverSeries& f) {
  if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "Newton polygon needs a monic polynomial");
  NewtonPolygon out;
  const int deg = f.degree();
  int first = 0;
  while (first < deg && f[first].is_zero()) ++first;
  out.zero_constant = first > 0;
  out.lowest_index = first;
  struct Pt {
    int x;
    int y;
  };
  std::vector<Pt> pts;
  for (int i = first; i <= deg; ++i)
    if (auto v = f[i].valuation()) pts.push_back({i, *v});
  // pts sorted by x; lower hull by monotone chain
  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b when it lies on or above segment a-p
      const long cross = static_cast<long>(b.x - a.x) * (p.y - a.y) - static_cast<long>(b.y - a.y) * (p.x - a.x);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  // censored coefficients must lie on or above the hull
  for (int i = first; i <= deg; ++i) {
    if (!f[i].is_zero()) continue;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
      if (i > hull[h].x && i < hull[h + 1].x) {
        const Rational height = Rational(hull[h].y) + Rational(hull[h + 1].y - hull[h].y, hull[h + 1].x - hull[h].x) * (i - hull[h].x);
        if (height > f[i].order())
          throw Error(ErrorCode::UnresolvedValuation, "coefficient of lambda^" + std::to_string(i) + " is censored below the hull");
      }
    }
  }
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int len = hull[h + 1].x - hull[h].x;
    Rational slope(hull[h].y - hull[h + 1].y, len);
    slope.canonicalize();
    out.segments.push_back({slope, len});
  }
  std::sort(out.segments.begin(), out.segments.end(), [](const NewtonSegment& a, const NewtonSegment& b) { return a.slope < b.slope; });
  std::vector<NewtonSegment> merged;
  for (const auto& s : out.segments) {
    if (!merged.empty() && merged.back().slope == s.slope) merged.back().length += s.length;
    else merged.push_back(s);
  }
  out.segments = std::move(merged);
  return out;
}

/// Principal square root: positive leading rational, known to order N - v/2.
inline TruncSeries series_sqrt(const TruncSeries& s) {
  const auto v = s.valuation();
  if (!v) throw Error(ErrorCode::UnresolvedValuation, "square root of a series that vanishes to the truncation order");
  if (*v % 2 != 0) throw Error(ErrorCode::OddValuation, "valuation " + std::to_string(*v));
  const auto root0 = rational_sqrt(s[*v]);
  if (!root0) throw Error(ErrorCode::NonSquareLeading, "leading coefficient " + s[*v].get_str());
  const int unit_order = s.order() - *v;
  const int half = *v / 2;
  std::vector<Rational> r(static_cast<std::size_t>(unit_order));
  r[0] = *root0;
  for (int m = 1; m < unit_order; ++m) {
    Rational acc = s[*v + m];
    for (int i = 1; i < m; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(m - i)];
    r[static_cast<std::size_t>(m)] = acc / (2 * r[0]);
  }
  TruncSeries out(s.order() - half);
  for (int m = 0; m < unit_order; ++m) out[m + half] = r[static_cast<std::size_t>(m)];
  return out;
}

/// Inverse of a series with nonzero constant term.
inline TruncSeries inverse_unit(const TruncSeries& u) {
  if (sgn(u[0]) == 0) throw Error(ErrorCode::InvalidArgument, "series is not a unit");
  TruncSeries inv(u.order());
  inv[0] = 1 / u[0];
  for (int m = 1; m < u.order(); ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m; ++i) acc += u[i] * inv[m - i];
    inv[m] = -acc * inv[0];
  }
  return inv;
}

/// a / p when val(a) >= val(p); exact to order min(N_a, N_p) - val(p).
inline TruncSeries divide_by(const TruncSeries& a, const TruncSeries& p) {
  const auto v = p.valuation();
  if (!v) throw Error(ErrorCode::UnresolvedValuation, "division by a censored series");
  const int order = std::min(a.order(), p.order()) - *v;
  if (order < 1) throw Error(ErrorCode::UnresolvedValuation, "quotient has no resolved coefficients");
  TruncSeries num(order), unit(order);
  for (int i = 0; i < order; ++i) {
    if (i < *v && sgn(a[i]) != 0) throw Error(ErrorCode::InvalidArgument, "dividend valuation below divisor valuation");
    num[i] = a.coeff(i + *v);
    unit[i] = p.coeff(i + *v);
  }
  return num * inverse_unit(unit);
}

struct TableEntry {
  int lambda_power = 0;
  int valuation = 0;        // expected valuation of the coefficient
  std::string formula;
  Rational expected;
  Rational actual;          // t^valuation coefficient
  bool lower_vanish = true;
  bool pass = false;
};

struct ExampleSuiteResult {
  std::array<Rational, 3> h_bar;       // constant-term leading coefficients of f_1, f_2, f_3
  std::array<Rational, 3> kappa;       // h_bar(f_i) * h_bar(dual f_i)
  std::vector<TableEntry> table;
  bool p1_square = false;
  bool p3_square = false;
  int resamples = 0;
  bool pass = false;
};

/// chi = f1 f1' f2 f2' f3 f3' with deg f = 4, 3, 2 (f' the dual); leading
/// terms of the coefficients attached to the partition [4,4,3,3,2,2].
inline ExampleSuiteResult example_4433_22_suite(int order, Rng& rng, bool unit_draw = false) {
  if (order < 7)
    throw Error(ErrorCode::TruncationTooShallow, "constant term has valuation 6; need order >= 7");
  ExampleSuiteResult out;
  for (;;) {
    const std::array<int, 3> degrees{4, 3, 2};
    PolyOverSeries chi = PolyOverSeries::one(order);
    for (std::size_t i = 0; i < 3; ++i) {
      std::optional<Rational> fixed;
      if (unit_draw) fixed = Rational(1);
      const auto f = random_eisenstein(degrees[i], order, false, rng, fixed);
      const auto g = dual(f);
      out.h_bar[i] = f[0][1];
      out.kappa[i] = f[0][1] * g[0][1];
      chi = chi * f * g;
    }
    const Rational& h1 = out.h_bar[0];
    const Rational& h3 = out.h_bar[2];
    const Rational k1 = out.kappa[0], k12 = out.kappa[0] * out.kappa[1], k123 = k12 * out.kappa[2];
    if (sgn(k123) == 0) {
      ++out.resamples;
      continue;
    }
    out.table.clear();
    auto entry = [&](int power, int valuation, std::string formula, const Rational& expected) {
      TableEntry e;
      e.lambda_power = power;
      e.valuation = valuation;
      e.formula = std::move(formula);
      e.expected = expected;
      const TruncSeries& a = chi[power];
      e.actual = a[valuation];
      for (int k = 0; k < valuation; ++k)
        if (sgn(a[k]) != 0) e.lower_vanish = false;
      e.pass = e.lower_vanish && e.actual == e.expected;
      out.table.push_back(e);
    };
    entry(18, 0, "1", Rational(1));
    entry(14, 1, "2 h1", 2 * h1);
    entry(10, 2, "k1", k1);
    entry(4, 4, "k1 k2", k12);
    entry(2, 5, "2 k1 k2 h3", 2 * k12 * h3);
    entry(0, 6, "k1 k2 k3", k123);
    // p_1 = c_0 l^2 + c_4 l + c_8 and p_3 = c_14 l^2 + c_16 l + c_18 on leading terms
    auto lead = [&](std::size_t row) { return out.table[row].actual; };
    out.p1_square = lead(1) * lead(1) - 4 * lead(0) * lead(2) == 0;
    out.p3_square = lead(4) * lead(4) - 4 * lead(3) * lead(5) == 0;
    out.pass = out.p1_square && out.p3_square &&
               std::all_of(out.table.begin(), out.table.end(), [](const TableEntry& e) { return e.pass; });
    return out;
  }
}

}  // namespace orbita
