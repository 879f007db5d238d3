#include "multimod/ops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multimod/errors.hpp"

namespace multimod::ops {

namespace {

void require_dim(const TableFunction& f, std::size_t n, const char* what) {
  if (f.dim() != n)
    throw InputError(std::string(what) + " has length " + std::to_string(n) + " for a function of dimension " +
                     std::to_string(f.dim()));
}

// Sorted, duplicate-free, within 1..n, nonempty.
IndexList normalized_subset(const IndexList& subset, std::size_t n) {
  if (subset.empty()) throw InputError("coordinate subset must be nonempty");
  IndexList u = subset;
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw InputError("coordinate subset has duplicates");
  if (u.front() < 1 || u.back() > n)
    throw InputError("coordinate subset must lie in 1.." + std::to_string(n));
  return u;
}

IntBox sub_box(const IntBox& box, const IndexList& u) {
  Point lo, hi;
  for (std::size_t k : u) {
    lo.push_back(box.lower()[k - 1]);
    hi.push_back(box.upper()[k - 1]);
  }
  return IntBox(std::move(lo), std::move(hi));
}

}  // namespace

TableFunction shift(const TableFunction& f, PointView b) {
  require_dim(f, b.size(), "shift vector");
  Point lo = f.box().lower(), hi = f.box().upper();
  for (std::size_t i = 0; i < b.size(); ++i) {
    lo[i] -= b[i];
    hi[i] -= b[i];
  }
  return TableFunction(IntBox(std::move(lo), std::move(hi)), f.values());
}

TableFunction negate_vars(const TableFunction& f) {
  Point lo = f.box().upper(), hi = f.box().lower();
  for (auto& v : lo) v = -v;
  for (auto& v : hi) v = -v;
  Point y(f.dim());
  return TableFunction::generate(IntBox(std::move(lo), std::move(hi)), [&](const Point& x) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
    return f(y);
  });
}

TableFunction reverse_vars(const TableFunction& f) {
  IndexList sigma(f.dim());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = sigma.size() - i;
  return permute_vars(f, sigma);
}

TableFunction permute_vars(const TableFunction& f, const IndexList& sigma) {
  const std::size_t n = f.dim();
  if (sigma.size() != n) throw InputError("permutation length differs from function dimension");
  IndexList check = sigma;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i)
    if (check[i] != i + 1) throw InputError("not a permutation of 1.." + std::to_string(n));
  Point lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[sigma[k] - 1] = f.box().lower()[k];
    hi[sigma[k] - 1] = f.box().upper()[k];
  }
  Point y(n);
  return TableFunction::generate(IntBox(std::move(lo), std::move(hi)), [&](const Point& x) {
    for (std::size_t k = 0; k < n; ++k) y[k] = x[sigma[k] - 1];
    return f(y);
  });
}

TableFunction scale_vars(const TableFunction& f, std::int64_t s) {
  if (s < 1) throw InputError("variable scale must be a positive integer");
  Point lo(f.dim()), hi(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    lo[i] = ceil_div(f.box().lower()[i], s);
    hi[i] = floor_div(f.box().upper()[i], s);
    if (lo[i] > hi[i]) throw EmptyDomainError("no multiple of " + std::to_string(s) + " in coordinate " +
                                              std::to_string(i + 1) + " of the box");
  }
  Point y(f.dim());
  return TableFunction::generate(IntBox(std::move(lo), std::move(hi)), [&](const Point& x) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = s * x[i];
    return f(y);
  });
}

TableFunction scale_values(const TableFunction& f, const Rational& a) {
  if (a < 0) throw InputError("value scale must be nonnegative");
  std::vector<ExtendedValue> values;
  values.reserve(f.values().size());
  for (const auto& v : f.values()) values.push_back(v.scaled(a));
  return TableFunction(f.box(), std::move(values));
}

TableFunction add_linear(const TableFunction& f, const std::vector<Rational>& c) {
  require_dim(f, c.size(), "linear coefficient vector");
  return TableFunction::generate(f.box(), [&](const Point& x) {
    const ExtendedValue& v = f(x);
    if (v.is_infinite()) return v;
    Rational s = v.value();
    for (std::size_t i = 0; i < x.size(); ++i) s += c[i] * static_cast<long>(x[i]);
    return ExtendedValue(std::move(s));
  });
}

TableFunction add(const TableFunction& f1, const TableFunction& f2) {
  if (f1.dim() != f2.dim()) throw InputError("summands differ in dimension");
  auto common = f1.box().intersect(f2.box());
  if (!common) throw EmptyDomainError("boxes of the summands do not intersect");
  return TableFunction::generate(*common, [&](const Point& x) { return f1(x) + f2(x); });
}

TableFunction restrict(const TableFunction& f, const IndexList& subset) {
  const IndexList u = normalized_subset(subset, f.dim());
  std::vector<bool> kept(f.dim(), false);
  for (std::size_t k : u) kept[k - 1] = true;
  for (std::size_t k = 0; k < f.dim(); ++k)
    if (!kept[k] && (f.box().lower()[k] > 0 || f.box().upper()[k] < 0))
      throw EmptyDomainError("coordinate " + std::to_string(k + 1) + " cannot be fixed to 0 inside the box");
  Point x(f.dim(), 0);
  return TableFunction::generate(sub_box(f.box(), u), [&](const Point& y) {
    for (std::size_t i = 0; i < u.size(); ++i) x[u[i] - 1] = y[i];
    return f(x);
  });
}

TableFunction project(const TableFunction& f, const IndexList& subset) {
  const IndexList u = normalized_subset(subset, f.dim());
  if (u.size() == f.dim()) throw InputError("projection needs a proper subset of the coordinates");
  const IntBox target = sub_box(f.box(), u);
  std::vector<ExtendedValue> values(target.size());
  Point y(u.size());
  f.box().for_each([&](const Point& x, std::size_t index) {
    const ExtendedValue& v = f.at_index(index);
    if (v.is_infinite()) return;
    for (std::size_t i = 0; i < u.size(); ++i) y[i] = x[u[i] - 1];
    ExtendedValue& slot = values[target.index_of(y)];
    if (v < slot) slot = v;
  });
  return TableFunction(target, std::move(values));
}

bool is_interval(const IndexList& subset) {
  if (subset.empty()) return false;
  IndexList u = subset;
  std::sort(u.begin(), u.end());
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] != u[i - 1] + 1) return false;
  return true;
}

QuadraticFunction sweep_out(const QuadraticFunction& f, std::size_t k) {
  const std::size_t n = f.dim();
  if (n < 2) throw InputError("sweep-out needs at least two variables");
  if (k < 1 || k > n) throw InputError("sweep-out index must lie in 1.." + std::to_string(n));
  if (f.linear() && std::any_of(f.linear()->begin(), f.linear()->end(), [](const Rational& c) { return c != 0; }))
    throw InputError("sweep-out is defined for pure quadratic forms; drop the linear term");
  const RationalMatrix& a = f.matrix();
  const std::size_t p = k - 1;
  const Rational& pivot = a(p, p);
  if (pivot <= 0)
    throw UnboundedError("pivot a_" + std::to_string(k) + std::to_string(k) + " = " + format_rational(pivot) +
                         " is not positive; the minimum over x" + std::to_string(k) + " is unbounded");
  RationalMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == p) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == p) continue;
      out(r, c) = a(i, j) - a(i, p) * a(p, j) / pivot;
      ++c;
    }
    ++r;
  }
  return QuadraticFunction(std::move(out));
}

TableFunction convolve(const TableFunction& f1, const TableFunction& f2) {
  if (f1.dim() != f2.dim()) throw InputError("convolution operands differ in dimension");
  const std::size_t n = f1.dim();
  Point lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = f1.box().lower()[i] + f2.box().lower()[i];
    hi[i] = f1.box().upper()[i] + f2.box().upper()[i];
  }
  const IntBox target(std::move(lo), std::move(hi));
  std::vector<ExtendedValue> values(target.size());
  const std::vector<Point> dom1 = effective_domain(f1);
  const std::vector<Point> dom2 = effective_domain(f2);
  Point x(n);
  for (const Point& y : dom1)
    for (const Point& z : dom2) {
      for (std::size_t i = 0; i < n; ++i) x[i] = y[i] + z[i];
      ExtendedValue v = f1(y) + f2(z);
      ExtendedValue& slot = values[target.index_of(x)];
      if (v < slot) slot = std::move(v);
    }
  return TableFunction(target, std::move(values));
}

IndicatorSet minkowski_sum(const IndicatorSet& s1, const IndicatorSet& s2) {
  if (s1.dim() != s2.dim()) throw InputError("Minkowski summands differ in dimension");
  std::set<Point> sums;
  for (const auto& y : s1.points())
    for (const auto& z : s2.points()) {
      Point x = y;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += z[i];
      sums.insert(std::move(x));
    }
  return IndicatorSet(std::vector<Point>(sums.begin(), sums.end()));
}

IndexList parse_index_list(const std::string& text) {
  IndexList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad index '" + item + "' in list '" + text + "'");
    out.push_back(static_cast<std::size_t>(std::stoul(item)));
  }
  if (out.empty()) throw InputError("empty index list");
  return out;
}

}  // namespace multimod::ops
