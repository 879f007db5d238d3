#include "multimod/checks.hpp"

#include <algorithm>

#include "multimod/errors.hpp"
#include "multimod/parallel.hpp"

namespace multimod::checks {

namespace {

Point add_points(PointView a, PointView b) {
  Point c(a.begin(), a.end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Point join(PointView a, PointView b) {
  Point c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Point meet(PointView a, PointView b) {
  Point c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
  return c;
}

bool comparable(PointView a, PointView b) {
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    le = le && a[i] <= b[i];
    ge = ge && a[i] >= b[i];
  }
  return le || ge;
}

std::pair<Point, Point> midpoints(PointView p, PointView q) {
  Point up(p.size()), down(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    up[i] = ceil_half(p[i] + q[i]);
    down[i] = floor_half(p[i] + q[i]);
  }
  return {up, down};
}

// Builds a witness for "t0 + t1 >= t2 + t3" when it fails.
std::optional<Witness> four_term(WitnessKind kind, std::vector<Point> points, const ExtendedValue& t0,
                                 const ExtendedValue& t1, const ExtendedValue& t2, const ExtendedValue& t3) {
  ExtendedValue lhs = t0 + t1;
  if (lhs.is_infinite()) return std::nullopt;
  ExtendedValue rhs = t2 + t3;
  if (!(lhs < rhs)) return std::nullopt;
  return Witness{kind, std::move(points), std::move(lhs), std::move(rhs), {t0, t1, t2, t3}};
}

std::optional<Witness> multimodular_at(const TableFunction& f, PointView z, PointView d, PointView dp) {
  const Point zd = add_points(z, d), zdp = add_points(z, dp), zddp = add_points(zd, dp);
  return four_term(WitnessKind::multimodular, {Point(z.begin(), z.end()), Point(d.begin(), d.end()),
                                               Point(dp.begin(), dp.end())},
                   f(zd), f(zdp), f(z), f(zddp));
}

std::optional<Witness> submodular_at(const TableFunction& f, PointView x, PointView y) {
  const Point hi = join(x, y), lo = meet(x, y);
  return four_term(WitnessKind::submodular, {Point(x.begin(), x.end()), Point(y.begin(), y.end())}, f(x),
                   f(y), f(hi), f(lo));
}

std::optional<Witness> midpoint_at(const TableFunction& g, PointView p, PointView q) {
  auto [up, down] = midpoints(p, q);
  const ExtendedValue& gu = g(up);
  const ExtendedValue& gd = g(down);
  return four_term(WitnessKind::midpoint,
                   {Point(p.begin(), p.end()), Point(q.begin(), q.end()), up, down}, g(p), g(q), gu, gd);
}

Verdict to_verdict(SweepResult r) {
  Verdict v;
  v.checked = r.checked;
  v.holds = !r.witness.has_value();
  v.witness = std::move(r.witness);
  return v;
}

// Quadratic-form entry with the zero padding a_0j = a_i0 = a_{n+1,j} = a_{i,n+1} = 0 (1-based).
Rational padded(const RationalMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.rows();
  if (i == 0 || j == 0 || i > n || j > n) return 0;
  return a(i - 1, j - 1);
}

Rational criterion_value(const RationalMatrix& a, std::size_t i, std::size_t j) {
  return padded(a, i, j) - padded(a, i, j + 1) - padded(a, i + 1, j) + padded(a, i + 1, j + 1);
}

Rational off_diagonal_abs_sum(const RationalMatrix& b, std::size_t i) {
  Rational s = 0;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (j != i) s += abs(b(i, j));
  return s;
}

Verdict submodular_all_pairs(const TableFunction& f) {
  const std::vector<Point> dom = effective_domain(f);
  return to_verdict(sweep_items(dom.size(), [&](std::size_t qi) {
    ItemScan scan;
    for (std::size_t pi = 0; pi < qi; ++pi) {
      if (comparable(dom[pi], dom[qi])) continue;
      ++scan.checked;
      if ((scan.witness = submodular_at(f, dom[pi], dom[qi]))) break;
    }
    return scan;
  }));
}

Verdict submodular_two_coordinate(const TableFunction& f) {
  const IntBox& box = f.box();
  const std::size_t n = f.dim();
  return to_verdict(sweep_items(box.size(), [&](std::size_t xi) {
    ItemScan scan;
    const Point x = box.point_at(xi);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::int64_t a = x[i] + 1; a <= box.upper()[i]; ++a)
          for (std::int64_t b = box.lower()[j]; b < x[j]; ++b) {
            Point y = x;
            y[i] = a;
            y[j] = b;
            ++scan.checked;
            if ((scan.witness = submodular_at(f, x, y))) return scan;
          }
    return scan;
  }));
}

}  // namespace

std::vector<Point> direction_set_F(std::size_t n) {
  if (n == 0) throw InputError("dimension must be >= 1");
  std::vector<Point> dirs;
  Point d(n, 0);
  d[0] = -1;
  dirs.push_back(d);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    e[i + 1] = -1;
    dirs.push_back(e);
  }
  Point last(n, 0);
  last[n - 1] = 1;
  dirs.push_back(last);
  return dirs;
}

Verdict is_multimodular(const TableFunction& f) {
  const std::vector<Point> dirs = direction_set_F(f.dim());
  // z itself may lie outside dom f; only z with z+d, z+d' in dom f can violate.
  const IntBox zone = f.box().inflated(1);
  return to_verdict(sweep_items(zone.size(), [&](std::size_t k) {
    ItemScan scan;
    const Point z = zone.point_at(k);
    std::vector<bool> reach(dirs.size());
    Point y(z.size());
    for (std::size_t a = 0; a < dirs.size(); ++a) {
      for (std::size_t i = 0; i < z.size(); ++i) y[i] = z[i] + dirs[a][i];
      reach[a] = f(y).is_finite();
    }
    for (std::size_t b = 1; b < dirs.size(); ++b)
      for (std::size_t a = 0; a < b; ++a) {
        if (!reach[a] || !reach[b]) continue;
        ++scan.checked;
        if ((scan.witness = multimodular_at(f, z, dirs[a], dirs[b]))) return scan;
      }
    return scan;
  }));
}

Verdict is_submodular(const TableFunction& f, SubmodularMode mode) {
  if (mode == SubmodularMode::automatic) {
    const bool full = std::all_of(f.values().begin(), f.values().end(),
                                  [](const ExtendedValue& v) { return v.is_finite(); });
    mode = full ? SubmodularMode::two_coordinate : SubmodularMode::all_pairs;
  }
  return mode == SubmodularMode::two_coordinate ? submodular_two_coordinate(f) : submodular_all_pairs(f);
}

Verdict is_lnat(const TableFunction& g) {
  const std::vector<Point> dom = effective_domain(g);
  return to_verdict(sweep_items(dom.size(), [&](std::size_t qi) {
    ItemScan scan;
    for (std::size_t pi = 0; pi < qi; ++pi) {
      ++scan.checked;
      if ((scan.witness = midpoint_at(g, dom[pi], dom[qi]))) break;
    }
    return scan;
  }));
}

Verdict is_L_convex(const TableFunction& h) {
  Verdict v = is_submodular(h);
  std::optional<Point> ref;
  Rational step;
  std::optional<Witness> translation;
  for (const Point& q : effective_domain(h)) {
    Point q1 = q;
    for (auto& c : q1) ++c;
    const ExtendedValue& next = h(q1);
    if (next.is_infinite()) continue;
    ++v.checked;
    const Rational diff = next.value() - h(q).value();
    if (!ref) {
      ref = q;
      step = diff;
      continue;
    }
    if (diff != step) {
      translation = Witness{WitnessKind::translation, {*ref, q}, next, h(q) + ExtendedValue(step), {next, h(q)}};
      break;
    }
  }
  v.translation_untestable = !ref.has_value();
  if (ref) v.translation_step = step;
  if (v.holds && translation) {
    v.holds = false;
    v.witness = std::move(translation);
  }
  return v;
}

Verdict is_quadratic_multimodular(const QuadraticFunction& f) {
  const RationalMatrix& a = f.matrix();
  const std::size_t n = f.dim();
  Verdict v;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++v.checked;
      Rational c = criterion_value(a, i, j);
      if (c > 0) {
        v.holds = false;
        v.witness = Witness{WitnessKind::quadratic_criterion,
                            {Point{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}},
                            ExtendedValue(0),
                            ExtendedValue(c),
                            {}};
        return v;
      }
    }
  return v;
}

Verdict is_L_class(const QuadraticFunction& f) {
  const RationalMatrix& b = f.matrix();
  const std::size_t n = f.dim();
  Verdict v;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++v.checked;
      if (b(i, j) > 0) {
        v.holds = false;
        v.witness = Witness{WitnessKind::l_class,
                            {Point{static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)}},
                            ExtendedValue(0),
                            ExtendedValue(b(i, j)),
                            {}};
        return v;
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    ++v.checked;
    Rational s = off_diagonal_abs_sum(b, i);
    if (b(i, i) < s) {
      v.holds = false;
      const auto k = static_cast<std::int64_t>(i + 1);
      v.witness = Witness{WitnessKind::l_class, {Point{k, k}}, ExtendedValue(b(i, i)), ExtendedValue(s), {}};
      return v;
    }
  }
  return v;
}

Verdict is_multimodular_set(const IndicatorSet& s) {
  return is_multimodular(materialize(s, s.bounding_box().inflated(1)));
}

Verdict is_lnat_set(const IndicatorSet& s) { return is_lnat(materialize(s, s.bounding_box().inflated(1))); }

bool confirms(const Witness& w, const TableFunction& f) {
  auto dims_ok = [&](std::size_t count) {
    if (w.points.size() < count) return false;
    for (std::size_t i = 0; i < count; ++i)
      if (w.points[i].size() != f.dim()) return false;
    return true;
  };
  std::optional<Witness> again;
  switch (w.kind) {
    case WitnessKind::multimodular:
      if (!dims_ok(3)) return false;
      again = multimodular_at(f, w.points[0], w.points[1], w.points[2]);
      break;
    case WitnessKind::submodular:
      if (!dims_ok(2)) return false;
      again = submodular_at(f, w.points[0], w.points[1]);
      break;
    case WitnessKind::midpoint:
      if (!dims_ok(2)) return false;
      again = midpoint_at(f, w.points[0], w.points[1]);
      break;
    case WitnessKind::translation: {
      if (!dims_ok(2)) return false;
      auto plus_one = [](Point q) {
        for (auto& c : q) ++c;
        return q;
      };
      const ExtendedValue& r0 = f(w.points[0]);
      const ExtendedValue& r1 = f(plus_one(w.points[0]));
      const ExtendedValue& q0 = f(w.points[1]);
      const ExtendedValue& q1 = f(plus_one(w.points[1]));
      if (r0.is_infinite() || r1.is_infinite() || q0.is_infinite()) return false;
      const ExtendedValue expected = q0 + ExtendedValue(Rational(r1.value() - r0.value()));
      return q1 != expected && q1 == w.lhs && expected == w.rhs;
    }
    default:
      return false;
  }
  return again && again->lhs == w.lhs && again->rhs == w.rhs;
}

bool confirms(const Witness& w, const QuadraticFunction& f) {
  if (w.points.size() != 1 || w.points[0].size() != 2) return false;
  const std::int64_t i = w.points[0][0], j = w.points[0][1];
  const auto n = static_cast<std::int64_t>(f.dim());
  if (w.kind == WitnessKind::quadratic_criterion) {
    if (i < 0 || i >= j || j > n) return false;
    const Rational c = criterion_value(f.matrix(), static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return c > 0 && w.rhs == ExtendedValue(c);
  }
  if (w.kind == WitnessKind::l_class) {
    if (i < 1 || j < 1 || i > n || j > n) return false;
    const auto r = static_cast<std::size_t>(i - 1), c = static_cast<std::size_t>(j - 1);
    if (r != c) return f.matrix()(r, c) > 0 && w.rhs == ExtendedValue(f.matrix()(r, c));
    const Rational s = off_diagonal_abs_sum(f.matrix(), r);
    return f.matrix()(r, r) < s && w.lhs == ExtendedValue(f.matrix()(r, r)) && w.rhs == ExtendedValue(s);
  }
  return false;
}

}  // namespace multimod::checks
