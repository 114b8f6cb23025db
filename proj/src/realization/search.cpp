#include "quatroid/realization/realization.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <array>
#include <bit>
#include <random>
#include <sstream>

namespace quat {

namespace {

using Vec3 = Eigen::Matrix<Rational, 3, 1>;

struct Constraint {
  bool conic = false;
  Vec3 line;              // a.x = 0
  Matrix<Rational> quad;  // x^T M x = 0
  std::vector<int> through;  // placed points on it
};

// X(s, t), one binary form per coordinate
using Param = std::array<BinaryForm, 3>;

Rational eval_constraint(const Constraint& c, const Vec3& x) {
  if (!c.conic) return c.line.dot(x);
  return (x.transpose() * c.quad * x)(0, 0);
}

BinaryForm restrict_to(const Constraint& c, const Param& x) {
  if (!c.conic) {
    BinaryForm f;
    for (int i = 0; i < 3; ++i) f = f + x[i] * c.line(i);
    return f;
  }
  BinaryForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!is_zero(c.quad(i, j))) f = f + (x[i] * x[j]) * c.quad(i, j);
  return f;
}

Vec3 eval_param(const Param& x, const Rational& s, const Rational& t) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = x[i](s, t);
  return v;
}

bool same_point(const Vec3& a, const Vec3& b) { return cross<Rational>(a, b).isZero(); }

class Builder {
 public:
  Builder(const Pair& q, std::mt19937_64& rng, int box)
      : lines_(line_flats(q)), conics_(conic_flats(q)), rng_(rng), box_(box) {}

  std::optional<Configuration> attempt(const std::vector<int>& order) {
    pts_.assign(kPoints, Vec3::Zero());
    placed_ = 0;
    for (int k : order) {
      auto x = place(k);
      if (!x) return std::nullopt;
      for (int j = 0; j < kPoints; ++j)
        if (((placed_ >> j) & 1) && same_point(*x, pts_[j])) return std::nullopt;
      pts_[k] = *x;
      placed_ |= static_cast<PointMask>(1u << k);
    }
    RatMatrix m(3, kPoints);
    for (int k = 0; k < kPoints; ++k) m.col(k) = normalized(RatVector(pts_[k]));
    return Configuration(m);
  }

  int degree(int k) const {
    int d = 0;
    for (auto f : lines_) d += (f >> k) & 1;
    for (auto f : conics_) d += (f >> k) & 1;
    return d;
  }

  // constraints on point k from the flats already pinned down by placed points
  int active(int k, PointMask placed) const {
    int c = 0;
    for (auto f : lines_)
      if (((f >> k) & 1) && popcount(f & placed & ~(1u << k)) >= 2) ++c;
    for (auto f : conics_)
      if (((f >> k) & 1) && popcount(f & placed & ~(1u << k)) >= 5) ++c;
    return c;
  }

 private:
  int rand_int() { return std::uniform_int_distribution<int>(-box_, box_)(rng_); }

  Vec3 random_point() {
    Vec3 v;
    do {
      v << rand_int(), rand_int(), rand_int();
    } while (v.isZero());
    return v;
  }

  std::optional<std::vector<Constraint>> constraints(int k) {
    std::vector<Constraint> out;
    for (auto f : lines_) {
      if (!((f >> k) & 1)) continue;
      std::vector<int> on;
      for (int j = 0; j < kPoints; ++j)
        if (j != k && ((f & placed_) >> j) & 1) on.push_back(j);
      if (on.size() < 2) continue;
      Constraint c;
      c.line = cross<Rational>(pts_[on[0]], pts_[on[1]]);
      c.through = on;
      out.push_back(c);
    }
    for (auto f : conics_) {
      if (!((f >> k) & 1)) continue;
      std::vector<int> on;
      for (int j = 0; j < kPoints; ++j)
        if (j != k && ((f & placed_) >> j) & 1) on.push_back(j);
      if (on.size() < 5) continue;
      RatMatrix v(5, 6);
      for (int r = 0; r < 5; ++r) {
        auto row = quadric_row(RatVector(pts_[on[r]]));
        for (int c = 0; c < 6; ++c) v(r, c) = row[c];
      }
      auto ker = kernel_basis(v);
      if (ker.size() != 1) return std::nullopt;
      Constraint c;
      c.conic = true;
      c.quad = quadric_matrix(ker[0]);
      c.through = on;
      out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(), [](const Constraint& a, const Constraint& b) { return !a.conic && b.conic; });
    return out;
  }

  Param parametrize(const Constraint& c) {
    Param x;
    if (!c.conic) {
      const Vec3& a = pts_[c.through[0]];
      const Vec3& b = pts_[c.through[1]];
      for (int i = 0; i < 3; ++i) x[i] = BinaryForm::linear(a(i), b(i));
      return x;
    }
    // lines through a point p0 of the conic meet it again at Q(D) p0 - 2 B(p0, D) D
    const Vec3& p0 = pts_[c.through[0]];
    Vec3 a, b;
    do {
      a = random_point();
      b = random_point();
      Eigen::Matrix<Rational, 3, 3> m;
      m << p0, a, b;
      if (!is_zero(det3<Rational>(m))) break;
    } while (true);
    Param d;
    for (int i = 0; i < 3; ++i) d[i] = BinaryForm::linear(a(i), b(i));
    BinaryForm qd, bd;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (is_zero(c.quad(i, j))) continue;
        qd = qd + (d[i] * d[j]) * c.quad(i, j);
        bd = bd + d[j] * (c.quad(i, j) * p0(i));
      }
    for (int i = 0; i < 3; ++i) x[i] = qd * p0(i) - (bd * d[i]) * Rational(2);
    return x;
  }

  std::optional<Vec3> place(int k) {
    auto cs = constraints(k);
    if (!cs) return std::nullopt;
    if (cs->empty()) return random_point();
    Param x = parametrize((*cs)[0]);
    std::vector<Vec3> cands;
    bool determined = false;
    std::size_t used = 1;
    for (; used < cs->size(); ++used) {
      BinaryForm g = restrict_to((*cs)[used], x);
      if (g.is_zero()) continue;
      for (const auto& r : rational_roots(g)) {
        Vec3 v = eval_param(x, Rational(r.a), Rational(r.b));
        if (v.isZero()) continue;
        bool old = false;
        for (int j = 0; j < kPoints && !old; ++j) old = ((placed_ >> j) & 1) && same_point(v, pts_[j]);
        if (!old) cands.push_back(v);
      }
      determined = true;
      break;
    }
    if (!determined) {
      Rational s = rand_int(), t = rand_int();
      Vec3 v = eval_param(x, s, t);
      if (v.isZero()) return std::nullopt;
      cands.push_back(v);
    }
    std::erase_if(cands, [&](const Vec3& v) {
      return std::any_of(cs->begin(), cs->end(), [&](const Constraint& c) { return !is_zero(eval_constraint(c, v)); });
    });
    if (cands.empty()) return std::nullopt;
    return cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng_)];
  }

  std::vector<PointMask> lines_, conics_;
  std::mt19937_64& rng_;
  int box_;
  std::vector<Vec3> pts_;
  PointMask placed_ = 0;
};

std::vector<int> choose_order(const Builder& b, int strategy, std::mt19937_64& rng) {
  std::vector<int> order(kPoints);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  if (strategy == 0) {
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return b.degree(x) > b.degree(y); });
  } else if (strategy == 2) {
    // place fully determined points as soon as they are determined
    std::vector<int> out;
    PointMask placed = 0;
    while (out.size() < kPoints) {
      int best = -1, score = -1;
      for (int k : order) {
        if ((placed >> k) & 1) continue;
        int a = b.active(k, placed);
        int s = a == 2 ? 3 : a == 0 ? 1 : a == 1 ? 2 : 0;
        if (s > score) best = k, score = s;
      }
      out.push_back(best);
      placed |= static_cast<PointMask>(1u << best);
    }
    order = out;
  }
  return order;
}

}  // namespace

namespace {

std::vector<PointMask> incidence_rows(const Pair& q) {
  std::vector<PointMask> rows = q.triples();
  for (auto s : q.sextuples()) rows.push_back(s);
  return rows;
}

std::vector<RatVector> integer_kernel(const std::vector<PointMask>& rows) {
  RatMatrix a = RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), kPoints);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int i = 0; i < kPoints; ++i)
      if ((rows[r] >> i) & 1) a(static_cast<Eigen::Index>(r), i) = 1;
  return kernel_basis(a);
}

// kernel of the incidence matrix over F_2, as point masks
std::vector<PointMask> parity_kernel(const std::vector<PointMask>& rows) {
  std::vector<PointMask> red;
  std::vector<int> piv;
  for (PointMask r : rows) {
    for (std::size_t k = 0; k < red.size(); ++k)
      if ((r >> piv[k]) & 1) r ^= red[k];
    if (!r) continue;
    int p = std::countr_zero(static_cast<unsigned>(r));
    for (auto& x : red)
      if ((x >> p) & 1) x ^= r;
    red.push_back(r);
    piv.push_back(p);
  }
  std::vector<PointMask> out;
  for (int f = 0; f < kPoints; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    PointMask v = static_cast<PointMask>(1u << f);
    for (std::size_t k = 0; k < red.size(); ++k)
      if ((red[k] >> f) & 1) v |= static_cast<PointMask>(1u << piv[k]);
    out.push_back(v);
  }
  return out;
}

std::optional<Configuration> accept(const Configuration& c, const Pair& q) {
  try {
    if (verify_representative(c, q).ok) return c;
  } catch (const DegenerateInput&) {
  }
  return std::nullopt;
}

// points (t, t^3, 1) of the cuspidal cubic: three are collinear iff their parameters
// sum to zero, six lie on a conic iff theirs do
std::optional<Configuration> on_cuspidal_cubic(const Pair& q, std::mt19937_64& rng, int tries, int box) {
  auto basis = integer_kernel(incidence_rows(q));
  if (basis.empty()) return std::nullopt;
  std::uniform_int_distribution<int> coef(-box, box);
  for (int k = 0; k < tries; ++k) {
    RatVector t = RatVector::Zero(kPoints);
    for (const auto& b : basis) t += Rational(coef(rng)) * b;
    Configuration c;
    c.points.resize(3, kPoints);
    for (int i = 0; i < kPoints; ++i) c.points.col(i) << t(i), t(i) * t(i) * t(i), Rational(1);
    if (auto ok = accept(c, q)) return ok;
  }
  return std::nullopt;
}

// points (t, t^2, 1 + t^3) of the nodal cubic x^3 + y^3 = xyz: with s = -t, three are
// collinear iff the s multiply to 1, six on a conic likewise; exponents of a few
// primes and the signs give independent linear systems over Z and F_2
std::optional<Configuration> on_nodal_cubic(const Pair& q, std::mt19937_64& rng, int tries) {
  const auto rows = incidence_rows(q);
  auto basis = integer_kernel(rows);
  auto signs = parity_kernel(rows);
  std::uniform_int_distribution<int> coef(-2, 2);
  const int primes[] = {2, 3, 5};
  for (int k = 0; k < tries; ++k) {
    std::array<Rational, kPoints> s;
    s.fill(Rational(1));
    for (int pr : primes) {
      RatVector e = RatVector::Zero(kPoints);
      for (const auto& b : basis) e += Rational(coef(rng)) * b;
      for (int i = 0; i < kPoints; ++i) {
        Rational x = e(i);
        if (denominator(x) != 1) goto next;
        Integer n = numerator(x);
        for (Integer j = 0; j < abs(n); ++j) s[i] = n > 0 ? s[i] * pr : s[i] / pr;
      }
    }
    for (auto v : signs)
      if (rng() & 1)
        for (int i = 0; i < kPoints; ++i)
          if ((v >> i) & 1) s[i] = -s[i];
    {
      Configuration c;
      c.points.resize(3, kPoints);
      for (int i = 0; i < kPoints; ++i) {
        Rational t = -s[i];
        c.points.col(i) << t, t * t, 1 + t * t * t;
      }
      if (auto ok = accept(c, q)) return ok;
    }
  next:;
  }
  return std::nullopt;
}

}  // namespace

namespace {

Configuration search_impl(const Pair& q, const SearchOptions& opt, bool via_modifications);

// realize Q - {k} inside the 9-point base locus, then put the Cayley-Bacharach point back
std::optional<Configuration> via_modification(const Pair& q, const SearchOptions& opt) {
  if (!is_bezoutian(q) || !is_exhaustive(q) || contained_in_orbit(q, refs::q(10))) return std::nullopt;
  SearchOptions inner = opt;
  inner.budget = std::min(opt.budget, 200);
  const Pair self = canonical_form(q);
  for (int k = 0; k < kPoints; ++k) {
    const Pair m = modification(q, k);
    if (closure(m) != m || !weak_criteria(m).all() || !is_bezoutian(m) || canonical_form(m) == self) continue;
    try {
      const Configuration r = search_impl(m, inner, false);
      const BaseLocus bl = cayley_bacharach(r);
      if (!bl.reduced()) continue;
      Configuration c;
      c.points.resize(3, kPoints);
      for (int j = 0, src = 0; j < kPoints; ++j) c.points.col(j) = j == k ? bl.points[8] : r.points.col(src++);
      if (auto ok = accept(c, q)) return ok;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

Configuration search_impl(const Pair& q, const SearchOptions& opt, bool via_modifications) {
  std::mt19937_64 rng(opt.seed);
  if (auto c = on_cuspidal_cubic(q, rng, 64, opt.box)) return *c;
  if (auto c = on_nodal_cubic(q, rng, 256)) return *c;
  if (via_modifications)
    if (auto c = via_modification(q, opt)) return *c;
  for (int a = 0; a < opt.budget; ++a) {
    Builder b(q, rng, opt.box * (1 + a / 500));
    auto order = choose_order(b, a % 3, rng);
    auto p = b.attempt(order);
    if (!p) continue;
    if (auto ok = accept(*p, q)) return *ok;
  }
  throw SearchFailure(opt.budget);
}

}  // namespace

Configuration search_representative(const Pair& q, const SearchOptions& opt) {
  if (closure(q) != q || !weak_criteria(q).all()) throw std::invalid_argument("not a candidate quatroid: " + pair_str(q));
  return search_impl(q, opt, true);
}

std::map<int, Configuration> parse_representatives(std::istream& in) {
  std::map<int, Configuration> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(no, "expected 'index : matrix'");
    try {
      std::string head = line.substr(0, colon);
      head.erase(std::remove_if(head.begin(), head.end(), [](char c) { return c == 'Q' || c == ' ' || c == '-'; }), head.end());
      out[std::stoi(head)] = parse_configuration(line.substr(colon + 1));
    } catch (const std::exception& e) {
      throw ParseError(no, e.what());
    }
  }
  return out;
}

std::map<int, Configuration> load_representatives(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  return parse_representatives(f);
}

std::string representative_line(int index, const Configuration& p) {
  return std::to_string(index) + " : " + configuration_str(p);
}

}  // namespace quat
