#include "quatroid/pencil/pencil.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace quat {

namespace {

// rows: the partial derivatives as quadrics (x0^2 x0x1 x0x2 x1^2 x1x2 x2^2)
RatMatrix partials_matrix(const Cubic& c) {
  RatMatrix m = RatMatrix::Zero(3, 6);
  const auto& mono = cubic_monomials();
  auto qidx = [](const std::array<int, 3>& e) {
    static const int table[3][3] = {{5, 4, 3}, {2, 1, -1}, {0, -1, -1}};  // by (e0, e1)
    return table[e[0]][e[1]];
  };
  for (int k = 0; k < 10; ++k)
    for (int i = 0; i < 3; ++i) {
      if (mono[k][i] == 0) continue;
      auto e = mono[k];
      e[i] -= 1;
      m(i, qidx(e)) += c.c[k] * mono[k][i];
    }
  return m;
}

std::vector<std::array<int, 3>> monomials_of_degree(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

// length of the singular scheme (total Tjurina number), from the Hilbert
// function of the Jacobian ideal in a degree where it has stabilized
int tjurina_number(const Cubic& c) {
  const int deg = 6;
  auto top = monomials_of_degree(deg);
  auto mult = monomials_of_degree(deg - 2);
  std::map<std::array<int, 3>, int> col;
  for (std::size_t k = 0; k < top.size(); ++k) col[top[k]] = static_cast<int>(k);
  auto qmono = monomials_of_degree(2);
  RatMatrix jac = partials_matrix(c);
  RatMatrix m = RatMatrix::Zero(static_cast<Eigen::Index>(3 * mult.size()), static_cast<Eigen::Index>(top.size()));
  int row = 0;
  for (int i = 0; i < 3; ++i)
    for (const auto& u : mult) {
      for (int q = 0; q < 6; ++q) {
        if (is_zero(jac(i, q))) continue;
        std::array<int, 3> e{u[0] + qmono[q][0], u[1] + qmono[q][1], u[2] + qmono[q][2]};
        m(row, col.at(e)) += jac(i, q);
      }
      ++row;
    }
  return static_cast<int>(top.size()) - static_cast<int>(rank(m));
}

RatVector line_through(const RatVector& a, const RatVector& b) {
  Eigen::Matrix<Rational, 3, 1> u = a, v = b;
  return normalized(RatVector(cross<Rational>(u, v)));
}

MultiPoly linear_poly(const RatVector& l) {
  MultiPoly f({"x0", "x1", "x2"});
  for (int i = 0; i < 3; ++i)
    if (!is_zero(l(i))) {
      MultiPoly::Exponent e(3, 0);
      e[i] = 1;
      f.add_term(e, l(i));
    }
  return f;
}

}  // namespace

ReducibleType classify_singular(const Cubic& c) {
  if (c.is_zero() || !is_zero(discriminant(c))) throw NotSingular();
  RatMatrix jac = partials_matrix(c);
  const auto r = rank(jac);
  if (r == 1) return ReducibleType::TripleLine;
  if (r == 2) {
    // a cone over its vertex v: restrict to a line missing v
    RatMatrix jt = jac.transpose();
    RatVector v = kernel_basis(jt).at(0);
    RatMatrix basis = RatMatrix::Zero(3, 3);
    basis.col(0) = v;
    int filled = 1;
    for (int i = 0; i < 3 && filled < 3; ++i) {
      basis.col(filled) = RatVector::Unit(3, i);
      if (rank(RatMatrix(basis.leftCols(filled + 1))) == filled + 1) ++filled;
    }
    RatVector u = basis.col(1), w = basis.col(2);
    BinaryForm f = interpolate_form(3, [&](const Rational& s, const Rational& t) { return c(RatVector(s * u + t * w)); });
    auto parts = squarefree_decomposition(f);
    return parts.size() == 1 && parts[0].second == 1 ? ReducibleType::Asterisk : ReducibleType::DoubleLinePlusLine;
  }
  const int tau = tjurina_number(c);
  const bool unstable = is_zero(aronhold_S(c));
  if (!unstable) {
    if (tau == 1) return ReducibleType::NodalCubic;
    if (tau == 2) return ReducibleType::ConicSecant;
    if (tau == 3) return ReducibleType::Triangle;
  } else {
    if (tau == 2) return ReducibleType::CuspidalCubic;
    if (tau == 3) return ReducibleType::ConicTangent;
  }
  throw std::logic_error("singular cubic with unexpected singular scheme of length " + std::to_string(tau));
}

std::string Factorization::str() const {
  std::string s;
  for (const auto& l : lines) s += "(" + l.str() + ")";
  if (rest) s += "(" + rest->str() + ")";
  return s;
}

Factorization factor_cubic(const Cubic& c, const Configuration& p) {
  for (int i = 0; i < p.size(); ++i)
    if (!is_zero(c(p.point(i)))) throw PrecondViolation("cubic does not vanish at point " + std::to_string(i + 1));
  std::vector<RatVector> candidates;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) {
      RatVector l = line_through(p.point(i), p.point(j));
      if (std::find(candidates.begin(), candidates.end(), l) == candidates.end()) candidates.push_back(l);
    }
  Factorization out;
  MultiPoly f = c.poly();
  for (const auto& l : candidates) {
    MultiPoly lp = linear_poly(l);
    while (f.degree() > 0) {
      auto q = f.divide_exact(lp);
      if (!q) break;
      out.lines.push_back(lp);
      f = *q;
    }
  }
  if (f.degree() > 0) {
    out.rest = f;
  } else if (!out.lines.empty()) {
    out.lines.back() = out.lines.back() * f.coeff({0, 0, 0});
  }
  return out;
}

int multiplicity_probe(const Cubic& c, int trials, std::uint64_t seed) {
  if (c.is_zero() || !is_zero(discriminant(c))) throw NotSingular();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  int best = 13;
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 32 * trials; ++attempt) {
    Cubic d;
    for (auto& x : d.c) x = coef(rng);
    BinaryForm f = pencil_disc({c, d});
    if (f.is_zero()) continue;
    best = std::min(best, f.order_at_infinity());
    ++done;
  }
  if (done == 0) throw std::runtime_error("multiplicity_probe: every random pencil lies in the discriminant");
  return best;
}

}  // namespace quat
