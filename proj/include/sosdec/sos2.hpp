// Copyright 2026 sosdec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <utility>

#include "sosdec/gaussian.hpp"
#include "sosdec/matrix.hpp"
#include "sosdec/polynomial.hpp"

namespace sosdec {

enum class Sos2Component { plus, minus };

inline const char* to_string(Sos2Component c) {
  return c == Sos2Component::plus ? "plus" : "minus";
}

// The lambda-parametrized orthogonal 2x2 family acting on two-square
// decompositions: with a = (lambda + lambda^-1)/2 and
// b = i (lambda - lambda^-1)/2, the plus component is [[a, b], [-b, a]]
// (determinant 1) and the minus component is its composition with
// diag(1, -1) (determinant -1).  Both satisfy M M^t = I exactly.
inline Matrix<GaussianRationals> transform_matrix(const GaussianRational& lambda,
                                                  Sos2Component comp) {
  GaussianRationals field;
  if (field.is_zero(lambda)) throw std::domain_error("transform_matrix: lambda must be nonzero");
  const GaussianRational linv = field.inv(lambda);
  const GaussianRational half = field.from_rational(mpq_class(1, 2));
  const GaussianRational a = field.mul(field.add(lambda, linv), half);
  const GaussianRational b =
      field.mul(field.imaginary_unit(), field.mul(field.sub(lambda, linv), half));
  Matrix<GaussianRationals> m(field, 2, 2);
  if (comp == Sos2Component::plus) {
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = field.neg(b);
    m.at(1, 1) = a;
  } else {
    m.at(0, 0) = a;
    m.at(0, 1) = field.neg(b);
    m.at(1, 0) = field.neg(b);
    m.at(1, 1) = field.neg(a);
  }
  return m;
}

using GaussianPoly = Polynomial<GaussianRationals>;

// Applies the transform to the pair: the result satisfies
// g'^2 + h'^2 = g^2 + h^2 exactly.
inline std::pair<GaussianPoly, GaussianPoly> orbit_element(const GaussianPoly& g,
                                                           const GaussianPoly& h,
                                                           const GaussianRational& lambda,
                                                           Sos2Component comp) {
  if (g.nvars() != h.nvars())
    throw std::invalid_argument("orbit_element: variable count mismatch");
  if (!g.is_zero() && !h.is_zero() && g.degree() != h.degree())
    throw std::invalid_argument("orbit_element: degree mismatch");
  Matrix<GaussianRationals> m = transform_matrix(lambda, comp);
  GaussianPoly gp = g.scaled(m.at(0, 0)) + h.scaled(m.at(0, 1));
  GaussianPoly hp = g.scaled(m.at(1, 0)) + h.scaled(m.at(1, 1));
  return {std::move(gp), std::move(hp)};
}

// The exact factorization g^2 + h^2 = (g + ih)(g - ih).
inline std::pair<GaussianPoly, GaussianPoly> factor_pair(const GaussianPoly& g,
                                                         const GaussianPoly& h) {
  GaussianRationals field;
  GaussianPoly p = g + h.scaled(field.imaginary_unit());
  GaussianPoly q = g - h.scaled(field.imaginary_unit());
  if (!(p * q == g * g + h * h)) throw std::logic_error("factor_pair: factorization check failed");
  return {std::move(p), std::move(q)};
}

struct ClassifyResult {
  enum class Status { ok, not_in_orbit, degenerate };
  Status status = Status::not_in_orbit;
  Sos2Component component = Sos2Component::plus;
  GaussianRational lambda{};
};

namespace detail {

// lambda with num == lambda * den, when one exists.
inline bool scalar_ratio(const GaussianPoly& num, const GaussianPoly& den,
                         GaussianRational& out) {
  GaussianRationals field;
  if (den.is_zero() || num.is_zero()) return false;
  if (!(num.leading_term().mono == den.leading_term().mono)) return false;
  GaussianRational cand = field.div(num.leading_term().coeff, den.leading_term().coeff);
  if (!(num == den.scaled(cand))) return false;
  out = cand;
  return true;
}

}  // namespace detail

// Recovers (component, lambda) with (g', h') = transform(lambda, component)
// applied to (g, h), by exact coefficient ratios of the factors g +- ih: the
// plus component scales g + ih by lambda and g - ih by lambda^-1; the minus
// component swaps the two factors first.
inline ClassifyResult classify(const GaussianPoly& g, const GaussianPoly& h,
                               const GaussianPoly& gp, const GaussianPoly& hp) {
  GaussianRationals field;
  ClassifyResult res;
  if (!(g * g + h * h == gp * gp + hp * hp)) {
    res.status = ClassifyResult::Status::not_in_orbit;
    return res;
  }
  const GaussianRational iu = field.imaginary_unit();
  GaussianPoly p = g + h.scaled(iu);
  GaussianPoly q = g - h.scaled(iu);
  GaussianPoly pp = gp + hp.scaled(iu);
  GaussianPoly qp = gp - hp.scaled(iu);
  if (p.is_zero() || q.is_zero() || pp.is_zero() || qp.is_zero()) {
    res.status = ClassifyResult::Status::degenerate;
    return res;
  }
  GaussianRational lambda;
  if (detail::scalar_ratio(pp, p, lambda)) {
    if (qp == q.scaled(field.inv(lambda))) {
      res.status = ClassifyResult::Status::ok;
      res.component = Sos2Component::plus;
      res.lambda = lambda;
      return res;
    }
  }
  if (detail::scalar_ratio(pp, q, lambda)) {
    if (qp == p.scaled(field.inv(lambda))) {
      res.status = ClassifyResult::Status::ok;
      res.component = Sos2Component::minus;
      res.lambda = lambda;
      return res;
    }
  }
  res.status = ClassifyResult::Status::not_in_orbit;
  return res;
}

}  // namespace sosdec
