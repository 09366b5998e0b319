// Complex ODE integration for PII, P34, matrix PII and the scalar
// third-order derivative PII, with residuals recomputed by finite differences.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxlab::numeric {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

enum class Rhs { PII, P34, MatrixPII, DPII3 };

/// Sign convention for PII: Standard u'' = 2u^3 - zu + alpha,
/// Symmetric u'' = 2u^3 + zu - alpha (the form the symmetric system yields).
enum class PiiForm { Standard, Symmetric };

inline const char* rhs_name(Rhs r) {
  switch (r) {
    case Rhs::PII: return "pii";
    case Rhs::P34: return "p34";
    case Rhs::MatrixPII: return "matrix-pii";
    case Rhs::DPII3: return "dpii3";
  }
  return "?";
}

inline Rhs parse_rhs(const std::string& s) {
  if (s == "pii") return Rhs::PII;
  if (s == "p34") return Rhs::P34;
  if (s == "matrix-pii") return Rhs::MatrixPII;
  if (s == "dpii3") return Rhs::DPII3;
  throw std::invalid_argument("unknown problem '" + s + "'");
}

struct ODEProblem {
  Rhs rhs = Rhs::PII;
  PiiForm form = PiiForm::Standard;
  cplx alpha = 0.0;
  cplx p34_k = 0.25;  // y'' = y'^2/(2y) + 2y^2 - zy - k/(2y)
  int n = 1;
  double z0 = 1.0, z1 = 5.0;
  std::vector<CMat> init;  // u, u' (and u'' for dpii3)
  double rtol = 1e-10, atol = 1e-12;
  int samples = 401;
  std::vector<double> poles;  // declared singular points, must lie outside the span
  double blowup = 1e8;
};

struct Trajectory {
  std::vector<double> z;
  std::vector<std::vector<CMat>> state;  // per sample: u, u' (, u'')
  std::vector<double> residual;          // finite-difference residual, NaN near the ends
  std::vector<double> local_error;       // error estimate of the step ending at the sample
  bool ok = true;
  std::string error;
  double last_good_z = 0.0;
  long steps = 0;

  double max_residual() const {
    double m = 0;
    for (double r : residual)
      if (!std::isnan(r)) m = std::max(m, r);
    return m;
  }
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double z) : std::runtime_error(what), z_(z) {}
  double last_good_z() const { return z_; }

 private:
  double z_;
};

inline int order_of(Rhs r) { return r == Rhs::DPII3 ? 3 : 2; }

namespace detail {

inline CVec pack(const std::vector<CMat>& ms) {
  Eigen::Index n = ms[0].size();
  CVec y(n * static_cast<Eigen::Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k)
    y.segment(static_cast<Eigen::Index>(k) * n, n) = Eigen::Map<const CVec>(ms[k].data(), n);
  return y;
}

inline std::vector<CMat> unpack(const CVec& y, int n, int parts) {
  std::vector<CMat> out;
  Eigen::Index len = static_cast<Eigen::Index>(n) * n;
  for (int k = 0; k < parts; ++k)
    out.push_back(Eigen::Map<const CMat>(y.data() + k * len, n, n));
  return out;
}

/// Right-hand side of the governing second (third) derivative.
inline CMat highest_derivative(const ODEProblem& p, double z, const std::vector<CMat>& s) {
  const CMat& u = s[0];
  const CMat& du = s[1];
  CMat I = CMat::Identity(p.n, p.n);
  switch (p.rhs) {
    case Rhs::PII:
    case Rhs::MatrixPII: {
      CMat cube = u * u * u;
      if (p.form == PiiForm::Standard) return 2.0 * cube - z * u + p.alpha * I;
      return 2.0 * cube + z * u - p.alpha * I;
    }
    case Rhs::P34: {
      cplx y = u(0, 0), dy = du(0, 0);
      if (std::abs(y) < 1e-8) throw IntegrationError("P34 variable near zero", z);
      CMat r(1, 1);
      r(0, 0) = dy * dy / (2.0 * y) + 2.0 * y * y - z * y - p.p34_k / (2.0 * y);
      return r;
    }
    case Rhs::DPII3: {
      cplx y = u(0, 0), dy = du(0, 0);
      CMat r(1, 1);
      r(0, 0) = 6.0 * y * y * dy - y / 3.0 - z * dy / 3.0;
      return r;
    }
  }
  return CMat();
}

inline CVec derivative(const ODEProblem& p, double z, const CVec& y) {
  int parts = order_of(p.rhs);
  auto s = unpack(y, p.n, parts);
  std::vector<CMat> d(s.begin() + 1, s.end());
  d.push_back(highest_derivative(p, z, s));
  return pack(d);
}

}  // namespace detail

/// Governing-equation residual from finite differences of the sampled u.
inline std::vector<double> fd_residual(const ODEProblem& p, const std::vector<double>& z,
                                       const std::vector<std::vector<CMat>>& state) {
  std::size_t m = z.size();
  std::vector<double> res(m, std::nan(""));
  if (m < 7) return res;
  double h = z[1] - z[0];
  auto u = [&](std::size_t k) -> const CMat& { return state[k][0]; };
  for (std::size_t k = 3; k + 3 < m; ++k) {
    CMat d1 = (u(k - 2) - 8.0 * u(k - 1) + 8.0 * u(k + 1) - u(k + 2)) / (12.0 * h);
    CMat d2 = (-u(k - 2) + 16.0 * u(k - 1) - 30.0 * u(k) + 16.0 * u(k + 1) - u(k + 2)) / (12.0 * h * h);
    std::vector<CMat> s{u(k), d1, d2};
    CMat r;
    if (p.rhs == Rhs::DPII3) {
      CMat d3 = (u(k - 3) - 8.0 * u(k - 2) + 13.0 * u(k - 1) - 13.0 * u(k + 1) + 8.0 * u(k + 2) - u(k + 3)) /
                (8.0 * h * h * h);
      r = d3 - detail::highest_derivative(p, z[k], s);
    } else {
      r = d2 - detail::highest_derivative(p, z[k], s);
    }
    res[k] = r.cwiseAbs().maxCoeff();
  }
  return res;
}

/// Adaptive Dormand-Prince 5(4). Steps are clipped to land on the report grid.
inline Trajectory integrate(const ODEProblem& p) {
  int parts = order_of(p.rhs);
  if (static_cast<int>(p.init.size()) != parts)
    throw std::invalid_argument(std::string(rhs_name(p.rhs)) + " needs " + std::to_string(parts) + " initial values");
  for (const auto& m : p.init)
    if (m.rows() != p.n || m.cols() != p.n) throw std::invalid_argument("initial values must be n x n");
  if ((p.rhs == Rhs::PII || p.rhs == Rhs::P34 || p.rhs == Rhs::DPII3) && p.n != 1)
    throw std::invalid_argument("scalar problem with n != 1");
  if (p.samples < 2) throw std::invalid_argument("need at least two samples");
  double lo = std::min(p.z0, p.z1), hi = std::max(p.z0, p.z1);
  for (double pole : p.poles)
    if (pole >= lo && pole <= hi) throw std::invalid_argument("declared pole inside the span");

  static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1, 1};
  static const double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double e[7] = {71.0 / 57600, 0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

  Trajectory t;
  double span = p.z1 - p.z0;
  double dir = span >= 0 ? 1.0 : -1.0;
  CVec y = detail::pack(p.init);
  t.z.push_back(p.z0);
  t.state.push_back(p.init);
  t.local_error.push_back(0.0);
  t.last_good_z = p.z0;

  double z = p.z0;
  double h = std::abs(span) / (p.samples - 1) / 8;
  CVec k[7];
  try {
    k[0] = detail::derivative(p, z, y);
    for (int g = 1; g < p.samples; ++g) {
      double target = p.z0 + span * g / (p.samples - 1);
      double last_err = 0;
      while (dir * (target - z) > 1e-14 * std::max(1.0, std::abs(z))) {
        double step = std::min(h, std::abs(target - z));
        if (step < 1e-13 * std::max(1.0, std::abs(z))) throw IntegrationError("step size collapsed", z);
        double hs = dir * step;
        for (int s = 1; s < 7; ++s) {
          CVec ys = y;
          for (int j = 0; j < s; ++j)
            if (a[s][j] != 0) ys += hs * a[s][j] * k[j];
          k[s] = detail::derivative(p, z + c[s] * hs, ys);
        }
        CVec ynew = y;
        for (int j = 0; j < 6; ++j) ynew += hs * a[6][j] * k[j];
        double err = 0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
          double sc = p.atol + p.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
          cplx ei = 0;
          for (int j = 0; j < 7; ++j) ei += hs * e[j] * k[j][i];
          err += std::norm(ei / sc);
        }
        err = std::sqrt(err / static_cast<double>(y.size()));
        ++t.steps;
        if (err <= 1.0 || step <= 1e-13 * std::max(1.0, std::abs(z))) {
          z = (std::abs(target - (z + hs)) < 1e-12 * std::max(1.0, std::abs(target))) ? target : z + hs;
          y = ynew;
          k[0] = k[6];
          last_err = err;
          t.last_good_z = z;
          if (y.cwiseAbs().maxCoeff() > p.blowup) throw IntegrationError("solution exceeds blow-up threshold", z);
          // A step clipped to the grid keeps the current h.
          if (step >= h) h = step * (err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0));
        } else {
          h = step * std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
      }
      t.z.push_back(target);
      t.state.push_back(detail::unpack(y, p.n, parts));
      t.local_error.push_back(last_err);
    }
  } catch (const IntegrationError& ex) {
    t.ok = false;
    t.error = ex.what();
    t.last_good_z = ex.last_good_z();
  }
  if (t.ok) t.residual = fd_residual(p, t.z, t.state);
  else t.residual.assign(t.z.size(), std::nan(""));
  return t;
}

inline CMat scalar(cplx v) {
  CMat m(1, 1);
  m(0, 0) = v;
  return m;
}

/// Scalar PII problem on [z0, z1].
inline ODEProblem pii_problem(cplx alpha, double z0, double z1, cplx u0, cplx du0, PiiForm form = PiiForm::Standard) {
  ODEProblem p;
  p.rhs = Rhs::PII;
  p.form = form;
  p.alpha = alpha;
  p.z0 = z0;
  p.z1 = z1;
  p.init = {scalar(u0), scalar(du0)};
  return p;
}

/// CSV: z, then Re/Im of every entry of u, then the residual.
inline void write_csv(std::ostream& os, const Trajectory& t) {
  os.precision(17);
  os << "z";
  Eigen::Index n = t.state.empty() ? 0 : t.state[0][0].rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) os << ",re_u" << i + 1 << j + 1 << ",im_u" << i + 1 << j + 1;
  os << ",residual\n";
  for (std::size_t k = 0; k < t.z.size(); ++k) {
    os << t.z[k];
    const CMat& u = t.state[k][0];
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) os << "," << u(i, j).real() << "," << u(i, j).imag();
    os << ",";
    if (std::isnan(t.residual[k])) os << "nan";
    else os << t.residual[k];
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// P34 solution map

struct PairingResidual {
  std::string variable;  // "p" or "q"
  std::string pairing;   // "(alpha-1/2)^2" or "(alpha+1/2)^2"
  double max_residual = 0;
};

struct P34MapReport {
  double pii_residual = 0;
  std::vector<PairingResidual> residuals;  // p-, p+, q-, q+
  std::string p_pairing, q_pairing;        // winning pairing, or "none"/"both"
  bool ok = false;
  std::string error;
};

/// y'' - y'^2/(2y) - 2y^2 + zy + k/(2y), y' and y'' by finite differences.
inline double p34_residual(const std::vector<double>& z, const std::vector<cplx>& y, cplx k) {
  double h = z[1] - z[0], worst = 0;
  for (std::size_t i = 2; i + 2 < y.size(); ++i) {
    cplx d1 = (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
    cplx d2 = (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] - y[i + 2]) / (12.0 * h * h);
    cplx r = d2 - d1 * d1 / (2.0 * y[i]) - 2.0 * y[i] * y[i] + z[i] * y[i] + k / (2.0 * y[i]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

/// Integrates u'' = 2u^3 + zu - alpha and tests p = u^2 + u' + z/2,
/// q = u^2 - u' + z/2 against both (alpha -+ 1/2)^2 variants of P34.
inline P34MapReport p34_map_check(cplx alpha, cplx u0, cplx du0, double z0, double z1, int samples = 1001,
                                  double win_tol = 1e-6, double lose_tol = 1e-2) {
  P34MapReport rep;
  ODEProblem prob = pii_problem(alpha, z0, z1, u0, du0, PiiForm::Symmetric);
  prob.samples = samples;
  prob.rtol = 1e-12;
  prob.atol = 1e-14;
  Trajectory t = integrate(prob);
  if (!t.ok) {
    rep.error = "PII integration failed: " + t.error + " at z = " + std::to_string(t.last_good_z);
    return rep;
  }
  rep.pii_residual = t.max_residual();
  std::vector<cplx> p, q;
  for (std::size_t k = 0; k < t.z.size(); ++k) {
    cplx u = t.state[k][0](0, 0), du = t.state[k][1](0, 0);
    p.push_back(u * u + du + t.z[k] / 2);
    q.push_back(u * u - du + t.z[k] / 2);
    if (std::abs(p.back()) < 1e-6 || std::abs(q.back()) < 1e-6) {
      rep.error = "p or q near zero at z = " + std::to_string(t.z[k]);
      return rep;
    }
  }
  cplx km = (alpha - 0.5) * (alpha - 0.5), kp = (alpha + 0.5) * (alpha + 0.5);
  auto decide = [&](const char* var, const std::vector<cplx>& y, std::string& out) {
    double rm = p34_residual(t.z, y, km), rp = p34_residual(t.z, y, kp);
    rep.residuals.push_back({var, "(alpha-1/2)^2", rm});
    rep.residuals.push_back({var, "(alpha+1/2)^2", rp});
    bool wm = rm < win_tol, wp = rp < win_tol;
    if (wm && wp) out = "both";
    else if (wm) out = rp > lose_tol ? "(alpha-1/2)^2" : "ambiguous";
    else if (wp) out = rm > lose_tol ? "(alpha+1/2)^2" : "ambiguous";
    else out = "none";
  };
  decide("p", p, rep.p_pairing);
  decide("q", q, rep.q_pairing);
  auto single = [](const std::string& s) { return s == "(alpha-1/2)^2" || s == "(alpha+1/2)^2"; };
  rep.ok = rep.pii_residual < 1e-8 && single(rep.p_pairing) && single(rep.q_pairing);
  if (!rep.ok && rep.error.empty()) {
    if (rep.p_pairing == "none" || rep.q_pairing == "none") rep.error = "no pairing vanishes: convention error upstream";
    else if (rep.pii_residual >= 1e-8) rep.error = "PII residual too large";
    else rep.error = "pairing not unique";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// First integral of the scalar derivative PII

struct DriftReport {
  cplx initial_value = 0;
  double drift = 0;
  double residual = 0;
  bool ok = false;
  std::string error;
};

/// u''' = 6u^2u' - u/3 - zu'/3 and the drift of u'' - 2u^3 + zu/3.
inline DriftReport dpii_first_integral_check(cplx u0, cplx du0, cplx ddu0, double z0, double z1, int samples = 401) {
  DriftReport rep;
  ODEProblem prob;
  prob.rhs = Rhs::DPII3;
  prob.z0 = z0;
  prob.z1 = z1;
  prob.samples = samples;
  prob.init = {scalar(u0), scalar(du0), scalar(ddu0)};
  Trajectory t = integrate(prob);
  if (!t.ok) {
    rep.error = t.error + " at z = " + std::to_string(t.last_good_z);
    return rep;
  }
  auto integral = [&](std::size_t k) {
    cplx u = t.state[k][0](0, 0), ddu = t.state[k][2](0, 0);
    return ddu - 2.0 * u * u * u + t.z[k] * u / 3.0;
  };
  rep.initial_value = integral(0);
  for (std::size_t k = 0; k < t.z.size(); ++k) rep.drift = std::max(rep.drift, std::abs(integral(k) - rep.initial_value));
  rep.residual = t.max_residual();
  rep.ok = rep.drift < 1e-7;
  return rep;
}

}  // namespace laxlab::numeric
