#include "oamspec/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oamspec/errors.hpp"

namespace oam {
namespace {

constexpr double kTruncationRatio = 1e-12;

std::vector<double> tabulate(const ModeSpec& spec, const RadialRule& rule) {
  std::vector<double> v(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) v[j] = radial_profile(spec, rule.nodes[j]);
  return v;
}

QuadratureSum norm_sum(const RadialRule& rule, const std::vector<double>& prof) {
  QuadratureSum s;
  double acc = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) acc += rule.weights[j] * (prof[j] * prof[j] * rule.nodes[j]);
  s.value = acc;
  s.magnitude = acc;
  return s;
}

ProfileTable::Entry make_entry(const ModeSpec& spec, ModeNormalization policy,
                               const QuadratureConfig& quad, const RadialRule& coarse,
                               const RadialRule& fine) {
  spec.validate();
  ProfileTable::Entry e;
  e.coarse = tabulate(spec, coarse);
  e.fine = tabulate(spec, fine);
  e.at_edge = radial_profile(spec, quad.r_max);
  e.phase = constant_phase(spec);
  if (spec.family == ModeFamily::POV && policy == ModeNormalization::UnitL2) {
    const QuadratureSum c = norm_sum(coarse, e.coarse);
    const QuadratureSum f = norm_sum(fine, e.fine);
    require_converged(c, f, quad.rel_tol, "mode norm");
    const double norm = std::sqrt(2.0 * std::numbers::pi * f.value.real());
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw DegenerateError("cannot normalize a mode with zero or non-finite L2 norm");
    }
    e.scale = 1.0 / norm;
  }
  for (double& x : e.coarse) x *= e.scale;
  for (double& x : e.fine) x *= e.scale;
  e.at_edge *= e.scale;
  return e;
}

QuadratureSum triple_sum(const RadialRule& rule, const std::vector<double>& pump,
                         const std::vector<double>& sig, const std::vector<double>& idl,
                         double* peak) {
  QuadratureSum s;
  double acc = 0.0;
  double mag = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    // sig * idl first so (l_s, l_i) and (l_i, l_s) round identically
    const double integrand = pump[j] * (sig[j] * idl[j]) * rule.nodes[j];
    acc += rule.weights[j] * integrand;
    mag += rule.weights[j] * std::abs(integrand);
    if (peak) *peak = std::max(*peak, std::abs(integrand));
  }
  s.value = acc;
  s.magnitude = mag;
  return s;
}

Coefficient assemble(const ProfileTable::Entry& p, const ProfileTable::Entry& s,
                     const ProfileTable::Entry& i, const RadialRule& coarse,
                     const RadialRule& fine, const QuadratureConfig& quad, int l_s, int l_i) {
  double peak = 0.0;
  const QuadratureSum c = triple_sum(coarse, p.coarse, s.coarse, i.coarse, nullptr);
  const QuadratureSum f = triple_sum(fine, p.fine, s.fine, i.fine, &peak);
  const double edge = std::abs(p.at_edge * (s.at_edge * i.at_edge)) * quad.r_max;
  if (edge > kTruncationRatio * peak) {
    throw ConvergenceError("overlap integrand at r_max = " + std::to_string(quad.r_max) +
                           " is not below 1e-12 of its peak; enlarge r_max");
  }
  require_converged(c, f, quad.rel_tol, "overlap integral");
  const std::complex<double> phase = p.phase * std::conj(s.phase * i.phase);
  return {l_s, l_i, phase * (2.0 * std::numbers::pi * f.value.real()),
          CoefficientMethod::RadialQuadrature};
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

std::string_view to_string(CoefficientMethod m) {
  switch (m) {
    case CoefficientMethod::ClosedForm: return "closed-form";
    case CoefficientMethod::RadialQuadrature: return "radial-quadrature";
    case CoefficientMethod::Full2D: return "full-2d";
  }
  return "?";
}

double closed_form_prefactor() { return std::sqrt(8.0 / std::numbers::pi) / 3.0; }

double closed_form_coefficient(int l_p, int l_s, int l_i) {
  if (l_s + l_i != l_p) return 0.0;
  const int ap = std::abs(l_p);
  const int as = std::abs(l_s);
  const int ai = std::abs(l_i);
  if ((ap + as + ai) % 2 != 0) {
    // |l_s| + |l_i| has the parity of l_s + l_i, so this cannot happen.
    throw std::logic_error("closed_form_coefficient: odd |l| sum for a conserving triple");
  }
  const int big_l = (ap + as + ai) / 2;
  const double log_c = big_l * std::log(2.0 / 3.0) + log_factorial(big_l) -
                       0.5 * (log_factorial(ap) + log_factorial(as) + log_factorial(ai));
  return closed_form_prefactor() * std::exp(log_c);
}

Coefficient coefficient(const Mode& pump, const Mode& signal, const Mode& idler,
                        const QuadratureConfig& quad, CoefficientMethod method) {
  quad.validate();
  const int l_s = signal.spec().l;
  const int l_i = idler.spec().l;
  if (pump.spec().l - l_s - l_i != 0) return {l_s, l_i, {0.0, 0.0}, method};

  switch (method) {
    case CoefficientMethod::ClosedForm: {
      for (const Mode* m : {&pump, &signal, &idler}) {
        const ModeSpec& s = m->spec();
        if (s.family != ModeFamily::LG || s.p != 0 || s.w0 != 1.0 || m->scale() != 1.0) {
          throw ConfigError("closed form applies only to LG modes with p = 0 and w0 = 1");
        }
      }
      return {l_s, l_i, closed_form_coefficient(pump.spec().l, l_s, l_i), method};
    }
    case CoefficientMethod::RadialQuadrature: {
      const RadialRule coarse = make_radial_rule(quad);
      const RadialRule fine = make_radial_rule(quad.refined());
      auto entry = [&](const Mode& m) {
        ProfileTable::Entry e = make_entry(m.spec(), ModeNormalization::Raw, quad, coarse, fine);
        for (double& x : e.coarse) x *= m.scale();
        for (double& x : e.fine) x *= m.scale();
        e.at_edge *= m.scale();
        e.scale = m.scale();
        return e;
      };
      return assemble(entry(pump), entry(signal), entry(idler), coarse, fine, quad, l_s, l_i);
    }
    case CoefficientMethod::Full2D: {
      const std::complex<double> v = integrate_polar_2d(
          [&](double r, double phi) {
            return pump(r, phi) * std::conj(signal(r, phi) * idler(r, phi)) * r;
          },
          quad);
      return {l_s, l_i, v, method};
    }
  }
  throw std::logic_error("unknown coefficient method");
}

Coefficient coefficient(const ModeSpec& pump, const ModeSpec& signal, const ModeSpec& idler,
                        const QuadratureConfig& quad, ModeNormalization pov_policy,
                        CoefficientMethod method) {
  if (method == CoefficientMethod::ClosedForm) {
    return coefficient(Mode(pump), Mode(signal), Mode(idler), quad, method);
  }
  if (pump.l - signal.l - idler.l != 0) {
    pump.validate();
    signal.validate();
    idler.validate();
    return {signal.l, idler.l, {0.0, 0.0}, method};
  }
  return coefficient(prepare_mode(pump, pov_policy, quad), prepare_mode(signal, pov_policy, quad),
                     prepare_mode(idler, pov_policy, quad), quad, method);
}

ProfileTable::ProfileTable(const ModeSpec& shape, ModeNormalization pov_policy,
                           const QuadratureConfig& quad)
    : shape_(shape),
      policy_(pov_policy),
      quad_(quad),
      coarse_((quad.validate(), make_radial_rule(quad))),
      fine_(make_radial_rule(quad.refined())) {
  shape_.validate();
}

const ProfileTable::Entry& ProfileTable::entry(int l) {
  auto it = entries_.find(l);
  if (it == entries_.end()) {
    it = entries_.emplace(l, make_entry(shape_.with_l(l), policy_, quad_, coarse_, fine_)).first;
  }
  return it->second;
}

Coefficient coefficient(ProfileTable& pump, int l_p, ProfileTable& signal, int l_s,
                        ProfileTable& idler, int l_i) {
  if (l_p - l_s - l_i != 0) return {l_s, l_i, {0.0, 0.0}, CoefficientMethod::RadialQuadrature};
  if (!(pump.quadrature() == signal.quadrature()) || !(pump.quadrature() == idler.quadrature())) {
    throw ConfigError("profile tables must share one quadrature configuration");
  }
  const ProfileTable::Entry& p = pump.entry(l_p);
  const ProfileTable::Entry& s = signal.entry(l_s);
  const ProfileTable::Entry& i = idler.entry(l_i);
  return assemble(p, s, i, pump.coarse_rule(), pump.fine_rule(), pump.quadrature(), l_s, l_i);
}

ProfileTable& ProfileCache::table(const ModeSpec& shape, ModeNormalization pov_policy) {
  const Key key{static_cast<int>(shape.family), shape.p, shape.w0, shape.r0, shape.k_r,
                static_cast<int>(pov_policy)};
  auto it = tables_.find(key);
  if (it == tables_.end()) it = tables_.emplace(key, ProfileTable(shape, pov_policy, quad_)).first;
  return it->second;
}

}  // namespace oam
