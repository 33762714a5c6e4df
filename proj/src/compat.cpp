/*
 * Copyright 2026 the macpolar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "macpolar/compat.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace macpolar {

namespace {

std::string fmt_complex(Complex v) {
  std::ostringstream os;
  os.precision(12);
  os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << 'j';
  return os.str();
}

std::string fmt_tuple(const GroupSpec& g, std::size_t index) { return to_string(g.element(index)); }

Complex unit_projected(Complex v) { return v / std::abs(v); }

}  // namespace

FingerprintResult extract_fingerprint(const TwoUserView& view) {
  const GroupSpec& g1 = view.g1();
  const GroupSpec& g2 = view.g2();
  const SupportSets& sup = view.support();
  const std::size_t nz = view.mac().output_size();
  const double eps = view.tolerances().support_eps;
  const double rtol = view.tolerances().ratio_tol;

  // Every coefficient over X^z must be nonvanishing across the whole of Y^z,
  // otherwise some ratio is 0 or infinite and no unimodular table exists.
  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t xhat : sup.x_of_z[z])
      for (std::size_t y : sup.y_of_z[z]) {
        const Complex c = view.posterior_dft(y, z)[xhat];
        if (std::abs(c) <= eps) {
          std::ostringstream os;
          os << "phat_{y=" << fmt_tuple(g2, y) << ",z=" << z << "}(xhat=" << fmt_tuple(g1, xhat)
             << ") = " << fmt_complex(c) << " vanishes while xhat lies in X^z";
          return FailureEvidence{FailureStage::fingerprint_ill_defined, "vanishing-dft-coefficient", os.str()};
        }
      }

  // All ratios within one output must be unimodular.
  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t xhat : sup.x_of_z[z]) {
      const auto& ys = sup.y_of_z[z];
      for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
          const Complex a = view.posterior_dft(ys[i], z)[xhat];
          const Complex b = view.posterior_dft(ys[j], z)[xhat];
          const double mod = std::abs(a / b);
          if (std::abs(mod - 1.0) > rtol) {
            std::ostringstream os;
            os << "|phat_{y=" << fmt_tuple(g2, ys[i]) << ",z=" << z << "} / phat_{y=" << fmt_tuple(g2, ys[j])
               << ",z=" << z << "}| = " << mod << " at xhat=" << fmt_tuple(g1, xhat);
            return FailureEvidence{FailureStage::fingerprint_ill_defined, "non-unimodular-ratio", os.str()};
          }
        }
    }

  // Ratios with equal y-differences must agree, both within an output and
  // across outputs; the first value seen defines the table entry.
  Fingerprint fp;
  fp.support = sup;
  struct Origin {
    std::size_t y1, y2, z;
  };
  std::map<std::pair<std::size_t, std::size_t>, Origin> origin;

  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t xhat : sup.x_of_z[z])
      for (std::size_t y1 : sup.y_of_z[z])
        for (std::size_t y2 : sup.y_of_z[z]) {
          const std::size_t d = g2.add_index(y1, g2.neg_index(y2));
          const Complex ratio = view.posterior_dft(y1, z)[xhat] / view.posterior_dft(y2, z)[xhat];
          const auto key = std::make_pair(xhat, d);
          auto it = fp.values.find(key);
          if (it == fp.values.end()) {
            fp.values.emplace(key, unit_projected(ratio));
            origin.emplace(key, Origin{y1, y2, z});
          } else if (std::abs(it->second - ratio) > rtol) {
            const Origin& o = origin.at(key);
            std::ostringstream os;
            os << "ratio at (xhat=" << fmt_tuple(g1, xhat) << ", dy=" << fmt_tuple(g2, d) << ") from (y1="
               << fmt_tuple(g2, y1) << ", y2=" << fmt_tuple(g2, y2) << ", z=" << z << ") is "
               << fmt_complex(ratio) << " but (y1=" << fmt_tuple(g2, o.y1) << ", y2=" << fmt_tuple(g2, o.y2)
               << ", z=" << o.z << ") gave " << fmt_complex(it->second);
            return FailureEvidence{FailureStage::fingerprint_ill_defined, "inconsistent-ratio", os.str()};
          }
        }
  return fp;
}

ExtensionResult extend_to_pseudo_quadratic(const Fingerprint& fp, const GroupSpec& g1,
                                           const GroupSpec& g2, double tol) {
  std::map<std::pair<std::size_t, std::size_t>, Complex> table = fp.values;

  // apply() inserts or checks one rule instance; returns false on conflict.
  std::string conflict;
  auto apply = [&](std::size_t xhat, std::size_t y, Complex v, const char* rule,
                   std::pair<std::size_t, std::size_t> a,
                   std::pair<std::size_t, std::size_t> b) -> bool {
    auto it = table.find({xhat, y});
    if (it == table.end()) {
      table.emplace(std::make_pair(xhat, y), unit_projected(v));
      return true;
    }
    if (std::abs(it->second - v) > tol) {
      std::ostringstream os;
      os << rule << " from (" << fmt_tuple(g1, a.first) << "," << fmt_tuple(g2, a.second) << ") and ("
         << fmt_tuple(g1, b.first) << "," << fmt_tuple(g2, b.second) << ") assigns "
         << fmt_complex(v) << " to (" << fmt_tuple(g1, xhat) << "," << fmt_tuple(g2, y)
         << ") which already holds " << fmt_complex(it->second);
      conflict = os.str();
      return false;
    }
    return true;
  };

  // The domain only grows, so the fixpoint arrives within |G1|*|G2| growth
  // rounds; one final round with no growth re-checks every rule instance.
  const std::size_t max_rounds = g1.size() * g2.size() + 2;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const std::size_t before = table.size();
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    keys.reserve(table.size());
    for (const auto& [k, v] : table) keys.push_back(k);  // map order: lexicographic

    // R1: combine entries sharing xhat.
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i; j < keys.size(); ++j) {
        if (keys[i].first != keys[j].first) continue;
        const std::size_t xhat = keys[i].first;
        const std::size_t ysum = g2.add_index(keys[i].second, keys[j].second);
        const Complex v = table.at(keys[i]) * table.at(keys[j]);
        if (!apply(xhat, ysum, v, "R1", keys[i], keys[j]))
          return FailureEvidence{FailureStage::extension_conflict, "closure-conflict", conflict};
      }
    // R2: combine entries sharing y.
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i; j < keys.size(); ++j) {
        if (keys[i].second != keys[j].second) continue;
        const std::size_t y = keys[i].second;
        const std::size_t xsum = g1.add_index(keys[i].first, keys[j].first);
        const Complex v = table.at(keys[i]) * table.at(keys[j]);
        if (!apply(xsum, y, v, "R2", keys[i], keys[j]))
          return FailureEvidence{FailureStage::extension_conflict, "closure-conflict", conflict};
      }
    if (table.size() == before) break;
  }

  PseudoQuadFunction f{g1, g2, std::move(table)};
  if (!is_pseudo_quadratic(f, tol))
    return FailureEvidence{FailureStage::extension_conflict, "closure-conflict",
                           "closure fixpoint failed the pseudo-quadratic laws"};
  return f;
}

bool is_pseudo_quadratic(const PseudoQuadFunction& f, double tol) {
  std::map<std::size_t, std::set<std::size_t>> rows;  // xhat -> { y }
  std::map<std::size_t, std::set<std::size_t>> cols;  // y -> { xhat }
  for (const auto& [k, v] : f.values) {
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
    rows[k.first].insert(k.second);
    cols[k.second].insert(k.first);
  }

  for (const auto& [xhat, ys] : rows) {
    if (f.g2.subgroup_closure_indices(ys) != ys) return false;
    for (std::size_t y1 : ys)
      for (std::size_t y2 : ys) {
        const Complex lhs = f.value(xhat, f.g2.add_index(y1, y2));
        if (std::abs(lhs - f.value(xhat, y1) * f.value(xhat, y2)) > tol) return false;
      }
  }
  for (const auto& [y, xs] : cols) {
    if (f.g1.subgroup_closure_indices(xs) != xs) return false;
    for (std::size_t x1 : xs)
      for (std::size_t x2 : xs) {
        const Complex lhs = f.value(f.g1.add_index(x1, x2), y);
        if (std::abs(lhs - f.value(x1, y) * f.value(x2, y)) > tol) return false;
      }
  }
  return true;
}

CompatReport check_compatibility(const TwoUserView& view) {
  CompatReport report;
  FingerprintResult fp = extract_fingerprint(view);
  if (auto* failure = std::get_if<FailureEvidence>(&fp)) {
    report.compatible = false;
    report.failure = *failure;
    return report;
  }
  ExtensionResult ext = extend_to_pseudo_quadratic(std::get<Fingerprint>(fp), view.g1(), view.g2(),
                                                   view.tolerances().ratio_tol);
  if (auto* failure = std::get_if<FailureEvidence>(&ext)) {
    report.compatible = false;
    report.failure = *failure;
    return report;
  }
  report.compatible = true;
  report.witness = std::get<PseudoQuadFunction>(std::move(ext));
  return report;
}

bool witness_satisfies_definition(const TwoUserView& view, const PseudoQuadFunction& f, double tol) {
  const GroupSpec& g2 = view.g2();
  for (const auto& [xhat, z] : view.support().xz)
    for (std::size_t y1 : view.support().y_of_z[z])
      for (std::size_t y2 : view.support().y_of_z[z]) {
        const std::size_t d = g2.add_index(y1, g2.neg_index(y2));
        if (!f.defined(xhat, d)) return false;
        const Complex lhs = view.posterior_dft(y1, z)[xhat];
        const Complex rhs = f.value(xhat, d) * view.posterior_dft(y2, z)[xhat];
        if (std::abs(lhs - rhs) > tol) return false;
      }
  return true;
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// I(X + aY; Y | Z) in bits for cyclic groups of equal order q.
double shear_cond_mutual_info(const TwoUserView& view, std::size_t a) {
  const std::size_t q = view.g1().size();
  const std::size_t nz = view.mac().output_size();

  std::vector<double> pz(nz, 0.0);
  std::vector<double> ptz(q * nz, 0.0);
  std::vector<double> pyz(q * nz, 0.0);
  std::vector<double> ptyz(q * q * nz, 0.0);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      const std::size_t t = (x + a * y) % q;
      for (std::size_t z = 0; z < nz; ++z) {
        const double v = view.joint(x, y, z);
        pz[z] += v;
        ptz[t * nz + z] += v;
        pyz[y * nz + z] += v;
        ptyz[(t * q + y) * nz + z] += v;
      }
    }

  auto h = [](const std::vector<double>& p) {
    double acc = 0.0;
    for (double v : p)
      if (v > 0.0) acc -= v * std::log(v);
    return acc;
  };
  return (h(ptz) + h(pyz) - h(pz) - h(ptyz)) / std::log(2.0);
}

}  // namespace

bool prime_field_applicable(const TwoUserView& view) {
  const auto& o1 = view.g1().orders();
  const auto& o2 = view.g2().orders();
  return o1.size() == 1 && o2.size() == 1 && o1[0] == o2[0] && is_prime(static_cast<std::size_t>(o1[0]));
}

std::optional<std::size_t> prime_field_shortcut(const TwoUserView& view) {
  if (!prime_field_applicable(view))
    throw std::invalid_argument("prime_field_shortcut: both groups must be Z_q for the same prime q");
  const std::size_t q = view.g1().size();
  for (std::size_t a = 0; a < q; ++a)
    if (shear_cond_mutual_info(view, a) < view.tolerances().support_eps) return a;
  return std::nullopt;
}

bool coprime_applicable(const TwoUserView& view) {
  return std::gcd(view.g1().size(), view.g2().size()) == 1;
}

bool coprime_shortcut(const TwoUserView& view) {
  if (!coprime_applicable(view))
    throw std::invalid_argument("coprime_shortcut: group orders must be co-prime");
  return view.cond_mutual_info_xy_given_z() < view.tolerances().support_eps;
}

std::map<SubsetMask, CompatReport> check_region(const Mac& mac, Tolerances tol) {
  std::map<SubsetMask, CompatReport> verdicts;
  const SubsetMask full = (1u << mac.num_users()) - 1u;
  for (SubsetMask s = 1; s < full; ++s)
    verdicts.emplace(s, check_compatibility(TwoUserView(two_user_reduction(mac, s), tol)));
  return verdicts;
}

std::vector<FingerprintResult> alternating_fingerprints(const TwoUserView& view, std::size_t levels) {
  SynthesisOptions opts;
  opts.merge_outputs = false;      // keep the raw synthesized alphabets
  opts.prune_zero_outputs = true;  // zero-probability outputs carry no support
  opts.max_depth = levels;

  std::vector<FingerprintResult> out;
  Mac current = view.mac();
  out.push_back(extract_fingerprint(view));
  for (std::size_t n = 1; n <= levels; ++n) {
    current = n % 2 == 1 ? minus_transform(current, opts) : plus_transform(current, opts);
    out.push_back(extract_fingerprint(TwoUserView(current, view.tolerances())));
  }
  return out;
}

}  // namespace macpolar
