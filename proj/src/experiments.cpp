#include "atiyah/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "atiyah/gram3.hpp"
#include "atiyah/gram4.hpp"
#include "atiyah/random.hpp"

namespace atiyah {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Runs fn(0..count-1), possibly on several threads. Each index writes only
// its own preallocated slot, so results do not depend on the schedule.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      std::min<unsigned>(hw, static_cast<unsigned>(std::max(count, 1)));
  if (count <= 1 || workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> cursor{0};
  auto drain = [&] {
    for (int i; (i = cursor.fetch_add(1)) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 0; t + 1 < workers; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
}

Vector3 gaussian3(Xoshiro256pp& rng) {
  const double a = rng.normal();
  const double b = rng.normal();
  const double c = rng.normal();
  return Vector3(a, b, c);
}

Vector3 random_unit(Xoshiro256pp& rng) {
  for (;;) {
    const Vector3 g = gaussian3(rng);
    const double n = g.norm();
    if (n > 1e-6) return g / n;
  }
}

Configuration draw_one(const SamplerSpec& spec, Xoshiro256pp& rng) {
  Configuration c;
  c.points.resize(static_cast<std::size_t>(spec.n));
  switch (spec.kind) {
    case SamplerKind::UniformBox:
      for (auto& p : c.points) {
        p = Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1),
                    rng.uniform(-1, 1));
      }
      break;
    case SamplerKind::Gaussian:
      for (auto& p : c.points) p = gaussian3(rng);
      break;
    case SamplerKind::NearCollinear: {
      const Vector3 axis = random_unit(rng);
      for (auto& p : c.points) {
        const double t = rng.uniform(-1, 1);
        const Vector3 g = gaussian3(rng);
        const Vector3 perp = g - g.dot(axis) * axis;
        p = t * axis + spec.jitter * perp;
      }
      break;
    }
    case SamplerKind::Clustered: {
      const Vector3 centers[2] = {
          Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)),
          Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))};
      for (auto& p : c.points) {
        const std::size_t which = rng.next() & 1u;
        p = centers[which] + spec.jitter * gaussian3(rng);
      }
      break;
    }
  }
  return c;
}

bool config_ok(const Configuration& c) {
  try {
    validate(c);
    return true;
  } catch (const DegenerateConfiguration&) {
    return false;
  }
}

}  // namespace

SamplerKind sampler_kind_from_string(std::string_view s) {
  if (s == "uniform-box") return SamplerKind::UniformBox;
  if (s == "gaussian") return SamplerKind::Gaussian;
  if (s == "near-collinear") return SamplerKind::NearCollinear;
  if (s == "clustered") return SamplerKind::Clustered;
  throw std::invalid_argument("unknown sampler kind: " + std::string(s));
}

std::string to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::UniformBox: return "uniform-box";
    case SamplerKind::Gaussian: return "gaussian";
    case SamplerKind::NearCollinear: return "near-collinear";
    case SamplerKind::Clustered: return "clustered";
  }
  return "?";
}

std::vector<Configuration> sample(const SamplerSpec& spec) {
  if (spec.count < 1 || spec.n < 2) {
    throw std::invalid_argument("sample: count must be >= 1 and n >= 2");
  }
  if (spec.jitter <= 0.0 && (spec.kind == SamplerKind::NearCollinear ||
                             spec.kind == SamplerKind::Clustered)) {
    throw std::invalid_argument("sample: jitter must be positive");
  }
  std::vector<Configuration> out(static_cast<std::size_t>(spec.count));
  for (int k = 0; k < spec.count; ++k) {
    Xoshiro256pp rng(spec.seed, static_cast<std::uint64_t>(k));
    Configuration c = draw_one(spec, rng);
    for (int attempt = 0; attempt < 1000 && !config_ok(c); ++attempt) {
      c = draw_one(spec, rng);
    }
    if (!config_ok(c)) {
      throw std::runtime_error("sample: could not draw a valid configuration");
    }
    out[static_cast<std::size_t>(k)] = std::move(c);
  }
  return out;
}

Suite suite_from_string(std::string_view s) {
  if (s == "gram3") return Suite::Gram3;
  if (s == "gram4") return Suite::Gram4;
  if (s == "bridge") return Suite::Bridge;
  if (s == "conjectures") return Suite::Conjectures;
  if (s == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + std::string(s));
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Gram3: return "gram3";
    case Suite::Gram4: return "gram4";
    case Suite::Bridge: return "bridge";
    case Suite::Conjectures: return "conjectures";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

double gram3_residuals(const Configuration& c, const AnalysisReport& rep) {
  double r = 0.0;
  const TriangleScalars t = triangle_scalars(c);
  const double s2 = h3_closed_form(t);
  r = std::max(r, std::abs(rep.detH - s2) / std::max(1.0, s2));

  const LemmaH3Result lemma = lemma_h3_minus_identity(c);
  const double lemma_closed = (t.S - 2.0) * (t.S - 1.0);
  r = std::max(r, std::abs(lemma.det - lemma_closed) /
                      std::max(1.0, std::abs(lemma_closed)));
  r = std::max(r, std::max(0.0, -lemma.minEig));
  r = std::max(r, std::max(0.0, -lemma.minMinor2x2));

  r = std::max(r, std::abs(coplanarity_check(c)));
  r = std::max(r, std::abs(-4.0 * t.mu1 * t.mu2 * t.mu3 -
                           (t.mu1 * t.mu1 + t.mu2 * t.mu2 + t.mu3 * t.mu3 -
                            2.0 * (t.mu1 * t.mu2 + t.mu1 * t.mu3 +
                                   t.mu2 * t.mu3))));
  r = std::max(r, std::max(0.0, 2.0 - t.S));
  r = std::max(r, std::max(0.0, t.S - 2.25));
  r = std::max(r, sign_relations_check(c) ? 0.0 : 1.0);

  // n = 3 closed form for the determinant itself: D real, equal to S/2.
  r = std::max(r, std::abs(rep.D.imag()));
  r = std::max(r, std::abs(rep.D.real() - 0.5 * t.S));
  return r;
}

double gram4_residuals(const Configuration& c) {
  double r = 0.0;
  const LiftAssignment w = assign_lifts(c);
  const Decomposition4 d = build_decomposition(c);

  MatrixXc sum = MatrixXc::Zero(4, 4);
  for (const auto& a : d.A) sum += a;
  r = std::max(r, (sum - d.H4).cwiseAbs().maxCoeff());
  for (const auto& a : d.A) {
    r = std::max(r, std::max(0.0, -eig_hermitian(a).eigenvalues.minCoeff()));
  }

  const Gram4Scalars s = gram4_scalars(c);
  const double det_a4 = determinant(d.Atilde[3]).real();
  const double closed = det_A4_closed_form(s);
  r = std::max(r, std::abs(det_a4 - closed) / std::max(1.0, std::abs(closed)));
  r = std::max(r, std::max(0.0, -s.R));

  const double stilde2 = s.Stilde * s.Stilde;
  r = std::max(r, std::abs(4.0 * (1.0 - s.mu1) * (1.0 - s.mu2) *
                               (1.0 - s.mu3) -
                           stilde2));

  const Complex cyc = three_cycle(w(0, 3), w(1, 3), w(2, 3));
  r = std::max(r, std::abs(cyc.real() - 0.5 * (-1.0 + s.T)));

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const MatrixXc tij = mixed_gram(w, i, j);
      r = std::max(r, std::abs(determinant(tij)));
      const Complex viaPerm = permanent(tij);
      r = std::max(r, std::abs(viaPerm - d.H4(i, j)) /
                          std::max(1.0, std::abs(d.H4(i, j))));
    }
  }
  return r;
}

}  // namespace

VerifyResult verify_batch(const std::vector<Configuration>& configs,
                          Suite suite, double tol) {
  if (configs.empty()) {
    throw std::invalid_argument("verify_batch: empty configuration list");
  }
  for (const auto& c : configs) {
    if (suite == Suite::Gram3 && c.size() != 3) {
      throw std::invalid_argument("verify_batch: suite gram3 requires n = 3");
    }
    if (suite == Suite::Gram4 && c.size() != 4) {
      throw std::invalid_argument("verify_batch: suite gram4 requires n = 4");
    }
  }

  const int count = static_cast<int>(configs.size());
  VerifyResult out;
  out.records.resize(static_cast<std::size_t>(count));

  parallel_for(count, [&](int i) {
    const Configuration& c = configs[static_cast<std::size_t>(i)];
    VerifyRecord& rec = out.records[static_cast<std::size_t>(i)];
    rec.index = i;
    rec.n = c.size();
    try {
      const AnalysisReport rep = analyze(c);
      rec.absD = rep.absD;
      rec.detH = rep.detH;
      rec.minEig = rep.minEig;
      rec.conj1_margin = rep.conj1_margin;
      rec.conj2_margin = rep.conj2_margin;

      double r = 0.0;
      if (suite == Suite::Bridge || suite == Suite::All) {
        r = std::max(r, std::abs(rep.detH - rep.cn * rep.absD * rep.absD) /
                            std::max(1.0, rep.detH));
      }
      if ((suite == Suite::Gram3 || suite == Suite::All) && rec.n == 3) {
        r = std::max(r, gram3_residuals(c, rep));
      }
      if ((suite == Suite::Gram4 || suite == Suite::All) && rec.n == 4) {
        r = std::max(r, gram4_residuals(c));
      }
      rec.max_residual = r;
    } catch (const std::exception& e) {
      rec.error = true;
      rec.message = e.what();
    }
  });

  VerifySummary& s = out.summary;
  s.count = count;
  s.n = configs.front().size();
  s.suite = suite;
  s.tol = tol;
  s.min_conj1_margin = kInf;
  s.min_conj2_margin = kInf;
  s.max_residual = 0.0;
  for (const VerifyRecord& rec : out.records) {
    if (rec.error) {
      ++s.errors;
      continue;
    }
    s.min_conj1_margin = std::min(s.min_conj1_margin, rec.conj1_margin);
    s.min_conj2_margin = std::min(s.min_conj2_margin, rec.conj2_margin);
    s.max_residual = std::max(s.max_residual, rec.max_residual);
    if (rec.conj1_margin < -tol || rec.conj2_margin < -tol) ++s.violations;
  }
  return out;
}

namespace {

using Flat = Eigen::VectorXd;

Configuration unflatten(const Flat& x) {
  Configuration c;
  const int n = static_cast<int>(x.size()) / 3;
  c.points.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    c.points[static_cast<std::size_t>(i)] = x.segment<3>(3 * i);
  }
  return c;
}

// Gauge fixing: translate the centroid to the origin and rescale to unit
// RMS radius. |D| is invariant under both.
Flat gauge_normalize(const Flat& x) {
  const int n = static_cast<int>(x.size()) / 3;
  Vector3 centroid = Vector3::Zero();
  for (int i = 0; i < n; ++i) centroid += x.segment<3>(3 * i);
  centroid /= n;
  double rms = 0.0;
  for (int i = 0; i < n; ++i) {
    rms += (x.segment<3>(3 * i) - centroid).squaredNorm();
  }
  rms = std::sqrt(rms / n);
  if (!(rms > 1e-300)) return x;
  Flat y(x.size());
  for (int i = 0; i < n; ++i) {
    y.segment<3>(3 * i) = (x.segment<3>(3 * i) - centroid) / rms;
  }
  return y;
}

double abs_D_objective(const Flat& x) {
  const Configuration c = unflatten(x);
  const double diam = diameter(c);
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((c.points[static_cast<std::size_t>(j)] -
           c.points[static_cast<std::size_t>(i)])
              .norm() < 1e-9 * diam) {
        return kInf;  // keep the search inside the configuration space
      }
    }
  }
  try {
    return std::abs(atiyah_D(c));
  } catch (const std::exception&) {
    return kInf;
  }
}

struct RestartOutcome {
  Flat best;
  double f = kInf;
  long iterations = 0;
  bool converged = false;
};

RestartOutcome nelder_mead_restart(int n, std::uint64_t seed,
                                   std::uint64_t stream) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;
  constexpr double kDiamTol = 1e-10;
  constexpr long kMaxEvals = 100000;
  constexpr double kEdge = 0.1;  // of the (unit) RMS radius

  Xoshiro256pp rng(seed, stream);
  const int dim = 3 * n;

  Flat x0(dim);
  for (int i = 0; i < dim; ++i) x0(i) = rng.normal();
  x0 = gauge_normalize(x0);

  std::vector<Flat> v(static_cast<std::size_t>(dim + 1), x0);
  std::vector<double> f(static_cast<std::size_t>(dim + 1));
  for (int i = 0; i < dim; ++i) {
    v[static_cast<std::size_t>(i + 1)](i) += kEdge;
  }
  long evals = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    f[i] = abs_D_objective(v[i]);
    ++evals;
  }

  RestartOutcome out;
  std::vector<int> order(v.size());
  while (true) {
    ++out.iterations;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return f[static_cast<std::size_t>(a)] < f[static_cast<std::size_t>(b)];
    });
    const std::size_t best = static_cast<std::size_t>(order.front());
    const std::size_t worst = static_cast<std::size_t>(order.back());
    const std::size_t second =
        static_cast<std::size_t>(order[order.size() - 2]);

    double diam = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        diam = std::max(diam, (v[i] - v[j]).norm());
      }
    }
    if (diam < kDiamTol) {
      out.converged = true;
      break;
    }
    if (evals >= kMaxEvals) break;

    Flat centroid = Flat::Zero(dim);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != worst) centroid += v[i];
    }
    centroid /= dim;

    const Flat xr = centroid + kReflect * (centroid - v[worst]);
    const double fr = abs_D_objective(xr);
    ++evals;

    if (fr < f[best]) {
      const Flat xe = centroid + kExpand * (xr - centroid);
      const double fe = abs_D_objective(xe);
      ++evals;
      if (fe < fr) {
        v[worst] = xe;
        f[worst] = fe;
      } else {
        v[worst] = xr;
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      v[worst] = xr;
      f[worst] = fr;
    } else {
      bool shrink = false;
      if (fr < f[worst]) {
        const Flat xc = centroid + kContract * (xr - centroid);
        const double fc = abs_D_objective(xc);
        ++evals;
        if (fc <= fr) {
          v[worst] = xc;
          f[worst] = fc;
        } else {
          shrink = true;
        }
      } else {
        const Flat xc = centroid + kContract * (v[worst] - centroid);
        const double fc = abs_D_objective(xc);
        ++evals;
        if (fc < f[worst]) {
          v[worst] = xc;
          f[worst] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i == best) continue;
          v[i] = v[best] + kShrink * (v[i] - v[best]);
          f[i] = abs_D_objective(v[i]);
          ++evals;
        }
      }
    }

    // Gauge step; the cached objective values are unaffected by it.
    for (auto& vertex : v) vertex = gauge_normalize(vertex);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (f[i] < f[best]) best = i;
  }
  out.best = v[best];
  out.f = f[best];
  return out;
}

}  // namespace

MinimizeResult minimize_absD(int n, int restarts, std::uint64_t seed) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("minimize_absD: n must be in [2, 8]");
  }
  if (restarts < 1) {
    throw std::invalid_argument("minimize_absD: need at least one restart");
  }

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(restarts, [&](int r) {
    outcomes[static_cast<std::size_t>(r)] =
        nelder_mead_restart(n, seed, static_cast<std::uint64_t>(r));
  });

  MinimizeResult res;
  res.restarts = restarts;
  std::size_t best = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    res.iterations += outcomes[r].iterations;
    if (outcomes[r].f < outcomes[best].f) best = r;
  }
  res.bestConfig = unflatten(outcomes[best].best);
  res.bestAbsD = outcomes[best].f;
  res.converged = outcomes[best].converged;
  return res;
}

}  // namespace atiyah
