#include "srkit/sr.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "srkit/structure.hpp"

namespace srkit {

namespace {

enum class SRVariant { srdeco, srmsh };

std::vector<double> gather_window(const Matrix& m, std::size_t start, std::size_t col) {
  const std::size_t n = m.half_order();
  const std::size_t mh = n - start;
  std::vector<double> a(2 * mh);
  for (std::size_t i = 0; i < mh; ++i) {
    a[i] = m(start + i, col);
    a[mh + i] = m(n + start + i, col);
  }
  return a;
}

struct Pipeline {
  Matrix r;
  Matrix s;
  const SRConfig& cfg;
  SRVariant variant;
  const SRStageObserver& observe;
  std::vector<ReductionEvent> events;

  void left_and_accumulate(const ElementaryTransform& t) {
    apply_left_in(t, r);
    apply_right_adjoint_in(t, s);
  }

  void run() {
    const std::size_t n = r.half_order();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = n; k-- > j;) {
        left_and_accumulate(vlg(k, r.column(j)));
      }
      left_and_accumulate(vlh(j, r.column(j)));
      if (j + 1 >= n) continue;

      for (std::size_t k = n; k-- > j + 1;) {
        left_and_accumulate(vlg(k, r.column(n + j)));
      }
      left_and_accumulate(vlh(j + 1, r.column(n + j)));

      if (observe) observe(j + 1, r);

      // Stopping test on the entry to annihilate vs. the elimination pivot.
      const double sub = r(j + 1, n + j);
      const double pivot = r(n + j, n + j);
      const double scale = norm2(r.column(n + j));
      const bool sub_zero = cfg.zero.is_zero(sub, scale);
      const bool pivot_zero = cfg.zero.is_zero(pivot, scale);
      if (sub_zero) continue;  // nothing to eliminate at this stage

      if (pivot_zero) {
        ReductionEvent event{EventKind::breakdown, j + 1, sub, pivot,
                             std::numeric_limits<double>::infinity(), std::nullopt};
        events.push_back(event);
        BreakdownError error(j + 1, sub, pivot,
                             "sr factorization: breakdown, no symplectic elimination exists");
        error.events = events;
        throw error;
      }
      const double ratio = std::abs(sub / pivot);
      if (ratio >= cfg.tau) {
        events.push_back({EventKind::near_breakdown, j + 1, sub, pivot, ratio, std::nullopt});
      }

      if (variant == SRVariant::srdeco) {
        left_and_accumulate(gal(j, r.column(n + j), cfg.zero));
      } else {
        std::vector<double> window = gather_window(r, j, n + j);
        SymplecticHouseholder t = cfg.mu ? sh2(window, *cfg.mu) : sh2(window);
        t.start = j;
        // Columns j+1..n-1 and n+j..2n-1; the others are unchanged by
        // construction (reduced columns and the T e_1 = e_1 invariance).
        std::vector<std::size_t> columns;
        columns.reserve(2 * (n - j));
        for (std::size_t c = j + 1; c < n; ++c) columns.push_back(c);
        for (std::size_t c = n + j; c < 2 * n; ++c) columns.push_back(c);
        apply_left_on_columns_in(t, r, columns);
        apply_right_adjoint_in(t, s);
      }
    }
  }
};

SRFactors run_pipeline(const Matrix& a, const SRConfig& cfg, SRVariant variant,
                       const SRStageObserver& observe) {
  require_even_square(a, variant == SRVariant::srdeco ? "srdeco" : "srmsh");
  Pipeline pipeline{a, Matrix::identity(a.rows()), cfg, variant, observe, {}};
  pipeline.run();

  SRFactors out{std::move(pipeline.s), std::move(pipeline.r), 0.0, 0.0, std::move(pipeline.events)};
  out.residual = spectral_norm(a - out.s * out.r);
  out.symplecticity_defect = symplecticity_defect_2norm(out.s);
  return out;
}

double stage_diagonal_product(const Matrix& r, std::size_t stage) {
  const std::size_t n = r.half_order();
  double product = 1.0;
  for (std::size_t i = 0; i < stage; ++i) product *= r(i, i) * r(n + i, n + i);
  return product;
}

}  // namespace

SRFactors srdeco(const Matrix& a, const SRConfig& config, const SRStageObserver& observe) {
  return run_pipeline(a, config, SRVariant::srdeco, observe);
}

SRFactors srmsh(const Matrix& a, const SRConfig& config, const SRStageObserver& observe) {
  return run_pipeline(a, config, SRVariant::srmsh, observe);
}

MinorIdentity verify_minor_identity(const Matrix& a, std::size_t stage, const SRConfig& config) {
  require_even_square(a, "verify_minor_identity");
  const std::size_t n = a.half_order();
  if (stage == 0 || stage >= n) {
    throw std::invalid_argument("verify_minor_identity: stage must be in 1..n-1");
  }
  std::optional<double> product;
  const SRStageObserver observer = [&](std::size_t j, const Matrix& r) {
    if (j == stage) product = stage_diagonal_product(r, stage);
  };
  try {
    srdeco(a, config, observer);
  } catch (const BreakdownError&) {
    if (!product) throw;  // the requested stage was never reached
  }
  return {even_leading_minor(a, stage), *product * *product};
}

ExistenceDiagnosis diagnose_existence(const Matrix& a, const SRConfig& config) {
  require_even_square(a, "diagnose_existence");
  const std::size_t n = a.half_order();

  ExistenceDiagnosis out;
  const SRStageObserver observer = [&](std::size_t j, const Matrix& r) {
    out.stages.push_back({j, r(n + j - 1, n + j - 1), r(j, n + j - 1)});
    const double product = stage_diagonal_product(r, j);
    out.minor_checks.push_back({j, even_leading_minor(a, j), product * product});
  };

  std::optional<Matrix> final_r;
  try {
    SRFactors factors = srdeco(a, config, observer);
    out.exists = true;
    final_r = std::move(factors.r);
  } catch (const BreakdownError& error) {
    out.exists = false;
    out.failure_stage = error.step;
  }

  out.det = determinant(a);
  const double scale = max_abs(a);
  out.nonsingular =
      scale > 0.0 && std::abs(out.det) > std::pow(config.zero.rel * scale, double(a.rows()));
  if (out.nonsingular) {
    out.corollary_checked = true;
    bool all_pivots_nonzero = out.exists;
    if (out.exists) {
      for (const auto& record : out.stages) {
        if (config.zero.is_zero(record.pivot_entry, scale)) all_pivots_nonzero = false;
      }
      if (final_r && config.zero.is_zero((*final_r)(2 * n - 1, 2 * n - 1), scale)) {
        all_pivots_nonzero = false;
      }
    }
    out.corollary_consistent = (out.exists == all_pivots_nonzero);
  }
  return out;
}

}  // namespace srkit
