#include "srkit/reduction.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "srkit/structure.hpp"

namespace srkit {

namespace {

enum class Variant { jhess, jhmsh };

struct Driver {
  Matrix h;
  Matrix s;
  const ReductionConfig& cfg;
  Variant variant;
  ReductionObserver observe;
  std::vector<ReductionEvent> events;
  bool cure_at_first_stage = false;

  std::size_t n() const { return h.rows() / 2; }

  void similarity(const ElementaryTransform& t) {
    apply_left_in(t, h);
    apply_right_adjoint_in(t, h);
    apply_right_adjoint_in(t, s);
  }

  [[noreturn]] void throw_breakdown(std::size_t stage, double sub, double pivot) {
    events.push_back({EventKind::breakdown, stage, sub, pivot,
                      std::numeric_limits<double>::infinity(), std::nullopt});
    BreakdownError error(stage, sub, pivot,
                         "j-hessenberg reduction: breakdown, the required symplectic "
                         "elimination does not exist");
    error.events = events;
    throw error;
  }

  // Applies the orthogonal block-reflector cure at stage j (0-based) and
  // re-enters the stage. Returns false when the column's cure budget is gone.
  bool cure_stage(std::size_t j, std::size_t used, double sub, double pivot, bool is_breakdown) {
    const double ratio =
        is_breakdown ? std::numeric_limits<double>::infinity() : std::abs(sub / pivot);
    events.push_back({is_breakdown ? EventKind::breakdown : EventKind::near_breakdown, j + 1, sub,
                      pivot, ratio, std::nullopt});
    if (used >= cfg.max_cures) return false;

    const CuringReflector cure = build_curing_reflector(h, j, cfg.cure_kind, cfg.cure_block);
    apply_block_similarity_in(cure.primary, j, h);
    accumulate_block_transpose_in(cure.primary, j, s);
    events.push_back({EventKind::cure_applied, j + 1, sub, pivot, ratio, cfg.cure_kind});
    if (cure.fixup) {
      apply_block_similarity_in(*cure.fixup, j, h);
      accumulate_block_transpose_in(*cure.fixup, j, s);
      events.push_back({EventKind::fixup_applied, j + 1, sub, pivot, ratio, cfg.cure_kind});
    }
    if (j == 0) cure_at_first_stage = true;
    if (observe) observe(ReductionPhase::cure_done, j + 1, h);
    return true;
  }

  [[noreturn]] void throw_cure_budget(std::size_t stage) {
    CureBudgetError error(stage, "j-hessenberg reduction: cure budget exhausted");
    error.events = events;
    throw error;
  }

  // One stage of the Givens/Householder/G-elimination variant.
  void jhess_stage(std::size_t j) {
    const std::size_t half = n();
    for (std::size_t used = 0;; ++used) {
      for (std::size_t k = half; k-- > j + 1;) {
        similarity(vlg(k, h.column(j)));
      }
      similarity(vlh(j + 1, h.column(j)));

      const double sub = h(j + 1, j);
      const double pivot = h(half + j, j);
      const double scale = norm2(h.column(j));
      const bool sub_zero = cfg.zero.is_zero(sub, scale);
      const bool pivot_zero = cfg.zero.is_zero(pivot, scale);

      if (!sub_zero && pivot_zero) {
        if (!cfg.cure) throw_breakdown(j + 1, sub, pivot);
        if (!cure_stage(j, used, sub, pivot, true)) throw_cure_budget(j + 1);
        continue;
      }
      if (!sub_zero && std::abs(sub / pivot) >= cfg.tau) {
        if (cfg.cure) {
          if (!cure_stage(j, used, sub, pivot, false)) throw_cure_budget(j + 1);
          continue;
        }
        events.push_back(
            {EventKind::near_breakdown, j + 1, sub, pivot, std::abs(sub / pivot), std::nullopt});
      }
      break;
    }

    similarity(gal(j, h.column(j), cfg.zero));
    for (std::size_t k = half; k-- > j + 1;) {
      similarity(vlg(k, h.column(half + j)));
    }
    if (j + 2 < half) {
      similarity(vlh(j + 1, h.column(half + j)));
    }
  }

  // One stage of the rank-one symplectic Householder variant.
  void jhmsh_stage(std::size_t j) {
    const std::size_t half = n();
    const std::size_t mh = half - j;
    for (std::size_t used = 0;; ++used) {
      std::vector<double> window(2 * mh);
      for (std::size_t i = 0; i < mh; ++i) {
        window[i] = h(j + i, j);
        window[mh + i] = h(half + j + i, j);
      }
      double tail_sq = 0.0;
      for (std::size_t i = 1; i < mh; ++i) {
        tail_sq += window[i] * window[i] + window[mh + i] * window[mh + i];
      }
      const double tail = std::sqrt(tail_sq);
      const double pivot = window[mh];
      const double scale = norm2(window);
      if (cfg.zero.is_zero(tail, scale)) break;  // column already in shape

      if (cfg.zero.is_zero(pivot, scale)) {
        if (!cfg.cure) throw_breakdown(j + 1, tail, pivot);
        if (!cure_stage(j, used, tail, pivot, true)) throw_cure_budget(j + 1);
        continue;
      }
      if (std::abs(tail / pivot) >= cfg.tau) {
        if (cfg.cure) {
          if (!cure_stage(j, used, tail, pivot, false)) throw_cure_budget(j + 1);
          continue;
        }
        events.push_back(
            {EventKind::near_breakdown, j + 1, tail, pivot, std::abs(tail / pivot), std::nullopt});
      }

      SymplecticHouseholder t = cfg.mu ? sh2(window, *cfg.mu) : sh2(window);
      t.start = j;
      std::vector<std::size_t> columns;
      columns.reserve(2 * mh);
      for (std::size_t c = j; c < half; ++c) columns.push_back(c);
      for (std::size_t c = half + j; c < 2 * half; ++c) columns.push_back(c);
      apply_left_on_columns_in(t, h, columns);
      apply_right_adjoint_in(t, h);
      apply_right_adjoint_in(t, s);
      break;
    }

    for (std::size_t k = half; k-- > j + 1;) {
      similarity(vlg(k, h.column(half + j)));
    }
    if (j + 2 < half) {
      similarity(vlh(j + 1, h.column(half + j)));
    }
  }

  void run(std::size_t first_stage) {
    const std::size_t half = n();
    for (std::size_t j = first_stage; j + 1 < half; ++j) {
      if (variant == Variant::jhess) {
        jhess_stage(j);
      } else {
        jhmsh_stage(j);
      }
      if (observe) observe(ReductionPhase::stage_done, j + 1, h);
    }
  }
};

JHessResult finalize(const Matrix& a, Driver&& driver) {
  JHessResult out{std::move(driver.s), std::move(driver.h), std::move(driver.events), 0.0, 0.0,
                  !driver.cure_at_first_stage};
  // H S^{-1} solved rather than inverting S explicitly.
  const Matrix hs_inv = solve(out.s.transpose(), out.h.transpose()).transpose();
  out.residual = spectral_norm(a - out.s * hs_inv);
  out.j_orthogonality_defect = symplecticity_defect_2norm(out.s);
  return out;
}

JHessResult run_variant(const Matrix& a, const ReductionConfig& cfg, Variant variant,
                        const ReductionObserver& observe) {
  require_even_square(a, variant == Variant::jhess ? "jhess" : "jhmsh");
  Driver driver{a, Matrix::identity(a.rows()), cfg, variant, observe, {}, false};
  driver.run(0);
  return finalize(a, std::move(driver));
}

}  // namespace

JHessResult jhess(const Matrix& a, const ReductionConfig& config, const ReductionObserver& observe) {
  return run_variant(a, config, Variant::jhess, observe);
}

JHessResult jhmsh(const Matrix& a, const ReductionConfig& config, const ReductionObserver& observe) {
  return run_variant(a, config, Variant::jhmsh, observe);
}

JHessResult mjhess(const Matrix& a, ReductionConfig config, const ReductionObserver& observe) {
  config.cure = true;
  return run_variant(a, config, Variant::jhess, observe);
}

JHessResult jhm2sh(const Matrix& a, ReductionConfig config, const ReductionObserver& observe) {
  config.cure = true;
  return run_variant(a, config, Variant::jhmsh, observe);
}

JHessResult jhm2sh2(const Matrix& a, ReductionConfig config, const ReductionObserver& observe) {
  return jhm2sh(a, std::move(config), observe);
}

void restore_j_hessenberg(Matrix& h, Matrix& s, std::size_t first_stage,
                          const ReductionConfig& config, std::vector<ReductionEvent>& events) {
  require_even_square(h, "restore_j_hessenberg");
  Driver driver{std::move(h), std::move(s), config, Variant::jhess, {}, std::move(events), false};
  driver.run(first_stage);
  h = std::move(driver.h);
  s = std::move(driver.s);
  events = std::move(driver.events);
}

DiagEquivalence diag_equivalence(const Matrix& s1, const Matrix& h1, const Matrix& s2,
                                 const Matrix& h2) {
  require_even_square(s1, "diag_equivalence");
  if (s2.rows() != s1.rows() || h1.rows() != s1.rows() || h2.rows() != s1.rows()) {
    throw std::invalid_argument("diag_equivalence: dimension mismatch");
  }
  const std::size_t n = s1.half_order();

  DiagEquivalence out;
  out.d = solve(s1, s2);

  out.c.resize(n);
  out.f.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.c[i] = out.d(i, i);
    out.f[i] = out.d(i, n + i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double off = std::abs(out.d(n + i, j));  // lower-left block must vanish
      if (i != j) {
        off = std::max(off, std::abs(out.d(i, j)));
        off = std::max(off, std::abs(out.d(i, n + j)));
        off = std::max(off, std::abs(out.d(n + i, n + j)));
      }
      out.pattern_defect = std::max(out.pattern_defect, off);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.inverse_defect = std::max(out.inverse_defect, std::abs(out.c[i] * out.d(n + i, n + i) - 1.0));
  }
  out.similarity_defect = spectral_norm(solve(out.d, h1 * out.d) - h2);
  return out;
}

}  // namespace srkit
