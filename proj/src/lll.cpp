#include "latred/lll.hpp"

#include <string>

namespace latred {

void ReductionParams::validate() const {
  if (!(delta > make_rat(1, 4) && delta < 1))
    throw InputError("delta must satisfy 1/4 < delta < 1");
}

BigRat ReductionParams::alpha() const {
  return BigRat(4) / (BigRat(4) * delta - 1);
}

namespace {

BigRat abs_rat(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

bool lovasz_holds(const GSOState& st, std::size_t i, const BigRat& delta) {
  // delta*||b_i*||^2 <= ||b_{i+1}*||^2 + mu_{i+1,i}^2*||b_i*||^2
  const BigRat& mu = st.mu[i + 1][i];
  return delta * st.gs_norm_sq[i] <= st.gs_norm_sq[i + 1] + mu * mu * st.gs_norm_sq[i];
}

}  // namespace

ReductionResult lll_reduce(IntMatrix basis, const ReductionOptions& opts) {
  opts.params.validate();
  const std::size_t n = basis.cols();
  GSOState st = gso_compute(basis);

  ReductionTrace trace;
  std::size_t step = 0;
  const BigRat half = make_rat(1, 2);

  std::size_t i = 1;
  while (i < n) {
    // Size-reduce b_i by b_{i-1}, ..., b_0.
    for (std::size_t jj = i; jj-- > 0;) {
      if (abs_rat(st.mu[i][jj]) <= half) continue;
      BigInt q = round_half_up(st.mu[i][jj]);
      basis.sub_col_multiple(i, jj, q);
      gso_size_reduce_update(st, i, jj, q);
      ReductionEvent ev{step++, ReductionEvent::Kind::Translate, i, jj, q};
      trace.events.push_back(ev);
      if (opts.on_event) opts.on_event(ev, st);
    }

    if (lovasz_holds(st, i - 1, opts.params.delta)) {
      ++i;
    } else {
      std::vector<BigRat> before;
      if (opts.with_checkpoints) before = st.gs_norm_sq;
      basis.swap_cols(i - 1, i);
      gso_swap_update(st, basis, i - 1);
      ReductionEvent ev{step++, ReductionEvent::Kind::Swap, i - 1, 0, BigInt(0)};
      trace.events.push_back(ev);
      ++trace.swap_count;
      if (opts.with_checkpoints)
        trace.checkpoints.push_back({ev.step, std::move(before), st.gs_norm_sq});
      if (opts.on_event) opts.on_event(ev, st);
      i = i > 1 ? i - 1 : 1;
    }
  }
  return {std::move(basis), std::move(trace)};
}

bool is_lll_reduced(const IntMatrix& basis, const ReductionParams& params) {
  params.validate();
  GSOState st = gso_compute(basis);
  const std::size_t n = st.size();
  const BigRat half = make_rat(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs_rat(st.mu[i][j]) > half) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!lovasz_holds(st, i, params.delta)) return false;
  return true;
}

ConsequenceReport check_reduced_consequences(const IntMatrix& basis,
                                             const ReductionParams& params) {
  params.validate();
  GSOState st = gso_compute(basis);
  const std::size_t n = st.size();
  const BigRat alpha = params.alpha();
  ConsequenceReport report;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(st.gs_norm_sq[i] <= alpha * st.gs_norm_sq[i + 1]))
      report.violations.push_back(
          {i + 1, "||b_i*||^2 > alpha*||b_{i+1}*||^2"});
  }

  BigRat alpha_pow(1);  // alpha^{i-1} for 1-based i
  for (std::size_t i = 0; i < n; ++i) {
    BigRat len_sq(norm_sq(basis.col(i)));
    if (!(len_sq <= alpha_pow * st.gs_norm_sq[i]))
      report.violations.push_back({i + 1, "||b_i||^2 > alpha^{i-1}*||b_i*||^2"});
    alpha_pow *= alpha;
  }
  return report;
}

}  // namespace latred
