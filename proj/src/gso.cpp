#include "latred/gso.hpp"

#include <string>

namespace latred {

GSOState gso_compute(const IntMatrix& basis) {
  const std::size_t n = basis.cols();
  IntMatrix gram = gram_matrix(basis);

  GSOState st;
  st.mu.assign(n, {});
  st.gs_norm_sq.assign(n, BigRat(0));

  // r[i][j] = <b_i, b_j*>; only the current row is needed at a time.
  std::vector<std::vector<BigRat>> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i].resize(i + 1);
    st.mu[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) {
      BigRat rij(gram.at(i, j));
      for (std::size_t t = 0; t < j; ++t) rij -= st.mu[j][t] * r[i][t];
      r[i][j] = rij;
      st.mu[i][j] = rij / st.gs_norm_sq[j];
    }
    BigRat d(gram.at(i, i));
    for (std::size_t t = 0; t < i; ++t) d -= st.mu[i][t] * r[i][t];
    if (d <= 0)
      throw InputError("zero Gram-Schmidt norm at index " + std::to_string(i + 1));
    r[i][i] = d;
    st.gs_norm_sq[i] = d;
  }
  return st;
}

void gso_swap_update(GSOState& state, const IntMatrix& basis, std::size_t i) {
  const std::size_t n = state.size();
  if (i + 1 >= n) throw InputError("swap index out of range");
  if (basis.cols() != n) throw InputError("basis/state size mismatch");

  const BigRat mu = state.mu[i + 1][i];
  const BigRat d_i = state.gs_norm_sq[i];
  const BigRat d_next = state.gs_norm_sq[i + 1];
  const BigRat d_new = d_next + mu * mu * d_i;  // > 0 for full-rank bases

  const BigRat mu_new = mu * d_i / d_new;
  state.gs_norm_sq[i] = d_new;
  state.gs_norm_sq[i + 1] = d_i * d_next / d_new;
  state.mu[i + 1][i] = mu_new;

  // Prefix coefficients of the two rows simply exchange.
  for (std::size_t j = 0; j < i; ++j) std::swap(state.mu[i][j], state.mu[i + 1][j]);

  // Rows below the pair: rotate the (i, i+1) coefficient pair.
  const BigRat ratio = d_next / d_new;
  for (std::size_t t = i + 2; t < n; ++t) {
    BigRat old_i = state.mu[t][i];
    BigRat old_next = state.mu[t][i + 1];
    state.mu[t][i] = mu_new * old_i + ratio * old_next;
    state.mu[t][i + 1] = old_i - mu * old_next;
  }
}

void gso_size_reduce_update(GSOState& state, std::size_t i, std::size_t j, const BigInt& q) {
  if (i >= state.size() || j >= i) throw InputError("size-reduction index out of range");
  if (q == 0) return;
  const BigRat qr(q);
  for (std::size_t t = 0; t < j; ++t) state.mu[i][t] -= qr * state.mu[j][t];
  state.mu[i][j] -= qr;
}

}  // namespace latred
