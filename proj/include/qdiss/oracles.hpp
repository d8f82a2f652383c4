// oracles.hpp - brute-force Matsubara sums and products, used to cross-check
// the closed forms. They need only the kernel on the positive real axis.
//
// The first n_terms - 1 terms are summed directly; the remainder from n_terms
// on is estimated by Euler-MacLaurin: the integral of the summand (adaptive
// Gauss-Kronrod), half the first omitted term, and tail_order derivative
// corrections taken by finite differences.

#pragma once

#include "qdiss/model.hpp"

namespace qdiss {

struct SumConfig {
  int n_terms = 100000;
  int tail_order = 2;
};

void validate(const SumConfig& cfg);

// E = (1/2 beta)(1 + 2 sum gamma_hat(nu) / (nu + gamma_hat(nu)))
double energy_E_sum_oracle(const KernelFunctions& kernel, double beta, const SumConfig& cfg = {});
// U = (1/2 beta)(1 + 2 sum (gamma_hat - nu gamma_hat') / (nu + gamma_hat))
double internal_U_sum_oracle(const KernelFunctions& kernel, double beta, const SumConfig& cfg = {});
// C^E = 1/2 + sum (gamma_hat^2 + nu^2 gamma_hat') / (nu + gamma_hat)^2
double heat_ce_sum_oracle(const KernelFunctions& kernel, double T, const SumConfig& cfg = {});
// ln Z = ln Z_0 - sum ln(1 + gamma_hat(nu) / nu); box_ratio and omega_d fix Z_0.
double log_partition_product_oracle(const KernelFunctions& kernel, double box_ratio, double omega_d,
                                    double beta, const SumConfig& cfg = {});

// Convenience overloads. The strict-ohmic bath is rejected: its sums do not
// converge term by term.
double energy_E_sum_oracle(const BathSpec& bath, double beta, const SumConfig& cfg = {});
double internal_U_sum_oracle(const BathSpec& bath, double beta, const SumConfig& cfg = {});
double heat_ce_sum_oracle(const BathSpec& bath, double T, const SumConfig& cfg = {});
double log_partition_product_oracle(const SystemSpec& system, const BathSpec& bath, double beta,
                                    const SumConfig& cfg = {});

}  // namespace qdiss
