#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "declab/parallel.hpp"
#include "declab/vec.hpp"

namespace declab {

// Gossip weight matrix W = [w_ij]; symmetric, non-negative and doubly
// stochastic when valid.
using MixingMatrix = Eigen::MatrixXd;

struct MixingValidation {
  bool symmetric = false;
  bool nonnegative = false;
  bool rows_stochastic = false;
  bool cols_stochastic = false;
  bool eigenvalues_in_range = false;  // all eigenvalues in (-1, 1]
  double max_asymmetry = 0.0;
  double min_entry = 0.0;
  double max_row_error = 0.0;
  double max_col_error = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;

  bool pass() const {
    return symmetric && nonnegative && rows_stochastic && cols_stochastic &&
           eigenvalues_in_range;
  }
  std::string describe() const;
};

// Periodic sequence of mixing matrices. Rounds are 1-based and
// matrix_at(t) == matrix_at(t + period()). Construction checks that every
// round passes validate() and that the union of the period's communication
// graphs is connected. Instances are immutable.
class MixingSchedule {
 public:
  MixingSchedule() = default;  // empty; rejected by consumers

  static MixingSchedule from_matrices(std::string name, int workers_per_node,
                                      std::vector<MixingMatrix> rounds);

  int workers() const { return workers_; }
  int period() const { return static_cast<int>(rounds_.size()); }
  int workers_per_node() const { return workers_per_node_; }
  const std::string& name() const { return name_; }
  bool is_static() const { return rounds_.size() == 1; }

  const MixingMatrix& matrix_at(long round) const;
  // Workers j with w_ij > 0 in the given round, self included, ascending.
  const std::vector<std::vector<int>>& neighbors_at(long round) const;

 private:
  std::string name_;
  int workers_ = 0;
  int workers_per_node_ = 1;
  std::vector<MixingMatrix> rounds_;
  std::vector<std::vector<std::vector<int>>> neighbors_;
};

// All entries 1/N; period 1.
MixingSchedule make_complete(int n);
// Period 2: round 1 pairs (2k, 2k+1), round 2 pairs (2k+1, 2k+2 mod N).
// Matched pairs average with weight 1/2 each; N must be even.
MixingSchedule make_one_peer_ring(int n);
// Period log2(N): round r pairs worker i with i XOR 2^(r-1). N must be a
// power of two, N >= 2.
MixingSchedule make_one_peer_exponential(int n);
// Alternating Exponential Ring over M = n / workers_per_node nodes
// (M a power of two, M >= 2). Each round averages every node's workers as a
// group, with one designated node pair merged into a single group. The M=4
// merge order is (2,3), (0,1), (0,2), (1,3); larger M cycles hop distances
// 1, 2, ..., M/2 with one merged pair (j, j+h) per round in increasing j.
MixingSchedule make_aer(int n, int workers_per_node);

MixingValidation validate(const MixingMatrix& w);

// max(|lambda_2|, |lambda_N|) of the descending-sorted spectrum. Requires a
// symmetric input; returns 0 for N = 1.
double spectral_lambda(const MixingMatrix& w);

// Largest singular value of (W^(P) ... W^(1)) - 11^T/N: the contraction
// factor of one full period of the schedule.
double effective_lambda(const MixingSchedule& s);

// Normalized consensus error of gossip iterations x <- W^(t) x.
// error[t] = sum_i ||x_i - xbar||^2 / sum_i ||x_i^0 - xbar||^2 with xbar the
// (preserved) initial mean; error[0] = 1. Zero initial dispersion yields an
// all-zero trajectory.
struct ConsensusTrajectory {
  std::vector<double> error;  // length rounds + 1
};

ConsensusTrajectory gossip_consensus(const MixingSchedule& s,
                                     const std::vector<Vec>& x0, int rounds,
                                     Exec exec = Exec::Serial);

}  // namespace declab
