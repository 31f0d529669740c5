#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "quatwick/moebius.hpp"
#include "quatwick/quaternion.hpp"

namespace quatwick {

/// Dense rows x cols matrix of floating quaternions, row-major.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static QuatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RealQuat& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const RealQuat& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  /// A*[i, j] = conj(A[j, i]).
  QuatMatrix adjoint() const;
  RealQuat trace() const;
  bool is_self_adjoint() const;

  friend QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<RealQuat> data_;
};

using RealMatrix = Eigen::MatrixXd;

enum class EnsembleKind { GOE, GSE, WishartReal, WishartQuat };

std::string to_string(EnsembleKind kind);
EnsembleKind parse_ensemble_kind(const std::string& name);
bool is_wishart(EnsembleKind kind);
bool is_quaternionic(EnsembleKind kind);

/// A mixed-trace moment E( prod_blocks Re tr(Z_t(a) ... Z_t(b)) ).
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GSE;
  int n = 1;
  /// Wishart parameter M_c per color; a single entry applies to every color.
  std::vector<int> m;
  DegreeSeq degrees;
  /// One color per factor (length = sum of degrees); empty means all color 1.
  ColorMap colors;

  int matrix_count() const;
  int m_for_color(int color) const;
  /// Throws std::invalid_argument on inconsistent dimensions or colors.
  void validate() const;
};

using Rng = std::mt19937_64;

/// Generator for one sample index: the stream depends only on (seed, index).
Rng sample_stream(std::uint64_t seed, std::uint64_t index);

/// Self-adjoint; off-diagonal entries standard quaternion Gaussian (four
/// unit-variance components), diagonal real with variance 2.
QuatMatrix sample_gse(int n, Rng& rng);
/// Real symmetric; off-diagonal variance 1, diagonal variance 2.
RealMatrix sample_goe(int n, Rng& rng);
/// W = X* X with X an m x n matrix of standard quaternion Gaussians.
QuatMatrix sample_wishart_quat(int m, int n, Rng& rng);
/// W = X^T X with X an m x n matrix of unit-variance real Gaussians.
RealMatrix sample_wishart_real(int m, int n, Rng& rng);

/// prod over blocks of Re tr(product of the block's matrices in order).
/// `matrices[c - 1]` is the matrix of color c.
double mixed_trace_product(std::span<const QuatMatrix> matrices, const DegreeSeq& degrees,
                           const ColorMap& colors);
double mixed_trace_product(std::span<const RealMatrix> matrices, const DegreeSeq& degrees,
                           const ColorMap& colors);

struct MCEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

struct MCOptions {
  unsigned threads = 1;
  /// Bound on N * samples (work guard).
  std::uint64_t max_work = 2'000'000'000ULL;
};

/// Sample mean and standard error of mixed_trace_product over independent
/// draws. Results depend only on (spec, samples, seed), not on `threads`.
MCEstimate mc_moment(const EnsembleSpec& spec, std::size_t samples, std::uint64_t seed,
                     const MCOptions& options = {});

/// One sample of the EnsembleSpec trace product using the given stream.
double sample_trace_product(const EnsembleSpec& spec, Rng& rng);

}  // namespace quatwick
