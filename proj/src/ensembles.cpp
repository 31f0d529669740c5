#include "quatwick/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace quatwick {

QuatMatrix QuatMatrix::identity(int n) {
  QuatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RealQuat(1.0);
  return m;
}

QuatMatrix QuatMatrix::adjoint() const {
  QuatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = conj((*this)(i, j));
  return out;
}

RealQuat QuatMatrix::trace() const {
  RealQuat t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool QuatMatrix::is_self_adjoint() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if ((*this)(i, j) != conj((*this)(j, i))) return false;
  return true;
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("quaternion matrix dimension mismatch");
  QuatMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const RealQuat& aik = a(i, k);
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::GOE: return "goe";
    case EnsembleKind::GSE: return "gse";
    case EnsembleKind::WishartReal: return "wishart-real";
    case EnsembleKind::WishartQuat: return "wishart-quat";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(const std::string& name) {
  if (name == "goe") return EnsembleKind::GOE;
  if (name == "gse") return EnsembleKind::GSE;
  if (name == "wishart-real") return EnsembleKind::WishartReal;
  if (name == "wishart-quat") return EnsembleKind::WishartQuat;
  throw std::invalid_argument("unknown ensemble kind '" + name + "'");
}

bool is_wishart(EnsembleKind kind) {
  return kind == EnsembleKind::WishartReal || kind == EnsembleKind::WishartQuat;
}

bool is_quaternionic(EnsembleKind kind) {
  return kind == EnsembleKind::GSE || kind == EnsembleKind::WishartQuat;
}

int EnsembleSpec::matrix_count() const {
  return colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
}

int EnsembleSpec::m_for_color(int color) const {
  if (m.size() == 1) return m.front();
  return m.at(static_cast<std::size_t>(color - 1));
}

void EnsembleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  validate_degrees(degrees);
  const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (!colors.empty()) validate_colors(colors, static_cast<std::size_t>(total));
  if (is_wishart(kind)) {
    if (m.empty()) throw std::invalid_argument("Wishart ensembles need M");
    if (m.size() != 1 && static_cast<int>(m.size()) != matrix_count())
      throw std::invalid_argument("give one M, or one M per color");
    for (int v : m)
      if (v < 1) throw std::invalid_argument("M must be at least 1");
  }
}

Rng sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

RealQuat quaternion_gaussian(std::normal_distribution<double>& nd, Rng& rng) {
  const double a = nd(rng);
  const double b = nd(rng);
  const double c = nd(rng);
  const double d = nd(rng);
  return RealQuat(a, b, c, d);
}

}  // namespace

QuatMatrix sample_gse(int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double diag_sd = std::sqrt(2.0);
  QuatMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    z(i, i) = RealQuat(diag_sd * nd(rng));
    for (int j = i + 1; j < n; ++j) {
      z(i, j) = quaternion_gaussian(nd, rng);
      z(j, i) = conj(z(i, j));
    }
  }
  return z;
}

RealMatrix sample_goe(int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double diag_sd = std::sqrt(2.0);
  RealMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    z(i, i) = diag_sd * nd(rng);
    for (int j = i + 1; j < n; ++j) z(i, j) = z(j, i) = nd(rng);
  }
  return z;
}

QuatMatrix sample_wishart_quat(int m, int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  QuatMatrix x(m, n);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) x(a, i) = quaternion_gaussian(nd, rng);
  // Upper triangle of X* X, mirrored so the result is exactly self-adjoint.
  QuatMatrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      RealQuat s;
      for (int a = 0; a < m; ++a) s += conj(x(a, i)) * x(a, j);
      w(i, j) = s;
    }
    w(i, i) = RealQuat(w(i, i).x0);
    for (int j = i + 1; j < n; ++j) w(j, i) = conj(w(i, j));
  }
  return w;
}

RealMatrix sample_wishart_real(int m, int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  RealMatrix x(m, n);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) x(a, i) = nd(rng);
  RealMatrix w = x.transpose() * x;
  w.triangularView<Eigen::StrictlyLower>() = w.transpose();
  return w;
}

namespace {

template <class Matrix, class TraceFn>
double trace_product(std::span<const Matrix> matrices, const DegreeSeq& degrees,
                     const ColorMap& colors, TraceFn&& trace_of) {
  double value = 1.0;
  std::size_t pos = 0;
  for (int j : degrees) {
    auto pick = [&](std::size_t p) -> const Matrix& {
      const int c = colors.empty() ? 1 : colors.at(p);
      if (c < 1 || static_cast<std::size_t>(c) > matrices.size())
        throw std::invalid_argument("color has no matrix");
      return matrices[static_cast<std::size_t>(c - 1)];
    };
    Matrix prod = pick(pos);
    for (int k = 1; k < j; ++k) {
      const Matrix& next = pick(pos + static_cast<std::size_t>(k));
      if (prod.cols() != next.rows() || next.rows() != next.cols())
        throw std::invalid_argument("trace block matrices must be square and equal-sized");
      prod = prod * next;
    }
    pos += static_cast<std::size_t>(j);
    value *= trace_of(prod);
  }
  return value;
}

}  // namespace

double mixed_trace_product(std::span<const QuatMatrix> matrices, const DegreeSeq& degrees,
                           const ColorMap& colors) {
  return trace_product(matrices, degrees, colors, [](const QuatMatrix& p) { return re(p.trace()); });
}

double mixed_trace_product(std::span<const RealMatrix> matrices, const DegreeSeq& degrees,
                           const ColorMap& colors) {
  return trace_product(matrices, degrees, colors, [](const RealMatrix& p) { return p.trace(); });
}

double sample_trace_product(const EnsembleSpec& spec, Rng& rng) {
  const int s = spec.matrix_count();
  if (is_quaternionic(spec.kind)) {
    std::vector<QuatMatrix> mats;
    mats.reserve(static_cast<std::size_t>(s));
    for (int c = 1; c <= s; ++c)
      mats.push_back(spec.kind == EnsembleKind::GSE ? sample_gse(spec.n, rng)
                                                    : sample_wishart_quat(spec.m_for_color(c), spec.n, rng));
    return mixed_trace_product(std::span<const QuatMatrix>(mats), spec.degrees, spec.colors);
  }
  std::vector<RealMatrix> mats;
  mats.reserve(static_cast<std::size_t>(s));
  for (int c = 1; c <= s; ++c)
    mats.push_back(spec.kind == EnsembleKind::GOE ? sample_goe(spec.n, rng)
                                                  : sample_wishart_real(spec.m_for_color(c), spec.n, rng));
  return mixed_trace_product(std::span<const RealMatrix>(mats), spec.degrees, spec.colors);
}

MCEstimate mc_moment(const EnsembleSpec& spec, std::size_t samples, std::uint64_t seed,
                     const MCOptions& options) {
  spec.validate();
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (static_cast<std::uint64_t>(spec.n) * samples > options.max_work)
    throw ResourceLimitError("N * samples exceeds the configured work bound");

  std::vector<double> values(samples);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(samples)));
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = sample_stream(seed, i);
      values[i] = sample_trace_product(spec, rng);
    }
  };
  if (workers == 1) {
    run(0, samples);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(samples, begin + chunk);
      if (begin < end) pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  // Accumulate in index order so the result does not depend on the split.
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(samples);
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(samples)), samples, seed};
}

nlohmann::json MCEstimate::to_json() const {
  return {{"mean", mean}, {"std_error", std_error}, {"count", count}, {"seed", seed}};
}

}  // namespace quatwick
