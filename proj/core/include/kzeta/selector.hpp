#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kzeta {

/// Midpoint angle grid theta_j = (2j+1) pi / (2J), j = 0..J-1.
struct SelectorGrid {
  int J = 0;
  std::vector<double> thetas;
};

/// SS averages sin(k t)/sin t over the grid, CC averages cos(k t)/cos t.
enum class SelectorKind { SS, CC };

SelectorGrid make_grid(int J);

/// (1/J) sum_j trig(k theta_j) / trig(theta_j), compensated summation.
///
/// k may be any integer; it is reduced modulo 4J first, and every sine or
/// cosine is taken of an exactly reduced rational multiple of pi.
/// CC on odd J throws UnsupportedConfiguration (cos theta_j = 0 on the grid).
double selector_average(SelectorKind kind, int J, std::int64_t k);

/// Case-table value in {-1, 0, +1} the average is supposed to equal.
int expected_selector(SelectorKind kind, int J, std::int64_t k);

/// Sampled Dirichlet kernel 1 + 2 sum_{m=1}^{(k-1)/2} cos(2 m theta), k odd.
double dirichlet_kernel(std::int64_t k, double theta);

/// Dense row-major square matrix; just enough for Gram matrices.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Gram matrix of the DST-II basis on the midpoint grid.
/// Entry (m-1, n-1) holds sum_j sin((2j+1) pi m / 2J) sin((2j+1) pi n / 2J)
/// for harmonics m, n in 1..J. Diagonal is J/2 except at n = J, where it is J.
SquareMatrix dst2_gram(int J);

/// Selector average for odd k rebuilt from the exponential spectrum of
/// sin(k t)/sin t = sum_{|m| <= (k-1)/2} e^{2imt}: each line is averaged
/// over the grid in closed form ((-1)^{m/J} when J divides m, else 0)
/// and the surviving aliases are summed.
double poisson_reconstruction(int J, std::int64_t k);

}  // namespace kzeta
