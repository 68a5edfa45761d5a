#include "gdelta/kernels/linear_form.hpp"

namespace gdelta::kernels {

std::size_t filter_scalar(const LinearForm& form, CandidateBlock& block) {
  const std::size_t n = block.size();
  const std::size_t r = block.rank;
  std::size_t out = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < r; ++i) dot += form.coef[i] * block.coord[i][k];
    const std::int64_t mag = dot < 0 ? -dot : dot;
    if (mag > form.bound || (form.nonzero && dot == 0)) continue;
    if (out != k) {
      block.id[out] = block.id[k];
      for (std::size_t i = 0; i < r; ++i) block.coord[i][out] = block.coord[i][k];
    }
    ++out;
  }
  block.truncate(out);
  return out;
}

}  // namespace gdelta::kernels
