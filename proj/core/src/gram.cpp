#include "blades/gram.hpp"

#include <vector>

namespace blades {

GramResult gram(std::span<const Vector> vs, InnerKind kind) {
  if (vs.empty()) throw dimension_error("gram needs at least one vector");
  const std::size_t p = vs.size();
  std::vector<std::vector<Scalar>> rows(p);
  for (std::size_t i = 0; i < p; ++i) {
    rows[i].reserve(p);
    for (std::size_t j = 0; j < p; ++j) rows[i].push_back(inner_of_kind(vs[i], vs[j], kind));
  }
  Matrix g = Matrix::from_rows(rows);
  Scalar d = det(g);
  // Hermitian matrices have real determinants; discard the round-off
  // imaginary part so the Gramian carries the real tag.
  Scalar gramian = d.backend() == Backend::Float ? Scalar::real(d.re())
                                                 : Scalar::real(d.exact_value().re);
  return GramResult{std::move(g), std::move(gramian), kind};
}

}  // namespace blades
