#include "germsum/series.hpp"

namespace germsum {

template class Series<ExactScalar>;
template class Series<Complex>;

Series<Complex> to_float(const Series<ExactScalar>& f) {
  Series<Complex> out(f.dim(), f.trunc());
  for (const auto& [e, c] : f.terms()) out.add_term(e, to_complex(c));
  return out;
}

}  // namespace germsum
