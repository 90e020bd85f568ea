#include "mzres/residual.hpp"

#include <cmath>

namespace mzres {

Vec4 ResidualField::compute_norms() const {
    Vec4 acc{0, 0, 0, 0};
    for (const Vec4& r : values) {
        for (int i = 0; i < 4; ++i) acc[i] += std::abs(r[i]);
    }
    const double inv_n = values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size());
    for (int i = 0; i < 4; ++i) acc[i] *= inv_n;
    return acc;
}

Vec4 l1_norms(const ResidualField& res) { return res.norms(); }

SourceField SourceField::from_integrated(std::vector<Vec4> v) {
    SourceField s;
    s.integrated = std::move(v);
    return s;
}

SourceField SourceField::from_density(const std::vector<Vec4>& s,
                                      const std::vector<double>& volumes) {
    SourceField out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) out.integrated[j] = s[j] * volumes[j];
    return out;
}

} // namespace mzres
