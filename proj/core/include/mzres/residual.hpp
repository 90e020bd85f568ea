#pragma once

#include <cstddef>
#include <vector>

#include "mzres/types.hpp"

namespace mzres {

/// Per-node residual 4-vectors plus cached per-equation L1 norms, the norm
/// being the arithmetic average of |Res_j(i)| over all nodes.
struct ResidualField {
    std::vector<Vec4> values;

    ResidualField() = default;
    explicit ResidualField(std::size_t n) : values(n, Vec4{0, 0, 0, 0}) {}

    std::size_t size() const { return values.size(); }
    Vec4& operator[](std::size_t j) { return values[j]; }
    const Vec4& operator[](std::size_t j) const { return values[j]; }

    const Vec4& norms() const {
        if (!norms_valid_) {
            norms_ = compute_norms();
            norms_valid_ = true;
        }
        return norms_;
    }
    void invalidate_norms() { norms_valid_ = false; }

  private:
    Vec4 compute_norms() const;
    mutable Vec4 norms_{0, 0, 0, 0};
    mutable bool norms_valid_ = false;
};

/// Per-equation L1 norms: norm(i) = (1/N) sum_j |Res_j(i)|.
Vec4 l1_norms(const ResidualField& res);

/// Source term of the semi-discrete system. Stored pre-integrated over the
/// dual volume (units of the residual rows) so that a source built from an
/// assembled residual cancels it bit-for-bit; the per-volume density view is
/// available through density().
struct SourceField {
    std::vector<Vec4> integrated;

    SourceField() = default;
    explicit SourceField(std::size_t n) : integrated(n, Vec4{0, 0, 0, 0}) {}

    static SourceField from_integrated(std::vector<Vec4> v);
    /// s_j given as density (residual units / volume); multiplied by V_j once.
    static SourceField from_density(const std::vector<Vec4>& s,
                                    const std::vector<double>& volumes);

    std::size_t size() const { return integrated.size(); }
    bool empty() const { return integrated.empty(); }
    Vec4 density(std::size_t j, double volume) const {
        return integrated[j] * (1.0 / volume);
    }
};

} // namespace mzres
