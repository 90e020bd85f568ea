#pragma once

#include <optional>
#include <vector>

#include "mzres/flux.hpp"
#include "mzres/gas.hpp"
#include "mzres/gradients.hpp"
#include "mzres/grid.hpp"
#include "mzres/residual.hpp"
#include "mzres/state.hpp"

namespace mzres {

struct AssemblyStats {
    int first_order_fallbacks = 0;
    int lsq_rank_warnings = 0;
};

/// Which boundary conditions the residual operator applies.
enum class BoundaryMode {
    CaseConditions,  // the grid's tagged conditions
    AllFreestream,   // every boundary face treated as freestream, no wall rows
};

/// The spatial residual operator
///
///   Res_j = sum_{faces of j} Phi(n) + S_j,
///
/// with S_j the dual-volume-integrated source. Interior faces carry the Roe
/// flux of reconstructed states minus the damped viscous flux of node states.
/// Boundary faces close the dual volume with a consistent flux of the
/// boundary-node state (walls) or a Roe flux against the exterior state
/// (freestream, back-pressure outflow), so any uniform state yields a
/// residual at roundoff level regardless of the tagged conditions.
///
/// Wall constraints are part of the operator: momentum rows are zeroed at
/// no-slip nodes and projected onto the wall tangent at slip nodes; the
/// corresponding velocity components are held by the solver, not by fluxes.
class Assembly {
  public:
    Assembly(const Grid& grid, GasModel gas, FreestreamConditions fs,
             NumericalFluxConfig cfg, bool viscous);

    ResidualField assemble(const PrimitiveState& w, const SourceField* src = nullptr,
                           BoundaryMode mode = BoundaryMode::CaseConditions) const;

    /// Van Albada factors are recomputed from the running state until frozen;
    /// freezing pins them so the residual becomes a smooth function of w near
    /// the converged solution.
    void freeze_limiter(const PrimitiveState& w);
    void unfreeze_limiter();
    bool limiter_frozen() const { return frozen_; }

    const AssemblyStats& last_stats() const { return stats_; }

    const Grid& grid() const { return *grid_; }
    const GasModel& gas() const { return gas_; }
    const FreestreamConditions& freestream() const { return fs_; }
    const NumericalFluxConfig& config() const { return cfg_; }
    bool viscous() const { return viscous_; }
    double viscosity(double t_face) const;

  private:
    struct EdgeFactors {
        std::array<double, 4> left;
        std::array<double, 4> right;
    };
    void limiter_factors(const PrimitiveState& w, const std::vector<Grad4>& grads,
                         std::vector<EdgeFactors>& out) const;

    const Grid* grid_;
    GasModel gas_;
    FreestreamConditions fs_;
    NumericalFluxConfig cfg_;
    bool viscous_;
    double mu_constant_ = 0.0;
    LsqGradients lsq_;
    Vec4 w_inf_;
    Vec4 limiter_ref_; // variable scales guarding the Van Albada denominator

    bool frozen_ = false;
    std::vector<EdgeFactors> frozen_factors_;

    mutable AssemblyStats stats_;
    mutable std::vector<Grad4> grads_scratch_;
    mutable std::vector<EdgeFactors> factors_scratch_;
};

} // namespace mzres
