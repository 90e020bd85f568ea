#include "mzres/assembly.hpp"

#include <cmath>

namespace mzres {

Assembly::Assembly(const Grid& grid, GasModel gas, FreestreamConditions fs,
                   NumericalFluxConfig cfg, bool viscous)
    : grid_(&grid), gas_(std::move(gas)), fs_(fs), cfg_(cfg), viscous_(viscous),
      lsq_(grid) {
    gas_.validate();
    fs_.validate();
    cfg_.validate();
    if (viscous_ && gas_.viscosity_law == ViscosityLaw::Constant &&
        gas_.mu_constant == 0.0) {
        gas_.mu_constant = fs_.viscosity_from_reynolds(gas_);
    }
    mu_constant_ = gas_.mu_constant;
    w_inf_ = fs_.primitive(gas_);
    const double a_inf = fs_.sound_speed(gas_);
    limiter_ref_ = {fs_.density(gas_) * a_inf * a_inf, a_inf, a_inf, fs_.t_inf};
    stats_.lsq_rank_warnings = lsq_.rank_warnings();
}

double Assembly::viscosity(double t_face) const {
    return gas_.viscosity_law == ViscosityLaw::Constant ? mu_constant_
                                                        : gas_.viscosity(t_face);
}

namespace {

// Van Albada factor for central difference a and upwind-biased difference b.
double van_albada(double a, double b, double eps2) {
    const double num = 2.0 * a * b + eps2;
    const double den = a * a + b * b + eps2;
    const double s = num / den;
    return s > 0.0 ? s : 0.0;
}

} // namespace

void Assembly::limiter_factors(const PrimitiveState& w, const std::vector<Grad4>& grads,
                               std::vector<EdgeFactors>& out) const {
    const Grid& g = *grid_;
    out.resize(g.edges.size());
    for (std::size_t eid = 0; eid < g.edges.size(); ++eid) {
        const Edge& e = g.edges[eid];
        const Vec2 d = g.xy[e.k] - g.xy[e.j];
        for (int c = 0; c < 4; ++c) {
            const double ref = limiter_ref_[c];
            const double eps2 = 1e-16 * ref * ref;
            const double a = w[e.k][c] - w[e.j][c];
            const double bl = 2.0 * grads[e.j][c].dot(d) - a;
            const double br = 2.0 * grads[e.k][c].dot(d) - a;
            out[eid].left[c] = van_albada(a, bl, eps2);
            out[eid].right[c] = van_albada(a, br, eps2);
        }
    }
}

void Assembly::freeze_limiter(const PrimitiveState& w) {
    if (cfg_.limiter == LimiterKind::None) return;
    lsq_.evaluate(*grid_, w, grads_scratch_);
    limiter_factors(w, grads_scratch_, frozen_factors_);
    frozen_ = true;
}

void Assembly::unfreeze_limiter() {
    frozen_ = false;
    frozen_factors_.clear();
}

ResidualField Assembly::assemble(const PrimitiveState& w, const SourceField* src,
                                 BoundaryMode mode) const {
    const Grid& g = *grid_;
    if (w.size() != g.n_nodes())
        throw PhysicsError("assemble: state size does not match grid");
    ResidualField res(g.n_nodes());
    stats_.first_order_fallbacks = 0;

    const bool need_grads = cfg_.reconstruction || viscous_;
    if (need_grads) lsq_.evaluate(g, w, grads_scratch_);
    const std::vector<Grad4>& grads = grads_scratch_;

    const bool limited = cfg_.limiter != LimiterKind::None && cfg_.reconstruction;
    const std::vector<EdgeFactors>* factors = nullptr;
    if (limited) {
        if (frozen_) {
            factors = &frozen_factors_;
        } else {
            limiter_factors(w, grads, factors_scratch_);
            factors = &factors_scratch_;
        }
    }

    for (std::size_t eid = 0; eid < g.edges.size(); ++eid) {
        const Edge& e = g.edges[eid];
        Vec4 wl = w[e.j];
        Vec4 wr = w[e.k];
        if (cfg_.reconstruction) {
            const Vec2 half = (g.xy[e.k] - g.xy[e.j]) * 0.5;
            Vec4 wl2 = wl, wr2 = wr;
            for (int c = 0; c < 4; ++c) {
                const double sl = limited ? (*factors)[eid].left[c] : 1.0;
                const double sr = limited ? (*factors)[eid].right[c] : 1.0;
                wl2[c] += sl * grads[e.j][c].dot(half);
                wr2[c] -= sr * grads[e.k][c].dot(half);
            }
            if (is_physical(wl2, fs_.p_inf) && is_physical(wr2, fs_.p_inf)) {
                wl = wl2;
                wr = wr2;
            } else {
                stats_.first_order_fallbacks += 1;
            }
        }
        Vec4 phi = roe_flux(wl, wr, gas_, fs_.p_inf, e.normal, cfg_.entropy_fix);
        if (viscous_) {
            const Vec2 ev = g.xy[e.k] - g.xy[e.j];
            const double tf = 0.5 * (w[e.j][3] + w[e.k][3]);
            phi -= viscous_flux(w[e.j], w[e.k], grads[e.j], grads[e.k], ev, e.normal,
                                gas_, viscosity(tf), cfg_.alpha_damping);
        }
        res[e.j] += phi;
        res[e.k] -= phi;
    }

    for (const BoundaryFace& f : g.bfaces) {
        const BoundaryKind kind =
            mode == BoundaryMode::AllFreestream ? BoundaryKind::Freestream : f.kind;
        Vec4 phi{0, 0, 0, 0};
        switch (kind) {
            case BoundaryKind::Freestream:
                phi = roe_flux(w[f.node], w_inf_, gas_, fs_.p_inf, f.normal,
                               cfg_.entropy_fix);
                break;
            case BoundaryKind::Outflow: {
                Vec4 out = w[f.node];
                out[0] = 0.0; // back pressure p_inf
                phi = roe_flux(w[f.node], out, gas_, fs_.p_inf, f.normal,
                               cfg_.entropy_fix);
                break;
            }
            case BoundaryKind::SlipWall:
            case BoundaryKind::NoSlipWall:
                // Consistent closure with the node state; the wall condition
                // itself lives in the constrained rows and pinned velocities.
                phi = euler_flux(w[f.node], gas_, fs_.p_inf, f.normal);
                break;
        }
        res[f.node] += phi;
    }

    if (mode == BoundaryMode::CaseConditions) {
        for (std::size_t j = 0; j < g.n_nodes(); ++j) {
            switch (g.constraint[j]) {
                case NodeConstraint::NoSlip:
                    res[j][1] = 0.0;
                    res[j][2] = 0.0;
                    break;
                case NodeConstraint::SlipTangency: {
                    const Vec2 nh = g.wall_normal[j];
                    const double rn = res[j][1] * nh.x + res[j][2] * nh.y;
                    res[j][1] -= rn * nh.x;
                    res[j][2] -= rn * nh.y;
                    break;
                }
                case NodeConstraint::None:
                    break;
            }
        }
    }

    // Last, in the constrained row space, so a source assembled from this
    // operator cancels it exactly.
    if (src != nullptr && !src->empty()) {
        for (std::size_t j = 0; j < res.size(); ++j) res[j] += src->integrated[j];
    }
    return res;
}

} // namespace mzres
